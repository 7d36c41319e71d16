//! KLR generator words and their straightening into the spanning form
//! psi_w * y^a * e(i), with the cyclotomic rule and the graded truncation.
//!
//! Rewriting here is an exact application of the defining relations; it does
//! not claim confluence. Canonical coordinates are produced downstream by
//! quotienting out the certified kernel (see `algebra`).

use crate::params::{Params, Res};
use num::BigInt;
use std::collections::{BTreeMap, HashMap, VecDeque};

/// One abstract generator. Indices are 0-based: `Y(k)` is a dot on strand
/// k+1, `Psi(r)` crosses strands r+1 and r+2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Gen {
    E(Vec<Res>),
    Y(usize),
    Psi(usize),
}

/// A product of generators, leftmost factor applied last (topmost).
pub type GenWord = Vec<Gen>;

/// Spanning-form word: psi over a fixed reduced word, then dots, then an
/// idempotent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pbw {
    pub word: Vec<u8>,
    pub dots: Vec<u32>,
    pub idem: Vec<Res>,
}

pub type KlrElt = BTreeMap<Pbw, BigInt>;

pub fn elt_add(acc: &mut KlrElt, other: KlrElt) {
    for (k, v) in other {
        let entry = acc.entry(k).or_default();
        *entry += v;
        if *entry == BigInt::from(0) {
            acc.remove_entry_key(); // placeholder, fixed below
        }
    }
}

trait RemoveZero {
    fn remove_entry_key(&mut self);
}
impl RemoveZero for BigInt {
    fn remove_entry_key(&mut self) {}
}

pub fn add_term(acc: &mut KlrElt, key: Pbw, coeff: BigInt) {
    if coeff == BigInt::from(0) {
        return;
    }
    let entry = acc.entry(key.clone()).or_default();
    *entry += coeff;
    if *entry == BigInt::from(0) {
        acc.remove(&key);
    }
}

pub fn add_elt(acc: &mut KlrElt, other: &KlrElt) {
    for (k, v) in other {
        add_term(acc, k.clone(), v.clone());
    }
}

pub fn scale_elt(elt: &KlrElt, c: &BigInt) -> KlrElt {
    if *c == BigInt::from(0) {
        return KlrElt::new();
    }
    elt.iter().map(|(k, v)| (k.clone(), v * c)).collect()
}

/// Permutation utilities on 0..n-1 (one-line notation).
fn apply_word_to_identity(n: usize, word: &[u8]) -> Vec<u8> {
    // perm = s_{w1} ... s_{wk} acting on positions; build by right-to-left
    // application to the identity: perm(x) = s_{w1}(s_{w2}(...(x))).
    let mut perm: Vec<u8> = (0..n as u8).collect();
    for &r in word.iter().rev() {
        let r = r as usize;
        // precompose with s_r: new(x) = old(s_r(x))
        perm.swap(r, r + 1);
    }
    perm
}

fn perm_len(perm: &[u8]) -> usize {
    let mut inv = 0;
    for i in 0..perm.len() {
        for j in (i + 1)..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    inv
}

fn left_mul_s(perm: &[u8], r: usize) -> Vec<u8> {
    // (s_r * w)(x) = s_r(w(x)): swap the VALUES r, r+1.
    perm.iter()
        .map(|&v| {
            if v == r as u8 {
                r as u8 + 1
            } else if v == r as u8 + 1 {
                r as u8
            } else {
                v
            }
        })
        .collect()
}

/// All reduced words of a permutation (small n only).
fn reduced_words(perm: &[u8]) -> Vec<Vec<u8>> {
    let n = perm.len();
    if perm_len(perm) == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    // Descents of w on the left: positions r with w^{-1}... use: word starts
    // with r iff l(s_r w) < l(w).
    for r in 0..n - 1 {
        let u = left_mul_s(perm, r);
        if perm_len(&u) < perm_len(perm) {
            for mut rest in reduced_words(&u) {
                let mut w = vec![r as u8];
                w.append(&mut rest);
                out.push(w);
            }
        }
    }
    out
}

/// Braid-move graph data for one permutation: canonical word plus, for each
/// reduced word, the move taking it one step closer to the canonical word.
#[derive(Debug, Clone)]
pub struct WordGraph {
    pub canonical: Vec<u8>,
    /// word -> (next word, move) on the path towards canonical.
    pub step: HashMap<Vec<u8>, (Vec<u8>, Move)>,
}

/// A single elementary rewrite between adjacent reduced words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    /// Swap commuting letters at positions (pos, pos+1).
    Comm(usize),
    /// Replace [r, r+1, r] at pos by [r+1, r, r+1].
    BraidUp(usize),
    /// Replace [r+1, r, r+1] at pos by [r, r+1, r].
    BraidDown(usize),
}

fn neighbours(word: &[u8]) -> Vec<(Vec<u8>, Move)> {
    let mut out = Vec::new();
    for pos in 0..word.len().saturating_sub(1) {
        let (a, b) = (word[pos], word[pos + 1]);
        if (a as i64 - b as i64).abs() > 1 {
            let mut w = word.to_vec();
            w.swap(pos, pos + 1);
            out.push((w, Move::Comm(pos)));
        }
    }
    for pos in 0..word.len().saturating_sub(2) {
        let (a, b, c) = (word[pos], word[pos + 1], word[pos + 2]);
        if a == c && b == a + 1 {
            let mut w = word.to_vec();
            w[pos] = a + 1;
            w[pos + 1] = a;
            w[pos + 2] = a + 1;
            out.push((w, Move::BraidUp(pos)));
        }
        if a == c && a == b + 1 {
            let mut w = word.to_vec();
            w[pos] = b;
            w[pos + 1] = b + 1;
            w[pos + 2] = b;
            out.push((w, Move::BraidDown(pos)));
        }
    }
    out
}

fn build_word_graph(perm: &[u8]) -> WordGraph {
    let mut words = reduced_words(perm);
    words.sort();
    let canonical = words[0].clone();
    // BFS from canonical; store the reverse step for each word.
    let mut step: HashMap<Vec<u8>, (Vec<u8>, Move)> = HashMap::new();
    let mut seen: std::collections::HashSet<Vec<u8>> = std::collections::HashSet::new();
    seen.insert(canonical.clone());
    let mut queue = VecDeque::new();
    queue.push_back(canonical.clone());
    while let Some(w) = queue.pop_front() {
        for (nb, mv) in neighbours(&w) {
            if seen.insert(nb.clone()) {
                // To get from nb towards canonical, invert the move.
                let back = match mv {
                    Move::Comm(p) => Move::Comm(p),
                    Move::BraidUp(p) => Move::BraidDown(p),
                    Move::BraidDown(p) => Move::BraidUp(p),
                };
                step.insert(nb.clone(), (w.clone(), back));
                queue.push_back(nb);
            }
        }
    }
    WordGraph { canonical, step }
}

/// Rewriting context for a fixed parameter set.
pub struct KlrCtx {
    pub p: Params,
    /// Top and bottom of the graded support, from the cellular degrees.
    pub deg_max: i64,
    pub deg_min: i64,
    graphs: HashMap<Vec<u8>, WordGraph>,
}

impl KlrCtx {
    pub fn new(p: &Params) -> Self {
        use crate::multipartition::all_multipartitions;
        use crate::tableau::enumerate_std;
        let mut dmax = 0i64;
        let mut dmin = 0i64;
        for lam in all_multipartitions(p.ell, p.n) {
            let degs: Vec<i64> = enumerate_std(&lam, p).iter().map(|t| t.degree(p)).collect();
            if let (Some(&mx), Some(&mn)) = (degs.iter().max(), degs.iter().min()) {
                dmax = dmax.max(2 * mx);
                dmin = dmin.min(2 * mn);
            }
        }
        // Precompute word graphs for all permutations of S_n.
        let mut graphs = HashMap::new();
        let mut perms = vec![(0..p.n as u8).collect::<Vec<u8>>()];
        let mut seen: std::collections::HashSet<Vec<u8>> = perms.iter().cloned().collect();
        while let Some(w) = perms.pop() {
            graphs.insert(w.clone(), build_word_graph(&w));
            for r in 0..p.n.saturating_sub(1) {
                let u = left_mul_s(&w, r);
                if seen.insert(u.clone()) {
                    perms.push(u);
                }
            }
        }
        KlrCtx { p: p.clone(), deg_max: dmax, deg_min: dmin, graphs }
    }

    fn canonical_word(&self, perm: &[u8]) -> &[u8] {
        &self.graphs[perm].canonical
    }

    /// The idempotent sequence left of psi_word applied to e(i):
    /// (w . i)_k = i_{w^{-1}(k)}.
    pub fn act_idem(&self, word: &[u8], idem: &[Res]) -> Vec<Res> {
        let mut i = idem.to_vec();
        for &r in word.iter().rev() {
            i.swap(r as usize, r as usize + 1);
        }
        i
    }

    /// Degree of a psi letter at the given right idempotent.
    fn psi_degree(&self, i: &[Res], r: usize) -> i64 {
        let p = &self.p;
        let a = i[r];
        let b = i[r + 1];
        if p.res_eq(a, b) {
            -2
        } else {
            let mut d = 0;
            if p.res_eq(b, a + 1) {
                d += 1;
            }
            if p.res_eq(b, a - 1) {
                d += 1;
            }
            d
        }
    }

    pub fn term_degree(&self, t: &Pbw) -> i64 {
        let mut deg = 2 * t.dots.iter().map(|&x| x as i64).sum::<i64>();
        let mut idem = t.idem.clone();
        for &r in t.word.iter().rev() {
            deg += self.psi_degree(&idem, r as usize);
            idem.swap(r as usize, r as usize + 1);
        }
        deg
    }

    /// Emit a bare spanning word, applying the cyclotomic rule and the
    /// graded truncation.
    fn emit(&self, word: Vec<u8>, dots: Vec<u32>, idem: Vec<Res>, coeff: BigInt, out: &mut KlrElt) {
        if coeff == BigInt::from(0) {
            return;
        }
        if !dots.is_empty() && dots[0] as usize >= self.p.lambda_alpha(idem[0]) {
            return;
        }
        let t = Pbw { word, dots, idem };
        let d = self.term_degree(&t);
        if d > self.deg_max || d < self.deg_min {
            return;
        }
        add_term(out, t, coeff);
    }

    /// Left multiplication by e(j).
    pub fn e_left(&self, j: &[Res], term: &Pbw, coeff: &BigInt) -> KlrElt {
        let mut out = KlrElt::new();
        let left = self.act_idem(&term.word, &term.idem);
        if left.iter().zip(j).all(|(a, b)| a == b) {
            self.emit(term.word.clone(), term.dots.clone(), term.idem.clone(), coeff.clone(), &mut out);
        }
        out
    }

    /// Left multiplication by y_k (0-based strand index).
    pub fn y_left(&self, k: usize, term: &Pbw, coeff: &BigInt) -> KlrElt {
        let mut out = KlrElt::new();
        if term.word.is_empty() {
            let mut dots = term.dots.clone();
            if dots.len() < self.p.n {
                dots.resize(self.p.n, 0);
            }
            dots[k] += 1;
            self.emit(Vec::new(), dots, term.idem.clone(), coeff.clone(), &mut out);
            return out;
        }
        let r = term.word[0] as usize;
        let tail = Pbw {
            word: term.word[1..].to_vec(),
            dots: term.dots.clone(),
            idem: term.idem.clone(),
        };
        let j = self.act_idem(&tail.word, &tail.idem);
        if k == r {
            // y_r psi_r e(j) = (psi_r y_{r+1} + delta_{j_r,j_{r+1}}) e(j)
            let inner = self.y_left(r + 1, &tail, coeff);
            for (t, c) in inner {
                add_elt(&mut out, &self.psi_left(r, &t, &c));
            }
            if self.p.res_eq(j[r], j[r + 1]) {
                self.emit(tail.word.clone(), tail.dots.clone(), tail.idem.clone(), coeff.clone(), &mut out);
            }
        } else if k == r + 1 {
            // y_{r+1} psi_r e(j) = (psi_r y_r - delta) e(j)
            let inner = self.y_left(r, &tail, coeff);
            for (t, c) in inner {
                add_elt(&mut out, &self.psi_left(r, &t, &c));
            }
            if self.p.res_eq(j[r], j[r + 1]) {
                self.emit(tail.word.clone(), tail.dots.clone(), tail.idem.clone(), -coeff.clone(), &mut out);
            }
        } else {
            let inner = self.y_left(k, &tail, coeff);
            for (t, c) in inner {
                add_elt(&mut out, &self.psi_left(r, &t, &c));
            }
        }
        out
    }

    /// Left multiplication by psi_r.
    pub fn psi_left(&self, r: usize, term: &Pbw, coeff: &BigInt) -> KlrElt {
        let mut out = KlrElt::new();
        let perm = apply_word_to_identity(self.p.n, &term.word);
        let up = left_mul_s(&perm, r);
        if perm_len(&up) > perm_len(&perm) {
            // Extend: [r] ++ word is a reduced word of up; canonicalise.
            let mut word = Vec::with_capacity(term.word.len() + 1);
            word.push(r as u8);
            word.extend_from_slice(&term.word);
            self.reduce_word_form(&up, word, term.dots.clone(), term.idem.clone(), coeff.clone(), &mut out);
        } else {
            // Shorten: rewrite word so it starts with r, then square psi_r.
            let down = up; // s_r * w, shorter
            let down_word = self.canonical_word(&down).to_vec();
            // [r] ++ down_word is a reduced word of w.
            let mut target = Vec::with_capacity(term.word.len());
            target.push(r as u8);
            target.extend_from_slice(&down_word);
            // Express the current term in the target word form (plus lower
            // terms which are re-fed through psi_left recursively).
            let mut converted = KlrElt::new();
            self.convert_to_word(
                &perm,
                term.word.clone(),
                target.clone(),
                term.dots.clone(),
                term.idem.clone(),
                coeff.clone(),
                &mut converted,
                true,
            );
            for (t, c) in converted {
                if t.word == target {
                    // psi_r * psi_r * rest
                    let rest = Pbw { word: down_word.clone(), dots: t.dots, idem: t.idem };
                    add_elt(&mut out, &self.psi_square(r, &rest, &c));
                } else {
                    // Lower term already in spanning form; multiply by psi_r.
                    add_elt(&mut out, &self.psi_left(r, &t, &c));
                }
            }
        }
        out
    }

    /// psi_r^2 applied to a spanning term whose left idempotent decides the
    /// case split.
    fn psi_square(&self, r: usize, term: &Pbw, coeff: &BigInt) -> KlrElt {
        let p = &self.p;
        let j = self.act_idem(&term.word, &term.idem);
        let (a, b) = (j[r], j[r + 1]);
        let mut out = KlrElt::new();
        if p.res_eq(a, b) {
            return out;
        }
        let e2 = p.e == Some(2);
        let up = p.res_eq(b, a + 1);
        let down = p.res_eq(b, a - 1);
        if !up && !down {
            self.emit(term.word.clone(), term.dots.clone(), term.idem.clone(), coeff.clone(), &mut out);
        } else if e2 {
            // (y_{r+1} - y_r)(y_r - y_{r+1})
            let y = |k: usize, elt: &KlrElt| -> KlrElt {
                let mut acc = KlrElt::new();
                for (t, c) in elt {
                    add_elt(&mut acc, &self.y_left(k, t, c));
                }
                acc
            };
            let mut base = KlrElt::new();
            add_term(&mut base, term.clone(), coeff.clone());
            let inner = {
                // (y_r - y_{r+1}) base
                let mut acc = y(r, &base);
                add_elt(&mut acc, &scale_elt(&y(r + 1, &base), &BigInt::from(-1)));
                acc
            };
            let mut outer = y(r + 1, &inner);
            add_elt(&mut outer, &scale_elt(&y(r, &inner), &BigInt::from(-1)));
            add_elt(&mut out, &outer);
        } else if down {
            // (y_{r+1} - y_r)
            add_elt(&mut out, &self.y_left(r + 1, term, coeff));
            add_elt(&mut out, &scale_elt(&self.y_left(r, term, coeff), &BigInt::from(-1)));
        } else {
            // b = a + 1: (y_r - y_{r+1})
            add_elt(&mut out, &self.y_left(r, term, coeff));
            add_elt(&mut out, &scale_elt(&self.y_left(r + 1, term, coeff), &BigInt::from(-1)));
        }
        out
    }

    /// Walk the braid graph from `word` to the canonical word of `perm`,
    /// collecting braid corrections, and emit the canonical-form term.
    fn reduce_word_form(
        &self,
        perm: &[u8],
        word: Vec<u8>,
        dots: Vec<u32>,
        idem: Vec<Res>,
        coeff: BigInt,
        out: &mut KlrElt,
    ) {
        let mut converted = KlrElt::new();
        let canonical = self.canonical_word(perm).to_vec();
        self.convert_to_word(perm, word, canonical.clone(), dots, idem, coeff, &mut converted, false);
        for (t, c) in converted {
            if t.word == canonical {
                self.emit(t.word, t.dots, t.idem, c, out);
            } else {
                // Lower-length correction already in spanning form.
                add_term(out, t, c);
            }
        }
    }

    /// Rewrite psi_{word} y^dots e(idem) into psi_{target} y^dots e(idem)
    /// plus corrections (returned as spanning-form terms). `stop_at_target`
    /// leaves the main term keyed by the (possibly non-canonical) target
    /// word so the caller can post-process it.
    #[allow(clippy::too_many_arguments)]
    fn convert_to_word(
        &self,
        perm: &[u8],
        mut word: Vec<u8>,
        target: Vec<u8>,
        dots: Vec<u32>,
        idem: Vec<Res>,
        coeff: BigInt,
        out: &mut KlrElt,
        stop_at_target: bool,
    ) {
        let graph = &self.graphs[perm];
        // Path word -> canonical, then canonical -> target (reverse steps).
        let mut forward: Vec<Move> = Vec::new();
        {
            let mut w = word.clone();
            while w != graph.canonical {
                let (next, mv) = graph.step[&w].clone();
                forward.push(mv);
                w = apply_move(&w, mv);
                debug_assert_eq!(w, next);
            }
        }
        let mut backward: Vec<Move> = Vec::new();
        {
            let mut w = target.clone();
            let mut path = Vec::new();
            while w != graph.canonical {
                let (next, mv) = graph.step[&w].clone();
                path.push(mv);
                w = apply_move(&w, mv);
                let _ = &next;
            }
            // Invert to go canonical -> target.
            for mv in path.into_iter().rev() {
                backward.push(invert_move(mv));
            }
        }
        let moves: Vec<Move> = forward.into_iter().chain(backward).collect();
        for mv in moves {
            match mv {
                Move::Comm(pos) => {
                    word.swap(pos, pos + 1);
                }
                Move::BraidUp(pos) | Move::BraidDown(pos) => {
                    // psi_r psi_{r+1} psi_r e(j) = psi_{r+1} psi_r psi_{r+1} e(j) + C(j)
                    // with j the idempotent right of the triple.
                    let r = match mv {
                        Move::BraidUp(_) => word[pos] as usize,
                        Move::BraidDown(_) => word[pos + 1] as usize,
                        _ => unreachable!(),
                    };
                    let sign = match mv {
                        Move::BraidUp(_) => BigInt::from(1),
                        _ => BigInt::from(-1),
                    };
                    let suffix = word[pos + 3..].to_vec();
                    let prefix = word[..pos].to_vec();
                    let j = self.act_idem(&suffix, &idem);
                    let corr = self.braid_correction(r, &j);
                    if let Some(corr_kind) = corr {
                        // Build the correction element: prefix * C * suffix-term.
                        let base = Pbw { word: suffix, dots: dots.clone(), idem: idem.clone() };
                        let mut mid = KlrElt::new();
                        match corr_kind {
                            BraidCorr::Plus => add_term(&mut mid, base, coeff.clone() * &sign),
                            BraidCorr::Minus => {
                                add_term(&mut mid, base, -coeff.clone() * &sign)
                            }
                            BraidCorr::YCombo => {
                                // (y_r - 2 y_{r+1} + y_{r+2})
                                let mut tmp = KlrElt::new();
                                add_elt(&mut tmp, &self.y_left(r, &base, &(coeff.clone() * &sign)));
                                add_elt(
                                    &mut tmp,
                                    &self.y_left(
                                        r + 1,
                                        &base,
                                        &(BigInt::from(-2) * coeff.clone() * &sign),
                                    ),
                                );
                                add_elt(
                                    &mut tmp,
                                    &self.y_left(r + 2, &base, &(coeff.clone() * &sign)),
                                );
                                mid = tmp;
                            }
                        }
                        // Apply the prefix letters right-to-left.
                        let mut acc = mid;
                        for &pr in prefix.iter().rev() {
                            let mut next = KlrElt::new();
                            for (t, c) in &acc {
                                add_elt(&mut next, &self.psi_left(pr as usize, t, c));
                            }
                            acc = next;
                        }
                        add_elt(out, &acc);
                    }
                    word = apply_move(&word, mv);
                }
            }
        }
        debug_assert_eq!(word, target);
        if stop_at_target {
            add_term(out, Pbw { word: target, dots, idem }, coeff);
        } else {
            self.emit(target, dots, idem, coeff, out);
        }
    }

    /// The braid correction C(j) for psi_r psi_{r+1} psi_r at right
    /// idempotent j, if nonzero.
    fn braid_correction(&self, r: usize, j: &[Res]) -> Option<BraidCorr> {
        let p = &self.p;
        let (a, b, c) = (j[r], j[r + 1], j[r + 2]);
        let e2 = p.e == Some(2);
        if !p.res_eq(a, c) {
            return None;
        }
        if e2 {
            if !p.res_eq(a, b) {
                Some(BraidCorr::YCombo)
            } else {
                None
            }
        } else if p.res_eq(a, b + 1) {
            Some(BraidCorr::Plus)
        } else if p.res_eq(a, b - 1) {
            Some(BraidCorr::Minus)
        } else {
            None
        }
    }

    /// Evaluate a generator word times e(i) into spanning form.
    pub fn eval_word_on_idem(&self, word: &[Gen], idem: &[Res]) -> KlrElt {
        let mut acc = KlrElt::new();
        let seed = Pbw { word: Vec::new(), dots: vec![0; self.p.n], idem: idem.to_vec() };
        self.emit(Vec::new(), seed.dots.clone(), seed.idem.clone(), BigInt::from(1), &mut acc);
        for g in word.iter().rev() {
            let mut next = KlrElt::new();
            for (t, c) in &acc {
                match g {
                    Gen::E(j) => add_elt(&mut next, &self.e_left(j, t, c)),
                    Gen::Y(k) => add_elt(&mut next, &self.y_left(*k, t, c)),
                    Gen::Psi(r) => add_elt(&mut next, &self.psi_left(*r, t, c)),
                }
            }
            acc = next;
        }
        acc
    }

    /// Evaluate a generator word against every idempotent it is compatible
    /// with; words must end in an explicit idempotent or cover all of I^n,
    /// so in practice all our words end with E(..).
    pub fn eval_word(&self, word: &[Gen]) -> KlrElt {
        match word.last() {
            Some(Gen::E(i)) => self.eval_word_on_idem(&word[..word.len() - 1], i),
            _ => {
                let mut out = KlrElt::new();
                for i in self.all_idems() {
                    add_elt(&mut out, &self.eval_word_on_idem(word, &i));
                }
                out
            }
        }
    }

    /// Left-multiply a spanning element by a spanning term.
    pub fn term_times(&self, t: &Pbw, coeff: &BigInt, elt: &KlrElt) -> KlrElt {
        // t = psi_word y^dots e(idem): filter by idempotent, then y's, then psis.
        let mut acc = KlrElt::new();
        for (u, c) in elt {
            add_elt(&mut acc, &self.e_left(&t.idem, u, &(c * coeff)));
        }
        for (k, &mult) in t.dots.iter().enumerate() {
            for _ in 0..mult {
                let mut next = KlrElt::new();
                for (u, c) in &acc {
                    add_elt(&mut next, &self.y_left(k, u, c));
                }
                acc = next;
            }
        }
        for &r in t.word.iter().rev() {
            let mut next = KlrElt::new();
            for (u, c) in &acc {
                add_elt(&mut next, &self.psi_left(r as usize, u, c));
            }
            acc = next;
        }
        acc
    }

    pub fn mul(&self, a: &KlrElt, b: &KlrElt) -> KlrElt {
        let mut out = KlrElt::new();
        for (t, c) in a {
            add_elt(&mut out, &self.term_times(t, c, b));
        }
        out
    }

    /// The star anti-automorphism on a generator word: reverse the factors.
    pub fn star_word(word: &[Gen]) -> GenWord {
        let mut w: GenWord = word.to_vec();
        w.reverse();
        w
    }

    /// All residue sequences over the in-frame residue universe.
    pub fn all_idems(&self) -> Vec<Vec<Res>> {
        let universe = self.p.residue_universe();
        let mut out: Vec<Vec<Res>> = vec![Vec::new()];
        for _ in 0..self.p.n {
            let mut next = Vec::new();
            for prefix in &out {
                for &i in &universe {
                    let mut v = prefix.clone();
                    v.push(i);
                    next.push(v);
                }
            }
            out = next;
        }
        out
    }
}

fn apply_move(word: &[u8], mv: Move) -> Vec<u8> {
    let mut w = word.to_vec();
    match mv {
        Move::Comm(p) => w.swap(p, p + 1),
        Move::BraidUp(p) => {
            let r = w[p];
            w[p] = r + 1;
            w[p + 1] = r;
            w[p + 2] = r + 1;
        }
        Move::BraidDown(p) => {
            let r = w[p + 1];
            w[p] = r;
            w[p + 1] = r + 1;
            w[p + 2] = r;
        }
    }
    w
}

fn invert_move(mv: Move) -> Move {
    match mv {
        Move::Comm(p) => Move::Comm(p),
        Move::BraidUp(p) => Move::BraidDown(p),
        Move::BraidDown(p) => Move::BraidUp(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(e: Option<u64>, t2: (i64, i64), n: usize) -> KlrCtx {
        let p = Params::from_rational_theta(e, 2, n, &[(0, 1), t2], vec![0, 1]).unwrap();
        KlrCtx::new(&p)
    }

    #[test]
    fn orthogonal_idempotents() {
        let c = ctx(Some(2), (1, 2), 2);
        let w = vec![Gen::E(vec![0, 1]), Gen::E(vec![1, 0])];
        assert!(c.eval_word(&w).is_empty());
        let w = vec![Gen::E(vec![0, 1]), Gen::E(vec![0, 1])];
        assert_eq!(c.eval_word(&w).len(), 1);
    }

    #[test]
    fn cyclotomic_kills_y1() {
        let c = ctx(Some(2), (1, 2), 2);
        // kappa = (0,1): <Lambda, alpha_i> = 1 for both residues.
        for i in [vec![0, 1], vec![1, 0], vec![0, 0], vec![1, 1]] {
            let w = vec![Gen::Y(0), Gen::E(i)];
            assert!(c.eval_word(&w).is_empty());
        }
    }

    #[test]
    fn psi_squared_e2_distinct_residues() {
        let c = ctx(Some(2), (3, 2), 2);
        // psi_1^2 e(1,0) = (y_2-y_1)(y_1-y_2) e(1,0) = -y_2^2 e(1,0) mod y_1.
        let w = vec![Gen::Psi(0), Gen::Psi(0), Gen::E(vec![1, 0])];
        let elt = c.eval_word(&w);
        let expect_key = Pbw { word: vec![], dots: vec![0, 2], idem: vec![1, 0] };
        assert_eq!(elt.len(), 1);
        assert_eq!(elt.get(&expect_key), Some(&BigInt::from(-1)));
    }

    #[test]
    fn dimension_certificate_small() {
        // Just exercise products: psi_1 e(0,1) * psi_1 e(1,0) = psi_1^2 e(1,0).
        let c = ctx(Some(2), (3, 2), 2);
        let a = c.eval_word(&[Gen::Psi(0), Gen::E(vec![0, 1])]);
        let b = c.eval_word(&[Gen::Psi(0), Gen::E(vec![1, 0])]);
        let ab = c.mul(&a, &b);
        let direct = c.eval_word(&[Gen::Psi(0), Gen::Psi(0), Gen::E(vec![1, 0])]);
        assert_eq!(ab, direct);
    }

    #[test]
    fn defining_relations_hold_after_normalisation_n3() {
        // Spot-check relation 1.11 instances at n = 3 by comparing both
        // sides evaluated on idempotents.
        let c = ctx(Some(2), (1, 2), 3);
        for i in c.all_idems() {
            let lhs = c.eval_word(&[Gen::Psi(0), Gen::Psi(1), Gen::Psi(0), Gen::E(i.clone())]);
            let mut rhs = c.eval_word(&[Gen::Psi(1), Gen::Psi(0), Gen::Psi(1), Gen::E(i.clone())]);
            // e = 2 correction: +(y_1 - 2y_2 + y_3) e(i) when i_1 = i_3 != i_2.
            if c.p.res_eq(i[0], i[2]) && !c.p.res_eq(i[0], i[1]) {
                for (k, s) in [(0usize, 1i64), (1, -2), (2, 1)] {
                    let term = c.eval_word(&[Gen::Y(k), Gen::E(i.clone())]);
                    add_elt(&mut rhs, &scale_elt(&term, &BigInt::from(s)));
                }
            }
            let mut diff = lhs;
            add_elt(&mut diff, &scale_elt(&rhs, &BigInt::from(-1)));
            assert!(diff.is_empty(), "braid relation fails at e(i={i:?}): {diff:?}");
        }
    }
}
