//! Deciding `X ∈ (x^k)^G` and `X ∈ (x^k)^G (y^l)^G` for atoms `x, y`.
//!
//! Both structures first compare exponent sums, slide to a circuit and, for
//! a positive circuit element, test conjugacy to every `x1^k y1^l`.
//! Otherwise the summit length must match `-2·inf_s + k + l` (minus 2 in the
//! standard structure) and the search looks for a normal form
//!
//! ```text
//! Δ^{-n} · A_n ⋯ A_1 · x1^k · B_1 ⋯ B_n · y1^l        (dual)
//! Δ^{-n} · A_n ⋯ A_1 · x1^{k-1} · x1B_1 · B_2 ⋯ B_{n-1} · B_n y1 · y1^{l-1}   (standard)
//! ```
//!
//! with `A_i Δ^{i-1} B_i = Δ^i`. In the dual structure one cycling orbit of
//! the circuit element suffices; in the standard structure the whole set of
//! sliding circuits is searched.

use std::fmt;

use crate::conjugacy::{
    circuits_from, cycling, initial_factor, slide_to_circuit, SearchLimits,
};
use crate::error::{BraidError, Result};
use crate::normal_form::NormalForm;
use crate::perm::Perm;
use crate::structure::{GarsideStructure, StructureKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RecognitionQuery {
    pub x: usize,
    pub k: usize,
    pub y: Option<usize>,
    pub l: Option<usize>,
}

impl RecognitionQuery {
    /// Query for `(x^k)^G`.
    pub fn single(x: usize, k: usize) -> Result<Self> {
        let q = RecognitionQuery { x, k, y: None, l: None };
        q.check()?;
        Ok(q)
    }

    /// Query for `(x^k)^G (y^l)^G`.
    pub fn pair(x: usize, k: usize, y: usize, l: usize) -> Result<Self> {
        let q = RecognitionQuery { x, k, y: Some(y), l: Some(l) };
        q.check()?;
        Ok(q)
    }

    fn check(&self) -> Result<()> {
        if self.k == 0 {
            return Err(BraidError::Precondition("k must be at least 1".into()));
        }
        if self.y.is_some() != self.l.is_some() {
            return Err(BraidError::Precondition("y and l must be given together".into()));
        }
        if self.l == Some(0) {
            return Err(BraidError::Precondition("l must be at least 1".into()));
        }
        Ok(())
    }

    fn check_atoms(&self, g: &dyn GarsideStructure) -> Result<()> {
        self.check()?;
        let m = g.atom_count();
        if self.x >= m || self.y.is_some_and(|y| y >= m) {
            return Err(BraidError::Precondition(format!("atom index out of range (0..{m})")));
        }
        Ok(())
    }

    pub fn target_length(&self) -> i64 {
        (self.k + self.l.unwrap_or(0)) as i64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecidedBy {
    /// Exponent sum differs from `k + l`.
    AlgebraicLength,
    /// Summit length incompatible with the target form.
    LengthFilter,
    /// Positive circuit element compared with every `x1^k y1^l`.
    PositiveConjugacy,
    /// An element in the target form was found.
    FormMatch,
    /// The search space was exhausted without a match.
    Exhausted,
}

impl fmt::Display for DecidedBy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DecidedBy::AlgebraicLength => "algebraic-length",
            DecidedBy::LengthFilter => "length-filter",
            DecidedBy::PositiveConjugacy => "positive-conjugacy",
            DecidedBy::FormMatch => "form-match",
            DecidedBy::Exhausted => "exhausted",
        };
        f.write_str(s)
    }
}

/// `element = P^{-1} x1^k P · y1^l` with `P = B_1 ⋯ B_n`, and
/// `X^conjugator = element` for the query braid `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub n: usize,
    pub x1: usize,
    pub y1: Option<usize>,
    /// `A_1, …, A_n`.
    pub a: Vec<Perm>,
    /// `B_1, …, B_n`.
    pub b: Vec<Perm>,
    pub element: NormalForm,
    pub conjugator: NormalForm,
    /// Index of the matching element in the orbit or circuit set searched.
    pub position: usize,
}

impl Witness {
    /// Recomputes `P^{-1} x1^k P y1^l` from the factors.
    pub fn product(&self, g: &dyn GarsideStructure, k: usize, l: usize) -> NormalForm {
        let p = NormalForm::from_simples(g, &self.b);
        let xk = NormalForm::atom_power(g, self.x1, k);
        let mut z = p.inverse(g).multiply(g, &xk).multiply(g, &p);
        if let Some(y1) = self.y1 {
            z = z.multiply(g, &NormalForm::atom_power(g, y1, l));
        }
        z
    }

    /// Checks the witness against the query braid `x`.
    pub fn verify(&self, g: &dyn GarsideStructure, x: &NormalForm, q: &RecognitionQuery) -> bool {
        let l = q.l.unwrap_or(0);
        self.product(g, q.k, l) == self.element && x.conjugate(g, &self.conjugator) == self.element
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecognitionResult {
    pub verdict: bool,
    pub decided_by: DecidedBy,
    pub witness: Option<Witness>,
    pub inf_s: Option<i64>,
    pub sup_s: Option<i64>,
    pub ell_s: Option<usize>,
    pub sc_size: Option<usize>,
    pub orbit_size: Option<usize>,
}

impl RecognitionResult {
    fn new(verdict: bool, decided_by: DecidedBy) -> Self {
        RecognitionResult {
            verdict,
            decided_by,
            witness: None,
            inf_s: None,
            sup_s: None,
            ell_s: None,
            sc_size: None,
            orbit_size: None,
        }
    }

    fn summit(mut self, xt: &NormalForm) -> Self {
        self.inf_s = Some(xt.inf);
        self.sup_s = Some(xt.sup());
        self.ell_s = Some(xt.len());
        self
    }
}

/// `x^G ∩ 𝒜`: atoms linked by `xA = A x1` for `A` a product of at most two
/// atoms.
pub fn conjugate_atoms(g: &dyn GarsideStructure, x: usize) -> Vec<usize> {
    let m = g.atom_count();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        let mut i = i;
        while p[i] != r {
            let next = p[i];
            p[i] = r;
            i = next;
        }
        r
    }
    let mut conjugators: Vec<Perm> = g.atoms().to_vec();
    for i in 0..m {
        for j in 0..m {
            if let Some(s) = g.product_if_simple(&g.atom(i), &g.atom(j)) {
                conjugators.push(s);
            }
        }
    }
    for a in &conjugators {
        for i in 0..m {
            let Some(xa) = g.product_if_simple(&g.atom(i), a) else { continue };
            if !g.is_prefix(a, &xa) {
                continue;
            }
            if let Some(j) = g.atom_index(&g.left_quotient(a, &xa)) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri] = rj;
            }
        }
    }
    let root = find(&mut parent, x);
    (0..m).filter(|&i| find(&mut parent, i) == root).collect()
}

/// `A Δ^{i-1} B = Δ^i`.
fn delta_condition(g: &dyn GarsideStructure, a: &Perm, b: &Perm, i: usize) -> bool {
    let mut z = NormalForm::from_simple(g, a);
    z.shift_delta(g, i as i64 - 1);
    z.right_multiply(g, b);
    z == NormalForm::delta_power(i as i64)
}

fn atom_run(g: &dyn GarsideStructure, factors: &[Perm], allowed: &[usize]) -> Option<usize> {
    let first = g.atom_index(factors.first()?)?;
    (allowed.contains(&first) && factors.iter().all(|f| *f == factors[0])).then_some(first)
}

struct Match {
    n: usize,
    x1: usize,
    y1: Option<usize>,
    a: Vec<Perm>,
    b: Vec<Perm>,
}

/// `δ^{-n} · A_n ⋯ A_1 · x1^k · B_1 ⋯ B_n` with condition on each `(A_i, B_i)`.
fn dual_a_parts(g: &dyn GarsideStructure, z: &NormalForm, xs: &[usize], k: usize) -> Option<Match> {
    if z.inf > 0 {
        return None;
    }
    let n = (-z.inf) as usize;
    if z.len() != 2 * n + k {
        return None;
    }
    let f = &z.factors;
    let x1 = atom_run(g, &f[n..n + k], xs)?;
    let a: Vec<Perm> = (1..=n).map(|i| f[n - i]).collect();
    let b: Vec<Perm> = (1..=n).map(|i| f[n + k + i - 1]).collect();
    (1..=n)
        .all(|i| delta_condition(g, &a[i - 1], &b[i - 1], i))
        .then_some(Match { n, x1, y1: None, a, b })
}

fn witness(m: Match, z: &NormalForm, conjugator: &NormalForm, position: usize) -> Witness {
    Witness {
        n: m.n,
        x1: m.x1,
        y1: m.y1,
        a: m.a,
        b: m.b,
        element: z.clone(),
        conjugator: conjugator.clone(),
        position,
    }
}

/// Matches the single-class dual form `δ^{-n}·A_n⋯A_1·x1^k·B_1⋯B_n`, `n ≥ 0`.
pub fn match_form_dual_a(
    g: &dyn GarsideStructure,
    z: &NormalForm,
    xs: &[usize],
    k: usize,
) -> Option<Witness> {
    dual_a_parts(g, z, xs, k).map(|m| witness(m, z, &NormalForm::identity(), 0))
}

/// Matches `δ^{-n}·A_n⋯A_1·x1^k·B_1⋯B_n·y1^l`, `n ≥ 1`.
pub fn match_form_dual_b(
    g: &dyn GarsideStructure,
    z: &NormalForm,
    xs: &[usize],
    ys: &[usize],
    k: usize,
    l: usize,
) -> Option<Witness> {
    if z.inf >= 0 {
        return None;
    }
    let n = (-z.inf) as usize;
    if z.len() != 2 * n + k + l {
        return None;
    }
    let y1 = atom_run(g, &z.factors[2 * n + k..], ys)?;
    let head = NormalForm { inf: z.inf, factors: z.factors[..2 * n + k].to_vec() };
    let mut m = dual_a_parts(g, &head, xs, k)?;
    m.y1 = Some(y1);
    Some(witness(m, z, &NormalForm::identity(), 0))
}

/// Standard single-class form: `x1^k`, or
/// `Δ^{-n}·A_n⋯A_1·x1^{k-1}·x1B_1·B_2⋯B_n` with `A_1 ⪰ x1`, `n ≥ 1`.
pub fn match_form_standard_a(
    g: &dyn GarsideStructure,
    z: &NormalForm,
    xs: &[usize],
    k: usize,
) -> Option<Witness> {
    if z.inf == 0 {
        let x1 = (z.len() == k).then(|| atom_run(g, &z.factors, xs)).flatten()?;
        let m = Match { n: 0, x1, y1: None, a: vec![], b: vec![] };
        return Some(witness(m, z, &NormalForm::identity(), 0));
    }
    if z.inf > 0 {
        return None;
    }
    let n = (-z.inf) as usize;
    if z.len() != 2 * n + k - 1 {
        return None;
    }
    let f = &z.factors;
    let a: Vec<Perm> = (1..=n).map(|i| f[n - i]).collect();
    let xb = f[n + k - 1];
    let candidates: Vec<usize> = if k >= 2 {
        vec![atom_run(g, &f[n..n + k - 1], xs)?]
    } else {
        g.starting_set(&xb).into_iter().filter(|c| xs.contains(c)).collect()
    };
    for x1 in candidates {
        let xa = g.atom(x1);
        if !g.atom_prefix(x1, &xb) || !g.atom_suffix(x1, &a[0]) {
            continue;
        }
        let mut b = vec![g.left_quotient(&xa, &xb)];
        b.extend_from_slice(&f[n + k..]);
        if (1..=n).all(|i| delta_condition(g, &a[i - 1], &b[i - 1], i)) {
            let m = Match { n, x1, y1: None, a, b };
            return Some(witness(m, z, &NormalForm::identity(), 0));
        }
    }
    None
}

/// Standard two-class form
/// `Δ^{-n}·A_n⋯A_1·x1^{k-1}·x1B_1·B_2⋯B_{n-1}·B_ny1·y1^{l-1}`, `n ≥ 1`,
/// with `A_1 ⪰ x1` and `τ^{-n}(y1) ≼ A_n`; for `n = 1` the middle factor is
/// `x1B_1y1` and `A_1 = τ^{-1}(y1)·A''·x1`.
pub fn match_form_standard_b(
    g: &dyn GarsideStructure,
    z: &NormalForm,
    xs: &[usize],
    ys: &[usize],
    k: usize,
    l: usize,
) -> Option<Witness> {
    if z.inf >= 0 {
        return None;
    }
    let n = (-z.inf) as usize;
    if z.len() != 2 * n + k + l - 2 {
        return None;
    }
    let f = &z.factors;
    let a: Vec<Perm> = (1..=n).map(|i| f[n - i]).collect();
    let xb = f[n + k - 1];
    let by = f[2 * n + k - 2];
    let x_cands: Vec<usize> = if k >= 2 {
        vec![atom_run(g, &f[n..n + k - 1], xs)?]
    } else {
        g.starting_set(&xb).into_iter().filter(|c| xs.contains(c)).collect()
    };
    let y_cands: Vec<usize> = if l >= 2 {
        vec![atom_run(g, &f[2 * n + k - 1..], ys)?]
    } else {
        g.finishing_set(&by).into_iter().filter(|c| ys.contains(c)).collect()
    };
    for &x1 in &x_cands {
        if !g.atom_prefix(x1, &xb) {
            continue;
        }
        let xa = g.atom(x1);
        for &y1 in &y_cands {
            let ya = g.atom(y1);
            let yt = g.tau(&ya, -(n as i64));
            let b: Vec<Perm> = if n == 1 {
                let b1 = g.left_quotient(&xa, &xb);
                if !g.atom_suffix(y1, &b1) {
                    continue;
                }
                // A_1 = ỹ1 · A'' · x1
                if !g.is_prefix(&yt, &a[0]) || !g.atom_suffix(x1, &g.left_quotient(&yt, &a[0])) {
                    continue;
                }
                vec![g.right_quotient(&b1, &ya)]
            } else {
                if !g.atom_suffix(y1, &by) || !g.atom_suffix(x1, &a[0]) || !g.is_prefix(&yt, &a[n - 1]) {
                    continue;
                }
                let mut b = vec![g.left_quotient(&xa, &xb)];
                b.extend_from_slice(&f[n + k..2 * n + k - 2]);
                b.push(g.right_quotient(&by, &ya));
                b
            };
            if (1..=n).all(|i| delta_condition(g, &a[i - 1], &b[i - 1], i)) {
                let m = Match { n, x1, y1: Some(y1), a: a.clone(), b };
                return Some(witness(m, z, &NormalForm::identity(), 0));
            }
        }
    }
    None
}

/// The two-class matcher appropriate for the structure.
pub fn match_form_b(
    g: &dyn GarsideStructure,
    z: &NormalForm,
    xs: &[usize],
    ys: &[usize],
    k: usize,
    l: usize,
) -> Option<Witness> {
    match g.kind() {
        StructureKind::Dual => match_form_dual_b(g, z, xs, ys, k, l),
        StructureKind::Standard => match_form_standard_b(g, z, xs, ys, k, l),
    }
}

/// Required summit length when `inf_s < 0`; `None` when the filter does not
/// apply.
pub fn required_summit_length(kind: StructureKind, inf_s: i64, k: usize, l: usize) -> Option<i64> {
    if inf_s >= 0 {
        return None;
    }
    let base = -2 * inf_s + (k + l) as i64;
    Some(match kind {
        StructureKind::Dual => base,
        StructureKind::Standard => base - 2,
    })
}

/// `Some(false)` when the summit length rules membership out; `None` when
/// inconclusive. `xt` must lie on a sliding circuit.
pub fn length_filter(g: &dyn GarsideStructure, xt: &NormalForm, q: &RecognitionQuery) -> Option<bool> {
    let l = q.l?;
    let need = required_summit_length(g.kind(), xt.inf, q.k, l)?;
    (xt.len() as i64 != need).then_some(false)
}

/// A decision procedure for the two-class problem.
pub trait Recognizer: Send + Sync {
    fn name(&self) -> &'static str;

    /// Whether the strategy is complete for `kind`.
    fn supports(&self, _kind: StructureKind) -> bool {
        true
    }

    /// Search stage, called with the circuit element `xt` (conjugator `c`
    /// from the query braid) once the common prefilters are inconclusive.
    fn search(
        &self,
        g: &dyn GarsideStructure,
        xt: &NormalForm,
        c: &NormalForm,
        q: &RecognitionQuery,
        limits: &SearchLimits,
    ) -> Result<RecognitionResult>;
}

/// Walks the cycling orbit of the circuit element. Complete for the dual
/// structure only.
#[derive(Debug, Default)]
pub struct OrbitWalk;

/// Searches the full set of sliding circuits.
#[derive(Debug, Default)]
pub struct FullCircuitSearch;

impl Recognizer for OrbitWalk {
    fn name(&self) -> &'static str {
        "orbit-walk"
    }

    fn supports(&self, kind: StructureKind) -> bool {
        kind == StructureKind::Dual
    }

    fn search(
        &self,
        g: &dyn GarsideStructure,
        xt: &NormalForm,
        c: &NormalForm,
        q: &RecognitionQuery,
        limits: &SearchLimits,
    ) -> Result<RecognitionResult> {
        let (y, l) = (q.y.unwrap(), q.l.unwrap());
        let xs = conjugate_atoms(g, q.x);
        let ys = conjugate_atoms(g, y);
        let mut z = xt.clone();
        let mut conj = c.clone();
        let mut idx = 0;
        loop {
            if let Some(mut w) = match_form_dual_b(g, &z, &xs, &ys, q.k, l) {
                w.conjugator = conj;
                w.position = idx;
                let mut r = RecognitionResult::new(true, DecidedBy::FormMatch).summit(xt);
                r.witness = Some(w);
                return Ok(r);
            }
            let iota = initial_factor(g, &z)?;
            conj.right_multiply(g, &iota);
            z = cycling(g, &z)?;
            idx += 1;
            if z == *xt {
                break;
            }
            if idx >= limits.max_orbit {
                return Err(BraidError::ResourceLimit { what: "orbit", limit: limits.max_orbit });
            }
        }
        let mut r = RecognitionResult::new(false, DecidedBy::Exhausted).summit(xt);
        r.orbit_size = Some(idx);
        Ok(r)
    }
}

impl Recognizer for FullCircuitSearch {
    fn name(&self) -> &'static str {
        "full-sc"
    }

    fn search(
        &self,
        g: &dyn GarsideStructure,
        xt: &NormalForm,
        c: &NormalForm,
        q: &RecognitionQuery,
        limits: &SearchLimits,
    ) -> Result<RecognitionResult> {
        let (y, l) = (q.y.unwrap(), q.l.unwrap());
        let xs = conjugate_atoms(g, q.x);
        let ys = conjugate_atoms(g, y);
        let sc = circuits_from(g, xt.clone(), c.clone(), limits)?;
        for (i, z) in sc.elements.iter().enumerate() {
            if let Some(mut w) = match_form_b(g, z, &xs, &ys, q.k, l) {
                w.conjugator = sc.conjugators[i].clone();
                w.position = i;
                let mut r = RecognitionResult::new(true, DecidedBy::FormMatch).summit(xt);
                r.witness = Some(w);
                r.sc_size = Some(sc.len());
                return Ok(r);
            }
        }
        let mut r = RecognitionResult::new(false, DecidedBy::Exhausted).summit(xt);
        r.sc_size = Some(sc.len());
        Ok(r)
    }
}

pub const RECOGNIZER_NAMES: &[&str] = &["orbit-walk", "full-sc"];

pub fn recognizer_by_name(name: &str) -> Option<Box<dyn Recognizer>> {
    match name {
        "orbit-walk" | "orbit" => Some(Box::new(OrbitWalk)),
        "full-sc" | "sc" => Some(Box::new(FullCircuitSearch)),
        _ => None,
    }
}

pub fn default_recognizer(kind: StructureKind) -> Box<dyn Recognizer> {
    match kind {
        StructureKind::Dual => Box::new(OrbitWalk),
        StructureKind::Standard => Box::new(FullCircuitSearch),
    }
}

/// Single-class membership read off the normal form of `x` itself.
fn recognize_single(
    g: &dyn GarsideStructure,
    x: &NormalForm,
    q: &RecognitionQuery,
) -> RecognitionResult {
    let xs = conjugate_atoms(g, q.x);
    let w = match g.kind() {
        StructureKind::Dual => match_form_dual_a(g, x, &xs, q.k),
        StructureKind::Standard => match_form_standard_a(g, x, &xs, q.k),
    };
    let mut r = match w {
        Some(w) => {
            let mut r = RecognitionResult::new(true, DecidedBy::FormMatch);
            r.witness = Some(w);
            r
        }
        None => RecognitionResult::new(false, DecidedBy::Exhausted),
    };
    r.inf_s = None;
    r
}

/// Runs the common prefilters, then `strategy`.
pub fn recognize_with(
    g: &dyn GarsideStructure,
    strategy: &dyn Recognizer,
    x: &NormalForm,
    q: &RecognitionQuery,
    limits: &SearchLimits,
) -> Result<RecognitionResult> {
    q.check_atoms(g)?;
    if !strategy.supports(g.kind()) {
        return Err(BraidError::Precondition(format!(
            "strategy {} is not complete for the {} structure",
            strategy.name(),
            g.kind().name()
        )));
    }
    if x.algebraic_length(g) != q.target_length() {
        return Ok(RecognitionResult::new(false, DecidedBy::AlgebraicLength));
    }
    let (Some(y), Some(l)) = (q.y, q.l) else {
        return Ok(recognize_single(g, x, q));
    };
    let (xt, c) = slide_to_circuit(g, x, limits)?;
    if xt.inf >= 0 {
        return positive_conjugacy(g, &xt, &c, q, y, l, limits);
    }
    if length_filter(g, &xt, q) == Some(false) {
        return Ok(RecognitionResult::new(false, DecidedBy::LengthFilter).summit(&xt));
    }
    strategy.search(g, &xt, &c, q, limits)
}

fn positive_conjugacy(
    g: &dyn GarsideStructure,
    xt: &NormalForm,
    c: &NormalForm,
    q: &RecognitionQuery,
    y: usize,
    l: usize,
    limits: &SearchLimits,
) -> Result<RecognitionResult> {
    let sc = circuits_from(g, xt.clone(), c.clone(), limits)?;
    for &x1 in &conjugate_atoms(g, q.x) {
        for &y1 in &conjugate_atoms(g, y) {
            let target = NormalForm::atom_power(g, x1, q.k).multiply(g, &NormalForm::atom_power(g, y1, l));
            let (tt, ct) = slide_to_circuit(g, &target, limits)?;
            if let Some(i) = sc.position(&tt) {
                let w = Witness {
                    n: 0,
                    x1,
                    y1: Some(y1),
                    a: vec![],
                    b: vec![],
                    conjugator: sc.conjugators[i].multiply(g, &ct.inverse(g)),
                    element: target,
                    position: i,
                };
                let mut r = RecognitionResult::new(true, DecidedBy::PositiveConjugacy).summit(xt);
                r.witness = Some(w);
                r.sc_size = Some(sc.len());
                return Ok(r);
            }
        }
    }
    let mut r = RecognitionResult::new(false, DecidedBy::PositiveConjugacy).summit(xt);
    r.sc_size = Some(sc.len());
    Ok(r)
}

/// Uses the default strategy of the structure.
pub fn recognize(
    g: &dyn GarsideStructure,
    x: &NormalForm,
    q: &RecognitionQuery,
    limits: &SearchLimits,
) -> Result<RecognitionResult> {
    recognize_with(g, &*default_recognizer(g.kind()), x, q, limits)
}

pub fn recognize_dual(
    g: &dyn GarsideStructure,
    x: &NormalForm,
    q: &RecognitionQuery,
    limits: &SearchLimits,
) -> Result<RecognitionResult> {
    if g.kind() != StructureKind::Dual {
        return Err(BraidError::Precondition("dual structure required".into()));
    }
    recognize_with(g, &OrbitWalk, x, q, limits)
}

pub fn recognize_standard(
    g: &dyn GarsideStructure,
    x: &NormalForm,
    q: &RecognitionQuery,
    limits: &SearchLimits,
) -> Result<RecognitionResult> {
    if g.kind() != StructureKind::Standard {
        return Err(BraidError::Precondition("standard structure required".into()));
    }
    recognize_with(g, &FullCircuitSearch, x, q, limits)
}
