//! Cycling, decycling, cyclic sliding, sets of sliding circuits and the
//! conjugacy test built on them.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use crate::error::{BraidError, Result};
use crate::normal_form::NormalForm;
use crate::perm::Perm;
use crate::structure::GarsideStructure;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest admissible set of sliding circuits.
    pub max_sc: usize,
    /// Longest admissible sliding trajectory or cycling orbit.
    pub max_orbit: usize,
    /// Worker threads for the circuit search; 0 or 1 runs sequentially.
    pub threads: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_sc: 100_000, max_orbit: 1_000_000, threads: 1 }
    }
}

fn need_factors(x: &NormalForm, what: &str) -> Result<()> {
    if x.is_empty() {
        Err(BraidError::Precondition(format!("{what} needs canonical length > 0")))
    } else {
        Ok(())
    }
}

/// `ι(X) = τ^{-p}(A_1)`.
pub fn initial_factor(g: &dyn GarsideStructure, x: &NormalForm) -> Result<Perm> {
    need_factors(x, "initial factor")?;
    Ok(g.tau(&x.factors[0], -x.inf))
}

/// `φ(X) = A_r`.
pub fn final_factor(x: &NormalForm) -> Result<Perm> {
    need_factors(x, "final factor")?;
    Ok(*x.factors.last().unwrap())
}

/// `c(X) = X^{ι(X)} = Δ^p A_2 ⋯ A_r ι(X)`.
pub fn cycling(g: &dyn GarsideStructure, x: &NormalForm) -> Result<NormalForm> {
    let iota = initial_factor(g, x)?;
    let mut y = NormalForm { inf: x.inf, factors: x.factors[1..].to_vec() };
    y.right_multiply(g, &iota);
    Ok(y)
}

/// `d(X) = A_r Δ^p A_1 ⋯ A_{r-1}`.
pub fn decycling(g: &dyn GarsideStructure, x: &NormalForm) -> Result<NormalForm> {
    let phi = final_factor(x)?;
    let y = NormalForm { inf: x.inf, factors: x.factors[..x.len() - 1].to_vec() };
    Ok(y.left_multiply(g, &phi))
}

/// `𝔭(X) = ι(X) ∧ ∂φ(X)`.
pub fn preferred_prefix(g: &dyn GarsideStructure, x: &NormalForm) -> Result<Perm> {
    let iota = initial_factor(g, x)?;
    let phi = final_factor(x)?;
    Ok(g.meet(&iota, &g.complement(&phi)))
}

/// `𝔰(X) = X^{𝔭(X)}`; elements of canonical length 0 are fixed.
pub fn cyclic_sliding(g: &dyn GarsideStructure, x: &NormalForm) -> NormalForm {
    match preferred_prefix(g, x) {
        Ok(p) => x.conjugate_simple(g, &p),
        Err(_) => x.clone(),
    }
}

fn cycling_or_fixed(g: &dyn GarsideStructure, x: &NormalForm) -> NormalForm {
    cycling(g, x).unwrap_or_else(|_| x.clone())
}

fn decycling_or_fixed(g: &dyn GarsideStructure, x: &NormalForm) -> NormalForm {
    decycling(g, x).unwrap_or_else(|_| x.clone())
}

/// Iterates cyclic sliding until a value repeats. Returns the first repeated
/// value `X̃` and `c` with `X^c = X̃`.
pub fn slide_to_circuit(
    g: &dyn GarsideStructure,
    x: &NormalForm,
    limits: &SearchLimits,
) -> Result<(NormalForm, NormalForm)> {
    let mut seen: HashMap<NormalForm, usize> = HashMap::new();
    let mut conjugators = vec![NormalForm::identity()];
    let mut cur = x.clone();
    loop {
        if let Some(&j) = seen.get(&cur) {
            return Ok((cur, conjugators.swap_remove(j)));
        }
        if seen.len() >= limits.max_orbit {
            return Err(BraidError::ResourceLimit { what: "sliding trajectory", limit: limits.max_orbit });
        }
        let idx = seen.len();
        seen.insert(cur.clone(), idx);
        let p = match preferred_prefix(g, &cur) {
            Ok(p) => p,
            Err(_) => g.identity(),
        };
        let mut c = conjugators[idx].clone();
        c.right_multiply(g, &p);
        conjugators.push(c);
        cur = cur.conjugate_simple(g, &p);
    }
}

/// Whether `z` lies on its own sliding circuit.
pub fn is_in_sc(g: &dyn GarsideStructure, z: &NormalForm, limits: &SearchLimits) -> Result<bool> {
    let mut seen = HashSet::new();
    let mut cur = z.clone();
    loop {
        let next = cyclic_sliding(g, &cur);
        if next == *z {
            return Ok(true);
        }
        // sliding never lowers inf or raises sup, so any change leaves the circuit
        if next.inf != z.inf || next.len() != z.len() {
            return Ok(false);
        }
        if !seen.insert(next.clone()) {
            return Ok(false);
        }
        if seen.len() > limits.max_orbit {
            return Err(BraidError::ResourceLimit { what: "sliding trajectory", limit: limits.max_orbit });
        }
        cur = next;
    }
}

fn sc_member(
    g: &dyn GarsideStructure,
    y: &NormalForm,
    z: &NormalForm,
    known: Option<&HashMap<NormalForm, usize>>,
    limits: &SearchLimits,
) -> Result<bool> {
    if z.inf != y.inf || z.len() != y.len() {
        return Ok(false);
    }
    if known.is_some_and(|k| k.contains_key(z)) {
        return Ok(true);
    }
    is_in_sc(g, z, limits)
}

/// The minimal simple `s` with `a ≼ s` and `Y^s ∈ SC(Y)`, as the meet of all
/// simple candidates. `y` must lie on a sliding circuit.
pub fn min_sc_conjugator(
    g: &dyn GarsideStructure,
    y: &NormalForm,
    atom: usize,
    limits: &SearchLimits,
) -> Result<Perm> {
    Ok(minimal_conjugators(g, y, None, limits)?[atom])
}

/// The SC-minimal conjugator above each atom, indexed by atom.
fn minimal_conjugators(
    g: &dyn GarsideStructure,
    y: &NormalForm,
    known: Option<&HashMap<NormalForm, usize>>,
    limits: &SearchLimits,
) -> Result<Vec<Perm>> {
    let d = g.delta();
    let mut best = vec![d; g.atom_count()];
    for s in g.simples() {
        if s.is_identity() || *s == d {
            continue;
        }
        let above: Vec<usize> = (0..g.atom_count()).filter(|&i| g.atom_prefix(i, s)).collect();
        // only candidates that could lower some current minimum matter
        if above.iter().all(|&i| g.is_prefix(&best[i], s)) {
            continue;
        }
        let z = y.conjugate_simple(g, s);
        if sc_member(g, y, &z, known, limits)? {
            for i in above {
                best[i] = g.meet(&best[i], s);
            }
        }
    }
    Ok(best)
}

/// Arrow of the sliding circuits graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub label: Perm,
    /// `label ≼ ι(source)`.
    pub black: bool,
    /// `φ(source)·label` is simple.
    pub grey: bool,
}

/// The set `SC(X)` with its graph of minimal conjugators.
#[derive(Clone, Debug)]
pub struct SlidingCircuits {
    pub elements: Vec<NormalForm>,
    /// `conjugators[i]` takes the query element to `elements[i]`.
    pub conjugators: Vec<NormalForm>,
    pub arrows: Vec<Arrow>,
    index: HashMap<NormalForm, usize>,
}

impl SlidingCircuits {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, y: &NormalForm) -> Option<usize> {
        self.index.get(y).copied()
    }

    pub fn contains(&self, y: &NormalForm) -> bool {
        self.index.contains_key(y)
    }

    pub fn inf_s(&self) -> i64 {
        self.elements[0].inf
    }

    pub fn sup_s(&self) -> i64 {
        self.elements[0].sup()
    }

    pub fn ell_s(&self) -> usize {
        self.elements[0].len()
    }

    fn orbits(&self, step: impl Fn(&NormalForm) -> NormalForm) -> Result<Vec<Vec<usize>>> {
        let mut done = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if done[start] {
                continue;
            }
            let mut orbit = vec![start];
            done[start] = true;
            let mut cur = step(&self.elements[start]);
            loop {
                let i = self.position(&cur).ok_or_else(|| {
                    BraidError::Precondition("set of sliding circuits is not closed".into())
                })?;
                if i == start {
                    break;
                }
                if done[i] {
                    return Err(BraidError::Precondition("orbit does not close".into()));
                }
                done[i] = true;
                orbit.push(i);
                cur = step(&cur);
            }
            out.push(orbit);
        }
        Ok(out)
    }

    /// Decomposition into cycling orbits, by element index.
    pub fn cycling_orbits(&self, g: &dyn GarsideStructure) -> Result<Vec<Vec<usize>>> {
        self.orbits(|y| cycling_or_fixed(g, y))
    }

    pub fn decycling_orbits(&self, g: &dyn GarsideStructure) -> Result<Vec<Vec<usize>>> {
        self.orbits(|y| decycling_or_fixed(g, y))
    }
}

/// Computes `SC(X)` by closing the circuit reached from `x` under minimal
/// simple conjugators.
pub fn sliding_circuits(
    g: &dyn GarsideStructure,
    x: &NormalForm,
    limits: &SearchLimits,
) -> Result<SlidingCircuits> {
    let (start, c) = slide_to_circuit(g, x, limits)?;
    circuits_from(g, start, c, limits)
}

/// As [`sliding_circuits`], for an element already on a circuit. `c` is the
/// conjugator recorded for it.
pub fn circuits_from(
    g: &dyn GarsideStructure,
    start: NormalForm,
    c: NormalForm,
    limits: &SearchLimits,
) -> Result<SlidingCircuits> {
    let mut sc = SlidingCircuits {
        elements: vec![start.clone()],
        conjugators: vec![c],
        arrows: Vec::new(),
        index: HashMap::from([(start, 0)]),
    };
    let pool = if limits.threads > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(limits.threads)
                .build()
                .map_err(|e| BraidError::Precondition(e.to_string()))?,
        )
    } else {
        None
    };
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let known = &sc.index;
        let elements = &sc.elements;
        let work = |&v: &usize| minimal_conjugators(g, &elements[v], Some(known), limits);
        let labels: Vec<Vec<Perm>> = match &pool {
            Some(pool) => pool.install(|| frontier.par_iter().map(work).collect::<Result<_>>())?,
            None => frontier.iter().map(work).collect::<Result<_>>()?,
        };
        let mut next = Vec::new();
        for (&v, mut ls) in frontier.iter().zip(labels) {
            ls.sort();
            ls.dedup();
            let y = sc.elements[v].clone();
            let colors = initial_factor(g, &y)
                .ok()
                .map(|iota| (iota, g.complement(&final_factor(&y).unwrap())));
            for s in ls {
                let z = y.conjugate_simple(g, &s);
                let target = match sc.index.get(&z) {
                    Some(&t) => t,
                    None => {
                        if sc.elements.len() >= limits.max_sc {
                            return Err(BraidError::ResourceLimit {
                                what: "sliding circuits",
                                limit: limits.max_sc,
                            });
                        }
                        let t = sc.elements.len();
                        let mut cz = sc.conjugators[v].clone();
                        cz.right_multiply(g, &s);
                        sc.index.insert(z.clone(), t);
                        sc.elements.push(z);
                        sc.conjugators.push(cz);
                        next.push(t);
                        t
                    }
                };
                let (black, grey) = match &colors {
                    Some((iota, dphi)) => (g.is_prefix(&s, iota), g.is_prefix(&s, dphi)),
                    None => (false, false),
                };
                sc.arrows.push(Arrow { source: v, target, label: s, black, grey });
            }
        }
        frontier = next;
    }
    Ok(sc)
}

fn orbit_of(
    y: &NormalForm,
    limits: &SearchLimits,
    step: impl Fn(&NormalForm) -> NormalForm,
) -> Result<Vec<NormalForm>> {
    let mut out = vec![y.clone()];
    let mut cur = step(y);
    while cur != *y {
        if out.len() >= limits.max_orbit {
            return Err(BraidError::ResourceLimit { what: "orbit", limit: limits.max_orbit });
        }
        out.push(cur.clone());
        cur = step(&cur);
    }
    Ok(out)
}

/// `Y, c(Y), c²(Y), …` up to the return to `Y`. `y` must lie in its sliding
/// circuits set.
pub fn cycling_orbit(
    g: &dyn GarsideStructure,
    y: &NormalForm,
    limits: &SearchLimits,
) -> Result<Vec<NormalForm>> {
    orbit_of(y, limits, |z| cycling_or_fixed(g, z))
}

pub fn decycling_orbit(
    g: &dyn GarsideStructure,
    y: &NormalForm,
    limits: &SearchLimits,
) -> Result<Vec<NormalForm>> {
    orbit_of(y, limits, |z| decycling_or_fixed(g, z))
}

/// `c_Y(u) = ι(Y)^{-1} u ι(Y^u)`.
pub fn transport_c(g: &dyn GarsideStructure, y: &NormalForm, u: &NormalForm) -> Result<NormalForm> {
    let yu = y.conjugate(g, u);
    let a = NormalForm::from_simple(g, &initial_factor(g, y)?);
    let b = NormalForm::from_simple(g, &initial_factor(g, &yu)?);
    Ok(a.inverse(g).multiply(g, u).multiply(g, &b))
}

/// `𝔰_Y(u) = 𝔭(Y)^{-1} u 𝔭(Y^u)`.
pub fn transport_s(g: &dyn GarsideStructure, y: &NormalForm, u: &NormalForm) -> NormalForm {
    let yu = y.conjugate(g, u);
    let pp = |z: &NormalForm| preferred_prefix(g, z).unwrap_or_else(|_| g.identity());
    let a = NormalForm::from_simple(g, &pp(y));
    let b = NormalForm::from_simple(g, &pp(&yu));
    a.inverse(g).multiply(g, u).multiply(g, &b)
}

/// Returns `w` with `X^w = Y` when the two are conjugate.
pub fn are_conjugate(
    g: &dyn GarsideStructure,
    x: &NormalForm,
    y: &NormalForm,
    limits: &SearchLimits,
) -> Result<Option<NormalForm>> {
    if x.algebraic_length(g) != y.algebraic_length(g) {
        return Ok(None);
    }
    let (xt, cx) = slide_to_circuit(g, x, limits)?;
    let (yt, cy) = slide_to_circuit(g, y, limits)?;
    if xt.inf != yt.inf || xt.len() != yt.len() {
        return Ok(None);
    }
    let to_target = if xt == yt {
        cx
    } else {
        let sc = circuits_from(g, xt, cx, limits)?;
        match sc.position(&yt) {
            Some(i) => sc.conjugators[i].clone(),
            None => return Ok(None),
        }
    };
    Ok(Some(to_target.multiply(g, &cy.inverse(g))))
}
