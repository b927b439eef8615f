//! Quasipositivity of 3-braids.
//!
//! A 3-braid is encoded as `X(p, a) = Δ^p σ1^{a_1} σ2^{a_2} σ1^{a_3} ⋯`.
//! The decision procedure reduces the encoding, settles it by closed-form
//! bounds where possible, and otherwise branches on which exponent can be
//! lowered to 1.

use crate::error::{BraidError, Result};
use crate::normal_form::NormalForm;
use crate::structure::{GarsideStructure, StructureKind};
use crate::words::{BraidWord, Letter};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PAForm {
    pub p: i64,
    pub a: Vec<u64>,
}

impl PAForm {
    pub fn new(p: i64, a: Vec<u64>) -> Self {
        PAForm { p, a }
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// `e(X) = 3p + Σ a_i`.
    pub fn algebraic_length(&self) -> i64 {
        3 * self.p + self.a.iter().sum::<u64>() as i64
    }

    /// The standard word `Δ^p σ1^{a_1} σ2^{a_2} ⋯` on three strands.
    pub fn to_word(&self) -> BraidWord {
        let sid = crate::structure::StructureId::standard(3).unwrap();
        let mut letters = Vec::new();
        for (i, &e) in self.a.iter().enumerate() {
            for _ in 0..e {
                letters.push(Letter::pos(i % 2));
            }
        }
        BraidWord { structure: sid, garside_power: self.p, letters }
    }

    /// Condition for the solver's entry: `p ≡ n (mod 2)` when `n ≥ 2`,
    /// `a_1 ≥ 1` and `a_i ≥ 2` for `i > 1`.
    pub fn is_almost_reduced(&self) -> bool {
        if self.a.iter().any(|&x| x == 0) {
            return false;
        }
        let n = self.a.len();
        (n < 2 || (self.p - n as i64).rem_euclid(2) == 0) && self.a.iter().skip(1).all(|&x| x >= 2)
    }

    pub fn is_reduced(&self) -> bool {
        let n = self.a.len();
        n <= 1
            || (self.a == [1, 1] && self.p.rem_euclid(2) == 0)
            || ((self.p - n as i64).rem_euclid(2) == 0 && self.a.iter().all(|&x| x >= 2))
    }
}

/// `f_i(a)`: entry `i` (0-based) replaced by 1.
pub fn f_i(a: &[u64], i: usize) -> Vec<u64> {
    let mut out = a.to_vec();
    out[i] = 1;
    out
}

fn even(x: i64) -> bool {
    x.rem_euclid(2) == 0
}

/// One of the non-rotating reductions, applied directly to `(p, a)`.
fn reduce_direct(p: i64, a: &[u64]) -> Option<PAForm> {
    let n = a.len();
    if n >= 3 && a[1] == 1 && a[0] >= 2 && a[2] >= 2 {
        let mut v = vec![a[0] - 1, a[2] - 1];
        v.extend_from_slice(&a[3..]);
        return Some(PAForm::new(p + 1, v));
    }
    if even(p) && n == 2 && a[0] == 1 && a[1] >= 3 {
        return Some(PAForm::new(p + 1, vec![a[1] - 2]));
    }
    if even(p) && a == [1, 2] {
        return Some(PAForm::new(p + 1, vec![]));
    }
    if n >= 4 && a[1] == 1 && a[2] == 1 {
        let mut v = vec![a[0] + a[3] - 1];
        v.extend_from_slice(&a[4..]);
        return Some(PAForm::new(p + 1, v));
    }
    if !even(p) && n == 3 && a[0] == 1 && a[1] == 1 && a[2] >= 2 {
        return Some(PAForm::new(p + 1, vec![a[2] - 1]));
    }
    if !even(p) && a == [1, 1, 1] {
        return Some(PAForm::new(p + 1, vec![]));
    }
    None
}

/// A single elementary reduction, if one applies.
pub fn reduce_step(pa: &PAForm) -> Option<PAForm> {
    let n = pa.a.len();
    if n >= 2 && !even(pa.p - n as i64) {
        let mut v = vec![pa.a[0] + pa.a[n - 1]];
        v.extend_from_slice(&pa.a[1..n - 1]);
        return Some(PAForm::new(pa.p, v));
    }
    let mut rot = pa.a.clone();
    for _ in 0..n {
        if let Some(r) = reduce_direct(pa.p, &rot) {
            return Some(r);
        }
        rot.rotate_left(1);
    }
    None
}

/// Applies elementary reductions until none applies. The result encodes a
/// conjugate of the input.
pub fn reduce(pa: &PAForm) -> PAForm {
    let mut cur = pa.clone();
    while let Some(next) = reduce_step(&cur) {
        cur = next;
    }
    cur
}

/// Syllables of a 3-strand standard normal form, without reduction.
/// Returns the encoding and whether it describes `τ(X)` instead of `X`.
pub fn raw_pa_form(g: &dyn GarsideStructure, x: &NormalForm) -> Result<(PAForm, bool)> {
    if g.kind() != StructureKind::Standard || g.strands() != 3 {
        return Err(BraidError::Precondition("3-strand standard structure required".into()));
    }
    let mut letters: Vec<usize> = Vec::new();
    for f in &x.factors {
        letters.extend(g.simple_atoms(f));
    }
    let swapped = letters.first() == Some(&1);
    if swapped {
        for l in &mut letters {
            *l = 1 - *l;
        }
    }
    let mut a: Vec<u64> = Vec::new();
    let mut last = None;
    for l in letters {
        if last == Some(l) {
            *a.last_mut().unwrap() += 1;
        } else {
            a.push(1);
            last = Some(l);
        }
    }
    Ok((PAForm::new(x.inf, a), swapped))
}

/// A reduced encoding of a conjugate of the 3-braid `w`.
pub fn to_pa_form(g: &dyn GarsideStructure, w: &BraidWord) -> Result<PAForm> {
    let x = NormalForm::from_word(g, w);
    Ok(reduce(&raw_pa_form(g, &x)?.0))
}

/// `(Sign + Null, Null)` of the closure, from the closed formula valid for
/// reduced encodings with `n ≥ 2` and `a ≠ (1, 1)`.
pub fn signature_nullity(pa: &PAForm) -> Result<(i64, i64)> {
    let n = pa.a.len() as i64;
    if !pa.is_reduced() || n < 2 || pa.a == [1, 1] {
        return Err(BraidError::Precondition(
            "signature formula needs a reduced encoding with n >= 2 and a != (1,1)".into(),
        ));
    }
    let sum = pa.p + n - pa.algebraic_length();
    let null = i64::from(pa.a.iter().all(|&x| x == 2) && (pa.p + n).rem_euclid(4) == 0);
    Ok((sum, null))
}

/// Quasipositivity of `Δ^q σ1^{-n}` in closed form.
pub fn qp_half_twist_power(q: i64, n: i64) -> bool {
    (q, n) == (0, 0) || (q >= 0 && 2 * n < 5 * q)
}

/// Default cap on recursion nodes.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

/// Decides quasipositivity of `X(p, a)`.
pub fn qp3(pa: &PAForm) -> Result<bool> {
    qp3_with_budget(pa, DEFAULT_NODE_BUDGET)
}

pub fn qp3_with_budget(pa: &PAForm, budget: u64) -> Result<bool> {
    if pa.a.iter().any(|&x| x == 0) {
        return Err(BraidError::Precondition("exponents must be positive".into()));
    }
    let r = reduce(pa);
    if r.a.is_empty() {
        // Δ^p alone: trivial or a power of the half twist
        return Ok(r.p >= 0);
    }
    let n = r.a.len();
    let e = r.algebraic_length();
    let mut buf: Vec<i64> = r.a.iter().map(|&x| x as i64).collect();
    buf.resize(2 * n.max(1) * (e.max(1) as usize + 1), 0);
    let mut budget = Budget { left: budget, limit: budget };
    core(r.p, &mut buf, 0, n, e, &mut budget)
}

struct Budget {
    left: u64,
    limit: u64,
}

fn at(buf: &mut Vec<i64>, i: usize) -> &mut i64 {
    if i >= buf.len() {
        buf.resize(2 * i + 16, 0);
    }
    &mut buf[i]
}

/// `a` indexes `buf`; entries are the exponents, and a negative entry at
/// position 0 of a rotation records that lowering it to 1 was already
/// refuted.
fn core(mut p: i64, buf: &mut Vec<i64>, mut a: usize, mut n: usize, e: i64, budget: &mut Budget) -> Result<bool> {
    if budget.left == 0 {
        return Err(BraidError::ResourceLimit { what: "qp3 recursion nodes", limit: budget.limit as usize });
    }
    budget.left -= 1;
    while n > 1 {
        if *at(buf, a) == 1 && *at(buf, a + n - 1) == 1 {
            if n == 2 {
                break;
            }
            p += 1;
            if n == 3 {
                *at(buf, a) = at(buf, a + 1).abs() - 1;
                n = 1;
                break;
            }
            let v = at(buf, a + 1).abs() + at(buf, a + n - 2).abs() - 1;
            *at(buf, a + 1) = v;
            n -= 3;
            let w = *at(buf, a + n);
            *at(buf, a) = w;
            break;
        }
        if *at(buf, a) == 1 {
            a += 1;
        } else if *at(buf, a + n - 1) != 1 {
            break;
        }
        p += 1;
        n -= 1;
        *at(buf, a) = at(buf, a).abs() - 1;
        *at(buf, a + n - 1) = at(buf, a + n - 1).abs() - 1;
    }
    let n = n as i64;
    if p >= 0 {
        return Ok(true);
    }
    if !(0 < p + n && p + n < 2 * e) {
        return Ok(false);
    }
    if 3 * n + 5 * p >= 0 {
        return Ok(true);
    }
    let n = n as usize;
    for _ in 0..n {
        let a0 = *at(buf, a);
        if a0 > 0 {
            let e1 = e - a0 + 1;
            if e1 >= 0 {
                let a1 = a + n;
                for i in 1..n {
                    let v = *at(buf, a + i);
                    *at(buf, a1 + i) = v;
                }
                *at(buf, a1) = 1;
                if core(p, buf, a1, n, e1, budget)? {
                    return Ok(true);
                }
            }
            *at(buf, a) = -a0;
        }
        let v = *at(buf, a);
        *at(buf, a + n) = v;
        a += 1;
    }
    Ok(false)
}
