//! Garside structures on the braid groups.
//!
//! A structure supplies its atoms, its Garside element and the atom
//! divisibility tests; every other lattice operation on simple elements is
//! derived from those here.

pub mod artin;
pub mod dual;

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

pub use artin::Standard;
pub use dual::Dual;

use crate::error::{BraidError, Result};
use crate::perm::{Perm, MAX_STRANDS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StructureKind {
    Standard,
    Dual,
}

impl StructureKind {
    pub fn name(self) -> &'static str {
        match self {
            StructureKind::Standard => "standard",
            StructureKind::Dual => "dual",
        }
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A structure kind together with the number of strands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StructureId {
    pub strands: usize,
    pub kind: StructureKind,
}

impl StructureId {
    pub fn new(kind: StructureKind, strands: usize) -> Result<Self> {
        if !(2..=MAX_STRANDS).contains(&strands) {
            return Err(BraidError::Strands(strands));
        }
        Ok(StructureId { strands, kind })
    }

    pub fn standard(strands: usize) -> Result<Self> {
        Self::new(StructureKind::Standard, strands)
    }

    pub fn dual(strands: usize) -> Result<Self> {
        Self::new(StructureKind::Dual, strands)
    }

    pub fn build(&self) -> Arc<dyn GarsideStructure> {
        match self.kind {
            StructureKind::Standard => Arc::new(Standard::new(self.strands)),
            StructureKind::Dual => Arc::new(Dual::new(self.strands)),
        }
    }
}

/// Names accepted by [`structure_by_name`].
pub const STRUCTURE_NAMES: &[&str] = &["standard", "artin", "dual", "bkl"];

pub fn kind_by_name(name: &str) -> Result<StructureKind> {
    match name.to_ascii_lowercase().as_str() {
        "standard" | "artin" | "classical" => Ok(StructureKind::Standard),
        "dual" | "bkl" | "birman-ko-lee" => Ok(StructureKind::Dual),
        _ => Err(BraidError::UnknownStructure(name.to_string())),
    }
}

pub fn structure_by_name(name: &str, strands: usize) -> Result<Arc<dyn GarsideStructure>> {
    Ok(StructureId::new(kind_by_name(name)?, strands)?.build())
}

/// A Garside structure on `Br_n` whose simple elements are encoded by the
/// permutations they induce.
///
/// Implementors provide the atom tests; the lattice operations are provided
/// on top of them and only assume that arguments are simple.
pub trait GarsideStructure: Send + Sync + fmt::Debug {
    fn kind(&self) -> StructureKind;

    fn strands(&self) -> usize;

    /// The atoms, in the order used for atom indices.
    fn atoms(&self) -> &[Perm];

    fn delta(&self) -> Perm;

    /// Does atom `atom` left-divide the simple element `a`?
    fn atom_prefix(&self, atom: usize, a: &Perm) -> bool;

    /// Does atom `atom` right-divide the simple element `a`?
    fn atom_suffix(&self, atom: usize, a: &Perm) -> bool;

    /// Whether the permutation encodes a simple element of this structure.
    fn is_simple(&self, p: &Perm) -> bool;

    /// Letter length of a simple element.
    fn norm(&self, a: &Perm) -> usize;

    #[doc(hidden)]
    fn simples_cell(&self) -> &OnceLock<Vec<Perm>>;

    fn id(&self) -> StructureId {
        StructureId { strands: self.strands(), kind: self.kind() }
    }

    fn identity(&self) -> Perm {
        Perm::identity(self.strands())
    }

    fn atom(&self, i: usize) -> Perm {
        self.atoms()[i]
    }

    fn atom_count(&self) -> usize {
        self.atoms().len()
    }

    fn atom_index(&self, p: &Perm) -> Option<usize> {
        self.atoms().iter().position(|a| a == p)
    }

    fn delta_norm(&self) -> usize {
        self.norm(&self.delta())
    }

    fn is_delta(&self, a: &Perm) -> bool {
        *a == self.delta()
    }

    /// `a·b` of two simple elements, as a permutation only.
    fn mul(&self, a: &Perm, b: &Perm) -> Perm {
        a.then(b)
    }

    /// `x⁻¹a`, meaningful when `x ≼ a`.
    fn left_quotient(&self, x: &Perm, a: &Perm) -> Perm {
        x.inverse().then(a)
    }

    /// `a·x⁻¹`, meaningful when `a ⪰ x`.
    fn right_quotient(&self, a: &Perm, x: &Perm) -> Perm {
        a.then(&x.inverse())
    }

    /// `∂a = a⁻¹Δ`.
    fn complement(&self, a: &Perm) -> Perm {
        a.inverse().then(&self.delta())
    }

    /// `∂⁻¹a = Δa⁻¹`.
    fn complement_inv(&self, a: &Perm) -> Perm {
        self.delta().then(&a.inverse())
    }

    /// `τ^k(a) = Δ^{-k} a Δ^k`.
    fn tau(&self, a: &Perm, k: i64) -> Perm {
        let d = self.delta();
        let order = d.order() as i64;
        let k = k.rem_euclid(order);
        let mut dk = self.identity();
        for _ in 0..k {
            dk = dk.then(&d);
        }
        a.conjugated_by(&dk)
    }

    fn tau_atom(&self, atom: usize, k: i64) -> usize {
        let t = self.tau(&self.atom(atom), k);
        self.atom_index(&t).expect("tau permutes the atoms")
    }

    fn meet(&self, a: &Perm, b: &Perm) -> Perm {
        let (mut a, mut b) = (*a, *b);
        let mut out = self.identity();
        'peel: loop {
            for i in 0..self.atom_count() {
                if self.atom_prefix(i, &a) && self.atom_prefix(i, &b) {
                    let x = self.atom(i);
                    out = out.then(&x);
                    a = self.left_quotient(&x, &a);
                    b = self.left_quotient(&x, &b);
                    continue 'peel;
                }
            }
            return out;
        }
    }

    /// Greatest common right divisor `a ∧^⟲ b`.
    fn right_meet(&self, a: &Perm, b: &Perm) -> Perm {
        let (mut a, mut b) = (*a, *b);
        let mut out = self.identity();
        'peel: loop {
            for i in 0..self.atom_count() {
                if self.atom_suffix(i, &a) && self.atom_suffix(i, &b) {
                    let x = self.atom(i);
                    out = x.then(&out);
                    a = self.right_quotient(&a, &x);
                    b = self.right_quotient(&b, &x);
                    continue 'peel;
                }
            }
            return out;
        }
    }

    /// Least common left multiple `a ∨ b`, through `∂` which reverses the
    /// prefix order into the suffix order.
    fn join(&self, a: &Perm, b: &Perm) -> Perm {
        self.complement_inv(&self.right_meet(&self.complement(a), &self.complement(b)))
    }

    fn right_join(&self, a: &Perm, b: &Perm) -> Perm {
        self.complement(&self.meet(&self.complement_inv(a), &self.complement_inv(b)))
    }

    /// `a ≼ b`.
    fn is_prefix(&self, a: &Perm, b: &Perm) -> bool {
        self.meet(a, b) == *a
    }

    /// `b ⪰ a`.
    fn is_suffix(&self, a: &Perm, b: &Perm) -> bool {
        self.right_meet(a, b) == *a
    }

    /// `a·b` if it is simple.
    fn product_if_simple(&self, a: &Perm, b: &Perm) -> Option<Perm> {
        if self.is_prefix(b, &self.complement(a)) {
            Some(a.then(b))
        } else {
            None
        }
    }

    fn starting_set(&self, a: &Perm) -> Vec<usize> {
        (0..self.atom_count()).filter(|&i| self.atom_prefix(i, a)).collect()
    }

    fn finishing_set(&self, a: &Perm) -> Vec<usize> {
        (0..self.atom_count()).filter(|&i| self.atom_suffix(i, a)).collect()
    }

    /// `R(a) = S(∂a)`.
    fn right_complementary_set(&self, a: &Perm) -> Vec<usize> {
        self.starting_set(&self.complement(a))
    }

    /// `L(a) = F(∂⁻¹a)`.
    fn left_complementary_set(&self, a: &Perm) -> Vec<usize> {
        self.finishing_set(&self.complement_inv(a))
    }

    /// `a·b` is left weighted iff `b ∧ ∂a = 1`.
    fn is_left_weighted(&self, a: &Perm, b: &Perm) -> bool {
        let c = self.complement(a);
        !(0..self.atom_count()).any(|i| self.atom_prefix(i, b) && self.atom_prefix(i, &c))
    }

    fn is_right_weighted(&self, a: &Perm, b: &Perm) -> bool {
        let c = self.complement_inv(b);
        !(0..self.atom_count()).any(|i| self.atom_suffix(i, a) && self.atom_suffix(i, &c))
    }

    /// A left-to-right atom word for a simple element.
    fn simple_atoms(&self, a: &Perm) -> Vec<usize> {
        let mut a = *a;
        let mut out = Vec::with_capacity(self.norm(&a));
        'peel: while !a.is_identity() {
            for i in 0..self.atom_count() {
                if self.atom_prefix(i, &a) {
                    out.push(i);
                    a = self.left_quotient(&self.atom(i), &a);
                    continue 'peel;
                }
            }
            unreachable!("non-trivial simple element without a starting atom");
        }
        out
    }

    /// All simple elements, in breadth-first order from the identity.
    fn simples(&self) -> &[Perm] {
        self.simples_cell().get_or_init(|| {
            let mut seen = HashSet::new();
            let mut order = Vec::new();
            let mut queue = VecDeque::new();
            let id = self.identity();
            seen.insert(id);
            queue.push_back(id);
            while let Some(s) = queue.pop_front() {
                order.push(s);
                for i in 0..self.atom_count() {
                    if let Some(t) = self.product_if_simple(&s, &self.atom(i)) {
                        if seen.insert(t) {
                            queue.push_back(t);
                        }
                    }
                }
            }
            order
        })
    }
}
