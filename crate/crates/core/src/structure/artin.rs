use std::sync::OnceLock;

use super::{GarsideStructure, StructureKind};
use crate::perm::Perm;

/// Standard structure: permutation braids, atoms `σ_1 … σ_{n-1}`, `Δ` the
/// half twist.
#[derive(Debug)]
pub struct Standard {
    n: usize,
    atoms: Vec<Perm>,
    delta: Perm,
    simples: OnceLock<Vec<Perm>>,
}

impl Standard {
    pub fn new(n: usize) -> Self {
        let atoms = (0..n - 1).map(|i| Perm::transposition(n, i, i + 1)).collect();
        Standard { n, atoms, delta: Perm::reversal(n), simples: OnceLock::new() }
    }
}

impl GarsideStructure for Standard {
    fn kind(&self) -> StructureKind {
        StructureKind::Standard
    }

    fn strands(&self) -> usize {
        self.n
    }

    fn atoms(&self) -> &[Perm] {
        &self.atoms
    }

    fn delta(&self) -> Perm {
        self.delta
    }

    // σ_i ≼ a iff the strands starting at i and i+1 cross in a.
    fn atom_prefix(&self, atom: usize, a: &Perm) -> bool {
        a.image(atom) > a.image(atom + 1)
    }

    fn atom_suffix(&self, atom: usize, a: &Perm) -> bool {
        let inv = a.inverse();
        inv.image(atom) > inv.image(atom + 1)
    }

    fn is_simple(&self, p: &Perm) -> bool {
        p.strands() == self.n
    }

    fn norm(&self, a: &Perm) -> usize {
        a.inversions()
    }

    fn product_if_simple(&self, a: &Perm, b: &Perm) -> Option<Perm> {
        let ab = a.then(b);
        (ab.inversions() == a.inversions() + b.inversions()).then_some(ab)
    }

    fn simples_cell(&self) -> &OnceLock<Vec<Perm>> {
        &self.simples
    }
}
