use std::sync::OnceLock;

use super::{GarsideStructure, StructureKind};
use crate::perm::Perm;

/// Birman–Ko–Lee structure: band generators `a_{ts}`, `δ = σ_{n-1}⋯σ_1`.
///
/// A simple element is a non-crossing partition of the strands; each block
/// `b_1 < … < b_k` is stored as the cycle `b_1 → b_2 → … → b_k → b_1`.
#[derive(Debug)]
pub struct Dual {
    n: usize,
    atoms: Vec<Perm>,
    pairs: Vec<(usize, usize)>,
    delta: Perm,
    simples: OnceLock<Vec<Perm>>,
}

impl Dual {
    pub fn new(n: usize) -> Self {
        let mut atoms = Vec::new();
        let mut pairs = Vec::new();
        for t in 2..=n {
            for s in 1..t {
                pairs.push((t, s));
                atoms.push(Perm::transposition(n, s - 1, t - 1));
            }
        }
        Dual { n, atoms, pairs, delta: Perm::rotation(n), simples: OnceLock::new() }
    }

    /// Index of the band generator `a_{ts}`, 1-based strands, `t > s`.
    pub fn band_index(n: usize, t: usize, s: usize) -> Option<usize> {
        if !(1 <= s && s < t && t <= n) {
            return None;
        }
        Some((t - 1) * (t - 2) / 2 + (s - 1))
    }

    pub fn band_atom(&self, t: usize, s: usize) -> Option<Perm> {
        Self::band_index(self.n, t, s).map(|i| self.atoms[i])
    }

    /// The pair `(t, s)` of atom `i`.
    pub fn band_pair(&self, i: usize) -> (usize, usize) {
        self.pairs[i]
    }

    fn same_block(a: &Perm, s: usize, t: usize) -> bool {
        let mut i = a.image(s);
        while i != s {
            if i == t {
                return true;
            }
            i = a.image(i);
        }
        false
    }
}

impl GarsideStructure for Dual {
    fn kind(&self) -> StructureKind {
        StructureKind::Dual
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

    fn atom_prefix(&self, atom: usize, a: &Perm) -> bool {
        let (t, s) = self.pairs[atom];
        Self::same_block(a, s - 1, t - 1)
    }

    fn atom_suffix(&self, atom: usize, a: &Perm) -> bool {
        self.atom_prefix(atom, a)
    }

    fn is_simple(&self, p: &Perm) -> bool {
        if p.strands() != self.n {
            return false;
        }
        let cycles = p.cycles();
        let mut block = [0usize; crate::perm::MAX_STRANDS];
        for (b, c) in cycles.iter().enumerate() {
            // increasing inside the block, wrapping to its minimum
            if c.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            for &i in c {
                block[i] = b;
            }
        }
        let n = self.n;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if block[a] != block[c] || block[a] == block[b] {
                        continue;
                    }
                    for d in c + 1..n {
                        if block[d] == block[b] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn norm(&self, a: &Perm) -> usize {
        self.n - a.cycle_count()
    }

    fn simples_cell(&self) -> &OnceLock<Vec<Perm>> {
        &self.simples
    }
}
