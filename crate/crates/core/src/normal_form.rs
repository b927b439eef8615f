//! Left normal forms `Δ^p · A_1 ⋯ A_r` and the arithmetic on them.

use crate::perm::Perm;
use crate::structure::GarsideStructure;
use crate::words::BraidWord;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    pub inf: i64,
    pub factors: Vec<Perm>,
}

impl NormalForm {
    pub fn identity() -> Self {
        NormalForm { inf: 0, factors: Vec::new() }
    }

    pub fn delta_power(k: i64) -> Self {
        NormalForm { inf: k, factors: Vec::new() }
    }

    pub fn from_simple(g: &dyn GarsideStructure, s: &Perm) -> Self {
        let mut x = Self::identity();
        x.right_multiply(g, s);
        x
    }

    pub fn from_simples(g: &dyn GarsideStructure, simples: &[Perm]) -> Self {
        let mut x = Self::identity();
        for s in simples {
            x.right_multiply(g, s);
        }
        x
    }

    pub fn atom_power(g: &dyn GarsideStructure, atom: usize, k: usize) -> Self {
        let a = g.atom(atom);
        let mut x = Self::identity();
        for _ in 0..k {
            x.right_multiply(g, &a);
        }
        x
    }

    pub fn from_word(g: &dyn GarsideStructure, w: &BraidWord) -> Self {
        let mut x = Self::delta_power(w.garside_power);
        for l in &w.letters {
            let a = g.atom(l.atom);
            if l.inverse {
                // a^{-1} = Δ^{-1}·∂^{-1}(a)
                x.shift_delta(g, -1);
                x.right_multiply(g, &g.complement_inv(&a));
            } else {
                x.right_multiply(g, &a);
            }
        }
        x
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.inf >= 0
    }

    /// Exponent sum.
    pub fn algebraic_length(&self, g: &dyn GarsideStructure) -> i64 {
        self.inf * g.delta_norm() as i64
            + self.factors.iter().map(|f| g.norm(f) as i64).sum::<i64>()
    }

    /// Checks the defining conditions of a left normal form.
    pub fn is_valid(&self, g: &dyn GarsideStructure) -> bool {
        let d = g.delta();
        self.factors.iter().all(|f| g.is_simple(f) && !f.is_identity() && *f != d)
            && self.factors.windows(2).all(|w| g.is_left_weighted(&w[0], &w[1]))
    }

    /// `X ↦ X·Δ^k`.
    pub fn shift_delta(&mut self, g: &dyn GarsideStructure, k: i64) {
        if k == 0 {
            return;
        }
        for f in &mut self.factors {
            *f = g.tau(f, k);
        }
        self.inf += k;
    }

    /// `τ^k(X)`.
    pub fn tau(&self, g: &dyn GarsideStructure, k: i64) -> NormalForm {
        NormalForm { inf: self.inf, factors: self.factors.iter().map(|f| g.tau(f, k)).collect() }
    }

    /// `X ↦ X·a` by one right-to-left pass of local slidings.
    pub fn right_multiply(&mut self, g: &dyn GarsideStructure, a: &Perm) {
        if a.is_identity() {
            return;
        }
        let mut cur = *a;
        let mut i = self.factors.len();
        self.factors.push(g.identity());
        loop {
            if i == 0 {
                self.factors[0] = cur;
                break;
            }
            let ai = self.factors[i - 1];
            let s = g.meet(&cur, &g.complement(&ai));
            self.factors[i] = g.left_quotient(&s, &cur);
            if s.is_identity() {
                // the remaining pairs are already left weighted
                break;
            }
            cur = ai.then(&s);
            i -= 1;
        }
        self.normalize(g);
    }

    fn normalize(&mut self, g: &dyn GarsideStructure) {
        let d = g.delta();
        let lead = self.factors.iter().take_while(|f| **f == d).count();
        if lead > 0 {
            // Δ^p·Δ^m·B = Δ^{p+m}·B
            self.factors.drain(..lead);
            self.inf += lead as i64;
        }
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
        debug_assert!(self.is_valid(g), "invalid normal form {self:?}");
    }

    /// `a0·X` by one left-to-right pass of local slidings.
    pub fn left_multiply(&self, g: &dyn GarsideStructure, a0: &Perm) -> NormalForm {
        if a0.is_identity() {
            return self.clone();
        }
        // a0·Δ^p = Δ^p·τ^p(a0)
        let mut t = g.tau(a0, self.inf);
        let mut out = Vec::with_capacity(self.factors.len() + 1);
        let mut finished = false;
        for (idx, ai) in self.factors.iter().enumerate() {
            let s = g.meet(ai, &g.complement(&t));
            out.push(t.then(&s));
            if s.is_identity() {
                out.extend_from_slice(&self.factors[idx..]);
                finished = true;
                break;
            }
            t = g.left_quotient(&s, ai);
        }
        if !finished {
            out.push(t);
        }
        let mut x = NormalForm { inf: self.inf, factors: out };
        x.normalize(g);
        x
    }

    pub fn inverse(&self, g: &dyn GarsideStructure) -> NormalForm {
        let p = self.inf;
        let r = self.factors.len() as i64;
        let factors = self
            .factors
            .iter()
            .enumerate()
            .rev()
            .map(|(i, a)| g.tau(&g.complement(a), -p - i as i64 - 1))
            .collect();
        NormalForm { inf: -p - r, factors }
    }

    pub fn multiply(&self, g: &dyn GarsideStructure, y: &NormalForm) -> NormalForm {
        // Δ^p A · Δ^q B = Δ^{p+q} τ^q(A) B
        let mut x = self.clone();
        x.shift_delta(g, y.inf);
        for b in &y.factors {
            x.right_multiply(g, b);
        }
        x
    }

    /// `u^{-1}·X·u`.
    pub fn conjugate(&self, g: &dyn GarsideStructure, u: &NormalForm) -> NormalForm {
        u.inverse(g).multiply(g, &self.multiply(g, u))
    }

    /// `s^{-1}·X·s` for a simple `s`.
    pub fn conjugate_simple(&self, g: &dyn GarsideStructure, s: &Perm) -> NormalForm {
        if s.is_identity() {
            return self.clone();
        }
        // s^{-1} = ∂(s)·Δ^{-1}
        let mut xs = self.clone();
        xs.right_multiply(g, s);
        xs.inf -= 1;
        xs.left_multiply(g, &g.complement(s))
    }

    pub fn pow(&self, g: &dyn GarsideStructure, k: usize) -> NormalForm {
        let mut x = NormalForm::identity();
        for _ in 0..k {
            x = x.multiply(g, self);
        }
        x
    }

    /// Greatest simple prefix `Δ ∧ X` of a positive element.
    pub fn head(&self, g: &dyn GarsideStructure) -> Perm {
        if self.inf > 0 {
            g.delta()
        } else {
            self.factors.first().copied().unwrap_or_else(|| g.identity())
        }
    }

    /// Atom word of the factors with the Garside power in front.
    pub fn to_word(&self, g: &dyn GarsideStructure) -> BraidWord {
        let mut w = BraidWord::identity(g.id());
        w.garside_power = self.inf;
        for f in &self.factors {
            w.letters.extend(g.simple_atoms(f).into_iter().map(crate::words::Letter::pos));
        }
        w
    }

    /// Factors as space separated atom words, with `.` between factors.
    pub fn display(&self, g: &dyn GarsideStructure) -> String {
        let mut parts = Vec::new();
        if self.inf != 0 {
            parts.push(format!("D^{}", self.inf));
        }
        for f in &self.factors {
            let w = BraidWord::from_letters(
                g.id(),
                g.simple_atoms(f).into_iter().map(crate::words::Letter::pos).collect(),
            );
            parts.push(w.text());
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" . ")
        }
    }
}

/// Local sliding `(u, v) ↦ (us, s^{-1}v)` with `s = v ∧ ∂u`.
pub fn local_sliding(g: &dyn GarsideStructure, u: &Perm, v: &Perm) -> (Perm, Perm) {
    let s = g.meet(v, &g.complement(u));
    (u.then(&s), g.left_quotient(&s, v))
}
