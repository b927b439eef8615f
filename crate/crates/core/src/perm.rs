//! Fixed-capacity permutations of strand positions.
//!
//! Both Garside structures store their simple elements as the permutation the
//! braid induces on strand positions. Position `i` is sent to `image(i)`, and
//! products are read left to right: the permutation of `a·b` is
//! `a.then(&b)`, i.e. first `a`, then `b`.

use std::fmt;

/// Largest supported number of strands.
pub const MAX_STRANDS: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    len: u8,
    img: [u8; MAX_STRANDS],
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_STRANDS, "at most {MAX_STRANDS} strands are supported");
        let mut img = [0u8; MAX_STRANDS];
        for (i, slot) in img.iter_mut().enumerate().take(n) {
            *slot = i as u8;
        }
        Perm { len: n as u8, img }
    }

    /// Builds a permutation from its one-line image table. Returns `None` if
    /// the table is not a bijection of `0..len`.
    pub fn from_images(images: &[u8]) -> Option<Self> {
        let n = images.len();
        if n > MAX_STRANDS {
            return None;
        }
        let mut seen = [false; MAX_STRANDS];
        let mut img = [0u8; MAX_STRANDS];
        for (i, &v) in images.iter().enumerate() {
            let v_us = v as usize;
            if v_us >= n || seen[v_us] {
                return None;
            }
            seen[v_us] = true;
            img[i] = v;
        }
        Some(Perm { len: n as u8, img })
    }

    /// The transposition exchanging positions `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Perm::identity(n);
        p.img.swap(i, j);
        p
    }

    /// The order-reversing permutation `i ↦ n-1-i`.
    pub fn reversal(n: usize) -> Self {
        let mut p = Perm::identity(n);
        for i in 0..n {
            p.img[i] = (n - 1 - i) as u8;
        }
        p
    }

    /// The rotation `i ↦ i+1 mod n`.
    pub fn rotation(n: usize) -> Self {
        let mut p = Perm::identity(n);
        for i in 0..n {
            p.img[i] = ((i + 1) % n) as u8;
        }
        p
    }

    #[inline]
    pub fn strands(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.img[i] as usize
    }

    #[inline]
    pub fn images(&self) -> &[u8] {
        &self.img[..self.len as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images().iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.len, other.len);
        let mut out = *self;
        for i in 0..self.len as usize {
            out.img[i] = other.img[self.img[i] as usize];
        }
        out
    }

    pub fn inverse(&self) -> Perm {
        let mut out = *self;
        for i in 0..self.len as usize {
            out.img[self.img[i] as usize] = i as u8;
        }
        out
    }

    /// Conjugate `c⁻¹·self·c` in product order.
    pub fn conjugated_by(&self, c: &Perm) -> Perm {
        c.inverse().then(self).then(c)
    }

    pub fn inversions(&self) -> usize {
        let v = self.images();
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Cycles of the permutation, each listed from its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.strands();
        let mut seen = [false; MAX_STRANDS];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.image(i);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// Order of the permutation in the symmetric group.
    pub fn order(&self) -> usize {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycles()
            .iter()
            .map(Vec::len)
            .fold(1, |acc, l| acc / gcd(acc, l) * l)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images())
    }
}
