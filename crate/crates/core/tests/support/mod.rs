#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use braidqp::conjugacy::{
    cycling, decycling, initial_factor, sliding_circuits, slide_to_circuit, SearchLimits,
};
use braidqp::recognition::{conjugate_atoms, match_form_dual_b, recognize, RecognitionQuery};
use braidqp::structure::dual::Dual;
use braidqp::words::Letter;
use braidqp::{BraidWord, GarsideStructure, NormalForm, Perm, StructureKind};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($c:expr, $($fmt:tt)*) => {
        if !$c {
            return Err(format!($($fmt)*));
        }
    };
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// permutation-level oracles

pub fn oracle_norm(kind: StructureKind, p: &Perm) -> usize {
    let img = p.images();
    let n = img.len();
    match kind {
        StructureKind::Standard => {
            let mut c = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if img[i] > img[j] {
                        c += 1;
                    }
                }
            }
            c
        }
        StructureKind::Dual => {
            let mut seen = vec![false; n];
            let mut cycles = 0;
            for i in 0..n {
                if !seen[i] {
                    cycles += 1;
                    let mut j = i;
                    while !seen[j] {
                        seen[j] = true;
                        j = img[j] as usize;
                    }
                }
            }
            n - cycles
        }
    }
}

pub fn all_perms(n: usize) -> Vec<Perm> {
    fn rec(cur: &mut Vec<u8>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        let n = used.len();
        if cur.len() == n {
            out.push(Perm::from_images(cur).unwrap());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i as u8);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Simples as the interval `[1, Δ]` of the length order on `S_n`.
pub fn oracle_simples(g: &dyn GarsideStructure) -> Vec<Perm> {
    let k = g.kind();
    let d = g.delta();
    let top = oracle_norm(k, &d);
    all_perms(g.strands())
        .into_iter()
        .filter(|p| oracle_norm(k, p) + oracle_norm(k, &p.inverse().then(&d)) == top)
        .collect()
}

pub fn oracle_prefix(g: &dyn GarsideStructure, a: &Perm, b: &Perm) -> bool {
    let k = g.kind();
    oracle_norm(k, a) + oracle_norm(k, &a.inverse().then(b)) == oracle_norm(k, b)
}

pub fn oracle_suffix(g: &dyn GarsideStructure, a: &Perm, b: &Perm) -> bool {
    let k = g.kind();
    oracle_norm(k, a) + oracle_norm(k, &b.then(&a.inverse())) == oracle_norm(k, b)
}

/// Greatest common lower bound in `simples` for the order `le`.
fn oracle_bound(simples: &[Perm], below: impl Fn(&Perm) -> bool, le: impl Fn(&Perm, &Perm) -> bool, greatest: bool) -> Option<Perm> {
    let cands: Vec<&Perm> = simples.iter().filter(|c| below(c)).collect();
    cands
        .iter()
        .find(|c| cands.iter().all(|o| if greatest { le(o, c) } else { le(c, o) }))
        .map(|c| **c)
}

// ---------------------------------------------------------------------------
// Artin action on the free group, an independent test of group equality

fn free_reduce(w: &mut Vec<i32>) {
    let mut out: Vec<i32> = Vec::with_capacity(w.len());
    for &x in w.iter() {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    *w = out;
}

fn invert_free(w: &[i32]) -> Vec<i32> {
    w.iter().rev().map(|x| -x).collect()
}

/// Images of the free generators under the automorphism of `σ`-letters
/// `±i` (1-based).
pub fn artin_action(n: usize, sigma: &[i32]) -> Vec<Vec<i32>> {
    let mut images: Vec<Vec<i32>> = (1..=n as i32).map(|j| vec![j]).collect();
    for &l in sigma {
        let i = l.unsigned_abs() as i32;
        let sub = |g: i32| -> Vec<i32> {
            let (a, b) = (i, i + 1);
            if l > 0 {
                if g == a {
                    vec![a, b, -a]
                } else if g == b {
                    vec![a]
                } else {
                    vec![g]
                }
            } else if g == a {
                vec![b]
            } else if g == b {
                vec![-b, a, b]
            } else {
                vec![g]
            }
        };
        for img in images.iter_mut() {
            let mut out = Vec::new();
            for &x in img.iter() {
                if x > 0 {
                    out.extend(sub(x));
                } else {
                    out.extend(invert_free(&sub(-x)));
                }
            }
            free_reduce(&mut out);
            *img = out;
        }
    }
    images
}

fn delta_sigma(g: &dyn GarsideStructure) -> Vec<i32> {
    let n = g.strands() as i32;
    match g.kind() {
        StructureKind::Standard => {
            let mut w = Vec::new();
            for top in 1..n {
                for i in (1..=top).rev() {
                    w.push(i);
                }
            }
            w
        }
        StructureKind::Dual => (1..n).rev().collect(),
    }
}

fn atom_sigma(g: &dyn GarsideStructure, atom: usize) -> Vec<i32> {
    match g.kind() {
        StructureKind::Standard => vec![atom as i32 + 1],
        StructureKind::Dual => {
            let (t, s) = Dual::new(g.strands()).band_pair(atom);
            let (t, s) = (t as i32, s as i32);
            let conj: Vec<i32> = (s + 1..t).rev().collect();
            let mut w = conj.clone();
            w.push(s);
            w.extend(invert_free(&conj));
            w
        }
    }
}

pub fn word_sigma(g: &dyn GarsideStructure, w: &BraidWord) -> Vec<i32> {
    let d = delta_sigma(g);
    let mut out = Vec::new();
    for _ in 0..w.garside_power.max(0) {
        out.extend_from_slice(&d);
    }
    for _ in 0..(-w.garside_power).max(0) {
        out.extend(invert_free(&d));
    }
    for l in &w.letters {
        let a = atom_sigma(g, l.atom);
        if l.inverse {
            out.extend(invert_free(&a));
        } else {
            out.extend(a);
        }
    }
    out
}

pub fn nf_sigma(g: &dyn GarsideStructure, x: &NormalForm) -> Vec<i32> {
    word_sigma(g, &x.to_word(g))
}

pub fn same_element_sigma(n: usize, a: &[i32], b: &[i32]) -> bool {
    artin_action(n, a) == artin_action(n, b)
}

// ---------------------------------------------------------------------------
// normal forms by full recomputation

/// Normal form of `Δ^p s_1 ⋯ s_m` by repeated local sliding until every
/// adjacent pair is left weighted.
pub fn bubble_normal_form(g: &dyn GarsideStructure, p: i64, simples: &[Perm]) -> NormalForm {
    let d = g.delta();
    let mut inf = p;
    let mut f: Vec<Perm> = simples.to_vec();
    loop {
        let mut changed = false;
        for i in 0..f.len().saturating_sub(1) {
            let s = g.meet(&f[i + 1], &g.complement(&f[i]));
            if !s.is_identity() {
                f[i] = f[i].then(&s);
                f[i + 1] = g.left_quotient(&s, &f[i + 1]);
                changed = true;
            }
        }
        // move Δ factors to the front, dropping 1s
        let mut out = Vec::new();
        for x in &f {
            if *x == d {
                inf += 1;
                for y in out.iter_mut() {
                    *y = g.tau(y, 1);
                }
                changed = true;
            } else if x.is_identity() {
                changed = true;
            } else {
                out.push(*x);
            }
        }
        f = out;
        if !changed {
            break;
        }
    }
    NormalForm { inf, factors: f }
}

// ---------------------------------------------------------------------------
// random data

pub fn random_atom(g: &dyn GarsideStructure, r: &mut ChaCha8Rng) -> usize {
    r.gen_range(0..g.atom_count())
}

pub fn random_proper_simple(g: &dyn GarsideStructure, r: &mut ChaCha8Rng) -> Perm {
    let d = g.delta();
    loop {
        let s = *g.simples().choose(r).unwrap();
        if !s.is_identity() && s != d {
            return s;
        }
    }
}

pub fn random_simple(g: &dyn GarsideStructure, r: &mut ChaCha8Rng) -> Perm {
    *g.simples().choose(r).unwrap()
}

/// Positive element given by up to `m` random simples.
pub fn random_positive(g: &dyn GarsideStructure, r: &mut ChaCha8Rng, m: usize) -> NormalForm {
    let k = r.gen_range(0..=m);
    let s: Vec<Perm> = (0..k).map(|_| random_simple(g, r)).collect();
    NormalForm::from_simples(g, &s)
}

/// `Δ^p` times up to `m` simples, `p ∈ [lo, hi]`.
pub fn random_element(g: &dyn GarsideStructure, r: &mut ChaCha8Rng, lo: i64, hi: i64, m: usize) -> NormalForm {
    let x = random_positive(g, r, m);
    NormalForm::delta_power(r.gen_range(lo..=hi)).multiply(g, &x)
}

pub fn random_word(g: &dyn GarsideStructure, r: &mut ChaCha8Rng, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let a = random_atom(g, r);
            if r.gen_bool(0.5) {
                Letter::pos(a)
            } else {
                Letter::neg(a)
            }
        })
        .collect();
    BraidWord::from_letters(g.id(), letters)
}

pub struct Instance {
    pub x: NormalForm,
    pub query: RecognitionQuery,
}

/// `(P^{-1}x^kP)(Q^{-1}y^lQ)` with `ℓ(P), ℓ(Q) ≤ 3` and `k + l ≤ 5`.
pub fn random_yes_instance(g: &dyn GarsideStructure, r: &mut ChaCha8Rng) -> Instance {
    let k = r.gen_range(1..=4);
    let l = r.gen_range(1..=5 - k);
    let (x, y) = (random_atom(g, r), random_atom(g, r));
    let p = random_element(g, r, -1, 1, 3);
    let q = random_element(g, r, -1, 1, 3);
    let xp = NormalForm::atom_power(g, x, k).conjugate(g, &p);
    let yq = NormalForm::atom_power(g, y, l).conjugate(g, &q);
    Instance { x: xp.multiply(g, &yq), query: RecognitionQuery::pair(x, k, y, l).unwrap() }
}

// ---------------------------------------------------------------------------
// checks

pub fn check_simples_and_norms(g: &dyn GarsideStructure, expected: usize) -> Check {
    let simples = g.simples();
    ensure!(simples.len() == expected, "{} simples, expected {expected}", simples.len());
    let oracle: HashSet<Perm> = oracle_simples(g).into_iter().collect();
    let mine: HashSet<Perm> = simples.iter().copied().collect();
    ensure!(oracle == mine, "simple set differs from the length-interval oracle");
    for p in all_perms(g.strands()) {
        ensure!(g.is_simple(&p) == oracle.contains(&p), "is_simple wrong on {p:?}");
    }
    for s in simples {
        ensure!(g.norm(s) == oracle_norm(g.kind(), s), "norm of {s:?}");
        let atoms = g.simple_atoms(s);
        ensure!(atoms.len() == g.norm(s), "atom word length of {s:?}");
        let prod = atoms.iter().fold(g.identity(), |acc, &a| acc.then(&g.atom(a)));
        ensure!(prod == *s, "atom word of {s:?} multiplies back wrongly");
    }
    Ok(())
}

pub fn check_lattice(g: &dyn GarsideStructure) -> Check {
    let simples = g.simples();
    for a in simples {
        for b in simples {
            ensure!(g.is_prefix(a, b) == oracle_prefix(g, a, b), "prefix {a:?} {b:?}");
            ensure!(g.is_suffix(a, b) == oracle_suffix(g, a, b), "suffix {a:?} {b:?}");
            let m = oracle_bound(simples, |c| oracle_prefix(g, c, a) && oracle_prefix(g, c, b), |u, v| oracle_prefix(g, u, v), true);
            ensure!(Some(g.meet(a, b)) == m, "meet {a:?} {b:?}");
            let j = oracle_bound(simples, |c| oracle_prefix(g, a, c) && oracle_prefix(g, b, c), |u, v| oracle_prefix(g, u, v), false);
            ensure!(Some(g.join(a, b)) == j, "join {a:?} {b:?}");
            let rm = oracle_bound(simples, |c| oracle_suffix(g, c, a) && oracle_suffix(g, c, b), |u, v| oracle_suffix(g, u, v), true);
            ensure!(Some(g.right_meet(a, b)) == rm, "right meet {a:?} {b:?}");
            let rj = oracle_bound(simples, |c| oracle_suffix(g, a, c) && oracle_suffix(g, b, c), |u, v| oracle_suffix(g, u, v), false);
            ensure!(Some(g.right_join(a, b)) == rj, "right join {a:?} {b:?}");
            ensure!(g.meet(a, &g.join(a, b)) == *a, "absorption {a:?} {b:?}");
        }
        for i in 0..g.atom_count() {
            let x = g.atom(i);
            ensure!(g.atom_prefix(i, a) == oracle_prefix(g, &x, a), "atom prefix {i} {a:?}");
            ensure!(g.atom_suffix(i, a) == oracle_suffix(g, &x, a), "atom suffix {i} {a:?}");
        }
    }
    for a in simples {
        for b in simples {
            let ab = g.meet(a, b);
            let jab = g.join(a, b);
            for c in simples {
                ensure!(g.meet(&ab, c) == g.meet(a, &g.meet(b, c)), "meet associativity");
                ensure!(g.join(&jab, c) == g.join(a, &g.join(b, c)), "join associativity");
            }
        }
    }
    Ok(())
}

/// `R(a)`: atoms `x` with `ax` simple.
pub fn oracle_r(g: &dyn GarsideStructure, a: &Perm) -> Vec<usize> {
    let k = g.kind();
    (0..g.atom_count())
        .filter(|&i| {
            let ax = a.then(&g.atom(i));
            oracle_norm(k, &ax) == oracle_norm(k, a) + 1 && oracle_prefix(g, &ax, &g.delta())
        })
        .collect()
}

/// `L(a)`: atoms `x` with `xa` simple.
pub fn oracle_l(g: &dyn GarsideStructure, a: &Perm) -> Vec<usize> {
    let k = g.kind();
    (0..g.atom_count())
        .filter(|&i| {
            let xa = g.atom(i).then(a);
            oracle_norm(k, &xa) == oracle_norm(k, a) + 1 && oracle_prefix(g, &xa, &g.delta())
        })
        .collect()
}

/// `∂²(a) = τ(a)`, `S(∂a) = R(a)` and `F(a) = L(∂a)`.
pub fn check_complements(g: &dyn GarsideStructure) -> Check {
    for a in g.simples() {
        let b = g.complement(a);
        ensure!(a.then(&b) == g.delta(), "a·∂a ≠ Δ for {a:?}");
        ensure!(g.complement(&b) == g.tau(a, 1), "∂² ≠ τ on {a:?}");
        ensure!(g.complement_inv(&b) == *a, "∂^-1 ∂ ≠ 1 on {a:?}");
        ensure!(g.right_complementary_set(a) == oracle_r(g, a), "R({a:?})");
        ensure!(g.left_complementary_set(a) == oracle_l(g, a), "L({a:?})");
        ensure!(g.starting_set(&b) == oracle_r(g, a), "S(∂a) ≠ R(a) for {a:?}");
        ensure!(g.finishing_set(a) == oracle_l(g, &b), "F(a) ≠ L(∂a) for {a:?}");
    }
    Ok(())
}

/// `S(W) = 𝒜 ∖ L(W)` and `F(W) = 𝒜 ∖ R(W)` on every simple.
pub fn complement_sets_partition_atoms(g: &dyn GarsideStructure) -> bool {
    let all: Vec<usize> = (0..g.atom_count()).collect();
    g.simples().iter().all(|w| {
        let s = g.starting_set(w);
        let l = oracle_l(g, w);
        let f = g.finishing_set(w);
        let r = oracle_r(g, w);
        let cs: Vec<usize> = all.iter().copied().filter(|i| !l.contains(i)).collect();
        let cf: Vec<usize> = all.iter().copied().filter(|i| !r.contains(i)).collect();
        s == cs && f == cf
    })
}

/// `a ∨ b = ⟨ab⟩^m` for distinct atoms of a standard structure.
pub fn check_atom_joins(g: &dyn GarsideStructure) -> Check {
    for i in 0..g.atom_count() {
        for j in 0..g.atom_count() {
            if i == j {
                continue;
            }
            let (a, b) = (g.atom(i), g.atom(j));
            let m = if i.abs_diff(j) == 1 { 3 } else { 2 };
            let mut w = g.identity();
            for t in 0..m {
                w = w.then(if t % 2 == 0 { &a } else { &b });
            }
            ensure!(g.join(&a, &b) == w, "join of atoms {i} {j}");
        }
    }
    Ok(())
}

/// If `a ≼ Ab` and `a ⋠ A` then `Ab = aA`.
pub fn check_atom_absorption(g: &dyn GarsideStructure) -> Check {
    for big_a in g.simples() {
        let an = NormalForm::from_simple(g, big_a);
        for i in 0..g.atom_count() {
            for j in 0..g.atom_count() {
                let mut ab = an.clone();
                ab.right_multiply(g, &g.atom(j));
                let a_le_ab = g.atom_prefix(i, &ab.head(g));
                if a_le_ab && !g.atom_prefix(i, big_a) {
                    let aa = an.left_multiply(g, &g.atom(i));
                    ensure!(ab == aa, "Ab ≠ aA for A={big_a:?}, a={i}, b={j}");
                }
            }
        }
    }
    Ok(())
}

/// Positive words of length `≤ max_len`: simple iff no equivalent word has a
/// square, with equivalence classes enumerated by braid relations.
pub fn check_square_free(g: &dyn GarsideStructure, max_len: usize) -> Check {
    let m = g.atom_count();
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for a in 0..m {
                let mut v: Vec<usize> = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    for w in words {
        let class = word_class(&w);
        let square_free = class.iter().all(|v| v.windows(2).all(|p| p[0] != p[1]));
        let nf = NormalForm::from_word(g, &BraidWord::from_letters(g.id(), w.iter().map(|&a| Letter::pos(a)).collect()));
        let simple = (nf.inf == 0 && nf.len() <= 1) || (nf.inf == 1 && nf.is_empty());
        ensure!(simple == square_free, "word {w:?}: simple={simple}, square free={square_free}");
    }
    Ok(())
}

fn word_class(w: &[usize]) -> HashSet<Vec<usize>> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue = VecDeque::from([w.to_vec()]);
    seen.insert(w.to_vec());
    while let Some(v) = queue.pop_front() {
        let mut push = |u: Vec<usize>| {
            if seen.insert(u.clone()) {
                queue.push_back(u);
            }
        };
        for i in 0..v.len().saturating_sub(1) {
            if v[i].abs_diff(v[i + 1]) >= 2 {
                let mut u = v.clone();
                u.swap(i, i + 1);
                push(u);
            }
        }
        for i in 0..v.len().saturating_sub(2) {
            if v[i] == v[i + 2] && v[i].abs_diff(v[i + 1]) == 1 {
                let mut u = v.clone();
                u[i] = v[i + 1];
                u[i + 1] = v[i];
                u[i + 2] = v[i + 1];
                push(u);
            }
        }
    }
    seen
}

/// Every simple is the join of its starting set.
pub fn check_join_of_starting_set(g: &dyn GarsideStructure) -> Check {
    for a in g.simples() {
        let j = g.starting_set(a).iter().fold(g.identity(), |acc, &i| g.join(&acc, &g.atom(i)));
        ensure!(j == *a, "{a:?} is not the join of its starting set");
    }
    Ok(())
}

/// `xy ⋠ δ` implies `y ∨ x^{-1}(x ∨ y) = x ∨ y`.
pub fn check_atom_pair_join(g: &dyn GarsideStructure) -> Check {
    let mut hits = 0;
    for i in 0..g.atom_count() {
        for j in 0..g.atom_count() {
            let (x, y) = (g.atom(i), g.atom(j));
            if g.product_if_simple(&x, &y).is_some() {
                continue;
            }
            hits += 1;
            let xy = g.join(&x, &y);
            let d = g.left_quotient(&x, &xy);
            ensure!(g.join(&y, &d) == xy, "atoms {i} {j}");
        }
    }
    ensure!(hits > 0, "no atom pair with xy not simple");
    Ok(())
}

/// `ι(A²P) = ι(AP)` for random simple `A` and positive `P`.
pub fn check_square_prefix_head(g: &dyn GarsideStructure, cases: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    for _ in 0..cases {
        let a = random_simple(g, &mut r);
        let p = random_positive(g, &mut r, 4);
        let ap = p.left_multiply(g, &a);
        let aap = ap.left_multiply(g, &a);
        ensure!(aap.head(g) == ap.head(g), "A={a:?}, P={p:?}");
        ensure!(g.starting_set(&aap.head(g)) == g.starting_set(&ap.head(g)), "S differs");
    }
    Ok(())
}

/// For `X = A·x^k·∂A` in normal form and `inf Y = 0`: `δ ≼ XY` or
/// `ι(XY) = A`. Returns the number of instances.
pub fn check_palindromic_head(g: &dyn GarsideStructure, cases: usize, seed: u64) -> Result<usize, String> {
    let mut r = rng(seed);
    let mut done = 0;
    let mut tries = 0;
    while done < cases {
        tries += 1;
        ensure!(tries < 200 * cases, "could not sample instances");
        let a = random_proper_simple(g, &mut r);
        let b = g.complement(&a);
        let x = random_atom(g, &mut r);
        let k = r.gen_range(1..=3);
        let mut parts = vec![a];
        parts.extend(std::iter::repeat(g.atom(x)).take(k));
        parts.push(b);
        let big_x = NormalForm::from_simples(g, &parts);
        if big_x.inf != 0 || big_x.factors != parts {
            continue;
        }
        let y = random_positive(g, &mut r, 3);
        if y.inf != 0 {
            continue;
        }
        let xy = big_x.multiply(g, &y);
        ensure!(xy.inf >= 1 || xy.head(g) == a, "X={big_x:?}, Y={y:?}");
        done += 1;
    }
    Ok(done)
}

/// `ℓ(XY) ≤ ℓ(X) + ℓ(Y)` on random elements.
pub fn check_length_subadditive(g: &dyn GarsideStructure, cases: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    for _ in 0..cases {
        let x = random_element(g, &mut r, -2, 2, 4);
        let y = random_element(g, &mut r, -2, 2, 4);
        ensure!(x.multiply(g, &y).len() <= x.len() + y.len(), "ℓ(XY) > ℓ(X)+ℓ(Y)");
    }
    Ok(())
}

/// `Δ ∧ XY = Δ ∧ XY_1` for positive `X, Y`.
pub fn check_head_through_first_factor(g: &dyn GarsideStructure, cases: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    for _ in 0..cases {
        let x = random_positive(g, &mut r, 4);
        let y = random_positive(g, &mut r, 4);
        let mut xy1 = x.clone();
        xy1.right_multiply(g, &y.head(g));
        ensure!(x.multiply(g, &y).head(g) == xy1.head(g), "X={x:?} Y={y:?}");
    }
    Ok(())
}

/// `X` right weighted, `Y` left weighted and `Δ ≼ XY` imply `Δ ≼ X_n Y_1`.
/// Returns the number of instances with `Δ ≼ XY`.
pub fn check_weighted_product_delta(g: &dyn GarsideStructure, cases: usize, seed: u64) -> Result<usize, String> {
    let mut r = rng(seed);
    let mut hits = 0;
    for _ in 0..cases {
        let m = r.gen_range(1..=3);
        let xs: Vec<Perm> = (0..m).map(|_| random_proper_simple(g, &mut r)).collect();
        if !xs.windows(2).all(|w| g.is_right_weighted(&w[0], &w[1])) {
            continue;
        }
        let y = random_positive(g, &mut r, 3);
        if y.inf != 0 || y.is_empty() {
            continue;
        }
        let xy = NormalForm::from_simples(g, &xs).multiply(g, &y);
        if xy.inf >= 1 {
            hits += 1;
            let last = NormalForm::from_simples(g, &[*xs.last().unwrap(), y.factors[0]]);
            ensure!(last.inf >= 1, "X={xs:?} Y={y:?}");
        }
    }
    Ok(hits)
}

/// One-pass updates against full recomputation.
pub fn check_one_pass_updates(g: &dyn GarsideStructure, cases: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    for _ in 0..cases {
        let x = random_element(g, &mut r, -2, 2, 5);
        let a = random_simple(g, &mut r);
        let mut right = x.clone();
        right.right_multiply(g, &a);
        let mut parts = x.factors.clone();
        parts.push(a);
        ensure!(right == bubble_normal_form(g, x.inf, &parts), "X·a for X={x:?} a={a:?}");
        ensure!(right.is_valid(g), "invalid X·a");
        let left = x.left_multiply(g, &a);
        let mut parts = vec![g.tau(&a, x.inf)];
        parts.extend_from_slice(&x.factors);
        ensure!(left == bubble_normal_form(g, x.inf, &parts), "a·X for X={x:?} a={a:?}");
        ensure!(left.is_valid(g), "invalid a·X");
    }
    Ok(())
}

/// Normal forms, products and inverses of random words against the Artin
/// action.
pub fn check_against_artin_action(g: &dyn GarsideStructure, cases: usize, seed: u64) -> Check {
    let n = g.strands();
    let mut r = rng(seed);
    for _ in 0..cases {
        let len = r.gen_range(0..=6);
        let w = random_word(g, &mut r, len);
        let v = random_word(g, &mut r, 3);
        let x = NormalForm::from_word(g, &w);
        ensure!(x.is_valid(g), "invalid normal form for {w}");
        ensure!(same_element_sigma(n, &word_sigma(g, &w), &nf_sigma(g, &x)), "normal form of {w}");
        let y = NormalForm::from_word(g, &v);
        let mut wv = word_sigma(g, &w);
        wv.extend(word_sigma(g, &v));
        ensure!(same_element_sigma(n, &wv, &nf_sigma(g, &x.multiply(g, &y))), "product {w} · {v}");
        ensure!(same_element_sigma(n, &word_sigma(g, &w.inverse(g)), &nf_sigma(g, &x.inverse(g))), "inverse of {w}");
        ensure!(x.multiply(g, &x.inverse(g)).is_identity(), "X·X^-1 ≠ 1 for {w}");
        ensure!(NormalForm::from_word(g, &x.to_word(g)) == x, "to_word round trip for {w}");
    }
    Ok(())
}

/// Sliding circuits: membership, closure under cycling and decycling,
/// constant summit invariants and valid conjugators.
pub fn check_sliding_circuits(g: &dyn GarsideStructure, cases: usize, seed: u64) -> Check {
    let limits = SearchLimits::default();
    let mut r = rng(seed);
    for _ in 0..cases {
        let x = random_element(g, &mut r, -2, 1, 4);
        let sc = sliding_circuits(g, &x, &limits).map_err(|e| e.to_string())?;
        for (z, c) in sc.elements.iter().zip(&sc.conjugators) {
            ensure!(x.conjugate(g, c) == *z, "conjugator does not reach SC element");
            ensure!(z.inf == sc.inf_s() && z.len() == sc.ell_s(), "summit invariants vary");
            ensure!(braidqp::conjugacy::is_in_sc(g, z, &limits).unwrap(), "element not on a circuit");
            if !z.is_empty() {
                ensure!(sc.contains(&cycling(g, z).unwrap()), "not closed under cycling");
                ensure!(sc.contains(&decycling(g, z).unwrap()), "not closed under decycling");
            }
            ensure!(sc.contains(&z.tau(g, 1)), "not closed under τ");
        }
        for a in &sc.arrows {
            let z = &sc.elements[a.source];
            ensure!(z.conjugate_simple(g, &a.label) == sc.elements[a.target], "arrow label");
            if a.black {
                ensure!(g.is_prefix(&a.label, &initial_factor(g, z).unwrap()), "black arrow not below ι");
            }
        }
        let orbits = sc.cycling_orbits(g).map_err(|e| e.to_string())?;
        ensure!(orbits.iter().map(|o| o.len()).sum::<usize>() == sc.len(), "cycling orbits do not partition SC");
        let conj = NormalForm::from_simple(g, &random_simple(g, &mut r));
        let (yt, _) = slide_to_circuit(g, &x.conjugate(g, &conj), &limits).unwrap();
        ensure!(sc.contains(&yt), "a conjugate slides outside SC(X)");
    }
    Ok(())
}

/// On `count` random YES instances with negative summit inf, every cycling and decycling orbit of `SC(X)` holds a matching element.
pub fn check_orbit_universality(g: &dyn GarsideStructure, count: usize, seed: u64) -> Result<usize, String> {
    let limits = SearchLimits::default();
    let mut r = rng(seed);
    let mut done = 0;
    let mut orbits_checked = 0;
    let mut tries = 0;
    while done < count {
        tries += 1;
        ensure!(tries < 100 * count, "could not sample instances");
        let inst = random_yes_instance(g, &mut r);
        let sc = sliding_circuits(g, &inst.x, &limits).map_err(|e| e.to_string())?;
        if sc.inf_s() >= 0 {
            continue;
        }
        let q = inst.query;
        let xs = conjugate_atoms(g, q.x);
        let ys = conjugate_atoms(g, q.y.unwrap());
        let matches: Vec<bool> = sc
            .elements
            .iter()
            .map(|z| match_form_dual_b(g, z, &xs, &ys, q.k, q.l.unwrap()).is_some())
            .collect();
        for orbits in [sc.cycling_orbits(g), sc.decycling_orbits(g)] {
            for o in orbits.map_err(|e| e.to_string())? {
                orbits_checked += 1;
                ensure!(o.iter().any(|&i| matches[i]), "orbit without form match for X={:?}", inst.x);
            }
        }
        done += 1;
    }
    Ok(orbits_checked)
}

/// Random YES instances are recognised, with sound witnesses and the length
/// identity whenever a form match is found.
pub fn check_round_trip(g: &dyn GarsideStructure, cases: usize, seed: u64) -> Check {
    let limits = SearchLimits::default();
    let mut r = rng(seed);
    for _ in 0..cases {
        let inst = random_yes_instance(g, &mut r);
        let res = recognize(g, &inst.x, &inst.query, &limits).map_err(|e| e.to_string())?;
        ensure!(res.verdict, "NO for a YES instance X={:?}, {:?}", inst.x, inst.query);
        let w = res.witness.as_ref().ok_or("YES without witness")?;
        ensure!(w.verify(g, &inst.x, &inst.query), "witness fails for X={:?}", inst.x);
        if let (Some(inf), Some(ell)) = (res.inf_s, res.ell_s) {
            if inf < 0 {
                let need = braidqp::recognition::required_summit_length(g.kind(), inf, inst.query.k, inst.query.l.unwrap());
                ensure!(need == Some(ell as i64), "length identity fails");
            }
        }
    }
    Ok(())
}

/// Random braids with the wrong exponent sum are rejected.
pub fn check_negative(g: &dyn GarsideStructure, cases: usize, seed: u64) -> Check {
    let limits = SearchLimits::default();
    let mut r = rng(seed);
    let mut done = 0;
    while done < cases {
        let x = random_element(g, &mut r, -2, 2, 4);
        let k = r.gen_range(1..=4);
        let l = r.gen_range(1..=5 - k);
        if x.algebraic_length(g) == (k + l) as i64 {
            continue;
        }
        let q = RecognitionQuery::pair(random_atom(g, &mut r), k, random_atom(g, &mut r), l).unwrap();
        let res = recognize(g, &x, &q, &limits).map_err(|e| e.to_string())?;
        ensure!(!res.verdict, "YES for X={x:?} with e ≠ k+l");
        done += 1;
    }
    Ok(())
}
