//! Braid words over a chosen structure.
//!
//! Grammar, whitespace separated:
//!
//! ```text
//! word := item*
//! item := INT | NAME ('^' INT)?
//! ```
//!
//! A non-zero integer `±i` is `σ_i^{±1}` in either structure (in the dual one
//! `σ_i` is the band generator `a_{i+1,i}`). Names are `s<i>`, `a<t>_<s>`,
//! `a<t><s>` for single-digit strands, `a` for `a_{31}`, `b` for `a_{42}`, and
//! `D` or `d` for the Garside element of the structure. A Garside power in the
//! middle of a word is moved to the front by twisting the letters before it.

use std::fmt;

use crate::error::{BraidError, Result};
use crate::structure::{Dual, GarsideStructure, StructureId, StructureKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub atom: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(atom: usize) -> Self {
        Letter { atom, inverse: false }
    }

    pub fn neg(atom: usize) -> Self {
        Letter { atom, inverse: true }
    }

    pub fn inverted(self) -> Self {
        Letter { atom: self.atom, inverse: !self.inverse }
    }
}

/// `D^garside_power · letters`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    pub structure: StructureId,
    pub garside_power: i64,
    pub letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(structure: StructureId) -> Self {
        BraidWord { structure, garside_power: 0, letters: Vec::new() }
    }

    pub fn from_letters(structure: StructureId, letters: Vec<Letter>) -> Self {
        BraidWord { structure, garside_power: 0, letters }
    }

    pub fn is_identity_word(&self) -> bool {
        self.garside_power == 0 && self.letters.is_empty()
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, g: &dyn GarsideStructure, other: &BraidWord) -> BraidWord {
        // self · D^q · w  =  D^q · τ^q(self letters) · w
        let q = other.garside_power;
        let mut letters: Vec<Letter> = self
            .letters
            .iter()
            .map(|l| Letter { atom: g.tau_atom(l.atom, q), inverse: l.inverse })
            .collect();
        letters.extend_from_slice(&other.letters);
        BraidWord { structure: self.structure, garside_power: self.garside_power + q, letters }
    }

    /// Word for the inverse element.
    pub fn inverse(&self, g: &dyn GarsideStructure) -> BraidWord {
        // (D^p w)^{-1} = w^{-1} D^{-p} = D^{-p} τ^{-p}(w^{-1})
        let p = self.garside_power;
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|l| Letter { atom: g.tau_atom(l.atom, -p), inverse: !l.inverse })
            .collect();
        BraidWord { structure: self.structure, garside_power: -p, letters }
    }

    pub fn text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items = Vec::new();
        if self.garside_power != 0 {
            items.push(format!("D^{}", self.garside_power));
        }
        let n = self.structure.strands;
        for l in &self.letters {
            let item = match self.structure.kind {
                StructureKind::Standard => {
                    let i = l.atom as i64 + 1;
                    if l.inverse { -i } else { i }.to_string()
                }
                StructureKind::Dual => {
                    let (t, s) = band_pair(n, l.atom);
                    if t == s + 1 {
                        let i = s as i64;
                        if l.inverse { -i } else { i }.to_string()
                    } else if l.inverse {
                        format!("a{t}_{s}^-1")
                    } else {
                        format!("a{t}_{s}")
                    }
                }
            };
            items.push(item);
        }
        f.write_str(&items.join(" "))
    }
}

fn band_pair(n: usize, atom: usize) -> (usize, usize) {
    let mut i = 0;
    for t in 2..=n {
        for s in 1..t {
            if i == atom {
                return (t, s);
            }
            i += 1;
        }
    }
    panic!("atom index {atom} out of range");
}

enum Item {
    Lett(Vec<Letter>),
    Garside(i64),
}

/// Parses a braid word. `g` must be built from `structure`.
pub fn parse_word(text: &str, g: &dyn GarsideStructure) -> Result<BraidWord> {
    let structure = g.id();
    let mut word = BraidWord::identity(structure);
    for (pos, tok) in tokens(text) {
        match parse_item(tok, pos, structure)? {
            Item::Lett(ls) => word.letters.extend(ls),
            Item::Garside(k) => {
                word = word.concat(g, &BraidWord { structure, garside_power: k, letters: vec![] })
            }
        }
    }
    Ok(word)
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split_whitespace().map(move |t| (t.as_ptr() as usize - text.as_ptr() as usize, t))
}

fn parse_item(tok: &str, pos: usize, sid: StructureId) -> Result<Item> {
    let err = |message: String| BraidError::Parse { position: pos, message };
    if let Some(first) = tok.chars().next() {
        if first == '-' || first == '+' || first.is_ascii_digit() {
            let i: i64 = tok.parse().map_err(|_| err(format!("invalid integer token {tok:?}")))?;
            if i == 0 {
                return Err(err("atom index 0 is not allowed".into()));
            }
            let idx = i.unsigned_abs() as usize;
            return Ok(Item::Lett(vec![sigma_letter(idx, i < 0, tok, sid)?]));
        }
    }
    let (name, power) = match tok.split_once('^') {
        Some((name, p)) => {
            let p: i64 = p.parse().map_err(|_| err(format!("invalid exponent in {tok:?}")))?;
            (name, p)
        }
        None => (tok, 1),
    };
    if name == "D" || name == "d" {
        return Ok(Item::Garside(power));
    }
    let base = parse_name(name, tok, sid).map_err(|e| match e {
        BraidError::Parse { message, .. } => err(message),
        other => other,
    })?;
    let mut out = Vec::new();
    let reps = power.unsigned_abs() as usize;
    for _ in 0..reps {
        if power > 0 {
            out.extend_from_slice(&base);
        } else {
            out.extend(base.iter().rev().map(|l| l.inverted()));
        }
    }
    Ok(Item::Lett(out))
}

fn sigma_letter(i: usize, inverse: bool, tok: &str, sid: StructureId) -> Result<Letter> {
    let n = sid.strands;
    if i == 0 || i >= n {
        return Err(BraidError::AtomOutOfRange { token: tok.to_string(), strands: n });
    }
    let atom = match sid.kind {
        StructureKind::Standard => i - 1,
        StructureKind::Dual => Dual::band_index(n, i + 1, i).unwrap(),
    };
    Ok(Letter { atom, inverse })
}

/// Letters for `a_{ts}` in the given structure.
fn band_letters(t: usize, s: usize, tok: &str, sid: StructureId) -> Result<Vec<Letter>> {
    let n = sid.strands;
    if !(1 <= s && s < t && t <= n) {
        return Err(BraidError::AtomOutOfRange { token: tok.to_string(), strands: n });
    }
    Ok(match sid.kind {
        StructureKind::Dual => vec![Letter::pos(Dual::band_index(n, t, s).unwrap())],
        StructureKind::Standard => {
            // (σ_{t-1} ⋯ σ_{s+1}) σ_s (σ_{s+1}^{-1} ⋯ σ_{t-1}^{-1}), 0-based atoms
            let mut v: Vec<Letter> = (s + 1..t).rev().map(|i| Letter::pos(i - 1)).collect();
            v.push(Letter::pos(s - 1));
            v.extend((s + 1..t).map(|i| Letter::neg(i - 1)));
            v
        }
    })
}

fn parse_name(name: &str, tok: &str, sid: StructureId) -> Result<Vec<Letter>> {
    let bad = || BraidError::Parse { position: 0, message: format!("unknown token {tok:?}") };
    match name {
        "a" => return band_letters(3, 1, tok, sid),
        "b" => return band_letters(4, 2, tok, sid),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix('s') {
        let i: usize = rest.parse().map_err(|_| bad())?;
        return Ok(vec![sigma_letter(i, false, tok, sid)?]);
    }
    if let Some(rest) = name.strip_prefix('a') {
        let (t, s) = if let Some((t, s)) = rest.split_once('_') {
            (t.parse().map_err(|_| bad())?, s.parse().map_err(|_| bad())?)
        } else if rest.len() == 2 && rest.bytes().all(|b| b.is_ascii_digit()) {
            let b = rest.as_bytes();
            ((b[0] - b'0') as usize, (b[1] - b'0') as usize)
        } else {
            return Err(bad());
        };
        return band_letters(t, s, tok, sid);
    }
    Err(bad())
}

/// Exponent sum `e(w)`.
pub fn algebraic_length(w: &BraidWord, g: &dyn GarsideStructure) -> i64 {
    let letters: i64 = w.letters.iter().map(|l| if l.inverse { -1 } else { 1 }).sum();
    w.garside_power * g.delta_norm() as i64 + letters
}

/// Largest strand index a word mentions, used to infer `n` when it is not
/// given. Returns at least 2.
pub fn strands_mentioned(text: &str) -> usize {
    let mut n = 2;
    for tok in text.split_whitespace() {
        let name = tok.split('^').next().unwrap_or("");
        let m = if let Ok(i) = tok.parse::<i64>() {
            i.unsigned_abs() as usize + 1
        } else if name == "a" {
            3
        } else if name == "b" {
            4
        } else if let Some(rest) = name.strip_prefix('s') {
            rest.parse::<usize>().map(|i| i + 1).unwrap_or(0)
        } else if let Some(rest) = name.strip_prefix('a') {
            if let Some((t, _)) = rest.split_once('_') {
                t.parse().unwrap_or(0)
            } else if rest.len() == 2 {
                rest[..1].parse().unwrap_or(0)
            } else {
                0
            }
        } else {
            0
        };
        n = n.max(m);
    }
    n
}
