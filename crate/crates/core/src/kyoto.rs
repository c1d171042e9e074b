//! The level-`ℓ` perfect crystal for `sl̂_n` and the path model built on it.
//!
//! An element is a multiset of `ℓ` residues in `0..n`; residue `v` stands
//! for the half-integer `v + 1/2`. A path is `⋯ ⊗ b_3 ⊗ b_2 ⊗ b_1`, equal to
//! the ground state outside finitely many positions.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::abacus::{AbacusConfig, DominantWeight};
use crate::crystal::{signature, CartanType, Crystal};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PerfectElement {
    entries: Vec<usize>,
}

impl PerfectElement {
    pub fn new(n: usize, mut entries: Vec<usize>) -> Result<Self> {
        if let Some(&v) = entries.iter().find(|&&v| v >= n) {
            return Err(Error::InvalidParameter(format!("entry {v} out of range for n = {n}")));
        }
        entries.sort_unstable();
        Ok(PerfectElement { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn l(&self) -> usize {
        self.entries.len()
    }

    fn count(&self, v: usize) -> usize {
        self.entries.iter().filter(|&&x| x == v).count()
    }

    fn replace(&self, from: usize, to: usize) -> Option<PerfectElement> {
        let pos = self.entries.iter().position(|&x| x == from)?;
        let mut entries = self.entries.clone();
        entries[pos] = to;
        entries.sort_unstable();
        Some(PerfectElement { entries })
    }
}

impl fmt::Display for PerfectElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|v| format!("{v}.5")).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn below(i: usize, n: usize) -> usize {
    (i + n - 1) % n
}

/// `φ_i(b)`: entries equal to `i - 1 mod n`.
pub fn pc_phi(b: &PerfectElement, n: usize, i: usize) -> usize {
    b.count(below(i, n))
}

/// `ε_i(b)`: entries equal to `i`.
pub fn pc_epsilon(b: &PerfectElement, _n: usize, i: usize) -> usize {
    b.count(i)
}

pub fn pc_f(b: &PerfectElement, n: usize, i: usize) -> Option<PerfectElement> {
    b.replace(below(i, n), i)
}

pub fn pc_e(b: &PerfectElement, n: usize, i: usize) -> Option<PerfectElement> {
    b.replace(i, below(i, n))
}

/// All `C(n + ℓ - 1, ℓ)` elements, sorted.
pub fn perfect_elements(n: usize, l: usize) -> Vec<PerfectElement> {
    fn go(n: usize, l: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<PerfectElement>) {
        if cur.len() == l {
            out.push(PerfectElement { entries: cur.clone() });
            return;
        }
        for v in min..n {
            cur.push(v);
            go(n, l, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, l, 0, &mut Vec::new(), &mut out);
    out
}

/// The perfect crystal itself.
#[derive(Debug, Clone, Copy)]
pub struct PerfectCrystal {
    pub n: usize,
}

impl Crystal for PerfectCrystal {
    type Elem = PerfectElement;

    fn cartan_type(&self) -> CartanType {
        CartanType::Affine(self.n)
    }

    fn f(&self, b: &PerfectElement, i: usize) -> Option<PerfectElement> {
        pc_f(b, self.n, i)
    }

    fn e(&self, b: &PerfectElement, i: usize) -> Option<PerfectElement> {
        pc_e(b, self.n, i)
    }

    fn epsilon(&self, b: &PerfectElement, i: usize) -> Result<usize> {
        Ok(pc_epsilon(b, self.n, i))
    }

    fn phi(&self, b: &PerfectElement, i: usize) -> Result<usize> {
        Ok(pc_phi(b, self.n, i))
    }
}

/// `b_k` of the ground state path: residue `v` appears `m_{v + k mod n}` times.
pub fn ground_state_factor(lambda: &DominantWeight, k: usize) -> PerfectElement {
    let n = lambda.n();
    let mut entries = Vec::with_capacity(lambda.level());
    for v in 0..n {
        entries.extend(std::iter::repeat_n(v, lambda.coeff(v + k)));
    }
    PerfectElement { entries }
}

/// A path, stored as its ground state plus the positions where it differs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Path {
    lambda: DominantWeight,
    overrides: BTreeMap<usize, PerfectElement>,
}

impl Path {
    pub fn ground_state(lambda: &DominantWeight) -> Result<Path> {
        if lambda.level() == 0 {
            return Err(Error::InvalidParameter("ground state needs positive level".into()));
        }
        Ok(Path { lambda: lambda.clone(), overrides: BTreeMap::new() })
    }

    /// Builds a path from factors `b_1, b_2, ...`; trailing ground state
    /// factors may be omitted.
    pub fn from_factors(lambda: &DominantWeight, factors: &[PerfectElement]) -> Result<Path> {
        let mut p = Path::ground_state(lambda)?;
        for (j, b) in factors.iter().enumerate() {
            if b.l() != lambda.level() {
                return Err(Error::LevelMismatch { expected: lambda.level(), found: b.l() });
            }
            if b.entries.iter().any(|&v| v >= lambda.n()) {
                return Err(Error::InvalidParameter(format!("factor {b} out of range")));
            }
            p.set(j + 1, b.clone());
        }
        Ok(p)
    }

    pub fn lambda(&self) -> &DominantWeight {
        &self.lambda
    }

    pub fn n(&self) -> usize {
        self.lambda.n()
    }

    pub fn overrides(&self) -> &BTreeMap<usize, PerfectElement> {
        &self.overrides
    }

    /// `b_k`, `k >= 1`.
    pub fn factor(&self, k: usize) -> PerfectElement {
        self.overrides
            .get(&k)
            .cloned()
            .unwrap_or_else(|| ground_state_factor(&self.lambda, k))
    }

    /// Deepest position that differs from the ground state, or 0.
    pub fn depth(&self) -> usize {
        self.overrides.keys().next_back().copied().unwrap_or(0)
    }

    fn set(&mut self, k: usize, b: PerfectElement) {
        if b == ground_state_factor(&self.lambda, k) {
            self.overrides.remove(&k);
        } else {
            self.overrides.insert(k, b);
        }
    }

    /// Bracket data `[sentinel, b_K, ..., b_1]` for color `i`.
    fn data(&self, i: usize, k: usize) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut data = vec![(0, pc_phi(&self.factor(k + 1), n, i))];
        for j in (1..=k).rev() {
            let b = self.factor(j);
            data.push((pc_epsilon(&b, n, i), pc_phi(&b, n, i)));
        }
        data
    }

    /// `f_i` reading factors `1..=k` explicitly; `k` must be at least the depth.
    pub fn f_with_depth(&self, i: usize, k: usize) -> Option<Path> {
        assert!(k >= self.depth());
        let sig = signature(&self.data(i, k));
        let j = k + 1 - sig.f_factor?;
        let mut out = self.clone();
        out.set(j, pc_f(&self.factor(j), self.n(), i).expect("uncanceled ( has an arrow"));
        Some(out)
    }

    pub fn e_with_depth(&self, i: usize, k: usize) -> Option<Path> {
        assert!(k >= self.depth());
        let sig = signature(&self.data(i, k));
        let pos = sig.e_factor?;
        assert!(pos > 0, "the sentinel carries no )");
        let j = k + 1 - pos;
        let mut out = self.clone();
        out.set(j, pc_e(&self.factor(j), self.n(), i).expect("uncanceled ) has an arrow"));
        Some(out)
    }

    pub fn f(&self, i: usize) -> Option<Path> {
        self.f_with_depth(i, self.depth())
    }

    pub fn e(&self, i: usize) -> Option<Path> {
        self.e_with_depth(i, self.depth())
    }

    pub fn epsilon(&self, i: usize) -> usize {
        signature(&self.data(i, self.depth())).epsilon
    }

    pub fn phi(&self, i: usize) -> usize {
        signature(&self.data(i, self.depth())).phi
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⋯")?;
        for k in (1..=self.depth() + 1).rev() {
            write!(f, " ⊗ {}", self.factor(k))?;
        }
        Ok(())
    }
}

/// Paths for `sl̂_n` under the tensor product rule.
#[derive(Debug, Clone, Copy)]
pub struct PathCrystal {
    pub n: usize,
}

impl Crystal for PathCrystal {
    type Elem = Path;

    fn cartan_type(&self) -> CartanType {
        CartanType::Affine(self.n)
    }

    fn f(&self, b: &Path, i: usize) -> Option<Path> {
        b.f(i)
    }

    fn e(&self, b: &Path, i: usize) -> Option<Path> {
        b.e(i)
    }

    fn epsilon(&self, b: &Path, i: usize) -> Result<usize> {
        Ok(b.epsilon(i))
    }

    fn phi(&self, b: &Path, i: usize) -> Result<usize> {
        Ok(b.phi(i))
    }
}

/// Path of a tight descending configuration: factor `k` holds the residues
/// of strand `k`.
pub fn j_map(psi: &AbacusConfig) -> Result<Path> {
    if !psi.is_descending() {
        return Err(Error::NotDescending);
    }
    if !psi.is_tight()? {
        return Err(Error::NotTight);
    }
    let n = psi.n();
    let lambda = psi.compactify().lambda_of()?;
    let factors: Vec<PerfectElement> = (1..=psi.max_len())
        .map(|k| {
            let residues = psi.strand(k).iter().map(|p| p.rem_euclid(n as i64) as usize).collect();
            PerfectElement::new(n, residues).expect("residues are in range")
        })
        .collect();
    Path::from_factors(&lambda, &factors)
}
