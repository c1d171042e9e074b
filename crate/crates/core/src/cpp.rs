//! Cylindric plane partitions of type `(n, ℓ)`.
//!
//! Stored as `ℓ` charged partitions `π_0..π_{ℓ-1}`; row `π_i` starts at
//! index `p_i`. Other rows follow from `π_{i+ℓ, j-n} = π_{i,j}`.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::abacus::{AbacusConfig, DominantWeight};
use crate::crystal::{signature, CartanType, Crystal};
use crate::error::{Error, Result};
use crate::partition::{BeadRow, ChargedPartition, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CylindricPlanePartition {
    n: usize,
    rows: Vec<ChargedPartition>,
}

#[derive(Serialize, Deserialize)]
struct CppJson {
    n: usize,
    l: usize,
    charges: Vec<i64>,
    rows: Vec<Vec<usize>>,
}

impl Serialize for CylindricPlanePartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CppJson {
            n: self.n,
            l: self.l(),
            charges: self.charges(),
            rows: self.rows.iter().map(|r| r.parts.parts().to_vec()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CylindricPlanePartition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = CppJson::deserialize(d)?;
        if raw.l != raw.rows.len() || raw.l != raw.charges.len() {
            return Err(serde::de::Error::custom("row count does not match l"));
        }
        let rows = raw
            .charges
            .into_iter()
            .zip(raw.rows)
            .map(|(c, r)| Ok(ChargedPartition::new(c, Partition::new(r)?)))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        CylindricPlanePartition::new(raw.n, rows).map_err(serde::de::Error::custom)
    }
}

/// A box of a slice: `(row, diagonal, height)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct CppBox {
    pub row: usize,
    pub diagonal: i64,
    pub height: usize,
}

impl CppBox {
    /// Color of the box under the abacus coloring.
    pub fn color(&self, n: usize) -> usize {
        (self.diagonal + 1 - self.height as i64).rem_euclid(n as i64) as usize
    }

    /// `ℓ · t` with `t(x, y, z) = n x / ℓ + y - z`, kept integral.
    pub fn scaled_t(&self, n: usize, l: usize) -> i64 {
        (n * self.row) as i64 + l as i64 * (self.diagonal - self.height as i64)
    }
}

impl CylindricPlanePartition {
    /// Validates the boundary and the cylindric inequalities.
    pub fn new(n: usize, rows: Vec<ChargedPartition>) -> Result<Self> {
        let c = Self { n, rows };
        c.validate()?;
        Ok(c)
    }

    pub fn zero(n: usize, charges: &[i64]) -> Result<Self> {
        Self::new(
            n,
            charges
                .iter()
                .map(|&p| ChargedPartition::new(p, Partition::empty()))
                .collect(),
        )
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        let l = self.rows.len();
        if n < 1 || l < 1 {
            return Err(Error::InvalidCpp(format!("type ({n}, {l})")));
        }
        for i in 0..l as i64 {
            if self.start(i + 1) > self.start(i) {
                return Err(Error::InvalidCpp(format!("row {} starts right of row {i}", i + 1)));
            }
            let r = &self.rows[i as usize];
            let last = r.charge + r.parts.len() as i64;
            for j in self.start(i)..=last {
                let here = self.entry(i, j).unwrap();
                let below = self.entry(i + 1, j).unwrap_or(0);
                if here < below {
                    return Err(Error::InvalidCpp(format!(
                        "π[{i},{j}] = {here} < π[{},{j}] = {below}",
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn l(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[ChargedPartition] {
        &self.rows
    }

    pub fn charges(&self) -> Vec<i64> {
        self.rows.iter().map(|r| r.charge).collect()
    }

    /// `p_i` for any integer `i`.
    pub fn start(&self, i: i64) -> i64 {
        let l = self.l() as i64;
        self.rows[i.rem_euclid(l) as usize].charge - i.div_euclid(l) * self.n as i64
    }

    /// `π_{i,j}` for any integers, `None` outside the domain.
    pub fn entry(&self, i: i64, j: i64) -> Option<usize> {
        let l = self.l() as i64;
        let q = i.div_euclid(l);
        self.rows[i.rem_euclid(l) as usize].entry(j + q * self.n as i64)
    }

    /// Sum of entries over one period.
    pub fn weight(&self) -> usize {
        self.rows.iter().map(|r| r.parts.size()).sum()
    }

    /// `m_i` = number of rows whose first diagonal is `≡ i + rotation`.
    pub fn lambda_rotated(&self, rotation: usize) -> DominantWeight {
        let n = self.n as i64;
        let mut coeffs = vec![0; self.n];
        for r in &self.rows {
            coeffs[(r.charge - rotation as i64).rem_euclid(n) as usize] += 1;
        }
        DominantWeight { coeffs }
    }

    /// `Λ(π)`, with labels pinned to the abacus origin.
    pub fn lambda(&self) -> DominantWeight {
        self.lambda_rotated(0)
    }

    /// Addable (`true`) and removable (`false`) boxes of color `i`.
    pub fn candidate_boxes(&self, i: usize) -> Vec<(CppBox, bool)> {
        let mut out = Vec::new();
        for (row, r) in self.rows.iter().enumerate() {
            let len = r.parts.len();
            for m in 1..=len + 1 {
                let here = r.parts.part(m);
                let diagonal = r.charge + m as i64 - 1;
                if m == 1 || r.parts.part(m - 1) > here {
                    let b = CppBox {
                        row,
                        diagonal,
                        height: here + 1,
                    };
                    if b.color(self.n) == i {
                        out.push((b, true));
                    }
                }
                if here > 0 && r.parts.part(m + 1) < here {
                    let b = CppBox {
                        row,
                        diagonal,
                        height: here,
                    };
                    if b.color(self.n) == i {
                        out.push((b, false));
                    }
                }
            }
        }
        let (n, l) = (self.n, self.l());
        out.sort_by_key(|(b, _)| b.scaled_t(n, l));
        for w in out.windows(2) {
            let (a, b) = (w[0].0.scaled_t(n, l), w[1].0.scaled_t(n, l));
            if a == b {
                panic!("{}", Error::DuplicateT(a, b));
            }
        }
        out
    }

    fn with_box(&self, b: CppBox, add: bool) -> CylindricPlanePartition {
        let r = &self.rows[b.row];
        let m = (b.diagonal - r.charge + 1) as usize;
        let mut parts = r.parts.parts().to_vec();
        if parts.len() < m {
            parts.resize(m, 0);
        }
        if add {
            parts[m - 1] += 1;
        } else {
            parts[m - 1] -= 1;
        }
        let mut rows = self.rows.clone();
        rows[b.row] = ChargedPartition::new(r.charge, Partition::new(parts).expect("corner move"));
        let out = CylindricPlanePartition { n: self.n, rows };
        debug_assert!(out.validate().is_ok());
        out
    }

    /// `f_i`: adds the box under the first uncanceled `(`.
    pub fn f(&self, i: usize) -> Option<CylindricPlanePartition> {
        let cand = self.candidate_boxes(i);
        let data: Vec<(usize, usize)> = cand.iter().map(|&(_, add)| if add { (0, 1) } else { (1, 0) }).collect();
        let k = signature(&data).f_factor?;
        Some(self.with_box(cand[k].0, true))
    }

    /// `e_i`: removes the box under the first uncanceled `)` from the right.
    pub fn e(&self, i: usize) -> Option<CylindricPlanePartition> {
        let cand = self.candidate_boxes(i);
        let data: Vec<(usize, usize)> = cand.iter().map(|&(_, add)| if add { (0, 1) } else { (1, 0) }).collect();
        let k = signature(&data).e_factor?;
        Some(self.with_box(cand[k].0, false))
    }

    /// Transpose across the vertical axis, giving type `(ℓ, n)`.
    pub fn reflect(&self) -> CylindricPlanePartition {
        let n = self.n as i64;
        // p'_a = min { b : p_b <= a }; p_b grows without bound as b → -∞.
        let new_start = |a: i64| {
            let mut b = 0i64;
            while self.start(b) <= a {
                b -= 1;
            }
            while self.start(b) > a {
                b += 1;
            }
            b
        };
        let rows = (0..n)
            .map(|a| {
                let p = new_start(a);
                let mut parts = Vec::new();
                let mut b = p;
                loop {
                    let v = self.entry(b, a).expect("inside the domain");
                    if v == 0 {
                        break;
                    }
                    parts.push(v);
                    b += 1;
                }
                ChargedPartition::new(p, Partition::new(parts).expect("columns decrease"))
            })
            .collect();
        CylindricPlanePartition::new(self.l(), rows).expect("transpose of a valid array")
    }

    /// Grid of rows `0..=ℓ` (row `ℓ` is the wrapped copy of row 0).
    pub fn render(&self) -> String {
        let l = self.l() as i64;
        let lo = (0..=l).map(|i| self.start(i)).min().unwrap();
        let hi = (0..=l)
            .map(|i| {
                let r = &self.rows[i.rem_euclid(l) as usize];
                self.start(i) + r.parts.len() as i64
            })
            .max()
            .unwrap();
        let mut out = String::new();
        let _ = writeln!(out, "type ({}, {}), columns {lo}..{hi}", self.n, self.l());
        for i in 0..=l {
            let _ = write!(out, "π{i:<3}");
            for j in lo..=hi {
                match self.entry(i, j) {
                    Some(v) => {
                        let _ = write!(out, "{v:>3}");
                    }
                    None => out.push_str("  ."),
                }
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for CylindricPlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Row `i` of the abacus becomes `π_i`: the conjugate partition, starting
/// at the row's charge.
pub fn abacus_to_cpp(psi: &AbacusConfig) -> Result<CylindricPlanePartition> {
    if !psi.is_descending() {
        return Err(Error::NotDescending);
    }
    let rows = psi
        .rows()
        .iter()
        .map(|r| ChargedPartition::new(r.charge, r.partition.conjugate()))
        .collect();
    CylindricPlanePartition::new(psi.n(), rows)
}

pub fn cpp_to_abacus(pi: &CylindricPlanePartition) -> Result<AbacusConfig> {
    let rows = pi
        .rows
        .iter()
        .map(|r| BeadRow::new(r.charge, r.parts.conjugate()))
        .collect();
    AbacusConfig::new(pi.n, rows)
}

/// `Λ(π)`.
pub fn lambda_of_cpp(pi: &CylindricPlanePartition) -> DominantWeight {
    pi.lambda()
}

/// Every valid cylindric plane partition with the given charges and
/// weight at most `max_weight`, sorted.
pub fn enumerate_cpps(n: usize, charges: &[i64], max_weight: usize) -> Result<Vec<CylindricPlanePartition>> {
    CylindricPlanePartition::zero(n, charges)?;
    let pool = Partition::up_to_size(max_weight);
    let mut out = Vec::new();
    let mut rows = Vec::new();
    fill(n, charges, max_weight, &pool, &mut rows, &mut out);
    out.sort();
    Ok(out)
}

fn fill(
    n: usize,
    charges: &[i64],
    budget: usize,
    pool: &[Partition],
    rows: &mut Vec<ChargedPartition>,
    out: &mut Vec<CylindricPlanePartition>,
) {
    let i = rows.len();
    if i == charges.len() {
        if let Ok(c) = CylindricPlanePartition::new(n, rows.clone()) {
            out.push(c);
        }
        return;
    }
    for p in pool.iter().take_while(|p| p.size() <= budget) {
        let row = ChargedPartition::new(charges[i], p.clone());
        if i > 0 {
            // π_{i-1, j} >= π_{i, j} wherever row i - 1 is defined.
            let prev = &rows[i - 1];
            let last = charges[i] + p.len() as i64;
            if (prev.charge..=last).any(|j| prev.entry(j).unwrap() < row.entry(j).unwrap()) {
                continue;
            }
        }
        rows.push(row);
        fill(n, charges, budget - p.size(), pool, rows, out);
        rows.pop();
    }
}

/// Cylindric plane partitions under the box-adding operators.
#[derive(Debug, Clone, Copy)]
pub struct CppCrystal {
    pub n: usize,
}

impl Crystal for CppCrystal {
    type Elem = CylindricPlanePartition;

    fn cartan_type(&self) -> CartanType {
        CartanType::Affine(self.n)
    }

    fn f(&self, b: &CylindricPlanePartition, i: usize) -> Option<CylindricPlanePartition> {
        b.f(i)
    }

    fn e(&self, b: &CylindricPlanePartition, i: usize) -> Option<CylindricPlanePartition> {
        b.e(i)
    }
}
