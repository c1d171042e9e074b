//! `ℓ`-strand abacus configurations with `n` colored gaps.
//!
//! Row `j` (bottom-up) is a [`BeadRow`]; virtual rows continue periodically
//! with `ψ_{i+ℓ}^k = ψ_i^k - n`. The gap between columns `g - 1` and `g`
//! has color `g mod n`, so color 0 sits at the origin.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::crystal::{signature, CartanType, Crystal};
use crate::error::{Error, Result};
use crate::partition::{merge_strands, split_strands, BeadRow, Partition};

/// `Σ m_i Λ_i`, stored as `m_0..m_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DominantWeight {
    pub coeffs: Vec<usize>,
}

impl DominantWeight {
    pub fn new(coeffs: Vec<usize>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::InvalidParameter(format!(
                "need at least two coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(Self { coeffs })
    }

    /// `Λ_i` for `sl_n`.
    pub fn fundamental(n: usize, i: usize) -> Self {
        let mut coeffs = vec![0; n];
        coeffs[i % n] += 1;
        Self { coeffs }
    }

    /// Parses `"1,0,2"` as `Λ_0 + 2Λ_2`.
    pub fn parse(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidParameter(format!("bad coefficient {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(coeffs)
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn level(&self) -> usize {
        self.coeffs.iter().sum()
    }

    pub fn coeff(&self, i: usize) -> usize {
        self.coeffs[i % self.n()]
    }

    /// The canonical compact descending configuration: charge `n - 1`
    /// repeated `m_{n-1}` times, down to charge 0 repeated `m_0` times.
    pub fn compact_config(&self) -> Result<AbacusConfig> {
        let n = self.n();
        let charges: Vec<i64> = (0..n)
            .rev()
            .flat_map(|i| std::iter::repeat_n(i as i64, self.coeffs[i]))
            .collect();
        AbacusConfig::compact(n, &charges)
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(i, &m)| if m == 1 { format!("L{i}") } else { format!("{m}L{i}") })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

/// `n` and `ℓ` rows of beads.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawConfig")]
pub struct AbacusConfig {
    n: usize,
    rows: Vec<BeadRow>,
}

#[derive(Deserialize)]
struct RawConfig {
    n: usize,
    rows: Vec<BeadRow>,
}

impl TryFrom<RawConfig> for AbacusConfig {
    type Error = Error;
    fn try_from(raw: RawConfig) -> Result<Self> {
        AbacusConfig::new(raw.n, raw.rows)
    }
}

/// A single bracket of the general rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bracket {
    pub gap: i64,
    pub row: usize,
    /// Index of the bead (from the right) in its row.
    pub bead: usize,
    /// `(` if the bead can move right across the gap, `)` if left.
    pub open: bool,
}

impl AbacusConfig {
    pub fn new(n: usize, rows: Vec<BeadRow>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("n must be at least 2, got {n}")));
        }
        if rows.is_empty() {
            return Err(Error::InvalidParameter("need at least one row".into()));
        }
        Ok(Self { n, rows })
    }

    /// Compact rows with the given charges.
    pub fn compact(n: usize, charges: &[i64]) -> Result<Self> {
        let rows = charges
            .iter()
            .map(|&c| BeadRow::new(c, Partition::empty()))
            .collect();
        Self::new(n, rows)
    }

    /// All rows at charge 0.
    pub fn vacuum(n: usize, l: usize) -> Result<Self> {
        Self::compact(n, &vec![0; l])
    }

    /// Reads bottom-up rows of `#`/`●` (bead) and `o`/`○` (space), the
    /// first character sitting at column `lo`. `|` is ignored.
    pub fn from_art(n: usize, lo: i64, rows: &[&str]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|line| {
                let occ: Vec<bool> = line
                    .chars()
                    .filter(|&ch| ch != '|' && !ch.is_whitespace())
                    .map(|ch| match ch {
                        '#' | '●' => Ok(true),
                        'o' | '○' => Ok(false),
                        other => Err(Error::InvalidParameter(format!("bad bead {other:?}"))),
                    })
                    .collect::<Result<_>>()?;
                Ok(BeadRow::from_window(lo, &occ))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn l(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BeadRow] {
        &self.rows
    }

    pub fn charges(&self) -> Vec<i64> {
        self.rows.iter().map(|r| r.charge).collect()
    }

    /// Longest row partition.
    pub fn max_len(&self) -> usize {
        self.rows.iter().map(|r| r.partition.len()).max().unwrap_or(0)
    }

    /// `ψ_i^k` for any integer row `i`.
    pub fn bead(&self, i: i64, k: usize) -> i64 {
        let l = self.l() as i64;
        let shift = i.div_euclid(l);
        self.rows[i.rem_euclid(l) as usize].bead(k) - shift * self.n as i64
    }

    /// `ψ_0^k, ..., ψ_{ℓ-1}^k`.
    pub fn strand(&self, k: usize) -> Vec<i64> {
        (0..self.l() as i64).map(|i| self.bead(i, k)).collect()
    }

    fn color(&self, gap: i64) -> usize {
        gap.rem_euclid(self.n as i64) as usize
    }

    /// Brackets of color `i` in reading order (gap, then row).
    pub fn brackets(&self, i: usize) -> Vec<Bracket> {
        let mut out = Vec::new();
        for (j, row) in self.rows.iter().enumerate() {
            let len = row.partition.len();
            for k in 1..=len + 1 {
                let p = row.bead(k);
                let right_free = k == 1 || row.bead(k - 1) > p + 1;
                if right_free && self.color(p + 1) == i {
                    out.push(Bracket {
                        gap: p + 1,
                        row: j,
                        bead: k,
                        open: true,
                    });
                }
                let left_free = row.bead(k + 1) < p - 1;
                if left_free && self.color(p) == i {
                    out.push(Bracket {
                        gap: p,
                        row: j,
                        bead: k,
                        open: false,
                    });
                }
            }
        }
        out.sort_by_key(|b| (b.gap, b.row));
        out
    }

    fn moved(&self, row: usize, k: usize, up: bool) -> AbacusConfig {
        let r = &self.rows[row];
        let old = r.partition.part(k);
        let new = if up { old + 1 } else { old - 1 };
        let mut rows = self.rows.clone();
        rows[row] = BeadRow::new(r.charge, r.partition.with_part(k, new));
        AbacusConfig { n: self.n, rows }
    }

    /// `f_i` by the bracket rule over all gaps.
    pub fn f(&self, i: usize) -> Option<AbacusConfig> {
        let br = self.brackets(i);
        let data: Vec<(usize, usize)> = br.iter().map(|b| if b.open { (0, 1) } else { (1, 0) }).collect();
        let j = signature(&data).f_factor?;
        Some(self.moved(br[j].row, br[j].bead, true))
    }

    /// `e_i` by the bracket rule over all gaps.
    pub fn e(&self, i: usize) -> Option<AbacusConfig> {
        let br = self.brackets(i);
        let data: Vec<(usize, usize)> = br.iter().map(|b| if b.open { (0, 1) } else { (1, 0) }).collect();
        let j = signature(&data).e_factor?;
        Some(self.moved(br[j].row, br[j].bead, false))
    }

    /// Strand-wise bracket counts `(#")", #"(")` for color `i`, listed
    /// from the deepest strand `K + 1` to strand 1, preceded by the
    /// `(` count of strand `K + 2`.
    pub fn strand_signature(&self, i: usize) -> Vec<(usize, usize)> {
        let kmax = self.max_len() + 1;
        let n = self.n as i64;
        let count = |k: usize, residue: i64| {
            self.strand(k)
                .into_iter()
                .filter(|p| p.rem_euclid(n) == residue.rem_euclid(n))
                .count()
        };
        let mut data = vec![(0, count(kmax + 1, i as i64 - 1))];
        for k in (1..=kmax).rev() {
            data.push((count(k, i as i64), count(k, i as i64 - 1)));
        }
        data
    }

    fn descending_pick(&self, i: usize, raise: bool) -> Result<Option<(usize, usize)>> {
        if !self.is_descending() {
            return Err(Error::NotDescending);
        }
        let data = self.strand_signature(i);
        let kmax = self.max_len() + 1;
        let sig = signature(&data);
        let factor = if raise { sig.f_factor } else { sig.e_factor };
        let Some(factor) = factor else {
            return Ok(None);
        };
        assert!(factor > 0, "the tail sentinel never acts");
        let k = kmax + 1 - factor;
        let n = self.n as i64;
        let residue = if raise { i as i64 - 1 } else { i as i64 };
        let mut candidates: Vec<(i64, usize)> = self
            .strand(k)
            .into_iter()
            .enumerate()
            .filter(|(_, p)| p.rem_euclid(n) == residue.rem_euclid(n))
            .map(|(j, p)| (p, j))
            .collect();
        candidates.sort();
        let (_, row) = if raise {
            candidates[0]
        } else {
            *candidates.last().unwrap()
        };
        Ok(Some((row, k)))
    }

    /// `f_i` on a descending configuration, strand by strand.
    pub fn f_descending(&self, i: usize) -> Result<Option<AbacusConfig>> {
        Ok(self
            .descending_pick(i, true)?
            .map(|(row, k)| self.moved(row, k, true)))
    }

    /// `e_i` on a descending configuration, strand by strand.
    pub fn e_descending(&self, i: usize) -> Result<Option<AbacusConfig>> {
        Ok(self
            .descending_pick(i, false)?
            .map(|(row, k)| self.moved(row, k, false)))
    }

    /// Strand of the bead that `f_i` (or `e_i`) moves, by the strand rule.
    pub fn acting_strand(&self, i: usize, raise: bool) -> Result<Option<usize>> {
        Ok(self.descending_pick(i, raise)?.map(|(_, k)| k))
    }

    /// Every bead pushed fully left.
    pub fn compactify(&self) -> AbacusConfig {
        AbacusConfig {
            n: self.n,
            rows: self.rows.iter().map(BeadRow::compactify).collect(),
        }
    }

    pub fn is_compact(&self) -> bool {
        self.rows.iter().all(|r| r.partition.is_empty())
    }

    /// Single left steps needed to compactify.
    pub fn weight(&self) -> usize {
        self.rows.iter().map(BeadRow::weight).sum()
    }

    /// Number of gap crossings of each color between the compactification
    /// and `ψ`.
    pub fn content(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for row in &self.rows {
            for k in 1..=row.partition.len() {
                let start = row.charge - k as i64;
                for g in start + 1..=row.bead(k) {
                    d[self.color(g)] += 1;
                }
            }
        }
        d
    }

    /// `⟨wt(ψ), α_i^∨⟩`, with the weight of each compact row `Λ_{c mod n}`.
    pub fn weight_pairing(&self, i: usize) -> i64 {
        let n = self.n;
        let top = self
            .rows
            .iter()
            .filter(|r| self.color(r.charge) == i)
            .count() as i64;
        let d = self.content();
        let ct = CartanType::Affine(n);
        top - (0..n).map(|j| ct.cartan(j, i) * d[j] as i64).sum::<i64>()
    }

    /// Rows weakly decrease bead by bead, including the wrap
    /// `ψ_{ℓ-1} ≥ ψ_0 - n`.
    pub fn is_descending(&self) -> bool {
        let kmax = self.max_len() + 1;
        (0..self.l() as i64).all(|i| (1..=kmax).all(|k| self.bead(i, k) >= self.bead(i + 1, k)))
    }

    /// `Λ(ψ_0)` for compact descending `ψ_0`.
    pub fn lambda_of(&self) -> Result<DominantWeight> {
        if !self.is_compact() {
            return Err(Error::NotCompact);
        }
        if !self.is_descending() {
            return Err(Error::NotDescending);
        }
        Ok(self.lambda_of_charges())
    }

    /// `Σ_j Λ_{c_j mod n}`.
    pub fn lambda_of_charges(&self) -> DominantWeight {
        let mut coeffs = vec![0; self.n];
        for r in &self.rows {
            coeffs[self.color(r.charge)] += 1;
        }
        DominantWeight { coeffs }
    }

    fn with_strand(&self, k: usize, positions: &[i64]) -> AbacusConfig {
        let rows = self
            .rows
            .iter()
            .zip(positions)
            .map(|(r, &p)| {
                let part = p + k as i64 - r.charge;
                assert!(part >= 0, "strand move below the compact tail");
                BeadRow::new(r.charge, r.partition.with_part(k, part as usize))
            })
            .collect();
        AbacusConfig { n: self.n, rows }
    }

    /// `T_k`: shifts the `k`-th bead of every row down one row.
    pub fn tighten(&self, k: usize) -> Result<Option<AbacusConfig>> {
        if !self.is_descending() {
            return Err(Error::NotDescending);
        }
        Ok(self.tighten_unchecked(k))
    }

    fn tighten_unchecked(&self, k: usize) -> Option<AbacusConfig> {
        let l = self.l() as i64;
        if (0..l).any(|i| self.bead(i + 1, k) <= self.bead(i, k + 1)) {
            return None;
        }
        let new: Vec<i64> = (0..l).map(|i| self.bead(i + 1, k)).collect();
        Some(self.with_strand(k, &new))
    }

    /// `T_k^*`: shifts the `k`-th bead of every row up one row.
    pub fn untighten(&self, k: usize) -> Result<Option<AbacusConfig>> {
        if !self.is_descending() {
            return Err(Error::NotDescending);
        }
        Ok(self.untighten_unchecked(k))
    }

    fn untighten_unchecked(&self, k: usize) -> Option<AbacusConfig> {
        let l = self.l() as i64;
        let blocked = (0..l).any(|i| k > 1 && self.bead(i - 1, k) >= self.bead(i, k - 1));
        if blocked {
            return None;
        }
        let new: Vec<i64> = (0..l).map(|i| self.bead(i - 1, k)).collect();
        Some(self.with_strand(k, &new))
    }

    pub fn is_tight(&self) -> Result<bool> {
        if !self.is_descending() {
            return Err(Error::NotDescending);
        }
        Ok((1..=self.max_len()).all(|k| self.tighten_unchecked(k).is_none()))
    }

    /// Splits `ψ` into a tight configuration `γ` and a partition `λ`.
    ///
    /// `γ` comes from tightening strands from the left (deepest) to the
    /// right; `λ_k` counts how far strand `k` was shifted, which is
    /// `Σ_{j ≥ k} g_j` with `g_j` the number of `T_j` moves available
    /// against the original strand `j + 1`.
    pub fn decompose(&self) -> Result<(AbacusConfig, Partition)> {
        if !self.is_descending() {
            return Err(Error::NotDescending);
        }
        let kmax = self.max_len();
        let mut gaps = vec![0usize; kmax + 1];
        for (k, g) in gaps.iter_mut().enumerate().skip(1) {
            let mut cur = self.clone();
            while let Some(next) = cur.tighten_unchecked(k) {
                *g += 1;
                cur = next;
            }
        }
        let mut parts = vec![0usize; kmax];
        let mut acc = 0;
        for k in (1..=kmax).rev() {
            acc += gaps[k];
            parts[k - 1] = acc;
        }
        let lambda = Partition::new(parts).expect("suffix sums decrease");
        let mut gamma = self.clone();
        for k in (1..=kmax).rev() {
            for _ in 0..lambda.part(k) {
                gamma = gamma
                    .tighten_unchecked(k)
                    .expect("strand k tightens λ_k times");
            }
            debug_assert!(gamma.tighten_unchecked(k).is_none());
        }
        Ok((gamma, lambda))
    }

    /// Inverse of [`AbacusConfig::decompose`].
    pub fn compose(gamma: &AbacusConfig, lambda: &Partition) -> Result<AbacusConfig> {
        if !gamma.is_tight()? {
            return Err(Error::NotTight);
        }
        let mut psi = gamma.clone();
        for k in 1..=lambda.len() {
            for _ in 0..lambda.part(k) {
                psi = psi
                    .untighten_unchecked(k)
                    .ok_or_else(|| Error::InvalidParameter(format!("T*_{k} blocked")))?;
            }
        }
        Ok(psi)
    }

    /// Bottom row moves to the top, shifted back by `n`.
    pub fn shift(&self) -> AbacusConfig {
        let mut rows: Vec<BeadRow> = self.rows[1..].to_vec();
        rows.push(self.rows[0].translate(-(self.n as i64)));
        AbacusConfig { n: self.n, rows }
    }

    /// Every bead moved by `d`.
    pub fn translate(&self, d: i64) -> AbacusConfig {
        AbacusConfig {
            n: self.n,
            rows: self.rows.iter().map(|r| r.translate(d)).collect(),
        }
    }

    /// Rows top to bottom with a bar at the origin.
    pub fn render(&self, lo: i64, hi: i64) -> String {
        let mut out = String::new();
        for row in self.rows.iter().rev() {
            for x in lo..hi {
                if x == 0 {
                    out.push('|');
                }
                out.push(if row.is_occupied(x) { '●' } else { '○' });
            }
            out.push('\n');
        }
        let mut labels = String::new();
        for x in lo..hi {
            if x == 0 {
                labels.push(' ');
            }
            let _ = write!(labels, "{}", self.color(x + 1) % 10);
        }
        out.push_str(&labels);
        out.push('\n');
        out
    }

    /// Column range that shows every bead that differs from the tail.
    pub fn render_window(&self) -> (i64, i64) {
        let lo = self
            .rows
            .iter()
            .map(|r| r.span().0)
            .min()
            .unwrap()
            .min(0)
            - 2;
        let hi = self
            .rows
            .iter()
            .map(|r| r.span().1)
            .max()
            .unwrap()
            .max(0)
            + 3;
        (lo, hi)
    }
}

impl fmt::Display for AbacusConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.render_window();
        write!(f, "{}", self.render(lo, hi))
    }
}

/// Compact boundaries `c_0 ≥ ... ≥ c_{ℓ-1} ≥ c_0 - n` are exactly the
/// compact descending configurations.
pub fn is_descending_boundary(n: usize, charges: &[i64]) -> bool {
    !charges.is_empty()
        && charges.windows(2).all(|w| w[0] >= w[1])
        && *charges.last().unwrap() >= charges[0] - n as i64
}

/// Every descending configuration with the given charges and weight at
/// most `max_weight`, sorted.
pub fn enumerate_descending(n: usize, charges: &[i64], max_weight: usize) -> Result<Vec<AbacusConfig>> {
    if !is_descending_boundary(n, charges) {
        return Err(Error::NotDescending);
    }
    let pool: Vec<Partition> = Partition::up_to_size(max_weight);
    let mut out = Vec::new();
    let mut rows: Vec<BeadRow> = Vec::new();
    fill_rows(n, charges, max_weight, &pool, &mut rows, &mut out);
    out.sort();
    Ok(out)
}

fn row_dominates(upper: &BeadRow, lower: &BeadRow) -> bool {
    let kmax = upper.partition.len().max(lower.partition.len()) + 1;
    (1..=kmax).all(|k| upper.bead(k) >= lower.bead(k))
}

fn fill_rows(
    n: usize,
    charges: &[i64],
    budget: usize,
    pool: &[Partition],
    rows: &mut Vec<BeadRow>,
    out: &mut Vec<AbacusConfig>,
) {
    let j = rows.len();
    if j == charges.len() {
        let wrap = rows[0].translate(-(n as i64));
        if row_dominates(&rows[j - 1], &wrap) {
            out.push(AbacusConfig {
                n,
                rows: rows.clone(),
            });
        }
        return;
    }
    for p in pool.iter().take_while(|p| p.size() <= budget) {
        let row = BeadRow::new(charges[j], p.clone());
        if j > 0 && !row_dominates(&rows[j - 1], &row) {
            continue;
        }
        rows.push(row);
        fill_rows(n, charges, budget - p.size(), pool, rows, out);
        rows.pop();
    }
}

/// Tight descending configurations of weight at most `max_weight`.
pub fn enumerate_tight(n: usize, charges: &[i64], max_weight: usize) -> Result<Vec<AbacusConfig>> {
    Ok(enumerate_descending(n, charges, max_weight)?
        .into_iter()
        .filter(|c| c.is_tight().expect("descending"))
        .collect())
}

/// Abacus configurations with the general bracket rule.
#[derive(Debug, Clone, Copy)]
pub struct AbacusCrystal {
    pub n: usize,
}

impl Crystal for AbacusCrystal {
    type Elem = AbacusConfig;

    fn cartan_type(&self) -> CartanType {
        CartanType::Affine(self.n)
    }

    fn f(&self, b: &AbacusConfig, i: usize) -> Option<AbacusConfig> {
        b.f(i)
    }

    fn e(&self, b: &AbacusConfig, i: usize) -> Option<AbacusConfig> {
        b.e(i)
    }
}

/// Descending configurations with the strand rule.
#[derive(Debug, Clone, Copy)]
pub struct DescendingCrystal {
    pub n: usize,
}

impl Crystal for DescendingCrystal {
    type Elem = AbacusConfig;

    fn cartan_type(&self) -> CartanType {
        CartanType::Affine(self.n)
    }

    fn f(&self, b: &AbacusConfig, i: usize) -> Option<AbacusConfig> {
        b.f_descending(i).expect("descending input")
    }

    fn e(&self, b: &AbacusConfig, i: usize) -> Option<AbacusConfig> {
        b.e_descending(i).expect("descending input")
    }
}

fn partition_to_abacus(p: &Partition, n: usize, l: usize) -> AbacusConfig {
    let strands = split_strands(&BeadRow::new(0, p.clone()), l);
    AbacusConfig { n, rows: strands }
}

fn abacus_to_partition(a: &AbacusConfig) -> Partition {
    let row = merge_strands(&a.rows);
    debug_assert_eq!(row.charge, 0);
    row.partition
}

/// `f_i` on partitions at level `ℓ`: adds an `ℓ`-ribbon.
pub fn partition_f(p: &Partition, n: usize, l: usize, i: usize) -> Option<Partition> {
    partition_f_offset(p, n, l, i, 0)
}

/// `e_i` on partitions at level `ℓ`: removes an `ℓ`-ribbon.
pub fn partition_e(p: &Partition, n: usize, l: usize, i: usize) -> Option<Partition> {
    partition_e_offset(p, n, l, i, 0)
}

/// As [`partition_f`], with box colors rotated by `offset`.
pub fn partition_f_offset(p: &Partition, n: usize, l: usize, i: usize, offset: usize) -> Option<Partition> {
    let color = (i + n - offset % n) % n;
    partition_to_abacus(p, n, l).f(color).map(|a| abacus_to_partition(&a))
}

/// As [`partition_e`], with box colors rotated by `offset`.
pub fn partition_e_offset(p: &Partition, n: usize, l: usize, i: usize, offset: usize) -> Option<Partition> {
    let color = (i + n - offset % n) % n;
    partition_to_abacus(p, n, l).e(color).map(|a| abacus_to_partition(&a))
}

/// Partitions under the level-`ℓ` ribbon operators, colors rotated by `offset`.
#[derive(Debug, Clone, Copy)]
pub struct PartitionCrystal {
    pub n: usize,
    pub l: usize,
    pub offset: usize,
}

/// A partition whose `ℓ` strands are compact with residues realizing `Λ`,
/// together with the color offset it needs. `None` if no rotation makes
/// the strand charges sum to zero.
pub fn partition_seed(lambda: &DominantWeight) -> Option<(Partition, usize)> {
    let n = lambda.n() as i64;
    let residues = lambda.compact_config().ok()?.charges();
    let l = residues.len() as i64;
    let total: i64 = residues.iter().sum();
    let offset = (0..n).find(|o| (total - l * o).rem_euclid(n) == 0)?;
    let mut charges: Vec<i64> = residues.iter().map(|c| c - offset).collect();
    let excess: i64 = charges.iter().sum();
    charges[0] -= excess;
    let rows: Vec<BeadRow> = charges.iter().map(|&c| BeadRow::new(c, Partition::empty())).collect();
    let row = merge_strands(&rows);
    debug_assert_eq!(row.charge, 0);
    Some((row.partition, offset as usize))
}

impl Crystal for PartitionCrystal {
    type Elem = Partition;

    fn cartan_type(&self) -> CartanType {
        CartanType::Affine(self.n)
    }

    fn f(&self, b: &Partition, i: usize) -> Option<Partition> {
        partition_f_offset(b, self.n, self.l, i, self.offset)
    }

    fn e(&self, b: &Partition, i: usize) -> Option<Partition> {
        partition_e_offset(b, self.n, self.l, i, self.offset)
    }
}
