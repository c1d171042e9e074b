//! Partitions, Maya diagrams (bead rows) and the ribbon/abacus dictionary.
//!
//! A half-integer bead position `p + 1/2` is stored as the integer `p`
//! throughout the crate. A [`BeadRow`] with charge `c` and partition `λ`
//! has its `k`-th bead from the right at `λ_k - k + c`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates monotonicity; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The `k`-th part, 1-based; zero past the end.
    pub fn part(&self, k: usize) -> usize {
        debug_assert!(k >= 1);
        self.parts.get(k - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill_partitions(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions of size at most `n`, ordered by size.
    pub fn up_to_size(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }

    /// Sets the `k`-th part (1-based), re-trimming zeros. The caller keeps
    /// the result weakly decreasing.
    pub(crate) fn with_part(&self, k: usize, value: usize) -> Partition {
        let mut parts = self.parts.clone();
        if parts.len() < k {
            parts.resize(k, 0);
        }
        parts[k - 1] = value;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        Partition { parts }
    }
}

fn fill_partitions(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        cur.push(p);
        fill_partitions(rest - p, p, cur, out);
        cur.pop();
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

/// A partition whose parts are indexed starting at `charge`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ChargedPartition {
    pub charge: i64,
    pub parts: Partition,
}

impl ChargedPartition {
    pub fn new(charge: i64, parts: Partition) -> Self {
        Self { charge, parts }
    }

    /// The entry at absolute index `j`; `None` for `j < charge`.
    pub fn entry(&self, j: i64) -> Option<usize> {
        if j < self.charge {
            None
        } else {
            Some(self.parts.part((j - self.charge) as usize + 1))
        }
    }
}

/// One strand of beads: all sufficiently negative positions full, all
/// sufficiently positive positions empty.
///
/// Stored canonically as `(charge, partition)`, so every value is a valid
/// row by construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BeadRow {
    pub charge: i64,
    #[serde(rename = "parts")]
    pub partition: Partition,
}

impl BeadRow {
    pub fn new(charge: i64, partition: Partition) -> Self {
        Self { charge, partition }
    }

    /// Beads at every negative position, none at a nonnegative one.
    pub fn vacuum() -> Self {
        Self::new(0, Partition::empty())
    }

    /// Position of the `k`-th bead from the right (1-based).
    pub fn bead(&self, k: usize) -> i64 {
        self.partition.part(k) as i64 - k as i64 + self.charge
    }

    /// Positions of the beads that are not part of the compact tail,
    /// plus the first tail bead, in decreasing order.
    pub fn leading_beads(&self) -> Vec<i64> {
        (1..=self.partition.len() + 1).map(|k| self.bead(k)).collect()
    }

    pub fn is_occupied(&self, x: i64) -> bool {
        let len = self.partition.len() as i64;
        if x < self.charge - len {
            return true;
        }
        (1..=self.partition.len()).any(|k| self.bead(k) == x)
    }

    /// Smallest position that can hold a hole, and largest that can hold a bead.
    pub fn span(&self) -> (i64, i64) {
        let lo = self.charge - self.partition.len() as i64;
        let hi = self.bead(1);
        (lo, hi)
    }

    /// Builds a row from an explicit window: positions `< lo` are full,
    /// positions `>= lo + occupied.len()` are empty.
    pub fn from_window(lo: i64, occupied: &[bool]) -> BeadRow {
        let hi = lo + occupied.len() as i64;
        let beads_nonneg = occupied
            .iter()
            .enumerate()
            .filter(|&(idx, &b)| b && lo + idx as i64 >= 0)
            .count() as i64;
        let holes_neg = occupied
            .iter()
            .enumerate()
            .filter(|&(idx, &b)| !b && lo + (idx as i64) < 0)
            .count() as i64;
        // Full positions below the window that are >= 0, or empty positions
        // above it that are < 0, also count.
        let below_nonneg = if lo > 0 { lo } else { 0 };
        let above_neg = if hi < 0 { -hi } else { 0 };
        let charge = beads_nonneg + below_nonneg - holes_neg - above_neg;
        let mut beads: Vec<i64> = occupied
            .iter()
            .enumerate()
            .filter(|&(_, &b)| b)
            .map(|(idx, _)| lo + idx as i64)
            .collect();
        beads.reverse();
        let mut parts = Vec::new();
        let mut k = 1i64;
        let mut idx = 0;
        loop {
            let pos = if idx < beads.len() {
                beads[idx]
            } else {
                // Beads below the window are contiguous.
                lo - 1 - (idx - beads.len()) as i64
            };
            let part = pos + k - charge;
            debug_assert!(part >= 0);
            if part == 0 {
                break;
            }
            parts.push(part as usize);
            k += 1;
            idx += 1;
        }
        BeadRow::new(charge, Partition { parts })
    }

    /// Occupancy on `[lo, hi)`.
    pub fn window(&self, lo: i64, hi: i64) -> Vec<bool> {
        (lo..hi).map(|x| self.is_occupied(x)).collect()
    }

    /// Moves the bead at `from` by `steps` positions, possibly jumping
    /// over other beads.
    pub fn move_bead(&self, from: i64, steps: i64) -> Result<BeadRow> {
        let to = from + steps;
        if !self.is_occupied(from) {
            return Err(Error::EmptySource(from));
        }
        if steps != 0 && self.is_occupied(to) {
            return Err(Error::OccupiedTarget(to));
        }
        let (slo, shi) = self.span();
        let lo = slo.min(from).min(to) - 1;
        let hi = shi.max(from).max(to) + 2;
        let mut occ = self.window(lo, hi);
        occ[(from - lo) as usize] = false;
        occ[(to - lo) as usize] = true;
        Ok(BeadRow::from_window(lo, &occ))
    }

    /// `E_{p+1,p}`: moves the bead at `p` to `p + 1` if that is empty.
    pub fn gl_raise(&self, p: i64) -> Option<BeadRow> {
        if self.is_occupied(p) && !self.is_occupied(p + 1) {
            self.move_bead(p, 1).ok()
        } else {
            None
        }
    }

    /// `E_{p,p+1}`: moves the bead at `p + 1` to `p` if that is empty.
    pub fn gl_lower(&self, p: i64) -> Option<BeadRow> {
        if self.is_occupied(p + 1) && !self.is_occupied(p) {
            self.move_bead(p + 1, -1).ok()
        } else {
            None
        }
    }

    /// Pushes every bead as far left as it goes.
    pub fn compactify(&self) -> BeadRow {
        BeadRow::new(self.charge, Partition::empty())
    }

    /// Number of single left steps needed to compactify.
    pub fn weight(&self) -> usize {
        self.partition.size()
    }

    /// Translates every bead by `d`.
    pub fn translate(&self, d: i64) -> BeadRow {
        BeadRow::new(self.charge + d, self.partition.clone())
    }
}

/// Wire/direction of a `gl_∞` matrix unit acting at `(p, p+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GlDirection {
    /// `E_{p,p+1}`: bead moves from `p+1` to `p`.
    Left,
    /// `E_{p+1,p}`: bead moves from `p` to `p+1`.
    Right,
}

/// Acts by the matrix unit `E_{p,p+1}` or `E_{p+1,p}`; `None` is the zero vector.
pub fn gl_matrix_unit(r: &BeadRow, p: i64, direction: GlDirection) -> Option<BeadRow> {
    match direction {
        GlDirection::Left => r.gl_lower(p),
        GlDirection::Right => r.gl_raise(p),
    }
}

pub fn partition_to_beads(p: &Partition, charge: i64) -> BeadRow {
    BeadRow::new(charge, p.clone())
}

pub fn beads_to_partition(r: &BeadRow) -> (Partition, i64) {
    (r.partition.clone(), r.charge)
}

/// A rim hook of `length` boxes whose rightmost box sits above
/// `rightmost_column` (box centers are at integer positions, the
/// partition's vertex at 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ribbon {
    pub length: usize,
    pub rightmost_column: i64,
}

/// Adds the ribbon if the result is a partition.
///
/// The bead under the ribbon's left end moves `length` steps right and ends
/// below the rightmost box.
pub fn add_ribbon(p: &Partition, ribbon: Ribbon) -> Option<Partition> {
    let row = BeadRow::new(0, p.clone());
    let to = ribbon.rightmost_column;
    let from = to - ribbon.length as i64;
    row.move_bead(from, ribbon.length as i64)
        .ok()
        .map(|r| r.partition)
}

/// Removes the ribbon if it is a removable rim hook of `p`.
pub fn remove_ribbon(p: &Partition, ribbon: Ribbon) -> Option<Partition> {
    let row = BeadRow::new(0, p.clone());
    row.move_bead(ribbon.rightmost_column, -(ribbon.length as i64))
        .ok()
        .map(|r| r.partition)
}

/// All ribbons of the given length that can be added to `p`, left to right.
pub fn addable_ribbons(p: &Partition, length: usize) -> Vec<Ribbon> {
    let row = BeadRow::new(0, p.clone());
    let l = length as i64;
    let (lo, hi) = row.span();
    (lo - 1..=hi)
        .filter(|&x| row.is_occupied(x) && !row.is_occupied(x + l))
        .map(|x| Ribbon {
            length,
            rightmost_column: x + l,
        })
        .collect()
}

/// All ribbons of the given length that can be removed from `p`, left to right.
pub fn removable_ribbons(p: &Partition, length: usize) -> Vec<Ribbon> {
    let row = BeadRow::new(0, p.clone());
    let l = length as i64;
    let (lo, hi) = row.span();
    (lo..=hi)
        .filter(|&x| row.is_occupied(x) && !row.is_occupied(x - l))
        .map(|x| Ribbon {
            length,
            rightmost_column: x,
        })
        .collect()
}

/// Splits one bead row into `l` strands: position `p` goes to strand
/// `p mod l`, column `floor(p / l)`.
pub fn split_strands(row: &BeadRow, l: usize) -> Vec<BeadRow> {
    assert!(l >= 1);
    let li = l as i64;
    let (slo, shi) = row.span();
    let lo = (slo - 1).div_euclid(li) * li;
    let hi = (shi + 1).div_euclid(li) * li + li;
    let occ = row.window(lo, hi);
    (0..l)
        .map(|r| {
            let cols: Vec<bool> = occ.iter().skip(r).step_by(l).copied().collect();
            BeadRow::from_window(lo / li, &cols)
        })
        .collect()
}

/// Inverse of [`split_strands`].
pub fn merge_strands(rows: &[BeadRow]) -> BeadRow {
    let l = rows.len() as i64;
    assert!(l >= 1);
    let lo_col = rows.iter().map(|r| r.span().0).min().unwrap() - 1;
    let hi_col = rows.iter().map(|r| r.span().1).max().unwrap() + 2;
    let lo = lo_col * l;
    let occ: Vec<bool> = (lo..hi_col * l)
        .map(|p| {
            let strand = p.rem_euclid(l) as usize;
            rows[strand].is_occupied(p.div_euclid(l))
        })
        .collect();
    BeadRow::from_window(lo, &occ)
}

/// The `l`-quotient: the per-strand charged partitions of the `l`-strand
/// abacus of `p` (charge 0).
pub fn l_quotient(p: &Partition, l: usize) -> Vec<ChargedPartition> {
    split_strands(&BeadRow::new(0, p.clone()), l)
        .into_iter()
        .map(|r| ChargedPartition::new(r.charge, r.partition))
        .collect()
}

/// The `l`-core: push every strand's beads fully left and read the
/// partition back.
pub fn l_core(p: &Partition, l: usize) -> Partition {
    let strands: Vec<BeadRow> = split_strands(&BeadRow::new(0, p.clone()), l)
        .iter()
        .map(BeadRow::compactify)
        .collect();
    let merged = merge_strands(&strands);
    debug_assert_eq!(merged.charge, 0);
    merged.partition
}
