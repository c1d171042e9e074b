//! Principally specialized characters and the cylindric partition function.
//!
//! Three independent routes to `Z = Σ_π q^{|π|}`: the Weyl–Kac root product
//! times a Heisenberg factor, the boundary-profile product, and brute
//! enumeration of cylindric plane partitions.

use serde::Serialize;

use crate::abacus::DominantWeight;
use crate::cpp::enumerate_cpps;
use crate::error::{Error, Result};
use crate::series::QSeries;

/// Slope pattern of one period of a cylindric boundary; positions `1..=N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryProfile {
    pub period: usize,
    pub a: Vec<bool>,
    pub b: Vec<bool>,
}

impl BoundaryProfile {
    /// Builds a profile from its `B` pattern; `A` is the complement.
    pub fn from_b(b: Vec<bool>) -> Self {
        let a = b.iter().map(|x| !x).collect();
        BoundaryProfile { period: b.len(), a, b }
    }

    pub fn n(&self) -> usize {
        self.b.iter().filter(|&&x| x).count()
    }

    pub fn l(&self) -> usize {
        self.period - self.n()
    }

    /// `"ABBAB"`-style rendering, position 1 first.
    pub fn pattern(&self) -> String {
        self.b.iter().map(|&x| if x { 'B' } else { 'A' }).collect()
    }
}

/// `B` at `a + m_0 + … + m_{a-1}` for `a = 1..n`.
pub fn profile_of(lambda: &DominantWeight, n: usize, l: usize) -> Result<BoundaryProfile> {
    check_weight(lambda, n)?;
    if lambda.level() != l {
        return Err(Error::LevelMismatch { expected: l, found: lambda.level() });
    }
    let period = n + l;
    let mut b = vec![false; period];
    let mut acc = 0;
    for a in 1..=n {
        let pos = (a + acc - 1) % period;
        b[pos] = true;
        acc += lambda.coeff(a - 1);
    }
    Ok(BoundaryProfile::from_b(b))
}

/// `Λ′ = Σ_i Λ_{(m_i + … + m_{n-1}) mod ℓ}`, a level-`n` weight for `ℓ` colors.
pub fn lambda_prime(lambda: &DominantWeight) -> Result<DominantWeight> {
    let l = lambda.level();
    if l == 0 {
        return Err(Error::InvalidParameter("Λ′ needs positive level".into()));
    }
    let n = lambda.n();
    let mut coeffs = vec![0; l];
    let mut tail = 0;
    for i in (0..n).rev() {
        tail += lambda.coeff(i);
        coeffs[tail % l] += 1;
    }
    Ok(DominantWeight { coeffs })
}

fn check_weight(lambda: &DominantWeight, n: usize) -> Result<()> {
    if lambda.n() != n {
        return Err(Error::InvalidParameter(format!(
            "weight has {} coefficients, expected {n}",
            lambda.n()
        )));
    }
    Ok(())
}

/// Multiplies `s` by `∏_α (1 - q^{⟨μ, α⟩})^{mult α}` over positive affine
/// roots, where `shifts[i] = ⟨μ, α_i^∨⟩` for `i = 0..n` are all positive.
fn root_product(s: &mut QSeries, shifts: &[usize], sign: i64) {
    let n = shifts.len();
    let d = s.degree();
    let period: usize = shifts.iter().sum();
    // Finite roots α_a + … + α_b of sl_n, 1 <= a <= b <= n - 1.
    for a in 1..n {
        let mut fin = 0;
        for b in a..n {
            fin += shifts[b];
            let mut deg = fin;
            while deg <= d {
                s.mul_one_minus_pow(deg, sign);
                deg += period;
            }
            let mut deg = period - fin;
            while deg <= d {
                s.mul_one_minus_pow(deg, sign);
                deg += period;
            }
        }
    }
    let mut deg = period;
    while deg <= d {
        s.mul_one_minus_pow(deg, sign * (n as i64 - 1));
        deg += period;
    }
}

/// `dim_q V_Λ`, graded by principal degree, through `q^degree`.
pub fn dimq_v(lambda: &DominantWeight, n: usize, degree: usize) -> Result<QSeries> {
    check_weight(lambda, n)?;
    let mut s = QSeries::one(degree);
    let shifted: Vec<usize> = (0..n).map(|i| lambda.coeff(i) + 1).collect();
    root_product(&mut s, &shifted, 1);
    root_product(&mut s, &vec![1; n], -1);
    Ok(s)
}

/// `dim_q V_Λ · ∏_{k >= 1} 1 / (1 - q^{nk})`.
pub fn z_weyl(lambda: &DominantWeight, n: usize, degree: usize) -> Result<QSeries> {
    let v = dimq_v(lambda, n, degree)?;
    Ok(&v * &QSeries::partition_product(n, degree))
}

/// Product formula read off the boundary profile.
pub fn z_borodin(profile: &BoundaryProfile, n: usize, degree: usize) -> Result<QSeries> {
    let big_n = profile.period;
    if profile.a.len() != big_n || profile.b.len() != big_n {
        return Err(Error::InvalidParameter("profile length differs from period".into()));
    }
    if profile.a.iter().zip(&profile.b).any(|(x, y)| x == y) {
        return Err(Error::InvalidParameter("A must be the complement of B".into()));
    }
    if profile.n() != n {
        return Err(Error::BadProfile { expected: n, found: profile.n() });
    }
    let mut s = QSeries::partition_product(big_n, degree);
    for i in 0..big_n {
        if !profile.a[i] {
            continue;
        }
        for j in 0..big_n {
            if !profile.b[j] {
                continue;
            }
            let mut deg = (i as i64 - j as i64).rem_euclid(big_n as i64) as usize;
            while deg <= degree {
                s.div_one_minus(deg);
                deg += big_n;
            }
        }
    }
    Ok(s)
}

/// Counts cylindric plane partitions with boundary `Λ` by weight.
pub fn z_enumerate(lambda: &DominantWeight, n: usize, degree: usize) -> Result<QSeries> {
    check_weight(lambda, n)?;
    let charges = lambda.compact_config()?.charges();
    let mut counts = vec![0u64; degree + 1];
    for pi in enumerate_cpps(n, &charges, degree)? {
        counts[pi.weight()] += 1;
    }
    Ok(QSeries::from_coeffs(degree, counts))
}

/// The three computations side by side.
#[derive(Debug, Clone, Serialize)]
pub struct Comparison {
    pub n: usize,
    pub l: usize,
    pub lambda: Vec<usize>,
    pub degree: usize,
    pub profile: String,
    pub weyl: QSeries,
    pub borodin: QSeries,
    pub enumerated: QSeries,
}

impl Comparison {
    pub fn agree(&self) -> bool {
        self.weyl == self.borodin && self.borodin == self.enumerated
    }
}

pub fn compare(lambda: &DominantWeight, n: usize, degree: usize) -> Result<Comparison> {
    let l = lambda.level();
    let profile = profile_of(lambda, n, l)?;
    Ok(Comparison {
        n,
        l,
        lambda: lambda.coeffs.clone(),
        degree,
        profile: profile.pattern(),
        weyl: z_weyl(lambda, n, degree)?,
        borodin: z_borodin(&profile, n, degree)?,
        enumerated: z_enumerate(lambda, n, degree)?,
    })
}
