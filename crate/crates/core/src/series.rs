//! Integer power series in `q`, truncated at a fixed degree.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `c_0 + c_1 q + ... + c_D q^D`, with everything above `q^D` discarded.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QSeries {
    coeffs: Vec<BigInt>,
}

impl QSeries {
    pub fn zero(degree: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); degree + 1],
        }
    }

    pub fn one(degree: usize) -> Self {
        let mut s = Self::zero(degree);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Pads with zeros or truncates to `degree`.
    pub fn from_coeffs<T: Into<BigInt>>(degree: usize, coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut s = Self::zero(degree);
        for (k, c) in coeffs.into_iter().enumerate().take(degree + 1) {
            s.coeffs[k] = c.into();
        }
        s
    }

    /// Truncation degree `D`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn set_coeff(&mut self, k: usize, c: impl Into<BigInt>) {
        self.coeffs[k] = c.into();
    }

    /// Coefficients as `i64`, if they all fit.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| i64::try_from(c).ok()).collect()
    }

    fn check_degree(&self, other: &QSeries) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::TruncationMismatch(self.degree(), other.degree()));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &QSeries) -> Result<QSeries> {
        self.check_degree(other)?;
        let d = self.degree();
        let mut out = QSeries::zero(d);
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.coeffs[..=d - a].iter().enumerate() {
                out.coeffs[a + b] += ca * cb;
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &QSeries) -> Result<QSeries> {
        self.check_degree(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(QSeries { coeffs })
    }

    /// Multiplies in place by `(1 - q^k)`; `k >= 1`.
    pub fn mul_one_minus(&mut self, k: usize) {
        assert!(k >= 1);
        for d in (k..self.coeffs.len()).rev() {
            let prev = self.coeffs[d - k].clone();
            self.coeffs[d] -= prev;
        }
    }

    /// Multiplies in place by `1 / (1 - q^k)`; `k >= 1`.
    pub fn div_one_minus(&mut self, k: usize) {
        assert!(k >= 1);
        for d in k..self.coeffs.len() {
            let prev = self.coeffs[d - k].clone();
            self.coeffs[d] += prev;
        }
    }

    /// Multiplies in place by `(1 - q^k)^e`; negative `e` divides.
    pub fn mul_one_minus_pow(&mut self, k: usize, e: i64) {
        if k > self.degree() {
            return;
        }
        if e >= 0 {
            (0..e).for_each(|_| self.mul_one_minus(k));
        } else {
            (0..-e).for_each(|_| self.div_one_minus(k));
        }
    }

    /// `1 / (1 - q^k)` expanded as a geometric series.
    pub fn inv_cyclotomic(k: usize, degree: usize) -> QSeries {
        let mut s = QSeries::one(degree);
        s.div_one_minus(k);
        s
    }

    /// Multiplicative inverse; needs constant term `±1`.
    pub fn inverse(&self) -> Result<QSeries> {
        let c0 = &self.coeffs[0];
        if !(c0.abs().is_one()) {
            return Err(Error::NotInvertible);
        }
        let d = self.degree();
        let mut out = QSeries::zero(d);
        out.coeffs[0] = c0.clone();
        for k in 1..=d {
            let mut acc = BigInt::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out.coeffs[k - j];
            }
            // c0 is its own inverse.
            out.coeffs[k] = -(acc * c0);
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> QSeries {
        let mut out = QSeries::one(self.degree());
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// `∏_{k >= 1} 1 / (1 - q^{step k})`.
    pub fn partition_product(step: usize, degree: usize) -> QSeries {
        let mut s = QSeries::one(degree);
        let mut k = step;
        while k <= degree {
            s.div_one_minus(k);
            k += step;
        }
        s
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree,coefficient\n");
        for (k, c) in self.coeffs.iter().enumerate() {
            out.push_str(&format!("{k},{c}\n"));
        }
        out
    }

    /// Coefficients as decimal strings, so JSON stays exact.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| serde_json::Value::String(c.to_string()))
                .collect(),
        )
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        self.try_mul(rhs).expect("truncation mismatch")
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        self.try_add(rhs).expect("truncation mismatch")
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        assert_eq!(self.degree(), rhs.degree(), "truncation mismatch");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        QSeries { coeffs }
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", body.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series_cancels() {
        let mut s = QSeries::inv_cyclotomic(1, 12);
        s.mul_one_minus(1);
        assert_eq!(s, QSeries::one(12));
    }

    #[test]
    fn euler_product() {
        let s = QSeries::partition_product(1, 9);
        assert_eq!(s.to_i64().unwrap(), vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
    }

    #[test]
    fn inverse_round_trip() {
        let s = QSeries::from_coeffs(8, [1, -3, 0, 2, 5]);
        let inv = s.inverse().unwrap();
        assert_eq!(&s * &inv, QSeries::one(8));
        assert_eq!(
            QSeries::from_coeffs(3, [2, 1]).inverse(),
            Err(Error::NotInvertible)
        );
    }

    #[test]
    fn degree_zero_is_constant() {
        assert_eq!(QSeries::partition_product(1, 0), QSeries::one(0));
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = QSeries::one(3);
        let b = QSeries::one(4);
        assert_eq!(a.try_mul(&b), Err(Error::TruncationMismatch(3, 4)));
    }

    #[test]
    fn no_overflow_at_high_degree() {
        let s = QSeries::partition_product(1, 400).pow(4);
        assert!(s.to_i64().is_none());
    }
}
