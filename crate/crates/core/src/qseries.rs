//! Truncated power series in one variable `q` with exact integer coefficients.
//!
//! A [`QSeries`] of truncation order `N` is an element of `Z[q] / (q^{N+1})`.
//! Every generating function in this crate is one of these. Arithmetic between
//! series of different orders is refused rather than silently truncated.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("not invertible in truncated series: constant term is {0}")]
    NotInvertible(BigInt),
    #[error("coefficient list has {got} entries, expected {expected}")]
    BadLength { expected: usize, got: usize },
    #[error("invalid coefficient {0:?}")]
    BadCoefficient(String),
}

/// Power series known modulo `q^{trunc_order + 1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QSeries {
    trunc_order: usize,
    coeffs: Vec<BigInt>,
}

impl QSeries {
    pub fn zero(trunc_order: usize) -> Self {
        QSeries {
            trunc_order,
            coeffs: vec![BigInt::zero(); trunc_order + 1],
        }
    }

    pub fn one(trunc_order: usize) -> Self {
        Self::monomial(0, 1, trunc_order)
    }

    /// `coeff * q^degree`, which is zero when `degree > trunc_order`.
    pub fn monomial(degree: usize, coeff: impl Into<BigInt>, trunc_order: usize) -> Self {
        let mut s = Self::zero(trunc_order);
        if degree <= trunc_order {
            s.coeffs[degree] = coeff.into();
        }
        s
    }

    /// Builds a series from leading coefficients; missing entries are zero and
    /// entries past `trunc_order` are dropped.
    pub fn from_coeffs<I, T>(coeffs: I, trunc_order: usize) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut s = Self::zero(trunc_order);
        for (k, c) in coeffs.into_iter().take(trunc_order + 1).enumerate() {
            s.coeffs[k] = c.into();
        }
        s
    }

    /// Exact-length constructor; the list must have `trunc_order + 1` entries.
    pub fn try_from_vec(coeffs: Vec<BigInt>, trunc_order: usize) -> Result<Self, SeriesError> {
        if coeffs.len() != trunc_order + 1 {
            return Err(SeriesError::BadLength {
                expected: trunc_order + 1,
                got: coeffs.len(),
            });
        }
        Ok(QSeries {
            trunc_order,
            coeffs,
        })
    }

    pub fn trunc_order(&self) -> usize {
        self.trunc_order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^k`; panics if `k` lies beyond the truncation order,
    /// since that coefficient is unknown.
    pub fn coeff(&self, k: usize) -> &BigInt {
        assert!(
            k <= self.trunc_order,
            "coefficient q^{k} is beyond truncation order {}",
            self.trunc_order
        );
        &self.coeffs[k]
    }

    /// Coefficients as `i64`, for tests and display. `None` on overflow.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| i64::try_from(c).ok()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Reduces to a lower truncation order.
    pub fn truncate(&self, trunc_order: usize) -> Self {
        assert!(trunc_order <= self.trunc_order);
        QSeries {
            trunc_order,
            coeffs: self.coeffs[..=trunc_order].to_vec(),
        }
    }

    /// Sum of all known coefficients (the value at `q = 1` when the series is
    /// a polynomial of degree at most the truncation order).
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// First index at which two series of equal order differ.
    pub fn first_mismatch(&self, other: &QSeries) -> Result<Option<usize>, SeriesError> {
        self.check_order(other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(x, y)| x != y))
    }

    fn check_order(&self, other: &QSeries) -> Result<(), SeriesError> {
        if self.trunc_order == other.trunc_order {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch(self.trunc_order, other.trunc_order))
        }
    }

    pub fn try_add(&self, other: &QSeries) -> Result<QSeries, SeriesError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(x, y)| x + y)
            .collect();
        Ok(QSeries {
            trunc_order: self.trunc_order,
            coeffs,
        })
    }

    pub fn try_sub(&self, other: &QSeries) -> Result<QSeries, SeriesError> {
        self.try_add(&-other)
    }

    /// Cauchy product, truncated.
    pub fn try_mul(&self, other: &QSeries) -> Result<QSeries, SeriesError> {
        self.check_order(other)?;
        let n = self.trunc_order;
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs[..=n - i].iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        Ok(QSeries {
            trunc_order: n,
            coeffs: out,
        })
    }

    /// Multiplicative inverse modulo `q^{N+1}`. The constant term must be ±1.
    pub fn inverse(&self) -> Result<QSeries, SeriesError> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigInt::one() {
            return Err(SeriesError::NotInvertible(c0.clone()));
        }
        let n = self.trunc_order;
        let mut g: Vec<BigInt> = Vec::with_capacity(n + 1);
        g.push(c0.clone());
        for k in 1..=n {
            let mut acc = BigInt::zero();
            for j in 1..=k {
                let f = &self.coeffs[j];
                if !f.is_zero() {
                    acc += f * &g[k - j];
                }
            }
            // c0 = ±1, so dividing by it is multiplying by it
            g.push(-(acc * c0));
        }
        Ok(QSeries {
            trunc_order: n,
            coeffs: g,
        })
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> QSeries {
        let mut out = Self::zero(self.trunc_order);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k > self.trunc_order {
                break;
            }
            out.coeffs[i + k] = c.clone();
        }
        out
    }

    pub fn pow(&self, e: u32) -> QSeries {
        let mut acc = Self::one(self.trunc_order);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries({self})")
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{mag}q^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.trunc_order + 1)
    }
}

// Operator forms panic on mismatched orders: that is always a caller bug.
impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries {
            trunc_order: self.trunc_order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    trunc_order: usize,
    coeffs: Vec<String>,
}

impl Serialize for QSeries {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SeriesJson {
            trunc_order: self.trunc_order,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = SeriesJson::deserialize(d)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|_| SeriesError::BadCoefficient(s.clone()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        QSeries::try_from_vec(coeffs, raw.trunc_order).map_err(D::Error::custom)
    }
}

/// `prod_{k in factors} (1 - q^k)` truncated at `trunc_order`.
fn product_of_one_minus(factors: impl IntoIterator<Item = usize>, trunc_order: usize) -> QSeries {
    let mut acc = QSeries::one(trunc_order);
    for k in factors {
        if k == 0 {
            // 1 - q^0 = 0 never occurs in the box formula (s+t+r-2 >= 1)
            unreachable!("factor 1 - q^0");
        }
        if k > trunc_order {
            continue;
        }
        // multiply in place by (1 - q^k), high to low
        for i in (k..=trunc_order).rev() {
            let lower = acc.coeffs[i - k].clone();
            acc.coeffs[i] -= lower;
        }
    }
    acc
}

/// MacMahon's generating function for plane partitions,
/// `M(q) = prod_{i >= 1} (1 - q^i)^{-i}`.
pub fn macmahon(trunc_order: usize) -> QSeries {
    let denominator = product_of_one_minus(
        (1..=trunc_order).flat_map(|i| std::iter::repeat_n(i, i)),
        trunc_order,
    );
    denominator
        .inverse()
        .expect("product of (1 - q^i) has constant term 1")
}

/// Generating function of plane partitions inside an `a x b x c` box,
/// `prod_{s,t,r} (1 - q^{s+t+r-1}) / (1 - q^{s+t+r-2})`.
pub fn macmahon_box(a: usize, b: usize, c: usize, trunc_order: usize) -> QSeries {
    let triples = || {
        (1..=a).flat_map(move |s| (1..=b).flat_map(move |t| (1..=c).map(move |r| s + t + r)))
    };
    let numerator = product_of_one_minus(triples().map(|w| w - 1), trunc_order);
    let denominator = product_of_one_minus(triples().map(|w| w - 2), trunc_order);
    &numerator
        * &denominator
            .inverse()
            .expect("product of (1 - q^k) has constant term 1")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64], n: usize) -> QSeries {
        QSeries::from_coeffs(c.iter().copied(), n)
    }

    #[test]
    fn add_examples() {
        assert_eq!(&s(&[1, 1], 1) + &s(&[0, 2], 1), s(&[1, 3], 1));
        let f = s(&[3, -1, 4], 2);
        assert_eq!(&f + &QSeries::zero(2), f);
        let m = macmahon(2);
        assert!((&m + &-&m).is_zero());
    }

    #[test]
    fn mismatched_orders_are_errors() {
        let e = s(&[1], 1).try_add(&s(&[1], 2)).unwrap_err();
        assert_eq!(e, SeriesError::OrderMismatch(1, 2));
        assert!(s(&[1], 1).try_mul(&s(&[1], 3)).is_err());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&s(&[1, 1], 2) * &s(&[1, 1], 2), s(&[1, 2, 1], 2));
        let f = s(&[2, 0, -5], 2);
        assert_eq!(&f * &QSeries::one(2), f);
        let m111 = macmahon_box(1, 1, 1, 2);
        assert_eq!(&m111 * &m111, s(&[1, 2, 1], 2));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(s(&[1, -1], 3).inverse().unwrap(), s(&[1, 1, 1, 1], 3));
        assert_eq!(QSeries::one(4).inverse().unwrap(), QSeries::one(4));
        let m = macmahon(4);
        assert_eq!(&m.inverse().unwrap() * &m, QSeries::one(4));
        let neg = s(&[-1, 2], 3);
        assert_eq!(&neg * &neg.inverse().unwrap(), QSeries::one(3));
    }

    #[test]
    fn non_unit_constant_is_rejected() {
        assert!(matches!(
            s(&[2, 1], 3).inverse(),
            Err(SeriesError::NotInvertible(_))
        ));
        assert!(QSeries::zero(2).inverse().is_err());
    }

    #[test]
    fn macmahon_examples() {
        assert_eq!(macmahon(6), s(&[1, 1, 3, 6, 13, 24, 48], 6));
        assert_eq!(macmahon(0), QSeries::one(0));
        assert_eq!(macmahon(2), s(&[1, 1, 3], 2));
    }

    #[test]
    fn macmahon_box_examples() {
        assert_eq!(macmahon_box(1, 1, 1, 3), s(&[1, 1], 3));
        for n in 0..5 {
            assert_eq!(macmahon_box(0, 3, 2, n), QSeries::one(n));
            assert_eq!(macmahon_box(2, 0, 2, n), QSeries::one(n));
        }
        assert_eq!(macmahon_box(1, 1, 2, 4), s(&[1, 1, 1], 4));
    }

    #[test]
    fn display_and_json() {
        let f = s(&[1, -3, 0, 2], 3);
        assert_eq!(f.to_string(), "1 - 3q + 2q^3 + O(q^4)");
        let j = serde_json::to_string(&f).unwrap();
        assert_eq!(j, r#"{"trunc_order":3,"coeffs":["1","-3","0","2"]}"#);
        let back: QSeries = serde_json::from_str(&j).unwrap();
        assert_eq!(back, f);
        let bad = serde_json::from_str::<QSeries>(r#"{"trunc_order":3,"coeffs":["1"]}"#);
        assert!(bad.is_err());
    }

    #[test]
    fn shift_and_truncate() {
        let f = s(&[1, 2, 3], 2);
        assert_eq!(f.shift(1), s(&[0, 1, 2], 2));
        assert_eq!(f.shift(5), QSeries::zero(2));
        assert_eq!(f.truncate(1), s(&[1, 2], 1));
        assert_eq!(f.eval_at_one(), BigInt::from(6));
    }
}
