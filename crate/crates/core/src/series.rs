//! Formal power series in `q`, truncated at a fixed order, with exact
//! arbitrary-precision integer coefficients.
//!
//! Every binary operation truncates its result to the smaller of the two
//! operand orders, so computing at order `N` and then truncating to `M < N`
//! gives the same coefficients as computing at order `M` directly.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::SeriesError;

/// Sign of a monomial or Pochhammer factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i64(s: i64) -> Option<Sign> {
        match s {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `(-1)^k` as a sign.
    pub fn parity(k: i64) -> Sign {
        if k.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn pow(self, k: i64) -> Sign {
        match self {
            Sign::Plus => Sign::Plus,
            Sign::Minus => Sign::parity(k),
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// `±q^exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedMonomial {
    pub sign: Sign,
    pub exponent: usize,
}

impl SignedMonomial {
    pub fn new(sign: Sign, exponent: usize) -> Self {
        SignedMonomial { sign, exponent }
    }
}

/// First coefficient at which two series differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: usize,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

/// A power series `c_0 + c_1 q + ... + c_{order-1} q^{order-1} + O(q^order)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Builds a series from sparse `(exponent, value)` pairs.
    pub fn make<I, V>(order: usize, terms: I) -> Result<Self, SeriesError>
    where
        I: IntoIterator<Item = (usize, V)>,
        V: Into<BigInt>,
    {
        if order == 0 {
            return Err(SeriesError::ZeroOrder);
        }
        let mut coeffs = vec![BigInt::zero(); order];
        let mut seen = vec![false; order];
        for (exponent, value) in terms {
            if exponent >= order {
                return Err(SeriesError::ExponentOutOfRange { exponent, order });
            }
            if seen[exponent] {
                return Err(SeriesError::DuplicateExponent(exponent));
            }
            seen[exponent] = true;
            coeffs[exponent] = value.into();
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Wraps a dense coefficient vector. Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "series order must be at least 1");
        TruncatedSeries { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(vec![BigInt::zero(); order])
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, SignedMonomial::new(Sign::Plus, 0))
    }

    /// `±q^e`, or zero when `e` is beyond the order.
    pub fn monomial(order: usize, m: SignedMonomial) -> Self {
        let mut s = Self::zero(order);
        if m.exponent < order {
            s.coeffs[m.exponent] = BigInt::from(m.sign.as_i64());
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^k`; zero past the order.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Exponents carrying nonzero coefficients.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, _)| k).collect()
    }

    /// Keeps the first `order` coefficients. Panics if `order` is zero or
    /// exceeds the current order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order >= 1 && order <= self.order());
        Self::from_coeffs(self.coeffs[..order].to_vec())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_coeffs((0..n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_coeffs((0..n).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect())
    }

    pub fn neg(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    /// Schoolbook Cauchy product.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs[..n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(out)
    }

    /// Multiplicative inverse for a series whose constant term is `±1`.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigInt::one() {
            return Err(SeriesError::NonUnitConstant(c0.clone()));
        }
        let n = self.order();
        let mut out: Vec<BigInt> = Vec::with_capacity(n);
        out.push(c0.clone());
        for k in 1..n {
            let mut acc = BigInt::zero();
            for i in 1..=k {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc += a * &out[k - i];
                }
            }
            // c0 is its own inverse
            out.push(-(acc * c0));
        }
        Ok(Self::from_coeffs(out))
    }

    /// `f(q) -> f(-q)`.
    pub fn substitute_neg_q(&self) -> Self {
        Self::from_coeffs(
            self.coeffs.iter().enumerate().map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() }).collect(),
        )
    }

    /// `f(q) -> f(q^k)`.
    pub fn dilate(&self, k: usize) -> Self {
        assert!(k >= 1);
        let mut out = vec![BigInt::zero(); self.order()];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * k >= self.order() {
                break;
            }
            out[i * k] = c.clone();
        }
        Self::from_coeffs(out)
    }

    /// Multiplies by `q^e`, dropping what falls past the order.
    pub fn shift(&self, e: usize) -> Self {
        let n = self.order();
        let mut out = vec![BigInt::zero(); n];
        if e < n {
            out[e..].clone_from_slice(&self.coeffs[..n - e]);
        }
        Self::from_coeffs(out)
    }

    /// Smallest `k < upto` where the coefficients differ.
    pub fn first_mismatch(&self, other: &Self, upto: usize) -> Result<Option<Mismatch>, SeriesError> {
        let available = self.order().min(other.order());
        if upto > available {
            return Err(SeriesError::WindowTooLarge { upto, order: available });
        }
        Ok((0..upto).find(|&k| self.coeffs[k] != other.coeffs[k]).map(|k| Mismatch {
            exponent: k,
            lhs: self.coeffs[k].clone(),
            rhs: other.coeffs[k].clone(),
        }))
    }

    /// In-place multiplication by the binomial `1 + m`.
    pub(crate) fn mul_binomial(&mut self, m: SignedMonomial) {
        let e = m.exponent;
        let n = self.order();
        if e >= n {
            return;
        }
        if e == 0 {
            match m.sign {
                Sign::Plus => self.coeffs.iter_mut().for_each(|c| *c *= 2),
                Sign::Minus => self.coeffs.iter_mut().for_each(|c| *c = BigInt::zero()),
            }
            return;
        }
        for k in (e..n).rev() {
            if self.coeffs[k - e].is_zero() {
                continue;
            }
            let (lo, hi) = self.coeffs.split_at_mut(k);
            match m.sign {
                Sign::Plus => hi[0] += &lo[k - e],
                Sign::Minus => hi[0] -= &lo[k - e],
            }
        }
    }

    /// In-place division by the binomial `1 + m`, `m.exponent >= 1`.
    pub(crate) fn div_binomial(&mut self, m: SignedMonomial) {
        let e = m.exponent;
        assert!(e >= 1, "division by a binomial with non-unit constant term");
        let n = self.order();
        for k in e..n {
            if self.coeffs[k - e].is_zero() {
                continue;
            }
            let (lo, hi) = self.coeffs.split_at_mut(k);
            match m.sign {
                Sign::Plus => hi[0] -= &lo[k - e],
                Sign::Minus => hi[0] += &lo[k - e],
            }
        }
    }

    pub(crate) fn add_assign(&mut self, other: &Self) {
        let n = self.order().min(other.order());
        self.coeffs.truncate(n);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub(crate) fn add_to_coeff(&mut self, k: usize, value: i64) {
        self.coeffs[k] += value;
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if wrote {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{mag}*q^{k}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order())
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::add(self, rhs)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::sub(self, rhs)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries::neg(self)
    }
}
