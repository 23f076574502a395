//! Hilbert series written as `numerator(t) / (1 - t)^m`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::partitions::binomial;

#[derive(Clone, Debug)]
pub struct HilbertSeries {
    numerator: Vec<BigInt>,
    denominator_exponent: u32,
}

impl HilbertSeries {
    pub fn new(numerator: Vec<BigInt>, denominator_exponent: u32) -> Self {
        let mut hs = HilbertSeries {
            numerator,
            denominator_exponent,
        };
        hs.trim();
        hs
    }

    pub fn zero(denominator_exponent: u32) -> Self {
        Self::new(Vec::new(), denominator_exponent)
    }

    /// `(1 - t)^k / (1 - t)^m`.
    pub fn one_minus_t_power(k: u32, denominator_exponent: u32) -> Self {
        let numerator = (0..=k)
            .map(|i| {
                let c = BigInt::from(binomial(u64::from(k), u64::from(i)));
                if i % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .collect();
        Self::new(numerator, denominator_exponent)
    }

    fn trim(&mut self) {
        while self.numerator.last().is_some_and(|c| c.is_zero()) {
            self.numerator.pop();
        }
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    pub fn denominator_exponent(&self) -> u32 {
        self.denominator_exponent
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    /// Adds `c · t^power` to the numerator.
    pub fn add_term(&mut self, power: usize, c: BigInt) {
        if self.numerator.len() <= power {
            self.numerator.resize(power + 1, BigInt::zero());
        }
        self.numerator[power] += c;
        self.trim();
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut numerator = vec![BigInt::zero(); k];
        numerator.extend(self.numerator.iter().cloned());
        Self::new(numerator, self.denominator_exponent)
    }

    /// The same series with the denominator raised to `(1 - t)^m`, `m` at
    /// least the current exponent.
    pub fn with_denominator(&self, m: u32) -> Self {
        assert!(m >= self.denominator_exponent);
        let factor = Self::one_minus_t_power(m - self.denominator_exponent, 0);
        Self::new(poly_mul(&self.numerator, &factor.numerator), m)
    }

    /// Coefficients of the power series expansion in degrees `0..=k_max`.
    pub fn coefficients(&self, k_max: usize) -> Vec<BigInt> {
        let m = u64::from(self.denominator_exponent);
        (0..=k_max)
            .map(|k| {
                self.numerator
                    .iter()
                    .enumerate()
                    .take(k + 1)
                    .map(|(i, c)| {
                        let j = (k - i) as u64;
                        let b = if m == 0 {
                            if j == 0 {
                                One::one()
                            } else {
                                Zero::zero()
                            }
                        } else {
                            binomial(m - 1 + j, m - 1)
                        };
                        c * BigInt::from(b)
                    })
                    .fold(BigInt::zero(), |a, b| a + b)
            })
            .collect()
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let m = self.denominator_exponent.max(other.denominator_exponent);
        (self.with_denominator(m), other.with_denominator(m))
    }
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

impl PartialEq for HilbertSeries {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.aligned(other);
        a.numerator == b.numerator
    }
}

impl Eq for HilbertSeries {}

impl Add for &HilbertSeries {
    type Output = HilbertSeries;

    fn add(self, rhs: &HilbertSeries) -> HilbertSeries {
        let (mut a, b) = self.aligned(rhs);
        if a.numerator.len() < b.numerator.len() {
            a.numerator.resize(b.numerator.len(), BigInt::zero());
        }
        for (x, y) in a.numerator.iter_mut().zip(&b.numerator) {
            *x += y;
        }
        a.trim();
        a
    }
}

impl Neg for &HilbertSeries {
    type Output = HilbertSeries;

    fn neg(self) -> HilbertSeries {
        HilbertSeries::new(
            self.numerator.iter().map(|c| -c).collect(),
            self.denominator_exponent,
        )
    }
}

impl Sub for &HilbertSeries {
    type Output = HilbertSeries;

    fn sub(self, rhs: &HilbertSeries) -> HilbertSeries {
        self + &(-rhs)
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        write!(f, "(")?;
        for (k, c) in self.numerator.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{mag}t^{k}")?,
            }
        }
        write!(f, ") / (1-t)^{}", self.denominator_exponent)
    }
}
