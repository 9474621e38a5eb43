//! Univariate exact polynomials in `q` and the closed-form counting
//! functions: the q-analogue `[n]_q`, the q-double factorial
//! `[2d]_q!! = [2]_q [4]_q ... [2d]_q`, and the isotropic-line count
//! `(1 + q^{2d+1})(1 - q^{2d}) / (1 - q^2)` for odd dimension `n = 2d+1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A univariate polynomial in `q` with arbitrary-precision integer
/// coefficients. `coeffs[i]` is the coefficient of `q^i`; trailing zeros
/// are stripped, so the zero polynomial is the empty sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        QPoly::from_coeffs(vec![c.into()])
    }

    /// `c * q^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        QPoly::from_coeffs(coeffs)
    }

    /// Builds a polynomial from an ascending coefficient vector,
    /// normalizing away trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        QPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `q^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Evaluates at an integer value of `q`.
    pub fn eval(&self, q: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        acc
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        QPoly { coeffs }
    }

    /// Ascending coefficients as decimal strings, the JSON wire form.
    pub fn json_coeffs(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for QPoly {
    /// Renders in ascending powers, e.g. `1 + 2*q + q^2`; zero terms
    /// are omitted and the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{mag}*q^{i}")?,
            }
        }
        Ok(())
    }
}

/// `[n]_q = 1 + q + ... + q^{n-1}`; the empty sum for `n = 0`.
pub fn q_int(n: usize) -> QPoly {
    QPoly::from_coeffs(vec![BigInt::one(); n])
}

/// The q-double factorial `[2d]_q!! = prod_{i=1}^{d} [2i]_q`, with the
/// empty product for `d = 0` equal to 1.
pub fn q_double_factorial(d: usize) -> QPoly {
    let mut acc = QPoly::one();
    for i in 1..=d {
        acc = &acc * &q_int(2 * i);
    }
    acc
}

/// Number of isotropic lines in a nondegenerate hermitian space of odd
/// dimension `n = 2d + 1`: `(1 + q^{2d+1})(1 - q^{2d}) / (1 - q^2)`,
/// as a polynomial in `q`. The division is exact for every valid `n`.
pub fn isotropic_line_count_formula(n: usize) -> QPoly {
    assert!(n % 2 == 1, "dimension must be odd, got {n}");
    let d = n / 2;
    if d == 0 {
        // factor (1 - q^0) = 0
        return QPoly::zero();
    }
    let num = &(&QPoly::one() + &QPoly::monomial(1, 2 * d + 1))
        * &(&QPoly::one() - &QPoly::monomial(1, 2 * d));
    let den = &QPoly::one() - &QPoly::monomial(1, 2);
    exact_div(&num, &den).expect("isotropic line formula divides exactly")
}

/// Exact polynomial division over the integers. Returns the quotient when
/// `den` divides `num` exactly, and an `InexactDivision` error carrying the
/// nonzero remainder otherwise.
pub fn exact_div(num: &QPoly, den: &QPoly) -> Result<QPoly> {
    assert!(!den.is_zero(), "division by the zero polynomial");
    if num.is_zero() {
        return Ok(QPoly::zero());
    }
    let dn = den.degree().unwrap();
    let lead = den.coeff(dn);
    let mut rem = num.clone();
    let mut quot = vec![BigInt::zero(); num.coeffs.len()];
    while let Some(dr) = rem.degree() {
        if dr < dn {
            break;
        }
        let (c, r) = num_integer::div_rem(rem.coeff(dr), lead.clone());
        if !r.is_zero() {
            return Err(Error::InexactDivision {
                remainder: rem.to_string(),
            });
        }
        quot[dr - dn] = c.clone();
        rem = &rem - &QPoly::monomial(c, dr - dn).mul(den);
    }
    if !rem.is_zero() {
        return Err(Error::InexactDivision {
            remainder: rem.to_string(),
        });
    }
    Ok(QPoly::from_coeffs(quot))
}
