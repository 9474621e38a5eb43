//! Sparse exact multivariate polynomials in `x_1..x_d` with `QPoly`
//! coefficients, Vandermonde products, and the coefficient-extraction
//! route to the degree.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::qseries::{self, QPoly};

/// Sparse multivariate polynomial: a map from exponent vectors (length
/// `nvars`) to nonzero `QPoly` coefficients. `q` lives in the coefficient
/// ring, never in the exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, QPoly>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: QPoly) -> Self {
        let mut p = MultiPoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::constant(nvars, QPoly::one())
    }

    /// The variable `x_{i+1}` (0-indexed `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        let mut p = MultiPoly::zero(nvars);
        p.add_term(exps, QPoly::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &QPoly)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Adds `coeff * x^exps` in place, pruning a resulting zero.
    pub fn add_term(&mut self, exps: Vec<u32>, coeff: QPoly) {
        assert_eq!(exps.len(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_nvars(&self, other: &MultiPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VarMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_nvars(other)?;
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn mul_scalar(&self, c: &QPoly) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, n: usize) -> MultiPoly {
        let mut acc = MultiPoly::one(self.nvars);
        for _ in 0..n {
            acc = acc.mul(self).expect("same nvars");
        }
        acc
    }

    /// The stored `QPoly` coefficient of the monomial, or zero if absent.
    pub fn coefficient_of(&self, mono: &[u32]) -> Result<QPoly> {
        if mono.len() != self.nvars {
            return Err(Error::VarMismatch {
                expected: self.nvars,
                found: mono.len(),
            });
        }
        Ok(self.terms.get(mono).cloned().unwrap_or_else(QPoly::zero))
    }

    /// Substitutes `x_i -> q * x_i`: each term picks up `q^(total degree)`.
    pub fn scale_vars_by_q(&self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let deg: u32 = e.iter().sum();
                    (e.clone(), c.shift(deg as usize))
                })
                .collect(),
        }
    }

    /// Sets `x_{i+1} = 0`, dropping that variable slot.
    pub fn eval_var_at_zero(&self, i: usize) -> MultiPoly {
        assert!(i < self.nvars);
        let mut out = MultiPoly::zero(self.nvars - 1);
        for (e, c) in &self.terms {
            if e[i] != 0 {
                continue;
            }
            let mut exps = e.clone();
            exps.remove(i);
            out.add_term(exps, c.clone());
        }
        out
    }

    /// Applies a permutation of the variable slots to every exponent vector.
    pub fn permute_vars(&self, perm: &[usize]) -> MultiPoly {
        assert_eq!(perm.len(), self.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut exps = vec![0u32; self.nvars];
            for (i, &to) in perm.iter().enumerate() {
                exps[to] = e[i];
            }
            out.add_term(exps, c.clone());
        }
        out
    }

    /// Leading term under lexicographic order on exponent vectors.
    fn leading_term(&self) -> Option<(&Vec<u32>, &QPoly)> {
        self.terms.iter().next_back()
    }

    /// Exact division: returns the quotient when `den` divides `self` in
    /// the multivariate ring, an `InexactDivision` error otherwise.
    pub fn exact_div(&self, den: &MultiPoly) -> Result<MultiPoly> {
        self.check_nvars(den)?;
        let (den_exp, den_coeff) = den.leading_term().expect("division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.nvars);
        while let Some((rem_exp, rem_coeff)) = rem.leading_term() {
            let exps: Option<Vec<u32>> = rem_exp
                .iter()
                .zip(den_exp)
                .map(|(a, b)| a.checked_sub(*b))
                .collect();
            let Some(exps) = exps else {
                return Err(Error::InexactDivision {
                    remainder: rem.to_string(),
                });
            };
            let coeff = qseries::exact_div(rem_coeff, den_coeff)?;
            let mut t = MultiPoly::zero(self.nvars);
            t.add_term(exps, coeff);
            rem = rem.sub(&t.mul(den)?)?;
            quot = quot.add(&t)?;
        }
        Ok(quot)
    }

    /// Terms in graded lexicographic order (total degree descending, then
    /// exponents descending), the rendering and JSON order.
    pub fn ordered_terms(&self) -> Vec<(Vec<u32>, QPoly)> {
        let mut terms: Vec<(Vec<u32>, QPoly)> = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        terms
    }
}

impl fmt::Display for MultiPoly {
    /// `(<QPoly>)*x1^2*x2 + ...` in graded-lexicographic term order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exps, coeff)) in self.ordered_terms().into_iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({coeff})")?;
            for (v, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{}", v + 1)?,
                    _ => write!(f, "*x{}^{}", v + 1, e)?,
                }
            }
        }
        Ok(())
    }
}

/// The Vandermonde product `prod_{i<j} (x_i - x_j)`; 1 for `d = 1`.
pub fn vandermonde(d: usize) -> MultiPoly {
    assert!(d >= 1);
    let mut acc = MultiPoly::one(d);
    for i in 0..d {
        for j in i + 1..d {
            let factor = MultiPoly::var(d, i).sub(&MultiPoly::var(d, j)).unwrap();
            acc = acc.mul(&factor).unwrap();
        }
    }
    acc
}

/// The coefficient polynomial
/// `(prod_{i,j} (q x_i + x_j)) * (x_1 + ... + x_d)^d * prod_{i<j} (x_i - x_j)`.
///
/// Products are taken bilinear factors first, then the power of the linear
/// form, then the Vandermonde, to keep intermediate support small.
pub fn build_coeff_poly(d: usize) -> MultiPoly {
    assert!(d >= 1);
    let q = QPoly::monomial(1, 1);
    let mut acc = MultiPoly::one(d);
    for i in 0..d {
        for j in 0..d {
            let factor = MultiPoly::var(d, i)
                .mul_scalar(&q)
                .add(&MultiPoly::var(d, j))
                .unwrap();
            acc = acc.mul(&factor).unwrap();
        }
    }
    let linear = (0..d).fold(MultiPoly::zero(d), |s, i| {
        s.add(&MultiPoly::var(d, i)).unwrap()
    });
    acc = acc.mul(&linear.pow(d)).unwrap();
    acc.mul(&vandermonde(d)).unwrap()
}

/// The exponent vector of the extraction target `x_1^{2d} x_2^{2d-1} ... x_d^{d+1}`.
pub fn target_monomial(d: usize) -> Vec<u32> {
    (0..d).map(|i| (2 * d - i) as u32).collect()
}

/// Degree by coefficient extraction: the `x_1^{2d} ... x_d^{d+1}`
/// coefficient of the coefficient polynomial.
pub fn degree_via_coeff(d: usize) -> QPoly {
    build_coeff_poly(d)
        .coefficient_of(&target_monomial(d))
        .expect("target monomial has d entries")
}
