//! Table-based arithmetic for the quadratic extension fields used by the
//! brute-force hermitian geometry: F_{q^2} for q in {2, 3, 4, 5}.

use crate::error::{Error, Result};

/// F_{q^2} with precomputed add/mul/inverse tables and the conjugation
/// `x -> x^q`. Elements are integers `0..q^2` encoding base-p digit
/// vectors of polynomial residues modulo a fixed irreducible polynomial
/// (Conway-polynomial convention).
#[derive(Debug, Clone)]
pub struct FiniteField {
    pub q: usize,
    pub q2: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
    conj: Vec<u16>,
}

/// Conway polynomial for F_{p^m}, as ascending coefficients of the monic
/// modulus with the leading 1 omitted.
fn conway(q: usize) -> Result<(usize, Vec<usize>)> {
    match q {
        // F_4 = F_2[t]/(t^2 + t + 1)
        2 => Ok((2, vec![1, 1])),
        // F_9 = F_3[t]/(t^2 + 2t + 2)
        3 => Ok((3, vec![2, 2])),
        // F_16 = F_2[t]/(t^4 + t + 1)
        4 => Ok((2, vec![1, 1, 0, 0])),
        // F_25 = F_5[t]/(t^2 + 4t + 2)
        5 => Ok((5, vec![2, 4])),
        _ => Err(Error::UnsupportedField { q }),
    }
}

impl FiniteField {
    pub fn new(q: usize) -> Result<FiniteField> {
        let (p, modulus) = conway(q)?;
        let m = modulus.len();
        let q2 = q * q;
        debug_assert_eq!(p.pow(m as u32), q2);

        let decode = |x: usize| -> Vec<usize> {
            let mut digits = vec![0usize; m];
            let mut x = x;
            for d in digits.iter_mut() {
                *d = x % p;
                x /= p;
            }
            digits
        };
        let encode = |digits: &[usize]| -> usize {
            digits.iter().rev().fold(0, |acc, &d| acc * p + d)
        };

        let mut add = vec![0u16; q2 * q2];
        let mut mul = vec![0u16; q2 * q2];
        let mut neg = vec![0u16; q2];
        for a in 0..q2 {
            let da = decode(a);
            neg[a] = encode(&da.iter().map(|&x| (p - x) % p).collect::<Vec<_>>()) as u16;
            for b in 0..q2 {
                let db = decode(b);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q2 + b] = encode(&sum) as u16;

                // polynomial product reduced modulo the Conway polynomial
                let mut prod = vec![0usize; 2 * m - 1];
                for (i, &x) in da.iter().enumerate() {
                    for (j, &y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for k in (m..prod.len()).rev() {
                    let c = prod[k];
                    if c != 0 {
                        prod[k] = 0;
                        for (i, &mc) in modulus.iter().enumerate() {
                            // t^k = -modulus * t^{k-m}
                            prod[k - m + i] = (prod[k - m + i] + c * (p - mc) % p) % p;
                        }
                    }
                }
                mul[a * q2 + b] = encode(&prod[..m]) as u16;
            }
        }

        let mut field = FiniteField {
            q,
            q2,
            add,
            mul,
            neg,
            inv: vec![0u16; q2],
            conj: vec![0u16; q2],
        };
        for a in 1..q2 {
            field.inv[a] = field.pow(a, q2 - 2) as u16;
        }
        for a in 0..q2 {
            field.conj[a] = field.pow(a, q) as u16;
        }
        field.check_axioms();
        Ok(field)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q2 + b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q2 + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: usize) -> usize {
        assert!(a != 0, "inverse of zero");
        self.inv[a] as usize
    }

    /// Conjugation `x -> x^q`, the involutive automorphism over F_q.
    pub fn conj(&self, a: usize) -> usize {
        self.conj[a] as usize
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        let mut acc = 1usize;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// Exhaustive check of the field axioms and conjugation properties on
    /// the freshly built tables.
    fn check_axioms(&self) {
        let n = self.q2;
        for a in 0..n {
            assert_eq!(self.add(a, 0), a);
            assert_eq!(self.mul(a, 1), a);
            assert_eq!(self.add(a, self.neg(a)), 0);
            if a != 0 {
                assert_eq!(self.mul(a, self.inv(a)), 1);
            }
            assert_eq!(self.conj(self.conj(a)), a, "conjugation is an involution");
        }
        for a in 0..n {
            for b in 0..n {
                assert_eq!(self.add(a, b), self.add(b, a));
                assert_eq!(self.mul(a, b), self.mul(b, a));
                assert_eq!(
                    self.conj(self.mul(a, b)),
                    self.mul(self.conj(a), self.conj(b))
                );
                assert_eq!(
                    self.conj(self.add(a, b)),
                    self.add(self.conj(a), self.conj(b))
                );
                for c in 0..n {
                    assert_eq!(self.mul(a, self.add(b, c)), self.add(self.mul(a, b), self.mul(a, c)));
                    assert_eq!(self.mul(a, self.mul(b, c)), self.mul(self.mul(a, b), c));
                }
            }
        }
        let fixed = (0..n).filter(|&a| self.conj(a) == a).count();
        assert_eq!(fixed, self.q, "conjugation fixes exactly the subfield F_q");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructs_all_supported_sizes() {
        for q in [2usize, 3, 4, 5] {
            let f = FiniteField::new(q).unwrap();
            assert_eq!(f.q2, q * q);
        }
    }

    #[test]
    fn rejects_unsupported() {
        assert!(matches!(
            FiniteField::new(6),
            Err(Error::UnsupportedField { q: 6 })
        ));
        assert!(matches!(FiniteField::new(7), Err(_)));
    }

    #[test]
    fn f4_norms() {
        // in F_4, x * conj(x) = x^3 lands in F_2 and is 1 for x != 0
        let f = FiniteField::new(2).unwrap();
        for a in 1..f.q2 {
            assert_eq!(f.mul(a, f.conj(a)), 1);
        }
    }
}
