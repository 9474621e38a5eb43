//! Brute-force finite hermitian geometry over F_{q^2} for small q:
//! isotropic vectors and lines, special subspaces, the point sets of the
//! variety, and the case counts behind the induction formulas.

mod field;

pub use field::FiniteField;

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default cap on `(q^2)^n`, the size of the ambient vector enumeration.
pub const DEFAULT_BUDGET: u64 = 1 << 20;

/// The standard nondegenerate hermitian space: F_{q^2}^n with the form
/// `h(x, y) = sum_i x_i * conj(y_i)` (identity Gram matrix; all
/// nondegenerate forms of a given dimension are isometric).
#[derive(Debug, Clone)]
pub struct HermSpace {
    pub field: Arc<FiniteField>,
    pub n: usize,
    pub budget: u64,
}

/// A subspace stored as its reduced-row-echelon basis, the canonical
/// representative: two subspaces are equal iff their echelon forms are.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Vec<Vec<usize>>,
    n: usize,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<usize>] {
        &self.basis
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }
}

impl fmt::Display for Subspace {
    /// Rows of field-element integers, e.g. `[[1,0,2],[0,1,1]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl HermSpace {
    pub fn new(q: usize, n: usize) -> Result<HermSpace> {
        Ok(HermSpace {
            field: Arc::new(FiniteField::new(q)?),
            n,
            budget: DEFAULT_BUDGET,
        })
    }

    pub fn with_budget(mut self, budget: u64) -> HermSpace {
        self.budget = budget;
        self
    }

    fn check_budget(&self, what: &str) -> Result<()> {
        let needed = (self.field.q2 as u64)
            .checked_pow(self.n as u32)
            .unwrap_or(u64::MAX);
        if needed > self.budget {
            return Err(Error::BudgetExceeded {
                what: what.to_string(),
                needed,
                budget: self.budget,
            });
        }
        Ok(())
    }

    /// The hermitian form `h(x, y) = sum_i x_i * conj(y_i)`.
    pub fn form(&self, x: &[usize], y: &[usize]) -> usize {
        let f = &self.field;
        let mut acc = 0;
        for (a, b) in x.iter().zip(y) {
            acc = f.add(acc, f.mul(*a, f.conj(*b)));
        }
        acc
    }

    fn n_vectors(&self) -> u64 {
        (self.field.q2 as u64).pow(self.n as u32)
    }

    fn decode_vector(&self, mut idx: u64) -> Vec<usize> {
        let q2 = self.field.q2 as u64;
        (0..self.n)
            .map(|_| {
                let d = (idx % q2) as usize;
                idx /= q2;
                d
            })
            .collect()
    }

    /// Reduced row echelon form; rows are a canonical basis of the span.
    pub fn rref(&self, rows: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        let f = &self.field;
        let mut rows = rows;
        let mut pivot_row = 0;
        for col in 0..self.n {
            let Some(src) = (pivot_row..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(pivot_row, src);
            let scale = f.inv(rows[pivot_row][col]);
            for x in rows[pivot_row].iter_mut() {
                *x = f.mul(*x, scale);
            }
            for r in 0..rows.len() {
                if r != pivot_row && rows[r][col] != 0 {
                    let factor = rows[r][col];
                    for c in 0..self.n {
                        let sub = f.mul(factor, rows[pivot_row][c]);
                        rows[r][c] = f.sub(rows[r][c], sub);
                    }
                }
            }
            pivot_row += 1;
            if pivot_row == rows.len() {
                break;
            }
        }
        rows.truncate(pivot_row);
        rows
    }

    pub fn subspace(&self, rows: Vec<Vec<usize>>) -> Subspace {
        Subspace {
            basis: self.rref(rows),
            n: self.n,
        }
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace {
            basis: Vec::new(),
            n: self.n,
        }
    }

    pub fn whole_space(&self) -> Subspace {
        let mut rows = vec![vec![0usize; self.n]; self.n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 1;
        }
        Subspace { basis: rows, n: self.n }
    }

    /// Reduces a vector against a subspace basis; zero iff it is a member.
    fn reduce(&self, sub: &Subspace, v: &[usize]) -> Vec<usize> {
        let f = &self.field;
        let mut v = v.to_vec();
        for row in &sub.basis {
            let col = row.iter().position(|&x| x != 0).expect("RREF pivot");
            if v[col] != 0 {
                let factor = v[col];
                for c in 0..self.n {
                    v[c] = f.sub(v[c], f.mul(factor, row[c]));
                }
            }
        }
        v
    }

    pub fn contains_vector(&self, sub: &Subspace, v: &[usize]) -> bool {
        self.reduce(sub, v).iter().all(|&x| x == 0)
    }

    pub fn contains_subspace(&self, outer: &Subspace, inner: &Subspace) -> bool {
        inner.basis.iter().all(|v| self.contains_vector(outer, v))
    }

    pub fn sum(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut rows = a.basis.clone();
        rows.extend(b.basis.iter().cloned());
        self.subspace(rows)
    }

    /// Left orthogonal complement `{x : h(x, u) = 0 for all u in U}`.
    pub fn orth_complement(&self, u: &Subspace) -> Subspace {
        // h(x, u) = sum_i x_i conj(u_i): a linear system with coefficient
        // rows conj(u), so the complement is its nullspace
        let f = &self.field;
        let rows: Vec<Vec<usize>> = u
            .basis
            .iter()
            .map(|b| b.iter().map(|&x| f.conj(x)).collect())
            .collect();
        self.nullspace(rows)
    }

    /// Nullspace `{x : A x = 0}` of a coefficient matrix.
    pub fn nullspace(&self, rows: Vec<Vec<usize>>) -> Subspace {
        let f = &self.field;
        let rref = self.rref(rows);
        let mut pivots = vec![None; self.n];
        for (r, row) in rref.iter().enumerate() {
            let col = row.iter().position(|&x| x != 0).expect("RREF pivot");
            pivots[col] = Some(r);
        }
        let mut basis = Vec::new();
        for free in 0..self.n {
            if pivots[free].is_some() {
                continue;
            }
            let mut v = vec![0usize; self.n];
            v[free] = 1;
            for (col, pivot) in pivots.iter().enumerate() {
                if let Some(r) = pivot {
                    v[col] = f.neg(rref[*r][free]);
                }
            }
            basis.push(v);
        }
        self.subspace(basis)
    }

    /// Intersection via the form: `U1 ^ U2 = (U1^perp + U2^perp)^perp`.
    pub fn intersection(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let sum = self.sum(&self.orth_complement(a), &self.orth_complement(b));
        self.orth_complement(&sum)
    }

    /// Special: `W^perp` contained in `W`.
    pub fn is_special(&self, w: &Subspace) -> bool {
        self.contains_subspace(w, &self.orth_complement(w))
    }

    /// Nonzero vectors with `h(x, x) = 0`, up to scalar: the isotropic
    /// lines, counted by projective enumeration.
    pub fn count_isotropic_lines(&self) -> Result<u64> {
        self.check_budget("isotropic line enumeration")?;
        let mut vectors = 0u64;
        for idx in 1..self.n_vectors() {
            let v = self.decode_vector(idx);
            if self.form(&v, &v) == 0 {
                vectors += 1;
            }
        }
        Ok(vectors / (self.field.q2 as u64 - 1))
    }

    /// All totally isotropic subspaces of dimension `r`, by recursive
    /// basis extension with echelon-form deduplication.
    pub fn totally_isotropic_subspaces(&self, r: usize) -> Result<Vec<Subspace>> {
        self.check_budget("totally isotropic subspace enumeration")?;
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        if r == 0 {
            return Ok(vec![self.zero_subspace()]);
        }
        self.extend_isotropic(&self.zero_subspace(), r, &mut seen, &mut out);
        Ok(out)
    }

    fn extend_isotropic(
        &self,
        current: &Subspace,
        r: usize,
        seen: &mut HashSet<Vec<Vec<usize>>>,
        out: &mut Vec<Subspace>,
    ) {
        for idx in 1..self.n_vectors() {
            let v = self.decode_vector(idx);
            if self.form(&v, &v) != 0 {
                continue;
            }
            // orthogonality to the current basis; h(v,b) = 0 iff h(b,v) = 0
            if !current.basis.iter().all(|b| self.form(&v, b) == 0) {
                continue;
            }
            if self.contains_vector(current, &v) {
                continue;
            }
            let mut rows = current.basis.clone();
            rows.push(v);
            let extended = self.subspace(rows);
            if !seen.insert(extended.basis.clone()) {
                continue;
            }
            if extended.dim() == r {
                out.push(extended);
            } else {
                self.extend_isotropic(&extended, r, seen, out);
            }
        }
    }

    /// All codimension-`r` special subspaces, via the bijection
    /// `W -> W^perp` with totally isotropic `r`-dimensional subspaces.
    pub fn enumerate_special_subspaces(&self, r: usize) -> Result<Vec<Subspace>> {
        if r == 0 {
            return Ok(vec![self.whole_space()]);
        }
        let isotropic = self.totally_isotropic_subspaces(r)?;
        Ok(isotropic
            .iter()
            .map(|t| self.orth_complement(t))
            .collect())
    }
}

/// Number of isotropic lines in F_{q^2}^n under the standard form.
pub fn count_isotropic_lines(n: usize, q: usize, budget: u64) -> Result<u64> {
    HermSpace::new(q, n)?.with_budget(budget).count_isotropic_lines()
}

/// Number of points of the variety over the ground field: `(d+1)`-dim
/// subspaces `U` of F_{q^2}^{2d+1} with `U^perp` contained in `U`. Such a
/// `U` is exactly `T^perp` for a totally isotropic `T` of dimension `d`,
/// so the enumeration runs over those `T`.
pub fn count_dl_points(d: usize, q: usize, budget: u64) -> Result<u64> {
    if d == 0 {
        return Ok(1);
    }
    let space = HermSpace::new(q, 2 * d + 1)?.with_budget(budget);
    let isotropic = space.totally_isotropic_subspaces(d)?;
    let mut count = 0u64;
    for t in &isotropic {
        let u = space.orth_complement(t);
        debug_assert_eq!(u.dim(), d + 1);
        debug_assert_eq!(space.orth_complement(&u), *t);
        debug_assert!(space.contains_subspace(&u, t));
        count += 1;
    }
    Ok(count)
}

/// Case counts from the induction step: fix one codimension-`(d-1)`
/// special subspace `W'`, classify every codimension-1 special `W` into
/// (a) `W'` inside `W`, (b) `W ^ W'` special, (c) otherwise.
pub fn classify_pairs(d: usize, q: usize, budget: u64) -> Result<(u64, u64, u64)> {
    assert!(d >= 2, "pair classification needs d >= 2");
    let space = HermSpace::new(q, 2 * d + 1)?.with_budget(budget);
    let specials = space.enumerate_special_subspaces(1)?;
    let w_prime = space
        .enumerate_special_subspaces(d - 1)?
        .into_iter()
        .next()
        .expect("a codimension-(d-1) special subspace exists");
    Ok(classify_pairs_against(&space, &w_prime, &specials))
}

/// The classification loop for one fixed `W'`; exposed so tests can check
/// the counts are independent of the choice.
pub fn classify_pairs_against(
    space: &HermSpace,
    w_prime: &Subspace,
    specials: &[Subspace],
) -> (u64, u64, u64) {
    let mut a = 0;
    let mut b = 0;
    let mut c = 0;
    for w in specials {
        if space.contains_subspace(w, w_prime) {
            a += 1;
        } else if space.is_special(&space.intersection(w, w_prime)) {
            b += 1;
        } else {
            c += 1;
        }
    }
    (a, b, c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orth_complement_extremes() {
        let space = HermSpace::new(2, 3).unwrap();
        let whole = space.whole_space();
        let zero = space.zero_subspace();
        assert_eq!(space.orth_complement(&whole), zero);
        assert_eq!(space.orth_complement(&zero), whole);
    }

    #[test]
    fn isotropic_line_counts() {
        assert_eq!(count_isotropic_lines(1, 2, DEFAULT_BUDGET).unwrap(), 0);
        assert_eq!(count_isotropic_lines(3, 2, DEFAULT_BUDGET).unwrap(), 9);
        assert_eq!(count_isotropic_lines(5, 2, DEFAULT_BUDGET).unwrap(), 165);
    }

    #[test]
    fn budget_errors() {
        assert!(matches!(
            count_isotropic_lines(5, 3, 100),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn special_subspace_counts() {
        let space = HermSpace::new(2, 3).unwrap();
        assert_eq!(space.enumerate_special_subspaces(1).unwrap().len(), 9);
        assert_eq!(space.enumerate_special_subspaces(0).unwrap().len(), 1);
        let n5 = HermSpace::new(2, 5).unwrap();
        assert_eq!(n5.enumerate_special_subspaces(1).unwrap().len(), 165);
    }

    #[test]
    fn special_subspaces_have_isotropic_perp() {
        let space = HermSpace::new(2, 5).unwrap();
        for w in space.enumerate_special_subspaces(1).unwrap() {
            let perp = space.orth_complement(&w);
            assert_eq!(perp.dim(), 1);
            let v = &perp.basis()[0];
            assert_eq!(space.form(v, v), 0);
            assert!(space.contains_subspace(&w, &perp));
        }
    }

    #[test]
    fn dl_point_counts() {
        assert_eq!(count_dl_points(0, 2, DEFAULT_BUDGET).unwrap(), 1);
        assert_eq!(count_dl_points(1, 2, DEFAULT_BUDGET).unwrap(), 9);
        assert_eq!(count_dl_points(1, 3, DEFAULT_BUDGET).unwrap(), 28);
    }

    #[test]
    fn dl_points_match_fermat_curve() {
        // independent oracle for d=1: projective solutions of
        // x^{q+1} + y^{q+1} + z^{q+1} = 0 over F_{q^2}
        for q in [2usize, 3] {
            let f = FiniteField::new(q).unwrap();
            let mut solutions = 0u64;
            for x in 0..f.q2 {
                for y in 0..f.q2 {
                    for z in 0..f.q2 {
                        if (x, y, z) == (0, 0, 0) {
                            continue;
                        }
                        let s = f.add(
                            f.add(f.pow(x, q + 1), f.pow(y, q + 1)),
                            f.pow(z, q + 1),
                        );
                        if s == 0 {
                            solutions += 1;
                        }
                    }
                }
            }
            let points = solutions / (f.q2 as u64 - 1);
            assert_eq!(
                count_dl_points(1, q, DEFAULT_BUDGET).unwrap(),
                points,
                "q = {q}"
            );
        }
    }

    #[test]
    fn classify_pairs_d2() {
        let (a, b, c) = classify_pairs(2, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(a, 1);
        assert_eq!(b, 36);
        assert_eq!(a + b + c, 165);
    }

    #[test]
    fn double_complement_exhaustive_small() {
        let space = HermSpace::new(2, 3).unwrap();
        // all 1- and 2-dimensional subspaces of F_4^3
        let mut seen = HashSet::new();
        let n_vectors = 4u64.pow(3);
        for i in 1..n_vectors {
            let v = space.decode_vector(i);
            let line = space.subspace(vec![v.clone()]);
            if seen.insert(line.basis().to_vec()) {
                let perp = space.orth_complement(&line);
                assert_eq!(perp.dim(), 2);
                assert_eq!(space.orth_complement(&perp), line);
            }
            for j in i + 1..n_vectors {
                let w = space.decode_vector(j);
                let plane = space.subspace(vec![v.clone(), w]);
                if plane.dim() == 2 && seen.insert(plane.basis().to_vec()) {
                    let perp = space.orth_complement(&plane);
                    assert_eq!(perp.dim(), 1);
                    assert_eq!(space.orth_complement(&perp), plane);
                }
            }
        }
    }
}
