//! The Chow ring of a Grassmannian as formal Schubert-class combinations
//! confined to an `m x w` box: Pieri rule, Littlewood-Richardson products,
//! the duality pairing, the class of the variety, and the Schubert-side
//! degree.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::partitions::{box_partitions, count_skew_syt, tableau_skew_shape, Partition, SkewShape};
use crate::qseries::QPoly;

/// The ambient rectangle of a Grassmannian of `m`-dimensional subspaces in
/// an `n`-dimensional space, `w = n - m`. Classes outside the box are zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrassBox {
    pub m: usize,
    pub w: usize,
}

impl GrassBox {
    pub fn new(m: usize, w: usize) -> Self {
        assert!(m >= 1 && w >= 1);
        GrassBox { m, w }
    }

    pub fn fits(&self, a: &Partition) -> bool {
        a.fits_in_box(self.m, self.w)
    }

    fn check(&self, a: &Partition) -> Result<()> {
        if !self.fits(a) {
            return Err(Error::OutOfBox {
                partition: a.to_string(),
                rows: self.m,
                cols: self.w,
            });
        }
        Ok(())
    }

    /// The class of a point: `m` parts equal to `w`.
    pub fn full_box(&self) -> Partition {
        Partition::new(vec![self.w; self.m])
    }

    pub fn n_cells(&self) -> usize {
        self.m * self.w
    }
}

/// A finite `QPoly`-linear combination of Schubert classes in a box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertExpr {
    pub boxed: GrassBox,
    terms: BTreeMap<Partition, QPoly>,
}

impl SchubertExpr {
    pub fn zero(boxed: GrassBox) -> Self {
        SchubertExpr {
            boxed,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(boxed: GrassBox, a: Partition, coeff: QPoly) -> Result<Self> {
        boxed.check(&a)?;
        let mut e = SchubertExpr::zero(boxed);
        e.add_term(a, coeff);
        Ok(e)
    }

    pub fn add_term(&mut self, a: Partition, coeff: QPoly) {
        debug_assert!(self.boxed.fits(&a));
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(a) {
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

    pub fn add_assign(&mut self, other: &SchubertExpr) {
        assert_eq!(self.boxed, other.boxed);
        for (a, c) in &other.terms {
            self.add_term(a.clone(), c.clone());
        }
    }

    pub fn mul_scalar(&self, c: &QPoly) -> SchubertExpr {
        let mut out = SchubertExpr::zero(self.boxed);
        for (a, k) in &self.terms {
            out.add_term(a.clone(), k * c);
        }
        out
    }

    pub fn coefficient(&self, a: &Partition) -> QPoly {
        self.terms.get(a).cloned().unwrap_or_else(QPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in graded lexicographic partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QPoly)> {
        self.terms.iter()
    }

    /// True when every term has the same codimension `|a| = codim`.
    pub fn is_homogeneous_of(&self, codim: usize) -> bool {
        self.terms.keys().all(|a| a.weight() == codim)
    }

    /// Multiplies by the hyperplane class via the Pieri rule.
    pub fn mul_sigma1(&self) -> SchubertExpr {
        let mut out = SchubertExpr::zero(self.boxed);
        for (a, c) in &self.terms {
            let step = pieri(a, self.boxed).expect("terms fit the box");
            out.add_assign(&step.mul_scalar(c));
        }
        out
    }
}

impl fmt::Display for SchubertExpr {
    /// `(<QPoly>)*s[3,1] + ...` ordered by partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (a, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*s{a}")?;
        }
        Ok(())
    }
}

/// Pieri rule: `sigma_a * sigma_1` is the sum of `sigma_b` over all `b`
/// adding exactly one box to `a` inside the rectangle.
pub fn pieri(a: &Partition, boxed: GrassBox) -> Result<SchubertExpr> {
    boxed.check(a)?;
    let mut out = SchubertExpr::zero(boxed);
    for row in 0..boxed.m {
        let cur = a.part(row);
        let above = if row == 0 { boxed.w } else { a.part(row - 1) };
        if cur < above {
            let mut parts: Vec<usize> = (0..boxed.m).map(|i| a.part(i)).collect();
            parts[row] += 1;
            out.add_term(Partition::new(parts), QPoly::one());
        }
    }
    Ok(out)
}

/// Littlewood-Richardson product `sigma_a * sigma_b`, truncated to the
/// box. Coefficients count LR skew tableaux of shape `nu/a` and content
/// `b` (semistandard filling whose reverse reading word is a lattice word).
pub fn lr_product(a: &Partition, b: &Partition, boxed: GrassBox) -> Result<SchubertExpr> {
    boxed.check(a)?;
    boxed.check(b)?;
    let mut out = SchubertExpr::zero(boxed);
    let target = a.weight() + b.weight();
    if target > boxed.n_cells() {
        return Ok(out);
    }
    for nu in box_partitions_in(boxed.m, boxed.w, target) {
        if !nu.contains(a) {
            continue;
        }
        let shape = SkewShape::new(nu.clone(), a.clone())?;
        let coeff = lr_coefficient(&shape, b);
        if coeff > 0 {
            out.add_term(nu, QPoly::constant(coeff));
        }
    }
    Ok(out)
}

/// Partitions of fixed weight inside an `m x w` rectangle.
fn box_partitions_in(m: usize, w: usize, weight: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    collect(m, w, weight, &mut current, &mut out);
    return out;

    fn collect(
        rows_left: usize,
        max_part: usize,
        weight_left: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if weight_left == 0 {
            out.push(Partition::new(current.clone()));
            return;
        }
        if rows_left == 0 || max_part == 0 {
            return;
        }
        for p in (1..=max_part.min(weight_left)).rev() {
            if p * rows_left < weight_left {
                break;
            }
            current.push(p);
            collect(rows_left - 1, p, weight_left - p, current, out);
            current.pop();
        }
    }
}

/// Number of LR tableaux of the given skew shape with content `b`. Cells
/// are processed in reading order (rows top to bottom, each row right to
/// left) so the lattice-word condition prunes as it goes.
fn lr_coefficient(shape: &SkewShape, b: &Partition) -> u64 {
    if shape.n_cells() != b.weight() {
        return 0;
    }
    if shape.n_cells() == 0 {
        return 1;
    }
    let rows = shape.outer().len();
    let cols = shape.outer().part(0);
    // reading order: for each row, columns right to left
    let mut cells = Vec::with_capacity(shape.n_cells());
    for r in 0..rows {
        for c in (shape.inner().part(r)..shape.outer().part(r)).rev() {
            cells.push((r, c));
        }
    }
    let nvalues = b.len();
    let mut remaining: Vec<usize> = (0..nvalues).map(|i| b.part(i)).collect();
    let mut grid = vec![vec![0usize; cols]; rows];
    let mut placed = vec![0usize; nvalues + 1];
    let mut count = 0u64;
    fill_lr(
        shape,
        &cells,
        0,
        &mut grid,
        &mut remaining,
        &mut placed,
        &mut count,
    );
    count
}

fn fill_lr(
    shape: &SkewShape,
    cells: &[(usize, usize)],
    idx: usize,
    grid: &mut Vec<Vec<usize>>,
    remaining: &mut Vec<usize>,
    placed: &mut Vec<usize>,
    count: &mut u64,
) {
    if idx == cells.len() {
        *count += 1;
        return;
    }
    let (r, c) = cells[idx];
    for v in 1..=remaining.len() {
        if remaining[v - 1] == 0 {
            continue;
        }
        // lattice word: after placing, #v must not exceed #(v-1)
        if v > 1 && placed[v] + 1 > placed[v - 1] {
            continue;
        }
        // row weakly increasing left to right: the right neighbor was
        // filled earlier in reading order and must be >= v
        if c + 1 < shape.outer().part(r) && grid[r][c + 1] < v {
            continue;
        }
        // column strictly increasing downward
        if r > 0 && c >= shape.inner().part(r - 1) && c < shape.outer().part(r - 1) {
            if grid[r - 1][c] >= v {
                continue;
            }
        }
        grid[r][c] = v;
        remaining[v - 1] -= 1;
        placed[v] += 1;
        fill_lr(shape, cells, idx + 1, grid, remaining, placed, count);
        placed[v] -= 1;
        remaining[v - 1] += 1;
        grid[r][c] = 0;
    }
}

/// Duality pairing: 1 iff `b` is the box dual of `a`, computed by reading
/// the full-box coefficient of the LR product.
pub fn pairing(a: &Partition, b: &Partition, boxed: GrassBox) -> Result<u64> {
    boxed.check(a)?;
    boxed.check(b)?;
    if a.weight() + b.weight() != boxed.n_cells() {
        return Err(Error::DegreeMismatch {
            expected: boxed.n_cells(),
            got: a.weight() + b.weight(),
        });
    }
    let product = lr_product(a, b, boxed)?;
    let coeff = product.coefficient(&boxed.full_box());
    Ok(coeff.coeff(0).to_u64().unwrap_or(0))
}

/// The class of the variety in the Schubert basis of the
/// `(d+1) x d` box: `sum_c q^{|c|} sigma_c sigma_{c-hat'}` over the
/// `d x d` box, homogeneous of codimension `d^2`.
pub fn dl_class(d: usize) -> SchubertExpr {
    assert!(d >= 1);
    let boxed = GrassBox::new(d + 1, d);
    let mut out = SchubertExpr::zero(boxed);
    for c in box_partitions(d, None) {
        let chatc = c.complement(d).unwrap().conjugate();
        let product = lr_product(&c, &chatc, boxed).expect("both factors fit the box");
        out.add_assign(&product.mul_scalar(&QPoly::monomial(1, c.weight())));
    }
    out
}

/// The Schubert-side degree: `sum_c q^{|c|} * #SYT((c-hat')*/c)` over the
/// `d x d` box. Each summand is the `d`-fold Pieri count from `c` to the
/// full box.
pub fn degree_via_schubert(d: usize) -> QPoly {
    assert!(d >= 1);
    let mut out = QPoly::zero();
    for c in box_partitions(d, None) {
        let Some(shape) = tableau_skew_shape(&c, d).unwrap() else {
            continue;
        };
        let count = count_skew_syt(&shape);
        out = &out + &(&big_to_qpoly(count) * &QPoly::monomial(1, c.weight()));
    }
    out
}

/// Second route to the same degree: multiply the class of the variety by
/// `sigma_1` a total of `d` times via Pieri and read off the coefficient
/// of the point class.
pub fn degree_via_schubert_pieri(d: usize) -> QPoly {
    let mut expr = dl_class(d);
    for _ in 0..d {
        expr = expr.mul_sigma1();
    }
    expr.coefficient(&expr.boxed.full_box())
}

fn big_to_qpoly(n: BigInt) -> QPoly {
    QPoly::constant(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{q_double_factorial, QPoly};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn pieri_examples() {
        let b22 = GrassBox::new(2, 2);
        let from_empty = pieri(&Partition::empty(), b22).unwrap();
        assert_eq!(from_empty.coefficient(&p(&[1])), QPoly::one());
        assert_eq!(from_empty.terms().count(), 1);

        let b21 = GrassBox::new(2, 1);
        let narrow = pieri(&p(&[1]), b21).unwrap();
        assert_eq!(narrow.coefficient(&p(&[1, 1])), QPoly::one());
        assert_eq!(narrow.terms().count(), 1);

        let wide = pieri(&p(&[1]), b22).unwrap();
        assert_eq!(wide.coefficient(&p(&[2])), QPoly::one());
        assert_eq!(wide.coefficient(&p(&[1, 1])), QPoly::one());
        assert_eq!(wide.terms().count(), 2);
    }

    #[test]
    fn pieri_out_of_box() {
        assert!(matches!(
            pieri(&p(&[3]), GrassBox::new(2, 2)),
            Err(Error::OutOfBox { .. })
        ));
    }

    #[test]
    fn lr_identity_and_pieri_agreement() {
        let b22 = GrassBox::new(2, 2);
        let by_b = lr_product(&Partition::empty(), &p(&[2, 1]), b22).unwrap();
        assert_eq!(by_b.coefficient(&p(&[2, 1])), QPoly::one());
        assert_eq!(by_b.terms().count(), 1);

        let lr11 = lr_product(&p(&[1]), &p(&[1]), b22).unwrap();
        assert_eq!(lr11, pieri(&p(&[1]), b22).unwrap());

        let sq = lr_product(&p(&[2]), &p(&[2]), b22).unwrap();
        assert_eq!(sq.coefficient(&p(&[2, 2])), QPoly::one());
        assert_eq!(sq.terms().count(), 1);
    }

    #[test]
    fn pairing_examples() {
        let b22 = GrassBox::new(2, 2);
        assert_eq!(pairing(&p(&[2, 1]), &p(&[1]), b22).unwrap(), 1);
        assert_eq!(pairing(&p(&[2]), &p(&[2]), b22).unwrap(), 1);
        assert_eq!(pairing(&p(&[2]), &p(&[1, 1]), b22).unwrap(), 0);
        assert!(matches!(
            pairing(&p(&[1]), &p(&[1]), b22),
            Err(Error::DegreeMismatch { .. })
        ));

        let b43 = GrassBox::new(4, 3);
        let a = p(&[3, 1]);
        let dual = a.dual(4, 3).unwrap();
        assert_eq!(dual, p(&[3, 3, 2]));
        assert_eq!(pairing(&a, &dual, b43).unwrap(), 1);
        assert_eq!(pairing(&a, &p(&[3, 2, 2, 1]), b43).unwrap(), 0);
    }

    #[test]
    fn dl_class_d1() {
        let expr = dl_class(1);
        assert_eq!(expr.coefficient(&p(&[1])), QPoly::from_i64s(&[1, 1]));
        assert_eq!(expr.terms().count(), 1);
    }

    #[test]
    fn dl_class_homogeneous() {
        for d in 1..=3 {
            assert!(dl_class(d).is_homogeneous_of(d * d));
        }
    }

    #[test]
    fn degree_small() {
        assert_eq!(degree_via_schubert(1), QPoly::from_i64s(&[1, 1]));
        assert_eq!(degree_via_schubert(2), QPoly::from_i64s(&[1, 2, 2, 2, 1]));
        assert_eq!(degree_via_schubert(3).coeff(4), 8.into());
    }

    #[test]
    fn two_degree_routes_agree() {
        for d in 1..=4 {
            assert_eq!(degree_via_schubert(d), degree_via_schubert_pieri(d));
            assert_eq!(degree_via_schubert(d), q_double_factorial(d));
        }
    }
}
