//! Young diagrams: conjugation, box complement, box dual, skew shapes,
//! and standard-Young-tableau counting (backtracking plus an independent
//! determinant oracle).

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A partition: weakly decreasing nonnegative parts, stored without
/// trailing zeros. `[3,1]` and `[3,1,0]` construct the same value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Panics if the parts are not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-indexed), zero beyond the stored length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The weight `|a|`.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Cell-wise containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    pub fn fits_in_box(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }

    /// Conjugate partition: `a'_j = #{i : a_i >= j}` (reflection along
    /// the main diagonal).
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Complement in the `d x d` box: `(d - c_d, ..., d - c_1)` after
    /// padding to `d` parts.
    pub fn complement(&self, d: usize) -> Result<Partition> {
        if !self.fits_in_box(d, d) {
            return Err(Error::OutOfBox {
                partition: self.to_string(),
                rows: d,
                cols: d,
            });
        }
        let parts = (0..d).rev().map(|i| d - self.part(i)).collect();
        Ok(Partition::new(parts))
    }

    /// Dual in the `m x w` box: `(w - a_m, ..., w - a_1)` after padding
    /// to `m` parts.
    pub fn dual(&self, m: usize, w: usize) -> Result<Partition> {
        if !self.fits_in_box(m, w) {
            return Err(Error::OutOfBox {
                partition: self.to_string(),
                rows: m,
                cols: w,
            });
        }
        let parts = (0..m).rev().map(|i| w - self.part(i)).collect();
        Ok(Partition::new(parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded lexicographic order: first by weight, then by parts.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl fmt::Display for Partition {
    /// `[3,1]`; the empty partition renders as `[]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// A skew shape `outer/inner` with `inner` contained in `outer`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidSkewShape {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn n_cells(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    /// Skew cells as `(row, col)` in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut cells = Vec::with_capacity(self.n_cells());
        for row in 0..self.outer.len() {
            for col in self.inner.part(row)..self.outer.part(row) {
                cells.push((row, col));
            }
        }
        cells
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// All partitions `c` with `d >= c_1 >= ... >= c_d >= 0`, optionally
/// restricted to a fixed weight, in lexicographic descending order of the
/// part sequences.
pub fn box_partitions(d: usize, weight_filter: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    collect_box_partitions(d, d, &mut current, &mut out);
    if let Some(l) = weight_filter {
        out.retain(|p| p.weight() == l);
    }
    out
}

fn collect_box_partitions(
    max_part: usize,
    remaining_rows: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    // descending lex: larger first parts come first, and an extension of a
    // prefix precedes the bare prefix
    for p in (1..=max_part).rev() {
        current.push(p);
        if remaining_rows > 1 {
            collect_box_partitions(p, remaining_rows - 1, current, out);
        } else {
            out.push(Partition::new(current.clone()));
        }
        current.pop();
    }
    out.push(Partition::new(current.clone()));
}

/// Number of standard Young tableaux of the skew shape, by exhaustive
/// backtracking over row-major cell order. Serves as ground truth for the
/// determinant oracle and the Schubert-side degree.
pub fn count_skew_syt(shape: &SkewShape) -> BigInt {
    let cells = shape.cells();
    let n = cells.len();
    if n == 0 {
        return BigInt::one();
    }
    let rows = shape.outer.len();
    let cols = shape.outer.part(0);
    // grid[row][col] = entry or 0 for unfilled/absent
    let mut grid = vec![vec![0usize; cols]; rows];
    let mut count = BigInt::zero();
    let mut used = vec![false; n + 1];
    fill_syt(shape, &cells, 0, &mut grid, &mut used, &mut count);
    count
}

fn fill_syt(
    shape: &SkewShape,
    cells: &[(usize, usize)],
    idx: usize,
    grid: &mut Vec<Vec<usize>>,
    used: &mut Vec<bool>,
    count: &mut BigInt,
) {
    if idx == cells.len() {
        *count += 1;
        return;
    }
    let (r, c) = cells[idx];
    for v in 1..=cells.len() {
        if used[v] {
            continue;
        }
        // left neighbor (same skew row) must be smaller
        if c > shape.inner.part(r) && grid[r][c - 1] >= v {
            continue;
        }
        // neighbor above (if it is a skew cell) must be smaller; if the
        // cell above is unfilled skew, the row-major order makes v invalid
        if r > 0 && c >= shape.inner.part(r - 1) && c < shape.outer.part(r - 1) {
            let above = grid[r - 1][c];
            if above == 0 || above >= v {
                continue;
            }
        }
        grid[r][c] = v;
        used[v] = true;
        fill_syt(shape, cells, idx + 1, grid, used, count);
        grid[r][c] = 0;
        used[v] = false;
    }
}

/// Independent SYT oracle via the determinant formula
/// `f^{l/m} = N! * det(1 / (l_i - m_j - i + j)!)`, computed fraction-free:
/// row `i` is cleared by `s_i!` with `s_i` the largest factorial argument
/// in the row, the integer determinant is taken by Bareiss elimination,
/// and the scaling is divided back out exactly.
pub fn count_skew_syt_det(shape: &SkewShape) -> BigInt {
    let r = shape.outer.len();
    if r == 0 {
        return BigInt::one();
    }
    let n_cells = shape.n_cells();
    let mut matrix = vec![vec![BigInt::zero(); r]; r];
    let mut row_scales = Vec::with_capacity(r);
    for i in 0..r {
        // a_ij = l_i - m_j - i + j is maximal at the last column
        let args: Vec<i64> = (0..r)
            .map(|j| {
                shape.outer.part(i) as i64 - shape.inner.part(j) as i64 - i as i64 + j as i64
            })
            .collect();
        let s = args.iter().copied().max().unwrap().max(0);
        for j in 0..r {
            matrix[i][j] = if args[j] < 0 {
                BigInt::zero()
            } else {
                // s! / a_ij! as a falling-factorial product
                ((args[j] + 1)..=s).map(BigInt::from).product()
            };
        }
        row_scales.push(factorial(s as usize));
    }
    let det = bareiss_determinant(matrix);
    let numerator = factorial(n_cells) * det;
    let denominator: BigInt = row_scales.into_iter().product();
    let (quot, rem) = num_integer::div_rem(numerator, denominator);
    debug_assert!(rem.is_zero(), "SYT determinant must divide exactly");
    debug_assert!(!quot.is_negative());
    quot
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
pub(crate) fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let val = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = val;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Number of tuples `(l_1, ..., l_d)` with sum `l` and `0 <= l_i <= 2i-1`;
/// equals the coefficient of `q^l` in the q-double factorial.
pub fn ordered_partition_count(d: usize, l: usize) -> BigInt {
    let mut counts = vec![BigInt::zero(); l + 1];
    counts[0] = BigInt::one();
    for i in 1..=d {
        let cap = 2 * i - 1;
        let mut next = vec![BigInt::zero(); l + 1];
        for (s, c) in counts.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for li in 0..=cap.min(l - s) {
                next[s + li] += c;
            }
        }
        counts = next;
    }
    counts.pop().unwrap()
}

/// The skew shape `(c-hat')* / c` of the tableau identity: complement in
/// the `d x d` box, conjugate, then dual in the `(d+1) x d` box. Returns
/// `None` when the outer shape does not contain `c`, in which case the
/// associated tableau count is zero.
pub fn tableau_skew_shape(c: &Partition, d: usize) -> Result<Option<SkewShape>> {
    let outer = c.complement(d)?.conjugate().dual(d + 1, d)?;
    if !outer.contains(c) {
        return Ok(None);
    }
    Ok(Some(SkewShape::new(outer, c.clone())?))
}
