//! Schur polynomials: the bialternant production path, an independent
//! semistandard-tableau oracle, the dual Cauchy identity, and the summed
//! product form used by the coefficient-extraction degree.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::multipoly::{vandermonde, MultiPoly};
use crate::partitions::{box_partitions, Partition};
use crate::qseries::QPoly;

/// Schur polynomial `S_lam(x_1, ..., x_d)` as the bialternant ratio
/// `det(x_i^{lam_j + d - j}) / det(x_i^{d - j})`. The alternant is
/// expanded as a permutation sum and divided exactly by the Vandermonde.
pub fn schur_bialternant(lam: &Partition, d: usize) -> Result<MultiPoly> {
    check_rows(lam, d)?;
    let exps: Vec<u32> = (0..d).map(|j| (lam.part(j) + d - 1 - j) as u32).collect();
    let mut alternant = MultiPoly::zero(d);
    for perm in (0..d).permutations(d) {
        let mut mono = vec![0u32; d];
        for (i, &j) in perm.iter().enumerate() {
            mono[i] = exps[j];
        }
        let sign = QPoly::constant(permutation_sign(&perm));
        alternant.add_term(mono, sign);
    }
    alternant.exact_div(&vandermonde(d))
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1i64;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

fn check_rows(lam: &Partition, d: usize) -> Result<()> {
    if lam.len() > d {
        return Err(Error::TooManyRows {
            partition: lam.to_string(),
            max_rows: d,
        });
    }
    Ok(())
}

/// Independent oracle: the sum of `x^content` over all semistandard
/// tableaux of shape `lam` with entries in `1..=d` (rows weakly
/// increasing, columns strictly increasing).
pub fn schur_ssyt(lam: &Partition, d: usize) -> Result<MultiPoly> {
    check_rows(lam, d)?;
    let mut out = MultiPoly::zero(d);
    let rows = lam.len();
    let cols = lam.part(0);
    let mut grid = vec![vec![0usize; cols]; rows];
    fill_ssyt(lam, d, 0, 0, &mut grid, &mut out);
    Ok(out)
}

fn fill_ssyt(
    lam: &Partition,
    d: usize,
    row: usize,
    col: usize,
    grid: &mut Vec<Vec<usize>>,
    out: &mut MultiPoly,
) {
    if row == lam.len() {
        let mut exps = vec![0u32; d];
        for (r, line) in grid.iter().enumerate() {
            for &v in &line[..lam.part(r)] {
                exps[v - 1] += 1;
            }
        }
        out.add_term(exps, QPoly::one());
        return;
    }
    if col == lam.part(row) {
        fill_ssyt(lam, d, row + 1, 0, grid, out);
        return;
    }
    let min = {
        let mut m = 1;
        if col > 0 {
            m = m.max(grid[row][col - 1]);
        }
        if row > 0 && col < lam.part(row - 1) {
            m = m.max(grid[row - 1][col] + 1);
        }
        m
    };
    for v in min..=d {
        grid[row][col] = v;
        fill_ssyt(lam, d, row, col + 1, grid, out);
    }
    grid[row][col] = 0;
}

/// Checks the dual Cauchy identity
/// `sum_c S_c(x) S_{c-hat'}(y) = prod_{i,j} (x_i + y_j)` over the `d x d`
/// box, as exact polynomials in `2d` variables (x in slots `0..d`, y in
/// slots `d..2d`).
pub fn verify_dual_cauchy(d: usize) -> bool {
    assert!(d >= 1);
    let mut lhs = MultiPoly::zero(2 * d);
    for c in box_partitions(d, None) {
        let chatc = c.complement(d).unwrap().conjugate();
        let sx = embed(&schur_bialternant(&c, d).unwrap(), 2 * d, 0);
        let sy = embed(&schur_bialternant(&chatc, d).unwrap(), 2 * d, d);
        lhs = lhs.add(&sx.mul(&sy).unwrap()).unwrap();
    }
    let mut rhs = MultiPoly::one(2 * d);
    for i in 0..d {
        for j in 0..d {
            let factor = MultiPoly::var(2 * d, i)
                .add(&MultiPoly::var(2 * d, d + j))
                .unwrap();
            rhs = rhs.mul(&factor).unwrap();
        }
    }
    lhs == rhs
}

/// Re-embeds a `d`-variable polynomial into `nvars` slots starting at `offset`.
fn embed(p: &MultiPoly, nvars: usize, offset: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(nvars);
    for (e, c) in p.terms() {
        let mut exps = vec![0u32; nvars];
        exps[offset..offset + e.len()].copy_from_slice(e);
        out.add_term(exps, c.clone());
    }
    out
}

/// The sum `S = sum_c S_c(q x) S_{c-hat'}(x) S_1(x)^d` over the `d x d`
/// box, computed summand by summand. By the dual Cauchy identity this
/// equals `(prod_{i,j} (q x_i + x_j)) (x_1 + ... + x_d)^d`.
pub fn build_s(d: usize) -> MultiPoly {
    assert!(d >= 1);
    let mut cauchy_sum = MultiPoly::zero(d);
    for c in box_partitions(d, None) {
        let chatc = c.complement(d).unwrap().conjugate();
        let sqx = schur_bialternant(&c, d).unwrap().scale_vars_by_q();
        let sx = schur_bialternant(&chatc, d).unwrap();
        cauchy_sum = cauchy_sum.add(&sqx.mul(&sx).unwrap()).unwrap();
    }
    let linear = (0..d).fold(MultiPoly::zero(d), |s, i| {
        s.add(&MultiPoly::var(d, i)).unwrap()
    });
    cauchy_sum.mul(&linear.pow(d)).unwrap()
}
