//! The verification gate: every criterion prints one pass/fail line (run
//! with `--nocapture` to see them) and asserts exact equality.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use dlv_core::hermitian::{classify_pairs, count_dl_points, count_isotropic_lines, DEFAULT_BUDGET};
use dlv_core::multipoly::{build_coeff_poly, degree_via_coeff};
use dlv_core::partitions::{
    box_partitions, count_skew_syt, count_skew_syt_det, ordered_partition_count,
    tableau_skew_shape, Partition,
};
use dlv_core::qseries::{isotropic_line_count_formula, q_double_factorial, QPoly};
use dlv_core::schubert::{
    degree_via_schubert, degree_via_schubert_pieri, dl_class, lr_product, pairing, pieri, GrassBox,
};
use dlv_core::schur::{schur_bialternant, schur_ssyt, verify_dual_cauchy};

fn report(name: &str, pass: bool) {
    println!("criterion {name}: {}", if pass { "pass" } else { "FAIL" });
    assert!(pass, "criterion {name} failed");
}

#[test]
fn criterion_1_three_way_degree_agreement() {
    let mut pass = true;
    for d in 1..=5usize {
        let closed = q_double_factorial(d);
        let schubert = degree_via_schubert(d);
        let coeff = degree_via_coeff(d);
        if schubert != closed || coeff != closed {
            eprintln!("degree mismatch at d={d}");
            pass = false;
        }
    }
    report("1 (three-way degree agreement, d <= 5)", pass);
}

#[test]
fn criterion_2_reference_test_vectors() {
    let mut pass = q_double_factorial(1) == QPoly::from_i64s(&[1, 1]);
    pass &= q_double_factorial(2) == QPoly::from_i64s(&[1, 2, 2, 2, 1]);
    pass &= q_double_factorial(3) == QPoly::from_i64s(&[1, 3, 5, 7, 8, 8, 7, 5, 3, 1]);
    // the six-monomial d=2 expansion of the coefficient polynomial
    let p = build_coeff_poly(2);
    let expansion: &[(&[u32], &[i64])] = &[
        (&[6, 1], &[0, 1, 2, 1]),
        (&[5, 2], &[1, 3, 4, 3, 1]),
        (&[4, 3], &[1, 2, 2, 2, 1]),
        (&[3, 4], &[-1, -2, -2, -2, -1]),
        (&[2, 5], &[-1, -3, -4, -3, -1]),
        (&[1, 6], &[0, -1, -2, -1]),
    ];
    pass &= p.n_terms() == expansion.len();
    for (mono, coeffs) in expansion {
        pass &= p.coefficient_of(mono).unwrap() == QPoly::from_i64s(coeffs);
    }
    report("2 (reference test vectors, bit-exact)", pass);
}

#[test]
fn criterion_3_tableau_table_reproduction() {
    let expected = [
        (vec![3usize, 1], vec![3usize, 2, 1, 1], 3u64),
        (vec![2, 2], vec![3, 2, 2], 3),
        (vec![2, 1, 1], vec![3, 3, 1], 2),
    ];
    let cs = box_partitions(3, Some(4));
    let mut pass = cs.len() == expected.len();
    let mut total = BigInt::zero();
    for (c, (want_c, want_outer, want_count)) in cs.iter().zip(&expected) {
        pass &= c == &Partition::new(want_c.clone());
        let shape = tableau_skew_shape(c, 3).unwrap().expect("valid shape");
        pass &= shape.outer() == &Partition::new(want_outer.clone());
        let count = count_skew_syt(&shape);
        pass &= count == BigInt::from(*want_count);
        total += count;
    }
    pass &= total == BigInt::from(8u64);
    pass &= q_double_factorial(3).coeff(4) == BigInt::from(8u64);
    report("3 (skew-tableau table for d=3, l=4)", pass);
}

#[test]
fn criterion_4_equinumerosity() {
    let mut pass = true;
    for d in 1..=5usize {
        for l in 0..=d * d {
            let mut total = BigInt::zero();
            for c in box_partitions(d, Some(l)) {
                if let Some(shape) = tableau_skew_shape(&c, d).unwrap() {
                    total += count_skew_syt(&shape);
                }
            }
            if total != ordered_partition_count(d, l) {
                eprintln!("equinumerosity fails at d={d} l={l}");
                pass = false;
            }
        }
    }
    report("4 (tableaux vs ordered partitions, d <= 5)", pass);
}

#[test]
fn criterion_5_dual_cauchy() {
    let mut pass = true;
    for d in 1..=4usize {
        if !verify_dual_cauchy(d) {
            eprintln!("dual Cauchy fails at d={d}");
            pass = false;
        }
    }
    report("5 (dual Cauchy identity, d <= 4)", pass);
}

#[test]
fn criterion_6_oracle_equivalence() {
    let mut pass = true;
    for lam in box_partitions(4, None) {
        for d in lam.len().max(1)..=4 {
            if schur_bialternant(&lam, d).unwrap() != schur_ssyt(&lam, d).unwrap() {
                eprintln!("Schur oracle mismatch at lam={lam} d={d}");
                pass = false;
            }
        }
    }
    for d in 1..=5usize {
        for c in box_partitions(d, None) {
            if let Some(shape) = tableau_skew_shape(&c, d).unwrap() {
                if count_skew_syt(&shape) != count_skew_syt_det(&shape) {
                    eprintln!("SYT oracle mismatch at shape {shape}");
                    pass = false;
                }
            }
        }
    }
    report("6 (independent oracles agree)", pass);
}

#[test]
fn criterion_7_duality_pairing() {
    let mut pass = true;
    for m in 1..=6usize {
        for w in 1..=(7 - m) {
            let boxed = GrassBox::new(m, w);
            let all: Vec<Partition> = box_partitions(m.max(w), None)
                .into_iter()
                .filter(|p| p.fits_in_box(m, w))
                .collect();
            for a in &all {
                let a_dual = a.dual(m, w).unwrap();
                for b in &all {
                    if a.weight() + b.weight() != m * w {
                        continue;
                    }
                    let expect = u64::from(*b == a_dual);
                    if pairing(a, b, boxed).unwrap() != expect {
                        eprintln!("pairing wrong for a={a} b={b} in {m}x{w}");
                        pass = false;
                    }
                }
            }
        }
    }
    report("7 (duality pairing, boxes with m+w <= 7)", pass);
}

#[test]
fn criterion_8_dl_class_sanity() {
    let d1 = dl_class(1);
    let mut pass = d1.coefficient(&Partition::new(vec![1])) == QPoly::from_i64s(&[1, 1])
        && d1.terms().count() == 1;
    for d in 1..=4usize {
        if !dl_class(d).is_homogeneous_of(d * d) {
            eprintln!("dl_class({d}) not homogeneous of codimension d^2");
            pass = false;
        }
    }
    report("8 (class of the variety: d=1 value, homogeneity)", pass);
}

#[test]
fn criterion_9_finite_geometry_at_q2() {
    let mut pass = true;
    for n in [3usize, 5, 7] {
        let formula = isotropic_line_count_formula(n).eval(&BigInt::from(2));
        let brute = count_isotropic_lines(n, 2, DEFAULT_BUDGET).unwrap();
        if BigInt::from(brute) != formula {
            eprintln!("isotropic count mismatch at n={n}: {brute} vs {formula}");
            pass = false;
        }
    }
    pass &= count_isotropic_lines(3, 2, DEFAULT_BUDGET).unwrap() == 9;
    pass &= count_isotropic_lines(5, 2, DEFAULT_BUDGET).unwrap() == 165;
    pass &= count_dl_points(1, 2, DEFAULT_BUDGET).unwrap() == 9;
    let (a, b, c) = classify_pairs(2, 2, DEFAULT_BUDGET).unwrap();
    pass &= a == 1 && b == 36 && a + b + c == 165;
    report("9 (finite-geometry counts at q=2)", pass);
}

#[test]
fn criterion_10_property_suites() {
    let mut pass = true;
    // conjugate / complement / dual involutions
    for d in 1..=6usize {
        for c in box_partitions(d, None) {
            pass &= c.conjugate().conjugate() == c;
            pass &= c.complement(d).unwrap().complement(d).unwrap() == c;
        }
    }
    for m in 1..=9usize {
        for w in 1..=(10 - m) {
            for a in box_partitions(m.max(w), None) {
                if a.fits_in_box(m, w) {
                    pass &= a.dual(m, w).unwrap().dual(m, w).unwrap() == a;
                }
            }
        }
    }
    // palindromicity, positivity, q=1 specialization
    for d in 0..=8usize {
        let p = q_double_factorial(d);
        for i in 0..=d * d {
            pass &= p.coeff(i).is_positive() && p.coeff(i) == p.coeff(d * d - i);
        }
        let expect: BigInt = (1..=d).map(|i| BigInt::from(2 * i)).product();
        pass &= p.eval(&BigInt::one()) == expect;
    }
    // Pieri = LR with a single box
    let single = Partition::new(vec![1]);
    for m in 1..=7usize {
        for w in 1..=(8 - m) {
            let boxed = GrassBox::new(m, w);
            for a in box_partitions(m.max(w), None) {
                if a.fits_in_box(m, w) {
                    pass &= pieri(&a, boxed).unwrap() == lr_product(&a, &single, boxed).unwrap();
                }
            }
        }
    }
    report("10 (involutions, palindromicity, Pieri cross-check)", pass);
}

#[test]
fn schubert_two_routes_agree() {
    // supporting check for criterion 1: the tableau-count route and the
    // d-fold Pieri route compute the same Schubert-side degree
    let mut pass = true;
    for d in 1..=5usize {
        if degree_via_schubert(d) != degree_via_schubert_pieri(d) {
            eprintln!("Schubert degree routes disagree at d={d}");
            pass = false;
        }
    }
    report("1-supplement (two Schubert routes agree, d <= 5)", pass);
}
