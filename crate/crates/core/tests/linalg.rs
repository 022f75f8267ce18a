use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use toric_qh_core::linalg::{det, hermite_normal_form, kernel_lattice_basis, solve_integer, IntMat};

fn mat(rows: usize, cols: usize, v: &[i64]) -> IntMat {
    IntMat::new(rows, cols, v.iter().map(|&x| BigInt::from(x)).collect()).unwrap()
}

fn to_i128(m: &IntMat) -> Vec<Vec<i128>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(|x| i128::try_from(x).unwrap()).collect())
        .collect()
}

/// Rank by fraction-free elimination over i128.
fn rank(mut a: Vec<Vec<i128>>) -> usize {
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, p);
        for i in r + 1..a.len() {
            let (f, g) = (a[i][c], a[r][c]);
            let pivot = a[r].clone();
            for (x, p) in a[i].iter_mut().zip(&pivot) {
                *x = *x * g - p * f;
            }
        }
        r += 1;
    }
    r
}

fn leibniz(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * leibniz(&minor)
        })
        .sum()
}

/// gcd of the maximal minors of a `k x n` matrix.
fn minor_gcd(b: &[Vec<i128>]) -> i128 {
    let (k, n) = (b.len(), b[0].len());
    let mut g = 0i128;
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let sub: Vec<Vec<i128>> = b.iter().map(|r| idx.iter().map(|&c| r[c]).collect()).collect();
        g = g.gcd(&leibniz(&sub));
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else { return g };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[test]
fn hnf_reference() {
    let (h, u) = hermite_normal_form(&mat(2, 2, &[2, 4, 1, 3]));
    assert_eq!(h, mat(2, 2, &[1, 1, 0, 2]));
    assert_eq!(u.mul(&mat(2, 2, &[2, 4, 1, 3])).unwrap(), h);
}

#[test]
fn kernel_of_blowup_normals() {
    // rows are the facet normals, so kernel vectors are linear relations
    let normals = mat(5, 3, &[-1, 0, 0, 0, -1, 0, 0, 0, -1, 0, 0, 1, 1, 1, 1]);
    let k = kernel_lattice_basis(&normals);
    assert_eq!(k.nrows(), 2);
    for r in k.rows() {
        assert!(normals.left_mul_vec(r).iter().all(Zero::is_zero));
    }
    assert_eq!(minor_gcd(&to_i128(&k)).abs(), 1);
}

/// Right-kernel vectors found by scanning a box must all lie in the span of the
/// returned basis, which must itself be saturated.
#[test]
fn kernel_against_brute_force() {
    let cases: &[(usize, usize, &[i64])] = &[
        (1, 3, &[2, 4, 6]),
        (2, 4, &[1, 2, 0, -1, 0, 2, 2, 2]),
        (2, 4, &[2, 0, 2, 0, 0, 3, 0, 3]),
        (1, 4, &[0, 0, 0, 0]),
        (2, 3, &[1, 1, 1, 1, -1, 2]),
    ];
    for &(r, c, v) in cases {
        let m = mat(r, c, v);
        let k = kernel_lattice_basis(&m.transpose());
        let kb = to_i128(&k);
        let mr = to_i128(&m);
        assert_eq!(kb.len(), c - rank(mr.clone()), "{v:?}");
        if !kb.is_empty() {
            assert_eq!(minor_gcd(&kb).abs(), 1, "{v:?}");
        }
        let mut found = 0;
        let mut x = vec![-3i128; c];
        loop {
            if mr.iter().all(|row| row.iter().zip(&x).map(|(a, b)| a * b).sum::<i128>() == 0) {
                found += 1;
                let mut aug = kb.clone();
                aug.push(x.clone());
                assert_eq!(rank(aug), kb.len(), "{x:?} outside span for {v:?}");
            }
            let Some(i) = (0..c).find(|&i| x[i] < 3) else { break };
            x[i] += 1;
            for y in &mut x[..i] {
                *y = -3;
            }
        }
        assert!(found >= 1);
    }
}

#[test]
fn integer_solutions() {
    let a = mat(1, 2, &[2, 4]);
    assert!(solve_integer(&a, &[BigInt::from(3)]).is_none());
    let (x, k) = solve_integer(&a, &[BigInt::from(6)]).unwrap();
    assert_eq!(a.mul_vec(&x), vec![BigInt::from(6)]);
    assert_eq!(k.nrows(), 1);
}

fn small_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = IntMat> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-4i64..=4, r * c).prop_map(move |v| mat(r, c, &v))
    })
}

proptest! {
    #[test]
    fn hnf_is_unimodular_row_reduction(m in small_matrix(4, 5)) {
        let (h, u) = hermite_normal_form(&m);
        prop_assert_eq!(u.mul(&m).unwrap(), h.clone());
        prop_assert_eq!(det(&u).abs(), BigInt::from(1));
        let mut last_pivot: Option<usize> = None;
        for i in 0..h.nrows() {
            let Some(p) = h.row(i).iter().position(|x| !x.is_zero()) else {
                prop_assert!((i..h.nrows()).all(|j| h.is_zero_row(j)));
                break;
            };
            prop_assert!(last_pivot.is_none_or(|l| p > l));
            prop_assert!(h[(i, p)].is_positive());
            for j in 0..i {
                prop_assert!(!h[(j, p)].is_negative() && h[(j, p)] < h[(i, p)]);
            }
            last_pivot = Some(p);
        }
    }

    #[test]
    fn det_matches_leibniz(v in proptest::collection::vec(-5i64..=5, 16)) {
        let m = mat(4, 4, &v);
        prop_assert_eq!(det(&m), BigInt::from(leibniz(&to_i128(&m))));
    }

    #[test]
    fn kernel_rank(m in small_matrix(3, 5)) {
        let k = kernel_lattice_basis(&m.transpose());
        prop_assert_eq!(k.nrows(), m.ncols() - rank(to_i128(&m)));
        for r in k.rows() {
            prop_assert!(m.mul_vec(r).iter().all(Zero::is_zero));
        }
    }
}
