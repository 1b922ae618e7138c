//! Rank, kernel and subspace properties of `ExactMatrix`, checked against a
//! naive row-reduction oracle that shares no code with the production path.

use apolar_core::scalars::{subspace_dims, ExactMatrix, FieldSpec, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

/// Textbook Gauss-Jordan on `BigRational` entries.
fn naive_rank_q(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    naive_rank(
        &mut a,
        |x| x.is_zero(),
        |x, y| x / y,
        |x, y| x * y,
        |x, y| x - y,
    )
}

/// Textbook Gauss-Jordan on residues mod `p`.
fn naive_rank_mod(rows: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p)).collect())
        .collect();
    let inv = |x: i64| (1..p).find(|y| x * y % p == 1).unwrap();
    naive_rank(
        &mut a,
        |x| *x == 0,
        |x, y| x * inv(*y) % p,
        |x, y| x * y % p,
        |x, y| (x - y).rem_euclid(p),
    )
}

#[allow(clippy::needless_range_loop)]
fn naive_rank<T: Clone>(
    a: &mut [Vec<T>],
    is_zero: impl Fn(&T) -> bool,
    div: impl Fn(&T, &T) -> T,
    mul: impl Fn(&T, &T) -> T,
    sub: impl Fn(&T, &T) -> T,
) -> usize {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        // pick the last nonzero candidate to diverge from production's pivot rule
        let Some(p) = (rank..nrows).rev().find(|&i| !is_zero(&a[i][c])) else {
            continue;
        };
        a.swap(rank, p);
        for i in 0..nrows {
            if i != rank && !is_zero(&a[i][c]) {
                let f = div(&a[i][c], &a[rank][c]);
                for k in 0..ncols {
                    let t = mul(&f, &a[rank][k]);
                    a[i][k] = sub(&a[i][k], &t);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn to_matrix(field: FieldSpec, rows: &[Vec<i64>]) -> ExactMatrix {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|&x| Scalar::from_i64(field, x)).collect())
        .collect();
    ExactMatrix::from_rows(field, rows).unwrap()
}

fn dense(n: usize, m: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-4i64..=4, m), n)
}

/// Random matrices up to 12×12; half are products of an n×k and a k×m
/// factor, so rank deficiency is common.
fn matrix_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=12, 1usize..=12, 1usize..=12).prop_flat_map(|(n, m, k)| {
        prop_oneof![
            dense(n, m),
            (dense(n, k), dense(k, m)).prop_map(move |(left, right)| {
                (0..n)
                    .map(|i| {
                        (0..m)
                            .map(|j| (0..k).map(|t| left[i][t] * right[t][j]).sum())
                            .collect()
                    })
                    .collect()
            }),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn rank_matches_oracle_over_q(rows in matrix_strategy()) {
        let m = to_matrix(FieldSpec::Rationals, &rows);
        prop_assert_eq!(m.rank(), naive_rank_q(&rows));
    }

    #[test]
    fn rank_matches_oracle_over_gf101(rows in matrix_strategy()) {
        let f = FieldSpec::prime(101).unwrap();
        let m = to_matrix(f, &rows);
        prop_assert_eq!(m.rank(), naive_rank_mod(&rows, 101));
    }

    #[test]
    fn rank_nullity_and_transpose(rows in matrix_strategy(), prime in any::<bool>()) {
        let field = if prime { FieldSpec::prime(7).unwrap() } else { FieldSpec::Rationals };
        let m = to_matrix(field, &rows);
        let rank = m.rank();
        prop_assert_eq!(rank, m.transpose().rank());
        prop_assert!(rank <= m.rows().min(m.cols()));
        let kernel = m.kernel_basis();
        prop_assert_eq!(kernel.len() + rank, m.cols());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn subspace_dims_is_symmetric(rows in matrix_strategy(), split in 0usize..12) {
        let field = FieldSpec::Rationals;
        let m = to_matrix(field, &rows);
        let cols: Vec<Vec<Scalar>> = (0..m.cols()).map(|c| m.column(c)).collect();
        let split = split.min(cols.len());
        let (b1, b2) = cols.split_at(split);
        let a = subspace_dims(b1, b2).unwrap();
        let b = subspace_dims(b2, b1).unwrap();
        prop_assert_eq!((a.d1, a.d2), (b.d2, b.d1));
        prop_assert_eq!((a.sum, a.intersection), (b.sum, b.intersection));
        prop_assert_eq!(a.sum, m.rank());
    }
}
