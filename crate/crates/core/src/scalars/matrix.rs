use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::{inv_mod, FieldSpec, Scalar};
use crate::error::{Error, Result};

/// Dense row-major matrix of exact scalars over a single field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            field,
            entries: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for x in row {
                if x.field() != field {
                    return Err(Error::FieldMismatch(field, x.field()));
                }
                entries.push(x);
            }
        }
        Ok(ExactMatrix {
            rows: nrows,
            cols,
            field,
            entries,
        })
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        let mut m = Self::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (r, x) in col.iter().enumerate() {
                if x.field() != field {
                    return Err(Error::FieldMismatch(field, x.field()));
                }
                m.set(r, c, x.clone());
            }
        }
        Ok(m)
    }

    pub fn from_i64_rows(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| Scalar::from_i64(field, x)).collect())
            .collect();
        Self::from_rows(field, rows).expect("rows of equal length")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        debug_assert_eq!(value.field(), self.field);
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Stacks `other` below `self`.
    pub fn stack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(ExactMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            field: self.field,
            entries,
        })
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(Scalar::zero(self.field), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots().len()
    }

    /// Indices of a maximal set of linearly independent columns: the pivot
    /// columns of the row echelon form, in increasing order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.echelon().pivots().to_vec()
    }

    /// Basis of the null space `{v : Mv = 0}`, one vector per non-pivot column.
    ///
    /// Over the rationals each vector is scaled to a primitive integer vector.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let basis = self.echelon().kernel(self.cols, self.field);
        #[cfg(debug_assertions)]
        for v in &basis {
            debug_assert!(
                self.mul_vec(v).iter().all(Scalar::is_zero),
                "kernel vector fails Mv = 0"
            );
        }
        basis
    }

    fn echelon(&self) -> Echelon {
        match self.field {
            FieldSpec::Rationals => bareiss(self.integer_rows(), self.cols),
            FieldSpec::Prime(p) => gauss_jordan_mod(self.residue_rows(), self.cols, p),
        }
    }

    /// Rows scaled by the lcm of their denominators; row scaling keeps the row space.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let lcm = row.iter().fold(BigInt::one(), |acc, x| {
                    acc.lcm(x.as_rational().expect("rational entry").denom())
                });
                row.iter()
                    .map(|x| {
                        let q = x.as_rational().expect("rational entry");
                        q.numer() * (&lcm / q.denom())
                    })
                    .collect()
            })
            .collect()
    }

    fn residue_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(|x| x.as_residue().expect("residue entry"))
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            f.write_str("[")?;
            for (c, x) in self.row(r).iter().enumerate() {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

enum Echelon {
    /// Fraction-free row echelon form; only the nonzero rows are kept.
    Integer {
        rows: Vec<Vec<BigInt>>,
        pivots: Vec<usize>,
    },
    /// Reduced row echelon form with unit pivots; only the nonzero rows are kept.
    Modular {
        rows: Vec<Vec<u64>>,
        pivots: Vec<usize>,
        p: u64,
    },
}

impl Echelon {
    fn pivots(&self) -> &[usize] {
        match self {
            Echelon::Integer { pivots, .. } | Echelon::Modular { pivots, .. } => pivots,
        }
    }

    fn kernel(&self, cols: usize, field: FieldSpec) -> Vec<Vec<Scalar>> {
        let pivots = self.pivots();
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        match self {
            Echelon::Modular { rows, p, .. } => free
                .iter()
                .map(|&f| {
                    let mut v = vec![0u64; cols];
                    v[f] = 1;
                    for (row, &pc) in rows.iter().zip(pivots) {
                        v[pc] = (p - row[f]) % p;
                    }
                    v.into_iter()
                        .map(|value| Scalar::Residue { value, modulus: *p })
                        .collect()
                })
                .collect(),
            Echelon::Integer { rows, .. } => free
                .iter()
                .map(|&f| {
                    let mut v = vec![BigRational::zero(); cols];
                    v[f] = BigRational::one();
                    for (row, &pc) in rows.iter().zip(pivots).rev() {
                        let mut acc = BigRational::zero();
                        for c in pc + 1..cols {
                            if !row[c].is_zero() && !v[c].is_zero() {
                                acc += &v[c] * BigRational::from_integer(row[c].clone());
                            }
                        }
                        v[pc] = -acc / BigRational::from_integer(row[pc].clone());
                    }
                    primitive(v)
                        .into_iter()
                        .map(|n| Scalar::from_bigint(field, &n))
                        .collect()
                })
                .collect(),
        }
    }
}

/// Clears denominators and divides out the content.
fn primitive(v: Vec<BigRational>) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if content.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &content).collect()
}

/// Fraction-free (Bareiss) forward elimination. Pivot: the first nonzero
/// entry in the current column, scanning rows top-down.
fn bareiss(mut a: Vec<Vec<BigInt>>, cols: usize) -> Echelon {
    let nrows = a.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom.iter_mut() {
            let lead = core::mem::take(&mut row[c]);
            for k in c + 1..cols {
                let num = &pivot_row[c] * &row[k] - &lead * &pivot_row[k];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                row[k] = q;
            }
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon::Integer { rows: a, pivots }
}

fn gauss_jordan_mod(mut a: Vec<Vec<u64>>, cols: usize, p: u64) -> Echelon {
    let nrows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = inv_mod(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let factor = row[c];
            for k in c..cols {
                row[k] = (row[k] + (p - factor) * pivot_row[k]) % p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon::Modular { rows: a, pivots, p }
}

/// Dimensions of two spans, their sum and their intersection.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubspaceDims {
    pub d1: usize,
    pub d2: usize,
    pub sum: usize,
    pub intersection: usize,
}

/// Rank of a list of vectors of common length `len`.
pub fn span_dim(field: FieldSpec, len: usize, vectors: &[Vec<Scalar>]) -> Result<usize> {
    Ok(ExactMatrix::from_columns(field, len, vectors)?.rank())
}

/// Compares `span(b1)` with `span(b2)`; the intersection dimension is
/// `d1 + d2 - dim(span(b1 ∪ b2))`.
pub fn subspace_dims(b1: &[Vec<Scalar>], b2: &[Vec<Scalar>]) -> Result<SubspaceDims> {
    let Some(first) = b1.iter().chain(b2).next() else {
        return Ok(SubspaceDims {
            d1: 0,
            d2: 0,
            sum: 0,
            intersection: 0,
        });
    };
    let len = first.len();
    let field = first.first().map_or(FieldSpec::Rationals, Scalar::field);
    let d1 = span_dim(field, len, b1)?;
    let d2 = span_dim(field, len, b2)?;
    let all: Vec<Vec<Scalar>> = b1.iter().chain(b2).cloned().collect();
    let sum = span_dim(field, len, &all)?;
    Ok(SubspaceDims {
        d1,
        d2,
        sum,
        intersection: d1 + d2 - sum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn e(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
        (0..n)
            .map(|k| Scalar::from_i64(field, (k == i) as i64))
            .collect()
    }

    #[test]
    fn identity_and_zero_ranks() {
        assert_eq!(ExactMatrix::identity(Q, 2).rank(), 2);
        assert_eq!(ExactMatrix::zeros(Q, 3, 5).rank(), 0);
        assert_eq!(ExactMatrix::zeros(Q, 0, 0).rank(), 0);
    }

    #[test]
    fn singular_two_by_two() {
        let m = ExactMatrix::from_i64_rows(Q, &[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(), 1);
        let gf2 = FieldSpec::prime(2).unwrap();
        let m = ExactMatrix::from_i64_rows(gf2, &[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernels() {
        assert!(ExactMatrix::identity(Q, 2).kernel_basis().is_empty());
        assert_eq!(ExactMatrix::zeros(Q, 2, 3).kernel_basis().len(), 3);
        let k = ExactMatrix::from_i64_rows(Q, &[&[1, 1]]).kernel_basis();
        assert_eq!(k.len(), 1);
        // proportional to (1, -1)
        assert_eq!(&k[0][0] + &k[0][1], Scalar::zero(Q));
        assert!(!k[0][0].is_zero());
    }

    #[test]
    fn rational_entries_rank() {
        let half = Scalar::from_ratio(Q, &BigInt::from(1), &BigInt::from(2)).unwrap();
        let m = ExactMatrix::from_rows(
            Q,
            vec![
                vec![half.clone(), Scalar::one(Q)],
                vec![Scalar::one(Q), Scalar::from_i64(Q, 2)],
            ],
        )
        .unwrap();
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k, vec![vec![Scalar::from_i64(Q, -2), Scalar::one(Q)]]);
    }

    #[test]
    fn subspace_dims_examples() {
        let e1 = e(Q, 3, 0);
        let e2 = e(Q, 3, 1);
        let both: Vec<Scalar> = e1.iter().zip(&e2).map(|(a, b)| a + b).collect();
        let d = subspace_dims(core::slice::from_ref(&e1), core::slice::from_ref(&e1)).unwrap();
        assert_eq!((d.d1, d.d2, d.sum, d.intersection), (1, 1, 1, 1));
        let d = subspace_dims(core::slice::from_ref(&e1), core::slice::from_ref(&e2)).unwrap();
        assert_eq!((d.d1, d.d2, d.sum, d.intersection), (1, 1, 2, 0));
        let d = subspace_dims(&[e1, e2], &[both]).unwrap();
        assert_eq!((d.d1, d.d2, d.sum, d.intersection), (2, 1, 2, 1));
    }

    #[test]
    fn subspace_dims_rejects_length_mismatch() {
        let err = subspace_dims(&[e(Q, 3, 0)], &[e(Q, 2, 0)]).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn pivot_columns_skip_dependent_columns() {
        let m = ExactMatrix::from_i64_rows(Q, &[&[1, 2, 0, 1], &[0, 0, 1, 1]]);
        assert_eq!(m.pivot_columns(), vec![0, 2]);
    }
}
