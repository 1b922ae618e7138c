//! Hilbert functions of `R / Ann W` and the numeric predicates around them.

mod macaulay;
mod overlap;
mod socle;

use alloc::vec::Vec;
use core::fmt;

use crate::apolar::{derivative_dim, ActionKind, FormSpace};
use crate::error::{Error, Result};
use crate::forms::{graded_dim, Form};

pub use macaulay::{is_o_sequence, macaulay_bound, macaulay_representation, OSequenceCheck};
pub use overlap::{overlap_dimension, overlap_profile, t_dimension, OverlapProfile};
pub use socle::{check_level_condition, socle_type};

/// A finite Hilbert function `(h_0, ..., h_j)` of a quotient of `K[x_1..x_r]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertSeq {
    values: Vec<usize>,
    nvars: usize,
}

impl HilbertSeq {
    pub fn new(values: Vec<usize>, nvars: usize) -> Self {
        HilbertSeq { values, nvars }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Index of the last entry; `None` for the empty sequence.
    pub fn socle_degree(&self) -> Option<usize> {
        self.values.len().checked_sub(1)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, i: usize) -> usize {
        self.values[i]
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.values.len() != other.values.len() || self.nvars != other.nvars {
            return Err(Error::ShapeMismatch);
        }
        Ok(())
    }

    /// Termwise `self <= other`.
    pub fn le(&self, other: &Self) -> Result<bool> {
        self.check_shape(other)?;
        Ok(self.values.iter().zip(&other.values).all(|(a, b)| a <= b))
    }

    pub fn termwise_max(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(HilbertSeq::new(
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| *a.max(b))
                .collect(),
            self.nvars,
        ))
    }

    /// Termwise difference, which may be negative.
    pub fn signed_sub(&self, other: &Self) -> Result<Vec<i64>> {
        self.check_shape(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| *a as i64 - *b as i64)
            .collect())
    }

    pub fn reversed(&self) -> Self {
        let mut values = self.values.clone();
        values.reverse();
        HilbertSeq::new(values, self.nvars)
    }
}

impl fmt::Display for HilbertSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// `H(R / Ann W)`, read off as `H_{j-u} = dim R_u ∘ W`.
pub fn hilbert_of_space(space: &FormSpace, action: ActionKind) -> Result<HilbertSeq> {
    let j = space.degree();
    let mut values = alloc::vec![0; j as usize + 1];
    for u in 0..=j {
        values[(j - u) as usize] = derivative_dim(space, u, action)?;
    }
    Ok(HilbertSeq::new(values, space.nvars()))
}

/// `H_F = H(R / Ann F)`; always symmetric.
pub fn hilbert_of_form(form: &Form, action: ActionKind) -> Result<HilbertSeq> {
    if form.is_zero() {
        return Err(Error::ZeroForm);
    }
    hilbert_of_space(&FormSpace::new(alloc::vec![form.clone()])?, action)
}

/// `(H_1 +_h H_2)_i = min(dim R_i, (H_1)_i + (H_2)_i)`.
pub fn hplus_sum(a: &HilbertSeq, b: &HilbertSeq) -> Result<HilbertSeq> {
    a.check_shape(b)?;
    let r = a.nvars;
    Ok(HilbertSeq::new(
        a.values
            .iter()
            .zip(&b.values)
            .enumerate()
            .map(|(i, (x, y))| (x + y).min(graded_dim(r, i as u32)))
            .collect(),
        r,
    ))
}

pub fn symmetry_check(h: &HilbertSeq) -> bool {
    let v = &h.values;
    v.iter().eq(v.iter().rev())
}

/// The compressed (maximal) Hilbert function of a type-`t` level algebra of
/// socle degree `j` in `r` variables: `min(dim R_i, t * dim R_{j-i})`.
pub fn compressed_bound(r: usize, j: u32, t: usize) -> HilbertSeq {
    HilbertSeq::new(
        (0..=j)
            .map(|i| graded_dim(r, i).min(t * graded_dim(r, j - i)))
            .collect(),
        r,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::parse_form;
    use crate::scalars::FieldSpec;
    use alloc::vec;

    const Q: FieldSpec = FieldSpec::Rationals;
    const D: ActionKind = ActionKind::Differentiation;

    fn seq(v: &[usize], r: usize) -> HilbertSeq {
        HilbertSeq::new(v.to_vec(), r)
    }

    #[test]
    fn hilbert_functions_of_single_forms() {
        let hf = |s: &str, r| hilbert_of_form(&parse_form(s, r, Q).unwrap(), D).unwrap();
        assert_eq!(hf("X^4", 2).values(), &[1, 1, 1, 1, 1]);
        assert_eq!(hf("X*Y^3", 2).values(), &[1, 2, 2, 2, 1]);
        assert_eq!(
            hf("X^8 + Y^4*Z^4", 3).values(),
            &[1, 3, 4, 5, 6, 5, 4, 3, 1]
        );
    }

    #[test]
    fn hilbert_function_of_type_two_space() {
        let w = FormSpace::new(vec![
            parse_form("X^4", 2, Q).unwrap(),
            parse_form("X*Y^3", 2, Q).unwrap(),
        ])
        .unwrap();
        assert_eq!(hilbert_of_space(&w, D).unwrap().values(), &[1, 2, 3, 3, 2]);
    }

    #[test]
    fn single_generator_space_matches_form() {
        let f = parse_form("X^2*Y*Z + 2*Y^4 - Z^3*X", 3, Q).unwrap();
        let w = FormSpace::new(vec![f.clone()]).unwrap();
        assert_eq!(
            hilbert_of_space(&w, D).unwrap(),
            hilbert_of_form(&f, D).unwrap()
        );
    }

    #[test]
    fn hplus_examples() {
        let hf = seq(&[1, 3, 5, 5, 5, 5, 5, 3, 1], 3);
        let hg = seq(&[1, 3, 4, 5, 6, 5, 4, 3, 1], 3);
        assert_eq!(
            hplus_sum(&hf, &hg).unwrap().values(),
            &[1, 3, 6, 10, 11, 10, 9, 6, 2]
        );
        let zero = seq(&[0; 9], 3);
        assert_eq!(hplus_sum(&hf, &zero).unwrap(), hf);
        let a = seq(&[1, 3, 5], 3);
        assert_eq!(hplus_sum(&a, &a).unwrap().get(1), 3);
        assert_eq!(hplus_sum(&a, &seq(&[1, 3], 3)), Err(Error::ShapeMismatch));
    }

    #[test]
    fn symmetry() {
        assert!(symmetry_check(&seq(&[1, 2, 3, 2, 1], 2)));
        assert!(!symmetry_check(&seq(&[1, 2, 3, 3, 2], 2)));
        assert!(symmetry_check(&seq(&[1], 2)));
    }

    #[test]
    fn compressed_bounds() {
        assert_eq!(compressed_bound(3, 4, 1).values(), &[1, 3, 6, 3, 1]);
        assert_eq!(compressed_bound(3, 4, 2).values(), &[1, 3, 6, 6, 2]);
        assert_eq!(compressed_bound(2, 4, 1).values(), &[1, 2, 3, 2, 1]);
    }

    #[test]
    fn display() {
        assert_eq!(
            alloc::format!("{}", seq(&[1, 2, 3, 3, 2], 2)),
            "(1,2,3,3,2)"
        );
    }
}
