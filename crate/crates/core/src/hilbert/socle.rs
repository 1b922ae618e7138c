//! Socle type and the level condition for `A = R / Ann W`.

use alloc::vec;
use alloc::vec::Vec;

use crate::apolar::{annihilator_component, apply, derivative_space, ActionKind, FormSpace};
use crate::error::Result;
use crate::forms::{multiply, Form, MonomialBasis, Operator};
use crate::scalars::{span_dim, subspace_dims, ExactMatrix, Scalar};

/// Minimal generators of the dual module `M = R ∘ W` in each degree:
/// `dim M_i - dim (R_1 ∘ M_{i+1})`. The socle of `A` is dual to these, so a
/// level algebra of type `t` gives `(0, ..., 0, t)`.
pub fn socle_type(space: &FormSpace, action: ActionKind) -> Result<Vec<usize>> {
    let j = space.degree();
    let r = space.nvars();
    let field = space.field();
    let variables: Vec<Operator> = (0..r)
        .map(|k| Operator::monomial(crate::forms::Monomial::var(r, k), Scalar::one(field)))
        .collect();
    let mut out = vec![0; j as usize + 1];
    for i in 0..=j {
        // M_i = R_{j-i} ∘ W
        let dim_here = derivative_space(space, j - i, action)?.len();
        let from_above = if i == j {
            0
        } else {
            let upper = derivative_space(space, j - i - 1, action)?;
            let mut images: Vec<Form> = Vec::new();
            for m in &upper {
                for x in &variables {
                    images.push(apply(x, m, action)?);
                }
            }
            let basis = MonomialBasis::new(r, i);
            let coords: Vec<Vec<Scalar>> = images.iter().map(|g| g.coordinates(&basis)).collect();
            span_dim(field, basis.len(), &coords)?
        };
        out[i as usize] = dim_here - from_above;
    }
    Ok(out)
}

/// Checks `I_i = I_j : R_{j-i}` for `0 < i <= j`, where `I = Ann W`.
///
/// The colon space `{f ∈ R_i : R_{j-i} f ⊂ I_j}` is built from products of
/// operators against the top-degree component `I_j` only, then compared with
/// the annihilator component computed directly from `W`.
pub fn check_level_condition(space: &FormSpace, action: ActionKind) -> Result<bool> {
    let j = space.degree();
    let r = space.nvars();
    let field = space.field();
    let top = MonomialBasis::new(r, j);
    let ideal_top: Vec<Vec<Scalar>> = annihilator_component(space, j, action)?
        .iter()
        .map(|h| h.coordinates(&top))
        .collect();
    // functionals on R_j vanishing exactly on I_j
    let functionals = if ideal_top.is_empty() {
        ExactMatrix::identity(field, top.len())
    } else {
        let rows = ExactMatrix::from_rows(field, ideal_top)?;
        let kernel = rows.kernel_basis();
        if kernel.is_empty() {
            ExactMatrix::zeros(field, 0, top.len())
        } else {
            ExactMatrix::from_rows(field, kernel)?
        }
    };
    for i in 1..=j {
        let source = MonomialBasis::new(r, i);
        let multipliers = MonomialBasis::new(r, j - i);
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for m in multipliers.monomials() {
            let m = Operator::monomial(m.clone(), Scalar::one(field));
            let images: Vec<Vec<Scalar>> = source
                .monomials()
                .iter()
                .map(|e| {
                    let e = Operator::monomial(e.clone(), Scalar::one(field));
                    multiply(&m, &e).map(|p| functionals.mul_vec(&p.coordinates(&top)))
                })
                .collect::<Result<_>>()?;
            for row in 0..functionals.rows() {
                rows.push(images.iter().map(|col| col[row].clone()).collect());
            }
        }
        let colon = if rows.is_empty() {
            // no conditions: every f qualifies
            ExactMatrix::zeros(field, 0, source.len()).kernel_basis()
        } else {
            ExactMatrix::from_rows(field, rows)?.kernel_basis()
        };
        let direct: Vec<Vec<Scalar>> = annihilator_component(space, i, action)?
            .iter()
            .map(|h| h.coordinates(&source))
            .collect();
        let dims = subspace_dims(&colon, &direct)?;
        if !(dims.d1 == dims.d2 && dims.sum == dims.d1) {
            return Ok(false);
        }
    }
    Ok(true)
}
