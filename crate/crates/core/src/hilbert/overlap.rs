//! Overlap invariants of an ordered pair of forms `(F, G)`, indexed by
//! `i = j - u`:
//!
//! * `d_i = dim (R_u∘F ∩ R_u∘G) = (H_F)_i + (H_G)_i - H(A)_i`
//! * `t_i = dim ((Ann F)_u∘G ∩ (Ann G)_u∘F)`

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{hilbert_of_form, hilbert_of_space};
use crate::apolar::{annihilator_component, apply, derivative_space, ActionKind, FormSpace};
use crate::error::{Error, Result};
use crate::forms::{Form, MonomialBasis};
use crate::scalars::{subspace_dims, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverlapProfile {
    pub d: Vec<usize>,
    pub t: Vec<usize>,
}

fn pair_space(f: &Form, g: &Form) -> Result<FormSpace> {
    FormSpace::new(vec![f.clone(), g.clone()])
}

fn coordinates(forms: &[Form], basis: &MonomialBasis) -> Vec<Vec<Scalar>> {
    forms.iter().map(|x| x.coordinates(basis)).collect()
}

/// `d_i` for `i = 0..=j`, computed both as an intersection of derivative spaces
/// and from the three Hilbert functions; the two must agree.
pub fn overlap_dimension(f: &Form, g: &Form, action: ActionKind) -> Result<Vec<usize>> {
    let space = pair_space(f, g)?;
    let j = f.degree();
    let r = f.nvars();
    let hf = hilbert_of_form(f, action)?;
    let hg = hilbert_of_form(g, action)?;
    let ha = hilbert_of_space(&space, action)?;
    let sf = FormSpace::new(vec![f.clone()])?;
    let sg = FormSpace::new(vec![g.clone()])?;
    let mut d = vec![0; j as usize + 1];
    for u in 0..=j {
        let i = (j - u) as usize;
        let basis = MonomialBasis::new(r, j - u);
        let df = coordinates(&derivative_space(&sf, u, action)?, &basis);
        let dg = coordinates(&derivative_space(&sg, u, action)?, &basis);
        let by_intersection = subspace_dims(&df, &dg)?.intersection;
        let by_formula = hf.get(i) + hg.get(i) - ha.get(i);
        if by_intersection != by_formula {
            return Err(Error::Inconsistent(format!(
                "overlap in degree {i}: intersection gives {by_intersection}, Hilbert functions give {by_formula}"
            )));
        }
        d[i] = by_intersection;
    }
    Ok(d)
}

/// `t_i` for `i = 0..=j`.
pub fn t_dimension(f: &Form, g: &Form, action: ActionKind) -> Result<Vec<usize>> {
    pair_space(f, g)?;
    let j = f.degree();
    let r = f.nvars();
    let sf = FormSpace::new(vec![f.clone()])?;
    let sg = FormSpace::new(vec![g.clone()])?;
    let mut t = vec![0; j as usize + 1];
    for u in 0..=j {
        let basis = MonomialBasis::new(r, j - u);
        let ann_f_on_g = annihilator_component(&sf, u, action)?
            .iter()
            .map(|h| apply(h, g, action))
            .collect::<Result<Vec<_>>>()?;
        let ann_g_on_f = annihilator_component(&sg, u, action)?
            .iter()
            .map(|h| apply(h, f, action))
            .collect::<Result<Vec<_>>>()?;
        t[(j - u) as usize] = subspace_dims(
            &coordinates(&ann_f_on_g, &basis),
            &coordinates(&ann_g_on_f, &basis),
        )?
        .intersection;
    }
    Ok(t)
}

pub fn overlap_profile(f: &Form, g: &Form, action: ActionKind) -> Result<OverlapProfile> {
    Ok(OverlapProfile {
        d: overlap_dimension(f, g, action)?,
        t: t_dimension(f, g, action)?,
    })
}
