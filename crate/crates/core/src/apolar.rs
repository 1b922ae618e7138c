//! The apolarity action of `R` on `D`, catalecticant matrices, derivative
//! spaces `R_u ∘ W` and graded pieces of annihilators.
//!
//! All rank computations run through the contraction action
//! `x^a ∘ X^b = X^(b-a)`, which is valid in every characteristic. A form read
//! with the differentiation action is first sent to its divided-power image
//! `X^b ↦ b! X^b`; the differentiation catalecticant of `F` equals the
//! contraction catalecticant of that image with row `X^c` divided by `c!`, so
//! ranks, kernels and pivot columns agree exactly whenever `c!` is invertible.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::forms::{Form, Monomial, MonomialBasis, Operator};
use crate::scalars::{ExactMatrix, FieldSpec, Scalar};

/// How `R` acts on `D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ActionKind {
    /// `h ∘ F = h(∂/∂X_1, ..., ∂/∂X_r) F`; faithful only when the characteristic
    /// is zero or exceeds the degrees involved.
    Differentiation,
    /// Divided-power contraction; valid in any characteristic.
    Contraction,
}

impl ActionKind {
    /// Rejects differentiation when `char K` is positive and at most `degree`.
    pub fn check(self, field: FieldSpec, degree: u32) -> Result<()> {
        let p = field.characteristic();
        if self == ActionKind::Differentiation && p != 0 && p <= degree as u64 {
            return Err(Error::ActionCharacteristic {
                characteristic: p,
                degree,
            });
        }
        Ok(())
    }
}

/// `b (b-1) ... (b-a+1)` in the field.
fn falling_factorial(field: FieldSpec, b: u32, a: u32) -> Scalar {
    ((b - a + 1)..=b).fold(Scalar::one(field), |acc, k| {
        &acc * &Scalar::from_i64(field, i64::from(k))
    })
}

/// `b! = b_1! ... b_r!` for the exponent tuple `b`.
fn multi_factorial(field: FieldSpec, m: &Monomial) -> Scalar {
    m.exponents().iter().fold(Scalar::one(field), |acc, &e| {
        &acc * &falling_factorial(field, e, e)
    })
}

/// `h ∘ F`, a form of degree `deg F - deg h`.
pub fn apply(h: &Operator, form: &Form, action: ActionKind) -> Result<Form> {
    if h.nvars() != form.nvars() {
        return Err(Error::RingMismatch(h.nvars(), form.nvars()));
    }
    if h.field() != form.field() {
        return Err(Error::FieldMismatch(h.field(), form.field()));
    }
    if h.degree() > form.degree() {
        return Err(Error::OrderOutOfRange {
            order: h.degree(),
            degree: form.degree(),
        });
    }
    action.check(form.field(), form.degree())?;
    let field = form.field();
    let mut terms = Vec::new();
    for (a, ca) in h.terms() {
        for (b, cb) in form.terms() {
            let Some(rest) = b.checked_div(a) else {
                continue;
            };
            let mut c = ca * cb;
            if action == ActionKind::Differentiation {
                for (&bk, &ak) in b.exponents().iter().zip(a.exponents()) {
                    c = &c * &falling_factorial(field, bk, ak);
                }
            }
            terms.push((rest, c));
        }
    }
    Form::from_terms(form.nvars(), form.degree() - h.degree(), field, terms)
}

/// The form whose contraction derivatives reproduce the `action`-derivatives
/// of `form` up to invertible row scaling.
pub fn divided_power_image(form: &Form, action: ActionKind) -> Result<Form> {
    action.check(form.field(), form.degree())?;
    match action {
        ActionKind::Contraction => Ok(form.clone()),
        ActionKind::Differentiation => Form::from_terms(
            form.nvars(),
            form.degree(),
            form.field(),
            form.terms()
                .map(|(m, c)| (m.clone(), c * &multi_factorial(form.field(), m))),
        ),
    }
}

/// Contraction catalecticant: columns indexed by `basis_u`, rows by degree `j - u`.
fn contraction_columns(form: &Form, u: u32) -> Vec<Vec<Scalar>> {
    let r = form.nvars();
    let j = form.degree();
    let rows = MonomialBasis::new(r, j - u);
    let field = form.field();
    MonomialBasis::new(r, u)
        .monomials()
        .iter()
        .map(|a| {
            let mut col = alloc::vec![Scalar::zero(field); rows.len()];
            for (b, c) in form.terms() {
                if let Some(rest) = b.checked_div(a) {
                    col[rows.index_of(&rest).expect("degree j-u monomial")] = c.clone();
                }
            }
            col
        })
        .collect()
}

/// The matrix of `R_u → D_{j-u}, h ↦ h ∘ F`.
#[derive(Clone, Debug)]
pub struct Catalecticant {
    pub form: Form,
    pub order: u32,
    pub action: ActionKind,
    pub matrix: ExactMatrix,
}

impl Catalecticant {
    /// `dim R_u ∘ F`, which is `(H_F)_{j-u}`.
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// Builds the order-`u` catalecticant of `form`; column `h` holds the
/// coordinates of `h ∘ F` in the monomial basis of degree `j - u`.
pub fn catalecticant(form: &Form, u: u32, action: ActionKind) -> Result<Catalecticant> {
    let j = form.degree();
    if u > j {
        return Err(Error::OrderOutOfRange {
            order: u,
            degree: j,
        });
    }
    action.check(form.field(), j)?;
    let r = form.nvars();
    let field = form.field();
    let rows = MonomialBasis::new(r, j - u);
    let columns = MonomialBasis::new(r, u)
        .monomials()
        .iter()
        .map(|a| {
            let h = Operator::monomial(a.clone(), Scalar::one(field));
            apply(&h, form, action).map(|g| g.coordinates(&rows))
        })
        .collect::<Result<Vec<_>>>()?;
    let matrix = ExactMatrix::from_columns(field, rows.len(), &columns)?;
    Ok(Catalecticant {
        form: form.clone(),
        order: u,
        action,
        matrix,
    })
}

/// A space of forms of one degree, spanned by linearly independent generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormSpace {
    generators: Vec<Form>,
}

impl FormSpace {
    pub fn new(generators: Vec<Form>) -> Result<Self> {
        let first = generators.first().ok_or(Error::EmptySpace)?;
        let (r, j, field) = (first.nvars(), first.degree(), first.field());
        for g in &generators[1..] {
            if g.nvars() != r {
                return Err(Error::RingMismatch(r, g.nvars()));
            }
            if g.field() != field {
                return Err(Error::FieldMismatch(field, g.field()));
            }
            if g.degree() != j {
                return Err(Error::DegreeMismatch(j, g.degree()));
            }
        }
        let basis = MonomialBasis::new(r, j);
        let coords: Vec<Vec<Scalar>> = generators.iter().map(|g| g.coordinates(&basis)).collect();
        if ExactMatrix::from_columns(field, basis.len(), &coords)?.rank() != generators.len() {
            return Err(Error::DependentForms);
        }
        Ok(FormSpace { generators })
    }

    pub fn generators(&self) -> &[Form] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn nvars(&self) -> usize {
        self.generators[0].nvars()
    }

    pub fn degree(&self) -> u32 {
        self.generators[0].degree()
    }

    pub fn field(&self) -> FieldSpec {
        self.generators[0].field()
    }

    /// Contraction columns of all generators' divided-power images, generator-major.
    fn joint_columns(&self, u: u32, action: ActionKind) -> Result<Vec<Vec<Scalar>>> {
        let mut cols = Vec::new();
        for g in &self.generators {
            cols.extend(contraction_columns(&divided_power_image(g, action)?, u));
        }
        Ok(cols)
    }

    fn check_order(&self, u: u32) -> Result<()> {
        if u > self.degree() {
            return Err(Error::OrderOutOfRange {
                order: u,
                degree: self.degree(),
            });
        }
        Ok(())
    }
}

/// `dim R_u ∘ W`.
pub fn derivative_dim(space: &FormSpace, u: u32, action: ActionKind) -> Result<usize> {
    space.check_order(u)?;
    let rows = MonomialBasis::new(space.nvars(), space.degree() - u).len();
    let cols = space.joint_columns(u, action)?;
    Ok(ExactMatrix::from_columns(space.field(), rows, &cols)?.rank())
}

/// A basis of `R_u ∘ W` made of actual derivatives `x^a ∘ F_s`.
pub fn derivative_space(space: &FormSpace, u: u32, action: ActionKind) -> Result<Vec<Form>> {
    space.check_order(u)?;
    let r = space.nvars();
    let rows = MonomialBasis::new(r, space.degree() - u).len();
    let cols = space.joint_columns(u, action)?;
    let pivots = ExactMatrix::from_columns(space.field(), rows, &cols)?.pivot_columns();
    let ops = MonomialBasis::new(r, u);
    let field = space.field();
    pivots
        .into_iter()
        .map(|c| {
            let (s, k) = (c / ops.len(), c % ops.len());
            let h = Operator::monomial(ops.monomials()[k].clone(), Scalar::one(field));
            apply(&h, &space.generators[s], action)
        })
        .collect()
}

/// A basis of `(Ann W)_u = {h ∈ R_u : h ∘ F = 0 for all F ∈ W}`.
///
/// Above the socle degree every operator annihilates, and the full monomial
/// basis is returned.
pub fn annihilator_component(
    space: &FormSpace,
    u: u32,
    action: ActionKind,
) -> Result<Vec<Operator>> {
    let r = space.nvars();
    let field = space.field();
    let ops = MonomialBasis::new(r, u);
    if u > space.degree() {
        return Ok(ops
            .monomials()
            .iter()
            .map(|m| Operator::monomial(m.clone(), Scalar::one(field)))
            .collect());
    }
    let rows = MonomialBasis::new(r, space.degree() - u).len();
    let mut stacked: Option<ExactMatrix> = None;
    for g in &space.generators {
        let cols = contraction_columns(&divided_power_image(g, action)?, u);
        let m = ExactMatrix::from_columns(field, rows, &cols)?;
        stacked = Some(match stacked {
            None => m,
            Some(acc) => acc.stack(&m)?,
        });
    }
    let matrix = stacked.expect("nonempty space");
    Ok(matrix
        .kernel_basis()
        .iter()
        .map(|v| Operator::from_coordinates(&ops, field, v))
        .collect())
}
