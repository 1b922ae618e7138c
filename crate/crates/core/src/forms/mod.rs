//! Monomials and homogeneous polynomials.
//!
//! Two rings share one representation: the polynomial ring `R = K[x_1..x_r]`
//! whose elements act as operators, and the dual ring `D = K[X_1..X_r]` whose
//! elements are the forms being acted on. [`Operator`] and [`Form`] are the two
//! instantiations of [`Homogeneous`]; the side only changes how variables are
//! printed and parsed (lower versus upper case).

mod parse;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::marker::PhantomData;

use crate::error::{Error, Result};
use crate::scalars::{FieldSpec, Scalar};

pub use parse::{parse_form, parse_operator};

/// Exponent tuple of a monomial in `r` variables.
///
/// `Ord` is the graded lexicographic order with `X_1 > X_2 > ... > X_r`:
/// higher total degree is larger, ties are broken lexicographically on the
/// exponents. Canonical listings (bases, printed terms) run from the largest
/// monomial down.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// The variable with index `i` (zero based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self` componentwise.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `dim R_d`, the number of monomials of degree `d` in `r` variables.
pub fn graded_dim(r: usize, d: u32) -> usize {
    if r == 0 {
        return usize::from(d == 0);
    }
    // C(d + r - 1, r - 1), accumulated so every intermediate is an integer
    let k = r - 1;
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        acc = acc * (d as u128 + i) / i;
    }
    acc as usize
}

/// All degree-`d` monomials in `r` variables, largest first.
pub fn monomial_basis(r: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(graded_dim(r, d));
    let mut current = vec![0u32; r];
    fill_basis(&mut out, &mut current, 0, d);
    out
}

fn fill_basis(out: &mut Vec<Monomial>, current: &mut [u32], pos: usize, remaining: u32) {
    if current.is_empty() {
        if remaining == 0 {
            out.push(Monomial(Vec::new()));
        }
        return;
    }
    if pos == current.len() - 1 {
        current[pos] = remaining;
        out.push(Monomial(current.to_vec()));
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill_basis(out, current, pos + 1, remaining - e);
    }
    current[pos] = 0;
}

/// A monomial basis with index lookup, used to turn forms into coordinate vectors.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    monomials: Vec<Monomial>,
}

impl MonomialBasis {
    pub fn new(r: usize, d: u32) -> Self {
        MonomialBasis {
            monomials: monomial_basis(r, d),
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.monomials.binary_search_by(|probe| m.cmp(probe)).ok()
    }
}

/// Marker for the side of the duality a polynomial lives on.
pub trait Side: Clone + fmt::Debug + PartialEq + Eq {
    /// Variable letters for `r <= 4`, and the prefix for indexed variables.
    const ALIASES: [char; 4];
    const PREFIX: char;
}

/// The dual ring `D = K[X_1..X_r]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dual;

/// The polynomial ring `R = K[x_1..x_r]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring;

impl Side for Dual {
    const ALIASES: [char; 4] = ['X', 'Y', 'Z', 'W'];
    const PREFIX: char = 'X';
}

impl Side for Ring {
    const ALIASES: [char; 4] = ['x', 'y', 'z', 'w'];
    const PREFIX: char = 'x';
}

/// A homogeneous polynomial of fixed degree; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homogeneous<S: Side> {
    nvars: usize,
    degree: u32,
    field: FieldSpec,
    terms: BTreeMap<Monomial, Scalar>,
    side: PhantomData<S>,
}

/// An element of the dual ring, acted on by operators.
pub type Form = Homogeneous<Dual>;

/// An element of the polynomial ring, acting on forms.
pub type Operator = Homogeneous<Ring>;

impl<S: Side> Homogeneous<S> {
    pub fn zero(nvars: usize, degree: u32, field: FieldSpec) -> Self {
        Homogeneous {
            nvars,
            degree,
            field,
            terms: BTreeMap::new(),
            side: PhantomData,
        }
    }

    pub fn monomial(monomial: Monomial, coeff: Scalar) -> Self {
        let mut h = Self::zero(monomial.nvars(), monomial.degree(), coeff.field());
        if !coeff.is_zero() {
            h.terms.insert(monomial, coeff);
        }
        h
    }

    /// Sums the given terms; every monomial must have `nvars` variables and degree `degree`.
    pub fn from_terms<I>(nvars: usize, degree: u32, field: FieldSpec, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut h = Self::zero(nvars, degree, field);
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::RingMismatch(nvars, m.nvars()));
            }
            if m.degree() != degree {
                return Err(Error::DegreeMismatch(degree, m.degree()));
            }
            if c.field() != field {
                return Err(Error::FieldMismatch(field, c.field()));
            }
            h.add_term(m, c);
        }
        Ok(h)
    }

    /// The linear form `c_1 X_1 + ... + c_r X_r`.
    pub fn linear(coeffs: &[Scalar]) -> Result<Self> {
        let field = coeffs.first().map_or(FieldSpec::Rationals, Scalar::field);
        let n = coeffs.len();
        Self::from_terms(
            n,
            1,
            field,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(n, i), c.clone())),
        )
    }

    /// Builds a form from coordinates with respect to `monomial_basis(nvars, degree)`.
    pub fn from_coordinates(basis: &MonomialBasis, field: FieldSpec, coords: &[Scalar]) -> Self {
        debug_assert_eq!(basis.len(), coords.len());
        let (nvars, degree) = basis
            .monomials()
            .first()
            .map_or((0, 0), |m| (m.nvars(), m.degree()));
        let mut h = Self::zero(nvars, degree, field);
        for (m, c) in basis.monomials().iter().zip(coords) {
            if !c.is_zero() {
                h.terms.insert(m.clone(), c.clone());
            }
        }
        h
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order, leading (largest) monomial first.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field))
    }

    /// Coordinate vector with respect to `basis`, which must be the degree-`degree` basis.
    pub fn coordinates(&self, basis: &MonomialBasis) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(self.field); basis.len()];
        for (m, c) in &self.terms {
            let idx = basis.index_of(m).expect("monomial belongs to the basis");
            v[idx] = c.clone();
        }
        v
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::RingMismatch(self.nvars, other.nvars));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        // zero is homogeneous of every degree
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.degree != other.degree && !other.is_zero() {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Scalar::one(self.field))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.nvars, self.degree, self.field);
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.terms.insert(m.clone(), v * c);
        }
        out
    }

    /// Exact product; degrees add.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.nvars, self.degree + other.degree, self.field);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::monomial(Monomial::one(self.nvars), Scalar::one(self.field));
        for _ in 0..exp {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Variables that occur in some term.
    pub fn support_variables(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&i| self.terms.keys().any(|m| m.exponents()[i] > 0))
            .collect()
    }
}

/// Product of two operators in `R`.
pub fn multiply(a: &Operator, b: &Operator) -> Result<Operator> {
    a.mul(b)
}

impl<S: Side> fmt::Display for Homogeneous<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        parse::write_poly::<S>(f, self.nvars, self.terms())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn basis_sizes() {
        let b = monomial_basis(2, 1);
        assert_eq!(
            b,
            vec![Monomial::new(vec![1, 0]), Monomial::new(vec![0, 1])]
        );
        assert_eq!(monomial_basis(3, 2).len(), 6);
        assert_eq!(monomial_basis(3, 4).len(), 15);
        assert_eq!(monomial_basis(3, 0), vec![Monomial::one(3)]);
        for r in 1..=5 {
            for d in 0..=12 {
                assert_eq!(monomial_basis(r, d).len(), graded_dim(r, d));
            }
        }
    }

    #[test]
    fn basis_is_strictly_descending() {
        let b = monomial_basis(3, 3);
        assert!(b.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(b[0], Monomial::new(vec![3, 0, 0]));
        assert_eq!(b[b.len() - 1], Monomial::new(vec![0, 0, 3]));
        let idx = MonomialBasis::new(3, 3);
        for (i, m) in b.iter().enumerate() {
            assert_eq!(idx.index_of(m), Some(i));
        }
    }

    #[test]
    fn products() {
        let x = parse_operator("x", 2, Q).unwrap();
        assert_eq!(
            multiply(&x, &x).unwrap(),
            parse_operator("x^2", 2, Q).unwrap()
        );
        let a = parse_operator("x+y", 2, Q).unwrap();
        let b = parse_operator("x-y", 2, Q).unwrap();
        assert_eq!(
            multiply(&a, &b).unwrap(),
            parse_operator("x^2-y^2", 2, Q).unwrap()
        );
        let a = parse_operator("x^2*y", 2, Q).unwrap();
        let b = parse_operator("x^3", 2, Q).unwrap();
        assert_eq!(multiply(&a, &b).unwrap().to_string(), "x^5*y");
    }

    #[test]
    fn addition_cancels_to_zero() {
        let f = parse_form("X^2 + Y^2", 2, Q).unwrap();
        let z = f.sub(&f).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
        assert_eq!(z.add(&f).unwrap(), f);
    }

    #[test]
    fn coordinates_round_trip() {
        let f = parse_form("X^3 - 2*X*Y*Z + 1/3*Z^3", 3, Q).unwrap();
        let basis = MonomialBasis::new(3, 3);
        let v = f.coordinates(&basis);
        assert_eq!(Form::from_coordinates(&basis, Q, &v), f);
    }

    #[test]
    fn support() {
        let f = parse_form("X*Z^3", 3, Q).unwrap();
        assert_eq!(f.support_variables(), vec![0, 2]);
    }
}
