//! Homogeneous forms, point-multiplicity conditions and linear systems.
//!
//! A form vanishes at `p` with multiplicity `y` when every partial derivative
//! of order `y - 1` vanishes at `p`. Condition matrices impose exactly those
//! derivatives and nothing else; the lower orders follow from Euler's identity
//! (see the `euler_cascade` test).
//!
//! Monomials are ordered graded-lexicographically with `x0 > x1 > ...`; this
//! fixes the column order of every condition matrix.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::binary::BinaryForm;
use crate::exactnum::{format_rational, ProjectivePoint, Rational, RationalMatrix};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self { exponents }
    }

    /// Square-free monomial `x_I` on the given sorted variable indices.
    pub fn square_free(num_vars: usize, vars: &[usize]) -> Self {
        let mut exponents = vec![0; num_vars];
        for &v in vars {
            exponents[v] += 1;
        }
        Self { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> usize {
        self.exponents.iter().map(|&e| e as usize).sum()
    }

    /// `prod coords[i]^e_i`.
    pub fn eval(&self, coords: &[Rational]) -> Rational {
        let mut acc = Rational::one();
        for (e, c) in self.exponents.iter().zip(coords) {
            for _ in 0..*e {
                acc *= c;
            }
        }
        acc
    }
}

/// Canonical order: higher degree first, then lexicographically larger
/// exponent vectors first (so `x0^2 < x0 x1 < x0 x2 < x1^2 ...` as `Ord`).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| other.exponents.cmp(&self.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of the given degree in canonical order.
pub fn monomials(num_vars: usize, degree: usize) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<u32>, vars_left: usize, degree_left: usize, out: &mut Vec<Monomial>) {
        if vars_left == 1 {
            prefix.push(degree_left as u32);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=degree_left).rev() {
            prefix.push(e as u32);
            rec(prefix, vars_left - 1, degree_left - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if num_vars == 0 {
        if degree == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return out;
    }
    rec(&mut Vec::with_capacity(num_vars), num_vars, degree, &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousForm {
    num_vars: usize,
    degree: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl HomogeneousForm {
    pub fn zero(num_vars: usize, degree: usize) -> Self {
        Self {
            num_vars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn new(
        num_vars: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Result<Self, Error> {
        let mut form = Self::zero(num_vars, degree);
        for (m, c) in terms {
            if m.exponents.len() != num_vars {
                return Err(Error::DimensionMismatch {
                    expected: num_vars,
                    found: m.exponents.len(),
                });
            }
            if m.degree() != degree {
                return Err(Error::InvalidArgument(format!(
                    "monomial of degree {} in a form of degree {degree}",
                    m.degree()
                )));
            }
            form.add_term(m, c);
        }
        Ok(form)
    }

    /// Form with the given coefficients on the given monomials.
    pub fn from_coefficients(
        num_vars: usize,
        degree: usize,
        basis: &[Monomial],
        coeffs: &[Rational],
    ) -> Self {
        let mut form = Self::zero(num_vars, degree);
        for (m, c) in basis.iter().zip(coeffs) {
            form.add_term(m.clone(), c.clone());
        }
        form
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Dense coefficient vector over the canonical monomials of this degree.
    pub fn to_dense(&self) -> Vec<Rational> {
        monomials(self.num_vars, self.degree)
            .iter()
            .map(|m| self.coefficient(m))
            .collect()
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        if self.num_vars != other.num_vars || self.degree != other.degree {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                found: other.num_vars,
            });
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.num_vars, self.degree);
        }
        Self {
            num_vars: self.num_vars,
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    /// Formal partial derivative with respect to `x_var`.
    pub fn differentiate(&self, var: usize) -> Result<Self, Error> {
        if var >= self.num_vars {
            return Err(Error::IndexOutOfRange {
                index: var,
                num_vars: self.num_vars,
            });
        }
        let degree = self.degree.saturating_sub(1);
        let mut out = Self::zero(self.num_vars, degree);
        for (m, c) in &self.terms {
            let e = m.exponents[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents.clone();
            exps[var] -= 1;
            out.add_term(Monomial::new(exps), c * Rational::from_integer(BigInt::from(e)));
        }
        Ok(out)
    }

    /// Value at the given representative. Scaling the representative by `l`
    /// scales the value by `l^degree`.
    pub fn evaluate(&self, p: &ProjectivePoint) -> Result<Rational, Error> {
        self.evaluate_coords(p.coords())
    }

    pub fn evaluate_coords(&self, coords: &[Rational]) -> Result<Rational, Error> {
        if coords.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                found: coords.len(),
            });
        }
        Ok(self
            .terms
            .iter()
            .fold(Rational::zero(), |acc, (m, c)| acc + c * m.eval(coords)))
    }

    /// True iff every partial derivative of order `mult - 1` vanishes at `p`,
    /// decided by repeated symbolic differentiation.
    pub fn vanishes_with_multiplicity(&self, p: &ProjectivePoint, mult: usize) -> Result<bool, Error> {
        if mult == 0 {
            return Ok(true);
        }
        if p.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                found: p.len(),
            });
        }
        for op in monomials(self.num_vars, mult - 1) {
            let mut d = self.clone();
            for (var, &e) in op.exponents.iter().enumerate() {
                for _ in 0..e {
                    d = d.differentiate(var)?;
                }
            }
            if !d.evaluate(p)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The binary form `t -> Q(s p + t q)` on the line through `p` and `q`.
    pub fn restrict_to_line(&self, p: &ProjectivePoint, q: &ProjectivePoint) -> Result<BinaryForm, Error> {
        if p.len() != self.num_vars || q.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                found: p.len().min(q.len()),
            });
        }
        let linear: Vec<BinaryForm> = p
            .coords()
            .iter()
            .zip(q.coords())
            .map(|(a, b)| BinaryForm::linear(a.clone(), b.clone()))
            .collect();
        self.substitute(&linear)
    }

    /// The composite `Q(f_0(s,t), ..., f_N(s,t))` for binary forms `f_i` of a
    /// common degree `e`; the result has degree `e * deg Q`.
    pub fn substitute(&self, components: &[BinaryForm]) -> Result<BinaryForm, Error> {
        if components.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                found: components.len(),
            });
        }
        let e = components.first().map_or(0, BinaryForm::degree);
        if let Some(f) = components.iter().find(|f| f.degree() != e) {
            return Err(Error::DimensionMismatch {
                expected: e,
                found: f.degree(),
            });
        }
        let mut total = BinaryForm::new(vec![Rational::zero(); self.degree * e + 1]);
        for (m, c) in &self.terms {
            let mut term = BinaryForm::constant(c.clone());
            for (f, &k) in components.iter().zip(&m.exponents) {
                for _ in 0..k {
                    term = term.mul(f);
                }
            }
            total = total.add(&term);
        }
        Ok(total)
    }
}

/// Rows: every derivative operator of order `mult - 1` (canonical order).
/// Columns: canonical monomials of degree `degree` in `ambient_dim + 1`
/// variables. A coefficient vector lies in the kernel iff the form vanishes
/// at `p` with multiplicity at least `mult`.
pub fn multiplicity_conditions(
    ambient_dim: usize,
    degree: usize,
    p: &ProjectivePoint,
    mult: usize,
) -> Result<RationalMatrix, Error> {
    if mult == 0 || mult > degree {
        return Err(Error::InvalidMultiplicity { mult, degree });
    }
    let num_vars = ambient_dim + 1;
    if p.len() != num_vars {
        return Err(Error::DimensionMismatch {
            expected: num_vars,
            found: p.len(),
        });
    }
    let columns = monomials(num_vars, degree);
    let operators = monomials(num_vars, mult - 1);
    // powers[i][k] = p_i^k
    let powers: Vec<Vec<Rational>> = p
        .coords()
        .iter()
        .map(|c| {
            let mut v = vec![Rational::one()];
            for k in 1..=degree {
                let next = &v[k - 1] * c;
                v.push(next);
            }
            v
        })
        .collect();
    let mut entries = Vec::with_capacity(operators.len() * columns.len());
    for op in &operators {
        for col in &columns {
            entries.push(derivative_at(op, col, &powers));
        }
    }
    RationalMatrix::new(operators.len(), columns.len(), entries)
}

/// `(d^op x^col)(p)` = prod_i col_i!/(col_i - op_i)! * p_i^(col_i - op_i).
fn derivative_at(op: &Monomial, col: &Monomial, powers: &[Vec<Rational>]) -> Rational {
    let mut value = Rational::one();
    let mut factor = BigInt::one();
    for i in 0..col.exponents.len() {
        let (a, b) = (op.exponents[i], col.exponents[i]);
        if a > b {
            return Rational::zero();
        }
        let p = &powers[i][(b - a) as usize];
        if p.is_zero() {
            return Rational::zero();
        }
        value *= p;
        for k in (b - a + 1)..=b {
            factor *= k;
        }
    }
    value * Rational::from_integer(factor)
}

/// A linear system of forms together with the point conditions defining it.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    pub ambient_dim: usize,
    pub degree: usize,
    pub basis: Vec<HomogeneousForm>,
    pub constraints: Vec<(ProjectivePoint, usize)>,
}

impl LinearSystem {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vars(&self) -> usize {
        self.ambient_dim + 1
    }

    /// Basis coefficient vectors as rows over the canonical monomials.
    pub fn coefficient_matrix(&self) -> RationalMatrix {
        let cols = monomials(self.num_vars(), self.degree).len();
        let rows = self.basis.iter().map(HomogeneousForm::to_dense).collect();
        RationalMatrix::from_rows(cols, rows).expect("forms share degree and variables")
    }

    /// Same vector space of forms (row-space equality via ranks).
    pub fn same_span(&self, other: &Self) -> bool {
        if self.num_vars() != other.num_vars() || self.degree != other.degree {
            return false;
        }
        let a = self.coefficient_matrix();
        let b = other.coefficient_matrix();
        let r = a.rank();
        r == b.rank() && a.stack(&b).expect("same width").rank() == r
    }

    /// Values of the basis forms at a representative.
    pub fn evaluate(&self, p: &ProjectivePoint) -> Result<Vec<Rational>, Error> {
        self.basis.iter().map(|f| f.evaluate(p)).collect()
    }

    /// Checks every basis form against every constraint by differentiation.
    pub fn satisfies_constraints(&self) -> Result<bool, Error> {
        for f in &self.basis {
            for (p, mult) in &self.constraints {
                if !f.vanishes_with_multiplicity(p, *mult)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Forms of the given degree on `P^ambient_dim` satisfying all constraints.
/// An empty constraint list gives every form of that degree.
pub fn linear_system_basis(
    ambient_dim: usize,
    degree: usize,
    constraints: &[(ProjectivePoint, usize)],
) -> Result<LinearSystem, Error> {
    let num_vars = ambient_dim + 1;
    let columns = monomials(num_vars, degree);
    let mut stacked = RationalMatrix::zeros(0, columns.len());
    for (p, mult) in constraints {
        let rows = multiplicity_conditions(ambient_dim, degree, p, *mult)?;
        stacked = stacked.stack(&rows)?;
    }
    let basis = stacked
        .kernel_basis()
        .into_iter()
        .map(|v| HomogeneousForm::from_coefficients(num_vars, degree, &columns, &v))
        .collect();
    Ok(LinearSystem {
        ambient_dim,
        degree,
        basis,
        constraints: constraints.to_vec(),
    })
}

#[derive(Serialize)]
pub struct TermJson {
    pub exponents: Vec<u32>,
    pub coeff: String,
}

#[derive(Serialize)]
pub struct FormJson {
    pub degree: usize,
    pub num_vars: usize,
    pub terms: Vec<TermJson>,
}

impl From<&HomogeneousForm> for FormJson {
    fn from(f: &HomogeneousForm) -> Self {
        Self {
            degree: f.degree,
            num_vars: f.num_vars,
            terms: f
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    exponents: m.exponents.clone(),
                    coeff: format_rational(c),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::sampling::Sampler;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn form(num_vars: usize, degree: usize, terms: &[(&[u32], i64)]) -> HomogeneousForm {
        HomogeneousForm::new(
            num_vars,
            degree,
            terms.iter().map(|(e, c)| (mono(e), rat(*c))),
        )
        .unwrap()
    }

    fn pt(c: &[i64]) -> ProjectivePoint {
        ProjectivePoint::from_i64(c).unwrap()
    }

    #[test]
    fn canonical_monomial_order() {
        let m = monomials(3, 2);
        let exps: Vec<&[u32]> = m.iter().map(|m| m.exponents()).collect();
        assert_eq!(
            exps,
            vec![
                &[2, 0, 0][..],
                &[1, 1, 0],
                &[1, 0, 1],
                &[0, 2, 0],
                &[0, 1, 1],
                &[0, 0, 2]
            ]
        );
        let mut sorted = m.clone();
        sorted.sort();
        assert_eq!(sorted, m);
        assert_eq!(monomials(5, 3).len(), 35);
    }

    #[test]
    fn differentiation_examples() {
        let f = form(3, 3, &[(&[2, 1, 0], 1)]);
        assert_eq!(f.differentiate(0).unwrap(), form(3, 2, &[(&[1, 1, 0], 2)]));
        let g = form(3, 2, &[(&[1, 1, 0], 1)]);
        assert!(g.differentiate(2).unwrap().is_zero());
        let h = form(3, 2, &[(&[1, 1, 0], 1), (&[1, 0, 1], -1)]);
        assert_eq!(h.differentiate(1).unwrap(), form(3, 1, &[(&[1, 0, 0], 1)]));
        assert!(matches!(h.differentiate(3), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn evaluation_examples() {
        let h = form(3, 2, &[(&[1, 1, 0], 1), (&[1, 0, 1], -1)]);
        assert_eq!(h.evaluate(&pt(&[1, 1, 1])).unwrap(), rat(0));
        assert_eq!(h.evaluate(&pt(&[1, 2, 3])).unwrap(), rat(-1));
        assert_eq!(h.evaluate(&pt(&[2, 4, 6])).unwrap(), rat(-4));
        let c = form(3, 3, &[(&[1, 1, 1], 1)]);
        assert_eq!(c.evaluate(&pt(&[1, 1, 0])).unwrap(), rat(0));
        assert!(matches!(c.evaluate(&pt(&[1, 1])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn cancelling_terms_are_dropped() {
        let a = form(2, 1, &[(&[1, 0], 1), (&[0, 1], 2)]);
        let b = form(2, 1, &[(&[1, 0], -1)]);
        let s = a.add(&b).unwrap();
        assert_eq!(s.terms().len(), 1);
        assert_eq!(s, form(2, 1, &[(&[0, 1], 2)]));
    }

    #[test]
    fn multiplicity_condition_examples() {
        let e1 = pt(&[1, 0, 0]);
        let m = multiplicity_conditions(2, 2, &e1, 1).unwrap();
        assert_eq!(m.rows(), 1);
        assert_eq!(m.row(0), &[rat(1), rat(0), rat(0), rat(0), rat(0), rat(0)]);

        // degree 3, mult 2 at e1: only x0^3, x0^2 x1, x0^2 x2 are constrained
        let m = multiplicity_conditions(2, 3, &e1, 2).unwrap();
        assert_eq!(m.rows(), 3);
        let cols = monomials(3, 3);
        let constrained: Vec<&Monomial> = (0..m.cols())
            .filter(|&j| (0..m.rows()).any(|i| !m.get(i, j).is_zero()))
            .map(|j| &cols[j])
            .collect();
        assert_eq!(constrained, vec![&mono(&[3, 0, 0]), &mono(&[2, 1, 0]), &mono(&[2, 0, 1])]);
        assert_eq!(m.rank(), 3);
        // the survivors are the monomials with alpha_0 <= 1
        let sys = linear_system_basis(2, 3, &[(e1.clone(), 2)]).unwrap();
        for f in &sys.basis {
            assert!(f.terms().keys().all(|m| m.exponents()[0] <= 1));
        }

        let m = multiplicity_conditions(2, 2, &pt(&[1, 1, 1]), 1).unwrap();
        assert_eq!(m.row(0), vec![rat(1); 6].as_slice());

        assert_eq!(
            multiplicity_conditions(2, 2, &e1, 0).unwrap_err(),
            Error::InvalidMultiplicity { mult: 0, degree: 2 }
        );
        assert_eq!(
            multiplicity_conditions(2, 2, &e1, 3).unwrap_err(),
            Error::InvalidMultiplicity { mult: 3, degree: 2 }
        );
    }

    #[test]
    fn linear_system_examples() {
        let four = [pt(&[1, 0, 0]), pt(&[0, 1, 0]), pt(&[0, 0, 1]), pt(&[1, 1, 1])];
        let constraints: Vec<_> = four.iter().map(|p| (p.clone(), 1)).collect();
        let pencil = linear_system_basis(2, 2, &constraints).unwrap();
        assert_eq!(pencil.dimension(), 2);
        assert!(pencil.satisfies_constraints().unwrap());

        let lines = linear_system_basis(1, 1, &[]).unwrap();
        assert_eq!(lines.dimension(), 2);

        let mut s = Sampler::new(11);
        let five: Vec<_> = (0..5).map(|_| (s.point(4), 1)).collect();
        let quadrics = linear_system_basis(3, 2, &five).unwrap();
        assert_eq!(quadrics.dimension(), 5);
        assert!(quadrics.satisfies_constraints().unwrap());
        assert_eq!(quadrics.coefficient_matrix().rank(), 5);
    }

    #[test]
    fn matrix_and_differentiation_routes_agree() {
        let mut s = Sampler::with_bound(5, 6);
        for _ in 0..5 {
            let p = s.point(4);
            let sys = linear_system_basis(3, 3, &[(p.clone(), 2)]).unwrap();
            assert_eq!(sys.dimension(), 20 - 4);
            assert!(sys.satisfies_constraints().unwrap());
            // a random form outside the system generally fails
            let f = HomogeneousForm::from_coefficients(4, 3, &monomials(4, 3), &s.vector(20));
            let inside = sys.coefficient_matrix().stack(
                &RationalMatrix::from_rows(20, vec![f.to_dense()]).unwrap(),
            ).unwrap().rank() == sys.dimension();
            assert_eq!(inside, f.vanishes_with_multiplicity(&p, 2).unwrap());
        }
    }

    fn random_member(sys: &LinearSystem, s: &mut Sampler) -> HomogeneousForm {
        sys.basis.iter().fold(
            HomogeneousForm::zero(sys.num_vars(), sys.degree),
            |acc, f| acc.add(&f.scale(&s.rational())).unwrap(),
        )
    }

    #[test]
    fn euler_cascade() {
        let mut s = Sampler::with_bound(21, 9);
        for (dim, degree, mult) in [(2, 4, 3), (3, 3, 2), (3, 4, 3), (4, 3, 3)] {
            let p = s.point(dim + 1);
            let sys = linear_system_basis(dim, degree, &[(p.clone(), mult)]).unwrap();
            for _ in 0..4 {
                let q = random_member(&sys, &mut s);
                for lower in 1..=mult {
                    assert!(q.vanishes_with_multiplicity(&p, lower).unwrap());
                }
            }
        }
    }

    #[test]
    fn vanishing_on_the_joining_line() {
        // forms with multiplicities (yp, yq) restrict to the line <p,q> with
        // zeros of order >= yp + yq - r, and identically when yp + yq > r
        let mut s = Sampler::with_bound(8, 7);
        for (dim, r, yp, yq) in [(2, 3, 2, 2), (3, 4, 3, 2), (2, 4, 2, 2), (3, 4, 2, 1), (2, 3, 3, 1)] {
            let p = s.point(dim + 1);
            let q = s.point(dim + 1);
            let sys = linear_system_basis(dim, r, &[(p.clone(), yp), (q.clone(), yq)]).unwrap();
            for f in &sys.basis {
                let b = f.restrict_to_line(&p, &q).unwrap();
                if yp + yq > r {
                    assert!(b.is_zero());
                } else {
                    let need = (yp + yq).saturating_sub(r);
                    // parameter (1:0) is p, (0:1) is q
                    let at_p = b.root_multiplicity(&rat(1), &rat(0));
                    let at_q = b.root_multiplicity(&rat(0), &rat(1));
                    assert!(at_p.is_none_or(|m| m >= need.max(yp)));
                    assert!(at_q.is_none_or(|m| m >= need.max(yq)));
                }
            }
        }
    }

    #[test]
    fn vanishing_on_secant_lines_of_general_points() {
        // r-forms singular to order r-1 at general points vanish to order
        // r-2 along the lines joining two of them
        let mut s = Sampler::with_bound(4, 3);
        for (dim, r, random) in [(4, 3, true), (6, 4, false)] {
            let pts: Vec<ProjectivePoint> = if random {
                (0..dim + 2).map(|_| s.point(dim + 1)).collect()
            } else {
                (0..=dim)
                    .map(|i| ProjectivePoint::coordinate(dim + 1, i))
                    .chain([ProjectivePoint::unit(dim + 1)])
                    .collect()
            };
            let constraints: Vec<_> = pts.iter().map(|p| (p.clone(), r - 1)).collect();
            let sys = linear_system_basis(dim, r, &constraints).unwrap();
            assert!(sys.dimension() > 0);
            for _ in 0..3 {
                let pair = s.subset(pts.len(), 2);
                let (a, b) = (s.nonzero_rational(), s.nonzero_rational());
                let z: Vec<Rational> = pts[pair[0]]
                    .coords()
                    .iter()
                    .zip(pts[pair[1]].coords())
                    .map(|(x, y)| &a * x + &b * y)
                    .collect();
                let z = ProjectivePoint::new(z).unwrap();
                for f in &sys.basis {
                    assert!(f.vanishes_with_multiplicity(&z, r - 2).unwrap());
                }
            }
        }
    }

    #[test]
    fn json_shape() {
        let h = form(3, 2, &[(&[1, 1, 0], 1), (&[1, 0, 1], -1)]);
        let json = serde_json::to_value(FormJson::from(&h)).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "degree": 2,
                "num_vars": 3,
                "terms": [
                    {"exponents": [1, 1, 0], "coeff": "1"},
                    {"exponents": [1, 0, 1], "coeff": "-1"}
                ]
            })
        );
    }
}
