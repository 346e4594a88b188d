//! The linear system of degree-`n` forms on `P^{2n-2}` with multiplicity
//! `n-1` at the standard base `W` (coordinate points and the unit point), and
//! the rational map it defines.
//!
//! A form vanishing to order `n-1` at every coordinate point is a combination
//! of square-free monomials `x_I`, `|I| = n`; vanishing to order `n-1` at the
//! unit point is then the incidence condition `sum_{I ⊃ J} a_I = 0` for every
//! `(n-2)`-subset `J`.

use std::sync::Arc;

use itertools::Itertools;
use num_traits::Zero;

use crate::brackets::{check_permutation, Configuration};
use crate::exactnum::{projectivity_from_frames, rat, ProjectivePoint, Rational, RationalMatrix};
use crate::forms::{linear_system_basis, HomogeneousForm, LinearSystem, Monomial};
use crate::memo::Memo;
use crate::Error;

/// The `2n` points of `W` in `P^{2n-2}`: `e_0, ..., e_{2n-2}, u`.
#[derive(Clone, Debug)]
pub struct BaseW {
    pub n: usize,
    pub points: Vec<ProjectivePoint>,
}

impl BaseW {
    pub fn new(n: usize) -> Self {
        let len = 2 * n - 1;
        let mut points: Vec<ProjectivePoint> =
            (0..len).map(|i| ProjectivePoint::coordinate(len, i)).collect();
        points.push(ProjectivePoint::unit(len));
        Self { n, points }
    }

    pub fn num_vars(&self) -> usize {
        2 * self.n - 1
    }
}

#[derive(Clone, Debug)]
pub struct OmegaSystem {
    pub n: usize,
    pub system: LinearSystem,
    /// The `n`-subsets `I` of `{0, ..., 2n-2}` in lexicographic order, which
    /// is also the canonical order of the monomials `x_I`.
    pub monomial_index: Vec<Vec<usize>>,
}

impl OmegaSystem {
    pub fn dimension(&self) -> usize {
        self.system.dimension()
    }

    pub fn basis(&self) -> &[HomogeneousForm] {
        &self.system.basis
    }
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * u128::from(n - i) / u128::from(i + 1))
}

/// `(2n)! / ((n+1)! n!)`, by the factorial quotient itself.
pub fn catalan(n: u64) -> u128 {
    let fact = |m: u64| (1..=m).fold(num_bigint::BigUint::from(1u8), |acc, k| acc * k);
    let value = fact(2 * n) / (fact(n + 1) * fact(n));
    u128::try_from(value).expect("catalan number fits in u128")
}

fn check_n(n: usize) -> Result<(), Error> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n must be at least 2, got {n}")));
    }
    Ok(())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..2 * n - 1).combinations(k).collect()
}

/// Rows: `(n-2)`-subsets `J`; columns: `n`-subsets `I`; entry 1 iff `J ⊂ I`.
pub fn incidence_matrix(n: usize) -> Result<RationalMatrix, Error> {
    check_n(n)?;
    let r = subsets(n, n);
    let s = subsets(n, n - 2);
    let rows = s
        .iter()
        .map(|j| {
            r.iter()
                .map(|i| rat(i64::from(j.iter().all(|v| i.contains(v)))))
                .collect()
        })
        .collect();
    RationalMatrix::from_rows(r.len(), rows)
}

static OMEGA: Memo<usize, OmegaSystem> = Memo::new();

/// Canonical basis: the kernel basis of the incidence matrix, one form per
/// free column of its reduced row echelon form.
pub fn omega_basis(n: usize) -> Result<Arc<OmegaSystem>, Error> {
    check_n(n)?;
    OMEGA.get_or_try_insert(n, || {
        let num_vars = 2 * n - 1;
        let index = subsets(n, n);
        let basis = incidence_matrix(n)?
            .kernel_basis()
            .into_iter()
            .map(|v| {
                let terms: Vec<(Monomial, Rational)> = index
                    .iter()
                    .zip(v)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (Monomial::square_free(num_vars, i), c))
                    .collect();
                HomogeneousForm::new(num_vars, n, terms)
            })
            .collect::<Result<_, _>>()?;
        let constraints = BaseW::new(n).points.into_iter().map(|p| (p, n - 1)).collect();
        Ok(OmegaSystem {
            n,
            system: LinearSystem {
                ambient_dim: 2 * n - 2,
                degree: n,
                basis,
                constraints,
            },
            monomial_index: index,
        })
    })
}

/// The same system from the dense derivative conditions at all of `W`.
/// Sizes grow quickly; meant for `n <= 4`.
pub fn omega_basis_generic(n: usize) -> Result<LinearSystem, Error> {
    check_n(n)?;
    let constraints: Vec<_> = BaseW::new(n).points.into_iter().map(|p| (p, n - 1)).collect();
    linear_system_basis(2 * n - 2, n, &constraints)
}

fn check_point(n: usize, x: &ProjectivePoint) -> Result<(), Error> {
    if x.len() != 2 * n - 1 {
        return Err(Error::DimensionMismatch {
            expected: 2 * n - 1,
            found: x.len(),
        });
    }
    Ok(())
}

/// Values of the canonical basis at a representative of `x`.
pub fn phi_omega(n: usize, x: &ProjectivePoint) -> Result<ProjectivePoint, Error> {
    check_point(n, x)?;
    let values = omega_basis(n)?.system.evaluate(x)?;
    ProjectivePoint::new(values)
        .map_err(|_| Error::BaseLocusPoint(format!("every basis form vanishes at {x}")))
}

/// The projectivity sending the `i`-th point of `W` to the `sigma[i]`-th.
pub fn frame_automorphism(n: usize, sigma: &[usize]) -> Result<RationalMatrix, Error> {
    check_n(n)?;
    check_permutation(sigma, 2 * n)?;
    let w = BaseW::new(n).points;
    let target: Vec<ProjectivePoint> = sigma.iter().map(|&i| w[i].clone()).collect();
    projectivity_from_frames(&w, &target)
}

/// The parameters on the curve through `W ∪ {x}` of the points of `W`,
/// normalized so that `u` sits at `(1:0)` and `x` at `(0:1)`.
pub fn config_of_point(n: usize, x: &ProjectivePoint) -> Result<Configuration, Error> {
    check_n(n)?;
    check_point(n, x)?;
    let c = x.coords();
    if let Some(i) = c.iter().position(Zero::is_zero) {
        return Err(Error::DegenerateConfiguration(format!(
            "coordinate {i} of {x} is zero: e_{i} and u share the parameter (1:0)"
        )));
    }
    for (i, j) in (0..c.len()).tuple_combinations() {
        if c[i] == c[j] {
            return Err(Error::DegenerateConfiguration(format!(
                "coordinates {i} and {j} of {x} coincide: parameter (1:{}) is repeated",
                c[i]
            )));
        }
    }
    let mut points: Vec<ProjectivePoint> = c
        .iter()
        .map(|v| ProjectivePoint::new(vec![rat(1), v.clone()]))
        .collect::<Result<_, _>>()?;
    points.push(ProjectivePoint::from_i64(&[1, 0])?);
    Configuration::new(points)
}

/// Rank of the matrix of first partials of the basis forms at `x`.
pub fn jacobian_rank(n: usize, x: &ProjectivePoint) -> Result<usize, Error> {
    phi_omega(n, x)?;
    let sys = omega_basis(n)?;
    let rows = sys
        .basis()
        .iter()
        .map(|f| {
            (0..x.len())
                .map(|v| f.differentiate(v)?.evaluate(x))
                .collect::<Result<Vec<Rational>, Error>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RationalMatrix::from_rows(x.len(), rows)?.rank())
}

/// A point of the span of the given points with random coefficients, none
/// of them zero.
pub(crate) fn random_span_point(
    sampler: &mut crate::sampling::Sampler,
    points: &[ProjectivePoint],
) -> ProjectivePoint {
    sampler
        .until(
            |s| {
                let len = points[0].len();
                let mut acc = vec![Rational::zero(); len];
                for p in points {
                    let c = s.nonzero_rational();
                    for (a, x) in acc.iter_mut().zip(p.coords()) {
                        *a += &c * x;
                    }
                }
                acc
            },
            |v| v.iter().any(|x| !x.is_zero()),
        )
        .map(|v| ProjectivePoint::new(v).expect("nonzero"))
        .expect("independent points span a nonzero vector")
}
