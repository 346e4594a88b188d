//! Configurations of `2n` points on the line, their degree-one bracket
//! invariants and GIT stability.
//!
//! The invariant space is spanned by bracket monomials
//! `prod_{(i,j) in M} (s_i t_j - s_j t_i)` over perfect matchings `M`; the
//! non-crossing matchings give a basis of Catalan dimension.

use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use crate::exactnum::{format_rational, ProjectivePoint, Rational, RationalMatrix};
use crate::memo::Memo;
use crate::Error;

/// An ordered tuple of points of `P^1` (collisions allowed).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    points: Vec<ProjectivePoint>,
}

impl Configuration {
    pub fn new(points: Vec<ProjectivePoint>) -> Result<Self, Error> {
        if points.len() % 2 == 1 {
            return Err(Error::InvalidArgument(format!(
                "configurations have an even number of points, got {}",
                points.len()
            )));
        }
        if let Some(p) = points.iter().find(|p| p.len() != 2) {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: p.len(),
            });
        }
        Ok(Self { points })
    }

    /// Builds from `(s, t)` integer pairs.
    pub fn from_i64(pairs: &[(i64, i64)]) -> Result<Self, Error> {
        Self::new(
            pairs
                .iter()
                .map(|&(s, t)| ProjectivePoint::from_i64(&[s, t]))
                .collect::<Result<_, _>>()?,
        )
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Common Möbius transform `g . c`.
    pub fn transform(&self, g: &RationalMatrix) -> Result<Self, Error> {
        Self::new(
            self.points
                .iter()
                .map(|p| p.transform(g))
                .collect::<Result<_, _>>()?,
        )
    }

    /// Relabelled configuration with `i`-th point `c[sigma[i]]`.
    pub fn permuted(&self, sigma: &[usize]) -> Result<Self, Error> {
        check_permutation(sigma, self.len())?;
        Ok(Self {
            points: sigma.iter().map(|&i| self.points[i].clone()).collect(),
        })
    }

    /// Sizes of the classes of coincident points, in order of first
    /// appearance.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut reps: Vec<(&ProjectivePoint, usize)> = Vec::new();
        for p in &self.points {
            match reps.iter_mut().find(|(q, _)| *q == p) {
                Some((_, count)) => *count += 1,
                None => reps.push((p, 1)),
            }
        }
        reps.into_iter().map(|(_, c)| c).collect()
    }

    pub fn to_json(&self) -> Vec<[String; 2]> {
        self.points
            .iter()
            .map(|p| [format_rational(&p.coords()[0]), format_rational(&p.coords()[1])])
            .collect()
    }
}

pub(crate) fn check_permutation(sigma: &[usize], len: usize) -> Result<(), Error> {
    let mut seen = vec![false; len];
    if sigma.len() != len {
        return Err(Error::InvalidArgument(format!(
            "permutation of length {} acting on {len} items",
            sigma.len()
        )));
    }
    for &i in sigma {
        if i >= len || seen[i] {
            return Err(Error::InvalidArgument(format!("{sigma:?} is not a permutation")));
        }
        seen[i] = true;
    }
    Ok(())
}

/// A perfect matching of `{0, ..., 2n-1}`, pairs `(i, j)` with `i < j`
/// sorted by `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Result<Self, Error> {
        for p in pairs.iter_mut() {
            if p.0 > p.1 {
                *p = (p.1, p.0);
            }
        }
        pairs.sort_unstable();
        let mut seen = vec![false; 2 * pairs.len()];
        for &(i, j) in &pairs {
            for k in [i, j] {
                if k >= seen.len() || seen[k] {
                    return Err(Error::InvalidArgument(format!(
                        "{pairs:?} is not a perfect matching"
                    )));
                }
                seen[k] = true;
            }
        }
        Ok(Self { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn is_noncrossing(&self) -> bool {
        self.pairs.iter().all(|&(a, b)| {
            self.pairs
                .iter()
                .all(|&(c, d)| !(a < c && c < b && b < d))
        })
    }

    /// The bracket monomial of this matching evaluated at `c`.
    pub fn bracket_monomial(&self, c: &Configuration) -> Rational {
        let mut value = Rational::from_integer(1.into());
        for &(i, j) in &self.pairs {
            let b = bracket(&c.points[i], &c.points[j]);
            if b.is_zero() {
                return b;
            }
            value *= b;
        }
        value
    }
}

/// `s_i t_j - s_j t_i`.
pub fn bracket(a: &ProjectivePoint, b: &ProjectivePoint) -> Rational {
    let (a, b) = (a.coords(), b.coords());
    &a[0] * &b[1] - &b[0] * &a[1]
}

static MATCHINGS: Memo<usize, Vec<Matching>> = Memo::new();

/// Non-crossing perfect matchings of `{0, ..., 2n-1}`: `0` is paired with
/// `j = 1, 3, 5, ...` in turn, then the inside and the outside of the arc are
/// matched recursively.
pub fn noncrossing_matchings(n: usize) -> Arc<Vec<Matching>> {
    fn rec(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        if lo >= hi {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        let mut j = lo + 1;
        while j < hi {
            for inner in rec(lo + 1, j) {
                for outer in rec(j + 1, hi) {
                    let mut m = vec![(lo, j)];
                    m.extend(inner.iter().copied());
                    m.extend(outer.iter().copied());
                    out.push(m);
                }
            }
            j += 2;
        }
        out
    }
    MATCHINGS
        .get_or_try_insert(n, || {
            Ok::<_, Error>(
                rec(0, 2 * n)
                    .into_iter()
                    .map(|m| Matching::new(m).expect("valid matching"))
                    .collect(),
            )
        })
        .expect("infallible")
}

/// Image of a configuration in the projectivized invariant space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GitPoint {
    Point(ProjectivePoint),
    /// Every invariant vanishes: the configuration is unstable.
    ZeroVector,
}

impl GitPoint {
    pub fn point(&self) -> Option<&ProjectivePoint> {
        match self {
            GitPoint::Point(p) => Some(p),
            GitPoint::ZeroVector => None,
        }
    }
}

/// Evaluates the non-crossing bracket monomials at `c`, in canonical order.
pub fn git_point(n: usize, c: &Configuration) -> Result<GitPoint, Error> {
    if c.len() != 2 * n {
        return Err(Error::DimensionMismatch {
            expected: 2 * n,
            found: c.len(),
        });
    }
    let values: Vec<Rational> = noncrossing_matchings(n)
        .iter()
        .map(|m| m.bracket_monomial(c))
        .collect();
    Ok(match ProjectivePoint::new(values) {
        Ok(p) => GitPoint::Point(p),
        Err(_) => GitPoint::ZeroVector,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stability {
    Stable,
    StrictlySemistable,
    Unstable,
}

/// Maximal collision multiplicity `m` against `n`: stable iff `m < n`,
/// strictly semistable iff `m = n`, unstable iff `m > n`.
pub fn classify_stability(n: usize, c: &Configuration) -> Result<Stability, Error> {
    if c.len() != 2 * n {
        return Err(Error::DimensionMismatch {
            expected: 2 * n,
            found: c.len(),
        });
    }
    let m = c.multiplicities().into_iter().max().unwrap_or(0);
    Ok(match m.cmp(&n) {
        std::cmp::Ordering::Less => Stability::Stable,
        std::cmp::Ordering::Equal => Stability::StrictlySemistable,
        std::cmp::Ordering::Greater => Stability::Unstable,
    })
}

/// Outcome of [`fit_linear_map_with_diagnostics`].
#[derive(Clone, Debug)]
pub struct LinearFit {
    /// Dimension of the space of matrices compatible with every pair.
    pub solution_dim: usize,
    /// The fitted matrix, present iff `solution_dim == 1` and it is invertible.
    pub matrix: Option<RationalMatrix>,
}

/// Fits a matrix `M` with `M . source_i ~ target_i` for every pair.
pub fn fit_linear_map(pairs: &[(ProjectivePoint, ProjectivePoint)]) -> Option<RationalMatrix> {
    fit_linear_map_with_diagnostics(pairs).matrix
}

/// Solves the proportionality constraints `target ^ (M source) = 0`, which are
/// linear in the entries of `M`.
pub fn fit_linear_map_with_diagnostics(pairs: &[(ProjectivePoint, ProjectivePoint)]) -> LinearFit {
    let Some((first_src, first_tgt)) = pairs.first() else {
        return LinearFit {
            solution_dim: 0,
            matrix: None,
        };
    };
    let (ds, dt) = (first_src.len(), first_tgt.len());
    if pairs.iter().any(|(s, t)| s.len() != ds || t.len() != dt) {
        return LinearFit {
            solution_dim: 0,
            matrix: None,
        };
    }
    let unknowns = ds * dt;
    let mut rows = Vec::new();
    for (src, tgt) in pairs {
        let t = tgt.coords();
        let k = t.iter().position(|v| !v.is_zero()).expect("projective point");
        for j in (0..dt).filter(|&j| j != k) {
            // t_k (M src)_j - t_j (M src)_k = 0
            let mut row = vec![Rational::zero(); unknowns];
            for (b, sb) in src.coords().iter().enumerate() {
                if sb.is_zero() {
                    continue;
                }
                row[j * ds + b] += &t[k] * sb;
                row[k * ds + b] -= &t[j] * sb;
            }
            rows.push(row);
        }
    }
    let system = RationalMatrix::from_rows(unknowns, rows).expect("uniform rows");
    let kernel = system.kernel_basis();
    let solution_dim = kernel.len();
    let matrix = (solution_dim == 1)
        .then(|| RationalMatrix::new(dt, ds, kernel[0].clone()).expect("sized kernel vector"))
        .filter(|m| ds == dt && m.rank() == ds);
    LinearFit {
        solution_dim,
        matrix,
    }
}
