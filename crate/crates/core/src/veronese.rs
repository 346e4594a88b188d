//! Rational normal curves, in particular the unique one through `d + 3`
//! general points of `P^d`.
//!
//! After moving the first `d + 1` points to the coordinate points with a
//! matrix `A`, the remaining two points become `p` and `q`, and the curve is
//! `A` applied to
//!
//! ```text
//! x_i(s, t) = p_i q_i prod_{j != i} (s q_j - t p_j)
//! ```
//!
//! which passes through `p` at `(1:0)`, `q` at `(0:1)` and the `i`-th
//! coordinate point at `(p_i : q_i)`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::binary::{common_factor_degree, common_rational_roots, BinaryForm};
use crate::exactnum::{format_rational, ProjectivePoint, Rational, RationalMatrix};
use crate::Error;

/// A parametrized rational normal curve: `d + 1` binary forms of degree `d`.
#[derive(Clone, Debug)]
pub struct ParamCurve {
    ambient_dim: usize,
    components: Vec<BinaryForm>,
    frame: RationalMatrix,
}

impl ParamCurve {
    /// Validates non-degeneracy (independent components) and the absence of
    /// base points (no common factor).
    pub fn from_components(components: Vec<BinaryForm>) -> Result<Self, Error> {
        let d = components.len().saturating_sub(1);
        Self::with_frame(components, RationalMatrix::identity(d + 1))
    }

    fn with_frame(components: Vec<BinaryForm>, frame: RationalMatrix) -> Result<Self, Error> {
        let d = components.len().saturating_sub(1);
        if d == 0 {
            return Err(Error::InvalidArgument("a curve needs at least two components".into()));
        }
        for c in &components {
            if c.degree() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: c.degree(),
                });
            }
        }
        let coeffs = RationalMatrix::from_rows(
            d + 1,
            components.iter().map(|c| c.coeffs().to_vec()).collect(),
        )?;
        if coeffs.rank() < d + 1 {
            return Err(Error::DegenerateConfiguration(
                "curve components are linearly dependent".into(),
            ));
        }
        if common_factor_degree(&components) != Some(0) {
            return Err(Error::DegenerateConfiguration(
                "curve components share a common factor".into(),
            ));
        }
        Ok(Self {
            ambient_dim: d,
            components,
            frame,
        })
    }

    /// The Veronese curve `(s^d, s^(d-1) t, ..., t^d)`.
    pub fn standard(d: usize) -> Self {
        let components = (0..=d)
            .map(|k| {
                let mut c = vec![Rational::zero(); d + 1];
                c[k] = Rational::one();
                BinaryForm::new(c)
            })
            .collect();
        Self::from_components(components).expect("standard curve is non-degenerate")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn components(&self) -> &[BinaryForm] {
        &self.components
    }

    /// Matrix moving the coordinate points to the first `d + 1` input points
    /// (identity for curves not built by [`rnc_through`]).
    pub fn frame(&self) -> &RationalMatrix {
        &self.frame
    }

    /// `(d+1) x (d+1)` coefficient matrix of the components.
    pub fn coefficient_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_rows(
            self.ambient_dim + 1,
            self.components.iter().map(|c| c.coeffs().to_vec()).collect(),
        )
        .expect("square coefficient matrix")
    }

    pub fn eval(&self, s: &Rational, t: &Rational) -> Result<ProjectivePoint, Error> {
        ProjectivePoint::new(self.components.iter().map(|c| c.eval(s, t)).collect())
    }

    /// Point of the curve at a parameter of `P^1`.
    pub fn curve_eval(&self, param: &ProjectivePoint) -> Result<ProjectivePoint, Error> {
        if param.len() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: param.len(),
            });
        }
        self.eval(&param.coords()[0], &param.coords()[1])
    }

    /// The parameter at which the curve passes through `x`, if it does.
    ///
    /// Solves the proportionality conditions `x_i c_j(s,t) - x_j c_i(s,t) = 0`
    /// as a common-root problem for binary forms.
    pub fn parameter_of_point(&self, x: &ProjectivePoint) -> Option<ProjectivePoint> {
        if x.len() != self.components.len() {
            return None;
        }
        let xs = x.coords();
        let mut minors = Vec::new();
        for i in 0..xs.len() {
            for j in i + 1..xs.len() {
                let f = self.components[j]
                    .scale(&xs[i])
                    .add(&self.components[i].scale(&-xs[j].clone()));
                minors.push(f);
            }
        }
        let roots = common_rational_roots(&minors)?;
        roots.into_iter().find_map(|(s, t)| {
            let image = self.eval(&s, &t).ok()?;
            (image == *x).then(|| ProjectivePoint::new(vec![s, t]).expect("nonzero parameter"))
        })
    }

    pub fn contains(&self, x: &ProjectivePoint) -> bool {
        self.parameter_of_point(x).is_some()
    }
}

/// The unique rational normal curve through `d + 3` points of `P^d` in
/// general position.
pub fn rnc_through(points: &[ProjectivePoint]) -> Result<ParamCurve, Error> {
    let Some(first) = points.first() else {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: 0,
        });
    };
    let len = first.len();
    let d = len - 1;
    if d == 0 || points.len() != d + 3 {
        return Err(Error::DimensionMismatch {
            expected: len + 2,
            found: points.len(),
        });
    }
    if let Some(bad) = points.iter().find(|p| p.len() != len) {
        return Err(Error::DimensionMismatch {
            expected: len,
            found: bad.len(),
        });
    }
    let columns: Vec<Vec<Rational>> = points[..len].iter().map(|p| p.coords().to_vec()).collect();
    let frame = RationalMatrix::from_columns(len, &columns)?;
    let inverse = frame.inverse().ok_or_else(|| {
        Error::DegenerateConfiguration(format!("points 0..={d} are linearly dependent"))
    })?;
    let p = inverse.mul_vec(points[d + 1].coords())?;
    let q = inverse.mul_vec(points[d + 2].coords())?;
    for (name, v, idx) in [("p", &p, d + 1), ("q", &q, d + 2)] {
        if let Some(i) = v.iter().position(Zero::is_zero) {
            return Err(Error::DegenerateConfiguration(format!(
                "point {idx} ({name}) lies in the span of the frame points other than {i}"
            )));
        }
    }
    for i in 0..len {
        for j in i + 1..len {
            if &p[i] * &q[j] == &p[j] * &q[i] {
                return Err(Error::DegenerateConfiguration(format!(
                    "parameters of frame points {i} and {j} coincide: ({}:{})",
                    p[i], q[i]
                )));
            }
        }
    }
    let local: Vec<BinaryForm> = (0..len)
        .map(|i| {
            (0..len)
                .filter(|&j| j != i)
                .fold(BinaryForm::constant(&p[i] * &q[i]), |acc, j| {
                    acc.mul(&BinaryForm::linear(q[j].clone(), -p[j].clone()))
                })
        })
        .collect();
    let components = (0..len)
        .map(|k| {
            (0..len).fold(BinaryForm::new(vec![Rational::zero(); len]), |acc, i| {
                acc.add(&local[i].scale(frame.get(k, i)))
            })
        })
        .collect();
    ParamCurve::with_frame(components, frame)
}

/// Parameters `(p_i : q_i)` at which a curve from [`rnc_through`] meets the
/// first `d + 1` points, followed by `(1:0)` and `(0:1)`.
pub fn input_parameters(points: &[ProjectivePoint]) -> Result<Vec<ProjectivePoint>, Error> {
    let curve = rnc_through(points)?;
    let inverse = curve.frame.inverse().expect("validated frame");
    let d = curve.ambient_dim;
    let p = inverse.mul_vec(points[d + 1].coords())?;
    let q = inverse.mul_vec(points[d + 2].coords())?;
    let mut out: Vec<ProjectivePoint> = p
        .into_iter()
        .zip(q)
        .map(|(a, b)| ProjectivePoint::new(vec![a, b]))
        .collect::<Result<_, _>>()?;
    out.push(ProjectivePoint::new(vec![Rational::one(), Rational::zero()])?);
    out.push(ProjectivePoint::new(vec![Rational::zero(), Rational::one()])?);
    Ok(out)
}

#[derive(Serialize)]
pub struct CurveJson {
    pub ambient_dim: usize,
    /// Component `i` lists coefficients of `s^(d-k) t^k`, `k = 0..=d`.
    pub components: Vec<Vec<String>>,
    pub frame: Vec<Vec<String>>,
}

impl From<&ParamCurve> for CurveJson {
    fn from(c: &ParamCurve) -> Self {
        Self {
            ambient_dim: c.ambient_dim,
            components: c
                .components
                .iter()
                .map(|f| f.coeffs().iter().map(format_rational).collect())
                .collect(),
            frame: (0..c.frame.rows())
                .map(|i| c.frame.row(i).iter().map(format_rational).collect())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::forms::linear_system_basis;
    use crate::sampling::Sampler;

    fn pt(c: &[i64]) -> ProjectivePoint {
        ProjectivePoint::from_i64(c).unwrap()
    }

    fn bf(c: &[i64]) -> BinaryForm {
        BinaryForm::new(c.iter().map(|&v| rat(v)).collect())
    }

    fn frame_plus(extra: &[&[i64]]) -> Vec<ProjectivePoint> {
        let mut v = vec![pt(&[1, 0, 0]), pt(&[0, 1, 0]), pt(&[0, 0, 1])];
        v.extend(extra.iter().map(|c| pt(c)));
        v
    }

    #[test]
    fn closed_form_example() {
        let pts = frame_plus(&[&[1, 1, 1], &[1, 2, 4]]);
        let c = rnc_through(&pts).unwrap();
        let expected = [
            bf(&[2, -1]).mul(&bf(&[4, -1])),
            bf(&[1, -1]).mul(&bf(&[4, -1])).scale(&rat(2)),
            bf(&[1, -1]).mul(&bf(&[2, -1])).scale(&rat(4)),
        ];
        assert_eq!(c.components(), &expected);
        let at_one = c.curve_eval(&pt(&[1, 1])).unwrap();
        assert_eq!(at_one, pt(&[1, 0, 0]));
        assert_eq!(at_one.coords(), &[rat(3), rat(0), rat(0)]);
        assert_eq!(c.curve_eval(&pt(&[0, 1])).unwrap(), pt(&[1, 2, 4]));
        assert_eq!(c.curve_eval(&pt(&[1, 0])).unwrap(), pt(&[1, 1, 1]));
        for (i, p) in pts.iter().enumerate() {
            assert!(c.contains(p), "point {i}");
        }
        assert_eq!(
            input_parameters(&pts).unwrap(),
            vec![pt(&[1, 1]), pt(&[1, 2]), pt(&[1, 4]), pt(&[1, 0]), pt(&[0, 1])]
        );
    }

    #[test]
    fn coinciding_ratios_are_degenerate() {
        let err = rnc_through(&frame_plus(&[&[1, 1, 1], &[1, 1, 4]])).unwrap_err();
        assert!(matches!(err, Error::DegenerateConfiguration(ref w) if w.contains("0 and 1")));
        let err = rnc_through(&frame_plus(&[&[1, 1, 1], &[0, 1, 4]])).unwrap_err();
        assert!(matches!(err, Error::DegenerateConfiguration(_)));
        let dependent = vec![pt(&[1, 0, 0]), pt(&[0, 1, 0]), pt(&[1, 1, 0]), pt(&[1, 1, 1]), pt(&[1, 2, 3])];
        assert!(matches!(rnc_through(&dependent), Err(Error::DegenerateConfiguration(_))));
        assert!(matches!(rnc_through(&dependent[..4]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn conic_through_five_points_contains_samples() {
        let pts = frame_plus(&[&[1, 1, 1], &[1, 2, 3]]);
        let c = rnc_through(&pts).unwrap();
        let constraints: Vec<_> = pts.iter().map(|p| (p.clone(), 1)).collect();
        let conic = linear_system_basis(2, 2, &constraints).unwrap();
        assert_eq!(conic.dimension(), 1);
        let mut s = Sampler::new(5);
        for _ in 0..6 {
            let x = c.eval(&s.rational(), &s.nonzero_rational()).unwrap();
            assert_eq!(conic.basis[0].evaluate(&x).unwrap(), rat(0));
        }
    }

    #[test]
    fn standard_curve() {
        let c = ParamCurve::standard(2);
        assert_eq!(c.curve_eval(&pt(&[1, 0])).unwrap(), pt(&[1, 0, 0]));
        assert_eq!(c.curve_eval(&pt(&[1, 2])).unwrap(), pt(&[1, 2, 4]));
        assert_eq!(c.parameter_of_point(&pt(&[1, 3, 9])), Some(pt(&[1, 3])));
        assert_eq!(c.parameter_of_point(&pt(&[0, 1, 0])), None);
        assert_eq!(c.parameter_of_point(&pt(&[0, 0, 1])), Some(pt(&[0, 1])));
        assert_eq!(c.parameter_of_point(&pt(&[1, 0])), None);
    }

    #[test]
    fn base_points_and_degenerate_components_are_rejected() {
        // s(s), s t, t s share the factor s
        let shared = vec![bf(&[1, 0, 0]), bf(&[0, 1, 0]), bf(&[0, 1, 0])];
        assert!(ParamCurve::from_components(shared).is_err());
        let with_base_point = vec![bf(&[1, 0, 0]), bf(&[0, 1, 0]), bf(&[1, 1, 0])];
        assert!(ParamCurve::from_components(with_base_point).is_err());
    }

    fn general_points(s: &mut Sampler, d: usize) -> Vec<ProjectivePoint> {
        s.until(
            |s| (0..d + 3).map(|_| s.point(d + 1)).collect::<Vec<_>>(),
            |pts| rnc_through(pts).is_ok(),
        )
        .unwrap()
    }

    #[test]
    fn round_trip_through_inputs_and_parameters() {
        let mut s = Sampler::with_bound(17, 12);
        for d in 2..=5 {
            let pts = general_points(&mut s, d);
            let c = rnc_through(&pts).unwrap();
            assert_eq!(c.coefficient_matrix().rank(), d + 1);
            let params: Vec<ProjectivePoint> =
                pts.iter().map(|p| c.parameter_of_point(p).unwrap()).collect();
            for i in 0..params.len() {
                for j in i + 1..params.len() {
                    assert_ne!(params[i], params[j]);
                }
            }
            for _ in 0..4 {
                let param = s.point(2);
                let x = c.curve_eval(&param).unwrap();
                assert_eq!(c.parameter_of_point(&x), Some(param));
            }
        }
    }

    #[test]
    fn uniqueness_under_reordering() {
        let mut s = Sampler::with_bound(23, 10);
        for d in 2..=4 {
            let pts = general_points(&mut s, d);
            let a = rnc_through(&pts).unwrap();
            let perm = s.permutation(pts.len());
            let shuffled: Vec<_> = perm.iter().map(|&i| pts[i].clone()).collect();
            let b = rnc_through(&shuffled).unwrap();
            for _ in 0..2 * d + 1 {
                let x = a.curve_eval(&s.point(2)).unwrap();
                assert!(b.contains(&x));
            }
        }
    }

    #[test]
    fn off_curve_points_have_no_parameter() {
        let mut s = Sampler::new(2);
        let c = rnc_through(&general_points(&mut s, 3)).unwrap();
        // points of P^3 on a twisted cubic satisfy three quadrics; a random
        // point almost surely violates them
        let quadrics = {
            let samples: Vec<_> = (0..10).map(|_| c.curve_eval(&s.point(2)).unwrap()).collect();
            let constraints: Vec<_> = samples.into_iter().map(|p| (p, 1)).collect();
            linear_system_basis(3, 2, &constraints).unwrap()
        };
        assert_eq!(quadrics.dimension(), 3);
        for _ in 0..10 {
            let x = s.point(4);
            let on_quadrics = quadrics
                .basis
                .iter()
                .all(|f| f.evaluate(&x).unwrap().is_zero());
            assert_eq!(c.contains(&x), on_quadrics);
        }
    }
}
