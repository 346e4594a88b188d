//! The standard Cremona involution, linear projections from frame points and
//! the system of degree-`(n-1)` forms on `P^{2n-3}` with multiplicity `n-2`
//! at the standard frame.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::exactnum::{ProjectivePoint, Rational};
use crate::forms::{linear_system_basis, LinearSystem};
use crate::memo::Memo;
use crate::Error;

/// `x_i -> prod_{j != i} x_j`, which is `[1/x_0 : ... : 1/x_d]` wherever
/// every coordinate is nonzero.
pub fn cremona_inv(x: &ProjectivePoint) -> Result<ProjectivePoint, Error> {
    let c = x.coords();
    let zeros: Vec<usize> = (0..c.len()).filter(|&i| c[i].is_zero()).collect();
    let image: Vec<Rational> = match zeros.as_slice() {
        [] => c.iter().map(|v| v.recip()).collect(),
        [k] => (0..c.len())
            .map(|i| if i == *k { Rational::one() } else { Rational::zero() })
            .collect(),
        _ => {
            return Err(Error::IndeterminacyPoint(format!(
                "{x} has zero coordinates {zeros:?}"
            )))
        }
    };
    ProjectivePoint::new(image)
        .map_err(|_| Error::IndeterminacyPoint(format!("{x} has no cleared image")))
}

/// Projection `P^d -> P^{d-1}` from the unit point:
/// `x -> (x_0 - x_d, ..., x_{d-1} - x_d)`.
pub fn project_from_unit(x: &ProjectivePoint) -> Result<ProjectivePoint, Error> {
    let c = x.coords();
    let last = &c[c.len() - 1];
    ProjectivePoint::new(c[..c.len() - 1].iter().map(|v| v - last).collect())
        .map_err(|_| Error::CenterPoint(format!("{x} is the unit point")))
}

/// Projection from the `k`-th point of the standard frame of `P^d`: a
/// coordinate point for `k <= d`, the unit point for `k = d + 1`.
pub fn project_from_frame_point(x: &ProjectivePoint, k: usize) -> Result<ProjectivePoint, Error> {
    let len = x.len();
    if k == len {
        return project_from_unit(x);
    }
    if k > len {
        return Err(Error::IndexOutOfRange {
            index: k,
            num_vars: len + 1,
        });
    }
    let kept = x
        .coords()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != k)
        .map(|(_, v)| v.clone())
        .collect();
    ProjectivePoint::new(kept).map_err(|_| Error::CenterPoint(format!("{x} is e_{k}")))
}

#[derive(Clone, Debug)]
pub struct XiSystem {
    pub n: usize,
    pub system: LinearSystem,
}

impl XiSystem {
    pub fn dimension(&self) -> usize {
        self.system.dimension()
    }
}

/// The standard frame of `P^d`: coordinate points, then the unit point.
pub fn standard_frame(len: usize) -> Vec<ProjectivePoint> {
    let mut frame: Vec<_> = (0..len).map(|i| ProjectivePoint::coordinate(len, i)).collect();
    frame.push(ProjectivePoint::unit(len));
    frame
}

static XI: Memo<usize, XiSystem> = Memo::new();

/// Degree `n-1` forms on `P^{2n-3}` with multiplicity `n-2` at the
/// standard frame. For `n = 2` no condition is imposed.
pub fn xi_basis(n: usize) -> Result<Arc<XiSystem>, Error> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n must be at least 2, got {n}")));
    }
    XI.get_or_try_insert(n, || {
        let constraints: Vec<_> = if n == 2 {
            Vec::new()
        } else {
            standard_frame(2 * n - 2).into_iter().map(|p| (p, n - 2)).collect()
        };
        Ok(XiSystem {
            n,
            system: linear_system_basis(2 * n - 3, n - 1, &constraints)?,
        })
    })
}

pub fn phi_xi(n: usize, y: &ProjectivePoint) -> Result<ProjectivePoint, Error> {
    if y.len() != 2 * n - 2 {
        return Err(Error::DimensionMismatch {
            expected: 2 * n - 2,
            found: y.len(),
        });
    }
    let values = xi_basis(n)?.system.evaluate(y)?;
    ProjectivePoint::new(values)
        .map_err(|_| Error::BaseLocusPoint(format!("every basis form vanishes at {y}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::RationalMatrix;
    use crate::omega::{catalan, omega_basis, BaseW};
    use crate::sampling::Sampler;
    use crate::veronese::rnc_through;

    fn pt(c: &[i64]) -> ProjectivePoint {
        ProjectivePoint::from_i64(c).unwrap()
    }

    #[test]
    fn cremona_examples() {
        assert_eq!(cremona_inv(&pt(&[1, 2, 3])).unwrap(), pt(&[6, 3, 2]));
        assert_eq!(cremona_inv(&pt(&[1, 1, 1, 1])).unwrap(), pt(&[1, 1, 1, 1]));
        assert_eq!(cremona_inv(&cremona_inv(&pt(&[1, 2, 3])).unwrap()).unwrap(), pt(&[1, 2, 3]));
        assert_eq!(cremona_inv(&pt(&[0, 2, 3])).unwrap(), pt(&[1, 0, 0]));
        assert!(matches!(cremona_inv(&pt(&[0, 0, 3])), Err(Error::IndeterminacyPoint(_))));
    }

    #[test]
    fn cleared_form_agrees_with_products() {
        let mut s = Sampler::new(4);
        for len in 2..=6 {
            for _ in 0..10 {
                let mut x = s.point(len);
                if s.index(3) == 0 {
                    let mut c = x.clone().into_coords();
                    c[s.index(len)] = Rational::zero();
                    match ProjectivePoint::new(c) {
                        Ok(p) => x = p,
                        Err(_) => continue,
                    }
                }
                let c = x.coords();
                let cleared: Vec<Rational> = (0..len)
                    .map(|i| (0..len).filter(|&j| j != i).map(|j| c[j].clone()).product())
                    .collect();
                match ProjectivePoint::new(cleared) {
                    Ok(p) => assert_eq!(cremona_inv(&x).unwrap(), p),
                    Err(_) => assert!(cremona_inv(&x).is_err()),
                }
            }
        }
    }

    #[test]
    fn projection_examples() {
        assert_eq!(project_from_unit(&pt(&[1, 2, 3])).unwrap(), pt(&[2, 1]));
        assert_eq!(project_from_unit(&pt(&[1, 1, 2])).unwrap(), pt(&[1, 1]));
        assert!(matches!(project_from_unit(&pt(&[2, 2, 2])), Err(Error::CenterPoint(_))));
        assert_eq!(project_from_frame_point(&pt(&[1, 2, 3]), 1).unwrap(), pt(&[1, 3]));
        assert!(project_from_frame_point(&pt(&[0, 2, 0]), 1).is_err());
        assert_eq!(project_from_frame_point(&pt(&[1, 2, 3]), 3).unwrap(), pt(&[2, 1]));
    }

    #[test]
    fn xi_examples() {
        let two = xi_basis(2).unwrap();
        assert_eq!(two.dimension(), 2);
        assert_eq!(phi_xi(2, &pt(&[3, 7])).unwrap(), pt(&[3, 7]));
        assert_eq!(xi_basis(3).unwrap().dimension(), 5);
        assert_eq!(xi_basis(4).unwrap().dimension(), 14);
        for n in 2..=5usize {
            let d = xi_basis(n).unwrap().dimension();
            assert_eq!(d, omega_basis(n).unwrap().dimension());
            assert_eq!(d as u128, catalan(n as u64));
        }
        for p in standard_frame(4) {
            assert!(matches!(phi_xi(3, &p), Err(Error::BaseLocusPoint(_))));
        }
        let mut s = Sampler::new(9);
        let y = s.distinct_coordinate_point(4).unwrap();
        let y2 = s.until(|s| s.distinct_coordinate_point(4).unwrap(), |v| v != &y).unwrap();
        assert_ne!(phi_xi(3, &y).unwrap(), phi_xi(3, &y2).unwrap());
    }

    #[test]
    fn involution_on_the_torus() {
        let mut s = Sampler::new(17);
        for len in 2..=7 {
            let x = s.until(|s| s.point(len), |p| p.coords().iter().all(|v| !v.is_zero())).unwrap();
            assert_eq!(cremona_inv(&cremona_inv(&x).unwrap()).unwrap(), x);
        }
    }

    #[test]
    fn lines_through_unit_become_normal_curves() {
        let mut s = Sampler::new(23);
        for d in [2usize, 4, 6] {
            let len = d + 1;
            let u = ProjectivePoint::unit(len);
            let v = s.distinct_coordinate_point(len).unwrap();
            let on_line = |s: &mut Sampler| {
                let l = s.rational();
                let c: Vec<Rational> = v.coords().iter().map(|x| x * &l + Rational::one()).collect();
                ProjectivePoint::new(c).ok().and_then(|p| cremona_inv(&p).ok())
            };
            let first = s.until(|s| on_line(s), |p| p.is_some()).unwrap().unwrap();
            let mut pts = standard_frame(len);
            pts.push(first);
            let curve = rnc_through(&pts).unwrap();
            for _ in 0..6 {
                let y = s.until(|s| on_line(s), |p| p.is_some()).unwrap().unwrap();
                assert!(curve.contains(&y), "d={d}");
            }
            assert!(curve.contains(&u));
        }
    }

    #[test]
    fn curves_through_w_become_lines_through_unit() {
        let mut s = Sampler::new(29);
        for n in 2..=4 {
            let len = 2 * n - 1;
            let x = s.distinct_coordinate_point(len).unwrap();
            let mut w = BaseW::new(n).points;
            w.push(x.clone());
            let curve = rnc_through(&w).unwrap();
            let target = project_from_unit(&cremona_inv(&x).unwrap()).unwrap();
            let mut rows = vec![ProjectivePoint::unit(len).into_coords(), cremona_inv(&x).unwrap().into_coords()];
            for _ in 0..8 {
                let y = s
                    .until(|s| curve.curve_eval(&s.point(2)).unwrap(), |y| {
                        y.coords().iter().all(|v| !v.is_zero()) && *y != ProjectivePoint::unit(len)
                    })
                    .unwrap();
                let image = cremona_inv(&y).unwrap();
                assert_eq!(project_from_unit(&image).unwrap(), target);
                rows.push(image.into_coords());
            }
            assert_eq!(RationalMatrix::from_rows(len, rows).unwrap().rank(), 2);
        }
    }
}
