use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{clear_denominators, is_negative, primitive_part, Rational, RationalMatrix};
use crate::Error;

/// A point of projective space given by one representative coordinate vector.
///
/// Equality is projective (proportionality), tested by cross-multiplication.
#[derive(Clone)]
pub struct ProjectivePoint {
    coords: Vec<Rational>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self, Error> {
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::ZeroPoint);
        }
        Ok(Self { coords })
    }

    pub fn from_i64(coords: &[i64]) -> Result<Self, Error> {
        Self::new(coords.iter().map(|&c| super::rat(c)).collect())
    }

    /// The coordinate point with a 1 in position `index`.
    pub fn coordinate(len: usize, index: usize) -> Self {
        let mut coords = vec![Rational::zero(); len];
        coords[index] = Rational::one();
        Self { coords }
    }

    /// `[1 : 1 : ... : 1]`.
    pub fn unit(len: usize) -> Self {
        Self {
            coords: vec![Rational::one(); len],
        }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    /// Number of homogeneous coordinates (projective dimension + 1).
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    /// Rank-1 test on the 2-row matrix `[p; q]` via 2x2 minors.
    pub fn projective_equal(&self, other: &Self) -> Result<bool, Error> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(proportional(&self.coords, &other.coords))
    }

    /// Integer representative with coprime entries and positive leading entry.
    pub fn canonical(&self) -> Vec<BigInt> {
        let mut v = clear_denominators(&self.coords);
        primitive_part(&mut v);
        if let Some(first) = v.iter().find(|c| !c.is_zero()) {
            if is_negative(first) {
                for c in v.iter_mut() {
                    *c = -&*c;
                }
            }
        }
        v
    }

    pub fn scaled(&self, factor: &Rational) -> Result<Self, Error> {
        Self::new(self.coords.iter().map(|c| c * factor).collect())
    }

    pub fn transform(&self, m: &RationalMatrix) -> Result<Self, Error> {
        Self::new(m.mul_vec(&self.coords)?)
    }
}

/// Cross-multiplication test: every 2x2 minor `a_i b_j - a_j b_i` vanishes.
/// Two zero vectors are not considered proportional to anything nonzero.
pub(crate) fn proportional(a: &[Rational], b: &[Rational]) -> bool {
    let Some(k) = a.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    if b[k].is_zero() {
        return false;
    }
    (0..a.len()).all(|j| &a[k] * &b[j] == &a[j] * &b[k])
}

impl PartialEq for ProjectivePoint {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && proportional(&self.coords, &other.coords)
    }
}

impl Eq for ProjectivePoint {}

impl std::hash::Hash for ProjectivePoint {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.canonical().hash(state);
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(":"))
    }
}

/// Checks that every `d+1` of the `d+2` frame points are independent and
/// returns the columns rescaled so that they sum to the last point.
fn normalized_frame(frame: &[ProjectivePoint], which: &'static str) -> Result<RationalMatrix, Error> {
    let len = frame[0].len();
    if frame.len() != len + 1 {
        return Err(Error::DimensionMismatch {
            expected: len + 1,
            found: frame.len(),
        });
    }
    for p in frame {
        if p.len() != len {
            return Err(Error::DimensionMismatch {
                expected: len,
                found: p.len(),
            });
        }
    }
    for skip in 0..frame.len() {
        let cols: Vec<Vec<Rational>> = frame
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, p)| p.coords.clone())
            .collect();
        let m = RationalMatrix::from_columns(len, &cols)?;
        if m.rank() < len {
            let subset: Vec<usize> = (0..frame.len()).filter(|&i| i != skip).collect();
            return Err(Error::DegenerateFrame {
                frame: which,
                dependent_subset: subset,
            });
        }
    }
    let cols: Vec<Vec<Rational>> = frame[..len].iter().map(|p| p.coords.clone()).collect();
    let a = RationalMatrix::from_columns(len, &cols)?;
    let inv = a.inverse().expect("independent columns");
    let lambda = inv.mul_vec(&frame[len].coords)?;
    let scaled: Vec<Vec<Rational>> = cols
        .iter()
        .zip(&lambda)
        .map(|(c, l)| c.iter().map(|x| x * l).collect())
        .collect();
    RationalMatrix::from_columns(len, &scaled)
}

/// The projectivity sending `source[i]` to `target[i]` for all `d+2` frame
/// points; unique up to scale.
pub fn projectivity_from_frames(
    source: &[ProjectivePoint],
    target: &[ProjectivePoint],
) -> Result<RationalMatrix, Error> {
    if source.is_empty() || target.is_empty() {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: 0,
        });
    }
    if source[0].len() != target[0].len() {
        return Err(Error::DimensionMismatch {
            expected: source[0].len(),
            found: target[0].len(),
        });
    }
    let s = normalized_frame(source, "source")?;
    let t = normalized_frame(target, "target")?;
    t.mul(&s.inverse().expect("frame matrix is invertible"))
}
