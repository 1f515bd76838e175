//! Points and lines of the projective plane with canonical coordinates.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::algebra::{Eisenstein, MPoly, Var};
use crate::error::{Error, Result};

fn normalize(c: [Eisenstein; 3]) -> Result<[Eisenstein; 3]> {
    let lead = c.iter().find(|x| !x.is_zero()).ok_or_else(|| Error::Invalid("zero vector".into()))?;
    if lead.is_one() {
        return Ok(c);
    }
    let inv = lead.inv()?;
    Ok(std::array::from_fn(|i| &c[i] * &inv))
}

fn cross(a: &[Eisenstein; 3], b: &[Eisenstein; 3]) -> [Eisenstein; 3] {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

fn dot(a: &[Eisenstein; 3], b: &[Eisenstein; 3]) -> Eisenstein {
    (0..3).fold(Eisenstein::zero(), |acc, i| &acc + &(&a[i] * &b[i]))
}

/// A point `(y1 : y2 : y3)`, scaled so the first nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint([Eisenstein; 3]);

impl ProjPoint {
    pub fn new(c: [Eisenstein; 3]) -> Result<ProjPoint> {
        Ok(ProjPoint(normalize(c)?))
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> ProjPoint {
        ProjPoint::new([Eisenstein::int(a), Eisenstein::int(b), Eisenstein::int(c)]).expect("nonzero point")
    }

    pub fn coords(&self) -> &[Eisenstein; 3] {
        &self.0
    }

    /// Does the homogeneous form vanish here?
    pub fn lies_on(&self, form: &MPoly) -> bool {
        form.eval_y(&self.0).map(|v| v.is_zero()).unwrap_or(false)
    }

    /// Index of a coordinate that may be set to 1 (the last nonzero one).
    pub fn chart(&self) -> usize {
        (0..3).rev().find(|&i| !self.0[i].is_zero()).expect("nonzero point")
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {} : {})", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|c| c.to_string()))
    }
}

/// A line `u1·y1 + u2·y2 + u3·y3 = 0`, coefficients normalized like points.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjLine([Eisenstein; 3]);

impl ProjLine {
    pub fn new(c: [Eisenstein; 3]) -> Result<ProjLine> {
        Ok(ProjLine(normalize(c)?))
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> ProjLine {
        ProjLine::new([Eisenstein::int(a), Eisenstein::int(b), Eisenstein::int(c)]).expect("nonzero line")
    }

    /// Reads a nonzero linear form in `y1, y2, y3`.
    pub fn from_form(p: &MPoly) -> Result<ProjLine> {
        if p.homogeneous_degree()? != 1 || p.support().iter().any(|v| !Var::Y.contains(v)) {
            return Err(Error::Invalid(format!("not a line: {p}")));
        }
        let c = std::array::from_fn(|i| p.coeff(&crate::algebra::Monomial::var(Var::Y[i], 1)));
        ProjLine::new(c)
    }

    pub fn coeffs(&self) -> &[Eisenstein; 3] {
        &self.0
    }

    pub fn form(&self) -> MPoly {
        MPoly::linear(&self.0, &Var::Y)
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        dot(&self.0, p.coords()).is_zero()
    }

    pub fn through(p: &ProjPoint, q: &ProjPoint) -> Result<ProjLine> {
        ProjLine::new(cross(p.coords(), q.coords())).map_err(|_| Error::Invalid("coincident points".into()))
    }

    pub fn meet(&self, o: &ProjLine) -> Result<ProjPoint> {
        ProjPoint::new(cross(&self.0, &o.0)).map_err(|_| Error::Invalid("coincident lines".into()))
    }

    /// The line's coefficient vector as a point of the dual plane.
    pub fn as_dual_point(&self) -> ProjPoint {
        ProjPoint(self.0.clone())
    }
}

impl fmt::Display for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.form())
    }
}

impl fmt::Debug for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} = 0]", self.form())
    }
}

impl Serialize for ProjLine {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.form().to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_is_canonical() {
        let z = Eisenstein::zeta();
        let p = ProjPoint::new([Eisenstein::zero(), z.clone(), &z * &Eisenstein::int(3)]).unwrap();
        assert_eq!(p, ProjPoint::from_ints(0, 1, 3));
        assert!(ProjPoint::new([Eisenstein::zero(), Eisenstein::zero(), Eisenstein::zero()]).is_err());
    }

    #[test]
    fn join_and_meet() {
        let l = ProjLine::through(&ProjPoint::from_ints(1, 0, 0), &ProjPoint::from_ints(0, 1, 0)).unwrap();
        assert_eq!(l, ProjLine::from_ints(0, 0, 1));
        let m = ProjLine::from_ints(1, -1, 0);
        assert_eq!(l.meet(&m).unwrap(), ProjPoint::from_ints(1, 1, 0));
        assert!(l.contains(&ProjPoint::from_ints(3, 5, 0)));
    }
}
