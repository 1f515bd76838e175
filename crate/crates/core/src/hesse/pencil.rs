//! Members `λ0·Σ yj³ + 6λ1·y1y2y3` of the Hesse pencil and their Hessians.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::algebra::parse::parse_scalar;
use crate::algebra::resultant::bareiss_det;
use crate::algebra::{ys, Eisenstein, MPoly, Var};
use crate::curvelab::PlaneCurve;
use crate::error::{Error, Result};

/// `(λ0 : λ1)`, normalized to `(1 : λ)` or `(0 : 1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PencilParam {
    l0: Eisenstein,
    l1: Eisenstein,
}

/// Where a parameter sits relative to the special members.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ParamClass {
    /// `λ = ∞` or `(2λ)³ = −1`: a triangle.
    Singular,
    /// `λ = 0` or `λ³ = 1`: isomorphic to the Fermat cubic.
    Equianharmonic,
    /// `λ³ = −1`: smooth and not equianharmonic, yet listed among the
    /// excluded values of the 36-point statement.
    ListedNonEquianharmonic,
    General,
}

impl PencilParam {
    pub fn new(l0: Eisenstein, l1: Eisenstein) -> Result<PencilParam> {
        if l0.is_zero() && l1.is_zero() {
            return Err(Error::InvalidLambda("(0 : 0)".into()));
        }
        if l0.is_zero() {
            return Ok(PencilParam::infinity());
        }
        let l1 = &l1 / &l0;
        Ok(PencilParam { l0: Eisenstein::one(), l1 })
    }

    pub fn finite(lambda: Eisenstein) -> PencilParam {
        PencilParam { l0: Eisenstein::one(), l1: lambda }
    }

    pub fn int(n: i64) -> PencilParam {
        PencilParam::finite(Eisenstein::int(n))
    }

    pub fn infinity() -> PencilParam {
        PencilParam { l0: Eisenstein::zero(), l1: Eisenstein::one() }
    }

    /// Accepts `inf` or any scalar literal such as `2`, `-1/2`, `-w^2`.
    pub fn parse(s: &str) -> Result<PencilParam> {
        let t = s.trim();
        if t == "inf" || t == "∞" {
            return Ok(PencilParam::infinity());
        }
        parse_scalar(t).map(PencilParam::finite).map_err(|e| Error::InvalidLambda(format!("{s}: {e}")))
    }

    pub fn l0(&self) -> &Eisenstein {
        &self.l0
    }

    pub fn l1(&self) -> &Eisenstein {
        &self.l1
    }

    pub fn lambda(&self) -> Option<&Eisenstein> {
        (!self.l0.is_zero()).then_some(&self.l1)
    }

    pub fn classify(&self) -> ParamClass {
        let Some(l) = self.lambda() else { return ParamClass::Singular };
        let cube = l.pow(3);
        if (&cube * &Eisenstein::int(8) + Eisenstein::one()).is_zero() {
            ParamClass::Singular
        } else if l.is_zero() || cube.is_one() {
            ParamClass::Equianharmonic
        } else if (&cube + &Eisenstein::one()).is_zero() {
            ParamClass::ListedNonEquianharmonic
        } else {
            ParamClass::General
        }
    }

    pub fn is_singular(&self) -> bool {
        self.classify() == ParamClass::Singular
    }

    pub fn is_equianharmonic(&self) -> bool {
        self.classify() == ParamClass::Equianharmonic
    }

    /// The parameter of the Hessian: `ν = −(1 + 2λ³)/(6λ²)`, i.e.
    /// `(ν0 : ν1) = (6λ0λ1² : −(λ0³ + 2λ1³))`.
    pub fn nu(&self) -> PencilParam {
        let (a, b) = nu_pair(&self.l0, &self.l1);
        PencilParam::new(a, b).expect("ν is defined everywhere")
    }
}

fn nu_pair(l0: &Eisenstein, l1: &Eisenstein) -> (Eisenstein, Eisenstein) {
    let n0 = &(&Eisenstein::int(6) * l0) * &(l1 * l1);
    let n1 = -(&l0.pow(3) + &(&Eisenstein::int(2) * &l1.pow(3)));
    (n0, n1)
}

impl fmt::Display for PencilParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.lambda() {
            Some(l) => write!(f, "{l}"),
            None => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for PencilParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "λ={self}")
    }
}

impl Serialize for PencilParam {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn pencil_form(l0: &MPoly, l1: &MPoly) -> MPoly {
    let [y1, y2, y3] = ys();
    let fermat = &(&y1.pow(3) + &y2.pow(3)) + &y3.pow(3);
    let xyz = &(&y1 * &y2) * &y3;
    &(l0 * &fermat) + &(&(l1 * &xyz) * &MPoly::int(6))
}

/// `E_λ = λ0·Σ yj³ + 6λ1·y1y2y3`.
pub fn hesse_cubic(p: &PencilParam) -> PlaneCurve {
    PlaneCurve::new(pencil_form(&MPoly::constant(p.l0.clone()), &MPoly::constant(p.l1.clone())))
        .expect("nonzero cubic")
}

/// The pencil with `λ0, λ1` kept as the variables `l0, l1`.
pub fn hesse_cubic_generic() -> MPoly {
    pencil_form(&MPoly::var(Var::L0), &MPoly::var(Var::L1))
}

/// The member with parameter `(ν0 : ν1)` given as polynomials.
pub fn hesse_member(n0: &MPoly, n1: &MPoly) -> MPoly {
    pencil_form(n0, n1)
}

/// `det(∂²F/∂yi∂yj)`; other variables are treated as constants.
pub fn hessian_form(f: &MPoly) -> MPoly {
    let rows: Vec<Vec<MPoly>> = Var::Y
        .iter()
        .map(|a| Var::Y.iter().map(|b| f.differentiate(*a).differentiate(*b)).collect())
        .collect();
    bareiss_det(rows).expect("exact determinant")
}

pub fn hessian_curve(f: &PlaneCurve) -> Result<PlaneCurve> {
    PlaneCurve::new(hessian_form(f.form()))
}

/// `ν` as polynomials in `l0, l1`.
pub fn nu_generic() -> (MPoly, MPoly) {
    let (l0, l1) = (MPoly::var(Var::L0), MPoly::var(Var::L1));
    let n0 = &(&l0 * &l1.pow(2)) * &MPoly::int(6);
    let n1 = -(&l0.pow(3) + &(&l1.pow(3) * &MPoly::int(2)));
    (n0, n1)
}

/// The scalar `c` with `Hessian(E_λ) = c·E_ν(λ)` as an identity in
/// `(λ0, λ1)`, if it exists.
pub fn hessian_identity_scalar() -> Option<Eisenstein> {
    let (n0, n1) = nu_generic();
    hessian_form(&hesse_cubic_generic()).proportional_to(&hesse_member(&n0, &n1))
}
