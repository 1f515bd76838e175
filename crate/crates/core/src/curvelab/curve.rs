use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::algebra::{MPoly, Var};
use crate::error::{Error, Result};

/// A plane curve given by a homogeneous form in `y1, y2, y3`, optionally
/// remembering a factorization into components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneCurve {
    form: MPoly,
    degree: u32,
    components: Option<Vec<(PlaneCurve, u32)>>,
}

impl PlaneCurve {
    pub fn new(form: MPoly) -> Result<PlaneCurve> {
        if form.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let degree = form.homogeneous_degree()?;
        if let Some(v) = form.support().into_iter().find(|v| !Var::Y.contains(v)) {
            return Err(Error::Invalid(format!("curve form involves {v}")));
        }
        Ok(PlaneCurve { form, degree, components: None })
    }

    /// Product of components with multiplicities.
    pub fn from_components(parts: Vec<(PlaneCurve, u32)>) -> Result<PlaneCurve> {
        if parts.is_empty() || parts.iter().any(|(_, m)| *m == 0) {
            return Err(Error::Invalid("empty component list".into()));
        }
        let form = parts.iter().fold(MPoly::one(), |acc, (c, m)| &acc * &c.form.pow(*m));
        let mut out = PlaneCurve::new(form)?;
        out.components = Some(parts);
        Ok(out)
    }

    pub fn form(&self) -> &MPoly {
        &self.form
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn components(&self) -> Option<&[(PlaneCurve, u32)]> {
        self.components.as_deref()
    }

    /// The reduced curve (each component once), when components are known.
    pub fn reduced(&self) -> Option<PlaneCurve> {
        let parts = self.components.as_ref()?;
        PlaneCurve::from_components(parts.iter().map(|(c, _)| (c.clone(), 1)).collect()).ok()
    }

    pub fn partials(&self) -> [MPoly; 3] {
        Var::Y.map(|v| self.form.differentiate(v))
    }
}

impl Serialize for PlaneCurve {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("PlaneCurve", 3)?;
        st.serialize_field("form", &self.form.to_string())?;
        st.serialize_field("degree", &self.degree)?;
        let comps: Option<Vec<(String, u32)>> = self
            .components
            .as_ref()
            .map(|cs| cs.iter().map(|(c, m)| (c.form.to_string(), *m)).collect());
        st.serialize_field("components", &comps)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    #[test]
    fn components_multiply_out() {
        let e = PlaneCurve::new(parse_poly("y1^3 + y2^3 + y3^3").unwrap()).unwrap();
        let l = PlaneCurve::new(parse_poly("y1 + y2").unwrap()).unwrap();
        let w = PlaneCurve::from_components(vec![(e.clone(), 3), (l.clone(), 1)]).unwrap();
        assert_eq!(w.degree(), 10);
        assert_eq!(w.reduced().unwrap().degree(), 4);
        assert!(PlaneCurve::new(parse_poly("y1^2 + y2").unwrap()).is_err());
        assert!(PlaneCurve::new(parse_poly("y1 + a*y2").unwrap()).is_err());
    }
}
