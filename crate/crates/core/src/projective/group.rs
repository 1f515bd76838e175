//! Projectivities and the finite groups G ⊂ Ĝ acting on the plane.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use super::point::{ProjLine, ProjPoint};
use crate::algebra::linear::{linear_change, Mat3};
use crate::algebra::{Eisenstein, MPoly};
use crate::error::{Error, Result};

/// An element of PGL₃ acting on points by `p ↦ M·p`. The matrix is scaled
/// so its first nonzero entry is 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjMap(Mat3);

impl ProjMap {
    pub fn new(m: Mat3) -> Result<ProjMap> {
        if m.det() == Eisenstein::int(0) {
            return Err(Error::SingularMatrix);
        }
        Ok(ProjMap(m.normalized()))
    }

    pub fn identity() -> ProjMap {
        ProjMap(Mat3::identity())
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.0
    }

    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        ProjPoint::new(self.0.apply(p.coords())).expect("invertible map")
    }

    /// Image of a line: the line whose points are images of its points.
    pub fn apply_line(&self, l: &ProjLine) -> ProjLine {
        let inv_t = self.0.inverse().expect("invertible map").transpose();
        ProjLine::new(inv_t.apply(l.coeffs())).expect("invertible map")
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &ProjMap) -> ProjMap {
        ProjMap(self.0.mul(&other.0).normalized())
    }

    pub fn inverse(&self) -> ProjMap {
        ProjMap(self.0.inverse().expect("invertible map").normalized())
    }

    pub fn is_identity(&self) -> bool {
        self.0 == Mat3::identity()
    }

    /// Pullback `F ∘ M` of a form.
    pub fn pullback(&self, form: &MPoly) -> MPoly {
        linear_change(form, &self.0).expect("invertible map")
    }
}

impl fmt::Debug for ProjMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .0
             .0
            .iter()
            .map(|r| format!("[{}, {}, {}]", r[0], r[1], r[2]))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl Serialize for ProjMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self.0 .0.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect();
        rows.serialize(s)
    }
}

/// A finite group of projectivities stored as an explicit sorted list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    elements: Vec<ProjMap>,
    generators: Vec<(String, ProjMap)>,
}

impl FiniteGroup {
    /// Closure of the generators under composition. Panics if the closure
    /// exceeds `limit` elements.
    pub fn generate(generators: Vec<(String, ProjMap)>, limit: usize) -> FiniteGroup {
        let mut set: BTreeSet<ProjMap> = BTreeSet::from([ProjMap::identity()]);
        let mut frontier = vec![ProjMap::identity()];
        while let Some(x) = frontier.pop() {
            for (_, g) in &generators {
                let y = g.compose(&x);
                if set.insert(y.clone()) {
                    assert!(set.len() <= limit, "group larger than {limit}");
                    frontier.push(y);
                }
            }
        }
        let grp = FiniteGroup { elements: set.into_iter().collect(), generators };
        grp.verify().expect("generated set is a group");
        grp
    }

    fn from_elements(elements: Vec<ProjMap>) -> FiniteGroup {
        FiniteGroup { elements, generators: vec![] }
    }

    /// Checks identity, inverses and closure.
    pub fn verify(&self) -> Result<()> {
        let has = |m: &ProjMap| self.elements.binary_search(m).is_ok();
        if !has(&ProjMap::identity()) {
            return Err(Error::Invalid("missing identity".into()));
        }
        for a in &self.elements {
            if !has(&a.inverse()) {
                return Err(Error::Invalid("missing inverse".into()));
            }
            for b in &self.elements {
                if !has(&a.compose(b)) {
                    return Err(Error::Invalid("not closed".into()));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[ProjMap] {
        &self.elements
    }

    pub fn generators(&self) -> &[(String, ProjMap)] {
        &self.generators
    }

    pub fn contains(&self, m: &ProjMap) -> bool {
        self.elements.binary_search(m).is_ok()
    }

    pub fn is_subgroup_of(&self, o: &FiniteGroup) -> bool {
        self.elements.iter().all(|m| o.contains(m))
    }
}

/// `τ = diag(1, ζ, ζ²)`.
pub fn tau() -> ProjMap {
    ProjMap::new(Mat3::diag([Eisenstein::int(1), Eisenstein::zeta(), Eisenstein::zeta_pow(2)])).unwrap()
}

/// The cyclic shift `(y1, y2, y3) ↦ (y2, y3, y1)`.
pub fn shift() -> ProjMap {
    ProjMap::new(Mat3::from_ints([[0, 1, 0], [0, 0, 1], [1, 0, 0]])).unwrap()
}

/// `σ`: swap `y1` and `y2`.
pub fn sigma() -> ProjMap {
    ProjMap::new(Mat3::permutation([1, 0, 2])).unwrap()
}

/// `(G, Ĝ)` with `|G| = 9` and `|Ĝ| = 18`.
pub fn build_groups() -> (FiniteGroup, FiniteGroup) {
    let g = FiniteGroup::generate(vec![("tau".into(), tau()), ("shift".into(), shift())], 9);
    let gh = FiniteGroup::generate(
        vec![("tau".into(), tau()), ("shift".into(), shift()), ("sigma".into(), sigma())],
        18,
    );
    (g, gh)
}

pub fn orbit(p: &ProjPoint, grp: &FiniteGroup) -> Vec<ProjPoint> {
    let set: BTreeSet<ProjPoint> = grp.elements.iter().map(|m| m.apply(p)).collect();
    set.into_iter().collect()
}

pub fn stabilizer(p: &ProjPoint, grp: &FiniteGroup) -> FiniteGroup {
    FiniteGroup::from_elements(grp.elements.iter().filter(|m| m.apply(p) == *p).cloned().collect())
}

/// Is `curve ∘ m` a scalar multiple of `curve`?
pub fn is_invariant(curve: &MPoly, m: &ProjMap) -> bool {
    m.pullback(curve).proportional_to(curve).is_some()
}

/// The nine lines `y_{j+1} = ζ^i·y_j`, ordered by `(j, i)`.
pub fn nine_lines() -> Vec<ProjLine> {
    let mut out = Vec::with_capacity(9);
    for j in 0..3 {
        for i in 0..3 {
            let mut c = [Eisenstein::int(0), Eisenstein::int(0), Eisenstein::int(0)];
            c[(j + 1) % 3] = Eisenstein::int(1);
            c[j] = -Eisenstein::zeta_pow(i);
            out.push(ProjLine::new(c).unwrap());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        let (g, gh) = build_groups();
        assert_eq!(g.order(), 9);
        assert_eq!(gh.order(), 18);
        assert!(g.is_subgroup_of(&gh));
    }

    #[test]
    fn sigma_inverts_shift() {
        let s = sigma();
        assert_eq!(s.compose(&shift()).compose(&s), shift().inverse());
    }

    #[test]
    fn orbit_stabilizer_of_flexpoint() {
        let (g, gh) = build_groups();
        let p = ProjPoint::from_ints(1, -1, 0);
        assert_eq!(orbit(&p, &g).len(), 9);
        let st = stabilizer(&p, &gh);
        assert_eq!(st.order(), 2);
        assert!(st.contains(&sigma()));
        assert_eq!(orbit(&ProjPoint::from_ints(1, 0, 0), &gh).len(), 3);
        assert_eq!(stabilizer(&ProjPoint::from_ints(1, 0, 0), &gh).order(), 6);
    }

    #[test]
    fn lines_are_permuted() {
        let (_, gh) = build_groups();
        let lines: BTreeSet<ProjLine> = nine_lines().into_iter().collect();
        assert_eq!(lines.len(), 9);
        for m in gh.elements() {
            let img: BTreeSet<ProjLine> = lines.iter().map(|l| m.apply_line(l)).collect();
            assert_eq!(img, lines);
        }
    }
}
