//! 3×3 matrices over ℚ(ζ) and linear changes of the `y` coordinates.

use num_traits::{One, Zero};

use super::eisenstein::Eisenstein;
use super::mpoly::MPoly;
use super::var::Var;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Mat3(pub [[Eisenstein; 3]; 3]);

impl Mat3 {
    pub fn identity() -> Mat3 {
        Mat3::from_fn(|i, j| if i == j { Eisenstein::one() } else { Eisenstein::zero() })
    }

    pub fn from_fn(f: impl Fn(usize, usize) -> Eisenstein) -> Mat3 {
        Mat3(std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))))
    }

    pub fn diag(d: [Eisenstein; 3]) -> Mat3 {
        Mat3::from_fn(|i, j| if i == j { d[i].clone() } else { Eisenstein::zero() })
    }

    /// Permutation matrix sending basis vector `e_j` to `e_{perm[j]}`.
    pub fn permutation(perm: [usize; 3]) -> Mat3 {
        Mat3::from_fn(|i, j| if perm[j] == i { Eisenstein::one() } else { Eisenstein::zero() })
    }

    pub fn from_ints(m: [[i64; 3]; 3]) -> Mat3 {
        Mat3::from_fn(|i, j| Eisenstein::int(m[i][j]))
    }

    pub fn get(&self, i: usize, j: usize) -> &Eisenstein {
        &self.0[i][j]
    }

    pub fn mul(&self, o: &Mat3) -> Mat3 {
        Mat3::from_fn(|i, j| {
            (0..3).fold(Eisenstein::zero(), |acc, k| &acc + &(&self.0[i][k] * &o.0[k][j]))
        })
    }

    pub fn apply(&self, v: &[Eisenstein; 3]) -> [Eisenstein; 3] {
        std::array::from_fn(|i| (0..3).fold(Eisenstein::zero(), |acc, k| &acc + &(&self.0[i][k] * &v[k])))
    }

    pub fn transpose(&self) -> Mat3 {
        Mat3::from_fn(|i, j| self.0[j][i].clone())
    }

    pub fn scale(&self, c: &Eisenstein) -> Mat3 {
        Mat3::from_fn(|i, j| &self.0[i][j] * c)
    }

    fn minor(&self, i: usize, j: usize) -> Eisenstein {
        let r: Vec<usize> = (0..3).filter(|&x| x != i).collect();
        let c: Vec<usize> = (0..3).filter(|&x| x != j).collect();
        &(&self.0[r[0]][c[0]] * &self.0[r[1]][c[1]]) - &(&self.0[r[0]][c[1]] * &self.0[r[1]][c[0]])
    }

    pub fn det(&self) -> Eisenstein {
        (0..3).fold(Eisenstein::zero(), |acc, j| {
            let t = &self.0[0][j] * &self.minor(0, j);
            if j % 2 == 0 {
                &acc + &t
            } else {
                &acc - &t
            }
        })
    }

    pub fn inverse(&self) -> Result<Mat3> {
        let d = self.det();
        if d.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let di = d.inv()?;
        Ok(Mat3::from_fn(|i, j| {
            let c = &self.minor(j, i) * &di;
            if (i + j) % 2 == 0 {
                c
            } else {
                -c
            }
        }))
    }

    /// Scales so that the first nonzero entry (row-major) is 1.
    pub fn normalized(&self) -> Mat3 {
        match self.0.iter().flatten().find(|x| !x.is_zero()) {
            None => self.clone(),
            Some(p) => self.scale(&p.inv().expect("nonzero")),
        }
    }
}

/// `p(M·y)`: the polynomial pulled back along the point map `y ↦ M·y`.
/// Variables other than `y1, y2, y3` are untouched.
pub fn linear_change(p: &MPoly, m: &Mat3) -> Result<MPoly> {
    if m.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    let subs: Vec<(Var, MPoly)> = (0..3)
        .map(|i| (Var::Y[i], MPoly::linear(&m.0[i], &Var::Y)))
        .collect();
    Ok(p.compose(&subs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_poly;

    #[test]
    fn inverse_roundtrip() {
        let m = Mat3::from_fn(|i, j| Eisenstein::from_ints((i * 3 + j) as i64, (i == j) as i64 + 1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat3::identity());
        assert!(Mat3::from_ints([[1, 2, 3], [2, 4, 6], [0, 0, 1]]).inverse().is_err());
    }

    #[test]
    fn change_identity_and_composition() {
        let p = parse_poly("y1^2*y2 + w*y2^2*y3 - 3*y3^2*y1").unwrap();
        assert_eq!(linear_change(&p, &Mat3::identity()).unwrap(), p);
        let m1 = Mat3::from_ints([[1, 1, 0], [0, 2, 1], [1, 0, 1]]);
        let m2 = Mat3::from_ints([[0, 1, 0], [1, 0, 3], [0, 0, 1]]);
        let lhs = linear_change(&linear_change(&p, &m1).unwrap(), &m2).unwrap();
        let rhs = linear_change(&p, &m1.mul(&m2)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn swap_exchanges_c_and_its_mirror() {
        let c = parse_poly("y1^2*y2 + y2^2*y3 + y3^2*y1").unwrap();
        let c2 = parse_poly("y1^2*y3 + y2^2*y1 + y3^2*y2").unwrap();
        let sigma = Mat3::permutation([1, 0, 2]);
        assert_eq!(linear_change(&c, &sigma).unwrap(), c2);
        assert_eq!(linear_change(&c, &Mat3::from_ints([[1, 0, 0], [0, 0, 0], [0, 0, 1]])), Err(Error::SingularMatrix));
    }
}
