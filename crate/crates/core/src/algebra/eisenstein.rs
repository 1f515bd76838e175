//! Elements of the cyclotomic field ℚ(ζ), ζ a primitive cube root of unity.
//!
//! An element is stored as `a + b·ζ` with `a, b` arbitrary-precision
//! rationals. Products are reduced with `ζ² = −1 − ζ`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Eisenstein {
    a: BigRational,
    b: BigRational,
}

impl Eisenstein {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Eisenstein { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Eisenstein::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()))
    }

    pub fn rational(q: BigRational) -> Self {
        Eisenstein::new(q, BigRational::zero())
    }

    pub fn int(n: i64) -> Self {
        Eisenstein::from_ints(n, 0)
    }

    /// `n / d` as an element of ℚ ⊂ ℚ(ζ).
    pub fn ratio(n: i64, d: i64) -> Self {
        Eisenstein::rational(BigRational::new(n.into(), d.into()))
    }

    pub fn zeta() -> Self {
        Eisenstein::from_ints(0, 1)
    }

    /// ζ^k for any integer `k`.
    pub fn zeta_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => Eisenstein::one(),
            1 => Eisenstein::from_ints(0, 1),
            _ => Eisenstein::from_ints(-1, -1),
        }
    }

    pub fn re_part(&self) -> &BigRational {
        &self.a
    }

    pub fn zeta_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate, ζ ↦ ζ² = −1 − ζ.
    pub fn conj(&self) -> Self {
        Eisenstein::new(&self.a - &self.b, -&self.b)
    }

    /// Field norm `a² − ab + b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(Eisenstein::new(c.a / &n, c.b / n))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Eisenstein::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Eisenstein::new(&self.a * q, &self.b * q)
    }

    /// Least common multiple of the denominators of both parts.
    pub fn denom_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.a.denom().lcm(self.b.denom())
    }

    /// Sum of absolute values of the two parts; an upper bound for the
    /// complex absolute value under either embedding.
    pub fn abs_bound(&self) -> BigRational {
        self.a.abs() + self.b.abs()
    }

    /// Approximate complex value under ζ ↦ e^{2πi/3}.
    pub fn to_complex(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        (a - b / 2.0, b * 3f64.sqrt() / 2.0)
    }
}

impl Zero for Eisenstein {
    fn zero() -> Self {
        Eisenstein::new(BigRational::zero(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Eisenstein {
    fn one() -> Self {
        Eisenstein::new(BigRational::one(), BigRational::zero())
    }
}

impl From<i64> for Eisenstein {
    fn from(n: i64) -> Self {
        Eisenstein::int(n)
    }
}

impl From<BigRational> for Eisenstein {
    fn from(q: BigRational) -> Self {
        Eisenstein::rational(q)
    }
}

impl<'a> Add<&'a Eisenstein> for &'a Eisenstein {
    type Output = Eisenstein;
    fn add(self, o: &Eisenstein) -> Eisenstein {
        Eisenstein::new(&self.a + &o.a, &self.b + &o.b)
    }
}

impl<'a> Sub<&'a Eisenstein> for &'a Eisenstein {
    type Output = Eisenstein;
    fn sub(self, o: &Eisenstein) -> Eisenstein {
        Eisenstein::new(&self.a - &o.a, &self.b - &o.b)
    }
}

impl<'a> Mul<&'a Eisenstein> for &'a Eisenstein {
    type Output = Eisenstein;
    fn mul(self, o: &Eisenstein) -> Eisenstein {
        // (a + bζ)(c + dζ) = ac + (ad + bc)ζ + bdζ², ζ² = −1 − ζ
        let bd = &self.b * &o.b;
        Eisenstein::new(&self.a * &o.a - &bd, &self.a * &o.b + &self.b * &o.a - bd)
    }
}

impl<'a> Div<&'a Eisenstein> for &'a Eisenstein {
    type Output = Eisenstein;
    /// Panics on division by zero; use [`Eisenstein::checked_div`] otherwise.
    fn div(self, o: &Eisenstein) -> Eisenstein {
        self.checked_div(o).expect("division by zero in Q(zeta)")
    }
}

impl Neg for &Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Eisenstein {
        Eisenstein::new(-&self.a, -&self.b)
    }
}

impl Neg for Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Eisenstein {
        Eisenstein::new(-self.a, -self.b)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Eisenstein {
            type Output = Eisenstein;
            fn $m(self, o: Eisenstein) -> Eisenstein {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Eisenstein> for Eisenstein {
            type Output = Eisenstein;
            fn $m(self, o: &Eisenstein) -> Eisenstein {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Eisenstein> for Eisenstein {
    fn add_assign(&mut self, o: &Eisenstein) {
        self.a += &o.a;
        self.b += &o.b;
    }
}

impl SubAssign<&Eisenstein> for Eisenstein {
    fn sub_assign(&mut self, o: &Eisenstein) {
        self.a -= &o.a;
        self.b -= &o.b;
    }
}

impl MulAssign<&Eisenstein> for Eisenstein {
    fn mul_assign(&mut self, o: &Eisenstein) {
        *self = &*self * o;
    }
}

fn fmt_rational(q: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl Eisenstein {
    /// True when the literal renders as a single signed factor, so it can be
    /// written in front of a monomial without parentheses.
    pub(crate) fn is_simple_literal(&self) -> bool {
        self.a.is_zero() || self.b.is_zero()
    }
}

/// Renders in the polynomial literal syntax: `3`, `-1/2`, `w`, `2*w`,
/// `(1 + 2*w)`.
impl Serialize for Eisenstein {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => fmt_rational(&self.a, f),
            (true, false) => fmt_zeta_term(&self.b, f),
            (false, false) => {
                write!(f, "(")?;
                fmt_rational(&self.a, f)?;
                if self.b.is_negative() {
                    write!(f, " - ")?;
                    fmt_zeta_term(&-&self.b, f)?;
                } else {
                    write!(f, " + ")?;
                    fmt_zeta_term(&self.b, f)?;
                }
                write!(f, ")")
            }
        }
    }
}

fn fmt_zeta_term(b: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if b.is_one() {
        write!(f, "w")
    } else if *b == -BigRational::one() {
        write!(f, "-w")
    } else {
        fmt_rational(b, f)?;
        write!(f, "*w")
    }
}

impl fmt::Debug for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_is_a_primitive_cube_root() {
        let z = Eisenstein::zeta();
        assert_eq!(z.pow(3), Eisenstein::one());
        assert_ne!(z.pow(1), Eisenstein::one());
        let lhs = &(&z * &z + z.clone()) + &Eisenstein::one();
        assert!(lhs.is_zero());
        assert_eq!(Eisenstein::zeta_pow(2), &z * &z);
        assert_eq!(Eisenstein::zeta_pow(-1), Eisenstein::zeta_pow(2));
    }

    #[test]
    fn norm_is_product_with_conjugate() {
        let x = Eisenstein::new(BigRational::new(3.into(), 2.into()), BigRational::from_integer((-5).into()));
        let p = &x * &x.conj();
        assert!(p.is_rational());
        assert_eq!(p.re_part(), &x.norm());
        assert!(x.norm() > BigRational::zero());
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        assert!(Eisenstein::zero().inv().is_err());
        let x = Eisenstein::from_ints(2, -7);
        assert_eq!(&x * &x.inv().unwrap(), Eisenstein::one());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Eisenstein::from_ints(1, 2).to_string(), "(1 + 2*w)");
        assert_eq!(Eisenstein::from_ints(0, -1).to_string(), "-w");
        assert_eq!(Eisenstein::ratio(-1, 2).to_string(), "-1/2");
        assert_eq!(Eisenstein::from_ints(3, -1).to_string(), "(3 - w)");
    }
}
