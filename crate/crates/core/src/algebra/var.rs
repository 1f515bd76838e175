//! The fixed variable alphabet shared by every polynomial in the crate.

use std::fmt;

use crate::error::{Error, Result};

/// Number of variables in the alphabet.
pub const NVARS: usize = 14;

const NAMES: [&str; NVARS] = [
    "y1", "y2", "y3", "x1", "x2", "x3", "z1", "z2", "a", "b", "c", "l0", "l1", "t",
];

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(u8);

impl Var {
    pub const Y1: Var = Var(0);
    pub const Y2: Var = Var(1);
    pub const Y3: Var = Var(2);
    pub const X1: Var = Var(3);
    pub const X2: Var = Var(4);
    pub const X3: Var = Var(5);
    pub const Z1: Var = Var(6);
    pub const Z2: Var = Var(7);
    pub const A: Var = Var(8);
    pub const B: Var = Var(9);
    pub const C: Var = Var(10);
    pub const L0: Var = Var(11);
    pub const L1: Var = Var(12);
    pub const T: Var = Var(13);

    pub const Y: [Var; 3] = [Var::Y1, Var::Y2, Var::Y3];
    pub const X: [Var; 3] = [Var::X1, Var::X2, Var::X3];

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(i: usize) -> Var {
        assert!(i < NVARS, "variable index out of range");
        Var(i as u8)
    }

    pub fn name(self) -> &'static str {
        NAMES[self.index()]
    }

    pub fn parse(name: &str) -> Result<Var> {
        NAMES
            .iter()
            .position(|n| *n == name)
            .map(|i| Var(i as u8))
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn all() -> impl Iterator<Item = Var> {
        (0..NVARS).map(|i| Var(i as u8))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
