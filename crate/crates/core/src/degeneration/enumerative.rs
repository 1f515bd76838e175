//! Plücker and genus bookkeeping for curves with nodes and cusps.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerativeProfile {
    pub degree: i64,
    pub nodes: i64,
    pub cusps: i64,
    pub arithmetic_genus: i64,
    pub geometric_genus: i64,
    pub class: i64,
}

pub fn plucker_profile(d: i64, nodes: i64, cusps: i64) -> Result<EnumerativeProfile> {
    if d < 1 || nodes < 0 || cusps < 0 {
        return Err(Error::Inadmissible(format!("({d}, {nodes}, {cusps})")));
    }
    let pa = (d - 1) * (d - 2) / 2;
    let pg = pa - nodes - cusps;
    let class = d * (d - 1) - 2 * nodes - 3 * cusps;
    if pg < 0 || class < 0 {
        return Err(Error::Inadmissible(format!("genus {pg}, class {class} for ({d}, {nodes}, {cusps})")));
    }
    Ok(EnumerativeProfile { degree: d, nodes, cusps, arithmetic_genus: pa, geometric_genus: pg, class })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ZeuthenSegre {
    /// `6 + 4(g − 1)` for `g = 4`.
    pub singular_fibres: i64,
    /// `3·D²` for `D² = 6`.
    pub branch_degree: i64,
    /// `p_a(18) − 36 − 72`.
    pub genus: i64,
}

pub fn zeuthen_segre_check() -> ZeuthenSegre {
    let g = 4;
    let d_squared = 6;
    let pa = (18 - 1) * (18 - 2) / 2;
    ZeuthenSegre { singular_fibres: 6 + 4 * (g - 1), branch_degree: 3 * d_squared, genus: pa - 36 - 72 }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profiles() {
        let p = plucker_profile(18, 36, 72).unwrap();
        assert_eq!((p.arithmetic_genus, p.geometric_genus, p.class), (136, 28, 18));
        let c = plucker_profile(3, 0, 0).unwrap();
        assert_eq!((c.geometric_genus, c.class), (1, 6));
        assert_eq!(plucker_profile(6, 0, 9).unwrap().class, 3);
        assert!(matches!(plucker_profile(3, 2, 0), Err(Error::Inadmissible(_))));
    }

    #[test]
    fn zeuthen_segre() {
        assert_eq!(zeuthen_segre_check(), ZeuthenSegre { singular_fibres: 18, branch_degree: 18, genus: 28 });
    }
}
