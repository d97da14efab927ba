//! Static data for each irreducible Coxeter type: rank, exponents, group
//! order, opposition-involution orbit count, Poincaré numerator.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::poly::UniPoly;
use crate::{Error, Result};

/// Irreducible Coxeter type with its rank parameter. Type A is parametrized
/// by n (the symmetric group degree, so A(n−1) has rank n−1); I2 by p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum WeylType {
    A(u32),
    B(u32),
    D(u32),
    E6,
    E7,
    E8,
    F4,
    G2,
    H3,
    H4,
    I2(u32),
}

impl WeylType {
    /// Validated constructor enforcing the rank-parameter bounds.
    pub fn new(kind: &str, param: Option<u32>) -> Result<WeylType> {
        let need = |t: Option<u32>| t.ok_or_else(|| Error::InvalidRank(kind.into(), "missing rank parameter".into()));
        let ty = match kind {
            "A" => WeylType::A(need(param)?),
            "B" => WeylType::B(need(param)?),
            "D" => WeylType::D(need(param)?),
            "E6" => WeylType::E6,
            "E7" => WeylType::E7,
            "E8" => WeylType::E8,
            "F4" => WeylType::F4,
            "G2" => WeylType::G2,
            "H3" => WeylType::H3,
            "H4" => WeylType::H4,
            "I2" => WeylType::I2(need(param)?),
            other => {
                return Err(Error::InvalidRank(other.into(), "unknown type".into()));
            }
        };
        ty.validate()?;
        Ok(ty)
    }

    pub fn validate(&self) -> Result<()> {
        let err = |msg: &str| Err(Error::InvalidRank(format!("{self}"), msg.into()));
        match *self {
            WeylType::A(n) if n < 1 => err("type A needs n ≥ 1"),
            WeylType::B(n) if n < 2 => err("type B needs n ≥ 2"),
            WeylType::D(n) if n < 4 => err("type D needs n ≥ 4"),
            WeylType::I2(p) if !(p == 5 || p >= 7) => err("I2(p) needs p = 5 or p ≥ 7"),
            _ => Ok(()),
        }
    }

    pub fn is_crystallographic(&self) -> bool {
        !matches!(self, WeylType::H3 | WeylType::H4 | WeylType::I2(_))
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(
            self,
            WeylType::A(_) | WeylType::D(_) | WeylType::E6 | WeylType::E7 | WeylType::E8
        )
    }

    /// Number of simple reflections.
    pub fn rank(&self) -> usize {
        match *self {
            WeylType::A(n) => (n - 1) as usize,
            WeylType::B(n) => n as usize,
            WeylType::D(n) => n as usize,
            WeylType::E6 => 6,
            WeylType::E7 => 7,
            WeylType::E8 => 8,
            WeylType::F4 => 4,
            WeylType::G2 => 2,
            WeylType::H3 => 3,
            WeylType::H4 => 4,
            WeylType::I2(_) => 2,
        }
    }

    pub fn all_exceptional() -> &'static [WeylType] {
        &[WeylType::E6, WeylType::E7, WeylType::E8, WeylType::F4, WeylType::G2]
    }
}

impl fmt::Display for WeylType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            WeylType::A(n) => write!(f, "A{}", n - 1),
            WeylType::B(n) => write!(f, "B{n}"),
            WeylType::D(n) => write!(f, "D{n}"),
            WeylType::E6 => write!(f, "E6"),
            WeylType::E7 => write!(f, "E7"),
            WeylType::E8 => write!(f, "E8"),
            WeylType::F4 => write!(f, "F4"),
            WeylType::G2 => write!(f, "G2"),
            WeylType::H3 => write!(f, "H3"),
            WeylType::H4 => write!(f, "H4"),
            WeylType::I2(p) => write!(f, "I2({p})"),
        }
    }
}

/// Numeric invariants of one irreducible type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupData {
    pub simple_reflection_count: usize,
    pub exponents: Vec<u32>,
    /// Number of orbits of the opposition involution on the simple
    /// reflections.
    pub op_orbit_count: usize,
    pub order: BigInt,
}

/// Exponents, opposition-orbit count and group order for a valid type.
pub fn group_data(t: WeylType) -> Result<GroupData> {
    t.validate()?;
    let exponents: Vec<u32> = match t {
        WeylType::A(n) => (1..n).collect(),
        WeylType::B(n) => (0..n).map(|i| 2 * i + 1).collect(),
        WeylType::D(n) => (0..n - 1).map(|i| 2 * i + 1).chain([n - 1]).collect(),
        WeylType::E6 => vec![1, 4, 5, 7, 8, 11],
        WeylType::E7 => vec![1, 5, 7, 9, 11, 13, 17],
        WeylType::E8 => vec![1, 7, 11, 13, 17, 19, 23, 29],
        WeylType::F4 => vec![1, 5, 7, 11],
        WeylType::G2 => vec![1, 5],
        WeylType::H3 => vec![1, 5, 9],
        WeylType::H4 => vec![1, 11, 19, 29],
        WeylType::I2(p) => vec![1, p - 1],
    };
    let op_orbit_count = match t {
        WeylType::A(n) => ((n - 1) as usize).div_ceil(2),
        WeylType::D(n) if n % 2 == 1 => (n - 1) as usize,
        WeylType::E6 => 4,
        WeylType::I2(p) if p % 2 == 1 => 1,
        _ => exponents.len(),
    };
    let order = exponents
        .iter()
        .fold(BigInt::one(), |acc, &e| acc * BigInt::from(e + 1));
    Ok(GroupData {
        simple_reflection_count: exponents.len(),
        exponents,
        op_orbit_count,
        order,
    })
}

/// Π over all exponents of (u^{eᵢ+1} − 1).
pub fn poincare_numerator(t: WeylType) -> Result<UniPoly> {
    let data = group_data(t)?;
    let mut acc = UniPoly::one();
    for &e in &data.exponents {
        acc = acc.mul(&UniPoly::u_pow_minus_one((e + 1) as usize))?;
    }
    Ok(acc)
}

impl GroupData {
    pub fn to_json(&self, t: WeylType) -> serde_json::Value {
        serde_json::json!({
            "type": t.to_string(),
            "simple_reflection_count": self.simple_reflection_count,
            "exponents": self.exponents,
            "op_orbit_count": self.op_orbit_count,
            "order": self.order.to_string(),
        })
    }
}

/// Every registry type touched by the verification suites, with classical
/// ranks capped at `max_n`.
pub fn sample_types(max_n: u32) -> Vec<WeylType> {
    let mut out = vec![];
    for n in 1..=max_n {
        out.push(WeylType::A(n));
    }
    for n in 2..=max_n {
        out.push(WeylType::B(n));
    }
    for n in 4..=max_n {
        out.push(WeylType::D(n));
    }
    out.extend_from_slice(WeylType::all_exceptional());
    out.extend_from_slice(&[WeylType::H3, WeylType::H4]);
    for p in [5u32, 7, 8, 9, 12, 31] {
        out.push(WeylType::I2(p));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_data() {
        let d = group_data(WeylType::G2).unwrap();
        assert_eq!(d.exponents, vec![1, 5]);
        assert_eq!(d.order, BigInt::from(12));
        assert_eq!(d.op_orbit_count, 2);
    }

    #[test]
    fn a2_opposition_swaps() {
        let d = group_data(WeylType::A(3)).unwrap();
        assert_eq!(d.exponents, vec![1, 2]);
        assert_eq!(d.op_orbit_count, 1);
    }

    #[test]
    fn a0_trivial_group() {
        let d = group_data(WeylType::A(1)).unwrap();
        assert!(d.exponents.is_empty());
        assert_eq!(d.order, BigInt::one());
        assert_eq!(d.op_orbit_count, 0);
    }

    #[test]
    fn known_orders() {
        assert_eq!(group_data(WeylType::F4).unwrap().order, BigInt::from(1152));
        assert_eq!(
            group_data(WeylType::E8).unwrap().order,
            BigInt::from(696729600u64)
        );
        assert_eq!(group_data(WeylType::I2(7)).unwrap().order, BigInt::from(14));
    }

    #[test]
    fn poincare_numerator_g2_and_b2() {
        let g2 = poincare_numerator(WeylType::G2).unwrap();
        let expect = UniPoly::u_pow_minus_one(2)
            .mul(&UniPoly::u_pow_minus_one(6))
            .unwrap();
        assert_eq!(g2, expect);
        let b2 = poincare_numerator(WeylType::B(2)).unwrap();
        let expect = UniPoly::u_pow_minus_one(2)
            .mul(&UniPoly::u_pow_minus_one(4))
            .unwrap();
        assert_eq!(b2, expect);
        assert_eq!(poincare_numerator(WeylType::A(1)).unwrap(), UniPoly::one());
    }

    #[test]
    fn op_orbits_equal_odd_exponent_count_and_valuation() {
        for t in sample_types(9) {
            let d = group_data(t).unwrap();
            let odd = d.exponents.iter().filter(|&&e| e % 2 == 1).count();
            assert_eq!(d.op_orbit_count, odd, "{t}");
            let val = poincare_numerator(t).unwrap().val_at_minus_one().unwrap();
            assert_eq!(val, d.op_orbit_count, "{t}");
        }
    }

    #[test]
    fn invalid_ranks_rejected() {
        assert!(WeylType::new("B", Some(1)).is_err());
        assert!(WeylType::new("D", Some(3)).is_err());
        assert!(WeylType::new("I2", Some(6)).is_err());
        assert!(WeylType::new("I2", Some(5)).is_ok());
    }
}
