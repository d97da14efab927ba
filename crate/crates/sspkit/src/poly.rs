//! Dense exact univariate polynomials over [`Scalar`], plus the factored
//! shape Π (1 + u^s + u^{2s} + … + u^{(l−1)s})^m used by the superspecial
//! degree data.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::scalar::Scalar;
use crate::{Error, Result};

/// Dense univariate polynomial, coefficients ascending, trailing zeros
/// trimmed. The zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        UniPoly { coeffs: vec![c] }.trimmed()
    }

    /// The monomial c·u^k.
    pub fn monomial(c: Scalar, k: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }.trimmed()
    }

    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        UniPoly { coeffs }.trimmed()
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| Scalar::from_i64(c)).collect())
    }

    /// u^k − 1.
    pub fn u_pow_minus_one(k: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); k + 1];
        coeffs[0] = Scalar::from_i64(-1);
        coeffs[k] = Scalar::one();
        UniPoly { coeffs }
    }

    /// [k]_u = 1 + u + … + u^{k−1}.
    pub fn q_int(k: usize) -> Self {
        UniPoly {
            coeffs: vec![Scalar::one(); k],
        }
        .trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().map(Scalar::is_zero).unwrap_or(false) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree of a nonzero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add(&self, rhs: &UniPoly) -> Result<UniPoly> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).add(&rhs.coeff(k))?);
        }
        Ok(UniPoly { coeffs: out }.trimmed())
    }

    pub fn sub(&self, rhs: &UniPoly) -> Result<UniPoly> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn mul(&self, rhs: &UniPoly) -> Result<UniPoly> {
        if self.is_zero() || rhs.is_zero() {
            return Ok(UniPoly::zero());
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b)?)?;
                }
            }
        }
        Ok(UniPoly { coeffs: out }.trimmed())
    }

    pub fn scale(&self, c: &Scalar) -> Result<UniPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.mul(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(UniPoly { coeffs }.trimmed())
    }

    /// Exact quotient; `NotDivisible` when the remainder is nonzero.
    pub fn exact_div(&self, rhs: &UniPoly) -> Result<UniPoly> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(UniPoly::zero());
        }
        let dn = rhs.coeffs.len() - 1;
        if self.coeffs.len() - 1 < dn {
            return Err(Error::NotDivisible);
        }
        let lead_inv = rhs.coeffs.last().unwrap().inv()?;
        let mut rem = self.coeffs.clone();
        let qn = rem.len() - 1 - dn;
        let mut quot = vec![Scalar::zero(); qn + 1];
        for k in (0..=qn).rev() {
            let c = rem[k + dn].mul(&lead_inv)?;
            if !c.is_zero() {
                for (i, d) in rhs.coeffs.iter().enumerate() {
                    rem[k + i] = rem[k + i].sub(&c.mul(d)?)?;
                }
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(UniPoly { coeffs: quot }.trimmed())
    }

    pub fn eval(&self, x: &Scalar) -> Result<Scalar> {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x)?.add(c)?;
        }
        Ok(acc)
    }

    /// p(−u).
    pub fn subst_neg_u(&self) -> UniPoly {
        UniPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { c.neg() } else { c.clone() })
                .collect(),
        }
    }

    /// Largest m with (1+u)^m dividing p.
    pub fn val_at_minus_one(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let one_plus_u = UniPoly::from_i64_coeffs(&[1, 1]);
        let mut m = 0;
        let mut cur = self.clone();
        loop {
            match cur.exact_div(&one_plus_u) {
                Ok(q) => {
                    m += 1;
                    cur = q;
                }
                Err(Error::NotDivisible) => return Ok(m),
                Err(e) => return Err(e),
            }
        }
    }

    /// u-adic valuation (index of the lowest nonzero coefficient).
    pub fn val_at_zero(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.coeffs.iter().position(|c| !c.is_zero()).unwrap())
    }

    /// JSON array of coefficient strings, ascending degree.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(Scalar::to_json).collect())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "u")?,
                1 => write!(f, "({c})u")?,
                _ if c.is_one() => write!(f, "u^{k}")?,
                _ => write!(f, "({c})u^{k}")?,
            }
        }
        Ok(())
    }
}

/// One factor 1 + u^s + u^{2s} + … + u^{(l−1)s}.
pub fn shape_factor(s: u32, l: u32) -> UniPoly {
    let mut coeffs = vec![Scalar::zero(); (s * (l - 1)) as usize + 1];
    for j in 0..l {
        coeffs[(j * s) as usize] = Scalar::one();
    }
    UniPoly::from_coeffs(coeffs)
}

/// Multiset of factors (s, l, multiplicity) with a scalar constant in front.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredPoly {
    pub constant: Scalar,
    /// (s, l) → multiplicity, sorted by (s, l).
    pub factors: BTreeMap<(u32, u32), u32>,
}

impl FactoredPoly {
    pub fn one() -> Self {
        FactoredPoly {
            constant: Scalar::one(),
            factors: BTreeMap::new(),
        }
    }

    pub fn from_factors(factors: &[(u32, u32, u32)]) -> Self {
        let mut map = BTreeMap::new();
        for &(s, l, m) in factors {
            assert!(s >= 1 && l >= 2 && m >= 1);
            *map.entry((s, l)).or_insert(0) += m;
        }
        FactoredPoly {
            constant: Scalar::one(),
            factors: map,
        }
    }

    /// Degree of the expansion: Σ m·s·(l−1).
    pub fn degree(&self) -> usize {
        self.factors
            .iter()
            .map(|(&(s, l), &m)| (m * s * (l - 1)) as usize)
            .sum()
    }

    pub fn expand(&self) -> Result<UniPoly> {
        let mut acc = UniPoly::constant(self.constant.clone());
        for (&(s, l), &m) in &self.factors {
            let f = shape_factor(s, l);
            for _ in 0..m {
                acc = acc.mul(&f)?;
            }
        }
        Ok(acc)
    }

    /// Product of two factored polynomials (multiset union, constants
    /// multiplied).
    pub fn mul(&self, rhs: &FactoredPoly) -> Result<FactoredPoly> {
        let mut factors = self.factors.clone();
        for (&k, &m) in &rhs.factors {
            *factors.entry(k).or_insert(0) += m;
        }
        Ok(FactoredPoly {
            constant: self.constant.mul(&rhs.constant)?,
            factors,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "constant": self.constant.to_json(),
            "factors": self
                .factors
                .iter()
                .map(|(&(s, l), &m)| serde_json::json!({"s": s, "l": l, "multiplicity": m}))
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for FactoredPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.constant.is_one() {
            write!(f, "({})·", self.constant)?;
        }
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (&(s, l), &m)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            write!(f, "[s={s},l={l}]^{m}")?;
        }
        Ok(())
    }
}

/// Find a factorization of `p` into shape factors (s, l) with every l prime
/// and l | 2c, preferring smaller s then smaller l. Backtracking search;
/// `NoShapeFactorization` when none exists.
pub fn shape_factorize(p: &UniPoly, c: &BigInt) -> Result<FactoredPoly> {
    // preconditions: integer coefficients, constant term 1, c ≥ 1
    if p.is_zero()
        || !p.coeffs().iter().all(Scalar::is_integer)
        || !p.coeff(0).is_one()
        || !c.is_positive_int()
    {
        return Err(Error::NoShapeFactorization);
    }
    let two_c = c * BigInt::from(2);
    let deg = p.degree().unwrap();
    let primes: Vec<u32> = (2u32..=two_c_bound(&two_c, deg))
        .filter(|&l| is_prime(l) && (&two_c % BigInt::from(l)).is_zero())
        .collect();
    let mut candidates: Vec<(u32, u32)> = vec![];
    for s in 1..=deg.max(1) as u32 {
        for &l in &primes {
            if (s * (l - 1)) as usize <= deg {
                candidates.push((s, l));
            }
        }
    }
    candidates.sort();

    fn go(
        p: &UniPoly,
        candidates: &[(u32, u32)],
        start: usize,
        acc: &mut Vec<(u32, u32)>,
    ) -> bool {
        if p.is_one() {
            return true;
        }
        for idx in start..candidates.len() {
            let (s, l) = candidates[idx];
            if (s * (l - 1)) as usize > p.degree().unwrap_or(0) {
                continue;
            }
            if let Ok(q) = p.exact_div(&shape_factor(s, l)) {
                acc.push((s, l));
                if go(&q, candidates, idx, acc) {
                    return true;
                }
                acc.pop();
            }
        }
        false
    }

    let mut acc = vec![];
    if go(p, &candidates, 0, &mut acc) {
        let mut factors = BTreeMap::new();
        for k in acc {
            *factors.entry(k).or_insert(0) += 1;
        }
        Ok(FactoredPoly {
            constant: Scalar::one(),
            factors,
        })
    } else {
        Err(Error::NoShapeFactorization)
    }
}

fn two_c_bound(two_c: &BigInt, deg: usize) -> u32 {
    // primes l with a factor of degree s(l−1) ≤ deg satisfy l ≤ deg + 1;
    // they also cannot exceed 2c itself
    let cap = (deg + 1) as u32;
    match u32::try_from(two_c.clone()) {
        Ok(v) => cap.min(v),
        Err(_) => cap,
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

trait PositiveInt {
    fn is_positive_int(&self) -> bool;
}

impl PositiveInt for BigInt {
    fn is_positive_int(&self) -> bool {
        *self > BigInt::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_basic() {
        let p = UniPoly::from_i64_coeffs(&[1, 1]);
        assert_eq!(p.mul(&p).unwrap(), UniPoly::from_i64_coeffs(&[1, 2, 1]));
        // (1+u)²(1+u+u²) = 1+3u+4u²+3u³+u⁴, by hand convolution
        let q = UniPoly::from_i64_coeffs(&[1, 1, 1]);
        let prod = p.mul(&p).unwrap().mul(&q).unwrap();
        assert_eq!(prod, UniPoly::from_i64_coeffs(&[1, 3, 4, 3, 1]));
        assert!(p.mul(&UniPoly::zero()).unwrap().is_zero());
    }

    #[test]
    fn mul_degree_additive() {
        let p = UniPoly::from_i64_coeffs(&[2, 0, 3]);
        let q = UniPoly::from_i64_coeffs(&[-1, 1, 0, 5]);
        assert_eq!(p.mul(&q).unwrap().degree(), Some(5));
    }

    #[test]
    fn exact_div_cases() {
        let num = UniPoly::from_i64_coeffs(&[-1, 0, 1]); // u²−1
        let den = UniPoly::from_i64_coeffs(&[-1, 1]); // u−1
        assert_eq!(num.exact_div(&den).unwrap(), UniPoly::from_i64_coeffs(&[1, 1]));

        let bad = UniPoly::from_i64_coeffs(&[1, 0, 1]); // u²+1
        let opu = UniPoly::from_i64_coeffs(&[1, 1]);
        assert!(matches!(bad.exact_div(&opu), Err(Error::NotDivisible)));
    }

    #[test]
    fn g2_generic_degree_by_long_division() {
        // u(u²−1)(u⁶−1) / (6(1−u)²(u²−u+1)) = (u⁵+3u⁴+4u³+3u²+u)/6
        let num = UniPoly::monomial(Scalar::one(), 1)
            .mul(&UniPoly::u_pow_minus_one(2))
            .unwrap()
            .mul(&UniPoly::u_pow_minus_one(6))
            .unwrap();
        let den = UniPoly::from_i64_coeffs(&[1, -1])
            .mul(&UniPoly::from_i64_coeffs(&[1, -1]))
            .unwrap()
            .mul(&UniPoly::from_i64_coeffs(&[1, -1, 1]))
            .unwrap()
            .scale(&Scalar::from_i64(6))
            .unwrap();
        let d = num.exact_div(&den).unwrap();
        let sixth = Scalar::from_ratio(1, 6);
        let expect = UniPoly::from_i64_coeffs(&[0, 1, 3, 4, 3, 1])
            .scale(&sixth)
            .unwrap();
        assert_eq!(d, expect);
    }

    #[test]
    fn val_at_minus_one_cases() {
        // (1+u)²(1+u+u²)
        let p = UniPoly::from_i64_coeffs(&[1, 3, 4, 3, 1])
            .exact_div(&UniPoly::from_i64_coeffs(&[1, 1]))
            .unwrap()
            .mul(&UniPoly::from_i64_coeffs(&[1, 1]))
            .unwrap();
        assert_eq!(p.val_at_minus_one().unwrap(), 2);
        assert_eq!(
            UniPoly::from_i64_coeffs(&[1, 0, 1]).val_at_minus_one().unwrap(),
            0
        );
        // (u²−1)(u⁶−1): repeated-division count is 2
        let q = UniPoly::u_pow_minus_one(2)
            .mul(&UniPoly::u_pow_minus_one(6))
            .unwrap();
        assert_eq!(q.val_at_minus_one().unwrap(), 2);
        assert!(matches!(
            UniPoly::zero().val_at_minus_one(),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn expand_cases() {
        let f = FactoredPoly::from_factors(&[(1, 2, 2), (1, 3, 1)]);
        assert_eq!(f.expand().unwrap(), UniPoly::from_i64_coeffs(&[1, 3, 4, 3, 1]));
        assert_eq!(FactoredPoly::one().expand().unwrap(), UniPoly::one());
        assert_eq!(
            FactoredPoly::from_factors(&[(2, 2, 1)]).expand().unwrap(),
            UniPoly::from_i64_coeffs(&[1, 0, 1])
        );
        assert_eq!(f.degree(), 4);
    }

    #[test]
    fn shape_factorize_b2() {
        // (1+u)²(1+u²) with c = 2: both l = 2 divide 4
        let p = FactoredPoly::from_factors(&[(1, 2, 2), (2, 2, 1)])
            .expand()
            .unwrap();
        let f = shape_factorize(&p, &BigInt::from(2)).unwrap();
        assert_eq!(
            f.factors,
            FactoredPoly::from_factors(&[(1, 2, 2), (2, 2, 1)]).factors
        );
        assert_eq!(f.expand().unwrap(), p);
    }

    #[test]
    fn shape_factorize_trivial_and_failure() {
        let f = shape_factorize(&UniPoly::one(), &BigInt::from(7)).unwrap();
        assert!(f.factors.is_empty());
        // u²+u+1 needs l = 3, but 2c = 4 has no prime factor 3
        let p = UniPoly::from_i64_coeffs(&[1, 1, 1]);
        assert!(matches!(
            shape_factorize(&p, &BigInt::from(2)),
            Err(Error::NoShapeFactorization)
        ));
    }

    #[test]
    fn shape_factorize_e8() {
        let f = FactoredPoly::from_factors(&[(1, 2, 4), (2, 2, 4), (3, 2, 4), (1, 3, 4), (1, 5, 2)]);
        let p = f.expand().unwrap();
        let g = shape_factorize(&p, &BigInt::from(120)).unwrap();
        assert_eq!(g.expand().unwrap(), p);
        for &(_, l) in g.factors.keys() {
            assert!(is_prime(l));
            assert_eq!(240 % l, 0);
        }
    }

    #[test]
    fn val_additivity() {
        let p = FactoredPoly::from_factors(&[(1, 2, 3), (2, 2, 1)]).expand().unwrap();
        let q = FactoredPoly::from_factors(&[(1, 2, 2), (1, 3, 2)]).expand().unwrap();
        assert_eq!(
            p.mul(&q).unwrap().val_at_minus_one().unwrap(),
            p.val_at_minus_one().unwrap() + q.val_at_minus_one().unwrap()
        );
    }
}
