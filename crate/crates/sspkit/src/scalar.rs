//! Exact scalars: arbitrary-precision integers, rationals, the quadratic
//! field ℚ(√5), and real cyclotomic fields ℚ(ζ_p + ζ_p⁻¹).
//!
//! All arithmetic is exact. Sign determination is exact: algebraically for
//! ℚ(√5) (via a² vs 5b²), and by certified interval refinement for real
//! cyclotomic elements (the isolating interval for 2cos(2π/p) is certified
//! once per order by a Sturm-sequence root count).

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;

use crate::{Error, Result};

/// An exact scalar. Values are kept in canonical form: a rational with unit
/// denominator demotes to `Int`, a ℚ(√5) element with zero irrational part
/// demotes to a rational, and a cyclotomic element whose higher coordinates
/// vanish demotes likewise. Equality and hashing rely on this.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
    /// a + b√5 with a, b rational and b ≠ 0.
    Root5 { a: BigRational, b: BigRational },
    /// Element of ℚ(θ), θ = 2cos(2π/p), written in the power basis of θ
    /// modulo the minimal polynomial of θ. `coords.len()` equals the degree
    /// of that minimal polynomial and the top coordinate block is nonzero.
    Cyc { order: u32, coords: Vec<BigRational> },
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Int(BigInt::zero())
    }

    pub fn one() -> Self {
        Scalar::Int(BigInt::one())
    }

    pub fn from_i64(v: i64) -> Self {
        Scalar::Int(BigInt::from(v))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::Rat(BigRational::new(BigInt::from(num), BigInt::from(den))).normalized()
    }

    pub fn from_big_rational(r: BigRational) -> Self {
        Scalar::Rat(r).normalized()
    }

    /// a + b√5.
    pub fn root5(a: BigRational, b: BigRational) -> Self {
        Scalar::Root5 { a, b }.normalized()
    }

    /// The golden ratio λ = (1+√5)/2.
    pub fn golden_ratio() -> Self {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        Scalar::root5(half.clone(), half)
    }

    /// θ = 2cos(2π/p) as a cyclotomic field element.
    pub fn two_cos(order: u32) -> Self {
        let deg = cos_min_poly(order).len() - 1;
        let mut coords = vec![BigRational::zero(); deg];
        if deg >= 2 {
            coords[1] = BigRational::one();
        } else {
            // degree-1 field: theta is rational, read it off the minimal poly
            let psi = cos_min_poly(order);
            coords[0] = BigRational::from(-psi[0].clone());
        }
        Scalar::Cyc { order, coords }.normalized()
    }

    /// Lift a rational into the cyclotomic field of the given order.
    pub fn cyc_constant(order: u32, r: BigRational) -> Self {
        let deg = cos_min_poly(order).len() - 1;
        let mut coords = vec![BigRational::zero(); deg];
        coords[0] = r;
        Scalar::Cyc { order, coords }.normalized()
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Int(v) if v.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Int(v) if v.is_one())
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, Scalar::Int(_))
    }

    pub fn as_bigint(&self) -> Option<&BigInt> {
        match self {
            Scalar::Int(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Int(v) => Some(BigRational::from_integer(v.clone())),
            Scalar::Rat(r) => Some(r.clone()),
            _ => None,
        }
    }

    fn normalized(self) -> Self {
        match self {
            Scalar::Rat(r) => {
                if r.is_integer() {
                    Scalar::Int(r.to_integer())
                } else {
                    Scalar::Rat(r)
                }
            }
            Scalar::Root5 { a, b } => {
                if b.is_zero() {
                    Scalar::Rat(a).normalized()
                } else {
                    Scalar::Root5 { a, b }
                }
            }
            Scalar::Cyc { order, coords } => {
                if coords.iter().skip(1).all(|c| c.is_zero()) {
                    let c0 = coords.into_iter().next().unwrap_or_else(BigRational::zero);
                    Scalar::Rat(c0).normalized()
                } else {
                    Scalar::Cyc { order, coords }
                }
            }
            s => s,
        }
    }

    /// Promote `self` and `rhs` to a common kind, or fail when the kinds
    /// are not embeddable into one another (ℚ(√5) vs a cyclotomic field,
    /// or two cyclotomic fields of different orders).
    fn unify(&self, rhs: &Scalar) -> Result<(Scalar, Scalar)> {
        use Scalar::*;
        let lvl = |s: &Scalar| match s {
            Int(_) => 0,
            Rat(_) => 1,
            Root5 { .. } => 2,
            Cyc { .. } => 3,
        };
        match (self, rhs) {
            (Root5 { .. }, Cyc { .. }) | (Cyc { .. }, Root5 { .. }) => Err(
                Error::ScalarKindMismatch("quadratic vs cyclotomic".into()),
            ),
            (Cyc { order: p, .. }, Cyc { order: q, .. }) if p != q => Err(
                Error::ScalarKindMismatch(format!("cyclotomic orders {p} vs {q}")),
            ),
            _ => {
                let target = lvl(self).max(lvl(rhs));
                let order = match (self, rhs) {
                    (Cyc { order, .. }, _) | (_, Cyc { order, .. }) => Some(*order),
                    _ => None,
                };
                Ok((self.promote(target, order), rhs.promote(target, order)))
            }
        }
    }

    fn promote(&self, level: u8, order: Option<u32>) -> Scalar {
        let r = |s: &Scalar| -> BigRational {
            match s {
                Scalar::Int(v) => BigRational::from_integer(v.clone()),
                Scalar::Rat(r) => r.clone(),
                _ => unreachable!(),
            }
        };
        match (self, level) {
            (Scalar::Int(v), 1) => Scalar::Rat(BigRational::from_integer(v.clone())),
            (s @ (Scalar::Int(_) | Scalar::Rat(_)), 2) => Scalar::Root5 {
                a: r(s),
                b: BigRational::zero(),
            },
            (s @ (Scalar::Int(_) | Scalar::Rat(_)), 3) => {
                let order = order.expect("cyclotomic order for promotion");
                let deg = cos_min_poly(order).len() - 1;
                let mut coords = vec![BigRational::zero(); deg];
                coords[0] = r(s);
                Scalar::Cyc { order, coords }
            }
            _ => self.clone(),
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Result<Scalar> {
        let (a, b) = self.unify(rhs)?;
        Ok(match (a, b) {
            (Scalar::Int(x), Scalar::Int(y)) => Scalar::Int(x + y),
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y).normalized(),
            (Scalar::Root5 { a: x, b: u }, Scalar::Root5 { a: y, b: v }) => {
                Scalar::Root5 { a: x + y, b: u + v }.normalized()
            }
            (Scalar::Cyc { order, coords: x }, Scalar::Cyc { coords: y, .. }) => {
                let coords = x.iter().zip(y.iter()).map(|(p, q)| p + q).collect();
                Scalar::Cyc { order, coords }.normalized()
            }
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, rhs: &Scalar) -> Result<Scalar> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Int(v) => Scalar::Int(-v),
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Root5 { a, b } => Scalar::Root5 { a: -a, b: -b },
            Scalar::Cyc { order, coords } => Scalar::Cyc {
                order: *order,
                coords: coords.iter().map(|c| -c).collect(),
            },
        }
    }

    pub fn mul(&self, rhs: &Scalar) -> Result<Scalar> {
        let (a, b) = self.unify(rhs)?;
        Ok(match (a, b) {
            (Scalar::Int(x), Scalar::Int(y)) => Scalar::Int(x * y),
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y).normalized(),
            (Scalar::Root5 { a: x, b: u }, Scalar::Root5 { a: y, b: v }) => {
                let five = BigRational::from_integer(BigInt::from(5));
                Scalar::Root5 {
                    a: &x * &y + five * &u * &v,
                    b: x * v + u * y,
                }
                .normalized()
            }
            (Scalar::Cyc { order, coords: x }, Scalar::Cyc { coords: y, .. }) => {
                let mut prod = vec![BigRational::zero(); x.len() + y.len() - 1];
                for (i, xi) in x.iter().enumerate() {
                    if xi.is_zero() {
                        continue;
                    }
                    for (j, yj) in y.iter().enumerate() {
                        if !yj.is_zero() {
                            prod[i + j] += xi * yj;
                        }
                    }
                }
                let coords = reduce_mod_psi(prod, order);
                Scalar::Cyc { order, coords }.normalized()
            }
            _ => unreachable!(),
        })
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Int(v) => {
                Scalar::Rat(BigRational::new(BigInt::one(), v.clone())).normalized()
            }
            Scalar::Rat(r) => Scalar::Rat(r.recip()).normalized(),
            Scalar::Root5 { a, b } => {
                // (a + b√5)⁻¹ = (a − b√5)/(a² − 5b²); the norm is nonzero
                // since √5 is irrational.
                let five = BigRational::from_integer(BigInt::from(5));
                let norm = a * a - five * b * b;
                Scalar::Root5 {
                    a: a / &norm,
                    b: -(b / &norm),
                }
                .normalized()
            }
            Scalar::Cyc { order, coords } => {
                let psi: Vec<BigRational> = cos_min_poly(*order)
                    .iter()
                    .map(|c| BigRational::from_integer(c.clone()))
                    .collect();
                let inv = poly_mod_inverse(coords, &psi)
                    .expect("nonzero element of a field is invertible");
                let coords = reduce_mod_psi(inv, *order);
                Scalar::Cyc {
                    order: *order,
                    coords,
                }
                .normalized()
            }
        })
    }

    pub fn div(&self, rhs: &Scalar) -> Result<Scalar> {
        self.mul(&rhs.inv()?)
    }

    /// Exact sign: -1, 0 or 1 under the real embedding (√5 > 0 for ℚ(√5),
    /// θ = 2cos(2π/p) for cyclotomic elements).
    pub fn sign(&self) -> i32 {
        match self {
            Scalar::Int(v) => sign_of(v),
            Scalar::Rat(r) => sign_of(r.numer()),
            Scalar::Root5 { a, b } => {
                let sa = sign_of(a.numer());
                let sb = sign_of(b.numer());
                if sa == sb || sa == 0 {
                    return if sa == 0 { sb } else { sa };
                }
                if sb == 0 {
                    return sa;
                }
                // opposite signs: compare a² with 5b²
                let five = BigRational::from_integer(BigInt::from(5));
                match (a * a).cmp(&(five * b * b)) {
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                    Ordering::Equal => unreachable!("√5 is irrational"),
                }
            }
            Scalar::Cyc { order, coords } => cyc_sign(*order, coords),
        }
    }

    /// Approximate real value; used only in tests cross-checking exact signs.
    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Int(v) => v.to_f64().unwrap_or(f64::NAN),
            Scalar::Rat(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Root5 { a, b } => {
                a.to_f64().unwrap_or(f64::NAN) + b.to_f64().unwrap_or(f64::NAN) * 5f64.sqrt()
            }
            Scalar::Cyc { order, coords } => {
                let theta = 2.0 * (2.0 * std::f64::consts::PI / *order as f64).cos();
                coords
                    .iter()
                    .rev()
                    .fold(0.0, |acc, c| acc * theta + c.to_f64().unwrap_or(f64::NAN))
            }
        }
    }

    /// JSON form: integers/rationals as strings "p/q", ℚ(√5) elements as
    /// ["a","b"] meaning a + b√5, cyclotomic elements as an object with the
    /// order and the coordinate strings.
    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::Value;
        match self {
            Scalar::Int(v) => Value::String(v.to_string()),
            Scalar::Rat(r) => Value::String(format!("{}/{}", r.numer(), r.denom())),
            Scalar::Root5 { a, b } => Value::Array(vec![
                Value::String(rat_str(a)),
                Value::String(rat_str(b)),
            ]),
            Scalar::Cyc { order, coords } => serde_json::json!({
                "cyclotomic_order": order,
                "coords": coords.iter().map(rat_str).collect::<Vec<_>>(),
            }),
        }
    }
}

fn rat_str(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn sign_of(v: &BigInt) -> i32 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(v) => write!(f, "{v}"),
            Scalar::Rat(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Root5 { a, b } => write!(f, "{}+{}√5", rat_str(a), rat_str(b)),
            Scalar::Cyc { order, coords } => {
                write!(f, "cyc{}[", order)?;
                for (i, c) in coords.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", rat_str(c))?;
                }
                write!(f, "]")
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Minimal polynomials of 2cos(2π/p)
// ---------------------------------------------------------------------------

/// Coefficients (ascending, monic) of the p-th cyclotomic polynomial.
fn cyclotomic_poly(n: u32) -> Vec<BigInt> {
    // x^n - 1 divided by Φ_d for all proper divisors d of n.
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_poly(d);
            num = int_poly_div_exact(&num, &phi_d);
        }
    }
    num
}

/// Exact division of integer polynomials with monic divisor.
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![BigInt::zero(); qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn].clone();
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact division");
    quot
}

/// Minimal polynomial (ascending, monic, integer) of θ = 2cos(2π/p),
/// obtained from Φ_p(x) = x^{φ(p)/2}·ψ(x + 1/x).
pub fn cos_min_poly(p: u32) -> Vec<BigInt> {
    static CACHE: Lazy<Mutex<HashMap<u32, Vec<BigInt>>>> =
        Lazy::new(|| Mutex::new(HashMap::new()));
    if let Some(v) = CACHE.lock().unwrap().get(&p) {
        return v.clone();
    }
    assert!(p >= 3, "2cos(2π/p) needs p ≥ 3");
    let phi = cyclotomic_poly(p);
    let d = phi.len() - 1;
    assert!(d % 2 == 0);
    let h = d / 2;
    // z_k(y) = x^k + x^{-k} as a polynomial in y = x + 1/x
    let mut z_prev = vec![BigInt::from(2)]; // z_0 = 2
    let mut z_cur = vec![BigInt::zero(), BigInt::one()]; // z_1 = y
    let mut psi = vec![BigInt::zero(); h + 1];
    psi[0] = phi[h].clone();
    for k in 1..=h {
        for (i, c) in z_cur.iter().enumerate() {
            psi[i] += &phi[h + k] * c;
        }
        if k < h {
            // z_{k+1} = y·z_k − z_{k−1}
            let mut next = vec![BigInt::zero(); z_cur.len() + 1];
            for (i, c) in z_cur.iter().enumerate() {
                next[i + 1] = c.clone();
            }
            for (i, c) in z_prev.iter().enumerate() {
                next[i] -= c;
            }
            z_prev = z_cur;
            z_cur = next;
        }
    }
    CACHE.lock().unwrap().insert(p, psi.clone());
    psi
}

fn reduce_mod_psi(mut coords: Vec<BigRational>, order: u32) -> Vec<BigRational> {
    let psi = cos_min_poly(order);
    let deg = psi.len() - 1;
    while coords.len() > deg {
        let top = coords.pop().unwrap();
        if !top.is_zero() {
            let k = coords.len() - deg;
            for (i, c) in psi.iter().take(deg).enumerate() {
                let delta = &top * BigRational::from_integer(c.clone());
                coords[k + i] -= delta;
            }
        }
    }
    coords.resize(deg, BigRational::zero());
    coords
}

// ---------------------------------------------------------------------------
// ℚ[y] helpers for inversion and Sturm sequences
// ---------------------------------------------------------------------------

fn rp_trim(p: &mut Vec<BigRational>) {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn rp_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    rp_trim(&mut r);
    let mut bb = b.to_vec();
    rp_trim(&mut bb);
    let db = bb.len() - 1;
    while r.len() > db {
        let c = r.last().unwrap() / bb.last().unwrap();
        let k = r.len() - 1 - db;
        for (i, bc) in bb.iter().enumerate() {
            let delta = &c * bc;
            r[k + i] -= delta;
        }
        rp_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

/// Extended Euclid: inverse of `a` modulo `m` in ℚ[y] (m squarefree
/// irreducible here, so gcd(a, m) = 1 for nonzero a).
fn poly_mod_inverse(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
    // classic iterative extended gcd on (m, a)
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    rp_trim(&mut r0);
    rp_trim(&mut r1);
    let mut t0: Vec<BigRational> = vec![];
    let mut t1: Vec<BigRational> = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = rp_divmod(&r0, &r1);
        let t2 = rp_sub(&t0, &rp_mul(&q, &t1));
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t2;
    }
    if r0.len() != 1 {
        return None; // gcd not a unit
    }
    let lead = r0[0].clone();
    Some(t0.iter().map(|c| c / &lead).collect())
}

fn rp_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    rp_trim(&mut r);
    let mut bb = b.to_vec();
    rp_trim(&mut bb);
    let db = bb.len() - 1;
    if r.len() <= db {
        return (vec![], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() > db {
        let c = r.last().unwrap() / bb.last().unwrap();
        let k = r.len() - 1 - db;
        q[k] = c.clone();
        for (i, bc) in bb.iter().enumerate() {
            let delta = &c * bc;
            r[k + i] -= delta;
        }
        rp_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    (q, r)
}

fn rp_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    rp_trim(&mut out);
    out
}

fn rp_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    rp_trim(&mut out);
    out
}

fn rp_eval(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c)
}

/// Number of distinct real roots of `p` in (lo, hi] by Sturm's theorem.
fn sturm_root_count(p: &[BigRational], lo: &BigRational, hi: &BigRational) -> usize {
    let mut chain: Vec<Vec<BigRational>> = vec![p.to_vec()];
    let deriv: Vec<BigRational> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect();
    chain.push(deriv);
    loop {
        let n = chain.len();
        if chain[n - 1].is_empty() {
            chain.pop();
            break;
        }
        if chain[n - 1].len() == 1 {
            break;
        }
        let mut r = rp_rem(&chain[n - 2], &chain[n - 1]);
        for c in r.iter_mut() {
            *c = -c.clone();
        }
        chain.push(r);
    }
    let variations = |x: &BigRational| {
        let mut count: usize = 0;
        let mut last = 0;
        for q in &chain {
            let s = sign_of(rp_eval(q, x).numer());
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    };
    variations(lo).saturating_sub(variations(hi))
}

// ---------------------------------------------------------------------------
// Certified sign for cyclotomic elements
// ---------------------------------------------------------------------------

#[derive(Clone)]
struct Interval {
    lo: BigRational,
    hi: BigRational,
}

impl Interval {
    fn add(&self, c: &BigRational) -> Interval {
        Interval {
            lo: &self.lo + c,
            hi: &self.hi + c,
        }
    }

    fn mul(&self, other: &Interval) -> Interval {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    fn sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else {
            None
        }
    }
}

/// Certified isolating interval for θ_p among the roots of its minimal
/// polynomial: sign change at the endpoints plus a Sturm count of one.
fn theta_interval(order: u32) -> (BigRational, BigRational) {
    static CACHE: Lazy<Mutex<HashMap<u32, (BigRational, BigRational)>>> =
        Lazy::new(|| Mutex::new(HashMap::new()));
    if let Some(v) = CACHE.lock().unwrap().get(&order) {
        return v.clone();
    }
    let psi: Vec<BigRational> = cos_min_poly(order)
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    let theta = 2.0 * (2.0 * std::f64::consts::PI / order as f64).cos();
    let mut width = 1e-3f64;
    let interval = loop {
        let lo = BigRational::from_float(theta - width).unwrap();
        let hi = BigRational::from_float(theta + width).unwrap();
        let slo = sign_of(rp_eval(&psi, &lo).numer());
        let shi = sign_of(rp_eval(&psi, &hi).numer());
        if slo != 0 && shi != 0 && slo != shi && sturm_root_count(&psi, &lo, &hi) == 1 {
            break (lo, hi);
        }
        width /= 2.0;
        assert!(width > 1e-12, "failed to isolate 2cos(2π/{order})");
    };
    CACHE.lock().unwrap().insert(order, interval.clone());
    interval
}

fn cyc_sign(order: u32, coords: &[BigRational]) -> i32 {
    let psi: Vec<BigRational> = cos_min_poly(order)
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    let (mut lo, mut hi) = theta_interval(order);
    // nonzero elements of the field have nonzero value at θ, so interval
    // evaluation reaches a definite sign after finitely many bisections
    loop {
        let iv = Interval {
            lo: lo.clone(),
            hi: hi.clone(),
        };
        let mut val = Interval {
            lo: BigRational::zero(),
            hi: BigRational::zero(),
        };
        for c in coords.iter().rev() {
            val = val.mul(&iv).add(c);
        }
        if let Some(s) = val.sign() {
            return s;
        }
        let two = BigRational::from_integer(BigInt::from(2));
        let mid = (&lo + &hi) / two;
        let smid = sign_of(rp_eval(&psi, &mid).numer());
        let slo = sign_of(rp_eval(&psi, &lo).numer());
        debug_assert!(smid != 0, "midpoint cannot be a root of an irreducible ψ");
        if smid != slo {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rational_canonical_form() {
        let s = Scalar::from_ratio(4, 2);
        assert_eq!(s, Scalar::from_i64(2));
        assert!(s.is_integer());
        let t = Scalar::from_ratio(-3, -6);
        assert_eq!(t, Scalar::from_ratio(1, 2));
    }

    #[test]
    fn root5_arithmetic_and_inverse() {
        let lam = Scalar::golden_ratio();
        // λ² = λ + 1
        let sq = lam.mul(&lam).unwrap();
        let expect = lam.add(&Scalar::one()).unwrap();
        assert_eq!(sq, expect);
        let inv = lam.inv().unwrap();
        assert_eq!(lam.mul(&inv).unwrap(), Scalar::one());
        // λ⁻¹ = λ − 1
        assert_eq!(inv, lam.sub(&Scalar::one()).unwrap());
    }

    #[test]
    fn root5_sign() {
        // 9 - 4√5 = (√5-2)² > 0 but tiny; 2 - √5 < 0
        let x = Scalar::root5(rat(9, 1), rat(-4, 1));
        assert_eq!(x.sign(), 1);
        let y = Scalar::root5(rat(2, 1), rat(-1, 1));
        assert_eq!(y.sign(), -1);
    }

    #[test]
    fn min_poly_small_orders() {
        // ψ_5(y) = y² + y − 1, ψ_8(y) = y² − 2, ψ_7 has degree 3
        assert_eq!(
            cos_min_poly(5),
            vec![BigInt::from(-1), BigInt::from(1), BigInt::from(1)]
        );
        assert_eq!(
            cos_min_poly(8),
            vec![BigInt::from(-2), BigInt::from(0), BigInt::from(1)]
        );
        assert_eq!(cos_min_poly(7).len(), 4);
    }

    #[test]
    fn cyclotomic_field_arithmetic() {
        for p in [5u32, 7, 8, 9, 12, 31] {
            let theta = Scalar::two_cos(p);
            let inv = theta.inv().unwrap();
            assert_eq!(theta.mul(&inv).unwrap(), Scalar::one(), "p = {p}");
            // ψ(θ) = 0
            let psi = cos_min_poly(p);
            let mut acc = Scalar::zero();
            let mut pow = Scalar::cyc_constant(p, BigRational::one());
            for c in &psi {
                let term = pow.mul(&Scalar::Int(c.clone())).unwrap();
                acc = acc.add(&term).unwrap();
                pow = pow.mul(&theta).unwrap();
            }
            assert!(acc.is_zero(), "ψ_{p}(θ) ≠ 0");
        }
    }

    #[test]
    fn cyc_sign_matches_float() {
        for p in [5u32, 7, 9, 11] {
            let theta = Scalar::two_cos(p);
            let x = theta
                .mul(&theta)
                .unwrap()
                .sub(&Scalar::from_ratio(3, 2))
                .unwrap();
            let approx = x.to_f64();
            assert_eq!(x.sign(), if approx > 0.0 { 1 } else { -1 }, "p = {p}");
        }
    }

    #[test]
    fn theta5_is_inverse_golden_ratio_numerically() {
        // θ_5 = (√5−1)/2 ≈ 0.618
        let t = Scalar::two_cos(5).to_f64();
        assert!((t - 0.6180339887).abs() < 1e-9);
    }

    #[test]
    fn kind_mismatch_errors() {
        let a = Scalar::two_cos(5);
        let b = Scalar::two_cos(7);
        assert!(matches!(a.add(&b), Err(Error::ScalarKindMismatch(_))));
        let c = Scalar::golden_ratio();
        assert!(matches!(a.mul(&c), Err(Error::ScalarKindMismatch(_))));
    }

    #[test]
    fn int_embeds_into_everything() {
        let two = Scalar::from_i64(2);
        let lam = Scalar::golden_ratio();
        assert_eq!(
            two.mul(&lam).unwrap(),
            Scalar::root5(rat(1, 1), rat(1, 1))
        );
        let theta = Scalar::two_cos(7);
        let s = two.add(&theta).unwrap();
        assert_eq!(s.sub(&theta).unwrap(), two);
    }
}
