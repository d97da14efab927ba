//! Superspeciality per type: the full degree datum (a, c, P, dim), the
//! generic-degree reconstruction with its (1+u)-adic valuation γ, the type-A
//! q-hook oracle, the product rule for reducible groups, and the exhaustive
//! verification suites.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::data::{EXC_SSP, GAMMA_EXCEPTIONS};
use crate::poly::{shape_factorize, FactoredPoly, UniPoly};
use crate::registry::{group_data, poincare_numerator, WeylType};
use crate::report::VerificationReport;
use crate::scalar::Scalar;
use crate::symbols::{
    max_alpha_a, max_alpha_bd, partitions, SymbolPair, TypeAIndex,
};
use crate::{Error, Result};

/// Complete degree datum of the superspecial representation of one
/// irreducible type.
#[derive(Debug, Clone)]
pub struct SspDatum {
    pub weyl_type: WeylType,
    pub label: String,
    pub index_a: Option<TypeAIndex>,
    pub index_bd: Option<SymbolPair>,
    pub dim: BigInt,
    pub a: usize,
    pub b: Option<u32>,
    pub c: Scalar,
    /// Factor-shape form of P; absent for H4 and I2(p), whose quadratic
    /// factors have irrational middle coefficients.
    pub p_factors: Option<FactoredPoly>,
    pub p_expanded: UniPoly,
}

#[derive(Debug, Clone)]
pub struct ReconstructedDegree {
    pub poly: UniPoly,
    pub gamma: usize,
}

/// Is the type superspecial, and for classical types the witness k.
pub fn superspecial_witness(t: WeylType) -> (bool, Option<u32>) {
    let solve = |target: u32, f: &dyn Fn(u32) -> u32, kmin: u32| -> Option<u32> {
        (kmin..).take_while(|&k| f(k) <= target).find(|&k| f(k) == target)
    };
    match t {
        WeylType::A(n) => match solve(n, &|k| k * (k + 1) / 2, 1) {
            Some(k) => (true, Some(k)),
            None => (false, None),
        },
        WeylType::B(n) => match solve(n, &|k| k * (k + 1), 1) {
            Some(k) => (true, Some(k)),
            None => (false, None),
        },
        WeylType::D(n) => match solve(n, &|k| k * k, 2) {
            Some(k) => (true, Some(k)),
            None => (false, None),
        },
        _ => (true, None),
    }
}

/// The superspecial symbol for B (defect 1) or D (defect 0) at witness k.
pub fn superspecial_symbol(defect: u8, k: u32) -> SymbolPair {
    match defect {
        1 => SymbolPair::new((0..=k).map(|i| 2 * i), (0..k).map(|i| 2 * i + 1)),
        0 => SymbolPair::new((0..k).map(|i| 2 * i), (0..k).map(|i| 2 * i + 1)),
        _ => unreachable!(),
    }
}

pub fn superspecial_datum(t: WeylType) -> Result<SspDatum> {
    t.validate()?;
    let (is_ssp, witness) = superspecial_witness(t);
    if !is_ssp {
        return Err(Error::NotSuperspecial(t.to_string()));
    }
    match t {
        WeylType::A(_) => {
            let k = witness.unwrap();
            // (1+u)^k (1+u^3)^{k-1} … (1+u^{2k-1}) divided by (1+u)
            let mut factors: Vec<(u32, u32, u32)> = vec![];
            for j in 1..=k {
                let mult = k + 1 - j;
                let mult = if j == 1 { mult - 1 } else { mult };
                if mult > 0 {
                    factors.push((2 * j - 1, 2, mult));
                }
            }
            let index = TypeAIndex::new((0..k).map(|i| 2 * i + 1));
            classical_datum(t, Scalar::one(), &factors, Some(index), None)
        }
        WeylType::B(_) => {
            let k = witness.unwrap();
            let factors: Vec<(u32, u32, u32)> =
                (1..=2 * k).map(|j| (j, 2, 2 * k + 1 - j)).collect();
            let c = Scalar::Int(BigInt::from(2).pow(k));
            classical_datum(t, c, &factors, None, Some(superspecial_symbol(1, k)))
        }
        WeylType::D(_) => {
            let k = witness.unwrap();
            let factors: Vec<(u32, u32, u32)> =
                (1..2 * k).map(|j| (j, 2, 2 * k - j)).collect();
            let c = Scalar::Int(BigInt::from(2).pow(k - 1));
            classical_datum(t, c, &factors, None, Some(superspecial_symbol(0, k)))
        }
        WeylType::H4 => h4_datum(),
        WeylType::I2(p) => i2_datum(p),
        _ => {
            let entry = EXC_SSP
                .iter()
                .find(|e| e.weyl_type == t)
                .expect("every exceptional type has an embedded entry");
            let p_factors = FactoredPoly::from_factors(entry.p_factors);
            let p_expanded = p_factors.expand()?;
            Ok(SspDatum {
                weyl_type: t,
                label: entry.label.to_string(),
                index_a: None,
                index_bd: None,
                dim: BigInt::from(entry.dim),
                a: entry.a,
                b: Some(entry.b),
                c: Scalar::Int(BigInt::from(entry.c)),
                p_factors: Some(p_factors),
                p_expanded,
            })
        }
    }
}

/// Classical datum: a is read off deg P = 2a + #I, dim off D(1).
fn classical_datum(
    t: WeylType,
    c: Scalar,
    factors: &[(u32, u32, u32)],
    index_a: Option<TypeAIndex>,
    index_bd: Option<SymbolPair>,
) -> Result<SspDatum> {
    let p_factors = FactoredPoly::from_factors(factors);
    let p_expanded = p_factors.expand()?;
    let deg = p_factors.degree();
    let rank = t.rank();
    assert!(deg >= rank && (deg - rank) % 2 == 0, "deg P = 2a + #I fails for {t}");
    let a = (deg - rank) / 2;
    let label = match (&index_a, &index_bd) {
        (Some(x), _) => x.to_string(),
        (_, Some(s)) => s.to_string(),
        _ => unreachable!(),
    };
    let mut datum = SspDatum {
        weyl_type: t,
        label,
        index_a,
        index_bd,
        dim: BigInt::zero(),
        a,
        b: None,
        c,
        p_factors: Some(p_factors),
        p_expanded,
    };
    let rec = reconstruct_degree(&datum)?;
    let dim = rec.poly.eval(&Scalar::one())?;
    datum.dim = dim
        .as_bigint()
        .cloned()
        .ok_or_else(|| Error::VerificationFailure(format!("{t}: D(1) is not an integer")))?;
    Ok(datum)
}

fn h4_datum() -> Result<SspDatum> {
    let lambda = Scalar::golden_ratio();
    // c = 120/(13 − 8λ)
    let thirteen_minus = Scalar::from_i64(13)
        .sub(&Scalar::from_i64(8).mul(&lambda)?)?;
    let c = Scalar::from_i64(120).div(&thirteen_minus)?;
    // P = (u+1)^4 (u²+u+1)² (u²+λu+1)² (u²+((√5−1)/2)u+1)²
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let neg_lambda_tilde = Scalar::root5(-half.clone(), half); // (√5−1)/2
    let quad = |mid: Scalar| UniPoly::from_coeffs(vec![Scalar::one(), mid, Scalar::one()]);
    let mut p = UniPoly::one();
    for _ in 0..4 {
        p = p.mul(&UniPoly::from_i64_coeffs(&[1, 1]))?;
    }
    for factor in [
        quad(Scalar::one()),
        quad(lambda),
        quad(neg_lambda_tilde),
    ] {
        p = p.mul(&factor)?.mul(&factor)?;
    }
    Ok(SspDatum {
        weyl_type: WeylType::H4,
        label: "dim24".into(),
        index_a: None,
        index_bd: None,
        dim: BigInt::from(24),
        a: 6,
        b: None,
        c,
        p_factors: None,
        p_expanded: p,
    })
}

fn i2_datum(p: u32) -> Result<SspDatum> {
    let theta = Scalar::two_cos(p);
    // c = p/((1−ξ)(1−ξ⁻¹)) = p/(2−θ)
    let c = Scalar::from_i64(p as i64)
        .div(&Scalar::from_i64(2).sub(&theta)?)?;
    let poly = UniPoly::from_i64_coeffs(&[1, 1])
        .mul(&UniPoly::from_i64_coeffs(&[1, 1]))?
        .mul(&UniPoly::from_coeffs(vec![Scalar::one(), theta, Scalar::one()]))?;
    Ok(SspDatum {
        weyl_type: WeylType::I2(p),
        label: "dim2".into(),
        index_a: None,
        index_bd: None,
        dim: BigInt::from(2),
        a: 1,
        b: None,
        c,
        p_factors: None,
        p_expanded: poly,
    })
}

/// D = u^a · Π(u^{eᵢ+1}−1) / ((−1)^{deg P} · c · P(−u)), by exact division.
pub fn reconstruct_degree(d: &SspDatum) -> Result<ReconstructedDegree> {
    let num = UniPoly::monomial(Scalar::one(), d.a).mul(&poincare_numerator(d.weyl_type)?)?;
    let deg_p = d.p_expanded.degree().ok_or(Error::ZeroPolynomial)?;
    let sign = if deg_p % 2 == 0 { 1 } else { -1 };
    let den = d
        .p_expanded
        .subst_neg_u()
        .scale(&d.c)?
        .scale(&Scalar::from_i64(sign))?;
    let poly = num.exact_div(&den)?;
    let gamma = poly.val_at_minus_one()?;
    Ok(ReconstructedDegree { poly, gamma })
}

/// Generic degree of the partition λ of n via the q-hook formula:
/// D_λ(u) = u^{n(λ)} · [n]!_u / Π_cells [h(c)]_u.
pub fn generic_degree_a(parts: &[u32]) -> Result<UniPoly> {
    assert!(parts.windows(2).all(|w| w[0] >= w[1]), "parts descending");
    let n: u32 = parts.iter().sum();
    assert!(n >= 1);
    let n_lambda: usize = parts
        .iter()
        .enumerate()
        .map(|(i, &p)| i * p as usize)
        .sum();
    let mut num = UniPoly::monomial(Scalar::one(), n_lambda);
    for k in 2..=n as usize {
        num = num.mul(&UniPoly::q_int(k))?;
    }
    let conjugate: Vec<u32> = (1..=parts[0])
        .map(|j| parts.iter().filter(|&&p| p >= j).count() as u32)
        .collect();
    let mut den = UniPoly::one();
    for (i, &row) in parts.iter().enumerate() {
        for j in 1..=row {
            let hook = row - j + conjugate[(j - 1) as usize] - i as u32;
            den = den.mul(&UniPoly::q_int(hook as usize))?;
        }
    }
    num.exact_div(&den)
}

pub fn gamma_exceptions() -> &'static [(WeylType, &'static [&'static str])] {
    GAMMA_EXCEPTIONS
}

/// Combined datum of a product of irreducible factors.
#[derive(Debug, Clone)]
pub struct ProductDatum {
    pub superspecial: bool,
    pub a: usize,
    pub c: Scalar,
    pub deg_p: usize,
    pub p_factors: Option<FactoredPoly>,
    pub op_orbit_count: usize,
    pub gamma: usize,
}

/// Superspecial iff every factor is; the combined invariants are additive
/// (a, r, γ, deg P) or multiplicative (c, P).
pub fn product_rule(factors: &[WeylType]) -> Result<ProductDatum> {
    let mut out = ProductDatum {
        superspecial: true,
        a: 0,
        c: Scalar::one(),
        deg_p: 0,
        p_factors: Some(FactoredPoly::one()),
        op_orbit_count: 0,
        gamma: 0,
    };
    for &t in factors {
        let (ok, _) = superspecial_witness(t);
        if !ok {
            out.superspecial = false;
            out.p_factors = None;
            return Ok(out);
        }
        let d = superspecial_datum(t)?;
        let rec = reconstruct_degree(&d)?;
        out.a += d.a;
        out.c = out.c.mul(&d.c)?;
        out.deg_p += d.p_expanded.degree().unwrap_or(0);
        out.p_factors = match (out.p_factors.take(), &d.p_factors) {
            (Some(acc), Some(f)) => Some(acc.mul(f)?),
            _ => None,
        };
        out.op_orbit_count += group_data(t)?.op_orbit_count;
        out.gamma += rec.gamma;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Verification suites
// ---------------------------------------------------------------------------

/// Shared datum checks: degree shape, coefficient nonnegativity, shape
/// factorization (crystallographic), reconstruction, D(1), γ = r.
pub fn datum_checks(report: &mut VerificationReport, d: &SspDatum) -> Result<()> {
    let t = d.weyl_type;
    let rank = t.rank();
    let deg = d.p_expanded.degree().unwrap_or(0);
    report.push(
        format!("{t}/degP"),
        (2 * d.a + rank).to_string(),
        deg.to_string(),
        "identity",
    );
    let nonneg = d.p_expanded.coeffs().iter().all(|c| c.sign() >= 0);
    report.check(&format!("{t}/P_nonneg"), nonneg, "negative coefficient", "identity");
    if t.is_crystallographic() || t == WeylType::H3 {
        let c_int = d.c.as_bigint().cloned().ok_or_else(|| {
            Error::VerificationFailure(format!("{t}: c is not an integer"))
        })?;
        match shape_factorize(&d.p_expanded, &c_int) {
            Ok(f) => {
                let ok = f.expand()? == d.p_expanded;
                report.check(&format!("{t}/shape_factorization"), ok, "expansion mismatch", "identity");
            }
            Err(_) => {
                report.check(&format!("{t}/shape_factorization"), false, "no admissible factorization", "identity");
            }
        }
    }
    match reconstruct_degree(d) {
        Ok(rec) => {
            let dim = rec.poly.eval(&Scalar::one())?;
            report.push(
                format!("{t}/dim"),
                d.dim.to_string(),
                match dim.as_bigint() {
                    Some(v) => v.to_string(),
                    None => format!("{dim}"),
                },
                "table",
            );
            if t.is_crystallographic() {
                let r = group_data(t)?.op_orbit_count;
                report.push(format!("{t}/gamma"), r.to_string(), rec.gamma.to_string(), "identity");
            }
        }
        Err(e) => {
            report.check(&format!("{t}/reconstruction"), false, &e.to_string(), "identity");
        }
    }
    Ok(())
}

/// Brute-force verification of the α bounds, the uniqueness of the
/// maximizer shape, the datum invariants, and (type A) the q-hook γ oracle.
pub fn maximality_suite(t: WeylType, guard: u32) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("maximality");
    let (is_ssp, _) = superspecial_witness(t);
    match t {
        WeylType::A(n) => {
            let (max, maximizers) = max_alpha_a(n, guard)?;
            let bound = (n as i64) / 2;
            report.check(&format!("{t}/alpha_bound"), max <= bound, &format!("max {max} > {bound}"), "oracle");
            let shape_count = maximizers.iter().filter(|x| x.is_max_shape()).count();
            let unique_ok = if is_ssp {
                maximizers.len() == 1 && shape_count == 1 && max == bound
            } else {
                shape_count == 0 || max < bound
            };
            report.check(&format!("{t}/maximizer_shape"), unique_ok, &format!("maximizers {maximizers:?}"), "oracle");
            // q-hook oracle: γ of the generic degree equals α of the index set
            let mut all_match = true;
            for parts in partitions(n) {
                let idx = TypeAIndex::from_partition(&parts);
                let gamma = generic_degree_a(&parts)?.val_at_minus_one()?;
                if gamma as i64 != idx.alpha() {
                    all_match = false;
                }
            }
            report.check(&format!("{t}/qhook_gamma_eq_alpha"), all_match, "mismatch", "oracle");
        }
        WeylType::B(n) | WeylType::D(n) => {
            let defect = if matches!(t, WeylType::B(_)) { 1 } else { 0 };
            let (max, maximizers) = max_alpha_bd(n, defect, guard)?;
            let bound = 2 * ((n as i64) / 2);
            report.check(&format!("{t}/alpha_bound"), max <= bound, &format!("max {max} > {bound}"), "oracle");
            let shape_count = maximizers.iter().filter(|s| s.is_max_shape()).count();
            let unique_ok = if is_ssp {
                maximizers.len() == 1 && shape_count == 1 && max == bound
            } else {
                shape_count == 0 || max < bound
            };
            report.check(&format!("{t}/maximizer_shape"), unique_ok, &format!("maximizers {maximizers:?}"), "oracle");
        }
        _ => {}
    }
    if is_ssp {
        let d = superspecial_datum(t)?;
        datum_checks(&mut report, &d)?;
    }
    Ok(report)
}

/// Closed-form degree identities for the B/D factor products.
pub fn bd_degree_closed_forms(k_max: u32) -> VerificationReport {
    let mut report = VerificationReport::new("bd_closed_forms");
    for k in 1..=k_max as u64 {
        let sum_b: u64 = (1..=2 * k).map(|j| j * (2 * k + 1 - j)).sum();
        report.push(
            format!("B/k={k}/degP"),
            (2 * k * (k + 1) * (2 * k + 1) / 3).to_string(),
            sum_b.to_string(),
            "identity",
        );
        let sum_d: u64 = (1..2 * k).map(|j| j * (2 * k - j)).sum();
        report.push(
            format!("D/k={k}/degP"),
            (k * (4 * k * k - 1) / 3).to_string(),
            sum_d.to_string(),
            "identity",
        );
    }
    report
}

/// Noncrystallographic suite: exact reconstruction over ℚ(√5) and the real
/// cyclotomic fields, the c identities, and the γ reading comparison.
pub fn noncrystallographic_suite() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("noncrystal");
    let mut types = vec![WeylType::H3, WeylType::H4];
    types.push(WeylType::I2(5));
    types.extend((7..=31).map(WeylType::I2));
    for t in types {
        let d = superspecial_datum(t)?;
        datum_checks(&mut report, &d)?;
        let rec = reconstruct_degree(&d)?;
        let gd = group_data(t)?;
        // which reading of γ does the reconstruction satisfy
        report.push(
            format!("{t}/gamma_vs_op_orbits"),
            gd.op_orbit_count.to_string(),
            rec.gamma.to_string(),
            "identity",
        );
        let matches_rank = rec.gamma == gd.simple_reflection_count;
        report.push(
            format!("{t}/gamma_reading"),
            if gd.op_orbit_count == gd.simple_reflection_count {
                "rank".to_string()
            } else {
                "op_orbits_only".to_string()
            },
            if matches_rank { "rank".to_string() } else { "op_orbits_only".to_string() },
            "identity",
        );
        if let WeylType::I2(p) = t {
            // c·(1−ξ)(1−ξ⁻¹) = p, i.e. c·(2−θ) = p
            let theta = Scalar::two_cos(p);
            let lhs = d.c.mul(&Scalar::from_i64(2).sub(&theta)?)?;
            report.push(
                format!("{t}/c_identity"),
                format!("{}", p),
                format!("{lhs}"),
                "identity",
            );
            // c = Π_{t=2}^{p−2}(1−ξ^t), paired into real factors 2−(ξ^t+ξ^{−t})
            let prod = dihedral_c_product(p)?;
            report.check(&format!("{t}/c_product_form"), prod == d.c, "product mismatch", "identity");
        }
        if t == WeylType::H4 {
            let lambda = Scalar::golden_ratio();
            let thirteen_minus = Scalar::from_i64(13).sub(&Scalar::from_i64(8).mul(&lambda)?)?;
            let check = d.c.mul(&thirteen_minus)?;
            report.push("H4/c_identity".into(), "120".into(), format!("{check}"), "identity");
            // printed alternative c = 120(5+8λ): (13−8λ)(5+8λ) = 1
            let five_plus = Scalar::from_i64(5).add(&Scalar::from_i64(8).mul(&lambda)?)?;
            let unit = thirteen_minus.mul(&five_plus)?;
            report.push("H4/c_printed_form".into(), "1".into(), format!("{unit}"), "identity");
        }
    }
    Ok(report)
}

/// Π_{t=2}^{p−2}(1−ξ^t) as an element of the real cyclotomic field, via the
/// pairing (1−ξ^t)(1−ξ^{p−t}) = 2 − (ξ^t + ξ^{−t}).
pub fn dihedral_c_product(p: u32) -> Result<Scalar> {
    let theta = Scalar::two_cos(p);
    // z_t = ξ^t + ξ^{−t} satisfies z_1 = θ, z_{t+1} = θ·z_t − z_{t−1}
    let mut z_prev = Scalar::from_i64(2);
    let mut z_cur = theta.clone();
    let mut prod = Scalar::one();
    let half = p / 2;
    for _t in 2..=half {
        let z_next = theta.mul(&z_cur)?.sub(&z_prev)?;
        z_prev = z_cur;
        z_cur = z_next;
        // z_cur now equals z_t
        prod = prod.mul(&Scalar::from_i64(2).sub(&z_cur)?)?;
    }
    if p % 2 == 0 {
        // the middle factor 1−ξ^{p/2} = 2 is already counted once in the
        // pairing loop as 2−z_{p/2} = 2−(−2) = 4 = 2·2, which double-counts;
        // correct by dividing once by 2
        prod = prod.div(&Scalar::from_i64(2))?;
    }
    Ok(prod)
}

/// All irreducible superspecial types up to the given rank.
pub fn superspecial_table(max_rank: u32) -> Vec<(WeylType, Option<u32>)> {
    let mut out = vec![];
    for n in 1..=max_rank + 1 {
        if let (true, k) = superspecial_witness(WeylType::A(n)) {
            if n - 1 <= max_rank {
                out.push((WeylType::A(n), k));
            }
        }
    }
    for n in 2..=max_rank {
        if let (true, k) = superspecial_witness(WeylType::B(n)) {
            out.push((WeylType::B(n), k));
        }
    }
    for n in 4..=max_rank {
        if let (true, k) = superspecial_witness(WeylType::D(n)) {
            out.push((WeylType::D(n), k));
        }
    }
    for &t in WeylType::all_exceptional() {
        if t.rank() as u32 <= max_rank {
            out.push((t, None));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witnesses() {
        assert_eq!(superspecial_witness(WeylType::B(6)), (true, Some(2)));
        assert_eq!(superspecial_witness(WeylType::A(5)), (false, None));
        assert_eq!(superspecial_witness(WeylType::D(9)), (true, Some(3)));
        assert_eq!(superspecial_witness(WeylType::A(6)), (true, Some(3)));
        assert_eq!(superspecial_witness(WeylType::G2), (true, None));
    }

    #[test]
    fn g2_datum_and_reconstruction() {
        let d = superspecial_datum(WeylType::G2).unwrap();
        assert_eq!(d.a, 1);
        assert_eq!(d.c, Scalar::from_i64(6));
        assert_eq!(d.dim, BigInt::from(2));
        let rec = reconstruct_degree(&d).unwrap();
        let sixth = Scalar::from_ratio(1, 6);
        let expect = UniPoly::from_i64_coeffs(&[0, 1, 3, 4, 3, 1]).scale(&sixth).unwrap();
        assert_eq!(rec.poly, expect);
        assert_eq!(rec.gamma, 2);
    }

    #[test]
    fn b2_datum() {
        let d = superspecial_datum(WeylType::B(2)).unwrap();
        assert_eq!(d.c, Scalar::from_i64(2));
        assert_eq!(d.a, 1);
        assert_eq!(d.dim, BigInt::from(2));
        assert_eq!(d.index_bd, Some(SymbolPair::new([0, 2], [1])));
        let rec = reconstruct_degree(&d).unwrap();
        // u(u+1)²/2
        let half = Scalar::from_ratio(1, 2);
        let expect = UniPoly::from_i64_coeffs(&[0, 1, 2, 1]).scale(&half).unwrap();
        assert_eq!(rec.poly, expect);
        assert_eq!(rec.gamma, 2);
    }

    #[test]
    fn a2_datum_matches_qhook() {
        // W(A2) = S₃, superspecial index {1,3}, D = u(u+1)
        let d = superspecial_datum(WeylType::A(3)).unwrap();
        let rec = reconstruct_degree(&d).unwrap();
        assert_eq!(rec.poly, UniPoly::from_i64_coeffs(&[0, 1, 1]));
        assert_eq!(rec.gamma, 1);
        assert_eq!(generic_degree_a(&[2, 1]).unwrap(), rec.poly);
    }

    #[test]
    fn qhook_extremes() {
        assert_eq!(generic_degree_a(&[4]).unwrap(), UniPoly::one());
        // sign representation of S₄: u^6
        assert_eq!(
            generic_degree_a(&[1, 1, 1, 1]).unwrap(),
            UniPoly::monomial(Scalar::one(), 6)
        );
    }

    #[test]
    fn exceptional_data_consistent() {
        for &t in WeylType::all_exceptional() {
            let d = superspecial_datum(t).unwrap();
            let rec = reconstruct_degree(&d).unwrap();
            assert_eq!(
                rec.poly.eval(&Scalar::one()).unwrap(),
                Scalar::Int(d.dim.clone()),
                "{t}"
            );
            let r = group_data(t).unwrap().op_orbit_count;
            assert_eq!(rec.gamma, r, "{t}");
            assert_eq!(d.p_expanded.degree().unwrap(), 2 * d.a + t.rank(), "{t}");
        }
    }

    #[test]
    fn b6_degree_identity() {
        // deg P = 2k(k+1)(2k+1)/3 = 20 at k = 2, so a = 7
        let d = superspecial_datum(WeylType::B(6)).unwrap();
        assert_eq!(d.p_expanded.degree().unwrap(), 20);
        assert_eq!(d.a, 7);
    }

    #[test]
    fn h4_exact_field_checks() {
        let d = superspecial_datum(WeylType::H4).unwrap();
        let lambda = Scalar::golden_ratio();
        let thirteen_minus = Scalar::from_i64(13)
            .sub(&Scalar::from_i64(8).mul(&lambda).unwrap())
            .unwrap();
        assert_eq!(
            d.c.mul(&thirteen_minus).unwrap(),
            Scalar::from_i64(120)
        );
        let rec = reconstruct_degree(&d).unwrap();
        assert_eq!(rec.poly.eval(&Scalar::one()).unwrap(), Scalar::from_i64(24));
        assert_eq!(rec.gamma, 4);
    }

    #[test]
    fn i2_exact_field_checks() {
        for p in [5u32, 7, 8, 9, 12] {
            let d = superspecial_datum(WeylType::I2(p)).unwrap();
            let rec = reconstruct_degree(&d).unwrap();
            assert_eq!(rec.poly.eval(&Scalar::one()).unwrap(), Scalar::from_i64(2), "p={p}");
            let expect_gamma = group_data(WeylType::I2(p)).unwrap().op_orbit_count;
            assert_eq!(rec.gamma, expect_gamma, "p={p}");
            assert_eq!(dihedral_c_product(p).unwrap(), d.c, "p={p}");
        }
    }

    #[test]
    fn product_rule_cases() {
        let d = product_rule(&[WeylType::A(1)]).unwrap();
        assert!(d.superspecial);
        assert_eq!(d.a, 0);
        assert_eq!(d.deg_p, 0);

        let d = product_rule(&[WeylType::G2, WeylType::B(2)]).unwrap();
        assert!(d.superspecial);
        assert_eq!(d.c, Scalar::from_i64(12));
        assert_eq!(d.deg_p, 8);
        assert_eq!(d.gamma, 4);

        let d = product_rule(&[WeylType::G2, WeylType::A(5)]).unwrap();
        assert!(!d.superspecial);
    }

    #[test]
    fn maximality_a6_passes() {
        let r = maximality_suite(WeylType::A(6), 12).unwrap();
        assert!(r.all_passed(), "{:?}", r.cases.iter().filter(|c| !c.pass).collect::<Vec<_>>());
    }

    #[test]
    fn gamma_exception_list() {
        let map = gamma_exceptions();
        let e8: Vec<_> = map.iter().filter(|(t, _)| *t == WeylType::E8).collect();
        assert_eq!(e8[0].1, &["7168_w", "2688_y"]);
        assert!(map.iter().all(|(t, _)| !matches!(t, WeylType::B(_))));
    }

    #[test]
    fn table_ranks() {
        let table = superspecial_table(30);
        let a_ranks: Vec<u32> = table
            .iter()
            .filter_map(|(t, _)| match t {
                WeylType::A(n) => Some(n - 1),
                _ => None,
            })
            .collect();
        assert_eq!(a_ranks, vec![0, 2, 5, 9, 14, 20, 27]);
        let b_ranks: Vec<u32> = table
            .iter()
            .filter_map(|(t, _)| match t {
                WeylType::B(n) => Some(*n),
                _ => None,
            })
            .collect();
        assert_eq!(b_ranks, vec![2, 6, 12, 20, 30]);
        let d_ranks: Vec<u32> = table
            .iter()
            .filter_map(|(t, _)| match t {
                WeylType::D(n) => Some(*n),
                _ => None,
            })
            .collect();
        assert_eq!(d_ranks, vec![4, 9, 16, 25]);
    }
}
