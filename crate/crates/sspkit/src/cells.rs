//! Constructible sums attached to the superspecial family: the component
//! lists of Z and Z' per type, built from the classical pair-swap recipes
//! and the embedded exceptional tables, plus the exact rational identity
//! checks Σ1/c = 1 and Σ±1/c = 0.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::classify::{superspecial_datum, superspecial_witness};
use crate::data::{BParity, EXC_CELLS};
use crate::registry::WeylType;
use crate::report::VerificationReport;
use crate::symbols::SymbolPair;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Variant {
    Z,
    Zprime,
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Variant::Z => write!(f, "Z"),
            Variant::Zprime => write!(f, "Z'"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellComponent {
    pub label: String,
    pub index: Option<SymbolPair>,
    pub c: BigInt,
    pub b_parity: BParity,
    /// Distinguishes same-named but distinct objects in primed variants.
    pub twin_tag: bool,
    pub normal_form: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellDatum {
    pub weyl_type: WeylType,
    pub variant: Variant,
    pub components: Vec<CellComponent>,
    /// The alternating-sign identity is stated only away from type A.
    pub a1_applicable: bool,
}

fn symbol_component(x: Vec<u32>, y: Vec<u32>, c: BigInt) -> CellComponent {
    let index = SymbolPair::new(x, y);
    let b_sum: u64 = index.y.iter().map(|&v| v as u64).sum();
    CellComponent {
        label: index.to_string(),
        b_parity: BParity::of(b_sum),
        normal_form: index.is_normal_form(),
        index: Some(index),
        c,
        twin_tag: false,
    }
}

/// Apply the pair-swap permutation selected by `mask` to `base`: bit i of
/// the mask swaps the entries 2i and 2i+1 of the window.
fn apply_mask(base: &[u32], mask: u32) -> Vec<u32> {
    let mut out = base.to_vec();
    for i in 0..base.len() / 2 {
        if mask >> i & 1 == 1 {
            out.swap(2 * i, 2 * i + 1);
        }
    }
    out
}

pub fn cell(t: WeylType, variant: Variant) -> Result<CellDatum> {
    t.validate()?;
    let (is_ssp, witness) = superspecial_witness(t);
    if !is_ssp {
        return Err(Error::NotSuperspecial(t.to_string()));
    }
    if variant == Variant::Zprime && t.is_simply_laced() {
        return Err(Error::VariantUnavailable);
    }
    match t {
        WeylType::A(_) => {
            let d = superspecial_datum(t)?;
            Ok(CellDatum {
                weyl_type: t,
                variant,
                components: vec![CellComponent {
                    label: d.label,
                    index: None,
                    c: BigInt::one(),
                    b_parity: BParity::Even,
                    twin_tag: false,
                    normal_form: true,
                }],
                a1_applicable: false,
            })
        }
        WeylType::B(_) => {
            let k = witness.unwrap();
            let c = BigInt::from(2).pow(k);
            let mut components = vec![];
            for mask in 0..1u32 << k {
                let comp = match variant {
                    Variant::Z => {
                        // σ permutes 1..2k within the pairs (1,2),…,(2k−1,2k)
                        let base: Vec<u32> = (1..=2 * k).collect();
                        let s = apply_mask(&base, mask);
                        let x = std::iter::once(0)
                            .chain((0..k as usize).map(|i| s[2 * i + 1]))
                            .collect();
                        let y = (0..k as usize).map(|i| s[2 * i]).collect();
                        symbol_component(x, y, c.clone())
                    }
                    Variant::Zprime => {
                        // σ permutes 0..2k−1 within the pairs (0,1),…,(2k−2,2k−1)
                        let base: Vec<u32> = (0..2 * k).collect();
                        let s = apply_mask(&base, mask);
                        let x = (0..k as usize)
                            .map(|i| s[2 * i])
                            .chain(std::iter::once(2 * k))
                            .collect();
                        let y = (0..k as usize).map(|i| s[2 * i + 1]).collect();
                        symbol_component(x, y, c.clone())
                    }
                };
                components.push(comp);
            }
            Ok(CellDatum {
                weyl_type: t,
                variant,
                components,
                a1_applicable: true,
            })
        }
        WeylType::D(_) => {
            let k = witness.unwrap();
            let c = BigInt::from(2).pow(k - 1);
            let mut components = vec![];
            for mask in 0..1u32 << (k - 1) {
                // σ permutes 1..2k−2 within the pairs (1,2),…,(2k−3,2k−2)
                let base: Vec<u32> = (1..=2 * k - 2).collect();
                let s = apply_mask(&base, mask);
                let x = std::iter::once(0)
                    .chain((0..(k - 1) as usize).map(|i| s[2 * i + 1]))
                    .collect();
                let y = (0..(k - 1) as usize)
                    .map(|i| s[2 * i])
                    .chain(std::iter::once(2 * k - 1))
                    .collect();
                components.push(symbol_component(x, y, c.clone()));
            }
            Ok(CellDatum {
                weyl_type: t,
                variant,
                components,
                a1_applicable: true,
            })
        }
        _ => {
            let entry = EXC_CELLS
                .iter()
                .find(|e| e.weyl_type == t)
                .expect("every exceptional type has an embedded cell");
            if variant == Variant::Zprime && !entry.has_primed {
                return Err(Error::VariantUnavailable);
            }
            let components = entry
                .components
                .iter()
                .map(|comp| CellComponent {
                    label: comp.label.to_string(),
                    index: None,
                    c: BigInt::from(comp.c),
                    b_parity: comp.b_parity,
                    twin_tag: variant == Variant::Zprime && comp.twin_in_primed,
                    normal_form: true,
                })
                .collect();
            Ok(CellDatum {
                weyl_type: t,
                variant,
                components,
                a1_applicable: true,
            })
        }
    }
}

/// Σ1/c over the components.
pub fn harmonic_sum(cell: &CellDatum) -> BigRational {
    cell.components
        .iter()
        .map(|comp| BigRational::new(BigInt::one(), comp.c.clone()))
        .sum()
}

/// Σ(−1)^{b_parity}/c over the components.
pub fn alternating_sum(cell: &CellDatum) -> BigRational {
    cell.components
        .iter()
        .map(|comp| BigRational::new(BigInt::from(comp.b_parity.sign()), comp.c.clone()))
        .sum()
}

/// Exact rational check of the harmonic identity and, where applicable, the
/// alternating identity.
pub fn verify_identities(cell: &CellDatum) -> VerificationReport {
    let mut report = VerificationReport::new("cells");
    let tag = format!("{}/{}", cell.weyl_type, cell.variant);
    report.push(
        format!("{tag}/harmonic"),
        "1".to_string(),
        harmonic_sum(cell).to_string(),
        "identity",
    );
    if cell.a1_applicable {
        report.push(
            format!("{tag}/alternating"),
            "0".to_string(),
            alternating_sum(cell).to_string(),
            "identity",
        );
    }
    report
}

/// Structural checks on a classical cell: component count, constant c,
/// correct rank, pairwise distinctness, the superspecial member.
pub fn structural_checks(cell: &CellDatum, report: &mut VerificationReport) -> Result<()> {
    let t = cell.weyl_type;
    let tag = format!("{t}/{}", cell.variant);
    let mut seen = std::collections::BTreeSet::new();
    for comp in &cell.components {
        let key = (comp.label.clone(), comp.index.clone(), comp.twin_tag);
        if !seen.insert(key) {
            report.check(&format!("{tag}/distinct"), false, &comp.label, "identity");
            return Ok(());
        }
        if comp.c.sign() != num_bigint::Sign::Plus {
            return Err(Error::VerificationFailure(format!("{tag}: c not positive")));
        }
    }
    report.check(&format!("{tag}/distinct"), true, "", "identity");
    if let (true, Some(k)) = superspecial_witness(t) {
        match t {
            WeylType::B(n) | WeylType::D(n) => {
                let expect_count = match t {
                    WeylType::B(_) => 1usize << k,
                    _ => 1usize << (k - 1),
                };
                report.push(
                    format!("{tag}/component_count"),
                    expect_count.to_string(),
                    cell.components.len().to_string(),
                    "identity",
                );
                let rank_ok = cell
                    .components
                    .iter()
                    .all(|c| c.index.as_ref().map(|s| s.rank()) == Some(n as i64));
                report.check(&format!("{tag}/ranks"), rank_ok, "rank mismatch", "identity");
                let c_expect = match t {
                    WeylType::B(_) => BigInt::from(2).pow(k),
                    _ => BigInt::from(2).pow(k - 1),
                };
                let c_ok = cell.components.iter().all(|c| c.c == c_expect);
                report.check(&format!("{tag}/constant_c"), c_ok, "c varies", "identity");
            }
            _ => {}
        }
    }
    // the superspecial member appears exactly once
    let special = superspecial_datum(t)?;
    let hits = cell
        .components
        .iter()
        .filter(|c| match (&c.index, &special.index_bd) {
            (Some(i), Some(s)) => i == s,
            _ => c.label == special.label,
        })
        .count();
    report.push(format!("{tag}/special_member"), "1".to_string(), hits.to_string(), "identity");
    Ok(())
}

/// The full cell identity suite: both variants for every non simply laced
/// sample, Z for the simply laced ones.
pub fn cells_suite(b_k_max: u32, d_k_max: u32) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("cells");
    let mut targets: Vec<(WeylType, Variant)> = vec![
        (WeylType::A(6), Variant::Z),
        (WeylType::E6, Variant::Z),
        (WeylType::E7, Variant::Z),
        (WeylType::E8, Variant::Z),
        (WeylType::G2, Variant::Z),
        (WeylType::G2, Variant::Zprime),
        (WeylType::F4, Variant::Z),
        (WeylType::F4, Variant::Zprime),
    ];
    for k in 1..=b_k_max {
        targets.push((WeylType::B(k * k + k), Variant::Z));
        targets.push((WeylType::B(k * k + k), Variant::Zprime));
    }
    for k in 2..=d_k_max {
        targets.push((WeylType::D(k * k), Variant::Z));
    }
    for (t, variant) in targets {
        let c = cell(t, variant)?;
        report.merge(verify_identities(&c));
        structural_checks(&c, &mut report)?;
    }
    // B cells: the multisets {c} and {b_parity} agree between Z and Z'
    for k in 1..=b_k_max {
        let t = WeylType::B(k * k + k);
        let sorted = |v: Variant| -> Result<(Vec<BigInt>, Vec<BParity>)> {
            let c = cell(t, v)?;
            let mut cs: Vec<BigInt> = c.components.iter().map(|x| x.c.clone()).collect();
            let mut ps: Vec<BParity> = c.components.iter().map(|x| x.b_parity).collect();
            cs.sort();
            ps.sort();
            Ok((cs, ps))
        };
        let (cz, pz) = sorted(Variant::Z)?;
        let (czp, pzp) = sorted(Variant::Zprime)?;
        report.check(
            &format!("{t}/primed_multisets"),
            cz == czp && pz == pzp,
            "Z and Z' multisets differ",
            "identity",
        );
    }
    Ok(report)
}

pub fn cell_to_json(cell: &CellDatum) -> serde_json::Value {
    let comps: Vec<serde_json::Value> = cell
        .components
        .iter()
        .map(|c| {
            serde_json::json!({
                "label": c.label,
                "x": c.index.as_ref().map(|s| s.x.iter().collect::<Vec<_>>()),
                "y": c.index.as_ref().map(|s| s.y.iter().collect::<Vec<_>>()),
                "c": c.c.to_string(),
                "b_parity": match c.b_parity { BParity::Even => "even", BParity::Odd => "odd" },
                "twin": c.twin_tag,
                "normal_form": c.normal_form,
            })
        })
        .collect();
    serde_json::json!({
        "type": cell.weyl_type.to_string(),
        "variant": cell.variant.to_string(),
        "components": comps,
        "harmonic_sum": harmonic_sum(cell).to_string(),
        "alternating_sum": if cell.a1_applicable {
            serde_json::Value::String(alternating_sum(cell).to_string())
        } else {
            serde_json::Value::Null
        },
    })
}

pub fn cell_to_tsv(cell: &CellDatum) -> String {
    let mut out = String::from("label\tx\ty\tc\tb_parity\ttwin\tnormal_form\n");
    for c in &cell.components {
        let row = |s: Option<&std::collections::BTreeSet<u32>>| match s {
            Some(set) => SymbolPair::row_string(set),
            None => "-".to_string(),
        };
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            c.label,
            row(c.index.as_ref().map(|s| &s.x)),
            row(c.index.as_ref().map(|s| &s.y)),
            c.c,
            match c.b_parity {
                BParity::Even => "even",
                BParity::Odd => "odd",
            },
            c.twin_tag,
            c.normal_form,
        ));
    }
    out.push_str(&format!("# harmonic_sum\t{}\n", harmonic_sum(cell)));
    if cell.a1_applicable {
        out.push_str(&format!("# alternating_sum\t{}\n", alternating_sum(cell)));
    }
    out
}
