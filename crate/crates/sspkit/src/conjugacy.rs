//! Concrete group models and the length-stratified searches: signed
//! permutation windows for types B and D, integer reflection matrices for
//! G2, F4 and E7, breadth-first enumeration by word length, and the
//! characteristic-polynomial and ellipticity tests.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::classify::{superspecial_datum, superspecial_witness};
use crate::poly::UniPoly;
use crate::registry::{group_data, WeylType};
use crate::report::VerificationReport;
use crate::scalar::Scalar;
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Signed permutations
// ---------------------------------------------------------------------------

/// Window model: entry i−1 holds w(i), a signed value with |w| a
/// permutation of 1..n.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    pub window: Vec<i32>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            window: (1..=n as i32).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    /// Signed image of i ∈ 1..n.
    pub fn apply(&self, i: i32) -> i32 {
        let v = self.window[(i.unsigned_abs() - 1) as usize];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    /// Composition (self ∘ rhs)(i) = self(rhs(i)).
    pub fn compose(&self, rhs: &SignedPermutation) -> SignedPermutation {
        SignedPermutation {
            window: (1..=self.n() as i32).map(|i| self.apply(rhs.apply(i))).collect(),
        }
    }

    /// Type B generators: s₀ negates position 1, sᵢ swaps positions i, i+1.
    pub fn generators_b(n: usize) -> Vec<SignedPermutation> {
        let mut gens = vec![];
        let mut s0 = SignedPermutation::identity(n);
        s0.window[0] = -1;
        gens.push(s0);
        for i in 1..n {
            let mut s = SignedPermutation::identity(n);
            s.window.swap(i - 1, i);
            gens.push(s);
        }
        gens
    }

    /// Type D generators: s₀' negates and swaps positions 1, 2, then the
    /// common swaps.
    pub fn generators_d(n: usize) -> Vec<SignedPermutation> {
        let mut gens = vec![];
        let mut s0 = SignedPermutation::identity(n);
        s0.window[0] = -2;
        s0.window[1] = -1;
        gens.push(s0);
        for i in 1..n {
            let mut s = SignedPermutation::identity(n);
            s.window.swap(i - 1, i);
            gens.push(s);
        }
        gens
    }

    pub fn sign_change_count(&self) -> usize {
        self.window.iter().filter(|&&v| v < 0).count()
    }

    /// Cycle lengths split by sign: a cycle is negative when the product of
    /// the signs met while traversing it is negative.
    pub fn cycle_type(&self) -> (Vec<u32>, Vec<u32>) {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut positive = vec![];
        let mut negative = vec![];
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut len = 0u32;
            let mut neg = false;
            let mut cur = start as i32;
            loop {
                seen[(cur.unsigned_abs() - 1) as usize] = true;
                let next = self.apply(cur.abs());
                if next < 0 {
                    neg = !neg;
                }
                len += 1;
                cur = next.abs();
                if cur as usize == start {
                    break;
                }
            }
            if neg {
                negative.push(len);
            } else {
                positive.push(len);
            }
        }
        positive.sort();
        negative.sort();
        (positive, negative)
    }

    /// Characteristic polynomial in the reflection representation of B(n):
    /// u^ℓ − 1 per positive cycle, u^ℓ + 1 per negative cycle.
    pub fn char_poly(&self) -> UniPoly {
        let (pos, neg) = self.cycle_type();
        let mut out = UniPoly::one();
        for l in pos {
            out = out
                .mul(&UniPoly::u_pow_minus_one(l as usize))
                .expect("integer polynomial product");
        }
        for l in neg {
            let mut f = UniPoly::monomial(Scalar::one(), l as usize);
            f = f.add(&UniPoly::one()).expect("integer polynomial sum");
            out = out.mul(&f).expect("integer polynomial product");
        }
        out
    }

    pub fn is_elliptic(&self) -> bool {
        let (pos, _) = self.cycle_type();
        pos.is_empty()
    }

    /// The n×n signed permutation matrix, columns indexed by source.
    pub fn to_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.n();
        let mut m = vec![vec![0i64; n]; n];
        for (j, &v) in self.window.iter().enumerate() {
            m[(v.unsigned_abs() - 1) as usize][j] = v.signum() as i64;
        }
        m
    }
}

// ---------------------------------------------------------------------------
// Matrix reflection groups
// ---------------------------------------------------------------------------

pub type Matrix = Vec<Vec<i64>>;

pub fn mat_identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            let v = a[i][k];
            if v == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += v * b[k][j];
            }
        }
    }
    out
}

fn cartan_matrix(t: WeylType) -> Option<Vec<Vec<i64>>> {
    // a[i][j] = 2(αᵢ, αⱼ)/(αᵢ, αᵢ)
    let chain = |n: usize, extra: &[(usize, usize, i64)]| -> Vec<Vec<i64>> {
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(i, j, v) in extra {
            a[i][j] = v;
        }
        a
    };
    match t {
        WeylType::G2 => Some(chain(2, &[(0, 1, -1), (1, 0, -3)])),
        WeylType::F4 => Some(chain(
            4,
            &[(0, 1, -1), (1, 0, -1), (1, 2, -1), (2, 1, -2), (2, 3, -1), (3, 2, -1)],
        )),
        WeylType::E7 => {
            // nodes 0..6 = chain 0-2-3-4-5-6 with node 1 attached to node 3
            let mut extra = vec![];
            for &(i, j) in &[(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 3)] {
                extra.push((i, j, -1));
                extra.push((j, i, -1));
            }
            Some(chain(7, &extra))
        }
        _ => None,
    }
}

/// Simple-reflection matrices acting on the root lattice in the basis of
/// simple roots: sᵢ changes only the i-th coordinate.
pub fn reflection_generators(t: WeylType) -> Result<Vec<Matrix>> {
    let cartan =
        cartan_matrix(t).ok_or_else(|| Error::InvalidRank(t.to_string(), "no matrix model".into()))?;
    let n = cartan.len();
    let mut gens = vec![];
    for i in 0..n {
        let mut m = mat_identity(n);
        for j in 0..n {
            m[i][j] -= cartan[i][j];
        }
        gens.push(m);
    }
    Ok(gens)
}

/// Characteristic polynomial det(uI − M), computed by the trace recursion;
/// every division in it is exact over the integers.
pub fn char_poly_matrix(m: &Matrix) -> UniPoly {
    let n = m.len();
    let big: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mul = |a: &Vec<Vec<BigInt>>, b: &Vec<Vec<BigInt>>| -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                if a[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
        out
    };
    let trace = |a: &Vec<Vec<BigInt>>| -> BigInt { (0..n).map(|i| a[i][i].clone()).sum() };
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut mk = big.clone();
    for k in 1..=n {
        let c = -trace(&mk) / BigInt::from(k);
        coeffs[n - k] = c.clone();
        if k < n {
            let mut shifted = mk.clone();
            for (i, row) in shifted.iter_mut().enumerate().take(n) {
                row[i] += &c;
            }
            mk = mul(&big, &shifted);
        }
    }
    UniPoly::from_coeffs(coeffs.into_iter().map(Scalar::Int).collect())
}

pub fn is_elliptic_matrix(m: &Matrix) -> bool {
    !char_poly_matrix(m).eval(&Scalar::one()).expect("integer eval").is_zero()
}

pub fn matrix_order(m: &Matrix) -> usize {
    let id = mat_identity(m.len());
    let mut cur = m.clone();
    let mut k = 1;
    while cur != id {
        cur = mat_mul(&cur, m);
        k += 1;
        assert!(k <= 10_000, "order runaway");
    }
    k
}

/// Positive roots in simple-root coordinates, by closing the simple roots
/// under the simple reflections.
pub fn positive_roots(t: WeylType) -> Result<Vec<Vec<i64>>> {
    let gens = reflection_generators(t)?;
    let n = gens.len();
    let apply = |m: &Matrix, v: &[i64]| -> Vec<i64> {
        (0..n).map(|i| (0..n).map(|j| m[i][j] * v[j]).sum()).collect()
    };
    let mut all: std::collections::BTreeSet<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    loop {
        let mut next = all.clone();
        for r in &all {
            for g in &gens {
                next.insert(apply(g, r));
            }
        }
        if next.len() == all.len() {
            break;
        }
        all = next;
    }
    Ok(all.into_iter().filter(|r| r.iter().all(|&v| v >= 0)).collect())
}

/// Coxeter length of a matrix group element: the number of positive roots
/// it sends negative.
pub fn matrix_length(t: WeylType, m: &Matrix) -> Result<usize> {
    let roots = positive_roots(t)?;
    let n = m.len();
    Ok(roots
        .iter()
        .filter(|r| {
            let image: Vec<i64> =
                (0..n).map(|i| (0..n).map(|j| m[i][j] * r[j]).sum()).collect();
            image.iter().all(|&v| v <= 0)
        })
        .count())
}

// ---------------------------------------------------------------------------
// Class descriptors and searches
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Descriptor {
    /// Multiset of negative cycle lengths; no positive cycles allowed.
    NegativeCycleType(Vec<u32>),
    CharPoly(UniPoly),
    CoxeterClass,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassDesc {
    pub weyl_type: WeylType,
    pub descriptor: Descriptor,
    pub m: usize,
    pub expected_size: Option<u64>,
}

/// Descriptor and minimal length of the distinguished elliptic class, for
/// the types with trivial opposition.
pub fn ssp_class(t: WeylType) -> Result<ClassDesc> {
    t.validate()?;
    let quad = |coeffs: &[i64]| UniPoly::from_i64_coeffs(coeffs);
    match t {
        WeylType::B(_) => {
            let (ok, witness) = superspecial_witness(t);
            if !ok {
                return Err(Error::NotSuperspecial(t.to_string()));
            }
            let k = witness.unwrap() as usize;
            Ok(ClassDesc {
                weyl_type: t,
                descriptor: Descriptor::NegativeCycleType((1..=k as u32).map(|i| 2 * i).collect()),
                m: k * (k + 1) * (2 * k + 1) / 3,
                expected_size: None,
            })
        }
        WeylType::D(_) => {
            let (ok, witness) = superspecial_witness(t);
            if !ok {
                return Err(Error::NotSuperspecial(t.to_string()));
            }
            let k = witness.unwrap() as usize;
            if k % 2 != 0 {
                return Err(Error::OppositionNontrivial(t.to_string()));
            }
            Ok(ClassDesc {
                weyl_type: t,
                descriptor: Descriptor::NegativeCycleType(
                    (1..=k as u32).map(|i| 2 * i - 1).collect(),
                ),
                m: 2 * k * (k * k - 1) / 3,
                expected_size: None,
            })
        }
        WeylType::G2 => Ok(ClassDesc {
            weyl_type: t,
            descriptor: Descriptor::CharPoly(quad(&[1, 1, 1])),
            m: 4,
            expected_size: Some(2),
        }),
        WeylType::F4 => Ok(ClassDesc {
            weyl_type: t,
            descriptor: Descriptor::CharPoly(
                quad(&[1, 0, 1]).mul(&quad(&[1, 0, 1])).expect("integer product"),
            ),
            m: 12,
            expected_size: Some(12),
        }),
        WeylType::E7 => Ok(ClassDesc {
            weyl_type: t,
            descriptor: Descriptor::CoxeterClass,
            m: 7,
            expected_size: None,
        }),
        WeylType::E8 => {
            let f = quad(&[1, -1, 1]);
            let sq = f.mul(&f).expect("integer product");
            Ok(ClassDesc {
                weyl_type: t,
                descriptor: Descriptor::CharPoly(sq.mul(&sq).expect("integer product")),
                m: 40,
                expected_size: Some(4480),
            })
        }
        _ => Err(Error::OppositionNontrivial(t.to_string())),
    }
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub m_found: usize,
    pub witness: Vec<usize>,
    pub size_found: Option<u64>,
    pub visited: u64,
}

enum Element {
    Signed(SignedPermutation),
    Mat(Matrix),
}

/// Full breadth-first enumeration of W by word length, reporting the first
/// depth at which the descriptor matches, one witness word, and the total
/// number of matches. Every match is asserted elliptic.
pub fn min_length_search(t: WeylType, desc: &ClassDesc, budget: u64) -> Result<SearchResult> {
    let order = group_data(t)?.order;
    if order > BigInt::from(budget) {
        let order_u64 = u64::try_from(&order).unwrap_or(u64::MAX);
        return Err(Error::BudgetExceeded(order_u64, budget));
    }
    let gens: Vec<Element> = match t {
        WeylType::B(n) => SignedPermutation::generators_b(n as usize)
            .into_iter()
            .map(Element::Signed)
            .collect(),
        WeylType::D(n) => SignedPermutation::generators_d(n as usize)
            .into_iter()
            .map(Element::Signed)
            .collect(),
        WeylType::G2 | WeylType::F4 | WeylType::E7 => reflection_generators(t)?
            .into_iter()
            .map(Element::Mat)
            .collect(),
        _ => {
            return Err(Error::InvalidRank(t.to_string(), "no search model".into()));
        }
    };
    let coxeter_poly = match desc.descriptor {
        Descriptor::CoxeterClass => {
            let mats = reflection_generators(t)?;
            let cox = mats.iter().fold(mat_identity(mats[0].len()), |acc, g| mat_mul(&acc, g));
            Some(char_poly_matrix(&cox))
        }
        _ => None,
    };
    let matches = |e: &Element| -> bool {
        match (&desc.descriptor, e) {
            (Descriptor::NegativeCycleType(want), Element::Signed(w)) => {
                let (pos, neg) = w.cycle_type();
                pos.is_empty() && &neg == want
            }
            (Descriptor::CharPoly(p), Element::Signed(w)) => w.char_poly() == *p,
            (Descriptor::CharPoly(p), Element::Mat(m)) => char_poly_matrix(m) == *p,
            (Descriptor::CoxeterClass, Element::Mat(m)) => {
                Some(char_poly_matrix(m)) == coxeter_poly
            }
            _ => false,
        }
    };
    let elliptic = |e: &Element| -> bool {
        match e {
            Element::Signed(w) => w.is_elliptic(),
            Element::Mat(m) => is_elliptic_matrix(m),
        }
    };
    let key = |e: &Element| -> Vec<i64> {
        match e {
            Element::Signed(w) => w.window.iter().map(|&v| v as i64).collect(),
            Element::Mat(m) => m.iter().flatten().copied().collect(),
        }
    };
    let mul_gen = |e: &Element, g: &Element| -> Element {
        match (e, g) {
            (Element::Signed(w), Element::Signed(s)) => Element::Signed(w.compose(s)),
            (Element::Mat(a), Element::Mat(b)) => Element::Mat(mat_mul(a, b)),
            _ => unreachable!(),
        }
    };
    let identity = match &gens[0] {
        Element::Signed(w) => Element::Signed(SignedPermutation::identity(w.n())),
        Element::Mat(m) => Element::Mat(mat_identity(m.len())),
    };

    // nodes: (element, parent index, generator index); depths parallel
    let mut nodes: Vec<(Element, usize, usize)> = vec![(identity, usize::MAX, usize::MAX)];
    let mut depths: Vec<usize> = vec![0];
    let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
    seen.insert(key(&nodes[0].0), 0);
    let mut frontier: Vec<usize> = vec![0];
    let mut first_match: Option<usize> = None;
    let mut match_count: u64 = 0;
    if matches(&nodes[0].0) {
        first_match = Some(0);
        match_count = 1;
    }
    let mut depth = 0;
    while !frontier.is_empty() {
        depth += 1;
        let mut next = vec![];
        for &idx in &frontier {
            for (gi, g) in gens.iter().enumerate() {
                let child = mul_gen(&nodes[idx].0, g);
                let k = key(&child);
                if seen.contains_key(&k) {
                    continue;
                }
                let node_idx = nodes.len();
                seen.insert(k, node_idx);
                if matches(&child) {
                    if !elliptic(&child) {
                        return Err(Error::VerificationFailure(format!(
                            "{t}: matched element at depth {depth} is not elliptic"
                        )));
                    }
                    match_count += 1;
                    if first_match.is_none() {
                        first_match = Some(node_idx);
                    }
                }
                nodes.push((child, idx, gi));
                depths.push(depth);
                next.push(node_idx);
            }
        }
        frontier = next;
    }
    let hit = first_match.ok_or_else(|| {
        Error::VerificationFailure(format!("{t}: descriptor matched no element"))
    })?;
    let mut witness = vec![];
    let mut cur = hit;
    while cur != 0 {
        witness.push(nodes[cur].2);
        cur = nodes[cur].1;
    }
    witness.reverse();
    Ok(SearchResult {
        m_found: depths[hit],
        witness,
        size_found: Some(match_count),
        visited: nodes.len() as u64,
    })
}

/// Coxeter element checks in the E7 matrix model: reduced length equals the
/// rank, the element is elliptic, and its order is the Coxeter number.
pub fn coxeter_check_e7() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("e7_coxeter");
    let gens = reflection_generators(WeylType::E7)?;
    let cox = gens.iter().fold(mat_identity(7), |acc, g| mat_mul(&acc, g));
    let len = matrix_length(WeylType::E7, &cox)?;
    report.push("E7/coxeter_length".into(), "7".into(), len.to_string(), "identity");
    report.check("E7/coxeter_elliptic", is_elliptic_matrix(&cox), "root 1", "identity");
    report.push("E7/coxeter_order".into(), "18".into(), matrix_order(&cox).to_string(), "oracle");
    let roots = positive_roots(WeylType::E7)?;
    report.push("E7/positive_roots".into(), "63".into(), roots.len().to_string(), "oracle");
    Ok(report)
}

/// Arithmetic identities on the embedded E8 data; no enumeration.
pub fn e8_numeric_checks() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("e8_data");
    let d = superspecial_datum(WeylType::E8)?;
    report.push(
        "E8/deg_p".into(),
        "40".into(),
        d.p_expanded.degree().unwrap_or(0).to_string(),
        "table",
    );
    let class = ssp_class(WeylType::E8)?;
    report.push("E8/m_eq_deg_p".into(), class.m.to_string(), "40".into(), "table");
    report.push(
        "E8/asserted_size".into(),
        d.dim.to_string(),
        class.expected_size.map(|v| v.to_string()).unwrap_or_default(),
        "table",
    );
    if let Descriptor::CharPoly(p) = &class.descriptor {
        report.push("E8/descriptor_degree".into(), "8".into(), p.degree().unwrap_or(0).to_string(), "identity");
        let at_one = p.eval(&Scalar::one())?;
        report.check("E8/descriptor_elliptic", !at_one.is_zero(), "root 1", "identity");
    }
    Ok(report)
}

/// The combined conjugacy suite for the acceptance-scale types.
pub fn conjugacy_suite(budget: u64) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("conj");
    for t in [
        WeylType::B(2),
        WeylType::B(6),
        WeylType::D(4),
        WeylType::G2,
        WeylType::F4,
    ] {
        let desc = ssp_class(t)?;
        let found = min_length_search(t, &desc, budget)?;
        report.push(format!("{t}/m"), desc.m.to_string(), found.m_found.to_string(), "oracle");
        if let Some(expected) = desc.expected_size {
            report.push(
                format!("{t}/class_size"),
                expected.to_string(),
                found.size_found.map(|v| v.to_string()).unwrap_or_default(),
                "oracle",
            );
        }
        let order = group_data(t)?.order;
        report.push(format!("{t}/visited"), order.to_string(), found.visited.to_string(), "oracle");
    }
    report.merge(coxeter_check_e7()?);
    report.merge(e8_numeric_checks()?);
    Ok(report)
}

pub fn search_to_json(t: WeylType, desc: &ClassDesc, found: &SearchResult) -> serde_json::Value {
    let descriptor = match &desc.descriptor {
        Descriptor::NegativeCycleType(v) => format!("negative cycles {v:?}"),
        Descriptor::CharPoly(p) => format!("char poly {p}"),
        Descriptor::CoxeterClass => "Coxeter class".to_string(),
    };
    serde_json::json!({
        "type": t.to_string(),
        "descriptor": descriptor,
        "m_expected": desc.m,
        "m_found": found.m_found,
        "witness": found.witness,
        "class_size": found.size_found,
        "visited": found.visited,
    })
}
