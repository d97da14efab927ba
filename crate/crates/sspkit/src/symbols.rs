//! Index sets for Irr(W) in classical types: type-A index sets X, type-B/D
//! symbol pairs (X,Y), rank formulas, the α-invariant, enumeration, and the
//! exhaustive maximality certificates.

use std::collections::BTreeSet;
use std::fmt;

use crate::{Error, Result};

/// Finite set of distinct positive integers indexing Irr(S_n).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeAIndex {
    pub elements: BTreeSet<u32>,
}

impl TypeAIndex {
    pub fn new<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let elements: BTreeSet<u32> = iter.into_iter().collect();
        assert!(!elements.contains(&0), "type A indices are positive");
        TypeAIndex { elements }
    }

    /// n = ΣX − C(m, 2).
    pub fn rank(&self) -> i64 {
        let m = self.elements.len() as i64;
        let sum: i64 = self.elements.iter().map(|&x| x as i64).sum();
        sum - m * (m - 1) / 2
    }

    /// γ-candidate α from the parity decomposition of X.
    pub fn alpha(&self) -> i64 {
        let n = self.rank();
        let evens: Vec<i64> = self.elements.iter().filter(|&&x| x % 2 == 0).map(|&x| x as i64).collect();
        let odds: Vec<i64> = self.elements.iter().filter(|&&x| x % 2 == 1).map(|&x| x as i64).collect();
        let m0 = evens.len() as i64;
        let m1 = odds.len() as i64;
        // 2α is manifestly integral; α itself is an integer
        let twice = 2 * binom2(m0) - evens.iter().sum::<i64>() + 2 * binom2(m1)
            - odds.iter().sum::<i64>()
            + m1
            + 2 * floor_half(n);
        debug_assert!(twice % 2 == 0);
        twice / 2
    }

    /// Equality shape of the α bound: X = {1, 3, …, 2m−1}.
    pub fn is_max_shape(&self) -> bool {
        self.elements
            .iter()
            .enumerate()
            .all(|(i, &x)| x == 2 * i as u32 + 1)
    }

    /// Index set of a partition (parts descending): X = {λ'ᵢ + (i−1)} over
    /// ascending parts.
    pub fn from_partition(parts: &[u32]) -> Self {
        let mut asc: Vec<u32> = parts.to_vec();
        asc.sort();
        TypeAIndex::new(asc.iter().enumerate().map(|(i, &p)| p + i as u32))
    }

    /// Inverse of [`TypeAIndex::from_partition`] (parts descending).
    pub fn to_partition(&self) -> Vec<u32> {
        let mut parts: Vec<u32> = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, &x)| x - i as u32)
            .collect();
        parts.retain(|&p| p > 0);
        parts.reverse();
        parts
    }
}

impl fmt::Display for TypeAIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// Spin tag distinguishing the two type-D representations attached to a
/// degenerate pair X = Y.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Spin {
    Plus,
    Minus,
}

/// Symbol (X, Y) indexing Irr for types B (defect 1) and D (defect 0).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolPair {
    pub x: BTreeSet<u32>,
    pub y: BTreeSet<u32>,
    pub spin: Option<Spin>,
}

impl SymbolPair {
    pub fn new<I, J>(x: I, y: J) -> Self
    where
        I: IntoIterator<Item = u32>,
        J: IntoIterator<Item = u32>,
    {
        SymbolPair {
            x: x.into_iter().collect(),
            y: y.into_iter().collect(),
            spin: None,
        }
    }

    pub fn with_spin(mut self, spin: Spin) -> Self {
        self.spin = Some(spin);
        self
    }

    pub fn defect(&self) -> i64 {
        self.x.len() as i64 - self.y.len() as i64
    }

    /// Normal form requires 0 ∉ Y; cell constructions may emit symbols that
    /// violate it.
    pub fn is_normal_form(&self) -> bool {
        !self.y.contains(&0)
    }

    /// n = ΣX + ΣY − ⌊(m−1)²/4⌋ with m = #X + #Y.
    pub fn rank(&self) -> i64 {
        let m = (self.x.len() + self.y.len()) as i64;
        let sum: i64 = self.x.iter().chain(self.y.iter()).map(|&v| v as i64).sum();
        sum - (m - 1) * (m - 1) / 4
    }

    pub fn alpha(&self) -> i64 {
        let n = self.rank();
        let count = |s: &BTreeSet<u32>, parity: u32| s.iter().filter(|&&v| v % 2 == parity).count() as i64;
        let x0 = count(&self.x, 0);
        let x1 = count(&self.x, 1);
        let y0 = count(&self.y, 0);
        let y1 = count(&self.y, 1);
        let sum: i64 = self.x.iter().chain(self.y.iter()).map(|&v| v as i64).sum();
        binom2(x0) + binom2(x1) + binom2(y0) + binom2(y1) + x0 * y1 + x1 * y0 - sum
            + 2 * floor_half(n)
    }

    /// Equality shape of the α bound: alternating rows starting at 0.
    pub fn is_max_shape(&self) -> bool {
        let m = self.x.len() + self.y.len();
        if m == 0 {
            return false;
        }
        let want_x: BTreeSet<u32> = (0..m as u32).filter(|v| v % 2 == 0).collect();
        let want_y: BTreeSet<u32> = (0..m as u32).filter(|v| v % 2 == 1).collect();
        self.x == want_x && self.y == want_y
    }

    /// ({0} ∪ (X+1), {0} ∪ (Y+1)); preserves rank, defect and α.
    pub fn shift(&self) -> SymbolPair {
        let bump = |s: &BTreeSet<u32>| -> BTreeSet<u32> {
            std::iter::once(0).chain(s.iter().map(|&v| v + 1)).collect()
        };
        SymbolPair {
            x: bump(&self.x),
            y: bump(&self.y),
            spin: self.spin,
        }
    }

    pub fn row_string(s: &BTreeSet<u32>) -> String {
        let inner: Vec<String> = s.iter().map(|v| v.to_string()).collect();
        format!("{{{}}}", inner.join(","))
    }
}

impl fmt::Display for SymbolPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{})",
            SymbolPair::row_string(&self.x),
            SymbolPair::row_string(&self.y)
        )?;
        match self.spin {
            Some(Spin::Plus) => write!(f, "+"),
            Some(Spin::Minus) => write!(f, "-"),
            None => Ok(()),
        }
    }
}

fn binom2(m: i64) -> i64 {
    m * (m - 1) / 2
}

/// [n/2]: n/2 for even n, (n−1)/2 for odd n.
pub fn floor_half(n: i64) -> i64 {
    debug_assert!(n >= 0);
    n / 2
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// Partitions of n, parts descending.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = vec![];
    go(n, n, &mut vec![], &mut out);
    out
}

/// All type-A index sets of rank n; in bijection with partitions of n.
pub fn enumerate_a(n: u32) -> Vec<TypeAIndex> {
    let mut out: Vec<TypeAIndex> = partitions(n)
        .iter()
        .map(|p| TypeAIndex::from_partition(p))
        .collect();
    out.sort();
    out
}

/// Distinct-element subsets of {min_elem, min_elem+1, …} with the given
/// cardinality and sum, each returned ascending.
fn subsets_with_sum(min_elem: u32, size: usize, sum: i64) -> Vec<Vec<u32>> {
    fn go(next_min: u32, size: usize, sum: i64, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if size == 0 {
            if sum == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        // remaining elements are next_min < … strictly increasing
        let k = size as i64;
        let min_tail = k * next_min as i64 + k * (k - 1) / 2;
        if sum < min_tail {
            return;
        }
        // largest admissible first element keeps the rest ≥ first+1, …
        let mut v = next_min;
        loop {
            let rest_min = (k - 1) * (v as i64 + 1) + (k - 1) * (k - 2) / 2;
            if (v as i64) + rest_min > sum {
                break;
            }
            prefix.push(v);
            go(v + 1, size - 1, sum - v as i64, prefix, out);
            prefix.pop();
            v += 1;
        }
    }
    let mut out = vec![];
    if sum >= 0 {
        go(min_elem, size, sum, &mut vec![], &mut out);
    }
    out
}

/// All normal-form symbols (0 ∉ Y) of the given rank and defect. Row sizes
/// grow until the minimal achievable rank exceeds n. For defect 0 each
/// unordered pair appears once, with both spin tags when X = Y.
pub fn enumerate_bd(n: u32, defect: u8) -> Result<Vec<SymbolPair>> {
    match defect {
        1 if n >= 2 => {}
        0 if n >= 4 => {}
        _ => {
            return Err(Error::InvalidRank(
                format!("defect {defect}"),
                format!("rank {n} out of range"),
            ))
        }
    }
    let mut out: Vec<SymbolPair> = vec![];
    // k indexes the row sizes; the minimal achievable rank at each k equals k
    for k in 0..=(n as usize) {
        let (x_sz, y_sz) = match defect {
            1 => (k + 1, k),
            0 => {
                if k == 0 {
                    continue;
                }
                (k, k)
            }
            _ => unreachable!(),
        };
        let m = (x_sz + y_sz) as i64;
        let target = n as i64 + (m - 1) * (m - 1) / 4;
        if defect == 1 {
            for sx in 0..=target {
                let xs = subsets_with_sum(0, x_sz, sx);
                if xs.is_empty() {
                    continue;
                }
                let ys = subsets_with_sum(1, y_sz, target - sx);
                for x in &xs {
                    for y in &ys {
                        out.push(SymbolPair::new(x.iter().copied(), y.iter().copied()));
                    }
                }
            }
        } else {
            // unordered pairs of equal-size rows matched by complementary
            // row sums; 0 may occur in at most one row (the one stored as X)
            let pair_rows = |u: &Vec<u32>, v: &Vec<u32>, out: &mut Vec<SymbolPair>| {
                let u_has0 = u.first() == Some(&0);
                let v_has0 = v.first() == Some(&0);
                if u_has0 && v_has0 {
                    return; // not expressible with 0 ∉ Y
                }
                if u == v {
                    let base = SymbolPair::new(u.iter().copied(), v.iter().copied());
                    out.push(base.clone().with_spin(Spin::Plus));
                    out.push(base.with_spin(Spin::Minus));
                } else if v_has0 {
                    out.push(SymbolPair::new(v.iter().copied(), u.iter().copied()));
                } else {
                    out.push(SymbolPair::new(u.iter().copied(), v.iter().copied()));
                }
            };
            for s1 in 0..=target / 2 {
                let s2 = target - s1;
                let low = subsets_with_sum(0, x_sz, s1);
                if low.is_empty() {
                    continue;
                }
                if s1 == s2 {
                    for i in 0..low.len() {
                        for j in i..low.len() {
                            pair_rows(&low[i], &low[j], &mut out);
                        }
                    }
                } else {
                    let high = subsets_with_sum(0, x_sz, s2);
                    for u in &low {
                        for v in &high {
                            pair_rows(u, v, &mut out);
                        }
                    }
                }
            }
        }
    }
    debug_assert!(out.iter().all(|s| s.rank() == n as i64));
    out.sort();
    Ok(out)
}

/// Exhaustive α maximum over the type-A enumeration, with maximizers.
pub fn max_alpha_a(n: u32, guard: u32) -> Result<(i64, Vec<TypeAIndex>)> {
    if n > guard {
        return Err(Error::GuardExceeded(format!("n = {n} > guard {guard}")));
    }
    let all = enumerate_a(n);
    let max = all.iter().map(|x| x.alpha()).max().expect("n ≥ 1");
    let maximizers = all.into_iter().filter(|x| x.alpha() == max).collect();
    Ok((max, maximizers))
}

/// Exhaustive α maximum over the defect-1/0 enumeration, with maximizers.
pub fn max_alpha_bd(n: u32, defect: u8, guard: u32) -> Result<(i64, Vec<SymbolPair>)> {
    if n > guard {
        return Err(Error::GuardExceeded(format!("n = {n} > guard {guard}")));
    }
    let all = enumerate_bd(n, defect)?;
    let max = all.iter().map(|s| s.alpha()).max().expect("nonempty enumeration");
    let maximizers = all.into_iter().filter(|s| s.alpha() == max).collect();
    Ok((max, maximizers))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent partition counter (dense DP), used as the enumeration
    /// oracle.
    fn partition_count(n: u32) -> usize {
        let n = n as usize;
        let mut table = vec![0usize; n + 1];
        table[0] = 1;
        for part in 1..=n {
            for v in part..=n {
                table[v] += table[v - part];
            }
        }
        table[n]
    }

    #[test]
    fn rank_a_cases() {
        assert_eq!(TypeAIndex::new([1, 3, 5]).rank(), 6);
        assert_eq!(TypeAIndex::new([1]).rank(), 1);
        assert_eq!(TypeAIndex::new([2, 5]).rank(), 6);
    }

    #[test]
    fn alpha_a_cases() {
        assert_eq!(TypeAIndex::new([1, 3, 5]).alpha(), 3);
        assert_eq!(TypeAIndex::new([2]).alpha(), 0);
        assert_eq!(TypeAIndex::new([1]).alpha(), 0);
    }

    #[test]
    fn alpha_bd_cases() {
        assert_eq!(SymbolPair::new([0, 2], [1]).alpha(), 2);
        assert_eq!(SymbolPair::new([2], []).alpha(), 0);
        assert_eq!(SymbolPair::new([0, 1], [2]).alpha(), 0);
    }

    #[test]
    fn enumerate_a_matches_partition_count() {
        assert_eq!(enumerate_a(1), vec![TypeAIndex::new([1])]);
        let three: Vec<TypeAIndex> = enumerate_a(3);
        assert_eq!(
            three,
            vec![
                TypeAIndex::new([1, 2, 3]),
                TypeAIndex::new([1, 3]),
                TypeAIndex::new([3]),
            ]
        );
        for n in 1..=12 {
            assert_eq!(enumerate_a(n).len(), partition_count(n), "n = {n}");
        }
    }

    #[test]
    fn partition_round_trip() {
        for n in 1..=10 {
            for p in partitions(n) {
                let idx = TypeAIndex::from_partition(&p);
                assert_eq!(idx.to_partition(), p);
                assert_eq!(idx.rank(), n as i64);
            }
        }
    }

    #[test]
    fn enumerate_bd_rank2_defect1() {
        let symbols = enumerate_bd(2, 1).unwrap();
        let expect = vec![
            SymbolPair::new([0, 1], [2]),
            SymbolPair::new([0, 1, 2], [1, 2]),
            SymbolPair::new([0, 2], [1]),
            SymbolPair::new([2], []),
        ];
        assert_eq!(symbols, expect);
    }

    #[test]
    fn enumerate_bd_defect0_shapes() {
        let symbols = enumerate_bd(4, 0).unwrap();
        // ({0,2},{1,3}) of rank 4 is present; degenerate rank-2 pairs are not
        assert!(symbols.contains(&SymbolPair::new([0, 2], [1, 3])));
        for s in &symbols {
            assert_eq!(s.rank(), 4);
            assert!(s.is_normal_form());
            assert_eq!(s.defect(), 0);
        }
        // spin-tagged entries come in pairs
        let tagged: Vec<_> = symbols.iter().filter(|s| s.spin.is_some()).collect();
        assert!(tagged.len() % 2 == 0);
    }

    #[test]
    fn max_alpha_certificates() {
        let (max, maximizers) = max_alpha_a(6, 40).unwrap();
        assert_eq!(max, 3);
        assert_eq!(maximizers, vec![TypeAIndex::new([1, 3, 5])]);
        assert!(maximizers[0].is_max_shape());

        // 5 is not triangular: bound respected, no maximizer of the stated shape
        let (max5, maximizers5) = max_alpha_a(5, 40).unwrap();
        assert!(max5 <= 2);
        assert!(maximizers5.iter().all(|x| !x.is_max_shape()));

        let (maxb, maximizersb) = max_alpha_bd(6, 1, 40).unwrap();
        assert_eq!(maxb, 6);
        assert_eq!(maximizersb, vec![SymbolPair::new([0, 2, 4], [1, 3])]);
        assert!(maximizersb[0].is_max_shape());
    }

    #[test]
    fn shift_preserves_invariants() {
        let s = SymbolPair::new([2], []);
        let t = s.shift();
        assert_eq!(t, SymbolPair::new([0, 3], [0]));
        assert_eq!(t.rank(), s.rank());
        assert_eq!(t.defect(), s.defect());
        assert_eq!(t.alpha(), s.alpha());
        assert!(!t.is_normal_form());
    }

    #[test]
    fn rank_expression_identity() {
        // ⌊(m−1)²/4⌋ = [(m−1)²/2]/2 for every m
        for m in 0i64..=1000 {
            let sq = (m - 1) * (m - 1);
            // [(m−1)²/2] is even, so the second halving is exact
            assert_eq!(floor_half(sq) % 2, 0, "m = {m}");
            assert_eq!(sq / 4, floor_half(sq) / 2, "m = {m}");
        }
    }
}
