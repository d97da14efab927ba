//! The embedded tables: exceptional superspecial degree data, the
//! non-special γ = r exceptions, exceptional cell component lists, and
//! class descriptors for the exceptional types. Everything quantitative
//! that is not computed from a closed form lives in this one file so it
//! can be audited in a single place.

use crate::registry::WeylType;

/// Exceptional superspecial datum with integer c: label, dim, a, c and the
/// factor multiset of P as (s, l, multiplicity) triples.
pub struct ExcSspEntry {
    pub weyl_type: WeylType,
    pub label: &'static str,
    pub dim: u64,
    pub a: usize,
    pub b: u32,
    pub c: u64,
    pub p_factors: &'static [(u32, u32, u32)],
}

pub const EXC_SSP: &[ExcSspEntry] = &[
    ExcSspEntry {
        weyl_type: WeylType::E6,
        label: "80_7",
        dim: 80,
        a: 7,
        b: 7,
        c: 6,
        // (1+u)^3 (1+u^2)^2 (1+u^3)^3 (1+u+u^2)^2
        p_factors: &[(1, 2, 3), (2, 2, 2), (3, 2, 3), (1, 3, 2)],
    },
    ExcSspEntry {
        weyl_type: WeylType::E7,
        label: "512_11",
        dim: 512,
        a: 11,
        b: 11,
        c: 2,
        // (1+u)^2 (1+u^3)^2 (1+u^5) (1+u^7) (1+u^9)
        p_factors: &[(1, 2, 2), (3, 2, 2), (5, 2, 1), (7, 2, 1), (9, 2, 1)],
    },
    ExcSspEntry {
        weyl_type: WeylType::E8,
        label: "4480_16",
        dim: 4480,
        a: 16,
        b: 16,
        c: 120,
        // (1+u)^4 (1+u^2)^4 (1+u^3)^4 (1+u+u^2)^4 (1+u+u^2+u^3+u^4)^2
        p_factors: &[(1, 2, 4), (2, 2, 4), (3, 2, 4), (1, 3, 4), (1, 5, 2)],
    },
    ExcSspEntry {
        weyl_type: WeylType::F4,
        label: "12_4",
        dim: 12,
        a: 4,
        b: 4,
        c: 24,
        // (1+u)^4 (1+u^2)^2 (1+u+u^2)^2
        p_factors: &[(1, 2, 4), (2, 2, 2), (1, 3, 2)],
    },
    ExcSspEntry {
        weyl_type: WeylType::G2,
        label: "2_1",
        dim: 2,
        a: 1,
        b: 1,
        c: 6,
        // (1+u)^2 (1+u+u^2)
        p_factors: &[(1, 2, 2), (1, 3, 1)],
    },
    ExcSspEntry {
        weyl_type: WeylType::H3,
        label: "dim4",
        dim: 4,
        a: 3,
        b: 3,
        c: 2,
        // (1+u)(1+u^3)(1+u^5)
        p_factors: &[(1, 2, 1), (3, 2, 1), (5, 2, 1)],
    },
];

/// Non-special representations with γ = r; empty for every other
/// irreducible type.
pub const GAMMA_EXCEPTIONS: &[(WeylType, &[&str])] = &[
    (WeylType::E8, &["7168_w", "2688_y"]),
    (WeylType::F4, &["4_1", "16_1"]),
];

/// Parity of a component's b-invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BParity {
    Even,
    Odd,
}

impl BParity {
    pub fn of(v: u64) -> BParity {
        if v % 2 == 0 {
            BParity::Even
        } else {
            BParity::Odd
        }
    }

    pub fn sign(self) -> i64 {
        match self {
            BParity::Even => 1,
            BParity::Odd => -1,
        }
    }
}

/// Component of an exceptional cell: label, c, b parity (from the label
/// subscript), and whether the primed variant carries a distinct twin with
/// the same label.
pub struct ExcCellComponent {
    pub label: &'static str,
    pub c: u64,
    pub b_parity: BParity,
    pub twin_in_primed: bool,
}

pub struct ExcCell {
    pub weyl_type: WeylType,
    pub components: &'static [ExcCellComponent],
    /// false for simply laced types, which have no primed variant.
    pub has_primed: bool,
}

const fn comp(label: &'static str, c: u64, b: u64, twin: bool) -> ExcCellComponent {
    ExcCellComponent {
        label,
        c,
        b_parity: if b % 2 == 0 { BParity::Even } else { BParity::Odd },
        twin_in_primed: twin,
    }
}

pub const EXC_CELLS: &[ExcCell] = &[
    ExcCell {
        weyl_type: WeylType::E6,
        components: &[comp("80_7", 6, 7, false), comp("60_8", 2, 8, false), comp("10_9", 3, 9, false)],
        has_primed: false,
    },
    ExcCell {
        weyl_type: WeylType::E7,
        components: &[comp("512_11", 2, 11, false), comp("512_12", 2, 12, false)],
        has_primed: false,
    },
    ExcCell {
        weyl_type: WeylType::E8,
        components: &[
            comp("4480_16", 120, 16, false),
            comp("3150_18", 6, 18, false),
            comp("4200_18", 8, 18, false),
            comp("420_20", 5, 20, false),
            comp("7168_17", 12, 17, false),
            comp("1344_19", 4, 19, false),
            comp("2016_19", 6, 19, false),
        ],
        has_primed: false,
    },
    ExcCell {
        weyl_type: WeylType::F4,
        components: &[
            comp("12_4", 24, 4, false),
            comp("6_6", 3, 6, false),
            comp("9_6", 8, 6, true),
            comp("4_7", 4, 7, true),
            comp("16_5", 4, 5, false),
        ],
        has_primed: true,
    },
    ExcCell {
        weyl_type: WeylType::G2,
        components: &[
            comp("2_1", 6, 1, false),
            comp("2_2", 2, 2, false),
            comp("1_3", 3, 3, true),
        ],
        has_primed: true,
    },
];
