//! Topological classification of real and quaternionic bundles and the
//! component-count tables for real loci of moduli spaces.
//!
//! Over a curve whose real locus has n > 0 circles, a real bundle is
//! classified up to smooth isomorphism by (r, d, w₁) with the parity
//! constraint Σ w₁ = d mod 2, giving 2^{n−1} types for each (r, d);
//! quaternionic bundles need r and d both even. Over a curve without real
//! points, real bundles need even degree and quaternionic bundles need
//! d + r(g−1) even — at genus 1 both conditions collapse to "d even".
//!
//! The genus-1 component tables are computed from the curve; the genus ≥ 2
//! coprime table is exposed as a lookup with the component count n as a free
//! parameter, since no higher-genus curve model exists in this crate.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::moduli::{
    gcd_rank_degree, moduli_real_locus, LocusSpace, ModuliRealLocusReport,
};
use crate::picard::ModularTag;
use crate::torus::CurveSpec;

/// Topological type of a real bundle: rank, degree and the first
/// Stiefel–Whitney vector of its real part, one bit per circle of the real
/// locus in canonical order ({b=0} before {b=1/2}).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TopoTypeReal {
    pub rank: u32,
    pub degree: i64,
    pub w1: Vec<u8>,
}

impl TopoTypeReal {
    pub fn new(c: &CurveSpec, rank: u32, degree: i64, w1: Vec<u8>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        let n = c.kind().real_component_count();
        if w1.len() != n {
            return Err(Error::WrongW1Length {
                expected: n,
                found: w1.len(),
            });
        }
        if n > 0 {
            let sum: i64 = w1.iter().map(|&s| i64::from(s & 1)).sum();
            if (sum - degree).rem_euclid(2) != 0 {
                return Err(Error::ParityViolation);
            }
        } else if degree % 2 != 0 {
            return Err(Error::ParityViolation);
        }
        let w1 = w1.into_iter().map(|s| s & 1).collect();
        Ok(Self { rank, degree, w1 })
    }
}

/// Topological type of a quaternionic bundle (no extra invariant beyond rank
/// and degree).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TopoTypeQuat {
    pub rank: u32,
    pub degree: i64,
}

impl TopoTypeQuat {
    pub fn new(c: &CurveSpec, rank: u32, degree: i64, genus: u32) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        if !quaternionic_exists(c, rank, degree, genus) {
            return Err(Error::ParityViolation);
        }
        Ok(Self { rank, degree })
    }
}

/// All topological types of real bundles of rank r and degree d on the given
/// curve: 2^{n−1} types when the real locus has n ∈ {1, 2} circles, one type
/// for even degree and none for odd degree when it is empty.
pub fn enumerate_real_types(c: &CurveSpec, rank: u32, degree: i64) -> Vec<TopoTypeReal> {
    let n = c.kind().real_component_count();
    if n == 0 {
        return if degree % 2 == 0 {
            vec![TopoTypeReal {
                rank,
                degree,
                w1: Vec::new(),
            }]
        } else {
            Vec::new()
        };
    }
    let mut types = Vec::new();
    for bits in 0u32..(1 << n) {
        let w1: Vec<u8> = (0..n).map(|i| ((bits >> i) & 1) as u8).collect();
        let sum: i64 = w1.iter().map(|&s| i64::from(s)).sum();
        if (sum - degree).rem_euclid(2) == 0 {
            types.push(TopoTypeReal { rank, degree, w1 });
        }
    }
    types
}

/// Whether a quaternionic bundle of rank r and degree d exists on the given
/// curve at the given genus.
pub fn quaternionic_exists(c: &CurveSpec, rank: u32, degree: i64, genus: u32) -> bool {
    if c.kind().real_component_count() > 0 {
        rank.is_multiple_of(2) && degree % 2 == 0
    } else {
        (degree + i64::from(rank) * (i64::from(genus) - 1)) % 2 == 0
    }
}

/// Genus-1 component table for the locus of self-conjugate indecomposable
/// classes of rank r and degree d (equivalently, for the real locus of the
/// moduli space when r and d are coprime).
///
/// The indecomposable locus of (r,d) is a real-algebraic copy of
/// M_X(r',d'), so the component analysis is always complete, with d' = d/h
/// parity replacing d parity when h > 1.
pub fn component_table_genus1(
    c: &CurveSpec,
    rank: u32,
    degree: i64,
) -> Result<ModuliRealLocusReport> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    let h = gcd_rank_degree(rank, degree);
    let mut report = moduli_real_locus(c, rank / h, degree / i64::from(h))?;
    report.rank = rank;
    report.degree = degree;
    report.h = h;
    if h > 1 {
        report.space = LocusSpace::Indecomposables;
    }
    Ok(report)
}

/// One component of a higher-genus real locus in the coprime table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HigherGenusComponent {
    pub tag: ModularTag,
    /// Index of the component when n > 0: the w₁ vector of the real bundles
    /// it parametrizes.
    pub w1: Option<Vec<u8>>,
}

/// The coprime-case component-count table for genus ≥ 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HigherGenusReport {
    pub n: u32,
    pub genus: u32,
    pub rank: u32,
    pub degree: i64,
    pub count: u128,
    /// Individual components; enumerated only for n ≤ 16 (the count is
    /// always exact).
    pub components: Vec<HigherGenusComponent>,
}

/// Number (and nature) of connected components of the real locus of
/// M_X(r,d), gcd(r,d) = 1, on a genus-g ≥ 2 curve whose real locus has n
/// circles:
///
/// * n > 0: 2^{n−1} components, all real, indexed by w₁;
/// * n = 0, d odd, r(g−1) even: empty;
/// * n = 0, d odd, r(g−1) odd: one quaternionic component;
/// * n = 0, d even, r(g−1) odd: one real component;
/// * n = 0, d even, r(g−1) even: one real and one quaternionic component.
pub fn component_count_higher_genus(
    n: u32,
    genus: u32,
    rank: u32,
    degree: i64,
) -> Result<HigherGenusReport> {
    if genus < 2 {
        return Err(Error::GenusTooSmall(genus));
    }
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    if gcd_rank_degree(rank, degree) != 1 {
        return Err(Error::NotCoprime { rank, degree });
    }
    if n > genus + 1 {
        return Err(Error::TooManyComponents {
            n,
            genus,
            max: genus + 1,
        });
    }

    if n > 0 {
        let count = 1u128 << (n - 1);
        let components = if n <= 16 {
            (0u32..(1 << n))
                .filter_map(|bits| {
                    let w1: Vec<u8> = (0..n).map(|i| ((bits >> i) & 1) as u8).collect();
                    let sum: i64 = w1.iter().map(|&s| i64::from(s)).sum();
                    ((sum - degree).rem_euclid(2) == 0).then_some(HigherGenusComponent {
                        tag: ModularTag::Real,
                        w1: Some(w1),
                    })
                })
                .collect()
        } else {
            Vec::new()
        };
        return Ok(HigherGenusReport {
            n,
            genus,
            rank,
            degree,
            count,
            components,
        });
    }

    let d_odd = degree.rem_euclid(2) == 1;
    let rg_odd = (i64::from(rank) * (i64::from(genus) - 1)).rem_euclid(2) == 1;
    let tags: &[ModularTag] = match (d_odd, rg_odd) {
        (true, false) => &[],
        (true, true) => &[ModularTag::Quaternionic],
        (false, true) => &[ModularTag::Real],
        (false, false) => &[ModularTag::Real, ModularTag::Quaternionic],
    };
    Ok(HigherGenusReport {
        n,
        genus,
        rank,
        degree,
        count: tags.len() as u128,
        components: tags
            .iter()
            .map(|&tag| HigherGenusComponent { tag, w1: None })
            .collect(),
    })
}
