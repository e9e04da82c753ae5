//! Brute-force verification engines: grid fixed-point enumeration,
//! connectivity on grid circles, and exhaustive multiset enumeration for
//! symmetric products.
//!
//! Every involution in the crate is affine in lattice coordinates with
//! coefficients in (1/2)ℤ, so it maps the 1/N grid to itself for every even
//! N. Every fixed locus is a finite union of circles obtained by pinning one
//! lattice coordinate, so grid adjacency (two fixed points are neighbors when
//! they differ by exactly 1/N in a single coordinate) detects connected
//! components exactly once N is even. This is what lets a finite enumeration
//! stand in for topological connectivity, and it is why the analytic reports
//! elsewhere in the crate can be cross-checked wholesale.

use std::collections::HashMap;

use itertools::Itertools;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moduli::{eta_moduli, gcd_rank_degree, moduli_point, ModuliPoint};
use crate::picard::{eta_line, sigma_pic, PicClass};
use crate::torus::{torsion_points, CurveSpec, TorusPoint};

/// Enumeration budget for symmetric-product searches (number of multisets).
pub const SYM_ENUMERATION_BUDGET: u128 = 20_000_000;

/// Grid used by the oracle: the N-torsion lattice, N even so that the
/// half-integer circles are on-grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    resolution: u32,
}

impl GridSpec {
    pub fn new(resolution: u32) -> Result<Self> {
        if resolution < 2 || !resolution.is_multiple_of(2) {
            return Err(Error::BadGridResolution(resolution));
        }
        Ok(Self { resolution })
    }

    pub fn resolution(&self) -> u32 {
        self.resolution
    }

    pub fn points(&self) -> Vec<TorusPoint> {
        torsion_points(self.resolution)
    }
}

/// The involutions the oracle knows how to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "involution", rename_all = "snake_case")]
pub enum NamedInvolution {
    SigmaPoint,
    SigmaPic { degree: i64 },
    EtaLine,
    SigmaModuli { rank: u32, degree: i64 },
    EtaModuli { rank: u32 },
}

/// Result of a grid enumeration, sorted and deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "level", rename_all = "snake_case")]
pub enum FixedSet {
    Points { fixed: Vec<TorusPoint> },
    LineClasses { fixed: Vec<PicClass> },
    ModuliPoints { fixed: Vec<ModuliPoint> },
}

impl FixedSet {
    pub fn len(&self) -> usize {
        match self {
            FixedSet::Points { fixed } => fixed.len(),
            FixedSet::LineClasses { fixed } => fixed.len(),
            FixedSet::ModuliPoints { fixed } => fixed.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Torus coordinates suitable for component counting: the points
    /// themselves, line-class coordinates, or determinant coordinates of
    /// one-dimensional moduli loci (h = 1). None for genuine symmetric
    /// products, whose components are not unions of coordinate circles.
    pub fn coordinates_for_components(&self) -> Option<Vec<TorusPoint>> {
        match self {
            FixedSet::Points { fixed } => Some(fixed.clone()),
            FixedSet::LineClasses { fixed } => {
                Some(fixed.iter().map(|l| l.u().clone()).collect())
            }
            FixedSet::ModuliPoints { fixed } => {
                if fixed.iter().all(|m| m.h() == 1) {
                    Some(fixed.iter().map(|m| m.dets()[0].u().clone()).collect())
                } else {
                    None
                }
            }
        }
    }
}

/// Fixed points of σ on the grid.
pub fn fixed_torus_points(c: &CurveSpec, grid: GridSpec) -> Vec<TorusPoint> {
    let mut fixed: Vec<TorusPoint> = grid
        .points()
        .into_par_iter()
        .filter(|p| &c.sigma_point(p) == p)
        .collect();
    fixed.sort();
    fixed
}

/// Fixed points of the Galois involution on Pic^d, over grid coordinates.
pub fn fixed_line_classes(c: &CurveSpec, degree: i64, grid: GridSpec) -> Vec<PicClass> {
    let mut fixed: Vec<PicClass> = grid
        .points()
        .into_par_iter()
        .map(|u| PicClass::new(degree, u))
        .filter(|l| &sigma_pic(c, l) == l)
        .collect();
    fixed.sort();
    fixed
}

/// Fixed points of η₁ on Pic⁰, over grid coordinates.
pub fn fixed_eta_line_classes(c: &CurveSpec, grid: GridSpec) -> Vec<PicClass> {
    let mut fixed: Vec<PicClass> = grid
        .points()
        .into_par_iter()
        .map(|u| PicClass::new(0, u))
        .filter(|l| eta_line(c, l).is_ok_and(|img| &img == l))
        .collect();
    fixed.sort();
    fixed
}

/// Number of size-h multisets over a ground set of the given size,
/// C(size + h − 1, h), saturating on overflow.
pub fn multiset_count(ground_size: u128, h: u32) -> u128 {
    let mut count: u128 = 1;
    for k in 0..u128::from(h) {
        count = match count.checked_mul(ground_size + k) {
            Some(v) => v / (k + 1),
            None => return u128::MAX,
        };
    }
    count
}

fn check_sym_budget(ground_size: usize, h: u32) -> Result<()> {
    let count = multiset_count(ground_size as u128, h);
    if count > SYM_ENUMERATION_BUDGET {
        return Err(Error::EnumerationTooLarge {
            count,
            budget: SYM_ENUMERATION_BUDGET,
        });
    }
    Ok(())
}

/// All size-h index multisets fixed by the index map `image`: the map is
/// evaluated once per ground element, then the scan is pure index work,
/// parallel over the first index. `image[i] = None` marks an element whose
/// image left the ground set; no fixed multiset can contain it.
fn fixed_index_multisets(ground_size: usize, h: u32, image: &[Option<usize>]) -> Vec<Vec<usize>> {
    let mut fixed: Vec<Vec<usize>> = (0..ground_size)
        .into_par_iter()
        .flat_map_iter(|first| {
            (first..ground_size)
                .combinations_with_replacement(h as usize - 1)
                .filter_map(move |rest| {
                    let mut multiset = Vec::with_capacity(h as usize);
                    multiset.push(first);
                    multiset.extend(rest);
                    let mut mapped = Vec::with_capacity(h as usize);
                    for &i in &multiset {
                        mapped.push(image[i]?);
                    }
                    mapped.sort_unstable();
                    (mapped == multiset).then_some(multiset)
                })
        })
        .collect();
    fixed.sort_unstable();
    fixed
}

/// Index of each grid element's image under `f`, or None off-grid.
fn grid_image_indices<F>(ground: &[TorusPoint], f: F) -> Vec<Option<usize>>
where
    F: Fn(&TorusPoint) -> TorusPoint + Sync,
{
    let index: HashMap<&TorusPoint, usize> =
        ground.iter().enumerate().map(|(i, p)| (p, i)).collect();
    ground
        .par_iter()
        .map(|p| index.get(&f(p)).copied())
        .collect()
}

/// Fixed points of the Galois involution on M_X(r,d), by exhaustive
/// enumeration of determinant multisets with grid coordinates.
pub fn fixed_moduli_points(
    c: &CurveSpec,
    rank: u32,
    degree: i64,
    grid: GridSpec,
) -> Result<Vec<ModuliPoint>> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    let h = gcd_rank_degree(rank, degree);
    let d_prime = degree / i64::from(h);
    let ground = grid.points();
    check_sym_budget(ground.len(), h)?;
    let image = grid_image_indices(&ground, |u| {
        sigma_pic(c, &PicClass::new(d_prime, u.clone())).u().clone()
    });
    let fixed = fixed_index_multisets(ground.len(), h, &image)
        .into_iter()
        .map(|multiset| {
            let dets = multiset
                .into_iter()
                .map(|i| PicClass::new(d_prime, ground[i].clone()))
                .collect();
            moduli_point(rank, degree, dets).expect("grid multiset has the right shape")
        })
        .collect();
    Ok(fixed)
}

/// Fixed points of η_r on M_X(r,0), by exhaustive enumeration through the
/// moduli-level involution itself (deliberately not sharing the index
/// machinery above, so that symmetric-power claims about η can be checked
/// against [`fixed_multisets_of_involution`] as a second route).
pub fn fixed_eta_moduli_points(
    c: &CurveSpec,
    rank: u32,
    grid: GridSpec,
) -> Result<Vec<ModuliPoint>> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    let ground = grid.points();
    check_sym_budget(ground.len(), rank)?;
    let mut fixed: Vec<ModuliPoint> = ground
        .into_iter()
        .map(|u| PicClass::new(0, u))
        .combinations_with_replacement(rank as usize)
        .map(|dets| moduli_point(rank, 0, dets).expect("grid multiset has the right shape"))
        .filter(|m| eta_moduli(c, m).is_ok_and(|img| &img == m))
        .collect();
    fixed.sort();
    fixed.dedup();
    Ok(fixed)
}

/// Fixed multisets of the h-fold symmetric power of an arbitrary involution
/// on grid points, enumerated without any moduli-space machinery. This is
/// the independent route for symmetric-product claims: a multiset is fixed
/// iff applying the map elementwise and re-sorting reproduces it.
pub fn fixed_multisets_of_involution<F>(
    grid: GridSpec,
    h: u32,
    f: F,
) -> Result<Vec<Vec<TorusPoint>>>
where
    F: Fn(&TorusPoint) -> TorusPoint + Sync,
{
    let ground = grid.points();
    check_sym_budget(ground.len(), h)?;
    let image = grid_image_indices(&ground, f);
    let fixed = fixed_index_multisets(ground.len(), h, &image)
        .into_iter()
        .map(|multiset| multiset.into_iter().map(|i| ground[i].clone()).collect())
        .collect();
    Ok(fixed)
}

/// Dispatch a named involution to its enumeration.
pub fn fixed_points_on_grid(
    c: &CurveSpec,
    involution: NamedInvolution,
    grid: GridSpec,
) -> Result<FixedSet> {
    match involution {
        NamedInvolution::SigmaPoint => Ok(FixedSet::Points {
            fixed: fixed_torus_points(c, grid),
        }),
        NamedInvolution::SigmaPic { degree } => Ok(FixedSet::LineClasses {
            fixed: fixed_line_classes(c, degree, grid),
        }),
        NamedInvolution::EtaLine => Ok(FixedSet::LineClasses {
            fixed: fixed_eta_line_classes(c, grid),
        }),
        NamedInvolution::SigmaModuli { rank, degree } => Ok(FixedSet::ModuliPoints {
            fixed: fixed_moduli_points(c, rank, degree, grid)?,
        }),
        NamedInvolution::EtaModuli { rank } => Ok(FixedSet::ModuliPoints {
            fixed: fixed_eta_moduli_points(c, rank, grid)?,
        }),
    }
}

/// Connected components of a set of grid points under grid adjacency:
/// neighbors differ by exactly 1/N in one coordinate. Exact for finite
/// unions of coordinate circles.
pub fn grid_component_count(points: &[TorusPoint], grid: GridSpec) -> usize {
    grid_component_count_points(points, grid.resolution)
}

/// [`grid_component_count`] with a bare resolution, for callers that have
/// not built a [`GridSpec`] (the resolution need not be even here).
pub fn grid_component_count_points(points: &[TorusPoint], n: u32) -> usize {
    let to_lattice = |p: &TorusPoint| -> Option<(i64, i64)> {
        let a = p.a() * num_bigint::BigInt::from(n);
        let b = p.b() * num_bigint::BigInt::from(n);
        if a.is_integer() && b.is_integer() {
            Some((a.to_integer().to_i64()?, b.to_integer().to_i64()?))
        } else {
            None
        }
    };

    let mut index: HashMap<(i64, i64), usize> = HashMap::new();
    let mut off_grid = 0usize;
    for p in points {
        match to_lattice(p) {
            Some(key) => {
                let next = index.len();
                index.entry(key).or_insert(next);
            }
            // Off-grid points cannot have grid neighbors; each is isolated.
            None => off_grid += 1,
        }
    }

    let n = i64::from(n);
    let mut visited = vec![false; index.len()];
    let mut components = 0usize;
    for (&(i, j), &id) in &index {
        if visited[id] {
            continue;
        }
        components += 1;
        let mut stack = vec![(i, j)];
        visited[id] = true;
        while let Some((x, y)) = stack.pop() {
            let neighbors = [
                ((x + 1).rem_euclid(n), y),
                ((x - 1).rem_euclid(n), y),
                (x, (y + 1).rem_euclid(n)),
                (x, (y - 1).rem_euclid(n)),
            ];
            for nb in neighbors {
                if let Some(&nid) = index.get(&nb) {
                    if !visited[nid] {
                        visited[nid] = true;
                        stack.push(nb);
                    }
                }
            }
        }
    }
    components + off_grid
}
