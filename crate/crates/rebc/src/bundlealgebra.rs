//! The Krull–Schmidt calculus of arbitrary bundles: formal direct sums of
//! indecomposable classes, slope and stability predicates, associated graded
//! objects and S-equivalence.
//!
//! A bundle decomposes into indecomposables uniquely up to permutation, so a
//! sorted multiset of [`IndecClass`] values is a complete isomorphism
//! invariant; every operation here works on that normal form. Inputs arrive
//! already expressed in indecomposables — nothing here decomposes cocycle
//! data.

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::indecomposable::{sigma_indec, IndecClass};
use crate::moduli::{moduli_point, ModuliPoint};
use crate::picard::PicClass;
use crate::torus::{CurveSpec, Rational};

/// A formal direct sum of indecomposable classes, in canonical sorted order.
/// Two formal bundles are isomorphic iff they are equal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormalBundle {
    summands: Vec<IndecClass>,
}

impl FormalBundle {
    pub fn new(summands: Vec<IndecClass>) -> Result<Self> {
        if summands.is_empty() {
            return Err(Error::EmptyBundle);
        }
        let mut summands = summands;
        summands.sort();
        Ok(Self { summands })
    }

    pub fn from_indec(e: IndecClass) -> Self {
        Self { summands: vec![e] }
    }

    pub fn summands(&self) -> &[IndecClass] {
        &self.summands
    }

    pub fn rank(&self) -> u32 {
        self.summands.iter().map(IndecClass::rank).sum()
    }

    pub fn degree(&self) -> i64 {
        self.summands.iter().map(IndecClass::degree).sum()
    }

    /// Slope μ = degree / rank, exactly.
    pub fn slope(&self) -> Rational {
        Rational::new(self.degree().into(), i64::from(self.rank()).into())
    }

    /// Canonical form (idempotent; the constructor already sorts).
    pub fn normal_form(&self) -> FormalBundle {
        self.clone()
    }
}

impl<'de> Deserialize<'de> for FormalBundle {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Wire {
            summands: Vec<IndecClass>,
        }
        let w = Wire::deserialize(deserializer)?;
        FormalBundle::new(w.summands).map_err(serde::de::Error::custom)
    }
}

/// Semi-stability test. Each indecomposable summand is semi-stable, and a
/// direct sum of semi-stable bundles is semi-stable exactly when all slopes
/// agree: a summand of larger slope is a destabilizing sub-bundle.
pub fn is_semistable(b: &FormalBundle) -> bool {
    let mu = b.slope();
    b.summands.iter().all(|e| e.slope() == mu)
}

/// Stability: a single stable summand (coprime rank and degree).
pub fn is_stable(b: &FormalBundle) -> bool {
    b.summands.len() == 1 && b.summands[0].is_stable()
}

/// Poly-stability: equal slopes and every summand stable.
pub fn is_polystable(b: &FormalBundle) -> bool {
    is_semistable(b) && b.summands.iter().all(IndecClass::is_stable)
}

/// Associated graded object of a semi-stable bundle, as a moduli point.
///
/// The Jordan–Hölder quotients of E' ⊗ F_h are h copies of E', so each
/// summand contributes h_i copies of its stable-factor determinant.
pub fn gr(b: &FormalBundle) -> Result<ModuliPoint> {
    if !is_semistable(b) {
        return Err(Error::NotSemistable);
    }
    let mut dets = Vec::new();
    for e in &b.summands {
        for _ in 0..e.h() {
            dets.push(e.stable_det().clone());
        }
    }
    moduli_point(b.rank(), b.degree(), dets)
}

/// S-equivalence of semi-stable bundles: equality of associated graded
/// objects.
pub fn s_equivalent(b1: &FormalBundle, b2: &FormalBundle) -> Result<bool> {
    Ok(gr(b1)? == gr(b2)?)
}

/// Direct sum: multiset union, re-normalized.
pub fn direct_sum(b1: &FormalBundle, b2: &FormalBundle) -> FormalBundle {
    let mut summands = b1.summands.clone();
    summands.extend(b2.summands.iter().cloned());
    FormalBundle::new(summands).expect("union of nonempty multisets is nonempty")
}

/// Dual, summand by summand.
pub fn dual(b: &FormalBundle) -> FormalBundle {
    let summands = b.summands.iter().map(IndecClass::dual).collect();
    FormalBundle::new(summands).expect("dual preserves the multiset size")
}

/// Twist by a degree-0 line bundle class, summand by summand (each stable
/// determinant shifts by its own r'ᵢ multiple of the twist coordinate).
pub fn twist(b: &FormalBundle, l: &PicClass) -> Result<FormalBundle> {
    let summands: Result<Vec<IndecClass>> = b.summands.iter().map(|e| e.twist(l)).collect();
    FormalBundle::new(summands?)
}

/// Conjugation, summand by summand. An involution on formal bundles.
pub fn sigma_bundle(c: &CurveSpec, b: &FormalBundle) -> FormalBundle {
    let summands = b.summands.iter().map(|e| sigma_indec(c, e)).collect();
    FormalBundle::new(summands).expect("conjugation preserves the multiset size")
}
