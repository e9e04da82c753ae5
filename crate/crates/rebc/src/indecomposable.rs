//! The indecomposable-bundle calculus over a real elliptic curve.
//!
//! Every indecomposable bundle of rank r and degree d is (up to isomorphism)
//! E' ⊗ F_h, where h = gcd(r,d), E' is stable of rank r' = r/h and degree
//! d' = d/h, and F_h is the unique indecomposable rank-h degree-0 bundle with
//! a one-dimensional space of sections. F_h is built by iterated extensions
//! of the trivial bundle, is self-dual, has trivial determinant, and carries
//! a canonical real structure, which is why conjugation acts on an
//! indecomposable class purely through its stable factor. An
//! [`IndecClass`] therefore stores (r, d, det E'), a complete invariant.
//!
//! Alternatively, an indecomposable class is a degree-0 twist of the
//! basepoint-normalized class of the same rank and degree; the twist is
//! well-defined up to the r'-torsion subgroup of Pic⁰ (r'² classes per
//! fiber).

use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use num_bigint::BigInt;

use crate::moduli::{gcd_rank_degree, moduli_point, ModuliPoint};
use crate::picard::{abel_jacobi, no_real_points_tag, sigma_pic, ModularTag, PicClass};
use crate::torus::{CurveSpec, Rational, TorusPoint};

/// An isomorphism class of indecomposable bundles: rank, degree, and the
/// determinant of the stable factor E'.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndecClass {
    rank: u32,
    degree: i64,
    stable_det: PicClass,
}

impl IndecClass {
    /// The stable-factor determinant must have degree d/gcd(r,d).
    pub fn new(rank: u32, degree: i64, stable_det: PicClass) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        let d_prime = degree / i64::from(gcd_rank_degree(rank, degree));
        if stable_det.degree() != d_prime {
            return Err(Error::WrongElementDegree {
                expected: d_prime,
                found: stable_det.degree(),
            });
        }
        Ok(Self {
            rank,
            degree,
            stable_det,
        })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn stable_det(&self) -> &PicClass {
        &self.stable_det
    }

    pub fn h(&self) -> u32 {
        gcd_rank_degree(self.rank, self.degree)
    }

    pub fn rank_prime(&self) -> u32 {
        self.rank / self.h()
    }

    pub fn degree_prime(&self) -> i64 {
        self.degree / i64::from(self.h())
    }

    /// Slope of the class, d/r.
    pub fn slope(&self) -> Rational {
        Rational::new(self.degree.into(), i64::from(self.rank).into())
    }

    /// Whether the class is stable (h = 1). Indecomposables are always
    /// semi-stable; stability is exactly coprimality of rank and degree.
    pub fn is_stable(&self) -> bool {
        self.h() == 1
    }

    /// The dual class: degree and stable determinant negate.
    pub fn dual(&self) -> IndecClass {
        IndecClass {
            rank: self.rank,
            degree: -self.degree,
            stable_det: self.stable_det.dual(),
        }
    }

    /// Twist by a degree-0 line bundle class: E ⊗ L = (E' ⊗ L) ⊗ F_h, so the
    /// stable determinant shifts by L^{r'}.
    pub fn twist(&self, l: &PicClass) -> Result<IndecClass> {
        if l.degree() != 0 {
            return Err(Error::NonzeroDegree(l.degree()));
        }
        Ok(IndecClass {
            rank: self.rank,
            degree: self.degree,
            stable_det: self
                .stable_det
                .tensor(&l.power(i64::from(self.rank_prime()))),
        })
    }
}

impl Serialize for IndecClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("IndecClass", 3)?;
        st.serialize_field("rank", &self.rank)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("stable_det", &self.stable_det)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for IndecClass {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Wire {
            rank: u32,
            degree: i64,
            stable_det: PicClass,
        }
        let w = Wire::deserialize(deserializer)?;
        IndecClass::new(w.rank, w.degree, w.stable_det).map_err(serde::de::Error::custom)
    }
}

/// The rank-h degree-0 Atiyah bundle F_h: stable factor O_X.
///
/// F_1 = O_X; F_h is the unique extension of F_{h−1} by O_X, the unique
/// indecomposable of rank h and degree 0 with nonzero sections.
pub fn atiyah_bundle(h: u32) -> Result<IndecClass> {
    IndecClass::new(h, 0, PicClass::trivial())
}

/// The basepoint-normalized indecomposable of rank r and degree d.
///
/// Its stable factor has determinant d'·x₀ in Pic^{d'}. This coordinate is a
/// convention (consistent with det F_h = O_X and with the compatibility
/// F(r,d) = F(r',d') ⊗ F_h); any other choice differs by an r'-torsion twist,
/// and no classification output depends on it.
pub fn canonical_indecomposable(c: &CurveSpec, rank: u32, degree: i64) -> Result<IndecClass> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    let h = gcd_rank_degree(rank, degree);
    let d_prime = degree / i64::from(h);
    let basepoint_class = abel_jacobi(std::slice::from_ref(c.basepoint()))?;
    IndecClass::new(rank, degree, basepoint_class.power(d_prime))
}

/// The bijection M_X(r',d') → I_X(h·r', h·d'): tensor a stable class with
/// F_h. Requires a stable input (coprime rank and degree).
pub fn indec_from_stable(s: &ModuliPoint, h: u32) -> Result<IndecClass> {
    if !s.is_stable() {
        return Err(Error::NotStable {
            rank: s.rank(),
            degree: s.degree(),
        });
    }
    if h == 0 {
        return Err(Error::ZeroRank);
    }
    IndecClass::new(
        s.rank() * h,
        s.degree() * i64::from(h),
        s.dets()[0].clone(),
    )
}

/// Inverse of [`indec_from_stable`]: the stable factor E' of an
/// indecomposable class, as a point of M_X(r',d').
pub fn stable_factor(e: &IndecClass) -> ModuliPoint {
    moduli_point(
        e.rank_prime(),
        e.degree_prime(),
        vec![e.stable_det.clone()],
    )
    .expect("stable factor data is coprime by construction")
}

/// Whether two degree-0 twists produce isomorphic indecomposables of
/// stable-factor rank r': true iff their difference is r'-torsion.
pub fn twist_equivalent(l1: &PicClass, l2: &PicClass, r_prime: u32) -> Result<bool> {
    if l1.degree() != 0 {
        return Err(Error::NonzeroDegree(l1.degree()));
    }
    if l2.degree() != 0 {
        return Err(Error::NonzeroDegree(l2.degree()));
    }
    if r_prime == 0 {
        return Err(Error::ZeroRank);
    }
    let diff = l2.u().sub(l1.u());
    Ok(diff.scalar_mul(i64::from(r_prime)).is_zero())
}

/// The degree-0 twist carrying the canonical class of (r,d) to `e`,
/// normalized to the lexicographically least representative of its
/// r'-torsion coset. The full solution set has exactly r'² elements
/// (multiplication by r' is surjective on the torus with kernel the
/// r'-torsion).
pub fn twist_from_canonical(c: &CurveSpec, e: &IndecClass) -> PicClass {
    let base = canonical_indecomposable(c, e.rank, e.degree)
        .expect("rank is positive on a valid class");
    let w = e.stable_det.u().sub(base.stable_det().u());
    let r_prime = i64::from(e.rank_prime());
    // Solutions of r'·u = w are (w + t)/r' over r'-torsion t; the least one
    // divides the canonical residue itself.
    let u = TorusPoint::new(
        w.a() / Rational::from(BigInt::from(r_prime)),
        w.b() / Rational::from(BigInt::from(r_prime)),
    );
    PicClass::new(0, u)
}

/// The diagonal embedding I_X(r,d) → M_X(r,d): E' ⊗ F_h has poly-stable
/// representative E'^{⊕h}, so its determinant multiset is h copies of
/// det E'. Commutes with the determinant map and with conjugation.
pub fn include_in_moduli(e: &IndecClass) -> ModuliPoint {
    moduli_point(
        e.rank,
        e.degree,
        vec![e.stable_det.clone(); e.h() as usize],
    )
    .expect("diagonal multiset matches the class shape")
}

/// Conjugation of an indecomposable class. Because F_h has a canonical real
/// structure, σ̄*(E' ⊗ F_h) = σ̄*E' ⊗ F_h: only the stable determinant moves.
pub fn sigma_indec(c: &CurveSpec, e: &IndecClass) -> IndecClass {
    IndecClass {
        rank: e.rank,
        degree: e.degree,
        stable_det: sigma_pic(c, &e.stable_det),
    }
}

/// Whether the class is isomorphic to its conjugate.
pub fn is_self_conjugate(c: &CurveSpec, e: &IndecClass) -> bool {
    &sigma_indec(c, e) == e
}

/// A self-conjugate indecomposable admits either a real or a quaternionic
/// structure, decided by its stable factor: real whenever the curve has real
/// points; on a curve without real points (forcing d' even), the component
/// of the stable determinant decides.
pub fn real_or_quaternionic(c: &CurveSpec, e: &IndecClass) -> Result<ModularTag> {
    if !is_self_conjugate(c, e) {
        return Err(Error::NotSelfConjugate);
    }
    if c.kind().has_real_points() {
        Ok(ModularTag::Real)
    } else {
        Ok(no_real_points_tag(e.stable_det.u()))
    }
}

/// Euler characteristic χ(E) = d + r(1−g) of a rank-r degree-d bundle on a
/// genus-g curve. On an elliptic curve this collapses to the degree.
pub fn euler_char(rank: u32, degree: i64, genus: u32) -> i64 {
    degree + i64::from(rank) * (1 - i64::from(genus))
}

/// The arithmetic underlying the uniqueness of the extension
/// 0 → O_X → F_h → F_{h−1} → 0 and of the real structure on F_h: the
/// extension space H¹(X; F_{h−1}*) has χ = 0 and h⁰ = h¹ = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AtiyahExtensionCert {
    pub h: u32,
    pub euler_char_of_dual_step: i64,
    pub h0: u32,
    pub h1: u32,
}

/// Certificate for the extension step building F_h from F_{h−1} (h ≥ 2).
pub fn extension_certificate(h: u32) -> Result<AtiyahExtensionCert> {
    if h < 2 {
        return Err(Error::InvalidInput(format!(
            "extension step needs h >= 2, got {h}"
        )));
    }
    // F_{h−1}* has rank h−1 and degree 0 (self-dual with trivial det).
    let chi = euler_char(h - 1, 0, 1);
    debug_assert_eq!(chi, 0);
    Ok(AtiyahExtensionCert {
        h,
        euler_char_of_dual_step: chi,
        h0: 1,
        h1: 1,
    })
}
