//! Line bundle classes of every degree, the Abel–Jacobi map, and the Galois
//! involution on Pic^d.
//!
//! A degree-d class is a pair (d, u) where u is the Abel–Jacobi coordinate:
//! the class of a divisor Σ nᵢ·xᵢ with Σ nᵢ = d has u = Σ nᵢ·xᵢ in the
//! torus. The Galois involution L ↦ σ̄*L acts on coordinates by the linear
//! part of σ plus d times its translation constant, which is what makes the
//! degree parity enter the fixed-point analysis on a curve without real
//! points.
//!
//! Pic^d is represented intrinsically (degree plus coordinate) rather than
//! through a chosen identification with Pic⁰: over ℝ that identification
//! depends on the curve kind and the degree parity, so the reports state the
//! real isomorphism target instead of silently applying it.

use std::fmt;

use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::torus::{frac, CurveKind, CurveSpec, Rational, TorusCircle, TorusPoint};

/// A line bundle class: degree plus Abel–Jacobi coordinate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PicClass {
    degree: i64,
    u: TorusPoint,
}

impl PicClass {
    pub fn new(degree: i64, u: TorusPoint) -> Self {
        Self { degree, u }
    }

    /// The class of the trivial bundle O_X: degree 0, coordinate (0, 0).
    pub fn trivial() -> Self {
        Self {
            degree: 0,
            u: TorusPoint::zero(),
        }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn u(&self) -> &TorusPoint {
        &self.u
    }

    /// Tensor product: degrees and coordinates add.
    pub fn tensor(&self, other: &PicClass) -> PicClass {
        PicClass {
            degree: self.degree + other.degree,
            u: self.u.add(&other.u),
        }
    }

    /// Dual: degree and coordinate negate.
    pub fn dual(&self) -> PicClass {
        PicClass {
            degree: -self.degree,
            u: self.u.neg(),
        }
    }

    /// n-th tensor power (n may be negative).
    pub fn power(&self, n: i64) -> PicClass {
        PicClass {
            degree: self.degree * n,
            u: self.u.scalar_mul(n),
        }
    }
}

impl fmt::Display for PicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pic^{}{}", self.degree, self.u)
    }
}

impl Serialize for PicClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("PicClass", 2)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("u", &self.u)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for PicClass {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Wire {
            degree: i64,
            u: TorusPoint,
        }
        let w = Wire::deserialize(deserializer)?;
        Ok(PicClass::new(w.degree, w.u))
    }
}

/// Abel–Jacobi map of an unweighted divisor: the class of Σ xᵢ.
pub fn abel_jacobi(points: &[TorusPoint]) -> Result<PicClass> {
    if points.is_empty() {
        return Err(Error::InvalidInput("empty divisor".into()));
    }
    let sum = points
        .iter()
        .fold(TorusPoint::zero(), |acc, p| acc.add(p));
    Ok(PicClass::new(points.len() as i64, sum))
}

/// Abel–Jacobi map of a weighted divisor Σ nᵢ·xᵢ (degree Σ nᵢ).
pub fn abel_jacobi_weighted(divisor: &[(TorusPoint, i64)]) -> Result<PicClass> {
    if divisor.is_empty() {
        return Err(Error::InvalidInput("empty divisor".into()));
    }
    let mut degree = 0i64;
    let mut sum = TorusPoint::zero();
    for (p, n) in divisor {
        degree += n;
        sum = sum.add(&p.scalar_mul(*n));
    }
    Ok(PicClass::new(degree, sum))
}

/// The Galois involution L ↦ σ̄*L on Pic^d.
///
/// In coordinates: (d, u) ↦ (d, A(u) + d·c) with A the linear part of σ and
/// c its translation constant. Compatible with the Abel–Jacobi map: applying
/// σ to every point of a divisor lands on the conjugate class.
pub fn sigma_pic(c: &CurveSpec, l: &PicClass) -> PicClass {
    let u = c
        .sigma_linear(&l.u)
        .add(&c.sigma_shift().scalar_mul(l.degree));
    PicClass::new(l.degree, u)
}

/// The composite involution L ↦ σ̄*L^* on Pic⁰ (degree 0 only).
///
/// It always has real points, because it fixes the trivial bundle; the curve
/// (Pic⁰, η₁) is a real elliptic curve in its own right, in general not
/// isomorphic to (X, σ).
pub fn eta_line(c: &CurveSpec, l: &PicClass) -> Result<PicClass> {
    if l.degree != 0 {
        return Err(Error::NonzeroDegree(l.degree));
    }
    Ok(sigma_pic(c, &l.dual()))
}

/// Modular meaning of a fixed point of the Galois involution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModularTag {
    /// Represented by a bundle with a real structure (τ² = +id).
    Real,
    /// Represented by a bundle with a quaternionic structure (τ² = −id).
    Quaternionic,
    /// A fixed multiset of the form {p, σ(p), …} with no individually fixed
    /// member; no real or quaternionic representative is implied.
    MixedPairs,
    /// Individually fixed determinants in a non-coprime moduli space; the
    /// modular classification is intentionally left open.
    UnclassifiedSemistable,
}

impl fmt::Display for ModularTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ModularTag::Real => "real",
            ModularTag::Quaternionic => "quaternionic",
            ModularTag::MixedPairs => "mixed-pairs",
            ModularTag::UnclassifiedSemistable => "unclassified-semistable",
        };
        f.write_str(s)
    }
}

/// What Pic^d is isomorphic to as a real variety.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PicIsoTarget {
    /// The curve X itself.
    X,
    /// Pic⁰ with its own real structure (distinct from X when X^σ = ∅,
    /// because Pic⁰ always has the real point O_X).
    Pic0,
}

/// One connected component of the real locus of Pic^d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PicComponent {
    pub circle: TorusCircle,
    pub tag: ModularTag,
}

impl PicComponent {
    pub fn label(&self) -> String {
        self.circle.label()
    }
}

impl Serialize for PicComponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("PicComponent", 3)?;
        st.serialize_field("label", &self.label())?;
        st.serialize_field("circle", &self.circle)?;
        st.serialize_field("tag", &self.tag)?;
        st.end()
    }
}

/// Real locus of Pic^d: components, modular tags, and the real isomorphism
/// target of the ambient variety.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PicRealLocusReport {
    pub degree: i64,
    pub isomorphism_target: PicIsoTarget,
    pub components: Vec<PicComponent>,
}

/// Solve σ̄*L = L on Pic^d and classify the solution set.
///
/// Component counts: 2 for a curve with two real circles, 1 for one circle,
/// and for a curve without real points 0 in odd degree, 2 in even degree. In
/// the last case one component consists of real classes and the other of
/// quaternionic ones; the convention placing the real component on {b=0} is
/// anchored at the trivial bundle and propagated through even degrees by
/// twisting with the real degree-2 class of the divisor x₀ + σ(x₀).
pub fn pic_real_locus(c: &CurveSpec, degree: i64) -> PicRealLocusReport {
    let circle0 = TorusCircle::horizontal(Rational::zero());
    let circle_half = TorusCircle::horizontal(frac(1, 2));
    let (target, components) = match c.kind() {
        CurveKind::TwoComponents => (
            PicIsoTarget::X,
            vec![
                PicComponent {
                    circle: circle0,
                    tag: ModularTag::Real,
                },
                PicComponent {
                    circle: circle_half,
                    tag: ModularTag::Real,
                },
            ],
        ),
        CurveKind::OneComponent => (
            PicIsoTarget::X,
            vec![PicComponent {
                circle: circle0,
                tag: ModularTag::Real,
            }],
        ),
        CurveKind::NoRealPoints => {
            if degree % 2 != 0 {
                (PicIsoTarget::X, Vec::new())
            } else {
                (
                    PicIsoTarget::Pic0,
                    vec![
                        PicComponent {
                            circle: circle0,
                            tag: ModularTag::Real,
                        },
                        PicComponent {
                            circle: circle_half,
                            tag: ModularTag::Quaternionic,
                        },
                    ],
                )
            }
        }
    };
    PicRealLocusReport {
        degree,
        isomorphism_target: target,
        components,
    }
}

/// Tag convention for an individually fixed class on a curve without real
/// points (even degree): {b=0} carries the real classes, {b=1/2} the
/// quaternionic ones.
pub(crate) fn no_real_points_tag(u: &TorusPoint) -> ModularTag {
    if u.b() == &frac(1, 2) {
        ModularTag::Quaternionic
    } else {
        ModularTag::Real
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torus::torsion_points;

    fn pt(an: i64, ad: i64, bn: i64, bd: i64) -> TorusPoint {
        TorusPoint::new(frac(an, ad), frac(bn, bd))
    }

    fn curve(kind: CurveKind) -> CurveSpec {
        CurveSpec::with_kind(kind)
    }

    #[test]
    fn abel_jacobi_examples() {
        let x0 = TorusPoint::zero();
        assert_eq!(
            abel_jacobi(std::slice::from_ref(&x0)).unwrap(),
            PicClass::new(1, TorusPoint::zero())
        );
        assert_eq!(
            abel_jacobi(&[pt(1, 4, 0, 1), pt(3, 4, 0, 1)]).unwrap(),
            PicClass::new(2, TorusPoint::zero())
        );

        // On the fixed-point-free curve, the divisor x₀ + σ(x₀) has
        // coordinate (1/2, 0): the canonical self-conjugate degree-2 class.
        let c = curve(CurveKind::NoRealPoints);
        let l = abel_jacobi(&[x0.clone(), c.sigma_point(&x0)]).unwrap();
        assert_eq!(l, PicClass::new(2, pt(1, 2, 0, 1)));
        assert_eq!(sigma_pic(&c, &l), l);

        assert!(abel_jacobi(&[]).is_err());
    }

    #[test]
    fn abel_jacobi_weighted_matches_unweighted() {
        let div = [(pt(1, 6, 1, 3), 2), (pt(1, 2, 0, 1), -1)];
        let expanded = abel_jacobi_weighted(&div).unwrap();
        assert_eq!(expanded.degree(), 1);
        assert_eq!(
            expanded.u(),
            &pt(1, 6, 1, 3).scalar_mul(2).sub(&pt(1, 2, 0, 1))
        );
    }

    #[test]
    fn sigma_pic_is_involution_everywhere() {
        for kind in CurveKind::ALL {
            let c = curve(kind);
            for d in -4..=4 {
                for u in torsion_points(6) {
                    let l = PicClass::new(d, u);
                    assert_eq!(sigma_pic(&c, &sigma_pic(&c, &l)), l);
                }
            }
        }
    }

    #[test]
    fn sigma_pic_fixes_trivial_class() {
        for kind in CurveKind::ALL {
            let c = curve(kind);
            assert_eq!(sigma_pic(&c, &PicClass::trivial()), PicClass::trivial());
        }
    }

    #[test]
    fn sigma_pic_degree1_never_fixed_without_real_points() {
        let c = curve(CurveKind::NoRealPoints);
        for u in torsion_points(12) {
            let l = PicClass::new(1, u);
            assert_ne!(sigma_pic(&c, &l), l);
        }
    }

    #[test]
    fn sigma_pic_example_no_real_points_degree2() {
        let c = curve(CurveKind::NoRealPoints);
        let l = PicClass::new(2, pt(1, 4, 0, 1));
        // Oracle: equivariance on a generating divisor. (1/4,0) = (1/8,0)+(1/8,0).
        let x = pt(1, 8, 0, 1);
        let conj = abel_jacobi(&[c.sigma_point(&x), c.sigma_point(&x)]).unwrap();
        assert_eq!(sigma_pic(&c, &l), conj);
        // In even degree the translation part contributes a full lattice
        // vector, so a class on {b=0} is fixed.
        assert_eq!(sigma_pic(&c, &l), l);
    }

    #[test]
    fn sigma_pic_equivariant_with_abel_jacobi() {
        for kind in CurveKind::ALL {
            let c = curve(kind);
            let divisor = [pt(1, 6, 5, 6), pt(1, 3, 1, 2), pt(0, 1, 2, 3)];
            let lhs = sigma_pic(&c, &abel_jacobi(&divisor).unwrap());
            let conj: Vec<TorusPoint> = divisor.iter().map(|p| c.sigma_point(p)).collect();
            assert_eq!(lhs, abel_jacobi(&conj).unwrap());
        }
    }

    #[test]
    fn tensor_dual_power_examples() {
        let x = pt(2, 5, 1, 5);
        assert_eq!(
            PicClass::new(1, x.clone()).tensor(&PicClass::new(-1, x.neg())),
            PicClass::trivial()
        );
        assert_eq!(
            PicClass::new(0, pt(1, 3, 0, 1)).dual(),
            PicClass::new(0, pt(2, 3, 0, 1))
        );
        assert_eq!(
            PicClass::new(2, pt(1, 2, 0, 1)).power(2),
            PicClass::new(4, TorusPoint::zero())
        );
    }

    #[test]
    fn eta_line_rejects_nonzero_degree() {
        let c = curve(CurveKind::TwoComponents);
        assert!(eta_line(&c, &PicClass::new(1, TorusPoint::zero())).is_err());
    }

    #[test]
    fn eta_line_fixes_trivial_and_squares_to_identity() {
        for kind in CurveKind::ALL {
            let c = curve(kind);
            assert_eq!(
                eta_line(&c, &PicClass::trivial()).unwrap(),
                PicClass::trivial()
            );
            for u in torsion_points(12) {
                let l = PicClass::new(0, u);
                let twice = eta_line(&c, &eta_line(&c, &l).unwrap()).unwrap();
                assert_eq!(twice, l);
            }
        }
    }

    #[test]
    fn eta_line_two_components_formula() {
        // Oracle: pointwise composition of σ̄* and dual on the 1/12 grid.
        let c = curve(CurveKind::TwoComponents);
        for u in torsion_points(12) {
            let l = PicClass::new(0, u.clone());
            let composed = sigma_pic(&c, &l.dual());
            assert_eq!(eta_line(&c, &l).unwrap(), composed);
            // Closed form: (a, b) ↦ (−a, b).
            assert_eq!(
                eta_line(&c, &l).unwrap().u(),
                &TorusPoint::new(-u.a().clone(), u.b().clone())
            );
        }
    }

    // Grid oracle for the real locus of Pic^d: fixed points plus adjacency
    // (two fixed grid points are neighbors when they differ by 1/N in one
    // coordinate), independent of the analytic report.
    fn pic_fixed_component_count(c: &CurveSpec, d: i64, n: u32) -> usize {
        let fixed: Vec<TorusPoint> = torsion_points(n)
            .into_iter()
            .filter(|u| {
                let l = PicClass::new(d, u.clone());
                sigma_pic(c, &l) == l
            })
            .collect();
        crate::oracle::grid_component_count_points(&fixed, n)
    }

    #[test]
    fn pic_real_locus_matches_grid_oracle() {
        for kind in CurveKind::ALL {
            let c = curve(kind);
            for d in -4..=4 {
                let report = pic_real_locus(&c, d);
                let oracle = pic_fixed_component_count(&c, d, 60);
                assert_eq!(report.components.len(), oracle, "kind {kind}, d {d}");
            }
        }
    }

    #[test]
    fn pic_real_locus_tables() {
        let report = pic_real_locus(&curve(CurveKind::TwoComponents), 3);
        assert_eq!(report.components.len(), 2);
        assert!(report
            .components
            .iter()
            .all(|comp| comp.tag == ModularTag::Real));
        assert_eq!(report.isomorphism_target, PicIsoTarget::X);

        let report = pic_real_locus(&curve(CurveKind::NoRealPoints), 1);
        assert!(report.components.is_empty());
        assert_eq!(report.isomorphism_target, PicIsoTarget::X);

        let report = pic_real_locus(&curve(CurveKind::NoRealPoints), 0);
        assert_eq!(report.components.len(), 2);
        assert_eq!(report.components[0].label(), "b=0");
        assert_eq!(report.components[0].tag, ModularTag::Real);
        assert_eq!(report.components[1].label(), "b=1/2");
        assert_eq!(report.components[1].tag, ModularTag::Quaternionic);
        assert_eq!(report.isomorphism_target, PicIsoTarget::Pic0);
    }

    #[test]
    fn pic_real_locus_empty_iff_no_real_points_and_odd() {
        for kind in CurveKind::ALL {
            let c = curve(kind);
            for d in -4..=4 {
                let nonempty = !pic_real_locus(&c, d).components.is_empty();
                let expected = kind != CurveKind::NoRealPoints || d % 2 == 0;
                assert_eq!(nonempty, expected);
            }
        }
    }

    #[test]
    fn component_count_matches_curve_when_real_points_exist() {
        for kind in [CurveKind::TwoComponents, CurveKind::OneComponent] {
            let c = curve(kind);
            let curve_components = c.real_locus_components().len();
            for d in -4..=4 {
                assert_eq!(pic_real_locus(&c, d).components.len(), curve_components);
            }
        }
    }

    #[test]
    fn degree_two_twist_identifies_picard_loci() {
        // On the fixed-point-free curve, tensoring by the self-conjugate
        // degree-2 class of x₀ + σ(x₀) is an equivariant bijection
        // Pic^d → Pic^{d+2}, so the real loci of a parity class coincide
        // after the shift: nonempty/empty pattern and fixed sets both.
        let c = curve(CurveKind::NoRealPoints);
        let x0 = c.basepoint().clone();
        let l = abel_jacobi(&[x0.clone(), c.sigma_point(&x0)]).unwrap();
        assert_eq!(sigma_pic(&c, &l), l);
        for d in -3..=3i64 {
            let fixed: Vec<TorusPoint> = torsion_points(12)
                .into_iter()
                .filter(|u| {
                    let m = PicClass::new(d, u.clone());
                    sigma_pic(&c, &m) == m
                })
                .collect();
            let mut shifted: Vec<TorusPoint> = fixed
                .iter()
                .map(|u| {
                    let m = PicClass::new(d, u.clone()).tensor(&l);
                    assert_eq!(sigma_pic(&c, &m), m);
                    m.u().clone()
                })
                .collect();
            shifted.sort();
            let fixed_above: Vec<TorusPoint> = torsion_points(12)
                .into_iter()
                .filter(|u| {
                    let m = PicClass::new(d + 2, u.clone());
                    sigma_pic(&c, &m) == m
                })
                .collect();
            assert_eq!(shifted, fixed_above, "d = {d}");
        }
    }

    #[test]
    fn pic_class_json() {
        let l = PicClass::new(2, pt(1, 2, 0, 1));
        let json = serde_json::to_string(&l).unwrap();
        assert_eq!(json, r#"{"degree":2,"u":{"a":"1/2","b":"0"}}"#);
        let back: PicClass = serde_json::from_str(&json).unwrap();
        assert_eq!(back, l);
    }
}
