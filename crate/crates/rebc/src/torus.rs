//! Exact model of the complex torus ℂ/Λ with its three real structures.
//!
//! A genus-1 curve is presented as ℂ/Λ with Λ = ℤ + τℤ. A point is stored by
//! its lattice coordinates (a, b), meaning z = a + bτ, with a and b rational
//! and reduced modulo 1. Up to topological type there are exactly three
//! anti-holomorphic involutions on such a torus, distinguished by their fixed
//! sets: two circles, one circle, or empty. In lattice coordinates every one
//! of them is affine with half-integer data, so all classification questions
//! asked downstream reduce to exact rational arithmetic; the transcendental
//! embedding into ℂ is never needed.
//!
//! Lattice normal forms used per kind: τ = iy for [`CurveKind::TwoComponents`]
//! and [`CurveKind::NoRealPoints`], τ = 1/2 + iy for
//! [`CurveKind::OneComponent`]. These are the standard representatives of the
//! three types; the parameter y is carried for reporting only, no
//! classification output depends on it.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact scalar type used for all lattice coordinates.
pub type Rational = BigRational;

/// Convenience constructor for small rational constants.
///
/// Panics if `denom` is zero.
pub fn frac(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Canonical residue of `x` modulo 1, in [0, 1).
fn mod_one(x: Rational) -> Rational {
    let floor = x.floor();
    x - floor
}

/// Parse a rational from the wire format `"p/q"` or `"p"` (lowest terms not
/// required on input; always produced on output).
pub(crate) fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|e| format!("bad integer {t:?}: {e}"))
    };
    match s.split_once('/') {
        None => Ok(Rational::from(parse_int(s)?)),
        Some((num, den)) => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// A point of ℂ/Λ in lattice coordinates: z = a + bτ with a, b ∈ [0, 1).
///
/// This is the universal coordinate system of the crate: points of the curve,
/// degree-d line bundle classes and torsion groups all live here. Coordinates
/// are kept reduced, so equality, ordering and hashing are coordinate-wise.
/// Only rational points are representable; every torsion point and every
/// fixed locus handled downstream is rational in this basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorusPoint {
    a: Rational,
    b: Rational,
}

impl TorusPoint {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self {
            a: mod_one(a),
            b: mod_one(b),
        }
    }

    /// The identity of the group law, (0, 0).
    pub fn zero() -> Self {
        Self {
            a: Rational::zero(),
            b: Rational::zero(),
        }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, other: &TorusPoint) -> TorusPoint {
        TorusPoint::new(&self.a + &other.a, &self.b + &other.b)
    }

    pub fn neg(&self) -> TorusPoint {
        TorusPoint::new(-&self.a, -&self.b)
    }

    pub fn sub(&self, other: &TorusPoint) -> TorusPoint {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, n: i64) -> TorusPoint {
        let n = BigInt::from(n);
        TorusPoint::new(&self.a * &n, &self.b * &n)
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

impl Serialize for TorusPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("TorusPoint", 2)?;
        st.serialize_field("a", &self.a.to_string())?;
        st.serialize_field("b", &self.b.to_string())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for TorusPoint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Wire {
            a: String,
            b: String,
        }
        let w = Wire::deserialize(deserializer)?;
        let a = parse_rational(&w.a).map_err(D::Error::custom)?;
        let b = parse_rational(&w.b).map_err(D::Error::custom)?;
        Ok(TorusPoint::new(a, b))
    }
}

/// The three topological types of real structure on a genus-1 curve,
/// named after the shape of the fixed-point set X^σ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveKind {
    TwoComponents,
    OneComponent,
    NoRealPoints,
}

impl CurveKind {
    pub const ALL: [CurveKind; 3] = [
        CurveKind::TwoComponents,
        CurveKind::OneComponent,
        CurveKind::NoRealPoints,
    ];

    /// Number of connected components of the real locus of the curve.
    pub fn real_component_count(self) -> usize {
        match self {
            CurveKind::TwoComponents => 2,
            CurveKind::OneComponent => 1,
            CurveKind::NoRealPoints => 0,
        }
    }

    /// Whether the curve has real points at all.
    pub fn has_real_points(self) -> bool {
        self != CurveKind::NoRealPoints
    }
}

impl fmt::Display for CurveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CurveKind::TwoComponents => "two_components",
            CurveKind::OneComponent => "one_component",
            CurveKind::NoRealPoints => "no_real_points",
        };
        f.write_str(s)
    }
}

/// A real elliptic curve: lattice parameter, real-structure kind and a marked
/// point.
///
/// The marked point is an arbitrary point of the curve; it is *not* required
/// to be fixed by the involution (for [`CurveKind::NoRealPoints`] no fixed
/// point exists). It serves as the origin of the group law and as the
/// normalization point for canonical indecomposable classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSpec {
    kind: CurveKind,
    y: Rational,
    basepoint: TorusPoint,
}

impl CurveSpec {
    pub fn new(kind: CurveKind, y: Rational, basepoint: TorusPoint) -> Result<Self> {
        if y.is_positive() {
            Ok(Self { kind, y, basepoint })
        } else {
            Err(Error::NonPositiveY(y.to_string()))
        }
    }

    /// Curve of the given kind with y = 1 and the zero basepoint.
    pub fn with_kind(kind: CurveKind) -> Self {
        Self {
            kind,
            y: Rational::from(BigInt::from(1)),
            basepoint: TorusPoint::zero(),
        }
    }

    pub fn kind(&self) -> CurveKind {
        self.kind
    }

    pub fn y(&self) -> &Rational {
        &self.y
    }

    pub fn basepoint(&self) -> &TorusPoint {
        &self.basepoint
    }

    /// Lattice parameter τ = re + i·im of the normal form, as (re, im).
    pub fn tau(&self) -> (Rational, Rational) {
        let re = match self.kind {
            CurveKind::OneComponent => frac(1, 2),
            _ => Rational::zero(),
        };
        (re, self.y.clone())
    }

    /// Linear part of the involution (a group endomorphism of the torus).
    ///
    /// Two components: (a, b) ↦ (a, −b); one component: (a, b) ↦ (a+b, −b);
    /// no real points: (a, b) ↦ (a, −b).
    pub fn sigma_linear(&self, p: &TorusPoint) -> TorusPoint {
        match self.kind {
            CurveKind::TwoComponents | CurveKind::NoRealPoints => {
                TorusPoint::new(p.a.clone(), -&p.b)
            }
            CurveKind::OneComponent => TorusPoint::new(&p.a + &p.b, -&p.b),
        }
    }

    /// Translation part of the involution: (0,0) except for the
    /// fixed-point-free kind, which translates by (1/2, 0).
    pub fn sigma_shift(&self) -> TorusPoint {
        match self.kind {
            CurveKind::NoRealPoints => TorusPoint::new(frac(1, 2), Rational::zero()),
            _ => TorusPoint::zero(),
        }
    }

    /// The anti-holomorphic involution σ in lattice coordinates.
    pub fn sigma_point(&self, p: &TorusPoint) -> TorusPoint {
        self.sigma_linear(p).add(&self.sigma_shift())
    }

    /// Connected components of the fixed locus X^σ, as labeled circles in
    /// canonical order ({b=0} before {b=1/2}).
    pub fn real_locus_components(&self) -> Vec<TorusCircle> {
        match self.kind {
            CurveKind::TwoComponents => vec![
                TorusCircle::horizontal(Rational::zero()),
                TorusCircle::horizontal(frac(1, 2)),
            ],
            CurveKind::OneComponent => vec![TorusCircle::horizontal(Rational::zero())],
            CurveKind::NoRealPoints => Vec::new(),
        }
    }
}

impl Serialize for CurveSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("CurveSpec", 3)?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("y", &self.y.to_string())?;
        st.serialize_field("basepoint", &self.basepoint)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for CurveSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Wire {
            kind: CurveKind,
            #[serde(default)]
            y: Option<String>,
            #[serde(default)]
            basepoint: Option<TorusPoint>,
        }
        let w = Wire::deserialize(deserializer)?;
        let y = match w.y {
            Some(s) => parse_rational(&s).map_err(D::Error::custom)?,
            None => Rational::from(BigInt::from(1)),
        };
        let basepoint = w.basepoint.unwrap_or_else(TorusPoint::zero);
        CurveSpec::new(w.kind, y, basepoint).map_err(D::Error::custom)
    }
}

/// Which lattice coordinate a [`TorusCircle`] pins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoordAxis {
    A,
    B,
}

/// A circle inside the torus cut out by fixing one lattice coordinate.
///
/// Every fixed locus of the Galois involutions handled here is a finite union
/// of such circles, which is what makes grid enumeration an exact oracle for
/// connectivity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusCircle {
    pub fixed_axis: CoordAxis,
    pub level: Rational,
}

impl TorusCircle {
    /// The circle {(t, level) : t ∈ [0,1)} with the b-coordinate pinned.
    pub fn horizontal(level: Rational) -> Self {
        Self {
            fixed_axis: CoordAxis::B,
            level: mod_one(level),
        }
    }

    /// The circle {(level, t) : t ∈ [0,1)} with the a-coordinate pinned.
    pub fn vertical(level: Rational) -> Self {
        Self {
            fixed_axis: CoordAxis::A,
            level: mod_one(level),
        }
    }

    pub fn contains(&self, p: &TorusPoint) -> bool {
        match self.fixed_axis {
            CoordAxis::A => p.a == self.level,
            CoordAxis::B => p.b == self.level,
        }
    }

    /// Short label such as `b=0` or `b=1/2`, used in reports.
    pub fn label(&self) -> String {
        match self.fixed_axis {
            CoordAxis::A => format!("a={}", self.level),
            CoordAxis::B => format!("b={}", self.level),
        }
    }

    /// The n points of the circle whose free coordinate is a multiple of 1/n.
    pub fn grid_points(&self, n: u32) -> Vec<TorusPoint> {
        (0..n)
            .map(|k| {
                let t = frac(i64::from(k), i64::from(n));
                match self.fixed_axis {
                    CoordAxis::A => TorusPoint::new(self.level.clone(), t),
                    CoordAxis::B => TorusPoint::new(t, self.level.clone()),
                }
            })
            .collect()
    }
}

impl Serialize for TorusCircle {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("TorusCircle", 2)?;
        st.serialize_field("fixed_axis", &self.fixed_axis)?;
        st.serialize_field("level", &self.level.to_string())?;
        st.end()
    }
}

/// The N² points of the N-torsion subgroup, {(i/N, j/N)}, in sorted order.
pub fn torsion_points(n: u32) -> Vec<TorusPoint> {
    let n = n.max(1);
    let mut pts = Vec::with_capacity((n as usize) * (n as usize));
    for i in 0..n {
        for j in 0..n {
            pts.push(TorusPoint::new(
                frac(i64::from(i), i64::from(n)),
                frac(i64::from(j), i64::from(n)),
            ));
        }
    }
    pts
}
