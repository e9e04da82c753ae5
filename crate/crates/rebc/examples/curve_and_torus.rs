//! The three real elliptic curves and their involutions.
//!
//! Run with: cargo run --example curve_and_torus

use rebc::torus::torsion_points;
use rebc::{frac, CurveKind, CurveSpec, TorusPoint};

fn main() {
    for kind in CurveKind::ALL {
        let curve = CurveSpec::with_kind(kind);
        let (re, im) = curve.tau();
        println!("curve kind {kind}: lattice tau = {re} + {im}i");

        // The involution in lattice coordinates, on a sample point.
        let p = TorusPoint::new(frac(1, 3), frac(1, 2));
        let sp = curve.sigma_point(&p);
        println!("  sigma{p} = {sp}, sigma^2 = {}", curve.sigma_point(&sp));

        // The real locus: a union of labeled circles.
        let components = curve.real_locus_components();
        if components.is_empty() {
            println!("  real locus: empty");
        } else {
            let labels: Vec<String> = components.iter().map(|c| c.label()).collect();
            println!("  real locus: {} circle(s): {}", components.len(), labels.join(", "));
        }
    }

    // Torsion subgroups: N^2 points, each annihilated by N.
    for n in [1u32, 2, 3] {
        let pts = torsion_points(n);
        assert!(pts.iter().all(|p| p.scalar_mul(i64::from(n)).is_zero()));
        println!("{n}-torsion has {} points", pts.len());
    }

    // Group law, exactly.
    let third = TorusPoint::new(frac(1, 3), frac(0, 1));
    let two_thirds = third.add(&third);
    println!(
        "(1/3,0) + (2/3,0) = {} (the identity)",
        third.add(&two_thirds)
    );
}
