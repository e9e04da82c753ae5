//! The indecomposable-bundle calculus: Atiyah bundles, the stable-factor
//! bijection, torsion twists, and the real/quaternionic dichotomy.
//!
//! Run with: cargo run --example indecomposable_atlas

use rebc::indecomposable::{
    atiyah_bundle, canonical_indecomposable, extension_certificate, include_in_moduli,
    indec_from_stable, is_self_conjugate, real_or_quaternionic, stable_factor,
    twist_from_canonical, IndecClass,
};
use rebc::moduli::det_map;
use rebc::picard::PicClass;
use rebc::{frac, CurveKind, CurveSpec, TorusPoint};

fn main() {
    // F_h: unique indecomposable of rank h, degree 0 with sections; trivial
    // determinant, self-dual, built by iterated extensions with chi = 0.
    for h in 1..=4u32 {
        let fh = atiyah_bundle(h).unwrap();
        let image = include_in_moduli(&fh);
        println!(
            "F_{h}: det {}, self-dual {}, S-equivalent to O^{h}",
            det_map(&image),
            fh.dual() == fh
        );
        if h >= 2 {
            let cert = extension_certificate(h).unwrap();
            println!(
                "  extension step: chi = {}, h0 = {}, h1 = {}",
                cert.euler_char_of_dual_step, cert.h0, cert.h1
            );
        }
    }

    // The canonical indecomposable of rank 6, degree 4 and its stable factor
    // (rank 3, degree 2).
    let curve = CurveSpec::with_kind(CurveKind::OneComponent);
    let e = canonical_indecomposable(&curve, 6, 4).unwrap();
    println!("\ncanonical class of (6,4): stable factor det {}", e.stable_det());
    let s = stable_factor(&e);
    println!("  stable factor: rank {}, degree {}", s.rank(), s.degree());
    println!("  round trip: {}", indec_from_stable(&s, e.h()).unwrap() == e);

    // Twist classification: the line bundle carrying the canonical class to
    // a given one, canonical within its r'-torsion coset of r'^2 twists.
    let other = IndecClass::new(
        6,
        4,
        PicClass::new(2, TorusPoint::new(frac(1, 3), frac(1, 2))),
    )
    .unwrap();
    let twist = twist_from_canonical(&curve, &other);
    println!("  twist to {}: {}", other.stable_det(), twist);

    // Self-conjugate classes on the curve without real points are real on
    // the {b=0} circle and quaternionic on {b=1/2}; odd-degree stable
    // factors rule self-conjugacy out entirely.
    let curve = CurveSpec::with_kind(CurveKind::NoRealPoints);
    println!("\nself-conjugate indecomposables on the fixed-point-free curve:");
    for (r, d) in [(2u32, 0i64), (6, 4), (6, 3)] {
        let h = rebc::moduli::gcd_rank_degree(r, d);
        let d_prime = d / i64::from(h);
        for b in [frac(0, 1), frac(1, 2)] {
            let e = IndecClass::new(
                r,
                d,
                PicClass::new(d_prime, TorusPoint::new(frac(0, 1), b.clone())),
            )
            .unwrap();
            if is_self_conjugate(&curve, &e) {
                println!(
                    "  ({r},{d}) at b={b}: {:?}",
                    real_or_quaternionic(&curve, &e).unwrap()
                );
            } else {
                println!("  ({r},{d}) at b={b}: not self-conjugate (d' = {d_prime} is odd)");
            }
        }
    }
}
