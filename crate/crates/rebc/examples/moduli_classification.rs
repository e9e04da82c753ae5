//! S-equivalence classes, the determinant map, and the real structure of
//! M_X(r,d).
//!
//! Run with: cargo run --example moduli_classification

use rebc::moduli::{
    classify_fixed_point, det_map, fixed_det_fiber_dim, moduli_point, moduli_real_locus,
    rep_to_moduli, sigma_moduli, tensor_by_line,
};
use rebc::picard::PicClass;
use rebc::{frac, CurveKind, CurveSpec, TorusPoint};

fn main() {
    // A rank-2 degree-0 class is a pair of degree-0 determinants.
    let p = PicClass::new(0, TorusPoint::new(frac(1, 3), frac(0, 1)));
    let q = PicClass::new(0, TorusPoint::new(frac(2, 3), frac(0, 1)));
    let m = moduli_point(2, 0, vec![p.clone(), q.clone()]).unwrap();
    println!("m = rank 2, degree 0, dets {{{p}, {q}}}");
    println!("  det(m) = {}", det_map(&m));
    println!("  fiber dimension over its determinant: {}", fixed_det_fiber_dim(2, 0).unwrap());

    // The representation-variety view of M_X(r,0): tuples mod permutation.
    let same = rep_to_moduli(&[q, p]).unwrap();
    println!("  permutation-invariant: {}", same == m);

    // Fixed points and their modular meaning.
    let curve = CurveSpec::with_kind(CurveKind::TwoComponents);
    println!(
        "  fixed by sigma: {}, tag: {:?}",
        sigma_moduli(&curve, &m) == m,
        classify_fixed_point(&curve, &m).unwrap()
    );

    // A mixed pair {p, sigma(p)}: fixed as a multiset, no member fixed.
    let off = PicClass::new(0, TorusPoint::new(frac(1, 4), frac(1, 3)));
    let pair = moduli_point(2, 0, vec![off.clone(), rebc::picard::sigma_pic(&curve, &off)]).unwrap();
    println!(
        "  mixed pair fixed: {}, tag: {:?}",
        sigma_moduli(&curve, &pair) == pair,
        classify_fixed_point(&curve, &pair).unwrap()
    );

    // The real isomorphism type of M_X(r,d) across the three kinds.
    println!("\nreal locus of M_X(r,d):");
    for kind in CurveKind::ALL {
        let curve = CurveSpec::with_kind(kind);
        for (r, d) in [(2u32, 1i64), (3, 4), (2, 4), (2, 2)] {
            let report = moduli_real_locus(&curve, r, d).unwrap();
            println!(
                "  {kind}, M({r},{d}): h={}, target {:?}, analysis {:?}, {} component(s)/stratum(a)",
                report.h,
                report.iso_target,
                report.analysis,
                report.components.len()
            );
        }
    }

    // Tensoring by a degree-0 class on the quaternionic circle swaps the two
    // components of the real locus when the curve has no real points.
    let curve = CurveSpec::with_kind(CurveKind::NoRealPoints);
    let real_point = moduli_point(3, 4, vec![PicClass::new(4, TorusPoint::zero())]).unwrap();
    let quat_line = PicClass::new(0, TorusPoint::new(frac(0, 1), frac(1, 2)));
    let swapped = tensor_by_line(&real_point, &quat_line).unwrap();
    println!(
        "\nswap by quaternionic line: {:?} -> {:?}",
        classify_fixed_point(&curve, &real_point).unwrap(),
        classify_fixed_point(&curve, &swapped).unwrap()
    );
}
