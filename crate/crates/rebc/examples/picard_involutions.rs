//! Line bundle classes, the Abel-Jacobi map and the real loci of Pic^d.
//!
//! Run with: cargo run --example picard_involutions

use rebc::picard::{abel_jacobi, eta_line, pic_real_locus, sigma_pic, PicClass};
use rebc::{frac, CurveKind, CurveSpec, TorusPoint};

fn main() {
    // The degree-2 class of the divisor x0 + sigma(x0) on the curve without
    // real points: self-conjugate even though no point of the curve is.
    let curve = CurveSpec::with_kind(CurveKind::NoRealPoints);
    let x0 = curve.basepoint().clone();
    let l = abel_jacobi(&[x0.clone(), curve.sigma_point(&x0)]).unwrap();
    println!("class of x0 + sigma(x0): {l}");
    println!("  conjugate: {}", sigma_pic(&curve, &l));

    // The second real structure eta on Pic^0 always fixes the trivial class.
    let trivial = PicClass::trivial();
    println!("eta(O_X) = {}", eta_line(&curve, &trivial).unwrap());
    let moved = PicClass::new(0, TorusPoint::new(frac(1, 5), frac(1, 3)));
    println!("eta{} = {}", moved, eta_line(&curve, &moved).unwrap());

    // The component table of Pic^d for all kinds and degrees -2..=2.
    println!("\nreal locus of Pic^d:");
    for kind in CurveKind::ALL {
        let curve = CurveSpec::with_kind(kind);
        for d in -2..=2i64 {
            let report = pic_real_locus(&curve, d);
            let target = match report.isomorphism_target {
                rebc::picard::PicIsoTarget::X => "X",
                rebc::picard::PicIsoTarget::Pic0 => "Pic0",
            };
            let parts: Vec<String> = report
                .components
                .iter()
                .map(|comp| format!("{} ({})", comp.label(), comp.tag))
                .collect();
            println!(
                "  {kind}, d={d}: target {target}, {} component(s) {}",
                report.components.len(),
                if parts.is_empty() {
                    String::new()
                } else {
                    format!("[{}]", parts.join(", "))
                }
            );
        }
    }
}
