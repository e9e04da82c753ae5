//! Re-derive every analytic component count by brute force on torsion grids.
//!
//! Run with: cargo run --example oracle_crosscheck

use rebc::moduli::moduli_real_locus;
use rebc::oracle::{
    fixed_points_on_grid, grid_component_count, multiset_count, GridSpec, NamedInvolution,
};
use rebc::picard::pic_real_locus;
use rebc::{CurveKind, CurveSpec};

fn main() {
    let grid = GridSpec::new(12).unwrap();

    // Picard real loci: enumerate fixed classes, count grid components,
    // compare with the closed-form report.
    println!("Pic^d: analytic vs. grid oracle at N = {}:", grid.resolution());
    for kind in CurveKind::ALL {
        let curve = CurveSpec::with_kind(kind);
        for d in -2..=2i64 {
            let analytic = pic_real_locus(&curve, d).components.len();
            let fixed =
                fixed_points_on_grid(&curve, NamedInvolution::SigmaPic { degree: d }, grid)
                    .unwrap();
            let coords = fixed.coordinates_for_components().unwrap();
            let oracle = grid_component_count(&coords, grid);
            assert_eq!(analytic, oracle);
            println!("  {kind}, d={d}: {analytic} = {oracle} (fixed points: {})", fixed.len());
        }
    }

    // Moduli real loci in the coprime case: same game one level up.
    println!("\nM_X(r,d), coprime case:");
    for kind in CurveKind::ALL {
        let curve = CurveSpec::with_kind(kind);
        for (r, d) in [(2u32, 1i64), (3, 2), (3, 4)] {
            let analytic = moduli_real_locus(&curve, r, d).unwrap().components.len();
            let fixed = fixed_points_on_grid(
                &curve,
                NamedInvolution::SigmaModuli { rank: r, degree: d },
                grid,
            )
            .unwrap();
            let coords = fixed.coordinates_for_components().unwrap();
            let oracle = grid_component_count(&coords, grid);
            assert_eq!(analytic, oracle);
            println!("  {kind}, ({r},{d}): {analytic} = {oracle}");
        }
    }

    // Symmetric products are enumerated exhaustively; the budget keeps the
    // combinatorics honest.
    let small = GridSpec::new(6).unwrap();
    println!(
        "\nSym^2 over the 1/6 grid: {} multisets to scan",
        multiset_count(36, 2)
    );
    for kind in CurveKind::ALL {
        let curve = CurveSpec::with_kind(kind);
        let fixed = fixed_points_on_grid(
            &curve,
            NamedInvolution::SigmaModuli { rank: 2, degree: 0 },
            small,
        )
        .unwrap();
        let eta_fixed =
            fixed_points_on_grid(&curve, NamedInvolution::EtaModuli { rank: 2 }, small).unwrap();
        println!(
            "  {kind}: sigma-fixed multisets {}, eta-fixed multisets {}",
            fixed.len(),
            eta_fixed.len()
        );
    }
}
