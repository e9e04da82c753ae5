//! Topological classification of real and quaternionic bundles, and the
//! component-count tables.
//!
//! Run with: cargo run --example topological_types

use rebc::topotypes::{
    component_count_higher_genus, component_table_genus1, enumerate_real_types,
    quaternionic_exists,
};
use rebc::{CurveKind, CurveSpec};

fn main() {
    // Real types are indexed by first Stiefel-Whitney vectors subject to the
    // degree-parity constraint: 2^{n-1} of them when the real locus has n
    // circles.
    for kind in CurveKind::ALL {
        let curve = CurveSpec::with_kind(kind);
        for d in [0i64, 1] {
            let types = enumerate_real_types(&curve, 2, d);
            let w1s: Vec<String> = types.iter().map(|t| format!("{:?}", t.w1)).collect();
            println!(
                "{kind}, rank 2, d={d}: {} real type(s) {}",
                types.len(),
                w1s.join(" ")
            );
        }
        println!(
            "  quaternionic bundles of rank 2: d=2 {}, d=1 {}; rank 3, d=2: {}",
            quaternionic_exists(&curve, 2, 2, 1),
            quaternionic_exists(&curve, 2, 1, 1),
            quaternionic_exists(&curve, 3, 2, 1),
        );
    }

    // Genus-1 component tables for indecomposable loci (any rank/degree).
    println!("\nindecomposable locus components at genus 1:");
    for kind in CurveKind::ALL {
        let curve = CurveSpec::with_kind(kind);
        for (r, d) in [(4u32, 6i64), (6, 4)] {
            let report = component_table_genus1(&curve, r, d).unwrap();
            let tags: Vec<String> = report
                .components
                .iter()
                .map(|c| c.tag.to_string())
                .collect();
            println!(
                "  {kind}, I({r},{d}): {} component(s) [{}]",
                report.components.len(),
                tags.join(", ")
            );
        }
    }

    // The five-case lookup for coprime rank and degree at genus >= 2, with
    // the number of real circles n as a free parameter.
    println!("\nhigher-genus coprime table:");
    for (n, g, r, d) in [
        (3u32, 2u32, 2u32, 1i64),
        (0, 2, 2, 1),
        (0, 2, 3, 1),
        (0, 2, 3, 2),
        (0, 3, 3, 2),
    ] {
        let report = component_count_higher_genus(n, g, r, d).unwrap();
        let tags: Vec<String> = report
            .components
            .iter()
            .map(|c| c.tag.to_string())
            .collect();
        println!(
            "  n={n}, g={g}, (r,d)=({r},{d}): {} component(s) [{}]",
            report.count,
            tags.join(", ")
        );
    }
}
