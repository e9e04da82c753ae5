//! Krull-Schmidt sums, slopes, stability and S-equivalence.
//!
//! Run with: cargo run --example bundle_algebra

use rebc::bundlealgebra::{
    direct_sum, dual, gr, is_polystable, is_semistable, is_stable, s_equivalent, twist,
    FormalBundle,
};
use rebc::indecomposable::{atiyah_bundle, IndecClass};
use rebc::picard::PicClass;
use rebc::{frac, TorusPoint};

fn line(a: i64, b: i64, den: i64) -> IndecClass {
    IndecClass::new(1, 0, PicClass::new(0, TorusPoint::new(frac(a, den), frac(b, den)))).unwrap()
}

fn main() {
    // Normal forms are order-free: a sorted multiset of indecomposables is a
    // complete isomorphism invariant.
    let a = IndecClass::new(2, 1, PicClass::new(1, TorusPoint::zero())).unwrap();
    let b = line(1, 0, 3);
    let b1 = FormalBundle::new(vec![a.clone(), b.clone()]).unwrap();
    let b2 = FormalBundle::new(vec![b, a]).unwrap();
    println!("shuffle-invariant normal form: {}", b1 == b2);

    // Slope and the stability ladder.
    let f2 = FormalBundle::from_indec(atiyah_bundle(2).unwrap());
    println!(
        "F_2: slope {}, semistable {}, stable {}, polystable {}",
        f2.slope(),
        is_semistable(&f2),
        is_stable(&f2),
        is_polystable(&f2)
    );
    let mixed = direct_sum(
        &FormalBundle::from_indec(line(0, 0, 1)),
        &FormalBundle::from_indec(
            IndecClass::new(1, 1, PicClass::new(1, TorusPoint::zero())).unwrap(),
        ),
    );
    println!(
        "O + L(x0): slopes differ, semistable {}",
        is_semistable(&mixed)
    );

    // S-equivalence: F_2 and O + O share the graded object.
    let oo = direct_sum(
        &FormalBundle::from_indec(line(0, 0, 1)),
        &FormalBundle::from_indec(line(0, 0, 1)),
    );
    println!("gr(F_2) = {:?}", gr(&f2).unwrap().dets());
    println!("F_2 ~ O+O: {}", s_equivalent(&f2, &oo).unwrap());

    // Duals and twists act summand by summand.
    println!("dual(F_2 + F_3) unchanged: {}", {
        let sum = direct_sum(
            &FormalBundle::from_indec(atiyah_bundle(2).unwrap()),
            &FormalBundle::from_indec(atiyah_bundle(3).unwrap()),
        );
        dual(&sum) == sum
    });
    let l = PicClass::new(0, TorusPoint::new(frac(1, 4), frac(0, 1)));
    let twisted = twist(&b1, &l).unwrap();
    println!(
        "twist by {l}: summand dets {:?}",
        twisted
            .summands()
            .iter()
            .map(|e| e.stable_det().to_string())
            .collect::<Vec<_>>()
    );
}
