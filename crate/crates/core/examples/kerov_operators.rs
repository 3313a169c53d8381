//! Kerov's operators U, D, L and their rim-hook versions acting on
//! partitions, in exact arithmetic.

use zmeasures::kerov::{apply_d, apply_l, apply_u, commutator, exp_apply, Generator, KerovParams, PartitionVector};
use zmeasures::partition::partitions_up_to;
use zmeasures::scalar::{gauss, GaussRat, Scalar};
use zmeasures::Partition;

fn show(name: &str, v: &PartitionVector<GaussRat>) {
    let terms: Vec<String> = v.iter().map(|(l, c)| format!("({}) δ_({l})", c.to_text())).collect();
    println!("{name} = {}", if terms.is_empty() { "0".into() } else { terms.join(" + ") });
}

fn main() {
    let p = KerovParams::new(gauss(1, 3, 0, 1), gauss(1, 2, 0, 1));
    let lambda = PartitionVector::basis("2,1".parse::<Partition>().unwrap());
    show("U δ_(2,1)", &apply_u(&lambda, &p));
    show("D δ_(2,1)", &apply_d(&lambda, &p));
    show("L δ_(2,1)", &apply_l(&lambda, &p));

    let two = GaussRat::from_i64(2);
    for r in 1..=3 {
        let p = KerovParams::with_r(gauss(1, 3, 1, 2), gauss(-2, 5, 0, 1), r);
        for mu in partitions_up_to(6) {
            let v = PartitionVector::basis(mu);
            let l = apply_l(&v, &p);
            assert!((&commutator(Generator::D, Generator::U, &v, &p) - &l).is_empty());
            let lu = &(&apply_l(&apply_u(&v, &p), &p) - &apply_u(&l, &p)) - &apply_u(&v, &p).scale(&two);
            assert!(lu.is_empty());
        }
    }
    println!("[D,U] = L and [L,U] = 2U hold exactly for r = 1, 2, 3 and |mu| <= 6");

    let p2 = KerovParams::with_r(gauss(1, 3, 0, 1), gauss(1, 2, 0, 1), 2);
    show("U_2 δ_∅", &apply_u(&PartitionVector::vacuum(), &p2));

    let e = exp_apply(Generator::U, &gauss(1, 2, 0, 1), &PartitionVector::vacuum(), &p, 3);
    println!("e^(U/2) δ_∅ has {} terms up to size 3", e.len());
}
