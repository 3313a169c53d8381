//! Partitions as semi-infinite wedges and the fermionic form of U and D.

use zmeasures::fock::{fermionic_d, fermionic_u, psi, psi_star, to_wedge, WedgeVector};
use zmeasures::kerov::{apply_d, apply_u, KerovParams, PartitionVector};
use zmeasures::partition::{HalfInt, Partition};
use zmeasures::scalar::{gauss, GaussRat, Scalar};

fn main() {
    let lambda: Partition = "3,1".parse().unwrap();
    let s = lambda.maya();
    println!("Maya set of (3,1): {s}, charge {}", s.charge());
    let (a, b) = lambda.frobenius();
    let show = |v: &[HalfInt]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    println!("modified Frobenius coordinates: ({} | {})", show(&a), show(&b));

    let v = WedgeVector::<GaussRat>::basis(s.clone());
    let k = HalfInt::from_twice(3);
    let w = psi(k, &psi_star(HalfInt::from_twice(5), &v));
    for (t, c) in w.iter() {
        println!("ψ_(3/2) ψ*_(5/2) |(3,1)> = {} |{}>", c.to_text(), Partition::from_maya(t).unwrap());
    }

    for r in 1..=3 {
        let p = KerovParams::with_r(gauss(2, 7, 1, 3), gauss(3, 5, 0, 1), r);
        let d = PartitionVector::basis(lambda.clone());
        assert_eq!(fermionic_u(&to_wedge(&d), &p), to_wedge(&apply_u(&d, &p)));
        assert_eq!(fermionic_d(&to_wedge(&d), &p), to_wedge(&apply_d(&d, &p)));
    }
    println!("fermionic U_r, D_r agree with Kerov's operators on (3,1) for r = 1, 2, 3");
}
