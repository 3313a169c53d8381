//! Matrix elements of e^{αU} e^{βD} in the sl(2) module, against their power
//! series, plus the shift and invariant-form identities.

use zmeasures::partition::HalfInt;
use zmeasures::scalar::{c64, C64};
use zmeasures::sl2me::{mc, mc_series_oracle, mc_star, q_form, Ladder, ModuleParams, ModuleVector, SeriesClass};

fn main() -> zmeasures::Result<()> {
    let p = ModuleParams::new(c64(0.3, 0.0), c64(0.7, 0.0), c64(0.5, 0.0), c64(0.5, 0.0));
    let h = HalfInt::from_twice;
    println!("  i     j     mc(i,j)                oracle(40)");
    for (i, j) in [(-1, -1), (-1, 1), (3, -1), (-5, 3)] {
        let (i, j) = (h(i), h(j));
        let a = mc(i, j, &p, 1e-15)?;
        let b = mc_series_oracle(i, j, &p, 40);
        println!("{i:>5} {j:>5}  {:+.15}  {:+.15}", a.re, b.re);
    }
    println!("mc*(-1/2, 1/2) = {:.12}", mc_star(h(-1), h(1), &p, 1e-15)?.re);

    let shifted = p.shifted(1);
    let gap = (mc(h(1), h(-3), &shifted, 1e-15)? - mc(h(3), h(-1), &p, 1e-15)?).norm();
    println!("|mc(1/2,-3/2; z+1,z'+1) - mc(3/2,-1/2; z,z')| = {gap:.1e}");

    let (z, zp) = (c64(0.3, 0.0), c64(0.7, 0.0));
    let class = SeriesClass::classify(&z, &zp);
    let u: ModuleVector<C64> = (-3..3).map(|k| (h(2 * k + 1), c64(1.0 / (k as f64 + 4.0), 0.0))).collect();
    let v: ModuleVector<C64> = (-3..3).map(|k| (h(2 * k + 1), c64(0.0, k as f64))).collect();
    let lhs = q_form(&Ladder::U.apply(&u, &z, &zp), &v, class, &z, &zp)?;
    let rhs = q_form(&u, &Ladder::D.apply(&v, &z, &zp), class, &z, &zp)?;
    println!("Q(Uu, v) - Q(u, Dv) = {:.1e}  ({class:?} series)", (lhs - rhs).norm());
    Ok(())
}
