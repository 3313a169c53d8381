//! ρ(X) = det[K(x_a, x_b)] against direct summation of the mixed measure.

use zmeasures::kernel::{rho_det_report, KernelSpec};
use zmeasures::measure::{CorrelationTable, Params};
use zmeasures::partition::parse_points;
use zmeasures::scalar::c64;

fn main() -> zmeasures::Result<()> {
    let (z, zp, xi) = (c64(0.3, 0.0), c64(0.7, 0.0), 0.3);
    let ks = KernelSpec::new(z, zp, xi)?;
    let table = CorrelationTable::new(&Params::new(z, zp, c64(xi, 0.0))?, 25)?;
    println!("{} partitions, tail bound {:.2e}", table.len(), table.tail().bound);
    for x in ["-1/2", "1/2", "-3/2,-1/2", "-1/2,3/2", "-5/2,-1/2,1/2"] {
        let x = parse_points(x)?;
        let det = rho_det_report(&x, &ks, 1e-15)?;
        let brute = table.rho(&x);
        let names: Vec<String> = x.iter().map(ToString::to_string).collect();
        println!(
            "X = {{{}}}: det {:.12}, sum {:.12}, gap {:.1e}, cond {:.1}",
            names.join(", "),
            det.value.re,
            brute.re,
            (det.value - brute).norm(),
            det.condition
        );
    }
    Ok(())
}
