//! r-cores, r-quotients and the rim-hook correlation kernel.

use zmeasures::kernel::{rho_det, KernelSpec, RimHookTable};
use zmeasures::partition::{parse_points, Partition};
use zmeasures::scalar::c64;

fn main() -> zmeasures::Result<()> {
    let lambda: Partition = "5,3,3,1".parse()?;
    for r in 2..=3 {
        let cq = lambda.core_quotient(r)?;
        let quotients: Vec<String> = cq.quotients.iter().map(|q| format!("({q})")).collect();
        println!("r = {r}: core ({}), quotient [{}], charges {:?}", cq.core, quotients.join(" "), cq.charges);
    }
    for hook in "1".parse::<Partition>()?.addable_rim_hooks(2) {
        println!("(1) + 2-hook -> ({}), height {}, content sum {}", hook.target, hook.height, hook.content_sum);
    }

    let ks = KernelSpec::with_r(c64(0.3, 0.0), c64(0.7, 0.0), 0.3, 2)?;
    let table = RimHookTable::new(&ks, 20)?;
    println!(
        "\nZ_2 truncated {:.10}, predicted {:.10}, tail {:.1e}",
        table.z_truncated.re, table.z_predicted.re, table.tail
    );
    for text in ["-1/2", "1/2", "-3/2,1/2", "-1/2,3/2", "-1/2,1/2"] {
        let x = parse_points(text)?;
        println!("X = {{{text}}}: det {:.9}, weights {:.9}", rho_det(&x, &ks, 1e-15)?.re, table.rho(&x).re);
    }
    Ok(())
}
