//! Acceptance suite. Every criterion prints one PASS/FAIL line with the
//! measured quantity next to its threshold; the process exits non-zero if
//! any criterion fails.

use std::time::Instant;

use zmeasures::fock::{
    fermionic_commutator, fermionic_d, fermionic_l, fermionic_u, psi, psi_star, to_wedge, ModeWindow, WedgeVector,
};
use zmeasures::kernel::{
    det_lu, k_closed, k_r, k_series, KernelMatrix, KernelSpec, Method, RimHookTable,
};
use zmeasures::kerov::{apply_d, apply_l, apply_u, commutator, verify_du, Generator, KerovParams, PartitionVector};
use zmeasures::measure::{normalize_check, sample, sample_fit, CorrelationTable, Params};
use zmeasures::partition::{partitions_up_to, residue, HalfInt, MayaSet};
use zmeasures::scalar::{c64, gauss, GaussRat, Scalar, C64};
use zmeasures::sl2me::{
    mc, mc_branch, mc_series_oracle, mc_star, mc_star_branch, mc_star_series_oracle, q_form, Branch, Ladder,
    ModuleParams, ModuleVector, SeriesClass,
};

// 1
const NORMALIZATION_MAX_N: usize = 18;
// 2
const COMMUTATOR_MAX_SIZE: usize = 8;
// 3
const DU_TOL: f64 = 1e-10;
const DU_SIZE_CAP: usize = 12;
// 4
const FOCK_MAX_SIZE: usize = 8;
const CAR_WINDOW: usize = 12;
// 5
const KERNEL_FORMS_TOL: f64 = 1e-8;
const KERNEL_XIS: [f64; 3] = [0.1, 0.3, 0.6];
// 6
const CORR_N: usize = 25;
const CORR_TOL: f64 = 1e-6;
const CORR_MAX_POINTS: usize = 3;
// 7
const RIM_N: usize = 20;
const RIM_TOL: f64 = 1e-5;
const RIM_MAX_POINTS: usize = 2;
// 8
const ORACLE_ORDER: usize = 40;
const ORACLE_TOL: f64 = 1e-10;
const ORACLE_MAX_AB: f64 = 0.25;
const BRANCH_TOL: f64 = 1e-12;
// 9
const PERIODICITY_TOL: f64 = 1e-12;
const QFORM_TOL: f64 = 1e-12;
// 10
const SAMPLE_COUNT: usize = 100_000;
const SAMPLE_SEED: u64 = 1;
const SAMPLE_N: usize = 40;
const SAMPLE_MAX_TAIL: f64 = 1e-12;
const SAMPLE_FIT_SIZE: usize = 8;
const CHI2_LEVEL: f64 = 1e-3;

/// Evaluation tolerance handed to series routines.
const SERIES_TOL: f64 = 1e-14;

/// Name, time budget in seconds, check.
type Criterion = (&'static str, u64, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn h(t: i64) -> HalfInt {
    HalfInt::from_twice(t)
}

/// `{−7/2, …, 7/2}`.
fn grid() -> Vec<HalfInt> {
    (-4..4).map(|k| h(2 * k + 1)).collect()
}

fn subsets(points: &[HalfInt], max: usize) -> Vec<Vec<HalfInt>> {
    let mut out = vec![Vec::new()];
    for &p in points {
        let extended: Vec<Vec<HalfInt>> = out
            .iter()
            .filter(|s| s.len() < max)
            .map(|s| {
                let mut t = s.clone();
                t.push(p);
                t
            })
            .collect();
        out.extend(extended);
    }
    out
}

fn criterion_1() -> Outcome {
    let params = [
        (GaussRat::from_i64(2), GaussRat::from_i64(3)),
        (gauss(1, 2, 0, 1), gauss(5, 2, 0, 1)),
        (gauss(1, 1, 2, 1), gauss(1, 1, -2, 1)),
    ];
    let mut checked = 0;
    for (z, zp) in params {
        let p = Params::new(z.clone(), zp.clone(), GaussRat::from_i64(0)).unwrap();
        for n in 0..=NORMALIZATION_MAX_N {
            let total = normalize_check(n, &p).unwrap();
            if total != GaussRat::from_i64(1) {
                return outcome(false, format!("n={n}, z={}: sum = {}", z.to_text(), total.to_text()));
            }
            checked += 1;
        }
    }
    outcome(true, format!("sum = 1 exactly for {checked} (n, z, z') cases, n <= {NORMALIZATION_MAX_N}"))
}

fn criterion_2() -> Outcome {
    let two = GaussRat::from_i64(2);
    let mut checked = 0;
    for r in 1..=3 {
        let kp = KerovParams::with_r(gauss(3, 7, 2, 5), gauss(-5, 3, 1, 4), r);
        for lambda in partitions_up_to(COMMUTATOR_MAX_SIZE) {
            let v = PartitionVector::basis(lambda.clone());
            let du = &commutator(Generator::D, Generator::U, &v, &kp) - &apply_l(&v, &kp);
            let lu = &(&apply_l(&apply_u(&v, &kp), &kp) - &apply_u(&apply_l(&v, &kp), &kp)) - &apply_u(&v, &kp).scale(&two);
            let ld = &(&apply_l(&apply_d(&v, &kp), &kp) - &apply_d(&apply_l(&v, &kp), &kp)) + &apply_d(&v, &kp).scale(&two);
            if !(du.is_empty() && lu.is_empty() && ld.is_empty()) {
                return outcome(false, format!("nonzero residue at lambda={lambda}, r={r}"));
            }
            checked += 1;
        }
    }
    outcome(true, format!("[D,U]-L, [L,U]-2U, [L,D]+2D all exactly 0 on {checked} (lambda, r) cases"))
}

fn criterion_3() -> Outcome {
    let kp = KerovParams::new(c64(2.0, 0.0), c64(3.0, 0.0));
    let quarter = c64(0.25, 0.0);
    let rep = verify_du(quarter, quarter, &kp, DU_SIZE_CAP, DU_TOL).unwrap();
    outcome(
        rep.max_discrepancy <= DU_TOL,
        format!(
            "max residue {:.3e} <= {DU_TOL:e} on sizes <= {} ({} inputs, left series to size {}, tail est. {:.1e})",
            rep.max_discrepancy,
            DU_SIZE_CAP / 2,
            rep.inputs_checked,
            rep.series_cap,
            rep.tail_estimate
        ),
    )
}

fn car_state(window: &ModeWindow, mask: u32) -> MayaSet {
    let modes: Vec<HalfInt> = window.modes().collect();
    let inside = modes.iter().enumerate().filter(|(b, _)| mask & (1 << b) != 0).map(|(_, &k)| k);
    MayaSet::from_members(inside, window.lo)
}

fn criterion_4() -> Outcome {
    let mut checked = 0;
    for r in 1..=3 {
        let kp = KerovParams::with_r(gauss(3, 7, 2, 5), gauss(-5, 3, 1, 4), r);
        for lambda in partitions_up_to(FOCK_MAX_SIZE) {
            let d = PartitionVector::basis(lambda.clone());
            let w = to_wedge(&d);
            let ok_u = fermionic_u(&w, &kp) == to_wedge(&apply_u(&d, &kp));
            let ok_d = fermionic_d(&w, &kp) == to_wedge(&apply_d(&d, &kp));
            let ok_l = fermionic_commutator(&w, &kp) == to_wedge(&apply_l(&d, &kp))
                && (r > 1 || fermionic_l(&w, &kp) == to_wedge(&apply_l(&d, &kp)));
            if !(ok_u && ok_d && ok_l) {
                return outcome(false, format!("mismatch at lambda={lambda}, r={r} (U {ok_u}, D {ok_d}, L {ok_l})"));
            }
            checked += 1;
        }
    }
    let window = ModeWindow::centered(CAR_WINDOW);
    let modes: Vec<HalfInt> = window.modes().collect();
    let mut relations = 0usize;
    for mask in 0..(1u32 << CAR_WINDOW) {
        let v = WedgeVector::<GaussRat>::basis(car_state(&window, mask));
        for &k in &modes {
            let pk = psi(k, &v);
            let sk = psi_star(k, &v);
            for &l in &modes {
                // {ψ_k, ψ*_l} = δ_kl, {ψ_k, ψ_l} = 0, {ψ*_k, ψ*_l} = 0
                let a = &psi(k, &psi_star(l, &v)) + &psi_star(l, &pk);
                let expected = if k == l { v.clone() } else { WedgeVector::zero() };
                let b = &psi(l, &pk) + &psi(k, &psi(l, &v));
                let c = &psi_star(l, &sk) + &psi_star(k, &psi_star(l, &v));
                if a != expected || !b.is_empty() || !c.is_empty() {
                    return outcome(false, format!("CAR fails at k={k}, l={l}, state mask {mask:#x}"));
                }
                relations += 3;
            }
        }
    }
    outcome(
        true,
        format!(
            "U, D, L identical on {checked} (lambda, r) cases, |lambda| <= {FOCK_MAX_SIZE}; {relations} CAR relations on a {CAR_WINDOW}-mode window"
        ),
    )
}

fn criterion_5() -> Outcome {
    let params = [(c64(0.3, 0.0), c64(0.7, 0.0)), (c64(1.0, 2.0), c64(1.0, -2.0))];
    let mut worst = 0.0f64;
    let mut count = 0;
    for (z, zp) in params {
        for xi in KERNEL_XIS {
            let ks = KernelSpec::new(z, zp, xi).unwrap();
            for &i in &grid() {
                for &j in &grid() {
                    if i == j {
                        continue;
                    }
                    let s = k_series(i, j, &ks, SERIES_TOL).unwrap();
                    let c = k_closed(i, j, &ks, SERIES_TOL).unwrap();
                    worst = worst.max((s - c).norm());
                    count += 1;
                }
            }
        }
    }
    outcome(worst <= KERNEL_FORMS_TOL, format!("max |K_series - K_closed| = {worst:.3e} <= {KERNEL_FORMS_TOL:e} over {count} entries"))
}

fn criterion_6() -> Outcome {
    let cases = [(c64(0.3, 0.0), c64(0.7, 0.0), 0.3), (c64(1.0, 2.0), c64(1.0, -2.0), 0.2)];
    let points = grid();
    let sets = subsets(&points, CORR_MAX_POINTS);
    let mut details = Vec::new();
    let mut pass = true;
    for (z, zp, xi) in cases {
        let ks = KernelSpec::new(z, zp, xi).unwrap();
        let matrix = KernelMatrix::build(&points, &ks, Method::Closed, SERIES_TOL).unwrap();
        let table = CorrelationTable::new(&Params::new(z, zp, c64(xi, 0.0)).unwrap(), CORR_N).unwrap();
        let tail = table.tail();
        let mut worst = 0.0f64;
        for x in &sets {
            let idx: Vec<usize> = x.iter().map(|p| points.iter().position(|q| q == p).unwrap()).collect();
            let sub: Vec<Vec<C64>> = idx.iter().map(|&a| idx.iter().map(|&b| matrix.entries[a][b]).collect()).collect();
            let det = det_lu(&sub).value;
            worst = worst.max((det - table.rho(x)).norm());
        }
        let ok = tail.rigorous && worst <= tail.bound + CORR_TOL;
        pass &= ok;
        details.push(format!(
            "({}, {}, xi={xi}): max gap {worst:.3e} <= tail(25) {:.3e} + {CORR_TOL:e} [{} sets, {} partitions]",
            z.to_text(),
            zp.to_text(),
            tail.bound,
            sets.len(),
            table.len()
        ));
    }
    outcome(pass, details.join("; "))
}

fn criterion_7() -> Outcome {
    let cases = [
        (2, c64(0.3, 0.0), c64(0.7, 0.0), 0.3),
        (2, c64(0.5, 0.5), c64(0.5, -0.5), 0.2),
        (3, c64(0.4, 0.0), c64(0.6, 0.0), 0.3),
        (3, c64(0.5, 0.5), c64(0.5, -0.5), 0.2),
    ];
    let points = grid();
    let mut pass = true;
    let mut details = Vec::new();
    for (r, z, zp, xi) in cases {
        let ks = KernelSpec::with_r(z, zp, xi, r).unwrap();
        let table = RimHookTable::new(&ks, RIM_N).unwrap();
        let mut cross_zero = true;
        for &i in &points {
            for &j in &points {
                if residue(i, r) != residue(j, r) {
                    cross_zero &= k_r(i, j, &ks, Method::Closed, SERIES_TOL).unwrap() == c64(0.0, 0.0);
                }
            }
        }
        let mut worst = 0.0f64;
        let mut sets = 0;
        for x in subsets(&points, RIM_MAX_POINTS) {
            if x.is_empty() || x.iter().any(|&k| residue(k, r) != residue(x[0], r)) {
                continue;
            }
            let m = KernelMatrix::build(&x, &ks, Method::Closed, SERIES_TOL).unwrap();
            worst = worst.max((m.determinant().value - table.rho(&x)).norm());
            sets += 1;
        }
        let gap = table.normalization_gap();
        let ok = table.rigorous && cross_zero && worst <= table.tail + RIM_TOL && gap <= table.tail;
        pass &= ok;
        details.push(format!(
            "r={r} ({}, {}, xi={xi}): det gap {worst:.2e} over {sets} sets, Z_r gap {gap:.2e}, tail {:.2e}, cross-residue zero {cross_zero}",
            z.to_text(),
            zp.to_text(),
            table.tail
        ));
    }
    outcome(pass, details.join("; "))
}

fn criterion_8() -> Outcome {
    let zs = [(c64(0.3, 0.0), c64(0.7, 0.0)), (c64(1.0, 2.0), c64(1.0, -2.0)), (c64(2.0, 0.0), c64(3.0, 0.0))];
    let abs = [
        (c64(0.5, 0.0), c64(0.5, 0.0)),
        (c64(-0.4, 0.0), c64(0.6, 0.0)),
        (c64(0.25, 0.25), c64(0.5, -0.25)),
        (c64(0.0, 0.3), c64(0.2, 0.0)),
    ];
    let mut worst_oracle = 0.0f64;
    let mut worst_branch = 0.0f64;
    for (z, zp) in zs {
        for (a, b) in abs {
            assert!((a * b).norm() <= ORACLE_MAX_AB);
            let p = ModuleParams::new(z, zp, a, b);
            for &i in &grid() {
                for &j in &grid() {
                    let d = (mc(i, j, &p, SERIES_TOL).unwrap() - mc_series_oracle(i, j, &p, ORACLE_ORDER)).norm();
                    let ds = (mc_star(i, j, &p, SERIES_TOL).unwrap() - mc_star_series_oracle(i, j, &p, ORACLE_ORDER)).norm();
                    worst_oracle = worst_oracle.max(d).max(ds);
                }
                let up = mc_branch(i, i, &p, Branch::Up, SERIES_TOL).unwrap();
                let down = mc_branch(i, i, &p, Branch::Down, SERIES_TOL).unwrap();
                let up_s = mc_star_branch(i, i, &p, Branch::Up, SERIES_TOL).unwrap();
                let down_s = mc_star_branch(i, i, &p, Branch::Down, SERIES_TOL).unwrap();
                worst_branch = worst_branch.max((up - down).norm()).max((up_s - down_s).norm());
            }
        }
    }
    outcome(
        worst_oracle <= ORACLE_TOL && worst_branch <= BRANCH_TOL,
        format!(
            "max |closed - oracle(40)| = {worst_oracle:.3e} <= {ORACLE_TOL:e}; max branch gap at i=j {worst_branch:.3e} <= {BRANCH_TOL:e}"
        ),
    )
}

fn test_vector(seed: f64) -> ModuleVector<C64> {
    grid()
        .into_iter()
        .map(|k| {
            let x = k.to_f64() + seed;
            (k, c64(x.sin(), (2.0 * x).cos()))
        })
        .collect()
}

fn criterion_9() -> Outcome {
    let zs = [(c64(0.3, 0.0), c64(0.7, 0.0)), (c64(1.0, 2.0), c64(1.0, -2.0))];
    let abs = [(c64(0.5, 0.0), c64(0.5, 0.0)), (c64(0.3, 0.2), c64(-0.4, 0.1))];
    let mut worst = 0.0f64;
    let mut literal = 0.0f64;
    for (z, zp) in zs {
        for (a, b) in abs {
            let p = ModuleParams::new(z, zp, a, b);
            let shifted = p.shifted(1);
            for &i in &grid() {
                for &j in &grid() {
                    let lhs = mc(i, j, &shifted, SERIES_TOL).unwrap();
                    let rhs = mc(i.shift(1), j.shift(1), &p, SERIES_TOL).unwrap();
                    worst = worst.max((lhs - rhs).norm());
                    let other = mc(i.shift(-1), j.shift(-1), &p, SERIES_TOL).unwrap();
                    literal = literal.max((lhs - other).norm());
                }
            }
        }
    }
    let mut worst_q = 0.0f64;
    for (z, zp) in [(c64(0.3, 0.0), c64(0.7, 0.0)), (c64(1.2, 0.0), c64(1.9, 0.0)), (c64(1.0, 2.0), c64(1.0, -2.0))] {
        let class = SeriesClass::classify(&z, &zp);
        assert!(class.is_positive());
        let u = test_vector(0.1);
        let v = test_vector(1.7);
        let a = q_form(&Ladder::U.apply(&u, &z, &zp), &v, class, &z, &zp).unwrap();
        let b = q_form(&u, &Ladder::D.apply(&v, &z, &zp), class, &z, &zp).unwrap();
        let c = q_form(&Ladder::D.apply(&u, &z, &zp), &v, class, &z, &zp).unwrap();
        let d = q_form(&u, &Ladder::U.apply(&v, &z, &zp), class, &z, &zp).unwrap();
        worst_q = worst_q.max((a - b).norm()).max((c - d).norm());
    }
    outcome(
        worst <= PERIODICITY_TOL && worst_q <= QFORM_TOL,
        format!(
            "mc(i,j; z+1,z'+1) vs mc(i+1,j+1; z,z'): {worst:.3e} <= {PERIODICITY_TOL:e} (diagnostic: vs mc(i-1,j-1) {literal:.3e}); Q(Uu,v)-Q(u,Dv): {worst_q:.3e} <= {QFORM_TOL:e}"
        ),
    )
}

fn criterion_10() -> Outcome {
    let p = Params::new(c64(0.3, 0.0), c64(0.7, 0.0), c64(0.3, 0.0)).unwrap();
    let first = sample(&p, SAMPLE_COUNT, SAMPLE_N, SAMPLE_SEED, SAMPLE_MAX_TAIL).unwrap();
    let fit = sample_fit(&first.draws, &p, SAMPLE_N, SAMPLE_FIT_SIZE).unwrap();
    let render = |draws: &[zmeasures::Partition]| draws.iter().map(|l| format!("{l}\n")).collect::<String>();
    let again = sample(&p, SAMPLE_COUNT, SAMPLE_N, SAMPLE_SEED, SAMPLE_MAX_TAIL).unwrap();
    let identical = render(&first.draws).into_bytes() == render(&again.draws).into_bytes();
    outcome(
        fit.p_value > CHI2_LEVEL && identical,
        format!(
            "chi2 = {:.2} on {} dof, p = {:.4} > {CHI2_LEVEL:e}; rerun byte-identical: {identical}; truncation tail {:.1e}",
            fit.statistic, fit.dof, fit.p_value, first.tail.bound
        ),
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("normalization of M_n", 60, criterion_1),
        ("operator identities", 30, criterion_2),
        ("DU factorization", 30, criterion_3),
        ("Fock identification and CAR", 30, criterion_4),
        ("series vs closed kernel", 10, criterion_5),
        ("determinantal formula", 300, criterion_6),
        ("rim-hook determinantal formula", 300, criterion_7),
        ("matrix-element oracle", 10, criterion_8),
        ("periodicity and Q-form", 5, criterion_9),
        ("sampler", 60, criterion_10),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failures = 0;
    for (n, (name, budget, run)) in criteria.iter().enumerate() {
        let id = n + 1;
        if !filter.is_empty() && !filter.iter().any(|f| *f == id.to_string()) {
            continue;
        }
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        let tag = if result.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {id:>2} {name}: {} ({secs:.1} s, budget {budget} s)", result.detail);
        if !result.pass {
            failures += 1;
        }
    }
    if failures > 0 {
        println!("{failures} criterion(s) failed");
        std::process::exit(1);
    }
}
