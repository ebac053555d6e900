//! Builds the connection coefficients on sampled configurations and prints
//! the residual of every law the crate can check symbolically: z- and
//! tau-flatness, the three-index commutation identity, and the lattice
//! translation laws.
//!
//! ```text
//! cargo run -p kzb-connection --example connection_suite
//! ```

use kzb_connection::*;

fn main() {
    let cfg = KzbConfig::default();
    let mut all_ok = true;
    let mut report = |label: &str, residual: f64, tol: f64| {
        let ok = residual < tol;
        all_ok &= ok;
        println!(
            "  {label:<34} {residual:10.3e}  (tol {tol:.0e})  {}",
            if ok { "ok" } else { "FAILED" }
        );
    };

    for n in [2usize, 3] {
        let reduced = BraidAlgebra::reduced(n, 4).unwrap();
        let full = BraidAlgebra::full(n, 4).unwrap();
        println!("n = {n}, truncation degree 4, {} q-terms", cfg.q_terms);

        let mut flat_r: f64 = 0.0;
        let mut flat_f: f64 = 0.0;
        let mut tau1: f64 = 0.0;
        let mut tau2: f64 = 0.0;
        let mut shifts = [0.0f64; 3];
        for seed in 0..5 {
            let p = ConnectionPoint::sample(n, seed);
            flat_r = flat_r.max(flatness_residual(&p, &reduced, &cfg).unwrap());
            flat_f = flat_f.max(flatness_residual(&p, &full, &cfg).unwrap());
            let (r1, r2) = tau_flatness_residual(&p, &reduced, &cfg).unwrap();
            tau1 = tau1.max(r1);
            tau2 = tau2.max(r2);
            for (s, kind) in shifts.iter_mut().zip([
                EquivarianceKind::Shift1,
                EquivarianceKind::ShiftTau,
                EquivarianceKind::ShiftDelta,
            ]) {
                *s = s.max(equivariance_residual(&p, &reduced, &cfg, kind).unwrap());
            }
        }
        report("z-flatness (reduced)", flat_r, 1e-9);
        report("z-flatness (full)", flat_f, 1e-9);
        report("tau-flatness, crossed derivative", tau1, 1e-8);
        report("tau-flatness, commutator", tau2, 1e-8);
        report("translation by 1", shifts[0], 1e-10);
        report("translation by tau (K)", shifts[1], 1e-9);
        report("translation by tau (Delta)", shifts[2], 1e-9);

        if n >= 3 {
            let mut cdybe: f64 = 0.0;
            for seed in 0..5 {
                let p = ConnectionPoint::sample(n, seed);
                cdybe = cdybe.max(cdybe_residual(&p, &full, 1, 2, 3, &cfg).unwrap());
            }
            report("three-index commutation", cdybe, 1e-9);
        }
        println!();
    }

    let p = ConnectionPoint::sample(3, 77);
    let scalar = cdybe_scalar_residual(p.zij(1, 2), p.zij(1, 3), p.tau, 8, cfg.q_terms);
    println!("scalar layer");
    report("six-term kernel identity", scalar, 1e-10);

    if !all_ok {
        std::process::exit(1);
    }
}
