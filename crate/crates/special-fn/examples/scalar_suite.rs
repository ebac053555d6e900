//! Runs every named scalar/jet identity check at the default configuration
//! and prints the worst residual for each.
//!
//! ```text
//! cargo run -p special-fn --example scalar_suite
//! ```

use special_fn::{check_scalar_identity, IdentityName, SampleConfig};

fn main() {
    let cfg = SampleConfig::default();
    let samples = 20;
    let seed = 2026;

    println!(
        "identity checks: {samples} samples each, jet order {}, {} q-terms",
        cfg.jet_order, cfg.q_terms
    );
    let mut all_ok = true;
    for name in IdentityName::ALL {
        let r = check_scalar_identity(name, samples, seed, &cfg);
        let ok = r < 1e-9;
        all_ok &= ok;
        println!(
            "  {:<14} max residual {:.3e}   {}",
            name.to_string(),
            r,
            if ok { "ok" } else { "FAILED" }
        );
    }
    if !all_ok {
        std::process::exit(1);
    }
}
