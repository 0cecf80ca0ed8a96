//! Audit the Bukh-Cox inequality on concrete frames. For a Parseval
//! frame with columns u_i and mixing parameter phi > 0:
//!
//!   2 phi sum_ij |<u_i, u_j>|  <=  sum_ij |<u_i, u_j>|^2 / (|u_i| |u_j|)
//!                                + (phi^2 - (1 - phi)^2 / rk G) (sum_i |u_i|)^2
//!
//! where G is the Gram matrix of the lifted rank-one system. Equality
//! holds exactly on the maximal equiangular frames at the Welch phi;
//! random frames pass with strict slack.
//!
//! Run with: cargo run --example bukhcox_audit

use projconst::bukhcox::{audit_central_inequality, audit_rank_structure, default_phi};
use projconst::constructions::{real_maximal_etf, simplex_etf};
use projconst::frames::random_parseval;
use projconst::Field;

fn main() -> Result<(), projconst::Error> {
    println!("equality cases: maximal frames at their Welch-level phi\n");
    for (name, frame, phi) in [
        ("simplex(2) [3 vectors in R^2]", simplex_etf(2, Field::Real)?, 0.5),
        ("icosahedral [6 vectors in R^3]", real_maximal_etf(3)?, 1.0 / 5.0f64.sqrt()),
        ("28 vectors in R^7", real_maximal_etf(7)?, 1.0 / 3.0),
    ] {
        let audit = audit_central_inequality(&frame, phi)?;
        println!("{name}, phi = {phi:.12}:");
        for line in &audit.lines {
            println!(
                "  {:<28} lhs {:>18.12} <= rhs {:>18.12}  slack {:+.2e}  [{}]",
                line.name,
                line.lhs,
                line.rhs,
                line.slack,
                if line.pass { "pass" } else { "FAIL" }
            );
        }
    }

    println!("\nrandom Parseval frames at the default phi (strict slack):\n");
    for seed in 0..4u64 {
        let f = random_parseval(3, 7, Field::Real, 100 + seed)?;
        let phi = default_phi(3, Field::Real);
        let audit = audit_central_inequality(&f, phi)?;
        let central = &audit.lines[0];
        println!(
            "  seed {:>3}: central slack {:+.6e}, rank G = {} (cap {}), all pass: {}",
            100 + seed,
            central.slack,
            audit.rank_g,
            3 * 4 / 2,
            audit.all_pass
        );
    }

    println!("\nrank structure: A = a G - b vv* never exceeds rank G\n");
    let f = random_parseval(3, 9, Field::Complex, 5)?;
    let phi = default_phi(3, Field::Complex);
    for (a, b) in [(1.0, 0.0), (0.0, 1.0), (1.0, phi * phi / (1.0 + phi))] {
        let rank = audit_rank_structure(&f, a, b)?;
        println!(
            "  a = {a:.4}, b = {b:.4}: rank A = {} <= rank G = {} (cap m^2 = {}), \
             trace bound holds: {}",
            rank.rank_a, rank.rank_g, rank.rank_cap, rank.trace_ok
        );
    }
    Ok(())
}
