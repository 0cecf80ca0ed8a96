//! Build the named equiangular tight frames and certify each one: the
//! regular simplex in every small dimension, the 6 icosahedral
//! diagonals in R^3, and the 28-vector system in R^7. Each certified
//! frame attains the delta bound exactly.
//!
//! Run with: cargo run --example construct_etfs

use projconst::constructions::{real_maximal_etf, simplex_etf};
use projconst::frames::{certify_etf, FrameMatrix};
use projconst::projection::certify_equality;
use projconst::Field;

fn show(name: &str, frame: &FrameMatrix) -> Result<(), projconst::Error> {
    let cert = certify_etf(frame, 1e-9);
    print!(
        "{name:<28} {}x{:<3} coherence {:.12} (Welch {:.12}, spread {:.1e})",
        cert.m, cert.n, cert.coherence, cert.welch_value, cert.spread
    );
    if !cert.is_etf {
        println!("  NOT an ETF: {}", cert.reasons.join("; "));
        return Ok(());
    }
    let eq = certify_equality(frame, 1e-9)?;
    println!(
        "  value {:.12} = delta {}  [attained: {}]",
        eq.lambda_value,
        eq.delta_exact.unwrap_or_else(|| format!("{:.12}", eq.delta)),
        eq.attained
    );
    Ok(())
}

fn main() -> Result<(), projconst::Error> {
    println!("simplex frames: m+1 unit vectors at mutual angle -1/m\n");
    for m in 1..=5 {
        show(&format!("simplex({m}, real)"), &simplex_etf(m, Field::Real)?)?;
    }
    show("simplex(3, complex)", &simplex_etf(3, Field::Complex)?)?;

    println!("\nmaximal real systems: N = m(m+1)/2 vectors\n");
    for m in [2, 3, 7] {
        show(&format!("real_maximal_etf({m})"), &real_maximal_etf(m)?)?;
    }

    println!("\n(the fourth and last known case, m = 23, is built from a");
    println!(" 276-vertex two-graph: see the two_graph_276 example)");
    Ok(())
}
