//! Recover the Grunbaum value lambda(2, 3) = 4/3 by direct search and
//! confirm that the maximizer is the 3-vector equiangular tight frame
//! with uniform weights.
//!
//! Run with: cargo run --example grunbaum

use projconst::config::OptConfig;
use projconst::frames::{certify_etf, coherence_profile};
use projconst::projection::{lambda_search, mu_search};
use projconst::Field;

fn main() -> Result<(), projconst::Error> {
    let cfg = OptConfig::default(); // 32 starts, seed 0
    let target = 4.0 / 3.0;

    let lambda = lambda_search(2, 3, Field::Real, &cfg)?;
    println!("lambda(2, 3) search over Parseval frames and weight vectors:");
    println!("  best value    {:.15}", lambda.best_value);
    println!("  target 4/3    {:.15}", target);
    println!("  |error|       {:.3e}", (lambda.best_value - target).abs());
    println!("  bound delta   {:.15}  (gap {:.3e})", lambda.delta, lambda.gap);
    println!("  starts        {} (seed {})", lambda.starts, lambda.seed);

    // The optimal weights are uniform: every column matters equally.
    let uniform = (3.0f64).sqrt().recip();
    let weight_dev = lambda
        .best_weights
        .iter()
        .map(|w| (w - uniform).abs())
        .fold(0.0, f64::max);
    println!("  max |t_i - 1/sqrt(3)| = {weight_dev:.3e}");

    // The optimal frame is equiangular with coherence 1/2: three unit
    // vectors at mutual angle 120 degrees.
    let cert = certify_etf(&lambda.best_frame, 1e-6);
    let profile = coherence_profile(&lambda.best_frame)?;
    println!(
        "  optimal frame: equiangular tight = {}, coherence {:.12} (Welch {:.12})",
        cert.is_etf, profile.offdiag_max, profile.welch_value
    );

    // The uniform-weight search lands on the same value: the maximizer
    // has uniform optimal weights, so mu(2, 3) = lambda(2, 3) here.
    let mu = mu_search(2, 3, Field::Real, &cfg)?;
    println!("\nmu(2, 3) search with pinned uniform weights:");
    println!("  best value    {:.15}", mu.best_value);
    println!("  |error|       {:.3e}", (mu.best_value - target).abs());
    Ok(())
}
