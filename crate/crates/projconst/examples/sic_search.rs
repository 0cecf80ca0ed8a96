//! Find a Weyl-Heisenberg fiducial vector in C^4 numerically: the unit
//! vector whose orbit under the 16 displacement operators is an
//! equiangular tight frame of 16 vectors (a maximal complex system).
//! The exact d = 2 and d = 3 fiducials come out in closed form.
//!
//! Run with: cargo run --example sic_search

use projconst::config::OptConfig;
use projconst::constructions::{sic_fiducial, wh_orbit};
use projconst::frames::certify_etf;
use projconst::projection::certify_equality;

fn main() -> Result<(), projconst::Error> {
    let cfg = OptConfig { starts: 16, tol: 1e-9, ..OptConfig::default() };

    for d in [2usize, 3, 4] {
        let fid = sic_fiducial(d, &cfg)?;
        println!("d = {d}: fiducial found, orbit coherence spread {:.3e} (converged: {})",
            fid.achieved_spread, fid.converged);
        print!("  v = [");
        for (k, z) in fid.v.iter().enumerate() {
            if k > 0 {
                print!(", ");
            }
            print!("{:.6}{:+.6}i", z.re, z.im);
        }
        println!("]");

        let orbit = wh_orbit(&fid.v)?;
        let cert = certify_etf(&orbit, 1e-8);
        println!(
            "  orbit: {} vectors in C^{}, coherence {:.12} = 1/sqrt({})",
            orbit.len(),
            orbit.dim(),
            cert.coherence,
            d + 1
        );

        let eq = certify_equality(&orbit, 1e-8)?;
        let target = (1.0 + (d as f64 - 1.0) * ((d + 1) as f64).sqrt()) / d as f64;
        println!(
            "  attains the global bound: value {:.15}, (1 + (d-1) sqrt(d+1))/d = {:.15}\n",
            eq.lambda_value, target
        );
    }
    Ok(())
}
