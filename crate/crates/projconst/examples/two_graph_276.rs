//! The largest known real equiangular system: 276 lines in R^23, built
//! from the regular two-graph on 276 vertices (itself assembled from the
//! 253 weight-7 words of the binary Golay code). The example generates
//! the Seidel matrix, extracts the frame from its two-eigenvalue
//! structure, writes both to files, and certifies the 14/3 value.
//!
//! Run with: cargo run --release --example two_graph_276

use projconst::constructions::{golay_heptads, regular_two_graph_276, seidel_signs, seidel_to_etf};
use projconst::io::{write_frame_file, write_seidel_file};
use projconst::projection::certify_equality;

fn main() -> Result<(), projconst::Error> {
    let heptads = golay_heptads();
    println!("Golay code weight-7 words: {} (a Steiner system S(4, 7, 23))", heptads.len());

    let seidel = regular_two_graph_276();
    println!("regular two-graph on {} vertices assembled", seidel.n());

    let frame = seidel_to_etf(&seidel, 1e-8)?;
    println!(
        "extracted frame: {} unit-norm vectors in R^{}",
        frame.len(),
        frame.dim()
    );

    let eq = certify_equality(&frame, 1e-9)?;
    println!(
        "certified: value {:.15} = delta(23, 276) = {} (attained: {})",
        eq.lambda_value,
        eq.delta_exact.clone().unwrap_or_default(),
        eq.attained
    );

    // The sign pattern of the Gram matrix recovers the two-graph we
    // started from - the correspondence is invertible.
    let recovered = seidel_signs(&frame, 1e-10)?;
    println!("Gram sign pattern reproduces the Seidel matrix: {}", recovered == seidel);

    let dir = std::env::temp_dir().join("projconst-two-graph-example");
    std::fs::create_dir_all(&dir)?;
    let seidel_path = dir.join("two_graph_276.seidel");
    let frame_path = dir.join("etf-23-276.frame");
    write_seidel_file(&seidel_path, &seidel)?;
    write_frame_file(&frame_path, &frame)?;
    println!("\nwrote {}", seidel_path.display());
    println!("wrote {}", frame_path.display());
    println!("(point PROJCONST_DATA at the .seidel file to feed the CLI's");
    println!(" `construct real-max 23` and `reproduce` commands from disk)");
    Ok(())
}
