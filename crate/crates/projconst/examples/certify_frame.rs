//! File I/O round trip: write a frame to the text format, read it back
//! bit-for-bit, and certify it. Also shows what the certificate reports
//! for a frame that is tight but not equiangular.
//!
//! Run with: cargo run --example certify_frame

use projconst::constructions::simplex_etf;
use projconst::frames::{certify_etf, random_parseval};
use projconst::io::{format_frame, parse_frame, read_frame_file, write_frame_file};
use projconst::Field;

fn main() -> Result<(), projconst::Error> {
    let dir = std::env::temp_dir().join("projconst-certify-example");
    std::fs::create_dir_all(&dir)?;

    // A genuine ETF survives the round trip and certifies.
    let simplex = simplex_etf(3, Field::Real)?;
    let path = dir.join("simplex-3.frame");
    write_frame_file(&path, &simplex)?;
    let back = read_frame_file(&path)?;
    assert_eq!(back.matrix(), simplex.matrix(), "files round-trip f64 exactly");
    println!("wrote and re-read {}:", path.display());
    for line in format_frame(&back).lines().take(3) {
        println!("  {line}");
    }
    println!("  ...");
    let cert = certify_etf(&back, 1e-9);
    println!(
        "certificate: is_etf = {}, coherence = {:.12} (= 1/m), spread = {:.1e}\n",
        cert.is_etf, cert.coherence, cert.spread
    );

    // A random Parseval frame is tight by construction but almost surely
    // not equiangular; the certificate says exactly why it fails.
    let random = random_parseval(2, 5, Field::Complex, 7)?;
    let cert = certify_etf(&random, 1e-9);
    println!("random Parseval 2x5 complex frame: is_etf = {}", cert.is_etf);
    for reason in &cert.reasons {
        println!("  reason: {reason}");
    }

    // Parsing reports the offending line on malformed input.
    let err = parse_frame("frame real 2 2\n1 0\n0 oops\n").unwrap_err();
    println!("\nmalformed file rejected with: {err}");

    std::fs::remove_dir_all(&dir).ok();
    Ok(())
}
