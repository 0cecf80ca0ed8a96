//! Survey the upper-bound landscape: delta(m, N) across N for small m,
//! the cardinality caps where the global bound lives, and the known
//! attained values.
//!
//! Run with: cargo run --example bounds

use projconst::frames::cardinality_cap;
use projconst::projection::{bound_report, delta_bound, delta_bound_exact, global_upper_bound};
use projconst::Field;

fn main() -> Result<(), projconst::Error> {
    println!("delta(m, N) = (m/N)(1 + sqrt((N-1)(N-m)/m)) for small real pairs\n");
    println!("{:>3} {:>4} {:>20} {:>12}", "m", "N", "delta", "exact");
    for m in 1..=4usize {
        for n in m..=cardinality_cap(m, Field::Real) {
            let exact = delta_bound_exact(m, n)
                .map(|(p, q)| format!("{p}/{q}"))
                .unwrap_or_default();
            println!("{:>3} {:>4} {:>20.15} {:>12}", m, n, delta_bound(m, n)?, exact);
        }
        println!();
    }

    println!("global bounds over all N (attained at the cardinality cap):\n");
    println!(
        "{:>3} {:>6} {:>8} {:>20} {:>22}",
        "m", "field", "cap", "global bound", "known attained value"
    );
    for &(m, field) in &[
        (2, Field::Real),
        (3, Field::Real),
        (7, Field::Real),
        (23, Field::Real),
        (2, Field::Complex),
        (3, Field::Complex),
        (8, Field::Complex),
    ] {
        let cap = cardinality_cap(m, field);
        let report = bound_report(m, cap, field)?;
        let golden = report
            .golden
            .as_ref()
            .map(|g| format!("{} = {:.12}", g.label, g.value))
            .unwrap_or_else(|| "-".into());
        println!(
            "{:>3} {:>6} {:>8} {:>20.15} {:>22}",
            m,
            field.to_string(),
            cap,
            global_upper_bound(m, field)?,
            golden
        );
    }

    println!("\nAt N = m the bound collapses to 1: delta(5, 5) = {}", delta_bound(5, 5)?);
    Ok(())
}
