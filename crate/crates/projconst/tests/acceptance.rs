//! Acceptance suite: every advertised result, one test per criterion,
//! each at its stated tolerance and time budget. Run with
//! `cargo test --test acceptance -- --show-output` to see one summary
//! line per criterion.

use std::time::Instant;

use projconst::config::OptConfig;
use projconst::constructions::{
    real_maximal_etf, regular_two_graph_276, seidel_to_etf, sic_fiducial, wh_orbit,
};
use projconst::frames::{gram_abs, mu_objective, random_parseval};
use projconst::projection::{
    certify_equality, delta_bound, lambda_search, mu_search, objective, optimal_weights,
    WeightVector,
};
use projconst::replication::{replicate, replicated_mu_objective, verify_replication_identity, RationalWeights};
use projconst::rng::{gaussian, seeded, start_seed};
use projconst::{Error, Field};

/// 200 deterministic (m, N, field, seed) tuples with m <= 5, N <= 20.
fn frame_corpus() -> Vec<(usize, usize, Field, u64)> {
    let mut corpus = Vec::with_capacity(200);
    let mut seed = 1000u64;
    'fill: loop {
        for m in 1..=5usize {
            for n in [m, m + 1, 2 * m, 3 * m, 20] {
                if n < m || n > 20 {
                    continue;
                }
                for field in [Field::Real, Field::Complex] {
                    corpus.push((m, n, field, seed));
                    seed += 1;
                    if corpus.len() == 200 {
                        break 'fill;
                    }
                }
            }
        }
    }
    corpus
}

#[test]
fn criterion_1_lambda_2_3_recovers_four_thirds_via_cli() {
    let started = Instant::now();
    let output = std::process::Command::new(env!("CARGO_BIN_EXE_projconst"))
        .args(["lambda", "-m", "2", "-N", "3", "--field", "real"])
        .output()
        .expect("binary runs");
    let elapsed = started.elapsed();
    assert!(output.status.success(), "stderr: {}", String::from_utf8_lossy(&output.stderr));
    let doc: serde_json::Value = serde_json::from_slice(&output.stdout).expect("JSON report");
    let report = &doc["report"];
    let best = report["best_value"].as_f64().unwrap();
    let err = (best - 4.0 / 3.0).abs();
    assert!(err <= 1e-6, "lambda(2,3) = {best}, off by {err:.3e}");
    assert_eq!(doc["manifest"]["config"]["starts"], 32);
    assert_eq!(doc["manifest"]["seed"], 0);
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}, budget 5 s");
    println!(
        "[PASS] criterion 1: lambda(2,3) = {best:.12} (|err| {err:.1e} <= 1e-6, \
         32 starts, seed 0, {:.2} s < 5 s)",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_2_golden_real_values_on_certified_constructions() {
    let golden3 = (1.0 + 5.0f64.sqrt()) / 2.0;
    let cases: [(&str, Box<dyn Fn() -> Result<projconst::frames::FrameMatrix, Error>>, f64); 3] = [
        ("(3, 6)", Box::new(|| real_maximal_etf(3)), golden3),
        ("(7, 28)", Box::new(|| real_maximal_etf(7)), 2.5),
        (
            "(23, 276)",
            Box::new(|| seidel_to_etf(&regular_two_graph_276(), 1e-8)),
            14.0 / 3.0,
        ),
    ];
    for (name, build, target) in cases {
        let started = Instant::now();
        let frame = build().expect("construction succeeds");
        let report = certify_equality(&frame, 1e-9).expect("frame certifies");
        let elapsed = started.elapsed();
        let err = (report.lambda_value - target).abs();
        assert!(err <= 1e-9, "{name}: value {} off by {err:.3e}", report.lambda_value);
        assert!(report.attained, "{name}: bound not attained");
        assert!(elapsed.as_secs_f64() < 10.0, "{name} took {elapsed:?}, budget 10 s");
        println!(
            "[PASS] criterion 2: lambda{name} = {:.12} (|err| {err:.1e} <= 1e-9, {:.2} s < 10 s)",
            report.lambda_value,
            elapsed.as_secs_f64()
        );
    }
}

#[test]
fn criterion_3_complex_golden_values_and_sic_search() {
    let cfg = OptConfig::default();

    // Closed-form fiducials first.
    for (d, target, tol) in [(2usize, (1.0 + 3.0f64.sqrt()) / 2.0, 1e-8), (3, 5.0 / 3.0, 1e-9)] {
        let fid = sic_fiducial(d, &cfg).unwrap();
        let report = certify_equality(&wh_orbit(&fid.v).unwrap(), 1e-8).unwrap();
        let err = (report.lambda_value - target).abs();
        assert!(err <= tol, "d = {d}: value {} off by {err:.3e}", report.lambda_value);
        println!(
            "[PASS] criterion 3: SIC d={d} value = {:.12} (|err| {err:.1e} <= {tol:.0e})",
            report.lambda_value
        );
    }

    // Numerical search for d = 4..8.
    for d in 4usize..=8 {
        let started = Instant::now();
        let fid = sic_fiducial(d, &cfg).unwrap();
        let elapsed = started.elapsed();
        assert!(
            fid.achieved_spread < 1e-8,
            "d = {d}: spread {:.3e} >= 1e-8",
            fid.achieved_spread
        );
        assert!(elapsed.as_secs_f64() < 60.0, "d = {d} took {elapsed:?}, budget 60 s");
        println!(
            "[PASS] criterion 3: SIC d={d} search spread = {:.1e} < 1e-8 ({:.2} s < 60 s)",
            fid.achieved_spread,
            elapsed.as_secs_f64()
        );
    }
}

#[test]
fn criterion_4_bound_dominance_on_200_random_frames() {
    let started = Instant::now();
    let corpus = frame_corpus();
    assert_eq!(corpus.len(), 200);
    let mut worst_delta_slack = f64::INFINITY;
    let mut worst_mu_slack = f64::INFINITY;
    for &(m, n, field, seed) in &corpus {
        let f = random_parseval(m, n, field, seed).unwrap();
        let delta = delta_bound(m, n).unwrap();
        // The Perron value dominates the objective at every weight
        // vector, so checking it checks them all.
        let (_, value) = optimal_weights(&f).unwrap();
        assert!(
            value <= delta + 1e-8,
            "(m={m}, N={n}, {field}, seed {seed}): value {value} exceeds delta {delta}"
        );
        worst_delta_slack = worst_delta_slack.min(delta + 1e-8 - value);
        let mu = mu_objective(&f);
        let cap = projconst::bukhcox::mu_upper_bound(m, field).unwrap();
        assert!(
            mu <= cap + 1e-8,
            "(m={m}, N={n}, {field}, seed {seed}): mu {mu} exceeds cap {cap}"
        );
        worst_mu_slack = worst_mu_slack.min(cap + 1e-8 - mu);
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "took {elapsed:?}, budget 30 s");
    println!(
        "[PASS] criterion 4: 200 frames, every value <= delta + 1e-8 and mu <= cap + 1e-8 \
         (min slacks {worst_delta_slack:.2e}, {worst_mu_slack:.2e}; {:.2} s < 30 s)",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_5_bukhcox_audit_and_rank_caps_on_200_random_frames() {
    let started = Instant::now();
    for &(m, n, field, seed) in &frame_corpus() {
        let f = random_parseval(m, n, field, seed).unwrap();
        let phi = projconst::bukhcox::default_phi(m, field);
        let audit = projconst::bukhcox::audit_central_inequality(&f, phi).unwrap();
        assert!(
            audit.all_pass,
            "(m={m}, N={n}, {field}, seed {seed}): {:?}",
            audit.lines
        );
        let cap = match field {
            Field::Real => m * (m + 1) / 2,
            Field::Complex => m * m,
        };
        assert!(
            audit.rank_g <= cap,
            "(m={m}, N={n}, {field}, seed {seed}): rank {} over cap {cap}",
            audit.rank_g
        );
        let rank = projconst::bukhcox::audit_rank_structure(&f, 1.0, phi * phi / (1.0 + phi))
            .unwrap();
        assert!(rank.rank_ok && rank.trace_ok, "(m={m}, N={n}, {field}, seed {seed})");
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}, budget 60 s");
    println!(
        "[PASS] criterion 5: central inequality, auxiliary bounds, and rank caps hold on \
         200 frames ({:.2} s < 60 s)",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_6_replication_identity_on_100_instances() {
    let mut rng = seeded(77);
    let mut done = 0usize;
    let mut worst_rel = 0.0f64;
    'outer: for round in 0.. {
        for m in 1..=4usize {
            for n in m..=8usize {
                let f = random_parseval(m, n, Field::Real, start_seed(500, done + round)).unwrap();
                // Strictly positive counts keep every block materializable.
                let counts: Vec<u64> =
                    (0..n).map(|_| 1 + (projconst::rng::unit(&mut rng) * 5.0) as u64).collect();
                let w = RationalWeights::new(7, counts).unwrap();
                let (lhs, rhs, ok) = verify_replication_identity(&f, &w).unwrap();
                let rel = (lhs - rhs).abs() / rhs.max(1.0);
                assert!(ok, "(m={m}, N={n}): relative error {rel:.3e} >= 1e-10");
                worst_rel = worst_rel.max(rel);
                // Analytic vs materialized cross-check.
                let analytic = replicated_mu_objective(&f, &w).unwrap();
                let materialized = mu_objective(&replicate(&f, &w).unwrap());
                let cross = (analytic - materialized).abs() / materialized.max(1.0);
                assert!(
                    cross < 1e-10,
                    "(m={m}, N={n}): analytic {analytic} vs materialized {materialized}"
                );
                done += 1;
                if done == 100 {
                    break 'outer;
                }
            }
        }
    }
    println!(
        "[PASS] criterion 6: replication identity holds on 100 instances \
         (worst relative error {worst_rel:.2e} < 1e-10, analytic = materialized)"
    );
}

#[test]
fn criterion_7_perron_weights_match_dense_random_sampling() {
    let mut cases = Vec::new();
    for m in 1..=3usize {
        for n in m..=6usize {
            cases.push((m, n));
        }
    }
    // 15 shape pairs; repeat the first shapes with fresh seeds to reach 20.
    for k in 0..5 {
        cases.push((k % 3 + 1, 6));
    }
    assert_eq!(cases.len(), 20);

    let samples = 1_000_000usize;
    let mut worst_gap = 0.0f64;
    for (idx, &(m, n)) in cases.iter().enumerate() {
        let f = random_parseval(m, n, Field::Real, 9000 + idx as u64).unwrap();
        let (t_star, value) = optimal_weights(&f).unwrap();
        // Consistency: the reported value is the objective at the
        // reported weights.
        let direct = objective(&t_star, &f).unwrap();
        assert!(
            (direct - value).abs() <= 1e-10,
            "(m={m}, N={n}): objective {direct} vs Perron value {value}"
        );

        let b = gram_abs(&f);
        let mut rng = seeded(31337 + idx as u64);
        let mut best = 0.0f64;
        let mut best_t = vec![0.0f64; n];
        let mut t = vec![0.0f64; n];
        // 1e6 samples total: a pure random phase, then perturbation
        // phases of shrinking width around the incumbent. Every sample
        // is a nonnegative unit vector, so the dominance assertion
        // below covers all of them.
        let phases: [(usize, f64); 9] = [
            (samples / 5, f64::INFINITY),
            (samples / 10, 0.3),
            (samples / 10, 0.1),
            (samples / 10, 0.03),
            (samples / 10, 0.01),
            (samples / 10, 3e-3),
            (samples / 10, 1e-3),
            (samples / 10, 3e-4),
            (samples / 10, 1e-4),
        ];
        assert_eq!(phases.iter().map(|p| p.0).sum::<usize>(), samples);
        for &(count, sigma) in &phases {
            for _ in 0..count {
                let mut norm_sq = 0.0;
                for (k, ti) in t.iter_mut().enumerate() {
                    let g = gaussian(&mut rng);
                    *ti = if sigma.is_finite() { (best_t[k] + sigma * g).abs() } else { g.abs() };
                    norm_sq += *ti * *ti;
                }
                let norm = norm_sq.sqrt();
                let mut acc = 0.0;
                for i in 0..n {
                    let mut row = 0.0;
                    for j in 0..n {
                        row += b.get(i, j).re * t[j];
                    }
                    acc += t[i] * row;
                }
                let v = acc / (norm * norm);
                if v > best {
                    best = v;
                    for (dst, src) in best_t.iter_mut().zip(&t) {
                        *dst = *src / norm;
                    }
                }
            }
        }
        assert!(
            best <= value + 1e-9,
            "(m={m}, N={n}): sampling beat the Perron value: {best} > {value}"
        );
        let gap = value - best;
        assert!(
            gap <= 1e-3,
            "(m={m}, N={n}): sampling only reached {best}, Perron value {value}"
        );
        worst_gap = worst_gap.max(gap);
    }
    println!(
        "[PASS] criterion 7: Perron weights match 1e6-sample search within 1e-3 on 20 frames \
         (worst gap {worst_gap:.2e}) and objective(t*, U) = Perron value to 1e-10"
    );
}

#[test]
fn criterion_8_trivial_scales_return_one() {
    let cfg = OptConfig { starts: 8, ..OptConfig::default() };
    let mut check = |m: usize, n: usize| {
        let l = lambda_search(m, n, Field::Real, &cfg).unwrap();
        assert!((l.best_value - 1.0).abs() <= 1e-9, "lambda({m},{n}) = {}", l.best_value);
        let u = mu_search(m, n, Field::Real, &cfg).unwrap();
        assert!((u.best_value - 1.0).abs() <= 1e-9, "mu({m},{n}) = {}", u.best_value);
    };
    for m in 1..=6usize {
        check(m, m);
    }
    for n in 1..=10usize {
        check(1, n);
    }
    println!(
        "[PASS] criterion 8: lambda and mu return 1.0 +- 1e-9 at (m,m) for m <= 6 \
         and at (1,N) for N <= 10"
    );
}

#[test]
fn criterion_9_non_verifiable_suprema_are_documented_not_asserted() {
    // The suprema over all N and the global optimality of nonconvex
    // searches admit no finite certificate. This suite covers them
    // indirectly: criterion 4 (bound dominance on random frames),
    // criterion 2/3 (equality cases meeting the bounds), and the
    // frozen-seed searches of criteria 1 and 8. Nothing here claims
    // exhaustiveness; see the README section on scope.
    println!(
        "[NOTE] criterion 9: suprema over all N and global search optimality are covered \
         by bound-dominance, equality-case, and frozen-seed suites, not exhaustive search"
    );
}
