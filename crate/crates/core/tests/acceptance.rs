//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use digraph_vdb::oracle::{class_members, closed_form_count};
use digraph_vdb::sample::corpus;
use digraph_vdb::theorems::{decomposition_complete, decomposition_unit_hub};
use digraph_vdb::{
    bound_value, doubled_integer_index, extremal_search, index_arc_sum, index_spectrum_sum,
    minimal_n, DegreeSpectrum, Digraph, EqualityClass, Extremum, FamilyId, FamilyKind, PhiSpec,
    SearchOptions, Side, Theorem, TheoremCase,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

const TOL: f64 = 1e-9;

fn fixed_corpus() -> Vec<Digraph> {
    corpus(&mut ChaCha8Rng::seed_from_u64(20_240_917), 1000, 2..=8)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || {
        format!("took {elapsed:?}, limit {limit:?}")
    })
}

/// Extremum at `n` must equal `bound` and be attained exactly by `class`.
fn extremum_with_class(
    n: usize,
    spec: &PhiSpec,
    dir: Extremum,
    bound: f64,
    class: EqualityClass,
    opts: &SearchOptions,
) -> Result<String, String> {
    let r = extremal_search(n, spec, dir, opts).map_err(|e| e.to_string())?;
    ensure(r.enumerated_count == closed_form_count(n), || {
        format!("n={n}: enumerated {} digraphs", r.enumerated_count)
    })?;
    ensure((r.extremal_value - bound).abs() < TOL, || {
        format!(
            "{spec} n={n} {dir:?}: observed {} but bound is {bound}",
            r.extremal_value
        )
    })?;
    let members = class_members(n, class, opts.workers).map_err(|e| e.to_string())?;
    ensure(r.attaining == members, || {
        format!(
            "{spec} n={n} {dir:?}: {} attainers, {} {} digraphs",
            r.attaining.len(),
            members.len(),
            class.label()
        )
    })?;
    Ok(format!(
        "{spec} n={n} {dir:?}={:.6} x{}",
        r.extremal_value,
        members.len()
    ))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let digraphs = fixed_corpus();
    for (k, d) in digraphs.iter().enumerate() {
        let s = DegreeSpectrum::of(d).map_err(|e| e.to_string())?;
        for i in 1..d.order() {
            let (lhs, rhs) = s.degree_sum_sides(i);
            ensure(lhs == rhs, || {
                format!("digraph {k}, class {i}: {lhs} != {rhs}")
            })?;
        }
        let (lhs, rhs) = s.role_total_sides();
        ensure(lhs == rhs, || {
            format!("digraph {k}: role total {lhs} != {rhs}")
        })?;
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!(
        "spectrum identities exact on {} digraphs",
        digraphs.len()
    ))
}

fn nine_indices() -> Vec<PhiSpec> {
    let mut specs = PhiSpec::shipped();
    specs.push(PhiSpec::general_sum_connectivity(-1.0));
    specs
}

fn criterion_2() -> Outcome {
    let digraphs = fixed_corpus();
    let start = Instant::now();
    let specs = nine_indices();
    let mut worst = 0f64;
    for d in &digraphs {
        let s = DegreeSpectrum::of(d).map_err(|e| e.to_string())?;
        for spec in &specs {
            let gap = (index_arc_sum(d, spec).map_err(|e| e.to_string())?
                - index_spectrum_sum(&s, spec))
            .abs();
            ensure(gap < 1e-12, || {
                format!("{spec}: dual paths differ by {gap:e}")
            })?;
            worst = worst.max(gap);
        }
    }
    within(start.elapsed(), Duration::from_secs(2))?;
    Ok(format!("{} indices, worst gap {worst:e}", specs.len()))
}

fn criterion_3() -> Outcome {
    let digraphs = fixed_corpus();
    let start = Instant::now();
    let specs = [
        PhiSpec::harmonic(),
        PhiSpec::geometric_arithmetic(),
        PhiSpec::atom_bond_connectivity(),
        PhiSpec::randic(),
        PhiSpec::general_sum_connectivity(-1.0),
    ];
    let mut worst = 0f64;
    for d in &digraphs {
        let s = DegreeSpectrum::of(d).map_err(|e| e.to_string())?;
        for spec in &specs {
            let twice = 2.0 * index_arc_sum(d, spec).map_err(|e| e.to_string())?;
            for (name, value) in [
                ("unit-hub", decomposition_unit_hub(&s, spec)),
                ("complete", decomposition_complete(&s, spec)),
            ] {
                let gap = (value - twice).abs();
                ensure(gap < TOL, || format!("{spec} {name}: off by {gap:e}"))?;
                worst = worst.max(gap);
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(2))?;
    Ok(format!("both decompositions, worst gap {worst:e}"))
}

fn criterion_4() -> Outcome {
    let spec = PhiSpec::harmonic();
    let single = SearchOptions::with_workers(1);
    let mut parts = Vec::new();
    let mut t5 = Duration::ZERO;
    for n in 3..=5 {
        let nf = n as f64;
        let start = Instant::now();
        parts.push(extremum_with_class(
            n,
            &spec,
            Extremum::Min,
            (nf - 1.0) / nf,
            EqualityClass::StarOrientations,
            &single,
        )?);
        let min_time = start.elapsed();
        parts.push(extremum_with_class(
            n,
            &spec,
            Extremum::Max,
            nf / 2.0,
            EqualityClass::DiagonalNoZero,
            &single,
        )?);
        if n == 5 {
            t5 = min_time;
        }
    }
    within(t5, Duration::from_secs(60))?;
    Ok(format!(
        "{}; single-threaded n=5 minimum scan {t5:?}",
        parts.join(", ")
    ))
}

fn criterion_5() -> Outcome {
    let spec = PhiSpec::randic();
    let opts = SearchOptions::default();
    let mut parts = Vec::new();
    for n in 3..=5 {
        let nf = n as f64;
        parts.push(extremum_with_class(
            n,
            &spec,
            Extremum::Min,
            0.5 * (nf - 1.0).sqrt(),
            EqualityClass::StarOrientations,
            &opts,
        )?);
        parts.push(extremum_with_class(
            n,
            &spec,
            Extremum::Max,
            nf / 2.0,
            EqualityClass::DiagonalNoZero,
            &opts,
        )?);
    }
    Ok(parts.join(", "))
}

fn criterion_6() -> Outcome {
    let spec = PhiSpec::geometric_arithmetic();
    let opts = SearchOptions::default();
    let mut parts = Vec::new();
    let mut failures = Vec::new();
    for n in 4..=5 {
        let nf = n as f64;
        parts.push(extremum_with_class(
            n,
            &spec,
            Extremum::Max,
            nf * (nf - 1.0) / 2.0,
            EqualityClass::SymComplete,
            &opts,
        )?);
        match extremum_with_class(
            n,
            &spec,
            Extremum::Min,
            (nf - 1.0).powf(1.5) / nf,
            EqualityClass::StarOrientations,
            &opts,
        ) {
            Ok(p) => parts.push(p),
            Err(e) => failures.push(e),
        }
    }
    if failures.is_empty() {
        Ok(parts.join(", "))
    } else {
        let t1 = TheoremCase::new(Theorem::One, Side::Lower);
        Err(format!(
            "{}; lower-bound hypothesis for ga first holds at n={:?}",
            failures.join("; "),
            minimal_n(t1, &spec, 100)
        ))
    }
}

fn criterion_7() -> Outcome {
    let spec = PhiSpec::atom_bond_connectivity();
    let opts = SearchOptions::default();
    let mut parts = Vec::new();
    for n in 4..=5 {
        let nf = n as f64;
        parts.push(extremum_with_class(
            n,
            &spec,
            Extremum::Max,
            0.5 * nf * (2.0 * nf - 4.0).sqrt(),
            EqualityClass::SymComplete,
            &opts,
        )?);
    }
    Ok(parts.join(", "))
}

fn criterion_8() -> Outcome {
    let spec = PhiSpec::general_sum_connectivity(-1.0);
    let opts = SearchOptions::default();
    let t1 = TheoremCase::new(Theorem::One, Side::Lower);
    let mut parts = Vec::new();
    for n in 4..=5 {
        let nf = n as f64;
        ensure(digraph_vdb::check_hypothesis(t1, n, &spec).holds, || {
            format!("lower-bound hypothesis fails at n={n}")
        })?;
        parts.push(extremum_with_class(
            n,
            &spec,
            Extremum::Max,
            nf / 4.0,
            EqualityClass::DiagonalNoZero,
            &opts,
        )?);
        parts.push(extremum_with_class(
            n,
            &spec,
            Extremum::Min,
            0.5 * (nf - 1.0) / nf,
            EqualityClass::StarOrientations,
            &opts,
        )?);
    }
    Ok(parts.join(", "))
}

fn criterion_9() -> Outcome {
    let spec = PhiSpec::second_zagreb();
    let r = extremal_search(4, &spec, Extremum::Max, &SearchOptions::default())
        .map_err(|e| e.to_string())?;
    let complete = FamilyId::new(FamilyKind::SymComplete, 4)
        .map_err(|e| e.to_string())?
        .construct();
    // n (n-1)^3 / 2 at n = 4
    let formula: u128 = 4 * 3u128.pow(3) / 2;
    let doubled = doubled_integer_index(&complete, &spec).ok_or("no exact value")?;
    ensure(doubled == 2 * formula, || {
        format!("exact 2I of K4 is {doubled}")
    })?;
    let theorem = bound_value(Theorem::Two, Side::Upper, 4, &spec);
    ensure(
        r.extremal_value == formula as f64 && theorem == formula as f64,
        || format!("maximum {}, theorem bound {theorem}", r.extremal_value),
    )?;
    ensure(r.attaining == vec![complete.mask().unwrap()], || {
        format!("{} attainers", r.attaining.len())
    })?;
    Ok("maximum 54 attained only by the symmetric complete digraph".into())
}

fn criterion_10() -> Outcome {
    let spec = PhiSpec::modified_second_zagreb();
    let opts = SearchOptions::default();
    let two = extremum_with_class(
        2,
        &spec,
        Extremum::Min,
        0.5,
        EqualityClass::SingleArc,
        &opts,
    )?;
    ensure(
        (bound_value(Theorem::Two, Side::Lower, 2, &spec) - 0.5).abs() < TOL,
        || "bound at n=2 is not 1/2".into(),
    )?;
    let mut gaps = Vec::new();
    for n in 3..=4 {
        let nf = n as f64;
        let formula = 0.25 * nf * (nf - 1.0).powi(-1);
        let r = extremal_search(n, &spec, Extremum::Min, &opts).map_err(|e| e.to_string())?;
        let gap = r.extremal_value - formula;
        ensure(gap > TOL, || format!("n={n}: gap {gap}"))?;
        gaps.push(format!("n={n} gap {gap:.4}"));
    }
    Ok(format!("{two}; {}", gaps.join(", ")))
}

fn criterion_11() -> Outcome {
    let start = Instant::now();
    let t1 = TheoremCase::new(Theorem::One, Side::Lower);
    let sc = minimal_n(t1, &PhiSpec::sum_connectivity(), 100);
    let h = minimal_n(t1, &PhiSpec::harmonic(), 100);
    ensure(sc == Some(6), || format!("sumconn: {sc:?}"))?;
    ensure(h == Some(3), || format!("harmonic: {h:?}"))?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok("sumconn 6, harmonic 3".into())
}

fn criterion_12() -> Outcome {
    let mut checked = 0;
    for spec in nine_indices() {
        for dir in [Extremum::Min, Extremum::Max] {
            let base = extremal_search(4, &spec, dir, &SearchOptions::with_workers(1))
                .map_err(|e| e.to_string())?;
            let base_json = serde_json::to_string(&base).map_err(|e| e.to_string())?;
            for w in [2, 4, 8] {
                let r = extremal_search(4, &spec, dir, &SearchOptions::with_workers(w))
                    .map_err(|e| e.to_string())?;
                let json = serde_json::to_string(&r).map_err(|e| e.to_string())?;
                ensure(
                    r.extremal_value.to_bits() == base.extremal_value.to_bits()
                        && r == base
                        && json == base_json,
                    || format!("{spec} {dir:?}: workers={w} differs"),
                )?;
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} reports identical to the single-worker run"
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("spectrum identities", criterion_1),
        ("dual-path equality", criterion_2),
        ("decomposition identities", criterion_3),
        ("harmonic extremes", criterion_4),
        ("randic extremes", criterion_5),
        ("geometric-arithmetic extremes", criterion_6),
        ("atom-bond connectivity maximum", criterion_7),
        ("sum-connectivity extremes", criterion_8),
        ("second zagreb maximum", criterion_9),
        ("single-arc strictness", criterion_10),
        ("hypothesis thresholds", criterion_11),
        ("worker-count determinism", criterion_12),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS criterion {} {name} [{elapsed:.2?}]: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {} {name} [{elapsed:.2?}]: {detail}", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
