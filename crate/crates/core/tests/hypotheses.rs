use digraph_vdb::{check_hypothesis, minimal_n, PhiSpec, Side, Theorem, TheoremCase};

const T1I: TheoremCase = TheoremCase::new(Theorem::One, Side::Lower);
const T1II: TheoremCase = TheoremCase::new(Theorem::One, Side::Upper);
const T2I: TheoremCase = TheoremCase::new(Theorem::Two, Side::Lower);
const T2II: TheoremCase = TheoremCase::new(Theorem::Two, Side::Upper);
const T3II: TheoremCase = TheoremCase::new(Theorem::Three, Side::Upper);

#[test]
fn upper_bound_hypotheses_hold_on_a_long_range() {
    for spec in [
        PhiSpec::geometric_arithmetic(),
        PhiSpec::atom_bond_connectivity(),
    ] {
        for n in 3..=100 {
            assert!(check_hypothesis(T2II, n, &spec).holds, "{spec} n={n}");
        }
    }
    for spec in [
        PhiSpec::harmonic(),
        PhiSpec::randic(),
        PhiSpec::general_sum_connectivity(-1.0),
    ] {
        for n in 3..=100 {
            let r = check_hypothesis(T3II, n, &spec);
            assert_eq!(r.diagonal_ok, Some(true), "{spec} n={n}");
            assert!(r.holds, "{spec} n={n}: {:?}", r.violations.first());
        }
    }
    for n in 3..=60 {
        assert!(check_hypothesis(T2I, n, &PhiSpec::modified_second_zagreb()).holds);
    }
}

#[test]
fn reference_minimal_orders() {
    let cases = [
        (PhiSpec::harmonic(), Some(3)),
        (PhiSpec::sum_connectivity(), Some(6)),
        (PhiSpec::general_sum_connectivity(-1.0), Some(3)),
        (PhiSpec::general_sum_connectivity(-0.75), Some(3)),
        (PhiSpec::general_sum_connectivity(-0.25), Some(28)),
        (PhiSpec::randic(), Some(3)),
        (PhiSpec::general_randic(-0.25), Some(13)),
        (PhiSpec::geometric_arithmetic(), Some(13)),
    ];
    for (spec, expected) in cases {
        assert_eq!(minimal_n(T1I, &spec, 100), expected, "{spec}");
    }
    assert_eq!(minimal_n(T1II, &PhiSpec::harmonic(), 100), None);
}

/// Once a lower-bound hypothesis starts to hold it keeps holding.
#[test]
fn minimal_order_is_a_threshold() {
    for spec in [
        PhiSpec::harmonic(),
        PhiSpec::sum_connectivity(),
        PhiSpec::general_sum_connectivity(-0.25),
        PhiSpec::general_randic(-0.25),
        PhiSpec::geometric_arithmetic(),
    ] {
        let m = minimal_n(T1I, &spec, 100).unwrap();
        for n in 3..m {
            assert!(!check_hypothesis(T1I, n, &spec).holds, "{spec} n={n}");
        }
        for n in m..=100 {
            assert!(check_hypothesis(T1I, n, &spec).holds, "{spec} n={n}");
        }
        assert_eq!(minimal_n(T1I, &spec, m), Some(m));
        assert_eq!(minimal_n(T1I, &spec, m - 1), None);
    }
}
