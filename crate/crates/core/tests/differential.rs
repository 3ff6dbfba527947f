//! Randomized lockstep comparisons against the brute-force reference.

use proptest::prelude::*;
use qrmq_core::check::{run_differential, DiffOptions};
use qrmq_core::{
    gen_array, gen_ops, BruteRef, ClassicalSegTree, FindminConfig, ModFn, Op, OracleArray, QDynamicRMQ, Value,
    ValueIndexPair, WorkloadSpec,
};

/// Independent definition of the range minimum: a fold of `pair_min` written
/// without the scan in `BruteRef`.
fn fold_rmq(values: &[Value], l: usize, r: usize) -> ValueIndexPair {
    (l..=r)
        .map(|i| ValueIndexPair::new(values[i - 1], i))
        .reduce(qrmq_core::pair_min)
        .unwrap()
}

fn arb_array() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0u64..8, 1..40)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn brute_rmq_is_the_pair_min_fold(xs in arb_array(), a in 0usize..40, b in 0usize..40) {
        let n = xs.len();
        let (l, r) = (a % n + 1, b % n + 1);
        let (l, r) = (l.min(r), l.max(r));
        let arr = OracleArray::from_u64s(&xs).unwrap();
        prop_assert_eq!(BruteRef::new(&arr).rmq(l, r)?, fold_rmq(arr.values(), l, r));
    }

    #[test]
    fn brute_kmin_prefixes(xs in arb_array()) {
        let b = BruteRef::new(&OracleArray::from_u64s(&xs).unwrap());
        for k in 1..xs.len() {
            let short = b.kmin(k)?;
            let long = b.kmin(k + 1)?;
            prop_assert_eq!(&long[..k], &short[..]);
        }
    }

    #[test]
    fn both_trees_track_the_reference(seed in any::<u64>(), n in 1usize..300) {
        let arr = gen_array(n, 20, seed).unwrap();
        let ops = gen_ops(&WorkloadSpec::new(n, n, seed)).unwrap();
        let report = run_differential(&arr, &ops, &DiffOptions::default())?;
        prop_assert!(report.passed(), "{:?}", report.findings.first());
    }
}

#[test]
fn classical_exact_match_over_many_operations() {
    // >= 1e5 sampled operations across seeds.
    let mut ops_seen = 0;
    let mut seed = 0u64;
    while ops_seen < 100_000 {
        let n = 1 + (seed as usize * 7919) % 2048;
        let arr = gen_array(n, (seed % 4) * 50, seed).unwrap();
        let ops = gen_ops(&WorkloadSpec::new(n, n, seed)).unwrap();
        let mut tree = ClassicalSegTree::new(&arr);
        let mut brute = BruteRef::new(&arr);
        let bound = 4 * u64::from(tree.geometry().height()) + 2;
        for op in &ops {
            let before = tree.node_visits();
            match *op {
                Op::Query { l, r } => assert_eq!(tree.query(l, r).unwrap(), brute.rmq(l, r).unwrap()),
                Op::Modify { l, r, f } => {
                    tree.modify(l, r, f).unwrap();
                    brute.modify(l, r, f).unwrap();
                }
            }
            assert!(tree.node_visits() - before <= bound);
        }
        let root = tree.node(1).unwrap().v;
        let global = brute.rmq_padded(1, tree.geometry().n_padded());
        assert_eq!(root, global, "seed {seed}");
        ops_seen += ops.len();
        seed += 1;
    }
}

#[test]
fn quantum_matches_on_duplicate_heavy_arrays() {
    for seed in 0..200 {
        let n = 1 + seed as usize % 97;
        let arr = gen_array(n, seed % 3, seed).unwrap();
        let mut spec = WorkloadSpec::new(n, n, seed);
        spec.value_range = 2;
        spec.add_max = 1;
        let ops = gen_ops(&spec).unwrap();
        let report = run_differential(&arr, &ops, &DiffOptions::default()).unwrap();
        assert!(report.passed(), "seed {seed}: {:?}", report.findings.first());
    }
}

#[test]
fn runs_are_deterministic() {
    for injection in [false, true] {
        let arr = gen_array(500, 1_000, 42).unwrap();
        let ops = gen_ops(&WorkloadSpec::new(500, 400, 42)).unwrap();
        let cfg = FindminConfig {
            failure_injection: injection,
            rng_seed: 7,
            ..FindminConfig::default()
        };
        let run = || {
            let mut t = QDynamicRMQ::new(arr.clone(), 400, 0.3, cfg).unwrap();
            let mut answers = Vec::new();
            for op in &ops {
                match *op {
                    Op::Query { l, r } => answers.push(t.query(l, r).unwrap()),
                    Op::Modify { l, r, f } => t.modify(l, r, f).unwrap(),
                }
            }
            (answers, t.ledger(), t.traces().to_vec())
        };
        assert_eq!(run(), run());
    }
}

#[test]
fn quantum_point_assign_reveals_second_smallest() {
    let arr = gen_array(1000, u64::MAX / 2, 3).unwrap();
    let order = BruteRef::new(&arr).kmin(2).unwrap();
    let mut t = QDynamicRMQ::new(arr.clone(), 1000, 0.1, FindminConfig::default()).unwrap();
    t.modify(order[0], order[0], ModFn::Assign(Value::PlusInfinity)).unwrap();
    assert_eq!(t.query(1, 1000).unwrap().index, order[1]);
}

#[test]
fn budget_equals_sum_of_creation_charges() {
    let arr = gen_array(4096, 1 << 20, 1).unwrap();
    let ops = gen_ops(&WorkloadSpec::new(4096, 512, 1)).unwrap();
    let mut t = QDynamicRMQ::new(arr, 512, 0.05, FindminConfig::default()).unwrap();
    assert_eq!(t.ledger().quantum_queries, 0);
    t.record_creations(true);
    let mut expected = 0;
    for op in &ops {
        match *op {
            Op::Query { l, r } => drop(t.query(l, r).unwrap()),
            Op::Modify { l, r, f } => t.modify(l, r, f).unwrap(),
        }
        for ev in t.take_creation_events() {
            let (lo, hi) = t.geometry().range(ev.node);
            expected += qrmq_core::charge_formula(hi - lo + 1, t.eps_per_call(), 1.0).unwrap();
        }
    }
    assert_eq!(t.ledger().quantum_queries, expected);
    assert_eq!(t.ledger().findmin_calls as usize, t.created_count());
    assert_eq!(t.ledger().classical_reads, 0);
}
