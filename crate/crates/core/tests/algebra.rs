use proptest::prelude::*;
use qrmq_core::{mod_apply, mod_compose, pair_min, value_min, Error, ModFn, Value, ValueIndexPair};

// Magnitudes are kept small enough that no composition of three maps can
// overflow, so every law is checked on `Ok` values.
fn value() -> impl Strategy<Value = Value> {
    prop_oneof![
        4 => (0u64..1 << 40).prop_map(Value::Finite),
        1 => Just(Value::PlusInfinity),
    ]
}

fn modfn() -> impl Strategy<Value = ModFn> {
    prop_oneof![
        Just(ModFn::Identity),
        (0u64..1 << 40).prop_map(ModFn::Add),
        value().prop_map(ModFn::Assign),
    ]
}

fn pair() -> impl Strategy<Value = ValueIndexPair> {
    (prop_oneof![(0u64..4).prop_map(Value::Finite), Just(Value::PlusInfinity)], 1usize..6)
        .prop_map(|(v, i)| ValueIndexPair::new(v, i))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn compose_is_associative(f in modfn(), g in modfn(), h in modfn()) {
        let left = mod_compose(f, mod_compose(g, h)?)?;
        let right = mod_compose(mod_compose(f, g)?, h)?;
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identity_is_two_sided_unit(f in modfn()) {
        prop_assert_eq!(mod_compose(ModFn::Identity, f)?, f);
        prop_assert_eq!(mod_compose(f, ModFn::Identity)?, f);
    }

    #[test]
    fn maps_distribute_over_min(f in modfn(), x in value(), y in value()) {
        let lhs = mod_apply(f, value_min(x, y))?;
        let rhs = value_min(mod_apply(f, x)?, mod_apply(f, y)?);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn compose_agrees_with_sequential_apply(f in modfn(), g in modfn(), x in value()) {
        prop_assert_eq!(mod_apply(mod_compose(f, g)?, x)?, mod_apply(f, mod_apply(g, x)?)?);
    }

    #[test]
    fn pair_min_is_a_semilattice(p in pair(), q in pair(), r in pair()) {
        prop_assert_eq!(pair_min(p, pair_min(q, r)), pair_min(pair_min(p, q), r));
        prop_assert_eq!(pair_min(p, q), pair_min(q, p));
        prop_assert_eq!(pair_min(p, p), p);
    }

    #[test]
    fn text_tokens_round_trip(f in modfn(), x in value()) {
        prop_assert_eq!(f.to_string().parse::<ModFn>()?, f);
        prop_assert_eq!(x.to_string().parse::<Value>()?, x);
    }
}

#[test]
fn overflow_propagates_through_composition() {
    let big = ModFn::Add(u64::MAX - 1);
    assert_eq!(mod_compose(big, ModFn::Add(2)), Err(Error::Overflow));
    assert_eq!(mod_compose(big, ModFn::Assign(Value::PlusInfinity)), Ok(ModFn::Assign(Value::PlusInfinity)));
}
