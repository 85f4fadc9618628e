use std::collections::BTreeMap;

use proptest::prelude::*;

use dsbelief::io::{mass_from_json_str, mass_to_json_string};
use dsbelief::population::measurement_table;
use dsbelief::{
    apply_labeling, check_measurement_axioms, combine_dempster, freq_bel, freq_mass, freq_pl,
    mass_from_bel, relabel_iterate, AtomSet, Frame, LabelDistribution, LabelingSpec,
    MassFunction, Population, Scalar,
};

fn frame(n: usize) -> Frame {
    let names: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
    Frame::new(&names).unwrap()
}

/// `(frame size, [(subset bits, weight)])` with nonempty subsets.
fn weighted_sets(max_atoms: usize) -> impl Strategy<Value = (usize, Vec<(u64, u64)>)> {
    (1..=max_atoms).prop_flat_map(|n| {
        let sets = prop::collection::vec((1..(1u64 << n), 1..20u64), 1..6);
        (Just(n), sets)
    })
}

fn mass_of(n: usize, entries: &[(u64, u64)]) -> MassFunction {
    let total: u64 = entries.iter().map(|(_, w)| w).sum();
    MassFunction::new(
        &frame(n),
        entries
            .iter()
            .map(|(s, w)| (AtomSet::from_bits(*s), Scalar::count_ratio(*w, total))),
    )
    .unwrap()
}

fn population(n: usize, entries: &[(u64, u64)]) -> Population {
    Population::new(
        &frame(n),
        entries.iter().map(|(s, w)| (AtomSet::from_bits(*s), *w)),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bel_below_pl_and_monotone((n, entries) in weighted_sets(5)) {
        let m = mass_of(n, &entries);
        let zero = Scalar::ratio(0, 1);
        let one = Scalar::ratio(1, 1);
        prop_assert_eq!(m.bel_set(AtomSet::EMPTY), zero.clone());
        prop_assert_eq!(m.bel_set(AtomSet::full(n)), one.clone());
        for a in AtomSet::powerset(n) {
            let bel = m.bel_set(a);
            let pl = m.pl_set(a);
            prop_assert!(bel <= pl);
            prop_assert!(bel >= zero && pl <= one);
            let comp = AtomSet::full(n).difference(a);
            prop_assert_eq!(&pl, &(&one - &m.bel_set(comp)));
            for b in a.subsets() {
                prop_assert!(m.bel_set(b) <= bel);
            }
        }
    }

    #[test]
    fn frequency_operators_match_mass((n, entries) in weighted_sets(5)) {
        let p = population(n, &entries);
        let m = freq_mass(&p);
        let f = p.frame();
        for a in AtomSet::powerset(n) {
            let sub = f.subset(a).unwrap();
            prop_assert_eq!(freq_bel(&p, &sub).unwrap(), m.bel_set(a));
            prop_assert_eq!(freq_pl(&p, &sub).unwrap(), m.pl_set(a));
        }
    }

    #[test]
    fn canonical_measurement_satisfies_axioms((n, entries) in weighted_sets(5)) {
        let p = population(n, &entries);
        for r in p.records() {
            let table = measurement_table(r).unwrap();
            prop_assert!(check_measurement_axioms(p.frame(), &table).unwrap().is_empty());
        }
    }

    #[test]
    fn axioms_accept_exactly_canonical_tables(n in 1usize..5, bits in any::<u16>()) {
        let f = frame(n);
        let table: BTreeMap<AtomSet, bool> = AtomSet::powerset(n)
            .map(|a| (a, bits & (1 << a.bits()) != 0))
            .collect();
        let value = AtomSet::from_indices((0..n).filter(|&i| table[&AtomSet::singleton(i)]));
        let canonical = !value.is_empty()
            && table.iter().all(|(a, t)| *t == a.intersects(value));
        let violations = check_measurement_axioms(&f, &table).unwrap();
        prop_assert_eq!(violations.is_empty(), canonical, "{:?}", violations);
    }

    #[test]
    fn mobius_round_trip((n, entries) in weighted_sets(6)) {
        let m = mass_of(n, &entries);
        let table: BTreeMap<AtomSet, Scalar> =
            AtomSet::powerset(n).zip(m.bel_table().unwrap()).collect();
        prop_assert_eq!(mass_from_bel(m.frame(), &table).unwrap(), m);
    }

    #[test]
    fn json_round_trip((n, entries) in weighted_sets(6), float in any::<bool>()) {
        let mut m = mass_of(n, &entries);
        if float {
            m = m.to_mode(dsbelief::Arithmetic::Float);
        }
        let back = mass_from_json_str(&mass_to_json_string(&m), 24).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn relabeling_order_does_not_matter(
        (n, pop) in weighted_sets(4),
        l1 in prop::collection::vec((1u64..16, 1..20u64), 1..4),
        l2 in prop::collection::vec((1u64..16, 1..20u64), 1..4),
    ) {
        let clip = |v: &Vec<(u64, u64)>| -> Vec<(u64, u64)> {
            v.iter()
                .map(|(s, w)| (s & ((1 << n) - 1), *w))
                .filter(|(s, _)| *s != 0)
                .collect()
        };
        let (l1, l2) = (clip(&l1), clip(&l2));
        prop_assume!(!l1.is_empty() && !l2.is_empty());
        let m = mass_of(n, &pop);
        let a = LabelDistribution::new(mass_of(n, &l1));
        let b = LabelDistribution::new(mass_of(n, &l2));
        let ab = relabel_iterate(&m, &[a.clone(), b.clone()]);
        let ba = relabel_iterate(&m, &[b, a]);
        match (ab, ba) {
            (Ok(x), Ok(y)) => prop_assert_eq!(x, y),
            (Err(_), Err(_)) => {}
            (x, y) => prop_assert!(false, "one order failed: {:?} {:?}", x, y),
        }
    }

    #[test]
    fn identity_labeling_keeps_population((n, entries) in weighted_sets(5)) {
        let p = population(n, &entries);
        let same = apply_labeling(&p, &LabelingSpec::identity(p.frame())).unwrap();
        prop_assert_eq!(freq_mass(&same), freq_mass(&p));
    }

    #[test]
    fn combination_is_commutative((n, e1) in weighted_sets(5), e2 in prop::collection::vec((1u64..32, 1..20u64), 1..5)) {
        let e2: Vec<(u64, u64)> = e2
            .into_iter()
            .map(|(s, w)| (s & ((1 << n) - 1), w))
            .filter(|(s, _)| *s != 0)
            .collect();
        prop_assume!(!e2.is_empty());
        let (a, b) = (mass_of(n, &e1), mass_of(n, &e2));
        match (combine_dempster(&a, &b), combine_dempster(&b, &a)) {
            (Ok(x), Ok(y)) => prop_assert_eq!(x, y),
            (Err(x), Err(y)) => prop_assert_eq!(x, y),
            (x, y) => prop_assert!(false, "{:?} {:?}", x, y),
        }
    }

    #[test]
    fn scalar_text_round_trip(p in -1000i64..1000, q in 1i64..1000) {
        let v = Scalar::ratio(p, q);
        let back: Scalar = v.to_string().parse().unwrap();
        prop_assert_eq!(back, v);
    }
}

#[test]
fn quality_marginal_relabeled_to_high_or_medium() {
    let f = Frame::new(&["H", "M", "S", "D"]).unwrap();
    let set = |names: &[&str]| f.encode_set(names).unwrap();
    let p = Population::new(
        &f,
        [
            (set(&["H"]), 190),
            (set(&["M"]), 290),
            (set(&["S"]), 70),
            (set(&["D"]), 14),
            (set(&["H", "S"]), 39),
            (set(&["M", "S"]), 75),
            (set(&["H", "D"]), 13),
            (set(&["M", "D"]), 32),
        ],
    )
    .unwrap();
    let labels = MassFunction::from_names(&f, &[(&["H", "M"][..], Scalar::ratio(1, 1))]).unwrap();
    let out = dsbelief::relabel_exact(&freq_mass(&p), &LabelDistribution::new(labels)).unwrap();
    assert_eq!(out.mass_of(set(&["H"])), Scalar::ratio(242, 639));
    assert_eq!(out.mass_of(set(&["M"])), Scalar::ratio(397, 639));
    assert_eq!(out.focal_count(), 2);
}

#[test]
fn rough_set_gap_is_usually_positive() {
    use dsbelief::casebook::rough_set::{rs_gap, RoughSetParams};
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
    let mut positive = 0;
    for _ in 0..100 {
        let mut draw = || Scalar::ratio(rng.gen_range(1..20), 20);
        let params = RoughSetParams::from_free(draw(), draw(), draw(), draw(), draw()).unwrap();
        if rs_gap(&params).unwrap() > 0.0 {
            positive += 1;
        }
    }
    assert!(positive >= 95, "{positive} of 100");
}
