use std::sync::OnceLock;

use perfcode::analysis::{record, Analysis, AnalysisRecord};
use perfcode::catalog::{build, build_with, default_catalogue, parse_spec, ActionSpec, Family, GroupSpec};
use perfcode::codes::{
    fast_path_odd, find_inverse_closed_transversal, is_perfect_code, is_perfect_code_criterion,
    is_perfect_code_sylow_reduction, verify_in_cayley, DeltaOptions,
};
use perfcode::lattice::{normalizer, SubgroupLattice};
use perfcode::{ElementId, GroupTable, Limits};
use proptest::prelude::*;

struct Sample {
    group: GroupTable,
    lattice: SubgroupLattice,
}

/// Catalogue groups up to order 64, with their lattices.
fn samples() -> &'static [Sample] {
    static CELL: OnceLock<Vec<Sample>> = OnceLock::new();
    CELL.get_or_init(|| {
        let limits = Limits::default();
        default_catalogue(64)
            .into_iter()
            .map(|spec| {
                let group = build_with(&spec, &limits).unwrap();
                let lattice = SubgroupLattice::compute(&group, &limits).unwrap();
                Sample { group, lattice }
            })
            .collect()
    })
}

fn family_spec() -> impl Strategy<Value = GroupSpec> {
    prop_oneof![
        (1u64..100).prop_map(|n| GroupSpec::family(Family::Cyclic, &[n])),
        (1u64..50).prop_map(|n| GroupSpec::family(Family::Dihedral, &[2 * n])),
        (3u32..7).prop_map(|k| GroupSpec::family(Family::Quaternion, &[1 << k])),
        (prop::sample::select(vec![2u64, 3, 5, 7]), 1u64..4)
            .prop_map(|(p, k)| GroupSpec::family(Family::ElementaryAbelian, &[p, k])),
        (1u64..8).prop_map(|n| GroupSpec::family(Family::Symmetric, &[n])),
        (prop::sample::select(vec![Family::Sl2, Family::Psl2, Family::Pgl2]), prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9]))
            .prop_map(|(f, q)| GroupSpec::family(f, &[q])),
        Just(GroupSpec::family(Family::BinaryOctahedral, &[])),
    ]
}

fn perm_spec() -> impl Strategy<Value = GroupSpec> {
    // Each cycle is (length, gap before the next cycle); points stay disjoint.
    prop::collection::vec(prop::collection::vec((2u32..4, 0u32..2), 0..3), 1..3).prop_map(|gens| {
        let gens = gens
            .into_iter()
            .map(|cycles| {
                let mut next = 1u32;
                cycles
                    .into_iter()
                    .map(|(len, gap)| {
                        let cycle: Vec<u32> = (next..next + len).collect();
                        next += len + gap;
                        cycle
                    })
                    .collect()
            })
            .collect();
        GroupSpec::Perm(gens)
    })
}

fn matrix_spec() -> impl Strategy<Value = GroupSpec> {
    (prop::sample::select(vec![3u32, 5, 7]), prop::collection::vec(prop::array::uniform4(-3i64..7), 1..3))
        .prop_map(|(q, gens)| GroupSpec::Matrix { q, gens })
}

fn any_spec() -> impl Strategy<Value = GroupSpec> {
    let leaf = prop_oneof![family_spec(), perm_spec(), matrix_spec()];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| GroupSpec::product(a, b)),
            (inner.clone(), inner.clone(), prop::collection::vec(-5i64..6, 1..3))
                .prop_map(|(a, b, e)| GroupSpec::semidirect(a, b, ActionSpec::Exponents(e))),
            (inner.clone(), inner.clone(), prop::collection::vec(prop::collection::vec(-2i64..3, 2), 1..3))
                .prop_map(|(a, b, m)| GroupSpec::semidirect(a, b, ActionSpec::Matrices(m))),
            (inner, 1usize..20, 0usize..3).prop_map(|(p, order, index)| GroupSpec::SubgroupOf {
                parent: Box::new(p),
                order,
                index,
            }),
        ]
    })
}

fn sample_and_subgroup() -> impl Strategy<Value = (usize, usize)> {
    (0..samples().len()).prop_flat_map(|i| (Just(i), 0..samples()[i].lattice.total_count()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn spec_display_round_trips(spec in any_spec()) {
        let text = spec.to_string();
        prop_assert_eq!(parse_spec(&text).unwrap(), spec);
    }

    #[test]
    fn routes_agree((i, j) in sample_and_subgroup()) {
        let s = &samples()[i];
        let h = &s.lattice.subgroups()[j];
        let criterion = is_perfect_code_criterion(&s.group, h);
        prop_assert_eq!(criterion, is_perfect_code_sylow_reduction(&s.group, h));
        let t = find_inverse_closed_transversal(&s.group, h, &Limits::default()).unwrap();
        prop_assert_eq!(criterion, t.is_some());
        if let Some(t) = t {
            prop_assert!(verify_in_cayley(&s.group, h, &t).unwrap());
        }
        if fast_path_odd(&s.group, h) == Some(true) {
            prop_assert!(criterion);
        }
    }

    #[test]
    fn code_status_is_conjugation_invariant((i, j) in sample_and_subgroup(), k in any::<prop::sample::Index>()) {
        let s = &samples()[i];
        let h = &s.lattice.subgroups()[j];
        let x = ElementId(k.index(s.group.order()) as u32);
        let c = h.conjugate(&s.group, x);
        prop_assert_eq!(is_perfect_code(&s.group, h), is_perfect_code(&s.group, &c));
        prop_assert_eq!(s.lattice.class_of(j), s.lattice.class_of(s.lattice.index_of(&c).unwrap()));
    }

    #[test]
    fn class_size_times_normalizer_is_order(i in 0..samples().len()) {
        let s = &samples()[i];
        let n = s.group.order();
        for c in s.lattice.classes() {
            let h = &s.lattice.subgroups()[c.representative];
            prop_assert_eq!(c.size() * c.normalizer_order, n);
            prop_assert_eq!(normalizer(&s.group, h).order(), c.normalizer_order);
        }
        let sizes = s.group.conjugacy_classes().sizes();
        prop_assert_eq!(sizes.iter().sum::<usize>(), n);
        prop_assert!(sizes.iter().all(|&k| n % k == 0));
    }

    #[test]
    fn tables_pass_audit(i in 0..samples().len(), seed in any::<u64>()) {
        prop_assert_eq!(samples()[i].group.audit(20, seed), Ok(()));
    }

    #[test]
    fn quotient_map_is_a_homomorphism(i in 0..samples().len(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let s = &samples()[i];
        let g = &s.group;
        let n = g.order();
        for k in s.lattice.normal_subgroups() {
            let q = g.quotient(k).unwrap();
            prop_assert_eq!(q.group.order() * k.order(), n);
            let (x, y) = (ElementId(a.index(n) as u32), ElementId(b.index(n) as u32));
            prop_assert_eq!(q.project(g.mul(x, y)), q.group.mul(q.project(x), q.project(y)));
        }
    }

    #[test]
    fn cyclic_semidirect_orders(
        (q, p) in prop::sample::select(vec![(3u64, 2u64), (5, 2), (5, 4), (7, 3), (7, 6), (11, 5), (13, 4), (13, 3)]),
        e in 1i64..13,
    ) {
        let text = format!("semidirect:cyclic:{q}:cyclic:{p}:exp={e}");
        // An action exists iff e is a unit of order dividing p.
        let valid = e % q as i64 != 0 && (0..p).fold(1i64, |acc, _| acc * e % q as i64) == 1;
        match build(&text) {
            Ok(g) => {
                prop_assert!(valid);
                prop_assert_eq!(g.order() as u64, p * q);
            }
            Err(_) => prop_assert!(!valid),
        }
    }
}

#[test]
fn records_round_trip_through_json() {
    for spec in ["alternating:4", "cyclic:8", "semidirect:cyclic:7:cyclic:3:exp=2", "product:quaternion:8*cyclic:3"] {
        let a = Analysis::new(build(spec).unwrap(), &Limits::default(), DeltaOptions::default()).unwrap();
        let r = record(&a, false);
        assert_eq!(r.delta_count, r.delta_classes.len());
        let back: AnalysisRecord = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
    }
}

#[test]
fn every_catalogue_check_passes() {
    let limits = Limits::default();
    for spec in default_catalogue(200) {
        let g = build_with(&spec, &limits).unwrap();
        let a = Analysis::new(g, &limits, DeltaOptions::default()).unwrap();
        for c in record(&a, false).checks {
            assert!(c.passed(), "{spec}: {} {:?} {}", c.check_name, c.witness, c.details);
        }
    }
}
