use std::sync::Arc;

use proptest::prelude::*;

use crorder::admissible::{q_beta, representatives};
use crorder::chains::{levi_chain, Order};
use crorder::enumerate::Enumeration;
use crorder::extension::{ActionConvention, Sl2Module};
use crorder::instance::{analyze_spec, ComponentSpec, InstanceSpec, RationalText, SigmaSpec};
use crorder::linalg::{format_rational, parse_rational, Rational};
use crorder::report::analyze_unchecked;
use crorder::{CartanType, CartanType::*, RootId, RootSystem};

const SMALL: [(CartanType, usize); 8] = [(A, 1), (A, 2), (A, 3), (B, 2), (B, 3), (C, 3), (D, 4), (G, 2)];

fn system() -> impl Strategy<Value = (CartanType, usize)> {
    prop::sample::select(SMALL.to_vec())
}

/// A system, a crossed mask and an involution index (both reduced modulo their range).
fn instance() -> impl Strategy<Value = ((CartanType, usize), u64, usize)> {
    (system(), any::<u64>(), any::<usize>())
}

fn enumeration(t: CartanType, r: usize) -> Enumeration {
    Enumeration::new(Arc::new(RootSystem::build(t, r).unwrap()), None)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn root_sums_are_symmetric_and_cancel((t, r) in system(), i in any::<usize>(), j in any::<usize>()) {
        let rs = RootSystem::build(t, r).unwrap();
        let (a, b) = (RootId::new(i % rs.len()), RootId::new(j % rs.len()));
        prop_assert_eq!(rs.sum(a, b), rs.sum(b, a));
        if let Some(c) = rs.sum(a, b) {
            prop_assert_eq!(rs.sum(c, rs.neg(b)), Some(a));
            prop_assert_eq!(rs.root(c).euclid.clone(), rs.root(a).euclid.add(&rs.root(b).euclid));
        }
        prop_assert_eq!(rs.neg(rs.neg(a)), a);
    }

    #[test]
    fn involutions_are_involutive_isometries((t, r) in system(), k in any::<usize>()) {
        let e = enumeration(t, r);
        let s = &e.involutions[k % e.involutions.len()];
        let rs = &e.rs;
        for a in rs.ids() {
            prop_assert_eq!(s.apply(s.apply(a)), a);
            prop_assert_eq!(rs.is_long(s.apply(a)), rs.is_long(a));
            for b in rs.ids() {
                prop_assert_eq!(rs.sum(a, b).map(|c| s.apply(c)), rs.sum(s.apply(a), s.apply(b)));
            }
        }
    }

    #[test]
    fn instance_invariants(((t, r), mask, k) in instance()) {
        let e = enumeration(t, r);
        let key = &e.keys[(mask as usize ^ k) % e.keys.len()];
        let p = e.instance(key);
        let report = analyze_unchecked(&p);
        let failed: Vec<&str> = report
            .failed_checks()
            .into_iter()
            .filter(|c| !matches!(*c, "fundamental_criteria_agree" | "contact_chains_agree"))
            .collect();
        prop_assert!(failed.is_empty(), "{:?}: {:?}", key, failed);

        // Chains descend from Q to Q∩Q̄ and never grow.
        let levi = levi_chain(&p);
        prop_assert_eq!(&levi.chain[0], p.q());
        for w in levi.chain.windows(2) {
            prop_assert!(w[1].is_subset(&w[0]));
        }
        if let Order::Finite(q) = levi.order {
            prop_assert_eq!(&levi.chain[q as usize], &p.q_cap_qbar());
        }

        // σ maps Q onto Q̄ and the CR dimension is symmetric.
        prop_assert_eq!(&p.sigma().image(p.q()), p.qbar());
        prop_assert_eq!(report.cr_dim, p.q_minus_qbar().len());
    }

    #[test]
    fn matrix_documents_round_trip(((t, r), k) in (system(), any::<usize>()), mask in 0u64..16) {
        let e = enumeration(t, r);
        let s = &e.involutions[k % e.involutions.len()];
        let crossed: Vec<usize> = (0..r).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        let spec = InstanceSpec {
            components: vec![ComponentSpec { cartan: t, rank: r }],
            crossed: vec![crossed.clone()],
            sigma: Some(SigmaSpec::Matrix {
                rows: s.matrix().iter().map(|row| row.iter().map(RationalText::from_rational).collect()).collect(),
            }),
            ..InstanceSpec::default()
        };
        let text = serde_json::to_string(&spec).unwrap();
        let back = crorder::instance::parse_instance(&text).unwrap();
        prop_assert_eq!(&back, &spec);
        let out = analyze_spec(&back).unwrap();
        let key = e.keys.iter().find(|key| key.crossed == crossed && e.involutions[key.sigma].matrix() == s.matrix()).unwrap();
        let direct = analyze_unchecked(&e.instance(key));
        prop_assert_eq!(serde_json::to_value(&out.report).unwrap()["levi_order"].clone(), serde_json::to_value(direct.levi_order).unwrap());
    }

    #[test]
    fn q_beta_depends_only_on_length((t, r) in prop::sample::select(vec![(A, 3), (B, 3), (C, 3), (G, 2), (D, 4)]), i in any::<usize>()) {
        let rs = RootSystem::build(t, r).unwrap();
        let b = RootId::new(i % rs.len());
        let (_, rep) = representatives(&rs).into_iter().find(|&(_, x)| rs.is_long(x) == rs.is_long(b)).unwrap();
        prop_assert_eq!(q_beta(&rs, b).unwrap().q, q_beta(&rs, rep).unwrap().q);
    }

    #[test]
    fn sl2_modules_satisfy_axioms(k in 0usize..40) {
        prop_assert!(Sl2Module::new(k, ActionConvention::Lowering).check_axioms());
        prop_assert!(Sl2Module::new(k, ActionConvention::Raising).check_axioms());
    }

    #[test]
    fn rationals_print_and_parse(n in -1000i64..1000, d in 1i64..1000) {
        let q = Rational::new(n.into(), d.into());
        prop_assert_eq!(parse_rational(&format_rational(&q)), Some(q));
    }
}
