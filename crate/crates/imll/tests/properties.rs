//! Property tests for the library-wide invariants: grammar round trips,
//! Danos-Regnier decider agreement, cut-elimination measures and confluence,
//! context plugging, and the equality relation.

use imll::analysis::equal;
use imll::context::{apply_net, Context};
use imll::formula::{
    abb, parse_formula, parse_imp, unabb, Formula, ImpFormula, Polarity, PolarizedFormula,
};
use imll::lambda::{
    assign_term, boolean_type, enumerate_normal, eval_boolean, read_boolean,
};
use imll::net::{LinkKind, ProofNet, ProofStructure};
use imll::rewrite::{normalize, normalize_with, sn_size, termination_measure};
use imll::separate::{assignment_context, Assignment};
use proptest::prelude::*;
use std::sync::OnceLock;

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

fn arb_raw_formula() -> impl Strategy<Value = Formula> {
    let leaf = Just(Formula::Atom);
    leaf.prop_recursive(10, 64, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| Formula::Tensor(Box::new(a), Box::new(b))),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::Par(Box::new(a), Box::new(b))),
        ]
    })
}

fn arb_imp_formula() -> impl Strategy<Value = ImpFormula> {
    let leaf = Just(ImpFormula::Atom);
    leaf.prop_recursive(10, 64, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ImpFormula::lolli(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| ImpFormula::tensor(a, b)),
        ]
    })
}

fn arb_polarity() -> impl Strategy<Value = Polarity> {
    prop_oneof![Just(Polarity::Pos), Just(Polarity::Neg)]
}

fn booleans() -> &'static Vec<ProofNet> {
    static CELL: OnceLock<Vec<ProofNet>> = OnceLock::new();
    CELL.get_or_init(|| enumerate_normal(&boolean_type()).unwrap())
}

fn unary_nets() -> &'static Vec<ProofNet> {
    static CELL: OnceLock<Vec<ProofNet>> = OnceLock::new();
    CELL.get_or_init(|| {
        let b = boolean_type();
        enumerate_normal(&ImpFormula::lolli(b.clone(), b)).unwrap()
    })
}

/// A closed net with cuts: a unary net applied to a boolean argument
/// (`apply_net` introduces a Cut), optionally cut once more against the
/// maximal η-expansion of `B`.
fn cut_net(fun_idx: usize, arg_idx: usize, wrap: bool) -> ProofNet {
    let fun = &unary_nets()[fun_idx % unary_nets().len()];
    let arg = &booleans()[arg_idx % booleans().len()];
    let applied = apply_net(fun, arg).unwrap();
    if !wrap {
        return applied;
    }
    let eta = imll::rewrite::eta_expand_max(&boolean_type());
    let mut s = eta.structure().clone();
    let map = s.absorb(applied.structure());
    let ac = map[&applied.positive_conclusion().unwrap()];
    let neg = s
        .conclusions()
        .into_iter()
        .find(|&id| s.node(id).polarity == Polarity::Neg)
        .unwrap();
    s.add_link(LinkKind::Cut, vec![ac, neg], vec![]);
    ProofNet::new(s).unwrap()
}

// ---------------------------------------------------------------------------
// Grammar round trips
// ---------------------------------------------------------------------------

proptest! {
    #[test]
    fn raw_formula_print_parse_round_trip(f in arb_raw_formula(), pol in arb_polarity()) {
        let text = PolarizedFormula::new(f.clone(), pol).to_string();
        let back = parse_formula(&text).unwrap();
        prop_assert_eq!(back.formula, f);
        prop_assert_eq!(back.polarity, pol);
    }

    #[test]
    fn imp_formula_print_parse_round_trip(f in arb_imp_formula()) {
        let (back, pol) = parse_imp(&f.to_string()).unwrap();
        prop_assert_eq!(back, f);
        prop_assert_eq!(pol, Polarity::Pos);
    }

    #[test]
    fn abb_unabb_round_trip(f in arb_raw_formula(), pol in arb_polarity()) {
        prop_assert_eq!(unabb(&abb(&f, pol), pol), f);
    }
}

// ---------------------------------------------------------------------------
// Net text format
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn net_text_round_trip(i in 0usize..20, j in 0usize..2, wrap in any::<bool>()) {
        for s in [
            unary_nets()[i].structure(),
            cut_net(i, j, wrap).structure(),
        ] {
            let back = ProofStructure::from_text(&s.to_text()).unwrap();
            prop_assert_eq!(back.canonical().to_text(), s.canonical().to_text());
            ProofNet::new(back).unwrap();
        }
    }
}

// ---------------------------------------------------------------------------
// Danos-Regnier deciders agree
// ---------------------------------------------------------------------------

/// Swaps the positive conclusions of two atomic ID links.  Typing is
/// preserved (all atoms are `p`), so the result still validates, but the
/// switching condition may now fail — exactly the mutation space on which
/// the exhaustive and contraction deciders must agree.
fn rewire_axioms(s: &mut ProofStructure, picks: &[(usize, usize)]) {
    for &(a, b) in picks {
        let atomic_ids: Vec<_> = s
            .links()
            .filter(|(_, l)| {
                l.kind == LinkKind::Id && s.node(l.conclusions[0]).formula == ImpFormula::Atom
            })
            .map(|(id, _)| id)
            .collect();
        if atomic_ids.len() < 2 {
            return;
        }
        let la = atomic_ids[a % atomic_ids.len()];
        let lb = atomic_ids[b % atomic_ids.len()];
        if la == lb {
            continue;
        }
        let mut link_a = s.remove_link(la).unwrap();
        let mut link_b = s.remove_link(lb).unwrap();
        std::mem::swap(&mut link_a.conclusions[0], &mut link_b.conclusions[0]);
        s.add_link(link_a.kind, link_a.premises, link_a.conclusions);
        s.add_link(link_b.kind, link_b.premises, link_b.conclusions);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dr_deciders_agree_on_rewired_structures(
        i in 0usize..2,
        picks in proptest::collection::vec((0usize..16, 0usize..16), 0..4),
    ) {
        let mut s = booleans()[i].structure().clone();
        rewire_axioms(&mut s, &picks);
        s.validate().map_err(|e| TestCaseError::fail(format!("{:?}", e)))?;
        prop_assert_eq!(s.dr_check_exhaustive(), s.dr_check_contract());
    }
}

// ---------------------------------------------------------------------------
// Cut elimination: measures, normal forms, confluence
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // normalize_with itself asserts that sn_size never increases and the
    // termination measure strictly decreases at every step; this test adds the
    // end-to-end facts: termination within the measure bound, a normal result,
    // and evaluation agreeing with the λ-level application.
    #[test]
    fn cut_elimination_terminates_and_computes(
        i in 0usize..20, j in 0usize..2, wrap in any::<bool>(),
    ) {
        let net = cut_net(i, j, wrap);
        let bound = termination_measure(net.structure());
        let start = sn_size(net.structure());
        let (normal, trace) = imll::rewrite::normalize_traced(&net);
        prop_assert!(normal.structure().is_normal());
        prop_assert!(trace.len() <= bound);
        prop_assert!(trace.iter().all(|t| t.sn_size <= start));
        let expected = eval_boolean(&unary_nets()[i], &[read_boolean(&booleans()[j]).unwrap()])
            .unwrap();
        prop_assert_eq!(read_boolean(&normal).unwrap(), expected);
    }

    #[test]
    fn cut_elimination_is_confluent(
        i in 0usize..20, j in 0usize..2, wrap in any::<bool>(),
        seed_a in any::<u64>(), seed_b in any::<u64>(),
    ) {
        use rand::{Rng, SeedableRng};
        let net = cut_net(i, j, wrap);
        let run = |seed: u64| {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let (n, _) = normalize_with(&net, |_, redexes| rng.gen_range(0..redexes.len()));
            n.structure().canonical().to_text()
        };
        prop_assert_eq!(run(seed_a), run(seed_b));
    }
}

// ---------------------------------------------------------------------------
// Contexts
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn plug_preserves_dr_and_computes_the_assignment(
        i in 0usize..20, x in any::<bool>(), negate in any::<bool>(),
    ) {
        let b = boolean_type();
        let conclusion = ImpFormula::lolli(b.clone(), b);
        let subject = &unary_nets()[i];
        let asg = Assignment { g: vec![], x: vec![x] };
        let mut ctx = assignment_context(&conclusion, &asg).unwrap();
        if negate {
            ctx = imll::separate::negation_context().compose(&ctx).unwrap();
        }
        let plugged = ctx.plug(subject).unwrap();
        prop_assert!(plugged.structure().dr_check());
        let value = read_boolean(&normalize(&plugged)).unwrap();
        let expected = eval_boolean(subject, &[x]).unwrap() ^ negate;
        prop_assert_eq!(value, expected);
    }

    #[test]
    fn trivial_context_plug_is_identity(i in 0usize..20) {
        let b = boolean_type();
        let hole = Context::make_hole(ImpFormula::lolli(b.clone(), b));
        let subject = &unary_nets()[i];
        let plugged = hole.plug(subject).unwrap();
        prop_assert!(plugged.structure().dr_check());
        prop_assert!(equal(&normalize(&plugged), subject).unwrap());
    }
}

// ---------------------------------------------------------------------------
// Equality
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn equality_is_an_equivalence_and_matches_alpha(
        i in 0usize..20, j in 0usize..20, k in 0usize..20,
    ) {
        let nets = unary_nets();
        let (a, b, c) = (&nets[i], &nets[j], &nets[k]);
        prop_assert!(equal(a, a).unwrap());
        prop_assert_eq!(equal(a, b).unwrap(), equal(b, a).unwrap());
        if equal(a, b).unwrap() && equal(b, c).unwrap() {
            prop_assert!(equal(a, c).unwrap());
        }
        // cross-oracle: §3 equality ⇔ α-equivalence of the assigned terms
        let ta = assign_term(a).unwrap();
        let tb = assign_term(b).unwrap();
        prop_assert_eq!(equal(a, b).unwrap(), ta.alpha_eq(&tb));
    }
}
