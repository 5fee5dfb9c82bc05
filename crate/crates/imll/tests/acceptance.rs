//! The acceptance suite: one test per acceptance criterion, so the harness
//! reports one pass/fail line for each.  Run with
//! `cargo test --test acceptance`.

use imll::analysis::{equal, measure_lolli};
use imll::context::apply_net;
use imll::formula::{is_simple, order, parse_imp, ImpFormula, Polarity};
use imll::lambda::{
    alt_boolean_type, alt_type_probe, assign_term, boolean_net, boolean_type,
    classification_closed_forms, classify_exhaustive, enumerate_normal, eval_boolean,
    read_boolean, term_to_net, truth_table, Term, DEFAULT_ENUM_BOUND,
};
use imll::net::{
    build_inductive, example_par_over_id, example_tensor_over_id, NodeId, ProofNet, Step,
};
use imll::rewrite::{eta_expand_max, normalize, normalize_with};
use imll::separate::{
    instantiate_net, reduce_order, separate, simple_to_iimll, to_simple,
};
use rand::{Rng, SeedableRng};
use std::sync::OnceLock;

fn imp(s: &str) -> ImpFormula {
    parse_imp(s).unwrap().0
}

fn nets_of(ty: &ImpFormula) -> Vec<ProofNet> {
    enumerate_normal(ty).unwrap()
}

fn unary_type() -> ImpFormula {
    let b = boolean_type();
    ImpFormula::lolli(b.clone(), b)
}

fn unary_nets() -> &'static Vec<ProofNet> {
    static CELL: OnceLock<Vec<ProofNet>> = OnceLock::new();
    CELL.get_or_init(|| nets_of(&unary_type()))
}

fn conclusion(net: &ProofNet) -> ImpFormula {
    net.node(net.positive_conclusion().unwrap()).formula.clone()
}

/// Criterion-4-style verification: the context sends the two (instantiated)
/// nets to 0̲ and 1̲ under §3 equality.
fn check_separation(a: &ProofNet, b: &ProofNet) {
    let bt = boolean_type();
    let ctx = separate(a, b).unwrap();
    let r0 = normalize(&ctx.plug(&instantiate_net(a, &bt).unwrap()).unwrap());
    let r1 = normalize(&ctx.plug(&instantiate_net(b, &bt).unwrap()).unwrap());
    assert!(equal(&r0, &boolean_net(false)).unwrap(), "left plug is not 0");
    assert!(equal(&r1, &boolean_net(true)).unwrap(), "right plug is not 1");
}

#[test]
fn c01_enumeration_counts() {
    let b = boolean_type();
    let mut ty = b.clone();
    for expected in [2usize, 20, 112, 660] {
        assert_eq!(nets_of(&ty).len(), expected, "count of {}", ty);
        ty = ImpFormula::lolli(b.clone(), ty);
    }
}

#[test]
fn c02_classification() {
    let c1 = classify_exhaustive(1, DEFAULT_ENUM_BOUND).unwrap();
    assert_eq!(c1.cases, [4, 2, 8, 6]);
    assert_eq!(c1.total, 20);
    let c2 = classify_exhaustive(2, DEFAULT_ENUM_BOUND).unwrap();
    assert_eq!(c2.total, 112);
    for n in 1u64..=3 {
        let c = classification_closed_forms(n);
        let fact: u64 = (1..=n).product();
        assert_eq!(c.cases.iter().sum::<u64>(), c.total);
        assert_eq!(c.total, fact * (9 * n * n + 9 * n + 2));
        assert_eq!(c.nonconstant_nets, Some(fact * 2 * n));
        assert_eq!(c.distinct_functions, Some(2 * n + 2));
    }
}

#[test]
fn c03_truth_tables() {
    // Table 1: e1..e4 over the 20 unary nets; exactly 18 are constant
    let mut unary: Vec<Vec<bool>> = unary_nets()
        .iter()
        .map(|n| truth_table(n, 1).unwrap())
        .collect();
    let constants = unary.iter().filter(|t| t[0] == t[1]).count();
    assert_eq!(constants, 18);
    unary.sort();
    unary.dedup();
    let e = |s: &[u8]| s.iter().map(|&c| c == b'1').collect::<Vec<_>>();
    assert_eq!(unary, vec![e(b"00"), e(b"01"), e(b"10"), e(b"11")]);
    // Table 2: f1..f6 over the 112 binary nets
    let b = boolean_type();
    let bin_ty = ImpFormula::lolli(b.clone(), unary_type());
    let mut binary: Vec<Vec<bool>> = nets_of(&bin_ty)
        .iter()
        .map(|n| truth_table(n, 2).unwrap())
        .collect();
    binary.sort();
    binary.dedup();
    // rows in argument order 00,01,10,11: the constants, the projections,
    // and the negated projections
    let expected: Vec<Vec<bool>> = [b"0000", b"0011", b"0101", b"1010", b"1100", b"1111"]
        .iter()
        .map(|s| e(*s))
        .collect();
    assert_eq!(binary, expected);
}

#[test]
fn c04_separation_round_trip() {
    // the 2 nets of B
    let booleans = nets_of(&boolean_type());
    check_separation(&booleans[0], &booleans[1]);
    // all 190 unordered pairs of the 20 nets of B -o B, in parallel
    let nets = unary_nets();
    let pairs: Vec<(usize, usize)> = (0..nets.len())
        .flat_map(|i| (i + 1..nets.len()).map(move |j| (i, j)))
        .collect();
    assert_eq!(pairs.len(), 190);
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(4);
    std::thread::scope(|scope| {
        for w in 0..workers {
            let pairs = &pairs;
            scope.spawn(move || {
                for &(i, j) in pairs.iter().skip(w).step_by(workers) {
                    check_separation(&nets[i], &nets[j]);
                }
            });
        }
    });
}

#[test]
fn c05_order_reduction() {
    for ty in [
        imp("((p -o p) -o p) -o (p -o p) -o p"),
        imp("(p -o p) -o ((p -o p) -o p) -o p"),
    ] {
        assert_eq!(order(&ty).unwrap(), 4);
        let nets = nets_of(&ty);
        assert_eq!(nets.len(), 2);
        for (a, b) in [(&nets[0], &nets[1]), (&nets[1], &nets[0])] {
            let before = measure_lolli(a).unwrap();
            let (_, r1, r2) = reduce_order(a, b).unwrap();
            assert!(order(&conclusion(&r1)).unwrap() < 4);
            assert!(measure_lolli(&r1).unwrap() < before);
            assert!(!equal(&r1, &r2).unwrap());
        }
    }
}

/// The §3 pair over `p -o ((p*p) -o ((p -o (p*p)) * (p*p)))`, differing in
/// which let-bound component each ⊗⁺ consumes.
fn section3_net(swap: bool) -> ProofNet {
    let p = ImpFormula::Atom;
    let (a, b) = if swap { (3, 2) } else { (2, 3) };
    let t = Term::lam(
        0,
        p.clone(),
        Term::lam(
            1,
            imp("p * p"),
            Term::LetPair {
                left: (2, p.clone()),
                right: (3, p.clone()),
                scrutinee: Box::new(Term::var(1)),
                body: Box::new(Term::pair(
                    Term::lam(4, p.clone(), Term::pair(Term::var(4), Term::var(b))),
                    Term::pair(Term::var(a), Term::var(0)),
                )),
            },
        ),
    );
    term_to_net(&t, &imp("p -o ((p * p) -o ((p -o (p * p)) * (p * p)))")).unwrap()
}

/// The identity and the swap on `p ⊗ p`.
fn tensor_endo_net(swap: bool) -> ProofNet {
    let p = ImpFormula::Atom;
    let (a, b) = if swap { (2, 1) } else { (1, 2) };
    let t = Term::lam(
        0,
        imp("p * p"),
        Term::LetPair {
            left: (1, p.clone()),
            right: (2, p.clone()),
            scrutinee: Box::new(Term::var(0)),
            body: Box::new(Term::pair(Term::var(a), Term::var(b))),
        },
    );
    term_to_net(&t, &imp("(p * p) -o (p * p)")).unwrap()
}

#[test]
fn c06_imll_path() {
    let pairs = [
        (section3_net(false), section3_net(true)),
        (tensor_endo_net(false), tensor_endo_net(true)),
    ];
    for (a, b) in &pairs {
        assert!(matches!(conclusion(a), ImpFormula::Lolli(..)));
        assert!(!equal(a, b).unwrap());
        let (_, s1, s2) = to_simple(a, b).unwrap();
        assert!(is_simple(&conclusion(&s1)));
        assert!(!equal(&s1, &s2).unwrap());
        let (_, i1, i2) = simple_to_iimll(&s1, &s2).unwrap();
        let c = conclusion(&i1);
        assert!(c.is_iimll());
        assert!(order(&c).unwrap() < 4);
        assert!(!equal(&i1, &i2).unwrap());
        check_separation(a, b);
    }
}

#[test]
fn c07_rewriting_random_cut_nets() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x1771);
    let booleans = nets_of(&boolean_type());
    let eta_b = eta_expand_max(&boolean_type());
    for _ in 0..1000 {
        // f(x), f(g(x)), optionally cut once more against η-expansion of B
        let f = &unary_nets()[rng.gen_range(0..20)];
        let x = &booleans[rng.gen_range(0..2)];
        let mut net = apply_net(f, x).unwrap();
        let mut expected = eval_boolean(f, &[read_boolean(x).unwrap()]).unwrap();
        if rng.gen() {
            let g = &unary_nets()[rng.gen_range(0..20)];
            net = apply_net(g, &net).unwrap();
            expected = eval_boolean(g, &[expected]).unwrap();
        }
        if rng.gen() {
            let mut s = eta_b.structure().clone();
            let map = s.absorb(net.structure());
            let ac = map[&net.positive_conclusion().unwrap()];
            let neg = s
                .conclusions()
                .into_iter()
                .find(|&id| s.node(id).polarity == Polarity::Neg)
                .unwrap();
            s.add_link(imll::net::LinkKind::Cut, vec![ac, neg], vec![]);
            net = ProofNet::new(s).unwrap();
        }
        // normalize_with asserts at every step that the SN size does not
        // increase and the termination measure strictly decreases
        let mut strategy_seeds = [rng.gen::<u64>(), rng.gen::<u64>()];
        strategy_seeds[1] ^= 1;
        let texts: Vec<String> = strategy_seeds
            .iter()
            .map(|&seed| {
                let mut r = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                let (n, _) = normalize_with(&net, |_, redexes| r.gen_range(0..redexes.len()));
                assert!(n.structure().is_normal());
                assert_eq!(read_boolean(&n).unwrap(), expected);
                n.structure().canonical().to_text()
            })
            .collect();
        assert_eq!(texts[0], texts[1], "confluence");
    }
}

#[test]
fn c08_dr_criterion() {
    // inductively built nets pass dr_check by construction (asserted inside
    // build_inductive); spot-check a derivation ending in p -o p
    let net = build_inductive(
        &[
            Step::Id(ImpFormula::Atom),
            Step::ParPos {
                left: NodeId(1),
                right: NodeId(0),
            },
        ],
        true,
    )
    .unwrap();
    assert!(net.structure().dr_check());
    // compiled nets are inductively built as well
    assert!(boolean_net(true).structure().dr_check());
    // the tensor-over-ID structure fails, the par-over-ID net passes
    assert!(!example_tensor_over_id().dr_check());
    assert!(example_par_over_id().dr_check());
}

#[test]
fn c09_negative_control() {
    let report = alt_type_probe(DEFAULT_ENUM_BOUND).unwrap();
    assert_eq!(report.count, 2);
    assert!(report.unary_is_id_and_swap);
    assert!(report.no_constants);
    assert!(report.all_parity);
}

#[test]
fn c10_equality_oracles_agree() {
    let bp = alt_boolean_type();
    for ty in [
        boolean_type(),
        unary_type(),
        ImpFormula::lolli(bp.clone(), bp),
    ] {
        let nets = nets_of(&ty);
        let terms: Vec<Term> = nets.iter().map(|n| assign_term(n).unwrap()).collect();
        for i in 0..nets.len() {
            for j in 0..nets.len() {
                assert_eq!(
                    equal(&nets[i], &nets[j]).unwrap(),
                    terms[i].alpha_eq(&terms[j]),
                    "oracles disagree on pair ({i}, {j}) of {ty}"
                );
            }
        }
    }
}
