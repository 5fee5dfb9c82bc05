//! Cut elimination and η-expansion: the five rewrite rules, the SN-size
//! termination measure, and normalization.
//!
//! The rules, on a net Θ:
//!
//! * `ID_RULE` — a Cut one of whose premises is a conclusion of an ID link:
//!   drop the Cut and the ID and splice the two remaining occurrences.
//! * `MULT_1` — a Cut between a `PAR_POS` conclusion `(A -o B)+` and a
//!   `TENSOR_NEG` conclusion `(A -o B)-`: replace by Cuts on `A` and `B`.
//! * `MULT_2` — the same for `TENSOR_POS` `(A * B)+` against `PAR_NEG`
//!   `(A * B)-`.
//! * `ETA_1` / `ETA_2` — an ID link with compound conclusions `(A -o B)` /
//!   `(A * B)`: expand one connective, leaving ID links on `A` and `B`.
//!
//! Termination: the SN size (an ID link counts the connectives of a
//! conclusion, a Cut counts the connectives of a premise plus one) never
//! increases, and strictly decreases on `ID_RULE` and `ETA` steps; a `MULT`
//! step keeps it constant — `(c_A + c_B + 1) + 1` before against
//! `(c_A + 1) + (c_B + 1)` after — while removing one link.  The combined
//! measure `4 * sn_size + link_count` therefore strictly decreases at every
//! step, every strategy terminates, and the system is confluent; normal
//! forms are the cut-free η-long nets.

use crate::formula::ImpFormula;
use crate::net::{LinkId, LinkKind, NetError, NodeId, ProofNet, ProofStructure};

/// The five rule tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RuleKind {
    IdRule,
    Mult1,
    Mult2,
    Eta1,
    Eta2,
}

impl RuleKind {
    pub fn name(self) -> &'static str {
        match self {
            RuleKind::IdRule => "ID_RULE",
            RuleKind::Mult1 => "MULT_1",
            RuleKind::Mult2 => "MULT_2",
            RuleKind::Eta1 => "ETA_1",
            RuleKind::Eta2 => "ETA_2",
        }
    }

    /// Strategy priority of the default normalizer (lower fires first).
    fn priority(self) -> u8 {
        match self {
            RuleKind::IdRule => 0,
            RuleKind::Mult1 | RuleKind::Mult2 => 1,
            RuleKind::Eta1 | RuleKind::Eta2 => 2,
        }
    }
}

impl std::fmt::Display for RuleKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A fireable redex: the rule tag plus the Cut link (ID_RULE, MULT) or ID
/// link (ETA) it fires on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Redex {
    pub rule: RuleKind,
    pub link: LinkId,
    /// Smallest participating node id; the canonical enumeration key.
    pub min_node: NodeId,
}

/// The SN size: Σ over ID links of the connective count of a conclusion,
/// plus Σ over Cut links of the connective count of a premise plus 1.
pub fn sn_size(s: &ProofStructure) -> usize {
    s.links()
        .map(|(_, l)| match l.kind {
            LinkKind::Id => s.node(l.conclusions[0]).formula.size(),
            LinkKind::Cut => s.node(l.premises[0]).formula.size() + 1,
            _ => 0,
        })
        .sum()
}

/// The strictly decreasing termination measure: `4 * sn_size + link_count`.
/// See the module docs for why the SN size alone is only non-increasing.
pub fn termination_measure(s: &ProofStructure) -> usize {
    4 * sn_size(s) + s.link_count()
}

/// All fireable redexes, ordered by smallest participating node id (ties by
/// link id).  Each Cut or ID link contributes at most one redex; a Cut
/// against an ID conclusion is an `ID_RULE` redex even when the other
/// premise would also fit a multiplicative pairing.
pub fn find_redexes(s: &ProofStructure) -> Vec<Redex> {
    let (concluding, _) = s.indexes();
    let mut out = Vec::new();
    for (lid, l) in s.links() {
        let redex = match l.kind {
            LinkKind::Cut => {
                let (p, n) = (l.premises[0], l.premises[1]);
                let kind_of = |x: NodeId| concluding.get(&x).map(|&c| s.link(c).kind);
                let (pk, nk) = (kind_of(p), kind_of(n));
                let rule = if pk == Some(LinkKind::Id) || nk == Some(LinkKind::Id) {
                    Some(RuleKind::IdRule)
                } else if pk == Some(LinkKind::ParPos) && nk == Some(LinkKind::TensorNeg) {
                    Some(RuleKind::Mult1)
                } else if pk == Some(LinkKind::TensorPos) && nk == Some(LinkKind::ParNeg) {
                    Some(RuleKind::Mult2)
                } else {
                    None
                };
                rule.map(|rule| Redex {
                    rule,
                    link: lid,
                    min_node: p.min(n),
                })
            }
            LinkKind::Id => match s.node(l.conclusions[0]).formula {
                ImpFormula::Atom => None,
                ImpFormula::Lolli(..) => Some(RuleKind::Eta1),
                ImpFormula::Tensor(..) => Some(RuleKind::Eta2),
            }
            .map(|rule| Redex {
                rule,
                link: lid,
                min_node: l.conclusions[0].min(l.conclusions[1]),
            }),
            _ => None,
        };
        out.extend(redex);
    }
    out.sort_by_key(|r| (r.min_node, r.link));
    out
}

fn stale(r: &Redex) -> NetError {
    NetError::Other(format!(
        "stale redex reference: {} at link {}",
        r.rule.name(),
        r.link.0
    ))
}

/// Fires one redex in place.  The conclusions of the structure keep their
/// node ids: the splice of `ID_RULE` always keeps the ID link's outer
/// conclusion occurrence and redirects the link concluding the cut's other
/// premise onto it.
pub fn apply_rule(s: &mut ProofStructure, r: &Redex) -> Result<(), NetError> {
    let l = match s.links().find(|&(i, _)| i == r.link) {
        Some((_, l)) => l.clone(),
        None => return Err(stale(r)),
    };
    match r.rule {
        RuleKind::IdRule => {
            if l.kind != LinkKind::Cut {
                return Err(stale(r));
            }
            let (concluding, _) = s.indexes();
            let (p, n) = (l.premises[0], l.premises[1]);
            // orient so that `id_side` is the cut premise concluded by an ID
            let pick = |x: NodeId| {
                concluding
                    .get(&x)
                    .copied()
                    .filter(|&c| s.link(c).kind == LinkKind::Id)
            };
            let (id_link, id_side, other) = if let Some(c) = pick(p) {
                (c, p, n)
            } else if let Some(c) = pick(n) {
                (c, n, p)
            } else {
                return Err(stale(r));
            };
            let id = s.link(id_link).clone();
            let outer = if id.conclusions[0] == id_side {
                id.conclusions[1]
            } else {
                id.conclusions[0]
            };
            if outer == other {
                // both premises of the cut come from the same ID link; such a
                // closed loop never passes DR, so a net cannot reach here
                return Err(NetError::Other(
                    "degenerate ID_RULE: cut premises are the two conclusions of one ID".into(),
                ));
            }
            // redirect the link concluding `other` to conclude `outer`
            let oc = concluding[&other];
            let link = s.link(oc).clone();
            let mut conclusions = link.conclusions;
            for c in conclusions.iter_mut() {
                if *c == other {
                    *c = outer;
                }
            }
            let premises = link.premises;
            let kind = link.kind;
            s.remove_link(oc);
            s.add_link(kind, premises, conclusions);
            s.remove_link(r.link);
            s.remove_link(id_link);
            s.remove_node(id_side);
            s.remove_node(other);
        }
        RuleKind::Mult1 | RuleKind::Mult2 => {
            if l.kind != LinkKind::Cut {
                return Err(stale(r));
            }
            let (concluding, _) = s.indexes();
            let (p, n) = (l.premises[0], l.premises[1]);
            let (want_p, want_n) = match r.rule {
                RuleKind::Mult1 => (LinkKind::ParPos, LinkKind::TensorNeg),
                _ => (LinkKind::TensorPos, LinkKind::ParNeg),
            };
            let (pl, nl) = match (concluding.get(&p), concluding.get(&n)) {
                (Some(&pl), Some(&nl))
                    if s.link(pl).kind == want_p && s.link(nl).kind == want_n =>
                {
                    (pl, nl)
                }
                _ => return Err(stale(r)),
            };
            let (pp, np) = (s.link(pl).premises.clone(), s.link(nl).premises.clone());
            s.remove_link(r.link);
            s.remove_link(pl);
            s.remove_link(nl);
            s.remove_node(p);
            s.remove_node(n);
            // premise polarities: PAR_POS (A-, B+) vs TENSOR_NEG (A+, B-),
            // TENSOR_POS (A+, B+) vs PAR_NEG (A-, B-)
            match r.rule {
                RuleKind::Mult1 => {
                    s.add_link(LinkKind::Cut, vec![np[0], pp[0]], vec![]);
                    s.add_link(LinkKind::Cut, vec![pp[1], np[1]], vec![]);
                }
                _ => {
                    s.add_link(LinkKind::Cut, vec![pp[0], np[0]], vec![]);
                    s.add_link(LinkKind::Cut, vec![pp[1], np[1]], vec![]);
                }
            }
        }
        RuleKind::Eta1 | RuleKind::Eta2 => {
            if l.kind != LinkKind::Id {
                return Err(stale(r));
            }
            let (pc, nc) = (l.conclusions[0], l.conclusions[1]);
            let (a, b) = match (&s.node(pc).formula, r.rule) {
                (ImpFormula::Lolli(a, b), RuleKind::Eta1)
                | (ImpFormula::Tensor(a, b), RuleKind::Eta2) => {
                    (a.as_ref().clone(), b.as_ref().clone())
                }
                _ => return Err(stale(r)),
            };
            use crate::formula::Polarity::{Neg, Pos};
            let (ap, an) = (s.add_node(a.clone(), Pos), s.add_node(a, Neg));
            let (bp, bn) = (s.add_node(b.clone(), Pos), s.add_node(b, Neg));
            s.remove_link(r.link);
            s.add_link(LinkKind::Id, vec![], vec![ap, an]);
            s.add_link(LinkKind::Id, vec![], vec![bp, bn]);
            if r.rule == RuleKind::Eta1 {
                s.add_link(LinkKind::ParPos, vec![an, bp], vec![pc]);
                s.add_link(LinkKind::TensorNeg, vec![ap, bn], vec![nc]);
            } else {
                s.add_link(LinkKind::TensorPos, vec![ap, bp], vec![pc]);
                s.add_link(LinkKind::ParNeg, vec![an, bn], vec![nc]);
            }
        }
    }
    Ok(())
}

/// One line of a normalization trace.
#[derive(Debug, Clone, Copy)]
pub struct TraceEntry {
    pub step: usize,
    pub rule: RuleKind,
    /// SN size after the step.
    pub sn_size: usize,
}

impl std::fmt::Display for TraceEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "step {} rule={} sn_size={}",
            self.step, self.rule, self.sn_size
        )
    }
}

/// Normalizes with a caller-supplied strategy: `choose` picks an index into
/// the (non-empty) redex list.  The termination measure is asserted to
/// decrease, and the SN size not to increase, at every step.
pub fn normalize_with<F>(net: &ProofNet, mut choose: F) -> (ProofNet, Vec<TraceEntry>)
where
    F: FnMut(&ProofStructure, &[Redex]) -> usize,
{
    let mut s = net.structure().clone();
    let mut trace = Vec::new();
    let mut size = sn_size(&s);
    let mut measure = termination_measure(&s);
    let mut step = 0;
    loop {
        let redexes = find_redexes(&s);
        if redexes.is_empty() {
            break;
        }
        let r = redexes[choose(&s, &redexes).min(redexes.len() - 1)];
        apply_rule(&mut s, &r).expect("redex from find_redexes must fire");
        let new_size = sn_size(&s);
        let new_measure = termination_measure(&s);
        assert!(new_size <= size, "SN size must not increase");
        assert!(
            new_measure < measure,
            "termination measure must strictly decrease"
        );
        size = new_size;
        measure = new_measure;
        trace.push(TraceEntry {
            step,
            rule: r.rule,
            sn_size: new_size,
        });
        step += 1;
    }
    debug_assert!(s.is_normal());
    (ProofNet::trusted(s), trace)
}

/// Default strategy: among all redexes, fire the one with the highest rule
/// priority (`ID_RULE` > `MULT` > `ETA`), leftmost by node id within a
/// priority class.
pub fn normalize_traced(net: &ProofNet) -> (ProofNet, Vec<TraceEntry>) {
    normalize_with(net, |_, redexes| {
        redexes
            .iter()
            .enumerate()
            .min_by_key(|(_, r)| (r.rule.priority(), r.min_node, r.link))
            .map(|(i, _)| i)
            .unwrap()
    })
}

/// Cut elimination + η-expansion to the unique normal form.
pub fn normalize(net: &ProofNet) -> ProofNet {
    normalize_traced(net).0
}

/// The maximal η-expansion of `A`: the cut-free net with conclusions
/// `A+`, `A-` and atomic ID links only.  Equals `normalize` of the single
/// ID link on `A`.
pub fn eta_expand_max(a: &ImpFormula) -> ProofNet {
    let mut s = ProofStructure::new();
    use crate::formula::Polarity::{Neg, Pos};
    let p = s.add_node(a.clone(), Pos);
    let n = s.add_node(a.clone(), Neg);
    s.add_link(LinkKind::Id, vec![], vec![p, n]);
    normalize(&ProofNet::trusted(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse_imp, Polarity};
    use crate::net::example_par_over_id;

    fn imp(s: &str) -> ImpFormula {
        parse_imp(s).unwrap().0
    }

    fn atomic_id(s: &mut ProofStructure) -> (NodeId, NodeId) {
        let p = s.add_node(ImpFormula::Atom, Polarity::Pos);
        let n = s.add_node(ImpFormula::Atom, Polarity::Neg);
        s.add_link(LinkKind::Id, vec![], vec![p, n]);
        (p, n)
    }

    #[test]
    fn sn_size_examples() {
        let mut s = ProofStructure::new();
        atomic_id(&mut s);
        assert_eq!(sn_size(&s), 0);

        let (p, _) = atomic_id(&mut s);
        let (_, n) = atomic_id(&mut s);
        s.add_link(LinkKind::Cut, vec![p, n], vec![]);
        assert_eq!(sn_size(&s), 1);

        let mut s = ProofStructure::new();
        let p = s.add_node(imp("p -o p"), Polarity::Pos);
        let n = s.add_node(imp("p -o p"), Polarity::Neg);
        s.add_link(LinkKind::Id, vec![], vec![p, n]);
        assert_eq!(sn_size(&s), 1);
    }

    #[test]
    fn no_redex_in_normal_net() {
        let s = example_par_over_id();
        assert!(find_redexes(&s).is_empty());
    }

    #[test]
    fn eta_on_lolli_id() {
        let net = eta_expand_max(&imp("p -o p"));
        assert!(net.is_normal());
        let kinds: Vec<LinkKind> = net.links().map(|(_, l)| l.kind).collect();
        assert_eq!(
            kinds.iter().filter(|&&k| k == LinkKind::Id).count(),
            2,
            "two atomic IDs"
        );
        assert!(kinds.contains(&LinkKind::ParPos));
        assert!(kinds.contains(&LinkKind::TensorNeg));
        assert_eq!(net.node_count(), 6);
        // conclusions are exactly (p -o p)+ and (p -o p)-
        let concs = net.conclusions();
        assert_eq!(concs.len(), 2);
        for c in concs {
            assert_eq!(net.node(c).formula, imp("p -o p"));
        }
    }

    #[test]
    fn eta_expand_counts_links() {
        // a formula with k connectives expands to k paired links + (k+1) IDs
        let a = imp("(p -o p) -o (p * p) -o p");
        let k = a.size();
        let net = eta_expand_max(&a);
        assert!(net.is_normal());
        assert_eq!(net.link_count(), 2 * k + (k + 1));
    }

    /// Cuts the positive conclusion of `f` against the negative conclusion
    /// of `x`, merging the structures.
    fn cut_against(f: &ProofStructure, x: &ProofStructure) -> ProofStructure {
        let mut s = f.clone();
        let mut map = std::collections::BTreeMap::new();
        for (id, n) in x.nodes() {
            map.insert(id, s.add_node(n.formula.clone(), n.polarity));
        }
        for (_, l) in x.links() {
            s.add_link(
                l.kind,
                l.premises.iter().map(|n| map[n]).collect(),
                l.conclusions.iter().map(|n| map[n]).collect(),
            );
        }
        let p = f.positive_conclusion().unwrap();
        let pf = f.node(p).formula.clone();
        let n = x
            .conclusions()
            .into_iter()
            .find(|&c| x.node(c).polarity == Polarity::Neg && x.node(c).formula == pf)
            .unwrap();
        s.add_link(LinkKind::Cut, vec![p, map[&n]], vec![]);
        s
    }

    #[test]
    fn id_rule_restores_original() {
        // closed net of (p -o p)+ cut against the ID link on p -o p:
        // ID_RULE yields the original net again (one more conclusion id)
        let closed = example_par_over_id();
        let mut id = ProofStructure::new();
        let p = id.add_node(imp("p -o p"), Polarity::Pos);
        let n = id.add_node(imp("p -o p"), Polarity::Neg);
        id.add_link(LinkKind::Id, vec![], vec![p, n]);
        let s = cut_against(&closed, &id);
        let net = ProofNet::new(s).unwrap();
        assert_eq!(sn_size(&net), 3); // compound ID: 1; compound Cut: 1 + 1

        let redexes = find_redexes(&net);
        assert!(redexes.iter().any(|r| r.rule == RuleKind::IdRule));
        let (nf, trace) = normalize_traced(&net);
        assert!(nf.is_normal());
        assert!(!trace.is_empty());
        assert_eq!(
            nf.structure().canonical().to_text(),
            closed.canonical().to_text()
        );
    }

    #[test]
    fn mult_reduces_to_atomic_id() {
        // (p -o p)+ closed net cut against a TENSOR_NEG (p -o p)- built from
        // two atomic IDs; normal form is a single atomic ID
        let closed = example_par_over_id();
        let mut app = ProofStructure::new();
        let (ap, _an) = atomic_id(&mut app);
        let (_bp, bn) = atomic_id(&mut app);
        let c = app.add_node(imp("p -o p"), Polarity::Neg);
        app.add_link(LinkKind::TensorNeg, vec![ap, bn], vec![c]);
        // conclusions: an-, bp+, c-
        let s = cut_against(&closed, &app);
        let net = ProofNet::new(s).unwrap();
        let nf = normalize(&net);
        assert!(nf.is_normal());
        assert_eq!(nf.node_count(), 2);
        assert_eq!(nf.link_count(), 1);
    }

    #[test]
    fn divergent_steps_rejoin() {
        // an ID on a compound formula cut against a net admits both ETA and
        // ID_RULE in one step; the one-step reducts differ but both normalize
        // to the same net (confluence, not one-step confluence)
        let closed = example_par_over_id();
        let mut id = ProofStructure::new();
        let p = id.add_node(imp("p -o p"), Polarity::Pos);
        let n = id.add_node(imp("p -o p"), Polarity::Neg);
        id.add_link(LinkKind::Id, vec![], vec![p, n]);
        let net = ProofNet::new(cut_against(&closed, &id)).unwrap();

        let redexes = find_redexes(&net);
        let eta = redexes.iter().find(|r| r.rule == RuleKind::Eta1).unwrap();
        let idr = redexes.iter().find(|r| r.rule == RuleKind::IdRule).unwrap();

        let mut s1 = net.structure().clone();
        apply_rule(&mut s1, eta).unwrap();
        let mut s2 = net.structure().clone();
        apply_rule(&mut s2, idr).unwrap();
        assert_ne!(s1.canonical().to_text(), s2.canonical().to_text());

        let n1 = normalize(&ProofNet::new(s1).unwrap());
        let n2 = normalize(&ProofNet::new(s2).unwrap());
        assert_eq!(
            n1.structure().canonical().to_text(),
            n2.structure().canonical().to_text()
        );
    }

    #[test]
    fn trace_sizes_strictly_decrease() {
        let closed = example_par_over_id();
        let id = {
            let mut s = ProofStructure::new();
            let p = s.add_node(imp("p -o p"), Polarity::Pos);
            let n = s.add_node(imp("p -o p"), Polarity::Neg);
            s.add_link(LinkKind::Id, vec![], vec![p, n]);
            s
        };
        let net = ProofNet::new(cut_against(&closed, &id)).unwrap();
        let initial = sn_size(&net);
        let (_, trace) = normalize_traced(&net);
        assert!(trace.len() <= termination_measure(&net));
        let mut prev = initial;
        for t in &trace {
            assert!(t.sn_size <= prev);
            prev = t.sn_size;
        }
        assert_eq!(trace.last().unwrap().sn_size, 0);
    }
}
