//! Proof structures, well-formedness, and the Danos-Regnier criterion.
//!
//! A proof structure is a graph of links over polarized formula occurrences
//! (nodes).  Each node is the conclusion of exactly one link and the premise
//! of at most one link.  Nodes carry their formula in the `-o` abbreviated
//! view together with a polarity; see the `formula` module for why this view
//! makes link typing uniform.
//!
//! Link table (left/right order is significant):
//!
//! | kind        | premises        | conclusions      | raw reading    |
//! |-------------|-----------------|------------------|----------------|
//! | `ID`        | —               | `A+`, `A-`       | axiom          |
//! | `CUT`       | `A+`, `A-`      | —                | cut            |
//! | `PAR_POS`   | `A-`, `B+`      | `(A -o B)+`      | ⅋⁺ (λ)         |
//! | `TENSOR_NEG`| `A+`, `B-`      | `(A -o B)-`      | ⊗⁻ (apply)     |
//! | `TENSOR_POS`| `A+`, `B+`      | `(A * B)+`       | ⊗⁺ (pair)      |
//! | `PAR_NEG`   | `A-`, `B-`      | `(A * B)-`       | ⅋⁻ (split)     |
//! | `HOLE`      | —               | `A+`             | one-hole axiom |

use crate::formula::{parse_formula, ImpFormula, Polarity, PolarizedFormula};
use std::collections::BTreeMap;
use std::fmt;

/// Identifier of a formula occurrence in a structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(pub u32);

/// Identifier of a link in a structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinkId(pub u32);

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LinkKind {
    Id,
    Cut,
    TensorPos,
    TensorNeg,
    ParPos,
    ParNeg,
    Hole,
}

impl LinkKind {
    pub fn name(self) -> &'static str {
        match self {
            LinkKind::Id => "ID",
            LinkKind::Cut => "CUT",
            LinkKind::TensorPos => "TENSOR_POS",
            LinkKind::TensorNeg => "TENSOR_NEG",
            LinkKind::ParPos => "PAR_POS",
            LinkKind::ParNeg => "PAR_NEG",
            LinkKind::Hole => "HOLE",
        }
    }

    pub fn from_name(s: &str) -> Option<LinkKind> {
        Some(match s {
            "ID" => LinkKind::Id,
            "CUT" => LinkKind::Cut,
            "TENSOR_POS" => LinkKind::TensorPos,
            "TENSOR_NEG" => LinkKind::TensorNeg,
            "PAR_POS" => LinkKind::ParPos,
            "PAR_NEG" => LinkKind::ParNeg,
            "HOLE" => LinkKind::Hole,
            _ => return None,
        })
    }

    /// Is this one of the two ⅋-links (switched in DR graphs)?
    pub fn is_par(self) -> bool {
        matches!(self, LinkKind::ParPos | LinkKind::ParNeg)
    }
}

/// A formula occurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub formula: ImpFormula,
    pub polarity: Polarity,
}

impl Node {
    /// The raw polarized view (for printing).
    pub fn polarized(&self) -> PolarizedFormula {
        PolarizedFormula::from_imp(&self.formula, self.polarity)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Link {
    pub kind: LinkKind,
    pub premises: Vec<NodeId>,
    pub conclusions: Vec<NodeId>,
}

/// A well-formedness or typing diagnostic produced by [`ProofStructure::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub link: Option<LinkId>,
    pub node: Option<NodeId>,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = self.link {
            write!(f, "link {}: ", l.0)?;
        }
        if let Some(n) = self.node {
            write!(f, "node {}: ", n.0)?;
        }
        write!(f, "{}", self.message)
    }
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum NetError {
    #[error("invalid proof structure:\n{}", .0.iter().map(|d| format!("  {d}")).collect::<Vec<_>>().join("\n"))]
    Invalid(Vec<Diagnostic>),
    #[error("structure fails the Danos-Regnier criterion")]
    NotANet,
    #[error("net format error at line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("ill-formed derivation step {step}: {msg}")]
    BadStep { step: usize, msg: String },
    #[error("{0}")]
    Other(String),
}

/// A link-graph over polarized formula occurrences.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ProofStructure {
    nodes: BTreeMap<u32, Node>,
    links: BTreeMap<u32, Link>,
    next_node: u32,
    next_link: u32,
}

impl ProofStructure {
    pub fn new() -> ProofStructure {
        ProofStructure::default()
    }

    pub fn add_node(&mut self, formula: ImpFormula, polarity: Polarity) -> NodeId {
        let id = self.next_node;
        self.next_node += 1;
        self.nodes.insert(id, Node { formula, polarity });
        NodeId(id)
    }

    /// Inserts a node with a caller-chosen id (used by the file parser).
    pub fn add_node_with_id(
        &mut self,
        id: NodeId,
        formula: ImpFormula,
        polarity: Polarity,
    ) -> Result<(), NetError> {
        if self.nodes.contains_key(&id.0) {
            return Err(NetError::Other(format!("duplicate node id {}", id.0)));
        }
        self.next_node = self.next_node.max(id.0 + 1);
        self.nodes.insert(id.0, Node { formula, polarity });
        Ok(())
    }

    pub fn add_link(
        &mut self,
        kind: LinkKind,
        premises: Vec<NodeId>,
        conclusions: Vec<NodeId>,
    ) -> LinkId {
        let id = self.next_link;
        self.next_link += 1;
        self.links.insert(
            id,
            Link {
                kind,
                premises,
                conclusions,
            },
        );
        LinkId(id)
    }

    pub fn remove_link(&mut self, id: LinkId) -> Option<Link> {
        self.links.remove(&id.0)
    }

    pub fn remove_node(&mut self, id: NodeId) -> Option<Node> {
        self.nodes.remove(&id.0)
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[&id.0]
    }

    pub fn get_node(&self, id: NodeId) -> Option<&Node> {
        self.nodes.get(&id.0)
    }

    pub fn link(&self, id: LinkId) -> &Link {
        &self.links[&id.0]
    }

    pub fn nodes(&self) -> impl Iterator<Item = (NodeId, &Node)> {
        self.nodes.iter().map(|(&i, n)| (NodeId(i), n))
    }

    pub fn links(&self) -> impl Iterator<Item = (LinkId, &Link)> {
        self.links.iter().map(|(&i, l)| (LinkId(i), l))
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn link_count(&self) -> usize {
        self.links.len()
    }

    /// The link of which `n` is a conclusion, if any.
    pub fn concluding_link(&self, n: NodeId) -> Option<LinkId> {
        self.links()
            .find(|(_, l)| l.conclusions.contains(&n))
            .map(|(i, _)| i)
    }

    /// The link (and premise slot) of which `n` is a premise, if any.
    pub fn consuming_link(&self, n: NodeId) -> Option<(LinkId, usize)> {
        for (i, l) in self.links() {
            if let Some(pos) = l.premises.iter().position(|&m| m == n) {
                return Some((i, pos));
            }
        }
        None
    }

    /// Conclusion nodes of the structure: nodes that are not a premise of
    /// any link, in ascending id order.
    pub fn conclusions(&self) -> Vec<NodeId> {
        let mut used = std::collections::BTreeSet::new();
        for (_, l) in self.links() {
            used.extend(l.premises.iter().map(|n| n.0));
        }
        self.nodes
            .keys()
            .filter(|i| !used.contains(i))
            .map(|&i| NodeId(i))
            .collect()
    }

    /// Exactly one conclusion (necessarily the positive one for the nets in
    /// this crate).
    pub fn is_closed(&self) -> bool {
        self.conclusions().len() == 1
    }

    /// The unique positive conclusion, if there is exactly one.
    pub fn positive_conclusion(&self) -> Option<NodeId> {
        let pos: Vec<_> = self
            .conclusions()
            .into_iter()
            .filter(|&n| self.node(n).polarity == Polarity::Pos)
            .collect();
        match pos.as_slice() {
            [n] => Some(*n),
            _ => None,
        }
    }

    pub fn hole_links(&self) -> Vec<LinkId> {
        self.links()
            .filter(|(_, l)| l.kind == LinkKind::Hole)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_cut_free(&self) -> bool {
        !self.links().any(|(_, l)| l.kind == LinkKind::Cut)
    }

    /// η-long: every ID link has atomic conclusions.
    pub fn is_eta_long(&self) -> bool {
        self.links().all(|(_, l)| {
            l.kind != LinkKind::Id || self.node(l.conclusions[0]).formula == ImpFormula::Atom
        })
    }

    /// Normal form contract of the rewrite system: cut-free and η-long.
    pub fn is_normal(&self) -> bool {
        self.is_cut_free() && self.is_eta_long()
    }

    /// IIMLL structure: no TENSOR_POS/PAR_NEG link and no tensor in any
    /// occurrence's abbreviated formula.
    pub fn is_iimll(&self) -> bool {
        self.links()
            .all(|(_, l)| !matches!(l.kind, LinkKind::TensorPos | LinkKind::ParNeg))
            && self.nodes().all(|(_, n)| n.formula.is_iimll())
    }

    // -----------------------------------------------------------------
    // Validation
    // -----------------------------------------------------------------

    /// Checks node/link typing invariants, polarity discipline, and formula
    /// agreement between link premises and conclusions.
    pub fn validate(&self) -> Result<(), Vec<Diagnostic>> {
        let mut diags = Vec::new();
        let mut concluded: BTreeMap<u32, u32> = BTreeMap::new();
        let mut consumed: BTreeMap<u32, u32> = BTreeMap::new();

        let diag = |link: Option<LinkId>, node: Option<NodeId>, message: String| Diagnostic {
            link,
            node,
            message,
        };

        for (lid, l) in self.links() {
            for &n in l.premises.iter().chain(&l.conclusions) {
                if self.get_node(n).is_none() {
                    diags.push(diag(Some(lid), Some(n), "dangling node reference".into()));
                }
            }
            for &n in &l.premises {
                *consumed.entry(n.0).or_insert(0) += 1;
            }
            for &n in &l.conclusions {
                *concluded.entry(n.0).or_insert(0) += 1;
            }
        }
        for (id, _) in self.nodes() {
            match concluded.get(&id.0).copied().unwrap_or(0) {
                1 => {}
                0 => diags.push(diag(None, Some(id), "node is a conclusion of no link".into())),
                k => diags.push(diag(
                    None,
                    Some(id),
                    format!("node is a conclusion of {k} links"),
                )),
            }
            if let Some(&k) = consumed.get(&id.0) {
                if k > 1 {
                    diags.push(diag(None, Some(id), format!("node is a premise of {k} links")));
                }
            }
        }

        for (lid, l) in self.links() {
            if l.premises
                .iter()
                .chain(&l.conclusions)
                .any(|&n| self.get_node(n).is_none())
            {
                continue; // already reported
            }
            let mut arity_err = |want_p: usize, want_c: usize| {
                if l.premises.len() != want_p || l.conclusions.len() != want_c {
                    diags.push(diag(
                        Some(lid),
                        None,
                        format!(
                            "{} link must have {} premises and {} conclusions",
                            l.kind.name(),
                            want_p,
                            want_c
                        ),
                    ));
                    return true;
                }
                false
            };
            match l.kind {
                LinkKind::Id | LinkKind::Cut => {
                    let (pair, is_id) = if l.kind == LinkKind::Id {
                        if arity_err(0, 2) {
                            continue;
                        }
                        ((l.conclusions[0], l.conclusions[1]), true)
                    } else {
                        if arity_err(2, 0) {
                            continue;
                        }
                        ((l.premises[0], l.premises[1]), false)
                    };
                    let (a, b) = (self.node(pair.0), self.node(pair.1));
                    let role = if is_id { "conclusions" } else { "premises" };
                    if a.polarity != Polarity::Pos || b.polarity != Polarity::Neg {
                        diags.push(diag(
                            Some(lid),
                            None,
                            format!("{} {role} must be (A+, A-) in that order", l.kind.name()),
                        ));
                    }
                    if a.formula != b.formula {
                        diags.push(diag(
                            Some(lid),
                            None,
                            format!("{} {role} carry different formulas", l.kind.name()),
                        ));
                    }
                }
                LinkKind::Hole => {
                    if arity_err(0, 1) {
                        continue;
                    }
                    if self.node(l.conclusions[0]).polarity != Polarity::Pos {
                        diags.push(diag(
                            Some(lid),
                            None,
                            "HOLE conclusion must be positive".into(),
                        ));
                    }
                }
                LinkKind::ParPos | LinkKind::TensorNeg | LinkKind::TensorPos | LinkKind::ParNeg => {
                    if arity_err(2, 1) {
                        continue;
                    }
                    let left = self.node(l.premises[0]);
                    let right = self.node(l.premises[1]);
                    let conc = self.node(l.conclusions[0]);
                    // expected: (conn, conclusion pol, left pol, right pol)
                    let (want_conn_lolli, cp, lp, rp) = match l.kind {
                        LinkKind::ParPos => (true, Polarity::Pos, Polarity::Neg, Polarity::Pos),
                        LinkKind::TensorNeg => (true, Polarity::Neg, Polarity::Pos, Polarity::Neg),
                        LinkKind::TensorPos => (false, Polarity::Pos, Polarity::Pos, Polarity::Pos),
                        LinkKind::ParNeg => (false, Polarity::Neg, Polarity::Neg, Polarity::Neg),
                        _ => unreachable!(),
                    };
                    let parts = match (&conc.formula, want_conn_lolli) {
                        (ImpFormula::Lolli(a, b), true) => Some((a, b)),
                        (ImpFormula::Tensor(a, b), false) => Some((a, b)),
                        _ => None,
                    };
                    if conc.polarity != cp {
                        diags.push(diag(
                            Some(lid),
                            None,
                            format!("{} conclusion has wrong polarity", l.kind.name()),
                        ));
                    }
                    match parts {
                        None => diags.push(diag(
                            Some(lid),
                            None,
                            format!(
                                "{} conclusion must be a {} formula",
                                l.kind.name(),
                                if want_conn_lolli { "-o" } else { "*" }
                            ),
                        )),
                        Some((a, b)) => {
                            if left.polarity != lp || right.polarity != rp {
                                diags.push(diag(
                                    Some(lid),
                                    None,
                                    format!(
                                        "{} premises have wrong polarities (left/right order?)",
                                        l.kind.name()
                                    ),
                                ));
                            } else if left.formula != **a || right.formula != **b {
                                diags.push(diag(
                                    Some(lid),
                                    None,
                                    format!(
                                        "{} premises do not match the conclusion's components",
                                        l.kind.name()
                                    ),
                                ));
                            }
                        }
                    }
                }
            }
        }

        if diags.is_empty() {
            Ok(())
        } else {
            Err(diags)
        }
    }

    // -----------------------------------------------------------------
    // Danos-Regnier criterion
    // -----------------------------------------------------------------

    /// The ⅋-links of the structure (PAR_POS and PAR_NEG), in id order.
    pub fn par_links(&self) -> Vec<LinkId> {
        self.links()
            .filter(|(_, l)| l.kind.is_par())
            .map(|(i, _)| i)
            .collect()
    }

    /// All `2^k` switching functions, as maps from ⅋-link to chosen premise
    /// slot (0 = left, 1 = right).
    pub fn switchings(&self) -> impl Iterator<Item = BTreeMap<LinkId, usize>> + '_ {
        let pars = self.par_links();
        let k = pars.len();
        assert!(k <= 26, "too many par links to enumerate switchings");
        (0u64..(1u64 << k)).map(move |bits| {
            pars.iter()
                .enumerate()
                .map(|(i, &l)| (l, ((bits >> i) & 1) as usize))
                .collect()
        })
    }

    /// Edges of the Danos-Regnier graph for one switching.  Nodes of the
    /// graph are all formula occurrences; HOLE links contribute no edge.
    pub fn dr_graph(&self, switching: &BTreeMap<LinkId, usize>) -> Vec<(NodeId, NodeId)> {
        let mut edges = Vec::new();
        for (lid, l) in self.links() {
            match l.kind {
                LinkKind::Id => edges.push((l.conclusions[0], l.conclusions[1])),
                LinkKind::Cut => edges.push((l.premises[0], l.premises[1])),
                LinkKind::TensorPos | LinkKind::TensorNeg => {
                    edges.push((l.premises[0], l.conclusions[0]));
                    edges.push((l.premises[1], l.conclusions[0]));
                }
                LinkKind::ParPos | LinkKind::ParNeg => {
                    let slot = switching.get(&lid).copied().unwrap_or(0);
                    edges.push((l.premises[slot], l.conclusions[0]));
                }
                LinkKind::Hole => {}
            }
        }
        edges
    }

    /// Exhaustive DR check: every switching graph is acyclic and connected.
    /// A connected graph is acyclic iff |E| = |V| - 1, so each switching
    /// costs one BFS plus an edge count.
    pub fn dr_check_exhaustive(&self) -> bool {
        let n = self.node_count();
        if n == 0 {
            return true;
        }
        for sw in self.switchings() {
            let edges = self.dr_graph(&sw);
            if edges.len() != n - 1 {
                return false;
            }
            let mut adj: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
            for &(a, b) in &edges {
                adj.entry(a.0).or_default().push(b.0);
                adj.entry(b.0).or_default().push(a.0);
            }
            let start = *self.nodes.keys().next().unwrap();
            let mut seen = std::collections::BTreeSet::new();
            let mut queue = std::collections::VecDeque::from([start]);
            seen.insert(start);
            while let Some(v) = queue.pop_front() {
                for &w in adj.get(&v).into_iter().flatten() {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            if seen.len() != n {
                return false;
            }
        }
        true
    }

    /// Danos' contraction criterion, equivalent to the exhaustive check but
    /// polynomial: contract unpaired edges (rejecting self-loops), then
    /// resolve any ⅋-link whose two premise endpoints have merged into one
    /// vertex distinct from its conclusion side.  The structure is a net iff
    /// everything contracts to a single vertex.
    pub fn dr_check_contract(&self) -> bool {
        let n = self.node_count();
        if n == 0 {
            return true;
        }
        let index: BTreeMap<u32, usize> = self.nodes.keys().enumerate().map(|(i, &k)| (k, i)).collect();
        let mut uf = UnionFind::new(n);
        // unpaired edges first
        for (_, l) in self.links() {
            let add = |a: NodeId, b: NodeId, uf: &mut UnionFind| -> bool {
                uf.union(index[&a.0], index[&b.0])
            };
            let ok = match l.kind {
                LinkKind::Id => add(l.conclusions[0], l.conclusions[1], &mut uf),
                LinkKind::Cut => add(l.premises[0], l.premises[1], &mut uf),
                LinkKind::TensorPos | LinkKind::TensorNeg => {
                    add(l.premises[0], l.conclusions[0], &mut uf)
                        && add(l.premises[1], l.conclusions[0], &mut uf)
                }
                _ => true,
            };
            if !ok {
                return false; // a switching-independent cycle
            }
        }
        // iterate resolving par links
        let mut pending: Vec<(usize, usize, usize)> = self
            .links()
            .filter(|(_, l)| l.kind.is_par())
            .map(|(_, l)| {
                (
                    index[&l.premises[0].0],
                    index[&l.premises[1].0],
                    index[&l.conclusions[0].0],
                )
            })
            .collect();
        loop {
            let mut progressed = false;
            let mut next = Vec::new();
            for (a, b, c) in pending {
                let (ra, rb, rc) = (uf.find(a), uf.find(b), uf.find(c));
                if ra == rc || rb == rc {
                    // a premise already reaches the conclusion side without
                    // this link: choosing that premise closes a cycle
                    return false;
                }
                if ra == rb {
                    if !uf.union(ra, rc) {
                        return false;
                    }
                    progressed = true;
                } else {
                    next.push((a, b, c));
                }
            }
            pending = next;
            if pending.is_empty() {
                break;
            }
            if !progressed {
                // unresolvable par links: some switching disconnects
                return false;
            }
        }
        uf.components() == 1
    }

    /// Copies every node and link of `other` into `self` under fresh ids and
    /// returns the node translation map.  The two parts stay disjoint until
    /// the caller wires them together.
    pub fn absorb(&mut self, other: &ProofStructure) -> BTreeMap<NodeId, NodeId> {
        let mut map = BTreeMap::new();
        for (id, n) in other.nodes() {
            map.insert(id, self.add_node(n.formula.clone(), n.polarity));
        }
        for (_, l) in other.links() {
            self.add_link(
                l.kind,
                l.premises.iter().map(|n| map[n]).collect(),
                l.conclusions.iter().map(|n| map[n]).collect(),
            );
        }
        map
    }

    /// One-pass indexes from node to concluding link and to (consuming link,
    /// premise slot).  Cheaper than repeated [`Self::concluding_link`] scans.
    pub fn indexes(
        &self,
    ) -> (
        BTreeMap<NodeId, LinkId>,
        BTreeMap<NodeId, (LinkId, usize)>,
    ) {
        let mut concluding = BTreeMap::new();
        let mut consuming = BTreeMap::new();
        for (lid, l) in self.links() {
            for &n in &l.conclusions {
                concluding.insert(n, lid);
            }
            for (slot, &n) in l.premises.iter().enumerate() {
                consuming.insert(n, (lid, slot));
            }
        }
        (concluding, consuming)
    }

    /// Renumbers nodes and links by a deterministic traversal from the
    /// conclusions (ascending id), so that structurally identical nets whose
    /// interior ids differ (e.g. two normalization strategies applied to the
    /// same net) print the same [`Self::to_text`].  Requires a connected
    /// structure to visit everything; unreachable parts are dropped.
    pub fn canonical(&self) -> ProofStructure {
        let (concluding, consuming) = self.indexes();
        let mut order: Vec<NodeId> = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        let mut queue: std::collections::VecDeque<NodeId> =
            self.conclusions().into_iter().collect();
        for &n in &queue {
            seen.insert(n);
        }
        let mut link_order: Vec<LinkId> = Vec::new();
        let mut link_seen = std::collections::BTreeSet::new();
        while let Some(v) = queue.pop_front() {
            order.push(v);
            let mut neighbours = Vec::new();
            if let Some(&lid) = concluding.get(&v) {
                if link_seen.insert(lid) {
                    link_order.push(lid);
                }
                let l = self.link(lid);
                neighbours.extend(l.premises.iter().copied());
                // an ID link's sibling conclusion
                neighbours.extend(l.conclusions.iter().copied().filter(|&c| c != v));
            }
            if let Some(&(lid, _)) = consuming.get(&v) {
                if link_seen.insert(lid) {
                    link_order.push(lid);
                }
                let l = self.link(lid);
                neighbours.extend(l.premises.iter().copied().filter(|&c| c != v));
                neighbours.extend(l.conclusions.iter().copied());
            }
            for n in neighbours {
                if seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        let renum: BTreeMap<NodeId, NodeId> = order
            .iter()
            .enumerate()
            .map(|(i, &n)| (n, NodeId(i as u32)))
            .collect();
        let mut out = ProofStructure::new();
        for &old in &order {
            let n = self.node(old);
            out.add_node(n.formula.clone(), n.polarity);
        }
        for &lid in &link_order {
            let l = self.link(lid);
            out.add_link(
                l.kind,
                l.premises.iter().map(|n| renum[n]).collect(),
                l.conclusions.iter().map(|n| renum[n]).collect(),
            );
        }
        out
    }

    /// True iff every switching graph is acyclic and connected (Theorem 1).
    /// Small structures use the exhaustive decider, large ones the
    /// contraction decider; the two agree (see the property suite).
    pub fn dr_check(&self) -> bool {
        if self.par_links().len() <= 12 {
            self.dr_check_exhaustive()
        } else {
            self.dr_check_contract()
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
    comps: usize,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
            comps: n,
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when the union would close a cycle (roots already equal).
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        self.comps -= 1;
        true
    }

    fn components(&self) -> usize {
        self.comps
    }
}

// ---------------------------------------------------------------------------
// ProofNet
// ---------------------------------------------------------------------------

/// A proof structure that has passed [`ProofStructure::validate`] and
/// [`ProofStructure::dr_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofNet {
    structure: ProofStructure,
}

impl ProofNet {
    /// Checks the structure and wraps it.
    pub fn new(structure: ProofStructure) -> Result<ProofNet, NetError> {
        structure.validate().map_err(NetError::Invalid)?;
        if !structure.dr_check() {
            return Err(NetError::NotANet);
        }
        Ok(ProofNet { structure })
    }

    /// Wraps a structure produced by a construction that guarantees the
    /// criterion; the guarantee is still asserted in debug builds.
    pub fn trusted(structure: ProofStructure) -> ProofNet {
        debug_assert!(structure.validate().is_ok(), "trusted structure invalid");
        debug_assert!(structure.dr_check(), "trusted structure fails DR");
        ProofNet { structure }
    }

    pub fn structure(&self) -> &ProofStructure {
        &self.structure
    }

    pub fn into_structure(self) -> ProofStructure {
        self.structure
    }
}

impl std::ops::Deref for ProofNet {
    type Target = ProofStructure;

    fn deref(&self) -> &ProofStructure {
        &self.structure
    }
}

// ---------------------------------------------------------------------------
// Net file format
// ---------------------------------------------------------------------------

impl ProofStructure {
    /// Canonical text format: `node <id> <formula><polarity>` lines sorted by
    /// id, then `link <KIND> premises=[...] conclusions=[...]` lines sorted
    /// by (kind, first conclusion id, first premise id).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (id, n) in self.nodes() {
            out.push_str(&format!("node {} {}\n", id.0, n.polarized()));
        }
        let mut links: Vec<&Link> = self.links().map(|(_, l)| l).collect();
        links.sort_by_key(|l| {
            (
                l.kind,
                l.conclusions.first().copied().unwrap_or(NodeId(u32::MAX)),
                l.premises.first().copied().unwrap_or(NodeId(u32::MAX)),
            )
        });
        for l in links {
            let fmt_ids = |ids: &[NodeId]| {
                ids.iter()
                    .map(|n| n.0.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            out.push_str(&format!(
                "link {} premises=[{}] conclusions=[{}]\n",
                l.kind.name(),
                fmt_ids(&l.premises),
                fmt_ids(&l.conclusions)
            ));
        }
        out
    }

    /// Parses the text format.  `#` starts a comment; blank lines ignored.
    /// The result is validated but not DR-checked.
    pub fn from_text(text: &str) -> Result<ProofStructure, NetError> {
        let mut s = ProofStructure::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| NetError::Format {
                line: lineno + 1,
                msg: msg.to_string(),
            };
            if let Some(rest) = line.strip_prefix("node ") {
                let mut parts = rest.splitn(2, ' ');
                let id: u32 = parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| err("expected node id"))?;
                let ftext = parts.next().ok_or_else(|| err("expected formula"))?;
                let pf = parse_formula(ftext.trim())
                    .map_err(|e| err(&format!("bad formula: {e}")))?;
                s.add_node_with_id(NodeId(id), pf.abb(), pf.polarity)
                    .map_err(|e| err(&e.to_string()))?;
            } else if let Some(rest) = line.strip_prefix("link ") {
                let mut parts = rest.split_whitespace();
                let kind = parts
                    .next()
                    .and_then(LinkKind::from_name)
                    .ok_or_else(|| err("unknown link kind"))?;
                let mut premises = None;
                let mut conclusions = None;
                for tok in parts {
                    let parse_ids = |body: &str| -> Result<Vec<NodeId>, NetError> {
                        if body.is_empty() {
                            return Ok(Vec::new());
                        }
                        body.split(',')
                            .map(|t| {
                                t.trim()
                                    .parse::<u32>()
                                    .map(NodeId)
                                    .map_err(|_| err("bad node id list"))
                            })
                            .collect()
                    };
                    if let Some(body) = tok
                        .strip_prefix("premises=[")
                        .and_then(|t| t.strip_suffix(']'))
                    {
                        premises = Some(parse_ids(body)?);
                    } else if let Some(body) = tok
                        .strip_prefix("conclusions=[")
                        .and_then(|t| t.strip_suffix(']'))
                    {
                        conclusions = Some(parse_ids(body)?);
                    } else {
                        return Err(err("unknown link attribute"));
                    }
                }
                s.add_link(
                    kind,
                    premises.ok_or_else(|| err("missing premises"))?,
                    conclusions.ok_or_else(|| err("missing conclusions"))?,
                );
            } else {
                return Err(err("expected 'node' or 'link'"));
            }
        }
        s.validate().map_err(NetError::Invalid)?;
        Ok(s)
    }
}

// ---------------------------------------------------------------------------
// Inductive construction
// ---------------------------------------------------------------------------

/// One step of an inductive net derivation (clauses 1-6 of the net-formation
/// rules, plus the hole axiom of extended nets).  Steps reference conclusion
/// nodes of the net under construction.
#[derive(Debug, Clone)]
pub enum Step {
    /// Clause 1: an ID link on `A` (new component with conclusions A+, A-).
    Id(ImpFormula),
    /// Extended nets: a hole axiom with positive conclusion `A`.
    Hole(ImpFormula),
    /// Clause 2: cut a positive conclusion of one component against a
    /// negative conclusion of another.
    Cut { pos: NodeId, neg: NodeId },
    /// Clause 3 (⅋⁺): both nodes must be conclusions of the same component.
    ParPos { left: NodeId, right: NodeId },
    /// Clause 5 (⊗⁻): `left` (positive) and `right` (negative) must belong
    /// to different components.
    TensorNeg { left: NodeId, right: NodeId },
    /// Clause 4 (⊗⁺): two positive conclusions of different components.
    /// Not available in IIMLL mode.
    TensorPos { left: NodeId, right: NodeId },
    /// Clause 6 (⅋⁻): two negative conclusions of the same component.
    /// Not available in IIMLL mode.
    ParNeg { left: NodeId, right: NodeId },
}

/// Runs a derivation script.  With `iimll_mode` the clauses (4) and (6) are
/// rejected.  The result passes `dr_check` by construction (asserted).
pub fn build_inductive(steps: &[Step], iimll_mode: bool) -> Result<ProofNet, NetError> {
    let mut s = ProofStructure::new();
    // component id per node; conclusions tracked implicitly via consuming links
    let mut comp: BTreeMap<u32, u32> = BTreeMap::new();
    let mut next_comp = 0u32;

    for (i, step) in steps.iter().enumerate() {
        let bad = |msg: &str| NetError::BadStep {
            step: i,
            msg: msg.to_string(),
        };
        let check_conclusion = |s: &ProofStructure,
                                    n: NodeId,
                                    pol: Polarity|
         -> Result<(), NetError> {
            let node = s.get_node(n).ok_or_else(|| bad("unknown node"))?;
            if s.consuming_link(n).is_some() {
                return Err(bad("node is already a premise of a link"));
            }
            if node.polarity != pol {
                return Err(bad("node has the wrong polarity"));
            }
            Ok(())
        };
        match step {
            Step::Id(a) => {
                let p = s.add_node(a.clone(), Polarity::Pos);
                let n = s.add_node(a.clone(), Polarity::Neg);
                s.add_link(LinkKind::Id, vec![], vec![p, n]);
                comp.insert(p.0, next_comp);
                comp.insert(n.0, next_comp);
                next_comp += 1;
            }
            Step::Hole(a) => {
                let p = s.add_node(a.clone(), Polarity::Pos);
                s.add_link(LinkKind::Hole, vec![], vec![p]);
                comp.insert(p.0, next_comp);
                next_comp += 1;
            }
            Step::Cut { pos, neg } => {
                check_conclusion(&s, *pos, Polarity::Pos)?;
                check_conclusion(&s, *neg, Polarity::Neg)?;
                if s.node(*pos).formula != s.node(*neg).formula {
                    return Err(bad("cut premises carry different formulas"));
                }
                if comp[&pos.0] == comp[&neg.0] {
                    return Err(bad("cut must join two different components"));
                }
                let (cp, cn) = (comp[&pos.0], comp[&neg.0]);
                s.add_link(LinkKind::Cut, vec![*pos, *neg], vec![]);
                for c in comp.values_mut() {
                    if *c == cn {
                        *c = cp;
                    }
                }
            }
            Step::ParPos { left, right } | Step::ParNeg { left, right } => {
                let (kind, lp, rp) = if matches!(step, Step::ParPos { .. }) {
                    (LinkKind::ParPos, Polarity::Neg, Polarity::Pos)
                } else {
                    if iimll_mode {
                        return Err(bad("PAR_NEG (clause 6) is not allowed in IIMLL mode"));
                    }
                    (LinkKind::ParNeg, Polarity::Neg, Polarity::Neg)
                };
                check_conclusion(&s, *left, lp)?;
                check_conclusion(&s, *right, rp)?;
                if comp[&left.0] != comp[&right.0] {
                    return Err(bad("premises of a par link must be in one component"));
                }
                let f = if kind == LinkKind::ParPos {
                    ImpFormula::lolli(s.node(*left).formula.clone(), s.node(*right).formula.clone())
                } else {
                    ImpFormula::tensor(s.node(*left).formula.clone(), s.node(*right).formula.clone())
                };
                let cpol = if kind == LinkKind::ParPos {
                    Polarity::Pos
                } else {
                    Polarity::Neg
                };
                let c = s.add_node(f, cpol);
                let cc = comp[&left.0];
                s.add_link(kind, vec![*left, *right], vec![c]);
                comp.insert(c.0, cc);
            }
            Step::TensorNeg { left, right } | Step::TensorPos { left, right } => {
                let (kind, lp, rp) = if matches!(step, Step::TensorNeg { .. }) {
                    (LinkKind::TensorNeg, Polarity::Pos, Polarity::Neg)
                } else {
                    if iimll_mode {
                        return Err(bad("TENSOR_POS (clause 4) is not allowed in IIMLL mode"));
                    }
                    (LinkKind::TensorPos, Polarity::Pos, Polarity::Pos)
                };
                check_conclusion(&s, *left, lp)?;
                check_conclusion(&s, *right, rp)?;
                if comp[&left.0] == comp[&right.0] {
                    return Err(bad("premises of a tensor link must be in two components"));
                }
                let f = if kind == LinkKind::TensorNeg {
                    ImpFormula::lolli(s.node(*left).formula.clone(), s.node(*right).formula.clone())
                } else {
                    ImpFormula::tensor(s.node(*left).formula.clone(), s.node(*right).formula.clone())
                };
                let cpol = if kind == LinkKind::TensorNeg {
                    Polarity::Neg
                } else {
                    Polarity::Pos
                };
                let c = s.add_node(f, cpol);
                let (cl, cr) = (comp[&left.0], comp[&right.0]);
                s.add_link(kind, vec![*left, *right], vec![c]);
                comp.insert(c.0, cl);
                for v in comp.values_mut() {
                    if *v == cr {
                        *v = cl;
                    }
                }
            }
        }
    }

    let comps: std::collections::BTreeSet<u32> = comp.values().copied().collect();
    if comps.len() > 1 {
        return Err(NetError::Other(
            "derivation leaves more than one component".into(),
        ));
    }
    s.validate().map_err(NetError::Invalid)?;
    assert!(s.dr_check(), "inductively built structure fails DR");
    Ok(ProofNet { structure: s })
}

/// The classical non-net counterexample: a ⊗-family link placed over the two
/// conclusions of a single ID link, whose unique switching graph is a
/// 3-cycle.  Realized with TENSOR_NEG, the ⊗-link typable over an ID's
/// (p+, p-) conclusion pair (a TENSOR_POS there would be a polarity clash
/// caught already by `validate`, never reaching the criterion).
pub fn example_tensor_over_id() -> ProofStructure {
    let mut s = ProofStructure::new();
    let p = s.add_node(ImpFormula::Atom, Polarity::Pos);
    let n = s.add_node(ImpFormula::Atom, Polarity::Neg);
    s.add_link(LinkKind::Id, vec![], vec![p, n]);
    let c = s.add_node(
        ImpFormula::lolli(ImpFormula::Atom, ImpFormula::Atom),
        Polarity::Neg,
    );
    s.add_link(LinkKind::TensorNeg, vec![p, n], vec![c]);
    s
}

/// The closed net of `(p -o p)+`: a PAR_POS over the two conclusions of one
/// ID link.  Both switchings yield a 3-node tree.
pub fn example_par_over_id() -> ProofStructure {
    let mut s = ProofStructure::new();
    let p = s.add_node(ImpFormula::Atom, Polarity::Pos);
    let n = s.add_node(ImpFormula::Atom, Polarity::Neg);
    s.add_link(LinkKind::Id, vec![], vec![p, n]);
    let c = s.add_node(
        ImpFormula::lolli(ImpFormula::Atom, ImpFormula::Atom),
        Polarity::Pos,
    );
    s.add_link(LinkKind::ParPos, vec![n, p], vec![c]);
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_imp;

    fn atom() -> ImpFormula {
        ImpFormula::Atom
    }

    fn tensor_over_id() -> ProofStructure {
        example_tensor_over_id()
    }

    fn par_over_id() -> ProofStructure {
        example_par_over_id()
    }

    #[test]
    fn single_id_is_a_net() {
        let mut s = ProofStructure::new();
        let p = s.add_node(atom(), Polarity::Pos);
        let n = s.add_node(atom(), Polarity::Neg);
        s.add_link(LinkKind::Id, vec![], vec![p, n]);
        assert!(s.validate().is_ok());
        assert!(s.dr_check());
        assert!(!s.is_closed()); // two conclusions
    }

    #[test]
    fn tensor_over_id_fails_dr() {
        let s = tensor_over_id();
        assert!(s.validate().is_ok());
        assert!(!s.dr_check_exhaustive());
        assert!(!s.dr_check_contract());
    }

    #[test]
    fn par_over_id_passes_dr() {
        let s = par_over_id();
        assert!(s.validate().is_ok());
        assert!(s.dr_check_exhaustive());
        assert!(s.dr_check_contract());
        assert!(s.is_closed());
    }

    #[test]
    fn validate_rejects_mismatched_id() {
        let mut s = ProofStructure::new();
        let p = s.add_node(atom(), Polarity::Pos);
        let n = s.add_node(ImpFormula::lolli(atom(), atom()), Polarity::Neg);
        s.add_link(LinkKind::Id, vec![], vec![p, n]);
        assert!(s.validate().is_err());
    }

    #[test]
    fn validate_rejects_swapped_tensor_neg() {
        // TENSOR_NEG premises must be (A+ left, B- right)
        let mut s = ProofStructure::new();
        let p = s.add_node(atom(), Polarity::Pos);
        let n = s.add_node(atom(), Polarity::Neg);
        s.add_link(LinkKind::Id, vec![], vec![p, n]);
        let c = s.add_node(ImpFormula::lolli(atom(), atom()), Polarity::Neg);
        s.add_link(LinkKind::TensorNeg, vec![n, p], vec![c]);
        assert!(s.validate().is_err());
    }

    #[test]
    fn build_inductive_id_then_parpos() {
        let net = build_inductive(
            &[Step::Id(atom()), Step::ParPos {
                left: NodeId(1),
                right: NodeId(0),
            }],
            true,
        )
        .unwrap();
        assert!(net.is_closed());
        let conc = net.positive_conclusion().unwrap();
        assert_eq!(net.node(conc).formula, parse_imp("p -o p").unwrap().0);
    }

    #[test]
    fn build_inductive_rejects_tensor_pos_in_iimll_mode() {
        let r = build_inductive(
            &[
                Step::Id(atom()),
                Step::Id(atom()),
                Step::TensorPos {
                    left: NodeId(0),
                    right: NodeId(2),
                },
            ],
            true,
        );
        assert!(r.is_err());
    }

    #[test]
    fn format_roundtrip() {
        let s = par_over_id();
        let text = s.to_text();
        let s2 = ProofStructure::from_text(&text).unwrap();
        assert_eq!(s2.to_text(), text);
        assert_eq!(s2.node_count(), s.node_count());
        assert!(s2.dr_check());
    }

    #[test]
    fn switching_count() {
        let s = par_over_id();
        assert_eq!(s.switchings().count(), 2);
        let mut s2 = ProofStructure::new();
        let p = s2.add_node(atom(), Polarity::Pos);
        let n = s2.add_node(atom(), Polarity::Neg);
        s2.add_link(LinkKind::Id, vec![], vec![p, n]);
        assert_eq!(s2.switchings().count(), 1); // no par links: the empty switching
    }
}
