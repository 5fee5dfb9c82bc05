//! Structural analysis of normal nets: main paths, direct subproof nets,
//! depth, the measure w.r.t. linear implication, and the equality on normal
//! nets.
//!
//! A cut-free η-long net is a syntax forest: every occurrence is a node of
//! the abstract syntax tree of one of the net's conclusions (the positive
//! conclusion `A+` first, then the negative conclusions `B1-, ..., Bn-`),
//! with each compound occurrence linked to its two subtrees and each atom
//! paired with another atom by an ID link.  Main paths are the alternating
//! occurrence/token sequences generated by the seven closure rules over this
//! forest:
//!
//! 1. the positive conclusion `A+` starts a sequence;
//! 2. `(A1 ⊗ A2)+` continues with `L` to `A1+` and with `R` to `A2+`;
//! 3. `(A1 ⅋ A2)+` (i.e. `(A1 ⊸ A2)+`) continues with `R` to `A2+`;
//! 4. `p+` continues with `ID` to its partner `p-`;
//! 5. a right premise of a `⊗-`-link continues with `R` to the conclusion;
//! 6. a left premise of a `⅋-`-link continues with `L` to the conclusion;
//! 7. a right premise of a `⅋-`-link continues with `R` to the conclusion.
//!
//! A maximal such sequence ends at a *head*: a negative occurrence that is
//! a premise of neither a `⊗-`- nor a `⅋-`-link.  Since branching happens
//! only at positive tensors, paths are generated deterministically
//! (left branch first), which fixes a canonical path order shared by any
//! two nets with the same positive conclusion.
//!
//! A *direct subproof net* is a maximal subnet whose positive conclusion is
//! the left premise of a `⊗-`-link lying on a main path; maximal subnets
//! ("empires") are computed by the usual closure rules: downward closure
//! under subtrees and ID partners, upward closure through ⊗-links from any
//! non-door premise, and upward closure through ⅋-links once both premises
//! are inside.

use std::collections::BTreeSet;
use std::collections::BTreeMap;
use std::fmt;

use crate::formula::{ImpFormula, Polarity};
use crate::net::{LinkId, LinkKind, NetError, NodeId, ProofNet, ProofStructure};

// ---------------------------------------------------------------------------
// Forest addresses
// ---------------------------------------------------------------------------

/// A step token of a main path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Token {
    L,
    R,
    Id,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Token::L => "L",
            Token::R => "R",
            Token::Id => "ID",
        })
    }
}

/// The position of an occurrence in the syntax forest of the conclusions:
/// which conclusion tree it belongs to (`root` 0 is the positive
/// conclusion) and the left/right path from that root.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Addr {
    pub root: usize,
    /// A string over `L`/`R`, outermost step first.
    pub steps: String,
}

impl fmt::Display for Addr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            write!(f, "{}", self.root)
        } else {
            write!(f, "{}.{}", self.root, self.steps)
        }
    }
}

/// The syntax forest of a normal net: conclusion roots, the address of
/// every occurrence, and the concluding/consuming link indexes.
pub struct Forest {
    pub roots: Vec<NodeId>,
    pub addr: BTreeMap<NodeId, Addr>,
    concluding: BTreeMap<NodeId, LinkId>,
    consuming: BTreeMap<NodeId, (LinkId, usize)>,
}

impl Forest {
    /// Builds the forest of a cut-free, η-long, hole-free structure.
    pub fn build(s: &ProofStructure) -> Result<Forest, NetError> {
        if !s.is_normal() || !s.hole_links().is_empty() {
            return Err(NetError::Other(
                "structure analysis requires a cut-free η-long net without holes".into(),
            ));
        }
        let (concluding, consuming) = s.indexes();
        let pos = s
            .positive_conclusion()
            .ok_or_else(|| NetError::Other("net has no positive conclusion".into()))?;
        let mut roots = vec![pos];
        roots.extend(
            s.conclusions()
                .into_iter()
                .filter(|&n| s.node(n).polarity == Polarity::Neg),
        );
        let mut addr = BTreeMap::new();
        for (i, &r) in roots.iter().enumerate() {
            let mut stack = vec![(r, String::new())];
            while let Some((n, steps)) = stack.pop() {
                addr.insert(n, Addr { root: i, steps: steps.clone() });
                let l = s.link(concluding[&n]);
                if matches!(
                    l.kind,
                    LinkKind::ParPos | LinkKind::TensorNeg | LinkKind::TensorPos | LinkKind::ParNeg
                ) {
                    stack.push((l.premises[0], format!("{steps}L")));
                    stack.push((l.premises[1], format!("{steps}R")));
                }
            }
        }
        if addr.len() != s.node_count() {
            return Err(NetError::Other(
                "net has occurrences outside the conclusion forest".into(),
            ));
        }
        Ok(Forest {
            roots,
            addr,
            concluding,
            consuming,
        })
    }

    pub fn addr(&self, n: NodeId) -> &Addr {
        &self.addr[&n]
    }
}

// ---------------------------------------------------------------------------
// Main paths
// ---------------------------------------------------------------------------

/// An alternating occurrence/token sequence from the positive conclusion to
/// a head; `nodes.len() == tokens.len() + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MainPath {
    pub nodes: Vec<NodeId>,
    pub tokens: Vec<Token>,
}

impl MainPath {
    /// The final (negative) occurrence of the path.
    pub fn head(&self) -> NodeId {
        *self.nodes.last().expect("a main path is nonempty")
    }

    /// Renders the path as `occ[addr] TOK occ[addr] ...`.
    pub fn render(&self, s: &ProofStructure, f: &Forest) -> String {
        let occ = |n: NodeId| {
            let node = s.node(n);
            let sign = match node.polarity {
                Polarity::Pos => '+',
                Polarity::Neg => '-',
            };
            let formula = if node.formula == ImpFormula::Atom {
                format!("{}", node.formula)
            } else {
                format!("({})", node.formula)
            };
            format!("{}{}[{}]", formula, sign, f.addr(n))
        };
        let mut out = occ(self.nodes[0]);
        for (t, &n) in self.tokens.iter().zip(&self.nodes[1..]) {
            out.push_str(&format!(" {} {}", t, occ(n)));
        }
        out
    }
}

fn gen_paths(
    s: &ProofStructure,
    f: &Forest,
    cur: NodeId,
    mut nodes: Vec<NodeId>,
    mut tokens: Vec<Token>,
    out: &mut Vec<MainPath>,
) {
    nodes.push(cur);
    match &s.node(cur).formula {
        ImpFormula::Tensor(..) => {
            let l = s.link(f.concluding[&cur]).clone();
            let mut left_tokens = tokens.clone();
            left_tokens.push(Token::L);
            gen_paths(s, f, l.premises[0], nodes.clone(), left_tokens, out);
            tokens.push(Token::R);
            gen_paths(s, f, l.premises[1], nodes, tokens, out);
        }
        ImpFormula::Lolli(..) => {
            let l = s.link(f.concluding[&cur]);
            tokens.push(Token::R);
            gen_paths(s, f, l.premises[1], nodes, tokens, out);
        }
        ImpFormula::Atom => {
            let l = s.link(f.concluding[&cur]);
            let partner = if l.conclusions[0] == cur {
                l.conclusions[1]
            } else {
                l.conclusions[0]
            };
            tokens.push(Token::Id);
            let mut m = partner;
            loop {
                nodes.push(m);
                match f.consuming.get(&m) {
                    None => break,
                    Some(&(lid, slot)) => {
                        let cl = s.link(lid);
                        match cl.kind {
                            LinkKind::ParPos => break,
                            LinkKind::TensorNeg => {
                                tokens.push(Token::R);
                                m = cl.conclusions[0];
                            }
                            LinkKind::ParNeg => {
                                tokens.push(if slot == 0 { Token::L } else { Token::R });
                                m = cl.conclusions[0];
                            }
                            _ => unreachable!("normal nets have no CUT or HOLE consumers"),
                        }
                    }
                }
            }
            out.push(MainPath { nodes, tokens });
        }
    }
}

fn main_paths_of(s: &ProofStructure, f: &Forest) -> Vec<MainPath> {
    let mut out = Vec::new();
    gen_paths(s, f, f.roots[0], Vec::new(), Vec::new(), &mut out);
    out
}

/// The main paths of a normal net, in canonical (left-branch-first) order.
pub fn main_paths(net: &ProofNet) -> Result<Vec<MainPath>, NetError> {
    let f = Forest::build(net.structure())?;
    Ok(main_paths_of(net.structure(), &f))
}

/// One rendered line per main path (`occ[addr] TOK occ[addr] ...`).
pub fn dump_paths(net: &ProofNet) -> Result<Vec<String>, NetError> {
    let s = net.structure();
    let f = Forest::build(s)?;
    Ok(main_paths_of(s, &f)
        .iter()
        .map(|p| p.render(s, &f))
        .collect())
}

// ---------------------------------------------------------------------------
// Direct subproof nets
// ---------------------------------------------------------------------------

/// The maximal subnet ("empire") whose positive conclusion is `door`.
fn empire(s: &ProofStructure, f: &Forest, door: NodeId) -> BTreeSet<NodeId> {
    let mut set: BTreeSet<NodeId> = BTreeSet::new();
    let mut work = vec![door];
    set.insert(door);
    while let Some(n) = work.pop() {
        let add = |x: NodeId, set: &mut BTreeSet<NodeId>, work: &mut Vec<NodeId>| {
            if set.insert(x) {
                work.push(x);
            }
        };
        let l = s.link(f.concluding[&n]);
        for &p in &l.premises {
            add(p, &mut set, &mut work);
        }
        if l.kind == LinkKind::Id {
            for &c in &l.conclusions {
                add(c, &mut set, &mut work);
            }
        }
        if n != door {
            if let Some(&(lid, slot)) = f.consuming.get(&n) {
                let cl = s.link(lid);
                match cl.kind {
                    LinkKind::TensorNeg | LinkKind::TensorPos => {
                        add(cl.conclusions[0], &mut set, &mut work);
                    }
                    LinkKind::ParPos | LinkKind::ParNeg => {
                        if set.contains(&cl.premises[1 - slot]) {
                            add(cl.conclusions[0], &mut set, &mut work);
                        }
                    }
                    _ => unreachable!("normal nets have no CUT or HOLE consumers"),
                }
            }
        }
    }
    set
}

/// Copies the sub-structure induced by `nodes`, preserving node ids.
fn extract(s: &ProofStructure, nodes: &BTreeSet<NodeId>) -> ProofStructure {
    let mut out = ProofStructure::new();
    for &n in nodes {
        let node = s.node(n);
        out.add_node_with_id(n, node.formula.clone(), node.polarity)
            .expect("fresh structure has no duplicate ids");
    }
    for (_, l) in s.links() {
        let inside = l
            .premises
            .iter()
            .chain(&l.conclusions)
            .all(|n| nodes.contains(n));
        if inside && !l.conclusions.is_empty() {
            out.add_link(l.kind, l.premises.clone(), l.conclusions.clone());
        }
    }
    out
}

struct RawSubnet {
    link: LinkId,
    door: NodeId,
    nodes: BTreeSet<NodeId>,
    structure: ProofStructure,
}

fn direct_subnets_of(s: &ProofStructure, f: &Forest, paths: &[MainPath]) -> Vec<RawSubnet> {
    let mut links = BTreeSet::new();
    for p in paths {
        let idx = p
            .tokens
            .iter()
            .position(|&t| t == Token::Id)
            .expect("every main path crosses an ID link");
        for i in idx + 1..p.tokens.len() {
            let (lid, _) = f.consuming[&p.nodes[i]];
            if s.link(lid).kind == LinkKind::TensorNeg {
                links.insert(lid);
            }
        }
    }
    links
        .into_iter()
        .map(|lid| {
            let door = s.link(lid).premises[0];
            let nodes = empire(s, f, door);
            let structure = extract(s, &nodes);
            RawSubnet {
                link: lid,
                door,
                nodes,
                structure,
            }
        })
        .collect()
}

/// A direct subproof net: the maximal subnet whose positive conclusion is
/// the left premise of a `⊗-`-link on a main path.
pub struct DirectSubnet {
    /// The `TENSOR_NEG` link whose left premise is the subnet's conclusion.
    pub link: LinkId,
    /// The subnet's positive conclusion (a node of the ambient net).
    pub conclusion: NodeId,
    /// All ambient nodes belonging to the subnet.
    pub nodes: BTreeSet<NodeId>,
    /// The subnet itself (ambient node ids preserved).
    pub net: ProofNet,
}

/// The direct subproof nets of a normal net, ordered by `⊗-`-link id.
pub fn direct_subnets(net: &ProofNet) -> Result<Vec<DirectSubnet>, NetError> {
    let s = net.structure();
    let f = Forest::build(s)?;
    let paths = main_paths_of(s, &f);
    direct_subnets_of(s, &f, &paths)
        .into_iter()
        .map(|raw| {
            Ok(DirectSubnet {
                link: raw.link,
                conclusion: raw.door,
                nodes: raw.nodes,
                net: ProofNet::new(raw.structure)?,
            })
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Depth and the measure w.r.t. linear implication
// ---------------------------------------------------------------------------

/// The depth of a normal IIMLL net together with the depth of each of its
/// positive occurrences (occurrence depth = `depth(Θ) - depth(Θ') + 1`
/// where `Θ'` is the least direct subproof net, recursively, containing the
/// occurrence).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthInfo {
    pub depth: u32,
    pub occ_depth: BTreeMap<NodeId, u32>,
}

fn depth_info_rec(s: &ProofStructure) -> Result<DepthInfo, NetError> {
    let f = Forest::build(s)?;
    let paths = main_paths_of(s, &f);
    let subs = direct_subnets_of(s, &f, &paths);
    let mut infos = Vec::new();
    for sub in &subs {
        infos.push(depth_info_rec(&sub.structure)?);
    }
    let depth = 1 + infos.iter().map(|i| i.depth).max().unwrap_or(0);
    let mut occ_depth = BTreeMap::new();
    for info in &infos {
        for (&n, &d) in &info.occ_depth {
            occ_depth.insert(n, depth - info.depth + d);
        }
    }
    for (id, node) in s.nodes() {
        if node.polarity == Polarity::Pos {
            occ_depth.entry(id).or_insert(1);
        }
    }
    Ok(DepthInfo { depth, occ_depth })
}

/// Depth and per-occurrence depths of a normal IIMLL net.
pub fn depth_info(net: &ProofNet) -> Result<DepthInfo, NetError> {
    if !net.structure().is_iimll() {
        return Err(NetError::Other("depth is defined on IIMLL nets only".into()));
    }
    depth_info_rec(net.structure())
}

/// The depth of a normal IIMLL net.
pub fn depth(net: &ProofNet) -> Result<u32, NetError> {
    Ok(depth_info(net)?.depth)
}

/// The depth of the positive occurrence `occ`.
pub fn depth_of_occurrence(net: &ProofNet, occ: NodeId) -> Result<u32, NetError> {
    depth_info(net)?
        .occ_depth
        .get(&occ)
        .copied()
        .ok_or_else(|| NetError::Other(format!("node {} is not a positive occurrence", occ.0)))
}

/// The measure w.r.t. linear implication: the sum of the depths of all
/// positive occurrences.
pub fn measure_lolli(net: &ProofNet) -> Result<u64, NetError> {
    Ok(depth_info(net)?
        .occ_depth
        .values()
        .map(|&d| u64::from(d))
        .sum())
}

// ---------------------------------------------------------------------------
// Equality on normal nets
// ---------------------------------------------------------------------------

/// An incrementally-built bijection between the negative conclusion roots
/// of two nets (the "bijective replacement of free variables").
#[derive(Default)]
struct Matcher {
    fwd: BTreeMap<usize, usize>,
    bwd: BTreeMap<usize, usize>,
}

impl Matcher {
    fn align(&mut self, a: usize, b: usize) -> bool {
        match (self.fwd.get(&a), self.bwd.get(&b)) {
            (None, None) => {
                self.fwd.insert(a, b);
                self.bwd.insert(b, a);
                true
            }
            (Some(&x), Some(&y)) => x == b && y == a,
            _ => false,
        }
    }

    /// Maps a b-side address into a-side coordinates, if already aligned.
    fn normalize(&self, addr: &Addr) -> Option<Addr> {
        if addr.root == 0 {
            Some(addr.clone())
        } else {
            self.bwd.get(&addr.root).map(|&r| Addr {
                root: r,
                steps: addr.steps.clone(),
            })
        }
    }
}

struct Side<'a> {
    s: &'a ProofStructure,
    f: &'a Forest,
}

fn addr_match(m: &mut Matcher, a: &Side, b: &Side, na: NodeId, nb: NodeId) -> bool {
    let aa = a.f.addr(na);
    let ab = b.f.addr(nb);
    if aa.steps != ab.steps || (aa.root == 0) != (ab.root == 0) {
        return false;
    }
    if aa.root == 0 {
        return true;
    }
    m.align(aa.root, ab.root)
        && a.s.node(a.f.roots[aa.root]).formula == b.s.node(b.f.roots[ab.root]).formula
}

fn is_parpos_premise(side: &Side, n: NodeId) -> bool {
    side.f
        .consuming
        .get(&n)
        .is_some_and(|&(lid, _)| side.s.link(lid).kind == LinkKind::ParPos)
}

fn eq_nets(
    top_a: &Side,
    top_b: &Side,
    a: &Side,
    b: &Side,
    m: &mut Matcher,
) -> Result<bool, NetError> {
    let pa = main_paths_of(a.s, a.f);
    let pb = main_paths_of(b.s, b.f);
    if pa.len() != pb.len() {
        return Ok(false);
    }
    // clause 1: the canonical path orders must agree pointwise, giving the
    // identity bijection on main paths.  Occurrences are compared by their
    // address in the outermost forest (subnet node ids are ambient node
    // ids), so bound occurrences keep their binder identity across the
    // recursion; negative conclusion roots of the outermost nets are
    // identified up to one consistent renaming
    for (x, y) in pa.iter().zip(&pb) {
        if x.tokens != y.tokens {
            return Ok(false);
        }
        for (&na, &nb) in x.nodes.iter().zip(&y.nodes) {
            if !addr_match(m, top_a, top_b, na, nb) {
                return Ok(false);
            }
        }
        // clause 2: corresponding heads are premises of ⅋+-links at the
        // same position, or both are not (the position itself is already
        // fixed by clause 1)
        if is_parpos_premise(a, x.head()) != is_parpos_premise(b, y.head()) {
            return Ok(false);
        }
    }
    // clauses 3 and 4: direct subproof nets correspond by the position of
    // their ⊗--link and are recursively equal; their heads sit on ⅋+-links
    // at the same ambient positions
    let da = direct_subnets_of(a.s, a.f, &pa);
    let db = direct_subnets_of(b.s, b.f, &pb);
    if da.len() != db.len() {
        return Ok(false);
    }
    let mut ka: Vec<(Addr, &RawSubnet)> = da
        .iter()
        .map(|r| (top_a.f.addr(a.s.link(r.link).conclusions[0]).clone(), r))
        .collect();
    let mut kb: Vec<(Addr, &RawSubnet)> = Vec::new();
    for r in &db {
        match m.normalize(top_b.f.addr(b.s.link(r.link).conclusions[0])) {
            Some(addr) => kb.push((addr, r)),
            None => return Ok(false),
        }
    }
    ka.sort_by(|x, y| x.0.cmp(&y.0));
    kb.sort_by(|x, y| x.0.cmp(&y.0));
    for ((addr_a, sub_a), (addr_b, sub_b)) in ka.iter().zip(&kb) {
        if addr_a != addr_b {
            return Ok(false);
        }
        let fa = Forest::build(&sub_a.structure)?;
        let fb = Forest::build(&sub_b.structure)?;
        let sa = Side {
            s: &sub_a.structure,
            f: &fa,
        };
        let sb = Side {
            s: &sub_b.structure,
            f: &fb,
        };
        if sa.s.node(sub_a.door).formula != sb.s.node(sub_b.door).formula {
            return Ok(false);
        }
        // clause 3: recursive equality
        if !eq_nets(top_a, top_b, &sa, &sb, m)? {
            return Ok(false);
        }
        // clause 4: corresponding subnet heads occupy the same ambient
        // position and are premises of ⅋+-links there, or both are not
        let qa = main_paths_of(sa.s, sa.f);
        let qb = main_paths_of(sb.s, sb.f);
        for (x, y) in qa.iter().zip(&qb) {
            let (ha, hb) = (x.head(), y.head());
            if !addr_match(m, top_a, top_b, ha, hb) {
                return Ok(false);
            }
            if is_parpos_premise(a, ha) != is_parpos_premise(b, hb) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The equality on normal nets: identical main-path sets (up to a bijective
/// renaming of the negative conclusions), matched `⅋+`-premise heads, and
/// recursively equal direct subproof nets with matched head positions.
/// Errors if either net is not normal or the positive conclusions differ.
pub fn equal(a: &ProofNet, b: &ProofNet) -> Result<bool, NetError> {
    let fa = Forest::build(a.structure())?;
    let fb = Forest::build(b.structure())?;
    let (na, nb) = (fa.roots[0], fb.roots[0]);
    if a.node(na).formula != b.node(nb).formula {
        return Err(NetError::Other(format!(
            "positive conclusions differ: {} vs {}",
            a.node(na).formula,
            b.node(nb).formula
        )));
    }
    let sa = Side {
        s: a.structure(),
        f: &fa,
    };
    let sb = Side {
        s: b.structure(),
        f: &fb,
    };
    let mut m = Matcher::default();
    eq_nets(&sa, &sb, &sa, &sb, &mut m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_imp;
    use crate::lambda::{
        assign_term, boolean_net, boolean_type, enumerate_normal, term_to_net, Term,
    };
    use crate::net::example_par_over_id;

    fn imp(s: &str) -> ImpFormula {
        parse_imp(s).unwrap().0
    }

    fn identity_net() -> ProofNet {
        ProofNet::new(example_par_over_id()).unwrap()
    }

    fn atomic_id_net() -> ProofNet {
        let mut s = ProofStructure::new();
        let p = s.add_node(ImpFormula::Atom, Polarity::Pos);
        let n = s.add_node(ImpFormula::Atom, Polarity::Neg);
        s.add_link(LinkKind::Id, vec![], vec![p, n]);
        ProofNet::new(s).unwrap()
    }

    /// The net of §3's running example: the closed net of
    /// `p ⊸ (p⊗p) ⊸ ((p ⊸ p⊗p) ⊗ (p⊗p))` reading, as a term,
    /// `λx.λw. let (a,b) = w in (λy.(y,b), (a,x))`.
    fn example_net_1() -> ProofNet {
        let p = ImpFormula::Atom;
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
                        Term::lam(4, p.clone(), Term::pair(Term::var(4), Term::var(3))),
                        Term::pair(Term::var(2), Term::var(0)),
                    )),
                },
            ),
        );
        term_to_net(&t, &imp("p -o ((p * p) -o ((p -o (p * p)) * (p * p)))")).unwrap()
    }

    /// The other net of that conclusion (§3's Θ₂): the pair components of
    /// the let are consumed the other way around.
    fn example_net_2() -> ProofNet {
        let p = ImpFormula::Atom;
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
                        Term::lam(4, p.clone(), Term::pair(Term::var(4), Term::var(2))),
                        Term::pair(Term::var(3), Term::var(0)),
                    )),
                },
            ),
        );
        term_to_net(&t, &imp("p -o ((p * p) -o ((p -o (p * p)) * (p * p)))")).unwrap()
    }

    #[test]
    fn identity_net_single_main_path() {
        let net = identity_net();
        let paths = main_paths(&net).unwrap();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].tokens, vec![Token::R, Token::Id]);
        let f = Forest::build(net.structure()).unwrap();
        let addrs: Vec<String> = paths[0]
            .nodes
            .iter()
            .map(|&n| f.addr(n).to_string())
            .collect();
        assert_eq!(addrs, vec!["0", "0.R", "0.L"]);
        // the head is the λ-bound variable occurrence
        assert!(is_parpos_premise(
            &Side {
                s: net.structure(),
                f: &f
            },
            paths[0].head()
        ));
        let dumped = dump_paths(&net).unwrap();
        assert_eq!(dumped.len(), 1);
        assert!(dumped[0].contains("[0] R"), "got {}", dumped[0]);
    }

    #[test]
    fn section3_example_has_four_main_paths() {
        let net = example_net_1();
        let paths = main_paths(&net).unwrap();
        let tokens: Vec<&[Token]> = paths.iter().map(|p| p.tokens.as_slice()).collect();
        use Token::*;
        assert_eq!(
            tokens,
            vec![
                &[R, R, L, R, L, Id][..],
                &[R, R, L, R, R, Id, R][..],
                &[R, R, R, L, Id, L][..],
                &[R, R, R, R, Id][..],
            ]
        );
        // paths 2 and 3 share their head, the let-bound (p⊗p)- occurrence
        assert_eq!(paths[1].head(), paths[2].head());
        assert!(matches!(
            net.node(paths[2].head()).formula,
            ImpFormula::Tensor(..)
        ));
        // §3: the example net has no direct subproof net
        assert!(direct_subnets(&net).unwrap().is_empty());
    }

    #[test]
    fn section3_example_nets_unequal() {
        let a = example_net_1();
        let b = example_net_2();
        assert!(equal(&a, &a).unwrap());
        assert!(equal(&b, &b).unwrap());
        assert!(!equal(&a, &b).unwrap());
        // Θ₂ has no path matching Θ₁'s third path R R R L ID L
        let pb = main_paths(&b).unwrap();
        use Token::*;
        assert!(pb.iter().all(|p| p.tokens != vec![R, R, R, L, Id, L]));
        // conclusion mismatch is an error, not inequality
        assert!(equal(&a, &identity_net()).is_err());
    }

    #[test]
    fn equality_sees_binders_through_nested_subnets() {
        // λf λg λh λx λy. f (g x) (h y)  vs  λf λg λh λx λy. f (g y) (h x):
        // the nets differ only in which λ-binder the two innermost axioms
        // reach, two subnet levels below the top — the bound occurrences
        // must keep their ambient identity through the recursion
        let ty = imp("(p -o p -o p) -o (p -o p) -o (p -o p) -o p -o p -o p");
        let make = |first: u32, second: u32| {
            let t = Term::lam(
                0,
                imp("p -o p -o p"),
                Term::lam(
                    1,
                    imp("p -o p"),
                    Term::lam(
                        2,
                        imp("p -o p"),
                        Term::lam(
                            3,
                            ImpFormula::Atom,
                            Term::lam(
                                4,
                                ImpFormula::Atom,
                                Term::spine(
                                    0,
                                    vec![
                                        Term::app(Term::var(1), Term::var(first)),
                                        Term::app(Term::var(2), Term::var(second)),
                                    ],
                                ),
                            ),
                        ),
                    ),
                ),
            );
            term_to_net(&t, &ty).unwrap()
        };
        let a = make(3, 4);
        let b = make(4, 3);
        assert!(equal(&a, &a).unwrap());
        assert!(equal(&b, &b).unwrap());
        assert!(!equal(&a, &b).unwrap());
    }

    #[test]
    fn direct_subnet_of_second_order_application() {
        // λg. g (λy.y) : ((p ⊸ p) ⊸ p) ⊸ p
        let t = Term::lam(
            0,
            imp("(p -o p) -o p"),
            Term::app(Term::var(0), Term::lam(1, ImpFormula::Atom, Term::var(1))),
        );
        let net = term_to_net(&t, &imp("((p -o p) -o p) -o p")).unwrap();
        let subs = direct_subnets(&net).unwrap();
        assert_eq!(subs.len(), 1);
        assert_eq!(
            subs[0].net.structure().canonical().to_text(),
            identity_net().structure().canonical().to_text()
        );
        assert_eq!(depth(&net).unwrap(), 2);
    }

    #[test]
    fn depth_and_measure_examples() {
        assert_eq!(depth(&identity_net()).unwrap(), 1);
        assert_eq!(measure_lolli(&identity_net()).unwrap(), 2);
        assert_eq!(depth(&atomic_id_net()).unwrap(), 1);
        assert_eq!(measure_lolli(&atomic_id_net()).unwrap(), 1);
        // depth is IIMLL-only
        assert!(depth(&example_net_1()).is_err());
    }

    #[test]
    fn boolean_nets_unequal_with_nested_depth() {
        let zero = boolean_net(false);
        let one = boolean_net(true);
        assert!(!equal(&zero, &one).unwrap());
        assert!(equal(&zero, &zero).unwrap());
        assert_eq!(main_paths(&zero).unwrap().len(), 1);
        // 0̲ = λx.λf.λg. g(f x): the argument of g is the net of f x (with
        // f and x free), itself of depth 2, so the whole net has depth 3
        assert_eq!(depth(&zero).unwrap(), 3);
        assert_eq!(depth(&one).unwrap(), 3);
        assert_eq!(measure_lolli(&zero).unwrap(), 9);
        // per-occurrence depths: conclusion at 1, f's argument at 3
        let info = depth_info(&zero).unwrap();
        let f = Forest::build(zero.structure()).unwrap();
        assert_eq!(info.occ_depth[&f.roots[0]], 1);
        assert_eq!(*info.occ_depth.values().max().unwrap(), 3);
    }

    #[test]
    fn cross_oracle_on_boolean_type() {
        let nets = enumerate_normal(&boolean_type()).unwrap();
        assert_eq!(nets.len(), 2);
        for x in &nets {
            assert_eq!(main_paths(x).unwrap().len(), 1);
        }
        for (i, x) in nets.iter().enumerate() {
            for (j, y) in nets.iter().enumerate() {
                let tx = assign_term(x).unwrap();
                let ty = assign_term(y).unwrap();
                assert_eq!(equal(x, y).unwrap(), tx.alpha_eq(&ty), "pair {i},{j}");
                assert_eq!(equal(x, y).unwrap(), i == j);
            }
        }
    }

    #[test]
    fn cross_oracle_on_twentyfold_type() {
        // the 20 nets of B ⊸ B are pairwise unequal, and the net equality
        // agrees with α-equivalence of the assigned terms on every pair
        let ty = ImpFormula::lolli(boolean_type(), boolean_type());
        let nets = enumerate_normal(&ty).unwrap();
        assert_eq!(nets.len(), 20);
        let terms: Vec<Term> = nets.iter().map(|n| assign_term(n).unwrap()).collect();
        for i in 0..nets.len() {
            assert_eq!(main_paths(&nets[i]).unwrap().len(), 1);
            for j in i..nets.len() {
                let e = equal(&nets[i], &nets[j]).unwrap();
                assert_eq!(e, terms[i].alpha_eq(&terms[j]), "pair {i},{j}");
                assert_eq!(e, i == j, "pair {i},{j}");
            }
        }
    }
}
