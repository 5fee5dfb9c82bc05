//! The constructive separation pipeline (weak typed Böhm theorem).
//!
//! Given two distinct closed normal nets of the same conclusion, the
//! pipeline synthesizes a one-hole context that maps their `B`-instantiated
//! versions to the two boolean nets `0̲` and `1̲`:
//!
//! 1. [`to_simple`] / [`simple_to_iimll`] (§6) reduce an arbitrary IMLL
//!    conclusion to a *simple* one and then to an IIMLL conclusion of order
//!    less than 4;
//! 2. [`reduce_order`] (§4) lowers the order of an IIMLL conclusion below 4
//!    by repeated Lemma-3 rewirings, strictly decreasing `measure_lolli`;
//! 3. [`extract_composition`] (§5.2) reads the net of order < 4 as a linear
//!    composition `F` of second-order variables `G_i` over first-order
//!    leaves `x_j`;
//! 4. [`choose_assignment`] (Thm 5.2) picks definable functions for the
//!    `G_i` and booleans for the `x_j` that tell the two compositions apart;
//! 5. [`assignment_context`] (Prop 5.1) turns the assignment into a context
//!    over the `B`-instantiated conclusion.
//!
//! Every synthesized context is validated by the Danos-Regnier check on
//! construction, and each stage re-checks that the two nets remain unequal;
//! a failed check aborts with [`SepError::Internal`] instead of guessing.

use crate::analysis::{equal, measure_lolli};
use crate::context::Context;
use crate::formula::{arity, is_simple, order, FormulaError, ImpFormula, Polarity};
use crate::lambda::{
    assign_term, boolean_net, boolean_type, definable_function_net, term_to_net, term_to_net_open,
    FunctionSpec, Term, TermError, Var,
};
use crate::net::{LinkKind, NetError, ProofNet, ProofStructure};
use crate::rewrite::normalize;
use std::collections::BTreeMap;
use std::fmt;

/// Errors of the separation pipeline.
#[derive(Debug, thiserror::Error)]
pub enum SepError {
    #[error("the two nets are equal")]
    Equal,
    #[error("conclusion mismatch: {0} vs {1}")]
    ConclusionMismatch(ImpFormula, ImpFormula),
    #[error("conclusion is not simple: {0}")]
    NotSimple(ImpFormula),
    #[error("conclusion order exceeds 3: {0}")]
    OrderTooHigh(ImpFormula),
    #[error("unsupported shape: {0}")]
    Shape(String),
    #[error("assignment does not fit the conclusion: {0}")]
    ArityMismatch(String),
    #[error(transparent)]
    Net(#[from] NetError),
    #[error(transparent)]
    Term(#[from] TermError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error("internal pipeline failure: {0}")]
    Internal(String),
}

fn bump(fresh: &mut Var) -> Var {
    let v = *fresh;
    *fresh += 1;
    v
}

/// η-expands a neutral (spine) term at a type, so that the result is a
/// βη-long value acceptable to the term compiler.  At a tensor type the
/// expansion destructures and re-pairs.
fn eta(t: Term, ty: &ImpFormula, fresh: &mut Var) -> Term {
    match ty {
        ImpFormula::Atom => t,
        ImpFormula::Lolli(a, b) => {
            let u = bump(fresh);
            let arg = eta(Term::var(u), a, fresh);
            Term::lam(u, a.as_ref().clone(), eta(Term::app(t, arg), b, fresh))
        }
        ImpFormula::Tensor(a, b) => {
            let l = bump(fresh);
            let r = bump(fresh);
            Term::LetPair {
                left: (l, a.as_ref().clone()),
                right: (r, b.as_ref().clone()),
                scrutinee: Box::new(t),
                body: Box::new(Term::pair(
                    eta(Term::var(l), a, fresh),
                    eta(Term::var(r), b, fresh),
                )),
            }
        }
    }
}

/// The closed positive conclusion of a net.
fn conclusion_formula(net: &ProofNet) -> Result<ImpFormula, SepError> {
    let s = net.structure();
    if !s.is_closed() {
        return Err(SepError::Shape("net must be closed".into()));
    }
    let c = s
        .positive_conclusion()
        .ok_or_else(|| SepError::Shape("net has no positive conclusion".into()))?;
    Ok(s.node(c).formula.clone())
}

/// Compiles a term with a single free variable `fvar : fty` and cuts that
/// variable's negative conclusion against a hole of type `fty`.  This is
/// how every rewiring context is built: the term spells out the link
/// manipulation, and compilation plus the net check validate it.
fn context_from_open_term(
    pi: &Term,
    ty: &ImpFormula,
    fvar: Var,
    fty: &ImpFormula,
) -> Result<Context, SepError> {
    let net = term_to_net_open(pi, ty, &[(fvar, fty.clone())])?;
    let mut s = net.structure().clone();
    let neg = s
        .conclusions()
        .into_iter()
        .find(|&n| s.node(n).polarity == Polarity::Neg)
        .ok_or_else(|| SepError::Internal("open term produced no negative conclusion".into()))?;
    if s.node(neg).formula != *fty {
        return Err(SepError::Internal(
            "free-variable conclusion has the wrong type".into(),
        ));
    }
    let h = s.add_node(fty.clone(), Polarity::Pos);
    s.add_link(LinkKind::Hole, vec![], vec![h]);
    s.add_link(LinkKind::Cut, vec![h, neg], vec![]);
    Ok(Context::new(s)?)
}

// ---------------------------------------------------------------------------
// Type instantiation
// ---------------------------------------------------------------------------

fn instantiate_structure(s: &ProofStructure, a: &ImpFormula) -> ProofStructure {
    let mut out = ProofStructure::new();
    for (id, node) in s.nodes() {
        out.add_node_with_id(id, node.formula.instantiate(a), node.polarity)
            .expect("node ids of a structure are distinct");
    }
    for (_, l) in s.links() {
        out.add_link(l.kind, l.premises.clone(), l.conclusions.clone());
    }
    out
}

/// `Θ[a/p]`: replaces every atomic formula occurrence by `a`.  ID links on
/// `p` become ID links on `a`; the result is normalized back to η-long
/// form, so a normal input yields a normal output.
pub fn instantiate_net(net: &ProofNet, a: &ImpFormula) -> Result<ProofNet, SepError> {
    let inst = ProofNet::new(instantiate_structure(net.structure(), a))?;
    Ok(normalize(&inst))
}

/// Instantiates a context: `C[a/p]` plugs `Θ[a/p]` wherever `C` plugs `Θ`.
pub fn instantiate_context(c: &Context, a: &ImpFormula) -> Result<Context, SepError> {
    Ok(Context::new(instantiate_structure(c.structure(), a))?)
}

// ---------------------------------------------------------------------------
// Composition expressions (§5.2)
// ---------------------------------------------------------------------------

/// A linear composition of second-order variables over first-order leaves.
/// Indices are 0-based positions among the conclusion's second-order
/// (for `G`) and atomic (for `X`) arguments; display is 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Comp {
    /// A first-order variable `x_{j+1}`.
    X(usize),
    /// `G_{i+1}(args)`.
    G(usize, Vec<Comp>),
}

impl fmt::Display for Comp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Comp::X(j) => write!(f, "x{}", j + 1),
            Comp::G(i, args) => {
                write!(f, "G{}(", i + 1)?;
                for (k, a) in args.iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}", a)?;
                }
                write!(f, ")")
            }
        }
    }
}

/// A composition expression together with the signature it is read over:
/// the arity of each `G_i` and the number of leaves `x_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionExpr {
    pub expr: Comp,
    pub g_arity: Vec<usize>,
    pub x_count: usize,
}

impl fmt::Display for CompositionExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.expr)
    }
}

/// Reads the composition `F` of a closed normal IIMLL net whose conclusion
/// has order at most 3: second-order conclusion arguments become the `G_i`
/// (in argument order), atomic ones the `x_j`, and the applicative
/// structure of the net gives the tree.
pub fn extract_composition(net: &ProofNet) -> Result<CompositionExpr, SepError> {
    let concl = conclusion_formula(net)?;
    if order(&concl)? > 3 {
        return Err(SepError::OrderTooHigh(concl));
    }
    let t = assign_term(net)?;
    let mut binders = Vec::new();
    let mut cur = &t;
    while let Term::Lam(v, ty, body) = cur {
        binders.push((*v, ty.clone()));
        cur = body.as_ref();
    }
    let mut g_index: BTreeMap<Var, usize> = BTreeMap::new();
    let mut x_index: BTreeMap<Var, usize> = BTreeMap::new();
    let mut g_arity = Vec::new();
    for (v, ty) in &binders {
        if *ty == ImpFormula::Atom {
            x_index.insert(*v, x_index.len());
        } else {
            let a = arity(ty)?;
            g_index.insert(*v, g_arity.len());
            g_arity.push(a);
        }
    }
    let expr = comp_of_term(cur, &g_index, &x_index)?;
    Ok(CompositionExpr {
        expr,
        g_arity,
        x_count: x_index.len(),
    })
}

fn comp_of_term(
    t: &Term,
    g: &BTreeMap<Var, usize>,
    x: &BTreeMap<Var, usize>,
) -> Result<Comp, SepError> {
    match t {
        Term::Var(v) => x
            .get(v)
            .map(|&j| Comp::X(j))
            .ok_or_else(|| SepError::Shape(format!("variable x{} is not a leaf", v))),
        Term::App(..) => {
            let mut args = Vec::new();
            let mut cur = t;
            while let Term::App(f, a) = cur {
                args.push(a.as_ref());
                cur = f.as_ref();
            }
            args.reverse();
            let Term::Var(h) = cur else {
                return Err(SepError::Shape("spine head is not a variable".into()));
            };
            let &i = g
                .get(h)
                .ok_or_else(|| SepError::Shape(format!("head x{} is not second-order", h)))?;
            let cs = args
                .iter()
                .map(|a| comp_of_term(a, g, x))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Comp::G(i, cs))
        }
        _ => Err(SepError::Shape(
            "unexpected term form in an order-<4 net".into(),
        )),
    }
}

/// The canonical conclusion for a composition signature: the `G` types in
/// order, then the atoms.
pub fn composition_type(c: &CompositionExpr) -> ImpFormula {
    let mut args: Vec<ImpFormula> = c
        .g_arity
        .iter()
        .map(|&a| ImpFormula::curried(&vec![ImpFormula::Atom; a], ImpFormula::Atom))
        .collect();
    args.extend(std::iter::repeat(ImpFormula::Atom).take(c.x_count));
    ImpFormula::curried(&args, ImpFormula::Atom)
}

/// Rebuilds the closed normal net of [`composition_type`] whose composition
/// is `c`; inverse of [`extract_composition`] on that type.
pub fn composition_to_net(c: &CompositionExpr) -> Result<ProofNet, SepError> {
    let m = c.g_arity.len();
    fn term_of(e: &Comp, m: usize) -> Term {
        match e {
            Comp::X(j) => Term::var((m + j) as Var),
            Comp::G(i, args) => {
                Term::spine(*i as Var, args.iter().map(|a| term_of(a, m)).collect())
            }
        }
    }
    let mut t = term_of(&c.expr, m);
    for j in (0..c.x_count).rev() {
        t = Term::lam((m + j) as Var, ImpFormula::Atom, t);
    }
    for i in (0..m).rev() {
        let ty = ImpFormula::curried(&vec![ImpFormula::Atom; c.g_arity[i]], ImpFormula::Atom);
        t = Term::lam(i as Var, ty, t);
    }
    Ok(term_to_net(&t, &composition_type(c))?)
}

// ---------------------------------------------------------------------------
// Assignments (§5.1, Thm 5.2)
// ---------------------------------------------------------------------------

/// A choice of definable function for each `G_i` and a boolean for each
/// `x_j`.  The tags are exactly the `2n+2` definable functions of
/// `B^n -o B`: two constants, `n` projections, `n` negated projections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    pub g: Vec<FunctionSpec>,
    pub x: Vec<bool>,
}

/// Evaluates a composition under an assignment.
pub fn eval_composition(e: &Comp, asg: &Assignment) -> bool {
    match e {
        Comp::X(j) => asg.x[*j],
        Comp::G(i, args) => match asg.g[*i] {
            FunctionSpec::Const(b) => b,
            FunctionSpec::Proj(k) => eval_composition(&args[k - 1], asg),
            FunctionSpec::NegProj(k) => !eval_composition(&args[k - 1], asg),
        },
    }
}

type OccMap = BTreeMap<usize, (Vec<(usize, usize)>, Vec<Comp>)>;

/// For each `G_i`: the path of `(ancestor, slot)` steps from the root to
/// its (unique) occurrence, and its argument subtrees.
fn occurrences(e: &Comp) -> OccMap {
    fn go(e: &Comp, path: &mut Vec<(usize, usize)>, out: &mut OccMap) {
        if let Comp::G(i, args) = e {
            out.insert(*i, (path.clone(), args.clone()));
            for (s, a) in args.iter().enumerate() {
                path.push((*i, s));
                go(a, path, out);
                path.pop();
            }
        }
    }
    let mut out = OccMap::new();
    go(e, &mut Vec::new(), &mut out);
    out
}

/// Thm 5.2: synthesizes an assignment separating two distinct compositions
/// over the same signature.  Returns the assignment and its orientation:
/// `false` means `(F₁, F₂) ↦ (0̲, 1̲)`, `true` means `(1̲, 0̲)` (case 2).
///
/// Case (1) applies when some `G_i` carries two different leaves at the same
/// slot: the path to `G_i` becomes projections, the differing leaves get `0`
/// and `1`.  Case (2) applies when some `G_i` sits at different positions:
/// the least-deep such occurrence gets the constant-`1` function and its
/// ancestors projections, everything else constant `0`.  Ties are broken by
/// the smallest conclusion position; every candidate is verified by
/// [`eval_composition`] before being returned.
pub fn choose_assignment(
    f1: &CompositionExpr,
    f2: &CompositionExpr,
) -> Result<(Assignment, bool), SepError> {
    if f1.g_arity != f2.g_arity || f1.x_count != f2.x_count {
        return Err(SepError::Shape(
            "composition signatures differ".into(),
        ));
    }
    if f1.expr == f2.expr {
        return Err(SepError::Equal);
    }
    let (m, n) = (f1.g_arity.len(), f1.x_count);
    let occ1 = occurrences(&f1.expr);
    let occ2 = occurrences(&f2.expr);
    let blank = || Assignment {
        g: vec![FunctionSpec::Const(false); m],
        x: vec![false; n],
    };

    // case (1): a shared slot holding two different leaves
    let mut c1: Vec<(usize, usize, usize, usize, usize)> = Vec::new();
    for (i, (p1, a1)) in &occ1 {
        if let Some((_, a2)) = occ2.get(i) {
            for t in 0..a1.len() {
                if let (Comp::X(j1), Comp::X(j2)) = (&a1[t], &a2[t]) {
                    if j1 != j2 {
                        c1.push((p1.len(), *i, t, *j1, *j2));
                    }
                }
            }
        }
    }
    c1.sort();
    for (_, i, t, _j1, j2) in c1 {
        let mut asg = blank();
        for &(gk, slot) in &occ1[&i].0 {
            asg.g[gk] = FunctionSpec::Proj(slot + 1);
        }
        asg.g[i] = FunctionSpec::Proj(t + 1);
        asg.x[j2] = true;
        if !eval_composition(&f1.expr, &asg) && eval_composition(&f2.expr, &asg) {
            return Ok((asg, false));
        }
    }

    // case (2): a G occurring at different positions
    let mut c2: Vec<(usize, usize, bool)> = Vec::new();
    for (i, (p1, _)) in &occ1 {
        if let Some((p2, _)) = occ2.get(i) {
            if p1 != p2 {
                let primary2 = p2.len() < p1.len();
                c2.push((p1.len().min(p2.len()), *i, primary2));
                c2.push((p1.len().max(p2.len()), *i, !primary2));
            }
        }
    }
    c2.sort();
    for (_, i, primary2) in c2 {
        let path = if primary2 { &occ2[&i].0 } else { &occ1[&i].0 };
        let mut asg = blank();
        for &(gk, slot) in path {
            asg.g[gk] = FunctionSpec::Proj(slot + 1);
        }
        asg.g[i] = FunctionSpec::Const(true);
        let v1 = eval_composition(&f1.expr, &asg);
        let v2 = eval_composition(&f2.expr, &asg);
        if !v1 && v2 {
            return Ok((asg, false));
        }
        if v1 && !v2 {
            return Ok((asg, true));
        }
    }
    Err(SepError::Internal(
        "no separating assignment found for distinct compositions".into(),
    ))
}

// ---------------------------------------------------------------------------
// Assignment contexts (Prop 5.1)
// ---------------------------------------------------------------------------

/// Prop 5.1: builds the context over the `B`-instantiated conclusion that
/// applies the plugged net to the assignment's closed nets — a
/// definable-function net for every second-order slot and a boolean net for
/// every atomic slot — delivering a net of type `B`.  The construction
/// depends only on the conclusion.
pub fn assignment_context(
    conclusion: &ImpFormula,
    asg: &Assignment,
) -> Result<Context, SepError> {
    let b = boolean_type();
    enum Slot {
        X,
        G(usize),
    }
    // peel arguments against B by hand: the maximal uncurrying would peel
    // into B itself
    let mut slots = Vec::new();
    let mut rest: &ImpFormula = conclusion;
    while *rest != b {
        let ImpFormula::Lolli(arg, r) = rest else {
            return Err(SepError::Shape(format!(
                "conclusion {} does not deliver B",
                conclusion
            )));
        };
        let mut a = 0usize;
        let mut cur: &ImpFormula = arg;
        while let ImpFormula::Lolli(l, rr) = cur {
            if **l == b {
                a += 1;
                cur = rr.as_ref();
            } else {
                break;
            }
        }
        if *cur != b {
            return Err(SepError::Shape(format!(
                "argument {} is not a B-instantiated slot",
                arg
            )));
        }
        slots.push(if a == 0 { Slot::X } else { Slot::G(a) });
        rest = r.as_ref();
    }
    let g_count = slots.iter().filter(|s| matches!(s, Slot::G(_))).count();
    let x_count = slots.len() - g_count;
    if g_count != asg.g.len() || x_count != asg.x.len() {
        return Err(SepError::ArityMismatch(format!(
            "conclusion has {} function and {} boolean slots, assignment has {} and {}",
            g_count,
            x_count,
            asg.g.len(),
            asg.x.len()
        )));
    }

    let mut s = ProofStructure::new();
    let mut concs = Vec::new();
    let (mut gi, mut xi) = (0, 0);
    for slot in &slots {
        let net = match slot {
            Slot::X => {
                let v = asg.x[xi];
                xi += 1;
                boolean_net(v)
            }
            Slot::G(a) => {
                let spec = asg.g[gi];
                gi += 1;
                if let FunctionSpec::Proj(k) | FunctionSpec::NegProj(k) = spec {
                    if k < 1 || k > *a {
                        return Err(SepError::ArityMismatch(format!(
                            "projection slot {} out of range for arity {}",
                            k, a
                        )));
                    }
                }
                definable_function_net(*a, spec)
            }
        };
        let conc = net
            .structure()
            .positive_conclusion()
            .expect("assignment nets are closed");
        let map = s.absorb(net.structure());
        let mapped = map[&conc];
        let ty = s.node(mapped).formula.clone();
        concs.push((mapped, ty));
    }
    let bp = s.add_node(b.clone(), Polarity::Pos);
    let bn = s.add_node(b.clone(), Polarity::Neg);
    s.add_link(LinkKind::Id, vec![], vec![bp, bn]);
    let mut cur = bn;
    let mut cur_ty = b;
    for (cnode, cty) in concs.into_iter().rev() {
        cur_ty = ImpFormula::lolli(cty, cur_ty);
        let nn = s.add_node(cur_ty.clone(), Polarity::Neg);
        s.add_link(LinkKind::TensorNeg, vec![cnode, cur], vec![nn]);
        cur = nn;
    }
    if cur_ty != *conclusion {
        return Err(SepError::Internal(
            "assignment adapter type does not match the conclusion".into(),
        ));
    }
    let h = s.add_node(conclusion.clone(), Polarity::Pos);
    s.add_link(LinkKind::Hole, vec![], vec![h]);
    s.add_link(LinkKind::Cut, vec![h, cur], vec![]);
    Ok(Context::new(s)?)
}

/// The context `NEG[]` computing the boolean negation `e₄` of the plugged
/// net of type `B`; used to fix the orientation of case-2 assignments.
pub fn negation_context() -> Context {
    let b = boolean_type();
    let e4 = definable_function_net(1, FunctionSpec::NegProj(1));
    let mut s = e4.structure().clone();
    let fc = s
        .positive_conclusion()
        .expect("a definable function net is closed");
    let bp = s.add_node(b.clone(), Polarity::Pos);
    let bn = s.add_node(b.clone(), Polarity::Neg);
    s.add_link(LinkKind::Id, vec![], vec![bp, bn]);
    let h = s.add_node(b.clone(), Polarity::Pos);
    s.add_link(LinkKind::Hole, vec![], vec![h]);
    let fneg = s.add_node(ImpFormula::lolli(b.clone(), b), Polarity::Neg);
    s.add_link(LinkKind::TensorNeg, vec![h, bn], vec![fneg]);
    s.add_link(LinkKind::Cut, vec![fc, fneg], vec![]);
    Context::new(s).expect("the negation context is a well-formed context")
}

// ---------------------------------------------------------------------------
// Order reduction (§4: Lemma 3, Prop 4, Cor 4)
// ---------------------------------------------------------------------------

/// Lemma 3: the rewiring context for one `(C₂ ⊸ C₁)` argument nested at
/// depth 2 of an IIMLL conclusion.  `outer` is the position of the
/// enclosing argument `W = … ⊸ (C₂ ⊸ C₁) ⊸ … ⊸ p`, `inner` the position of
/// the target inside `W`.  The context's conclusion pulls `C₂` out to a new
/// outermost position and leaves `C₁` behind:
/// `C₂ ⊸ … ⊸ (… ⊸ C₁ ⊸ … ⊸ p) ⊸ … ⊸ p`.
///
/// The construction η-expands the identity on the conclusion and re-homes
/// the `C₂⁻` premise from its inner ⅋⁺-link to the new outermost one; it is
/// realized here by compiling the permutation term that spells out exactly
/// that wiring against a free variable of the original type, which
/// validates the result on construction.  It depends only on the selected
/// occurrence, never on the plugged net.
pub fn rewire_third_order(
    a: &ImpFormula,
    outer: usize,
    inner: usize,
) -> Result<Context, SepError> {
    if !a.is_iimll() {
        return Err(SepError::Shape(format!("{} is not an IIMLL formula", a)));
    }
    let (args, _) = a.uncurried();
    let w = *args
        .get(outer)
        .ok_or_else(|| SepError::Shape("outer position out of range".into()))?;
    let (ws, _) = w.uncurried();
    let d = *ws
        .get(inner)
        .ok_or_else(|| SepError::Shape("inner position out of range".into()))?;
    let ImpFormula::Lolli(c2, c1) = d else {
        return Err(SepError::Shape(format!(
            "target {} is not of -o shape",
            d
        )));
    };

    let wprime = ImpFormula::curried(
        &ws.iter()
            .enumerate()
            .map(|(t, f)| {
                if t == inner {
                    c1.as_ref().clone()
                } else {
                    (*f).clone()
                }
            })
            .collect::<Vec<_>>(),
        ImpFormula::Atom,
    );
    let args2: Vec<ImpFormula> = args
        .iter()
        .enumerate()
        .map(|(t, f)| if t == outer { wprime.clone() } else { (*f).clone() })
        .collect();
    let aprime = ImpFormula::lolli(
        c2.as_ref().clone(),
        ImpFormula::curried(&args2, ImpFormula::Atom),
    );

    let fv: Var = 0;
    let mut fresh: Var = 1;
    let z = bump(&mut fresh);
    let ys: Vec<Var> = args2.iter().map(|_| bump(&mut fresh)).collect();
    let bs: Vec<Var> = ws.iter().map(|_| bump(&mut fresh)).collect();

    // the argument supplied at the `outer` slot: apply the target binder to
    // the pulled-out z and pass everything else through
    let mut spine_args = Vec::new();
    for (t, bvar) in bs.iter().enumerate() {
        if t == inner {
            let applied = Term::app(Term::var(*bvar), eta(Term::var(z), c2, &mut fresh));
            spine_args.push(eta(applied, c1, &mut fresh));
        } else {
            spine_args.push(eta(Term::var(*bvar), ws[t], &mut fresh));
        }
    }
    let mut u = Term::spine(ys[outer], spine_args);
    for (t, bvar) in bs.iter().enumerate().rev() {
        u = Term::lam(*bvar, ws[t].clone(), u);
    }

    let mut u = Some(u);
    let fargs: Vec<Term> = (0..args2.len())
        .map(|t| {
            if t == outer {
                u.take().expect("outer slot visited once")
            } else {
                eta(Term::var(ys[t]), args[t], &mut fresh)
            }
        })
        .collect();
    let mut pi = Term::spine(fv, fargs);
    for (t, y) in ys.iter().enumerate().rev() {
        pi = Term::lam(*y, args2[t].clone(), pi);
    }
    pi = Term::lam(z, c2.as_ref().clone(), pi);
    context_from_open_term(&pi, &aprime, fv, a)
}

/// Cor 4: iterates [`rewire_third_order`] on the leftmost-outermost
/// offending occurrence until the conclusion has order at most 3, composing
/// the contexts.  Each step strictly decreases `measure_lolli` of both nets
/// and preserves their unequality (checked; a violation aborts).
pub fn reduce_order(
    t1: &ProofNet,
    t2: &ProofNet,
) -> Result<(Context, ProofNet, ProofNet), SepError> {
    let a1 = conclusion_formula(t1)?;
    let a2 = conclusion_formula(t2)?;
    if a1 != a2 {
        return Err(SepError::ConclusionMismatch(a1, a2));
    }
    if equal(t1, t2)? {
        return Err(SepError::Equal);
    }
    let mut cur1 = t1.clone();
    let mut cur2 = t2.clone();
    let mut total = Context::make_hole(a1);
    for _ in 0..1000 {
        let a = conclusion_formula(&cur1)?;
        if order(&a)? <= 3 {
            return Ok((total, cur1, cur2));
        }
        let (args, _) = a.uncurried();
        let mut target = None;
        'scan: for (i, arg) in args.iter().enumerate() {
            if order(arg)? >= 3 {
                let (ws, _) = arg.uncurried();
                for (j, wj) in ws.iter().enumerate() {
                    if order(wj)? >= 2 {
                        target = Some((i, j));
                        break 'scan;
                    }
                }
            }
        }
        let (outer, inner) =
            target.ok_or_else(|| SepError::Internal("order > 3 without a target".into()))?;
        let ctx = rewire_third_order(&a, outer, inner)?;
        let n1 = normalize(&ctx.plug(&cur1)?);
        let n2 = normalize(&ctx.plug(&cur2)?);
        if measure_lolli(&n1)? >= measure_lolli(&cur1)?
            || measure_lolli(&n2)? >= measure_lolli(&cur2)?
        {
            return Err(SepError::Internal(
                "rewiring did not decrease measure_lolli".into(),
            ));
        }
        if equal(&n1, &n2)? {
            return Err(SepError::Internal("rewiring conflated the nets".into()));
        }
        total = ctx.compose(&total)?;
        cur1 = n1;
        cur2 = n2;
    }
    Err(SepError::Internal("order reduction did not terminate".into()))
}

// ---------------------------------------------------------------------------
// IMLL to simple conclusions (§6, Prop 6.2)
// ---------------------------------------------------------------------------

/// Def 6.1's per-argument condition.
fn arg_is_simple(arg: &ImpFormula) -> bool {
    let (ws, t0) = arg.uncurried();
    t0.is_atom_block() && ws.iter().all(|w| w.is_atom_block())
}

/// Leftmost `-o` component inside a tensor tree, as an L/R path
/// (`false` = left).
fn find_lolli_in_block(f: &ImpFormula) -> Option<Vec<bool>> {
    match f {
        ImpFormula::Lolli(..) => Some(Vec::new()),
        ImpFormula::Atom => None,
        ImpFormula::Tensor(a, b) => {
            if let Some(mut p) = find_lolli_in_block(a) {
                p.insert(0, false);
                Some(p)
            } else if let Some(mut p) = find_lolli_in_block(b) {
                p.insert(0, true);
                Some(p)
            } else {
                None
            }
        }
    }
}

fn replace_at(f: &ImpFormula, path: &[bool], new: &ImpFormula) -> ImpFormula {
    match path.split_first() {
        None => new.clone(),
        Some((&step, rest)) => {
            let ImpFormula::Tensor(a, b) = f else {
                panic!("path walks through tensor nodes only");
            };
            if step {
                ImpFormula::tensor(a.as_ref().clone(), replace_at(b, rest, new))
            } else {
                ImpFormula::tensor(replace_at(a, rest, new), b.as_ref().clone())
            }
        }
    }
}

/// One ⅋-rewiring step towards a simple conclusion.  Returns the context
/// and the rewired conclusion.  Three moves cover the shapes reachable by
/// re-homing a premise of a ⅋-link (the only detachable premises):
///
/// * a non-block tensor argument (top-level or inside an argument's
///   parameters) is split into its components;
/// * a `-o` parameter of an argument gets its domain pulled out to a new
///   outermost position (the Lemma-3 move, at arbitrary types);
/// * a `-o` component of the result block is applied away: its domain
///   becomes a new outermost argument.
///
/// A `-o` strictly inside an argument's *result* block would require
/// detaching a ⊗-premise and is rejected with a diagnostic.
fn simple_move(a: &ImpFormula) -> Result<(Context, ImpFormula), SepError> {
    let (args_ref, res_ref) = a.uncurried();
    let args: Vec<ImpFormula> = args_ref.iter().map(|f| (*f).clone()).collect();
    let res = res_ref.clone();
    let fv: Var = 0;
    let mut fresh: Var = 1;

    for (i, bi) in args.iter().enumerate() {
        if arg_is_simple(bi) {
            continue;
        }
        if let ImpFormula::Tensor(u, v) = bi {
            // split a top-level tensor argument into two arguments
            let mut args2 = args.clone();
            args2.splice(i..=i, [u.as_ref().clone(), v.as_ref().clone()]);
            let aprime = ImpFormula::curried(&args2, res.clone());
            let ys: Vec<Var> = args2.iter().map(|_| bump(&mut fresh)).collect();
            let fargs: Vec<Term> = {
                let mut out = Vec::new();
                let mut k = 0;
                for (t, orig) in args.iter().enumerate() {
                    if t == i {
                        let pu = eta(Term::var(ys[k]), u, &mut fresh);
                        let pv = eta(Term::var(ys[k + 1]), v, &mut fresh);
                        out.push(Term::pair(pu, pv));
                        k += 2;
                    } else {
                        out.push(eta(Term::var(ys[k]), orig, &mut fresh));
                        k += 1;
                    }
                }
                out
            };
            let mut pi = eta(Term::spine(fv, fargs), &res, &mut fresh);
            for (t, y) in ys.iter().enumerate().rev() {
                pi = Term::lam(*y, args2[t].clone(), pi);
            }
            return Ok((context_from_open_term(&pi, &aprime, fv, a)?, aprime));
        }

        let (ws_ref, t0_ref) = bi.uncurried();
        let ws: Vec<ImpFormula> = ws_ref.iter().map(|f| (*f).clone()).collect();
        let t0 = t0_ref.clone();
        if let Some(j) = ws.iter().position(|w| !w.is_atom_block()) {
            match &ws[j] {
                ImpFormula::Tensor(u, v) => {
                    // split a tensor parameter of B_i into two parameters
                    let mut ws2 = ws.clone();
                    ws2.splice(j..=j, [u.as_ref().clone(), v.as_ref().clone()]);
                    let biprime = ImpFormula::curried(&ws2, t0.clone());
                    let mut args2 = args.clone();
                    args2[i] = biprime;
                    let aprime = ImpFormula::curried(&args2, res.clone());
                    let ys: Vec<Var> = args2.iter().map(|_| bump(&mut fresh)).collect();
                    // the supplied B_i: receive the tensor, split it, feed
                    // the flattened binder
                    let wvars: Vec<Var> = ws.iter().map(|_| bump(&mut fresh)).collect();
                    let (pu, pv) = (bump(&mut fresh), bump(&mut fresh));
                    let mut sargs = Vec::new();
                    for (t, wv) in wvars.iter().enumerate() {
                        if t == j {
                            sargs.push(eta(Term::var(pu), u, &mut fresh));
                            sargs.push(eta(Term::var(pv), v, &mut fresh));
                        } else {
                            sargs.push(eta(Term::var(*wv), &ws[t], &mut fresh));
                        }
                    }
                    let inner = eta(Term::spine(ys[i], sargs), &t0, &mut fresh);
                    let mut ui = Term::LetPair {
                        left: (pu, u.as_ref().clone()),
                        right: (pv, v.as_ref().clone()),
                        scrutinee: Box::new(Term::var(wvars[j])),
                        body: Box::new(inner),
                    };
                    for (t, wv) in wvars.iter().enumerate().rev() {
                        ui = Term::lam(*wv, ws[t].clone(), ui);
                    }
                    let mut ui = Some(ui);
                    let fargs: Vec<Term> = (0..args.len())
                        .map(|t| {
                            if t == i {
                                ui.take().expect("slot visited once")
                            } else {
                                eta(Term::var(ys[t]), &args[t], &mut fresh)
                            }
                        })
                        .collect();
                    let mut pi = eta(Term::spine(fv, fargs), &res, &mut fresh);
                    for (t, y) in ys.iter().enumerate().rev() {
                        pi = Term::lam(*y, args2[t].clone(), pi);
                    }
                    return Ok((context_from_open_term(&pi, &aprime, fv, a)?, aprime));
                }
                ImpFormula::Lolli(c, d) => {
                    // pull the domain of a -o parameter out to the front
                    let mut ws2 = ws.clone();
                    ws2[j] = d.as_ref().clone();
                    let biprime = ImpFormula::curried(&ws2, t0.clone());
                    let mut args2 = args.clone();
                    args2[i] = biprime;
                    let aprime = ImpFormula::lolli(
                        c.as_ref().clone(),
                        ImpFormula::curried(&args2, res.clone()),
                    );
                    let z = bump(&mut fresh);
                    let ys: Vec<Var> = args2.iter().map(|_| bump(&mut fresh)).collect();
                    let wvars: Vec<Var> = ws.iter().map(|_| bump(&mut fresh)).collect();
                    let mut sargs = Vec::new();
                    for (t, wv) in wvars.iter().enumerate() {
                        if t == j {
                            let applied =
                                Term::app(Term::var(*wv), eta(Term::var(z), c, &mut fresh));
                            sargs.push(eta(applied, d, &mut fresh));
                        } else {
                            sargs.push(eta(Term::var(*wv), &ws[t], &mut fresh));
                        }
                    }
                    let mut ui = eta(Term::spine(ys[i], sargs), &t0, &mut fresh);
                    for (t, wv) in wvars.iter().enumerate().rev() {
                        ui = Term::lam(*wv, ws[t].clone(), ui);
                    }
                    let mut ui = Some(ui);
                    let fargs: Vec<Term> = (0..args.len())
                        .map(|t| {
                            if t == i {
                                ui.take().expect("slot visited once")
                            } else {
                                eta(Term::var(ys[t]), &args[t], &mut fresh)
                            }
                        })
                        .collect();
                    let mut pi = eta(Term::spine(fv, fargs), &res, &mut fresh);
                    for (t, y) in ys.iter().enumerate().rev() {
                        pi = Term::lam(*y, args2[t].clone(), pi);
                    }
                    pi = Term::lam(z, c.as_ref().clone(), pi);
                    return Ok((context_from_open_term(&pi, &aprime, fv, a)?, aprime));
                }
                ImpFormula::Atom => unreachable!("atoms are blocks"),
            }
        }
        // parameters are blocks, so the violation is a -o inside the
        // argument's result block: not reachable by a ⅋-rewiring
        return Err(SepError::Shape(format!(
            "argument {} has a -o inside its result block; no ⅋-rewiring applies",
            bi
        )));
    }

    if let Some(path) = find_lolli_in_block(&res) {
        // apply a -o component of the result away, binding its domain as a
        // new outermost argument
        let target = {
            let mut cur = &res;
            for &step in &path {
                let ImpFormula::Tensor(a, b) = cur else { unreachable!() };
                cur = if step { b } else { a };
            }
            cur.clone()
        };
        let ImpFormula::Lolli(c, d) = &target else {
            unreachable!("the path ends at a -o");
        };
        let res2 = replace_at(&res, &path, d);
        let aprime = ImpFormula::lolli(
            c.as_ref().clone(),
            ImpFormula::curried(&args, res2.clone()),
        );
        let z = bump(&mut fresh);
        let ys: Vec<Var> = args.iter().map(|_| bump(&mut fresh)).collect();
        let fargs: Vec<Term> = ys
            .iter()
            .zip(&args)
            .map(|(y, ty)| eta(Term::var(*y), ty, &mut fresh))
            .collect();

        fn rebuild(
            t: Term,
            shape: &ImpFormula,
            path: &[bool],
            z: Var,
            c: &ImpFormula,
            d: &ImpFormula,
            fresh: &mut Var,
        ) -> Term {
            match path.split_first() {
                None => {
                    let applied = Term::app(t, eta(Term::var(z), c, fresh));
                    eta(applied, d, fresh)
                }
                Some((&step, rest)) => {
                    let ImpFormula::Tensor(l, r) = shape else {
                        unreachable!("the path walks through tensors");
                    };
                    let (vl, vr) = (bump(fresh), bump(fresh));
                    let left = if !step {
                        rebuild(Term::var(vl), l, rest, z, c, d, fresh)
                    } else {
                        eta(Term::var(vl), l, fresh)
                    };
                    let right = if step {
                        rebuild(Term::var(vr), r, rest, z, c, d, fresh)
                    } else {
                        eta(Term::var(vr), r, fresh)
                    };
                    Term::LetPair {
                        left: (vl, l.as_ref().clone()),
                        right: (vr, r.as_ref().clone()),
                        scrutinee: Box::new(t),
                        body: Box::new(Term::pair(left, right)),
                    }
                }
            }
        }
        let mut pi = rebuild(Term::spine(fv, fargs), &res, &path, z, c, d, &mut fresh);
        for (t, y) in ys.iter().enumerate().rev() {
            pi = Term::lam(*y, args[t].clone(), pi);
        }
        pi = Term::lam(z, c.as_ref().clone(), pi);
        return Ok((context_from_open_term(&pi, &aprime, fv, a)?, aprime));
    }

    Err(SepError::Internal(format!(
        "no simplification move found for non-simple {}",
        a
    )))
}

/// Prop 6.2: rewires two distinct closed normal IMLL nets until their
/// shared conclusion is simple, preserving unequality (checked each step).
pub fn to_simple(
    t1: &ProofNet,
    t2: &ProofNet,
) -> Result<(Context, ProofNet, ProofNet), SepError> {
    let a1 = conclusion_formula(t1)?;
    let a2 = conclusion_formula(t2)?;
    if a1 != a2 {
        return Err(SepError::ConclusionMismatch(a1, a2));
    }
    if equal(t1, t2)? {
        return Err(SepError::Equal);
    }
    let mut cur1 = t1.clone();
    let mut cur2 = t2.clone();
    let mut total = Context::make_hole(a1);
    for _ in 0..1000 {
        let a = conclusion_formula(&cur1)?;
        if is_simple(&a) {
            return Ok((total, cur1, cur2));
        }
        let (ctx, _) = simple_move(&a)?;
        let n1 = normalize(&ctx.plug(&cur1)?);
        let n2 = normalize(&ctx.plug(&cur2)?);
        if equal(&n1, &n2)? {
            return Err(SepError::Internal(
                "simplification conflated the nets".into(),
            ));
        }
        total = ctx.compose(&total)?;
        cur1 = n1;
        cur2 = n2;
    }
    Err(SepError::Internal(
        "simplification did not terminate".into(),
    ))
}

// ---------------------------------------------------------------------------
// Simple conclusions to IIMLL (§6, Prop 6.3)
// ---------------------------------------------------------------------------

/// Prop 6.3: the adapter context for a simple conclusion
/// `A = B₁ ⊸ … ⊸ B_e ⊸ (p ⊗ … ⊗ p)` (result width `d`,
/// `B_i = T₁ ⊸ … ⊸ T_ℓ ⊸ T₀` over atom blocks).  Its conclusion is the
/// IIMLL formula
/// `p ⊸ … ⊸ p ⊸ C₁ ⊸ … ⊸ C_e ⊸ (p ⊸ … ⊸ p ⊸ p) ⊸ p` with
/// `Σ(m_i − 1)` leading atoms and `C_i = p^{Σ k_j} ⊸ p`: each `B_i` is
/// supplied by flattening its block parameters into `C_i`'s atoms, the
/// first atom of its result block comes from `C_i` and the remaining
/// `m_i − 1` from the leading arguments, and the final `d`-ary argument
/// collects the result block.
pub fn simple_adapter(a: &ImpFormula) -> Result<Context, SepError> {
    if !is_simple(a) {
        return Err(SepError::NotSimple(a.clone()));
    }
    let (args_ref, res_ref) = a.uncurried();
    let args: Vec<ImpFormula> = args_ref.iter().map(|f| (*f).clone()).collect();
    let res = res_ref.clone();
    let d = res.atom_block_width().expect("a simple result is a block");

    struct ArgInfo {
        ws: Vec<ImpFormula>,
        t0: ImpFormula,
        m: usize,
        ksum: usize,
    }
    let infos: Vec<ArgInfo> = args
        .iter()
        .map(|bi| {
            let (ws_ref, t0) = bi.uncurried();
            let ws: Vec<ImpFormula> = ws_ref.iter().map(|f| (*f).clone()).collect();
            let m = t0.atom_block_width().expect("simple result blocks");
            let ksum = ws
                .iter()
                .map(|w| w.atom_block_width().expect("simple parameter blocks"))
                .sum();
            ArgInfo {
                ws,
                t0: t0.clone(),
                m,
                ksum,
            }
        })
        .collect();

    let big_m: usize = infos.iter().map(|i| i.m - 1).sum();
    let c_types: Vec<ImpFormula> = infos
        .iter()
        .map(|i| ImpFormula::curried(&vec![ImpFormula::Atom; i.ksum], ImpFormula::Atom))
        .collect();
    let h_ty = ImpFormula::curried(&vec![ImpFormula::Atom; d], ImpFormula::Atom);
    let mut astar_args = vec![ImpFormula::Atom; big_m];
    astar_args.extend(c_types.iter().cloned());
    astar_args.push(h_ty.clone());
    let astar = ImpFormula::curried(&astar_args, ImpFormula::Atom);

    let fv: Var = 0;
    let mut fresh: Var = 1;
    let zs: Vec<Var> = (0..big_m).map(|_| bump(&mut fresh)).collect();
    let cs: Vec<Var> = infos.iter().map(|_| bump(&mut fresh)).collect();
    let hv = bump(&mut fresh);

    struct Wrap {
        left: (Var, ImpFormula),
        right: (Var, ImpFormula),
        scrut: Term,
    }
    fn destructure(
        scrut: Term,
        shape: &ImpFormula,
        fresh: &mut Var,
        atoms: &mut Vec<Var>,
        wraps: &mut Vec<Wrap>,
    ) {
        match shape {
            ImpFormula::Atom => {
                let Term::Var(v) = scrut else {
                    unreachable!("atomic scrutinees are variables");
                };
                atoms.push(v);
            }
            ImpFormula::Tensor(l, r) => {
                let (vl, vr) = (bump(fresh), bump(fresh));
                wraps.push(Wrap {
                    left: (vl, l.as_ref().clone()),
                    right: (vr, r.as_ref().clone()),
                    scrut,
                });
                destructure(Term::var(vl), l, fresh, atoms, wraps);
                destructure(Term::var(vr), r, fresh, atoms, wraps);
            }
            ImpFormula::Lolli(..) => unreachable!("blocks contain no -o"),
        }
    }
    fn block_value(shape: &ImpFormula, leaves: &mut std::vec::IntoIter<Term>) -> Term {
        match shape {
            ImpFormula::Atom => leaves.next().expect("one leaf per block atom"),
            ImpFormula::Tensor(l, r) => {
                let lv = block_value(l, leaves);
                Term::pair(lv, block_value(r, leaves))
            }
            ImpFormula::Lolli(..) => unreachable!("blocks contain no -o"),
        }
    }

    let mut zi = 0usize;
    let mut fargs = Vec::new();
    for (idx, info) in infos.iter().enumerate() {
        let wvars: Vec<Var> = info.ws.iter().map(|_| bump(&mut fresh)).collect();
        let mut atoms = Vec::new();
        let mut wraps = Vec::new();
        for (wv, ty) in wvars.iter().zip(&info.ws) {
            destructure(Term::var(*wv), ty, &mut fresh, &mut atoms, &mut wraps);
        }
        let lead = Term::spine(cs[idx], atoms.iter().map(|&v| Term::var(v)).collect());
        let mut leaves = vec![lead];
        for _ in 1..info.m {
            leaves.push(Term::var(zs[zi]));
            zi += 1;
        }
        let mut body = block_value(&info.t0, &mut leaves.into_iter());
        for w in wraps.into_iter().rev() {
            body = Term::LetPair {
                left: w.left,
                right: w.right,
                scrutinee: Box::new(w.scrut),
                body: Box::new(body),
            };
        }
        for (wv, ty) in wvars.iter().zip(&info.ws).rev() {
            body = Term::lam(*wv, ty.clone(), body);
        }
        fargs.push(body);
    }

    let fspine = Term::spine(fv, fargs);
    let main_body = if res == ImpFormula::Atom {
        Term::app(Term::var(hv), fspine)
    } else {
        let mut atoms = Vec::new();
        let mut wraps = Vec::new();
        destructure(fspine, &res, &mut fresh, &mut atoms, &mut wraps);
        let mut b = Term::spine(hv, atoms.iter().map(|&v| Term::var(v)).collect());
        for w in wraps.into_iter().rev() {
            b = Term::LetPair {
                left: w.left,
                right: w.right,
                scrutinee: Box::new(w.scrut),
                body: Box::new(b),
            };
        }
        b
    };

    let mut pi = Term::lam(hv, h_ty, main_body);
    for (cv, cty) in cs.iter().zip(&c_types).rev() {
        pi = Term::lam(*cv, cty.clone(), pi);
    }
    for z in zs.iter().rev() {
        pi = Term::lam(*z, ImpFormula::Atom, pi);
    }
    context_from_open_term(&pi, &astar, fv, a)
}

/// Prop 6.3: transforms a distinct pair with a simple conclusion into a
/// distinct pair whose conclusion is an IIMLL formula of order less than 4.
/// Already-IIMLL simple conclusions (which have order at most 3) get the
/// identity context.
pub fn simple_to_iimll(
    t1: &ProofNet,
    t2: &ProofNet,
) -> Result<(Context, ProofNet, ProofNet), SepError> {
    let a1 = conclusion_formula(t1)?;
    let a2 = conclusion_formula(t2)?;
    if a1 != a2 {
        return Err(SepError::ConclusionMismatch(a1, a2));
    }
    if !is_simple(&a1) {
        return Err(SepError::NotSimple(a1));
    }
    if equal(t1, t2)? {
        return Err(SepError::Equal);
    }
    if a1.is_iimll() {
        return Ok((Context::make_hole(a1), t1.clone(), t2.clone()));
    }
    let ctx = simple_adapter(&a1)?;
    let n1 = normalize(&ctx.plug(t1)?);
    let n2 = normalize(&ctx.plug(t2)?);
    let out = conclusion_formula(&n1)?;
    if !out.is_iimll() || order(&out)? > 3 {
        return Err(SepError::Internal(
            "adapter did not produce an order-<4 IIMLL conclusion".into(),
        ));
    }
    if equal(&n1, &n2)? {
        return Err(SepError::Internal("the adapter conflated the nets".into()));
    }
    Ok((ctx, n1, n2))
}

// ---------------------------------------------------------------------------
// End-to-end separation (Cor 5.3 / Cor 6.4)
// ---------------------------------------------------------------------------

/// The weak typed Böhm theorem, constructively: for two closed nets with
/// the same conclusion that are unequal after normalization, returns a
/// context `C` with `C[Θ₁[B/p]] = 0̲` and `C[Θ₂[B/p]] = 1̲` exactly (a
/// case-2 assignment is post-composed with the negation context to fix the
/// orientation).  The result is verified by plugging and normalizing
/// before it is returned.
pub fn separate(t1: &ProofNet, t2: &ProofNet) -> Result<Context, SepError> {
    let n1 = normalize(t1);
    let n2 = normalize(t2);
    let a1 = conclusion_formula(&n1)?;
    let a2 = conclusion_formula(&n2)?;
    if a1 != a2 {
        return Err(SepError::ConclusionMismatch(a1, a2));
    }
    if equal(&n1, &n2)? {
        return Err(SepError::Equal);
    }
    let b = boolean_type();
    let mut total = Context::make_hole(a1.clone());
    let (mut cur1, mut cur2) = (n1, n2);
    if !a1.is_iimll() {
        let (c, m1, m2) = to_simple(&cur1, &cur2)?;
        total = c.compose(&total)?;
        (cur1, cur2) = (m1, m2);
        let (c, m1, m2) = simple_to_iimll(&cur1, &cur2)?;
        total = c.compose(&total)?;
        (cur1, cur2) = (m1, m2);
    }
    if order(&conclusion_formula(&cur1)?)? > 3 {
        let (c, m1, m2) = reduce_order(&cur1, &cur2)?;
        total = c.compose(&total)?;
        (cur1, cur2) = (m1, m2);
    }
    let f1 = extract_composition(&cur1)?;
    let f2 = extract_composition(&cur2)?;
    let (asg, flipped) = choose_assignment(&f1, &f2)?;
    let inst_concl = conclusion_formula(&cur1)?.instantiate(&b);
    let ca = assignment_context(&inst_concl, &asg)?;
    let mut ctx = ca.compose(&instantiate_context(&total, &b)?)?;
    if flipped {
        ctx = negation_context().compose(&ctx)?;
    }
    let r1 = normalize(&ctx.plug(&instantiate_net(t1, &b)?)?);
    let r2 = normalize(&ctx.plug(&instantiate_net(t2, &b)?)?);
    if !(equal(&r1, &boolean_net(false))? && equal(&r2, &boolean_net(true))?) {
        return Err(SepError::Internal(
            "separation verification failed: the context does not deliver (0̲, 1̲)".into(),
        ));
    }
    Ok(ctx)
}
