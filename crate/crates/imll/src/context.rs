//! One-hole contexts: extended nets containing exactly one HOLE link.
//!
//! A context `C[]` is an ordinary net in which one positive occurrence is
//! the conclusion of a `HOLE` link instead of a real axiom.  Plugging a
//! closed net Θ of the hole's type replaces the HOLE link by Θ, identifying
//! Θ's conclusion with the hole occurrence; since both sides are closed at
//! the interface no variable capture can occur, and every switching graph
//! of the result is a switching graph of `C` with the hole vertex expanded
//! into a tree, so the Danos-Regnier criterion is preserved.

use crate::formula::{ImpFormula, Polarity};
use crate::net::{LinkKind, NetError, NodeId, ProofNet, ProofStructure};

/// An extended net with exactly one HOLE link.
#[derive(Debug, Clone)]
pub struct Context {
    net: ProofNet,
    hole: NodeId,
}

impl Context {
    /// Wraps a checked extended net, locating its unique HOLE link.
    pub fn new(structure: ProofStructure) -> Result<Context, NetError> {
        let net = ProofNet::new(structure)?;
        let holes = net.hole_links();
        let &[h] = holes.as_slice() else {
            return Err(NetError::Other(format!(
                "a context must contain exactly one HOLE link, found {}",
                holes.len()
            )));
        };
        let hole = net.link(h).conclusions[0];
        Ok(Context { net, hole })
    }

    /// The trivial context: a lone HOLE link with conclusion `a+`.
    pub fn make_hole(a: ImpFormula) -> Context {
        let mut s = ProofStructure::new();
        let n = s.add_node(a, Polarity::Pos);
        s.add_link(LinkKind::Hole, vec![], vec![n]);
        Context::new(s).expect("a lone hole axiom is a context")
    }

    pub fn net(&self) -> &ProofNet {
        &self.net
    }

    pub fn structure(&self) -> &ProofStructure {
        self.net.structure()
    }

    /// The type of the hole occurrence (positive).
    pub fn hole_type(&self) -> &ImpFormula {
        &self.net.node(self.hole).formula
    }

    /// Replaces the HOLE link by the structure `t`, identifying the node
    /// `conc` of `t` (its positive conclusion) with the hole occurrence.
    /// Shared by [`Self::plug`] and [`Self::compose`].
    fn splice(&self, t: &ProofStructure, conc: NodeId) -> ProofStructure {
        let mut s = self.structure().clone();
        let hole_link = s.hole_links()[0];
        s.remove_link(hole_link);
        let map = s.absorb(t);
        // redirect the link concluding t's conclusion onto the hole node
        let lid = s
            .concluding_link(map[&conc])
            .expect("plugged conclusion must be concluded");
        let mut l = s.link(lid).clone();
        for c in l.conclusions.iter_mut() {
            if *c == map[&conc] {
                *c = self.hole;
            }
        }
        let (kind, premises, conclusions) = (l.kind, l.premises, l.conclusions);
        s.remove_link(lid);
        s.add_link(kind, premises, conclusions);
        s.remove_node(map[&conc]);
        s
    }

    /// `C[Θ]`: plugs a closed net of the hole's type into the hole.
    pub fn plug(&self, t: &ProofNet) -> Result<ProofNet, NetError> {
        if !t.is_closed() {
            return Err(NetError::Other("plugged net must be closed".into()));
        }
        let conc = t
            .positive_conclusion()
            .ok_or_else(|| NetError::Other("plugged net has no positive conclusion".into()))?;
        if t.node(conc).formula != *self.hole_type() {
            return Err(NetError::Other(format!(
                "hole type {} does not match plugged conclusion {}",
                self.hole_type(),
                t.node(conc).formula
            )));
        }
        ProofNet::new(self.splice(t.structure(), conc))
    }

    /// `C₁[C₂[]]`: plugs `inner` (a closed context) into `self`'s hole; the
    /// composite's hole is `inner`'s hole.
    pub fn compose(&self, inner: &Context) -> Result<Context, NetError> {
        if !inner.net.is_closed() {
            return Err(NetError::Other("inner context must be closed".into()));
        }
        let conc = inner
            .net
            .positive_conclusion()
            .ok_or_else(|| NetError::Other("inner context has no positive conclusion".into()))?;
        if inner.net.node(conc).formula != *self.hole_type() {
            return Err(NetError::Other(format!(
                "hole type {} does not match inner conclusion {}",
                self.hole_type(),
                inner.net.node(conc).formula
            )));
        }
        Context::new(self.splice(inner.structure(), conc))
    }
}

/// Applies a closed net of type `(A -o C)+` to a closed net of type `A+`:
/// a new ID link on `C`, a `TENSOR_NEG` link joining the argument's
/// conclusion with the ID's `C-`, and a Cut against the function's
/// conclusion.  The result is a closed net of type `C+`; its normal form is
/// the βη-normal application.
pub fn apply_net(fun: &ProofNet, arg: &ProofNet) -> Result<ProofNet, NetError> {
    let fc = fun
        .positive_conclusion()
        .filter(|_| fun.is_closed())
        .ok_or_else(|| NetError::Other("function net must be closed".into()))?;
    let ac = arg
        .positive_conclusion()
        .filter(|_| arg.is_closed())
        .ok_or_else(|| NetError::Other("argument net must be closed".into()))?;
    let ImpFormula::Lolli(a, c) = fun.node(fc).formula.clone() else {
        return Err(NetError::Other(
            "function net's conclusion is not of -o type".into(),
        ));
    };
    if arg.node(ac).formula != *a {
        return Err(NetError::Other(format!(
            "argument type {} does not match parameter type {}",
            arg.node(ac).formula, a
        )));
    }
    let mut s = fun.structure().clone();
    let map = s.absorb(arg.structure());
    let cp = s.add_node(c.as_ref().clone(), Polarity::Pos);
    let cn = s.add_node(c.as_ref().clone(), Polarity::Neg);
    s.add_link(LinkKind::Id, vec![], vec![cp, cn]);
    let neg = s.add_node(fun.node(fc).formula.clone(), Polarity::Neg);
    s.add_link(LinkKind::TensorNeg, vec![map[&ac], cn], vec![neg]);
    s.add_link(LinkKind::Cut, vec![fc, neg], vec![]);
    ProofNet::new(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_imp;
    use crate::net::example_par_over_id;
    use crate::rewrite::normalize;

    fn imp(s: &str) -> ImpFormula {
        parse_imp(s).unwrap().0
    }

    fn identity_net() -> ProofNet {
        ProofNet::new(example_par_over_id()).unwrap()
    }

    #[test]
    fn trivial_context_is_identity() {
        let c = Context::make_hole(imp("p -o p"));
        let theta = identity_net();
        let plugged = c.plug(&theta).unwrap();
        assert_eq!(
            plugged.structure().canonical().to_text(),
            theta.structure().canonical().to_text()
        );
    }

    #[test]
    fn plug_type_mismatch_rejected() {
        let c = Context::make_hole(imp("p"));
        assert!(c.plug(&identity_net()).is_err());
    }

    #[test]
    fn compose_with_trivial_is_identity() {
        // an actual context: λz. [] z, i.e. the hole applied under a binder
        let c = {
            let mut s = ProofStructure::new();
            let zp = s.add_node(ImpFormula::Atom, Polarity::Pos);
            let zn = s.add_node(ImpFormula::Atom, Polarity::Neg);
            s.add_link(LinkKind::Id, vec![], vec![zp, zn]);
            let rp = s.add_node(ImpFormula::Atom, Polarity::Pos);
            let rn = s.add_node(ImpFormula::Atom, Polarity::Neg);
            s.add_link(LinkKind::Id, vec![], vec![rp, rn]);
            let h = s.add_node(imp("p -o p"), Polarity::Pos);
            s.add_link(LinkKind::Hole, vec![], vec![h]);
            let hn = s.add_node(imp("p -o p"), Polarity::Neg);
            s.add_link(LinkKind::TensorNeg, vec![zp, rn], vec![hn]);
            s.add_link(LinkKind::Cut, vec![h, hn], vec![]);
            let conc = s.add_node(imp("p -o p"), Polarity::Pos);
            s.add_link(LinkKind::ParPos, vec![zn, rp], vec![conc]);
            Context::new(s).unwrap()
        };
        let triv = Context::make_hole(imp("p -o p"));
        let left = c.compose(&triv).unwrap();
        let right = triv.compose(&c).unwrap();
        let theta = identity_net();
        for composite in [&left, &right, &c] {
            let direct = normalize(&composite.plug(&theta).unwrap());
            let expected = normalize(&c.plug(&theta).unwrap());
            assert_eq!(
                direct.structure().canonical().to_text(),
                expected.structure().canonical().to_text()
            );
        }
    }

    #[test]
    fn apply_identity_behaves_as_identity() {
        // apply (λx.x) to the closed net of (p -o p)+ and normalize: get the
        // closed net of (p -o p)+ back
        let id2 = {
            // identity net at type (p -o p) -o (p -o p) via η-expansion of
            // its ID link under a PAR_POS
            let mut s = ProofStructure::new();
            let p = s.add_node(imp("p -o p"), Polarity::Pos);
            let n = s.add_node(imp("p -o p"), Polarity::Neg);
            s.add_link(LinkKind::Id, vec![], vec![p, n]);
            let c = s.add_node(imp("(p -o p) -o (p -o p)"), Polarity::Pos);
            s.add_link(LinkKind::ParPos, vec![n, p], vec![c]);
            normalize(&ProofNet::new(s).unwrap())
        };
        let arg = identity_net();
        let result = normalize(&apply_net(&id2, &arg).unwrap());
        assert_eq!(
            result.structure().canonical().to_text(),
            arg.structure().canonical().to_text()
        );
    }

    #[test]
    fn plug_preserves_dr() {
        let c = Context::make_hole(imp("p -o p"));
        let plugged = c.plug(&identity_net()).unwrap();
        assert!(plugged.dr_check());
    }
}
