//! Formulas, Danos-Regnier polarities, and the `-o` abbreviation.
//!
//! Two isomorphic views of the same formulas coexist:
//!
//! * [`Formula`] — the raw MLL syntax over the single atom `p` with the
//!   binary connectives ⊗ (written `*`) and ⅋ (written `@`);
//! * [`ImpFormula`] — the abbreviated view in which ⅋ at positive polarity
//!   and ⊗ at negative polarity both read as linear implication `-o`.
//!
//! Given a polarity, [`abb`]/[`unabb`] convert between the two views
//! bijectively.  Most of the library works on the abbreviated view, because
//! link typing is uniform there: a Cut on type `p -o p` joins a raw
//! `(p @ p)+` against a raw `(p * p)-`, which only look alike after
//! abbreviation.

use std::fmt;

/// The two Danos-Regnier polarities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarity {
    Pos,
    Neg,
}

impl Polarity {
    pub fn flip(self) -> Polarity {
        match self {
            Polarity::Pos => Polarity::Neg,
            Polarity::Neg => Polarity::Pos,
        }
    }

    pub fn sign(self) -> char {
        match self {
            Polarity::Pos => '+',
            Polarity::Neg => '-',
        }
    }
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.sign())
    }
}

/// A raw MLL formula over the single propositional variable `p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom,
    Tensor(Box<Formula>, Box<Formula>),
    Par(Box<Formula>, Box<Formula>),
}

/// An MLL formula in the `-o` abbreviated view.
///
/// `Lolli` stands for linear implication; `Tensor` is the tensor that
/// survives abbreviation (positive ⊗ / negative ⅋).  A formula with no
/// `Tensor` node is an IIMLL formula.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ImpFormula {
    Atom,
    Lolli(Box<ImpFormula>, Box<ImpFormula>),
    Tensor(Box<ImpFormula>, Box<ImpFormula>),
}

/// A raw formula together with its polarity, as written in source text.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolarizedFormula {
    pub formula: Formula,
    pub polarity: Polarity,
}

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum FormulaError {
    #[error("syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("formula is not an IIMLL formula (contains a tensor in the -o view)")]
    NotIimll,
    #[error("formula is not of second-order shape p -o ... -o p -o p")]
    NotSecondOrder,
}

// ---------------------------------------------------------------------------
// Constructors and shape helpers
// ---------------------------------------------------------------------------

impl ImpFormula {
    pub fn atom() -> ImpFormula {
        ImpFormula::Atom
    }

    pub fn lolli(a: ImpFormula, b: ImpFormula) -> ImpFormula {
        ImpFormula::Lolli(Box::new(a), Box::new(b))
    }

    pub fn tensor(a: ImpFormula, b: ImpFormula) -> ImpFormula {
        ImpFormula::Tensor(Box::new(a), Box::new(b))
    }

    /// Builds `A1 -o ... -o An -o result`.
    pub fn curried(args: &[ImpFormula], result: ImpFormula) -> ImpFormula {
        args.iter()
            .rev()
            .fold(result, |acc, a| ImpFormula::lolli(a.clone(), acc))
    }

    /// Splits `A1 -o ... -o An -o R` (maximal spine) into `([A1..An], R)`.
    /// `R` is the first non-`Lolli` formula on the right spine.
    pub fn uncurried(&self) -> (Vec<&ImpFormula>, &ImpFormula) {
        let mut args = Vec::new();
        let mut cur = self;
        while let ImpFormula::Lolli(a, b) = cur {
            args.push(a.as_ref());
            cur = b.as_ref();
        }
        (args, cur)
    }

    /// Number of connectives (`-o` plus tensor nodes).  Equal to the
    /// connective count of the raw view, since abbreviation is a bijection
    /// on binary nodes.
    pub fn size(&self) -> usize {
        match self {
            ImpFormula::Atom => 0,
            ImpFormula::Lolli(a, b) | ImpFormula::Tensor(a, b) => 1 + a.size() + b.size(),
        }
    }

    /// True iff the formula mentions no tensor, i.e. is purely implicational.
    pub fn is_iimll(&self) -> bool {
        match self {
            ImpFormula::Atom => true,
            ImpFormula::Lolli(a, b) => a.is_iimll() && b.is_iimll(),
            ImpFormula::Tensor(..) => false,
        }
    }

    /// True iff the formula is `p * ... * p` (a tensor block of atoms);
    /// a lone atom counts with block size 1.
    pub fn is_atom_block(&self) -> bool {
        self.atom_block_width().is_some()
    }

    /// Width of a `p * ... * p` block, if the formula is one.
    pub fn atom_block_width(&self) -> Option<usize> {
        match self {
            ImpFormula::Atom => Some(1),
            ImpFormula::Tensor(a, b) => {
                Some(a.atom_block_width()? + b.atom_block_width()?)
            }
            ImpFormula::Lolli(..) => None,
        }
    }

    /// Substitutes `a` for every atom, preserving the abbreviated view.
    ///
    /// This is type instantiation read at the `-o` level: each occurrence of
    /// `p` becomes `a` at the polarity of that occurrence, which is the only
    /// reading under which Θ[B/p] keeps the conclusion `A[B]` (no single raw
    /// formula abbreviates to a compound `B` at both polarities).
    pub fn instantiate(&self, a: &ImpFormula) -> ImpFormula {
        match self {
            ImpFormula::Atom => a.clone(),
            ImpFormula::Lolli(x, y) => {
                ImpFormula::lolli(x.instantiate(a), y.instantiate(a))
            }
            ImpFormula::Tensor(x, y) => {
                ImpFormula::tensor(x.instantiate(a), y.instantiate(a))
            }
        }
    }
}

// ---------------------------------------------------------------------------
// abb / unabb
// ---------------------------------------------------------------------------

/// `sabb` of the paper: the abbreviated view of a polarized raw formula.
pub fn abb(f: &Formula, pol: Polarity) -> ImpFormula {
    match (f, pol) {
        (Formula::Atom, _) => ImpFormula::Atom,
        (Formula::Tensor(a, b), Polarity::Neg) => {
            ImpFormula::lolli(abb(a, Polarity::Pos), abb(b, Polarity::Neg))
        }
        (Formula::Par(a, b), Polarity::Pos) => {
            ImpFormula::lolli(abb(a, Polarity::Neg), abb(b, Polarity::Pos))
        }
        (Formula::Tensor(a, b), Polarity::Pos) => {
            ImpFormula::tensor(abb(a, Polarity::Pos), abb(b, Polarity::Pos))
        }
        (Formula::Par(a, b), Polarity::Neg) => {
            ImpFormula::tensor(abb(a, Polarity::Neg), abb(b, Polarity::Neg))
        }
    }
}

/// Inverse of [`abb`] at a fixed polarity.
pub fn unabb(f: &ImpFormula, pol: Polarity) -> Formula {
    match (f, pol) {
        (ImpFormula::Atom, _) => Formula::Atom,
        (ImpFormula::Lolli(a, b), Polarity::Pos) => Formula::Par(
            Box::new(unabb(a, Polarity::Neg)),
            Box::new(unabb(b, Polarity::Pos)),
        ),
        (ImpFormula::Lolli(a, b), Polarity::Neg) => Formula::Tensor(
            Box::new(unabb(a, Polarity::Pos)),
            Box::new(unabb(b, Polarity::Neg)),
        ),
        (ImpFormula::Tensor(a, b), Polarity::Pos) => Formula::Tensor(
            Box::new(unabb(a, Polarity::Pos)),
            Box::new(unabb(b, Polarity::Pos)),
        ),
        (ImpFormula::Tensor(a, b), Polarity::Neg) => Formula::Par(
            Box::new(unabb(a, Polarity::Neg)),
            Box::new(unabb(b, Polarity::Neg)),
        ),
    }
}

impl PolarizedFormula {
    pub fn new(formula: Formula, polarity: Polarity) -> PolarizedFormula {
        PolarizedFormula { formula, polarity }
    }

    /// The abbreviated view of this polarized formula.
    pub fn abb(&self) -> ImpFormula {
        abb(&self.formula, self.polarity)
    }

    pub fn from_imp(f: &ImpFormula, polarity: Polarity) -> PolarizedFormula {
        PolarizedFormula {
            formula: unabb(f, polarity),
            polarity,
        }
    }

    /// Type instantiation: every atom occurrence is replaced by `a`, read at
    /// the polarity of that occurrence (see [`ImpFormula::instantiate`]).
    /// A raw argument is interpreted via its positive abbreviation.
    pub fn instantiate(&self, a: &Formula) -> PolarizedFormula {
        let a_imp = abb(a, Polarity::Pos);
        PolarizedFormula::from_imp(&self.abb().instantiate(&a_imp), self.polarity)
    }
}

// ---------------------------------------------------------------------------
// order / arity / is_simple
// ---------------------------------------------------------------------------

/// Order of an IIMLL formula: 1 for the atom, otherwise
/// `max(order(A1),...,order(An)) + 1` for `A1 -o ... -o An -o p`.
pub fn order(f: &ImpFormula) -> Result<u32, FormulaError> {
    if !f.is_iimll() {
        return Err(FormulaError::NotIimll);
    }
    Ok(order_unchecked(f))
}

fn order_unchecked(f: &ImpFormula) -> u32 {
    let (args, _) = f.uncurried();
    1 + args.iter().map(|a| order_unchecked(a)).max().unwrap_or(0)
}

/// Arity of a second-order formula `p -o ... -o p -o p` (number of argument
/// atoms; 0 for the bare atom).
pub fn arity(f: &ImpFormula) -> Result<usize, FormulaError> {
    let (args, result) = f.uncurried();
    if *result != ImpFormula::Atom || args.iter().any(|a| **a != ImpFormula::Atom) {
        return Err(FormulaError::NotSecondOrder);
    }
    Ok(args.len())
}

/// Def 6.1: `A` is simple if `A = B1 -o ... -o Be -o (p * ... * p)` where
/// each `Bi` is of the form `T1 -o ... -o Tl -o T0` with every `Tj` a tensor
/// block of atoms.  A bare tensor block (or atom) as a `Bi` is accepted: the
/// definition's `k_j >= 0` has no unit to realize an empty block, so the
/// degenerate blocks are read as absent arguments.
pub fn is_simple(f: &ImpFormula) -> bool {
    let (args, result) = f.uncurried();
    result.is_atom_block()
        && args.iter().all(|b| {
            let (ws, m) = b.uncurried();
            m.is_atom_block() && ws.iter().all(|w| w.is_atom_block())
        })
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

// Operator-level syntax tree before polarity resolution.  `-o` only gains a
// raw-connective meaning once the polarity of its occurrence is known.
enum Sx {
    Atom,
    Tensor(Box<Sx>, Box<Sx>),
    Par(Box<Sx>, Box<Sx>),
    Lolli(Box<Sx>, Box<Sx>),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Parser<'a> {
        Parser {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn error<T>(&self, msg: &str) -> Result<T, FormulaError> {
        Err(FormulaError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    /// True when the next two bytes are the `-o` token (as opposed to a
    /// trailing `-` polarity marker).
    fn at_lolli(&mut self) -> bool {
        self.skip_ws();
        self.src.get(self.pos) == Some(&b'-') && self.src.get(self.pos + 1) == Some(&b'o')
    }

    fn expr(&mut self) -> Result<Sx, FormulaError> {
        let lhs = self.operand()?;
        if self.at_lolli() {
            self.pos += 2;
            let rhs = self.expr()?; // right-associative
            Ok(Sx::Lolli(Box::new(lhs), Box::new(rhs)))
        } else {
            Ok(lhs)
        }
    }

    // tensor/par chains bind tighter than -o; right-associative
    fn operand(&mut self) -> Result<Sx, FormulaError> {
        let lhs = self.primary()?;
        match self.peek() {
            Some(b'*') => {
                self.pos += 1;
                let rhs = self.operand_no_lolli()?;
                Ok(Sx::Tensor(Box::new(lhs), Box::new(rhs)))
            }
            Some(b'@') => {
                self.pos += 1;
                let rhs = self.operand_no_lolli()?;
                Ok(Sx::Par(Box::new(lhs), Box::new(rhs)))
            }
            _ => Ok(lhs),
        }
    }

    fn operand_no_lolli(&mut self) -> Result<Sx, FormulaError> {
        self.operand()
    }

    fn primary(&mut self) -> Result<Sx, FormulaError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.error("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_lowercase() => {
                // named atoms are accepted and collapsed to the canonical p
                self.pos += 1;
                while self
                    .src
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_alphanumeric())
                {
                    self.pos += 1;
                }
                Ok(Sx::Atom)
            }
            _ => self.error("expected an atom or '('"),
        }
    }
}

/// Resolves an operator tree at a polarity into a raw formula.
fn resolve(sx: &Sx, pol: Polarity) -> Formula {
    match sx {
        Sx::Atom => Formula::Atom,
        Sx::Tensor(a, b) => {
            let (pa, pb) = match pol {
                Polarity::Pos => (Polarity::Pos, Polarity::Pos),
                Polarity::Neg => (Polarity::Pos, Polarity::Neg),
            };
            Formula::Tensor(Box::new(resolve(a, pa)), Box::new(resolve(b, pb)))
        }
        Sx::Par(a, b) => {
            let (pa, pb) = match pol {
                Polarity::Pos => (Polarity::Neg, Polarity::Pos),
                Polarity::Neg => (Polarity::Neg, Polarity::Neg),
            };
            Formula::Par(Box::new(resolve(a, pa)), Box::new(resolve(b, pb)))
        }
        Sx::Lolli(a, b) => match pol {
            Polarity::Pos => Formula::Par(
                Box::new(resolve(a, Polarity::Neg)),
                Box::new(resolve(b, Polarity::Pos)),
            ),
            Polarity::Neg => Formula::Tensor(
                Box::new(resolve(a, Polarity::Pos)),
                Box::new(resolve(b, Polarity::Neg)),
            ),
        },
    }
}

impl Sx {
    fn uses_lolli(&self) -> bool {
        match self {
            Sx::Atom => false,
            Sx::Lolli(..) => true,
            Sx::Tensor(a, b) | Sx::Par(a, b) => a.uses_lolli() || b.uses_lolli(),
        }
    }

    /// Reads the tree in abbreviated notation (`*` = the tensor of the `-o`
    /// view); `@` has no meaning there.
    fn to_imp(&self) -> Result<ImpFormula, FormulaError> {
        match self {
            Sx::Atom => Ok(ImpFormula::Atom),
            Sx::Lolli(a, b) => Ok(ImpFormula::lolli(a.to_imp()?, b.to_imp()?)),
            Sx::Tensor(a, b) => Ok(ImpFormula::tensor(a.to_imp()?, b.to_imp()?)),
            Sx::Par(..) => Err(FormulaError::Parse {
                pos: 0,
                msg: "'@' cannot be mixed with '-o' (raw vs abbreviated notation)".into(),
            }),
        }
    }
}

/// Parses the formula grammar: atom `p`; `(A * B)` tensor; `(A @ B)` par;
/// `A -o B` right-associative implication; optional trailing `+`/`-`
/// polarity (default `+`); whitespace insignificant.
///
/// Following the paper's remark that the notation in use "can easily be
/// judged from surrounding contexts", a formula containing `-o` is read in
/// abbreviated notation (where `*` is the surviving tensor and `@` is
/// illegal), and a formula without `-o` is read in raw ⊗/⅋ notation.
pub fn parse_formula(text: &str) -> Result<PolarizedFormula, FormulaError> {
    let mut p = Parser::new(text);
    let sx = p.expr()?;
    let polarity = match p.peek() {
        Some(b'+') => {
            p.pos += 1;
            Polarity::Pos
        }
        Some(b'-') => {
            p.pos += 1;
            Polarity::Neg
        }
        _ => Polarity::Pos,
    };
    if p.peek().is_some() {
        return p.error("trailing input after formula");
    }
    if sx.uses_lolli() {
        let imp = sx.to_imp()?;
        Ok(PolarizedFormula::from_imp(&imp, polarity))
    } else {
        Ok(PolarizedFormula::new(resolve(&sx, polarity), polarity))
    }
}

/// Parses a formula and returns its abbreviated view with the polarity.
pub fn parse_imp(text: &str) -> Result<(ImpFormula, Polarity), FormulaError> {
    let pf = parse_formula(text)?;
    Ok((pf.abb(), pf.polarity))
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom => write!(f, "p"),
            Formula::Tensor(a, b) => write!(f, "({} * {})", a, b),
            Formula::Par(a, b) => write!(f, "({} @ {})", a, b),
        }
    }
}

impl fmt::Display for PolarizedFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.formula, self.polarity)
    }
}

impl fmt::Display for ImpFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ImpFormula::Atom => write!(f, "p"),
            ImpFormula::Lolli(a, b) => {
                if matches!(a.as_ref(), ImpFormula::Atom) {
                    write!(f, "p -o {}", b)
                } else {
                    write!(f, "({}) -o {}", a, b)
                }
            }
            ImpFormula::Tensor(a, b) => {
                match a.as_ref() {
                    ImpFormula::Atom => write!(f, "p")?,
                    other => write!(f, "({})", other)?,
                }
                write!(f, " * ")?;
                match b.as_ref() {
                    ImpFormula::Atom => write!(f, "p"),
                    t @ ImpFormula::Tensor(..) => write!(f, "{}", t),
                    other => write!(f, "({})", other),
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Well-known formulas
// ---------------------------------------------------------------------------

/// The boolean instantiation type `B = p -o (p -o p) -o (p -o p) -o p`.
pub fn boolean_type() -> ImpFormula {
    let x = ImpFormula::lolli(ImpFormula::Atom, ImpFormula::Atom);
    ImpFormula::curried(
        &[ImpFormula::Atom, x.clone(), x],
        ImpFormula::Atom,
    )
}

/// The negative-control type `B' = p -o p -o (p -o p -o p) -o p` of the
/// §5.1 remark: it has two closed normal nets but cannot separate them.
pub fn alt_boolean_type() -> ImpFormula {
    let x = ImpFormula::curried(
        &[ImpFormula::Atom, ImpFormula::Atom],
        ImpFormula::Atom,
    );
    ImpFormula::curried(&[ImpFormula::Atom, ImpFormula::Atom, x], ImpFormula::Atom)
}

/// `T^n -o T`: the type of `n`-ary functions on `T`.
pub fn fun_type(t: &ImpFormula, n: usize) -> ImpFormula {
    ImpFormula::curried(&vec![t.clone(); n], t.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn imp(s: &str) -> ImpFormula {
        parse_imp(s).unwrap().0
    }

    #[test]
    fn abb_paper_example() {
        // abb((p @ (((p*p) @ (p*p)) @ p))+) = (p -o (((p -o p) * (p -o p)) -o p))+
        let pf = parse_formula("(p @ (((p*p) @ (p*p)) @ p))+").unwrap();
        let expected = imp("p -o (((p -o p) * (p -o p)) -o p)");
        assert_eq!(pf.abb(), expected);
    }

    #[test]
    fn abb_confusing_example() {
        // abb((p @ p)-) = (p * p)-
        let pf = parse_formula("(p @ p)-").unwrap();
        assert_eq!(pf.abb(), imp("p * p"));
        assert_eq!(unabb(&pf.abb(), Polarity::Neg), pf.formula);
    }

    #[test]
    fn abb_atomic() {
        assert_eq!(parse_formula("p+").unwrap().abb(), ImpFormula::Atom);
    }

    #[test]
    fn parse_lolli_is_par_positive() {
        let pf = parse_formula("(p -o p)+").unwrap();
        assert_eq!(
            pf.formula,
            Formula::Par(Box::new(Formula::Atom), Box::new(Formula::Atom))
        );
        assert_eq!(pf.abb(), imp("p -o p"));
    }

    #[test]
    fn parse_named_atoms_collapse() {
        assert_eq!(parse_formula("(a -o b)+"), parse_formula("(p -o p)+"));
    }

    fn all_formulas(size: usize) -> Vec<Formula> {
        if size == 0 {
            return vec![Formula::Atom];
        }
        let mut out = Vec::new();
        for l in 0..size {
            for a in all_formulas(l) {
                for b in all_formulas(size - 1 - l) {
                    out.push(Formula::Tensor(Box::new(a.clone()), Box::new(b.clone())));
                    out.push(Formula::Par(Box::new(a.clone()), Box::new(b.clone())));
                }
            }
        }
        out
    }

    #[test]
    fn abb_roundtrip_exhaustive() {
        // un-abb(abb(f)) = f for all formulas up to 4 connectives (2x larger
        // sizes are covered by the property suite).
        for size in 0..=4 {
            for f in all_formulas(size) {
                for pol in [Polarity::Pos, Polarity::Neg] {
                    assert_eq!(unabb(&abb(&f, pol), pol), f);
                }
            }
        }
    }

    #[test]
    fn print_parse_roundtrip() {
        for size in 0..=3 {
            for f in all_formulas(size) {
                for pol in [Polarity::Pos, Polarity::Neg] {
                    let pf = PolarizedFormula::new(f.clone(), pol);
                    assert_eq!(parse_formula(&pf.to_string()).unwrap(), pf);
                    let i = pf.abb();
                    assert_eq!(parse_imp(&i.to_string()).unwrap().0, i);
                }
            }
        }
    }

    #[test]
    fn order_examples() {
        assert_eq!(order(&imp("p")).unwrap(), 1);
        assert_eq!(order(&imp("p -o p")).unwrap(), 2);
        assert_eq!(order(&imp("p -o (p -o p) -o (p -o p) -o p")).unwrap(), 3);
        assert_eq!(order(&boolean_type()).unwrap(), 3);
        assert_eq!(order(&imp("((p -o p) -o p) -o (p -o p) -o p")).unwrap(), 4);
        assert!(order(&imp("p * p")).is_err());
    }

    #[test]
    fn arity_examples() {
        assert_eq!(arity(&imp("p")).unwrap(), 0);
        assert_eq!(arity(&imp("p -o p")).unwrap(), 1);
        assert_eq!(arity(&imp("p -o p -o p")).unwrap(), 2);
        assert!(arity(&imp("(p -o p) -o p")).is_err());
    }

    #[test]
    fn is_simple_examples() {
        assert!(is_simple(&imp("p")));
        assert!(is_simple(&imp("((p * p) -o p) -o (p * p)")));
        assert!(!is_simple(&imp("((p -o p) -o p) -o p")));
        // the §3 example conclusion is not simple
        assert!(!is_simple(&imp(
            "p -o (p * p) -o ((p -o (p * p)) * (p * p))"
        )));
        // B itself is simple: its arguments p -o p have atomic blocks only.
        assert!(is_simple(&boolean_type()));
    }

    #[test]
    fn instantiate_examples() {
        let b = boolean_type();
        let pf = parse_formula("p+").unwrap();
        let inst = pf.abb().instantiate(&b);
        assert_eq!(inst, b);

        let id = imp("p -o p");
        assert_eq!(
            id.instantiate(&b),
            ImpFormula::lolli(b.clone(), b.clone())
        );
        assert_eq!(id.instantiate(&ImpFormula::Atom), id);
        assert_eq!(order(&id.instantiate(&b)).unwrap(), 4);
    }

    #[test]
    fn sizes() {
        assert_eq!(imp("p").size(), 0);
        // B = p -o (p -o p) -o (p -o p) -o p has five arrows and no tensor.
        assert_eq!(boolean_type().size(), 5);
    }
}
