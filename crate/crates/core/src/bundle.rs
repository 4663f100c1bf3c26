//! Bundle expressions: the small language of tautological bundles (sub S,
//! quotient Q, trivial summands) closed under wedge, symmetric, and tensor
//! powers, duals, determinants, and pullback along the Cremona involution —
//! plus the normal form the cohomology engine consumes.
//!
//! Normalization eliminates duals entirely and pushes Cremona pullbacks to
//! the leaves, using the tautological dualities
//!
//! * S(L)^∨ ≅ crem* Q(L^⊥),
//! * Q(L)^∨ ≅ crem* S(L^⊥),
//!
//! together with the compatibility of dual and Cremona pullback with wedge,
//! tensor, and determinant. Dualizing a symmetric power is only rewritten in
//! characteristic zero or above the power (Sym^p(V^∨) ≅ (Sym^p V)^∨ needs
//! invertible factorials); in low characteristic it is refused rather than
//! silently computed wrong.

use serde::Serialize;

use crate::error::{CoreError, Result};
use crate::scalar::Field;

/// A bundle expression as written by the user.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BundleExpr {
    /// The tautological subbundle S(L).
    S,
    /// The tautological quotient bundle Q(L).
    Q,
    /// The subbundle of a secondary realization (for flag comparisons).
    S2,
    /// The quotient bundle of a secondary realization.
    Q2,
    /// A trivial bundle O^k.
    Triv(usize),
    /// Exterior power ∧^p.
    Wedge(usize, Box<BundleExpr>),
    /// Symmetric power Sym^p.
    Sym(usize, Box<BundleExpr>),
    /// Top exterior power.
    Det(Box<BundleExpr>),
    /// Dual bundle.
    Dual(Box<BundleExpr>),
    /// Pullback along the Cremona involution.
    Crem(Box<BundleExpr>),
    /// Tensor product of factors.
    Tensor(Vec<BundleExpr>),
}

impl std::fmt::Display for BundleExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BundleExpr::S => write!(f, "S"),
            BundleExpr::Q => write!(f, "Q"),
            BundleExpr::S2 => write!(f, "S2"),
            BundleExpr::Q2 => write!(f, "Q2"),
            BundleExpr::Triv(1) => write!(f, "O"),
            BundleExpr::Triv(k) => write!(f, "O^{k}"),
            BundleExpr::Wedge(p, x) => write!(f, "wedge({p}, {x})"),
            BundleExpr::Sym(p, x) => write!(f, "sym({p}, {x})"),
            BundleExpr::Det(x) => write!(f, "det({x})"),
            BundleExpr::Dual(x) => write!(f, "dual({x})"),
            BundleExpr::Crem(x) => write!(f, "crem({x})"),
            BundleExpr::Tensor(xs) => {
                let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
                write!(f, "{}", parts.join(" * "))
            }
        }
    }
}

impl Serialize for BundleExpr {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl BundleExpr {
    /// Shorthand for ∧^p of this expression.
    pub fn wedge(p: usize, x: BundleExpr) -> BundleExpr {
        BundleExpr::Wedge(p, Box::new(x))
    }

    /// Shorthand for Sym^p of this expression.
    pub fn sym(p: usize, x: BundleExpr) -> BundleExpr {
        BundleExpr::Sym(p, Box::new(x))
    }

    /// Shorthand for the dual.
    pub fn dual(x: BundleExpr) -> BundleExpr {
        BundleExpr::Dual(Box::new(x))
    }

    /// Shorthand for the determinant line.
    pub fn det(x: BundleExpr) -> BundleExpr {
        BundleExpr::Det(Box::new(x))
    }

    /// Shorthand for the Cremona pullback.
    pub fn crem(x: BundleExpr) -> BundleExpr {
        BundleExpr::Crem(Box::new(x))
    }

    /// Shorthand for a tensor product, flattening nested products.
    pub fn tensor(xs: Vec<BundleExpr>) -> BundleExpr {
        let mut flat = Vec::new();
        for x in xs {
            match x {
                BundleExpr::Tensor(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        match flat.len() {
            0 => BundleExpr::Triv(1),
            1 => flat.into_iter().next().unwrap(),
            _ => BundleExpr::Tensor(flat),
        }
    }
}

/// Which tautological bundle a normalized leaf refers to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum LeafKind {
    /// The subbundle.
    S,
    /// The quotient bundle.
    Q,
}

/// A normalized leaf: S or Q of either the given realization or its
/// orthogonal complement, possibly pulled back along the Cremona involution,
/// possibly referring to a secondary realization.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct NormalLeaf {
    /// S or Q.
    pub kind: LeafKind,
    /// Use the orthogonal complement of the referenced realization.
    pub perp: bool,
    /// Pullback along the Cremona involution.
    pub crem: bool,
    /// Use the secondary realization instead of the primary one.
    pub secondary: bool,
}

/// Dual-free normal form with Cremona pullbacks at the leaves only.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum NormalExpr {
    /// A tautological leaf.
    Leaf(NormalLeaf),
    /// A trivial bundle O^k.
    Triv(usize),
    /// Exterior power.
    Wedge(usize, Box<NormalExpr>),
    /// Symmetric power.
    Sym(usize, Box<NormalExpr>),
    /// Tensor product.
    Tensor(Vec<NormalExpr>),
}

impl std::fmt::Display for NormalLeaf {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let base = match self.kind {
            LeafKind::S => "S",
            LeafKind::Q => "Q",
        };
        let sec = if self.secondary { "2" } else { "" };
        let perp = if self.perp { "_perp" } else { "" };
        if self.crem {
            write!(f, "crem({base}{sec}{perp})")
        } else {
            write!(f, "{base}{sec}{perp}")
        }
    }
}

impl std::fmt::Display for NormalExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NormalExpr::Leaf(l) => write!(f, "{l}"),
            NormalExpr::Triv(1) => write!(f, "O"),
            NormalExpr::Triv(k) => write!(f, "O^{k}"),
            NormalExpr::Wedge(p, x) => write!(f, "wedge({p}, {x})"),
            NormalExpr::Sym(p, x) => write!(f, "sym({p}, {x})"),
            NormalExpr::Tensor(xs) => {
                let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
                write!(f, "{}", parts.join(" * "))
            }
        }
    }
}

/// Rank bookkeeping for normalization: the dimensions that decide leaf ranks.
#[derive(Clone, Copy, Debug)]
pub struct RankData {
    /// Ground set size |E|.
    pub n: usize,
    /// dim L.
    pub dim_l: usize,
    /// dim of the secondary realization, if any (0 when unused).
    pub dim_l2: usize,
}

impl NormalExpr {
    /// Rank of the bundle this expression denotes.
    pub fn rank(&self, rd: RankData) -> usize {
        match self {
            NormalExpr::Leaf(leaf) => {
                let base = if leaf.secondary { rd.dim_l2 } else { rd.dim_l };
                let d = if leaf.perp { rd.n - base } else { base };
                match leaf.kind {
                    LeafKind::S => d,
                    LeafKind::Q => rd.n - d,
                }
            }
            NormalExpr::Triv(k) => *k,
            NormalExpr::Wedge(p, x) => {
                let r = x.rank(rd);
                if *p > r {
                    0
                } else {
                    crate::combinat::binomial(r, *p)
                }
            }
            NormalExpr::Sym(p, x) => {
                let r = x.rank(rd);
                crate::combinat::multiset_count(r, *p)
            }
            NormalExpr::Tensor(xs) => xs.iter().map(|x| x.rank(rd)).product(),
        }
    }

    /// The common coordinate sum of all torus weights of local sections:
    /// leaves contribute +1 per functor degree, Cremona leaves −1, trivial
    /// summands 0.
    pub fn signed_degree(&self) -> i64 {
        match self {
            NormalExpr::Leaf(leaf) => {
                if leaf.crem {
                    -1
                } else {
                    1
                }
            }
            NormalExpr::Triv(_) => 0,
            NormalExpr::Wedge(p, x) | NormalExpr::Sym(p, x) => *p as i64 * x.signed_degree(),
            NormalExpr::Tensor(xs) => xs.iter().map(|x| x.signed_degree()).sum(),
        }
    }

    /// Total functor weight: the number of leaf factors in any pure tensor,
    /// counting multiplicities; bounds how far weights spread from the mean.
    pub fn functor_weight(&self) -> usize {
        match self {
            NormalExpr::Leaf(_) => 1,
            NormalExpr::Triv(_) => 0,
            NormalExpr::Wedge(p, x) | NormalExpr::Sym(p, x) => p * x.functor_weight(),
            NormalExpr::Tensor(xs) => xs.iter().map(|x| x.functor_weight()).sum(),
        }
    }

    /// All leaves, left to right.
    pub fn leaves(&self) -> Vec<NormalLeaf> {
        let mut out = Vec::new();
        fn rec(x: &NormalExpr, out: &mut Vec<NormalLeaf>) {
            match x {
                NormalExpr::Leaf(l) => out.push(*l),
                NormalExpr::Triv(_) => {}
                NormalExpr::Wedge(_, y) | NormalExpr::Sym(_, y) => rec(y, out),
                NormalExpr::Tensor(xs) => xs.iter().for_each(|y| rec(y, out)),
            }
        }
        rec(self, &mut out);
        out
    }
}

/// Normalize an expression for a realization with the given rank data over
/// the given field: eliminate duals, push Cremona pullbacks to leaves,
/// rewrite determinants as top wedges, and drop degree-zero functors.
pub fn normalize(expr: &BundleExpr, rd: RankData, field: Field) -> Result<NormalExpr> {
    norm(expr, rd, field, false, false)
}

fn norm(
    expr: &BundleExpr,
    rd: RankData,
    field: Field,
    dual: bool,
    crem: bool,
) -> Result<NormalExpr> {
    Ok(match expr {
        BundleExpr::S | BundleExpr::Q | BundleExpr::S2 | BundleExpr::Q2 => {
            let base = if matches!(expr, BundleExpr::S | BundleExpr::S2) {
                LeafKind::S
            } else {
                LeafKind::Q
            };
            let secondary = matches!(expr, BundleExpr::S2 | BundleExpr::Q2);
            if dual {
                // S(L)^∨ = crem* Q(L^⊥) and Q(L)^∨ = crem* S(L^⊥).
                let kind = match base {
                    LeafKind::S => LeafKind::Q,
                    LeafKind::Q => LeafKind::S,
                };
                NormalExpr::Leaf(NormalLeaf {
                    kind,
                    perp: true,
                    crem: !crem,
                    secondary,
                })
            } else {
                NormalExpr::Leaf(NormalLeaf {
                    kind: base,
                    perp: false,
                    crem,
                    secondary,
                })
            }
        }
        BundleExpr::Triv(k) => NormalExpr::Triv(*k),
        BundleExpr::Wedge(p, x) => {
            if *p == 0 {
                NormalExpr::Triv(1)
            } else {
                NormalExpr::Wedge(*p, Box::new(norm(x, rd, field, dual, crem)?))
            }
        }
        BundleExpr::Sym(p, x) => {
            if *p == 0 {
                NormalExpr::Triv(1)
            } else {
                if dual {
                    let ch = field.characteristic();
                    if ch != 0 && (ch as usize) <= *p {
                        return Err(CoreError::Precondition(format!(
                            "dual of sym({p}, …) needs characteristic 0 or > {p}, \
                             but the field has characteristic {ch}"
                        )));
                    }
                }
                NormalExpr::Sym(*p, Box::new(norm(x, rd, field, dual, crem)?))
            }
        }
        BundleExpr::Det(x) => {
            let inner = norm(x, rd, field, dual, crem)?;
            let r = inner.rank(rd);
            if r == 0 {
                NormalExpr::Triv(1)
            } else {
                NormalExpr::Wedge(r, Box::new(inner))
            }
        }
        BundleExpr::Dual(x) => norm(x, rd, field, !dual, crem)?,
        BundleExpr::Crem(x) => norm(x, rd, field, dual, !crem)?,
        BundleExpr::Tensor(xs) => {
            let mut parts = Vec::new();
            for x in xs {
                parts.push(norm(x, rd, field, dual, crem)?);
            }
            match parts.len() {
                0 => NormalExpr::Triv(1),
                1 => parts.into_iter().next().unwrap(),
                _ => NormalExpr::Tensor(parts),
            }
        }
    })
}

/// Parse the expression language: `S`, `Q`, `O`, `O^3`, `wedge(2, Q)`,
/// `sym(3, S)`, `dual(...)`, `det(...)`, `crem(...)`, `tensor(a, b, ...)`,
/// and infix `*` for tensor products.
pub fn parse_expr(input: &str) -> Result<BundleExpr> {
    let mut p = Parser {
        tokens: tokenize(input)?,
        pos: 0,
    };
    let e = p.parse_expr()?;
    if p.pos != p.tokens.len() {
        return Err(CoreError::Input(format!(
            "unexpected trailing input near {:?}",
            p.tokens[p.pos]
        )));
    }
    Ok(e)
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Ident(String),
    Int(usize),
    LParen,
    RParen,
    Comma,
    Star,
    Caret,
}

fn tokenize(input: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' => {
                chars.next();
            }
            '(' => {
                chars.next();
                out.push(Tok::LParen);
            }
            ')' => {
                chars.next();
                out.push(Tok::RParen);
            }
            ',' => {
                chars.next();
                out.push(Tok::Comma);
            }
            '*' => {
                chars.next();
                out.push(Tok::Star);
            }
            '^' => {
                chars.next();
                out.push(Tok::Caret);
            }
            _ if c.is_ascii_digit() => {
                let mut v = 0usize;
                while let Some(&d) = chars.peek() {
                    if let Some(dv) = d.to_digit(10) {
                        v = v
                            .checked_mul(10)
                            .and_then(|v| v.checked_add(dv as usize))
                            .ok_or_else(|| CoreError::Input("integer too large".into()))?;
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Int(v));
            }
            _ if c.is_ascii_alphabetic() => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Ident(s));
            }
            _ => {
                return Err(CoreError::Input(format!(
                    "unexpected character {c:?} in bundle expression"
                )))
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Result<Tok> {
        let t = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| CoreError::Input("unexpected end of bundle expression".into()))?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        let t = self.next()?;
        if t != tok {
            return Err(CoreError::Input(format!("expected {tok:?}, found {t:?}")));
        }
        Ok(())
    }

    fn parse_expr(&mut self) -> Result<BundleExpr> {
        let mut parts = vec![self.parse_atom()?];
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            parts.push(self.parse_atom()?);
        }
        Ok(BundleExpr::tensor(parts))
    }

    fn parse_int(&mut self) -> Result<usize> {
        match self.next()? {
            Tok::Int(v) => Ok(v),
            other => Err(CoreError::Input(format!("expected an integer, found {other:?}"))),
        }
    }

    fn parse_atom(&mut self) -> Result<BundleExpr> {
        let t = self.next()?;
        let name = match t {
            Tok::Ident(s) => s,
            Tok::LParen => {
                let e = self.parse_expr()?;
                self.expect(Tok::RParen)?;
                return Ok(e);
            }
            other => {
                return Err(CoreError::Input(format!(
                    "expected a bundle name, found {other:?}"
                )))
            }
        };
        match name.to_ascii_lowercase().as_str() {
            "s" => Ok(BundleExpr::S),
            "q" => Ok(BundleExpr::Q),
            "s2" => Ok(BundleExpr::S2),
            "q2" => Ok(BundleExpr::Q2),
            "o" => {
                if self.peek() == Some(&Tok::Caret) {
                    self.pos += 1;
                    let k = self.parse_int()?;
                    Ok(BundleExpr::Triv(k))
                } else {
                    Ok(BundleExpr::Triv(1))
                }
            }
            "wedge" | "sym" => {
                self.expect(Tok::LParen)?;
                let p = self.parse_int()?;
                self.expect(Tok::Comma)?;
                let e = self.parse_expr()?;
                self.expect(Tok::RParen)?;
                Ok(if name.eq_ignore_ascii_case("wedge") {
                    BundleExpr::wedge(p, e)
                } else {
                    BundleExpr::sym(p, e)
                })
            }
            "dual" | "det" | "crem" => {
                self.expect(Tok::LParen)?;
                let e = self.parse_expr()?;
                self.expect(Tok::RParen)?;
                Ok(match name.to_ascii_lowercase().as_str() {
                    "dual" => BundleExpr::dual(e),
                    "det" => BundleExpr::det(e),
                    _ => BundleExpr::crem(e),
                })
            }
            "tensor" => {
                self.expect(Tok::LParen)?;
                let mut parts = vec![self.parse_expr()?];
                while self.peek() == Some(&Tok::Comma) {
                    self.pos += 1;
                    parts.push(self.parse_expr()?);
                }
                self.expect(Tok::RParen)?;
                Ok(BundleExpr::tensor(parts))
            }
            other => Err(CoreError::Input(format!("unknown bundle name {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rd24() -> RankData {
        RankData { n: 4, dim_l: 2, dim_l2: 0 }
    }

    #[test]
    fn parse_and_display() {
        let e = parse_expr("wedge(2, Q)").unwrap();
        assert_eq!(e, BundleExpr::wedge(2, BundleExpr::Q));
        assert_eq!(e.to_string(), "wedge(2, Q)");
        let e = parse_expr("sym(3, S) * O^2").unwrap();
        assert_eq!(
            e,
            BundleExpr::tensor(vec![
                BundleExpr::sym(3, BundleExpr::S),
                BundleExpr::Triv(2)
            ])
        );
        let e = parse_expr("det(dual(Q)) * crem(S)").unwrap();
        assert_eq!(e.to_string(), "det(dual(Q)) * crem(S)");
        assert!(parse_expr("wedge(2 Q)").is_err());
        assert!(parse_expr("frob(Q)").is_err());
        assert!(parse_expr("").is_err());
        // Round-trip through Display.
        for src in ["wedge(2, Q)", "sym(2, dual(S)) * O^3", "tensor(S, Q, O)"] {
            let e = parse_expr(src).unwrap();
            assert_eq!(parse_expr(&e.to_string()).unwrap(), e);
        }
    }

    #[test]
    fn normalization_eliminates_duals() {
        // dual(S) = crem Q(L^⊥).
        let n = normalize(&BundleExpr::dual(BundleExpr::S), rd24(), Field::Q).unwrap();
        assert_eq!(
            n,
            NormalExpr::Leaf(NormalLeaf {
                kind: LeafKind::Q,
                perp: true,
                crem: true,
                secondary: false
            })
        );
        // dual(dual(Q)) = Q.
        let n = normalize(
            &BundleExpr::dual(BundleExpr::dual(BundleExpr::Q)),
            rd24(),
            Field::Q,
        )
        .unwrap();
        assert_eq!(
            n,
            NormalExpr::Leaf(NormalLeaf {
                kind: LeafKind::Q,
                perp: false,
                crem: false,
                secondary: false
            })
        );
        // crem(dual(S)): the two Cremona twists cancel.
        let n = normalize(
            &BundleExpr::crem(BundleExpr::dual(BundleExpr::S)),
            rd24(),
            Field::Q,
        )
        .unwrap();
        assert_eq!(
            n,
            NormalExpr::Leaf(NormalLeaf {
                kind: LeafKind::Q,
                perp: true,
                crem: false,
                secondary: false
            })
        );
        // Dual distributes through wedge and tensor.
        let e = BundleExpr::dual(BundleExpr::tensor(vec![
            BundleExpr::wedge(2, BundleExpr::Q),
            BundleExpr::Triv(2),
        ]));
        let n = normalize(&e, rd24(), Field::Q).unwrap();
        assert_eq!(
            n,
            NormalExpr::Tensor(vec![
                NormalExpr::Wedge(
                    2,
                    Box::new(NormalExpr::Leaf(NormalLeaf {
                        kind: LeafKind::S,
                        perp: true,
                        crem: true,
                secondary: false
                    }))
                ),
                NormalExpr::Triv(2),
            ])
        );
    }

    #[test]
    fn sym_dual_guarded_in_low_characteristic() {
        let e = BundleExpr::dual(BundleExpr::sym(3, BundleExpr::Q));
        assert!(normalize(&e, rd24(), Field::Q).is_ok());
        assert!(normalize(&e, rd24(), Field::Fp(5)).is_ok());
        assert!(matches!(
            normalize(&e, rd24(), Field::Fp(3)),
            Err(CoreError::Precondition(_))
        ));
        assert!(matches!(
            normalize(&e, rd24(), Field::Fp(2)),
            Err(CoreError::Precondition(_))
        ));
        // Without the dual there is no restriction.
        let e = BundleExpr::sym(3, BundleExpr::Q);
        assert!(normalize(&e, rd24(), Field::Fp(2)).is_ok());
    }

    #[test]
    fn det_becomes_top_wedge_and_ranks() {
        let rd = rd24(); // n = 4, dim L = 2: rank S = rank Q = 2.
        let n = normalize(&BundleExpr::det(BundleExpr::Q), rd, Field::Q).unwrap();
        assert_eq!(n.rank(rd), 1);
        match &n {
            NormalExpr::Wedge(p, _) => assert_eq!(*p, 2),
            other => panic!("expected a wedge, got {other:?}"),
        }
        let w = normalize(&BundleExpr::wedge(3, BundleExpr::Q), rd, Field::Q).unwrap();
        assert_eq!(w.rank(rd), 0); // above the rank: the zero bundle
        let s = normalize(&BundleExpr::sym(2, BundleExpr::S), rd, Field::Q).unwrap();
        assert_eq!(s.rank(rd), 3);
        let t = normalize(
            &parse_expr("wedge(1, S) * wedge(1, Q) * O^3").unwrap(),
            rd,
            Field::Q,
        )
        .unwrap();
        assert_eq!(t.rank(rd), 12);
        // Perp leaves rank correctly: dual(S) has the rank of S.
        let d = normalize(&BundleExpr::dual(BundleExpr::S), rd, Field::Q).unwrap();
        assert_eq!(d.rank(rd), 2);
    }

    #[test]
    fn degrees_and_weights() {
        let rd = rd24();
        let e = normalize(&parse_expr("wedge(2, Q) * sym(3, S)").unwrap(), rd, Field::Q).unwrap();
        assert_eq!(e.signed_degree(), 5);
        assert_eq!(e.functor_weight(), 5);
        let e = normalize(&parse_expr("dual(wedge(2, Q))").unwrap(), rd, Field::Q).unwrap();
        assert_eq!(e.signed_degree(), -2);
        assert_eq!(e.functor_weight(), 2);
        let e = normalize(&parse_expr("O^5").unwrap(), rd, Field::Q).unwrap();
        assert_eq!(e.signed_degree(), 0);
        assert_eq!(e.functor_weight(), 0);
    }
}
