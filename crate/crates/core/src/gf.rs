//! Generating functions attached to a matroid: the Tutte polynomial, the
//! global-section generating functions of exterior and symmetric powers of
//! the tautological bundles, no-broken-circuit counts, and the log-canonical
//! section count.
//!
//! Each quantity is computed by at least two independent routes (closed form,
//! deletion–contraction recursion, subset enumeration, Tutte specialization);
//! the verification suites insist that all routes agree.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::binomial_big;
use crate::error::{CoreError, Result};
use crate::matroid::Matroid;

/// A univariate polynomial with integer coefficients, sparse by exponent.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PolyU {
    coeffs: BTreeMap<usize, BigInt>,
}

impl PolyU {
    /// The zero polynomial.
    pub fn zero() -> PolyU {
        PolyU::default()
    }

    /// The constant 1.
    pub fn one() -> PolyU {
        PolyU::monomial(0, BigInt::one())
    }

    /// c·u^e.
    pub fn monomial(e: usize, c: BigInt) -> PolyU {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        PolyU { coeffs }
    }

    /// The polynomial u + 1.
    pub fn u_plus_one() -> PolyU {
        let mut p = PolyU::one();
        p.add_term(1, BigInt::one());
        p
    }

    /// Add c·u^e in place.
    pub fn add_term(&mut self, e: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    /// Polynomial sum.
    pub fn add(&self, other: &PolyU) -> PolyU {
        let mut out = self.clone();
        for (&e, c) in &other.coeffs {
            out.add_term(e, c.clone());
        }
        out
    }

    /// Polynomial product.
    pub fn mul(&self, other: &PolyU) -> PolyU {
        let mut out = PolyU::zero();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &other.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Coefficient of u^e (zero when absent).
    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    /// Is this the zero polynomial?
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Sparse coefficient view.
    pub fn terms(&self) -> &BTreeMap<usize, BigInt> {
        &self.coeffs
    }

    /// Exponent → coefficient map with string values, for JSON output.
    pub fn to_string_map(&self) -> BTreeMap<usize, String> {
        self.coeffs.iter().map(|(&e, c)| (e, c.to_string())).collect()
    }

    /// Dense coefficient list 0..=deg (empty for zero).
    pub fn dense(&self) -> Vec<BigInt> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|e| self.coeff(e)).collect(),
        }
    }
}

impl std::fmt::Display for PolyU {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in self.coeffs.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "u")?,
                1 => write!(f, "{c}*u")?,
                _ if c.is_one() => write!(f, "u^{e}")?,
                _ => write!(f, "{c}*u^{e}")?,
            }
        }
        Ok(())
    }
}

/// A bivariate polynomial in x and y with integer coefficients, sparse by
/// exponent pair; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PolyXY {
    coeffs: BTreeMap<(usize, usize), BigInt>,
}

impl PolyXY {
    /// The zero polynomial.
    pub fn zero() -> PolyXY {
        PolyXY::default()
    }

    /// c·x^a·y^b.
    pub fn monomial(a: usize, b: usize, c: BigInt) -> PolyXY {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert((a, b), c);
        }
        PolyXY { coeffs }
    }

    /// Add c·x^a·y^b in place.
    pub fn add_term(&mut self, a: usize, b: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry((a, b)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&(a, b));
        }
    }

    /// Polynomial sum.
    pub fn add(&self, other: &PolyXY) -> PolyXY {
        let mut out = self.clone();
        for (&(a, b), c) in &other.coeffs {
            out.add_term(a, b, c.clone());
        }
        out
    }

    /// Coefficient of x^a y^b.
    pub fn coeff(&self, a: usize, b: usize) -> BigInt {
        self.coeffs
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Sparse coefficient view.
    pub fn terms(&self) -> &BTreeMap<(usize, usize), BigInt> {
        &self.coeffs
    }

    /// Exponent-pair → coefficient map with string values, for JSON output.
    pub fn to_string_map(&self) -> BTreeMap<String, String> {
        self.coeffs
            .iter()
            .map(|(&(a, b), c)| (format!("x^{a} y^{b}"), c.to_string()))
            .collect()
    }

    /// Evaluate at integers.
    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (&(a, b), c) in &self.coeffs {
            acc += c * x.pow(a as u32) * y.pow(b as u32);
        }
        acc
    }
}

impl std::fmt::Display for PolyXY {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b), c) in self.coeffs.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if a == 0 && b == 0 {
                write!(f, "{c}")?;
                continue;
            }
            if !c.is_one() {
                write!(f, "{c}*")?;
            }
            match (a, b) {
                (0, _) => {}
                (1, _) => write!(f, "x")?,
                _ => write!(f, "x^{a}")?,
            }
            if a > 0 && b > 0 {
                write!(f, "*")?;
            }
            match (a, b) {
                (_, 0) => {}
                (_, 1) => write!(f, "y")?,
                _ => write!(f, "y^{b}")?,
            }
        }
        Ok(())
    }
}

/// A truncated power series: coefficients of u^0 … u^precision.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// From explicit coefficients; the precision is `coeffs.len() − 1`.
    pub fn new(coeffs: Vec<BigInt>) -> TruncatedSeries {
        TruncatedSeries { coeffs }
    }

    /// From machine integers.
    pub fn from_i64(coeffs: &[i64]) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    /// Coefficient list.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Highest retained degree.
    pub fn precision(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }
}

/// Which route computes the Tutte polynomial.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TutteRoute {
    /// Deletion–contraction with memoization.
    Recursion,
    /// The corank–nullity subset sum Σ_S (x−1)^{r−rk S} (y−1)^{|S|−rk S}.
    CorankNullity,
}

/// Which route computes a bundle generating function.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GfRoute {
    /// The closed-form product.
    Closed,
    /// Element-by-element recursion.
    Recursion,
}

/// Routes for the exterior-power quotient generating function.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExtQRoute {
    /// Σ over spanning subsets S of u^{n−|S|}.
    SpanningEnum,
    /// Element-by-element recursion (loop / coloop / generic).
    Recursion,
    /// The Tutte specialization u^{n−r}·T(1, 1 + u^{−1}), expanded
    /// symbolically.
    Tutte,
}

/// The Tutte polynomial of a matroid by the requested route.
pub fn tutte(m: &Matroid, route: TutteRoute) -> PolyXY {
    match route {
        TutteRoute::CorankNullity => tutte_corank_nullity(m),
        TutteRoute::Recursion => {
            let mut memo = HashMap::new();
            tutte_rec(m, &mut memo)
        }
    }
}

fn tutte_corank_nullity(m: &Matroid) -> PolyXY {
    let n = m.n();
    let r = m.rank();
    let mut acc = PolyXY::zero();
    for s in 0u32..(1u32 << n) {
        let rk = m.rank_of(s);
        let corank = r - rk;
        let nullity = s.count_ones() as usize - rk;
        // (x−1)^corank (y−1)^nullity expanded by binomials.
        for i in 0..=corank {
            for j in 0..=nullity {
                let sign = if (corank - i + nullity - j).is_multiple_of(2) {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                acc.add_term(
                    i,
                    j,
                    sign * binomial_big(corank, i) * binomial_big(nullity, j),
                );
            }
        }
    }
    acc
}

type TutteMemo = HashMap<(usize, Vec<u32>), PolyXY>;

fn tutte_rec(m: &Matroid, memo: &mut TutteMemo) -> PolyXY {
    if m.n() == 0 {
        return PolyXY::monomial(0, 0, BigInt::one());
    }
    let key = (m.n(), m.bases().iter().copied().collect::<Vec<_>>());
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    // Remove the largest element that is neither a loop nor a coloop; if all
    // elements are loops or coloops the polynomial is x^#coloops y^#loops.
    let pick = (0..m.n())
        .rev()
        .find(|&e| !m.is_loop(e) && !m.is_coloop(e));
    let result = match pick {
        None => PolyXY::monomial(m.coloops().len(), m.loops().len(), BigInt::one()),
        Some(e) => tutte_rec(&m.delete(e), memo).add(&tutte_rec(&m.contract(e), memo)),
    };
    memo.insert(key, result.clone());
    result
}

/// Generating function Σ_p h⁰(∧^p S)·u^p of the tautological subbundle's
/// exterior powers: closed form (u+1)^#coloops, or the contraction recursion
/// that mirrors the pushforward along the last element.
pub fn ext_s_gf(m: &Matroid, route: GfRoute) -> PolyU {
    match route {
        GfRoute::Closed => {
            let mut acc = PolyU::one();
            for _ in m.coloops() {
                acc = acc.mul(&PolyU::u_plus_one());
            }
            acc
        }
        GfRoute::Recursion => {
            if m.n() == 0 {
                return PolyU::one();
            }
            let e = m.n() - 1;
            let rest = ext_s_gf(&m.contract(e), GfRoute::Recursion);
            if m.is_coloop(e) {
                rest.mul(&PolyU::u_plus_one())
            } else {
                rest
            }
        }
    }
}

/// Generating function Σ_p h⁰(∧^p Q)·u^p of the tautological quotient
/// bundle's exterior powers, by the requested route.
pub fn ext_q_gf(m: &Matroid, route: ExtQRoute) -> Result<PolyU> {
    match route {
        ExtQRoute::SpanningEnum => {
            let n = m.n();
            let r = m.rank();
            let mut acc = PolyU::zero();
            for s in 0u32..(1u32 << n) {
                if m.rank_of(s) == r {
                    acc.add_term(n - s.count_ones() as usize, BigInt::one());
                }
            }
            Ok(acc)
        }
        ExtQRoute::Recursion => Ok(ext_q_rec(m)),
        ExtQRoute::Tutte => ext_q_tutte(m),
    }
}

fn ext_q_rec(m: &Matroid) -> PolyU {
    if m.n() == 0 {
        return PolyU::one();
    }
    let e = m.n() - 1;
    if m.is_loop(e) {
        ext_q_rec(&m.delete(e)).mul(&PolyU::u_plus_one())
    } else if m.is_coloop(e) {
        ext_q_rec(&m.contract(e))
    } else {
        let del = ext_q_rec(&m.delete(e)).mul(&PolyU::monomial(1, BigInt::one()));
        del.add(&ext_q_rec(&m.contract(e)))
    }
}

/// Expand u^{n−r}·T(1, 1 + 1/u) symbolically: write T(1, 1+v) as a
/// polynomial in v, whose v^k coefficient lands on u^{n−r−k}.
fn ext_q_tutte(m: &Matroid) -> Result<PolyU> {
    let t = tutte(m, TutteRoute::Recursion);
    let nullity = m.n() - m.rank();
    // T(1, y): sum coefficients over x-degree; then substitute y = 1 + v.
    let mut in_v: BTreeMap<usize, BigInt> = BTreeMap::new();
    for (&(_, b), c) in t.terms() {
        // y^b = (1+v)^b = Σ_k C(b,k) v^k.
        for k in 0..=b {
            *in_v.entry(k).or_insert_with(BigInt::zero) += c * binomial_big(b, k);
        }
    }
    let mut acc = PolyU::zero();
    for (k, c) in in_v {
        if c.is_zero() {
            continue;
        }
        if k > nullity {
            return Err(CoreError::Internal(format!(
                "Tutte specialization has v-degree {k} above the nullity {nullity}"
            )));
        }
        acc.add_term(nullity - k, c);
    }
    Ok(acc)
}

/// Truncated generating function Σ_p h⁰(Sym^p Q)·u^p, which is the expansion
/// of (1−u)^{−(n−#coloops)}: coefficient of u^p is C(n−c−1+p, p).
pub fn sym_q_gf(m: &Matroid, precision: usize) -> TruncatedSeries {
    let d = m.n() - m.coloops().len();
    let coeffs = (0..=precision)
        .map(|p| {
            if d == 0 {
                if p == 0 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            } else {
                binomial_big(d - 1 + p, p)
            }
        })
        .collect();
    TruncatedSeries::new(coeffs)
}

/// Number of basis-sized subsets containing no broken circuit, where a
/// broken circuit is a circuit minus its smallest element in the given
/// elimination order (a permutation of the ground set; position = priority).
pub fn nbc_count_with_order(m: &Matroid, order: &[usize]) -> BigInt {
    assert_eq!(order.len(), m.n(), "order must list every element");
    let mut priority = vec![0usize; m.n()];
    for (i, &e) in order.iter().enumerate() {
        priority[e] = i;
    }
    let broken: Vec<u32> = m
        .circuits()
        .into_iter()
        .map(|c| {
            let min = crate::matroid::mask_elements(c)
                .into_iter()
                .min_by_key(|&e| priority[e])
                .expect("circuits are nonempty");
            c & !(1 << min)
        })
        .collect();
    let r = m.rank();
    let mut count = BigInt::zero();
    for s in crate::combinat::subsets_colex(m.n(), r) {
        let mask = crate::matroid::mask_of(&s);
        if broken.iter().all(|&bc| bc & mask != bc) {
            count += 1;
        }
    }
    count
}

/// No-broken-circuit count in the natural element order.
pub fn nbc_count(m: &Matroid) -> BigInt {
    let order: Vec<usize> = (0..m.n()).collect();
    nbc_count_with_order(m, &order)
}

/// The log-canonical section count Σ over spanning S of (−1)^{|S|−r}; equal
/// to T(1,0) and to the no-broken-circuit count.
pub fn log_canonical_number(m: &Matroid) -> BigInt {
    let n = m.n();
    let r = m.rank();
    let mut acc = BigInt::zero();
    for s in 0u32..(1u32 << n) {
        if m.rank_of(s) == r {
            if (s.count_ones() as usize - r).is_multiple_of(2) {
                acc += 1;
            } else {
                acc -= 1;
            }
        }
    }
    acc
}
