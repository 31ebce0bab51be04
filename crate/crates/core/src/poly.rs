//! Weighted multivariate polynomials over F_p.
//!
//! Every variable carries a positive weight; the monomial order is weighted
//! degree first with graded reverse lexicographic tie-breaking. Polynomials are
//! kept as term vectors sorted in decreasing order with no zero coefficients, so
//! structural equality is mathematical equality.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Matrix;

/// Upper bound on the number of ring variables.
pub const MAX_VARS: usize = 16;

/// Exponent vector with its weighted degree cached.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: i32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            exps: [0; MAX_VARS],
            deg: 0,
        }
    }

    pub fn from_exponents(exps: &[u16], weights: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::one();
        m.exps[..exps.len()].copy_from_slice(exps);
        m.deg = exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as i32 * w as i32)
            .sum();
        m
    }

    pub fn var(i: usize, weights: &[u32]) -> Self {
        let mut m = Monomial::one();
        m.exps[i] = 1;
        m.deg = weights[i] as i32;
        m
    }

    #[inline]
    pub fn degree(&self) -> i32 {
        self.deg
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] += other.exps[i];
        }
        out.deg += other.deg;
        out
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut out = *other;
        for i in 0..MAX_VARS {
            out.exps[i] -= self.exps[i];
        }
        out.deg -= self.deg;
        out
    }

    pub fn lcm(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let mut out = Monomial::one();
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].max(other.exps[i]);
        }
        out.deg = out
            .exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as i32 * w as i32)
            .sum();
        out
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Bitmask summary: for each variable, bits for exponent >= 1, 2, 4, 8.
    /// `a | b` implies `sev(a) & !sev(b) == 0`.
    #[inline]
    pub fn sev(&self) -> u64 {
        let mut s = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            let base = 4 * i;
            if e >= 1 {
                s |= 1 << base;
            }
            if e >= 2 {
                s |= 1 << (base + 1);
            }
            if e >= 4 {
                s |= 1 << (base + 2);
            }
            if e >= 8 {
                s |= 1 << (base + 3);
            }
        }
        s
    }

    /// Weighted degree first, then reverse lexicographic: the monomial with
    /// the smaller exponent in the last differing variable is larger.
    #[inline]
    pub fn cmp_order(&self, other: &Monomial) -> Ordering {
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..MAX_VARS).rev() {
            let (a, b) = (self.exps[i], other.exps[i]);
            if a != b {
                return b.cmp(&a);
            }
        }
        Ordering::Equal
    }

    /// Removes the largest power of variable `i` dividing the monomial.
    pub fn strip_var(&self, i: usize, weights: &[u32]) -> (Monomial, u16) {
        let mut out = *self;
        let e = out.exps[i];
        out.exps[i] = 0;
        out.deg -= e as i32 * weights[i] as i32;
        (out, e)
    }

    pub(crate) fn reweighted(&self, weights: &[u32]) -> Monomial {
        let n = weights.len();
        Monomial::from_exponents(&self.exps[..n], weights)
    }

    fn format(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, name) in names.iter().enumerate() {
            match self.exps[i] {
                0 => {}
                1 => parts.push(name.clone()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1);
        write!(f, "{:?}@{}", &self.exps[..last], self.deg)
    }
}

/// Graded polynomial ring `F_p[x_1, ..., x_n]` with variable weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: PrimeField,
    names: Vec<String>,
    weights: Vec<u32>,
}

impl PolyRing {
    pub fn new(p: u32, names: Vec<String>, weights: Vec<u32>) -> Result<Arc<Self>> {
        let field = PrimeField::new(p)?;
        if names.len() != weights.len() {
            return Err(Error::Shape("one weight per variable required".into()));
        }
        if names.len() > MAX_VARS {
            return Err(Error::Unsupported(format!(
                "{} variables (at most {MAX_VARS})",
                names.len()
            )));
        }
        if weights.contains(&0) {
            return Err(Error::Grading("variable weights must be positive".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || names[..i].contains(n) {
                return Err(Error::Parse(format!("bad or repeated variable name {n:?}")));
            }
        }
        Ok(Arc::new(PolyRing {
            field,
            names,
            weights,
        }))
    }

    /// Unweighted ring with the given names.
    pub fn standard(p: u32, names: &[&str]) -> Result<Arc<Self>> {
        Self::new(
            p,
            names.iter().map(|s| s.to_string()).collect(),
            vec![1; names.len()],
        )
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same ring with one extra variable of weight `weight` appended.
    pub fn extend(&self, name: &str, weight: u32) -> Result<Arc<Self>> {
        let mut names = self.names.clone();
        let mut weights = self.weights.clone();
        names.push(name.to_string());
        weights.push(weight);
        PolyRing::new(self.p(), names, weights)
    }

    pub fn monomial(&self, exps: &[u16]) -> Result<Monomial> {
        if exps.len() != self.nvars() {
            return Err(Error::Shape(format!(
                "{} exponents for {} variables",
                exps.len(),
                self.nvars()
            )));
        }
        Ok(Monomial::from_exponents(exps, &self.weights))
    }

    /// All monomials of weighted degree exactly `d`.
    pub fn monomials_of_degree(&self, d: i32) -> Vec<Monomial> {
        let mut out = Vec::new();
        if d < 0 {
            return out;
        }
        let mut exps = vec![0u16; self.nvars()];
        self.enumerate(0, d, &mut exps, &mut out);
        out
    }

    fn enumerate(&self, i: usize, remaining: i32, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i == self.nvars() {
            if remaining == 0 {
                out.push(Monomial::from_exponents(exps, &self.weights));
            }
            return;
        }
        let w = self.weights[i] as i32;
        let mut e = 0;
        while e * w <= remaining {
            exps[i] = e as u16;
            self.enumerate(i + 1, remaining - e * w, exps, out);
            e += 1;
        }
        exps[i] = 0;
    }
}

pub fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Polynomial with terms sorted in decreasing monomial order.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, u32)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: i64) -> Self {
        let c = ring.field.from_i64(c);
        Self::term(ring, Monomial::one(), c)
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        Self::term(ring, Monomial::var(i, &ring.weights), 1)
    }

    pub fn term(ring: &Arc<PolyRing>, m: Monomial, c: u32) -> Self {
        let c = c % ring.p();
        let terms = if c == 0 { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds from unsorted terms, combining duplicates.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<(Monomial, u32)>) -> Self {
        let f = ring.field;
        terms.sort_by(|a, b| b.0.cmp_order(&a.0));
        let mut out: Vec<(Monomial, u32)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = c % f.p();
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = f.add(last.1, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Trusts the caller that terms are sorted, distinct and nonzero.
    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing>, terms: Vec<(Monomial, u32)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0.cmp_order(&w[1].0) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, u32)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading(&self) -> Option<&(Monomial, u32)> {
        self.terms.first()
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.add_scaled(other, 1, &Monomial::one()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.add_scaled(other, self.ring.field.neg(1), &Monomial::one()))
    }

    /// `self + c * m * other`, merging sorted term lists.
    pub(crate) fn add_scaled(&self, other: &Self, c: u32, m: &Monomial) -> Self {
        let f = self.ring.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|(om, oc)| (om.mul(m), f.mul(*oc, c)))
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(*a.next().unwrap()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match x.0.cmp_order(&y.0) {
                    Ordering::Greater => out.push(*a.next().unwrap()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let s = f.add(x.1, y.1);
                        let mono = x.0;
                        a.next();
                        b.next();
                        if s != 0 {
                            out.push((mono, s));
                        }
                    }
                },
            }
        }
        out.retain(|t| t.1 != 0);
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(self.ring.field.neg(1))
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = self.ring.field;
        let c = c % f.p();
        if c == 0 {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|&(m, a)| (m, f.mul(a, c))).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: u32) -> Self {
        let f = self.ring.field;
        if c % f.p() == 0 {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|&(tm, a)| (tm.mul(m), f.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Self::zero(&self.ring);
        for (m, c) in &small.terms {
            acc = acc.add_scaled(large, *c, m);
        }
        Ok(acc)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        acc
    }

    /// Common weighted degree of all terms; `Ok(None)` if the polynomial is not
    /// homogeneous.
    pub fn weighted_degree(&self) -> Result<Option<i32>> {
        let Some((lead, _)) = self.terms.first() else {
            return Err(Error::ZeroPolynomial);
        };
        let d = lead.degree();
        Ok(self.terms.iter().all(|(m, _)| m.degree() == d).then_some(d))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || matches!(self.weighted_degree(), Ok(Some(_)))
    }

    /// Largest weighted degree among the terms.
    pub fn max_degree(&self) -> Option<i32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Evaluation at a point with coordinates in F_p.
    pub fn specialize(&self, point: &[u32]) -> Result<u32> {
        if point.len() != self.ring.nvars() {
            return Err(Error::Shape(format!(
                "point of length {} for {} variables",
                point.len(),
                self.ring.nvars()
            )));
        }
        let f = self.ring.field;
        let mut total = 0;
        for (m, c) in &self.terms {
            let mut v = *c;
            for (i, &x) in point.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    v = f.mul(v, f.pow(x % f.p(), e as u64));
                }
            }
            total = f.add(total, v);
        }
        Ok(total)
    }

    /// Rewrites the polynomial in a ring with at least as many variables, keeping
    /// variable positions.
    pub fn embed(&self, target: &Arc<PolyRing>) -> Result<Self> {
        if target.p() != self.ring.p() || target.nvars() < self.ring.nvars() {
            return Err(Error::RingMismatch);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.reweighted(target.weights()), *c))
            .collect();
        Ok(Self::from_terms(target, terms))
    }

    /// Division with remainder by a single divisor under the ring order.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        self.check_ring(d)?;
        let Some(&(dm, dc)) = d.terms.first() else {
            return Err(Error::DivisionByZero);
        };
        let f = self.ring.field;
        let dinv = f.inv(dc);
        let mut q = Vec::new();
        let mut rem = Vec::new();
        let mut cur = self.clone();
        while let Some(&(m, c)) = cur.terms.first() {
            if dm.divides(&m) {
                let qm = dm.quotient_of(&m);
                let qc = f.mul(c, dinv);
                q.push((qm, qc));
                cur = cur.add_scaled(d, f.neg(qc), &qm);
            } else {
                rem.push((m, c));
                cur.terms.remove(0);
            }
        }
        Ok((
            Self::from_terms(&self.ring, q),
            Self::from_sorted_terms(&self.ring, rem),
        ))
    }

    /// Exact quotient, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Result<Option<Self>> {
        let (q, r) = self.div_rem(d)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some(&(_, c)) => self.scale(self.ring.field.inv(c)),
        }
    }

    pub fn parse(ring: &Arc<PolyRing>, s: &str) -> Result<Self> {
        Parser::new(ring, s).parse()
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let mono = m.format(&self.ring.names);
            match (mono.is_empty(), *c) {
                (true, c) => write!(f, "{c}")?,
                (false, 1) => write!(f, "{mono}")?,
                (false, c) => write!(f, "{c}*{mono}")?,
            }
        }
        Ok(())
    }
}

/// Recursive-descent parser for `+ - * ^ ( )` expressions over the ring's
/// variable names and integer literals.
struct Parser<'a> {
    ring: &'a Arc<PolyRing>,
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(ring: &'a Arc<PolyRing>, src: &'a str) -> Self {
        Parser {
            ring,
            src,
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<Polynomial> {
        let e = self.expr()?;
        if self.peek().is_some() {
            return Err(self.err("trailing input"));
        }
        Ok(e)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?)?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = acc.mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            return Ok(base.pow(e as u32));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("integer overflow"))
    }

    fn base(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some('-') => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                let p = self.ring.p() as u64;
                Ok(Polynomial::constant(self.ring, (v % p) as i64))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let i = self
                    .ring
                    .var_index(&name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
                Ok(Polynomial::var(self.ring, i))
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

/// Rank over the fraction field of the ambient polynomial ring, by fraction-free
/// (Bareiss) elimination with column skipping.
pub fn generic_rank(entries: &[Vec<Polynomial>]) -> Result<usize> {
    let rows = entries.len();
    if rows == 0 {
        return Ok(0);
    }
    let cols = entries[0].len();
    if entries.iter().any(|r| r.len() != cols) {
        return Err(Error::Shape("ragged polynomial matrix".into()));
    }
    let ring = entries[0]
        .first()
        .map(|p| p.ring().clone())
        .ok_or_else(|| Error::Shape("empty row".into()))?;
    if entries.iter().flatten().any(|p| !same_ring(p.ring(), &ring)) {
        return Err(Error::RingMismatch);
    }
    let mut m: Vec<Vec<Polynomial>> = entries.to_vec();
    let mut prev = Polynomial::one(&ring);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(piv, r);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = m[r][c].mul(&m[i][j])?.sub(&m[i][c].mul(&m[r][j])?)?;
                m[i][j] = num.div_exact(&prev)?.ok_or_else(|| {
                    Error::InternalInvariantViolation("inexact Bareiss division".into())
                })?;
            }
            m[i][c] = Polynomial::zero(&ring);
        }
        prev = m[r][c].clone();
        r += 1;
    }
    Ok(r)
}

/// Product of two polynomial matrices given as rows.
pub fn poly_matmul(a: &[Vec<Polynomial>], b: &[Vec<Polynomial>]) -> Result<Vec<Vec<Polynomial>>> {
    let inner = a.first().map_or(0, |r| r.len());
    if inner != b.len() {
        return Err(Error::Shape(format!("inner dimensions {inner} and {}", b.len())));
    }
    let Some(ring) = a.iter().flatten().next().map(|p| p.ring().clone()) else {
        return Ok(vec![Vec::new(); a.len()]);
    };
    let cols = b.first().map_or(0, |r| r.len());
    let mut out = Vec::with_capacity(a.len());
    for row in a {
        let mut out_row = Vec::with_capacity(cols);
        for j in 0..cols {
            let mut acc = Polynomial::zero(&ring);
            for (k, x) in row.iter().enumerate() {
                if !x.is_zero() && !b[k][j].is_zero() {
                    acc = acc.add(&x.mul(&b[k][j])?)?;
                }
            }
            out_row.push(acc);
        }
        out.push(out_row);
    }
    Ok(out)
}

/// Evaluates every entry of a polynomial matrix at a point.
pub fn specialize_matrix(entries: &[Vec<Polynomial>], point: &[u32], field: PrimeField) -> Result<Matrix> {
    let rows = entries.len();
    let cols = entries.first().map_or(0, |r| r.len());
    let mut m = Matrix::zeros(field, rows, cols);
    for (i, row) in entries.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            m.set(i, j, e.specialize(point)?);
        }
    }
    Ok(m)
}
