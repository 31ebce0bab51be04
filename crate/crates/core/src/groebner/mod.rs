//! Gröbner bases for ideals and graded submodules of free modules.
//!
//! Module elements are sparse [`Vector`]s of `(component, monomial)` terms under
//! a position-over-term order in which a lower component index is larger. All
//! quotient-ring arithmetic is emulated in the ambient polynomial ring: the
//! defining ideal `I` of a [`RingPresentation`] is adjoined to every component
//! of every relation set.

mod engine;
mod module;

use std::cmp::Ordering;
use std::sync::Arc;

use crate::field::PrimeField;
use crate::poly::{Monomial, PolyRing, Polynomial};

pub use engine::GroebnerBasis;
pub use module::{
    annihilator, determinant, fitting_ideal, radical_membership, syzygies, RingPresentation,
    Submodule,
};

/// A monomial placed in a component of a free module.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Term {
    pub comp: u32,
    pub mono: Monomial,
}

impl Term {
    pub fn new(comp: u32, mono: Monomial) -> Self {
        Term { comp, mono }
    }

    /// Position over term, lower component index first.
    #[inline]
    pub fn cmp_pot(&self, other: &Term) -> Ordering {
        match other.comp.cmp(&self.comp) {
            Ordering::Equal => self.mono.cmp_order(&other.mono),
            o => o,
        }
    }

    #[inline]
    pub fn divides(&self, other: &Term) -> bool {
        self.comp == other.comp && self.mono.divides(&other.mono)
    }
}

/// Sparse element of a free module, terms sorted decreasingly, no zero
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Vector {
    terms: Vec<(Term, u32)>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    /// Sorts and combines arbitrary terms.
    pub fn from_terms(field: PrimeField, mut terms: Vec<(Term, u32)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp_pot(&a.0));
        let mut out: Vec<(Term, u32)> = Vec::with_capacity(terms.len());
        for (t, c) in terms {
            let c = c % field.p();
            match out.last_mut() {
                Some(last) if last.0 == t => last.1 = field.add(last.1, c),
                _ => out.push((t, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Vector { terms: out }
    }

    pub(crate) fn from_sorted(terms: Vec<(Term, u32)>) -> Self {
        Vector { terms }
    }

    pub fn from_poly(f: &Polynomial, comp: u32) -> Self {
        Vector {
            terms: f
                .terms()
                .iter()
                .map(|&(m, c)| (Term::new(comp, m), c))
                .collect(),
        }
    }

    /// Column vector with the given entries in components `0..entries.len()`.
    pub fn from_entries(entries: &[Polynomial]) -> Self {
        let mut terms = Vec::new();
        for (k, f) in entries.iter().enumerate() {
            terms.extend(f.terms().iter().map(|&(m, c)| (Term::new(k as u32, m), c)));
        }
        Vector { terms }
    }

    /// Standard basis vector `e_comp`.
    pub fn unit(comp: u32) -> Self {
        Vector {
            terms: vec![(Term::new(comp, Monomial::one()), 1)],
        }
    }

    pub fn terms(&self) -> &[(Term, u32)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Term, u32)> {
        self.terms.first()
    }

    /// Homogeneous degree of the leading term given the ambient generator degrees.
    pub fn degree(&self, degrees: &[i32]) -> Option<i32> {
        self.lead()
            .map(|(t, _)| t.mono.degree() + degrees[t.comp as usize])
    }

    pub fn is_homogeneous(&self, degrees: &[i32]) -> bool {
        match self.degree(degrees) {
            None => true,
            Some(d) => self
                .terms
                .iter()
                .all(|(t, _)| t.mono.degree() + degrees[t.comp as usize] == d),
        }
    }

    pub fn max_comp(&self) -> Option<u32> {
        self.terms.iter().map(|(t, _)| t.comp).max()
    }

    /// `self + c * m * other`.
    pub fn add_scaled(&self, other: &Vector, c: u32, m: &Monomial, field: PrimeField) -> Vector {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|(t, oc)| (Term::new(t.comp, t.mono.mul(m)), field.mul(*oc, c)))
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(*a.next().unwrap()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match x.0.cmp_pot(&y.0) {
                    Ordering::Greater => out.push(*a.next().unwrap()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let s = field.add(x.1, y.1);
                        let t = x.0;
                        a.next();
                        b.next();
                        if s != 0 {
                            out.push((t, s));
                        }
                    }
                },
            }
        }
        out.retain(|t| t.1 != 0);
        Vector { terms: out }
    }

    pub fn add(&self, other: &Vector, field: PrimeField) -> Vector {
        self.add_scaled(other, 1, &Monomial::one(), field)
    }

    pub fn sub(&self, other: &Vector, field: PrimeField) -> Vector {
        self.add_scaled(other, field.neg(1), &Monomial::one(), field)
    }

    pub fn scale(&self, c: u32, field: PrimeField) -> Vector {
        self.mul_term(&Monomial::one(), c, field)
    }

    pub fn mul_term(&self, m: &Monomial, c: u32, field: PrimeField) -> Vector {
        let c = c % field.p();
        if c == 0 {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|&(t, a)| (Term::new(t.comp, t.mono.mul(m)), field.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul_poly(&self, f: &Polynomial) -> Vector {
        let field = f.ring().field();
        let mut acc = Vector::zero();
        for (m, c) in f.terms() {
            acc = acc.add_scaled(self, *c, m, field);
        }
        acc
    }

    pub fn monic(&self, field: PrimeField) -> Vector {
        match self.lead() {
            None => self.clone(),
            Some(&(_, c)) => self.scale(field.inv(c), field),
        }
    }

    /// Entry in component `comp` as a polynomial.
    pub fn entry(&self, comp: u32, ring: &Arc<PolyRing>) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(t, _)| t.comp == comp)
            .map(|&(t, c)| (t.mono, c))
            .collect();
        Polynomial::from_sorted_terms(ring, terms)
    }

    pub fn to_entries(&self, rank: usize, ring: &Arc<PolyRing>) -> Vec<Polynomial> {
        (0..rank as u32).map(|k| self.entry(k, ring)).collect()
    }

    /// Moves every component up by `offset`.
    pub fn shift(&self, offset: u32) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|&(t, c)| (Term::new(t.comp + offset, t.mono), c))
                .collect(),
        }
    }

    /// Keeps components in `lo..hi`, renumbered from zero.
    pub fn restrict(&self, lo: u32, hi: u32) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .filter(|(t, _)| t.comp >= lo && t.comp < hi)
                .map(|&(t, c)| (Term::new(t.comp - lo, t.mono), c))
                .collect(),
        }
    }

    /// Entries evaluated at a point.
    pub fn specialize(&self, rank: usize, point: &[u32], field: PrimeField) -> Vec<u32> {
        let mut out = vec![0u32; rank];
        for (t, c) in &self.terms {
            let mut v = *c;
            for (i, &x) in point.iter().enumerate() {
                let e = t.mono.exp(i);
                if e > 0 {
                    v = field.mul(v, field.pow(x % field.p(), e as u64));
                }
            }
            let k = t.comp as usize;
            out[k] = field.add(out[k], v);
        }
        out
    }

    /// Text form `[f_0, f_1, ...]` with canonical polynomial entries.
    pub fn format(&self, rank: usize, ring: &Arc<PolyRing>) -> String {
        let entries: Vec<String> = self
            .to_entries(rank, ring)
            .iter()
            .map(|e| e.to_string())
            .collect();
        format!("[{}]", entries.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pot_order_prefers_low_components() {
        let w = [1u32, 1];
        let x = Monomial::var(0, &w);
        let a = Term::new(0, Monomial::one());
        let b = Term::new(1, x.mul(&x));
        assert_eq!(a.cmp_pot(&b), Ordering::Greater);
        assert_eq!(Term::new(1, x).cmp_pot(&Term::new(1, Monomial::one())), Ordering::Greater);
    }

    #[test]
    fn restrict_and_shift_roundtrip() {
        let r = PolyRing::standard(5, &["x", "y"]).unwrap();
        let f = Polynomial::parse(&r, "x+2*y").unwrap();
        let g = Polynomial::parse(&r, "y^2").unwrap();
        let v = Vector::from_entries(&[f.clone(), g.clone()]);
        assert_eq!(v.shift(3).restrict(3, 5), v);
        assert_eq!(v.restrict(1, 2), Vector::from_poly(&g, 0));
        assert_eq!(v.entry(0, &r), f);
        let two = v.add(&v, r.field());
        assert_eq!(two, v.scale(2, r.field()));
        assert!(v.sub(&v, r.field()).is_zero());
    }
}
