//! Buchberger's algorithm with the Gebauer–Möller installation of the
//! Buchberger criteria and the normal (sugar) selection strategy.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use super::{Term, Vector};
use crate::field::PrimeField;
use crate::poly::{Monomial, PolyRing};

#[derive(Clone, Copy, PartialEq, Eq)]
struct Key(Term);

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp_pot(&other.0)
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Monic divisors indexed by component, with divisibility masks.
#[derive(Clone, Debug)]
pub(crate) struct Reducer {
    field: PrimeField,
    elems: Vec<Vector>,
    leads: Vec<Term>,
    sevs: Vec<u64>,
    by_comp: Vec<Vec<usize>>,
}

impl Reducer {
    pub(crate) fn new(field: PrimeField) -> Self {
        Reducer {
            field,
            elems: Vec::new(),
            leads: Vec::new(),
            sevs: Vec::new(),
            by_comp: Vec::new(),
        }
    }

    /// Adds a nonzero element, normalized to be monic.
    pub(crate) fn push(&mut self, v: Vector) -> usize {
        let v = v.monic(self.field);
        let lead = v.lead().expect("nonzero reducer").0;
        let idx = self.elems.len();
        let comp = lead.comp as usize;
        if self.by_comp.len() <= comp {
            self.by_comp.resize(comp + 1, Vec::new());
        }
        self.by_comp[comp].push(idx);
        self.sevs.push(lead.mono.sev());
        self.leads.push(lead);
        self.elems.push(v);
        idx
    }

    #[inline]
    fn find_divisor(&self, t: &Term) -> Option<usize> {
        let list = self.by_comp.get(t.comp as usize)?;
        let sev = t.mono.sev();
        list.iter().copied().find(|&i| {
            self.sevs[i] & !sev == 0
                && self.leads[i].mono.divides(&t.mono)
        })
    }

    /// Normal form; with `full` unset only the leading term is reduced.
    pub(crate) fn reduce(&self, v: Vector, full: bool) -> Vector {
        let f = self.field;
        let mut acc: BTreeMap<Key, u32> = v.terms.into_iter().map(|(t, c)| (Key(t), c)).collect();
        let mut out = Vec::new();
        while let Some((Key(t), c)) = acc.pop_last() {
            match self.find_divisor(&t) {
                Some(i) => {
                    let g = &self.elems[i];
                    let q = self.leads[i].mono.quotient_of(&t.mono);
                    let coef = f.neg(c);
                    for &(gt, gc) in &g.terms[1..] {
                        let key = Key(Term::new(gt.comp, gt.mono.mul(&q)));
                        let add = f.mul(gc, coef);
                        match acc.entry(key) {
                            Entry::Occupied(mut e) => {
                                let s = f.add(*e.get(), add);
                                if s == 0 {
                                    e.remove();
                                } else {
                                    *e.get_mut() = s;
                                }
                            }
                            Entry::Vacant(e) => {
                                e.insert(add);
                            }
                        }
                    }
                }
                None => {
                    out.push((t, c));
                    if !full {
                        out.extend(acc.into_iter().rev().map(|(Key(t), c)| (t, c)));
                        break;
                    }
                }
            }
        }
        Vector::from_sorted(out)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Pair {
    sugar: i32,
    lcm: Term,
    i: usize,
    j: usize,
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sugar
            .cmp(&other.sugar)
            .then_with(|| self.lcm.cmp_pot(&other.lcm))
            .then_with(|| self.i.cmp(&other.i))
            .then_with(|| self.j.cmp(&other.j))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Options {
    /// Return `[1]` as soon as a nonzero constant appears (rank one only).
    pub stop_on_unit: bool,
}

struct Engine<'a> {
    weights: &'a [u32],
    red: Reducer,
    sugar: Vec<i32>,
    active: Vec<bool>,
    pairs: BTreeSet<Pair>,
    rank_one: bool,
}

fn sugar_of(v: &Vector, degrees: &[i32]) -> i32 {
    v.terms()
        .iter()
        .map(|(t, _)| t.mono.degree() + degrees[t.comp as usize])
        .max()
        .unwrap_or(0)
}

impl<'a> Engine<'a> {
    fn insert(&mut self, v: Vector, sugar: i32) -> usize {
        let h = self.red.push(v);
        self.sugar.push(sugar);
        self.active.push(false);
        h
    }

    fn update(&mut self, h: usize) {
        let lh = self.red.leads[h];
        let cands: Vec<usize> = self.red.by_comp[lh.comp as usize]
            .iter()
            .copied()
            .filter(|&g| g != h && self.active[g])
            .collect();
        let lcms: Vec<Monomial> = cands
            .iter()
            .map(|&g| self.red.leads[g].mono.lcm(&lh.mono, self.weights))
            .collect();
        let coprime: Vec<bool> = cands
            .iter()
            .map(|&g| self.rank_one && self.red.leads[g].mono.is_coprime(&lh.mono))
            .collect();
        let n = cands.len();
        let mut keep = vec![false; n];
        for a in 0..n {
            if coprime[a] {
                keep[a] = true;
                continue;
            }
            let dominated = (0..n)
                .any(|b| b != a && (b > a || keep[b]) && lcms[b].divides(&lcms[a]));
            keep[a] = !dominated;
        }
        let leads = &self.red.leads;
        let weights = self.weights;
        self.pairs.retain(|p| {
            if p.lcm.comp != lh.comp || !lh.mono.divides(&p.lcm.mono) {
                return true;
            }
            let li = leads[p.i].mono.lcm(&lh.mono, weights);
            let lj = leads[p.j].mono.lcm(&lh.mono, weights);
            li == p.lcm.mono || lj == p.lcm.mono
        });
        for a in 0..n {
            if keep[a] && !coprime[a] {
                let g = cands[a];
                let l = lcms[a];
                let sg = self.sugar[g] + l.degree() - self.red.leads[g].mono.degree();
                let sh = self.sugar[h] + l.degree() - lh.mono.degree();
                self.pairs.insert(Pair {
                    sugar: sg.max(sh),
                    lcm: Term::new(lh.comp, l),
                    i: g,
                    j: h,
                });
            }
        }
        for &g in &cands {
            if lh.mono.divides(&self.red.leads[g].mono) {
                self.active[g] = false;
            }
        }
        self.active[h] = true;
    }

    fn spoly(&self, p: &Pair) -> Vector {
        let f = self.red.field;
        let (gi, gj) = (&self.red.elems[p.i], &self.red.elems[p.j]);
        let qi = self.red.leads[p.i].mono.quotient_of(&p.lcm.mono);
        let qj = self.red.leads[p.j].mono.quotient_of(&p.lcm.mono);
        gi.mul_term(&qi, 1, f).add_scaled(gj, f.neg(1), &qj, f)
    }
}

/// Reduced Gröbner basis of `initial ∪ gens`, where `initial` is already known
/// to be a Gröbner basis (no pairs are formed among its elements). The output
/// is monic, fully interreduced and sorted by (degree, leading term).
pub(crate) fn buchberger(
    field: PrimeField,
    weights: &[u32],
    degrees: &[i32],
    initial: Vec<Vector>,
    gens: Vec<Vector>,
    opts: Options,
) -> Vec<Vector> {
    let mut eng = Engine {
        weights,
        red: Reducer::new(field),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: BTreeSet::new(),
        rank_one: degrees.len() == 1,
    };
    for v in initial.into_iter().filter(|v| !v.is_zero()) {
        let s = sugar_of(&v, degrees);
        let h = eng.insert(v, s);
        eng.active[h] = true;
    }
    let mut queue: Vec<(i32, Vector)> = gens
        .into_iter()
        .filter(|v| !v.is_zero())
        .map(|v| (sugar_of(&v, degrees), v))
        .collect();
    queue.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| {
        let (la, lb) = (a.1.lead().unwrap().0, b.1.lead().unwrap().0);
        la.cmp_pot(&lb)
    }));
    loop {
        let next_gen = queue.last().map(|g| g.0);
        let next_pair = eng.pairs.first().map(|p| p.sugar);
        let (v, sugar) = match (next_gen, next_pair) {
            (None, None) => break,
            (Some(s), p) if p.is_none_or(|ps| s <= ps) => {
                let (s, v) = queue.pop().unwrap();
                let _ = s;
                (v, s)
            }
            _ => {
                let p = eng.pairs.pop_first().unwrap();
                (eng.spoly(&p), p.sugar)
            }
        };
        let r = eng.red.reduce(v, true);
        if r.is_zero() {
            continue;
        }
        if opts.stop_on_unit && eng.rank_one && r.lead().unwrap().0.mono.is_one() {
            return vec![Vector::unit(0)];
        }
        let h = eng.insert(r, sugar);
        eng.update(h);
    }
    interreduce(field, degrees, &eng.red, &eng.active)
}

fn interreduce(field: PrimeField, degrees: &[i32], red: &Reducer, active: &[bool]) -> Vec<Vector> {
    let mut minimal = Reducer::new(field);
    for (i, v) in red.elems.iter().enumerate() {
        if active[i] {
            minimal.push(v.clone());
        }
    }
    let mut out: Vec<Vector> = minimal
        .elems
        .iter()
        .map(|v| {
            let (lead, tail) = v.terms.split_first().unwrap();
            let tail = minimal.reduce(Vector::from_sorted(tail.to_vec()), true);
            let mut terms = vec![*lead];
            terms.extend(tail.terms);
            Vector::from_sorted(terms)
        })
        .collect();
    sort_canonical(&mut out, degrees);
    out
}

pub(crate) fn sort_canonical(elems: &mut [Vector], degrees: &[i32]) {
    elems.sort_by(|a, b| {
        let (la, lb) = (a.lead().unwrap().0, b.lead().unwrap().0);
        let da = la.mono.degree() + degrees[la.comp as usize];
        let db = lb.mono.degree() + degrees[lb.comp as usize];
        da.cmp(&db).then_with(|| la.cmp_pot(&lb))
    });
}

/// A reduced Gröbner basis of a graded submodule, ready for normal forms and
/// Hilbert-function counts.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    degrees: Vec<i32>,
    red: Reducer,
}

impl GroebnerBasis {
    pub(crate) fn from_reduced(field: PrimeField, degrees: Vec<i32>, elems: Vec<Vector>) -> Self {
        let mut red = Reducer::new(field);
        for v in elems {
            red.push(v);
        }
        GroebnerBasis { degrees, red }
    }

    pub fn elements(&self) -> &[Vector] {
        &self.red.elems
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn field(&self) -> PrimeField {
        self.red.field
    }

    /// Unique fully reduced remainder.
    pub fn normal_form(&self, v: &Vector) -> Vector {
        self.red.reduce(v.clone(), true)
    }

    pub fn contains(&self, v: &Vector) -> bool {
        // top reduction decides membership
        self.red.reduce(v.clone(), false).is_zero()
    }

    /// True if some basis element has a constant leading term in every
    /// component, i.e. the submodule is the whole free module.
    pub fn is_everything(&self) -> bool {
        (0..self.rank()).all(|k| {
            self.red
                .find_divisor(&Term::new(k as u32, Monomial::one()))
                .is_some()
        })
    }

    pub fn leads(&self) -> &[Term] {
        &self.red.leads
    }

    /// Dimension of `(F/N)_d` by counting standard monomials.
    pub fn hilbert_function(&self, ring: &Arc<PolyRing>, d: i32) -> usize {
        let mut total = 0;
        for (k, &gd) in self.degrees.iter().enumerate() {
            for m in ring.monomials_of_degree(d - gd) {
                if self.red.find_divisor(&Term::new(k as u32, m)).is_none() {
                    total += 1;
                }
            }
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;

    fn gb(ring: &Arc<PolyRing>, polys: &[&str]) -> Vec<Polynomial> {
        let gens = polys
            .iter()
            .map(|s| Vector::from_poly(&Polynomial::parse(ring, s).unwrap(), 0))
            .collect();
        buchberger(ring.field(), ring.weights(), &[0], Vec::new(), gens, Options::default())
            .into_iter()
            .map(|v| v.entry(0, ring))
            .collect()
    }

    #[test]
    fn principal_ideal_is_its_own_basis() {
        let r = PolyRing::standard(3, &["x", "y", "z"]).unwrap();
        let g = gb(&r, &["x*y+z^2"]);
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].to_string(), "x*y + z^2");
    }

    #[test]
    fn monomial_pair_is_already_a_basis() {
        let r = PolyRing::standard(3, &["x", "y"]).unwrap();
        let g = gb(&r, &["x^2", "x*y"]);
        let s: Vec<String> = g.iter().map(|p| p.to_string()).collect();
        assert_eq!(s, ["x*y", "x^2"]);
    }

    #[test]
    fn twisted_cubic_style_ideal() {
        let r = PolyRing::standard(5, &["x", "y", "z", "w"]).unwrap();
        let g = gb(&r, &["x*z-y^2", "x*w-y*z", "y*w-z^2"]);
        assert_eq!(g.len(), 3);
    }

    #[test]
    fn stop_on_unit_short_circuits() {
        let r = PolyRing::standard(3, &["x", "y"]).unwrap();
        let gens = ["x", "1+y", "y"]
            .iter()
            .map(|s| Vector::from_poly(&Polynomial::parse(&r, s).unwrap(), 0))
            .collect();
        let out = buchberger(
            r.field(),
            r.weights(),
            &[0],
            Vec::new(),
            gens,
            Options { stop_on_unit: true },
        );
        assert_eq!(out, vec![Vector::unit(0)]);
    }
}
