//! Ring presentations, graded submodules and the constructions built on
//! elimination in direct sums: kernels, intersections, colon modules,
//! saturation, annihilators, radical membership and Fitting ideals.

use std::collections::HashSet;
use std::sync::{Arc, OnceLock};

use super::engine::{buchberger, sort_canonical, GroebnerBasis, Options};
use super::Vector;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::poly::{same_ring, PolyRing, Polynomial};

/// Watchdog for iterated colon computations.
pub const SATURATION_LIMIT: usize = 64;

/// Largest number of minors a Fitting ideal computation may enumerate.
pub const MINOR_LIMIT: u128 = 20_000;

/// An ambient weighted polynomial ring together with a homogeneous defining
/// ideal.
#[derive(Debug)]
pub struct RingPresentation {
    ring: Arc<PolyRing>,
    ideal: Vec<Polynomial>,
    ideal_gb: OnceLock<Arc<GroebnerBasis>>,
}

impl RingPresentation {
    pub fn new(ring: Arc<PolyRing>, ideal: Vec<Polynomial>) -> Result<Arc<Self>> {
        let mut gens = Vec::new();
        for f in ideal {
            if !same_ring(f.ring(), &ring) {
                return Err(Error::RingMismatch);
            }
            if f.is_zero() {
                continue;
            }
            if !f.is_homogeneous() {
                return Err(Error::NonHomogeneous(format!("defining generator {f}")));
            }
            gens.push(f);
        }
        Ok(Arc::new(RingPresentation {
            ring,
            ideal: gens,
            ideal_gb: OnceLock::new(),
        }))
    }

    /// The polynomial ring itself (zero defining ideal).
    pub fn free(ring: Arc<PolyRing>) -> Arc<Self> {
        Arc::new(RingPresentation {
            ring,
            ideal: Vec::new(),
            ideal_gb: OnceLock::new(),
        })
    }

    pub fn poly_ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn field(&self) -> PrimeField {
        self.ring.field()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    /// Defining generators as supplied.
    pub fn ideal(&self) -> &[Polynomial] {
        &self.ideal
    }

    pub fn ideal_gb(&self) -> Arc<GroebnerBasis> {
        self.ideal_gb
            .get_or_init(|| {
                let gens = self.ideal.iter().map(|f| Vector::from_poly(f, 0)).collect();
                let elems = buchberger(
                    self.field(),
                    self.ring.weights(),
                    &[0],
                    Vec::new(),
                    gens,
                    Options::default(),
                );
                Arc::new(GroebnerBasis::from_reduced(self.field(), vec![0], elems))
            })
            .clone()
    }

    /// `GB(I) · e_k` for every component; a Gröbner basis of `I·F`.
    fn ideal_multiples(&self, rank: usize) -> Vec<Vector> {
        let gb = self.ideal_gb();
        let mut out = Vec::with_capacity(rank * gb.elements().len());
        for k in 0..rank as u32 {
            out.extend(gb.elements().iter().map(|g| g.shift(k)));
        }
        out
    }

    fn same(&self, other: &RingPresentation) -> bool {
        std::ptr::eq(self, other) || (same_ring(&self.ring, &other.ring) && self.ideal == other.ideal)
    }
}

/// Graded submodule `N ⊆ F = ⊕ R(-degrees[k])`, with `I·F` implicitly included.
#[derive(Clone, Debug)]
pub struct Submodule {
    ring: Arc<RingPresentation>,
    degrees: Vec<i32>,
    gens: Vec<Vector>,
    gb: OnceLock<Arc<GroebnerBasis>>,
}

impl Submodule {
    pub fn new(ring: &Arc<RingPresentation>, degrees: Vec<i32>, gens: Vec<Vector>) -> Result<Self> {
        let rank = degrees.len() as u32;
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if g.is_zero() {
                continue;
            }
            if g.max_comp().is_some_and(|c| c >= rank) {
                return Err(Error::Shape(format!(
                    "generator has a component beyond rank {rank}"
                )));
            }
            if !g.is_homogeneous(&degrees) {
                return Err(Error::NonHomogeneous(g.format(rank as usize, ring.poly_ring())));
            }
            kept.push(g);
        }
        Ok(Submodule {
            ring: ring.clone(),
            degrees,
            gens: kept,
            gb: OnceLock::new(),
        })
    }

    /// Ideal of the presented ring (rank one, generator in degree 0).
    pub fn ideal(ring: &Arc<RingPresentation>, gens: &[Polynomial]) -> Result<Self> {
        if gens.iter().any(|f| !same_ring(f.ring(), ring.poly_ring())) {
            return Err(Error::RingMismatch);
        }
        Self::new(ring, vec![0], gens.iter().map(|f| Vector::from_poly(f, 0)).collect())
    }

    pub fn unit_ideal(ring: &Arc<RingPresentation>) -> Self {
        Self::whole(ring, vec![0])
    }

    /// The ambient free module itself.
    pub fn whole(ring: &Arc<RingPresentation>, degrees: Vec<i32>) -> Self {
        let gens = (0..degrees.len() as u32).map(Vector::unit).collect();
        Self::new(ring, degrees, gens).expect("unit vectors are homogeneous")
    }

    /// `I·F`, the zero submodule of the quotient.
    pub fn zero(ring: &Arc<RingPresentation>, degrees: Vec<i32>) -> Self {
        Self::new(ring, degrees, Vec::new()).expect("empty")
    }

    pub fn ring(&self) -> &Arc<RingPresentation> {
        &self.ring
    }

    pub fn poly_ring(&self) -> &Arc<PolyRing> {
        self.ring.poly_ring()
    }

    pub fn field(&self) -> PrimeField {
        self.ring.field()
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn gens(&self) -> &[Vector] {
        &self.gens
    }

    pub fn gb(&self) -> Arc<GroebnerBasis> {
        self.gb
            .get_or_init(|| {
                let elems = buchberger(
                    self.field(),
                    self.poly_ring().weights(),
                    &self.degrees,
                    self.ring.ideal_multiples(self.rank()),
                    self.gens.clone(),
                    Options::default(),
                );
                Arc::new(GroebnerBasis::from_reduced(self.field(), self.degrees.clone(), elems))
            })
            .clone()
    }

    /// Canonical generators: the reduced Gröbner basis.
    pub fn basis(&self) -> Vec<Vector> {
        self.gb().elements().to_vec()
    }

    /// Reduced basis as polynomials; rank-one submodules only.
    pub fn ideal_basis(&self) -> Vec<Polynomial> {
        assert_eq!(self.rank(), 1, "ideal_basis on a module of rank {}", self.rank());
        self.gb()
            .elements()
            .iter()
            .map(|v| v.entry(0, self.poly_ring()))
            .collect()
    }

    /// Reduced basis modulo the defining ideal: basis elements that are not
    /// themselves multiples of `I`.
    pub fn basis_mod_ideal(&self) -> Vec<Vector> {
        let zero = self.zero_gb();
        self.basis().into_iter().filter(|v| !zero.contains(v)).collect()
    }

    fn zero_gb(&self) -> GroebnerBasis {
        let mut elems = self.ring.ideal_multiples(self.rank());
        sort_canonical(&mut elems, &self.degrees);
        GroebnerBasis::from_reduced(self.field(), self.degrees.clone(), elems)
    }

    fn check_compatible(&self, other: &Submodule) -> Result<()> {
        if !self.ring.same(&other.ring) {
            return Err(Error::RingMismatch);
        }
        if self.degrees != other.degrees {
            return Err(Error::Shape(format!(
                "ambient modules differ: degrees {:?} vs {:?}",
                self.degrees, other.degrees
            )));
        }
        Ok(())
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.gb().contains(v)
    }

    pub fn contains_poly(&self, f: &Polynomial) -> bool {
        self.contains(&Vector::from_poly(f, 0))
    }

    pub fn contains_module(&self, other: &Submodule) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(other.gens.iter().all(|g| self.contains(g)))
    }

    /// Equality of submodules, decided by comparing reduced bases.
    pub fn equals(&self, other: &Submodule) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.gb().elements() == other.gb().elements())
    }

    /// True if the submodule is contained in `I·F`.
    pub fn is_zero(&self) -> bool {
        let zero = self.zero_gb();
        self.gens.iter().all(|g| zero.contains(g))
    }

    /// True if the submodule is all of `F`.
    pub fn is_whole(&self) -> bool {
        self.gb().is_everything()
    }

    pub fn normal_form(&self, v: &Vector) -> Vector {
        self.gb().normal_form(v)
    }

    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        self.check_compatible(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Submodule::new(&self.ring, self.degrees.clone(), gens)
    }

    /// Runs an elimination in `F ⊕ E` and returns the part living in `E`.
    fn eliminate(
        &self,
        extra_degrees: Vec<i32>,
        initial: Vec<Vector>,
        gens: Vec<Vector>,
    ) -> Result<Submodule> {
        let m = self.rank() as u32;
        let mut degrees = self.degrees.clone();
        degrees.extend_from_slice(&extra_degrees);
        let total = degrees.len() as u32;
        let elems = buchberger(
            self.field(),
            self.poly_ring().weights(),
            &degrees,
            initial,
            gens,
            Options::default(),
        );
        let kept = elems
            .into_iter()
            .filter(|v| v.lead().is_some_and(|(t, _)| t.comp >= m))
            .map(|v| v.restrict(m, total))
            .collect();
        Submodule::new(&self.ring, extra_degrees, kept)
    }

    pub fn intersect(&self, other: &Submodule) -> Result<Submodule> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Submodule::zero(&self.ring, self.degrees.clone()));
        }
        let m = self.rank() as u32;
        let gens = self
            .gens
            .iter()
            .map(|g| g.add(&g.shift(m), self.field()))
            .collect();
        other.eliminate(self.degrees.clone(), other.gb().elements().to_vec(), gens)
    }

    /// `(N : f) = {v : f·v ∈ N}`.
    pub fn colon_poly(&self, f: &Polynomial) -> Result<Submodule> {
        if !same_ring(f.ring(), self.poly_ring()) {
            return Err(Error::RingMismatch);
        }
        let d = f
            .weighted_degree()?
            .ok_or_else(|| Error::NonHomogeneous(f.to_string()))?;
        if d == 0 {
            return Ok(self.clone());
        }
        let m = self.rank() as u32;
        let gens = (0..m)
            .map(|k| Vector::from_poly(f, k).add(&Vector::unit(m + k), self.field()))
            .collect();
        let extra = self.degrees.iter().map(|&x| x + d).collect();
        let out = self.eliminate(extra, self.gb().elements().to_vec(), gens)?;
        Submodule::new(&self.ring, self.degrees.clone(), out.gens)
    }

    /// `(N : J)` for an ideal `J`, as the intersection of `(N : f)` over the
    /// generators `f` of `J`.
    pub fn colon(&self, ideal: &Submodule) -> Result<Submodule> {
        if ideal.rank() != 1 {
            return Err(Error::Shape("colon by a module of rank > 1".into()));
        }
        let gens: Vec<Polynomial> = ideal
            .gens
            .iter()
            .map(|v| v.entry(0, self.poly_ring()))
            .collect();
        if gens.is_empty() {
            return Err(Error::Range("colon by the zero ideal".into()));
        }
        let mut acc: Option<Submodule> = None;
        for f in &gens {
            let q = self.colon_poly(f)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// `(N : g) = {f ∈ R : f·g ∈ N}` for a single homogeneous vector `g`.
    pub fn colon_vector(&self, g: &Vector) -> Result<Submodule> {
        let rank = self.rank() as u32;
        if g.max_comp().is_some_and(|c| c >= rank) || !g.is_homogeneous(&self.degrees) {
            return Err(Error::Shape("vector is not a homogeneous element of the ambient module".into()));
        }
        let Some(d) = g.degree(&self.degrees) else {
            return Ok(Submodule::unit_ideal(&self.ring));
        };
        let gen = g.add(&Vector::unit(rank), self.field());
        self.eliminate(vec![d], self.gb().elements().to_vec(), vec![gen])
            .and_then(|out| Submodule::new(&self.ring, vec![0], out.gens))
    }

    /// `(N : J^∞)`, iterating colon modules until the basis stabilizes.
    pub fn saturate(&self, ideal: &Submodule) -> Result<Submodule> {
        let mut cur = self.clone();
        for _ in 0..SATURATION_LIMIT {
            let next = cur.colon(ideal)?;
            if next.equals(&cur)? {
                return Ok(cur);
            }
            cur = next;
        }
        Err(Error::SaturationWatchdog(SATURATION_LIMIT))
    }

    /// `(N : x_i^∞)`.
    pub fn saturate_variable(&self, i: usize) -> Result<Submodule> {
        let x = Polynomial::var(self.poly_ring(), i);
        self.saturate(&Submodule::ideal(&self.ring, &[x])?)
    }

    /// `(N : m^∞)` for the irrelevant ideal `m = (x_1, …, x_n)`, computed as the
    /// intersection of the saturations at each variable.
    pub fn saturate_irrelevant(&self) -> Result<Submodule> {
        let mut acc: Option<Submodule> = None;
        for i in 0..self.ring.nvars() {
            let s = self.saturate_variable(i)?;
            acc = Some(match acc {
                None => s,
                Some(a) => a.intersect(&s)?,
            });
        }
        Ok(acc.unwrap_or_else(|| self.clone()))
    }

    /// `dim_k (F/N)_d`.
    pub fn hilbert_function(&self, d: i32) -> usize {
        self.gb().hilbert_function(self.poly_ring(), d)
    }

    pub fn format_basis(&self) -> Vec<String> {
        let rank = self.rank();
        self.basis()
            .iter()
            .map(|v| {
                if rank == 1 {
                    v.entry(0, self.poly_ring()).to_string()
                } else {
                    v.format(rank, self.poly_ring())
                }
            })
            .collect()
    }
}

/// Kernel of the map `⊕ R(-src_degrees[j]) → F/(relations + I·F)` sending
/// `e_j` to `columns[j]`.
pub fn syzygies(
    ring: &Arc<RingPresentation>,
    tgt_degrees: &[i32],
    columns: &[Vector],
    src_degrees: &[i32],
    relations: &[Vector],
) -> Result<Submodule> {
    if columns.len() != src_degrees.len() {
        return Err(Error::Shape(format!(
            "{} columns but {} source degrees",
            columns.len(),
            src_degrees.len()
        )));
    }
    for (j, c) in columns.iter().enumerate() {
        if c.max_comp().is_some_and(|k| k as usize >= tgt_degrees.len()) {
            return Err(Error::Shape(format!("column {j} exceeds the target rank")));
        }
        if !c.is_homogeneous(tgt_degrees) {
            return Err(Error::Grading(format!("column {j} is not homogeneous")));
        }
        if let Some(d) = c.degree(tgt_degrees) {
            if d != src_degrees[j] {
                return Err(Error::Grading(format!(
                    "column {j} has degree {d}, labelled {}",
                    src_degrees[j]
                )));
            }
        }
    }
    let rel = Submodule::new(ring, tgt_degrees.to_vec(), relations.to_vec())?;
    let m = tgt_degrees.len() as u32;
    let gens = columns
        .iter()
        .enumerate()
        .map(|(j, c)| c.add(&Vector::unit(m + j as u32), ring.field()))
        .collect();
    rel.eliminate(src_degrees.to_vec(), rel.gb().elements().to_vec(), gens)
}

/// `ann(K/N) = {f : f·K ⊆ N}`.
pub fn annihilator(k: &Submodule, n: &Submodule) -> Result<Submodule> {
    k.check_compatible(n)?;
    if !k.contains_module(n)? {
        return Err(Error::NotASubmodule("N is not contained in K".into()));
    }
    let mut acc = Submodule::unit_ideal(&k.ring);
    for g in &k.gens {
        if n.contains(g) {
            continue;
        }
        let q = n.colon_vector(g)?;
        acc = if acc.is_whole() { q } else { acc.intersect(&q)? };
    }
    Ok(acc)
}

/// Decides `f ∈ √J` (with the defining ideal included) by checking whether
/// `1 ∈ J + (1 - t·f)` for a fresh variable `t` of weight one.
pub fn radical_membership(f: &Polynomial, ideal: &Submodule) -> Result<bool> {
    if ideal.rank() != 1 {
        return Err(Error::Shape("radical membership needs an ideal".into()));
    }
    if !same_ring(f.ring(), ideal.poly_ring()) {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() || ideal.contains_poly(f) {
        return Ok(true);
    }
    let base = ideal.poly_ring();
    let mut name = String::from("t");
    while base.var_index(&name).is_some() {
        name.push('_');
    }
    let ext = base.extend(&name, 1)?;
    let t = Polynomial::var(&ext, base.nvars());
    let fe = f.embed(&ext)?;
    let rab = Polynomial::one(&ext).sub(&t.mul(&fe)?)?;
    let mut gens = vec![Vector::from_poly(&rab, 0)];
    for g in ideal.ideal_basis() {
        gens.push(Vector::from_poly(&g.embed(&ext)?, 0));
    }
    let out = buchberger(
        ext.field(),
        ext.weights(),
        &[0],
        Vec::new(),
        gens,
        Options { stop_on_unit: true },
    );
    Ok(out.first().is_some_and(|v| v.lead().is_some_and(|(t, _)| t.mono.is_one())))
}

/// Determinant by fraction-free elimination over the ambient domain.
pub fn determinant(mut m: Vec<Vec<Polynomial>>, ring: &Arc<PolyRing>) -> Result<Polynomial> {
    let n = m.len();
    if n == 0 {
        return Ok(Polynomial::one(ring));
    }
    let mut prev = Polynomial::one(ring);
    let mut negate = false;
    for k in 0..n - 1 {
        let Some(piv) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Ok(Polynomial::zero(ring));
        };
        if piv != k {
            m.swap(piv, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j])?.sub(&m[i][k].mul(&m[k][j])?)?;
                m[i][j] = num.div_exact(&prev)?.ok_or_else(|| {
                    Error::InternalInvariantViolation("inexact Bareiss division".into())
                })?;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negate { d.neg() } else { d })
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// `Fitt_i` of the module with `ngens` generators and the given relation
/// columns: the ideal of `(ngens - i)`-minors, plus the defining ideal.
pub fn fitting_ideal(
    ring: &Arc<RingPresentation>,
    ngens: usize,
    relations: &[Vector],
    i: usize,
) -> Result<Submodule> {
    if i >= ngens {
        return Ok(Submodule::unit_ideal(ring));
    }
    let k = ngens - i;
    let t = relations.len();
    if k > t {
        return Submodule::ideal(ring, &[]);
    }
    let count = binomial(ngens, k) * binomial(t, k);
    if count > MINOR_LIMIT {
        return Err(Error::TooLarge(format!(
            "{count} minors of size {k} in a {ngens}x{t} presentation"
        )));
    }
    let pr = ring.poly_ring();
    let entries: Vec<Vec<Polynomial>> = relations.iter().map(|c| c.to_entries(ngens, pr)).collect();
    let mut seen = HashSet::new();
    let mut minors = Vec::new();
    for rows in combinations(ngens, k) {
        for cols in combinations(t, k) {
            let sub = rows
                .iter()
                .map(|&r| cols.iter().map(|&c| entries[c][r].clone()).collect())
                .collect();
            let d = determinant(sub, pr)?;
            if !d.is_zero() && seen.insert(d.monic()) {
                minors.push(d);
            }
        }
    }
    Submodule::ideal(ring, &minors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(p: u32, names: &[&str]) -> (Arc<PolyRing>, Arc<RingPresentation>) {
        let r = PolyRing::standard(p, names).unwrap();
        let rp = RingPresentation::free(r.clone());
        (r, rp)
    }

    fn ideal(rp: &Arc<RingPresentation>, gens: &[&str]) -> Submodule {
        let polys: Vec<Polynomial> = gens
            .iter()
            .map(|s| Polynomial::parse(rp.poly_ring(), s).unwrap())
            .collect();
        Submodule::ideal(rp, &polys).unwrap()
    }

    fn strs(s: &Submodule) -> Vec<String> {
        s.format_basis()
    }

    #[test]
    fn intersection_of_principal_ideals() {
        let (_, rp) = setup(3, &["x", "y"]);
        let i = ideal(&rp, &["x"]).intersect(&ideal(&rp, &["y"])).unwrap();
        assert_eq!(strs(&i), ["x*y"]);
        let n = ideal(&rp, &["x^2", "x*y"]);
        assert!(n.intersect(&n).unwrap().equals(&n).unwrap());
    }

    #[test]
    fn intersection_of_column_spans() {
        let (r, rp) = setup(3, &["x", "y"]);
        let p = |s: &str| Polynomial::parse(&r, s).unwrap();
        let z = Polynomial::zero(&r);
        let a = Submodule::new(
            &rp,
            vec![0, 0],
            vec![
                Vector::from_entries(&[p("x"), z.clone()]),
                Vector::from_entries(&[z.clone(), p("y")]),
            ],
        )
        .unwrap();
        let b = Submodule::new(
            &rp,
            vec![0, 0],
            vec![
                Vector::from_entries(&[p("y"), z.clone()]),
                Vector::from_entries(&[z.clone(), p("x")]),
            ],
        )
        .unwrap();
        let c = a.intersect(&b).unwrap();
        assert_eq!(strs(&c), ["[0, x*y]", "[x*y, 0]"]);
    }

    #[test]
    fn colon_ideals() {
        let (r, rp) = setup(3, &["x", "y"]);
        let x = Polynomial::parse(&r, "x").unwrap();
        let y = Polynomial::parse(&r, "y").unwrap();
        assert_eq!(strs(&ideal(&rp, &["x*y"]).colon_poly(&x).unwrap()), ["y"]);
        let n = ideal(&rp, &["x^2", "x*y"]);
        assert_eq!(strs(&n.colon_poly(&y).unwrap()), ["x"]);
        let one = Submodule::unit_ideal(&rp);
        assert!(n.colon(&one).unwrap().equals(&n).unwrap());
    }

    #[test]
    fn saturations() {
        let (_, rp) = setup(3, &["x", "y"]);
        let m = ideal(&rp, &["x", "y"]);
        let s = ideal(&rp, &["x^2", "x*y"]).saturate(&m).unwrap();
        assert_eq!(strs(&s), ["x"]);
        let s2 = ideal(&rp, &["x^2", "x*y"]).saturate_irrelevant().unwrap();
        assert_eq!(strs(&s2), ["x"]);
        let t = ideal(&rp, &["x"]).saturate(&ideal(&rp, &["y"])).unwrap();
        assert_eq!(strs(&t), ["x"]);
    }

    #[test]
    fn radical_examples() {
        let (r, rp) = setup(3, &["x", "y", "z"]);
        let p = |s: &str| Polynomial::parse(&r, s).unwrap();
        assert!(radical_membership(&p("x"), &ideal(&rp, &["x^2"])).unwrap());
        assert!(radical_membership(&p("z"), &ideal(&rp, &["x*y+z^2", "x"])).unwrap());
        assert!(!radical_membership(&p("y"), &ideal(&rp, &["x"])).unwrap());
    }

    #[test]
    fn annihilator_examples() {
        let (r, rp) = setup(3, &["x", "y"]);
        let k = ideal(&rp, &["x", "y"]);
        let n = ideal(&rp, &["x^2", "x*y", "y^2"]);
        assert_eq!(strs(&annihilator(&k, &n).unwrap()), ["y", "x"]);
        assert!(annihilator(&k, &k).unwrap().is_whole());
        let f = ideal(&rp, &["x*y^2"]);
        let whole = Submodule::unit_ideal(&rp);
        assert_eq!(strs(&annihilator(&whole, &f).unwrap()), ["x*y^2"]);
        assert!(matches!(annihilator(&n, &k), Err(Error::NotASubmodule(_))));
        let _ = r;
    }

    #[test]
    fn koszul_and_quotient_syzygies() {
        let (r, rp) = setup(3, &["x", "y"]);
        let p = |s: &str| Polynomial::parse(&r, s).unwrap();
        let cols = [Vector::from_poly(&p("x"), 0), Vector::from_poly(&p("y"), 0)];
        let k = syzygies(&rp, &[0], &cols, &[1, 1], &[]).unwrap();
        assert_eq!(strs(&k), ["[y, 2*x]"]);
        let k1 = syzygies(&rp, &[0], &cols[..1], &[1], &[]).unwrap();
        assert!(k1.is_zero());
    }

    #[test]
    fn sl2_matrix_kernel_modulo_the_quadric() {
        let r = PolyRing::standard(3, &["x", "y", "z"]).unwrap();
        let p = |s: &str| Polynomial::parse(&r, s).unwrap();
        let rp = RingPresentation::new(r.clone(), vec![p("x*y+z^2")]).unwrap();
        let cols = [
            Vector::from_entries(&[p("z"), p("y")]),
            Vector::from_entries(&[p("x"), p("-z")]),
        ];
        let k = syzygies(&rp, &[0, 0], &cols, &[1, 1], &[]).unwrap();
        let expected = Submodule::new(
            &rp,
            vec![1, 1],
            vec![
                Vector::from_entries(&[p("x"), p("-z")]),
                Vector::from_entries(&[p("z"), p("y")]),
            ],
        )
        .unwrap();
        assert!(k.equals(&expected).unwrap());
        let quadric = Submodule::zero(&rp, vec![0, 0]);
        for v in k.basis() {
            let image = cols[0]
                .mul_poly(&v.entry(0, &r))
                .add(&cols[1].mul_poly(&v.entry(1, &r)), r.field());
            assert!(quadric.contains(&image));
        }
    }

    #[test]
    fn fitting_examples() {
        let (r, rp) = setup(3, &["x", "y"]);
        let p = |s: &str| Polynomial::parse(&r, s).unwrap();
        let f = [Vector::from_poly(&p("x*y"), 0)];
        assert_eq!(strs(&fitting_ideal(&rp, 1, &f, 0).unwrap()), ["x*y"]);
        assert!(fitting_ideal(&rp, 1, &f, 1).unwrap().is_whole());
        assert!(fitting_ideal(&rp, 1, &[], 0).unwrap().is_zero());
        let z = Polynomial::zero(&r);
        let diag = [
            Vector::from_entries(&[p("x"), z.clone()]),
            Vector::from_entries(&[z, p("y")]),
        ];
        assert_eq!(strs(&fitting_ideal(&rp, 2, &diag, 0).unwrap()), ["x*y"]);
        assert_eq!(strs(&fitting_ideal(&rp, 2, &diag, 1).unwrap()), ["y", "x"]);
    }

    #[test]
    fn determinant_sign_and_value() {
        let r = PolyRing::standard(7, &["x", "y", "z"]).unwrap();
        let p = |s: &str| Polynomial::parse(&r, s).unwrap();
        let m = vec![vec![p("0"), p("x")], vec![p("y"), p("z")]];
        assert_eq!(determinant(m, &r).unwrap(), p("-x*y"));
    }
}
