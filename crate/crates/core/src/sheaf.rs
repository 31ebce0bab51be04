//! Sheaves built from the global operator.
//!
//! Every sheaf is presented as a subquotient `K/N` of the free module
//! `F = R^{dim M}` with generators in degree 0, where `R` is the coordinate
//! ring of the group. Powers of `Θ` are labelled so that kernels and images
//! are graded submodules of `F`:
//!
//! * ker-side `Θ^j`: target generators in degree `-j·q`, source in degree 0;
//! * im-side `Θ^j`: target generators in degree 0, source in degree `j·q`,
//!
//! with `q = p^{r-1}` the degree of `Θ`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{
    annihilator, fitting_ideal, radical_membership, syzygies, RingPresentation, Submodule, Vector,
};
use crate::matrix::Matrix;
use crate::poly::{poly_matmul, specialize_matrix, Polynomial};

/// Homogeneous polynomial matrix: entry `(i, j)` has degree
/// `col_degrees[j] - row_degrees[i]`.
#[derive(Clone, Debug)]
pub struct GradedMatrix {
    ring: Arc<RingPresentation>,
    entries: Vec<Vec<Polynomial>>,
    row_degrees: Vec<i32>,
    col_degrees: Vec<i32>,
}

impl GradedMatrix {
    pub fn new(
        ring: Arc<RingPresentation>,
        entries: Vec<Vec<Polynomial>>,
        row_degrees: Vec<i32>,
        col_degrees: Vec<i32>,
    ) -> Result<Self> {
        if entries.len() != row_degrees.len() {
            return Err(Error::Shape(format!(
                "{} rows but {} row degrees",
                entries.len(),
                row_degrees.len()
            )));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != col_degrees.len() {
                return Err(Error::Shape(format!("row {i} has {} entries", row.len())));
            }
            for (j, e) in row.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                if !crate::poly::same_ring(e.ring(), ring.poly_ring()) {
                    return Err(Error::RingMismatch);
                }
                let want = col_degrees[j] - row_degrees[i];
                if e.weighted_degree()? != Some(want) {
                    return Err(Error::Grading(format!(
                        "entry ({i}, {j}) = {e} should be homogeneous of degree {want}"
                    )));
                }
            }
        }
        Ok(GradedMatrix {
            ring,
            entries,
            row_degrees,
            col_degrees,
        })
    }

    pub fn ring(&self) -> &Arc<RingPresentation> {
        &self.ring
    }

    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub fn rows(&self) -> usize {
        self.row_degrees.len()
    }

    pub fn cols(&self) -> usize {
        self.col_degrees.len()
    }

    pub fn row_degrees(&self) -> &[i32] {
        &self.row_degrees
    }

    pub fn col_degrees(&self) -> &[i32] {
        &self.col_degrees
    }

    /// Columns as vectors of the target free module.
    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols())
            .map(|j| {
                let col: Vec<Polynomial> = self.entries.iter().map(|r| r[j].clone()).collect();
                Vector::from_entries(&col)
            })
            .collect()
    }

    /// Composite `self ∘ other`.
    pub fn compose(&self, other: &GradedMatrix) -> Result<GradedMatrix> {
        if self.col_degrees != other.row_degrees {
            return Err(Error::Grading("degree labels do not match in a product".into()));
        }
        let entries = reduce_entries(&self.ring, poly_matmul(&self.entries, &other.entries)?);
        GradedMatrix::new(
            self.ring.clone(),
            entries,
            self.row_degrees.clone(),
            other.col_degrees.clone(),
        )
    }

    /// The same matrix with every label moved by `d`.
    pub fn shifted(&self, d: i32) -> GradedMatrix {
        GradedMatrix {
            ring: self.ring.clone(),
            entries: self.entries.clone(),
            row_degrees: self.row_degrees.iter().map(|x| x + d).collect(),
            col_degrees: self.col_degrees.iter().map(|x| x + d).collect(),
        }
    }

    /// True when every entry lies in the defining ideal.
    pub fn is_zero(&self) -> bool {
        let gb = self.ring.ideal_gb();
        self.entries
            .iter()
            .flatten()
            .all(|e| gb.contains(&Vector::from_poly(e, 0)))
    }

    pub fn specialize(&self, point: &[u32]) -> Result<Matrix> {
        specialize_matrix(&self.entries, point, self.ring.field())
    }

    /// Common degree of the entries of a square operator with uniform labels.
    fn operator_degree(&self) -> Result<i32> {
        if self.rows() != self.cols() {
            return Err(Error::Shape("operator is not square".into()));
        }
        let d = self.col_degrees.first().copied().unwrap_or(0) - self.row_degrees.first().copied().unwrap_or(0);
        let uniform = self.row_degrees.iter().all(|&x| x == self.row_degrees[0])
            && self.col_degrees.iter().all(|&x| x == self.col_degrees[0]);
        if !uniform {
            return Err(Error::Grading("operator labels are not uniform".into()));
        }
        Ok(d)
    }
}

fn reduce_entries(ring: &Arc<RingPresentation>, entries: Vec<Vec<Polynomial>>) -> Vec<Vec<Polynomial>> {
    if ring.ideal().is_empty() {
        return entries;
    }
    let gb = ring.ideal_gb();
    let pr = ring.poly_ring();
    entries
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|e| gb.normal_form(&Vector::from_poly(&e, 0)).entry(0, pr))
                .collect()
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Ker,
    Im,
}

/// The global operator together with `p`.
#[derive(Clone, Debug)]
pub struct Operator {
    theta: GradedMatrix,
    p: u32,
    degree: i32,
}

impl Operator {
    pub fn new(theta: GradedMatrix, p: u32) -> Result<Self> {
        let degree = theta.operator_degree()?;
        Ok(Operator { theta, p, degree })
    }

    pub fn theta(&self) -> &GradedMatrix {
        &self.theta
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// `q = p^{r-1}`.
    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.theta.rows()
    }

    pub fn ring(&self) -> &Arc<RingPresentation> {
        self.theta.ring()
    }

    fn ambient(&self) -> Vec<i32> {
        vec![0; self.dim()]
    }

    /// `Θ^j` with the labels of the chosen side.
    pub fn power(&self, j: u32, side: Side) -> Result<GradedMatrix> {
        if j > self.p {
            return Err(Error::Range(format!("power {j} exceeds p = {}", self.p)));
        }
        let n = self.dim();
        let pr = self.ring().poly_ring().clone();
        let mut acc: Vec<Vec<Polynomial>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|k| if i == k { Polynomial::one(&pr) } else { Polynomial::zero(&pr) })
                    .collect()
            })
            .collect();
        for _ in 0..j {
            acc = reduce_entries(self.ring(), poly_matmul(&acc, self.theta.entries())?);
        }
        let shift = j as i32 * self.degree;
        let (rows, cols) = match side {
            Side::Ker => (-shift, 0),
            Side::Im => (0, shift),
        };
        GradedMatrix::new(self.ring().clone(), acc, vec![rows; n], vec![cols; n])
    }

    /// `ker Θ^j ⊆ F`.
    pub fn kernel(&self, j: u32) -> Result<Submodule> {
        let m = self.power(j, Side::Ker)?;
        syzygies(self.ring(), m.row_degrees(), &m.columns(), m.col_degrees(), &[])
    }

    /// `im Θ^j ⊆ F`.
    pub fn image(&self, j: u32) -> Result<Submodule> {
        let m = self.power(j, Side::Im)?;
        Submodule::new(self.ring(), self.ambient(), m.columns())
    }

    fn sheaf(&self, k: Submodule, n: Submodule, label: String) -> SubquotientSheaf {
        SubquotientSheaf {
            k,
            n,
            shift: 0,
            p: self.p,
            step: self.degree,
            label,
        }
    }

    /// `(ker^j, im^j, coker^j)`.
    pub fn ker_im_coker(&self, j: u32) -> Result<(SubquotientSheaf, SubquotientSheaf, SubquotientSheaf)> {
        let ker = self.kernel(j)?;
        let im = self.image(j)?;
        let zero = Submodule::zero(self.ring(), self.ambient());
        let whole = Submodule::whole(self.ring(), self.ambient());
        Ok((
            self.sheaf(ker, zero.clone(), format!("ker^{j}")),
            self.sheaf(im.clone(), zero, format!("im^{j}")),
            self.sheaf(whole, im, format!("coker^{j}")),
        ))
    }

    pub fn coker(&self, j: u32) -> Result<SubquotientSheaf> {
        let im = self.image(j)?;
        let whole = Submodule::whole(self.ring(), self.ambient());
        Ok(self.sheaf(whole, im, format!("coker^{j}")))
    }

    /// `F_i = (ker Θ ∩ im Θ^{i-1}) / (ker Θ ∩ im Θ^i)`, `1 ≤ i ≤ p`.
    pub fn f_sheaf(&self, i: u32) -> Result<SubquotientSheaf> {
        if i == 0 || i > self.p {
            return Err(Error::Range(format!("F_{i} needs 1 <= i <= {}", self.p)));
        }
        let ker = self.kernel(1)?;
        let k = if i == 1 { ker.clone() } else { ker.intersect(&self.image(i - 1)?)? };
        let n = ker.intersect(&self.image(i)?)?;
        Ok(self.sheaf(k, n, format!("F_{i}")))
    }

    /// `H^(i) = ker Θ^i / im Θ^{p-i}`, `1 ≤ i ≤ p-1`.
    pub fn h_sheaf(&self, i: u32) -> Result<SubquotientSheaf> {
        if i == 0 || i >= self.p {
            return Err(Error::Range(format!("H^({i}) needs 1 <= i <= {}", self.p - 1)));
        }
        let k = self.kernel(i)?;
        let n = self.image(self.p - i)?;
        if !k.contains_module(&n)? {
            return Err(Error::InternalInvariantViolation(format!(
                "im Θ^{} is not contained in ker Θ^{i}",
                self.p - i
            )));
        }
        Ok(self.sheaf(k, n, format!("H^({i})")))
    }
}

/// Minimal graded presentation `R^t → R^s → K/N → 0`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub generators: Vec<Vector>,
    pub generator_degrees: Vec<i32>,
    pub relations: Vec<Vector>,
}

/// Radical behaviour of a Fitting ideal on the projective scheme.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FittingSignature {
    /// Nilpotent in the coordinate ring.
    Vanishing,
    /// Contains a power of the irrelevant ideal.
    UnitOnProj,
    Partial,
}

/// Hilbert-function table plus Fitting signatures.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    /// `degree → dim` of the torsion-free part, degrees already translated by the shift tag.
    pub hilbert: BTreeMap<i32, usize>,
    /// `Fitt_0, Fitt_1, …` up to the first one that is the unit ideal on Proj.
    pub fitting: Vec<FittingSignature>,
}

impl Fingerprint {
    /// Agreement of Fitting signatures and of the Hilbert tables on the common window.
    pub fn matches(&self, other: &Fingerprint) -> bool {
        if self.fitting != other.fitting {
            return false;
        }
        let mut overlap = 0;
        for (d, v) in &self.hilbert {
            if let Some(w) = other.hilbert.get(d) {
                overlap += 1;
                if v != w {
                    return false;
                }
            }
        }
        overlap > 0
    }

    /// The window, translated.
    pub fn window(&self) -> Option<(i32, i32)> {
        Some((*self.hilbert.keys().next()?, *self.hilbert.keys().next_back()?))
    }
}

/// A coherent sheaf presented as `K/N` inside a free module, with a twist tag.
#[derive(Clone, Debug)]
pub struct SubquotientSheaf {
    k: Submodule,
    n: Submodule,
    shift: i32,
    p: u32,
    step: i32,
    label: String,
}

impl SubquotientSheaf {
    /// Validates `N ⊆ K`.
    pub fn new(k: Submodule, n: Submodule, p: u32, step: i32) -> Result<Self> {
        if !k.contains_module(&n)? {
            return Err(Error::NotASubmodule("N is not contained in K".into()));
        }
        Ok(SubquotientSheaf {
            k,
            n,
            shift: 0,
            p,
            step,
            label: String::from("K/N"),
        })
    }

    pub fn k(&self) -> &Submodule {
        &self.k
    }

    pub fn n(&self) -> &Submodule {
        &self.n
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn shift(&self) -> i32 {
        self.shift
    }

    /// The twist `S(s)`.
    pub fn twisted(&self, s: i32) -> SubquotientSheaf {
        let mut out = self.clone();
        out.shift += s;
        out
    }

    fn ring(&self) -> &Arc<RingPresentation> {
        self.k.ring()
    }

    /// `K ⊆ N`: the graded module itself is zero.
    pub fn module_zero(&self) -> bool {
        self.k.gens().iter().all(|g| self.n.contains(g))
    }

    /// `K/N` is irrelevant-torsion, decided via the radical of its annihilator.
    pub fn is_sheaf_zero(&self) -> Result<bool> {
        if self.module_zero() {
            return Ok(true);
        }
        let ann = annihilator(&self.k, &self.n)?;
        all_variables_in_radical(&ann)
    }

    /// The same decision through `K ⊆ (N : m^∞)`, one variable at a time.
    pub fn is_sheaf_zero_by_saturation(&self) -> Result<bool> {
        if self.module_zero() {
            return Ok(true);
        }
        for i in 0..self.ring().nvars() {
            let sat = self.n.saturate_variable(i)?;
            if !self.k.gens().iter().all(|g| sat.contains(g)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `ann(K/N)`, replaced by the unit ideal when it is irrelevant.
    pub fn support_ideal(&self) -> Result<Submodule> {
        if self.module_zero() {
            return Ok(Submodule::unit_ideal(self.ring()));
        }
        let ann = annihilator(&self.k, &self.n)?;
        if all_variables_in_radical(&ann)? {
            return Ok(Submodule::unit_ideal(self.ring()));
        }
        Ok(ann)
    }

    /// Minimal generators of `K` modulo `N` and a minimal set of relations.
    pub fn presentation(&self) -> Result<Presentation> {
        let ring = self.ring().clone();
        let degrees = self.k.degrees().to_vec();
        let mut cands: Vec<Vector> = self.k.basis_mod_ideal();
        cands.sort_by_key(|v| v.degree(&degrees).unwrap_or(0));
        let mut gens = Vec::new();
        let mut span = self.n.clone();
        for v in cands {
            if span.contains(&v) {
                continue;
            }
            gens.push(v);
            let mut all = self.n.gens().to_vec();
            all.extend(gens.iter().cloned());
            span = Submodule::new(&ring, degrees.clone(), all)?;
        }
        let gen_degrees: Vec<i32> = gens.iter().map(|v| v.degree(&degrees).unwrap_or(0)).collect();
        let syz = syzygies(&ring, &degrees, &gens, &gen_degrees, self.n.gens())?;
        let mut rels: Vec<Vector> = syz.basis_mod_ideal();
        rels.sort_by_key(|v| v.degree(&gen_degrees).unwrap_or(0));
        let mut kept: Vec<Vector> = Vec::new();
        let mut rspan = Submodule::zero(&ring, gen_degrees.clone());
        for v in rels {
            if rspan.contains(&v) {
                continue;
            }
            kept.push(v);
            rspan = Submodule::new(&ring, gen_degrees.clone(), kept.clone())?;
        }
        Ok(Presentation {
            generators: gens,
            generator_degrees: gen_degrees,
            relations: kept,
        })
    }

    /// `dim_k (K/N) ⊗ k(v)`.
    pub fn fiber_dimension(&self, point: &[u32]) -> Result<usize> {
        let pres = self.presentation()?;
        Ok(fiber_dimension_of(&pres, point, self.ring().field()))
    }

    fn fitting(&self, pres: &Presentation, j: usize) -> Result<Submodule> {
        fitting_ideal(self.ring(), pres.generators.len(), &pres.relations, j)
    }

    fn signature(&self, ideal: &Submodule) -> Result<FittingSignature> {
        if ideal_vanishes(ideal)? {
            Ok(FittingSignature::Vanishing)
        } else if all_variables_in_radical(ideal)? {
            Ok(FittingSignature::UnitOnProj)
        } else {
            Ok(FittingSignature::Partial)
        }
    }

    /// `Some(r)` when the sheaf is locally free of rank `r`.
    pub fn locally_free_rank(&self) -> Result<Option<usize>> {
        let pres = self.presentation()?;
        let s = pres.generators.len();
        for r in 0..=s {
            let fr = self.fitting(&pres, r)?;
            if !all_variables_in_radical(&fr)? {
                continue;
            }
            if r == 0 {
                return Ok(Some(0));
            }
            let below = self.fitting(&pres, r - 1)?;
            return Ok(ideal_vanishes(&below)?.then_some(r));
        }
        Ok(None)
    }

    /// Degree window `[min gen − p·q, max gen + p·q]` of `K`.
    pub fn window(&self) -> (i32, i32) {
        let degrees = self.k.degrees();
        let gd: Vec<i32> = self.k.gens().iter().filter_map(|v| v.degree(degrees)).collect();
        let lo = gd.iter().copied().min().unwrap_or(0);
        let hi = gd.iter().copied().max().unwrap_or(0);
        let pad = self.p as i32 * self.step;
        (lo - pad, hi + pad)
    }

    /// Hilbert function of `K / (K ∩ (N : m^∞))` over the window, plus
    /// Fitting signatures.
    pub fn fingerprint(&self) -> Result<Fingerprint> {
        let sat = self.n.saturate_irrelevant()?;
        let with_k = sat.sum(&self.k)?;
        let (lo, hi) = self.window();
        let mut hilbert = BTreeMap::new();
        for d in lo..=hi {
            let v = sat.hilbert_function(d) - with_k.hilbert_function(d);
            hilbert.insert(d - self.shift, v);
        }
        let pres = self.presentation()?;
        let mut fitting = Vec::new();
        for j in 0..=pres.generators.len() {
            let sig = self.signature(&self.fitting(&pres, j)?)?;
            fitting.push(sig);
            if sig == FittingSignature::UnitOnProj {
                break;
            }
        }
        Ok(Fingerprint { hilbert, fitting })
    }
}

fn fiber_dimension_of(pres: &Presentation, point: &[u32], field: crate::field::PrimeField) -> usize {
    let s = pres.generators.len();
    if s == 0 {
        return 0;
    }
    let cols: Vec<Vec<u32>> = pres
        .relations
        .iter()
        .map(|r| r.specialize(s, point, field))
        .collect();
    let rank = if cols.is_empty() {
        0
    } else {
        Matrix::from_columns(field, s, &cols).map(|m| m.rank()).unwrap_or(0)
    };
    s - rank
}

/// Every variable lies in `√(J + I)`.
fn all_variables_in_radical(ideal: &Submodule) -> Result<bool> {
    if ideal.is_whole() {
        return Ok(true);
    }
    let pr = ideal.poly_ring().clone();
    for i in 0..pr.nvars() {
        if !radical_membership(&Polynomial::var(&pr, i), ideal)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every generator of `J` lies in `√I`.
fn ideal_vanishes(ideal: &Submodule) -> Result<bool> {
    let zero = Submodule::ideal(ideal.ring(), &[])?;
    for f in ideal.gens() {
        let f = f.entry(0, ideal.poly_ring());
        if !radical_membership(&f, &zero)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Canonical JSON report for one sheaf.
#[derive(Clone, Debug, Serialize)]
pub struct SheafReport {
    pub sheaf: String,
    pub module_zero: bool,
    pub sheaf_zero: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub support_ideal: Option<Vec<String>>,
    pub locally_free_rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fingerprint: Option<Fingerprint>,
}

/// Which optional parts of a report to compute.
#[derive(Clone, Copy, Debug, Default)]
pub struct ReportOptions {
    pub support: bool,
    pub rank: bool,
    pub fingerprint: bool,
}

impl ReportOptions {
    pub fn all() -> Self {
        ReportOptions {
            support: true,
            rank: true,
            fingerprint: true,
        }
    }
}

impl SheafReport {
    pub fn build(sheaf: &SubquotientSheaf, opts: ReportOptions) -> Result<Self> {
        let module_zero = sheaf.module_zero();
        let sheaf_zero = sheaf.is_sheaf_zero()?;
        let support_ideal = if opts.support {
            Some(sheaf.support_ideal()?.format_basis())
        } else {
            None
        };
        let locally_free_rank = if sheaf_zero {
            Some(0)
        } else if opts.rank {
            tolerate_size(sheaf.locally_free_rank())?.flatten()
        } else {
            None
        };
        let fingerprint = if opts.fingerprint {
            tolerate_size(sheaf.fingerprint())?
        } else {
            None
        };
        Ok(SheafReport {
            sheaf: sheaf.label().to_string(),
            module_zero,
            sheaf_zero,
            support_ideal,
            locally_free_rank,
            fingerprint,
        })
    }
}

fn tolerate_size<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::TooLarge(_)) => Ok(None),
        Err(e) => Err(e),
    }
}
