//! Finite-dimensional representations of the built-in group schemes.
//!
//! A [`Representation`] stores one action matrix per algebra generator. For
//! the truncated group-ring families (`ea(r)`, `ga(r)`, `e(n)`) the module is a
//! module over `k[u_1, …, u_r]/(u_i^p)`, which is local, so projective covers
//! and Heller shifts are computed directly.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupDescriptor, GroupFamily, GroupSpec, NullconePoint};
use crate::groebner::RingPresentation;
use crate::matrix::Matrix;
use crate::partition::Partition;
use crate::poly::Polynomial;
use crate::sheaf::GradedMatrix;

#[derive(Clone, Debug)]
pub struct Representation {
    group: Arc<GroupDescriptor>,
    dim: usize,
    matrices: Vec<Matrix>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        *self.group == *other.group && self.dim == other.dim && self.matrices == other.matrices
    }
}

/// Jordan type of the local operator at one point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalJordanReport {
    pub point: NullconePoint,
    #[serde(serialize_with = "display_partition")]
    pub partition: Partition,
    /// `rank θ^0, …, rank θ^p`.
    pub ranks: Vec<usize>,
    pub projective: bool,
}

fn display_partition<S: serde::Serializer>(p: &Partition, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

/// JSON form of a module.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ModuleSpec {
    pub group: GroupSpec,
    pub dim: usize,
    pub matrices: Vec<Vec<Vec<i64>>>,
}

fn diagnostics(what: String) -> Error {
    Error::InvalidRepresentation(what)
}

impl Representation {
    /// Builds and validates a representation.
    pub fn new(group: Arc<GroupDescriptor>, matrices: Vec<Matrix>) -> Result<Self> {
        let dim = matrices.first().map_or(0, |m| m.rows());
        let r = Representation { group, dim, matrices };
        r.validate()?;
        Ok(r)
    }

    /// The zero module.
    pub fn zero(group: Arc<GroupDescriptor>) -> Self {
        let field = group.field();
        let matrices = vec![Matrix::zeros(field, 0, 0); group.num_generators()];
        Representation { group, dim: 0, matrices }
    }

    pub fn group(&self) -> &Arc<GroupDescriptor> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn p(&self) -> u32 {
        self.group.p()
    }

    /// Checks shapes, the bracket and p-power relations (Lie families) or
    /// commutativity and `ρ_i^p = 0` (group-ring families).
    pub fn validate(&self) -> Result<()> {
        let g = &self.group;
        let field = g.field();
        if self.matrices.len() != g.num_generators() {
            return Err(diagnostics(format!(
                "{} action matrices for {} generators",
                self.matrices.len(),
                g.num_generators()
            )));
        }
        for (i, m) in self.matrices.iter().enumerate() {
            if m.rows() != self.dim || m.cols() != self.dim {
                return Err(diagnostics(format!(
                    "matrix {i} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    self.dim,
                    self.dim
                )));
            }
            if m.field() != field {
                return Err(Error::ModulusMismatch(m.field().p(), field.p()));
            }
        }
        let combo = |coords: &[u32]| -> Result<Matrix> {
            let mut acc = Matrix::zeros(field, self.dim, self.dim);
            for (k, &c) in coords.iter().enumerate() {
                if c != 0 {
                    acc = acc.add(&self.matrices[k].scale(c))?;
                }
            }
            Ok(acc)
        };
        let s = self.matrices.len();
        if g.family().is_lie() {
            for i in 0..s {
                for j in i + 1..s {
                    let lhs = self.matrices[i].commutator(&self.matrices[j])?;
                    if lhs != combo(&g.brackets()[i][j])? {
                        return Err(diagnostics(format!("bracket relation [ρ{i}, ρ{j}] fails")));
                    }
                }
                let lhs = self.matrices[i].power(g.p())?;
                if lhs != combo(&g.p_powers()[i])? {
                    return Err(diagnostics(format!("p-power relation for ρ{i} fails")));
                }
            }
        } else {
            for i in 0..s {
                for j in i + 1..s {
                    if !self.matrices[i].commutator(&self.matrices[j])?.is_zero() {
                        return Err(diagnostics(format!("ρ{i} and ρ{j} do not commute")));
                    }
                }
                if !self.matrices[i].power(g.p())?.is_zero() {
                    return Err(diagnostics(format!("ρ{i}^p is not zero")));
                }
            }
        }
        Ok(())
    }

    fn check_group(&self, other: &Representation) -> Result<()> {
        if *self.group != *other.group {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    fn with_matrices(&self, matrices: Vec<Matrix>) -> Representation {
        let dim = matrices.first().map_or(0, |m| m.rows());
        Representation {
            group: self.group.clone(),
            dim,
            matrices,
        }
    }

    /// `ρ_i ↦ -ρ_iᵀ`.
    pub fn dual(&self) -> Representation {
        self.with_matrices(self.matrices.iter().map(|m| m.transpose().neg()).collect())
    }

    /// `ρ_i ⊗ 1 + 1 ⊗ σ_i`.
    pub fn tensor(&self, other: &Representation) -> Result<Representation> {
        self.check_group(other)?;
        if let GroupFamily::FrobeniusGa(r) = self.group.family() {
            if *r >= 2 {
                return Err(Error::Unsupported(
                    "tensor products over ga(r) with r >= 2 need the non-primitive coproduct".into(),
                ));
            }
        }
        let field = self.group.field();
        let ia = Matrix::identity(field, self.dim);
        let ib = Matrix::identity(field, other.dim);
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| a.kron(&ib)?.add(&ia.kron(b)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.with_matrices(matrices))
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        self.check_group(other)?;
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| a.block_diag(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.with_matrices(matrices))
    }

    fn require_local(&self, what: &str) -> Result<()> {
        if !self.group.has_truncated_group_ring() {
            return Err(Error::Unsupported(format!(
                "{what} needs a local commutative group ring; {} is not one",
                self.group.name()
            )));
        }
        Ok(())
    }

    /// Basis of the radical `Σ im ρ_i` as columns.
    fn radical_matrix(&self) -> Result<Matrix> {
        let field = self.group.field();
        let mut cols = Vec::new();
        for m in &self.matrices {
            for j in 0..self.dim {
                cols.push(m.column(j));
            }
        }
        Matrix::from_columns(field, self.dim, &cols)
    }

    /// Indices of standard basis vectors forming the lexicographically first
    /// basis of `R / rad R`.
    fn top_section(&self) -> Result<Vec<usize>> {
        let field = self.group.field();
        let rad = self.radical_matrix()?;
        let mut cols: Vec<Vec<u32>> = (0..rad.cols()).map(|j| rad.column(j)).collect();
        let mut rank = rad.rank();
        let mut chosen = Vec::new();
        for k in 0..self.dim {
            let mut e = vec![0u32; self.dim];
            e[k] = 1;
            cols.push(e);
            let r = Matrix::from_columns(field, self.dim, &cols)?.rank();
            if r > rank {
                rank = r;
                chosen.push(k);
            } else {
                cols.pop();
            }
        }
        Ok(chosen)
    }

    /// Dimension of `R / rad R`.
    pub fn top_dimension(&self) -> Result<usize> {
        self.require_local("the top of a module")?;
        Ok(self.top_section()?.len())
    }

    /// Heller shift: kernel of `kG ⊗ top(R) → R`.
    pub fn heller(&self) -> Result<Representation> {
        self.require_local("the Heller shift")?;
        let field = self.group.field();
        let p = self.p() as usize;
        let r = self.group.num_generators();
        let top = self.top_section()?;
        let exps = group_ring_exponents(p, r);
        let n = exps.len();
        let dim_p = n * top.len();
        if dim_p == 0 {
            return Ok(Representation::zero(self.group.clone()));
        }
        let mut pi_cols = Vec::with_capacity(dim_p);
        for a in &exps {
            for &k in &top {
                let mut v = vec![0u32; self.dim];
                v[k] = 1;
                for (i, &e) in a.iter().enumerate().rev() {
                    for _ in 0..e {
                        v = self.matrices[i].apply(&v)?;
                    }
                }
                pi_cols.push(v);
            }
        }
        let pi = Matrix::from_columns(field, self.dim, &pi_cols)?;
        let kernel = pi.kernel_basis();
        let m = kernel.len();
        if m == 0 {
            return Ok(Representation::zero(self.group.clone()));
        }
        let kmat = Matrix::from_columns(field, dim_p, &kernel)?;
        let regular = regular_matrices(field, p, r);
        let t = top.len();
        let mut matrices = Vec::with_capacity(r);
        for reg in &regular {
            let act = reg.kron(&Matrix::identity(field, t))?;
            let mut cols = Vec::with_capacity(m);
            for b in &kernel {
                let img = act.apply(b)?;
                let c = kmat.solve(&img)?.ok_or_else(|| {
                    Error::InternalInvariantViolation("kernel of a module map is not a submodule".into())
                })?;
                cols.push(c);
            }
            matrices.push(Matrix::from_columns(field, m, &cols)?);
        }
        let out = self.with_matrices(matrices);
        out.validate()?;
        Ok(out)
    }

    /// Over a local group ring, projective means free: `dim R = dim kG · dim top R`.
    pub fn is_projective_exact(&self) -> Result<bool> {
        self.require_local("exact projectivity")?;
        let n = (self.p() as usize).pow(self.group.num_generators() as u32);
        Ok(self.dim == n * self.top_section()?.len())
    }

    /// Global operator `Θ_M = Σ c_i(x) ρ_i` over the coordinate ring of the group.
    pub fn assemble_theta(&self) -> Result<GradedMatrix> {
        let ring = coordinate_ring(&self.group)?;
        let pr = ring.poly_ring().clone();
        let coeffs = self.group.theta_coefficients();
        let mut entries = vec![vec![Polynomial::zero(&pr); self.dim]; self.dim];
        for (c, m) in coeffs.iter().zip(&self.matrices) {
            for (a, row) in entries.iter_mut().enumerate() {
                for (b, e) in row.iter_mut().enumerate() {
                    let v = m.get(a, b);
                    if v != 0 {
                        *e = e.add(&c.scale(v))?;
                    }
                }
            }
        }
        let deg = self.group.theta_degree();
        GradedMatrix::new(ring, entries, vec![0; self.dim], vec![deg; self.dim])
    }

    /// Local operator `θ_v = Σ c_i(v) ρ_i`.
    pub fn operator_at(&self, point: &NullconePoint) -> Result<Matrix> {
        let point = self.group.validate_point(point.coords())?;
        let field = self.group.field();
        let mut acc = Matrix::zeros(field, self.dim, self.dim);
        for (c, m) in self.group.theta_coefficients().iter().zip(&self.matrices) {
            let v = c.specialize(point.coords())?;
            if v != 0 {
                acc = acc.add(&m.scale(v))?;
            }
        }
        Ok(acc)
    }

    pub fn jordan_type_at(&self, point: &NullconePoint) -> Result<LocalJordanReport> {
        let theta = self.operator_at(point)?;
        let p = self.p();
        let ranks = theta.power_ranks(p)?;
        if ranks[p as usize] != 0 {
            return Err(Error::NotPNilpotent(p));
        }
        let partition = Partition::from_rank_sequence(&ranks)?;
        let projective = is_projective_type(&partition, self.dim, p);
        Ok(LocalJordanReport {
            point: point.clone(),
            partition,
            ranks,
            projective,
        })
    }

    pub fn is_projective_at(&self, point: &NullconePoint) -> Result<bool> {
        Ok(self.jordan_type_at(point)?.projective)
    }

    /// Reports sorted by point coordinates.
    pub fn jordan_reports(&self, points: &[NullconePoint]) -> Result<Vec<LocalJordanReport>> {
        let mut out = points
            .iter()
            .map(|v| self.jordan_type_at(v))
            .collect::<Result<Vec<_>>>()?;
        out.sort_by(|a, b| a.point.cmp(&b.point));
        Ok(out)
    }

    /// The common Jordan type over the sample, if there is one.
    pub fn constant_jt_check(&self, sample: &[NullconePoint]) -> Result<Option<Partition>> {
        if sample.is_empty() {
            return Err(Error::Range("constant Jordan type check needs a nonempty sample".into()));
        }
        let mut common: Option<Partition> = None;
        for v in sample {
            let jt = self.jordan_type_at(v)?.partition;
            match &common {
                None => common = Some(jt),
                Some(c) if *c != jt => return Ok(None),
                _ => {}
            }
        }
        Ok(common)
    }

    pub fn to_spec(&self) -> ModuleSpec {
        ModuleSpec {
            group: self.group.to_spec(),
            dim: self.dim,
            matrices: self.matrices.iter().map(|m| m.to_signed_rows()).collect(),
        }
    }

    pub fn from_spec(spec: &ModuleSpec) -> Result<Self> {
        let group = Arc::new(GroupDescriptor::from_spec(&spec.group)?);
        Self::from_rows(group, spec.dim, &spec.matrices)
    }

    /// Builds a module over a known group from integer matrices.
    pub fn from_rows(group: Arc<GroupDescriptor>, dim: usize, rows: &[Vec<Vec<i64>>]) -> Result<Self> {
        let field = group.field();
        let matrices = rows
            .iter()
            .map(|m| {
                if dim == 0 {
                    Ok(Matrix::zeros(field, 0, 0))
                } else {
                    Matrix::from_rows(field, m)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let r = Representation {
            group,
            dim,
            matrices,
        };
        r.validate()?;
        Ok(r)
    }
}

fn is_projective_type(partition: &Partition, dim: usize, p: u32) -> bool {
    let p = p as usize;
    dim % p == 0 && *partition == Partition::uniform(p, dim / p)
}

/// Presentation over which `Θ` lives: the certified reduced ring when there
/// is one, the ring cut out by the nullcone ideal otherwise.
pub fn coordinate_ring(group: &GroupDescriptor) -> Result<Arc<RingPresentation>> {
    match group.reduced_coordinate_ring() {
        Ok(r) => Ok(r),
        Err(Error::Unsupported(_)) => {
            let gens = group.nullcone_ideal()?.ideal_basis();
            RingPresentation::new(group.ambient_ring().clone(), gens)
        }
        Err(e) => Err(e),
    }
}

/// Exponent vectors of the monomial basis of `k[u_1..u_r]/(u_i^p)`, in
/// lexicographic order.
fn group_ring_exponents(p: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|a| {
                (0..p).map(move |e| {
                    let mut b = a.clone();
                    b.push(e);
                    b
                })
            })
            .collect();
    }
    out
}

/// Multiplication by each `u_i` on the monomial basis.
fn regular_matrices(field: crate::field::PrimeField, p: usize, r: usize) -> Vec<Matrix> {
    let exps = group_ring_exponents(p, r);
    let index = |a: &[usize]| a.iter().fold(0usize, |acc, &e| acc * p + e);
    let n = exps.len();
    (0..r)
        .map(|i| {
            let mut m = Matrix::zeros(field, n, n);
            for (j, a) in exps.iter().enumerate() {
                if a[i] + 1 < p {
                    let mut b = a.clone();
                    b[i] += 1;
                    m.set(index(&b), j, 1);
                }
            }
            m
        })
        .collect()
}

/// Trivial module `k`.
pub fn trivial(group: &Arc<GroupDescriptor>) -> Representation {
    let field = group.field();
    Representation {
        group: group.clone(),
        dim: 1,
        matrices: vec![Matrix::zeros(field, 1, 1); group.num_generators()],
    }
}

/// The group ring acting on itself (truncated group-ring families only).
pub fn regular(group: &Arc<GroupDescriptor>) -> Result<Representation> {
    if !group.has_truncated_group_ring() {
        return Err(Error::Unsupported(format!(
            "regular module of {} is not built in",
            group.name()
        )));
    }
    let matrices = regular_matrices(group.field(), group.p() as usize, group.num_generators());
    Representation::new(group.clone(), matrices)
}

/// The defining matrix realization (Lie families).
pub fn standard(group: &Arc<GroupDescriptor>) -> Result<Representation> {
    if group.basis().is_empty() {
        return Err(Error::Unsupported(format!(
            "{} has no matrix realization",
            group.name()
        )));
    }
    Representation::new(group.clone(), group.basis().to_vec())
}

/// Standard representation of sl₃.
pub fn sl3_standard(group: &Arc<GroupDescriptor>) -> Result<Representation> {
    if *group.family() != GroupFamily::Sl3 {
        return Err(Error::Unsupported("sl3_standard needs the group sl3".into()));
    }
    standard(group)
}

/// Simple module `L(λ)` of sl₂ with basis `v_0..v_λ`.
pub fn sl2_simple(group: &Arc<GroupDescriptor>, lambda: u32) -> Result<Representation> {
    if *group.family() != GroupFamily::Sl2 {
        return Err(Error::Unsupported("sl2_simple needs the group sl2".into()));
    }
    let p = group.p();
    if lambda >= p {
        return Err(Error::Range(format!("highest weight {lambda} outside 0..{}", p - 1)));
    }
    let field = group.field();
    let n = lambda as usize + 1;
    let l = lambda as i64;
    let mut e = Matrix::zeros(field, n, n);
    let mut f = Matrix::zeros(field, n, n);
    let mut h = Matrix::zeros(field, n, n);
    for i in 0..n {
        let ii = i as i64;
        h.set(i, i, field.from_i64(l - 2 * ii));
        if i + 1 < n {
            f.set(i + 1, i, 1);
        }
        if i > 0 {
            e.set(i - 1, i, field.from_i64(ii * (l - ii + 1)));
        }
    }
    Representation::new(group.clone(), vec![e, f, h])
}

/// Resolves `sl3_standard`, `sl2_simple(λ)`, `trivial`, `regular` or `standard`.
pub fn builtin_module(group: &Arc<GroupDescriptor>, name: &str) -> Result<Representation> {
    let name = name.trim();
    if let Some(arg) = name
        .strip_prefix("sl2_simple")
        .and_then(|s| s.trim().strip_prefix('('))
        .and_then(|s| s.strip_suffix(')'))
    {
        let lambda = arg
            .trim()
            .parse::<u32>()
            .map_err(|_| Error::Parse(format!("bad highest weight in {name}")))?;
        return sl2_simple(group, lambda);
    }
    match name {
        "sl3_standard" => sl3_standard(group),
        "trivial" => Ok(trivial(group)),
        "regular" => regular(group),
        "standard" => standard(group),
        _ => Err(Error::Unsupported(format!("unknown module {name}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(name: &str, p: u32) -> Arc<GroupDescriptor> {
        Arc::new(GroupDescriptor::builtin(name, p).unwrap())
    }

    fn point(g: &GroupDescriptor, s: &str) -> NullconePoint {
        g.parse_point(s).unwrap()
    }

    #[test]
    fn builtins_validate() {
        let sl3 = group("sl3", 3);
        assert_eq!(sl3_standard(&sl3).unwrap().dim(), 3);
        assert_eq!(trivial(&sl3).dim(), 1);
        assert!(trivial(&sl3).validate().is_ok());
        let sl2 = group("sl2", 5);
        for l in 0..5 {
            assert_eq!(sl2_simple(&sl2, l).unwrap().dim(), l as usize + 1);
        }
        assert!(sl2_simple(&sl2, 5).is_err());
        assert_eq!(regular(&group("ea(2)", 3)).unwrap().dim(), 9);
        assert!(regular(&sl3).is_err());
        assert!(matches!(builtin_module(&sl3, "nope"), Err(Error::Unsupported(_))));
    }

    #[test]
    fn non_commuting_matrices_are_rejected() {
        let g = group("ea(2)", 2);
        let a = Matrix::from_rows(g.field(), &[vec![0, 1], vec![0, 0]]).unwrap();
        let b = a.transpose();
        assert!(matches!(
            Representation::new(g, vec![a, b]),
            Err(Error::InvalidRepresentation(_))
        ));
    }

    #[test]
    fn dual_and_sum_basics() {
        let g = group("sl3", 3);
        let m = sl3_standard(&g).unwrap();
        assert_eq!(m.dual().dual(), m);
        assert_eq!(trivial(&g).dual(), trivial(&g));
        assert!(m.dual().validate().is_ok());
        let z = Representation::zero(g.clone());
        assert_eq!(m.direct_sum(&z).unwrap(), m);
        assert_eq!(trivial(&g).tensor(&m).unwrap(), m);
        assert_eq!(m.tensor(&m.dual()).unwrap().dim(), 9);
    }

    #[test]
    fn theta_of_the_sl3_fixture() {
        let g = group("sl3", 3);
        let theta = sl3_standard(&g).unwrap().assemble_theta().unwrap();
        let r = g.ambient_ring();
        let expected = [["h7", "x1", "x3"], ["y1", "h8-h7", "x2"], ["y3", "y2", "-h8"]];
        for (row, want) in theta.entries().iter().zip(expected) {
            for (e, w) in row.iter().zip(want) {
                assert_eq!(*e, Polynomial::parse(r, w).unwrap());
            }
        }
    }

    #[test]
    fn orbit_jordan_types() {
        let g = group("sl3", 3);
        let m = sl3_standard(&g).unwrap();
        let sub = point(&g, "0,0,1,0,0,0,0,0");
        let reg = point(&g, "x1=1,x2=1");
        assert_eq!(m.jordan_type_at(&sub).unwrap().partition.to_string(), "[2][1]");
        let r = m.jordan_type_at(&reg).unwrap();
        assert_eq!(r.partition.to_string(), "[3]");
        assert_eq!(r.ranks, [3, 2, 1, 0]);
        assert!(r.projective);
        assert!(!m.is_projective_at(&sub).unwrap());
        assert_eq!(m.constant_jt_check(&[sub, reg]).unwrap(), None);
    }

    #[test]
    fn heller_shifts() {
        let g = group("ea(1)", 5);
        let om = trivial(&g).heller().unwrap();
        assert_eq!(om.dim(), 4);
        assert_eq!(om.matrices()[0].nilpotent_jordan_type(5).unwrap().to_string(), "[4]");
        assert!(!om.is_projective_exact().unwrap());
        let g = group("ea(2)", 2);
        assert_eq!(trivial(&g).heller().unwrap().dim(), 3);
        let kg = regular(&g).unwrap();
        assert!(kg.is_projective_exact().unwrap());
        assert!(!trivial(&g).is_projective_exact().unwrap());
        assert_eq!(kg.heller().unwrap().dim(), 0);
        assert!(trivial(&group("sl2", 3)).heller().is_err());
    }

    #[test]
    fn tensor_of_two_truncated_lines() {
        let g = group("ea(1)", 2);
        let kg = regular(&g).unwrap();
        let t = kg.tensor(&kg).unwrap();
        let pt = point(&g, "1");
        assert_eq!(t.jordan_type_at(&pt).unwrap().partition.to_string(), "[2]^2");
        assert!(regular(&group("ga(2)", 2)).unwrap().tensor(&trivial(&group("ga(2)", 2))).is_err());
    }

    #[test]
    fn steinberg_is_projective_everywhere_sampled() {
        let g = group("sl2", 3);
        let st = sl2_simple(&g, 2).unwrap();
        let pts = g.sample_points(30, 7).unwrap();
        assert_eq!(st.constant_jt_check(&pts).unwrap().unwrap().to_string(), "[3]");
        let l1 = sl2_simple(&g, 1).unwrap();
        assert_eq!(l1.constant_jt_check(&pts).unwrap().unwrap().to_string(), "[2]");
    }

    #[test]
    fn module_json_roundtrip() {
        let g = group("sl2", 5);
        let m = sl2_simple(&g, 3).unwrap();
        let s = serde_json::to_string(&m.to_spec()).unwrap();
        let back: ModuleSpec = serde_json::from_str(&s).unwrap();
        assert_eq!(Representation::from_spec(&back).unwrap(), m);
    }
}
