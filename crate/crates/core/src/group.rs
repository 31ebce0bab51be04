//! Built-in infinitesimal group schemes.
//!
//! A [`GroupDescriptor`] carries the ambient coordinate ring of `V(G)`, the
//! reduced presentation of the support scheme, the coefficient of each algebra
//! generator in the global operator, and (for restricted Lie algebras) a faithful
//! matrix realization whose p-operation is the p-th matrix power.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner::{radical_membership, RingPresentation, Submodule};
use crate::matrix::Matrix;
use crate::poly::{poly_matmul, PolyRing, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupFamily {
    Sl2,
    Sl3,
    /// Strictly upper triangular `n × n` matrices.
    Un(usize),
    /// Elementary abelian Lie algebra of dimension `n`.
    En(usize),
    /// Custom matrix Lie algebra spanned by the given realization.
    LieMatrix(usize),
    /// `G_{a(1)}^r`.
    ElemAbelian(usize),
    /// `G_{a(r)}`.
    FrobeniusGa(usize),
}

impl GroupFamily {
    pub fn is_lie(&self) -> bool {
        matches!(
            self,
            GroupFamily::Sl2
                | GroupFamily::Sl3
                | GroupFamily::Un(_)
                | GroupFamily::En(_)
                | GroupFamily::LieMatrix(_)
        )
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupFamily::Sl2 => write!(f, "sl2"),
            GroupFamily::Sl3 => write!(f, "sl3"),
            GroupFamily::Un(n) => write!(f, "u({n})"),
            GroupFamily::En(n) => write!(f, "e({n})"),
            GroupFamily::LieMatrix(n) => write!(f, "lie({n})"),
            GroupFamily::ElemAbelian(r) => write!(f, "ea({r})"),
            GroupFamily::FrobeniusGa(r) => write!(f, "ga({r})"),
        }
    }
}

/// A point of `V(G)` over F_p, validated against the defining ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NullconePoint {
    coords: Vec<u32>,
}

impl NullconePoint {
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }
}

/// JSON form of a group descriptor.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct GroupSpec {
    pub family: String,
    pub p: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Vec<Vec<i64>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

#[derive(Clone, Debug)]
pub struct GroupDescriptor {
    family: GroupFamily,
    p: u32,
    ambient: Arc<PolyRing>,
    basis: Vec<Matrix>,
    brackets: Vec<Vec<Vec<u32>>>,
    p_powers: Vec<Vec<u32>>,
    theta: Vec<Polynomial>,
    reduced: Option<Arc<RingPresentation>>,
}

impl PartialEq for GroupDescriptor {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family && self.p == other.p && self.basis == other.basis
    }
}

fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// Coordinates of `x` in the span of `basis`, if it lies there.
fn span_coords(basis: &[Matrix], x: &Matrix) -> Result<Option<Vec<u32>>> {
    let field = x.field();
    let cols: Vec<Vec<u32>> = basis.iter().map(|b| b.data().to_vec()).collect();
    let a = Matrix::from_columns(field, x.rows() * x.cols(), &cols)?;
    a.solve(x.data())
}

impl GroupDescriptor {
    /// Parses `sl2`, `sl3`, `ea(r)`, `ga(r)`, `u(n)` or `e(n)`.
    pub fn builtin(name: &str, p: u32) -> Result<Self> {
        let name = name.trim();
        let arg = |prefix: &str| -> Option<Result<usize>> {
            let inner = name.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
            Some(
                inner
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad group argument in {name:?}"))),
            )
        };
        if name == "sl2" {
            return Self::sl2(p);
        }
        if name == "sl3" {
            return Self::sl3(p);
        }
        if let Some(r) = arg("ea") {
            return Self::elementary_abelian(r?, p);
        }
        if let Some(r) = arg("ga") {
            return Self::frobenius_ga(r?, p);
        }
        if let Some(n) = arg("u") {
            return Self::upper_unipotent(n?, p);
        }
        if let Some(n) = arg("e") {
            return Self::elementary_lie(n?, p);
        }
        Err(Error::Unsupported(format!("unknown group {name:?}")))
    }

    fn lie(
        family: GroupFamily,
        p: u32,
        names: Vec<String>,
        basis: Vec<Matrix>,
        reduced_ideal: Option<Vec<String>>,
    ) -> Result<Self> {
        let ambient = PolyRing::new(p, names.clone(), vec![1; names.len()])?;
        let n = basis.first().map_or(0, |b| b.rows());
        if basis.is_empty() || basis.iter().any(|b| b.rows() != n || b.cols() != n) {
            return Err(Error::Shape("basis matrices must be square of equal size".into()));
        }
        if names.len() != basis.len() {
            return Err(Error::Shape("one variable name per basis matrix".into()));
        }
        let field = ambient.field();
        let flat: Vec<Vec<u32>> = basis.iter().map(|b| b.data().to_vec()).collect();
        if Matrix::from_columns(field, n * n, &flat)?.rank() != basis.len() {
            return Err(Error::NotRestrictedSubalgebra("basis matrices are linearly dependent".into()));
        }
        let mut brackets = Vec::with_capacity(basis.len());
        for (i, a) in basis.iter().enumerate() {
            let mut row = Vec::with_capacity(basis.len());
            for (j, b) in basis.iter().enumerate() {
                let c = span_coords(&basis, &a.commutator(b)?)?.ok_or_else(|| {
                    Error::NotRestrictedSubalgebra(format!("[{}, {}] leaves the span", names[i], names[j]))
                })?;
                row.push(c);
            }
            brackets.push(row);
        }
        let mut p_powers = Vec::with_capacity(basis.len());
        for (i, a) in basis.iter().enumerate() {
            let c = span_coords(&basis, &a.power(p)?)?.ok_or_else(|| {
                Error::NotRestrictedSubalgebra(format!("{}^[p] leaves the span", names[i]))
            })?;
            p_powers.push(c);
        }
        let theta = (0..names.len()).map(|i| Polynomial::var(&ambient, i)).collect();
        let reduced = match reduced_ideal {
            None => None,
            Some(gens) => {
                let polys = gens
                    .iter()
                    .map(|s| Polynomial::parse(&ambient, s))
                    .collect::<Result<Vec<_>>>()?;
                Some(RingPresentation::new(ambient.clone(), polys)?)
            }
        };
        Ok(GroupDescriptor {
            family,
            p,
            ambient,
            basis,
            brackets,
            p_powers,
            theta,
            reduced,
        })
    }

    pub fn sl2(p: u32) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let e = Matrix::unit(field, 2, 0, 1);
        let f = Matrix::unit(field, 2, 1, 0);
        let h = Matrix::from_rows(field, &[vec![1, 0], vec![0, -1]])?;
        let names = ["x", "y", "z"].map(String::from).to_vec();
        Self::lie(GroupFamily::Sl2, p, names, vec![e, f, h], Some(vec!["x*y+z^2".into()]))
    }

    pub fn sl3(p: u32) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let u = |i, j| Matrix::unit(field, 3, i, j);
        let h7 = Matrix::from_rows(field, &[vec![1, 0, 0], vec![0, -1, 0], vec![0, 0, 0]])?;
        let h8 = Matrix::from_rows(field, &[vec![0, 0, 0], vec![0, 1, 0], vec![0, 0, -1]])?;
        let basis = vec![u(0, 1), u(1, 2), u(0, 2), u(1, 0), u(2, 1), u(2, 0), h7, h8];
        let names: Vec<String> = ["x1", "x2", "x3", "y1", "y2", "y3", "h7", "h8"]
            .map(String::from)
            .to_vec();
        let mut g = Self::lie(GroupFamily::Sl3, p, names, basis, None)?;
        if p >= 3 {
            let (e2, e3) = g.char_poly_coefficients()?;
            g.reduced = Some(RingPresentation::new(g.ambient.clone(), vec![e2, e3])?);
        }
        Ok(g)
    }

    /// `e_2` and `e_3` of the characteristic polynomial of the generic 3×3
    /// matrix (the trace vanishes identically).
    fn char_poly_coefficients(&self) -> Result<(Polynomial, Polynomial)> {
        let m = self.generic_matrix().ok_or(Error::Unsupported("no realization".into()))?;
        let mut e2 = Polynomial::zero(&self.ambient);
        for i in 0..3 {
            for j in i + 1..3 {
                e2 = e2.add(&m[i][i].mul(&m[j][j])?.sub(&m[i][j].mul(&m[j][i])?)?)?;
            }
        }
        let e3 = crate::groebner::determinant(m, &self.ambient)?;
        Ok((e2, e3))
    }

    pub fn upper_unipotent(n: usize, p: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::Range("u(n) needs n >= 2".into()));
        }
        let field = PrimeField::new(p)?;
        let mut basis = Vec::new();
        let mut names = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                basis.push(Matrix::unit(field, n, i, j));
                names.push(format!("x{}{}", i + 1, j + 1));
            }
        }
        let reduced = (p as usize >= n).then(Vec::new);
        Self::lie(GroupFamily::Un(n), p, names, basis, reduced)
    }

    pub fn elementary_lie(n: usize, p: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Range("e(n) needs n >= 1".into()));
        }
        let field = PrimeField::new(p)?;
        let basis = (0..n).map(|j| Matrix::unit(field, n + 1, 0, j + 1)).collect();
        Self::lie(GroupFamily::En(n), p, numbered("x", n), basis, Some(Vec::new()))
    }

    /// Custom matrix Lie algebra; closure under bracket and p-th power is checked.
    pub fn lie_matrix(p: u32, basis: Vec<Matrix>, names: Option<Vec<String>>) -> Result<Self> {
        let names = names.unwrap_or_else(|| numbered("x", basis.len()));
        let n = basis.first().map_or(0, |b| b.rows());
        Self::lie(GroupFamily::LieMatrix(n), p, names, basis, None)
    }

    pub fn elementary_abelian(r: usize, p: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::Range("ea(r) needs r >= 1".into()));
        }
        let ambient = PolyRing::new(p, numbered("x", r), vec![1; r])?;
        let theta = (0..r).map(|i| Polynomial::var(&ambient, i)).collect();
        Ok(GroupDescriptor {
            family: GroupFamily::ElemAbelian(r),
            p,
            reduced: Some(RingPresentation::free(ambient.clone())),
            ambient,
            basis: Vec::new(),
            brackets: Vec::new(),
            p_powers: Vec::new(),
            theta,
        })
    }

    pub fn frobenius_ga(r: usize, p: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::Range("ga(r) needs r >= 1".into()));
        }
        let weights: Vec<u32> = (0..r as u32).map(|i| p.pow(i)).collect();
        let ambient = PolyRing::new(p, numbered("x", r), weights)?;
        let theta = (0..r)
            .map(|i| Polynomial::var(&ambient, i).pow(p.pow((r - 1 - i) as u32)))
            .collect();
        Ok(GroupDescriptor {
            family: GroupFamily::FrobeniusGa(r),
            p,
            reduced: Some(RingPresentation::free(ambient.clone())),
            ambient,
            basis: Vec::new(),
            brackets: Vec::new(),
            p_powers: Vec::new(),
            theta,
        })
    }

    pub fn from_spec(spec: &GroupSpec) -> Result<Self> {
        let need = |v: Option<usize>, what: &str| {
            v.ok_or_else(|| Error::Parse(format!("family {} needs {what}", spec.family)))
        };
        match spec.family.as_str() {
            "sl2" => Self::sl2(spec.p),
            "sl3" => Self::sl3(spec.p),
            "ea" => Self::elementary_abelian(need(spec.r.or(spec.n), "r")?, spec.p),
            "ga" => Self::frobenius_ga(need(spec.r.or(spec.n), "r")?, spec.p),
            "u" => Self::upper_unipotent(need(spec.n, "n")?, spec.p),
            "e" => Self::elementary_lie(need(spec.n, "n")?, spec.p),
            "lie" => {
                let field = PrimeField::new(spec.p)?;
                let rows = spec
                    .basis
                    .as_ref()
                    .ok_or_else(|| Error::Parse("family lie needs basis".into()))?;
                let basis = rows
                    .iter()
                    .map(|m| Matrix::from_rows(field, m))
                    .collect::<Result<Vec<_>>>()?;
                Self::lie_matrix(spec.p, basis, spec.names.clone())
            }
            other => Err(Error::Unsupported(format!("unknown family {other:?}"))),
        }
    }

    pub fn to_spec(&self) -> GroupSpec {
        let (family, n, r) = match &self.family {
            GroupFamily::Sl2 => ("sl2", None, None),
            GroupFamily::Sl3 => ("sl3", None, None),
            GroupFamily::Un(n) => ("u", Some(*n), None),
            GroupFamily::En(n) => ("e", Some(*n), None),
            GroupFamily::LieMatrix(n) => ("lie", Some(*n), None),
            GroupFamily::ElemAbelian(r) => ("ea", None, Some(*r)),
            GroupFamily::FrobeniusGa(r) => ("ga", None, Some(*r)),
        };
        let custom = matches!(self.family, GroupFamily::LieMatrix(_));
        GroupSpec {
            family: family.into(),
            p: self.p,
            n,
            r,
            basis: custom.then(|| self.basis.iter().map(|b| b.to_signed_rows()).collect()),
            names: custom.then(|| self.ambient.names().to_vec()),
        }
    }

    pub fn family(&self) -> &GroupFamily {
        &self.family
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn field(&self) -> PrimeField {
        self.ambient.field()
    }

    pub fn name(&self) -> String {
        self.family.to_string()
    }

    pub fn ambient_ring(&self) -> &Arc<PolyRing> {
        &self.ambient
    }

    pub fn nvars(&self) -> usize {
        self.ambient.nvars()
    }

    /// Number of algebra generators (equals the number of coordinates).
    pub fn num_generators(&self) -> usize {
        self.theta.len()
    }

    /// Frobenius height `r` with `deg Θ = p^{r-1}`.
    pub fn height(&self) -> u32 {
        match self.family {
            GroupFamily::FrobeniusGa(r) => r as u32,
            _ => 1,
        }
    }

    pub fn theta_degree(&self) -> i32 {
        self.p.pow(self.height() - 1) as i32
    }

    /// Faithful matrix realization (empty for the abelian group-ring families).
    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    /// `brackets[i][j]` holds the coordinates of `[b_i, b_j]`.
    pub fn brackets(&self) -> &[Vec<Vec<u32>>] {
        &self.brackets
    }

    /// `p_powers[i]` holds the coordinates of `b_i^[p]`.
    pub fn p_powers(&self) -> &[Vec<u32>] {
        &self.p_powers
    }

    /// True when `kG ≅ k[u_1..u_r]/(u_i^p)` is local and commutative.
    pub fn has_truncated_group_ring(&self) -> bool {
        matches!(
            self.family,
            GroupFamily::ElemAbelian(_) | GroupFamily::FrobeniusGa(_) | GroupFamily::En(_)
        )
    }

    pub fn theta_coefficients(&self) -> &[Polynomial] {
        &self.theta
    }

    /// `Σ x_i b_i` over the ambient ring (Lie families only).
    pub fn generic_matrix(&self) -> Option<Vec<Vec<Polynomial>>> {
        let n = self.basis.first()?.rows();
        let mut m = vec![vec![Polynomial::zero(&self.ambient); n]; n];
        for (k, b) in self.basis.iter().enumerate() {
            let x = Polynomial::var(&self.ambient, k);
            for (i, row) in m.iter_mut().enumerate() {
                for (j, e) in row.iter_mut().enumerate() {
                    let c = b.get(i, j);
                    if c != 0 {
                        *e = e.add(&x.scale(c)).expect("same ring");
                    }
                }
            }
        }
        Some(m)
    }

    /// Ideal of entries of the symbolic p-th power of the generic matrix, in
    /// the free ambient ring; the zero ideal for the group-ring families.
    pub fn nullcone_ideal(&self) -> Result<Submodule> {
        let free = RingPresentation::free(self.ambient.clone());
        let Some(m) = self.generic_matrix() else {
            return Submodule::ideal(&free, &[]);
        };
        let mut acc = m.clone();
        for _ in 1..self.p {
            acc = poly_matmul(&acc, &m)?;
        }
        let entries: Vec<Polynomial> = acc.into_iter().flatten().filter(|e| !e.is_zero()).collect();
        Submodule::ideal(&free, &entries)
    }

    /// Presentation of `k[V(G)]_red`.
    pub fn reduced_coordinate_ring(&self) -> Result<Arc<RingPresentation>> {
        self.reduced.clone().ok_or_else(|| {
            Error::Unsupported(format!(
                "no certified reduced presentation for {} at p = {}",
                self.family, self.p
            ))
        })
    }

    /// Two-sided radical containment between the declared reduced ideal and
    /// the nullcone ideal.
    pub fn certify(&self) -> Result<bool> {
        let reduced = self.reduced_coordinate_ring()?;
        let free = RingPresentation::free(self.ambient.clone());
        let declared = Submodule::ideal(&free, reduced.ideal())?;
        let nullcone = self.nullcone_ideal()?;
        for f in reduced.ideal() {
            if !radical_membership(f, &nullcone)? {
                return Ok(false);
            }
        }
        for f in nullcone.ideal_basis() {
            if !radical_membership(&f, &declared)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn defining_generators(&self) -> Result<Vec<Polynomial>> {
        match &self.reduced {
            Some(r) => Ok(r.ideal().to_vec()),
            None => Ok(self.nullcone_ideal()?.ideal_basis()),
        }
    }

    pub fn validate_point(&self, coords: &[u32]) -> Result<NullconePoint> {
        if coords.len() != self.nvars() {
            return Err(Error::Shape(format!(
                "point has {} coordinates, group has {} variables",
                coords.len(),
                self.nvars()
            )));
        }
        let p = self.p;
        let coords: Vec<u32> = coords.iter().map(|&c| c % p).collect();
        if coords.iter().all(|&c| c == 0) {
            return Err(Error::ZeroPoint);
        }
        for f in self.defining_generators()? {
            if f.specialize(&coords)? != 0 {
                return Err(Error::NotOnNullcone(format!("{f} does not vanish")));
            }
        }
        Ok(NullconePoint { coords })
    }

    /// Parses `1,0,2` or `x1=1,x2=1` (unnamed variables default to zero).
    pub fn parse_point(&self, s: &str) -> Result<NullconePoint> {
        let field = self.field();
        let mut coords = vec![0u32; self.nvars()];
        let items: Vec<&str> = s.split(',').map(str::trim).filter(|t| !t.is_empty()).collect();
        if items.iter().any(|t| t.contains('=')) {
            for item in items {
                let (name, val) = item
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("mixed point syntax in {s:?}")))?;
                let i = self
                    .ambient
                    .var_index(name.trim())
                    .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
                let v: i64 = val.trim().parse().map_err(|_| Error::Parse(format!("bad value {val:?}")))?;
                coords[i] = field.from_i64(v);
            }
        } else {
            if items.len() != self.nvars() {
                return Err(Error::Shape(format!(
                    "point has {} coordinates, group has {} variables",
                    items.len(),
                    self.nvars()
                )));
            }
            for (i, item) in items.iter().enumerate() {
                let v: i64 = item.parse().map_err(|_| Error::Parse(format!("bad value {item:?}")))?;
                coords[i] = field.from_i64(v);
            }
        }
        self.validate_point(&coords)
    }

    /// Deterministic sample of nullcone points. For sl2 and sl3 the points are
    /// random conjugates of nilpotent class representatives, cycling through
    /// the classes; otherwise uniform nonzero vectors (rejection-sampled
    /// against the nullcone for custom realizations).
    pub fn sample_points(&self, count: usize, seed: u64) -> Result<Vec<NullconePoint>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let field = self.field();
        let p = self.p;
        let mut out = Vec::with_capacity(count);
        match self.family {
            GroupFamily::Sl2 | GroupFamily::Sl3 => {
                let n = self.basis[0].rows();
                let reps: Vec<Matrix> = if n == 2 {
                    vec![Matrix::unit(field, 2, 0, 1)]
                } else {
                    vec![
                        Matrix::unit(field, 3, 0, 2),
                        Matrix::unit(field, 3, 0, 1).add(&Matrix::unit(field, 3, 1, 2))?,
                    ]
                };
                for k in 0..count {
                    let (g, ginv) = loop {
                        let data = (0..n * n).map(|_| rng.gen_range(0..p)).collect();
                        let g = Matrix::from_data(field, n, n, data)?;
                        if let Some(inv) = g.inverse()? {
                            break (g, inv);
                        }
                    };
                    let x = g.mul(&reps[k % reps.len()])?.mul(&ginv)?;
                    let c = span_coords(&self.basis, &x)?.ok_or_else(|| {
                        Error::InternalInvariantViolation("conjugate left the Lie algebra".into())
                    })?;
                    out.push(self.validate_point(&c)?);
                }
            }
            _ => {
                let nv = self.nvars();
                let needs_check = self.reduced.as_ref().is_none_or(|r| !r.ideal().is_empty());
                let mut attempts = 0usize;
                while out.len() < count {
                    attempts += 1;
                    if attempts > 10_000 * count.max(1) {
                        return Err(Error::Unsupported(
                            "rejection sampler found too few nullcone points".into(),
                        ));
                    }
                    let c: Vec<u32> = (0..nv).map(|_| rng.gen_range(0..p)).collect();
                    if c.iter().all(|&x| x == 0) {
                        continue;
                    }
                    if needs_check {
                        match self.validate_point(&c) {
                            Ok(pt) => out.push(pt),
                            Err(Error::NotOnNullcone(_)) => continue,
                            Err(e) => return Err(e),
                        }
                    } else {
                        out.push(NullconePoint { coords: c });
                    }
                }
            }
        }
        Ok(out)
    }

    /// Generic matrix evaluated at a point.
    pub fn matrix_at(&self, point: &NullconePoint) -> Option<Matrix> {
        let n = self.basis.first()?.rows();
        let field = self.field();
        let mut m = Matrix::zeros(field, n, n);
        for (b, &c) in self.basis.iter().zip(point.coords()) {
            m = m.add(&b.scale(c)).ok()?;
        }
        Some(m)
    }
}
