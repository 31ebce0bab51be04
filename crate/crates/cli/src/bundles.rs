//! Verification bundles run by `thetasheaf verify`.

use std::sync::Arc;

use serde::Serialize;
use thetasheaf::rep::{self, Representation};
use thetasheaf::sheaf::{Operator, SubquotientSheaf};
use thetasheaf::{radical_membership, Error, GroupDescriptor, Polynomial, Result, Submodule};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Params {
    pub p: Option<u32>,
    pub r: Option<usize>,
    pub seed: u64,
}

pub const O9: [&str; 8] = [
    "x3*y3 + h7*h8",
    "x2*y3 + y1*h8",
    "x1*y3 - y2*h7",
    "y1*y2 + y3*h7 - y3*h8",
    "x3*y2 + x1*h8",
    "x2*y2 - h7*h8 + h8^2",
    "x3*y1 - x2*h7",
    "x1*x2 + x3*h7 - x3*h8",
];

fn window(fp: &thetasheaf::sheaf::Fingerprint) -> String {
    match fp.window() {
        Some((lo, hi)) => format!("[{lo}, {hi}]"),
        None => "empty".into(),
    }
}

fn operator(m: &Representation) -> Result<Operator> {
    Operator::new(m.assemble_theta()?, m.p())
}

fn h_of(m: &Representation) -> Result<SubquotientSheaf> {
    operator(m)?.h_sheaf(1)
}

fn h_zero(m: &Representation) -> Result<bool> {
    if m.dim() == 0 {
        return Ok(true);
    }
    h_of(m)?.is_sheaf_zero()
}

/// Two-sided radical containment of ideals given by generators.
pub fn radical_equal(a: &[Polynomial], b: &[Polynomial], ring: &Arc<thetasheaf::RingPresentation>) -> Result<bool> {
    let ia = Submodule::ideal(ring, a)?;
    let ib = Submodule::ideal(ring, b)?;
    for f in a {
        if !radical_membership(f, &ib)? {
            return Ok(false);
        }
    }
    for f in b {
        if !radical_membership(f, &ia)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn fig1() -> Result<Vec<Check>> {
    let g = Arc::new(GroupDescriptor::builtin("sl3", 3)?);
    let m = rep::sl3_standard(&g)?;
    let mut out = Vec::new();
    for (name, module) in [("o5", m.clone()), ("o7", m.dual())] {
        let h = h_of(&module)?;
        let (mz, sz) = (h.module_zero(), h.is_sheaf_zero()?);
        out.push(Check::new(
            name,
            mz && sz,
            format!("module_zero = {mz}, sheaf_zero = {sz}"),
        ));
    }
    let t = m.tensor(&m.dual())?;
    let ann = h_of(&t)?.support_ideal()?;
    let reference: Vec<Polynomial> = O9
        .iter()
        .map(|s| Polynomial::parse(g.ambient_ring(), s))
        .collect::<Result<_>>()?;
    let eq = radical_equal(&ann.ideal_basis(), &reference, ann.ring())?;
    out.push(Check::new(
        "o9",
        eq,
        format!("support of H(M ⊗ M*) has {} generators, radical-equal to o9: {eq}", ann.gens().len()),
    ));
    Ok(out)
}

pub fn sl2_regular(params: Params) -> Result<Vec<Check>> {
    let primes = params.p.map_or(vec![3, 5], |p| vec![p]);
    let mut out = Vec::new();
    for p in primes {
        let g = Arc::new(GroupDescriptor::builtin("sl2", p)?);
        let pts = g.sample_points(30, params.seed)?;
        for l in 0..p {
            let m = rep::sl2_simple(&g, l)?;
            let sz = h_zero(&m)?;
            let mut pointwise = true;
            for v in &pts {
                pointwise &= m.is_projective_at(v)?;
            }
            let expected = l == p - 1;
            out.push(Check::new(
                format!("p={p} L({l})"),
                sz == expected && pointwise == expected,
                format!("sheaf_zero = {sz}, projective at all {} samples = {pointwise}", pts.len()),
            ));
        }
    }
    Ok(out)
}

/// Hilbert values of `O(t)` on `P^{n-1}`: `binom(d + t + n - 1, n - 1)`.
fn twisted_structure_hf(d: i32, t: i32, n: usize) -> usize {
    let e = d + t;
    if e < 0 {
        return 0;
    }
    let e = e as u128;
    let k = (n - 1) as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (e + k - i) / (i + 1);
    }
    acc as usize
}

pub fn bgg_values(params: Params) -> Result<Vec<Check>> {
    let p = params.p.unwrap_or(2);
    let ranks = params.r.map_or(vec![2, 3], |r| vec![r]);
    let mut out = Vec::new();
    for n in ranks {
        let g = Arc::new(GroupDescriptor::builtin(&format!("ea({n})"), p)?);
        let k = rep::trivial(&g);
        for (name, m, twist) in [("H(k) = O", k.clone(), 0), ("H(Ω k) = O(-1)", k.heller()?, -1)] {
            let fp = h_of(&m)?.fingerprint()?;
            let bad: Vec<i32> = fp
                .hilbert
                .iter()
                .filter(|(&d, &v)| v != twisted_structure_hf(d, twist, n))
                .map(|(&d, _)| d)
                .collect();
            out.push(Check::new(
                format!("ea({n}) p={p} {name}"),
                bad.is_empty(),
                format!("window {}, mismatched degrees {bad:?}", window(&fp)),
            ));
        }
    }
    Ok(out)
}

pub fn fomega(group: &str, params: Params) -> Result<Vec<Check>> {
    let p = params.p.unwrap_or(3);
    let g = Arc::new(GroupDescriptor::builtin(group, p)?);
    let q = g.theta_degree();
    let k = rep::trivial(&g);
    let om = k.heller()?;
    let mut out = Vec::new();
    for (name, m) in [("k", k), ("Ω k", om)] {
        let shifted = m.heller()?;
        let (a_op, b_op) = (operator(&m)?, operator(&shifted)?);
        for i in 1..p {
            let a = a_op.f_sheaf(i)?.fingerprint()?;
            let b = b_op
                .f_sheaf(p - i)?
                .twisted((p - i) as i32 * q)
                .fingerprint()?;
            out.push(Check::new(
                format!("{name}: F_{i} vs F_{}(Ω)", p - i),
                a.matches(&b),
                format!("windows {} / {}", window(&a), window(&b)),
            ));
        }
    }
    Ok(out)
}

pub fn thick(group: &str, params: Params) -> Result<Vec<Check>> {
    let p = params.p.unwrap_or(3);
    let g = Arc::new(GroupDescriptor::builtin(group, p)?);
    if !g.has_truncated_group_ring() {
        return Err(Error::Unsupported(format!("thick bundle needs a local group ring, not {}", g.name())));
    }
    let k = rep::trivial(&g);
    let kg = rep::regular(&g)?;
    let fixtures = vec![("k".to_string(), k.clone()), ("Ωk".to_string(), k.heller()?), ("kG".to_string(), kg)];
    let zero: Vec<bool> = fixtures.iter().map(|(_, m)| h_zero(m)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    out.push(Check::new(
        "detection",
        zero[2] && !zero[0],
        format!("H(kG) = 0: {}, H(k) = 0: {}", zero[2], zero[0]),
    ));
    for a in 0..fixtures.len() {
        for b in a..fixtures.len() {
            let s = fixtures[a].1.direct_sum(&fixtures[b].1)?;
            let zs = h_zero(&s)?;
            let name = format!("{} ⊕ {}", fixtures[a].0, fixtures[b].0);
            if zero[a] && zero[b] {
                out.push(Check::new(format!("sum {name}"), zs, format!("H = 0: {zs}")));
            }
            out.push(Check::new(
                format!("summands {name}"),
                !zs || (zero[a] && zero[b]),
                format!("H(sum) = 0: {zs}, summands: {} / {}", zero[a], zero[b]),
            ));
        }
    }
    for (i, (name, m)) in fixtures.iter().enumerate() {
        if zero[i] {
            let zo = h_zero(&m.heller()?)?;
            out.push(Check::new(format!("Ω({name})"), zo, format!("H = 0: {zo}")));
        }
    }
    Ok(out)
}
