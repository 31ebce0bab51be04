#![allow(dead_code)]

use std::sync::Arc;

use thetasheaf::rep::{self, Representation};
use thetasheaf::sheaf::{Operator, SubquotientSheaf};
use thetasheaf::{radical_membership, GroupDescriptor, Matrix, Result, Submodule};

pub struct Fixture {
    pub name: String,
    pub module: Representation,
}

fn fx(name: impl Into<String>, module: Representation) -> Fixture {
    Fixture {
        name: name.into(),
        module,
    }
}

pub fn group(name: &str, p: u32) -> Arc<GroupDescriptor> {
    Arc::new(GroupDescriptor::builtin(name, p).unwrap())
}

pub fn sl2_fixtures() -> Vec<Fixture> {
    let mut out = Vec::new();
    for p in [3, 5] {
        let g = group("sl2", p);
        for l in 0..p {
            out.push(fx(format!("sl2 p={p} L({l})"), rep::sl2_simple(&g, l).unwrap()));
        }
    }
    out
}

pub fn sl3_fixtures() -> Vec<Fixture> {
    let g = group("sl3", 3);
    let m = rep::sl3_standard(&g).unwrap();
    vec![fx("sl3 M", m.clone()), fx("sl3 M*", m.dual())]
}

pub fn ea_fixtures() -> Vec<Fixture> {
    let mut out = Vec::new();
    for (r, p) in [(2, 2), (3, 2), (2, 3)] {
        let g = group(&format!("ea({r})"), p);
        let k = rep::trivial(&g);
        let om = k.heller().unwrap();
        out.push(fx(format!("ea({r}) p={p} k"), k));
        out.push(fx(format!("ea({r}) p={p} Ωk"), om));
        out.push(fx(format!("ea({r}) p={p} kG"), rep::regular(&g).unwrap()));
    }
    out
}

pub fn ga_fixtures() -> Vec<Fixture> {
    let g = group("ga(2)", 2);
    vec![fx("ga(2) p=2 k", rep::trivial(&g))]
}

/// Every fixture used by the acceptance criteria.
pub fn all_fixtures() -> Vec<Fixture> {
    let mut out = sl2_fixtures();
    out.extend(sl3_fixtures());
    out.extend(ea_fixtures());
    out.extend(ga_fixtures());
    out
}

pub fn operator(m: &Representation) -> Result<Operator> {
    Operator::new(m.assemble_theta()?, m.p())
}

pub fn h_sheaf(m: &Representation) -> Result<SubquotientSheaf> {
    operator(m)?.h_sheaf(1)
}

pub fn h_zero(m: &Representation) -> Result<bool> {
    if m.dim() == 0 {
        return Ok(true);
    }
    h_sheaf(m)?.is_sheaf_zero()
}

/// `√a ⊆ √b`.
pub fn radical_contained(a: &Submodule, b: &Submodule) -> Result<bool> {
    for f in a.ideal_basis() {
        if !radical_membership(&f, b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `S ρ S⁻¹` for an invertible `S` built from a seed.
pub fn conjugate(m: &Representation, seed: &[u32]) -> Representation {
    let field = m.group().field();
    let n = m.dim();
    let mut l = Matrix::identity(field, n);
    let mut u = Matrix::identity(field, n);
    let mut k = 0;
    for i in 0..n {
        for j in 0..n {
            let v = seed[k % seed.len()] % field.p();
            k += 1;
            if i > j {
                l.set(i, j, v);
            } else if i < j {
                u.set(i, j, v);
            }
        }
    }
    let s = l.mul(&u).unwrap();
    let s_inv = s.inverse().unwrap().unwrap();
    let mats = m
        .matrices()
        .iter()
        .map(|a| s.mul(a).unwrap().mul(&s_inv).unwrap())
        .collect();
    Representation::new(m.group().clone(), mats).unwrap()
}
