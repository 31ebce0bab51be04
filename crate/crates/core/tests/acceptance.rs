//! The twelve acceptance criteria, one PASS/FAIL line each.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thetasheaf::poly::generic_rank;
use thetasheaf::rep::{self, Representation};
use thetasheaf::sheaf::{GradedMatrix, Side};
use thetasheaf::{
    radical_membership, Matrix, Partition, Polynomial, PrimeField, Result, Submodule,
};

type Outcome = Result<(bool, String)>;

const O9: [&str; 8] = [
    "x3*y3 + h7*h8",
    "x2*y3 + y1*h8",
    "x1*y3 - y2*h7",
    "y1*y2 + y3*h7 - y3*h8",
    "x3*y2 + x1*h8",
    "x2*y2 - h7*h8 + h8^2",
    "x3*y1 - x2*h7",
    "x1*x2 + x3*h7 - x3*h8",
];

fn within(t: Instant, limit: Duration) -> bool {
    t.elapsed() <= limit
}

fn c1_sl3_h_vanishes() -> Outcome {
    let g = group("sl3", 3);
    let m = rep::sl3_standard(&g)?;
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, module) in [("o5", m.clone()), ("o7", m.dual())] {
        let t = Instant::now();
        let h = h_sheaf(&module)?;
        let (mz, sz) = (h.module_zero(), h.is_sheaf_zero()?);
        let fast = within(t, Duration::from_secs(120));
        ok &= mz && sz && fast;
        detail.push(format!("{name}: module_zero={mz} sheaf_zero={sz} {:.2?}", t.elapsed()));
    }
    Ok((ok, detail.join(", ")))
}

fn c2_o9_support() -> Outcome {
    let t = Instant::now();
    let g = group("sl3", 3);
    let m = rep::sl3_standard(&g)?;
    let ann = h_sheaf(&m.tensor(&m.dual())?)?.support_ideal()?;
    let reference: Vec<Polynomial> = O9
        .iter()
        .map(|s| Polynomial::parse(g.ambient_ring(), s))
        .collect::<Result<_>>()?;
    let o9 = Submodule::ideal(ann.ring(), &reference)?;
    let forward = radical_contained(&ann, &o9)?;
    let backward = radical_contained(&o9, &ann)?;
    let x1 = Polynomial::parse(g.ambient_ring(), "x1")?;
    let control = !radical_membership(&x1, &ann)?;
    let first = reference[0].to_string() == "x3*y3 + h7*h8";
    let fast = within(t, Duration::from_secs(1800));
    Ok((
        forward && backward && control && first && fast,
        format!(
            "ann ⊆ √o9: {forward}, o9 ⊆ √ann: {backward}, x1 ∉ √ann: {control}, {} generators, {:.2?}",
            ann.gens().len(),
            t.elapsed()
        ),
    ))
}

fn c3_orbit_jordan_types() -> Outcome {
    let g = group("sl3", 3);
    let m = rep::sl3_standard(&g)?;
    let sub = m.jordan_type_at(&g.parse_point("0,0,1,0,0,0,0,0")?)?.partition;
    let reg = m.jordan_type_at(&g.parse_point("x1=1,x2=1")?)?.partition;
    let sample = g.sample_points(12, 0)?;
    let mixed = m.constant_jt_check(&sample)?;
    let ok = sub == Partition::from_parts(vec![2, 1]) && reg == Partition::from_parts(vec![3]) && mixed.is_none();
    Ok((ok, format!("e13: {sub}, regular: {reg}, mixed sample: {mixed:?}")))
}

fn c4_jordan_type_oracle() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut bad = 0;
    for _ in 0..200 {
        let p = [2u32, 3, 5, 7][rng.gen_range(0..4)];
        let field = PrimeField::new(p)?;
        let mut blocks = Vec::new();
        let mut n = 0;
        loop {
            let b = rng.gen_range(1..=p as usize);
            if n + b > 12 {
                break;
            }
            blocks.push(b);
            n += b;
            if rng.gen_bool(0.25) {
                break;
            }
        }
        let mut a = Matrix::zeros(field, 0, 0);
        for &b in &blocks {
            a = a.block_diag(&Matrix::jordan_block(field, b))?;
        }
        let s = loop {
            let data = (0..n * n).map(|_| rng.gen_range(0..p)).collect();
            let s = Matrix::from_data(field, n, n, data)?;
            if let Some(inv) = s.inverse()? {
                break (s, inv);
            }
        };
        let conj = s.0.mul(&a)?.mul(&s.1)?;
        if conj.nilpotent_jordan_type(p)? != Partition::from_parts(blocks) {
            bad += 1;
        }
    }
    let fast = within(t, Duration::from_secs(10));
    Ok((bad == 0 && fast, format!("{bad} mismatches in 200, {:.2?}", t.elapsed())))
}

fn c5_sl2_projectivity() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for p in [3, 5] {
        let g = group("sl2", p);
        let pts = g.sample_points(30, 0)?;
        for l in 0..p {
            let m = rep::sl2_simple(&g, l)?;
            let sz = h_zero(&m)?;
            let mut pointwise = true;
            for v in &pts {
                pointwise &= m.is_projective_at(v)?;
            }
            let want = l == p - 1;
            ok &= sz == want && pointwise == want;
            if sz {
                detail.push(format!("p={p}: H(L({l})) = 0"));
            }
        }
    }
    Ok((ok, detail.join(", ")))
}

fn c6_filtration_sheaves() -> Outcome {
    let mut ok = true;
    let mut count = 0;
    for p in [3, 5] {
        let g = group("sl2", p);
        for l in 0..p {
            let op = operator(&rep::sl2_simple(&g, l)?)?;
            for i in 1..=p {
                let f = op.f_sheaf(i)?;
                let good = if i == l + 1 {
                    f.locally_free_rank()? == Some(1)
                } else {
                    f.is_sheaf_zero()?
                };
                ok &= good;
                count += 1;
            }
        }
    }
    Ok((ok, format!("{count} sheaves F_i(L(λ)) checked")))
}

fn c7_regular_module() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for (p, r) in [(2, 2), (2, 3), (3, 2)] {
        let t = Instant::now();
        let g = group(&format!("ea({r})"), p);
        let z = h_zero(&rep::regular(&g)?)?;
        ok &= z && within(t, Duration::from_secs(60));
        detail.push(format!("(p,r)=({p},{r}): {z} {:.2?}", t.elapsed()));
    }
    Ok((ok, detail.join(", ")))
}

fn twisted_structure_hf(d: i32, t: i32, n: usize) -> usize {
    let e = d + t;
    if e < 0 {
        return 0;
    }
    let (e, k) = (e as u128, (n - 1) as u128);
    (0..k).fold(1u128, |acc, i| acc * (e + k - i) / (i + 1)) as usize
}

fn c8_structure_sheaf_values() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for n in [2, 3] {
        let g = group(&format!("ea({n})"), 2);
        let k = rep::trivial(&g);
        for (m, twist) in [(k.clone(), 0), (k.heller()?, -1)] {
            let fp = h_sheaf(&m)?.fingerprint()?;
            let good = !fp.hilbert.is_empty()
                && fp.hilbert.iter().all(|(&d, &v)| v == twisted_structure_hf(d, twist, n));
            ok &= good;
            detail.push(format!("n={n} O({twist}): {good}"));
        }
    }
    Ok((ok, detail.join(", ")))
}

fn c9_f_omega() -> Outcome {
    let p = 3;
    let g = group("ea(2)", p);
    let q = g.theta_degree();
    let k = rep::trivial(&g);
    let mut ok = true;
    let mut n = 0;
    for m in [k.clone(), k.heller()?] {
        let (a, b) = (operator(&m)?, operator(&m.heller()?)?);
        for i in 1..p {
            let fa = a.f_sheaf(i)?.fingerprint()?;
            let fb = b.f_sheaf(p - i)?.twisted((p - i) as i32 * q).fingerprint()?;
            ok &= fa.matches(&fb);
            n += 1;
        }
    }
    Ok((ok, format!("{n} fingerprint pairs compared")))
}

fn c10_h_and_f_detection() -> Outcome {
    let mut ok = true;
    let mut bad = Vec::new();
    let fixtures = all_fixtures();
    for f in &fixtures {
        let op = operator(&f.module)?;
        let p = op.p();
        let z1 = op.h_sheaf(1)?.is_sheaf_zero()?;
        let zl = op.h_sheaf(p - 1)?.is_sheaf_zero()?;
        let mut zf = true;
        for i in 1..p {
            zf &= op.f_sheaf(i)?.is_sheaf_zero()?;
        }
        if !(z1 == zl && z1 == zf) {
            ok = false;
            bad.push(f.name.clone());
        }
    }
    Ok((ok, format!("{} fixtures, disagreements: {bad:?}", fixtures.len())))
}

fn c11_coker_semicontinuity() -> Outcome {
    let mut ok = true;
    let mut checks = 0;
    let fixtures = ea_fixtures();
    for f in &fixtures {
        let m: &Representation = &f.module;
        let op = operator(m)?;
        let pts = m.group().sample_points(100, 7)?;
        for j in 1..op.p() {
            let generic = generic_rank(op.power(j, Side::Im)?.entries())?;
            let coker = op.coker(j)?;
            for v in &pts {
                let local = m.operator_at(v)?.power(j)?.rank();
                ok &= coker.fiber_dimension(v.coords())? == m.dim() - local;
                ok &= local <= generic;
                checks += 1;
            }
        }
    }
    Ok((ok, format!("{checks} point checks over {} fixtures", fixtures.len())))
}

fn c12_weighted_family() -> Outcome {
    let g = group("ga(2)", 2);
    let k = rep::trivial(&g);
    let theta_zero = k.assemble_theta()?.is_zero();
    let h = h_sheaf(&k)?;
    let nonzero = !h.is_sheaf_zero()?;
    let rank = h.locally_free_rank()?;
    let ring = rep::coordinate_ring(&g)?;
    let pr = ring.poly_ring().clone();
    let entry = |s: &str| Polynomial::parse(&pr, s);
    let zero = Polynomial::zero(&pr);
    let accepted = GradedMatrix::new(
        ring.clone(),
        vec![vec![zero.clone(), entry("x1^2 + x2")?], vec![zero.clone(), zero.clone()]],
        vec![0, 0],
        vec![2, 2],
    )
    .is_ok();
    let rejected = GradedMatrix::new(
        ring.clone(),
        vec![vec![zero.clone(), entry("x1 + x2")?], vec![zero.clone(), zero]],
        vec![0, 0],
        vec![2, 2],
    )
    .is_err();
    let weights = pr.weights() == [1, 2];
    Ok((
        theta_zero && nonzero && rank == Some(1) && accepted && rejected && weights,
        format!(
            "Θ_k = 0: {theta_zero}, H(k) ≠ 0: {nonzero}, rank {rank:?}, x1^2ρ1 + x2ρ2 accepted: {accepted}, x1ρ1 + x2ρ2 rejected: {rejected}"
        ),
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("sl3 H(M) and H(M*) vanish", c1_sl3_h_vanishes),
        ("support of H(M ⊗ M*) is o9", c2_o9_support),
        ("sl3 orbit Jordan types", c3_orbit_jordan_types),
        ("Jordan type from rank sequence", c4_jordan_type_oracle),
        ("sl2 projectivity via H", c5_sl2_projectivity),
        ("sl2 filtration sheaves", c6_filtration_sheaves),
        ("H(kG) vanishes", c7_regular_module),
        ("H(k) = O and H(Ωk) = O(-1)", c8_structure_sheaf_values),
        ("F_i(M) against F_{p-i}(ΩM)", c9_f_omega),
        ("H^(1), H^(p-1) and F_i agree", c10_h_and_f_detection),
        ("coker fibers and semicontinuity", c11_coker_semicontinuity),
        ("weighted family ga(2)", c12_weighted_family),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let (pass, detail) = match run() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failed += 1;
        }
        println!(
            "criterion {:>2} {}: {name} ({detail})",
            i + 1,
            if pass { "PASS" } else { "FAIL" }
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
