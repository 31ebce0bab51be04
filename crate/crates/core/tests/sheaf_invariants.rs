mod common;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thetasheaf::rep::{self, Representation};
use thetasheaf::sheaf::Side;
use thetasheaf::{Partition, Polynomial};

fn entries(m: &Representation) -> Vec<Vec<Polynomial>> {
    m.assemble_theta().unwrap().entries().to_vec()
}

#[test]
fn global_operator_is_natural() {
    let sl2 = group("sl2", 5);
    let ea = group("ea(2)", 3);
    let sl3 = group("sl3", 3);
    let k = rep::trivial(&ea);
    let pairs = vec![
        (rep::sl2_simple(&sl2, 1).unwrap(), rep::sl2_simple(&sl2, 2).unwrap()),
        (k.heller().unwrap(), rep::regular(&ea).unwrap()),
        (rep::sl3_standard(&sl3).unwrap(), rep::sl3_standard(&sl3).unwrap().dual()),
    ];
    for (a, b) in pairs {
        let (ta, tb) = (entries(&a), entries(&b));
        let (na, nb) = (a.dim(), b.dim());
        let td = entries(&a.dual());
        for i in 0..na {
            for j in 0..na {
                assert_eq!(td[i][j], ta[j][i].neg());
            }
        }
        let ts = entries(&a.direct_sum(&b).unwrap());
        for i in 0..na + nb {
            for j in 0..na + nb {
                let want = match (i < na, j < na) {
                    (true, true) => ta[i][j].clone(),
                    (false, false) => tb[i - na][j - na].clone(),
                    _ => Polynomial::zero(ta[0][0].ring()),
                };
                assert_eq!(ts[i][j], want);
            }
        }
        let tt = entries(&a.tensor(&b).unwrap());
        for (i, row) in tt.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                let (ra, rb, ca, cb) = (i / nb, i % nb, j / nb, j % nb);
                let mut want = Polynomial::zero(e.ring());
                if rb == cb {
                    want = want.add(&ta[ra][ca]).unwrap();
                }
                if ra == ca {
                    want = want.add(&tb[rb][cb]).unwrap();
                }
                assert_eq!(*e, want);
            }
        }
    }
}

#[test]
fn theta_to_the_p_vanishes() {
    for f in all_fixtures() {
        let op = operator(&f.module).unwrap();
        assert!(op.power(op.p(), Side::Ker).unwrap().is_zero(), "{}", f.name);
    }
}

#[test]
fn h_dualities_and_filtration_detection() {
    for f in all_fixtures() {
        let op = operator(&f.module).unwrap();
        let p = op.p();
        let h1 = op.h_sheaf(1).unwrap();
        let hl = op.h_sheaf(p - 1).unwrap();
        let z1 = h1.is_sheaf_zero().unwrap();
        assert_eq!(z1, hl.is_sheaf_zero().unwrap(), "{}", f.name);
        assert_eq!(z1, h1.is_sheaf_zero_by_saturation().unwrap(), "{}", f.name);
        let (s1, sl) = (h1.support_ideal().unwrap(), hl.support_ideal().unwrap());
        assert!(radical_contained(&s1, &sl).unwrap(), "{}", f.name);
        assert!(radical_contained(&sl, &s1).unwrap(), "{}", f.name);
        let all_f = (1..p).all(|i| op.f_sheaf(i).unwrap().is_sheaf_zero().unwrap());
        assert_eq!(z1, all_f, "{}", f.name);
    }
}

#[test]
fn projective_fixtures_give_two_periodic_complexes() {
    let mut seen = 0;
    for f in all_fixtures() {
        let op = operator(&f.module).unwrap();
        let p = op.p();
        if !(op.h_sheaf(1).unwrap().is_sheaf_zero().unwrap() && op.h_sheaf(p - 1).unwrap().is_sheaf_zero().unwrap()) {
            continue;
        }
        seen += 1;
        for (i, j) in [(p - 1, 1), (1, p - 1)] {
            let im = op.image(i).unwrap().saturate_irrelevant().unwrap();
            let ker = op.kernel(j).unwrap().saturate_irrelevant().unwrap();
            assert!(im.equals(&ker).unwrap(), "{} im^{i} vs ker^{j}", f.name);
        }
    }
    assert!(seen >= 5);
}

#[test]
fn filtration_quotients_count_jordan_blocks() {
    for f in all_fixtures() {
        let g = f.module.group().clone();
        let op = operator(&f.module).unwrap();
        let p = op.p();
        let pts = g.sample_points(8, 11).unwrap();
        let constant = f.module.constant_jt_check(&pts).unwrap().is_some();
        let ranks: Vec<Option<usize>> = (1..=p)
            .map(|i| op.f_sheaf(i).unwrap().locally_free_rank().unwrap())
            .collect();
        for v in &pts {
            let jt = f.module.jordan_type_at(v).unwrap().partition;
            let total: usize = (1..=p as usize).map(|i| i * jt.multiplicity(i)).sum();
            assert_eq!(total, f.module.dim(), "{}", f.name);
            for i in 1..=p {
                if let (true, Some(r)) = (constant, ranks[i as usize - 1]) {
                    let fi = op.f_sheaf(i).unwrap();
                    assert_eq!(jt.multiplicity(i as usize), r, "{} F_{i} at {:?}", f.name, v.coords());
                    assert_eq!(fi.fiber_dimension(v.coords()).unwrap(), r, "{} F_{i}", f.name);
                }
            }
        }
    }
}

#[test]
fn coker_fibers_match_pointwise_ranks() {
    for f in all_fixtures() {
        let g = f.module.group().clone();
        let op = operator(&f.module).unwrap();
        let pts = g.sample_points(8, 5).unwrap();
        for j in 1..op.p() {
            let coker = op.coker(j).unwrap();
            for v in &pts {
                let local = f.module.operator_at(v).unwrap().power(j).unwrap().rank();
                assert_eq!(
                    coker.fiber_dimension(v.coords()).unwrap(),
                    f.module.dim() - local,
                    "{} j={j}",
                    f.name
                );
            }
        }
    }
}

#[test]
fn sl2_sheaf_criterion_matches_sampled_projectivity() {
    let p = 3;
    let g = group("sl2", p);
    let simples: Vec<Representation> = (0..p).map(|l| rep::sl2_simple(&g, l).unwrap()).collect();
    let pieces: Vec<Representation> = simples
        .iter()
        .cloned()
        .chain([simples[1].tensor(&simples[1]).unwrap(), simples[1].tensor(&simples[2]).unwrap()])
        .collect();
    let pts = g.sample_points(20, 3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut outcomes = [0usize; 2];
    for _ in 0..30 {
        let mut m = pieces[rng.gen_range(0..pieces.len())].clone();
        while m.dim() < 4 && rng.gen_bool(0.6) {
            let next = &pieces[rng.gen_range(0..pieces.len())];
            if m.dim() + next.dim() > 8 {
                break;
            }
            m = m.direct_sum(next).unwrap();
        }
        let seed: Vec<u32> = (0..20).map(|_| rng.gen()).collect();
        let m = conjugate(&m, &seed);
        let zero = h_zero(&m).unwrap();
        let free = Partition::uniform(p as usize, m.dim() / p as usize);
        let pointwise = m.dim() % p as usize == 0
            && pts.iter().all(|v| m.jordan_type_at(v).unwrap().partition == free);
        assert_eq!(zero, pointwise, "dim {}", m.dim());
        outcomes[zero as usize] += 1;
    }
    assert!(outcomes[0] > 0 && outcomes[1] > 0, "{outcomes:?}");
}

#[test]
fn modules_with_vanishing_h_form_a_thick_subcategory() {
    let ea = group("ea(2)", 2);
    let k = rep::trivial(&ea);
    let kg = rep::regular(&ea).unwrap();
    let om = k.heller().unwrap();
    assert!(h_zero(&kg).unwrap());
    assert!(h_zero(&kg.direct_sum(&kg).unwrap()).unwrap());
    assert!(h_zero(&kg.heller().unwrap()).unwrap());
    assert!(h_zero(&kg.tensor(&om).unwrap()).unwrap());
    for bad in [&k, &om] {
        assert!(!h_zero(&bad.direct_sum(&kg).unwrap()).unwrap());
    }

    let sl2 = group("sl2", 3);
    let st = rep::sl2_simple(&sl2, 2).unwrap();
    let triv = rep::sl2_simple(&sl2, 0).unwrap();
    assert!(h_zero(&st.direct_sum(&st).unwrap()).unwrap());
    assert!(!h_zero(&st.direct_sum(&triv).unwrap()).unwrap());
}

#[test]
fn h_vanishing_is_not_closed_under_tensor_products() {
    let g = group("sl3", 3);
    let m = rep::sl3_standard(&g).unwrap();
    assert!(h_zero(&m).unwrap());
    assert!(h_zero(&m.dual()).unwrap());
    assert!(!h_zero(&m.tensor(&m.dual()).unwrap()).unwrap());
}
