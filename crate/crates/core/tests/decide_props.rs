mod common;

use common::*;
use musynth_core::construct::{construct_snp_interpolant, sample_pair};
use musynth_core::decide::{decide_snp_2x2, necessary_condition_snp};
use musynth_core::numerics::{pseudohyperbolic, Mat2};
use musynth_core::{Config, SnpInstance, Status};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn solvability_is_monotone_in_node_separation(seed in any::<u64>()) {
        let cfg = Config::default();
        let mut rng = rng(seed);
        let w1 = random_contraction_like(&mut rng, 0.9);
        let w2 = random_contraction_like(&mut rng, 0.9);
        let mut pairs: Vec<_> = (0..12).map(|_| node_pair(&mut rng, 0.98, 1e-3)).collect();
        pairs.sort_by(|a, b| pseudohyperbolic(a.0, a.1).unwrap().total_cmp(&pseudohyperbolic(b.0, b.1).unwrap()));
        let mut seen_solvable = false;
        for (l1, l2) in pairs {
            let v = decide_snp_2x2(&SnpInstance { lambda1: l1, lambda2: l2, w1, w2 }, &cfg).unwrap();
            let solvable = v.status.is_solvable();
            prop_assert!(!(seen_solvable && !solvable));
            seen_solvable |= solvable;
        }
    }
}

#[test]
fn necessary_condition_holds_on_analytic_data() {
    let cfg = Config::default();
    let mut rng = rng(31);
    let mut done = 0;
    while done < 200 {
        let w1 = random_contraction_like(&mut rng, 0.9);
        let w2 = random_contraction_like(&mut rng, 0.9);
        let (l1, l2) = node_pair(&mut rng, 0.9, 0.05);
        let inst = SnpInstance { lambda1: l1, lambda2: l2, w1, w2 };
        let Ok(c) = construct_snp_interpolant(&inst, &cfg) else { continue };
        let nodes = [disc_point(&mut rng, 0.9), disc_point(&mut rng, 0.9), disc_point(&mut rng, 0.9)];
        let targets: Vec<Mat2> = sample_pair(&c.h, &nodes).unwrap().iter().map(|z| Mat2::companion(z.s, z.p)).collect();
        let rep = necessary_condition_snp(&nodes, &targets, cfg.alpha_grid, &cfg).unwrap();
        assert!(rep.pass, "{inst:?} {rep:?}");
        done += 1;
    }
}

#[test]
fn verdict_invariants_hold() {
    let cfg = Config::default();
    let mut rng = rng(32);
    for _ in 0..300 {
        let inst = SnpInstance {
            lambda1: disc_point(&mut rng, 0.95),
            lambda2: disc_point(&mut rng, 0.95),
            w1: random_matrix(&mut rng, -0.8, 0.8),
            w2: random_matrix(&mut rng, -0.8, 0.8),
        };
        let v = decide_snp_2x2(&inst, &cfg).unwrap();
        let band = cfg.boundary_band;
        match v.status {
            Status::Solvable => assert!(v.margin >= -band),
            Status::SolvableUniquely => assert!(v.margin.abs() <= band),
            Status::Unsolvable => assert!(v.margin <= band),
            Status::OutOfTheoremScope => {}
        }
    }
}
