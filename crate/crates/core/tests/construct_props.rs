mod common;

use common::*;
use musynth_core::construct::{
    build_geodesic, construct_snp_interpolant, find_extremal_omega, interpolate_blaschke, MatrixInterpolant, Provenance,
};
use musynth_core::gamma::{in_closed_gamma, phi};
use musynth_core::numerics::{c64, cis, Mat2};
use musynth_core::verify::{polar_grid, verify_spectral_interpolant};
use musynth_core::{Config, GammaPoint, SnpInstance};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn extremal_pipeline_invariants(seed in any::<u64>()) {
        let cfg = Config::default();
        let mut rng = rng(seed);
        let g = RandomGeodesic::sample(&mut rng);
        let (l1, l2) = node_pair(&mut rng, 0.9, 0.05);
        let (z1, z2) = (g.eval(l1), g.eval(l2));
        let omega0 = find_extremal_omega(&z1, &z2, &cfg).unwrap();
        let (m1, m2) = (phi(omega0, &z1).unwrap(), phi(omega0, &z2).unwrap());
        let oc = omega0.conj();
        let b = interpolate_blaschke(m1, z1.p, m2, z2.p, oc, oc * oc).unwrap();
        prop_assert!((b.eval(m1) - z1.p).norm() <= 1e-10);
        prop_assert!((b.eval(m2) - z2.p).norm() <= 1e-10);
        prop_assert!((b.eval(oc) - oc * oc).norm() <= 1e-8);
        for k in 0..1024 {
            let v = b.eval(cis(std::f64::consts::TAU * k as f64 / 1024.0));
            prop_assert!((v.norm() - 1.0).abs() <= 1e-12);
        }
        let geo = build_geodesic(omega0, b).unwrap();
        for l in polar_grid((101, 101)) {
            let z = geo.eval(l).unwrap();
            prop_assert!(in_closed_gamma(&z, 1e-9), "{:?} at {}", z, l);
        }
        prop_assert!(geo.eval(m1).unwrap().distance(&z1) <= 1e-8);
        prop_assert!(geo.eval(m2).unwrap().distance(&z2) <= 1e-8);
    }

    #[test]
    fn companion_lift_is_exact(seed in any::<u64>()) {
        let cfg = Config::default();
        let mut rng = rng(seed);
        let inst = SnpInstance {
            lambda1: disc_point(&mut rng, 0.5),
            lambda2: disc_point(&mut rng, 0.5),
            w1: random_contraction_like(&mut rng, 0.5),
            w2: random_contraction_like(&mut rng, 0.5),
        };
        let Ok(c) = construct_snp_interpolant(&inst, &cfg) else { return Ok(()) };
        let comp = MatrixInterpolant::companion(&c.h.0, &c.h.1);
        let e = &comp.entries;
        let tr = &e[0][0] + &e[1][1];
        let det = &(&e[0][0] * &e[1][1]) - &(&e[0][1] * &e[1][0]);
        let scale = |r: &musynth_core::numerics::RationalFunction| r.num.max_abs_coeff().max(r.den.max_abs_coeff());
        let dt = &tr - &c.h.0;
        let dd = &det - &c.h.1;
        prop_assert!(dt.num.max_abs_coeff() <= 1e-13 * scale(&tr) * scale(&c.h.0));
        prop_assert!(dd.num.max_abs_coeff() <= 1e-13 * scale(&det) * scale(&c.h.1));
    }

    #[test]
    fn similarity_lift_interpolates(seed in any::<u64>()) {
        let cfg = Config::default();
        let mut rng = rng(seed);
        let inst = SnpInstance {
            lambda1: disc_point(&mut rng, 0.5),
            lambda2: disc_point(&mut rng, 0.5),
            w1: random_contraction_like(&mut rng, 0.6),
            w2: random_contraction_like(&mut rng, 0.6),
        };
        let Ok(c) = construct_snp_interpolant(&inst, &cfg) else { return Ok(()) };
        if c.interpolant.provenance == Provenance::SimilarityLifted {
            let cfg8 = Config { radius_tol: 1e-8, ..cfg };
            let rep = verify_spectral_interpolant(
                &c.interpolant,
                &[(inst.lambda1, inst.w1), (inst.lambda2, inst.w2)],
                (101, 101),
                &cfg8,
            )
            .unwrap();
            prop_assert!(rep.pass(), "{:?}", rep);
        }
    }
}

#[test]
fn example_data_from_ill_conditioned_witness() {
    let cfg = Config::default();
    let beta = 0.5;
    let w1 = Mat2::from_real([[0.0, 1.0], [0.0, 0.0]]);
    let w2 = Mat2::from_real([[0.0, beta], [0.0, 2.0 * beta / (1.0 + beta)]]);
    let inst = SnpInstance { lambda1: c64(0.0, 0.0), lambda2: c64(beta, 0.0), w1, w2 };
    let c = construct_snp_interpolant(&inst, &cfg).unwrap();
    let rep = verify_spectral_interpolant(&c.interpolant, &[(inst.lambda1, w1), (inst.lambda2, w2)], (101, 101), &cfg)
        .unwrap();
    assert!(rep.pass(), "{rep:?} {}", c.detail);
    let z = GammaPoint::new(c.h.0.eval(inst.lambda2).unwrap(), c.h.1.eval(inst.lambda2).unwrap());
    assert!(z.distance(&GammaPoint::from_real(2.0 / 3.0, 0.0)) < 1e-8);
}
