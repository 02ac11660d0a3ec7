mod common;

use common::naive_distribution;
use dtcode::code::DEFAULT_BUDGET;
use dtcode::constructions::{
    example_parameters, qr_generator, self_dual_generator, worked_example_generator, QRSpec,
    SelfDualVariant, EXAMPLE_PRIMES,
};
use dtcode::{DTCode, DistanceMode, FieldSpec, Structure};

#[test]
fn worked_examples_have_claimed_parameters() {
    for p in EXAMPLE_PRIMES {
        let gen = worked_example_generator(p).unwrap();
        let code = DTCode::new(gen);
        let (len, k, d) = example_parameters(p).unwrap();
        assert_eq!(code.length(), len);
        assert_eq!(code.n(), k);
        let md = code.min_distance(DistanceMode::Exact, 1 << 22).unwrap();
        assert!(md.exact);
        assert_eq!(md.d, d, "p = {p}");
        assert_eq!(code.encode(&md.witness).unwrap().weight(), d);
    }
}

#[test]
fn small_worked_examples_against_full_enumeration() {
    for p in [2, 3, 5, 7] {
        let code = DTCode::new(worked_example_generator(p).unwrap());
        let wd = naive_distribution(&code.generator_matrix());
        let d = (1..wd.len()).find(|&i| wd[i] > 0).unwrap();
        assert_eq!(d, example_parameters(p).unwrap().2, "p = {p}");
        assert_eq!(
            wd,
            naive_distribution(&code.parity_check_matrix()),
            "p = {p}"
        );
    }
}

#[test]
fn residue_generators_are_isodual() {
    for p in [3u64, 5, 7, 11, 13, 17, 19, 23] {
        let code = DTCode::new(qr_generator(QRSpec::new(p)).unwrap());
        assert!(code.isoduality_witness().1, "p = {p}");
        if p <= 11 {
            assert!(code.is_fsd(DEFAULT_BUDGET).unwrap(), "p = {p}");
        }
    }
    assert!(qr_generator(QRSpec::new(2)).is_err());
    assert!(qr_generator(QRSpec::new(9)).is_err());
}

#[test]
fn residue_rule_differs_from_reference_vectors() {
    let rule = qr_generator(QRSpec::new(5)).unwrap();
    let reference = worked_example_generator(5).unwrap();
    assert_eq!(rule.a(), reference.a());
    assert_ne!(rule.b(), reference.b());
    let rule = qr_generator(QRSpec::new(11)).unwrap();
    let reference = worked_example_generator(11).unwrap();
    assert_eq!(rule.a(), reference.a());
}

#[test]
fn self_dual_families() {
    for q in [5u32, 13] {
        let f = FieldSpec::new(q).unwrap();
        for n in 1..=6 {
            let scalar = DTCode::new(self_dual_generator(f, n, SelfDualVariant::Scalar).unwrap());
            assert!(scalar.is_self_dual());
            assert_eq!(
                scalar.classify_self_dual_structure().unwrap(),
                Structure::Both
            );
            for i in 1..n {
                let c =
                    DTCode::new(self_dual_generator(f, n, SelfDualVariant::Circulant(i)).unwrap());
                assert!(c.is_self_dual(), "q={q} n={n} i={i}");
                assert!(c.gen().is_circulant());
                let nc = DTCode::new(
                    self_dual_generator(f, n, SelfDualVariant::Negacirculant(i)).unwrap(),
                );
                assert!(nc.is_self_dual(), "q={q} n={n} i={i}");
                assert!(nc.gen().is_negacirculant());
            }
        }
    }
    let f7 = FieldSpec::new(7).unwrap();
    assert!(self_dual_generator(f7, 3, SelfDualVariant::Scalar).is_err());
    assert!(
        self_dual_generator(FieldSpec::new(5).unwrap(), 3, SelfDualVariant::Circulant(3)).is_err()
    );
}
