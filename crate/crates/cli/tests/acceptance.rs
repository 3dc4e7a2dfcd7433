//! Acceptance suite: every release-gating property, one test per
//! criterion, each printing a pass/fail line and enforcing its time
//! budget. All identities are exact over the rational-function field;
//! the only non-exact representation anywhere is the truncated series in
//! criterion 9, which is itself exact coefficient-wise.
//!
//! Run with `cargo test -p ribbonq-cli --test acceptance -- --nocapture`
//! to see the per-criterion lines.

use ribbonq_core::braid::{verify_yang_baxter, BraidRep, BraidWord};
use ribbonq_core::cartan::{CartanData, LieType, Weight};
use ribbonq_core::classical::{
    casimir_operator, casimir_two_tensor, verify_first_order_expansion,
    verify_infinitesimal_braid_relations, ClassicalModule,
};
use ribbonq_core::fusion::isotypic_decomposition;
use ribbonq_core::matrix::{QMat, RatMat};
use ribbonq_core::qmodule::{format as module_format, QModule};
use ribbonq_core::rat;
use ribbonq_core::ribbon::{k2rho_action, CertifiedBraiding};
use std::time::{Duration, Instant};

/// Run one criterion body, always printing its pass/fail line, then
/// enforce the time budget.
fn criterion(
    number: usize,
    name: &str,
    budget: Duration,
    body: impl FnOnce() + std::panic::UnwindSafe,
) {
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(body);
    let elapsed = start.elapsed();
    match &outcome {
        Ok(()) if elapsed < budget => {
            println!("acceptance {number} ({name}): PASS in {elapsed:?} (budget {budget:?})");
        }
        Ok(()) => {
            println!("acceptance {number} ({name}): FAIL (over budget: {elapsed:?} >= {budget:?})");
            panic!("criterion {number} exceeded its time budget");
        }
        Err(_) => {
            println!("acceptance {number} ({name}): FAIL in {elapsed:?}");
        }
    }
    if let Err(payload) = outcome {
        std::panic::resume_unwind(payload);
    }
}

#[test]
fn criterion_01_cartan_suite() {
    criterion(1, "cartan suite", Duration::from_secs(1), || {
        for (ty, lo) in [(LieType::A, 1), (LieType::B, 2), (LieType::D, 3)] {
            for rank in lo..=6 {
                let cd = CartanData::new(ty, rank).unwrap();
                let rho = cd.weyl_vector();
                for i in 1..=rank {
                    let alpha_i = cd.simple_root(i).unwrap();
                    let len = cd.weight_inner_product(&alpha_i, &alpha_i).unwrap();
                    // <alpha_i^vee, rho> = 1
                    let pairing =
                        rat(2, 1) * cd.weight_inner_product(&alpha_i, &rho).unwrap() / &len;
                    assert_eq!(pairing, rat(1, 1), "{ty}_{rank} coroot pairing i={i}");
                    for j in 1..=rank {
                        // <omega_i, omega_j> = d_i (A^{-1})_ij = (D A^{-1})_ij
                        let mut ei = vec![0; rank];
                        ei[i - 1] = 1;
                        let mut ej = vec![0; rank];
                        ej[j - 1] = 1;
                        let gram = cd
                            .weight_inner_product(&Weight::new(ei), &Weight::new(ej))
                            .unwrap();
                        assert_eq!(
                            &gram,
                            cd.da_inverse().get(i - 1, j - 1),
                            "{ty}_{rank} gram {i}{j}"
                        );
                        // a_ij = 2 <alpha_i, alpha_j> / <alpha_i, alpha_i>
                        let alpha_j = cd.simple_root(j).unwrap();
                        let recovered =
                            rat(2, 1) * cd.weight_inner_product(&alpha_i, &alpha_j).unwrap() / &len;
                        assert_eq!(
                            recovered,
                            rat(cd.cartan_entry(i, j), 1),
                            "{ty}_{rank} a_{i}{j}"
                        );
                    }
                }
            }
        }
    });
}

#[test]
fn criterion_02_classical_casimir_oracle() {
    criterion(
        2,
        "classical casimir oracle",
        Duration::from_secs(1),
        || {
            let a1 = CartanData::new(LieType::A, 1).unwrap();
            for m in 0..=8u32 {
                let module = ClassicalModule::sl2_simple(m);
                let c = casimir_operator(&module);
                let expected = rat(m as i64 * (m as i64 + 2), 2);
                assert_eq!(
                    c,
                    RatMat::identity(module.dim).scaled(&expected),
                    "brute-force Casimir on V({m})"
                );
                assert_eq!(
                    a1.casimir_eigenvalue(&Weight::new(vec![m as i64])).unwrap(),
                    expected,
                    "weight-formula Casimir at m={m}"
                );
            }
        },
    );
}

#[test]
fn criterion_03_quantum_relations() {
    criterion(3, "quantum relations", Duration::from_secs(5), || {
        let modules: Vec<QModule> = (0..=6).map(|m| QModule::sl2_simple(m, 4)).collect();
        for (m, module) in modules.iter().enumerate() {
            let report = module.verify_relations();
            assert!(report.pass(), "V({m}): {:?}", report.failures);
        }
        for a in &modules {
            for b in &modules {
                if a.dim() * b.dim() > 64 {
                    continue;
                }
                let t = a.tensor(b).unwrap();
                let report = t.verify_relations();
                assert!(
                    report.pass(),
                    "V({}) (x) V({}): {:?}",
                    a.dim() - 1,
                    b.dim() - 1,
                    report.failures
                );
            }
        }
    });
}

#[test]
fn criterion_04_spectral_braiding_theorem() {
    criterion(
        4,
        "spectral braiding theorem",
        Duration::from_secs(2),
        || {
            let v1 = QModule::sl2_simple(1, 4);
            let braiding = CertifiedBraiding::for_simple_module(&v1).unwrap();
            let comps = &braiding.spectrum.components;
            assert_eq!(comps.len(), 2);

            let q_half = qpow(1, 2);
            let q_neg32 = qpow(-3, 2);
            assert_eq!(comps[0].dim, 3);
            assert_eq!(comps[0].sign, 1);
            assert_eq!(comps[0].eigenvalue(), q_half);
            assert_eq!(comps[1].dim, 1);
            assert_eq!(comps[1].sign, -1);
            assert_eq!(comps[1].eigenvalue(), -&q_neg32);

            // intertwiner property
            let square = v1.tensor(&v1).unwrap();
            for g in ribbonq_core::qmodule::Generator::ALL {
                assert!(braiding.rmatrix.commutes_with(square.generator(g, 1)));
            }

            // top-vector normalization R(v (x) v) = q^(1/2) v (x) v
            let mut top = vec![ribbonq_core::qarith::FieldElement::zero_with_order(4); 4];
            top[0] = ribbonq_core::qarith::FieldElement::one_with_order(4);
            let image = braiding.rmatrix.mul_vec(&top);
            let expected: Vec<_> = top.iter().map(|x| x * &q_half).collect();
            assert_eq!(image, expected);
        },
    );
}

#[test]
fn criterion_05_yang_baxter() {
    criterion(5, "yang-baxter", Duration::from_secs(60), || {
        for m in [1u32, 2] {
            let v = QModule::sl2_simple(m, 4);
            let spectrum = ribbonq_core::ribbon::BraidingSpectrum::for_simple_module(&v).unwrap();
            let (rmatrix, _) = spectrum.assemble();
            let check = verify_yang_baxter(&rmatrix, v.dim());
            assert!(
                check.holds,
                "Yang-Baxter fails for V({m}) at {:?}",
                check.first_difference
            );
        }
    });
}

#[test]
fn criterion_06_braid_relations() {
    criterion(6, "braid relations", Duration::from_secs(30), || {
        let v1 = QModule::sl2_simple(1, 4);
        let braiding = CertifiedBraiding::for_simple_module(&v1).unwrap();
        for strands in [3usize, 4] {
            // construction re-verifies the braid relation and far
            // commutativity exactly and fails on any violation
            let rep = BraidRep::build(&braiding, strands).unwrap();
            assert_eq!(rep.total_dim(), 1 << strands);
            let lhs = rep
                .evaluate(&BraidWord::parse("1 2 1", strands).unwrap())
                .unwrap();
            let rhs = rep
                .evaluate(&BraidWord::parse("2 1 2", strands).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs, "word identity on {strands} strands");
        }
    });
}

#[test]
fn criterion_07_squared_braiding_eigenvalue_law() {
    criterion(
        7,
        "squared-braiding eigenvalue law",
        Duration::from_secs(60),
        || {
            for m in [1u32, 2, 3] {
                let v = QModule::sl2_simple(m, 4);
                let braiding = CertifiedBraiding::for_simple_module(&v).unwrap();
                let r2 = braiding.rmatrix.mul(&braiding.rmatrix);
                let chi_v = v
                    .cartan()
                    .casimir_eigenvalue(&Weight::new(vec![m as i64]))
                    .unwrap();
                for c in &braiding.spectrum.components {
                    let chi_x = v.cartan().casimir_eigenvalue(&c.weight).unwrap();
                    let scale = ribbonq_core::qarith::FieldElement::q_power(
                        &(chi_x - rat(2, 1) * &chi_v),
                        4,
                    )
                    .unwrap();
                    assert_eq!(
                        c.projector.mul(&r2),
                        c.projector.scaled(&scale),
                        "V({m}) component {}",
                        c.weight
                    );
                }
            }
        },
    );
}

#[test]
fn criterion_08_infinitesimal_braid_relations() {
    criterion(
        8,
        "infinitesimal braid relations",
        Duration::from_secs(10),
        || {
            for m in [1u32, 2] {
                let module = ClassicalModule::sl2_simple(m);
                let t = casimir_two_tensor(&module, &module).unwrap();
                let check = verify_infinitesimal_braid_relations(&t, 3).unwrap();
                assert!(check.pass(), "V({m})^3: {:?}", check.failures);
            }
        },
    );
}

#[test]
fn criterion_09_canonical_two_tensor_expansion() {
    criterion(
        9,
        "canonical 2-tensor expansion",
        Duration::from_secs(5),
        || {
            let v1q = QModule::sl2_simple(1, 4);
            let braiding = CertifiedBraiding::for_simple_module(&v1q).unwrap();
            let v1 = ClassicalModule::sl2_simple(1);
            let t = casimir_two_tensor(&v1, &v1).unwrap();
            let check = verify_first_order_expansion(&braiding.rmatrix, &t, 2).unwrap();
            assert!(check.pass(), "{:?}", check.failures);
        },
    );
}

#[test]
fn criterion_10_projector_algebra() {
    criterion(10, "projector algebra", Duration::from_secs(10), || {
        for m in [0u32, 1, 2, 3] {
            let v = QModule::sl2_simple(m, 4);
            let square = v.tensor(&v).unwrap();
            let comps = isotypic_decomposition(&square).unwrap();
            let mut total = QMat::zeros(square.dim(), square.dim());
            for (i, a) in comps.iter().enumerate() {
                assert_eq!(a.projector.mul(&a.projector), a.projector, "V({m}) P^2");
                for (j, b) in comps.iter().enumerate() {
                    if i != j {
                        assert!(
                            a.projector.mul(&b.projector).is_zero(),
                            "V({m}) orthogonality"
                        );
                    }
                }
                for g in ribbonq_core::qmodule::Generator::ALL {
                    assert!(
                        a.projector.commutes_with(square.generator(g, 1)),
                        "V({m}) equivariance of P at {}",
                        a.weight
                    );
                }
                total = total.add(&a.projector);
            }
            assert!(total.is_identity(), "V({m}) completeness");
        }
    });
}

#[test]
fn criterion_11_k2rho_action() {
    criterion(11, "k2rho action", Duration::from_secs(1), || {
        for m in 0..=4u32 {
            let v = QModule::sl2_simple(m, 4);
            let k2 = k2rho_action(&v).unwrap();
            assert!(k2.is_diagonal());
            let two_rho = v.cartan().weyl_vector().scaled(2);
            for (idx, w) in v.weights().iter().enumerate() {
                let pairing = v.cartan().weight_inner_product(w, &two_rho).unwrap();
                let expected = ribbonq_core::qarith::FieldElement::q_power(&pairing, 4).unwrap();
                assert_eq!(*k2.get(idx, idx), expected, "V({m}) index {idx}");
            }
        }
    });
}

#[test]
fn criterion_12_determinism_and_roundtrip() {
    criterion(
        12,
        "determinism and round-trip",
        Duration::from_secs(5),
        || {
            // byte-identical structured output across runs
            let run = || {
                std::process::Command::new(env!("CARGO_BIN_EXE_ribbonq"))
                    .args([
                        "rmatrix",
                        "--type",
                        "A",
                        "--rank",
                        "1",
                        "--weight",
                        "2",
                        "--format",
                        "structured",
                    ])
                    .output()
                    .expect("binary runs")
            };
            let first = run();
            let second = run();
            assert!(first.status.success());
            assert_eq!(
                first.stdout, second.stdout,
                "structured output differs across runs"
            );
            assert!(!first.stdout.is_empty());

            // module files round-trip bit-exactly
            for m in [0u32, 1, 3] {
                let module = QModule::sl2_simple(m, 4);
                let text = module_format::render_module(&module);
                let back = module_format::parse_module(&text).unwrap();
                assert_eq!(back, module);
                assert_eq!(module_format::render_module(&back), text);
            }
            let v1 = QModule::sl2_simple(1, 4);
            let square = v1.tensor(&v1).unwrap();
            let text = module_format::render_module(&square);
            assert_eq!(
                module_format::render_module(&module_format::parse_module(&text).unwrap()),
                text
            );
        },
    );
}

fn qpow(num: i64, den: i64) -> ribbonq_core::qarith::FieldElement {
    ribbonq_core::qarith::FieldElement::q_power(&rat(num, den), 4).unwrap()
}
