//! Implementations of the CLI subcommands.

use crate::report::{matrix_block, matrix_table};
use crate::{CommonArgs, Format};
use ribbonq_core::braid::{verify_hexagon_on_triple, BraidRep, BraidWord, TripleBraidings};
use ribbonq_core::cartan::{CartanData, LieType, Weight};
use ribbonq_core::classical::{
    casimir_operator, casimir_two_tensor, verify_first_order_expansion,
    verify_infinitesimal_braid_relations, ClassicalModule,
};
use ribbonq_core::fusion::{decompose_general, isotypic_decomposition};
use ribbonq_core::matrix::QMat;
use ribbonq_core::qmodule::{format as module_format, Generator, QModule};
use ribbonq_core::ribbon::{exponential_factor_action, k2rho_action, CertifiedBraiding};
use ribbonq_core::{Error, Result};
use std::process::ExitCode;

fn parse_lie_type(args: &CommonArgs) -> Result<LieType> {
    args.lie_type.parse()
}

fn cartan_from(args: &CommonArgs) -> Result<CartanData> {
    CartanData::new(parse_lie_type(args)?, args.rank)
}

fn parse_weight(args: &CommonArgs, cd: &CartanData) -> Result<Weight> {
    let text = args
        .weight
        .as_deref()
        .ok_or_else(|| Error::Parse("--weight is required for this command".into()))?;
    let coords: Vec<i64> = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad weight coordinate {t:?}")))
        })
        .collect::<Result<_>>()?;
    if coords.len() != cd.rank() {
        return Err(Error::DimensionMismatch(format!(
            "weight has {} coordinates, rank is {}",
            coords.len(),
            cd.rank()
        )));
    }
    Ok(Weight::new(coords))
}

/// The module a braiding command operates on: a file if given, otherwise
/// the built-in simple sl2 module for `--type A --rank 1 --weight m`.
fn resolve_module(args: &CommonArgs) -> Result<QModule> {
    if let Some(path) = &args.module_file {
        return module_format::load_module(path);
    }
    let cd = cartan_from(args)?;
    let w = parse_weight(args, &cd)?;
    if !w.is_dominant() {
        return Err(Error::NonDominantWeight(w.coords().to_vec()));
    }
    if cd.lie_type() != LieType::A || cd.rank() != 1 {
        return Err(Error::UnsupportedConfiguration(format!(
            "built-in explicit modules cover A_1 only; supply --module-file for {cd}"
        )));
    }
    Ok(QModule::sl2_simple(w.coords()[0] as u32, cd.root_order()))
}

fn header(out: &mut String, name: &str, m: Option<&QModule>, args: &CommonArgs) -> Result<()> {
    use std::fmt::Write as _;
    let _ = writeln!(out, "ribbonq {name}");
    match m {
        Some(m) => {
            let hw = m.highest_weight_vectors();
            let _ = writeln!(out, "lie_type {}", m.cartan().lie_type());
            let _ = writeln!(out, "rank {}", m.cartan().rank());
            if let Some(first) = hw.first() {
                let _ = writeln!(out, "weight {}", first.weight);
            }
            let _ = writeln!(out, "root_order {}", m.root_order());
            let _ = writeln!(out, "dim_v {}", m.dim());
        }
        None => {
            let cd = cartan_from(args)?;
            let _ = writeln!(out, "lie_type {}", cd.lie_type());
            let _ = writeln!(out, "rank {}", cd.rank());
            let _ = writeln!(out, "root_order {}", cd.root_order());
        }
    }
    Ok(())
}

pub fn cmd_twist(args: &CommonArgs) -> Result<ExitCode> {
    let cd = cartan_from(args)?;
    let w = parse_weight(args, &cd)?;
    let casimir = cd.casimir_eigenvalue(&w)?;
    let twist = ribbonq_core::ribbon::twist_scalar(&cd, &w, cd.root_order())?;
    match args.format {
        Format::Structured => {
            let mut out = String::new();
            header(&mut out, "twist", None, args)?;
            out.push_str(&format!("weight {w}\n"));
            out.push_str(&format!("casimir {casimir}\n"));
            out.push_str(&format!("twist {}\n", twist.canonical_text()));
            print!("{out}");
        }
        Format::Text => {
            println!(
                "twist of V{} over {}: {}, {}",
                w,
                cd,
                casimir,
                twist.canonical_text()
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

pub fn cmd_fuse(args: &CommonArgs) -> Result<ExitCode> {
    let cd = cartan_from(args)?;
    let w = parse_weight(args, &cd)?;
    let decomposition = decompose_general(&cd, &w, args.cap)?;
    match args.format {
        Format::Structured => {
            let mut out = String::new();
            header(&mut out, "fuse", None, args)?;
            out.push_str(&decomposition.render());
            print!("{out}");
        }
        Format::Text => {
            println!(
                "V{w} (x) V{w} over {cd}: {} summands, multiplicity_free {}",
                decomposition.summands.len(),
                decomposition.multiplicity_free
            );
            for s in &decomposition.summands {
                println!(
                    "  V{} x{}  dim {}  casimir {}",
                    s.weight, s.multiplicity, s.dim, s.casimir
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

pub fn cmd_rmatrix(args: &CommonArgs) -> Result<ExitCode> {
    let module = resolve_module(args)?;
    let braiding = CertifiedBraiding::for_simple_module(&module)?;
    match args.format {
        Format::Structured => {
            let mut out = String::new();
            header(&mut out, "rmatrix", Some(&module), args)?;
            out.push_str(&braiding.spectrum.render());
            out.push_str("certified intertwiner yang_baxter eigenvalue_law top_normalization classical_limit\n");
            out.push_str(&format!(
                "matrix {} {}\n",
                braiding.rmatrix.rows(),
                braiding.rmatrix.cols()
            ));
            out.push_str(&matrix_block(&braiding.rmatrix));
            out.push('\n');
            print!("{out}");
        }
        Format::Text => {
            println!(
                "braiding operator on V (x) V, dim {}:",
                braiding.rmatrix.rows()
            );
            for c in &braiding.spectrum.components {
                println!(
                    "  component V{}: dim {}, eigenvalue {}",
                    c.weight,
                    c.dim,
                    c.eigenvalue().canonical_text()
                );
            }
            print!("{}", matrix_table(&braiding.rmatrix));
        }
    }
    Ok(ExitCode::SUCCESS)
}

pub fn cmd_braid(args: &CommonArgs) -> Result<ExitCode> {
    let module = resolve_module(args)?;
    let braiding = CertifiedBraiding::for_simple_module(&module)?;
    let rep = BraidRep::build(&braiding, args.strands)?;
    let word = BraidWord::parse(args.word.as_deref().unwrap_or(""), args.strands)?;
    let image = rep.evaluate(&word)?;
    match args.format {
        Format::Structured => {
            let mut out = String::new();
            header(&mut out, "braid", Some(&module), args)?;
            out.push_str(&format!("strands {}\n", args.strands));
            out.push_str(&format!("word {}\n", word));
            out.push_str(&format!("matrix {} {}\n", image.rows(), image.cols()));
            out.push_str(&matrix_block(&image));
            out.push('\n');
            print!("{out}");
        }
        Format::Text => {
            println!(
                "word \"{}\" on {} strands, dim {}:",
                word,
                args.strands,
                image.rows()
            );
            print!("{}", matrix_table(&image));
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---- verify ----

struct Suite {
    lines: Vec<String>,
    failed: bool,
}

impl Suite {
    fn new() -> Self {
        Suite {
            lines: Vec::new(),
            failed: false,
        }
    }

    fn record(&mut self, name: &str, ok: bool, detail: &str) {
        if ok {
            self.lines.push(format!("check {name} pass"));
        } else {
            self.failed = true;
            if detail.is_empty() {
                self.lines.push(format!("check {name} fail"));
            } else {
                self.lines.push(format!("check {name} fail: {detail}"));
            }
        }
    }

    fn skip(&mut self, name: &str, reason: &str) {
        self.lines.push(format!("check {name} skipped: {reason}"));
    }
}

pub fn cmd_verify(args: &CommonArgs) -> Result<ExitCode> {
    let mut suite = Suite::new();

    // A module file that fails its relations is reported, not propagated.
    let module = if let Some(path) = &args.module_file {
        match module_format::load_module(path) {
            Ok(m) => m,
            Err(Error::RelationFailure(lines)) => {
                for line in lines.lines() {
                    suite.record("module_relations", false, line);
                }
                return finish(args, suite, None);
            }
            Err(e) => return Err(e),
        }
    } else {
        resolve_module(args)?
    };

    let relation_report = module.verify_relations();
    suite.record(
        "module_relations",
        relation_report.pass(),
        &relation_report.failures.join("; "),
    );

    let square = module.tensor(&module)?;
    let square_report = square.verify_relations();
    suite.record(
        "tensor_square_relations",
        square_report.pass(),
        &square_report.failures.join("; "),
    );

    // projector algebra and equivariance
    let comps = isotypic_decomposition(&square)?;
    let mut algebra_ok = true;
    let mut total = QMat::zeros(square.dim(), square.dim());
    for (i, a) in comps.iter().enumerate() {
        if a.projector.mul(&a.projector) != a.projector {
            algebra_ok = false;
        }
        for (j, b) in comps.iter().enumerate() {
            if i != j && !a.projector.mul(&b.projector).is_zero() {
                algebra_ok = false;
            }
        }
        total = total.add(&a.projector);
    }
    suite.record("projector_algebra", algebra_ok && total.is_identity(), "");

    let mut equivariant = true;
    for c in &comps {
        for g in Generator::ALL {
            for i in 1..=module.cartan().rank() {
                if !c.projector.commutes_with(square.generator(g, i)) {
                    equivariant = false;
                }
            }
        }
    }
    suite.record("projector_equivariance", equivariant, "");

    // the braiding and its certificate, reported identity by identity
    match CertifiedBraiding::for_simple_module(&module) {
        Ok(braiding) => {
            suite.record("intertwiner", true, "");
            suite.record("rsquared_eigenvalue_law", true, "");
            suite.record("top_vector_normalization", true, "");
            suite.record("classical_flip_limit", true, "");
            suite.record("yang_baxter", true, "");

            // diagonal R-matrix factor: q^(<mu, nu>) on every weight pair
            let efa = exponential_factor_action(&module, &module)?;
            let mut exp_ok = efa.is_diagonal();
            for r in 0..square.dim() {
                let mu = &module.weights()[r / module.dim()];
                let nu = &module.weights()[r % module.dim()];
                let pairing = module.cartan().weight_inner_product(mu, nu)?;
                let expected =
                    ribbonq_core::qarith::FieldElement::q_power(&pairing, module.root_order())?;
                if *efa.get(r, r) != expected {
                    exp_ok = false;
                }
            }
            suite.record("exponential_factor_weights", exp_ok, "");

            // K_{2 rho} equals the integer product of K_i powers
            let k2 = k2rho_action(&module)?;
            let b = module.cartan().weyl_vector_coroot_coeffs();
            let mut product = QMat::identity(module.dim());
            let mut k2_ok = true;
            for i in 1..=module.cartan().rank() {
                let exp = ribbonq_core::rat(2, 1) * &b[i - 1]
                    / ribbonq_core::rat(module.cartan().d(i), 1);
                if !exp.is_integer() {
                    k2_ok = false;
                    break;
                }
                let steps = i64::try_from(exp.to_integer()).unwrap_or(0);
                let base = if steps >= 0 {
                    module.k(i)
                } else {
                    module.k_inv(i)
                };
                for _ in 0..steps.unsigned_abs() {
                    product = product.mul(base);
                }
            }
            suite.record("k2rho_action", k2_ok && product == k2, "");

            // braid relations and the word-level identity
            match BraidRep::build(&braiding, args.strands) {
                Ok(rep) => {
                    suite.record("braid_relations", true, "");
                    if args.strands >= 3 {
                        let lhs = rep.evaluate(&BraidWord::parse("1 2 1", args.strands)?)?;
                        let rhs = rep.evaluate(&BraidWord::parse("2 1 2", args.strands)?)?;
                        suite.record("braid_word_identity", lhs == rhs, "");
                    } else {
                        suite.skip("braid_word_identity", "needs at least 3 strands");
                    }
                }
                Err(e) => suite.record("braid_relations", false, &e.to_string()),
            }

            // hexagon coherence on the equal triple
            let braidings = TripleBraidings::from_pipeline(
                [&module, &module, &module],
                &[(&module, &braiding)],
            );
            match verify_hexagon_on_triple([&module, &module, &module], &braidings) {
                Ok(check) => suite.record("hexagon_triple", check.holds, ""),
                Err(e) => suite.record("hexagon_triple", false, &e.to_string()),
            }

            // classical shadow, built-in sl2 only
            if args.module_file.is_none() {
                let m = module.weights()[0].coords()[0] as u32;
                let classical = ClassicalModule::sl2_simple(m);
                suite.record(
                    "classical_relations",
                    classical.verify_relations().pass(),
                    "",
                );

                let c = casimir_operator(&classical);
                let expected = module
                    .cartan()
                    .casimir_eigenvalue(&braiding.spectrum.base_weight)?;
                let scalar_ok =
                    c == ribbonq_core::matrix::RatMat::identity(classical.dim).scaled(&expected);
                suite.record("classical_casimir_scalar", scalar_ok, "");

                match casimir_two_tensor(&classical, &classical) {
                    Ok(t) => {
                        suite.record("two_tensor_consistency", true, "");
                        let n = args.strands.max(3);
                        match verify_infinitesimal_braid_relations(&t, n) {
                            Ok(r) => suite.record(
                                "infinitesimal_braid_relations",
                                r.pass(),
                                &r.failures.join("; "),
                            ),
                            Err(e) => {
                                suite.record("infinitesimal_braid_relations", false, &e.to_string())
                            }
                        }
                        match verify_first_order_expansion(&braiding.rmatrix, &t, args.order) {
                            Ok(r) => suite.record(
                                "first_order_expansion",
                                r.pass(),
                                &r.failures.join("; "),
                            ),
                            Err(e) => suite.record("first_order_expansion", false, &e.to_string()),
                        }
                    }
                    Err(e) => suite.record("two_tensor_consistency", false, &e.to_string()),
                }
            } else {
                suite.skip(
                    "classical_relations",
                    "classical shadow covers built-in sl2 modules",
                );
                suite.skip(
                    "infinitesimal_braid_relations",
                    "classical shadow covers built-in sl2 modules",
                );
                suite.skip(
                    "first_order_expansion",
                    "classical shadow covers built-in sl2 modules",
                );
            }
        }
        Err(e) => {
            suite.record("braiding_certification", false, &e.to_string());
        }
    }

    finish(args, suite, Some(&module))
}

fn finish(args: &CommonArgs, suite: Suite, module: Option<&QModule>) -> Result<ExitCode> {
    let mut out = String::new();
    header(&mut out, "verify", module, args).ok();
    print!("{out}");
    for line in &suite.lines {
        println!("{line}");
    }
    println!("verdict {}", if suite.failed { "fail" } else { "pass" });
    Ok(if suite.failed {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    })
}
