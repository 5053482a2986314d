//! Acceptance criteria. Run with `cargo test --test acceptance`; prints one
//! PASS/FAIL line per criterion and exits nonzero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use common::*;
use ffdim::cli::generate::{seeded, shuffled};
use ffdim::cli::{parse_input, render_document};
use ffdim::complexes::{direct_sum, dual_complex, shift, FiniteFreeComplex};
use ffdim::dimform::{bh_codimension, check_bounds, dim_dual_via_fitting, dim_via_fitting, is_acyclic};
use ffdim::groebner::{initial_ideal, normal_form, IdealHandle};
use ffdim::homoracle::{dim_module, dim_via_homology, homology_presentation, homology_table, kernel_gens, Presentation};
use ffdim::krull::{dim_monomial_quotient, dim_quotient, Finite, NegInfinity, PosInfinity};
use ffdim::matpoly::{determinant, generic_rank, minor_ideal, MapOfFree};
use ffdim::polyring::{Monomial, MonomialOrder, PolyRing, Polynomial};
use rand::Rng;

const SUITE_SEED: u64 = 20_240_601;
const KOSZUL_SEED: u64 = 20_240_602;
const HOMOGENEOUS_SEED: u64 = 20_240_603;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn run(id: u32, title: &str, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    let secs = start.elapsed().as_secs_f64();
    match &outcome {
        Ok(detail) => println!("PASS  {id}. {title} [{detail}; {secs:.2}s]"),
        Err(why) => println!("FAIL  {id}. {title} [{why}; {secs:.2}s]"),
    }
    outcome.is_ok()
}

fn within(start: Instant, limit: Duration) -> Outcome {
    let took = start.elapsed();
    if took < limit {
        Ok(format!("{:.2}s < {}s", took.as_secs_f64(), limit.as_secs()))
    } else {
        Err(format!("took {:.2}s, budget {}s", took.as_secs_f64(), limit.as_secs()))
    }
}

fn main_formula(suite: &[FiniteFreeComplex]) -> Outcome {
    let start = Instant::now();
    let mut agree = 0;
    let mut values = std::collections::BTreeSet::new();
    for (i, c) in suite.iter().enumerate() {
        let fit = dim_via_fitting(c).map_err(|e| e.to_string())?.result;
        let hom = dim_via_homology(c).map_err(|e| e.to_string())?.0;
        ensure!(fit == hom, "complex {i}: fitting {fit} vs homology {hom}\n{}", render_document(c, None));
        values.insert(fit.to_string());
        agree += 1;
    }
    let time = within(start, Duration::from_secs(300))?;
    ensure!(suite.len() >= 200, "only {} complexes", suite.len());
    Ok(format!("{agree}/{} agree, values {{{}}}, {time}", suite.len(), values.into_iter().collect::<Vec<_>>().join(",")))
}

fn koszul_family(suite: &[(Vec<Polynomial>, FiniteFreeComplex)]) -> Outcome {
    let start = Instant::now();
    for (f, c) in suite {
        let expected = dim_quotient(&IdealHandle::new(c.ring(), f.clone()));
        let got = dim_via_fitting(c).map_err(|e| e.to_string())?.result;
        ensure!(got == expected, "f = {:?}: {got} vs {expected}", f.iter().map(|p| c.ring().render(p)).collect::<Vec<_>>());
    }
    ensure!(suite.len() >= 50, "only {} tuples", suite.len());
    let time = within(start, Duration::from_secs(60))?;
    Ok(format!("{}/{} agree, {time}", suite.len(), suite.len()))
}

fn duality<'a>(complexes: impl Iterator<Item = &'a FiniteFreeComplex>) -> Outcome {
    let mut n = 0;
    for c in complexes {
        let a = dim_dual_via_fitting(c).map_err(|e| e.to_string())?.result;
        let b = dim_via_fitting(&dual_complex(c)).map_err(|e| e.to_string())?.result;
        ensure!(a == b, "dual formula {a} vs formula on dual {b}\n{}", render_document(c, None));
        n += 1;
    }
    Ok(format!("{n} complexes"))
}

fn goldens() -> Outcome {
    let r = qq(&["x", "y"]);
    let single = FiniteFreeComplex::free_module(&r, 0, 1);
    ensure!(dim_via_fitting(&single).unwrap().result == Finite(2), "single module");
    let exact = FiniteFreeComplex::two_term(&r, 0, matrix(&r, &[&["1"]])).unwrap();
    ensure!(dim_via_fitting(&exact).unwrap().result == NegInfinity, "invertible differential");
    let kxxy = koszul(&r, &["x", "x*y"]);
    let got = (
        dim_via_fitting(&kxxy).unwrap().result,
        dim_dual_via_fitting(&kxxy).unwrap().result,
        bh_codimension(&kxxy).unwrap(),
    );
    ensure!(got == (Finite(1), Finite(3), Finite(-1)), "Koszul(x, xy): {got:?}");
    let kxy = koszul(&r, &["x", "y"]);
    let got = (
        dim_via_fitting(&kxy).unwrap().result,
        dim_dual_via_fitting(&kxy).unwrap().result,
        bh_codimension(&kxy).unwrap(),
    );
    ensure!(got == (Finite(0), Finite(2), Finite(0)), "Koszul(x, y): {got:?}");
    Ok("4 complexes".into())
}

fn bounds(suite: &[FiniteFreeComplex], graded: &[FiniteFreeComplex]) -> Outcome {
    let mut lower_checked = 0;
    for (i, c) in suite.iter().chain(graded).enumerate() {
        let h = homology_table(c).map_err(|e| e.to_string())?;
        let b = check_bounds(c, &h).map_err(|e| e.to_string())?;
        ensure!(b.upper_holds, "complex {i}: dim_dual {} > v + sup H = {} + {}", b.dim_dual, b.ring_dim, b.sup_homology);
        if b.homogeneous {
            ensure!(b.lower_holds, "complex {i}: v + inf H = {} + {} > dim_dual {}", b.ring_dim, b.inf_homology, b.dim_dual);
            lower_checked += 1;
        }
    }
    Ok(format!(
        "upper bound on {}, lower bound on {lower_checked} homogeneous",
        suite.len() + graded.len()
    ))
}

fn acyclicity(suite: &[FiniteFreeComplex]) -> Outcome {
    let mut acyclic = 0;
    for (i, c) in suite.iter().enumerate() {
        let cert = is_acyclic(c).map_err(|e| e.to_string())?;
        let h = homology_table(c).map_err(|e| e.to_string())?;
        ensure!(cert.acyclic == h.vanishes_above(c.low()), "complex {i}: criterion {} vs homology", cert.acyclic);
        acyclic += usize::from(cert.acyclic);
    }
    let r = qq(&["x", "y", "z"]);
    let sequences: [&[&str]; 5] = [&["x"], &["x", "y"], &["x", "y", "z"], &["x^2", "y*z"], &["x*y - z^2", "x + y + z", "y^3 - x"]];
    for seq in sequences {
        let c = koszul(&r, seq);
        ensure!(is_acyclic(&c).unwrap().acyclic, "Koszul{seq:?} not acyclic");
        let codim = bh_codimension(&c).unwrap();
        ensure!(codim >= Finite(0), "Koszul{seq:?}: codimension {codim}");
    }
    Ok(format!("{}/{} agree ({acyclic} acyclic), {} regular sequences", suite.len(), suite.len(), sequences.len()))
}

fn unit_examples() -> Outcome {
    let mut checks = 0;
    let mut check = |ok: bool, what: &str| -> Result<(), String> {
        checks += 1;
        if ok {
            Ok(())
        } else {
            Err(what.to_string())
        }
    };
    // groebner
    let lex = PolyRing::new(ffdim::polyring::CoefficientField::Rationals, ["x", "y", "z"], MonomialOrder::Lex).unwrap();
    let p = |s: &str| lex.parse(s).unwrap();
    check(normal_form(&lex, &p("x^2"), &[p("x - y")]) == p("y^2"), "NF(x^2, {x - y})")?;
    check(normal_form(&lex, &p("x^2 + 3"), &[]) == p("x^2 + 3"), "NF(f, {})")?;
    check(normal_form(&lex, &p("x - y"), &[p("x - y")]).is_zero(), "NF(x - y, {x - y})")?;
    let gb = IdealHandle::new(&lex, vec![p("x - y"), p("y - z")]);
    check(gb.groebner_basis().elements() == [p("x - z"), p("y - z")], "GB(x - y, y - z)")?;
    check(
        initial_ideal(gb.groebner_basis()) == [Monomial::var(3, 0), Monomial::var(3, 1)],
        "in(x - z, y - z)",
    )?;
    check(IdealHandle::new(&lex, vec![p("x^2")]).groebner_basis().elements() == [p("x^2")], "GB(x^2)")?;
    check(IdealHandle::new(&lex, vec![p("x"), p("x - 1")]).groebner_basis().elements() == [p("1")], "GB(x, x - 1)")?;
    // krull
    let r3 = qq(&["x", "y", "z"]);
    check(
        dim_monomial_quotient(&r3, &[Monomial::from_exponents(&[1, 1, 0]), Monomial::from_exponents(&[1, 0, 1])]) == Finite(2),
        "dim k[x,y,z]/(xy, xz)",
    )?;
    check(dim_monomial_quotient(&r3, &[]) == Finite(3), "dim of the full ring")?;
    check(dim_monomial_quotient(&r3, &[Monomial::one(3)]) == NegInfinity, "dim of the zero ring")?;
    let r = qq(&["x", "y"]);
    check(dim_quotient(&IdealHandle::new(&r, polys(&r, &["x^2 - y"]))) == Finite(1), "dim R/(x^2 - y)")?;
    check(dim_quotient(&IdealHandle::unit(&r)) == NegInfinity, "dim R/(1)")?;
    check(dim_quotient(&IdealHandle::new(&r, polys(&r, &["x", "y"]))) == Finite(0), "dim R/(x, y)")?;
    // matpoly
    check(determinant(&r, &MapOfFree::zero(0, 0)).unwrap() == r.one(), "det of 0x0")?;
    check(determinant(&r, &MapOfFree::identity(&r, 3)).unwrap() == r.one(), "det of identity")?;
    check(
        determinant(&r, &matrix(&r, &[&["x", "y"], &["y", "x"]])).unwrap() == r.parse("x^2 - y^2").unwrap(),
        "det [[x, y], [y, x]]",
    )?;
    let row = matrix(&r, &[&["x", "y"]]);
    check(minor_ideal(&r, &row, 0).is_unit(), "I_0")?;
    check(minor_ideal(&r, &row, 1).same_ideal(&IdealHandle::new(&r, polys(&r, &["x", "y"]))), "I_1([x y])")?;
    check(minor_ideal(&r, &row, 2).is_zero(), "I_2([x y])")?;
    check(minor_ideal(&r, &MapOfFree::zero(0, 0), 3).is_unit(), "I_3 of the empty matrix")?;
    check(generic_rank(&r, &MapOfFree::zero(2, 2)) == 0, "rank of zero")?;
    check(generic_rank(&r, &MapOfFree::identity(&r, 3)) == 3, "rank of identity")?;
    check(generic_rank(&r, &row) == 1, "rank [x y]")?;
    // homoracle
    let k = kernel_gens(&r, &row);
    let neg_x = r.neg(&r.var(0));
    let proportional = |v: &[Polynomial], w: &[Polynomial]| {
        let s = r.div_exact(&v[0], &w[0]);
        s.is_some_and(|s| s.is_constant() && v.iter().zip(w).all(|(a, b)| *a == r.mul(&s, b)))
    };
    check(k.len() == 1 && proportional(&k[0].components, &[r.var(1), neg_x]), "ker [x y]")?;
    check(kernel_gens(&r, &MapOfFree::identity(&r, 2)).is_empty(), "ker identity")?;
    let k = kernel_gens(&r, &matrix(&r, &[&["x", "x*y"]]));
    check(
        k.len() == 1 && proportional(&k[0].components, &polys(&r, &["-y", "1"])),
        "ker [x xy]",
    )?;
    let kxy = koszul(&r, &["x", "y"]);
    let h0 = homology_presentation(&kxy, 0).unwrap();
    check(h0.generator_count == 1 && h0.relations == row, "H_0 Koszul(x, y)")?;
    check(dim_module(&r, &homology_presentation(&kxy, 1).unwrap()) == NegInfinity, "H_1 Koszul(x, y)")?;
    let h1 = homology_presentation(&koszul(&r, &["x", "x*y"]), 1).unwrap();
    check(
        h1.generator_count == 1 && minor_ideal(&r, &h1.relations, 1).same_ideal(&IdealHandle::new(&r, vec![r.var(0)])),
        "H_1 Koszul(x, xy)",
    )?;
    check(dim_module(&r, &Presentation::new(1, matrix(&r, &[&["x"]])).unwrap()) == Finite(1), "dim R/(x)")?;
    check(dim_module(&r, &Presentation::new(1, MapOfFree::zero(1, 0)).unwrap()) == Finite(2), "dim R")?;
    check(dim_module(&r, &Presentation::new(1, matrix(&r, &[&["1"]])).unwrap()) == NegInfinity, "dim 0")?;
    let (d, t) = dim_via_homology(&FiniteFreeComplex::two_term(&r, 0, MapOfFree::identity(&r, 1)).unwrap()).unwrap();
    check(d == NegInfinity && t.inf() == PosInfinity && t.sup() == NegInfinity, "exact complex")?;
    check(dim_via_homology(&koszul(&r, &["x", "x*y"])).unwrap().0 == Finite(1), "homology of Koszul(x, xy)")?;

    // determinants against the Leibniz oracle
    let fp3 = fp(&["x", "y", "z"]);
    let mut rng = seeded(77);
    for i in 0..100 {
        let entries: Vec<Polynomial> = (0..16).map(|_| ffdim::cli::generate::random_polynomial(&fp3, &mut rng, 1)).collect();
        let m = MapOfFree::new(4, 4, entries).unwrap();
        check(determinant(&fp3, &m).unwrap() == leibniz_determinant(&fp3, &m), &format!("determinant {i}"))?;
    }
    // reduced bases do not depend on generator order
    for i in 0..50 {
        let count = rng.gen_range(2..=4);
        let gens: Vec<Polynomial> = (0..count).map(|_| ffdim::cli::generate::random_polynomial(&fp3, &mut rng, 2)).collect();
        let a = IdealHandle::new(&fp3, gens.clone());
        let b = IdealHandle::new(&fp3, shuffled(&gens, &mut rng));
        check(a.groebner_basis() == b.groebner_basis(), &format!("permuted ideal {i}"))?;
    }
    Ok(format!("{checks} checks"))
}

fn metamorphic(suite: &[FiniteFreeComplex]) -> Outcome {
    let pairs = suite.len().min(50);
    ensure!(pairs == 50, "need 50 pairs");
    for i in 0..pairs {
        let (c, d) = (&suite[i], &suite[(i + 17) % suite.len()]);
        let dc = dim_via_fitting(c).unwrap().result;
        let dd = dim_via_fitting(d).unwrap().result;
        for k in -2..=2 {
            let got = dim_via_fitting(&shift(c, k)).unwrap().result;
            ensure!(got == dc - k, "pair {i}: dim of shift by {k} is {got}, expected {}", dc - k);
        }
        let sum = dim_via_fitting(&direct_sum(c, d).unwrap()).unwrap().result;
        ensure!(sum == dc.max(dd), "pair {i}: dim of sum {sum}, parts {dc} and {dd}");
    }
    Ok(format!("{pairs} pairs, shifts -2..2"))
}

fn cli(documents: &[FiniteFreeComplex]) -> Outcome {
    let bin = env!("CARGO_BIN_EXE_ffdim");
    let start = Instant::now();
    let out = Command::new(bin)
        .args(["verify", "--random", "--count", "50", "--seed", "7"])
        .output()
        .map_err(|e| e.to_string())?;
    let took = start.elapsed();
    let text = String::from_utf8_lossy(&out.stdout).trim().to_string();
    ensure!(out.status.code() == Some(0), "verify exited {:?}: {text}", out.status.code());
    ensure!(text == "50/50 agree", "verify printed `{text}`");
    ensure!(took < Duration::from_secs(120), "verify took {:.2}s", took.as_secs_f64());

    for (i, c) in documents.iter().enumerate() {
        let text = render_document(c, Some("generated"));
        let back = parse_input(&text).map_err(|e| format!("document {i}: {e}"))?;
        ensure!(&back == c, "document {i} does not round trip\n{text}");
    }

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("k.cplx");
    std::fs::write(&path, KOSZUL_X_XY_DOC).map_err(|e| e.to_string())?;
    let report = || -> Result<serde_json::Value, String> {
        let out = Command::new(bin)
            .args(["report", "--json", path.to_str().unwrap()])
            .output()
            .map_err(|e| e.to_string())?;
        ensure!(out.status.code() == Some(0), "report exited {:?}", out.status.code());
        let mut v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
        v.as_object_mut().unwrap().remove("timings_ms");
        Ok(v)
    };
    let (a, b) = (report()?, report()?);
    let keys: Vec<String> = a.as_object().unwrap().keys().cloned().collect();
    let expected = [
        "acyclic",
        "bh_codim",
        "bounds",
        "complex_name",
        "dim",
        "dim_dual",
        "homology",
        "per_degree_terms",
        "ring",
        "schema_version",
    ];
    ensure!(keys == expected, "report keys {keys:?}");
    ensure!(a == b, "report output differs between runs");
    Ok(format!(
        "verify 50/50 in {:.2}s, {} documents round trip, report keys stable",
        took.as_secs_f64(),
        documents.len()
    ))
}

fn main() {
    let suite = random_suite(200, SUITE_SEED);
    let kos = koszul_suite(50, KOSZUL_SEED);
    let graded = homogeneous_suite(100, HOMOGENEOUS_SEED);

    let results = [
        run(1, "minor formula equals homology dimension on 200 random complexes over F_32003", || main_formula(&suite)),
        run(2, "Koszul complexes: minor formula equals dim R/(f) on 50 tuples", || koszul_family(&kos)),
        run(3, "dual formula equals minor formula on the dual complex (suites 1-2)", || {
            duality(suite.iter().chain(kos.iter().map(|(_, c)| c)))
        }),
        run(4, "golden dimensions, dual dimensions and codimensions", goldens),
        run(5, "dim Hom(F,R) <= v + sup H, and v + inf H <= dim Hom(F,R) when graded", || bounds(&suite, &graded)),
        run(6, "acyclicity criterion agrees with homology; regular sequences have codim >= 0", || acyclicity(&suite)),
        run(7, "hand examples, 100 determinants vs Leibniz, 50 permuted Groebner bases", unit_examples),
        run(8, "shift and direct sum laws on 50 pairs", || metamorphic(&suite)),
        run(9, "CLI: verify --random, document round trip, stable JSON keys", || {
            let docs: Vec<FiniteFreeComplex> = suite.iter().chain(graded.iter()).cloned().collect();
            cli(&docs)
        }),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("{passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
