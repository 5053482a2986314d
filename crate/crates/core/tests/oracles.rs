mod common;

use common::*;
use ffdim::complexes::{dual_complex, koszul_complex, FiniteFreeComplex};
use ffdim::dimform::{bh_codimension, check_bounds, dim_dual_via_fitting, dim_via_fitting, is_acyclic};
use ffdim::groebner::IdealHandle;
use ffdim::homoracle::{dim_via_homology, homology_presentation, homology_table, proj_dim};
use ffdim::krull::{dim_quotient, ExtendedDim, Finite, NegInfinity, PosInfinity};
use ffdim::matpoly::{minor_ideal, MapOfFree};
use ffdim::polyring::{Monomial, MonomialOrder, PolyRing, Polynomial};

/// `dim R/I` as the largest set `S` of variables with `I ∩ k[S] = 0`,
/// found by lex elimination.
fn dim_by_elimination(ring: &PolyRing, gens: &[Polynomial]) -> ExtendedDim {
    let v = ring.nvars();
    if IdealHandle::new(ring, gens.to_vec()).is_unit() {
        return NegInfinity;
    }
    let mut best = 0;
    for set in 0u32..1 << v {
        let size = set.count_ones() as i64;
        if size <= best {
            continue;
        }
        // eliminated variables first, then S
        let order: Vec<usize> = (0..v).filter(|i| set & (1 << i) == 0).chain((0..v).filter(|i| set & (1 << i) != 0)).collect();
        let names: Vec<String> = order.iter().map(|&i| ring.variables()[i].clone()).collect();
        let lex = PolyRing::new(ring.field().clone(), names, MonomialOrder::Lex).unwrap();
        let moved: Vec<Polynomial> = gens
            .iter()
            .map(|g| {
                let terms = g
                    .terms()
                    .iter()
                    .map(|(m, c)| {
                        let e: Vec<u32> = order.iter().map(|&i| m.exponents()[i]).collect();
                        (Monomial::from_exponents(&e), c.clone())
                    })
                    .collect();
                lex.from_terms(terms).unwrap()
            })
            .collect();
        let gb = IdealHandle::new(&lex, moved);
        let eliminated = v - size as usize;
        let meets = gb.groebner_basis().elements().iter().any(|g| {
            g.terms()
                .iter()
                .all(|(m, _)| m.exponents()[..eliminated].iter().all(|&e| e == 0))
        });
        if !meets {
            best = size;
        }
    }
    Finite(best)
}

#[test]
fn krull_dimension_agrees_with_elimination() {
    for (f, c) in koszul_suite(60, 101) {
        let ring = c.ring().clone();
        assert_eq!(
            dim_quotient(&IdealHandle::new(&ring, f.clone())),
            dim_by_elimination(&ring, &f),
            "{:?}",
            f.iter().map(|p| ring.render(p)).collect::<Vec<_>>()
        );
    }
}

#[test]
fn golden_single_module() {
    let r = qq(&["x", "y"]);
    let c = FiniteFreeComplex::free_module(&r, 0, 1);
    assert_eq!(dim_via_fitting(&c).unwrap().result, Finite(2));
    assert_eq!(dim_via_homology(&c).unwrap().0, Finite(2));
}

#[test]
fn golden_invertible_differential() {
    let r = qq(&["x", "y"]);
    let c = FiniteFreeComplex::two_term(&r, 0, matrix(&r, &[&["1", "0"], &["0", "-1"]])).unwrap();
    assert_eq!(dim_via_fitting(&c).unwrap().result, NegInfinity);
    assert_eq!(dim_via_homology(&c).unwrap().0, NegInfinity);
    assert_eq!(bh_codimension(&c).unwrap(), PosInfinity);
}

#[test]
fn golden_koszul_x_xy() {
    for r in [qq(&["x", "y"]), fp(&["x", "y"])] {
        let c = koszul(&r, &["x", "x*y"]);
        assert_eq!(dim_via_fitting(&c).unwrap().result, Finite(1));
        assert_eq!(dim_dual_via_fitting(&c).unwrap().result, Finite(3));
        assert_eq!(bh_codimension(&c).unwrap(), Finite(-1));
        let (dim, table) = dim_via_homology(&c).unwrap();
        assert_eq!(dim, Finite(1));
        // H_0 = R/(x), H_1 = R/(x)
        assert_eq!(table.get(0).unwrap().dim, Finite(1));
        assert_eq!(table.get(1).unwrap().dim, Finite(1));
        assert_eq!(table.get(2).unwrap().dim, NegInfinity);
        let h1 = homology_presentation(&c, 1).unwrap();
        assert_eq!(h1.generator_count, 1);
        assert!(minor_ideal(&r, &h1.relations, 1).same_ideal(&IdealHandle::new(&r, vec![r.var(0)])));
    }
}

#[test]
fn golden_koszul_x_y() {
    for r in [qq(&["x", "y"]), fp(&["x", "y"])] {
        let c = koszul(&r, &["x", "y"]);
        assert_eq!(dim_via_fitting(&c).unwrap().result, Finite(0));
        assert_eq!(dim_dual_via_fitting(&c).unwrap().result, Finite(2));
        assert_eq!(bh_codimension(&c).unwrap(), Finite(0));
        let (dim, table) = dim_via_homology(&c).unwrap();
        assert_eq!(dim, Finite(0));
        assert_eq!((table.inf(), table.sup()), (Finite(0), Finite(0)));
        let h0 = homology_presentation(&c, 0).unwrap();
        assert_eq!(h0.generator_count, 1);
        assert_eq!(h0.relations, matrix(&r, &[&["x", "y"]]));
        assert!(is_acyclic(&c).unwrap().acyclic);
    }
}

#[test]
fn koszul_family_matches_quotient_dimension() {
    for (f, c) in koszul_suite(80, 202) {
        let ring = c.ring().clone();
        let expected = dim_quotient(&IdealHandle::new(&ring, f));
        assert_eq!(dim_via_fitting(&c).unwrap().result, expected);
        assert_eq!(dim_via_homology(&c).unwrap().0, expected);
    }
}

#[test]
fn regular_sequences_are_acyclic_with_nonnegative_codimension() {
    let r = qq(&["x", "y", "z"]);
    for seq in [
        vec!["x"],
        vec!["x", "y"],
        vec!["x", "y", "z"],
        vec!["x^2", "y^2", "z^2"],
        vec!["x*y - z^2", "x + y + z"],
        vec!["x^2 + y", "z^2 - x"],
    ] {
        let c = koszul(&r, &seq);
        assert!(is_acyclic(&c).unwrap().acyclic, "{seq:?}");
        let table = homology_table(&c).unwrap();
        assert!(table.vanishes_above(c.low()), "{seq:?}");
        let codim = bh_codimension(&c).unwrap();
        assert!(codim >= Finite(0), "{seq:?}: {codim}");
        assert_eq!(codim, Finite(0), "{seq:?}");
    }
}

#[test]
fn acyclicity_matches_homology() {
    for c in random_suite(120, 303).iter().chain(homogeneous_suite(60, 304).iter()) {
        let table = homology_table(c).unwrap();
        assert_eq!(is_acyclic(c).unwrap().acyclic, table.vanishes_above(c.low()));
    }
}

#[test]
fn bounds_on_random_complexes() {
    for c in random_suite(120, 404) {
        let table = homology_table(&c).unwrap();
        let b = check_bounds(&c, &table).unwrap();
        assert!(b.upper_holds, "{b:?}");
    }
    for c in homogeneous_suite(120, 405) {
        let table = homology_table(&c).unwrap();
        let b = check_bounds(&c, &table).unwrap();
        assert!(b.homogeneous);
        assert!(b.upper_holds && b.lower_holds, "{b:?}");
    }
}

#[test]
fn duality_on_goldens() {
    let r = qq(&["x", "y"]);
    let c = FiniteFreeComplex::two_term(&r, 0, matrix(&r, &[&["x"]])).unwrap();
    let g = dual_complex(&c);
    assert_eq!((g.low(), g.high()), (-1, 0));
    assert_eq!(g.differential(0).into_owned(), matrix(&r, &[&["x"]]));
    for c in [koszul(&r, &["x", "x*y"]), koszul(&r, &["x", "y"])] {
        assert_eq!(
            dim_dual_via_fitting(&c).unwrap().result,
            dim_via_homology(&dual_complex(&c)).unwrap().0
        );
    }
}

#[test]
fn projective_dimension_of_minimal_resolutions() {
    let r = qq(&["x", "y", "z"]);
    for (seq, pd) in [(vec!["x"], 1), (vec!["x", "y"], 2), (vec!["x", "y", "z"], 3)] {
        let p = proj_dim(&koszul(&r, &seq)).unwrap();
        assert_eq!(p.value, Finite(pd));
        assert!(p.certified);
    }
    let split = FiniteFreeComplex::two_term(&r, 0, MapOfFree::identity(&r, 1)).unwrap();
    assert!(!proj_dim(&split).unwrap().certified);
}

#[test]
fn koszul_matrices_follow_the_sign_convention() {
    let r = qq(&["x", "y", "z"]);
    let c = koszul_complex(&r, &polys(&r, &["x", "y", "z"])).unwrap();
    assert_eq!(c.ranks(), &[1, 3, 3, 1]);
    // basis of F_2: {1,2}, {1,3}, {2,3}
    assert_eq!(
        c.differential(2).into_owned(),
        matrix(&r, &[&["-y", "-z", "0"], &["x", "0", "-z"], &["0", "x", "y"]])
    );
    assert_eq!(c.differential(3).into_owned(), matrix(&r, &[&["z"], &["-y"], &["x"]]));
}
