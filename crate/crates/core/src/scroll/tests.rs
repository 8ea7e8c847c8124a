use super::*;
use crate::groebner::{ideal_equal, MonomialIdeal};
use crate::order::MonomialOrder;
use crate::parse::parse_polynomial;
use crate::ring::binomial;
use proptest::prelude::*;

const DIAG: &str = "x1_0*x2_1 - x1_1*x2_0";
const DIAG_SQ: &str = "x1_0^2*x2_1^2 - 2*x1_0*x1_1*x2_0*x2_1 + x1_1^2*x2_0^2";

fn opts() -> GroebnerOptions {
    GroebnerOptions::default()
}

fn grevlex() -> MonomialOrder {
    MonomialOrder::grevlex()
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

#[test]
fn complement_examples() {
    assert_eq!(
        complement_degree(&Multidegree(vec![3, 2]), &[2, 2]),
        Multidegree(vec![1, 0])
    );
    assert_eq!(
        complement_degree(&Multidegree(vec![2, 2]), &[1, 1]),
        Multidegree(vec![0, 0])
    );
    assert_eq!(
        complement_degree(&Multidegree(vec![0, 5]), &[3, 3]),
        Multidegree(vec![0, 1])
    );
}

#[test]
fn spec_validation() {
    assert!(matches!(
        ScrollSpec::parse(&[1, 1], &[1], &[DIAG]),
        Err(Error::InvalidSpec(_))
    ));
    assert!(matches!(
        ScrollSpec::parse(&[1, 1], &[1, 0], &[DIAG]),
        Err(Error::InvalidSpec(_))
    ));
    assert!(matches!(
        ScrollSpec::parse(&[1, 1], &[1, 1], &["x1_0 + x2_0"]),
        Err(Error::Inhomogeneous(_))
    ));
    let s = ScrollSpec::parse(&[1, 1], &[2, 3], &[DIAG, "0"]).unwrap();
    assert_eq!(s.gens().len(), 1);
    assert_eq!(s.target().nvars(), 7);
}

#[test]
fn veronese_examples() {
    let t = Ring::target(&[1], &[1]).unwrap();
    assert!(veronese_ideal(&t, 0).is_empty());

    let t = Ring::target(&[1], &[2]).unwrap();
    assert_eq!(
        strings(&veronese_ideal(&t, 0)),
        ["-z1_[1,1]^2 + z1_[2,0]*z1_[0,2]"]
    );

    let t = Ring::target(&[1], &[3]).unwrap();
    let gb = Ideal::new(&t, veronese_ideal(&t, 0))
        .unwrap()
        .groebner_basis(&grevlex(), &opts())
        .unwrap();
    assert_eq!(gb.len(), 3);
    assert!(gb.basis().iter().all(|g| g.total_degree() == Some(2)));
}

#[test]
fn veronese_hilbert_function() {
    for (a, b) in [(1u32, 1u32), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (3, 2)] {
        let t = Ring::target(&[a], &[b]).unwrap();
        let gb = Ideal::new(&t, veronese_ideal(&t, 0))
            .unwrap()
            .groebner_basis(&grevlex(), &opts())
            .unwrap();
        let init = gb.initial_ideal();
        for s in 0..=5u32 {
            assert_eq!(
                init.count_standard_monomials(s).unwrap(),
                binomial((a + s * b) as u64, a as u64),
                "a={a} b={b} s={s}"
            );
        }
    }
}

#[test]
fn pullback_examples() {
    let spec = ScrollSpec::parse(&[1, 1], &[1, 1], &[DIAG]).unwrap();
    let p = pullback(spec.target(), &spec.gens()[0], Section::GreedyLex).unwrap();
    assert_eq!(
        p,
        parse_polynomial(spec.target(), "z1_[1,0]*z2_[0,1] - z1_[0,1]*z2_[1,0]").unwrap()
    );

    let src = Ring::source(&[1]).unwrap();
    let tgt = Ring::target(&[1], &[2]).unwrap();
    let f = parse_polynomial(&src, "x1_0^2*x1_1^2").unwrap();
    let p = pullback(&tgt, &f, Section::GreedyLex).unwrap();
    assert_eq!(p.to_string(), "z1_[2,0]*z1_[0,2]");
    assert_eq!(substitute(&src, &p), f);

    let g = parse_polynomial(&src, "x1_0^3").unwrap();
    assert!(matches!(
        pullback(&tgt, &g, Section::GreedyLex),
        Err(Error::NotInLattice { .. })
    ));
}

#[test]
fn pullback_round_trip_on_carpet() {
    let spec = ScrollSpec::parse(&[1, 1], &[2, 2], &[DIAG_SQ]).unwrap();
    let f = &spec.gens()[0];
    for section in [Section::GreedyLex, Section::MinLex] {
        let p = pullback(spec.target(), f, section).unwrap();
        assert_eq!(&substitute(spec.source(), &p), f);
    }
}

fn lattice_form() -> impl Strategy<Value = Polynomial> {
    // a = (1, 2), b = (2, 1), degree (2 m1, m2) with m <= (2, 4)
    (0u32..=2, 0u32..=4, prop::collection::vec(-5i64..=5, 1..8)).prop_map(|(m1, m2, cs)| {
        let src = Ring::source(&[1, 2]).unwrap();
        let monos = monomials_of_multidegree(&src, &Multidegree(vec![2 * m1, m2]));
        let terms = cs.iter().enumerate().map(|(k, &c)| {
            (
                monos[(k * 7 + c.unsigned_abs() as usize) % monos.len()].clone(),
                Rational::from_integer(c.into()),
            )
        });
        Polynomial::from_terms(&src, terms)
    })
}

proptest! {
    #[test]
    fn section_property(f in lattice_form()) {
        let src = f.ring().clone();
        let tgt = Ring::target(&[1, 2], &[2, 1]).unwrap();
        for section in [Section::GreedyLex, Section::MinLex] {
            let p = pullback(&tgt, &f, section).unwrap();
            prop_assert_eq!(substitute(&src, &p), f.clone());
        }
    }
}

#[test]
fn segre_quadric() {
    let spec = ScrollSpec::parse(&[1, 1], &[1, 1], &[DIAG]).unwrap();
    let i = scroll_ideal(&spec);
    assert_eq!(
        strings(i.gens()),
        ["-z1_[0,1]*z2_[1,0] + z1_[1,0]*z2_[0,1]"]
    );
    let k = kernel_ideal(&spec, &opts()).unwrap();
    assert_eq!(k.gens().len(), 1);
    assert!(ideal_equal(&i, &k, &grevlex(), &opts()).unwrap());
}

#[test]
fn rational_normal_scroll_2_3() {
    let spec = ScrollSpec::parse(&[1, 1], &[2, 3], &[DIAG]).unwrap();
    let gb = scroll_ideal(&spec)
        .groebner_basis(&grevlex(), &opts())
        .unwrap();
    assert_eq!(gb.len(), 10);
    assert!(gb.basis().iter().all(|g| g.total_degree() == Some(2)));
    let init = gb.initial_ideal();
    assert_eq!(init.krull_dimension().unwrap(), 3);
    for s in 0..6u32 {
        // H(s) = (s+1)(5s+2)/2 for a surface scroll of degree 5
        assert_eq!(
            init.count_standard_monomials(s).unwrap(),
            ((s + 1) * (5 * s + 2) / 2) as u64
        );
    }
    let k = kernel_ideal(&spec, &opts()).unwrap();
    assert!(ideal_equal(&scroll_ideal(&spec), &k, &grevlex(), &opts()).unwrap());
}

#[test]
fn k3_carpet_2_2() {
    let spec = ScrollSpec::parse(&[1, 1], &[2, 2], &[DIAG_SQ]).unwrap();
    let i = scroll_ideal(&spec);
    let gb = i.groebner_basis(&grevlex(), &opts()).unwrap();
    assert_eq!(gb.len(), 3);
    assert!(gb.basis().iter().all(|g| g.total_degree() == Some(2)));
    let k = kernel_ideal(&spec, &opts()).unwrap();
    assert!(ideal_equal(&i, &k, &grevlex(), &opts()).unwrap());
}

#[test]
fn section_choice_does_not_change_the_ideal() {
    let specs = [
        ScrollSpec::parse(&[1, 1], &[2, 3], &[DIAG]).unwrap(),
        ScrollSpec::parse(&[1, 1], &[2, 2], &[DIAG_SQ]).unwrap(),
        ScrollSpec::parse(
            &[2, 1],
            &[2, 1],
            &["x1_0^2*x2_1 - x1_1*x1_2*x2_0 + x1_2^2*x2_1"],
        )
        .unwrap(),
    ];
    for spec in &specs {
        let greedy = scroll_ideal_with(spec, Section::GreedyLex);
        let min = scroll_ideal_with(spec, Section::MinLex);
        assert!(ideal_equal(&greedy, &min, &grevlex(), &opts()).unwrap());
    }
}

#[test]
fn matrix_form_coefficients() {
    let spec = ScrollSpec::parse(&[1, 1], &[2, 3], &[DIAG]).unwrap();
    let mf = matrix_form(&spec).unwrap();
    assert_eq!(mf.integer_coeff().unwrap(), vec![vec![0, 1], vec![-1, 0]]);
    assert_eq!((mf.left.len(), mf.left[0].len()), (2, 2));
    assert_eq!((mf.right.len(), mf.right[0].len()), (2, 3));

    let carpet = ScrollSpec::parse(&[1, 1], &[3, 4], &[DIAG_SQ]).unwrap();
    let mf = matrix_form(&carpet).unwrap();
    assert_eq!(
        mf.integer_coeff().unwrap(),
        vec![vec![0, 0, 1], vec![0, -2, 0], vec![1, 0, 0]]
    );
    assert_eq!((mf.left.len(), mf.left[0].len()), (2, 3));
    assert_eq!((mf.right.len(), mf.right[0].len()), (3, 3));
}

#[test]
fn composition_entries_are_mixed_minors() {
    // 2 x 5 matrix [z1_0 z1_1 | z2_0 z2_1 z2_2 ; z1_1 z1_2 | z2_1 z2_2 z2_3]
    let spec = ScrollSpec::parse(&[1, 1], &[2, 3], &[DIAG]).unwrap();
    let t = spec.target();
    let z =
        |i: usize, b: u32, j: u32| Polynomial::<Rational>::var(t, t.z_var(i, &[b - j, j]).unwrap());
    let mut mixed = Vec::new();
    for i in 0..2u32 {
        for j in 0..3u32 {
            let m = &(&z(0, 2, i) * &z(1, 3, j + 1)) - &(&z(0, 2, i + 1) * &z(1, 3, j));
            mixed.push(m.to_string());
        }
    }
    let mf = matrix_form(&spec).unwrap();
    let mut entries: Vec<String> = mf
        .composition
        .iter()
        .flatten()
        .map(|e| e.to_string())
        .collect();
    entries.sort();
    mixed.sort();
    assert_eq!(entries, mixed);
}

#[test]
fn matrix_form_shape_errors() {
    let three = ScrollSpec::parse(&[1, 1, 1], &[1, 1, 1], &["x1_0*x2_1*x3_0"]).unwrap();
    assert!(matches!(matrix_form(&three), Err(Error::Shape(_))));
    let two = ScrollSpec::parse(&[1, 1], &[2, 2], &[DIAG, DIAG_SQ]).unwrap();
    assert!(matches!(matrix_form(&two), Err(Error::Shape(_))));
    let big = ScrollSpec::parse(&[1, 1], &[1, 1], &[DIAG_SQ]).unwrap();
    assert!(matches!(matrix_form(&big), Err(Error::Shape(_))));
    let p2 = ScrollSpec::parse(&[2, 1], &[1, 1], &["x1_0*x2_0"]).unwrap();
    assert!(matches!(matrix_form(&p2), Err(Error::Shape(_))));
}

#[test]
fn matrix_form_matches_construction() {
    let spec = ScrollSpec::parse(&[1, 1], &[2, 3], &[DIAG]).unwrap();
    let mf = matrix_form(&spec).unwrap();
    assert!(ideal_equal(&mf.ideal(), &scroll_ideal(&spec), &grevlex(), &opts()).unwrap());
    let carpet = ScrollSpec::parse(&[1, 1], &[3, 2], &[DIAG_SQ]).unwrap();
    let mf = matrix_form(&carpet).unwrap();
    assert!(ideal_equal(&mf.ideal(), &scroll_ideal(&carpet), &grevlex(), &opts()).unwrap());
}

#[test]
fn projections() {
    let scroll = ScrollSpec::parse(&[1, 1], &[2, 3], &[DIAG]).unwrap();
    let p = project_scroll(&scroll, &[0], &opts()).unwrap();
    assert!(p.equal);
    let conic = Ideal::new(
        &p.ring,
        vec![parse_polynomial(&p.ring, "z1_[2,0]*z1_[0,2] - z1_[1,1]^2").unwrap()],
    )
    .unwrap();
    assert!(ideal_equal(&p.via_source, &conic, &grevlex(), &opts()).unwrap());

    let all = project_scroll(&scroll, &[1, 0], &opts()).unwrap();
    assert!(all.equal);
    assert!(ideal_equal(&all.via_source, &scroll_ideal(&scroll), &grevlex(), &opts()).unwrap());

    let carpet = ScrollSpec::parse(&[1, 1], &[2, 2], &[DIAG_SQ]).unwrap();
    let p = project_scroll(&carpet, &[1], &opts()).unwrap();
    assert!(p.equal);
    let conic = Ideal::new(
        &p.ring,
        vec![parse_polynomial(&p.ring, "z1_[2,0]*z1_[0,2] - z1_[1,1]^2").unwrap()],
    )
    .unwrap();
    assert!(ideal_equal(&p.via_projection, &conic, &grevlex(), &opts()).unwrap());

    assert!(project_scroll(&carpet, &[], &opts()).is_err());
    assert!(project_scroll(&carpet, &[2], &opts()).is_err());
}

#[test]
fn initial_ideal_of_carpet_is_not_squarefree_free_of_linear_forms() {
    let spec = ScrollSpec::parse(&[1, 1], &[2, 2], &[DIAG_SQ]).unwrap();
    let init: MonomialIdeal = scroll_ideal(&spec)
        .groebner_basis(&grevlex(), &opts())
        .unwrap()
        .initial_ideal();
    assert!(init.gens().iter().all(|m| m.degree() == 2));
    assert_eq!(init.krull_dimension().unwrap(), 3);
}
