//! Acceptance criteria. Each prints one PASS/FAIL line; the process exits
//! nonzero when any criterion fails.

mod common;

use std::process::{Command as Proc, ExitCode};

use serde_json::json;

use scrollforge::chow::{degree_from_class, diagonal_class, divisor_degree};
use scrollforge::gallery::gallery;
use scrollforge::groebner::ideal_equal;
use scrollforge::hilbert::{
    gorenstein_ci_check, gorenstein_from_a_invariant, ScrollHilbert, DEFAULT_S_MAX,
};
use scrollforge::report::{Command, Session};
use scrollforge::scroll::{kernel_ideal, matrix_form, project_scroll, scroll_ideal};
use scrollforge::{GroebnerOptions, MonomialOrder, Multidegree, ScrollSpec};

type Outcome = Result<(bool, String), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn opts() -> GroebnerOptions {
    GroebnerOptions::default()
}

fn grevlex() -> MonomialOrder {
    MonomialOrder::grevlex()
}

fn spec(name: &str, params: serde_json::Value, b: &[u32]) -> Result<ScrollSpec, String> {
    gallery(name, &params, b).map_err(|e| e.to_string())
}

/// (projective dimension, degree) from the fitted Hilbert polynomial.
fn hilbert_dim_degree(s: &ScrollSpec) -> Result<(Option<u32>, u64), String> {
    let h = ScrollHilbert::new(s, &grevlex(), &opts()).map_err(|e| e.to_string())?;
    let rep = h.report(DEFAULT_S_MAX).map_err(|e| e.to_string())?;
    Ok((rep.fit.dimension, rep.fit.degree))
}

fn chow_degree(s: &ScrollSpec) -> Result<i64, String> {
    let c = s.meta().relevant_class.clone().ok_or("no class")?;
    let codim: u32 = c.terms().next().map_or(0, |(beta, _)| beta.iter().sum());
    Ok(degree_from_class(
        &c,
        s.b(),
        s.a().iter().sum::<u32>() - codim,
    ))
}

fn c1_rational_normal_scroll() -> Outcome {
    let s = spec("diagonal", json!({"a": 1, "n": 2}), &[2, 3])?;
    let gb = scroll_ideal(&s)
        .groebner_basis(&grevlex(), &opts())
        .map_err(|e| e.to_string())?;
    let quadrics = gb.len() == 10 && gb.basis().iter().all(|g| g.total_degree() == Some(2));
    let squarefree = gb.initial_ideal().is_squarefree();
    let chow = chow_degree(&s)?;
    let (dim, deg) = hilbert_dim_degree(&s)?;
    let mf = matrix_form(&s).map_err(|e| e.to_string())?;
    let same = ideal_equal(&mf.ideal(), &scroll_ideal(&s), &grevlex(), &opts())
        .map_err(|e| e.to_string())?;
    let ok = quadrics && squarefree && chow == 5 && deg == 5 && dim == Some(2) && same;
    Ok((
        ok,
        format!(
            "gb size {} all quadrics {quadrics}, squarefree initial {squarefree}, chow {chow}, hilbert {deg}, dim {dim:?}, matrix form equal {same}",
            gb.len()
        ),
    ))
}

fn c2_k3_carpet() -> Outcome {
    let s = spec("thick-diagonal", json!({"k": 2}), &[2, 2])?;
    let chow = chow_degree(&s)?;
    let (dim, deg) = hilbert_dim_degree(&s)?;
    let v = gorenstein_ci_check(s.a(), s.b(), &s.gen_degrees());
    let h = ScrollHilbert::new(&s, &grevlex(), &opts()).map_err(|e| e.to_string())?;
    let mut sums_equal = true;
    for t in 0..=5 {
        sums_equal &=
            h.sum(t).map_err(|e| e.to_string())? == h.direct(t).map_err(|e| e.to_string())?;
    }
    let ok = chow == 8 && deg == 8 && dim == Some(2) && v.calabi_yau && sums_equal;
    Ok((
        ok,
        format!("chow {chow}, hilbert {deg}, dim {dim:?}, calabi-yau {}, sum = direct for s <= 5 {sums_equal}", v.calabi_yau),
    ))
}

fn c3_quintic() -> Outcome {
    let s = spec(
        "divisor",
        json!({"a": [2, 1], "d": [3, 2], "seed": 2024}),
        &[1, 1],
    )?;
    let j = scroll_ideal(&s);
    let gb = j
        .groebner_basis(&grevlex(), &opts())
        .map_err(|e| e.to_string())?;
    let principal = gb.len() == 1 && gb.basis()[0].total_degree() == Some(5);
    let nvars = s.target().nvars();
    let (b1, b2) = (1i64, 1i64);
    let formula = 3 * b1 * b2 + 2 * b1 * b1;
    let class = divisor_degree(&Multidegree(vec![3, 2]), s.a(), s.b());
    let (_, deg) = hilbert_dim_degree(&s)?;
    let cy = gorenstein_ci_check(s.a(), s.b(), &s.gen_degrees()).calabi_yau;
    let ok = principal && nvars == 5 && deg == 5 && formula == 5 && class == 5 && cy;
    Ok((
        ok,
        format!("principal quintic {principal} in {nvars} variables, hilbert {deg}, formula {formula}, chow {class}, calabi-yau {cy}"),
    ))
}

fn c4_trilinear() -> Outcome {
    let s = spec("cy-trilinear", json!({"seed": 11}), &[1, 1, 1])?;
    let (dim, deg) = hilbert_dim_degree(&s)?;
    let b = s.b();
    let formula = (b[0] * b[1] + b[0] * b[2] + b[1] * b[2]) + 2 * (b[0] + b[1] + b[2]);
    let cy = gorenstein_ci_check(s.a(), s.b(), &s.gen_degrees()).calabi_yau;
    let s112 = s.with_b(&[1, 1, 2]).map_err(|e| e.to_string())?;
    let (_, deg112) = hilbert_dim_degree(&s112)?;
    let ok = deg == 9 && formula == 9 && dim == Some(3) && cy && deg112 == 16;
    Ok((
        ok,
        format!("b=(1,1,1): hilbert {deg}, formula {formula}, dim {dim:?}, calabi-yau {cy}; b=(1,1,2): hilbert {deg112}, expected 16"),
    ))
}

fn c5_fat_point() -> Outcome {
    let d2 = hilbert_dim_degree(&spec("fat-point", json!({"m": 3}), &[2, 1])?)?;
    let d3 = hilbert_dim_degree(&spec("fat-point", json!({"m": 3}), &[3, 1])?)?;
    let ok = d2 == (Some(0), 2) && d3 == (Some(0), 1);
    Ok((
        ok,
        format!("m=3 b1=2: stabilizes at {}; m=3 b1=3: {}", d2.1, d3.1),
    ))
}

fn c6_kernel_oracle() -> Outcome {
    let specs = common::gallery_specs();
    let mut bad = Vec::new();
    let mut checked = 0;
    for (name, l) in &specs {
        if l.spec.target().nvars() > 12 {
            continue;
        }
        checked += 1;
        let k = kernel_ideal(&l.spec, &opts()).map_err(|e| e.to_string())?;
        if !ideal_equal(&k, &scroll_ideal(&l.spec), &grevlex(), &opts())
            .map_err(|e| e.to_string())?
        {
            bad.push(name.clone());
        }
    }
    Ok((
        checked == 9 && bad.is_empty(),
        format!("{checked} specs checked, mismatches {bad:?}"),
    ))
}

fn c7_projections() -> Outcome {
    let cases = [
        (
            "sigma(2,3)",
            spec("diagonal", json!({"a": 1, "n": 2}), &[2, 3])?,
        ),
        ("K(2,2)", spec("thick-diagonal", json!({"k": 2}), &[2, 2])?),
        ("segre", spec("diagonal", json!({"a": 1, "n": 2}), &[1, 1])?),
    ];
    let mut bad = Vec::new();
    let mut count = 0;
    for (name, s) in &cases {
        let n = s.nblocks();
        let mut subsets: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
        subsets.extend((0..n).map(|i| (0..n).filter(|&j| j != i).collect()));
        for l in subsets {
            count += 1;
            let p = project_scroll(s, &l, &opts()).map_err(|e| e.to_string())?;
            if !p.equal {
                bad.push(format!("{name} {l:?}"));
            }
        }
    }
    Ok((
        bad.is_empty(),
        format!("{count} projections, unequal {bad:?}"),
    ))
}

fn c8_diagonal_p2() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for (b, expect) in [([1u32, 1u32], 3u64), ([1, 2], 7)] {
        let s = spec("diagonal", json!({"a": 2, "n": 2}), &b)?;
        let (_, deg) = hilbert_dim_degree(&s)?;
        let formula = (b[0] * b[0] + b[0] * b[1] + b[1] * b[1]) as u64;
        let chow = degree_from_class(&diagonal_class(2, 2), &b, 2) as u64;
        ok &= deg == expect && formula == expect && chow == expect;
        parts.push(format!(
            "b={b:?}: hilbert {deg}, formula {formula}, chow {chow}"
        ));
    }
    Ok((ok, parts.join("; ")))
}

fn c9_gorenstein() -> Outcome {
    let d = [Multidegree(vec![1, 1])];
    let s11 = gorenstein_ci_check(&[1, 1], &[1, 1], &d).gorenstein;
    let s23 = gorenstein_ci_check(&[1, 1], &[2, 3], &d).gorenstein;
    let det = spec("determinantal", json!({"n": 3, "r": 2}), &[1, 1, 1])?;
    let a_inv = det.meta().a_invariant.clone().ok_or("no a-invariant")?;
    let det_g = gorenstein_from_a_invariant(&a_inv, det.b()).gorenstein;
    let ok = s11 && !s23 && det_g && a_inv == vec![-1, -1, -1];
    Ok((
        ok,
        format!("sigma(1,1) gorenstein {s11}, sigma(2,3) gorenstein {s23}, determinantal(3,2) a-invariant {a_inv:?} gorenstein {det_g}"),
    ))
}

fn c10_determinism() -> Outcome {
    let run_all = || -> Result<Vec<u8>, String> {
        let mut out = Vec::new();
        for f in common::gallery_files() {
            for extra in [None, Some("--json")] {
                let mut cmd = Proc::new(env!("CARGO_BIN_EXE_scrollforge"));
                cmd.arg("verify-all").arg("--spec").arg(&f);
                if let Some(x) = extra {
                    cmd.arg(x);
                }
                let o = cmd.output().map_err(|e| e.to_string())?;
                if !o.status.success() {
                    return Err(format!("{} exited with {}", f.display(), o.status));
                }
                out.extend(o.stdout);
            }
        }
        Ok(out)
    };
    let first = run_all()?;
    let second = run_all()?;
    // the library path must agree with the binary as well
    let mut in_process = Vec::new();
    for (_, l) in common::gallery_specs() {
        let r = Session::new(l)
            .run(&Command::VerifyAll)
            .map_err(|e| e.to_string())?;
        in_process.push(r.to_text());
    }
    let mut again = Vec::new();
    for (_, l) in common::gallery_specs() {
        again.push(
            Session::new(l)
                .run(&Command::VerifyAll)
                .map_err(|e| e.to_string())?
                .to_text(),
        );
    }
    let ok = first == second && !first.is_empty() && in_process == again;
    Ok((
        ok,
        format!(
            "{} bytes per run, identical {}",
            first.len(),
            first == second
        ),
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "rational normal scroll sigma(2,3)",
            c1_rational_normal_scroll,
        ),
        ("K3 carpet K(2,2)", c2_k3_carpet),
        ("Calabi-Yau (3,2) divisor on P2 x P1", c3_quintic),
        ("trilinear complete intersection", c4_trilinear),
        ("fat point degree", c5_fat_point),
        ("kernel oracle on shipped gallery", c6_kernel_oracle),
        ("projection identities", c7_projections),
        ("diagonal of P2 x P2", c8_diagonal_p2),
        ("Gorenstein boundary", c9_gorenstein),
        ("determinism of verify-all", c10_determinism),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let (ok, detail) = match f() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "{} {:>2} {name}: {detail} ({:.2}s)",
            if ok { "PASS" } else { "FAIL" },
            k + 1,
            start.elapsed().as_secs_f64()
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
