//! Named constructors for standard correspondences.
//!
//! Generic matrices put block `j` in column `j`: entry `(r, j)` is
//! `x{j+1}_r`. Random forms draw coefficients from [`Lcg`], so seeded
//! examples are identical on every platform.

use std::sync::Arc;

use itertools::Itertools;
use serde::Deserialize;
use serde_json::Value;

use crate::chow::{complete_intersection_class, diagonal_class, ChowClass};
use crate::error::{Error, Result};
use crate::field::Rational;
use crate::poly::Polynomial;
use crate::ring::{monomials_of_multidegree, Multidegree, Ring};
use crate::scroll::{ScrollSpec, SpecMeta};

/// Names accepted by [`Gallery::from_name`].
pub const NAMES: [&str; 9] = [
    "diagonal",
    "thick-diagonal",
    "divisor",
    "determinantal",
    "adjacent-minors",
    "cy-trilinear",
    "fat-point",
    "small-scheme",
    "rope",
];

/// 64-bit linear congruential generator:
/// `state <- state * 6364136223846793005 + 1442695040888963407 (mod 2^64)`.
/// A coefficient is `((state >> 33) mod 7) - 3`, read after each step.
#[derive(Clone, Debug)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.state
    }

    /// Uniform-ish integer in `-3..=3`.
    pub fn coefficient(&mut self) -> i64 {
        ((self.next_u64() >> 33) % 7) as i64 - 3
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Gallery {
    /// Small diagonal of `(P^a)^n`: 2-minors of the `(a+1) x n` matrix.
    Diagonal { a: u32, n: usize },
    /// `f^k` for the diagonal form `f` of `P^1 x P^1`.
    ThickDiagonal { k: u32 },
    /// A random form of multidegree `d` on `P^a`.
    Divisor { a: Vec<u32>, d: Vec<u32>, seed: u64 },
    /// `r`-minors of the generic `n x n` matrix in `(P^{n-1})^n`.
    Determinantal { n: usize, r: usize },
    /// Adjacent `m`-minors of the generic `m x n` matrix in `(P^{m-1})^n`.
    AdjacentMinors { m: usize, n: usize },
    /// Two random trilinear forms on `(P^1)^3`.
    CyTrilinear { seed: u64 },
    /// `(x1_0^m, x1_1, x2_0)` on `P^1 x P^1`.
    FatPoint { m: u32 },
    /// `Δ_1 x {p_2}  ∪  {p_1} x Δ_2` in `(P^1)^{n1} x (P^1)^{n2}`.
    SmallScheme { n1: usize, n2: usize },
    /// The diagonal of `(P^1)^n` cut with the `d`-th thickening of a point.
    Rope { d: u32, n: usize },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AN {
    a: u32,
    n: usize,
}
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct K {
    k: u32,
}
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ADSeed {
    a: Vec<u32>,
    d: Vec<u32>,
    seed: u64,
}
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct NR {
    n: usize,
    r: usize,
}
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MN {
    m: usize,
    n: usize,
}
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Seed {
    seed: u64,
}
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct M {
    m: u32,
}
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct N1N2 {
    n1: usize,
    n2: usize,
}
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DN {
    d: u32,
    n: usize,
}

fn params<T: for<'de> Deserialize<'de>>(name: &str, v: &Value) -> Result<T> {
    let v = if v.is_null() {
        Value::Object(Default::default())
    } else {
        v.clone()
    };
    serde_json::from_value(v).map_err(|e| Error::InvalidParams(format!("{name}: {e}")))
}

fn invalid(msg: String) -> Error {
    Error::InvalidParams(msg)
}

impl Gallery {
    /// Look up a constructor; `params` is a JSON object of named integers.
    pub fn from_name(name: &str, p: &Value) -> Result<Self> {
        let g = match name {
            "diagonal" => {
                let AN { a, n } = params(name, p)?;
                Gallery::Diagonal { a, n }
            }
            "thick-diagonal" => {
                let K { k } = params(name, p)?;
                Gallery::ThickDiagonal { k }
            }
            "divisor" => {
                let ADSeed { a, d, seed } = params(name, p)?;
                Gallery::Divisor { a, d, seed }
            }
            "determinantal" => {
                let NR { n, r } = params(name, p)?;
                Gallery::Determinantal { n, r }
            }
            "adjacent-minors" => {
                let MN { m, n } = params(name, p)?;
                Gallery::AdjacentMinors { m, n }
            }
            "cy-trilinear" => {
                let Seed { seed } = params(name, p)?;
                Gallery::CyTrilinear { seed }
            }
            "fat-point" => {
                let M { m } = params(name, p)?;
                Gallery::FatPoint { m }
            }
            "small-scheme" => {
                let N1N2 { n1, n2 } = params(name, p)?;
                Gallery::SmallScheme { n1, n2 }
            }
            "rope" => {
                let DN { d, n } = params(name, p)?;
                Gallery::Rope { d, n }
            }
            other => return Err(Error::UnknownGallery(other.to_string())),
        };
        g.validate()?;
        Ok(g)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Gallery::Diagonal { .. } => "diagonal",
            Gallery::ThickDiagonal { .. } => "thick-diagonal",
            Gallery::Divisor { .. } => "divisor",
            Gallery::Determinantal { .. } => "determinantal",
            Gallery::AdjacentMinors { .. } => "adjacent-minors",
            Gallery::CyTrilinear { .. } => "cy-trilinear",
            Gallery::FatPoint { .. } => "fat-point",
            Gallery::SmallScheme { .. } => "small-scheme",
            Gallery::Rope { .. } => "rope",
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            Gallery::Diagonal { a, n } if a == 0 || n < 2 => Err(invalid(format!(
                "diagonal needs a >= 1 and n >= 2, got a = {a}, n = {n}"
            ))),
            Gallery::ThickDiagonal { k: 0 } => Err(invalid("thick-diagonal needs k >= 1".into())),
            Gallery::Divisor { ref a, ref d, .. } => {
                if a.is_empty() || a.len() != d.len() {
                    Err(invalid(
                        "divisor needs nonempty a and d of equal length".into(),
                    ))
                } else if a.contains(&0) {
                    Err(invalid("divisor needs every a_i >= 1".into()))
                } else if d.iter().all(|&x| x == 0) {
                    Err(invalid("divisor needs a nonzero degree".into()))
                } else {
                    Ok(())
                }
            }
            Gallery::Determinantal { n, r } if r < 2 || r > n => Err(invalid(format!(
                "determinantal needs 2 <= r <= n, got n = {n}, r = {r}"
            ))),
            Gallery::AdjacentMinors { m, n } if m < 2 || m > n => Err(invalid(format!(
                "adjacent-minors needs 2 <= m <= n, got m = {m}, n = {n}"
            ))),
            Gallery::FatPoint { m: 0 } => Err(invalid("fat-point needs m >= 1".into())),
            Gallery::SmallScheme { n1, n2 } if n1 == 0 || n2 == 0 => {
                Err(invalid("small-scheme needs n1, n2 >= 1".into()))
            }
            Gallery::Rope { d, n } if d == 0 || n < 2 => Err(invalid(format!(
                "rope needs d >= 1 and n >= 2, got d = {d}, n = {n}"
            ))),
            _ => Ok(()),
        }
    }

    /// Projective factors of the ambient product.
    pub fn a(&self) -> Vec<u32> {
        match self {
            Gallery::Diagonal { a, n } => vec![*a; *n],
            Gallery::ThickDiagonal { .. } | Gallery::FatPoint { .. } => vec![1, 1],
            Gallery::Divisor { a, .. } => a.clone(),
            Gallery::Determinantal { n, .. } => vec![*n as u32 - 1; *n],
            Gallery::AdjacentMinors { m, n } => vec![*m as u32 - 1; *n],
            Gallery::CyTrilinear { .. } => vec![1, 1, 1],
            Gallery::SmallScheme { n1, n2 } => vec![1; n1 + n2],
            Gallery::Rope { n, .. } => vec![1; *n],
        }
    }

    /// Build the spec for the scroll with weights `b`.
    pub fn build(&self, b: &[u32]) -> Result<ScrollSpec> {
        self.validate()?;
        let a = self.a();
        if b.len() != a.len() {
            return Err(Error::InvalidSpec(format!(
                "{} lives in {} factors but b has {} entries",
                self.name(),
                a.len(),
                b.len()
            )));
        }
        let ring = Ring::source(&a)?;
        let md = |v: &[u32]| Multidegree(v.to_vec());
        let (gens, meta) = match self {
            Gallery::Diagonal { a: ai, n } => (
                minors(&ring, &(0..=*ai).collect_vec(), &(0..*n).collect_vec(), 2),
                SpecMeta {
                    complete_intersection: (*ai == 1 && *n == 2).then(|| vec![md(&[1, 1])]),
                    relevant_class: Some(diagonal_class(*ai, *n)),
                    relevant: Some(true),
                    note: Some(format!("2-minors of the generic {}x{n} matrix", ai + 1)),
                    ..Default::default()
                },
            ),
            Gallery::ThickDiagonal { k } => {
                let f = minors(&ring, &[0, 1], &[0, 1], 2).remove(0);
                let degs = vec![md(&[*k, *k])];
                (
                    vec![f.pow(*k)],
                    SpecMeta {
                        relevant_class: Some(complete_intersection_class(&degs, &a)),
                        complete_intersection: Some(degs),
                        relevant: Some(true),
                        note: Some(format!("power {k} of the diagonal form")),
                        ..Default::default()
                    },
                )
            }
            Gallery::Divisor { d, seed, .. } => {
                let mut rng = Lcg::new(*seed);
                let f = random_form(&ring, &md(d), &mut rng);
                let degs = vec![md(d)];
                (
                    vec![f],
                    SpecMeta {
                        relevant_class: Some(complete_intersection_class(&degs, &a)),
                        complete_intersection: Some(degs),
                        relevant: Some(true),
                        note: Some(format!("random form of degree {d:?}, seed {seed}")),
                        ..Default::default()
                    },
                )
            }
            Gallery::Determinantal { n, r } => (
                minors(
                    &ring,
                    &(0..*n as u32).collect_vec(),
                    &(0..*n).collect_vec(),
                    *r,
                ),
                SpecMeta {
                    complete_intersection: (r == n).then(|| vec![md(&vec![1; *n])]),
                    relevant: Some(true),
                    a_invariant: Some(vec![1 - *r as i64; *n]),
                    note: Some(format!("{r}-minors of the generic {n}x{n} matrix")),
                    ..Default::default()
                },
            ),
            Gallery::AdjacentMinors { m, n } => {
                let rows = (0..*m as u32).collect_vec();
                let mut gens = Vec::new();
                let mut degs = Vec::new();
                for j in 0..=n - m {
                    let cols = (j..j + m).collect_vec();
                    gens.extend(minors(&ring, &rows, &cols, *m));
                    let mut d = vec![0; *n];
                    for &c in &cols {
                        d[c] = 1;
                    }
                    degs.push(Multidegree(d));
                }
                // for m = 2 the middle columns vanish on extra components
                let relevant = if *m == 2 { Some(*n == 2) } else { None };
                (
                    gens,
                    SpecMeta {
                        relevant_class: (relevant == Some(true))
                            .then(|| complete_intersection_class(&degs, &a)),
                        complete_intersection: Some(degs),
                        relevant,
                        note: Some(format!("adjacent {m}-minors of the generic {m}x{n} matrix")),
                        ..Default::default()
                    },
                )
            }
            Gallery::CyTrilinear { seed } => {
                let mut rng = Lcg::new(*seed);
                let d = md(&[1, 1, 1]);
                let f = random_form(&ring, &d, &mut rng);
                let mut g = random_form(&ring, &d, &mut rng);
                while proportional(&f, &g) {
                    g = random_form(&ring, &d, &mut rng);
                }
                let degs = vec![d.clone(), d];
                (
                    vec![f, g],
                    SpecMeta {
                        relevant_class: Some(complete_intersection_class(&degs, &a)),
                        complete_intersection: Some(degs),
                        relevant: Some(false),
                        note: Some(format!("two random trilinear forms, seed {seed}")),
                        ..Default::default()
                    },
                )
            }
            Gallery::FatPoint { m } => {
                let x = |i: usize| Polynomial::var(&ring, i);
                let x10 = ring.x_var(0, 0).expect("x1_0");
                let x11 = ring.x_var(0, 1).expect("x1_1");
                let x20 = ring.x_var(1, 0).expect("x2_0");
                (
                    vec![x(x10).pow(*m), x(x11), x(x20)],
                    SpecMeta {
                        complete_intersection: Some(vec![md(&[*m, 0]), md(&[1, 0]), md(&[0, 1])]),
                        relevant: Some(false),
                        note: Some(format!(
                            "point of P^1 x P^1 thickened to order {m} in the first factor"
                        )),
                        ..Default::default()
                    },
                )
            }
            Gallery::SmallScheme { n1, n2 } => {
                let g1 = (0..*n1).collect_vec();
                let g2 = (*n1..n1 + n2).collect_vec();
                let mut gens = minors(&ring, &[0, 1], &g1, 2);
                gens.extend(minors(&ring, &[0, 1], &g2, 2));
                for &i in &g1 {
                    for &j in &g2 {
                        let xi = Polynomial::var(&ring, ring.x_var(i, 1).expect("x"));
                        let xj = Polynomial::var(&ring, ring.x_var(j, 1).expect("x"));
                        gens.push(&xi * &xj);
                    }
                }
                let class = extend_class(&diagonal_class(1, *n1), *n2, false)
                    .add(&extend_class(&diagonal_class(1, *n2), *n1, true))?;
                (
                    gens,
                    SpecMeta {
                        relevant_class: Some(class),
                        relevant: Some(true),
                        note: Some(format!(
                            "union of two diagonals of (P^1)^{n1} and (P^1)^{n2}, each times the point [1:0]"
                        )),
                        ..Default::default()
                    },
                )
            }
            Gallery::Rope { d, n } => {
                let blocks = (0..*n).collect_vec();
                let mut gens = minors(&ring, &[0, 1], &blocks, 2);
                let lin: Vec<Polynomial> = blocks
                    .iter()
                    .map(|&i| Polynomial::var(&ring, ring.x_var(i, 1).expect("x")))
                    .collect();
                for combo in blocks.iter().combinations_with_replacement(*d as usize) {
                    gens.push(
                        combo
                            .iter()
                            .fold(Polynomial::one(&ring), |acc, &&i| &acc * &lin[i]),
                    );
                }
                (
                    gens,
                    SpecMeta {
                        relevant_class: Some(ChowClass::monomial(&a, vec![1; *n], *d as i64)),
                        relevant: Some(true),
                        note: Some(format!(
                            "diagonal of (P^1)^{n} cut with the order-{d} neighbourhood of [1:0]"
                        )),
                        ..Default::default()
                    },
                )
            }
        };
        let spec = ScrollSpec::new(&a, b, gens)?;
        Ok(spec.with_name(self.label()).with_meta(meta))
    }

    /// Display label such as `diagonal(1,2)`.
    pub fn label(&self) -> String {
        let args = match self {
            Gallery::Diagonal { a, n } => format!("{a},{n}"),
            Gallery::ThickDiagonal { k } => k.to_string(),
            Gallery::Divisor { a, d, seed } => format!("{a:?},{d:?};{seed}"),
            Gallery::Determinantal { n, r } => format!("{n},{r}"),
            Gallery::AdjacentMinors { m, n } => format!("{m},{n}"),
            Gallery::CyTrilinear { seed } => seed.to_string(),
            Gallery::FatPoint { m } => m.to_string(),
            Gallery::SmallScheme { n1, n2 } => format!("{n1},{n2}"),
            Gallery::Rope { d, n } => format!("{d},{n}"),
        };
        format!("{}({args})", self.name())
    }
}

/// `gallery(name, params)` with the scroll weights `b`.
pub fn gallery(name: &str, params: &Value, b: &[u32]) -> Result<ScrollSpec> {
    Gallery::from_name(name, params)?.build(b)
}

/// All `r`-minors using the given rows and block columns.
fn minors(ring: &Arc<Ring>, rows: &[u32], cols: &[usize], r: usize) -> Vec<Polynomial> {
    let mut out = Vec::new();
    for rs in rows.iter().copied().combinations(r) {
        for cs in cols.iter().copied().combinations(r) {
            out.push(det(ring, &rs, &cs));
        }
    }
    out
}

/// Laplace expansion along the first row.
fn det(ring: &Arc<Ring>, rows: &[u32], cols: &[usize]) -> Polynomial {
    let entry = |r: u32, c: usize| Polynomial::var(ring, ring.x_var(c, r).expect("matrix entry"));
    if rows.len() == 1 {
        return entry(rows[0], cols[0]);
    }
    let mut total = Polynomial::zero(ring);
    for (k, &c) in cols.iter().enumerate() {
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = &entry(rows[0], c) * &det(ring, &rows[1..], &rest);
        total = if k % 2 == 0 {
            &total + &term
        } else {
            &total - &term
        };
    }
    total
}

/// Draw coefficients in monomial order until the form is nonzero.
fn random_form(ring: &Arc<Ring>, d: &Multidegree, rng: &mut Lcg) -> Polynomial {
    let monos = monomials_of_multidegree(ring, d);
    loop {
        let f = Polynomial::from_terms(
            ring,
            monos
                .iter()
                .map(|m| (m.clone(), Rational::from_integer(rng.coefficient().into()))),
        );
        if !f.is_zero() {
            return f;
        }
    }
}

fn proportional(f: &Polynomial, g: &Polynomial) -> bool {
    if f.len() != g.len() {
        return false;
    }
    let (m0, c0) = &f.terms()[0];
    let r = g.coefficient(m0) / c0;
    f.terms().iter().all(|(m, c)| g.coefficient(m) == c * &r)
}

/// Tensor a class with the point class of `extra` further `P^1` factors,
/// placed after (`before = false`) or before the existing ones.
fn extend_class(c: &ChowClass, extra: usize, before: bool) -> ChowClass {
    let n = c.ambient().len() + extra;
    let amb = vec![1; n];
    let mut out = ChowClass::zero(&amb);
    for (beta, r) in c.terms() {
        let pad = vec![1; extra];
        let full = if before {
            [pad, beta.to_vec()].concat()
        } else {
            [beta.to_vec(), pad].concat()
        };
        out = out
            .add(&ChowClass::monomial(&amb, full, r))
            .expect("same ambient");
    }
    out
}
