//! From `(a, b, I)` to the defining ideal of the correspondence scroll.
//!
//! The scroll ideal is the sum of the Veronese relations of each block and
//! the pullbacks of `g_j * m` for every generator `g_j` and every monomial
//! `m` of the complementary degree `c_j`, the smallest bump that lands
//! `deg g_j` in the lattice `b_1 Z x ... x b_n Z`. The kernel of
//! `z_{i,α} -> x_i^α` modulo `I`, computed by elimination, is the oracle.

mod matrix;
mod project;

pub use matrix::{matrix_form, MatrixForm};
pub use project::{project_scroll, Projection};

use std::sync::Arc;

use crate::chow::ChowClass;
use crate::error::{Error, Result};
use crate::field::Rational;
use crate::groebner::{eliminate, GroebnerOptions, Ideal};
use crate::poly::Polynomial;
use crate::ring::{compositions, monomials_of_multidegree, Monomial, Multidegree, Ring, VarLabel};

/// Facts about a spec that the library takes on trust.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpecMeta {
    /// Degrees of the generators when they form a regular sequence.
    pub complete_intersection: Option<Vec<Multidegree>>,
    /// Chow class of the relevant part of `Z`.
    pub relevant_class: Option<ChowClass>,
    /// `Some(false)` when `I` has a component containing a block ideal.
    pub relevant: Option<bool>,
    /// a-invariant of `A/I` when it is Gorenstein.
    pub a_invariant: Option<Vec<i64>>,
    /// How the generators were produced.
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScrollSpec {
    name: Option<String>,
    source: Arc<Ring>,
    target: Arc<Ring>,
    gens: Vec<Polynomial>,
    meta: SpecMeta,
}

impl ScrollSpec {
    /// Validates shapes and multihomogeneity. Zero generators are dropped.
    pub fn new(a: &[u32], b: &[u32], gens: Vec<Polynomial>) -> Result<Self> {
        let invalid = |e: Error| match e {
            Error::InvalidRing(m) => Error::InvalidSpec(m),
            other => other,
        };
        let source = Ring::source(a).map_err(invalid)?;
        let target = Ring::target(a, b).map_err(invalid)?;
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if **g.ring() != *source {
                return Err(Error::RingMismatch);
            }
            if g.is_zero() {
                continue;
            }
            if !g.is_multihomogeneous() {
                return Err(Error::Inhomogeneous(g.to_string()));
            }
            kept.push(
                g.transfer(&source, &(0..source.nvars()).map(Some).collect::<Vec<_>>())
                    .expect("same ring"),
            );
        }
        Ok(ScrollSpec {
            name: None,
            source,
            target,
            gens: kept,
            meta: SpecMeta::default(),
        })
    }

    /// Build from generator strings in the source-ring grammar.
    pub fn parse(a: &[u32], b: &[u32], gens: &[impl AsRef<str>]) -> Result<Self> {
        let invalid = |e: Error| match e {
            Error::InvalidRing(m) => Error::InvalidSpec(m),
            other => other,
        };
        let source = Ring::source(a).map_err(invalid)?;
        let polys = gens
            .iter()
            .map(|g| crate::parse::parse_polynomial(&source, g.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(a, b, polys)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_meta(mut self, meta: SpecMeta) -> Self {
        self.meta = meta;
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn meta(&self) -> &SpecMeta {
        &self.meta
    }

    pub fn meta_mut(&mut self) -> &mut SpecMeta {
        &mut self.meta
    }

    pub fn a(&self) -> &[u32] {
        self.source.a()
    }

    pub fn b(&self) -> &[u32] {
        self.target.b().expect("target ring")
    }

    pub fn nblocks(&self) -> usize {
        self.source.nblocks()
    }

    pub fn source(&self) -> &Arc<Ring> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Ring> {
        &self.target
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn gen_degrees(&self) -> Vec<Multidegree> {
        self.gens
            .iter()
            .map(|g| g.homogeneous_degree().expect("validated"))
            .collect()
    }

    pub fn source_ideal(&self) -> Ideal {
        Ideal::new(&self.source, self.gens.clone()).expect("same ring")
    }

    /// Same `Z` with a different `b`.
    pub fn with_b(&self, b: &[u32]) -> Result<Self> {
        let mut spec = Self::new(self.a(), b, self.gens.clone())?;
        spec.name = self.name.clone();
        spec.meta = self.meta.clone();
        Ok(spec)
    }
}

/// `c` with `d_i + c_i = b_i ceil(d_i / b_i)`.
pub fn complement_degree(d: &Multidegree, b: &[u32]) -> Multidegree {
    assert_eq!(d.len(), b.len());
    Multidegree(
        d.as_slice()
            .iter()
            .zip(b)
            .map(|(&di, &bi)| di.div_ceil(bi) * bi - di)
            .collect(),
    )
}

/// Every binomial `z_α z_β - z_γ z_δ` with `α + β = γ + δ` and
/// `{α, β} != {γ, δ}`, for one block of the target ring.
pub fn veronese_ideal(target: &Arc<Ring>, block: usize) -> Vec<Polynomial> {
    let vars = target.z_vars_of_block(block);
    let alpha = |v: usize| match &target.vars()[v].label {
        VarLabel::Z(a) => a.clone(),
        _ => unreachable!("z variable"),
    };
    let mut pairs: Vec<(Vec<u32>, usize, usize)> = Vec::new();
    for (k, &p) in vars.iter().enumerate() {
        for &q in &vars[k..] {
            let sum: Vec<u32> = alpha(p).iter().zip(alpha(q)).map(|(x, y)| x + y).collect();
            pairs.push((sum, p, q));
        }
    }
    pairs.sort();
    let mut out = Vec::new();
    for group in pairs.chunk_by(|x, y| x.0 == y.0) {
        for (k, &(_, p1, q1)) in group.iter().enumerate() {
            for &(_, p2, q2) in &group[k + 1..] {
                let n = target.nvars();
                let m1 = Monomial::var(n, p1, 1).mul(&Monomial::var(n, q1, 1));
                let m2 = Monomial::var(n, p2, 1).mul(&Monomial::var(n, q2, 1));
                out.push(Polynomial::from_terms(
                    target,
                    [
                        (m1, Rational::from_integer(1.into())),
                        (m2, Rational::from_integer((-1).into())),
                    ],
                ));
            }
        }
    }
    out.sort_by(|f, g| {
        g.terms()[0]
            .0
            .cmp(&f.terms()[0].0)
            .then_with(|| g.terms()[1].0.cmp(&f.terms()[1].0))
    });
    out
}

/// Which degree-`b_i` divisor is split off first when lifting a monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Section {
    /// Lex-largest divisor (`x_{i,0}` first).
    #[default]
    GreedyLex,
    /// Lex-smallest divisor; used to check that the lift does not matter.
    MinLex,
}

fn split_block(exps: &mut [u32], b: u32, section: Section) -> Vec<u32> {
    let mut alpha = vec![0u32; exps.len()];
    let mut left = b;
    let order: Vec<usize> = match section {
        Section::GreedyLex => (0..exps.len()).collect(),
        Section::MinLex => (0..exps.len()).rev().collect(),
    };
    for j in order {
        let take = exps[j].min(left);
        alpha[j] = take;
        exps[j] -= take;
        left -= take;
    }
    debug_assert_eq!(left, 0);
    alpha
}

/// Lift a source form with multidegree in `b_1 Z x ... x b_n Z` to the
/// target ring, so that substituting `z_{i,α} -> x_i^α` gives it back.
pub fn pullback(target: &Arc<Ring>, f: &Polynomial, section: Section) -> Result<Polynomial> {
    let b = target
        .b()
        .ok_or_else(|| Error::InvalidRing("pullback needs a target ring".into()))?;
    let source = f.ring();
    if f.is_zero() {
        return Ok(Polynomial::zero(target));
    }
    let d = f.homogeneous_degree()?;
    if d.as_slice().iter().zip(b).any(|(&di, &bi)| di % bi != 0) {
        return Err(Error::NotInLattice {
            degree: d.0.clone(),
            b: b.to_vec(),
        });
    }
    let blocks: Vec<Vec<usize>> = (0..source.nblocks())
        .map(|i| source.x_vars_of_block(i))
        .collect();
    let mut terms = Vec::with_capacity(f.len());
    for (m, c) in f.terms() {
        let mut z = vec![0u32; target.nvars()];
        for (i, vars) in blocks.iter().enumerate() {
            let mut exps: Vec<u32> = vars.iter().map(|&v| m.exponents()[v]).collect();
            for _ in 0..d.0[i] / b[i] {
                let alpha = split_block(&mut exps, b[i], section);
                z[target.z_var(i, &alpha).expect("z variable exists")] += 1;
            }
        }
        terms.push((Monomial::from_exponents(z), c.clone()));
    }
    Ok(Polynomial::from_terms(target, terms))
}

/// `z_{i,α} -> x_i^α`.
pub fn substitute(source: &Arc<Ring>, p: &Polynomial) -> Polynomial {
    let target = p.ring();
    let images: Vec<Monomial> = target
        .vars()
        .iter()
        .map(|v| match &v.label {
            VarLabel::Z(alpha) => {
                let mut e = vec![0u32; source.nvars()];
                for (j, &k) in alpha.iter().enumerate() {
                    e[source.x_var(v.block, j as u32).expect("x variable")] = k;
                }
                Monomial::from_exponents(e)
            }
            _ => panic!("substitute expects a target-ring polynomial"),
        })
        .collect();
    let terms = p.terms().iter().map(|(m, c)| {
        let mut x = Monomial::one(source.nvars());
        for (v, &k) in m.exponents().iter().enumerate() {
            if k > 0 {
                x = x.mul(&images[v].pow(k));
            }
        }
        (x, c.clone())
    });
    Polynomial::from_terms(source, terms)
}

pub fn scroll_ideal(spec: &ScrollSpec) -> Ideal {
    scroll_ideal_with(spec, Section::GreedyLex)
}

pub fn scroll_ideal_with(spec: &ScrollSpec, section: Section) -> Ideal {
    let target = spec.target();
    let mut gens = Vec::new();
    for i in 0..spec.nblocks() {
        gens.extend(veronese_ideal(target, i));
    }
    for g in spec.gens() {
        let d = g.homogeneous_degree().expect("validated");
        let c = complement_degree(&d, spec.b());
        for m in monomials_of_multidegree(spec.source(), &c) {
            let one = Rational::from_integer(1.into());
            let lifted =
                pullback(target, &g.mul_monomial(&m, &one), section).expect("degree in lattice");
            gens.push(lifted);
        }
    }
    Ideal::new(target, gens).expect("same ring")
}

/// Kernel of `S -> A/I`, `z_{i,α} -> x_i^α`, by eliminating `x` from
/// `I + (z_α - x^α)` in the joint ring.
pub fn kernel_ideal(spec: &ScrollSpec, opts: &GroebnerOptions) -> Result<Ideal> {
    let joint = Ring::joint(spec.a(), spec.b())?;
    let nx = spec.source().nvars();
    let nz = spec.target().nvars();
    let x_map: Vec<Option<usize>> = (0..nx).map(Some).collect();
    let mut gens: Vec<Polynomial> = spec
        .gens()
        .iter()
        .map(|g| g.transfer(&joint, &x_map).expect("x variables map"))
        .collect();
    let z_to_joint: Vec<Option<usize>> = (0..nz).map(|k| Some(nx + k)).collect();
    for k in 0..nz {
        let z = Polynomial::var(spec.target(), k);
        let x = substitute(spec.source(), &z)
            .transfer(&joint, &x_map)
            .expect("x variables map");
        let zj = z.transfer(&joint, &z_to_joint).expect("z variables map");
        gens.push(&zj - &x);
    }
    let flags: Vec<bool> = (0..nx + nz).map(|v| v < nx).collect();
    let elim = eliminate(&Ideal::new(&joint, gens)?, &flags, opts)?;
    let back: Vec<Option<usize>> = (0..nx + nz).map(|v| v.checked_sub(nx)).collect();
    let gens = elim
        .gens()
        .iter()
        .map(|g| g.transfer(spec.target(), &back).expect("x eliminated"))
        .collect();
    Ideal::new(spec.target(), gens)
}

/// Target variables of block `i`, listed as `α` vectors in ring order.
pub fn block_alphas(a_i: u32, b_i: u32) -> Vec<Vec<u32>> {
    compositions(b_i, a_i as usize + 1)
}

#[cfg(test)]
mod tests;
