//! Buchberger's algorithm and the ideal-level operations built on it.
//!
//! Pairs are processed by the normal strategy (smallest lcm degree, then
//! smallest lcm in the active order, then pair indices). Useless pairs are
//! pruned by the Gebauer–Möller installation of Buchberger's two criteria.
//! Every choice is deterministic, so bases come out byte-identical across
//! runs.

mod elim;
mod monomial_ideal;

pub use elim::{eliminate, ideal_equal, intersect};
pub(crate) use monomial_ideal::block_classes;
pub use monomial_ideal::{HilbertSeries, MonomialIdeal, MAX_COUNT_DEGREE};

use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::{BudgetExceeded, Error, Result};
use crate::field::{Field, Rational};
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::{Monomial, Ring};

/// Resource limits for one Gröbner computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerOptions {
    /// Maximum number of S-pair reductions.
    pub max_pairs: usize,
    /// Maximum total degree of any S-pair lcm.
    pub max_degree: u32,
}

impl Default for GroebnerOptions {
    fn default() -> Self {
        GroebnerOptions {
            max_pairs: 200_000,
            max_degree: 30,
        }
    }
}

/// Snapshot emitted after every S-pair reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Progress {
    pub pairs_processed: usize,
    pub pairs_pending: usize,
    pub basis_size: usize,
    pub degree: u32,
}

/// An ideal given by generators in one ring. Zero generators are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal<F: Field = Rational> {
    ring: Arc<Ring>,
    gens: Vec<Polynomial<F>>,
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &Arc<Ring>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        for g in &gens {
            if !(Arc::ptr_eq(g.ring(), ring) || **g.ring() == **ring) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_multigraded(&self) -> bool {
        self.gens.iter().all(|g| g.is_multihomogeneous())
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn groebner_basis(
        &self,
        order: &MonomialOrder,
        opts: &GroebnerOptions,
    ) -> Result<GroebnerBasis<F>> {
        buchberger(self, order, opts)
    }
}

type Terms<F> = Vec<(Monomial, F)>;

fn divmask(m: &Monomial) -> u64 {
    let mut mask = 0u64;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e > 0 {
            mask |= 1 << (i % 64);
        }
    }
    mask
}

fn sorted_terms<F: Field>(f: &Polynomial<F>, ord: &MonomialOrder) -> Terms<F> {
    let mut t = f.terms().to_vec();
    t.sort_by(|a, b| ord.cmp(&b.0, &a.0));
    t
}

/// `p - c * m * g`, all lists descending in `ord`.
fn sub_multiple<F: Field>(
    p: &[(Monomial, F)],
    c: &F,
    m: &Monomial,
    g: &[(Monomial, F)],
    ord: &MonomialOrder,
) -> Terms<F> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let mut gj: Option<Monomial> = g.first().map(|t| t.0.mul(m));
    while i < p.len() {
        let Some(gm) = gj.as_ref() else { break };
        match ord.cmp(&p[i].0, gm) {
            Ordering::Greater => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((gm.clone(), -(g[j].1.clone() * c)));
                j += 1;
                gj = g.get(j).map(|t| t.0.mul(m));
            }
            Ordering::Equal => {
                let v = p[i].1.clone() - &(g[j].1.clone() * c);
                if !v.is_zero() {
                    out.push((p[i].0.clone(), v));
                }
                i += 1;
                j += 1;
                gj = g.get(j).map(|t| t.0.mul(m));
            }
        }
    }
    out.extend(p[i..].iter().cloned());
    while let Some(gm) = gj {
        out.push((gm, -(g[j].1.clone() * c)));
        j += 1;
        gj = g.get(j).map(|t| t.0.mul(m));
    }
    out
}

struct Reducer<'a, F: Field> {
    terms: &'a [(Monomial, F)],
    mask: u64,
}

/// Full normal form; divisors are tried in slice order.
fn normal_form<F: Field>(f: Terms<F>, divisors: &[Reducer<F>], ord: &MonomialOrder) -> Terms<F> {
    let mut p = f;
    let mut rem = Vec::new();
    let mut idx = 0;
    while idx < p.len() {
        let (m, c) = &p[idx];
        let mask = divmask(m);
        let hit = divisors
            .iter()
            .find(|g| g.mask & !mask == 0 && g.terms[0].0.divides(m));
        match hit {
            Some(g) => {
                let (lm, lc) = &g.terms[0];
                let q = lm.quotient_of(m).expect("checked divisibility");
                let factor = c.clone() * &lc.inv();
                p = sub_multiple(&p[idx..], &factor, &q, g.terms, ord);
                idx = 0;
            }
            None => {
                rem.push(p[idx].clone());
                idx += 1;
            }
        }
    }
    rem
}

fn make_monic<F: Field>(t: &mut Terms<F>) {
    if let Some((_, lc)) = t.first() {
        if !lc.is_one() {
            let inv = lc.inv();
            for (_, c) in t.iter_mut() {
                *c = c.clone() * &inv;
            }
        }
    }
}

/// Remainder of `f` on division by `divisors` (tried in list order) with
/// respect to `ord`.
pub fn reduce<F: Field>(
    f: &Polynomial<F>,
    divisors: &[Polynomial<F>],
    ord: &MonomialOrder,
) -> Polynomial<F> {
    let sorted: Vec<Terms<F>> = divisors
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| sorted_terms(g, ord))
        .collect();
    let reducers: Vec<Reducer<F>> = sorted
        .iter()
        .map(|t| Reducer {
            terms: t,
            mask: divmask(&t[0].0),
        })
        .collect();
    let rem = normal_form(sorted_terms(f, ord), &reducers, ord);
    Polynomial::from_terms(f.ring(), rem)
}

/// Reduced Gröbner basis for a fixed order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field = Rational> {
    ring: Arc<Ring>,
    order: MonomialOrder,
    basis: Vec<Polynomial<F>>,
    sorted: Vec<Terms<F>>,
    reduced: bool,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Basis elements, monic, sorted by increasing leading monomial.
    pub fn basis(&self) -> &[Polynomial<F>] {
        &self.basis
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sorted.iter().map(|t| t[0].0.clone()).collect()
    }

    pub fn leading_term(&self, k: usize) -> (&Monomial, &F) {
        let (m, c) = &self.sorted[k][0];
        (m, c)
    }

    pub fn reduce(&self, f: &Polynomial<F>) -> Polynomial<F> {
        let reducers: Vec<Reducer<F>> = self
            .sorted
            .iter()
            .map(|t| Reducer {
                terms: t,
                mask: divmask(&t[0].0),
            })
            .collect();
        let rem = normal_form(sorted_terms(f, &self.order), &reducers, &self.order);
        Polynomial::from_terms(f.ring(), rem)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.reduce(f).is_zero()
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.ring.nvars(), self.leading_monomials())
    }

    /// Largest total degree among basis elements, 0 for the zero ideal.
    pub fn max_degree(&self) -> u32 {
        self.basis
            .iter()
            .filter_map(|g| g.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn is_unit(&self) -> bool {
        self.sorted.iter().any(|t| t[0].0.is_one())
    }

    pub fn to_ideal(&self) -> Ideal<F> {
        Ideal {
            ring: self.ring.clone(),
            gens: self.basis.clone(),
        }
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

pub fn buchberger<F: Field>(
    ideal: &Ideal<F>,
    order: &MonomialOrder,
    opts: &GroebnerOptions,
) -> Result<GroebnerBasis<F>> {
    buchberger_with_progress(ideal, order, opts, &mut |_| {})
}

pub fn buchberger_with_progress<F: Field>(
    ideal: &Ideal<F>,
    order: &MonomialOrder,
    opts: &GroebnerOptions,
    on_progress: &mut dyn FnMut(&Progress),
) -> Result<GroebnerBasis<F>> {
    let ord = order;
    let mut polys: Vec<Terms<F>> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<Terms<F>> = ideal
        .gens
        .iter()
        .map(|g| {
            let mut t = sorted_terms(g, ord);
            make_monic(&mut t);
            t
        })
        .collect();
    // Small leading monomials first; later inputs are reduced by earlier ones.
    inputs.sort_by(|a, b| {
        ord.cmp(&a[0].0, &b[0].0)
            .then_with(|| a.len().cmp(&b.len()))
    });

    for f in inputs {
        let reducers = active_reducers(&polys, &active);
        let mut h = normal_form(f, &reducers, ord);
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h);
        install(&mut polys, &mut active, &mut pairs, h);
    }

    let mut processed = 0usize;
    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&x, &y| {
                let (p, q) = (&pairs[x], &pairs[y]);
                p.lcm
                    .degree()
                    .cmp(&q.lcm.degree())
                    .then_with(|| ord.cmp(&p.lcm, &q.lcm))
                    .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
            })
            .expect("nonempty");
        let pair = pairs.swap_remove(best);
        let degree = pair.lcm.degree();
        if degree > opts.max_degree {
            return Err(BudgetExceeded::Degree {
                limit: opts.max_degree,
                degree,
            }
            .into());
        }
        if processed >= opts.max_pairs {
            return Err(BudgetExceeded::Pairs {
                limit: opts.max_pairs,
            }
            .into());
        }
        processed += 1;

        let s = s_polynomial(&polys[pair.i], &polys[pair.j], &pair.lcm, ord);
        let reducers = active_reducers(&polys, &active);
        let mut h = normal_form(s, &reducers, ord);
        if !h.is_empty() {
            make_monic(&mut h);
            install(&mut polys, &mut active, &mut pairs, h);
        }
        on_progress(&Progress {
            pairs_processed: processed,
            pairs_pending: pairs.len(),
            basis_size: active.iter().filter(|&&a| a).count(),
            degree,
        });
    }

    Ok(finish(ideal.ring.clone(), ord.clone(), polys, active))
}

fn active_reducers<'a, F: Field>(polys: &'a [Terms<F>], active: &[bool]) -> Vec<Reducer<'a, F>> {
    polys
        .iter()
        .zip(active)
        .filter(|(_, &a)| a)
        .map(|(t, _)| Reducer {
            terms: t,
            mask: divmask(&t[0].0),
        })
        .collect()
}

fn s_polynomial<F: Field>(
    f: &Terms<F>,
    g: &Terms<F>,
    lcm: &Monomial,
    ord: &MonomialOrder,
) -> Terms<F> {
    // both monic: S = (lcm/lm f) f - (lcm/lm g) g
    let mf = f[0].0.quotient_of(lcm).expect("lcm");
    let mg = g[0].0.quotient_of(lcm).expect("lcm");
    let scaled: Terms<F> = f[1..]
        .iter()
        .map(|(m, c)| (m.mul(&mf), c.clone()))
        .collect();
    sub_multiple(&scaled, &F::one(), &mg, &g[1..], ord)
}

/// Gebauer–Möller update for a new basis element.
fn install<F: Field>(
    polys: &mut Vec<Terms<F>>,
    active: &mut Vec<bool>,
    pairs: &mut Vec<Pair>,
    h: Terms<F>,
) {
    let t = polys.len();
    let lm_h = h[0].0.clone();
    polys.push(h);
    active.push(true);

    let candidates: Vec<Pair> = (0..t)
        .filter(|&g| active[g])
        .map(|g| Pair {
            i: g,
            j: t,
            lcm: polys[g][0].0.lcm(&lm_h),
        })
        .collect();

    let coprime = |p: &Pair, polys: &Vec<Terms<F>>| polys[p.i][0].0.is_coprime(&lm_h);
    let mut kept: Vec<Pair> = Vec::new();
    for (k, p) in candidates.iter().enumerate() {
        let dominated = candidates[k + 1..]
            .iter()
            .chain(kept.iter())
            .any(|q| q.lcm.divides(&p.lcm));
        if coprime(p, polys) || !dominated {
            kept.push(p.clone());
        }
    }
    let fresh: Vec<Pair> = kept.into_iter().filter(|p| !coprime(p, polys)).collect();

    pairs.retain(|p| {
        if !lm_h.divides(&p.lcm) {
            return true;
        }
        let l1 = polys[p.i][0].0.lcm(&lm_h);
        let l2 = polys[p.j][0].0.lcm(&lm_h);
        l1 == p.lcm || l2 == p.lcm
    });
    pairs.extend(fresh);

    for g in 0..t {
        if active[g] && lm_h.divides(&polys[g][0].0) {
            active[g] = false;
        }
    }
}

fn finish<F: Field>(
    ring: Arc<Ring>,
    ord: MonomialOrder,
    polys: Vec<Terms<F>>,
    active: Vec<bool>,
) -> GroebnerBasis<F> {
    let mut minimal: Vec<Terms<F>> = polys
        .into_iter()
        .zip(active)
        .filter(|(_, a)| *a)
        .map(|(t, _)| t)
        .collect();
    minimal.sort_by(|a, b| ord.cmp(&a[0].0, &b[0].0));

    let mut reduced: Vec<Terms<F>> = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Reducer<F>> = minimal
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != k)
            .map(|(_, t)| Reducer {
                terms: t,
                mask: divmask(&t[0].0),
            })
            .collect();
        let head = minimal[k][0].clone();
        let tail = normal_form(minimal[k][1..].to_vec(), &others, &ord);
        let mut t = vec![head];
        t.extend(tail);
        make_monic(&mut t);
        reduced.push(t);
    }

    let basis = reduced
        .iter()
        .map(|t| Polynomial::from_terms(&ring, t.iter().cloned()))
        .collect();
    GroebnerBasis {
        ring,
        order: ord,
        basis,
        sorted: reduced,
        reduced: true,
    }
}
