use std::collections::BTreeMap;

use crate::error::{BudgetExceeded, Error, Result};
use crate::ring::{Monomial, Ring, VarLabel};

/// Largest degree accepted by the standard-monomial counters.
pub const MAX_COUNT_DEGREE: u32 = 512;

/// Monomial ideal stored by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    // grevlex-ascending means degree-ascending, so divisors come first
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        assert!(
            gens.iter().all(|g| g.nvars() == nvars),
            "monomial length mismatch"
        );
        MonomialIdeal {
            nvars,
            gens: minimalize(gens),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Minimal generators in increasing grevlex order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    /// Krull dimension of the quotient: the number of variables minus the
    /// smallest set of variables meeting every generator's support.
    pub fn krull_dimension(&self) -> Result<usize> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let mut supports: Vec<Vec<usize>> =
            self.gens.iter().map(|g| g.support().collect()).collect();
        supports.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        supports.dedup();
        let mut minimal: Vec<Vec<usize>> = Vec::new();
        for s in supports {
            if !minimal.iter().any(|t| t.iter().all(|v| s.contains(v))) {
                minimal.push(s);
            }
        }
        let mut chosen = vec![false; self.nvars];
        let mut best = self.nvars;
        hitting_set(&minimal, &mut chosen, 0, &mut best);
        Ok(self.nvars - best)
    }

    /// Hilbert series of the quotient for a grading in which variable `v`
    /// has degree `e_{class_of[v]}`.
    pub fn hilbert_series(&self, class_of: &[usize], nclasses: usize) -> HilbertSeries {
        assert_eq!(class_of.len(), self.nvars);
        let mut class_sizes = vec![0u32; nclasses];
        for &c in class_of {
            class_sizes[c] += 1;
        }
        let numerator = numerator(self.gens.clone(), class_of, nclasses);
        HilbertSeries {
            class_sizes,
            numerator,
        }
    }

    /// Number of standard monomials of total degree `degree`.
    pub fn count_standard_monomials(&self, degree: u32) -> Result<u64> {
        check_cap(degree)?;
        let hs = self.hilbert_series(&vec![0; self.nvars], 1);
        Ok(hs.value(&[degree]))
    }

    /// Number of standard monomials of the given multidegree in a source or
    /// target ring.
    pub fn count_standard_monomials_multidegree(&self, ring: &Ring, d: &[u32]) -> Result<u64> {
        for &e in d {
            check_cap(e)?;
        }
        let hs = self.hilbert_series(&block_classes(ring)?, ring.nblocks());
        Ok(hs.value(d))
    }
}

/// Map each variable to its block, refusing rings with non-unit gradings.
pub(crate) fn block_classes(ring: &Ring) -> Result<Vec<usize>> {
    let weighted = matches!(ring.kind(), crate::ring::RingKind::Joint { .. });
    ring.vars()
        .iter()
        .map(|v| match v.label {
            VarLabel::Aux(_) => Err(Error::InvalidRing(
                "auxiliary variables carry no block degree".into(),
            )),
            VarLabel::Z(_) if weighted => Err(Error::InvalidRing(
                "joint rings are not standard multigraded".into(),
            )),
            _ => Ok(v.block),
        })
        .collect()
}

fn check_cap(degree: u32) -> Result<()> {
    if degree > MAX_COUNT_DEGREE {
        return Err(BudgetExceeded::Degree {
            limit: MAX_COUNT_DEGREE,
            degree,
        }
        .into());
    }
    Ok(())
}

fn hitting_set(sets: &[Vec<usize>], chosen: &mut [bool], size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    let open = sets
        .iter()
        .filter(|s| !s.iter().any(|&v| chosen[v]))
        .min_by_key(|s| s.len());
    match open {
        None => *best = size,
        Some(s) => {
            if size + 1 >= *best {
                return;
            }
            for &v in s {
                chosen[v] = true;
                hitting_set(sets, chosen, size + 1, best);
                chosen[v] = false;
            }
        }
    }
}

/// Numerator `K(t)` of `H(t) = K(t) / prod_c (1 - t_c)^{n_c}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    class_sizes: Vec<u32>,
    numerator: BTreeMap<Vec<u32>, i64>,
}

impl HilbertSeries {
    pub fn numerator(&self) -> &BTreeMap<Vec<u32>, i64> {
        &self.numerator
    }

    pub fn class_sizes(&self) -> &[u32] {
        &self.class_sizes
    }

    /// Coefficient of `t^d`.
    pub fn value(&self, d: &[u32]) -> u64 {
        assert_eq!(d.len(), self.class_sizes.len());
        let mut total: i128 = 0;
        'terms: for (e, &c) in &self.numerator {
            let mut prod: i128 = c as i128;
            for k in 0..d.len() {
                if e[k] > d[k] {
                    continue 'terms;
                }
                let n = self.class_sizes[k];
                let m = (d[k] - e[k]) as u64;
                prod *= if n == 0 {
                    (m == 0) as i128
                } else {
                    binomial_i128(m + n as u64 - 1, n as u64 - 1)
                };
            }
            total += prod;
        }
        u64::try_from(total).expect("Hilbert function values are nonnegative")
    }
}

fn binomial_i128(n: u64, k: u64) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k as i128 {
        acc = acc * (n as i128 - i) / (i + 1);
    }
    acc
}

type Numerator = BTreeMap<Vec<u32>, i64>;

fn degree_of(m: &Monomial, class_of: &[usize], nclasses: usize) -> Vec<u32> {
    let mut d = vec![0u32; nclasses];
    for (v, &e) in m.exponents().iter().enumerate() {
        d[class_of[v]] += e;
    }
    d
}

fn add_shifted(acc: &mut Numerator, other: &Numerator, shift: &[u32], sign: i64) {
    for (e, &c) in other {
        let key: Vec<u32> = e.iter().zip(shift).map(|(a, b)| a + b).collect();
        let slot = acc.entry(key).or_insert(0);
        *slot += sign * c;
    }
    acc.retain(|_, c| *c != 0);
}

/// Pivot recursion `K(M) = K(M + (p)) + t^deg(p) K(M : p)`.
fn numerator(gens: Vec<Monomial>, class_of: &[usize], nclasses: usize) -> Numerator {
    let gens = minimalize(gens);
    let nvars = class_of.len();
    let mut count = vec![0usize; nvars];
    for g in &gens {
        for v in g.support() {
            count[v] += 1;
        }
    }
    let pivot_var = (0..nvars)
        .filter(|&v| count[v] > 1)
        .max_by_key(|&v| (count[v], std::cmp::Reverse(v)));
    let Some(v) = pivot_var else {
        // pairwise coprime generators: a complete intersection
        let mut acc: Numerator = BTreeMap::new();
        acc.insert(vec![0; nclasses], 1);
        for g in &gens {
            let d = degree_of(g, class_of, nclasses);
            let mut next = acc.clone();
            add_shifted(&mut next, &acc, &d, -1);
            acc = next;
        }
        return acc;
    };
    let e = gens
        .iter()
        .map(|g| g.exponents()[v])
        .filter(|&e| e > 0)
        .min()
        .expect("pivot variable occurs");
    let pivot = Monomial::var(nvars, v, e);

    let mut plus: Vec<Monomial> = gens
        .iter()
        .filter(|g| g.exponents()[v] == 0)
        .cloned()
        .collect();
    plus.push(pivot.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut x = g.exponents().to_vec();
            x[v] = x[v].saturating_sub(e);
            Monomial::from_exponents(x)
        })
        .collect();

    let mut acc = numerator(plus, class_of, nclasses);
    let rest = numerator(colon, class_of, nclasses);
    add_shifted(&mut acc, &rest, &degree_of(&pivot, class_of, nclasses), 1);
    acc
}
