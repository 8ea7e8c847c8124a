//! Hilbert functions of correspondence scrolls, Hilbert-polynomial fitting
//! and the Gorenstein arithmetic for complete intersections.
//!
//! The scroll's Hilbert function can be computed two independent ways: as
//! `Σ_{|t| = s} H_{A/I}(b_1 t_1, ..., b_n t_n)` on the source side, or by
//! counting standard monomials of the constructed ideal in the target ring.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{BudgetExceeded, Result};
use crate::field::Rational;
use crate::groebner::{block_classes, GroebnerBasis, GroebnerOptions, HilbertSeries, Ideal};
use crate::order::MonomialOrder;
use crate::ring::{compositions, Multidegree};
use crate::scroll::{scroll_ideal, ScrollSpec};

/// Default number of samples before fitting.
pub const DEFAULT_S_MAX: u32 = 8;
/// Sampling stops with a budget error beyond this `s`.
pub const SAMPLE_CAP: u32 = 64;

/// `dim_k (A/I)_d` from a Gröbner basis of `I`.
pub fn multigraded_hilbert(ideal: &Ideal, d: &[u32], opts: &GroebnerOptions) -> Result<u64> {
    let gb = ideal.groebner_basis(&MonomialOrder::grevlex(), opts)?;
    gb.initial_ideal()
        .count_standard_monomials_multidegree(ideal.ring(), d)
}

/// Both Hilbert series of a scroll, computed once.
#[derive(Clone, Debug)]
pub struct ScrollHilbert {
    b: Vec<u32>,
    source: HilbertSeries,
    target: HilbertSeries,
    source_dim: usize,
    target_dim: usize,
}

impl ScrollHilbert {
    pub fn new(spec: &ScrollSpec, order: &MonomialOrder, opts: &GroebnerOptions) -> Result<Self> {
        let source_gb = spec.source_ideal().groebner_basis(order, opts)?;
        let target_gb = scroll_ideal(spec).groebner_basis(order, opts)?;
        Self::from_bases(spec, &source_gb, &target_gb)
    }

    /// Reuse Gröbner bases of `I` and of the scroll ideal.
    pub fn from_bases(
        spec: &ScrollSpec,
        source_gb: &GroebnerBasis,
        target_gb: &GroebnerBasis,
    ) -> Result<Self> {
        let src_init = source_gb.initial_ideal();
        let tgt_init = target_gb.initial_ideal();
        let classes = block_classes(spec.source())?;
        Ok(ScrollHilbert {
            b: spec.b().to_vec(),
            source: src_init.hilbert_series(&classes, spec.nblocks()),
            target: tgt_init.hilbert_series(&vec![0; spec.target().nvars()], 1),
            source_dim: src_init.krull_dimension()?,
            target_dim: tgt_init.krull_dimension()?,
        })
    }

    fn check(s: u32) -> Result<()> {
        if s > SAMPLE_CAP {
            return Err(BudgetExceeded::Samples {
                limit: SAMPLE_CAP as usize,
            }
            .into());
        }
        Ok(())
    }

    /// `Σ_{|t| = s} H_{A/I}(b t)`.
    pub fn sum(&self, s: u32) -> Result<u64> {
        Self::check(s)?;
        Ok(compositions(s, self.b.len())
            .into_iter()
            .map(|t| {
                let d: Vec<u32> = t.iter().zip(&self.b).map(|(ti, bi)| ti * bi).collect();
                self.source.value(&d)
            })
            .sum())
    }

    /// Standard monomials of degree `s` for the scroll ideal.
    pub fn direct(&self, s: u32) -> Result<u64> {
        Self::check(s)?;
        Ok(self.target.value(&[s]))
    }

    pub fn target_series(&self) -> &HilbertSeries {
        &self.target
    }

    pub fn source_series(&self) -> &HilbertSeries {
        &self.source
    }

    pub fn dimension_check(&self) -> DimensionCheck {
        DimensionCheck {
            source: self.source_dim,
            target: self.target_dim,
            ok: self.source_dim == self.target_dim,
        }
    }

    /// Sample both columns up to `s_max`, raising it until a fit is stable.
    pub fn report(&self, s_max: u32) -> Result<HilbertReport> {
        let mut s_max = s_max.max(2);
        loop {
            let direct = (0..=s_max)
                .map(|s| self.direct(s))
                .collect::<Result<Vec<_>>>()?;
            if let Some(fit) = hilbert_polynomial(&direct) {
                let sum = (0..=s_max)
                    .map(|s| self.sum(s))
                    .collect::<Result<Vec<_>>>()?;
                let sum_fit = hilbert_polynomial(&sum);
                return Ok(HilbertReport {
                    s_max,
                    direct,
                    sum,
                    agree: sum_fit.as_ref() == Some(&fit),
                    fit,
                });
            }
            if s_max >= SAMPLE_CAP {
                return Err(BudgetExceeded::Samples {
                    limit: SAMPLE_CAP as usize,
                }
                .into());
            }
            s_max = (s_max + 4).min(SAMPLE_CAP);
        }
    }
}

pub fn scroll_hilbert_sum(spec: &ScrollSpec, s: u32, opts: &GroebnerOptions) -> Result<u64> {
    let gb = spec
        .source_ideal()
        .groebner_basis(&MonomialOrder::grevlex(), opts)?;
    let classes = block_classes(spec.source())?;
    let series = gb.initial_ideal().hilbert_series(&classes, spec.nblocks());
    ScrollHilbert::check(s)?;
    Ok(compositions(s, spec.nblocks())
        .into_iter()
        .map(|t| {
            let d: Vec<u32> = t.iter().zip(spec.b()).map(|(ti, bi)| ti * bi).collect();
            series.value(&d)
        })
        .sum())
}

pub fn scroll_hilbert_direct(spec: &ScrollSpec, s: u32, opts: &GroebnerOptions) -> Result<u64> {
    ScrollHilbert::check(s)?;
    let gb = scroll_ideal(spec).groebner_basis(&MonomialOrder::grevlex(), opts)?;
    gb.initial_ideal().count_standard_monomials(s)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionCheck {
    /// Krull dimension of `A/I`.
    pub source: usize,
    /// Krull dimension of the scroll's coordinate ring.
    pub target: usize,
    pub ok: bool,
}

/// A Hilbert polynomial recovered from samples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertFit {
    /// Coefficients in increasing powers of `s`.
    pub coefficients: Vec<Rational>,
    /// Projective dimension; `None` for the empty scheme.
    pub dimension: Option<u32>,
    pub degree: u64,
    /// First sample of the fit window.
    pub window_start: usize,
    pub stable: bool,
}

impl HilbertFit {
    pub fn eval(&self, s: i64) -> Rational {
        let x = Rational::from_integer(BigInt::from(s));
        self.coefficients
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * &x + c)
    }

    /// `P(s)` written out, highest power first.
    pub fn polynomial_string(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            let body = match (k, mag.is_one()) {
                (0, _) => mag.to_string(),
                (1, true) => "s".to_string(),
                (1, false) => format!("{mag}*s"),
                (_, true) => format!("s^{k}"),
                (_, false) => format!("{mag}*s^{k}"),
            };
            if parts.is_empty() {
                parts.push(if neg { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{} {body}", if neg { '-' } else { '+' }));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" ")
        }
    }
}

fn differences(values: &[i128], order: usize) -> Vec<i128> {
    let mut v = values.to_vec();
    for _ in 0..order {
        v = v.windows(2).map(|w| w[1] - w[0]).collect();
    }
    v
}

/// Smallest `r` whose degree-`r` interpolant through `r + 1` samples also
/// matches the two samples after them, using the last `r + 3` values.
pub fn hilbert_polynomial(values: &[u64]) -> Option<HilbertFit> {
    let vals: Vec<i128> = values.iter().map(|&v| v as i128).collect();
    let n = vals.len();
    if n < 3 {
        return None;
    }
    if vals[n - 3..].iter().all(|&v| v == 0) {
        return Some(HilbertFit {
            coefficients: Vec::new(),
            dimension: None,
            degree: 0,
            window_start: n - 3,
            stable: true,
        });
    }
    for r in 0..=n - 3 {
        let start = n - (r + 3);
        let tail = &vals[start..];
        if differences(tail, r + 1).iter().all(|&d| d == 0) {
            let lead = differences(tail, r)[0];
            let coefficients = newton_to_monomial(tail, r, start);
            return Some(HilbertFit {
                coefficients,
                dimension: Some(r as u32),
                degree: u64::try_from(lead).ok()?,
                window_start: start,
                stable: true,
            });
        }
    }
    None
}

/// Expand `Σ_k Δ^k(s0) C(s - s0, k)` into powers of `s`.
fn newton_to_monomial(window: &[i128], r: usize, s0: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); r + 1];
    // basis polynomial C(s - s0, k) built incrementally
    let mut basis = vec![Rational::one()];
    for k in 0..=r {
        let dk = Rational::from_integer(BigInt::from(differences(window, k)[0]));
        for (i, c) in basis.iter().enumerate() {
            out[i] += c * &dk;
        }
        // basis *= (s - s0 - k) / (k + 1)
        let shift = Rational::from_integer(BigInt::from(-(s0 as i64) - k as i64));
        let denom = Rational::from_integer(BigInt::from(k as i64 + 1));
        let mut next = vec![Rational::zero(); basis.len() + 1];
        for (i, c) in basis.iter().enumerate() {
            next[i + 1] += c / &denom;
            next[i] += c * &shift / &denom;
        }
        basis = next;
    }
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

/// Projective dimension and degree read off the numerator of a
/// single-graded Hilbert series, by stripping factors of `1 - t`.
pub fn series_dimension_degree(series: &HilbertSeries) -> (Option<u32>, u64) {
    assert_eq!(series.class_sizes().len(), 1, "single grading expected");
    let n = series.class_sizes()[0] as usize;
    let top = series
        .numerator()
        .keys()
        .map(|e| e[0] as usize)
        .max()
        .unwrap_or(0);
    let mut k: Vec<i128> = vec![0; top + 1];
    for (e, &c) in series.numerator() {
        k[e[0] as usize] += c as i128;
    }
    let mut stripped = 0usize;
    while k.iter().sum::<i128>() == 0 {
        if k.iter().all(|&c| c == 0) {
            return (None, 0);
        }
        // divide by (1 - t): q_j = Σ_{i <= j} k_i
        let mut acc = 0i128;
        let q: Vec<i128> = k
            .iter()
            .map(|&c| {
                acc += c;
                acc
            })
            .collect();
        k = q[..q.len() - 1].to_vec();
        stripped += 1;
    }
    let dim = n - stripped;
    let degree = k.iter().sum::<i128>();
    (dim.checked_sub(1).map(|d| d as u32), degree as u64)
}

/// Sample table plus the fitted polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertReport {
    pub s_max: u32,
    /// Standard-monomial counts in the target ring.
    pub direct: Vec<u64>,
    /// Source-side sum formula.
    pub sum: Vec<u64>,
    pub fit: HilbertFit,
    /// Sum and direct columns fit the same polynomial.
    pub agree: bool,
}

/// Outcome of the Gorenstein test for `T_b(A/I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GorensteinVerdict {
    /// The ideal was declared a complete intersection by the caller.
    pub is_complete_intersection_input: bool,
    /// `v = a(A/I)` in the convention `a(A) = a + 1`.
    pub v: Vec<i64>,
    /// `λ_i = -v_i / b_i` when every division is exact.
    pub lambdas: Option<Vec<i64>>,
    pub gorenstein: bool,
    pub calabi_yau: bool,
}

/// Gorenstein iff `b_i | v_i` for every block; Calabi-Yau iff `v = 0`.
pub fn gorenstein_from_a_invariant(v: &[i64], b: &[u32]) -> GorensteinVerdict {
    assert_eq!(v.len(), b.len());
    let gorenstein = v.iter().zip(b).all(|(&vi, &bi)| vi % bi as i64 == 0);
    GorensteinVerdict {
        is_complete_intersection_input: false,
        v: v.to_vec(),
        lambdas: gorenstein.then(|| v.iter().zip(b).map(|(&vi, &bi)| -vi / bi as i64).collect()),
        gorenstein,
        calabi_yau: v.iter().all(|&vi| vi == 0),
    }
}

/// `v = (a_i + 1) - Σ_j deg(f_j)_i` for a regular sequence `f_j`.
pub fn gorenstein_ci_check(a: &[u32], b: &[u32], degs: &[Multidegree]) -> GorensteinVerdict {
    let v: Vec<i64> = (0..a.len())
        .map(|i| a[i] as i64 + 1 - degs.iter().map(|d| d.0[i] as i64).sum::<i64>())
        .collect();
    GorensteinVerdict {
        is_complete_intersection_input: true,
        ..gorenstein_from_a_invariant(&v, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::MonomialIdeal;
    use crate::ring::{monomials_of_multidegree, Monomial, Ring};

    const DIAG: &str = "x1_0*x2_1 - x1_1*x2_0";
    const DIAG_SQ: &str = "x1_0^2*x2_1^2 - 2*x1_0*x1_1*x2_0*x2_1 + x1_1^2*x2_0^2";

    fn opts() -> GroebnerOptions {
        GroebnerOptions::default()
    }

    fn brute(ideal: &Ideal, d: &[u32]) -> u64 {
        // dimension of (A/I)_d by enumerating standard monomials of the GB
        let gb = ideal
            .groebner_basis(&MonomialOrder::lex(), &opts())
            .unwrap();
        let init: MonomialIdeal = gb.initial_ideal();
        monomials_of_multidegree(ideal.ring(), &Multidegree(d.to_vec()))
            .into_iter()
            .filter(|m: &Monomial| !init.contains(m))
            .count() as u64
    }

    #[test]
    fn multigraded_examples() {
        let spec = ScrollSpec::parse(&[1, 1], &[1, 1], &[DIAG]).unwrap();
        assert_eq!(
            multigraded_hilbert(&spec.source_ideal(), &[2, 3], &opts()).unwrap(),
            6
        );
        assert_eq!(brute(&spec.source_ideal(), &[2, 3]), 6);
        let zero = Ideal::zero(&Ring::source(&[1, 1]).unwrap());
        assert_eq!(multigraded_hilbert(&zero, &[1, 1], &opts()).unwrap(), 4);
        let sq = ScrollSpec::parse(&[1, 1], &[1, 1], &[DIAG_SQ]).unwrap();
        assert_eq!(
            multigraded_hilbert(&sq.source_ideal(), &[2, 2], &opts()).unwrap(),
            8
        );
        for d1 in 0..5 {
            for d2 in 0..5 {
                assert_eq!(
                    multigraded_hilbert(&sq.source_ideal(), &[d1, d2], &opts()).unwrap(),
                    brute(&sq.source_ideal(), &[d1, d2])
                );
            }
        }
    }

    #[test]
    fn sum_and_direct_examples() {
        let segre = ScrollSpec::parse(&[1, 1], &[1, 1], &[DIAG]).unwrap();
        assert_eq!(scroll_hilbert_sum(&segre, 2, &opts()).unwrap(), 9);
        assert_eq!(scroll_hilbert_direct(&segre, 2, &opts()).unwrap(), 9);
        assert_eq!(scroll_hilbert_sum(&segre, 0, &opts()).unwrap(), 1);

        let carpet = ScrollSpec::parse(&[1, 1], &[2, 2], &[DIAG_SQ]).unwrap();
        assert_eq!(scroll_hilbert_sum(&carpet, 1, &opts()).unwrap(), 6);
        assert_eq!(scroll_hilbert_direct(&carpet, 1, &opts()).unwrap(), 6);

        let scroll = ScrollSpec::parse(&[1, 1], &[2, 3], &[DIAG]).unwrap();
        assert_eq!(scroll_hilbert_direct(&scroll, 1, &opts()).unwrap(), 7);
    }

    #[test]
    fn fat_point_stabilizes() {
        for (m, b1, expect) in [(3u32, 2u32, 2u64), (3, 3, 1), (3, 1, 3), (4, 3, 2)] {
            let gens = [format!("x1_0^{m}"), "x1_1".to_string(), "x2_0".to_string()];
            let spec = ScrollSpec::parse(&[1, 1], &[b1, 1], &gens).unwrap();
            let h = ScrollHilbert::new(&spec, &MonomialOrder::grevlex(), &opts()).unwrap();
            let rep = h.report(DEFAULT_S_MAX).unwrap();
            assert_eq!(rep.fit.dimension, Some(0));
            assert_eq!(rep.fit.degree, expect, "m={m} b1={b1}");
            assert_eq!(rep.direct, rep.sum);
        }
    }

    #[test]
    fn fits() {
        let ones = vec![1u64; 6];
        let f = hilbert_polynomial(&ones).unwrap();
        assert_eq!((f.dimension, f.degree), (Some(0), 1));
        assert_eq!(f.polynomial_string(), "1");

        // Σ(2,3): (s+1)(5s+2)/2
        let vals: Vec<u64> = (0..9u64).map(|s| (s + 1) * (5 * s + 2) / 2).collect();
        let f = hilbert_polynomial(&vals).unwrap();
        assert_eq!((f.dimension, f.degree), (Some(2), 5));
        assert_eq!(f.polynomial_string(), "5/2*s^2 + 7/2*s + 1");
        for s in 0..20 {
            assert_eq!(
                f.eval(s),
                Rational::from_integer(BigInt::from((s + 1) * (5 * s + 2) / 2))
            );
        }

        // not polynomial until s = 3
        let vals = [1u64, 5, 9, 10, 11, 12, 13];
        let f = hilbert_polynomial(&vals).unwrap();
        assert_eq!((f.dimension, f.degree), (Some(1), 1));

        assert!(hilbert_polynomial(&[1, 2]).is_none());
        assert!(hilbert_polynomial(&[1, 4, 9]).is_none());
        let empty = hilbert_polynomial(&[1, 2, 0, 0, 0]).unwrap();
        assert_eq!((empty.dimension, empty.degree), (None, 0));
    }

    #[test]
    fn series_route_matches_fit() {
        for (a, b, g) in [
            (vec![1, 1], vec![2, 3], DIAG),
            (vec![1, 1], vec![2, 2], DIAG_SQ),
            (vec![1, 1], vec![1, 1], DIAG),
        ] {
            let spec = ScrollSpec::parse(&a, &b, &[g]).unwrap();
            let h = ScrollHilbert::new(&spec, &MonomialOrder::grevlex(), &opts()).unwrap();
            let rep = h.report(DEFAULT_S_MAX).unwrap();
            let (dim, deg) = series_dimension_degree(h.target_series());
            assert_eq!((rep.fit.dimension, rep.fit.degree), (dim, deg));
            assert!(rep.agree);
        }
    }

    #[test]
    fn dimension_checks() {
        let spec = ScrollSpec::parse(&[1, 1], &[2, 3], &[DIAG]).unwrap();
        let h = ScrollHilbert::new(&spec, &MonomialOrder::grevlex(), &opts()).unwrap();
        assert_eq!(
            h.dimension_check(),
            DimensionCheck {
                source: 3,
                target: 3,
                ok: true
            }
        );
        let join = ScrollSpec::new(&[1, 1], &[1, 1], vec![]).unwrap();
        let h = ScrollHilbert::new(&join, &MonomialOrder::grevlex(), &opts()).unwrap();
        assert_eq!(
            h.dimension_check(),
            DimensionCheck {
                source: 4,
                target: 4,
                ok: true
            }
        );
    }

    #[test]
    fn gorenstein_examples() {
        let md = |v: &[u32]| Multidegree(v.to_vec());
        let carpet = gorenstein_ci_check(&[1, 1], &[5, 7], &[md(&[2, 2])]);
        assert!(carpet.gorenstein && carpet.calabi_yau);
        assert_eq!(carpet.lambdas, Some(vec![0, 0]));
        for b in [[1u32, 1u32], [2, 3], [4, 1]] {
            let cy = gorenstein_ci_check(&[2, 1], &b, &[md(&[3, 2])]);
            assert!(cy.calabi_yau && cy.gorenstein);
        }
        let scroll = gorenstein_ci_check(&[1, 1], &[2, 3], &[md(&[1, 1])]);
        assert_eq!(scroll.v, vec![1, 1]);
        assert!(!scroll.gorenstein && !scroll.calabi_yau && scroll.lambdas.is_none());
        let segre = gorenstein_ci_check(&[1, 1], &[1, 1], &[md(&[1, 1])]);
        assert!(segre.gorenstein && !segre.calabi_yau);
        assert_eq!(segre.lambdas, Some(vec![-1, -1]));
        let det = gorenstein_from_a_invariant(&[-1, -1, -1], &[1, 1, 1]);
        assert!(det.gorenstein);
        assert!(!gorenstein_from_a_invariant(&[-1, -1, -1], &[2, 1, 1]).gorenstein);
    }
}
