//! Integer Chow ring of `P^a = P^{a_1} x ... x P^{a_n}`:
//! `Z[h_1, ..., h_n] / (h_1^{a_1+1}, ..., h_n^{a_n+1})`.
//!
//! Classes are stored by their `h`-exponents `β`. A cycle of dimension `d`
//! has class `Σ r_α h^{a-α}` with `|α| = d`, and its scroll has degree
//! `Σ r_α b^α`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{compositions, Multidegree};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChowClass {
    a: Vec<u32>,
    coeffs: BTreeMap<Vec<u32>, i64>,
}

impl ChowClass {
    pub fn zero(a: &[u32]) -> Self {
        ChowClass {
            a: a.to_vec(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(a: &[u32]) -> Self {
        Self::monomial(a, vec![0; a.len()], 1)
    }

    /// The hyperplane class `h_i` of factor `i` (0-based).
    pub fn hyperplane(a: &[u32], i: usize) -> Self {
        let mut e = vec![0; a.len()];
        e[i] = 1;
        Self::monomial(a, e, 1)
    }

    /// `c * h^beta`, zero if some `beta_i > a_i`.
    pub fn monomial(a: &[u32], beta: Vec<u32>, c: i64) -> Self {
        assert_eq!(beta.len(), a.len());
        let mut out = Self::zero(a);
        if c != 0 && beta.iter().zip(a).all(|(b, a)| b <= a) {
            out.coeffs.insert(beta, c);
        }
        out
    }

    pub fn ambient(&self) -> &[u32] {
        &self.a
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, beta: &[u32]) -> i64 {
        self.coeffs.get(beta).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], i64)> {
        self.coeffs.iter().map(|(b, &c)| (b.as_slice(), c))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.a != other.a {
            return Err(Error::InvalidRing(format!(
                "Chow classes on different products: a = {:?} and a = {:?}",
                self.a, other.a
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (b, &c) in &other.coeffs {
            *out.coeffs.entry(b.clone()).or_insert(0) += c;
        }
        out.coeffs.retain(|_, c| *c != 0);
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero(&self.a);
        if k != 0 {
            out.coeffs = self
                .coeffs
                .iter()
                .map(|(b, &c)| (b.clone(), c * k))
                .collect();
        }
        out
    }

    /// Truncated product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(&self.a);
        for (b1, &c1) in &self.coeffs {
            for (b2, &c2) in &other.coeffs {
                let beta: Vec<u32> = b1.iter().zip(b2).map(|(x, y)| x + y).collect();
                if beta.iter().zip(&self.a).all(|(b, a)| b <= a) {
                    *out.coeffs.entry(beta).or_insert(0) += c1 * c2;
                }
            }
        }
        out.coeffs.retain(|_, c| *c != 0);
        Ok(out)
    }

    /// Class of a divisor of multidegree `d`: `Σ d_i h_i`.
    pub fn divisor(a: &[u32], d: &Multidegree) -> Self {
        assert_eq!(d.len(), a.len());
        let mut out = Self::zero(a);
        for (i, &di) in d.as_slice().iter().enumerate() {
            out = out
                .add(&Self::hyperplane(a, i).scale(di as i64))
                .expect("same ambient");
        }
        out
    }

    /// Parse text such as `2*h1*h2 + h3^1 - 1`.
    pub fn parse(a: &[u32], text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidSpec(format!("bad Chow class `{text}`: {msg}"));
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        let mut out = Self::zero(a);
        let mut rest = compact.as_str();
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        }
        loop {
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let term = &rest[..end];
            let mut coeff = sign;
            let mut beta = vec![0u32; a.len()];
            for (k, factor) in term.split('*').enumerate() {
                if let Some(h) = factor.strip_prefix('h') {
                    let (idx, pow) = match h.split_once('^') {
                        Some((i, p)) => (i, p.parse::<u32>().map_err(|_| bad("exponent"))?),
                        None => (h, 1),
                    };
                    let idx: usize = idx.parse().map_err(|_| bad("factor index"))?;
                    if idx == 0 || idx > a.len() {
                        return Err(bad("factor index out of range"));
                    }
                    beta[idx - 1] += pow;
                } else if k == 0 {
                    coeff *= factor.parse::<i64>().map_err(|_| bad("coefficient"))?;
                } else {
                    return Err(bad("coefficient must come first"));
                }
            }
            out = out.add(&Self::monomial(a, beta, coeff))?;
            if end == rest.len() {
                break;
            }
            sign = if rest[end..].starts_with('-') { -1 } else { 1 };
            rest = &rest[end + 1..];
        }
        Ok(out)
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        // highest codimension first, then lex-descending exponents
        let mut terms: Vec<(&Vec<u32>, i64)> = self.coeffs.iter().map(|(b, &c)| (b, c)).collect();
        terms.sort_by(|x, y| {
            let dx: u32 = x.0.iter().sum();
            let dy: u32 = y.0.iter().sum();
            dy.cmp(&dx).then_with(|| y.0.cmp(x.0))
        });
        for (k, (beta, c)) in terms.into_iter().enumerate() {
            let mono: Vec<String> = beta
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("h{}", i + 1)
                    } else {
                        format!("h{}^{}", i + 1, e)
                    }
                })
                .collect();
            let mag = c.unsigned_abs();
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            match (mono.is_empty(), mag) {
                (true, _) => write!(f, "{mag}")?,
                (false, 1) => write!(f, "{}", mono.join("*"))?,
                (false, _) => write!(f, "{mag}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

pub fn chow_mul(u: &ChowClass, v: &ChowClass) -> Result<ChowClass> {
    u.mul(v)
}

/// `Π_j (Σ_i d_{j,i} h_i)`.
pub fn complete_intersection_class(degs: &[Multidegree], a: &[u32]) -> ChowClass {
    degs.iter().fold(ChowClass::one(a), |acc, d| {
        acc.mul(&ChowClass::divisor(a, d)).expect("same ambient")
    })
}

/// Class of the small diagonal in `(P^a)^n`: every `h^β` with
/// `0 <= β_i <= a` and `|β| = a(n-1)`, each with coefficient 1.
pub fn diagonal_class(a: u32, n: usize) -> ChowClass {
    let amb = vec![a; n];
    let mut out = ChowClass::zero(&amb);
    for beta in compositions(a * (n as u32 - 1), n) {
        if beta.iter().all(|&e| e <= a) {
            out.coeffs.insert(beta, 1);
        }
    }
    out
}

/// `Σ_{|α| = d} r_α Π b_i^{α_i}` for `c = Σ r_α h^{a-α}`.
pub fn degree_from_class(c: &ChowClass, b: &[u32], d: u32) -> i64 {
    assert_eq!(b.len(), c.a.len());
    let mut total = 0i64;
    for (beta, &r) in &c.coeffs {
        let alpha: Vec<u32> = c.a.iter().zip(beta).map(|(a, be)| a - be).collect();
        if alpha.iter().sum::<u32>() == d {
            let prod: i64 = alpha
                .iter()
                .zip(b)
                .map(|(&al, &bi)| (bi as i64).pow(al))
                .product();
            total += r * prod;
        }
    }
    total
}

/// Degree of the scroll over a divisor of type `d`:
/// `Σ_i d_i b_i^{a_i-1} Π_{j != i} b_j^{a_j}`.
pub fn divisor_degree(d: &Multidegree, a: &[u32], b: &[u32]) -> i64 {
    let n = a.len();
    (0..n)
        .map(|i| {
            let mut term = d.as_slice()[i] as i64 * (b[i] as i64).pow(a[i] - 1);
            for j in (0..n).filter(|&j| j != i) {
                term *= (b[j] as i64).pow(a[j]);
            }
            term
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(a: &[u32], i: usize) -> ChowClass {
        ChowClass::hyperplane(a, i)
    }

    #[test]
    fn truncation_and_unit() {
        let a = [1, 1];
        assert!(h(&a, 0).mul(&h(&a, 0)).unwrap().is_zero());
        let u = h(&a, 0).add(&h(&a, 1).scale(3)).unwrap();
        assert_eq!(u.mul(&ChowClass::one(&a)).unwrap(), u);
        assert!(h(&a, 0).mul(&h(&[1, 1, 1], 0)).is_err());
    }

    #[test]
    fn trilinear_square() {
        let a = [1, 1, 1];
        let s = h(&a, 0).add(&h(&a, 1)).unwrap().add(&h(&a, 2)).unwrap();
        let sq = s.mul(&s).unwrap();
        assert_eq!(sq.to_string(), "2*h1*h2 + 2*h1*h3 + 2*h2*h3");
        let t = Multidegree(vec![1, 1, 1]);
        assert_eq!(complete_intersection_class(&[t.clone(), t], &a), sq);
        assert_eq!(sq, diagonal_class(1, 3).scale(2));
    }

    #[test]
    fn complete_intersections() {
        let c = complete_intersection_class(&[Multidegree(vec![3, 2])], &[2, 1]);
        assert_eq!(c.to_string(), "3*h1 + 2*h2");
        assert_eq!(
            complete_intersection_class(&[], &[2, 1]),
            ChowClass::one(&[2, 1])
        );
    }

    #[test]
    fn diagonal_classes() {
        assert_eq!(diagonal_class(1, 2).to_string(), "h1 + h2");
        assert_eq!(diagonal_class(2, 2).to_string(), "h1^2 + h1*h2 + h2^2");
        assert_eq!(diagonal_class(1, 3).to_string(), "h1*h2 + h1*h3 + h2*h3");
    }

    #[test]
    fn degrees() {
        for b1 in 1..5u32 {
            for b2 in 1..5u32 {
                let b = [b1, b2];
                let (x, y) = (b1 as i64, b2 as i64);
                assert_eq!(degree_from_class(&diagonal_class(1, 2), &b, 1), x + y);
                assert_eq!(
                    degree_from_class(&diagonal_class(1, 2).scale(2), &b, 1),
                    2 * (x + y)
                );
                let c = ChowClass::parse(&[2, 1], "3*h1 + 2*h2").unwrap();
                assert_eq!(degree_from_class(&c, &b, 2), 3 * x * y + 2 * x * x);
                assert_eq!(
                    divisor_degree(&Multidegree(vec![2, 2]), &[1, 1], &b),
                    2 * x + 2 * y
                );
                assert_eq!(
                    divisor_degree(&Multidegree(vec![3, 2]), &[2, 1], &b),
                    3 * x * y + 2 * x * x
                );
                assert_eq!(
                    degree_from_class(&diagonal_class(2, 2), &b, 2),
                    x * x + x * y + y * y
                );
            }
        }
        assert_eq!(
            divisor_degree(&Multidegree(vec![0, 0]), &[1, 1], &[3, 4]),
            0
        );
        let d3 = degree_from_class(&diagonal_class(1, 3), &[2, 3, 4], 1);
        assert_eq!(d3, 9);
    }

    #[test]
    fn parse_and_display_roundtrip() {
        let a = [2, 1];
        for text in ["0", "1", "-h1", "h1^2*h2 - 3*h2 + 7", "2*h1*h2 + 2*h1^2"] {
            let c = ChowClass::parse(&a, text).unwrap();
            assert_eq!(ChowClass::parse(&a, &c.to_string()).unwrap(), c, "{text}");
        }
        assert!(ChowClass::parse(&a, "h3").is_err());
        assert!(ChowClass::parse(&a, "h1*2").is_err());
        assert!(ChowClass::parse(&a, "h1^3").unwrap().is_zero());
    }

    /// Every `a` with `Σ a_i <= 5` and `n <= 3`.
    fn ambients() -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for n in 1..=3usize {
            for total in n as u32..=5 {
                for c in compositions(total - n as u32, n) {
                    out.push(c.iter().map(|x| x + 1).collect());
                }
            }
        }
        out
    }

    fn boxes(n: usize, max: u32) -> Vec<Vec<u32>> {
        (0..(max + 1).pow(n as u32))
            .map(|mut k| {
                (0..n)
                    .map(|_| {
                        let v = k % (max + 1);
                        k /= max + 1;
                        v
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn divisor_formula_matches_class_route() {
        for a in ambients() {
            let n = a.len();
            let dim = a.iter().sum::<u32>() - 1;
            for d in boxes(n, 4) {
                let class = complete_intersection_class(&[Multidegree(d.clone())], &a);
                for b in boxes(n, 4)
                    .into_iter()
                    .filter(|b| b.iter().all(|&x| x >= 1))
                {
                    assert_eq!(
                        divisor_degree(&Multidegree(d.clone()), &a, &b),
                        degree_from_class(&class, &b, dim),
                        "a={a:?} d={d:?} b={b:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn diagonal_support_counts() {
        for a in 1..=3u32 {
            for n in 1..=4usize {
                let c = diagonal_class(a, n);
                assert!(c.terms().all(|(_, k)| k == 1));
                // coefficient of t^{a(n-1)} in (1 + t + ... + t^a)^n
                let mut poly = vec![1usize];
                for _ in 0..n {
                    let mut next = vec![0usize; poly.len() + a as usize];
                    for (k, &v) in poly.iter().enumerate() {
                        for j in 0..=a as usize {
                            next[k + j] += v;
                        }
                    }
                    poly = next;
                }
                assert_eq!(c.terms().count(), poly[(a as usize) * (n - 1)]);
            }
        }
    }
}
