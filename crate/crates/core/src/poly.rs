//! Sparse multigraded polynomials with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::ring::{Monomial, Multidegree, Ring};

/// Outcome of asking a nonzero polynomial for its multidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Grading {
    Homogeneous(Multidegree),
    Inhomogeneous,
}

/// Terms are kept sorted by descending grevlex with no zero coefficients.
#[derive(Clone)]
pub struct Polynomial<F: Field = Rational> {
    ring: Arc<Ring>,
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring)
            && self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: F) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, F::one())
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: F) -> Self {
        assert_eq!(
            m.nvars(),
            ring.nvars(),
            "monomial has wrong number of variables"
        );
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), i, 1), F::one())
    }

    /// Build from arbitrary terms: sorts, merges duplicates, drops zeros.
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut acc: BTreeMap<Monomial, F> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(
                m.nvars(),
                ring.nvars(),
                "monomial has wrong number of variables"
            );
            match acc.get_mut(&m) {
                Some(e) => *e = e.clone() + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let terms = acc
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Coefficient of `m`, zero if absent.
    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .map(|k| self.terms[k].1.clone())
            .unwrap_or_else(|_| F::zero())
    }

    pub fn multidegree(&self) -> Result<Grading> {
        let mut it = self.terms.iter();
        let first = match it.next() {
            Some((m, _)) => self.ring.monomial_multidegree(m),
            None => return Err(Error::ZeroPolynomial),
        };
        for (m, _) in it {
            if self.ring.monomial_multidegree(m) != first {
                return Ok(Grading::Inhomogeneous);
            }
        }
        Ok(Grading::Homogeneous(first))
    }

    /// The multidegree, or an error naming the offending polynomial.
    pub fn homogeneous_degree(&self) -> Result<Multidegree> {
        match self.multidegree()? {
            Grading::Homogeneous(d) => Ok(d),
            Grading::Inhomogeneous => Err(Error::Inhomogeneous(self.to_string())),
        }
    }

    pub fn is_multihomogeneous(&self) -> bool {
        matches!(self.multidegree(), Ok(Grading::Homogeneous(_)))
    }

    /// Set of variables that occur.
    pub fn support(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.nvars()];
        for (m, _) in &self.terms {
            for v in m.support() {
                used[v] = true;
            }
        }
        (0..used.len()).filter(|&v| used[v]).collect()
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        if !same_ring(&self.ring, &rhs.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: merge(&self.terms, &rhs.terms, &F::one()),
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        if !same_ring(&self.ring, &rhs.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: merge(&self.terms, &rhs.terms, &-F::one()),
        })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if !same_ring(&self.ring, &rhs.ring) {
            return Err(Error::RingMismatch);
        }
        let mut acc: BTreeMap<Monomial, F> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let m = m1.mul(m2);
                let c = c1.clone() * c2;
                match acc.get_mut(&m) {
                    Some(e) => *e = e.clone() + &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let terms = acc
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a.clone() * c))
                .collect(),
        }
    }

    /// Rewrite into `target`, sending variable `i` to `var_map[i]`. Returns
    /// `None` if a used variable has no image.
    pub fn transfer(&self, target: &Arc<Ring>, var_map: &[Option<usize>]) -> Option<Self> {
        assert_eq!(var_map.len(), self.ring.nvars());
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.nvars()];
            for (i, &k) in m.exponents().iter().enumerate() {
                if k > 0 {
                    e[var_map[i]?] += k;
                }
            }
            terms.push((Monomial::from_exponents(e), c.clone()));
        }
        Some(Polynomial::from_terms(target, terms))
    }

    /// Map coefficients into another field.
    pub fn map_coefficients<G: Field>(&self, f: impl Fn(&F) -> G) -> Polynomial<G> {
        Polynomial::from_terms(
            &self.ring,
            self.terms.iter().map(|(m, c)| (m.clone(), f(c))),
        )
    }
}

/// `a + s * b` over descending term lists.
pub(crate) fn merge<F: Field>(
    a: &[(Monomial, F)],
    b: &[(Monomial, F)],
    s: &F,
) -> Vec<(Monomial, F)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((b[j].0.clone(), b[j].1.clone() * s));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = a[i].1.clone() + &(b[j].1.clone() * s);
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|(m, c)| (m.clone(), c.clone() * s)));
    out
}

impl<'a, F: Field> Add<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        self.checked_add(rhs).expect("ring mismatch in +")
    }
}

impl<'a, F: Field> Sub<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        self.checked_sub(rhs).expect("ring mismatch in -")
    }
}

impl<'a, F: Field> Mul<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        self.checked_mul(rhs).expect("ring mismatch in *")
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        self.scale(&-F::one())
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", self.ring.format_monomial(m))?;
            } else {
                write!(f, "{abs}*{}", self.ring.format_monomial(m))?;
            }
        }
        Ok(())
    }
}
