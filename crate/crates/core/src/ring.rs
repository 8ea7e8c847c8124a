//! Block-structured polynomial rings.
//!
//! A source ring has blocks of variables `x{i}_{j}` (block `i` is 1-based in
//! names, `0 <= j <= a_i`). A target ring has variables `z{i}_[α]` for every
//! exponent vector `α` on `a_i + 1` slots with `|α| = b_i`. Variable 0 is the
//! largest in every order; within a block, `z` variables run lex-descending
//! in `α`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A vector in `Z^n` recording the block grading.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multidegree(pub Vec<u32>);

impl Multidegree {
    pub fn zero(n: usize) -> Self {
        Multidegree(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut d = vec![0; n];
        d[i] = 1;
        Multidegree(d)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

impl std::ops::Add for &Multidegree {
    type Output = Multidegree;
    fn add(self, rhs: &Multidegree) -> Multidegree {
        assert_eq!(self.len(), rhs.len(), "multidegree length mismatch");
        Multidegree(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, d) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// Exponent vector with one slot per ring variable.
///
/// `Ord` is graded reverse lexicographic with variable 0 largest, which is
/// also the storage order of polynomial terms.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into_boxed_slice())
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps.into_boxed_slice())
    }

    pub fn var(nvars: usize, i: usize, power: u32) -> Self {
        let mut e = vec![0; nvars];
        e[i] = power;
        Monomial::from_exponents(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| {
                    a.checked_add(*b)
                        .unwrap_or_else(|| panic!("exponent overflow multiplying monomials"))
                })
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(
            self.0
                .iter()
                .map(|e| {
                    e.checked_mul(k)
                        .unwrap_or_else(|| panic!("exponent overflow in monomial power"))
                })
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(
            other
                .0
                .iter()
                .zip(self.0.iter())
                .map(|(b, a)| b - a)
                .collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Indices of variables with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.0.iter().zip(other.0.iter()).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum VarLabel {
    /// `x{block}_{j}`
    X(u32),
    /// `z{block}_[α]`
    Z(Vec<u32>),
    /// Auxiliary variable outside the block structure.
    Aux(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Variable {
    /// 0-based block index; auxiliary variables use `usize::MAX`.
    pub block: usize,
    pub label: VarLabel,
}

impl Variable {
    pub fn name(&self) -> String {
        match &self.label {
            VarLabel::X(j) => format!("x{}_{}", self.block + 1, j),
            VarLabel::Z(alpha) => {
                let parts: Vec<String> = alpha.iter().map(|e| e.to_string()).collect();
                format!("z{}_[{}]", self.block + 1, parts.join(","))
            }
            VarLabel::Aux(name) => name.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    /// Cox ring `A` with `x` variables.
    Source,
    /// Scroll ring `S` with `z` variables for the vector `b`.
    Target { b: Vec<u32> },
    /// `x` variables followed by `z` variables; used to compute kernels.
    Joint { b: Vec<u32> },
}

#[derive(Clone, Debug)]
pub struct Ring {
    a: Vec<u32>,
    kind: RingKind,
    vars: Vec<Variable>,
    by_name: HashMap<String, usize>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.kind == other.kind && self.vars == other.vars
    }
}

impl Eq for Ring {}

fn check_a(a: &[u32]) -> Result<()> {
    if a.is_empty() {
        return Err(Error::InvalidRing("at least one block is required".into()));
    }
    if a.contains(&0) {
        return Err(Error::InvalidRing(format!(
            "every block size must be positive, got a = {a:?}"
        )));
    }
    Ok(())
}

fn check_b(a: &[u32], b: &[u32]) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::InvalidRing(format!(
            "a and b must have equal length, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    if b.contains(&0) {
        return Err(Error::InvalidRing(format!(
            "every entry of b must be positive, got b = {b:?}"
        )));
    }
    Ok(())
}

fn x_vars(a: &[u32]) -> Vec<Variable> {
    a.iter()
        .enumerate()
        .flat_map(|(i, &ai)| {
            (0..=ai).map(move |j| Variable {
                block: i,
                label: VarLabel::X(j),
            })
        })
        .collect()
}

fn z_vars(a: &[u32], b: &[u32]) -> Vec<Variable> {
    a.iter()
        .zip(b)
        .enumerate()
        .flat_map(|(i, (&ai, &bi))| {
            compositions(bi, ai as usize + 1)
                .into_iter()
                .map(move |alpha| Variable {
                    block: i,
                    label: VarLabel::Z(alpha),
                })
        })
        .collect()
}

impl Ring {
    fn build(a: Vec<u32>, kind: RingKind, vars: Vec<Variable>) -> Arc<Ring> {
        let by_name = vars
            .iter()
            .enumerate()
            .map(|(i, v)| (v.name(), i))
            .collect();
        Arc::new(Ring {
            a,
            kind,
            vars,
            by_name,
        })
    }

    pub fn source(a: &[u32]) -> Result<Arc<Ring>> {
        check_a(a)?;
        Ok(Ring::build(a.to_vec(), RingKind::Source, x_vars(a)))
    }

    pub fn target(a: &[u32], b: &[u32]) -> Result<Arc<Ring>> {
        check_a(a)?;
        check_b(a, b)?;
        Ok(Ring::build(
            a.to_vec(),
            RingKind::Target { b: b.to_vec() },
            z_vars(a, b),
        ))
    }

    pub fn joint(a: &[u32], b: &[u32]) -> Result<Arc<Ring>> {
        check_a(a)?;
        check_b(a, b)?;
        let mut vars = x_vars(a);
        vars.extend(z_vars(a, b));
        Ok(Ring::build(
            a.to_vec(),
            RingKind::Joint { b: b.to_vec() },
            vars,
        ))
    }

    /// Copy of this ring with one auxiliary variable prepended (largest).
    pub fn with_aux(&self, name: &str) -> Arc<Ring> {
        let mut vars = vec![Variable {
            block: usize::MAX,
            label: VarLabel::Aux(name.to_string()),
        }];
        vars.extend(self.vars.iter().cloned());
        Ring::build(self.a.clone(), self.kind.clone(), vars)
    }

    pub fn a(&self) -> &[u32] {
        &self.a
    }

    pub fn b(&self) -> Option<&[u32]> {
        match &self.kind {
            RingKind::Source => None,
            RingKind::Target { b } | RingKind::Joint { b } => Some(b),
        }
    }

    pub fn kind(&self) -> &RingKind {
        &self.kind
    }

    pub fn nblocks(&self) -> usize {
        self.a.len()
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> String {
        self.vars[i].name()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.by_name.get(name).copied()
    }

    /// Index of `x{block+1}_{j}`.
    pub fn x_var(&self, block: usize, j: u32) -> Option<usize> {
        self.vars
            .iter()
            .position(|v| v.block == block && v.label == VarLabel::X(j))
    }

    /// Index of `z{block+1}_[alpha]`.
    pub fn z_var(&self, block: usize, alpha: &[u32]) -> Option<usize> {
        self.vars
            .iter()
            .position(|v| v.block == block && matches!(&v.label, VarLabel::Z(a) if a == alpha))
    }

    /// Variables of kind `x` in `block`, in ring order.
    pub fn x_vars_of_block(&self, block: usize) -> Vec<usize> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(_, v)| v.block == block && matches!(v.label, VarLabel::X(_)))
            .map(|(i, _)| i)
            .collect()
    }

    /// Variables of kind `z` in `block`, in ring order.
    pub fn z_vars_of_block(&self, block: usize) -> Vec<usize> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(_, v)| v.block == block && matches!(v.label, VarLabel::Z(_)))
            .map(|(i, _)| i)
            .collect()
    }

    /// Contribution of variable `i` to the `Z^n` grading. `x` and target-ring
    /// `z` variables have degree `e_i`; in a joint ring `z` variables have
    /// degree `b_i e_i` so that `z_α - x^α` is homogeneous.
    pub fn var_multidegree(&self, i: usize) -> Multidegree {
        let n = self.nblocks();
        let v = &self.vars[i];
        match (&v.label, &self.kind) {
            (VarLabel::Aux(_), _) => Multidegree::zero(n),
            (VarLabel::Z(_), RingKind::Joint { b }) => {
                let mut d = vec![0; n];
                d[v.block] = b[v.block];
                Multidegree(d)
            }
            _ => Multidegree::unit(n, v.block),
        }
    }

    pub fn monomial_multidegree(&self, m: &Monomial) -> Multidegree {
        let mut d = vec![0u32; self.nblocks()];
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let v = &self.vars[i];
            match (&v.label, &self.kind) {
                (VarLabel::Aux(_), _) => {}
                (VarLabel::Z(_), RingKind::Joint { b }) => d[v.block] += e * b[v.block],
                _ => d[v.block] += e,
            }
        }
        Multidegree(d)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.var_name(i)),
                _ => parts.push(format!("{}^{}", self.var_name(i), e)),
            }
        }
        parts.join("*")
    }
}

/// All vectors of `parts` nonnegative integers summing to `total`, in
/// lex-descending order (`[total, 0, ..]` first).
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn rec(total: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=total).rev() {
            prefix.push(first);
            rec(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}

/// Every monomial of multidegree `d`, listed in descending storage order.
///
/// Only meaningful for source and target rings, where each variable has
/// degree `e_block`.
pub fn monomials_of_multidegree(ring: &Ring, d: &Multidegree) -> Vec<Monomial> {
    assert_eq!(d.len(), ring.nblocks(), "multidegree length mismatch");
    let blocks: Vec<Vec<usize>> = (0..ring.nblocks())
        .map(|i| {
            let mut vars = ring.x_vars_of_block(i);
            vars.extend(ring.z_vars_of_block(i));
            vars
        })
        .collect();
    let mut out = vec![vec![0u32; ring.nvars()]];
    for (i, vars) in blocks.iter().enumerate() {
        let comps = compositions(d.0[i], vars.len());
        let mut next = Vec::with_capacity(out.len() * comps.len());
        for partial in &out {
            for c in &comps {
                let mut e = partial.clone();
                for (&v, &k) in vars.iter().zip(c) {
                    e[v] = k;
                }
                next.push(e);
            }
        }
        out = next;
    }
    let mut monos: Vec<Monomial> = out.into_iter().map(Monomial::from_exponents).collect();
    monos.sort_by(|a, b| b.cmp(a));
    monos
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
