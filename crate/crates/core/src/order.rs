use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::Monomial;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Grevlex,
    Lex,
    /// Product order: grevlex on the flagged variables first, then grevlex on
    /// the rest. Any monomial involving a flagged variable beats every
    /// monomial that does not.
    BlockElim {
        eliminate: Vec<bool>,
    },
    /// Compare the weight `w · e` first, break ties by grevlex.
    WeightGrevlex {
        weights: Vec<i64>,
    },
}

/// A monomial order together with a variable priority list.
///
/// `priority[k]` is the variable treated as the `k`-th largest. `None` means
/// the ring's own variable order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Option<Vec<usize>>,
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::grevlex()
    }
}

impl MonomialOrder {
    pub fn grevlex() -> Self {
        MonomialOrder {
            kind: OrderKind::Grevlex,
            priority: None,
        }
    }

    pub fn lex() -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            priority: None,
        }
    }

    pub fn block_elim(eliminate: Vec<bool>) -> Self {
        MonomialOrder {
            kind: OrderKind::BlockElim { eliminate },
            priority: None,
        }
    }

    pub fn weighted(weights: Vec<i64>) -> Self {
        MonomialOrder {
            kind: OrderKind::WeightGrevlex { weights },
            priority: None,
        }
    }

    /// Panics unless `priority` is a permutation of `0..priority.len()`.
    pub fn with_priority(mut self, priority: Vec<usize>) -> Self {
        let mut seen = vec![false; priority.len()];
        for &v in &priority {
            assert!(
                v < seen.len() && !seen[v],
                "priority list must be a permutation"
            );
            seen[v] = true;
        }
        self.priority = Some(priority);
        self
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    pub fn priority(&self) -> Option<&[usize]> {
        self.priority.as_deref()
    }

    /// Parse `grevlex`, `lex` or `weight:w1,w2,...`.
    pub fn parse(name: &str) -> Result<Self> {
        let name = name.trim();
        match name {
            "grevlex" => Ok(Self::grevlex()),
            "lex" => Ok(Self::lex()),
            _ => {
                if let Some(rest) = name.strip_prefix("weight:") {
                    let weights = rest
                        .split(',')
                        .map(|w| w.trim().parse::<i64>())
                        .collect::<std::result::Result<Vec<_>, _>>()
                        .map_err(|e| Error::InvalidSpec(format!("bad weight vector: {e}")))?;
                    Ok(Self::weighted(weights))
                } else {
                    Err(Error::InvalidSpec(format!(
                        "unknown monomial order `{name}` (expected grevlex, lex or weight:...)"
                    )))
                }
            }
        }
    }

    #[inline]
    fn var_at(&self, rank: usize) -> usize {
        match &self.priority {
            Some(p) => p[rank],
            None => rank,
        }
    }

    fn grevlex_on(&self, a: &[u32], b: &[u32], take: impl Fn(usize) -> bool) -> Ordering {
        let n = a.len();
        let (mut da, mut db) = (0u64, 0u64);
        for v in 0..n {
            if take(v) {
                da += a[v] as u64;
                db += b[v] as u64;
            }
        }
        if da != db {
            return da.cmp(&db);
        }
        for rank in (0..n).rev() {
            let v = self.var_at(rank);
            if take(v) && a[v] != b[v] {
                return b[v].cmp(&a[v]);
            }
        }
        Ordering::Equal
    }

    pub fn cmp(&self, x: &Monomial, y: &Monomial) -> Ordering {
        let a = x.exponents();
        let b = y.exponents();
        debug_assert_eq!(a.len(), b.len());
        match &self.kind {
            OrderKind::Grevlex => self.grevlex_on(a, b, |_| true),
            OrderKind::Lex => {
                for rank in 0..a.len() {
                    let v = self.var_at(rank);
                    if a[v] != b[v] {
                        return a[v].cmp(&b[v]);
                    }
                }
                Ordering::Equal
            }
            OrderKind::BlockElim { eliminate } => self
                .grevlex_on(a, b, |v| eliminate[v])
                .then_with(|| self.grevlex_on(a, b, |v| !eliminate[v])),
            OrderKind::WeightGrevlex { weights } => {
                let wa: i64 = a.iter().zip(weights).map(|(&e, &w)| e as i64 * w).sum();
                let wb: i64 = b.iter().zip(weights).map(|(&e, &w)| e as i64 * w).sum();
                wa.cmp(&wb).then_with(|| self.grevlex_on(a, b, |_| true))
            }
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            OrderKind::Grevlex => write!(f, "grevlex")?,
            OrderKind::Lex => write!(f, "lex")?,
            OrderKind::BlockElim { eliminate } => {
                let k = eliminate.iter().filter(|&&e| e).count();
                write!(f, "block-elim({k} of {})", eliminate.len())?
            }
            OrderKind::WeightGrevlex { weights } => {
                let w: Vec<String> = weights.iter().map(|w| w.to_string()).collect();
                write!(f, "weight:{}", w.join(","))?
            }
        }
        if let Some(p) = &self.priority {
            write!(f, " priority {p:?}")?;
        }
        Ok(())
    }
}
