use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::Rational;
use crate::groebner::Ideal;
use crate::poly::Polynomial;
use crate::ring::{Monomial, Ring};

use super::ScrollSpec;

/// Three-matrix description of the scroll over a divisor of bidegree
/// `(d1, d2)` in `P^1 x P^1`.
///
/// With `z_{i,j} = z{i}_[b_i - j, j]`, `left[r][c] = z_{1,r+c}` has shape
/// `(b1-d1+1) x (d1+1)`, `right[q][s] = z_{2,q+s}` has shape
/// `(d2+1) x (b2-d2+1)`, and `coeff[p][q]` is the coefficient of
/// `x1_0^{d1-p} x1_1^p x2_0^{d2-q} x2_1^q` in `f`.
#[derive(Clone, Debug)]
pub struct MatrixForm {
    ring: Arc<Ring>,
    pub bidegree: (u32, u32),
    pub left: Vec<Vec<usize>>,
    pub coeff: Vec<Vec<Rational>>,
    pub right: Vec<Vec<usize>>,
    /// 2-minors of the two-row catalecticant of each block.
    pub veronese_minors: [Vec<Polynomial>; 2],
    /// Entries of `left * coeff * right`, row by row.
    pub composition: Vec<Vec<Polynomial>>,
}

fn catalecticant_var(ring: &Ring, block: usize, b: u32, j: u32) -> usize {
    ring.z_var(block, &[b - j, j]).expect("z variable")
}

fn two_row_minors(ring: &Arc<Ring>, block: usize, b: u32) -> Vec<Polynomial> {
    let z = |j: u32| Polynomial::var(ring, catalecticant_var(ring, block, b, j));
    let mut out = Vec::new();
    for k in 0..b {
        for l in k + 1..b {
            out.push(&(&z(k) * &z(l + 1)) - &(&z(k + 1) * &z(l)));
        }
    }
    out
}

pub fn matrix_form(spec: &ScrollSpec) -> Result<MatrixForm> {
    if spec.a() != [1, 1] {
        return Err(Error::Shape(format!(
            "needs a = (1,1), got a = {:?}",
            spec.a()
        )));
    }
    if spec.gens().len() != 1 {
        return Err(Error::Shape(format!(
            "needs exactly one generator, got {}",
            spec.gens().len()
        )));
    }
    let f = &spec.gens()[0];
    let d = f.homogeneous_degree()?;
    let (d1, d2) = (d.0[0], d.0[1]);
    let (b1, b2) = (spec.b()[0], spec.b()[1]);
    if d1 == 0 || d2 == 0 || d1 > b1 || d2 > b2 {
        return Err(Error::Shape(format!(
            "bidegree ({d1},{d2}) must satisfy (1,1) <= d <= b = ({b1},{b2})"
        )));
    }
    let ring = spec.target().clone();
    let src = spec.source();
    let left: Vec<Vec<usize>> = (0..=b1 - d1)
        .map(|r| {
            (0..=d1)
                .map(|c| catalecticant_var(&ring, 0, b1, r + c))
                .collect()
        })
        .collect();
    let right: Vec<Vec<usize>> = (0..=d2)
        .map(|q| {
            (0..=b2 - d2)
                .map(|s| catalecticant_var(&ring, 1, b2, q + s))
                .collect()
        })
        .collect();
    let coeff: Vec<Vec<Rational>> = (0..=d1)
        .map(|p| {
            (0..=d2)
                .map(|q| {
                    let mut e = vec![0u32; 4];
                    e[src.x_var(0, 0).expect("x1_0")] = d1 - p;
                    e[src.x_var(0, 1).expect("x1_1")] = p;
                    e[src.x_var(1, 0).expect("x2_0")] = d2 - q;
                    e[src.x_var(1, 1).expect("x2_1")] = q;
                    f.coefficient(&Monomial::from_exponents(e))
                })
                .collect()
        })
        .collect();

    let composition = left
        .iter()
        .map(|lrow| {
            (0..right[0].len())
                .map(|s| {
                    let mut entry = Polynomial::zero(&ring);
                    for (p, &lv) in lrow.iter().enumerate() {
                        for (q, rrow) in right.iter().enumerate() {
                            let c = &coeff[p][q];
                            if c.is_zero() {
                                continue;
                            }
                            let m = Monomial::var(ring.nvars(), lv, 1).mul(&Monomial::var(
                                ring.nvars(),
                                rrow[s],
                                1,
                            ));
                            entry = &entry + &Polynomial::monomial(&ring, m, c.clone());
                        }
                    }
                    entry
                })
                .collect()
        })
        .collect();

    Ok(MatrixForm {
        veronese_minors: [two_row_minors(&ring, 0, b1), two_row_minors(&ring, 1, b2)],
        ring,
        bidegree: (d1, d2),
        left,
        coeff,
        right,
        composition,
    })
}

impl MatrixForm {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn ideal(&self) -> Ideal {
        let mut gens: Vec<Polynomial> = self.veronese_minors.iter().flatten().cloned().collect();
        gens.extend(self.composition.iter().flatten().cloned());
        Ideal::new(&self.ring, gens).expect("same ring")
    }

    /// Integer view of `coeff`, when every entry is an integer.
    pub fn integer_coeff(&self) -> Option<Vec<Vec<i64>>> {
        self.coeff
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| {
                        if c.denom().is_one() {
                            i64::try_from(c.numer()).ok()
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

fn write_var_matrix(f: &mut fmt::Formatter<'_>, ring: &Ring, m: &[Vec<usize>]) -> fmt::Result {
    let cells: Vec<Vec<String>> = m
        .iter()
        .map(|row| row.iter().map(|&v| ring.var_name(v)).collect())
        .collect();
    write_cells(f, &cells)
}

fn write_cells(f: &mut fmt::Formatter<'_>, cells: &[Vec<String>]) -> fmt::Result {
    let ncols = cells.first().map_or(0, |r| r.len());
    let widths: Vec<usize> = (0..ncols)
        .map(|c| cells.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    for row in cells {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(s, &w)| format!("{s:>w$}"))
            .collect();
        writeln!(f, "  [ {} ]", line.join("  "))?;
    }
    Ok(())
}

impl fmt::Display for MatrixForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "bidegree ({},{})", self.bidegree.0, self.bidegree.1)?;
        writeln!(f, "left:")?;
        write_var_matrix(f, &self.ring, &self.left)?;
        writeln!(f, "coeff:")?;
        let cells: Vec<Vec<String>> = self
            .coeff
            .iter()
            .map(|row| row.iter().map(|c| c.to_string()).collect())
            .collect();
        write_cells(f, &cells)?;
        writeln!(f, "right:")?;
        write_var_matrix(f, &self.ring, &self.right)?;
        for (i, minors) in self.veronese_minors.iter().enumerate() {
            writeln!(f, "catalecticant minors, block {}: {}", i + 1, minors.len())?;
            for m in minors {
                writeln!(f, "  {m}")?;
            }
        }
        writeln!(f, "composition entries:")?;
        for row in &self.composition {
            for e in row {
                writeln!(f, "  {e}")?;
            }
        }
        Ok(())
    }
}
