use crate::error::Result;
use crate::field::Field;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;

use super::{GroebnerOptions, Ideal};

/// `I ∩ k[kept variables]`, generated by the members of a block-elimination
/// basis that avoid the flagged variables. The result lives in the same ring.
pub fn eliminate<F: Field>(
    ideal: &Ideal<F>,
    eliminate: &[bool],
    opts: &GroebnerOptions,
) -> Result<Ideal<F>> {
    assert_eq!(eliminate.len(), ideal.ring().nvars());
    let ord = MonomialOrder::block_elim(eliminate.to_vec());
    let gb = ideal.groebner_basis(&ord, opts)?;
    let kept = gb
        .basis()
        .iter()
        .filter(|g| g.support().iter().all(|&v| !eliminate[v]))
        .cloned()
        .collect();
    Ideal::new(ideal.ring(), kept)
}

/// Equality by mutual reduction against Gröbner bases.
pub fn ideal_equal<F: Field>(
    i: &Ideal<F>,
    j: &Ideal<F>,
    ord: &MonomialOrder,
    opts: &GroebnerOptions,
) -> Result<bool> {
    let gi = i.groebner_basis(ord, opts)?;
    let gj = j.groebner_basis(ord, opts)?;
    Ok(j.gens().iter().all(|f| gi.contains(f)) && i.gens().iter().all(|f| gj.contains(f)))
}

/// `I ∩ J` via `(t I + (1 - t) J) ∩ k[vars]`.
pub fn intersect<F: Field>(i: &Ideal<F>, j: &Ideal<F>, opts: &GroebnerOptions) -> Result<Ideal<F>> {
    let ring = i.ring();
    let big = ring.with_aux("t");
    let n = ring.nvars();
    let up: Vec<Option<usize>> = (0..n).map(|v| Some(v + 1)).collect();
    let down: Vec<Option<usize>> = std::iter::once(None).chain((0..n).map(Some)).collect();
    let t = Polynomial::<F>::var(&big, 0);
    let one_minus_t = &Polynomial::one(&big) - &t;
    let mut gens = Vec::new();
    for f in i.gens() {
        gens.push(&t * &f.transfer(&big, &up).expect("total map"));
    }
    for g in j.gens() {
        gens.push(&one_minus_t * &g.transfer(&big, &up).expect("total map"));
    }
    let mut flags = vec![false; n + 1];
    flags[0] = true;
    let elim = eliminate(&Ideal::new(&big, gens)?, &flags, opts)?;
    let back = elim
        .gens()
        .iter()
        .map(|g| g.transfer(ring, &down).expect("t eliminated"))
        .collect();
    Ideal::new(ring, back)
}
