use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{eliminate, ideal_equal, GroebnerOptions, Ideal};
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;

use super::{scroll_ideal, ScrollSpec};

/// The scroll of `Z` seen from the blocks in `lambda`, computed three ways.
#[derive(Clone, Debug)]
pub struct Projection {
    /// 0-based block indices, sorted.
    pub lambda: Vec<usize>,
    /// Target ring of `(a_Λ, b_Λ)`.
    pub ring: Arc<Ring>,
    /// Scroll of the projected correspondence `π_Λ(Z)`.
    pub via_source: Ideal,
    /// Linear projection: `J ∩ k[z_Λ]` by elimination.
    pub via_projection: Ideal,
    /// Linear section: generators of `J` with `z_i = 0` for `i ∉ Λ`.
    pub via_section: Ideal,
    pub equal: bool,
}

fn normalize(lambda: &[usize], n: usize) -> Result<Vec<usize>> {
    let mut l = lambda.to_vec();
    l.sort_unstable();
    l.dedup();
    if l.is_empty() {
        return Err(Error::InvalidSpec("block subset must be nonempty".into()));
    }
    if let Some(&bad) = l.iter().find(|&&i| i >= n) {
        return Err(Error::InvalidSpec(format!(
            "block {} out of range 1..={n}",
            bad + 1
        )));
    }
    Ok(l)
}

/// Send each variable of a kept block to its index in `into`; others to `None`.
fn block_map(from: &Ring, into: &Ring, lambda: &[usize]) -> Vec<Option<usize>> {
    from.vars()
        .iter()
        .map(|v| {
            lambda.iter().position(|&i| i == v.block).and_then(|k| {
                let mut w = v.clone();
                w.block = k;
                into.var_index(&w.name())
            })
        })
        .collect()
}

/// Set every variable without an image to zero, then rename.
fn restrict(f: &Polynomial, into: &Arc<Ring>, map: &[Option<usize>]) -> Polynomial {
    let kept = f
        .terms()
        .iter()
        .filter(|(m, _)| m.support().all(|v| map[v].is_some()));
    let g = Polynomial::from_terms(f.ring(), kept.cloned());
    g.transfer(into, map).expect("only mapped variables remain")
}

pub fn project_scroll(
    spec: &ScrollSpec,
    lambda: &[usize],
    opts: &GroebnerOptions,
) -> Result<Projection> {
    let lambda = normalize(lambda, spec.nblocks())?;
    let a_l: Vec<u32> = lambda.iter().map(|&i| spec.a()[i]).collect();
    let b_l: Vec<u32> = lambda.iter().map(|&i| spec.b()[i]).collect();

    // (i) eliminate in the source, then build the smaller scroll
    let src = spec.source();
    let src_l = Ring::source(&a_l)?;
    let src_map = block_map(src, &src_l, &lambda);
    let drop_x: Vec<bool> = src_map.iter().map(|m| m.is_none()).collect();
    let projected_z = eliminate(&spec.source_ideal(), &drop_x, opts)?;
    let gens_l = projected_z
        .gens()
        .iter()
        .map(|g| g.transfer(&src_l, &src_map).expect("eliminated"))
        .collect();
    let spec_l = ScrollSpec::new(&a_l, &b_l, gens_l)?;
    let ring = spec_l.target().clone();
    let via_source = scroll_ideal(&spec_l);

    // (ii) and (iii) from the full scroll ideal
    let full = scroll_ideal(spec);
    let tgt_map = block_map(spec.target(), &ring, &lambda);
    let drop_z: Vec<bool> = tgt_map.iter().map(|m| m.is_none()).collect();
    let eliminated = eliminate(&full, &drop_z, opts)?;
    let via_projection = Ideal::new(
        &ring,
        eliminated
            .gens()
            .iter()
            .map(|g| g.transfer(&ring, &tgt_map).expect("eliminated"))
            .collect(),
    )?;
    let via_section = Ideal::new(
        &ring,
        full.gens()
            .iter()
            .map(|g| restrict(g, &ring, &tgt_map))
            .collect(),
    )?;

    let ord = MonomialOrder::grevlex();
    let equal = ideal_equal(&via_source, &via_projection, &ord, opts)?
        && ideal_equal(&via_projection, &via_section, &ord, opts)?;
    Ok(Projection {
        lambda,
        ring,
        via_source,
        via_projection,
        via_section,
        equal,
    })
}
