//! JSON spec documents.
//!
//! ```json
//! {
//!   "name": "sigma-2-3",
//!   "a": [1, 1],
//!   "b": [2, 3],
//!   "generators": ["x1_0*x2_1 - x1_1*x2_0"],
//!   "options": { "order": "grevlex", "max_pairs": 200000, "max_degree": 30, "s_max": 8 }
//! }
//! ```
//!
//! Instead of `generators` a document may name a gallery constructor,
//! `"gallery": {"name": "diagonal", "params": {"a": 1, "n": 2}}`, in which
//! case `a` may be omitted. Optional trusted facts: `complete_intersection`
//! (list of multidegrees), `relevant_class` (e.g. `"h1 + h2"`), `relevant`,
//! `a_invariant`.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::chow::ChowClass;
use crate::error::{Error, Result};
use crate::gallery::Gallery;
use crate::groebner::GroebnerOptions;
use crate::hilbert::DEFAULT_S_MAX;
use crate::order::MonomialOrder;
use crate::ring::Multidegree;
use crate::scroll::ScrollSpec;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<Vec<u32>>,
    pub b: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gallery: Option<GalleryCall>,
    #[serde(default)]
    pub options: DocOptions,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complete_intersection: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relevant_class: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relevant: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a_invariant: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GalleryCall {
    pub name: String,
    #[serde(default)]
    pub params: Value,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DocOptions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_pairs: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s_max: Option<u32>,
}

/// A validated document: the spec plus resolved options.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub spec: ScrollSpec,
    pub order: MonomialOrder,
    pub groebner: GroebnerOptions,
    pub s_max: u32,
}

impl SpecDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    pub fn load(&self) -> Result<Loaded> {
        let spec = match (&self.generators, &self.gallery) {
            (Some(_), Some(_)) => {
                return Err(Error::InvalidSpec(
                    "give either `generators` or `gallery`, not both".into(),
                ))
            }
            (None, None) => {
                return Err(Error::InvalidSpec(
                    "one of `generators` or `gallery` is required".into(),
                ))
            }
            (Some(gens), None) => {
                let a = self.a.as_ref().ok_or_else(|| {
                    Error::InvalidSpec("`a` is required with `generators`".into())
                })?;
                let spec = ScrollSpec::parse(a, &self.b, gens)?;
                match &self.name {
                    Some(n) => spec.with_name(n.clone()),
                    None => spec,
                }
            }
            (None, Some(call)) => {
                let g = Gallery::from_name(&call.name, &call.params)?;
                if let Some(a) = &self.a {
                    if *a != g.a() {
                        return Err(Error::InvalidSpec(format!(
                            "{} needs a = {:?}, document says {a:?}",
                            g.label(),
                            g.a()
                        )));
                    }
                }
                let spec = g.build(&self.b)?;
                match &self.name {
                    Some(n) => spec.with_name(n.clone()),
                    None => spec,
                }
            }
        };
        let spec = self.apply_meta(spec)?;

        let order = match &self.options.order {
            Some(name) => MonomialOrder::parse(name)?,
            None => MonomialOrder::grevlex(),
        };
        let defaults = GroebnerOptions::default();
        let groebner = GroebnerOptions {
            max_pairs: self.options.max_pairs.unwrap_or(defaults.max_pairs),
            max_degree: self.options.max_degree.unwrap_or(defaults.max_degree),
        };
        Ok(Loaded {
            spec,
            order,
            groebner,
            s_max: self.options.s_max.unwrap_or(DEFAULT_S_MAX),
        })
    }

    /// Document facts override whatever a gallery constructor supplied.
    fn apply_meta(&self, mut spec: ScrollSpec) -> Result<ScrollSpec> {
        let n = spec.nblocks();
        let a = spec.a().to_vec();
        let meta = spec.meta_mut();
        if let Some(ci) = &self.complete_intersection {
            if ci.iter().any(|d| d.len() != n) {
                return Err(Error::InvalidSpec(format!(
                    "complete_intersection degrees must have {n} entries"
                )));
            }
            meta.complete_intersection = Some(ci.iter().map(|d| Multidegree(d.clone())).collect());
        }
        if let Some(text) = &self.relevant_class {
            meta.relevant_class = Some(ChowClass::parse(&a, text)?);
        }
        if let Some(r) = self.relevant {
            meta.relevant = Some(r);
        }
        if let Some(v) = &self.a_invariant {
            if v.len() != n {
                return Err(Error::InvalidSpec(format!(
                    "a_invariant must have {n} entries"
                )));
            }
            meta.a_invariant = Some(v.clone());
        }
        Ok(spec)
    }
}
