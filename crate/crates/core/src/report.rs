//! Report commands behind the command-line tool.
//!
//! A [`Session`] caches the expensive pieces (scroll ideal, Gröbner bases,
//! Hilbert data) so `verify-all` computes each of them once. Reports are
//! plain data and render to aligned text or JSON with no timing or
//! platform-dependent content.

use std::cell::{OnceCell, RefCell};
use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use crate::chow::{complete_intersection_class, degree_from_class, ChowClass};
use crate::document::Loaded;
use crate::error::{Error, Result};
use crate::groebner::{
    buchberger_with_progress, ideal_equal, GroebnerBasis, GroebnerOptions, Ideal, Progress,
};
use crate::hilbert::{
    gorenstein_ci_check, gorenstein_from_a_invariant, GorensteinVerdict, HilbertReport,
    ScrollHilbert,
};
use crate::order::MonomialOrder;
use crate::ring::Multidegree;
use crate::scroll::{
    kernel_ideal, matrix_form, project_scroll, scroll_ideal, veronese_ideal, ScrollSpec,
};

/// Oracle checks that eliminate in the joint ring are skipped above this
/// many target variables.
pub const ORACLE_TARGET_LIMIT: usize = 12;
/// `verify-all` compares the two Hilbert columns up to this `s`.
pub const SUM_CHECK_S: u32 = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Construct,
    Groebner,
    Degree,
    Hilbert,
    Dimension,
    CheckGorenstein,
    MatrixForm,
    /// 1-based block indices.
    Project(Vec<usize>),
    VerifyAll,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Construct => "construct",
            Command::Groebner => "groebner",
            Command::Degree => "degree",
            Command::Hilbert => "hilbert",
            Command::Dimension => "dimension",
            Command::CheckGorenstein => "check-gorenstein",
            Command::MatrixForm => "matrix-form",
            Command::Project(_) => "project",
            Command::VerifyAll => "verify-all",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Text(String),
    Int(i64),
    Bool(bool),
    List(Vec<String>),
    Table {
        header: Vec<String>,
        rows: Vec<Vec<String>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub title: String,
    pub items: Vec<(String, Item)>,
}

impl Section {
    fn new(title: &str) -> Self {
        Section {
            title: title.to_string(),
            items: Vec::new(),
        }
    }

    fn push(&mut self, key: &str, item: Item) {
        self.items.push((key.to_string(), item));
    }

    fn text(&mut self, key: &str, v: impl ToString) {
        self.push(key, Item::Text(v.to_string()));
    }

    fn int(&mut self, key: &str, v: i64) {
        self.push(key, Item::Int(v));
    }

    fn bool(&mut self, key: &str, v: bool) {
        self.push(key, Item::Bool(v));
    }

    fn list(&mut self, key: &str, v: impl IntoIterator<Item = impl ToString>) {
        self.push(
            key,
            Item::List(v.into_iter().map(|x| x.to_string()).collect()),
        );
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub spec: String,
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    pub sections: Vec<Section>,
    pub checks: Vec<Check>,
}

impl Report {
    /// True when every check passed.
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            ok,
            detail: detail.into(),
        });
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let md = |v: &[u32]| Multidegree(v.to_vec()).to_string();
        writeln!(
            out,
            "{}  {}  a={} b={}",
            self.command,
            self.spec,
            md(&self.a),
            md(&self.b)
        )
        .unwrap();
        for s in &self.sections {
            writeln!(out).unwrap();
            writeln!(out, "[{}]", s.title).unwrap();
            let width = s
                .items
                .iter()
                .filter(|(_, i)| !matches!(i, Item::List(_) | Item::Table { .. }))
                .map(|(k, _)| k.len())
                .max()
                .unwrap_or(0);
            for (key, item) in &s.items {
                match item {
                    Item::Text(t) => writeln!(out, "  {key:<width$}  {t}").unwrap(),
                    Item::Int(n) => writeln!(out, "  {key:<width$}  {n}").unwrap(),
                    Item::Bool(b) => {
                        writeln!(out, "  {key:<width$}  {}", if *b { "yes" } else { "no" }).unwrap()
                    }
                    Item::List(v) => {
                        writeln!(out, "  {key} ({})", v.len()).unwrap();
                        for line in v {
                            writeln!(out, "    {line}").unwrap();
                        }
                    }
                    Item::Table { header, rows } => {
                        writeln!(out, "  {key}").unwrap();
                        let widths: Vec<usize> = (0..header.len())
                            .map(|c| {
                                rows.iter()
                                    .map(|r| r[c].len())
                                    .chain([header[c].len()])
                                    .max()
                                    .unwrap_or(0)
                            })
                            .collect();
                        let fmt_row = |r: &[String]| {
                            r.iter()
                                .zip(&widths)
                                .map(|(x, &w)| format!("{x:>w$}"))
                                .collect::<Vec<_>>()
                                .join("  ")
                        };
                        writeln!(out, "    {}", fmt_row(header)).unwrap();
                        for r in rows {
                            writeln!(out, "    {}", fmt_row(r)).unwrap();
                        }
                    }
                }
            }
        }
        if !self.checks.is_empty() {
            writeln!(out).unwrap();
            writeln!(out, "[checks]").unwrap();
            let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
            for c in &self.checks {
                let tag = if c.ok { "PASS" } else { "FAIL" };
                writeln!(out, "  {tag}  {:<width$}  {}", c.name, c.detail).unwrap();
            }
        }
        writeln!(out).unwrap();
        writeln!(
            out,
            "result: {}",
            if self.ok() {
                "ok"
            } else {
                "verification failed"
            }
        )
        .unwrap();
        out
    }

    pub fn to_json(&self) -> Value {
        let sections: Vec<Value> = self
            .sections
            .iter()
            .map(|s| {
                let mut items = Map::new();
                for (k, i) in &s.items {
                    let v = match i {
                        Item::Text(t) => json!(t),
                        Item::Int(n) => json!(n),
                        Item::Bool(b) => json!(b),
                        Item::List(v) => json!(v),
                        Item::Table { header, rows } => Value::Array(
                            rows.iter()
                                .map(|r| {
                                    Value::Object(
                                        header
                                            .iter()
                                            .cloned()
                                            .zip(r.iter().map(|x| json!(x)))
                                            .collect(),
                                    )
                                })
                                .collect(),
                        ),
                    };
                    items.insert(k.clone(), v);
                }
                json!({"title": s.title, "items": items})
            })
            .collect();
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "ok": c.ok, "detail": c.detail}))
            .collect();
        json!({
            "command": self.command,
            "spec": self.spec,
            "a": self.a,
            "b": self.b,
            "sections": sections,
            "checks": checks,
            "ok": self.ok(),
        })
    }
}

/// JSON for a failed run, with the machine-readable error code.
pub fn error_json(command: &str, err: &Error) -> Value {
    json!({"command": command, "error": {"code": err.code(), "message": err.to_string()}, "ok": false})
}

type ProgressSink = Box<dyn FnMut(&str, &Progress)>;

/// One spec plus lazily computed, cached results.
pub struct Session {
    pub spec: ScrollSpec,
    pub order: MonomialOrder,
    pub opts: GroebnerOptions,
    pub s_max: u32,
    scroll: OnceCell<Ideal>,
    scroll_gb: OnceCell<GroebnerBasis>,
    source_gb: OnceCell<GroebnerBasis>,
    hilbert: OnceCell<ScrollHilbert>,
    hilbert_report: OnceCell<HilbertReport>,
    progress: RefCell<Option<ProgressSink>>,
}

fn cached<T>(cell: &OnceCell<T>, f: impl FnOnce() -> Result<T>) -> Result<&T> {
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let v = f()?;
    Ok(cell.get_or_init(|| v))
}

impl Session {
    pub fn new(loaded: Loaded) -> Self {
        Session {
            spec: loaded.spec,
            order: loaded.order,
            opts: loaded.groebner,
            s_max: loaded.s_max,
            scroll: OnceCell::new(),
            scroll_gb: OnceCell::new(),
            source_gb: OnceCell::new(),
            hilbert: OnceCell::new(),
            hilbert_report: OnceCell::new(),
            progress: RefCell::new(None),
        }
    }

    pub fn from_spec(spec: ScrollSpec) -> Self {
        Self::new(Loaded {
            spec,
            order: MonomialOrder::grevlex(),
            groebner: GroebnerOptions::default(),
            s_max: crate::hilbert::DEFAULT_S_MAX,
        })
    }

    /// Receive progress events from the main Gröbner computations.
    pub fn on_progress(&self, sink: impl FnMut(&str, &Progress) + 'static) {
        *self.progress.borrow_mut() = Some(Box::new(sink));
    }

    fn gb(&self, label: &str, ideal: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis> {
        let mut sink = self.progress.borrow_mut();
        match sink.as_mut() {
            Some(f) => buchberger_with_progress(ideal, order, &self.opts, &mut |p| f(label, p)),
            None => ideal.groebner_basis(order, &self.opts),
        }
    }

    pub fn scroll_ideal(&self) -> &Ideal {
        self.scroll.get_or_init(|| scroll_ideal(&self.spec))
    }

    pub fn scroll_gb(&self) -> Result<&GroebnerBasis> {
        cached(&self.scroll_gb, || {
            self.gb("scroll", self.scroll_ideal(), &self.order)
        })
    }

    pub fn source_gb(&self) -> Result<&GroebnerBasis> {
        cached(&self.source_gb, || {
            self.gb(
                "source",
                &self.spec.source_ideal(),
                &MonomialOrder::grevlex(),
            )
        })
    }

    pub fn hilbert(&self) -> Result<&ScrollHilbert> {
        cached(&self.hilbert, || {
            ScrollHilbert::from_bases(&self.spec, self.source_gb()?, self.scroll_gb()?)
        })
    }

    pub fn hilbert_report(&self) -> Result<&HilbertReport> {
        cached(&self.hilbert_report, || self.hilbert()?.report(self.s_max))
    }

    /// Chow class used for the degree comparison, and whether it covers
    /// all of `Z`.
    pub fn chow_class(&self) -> Option<(ChowClass, bool)> {
        let meta = self.spec.meta();
        let relevant = meta.relevant != Some(false);
        if let Some(c) = &meta.relevant_class {
            return Some((c.clone(), relevant));
        }
        match &meta.complete_intersection {
            Some(degs) if relevant => {
                Some((complete_intersection_class(degs, self.spec.a()), true))
            }
            _ => None,
        }
    }

    pub fn gorenstein(&self) -> Option<(GorensteinVerdict, &'static str)> {
        let meta = self.spec.meta();
        if let Some(degs) = &meta.complete_intersection {
            return Some((
                gorenstein_ci_check(self.spec.a(), self.spec.b(), degs),
                "complete intersection",
            ));
        }
        meta.a_invariant
            .as_ref()
            .map(|v| (gorenstein_from_a_invariant(v, self.spec.b()), "a-invariant"))
    }

    fn report(&self, command: &Command) -> Report {
        Report {
            command: command.name().to_string(),
            spec: self.spec.name().unwrap_or("(unnamed)").to_string(),
            a: self.spec.a().to_vec(),
            b: self.spec.b().to_vec(),
            sections: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn run(&self, command: &Command) -> Result<Report> {
        let mut r = self.report(command);
        match command {
            Command::Construct => self.construct(&mut r),
            Command::Groebner => self.groebner(&mut r)?,
            Command::Degree => self.degree(&mut r)?,
            Command::Hilbert => self.hilbert_cmd(&mut r, true)?,
            Command::Dimension => self.dimension(&mut r)?,
            Command::CheckGorenstein => self.check_gorenstein(&mut r, false)?,
            Command::MatrixForm => self.matrix(&mut r, true)?,
            Command::Project(blocks) => {
                let lambda: Vec<usize> = blocks
                    .iter()
                    .map(|&i| {
                        i.checked_sub(1)
                            .ok_or_else(|| Error::InvalidSpec("blocks are numbered from 1".into()))
                    })
                    .collect::<Result<_>>()?;
                self.project(&mut r, &lambda, true)?
            }
            Command::VerifyAll => self.verify_all(&mut r)?,
        }
        Ok(r)
    }

    fn construct(&self, r: &mut Report) {
        let mut s = Section::new("construct");
        let target = self.spec.target();
        let veronese: usize = (0..self.spec.nblocks())
            .map(|i| veronese_ideal(target, i).len())
            .sum();
        let ideal = self.scroll_ideal();
        s.int("target variables", target.nvars() as i64);
        s.int("veronese relations", veronese as i64);
        s.int("lifted generators", (ideal.gens().len() - veronese) as i64);
        s.list("generators", ideal.gens());
        r.sections.push(s);
    }

    fn groebner(&self, r: &mut Report) -> Result<()> {
        let gb = self.scroll_gb()?;
        let init = gb.initial_ideal();
        let mut s = Section::new("groebner");
        s.text("order", &self.order);
        s.int("size", gb.len() as i64);
        s.int("max degree", gb.max_degree() as i64);
        s.bool("squarefree initial ideal", init.is_squarefree());
        let ring = gb.ring();
        s.list(
            "leading monomials",
            gb.leading_monomials()
                .iter()
                .map(|m| ring.format_monomial(m)),
        );
        s.list("basis", gb.basis());
        r.sections.push(s);
        Ok(())
    }

    fn degree(&self, r: &mut Report) -> Result<()> {
        let rep = self.hilbert_report()?;
        let mut s = Section::new("degree");
        s.int("hilbert degree", rep.fit.degree as i64);
        s.text("projective dimension", fmt_dim(rep.fit.dimension));
        let relevant = self.spec.meta().relevant;
        s.text(
            "relevant",
            match relevant {
                Some(true) => "yes",
                Some(false) => "no",
                None => "unknown",
            },
        );
        match self.chow_class() {
            None => s.text("chow degree", "unavailable (no class supplied)"),
            Some((class, covers_all)) => {
                let sum_a: u32 = self.spec.a().iter().sum();
                let codim = class
                    .terms()
                    .next()
                    .map_or(0, |(beta, _)| beta.iter().sum::<u32>());
                let dim_z = sum_a.saturating_sub(codim);
                let chow = degree_from_class(&class, self.spec.b(), dim_z);
                s.text("class", &class);
                if covers_all {
                    s.int("chow degree", chow);
                    r.check(
                        "chow-vs-hilbert",
                        chow == rep.fit.degree as i64,
                        format!("chow {chow}, hilbert {}", rep.fit.degree),
                    );
                } else {
                    s.int("chow degree (relevant part only)", chow);
                    s.int("irrelevant contribution", rep.fit.degree as i64 - chow);
                }
            }
        }
        r.sections.push(s);
        Ok(())
    }

    fn hilbert_cmd(&self, r: &mut Report, table: bool) -> Result<()> {
        let rep = self.hilbert_report()?;
        let mut s = Section::new("hilbert");
        if table {
            s.push(
                "values",
                Item::Table {
                    header: vec!["s".into(), "direct".into(), "sum".into()],
                    rows: (0..rep.direct.len())
                        .map(|k| {
                            vec![
                                k.to_string(),
                                rep.direct[k].to_string(),
                                rep.sum[k].to_string(),
                            ]
                        })
                        .collect(),
                },
            );
        }
        s.int("s_max", rep.s_max as i64);
        s.text("hilbert polynomial", rep.fit.polynomial_string());
        s.text("projective dimension", fmt_dim(rep.fit.dimension));
        s.int("degree", rep.fit.degree as i64);
        s.int("fit window start", rep.fit.window_start as i64);
        s.bool("stable", rep.fit.stable);
        r.sections.push(s);
        let upto = if table {
            rep.direct.len()
        } else {
            rep.direct.len().min(SUM_CHECK_S as usize + 1)
        };
        let same = rep.direct[..upto] == rep.sum[..upto];
        r.check(
            "sum-vs-direct",
            same,
            format!(
                "s = 0..{}{}",
                upto - 1,
                if same { "" } else { ": columns differ" }
            ),
        );
        Ok(())
    }

    fn dimension(&self, r: &mut Report) -> Result<()> {
        let d = self.hilbert()?.dimension_check();
        let mut s = Section::new("dimension");
        s.int("source krull dimension", d.source as i64);
        s.int("target krull dimension", d.target as i64);
        s.int("projective dimension", d.target as i64 - 1);
        r.sections.push(s);
        r.check(
            "dimension",
            d.ok,
            format!("source {}, target {}", d.source, d.target),
        );
        Ok(())
    }

    fn check_gorenstein(&self, r: &mut Report, numerics: bool) -> Result<()> {
        let mut s = Section::new("gorenstein");
        match self.gorenstein() {
            None => s.text(
                "verdict",
                "not determined (no complete-intersection degrees or a-invariant)",
            ),
            Some((v, route)) => {
                s.text("route", route);
                s.text("v", fmt_vec(&v.v));
                s.text(
                    "lambda",
                    v.lambdas
                        .as_ref()
                        .map_or("none".to_string(), |l| fmt_vec(l)),
                );
                s.bool("gorenstein", v.gorenstein);
                s.bool("calabi-yau", v.calabi_yau);
                if numerics && v.calabi_yau {
                    let rep = self.hilbert_report()?;
                    let d = self.hilbert()?.dimension_check();
                    let expect = d.source as i64 - 1;
                    let got = rep.fit.dimension.map_or(-1, |x| x as i64);
                    r.check(
                        "calabi-yau-dimension",
                        got == expect,
                        format!("fitted {got}, dim A/I - 1 = {expect}"),
                    );
                }
            }
        }
        r.sections.push(s);
        Ok(())
    }

    fn matrix(&self, r: &mut Report, full: bool) -> Result<()> {
        let mf = matrix_form(&self.spec)?;
        let mut s = Section::new("matrix-form");
        if full {
            s.list("description", mf.to_string().lines());
        } else {
            s.text("bidegree", format!("({},{})", mf.bidegree.0, mf.bidegree.1));
        }
        r.sections.push(s);
        let same = ideal_equal(
            &mf.ideal(),
            self.scroll_ideal(),
            &MonomialOrder::grevlex(),
            &self.opts,
        )?;
        r.check(
            "matrix-vs-construction",
            same,
            if same {
                "ideals equal"
            } else {
                "ideals differ"
            },
        );
        Ok(())
    }

    fn project(&self, r: &mut Report, lambda: &[usize], full: bool) -> Result<()> {
        let p = project_scroll(&self.spec, lambda, &self.opts)?;
        let label = fmt_blocks(&p.lambda);
        if full {
            let mut s = Section::new("project");
            s.text("blocks", &label);
            s.int("target variables", p.ring.nvars() as i64);
            s.list("via source", p.via_source.gens());
            s.list("via projection", p.via_projection.gens());
            s.list("via section", p.via_section.gens());
            r.sections.push(s);
        }
        r.check(
            format!("projection {label}"),
            p.equal,
            if p.equal {
                "three routes agree"
            } else {
                "routes differ"
            },
        );
        Ok(())
    }

    fn verify_all(&self, r: &mut Report) -> Result<()> {
        let nz = self.spec.target().nvars();
        let mut s = Section::new("construct");
        s.int("target variables", nz as i64);
        s.int("generators", self.scroll_ideal().gens().len() as i64);
        let gb = self.scroll_gb()?;
        s.int("groebner basis size", gb.len() as i64);
        s.int("groebner max degree", gb.max_degree() as i64);
        s.bool(
            "squarefree initial ideal",
            gb.initial_ideal().is_squarefree(),
        );
        r.sections.push(s);

        if nz <= ORACLE_TARGET_LIMIT {
            let k = kernel_ideal(&self.spec, &self.opts)?;
            let same = ideal_equal(
                &k,
                self.scroll_ideal(),
                &MonomialOrder::grevlex(),
                &self.opts,
            )?;
            r.check(
                "kernel-oracle",
                same,
                if same {
                    "ideals equal"
                } else {
                    "ideals differ"
                },
            );
        }
        self.hilbert_cmd(r, false)?;
        self.dimension(r)?;
        self.degree(r)?;
        self.check_gorenstein(r, true)?;
        match self.matrix(r, false) {
            Err(Error::Shape(_)) => {}
            other => other?,
        }
        let n = self.spec.nblocks();
        if n >= 2 && nz <= ORACLE_TARGET_LIMIT {
            let mut subsets: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
            if n > 2 {
                subsets.extend((0..n).map(|i| (0..n).filter(|&j| j != i).collect()));
            }
            for l in subsets {
                self.project(r, &l, false)?;
            }
        }
        Ok(())
    }
}

fn fmt_dim(d: Option<u32>) -> String {
    d.map_or("empty".to_string(), |x| x.to_string())
}

fn fmt_vec(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn fmt_blocks(l: &[usize]) -> String {
    let parts: Vec<String> = l.iter().map(|x| (x + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}
