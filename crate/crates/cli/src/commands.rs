use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use e2top::catalog::CatalogEntry;
use e2top::error::Error;
use e2top::homology::{homology_all, HomologyGroup};
use e2top::pi1::{pi1_presentation_with_budget, pi1_trivial_certificate, Pi1Budget, Verdict};
use e2top::simplicial::{coset_poset_complex, e2_chain_complex, ebar_chain_complex, Budget, ChainComplex};
use e2top::FiniteGroup;

use crate::input::NamedGroup;
use crate::report::{
    AnalysisReport, ComparisonReport, HomologyEntry, ModelReport, Pi1Report, TheoremReport, TheoremRow, SCHEMA,
};
use crate::ExitCode;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Model {
    E2,
    Ebar,
    Coset,
}

impl Model {
    pub const ALL: [Model; 3] = [Model::E2, Model::Ebar, Model::Coset];

    pub fn name(self) -> &'static str {
        match self {
            Model::E2 => "e2",
            Model::Ebar => "ebar",
            Model::Coset => "coset",
        }
    }
}

impl FromStr for Model {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "e2" => Ok(Model::E2),
            "ebar" => Ok(Model::Ebar),
            "coset" => Ok(Model::Coset),
            other => Err(format!("unknown model `{other}` (expected e2, ebar or coset)")),
        }
    }
}

/// Homology of one model in degrees below `max_dim`, plus the complex it
/// came from.
pub struct ModelResult {
    pub report: ModelReport,
    /// Reduced homology per computed degree.
    pub reduced: Vec<HomologyGroup>,
    pub complex: Option<ChainComplex>,
}

/// Builds a truncated model through `max_dim`, lowering the dimension when the
/// simplex budget is exceeded. The result is then marked incomplete.
pub fn compute_model(group: &FiniteGroup, model: Model, max_dim: usize, budget: Budget) -> ModelResult {
    let build = |d: usize| match model {
        Model::E2 => e2_chain_complex(group, d, budget),
        Model::Ebar => ebar_chain_complex(group, d, budget),
        Model::Coset => Ok(coset_poset_complex(group)),
    };
    let mut d = max_dim;
    let mut note = None;
    let complex = loop {
        match build(d) {
            Ok(c) => break Some(c),
            Err(Error::TooLarge { degree, estimated, budget }) => {
                note.get_or_insert_with(|| {
                    format!("degree {degree} needs about {estimated} simplices, budget {budget}")
                });
                // Every degree below the failing one fits.
                if degree <= 1 {
                    break None;
                }
                d = degree - 1;
            }
            Err(e) => {
                note = Some(e.to_string());
                break None;
            }
        }
    };
    let Some(complex) = complex else {
        let report = ModelReport {
            model: model.name().into(),
            simplex_counts: Vec::new(),
            homology: Vec::new(),
            complete: false,
            note,
        };
        return ModelResult { report, reduced: Vec::new(), complex: None };
    };
    let computed_top = if model == Model::Coset { max_dim } else { d };
    let mut h = homology_all(&complex);
    // The coset complex is finite-dimensional; homology above it vanishes.
    h.resize(h.len().max(computed_top), HomologyGroup::free(0));
    h.truncate(computed_top);
    let reduced: Vec<HomologyGroup> = h.iter().enumerate().map(|(i, x)| x.reduced(i)).collect();
    let report = ModelReport {
        model: model.name().into(),
        simplex_counts: complex.ranks(),
        homology: h.iter().enumerate().map(|(i, x)| HomologyEntry::new(i, x)).collect(),
        complete: note.is_none(),
        note,
    };
    ModelResult { report, reduced, complex: Some(complex) }
}

pub struct AnalyzeOptions {
    pub max_dim: usize,
    pub models: Vec<Model>,
    pub budget: Budget,
    pub timings: bool,
    pub dump_chains: Option<PathBuf>,
    pub dump_pi1: Option<PathBuf>,
}

pub fn analyze(g: &NamedGroup, opts: &AnalyzeOptions) -> Result<(AnalysisReport, ExitCode), String> {
    let group = &g.group;
    let mut timings = BTreeMap::new();
    let results: Vec<(Model, ModelResult, u64)> = opts
        .models
        .par_iter()
        .map(|&m| {
            let start = Instant::now();
            let r = compute_model(group, m, opts.max_dim, opts.budget);
            (m, r, start.elapsed().as_millis() as u64)
        })
        .collect();

    let mut models = Vec::new();
    for (m, r, ms) in results {
        timings.insert(m.name().to_string(), ms);
        if let (Some(dir), Some(c)) = (&opts.dump_chains, &r.complex) {
            write_file(&dir.join(format!("{}.chains", m.name())), &c.to_text())?;
        }
        models.push(r.report);
    }

    let start = Instant::now();
    let pi1_budget = Pi1Budget { simplices: opts.budget, ..Pi1Budget::default() };
    let pi1 = match pi1_presentation_with_budget(group, opts.budget) {
        Ok(p) => {
            if let Some(path) = &opts.dump_pi1 {
                write_file(path, &p.to_text())?;
            }
            let cert = pi1_trivial_certificate(group, pi1_budget).map_err(|e| e.to_string())?;
            Some(Pi1Report::new(&cert, p.num_generators(), p.relators().len()))
        }
        Err(Error::TooLarge { .. }) => None,
        Err(e) => return Err(e.to_string()),
    };
    timings.insert("pi1".to_string(), start.elapsed().as_millis() as u64);

    let complete = pi1.is_some() && models.iter().all(|m| m.complete);
    let report = AnalysisReport {
        schema: SCHEMA,
        group: g.name.clone(),
        order: group.order(),
        is_abelian: group.is_abelian(),
        is_tc: group.is_transitively_commutative(),
        max_dim: opts.max_dim,
        complete,
        models,
        pi1,
        timings_ms: opts.timings.then_some(timings),
    };
    let code = if complete { ExitCode::Ok } else { ExitCode::BudgetExceeded };
    Ok((report, code))
}

fn write_file(path: &Path, contents: &str) -> Result<(), String> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent).map_err(|e| format!("cannot create {}: {e}", parent.display()))?;
    }
    fs::write(path, contents).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

pub fn analysis_table(r: &AnalysisReport) -> String {
    let yn = |b: bool| if b { "yes" } else { "no" };
    let mut out = String::new();
    let _ = writeln!(
        out,
        "group {}  order {}  abelian {}  transitively commutative {}",
        r.group,
        r.order,
        yn(r.is_abelian),
        yn(r.is_tc)
    );
    let _ = writeln!(out, "{:<6} {:>4} {:>10}  homology", "model", "deg", "simplices");
    for m in &r.models {
        let rows = m.simplex_counts.len().max(m.homology.len());
        for d in 0..rows {
            let count = m.simplex_counts.get(d).map_or(String::new(), ToString::to_string);
            let h = m.homology.get(d).map_or("-", |h| h.display.as_str());
            let _ = writeln!(out, "{:<6} {:>4} {:>10}  {}", m.model, d, count, h);
        }
        if let Some(note) = &m.note {
            let _ = writeln!(out, "{:<6} incomplete: {note}", m.model);
        }
    }
    match &r.pi1 {
        Some(p) => {
            let _ = writeln!(
                out,
                "pi1 {} ({}); abelianization {}; presentation {} generators, {} relators, simplified to {}/{}",
                p.verdict,
                p.witnesses.join("; "),
                p.abelianization.display,
                p.generators,
                p.relators,
                p.simplified_generators,
                p.simplified_relators
            );
        }
        None => {
            let _ = writeln!(out, "pi1 not computed: simplex budget exceeded");
        }
    }
    if let Some(t) = &r.timings_ms {
        let parts: Vec<String> = t.iter().map(|(k, v)| format!("{k} {v}ms")).collect();
        let _ = writeln!(out, "timings {}", parts.join(", "));
    }
    if !r.complete {
        let _ = writeln!(out, "INCOMPLETE");
    }
    out
}

pub struct TheoremOptions {
    pub max_order: Option<usize>,
    pub max_dim: usize,
    pub budget: Budget,
    pub timings: bool,
}

/// Checks `G abelian ⟺ π₁ trivial ⟺ all computed reduced homology vanishes`
/// for every catalog group within the order bound.
pub fn verify_theorem(catalog: &str, entries: &[CatalogEntry], opts: &TheoremOptions) -> TheoremReport {
    let groups: Vec<(String, Result<FiniteGroup, Error>)> = entries
        .iter()
        .map(|e| (e.to_string(), e.build()))
        .filter(|(_, g)| match (g, opts.max_order) {
            (Ok(g), Some(max)) => g.order() <= max,
            _ => true,
        })
        .collect();
    let rows: Vec<TheoremRow> = groups.into_par_iter().map(|(name, g)| theorem_row(name, g, opts)).collect();
    TheoremReport {
        schema: SCHEMA,
        catalog: catalog.to_string(),
        max_dim: opts.max_dim,
        all_pass: rows.iter().all(|r| r.pass),
        groups: rows,
    }
}

fn theorem_row(name: String, group: Result<FiniteGroup, Error>, opts: &TheoremOptions) -> TheoremRow {
    let start = Instant::now();
    let failed = |order: usize, error: String| TheoremRow {
        group: name.clone(),
        order,
        is_abelian: false,
        pi1_verdict: Verdict::Unknown.to_string(),
        witnesses: Vec::new(),
        reduced_homology: Vec::new(),
        acyclic: false,
        pass: false,
        error: Some(error),
        time_ms: None,
    };
    let group = match group {
        Ok(g) => g,
        Err(e) => return failed(0, e.to_string()),
    };
    let cert = match pi1_trivial_certificate(&group, Pi1Budget { simplices: opts.budget, ..Pi1Budget::default() }) {
        Ok(c) => c,
        Err(e) => return failed(group.order(), e.to_string()),
    };
    let model = compute_model(&group, Model::E2, opts.max_dim, opts.budget);
    let abelian = group.is_abelian();
    let trivial = cert.verdict == Verdict::Trivial;
    let acyclic = model.reduced.iter().all(HomologyGroup::is_zero);
    let computed = !model.reduced.is_empty();
    TheoremRow {
        group: name,
        order: group.order(),
        is_abelian: abelian,
        pi1_verdict: cert.verdict.to_string(),
        witnesses: cert.witnesses.iter().map(ToString::to_string).collect(),
        reduced_homology: model.reduced.iter().enumerate().map(|(d, h)| HomologyEntry::new(d, h)).collect(),
        acyclic,
        pass: computed && abelian == trivial && abelian == acyclic,
        error: model.report.note,
        time_ms: opts.timings.then(|| start.elapsed().as_millis() as u64),
    }
}

pub fn theorem_table(r: &TheoremReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<10} {:>5} {:>8} {:>11}  {:<40}  witness",
        "group", "order", "abelian", "pi1", "reduced homology"
    );
    for row in &r.groups {
        let h = crate::report::homology_line(&row.reduced_homology);
        let _ = writeln!(
            out,
            "{:<10} {:>5} {:>8} {:>11}  {:<40}  {}  {}",
            row.group,
            row.order,
            if row.is_abelian { "yes" } else { "no" },
            row.pi1_verdict,
            h,
            row.witnesses.join("; "),
            if row.pass { "PASS" } else { "FAIL" }
        );
        if let Some(e) = &row.error {
            let _ = writeln!(out, "{:<10} note: {e}", "");
        }
    }
    let passed = r.groups.iter().filter(|g| g.pass).count();
    let _ = writeln!(out, "{passed}/{} groups pass", r.groups.len());
    out
}

/// Reduced homology of all three models in degrees `0..=max_deg`.
pub fn compare_models(g: &NamedGroup, max_deg: usize, budget: Budget) -> (ComparisonReport, ExitCode) {
    let results: Vec<ModelResult> =
        Model::ALL.par_iter().map(|&m| compute_model(&g.group, m, max_deg + 1, budget)).collect();
    let complete = results.iter().all(|r| r.report.complete);
    let common = results.iter().map(|r| r.reduced.len()).min().unwrap_or(0);
    let differing: Vec<usize> =
        (0..common).filter(|&d| results.iter().any(|r| r.reduced[d] != results[0].reduced[d])).collect();
    let agree = differing.is_empty();
    let report = ComparisonReport {
        schema: SCHEMA,
        group: g.name.clone(),
        max_deg,
        models: results.into_iter().map(|r| r.report).collect(),
        differing_degrees: differing,
        agree,
    };
    let code = if !agree {
        ExitCode::VerificationFailed
    } else if !complete {
        ExitCode::BudgetExceeded
    } else {
        ExitCode::Ok
    };
    (report, code)
}

pub fn comparison_table(r: &ComparisonReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "group {}  degrees 0..={}", r.group, r.max_deg);
    for m in &r.models {
        let reduced: Vec<HomologyEntry> = m
            .homology
            .iter()
            .map(|h| {
                let mut g = HomologyGroup { betti: h.betti, torsion: h.torsion.iter().map(|&t| t.into()).collect() };
                g = g.reduced(h.degree);
                HomologyEntry::new(h.degree, &g)
            })
            .collect();
        let _ = writeln!(out, "{:<6} {}", m.model, crate::report::homology_line(&reduced));
        if let Some(note) = &m.note {
            let _ = writeln!(out, "{:<6} incomplete: {note}", m.model);
        }
    }
    if r.agree {
        let _ = writeln!(out, "models agree");
    } else {
        let degs: Vec<String> = r.differing_degrees.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "models differ in degrees {}", degs.join(", "));
    }
    out
}
