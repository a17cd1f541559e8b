//! Job runner behind the `trop` binary.
//!
//! A [`JobConfig`] is validated once, then handed to one of the `cmd_*`
//! functions, each of which returns the bytes to write plus a one-line summary
//! for the terminal. Output is a pure function of the config: grids are
//! sorted, JSON maps are ordered and randomness comes from the seed field.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::berkovich::{default_catalog, irreducibility_lint, line_trop_image, IrreducibilityLint, SeminormDescriptor};
use crate::blueprint::{base_change_to_t, monomial_blueprint, Relation, TropPresentation};
use crate::entail::{
    check_derivation, compose, derivation_to_script, derive_bend_pair, search_leq, Derivation, SearchOutcome,
};
use crate::poly::{parse_polynomial, FieldPolynomial, MonoidSignature, TropFormalSum};
use crate::scalar::{Rational, TropValue, Valuation};
use crate::trop::{
    bend_relations, evaluate_grid, grid_to_csv, members_to_json, members_to_plot, AxisRange, BendRelation, SampledPoint,
};
use crate::verify;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Tropicalize,
    Sample,
    Bend,
    AnalytifyA1,
    Verify,
}

impl Command {
    fn needs_generators(self) -> bool {
        matches!(self, Command::Tropicalize | Command::Sample | Command::Bend)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Plot,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "plot" => Ok(OutputFormat::Plot),
            _ => Err(Error::Config(format!("unknown format {s:?}, expected json, csv or plot"))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Plot => "plot",
        })
    }
}

/// Sampling box: one `(lo, hi)` pair per axis, or a single pair for all axes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxSpec(pub Vec<(Rational, Rational)>);

impl Default for BoxSpec {
    fn default() -> Self {
        BoxSpec(vec![(Rational::zero(), Rational::from_integer(4))])
    }
}

/// `lo:hi` or `lo1:hi1,lo2:hi2,...`.
impl FromStr for BoxSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let axes = s
            .split(',')
            .map(|axis| {
                let (lo, hi) =
                    axis.split_once(':').ok_or_else(|| Error::Config(format!("box axis {axis:?} is not lo:hi")))?;
                Ok((lo.trim().parse()?, hi.trim().parse()?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BoxSpec(axes))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct JobConfig {
    pub command: Command,
    pub generators: Vec<String>,
    pub valuation: Valuation,
    /// Number of variables; inferred from the generators when absent.
    pub num_vars: Option<usize>,
    pub laurent: bool,
    pub bounds: BoxSpec,
    pub step: Rational,
    pub format: OutputFormat,
    pub depth: usize,
    pub seed: u64,
    pub precision: usize,
    pub log_coords: bool,
}

impl JobConfig {
    pub fn new(command: Command) -> Self {
        JobConfig {
            command,
            generators: Vec::new(),
            valuation: Valuation::Trivial,
            num_vars: None,
            laurent: false,
            bounds: BoxSpec::default(),
            step: Rational::ratio(1, 4),
            format: OutputFormat::Json,
            depth: 6,
            seed: 0,
            precision: 6,
            log_coords: false,
        }
    }

    pub fn with_generators<S: Into<String>>(mut self, gens: impl IntoIterator<Item = S>) -> Self {
        self.generators = gens.into_iter().map(Into::into).collect();
        self
    }

    pub fn signature(&self) -> Result<MonoidSignature> {
        let n = match self.num_vars {
            Some(n) => n,
            None => self.generators.iter().map(|g| infer_num_vars(g)).max().unwrap_or(1),
        };
        MonoidSignature::new(n, self.laurent)
    }

    pub fn parse_generators(&self) -> Result<Vec<FieldPolynomial>> {
        let sig = self.signature()?;
        self.generators.iter().map(|g| parse_polynomial(g, sig)).collect()
    }

    pub fn axes(&self) -> Result<Vec<AxisRange>> {
        let n = self.signature()?.num_vars;
        let bounds = match self.bounds.0.len() {
            1 => vec![self.bounds.0[0].clone(); n],
            k if k == n => self.bounds.0.clone(),
            k => return Err(Error::DimensionMismatch { expected: n, found: k }),
        };
        bounds
            .into_iter()
            .map(|(lo, hi)| AxisRange::new(TropValue::new(lo)?, TropValue::new(hi)?, self.step.clone()))
            .collect()
    }

    /// Checks everything a command will need before it runs.
    pub fn validate(&self) -> Result<()> {
        if self.command.needs_generators() && self.generators.is_empty() {
            return Err(Error::Config("at least one generator is required (--gens)".into()));
        }
        if self.depth == 0 {
            return Err(Error::Config("search depth must be positive".into()));
        }
        let gens = self.parse_generators()?;
        if let Some(i) = gens.iter().position(FieldPolynomial::is_zero) {
            return Err(Error::ZeroGenerator(i));
        }
        if self.command == Command::Sample {
            self.axes()?;
        }
        if self.command == Command::AnalytifyA1 && !gens.is_empty() && self.signature()?.num_vars != 1 {
            return Err(Error::Config("analytify-a1 takes centers in one variable".into()));
        }
        Ok(())
    }
}

/// Highest `T<k>` index, or the number of distinct `x`, `y`, `z` letters.
fn infer_num_vars(text: &str) -> usize {
    let chars: Vec<char> = text.chars().collect();
    let mut max_t = 0;
    let mut letters = 0;
    for (i, c) in chars.iter().enumerate() {
        match c {
            'T' => {
                let digits: String = chars[i + 1..].iter().take_while(|d| d.is_ascii_digit()).collect();
                max_t = max_t.max(digits.parse().unwrap_or(0));
            }
            'x' => letters = letters.max(1),
            'y' => letters = letters.max(2),
            'z' => letters = letters.max(3),
            _ => {}
        }
    }
    max_t.max(letters).max(1)
}

/// Bytes for the output file plus a short human-readable summary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobOutput {
    pub content: String,
    pub summary: String,
    /// False when the job ran but found failures (verify).
    pub success: bool,
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::Format(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn run(config: &JobConfig) -> Result<JobOutput> {
    config.validate()?;
    log::info!("running {:?} with seed {}", config.command, config.seed);
    match config.command {
        Command::Tropicalize => cmd_tropicalize(config),
        Command::Sample => cmd_sample(config),
        Command::Bend => cmd_bend(config),
        Command::AnalytifyA1 => cmd_analytify_a1(config),
        Command::Verify => cmd_verify(config),
    }
}

fn tropicalized(config: &JobConfig) -> Result<TropPresentation> {
    let gens = config.parse_generators()?;
    let b = monomial_blueprint(&gens, config.signature()?)?.with_valuation(config.valuation);
    base_change_to_t(&b)
}

pub fn cmd_tropicalize(config: &JobConfig) -> Result<JobOutput> {
    let b_t = tropicalized(config)?;
    Ok(JobOutput { content: to_json(&b_t)?, summary: format!("{} relations", b_t.relations.len()), success: true })
}

pub fn cmd_sample(config: &JobConfig) -> Result<JobOutput> {
    let b_t = tropicalized(config)?;
    let mut grid = evaluate_grid(&b_t, &config.axes()?)?;
    grid.sort();
    let members: Vec<SampledPoint> =
        grid.iter().filter(|(_, m)| *m).map(|(p, _)| SampledPoint::new(p.clone(), config.log_coords)).collect();
    let content = match config.format {
        OutputFormat::Csv => grid_to_csv(&grid)?,
        OutputFormat::Json => {
            let mut s = members_to_json(&members)?;
            s.push('\n');
            s
        }
        OutputFormat::Plot => members_to_plot(&members, config.precision, config.log_coords),
    };
    Ok(JobOutput {
        content,
        summary: format!("{} of {} grid points are 𝕋-points", members.len(), grid.len()),
        success: true,
    })
}

#[derive(Serialize)]
struct BendClass {
    generator: String,
    tropicalization: String,
    /// The full sum followed by each one-term deletion.
    expressions: Vec<String>,
}

#[derive(Serialize)]
struct DerivationPair {
    lhs: String,
    rhs: String,
    /// Proof script for `lhs <= rhs`.
    forward: String,
    /// Proof script for `rhs <= lhs`.
    backward: String,
    checked: bool,
}

#[derive(Serialize)]
struct BendOutput {
    presentation: String,
    relations: Vec<String>,
    classes: Vec<BendClass>,
    derivations: Vec<DerivationPair>,
}

/// Bounded search for `x <= y`, used when no generator matches a bend relation.
fn prove(b: &TropPresentation, x: &TropFormalSum, y: &TropFormalSum, depth: usize) -> Result<Option<Derivation>> {
    match search_leq(b, &Relation::leq(x.clone(), y.clone()), depth) {
        SearchOutcome::Found(d) => Ok(Some(d)),
        SearchOutcome::Unknown => Ok(None),
    }
}

fn pair_for(
    b: &TropPresentation,
    lhs: &TropFormalSum,
    rhs: &TropFormalSum,
    forward: Option<Derivation>,
    backward: Option<Derivation>,
) -> Result<DerivationPair> {
    let mut checked = true;
    let mut script = |d: Option<Derivation>| -> Result<String> {
        match d {
            Some(d) => {
                checked &= check_derivation(b, &d)?;
                Ok(derivation_to_script(&d))
            }
            None => {
                checked = false;
                Ok(String::new())
            }
        }
    };
    let forward = script(forward)?;
    let backward = script(backward)?;
    Ok(DerivationPair { lhs: lhs.to_string(), rhs: rhs.to_string(), forward, backward, checked })
}

pub fn cmd_bend(config: &JobConfig) -> Result<JobOutput> {
    let gens = config.parse_generators()?;
    let b_t = tropicalized(config)?.apply_idem().apply_pos();
    let mut classes = Vec::new();
    let mut derivations = Vec::new();
    let mut relations = Vec::new();
    for p in &gens {
        let rels = bend_relations(std::slice::from_ref(p), &config.valuation)?;
        let full = crate::poly::tropicalize_poly(p, &config.valuation);
        relations.extend(rels.iter().map(BendRelation::to_string));
        // (full <= reduced, reduced <= full) per deletion.
        let mut pairs = Vec::new();
        for r in &rels {
            let pair = match derive_bend_pair(&b_t, r) {
                Ok((up, down)) => (Some(up), Some(down)),
                Err(Error::NoMatchingGenerator(_)) => {
                    (prove(&b_t, &r.full, &r.reduced, config.depth)?, prove(&b_t, &r.reduced, &r.full, config.depth)?)
                }
                Err(e) => return Err(e),
            };
            derivations.push(pair_for(&b_t, &r.full, &r.reduced, pair.0.clone(), pair.1.clone())?);
            pairs.push(pair);
        }
        // Between two deletions, pass through the full sum.
        for i in 0..rels.len() {
            for j in i + 1..rels.len() {
                let via = |a: &Option<Derivation>, b: &Option<Derivation>| match (a, b) {
                    (Some(a), Some(b)) => Some(compose(a, b)),
                    _ => None,
                };
                let forward = via(&pairs[i].1, &pairs[j].0);
                let backward = via(&pairs[j].1, &pairs[i].0);
                derivations.push(pair_for(&b_t, &rels[i].reduced, &rels[j].reduced, forward, backward)?);
            }
        }
        let mut expressions = vec![full.to_string()];
        expressions.extend(rels.iter().map(|r| r.reduced.to_string()));
        classes.push(BendClass { generator: p.to_string(), tropicalization: full.to_string(), expressions });
    }
    let all_checked = derivations.iter().all(|d| d.checked);
    let summary = format!(
        "{} bend relations, {} expressions, {} derivation pairs{}",
        relations.len(),
        classes.iter().map(|c| c.expressions.len()).sum::<usize>(),
        derivations.len(),
        if all_checked { "" } else { " (some unproved)" }
    );
    let out = BendOutput { presentation: b_t.to_string(), relations, classes, derivations };
    Ok(JobOutput { content: to_json(&out)?, summary, success: all_checked })
}

#[derive(Serialize)]
struct CatalogRow {
    descriptor: String,
    family: &'static str,
    center: Option<String>,
    radius: Option<Rational>,
    irreducibility: Option<IrreducibilityLint>,
    restriction: &'static str,
    formula: String,
    table: Vec<(u32, u32, TropValue)>,
}

pub fn cmd_analytify_a1(config: &JobConfig) -> Result<JobOutput> {
    let mut catalog = default_catalog();
    for f in config.parse_generators()? {
        let w = SeminormDescriptor::f_adic(f, Rational::ratio(1, 2))?;
        if !catalog.contains(&w) {
            catalog.push(w);
        }
    }
    let mut rows = Vec::new();
    for w in &catalog {
        let image = line_trop_image(w)?;
        let (family, center, radius) = match w {
            SeminormDescriptor::TrivialNorm => ("trivial", None, None),
            SeminormDescriptor::FAdic { f, r } => ("f-adic", Some(f), Some(r.clone())),
            SeminormDescriptor::FAdicZero { f } => ("f-adic-zero", Some(f), None),
            SeminormDescriptor::InfinityAdic { r } => ("infinity-adic", None, Some(r.clone())),
        };
        rows.push(CatalogRow {
            descriptor: w.label(),
            family,
            center: center.map(ToString::to_string),
            radius,
            irreducibility: center.map(irreducibility_lint).transpose()?,
            restriction: if image.nontrivial { "nontrivial" } else { "trivial" },
            formula: image.formula,
            table: image.table,
        });
    }
    let nontrivial = rows.iter().filter(|r| r.restriction == "nontrivial").count();
    Ok(JobOutput {
        content: to_json(&rows)?,
        summary: format!("{} seminorms, {nontrivial} with nontrivial restriction", rows.len()),
        success: true,
    })
}

pub fn cmd_verify(config: &JobConfig) -> Result<JobOutput> {
    let report = verify::run_all(config.seed)?;
    let failed: Vec<&str> = report.suites.iter().filter(|s| !s.passed()).map(|s| s.name).collect();
    let summary = if failed.is_empty() {
        format!("all {} suites passed", report.suites.len())
    } else {
        format!("failed suites: {}", failed.join(", "))
    };
    Ok(JobOutput { content: to_json(&report)?, summary, success: report.passed })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn job(command: Command, gens: &[&str]) -> JobConfig {
        JobConfig::new(command).with_generators(gens.iter().copied())
    }

    #[test]
    fn infers_variables() {
        assert_eq!(infer_num_vars("T1 + T3"), 3);
        assert_eq!(infer_num_vars("x*y + 1"), 2);
        assert_eq!(infer_num_vars("5"), 1);
    }

    #[test]
    fn tropicalize_counts() {
        let out = run(&job(Command::Tropicalize, &["T1 + T2 + 1"])).unwrap();
        assert_eq!(out.summary, "4 relations");
        let two = run(&job(Command::Tropicalize, &["T1 + T2 + 1", "T1 + T2 + 1"])).unwrap();
        assert_eq!(two.content, out.content);
        let mut padic = job(Command::Tropicalize, &["T1 + T2 + 3"]);
        padic.valuation = Valuation::padic(3).unwrap();
        assert!(run(&padic).unwrap().content.contains("1/3"));
    }

    #[test]
    fn sample_line() {
        let out = run(&job(Command::Sample, &["T1 + T2 + 1"])).unwrap();
        assert_eq!(out.summary, "21 of 289 grid points are 𝕋-points");
        let mut csv = job(Command::Sample, &["T1 + T2 + 1"]);
        csv.format = OutputFormat::Csv;
        let csv = run(&csv).unwrap().content;
        assert_eq!(csv.lines().count(), 290);
        assert!(csv.starts_with("x1,x2,member\n0/1,0/1,false\n"));
    }

    #[test]
    fn bend_line() {
        let out = run(&job(Command::Bend, &["T1 + T2 + 1"])).unwrap();
        assert!(out.success);
        assert_eq!(out.summary, "3 bend relations, 4 expressions, 6 derivation pairs");
    }

    #[test]
    fn config_errors() {
        assert!(run(&job(Command::Sample, &[])).is_err());
        assert!(matches!(run(&job(Command::Tropicalize, &["T1 + + 1"])), Err(Error::Syntax { .. })));
        let mut bad_box = job(Command::Sample, &["T1 + T2"]);
        bad_box.bounds = "0:1,0:1,0:1".parse().unwrap();
        assert!(run(&bad_box).is_err());
        assert!("0-1".parse::<BoxSpec>().is_err());
        assert!("svg".parse::<OutputFormat>().is_err());
    }

    #[test]
    fn analytify_table() {
        let out = run(&JobConfig::new(Command::AnalytifyA1)).unwrap();
        let rows: serde_json::Value = serde_json::from_str(&out.content).unwrap();
        let nontrivial: Vec<&str> = rows
            .as_array()
            .unwrap()
            .iter()
            .filter(|r| r["restriction"] == "nontrivial")
            .map(|r| r["descriptor"].as_str().unwrap())
            .collect();
        assert_eq!(nontrivial, ["w_{T1,1/2}", "w_{T1 + 1,1/2}", "w_{T1,0}", "w_{T1 + 1,0}", "w_{inf,1/2}"]);
    }
}
