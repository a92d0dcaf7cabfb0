//! End-to-end pipeline and rendering to table, JSON and CSV.
//!
//! JSON is the reference rendering. Table and CSV carry the same decimal strings.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Number, Value};

use crate::error::EvaluationError;
use crate::evaluation::{
    build_process, evaluate, rank, Aggregator, IndividualProfile, Ranking, SocialProfile,
};
use crate::measures::{UtilityMeasure, UtilityValue};
use crate::number::{format_decimal, format_exact, DEFAULT_PRECISION};
use crate::scenario::{Scenario, ValidationReport};
use crate::universe::{exigence_universe, opportunity_universe, partition_universe};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

impl OutputFormat {
    pub fn name(self) -> &'static str {
        match self {
            Self::Table => "table",
            Self::Json => "json",
            Self::Csv => "csv",
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [Self::Table, Self::Json, Self::Csv]
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown format `{s}` (expected table, json or csv)"))
    }
}

/// Which parts of the pipeline a report shows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum View {
    /// Universe, opportunity and exigence universes, partition.
    Universes,
    /// Individual profiles.
    Utilities,
    /// Everything: universes, partition, profiles, social profile and ranking.
    Evaluate,
    /// Social profile and ranking.
    Rank,
}

impl View {
    fn shows_universes(self) -> bool {
        matches!(self, View::Universes | View::Evaluate)
    }

    fn shows_profiles(self) -> bool {
        matches!(self, View::Utilities | View::Evaluate)
    }

    fn shows_social(self) -> bool {
        matches!(self, View::Evaluate | View::Rank)
    }

    fn needs_measure(self) -> bool {
        self != View::Universes
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineOptions {
    pub view: View,
    pub measure: UtilityMeasure,
    pub aggregator: Aggregator,
    pub format: OutputFormat,
    pub precision: usize,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        Self {
            view: View::Evaluate,
            measure: UtilityMeasure::Normalized,
            aggregator: Aggregator::Mean,
            format: OutputFormat::Table,
            precision: DEFAULT_PRECISION,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct UniverseSection {
    universe: Vec<String>,
    opportunity: Vec<String>,
    exigence: Vec<String>,
    offered_only: Vec<String>,
    requested_only: Vec<String>,
    matched: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct EvaluationSection {
    measure: UtilityMeasure,
    aggregator: Aggregator,
    profiles: Vec<IndividualProfile>,
    social: SocialProfile,
    ranking: Ranking,
}

/// Computed results for one scenario, independent of output format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    view: View,
    alternatives: Vec<String>,
    universes: UniverseSection,
    evaluation: Option<EvaluationSection>,
}

pub fn build_report(
    scenario: &Scenario,
    view: View,
    measure: UtilityMeasure,
    aggregator: Aggregator,
) -> Result<Report, EvaluationError> {
    let universe = scenario.universe();
    let environment = scenario.environment();
    let society = scenario.society();
    let names = |set| {
        universe
            .names(set)
            .into_iter()
            .map(String::from)
            .collect::<Vec<_>>()
    };
    let partition = partition_universe(environment, society)?;
    let universes = UniverseSection {
        universe: names(&universe.full_set()),
        opportunity: names(&opportunity_universe(environment)),
        exigence: names(&exigence_universe(society)),
        offered_only: names(&partition.offered_only),
        requested_only: names(&partition.requested_only),
        matched: names(&partition.matched),
    };
    let evaluation = if view.needs_measure() {
        let process = build_process(measure, aggregator, environment, society, universe)?;
        let social = evaluate(&process);
        let ranking = rank(&social, environment)?;
        Some(EvaluationSection {
            measure,
            aggregator,
            profiles: process.profiles().to_vec(),
            social,
            ranking,
        })
    } else {
        None
    };
    Ok(Report {
        view,
        alternatives: environment.ids().map(String::from).collect(),
        universes,
        evaluation,
    })
}

/// Evaluates `scenario` and renders the selected view.
pub fn run_pipeline(
    scenario: &Scenario,
    options: &PipelineOptions,
) -> Result<String, EvaluationError> {
    let report = build_report(scenario, options.view, options.measure, options.aggregator)?;
    Ok(report.render(options.format, options.precision))
}

fn decimal_number(value: &UtilityValue, precision: usize) -> Value {
    let text = format_decimal(value.as_rational(), precision);
    Value::Number(Number::from_str(&text).expect("formatted decimals are valid JSON numbers"))
}

fn string_array(items: &[String]) -> Value {
    Value::Array(items.iter().cloned().map(Value::String).collect())
}

fn finish_json(value: &Value) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    out.push('\n');
    out
}

fn finish_csv(rows: Vec<[String; 4]>, header: [&str; 4]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(header).expect("in-memory write");
    for row in rows {
        writer.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush"))
        .expect("CSV of UTF-8 fields is UTF-8")
}

fn pad_table(rows: &[Vec<String>], right_align_from: usize) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            let pad = widths[c].saturating_sub(cell.chars().count());
            if c >= right_align_from {
                line.push_str(&" ".repeat(pad));
                line.push_str(cell);
            } else {
                line.push_str(cell);
                line.push_str(&" ".repeat(pad));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

impl Report {
    pub fn render(&self, format: OutputFormat, precision: usize) -> String {
        match format {
            OutputFormat::Table => self.to_table(precision),
            OutputFormat::Json => finish_json(&self.to_json(precision)),
            OutputFormat::Csv => self.to_csv(precision),
        }
    }

    fn universe_rows(&self) -> [(&'static str, &[String]); 6] {
        let u = &self.universes;
        [
            ("universe", &u.universe),
            ("opportunity_universe", &u.opportunity),
            ("exigence_universe", &u.exigence),
            ("offered_only", &u.offered_only),
            ("requested_only", &u.requested_only),
            ("matched", &u.matched),
        ]
    }

    pub fn to_json(&self, precision: usize) -> Value {
        let mut root = Map::new();
        if self.view.shows_universes() {
            let [universe, opportunity, exigence, offered_only, requested_only, matched] =
                self.universe_rows();
            root.insert(universe.0.into(), string_array(universe.1));
            root.insert(opportunity.0.into(), string_array(opportunity.1));
            root.insert(exigence.0.into(), string_array(exigence.1));
            root.insert(
                "partition".into(),
                json!({
                    "offered_only": string_array(offered_only.1),
                    "requested_only": string_array(requested_only.1),
                    "matched": string_array(matched.1),
                }),
            );
        }
        let Some(eval) = &self.evaluation else {
            return Value::Object(root);
        };
        let numbers = |values: &[UtilityValue]| {
            Value::Array(
                values
                    .iter()
                    .map(|v| decimal_number(v, precision))
                    .collect(),
            )
        };
        let exact = |values: &[UtilityValue]| {
            Value::Array(
                values
                    .iter()
                    .map(|v| Value::String(format_exact(v.as_rational())))
                    .collect(),
            )
        };
        root.insert("measure".into(), json!(eval.measure.name()));
        root.insert("aggregator".into(), json!(eval.aggregator.to_string()));
        root.insert("alternatives".into(), string_array(&self.alternatives));
        if self.view.shows_profiles() {
            let profiles = eval
                .profiles
                .iter()
                .map(|p| {
                    json!({
                        "individual": p.individual_id(),
                        "values": numbers(p.values()),
                        "exact": exact(p.values()),
                    })
                })
                .collect();
            root.insert("profiles".into(), Value::Array(profiles));
        }
        if self.view.shows_social() {
            root.insert(
                "social_profile".into(),
                json!({
                    "out_of_domain": eval.social.out_of_domain(),
                    "values": numbers(eval.social.values()),
                    "exact": exact(eval.social.values()),
                }),
            );
            let tiers = eval
                .ranking
                .tiers()
                .iter()
                .enumerate()
                .map(|(i, tier)| {
                    json!({
                        "rank": i + 1,
                        "utility": decimal_number(&tier.utility, precision),
                        "exact": format_exact(tier.utility.as_rational()),
                        "alternatives": string_array(&tier.alternatives),
                    })
                })
                .collect();
            root.insert("ranking".into(), Value::Array(tiers));
        }
        Value::Object(root)
    }

    fn to_table(&self, precision: usize) -> String {
        let mut blocks: Vec<String> = Vec::new();
        if self.view.shows_universes() {
            let rows: Vec<Vec<String>> = self
                .universe_rows()
                .iter()
                .map(|(label, items)| {
                    let list = if items.is_empty() {
                        "-".to_string()
                    } else {
                        items.join(" ")
                    };
                    vec![label.to_string(), list]
                })
                .collect();
            blocks.push(pad_table(&rows, usize::MAX));
        }
        if let Some(eval) = &self.evaluation {
            let mut meta = vec![
                vec!["measure".to_string(), eval.measure.name().to_string()],
                vec!["aggregator".to_string(), eval.aggregator.to_string()],
            ];
            if self.view.shows_social() {
                meta.push(vec![
                    "out_of_domain".to_string(),
                    eval.social.out_of_domain().to_string(),
                ]);
            }
            blocks.push(pad_table(&meta, usize::MAX));

            let fmt_row = |label: &str, values: &[UtilityValue]| {
                std::iter::once(label.to_string())
                    .chain(
                        values
                            .iter()
                            .map(|v| format_decimal(v.as_rational(), precision)),
                    )
                    .collect::<Vec<_>>()
            };
            let mut matrix = vec![std::iter::once("individual".to_string())
                .chain(self.alternatives.iter().cloned())
                .collect::<Vec<_>>()];
            if self.view.shows_profiles() {
                matrix.extend(
                    eval.profiles
                        .iter()
                        .map(|p| fmt_row(p.individual_id(), p.values())),
                );
            }
            if self.view.shows_social() {
                matrix.push(fmt_row(
                    &format!("[{}]", eval.aggregator),
                    eval.social.values(),
                ));
            }
            blocks.push(pad_table(&matrix, 1));

            if self.view.shows_social() {
                let mut ranking = vec![vec![
                    "rank".to_string(),
                    "utility".to_string(),
                    "alternatives".to_string(),
                ]];
                for (i, tier) in eval.ranking.tiers().iter().enumerate() {
                    ranking.push(vec![
                        (i + 1).to_string(),
                        format_decimal(tier.utility.as_rational(), precision),
                        tier.alternatives.join(" "),
                    ]);
                }
                blocks.push(pad_table(&ranking, usize::MAX));
            }
        }
        blocks.join("\n")
    }

    fn to_csv(&self, precision: usize) -> String {
        let mut rows: Vec<[String; 4]> = Vec::new();
        let s = String::from;
        if self.view.shows_universes() {
            for (label, items) in self.universe_rows() {
                let section = if matches!(label, "offered_only" | "requested_only" | "matched") {
                    "partition"
                } else {
                    label
                };
                let key = if section == "partition" { label } else { "" };
                for item in items {
                    rows.push([s(section), s(key), item.clone(), String::new()]);
                }
            }
        }
        if let Some(eval) = &self.evaluation {
            rows.push([
                s("meta"),
                s("measure"),
                String::new(),
                s(eval.measure.name()),
            ]);
            rows.push([
                s("meta"),
                s("aggregator"),
                String::new(),
                eval.aggregator.to_string(),
            ]);
            if self.view.shows_social() {
                rows.push([
                    s("meta"),
                    s("out_of_domain"),
                    String::new(),
                    eval.social.out_of_domain().to_string(),
                ]);
            }
            let decimal = |v: &UtilityValue| format_decimal(v.as_rational(), precision);
            if self.view.shows_profiles() {
                for p in &eval.profiles {
                    for (alt, v) in self.alternatives.iter().zip(p.values()) {
                        rows.push([s("profile"), s(p.individual_id()), alt.clone(), decimal(v)]);
                    }
                }
            }
            if self.view.shows_social() {
                for (alt, v) in self.alternatives.iter().zip(eval.social.values()) {
                    rows.push([
                        s("social"),
                        eval.aggregator.to_string(),
                        alt.clone(),
                        decimal(v),
                    ]);
                }
                for (i, tier) in eval.ranking.tiers().iter().enumerate() {
                    for alt in &tier.alternatives {
                        rows.push([
                            s("ranking"),
                            (i + 1).to_string(),
                            alt.clone(),
                            decimal(&tier.utility),
                        ]);
                    }
                }
            }
        }
        finish_csv(rows, ["section", "key", "item", "value"])
    }
}

/// Renders a validation report; `scenario` is the parsed result when there were no errors.
pub fn render_validation(
    report: &ValidationReport,
    scenario: Option<&Scenario>,
    format: OutputFormat,
) -> String {
    let counts = scenario.map(|s| (s.universe().len(), s.environment().len(), s.society().len()));
    match format {
        OutputFormat::Json => {
            let mut root = Map::new();
            root.insert("valid".into(), json!(scenario.is_some()));
            if let Some((r, m, n)) = counts {
                root.insert("objectives".into(), json!(r));
                root.insert("alternatives".into(), json!(m));
                root.insert("individuals".into(), json!(n));
            }
            let findings = report
                .findings()
                .iter()
                .map(|f| json!({"severity": f.severity.as_str(), "path": f.path, "message": f.message}))
                .collect();
            root.insert("findings".into(), Value::Array(findings));
            finish_json(&Value::Object(root))
        }
        OutputFormat::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer
                .write_record(["severity", "path", "message"])
                .expect("in-memory write");
            for f in report.findings() {
                writer
                    .write_record([f.severity.as_str(), &f.path, &f.message])
                    .expect("in-memory write");
            }
            String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("UTF-8")
        }
        OutputFormat::Table => {
            let mut out = pad_table(
                &report
                    .findings()
                    .iter()
                    .map(|f| vec![f.severity.to_string(), f.path.clone(), f.message.clone()])
                    .collect::<Vec<_>>(),
                usize::MAX,
            );
            match counts {
                Some((r, m, n)) => out.push_str(&format!(
                    "valid: {r} objectives, {m} alternatives, {n} individuals\n"
                )),
                None => out.push_str(&format!("invalid: {} error(s)\n", report.errors().count())),
            }
            out
        }
    }
}
