//! Scenario files: parsing, validation and the findings report.
//!
//! A scenario is one JSON document:
//!
//! ```json
//! {
//!   "universe": ["a", "b", "c"],
//!   "alternatives": [{ "id": "a1", "offers": ["a", "c"] }],
//!   "individuals": [
//!     { "id": "v1", "membership": { "a": 0.4, "b": 0.6 } },
//!     { "id": "v2", "requires": ["c"] }
//!   ]
//! }
//! ```
//!
//! Membership grades are read from their literal decimal text, so `0.1` is exactly 1/10.
//! `requires` is shorthand for grade 1 on the listed objectives; objectives not mentioned have
//! grade 0.

use std::collections::HashSet;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{Map, Value};

use crate::error::ModelError;
use crate::measures::{Alternative, Environment, Individual, Society};
use crate::number::parse_decimal;
use crate::universe::{is_token, Universe};

/// A validated bundle of universe, environment and society.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scenario {
    universe: Universe,
    environment: Environment,
    society: Society,
}

impl Scenario {
    pub fn new(
        universe: Universe,
        environment: Environment,
        society: Society,
    ) -> Result<Self, ModelError> {
        for len in [environment.universe_len(), society.universe_len()] {
            if len != universe.len() {
                return Err(ModelError::UniverseMismatch {
                    left: universe.len(),
                    right: len,
                });
            }
        }
        Ok(Self {
            universe,
            environment,
            society,
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn environment(&self) -> &Environment {
        &self.environment
    }

    pub fn society(&self) -> &Society {
        &self.society
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Severity {
    Error,
    Warning,
}

impl Severity {
    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub severity: Severity,
    /// Location inside the document, e.g. `individuals[1].membership.b`; `$` is the root.
    pub path: String,
    pub message: String,
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}: {}", self.severity, self.path, self.message)
    }
}

/// Findings in document order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    findings: Vec<Finding>,
}

impl ValidationReport {
    pub fn findings(&self) -> &[Finding] {
        &self.findings
    }

    pub fn errors(&self) -> impl Iterator<Item = &Finding> {
        self.findings
            .iter()
            .filter(|f| f.severity == Severity::Error)
    }

    pub fn warnings(&self) -> impl Iterator<Item = &Finding> {
        self.findings
            .iter()
            .filter(|f| f.severity == Severity::Warning)
    }

    pub fn has_errors(&self) -> bool {
        self.errors().next().is_some()
    }

    fn error(&mut self, path: impl Into<String>, message: impl Into<String>) {
        self.push(Severity::Error, path, message);
    }

    fn warning(&mut self, path: impl Into<String>, message: impl Into<String>) {
        self.push(Severity::Warning, path, message);
    }

    fn push(&mut self, severity: Severity, path: impl Into<String>, message: impl Into<String>) {
        self.findings.push(Finding {
            severity,
            path: path.into(),
            message: message.into(),
        });
    }
}

/// Parses and validates a scenario; any error finding means no scenario.
pub fn parse_scenario(text: &str) -> Result<Scenario, ValidationReport> {
    match check_scenario(text) {
        (Some(scenario), _) => Ok(scenario),
        (None, report) => Err(report),
    }
}

/// Parses and validates a scenario, returning every finding, warnings included.
pub fn check_scenario(text: &str) -> (Option<Scenario>, ValidationReport) {
    let mut report = ValidationReport::default();
    let root: Value = match serde_json::from_str(text) {
        Ok(v) => v,
        Err(e) => {
            report.error("$", format!("syntax error: {e}"));
            return (None, report);
        }
    };
    let Value::Object(root) = root else {
        report.error("$", format!("expected an object, found {}", kind(&root)));
        return (None, report);
    };
    let scenario = Checker::default().run(&root, &mut report);
    if report.has_errors() {
        (None, report)
    } else {
        (scenario, report)
    }
}

fn kind(value: &Value) -> &'static str {
    match value {
        Value::Null => "null",
        Value::Bool(_) => "a boolean",
        Value::Number(_) => "a number",
        Value::String(_) => "a string",
        Value::Array(_) => "an array",
        Value::Object(_) => "an object",
    }
}

const SECTIONS: [&str; 3] = ["universe", "alternatives", "individuals"];

#[derive(Default)]
struct Checker {
    /// Valid, distinct objective names in declaration order.
    objectives: Vec<String>,
    universe_ok: bool,
    alternatives: Vec<(String, Vec<String>)>,
    alternatives_ok: bool,
    individuals: Vec<(String, Vec<(String, BigRational)>)>,
    individuals_ok: bool,
}

impl Checker {
    fn run(mut self, root: &Map<String, Value>, report: &mut ValidationReport) -> Option<Scenario> {
        // The universe is needed to resolve references, whatever its position in the file.
        let mut universe_findings = ValidationReport::default();
        if let Some(u) = root.get("universe") {
            self.check_universe(u, &mut universe_findings);
        }
        let known: HashSet<String> = self.objectives.iter().cloned().collect();
        let known = root.get("universe").map(|_| known);

        for (key, value) in root {
            match key.as_str() {
                "universe" => report.findings.append(&mut universe_findings.findings),
                "alternatives" => self.check_alternatives(value, known.as_ref(), report),
                "individuals" => self.check_individuals(value, known.as_ref(), report),
                other => report.warning(
                    format!("$.{other}"),
                    format!("unknown key `{other}` ignored"),
                ),
            }
        }
        for section in SECTIONS {
            if !root.contains_key(section) {
                report.error("$", format!("missing `{section}`"));
            }
        }
        if !(self.universe_ok && self.alternatives_ok && self.individuals_ok) || report.has_errors()
        {
            return None;
        }
        self.warn_unused(report);
        self.build()
    }

    fn check_universe(&mut self, value: &Value, report: &mut ValidationReport) {
        let Value::Array(items) = value else {
            report.error(
                "universe",
                format!(
                    "expected an array of objective names, found {}",
                    kind(value)
                ),
            );
            return;
        };
        if items.is_empty() {
            report.error("universe", "empty universe: declare at least one objective");
            return;
        }
        let errors_before = report.errors().count();
        let mut seen = HashSet::new();
        for (i, item) in items.iter().enumerate() {
            let path = format!("universe[{i}]");
            match item {
                Value::String(name) if !is_token(name) => {
                    report.error(path, format!("invalid objective name `{name}`: must be non-empty and contain no whitespace"))
                }
                Value::String(name) if !seen.insert(name.clone()) => {
                    report.error(path, format!("duplicate objective `{name}`"))
                }
                Value::String(name) => self.objectives.push(name.clone()),
                other => report.error(path, format!("expected an objective name, found {}", kind(other))),
            }
        }
        self.universe_ok = report.errors().count() == errors_before;
    }

    fn check_id(
        value: &Value,
        path: &str,
        seen: &mut HashSet<String>,
        report: &mut ValidationReport,
    ) -> Option<String> {
        let id_path = format!("{path}.id");
        match value {
            Value::String(id) if !is_token(id) => report.error(
                id_path,
                format!("invalid id `{id}`: must be non-empty and contain no whitespace"),
            ),
            Value::String(id) if !seen.insert(id.clone()) => {
                report.error(id_path, format!("duplicate id `{id}`"))
            }
            Value::String(id) => return Some(id.clone()),
            other => report.error(id_path, format!("expected a string, found {}", kind(other))),
        }
        None
    }

    /// Resolves an array of objective names; `None` when any entry is invalid.
    fn check_names(
        value: &Value,
        path: &str,
        known: Option<&HashSet<String>>,
        report: &mut ValidationReport,
    ) -> Option<Vec<String>> {
        let Value::Array(items) = value else {
            report.error(
                path,
                format!(
                    "expected an array of objective names, found {}",
                    kind(value)
                ),
            );
            return None;
        };
        let mut names = Vec::with_capacity(items.len());
        let mut ok = true;
        let mut seen = HashSet::new();
        for (i, item) in items.iter().enumerate() {
            let item_path = format!("{path}[{i}]");
            match item {
                Value::String(name) => {
                    if known.is_some_and(|k| !k.contains(name)) {
                        report.error(item_path, format!("unknown objective `{name}`"));
                        ok = false;
                    } else if !seen.insert(name.as_str()) {
                        report.warning(
                            item_path,
                            format!("objective `{name}` listed more than once"),
                        );
                    } else {
                        names.push(name.clone());
                    }
                }
                other => {
                    report.error(
                        item_path,
                        format!("expected an objective name, found {}", kind(other)),
                    );
                    ok = false;
                }
            }
        }
        ok.then_some(names)
    }

    fn require_keys(
        obj: &Map<String, Value>,
        path: &str,
        required: &[&str],
        report: &mut ValidationReport,
    ) {
        for key in required {
            if !obj.contains_key(*key) {
                report.error(path, format!("missing `{key}`"));
            }
        }
    }

    fn check_alternatives(
        &mut self,
        value: &Value,
        known: Option<&HashSet<String>>,
        report: &mut ValidationReport,
    ) {
        let Value::Array(items) = value else {
            report.error(
                "alternatives",
                format!("expected an array, found {}", kind(value)),
            );
            return;
        };
        if items.is_empty() {
            report.error(
                "alternatives",
                "empty environment: declare at least one alternative",
            );
            return;
        }
        let errors_before = report.errors().count();
        let mut ids = HashSet::new();
        for (i, item) in items.iter().enumerate() {
            let path = format!("alternatives[{i}]");
            let Value::Object(obj) = item else {
                report.error(path, format!("expected an object, found {}", kind(item)));
                continue;
            };
            let mut id = None;
            let mut offers = None;
            for (key, field) in obj {
                match key.as_str() {
                    "id" => id = Self::check_id(field, &path, &mut ids, report),
                    "offers" => {
                        let offers_path = format!("{path}.offers");
                        offers = Self::check_names(field, &offers_path, known, report);
                        if offers.as_ref().is_some_and(Vec::is_empty) {
                            report.error(
                                offers_path,
                                "empty offers: an alternative must offer at least one objective",
                            );
                            offers = None;
                        }
                    }
                    other => report.warning(
                        format!("{path}.{other}"),
                        format!("unknown key `{other}` ignored"),
                    ),
                }
            }
            Self::require_keys(obj, &path, &["id", "offers"], report);
            if let (Some(id), Some(offers)) = (id, offers) {
                self.alternatives.push((id, offers));
            }
        }
        self.alternatives_ok = report.errors().count() == errors_before;
    }

    fn check_individuals(
        &mut self,
        value: &Value,
        known: Option<&HashSet<String>>,
        report: &mut ValidationReport,
    ) {
        let Value::Array(items) = value else {
            report.error(
                "individuals",
                format!("expected an array, found {}", kind(value)),
            );
            return;
        };
        if items.is_empty() {
            report.error(
                "individuals",
                "empty society: declare at least one individual",
            );
            return;
        }
        let errors_before = report.errors().count();
        let mut ids = HashSet::new();
        for (i, item) in items.iter().enumerate() {
            let path = format!("individuals[{i}]");
            let Value::Object(obj) = item else {
                report.error(path, format!("expected an object, found {}", kind(item)));
                continue;
            };
            let both = obj.contains_key("membership") && obj.contains_key("requires");
            let mut id = None;
            let mut grades = None;
            for (key, field) in obj {
                match key.as_str() {
                    "id" => id = Self::check_id(field, &path, &mut ids, report),
                    "requires" if !both => {
                        grades =
                            Self::check_names(field, &format!("{path}.requires"), known, report)
                                .map(|names| {
                                    names.into_iter().map(|n| (n, BigRational::one())).collect()
                                });
                    }
                    "membership" if !both => {
                        grades = Self::check_membership(
                            field,
                            &format!("{path}.membership"),
                            known,
                            report,
                        );
                    }
                    "requires" | "membership" => {}
                    other => report.warning(
                        format!("{path}.{other}"),
                        format!("unknown key `{other}` ignored"),
                    ),
                }
            }
            Self::require_keys(obj, &path, &["id"], report);
            if both {
                report.error(&path, "give either `membership` or `requires`, not both");
            } else if !obj.contains_key("membership") && !obj.contains_key("requires") {
                report.error(&path, "missing `membership` or `requires`");
            }
            let Some(grades) = grades else { continue };
            if !grades.iter().any(|(_, g)| g.is_positive()) {
                report.error(
                    &path,
                    "empty support: the individual requires no objective (all grades are 0)",
                );
                continue;
            }
            if let Some(id) = id {
                self.individuals.push((id, grades));
            }
        }
        self.individuals_ok = report.errors().count() == errors_before;
    }

    fn check_membership(
        value: &Value,
        path: &str,
        known: Option<&HashSet<String>>,
        report: &mut ValidationReport,
    ) -> Option<Vec<(String, BigRational)>> {
        let Value::Object(obj) = value else {
            report.error(
                path,
                format!("expected an object of grades, found {}", kind(value)),
            );
            return None;
        };
        let mut grades = Vec::with_capacity(obj.len());
        let mut ok = true;
        for (name, grade) in obj {
            let grade_path = format!("{path}.{name}");
            if known.is_some_and(|k| !k.contains(name)) {
                report.error(grade_path, format!("unknown objective `{name}`"));
                ok = false;
                continue;
            }
            let Value::Number(number) = grade else {
                report.error(
                    grade_path,
                    format!("expected a number, found {}", kind(grade)),
                );
                ok = false;
                continue;
            };
            let literal = number.to_string();
            match parse_decimal(&literal) {
                Ok(g) if g.is_negative() || g > BigRational::one() => {
                    report.error(
                        grade_path,
                        format!("membership out of range: {literal} is not in [0, 1]"),
                    );
                    ok = false;
                }
                Ok(g) => grades.push((name.clone(), g)),
                Err(e) => {
                    report.error(grade_path, e.to_string());
                    ok = false;
                }
            }
        }
        ok.then_some(grades)
    }

    fn warn_unused(&self, report: &mut ValidationReport) {
        let mut used: HashSet<&str> = HashSet::new();
        for (_, offers) in &self.alternatives {
            used.extend(offers.iter().map(String::as_str));
        }
        for (_, grades) in &self.individuals {
            used.extend(
                grades
                    .iter()
                    .filter(|(_, g)| !g.is_zero())
                    .map(|(n, _)| n.as_str()),
            );
        }
        for (i, name) in self.objectives.iter().enumerate() {
            if !used.contains(name.as_str()) {
                report.warning(
                    format!("universe[{i}]"),
                    format!("objective `{name}` is neither offered nor required"),
                );
            }
        }
    }

    fn build(self) -> Option<Scenario> {
        let universe = Universe::from_tokens(self.objectives).ok()?;
        let alternatives = self
            .alternatives
            .into_iter()
            .map(|(id, offers)| Alternative::new(id, universe.set(offers)?))
            .collect::<Result<Vec<_>, ModelError>>()
            .ok()?;
        let individuals = self
            .individuals
            .into_iter()
            .map(|(id, grades)| {
                Individual::from_grades(
                    &universe,
                    id,
                    grades.iter().map(|(n, g)| (n.as_str(), g.clone())),
                )
            })
            .collect::<Result<Vec<_>, ModelError>>()
            .ok()?;
        let environment = Environment::new(alternatives).ok()?;
        let society = Society::new(individuals).ok()?;
        Scenario::new(universe, environment, society).ok()
    }
}
