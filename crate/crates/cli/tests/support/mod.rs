//! Golden cases and helpers for driving the `objutil` binary.

#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub const FORMATS: [&str; 3] = ["table", "json", "csv"];

/// (scenario stem, subcommand, measure)
pub const GOLDEN_CASES: &[(&str, &str, Option<&str>)] = &[
    ("greek", "validate", None),
    ("greek", "universes", None),
    ("greek", "evaluate", Some("normalized")),
    ("greek", "evaluate", Some("cardinal")),
    ("fuzzy4", "evaluate", Some("fuzzy")),
    ("fuzzy4", "rank", Some("fuzzy")),
    ("housing", "evaluate", Some("normalized")),
    ("housing", "utilities", Some("cardinal")),
    ("housing", "rank", Some("normalized")),
    ("mixed", "validate", None),
    ("mixed", "evaluate", Some("fuzzy")),
];

/// Invalid scenarios and the location each one must name.
pub const INVALID_CASES: &[(&str, &str)] = &[
    ("syntax_error", "$"),
    ("empty_universe", "universe"),
    ("duplicate_objective", "universe[2]"),
    ("unknown_objective_offer", "alternatives[1].offers[1]"),
    (
        "unknown_objective_membership",
        "individuals[0].membership.z",
    ),
    ("membership_out_of_range", "individuals[1].membership.a"),
    ("negative_membership", "individuals[0].membership.a"),
    ("empty_offers", "alternatives[1].offers"),
    ("empty_support", "individuals[1]"),
    ("duplicate_alternative_id", "alternatives[1].id"),
    ("duplicate_individual_id", "individuals[1].id"),
    ("empty_society", "individuals"),
    ("missing_alternatives", "$"),
];

pub fn scenarios_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../scenarios")
}

pub fn valid(stem: &str) -> PathBuf {
    scenarios_dir().join("valid").join(format!("{stem}.json"))
}

pub fn invalid(stem: &str) -> PathBuf {
    scenarios_dir().join("invalid").join(format!("{stem}.json"))
}

pub fn golden_path(stem: &str, verb: &str, measure: Option<&str>, format: &str) -> PathBuf {
    let name = match measure {
        Some(m) => format!("{stem}__{verb}-{m}.{format}"),
        None => format!("{stem}__{verb}.{format}"),
    };
    scenarios_dir().join("golden").join(name)
}

pub fn objutil(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_objutil"))
        .args(args)
        .output()
        .expect("objutil runs")
}

pub fn case_args(stem: &str, verb: &str, measure: Option<&str>, format: &str) -> Vec<String> {
    let mut args = vec![
        verb.to_string(),
        valid(stem).to_string_lossy().into_owned(),
        "--format".into(),
        format.into(),
    ];
    if let Some(m) = measure {
        args.extend(["--measure".into(), m.into()]);
    }
    args
}

pub fn run_case(stem: &str, verb: &str, measure: Option<&str>, format: &str) -> Output {
    let args = case_args(stem, verb, measure, format);
    objutil(&args.iter().map(String::as_str).collect::<Vec<_>>())
}

/// Compares every golden case; returns a description of each mismatch.
pub fn golden_mismatches() -> Vec<String> {
    let mut problems = Vec::new();
    for &(stem, verb, measure) in GOLDEN_CASES {
        for format in FORMATS {
            let path = golden_path(stem, verb, measure, format);
            let out = run_case(stem, verb, measure, format);
            if !out.status.success() {
                problems.push(format!("{}: exit {:?}", path.display(), out.status.code()));
                continue;
            }
            match std::fs::read(&path) {
                Ok(expected) if expected == out.stdout => {}
                Ok(_) => problems.push(format!("{}: output differs", path.display())),
                Err(e) => problems.push(format!("{}: {e}", path.display())),
            }
        }
    }
    problems
}
