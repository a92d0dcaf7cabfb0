//! Utility measurement over sets of objectives.
//!
//! Individuals and alternatives are both described by objectives drawn from one shared
//! [`Universe`]. An alternative offers a set of objectives; an individual weighs objectives with a
//! membership function in [0, 1]. From these the crate computes cardinal, normalized cardinal and
//! fuzzy utilities, per-individual profiles, a mean social profile and a ranking of alternatives.
//!
//! ```
//! use objutil_core::{parse_scenario, run_pipeline, PipelineOptions, OutputFormat, UtilityMeasure, View};
//!
//! let scenario = parse_scenario(r#"{
//!     "universe": ["a", "b", "c", "d"],
//!     "alternatives": [{"id": "a1", "offers": ["a", "c"]}, {"id": "a2", "offers": ["b", "d"]}],
//!     "individuals": [{"id": "v", "membership": {"a": 0.4, "b": 0.3, "c": 0.2, "d": 0.1}}]
//! }"#).unwrap();
//! let options = PipelineOptions {
//!     view: View::Rank,
//!     measure: UtilityMeasure::Fuzzy,
//!     format: OutputFormat::Csv,
//!     ..PipelineOptions::default()
//! };
//! let out = run_pipeline(&scenario, &options).unwrap();
//! assert!(out.contains("ranking,1,a1,0.600000"));
//! ```

pub mod error;
pub mod evaluation;
pub mod measures;
pub mod number;
pub mod report;
pub mod scenario;
pub mod universe;

pub use error::{EvaluationError, MeasureError, ModelError};
pub use evaluation::{
    build_process, evaluate, individual_profile, rank, Aggregator, EvaluationFunction,
    EvaluationProcess, IndividualProfile, Mean, Ranking, SocialProfile, Tier,
};
pub use measures::{
    cardinal_utility, fuzzy_utility, normalized_cardinal_utility, utility, Alternative,
    Environment, Individual, Society, UtilityMeasure, UtilityValue,
};
pub use num_rational::BigRational;
pub use report::{
    build_report, render_validation, run_pipeline, OutputFormat, PipelineOptions, Report, View,
};
pub use scenario::{check_scenario, parse_scenario, Finding, Scenario, Severity, ValidationReport};
pub use universe::{
    exigence_universe, opportunity_universe, partition_universe, ObjectiveId, ObjectiveSet,
    Universe, UniversePartition,
};
