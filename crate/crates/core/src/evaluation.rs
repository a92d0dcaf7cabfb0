//! Individual profiles, evaluation processes, social profiles and rankings.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::error::EvaluationError;
use crate::measures::{utility, Environment, Individual, Society, UtilityMeasure, UtilityValue};
use crate::universe::Universe;

/// One individual's utilities over the environment, in environment order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndividualProfile {
    individual_id: String,
    values: Vec<UtilityValue>,
}

impl IndividualProfile {
    pub fn new(individual_id: impl Into<String>, values: Vec<UtilityValue>) -> Self {
        Self {
            individual_id: individual_id.into(),
            values,
        }
    }

    pub fn individual_id(&self) -> &str {
        &self.individual_id
    }

    pub fn values(&self) -> &[UtilityValue] {
        &self.values
    }
}

pub fn individual_profile(
    measure: UtilityMeasure,
    environment: &Environment,
    individual: &Individual,
    universe: &Universe,
) -> Result<IndividualProfile, EvaluationError> {
    let values = environment
        .alternatives()
        .iter()
        .map(|alt| {
            utility(measure, alt, individual, universe).map_err(|source| {
                EvaluationError::Alternative {
                    alternative: alt.id().to_string(),
                    source,
                }
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IndividualProfile::new(individual.id(), values))
}

/// An evaluation function: maps the N utilities one alternative received to a social utility.
pub trait EvaluationFunction {
    fn name(&self) -> &'static str;

    /// `utilities` is never empty.
    fn aggregate(&self, utilities: &[&BigRational]) -> BigRational;
}

/// Arithmetic mean.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Mean;

impl EvaluationFunction for Mean {
    fn name(&self) -> &'static str {
        "mean"
    }

    fn aggregate(&self, utilities: &[&BigRational]) -> BigRational {
        let sum: BigRational = utilities.iter().copied().sum();
        sum / BigRational::from_integer(utilities.len().into())
    }
}

/// The shipped evaluation functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Aggregator {
    Mean,
}

impl Aggregator {
    pub const ALL: [Aggregator; 1] = [Aggregator::Mean];

    fn function(self) -> &'static dyn EvaluationFunction {
        match self {
            Aggregator::Mean => &Mean,
        }
    }
}

impl EvaluationFunction for Aggregator {
    fn name(&self) -> &'static str {
        self.function().name()
    }

    fn aggregate(&self, utilities: &[&BigRational]) -> BigRational {
        self.function().aggregate(utilities)
    }
}

impl fmt::Display for Aggregator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Aggregator {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown aggregator `{s}` (expected mean)"))
    }
}

/// The quadruple ⟨A, V, U, f⟩.
#[derive(Debug, Clone)]
pub struct EvaluationProcess<'a> {
    environment: &'a Environment,
    society: &'a Society,
    profiles: Vec<IndividualProfile>,
    aggregator: Aggregator,
    measure: UtilityMeasure,
}

impl<'a> EvaluationProcess<'a> {
    /// Assembles a process from precomputed profiles, checking one profile of length M per
    /// individual, in society order.
    pub fn from_parts(
        environment: &'a Environment,
        society: &'a Society,
        profiles: Vec<IndividualProfile>,
        aggregator: Aggregator,
        measure: UtilityMeasure,
    ) -> Result<Self, EvaluationError> {
        if profiles.len() != society.len() {
            return Err(EvaluationError::LengthMismatch {
                expected: society.len(),
                found: profiles.len(),
            });
        }
        for (position, (profile, individual)) in
            profiles.iter().zip(society.individuals()).enumerate()
        {
            if profile.individual_id != individual.id() {
                return Err(EvaluationError::ProfileOrder {
                    position,
                    expected: individual.id().to_string(),
                    found: profile.individual_id.clone(),
                });
            }
            if profile.values.len() != environment.len() {
                return Err(EvaluationError::LengthMismatch {
                    expected: environment.len(),
                    found: profile.values.len(),
                });
            }
        }
        Ok(Self {
            environment,
            society,
            profiles,
            aggregator,
            measure,
        })
    }

    pub fn environment(&self) -> &'a Environment {
        self.environment
    }

    pub fn society(&self) -> &'a Society {
        self.society
    }

    pub fn profiles(&self) -> &[IndividualProfile] {
        &self.profiles
    }

    pub fn aggregator(&self) -> Aggregator {
        self.aggregator
    }

    pub fn measure(&self) -> UtilityMeasure {
        self.measure
    }
}

pub fn build_process<'a>(
    measure: UtilityMeasure,
    aggregator: Aggregator,
    environment: &'a Environment,
    society: &'a Society,
    universe: &Universe,
) -> Result<EvaluationProcess<'a>, EvaluationError> {
    let profiles = society
        .individuals()
        .iter()
        .map(|ind| {
            individual_profile(measure, environment, ind, universe).map_err(|source| {
                EvaluationError::Individual {
                    individual: ind.id().to_string(),
                    source: Box::new(source),
                }
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    EvaluationProcess::from_parts(environment, society, profiles, aggregator, measure)
}

/// Social utilities per alternative, with the measure and aggregator that produced them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SocialProfile {
    values: Vec<UtilityValue>,
    measure: UtilityMeasure,
    aggregator: Aggregator,
}

impl SocialProfile {
    pub fn new(values: Vec<UtilityValue>, measure: UtilityMeasure, aggregator: Aggregator) -> Self {
        Self {
            values,
            measure,
            aggregator,
        }
    }

    pub fn values(&self) -> &[UtilityValue] {
        &self.values
    }

    pub fn measure(&self) -> UtilityMeasure {
        self.measure
    }

    pub fn aggregator(&self) -> Aggregator {
        self.aggregator
    }

    /// True when the inputs were not confined to [0, 1], i.e. outside the evaluation function's
    /// declared domain. Happens with the cardinal measure.
    pub fn out_of_domain(&self) -> bool {
        !self.measure.is_unit_bounded() || self.values.iter().any(|v| !v.in_unit_interval())
    }
}

/// Applies the process's evaluation function to every alternative's column of utilities.
pub fn evaluate(process: &EvaluationProcess<'_>) -> SocialProfile {
    let m = process.environment.len();
    let values = (0..m)
        .map(|col| {
            let column: Vec<&BigRational> = process
                .profiles
                .iter()
                .map(|p| p.values[col].as_rational())
                .collect();
            UtilityValue::new(process.aggregator.aggregate(&column))
        })
        .collect();
    SocialProfile::new(values, process.measure, process.aggregator)
}

/// Alternatives sharing one social utility.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tier {
    pub utility: UtilityValue,
    /// Sorted lexicographically.
    pub alternatives: Vec<String>,
}

/// Tie groups in strictly decreasing utility order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ranking {
    tiers: Vec<Tier>,
}

impl Ranking {
    pub fn tiers(&self) -> &[Tier] {
        &self.tiers
    }

    /// Ids in rank order.
    pub fn order(&self) -> impl Iterator<Item = &str> {
        self.tiers
            .iter()
            .flat_map(|t| t.alternatives.iter().map(String::as_str))
    }
}

/// Orders alternatives by decreasing social utility; exactly equal utilities share a tier.
pub fn rank(
    profile: &SocialProfile,
    environment: &Environment,
) -> Result<Ranking, EvaluationError> {
    if profile.values.len() != environment.len() {
        return Err(EvaluationError::LengthMismatch {
            expected: environment.len(),
            found: profile.values.len(),
        });
    }
    let mut scored: Vec<(&UtilityValue, &str)> =
        profile.values.iter().zip(environment.ids()).collect();
    scored.sort_by(|(ua, ia), (ub, ib)| ub.cmp(ua).then_with(|| ia.cmp(ib)));

    let mut tiers: Vec<Tier> = Vec::new();
    for (value, id) in scored {
        match tiers.last_mut() {
            Some(tier) if &tier.utility == value => tier.alternatives.push(id.to_string()),
            _ => tiers.push(Tier {
                utility: value.clone(),
                alternatives: vec![id.to_string()],
            }),
        }
    }
    Ok(Ranking { tiers })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::Alternative;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn u(n: i64, d: i64) -> UtilityValue {
        UtilityValue::ratio(n, d)
    }

    fn env(universe: &Universe, alts: &[(&str, &[&str])]) -> Environment {
        Environment::new(
            alts.iter()
                .map(|(id, offers)| Alternative::new(*id, universe.set(*offers).unwrap()).unwrap())
                .collect(),
        )
        .unwrap()
    }

    fn greek() -> (Universe, Environment, Society) {
        let universe = Universe::from_tokens(["alpha", "beta", "gamma"]).unwrap();
        let environment = env(&universe, &[("am", &["alpha", "beta", "gamma"])]);
        let society = Society::new(vec![
            Individual::crisp("vp", &universe.set(["alpha"]).unwrap()).unwrap(),
            Individual::crisp("vq", &universe.set(["alpha", "beta", "gamma"]).unwrap()).unwrap(),
        ])
        .unwrap();
        (universe, environment, society)
    }

    #[test]
    fn profile_examples() {
        let (universe, environment, society) = greek();
        let p = individual_profile(
            UtilityMeasure::Cardinal,
            &environment,
            &society.individuals()[0],
            &universe,
        )
        .unwrap();
        assert_eq!(p.values(), [u(1, 1)]);

        let e = env(&universe, &[("a1", &["alpha"]), ("a2", &["beta"])]);
        let v = Individual::crisp("v", &universe.set(["alpha"]).unwrap()).unwrap();
        let p = individual_profile(UtilityMeasure::Normalized, &e, &v, &universe).unwrap();
        assert_eq!(p.values(), [u(1, 1), u(0, 1)]);

        let abcd = Universe::from_tokens(["a", "b", "c", "d"]).unwrap();
        let e = env(&abcd, &[("a1", &["a", "c"]), ("a2", &["b", "d"])]);
        let v = Individual::new("v", vec![r(2, 5), r(3, 10), r(1, 5), r(1, 10)]).unwrap();
        let p = individual_profile(UtilityMeasure::Fuzzy, &e, &v, &abcd).unwrap();
        assert_eq!(p.values(), [u(3, 5), u(2, 5)]);
    }

    #[test]
    fn profile_errors_name_the_alternative() {
        let abcd = Universe::from_tokens(["a", "b"]).unwrap();
        let e = env(&abcd, &[("a1", &["a"])]);
        let v = Individual::new("v", vec![r(1, 2), r(0, 1)]).unwrap();
        let err = individual_profile(UtilityMeasure::Cardinal, &e, &v, &abcd).unwrap_err();
        assert!(
            matches!(err, EvaluationError::Alternative { ref alternative, .. } if alternative == "a1")
        );
    }

    #[test]
    fn process_examples() {
        let (universe, environment, society) = greek();
        let process = build_process(
            UtilityMeasure::Normalized,
            Aggregator::Mean,
            &environment,
            &society,
            &universe,
        )
        .unwrap();
        assert_eq!(process.profiles().len(), 2);
        for p in process.profiles() {
            assert_eq!(p.values(), [u(1, 1)]);
        }
        assert_eq!(evaluate(&process).values(), [u(1, 1)]);

        let single = Society::new(vec![society.individuals()[1].clone()]).unwrap();
        let process = build_process(
            UtilityMeasure::Cardinal,
            Aggregator::Mean,
            &environment,
            &single,
            &universe,
        )
        .unwrap();
        assert_eq!(process.profiles().len(), 1);
        let social = evaluate(&process);
        assert_eq!(social.values(), process.profiles()[0].values());
        assert!(social.out_of_domain());
    }

    #[test]
    fn process_error_names_individual() {
        let (universe, environment, _) = greek();
        let society = Society::new(vec![
            Individual::crisp("ok", &universe.set(["alpha"]).unwrap()).unwrap(),
            Individual::new("zero", vec![r(0, 1); 3]).unwrap(),
        ])
        .unwrap();
        let err = build_process(
            UtilityMeasure::Fuzzy,
            Aggregator::Mean,
            &environment,
            &society,
            &universe,
        )
        .unwrap_err();
        assert!(
            matches!(err, EvaluationError::Individual { ref individual, .. } if individual == "zero")
        );
        assert!(err.to_string().contains("zero"));
    }

    #[test]
    fn mean_of_symmetric_profiles() {
        let universe = Universe::from_tokens(["x", "y"]).unwrap();
        let environment = env(&universe, &[("a1", &["x"]), ("a2", &["y"])]);
        let society = Society::new(vec![
            Individual::crisp("v1", &universe.set(["y"]).unwrap()).unwrap(),
            Individual::crisp("v2", &universe.set(["x"]).unwrap()).unwrap(),
        ])
        .unwrap();
        let process = build_process(
            UtilityMeasure::Normalized,
            Aggregator::Mean,
            &environment,
            &society,
            &universe,
        )
        .unwrap();
        assert_eq!(process.profiles()[0].values(), [u(0, 1), u(1, 1)]);
        let social = evaluate(&process);
        assert_eq!(social.values(), [u(1, 2), u(1, 2)]);
        assert!(!social.out_of_domain());
    }

    #[test]
    fn from_parts_checks_shape() {
        let (_, environment, society) = greek();
        let good = || {
            vec![
                IndividualProfile::new("vp", vec![u(1, 1)]),
                IndividualProfile::new("vq", vec![u(1, 1)]),
            ]
        };
        assert!(EvaluationProcess::from_parts(
            &environment,
            &society,
            good(),
            Aggregator::Mean,
            UtilityMeasure::Normalized
        )
        .is_ok());
        let mut swapped = good();
        swapped.swap(0, 1);
        assert!(matches!(
            EvaluationProcess::from_parts(
                &environment,
                &society,
                swapped,
                Aggregator::Mean,
                UtilityMeasure::Normalized
            ),
            Err(EvaluationError::ProfileOrder { position: 0, .. })
        ));
        let short = vec![IndividualProfile::new("vp", vec![u(1, 1)])];
        assert!(matches!(
            EvaluationProcess::from_parts(
                &environment,
                &society,
                short,
                Aggregator::Mean,
                UtilityMeasure::Normalized
            ),
            Err(EvaluationError::LengthMismatch {
                expected: 2,
                found: 1
            })
        ));
        let long = vec![
            IndividualProfile::new("vp", vec![u(1, 1), u(0, 1)]),
            IndividualProfile::new("vq", vec![u(1, 1)]),
        ];
        assert!(matches!(
            EvaluationProcess::from_parts(
                &environment,
                &society,
                long,
                Aggregator::Mean,
                UtilityMeasure::Normalized
            ),
            Err(EvaluationError::LengthMismatch {
                expected: 1,
                found: 2
            })
        ));
    }

    fn three_alternatives() -> Environment {
        let universe = Universe::from_tokens(["x"]).unwrap();
        env(&universe, &[("a1", &["x"]), ("a2", &["x"]), ("a3", &["x"])])
    }

    #[test]
    fn rank_distinct_values() {
        let e = three_alternatives();
        let social = SocialProfile::new(
            vec![u(1, 5), u(4, 5), u(1, 2)],
            UtilityMeasure::Fuzzy,
            Aggregator::Mean,
        );
        let ranking = rank(&social, &e).unwrap();
        let tiers: Vec<_> = ranking
            .tiers()
            .iter()
            .map(|t| t.alternatives.clone())
            .collect();
        assert_eq!(tiers, [vec!["a2"], vec!["a3"], vec!["a1"]]);
    }

    #[test]
    fn rank_groups_ties() {
        let universe = Universe::from_tokens(["x"]).unwrap();
        let e = env(&universe, &[("a2", &["x"]), ("a1", &["x"])]);
        let social = SocialProfile::new(
            vec![u(1, 2), u(1, 2)],
            UtilityMeasure::Fuzzy,
            Aggregator::Mean,
        );
        let ranking = rank(&social, &e).unwrap();
        assert_eq!(ranking.tiers().len(), 1);
        assert_eq!(ranking.tiers()[0].alternatives, ["a1", "a2"]);
        assert_eq!(ranking.tiers()[0].utility, u(1, 2));
    }

    #[test]
    fn rank_rejects_length_mismatch() {
        let e = three_alternatives();
        let social = SocialProfile::new(vec![u(1, 2)], UtilityMeasure::Fuzzy, Aggregator::Mean);
        assert_eq!(
            rank(&social, &e),
            Err(EvaluationError::LengthMismatch {
                expected: 3,
                found: 1
            })
        );
    }

    #[test]
    fn aggregator_names() {
        assert_eq!("mean".parse::<Aggregator>().unwrap(), Aggregator::Mean);
        assert!("median".parse::<Aggregator>().is_err());
        assert_eq!(Mean.aggregate(&[&r(1, 3), &r(2, 3)]), r(1, 2));
    }
}
