//! Alternatives, individuals and the three utility measures between them.
//!
//! * cardinal: `|A ∩ V|`
//! * normalized cardinal: `|A ∩ V| / |V|`
//! * fuzzy: `Σ_{γ∈A} μ(γ) / Σ_{γ∈Γ} μ(γ)`
//!
//! An individual is stored as a total membership function over the universe; its required set
//! `V` is the support `{γ : μ(γ) > 0}`. The two cardinal measures only accept crisp individuals
//! (every μ in {0, 1}).

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{MeasureError, ModelError};
use crate::number::format_exact;
use crate::universe::{is_token, ObjectiveSet, Universe};

fn check_id(id: String) -> Result<String, ModelError> {
    if is_token(&id) {
        Ok(id)
    } else {
        Err(ModelError::InvalidId(id))
    }
}

/// An alternative `A_m`: a named, nonempty set of offered objectives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alternative {
    id: String,
    offers: ObjectiveSet,
}

impl Alternative {
    pub fn new(id: impl Into<String>, offers: ObjectiveSet) -> Result<Self, ModelError> {
        let id = check_id(id.into())?;
        if offers.is_empty() {
            return Err(ModelError::EmptyOffers(id));
        }
        Ok(Self { id, offers })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn offers(&self) -> &ObjectiveSet {
        &self.offers
    }
}

/// An individual `V_n` described by a membership function `μ_n: Γ → [0, 1]`.
///
/// Construction checks the range of every value but not that the support is nonempty;
/// measures report an empty support as an error instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Individual {
    id: String,
    membership: Vec<BigRational>,
}

impl Individual {
    /// `membership[i]` is the grade of the universe's `i`-th objective.
    pub fn new(id: impl Into<String>, membership: Vec<BigRational>) -> Result<Self, ModelError> {
        let id = check_id(id.into())?;
        let zero = BigRational::zero();
        let one = BigRational::one();
        for (pos, value) in membership.iter().enumerate() {
            if *value < zero || *value > one {
                return Err(ModelError::MembershipOutOfRange {
                    id,
                    objective: format!("#{pos}"),
                    value: format_exact(value),
                });
            }
        }
        Ok(Self { id, membership })
    }

    /// Crisp individual with μ = 1 on `requires` and 0 elsewhere.
    pub fn crisp(id: impl Into<String>, requires: &ObjectiveSet) -> Result<Self, ModelError> {
        let membership = (0..requires.universe_len())
            .map(|pos| {
                if requires.contains(pos) {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            })
            .collect();
        Self::new(id, membership)
    }

    /// Builds a membership function from named grades; unnamed objectives get 0.
    pub fn from_grades<'a, I>(
        universe: &Universe,
        id: impl Into<String>,
        grades: I,
    ) -> Result<Self, ModelError>
    where
        I: IntoIterator<Item = (&'a str, BigRational)>,
    {
        let id = id.into();
        let mut membership = vec![BigRational::zero(); universe.len()];
        for (name, value) in grades {
            let pos = universe
                .position(name)
                .ok_or_else(|| ModelError::UnknownObjective(name.to_string()))?;
            if value < BigRational::zero() || value > BigRational::one() {
                return Err(ModelError::MembershipOutOfRange {
                    id,
                    objective: name.to_string(),
                    value: format_exact(&value),
                });
            }
            membership[pos] = value;
        }
        Self::new(id, membership)
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn membership(&self) -> &[BigRational] {
        &self.membership
    }

    /// μ at `position`; positions outside the universe have grade 0.
    pub fn grade(&self, position: usize) -> BigRational {
        self.membership
            .get(position)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn universe_len(&self) -> usize {
        self.membership.len()
    }

    /// The required set `V_n = {γ : μ(γ) > 0}`.
    pub fn support(&self) -> ObjectiveSet {
        let positions = self
            .membership
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_positive())
            .map(|(pos, _)| pos);
        ObjectiveSet::from_positions(self.membership.len(), positions)
            .expect("positions come from the membership vector")
    }

    pub fn is_crisp(&self) -> bool {
        self.membership.iter().all(|v| v.is_zero() || v.is_one())
    }

    /// Σ_{γ∈Γ} μ(γ).
    pub fn total_mass(&self) -> BigRational {
        self.membership.iter().sum()
    }
}

fn check_unique<'a>(ids: impl Iterator<Item = &'a str>) -> Result<(), ModelError> {
    let mut seen = HashSet::new();
    for id in ids {
        if !seen.insert(id) {
            return Err(ModelError::DuplicateId(id.to_string()));
        }
    }
    Ok(())
}

/// The environment `A`: a nonempty, ordered list of alternatives over one universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Environment {
    alternatives: Vec<Alternative>,
}

impl Environment {
    pub fn new(alternatives: Vec<Alternative>) -> Result<Self, ModelError> {
        let first = alternatives.first().ok_or(ModelError::EmptyEnvironment)?;
        let len = first.offers.universe_len();
        for alt in &alternatives {
            if alt.offers.universe_len() != len {
                return Err(ModelError::UniverseMismatch {
                    left: len,
                    right: alt.offers.universe_len(),
                });
            }
        }
        check_unique(alternatives.iter().map(Alternative::id))?;
        Ok(Self { alternatives })
    }

    pub fn alternatives(&self) -> &[Alternative] {
        &self.alternatives
    }

    /// M
    pub fn len(&self) -> usize {
        self.alternatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alternatives.is_empty()
    }

    pub fn universe_len(&self) -> usize {
        self.alternatives[0].offers.universe_len()
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.alternatives.iter().map(Alternative::id)
    }
}

/// The society `V`: a nonempty, ordered list of individuals over one universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Society {
    individuals: Vec<Individual>,
}

impl Society {
    pub fn new(individuals: Vec<Individual>) -> Result<Self, ModelError> {
        let first = individuals.first().ok_or(ModelError::EmptySociety)?;
        let len = first.universe_len();
        for ind in &individuals {
            if ind.universe_len() != len {
                return Err(ModelError::UniverseMismatch {
                    left: len,
                    right: ind.universe_len(),
                });
            }
        }
        check_unique(individuals.iter().map(Individual::id))?;
        Ok(Self { individuals })
    }

    pub fn individuals(&self) -> &[Individual] {
        &self.individuals
    }

    /// N
    pub fn len(&self) -> usize {
        self.individuals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.individuals.is_empty()
    }

    pub fn universe_len(&self) -> usize {
        self.individuals[0].universe_len()
    }
}

/// A utility `u_n(A_m)`, held exactly.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UtilityValue(BigRational);

impl UtilityValue {
    pub fn new(value: BigRational) -> Self {
        Self(value)
    }

    pub fn from_integer(value: i64) -> Self {
        Self(BigRational::from_integer(value.into()))
    }

    pub fn ratio(numer: i64, denom: i64) -> Self {
        Self(BigRational::new(numer.into(), denom.into()))
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn into_rational(self) -> BigRational {
        self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Whether the value lies in [0, 1].
    pub fn in_unit_interval(&self) -> bool {
        self.0 >= BigRational::zero() && self.0 <= BigRational::one()
    }
}

impl fmt::Display for UtilityValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_exact(&self.0))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UtilityMeasure {
    Cardinal,
    Normalized,
    Fuzzy,
}

impl UtilityMeasure {
    pub const ALL: [UtilityMeasure; 3] = [Self::Cardinal, Self::Normalized, Self::Fuzzy];

    pub fn name(self) -> &'static str {
        match self {
            Self::Cardinal => "cardinal",
            Self::Normalized => "normalized",
            Self::Fuzzy => "fuzzy",
        }
    }

    /// Whether every value this measure produces lies in [0, 1].
    pub fn is_unit_bounded(self) -> bool {
        !matches!(self, Self::Cardinal)
    }
}

impl fmt::Display for UtilityMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for UtilityMeasure {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| {
                format!("unknown measure `{s}` (expected cardinal, normalized or fuzzy)")
            })
    }
}

fn same_universe(alternative: &Alternative, universe_len: usize) -> Result<(), ModelError> {
    let offered = alternative.offers.universe_len();
    if offered == universe_len {
        Ok(())
    } else {
        Err(ModelError::UniverseMismatch {
            left: offered,
            right: universe_len,
        })
    }
}

fn crisp_overlap(
    alternative: &Alternative,
    individual: &Individual,
) -> Result<usize, MeasureError> {
    same_universe(alternative, individual.universe_len())?;
    if !individual.is_crisp() {
        return Err(MeasureError::NonCrispIndividual(individual.id.clone()));
    }
    Ok(alternative
        .offers
        .intersection(&individual.support())?
        .len())
}

/// `card(A_m ∩ V_n)`.
pub fn cardinal_utility(
    alternative: &Alternative,
    individual: &Individual,
) -> Result<UtilityValue, MeasureError> {
    let overlap = crisp_overlap(alternative, individual)?;
    Ok(UtilityValue::from_integer(overlap as i64))
}

/// `card(A_m ∩ V_n) / card(V_n)`.
pub fn normalized_cardinal_utility(
    alternative: &Alternative,
    individual: &Individual,
) -> Result<UtilityValue, MeasureError> {
    let overlap = crisp_overlap(alternative, individual)?;
    let required = individual.support().len();
    if required == 0 {
        return Err(MeasureError::EmptyIndividual(individual.id.clone()));
    }
    Ok(UtilityValue::ratio(overlap as i64, required as i64))
}

/// `Σ_{γ∈A_m} μ_n(γ) / Σ_{γ∈Γ} μ_n(γ)`.
///
/// The denominator runs over the whole universe, so declaring extra objectives with a positive
/// grade lowers every fuzzy utility of that individual.
pub fn fuzzy_utility(
    alternative: &Alternative,
    individual: &Individual,
    universe: &Universe,
) -> Result<UtilityValue, MeasureError> {
    same_universe(alternative, universe.len())?;
    if individual.universe_len() != universe.len() {
        return Err(ModelError::UniverseMismatch {
            left: individual.universe_len(),
            right: universe.len(),
        }
        .into());
    }
    let total = individual.total_mass();
    if total.is_zero() {
        return Err(MeasureError::ZeroMembershipMass(individual.id.clone()));
    }
    let offered: BigRational = alternative
        .offers
        .iter()
        .map(|pos| &individual.membership[pos])
        .sum();
    Ok(UtilityValue::new(offered / total))
}

pub fn utility(
    measure: UtilityMeasure,
    alternative: &Alternative,
    individual: &Individual,
    universe: &Universe,
) -> Result<UtilityValue, MeasureError> {
    match measure {
        UtilityMeasure::Cardinal => cardinal_utility(alternative, individual),
        UtilityMeasure::Normalized => normalized_cardinal_utility(alternative, individual),
        UtilityMeasure::Fuzzy => fuzzy_utility(alternative, individual, universe),
    }
}
