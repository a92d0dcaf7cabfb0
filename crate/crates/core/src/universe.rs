//! The universe of objectives and set algebra over it.
//!
//! Every [`ObjectiveSet`] is a set of positions into one [`Universe`]; iteration always follows
//! the universe's declaration order, so rendered sets are deterministic.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::ModelError;
use crate::measures::{Environment, Society};

pub(crate) fn is_token(s: &str) -> bool {
    !s.is_empty() && !s.chars().any(char::is_whitespace)
}

/// Symbolic name of one objective.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjectiveId(String);

impl ObjectiveId {
    pub fn new(token: impl Into<String>) -> Result<Self, ModelError> {
        let token = token.into();
        if is_token(&token) {
            Ok(Self(token))
        } else {
            Err(ModelError::InvalidObjective(token))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ObjectiveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// The ordered, duplicate-free, nonempty set of objectives every scenario lives in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    objectives: Vec<ObjectiveId>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new(objectives: impl IntoIterator<Item = ObjectiveId>) -> Result<Self, ModelError> {
        let objectives: Vec<ObjectiveId> = objectives.into_iter().collect();
        if objectives.is_empty() {
            return Err(ModelError::EmptyUniverse);
        }
        let mut index = HashMap::with_capacity(objectives.len());
        for (pos, id) in objectives.iter().enumerate() {
            if index.insert(id.0.clone(), pos).is_some() {
                return Err(ModelError::DuplicateObjective(id.to_string()));
            }
        }
        Ok(Self { objectives, index })
    }

    /// Builds a universe from raw tokens.
    pub fn from_tokens<I, S>(tokens: I) -> Result<Self, ModelError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let ids = tokens
            .into_iter()
            .map(ObjectiveId::new)
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(ids)
    }

    /// Number of objectives, R.
    pub fn len(&self) -> usize {
        self.objectives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objectives.is_empty()
    }

    pub fn objectives(&self) -> &[ObjectiveId] {
        &self.objectives
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn get(&self, position: usize) -> Option<&ObjectiveId> {
        self.objectives.get(position)
    }

    /// Resolves names into a set; duplicates collapse.
    pub fn set<I, S>(&self, names: I) -> Result<ObjectiveSet, ModelError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut members = BTreeSet::new();
        for name in names {
            let name = name.as_ref();
            let pos = self
                .position(name)
                .ok_or_else(|| ModelError::UnknownObjective(name.to_string()))?;
            members.insert(pos);
        }
        Ok(ObjectiveSet {
            universe_len: self.len(),
            members,
        })
    }

    pub fn full_set(&self) -> ObjectiveSet {
        ObjectiveSet {
            universe_len: self.len(),
            members: (0..self.len()).collect(),
        }
    }

    pub fn empty_set(&self) -> ObjectiveSet {
        ObjectiveSet::empty(self.len())
    }

    /// Member names of `set`, in declaration order.
    pub fn names<'a>(&'a self, set: &ObjectiveSet) -> Vec<&'a str> {
        set.iter()
            .filter_map(|pos| self.objectives.get(pos))
            .map(ObjectiveId::as_str)
            .collect()
    }
}

/// A subset of some universe, stored as positions into it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ObjectiveSet {
    universe_len: usize,
    members: BTreeSet<usize>,
}

impl ObjectiveSet {
    pub fn empty(universe_len: usize) -> Self {
        Self {
            universe_len,
            members: BTreeSet::new(),
        }
    }

    /// Builds a set from positions; fails if any position lies outside the universe.
    pub fn from_positions(
        universe_len: usize,
        positions: impl IntoIterator<Item = usize>,
    ) -> Result<Self, ModelError> {
        let members: BTreeSet<usize> = positions.into_iter().collect();
        if let Some(&last) = members.iter().next_back() {
            if last >= universe_len {
                return Err(ModelError::UnknownObjective(format!("#{last}")));
            }
        }
        Ok(Self {
            universe_len,
            members,
        })
    }

    pub fn universe_len(&self) -> usize {
        self.universe_len
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, position: usize) -> bool {
        self.members.contains(&position)
    }

    /// Member positions in ascending (declaration) order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    fn check_same_universe(&self, other: &Self) -> Result<(), ModelError> {
        if self.universe_len == other.universe_len {
            Ok(())
        } else {
            Err(ModelError::UniverseMismatch {
                left: self.universe_len,
                right: other.universe_len,
            })
        }
    }

    fn combine(
        &self,
        other: &Self,
        op: impl FnOnce(&BTreeSet<usize>, &BTreeSet<usize>) -> BTreeSet<usize>,
    ) -> Result<Self, ModelError> {
        self.check_same_universe(other)?;
        Ok(Self {
            universe_len: self.universe_len,
            members: op(&self.members, &other.members),
        })
    }

    pub fn union(&self, other: &Self) -> Result<Self, ModelError> {
        self.combine(other, |a, b| a.union(b).copied().collect())
    }

    pub fn intersection(&self, other: &Self) -> Result<Self, ModelError> {
        self.combine(other, |a, b| a.intersection(b).copied().collect())
    }

    pub fn difference(&self, other: &Self) -> Result<Self, ModelError> {
        self.combine(other, |a, b| a.difference(b).copied().collect())
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool, ModelError> {
        self.check_same_universe(other)?;
        Ok(self.members.is_subset(&other.members))
    }

    pub fn is_disjoint(&self, other: &Self) -> Result<bool, ModelError> {
        self.check_same_universe(other)?;
        Ok(self.members.is_disjoint(&other.members))
    }
}

/// Γ_A ∪ Γ_V split into three disjoint parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversePartition {
    /// Γ_A − Γ_V
    pub offered_only: ObjectiveSet,
    /// Γ_V − Γ_A
    pub requested_only: ObjectiveSet,
    /// Γ_A ∩ Γ_V
    pub matched: ObjectiveSet,
}

/// Union of every alternative's offered objectives, Γ_A.
pub fn opportunity_universe(environment: &Environment) -> ObjectiveSet {
    let mut members = BTreeSet::new();
    for alternative in environment.alternatives() {
        members.extend(alternative.offers().iter());
    }
    ObjectiveSet {
        universe_len: environment.universe_len(),
        members,
    }
}

/// Union of every individual's support, Γ_V.
pub fn exigence_universe(society: &Society) -> ObjectiveSet {
    let mut members = BTreeSet::new();
    for individual in society.individuals() {
        members.extend(individual.support().iter());
    }
    ObjectiveSet {
        universe_len: society.universe_len(),
        members,
    }
}

pub fn partition_universe(
    environment: &Environment,
    society: &Society,
) -> Result<UniversePartition, ModelError> {
    let offered = opportunity_universe(environment);
    let requested = exigence_universe(society);
    Ok(UniversePartition {
        offered_only: offered.difference(&requested)?,
        requested_only: requested.difference(&offered)?,
        matched: offered.intersection(&requested)?,
    })
}
