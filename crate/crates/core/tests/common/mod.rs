//! Independent oracles and random scenario generators shared by the integration suites.
//!
//! Nothing here touches the library's set or rational types: scenarios are plain name lists,
//! grades are small integer fractions, and every measure is recomputed by scanning elements.

#![allow(dead_code)]

use num_traits::ToPrimitive;
use objutil_core::UtilityValue;
use rand::seq::SliceRandom;
use rand::Rng;

/// Reduced fraction with positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Frac {
    pub n: i128,
    pub d: i128,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Frac {
    pub fn new(n: i128, d: i128) -> Self {
        assert!(d != 0, "zero denominator");
        let g = gcd(n, d).max(1);
        let s = if d < 0 { -1 } else { 1 };
        Self {
            n: s * n / g,
            d: s * d / g,
        }
    }

    pub fn int(n: i128) -> Self {
        Self::new(n, 1)
    }

    pub fn add(self, o: Self) -> Self {
        Self::new(self.n * o.d + o.n * self.d, self.d * o.d)
    }

    pub fn div(self, o: Self) -> Self {
        Self::new(self.n * o.d, self.d * o.n)
    }

    pub fn is_zero(self) -> bool {
        self.n == 0
    }

    pub fn from_value(v: &UtilityValue) -> Self {
        let r = v.as_rational();
        Self::new(r.numer().to_i128().unwrap(), r.denom().to_i128().unwrap())
    }
}

/// A scenario in plain form. Grades are hundredths.
#[derive(Debug, Clone)]
pub struct PlainScenario {
    pub universe: Vec<String>,
    pub alternatives: Vec<(String, Vec<String>)>,
    pub individuals: Vec<(String, Vec<(String, u32)>)>,
}

impl PlainScenario {
    pub fn grade(&self, individual: usize, objective: &str) -> Frac {
        self.individuals[individual]
            .1
            .iter()
            .find(|(name, _)| name == objective)
            .map(|(_, h)| Frac::new(*h as i128, 100))
            .unwrap_or(Frac::int(0))
    }

    pub fn is_crisp(&self, individual: usize) -> bool {
        self.individuals[individual]
            .1
            .iter()
            .all(|(_, h)| *h == 0 || *h == 100)
    }

    /// Names with positive grade.
    pub fn required(&self, individual: usize) -> Vec<String> {
        self.individuals[individual]
            .1
            .iter()
            .filter(|(_, h)| *h > 0)
            .map(|(n, _)| n.clone())
            .collect()
    }

    pub fn to_json(&self) -> String {
        let quote = |s: &str| format!("\"{s}\"");
        let list = |xs: &[String]| xs.iter().map(|x| quote(x)).collect::<Vec<_>>().join(", ");
        let alts = self
            .alternatives
            .iter()
            .map(|(id, offers)| format!("{{\"id\": \"{id}\", \"offers\": [{}]}}", list(offers)))
            .collect::<Vec<_>>()
            .join(",\n    ");
        let inds = self
            .individuals
            .iter()
            .map(|(id, grades)| {
                let body = grades
                    .iter()
                    .map(|(n, h)| format!("\"{n}\": {}", hundredths(*h)))
                    .collect::<Vec<_>>()
                    .join(", ");
                format!("{{\"id\": \"{id}\", \"membership\": {{{body}}}}}")
            })
            .collect::<Vec<_>>()
            .join(",\n    ");
        format!(
            "{{\n  \"universe\": [{}],\n  \"alternatives\": [\n    {alts}\n  ],\n  \"individuals\": [\n    {inds}\n  ]\n}}\n",
            list(&self.universe)
        )
    }
}

/// Decimal literal for `h` hundredths.
pub fn hundredths(h: u32) -> String {
    format!("{}.{:02}", h / 100, h % 100)
}

fn contains(xs: &[String], x: &str) -> bool {
    xs.iter().any(|y| y == x)
}

/// `|A ∩ V|` by scanning.
pub fn oracle_cardinal(s: &PlainScenario, alt: usize, ind: usize) -> Frac {
    let required = s.required(ind);
    let count = s.alternatives[alt]
        .1
        .iter()
        .filter(|o| contains(&required, o))
        .count();
    Frac::int(count as i128)
}

pub fn oracle_normalized(s: &PlainScenario, alt: usize, ind: usize) -> Frac {
    Frac::new(
        oracle_cardinal(s, alt, ind).n,
        s.required(ind).len() as i128,
    )
}

pub fn oracle_fuzzy(s: &PlainScenario, alt: usize, ind: usize) -> Frac {
    let mut num = Frac::int(0);
    for o in &s.alternatives[alt].1 {
        num = num.add(s.grade(ind, o));
    }
    let mut den = Frac::int(0);
    for o in &s.universe {
        den = den.add(s.grade(ind, o));
    }
    num.div(den)
}

/// Column-wise sum then divide.
pub fn oracle_mean(profiles: &[Vec<Frac>]) -> Vec<Frac> {
    let m = profiles[0].len();
    (0..m)
        .map(|col| {
            let mut sum = Frac::int(0);
            for p in profiles {
                sum = sum.add(p[col]);
            }
            sum.div(Frac::int(profiles.len() as i128))
        })
        .collect()
}

pub struct Limits {
    pub max_objectives: usize,
    pub max_alternatives: usize,
    pub max_individuals: usize,
    pub crisp: bool,
}

fn nonempty_subset<R: Rng>(rng: &mut R, universe: &[String]) -> Vec<String> {
    loop {
        let picked: Vec<String> = universe
            .iter()
            .filter(|_| rng.gen_bool(0.5))
            .cloned()
            .collect();
        if !picked.is_empty() {
            let mut picked = picked;
            picked.shuffle(rng);
            return picked;
        }
    }
}

pub fn random_scenario<R: Rng>(rng: &mut R, limits: &Limits) -> PlainScenario {
    let r = rng.gen_range(1..=limits.max_objectives);
    let m = rng.gen_range(1..=limits.max_alternatives);
    let n = rng.gen_range(1..=limits.max_individuals);
    let universe: Vec<String> = (0..r).map(|i| format!("g{i}")).collect();
    let alternatives = (0..m)
        .map(|i| (format!("alt{i}"), nonempty_subset(rng, &universe)))
        .collect();
    let individuals = (0..n)
        .map(|i| {
            let support = nonempty_subset(rng, &universe);
            let mut grades: Vec<(String, u32)> = support
                .into_iter()
                .map(|name| {
                    let h = if limits.crisp {
                        100
                    } else {
                        rng.gen_range(1..=20) * 5
                    };
                    (name, h)
                })
                .collect();
            // Explicit zeros exercise the "listed but not required" path.
            for name in &universe {
                if !grades.iter().any(|(g, _)| g == name) && rng.gen_bool(0.2) {
                    grades.push((name.clone(), 0));
                }
            }
            (format!("ind{i}"), grades)
        })
        .collect();
    PlainScenario {
        universe,
        alternatives,
        individuals,
    }
}
