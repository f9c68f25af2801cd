//! Order-theoretic machinery on the powerset lattice of a finite universe:
//! minimal, maximal, least and greatest members of a family under a
//! set-valued projection, monotonicity, fixed points, and directed
//! completeness.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::argset::{subsets_of, ArgSet};

type Predicate<'a> = Box<dyn Fn(&ArgSet) -> bool + Send + Sync + 'a>;
type Transform<'a> = Box<dyn Fn(&ArgSet) -> ArgSet + Send + Sync + 'a>;

enum Members<'a> {
    Predicate(Predicate<'a>),
    Explicit(Vec<ArgSet>),
}

/// A family of subsets of a finite universe, given either by a membership
/// predicate or by an explicit list of members.
pub struct SetFamily<'a> {
    universe: usize,
    members: Members<'a>,
}

impl<'a> SetFamily<'a> {
    /// Family of every subset satisfying `pred`. `pred` must be pure.
    pub fn from_predicate(
        universe: usize,
        pred: impl Fn(&ArgSet) -> bool + Send + Sync + 'a,
    ) -> Self {
        SetFamily {
            universe,
            members: Members::Predicate(Box::new(pred)),
        }
    }

    pub fn from_members(universe: usize, mut members: Vec<ArgSet>) -> Self {
        members.sort();
        members.dedup();
        SetFamily {
            universe,
            members: Members::Explicit(members),
        }
    }

    /// The whole powerset.
    pub fn all_subsets(universe: usize) -> Self {
        Self::from_predicate(universe, |_| true)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn contains(&self, x: &ArgSet) -> bool {
        match &self.members {
            Members::Predicate(p) => p(x),
            Members::Explicit(list) => list.binary_search(x).is_ok(),
        }
    }

    /// Every member, in ascending bit-pattern order.
    pub fn members(&self) -> Vec<ArgSet> {
        match &self.members {
            Members::Predicate(p) => subsets_of(&ArgSet::full(self.universe))
                .filter(|s| p(s))
                .collect(),
            Members::Explicit(list) => list.clone(),
        }
    }
}

/// A total function on subsets of a finite universe.
pub struct SetTransformer<'a> {
    universe: usize,
    f: Transform<'a>,
}

impl<'a> SetTransformer<'a> {
    pub fn new(universe: usize, f: impl Fn(&ArgSet) -> ArgSet + Send + Sync + 'a) -> Self {
        SetTransformer {
            universe,
            f: Box::new(f),
        }
    }

    pub fn identity(universe: usize) -> Self {
        Self::new(universe, ArgSet::clone)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn apply(&self, set: &ArgSet) -> ArgSet {
        (self.f)(set)
    }
}

/// `x` is minimal among `members` under `proj`: no member projects strictly
/// below it. Membership of `x` itself is the caller's concern.
pub fn is_minimal_by<T>(members: &[T], x: &T, proj: impl Fn(&T) -> ArgSet) -> bool {
    let px = proj(x);
    members.iter().all(|o| {
        let po = proj(o);
        !po.is_subset(&px) || po == px
    })
}

pub fn is_maximal_by<T>(members: &[T], x: &T, proj: impl Fn(&T) -> ArgSet) -> bool {
    let px = proj(x);
    members.iter().all(|o| {
        let po = proj(o);
        !px.is_subset(&po) || po == px
    })
}

pub fn is_least_by<T>(members: &[T], x: &T, proj: impl Fn(&T) -> ArgSet) -> bool {
    let px = proj(x);
    members.iter().all(|o| px.is_subset(&proj(o)))
}

pub fn is_greatest_by<T>(members: &[T], x: &T, proj: impl Fn(&T) -> ArgSet) -> bool {
    let px = proj(x);
    members.iter().all(|o| proj(o).is_subset(&px))
}

pub fn is_minimal(family: &SetFamily<'_>, x: &ArgSet, proj: &SetTransformer<'_>) -> bool {
    family.contains(x) && is_minimal_by(&family.members(), x, |s| proj.apply(s))
}

pub fn is_maximal(family: &SetFamily<'_>, x: &ArgSet, proj: &SetTransformer<'_>) -> bool {
    family.contains(x) && is_maximal_by(&family.members(), x, |s| proj.apply(s))
}

pub fn is_least(family: &SetFamily<'_>, x: &ArgSet, proj: &SetTransformer<'_>) -> bool {
    family.contains(x) && is_least_by(&family.members(), x, |s| proj.apply(s))
}

pub fn is_greatest(family: &SetFamily<'_>, x: &ArgSet, proj: &SetTransformer<'_>) -> bool {
    family.contains(x) && is_greatest_by(&family.members(), x, |s| proj.apply(s))
}

/// Largest universe on which monotonicity is decided exhaustively.
pub const EXHAUSTIVE_MONOTONE_LIMIT: usize = 12;

const MONOTONE_SAMPLES: usize = 20_000;
const MONOTONE_SEED: u64 = 0x5eed_0ff1_ed00;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotonicity {
    /// Every covering pair `A ⊂ A ∪ {x}` was checked.
    Exhaustive { monotone: bool },
    /// Only `samples` random covering pairs were checked.
    Sampled {
        monotone: bool,
        samples: usize,
        seed: u64,
    },
}

impl Monotonicity {
    pub fn holds(self) -> bool {
        match self {
            Monotonicity::Exhaustive { monotone } | Monotonicity::Sampled { monotone, .. } => {
                monotone
            }
        }
    }

    pub fn is_exhaustive(self) -> bool {
        matches!(self, Monotonicity::Exhaustive { .. })
    }
}

/// Decides whether `A ⊆ B ⟹ f(A) ⊆ f(B)`.
///
/// Inclusion is the reflexive-transitive closure of the covering pairs
/// `A ⊂ A ∪ {x}`, so checking those suffices. Above
/// [`EXHAUSTIVE_MONOTONE_LIMIT`] arguments the covering pairs are sampled
/// and the verdict says so.
pub fn is_monotone(f: &SetTransformer<'_>) -> Monotonicity {
    let n = f.universe();
    let covering_ok = |a: &ArgSet, x: usize| {
        let fa = f.apply(a);
        fa.is_subset(&f.apply(&a.with(x)))
    };
    if n <= EXHAUSTIVE_MONOTONE_LIMIT {
        let monotone = subsets_of(&ArgSet::full(n)).all(|a| {
            (0..n)
                .filter(|&x| !a.contains(x))
                .all(|x| covering_ok(&a, x))
        });
        return Monotonicity::Exhaustive { monotone };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(MONOTONE_SEED);
    let mut monotone = true;
    for _ in 0..MONOTONE_SAMPLES {
        let mut a = ArgSet::empty(n);
        for i in 0..n {
            if rng.gen::<bool>() {
                a.insert(i);
            }
        }
        let x = rng.gen_range(0..n);
        if !a.contains(x) && !covering_ok(&a, x) {
            monotone = false;
            break;
        }
    }
    Monotonicity::Sampled {
        monotone,
        samples: MONOTONE_SAMPLES,
        seed: MONOTONE_SEED,
    }
}

pub fn is_fixpoint(f: &SetTransformer<'_>, set: &ArgSet) -> bool {
    f.apply(set) == *set
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixpointError {
    #[error("iteration did not stabilise within {steps} steps; the function is not monotone")]
    NoConvergence { steps: usize },
    #[error("iteration left the chain at step {step}; the function is not monotone")]
    NotMonotone { step: usize },
}

fn iterate(
    f: &SetTransformer<'_>,
    start: ArgSet,
    ascending: bool,
) -> Result<ArgSet, FixpointError> {
    let steps = f.universe() + 1;
    let mut current = start;
    for step in 0..steps {
        let next = f.apply(&current);
        if next == current {
            return Ok(current);
        }
        let on_chain = if ascending {
            current.is_subset(&next)
        } else {
            next.is_subset(&current)
        };
        if !on_chain {
            return Err(FixpointError::NotMonotone { step });
        }
        current = next;
    }
    Err(FixpointError::NoConvergence { steps })
}

/// Least fixed point of a monotone `f`, by iterating upward from `∅`.
pub fn least_fixpoint(f: &SetTransformer<'_>) -> Result<ArgSet, FixpointError> {
    iterate(f, ArgSet::empty(f.universe()), true)
}

/// Greatest fixed point of a monotone `f`, by iterating downward from the
/// full universe.
pub fn greatest_fixpoint(f: &SetTransformer<'_>) -> Result<ArgSet, FixpointError> {
    iterate(f, ArgSet::full(f.universe()), false)
}

/// Largest universe for which [`is_directed_complete`] enumerates every
/// subfamily.
pub const EXHAUSTIVE_DIRECTED_LIMIT: usize = 4;

/// Whether the union of every directed subfamily is itself a member.
///
/// A subfamily is directed when every two of its members have an upper
/// bound inside it; the empty subfamily counts, so its union `∅` must be a
/// member. Up to [`EXHAUSTIVE_DIRECTED_LIMIT`] arguments every subfamily is
/// enumerated. Beyond that the closed form is used: a finite non-empty
/// directed subfamily contains its own union as greatest element, leaving
/// only the empty subfamily to check.
pub fn is_directed_complete(family: &SetFamily<'_>) -> bool {
    if family.universe() <= EXHAUSTIVE_DIRECTED_LIMIT {
        directed_complete_by_enumeration(&family.members())
    } else {
        family.contains(&ArgSet::empty(family.universe()))
    }
}

/// Literal check over all subfamilies of `members` (at most 2^16 of them).
pub(crate) fn directed_complete_by_enumeration(members: &[ArgSet]) -> bool {
    assert!(
        members.len() <= 16,
        "too many members to enumerate subfamilies"
    );
    let m = members.len();
    (0..1u32 << m).all(|code| {
        let chosen: Vec<&ArgSet> = (0..m)
            .filter(|i| code >> i & 1 == 1)
            .map(|i| &members[i])
            .collect();
        let directed = chosen.iter().all(|x| {
            chosen
                .iter()
                .all(|y| chosen.iter().any(|z| x.is_subset(z) && y.is_subset(z)))
        });
        if !directed {
            return true;
        }
        let len = members.first().map_or(0, ArgSet::universe_len);
        let union = chosen
            .iter()
            .fold(ArgSet::empty(len), |acc, s| acc.union(s));
        members.contains(&union)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extensions::Extensions;
    use crate::fixtures;
    use crate::framework::Framework;

    fn family_of<'a>(
        af: &'a Framework,
        pred: fn(&Extensions<'_>, &ArgSet) -> bool,
    ) -> SetFamily<'a> {
        SetFamily::from_predicate(af.len(), move |s| pred(&Extensions::new(af), s))
    }

    fn ids(af: &Framework, names: &[&str]) -> ArgSet {
        af.set_of(names).unwrap()
    }

    #[test]
    fn minimality() {
        let chain = fixtures::chain();
        let id = SetTransformer::identity(3);
        let complete = family_of(&chain, |e, s| e.is_complete(s));
        assert!(is_minimal(&complete, &ids(&chain, &["A", "C"]), &id));
        assert!(is_minimal(
            &SetFamily::all_subsets(3),
            &ArgSet::empty(3),
            &id
        ));

        let cycle = fixtures::three_cycle();
        let cf = family_of(&cycle, |e, s| e.is_conflict_free(s));
        assert!(!is_minimal(&cf, &ids(&cycle, &["A"]), &id));
    }

    #[test]
    fn maximality() {
        let cycle = fixtures::three_cycle();
        let id = SetTransformer::identity(3);
        let cf = family_of(&cycle, |e, s| e.is_conflict_free(s));
        assert!(is_maximal(&cf, &ids(&cycle, &["A"]), &id));
        assert!(is_maximal(
            &SetFamily::all_subsets(3),
            &ArgSet::full(3),
            &id
        ));

        let simple = fixtures::simple4();
        let complete = family_of(&simple, |e, s| e.is_complete(s));
        // {A} is the least complete extension; {A,C} and {A,D} sit above it.
        assert!(!is_maximal(
            &complete,
            &ids(&simple, &["A"]),
            &SetTransformer::identity(4)
        ));
        // ∅ is not complete at all (A is unattacked).
        assert!(!is_maximal(
            &complete,
            &ArgSet::empty(4),
            &SetTransformer::identity(4)
        ));
    }

    #[test]
    fn least_and_greatest() {
        let chain = fixtures::chain();
        let id3 = SetTransformer::identity(3);
        let complete = family_of(&chain, |e, s| e.is_complete(s));
        assert!(is_least(&complete, &ids(&chain, &["A", "C"]), &id3));
        assert!(is_greatest(&complete, &ids(&chain, &["A", "C"]), &id3));
        assert!(is_least(
            &SetFamily::all_subsets(3),
            &ArgSet::empty(3),
            &id3
        ));
        assert!(is_greatest(
            &SetFamily::all_subsets(3),
            &ArgSet::full(3),
            &id3
        ));

        let cycle = fixtures::three_cycle();
        let stage = SetFamily::from_members(
            3,
            Extensions::new(&cycle).enumerate(crate::SemanticsId::Stage),
        );
        assert!(!is_least(&stage, &ids(&cycle, &["A"]), &id3));
        assert!(!is_greatest(&stage, &ids(&cycle, &["A"]), &id3));

        let float = fixtures::floating();
        let adm = family_of(&float, |e, s| e.is_admissible(s));
        assert!(!is_greatest(
            &adm,
            &ids(&float, &["A", "D"]),
            &SetTransformer::identity(4)
        ));
    }

    #[test]
    fn monotonicity() {
        let chain = fixtures::chain();
        let f = SetTransformer::new(3, |s| chain.characteristic(s));
        assert_eq!(is_monotone(&f), Monotonicity::Exhaustive { monotone: true });
        assert!(is_monotone(&SetTransformer::identity(5)).holds());
        let complement = SetTransformer::new(1, ArgSet::complement);
        assert_eq!(
            is_monotone(&complement),
            Monotonicity::Exhaustive { monotone: false }
        );
    }

    #[test]
    fn monotonicity_above_limit_is_sampled() {
        let verdict = is_monotone(&SetTransformer::identity(20));
        assert!(!verdict.is_exhaustive());
        assert!(verdict.holds());
        let verdict = is_monotone(&SetTransformer::new(20, ArgSet::complement));
        assert!(!verdict.is_exhaustive());
        assert!(!verdict.holds());
    }

    #[test]
    fn fixpoints() {
        let chain = fixtures::chain();
        let f = SetTransformer::new(3, |s| chain.characteristic(s));
        assert!(is_fixpoint(&f, &ids(&chain, &["A", "C"])));
        assert!(is_fixpoint(
            &SetTransformer::identity(3),
            &ids(&chain, &["B"])
        ));
        assert!(!is_fixpoint(&f, &ArgSet::empty(3)));

        assert_eq!(least_fixpoint(&f), Ok(ids(&chain, &["A", "C"])));
        assert_eq!(
            least_fixpoint(&SetTransformer::identity(3)),
            Ok(ArgSet::empty(3))
        );
        let cycle = fixtures::three_cycle();
        let g = SetTransformer::new(3, |s| cycle.characteristic(s));
        assert_eq!(least_fixpoint(&g), Ok(ArgSet::empty(3)));

        assert_eq!(
            greatest_fixpoint(&SetTransformer::identity(3)),
            Ok(ArgSet::full(3))
        );
        assert_eq!(greatest_fixpoint(&f), Ok(ids(&chain, &["A", "C"])));
        let selfish = fixtures::self_attack();
        let h = SetTransformer::new(1, |s| selfish.characteristic(s));
        // A attacks its only attacker, itself, so {A} defends A.
        assert_eq!(greatest_fixpoint(&h), Ok(ArgSet::full(1)));
        assert_eq!(least_fixpoint(&h), Ok(ArgSet::empty(1)));
    }

    #[test]
    fn non_monotone_iteration_is_reported() {
        let flip = SetTransformer::new(1, ArgSet::complement);
        assert!(least_fixpoint(&flip).is_err());
        assert!(greatest_fixpoint(&flip).is_err());
        // Grows on the first step, then shrinks.
        let bounce = SetTransformer::new(2, |s: &ArgSet| {
            if s.is_empty() {
                ArgSet::from_bits(2, 0b11)
            } else {
                ArgSet::from_bits(2, 0b01)
            }
        });
        assert_eq!(
            least_fixpoint(&bounce),
            Err(FixpointError::NotMonotone { step: 1 })
        );
    }

    #[test]
    fn directed_completeness() {
        let chain = fixtures::chain();
        let adm = family_of(&chain, |e, s| e.is_admissible(s));
        assert!(is_directed_complete(&adm));
        assert!(is_directed_complete(&SetFamily::all_subsets(3)));

        // {∅,{A},{B}}: {A},{B} have no common upper bound, so the only
        // directed subfamilies are chains, whose unions are members.
        let a = ArgSet::from_bits(2, 0b01);
        let b = ArgSet::from_bits(2, 0b10);
        let with_bottom = SetFamily::from_members(2, vec![ArgSet::empty(2), a.clone(), b.clone()]);
        assert!(is_directed_complete(&with_bottom));
        // Without ∅ the empty subfamily has no union in the family.
        let without_bottom = SetFamily::from_members(2, vec![a, b]);
        assert!(!is_directed_complete(&without_bottom));
    }

    #[test]
    fn directed_closed_form_matches_enumeration() {
        // Every family over a 3-element universe that has at most 8 members.
        for code in 0u32..256 {
            let members: Vec<ArgSet> = (0..8u64)
                .filter(|i| code >> i & 1 == 1)
                .map(|i| ArgSet::from_bits(3, i))
                .collect();
            let closed_form = members.contains(&ArgSet::empty(3));
            assert_eq!(
                directed_complete_by_enumeration(&members),
                closed_form,
                "{members:?}"
            );
        }
    }
}
