//! Argumentation frameworks and the primitive notions every semantics is
//! built from: attacked and attacking sets, defence, the characteristic
//! function, range, and restriction to a sub-domain.
//!
//! Each primitive has a `*_within` form that quantifies only over a domain
//! `D` of arguments. The plain forms use the whole universe as the domain.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::argset::ArgSet;

/// Dense index of an argument within its framework.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArgId(pub usize);

impl ArgId {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameworkError {
    #[error("duplicate argument `{0}`")]
    DuplicateArgument(String),
    #[error("attack endpoint `{0}` is not a declared argument")]
    UnknownArgument(String),
    #[error("invalid argument name `{0}` (expected [A-Za-z0-9_]+)")]
    InvalidName(String),
}

/// Whether `name` is a legal argument name.
pub fn is_valid_name(name: &str) -> bool {
    !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

/// A finite argumentation framework: a universe of named arguments and an
/// attack relation on it. Immutable once built.
#[derive(Clone)]
pub struct Framework {
    names: Vec<String>,
    index: HashMap<String, usize>,
    /// `attackers[a]` = every `b` with `b ⤳ a`.
    attackers: Vec<ArgSet>,
    /// `targets[a]` = every `b` with `a ⤳ b`.
    targets: Vec<ArgSet>,
}

impl Framework {
    /// Builds a framework from argument names and attacks given by name.
    /// Argument order follows `names`; repeated attacks collapse.
    pub fn new<N, A, S>(names: N, attacks: A) -> Result<Self, FrameworkError>
    where
        N: IntoIterator<Item = S>,
        A: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let mut af = Self::with_names(names)?;
        for (from, to) in attacks {
            let a = af.lookup(from.as_ref())?;
            let b = af.lookup(to.as_ref())?;
            af.add_attack(a, b);
        }
        Ok(af)
    }

    /// Builds a framework from argument names and attacks given by index.
    ///
    /// # Panics
    ///
    /// Panics if an attack index is out of range.
    pub fn from_indices<N, S>(
        names: N,
        attacks: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, FrameworkError>
    where
        N: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut af = Self::with_names(names)?;
        for (a, b) in attacks {
            af.add_attack(ArgId(a), ArgId(b));
        }
        Ok(af)
    }

    fn with_names<N, S>(names: N) -> Result<Self, FrameworkError>
    where
        N: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut list = Vec::new();
        let mut index = HashMap::new();
        for name in names {
            let name = name.as_ref();
            if !is_valid_name(name) {
                return Err(FrameworkError::InvalidName(name.to_string()));
            }
            if index.insert(name.to_string(), list.len()).is_some() {
                return Err(FrameworkError::DuplicateArgument(name.to_string()));
            }
            list.push(name.to_string());
        }
        let n = list.len();
        Ok(Framework {
            names: list,
            index,
            attackers: vec![ArgSet::empty(n); n],
            targets: vec![ArgSet::empty(n); n],
        })
    }

    fn lookup(&self, name: &str) -> Result<ArgId, FrameworkError> {
        self.id(name)
            .ok_or_else(|| FrameworkError::UnknownArgument(name.to_string()))
    }

    fn add_attack(&mut self, from: ArgId, to: ArgId) {
        self.targets[from.0].insert(to.0);
        self.attackers[to.0].insert(from.0);
    }

    /// Number of arguments.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, arg: ArgId) -> &str {
        &self.names[arg.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn id(&self, name: &str) -> Option<ArgId> {
        self.index.get(name).copied().map(ArgId)
    }

    pub fn arguments(&self) -> impl Iterator<Item = ArgId> {
        (0..self.len()).map(ArgId)
    }

    pub fn universe(&self) -> ArgSet {
        ArgSet::full(self.len())
    }

    pub fn empty_set(&self) -> ArgSet {
        ArgSet::empty(self.len())
    }

    /// Set of the named arguments. Unknown names are an error.
    pub fn set_of<S: AsRef<str>>(
        &self,
        names: impl IntoIterator<Item = S>,
    ) -> Result<ArgSet, FrameworkError> {
        let mut set = self.empty_set();
        for name in names {
            set.insert(self.lookup(name.as_ref())?.0);
        }
        Ok(set)
    }

    pub fn attacks(&self, from: ArgId, to: ArgId) -> bool {
        self.targets[from.0].contains(to.0)
    }

    /// Attack pairs in ascending (attacker, target) order.
    pub fn attack_pairs(&self) -> impl Iterator<Item = (ArgId, ArgId)> + '_ {
        self.targets
            .iter()
            .enumerate()
            .flat_map(|(a, ts)| ts.iter().map(move |b| (ArgId(a), ArgId(b))))
    }

    pub fn attack_count(&self) -> usize {
        self.targets.iter().map(ArgSet::count).sum()
    }

    /// Arguments attacking `arg`.
    pub fn attackers_of(&self, arg: ArgId) -> &ArgSet {
        &self.attackers[arg.0]
    }

    /// Arguments attacked by `arg`.
    pub fn targets_of(&self, arg: ArgId) -> &ArgSet {
        &self.targets[arg.0]
    }

    /// `S⁺`: every argument attacked by some member of `set`.
    pub fn attacked_set(&self, set: &ArgSet) -> ArgSet {
        let mut out = self.empty_set();
        for a in set {
            out.union_with(&self.targets[a]);
        }
        out
    }

    /// `S⁻`: every argument attacking some member of `set`.
    pub fn attacker_set(&self, set: &ArgSet) -> ArgSet {
        let mut out = self.empty_set();
        for a in set {
            out.union_with(&self.attackers[a]);
        }
        out
    }

    /// Whether every attacker of `arg` is itself attacked by a member of `set`.
    pub fn defends(&self, set: &ArgSet, arg: ArgId) -> bool {
        self.attackers[arg.0]
            .iter()
            .all(|b| self.attackers[b].intersects(set))
    }

    /// The characteristic function: all arguments defended by `set`.
    pub fn characteristic(&self, set: &ArgSet) -> ArgSet {
        ArgSet::from_indices(
            self.len(),
            self.arguments()
                .filter(|&a| self.defends(set, a))
                .map(ArgId::index),
        )
    }

    /// `S ∪ S⁺`.
    pub fn range_of(&self, set: &ArgSet) -> ArgSet {
        set.union(&self.attacked_set(set))
    }

    /// `S⁺` with both the attacker and the result confined to `domain`.
    pub fn attacked_within(&self, domain: &ArgSet, set: &ArgSet) -> ArgSet {
        let mut out = self.empty_set();
        for a in set.intersection(domain).iter() {
            out.union_with(&self.targets[a]);
        }
        out.intersect_with(domain);
        out
    }

    /// `S⁻` relativised to `domain`.
    pub fn attacker_within(&self, domain: &ArgSet, set: &ArgSet) -> ArgSet {
        let mut out = self.empty_set();
        for a in set.intersection(domain).iter() {
            out.union_with(&self.attackers[a]);
        }
        out.intersect_with(domain);
        out
    }

    /// Defence where both the attackers considered and the defenders are
    /// drawn from `domain`.
    pub fn defends_within(&self, domain: &ArgSet, set: &ArgSet, arg: ArgId) -> bool {
        let defenders = set.intersection(domain);
        self.attackers[arg.0]
            .intersection(domain)
            .iter()
            .all(|b| self.attackers[b].intersects(&defenders))
    }

    /// The characteristic function relativised to `domain`; the result is a
    /// subset of `domain`.
    pub fn characteristic_within(&self, domain: &ArgSet, set: &ArgSet) -> ArgSet {
        ArgSet::from_indices(
            self.len(),
            domain
                .iter()
                .filter(|&a| self.defends_within(domain, set, ArgId(a))),
        )
    }

    /// `(S ∪ S⁺) ∩ domain`.
    pub fn range_within(&self, domain: &ArgSet, set: &ArgSet) -> ArgSet {
        set.intersection(domain)
            .union(&self.attacked_within(domain, set))
    }

    /// The sub-framework induced by `domain`, reindexed densely in ascending
    /// index order with the original names.
    pub fn restrict(&self, domain: &ArgSet) -> Framework {
        let kept: Vec<usize> = domain.iter().collect();
        let mut position = vec![usize::MAX; self.len()];
        for (new, &old) in kept.iter().enumerate() {
            position[old] = new;
        }
        let attacks = self
            .attack_pairs()
            .filter(|(a, b)| domain.contains(a.0) && domain.contains(b.0))
            .map(|(a, b)| (position[a.0], position[b.0]));
        Framework::from_indices(kept.iter().map(|&i| self.names[i].as_str()), attacks)
            .expect("restriction of a valid framework is valid")
    }

    /// Maps a set over `self.restrict(domain)` back into this framework.
    pub fn lift_from_restriction(&self, domain: &ArgSet, set: &ArgSet) -> ArgSet {
        let kept: Vec<usize> = domain.iter().collect();
        ArgSet::from_indices(self.len(), set.iter().map(|i| kept[i]))
    }

    /// Human-readable `{A,C}` form of a set.
    pub fn show(&self, set: &ArgSet) -> String {
        let names: Vec<&str> = set.iter().map(|i| self.names[i].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }
}

impl PartialEq for Framework {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.targets == other.targets
    }
}

impl Eq for Framework {}

impl fmt::Debug for Framework {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let attacks: Vec<String> = self
            .attack_pairs()
            .map(|(a, b)| format!("{}->{}", self.name(a), self.name(b)))
            .collect();
        f.debug_struct("Framework")
            .field("arguments", &self.names)
            .field("attacks", &attacks)
            .finish()
    }
}
