//! Extension-based semantics.
//!
//! [`Extensions`] evaluates membership predicates and enumerates extension
//! families for one framework, optionally relativised to a domain of
//! arguments. Families are computed once and cached, so a single
//! `Extensions` value can answer many queries cheaply.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::argset::ArgSet;
use crate::framework::{ArgId, Framework};
use crate::orders::{self, SetTransformer};
use crate::semantics::SemanticsId;

/// How candidate sets (or labellings) are generated before filtering.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Scan every candidate. This is the reference path.
    #[default]
    Naive,
    /// Backtracking generation that never builds a candidate violating a
    /// local constraint. Produces exactly the naive output.
    Pruned,
}

/// Scans of at least `2^PARALLEL_BITS` candidates are split across workers.
pub(crate) const PARALLEL_BITS: usize = 14;

/// Largest domain the enumerators accept.
pub const MAX_ENUMERABLE: usize = 40;

#[derive(Default)]
struct Cache {
    conflict_free: OnceLock<Vec<ArgSet>>,
    admissible: OnceLock<Vec<ArgSet>>,
    complete: OnceLock<Vec<ArgSet>>,
    preferred: OnceLock<Vec<ArgSet>>,
    ideal_sets: OnceLock<Vec<ArgSet>>,
}

pub struct Extensions<'a> {
    af: &'a Framework,
    domain: ArgSet,
    strategy: Strategy,
    cache: Cache,
}

impl<'a> Extensions<'a> {
    pub fn new(af: &'a Framework) -> Self {
        Self::within(af, af.universe())
    }

    /// Semantics relativised to `domain`: quantifiers range over `domain`
    /// only, and enumerated extensions are subsets of it.
    pub fn within(af: &'a Framework, domain: ArgSet) -> Self {
        Extensions {
            af,
            domain,
            strategy: Strategy::Naive,
            cache: Cache::default(),
        }
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn framework(&self) -> &'a Framework {
        self.af
    }

    pub fn domain(&self) -> &ArgSet {
        &self.domain
    }

    pub fn is_conflict_free(&self, set: &ArgSet) -> bool {
        let s = set.intersection(&self.domain);
        s.iter()
            .all(|a| !self.af.targets_of(ArgId(a)).intersects(&s))
    }

    pub fn is_admissible(&self, set: &ArgSet) -> bool {
        self.is_conflict_free(set)
            && set
                .intersection(&self.domain)
                .iter()
                .all(|a| self.af.defends_within(&self.domain, set, ArgId(a)))
    }

    pub fn is_complete(&self, set: &ArgSet) -> bool {
        self.is_admissible(set)
            && self
                .af
                .characteristic_within(&self.domain, set)
                .is_subset_within(set, &self.domain)
    }

    pub fn is_stable(&self, set: &ArgSet) -> bool {
        self.is_conflict_free(set)
            && self
                .domain
                .is_subset(&self.af.range_within(&self.domain, set))
    }

    fn id_proj(&self) -> impl Fn(&ArgSet) -> ArgSet + '_ {
        move |s| s.intersection(&self.domain)
    }

    fn range_proj(&self) -> impl Fn(&ArgSet) -> ArgSet + '_ {
        move |s| self.af.range_within(&self.domain, s)
    }

    /// Whether `set` is an extension under `sem`.
    pub fn is_extension(&self, sem: SemanticsId, set: &ArgSet) -> bool {
        use SemanticsId::*;
        let s = set.intersection(&self.domain);
        match sem {
            ConflictFree => self.is_conflict_free(&s),
            Admissible => self.is_admissible(&s),
            Complete => self.is_complete(&s),
            Stable => self.is_stable(&s),
            Grounded => {
                self.is_complete(&s) && orders::is_minimal_by(self.complete(), &s, self.id_proj())
            }
            Preferred => {
                self.is_complete(&s) && orders::is_maximal_by(self.complete(), &s, self.id_proj())
            }
            SemiStable => {
                self.is_complete(&s)
                    && orders::is_maximal_by(self.complete(), &s, self.range_proj())
            }
            Stage => {
                self.is_conflict_free(&s)
                    && orders::is_maximal_by(self.conflict_free(), &s, self.range_proj())
            }
            IdealSet => self.is_ideal_set(&s),
            Ideal => {
                self.is_ideal_set(&s)
                    && orders::is_greatest_by(self.ideal_sets(), &s, self.id_proj())
            }
        }
    }

    fn is_ideal_set(&self, s: &ArgSet) -> bool {
        self.is_admissible(s) && self.preferred().iter().all(|p| s.is_subset(p))
    }

    /// All extensions under `sem`, ascending by bit pattern.
    pub fn enumerate(&self, sem: SemanticsId) -> Vec<ArgSet> {
        use SemanticsId::*;
        match sem {
            ConflictFree => self.conflict_free().to_vec(),
            Admissible => self.admissible().to_vec(),
            Complete => self.complete().to_vec(),
            Preferred => self.preferred().to_vec(),
            IdealSet => self.ideal_sets().to_vec(),
            Stable | Stage => self
                .conflict_free()
                .iter()
                .filter(|s| self.is_extension(sem, s))
                .cloned()
                .collect(),
            Grounded | SemiStable => self
                .complete()
                .iter()
                .filter(|s| self.is_extension(sem, s))
                .cloned()
                .collect(),
            Ideal => self
                .ideal_sets()
                .iter()
                .filter(|s| orders::is_greatest_by(self.ideal_sets(), s, self.id_proj()))
                .cloned()
                .collect(),
        }
    }

    pub fn conflict_free(&self) -> &[ArgSet] {
        self.cache
            .conflict_free
            .get_or_init(|| match self.strategy {
                Strategy::Naive => self.scan(|s| self.is_conflict_free(s)),
                Strategy::Pruned => self.conflict_free_by_backtracking(),
            })
    }

    pub fn admissible(&self) -> &[ArgSet] {
        self.cache.admissible.get_or_init(|| {
            self.conflict_free()
                .iter()
                .filter(|s| self.is_admissible(s))
                .cloned()
                .collect()
        })
    }

    pub fn complete(&self) -> &[ArgSet] {
        self.cache.complete.get_or_init(|| {
            self.admissible()
                .iter()
                .filter(|s| self.is_complete(s))
                .cloned()
                .collect()
        })
    }

    pub fn preferred(&self) -> &[ArgSet] {
        self.cache.preferred.get_or_init(|| {
            let complete = self.complete();
            complete
                .iter()
                .filter(|s| orders::is_maximal_by(complete, s, self.id_proj()))
                .cloned()
                .collect()
        })
    }

    /// Admissible subsets of the intersection of all preferred extensions.
    pub fn ideal_sets(&self) -> &[ArgSet] {
        self.cache.ideal_sets.get_or_init(|| {
            let common = self
                .preferred()
                .iter()
                .fold(self.domain.clone(), |acc, p| acc.intersection(p));
            self.admissible()
                .iter()
                .filter(|s| s.is_subset(&common))
                .cloned()
                .collect()
        })
    }

    /// The grounded extension by fixpoint iteration of the characteristic
    /// function.
    pub fn grounded(&self) -> ArgSet {
        let f = SetTransformer::new(self.af.len(), |s| {
            self.af.characteristic_within(&self.domain, s)
        });
        orders::least_fixpoint(&f).expect("the characteristic function is monotone")
    }

    pub fn credulous(&self, sem: SemanticsId, arg: ArgId) -> bool {
        if sem == SemanticsId::Grounded {
            return self.grounded().contains(arg.0);
        }
        self.enumerate(sem).iter().any(|s| s.contains(arg.0))
    }

    /// Vacuously true when `sem` has no extension.
    pub fn skeptical(&self, sem: SemanticsId, arg: ArgId) -> bool {
        if sem == SemanticsId::Grounded {
            return self.grounded().contains(arg.0);
        }
        self.enumerate(sem).iter().all(|s| s.contains(arg.0))
    }

    fn domain_members(&self) -> Vec<usize> {
        let members: Vec<usize> = self.domain.iter().collect();
        assert!(
            members.len() <= MAX_ENUMERABLE,
            "refusing to enumerate 2^{} candidate sets",
            members.len()
        );
        members
    }

    /// Every subset of the domain satisfying `pred`, ascending.
    fn scan(&self, pred: impl Fn(&ArgSet) -> bool + Sync) -> Vec<ArgSet> {
        let members = self.domain_members();
        let len = self.af.len();
        let decode = |code: u64| {
            let mut set = ArgSet::empty(len);
            let mut rest = code;
            while rest != 0 {
                set.insert(members[rest.trailing_zeros() as usize]);
                rest &= rest - 1;
            }
            set
        };
        let total = 1u64 << members.len();
        if members.len() >= PARALLEL_BITS {
            (0..total as usize)
                .into_par_iter()
                .with_min_len(1 << 10)
                .map(|code| decode(code as u64))
                .filter(|s| pred(s))
                .collect()
        } else {
            (0..total).map(decode).filter(|s| pred(s)).collect()
        }
    }

    fn conflict_free_by_backtracking(&self) -> Vec<ArgSet> {
        let members = self.domain_members();
        let mut out = Vec::new();
        let mut current = self.af.empty_set();
        self.extend_conflict_free(&members, 0, &mut current, &mut out);
        out.sort();
        out
    }

    fn extend_conflict_free(
        &self,
        members: &[usize],
        at: usize,
        current: &mut ArgSet,
        out: &mut Vec<ArgSet>,
    ) {
        let Some(&x) = members.get(at) else {
            out.push(current.clone());
            return;
        };
        self.extend_conflict_free(members, at + 1, current, out);
        let arg = ArgId(x);
        let clashes = self.af.attacks(arg, arg)
            || self.af.targets_of(arg).intersects(current)
            || self.af.attackers_of(arg).intersects(current);
        if !clashes {
            current.insert(x);
            self.extend_conflict_free(members, at + 1, current, out);
            current.remove(x);
        }
    }
}

pub fn is_conflict_free(af: &Framework, set: &ArgSet) -> bool {
    Extensions::new(af).is_conflict_free(set)
}

pub fn is_admissible(af: &Framework, set: &ArgSet) -> bool {
    Extensions::new(af).is_admissible(set)
}

pub fn is_complete(af: &Framework, set: &ArgSet) -> bool {
    Extensions::new(af).is_complete(set)
}

pub fn is_stable(af: &Framework, set: &ArgSet) -> bool {
    Extensions::new(af).is_stable(set)
}

/// Membership test for any semantics, including those defined by an order
/// condition over a family (grounded, preferred, semi-stable, stage, ideal).
pub fn is_order_extension(af: &Framework, sem: SemanticsId, set: &ArgSet) -> bool {
    Extensions::new(af).is_extension(sem, set)
}

pub fn grounded_extension(af: &Framework) -> ArgSet {
    Extensions::new(af).grounded()
}

pub fn enumerate_extensions(af: &Framework, sem: SemanticsId) -> Vec<ArgSet> {
    Extensions::new(af).enumerate(sem)
}

pub fn credulous(af: &Framework, sem: SemanticsId, arg: ArgId) -> bool {
    Extensions::new(af).credulous(sem, arg)
}

pub fn skeptical(af: &Framework, sem: SemanticsId, arg: ArgId) -> bool {
    Extensions::new(af).skeptical(sem, arg)
}
