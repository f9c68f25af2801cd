//! Labelling-based semantics.
//!
//! A labelling assigns `In`, `Out` or `Undec` to every argument. It is
//! stored as its in-set and out-set; the undec-set is whatever remains.

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use thiserror::Error;

use crate::argset::ArgSet;
use crate::extensions::Strategy;
use crate::framework::{ArgId, Framework};
use crate::orders;
use crate::semantics::SemanticsId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    In,
    Out,
    Undec,
}

impl Label {
    pub const ALL: [Label; 3] = [Label::In, Label::Out, Label::Undec];
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabellingError {
    #[error("labellings of different frameworks ({0} vs {1} arguments)")]
    SizeMismatch(usize, usize),
}

/// A total map from the arguments of a framework to [`Label`]s.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Labelling {
    inn: ArgSet,
    out: ArgSet,
}

impl Labelling {
    pub fn all_undec(len: usize) -> Self {
        Labelling {
            inn: ArgSet::empty(len),
            out: ArgSet::empty(len),
        }
    }

    pub fn from_labels(labels: &[Label]) -> Self {
        let mut lab = Self::all_undec(labels.len());
        for (i, &l) in labels.iter().enumerate() {
            lab.set(i, l);
        }
        lab
    }

    /// # Panics
    ///
    /// Panics if the two sets overlap or live in different universes.
    pub fn from_sets(inn: ArgSet, out: ArgSet) -> Self {
        assert_eq!(inn.universe_len(), out.universe_len());
        assert!(!inn.intersects(&out), "in-set and out-set overlap");
        Labelling { inn, out }
    }

    pub fn len(&self) -> usize {
        self.inn.universe_len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, index: usize) -> Label {
        if self.inn.contains(index) {
            Label::In
        } else if self.out.contains(index) {
            Label::Out
        } else {
            Label::Undec
        }
    }

    pub fn set(&mut self, index: usize, label: Label) {
        self.inn.remove(index);
        self.out.remove(index);
        match label {
            Label::In => self.inn.insert(index),
            Label::Out => self.out.insert(index),
            Label::Undec => {}
        }
    }

    pub fn labels(&self) -> Vec<Label> {
        (0..self.len()).map(|i| self.get(i)).collect()
    }

    pub fn in_set(&self) -> &ArgSet {
        &self.inn
    }

    pub fn out_set(&self) -> &ArgSet {
        &self.out
    }

    pub fn undec_set(&self) -> ArgSet {
        self.inn.union(&self.out).complement()
    }

    /// `self ⊑ other`: both the in-set and the out-set are included.
    pub fn leq_committed(&self, other: &Labelling) -> Result<bool, LabellingError> {
        if self.len() != other.len() {
            return Err(LabellingError::SizeMismatch(self.len(), other.len()));
        }
        Ok(self.inn.is_subset(&other.inn) && self.out.is_subset(&other.out))
    }
}

/// Lexicographic by argument index, with `In < Out < Undec`.
impl Ord for Labelling {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            (0..self.len())
                .map(|i| self.get(i).cmp(&other.get(i)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for Labelling {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Labelling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({:?}, {:?}, {:?})",
            self.inn,
            self.out,
            self.undec_set()
        )
    }
}

/// Largest domain the labelling enumerators accept.
pub const MAX_ENUMERABLE: usize = 24;

/// Scans of at least `3^PARALLEL_TRITS` labellings are split across workers.
const PARALLEL_TRITS: usize = 9;

#[derive(Default)]
struct Cache {
    conflict_free: OnceLock<Vec<Labelling>>,
    admissible: OnceLock<Vec<Labelling>>,
    complete: OnceLock<Vec<Labelling>>,
    preferred: OnceLock<Vec<Labelling>>,
    quasi_ideal: OnceLock<Vec<Labelling>>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Base {
    ConflictFree,
    Admissible,
    Complete,
}

pub struct Labellings<'a> {
    af: &'a Framework,
    domain: ArgSet,
    strategy: Strategy,
    cache: Cache,
}

impl<'a> Labellings<'a> {
    pub fn new(af: &'a Framework) -> Self {
        Self::within(af, af.universe())
    }

    /// Labelling semantics relativised to `domain`. Enumerated labellings
    /// label every argument outside `domain` as `Undec`.
    pub fn within(af: &'a Framework, domain: ArgSet) -> Self {
        Labellings {
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

    fn attackers(&self, arg: usize) -> ArgSet {
        self.af.attackers_of(ArgId(arg)).intersection(&self.domain)
    }

    /// Every attacker is labelled `Out`.
    pub fn legally_in(&self, lab: &Labelling, arg: ArgId) -> bool {
        self.attackers(arg.0).is_subset(&lab.out)
    }

    /// Some attacker is labelled `In`.
    pub fn legally_out(&self, lab: &Labelling, arg: ArgId) -> bool {
        self.attackers(arg.0).intersects(&lab.inn)
    }

    pub fn legally_undec(&self, lab: &Labelling, arg: ArgId) -> bool {
        !self.legally_in(lab, arg) && !self.legally_out(lab, arg)
    }

    fn out_is_legal(&self, lab: &Labelling) -> bool {
        lab.out
            .intersection(&self.domain)
            .iter()
            .all(|x| self.legally_out(lab, ArgId(x)))
    }

    pub fn is_conflict_free(&self, lab: &Labelling) -> bool {
        lab.inn
            .intersection(&self.domain)
            .iter()
            .all(|x| !self.legally_out(lab, ArgId(x)))
            && self.out_is_legal(lab)
    }

    pub fn is_admissible(&self, lab: &Labelling) -> bool {
        lab.inn
            .intersection(&self.domain)
            .iter()
            .all(|x| self.legally_in(lab, ArgId(x)))
            && self.out_is_legal(lab)
    }

    pub fn is_complete(&self, lab: &Labelling) -> bool {
        self.is_admissible(lab)
            && lab
                .undec_set()
                .intersection(&self.domain)
                .iter()
                .all(|x| self.legally_undec(lab, ArgId(x)))
    }

    fn in_proj(&self) -> impl Fn(&Labelling) -> ArgSet + '_ {
        move |l| l.inn.intersection(&self.domain)
    }

    fn out_proj(&self) -> impl Fn(&Labelling) -> ArgSet + '_ {
        move |l| l.out.intersection(&self.domain)
    }

    fn undec_proj(&self) -> impl Fn(&Labelling) -> ArgSet + '_ {
        move |l| l.undec_set().intersection(&self.domain)
    }

    /// In-set and out-set side by side, so that `⊑` becomes plain inclusion.
    fn commitment_proj(&self) -> impl Fn(&Labelling) -> ArgSet + '_ {
        move |l| {
            l.inn
                .intersection(&self.domain)
                .concat(&l.out.intersection(&self.domain))
        }
    }

    /// Whether `lab` is a labelling under `sem`.
    pub fn is_labelling(&self, sem: SemanticsId, lab: &Labelling) -> bool {
        use SemanticsId::*;
        match sem {
            ConflictFree => self.is_conflict_free(lab),
            Admissible => self.is_admissible(lab),
            Complete => self.is_complete(lab),
            Stable => self.is_complete(lab) && self.undec_proj()(lab).is_empty(),
            Grounded => {
                self.is_complete(lab) && orders::is_minimal_by(self.complete(), lab, self.in_proj())
            }
            Preferred => {
                self.is_complete(lab) && orders::is_maximal_by(self.complete(), lab, self.in_proj())
            }
            SemiStable => {
                self.is_complete(lab)
                    && orders::is_minimal_by(self.complete(), lab, self.undec_proj())
            }
            Stage => {
                self.is_conflict_free(lab)
                    && orders::is_minimal_by(self.conflict_free(), lab, self.undec_proj())
            }
            IdealSet => self.is_quasi_ideal(lab),
            Ideal => {
                self.is_quasi_ideal(lab)
                    && orders::is_greatest_by(self.quasi_ideal(), lab, self.commitment_proj())
            }
        }
    }

    fn is_quasi_ideal(&self, lab: &Labelling) -> bool {
        let proj = self.commitment_proj();
        let mine = proj(lab);
        self.is_admissible(lab) && self.preferred().iter().all(|p| mine.is_subset(&proj(p)))
    }

    /// Grounded labelling by the minimal out-set instead of the minimal
    /// in-set.
    pub fn is_minimal_out_complete(&self, lab: &Labelling) -> bool {
        self.is_complete(lab) && orders::is_minimal_by(self.complete(), lab, self.out_proj())
    }

    pub fn is_maximal_out_complete(&self, lab: &Labelling) -> bool {
        self.is_complete(lab) && orders::is_maximal_by(self.complete(), lab, self.out_proj())
    }

    /// All labellings under `sem`, in lexicographic order.
    pub fn enumerate(&self, sem: SemanticsId) -> Vec<Labelling> {
        use SemanticsId::*;
        match sem {
            ConflictFree => self.conflict_free().to_vec(),
            Admissible => self.admissible().to_vec(),
            Complete => self.complete().to_vec(),
            Preferred => self.preferred().to_vec(),
            IdealSet => self.quasi_ideal().to_vec(),
            Stage => self.filter(self.conflict_free(), sem),
            Grounded | Stable | SemiStable => self.filter(self.complete(), sem),
            Ideal => self.filter(self.quasi_ideal(), sem),
        }
    }

    fn filter(&self, base: &[Labelling], sem: SemanticsId) -> Vec<Labelling> {
        base.iter()
            .filter(|l| self.is_labelling(sem, l))
            .cloned()
            .collect()
    }

    /// First labelling in enumeration order satisfying both `sem` and
    /// `constraint`.
    pub fn find_constrained(
        &self,
        sem: SemanticsId,
        constraint: impl Fn(&Labelling) -> bool,
    ) -> Option<Labelling> {
        self.enumerate(sem).into_iter().find(|l| constraint(l))
    }

    pub fn conflict_free(&self) -> &[Labelling] {
        self.cache
            .conflict_free
            .get_or_init(|| self.generate(Base::ConflictFree))
    }

    pub fn admissible(&self) -> &[Labelling] {
        self.cache
            .admissible
            .get_or_init(|| self.generate(Base::Admissible))
    }

    pub fn complete(&self) -> &[Labelling] {
        self.cache
            .complete
            .get_or_init(|| self.generate(Base::Complete))
    }

    pub fn preferred(&self) -> &[Labelling] {
        self.cache.preferred.get_or_init(|| {
            let complete = self.complete();
            complete
                .iter()
                .filter(|l| orders::is_maximal_by(complete, l, self.in_proj()))
                .cloned()
                .collect()
        })
    }

    pub fn quasi_ideal(&self) -> &[Labelling] {
        self.cache.quasi_ideal.get_or_init(|| {
            self.admissible()
                .iter()
                .filter(|l| self.is_quasi_ideal(l))
                .cloned()
                .collect()
        })
    }

    fn holds(&self, base: Base, lab: &Labelling) -> bool {
        match base {
            Base::ConflictFree => self.is_conflict_free(lab),
            Base::Admissible => self.is_admissible(lab),
            Base::Complete => self.is_complete(lab),
        }
    }

    fn domain_members(&self) -> Vec<usize> {
        let members: Vec<usize> = self.domain.iter().collect();
        assert!(
            members.len() <= MAX_ENUMERABLE,
            "refusing to enumerate 3^{} labellings",
            members.len()
        );
        members
    }

    fn generate(&self, base: Base) -> Vec<Labelling> {
        match self.strategy {
            Strategy::Naive => self.scan(base),
            Strategy::Pruned => self.backtrack(base),
        }
    }

    fn scan(&self, base: Base) -> Vec<Labelling> {
        let members = self.domain_members();
        let len = self.af.len();
        let decode = |mut code: u64| {
            let mut lab = Labelling::all_undec(len);
            for &x in members.iter().rev() {
                lab.set(x, Label::ALL[(code % 3) as usize]);
                code /= 3;
            }
            lab
        };
        let total = 3u64.pow(members.len() as u32);
        if members.len() >= PARALLEL_TRITS {
            (0..total as usize)
                .into_par_iter()
                .with_min_len(1 << 10)
                .map(|code| decode(code as u64))
                .filter(|l| self.holds(base, l))
                .collect()
        } else {
            (0..total)
                .map(decode)
                .filter(|l| self.holds(base, l))
                .collect()
        }
    }

    /// Whether the local condition of `x` holds; `x` and all its attackers
    /// must already be labelled.
    fn locally_ok(&self, base: Base, lab: &Labelling, x: usize) -> bool {
        let arg = ArgId(x);
        match lab.get(x) {
            Label::In => match base {
                Base::ConflictFree => !self.legally_out(lab, arg),
                Base::Admissible | Base::Complete => self.legally_in(lab, arg),
            },
            Label::Out => self.legally_out(lab, arg),
            Label::Undec => base != Base::Complete || self.legally_undec(lab, arg),
        }
    }

    fn backtrack(&self, base: Base) -> Vec<Labelling> {
        let members = self.domain_members();
        let mut position = vec![usize::MAX; self.af.len()];
        for (k, &x) in members.iter().enumerate() {
            position[x] = k;
        }
        // checks[k]: arguments whose condition is decided once members[k]
        // is labelled.
        let mut checks = vec![Vec::new(); members.len()];
        for &x in &members {
            let ready = self
                .attackers(x)
                .iter()
                .map(|b| position[b])
                .chain([position[x]])
                .max()
                .expect("x itself is in the domain");
            checks[ready].push(x);
        }
        let mut out = Vec::new();
        let mut lab = Labelling::all_undec(self.af.len());
        self.extend(base, &members, &checks, 0, &mut lab, &mut out);
        out
    }

    fn extend(
        &self,
        base: Base,
        members: &[usize],
        checks: &[Vec<usize>],
        at: usize,
        lab: &mut Labelling,
        out: &mut Vec<Labelling>,
    ) {
        let Some(&x) = members.get(at) else {
            out.push(lab.clone());
            return;
        };
        for label in Label::ALL {
            lab.set(x, label);
            if checks[at].iter().all(|&y| self.locally_ok(base, lab, y)) {
                self.extend(base, members, checks, at + 1, lab, out);
            }
        }
        lab.set(x, Label::Undec);
    }
}

pub fn in_set(lab: &Labelling) -> ArgSet {
    lab.in_set().clone()
}

pub fn out_set(lab: &Labelling) -> ArgSet {
    lab.out_set().clone()
}

pub fn undec_set(lab: &Labelling) -> ArgSet {
    lab.undec_set()
}

pub fn legally_in(af: &Framework, lab: &Labelling, arg: ArgId) -> bool {
    Labellings::new(af).legally_in(lab, arg)
}

pub fn legally_out(af: &Framework, lab: &Labelling, arg: ArgId) -> bool {
    Labellings::new(af).legally_out(lab, arg)
}

pub fn legally_undec(af: &Framework, lab: &Labelling, arg: ArgId) -> bool {
    Labellings::new(af).legally_undec(lab, arg)
}

pub fn is_conflict_free_lab(af: &Framework, lab: &Labelling) -> bool {
    Labellings::new(af).is_conflict_free(lab)
}

pub fn is_admissible_lab(af: &Framework, lab: &Labelling) -> bool {
    Labellings::new(af).is_admissible(lab)
}

pub fn is_complete_lab(af: &Framework, lab: &Labelling) -> bool {
    Labellings::new(af).is_complete(lab)
}

pub fn is_order_labelling(af: &Framework, sem: SemanticsId, lab: &Labelling) -> bool {
    Labellings::new(af).is_labelling(sem, lab)
}

pub fn leq_committed(a: &Labelling, b: &Labelling) -> Result<bool, LabellingError> {
    a.leq_committed(b)
}

pub fn enumerate_labellings(af: &Framework, sem: SemanticsId) -> Vec<Labelling> {
    Labellings::new(af).enumerate(sem)
}

pub fn find_constrained_labelling(
    af: &Framework,
    sem: SemanticsId,
    constraint: impl Fn(&Labelling) -> bool,
) -> Option<Labelling> {
    Labellings::new(af).find_constrained(sem, constraint)
}
