//! Exhaustive small-model checking of properties of the semantics.
//!
//! A [`Property`] is a host predicate over a framework plus a tuple of
//! witnesses (sets, labellings, arguments, semantics). [`check_property`]
//! evaluates it on every framework up to a size bound and either certifies
//! it or returns the first counterexample, minimised and relabelled for
//! readability.

mod properties;

use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::argset::{subsets_of, ArgSet};
use crate::extensions::Extensions;
use crate::framework::{ArgId, Framework};
use crate::io::to_apx;
use crate::labellings::{Label, Labelling, Labellings};
use crate::random::letter_names;
use crate::semantics::SemanticsId;

pub use properties::builtin_properties;

/// What a signature position ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    /// Every subset of the arguments.
    Set,
    /// Every labelling.
    Labelling,
    Argument,
    Semantics,
    /// Only the extensions of one semantics.
    Extension(SemanticsId),
    /// Only the labellings of one semantics.
    LabellingOf(SemanticsId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Set(ArgSet),
    Labelling(Labelling),
    Argument(ArgId),
    Semantics(SemanticsId),
}

impl Witness {
    pub fn set(&self) -> &ArgSet {
        match self {
            Witness::Set(s) => s,
            other => panic!("expected a set witness, got {other:?}"),
        }
    }

    pub fn labelling(&self) -> &Labelling {
        match self {
            Witness::Labelling(l) => l,
            other => panic!("expected a labelling witness, got {other:?}"),
        }
    }

    pub fn argument(&self) -> ArgId {
        match self {
            Witness::Argument(a) => *a,
            other => panic!("expected an argument witness, got {other:?}"),
        }
    }

    pub fn semantics(&self) -> SemanticsId {
        match self {
            Witness::Semantics(s) => *s,
            other => panic!("expected a semantics witness, got {other:?}"),
        }
    }

    /// `{A,C}`, `({A},{},{B,C})`, `C` or `PR`.
    pub fn show(&self, af: &Framework) -> String {
        match self {
            Witness::Set(s) => af.show(s),
            Witness::Labelling(l) => format!(
                "({},{},{})",
                af.show(l.in_set()),
                af.show(l.out_set()),
                af.show(&l.undec_set())
            ),
            Witness::Argument(a) => af.name(*a).to_string(),
            Witness::Semantics(s) => s.abbreviation().to_string(),
        }
    }
}

/// What the literature says about a property.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    Holds,
    Refuted,
    /// Checked and reported, but no outcome is asserted.
    Advisory,
}

/// Per-framework evaluation state shared by all witness tuples.
pub struct Ctx<'a> {
    pub af: &'a Framework,
    pub ext: Extensions<'a>,
    pub lab: Labellings<'a>,
    families: [OnceLock<Vec<ArgSet>>; 10],
    lab_families: [OnceLock<Vec<Labelling>>; 10],
}

fn slot(sem: SemanticsId) -> usize {
    SemanticsId::ALL
        .iter()
        .position(|&s| s == sem)
        .expect("listed")
}

impl<'a> Ctx<'a> {
    pub fn new(af: &'a Framework) -> Self {
        Ctx {
            af,
            ext: Extensions::new(af),
            lab: Labellings::new(af),
            families: Default::default(),
            lab_families: Default::default(),
        }
    }

    pub fn extensions(&self, sem: SemanticsId) -> &[ArgSet] {
        self.families[slot(sem)].get_or_init(|| self.ext.enumerate(sem))
    }

    pub fn labellings(&self, sem: SemanticsId) -> &[Labelling] {
        self.lab_families[slot(sem)].get_or_init(|| self.lab.enumerate(sem))
    }

    fn domain(&self, kind: WitnessKind) -> Vec<Witness> {
        let n = self.af.len();
        match kind {
            WitnessKind::Set => subsets_of(&self.af.universe()).map(Witness::Set).collect(),
            WitnessKind::Labelling => all_labellings(n)
                .into_iter()
                .map(Witness::Labelling)
                .collect(),
            WitnessKind::Argument => self.af.arguments().map(Witness::Argument).collect(),
            WitnessKind::Semantics => SemanticsId::ALL
                .into_iter()
                .map(Witness::Semantics)
                .collect(),
            WitnessKind::Extension(sem) => self
                .extensions(sem)
                .iter()
                .cloned()
                .map(Witness::Set)
                .collect(),
            WitnessKind::LabellingOf(sem) => self
                .labellings(sem)
                .iter()
                .cloned()
                .map(Witness::Labelling)
                .collect(),
        }
    }
}

/// All `3^n` labellings in lexicographic order (`In < Out < Undec`).
fn all_labellings(n: usize) -> Vec<Labelling> {
    let mut out = vec![Labelling::all_undec(n)];
    for i in 0..n {
        out = out
            .into_iter()
            .flat_map(|l| {
                Label::ALL.into_iter().map(move |label| {
                    let mut next = l.clone();
                    next.set(i, label);
                    next
                })
            })
            .collect();
    }
    out
}

type Body = dyn Fn(&Ctx<'_>, &[Witness]) -> bool + Send + Sync;

/// A checkable statement: identifier, prose, witness signature, and the
/// predicate itself.
#[derive(Clone)]
pub struct Property {
    id: String,
    statement: String,
    signature: Vec<(&'static str, WitnessKind)>,
    expectation: Expectation,
    body: Arc<Body>,
}

impl fmt::Debug for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Property")
            .field("id", &self.id)
            .field("signature", &self.signature)
            .field("expectation", &self.expectation)
            .finish()
    }
}

impl Property {
    pub fn new(
        id: impl Into<String>,
        statement: impl Into<String>,
        signature: &[(&'static str, WitnessKind)],
        expectation: Expectation,
        body: impl Fn(&Ctx<'_>, &[Witness]) -> bool + Send + Sync + 'static,
    ) -> Self {
        Property {
            id: id.into(),
            statement: statement.into(),
            signature: signature.to_vec(),
            expectation,
            body: Arc::new(body),
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn statement(&self) -> &str {
        &self.statement
    }

    pub fn signature(&self) -> &[(&'static str, WitnessKind)] {
        &self.signature
    }

    pub fn expectation(&self) -> Expectation {
        self.expectation
    }

    pub fn evaluate(&self, af: &Framework, witnesses: &[Witness]) -> bool {
        (self.body)(&Ctx::new(af), witnesses)
    }

    /// First refuting witness tuple on `af`, in lexicographic order of the
    /// signature domains.
    pub fn first_refutation(&self, af: &Framework) -> Option<Vec<Witness>> {
        let ctx = Ctx::new(af);
        let domains: Vec<Vec<Witness>> = self
            .signature
            .iter()
            .map(|&(_, kind)| ctx.domain(kind))
            .collect();
        if domains.iter().any(Vec::is_empty) {
            return None;
        }
        let mut index = vec![0; domains.len()];
        let mut tuple: Vec<Witness> = domains.iter().map(|d| d[0].clone()).collect();
        loop {
            if !(self.body)(&ctx, &tuple) {
                return Some(tuple);
            }
            // Odometer step, last position fastest.
            let mut pos = domains.len();
            loop {
                if pos == 0 {
                    return None;
                }
                pos -= 1;
                index[pos] += 1;
                if index[pos] < domains[pos].len() {
                    tuple[pos] = domains[pos][index[pos]].clone();
                    break;
                }
                index[pos] = 0;
                tuple[pos] = domains[pos][0].clone();
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub framework: Framework,
    pub bindings: Vec<(String, Witness)>,
}

impl Counterexample {
    pub fn witnesses(&self) -> Vec<Witness> {
        self.bindings.iter().map(|(_, w)| w.clone()).collect()
    }

    pub fn binding(&self, name: &str) -> Option<&Witness> {
        self.bindings
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, w)| w)
    }

    /// Whether `prop` is still false on this counterexample.
    pub fn refutes(&self, prop: &Property) -> bool {
        !prop.evaluate(&self.framework, &self.witnesses())
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_apx(&self.framework))?;
        for (name, w) in &self.bindings {
            writeln!(f, "% {name} = {}", w.show(&self.framework))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// No counterexample among `frameworks` frameworks of size at most
    /// `max_n`. `seed` is set when the frameworks were sampled.
    Verified {
        max_n: usize,
        frameworks: u64,
        seed: Option<u64>,
    },
    Refuted(Counterexample),
}

impl Verdict {
    pub fn is_verified(&self) -> bool {
        matches!(self, Verdict::Verified { .. })
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        match self {
            Verdict::Refuted(c) => Some(c),
            Verdict::Verified { .. } => None,
        }
    }

    /// Whether the outcome agrees with what the property expects.
    pub fn matches(&self, expectation: Expectation) -> bool {
        match expectation {
            Expectation::Holds => self.is_verified(),
            Expectation::Refuted => !self.is_verified(),
            Expectation::Advisory => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MetaError {
    #[error(
        "enumerating frameworks with {n} arguments{} exceeds the default budget",
        if *.dedup { " (deduplicated)" } else { "" }
    )]
    Budget { n: usize, dedup: bool },
    #[error("frameworks with {0} arguments cannot be enumerated")]
    TooLarge(usize),
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
}

/// Largest size for which attack relations fit the 64-bit mask encoding.
pub const MAX_ENUMERATED_ARGS: usize = 7;

/// Size at which [`check_property`] switches to isomorphism-deduplicated
/// enumeration by default.
pub const DEFAULT_DEDUP_FROM: usize = 5;

/// How [`check_with`] enumerates frameworks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub max_n: usize,
    /// Sizes at or above this bound are deduplicated up to isomorphism.
    pub dedup_from: usize,
    /// Lift the budget guard on large sizes.
    pub allow_large: bool,
}

impl CheckOptions {
    pub fn new(max_n: usize) -> Self {
        CheckOptions {
            max_n,
            dedup_from: DEFAULT_DEDUP_FROM,
            allow_large: false,
        }
    }

    pub fn dedup_all(mut self) -> Self {
        self.dedup_from = 0;
        self
    }
}

/// The attack relations enumerated for one size, as row-major masks with bit
/// `i*n + j` standing for the attack `(i, j)`.
#[derive(Clone, Debug)]
pub enum Masks {
    All { n: usize },
    Canonical { n: usize, masks: Vec<u64> },
}

impl Masks {
    pub fn new(n: usize, dedup: bool, allow_large: bool) -> Result<Self, MetaError> {
        if n > MAX_ENUMERATED_ARGS {
            return Err(MetaError::TooLarge(n));
        }
        if !allow_large && n > DEFAULT_DEDUP_FROM {
            return Err(MetaError::Budget { n, dedup });
        }
        Ok(if dedup {
            Masks::Canonical {
                n,
                masks: canonical_masks(n),
            }
        } else {
            Masks::All { n }
        })
    }

    pub fn arguments(&self) -> usize {
        match self {
            Masks::All { n } | Masks::Canonical { n, .. } => *n,
        }
    }

    pub fn len(&self) -> u64 {
        match self {
            Masks::All { n } => 1u64 << (n * n),
            Masks::Canonical { masks, .. } => masks.len() as u64,
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, index: u64) -> u64 {
        match self {
            Masks::All { .. } => index,
            Masks::Canonical { masks, .. } => masks[index as usize],
        }
    }

    pub fn framework(&self, index: u64) -> Framework {
        framework_from_mask(self.arguments(), self.get(index))
    }
}

/// Arguments are named `A`, `B`, ... in index order.
pub fn framework_from_mask(n: usize, mask: u64) -> Framework {
    let attacks = (0..n * n)
        .filter(|k| mask >> k & 1 == 1)
        .map(|k| (k / n, k % n));
    Framework::from_indices(letter_names(n), attacks).expect("letter names are valid")
}

pub fn mask_of(af: &Framework) -> u64 {
    let n = af.len();
    af.attack_pairs()
        .fold(0, |m, (a, b)| m | 1 << (a.index() * n + b.index()))
}

/// All frameworks with `n` arguments in ascending mask order, or one
/// representative per isomorphism class with `dedup`. Sizes above
/// [`DEFAULT_DEDUP_FROM`] are refused; see [`Masks::new`] to override.
pub fn enumerate_frameworks(
    n: usize,
    dedup: bool,
) -> Result<impl Iterator<Item = Framework>, MetaError> {
    let masks = Masks::new(n, dedup, false)?;
    Ok((0..masks.len()).map(move |i| masks.framework(i)))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// For a permutation `p` (old index `i` becomes `p[i]`), the source bit of
/// every position of the permuted adjacency string.
fn source_positions(n: usize, perm: &[usize]) -> Vec<usize> {
    let mut inverse = vec![0; n];
    for (old, &new) in perm.iter().enumerate() {
        inverse[new] = old;
    }
    (0..n * n)
        .map(|k| inverse[k / n] * n + inverse[k % n])
        .collect()
}

/// Compares the adjacency strings of `mask` and its image under the
/// permutation described by `source`, position 0 first.
fn compare_with_permuted(mask: u64, source: &[usize]) -> std::cmp::Ordering {
    for (k, &src) in source.iter().enumerate() {
        let mine = mask >> k & 1;
        let theirs = mask >> src & 1;
        if mine != theirs {
            return mine.cmp(&theirs);
        }
    }
    std::cmp::Ordering::Equal
}

/// Whether `mask` has the lexicographically minimal adjacency string in its
/// permutation class.
pub fn is_canonical(n: usize, mask: u64) -> bool {
    let sources: Vec<Vec<usize>> = permutations(n)
        .iter()
        .map(|p| source_positions(n, p))
        .collect();
    canonical_under(mask, &sources)
}

fn canonical_under(mask: u64, sources: &[Vec<usize>]) -> bool {
    sources
        .iter()
        .all(|src| compare_with_permuted(mask, src) != std::cmp::Ordering::Greater)
}

fn canonical_masks(n: usize) -> Vec<u64> {
    let sources: Vec<Vec<usize>> = permutations(n)
        .iter()
        .skip(1)
        .map(|p| source_positions(n, p))
        .collect();
    (0..1usize << (n * n))
        .into_par_iter()
        .with_min_len(1 << 12)
        .map(|m| m as u64)
        .filter(|&m| canonical_under(m, &sources))
        .collect()
}

/// Relabels `af` so that its row-major adjacency string is lexicographically
/// maximal, which puts attacks between early arguments first and makes
/// chains read `A -> B -> C`. Names become `A`, `B`, ... again.
pub fn presentation_form(af: &Framework) -> Framework {
    let n = af.len();
    let mask = mask_of(af);
    let best = permutations(n)
        .into_iter()
        .max_by(|p, q| {
            let pm = permute_mask(n, mask, p);
            let qm = permute_mask(n, mask, q);
            adjacency_string(n, pm).cmp(&adjacency_string(n, qm))
        })
        .expect("at least the identity");
    framework_from_mask(n, permute_mask(n, mask, &best))
}

fn permute_mask(n: usize, mask: u64, perm: &[usize]) -> u64 {
    (0..n * n)
        .filter(|k| mask >> k & 1 == 1)
        .fold(0, |m, k| m | 1 << (perm[k / n] * n + perm[k % n]))
}

fn adjacency_string(n: usize, mask: u64) -> Vec<bool> {
    (0..n * n).map(|k| mask >> k & 1 == 1).collect()
}

/// Shrinks a counterexample: drop arguments, then attacks, while the
/// property stays refuted. The result is relabelled with
/// [`presentation_form`] and its first refuting witness tuple re-searched.
pub fn minimise(prop: &Property, af: &Framework) -> Counterexample {
    let mut current = framework_from_mask(af.len(), mask_of(af));
    'args: loop {
        for i in 0..current.len() {
            let keep = current
                .universe()
                .difference(&ArgSet::singleton(current.len(), i));
            let smaller = current.restrict(&keep);
            let smaller = framework_from_mask(smaller.len(), mask_of(&smaller));
            if prop.first_refutation(&smaller).is_some() {
                current = smaller;
                continue 'args;
            }
        }
        break;
    }
    let n = current.len();
    'edges: loop {
        let mask = mask_of(&current);
        for k in 0..n * n {
            if mask >> k & 1 == 1 {
                let candidate = framework_from_mask(n, mask & !(1 << k));
                if prop.first_refutation(&candidate).is_some() {
                    current = candidate;
                    continue 'edges;
                }
            }
        }
        break;
    }
    let framework = presentation_form(&current);
    let witnesses = prop
        .first_refutation(&framework)
        .expect("relabelling preserves refutation");
    let bindings = prop
        .signature
        .iter()
        .zip(witnesses)
        .map(|(&(name, _), w)| (name.to_string(), w))
        .collect();
    Counterexample {
        framework,
        bindings,
    }
}

/// Checks `prop` on every framework with at most `max_n` arguments, with
/// the default budget: exhaustive below [`DEFAULT_DEDUP_FROM`] arguments,
/// deduplicated at that size, refused above it.
pub fn check_property(prop: &Property, max_n: usize) -> Result<Verdict, MetaError> {
    check_with(prop, CheckOptions::new(max_n))
}

/// Sizes are searched in increasing order; within a size the refutation
/// with the least enumeration index wins, so the verdict is deterministic
/// regardless of scheduling.
pub fn check_with(prop: &Property, options: CheckOptions) -> Result<Verdict, MetaError> {
    let mut frameworks = 0;
    for n in 0..=options.max_n {
        let masks = Masks::new(n, n >= options.dedup_from, options.allow_large)?;
        let found = (0..masks.len() as usize)
            .into_par_iter()
            .with_min_len(64)
            .find_map_first(|i| {
                let af = masks.framework(i as u64);
                prop.first_refutation(&af).map(|_| af)
            });
        if let Some(af) = found {
            return Ok(Verdict::Refuted(minimise(prop, &af)));
        }
        frameworks += masks.len();
    }
    Ok(Verdict::Verified {
        max_n: options.max_n,
        frameworks,
        seed: None,
    })
}

/// Checks `prop` on `count` random frameworks with `n` arguments, each
/// attack present with probability one half.
pub fn sample_property(prop: &Property, n: usize, count: u64, seed: u64) -> Verdict {
    assert!(
        n <= MAX_ENUMERATED_ARGS,
        "sampling uses 64-bit attack masks"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let width = n * n;
    let masks: Vec<u64> = (0..count)
        .map(|_| {
            let bits: u64 = rng.gen();
            if width == 64 {
                bits
            } else {
                bits & ((1u64 << width) - 1)
            }
        })
        .collect();
    let found = masks.par_iter().find_map_first(|&m| {
        let af = framework_from_mask(n, m);
        prop.first_refutation(&af).map(|_| af)
    });
    match found {
        Some(af) => Verdict::Refuted(minimise(prop, &af)),
        None => Verdict::Verified {
            max_n: n,
            frameworks: count,
            seed: Some(seed),
        },
    }
}

pub fn find_property(id: &str) -> Result<Property, MetaError> {
    builtin_properties()
        .into_iter()
        .find(|p| p.id() == id)
        .ok_or_else(|| MetaError::UnknownProperty(id.to_string()))
}

/// `PROPERTY <id> VERIFIED n<=<k> frameworks=<m>`, or `PROPERTY <id>
/// REFUTED` followed by the counterexample.
pub fn report(prop: &Property, verdict: &Verdict) -> String {
    match verdict {
        Verdict::Verified {
            max_n,
            frameworks,
            seed,
        } => {
            let mut line = format!(
                "PROPERTY {} VERIFIED n<={max_n} frameworks={frameworks}",
                prop.id
            );
            if let Some(seed) = seed {
                line.push_str(&format!(" seed={seed}"));
            }
            line.push('\n');
            line
        }
        Verdict::Refuted(c) => format!("PROPERTY {} REFUTED\n{c}", prop.id),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use std::collections::HashSet;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_frameworks(0, false).unwrap().count(), 1);
        assert_eq!(enumerate_frameworks(1, false).unwrap().count(), 2);
        assert_eq!(enumerate_frameworks(2, false).unwrap().count(), 16);
        assert_eq!(enumerate_frameworks(3, false).unwrap().count(), 512);
    }

    #[test]
    fn budget_guard() {
        assert!(matches!(
            enumerate_frameworks(6, false),
            Err(MetaError::Budget { n: 6, dedup: false })
        ));
        assert!(Masks::new(6, false, true).is_ok());
        assert_eq!(
            Masks::new(8, false, true).unwrap_err(),
            MetaError::TooLarge(8)
        );
    }

    /// Brute-force orbit count: canonical representatives are exactly one
    /// per class of the permutation action.
    #[test]
    fn dedup_picks_one_per_isomorphism_class() {
        for n in 0..=3 {
            let perms = permutations(n);
            let mut classes = HashSet::new();
            for m in 0..1u64 << (n * n) {
                let orbit_min = perms
                    .iter()
                    .map(|p| adjacency_string(n, permute_mask(n, m, p)))
                    .min()
                    .unwrap();
                classes.insert(orbit_min);
            }
            let canonical = canonical_masks(n);
            assert_eq!(canonical.len(), classes.len(), "n={n}");
            for m in canonical {
                assert!(classes.contains(&adjacency_string(n, m)));
            }
        }
        // Digraphs with loops on up to four unlabelled vertices.
        assert_eq!(canonical_masks(2).len(), 10);
        assert_eq!(canonical_masks(3).len(), 104);
        assert_eq!(canonical_masks(4).len(), 3044);
    }

    #[test]
    fn mask_roundtrip() {
        for m in 0..512 {
            assert_eq!(mask_of(&framework_from_mask(3, m)), m);
        }
        assert_eq!(framework_from_mask(3, 0b100_010), fixtures::chain());
    }

    #[test]
    fn presentation_orders_chains_forward() {
        // B -> A -> C
        let af = Framework::new(["A", "B", "C"], [("B", "A"), ("A", "C")]).unwrap();
        assert_eq!(presentation_form(&af), fixtures::chain());
    }

    #[test]
    fn labellings_are_lexicographic() {
        let all = all_labellings(3);
        assert_eq!(all.len(), 27);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0].labels(), [Label::In; 3]);
    }

    #[test]
    fn report_format() {
        let p = Property::new("Trivial", "true", &[], Expectation::Holds, |_, _| true);
        let v = check_property(&p, 2).unwrap();
        assert_eq!(
            report(&p, &v),
            "PROPERTY Trivial VERIFIED n<=2 frameworks=19\n"
        );
    }

    #[test]
    fn refutations_are_minimised() {
        let p = Property::new(
            "NoAttacks",
            "no framework has an attack",
            &[],
            Expectation::Refuted,
            |ctx, _| ctx.af.attack_count() == 0,
        );
        let c = check_property(&p, 3)
            .unwrap()
            .counterexample()
            .cloned()
            .unwrap();
        assert_eq!(c.framework.len(), 1);
        assert_eq!(c.framework.attack_count(), 1);
        assert!(c.refutes(&p));
    }
}
