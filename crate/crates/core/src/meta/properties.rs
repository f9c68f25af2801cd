//! The built-in property registry.

use super::{Ctx, Expectation, Property, Witness, WitnessKind};
use crate::argset::{subsets_of, ArgSet};
use crate::correspondence::{ext_to_lab, lab_to_ext};
use crate::extensions::Extensions;
use crate::framework::{ArgId, Framework};
use crate::labellings::{Label, Labelling, Labellings};
use crate::orders::{self, SetFamily};
use crate::semantics::SemanticsId::{self, *};

use Expectation::{Advisory, Holds, Refuted};
use WitnessKind::{Argument, Extension, LabellingOf, Semantics, Set};

const S: (&str, WitnessKind) = ("S", Set);
const T: (&str, WitnessKind) = ("T", Set);
const D: (&str, WitnessKind) = ("D", Set);
const LAB: (&str, WitnessKind) = ("Lab", WitnessKind::Labelling);
const A: (&str, WitnessKind) = ("a", Argument);
const A2: (&str, WitnessKind) = ("a'", Argument);
const SEM: (&str, WitnessKind) = ("sem", Semantics);

/// Long name used to build property identifiers.
fn long_name(sem: SemanticsId) -> &'static str {
    match sem {
        ConflictFree => "ConflictFree",
        Admissible => "Admissible",
        Complete => "Complete",
        Grounded => "Grounded",
        Preferred => "Preferred",
        Stable => "Stable",
        SemiStable => "SemiStable",
        Stage => "Stage",
        IdealSet => "IdealSet",
        Ideal => "Ideal",
    }
}

/// Inclusions between semantics, each edge read "every X is a Y".
/// Transitive edges are left out.
pub const SEMANTICS_LATTICE: [(SemanticsId, SemanticsId); 9] = [
    (Stable, SemiStable),
    (SemiStable, Preferred),
    (Preferred, Complete),
    (Complete, Admissible),
    (Admissible, ConflictFree),
    (Stable, Stage),
    (Stage, ConflictFree),
    (Grounded, Complete),
    (Ideal, Complete),
];

fn updated(lab: &Labelling, a: ArgId) -> Labelling {
    let mut next = lab.clone();
    next.set(a.index(), Label::In);
    next
}

/// `a` becomes `In`, its other attackers `Out`, the rest unchanged.
fn updated_with_attackers_out(af: &Framework, lab: &Labelling, a: ArgId) -> Labelling {
    let mut next = lab.clone();
    for x in af.attackers_of(a).iter() {
        next.set(x, Label::Out);
    }
    next.set(a.index(), Label::In);
    next
}

fn fixpoints(domain: &ArgSet, f: &dyn Fn(&ArgSet) -> ArgSet) -> Vec<ArgSet> {
    subsets_of(domain)
        .filter(|s| f(s).intersection(domain) == *s)
        .collect()
}

fn monotone_within(domain: &ArgSet, f: &dyn Fn(&ArgSet) -> ArgSet) -> bool {
    subsets_of(domain).all(|a| {
        let fa = f(&a).intersection(domain);
        domain
            .iter()
            .filter(|&x| !a.contains(x))
            .all(|x| fa.is_subset(&f(&a.with(x))))
    })
}

fn has_least(family: &[ArgSet]) -> bool {
    family.iter().any(|x| family.iter().all(|y| x.is_subset(y)))
}

fn has_greatest(family: &[ArgSet]) -> bool {
    family.iter().any(|x| family.iter().all(|y| y.is_subset(x)))
}

fn least(fam: &[ArgSet], o: &ArgSet) -> bool {
    fam.contains(o) && orders::is_least_by(fam, o, id)
}

fn greatest(fam: &[ArgSet], o: &ArgSet) -> bool {
    fam.contains(o) && orders::is_greatest_by(fam, o, id)
}

fn minimal(fam: &[ArgSet], o: &ArgSet) -> bool {
    fam.contains(o) && orders::is_minimal_by(fam, o, id)
}

fn maximal(fam: &[ArgSet], o: &ArgSet) -> bool {
    fam.contains(o) && orders::is_maximal_by(fam, o, id)
}

fn id(s: &ArgSet) -> ArgSet {
    s.clone()
}

fn in_of(l: &Labelling) -> ArgSet {
    l.in_set().clone()
}

fn out_of(l: &Labelling) -> ArgSet {
    l.out_set().clone()
}

fn lift(af: &Framework, domain: &ArgSet, lab: &Labelling) -> Labelling {
    Labelling::from_sets(
        af.lift_from_restriction(domain, lab.in_set()),
        af.lift_from_restriction(domain, lab.out_set()),
    )
}

fn base_properties() -> Vec<Property> {
    vec![
        Property::new(
            "DefendsAttackEquivalence",
            "S defends a iff the attackers of a are all attacked by S",
            &[S, A],
            Holds,
            |ctx, w| {
                let (s, a) = (w[0].set(), w[1].argument());
                let single = ArgSet::singleton(ctx.af.len(), a.index());
                ctx.af.defends(s, a) == ctx.af.attacker_set(&single).is_subset(&ctx.af.attacked_set(s))
            },
        ),
        Property::new(
            "CharacteristicMonotone",
            "S ⊆ T implies F(S) ⊆ F(T)",
            &[S, T],
            Holds,
            |ctx, w| {
                !w[0].set().is_subset(w[1].set())
                    || ctx.af.characteristic(w[0].set()).is_subset(&ctx.af.characteristic(w[1].set()))
            },
        ),
        Property::new(
            "CharacteristicLeastFixpoint",
            "the characteristic function has a least fixed point",
            &[],
            Holds,
            |ctx, _| has_least(&fixpoints(&ctx.af.universe(), &|s| ctx.af.characteristic(s))),
        ),
        Property::new(
            "CharacteristicGreatestFixpoint",
            "the characteristic function has a greatest fixed point",
            &[],
            Holds,
            |ctx, _| has_greatest(&fixpoints(&ctx.af.universe(), &|s| ctx.af.characteristic(s))),
        ),
        Property::new(
            "KnasterTarskiFinite",
            "every operator monotone on the subsets of D has a least and a greatest fixed point there \
             (instantiated with F, S+, S- and D \\ S+ relativised to D)",
            &[D],
            Holds,
            |ctx, w| {
                let d = w[0].set();
                let af = ctx.af;
                let operators: [&dyn Fn(&ArgSet) -> ArgSet; 4] = [
                    &|s| af.characteristic_within(d, s),
                    &|s| af.attacked_within(d, s),
                    &|s| af.attacker_within(d, s),
                    &|s| d.difference(&af.attacked_within(d, s)),
                ];
                operators.iter().all(|f| {
                    if !monotone_within(d, f) {
                        return true;
                    }
                    let fp = fixpoints(d, f);
                    has_least(&fp) && has_greatest(&fp)
                })
            },
        ),
    ]
}

fn order_properties() -> Vec<Property> {
    const O: (&str, WitnessKind) = ("O", Set);
    const O2: (&str, WitnessKind) = ("O'", Set);
    let family = |ctx: &Ctx<'_>, w: &[Witness]| ctx.extensions(w[0].semantics()).to_vec();
    vec![
        Property::new(
            "LeastUnique",
            "two least elements of a family coincide",
            &[SEM, O, O2],
            Holds,
            move |ctx, w| {
                let fam = family(ctx, w);
                let (o, o2) = (w[1].set(), w[2].set());
                !(least(&fam, o) && least(&fam, o2)) || o == o2
            },
        ),
        Property::new(
            "GreatestUnique",
            "two greatest elements of a family coincide",
            &[SEM, O, O2],
            Holds,
            move |ctx, w| {
                let fam = family(ctx, w);
                let (o, o2) = (w[1].set(), w[2].set());
                !(greatest(&fam, o) && greatest(&fam, o2)) || o == o2
            },
        ),
        Property::new(
            "MinimalCollapsesToLeast",
            "if a least element exists every minimal element is least",
            &[SEM, O, O2],
            Holds,
            move |ctx, w| {
                let fam = family(ctx, w);
                let (o, o2) = (w[1].set(), w[2].set());
                !(least(&fam, o) && minimal(&fam, o2)) || least(&fam, o2)
            },
        ),
        Property::new(
            "MaximalCollapsesToGreatest",
            "if a greatest element exists every maximal element is greatest",
            &[SEM, O, O2],
            Holds,
            move |ctx, w| {
                let fam = family(ctx, w);
                let (o, o2) = (w[1].set(), w[2].set());
                !(greatest(&fam, o) && maximal(&fam, o2)) || greatest(&fam, o2)
            },
        ),
        Property::new(
            "MaximalCollapsesToLeast",
            "if a greatest element exists every maximal element is least",
            &[SEM, O, O2],
            Refuted,
            move |ctx, w| {
                let fam = family(ctx, w);
                let (o, o2) = (w[1].set(), w[2].set());
                !(greatest(&fam, o) && maximal(&fam, o2)) || least(&fam, o2)
            },
        ),
    ]
}

fn relativisation_properties() -> Vec<Property> {
    vec![
        Property::new(
            "RelativisationCoherenceExt",
            "the extensions relativised to D are those of the restriction to D",
            &[D, SEM],
            Holds,
            |ctx, w| {
                let (d, sem) = (w[0].set(), w[1].semantics());
                let mut within = Extensions::within(ctx.af, d.clone()).enumerate(sem);
                let sub = ctx.af.restrict(d);
                let mut restricted: Vec<ArgSet> = Extensions::new(&sub)
                    .enumerate(sem)
                    .iter()
                    .map(|s| ctx.af.lift_from_restriction(d, s))
                    .collect();
                within.sort();
                restricted.sort();
                within == restricted
            },
        ),
        Property::new(
            "RelativisationCoherenceLab",
            "the labellings relativised to D are those of the restriction to D",
            &[D, SEM],
            Holds,
            |ctx, w| {
                let (d, sem) = (w[0].set(), w[1].semantics());
                let mut within = Labellings::within(ctx.af, d.clone()).enumerate(sem);
                let sub = ctx.af.restrict(d);
                let mut restricted: Vec<Labelling> = Labellings::new(&sub)
                    .enumerate(sem)
                    .iter()
                    .map(|l| lift(ctx.af, d, l))
                    .collect();
                within.sort();
                restricted.sort();
                within == restricted
            },
        ),
    ]
}

fn extension_properties() -> Vec<Property> {
    let exists = |sem: SemanticsId| {
        Property::new(
            format!("{}Exists", long_name(sem)),
            format!(
                "every framework has a {} extension",
                long_name(sem).to_lowercase()
            ),
            &[],
            Holds,
            move |ctx, _| !ctx.extensions(sem).is_empty(),
        )
    };
    vec![
        Property::new(
            "NoSelfAttackInConflictFree",
            "no member of a conflict-free set attacks itself",
            &[S],
            Holds,
            |ctx, w| {
                let s = w[0].set();
                !ctx.ext.is_conflict_free(s)
                    || s.iter().all(|a| !ctx.af.attacks(ArgId(a), ArgId(a)))
            },
        ),
        Property::new(
            "CharacteristicPreservesConflictFree",
            "F maps conflict-free sets to conflict-free sets",
            &[S],
            Holds,
            |ctx, w| {
                let s = w[0].set();
                !ctx.ext.is_conflict_free(s) || ctx.ext.is_conflict_free(&ctx.af.characteristic(s))
            },
        ),
        Property::new(
            "AdmissibleIffSubsetOfCharacteristic",
            "a conflict-free S is admissible iff S ⊆ F(S)",
            &[S],
            Holds,
            |ctx, w| {
                let s = w[0].set();
                !ctx.ext.is_conflict_free(s)
                    || ctx.ext.is_admissible(s) == s.is_subset(&ctx.af.characteristic(s))
            },
        ),
        Property::new(
            "CompleteIffConflictFreeFixpoint",
            "a conflict-free S is complete iff F(S) = S",
            &[S],
            Holds,
            |ctx, w| {
                let s = w[0].set();
                !ctx.ext.is_conflict_free(s)
                    || ctx.ext.is_complete(s) == (ctx.af.characteristic(s) == *s)
            },
        ),
        exists(Complete),
        exists(Preferred),
        exists(Grounded),
        Property::new(
            "GroundedIsLeastComplete",
            "S is grounded iff it is the least complete extension",
            &[S],
            Holds,
            |ctx, w| {
                let s = w[0].set();
                ctx.ext.is_extension(Grounded, s) == least(ctx.extensions(Complete), s)
            },
        ),
        Property::new(
            "GroundedExtUnique",
            "two grounded extensions coincide",
            &[("S", Extension(Grounded)), ("T", Extension(Grounded))],
            Holds,
            |ctx, w| {
                let (s, t) = (w[0].set(), w[1].set());
                !(ctx.ext.is_extension(Grounded, s) && ctx.ext.is_extension(Grounded, t)) || s == t
            },
        ),
        Property::new(
            "AdmissibleDirectedComplete",
            "the admissible sets form a directed-complete partial order under inclusion",
            &[],
            Holds,
            |ctx, _| {
                let family = SetFamily::from_members(ctx.af.len(), ctx.ext.admissible().to_vec());
                orders::is_directed_complete(&family)
            },
        ),
        Property::new(
            "PreferredExtendsAdmissible",
            "every admissible set is contained in a preferred extension",
            &[S],
            Holds,
            |ctx, w| {
                let s = w[0].set();
                !ctx.ext.is_admissible(s)
                    || ctx.extensions(Preferred).iter().any(|p| s.is_subset(p))
            },
        ),
        Property::new(
            "ExtensionFundamental",
            "if admissible S defends a then S ∪ {a} is admissible",
            &[S, A],
            Holds,
            |ctx, w| {
                let (s, a) = (w[0].set(), w[1].argument());
                !(ctx.ext.is_admissible(s) && ctx.af.defends(s, a))
                    || ctx.ext.is_admissible(&s.with(a.index()))
            },
        ),
        Property::new(
            "ExtensionFundamentalDefence",
            "if admissible S defends a and a' then S ∪ {a} defends a'",
            &[S, A, A2],
            Holds,
            |ctx, w| {
                let (s, a, a2) = (w[0].set(), w[1].argument(), w[2].argument());
                !(ctx.ext.is_admissible(s) && ctx.af.defends(s, a) && ctx.af.defends(s, a2))
                    || ctx.af.defends(&s.with(a.index()), a2)
            },
        ),
    ]
}

fn labelling_properties() -> Vec<Property> {
    const L1: (&str, WitnessKind) = ("Lab", LabellingOf(Complete));
    const L2: (&str, WitnessKind) = ("Lab'", LabellingOf(Complete));
    let determined_by = |name: &'static str, proj: fn(&Labelling) -> ArgSet, expectation| {
        Property::new(
            format!("CompleteLabDeterminedBy{name}"),
            format!(
                "complete labellings with equal {} sets are equal",
                name.to_lowercase()
            ),
            &[L1, L2],
            expectation,
            move |ctx, w| {
                let (l, m) = (w[0].labelling(), w[1].labelling());
                !(ctx.lab.is_complete(l) && ctx.lab.is_complete(m)) || proj(l) != proj(m) || l == m
            },
        )
    };
    let legal = |ctx: &Ctx<'_>, l: &Labelling, a: ArgId| -> Label {
        if ctx.lab.legally_in(l, a) {
            Label::In
        } else if ctx.lab.legally_out(l, a) {
            Label::Out
        } else {
            Label::Undec
        }
    };
    vec![
        Property::new(
            "AdmissibleLabIsConflictFreeLab",
            "every admissible labelling is conflict-free",
            &[LAB],
            Holds,
            |ctx, w| {
                let l = w[0].labelling();
                !ctx.lab.is_admissible(l) || ctx.lab.is_conflict_free(l)
            },
        ),
        Property::new(
            "AdmissibleLabellingExists",
            "every framework has an admissible labelling",
            &[],
            Holds,
            |ctx, _| !ctx.labellings(Admissible).is_empty(),
        ),
        Property::new(
            "AdmissibleLegallyUndecIsUndec",
            "in an admissible labelling a legally undecided argument is Undec",
            &[LAB, A],
            Holds,
            |ctx, w| {
                let (l, a) = (w[0].labelling(), w[1].argument());
                !(ctx.lab.is_admissible(l) && ctx.lab.legally_undec(l, a)) || l.get(a.index()) == Label::Undec
            },
        ),
        Property::new(
            "AdmissibleUndecIsLegallyUndec",
            "in an admissible labelling an Undec argument is legally undecided",
            &[LAB, A],
            Refuted,
            |ctx, w| {
                let (l, a) = (w[0].labelling(), w[1].argument());
                !(ctx.lab.is_admissible(l) && l.get(a.index()) == Label::Undec) || ctx.lab.legally_undec(l, a)
            },
        ),
        Property::new(
            "AdmissibleLegallyInIsIn",
            "in an admissible labelling a legally in argument is In",
            &[LAB, A],
            Refuted,
            |ctx, w| {
                let (l, a) = (w[0].labelling(), w[1].argument());
                !(ctx.lab.is_admissible(l) && ctx.lab.legally_in(l, a)) || l.get(a.index()) == Label::In
            },
        ),
        Property::new(
            "AdmissibleLegallyOutIsOut",
            "in an admissible labelling a legally out argument is Out",
            &[LAB, A],
            Refuted,
            |ctx, w| {
                let (l, a) = (w[0].labelling(), w[1].argument());
                !(ctx.lab.is_admissible(l) && ctx.lab.legally_out(l, a)) || l.get(a.index()) == Label::Out
            },
        ),
        Property::new(
            "CompleteLabCharacterisation",
            "a labelling is complete iff every argument carries exactly the label it is legally entitled to",
            &[LAB],
            Holds,
            move |ctx, w| {
                let l = w[0].labelling();
                let exact = ctx.af.arguments().all(|a| l.get(a.index()) == legal(ctx, l, a));
                ctx.lab.is_complete(l) == exact
            },
        ),
        determined_by("In", in_of, Holds),
        determined_by("Out", out_of, Holds),
        determined_by("Undec", |l| l.undec_set(), Refuted),
        Property::new(
            "GroundedLabMinInIffMinOut",
            "a complete labelling has a minimal in-set iff it has a minimal out-set",
            &[L1],
            Holds,
            |ctx, w| {
                let l = w[0].labelling();
                let co = ctx.labellings(Complete);
                orders::is_minimal_by(co, l, in_of) == orders::is_minimal_by(co, l, out_of)
            },
        ),
        Property::new(
            "PreferredLabMaxInIffMaxOut",
            "a complete labelling has a maximal in-set iff it has a maximal out-set",
            &[L1],
            Holds,
            |ctx, w| {
                let l = w[0].labelling();
                let co = ctx.labellings(Complete);
                orders::is_maximal_by(co, l, in_of) == orders::is_maximal_by(co, l, out_of)
            },
        ),
        Property::new(
            "PreferredLabMaxInIffMinOut",
            "a complete labelling has a maximal in-set iff it has a minimal out-set",
            &[L1],
            Refuted,
            |ctx, w| {
                let l = w[0].labelling();
                let co = ctx.labellings(Complete);
                orders::is_maximal_by(co, l, in_of) == orders::is_minimal_by(co, l, out_of)
            },
        ),
        Property::new(
            "GroundedLabIsLeastComplete",
            "a labelling is grounded iff its in-set is least among complete labellings",
            &[LAB],
            Holds,
            |ctx, w| {
                let l = w[0].labelling();
                let least = ctx.lab.is_complete(l) && orders::is_least_by(ctx.labellings(Complete), l, in_of);
                ctx.lab.is_labelling(Grounded, l) == least
            },
        ),
        Property::new(
            "GroundedLabUnique",
            "two grounded labellings coincide",
            &[("Lab", LabellingOf(Grounded)), ("Lab'", LabellingOf(Grounded))],
            Holds,
            |ctx, w| {
                let (l, m) = (w[0].labelling(), w[1].labelling());
                !(ctx.lab.is_labelling(Grounded, l) && ctx.lab.is_labelling(Grounded, m)) || l == m
            },
        ),
        Property::new(
            "LabellingFundamental",
            "if in(Lab) defends a for admissible Lab, labelling a In and its attackers Out stays admissible",
            &[LAB, A],
            Holds,
            |ctx, w| {
                let (l, a) = (w[0].labelling(), w[1].argument());
                !(ctx.lab.is_admissible(l) && ctx.af.defends(l.in_set(), a))
                    || ctx.lab.is_admissible(&updated_with_attackers_out(ctx.af, l, a))
            },
        ),
        Property::new(
            "NaiveLabellingFundamental",
            "if in(Lab) defends a for admissible Lab, labelling a In stays admissible",
            &[LAB, A],
            Refuted,
            |ctx, w| {
                let (l, a) = (w[0].labelling(), w[1].argument());
                !(ctx.lab.is_admissible(l) && ctx.af.defends(l.in_set(), a))
                    || ctx.lab.is_admissible(&updated(l, a))
            },
        ),
    ]
}

fn lattice_properties() -> Vec<Property> {
    let mut out = Vec::new();
    for (from, to) in SEMANTICS_LATTICE {
        for (x, y, expectation) in [(from, to, Holds), (to, from, Refuted)] {
            out.push(Property::new(
                format!("{}ExtImplies{}Ext", long_name(x), long_name(y)),
                format!("every {x} extension is a {y} extension"),
                &[S],
                expectation,
                move |ctx, w| {
                    let s = w[0].set();
                    !ctx.ext.is_extension(x, s) || ctx.ext.is_extension(y, s)
                },
            ));
            out.push(Property::new(
                format!("{}LabImplies{}Lab", long_name(x), long_name(y)),
                format!("every {x} labelling is a {y} labelling"),
                &[LAB],
                expectation,
                move |ctx, w| {
                    let l = w[0].labelling();
                    !ctx.lab.is_labelling(x, l) || ctx.lab.is_labelling(y, l)
                },
            ));
        }
    }
    out
}

fn correspondence_properties() -> Vec<Property> {
    let mut out = Vec::new();
    let semantics = SemanticsId::CORRESPONDING
        .into_iter()
        .map(|s| (s, Holds))
        .chain([(IdealSet, Advisory), (Ideal, Advisory)]);
    for (sem, expectation) in semantics {
        let name = long_name(sem);
        out.push(Property::new(
            format!("{name}LabToExt"),
            format!("the in-set of a {sem} labelling is a {sem} extension"),
            &[LAB],
            expectation,
            move |ctx, w| {
                let l = w[0].labelling();
                !ctx.lab.is_labelling(sem, l) || ctx.ext.is_extension(sem, &lab_to_ext(l))
            },
        ));
        out.push(Property::new(
            format!("{name}ExtToLab"),
            format!("the labelling induced by a {sem} extension is a {sem} labelling"),
            &[S],
            expectation,
            move |ctx, w| {
                let s = w[0].set();
                !ctx.ext.is_extension(sem, s) || ctx.lab.is_labelling(sem, &ext_to_lab(ctx.af, s))
            },
        ));
        out.push(Property::new(
            format!("{name}ExtFromLabOfExt"),
            format!("a set whose induced labelling is a {sem} labelling is a {sem} extension"),
            &[S],
            expectation,
            move |ctx, w| {
                let s = w[0].set();
                !ctx.lab.is_labelling(sem, &ext_to_lab(ctx.af, s)) || ctx.ext.is_extension(sem, s)
            },
        ));
    }
    out.push(Property::new(
        "PreferredLabFromInSet",
        "a labelling whose in-set is a preferred extension is a preferred labelling",
        &[LAB],
        Refuted,
        |ctx, w| {
            let l = w[0].labelling();
            !ctx.ext.is_extension(Preferred, &lab_to_ext(l)) || ctx.lab.is_labelling(Preferred, l)
        },
    ));
    out
}

/// Every built-in property, in a fixed order.
pub fn builtin_properties() -> Vec<Property> {
    let mut all = base_properties();
    all.extend(order_properties());
    all.extend(relativisation_properties());
    all.extend(extension_properties());
    all.extend(labelling_properties());
    all.extend(lattice_properties());
    all.extend(correspondence_properties());
    all
}
