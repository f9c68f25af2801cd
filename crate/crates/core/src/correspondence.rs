//! Translations between extensions and labellings, and executable checks of
//! the three correspondence directions for a semantics.

use std::fmt;

use crate::argset::{subsets_of, ArgSet};
use crate::extensions::Extensions;
use crate::framework::Framework;
use crate::labellings::{Labelling, Labellings};
use crate::semantics::SemanticsId;

/// The in-set of a labelling.
pub fn lab_to_ext(lab: &Labelling) -> ArgSet {
    lab.in_set().clone()
}

/// Members of `ext` are `In`, arguments it attacks are `Out`, the rest are
/// `Undec`.
pub fn ext_to_lab(af: &Framework, ext: &ArgSet) -> Labelling {
    let out = af.attacked_set(ext).difference(ext);
    Labelling::from_sets(ext.clone(), out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// A labelling's in-set is an extension.
    LabToExt,
    /// An extension's induced labelling is a labelling.
    ExtToLab,
    /// A set whose induced labelling is a labelling is an extension.
    ExtFromLabOfExt,
}

impl Direction {
    pub const ALL: [Direction; 3] = [
        Direction::LabToExt,
        Direction::ExtToLab,
        Direction::ExtFromLabOfExt,
    ];
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::LabToExt => "Lab->Ext",
            Direction::ExtToLab => "Ext->Lab",
            Direction::ExtFromLabOfExt => "Ext<-LabOfExt",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Labelling(Labelling),
    Set(ArgSet),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails {
        framework: Framework,
        witness: Witness,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub semantics: SemanticsId,
    pub direction: Direction,
    pub verdict: Verdict,
}

impl CorrespondenceReport {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

/// First counter-instance of `direction` for `sem` on `af`, if any.
pub fn find_violation(
    ext: &Extensions<'_>,
    lab: &Labellings<'_>,
    sem: SemanticsId,
    direction: Direction,
) -> Option<Witness> {
    let af = ext.framework();
    match direction {
        Direction::LabToExt => lab
            .enumerate(sem)
            .into_iter()
            .find(|l| !ext.is_extension(sem, &lab_to_ext(l)))
            .map(Witness::Labelling),
        Direction::ExtToLab => ext
            .enumerate(sem)
            .into_iter()
            .find(|s| !lab.is_labelling(sem, &ext_to_lab(af, s)))
            .map(Witness::Set),
        Direction::ExtFromLabOfExt => subsets_of(&af.universe())
            .find(|s| lab.is_labelling(sem, &ext_to_lab(af, s)) && !ext.is_extension(sem, s))
            .map(Witness::Set),
    }
}

/// Evaluates all three directions for `sem` on `af` by full enumeration.
pub fn check_correspondence(af: &Framework, sem: SemanticsId) -> Vec<CorrespondenceReport> {
    let ext = Extensions::new(af);
    let lab = Labellings::new(af);
    Direction::ALL
        .into_iter()
        .map(|direction| CorrespondenceReport {
            semantics: sem,
            direction,
            verdict: match find_violation(&ext, &lab, sem, direction) {
                None => Verdict::Holds,
                Some(witness) => Verdict::Fails {
                    framework: af.clone(),
                    witness,
                },
            },
        })
        .collect()
}
