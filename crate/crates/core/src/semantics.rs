//! Names of the supported semantics.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// One of the supported argumentation semantics. Each has both an extension
/// and a labelling reading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SemanticsId {
    ConflictFree,
    Admissible,
    Complete,
    Grounded,
    Preferred,
    Stable,
    SemiStable,
    Stage,
    /// Ideal sets (extensions) resp. quasi-ideal labellings.
    IdealSet,
    Ideal,
}

impl SemanticsId {
    pub const ALL: [SemanticsId; 10] = [
        SemanticsId::ConflictFree,
        SemanticsId::Admissible,
        SemanticsId::Complete,
        SemanticsId::Grounded,
        SemanticsId::Preferred,
        SemanticsId::Stable,
        SemanticsId::SemiStable,
        SemanticsId::Stage,
        SemanticsId::IdealSet,
        SemanticsId::Ideal,
    ];

    /// The semantics for which extension/labelling correspondence is
    /// asserted.
    pub const CORRESPONDING: [SemanticsId; 8] = [
        SemanticsId::ConflictFree,
        SemanticsId::Admissible,
        SemanticsId::Complete,
        SemanticsId::Grounded,
        SemanticsId::Preferred,
        SemanticsId::Stable,
        SemanticsId::SemiStable,
        SemanticsId::Stage,
    ];

    pub fn abbreviation(self) -> &'static str {
        match self {
            SemanticsId::ConflictFree => "CF",
            SemanticsId::Admissible => "AD",
            SemanticsId::Complete => "CO",
            SemanticsId::Grounded => "GR",
            SemanticsId::Preferred => "PR",
            SemanticsId::Stable => "ST",
            SemanticsId::SemiStable => "SST",
            SemanticsId::Stage => "STG",
            SemanticsId::IdealSet => "IDS",
            SemanticsId::Ideal => "ID",
        }
    }

    /// Whether an extension is guaranteed to exist on every finite
    /// framework.
    pub fn always_exists(self) -> bool {
        self != SemanticsId::Stable
    }
}

impl fmt::Display for SemanticsId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.abbreviation())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown semantics `{0}`")]
pub struct UnknownSemantics(pub String);

impl FromStr for SemanticsId {
    type Err = UnknownSemantics;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SemanticsId::ALL
            .into_iter()
            .find(|sem| sem.abbreviation() == s)
            .ok_or_else(|| UnknownSemantics(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abbreviations_roundtrip() {
        for sem in SemanticsId::ALL {
            assert_eq!(sem.to_string().parse::<SemanticsId>(), Ok(sem));
        }
        assert!("XX".parse::<SemanticsId>().is_err());
        assert!("pr".parse::<SemanticsId>().is_err());
    }
}
