//! Executable checks of determinant, adjugate and trace identities.
//!
//! Each check computes both sides of an identity exactly and reports the
//! difference. Identities with a hypothesis (commuting inputs, nilpotency,
//! `p = 0` in the ring, ...) test it first and report
//! [`Status::HypothesisNotMet`] instead of running on inputs it does not cover.

mod adjugate;
mod block;
mod nilpotent;
mod report;
mod subsets;
mod trace;

use std::fmt;
use std::str::FromStr;

pub use report::{JsonRing, Status, Summary, VerificationReport};
pub use subsets::{multinomial, MultiIndex, SubsetSelector};
pub use trace::MULTINOMIAL_MAX_TERMS;

pub(crate) use report::Check;
pub(crate) use subsets::factorial;

use crate::error::{Error, Result};

macro_rules! identities {
    ($($variant:ident => $name:literal,)*) => {
        /// Every identity the verifier knows how to check.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Identity {
            $($variant,)*
        }

        impl Identity {
            pub const ALL: &'static [Identity] = &[$(Identity::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(Identity::$variant => $name,)*
                }
            }
        }
    };
}

identities! {
    AdjInverse => "adj-inverse",
    AdjCharpoly => "adj-charpoly",
    AdjProduct => "adj-product",
    AdjOfAdj => "adj-of-adj",
    AdjScalar => "adj-scalar",
    AdjTrace => "adj-trace",
    CharpolyC1 => "charpoly-c1",
    TraceD => "trace-d",
    DPartialSums => "d-partial-sums",
    DExpansion => "d-expansion",
    CayleyHamilton => "cayley-hamilton",
    TraceCayleyHamilton => "trace-cayley-hamilton",
    CharpolyNewton => "charpoly-newton",
    Ddet => "ddet",
    Jacobi => "jacobi",
    CommuteSwap => "commute-swap",
    BlockCommute => "block-commute",
    Rank1Block => "rank1-block",
    Bordered => "bordered",
    BlockIndicator => "block-indicator",
    MatrixDetLemma => "matrix-det-lemma",
    Nilpotency => "nilpotency",
    NilpotencyConverse => "nilpotency-converse",
    Almkvist => "almkvist",
    TraceMultinomial => "trace-multinomial",
    RowReplacement => "row-replacement",
    Frobenius => "frobenius",
    DerivationDet => "derivation-det",
    DerivationDetRows => "derivation-det-rows",
    LeibnizChain => "leibniz-chain",
}

impl Identity {
    /// Identities whose inputs are glued into a matrix of twice the size.
    pub fn doubles_dimension(self) -> bool {
        matches!(
            self,
            Identity::BlockCommute
                | Identity::Rank1Block
                | Identity::Bordered
                | Identity::BlockIndicator
        )
    }

    /// The identities in a named group, or `None` if `name` is not a group.
    pub fn group(name: &str) -> Option<Vec<Identity>> {
        use Identity::*;
        let ids = match name {
            "all" => Identity::ALL.to_vec(),
            "core" => vec![
                AdjInverse,
                AdjCharpoly,
                AdjProduct,
                AdjOfAdj,
                AdjScalar,
                AdjTrace,
                CharpolyC1,
                TraceD,
                DPartialSums,
                DExpansion,
                CayleyHamilton,
                TraceCayleyHamilton,
                Ddet,
                Jacobi,
                MatrixDetLemma,
                RowReplacement,
            ],
            "adjugate" => vec![
                AdjInverse,
                AdjCharpoly,
                AdjProduct,
                AdjOfAdj,
                AdjScalar,
                AdjTrace,
                Jacobi,
            ],
            "charpoly" => vec![
                CharpolyC1,
                TraceD,
                DPartialSums,
                DExpansion,
                CayleyHamilton,
                TraceCayleyHamilton,
                CharpolyNewton,
                Ddet,
            ],
            "block" => vec![
                CommuteSwap,
                BlockCommute,
                Rank1Block,
                Bordered,
                BlockIndicator,
                MatrixDetLemma,
            ],
            "nilpotent" => vec![Nilpotency, NilpotencyConverse, Almkvist],
            "trace" => vec![TraceMultinomial, RowReplacement, Frobenius],
            "derivation" => vec![DerivationDet, DerivationDetRows, LeibnizChain],
            _ => return None,
        };
        Some(ids)
    }

    /// Parses a comma-separated list of identity and group names. Duplicates
    /// are dropped and the result follows the order of [`Identity::ALL`].
    pub fn parse_suite(text: &str) -> Result<Vec<Identity>> {
        let mut picked = Vec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match Identity::group(item) {
                Some(ids) => picked.extend(ids),
                None => picked.push(item.parse()?),
            }
        }
        picked.sort();
        picked.dedup();
        Ok(picked)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .iter()
            .copied()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::parse("suite", format!("unknown identity or group `{s}`")))
    }
}

/// Runs identity checks.
///
/// `Verifier::default()` is the honest checker. [`Verifier::corrupting`]
/// builds one that adds one to the left-hand side of a chosen identity, so
/// that tests can confirm a violation is noticed and reported.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Verifier {
    corrupt: Option<Identity>,
}

impl Verifier {
    pub fn new() -> Self {
        Verifier::default()
    }

    #[doc(hidden)]
    pub fn corrupting(identity: Option<Identity>) -> Self {
        Verifier { corrupt: identity }
    }

    pub(crate) fn check(&self, identity: Identity) -> Check {
        Check::new(identity, self.corrupt == Some(identity))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for &id in Identity::ALL {
            assert_eq!(id.name().parse::<Identity>().unwrap(), id);
        }
        assert!("nope".parse::<Identity>().unwrap_err().is_parse());
    }

    #[test]
    fn suites() {
        assert_eq!(Identity::parse_suite("all").unwrap(), Identity::ALL.to_vec());
        assert!(Identity::parse_suite("").unwrap().is_empty());
        assert_eq!(
            Identity::parse_suite("jacobi, adj-inverse,jacobi").unwrap(),
            vec![Identity::AdjInverse, Identity::Jacobi]
        );
        let core = Identity::parse_suite("core").unwrap();
        assert!(!core.iter().any(|id| id.doubles_dimension()));
    }
}
