use alloc::string::String;

use crate::rootsys::{CartanType, Family};
use crate::weyl::Word;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid rank {rank} for type {family}: {bound}")]
    InvalidRank {
        family: Family,
        rank: usize,
        bound: &'static str,
    },
    #[error("cannot parse Cartan type {0:?}: expected a family letter A-G followed by a rank")]
    ParseType(String),
    #[error("simple-root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("weight has {got} coordinates, expected {expected}")]
    RankMismatch { expected: usize, got: usize },
    #[error("bad letter {token:?} at position {position} of word")]
    ParseWord { position: usize, token: String },
    #[error("word is not reduced; shortest non-reduced prefix is ({prefix})")]
    NotReduced { prefix: Word },
    #[error("weight is not dominant")]
    NotDominant,
    #[error("{0} is not simply laced; exact H^0 characters are only available for types A, D, E (use the Euler characteristic instead)")]
    NotSimplyLaced(CartanType),
    #[error("word does not multiply to the longest element")]
    NotLongest,
    #[error("({completion}) is not a reduced word of the longest element extending ({prefix})")]
    InvalidCompletion { prefix: Word, completion: Word },
    #[error("more than {cap} reduced words; raise the cap or force the enumeration")]
    TooManyWords { cap: u128 },
}
