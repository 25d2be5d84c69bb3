use thiserror::Error;

use crate::matrix::IntMat3;

pub type Result<T> = std::result::Result<T, KummerError>;

#[derive(Debug, Error)]
pub enum KummerError {
    #[error("group closure exceeded {bound} elements (a generator has infinite order)")]
    OrderBoundExceeded { bound: usize },

    #[error("generator {matrix} has determinant {det}, expected +1")]
    NotSpecialLinear { matrix: IntMat3, det: i64 },

    #[error("matrix {0} has no finite order up to 12")]
    InfiniteOrder(IntMat3),

    #[error("group of order {order} matches none of the admissible isomorphism types")]
    UnclassifiableGroup { order: usize },

    #[error("fixed locus of {matrix} is not a union of curves: rank(h - I) = {rank}")]
    RankDegenerate { matrix: IntMat3, rank: usize },

    #[error("torsion level {level} cannot represent fixed points of order {needed}")]
    LevelTooSmall { level: i64, needed: i64 },

    #[error("unexpected Weyl group action on a fixed curve: {0}")]
    UnexpectedAction(String),

    #[error("unsupported fiber/Weyl combination: {0}")]
    UnsupportedCombination(String),

    #[error("character does not decompose into a genuine representation: {0}")]
    NotARepresentation(String),

    #[error("unknown group {0:?}")]
    UnknownGroup(String),

    #[error("cyclic group of order {order}: cyclic groups do not satisfy the assumptions of the Kummer construction")]
    CyclicGroup { order: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
