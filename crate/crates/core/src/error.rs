use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be positive")]
    ZeroRank,
    #[error("strand count must be positive")]
    ZeroStrands,
    #[error("generator x{index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("crossing s{index} out of range for {strands} strands")]
    CrossingOutOfRange { index: usize, strands: usize },
    #[error("letter index must be nonzero")]
    ZeroLetter,
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("strand mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("endomorphism needs exactly {rank} images, got {got}")]
    ImageCount { rank: usize, got: usize },
    #[error("pure braid generator A({i},{j}) needs 1 <= i < j <= {strands}")]
    PureGenerator { i: usize, j: usize, strands: usize },
    #[error("braid word has {len} letters, limit is {limit}")]
    WordTooLong { len: usize, limit: usize },
    #[error("iterate must be at least 1, got {0}")]
    BadIterate(u32),
    #[error("braid does not fix its last strand")]
    LastStrandMoved,
    #[error("internal convention check failed: {0}")]
    Internal(&'static str),
}
