use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("need at least {min} strands, got {n}")]
    TooFewStrands { n: usize, min: usize },
    #[error("letter {letter} out of range for {n} strands")]
    LetterOutOfRange { letter: i32, n: usize },
    #[error("pure generator A({i},{j}) out of range for {n} strands")]
    PairOutOfRange { i: usize, j: usize, n: usize },
    #[error("word does not induce the identity permutation")]
    NotPure,
}
