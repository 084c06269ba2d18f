use thiserror::Error;

/// Everything that can go wrong across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word")]
    EmptyWord,

    #[error("word of {0} characters exceeds the 63-bit limit")]
    WordTooLong(usize),

    #[error("invalid character {found:?} at position {position}, expected '0' or '1'")]
    InvalidChar { position: usize, found: char },

    #[error("word length {0} is out of range 1..=63")]
    LengthOutOfRange(u64),

    #[error("bit set beyond word length {len}")]
    StrayBits { len: u32 },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: u32, right: u32 },

    #[error("concatenating {left}+{right} bits exceeds the 63-bit limit")]
    ConcatOverflow { left: u32, right: u32 },

    #[error("line {line}: {source}")]
    AtLine { line: usize, source: Box<Error> },

    #[error("expected a word of length {expected}, found length {found}")]
    RaggedWord { expected: u32, found: u32 },

    #[error("no codewords found")]
    EmptyCode,

    #[error("{name}={value} is out of range {range}")]
    ParamRange {
        name: &'static str,
        value: u64,
        range: &'static str,
    },

    #[error("{task} needs {needed} but the limit is {limit}")]
    Capacity {
        task: &'static str,
        needed: u64,
        limit: u64,
    },

    #[error("base code is not a perfect code of Q{n}")]
    InvalidBase { n: u32 },

    #[error("word {word} contains no window of {zeros} zeros")]
    NoZeroWindow { word: String, zeros: u32 },

    #[error("word {word} is not a vertex of {graph}")]
    NotAVertex { word: String, graph: String },
}

impl Error {
    /// Wrap a parse error with the 1-based line it occurred on.
    pub fn at_line(self, line: usize) -> Error {
        Error::AtLine {
            line,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
