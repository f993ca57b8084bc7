use thiserror::Error;

/// Errors raised by construction and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("invalid walk: {0}")]
    InvalidWalk(String),

    #[error("rotation shift {shift} out of range 1..={len}")]
    ShiftOutOfRange { shift: usize, len: usize },

    #[error("no scalar given for arrow `{0}`")]
    MissingScalar(String),

    #[error("invalid relation: {0}")]
    InvalidRelation(String),

    #[error("relations are not admissible: the oriented cycle {cycle} has no vanishing power")]
    NonAdmissible { cycle: String },

    #[error("algebra is not connected")]
    Disconnected,

    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),

    #[error("algebra has a nonzero oriented cycle at vertex `{0}`")]
    NonzeroOrientedCycle(String),

    #[error("element leaves the window [{lo}, {hi}] at level {level}")]
    WindowExit { lo: i64, hi: i64, level: i64 },

    #[error("expected an automorphism with jump 0, got jump {0}")]
    NonzeroJump(i64),

    #[error("orbit algebra of a jump-0 automorphism is infinite; jump must be nonzero")]
    ZeroJump,

    #[error("jumps differ: {0} vs {1}")]
    JumpMismatch(i64, i64),

    #[error("automorphisms disagree on object {0}")]
    ObjectMismatch(String),

    #[error("precondition violated on generator {0}")]
    PreconditionViolated(String),

    #[error("eta range needs level {level}, outside the window [{lo}, {hi}]")]
    EtaRange { lo: i64, hi: i64, level: i64 },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
