use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot combine sqrt({0}) and sqrt({1}) in one computation")]
    MixedExtensions(u64, u64),
    #[error("radicand {0} is not a square-free integer greater than 1")]
    InvalidRadicand(u64),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("{0}: empty input")]
    EmptyInput(&'static str),
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("input vectors are linearly dependent (index {0})")]
    LinearlyDependent(usize),
    #[error("illegal root system {kind}{rank}")]
    IllegalSystem { kind: char, rank: usize },
    #[error("multiplicities inconsistent under the Weyl group: {0}")]
    InconsistentMultiplicities(String),
    #[error("root data violates the axioms: {0}")]
    InvalidRootSystem(String),
    #[error("rank {0} too large for Weyl group enumeration")]
    RankTooLarge(usize),
    #[error("point {0} is not in the closed fundamental chamber")]
    OutsideChamber(String),
    #[error("the zero point has no isotropy orbit")]
    ZeroPoint,
    #[error("vector is not in the section spanned by the roots")]
    NotInSection,
    #[error("complement is trivial: the generators span the whole space")]
    TrivialComplement,
    #[error("vector is not in the lattice")]
    NotInLattice,
    #[error("no lattice point on the line through {0}")]
    NoLatticePoint(String),
    #[error("Weyl element does not fix the base point")]
    DoesNotFixPoint,
    #[error("principal orbit has no holonomy section")]
    PrincipalOrbit,
    #[error("matrix is not {0}")]
    WrongSymmetry(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("profile reached the rotation axis at arclength {0}")]
    AxisCollision(f64),
    #[error("catalog: {0}")]
    Catalog(String),
    #[error("internal: {0}")]
    Internal(String),
}
