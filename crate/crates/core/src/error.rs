use alloc::string::String;
use core::fmt;

use crate::group::Elem;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// A group axiom that a candidate Cayley table fails, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// Element 0 is not a two-sided identity. `candidate` is an element that
    /// does behave as the identity, if any, so the caller can relabel.
    IdentityNotZero { candidate: Option<Elem> },
    /// `a` has no two-sided inverse.
    Inverse { element: Elem },
    /// `(a·b)·c != a·(b·c)`.
    Associativity { a: Elem, b: Elem, c: Elem },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::IdentityNotZero { candidate: Some(e) } => write!(
                f,
                "identity: element 0 is not the identity; element {e} is, relabel it to 0"
            ),
            AxiomViolation::IdentityNotZero { candidate: None } => {
                write!(f, "identity: element 0 is not the identity and no element is")
            }
            AxiomViolation::Inverse { element } => {
                write!(f, "inverse: element {element} has no two-sided inverse")
            }
            AxiomViolation::Associativity { a, b, c } => {
                write!(f, "associativity: ({a}·{b})·{c} != {a}·({b}·{c})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    EmptyGroup,
    NotSquare {
        row: usize,
        len: usize,
        order: usize,
    },
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    Axiom(AxiomViolation),
    /// An element index that does not belong to the group it was used with.
    ForeignElement {
        index: Elem,
        order: usize,
    },
    /// Two objects built over different parent groups were combined.
    ParentMismatch,
    /// A member list is not closed under the group operation.
    NotSubgroup,
    /// A containment precondition (`N ⊆ H`) does not hold.
    NotContained,
    NotNormal,
    SizeCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    /// The standing hypothesis of a theorem is not met.
    Hypothesis(&'static str),
    UnknownGroup(String),
    /// The autocommutator pairing depends on the coset representative.
    PairingIllDefined {
        coset: usize,
        automorphism: usize,
    },
    /// A mathematical invariant that the library relies on was violated.
    Invariant(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyGroup => write!(f, "a group must have at least one element"),
            Error::NotSquare { row, len, order } => {
                write!(f, "row {row} has {len} entries, expected {order}")
            }
            Error::EntryOutOfRange { row, col, value, order } => {
                write!(f, "entry ({row}, {col}) = {value} is outside [0, {order})")
            }
            Error::Axiom(v) => write!(f, "group axiom violated: {v}"),
            Error::ForeignElement { index, order } => {
                write!(f, "element {index} does not belong to a group of order {order}")
            }
            Error::ParentMismatch => write!(f, "objects belong to different parent groups"),
            Error::NotSubgroup => write!(f, "member set is not a subgroup"),
            Error::NotContained => write!(f, "subgroup containment precondition violated"),
            Error::NotNormal => write!(f, "subgroup is not normal"),
            Error::SizeCap { what, size, cap } => {
                write!(f, "{what} has size {size}, above the cap of {cap}")
            }
            Error::Hypothesis(h) => write!(f, "hypothesis not met: {h}"),
            Error::UnknownGroup(name) => write!(
                f,
                "unknown group `{name}`; expected one of C(n), D(n), Q8, S(n) with n <= 4, A(4), \
                 E(p,k), M16, Dic(n), or products X×Y of these"
            ),
            Error::PairingIllDefined { coset, automorphism } => write!(
                f,
                "autocommutator pairing is not well defined on coset {coset} under automorphism {automorphism}"
            ),
            Error::Invariant(what) => write!(f, "internal invariant violated: {what}"),
        }
    }
}

impl core::error::Error for Error {}

impl From<AxiomViolation> for Error {
    fn from(v: AxiomViolation) -> Self {
        Error::Axiom(v)
    }
}
