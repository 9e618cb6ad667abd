pub mod error;
pub mod groupoid;
pub mod json;
pub mod laurent;
pub mod linalg;
pub mod oracle;
pub mod osp;
pub mod partition;
pub mod point;
pub mod poly;
pub mod selftest;
pub mod supersym;

pub use error::{Error, Result};
pub use partition::{IntegerSignature, Partition};
pub use point::Point;
pub use poly::{Binding, Block, Coeff, GroupElement, Monomial, Polynomial, Var, VarSpec};
pub use supersym::BasisDecomposition;
