//! The Hopf algebra of standard heap ordered trees, the bialgebra of
//! permutations under the heap product, and the isomorphism between them.
//!
//! Basis elements are canonical values ([`StandardTree`], [`CyclePerm`]);
//! algebra elements are integer linear combinations ([`LinComb`]). The
//! [`verify`] module checks the bialgebra laws exhaustively at small degree.

pub mod bialgebra;
pub mod collate;
pub mod iso;
pub mod linear;
pub mod perm;
pub mod perm_hopf;
pub mod tree;
pub mod tree_hopf;
pub mod verify;

pub use bialgebra::{Antipode, Graded, GradedBialgebra};
pub use iso::{alpha, beta, phi, phi_inv, CycleString, IsoError};
pub use linear::{bilinear, tensor, Basis, LinComb, Tensor};
pub use perm::{
    enumerate_perms, parse_perm, parse_perm_with_degree, std_perm, Cycle, CyclePerm, PermError,
};
pub use perm_hopf::{
    heap_product, perm_antipode, perm_coproduct, perm_counit, AttachmentPoint, PermAlgebra,
};
pub use tree::{
    attach_all, enumerate_trees, graft_at_root, Forest, Label, LabeledTree, StandardTree, TreeError,
};
pub use tree_hopf::{tree_antipode, tree_coproduct, tree_counit, tree_product, TreeAlgebra};
pub use verify::{verify, verify_all, Law, Report, VerifyError};
