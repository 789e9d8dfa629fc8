//! Terms of the free (right) Leibniz algebra and their right-normed forms.

mod eval;
mod normalize;
mod parse;
mod psom;
mod tree;

pub use eval::{check_tags, Assignment, Evaluate};
pub use normalize::normalize;
pub use parse::parse;
pub use psom::{psom_expand, psom_normal_form, PsomSummand, Sign};
pub use tree::{Generator, LinComb, ProductTree, RightWord};
