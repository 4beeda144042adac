//! Linear-time algorithms on Lyndon words in the letter-comparison model.
//!
//! * [`scan`]: Lyndon-prefix test, Lyndon suffix tables, prefix periods and
//!   the Lyndon factorisation.
//! * [`tree`]: left Lyndon trees of Lyndon words and left Lyndon forests of
//!   arbitrary words.
//! * [`prefix_order`]: the prefix standard permutation, i.e. the proper
//!   prefixes of a Lyndon word sorted in the infinite order.
//! * [`psp_inverse`]: words back from prefix standard permutations.
//! * [`oracle`]: brute-force references and exhaustive enumeration.
//!
//! Algorithms accept any `Ord` symbol type as a slice. Words produced by
//! reconstruction are lowercase ASCII.

pub mod cartesian;
pub mod error;
pub mod oracle;
pub mod order;
pub mod permutation;
pub mod prefix_order;
pub mod psp_inverse;
pub mod scan;
pub mod tree;

pub use cartesian::CartesianTree;
pub use error::{Error, Result};
pub use order::{
    compare_infinite, compare_lex, is_lyndon, is_lyndon_by_condition, is_strongly_less, LyndonCondition, Word,
};
pub use permutation::Permutation;
pub use prefix_order::{check_cartesian, check_theorem6, prefix_rank_table, prefix_standard_permutation};
pub use psp_inverse::{inverse_psp_binary, periods_from_psp, word_from_psp, InverseOutcome};
pub use scan::{
    lyndon_factorize, lyndon_suffix_table, lyndon_suffix_table_lyndon, lyndon_word_prefix, ComparisonBudget, LynsTable,
    PeriodTable,
};
pub use tree::{left_lyndon_forest, left_lyndon_tree, standard_factorisation, LyndonForest, LyndonTree};
