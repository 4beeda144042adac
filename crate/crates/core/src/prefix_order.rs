//! Sorting the proper non-empty prefixes of a Lyndon word in the infinite
//! order.
//!
//! Prefixes are named by the position of their last letter. The sort is the
//! tree construction with node creation replaced by emitting the end of the
//! left subtree: nodes are created exactly in increasing prefix rank.

use crate::cartesian::CartesianTree;
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::scan::{self, ComparisonBudget};
use crate::tree::left_lyndon_tree;

/// Prefix standard permutation: `psp[r]` is the end position of the prefix of
/// rank `r`.
pub fn prefix_standard_permutation<S: Ord>(y: &[S]) -> Result<Permutation> {
    prefix_standard_permutation_counted(y, &mut ComparisonBudget::new())
}

pub fn prefix_standard_permutation_counted<S: Ord>(y: &[S], budget: &mut ComparisonBudget) -> Result<Permutation> {
    if y.len() < 2 {
        return Err(Error::TooShort { len: y.len(), min: 2 });
    }
    let mut psp = Vec::with_capacity(y.len() - 1);
    let mut steps = 0u64;
    scan::scan_lyndon_word(y, budget, |j, lyns, _| {
        let mut width = 1;
        while width < lyns[j] {
            let k = j - width;
            psp.push(k);
            width += lyns[k];
            steps += 1;
        }
    })?;
    budget.bundle_steps += steps;
    Ok(Permutation::new_unchecked(psp))
}

/// True iff `y` is a Lyndon word whose psp is `p`, without materialising the
/// psp.
pub(crate) fn has_psp<S: Ord>(y: &[S], p: &[usize]) -> bool {
    if y.len() < 2 || p.len() + 1 != y.len() {
        return false;
    }
    let mut emitted = 0;
    let mut matches = true;
    let scanned = scan::scan_lyndon_word(y, &mut ComparisonBudget::new(), |j, lyns, _| {
        let mut width = 1;
        while width < lyns[j] {
            let k = j - width;
            matches &= p[emitted] == k;
            emitted += 1;
            width += lyns[k];
        }
    });
    scanned.is_ok() && matches
}

/// `rank[j]` is the infinite-order rank of the prefix ending at `j`.
pub fn prefix_rank_table<S: Ord>(y: &[S]) -> Result<Permutation> {
    Ok(prefix_standard_permutation(y)?.inverse())
}

fn require_lyndon_pair<S: Ord>(y: &[S]) -> Result<()> {
    if y.len() < 2 {
        return Err(Error::TooShort { len: y.len(), min: 2 });
    }
    Ok(())
}

/// True iff the tree construction creates its internal nodes in increasing
/// prefix rank, i.e. mapping creation order to prefix ends yields the psp.
pub fn check_theorem6<S: Ord>(y: &[S]) -> Result<bool> {
    require_lyndon_pair(y)?;
    let tree = left_lyndon_tree(y)?;
    let psp = prefix_standard_permutation(y)?;
    let created = tree
        .internal_nodes()
        .map(|id| tree.prefix_end(id).expect("internal node"));
    Ok(created.eq(psp.iter().copied()))
}

/// True iff the internal nodes of the left Lyndon tree, each placed at its
/// prefix end and labelled with that prefix's rank, form the max-rooted
/// Cartesian tree of the rank sequence.
pub fn check_cartesian<S: Ord>(y: &[S]) -> Result<bool> {
    require_lyndon_pair(y)?;
    let tree = left_lyndon_tree(y)?;
    let rank = prefix_rank_table(y)?;
    let cartesian = CartesianTree::new(rank.as_slice());

    let position = |id: usize| tree.prefix_end(id);
    if cartesian.root() != position(tree.root()) {
        return Ok(false);
    }
    for id in tree.internal_nodes() {
        let (l, r) = tree.children(id).expect("internal node");
        let at = position(id).expect("internal node");
        if cartesian.left(at) != position(l) || cartesian.right(at) != position(r) {
            return Ok(false);
        }
    }
    Ok(true)
}
