//! Left Lyndon trees and forests.
//!
//! A tree over a word of length `n` lives in a flat arena. Node ids `0..n` are
//! the leaves (word positions); internal nodes get ids `n..2n-1` in creation
//! order, so `id - n` is a node's creation rank. Both constructions create a
//! parent after its children, so ids grow along every root-ward path.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::scan::{self, ComparisonBudget, LynsTable, ScanEvent};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyndonTree {
    leaves: usize,
    /// `(left, right)` children of internal node `leaves + k`.
    children: Vec<(usize, usize)>,
    /// Leaf span of every node, leaves first.
    spans: Vec<Range<usize>>,
}

impl LyndonTree {
    /// Builds a tree from internal nodes listed in creation order.
    ///
    /// Panics if a child id is not smaller than its parent's or the children's
    /// spans are not adjacent.
    pub(crate) fn from_children(leaves: usize, children: Vec<(usize, usize)>) -> Self {
        assert!(leaves > 0, "a tree has at least one leaf");
        assert_eq!(children.len() + 1, leaves, "binary tree needs n-1 internal nodes");
        let mut spans: Vec<Range<usize>> = (0..leaves).map(|p| p..p + 1).collect();
        for (k, &(left, right)) in children.iter().enumerate() {
            let id = leaves + k;
            assert!(left < id && right < id, "children must precede their parent");
            let (l, r) = (spans[left].clone(), spans[right].clone());
            assert_eq!(l.end, r.start, "child spans must be adjacent");
            spans.push(l.start..r.end);
        }
        LyndonTree {
            leaves,
            children,
            spans,
        }
    }

    /// Number of leaves, i.e. the length of the word.
    pub fn len(&self) -> usize {
        self.leaves
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn internal_count(&self) -> usize {
        self.children.len()
    }

    pub fn node_count(&self) -> usize {
        self.spans.len()
    }

    pub fn root(&self) -> usize {
        self.spans.len() - 1
    }

    pub fn is_leaf(&self, id: usize) -> bool {
        id < self.leaves
    }

    /// `(left, right)` for an internal node, `None` for a leaf.
    pub fn children(&self, id: usize) -> Option<(usize, usize)> {
        id.checked_sub(self.leaves).map(|k| self.children[k])
    }

    pub fn left(&self, id: usize) -> Option<usize> {
        self.children(id).map(|(l, _)| l)
    }

    pub fn right(&self, id: usize) -> Option<usize> {
        self.children(id).map(|(_, r)| r)
    }

    /// Half-open range of word positions under `id`.
    pub fn span(&self, id: usize) -> Range<usize> {
        self.spans[id].clone()
    }

    /// Position at which the internal node was created, counting from 0.
    pub fn creation_rank(&self, id: usize) -> Option<usize> {
        id.checked_sub(self.leaves)
    }

    /// Internal node ids in creation order.
    pub fn internal_nodes(&self) -> Range<usize> {
        self.leaves..self.spans.len()
    }

    /// End position of the prefix an internal node stands for: the last
    /// position under its left child.
    pub fn prefix_end(&self, id: usize) -> Option<usize> {
        self.left(id).map(|l| self.spans[l].end - 1)
    }

    /// Internal node ids in left-to-right postorder.
    pub fn postorder_internal(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.internal_count());
        let mut stack = vec![(self.root(), false)];
        while let Some((id, expanded)) = stack.pop() {
            let Some((l, r)) = self.children(id) else { continue };
            if expanded {
                out.push(id);
            } else {
                stack.push((id, true));
                stack.push((r, false));
                stack.push((l, false));
            }
        }
        out
    }
}

/// Left Lyndon trees of the Lyndon factors of a word, left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyndonForest {
    starts: Vec<usize>,
    trees: Vec<LyndonTree>,
}

impl LyndonForest {
    /// Start positions of the factors.
    pub fn starts(&self) -> &[usize] {
        &self.starts
    }

    /// Trees with factor-local numbering: leaf `p` of tree `m` is word
    /// position `starts()[m] + p`.
    pub fn trees(&self) -> &[LyndonTree] {
        &self.trees
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn internal_count(&self) -> usize {
        self.trees.iter().map(LyndonTree::internal_count).sum()
    }

    /// `(word range, tree)` per factor.
    pub fn factors(&self) -> impl Iterator<Item = (Range<usize>, &LyndonTree)> + '_ {
        self.starts.iter().zip(&self.trees).map(|(&s, t)| (s..s + t.len(), t))
    }
}

/// Builds the left Lyndon tree of a Lyndon word in linear time.
pub fn left_lyndon_tree<S: Ord>(y: &[S]) -> Result<LyndonTree> {
    left_lyndon_tree_counted(y, &mut ComparisonBudget::new())
}

pub fn left_lyndon_tree_counted<S: Ord>(y: &[S], budget: &mut ComparisonBudget) -> Result<LyndonTree> {
    build_tree(y, budget).map(|built| built.tree)
}

#[cfg_attr(not(test), allow(dead_code))]
pub(crate) struct BuiltTree {
    pub tree: LyndonTree,
    /// `roots[j]`: root of the subtree ending at `j` once `j` was processed.
    pub roots: Vec<usize>,
    pub lyns: LynsTable,
}

pub(crate) fn build_tree<S: Ord>(y: &[S], budget: &mut ComparisonBudget) -> Result<BuiltTree> {
    let n = y.len();
    let mut roots: Vec<usize> = (0..n).collect();
    let mut children = Vec::with_capacity(n.saturating_sub(1));
    let mut steps = 0u64;
    let lyns = scan::scan_lyndon_word(y, budget, |j, lyns, _| {
        // Bundle the subtrees ending at j-1, j-1-lyns[j-1], ... into the one
        // ending at j until it spans lyns[j] positions.
        let mut width = 1;
        while width < lyns[j] {
            let k = j - width;
            children.push((roots[k], roots[j]));
            roots[j] = n + children.len() - 1;
            width += lyns[k];
            steps += 1;
        }
    })?;
    budget.bundle_steps += steps;
    Ok(BuiltTree {
        tree: LyndonTree::from_children(n, children),
        roots,
        lyns,
    })
}

/// Longest proper Lyndon prefix `u` and the remainder `v` of a Lyndon word.
pub fn standard_factorisation<S: Ord>(y: &[S]) -> Result<(&[S], &[S])> {
    if y.len() < 2 {
        return Err(Error::TooShort { len: y.len(), min: 2 });
    }
    let (lyns, _) = scan::lyndon_suffix_table_lyndon(y)?;
    // y[..=j] is Lyndon iff its longest Lyndon suffix is all of it.
    let split = (0..y.len() - 1).rev().find(|&j| lyns[j] == j + 1).map_or(1, |j| j + 1);
    Ok(y.split_at(split))
}

/// Builds the left Lyndon forest of an arbitrary non-empty word.
pub fn left_lyndon_forest<S: Ord>(y: &[S]) -> Result<LyndonForest> {
    left_lyndon_forest_counted(y, &mut ComparisonBudget::new())
}

pub fn left_lyndon_forest_counted<S: Ord>(y: &[S], budget: &mut ComparisonBudget) -> Result<LyndonForest> {
    let n = y.len();
    let mut roots: Vec<usize> = (0..n).collect();
    // Global arena: (left, right, last position covered).
    let mut arena: Vec<(usize, usize, usize)> = Vec::with_capacity(n);
    let mut h = 0;
    let mut steps = 0u64;
    let lyns = scan::scan_word(y, budget, |event, lyns| match event {
        ScanEvent::Reset(start) => {
            // Subtrees over the rescanned residue are rebuilt from scratch;
            // creation is left to right, so they sit at the arena's tail.
            h = start;
            while arena.last().is_some_and(|&(_, _, end)| end >= h) {
                arena.pop();
            }
            roots[h] = h;
        }
        ScanEvent::Position(j) => {
            roots[j] = j;
            let mut width = 1;
            while width < lyns[j] {
                let k = j - width;
                debug_assert!(k >= h, "bundling crossed the factor start {h}");
                arena.push((roots[k], roots[j], j));
                roots[j] = n + arena.len() - 1;
                width += lyns[k];
                steps += 1;
            }
        }
    })?;
    budget.bundle_steps += steps;

    let starts = lyns.factor_starts();
    debug_assert_eq!(arena.len(), n - starts.len());
    let mut trees = Vec::with_capacity(starts.len());
    let mut consumed = 0;
    for (m, &start) in starts.iter().enumerate() {
        let end = starts.get(m + 1).copied().unwrap_or(n);
        let len = end - start;
        let base = consumed;
        let local = |id: usize| if id < n { id - start } else { id - n - base + len };
        let children: Vec<(usize, usize)> = arena[base..base + len - 1]
            .iter()
            .map(|&(l, r, _)| (local(l), local(r)))
            .collect();
        debug_assert!(len == 1 || local(roots[end - 1]) == len + children.len() - 1);
        consumed += len - 1;
        trees.push(LyndonTree::from_children(len, children));
    }
    Ok(LyndonForest { starts, trees })
}
