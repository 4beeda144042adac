/// Max-rooted Cartesian tree over a sequence of labels.
///
/// In-order traversal visits positions `0..m`; every node's label exceeds the
/// labels below it. Built with the usual right-spine stack in linear time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartesianTree {
    root: Option<usize>,
    left: Vec<Option<usize>>,
    right: Vec<Option<usize>>,
}

impl CartesianTree {
    /// Ties resolve towards the later position becoming the ancestor.
    pub fn new<T: Ord>(labels: &[T]) -> Self {
        let m = labels.len();
        let mut left = vec![None; m];
        let mut right = vec![None; m];
        let mut spine: Vec<usize> = Vec::new();
        for i in 0..m {
            let mut last = None;
            while let Some(&top) = spine.last() {
                if labels[top] > labels[i] {
                    break;
                }
                last = spine.pop();
            }
            left[i] = last;
            if let Some(&top) = spine.last() {
                right[top] = Some(i);
            }
            spine.push(i);
        }
        CartesianTree {
            root: spine.first().copied(),
            left,
            right,
        }
    }

    pub fn len(&self) -> usize {
        self.left.len()
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty()
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn left(&self, pos: usize) -> Option<usize> {
        self.left[pos]
    }

    pub fn right(&self, pos: usize) -> Option<usize> {
        self.right[pos]
    }

    pub fn in_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut stack = Vec::new();
        let mut cur = self.root;
        while cur.is_some() || !stack.is_empty() {
            while let Some(p) = cur {
                stack.push(p);
                cur = self.left[p];
            }
            let p = stack.pop().expect("non-empty stack");
            out.push(p);
            cur = self.right[p];
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_table_from_binary_example() {
        let tree = CartesianTree::new(&[1, 0, 5, 3, 2, 4, 6]);
        assert_eq!(tree.root(), Some(6));
        assert_eq!(tree.left(6), Some(2));
        assert_eq!(tree.right(6), None);
        assert_eq!((tree.left(2), tree.right(2)), (Some(0), Some(5)));
        assert_eq!((tree.left(0), tree.right(0)), (None, Some(1)));
        assert_eq!((tree.left(5), tree.right(5)), (Some(3), None));
        assert_eq!((tree.left(3), tree.right(3)), (None, Some(4)));
        assert_eq!(tree.in_order(), (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn heap_and_inorder_on_all_small_permutations() {
        fn permutations(m: usize) -> Vec<Vec<usize>> {
            if m == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in permutations(m - 1) {
                for at in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(at, m - 1);
                    out.push(q);
                }
            }
            out
        }
        for m in 0..=6 {
            for labels in permutations(m) {
                let tree = CartesianTree::new(&labels);
                assert_eq!(tree.in_order(), (0..m).collect::<Vec<_>>());
                for p in 0..m {
                    for c in [tree.left(p), tree.right(p)].into_iter().flatten() {
                        assert!(labels[c] < labels[p]);
                    }
                }
                if m > 0 {
                    let max = (0..m).max_by_key(|&p| labels[p]);
                    assert_eq!(tree.root(), max);
                }
            }
        }
    }
}
