//! Non-isomorphic free trees of a given order, generated as canonical level
//! sequences of trees rooted at a center (Wright, Richmond, Odlyzko and
//! McKay, 1986), one tree per isomorphism class.

use crate::graph::Tree;

/// All free trees of order `n`, one per isomorphism class.
#[derive(Clone, Debug)]
pub struct FreeTrees {
    order: usize,
    layout: Option<Vec<usize>>,
    small: Option<Tree>,
}

pub fn free_trees(order: usize) -> FreeTrees {
    let (layout, small) = match order {
        0 => (None, None),
        1 | 2 => (None, Some(Tree::path(order).expect("small path"))),
        // the path, rooted at its center
        _ => (
            Some((0..=order / 2).chain(1..order.div_ceil(2)).collect()),
            None,
        ),
    };
    FreeTrees {
        order,
        layout,
        small,
    }
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if let Some(t) = self.small.take() {
            return Some(t);
        }
        let layout = next_free(self.layout.take()?)?;
        let tree = layout_to_tree(&layout);
        self.layout = next_rooted(&layout, None);
        debug_assert_eq!(tree.order(), self.order);
        Some(tree)
    }
}

/// Next rooted level sequence, changing position `p` onwards (by default
/// the last position whose level exceeds 1).
fn next_rooted(prev: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = prev.len() - 1;
            while prev[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while prev[q] != prev[p] - 1 {
        q -= 1;
    }
    let mut next = prev.to_vec();
    for i in p..next.len() {
        next[i] = next[i - p + q];
    }
    Some(next)
}

/// Splits off the first subtree of the root: its levels shifted up by one,
/// and the rest of the tree.
fn split(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let second_child = layout
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..second_child].iter().map(|l| l - 1).collect();
    let rest = std::iter::once(0)
        .chain(layout[second_child..].iter().copied())
        .collect();
    (left, rest)
}

/// Advances to the next level sequence that is canonical for a free tree
/// rooted at its center.
fn next_free(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split(&candidate);
    let lh = left.iter().max().copied().unwrap_or(0);
    let rh = rest.iter().max().copied().unwrap_or(0);
    let mut valid = rh >= lh;
    if valid && rh == lh {
        valid = left.len() < rest.len() || (left.len() == rest.len() && left <= rest);
    }
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split(&next);
        let h = new_left.iter().max().copied().unwrap_or(0);
        let len = next.len();
        for (slot, level) in next[len - (h + 1)..].iter_mut().zip(1..) {
            *slot = level;
        }
    }
    Some(next)
}

fn layout_to_tree(layout: &[usize]) -> Tree {
    let mut edges = Vec::with_capacity(layout.len() - 1);
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&j) = stack.last() {
            if layout[j] < level {
                edges.push((j as u32, i as u32));
                break;
            }
            stack.pop();
        }
        stack.push(i);
    }
    Tree::from_edges(layout.len(), &edges).expect("level sequences encode trees")
}
