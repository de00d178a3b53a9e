//! Ordered rooted full binary trees: encoding, rotation, enumeration and
//! uniform random generation.
//!
//! Trees are immutable values. Every interior node has exactly two children,
//! so a tree with `n` interior nodes has `n + 1` leaves. Leaves carry no
//! stored labels: the label of a leaf is its 0-based left-to-right position,
//! re-derived whenever needed. Interior nodes are addressed by their 1-based
//! in-order rank (node `i` is the lowest common ancestor of leaves `i - 1`
//! and `i`), which is stable under rotations because rotations preserve the
//! in-order sequence of all nodes.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Largest `n` accepted by [`enumerate_trees`]. Catalan(12) = 208_012 trees
/// is the most we are willing to materialize at once.
pub const ENUMERATION_CAP: usize = 12;

/// An ordered rooted full binary tree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tree {
    Leaf,
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn leaf() -> Tree {
        Tree::Leaf
    }

    pub fn node(left: Tree, right: Tree) -> Tree {
        Tree::Node(Box::new(left), Box::new(right))
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Tree::Leaf)
    }

    /// Children of the root, or `None` for a leaf.
    pub fn children(&self) -> Option<(&Tree, &Tree)> {
        match self {
            Tree::Leaf => None,
            Tree::Node(l, r) => Some((l, r)),
        }
    }

    /// Number of interior nodes, `n`.
    pub fn internal_count(&self) -> usize {
        let mut count = 0;
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            if let Tree::Node(l, r) = t {
                count += 1;
                stack.push(l);
                stack.push(r);
            }
        }
        count
    }

    /// Number of leaves, always `internal_count() + 1`.
    pub fn leaf_count(&self) -> usize {
        self.internal_count() + 1
    }

    /// Preorder bit encoding: `'1'` per interior node, `'0'` per leaf.
    pub fn encode(&self) -> TreeEncoding {
        let mut bits = String::with_capacity(2 * self.internal_count() + 1);
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            match t {
                Tree::Leaf => bits.push('0'),
                Tree::Node(l, r) => {
                    bits.push('1');
                    stack.push(r);
                    stack.push(l);
                }
            }
        }
        TreeEncoding(bits)
    }

    /// Parses a preorder bit encoding. Errors name the first offending
    /// 0-based position.
    pub fn parse(input: &str) -> Result<Tree, ParseError> {
        // Frames hold a finished left subtree awaiting its right sibling.
        let mut pending: Vec<Option<Tree>> = Vec::new();
        let mut done: Option<Tree> = None;
        for (pos, ch) in input.chars().enumerate() {
            if done.is_some() {
                return Err(ParseError::Trailing { pos });
            }
            match ch {
                '1' => pending.push(None),
                '0' => {
                    let mut finished = Tree::Leaf;
                    loop {
                        match pending.last_mut() {
                            None => {
                                done = Some(finished);
                                break;
                            }
                            Some(slot @ None) => {
                                *slot = Some(finished);
                                break;
                            }
                            Some(Some(_)) => {
                                let left = pending.pop().unwrap().unwrap();
                                finished = Tree::node(left, finished);
                            }
                        }
                    }
                }
                ch => return Err(ParseError::InvalidChar { pos, ch }),
            }
        }
        done.ok_or(ParseError::Truncated { pos: input.len() })
    }

    /// GraphViz rendering: interior nodes as unlabeled circles, leaves
    /// labeled 0..n in left-to-right order.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        out.push_str(&format!("digraph {name} {{\n"));
        out.push_str("  graph [ordering=out];\n");
        let mut next_internal = 0usize;
        let mut next_leaf = 0usize;
        // Returns the DOT id of the subtree root.
        fn walk(
            t: &Tree,
            out: &mut String,
            next_internal: &mut usize,
            next_leaf: &mut usize,
        ) -> String {
            match t {
                Tree::Leaf => {
                    let id = format!("leaf{}", *next_leaf);
                    out.push_str(&format!(
                        "  {id} [shape=plaintext, label=\"{}\"];\n",
                        *next_leaf
                    ));
                    *next_leaf += 1;
                    id
                }
                Tree::Node(l, r) => {
                    let id = format!("node{}", *next_internal);
                    *next_internal += 1;
                    out.push_str(&format!("  {id} [shape=circle, label=\"\"];\n"));
                    let lid = walk(l, out, next_internal, next_leaf);
                    let rid = walk(r, out, next_internal, next_leaf);
                    out.push_str(&format!("  {id} -> {lid};\n"));
                    out.push_str(&format!("  {id} -> {rid};\n"));
                    id
                }
            }
        }
        walk(self, &mut out, &mut next_internal, &mut next_leaf);
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

impl FromStr for Tree {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Tree::parse(s)
    }
}

/// Preorder bit string of a tree: `2n + 1` characters over `{'1','0'}`,
/// exactly `n` ones and `n + 1` zeros, every proper prefix having at least
/// as many ones as zeros.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeEncoding(String);

impl TreeEncoding {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Display for TreeEncoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for TreeEncoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self.0)
    }
}

impl FromStr for TreeEncoding {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Tree::parse(s).map(|t| t.encode())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid character {ch:?} at position {pos} (expected '0' or '1')")]
    InvalidChar { pos: usize, ch: char },
    #[error("encoding ends at position {pos} with an unfinished subtree")]
    Truncated { pos: usize },
    #[error("trailing input at position {pos}: the tree was already complete")]
    Trailing { pos: usize },
}

/// 1-based in-order rank of an interior node.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct NodeIndex(pub usize);

impl fmt::Display for NodeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Direction {
    Left,
    Right,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Left => f.write_str("L"),
            Direction::Right => f.write_str("R"),
        }
    }
}

/// One rotation: the addressed node is the pivot that moves down. A right
/// rotation at node `v` promotes `v`'s left child, a left rotation promotes
/// `v`'s right child.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RotationStep {
    pub node: NodeIndex,
    pub direction: Direction,
}

impl RotationStep {
    pub fn new(node: usize, direction: Direction) -> RotationStep {
        RotationStep {
            node: NodeIndex(node),
            direction,
        }
    }

    pub fn left(node: usize) -> RotationStep {
        RotationStep::new(node, Direction::Left)
    }

    pub fn right(node: usize) -> RotationStep {
        RotationStep::new(node, Direction::Right)
    }
}

impl fmt::Display for RotationStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.node, self.direction)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StepParseError {
    #[error("rotation step must be \"<node> L\" or \"<node> R\", got {0:?}")]
    Malformed(String),
}

impl FromStr for RotationStep {
    type Err = StepParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split_whitespace();
        let (Some(node), Some(dir), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(StepParseError::Malformed(s.to_string()));
        };
        let node: usize = node
            .parse()
            .map_err(|_| StepParseError::Malformed(s.to_string()))?;
        let direction = match dir {
            "L" => Direction::Left,
            "R" => Direction::Right,
            _ => return Err(StepParseError::Malformed(s.to_string())),
        };
        Ok(RotationStep::new(node, direction))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum RotationError {
    #[error("node index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("cannot rotate {direction} at node {index}: the required child is a leaf")]
    LeafChild { index: usize, direction: Direction },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("n = {n} exceeds the enumeration cap {cap}")]
pub struct CapacityError {
    pub n: usize,
    pub cap: usize,
}

/// Applies one rotation, returning a new tree.
///
/// A right rotation at node `v = (u, C)` with interior left child
/// `u = (A, B)` yields `(A, (B, C))`: `u` takes `v`'s place and `v` descends
/// to the right. A left rotation is the mirror image. Both preserve the
/// in-order sequence of leaves and interior nodes, so every node keeps its
/// in-order rank.
pub fn rotate(t: &Tree, step: RotationStep) -> Result<Tree, RotationError> {
    let n = t.internal_count();
    let index = step.node.0;
    if index < 1 || index > n {
        return Err(RotationError::IndexOutOfRange { index, n });
    }
    rotate_rec(t, index, step)
}

fn rotate_rec(t: &Tree, local: usize, step: RotationStep) -> Result<Tree, RotationError> {
    let Tree::Node(l, r) = t else {
        unreachable!("rank stays within the subtree holding it");
    };
    let nl = l.internal_count();
    if local == nl + 1 {
        let err = RotationError::LeafChild {
            index: step.node.0,
            direction: step.direction,
        };
        match step.direction {
            Direction::Right => {
                let Tree::Node(a, b) = l.as_ref() else {
                    return Err(err);
                };
                Ok(Tree::node(
                    a.as_ref().clone(),
                    Tree::node(b.as_ref().clone(), r.as_ref().clone()),
                ))
            }
            Direction::Left => {
                let Tree::Node(b, c) = r.as_ref() else {
                    return Err(err);
                };
                Ok(Tree::node(
                    Tree::node(l.as_ref().clone(), b.as_ref().clone()),
                    c.as_ref().clone(),
                ))
            }
        }
    } else if local <= nl {
        Ok(Tree::node(
            rotate_rec(l, local, step)?,
            r.as_ref().clone(),
        ))
    } else {
        Ok(Tree::node(
            l.as_ref().clone(),
            rotate_rec(r, local - nl - 1, step)?,
        ))
    }
}

/// The step that undoes `step` when applied to `rotate(t, step)`.
///
/// Rotations act on an interior edge. A right rotation addressed at the
/// upper endpoint `v` leaves the promoted child `u` as the new upper
/// endpoint, so the inverse is a left rotation addressed at `u`'s rank
/// (which rotations never change), and vice versa.
pub fn inverse_step(t: &Tree, step: RotationStep) -> Result<RotationStep, RotationError> {
    let n = t.internal_count();
    let index = step.node.0;
    if index < 1 || index > n {
        return Err(RotationError::IndexOutOfRange { index, n });
    }
    let v = node_at(t, index);
    let err = RotationError::LeafChild {
        index,
        direction: step.direction,
    };
    let Tree::Node(l, r) = v else { unreachable!() };
    match step.direction {
        Direction::Right => {
            let Tree::Node(_, b) = l.as_ref() else {
                return Err(err);
            };
            Ok(RotationStep::left(index - b.internal_count() - 1))
        }
        Direction::Left => {
            let Tree::Node(b, _) = r.as_ref() else {
                return Err(err);
            };
            Ok(RotationStep::right(index + b.internal_count() + 1))
        }
    }
}

/// Interior node with in-order rank `index` (1-based, assumed in range).
fn node_at(t: &Tree, index: usize) -> &Tree {
    let Tree::Node(l, _) = t else { unreachable!() };
    let nl = l.internal_count();
    if index == nl + 1 {
        t
    } else if index <= nl {
        node_at(l, index)
    } else {
        let Tree::Node(_, r) = t else { unreachable!() };
        node_at(r, index - nl - 1)
    }
}

/// Every rotation applicable to `t`, ordered by node rank, right before
/// left at equal rank. A tree with `n` interior nodes has exactly `n - 1`
/// valid rotations, one per interior edge.
pub fn valid_steps(t: &Tree) -> Vec<RotationStep> {
    let mut steps = Vec::new();
    collect_steps(t, 0, &mut steps);
    steps
}

fn collect_steps(t: &Tree, base: usize, out: &mut Vec<RotationStep>) -> usize {
    match t {
        Tree::Leaf => 0,
        Tree::Node(l, r) => {
            let nl = collect_steps(l, base, out);
            let rank = base + nl + 1;
            if !l.is_leaf() {
                out.push(RotationStep::right(rank));
            }
            if !r.is_leaf() {
                out.push(RotationStep::left(rank));
            }
            let nr = collect_steps(r, rank, out);
            nl + 1 + nr
        }
    }
}

/// All distinct trees reachable from `t` by exactly one rotation.
pub fn neighbors(t: &Tree) -> Vec<Tree> {
    let mut out: Vec<Tree> = valid_steps(t)
        .into_iter()
        .map(|s| rotate(t, s).expect("step came from valid_steps"))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Every full binary tree with `n` interior nodes, each exactly once, in a
/// deterministic order. The count is the Catalan number C(n).
pub fn enumerate_trees(n: usize) -> Result<Vec<Tree>, CapacityError> {
    if n > ENUMERATION_CAP {
        return Err(CapacityError {
            n,
            cap: ENUMERATION_CAP,
        });
    }
    let mut by_size: Vec<Vec<Tree>> = vec![vec![Tree::Leaf]];
    for k in 1..=n {
        let mut level = Vec::new();
        for left_size in 0..k {
            let right_size = k - 1 - left_size;
            for l in &by_size[left_size] {
                for r in &by_size[right_size] {
                    level.push(Tree::node(l.clone(), r.clone()));
                }
            }
        }
        by_size.push(level);
    }
    Ok(by_size.pop().unwrap())
}

/// The all-left spine: `(((.,.),.),.)` for `n = 3`.
pub fn left_comb(n: usize) -> Tree {
    let mut t = Tree::Leaf;
    for _ in 0..n {
        t = Tree::node(t, Tree::Leaf);
    }
    t
}

/// The all-right spine: `(.,(.,(.,.)))` for `n = 3`.
pub fn right_comb(n: usize) -> Tree {
    let mut t = Tree::Leaf;
    for _ in 0..n {
        t = Tree::node(Tree::Leaf, t);
    }
    t
}

/// Uniformly random tree with `n` interior nodes, deterministic per seed.
pub fn random_tree(n: usize, seed: u64) -> Tree {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_tree_with(n, &mut rng)
}

/// Uniformly random tree drawn from the supplied generator.
///
/// Grows the tree by repeated leaf insertion: at step k, a uniformly chosen
/// existing node is replaced by a new interior node whose children are that
/// node and a fresh leaf, on a uniformly chosen side. Each of the C(n)
/// shapes arises with equal probability.
pub fn random_tree_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Tree {
    const NONE: usize = usize::MAX;
    let total = 2 * n + 1;
    let mut left = vec![NONE; total];
    let mut right = vec![NONE; total];
    let mut parent = vec![NONE; total];
    let mut root = 0usize;
    let mut created = 1usize; // node 0 is the initial leaf

    for _ in 0..n {
        let internal = created;
        let new_leaf = created + 1;
        let x = rng.gen_range(0..created);
        if rng.gen::<bool>() {
            left[internal] = new_leaf;
            right[internal] = x;
        } else {
            left[internal] = x;
            right[internal] = new_leaf;
        }
        let p = parent[x];
        if p == NONE {
            root = internal;
        } else if left[p] == x {
            left[p] = internal;
        } else {
            right[p] = internal;
        }
        parent[internal] = p;
        parent[x] = internal;
        parent[new_leaf] = internal;
        created += 2;
    }

    // Assemble bottom-up without recursion.
    let mut built: Vec<Option<Tree>> = vec![None; total];
    let mut stack = vec![(root, false)];
    while let Some((id, expanded)) = stack.pop() {
        if left[id] == NONE {
            built[id] = Some(Tree::Leaf);
        } else if expanded {
            let l = built[left[id]].take().unwrap();
            let r = built[right[id]].take().unwrap();
            built[id] = Some(Tree::node(l, r));
        } else {
            stack.push((id, true));
            stack.push((left[id], false));
            stack.push((right[id], false));
        }
    }
    built[root].take().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn t(s: &str) -> Tree {
        Tree::parse(s).unwrap()
    }

    #[test]
    fn parse_smallest_trees() {
        assert_eq!(t("0"), Tree::Leaf);
        assert_eq!(t("11000"), Tree::node(Tree::node(Tree::Leaf, Tree::Leaf), Tree::Leaf));
        assert_eq!(t("10100"), Tree::node(Tree::Leaf, Tree::node(Tree::Leaf, Tree::Leaf)));
    }

    #[test]
    fn serialize_combs() {
        assert_eq!(Tree::Leaf.encode().as_str(), "0");
        assert_eq!(left_comb(3).encode().as_str(), "1110000");
        assert_eq!(right_comb(3).encode().as_str(), "1010100");
    }

    #[test]
    fn parse_errors_name_first_offending_position() {
        assert_eq!(
            Tree::parse("10200"),
            Err(ParseError::InvalidChar { pos: 2, ch: '2' })
        );
        assert_eq!(Tree::parse("110"), Err(ParseError::Truncated { pos: 3 }));
        assert_eq!(Tree::parse(""), Err(ParseError::Truncated { pos: 0 }));
        assert_eq!(Tree::parse("00"), Err(ParseError::Trailing { pos: 1 }));
        assert_eq!(Tree::parse("100100"), Err(ParseError::Trailing { pos: 3 }));
    }

    #[test]
    fn rotate_right_left_comb() {
        let got = rotate(&t("11000"), RotationStep::right(2)).unwrap();
        assert_eq!(got, t("10100"));
        let back = rotate(&t("10100"), RotationStep::left(1)).unwrap();
        assert_eq!(back, t("11000"));
    }

    #[test]
    fn rotate_rejects_leaf_child_and_bad_index() {
        assert_eq!(
            rotate(&t("10100"), RotationStep::right(1)),
            Err(RotationError::LeafChild {
                index: 1,
                direction: Direction::Right
            })
        );
        assert_eq!(
            rotate(&t("10100"), RotationStep::right(3)),
            Err(RotationError::IndexOutOfRange { index: 3, n: 2 })
        );
        assert_eq!(
            rotate(&t("0"), RotationStep::left(1)),
            Err(RotationError::IndexOutOfRange { index: 1, n: 0 })
        );
    }

    #[test]
    fn inverse_step_crosses_the_edge() {
        // Right at the upper endpoint undoes as left at the promoted child.
        let tree = t("11000");
        let step = RotationStep::right(2);
        let inv = inverse_step(&tree, step).unwrap();
        assert_eq!(inv, RotationStep::left(1));
        let rotated = rotate(&tree, step).unwrap();
        assert_eq!(rotate(&rotated, inv).unwrap(), tree);
    }

    #[test]
    fn inverse_step_restores_everywhere() {
        for tree in enumerate_trees(6).unwrap() {
            for step in valid_steps(&tree) {
                let rotated = rotate(&tree, step).unwrap();
                let inv = inverse_step(&tree, step).unwrap();
                assert_eq!(
                    rotate(&rotated, inv).unwrap(),
                    tree,
                    "step {step} on {tree} not undone by {inv}"
                );
            }
        }
    }

    #[test]
    fn neighbors_examples() {
        assert!(neighbors(&Tree::Leaf).is_empty());
        assert_eq!(neighbors(&t("11000")), vec![t("10100")]);
        // Exactly two trees are one rotation away from the n=3 left comb.
        assert_eq!(neighbors(&left_comb(3)).len(), 2);
    }

    #[test]
    fn neighbors_are_symmetric_and_degree_bounded() {
        for n in 1..=6 {
            let trees = enumerate_trees(n).unwrap();
            for tree in &trees {
                let ns = neighbors(tree);
                assert_eq!(ns.len(), n.saturating_sub(1), "one rotation per interior edge");
                for other in &ns {
                    assert!(
                        neighbors(other).contains(tree),
                        "adjacency must be symmetric"
                    );
                }
            }
        }
    }

    /// Independent count: C(n) = (2n choose n) / (n + 1) via exact u128
    /// arithmetic.
    fn catalan(n: usize) -> u128 {
        let mut binom: u128 = 1;
        for i in 0..n {
            binom = binom * (2 * n - i) as u128 / (i + 1) as u128;
        }
        binom / (n as u128 + 1)
    }

    #[test]
    fn enumerate_matches_catalan_and_has_no_duplicates() {
        for n in 0..=10 {
            let trees = enumerate_trees(n).unwrap();
            assert_eq!(trees.len() as u128, catalan(n), "count at n={n}");
            let distinct: HashSet<_> = trees.iter().map(|t| t.encode()).collect();
            assert_eq!(distinct.len(), trees.len(), "duplicates at n={n}");
            for tree in &trees {
                assert_eq!(tree.internal_count(), n);
            }
        }
    }

    #[test]
    fn enumerate_rejects_past_cap() {
        assert_eq!(
            enumerate_trees(ENUMERATION_CAP + 1),
            Err(CapacityError {
                n: ENUMERATION_CAP + 1,
                cap: ENUMERATION_CAP
            })
        );
    }

    #[test]
    fn random_tree_is_deterministic_per_seed() {
        assert_eq!(random_tree(0, 7), Tree::Leaf);
        for seed in 0..20 {
            assert_eq!(random_tree(5, seed), random_tree(5, seed));
            assert_eq!(random_tree(5, seed).internal_count(), 5);
        }
    }

    #[test]
    fn random_tree_n2_is_close_to_fair() {
        // Two shapes at n=2; chi-square with 1 degree of freedom, critical
        // value 6.635 at significance 0.01.
        let draws = 10_000usize;
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let mut left = 0usize;
        for _ in 0..draws {
            if random_tree_with(2, &mut rng) == left_comb(2) {
                left += 1;
            }
        }
        let expected = draws as f64 / 2.0;
        let chi2 = ((left as f64 - expected).powi(2)
            + ((draws - left) as f64 - expected).powi(2))
            / expected;
        assert!(chi2 < 6.635, "chi-square {chi2} too large (left={left})");
    }

    #[test]
    fn rotation_step_round_trips_through_text() {
        for s in [RotationStep::left(3), RotationStep::right(12)] {
            assert_eq!(s.to_string().parse::<RotationStep>().unwrap(), s);
        }
        assert!("3 X".parse::<RotationStep>().is_err());
        assert!("R 3".parse::<RotationStep>().is_err());
    }

    #[test]
    fn dot_output_mentions_every_leaf() {
        let dot = t("11000").to_dot("tree");
        assert!(dot.contains("digraph tree"));
        for label in ["\"0\"", "\"1\"", "\"2\""] {
            assert!(dot.contains(label), "missing leaf label {label}");
        }
        assert_eq!(dot.matches("shape=circle").count(), 2);
    }
}
