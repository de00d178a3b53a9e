//! Rotation distance between ordered rooted full binary trees.
//!
//! The distance between two trees on the same leaf count is the minimum
//! number of rotations transforming one into the other (equivalently, the
//! flip distance between triangulations of a convex polygon). No
//! polynomial-time algorithm is known, but the problem is tractable when
//! parameterized by the distance `k` itself: shared structure can be
//! reduced away until the instance size is bounded by `7k`, after which a
//! bounded search settles the question.
//!
//! The crate provides:
//!
//! * [`tree`] — the tree value type, its preorder bit encoding, rotations,
//!   enumeration, and exact-uniform random generation;
//! * [`duality`] — the correspondence with polygon triangulations and the
//!   diagonal flip move, used to cross-check rotations;
//! * [`reduce`] — the subtree and common-chain reductions and the
//!   [`reduce::kernelize`] fixpoint with a replayable event trail;
//! * [`search`] — the breadth-first oracle, the bounded witness search, the
//!   comb-normalization upper bound, and the [`search::decide_within_k`]
//!   decision procedure.

pub mod duality;
pub mod reduce;
pub mod search;
pub mod tree;

pub use duality::{tree_to_triangulation, triangulation_to_tree, Diagonal, Triangulation};
pub use reduce::{
    find_common_chains, find_common_subtrees, kernelize, ChainMode, CommonChain, CommonSubtree,
    KernelPair, LeafInterval, ReductionEvent,
};
pub use search::{
    bounded_path_search, comb_upper_bound, decide_within_k, exact_distance, Answer, Decision,
    Gate, MemoCache, RotationPath, DEFAULT_ORACLE_CAP,
};
pub use tree::{
    enumerate_trees, inverse_step, left_comb, neighbors, random_tree, random_tree_with, right_comb,
    rotate, valid_steps, Direction, NodeIndex, RotationStep, Tree, TreeEncoding,
};
