//! Trees as triangulations of a convex polygon, and the diagonal flip move.
//!
//! A tree with `n` interior nodes corresponds to a triangulation of a convex
//! `(n + 2)`-gon. Convention: polygon vertices are numbered `0..=n+1`
//! clockwise, the side `(0, n+1)` is the root edge, and leaf `i` of the tree
//! is the polygon side `(i, i+1)`. A subtree spanning leaves `lo..=hi` then
//! corresponds to the polygon edge `(lo, hi+1)`, so shared pendant structure
//! reads off directly as shared diagonals. Flipping a diagonal is exactly
//! one rotation on the dual trees.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::tree::Tree;

/// Unordered pair of polygon vertices with `a < b`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Diagonal {
    a: usize,
    b: usize,
}

impl Diagonal {
    pub fn new(x: usize, y: usize) -> Diagonal {
        if x <= y {
            Diagonal { a: x, b: y }
        } else {
            Diagonal { a: y, b: x }
        }
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    /// Strict interior crossing on the convex polygon.
    pub fn crosses(&self, other: &Diagonal) -> bool {
        let (a, b) = (self.a, self.b);
        let (c, d) = (other.a, other.b);
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// A triangulation of the convex `m`-gon: exactly `m - 3` pairwise
/// non-crossing diagonals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Triangulation {
    m: usize,
    diagonals: BTreeSet<Diagonal>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualityError {
    #[error("a single leaf has no dual triangulation (the 2-gon cannot be triangulated)")]
    DegenerateInput,
    #[error("polygon needs at least 3 vertices, got {m}")]
    TooFewVertices { m: usize },
    #[error("{d} is not a diagonal of the {m}-gon")]
    NotADiagonal { d: Diagonal, m: usize },
    #[error("diagonals {d1} and {d2} cross")]
    CrossingDiagonals { d1: Diagonal, d2: Diagonal },
    #[error("expected {expected} diagonals for the {m}-gon, got {got}")]
    WrongDiagonalCount { m: usize, expected: usize, got: usize },
    #[error("diagonal {d} not present in the triangulation")]
    MissingDiagonal { d: Diagonal },
    #[error("triangulations have different polygon sizes: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("cannot parse triangulation: {0}")]
    Parse(String),
}

impl Triangulation {
    /// Validates and builds a triangulation.
    pub fn new(
        m: usize,
        diagonals: impl IntoIterator<Item = Diagonal>,
    ) -> Result<Triangulation, DualityError> {
        if m < 3 {
            return Err(DualityError::TooFewVertices { m });
        }
        let diagonals: BTreeSet<Diagonal> = diagonals.into_iter().collect();
        for d in &diagonals {
            let (a, b) = d.endpoints();
            if b >= m || b - a < 2 || (a == 0 && b == m - 1) {
                return Err(DualityError::NotADiagonal { d: *d, m });
            }
        }
        if diagonals.len() != m - 3 {
            return Err(DualityError::WrongDiagonalCount {
                m,
                expected: m - 3,
                got: diagonals.len(),
            });
        }
        let list: Vec<Diagonal> = diagonals.iter().copied().collect();
        for (i, d1) in list.iter().enumerate() {
            for d2 in &list[i + 1..] {
                if d1.crosses(d2) {
                    return Err(DualityError::CrossingDiagonals { d1: *d1, d2: *d2 });
                }
            }
        }
        Ok(Triangulation { m, diagonals })
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn diagonals(&self) -> &BTreeSet<Diagonal> {
        &self.diagonals
    }

    fn has_edge(&self, x: usize, y: usize) -> bool {
        let (a, b) = if x < y { (x, y) } else { (y, x) };
        // Polygon sides plus diagonals.
        b - a == 1 || (a == 0 && b == self.m - 1) || self.diagonals.contains(&Diagonal::new(a, b))
    }

    /// Replaces `d` by the opposite diagonal of the quadrilateral formed by
    /// its two adjacent triangles.
    pub fn flip(&self, d: Diagonal) -> Result<Triangulation, DualityError> {
        if !self.diagonals.contains(&d) {
            return Err(DualityError::MissingDiagonal { d });
        }
        let (a, b) = d.endpoints();
        let is_apex = |v: &usize| self.has_edge(a, *v) && self.has_edge(*v, b);
        let x = (a + 1..b)
            .find(is_apex)
            .expect("valid triangulation has a triangle inside every diagonal");
        let y = (b + 1..self.m)
            .chain(0..a)
            .find(is_apex)
            .expect("valid triangulation has a triangle outside every diagonal");
        let mut diagonals = self.diagonals.clone();
        diagonals.remove(&d);
        diagonals.insert(Diagonal::new(x, y));
        let out = Triangulation {
            m: self.m,
            diagonals,
        };
        debug_assert!(Triangulation::new(out.m, out.diagonals.iter().copied()).is_ok());
        Ok(out)
    }

    /// Diagonals present in both triangulations.
    pub fn common_diagonals(
        &self,
        other: &Triangulation,
    ) -> Result<BTreeSet<Diagonal>, DualityError> {
        if self.m != other.m {
            return Err(DualityError::SizeMismatch {
                left: self.m,
                right: other.m,
            });
        }
        Ok(self.diagonals.intersection(&other.diagonals).copied().collect())
    }
}

impl fmt::Display for Triangulation {
    /// `"m; a-b, c-d, ..."` with the diagonal list sorted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.m)?;
        for (i, d) in self.diagonals.iter().enumerate() {
            if i == 0 {
                write!(f, " {d}")?;
            } else {
                write!(f, ", {d}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Triangulation {
    type Err = DualityError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (m_part, rest) = s
            .split_once(';')
            .ok_or_else(|| DualityError::Parse(format!("missing ';' in {s:?}")))?;
        let m: usize = m_part
            .trim()
            .parse()
            .map_err(|_| DualityError::Parse(format!("bad vertex count {m_part:?}")))?;
        let mut diagonals = Vec::new();
        for piece in rest.split(',') {
            let piece = piece.trim();
            if piece.is_empty() {
                continue;
            }
            let (x, y) = piece
                .split_once('-')
                .ok_or_else(|| DualityError::Parse(format!("bad diagonal {piece:?}")))?;
            let x: usize = x
                .trim()
                .parse()
                .map_err(|_| DualityError::Parse(format!("bad diagonal {piece:?}")))?;
            let y: usize = y
                .trim()
                .parse()
                .map_err(|_| DualityError::Parse(format!("bad diagonal {piece:?}")))?;
            diagonals.push(Diagonal::new(x, y));
        }
        Triangulation::new(m, diagonals)
    }
}

/// Dual triangulation of a tree with `n >= 1` interior nodes.
pub fn tree_to_triangulation(t: &Tree) -> Result<Triangulation, DualityError> {
    let n = t.internal_count();
    if n == 0 {
        return Err(DualityError::DegenerateInput);
    }
    let m = n + 2;
    let mut diagonals = Vec::new();
    // Each proper subtree spanning leaves lo..=hi contributes edge
    // (lo, hi + 1); it is a diagonal unless it is a polygon side.
    fn walk(t: &Tree, lo: usize, root: bool, m: usize, out: &mut Vec<Diagonal>) -> usize {
        match t {
            Tree::Leaf => 1,
            Tree::Node(l, r) => {
                let left_width = walk(l, lo, false, m, out);
                let width = left_width + walk(r, lo + left_width, false, m, out);
                let (a, b) = (lo, lo + width);
                if !root && b - a >= 2 && !(a == 0 && b == m - 1) {
                    out.push(Diagonal::new(a, b));
                }
                width
            }
        }
    }
    walk(t, 0, true, m, &mut diagonals);
    Triangulation::new(m, diagonals)
}

/// Inverse of [`tree_to_triangulation`].
pub fn triangulation_to_tree(p: &Triangulation) -> Tree {
    fn build(p: &Triangulation, a: usize, b: usize) -> Tree {
        if b - a == 1 {
            return Tree::Leaf;
        }
        let apex = (a + 1..b)
            .find(|&v| p.has_edge(a, v) && p.has_edge(v, b))
            .expect("valid triangulation triangulates every spanned edge");
        Tree::node(build(p, a, apex), build(p, apex, b))
    }
    build(p, 0, p.m - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{enumerate_trees, neighbors, Tree};
    use std::collections::BTreeSet;

    fn t(s: &str) -> Tree {
        Tree::parse(s).unwrap()
    }

    #[test]
    fn triangle_has_no_diagonals() {
        let p = tree_to_triangulation(&t("100")).unwrap();
        assert_eq!(p.vertex_count(), 3);
        assert!(p.diagonals().is_empty());
        assert_eq!(triangulation_to_tree(&p), t("100"));
    }

    #[test]
    fn single_leaf_is_degenerate() {
        assert_eq!(
            tree_to_triangulation(&Tree::Leaf),
            Err(DualityError::DegenerateInput)
        );
    }

    #[test]
    fn squares_get_opposite_diagonals() {
        let p1 = tree_to_triangulation(&t("11000")).unwrap();
        let p2 = tree_to_triangulation(&t("10100")).unwrap();
        assert_eq!(
            p1.diagonals().iter().copied().collect::<Vec<_>>(),
            vec![Diagonal::new(0, 2)]
        );
        assert_eq!(
            p2.diagonals().iter().copied().collect::<Vec<_>>(),
            vec![Diagonal::new(1, 3)]
        );
        assert_eq!(triangulation_to_tree(&p2), t("10100"));
        assert!(p1.common_diagonals(&p2).unwrap().is_empty());
    }

    #[test]
    fn square_flip_swaps_the_diagonal() {
        let p = tree_to_triangulation(&t("11000")).unwrap();
        let flipped = p.flip(Diagonal::new(0, 2)).unwrap();
        assert_eq!(
            flipped.diagonals().iter().copied().collect::<Vec<_>>(),
            vec![Diagonal::new(1, 3)]
        );
        // Flipping the new diagonal restores the original.
        assert_eq!(flipped.flip(Diagonal::new(1, 3)).unwrap(), p);
        assert_eq!(
            p.flip(Diagonal::new(1, 3)),
            Err(DualityError::MissingDiagonal {
                d: Diagonal::new(1, 3)
            })
        );
    }

    #[test]
    fn pentagon_triangulations_have_two_flips_each() {
        for tree in enumerate_trees(3).unwrap() {
            let p = tree_to_triangulation(&tree).unwrap();
            let mut results = BTreeSet::new();
            for d in p.diagonals().clone() {
                results.insert(p.flip(d).unwrap().to_string());
            }
            assert_eq!(results.len(), 2, "pentagon flips from {tree}");
        }
    }

    #[test]
    fn hexagon_bijection() {
        let trees = enumerate_trees(4).unwrap();
        let images: BTreeSet<String> = trees
            .iter()
            .map(|t| tree_to_triangulation(t).unwrap().to_string())
            .collect();
        assert_eq!(images.len(), 14, "14 trees map onto 14 triangulations");
        for tree in &trees {
            let p = tree_to_triangulation(tree).unwrap();
            assert_eq!(&triangulation_to_tree(&p), tree);
        }
    }

    #[test]
    fn round_trip_exhaustive_through_n8() {
        for n in 1..=8 {
            for tree in enumerate_trees(n).unwrap() {
                let p = tree_to_triangulation(&tree).unwrap();
                assert_eq!(p.diagonals().len(), p.vertex_count() - 3);
                assert_eq!(triangulation_to_tree(&p), tree);
            }
        }
    }

    #[test]
    fn adjacent_trees_share_all_but_one_diagonal() {
        for n in 2..=6 {
            for tree in enumerate_trees(n).unwrap() {
                let p = tree_to_triangulation(&tree).unwrap();
                for other in neighbors(&tree) {
                    let q = tree_to_triangulation(&other).unwrap();
                    let m = p.vertex_count();
                    assert_eq!(p.common_diagonals(&q).unwrap().len(), m - 4);
                }
            }
        }
    }

    #[test]
    fn common_diagonals_of_a_triangulation_with_itself() {
        let p = tree_to_triangulation(&t("1101000")).unwrap();
        assert_eq!(
            p.common_diagonals(&p).unwrap().len(),
            p.vertex_count() - 3
        );
    }

    #[test]
    fn size_mismatch_is_rejected() {
        let p1 = tree_to_triangulation(&t("100")).unwrap();
        let p2 = tree_to_triangulation(&t("11000")).unwrap();
        assert_eq!(
            p1.common_diagonals(&p2),
            Err(DualityError::SizeMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn invalid_triangulations_are_rejected() {
        assert_eq!(
            Triangulation::new(5, vec![Diagonal::new(0, 2)]),
            Err(DualityError::WrongDiagonalCount {
                m: 5,
                expected: 2,
                got: 1
            })
        );
        assert_eq!(
            Triangulation::new(5, vec![Diagonal::new(0, 2), Diagonal::new(1, 3)]),
            Err(DualityError::CrossingDiagonals {
                d1: Diagonal::new(0, 2),
                d2: Diagonal::new(1, 3)
            })
        );
        assert_eq!(
            Triangulation::new(4, vec![Diagonal::new(0, 3)]),
            Err(DualityError::NotADiagonal {
                d: Diagonal::new(0, 3),
                m: 4
            })
        );
    }

    #[test]
    fn text_format_round_trips() {
        for enc in ["100", "11000", "1101000", "1110000"] {
            let p = tree_to_triangulation(&t(enc)).unwrap();
            let text = p.to_string();
            assert_eq!(text.parse::<Triangulation>().unwrap(), p);
        }
        let p: Triangulation = "4; 1-3".parse().unwrap();
        assert_eq!(triangulation_to_tree(&p), t("10100"));
        assert!("4; 0-3".parse::<Triangulation>().is_err());
    }
}
