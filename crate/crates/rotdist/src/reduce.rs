//! Kernelization of tree pairs: the subtree reduction and the common-chain
//! reduction, iterated to a fixpoint, with a replayable event trail.
//!
//! Both reductions preserve rotation distance while shrinking the pair, so
//! distance queries can always be answered on the reduced pair. A pendant
//! subtree is "common" when it has the same shape over the same leaf
//! interval in both trees; a common chain is a run of common pendants
//! hanging off consecutive nodes of a descending path in both trees.
//!
//! Note on chain attachment sides: because pendants must occupy identical
//! leaf intervals, the side on which a pendant hangs is forced by interval
//! arithmetic and is therefore always the same in both trees. Requiring
//! opposite sides ([`ChainMode::OppositeSides`]) consequently never matches
//! anything; it is kept selectable so the stricter rule can be exercised
//! and compared. The default [`ChainMode::AnySide`] accepts the chains that
//! actually occur and is required for the kernel-size guarantee.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::tree::Tree;

/// Inclusive range of leaf labels.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LeafInterval {
    pub lo: usize,
    pub hi: usize,
}

impl LeafInterval {
    pub fn new(lo: usize, hi: usize) -> LeafInterval {
        assert!(lo <= hi, "empty leaf interval");
        LeafInterval { lo, hi }
    }

    pub fn width(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn contains(&self, other: &LeafInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }
}

impl fmt::Display for LeafInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

/// Which child of its parent a subtree is.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ChildSide {
    Left,
    Right,
}

impl ChildSide {
    fn other(self) -> ChildSide {
        match self {
            ChildSide::Left => ChildSide::Right,
            ChildSide::Right => ChildSide::Left,
        }
    }
}

impl fmt::Display for ChildSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChildSide::Left => f.write_str("left"),
            ChildSide::Right => f.write_str("right"),
        }
    }
}

/// A pendant subtree present in both trees: same shape, same leaf interval.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CommonSubtree {
    pub interval: LeafInterval,
    pub shape: Tree,
}

/// Side condition applied to chain pendants across the two trees.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum ChainMode {
    /// Accept a chain whatever the per-pendant attachment sides are.
    #[default]
    AnySide,
    /// Require every pendant to hang on opposite sides in the two trees.
    /// Position-identical pendants can never satisfy this (see module
    /// docs), so this mode disables chain reduction in practice.
    OppositeSides,
}

impl ChainMode {
    fn allows(self, side_t1: ChildSide, side_t2: ChildSide) -> bool {
        match self {
            ChainMode::AnySide => true,
            ChainMode::OppositeSides => side_t1 != side_t2,
        }
    }
}

/// A common chain: pendants in top-to-bottom order along a descending path
/// present in both trees, with per-tree attachment sides.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CommonChain {
    pub pendants: Vec<CommonSubtree>,
    pub sides_t1: Vec<ChildSide>,
    pub sides_t2: Vec<ChildSide>,
}

impl CommonChain {
    pub fn len(&self) -> usize {
        self.pendants.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pendants.is_empty()
    }
}

/// Chains shorter than this do not shrink the pair when replaced by three
/// pendant leaves, so they are never reduced.
pub const MIN_REDUCIBLE_CHAIN: usize = 4;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReductionKind {
    Subtree,
    Chain,
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionKind::Subtree => f.write_str("subtree"),
            ReductionKind::Chain => f.write_str("chain"),
        }
    }
}

/// What a reduction put in place of the removed structure, in the new
/// labeling.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Replacement {
    SingleLeaf { leaf: usize },
    PendantLeaves { a: usize, b: usize, c: usize },
}

impl fmt::Display for Replacement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Replacement::SingleLeaf { leaf } => write!(f, "leaf:{leaf}"),
            Replacement::PendantLeaves { a, b, c } => write!(f, "pendants:{a},{b},{c}"),
        }
    }
}

/// Record of one reduction, sufficient to replay it.
///
/// `label_remap[old]` is the new label of old leaf `old`; `None` marks
/// leaves of chain pendants that were dropped outright rather than
/// collapsed into a placeholder.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReductionEvent {
    pub kind: ReductionKind,
    pub before_intervals: Vec<LeafInterval>,
    pub replacement: Replacement,
    pub label_remap: Vec<Option<usize>>,
}

/// A fully reduced pair together with the events that produced it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KernelPair {
    pub t1: Tree,
    pub t2: Tree,
    pub events: Vec<ReductionEvent>,
}

impl KernelPair {
    pub fn leaf_count(&self) -> usize {
        self.t1.leaf_count()
    }

    pub fn is_trivial(&self) -> bool {
        self.t1.is_leaf() && self.t2.is_leaf()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("trees have different leaf counts: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("no common subtree of that shape spans leaves {interval}")]
    NotCommon { interval: LeafInterval },
    #[error("subtree on {interval} is the whole tree; only proper subtrees reduce to a leaf")]
    NotProper { interval: LeafInterval },
    #[error("subtree on {interval} is a single leaf; nothing to reduce")]
    TooNarrow { interval: LeafInterval },
    #[error("chain of {m} pendants is too short to reduce (needs at least {MIN_REDUCIBLE_CHAIN})")]
    ChainTooShort { m: usize },
    #[error("invalid chain: {0}")]
    InvalidChain(String),
}

// ---------------------------------------------------------------------------
// Interval-indexed view of a tree.

struct Entry<'a> {
    interval: LeafInterval,
    tree: &'a Tree,
    parent: Option<(usize, ChildSide)>,
    left: Option<usize>,
    right: Option<usize>,
}

struct TreeIndex<'a> {
    entries: Vec<Entry<'a>>,
    by_interval: HashMap<LeafInterval, usize>,
}

impl<'a> TreeIndex<'a> {
    fn build(t: &'a Tree) -> TreeIndex<'a> {
        fn walk<'a>(
            t: &'a Tree,
            lo: usize,
            parent: Option<(usize, ChildSide)>,
            entries: &mut Vec<Entry<'a>>,
        ) -> (usize, usize) {
            let id = entries.len();
            entries.push(Entry {
                interval: LeafInterval::new(lo, lo),
                tree: t,
                parent,
                left: None,
                right: None,
            });
            match t {
                Tree::Leaf => (id, 1),
                Tree::Node(l, r) => {
                    let (lid, lw) = walk(l, lo, Some((id, ChildSide::Left)), entries);
                    let (rid, rw) = walk(r, lo + lw, Some((id, ChildSide::Right)), entries);
                    let width = lw + rw;
                    entries[id].interval = LeafInterval::new(lo, lo + width - 1);
                    entries[id].left = Some(lid);
                    entries[id].right = Some(rid);
                    (id, width)
                }
            }
        }
        let mut entries = Vec::new();
        walk(t, 0, None, &mut entries);
        let by_interval = entries
            .iter()
            .enumerate()
            .map(|(i, e)| (e.interval, i))
            .collect();
        TreeIndex {
            entries,
            by_interval,
        }
    }

    fn get(&self, interval: LeafInterval) -> Option<&Entry<'a>> {
        self.by_interval.get(&interval).map(|&i| &self.entries[i])
    }

    fn child(&self, entry: &Entry<'a>, side: ChildSide) -> Option<&Entry<'a>> {
        let id = match side {
            ChildSide::Left => entry.left?,
            ChildSide::Right => entry.right?,
        };
        Some(&self.entries[id])
    }
}

fn check_sizes(t1: &Tree, t2: &Tree) -> Result<(), ReduceError> {
    let (left, right) = (t1.leaf_count(), t2.leaf_count());
    if left != right {
        return Err(ReduceError::SizeMismatch { left, right });
    }
    Ok(())
}

/// Rebuilds `t` with the subtree spanning exactly `target` replaced.
fn splice(t: &Tree, lo: usize, target: LeafInterval, replacement: &Tree) -> Tree {
    let width = t.leaf_count();
    if lo == target.lo && lo + width - 1 == target.hi {
        return replacement.clone();
    }
    let Tree::Node(l, r) = t else {
        unreachable!("target interval was validated to be a subtree");
    };
    let lw = l.leaf_count();
    if target.hi < lo + lw {
        Tree::node(splice(l, lo, target, replacement), r.as_ref().clone())
    } else {
        Tree::node(l.as_ref().clone(), splice(r, lo + lw, target, replacement))
    }
}

// ---------------------------------------------------------------------------
// Subtree reduction.

/// All maximal proper common pendant subtrees with at least two leaves,
/// ordered by leaf interval. "Maximal" means not nested inside another
/// reported subtree.
pub fn find_common_subtrees(t1: &Tree, t2: &Tree) -> Result<Vec<CommonSubtree>, ReduceError> {
    check_sizes(t1, t2)?;
    let n = t1.internal_count();
    let whole = LeafInterval::new(0, n);
    let idx1 = TreeIndex::build(t1);
    let idx2 = TreeIndex::build(t2);

    let mut candidates: Vec<CommonSubtree> = Vec::new();
    for e1 in &idx1.entries {
        if e1.interval.width() < 2 || e1.interval == whole {
            continue;
        }
        if let Some(e2) = idx2.get(e1.interval) {
            if e1.tree == e2.tree {
                candidates.push(CommonSubtree {
                    interval: e1.interval,
                    shape: e1.tree.clone(),
                });
            }
        }
    }
    let maximal: Vec<CommonSubtree> = candidates
        .iter()
        .filter(|c| {
            !candidates
                .iter()
                .any(|o| o.interval != c.interval && o.interval.contains(&c.interval))
        })
        .cloned()
        .collect();
    let mut out = maximal;
    out.sort_by_key(|c| c.interval);
    Ok(out)
}

/// Collapses one common subtree to a single leaf in both trees.
pub fn apply_subtree_reduction(
    t1: &Tree,
    t2: &Tree,
    s: &CommonSubtree,
) -> Result<(Tree, Tree, ReductionEvent), ReduceError> {
    check_sizes(t1, t2)?;
    let interval = s.interval;
    if interval.width() < 2 {
        return Err(ReduceError::TooNarrow { interval });
    }
    let n = t1.internal_count();
    if interval == LeafInterval::new(0, n) {
        return Err(ReduceError::NotProper { interval });
    }
    for t in [t1, t2] {
        let idx = TreeIndex::build(t);
        match idx.get(interval) {
            Some(e) if e.tree == &s.shape => {}
            _ => return Err(ReduceError::NotCommon { interval }),
        }
    }
    Ok(collapse_subtree(t1, t2, interval))
}

fn collapse_subtree(t1: &Tree, t2: &Tree, interval: LeafInterval) -> (Tree, Tree, ReductionEvent) {
    let leaf = Tree::Leaf;
    let out1 = splice(t1, 0, interval, &leaf);
    let out2 = splice(t2, 0, interval, &leaf);
    let old_leaves = t1.leaf_count();
    let shrink = interval.width() - 1;
    let label_remap = (0..old_leaves)
        .map(|x| {
            if x < interval.lo {
                Some(x)
            } else if x <= interval.hi {
                Some(interval.lo)
            } else {
                Some(x - shrink)
            }
        })
        .collect();
    let event = ReductionEvent {
        kind: ReductionKind::Subtree,
        before_intervals: vec![interval],
        replacement: Replacement::SingleLeaf { leaf: interval.lo },
        label_remap,
    };
    (out1, out2, event)
}

// ---------------------------------------------------------------------------
// Chain reduction.

/// One detected chain link: at the spine node spanning `state`, the pendant
/// hangs on `side_t1`/`side_t2` and the spine continues into `next`.
struct ChainStep {
    state: LeafInterval,
    side_t1: ChildSide,
    side_t2: ChildSide,
    pendant: CommonSubtree,
    next: LeafInterval,
}

fn chain_steps(idx1: &TreeIndex, idx2: &TreeIndex, mode: ChainMode) -> Vec<ChainStep> {
    let mut steps = Vec::new();
    for e1 in &idx1.entries {
        if e1.tree.is_leaf() {
            continue;
        }
        let Some(e2) = idx2.get(e1.interval) else {
            continue;
        };
        if e2.tree.is_leaf() {
            continue;
        }
        for side_t1 in [ChildSide::Left, ChildSide::Right] {
            for side_t2 in [ChildSide::Left, ChildSide::Right] {
                let c1 = idx1.child(e1, side_t1).unwrap();
                let c2 = idx2.child(e2, side_t2).unwrap();
                if c1.interval != c2.interval || c1.tree != c2.tree {
                    continue;
                }
                if !mode.allows(side_t1, side_t2) {
                    continue;
                }
                let n1 = idx1.child(e1, side_t1.other()).unwrap();
                let n2 = idx2.child(e2, side_t2.other()).unwrap();
                if n1.interval != n2.interval {
                    continue;
                }
                steps.push(ChainStep {
                    state: e1.interval,
                    side_t1,
                    side_t2,
                    pendant: CommonSubtree {
                        interval: c1.interval,
                        shape: c1.tree.clone(),
                    },
                    next: n1.interval,
                });
            }
        }
    }
    steps
}

/// All maximal common chains with at least [`MIN_REDUCIBLE_CHAIN`] pendants,
/// ordered by the first pendant's interval. Pendants must occur identically
/// (same shape, same leaf interval) on consecutive nodes of a descending
/// path in both trees; `mode` selects the accepted attachment-side pattern.
pub fn find_common_chains(
    t1: &Tree,
    t2: &Tree,
    mode: ChainMode,
) -> Result<Vec<CommonChain>, ReduceError> {
    check_sizes(t1, t2)?;
    let idx1 = TreeIndex::build(t1);
    let idx2 = TreeIndex::build(t2);
    let steps = chain_steps(&idx1, &idx2, mode);

    let mut by_state: HashMap<LeafInterval, Vec<usize>> = HashMap::new();
    let mut entered: HashMap<LeafInterval, bool> = HashMap::new();
    for (i, s) in steps.iter().enumerate() {
        by_state.entry(s.state).or_default().push(i);
        entered.insert(s.next, true);
    }

    let mut chains = Vec::new();
    // Depth-first extension from every link that no other link feeds into.
    fn extend(
        steps: &[ChainStep],
        by_state: &HashMap<LeafInterval, Vec<usize>>,
        prefix: &mut Vec<usize>,
        last: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        match by_state.get(&steps[last].next) {
            Some(succs) => {
                for &s in succs {
                    prefix.push(s);
                    extend(steps, by_state, prefix, s, out);
                    prefix.pop();
                }
            }
            None => out.push(prefix.clone()),
        }
    }
    let mut paths: Vec<Vec<usize>> = Vec::new();
    for (i, s) in steps.iter().enumerate() {
        if entered.get(&s.state).copied().unwrap_or(false) {
            continue; // some chain passes through here; not a maximal start
        }
        let mut prefix = vec![i];
        extend(&steps, &by_state, &mut prefix, i, &mut paths);
    }
    for path in paths {
        if path.len() < MIN_REDUCIBLE_CHAIN {
            continue;
        }
        chains.push(CommonChain {
            pendants: path.iter().map(|&i| steps[i].pendant.clone()).collect(),
            sides_t1: path.iter().map(|&i| steps[i].side_t1).collect(),
            sides_t2: path.iter().map(|&i| steps[i].side_t2).collect(),
        });
    }
    chains.sort_by_key(|c| (c.pendants[0].interval, c.len()));
    Ok(chains)
}

/// Where a chain sits inside one tree.
struct ChainSite {
    top: LeafInterval,
    bottom: Tree,
    bottom_interval: LeafInterval,
}

fn locate_chain(
    idx: &TreeIndex,
    pendants: &[CommonSubtree],
    sides: &[ChildSide],
) -> Result<ChainSite, ReduceError> {
    if pendants.len() != sides.len() {
        return Err(ReduceError::InvalidChain(
            "one attachment side per pendant required".into(),
        ));
    }
    let mut top = None;
    let mut prev_spine: Option<LeafInterval> = None;
    let mut last_parent = None;
    for (j, (pendant, &side)) in pendants.iter().zip(sides).enumerate() {
        let entry = idx
            .get(pendant.interval)
            .filter(|e| e.tree == &pendant.shape)
            .ok_or(ReduceError::NotCommon {
                interval: pendant.interval,
            })?;
        let Some((parent_id, actual_side)) = entry.parent else {
            return Err(ReduceError::InvalidChain(format!(
                "pendant {} is the whole tree",
                pendant.interval
            )));
        };
        if actual_side != side {
            return Err(ReduceError::InvalidChain(format!(
                "pendant {} hangs on the {actual_side}, not the {side}",
                pendant.interval
            )));
        }
        let parent = &idx.entries[parent_id];
        if j == 0 {
            top = Some(parent.interval);
        } else if prev_spine != Some(parent.interval) {
            return Err(ReduceError::InvalidChain(format!(
                "pendant {} does not hang one step below its predecessor",
                pendant.interval
            )));
        }
        let spine_child = idx.child(parent, side.other()).unwrap();
        prev_spine = Some(spine_child.interval);
        last_parent = Some(parent_id);
    }
    let last_parent = &idx.entries[last_parent.expect("chains are non-empty")];
    let last_side = *sides.last().unwrap();
    let bottom_entry = idx.child(last_parent, last_side.other()).unwrap();
    Ok(ChainSite {
        top: top.unwrap(),
        bottom: bottom_entry.tree.clone(),
        bottom_interval: bottom_entry.interval,
    })
}

/// New chain of three pendant leaves around `bottom`, hung per `sides`.
fn build_reduced_chain(sides: [ChildSide; 3], bottom: Tree) -> Tree {
    let mut t = bottom;
    for &side in sides.iter().rev() {
        t = match side {
            ChildSide::Left => Tree::node(Tree::Leaf, t),
            ChildSide::Right => Tree::node(t, Tree::Leaf),
        };
    }
    t
}

/// Replaces the whole chain by three pendant leaves in both trees. The
/// placeholders take the positions of the first, second, and last original
/// pendants; the pendants in between are removed along with their spine
/// nodes.
pub fn apply_chain_reduction(
    t1: &Tree,
    t2: &Tree,
    chain: &CommonChain,
) -> Result<(Tree, Tree, ReductionEvent), ReduceError> {
    check_sizes(t1, t2)?;
    let m = chain.len();
    if m < MIN_REDUCIBLE_CHAIN {
        return Err(ReduceError::ChainTooShort { m });
    }
    let idx1 = TreeIndex::build(t1);
    let idx2 = TreeIndex::build(t2);
    let site1 = locate_chain(&idx1, &chain.pendants, &chain.sides_t1)?;
    let site2 = locate_chain(&idx2, &chain.pendants, &chain.sides_t2)?;

    let kept1 = [chain.sides_t1[0], chain.sides_t1[1], chain.sides_t1[m - 1]];
    let kept2 = [chain.sides_t2[0], chain.sides_t2[1], chain.sides_t2[m - 1]];
    let out1 = splice(t1, 0, site1.top, &build_reduced_chain(kept1, site1.bottom.clone()));
    let out2 = splice(t2, 0, site2.top, &build_reduced_chain(kept2, site2.bottom.clone()));

    // New labels, computed on the first tree; detection guarantees the
    // chain occupies the same intervals in both trees.
    let region = site1.top;
    let bottom_width = site1.bottom.leaf_count();
    let new_region_width = 3 + bottom_width;
    let removed = region.width() - new_region_width;
    let mut lo = region.lo;
    let mut hi = region.lo + new_region_width - 1;
    let mut place = |side: ChildSide| -> usize {
        match side {
            ChildSide::Left => {
                lo += 1;
                lo - 1
            }
            ChildSide::Right => {
                hi -= 1;
                hi + 1
            }
        }
    };
    let a = place(kept1[0]);
    let b = place(kept1[1]);
    let c = place(kept1[2]);
    let new_bottom_lo = lo;

    let old_leaves = t1.leaf_count();
    let placeholder_of = |x: usize| -> Option<usize> {
        for (j, target) in [(0, a), (1, b), (m - 1, c)] {
            let iv = chain.pendants[j].interval;
            if iv.lo <= x && x <= iv.hi {
                return Some(target);
            }
        }
        None
    };
    let label_remap = (0..old_leaves)
        .map(|x| {
            if x < region.lo {
                Some(x)
            } else if x > region.hi {
                Some(x - removed)
            } else if site1.bottom_interval.lo <= x && x <= site1.bottom_interval.hi {
                Some(new_bottom_lo + (x - site1.bottom_interval.lo))
            } else {
                placeholder_of(x)
            }
        })
        .collect();

    let event = ReductionEvent {
        kind: ReductionKind::Chain,
        before_intervals: chain.pendants.iter().map(|p| p.interval).collect(),
        replacement: Replacement::PendantLeaves { a, b, c },
        label_remap,
    };
    let _ = kept2; // sides in tree 2 are applied above; labels agree by alignment
    Ok((out1, out2, event))
}

// ---------------------------------------------------------------------------
// Kernelization.

/// Applies subtree reductions to saturation, then chain reductions, looping
/// until neither applies; an identical pair finally collapses to the
/// single-leaf pair. Deterministic: within each pass the reduction with the
/// smallest leaf-interval start is applied first.
pub fn kernelize(t1: &Tree, t2: &Tree, mode: ChainMode) -> Result<KernelPair, ReduceError> {
    check_sizes(t1, t2)?;
    let mut cur1 = t1.clone();
    let mut cur2 = t2.clone();
    let mut events = Vec::new();
    loop {
        // Subtree reductions to saturation.
        loop {
            let found = find_common_subtrees(&cur1, &cur2)?;
            let Some(first) = found.first() else { break };
            let (n1, n2, event) = apply_subtree_reduction(&cur1, &cur2, first)?;
            cur1 = n1;
            cur2 = n2;
            events.push(event);
        }
        // One chain reduction, then re-saturate subtrees.
        let chains = find_common_chains(&cur1, &cur2, mode)?;
        let Some(first) = chains.first() else { break };
        let (n1, n2, event) = apply_chain_reduction(&cur1, &cur2, first)?;
        cur1 = n1;
        cur2 = n2;
        events.push(event);
    }
    // Endgame: a pair that became identical is at distance 0 and collapses
    // entirely.
    if cur1 == cur2 && !cur1.is_leaf() {
        let whole = LeafInterval::new(0, cur1.internal_count());
        let (n1, n2, mut event) = collapse_subtree(&cur1, &cur2, whole);
        event.replacement = Replacement::SingleLeaf { leaf: 0 };
        cur1 = n1;
        cur2 = n2;
        events.push(event);
    }
    Ok(KernelPair {
        t1: cur1,
        t2: cur2,
        events,
    })
}

/// Re-applies an event trail to the original pair. Produces exactly the
/// kernel pair the trail came from.
pub fn replay_events(
    t1: &Tree,
    t2: &Tree,
    events: &[ReductionEvent],
) -> Result<(Tree, Tree), ReduceError> {
    let mut cur1 = t1.clone();
    let mut cur2 = t2.clone();
    for event in events {
        match event.kind {
            ReductionKind::Subtree => {
                let interval = event.before_intervals[0];
                for t in [&cur1, &cur2] {
                    let idx = TreeIndex::build(t);
                    let entry = idx.get(interval).ok_or(ReduceError::NotCommon { interval })?;
                    if entry.tree.is_leaf() {
                        return Err(ReduceError::TooNarrow { interval });
                    }
                }
                let (n1, n2, _) = collapse_subtree(&cur1, &cur2, interval);
                cur1 = n1;
                cur2 = n2;
            }
            ReductionKind::Chain => {
                let chain = chain_from_intervals(&cur1, &cur2, &event.before_intervals)?;
                let (n1, n2, _) = apply_chain_reduction(&cur1, &cur2, &chain)?;
                cur1 = n1;
                cur2 = n2;
            }
        }
    }
    Ok((cur1, cur2))
}

/// Reconstructs a chain record from pendant intervals against a concrete
/// pair; shapes and sides are read back from the trees.
fn chain_from_intervals(
    t1: &Tree,
    t2: &Tree,
    intervals: &[LeafInterval],
) -> Result<CommonChain, ReduceError> {
    let idx1 = TreeIndex::build(t1);
    let idx2 = TreeIndex::build(t2);
    let mut pendants = Vec::new();
    let mut sides_t1 = Vec::new();
    let mut sides_t2 = Vec::new();
    for &interval in intervals {
        let e1 = idx1.get(interval).ok_or(ReduceError::NotCommon { interval })?;
        let e2 = idx2.get(interval).ok_or(ReduceError::NotCommon { interval })?;
        if e1.tree != e2.tree {
            return Err(ReduceError::NotCommon { interval });
        }
        let side1 = e1
            .parent
            .map(|(_, s)| s)
            .ok_or_else(|| ReduceError::InvalidChain("pendant is the whole tree".into()))?;
        let side2 = e2
            .parent
            .map(|(_, s)| s)
            .ok_or_else(|| ReduceError::InvalidChain("pendant is the whole tree".into()))?;
        pendants.push(CommonSubtree {
            interval,
            shape: e1.tree.clone(),
        });
        sides_t1.push(side1);
        sides_t2.push(side2);
    }
    Ok(CommonChain {
        pendants,
        sides_t1,
        sides_t2,
    })
}

/// Machine-readable kernelization report: one `key=value` per line.
pub fn kernel_report(t1: &Tree, t2: &Tree, kernel: &KernelPair) -> String {
    let mut out = String::new();
    out.push_str(&format!("input.t1={}\n", t1.encode()));
    out.push_str(&format!("input.t2={}\n", t2.encode()));
    out.push_str(&format!("leaves.before={}\n", t1.leaf_count()));
    out.push_str(&format!("events.count={}\n", kernel.events.len()));
    for (i, event) in kernel.events.iter().enumerate() {
        out.push_str(&format!("event.{i}.kind={}\n", event.kind));
        let intervals = event
            .before_intervals
            .iter()
            .map(|iv| iv.to_string())
            .collect::<Vec<_>>()
            .join(",");
        out.push_str(&format!("event.{i}.intervals={intervals}\n"));
        out.push_str(&format!("event.{i}.replacement={}\n", event.replacement));
    }
    out.push_str(&format!("output.t1={}\n", kernel.t1.encode()));
    out.push_str(&format!("output.t2={}\n", kernel.t2.encode()));
    out.push_str(&format!("leaves.after={}\n", kernel.leaf_count()));
    out
}
