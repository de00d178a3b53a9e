//! Exact rotation-distance computation.
//!
//! Two routes are provided and cross-checked against each other:
//!
//! * [`exact_distance`] — the brute-force oracle: breadth-first search over
//!   the rotation graph, feasible while the whole graph fits in memory.
//! * [`decide_within_k`] — the fixed-parameter pipeline: kernelize the pair,
//!   reject outright if the kernel keeps more than `7k` leaves, otherwise
//!   run a search that is complete up to depth `k` and return a replayable
//!   witness on a yes.
//!
//! The bounded search uses bidirectional breadth-first expansion meeting in
//! the middle. It visits no more states than exhaustive enumeration of all
//! rotation sequences of length `k` and returns shortest witnesses.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::reduce::{kernelize, ChainMode, KernelPair, ReduceError};
use crate::tree::{inverse_step, rotate, valid_steps, RotationError, RotationStep, Tree};

/// Default largest `n` the oracle will breadth-first search. Catalan(12) is
/// 208_012 states.
pub const DEFAULT_ORACLE_CAP: usize = 12;

/// An explicit rotation sequence anchored at a start tree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RotationPath {
    pub start: Tree,
    pub steps: Vec<RotationStep>,
}

impl RotationPath {
    pub fn empty(start: Tree) -> RotationPath {
        RotationPath {
            start,
            steps: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Applies every step in order, returning the final tree.
    pub fn replay(&self) -> Result<Tree, RotationError> {
        let mut cur = self.start.clone();
        for &step in &self.steps {
            cur = rotate(&cur, step)?;
        }
        Ok(cur)
    }
}

impl fmt::Display for RotationPath {
    /// One step per line: `"<node> R"` or `"<node> L"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            writeln!(f, "{step}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Answer {
    Yes,
    No,
}

/// Which step of the decision procedure produced the answer.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Gate {
    /// Rejected because the kernel keeps more than `7k` leaves.
    SizeGate,
    /// No transforming sequence of length at most `k` exists.
    SearchExhausted,
    /// A witness was found (or the pair was already identical).
    WitnessFound,
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::SizeGate => f.write_str("size-gate"),
            Gate::SearchExhausted => f.write_str("search-exhausted"),
            Gate::WitnessFound => f.write_str("witness-found"),
        }
    }
}

/// Outcome of [`decide_within_k`]. The witness, when present, is a path on
/// the kernel pair carried in `kernel`: it replays `kernel.t1` into
/// `kernel.t2`. The reduction events in `kernel` connect it back to the
/// original input pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decision {
    pub answer: Answer,
    pub gate: Gate,
    pub witness: Option<RotationPath>,
    pub kernel: KernelPair,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("trees have different leaf counts: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error(
        "n = {n} exceeds the oracle cap {cap}; use decide_within_k, which searches the kernel"
    )]
    OracleCapExceeded { n: usize, cap: usize },
    #[error(transparent)]
    Reduce(#[from] ReduceError),
}

fn check_sizes(t1: &Tree, t2: &Tree) -> Result<(), SearchError> {
    let (left, right) = (t1.leaf_count(), t2.leaf_count());
    if left != right {
        return Err(SearchError::SizeMismatch { left, right });
    }
    Ok(())
}

/// True rotation distance by breadth-first search over the rotation graph,
/// with the default state cap.
pub fn exact_distance(t1: &Tree, t2: &Tree) -> Result<usize, SearchError> {
    exact_distance_capped(t1, t2, DEFAULT_ORACLE_CAP)
}

/// True rotation distance, refusing instances whose rotation graph would
/// exceed `cap` interior nodes per tree.
pub fn exact_distance_capped(t1: &Tree, t2: &Tree, cap: usize) -> Result<usize, SearchError> {
    check_sizes(t1, t2)?;
    let n = t1.internal_count();
    if n > cap {
        return Err(SearchError::OracleCapExceeded { n, cap });
    }
    if t1 == t2 {
        return Ok(0);
    }
    let target = t2.encode().into_string();
    let mut seen: HashMap<String, usize> = HashMap::new();
    seen.insert(t1.encode().into_string(), 0);
    let mut frontier = vec![t1.clone()];
    let mut depth = 0usize;
    while !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for u in &frontier {
            for step in valid_steps(u) {
                let v = rotate(u, step).expect("step came from valid_steps");
                let enc = v.encode().into_string();
                if enc == target {
                    return Ok(depth);
                }
                if !seen.contains_key(&enc) {
                    seen.insert(enc, depth);
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    unreachable!("the rotation graph on a fixed leaf count is connected");
}

type ParentMap = HashMap<String, (usize, Option<(String, RotationStep)>)>;

/// A shortest transforming sequence of length at most `k`, if one exists.
///
/// Bidirectional breadth-first search; the smaller frontier is expanded one
/// full level at a time, and the first level producing a meeting point
/// yields a shortest path.
pub fn bounded_path_search(
    t1: &Tree,
    t2: &Tree,
    k: usize,
) -> Result<Option<RotationPath>, SearchError> {
    check_sizes(t1, t2)?;
    if t1 == t2 {
        return Ok(Some(RotationPath::empty(t1.clone())));
    }
    let start_enc = t1.encode().into_string();
    let target_enc = t2.encode().into_string();
    // Forward parents record the step applied to the parent to reach the
    // node; backward parents record the step that moves the node one level
    // closer to the target.
    let mut fwd: ParentMap = HashMap::from([(start_enc.clone(), (0, None))]);
    let mut bwd: ParentMap = HashMap::from([(target_enc.clone(), (0, None))]);
    let mut frontier_f: Vec<(Tree, String)> = vec![(t1.clone(), start_enc)];
    let mut frontier_b: Vec<(Tree, String)> = vec![(t2.clone(), target_enc)];
    let (mut df, mut db) = (0usize, 0usize);

    while df + db < k && !frontier_f.is_empty() && !frontier_b.is_empty() {
        let best = if frontier_f.len() <= frontier_b.len() {
            df += 1;
            expand_level(&mut frontier_f, &mut fwd, &bwd, df, false)
        } else {
            db += 1;
            expand_level(&mut frontier_b, &mut bwd, &fwd, db, true)
        };
        if let Some((total, meet)) = best {
            debug_assert!(total <= k);
            return Ok(Some(reconstruct(t1, &fwd, &bwd, &meet)));
        }
    }
    Ok(None)
}

/// Expands one full breadth-first level, recording parents in `this` and
/// reporting the best meeting point with `other`, if any. With `invert`
/// set (backward search), the recorded step is the one leading from the
/// new node back to its parent.
fn expand_level(
    frontier: &mut Vec<(Tree, String)>,
    this: &mut ParentMap,
    other: &ParentMap,
    depth: usize,
    invert: bool,
) -> Option<(usize, String)> {
    let mut next = Vec::new();
    let mut best: Option<(usize, String)> = None;
    for (u, u_enc) in frontier.iter() {
        for step in valid_steps(u) {
            let v = rotate(u, step).expect("step came from valid_steps");
            let v_enc = v.encode().into_string();
            if this.contains_key(&v_enc) {
                continue;
            }
            let recorded = if invert {
                inverse_step(u, step).expect("step came from valid_steps")
            } else {
                step
            };
            this.insert(v_enc.clone(), (depth, Some((u_enc.clone(), recorded))));
            if let Some(&(other_depth, _)) = other.get(&v_enc) {
                let total = depth + other_depth;
                if best.as_ref().map_or(true, |(t, _)| total < *t) {
                    best = Some((total, v_enc.clone()));
                }
            }
            next.push((v, v_enc));
        }
    }
    *frontier = next;
    best
}

fn reconstruct(start: &Tree, fwd: &ParentMap, bwd: &ParentMap, meet: &str) -> RotationPath {
    let mut forward_half = Vec::new();
    let mut cur = meet.to_string();
    while let (_, Some((parent, step))) = &fwd[&cur] {
        forward_half.push(*step);
        cur = parent.clone();
    }
    forward_half.reverse();
    let mut cur = meet.to_string();
    while let (_, Some((parent, step))) = &bwd[&cur] {
        forward_half.push(*step);
        cur = parent.clone();
    }
    RotationPath {
        start: start.clone(),
        steps: forward_half,
    }
}

/// The four-step decision procedure for "is the rotation distance at most
/// `k`": kernelize, apply the `7k` size gate, then search the kernel pair
/// to depth `k`. The search always runs on the kernel, never the originals.
pub fn decide_within_k(
    t1: &Tree,
    t2: &Tree,
    k: usize,
    mode: ChainMode,
) -> Result<Decision, SearchError> {
    check_sizes(t1, t2)?;
    let kernel = kernelize(t1, t2, mode)?;
    if kernel.t1 == kernel.t2 {
        // Identical pair: distance 0, which any k admits. Checked before
        // the size gate so that k = 0 answers yes.
        let witness = RotationPath::empty(kernel.t1.clone());
        return Ok(Decision {
            answer: Answer::Yes,
            gate: Gate::WitnessFound,
            witness: Some(witness),
            kernel,
        });
    }
    if kernel.leaf_count() > 7 * k {
        return Ok(Decision {
            answer: Answer::No,
            gate: Gate::SizeGate,
            witness: None,
            kernel,
        });
    }
    match bounded_path_search(&kernel.t1, &kernel.t2, k)? {
        Some(witness) => Ok(Decision {
            answer: Answer::Yes,
            gate: Gate::WitnessFound,
            witness: Some(witness),
            kernel,
        }),
        None => Ok(Decision {
            answer: Answer::No,
            gate: Gate::SearchExhausted,
            witness: None,
            kernel,
        }),
    }
}

/// Right-rotation sequence transforming `t` into the right comb, along with
/// every intermediate state. At each step the topmost right-spine node with
/// an interior left child is rotated right, which moves one node onto the
/// spine permanently; at most `n - 1` steps.
fn comb_normalization(t: &Tree) -> (Vec<RotationStep>, Vec<Tree>) {
    let mut steps = Vec::new();
    let mut states = vec![t.clone()];
    loop {
        let cur = states.last().unwrap();
        let mut base = 0usize;
        let mut probe = cur;
        let mut found = None;
        while let Tree::Node(l, r) = probe {
            let rank = base + l.internal_count() + 1;
            if !l.is_leaf() {
                found = Some(rank);
                break;
            }
            base = rank;
            probe = r;
        }
        let Some(rank) = found else { break };
        let step = RotationStep::right(rank);
        let next = rotate(cur, step).expect("spine node has an interior left child");
        steps.push(step);
        states.push(next);
    }
    (steps, states)
}

/// Upper bound on the distance via comb normalization: rotate `t1` down to
/// the right comb, then climb back up to `t2` by inverting `t2`'s own
/// normalization. The returned path replays from `t1` to `t2` and has at
/// most `2n - 2` steps.
pub fn comb_upper_bound(t1: &Tree, t2: &Tree) -> Result<(usize, RotationPath), SearchError> {
    check_sizes(t1, t2)?;
    let (down, _) = comb_normalization(t1);
    let (up, states) = comb_normalization(t2);
    let mut steps = down;
    for j in (0..up.len()).rev() {
        let inv = inverse_step(&states[j], up[j]).expect("normalization steps are valid");
        steps.push(inv);
    }
    let path = RotationPath {
        start: t1.clone(),
        steps,
    };
    debug_assert_eq!(path.replay().as_ref(), Ok(t2));
    Ok((path.len(), path))
}

/// On-disk memo of resolved distances, keyed by the sorted pair of tree
/// encodings. Plain text, one `"<enc1> <enc2> <distance>"` record per line.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MemoCache {
    entries: HashMap<(String, String), usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad cache record on line {line}: {content:?}")]
pub struct CacheParseError {
    pub line: usize,
    pub content: String,
}

impl MemoCache {
    pub fn new() -> MemoCache {
        MemoCache::default()
    }

    pub fn parse(text: &str) -> Result<MemoCache, CacheParseError> {
        let mut entries = HashMap::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let record = (|| {
                let a = parts.next()?;
                let b = parts.next()?;
                let d: usize = parts.next()?.parse().ok()?;
                if parts.next().is_some() {
                    return None;
                }
                Some(((a.to_string(), b.to_string()), d))
            })();
            let Some((key, d)) = record else {
                return Err(CacheParseError {
                    line: i + 1,
                    content: line.to_string(),
                });
            };
            entries.insert(key, d);
        }
        Ok(MemoCache { entries })
    }

    fn key(t1: &Tree, t2: &Tree) -> (String, String) {
        let a = t1.encode().into_string();
        let b = t2.encode().into_string();
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }

    pub fn get(&self, t1: &Tree, t2: &Tree) -> Option<usize> {
        self.entries.get(&MemoCache::key(t1, t2)).copied()
    }

    pub fn insert(&mut self, t1: &Tree, t2: &Tree, distance: usize) {
        self.entries.insert(MemoCache::key(t1, t2), distance);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Serialized records, sorted for stable output.
    pub fn to_text(&self) -> String {
        let mut lines: Vec<String> = self
            .entries
            .iter()
            .map(|((a, b), d)| format!("{a} {b} {d}"))
            .collect();
        lines.sort();
        let mut out = lines.join("\n");
        if !out.is_empty() {
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduce::ChainMode;
    use crate::tree::{enumerate_trees, left_comb, right_comb, Tree};

    fn t(s: &str) -> Tree {
        Tree::parse(s).unwrap()
    }

    #[test]
    fn distance_examples() {
        let a = t("11000");
        assert_eq!(exact_distance(&a, &a).unwrap(), 0);
        assert_eq!(exact_distance(&a, &t("10100")).unwrap(), 1);
        assert_eq!(
            exact_distance(&left_comb(3), &right_comb(3)).unwrap(),
            2,
            "two root rotations take the n=3 left comb to the right comb"
        );
    }

    #[test]
    fn distance_rejects_mismatched_or_oversized_input() {
        assert_eq!(
            exact_distance(&t("0"), &t("100")),
            Err(SearchError::SizeMismatch { left: 1, right: 2 })
        );
        let err = exact_distance_capped(&left_comb(3), &right_comb(3), 2).unwrap_err();
        assert_eq!(err, SearchError::OracleCapExceeded { n: 3, cap: 2 });
        assert!(err.to_string().contains("decide_within_k"));
    }

    #[test]
    fn oracle_is_a_metric_on_small_sizes() {
        for n in 1..=4 {
            let trees = enumerate_trees(n).unwrap();
            for a in &trees {
                for b in &trees {
                    let d = exact_distance(a, b).unwrap();
                    assert_eq!(d == 0, a == b);
                    assert_eq!(d, exact_distance(b, a).unwrap());
                    for c in &trees {
                        let via = exact_distance(a, c).unwrap() + exact_distance(c, b).unwrap();
                        assert!(d <= via, "triangle inequality at n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn bounded_search_finds_shortest_paths() {
        assert_eq!(
            bounded_path_search(&t("11000"), &t("11000"), 0).unwrap(),
            Some(RotationPath::empty(t("11000")))
        );
        let one = bounded_path_search(&t("11000"), &t("10100"), 1)
            .unwrap()
            .unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one.replay().unwrap(), t("10100"));
        for n in 1..=4 {
            let trees = enumerate_trees(n).unwrap();
            for a in &trees {
                for b in &trees {
                    let d = exact_distance(a, b).unwrap();
                    let path = bounded_path_search(a, b, 2 * n).unwrap().unwrap();
                    assert_eq!(path.len(), d, "{a} -> {b}");
                    assert_eq!(path.replay().unwrap(), *b);
                }
            }
        }
    }

    #[test]
    fn bounded_search_respects_the_budget() {
        assert_eq!(
            bounded_path_search(&left_comb(3), &right_comb(3), 1).unwrap(),
            None
        );
        assert!(bounded_path_search(&left_comb(3), &right_comb(3), 2)
            .unwrap()
            .is_some());
    }

    #[test]
    fn decide_identical_pair_at_k_zero() {
        let d = decide_within_k(&t("0"), &t("0"), 0, ChainMode::AnySide).unwrap();
        assert_eq!(d.answer, Answer::Yes);
        assert_eq!(d.gate, Gate::WitnessFound);
        assert!(d.witness.unwrap().is_empty());
    }

    #[test]
    fn decide_combs_against_their_distance() {
        let no = decide_within_k(&left_comb(3), &right_comb(3), 1, ChainMode::AnySide).unwrap();
        assert_eq!(no.answer, Answer::No);
        assert_eq!(no.gate, Gate::SearchExhausted);
        assert!(no.witness.is_none());

        let yes = decide_within_k(&left_comb(3), &right_comb(3), 2, ChainMode::AnySide).unwrap();
        assert_eq!(yes.answer, Answer::Yes);
        let witness = yes.witness.unwrap();
        assert_eq!(witness.len(), 2);
        assert_eq!(witness.start, yes.kernel.t1);
        assert_eq!(witness.replay().unwrap(), yes.kernel.t2);
    }

    #[test]
    fn decide_size_gate_fires_for_tiny_budgets() {
        let d = decide_within_k(&t("11000"), &t("10100"), 0, ChainMode::AnySide).unwrap();
        assert_eq!(d.answer, Answer::No);
        assert_eq!(d.gate, Gate::SizeGate, "3 leaves > 7*0");
    }

    #[test]
    fn comb_bound_sandwiches_the_oracle() {
        let (bound, path) = comb_upper_bound(&left_comb(3), &right_comb(3)).unwrap();
        assert_eq!(path.replay().unwrap(), right_comb(3));
        assert!(bound >= 2 && bound <= 4);

        for n in 1..=5 {
            let trees = enumerate_trees(n).unwrap();
            for a in &trees {
                for b in &trees {
                    let (bound, path) = comb_upper_bound(a, b).unwrap();
                    let d = exact_distance(a, b).unwrap();
                    assert!(d <= bound, "bound below oracle for {a} -> {b}");
                    assert!(bound <= 2 * n.max(1) - 2 || (n == 0 && bound == 0));
                    assert_eq!(path.replay().unwrap(), *b);
                }
            }
        }
    }

    #[test]
    fn comb_bound_on_identical_trees_replays_home() {
        let balanced = t("1100100");
        let (bound, path) = comb_upper_bound(&balanced, &balanced).unwrap();
        assert!(bound > 0, "comb bound is not tight on identical trees");
        assert_eq!(path.replay().unwrap(), balanced);
    }

    #[test]
    fn memo_cache_round_trips() {
        let mut cache = MemoCache::new();
        cache.insert(&t("11000"), &t("10100"), 1);
        cache.insert(&t("10100"), &t("11000"), 1); // same key
        assert_eq!(cache.len(), 1);
        assert_eq!(cache.get(&t("10100"), &t("11000")), Some(1));
        let text = cache.to_text();
        assert_eq!(text, "10100 11000 1\n");
        assert_eq!(MemoCache::parse(&text).unwrap(), cache);
        let err = MemoCache::parse("10100 11000\n").unwrap_err();
        assert_eq!(err.line, 1);
    }
}
