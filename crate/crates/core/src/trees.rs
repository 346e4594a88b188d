//! Stable `n`-pointed trees (dual graphs of nodal genus-zero curves), their
//! central vertex and the contraction to collision classes of markings.
//!
//! Labels run over `1..=n`; vertices are `0..vertex_count`.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::Error;

/// A tree with labelled markings, not yet known to be stable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledTree {
    #[serde(rename = "vertices")]
    vertex_count: usize,
    edges: Vec<[usize; 2]>,
    marking: BTreeMap<usize, usize>,
}

impl LabeledTree {
    pub fn new(
        vertex_count: usize,
        edges: Vec<[usize; 2]>,
        marking: BTreeMap<usize, usize>,
    ) -> Result<Self, Error> {
        let tree = Self {
            vertex_count,
            edges,
            marking,
        };
        tree.validate()?;
        Ok(tree)
    }

    /// Markings given as `labels[v]`, the labels on vertex `v`.
    pub fn from_label_sets(edges: Vec<[usize; 2]>, labels: &[Vec<usize>]) -> Result<Self, Error> {
        let marking = labels
            .iter()
            .enumerate()
            .flat_map(|(v, ls)| ls.iter().map(move |&l| (l, v)))
            .collect();
        Self::new(labels.len(), edges, marking)
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        let tree: Self = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        tree.validate()?;
        Ok(tree)
    }

    fn validate(&self) -> Result<(), Error> {
        let v = self.vertex_count;
        if v == 0 {
            return Err(Error::MalformedTree("a tree has at least one vertex".into()));
        }
        for &[a, b] in &self.edges {
            if a >= v || b >= v || a == b {
                return Err(Error::MalformedTree(format!("bad edge [{a},{b}] on {v} vertices")));
            }
        }
        if self.edges.len() != v - 1 {
            return Err(Error::MalformedTree(format!(
                "{} edges on {v} vertices: not a tree",
                self.edges.len()
            )));
        }
        let reached = self.component(0, None);
        if reached.len() != v {
            let missing = (0..v).find(|x| !reached.contains(x)).expect("unreached vertex");
            return Err(Error::MalformedTree(format!("vertex {missing} is disconnected")));
        }
        let n = self.marking.len();
        for (i, (&label, &vertex)) in self.marking.iter().enumerate() {
            if label != i + 1 {
                return Err(Error::MalformedTree(format!("labels must be 1..={n}, missing {}", i + 1)));
            }
            if vertex >= v {
                return Err(Error::MalformedTree(format!("label {label} on missing vertex {vertex}")));
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn marking(&self) -> &BTreeMap<usize, usize> {
        &self.marking
    }

    /// Number of markings.
    pub fn n(&self) -> usize {
        self.marking.len()
    }

    pub fn labels_at(&self, v: usize) -> Vec<usize> {
        self.marking
            .iter()
            .filter(|&(_, &w)| w == v)
            .map(|(&l, _)| l)
            .collect()
    }

    pub fn weight(&self, v: usize) -> usize {
        self.marking.values().filter(|&&w| w == v).count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&[a, b]| match (a == v, b == v) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    /// Vertices reachable from `start` without crossing into `blocked`.
    fn component(&self, start: usize, blocked: Option<usize>) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if Some(w) != blocked && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Labels on the subtree hanging off `v` through its neighbour `w`.
    pub fn branch_labels(&self, v: usize, w: usize) -> Vec<usize> {
        let side = self.component(w, Some(v));
        self.marking
            .iter()
            .filter(|(_, x)| side.contains(x))
            .map(|(&l, _)| l)
            .collect()
    }

    /// First vertex with `weight + degree < 3`.
    pub fn unstable_vertex(&self) -> Option<usize> {
        (0..self.vertex_count).find(|&v| self.weight(v) + self.degree(v) < 3)
    }

    pub fn is_stable(&self) -> bool {
        self.unstable_vertex().is_none()
    }

    /// The bipartitions of the labels cut out by the edges, each as the side
    /// not containing label 1. Determines a stable tree up to isomorphism.
    pub fn splits(&self) -> BTreeSet<Vec<usize>> {
        self.edges
            .iter()
            .map(|&[a, b]| {
                let side = self.branch_labels(a, b);
                if side.contains(&1) {
                    (1..=self.n()).filter(|l| !side.contains(l)).collect()
                } else {
                    side
                }
            })
            .collect()
    }
}

/// A tree whose every vertex has `weight + degree >= 3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct StableTree(LabeledTree);

impl StableTree {
    pub fn new(tree: LabeledTree) -> Result<Self, Error> {
        match tree.unstable_vertex() {
            None => Ok(Self(tree)),
            Some(v) => Err(Error::MalformedTree(format!(
                "vertex {v} is unstable: weight {} + degree {} < 3",
                tree.weight(v),
                tree.degree(v)
            ))),
        }
    }

    pub fn tree(&self) -> &LabeledTree {
        &self.0
    }
}

impl std::ops::Deref for StableTree {
    type Target = LabeledTree;

    fn deref(&self) -> &LabeledTree {
        &self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ContractionResult {
    /// Collision classes sorted by smallest label.
    Central { vertex: usize, classes: Vec<Vec<usize>> },
    /// Two halves of `n/2` labels; the first contains label 1.
    NoCentral { halves: [Vec<usize>; 2] },
}

impl ContractionResult {
    /// Sizes of the groups of coinciding markings after contraction.
    pub fn class_sizes(&self) -> Vec<usize> {
        match self {
            Self::Central { classes, .. } => classes.iter().map(Vec::len).collect(),
            Self::NoCentral { halves } => halves.iter().map(Vec::len).collect(),
        }
    }
}

/// Vertices all of whose complementary subtrees carry fewer than `n/2`
/// labels.
pub fn central_candidates(t: &LabeledTree) -> Vec<usize> {
    let n = t.n();
    (0..t.vertex_count())
        .filter(|&v| {
            t.neighbors(v)
                .into_iter()
                .all(|w| 2 * t.branch_labels(v, w).len() < n)
        })
        .collect()
}

/// The central vertex if there is one; otherwise the balanced split.
pub fn central_vertex(t: &StableTree) -> Result<usize, [Vec<usize>; 2]> {
    if let Some(&v) = central_candidates(t).first() {
        return Ok(v);
    }
    let n = t.n();
    for &[a, b] in t.edges() {
        let side = t.branch_labels(a, b);
        if 2 * side.len() == n {
            let other: Vec<usize> = (1..=n).filter(|l| !side.contains(l)).collect();
            return Err(if side.contains(&1) { [side, other] } else { [other, side] });
        }
    }
    unreachable!("a stable tree without central vertex has a balanced edge")
}

/// Collapses every branch at the central vertex to one point.
pub fn contract(t: &StableTree) -> ContractionResult {
    match central_vertex(t) {
        Ok(v) => {
            let mut classes: Vec<Vec<usize>> = t.labels_at(v).into_iter().map(|l| vec![l]).collect();
            classes.extend(t.neighbors(v).into_iter().map(|w| t.branch_labels(v, w)));
            classes.sort_by_key(|c| c[0]);
            ContractionResult::Central { vertex: v, classes }
        }
        Err(halves) => ContractionResult::NoCentral { halves },
    }
}

/// Two-vertex stable trees: one per unordered split `{S, S^c}` with both
/// sides of size at least 2. Vertex 0 carries the side containing label 1.
pub fn enumerate_two_vertex(n: usize) -> Vec<StableTree> {
    let mut out = Vec::new();
    for size in 1..=n.saturating_sub(3) {
        for rest in (2..=n).combinations(size) {
            let mut first = vec![1];
            first.extend(rest);
            let second: Vec<usize> = (1..=n).filter(|l| !first.contains(l)).collect();
            let tree = LabeledTree::from_label_sets(vec![[0, 1]], &[first, second]).expect("valid tree");
            out.push(StableTree::new(tree).expect("both sides have two labels"));
        }
    }
    out
}

/// Unlabelled trees on `k <= 4` vertices.
fn shapes(k: usize) -> Vec<Vec<[usize; 2]>> {
    match k {
        1 => vec![vec![]],
        2 => vec![vec![[0, 1]]],
        3 => vec![vec![[0, 1], [1, 2]]],
        4 => vec![vec![[0, 1], [1, 2], [2, 3]], vec![[0, 1], [0, 2], [0, 3]]],
        _ => panic!("tree shapes are tabulated up to four vertices"),
    }
}

/// Stable trees with exactly `k <= 4` vertices, one per isomorphism class
/// (label-preserving), in a deterministic order.
pub fn enumerate_trees(n: usize, k: usize) -> Result<Vec<StableTree>, Error> {
    if !(1..=4).contains(&k) {
        return Err(Error::InvalidArgument(format!("vertex count {k} outside 1..=4")));
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for edges in shapes(k) {
        for assignment in (0..n).map(|_| 0..k).multi_cartesian_product() {
            let marking = assignment.iter().enumerate().map(|(i, &v)| (i + 1, v)).collect();
            let tree = LabeledTree::new(k, edges.clone(), marking)?;
            if !tree.is_stable() {
                continue;
            }
            if seen.insert(tree.splits()) {
                out.push(StableTree::new(tree)?);
            }
        }
    }
    Ok(out)
}
