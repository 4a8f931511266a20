//! Spiders, path forests and trees, plus the [`Graph`] realisation every
//! algorithm in the crate runs on.
//!
//! Vertices are addressed by [`VertexCoord`]s. Arm and path indices refer to
//! the canonical (non-increasing) ordering of the structure, so a schedule
//! written against `Spider::new(vec![1, 3, 2])` uses arm 1 for the arm of
//! length 3.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An `n`-spider given by its arm lengths (head excluded).
///
/// Two arms give the degenerate "path as a 2-spider" form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Spider {
    arms: Vec<u32>,
}

impl Spider {
    /// Builds a spider, sorting the arms into canonical non-increasing order.
    pub fn new(mut arms: Vec<u32>) -> Result<Self> {
        if arms.len() < 2 {
            return Err(Error::InvalidSpider(format!(
                "need at least two arms, got {}",
                arms.len()
            )));
        }
        if arms.contains(&0) {
            return Err(Error::InvalidSpider("arm lengths must be positive".into()));
        }
        arms.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { arms })
    }

    pub fn arms(&self) -> &[u32] {
        &self.arms
    }

    pub fn arm_count(&self) -> usize {
        self.arms.len()
    }

    pub fn order(&self) -> u64 {
        1 + self.arms.iter().map(|&l| u64::from(l)).sum::<u64>()
    }

    pub fn shortest_arm(&self) -> u32 {
        *self.arms.last().expect("spider has arms")
    }
}

impl TryFrom<Vec<u32>> for Spider {
    type Error = Error;

    fn try_from(arms: Vec<u32>) -> Result<Self> {
        Self::new(arms)
    }
}

impl From<Spider> for Vec<u32> {
    fn from(s: Spider) -> Self {
        s.arms
    }
}

/// A disjoint union of paths given by their orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct PathForest {
    paths: Vec<u32>,
}

impl PathForest {
    /// Builds a path forest, sorting the path orders non-increasingly.
    pub fn new(mut paths: Vec<u32>) -> Result<Self> {
        if paths.is_empty() {
            return Err(Error::InvalidForest("need at least one path".into()));
        }
        if paths.contains(&0) {
            return Err(Error::InvalidForest("path orders must be positive".into()));
        }
        paths.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { paths })
    }

    /// A single path of `order` vertices.
    pub fn path(order: u32) -> Result<Self> {
        Self::new(vec![order])
    }

    pub fn paths(&self) -> &[u32] {
        &self.paths
    }

    pub fn path_count(&self) -> usize {
        self.paths.len()
    }

    pub fn order(&self) -> u64 {
        self.paths.iter().map(|&l| u64::from(l)).sum()
    }

    pub fn smallest(&self) -> u32 {
        *self.paths.last().expect("forest has paths")
    }
}

impl TryFrom<Vec<u32>> for PathForest {
    type Error = Error;

    fn try_from(paths: Vec<u32>) -> Result<Self> {
        Self::new(paths)
    }
}

impl From<PathForest> for Vec<u32> {
    fn from(f: PathForest) -> Self {
        f.paths
    }
}

/// Location of a vertex inside a spider, a path forest or a plain tree.
///
/// Arm and path indices as well as positions are 1-based. Arm positions count
/// away from the head; path positions count from the low end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "CoordRepr", into = "CoordRepr")]
pub enum VertexCoord {
    Head,
    Arm { arm: u32, pos: u32 },
    Path { path: u32, pos: u32 },
    Id(u32),
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoordRepr {
    Word(String),
    Arm { arm: u32, pos: u32 },
    Path { path: u32, pos: u32 },
    Id { id: u32 },
}

impl TryFrom<CoordRepr> for VertexCoord {
    type Error = Error;

    fn try_from(repr: CoordRepr) -> Result<Self> {
        match repr {
            CoordRepr::Word(w) if w == "head" => Ok(VertexCoord::Head),
            CoordRepr::Word(w) => Err(Error::Parse(format!("unknown coordinate keyword {w:?}"))),
            CoordRepr::Arm { arm, pos } => Ok(VertexCoord::Arm { arm, pos }),
            CoordRepr::Path { path, pos } => Ok(VertexCoord::Path { path, pos }),
            CoordRepr::Id { id } => Ok(VertexCoord::Id(id)),
        }
    }
}

impl From<VertexCoord> for CoordRepr {
    fn from(c: VertexCoord) -> Self {
        match c {
            VertexCoord::Head => CoordRepr::Word("head".into()),
            VertexCoord::Arm { arm, pos } => CoordRepr::Arm { arm, pos },
            VertexCoord::Path { path, pos } => CoordRepr::Path { path, pos },
            VertexCoord::Id(id) => CoordRepr::Id { id },
        }
    }
}

impl fmt::Display for VertexCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexCoord::Head => write!(f, "head"),
            VertexCoord::Arm { arm, pos } => write!(f, "arm{arm}:{pos}"),
            VertexCoord::Path { path, pos } => write!(f, "path{path}:{pos}"),
            VertexCoord::Id(id) => write!(f, "#{id}"),
        }
    }
}

/// An unlabelled tree on vertex ids `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tree {
    adj: Vec<Vec<u32>>,
}

impl Tree {
    /// Builds a tree from an edge list, rejecting anything that is not
    /// connected and acyclic.
    pub fn from_edges(order: usize, edges: &[(u32, u32)]) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidTree(
                "a tree needs at least one vertex".into(),
            ));
        }
        if edges.len() != order - 1 {
            return Err(Error::InvalidTree(format!(
                "{} edges given, a tree of order {order} has {}",
                edges.len(),
                order - 1
            )));
        }
        let mut adj = vec![Vec::new(); order];
        for &(u, v) in edges {
            if u as usize >= order || v as usize >= order {
                return Err(Error::InvalidTree(format!("edge ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(Error::InvalidTree(format!("self-loop at {u}")));
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        // n - 1 edges plus connectivity rules out cycles and multi-edges.
        let reached = bfs_distances(&adj, 0)
            .iter()
            .filter(|d| d.is_some())
            .count();
        if reached != order {
            return Err(Error::InvalidTree("edge list is not connected".into()));
        }
        Ok(Self { adj })
    }

    /// The path `0 - 1 - ... - (order - 1)`.
    pub fn path(order: usize) -> Result<Self> {
        let edges: Vec<(u32, u32)> = (1..order as u32).map(|v| (v - 1, v)).collect();
        Self::from_edges(order, &edges)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.order().saturating_sub(1));
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if (u as u32) < v {
                    out.push((u as u32, v));
                }
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn leaf_count(&self) -> usize {
        if self.order() == 1 {
            return 0;
        }
        self.adj.iter().filter(|l| l.len() == 1).count()
    }

    /// Number of edges on a longest path.
    pub fn diameter(&self) -> u32 {
        let first = bfs_distances(&self.adj, 0);
        let (far, _) = farthest(&first);
        let second = bfs_distances(&self.adj, far);
        farthest(&second).1
    }

    /// Parses the text format: the order on the first line, then one
    /// `u v` edge per line with 0-based ids.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty tree file".into()))?;
        let order: usize = header
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex count {header:?}")))?;
        let mut edges = Vec::new();
        for line in lines {
            let mut it = line.split_whitespace();
            let (Some(u), Some(v), None) = (it.next(), it.next(), it.next()) else {
                return Err(Error::Parse(format!("bad edge line {line:?}")));
            };
            let u = u
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex id {u:?}")))?;
            let v = v
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex id {v:?}")))?;
            edges.push((u, v));
        }
        Self::from_edges(order, &edges)
    }

    /// Inverse of [`Tree::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.order());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Any structure the toolkit can burn.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Tree(Tree),
    Spider(Spider),
    Forest(PathForest),
}

impl Instance {
    pub fn order(&self) -> usize {
        match self {
            Instance::Tree(t) => t.order(),
            Instance::Spider(s) => s.order() as usize,
            Instance::Forest(f) => f.order() as usize,
        }
    }

    pub fn graph(&self) -> Graph {
        match self {
            Instance::Tree(t) => Graph::from_tree(t),
            Instance::Spider(s) => Graph::from_spider(s),
            Instance::Forest(f) => Graph::from_forest(f),
        }
    }
}

impl From<Tree> for Instance {
    fn from(t: Tree) -> Self {
        Instance::Tree(t)
    }
}

impl From<Spider> for Instance {
    fn from(s: Spider) -> Self {
        Instance::Spider(s)
    }
}

impl From<PathForest> for Instance {
    fn from(f: PathForest) -> Self {
        Instance::Forest(f)
    }
}

#[derive(Clone, Debug)]
enum Layout {
    Tree,
    Spider { lens: Vec<u32>, offsets: Vec<u32> },
    Forest { lens: Vec<u32>, offsets: Vec<u32> },
}

/// Adjacency-list realisation of a structure together with its coordinate
/// system. Vertex ids follow the canonical coordinate order: the head first,
/// then arm 1 outward, arm 2 outward, and so on (paths likewise).
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    layout: Layout,
}

impl Graph {
    pub fn from_tree(t: &Tree) -> Self {
        Self {
            adj: t.adj.clone(),
            layout: Layout::Tree,
        }
    }

    pub fn from_spider(s: &Spider) -> Self {
        let order = s.order() as usize;
        let mut adj = vec![Vec::new(); order];
        let mut offsets = Vec::with_capacity(s.arm_count());
        let mut next = 1u32;
        for &len in s.arms() {
            offsets.push(next);
            let mut prev = 0u32;
            for id in next..next + len {
                adj[prev as usize].push(id);
                adj[id as usize].push(prev);
                prev = id;
            }
            next += len;
        }
        Self {
            adj,
            layout: Layout::Spider {
                lens: s.arms().to_vec(),
                offsets,
            },
        }
    }

    pub fn from_forest(f: &PathForest) -> Self {
        let order = f.order() as usize;
        let mut adj = vec![Vec::new(); order];
        let mut offsets = Vec::with_capacity(f.path_count());
        let mut next = 0u32;
        for &len in f.paths() {
            offsets.push(next);
            for id in next + 1..next + len {
                adj[id as usize - 1].push(id);
                adj[id as usize].push(id - 1);
            }
            next += len;
        }
        Self {
            adj,
            layout: Layout::Forest {
                lens: f.paths().to_vec(),
                offsets,
            },
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub(crate) fn adjacency(&self) -> &[Vec<u32>] {
        &self.adj
    }

    /// Resolves a coordinate to a vertex id.
    pub fn id_of(&self, c: &VertexCoord) -> Result<usize> {
        let out_of_range = || Error::CoordinateOutOfRange(*c);
        match (&self.layout, *c) {
            (Layout::Tree, VertexCoord::Id(id)) if (id as usize) < self.order() => Ok(id as usize),
            (Layout::Spider { .. }, VertexCoord::Head) => Ok(0),
            (Layout::Spider { lens, offsets }, VertexCoord::Arm { arm, pos })
            | (Layout::Forest { lens, offsets }, VertexCoord::Path { path: arm, pos }) => {
                let a = (arm as usize).checked_sub(1).ok_or_else(out_of_range)?;
                let len = *lens.get(a).ok_or_else(out_of_range)?;
                if pos == 0 || pos > len {
                    return Err(out_of_range());
                }
                Ok((offsets[a] + pos - 1) as usize)
            }
            _ => Err(out_of_range()),
        }
    }

    /// Coordinate of a vertex id.
    pub fn coord_of(&self, id: usize) -> VertexCoord {
        assert!(id < self.order(), "vertex id {id} out of range");
        match &self.layout {
            Layout::Tree => VertexCoord::Id(id as u32),
            Layout::Spider { offsets, .. } => {
                if id == 0 {
                    return VertexCoord::Head;
                }
                let a = offsets.partition_point(|&o| o as usize <= id) - 1;
                VertexCoord::Arm {
                    arm: a as u32 + 1,
                    pos: id as u32 - offsets[a] + 1,
                }
            }
            Layout::Forest { offsets, .. } => {
                let j = offsets.partition_point(|&o| o as usize <= id) - 1;
                VertexCoord::Path {
                    path: j as u32 + 1,
                    pos: id as u32 - offsets[j] + 1,
                }
            }
        }
    }

    /// Id of the spider head, if this graph is a spider.
    pub fn head(&self) -> Option<usize> {
        matches!(self.layout, Layout::Spider { .. }).then_some(0)
    }

    /// Unweighted distances from `src`; `None` for other components.
    pub fn distances(&self, src: usize) -> Vec<Option<u32>> {
        bfs_distances(&self.adj, src)
    }

    /// Every vertex within distance `radius` of `center`.
    pub fn ball(&self, center: usize, radius: u32) -> Vec<usize> {
        let mut dist = vec![u32::MAX; self.order()];
        let mut out = vec![center];
        dist[center] = 0;
        let mut i = 0;
        while i < out.len() {
            let v = out[i];
            i += 1;
            if dist[v] == radius {
                continue;
            }
            for &w in &self.adj[v] {
                let w = w as usize;
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    out.push(w);
                }
            }
        }
        out
    }

    pub fn to_tree(&self) -> Result<Tree> {
        let mut edges = Vec::new();
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if (u as u32) < v {
                    edges.push((u as u32, v));
                }
            }
        }
        Tree::from_edges(self.order(), &edges)
    }
}

/// Realises a spider as a plain tree; the map sends every coordinate to its
/// vertex id in the returned tree.
pub fn spider_to_tree(s: &Spider) -> (Tree, BTreeMap<VertexCoord, usize>) {
    let g = Graph::from_spider(s);
    let tree = g.to_tree().expect("a spider is a tree");
    let map = (0..g.order()).map(|id| (g.coord_of(id), id)).collect();
    (tree, map)
}

pub(crate) fn bfs_distances(adj: &[Vec<u32>], src: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; adj.len()];
    let mut queue = VecDeque::from([src]);
    dist[src] = Some(0);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        for &w in &adj[v] {
            let w = w as usize;
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

fn farthest(dist: &[Option<u32>]) -> (usize, u32) {
    dist.iter()
        .enumerate()
        .filter_map(|(v, d)| d.map(|d| (v, d)))
        .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
        .unwrap_or((0, 0))
}
