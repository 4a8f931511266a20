//! Exact burnability decisions.
//!
//! Both oracles work with the ball-cover formulation: a graph is
//! `m`-burnable iff its vertices are covered by balls of distinct radii
//! drawn from `0..m`.
//!
//! * [`forest_burnable_exact`] uses the fact that balls of radii `S` cover a
//!   path of order `L` iff `sum(2r + 1 for r in S) >= L`, so burnability of a
//!   path forest is an assignment of disjoint radius sets to paths.
//! * [`graph_burnable_exact`] searches covers of an arbitrary forest of
//!   trees. Every component is rooted; the search always takes the deepest
//!   uncovered vertex `u` and branches only on the radius `r` of the ball that
//!   covers it, centering that ball at the ancestor of `u` at distance `r`
//!   (or the root). On the still uncovered vertices that ball dominates every
//!   other radius-`r` ball containing `u`, so the search stays exact.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Instance, PathForest, Tree, VertexCoord};
use crate::schedule::{schedule_from_cover, Ball, BurningSchedule};

pub const DEFAULT_SEARCH_CAP: usize = 400;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest order the tree search accepts.
    pub cap: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            cap: DEFAULT_SEARCH_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    pub burnable: bool,
    /// Present iff `burnable`.
    pub witness: Option<BurningSchedule>,
    pub nodes_explored: u64,
}

impl OracleVerdict {
    fn no(nodes_explored: u64) -> Self {
        Self {
            burnable: false,
            witness: None,
            nodes_explored,
        }
    }
}

/// Fixed-width bit set keyed into the memo tables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64).max(1)])
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }
}

/// Exact decision for a path forest.
pub fn forest_burnable_exact(f: &PathForest, m: u32) -> OracleVerdict {
    let paths = f.paths();
    if paths.len() > m as usize {
        // each component needs a source of its own
        return OracleVerdict::no(0);
    }
    let mut search = ForestSearch {
        paths,
        m,
        used: Bits::new(m as usize),
        failed: HashSet::new(),
        assigned: vec![Vec::new(); paths.len()],
        nodes: 0,
    };
    if !search.assign(0) {
        return OracleVerdict::no(search.nodes);
    }

    let g = Graph::from_forest(f);
    let mut balls = Vec::new();
    for (j, radii) in search.assigned.iter().enumerate() {
        let len = paths[j];
        let mut start = 1u32;
        for &r in radii {
            if start > len {
                break;
            }
            let center = (start + r).min(len);
            balls.push(Ball::new(
                VertexCoord::Path {
                    path: j as u32 + 1,
                    pos: center,
                },
                r,
            ));
            start += 2 * r + 1;
        }
    }
    let witness = schedule_from_cover(&g, m, &balls).expect("forest assignment covers every path");
    OracleVerdict {
        burnable: true,
        witness: Some(witness),
        nodes_explored: search.nodes,
    }
}

struct ForestSearch<'a> {
    paths: &'a [u32],
    m: u32,
    used: Bits,
    failed: HashSet<(usize, Bits)>,
    /// Radii per path, descending.
    assigned: Vec<Vec<u32>>,
    nodes: u64,
}

impl ForestSearch<'_> {
    fn assign(&mut self, j: usize) -> bool {
        self.nodes += 1;
        if j == self.paths.len() {
            return true;
        }
        if self.failed.contains(&(j, self.used.clone())) {
            return false;
        }
        let (free_count, capacity) = (0..self.m)
            .filter(|&r| !self.used.get(r as usize))
            .fold((0usize, 0u64), |(c, s), r| {
                (c + 1, s + 2 * u64::from(r) + 1)
            });
        let demand: u64 = self.paths[j..].iter().map(|&l| u64::from(l)).sum();
        let feasible = free_count >= self.paths.len() - j && capacity >= demand;
        if feasible && self.extend(j, self.m, 0) {
            return true;
        }
        self.failed.insert((j, self.used.clone()));
        false
    }

    /// Grows the radius set of path `j` with radii below `below`, stopping as
    /// soon as the set covers the path (only minimal sets are tried).
    fn extend(&mut self, j: usize, below: u32, covered: u64) -> bool {
        for r in (0..below).rev() {
            if self.used.get(r as usize) {
                continue;
            }
            self.used.set(r as usize);
            self.assigned[j].push(r);
            let now = covered + 2 * u64::from(r) + 1;
            let ok = if now >= u64::from(self.paths[j]) {
                self.assign(j + 1)
            } else {
                self.extend(j, r, now)
            };
            if ok {
                return true;
            }
            self.assigned[j].pop();
            self.used.clear(r as usize);
        }
        false
    }
}

/// Exact decision for a tree.
pub fn tree_burnable_exact(t: &Tree, m: u32, cfg: &SearchConfig) -> Result<OracleVerdict> {
    graph_burnable_exact(&Graph::from_tree(t), m, cfg)
}

/// Exact decision for any acyclic graph (trees, spiders, and path forests
/// realised as graphs). The witness uses the graph's own coordinates.
pub fn graph_burnable_exact(g: &Graph, m: u32, cfg: &SearchConfig) -> Result<OracleVerdict> {
    if g.order() > cfg.cap {
        return Err(Error::SearchCapExceeded {
            order: g.order(),
            cap: cfg.cap,
        });
    }
    let mut search = CoverSearch::new(g, m);
    let mut covered = Bits::new(g.order());
    let mut used = Bits::new(m as usize);
    if !search.run(&mut covered, &mut used) {
        return Ok(OracleVerdict::no(search.nodes));
    }
    let balls: Vec<Ball> = search
        .placed
        .iter()
        .map(|&(v, r)| Ball::new(g.coord_of(v), r))
        .collect();
    let witness = schedule_from_cover(g, m, &balls)?;
    Ok(OracleVerdict {
        burnable: true,
        witness: Some(witness),
        nodes_explored: search.nodes,
    })
}

struct CoverSearch<'a> {
    g: &'a Graph,
    m: u32,
    parent: Vec<usize>,
    component: Vec<usize>,
    components: usize,
    /// Vertices by decreasing depth, ties by id.
    deepest_first: Vec<usize>,
    /// Ball sizes are bounded by `2r + 1` when no vertex has degree > 2.
    path_like: bool,
    failed: HashSet<(Bits, Bits)>,
    placed: Vec<(usize, u32)>,
    nodes: u64,
}

impl<'a> CoverSearch<'a> {
    fn new(g: &'a Graph, m: u32) -> Self {
        let n = g.order();
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0u32; n];
        let mut component = vec![usize::MAX; n];
        let mut components = 0;
        for root in 0..n {
            if component[root] != usize::MAX {
                continue;
            }
            parent[root] = root;
            component[root] = components;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in g.neighbors(v) {
                    let w = w as usize;
                    if component[w] == usize::MAX {
                        component[w] = components;
                        parent[w] = v;
                        depth[w] = depth[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
            components += 1;
        }
        let mut deepest_first: Vec<usize> = (0..n).collect();
        deepest_first.sort_by_key(|&v| (std::cmp::Reverse(depth[v]), v));
        let path_like = (0..n).all(|v| g.neighbors(v).len() <= 2);
        Self {
            g,
            m,
            parent,
            component,
            components,
            deepest_first,
            path_like,
            failed: HashSet::new(),
            placed: Vec::new(),
            nodes: 0,
        }
    }

    fn run(&mut self, covered: &mut Bits, used: &mut Bits) -> bool {
        self.nodes += 1;
        let Some(&u) = self.deepest_first.iter().find(|&&v| !covered.get(v)) else {
            return true;
        };
        let free: Vec<u32> = (0..self.m)
            .rev()
            .filter(|&r| !used.get(r as usize))
            .collect();

        let mut open = vec![false; self.components];
        let mut uncovered = 0u64;
        for v in 0..self.g.order() {
            if !covered.get(v) {
                open[self.component[v]] = true;
                uncovered += 1;
            }
        }
        if open.iter().filter(|&&o| o).count() > free.len() {
            return false;
        }
        if self.path_like {
            let capacity: u64 = free.iter().map(|&r| 2 * u64::from(r) + 1).sum();
            if capacity < uncovered {
                return false;
            }
        }
        let key = (used.clone(), covered.clone());
        if self.failed.contains(&key) {
            return false;
        }

        for r in free {
            let mut center = u;
            for _ in 0..r {
                if self.parent[center] == center {
                    break;
                }
                center = self.parent[center];
            }
            let mut next = covered.clone();
            for v in self.g.ball(center, r) {
                next.set(v);
            }
            used.set(r as usize);
            self.placed.push((center, r));
            if self.run(&mut next, used) {
                return true;
            }
            self.placed.pop();
            used.clear(r as usize);
        }
        self.failed.insert(key);
        false
    }
}

/// Exact decision for any instance: forests go to the radius-assignment
/// oracle, everything else to the cover search.
pub fn burnable_exact(inst: &Instance, m: u32, cfg: &SearchConfig) -> Result<OracleVerdict> {
    match inst {
        Instance::Forest(f) => Ok(forest_burnable_exact(f, m)),
        Instance::Spider(s) => graph_burnable_exact(&Graph::from_spider(s), m, cfg),
        Instance::Tree(t) => tree_burnable_exact(t, m, cfg),
    }
}

/// Smallest `m` for which the instance is `m`-burnable.
///
/// Candidates are tried upward from `m = 1`; no closed-form lower bound is
/// assumed, so every smaller horizon is refuted by the oracle itself.
pub fn burning_number_exact(inst: &Instance, cfg: &SearchConfig) -> Result<u32> {
    if !matches!(inst, Instance::Forest(_)) && inst.order() > cfg.cap {
        return Err(Error::SearchCapExceeded {
            order: inst.order(),
            cap: cfg.cap,
        });
    }
    let mut m = 1;
    loop {
        if burnable_exact(inst, m, cfg)?.burnable {
            return Ok(m);
        }
        m += 1;
    }
}
