//! Burning schedules, the round-by-round simulator, and normalisation of a
//! ball cover into a legal schedule.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexCoord};

/// Source placements `s_1, ..., s_k` (source `i` ignites at round `i`) with a
/// horizon of `m` rounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSchedule")]
pub struct BurningSchedule {
    m: u32,
    sources: Vec<VertexCoord>,
}

#[derive(Deserialize)]
struct RawSchedule {
    m: u32,
    sources: Vec<VertexCoord>,
}

impl TryFrom<RawSchedule> for BurningSchedule {
    type Error = Error;

    fn try_from(raw: RawSchedule) -> Result<Self> {
        Self::new(raw.m, raw.sources)
    }
}

impl BurningSchedule {
    pub fn new(m: u32, sources: Vec<VertexCoord>) -> Result<Self> {
        if sources.is_empty() {
            return Err(Error::InvalidSchedule("no sources".into()));
        }
        if sources.len() > m as usize {
            return Err(Error::InvalidSchedule(format!(
                "{} sources do not fit a horizon of {m} rounds",
                sources.len()
            )));
        }
        let distinct: BTreeSet<_> = sources.iter().collect();
        if distinct.len() != sources.len() {
            return Err(Error::InvalidSchedule("duplicate source vertex".into()));
        }
        Ok(Self { m, sources })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn sources(&self) -> &[VertexCoord] {
        &self.sources
    }

    pub fn len(&self) -> usize {
        self.sources.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sources.is_empty()
    }
}

/// Outcome of simulating a schedule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BurnRecord {
    /// Burn round per vertex id, `None` if the vertex never burns.
    pub burned_at: Vec<Option<u32>>,
    /// Round by which every vertex is burned, `None` if some never burn.
    pub completed_round: Option<u32>,
    /// Rounds whose source landed on an already burned vertex.
    pub illegal_rounds: Vec<u32>,
    /// Every placement legal and the process completed within the horizon.
    pub valid: bool,
}

impl BurnRecord {
    pub fn burn_round(&self, graph: &Graph, c: &VertexCoord) -> Result<Option<u32>> {
        Ok(self.burned_at[graph.id_of(c)?])
    }
}

/// Runs the burning process.
///
/// At the start of round `i` source `s_i` ignites if it is still unburned;
/// at the end of round `t` every unburned neighbour of a vertex burned by
/// round `t - 1` catches fire. The process runs until no fire can spread.
pub fn simulate(graph: &Graph, schedule: &BurningSchedule) -> Result<BurnRecord> {
    let ids = schedule
        .sources()
        .iter()
        .map(|c| graph.id_of(c))
        .collect::<Result<Vec<_>>>()?;
    let adj = graph.adjacency();
    let mut burned_at: Vec<Option<u32>> = vec![None; graph.order()];
    let mut illegal_rounds = Vec::new();
    let mut frontier: Vec<usize> = Vec::new();
    let mut round = 0u32;
    loop {
        round += 1;
        let mut next = Vec::new();
        if let Some(&s) = ids.get(round as usize - 1) {
            if burned_at[s].is_none() {
                burned_at[s] = Some(round);
                next.push(s);
            } else {
                illegal_rounds.push(round);
            }
        }
        for &v in &frontier {
            for &w in &adj[v] {
                let w = w as usize;
                if burned_at[w].is_none() {
                    burned_at[w] = Some(round);
                    next.push(w);
                }
            }
        }
        frontier = next;
        if round as usize >= ids.len() && frontier.is_empty() {
            break;
        }
    }
    let completed_round = burned_at
        .iter()
        .try_fold(0u32, |acc, r| r.map(|r| acc.max(r)));
    let valid = illegal_rounds.is_empty() && completed_round.is_some_and(|c| c <= schedule.m());
    Ok(BurnRecord {
        burned_at,
        completed_round,
        illegal_rounds,
        valid,
    })
}

/// A closed ball: every vertex within `radius` of `center`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ball {
    pub center: VertexCoord,
    pub radius: u32,
}

impl Ball {
    pub fn new(center: VertexCoord, radius: u32) -> Self {
        Self { center, radius }
    }
}

/// Ids of vertices not covered by `balls`.
pub fn uncovered_by(graph: &Graph, balls: &[Ball]) -> Result<Vec<usize>> {
    let mut covered = vec![false; graph.order()];
    for b in balls {
        for v in graph.ball(graph.id_of(&b.center)?, b.radius) {
            covered[v] = true;
        }
    }
    Ok((0..graph.order()).filter(|&v| !covered[v]).collect())
}

/// Turns a cover by balls of distinct radii below `m` into a schedule.
///
/// Balls are placed in order of decreasing radius, one per round. A ball
/// whose center already burns by the time its round starts is replaced by
/// the lowest-id unburned vertex; once nothing is left unburned the
/// remaining balls are dropped.
pub fn schedule_from_cover(graph: &Graph, m: u32, balls: &[Ball]) -> Result<BurningSchedule> {
    let mut radii = BTreeSet::new();
    for b in balls {
        if b.radius >= m {
            return Err(Error::InvalidCover(format!(
                "radius {} not below the horizon {m}",
                b.radius
            )));
        }
        if !radii.insert(b.radius) {
            return Err(Error::InvalidCover(format!(
                "radius {} used twice",
                b.radius
            )));
        }
    }
    let uncovered = uncovered_by(graph, balls)?;
    if !uncovered.is_empty() {
        return Err(Error::IncompleteCover {
            uncovered: uncovered.len(),
        });
    }

    let mut ordered: Vec<&Ball> = balls.iter().collect();
    ordered.sort_by_key(|b| std::cmp::Reverse(b.radius));

    // Earliest burn round per vertex under the sources placed so far.
    let mut fire = vec![u32::MAX; graph.order()];
    let mut sources = Vec::new();
    for ball in ordered {
        let round = sources.len() as u32 + 1;
        let mut at = graph.id_of(&ball.center)?;
        if fire[at] < round {
            match (0..graph.order()).find(|&v| fire[v] >= round) {
                Some(v) => at = v,
                None => break,
            }
        }
        for (v, d) in graph.distances(at).into_iter().enumerate() {
            if let Some(d) = d {
                fire[v] = fire[v].min(round + d);
            }
        }
        sources.push(graph.coord_of(at));
    }
    BurningSchedule::new(m, sources)
}
