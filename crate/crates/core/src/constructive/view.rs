use crate::graph::{PathForest, Spider, VertexCoord};
use crate::schedule::Ball;

use super::ExceptionalFamily;

/// Why a proof step did not produce a cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Stop {
    Exceptional(ExceptionalFamily),
    Unmet(String),
    Unreachable(String),
}

impl Stop {
    /// A nested call is only made once its hypothesis has been established,
    /// so anything but a cover coming back from it is a transcription bug.
    pub(crate) fn nested(self, ctx: &str) -> Stop {
        match self {
            Stop::Exceptional(f) => {
                Stop::Unreachable(format!("{ctx}: unexpected exceptional family {f:?}"))
            }
            Stop::Unmet(reason) => Stop::Unreachable(format!("{ctx}: {reason}")),
            Stop::Unreachable(trace) => Stop::Unreachable(format!("{ctx} > {trace}")),
        }
    }
}

pub(crate) type Cover = Vec<Ball>;
pub(crate) type Step = Result<Cover, Stop>;

pub(crate) fn unmet<T>(reason: impl Into<String>) -> Result<T, Stop> {
    Err(Stop::Unmet(reason.into()))
}

pub(crate) fn unreachable<T>(trace: impl Into<String>) -> Result<T, Stop> {
    Err(Stop::Unreachable(trace.into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Line {
    Arm(u32),
    Path(u32),
}

/// Consecutive vertices `first..first + len` of an arm or path of the
/// original structure, addressed locally by positions `1..=len`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Segment {
    line: Line,
    first: u32,
    pub(crate) len: u32,
}

impl Segment {
    pub(crate) fn whole_path(path: u32, len: u32) -> Self {
        Self {
            line: Line::Path(path),
            first: 1,
            len,
        }
    }

    pub(crate) fn at(&self, q: u32) -> VertexCoord {
        debug_assert!((1..=self.len).contains(&q));
        let pos = self.first + q - 1;
        match self.line {
            Line::Arm(arm) => VertexCoord::Arm { arm, pos },
            Line::Path(path) => VertexCoord::Path { path, pos },
        }
    }

    /// Local positions `from..from + len`.
    pub(crate) fn sub(&self, from: u32, len: u32) -> Segment {
        debug_assert!(from >= 1 && from + len - 1 <= self.len);
        Segment {
            line: self.line,
            first: self.first + from - 1,
            len,
        }
    }

    /// Local positions `from..=len`, if any.
    pub(crate) fn from(&self, from: u32) -> Option<Segment> {
        (from <= self.len).then(|| self.sub(from, self.len - from + 1))
    }

    /// The first `len` positions.
    pub(crate) fn prefix(&self, len: u32) -> Segment {
        self.sub(1, len)
    }
}

/// A path forest whose paths are segments of the original structure,
/// sorted by non-increasing length (stable).
#[derive(Clone, Debug)]
pub(crate) struct ForestView {
    paths: Vec<Segment>,
}

impl ForestView {
    pub(crate) fn new(mut paths: Vec<Segment>) -> Self {
        paths.retain(|s| s.len > 0);
        paths.sort_by_key(|p| std::cmp::Reverse(p.len));
        Self { paths }
    }

    pub(crate) fn from_forest(f: &PathForest) -> Self {
        Self::new(
            f.paths()
                .iter()
                .enumerate()
                .map(|(j, &len)| Segment::whole_path(j as u32 + 1, len))
                .collect(),
        )
    }

    pub(crate) fn lens(&self) -> Vec<u32> {
        self.paths.iter().map(|s| s.len).collect()
    }

    pub(crate) fn order(&self) -> u64 {
        self.paths.iter().map(|s| u64::from(s.len)).sum()
    }

    /// 1-based.
    pub(crate) fn path(&self, i: usize) -> Segment {
        self.paths[i - 1]
    }

    pub(crate) fn without_first(&self) -> ForestView {
        ForestView::new(self.paths[1..].to_vec())
    }

    /// Replaces path `i` (1-based) by `seg`.
    pub(crate) fn with_path(&self, i: usize, seg: Segment) -> ForestView {
        let mut paths = self.paths.clone();
        paths[i - 1] = seg;
        ForestView::new(paths)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct ArmRef {
    arm: u32,
    len: u32,
}

/// A spider whose arms are prefixes of arms of the original spider, sorted
/// by non-increasing length (stable). The head is the original head.
#[derive(Clone, Debug)]
pub(crate) struct SpiderView {
    arms: Vec<ArmRef>,
}

impl SpiderView {
    fn new(mut arms: Vec<ArmRef>) -> Self {
        arms.retain(|a| a.len > 0);
        arms.sort_by_key(|a| std::cmp::Reverse(a.len));
        Self { arms }
    }

    pub(crate) fn from_spider(s: &Spider) -> Self {
        Self::new(
            s.arms()
                .iter()
                .enumerate()
                .map(|(a, &len)| ArmRef {
                    arm: a as u32 + 1,
                    len,
                })
                .collect(),
        )
    }

    /// Arm lengths, longest first.
    pub(crate) fn lens(&self) -> Vec<u32> {
        self.arms.iter().map(|a| a.len).collect()
    }

    pub(crate) fn order(&self) -> u64 {
        1 + self.arms.iter().map(|a| u64::from(a.len)).sum::<u64>()
    }

    /// The whole arm `i` (1-based) as a segment counted from the head.
    pub(crate) fn arm(&self, i: usize) -> Segment {
        let a = self.arms[i - 1];
        Segment {
            line: Line::Arm(a.arm),
            first: 1,
            len: a.len,
        }
    }

    /// Vertex at position `p` of arm `i`, with position 0 meaning the head.
    pub(crate) fn at(&self, i: usize, p: u32) -> VertexCoord {
        if p == 0 {
            VertexCoord::Head
        } else {
            self.arm(i).at(p)
        }
    }

    /// Positions `from..` of arm `i`, if nonempty.
    pub(crate) fn arm_from(&self, i: usize, from: u32) -> Option<Segment> {
        self.arm(i).from(from)
    }

    pub(crate) fn with_arm_len(&self, i: usize, len: u32) -> SpiderView {
        let mut arms = self.arms.clone();
        arms[i - 1].len = len;
        SpiderView::new(arms)
    }

    pub(crate) fn without_arm(&self, i: usize) -> SpiderView {
        let mut arms = self.arms.clone();
        arms.remove(i - 1);
        SpiderView::new(arms)
    }

    pub(crate) fn first_arms(&self, k: usize) -> SpiderView {
        SpiderView::new(self.arms[..k].to_vec())
    }
}

/// One ball covering all of `seg`, centered at its center (the lower one
/// for even lengths).
pub(crate) fn center_ball(seg: Segment, radius: u32) -> Result<Ball, Stop> {
    if u64::from(seg.len) > 2 * u64::from(radius) + 1 {
        return unreachable(format!(
            "segment of {} vertices exceeds one ball of radius {radius}",
            seg.len
        ));
    }
    Ok(Ball::new(seg.at(seg.len.div_ceil(2)), radius))
}

/// Ball of the given radius centered so that it covers exactly the last
/// `2 * radius + 1` vertices of `seg`.
pub(crate) fn tail_ball(seg: Segment, radius: u32) -> Ball {
    debug_assert!(seg.len > 2 * radius);
    Ball::new(seg.at(seg.len - radius), radius)
}

/// Lays balls of the given radii side by side from the low end of `seg`.
pub(crate) fn lay(seg: Segment, radii: &[u32]) -> Step {
    let mut balls = Vec::new();
    let mut start = 1u64;
    for &r in radii {
        if start > u64::from(seg.len) {
            break;
        }
        let center = (start + u64::from(r)).min(u64::from(seg.len)) as u32;
        balls.push(Ball::new(seg.at(center), r));
        start += 2 * u64::from(r) + 1;
    }
    if start <= u64::from(seg.len) {
        return unreachable(format!(
            "radii {radii:?} cannot cover a segment of {} vertices",
            seg.len
        ));
    }
    Ok(balls)
}

/// A single path burned in `rounds` rounds (it has at most `rounds^2`
/// vertices).
pub(crate) fn burn_path(seg: Segment, rounds: u32) -> Step {
    let radii: Vec<u32> = (0..rounds).rev().collect();
    lay(seg, &radii)
}
