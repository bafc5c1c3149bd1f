//! The distance-preserving Duplicator on `G_d` versus `G'_d`.
//!
//! Both gadgets are a ladder of `4d` positions (a `u` and a `v` vertex each)
//! plus `x`. Duplicator keeps the layer, sends `x` to `x'`, and plays on
//! positions: on `G_d` they form one `4d`-cycle, on `G'_d` two `2d`-cycles.
//! Positions 1 and `2d+1`, where `x` attaches, are pebbled before the game
//! starts and map to themselves. After round `i` of `n`, any two pebbled
//! positions at cycle distance at most `2^(n-i)` on one side have the same
//! signed offset on the other, and positions farther apart stay farther apart.
//! Graph distances in both gadgets are built from these cycle distances and
//! the two anchors, so the graph-level conditions follow.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{DistanceMatrix, Graph, Vertex};
use crate::par::Exec;

use super::ef::Side;
use super::gadgets::{build_g_d, build_g_d_prime, GadgetIds, Layer};
use super::structure::{extends_partial_iso, scant_structure, w_structure, TernaryStructure};
use super::NondefError;

/// Positions `1..=4d` as one cycle (`split == false`) or as the two cycles
/// `1..=2d` and `2d+1..=4d`.
#[derive(Debug, Clone, Copy)]
struct Ring {
    d: usize,
    split: bool,
}

impl Ring {
    fn block(self, p: usize) -> (usize, usize) {
        if self.split {
            if p <= 2 * self.d {
                (1, 2 * self.d)
            } else {
                (2 * self.d + 1, 2 * self.d)
            }
        } else {
            (1, 4 * self.d)
        }
    }

    /// Steps forward from `p` to `q`, if they share a cycle.
    fn fwd(self, p: usize, q: usize) -> Option<usize> {
        let (start, len) = self.block(p);
        (self.block(q).0 == start).then(|| (q + len - p) % len)
    }

    fn dist(self, p: usize, q: usize) -> Option<usize> {
        let (_, len) = self.block(p);
        self.fwd(p, q).map(|f| f.min(len - f))
    }

    fn shift(self, p: usize, k: isize) -> usize {
        let (start, len) = self.block(p);
        let off = (p - start) as isize + k;
        start + off.rem_euclid(len as isize) as usize
    }

    fn positions(self) -> std::ops::RangeInclusive<usize> {
        1..=4 * self.d
    }
}

fn far(ring: Ring, p: usize, q: usize, t: usize) -> bool {
    ring.dist(p, q).is_none_or(|x| x > t)
}

/// Reply on `to` for a new position `a` on `from`, given pebbled position
/// pairs `(from, to)` and threshold `t`. Ties prefer the backward neighbour,
/// then the least position id.
fn reply_position(from: Ring, to: Ring, pebbles: &[(usize, usize)], a: usize, t: usize) -> Option<usize> {
    if let Some(&(_, b)) = pebbles.iter().find(|(p, _)| *p == a) {
        return Some(b);
    }
    let back = pebbles.iter().filter_map(|&(p, b)| from.fwd(p, a).map(|f| (f, p, b))).min();
    let ahead = pebbles.iter().filter_map(|&(p, b)| from.fwd(a, p).map(|f| (f, p, b))).min();
    if let Some((alpha, _, b)) = back {
        if alpha <= t {
            return Some(to.shift(b, alpha as isize));
        }
    }
    if let Some((beta, _, b)) = ahead {
        if beta <= t {
            return Some(to.shift(b, -(beta as isize)));
        }
    }
    to.positions().find(|&q| pebbles.iter().all(|&(_, b)| far(to, q, b, t)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundReport {
    pub round: usize,
    pub side: Side,
    pub spoiler: Vertex,
    /// `None` when no qualifying reply existed.
    pub duplicator: Option<Vertex>,
    /// Conditions (1) and (2) over all rounds so far.
    pub conditions: bool,
    /// Partial isomorphism between `W(G_d)` and the scant structure on `G'_d`.
    pub partial_iso: bool,
    /// Partial isomorphism between `W(G_d)` and `W(G'_d)`.
    pub w_iso: bool,
}

impl RoundReport {
    pub fn ok(&self) -> bool {
        self.duplicator.is_some() && self.conditions && self.partial_iso
    }

    pub fn line(&self) -> String {
        let flag = |b: bool| if b { "ok" } else { "FAIL" };
        let dup = self.duplicator.map_or_else(|| "none".to_string(), |v| v.to_string());
        format!(
            "round {}: spoiler side={} v={}; duplicator v={}; partial-iso={}; conditions={}; w-iso={}",
            self.round,
            self.side,
            self.spoiler,
            dup,
            flag(self.partial_iso),
            flag(self.conditions),
            flag(self.w_iso)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrategyRun {
    pub rounds: Vec<RoundReport>,
}

impl StrategyRun {
    pub fn duplicator_won(&self) -> bool {
        self.rounds.iter().all(RoundReport::ok)
    }

    /// The final map is also a partial isomorphism of the two W-structures.
    pub fn w_iso(&self) -> bool {
        self.rounds.last().is_none_or(|r| r.w_iso)
    }

    pub fn trace_lines(&self) -> Vec<String> {
        self.rounds.iter().map(RoundReport::line).collect()
    }
}

/// Where Spoiler's moves come from.
#[derive(Debug, Clone, Copy)]
pub enum SpoilerSource<'a> {
    Scripted(&'a [(Side, Vertex)]),
    /// Uniform side and element per round, from the ChaCha stream `run`.
    Random { seed: u64, run: u64 },
}

/// Everything fixed for a given `d`: both gadgets, their distances and the
/// three structures.
pub struct GadgetGame {
    pub d: usize,
    pub g: Graph,
    pub g_prime: Graph,
    dist: DistanceMatrix,
    dist_prime: DistanceMatrix,
    pub w: TernaryStructure,
    pub w_prime: TernaryStructure,
    pub scant_prime: TernaryStructure,
}

impl GadgetGame {
    pub fn new(d: usize) -> Result<Self, NondefError> {
        let g = build_g_d(d)?;
        let g_prime = build_g_d_prime(d)?;
        Ok(GadgetGame {
            d,
            dist: g.distances(),
            dist_prime: g_prime.distances(),
            w: w_structure(&g)?,
            w_prime: w_structure(&g_prime)?,
            scant_prime: scant_structure(&g_prime)?,
            g,
            g_prime,
        })
    }

    fn ids(&self) -> GadgetIds {
        GadgetIds::new(self.d)
    }

    /// Lemma precondition `d > 2^(n+1)`.
    pub fn check_rounds(&self, n: usize) -> Result<(), NondefError> {
        if n == 0 || n >= 8 || self.d <= 1 << (n + 1) {
            return Err(NondefError::Precondition(format!(
                "the strategy needs n >= 1 and d > 2^(n+1); got d={} n={n}",
                self.d
            )));
        }
        Ok(())
    }

    fn vertex(&self, layer: Layer, pos: usize) -> Vertex {
        let ids = self.ids();
        match layer {
            Layer::U => ids.u(pos),
            Layer::V => ids.v(pos),
            Layer::X => ids.x(),
        }
    }

    /// Conditions (1) and (2) for threshold `t` over the played pairs.
    fn conditions_hold(&self, pairs: &[(Vertex, Vertex)], t: usize) -> bool {
        pairs.iter().all(|&(aj, bj)| {
            pairs.iter().all(|&(al, bl)| {
                let da = self.dist.get(aj, al).expect("G_d is connected");
                let db = self.dist_prime.get(bj, bl).expect("G'_d is connected");
                if da <= t {
                    db == da
                } else {
                    db > t
                }
            })
        })
    }

    pub fn play(&self, n: usize, source: SpoilerSource<'_>) -> Result<StrategyRun, NondefError> {
        self.check_rounds(n)?;
        let ids = self.ids();
        let ring_a = Ring { d: self.d, split: false };
        let ring_b = Ring { d: self.d, split: true };
        let mut rng = match source {
            SpoilerSource::Scripted(script) => {
                if script.len() != n {
                    return Err(NondefError::Contract(format!("script has {} moves, game has {n}", script.len())));
                }
                None
            }
            SpoilerSource::Random { seed, run } => {
                let mut r = ChaCha8Rng::seed_from_u64(seed);
                r.set_stream(run);
                Some(r)
            }
        };
        let size = ids.n();
        let mut pebbles = vec![(1, 1), (2 * self.d + 1, 2 * self.d + 1)];
        let mut pairs: Vec<(Vertex, Vertex)> = Vec::new();
        let mut rounds = Vec::new();
        let (mut iso, mut w_iso) = (true, true);
        for i in 1..=n {
            let (side, v) = match (&mut rng, source) {
                (Some(r), _) => (if r.gen_bool(0.5) { Side::A } else { Side::B }, r.gen_range(0..size)),
                (None, SpoilerSource::Scripted(script)) => script[i - 1],
                (None, _) => unreachable!(),
            };
            if v >= size {
                return Err(NondefError::Contract(format!("vertex {v} out of range for d={}", self.d)));
            }
            let t = 1usize << (n - i);
            let layer = ids.layer(v);
            let reply = if layer == Layer::X {
                Some(ids.x())
            } else {
                let p = ids.index(v);
                let (from, to, peb): (Ring, Ring, Vec<(usize, usize)>) = match side {
                    Side::A => (ring_a, ring_b, pebbles.clone()),
                    Side::B => (ring_b, ring_a, pebbles.iter().map(|&(a, b)| (b, a)).collect()),
                };
                reply_position(from, to, &peb, p, t).map(|q| {
                    let pair = match side {
                        Side::A => (p, q),
                        Side::B => (q, p),
                    };
                    if !pebbles.contains(&pair) {
                        pebbles.push(pair);
                    }
                    self.vertex(layer, q)
                })
            };
            let report = match reply {
                None => RoundReport { round: i, side, spoiler: v, duplicator: None, conditions: false, partial_iso: false, w_iso: false },
                Some(w) => {
                    pairs.push(match side {
                        Side::A => (v, w),
                        Side::B => (w, v),
                    });
                    iso = iso && extends_partial_iso(&pairs, &self.w, &self.scant_prime);
                    w_iso = w_iso && extends_partial_iso(&pairs, &self.w, &self.w_prime);
                    RoundReport {
                        round: i,
                        side,
                        spoiler: v,
                        duplicator: Some(w),
                        conditions: self.conditions_hold(&pairs, t),
                        partial_iso: iso,
                        w_iso,
                    }
                }
            };
            let stop = report.duplicator.is_none();
            rounds.push(report);
            if stop {
                break;
            }
        }
        Ok(StrategyRun { rounds })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoakReport {
    pub d: usize,
    pub rounds: usize,
    pub runs: u64,
    pub seed: u64,
    pub duplicator_wins: u64,
    /// Runs whose final map is also a partial isomorphism of `W(G_d)` and `W(G'_d)`.
    pub w_iso_runs: u64,
    /// Traces of the first few lost runs.
    pub losses: Vec<(u64, Vec<String>)>,
}

/// Plays `runs` random Spoiler scripts against the strategy.
pub fn strategy_soak(d: usize, n: usize, runs: u64, seed: u64, exec: Exec) -> Result<SoakReport, NondefError> {
    let game = GadgetGame::new(d)?;
    game.check_rounds(n)?;
    let idx: Vec<u64> = (0..runs).collect();
    let results = exec.map(&idx, |&run| game.play(n, SpoilerSource::Random { seed, run }));
    let mut rep = SoakReport { d, rounds: n, runs, seed, duplicator_wins: 0, w_iso_runs: 0, losses: Vec::new() };
    for (run, r) in idx.into_iter().zip(results) {
        let r = r?;
        if r.duplicator_won() {
            rep.duplicator_wins += 1;
        } else if rep.losses.len() < 10 {
            rep.losses.push((run, r.trace_lines()));
        }
        if r.w_iso() {
            rep.w_iso_runs += 1;
        }
    }
    Ok(rep)
}

/// Plays every possible first Spoiler move of a one-round game.
pub fn all_single_moves(game: &GadgetGame) -> Result<Vec<StrategyRun>, NondefError> {
    let size = game.g.n();
    [Side::A, Side::B]
        .into_iter()
        .flat_map(|s| (0..size).map(move |v| (s, v)))
        .map(|m| game.play(1, SpoilerSource::Scripted(&[m])))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rings() {
        let a = Ring { d: 3, split: false };
        let b = Ring { d: 3, split: true };
        assert_eq!(a.dist(1, 12), Some(1));
        assert_eq!(b.dist(1, 6), Some(1));
        assert_eq!(b.dist(6, 7), None);
        assert_eq!(b.shift(7, -1), 12);
        assert_eq!(a.shift(12, 2), 2);
        assert_eq!(b.fwd(12, 7), Some(1));
    }

    #[test]
    fn precondition() {
        let g = GadgetGame::new(8).unwrap();
        assert!(g.check_rounds(2).is_err());
        assert!(g.check_rounds(1).is_ok());
        assert!(matches!(g.play(2, SpoilerSource::Random { seed: 0, run: 0 }), Err(NondefError::Precondition(_))));
    }

    #[test]
    fn x_goes_to_x_prime() {
        let g = GadgetGame::new(9).unwrap();
        let x = GadgetIds::new(9).x();
        let run = g.play(2, SpoilerSource::Scripted(&[(Side::A, x), (Side::B, 3)])).unwrap();
        assert_eq!(run.rounds[0].duplicator, Some(x));
        assert!(run.duplicator_won(), "{:?}", run.trace_lines());
    }

    #[test]
    fn mirrored_positions() {
        // v_{2d} is one step behind the anchor 2d+1 on G_d; on G'_d the step
        // behind 2d+1 is 4d
        let d = 9;
        let ids = GadgetIds::new(d);
        let g = GadgetGame::new(d).unwrap();
        let run = g.play(2, SpoilerSource::Scripted(&[(Side::A, ids.v(2 * d)), (Side::A, ids.u(2 * d))])).unwrap();
        assert_eq!(run.rounds[0].duplicator, Some(ids.v(4 * d)));
        assert_eq!(run.rounds[1].duplicator, Some(ids.u(4 * d)));
        assert!(run.duplicator_won());
    }
}
