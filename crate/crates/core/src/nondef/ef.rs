//! Exact solution of the r-move Ehrenfeucht-Fraïssé game on two ternary
//! structures.

use std::collections::HashMap;
use std::fmt;

use crate::graph::Vertex;
use crate::par::Exec;

use super::structure::{extends_partial_iso, TernaryStructure};
use super::NondefError;

/// Default cap on the estimated number of game states.
pub const DEFAULT_BUDGET: f64 = 1e8;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "TOLLWALK_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::A => "A",
            Side::B => "B",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Player {
    Spoiler,
    Duplicator,
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Spoiler => "Spoiler",
            Player::Duplicator => "Duplicator",
        })
    }
}

/// One round: Spoiler's element on `side`, Duplicator's reply on the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Move {
    pub side: Side,
    pub spoiler: Vertex,
    pub duplicator: Vertex,
}

impl Move {
    /// The round as an `(a, b)` pair.
    pub fn pair(&self) -> (Vertex, Vertex) {
        match self.side {
            Side::A => (self.spoiler, self.duplicator),
            Side::B => (self.duplicator, self.spoiler),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EFGameResult {
    pub rounds: usize,
    pub winner: Player,
    /// A principal line of play: the winner's choices are winning ones, the
    /// loser's are the first legal ones tried.
    pub trace: Vec<Move>,
    /// Positions with at least one round left that were evaluated.
    pub states: u64,
}

impl EFGameResult {
    pub fn trace_lines(&self) -> Vec<String> {
        self.trace
            .iter()
            .enumerate()
            .map(|(i, m)| format!("round {}: spoiler side={} v={}; duplicator v={}", i + 1, m.side, m.spoiler, m.duplicator))
            .collect()
    }
}

/// Reads the budget from `TOLLWALK_BUDGET`, falling back to the default.
pub fn configured_budget() -> Result<f64, NondefError> {
    match std::env::var(BUDGET_ENV) {
        Ok(s) => s
            .trim()
            .parse::<f64>()
            .ok()
            .filter(|b| *b > 0.0)
            .ok_or_else(|| NondefError::Contract(format!("{BUDGET_ENV}={s:?} is not a positive number"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

/// Upper estimate of the positions the search may visit: each round offers
/// `|A| + |B|` spoiler moves and at most `max(|A|,|B|)` replies.
pub fn estimated_states(a: usize, b: usize, rounds: usize) -> f64 {
    let branch = ((a + b) * a.max(b)) as f64;
    (0..=rounds).map(|k| branch.powi(k as i32)).sum()
}

pub fn ef_solve(a: &TernaryStructure, b: &TernaryStructure, rounds: usize) -> Result<EFGameResult, NondefError> {
    ef_solve_with(a, b, rounds, configured_budget()?, Exec::default())
}

/// Exact minimax. Positions are memoized on the chosen pairs sorted by their
/// `A` element, since a partial isomorphism does not depend on move order.
pub fn ef_solve_with(
    a: &TernaryStructure,
    b: &TernaryStructure,
    rounds: usize,
    budget: f64,
    exec: Exec,
) -> Result<EFGameResult, NondefError> {
    if rounds == 0 {
        return Err(NondefError::Contract("the game needs at least one round".into()));
    }
    if a.n() == 0 || b.n() == 0 {
        return Err(NondefError::Contract("structures must be non-empty".into()));
    }
    let est = estimated_states(a.n(), b.n(), rounds);
    if est > budget {
        return Err(NondefError::Budget { estimated: est, budget });
    }
    let first: Vec<(Side, Vertex)> = spoiler_moves(a, b);
    // Spoiler wins iff some first move beats every reply; each branch gets its
    // own memo so the result does not depend on scheduling.
    let branches = exec.map(&first, |&(side, v)| {
        let mut s = Solver { a, b, memo: HashMap::new(), states: 1 };
        let reply = s.winning_reply(&[], side, v, rounds - 1);
        (reply, s.states)
    });
    let states = branches.iter().map(|(_, s)| s).sum();
    let spoiler_first = first.iter().zip(&branches).find(|(_, (r, _))| r.is_none()).map(|(m, _)| *m);
    let mut s = Solver { a, b, memo: HashMap::new(), states: 0 };
    let winner = if spoiler_first.is_some() { Player::Spoiler } else { Player::Duplicator };
    let trace = s.principal_line(rounds, spoiler_first);
    Ok(EFGameResult { rounds, winner, trace, states })
}

fn spoiler_moves(a: &TernaryStructure, b: &TernaryStructure) -> Vec<(Side, Vertex)> {
    (0..a.n()).map(|v| (Side::A, v)).chain((0..b.n()).map(|v| (Side::B, v))).collect()
}

type Key = (Vec<(Vertex, Vertex)>, usize);

struct Solver<'s> {
    a: &'s TernaryStructure,
    b: &'s TernaryStructure,
    memo: HashMap<Key, bool>,
    states: u64,
}

impl Solver<'_> {
    fn extend(&self, pairs: &[(Vertex, Vertex)], side: Side, v: Vertex, w: Vertex) -> Option<Vec<(Vertex, Vertex)>> {
        let mut next = pairs.to_vec();
        next.push(match side {
            Side::A => (v, w),
            Side::B => (w, v),
        });
        extends_partial_iso(&next, self.a, self.b).then_some(next)
    }

    fn replies(&self, side: Side) -> usize {
        match side {
            Side::A => self.b.n(),
            Side::B => self.a.n(),
        }
    }

    /// First reply to `(side, v)` after which Duplicator survives `left` more
    /// rounds.
    fn winning_reply(&mut self, pairs: &[(Vertex, Vertex)], side: Side, v: Vertex, left: usize) -> Option<Vertex> {
        (0..self.replies(side)).find(|&w| match self.extend(pairs, side, v, w) {
            Some(next) => self.duplicator_wins(next, left),
            None => false,
        })
    }

    /// Whether Duplicator wins from a partial isomorphism with `left` rounds.
    fn duplicator_wins(&mut self, mut pairs: Vec<(Vertex, Vertex)>, left: usize) -> bool {
        if left == 0 {
            return true;
        }
        pairs.sort_unstable();
        let key = (pairs, left);
        if let Some(&r) = self.memo.get(&key) {
            return r;
        }
        self.states += 1;
        let pairs = &key.0;
        let mut win = true;
        for (side, v) in spoiler_moves(self.a, self.b) {
            if self.winning_reply(pairs, side, v, left - 1).is_none() {
                win = false;
                break;
            }
        }
        self.memo.insert(key, win);
        win
    }

    fn spoiler_winning_move(&mut self, pairs: &[(Vertex, Vertex)], left: usize) -> Option<(Side, Vertex)> {
        // fresh elements first, so the line does not waste rounds
        let chosen = |&(side, v): &(Side, Vertex)| {
            pairs.iter().any(|&(a, b)| match side {
                Side::A => a == v,
                Side::B => b == v,
            })
        };
        let mut moves = spoiler_moves(self.a, self.b);
        moves.sort_by_key(chosen);
        moves.into_iter().find(|&(side, v)| self.winning_reply(pairs, side, v, left - 1).is_none())
    }

    fn principal_line(&mut self, rounds: usize, first: Option<(Side, Vertex)>) -> Vec<Move> {
        let mut pairs = Vec::new();
        let mut trace = Vec::new();
        for left in (1..=rounds).rev() {
            let chosen = if left == rounds { first } else { self.spoiler_winning_move(&pairs, left) };
            let (side, v) = chosen.unwrap_or((Side::A, 0));
            let w = match self.winning_reply(&pairs, side, v, left - 1) {
                Some(w) => w,
                // every reply loses; prefer one that keeps the map a partial
                // isomorphism for now
                None => (0..self.replies(side)).find(|&w| self.extend(&pairs, side, v, w).is_some()).unwrap_or(0),
            };
            let m = Move { side, spoiler: v, duplicator: w };
            trace.push(m);
            pairs.push(m.pair());
            if !extends_partial_iso(&pairs, self.a, self.b) {
                break;
            }
        }
        trace
    }
}

/// Plays `trace` and reports whether the resulting map is a partial
/// isomorphism, i.e. whether Duplicator won that run.
pub fn replay(trace: &[Move], a: &TernaryStructure, b: &TernaryStructure) -> bool {
    let mut pairs = Vec::new();
    for m in trace {
        pairs.push(m.pair());
        if !extends_partial_iso(&pairs, a, b) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_by_name;
    use crate::nondef::structure::w_structure;

    fn w(name: &str) -> TernaryStructure {
        w_structure(&catalog_by_name(name).unwrap()).unwrap()
    }

    #[test]
    fn path_vs_edge() {
        let (p, k) = (w("path:3"), w("complete:2"));
        let r3 = ef_solve_with(&p, &k, 3, DEFAULT_BUDGET, Exec::Sequential).unwrap();
        assert_eq!(r3.winner, Player::Spoiler);
        assert!(!replay(&r3.trace, &p, &k));
        let r2 = ef_solve_with(&p, &k, 2, DEFAULT_BUDGET, Exec::Sequential).unwrap();
        assert_eq!(r2.winner, Player::Duplicator);
        assert!(replay(&r2.trace, &p, &k));
        assert_eq!(r2.trace.len(), 2);
    }

    #[test]
    fn adjacency_needs_three_moves() {
        // P3 vs K3: a non-edge is visible only through a third element
        let (p, k) = (w("path:3"), w("complete:3"));
        let rs: Vec<Player> = (1..=3).map(|r| ef_solve_with(&p, &k, r, DEFAULT_BUDGET, Exec::Parallel).unwrap().winner).collect();
        assert_eq!(rs, [Player::Duplicator, Player::Duplicator, Player::Spoiler]);
    }

    #[test]
    fn budget_refusal() {
        let c = w("cycle:8");
        let err = ef_solve_with(&c, &c, 5, 1e6, Exec::Sequential).unwrap_err();
        assert!(matches!(err, NondefError::Budget { .. }));
        assert!(err.to_string().contains("strategy"));
    }

    #[test]
    fn sequential_matches_parallel() {
        let (a, b) = (w("C5"), w("path:5"));
        for r in 1..=3 {
            let s = ef_solve_with(&a, &b, r, DEFAULT_BUDGET, Exec::Sequential).unwrap();
            let p = ef_solve_with(&a, &b, r, DEFAULT_BUDGET, Exec::Parallel).unwrap();
            assert_eq!((s.winner, &s.trace), (p.winner, &p.trace));
        }
    }
}
