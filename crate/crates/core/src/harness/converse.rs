//! Random probing of the converse direction of the characterizations:
//! a transit function satisfying the axiom list must be the toll function of
//! its underlying graph, and that graph must lie in the class.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::axioms::check_axiom;
use crate::bitset::VertexSet;
use crate::classes::classify;
use crate::par::Exec;
use crate::tollwalk::toll_transit;
use crate::transit::TransitFunction;

use super::theorems::TheoremId;
use super::HarnessError;

const PROBABILITIES: [f64; 5] = [0.1, 0.2, 0.3, 0.4, 0.5];

/// Kept verbatim in reports; later ones are only counted.
const MAX_RECORDED: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProbeOutcome {
    /// The axiom list fails; the theorem says nothing. Carries the violation.
    AxiomsFail(String),
    /// Axioms hold but `G_R` is disconnected, so `T` on `G_R` is undefined.
    Disconnected,
    /// Axioms hold, `G_R` is in the class and `R = T`.
    Confirmed,
    /// Axioms hold and the conclusion fails.
    Falsified(String),
}

/// Checks one transit function against a characterization.
pub fn probe_transit(id: TheoremId, r: &TransitFunction) -> Result<ProbeOutcome, HarnessError> {
    let (axioms, class) = id.characterization().ok_or(HarnessError::NotCharacterization(id))?;
    for &a in axioms {
        let v = check_axiom(r, a);
        if !v.satisfied() {
            return Ok(ProbeOutcome::AxiomsFail(v.to_string()));
        }
    }
    let g = r.underlying_graph();
    if !g.is_connected() {
        return Ok(ProbeOutcome::Disconnected);
    }
    let report = classify(&g, class)?;
    if let Some(c) = report.certificate {
        return Ok(ProbeOutcome::Falsified(format!("G_R is not {class}: {c}")));
    }
    let t = toll_transit(&g)?;
    for a in 0..r.n() {
        for b in a + 1..r.n() {
            if r.get(a, b) != t.get(a, b) {
                return Ok(ProbeOutcome::Falsified(format!(
                    "R({a},{b}) = {} but T({a},{b}) = {}",
                    r.get(a, b),
                    t.get(a, b)
                )));
            }
        }
    }
    Ok(ProbeOutcome::Confirmed)
}

/// Random transit function: every pair starts as `{a,b}` and gains each other
/// element independently with probability `p`.
pub fn random_transit<R: Rng>(rng: &mut R, n: usize, p: f64) -> TransitFunction {
    let mut entries = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let mut s = VertexSet::pair(a, b);
            for c in 0..n {
                if c != a && c != b && rng.gen_bool(p) {
                    s.insert(c);
                }
            }
            entries.push(((a, b), s));
        }
    }
    TransitFunction::new(n, entries, false).expect("construction satisfies (t1)-(t3)")
}

/// The transit function used by `trial` under `seed`: its own ChaCha stream,
/// a size in `2..=max_n` and `p` from {0.1, ..., 0.5}.
pub fn trial_transit(seed: u64, trial: u64, max_n: usize) -> TransitFunction {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let n = rng.gen_range(2..=max_n.max(2));
    let p = PROBABILITIES[rng.gen_range(0..PROBABILITIES.len())];
    random_transit(&mut rng, n, p)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Falsification {
    pub trial: u64,
    /// The transit function in file format.
    pub transit: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConverseReport {
    pub id: TheoremId,
    pub trials: u64,
    pub seed: u64,
    /// Trials whose transit function satisfied the whole axiom list.
    pub satisfied: u64,
    pub confirmed: u64,
    pub disconnected: u64,
    pub disconnected_examples: Vec<String>,
    pub falsified: u64,
    pub falsifications: Vec<Falsification>,
}

pub fn probe_converse(
    id: TheoremId,
    trials: u64,
    max_n: usize,
    seed: u64,
    exec: Exec,
) -> Result<ConverseReport, HarnessError> {
    if id.characterization().is_none() {
        return Err(HarnessError::NotCharacterization(id));
    }
    if max_n < 2 {
        return Err(HarnessError::Contract(format!("probe_converse needs max_n >= 2, got {max_n}")));
    }
    let idx: Vec<u64> = (0..trials).collect();
    let outcomes = exec.map(&idx, |&trial| {
        let r = trial_transit(seed, trial, max_n);
        probe_transit(id, &r).map(|o| (trial, r, o))
    });
    let mut rep = ConverseReport {
        id,
        trials,
        seed,
        satisfied: 0,
        confirmed: 0,
        disconnected: 0,
        disconnected_examples: Vec::new(),
        falsified: 0,
        falsifications: Vec::new(),
    };
    for o in outcomes {
        let (trial, r, outcome) = o?;
        match outcome {
            ProbeOutcome::AxiomsFail(_) => {}
            ProbeOutcome::Confirmed => {
                rep.satisfied += 1;
                rep.confirmed += 1;
            }
            ProbeOutcome::Disconnected => {
                rep.satisfied += 1;
                rep.disconnected += 1;
                if rep.disconnected_examples.len() < MAX_RECORDED {
                    rep.disconnected_examples.push(r.to_text());
                }
            }
            ProbeOutcome::Falsified(reason) => {
                rep.satisfied += 1;
                rep.falsified += 1;
                if rep.falsifications.len() < MAX_RECORDED {
                    rep.falsifications.push(Falsification { trial, transit: r.to_text(), reason });
                }
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_by_name;
    use crate::fixtures::fixture;

    #[test]
    fn toll_function_of_a_path_is_confirmed() {
        let t = toll_transit(&catalog_by_name("path:4").unwrap()).unwrap();
        assert_eq!(probe_transit(TheoremId::CharChordal, &t).unwrap(), ProbeOutcome::Confirmed);
        assert_eq!(probe_transit(TheoremId::CharTree, &t).unwrap(), ProbeOutcome::Confirmed);
    }

    #[test]
    fn example_3_fails_the_chordal_list() {
        let f = fixture(3).unwrap();
        assert!(matches!(probe_transit(TheoremId::CharChordal, &f.r).unwrap(), ProbeOutcome::AxiomsFail(_)));
    }

    #[test]
    fn non_characterization_rejected() {
        let t = toll_transit(&catalog_by_name("path:3").unwrap()).unwrap();
        assert!(probe_transit(TheoremId::ThmJcChordal, &t).is_err());
    }

    #[test]
    fn trials_are_reproducible() {
        assert_eq!(trial_transit(7, 3, 4), trial_transit(7, 3, 4));
        let a = probe_converse(TheoremId::CharChordal, 300, 4, 1, Exec::Sequential).unwrap();
        let b = probe_converse(TheoremId::CharChordal, 300, 4, 1, Exec::Parallel).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.falsified, 0, "{:?}", a.falsifications);
    }

    #[test]
    fn random_transit_is_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for n in 1..6 {
            let r = random_transit(&mut rng, n, 0.5);
            assert!(r.validate().is_ok());
        }
    }
}
