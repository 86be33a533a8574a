use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use super::{check_law, generate_instance, Instance, LawId, Verdict, Witness};
use crate::error::{Error, Result};
use crate::fixtures::{example_relation, f1};
use crate::fuzzy::FuzzyRelation;
use crate::grade::Grade;
use crate::mapping::UniverseMapping;
use crate::universe::Universe;

/// A generated instance on which a law's conclusion fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub law: LawId,
    /// Index of the trial that produced it; rerunning with the same seed
    /// reproduces it.
    pub trial: u64,
    pub instance: Instance,
    pub witness: Witness,
}

/// Trial `t` of law `law` under `seed` always draws from the same stream,
/// independent of thread count.
fn trial_rng(law: LawId, seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add((law as u64) << 40));
    rng.set_stream(trial);
    rng
}

/// The instance that trial `trial` of a suite or search draws for `law`.
pub fn suite_instance(law: LawId, seed: u64, trial: u64, max_size: usize) -> Instance {
    generate_instance(law, max_size, &mut trial_rng(law, seed, trial))
}

fn run_trial(law: LawId, seed: u64, trial: u64, max_size: usize) -> Result<(Verdict, Instance)> {
    let instance = suite_instance(law, seed, trial, max_size);
    Ok((check_law(law, &instance)?, instance))
}

fn validate(max_size: usize) -> Result<()> {
    if max_size == 0 {
        return Err(Error::Parameter(
            "maximum universe size must be at least 1".into(),
        ));
    }
    Ok(())
}

fn violation(
    law: LawId,
    trial: u64,
    outcome: Result<(Verdict, Instance)>,
) -> Result<Option<Counterexample>> {
    let (verdict, instance) = outcome?;
    Ok(match verdict {
        Verdict::Violated(witness) => Some(Counterexample {
            law,
            trial,
            instance,
            witness,
        }),
        _ => None,
    })
}

/// Runs up to `trials` seeded random instances of at most `max_size`
/// elements through [`check_law`] and returns the lowest-numbered violation.
///
/// The result depends only on the arguments, also when trials run in
/// parallel.
pub fn search_counterexample(
    law: LawId,
    trials: u64,
    seed: u64,
    max_size: usize,
) -> Result<Option<Counterexample>> {
    validate(max_size)?;
    let probe = |t: u64| violation(law, t, run_trial(law, seed, t, max_size));
    #[cfg(feature = "parallel")]
    let found = (0..trials)
        .into_par_iter()
        .map(probe)
        .find_first(|r| !matches!(r, Ok(None)));
    #[cfg(not(feature = "parallel"))]
    let found = (0..trials).map(probe).find(|r| !matches!(r, Ok(None)));
    found.unwrap_or(Ok(None))
}

/// Verdict counts for one law over a batch of trials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawSummary {
    pub law: LawId,
    pub trials: u64,
    pub holds: u64,
    pub vacuous: u64,
    pub violated: u64,
    pub first_violation: Option<Counterexample>,
}

impl LawSummary {
    pub fn passed(&self) -> bool {
        self.violated == 0
    }
}

/// Runs every trial for each law (no early exit) and tallies the verdicts.
pub fn run_suite(
    laws: &[LawId],
    trials: u64,
    seed: u64,
    max_size: usize,
) -> Result<Vec<LawSummary>> {
    validate(max_size)?;
    laws.iter()
        .map(|&law| {
            let classify = |t: u64| -> Result<(u8, Option<Counterexample>)> {
                let (verdict, instance) = run_trial(law, seed, t, max_size)?;
                Ok(match verdict {
                    Verdict::Holds => (0, None),
                    Verdict::Vacuous => (1, None),
                    Verdict::Violated(witness) => (
                        2,
                        Some(Counterexample {
                            law,
                            trial: t,
                            instance,
                            witness,
                        }),
                    ),
                })
            };
            #[cfg(feature = "parallel")]
            let outcomes: Vec<_> = (0..trials)
                .into_par_iter()
                .map(classify)
                .collect::<Result<_>>()?;
            #[cfg(not(feature = "parallel"))]
            let outcomes: Vec<_> = (0..trials).map(classify).collect::<Result<_>>()?;

            let mut summary = LawSummary {
                law,
                trials,
                holds: 0,
                vacuous: 0,
                violated: 0,
                first_violation: None,
            };
            for (kind, counterexample) in outcomes {
                match kind {
                    0 => summary.holds += 1,
                    1 => summary.vacuous += 1,
                    _ => {
                        summary.violated += 1;
                        summary.first_violation = summary.first_violation.or(counterexample);
                    }
                }
            }
            Ok(summary)
        })
        .collect()
}

/// A small stored instance on which a weakened law fails.
pub fn known_counterexample(law: LawId) -> Option<Instance> {
    match law {
        LawId::T3_3PredOnly => Some(Instance::new(example_relation()).with_f(f1())),
        LawId::T3_2Unconditional => {
            // R and Q live on different members of one fiber
            let u = Universe::new(["a", "b"]).ok()?;
            let f = UniverseMapping::new(u.clone(), Universe::new(["v"]).ok()?, vec![0, 0]).ok()?;
            let r = FuzzyRelation::from_terms(u.clone(), [("a", "a", Grade::ONE)]).ok()?;
            let q = FuzzyRelation::from_terms(u, [("b", "b", Grade::ONE)]).ok()?;
            Some(Instance::new(r).with_q(q).with_f(f))
        }
        LawId::T3_1Unconditional => {
            // merging b and c joins the chains a->b and c->d
            let u = Universe::new(["a", "b", "c", "d"]).ok()?;
            let v = Universe::new(["a", "v", "d"]).ok()?;
            let f = UniverseMapping::new(u.clone(), v, vec![0, 1, 1, 2]).ok()?;
            let r = FuzzyRelation::from_terms(u, [("a", "b", Grade::ONE), ("c", "d", Grade::ONE)])
                .ok()?;
            Some(Instance::new(r).with_f(f))
        }
        _ => None,
    }
}
