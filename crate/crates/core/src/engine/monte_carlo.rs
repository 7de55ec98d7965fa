use crate::error::{Error, Result};
use crate::rational::{rat, Rational};
use crate::sampler::{trial_rng, uniform, CumulativeRow};

use super::{PostPfa, StateId};

/// Sampling parameters for the restarting simulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonteCarlo {
    /// Passes allowed per trial before giving up.
    pub restart_cap: u64,
    /// Width of the uniform integers used to sample each transition.
    pub sample_bits: u32,
}

impl Default for MonteCarlo {
    fn default() -> Self {
        MonteCarlo { restart_cap: 1_000_000, sample_bits: 128 }
    }
}

/// Outcome of a batch of restarting trials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McEstimate {
    pub trials: u64,
    pub accepted: u64,
    /// Total passes over all trials, counting each trial's first pass.
    pub passes: u64,
}

impl McEstimate {
    pub fn estimate(&self) -> f64 {
        self.accepted as f64 / self.trials as f64
    }

    pub fn accepted_fraction(&self) -> Rational {
        rat(self.accepted as i64, self.trials as i64)
    }

    pub fn mean_passes(&self) -> Rational {
        rat(self.passes as i64, self.trials as i64)
    }

    pub fn restarts(&self) -> u64 {
        self.passes - self.trials
    }

    /// `|estimate - p| <= z * sqrt(p (1 - p) / trials)`, decided exactly.
    pub fn within_sigmas(&self, p: &Rational, z: i64) -> bool {
        let dev = self.accepted_fraction() - p;
        let var = p * (Rational::from_integer(1.into()) - p) / rat(self.trials as i64, 1);
        &dev * &dev <= var * rat(z * z, 1)
    }
}

struct Compiled {
    k: usize,
    rows: Vec<(Vec<StateId>, CumulativeRow)>,
}

impl MonteCarlo {
    pub fn run(&self, pfa: &PostPfa, w: &str, trials: u64, seed: u64) -> Result<McEstimate> {
        if trials == 0 {
            return Err(Error::EmptyTrialSet);
        }
        if !(1..=128).contains(&self.sample_bits) {
            return Err(Error::bad("sample_bits must be in 1..=128"));
        }
        pfa.validate().into_result()?;
        let tape = pfa.alphabet().tape(w)?;
        let k = pfa.alphabet().symbol_count();
        let c = Compiled {
            k,
            rows: (0..pfa.state_count() * k)
                .map(|i| {
                    let row = pfa.row(i / k, i % k);
                    (
                        row.iter().map(|e| e.0).collect(),
                        CumulativeRow::new(row.iter().map(|e| e.1.clone()), self.sample_bits),
                    )
                })
                .collect(),
        };
        let mut accepted = 0;
        let mut passes = 0;
        for t in 0..trials {
            let mut rng = trial_rng(seed, t);
            let mut used = 0;
            loop {
                if used == self.restart_cap {
                    return Err(Error::RestartCapExceeded { cap: self.restart_cap });
                }
                used += 1;
                let mut s = pfa.start();
                for &sym in &tape {
                    let (targets, row) = &c.rows[s * c.k + sym];
                    let i = row.pick(uniform(&mut rng, self.sample_bits)).expect("stochastic row");
                    s = targets[i];
                }
                if s == pfa.accept() {
                    accepted += 1;
                    break;
                }
                if s == pfa.reject() {
                    break;
                }
            }
            passes += used;
        }
        Ok(McEstimate { trials, accepted, passes })
    }
}

/// Restarting simulation with default sampling parameters.
pub fn simulate_monte_carlo(pfa: &PostPfa, w: &str, trials: u64, seed: u64) -> Result<McEstimate> {
    MonteCarlo::default().run(pfa, w, trials, seed)
}
