//! Projective measurement: a superposition collapses to one basis atom with
//! probability `|amplitude|^2`, leaving a classical (degree 1) assertion of
//! that atom.
//!
//! Randomness comes from [`RandomStream`], a SplitMix64 generator in
//! counter form: draw `k` of seed `s` is `mix(s + (k + 1) * 0x9e3779b97f4a7c15)`
//! with wrapping arithmetic. For seed `1234567` the first outputs are
//! `6457827717110365317, 3203168211198807973, 9817491932198370423`.
//! Because every draw is a pure function of `(seed, counter)`, sampling can
//! be split over disjoint counter ranges without changing the result.

use std::fmt;
use std::thread;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semantics::{round_sig12, sig12, truth_profile, QubitState, TruthValue};
use crate::syntax::{Assertion, Proposition};

const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

/// Trials below this count are sampled on the calling thread.
const PARALLEL_THRESHOLD: u64 = 1 << 16;

/// Output `counter` of the SplitMix64 sequence seeded with `seed`.
pub fn splitmix64(seed: u64, counter: u64) -> u64 {
    let mut z = seed.wrapping_add(counter.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Uniform in `[0, 1)` from the top 53 bits.
fn unit_interval(x: u64) -> f64 {
    (x >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomStream {
    seed: u64,
    counter: u64,
}

impl RandomStream {
    pub fn new(seed: u64) -> Self {
        Self::at(seed, 0)
    }

    /// A stream positioned at draw `counter`.
    pub fn at(seed: u64, counter: u64) -> Self {
        RandomStream { seed, counter }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn counter(&self) -> u64 {
        self.counter
    }

    pub fn next_u64(&mut self) -> u64 {
        let x = splitmix64(self.seed, self.counter);
        self.counter += 1;
        x
    }

    pub fn next_unit(&mut self) -> f64 {
        unit_interval(self.next_u64())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementOutcome {
    pub index: usize,
    pub atom: String,
    pub collapsed: Assertion,
    pub probability: TruthValue,
}

/// Inverse-CDF sampler over a state's truth profile.
struct Sampler {
    cumulative: Vec<f64>,
    fallback: usize,
}

impl Sampler {
    fn new(state: &QubitState) -> Self {
        let profile = truth_profile(state);
        let cumulative = profile
            .iter()
            .scan(0.0, |acc, t| {
                *acc += t.value();
                Some(*acc)
            })
            .collect();
        // rounding can leave the total a hair under 1
        let fallback = profile.iter().rposition(|t| t.value() > 0.0).unwrap_or(0);
        Sampler {
            cumulative,
            fallback,
        }
    }

    /// First index whose cumulative mass strictly exceeds `u`.
    fn index(&self, u: f64) -> usize {
        self.cumulative
            .iter()
            .position(|c| u < *c)
            .unwrap_or(self.fallback)
    }
}

/// Collapses `state`, consuming exactly one draw from `rng`.
pub fn measure(state: &QubitState, rng: &mut RandomStream) -> MeasurementOutcome {
    let index = Sampler::new(state).index(rng.next_unit());
    outcome(state, index)
}

fn outcome(state: &QubitState, index: usize) -> MeasurementOutcome {
    let atom = state.basis().atoms()[index].clone();
    MeasurementOutcome {
        index,
        collapsed: Assertion::classical(Proposition::Atom(atom.clone())),
        atom,
        probability: TruthValue::of_degree(state.amplitudes()[index]),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutcomeRecord {
    pub atom: String,
    pub count: u64,
    pub frequency: f64,
    pub expected: f64,
}

/// Outcome counts of repeated measurement of one state.
#[derive(Debug, Clone, PartialEq)]
pub struct Statistics {
    pub seed: u64,
    pub trials: u64,
    pub atoms: Vec<String>,
    pub counts: Vec<u64>,
    pub expected: Vec<f64>,
}

impl Statistics {
    pub fn frequency(&self, index: usize) -> f64 {
        self.counts[index] as f64 / self.trials as f64
    }

    pub fn frequencies(&self) -> Vec<f64> {
        (0..self.counts.len()).map(|i| self.frequency(i)).collect()
    }

    /// Rows with frequencies and expectations rounded to 12 significant
    /// digits.
    pub fn records(&self) -> Vec<OutcomeRecord> {
        self.atoms
            .iter()
            .enumerate()
            .map(|(i, atom)| OutcomeRecord {
                atom: atom.clone(),
                count: self.counts[i],
                frequency: round_sig12(self.frequency(i)),
                expected: round_sig12(self.expected[i]),
            })
            .collect()
    }
}

impl fmt::Display for Statistics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# seed {} trials {}", self.seed, self.trials)?;
        writeln!(f, "atom\tcount\tfrequency\texpected")?;
        for (i, atom) in self.atoms.iter().enumerate() {
            writeln!(
                f,
                "{atom}\t{}\t{}\t{}",
                self.counts[i],
                sig12(self.frequency(i)),
                sig12(self.expected[i])
            )?;
        }
        Ok(())
    }
}

/// Outcome counts for draws `0..trials`, split into `workers` contiguous
/// counter ranges sampled on separate threads.
fn sample_counts(state: &QubitState, trials: u64, seed: u64, workers: u64) -> Vec<u64> {
    let sampler = Sampler::new(state);
    let dim = state.amplitudes().len();
    let count_range = |start: u64, end: u64| {
        let mut counts = vec![0u64; dim];
        let mut rng = RandomStream::at(seed, start);
        for _ in start..end {
            counts[sampler.index(rng.next_unit())] += 1;
        }
        counts
    };
    if workers <= 1 {
        return count_range(0, trials);
    }
    let chunk = trials.div_ceil(workers);
    thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let start = (w * chunk).min(trials);
                let end = ((w + 1) * chunk).min(trials);
                let count_range = &count_range;
                scope.spawn(move || count_range(start, end))
            })
            .collect();
        let mut total = vec![0u64; dim];
        for h in handles {
            for (t, c) in total
                .iter_mut()
                .zip(h.join().expect("sampling thread panicked"))
            {
                *t += c;
            }
        }
        total
    })
}

/// Measures `trials` fresh copies of `state`, trial `k` using draw `k` of the
/// stream seeded with `seed`.
pub fn measure_statistics(state: &QubitState, trials: u64, seed: u64) -> Result<Statistics> {
    if trials == 0 {
        return Err(Error::Usage("trials must be at least 1".into()));
    }
    let workers = thread::available_parallelism().map_or(1, |n| n.get()) as u64;
    let workers = if trials < PARALLEL_THRESHOLD {
        1
    } else {
        workers
    };
    let counts = sample_counts(state, trials, seed, workers);
    Ok(Statistics {
        seed,
        trials,
        atoms: state.basis().atoms().to_vec(),
        counts,
        expected: truth_profile(state).iter().map(|t| t.value()).collect(),
    })
}
