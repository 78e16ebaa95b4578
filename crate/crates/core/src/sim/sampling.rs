use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::density::DensityMatrix;
use super::state::StateVector;
use crate::error::{Error, Result};

/// Anything with a computational-basis Born distribution.
pub trait BornDistribution {
    fn num_qubits(&self) -> usize;
    fn born_probabilities(&self) -> Vec<f64>;
}

impl BornDistribution for StateVector {
    fn num_qubits(&self) -> usize {
        StateVector::num_qubits(self)
    }

    fn born_probabilities(&self) -> Vec<f64> {
        self.probabilities()
    }
}

impl BornDistribution for DensityMatrix {
    fn num_qubits(&self) -> usize {
        DensityMatrix::num_qubits(self)
    }

    fn born_probabilities(&self) -> Vec<f64> {
        self.probabilities()
    }
}

/// Outcome counts indexed by basis state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Histogram {
    num_qubits: usize,
    counts: Vec<u64>,
}

impl Histogram {
    pub fn from_counts(num_qubits: usize, counts: Vec<u64>) -> Result<Self> {
        if counts.len() != 1 << num_qubits {
            return Err(Error::DimensionMismatch {
                expected: 1 << num_qubits,
                got: counts.len(),
            });
        }
        Ok(Histogram { num_qubits, counts })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count(&self, index: usize) -> u64 {
        self.counts[index]
    }

    pub fn shots(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Bitstring label of `index`, qubit 0 first.
    pub fn label(&self, index: usize) -> String {
        format!("{index:0width$b}", width = self.num_qubits)
    }

    /// Observed outcomes as `(bitstring, count)`, skipping zeros.
    pub fn nonzero(&self) -> impl Iterator<Item = (String, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (self.label(i), c))
    }

    pub fn frequencies(&self) -> Vec<f64> {
        let shots = self.shots() as f64;
        self.counts.iter().map(|&c| c as f64 / shots).collect()
    }
}

/// Draw `shots` i.i.d. outcomes from the Born distribution of `state`.
pub fn sample_bitstrings<S: BornDistribution + ?Sized>(state: &S, shots: u64, seed: u64) -> Result<Histogram> {
    if shots == 0 {
        return Err(Error::ZeroShots);
    }
    let probs = state.born_probabilities();
    let dist = WeightedIndex::new(&probs).map_err(|e| Error::InvalidParameter(format!("Born distribution: {e}")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = vec![0u64; probs.len()];
    for _ in 0..shots {
        counts[dist.sample(&mut rng)] += 1;
    }
    Ok(Histogram {
        num_qubits: state.num_qubits(),
        counts,
    })
}
