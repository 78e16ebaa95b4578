use crate::circuits::rotation_order;
use crate::error::{Error, Result};
use crate::sim::dense::{circuit_unitary, spectral_norm};
use crate::sim::{Circuit, Gate};

/// Largest controlled-rotation order `κ` kept by [`prune_qft`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PruneSpec {
    b: u32,
}

impl PruneSpec {
    pub fn new(b: u32) -> Result<Self> {
        if b == 0 {
            return Err(Error::InvalidParameter("pruning order must be at least 1".into()));
        }
        Ok(PruneSpec { b })
    }

    pub fn b(&self) -> u32 {
        self.b
    }
}

/// Pruned circuit and, for at most six qubits, `‖U − U_pruned‖₂`.
#[derive(Debug, Clone, PartialEq)]
pub struct Pruned {
    pub circuit: Circuit,
    pub deviation: Option<f64>,
}

pub const MAX_DEVIATION_QUBITS: usize = 6;

/// Drop the controlled rotations `R_κ` with `κ > b` from a (inverse) QFT.
pub fn prune_qft(circuit: &Circuit, spec: PruneSpec) -> Result<Pruned> {
    let mut kept = Vec::with_capacity(circuit.len());
    for (i, g) in circuit.gates().iter().enumerate() {
        match g {
            Gate::H(_) | Gate::Reverse { .. } => kept.push(g.clone()),
            Gate::CPhase { theta, .. } => {
                let kappa = rotation_order(*theta)
                    .ok_or_else(|| Error::NotQft(format!("gate {i}: angle {theta} is not ±2π/2^κ")))?;
                if kappa <= spec.b {
                    kept.push(g.clone());
                }
            }
            other => return Err(Error::NotQft(format!("gate {i}: unexpected {}", other.name()))),
        }
    }
    let pruned = Circuit::from_gates(circuit.num_qubits(), kept)?;
    let deviation = (circuit.num_qubits() <= MAX_DEVIATION_QUBITS)
        .then(|| spectral_norm(&(circuit_unitary(circuit) - circuit_unitary(&pruned))));
    Ok(Pruned {
        circuit: pruned,
        deviation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::{build_iqft, build_qft};

    #[test]
    fn large_b_keeps_everything() {
        for n in 1..=6 {
            let qft = build_qft(n).unwrap();
            let p = prune_qft(&qft, PruneSpec::new(n as u32).unwrap()).unwrap();
            assert_eq!(p.circuit, qft);
            assert!(p.deviation.unwrap() < 1e-12);
        }
    }

    #[test]
    fn b_one_leaves_hadamards() {
        let p = prune_qft(&build_qft(5).unwrap(), PruneSpec::new(1).unwrap()).unwrap();
        assert!(p
            .circuit
            .gates()
            .iter()
            .all(|g| matches!(g, Gate::H(_) | Gate::Reverse { .. })));
        assert_eq!(p.circuit.gates().iter().filter(|g| matches!(g, Gate::H(_))).count(), 5);
    }

    #[test]
    fn deviation_non_increasing_in_b() {
        for circuit in [build_qft(6).unwrap(), build_iqft(6).unwrap()] {
            let devs: Vec<f64> = (1..=6)
                .map(|b| {
                    prune_qft(&circuit, PruneSpec::new(b).unwrap())
                        .unwrap()
                        .deviation
                        .unwrap()
                })
                .collect();
            assert!(devs.windows(2).all(|w| w[1] <= w[0] + 1e-12), "{devs:?}");
            assert!(devs[0] > 0.1);
        }
    }

    #[test]
    fn rejects_other_circuits() {
        let c = Circuit::from_gates(2, vec![Gate::Rzz { a: 0, b: 1, theta: 0.2 }]).unwrap();
        assert!(matches!(
            prune_qft(&c, PruneSpec::new(2).unwrap()),
            Err(Error::NotQft(_))
        ));
        let c = Circuit::from_gates(
            2,
            vec![Gate::CPhase {
                control: 0,
                target: 1,
                theta: 0.3,
            }],
        )
        .unwrap();
        assert!(matches!(
            prune_qft(&c, PruneSpec::new(2).unwrap()),
            Err(Error::NotQft(_))
        ));
        assert!(PruneSpec::new(0).is_err());
    }

    #[test]
    fn large_registers_skip_deviation() {
        let p = prune_qft(&build_qft(7).unwrap(), PruneSpec::new(3).unwrap()).unwrap();
        assert!(p.deviation.is_none());
    }
}
