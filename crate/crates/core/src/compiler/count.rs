use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::sim::{Circuit, Gate};

/// Gate tallies of a circuit. Wire relabellings are free and not counted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GateCounts {
    pub total: usize,
    pub two_qubit: usize,
    pub by_kind: BTreeMap<String, usize>,
    pub depth: usize,
}

pub fn count(circuit: &Circuit) -> GateCounts {
    let mut counts = GateCounts::default();
    // Layer index at which each physical wire is next free.
    let mut free = vec![0usize; circuit.num_qubits()];
    // Logical qubit -> physical wire.
    let mut wire: Vec<usize> = (0..circuit.num_qubits()).collect();
    for g in circuit.gates() {
        if let Gate::Reverse { qubits } = g {
            let wires: Vec<usize> = qubits.iter().map(|&q| wire[q]).collect();
            for (q, w) in qubits.iter().zip(wires.iter().rev()) {
                wire[*q] = *w;
            }
            continue;
        }
        counts.total += 1;
        if g.is_two_qubit() {
            counts.two_qubit += 1;
        }
        *counts.by_kind.entry(g.name().to_string()).or_default() += 1;
        let touched: Vec<usize> = g.qubits().iter().map(|&q| wire[q]).collect();
        let layer = touched.iter().map(|&w| free[w]).max().unwrap_or(0) + 1;
        for w in touched {
            free[w] = layer;
        }
        counts.depth = counts.depth.max(layer);
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::build_qft;
    use crate::compiler::lower;

    #[test]
    fn empty_is_zero() {
        assert_eq!(count(&Circuit::new(3)), GateCounts::default());
    }

    #[test]
    fn lowered_qft_two_qubit_count() {
        for n in 1..=10 {
            let c = count(&lower(&build_qft(n).unwrap()).unwrap());
            assert_eq!(c.two_qubit, n * (n - 1) / 2);
            assert!(c.two_qubit <= c.total);
            assert_eq!(c.by_kind.values().sum::<usize>(), c.total);
        }
    }

    #[test]
    fn depth_layers_disjoint_gates() {
        let c = Circuit::from_gates(
            3,
            vec![
                Gate::H(0),
                Gate::H(1),
                Gate::H(2),
                Gate::Rzz { a: 0, b: 1, theta: 0.1 },
                Gate::H(2),
                Gate::Rzz { a: 1, b: 2, theta: 0.1 },
            ],
        )
        .unwrap();
        let k = count(&c);
        assert_eq!(k.depth, 3);
        assert_eq!(k.total, 6);
        assert_eq!(k.two_qubit, 2);
        assert_eq!(k.by_kind["H"], 4);
    }

    #[test]
    fn relabel_is_free_but_moves_wires() {
        let c = Circuit::from_gates(2, vec![Gate::H(0), Gate::Reverse { qubits: vec![0, 1] }, Gate::H(1)]).unwrap();
        let k = count(&c);
        assert_eq!(k.total, 2);
        assert_eq!(k.depth, 2);
    }

    #[test]
    fn global_phase_does_not_change_counts() {
        let a = Circuit::from_gates(1, vec![Gate::Rz { qubit: 0, theta: 0.3 }]).unwrap();
        let b = Circuit::from_gates(
            1,
            vec![Gate::Rz {
                qubit: 0,
                theta: 0.3 + std::f64::consts::PI,
            }],
        )
        .unwrap();
        assert_eq!(count(&a), count(&b));
    }
}
