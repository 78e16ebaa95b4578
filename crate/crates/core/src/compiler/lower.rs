use std::f64::consts::FRAC_PI_2;
use std::f64::consts::FRAC_PI_4;

use crate::error::{Error, Result};
use crate::sim::{Circuit, Gate};

/// Rewrite `circuit` into `{RZ, PhasedX, RZZ}`.
///
/// The result equals the input up to a global phase. Wire relabellings pass
/// through unchanged; native diagonals cannot be lowered.
pub fn lower(circuit: &Circuit) -> Result<Circuit> {
    let mut out = Circuit::new(circuit.num_qubits());
    for g in circuit.gates() {
        for lowered in lower_gate(g)? {
            out.push(lowered)?;
        }
    }
    Ok(out)
}

pub fn lower_gate(gate: &Gate) -> Result<Vec<Gate>> {
    Ok(match *gate {
        // H = −i · e^{−iπ/4 Y} · e^{−iπ/2 Z}
        Gate::H(q) => vec![
            Gate::Rz {
                qubit: q,
                theta: FRAC_PI_2,
            },
            Gate::PhasedX {
                qubit: q,
                theta: FRAC_PI_4,
                phi: FRAC_PI_2,
            },
        ],
        // diag(1,1,1,e^{iθ}) = e^{iθ/4} e^{−iθ/4 Z_c} e^{−iθ/4 Z_t} e^{iθ/4 Z_c Z_t}
        Gate::CPhase { control, target, theta } => vec![
            Gate::Rz {
                qubit: control,
                theta: theta / 4.0,
            },
            Gate::Rz {
                qubit: target,
                theta: theta / 4.0,
            },
            Gate::Rzz {
                a: control,
                b: target,
                theta: -theta / 4.0,
            },
        ],
        Gate::Rz { .. } | Gate::PhasedX { .. } | Gate::Rzz { .. } | Gate::Reverse { .. } => vec![gate.clone()],
        Gate::Diagonal { .. } => {
            return Err(Error::NotCompilable(
                "native diagonal has no gateset decomposition here".into(),
            ))
        }
    })
}
