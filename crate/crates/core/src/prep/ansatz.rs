use std::f64::consts::FRAC_PI_4;

use crate::error::{Error, Result};
use crate::sim::{Circuit, Gate};

/// Angles per two-qubit block.
pub const PARAMS_PER_BLOCK: usize = 15;

/// Log-depth brickwall of nearest-neighbour two-qubit blocks.
///
/// Layer `ℓ` couples `(0,1), (2,3), …` for even `ℓ` and `(1,2), (3,4), …`
/// for odd `ℓ`; there are `floor(log₂ m) + 1` layers on `m` qubits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrickwallAnsatz {
    num_qubits: usize,
    depth: usize,
    blocks: Vec<(usize, usize)>,
}

/// One gate of the lowered ansatz, tagged with the parameter it reads.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct TemplateGate {
    pub gate: Gate,
    pub param: Option<usize>,
}

impl BrickwallAnsatz {
    pub fn new(num_qubits: usize) -> Result<Self> {
        if num_qubits < 2 {
            return Err(Error::InvalidParameter(format!(
                "brickwall needs at least two qubits, got {num_qubits}"
            )));
        }
        let depth = num_qubits.ilog2() as usize + 1;
        Ok(Self::with_depth(num_qubits, depth))
    }

    /// Brickwall with an explicit layer count.
    pub fn with_depth(num_qubits: usize, depth: usize) -> Self {
        let blocks = (0..depth)
            .flat_map(|layer| (layer % 2..num_qubits.saturating_sub(1)).step_by(2).map(|a| (a, a + 1)))
            .collect();
        BrickwallAnsatz {
            num_qubits,
            depth,
            blocks,
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    pub fn num_params(&self) -> usize {
        PARAMS_PER_BLOCK * self.blocks.len()
    }

    /// Lowered gate list with each parameterized gate's parameter index.
    ///
    /// Each block is `(E₁⊗E₂) · e^{−iθ₆XX} e^{−iθ₇YY} e^{−iθ₈ZZ} · (E₃⊗E₄)`
    /// with `E = Rz·PhasedX(·, 0)·Rz` Euler rotations; the XX and YY terms are
    /// RZZ gates conjugated by fixed basis changes. All-zero angles give the
    /// identity.
    pub(crate) fn template(&self) -> Vec<TemplateGate> {
        let mut out = Vec::with_capacity(self.blocks.len() * 23);
        let fixed = |gate| TemplateGate { gate, param: None };
        for (b, &(q0, q1)) in self.blocks.iter().enumerate() {
            let p = b * PARAMS_PER_BLOCK;
            let euler = |out: &mut Vec<TemplateGate>, q: usize, first: usize| {
                out.push(TemplateGate {
                    gate: Gate::Rz { qubit: q, theta: 0.0 },
                    param: Some(first),
                });
                out.push(TemplateGate {
                    gate: Gate::PhasedX {
                        qubit: q,
                        theta: 0.0,
                        phi: 0.0,
                    },
                    param: Some(first + 1),
                });
                out.push(TemplateGate {
                    gate: Gate::Rz { qubit: q, theta: 0.0 },
                    param: Some(first + 2),
                });
            };
            let zz = |param| TemplateGate {
                gate: Gate::Rzz {
                    a: q0,
                    b: q1,
                    theta: 0.0,
                },
                param: Some(param),
            };
            euler(&mut out, q0, p);
            euler(&mut out, q1, p + 3);
            // XX
            out.extend([fixed(Gate::H(q0)), fixed(Gate::H(q1)), zz(p + 6)]);
            out.extend([fixed(Gate::H(q0)), fixed(Gate::H(q1))]);
            // YY: e^{−iπ/4 X} maps Z to ±Y under conjugation.
            let vx = |q, theta| {
                fixed(Gate::PhasedX {
                    qubit: q,
                    theta,
                    phi: 0.0,
                })
            };
            out.extend([vx(q0, FRAC_PI_4), vx(q1, FRAC_PI_4), zz(p + 7)]);
            out.extend([vx(q0, -FRAC_PI_4), vx(q1, -FRAC_PI_4)]);
            // ZZ
            out.push(zz(p + 8));
            euler(&mut out, q0, p + 9);
            euler(&mut out, q1, p + 12);
        }
        out
    }

    /// Circuit for the parameter vector `theta`.
    pub fn to_circuit(&self, theta: &[f64]) -> Result<Circuit> {
        if theta.len() != self.num_params() {
            return Err(Error::DimensionMismatch {
                expected: self.num_params(),
                got: theta.len(),
            });
        }
        let gates = self
            .template()
            .into_iter()
            .map(|tg| match tg.param {
                Some(i) => with_angle(tg.gate, theta[i]),
                None => tg.gate,
            })
            .collect();
        Circuit::from_gates(self.num_qubits, gates)
    }
}

pub(crate) fn with_angle(gate: Gate, angle: f64) -> Gate {
    match gate {
        Gate::Rz { qubit, .. } => Gate::Rz { qubit, theta: angle },
        Gate::PhasedX { qubit, phi, .. } => Gate::PhasedX {
            qubit,
            theta: angle,
            phi,
        },
        Gate::Rzz { a, b, .. } => Gate::Rzz { a, b, theta: angle },
        other => other,
    }
}
