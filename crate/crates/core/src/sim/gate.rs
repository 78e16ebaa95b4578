use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// 2×2 complex matrix, row-major.
pub type Mat2 = [[Complex64; 2]; 2];
/// 4×4 complex matrix, row-major, basis |ab⟩ with `a` the first target.
pub type Mat4 = [[Complex64; 4]; 4];

const UNIT_TOL: f64 = 1e-12;

/// A single operation in a [`Circuit`].
///
/// Rotation conventions follow the hardware-style `exp(-iθP)` form without
/// the usual factor of one half: `Rz(θ) = exp(-iθZ)` and
/// `Rzz(θ) = exp(-iθ Z⊗Z)`.
#[derive(Debug, Clone, PartialEq)]
pub enum Gate {
    /// Hadamard.
    H(usize),
    /// `exp(-iθZ)`.
    Rz { qubit: usize, theta: f64 },
    /// `exp(-iθ(cos φ X + sin φ Y))`.
    PhasedX { qubit: usize, theta: f64, phi: f64 },
    /// `exp(-iθ Z⊗Z)`.
    Rzz { a: usize, b: usize, theta: f64 },
    /// `diag(1, 1, 1, e^{iθ})`. The controlled `R_κ` of the QFT has `θ = 2π/2^κ`.
    CPhase { control: usize, target: usize, theta: f64 },
    /// Arbitrary unit-modulus diagonal over `qubits`, the first listed qubit
    /// being the most significant bit of the local index.
    Diagonal { qubits: Vec<usize>, values: Vec<Complex64> },
    /// Wire relabelling that reverses the order of `qubits`. Costs no gates
    /// on hardware; it stands for the output permutation of a swap-free QFT.
    Reverse { qubits: Vec<usize> },
}

impl Gate {
    pub fn qubits(&self) -> Vec<usize> {
        match self {
            Gate::H(q) | Gate::Rz { qubit: q, .. } | Gate::PhasedX { qubit: q, .. } => vec![*q],
            Gate::Rzz { a, b, .. } => vec![*a, *b],
            Gate::CPhase { control, target, .. } => vec![*control, *target],
            Gate::Diagonal { qubits, .. } | Gate::Reverse { qubits } => qubits.clone(),
        }
    }

    /// Short mnemonic, also used as the keyword in the text format.
    pub fn name(&self) -> &'static str {
        match self {
            Gate::H(_) => "H",
            Gate::Rz { .. } => "RZ",
            Gate::PhasedX { .. } => "PHASEDX",
            Gate::Rzz { .. } => "RZZ",
            Gate::CPhase { .. } => "CPHASE",
            Gate::Diagonal { .. } => "DIAG",
            Gate::Reverse { .. } => "REV",
        }
    }

    /// Entangling gates that count toward the two-qubit tally and receive
    /// two-qubit noise.
    pub fn is_two_qubit(&self) -> bool {
        matches!(self, Gate::Rzz { .. } | Gate::CPhase { .. })
    }

    /// Check targets and unitarity against a register of `num_qubits`.
    pub fn validate(&self, num_qubits: usize) -> Result<()> {
        let qubits = self.qubits();
        for &q in &qubits {
            if q >= num_qubits {
                return Err(Error::QubitOutOfRange { qubit: q, num_qubits });
            }
        }
        for (i, &q) in qubits.iter().enumerate() {
            if qubits[..i].contains(&q) {
                return Err(Error::RepeatedTarget(q));
            }
        }
        if let Gate::Diagonal { qubits, values } = self {
            let expected = 1usize << qubits.len();
            if values.len() != expected {
                return Err(Error::DiagonalLength {
                    expected,
                    got: values.len(),
                });
            }
            for (index, v) in values.iter().enumerate() {
                let modulus = v.norm();
                if (modulus - 1.0).abs() > UNIT_TOL {
                    return Err(Error::NonUnitaryDiagonal { index, modulus });
                }
            }
        }
        Ok(())
    }

    /// The inverse gate.
    pub fn inverse(&self) -> Gate {
        match self {
            Gate::H(q) => Gate::H(*q),
            Gate::Rz { qubit, theta } => Gate::Rz {
                qubit: *qubit,
                theta: -theta,
            },
            Gate::PhasedX { qubit, theta, phi } => Gate::PhasedX {
                qubit: *qubit,
                theta: -theta,
                phi: *phi,
            },
            Gate::Rzz { a, b, theta } => Gate::Rzz {
                a: *a,
                b: *b,
                theta: -theta,
            },
            Gate::CPhase { control, target, theta } => Gate::CPhase {
                control: *control,
                target: *target,
                theta: -theta,
            },
            Gate::Diagonal { qubits, values } => Gate::Diagonal {
                qubits: qubits.clone(),
                values: values.iter().map(|v| v.conj()).collect(),
            },
            Gate::Reverse { qubits } => Gate::Reverse { qubits: qubits.clone() },
        }
    }

    /// Same gate acting on `qubit + offset` for every target.
    pub fn shifted(&self, offset: usize) -> Gate {
        self.remapped(|q| q + offset)
    }

    pub fn remapped(&self, f: impl Fn(usize) -> usize) -> Gate {
        match self {
            Gate::H(q) => Gate::H(f(*q)),
            Gate::Rz { qubit, theta } => Gate::Rz {
                qubit: f(*qubit),
                theta: *theta,
            },
            Gate::PhasedX { qubit, theta, phi } => Gate::PhasedX {
                qubit: f(*qubit),
                theta: *theta,
                phi: *phi,
            },
            Gate::Rzz { a, b, theta } => Gate::Rzz {
                a: f(*a),
                b: f(*b),
                theta: *theta,
            },
            Gate::CPhase { control, target, theta } => Gate::CPhase {
                control: f(*control),
                target: f(*target),
                theta: *theta,
            },
            Gate::Diagonal { qubits, values } => Gate::Diagonal {
                qubits: qubits.iter().map(|&q| f(q)).collect(),
                values: values.clone(),
            },
            Gate::Reverse { qubits } => Gate::Reverse {
                qubits: qubits.iter().map(|&q| f(q)).collect(),
            },
        }
    }

    /// Matrix of a single-qubit gate.
    pub fn matrix_1q(&self) -> Option<Mat2> {
        let c = Complex64::new;
        match *self {
            Gate::H(_) => {
                let s = std::f64::consts::FRAC_1_SQRT_2;
                Some([[c(s, 0.0), c(s, 0.0)], [c(s, 0.0), c(-s, 0.0)]])
            }
            Gate::Rz { theta, .. } => Some([
                [Complex64::from_polar(1.0, -theta), c(0.0, 0.0)],
                [c(0.0, 0.0), Complex64::from_polar(1.0, theta)],
            ]),
            Gate::PhasedX { theta, phi, .. } => {
                let (s, co) = theta.sin_cos();
                let mi_s = c(0.0, -s);
                Some([
                    [c(co, 0.0), mi_s * Complex64::from_polar(1.0, -phi)],
                    [mi_s * Complex64::from_polar(1.0, phi), c(co, 0.0)],
                ])
            }
            _ => None,
        }
    }

    /// Matrix of a two-qubit gate in the basis |q₀q₁⟩ of `self.qubits()`.
    pub fn matrix_2q(&self) -> Option<Mat4> {
        let d = match *self {
            Gate::Rzz { theta, .. } => {
                let m = Complex64::from_polar(1.0, -theta);
                let p = Complex64::from_polar(1.0, theta);
                [m, p, p, m]
            }
            Gate::CPhase { theta, .. } => {
                let one = Complex64::new(1.0, 0.0);
                [one, one, one, Complex64::from_polar(1.0, theta)]
            }
            _ => return None,
        };
        let mut out = [[Complex64::new(0.0, 0.0); 4]; 4];
        for i in 0..4 {
            out[i][i] = d[i];
        }
        Some(out)
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::H(q) => write!(f, "H {q}"),
            Gate::Rz { qubit, theta } => write!(f, "RZ {qubit} {theta:?}"),
            Gate::PhasedX { qubit, theta, phi } => write!(f, "PHASEDX {qubit} {theta:?} {phi:?}"),
            Gate::Rzz { a, b, theta } => write!(f, "RZZ {a} {b} {theta:?}"),
            Gate::CPhase { control, target, theta } => write!(f, "CPHASE {control} {target} {theta:?}"),
            Gate::Diagonal { qubits, values } => {
                write!(f, "DIAG {}", qubits.len())?;
                for q in qubits {
                    write!(f, " {q}")?;
                }
                for v in values {
                    write!(f, " {:?}", v.arg())?;
                }
                Ok(())
            }
            Gate::Reverse { qubits } => {
                write!(f, "REV {}", qubits.len())?;
                for q in qubits {
                    write!(f, " {q}")?;
                }
                Ok(())
            }
        }
    }
}

/// An ordered gate program on a fixed register.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Circuit {
    num_qubits: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(num_qubits: usize) -> Self {
        Circuit {
            num_qubits,
            gates: Vec::new(),
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Append a gate after validating it against the register.
    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.num_qubits)?;
        self.gates.push(gate);
        Ok(())
    }

    /// Append every gate of `other`, shifted up by `offset` wires.
    pub fn append_shifted(&mut self, other: &Circuit, offset: usize) -> Result<()> {
        if other.num_qubits + offset > self.num_qubits {
            return Err(Error::DimensionMismatch {
                expected: self.num_qubits,
                got: other.num_qubits + offset,
            });
        }
        for g in &other.gates {
            self.gates.push(g.shifted(offset));
        }
        Ok(())
    }

    pub fn append(&mut self, other: &Circuit) -> Result<()> {
        self.append_shifted(other, 0)
    }

    /// The adjoint circuit.
    pub fn inverse(&self) -> Circuit {
        Circuit {
            num_qubits: self.num_qubits,
            gates: self.gates.iter().rev().map(Gate::inverse).collect(),
        }
    }

    pub fn into_gates(self) -> Vec<Gate> {
        self.gates
    }

    /// Build from raw gates, validating each.
    pub fn from_gates(num_qubits: usize, gates: Vec<Gate>) -> Result<Self> {
        let mut c = Circuit::new(num_qubits);
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_unitary2(m: &Mat2) -> bool {
        for i in 0..2 {
            for j in 0..2 {
                let s: Complex64 = (0..2).map(|k| m[k][i].conj() * m[k][j]).sum();
                let e = if i == j { 1.0 } else { 0.0 };
                if (s - e).norm() > 1e-12 {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn single_qubit_matrices_are_unitary() {
        for g in [
            Gate::H(0),
            Gate::Rz { qubit: 0, theta: 0.7 },
            Gate::PhasedX {
                qubit: 0,
                theta: 1.3,
                phi: -0.4,
            },
        ] {
            assert!(is_unitary2(&g.matrix_1q().unwrap()), "{g}");
        }
    }

    #[test]
    fn validate_rejects_bad_targets() {
        assert_eq!(
            Gate::H(3).validate(3),
            Err(Error::QubitOutOfRange {
                qubit: 3,
                num_qubits: 3
            })
        );
        assert_eq!(
            Gate::Rzz { a: 1, b: 1, theta: 0.1 }.validate(3),
            Err(Error::RepeatedTarget(1))
        );
        let bad = Gate::Diagonal {
            qubits: vec![0],
            values: vec![Complex64::new(1.0, 0.0), Complex64::new(0.5, 0.0)],
        };
        assert!(matches!(
            bad.validate(1),
            Err(Error::NonUnitaryDiagonal { index: 1, .. })
        ));
    }

    #[test]
    fn inverse_negates_angles() {
        let g = Gate::CPhase {
            control: 0,
            target: 1,
            theta: 0.25,
        };
        assert_eq!(
            g.inverse(),
            Gate::CPhase {
                control: 0,
                target: 1,
                theta: -0.25
            }
        );
    }
}
