//! Line-oriented circuit text format.
//!
//! ```text
//! # optional comments
//! QUBITS 3
//! H 0
//! RZ 0 0.785
//! PHASEDX 1 1.57 0.0
//! RZZ 0 2 -0.39
//! CPHASE 2 1 1.5707963267948966
//! DIAG 2 0 1 0.0 0.1 -0.1 3.14
//! REV 2 1 2
//! ```
//!
//! Angles are radians written with round-trip precision. `DIAG k q… φ…`
//! lists `k` qubits then `2^k` entry phases; `REV k q…` lists `k` wires.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::sim::{Circuit, Gate};

pub fn to_text(circuit: &Circuit) -> String {
    let mut out = format!("QUBITS {}\n", circuit.num_qubits());
    for g in circuit.gates() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

pub fn from_text(text: &str) -> Result<Circuit> {
    let mut circuit: Option<Circuit> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        let mut tokens = line.split_whitespace();
        let keyword = tokens.next().expect("non-empty line");
        let rest: Vec<&str> = tokens.collect();
        if keyword == "QUBITS" {
            if circuit.is_some() {
                return Err(err("duplicate QUBITS header".into()));
            }
            let [m] = rest.as_slice() else {
                return Err(err("QUBITS takes one argument".into()));
            };
            circuit = Some(Circuit::new(parse_usize(m).map_err(err)?));
            continue;
        }
        let c = circuit
            .as_mut()
            .ok_or_else(|| err("gate before QUBITS header".into()))?;
        let gate = parse_gate(keyword, &rest).map_err(err)?;
        c.push(gate).map_err(|e| err(e.to_string()))?;
    }
    circuit.ok_or(Error::Parse {
        line: 0,
        message: "missing QUBITS header".into(),
    })
}

fn parse_usize(s: &str) -> std::result::Result<usize, String> {
    s.parse().map_err(|_| format!("expected a qubit index, got {s:?}"))
}

fn parse_f64(s: &str) -> std::result::Result<f64, String> {
    s.parse().map_err(|_| format!("expected an angle, got {s:?}"))
}

fn parse_gate(keyword: &str, args: &[&str]) -> std::result::Result<Gate, String> {
    let arity = |n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            Err(format!("{keyword} takes {n} arguments, got {}", args.len()))
        }
    };
    Ok(match keyword {
        "H" => {
            arity(1)?;
            Gate::H(parse_usize(args[0])?)
        }
        "RZ" => {
            arity(2)?;
            Gate::Rz {
                qubit: parse_usize(args[0])?,
                theta: parse_f64(args[1])?,
            }
        }
        "PHASEDX" => {
            arity(3)?;
            Gate::PhasedX {
                qubit: parse_usize(args[0])?,
                theta: parse_f64(args[1])?,
                phi: parse_f64(args[2])?,
            }
        }
        "RZZ" => {
            arity(3)?;
            Gate::Rzz {
                a: parse_usize(args[0])?,
                b: parse_usize(args[1])?,
                theta: parse_f64(args[2])?,
            }
        }
        "CPHASE" => {
            arity(3)?;
            Gate::CPhase {
                control: parse_usize(args[0])?,
                target: parse_usize(args[1])?,
                theta: parse_f64(args[2])?,
            }
        }
        "DIAG" => {
            let k = parse_usize(args.first().ok_or("DIAG needs a qubit count")?)?;
            if k >= 24 {
                return Err(format!("DIAG over {k} qubits is too large"));
            }
            arity(1 + k + (1 << k))?;
            let qubits = args[1..=k]
                .iter()
                .map(|s| parse_usize(s))
                .collect::<std::result::Result<_, _>>()?;
            let values = args[1 + k..]
                .iter()
                .map(|s| parse_f64(s).map(|phi| Complex64::from_polar(1.0, phi)))
                .collect::<std::result::Result<_, _>>()?;
            Gate::Diagonal { qubits, values }
        }
        "REV" => {
            let k = parse_usize(args.first().ok_or("REV needs a qubit count")?)?;
            arity(1 + k)?;
            Gate::Reverse {
                qubits: args[1..]
                    .iter()
                    .map(|s| parse_usize(s))
                    .collect::<std::result::Result<_, _>>()?,
            }
        }
        other => return Err(format!("unknown gate {other:?}")),
    })
}
