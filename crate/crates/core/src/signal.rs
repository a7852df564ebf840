//! Trigonometric-polynomial signals: the concrete almost periodic time
//! dependence carried by model coefficients and time-modulated Lyapunov
//! functions.

use serde::{Deserialize, Serialize};

/// `s(t) = offset + sum_k amp_k * sin(freq_k * t + phase_k)`.
///
/// Trigonometric polynomials are almost periodic by construction, and every
/// quasi-periodic coefficient in the built-in models is expressed this way.
/// Terms are `(amplitude, frequency in rad per unit time, phase in rad)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuasiPeriodicSignal {
    #[serde(default)]
    pub offset: f64,
    #[serde(default)]
    pub terms: Vec<(f64, f64, f64)>,
}

impl QuasiPeriodicSignal {
    pub fn constant(offset: f64) -> Self {
        QuasiPeriodicSignal {
            offset,
            terms: Vec::new(),
        }
    }

    pub fn new(offset: f64, terms: Vec<(f64, f64, f64)>) -> Self {
        QuasiPeriodicSignal { offset, terms }
    }

    /// Single sine term `amp * sin(freq t + phase)`.
    pub fn sine(amp: f64, freq: f64, phase: f64) -> Self {
        QuasiPeriodicSignal {
            offset: 0.0,
            terms: vec![(amp, freq, phase)],
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        let mut s = self.offset;
        for &(amp, freq, phase) in &self.terms {
            s += amp * (freq * t + phase).sin();
        }
        s
    }

    /// Time derivative `s'(t)`.
    pub fn derivative(&self, t: f64) -> f64 {
        let mut s = 0.0;
        for &(amp, freq, phase) in &self.terms {
            s += amp * freq * (freq * t + phase).cos();
        }
        s
    }

    /// `offset + sum |amp|`: an upper bound for `s(t)` over all `t`.
    pub fn upper_bound(&self) -> f64 {
        self.offset + self.terms.iter().map(|t| t.0.abs()).sum::<f64>()
    }

    /// `offset - sum |amp|`: a lower bound for `s(t)` over all `t`.
    pub fn lower_bound(&self) -> f64 {
        self.offset - self.terms.iter().map(|t| t.0.abs()).sum::<f64>()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0 == 0.0)
    }
}
