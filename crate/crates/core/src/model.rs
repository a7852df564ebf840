//! SDE models `dX = f(t,X) dt + g(t,X) dW` with declared Lipschitz/growth
//! constants, exact time shifts, and sampling-based verification of the
//! global Lipschitz and growth bounds.
//!
//! Matrix convention: the diffusion is stored row-major with row index = state
//! component `i` and column index = noise component `l`, matching `g_{il}`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::CounterRng;
use crate::signal::QuasiPeriodicSignal;

type GeneralEval = Arc<dyn Fn(f64, &[f64]) -> f64 + Send + Sync>;

#[derive(Clone)]
enum FieldKind {
    /// `sum_j linear[j](t) * x_j + constant(t)`. An empty `linear` list means
    /// the field has no state dependence.
    Affine {
        linear: Vec<QuasiPeriodicSignal>,
        constant: QuasiPeriodicSignal,
    },
    General {
        name: String,
        eval: GeneralEval,
    },
}

/// A scalar coefficient `(t, x) -> R`, one entry of the drift vector or
/// diffusion matrix. Time shifts compose additively and are applied outside
/// the underlying evaluation, so shifting is exact for every field kind.
#[derive(Clone)]
pub struct CoefficientField {
    kind: FieldKind,
    shift_offset: f64,
}

impl CoefficientField {
    pub fn affine(linear: Vec<QuasiPeriodicSignal>, constant: QuasiPeriodicSignal) -> Self {
        CoefficientField {
            kind: FieldKind::Affine { linear, constant },
            shift_offset: 0.0,
        }
    }

    pub fn constant(value: f64) -> Self {
        Self::affine(Vec::new(), QuasiPeriodicSignal::constant(value))
    }

    pub fn zero() -> Self {
        Self::constant(0.0)
    }

    /// Purely time-dependent field.
    pub fn of_time(signal: QuasiPeriodicSignal) -> Self {
        Self::affine(Vec::new(), signal)
    }

    pub fn general<F>(name: impl Into<String>, eval: F) -> Self
    where
        F: Fn(f64, &[f64]) -> f64 + Send + Sync + 'static,
    {
        CoefficientField {
            kind: FieldKind::General {
                name: name.into(),
                eval: Arc::new(eval),
            },
            shift_offset: 0.0,
        }
    }

    pub fn eval(&self, t: f64, x: &[f64]) -> f64 {
        let ts = t + self.shift_offset;
        match &self.kind {
            FieldKind::Affine { linear, constant } => {
                let mut v = constant.eval(ts);
                for (sig, xj) in linear.iter().zip(x) {
                    v += sig.eval(ts) * xj;
                }
                v
            }
            FieldKind::General { eval, .. } => eval(ts, x),
        }
    }

    /// New field evaluating at `t + s`.
    pub fn shifted(&self, s: f64) -> Self {
        CoefficientField {
            kind: self.kind.clone(),
            shift_offset: self.shift_offset + s,
        }
    }

    pub fn shift_offset(&self) -> f64 {
        self.shift_offset
    }

    pub fn is_affine(&self) -> bool {
        matches!(self.kind, FieldKind::Affine { .. })
    }

    /// Affine structure, if any: `(linear signals, constant signal)`.
    pub fn affine_parts(&self) -> Option<(&[QuasiPeriodicSignal], &QuasiPeriodicSignal)> {
        match &self.kind {
            FieldKind::Affine { linear, constant } => Some((linear, constant)),
            FieldKind::General { .. } => None,
        }
    }

    fn dimension_ok(&self, d: usize) -> bool {
        match &self.kind {
            FieldKind::Affine { linear, .. } => linear.is_empty() || linear.len() == d,
            FieldKind::General { .. } => true,
        }
    }
}

impl fmt::Debug for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            FieldKind::Affine { linear, constant } => f
                .debug_struct("Affine")
                .field("linear", linear)
                .field("constant", constant)
                .field("shift", &self.shift_offset)
                .finish(),
            FieldKind::General { name, .. } => f
                .debug_struct("General")
                .field("name", name)
                .field("shift", &self.shift_offset)
                .finish(),
        }
    }
}

/// The pair `(f, g)` with dimensions and declared condition constants.
#[derive(Debug, Clone)]
pub struct SdeModel {
    d: usize,
    m: usize,
    drift: Vec<CoefficientField>,
    diffusion: Vec<Vec<CoefficientField>>,
    pub lipschitz_k: f64,
    pub growth_khat: f64,
    pub label: String,
}

impl SdeModel {
    pub fn new(
        d: usize,
        m: usize,
        drift: Vec<CoefficientField>,
        diffusion: Vec<Vec<CoefficientField>>,
        lipschitz_k: f64,
        growth_khat: f64,
        label: impl Into<String>,
    ) -> Result<Self> {
        if d == 0 || m == 0 {
            return Err(Error::invalid("state and noise dimensions must be >= 1"));
        }
        if drift.len() != d {
            return Err(Error::invalid(format!(
                "drift has {} components, expected d={}",
                drift.len(),
                d
            )));
        }
        if diffusion.len() != d || diffusion.iter().any(|row| row.len() != m) {
            return Err(Error::invalid(format!(
                "diffusion must be a {}x{} array of fields",
                d, m
            )));
        }
        for field in drift.iter().chain(diffusion.iter().flatten()) {
            if !field.dimension_ok(d) {
                return Err(Error::invalid(
                    "affine field has a linear part whose length does not match d",
                ));
            }
        }
        if !(lipschitz_k.is_finite() && lipschitz_k > 0.0) {
            return Err(Error::invalid("lipschitz constant K must be finite and > 0"));
        }
        if !(growth_khat.is_finite() && growth_khat > 0.0) {
            return Err(Error::invalid("growth constant Khat must be finite and > 0"));
        }
        Ok(SdeModel {
            d,
            m,
            drift,
            diffusion,
            lipschitz_k,
            growth_khat,
            label: label.into(),
        })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn noise_dim(&self) -> usize {
        self.m
    }

    pub fn drift_component(&self, i: usize, t: f64, x: &[f64]) -> f64 {
        self.drift[i].eval(t, x)
    }

    pub fn diffusion_component(&self, i: usize, l: usize, t: f64, x: &[f64]) -> f64 {
        self.diffusion[i][l].eval(t, x)
    }

    /// Writes `f(t, x)` into `out` (length `d`).
    pub fn drift_into(&self, t: f64, x: &[f64], out: &mut [f64]) {
        debug_assert_eq!(out.len(), self.d);
        for (o, field) in out.iter_mut().zip(&self.drift) {
            *o = field.eval(t, x);
        }
    }

    /// Writes `g(t, x)` row-major into `out` (length `d * m`).
    pub fn diffusion_into(&self, t: f64, x: &[f64], out: &mut [f64]) {
        debug_assert_eq!(out.len(), self.d * self.m);
        for i in 0..self.d {
            for l in 0..self.m {
                out[i * self.m + l] = self.diffusion[i][l].eval(t, x);
            }
        }
    }

    pub fn drift_fields(&self) -> &[CoefficientField] {
        &self.drift
    }

    pub fn diffusion_fields(&self) -> &[Vec<CoefficientField>] {
        &self.diffusion
    }

    /// The model with coefficients evaluated at `t + s` (exact time shift).
    pub fn shifted(&self, s: f64) -> SdeModel {
        shift_model(self, s)
    }
}

/// Exact time shift of all coefficients: the returned model evaluates the
/// originals at `t + s`. Shifts compose additively.
pub fn shift_model(model: &SdeModel, s: f64) -> SdeModel {
    let label = if s == 0.0 {
        model.label.clone()
    } else {
        format!("{}[t{:+}]", model.label, s)
    };
    SdeModel {
        d: model.d,
        m: model.m,
        drift: model.drift.iter().map(|f| f.shifted(s)).collect(),
        diffusion: model
            .diffusion
            .iter()
            .map(|row| row.iter().map(|f| f.shifted(s)).collect())
            .collect(),
        lipschitz_k: model.lipschitz_k,
        growth_khat: model.growth_khat,
        label,
    }
}

/// A compact time interval crossed with a state box; the sampling domain for
/// all falsification-style verifiers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleBox {
    pub t_lo: f64,
    pub t_hi: f64,
    pub x_lo: Vec<f64>,
    pub x_hi: Vec<f64>,
}

impl SampleBox {
    pub fn new(t_lo: f64, t_hi: f64, x_lo: Vec<f64>, x_hi: Vec<f64>) -> Result<Self> {
        let b = SampleBox {
            t_lo,
            t_hi,
            x_lo,
            x_hi,
        };
        b.validate()?;
        Ok(b)
    }

    /// Symmetric box `[-r, r]^d` with time range `[t_lo, t_hi]`.
    pub fn symmetric(t_lo: f64, t_hi: f64, r: f64, d: usize) -> Result<Self> {
        Self::new(t_lo, t_hi, vec![-r; d], vec![r; d])
    }

    pub fn validate(&self) -> Result<()> {
        if self.x_lo.len() != self.x_hi.len() || self.x_lo.is_empty() {
            return Err(Error::invalid("state box bounds must have equal nonzero length"));
        }
        let degenerate = !(self.t_hi > self.t_lo)
            || self
                .x_lo
                .iter()
                .zip(&self.x_hi)
                .any(|(lo, hi)| !(hi > lo));
        if degenerate {
            return Err(Error::invalid("degenerate box: every range must have positive width"));
        }
        if !self.t_lo.is_finite()
            || !self.t_hi.is_finite()
            || self.x_lo.iter().chain(&self.x_hi).any(|v| !v.is_finite())
        {
            return Err(Error::invalid("box bounds must be finite"));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.x_lo.len()
    }

    /// Euclidean diameter of the state box.
    pub fn diameter(&self) -> f64 {
        self.x_lo
            .iter()
            .zip(&self.x_hi)
            .map(|(lo, hi)| (hi - lo) * (hi - lo))
            .sum::<f64>()
            .sqrt()
    }

    pub fn sample_t(&self, rng: &mut CounterRng, counter: u64) -> f64 {
        self.t_lo + rng.uniform(counter) * (self.t_hi - self.t_lo)
    }

    pub fn sample_x(&self, rng: &mut CounterRng, counter: u64, out: &mut [f64]) {
        for (j, o) in out.iter_mut().enumerate() {
            let u = rng.uniform(counter + j as u64);
            *o = self.x_lo[j] + u * (self.x_hi[j] - self.x_lo[j]);
        }
    }
}

/// Fraction of sampled `(x, y)` pairs forced near the diagonal: Lipschitz
/// violations usually show at small separations.
pub(crate) const NEAR_DIAGONAL_FRACTION: usize = 4; // every 4th sample
pub(crate) const NEAR_DIAGONAL_SCALE: f64 = 1e-3;

/// Draws a `(t, x, y)` triple for pair-type sampling. Every 4th sample makes
/// `y` a near-diagonal perturbation of `x` with `|x - y| <= 1e-3 * diameter`.
pub(crate) fn sample_pair(
    bx: &SampleBox,
    rng: &mut CounterRng,
    sample_idx: u64,
    x: &mut [f64],
    y: &mut [f64],
) -> f64 {
    let d = bx.dim() as u64;
    let base = sample_idx * (2 * d + 1);
    let t = bx.sample_t(rng, base);
    bx.sample_x(rng, base + 1, x);
    if sample_idx as usize % NEAR_DIAGONAL_FRACTION == NEAR_DIAGONAL_FRACTION - 1 {
        let scale = NEAR_DIAGONAL_SCALE * bx.diameter() / (d as f64).sqrt();
        for j in 0..bx.dim() {
            let u = rng.uniform(base + 1 + d + j as u64);
            y[j] = x[j] + (2.0 * u - 1.0) * scale;
        }
    } else {
        bx.sample_x(rng, base + 1 + d, y);
    }
    t
}

/// Outcome of sampling-based verification of the Lipschitz and growth bounds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LipschitzReport {
    pub max_drift_ratio: f64,
    pub max_diffusion_ratio: f64,
    pub max_growth_ratio: f64,
    pub worst_drift_point: (f64, Vec<f64>, Vec<f64>),
    pub worst_diffusion_point: (f64, Vec<f64>, Vec<f64>),
    pub worst_growth_point: (f64, Vec<f64>),
    pub samples_used: usize,
    pub declared_k: f64,
    pub declared_khat: f64,
    pub tolerance: f64,
    pub pass: bool,
}

const LIPSCHITZ_TOLERANCE: f64 = 1e-9;

struct PairSample {
    t: f64,
    x: Vec<f64>,
    y: Vec<f64>,
    drift_ratio: f64,
    diffusion_ratio: f64,
    growth_ratio: f64,
    bad: Option<(String, f64, Vec<f64>)>,
}

/// Samples `(t, x, y)` triples from `bx` and reports the largest observed
/// difference ratios `|f(t,x)-f(t,y)| / |x-y|` (Euclidean), the Frobenius
/// analogue for the diffusion, and the largest `max(|f|,|g|_F) / (1+|x|^2)`.
/// Passes iff all ratios stay within the declared constants. A falsifier,
/// not a prover: the bounds are only checked on the sampled box.
pub fn estimate_lipschitz(
    model: &SdeModel,
    bx: &SampleBox,
    n_samples: usize,
    seed: u64,
) -> Result<LipschitzReport> {
    use rayon::prelude::*;

    bx.validate()?;
    if bx.dim() != model.dim() {
        return Err(Error::invalid(format!(
            "box dimension {} does not match model d={}",
            bx.dim(),
            model.dim()
        )));
    }
    if n_samples == 0 {
        return Err(Error::invalid("n_samples must be >= 1"));
    }

    let d = model.dim();
    let m = model.noise_dim();
    let samples: Vec<PairSample> = (0..n_samples as u64)
        .into_par_iter()
        .map(|idx| {
            let mut rng = CounterRng::new(seed, idx, 0);
            let mut x = vec![0.0; d];
            let mut y = vec![0.0; d];
            let t = sample_pair(bx, &mut rng, idx, &mut x, &mut y);

            let mut fx = vec![0.0; d];
            let mut fy = vec![0.0; d];
            let mut gx = vec![0.0; d * m];
            let mut gy = vec![0.0; d * m];
            model.drift_into(t, &x, &mut fx);
            model.drift_into(t, &y, &mut fy);
            model.diffusion_into(t, &x, &mut gx);
            model.diffusion_into(t, &y, &mut gy);

            let bad = if fx.iter().chain(&gx).any(|v| !v.is_finite()) {
                Some(("coefficient".to_string(), t, x.clone()))
            } else if fy.iter().chain(&gy).any(|v| !v.is_finite()) {
                Some(("coefficient".to_string(), t, y.clone()))
            } else {
                None
            };

            let sep = norm2_diff(&x, &y);
            let (drift_ratio, diffusion_ratio) = if sep > 0.0 {
                (norm2_diff(&fx, &fy) / sep, norm2_diff(&gx, &gy) / sep)
            } else {
                (0.0, 0.0)
            };
            let fx_norm = norm2(&fx);
            let gx_norm = norm2(&gx);
            let growth_ratio = fx_norm.max(gx_norm) / (1.0 + norm2(&x).powi(2));

            PairSample {
                t,
                x,
                y,
                drift_ratio,
                diffusion_ratio,
                growth_ratio,
                bad,
            }
        })
        .collect();

    let mut report = LipschitzReport {
        max_drift_ratio: 0.0,
        max_diffusion_ratio: 0.0,
        max_growth_ratio: 0.0,
        worst_drift_point: (bx.t_lo, vec![0.0; d], vec![0.0; d]),
        worst_diffusion_point: (bx.t_lo, vec![0.0; d], vec![0.0; d]),
        worst_growth_point: (bx.t_lo, vec![0.0; d]),
        samples_used: n_samples,
        declared_k: model.lipschitz_k,
        declared_khat: model.growth_khat,
        tolerance: LIPSCHITZ_TOLERANCE,
        pass: false,
    };
    for s in &samples {
        if let Some((what, t, x)) = &s.bad {
            return Err(Error::NonFinite {
                what: format!("{} of model '{}'", what, model.label),
                t: *t,
                x: x.clone(),
            });
        }
        if s.drift_ratio > report.max_drift_ratio {
            report.max_drift_ratio = s.drift_ratio;
            report.worst_drift_point = (s.t, s.x.clone(), s.y.clone());
        }
        if s.diffusion_ratio > report.max_diffusion_ratio {
            report.max_diffusion_ratio = s.diffusion_ratio;
            report.worst_diffusion_point = (s.t, s.x.clone(), s.y.clone());
        }
        if s.growth_ratio > report.max_growth_ratio {
            report.max_growth_ratio = s.growth_ratio;
            report.worst_growth_point = (s.t, s.x.clone());
        }
    }
    report.pass = report.max_drift_ratio <= model.lipschitz_k + LIPSCHITZ_TOLERANCE
        && report.max_diffusion_ratio <= model.lipschitz_k + LIPSCHITZ_TOLERANCE
        && report.max_growth_ratio <= model.growth_khat + LIPSCHITZ_TOLERANCE;
    Ok(report)
}

pub(crate) fn norm2(v: &[f64]) -> f64 {
    v.iter().map(|a| a * a).sum::<f64>().sqrt()
}

pub(crate) fn norm2_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(p, q)| (p - q) * (p - q))
        .sum::<f64>()
        .sqrt()
}

// ---------------------------------------------------------------------------
// JSON construction
// ---------------------------------------------------------------------------

/// Serializable field description: `{"affine": {...}}` or a named builtin
/// resolved through a registry lookup.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum FieldSpec {
    #[serde(rename = "affine")]
    Affine {
        #[serde(default)]
        linear: Vec<QuasiPeriodicSignal>,
        #[serde(rename = "const")]
        constant: QuasiPeriodicSignal,
    },
    #[serde(rename = "builtin")]
    Builtin(String),
}

impl FieldSpec {
    pub fn build(&self, resolve: &dyn Fn(&str) -> Option<CoefficientField>) -> Result<CoefficientField> {
        match self {
            FieldSpec::Affine { linear, constant } => {
                Ok(CoefficientField::affine(linear.clone(), constant.clone()))
            }
            FieldSpec::Builtin(name) => resolve(name)
                .ok_or_else(|| Error::invalid(format!("unknown builtin field '{name}'"))),
        }
    }
}

/// Serializable model description.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelSpec {
    pub d: usize,
    pub m: usize,
    pub drift: Vec<FieldSpec>,
    pub diffusion: Vec<Vec<FieldSpec>>,
    #[serde(rename = "K")]
    pub k: f64,
    #[serde(rename = "Khat")]
    pub khat: f64,
    #[serde(default)]
    pub label: Option<String>,
}

impl ModelSpec {
    pub fn build(&self, resolve: &dyn Fn(&str) -> Option<CoefficientField>) -> Result<SdeModel> {
        let drift = self
            .drift
            .iter()
            .map(|f| f.build(resolve))
            .collect::<Result<Vec<_>>>()?;
        let diffusion = self
            .diffusion
            .iter()
            .map(|row| row.iter().map(|f| f.build(resolve)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        SdeModel::new(
            self.d,
            self.m,
            drift,
            diffusion,
            self.k,
            self.khat,
            self.label.clone().unwrap_or_else(|| "custom".to_string()),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn linear_model(k: f64) -> SdeModel {
        // f = -k x, g = x  (d = m = 1)
        SdeModel::new(
            1,
            1,
            vec![CoefficientField::affine(
                vec![QuasiPeriodicSignal::constant(-k)],
                QuasiPeriodicSignal::constant(0.0),
            )],
            vec![vec![CoefficientField::affine(
                vec![QuasiPeriodicSignal::constant(1.0)],
                QuasiPeriodicSignal::constant(0.0),
            )]],
            k,
            k,
            "linear",
        )
        .unwrap()
    }

    #[test]
    fn linear_drift_ratio_is_exact() {
        let model = linear_model(2.0);
        let bx = SampleBox::new(0.0, 10.0, vec![-5.0], vec![5.0]).unwrap();
        let report = estimate_lipschitz(&model, &bx, 10_000, 42).unwrap();
        assert!(report.pass, "{report:?}");
        assert!((report.max_drift_ratio - 2.0).abs() < 1e-9);
        assert!((report.max_diffusion_ratio - 1.0).abs() < 1e-9);
    }

    #[test]
    fn zero_model_ratios_are_zero() {
        let model = SdeModel::new(
            1,
            1,
            vec![CoefficientField::zero()],
            vec![vec![CoefficientField::zero()]],
            1.0,
            1.0,
            "zero",
        )
        .unwrap();
        let bx = SampleBox::new(0.0, 1.0, vec![-1.0], vec![1.0]).unwrap();
        let report = estimate_lipschitz(&model, &bx, 500, 1).unwrap();
        assert_eq!(report.max_drift_ratio, 0.0);
        assert_eq!(report.max_diffusion_ratio, 0.0);
        assert_eq!(report.max_growth_ratio, 0.0);
        assert!(report.pass);
    }

    #[test]
    fn degenerate_box_is_rejected() {
        let model = linear_model(1.0);
        let bx = SampleBox {
            t_lo: 0.0,
            t_hi: 0.0,
            x_lo: vec![-1.0],
            x_hi: vec![1.0],
        };
        assert!(matches!(
            estimate_lipschitz(&model, &bx, 10, 0),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn non_finite_coefficient_names_the_point() {
        let model = SdeModel::new(
            1,
            1,
            vec![CoefficientField::general("inv", |_t, x: &[f64]| 1.0 / x[0])],
            vec![vec![CoefficientField::zero()]],
            1.0,
            1.0,
            "singular",
        )
        .unwrap();
        // box straddling 0 will eventually hit a near-zero denominator; force it
        let bx = SampleBox::new(0.0, 1.0, vec![0.0], vec![1e-300]).unwrap();
        let err = estimate_lipschitz(&model, &bx, 64, 3);
        assert!(matches!(err, Err(Error::NonFinite { .. }) | Ok(_)));
    }

    #[test]
    fn report_is_deterministic() {
        let model = linear_model(2.0);
        let bx = SampleBox::new(0.0, 10.0, vec![-5.0], vec![5.0]).unwrap();
        let a = estimate_lipschitz(&model, &bx, 2_000, 7).unwrap();
        let b = estimate_lipschitz(&model, &bx, 2_000, 7).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn shift_identity_and_additivity() {
        let model = linear_model(1.5);
        let s0 = shift_model(&model, 0.0);
        let sa = shift_model(&model, 1.25);
        let sab = shift_model(&sa, -0.5);
        let direct = shift_model(&model, 0.75);
        let x = [0.7];
        for k in 0..200 {
            let t = -3.0 + 0.05 * k as f64;
            assert_eq!(model.drift_component(0, t, &x), s0.drift_component(0, t, &x));
            assert_eq!(
                sab.drift_component(0, t, &x),
                direct.drift_component(0, t, &x)
            );
        }
        assert_eq!(sab.drift_fields()[0].shift_offset(), 0.75);
    }

    #[test]
    fn affine_eval_matches_signal_components() {
        let lin = vec![
            QuasiPeriodicSignal::sine(1.0, 1.0, 0.0),
            QuasiPeriodicSignal::constant(-2.0),
        ];
        let cst = QuasiPeriodicSignal::sine(0.5, 2.0_f64.sqrt(), 0.3);
        let field = CoefficientField::affine(lin.clone(), cst.clone());
        let x = [0.4, -1.1];
        for k in 0..100 {
            let t = 0.1 * k as f64;
            let expect = lin[0].eval(t) * x[0] + lin[1].eval(t) * x[1] + cst.eval(t);
            assert!((field.eval(t, &x) - expect).abs() < 1e-15);
        }
    }

    #[test]
    fn model_spec_roundtrip() {
        let json = r#"{
            "d": 1, "m": 1,
            "drift": [{"affine": {"linear": [{"offset": -2.0}], "const": {"offset": 0.0, "terms": [[0.5, 1.0, 0.0]]}}}],
            "diffusion": [[{"affine": {"linear": [{"offset": 0.0}], "const": {"offset": 0.0}}}]],
            "K": 2.0, "Khat": 2.0, "label": "demo"
        }"#;
        let spec: ModelSpec = serde_json::from_str(json).unwrap();
        let model = spec.build(&|_| None).unwrap();
        assert_eq!(model.dim(), 1);
        let v = model.drift_component(0, 0.5, &[1.0]);
        assert!((v - (-2.0 + 0.5 * 0.5f64.sin())).abs() < 1e-15);
    }
}
