//! Parameter grids and per-point evaluation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use dense_coding::densecoding::{capacity_closed, evaluate, validity};
use dense_coding::entanglement::concurrence;
use dense_coding::spinmodels::{thermal_state, ModelKind, ModelParams};
use rayon::prelude::*;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    J,
    Delta,
    D,
    T,
}

impl Param {
    pub fn name(self) -> &'static str {
        match self {
            Param::J => "J",
            Param::Delta => "Delta",
            Param::D => "D",
            Param::T => "T",
        }
    }

    /// The parameters a model needs, in record order.
    pub fn required_by(kind: ModelKind) -> [Param; 3] {
        match kind {
            ModelKind::Xxz => [Param::J, Param::Delta, Param::T],
            ModelKind::Dm => [Param::J, Param::D, Param::T],
        }
    }
}

impl FromStr for Param {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "J" | "j" => Ok(Param::J),
            "Delta" | "delta" => Ok(Param::Delta),
            "D" | "d" => Ok(Param::D),
            "T" | "t" => Ok(Param::T),
            other => Err(CliError::Usage(format!("unknown parameter `{other}`"))),
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One sweep axis: `step_count` evenly spaced values from `start` to `stop`
/// inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub param: Param,
    pub start: f64,
    pub stop: f64,
    pub step_count: usize,
}

impl Axis {
    pub fn new(param: Param, start: f64, stop: f64, step_count: usize) -> Self {
        Self {
            param,
            start,
            stop,
            step_count,
        }
    }

    pub fn values(&self) -> Vec<f64> {
        let last = (self.step_count - 1) as f64;
        (0..self.step_count)
            .map(|k| self.start + (self.stop - self.start) * (k as f64) / last)
            .collect()
    }
}

/// Parses `NAME:START:STOP:STEPS`.
impl FromStr for Axis {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let parts: Vec<&str> = s.split(':').collect();
        let [name, start, stop, steps] = parts[..] else {
            return Err(CliError::Usage(format!("axis `{s}` is not NAME:START:STOP:STEPS")));
        };
        let num = |v: &str| {
            v.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| CliError::Usage(format!("bad number `{v}` in axis `{s}`")))
        };
        let step_count = steps
            .parse::<usize>()
            .map_err(|_| CliError::Usage(format!("bad step count `{steps}` in axis `{s}`")))?;
        Ok(Axis::new(name.parse()?, num(start)?, num(stop)?, step_count))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Output {
    Chi,
    Entropy,
    Concurrence,
    Valid,
}

impl Output {
    pub fn all() -> BTreeSet<Output> {
        [Output::Chi, Output::Entropy, Output::Concurrence, Output::Valid]
            .into_iter()
            .collect()
    }
}

impl FromStr for Output {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "chi" => Ok(Output::Chi),
            "entropy" | "entropy_rho" => Ok(Output::Entropy),
            "concurrence" => Ok(Output::Concurrence),
            "valid" => Ok(Output::Valid),
            other => Err(CliError::Usage(format!("unknown output `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub model: ModelKind,
    pub fixed: BTreeMap<Param, f64>,
    pub axes: Vec<Axis>,
    pub outputs: BTreeSet<Output>,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.axes.is_empty() || self.axes.len() > 2 {
            return Err(CliError::Usage("a sweep needs one or two axes".into()));
        }
        if self.axes.len() == 2 && self.axes[0].param == self.axes[1].param {
            return Err(CliError::Usage(format!("axis {} given twice", self.axes[0].param)));
        }
        let required = Param::required_by(self.model);
        for axis in &self.axes {
            if !required.contains(&axis.param) {
                return Err(CliError::Usage(format!(
                    "parameter {} does not belong to the {} model",
                    axis.param,
                    model_label(self.model)
                )));
            }
            if axis.step_count < 2 {
                return Err(CliError::Usage(format!("axis {} needs at least 2 steps", axis.param)));
            }
            if self.fixed.contains_key(&axis.param) {
                return Err(CliError::Usage(format!(
                    "{} is both fixed and swept",
                    axis.param
                )));
            }
        }
        for (&param, value) in &self.fixed {
            if !required.contains(&param) {
                return Err(CliError::Usage(format!(
                    "parameter {} does not belong to the {} model",
                    param,
                    model_label(self.model)
                )));
            }
            if !value.is_finite() {
                return Err(CliError::Usage(format!("{param} must be finite")));
            }
        }
        for param in required {
            if !self.fixed.contains_key(&param) && !self.axes.iter().any(|a| a.param == param) {
                return Err(CliError::Usage(format!("missing value for {param}")));
            }
        }
        if self.outputs.is_empty() {
            return Err(CliError::Usage("no outputs selected".into()));
        }
        Ok(())
    }

    /// Grid points in row-major axis order (first axis outermost).
    pub fn points(&self) -> Vec<ModelParams> {
        let mut assignments: Vec<BTreeMap<Param, f64>> = vec![self.fixed.clone()];
        for axis in &self.axes {
            let values = axis.values();
            assignments = assignments
                .into_iter()
                .flat_map(|base| {
                    values.iter().map(move |&v| {
                        let mut next = base.clone();
                        next.insert(axis.param, v);
                        next
                    })
                })
                .collect();
        }
        assignments
            .into_iter()
            .map(|values| {
                let anisotropy = match self.model {
                    ModelKind::Xxz => values[&Param::Delta],
                    ModelKind::Dm => values[&Param::D],
                };
                ModelParams {
                    kind: self.model,
                    j: values[&Param::J],
                    anisotropy,
                    t: values[&Param::T],
                }
            })
            .collect()
    }
}

pub fn model_label(kind: ModelKind) -> &'static str {
    match kind {
        ModelKind::Xxz => "xxz",
        ModelKind::Dm => "dm",
    }
}

/// One output row. Outputs that were not requested are `None`.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub model: ModelKind,
    pub j: f64,
    pub delta: Option<f64>,
    pub d: Option<f64>,
    pub t: f64,
    pub chi: Option<f64>,
    pub entropy_rho: Option<f64>,
    pub concurrence: Option<f64>,
    pub valid: Option<bool>,
}

/// Evaluates one point.
///
/// `chi` and `valid` come from the closed forms. `J = 0`, where those are
/// undefined, falls back to the spectral pipeline (`rho = I/4`, `chi = 0`).
pub fn evaluate_point(params: &ModelParams, outputs: &BTreeSet<Output>) -> Result<SweepRecord, CliError> {
    let (delta, d) = match params.kind {
        ModelKind::Xxz => (Some(params.anisotropy), None),
        ModelKind::Dm => (None, Some(params.anisotropy)),
    };
    let mut record = SweepRecord {
        model: params.kind,
        j: params.j,
        delta,
        d,
        t: params.t,
        chi: None,
        entropy_rho: None,
        concurrence: None,
        valid: None,
    };

    if params.j == 0.0 {
        let generic = evaluate(params)?;
        record.chi = outputs.contains(&Output::Chi).then_some(generic.chi);
        record.entropy_rho = outputs.contains(&Output::Entropy).then_some(generic.entropy_rho);
        record.concurrence = outputs.contains(&Output::Concurrence).then_some(generic.concurrence);
        record.valid = outputs
            .contains(&Output::Valid)
            .then_some(generic.valid_for_dense_coding);
        return Ok(record);
    }

    if outputs.contains(&Output::Chi) {
        record.chi = Some(capacity_closed(params)?);
    }
    if outputs.contains(&Output::Valid) {
        record.valid = Some(validity(params)?);
    }
    if outputs.contains(&Output::Entropy) || outputs.contains(&Output::Concurrence) {
        let state = thermal_state(params)?;
        if outputs.contains(&Output::Entropy) {
            record.entropy_rho = Some(dense_coding::numkernel::von_neumann_entropy(&state.rho)?);
        }
        if outputs.contains(&Output::Concurrence) {
            record.concurrence = Some(concurrence(&state.rho)?.value());
        }
    }
    Ok(record)
}

/// Evaluates every grid point in parallel; rows come back in grid order.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRecord>, CliError> {
    spec.validate()?;
    spec.points()
        .par_iter()
        .map(|p| evaluate_point(p, &spec.outputs))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(axes: Vec<Axis>, fixed: &[(Param, f64)]) -> SweepSpec {
        SweepSpec {
            model: ModelKind::Xxz,
            fixed: fixed.iter().copied().collect(),
            axes,
            outputs: Output::all(),
        }
    }

    #[test]
    fn axis_parsing() {
        let axis: Axis = "Delta:-3:3:401".parse().unwrap();
        assert_eq!(axis, Axis::new(Param::Delta, -3.0, 3.0, 401));
        assert!("Delta:-3:3".parse::<Axis>().is_err());
        assert!("Q:0:1:2".parse::<Axis>().is_err());
        assert!("T:0:x:2".parse::<Axis>().is_err());
    }

    #[test]
    fn axis_values_include_endpoints() {
        let v = Axis::new(Param::J, -2.0, 2.0, 101).values();
        assert_eq!(v.len(), 101);
        assert_eq!(v[0], -2.0);
        assert_eq!(v[50], 0.0);
        assert_eq!(v[100], 2.0);
    }

    #[test]
    fn degenerate_axis_repeats_the_point() {
        let s = spec(vec![Axis::new(Param::Delta, 0.5, 0.5, 2)], &[(Param::J, 1.0), (Param::T, 0.5)]);
        let rows = run_sweep(&s).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0], rows[1]);
    }

    #[test]
    fn row_major_order() {
        let s = spec(
            vec![Axis::new(Param::J, 1.0, 2.0, 2), Axis::new(Param::Delta, 0.0, 1.0, 3)],
            &[(Param::T, 0.5)],
        );
        let pts: Vec<(f64, f64)> = s.points().iter().map(|p| (p.j, p.anisotropy)).collect();
        assert_eq!(
            pts,
            vec![(1.0, 0.0), (1.0, 0.5), (1.0, 1.0), (2.0, 0.0), (2.0, 0.5), (2.0, 1.0)]
        );
    }

    #[test]
    fn malformed_specs_are_rejected() {
        let t = (Param::T, 0.5);
        let j = (Param::J, 1.0);
        // wrong model parameter
        assert!(spec(vec![Axis::new(Param::D, 0.0, 1.0, 3)], &[j, t]).validate().is_err());
        // swept and fixed
        assert!(spec(vec![Axis::new(Param::J, 0.0, 1.0, 3)], &[j, t, (Param::Delta, 0.0)])
            .validate()
            .is_err());
        // missing Delta
        assert!(spec(vec![Axis::new(Param::J, 0.0, 1.0, 3)], &[t]).validate().is_err());
        // too few steps
        assert!(spec(vec![Axis::new(Param::Delta, 0.0, 1.0, 1)], &[j, t]).validate().is_err());
        // no axes
        assert!(spec(vec![], &[j, t, (Param::Delta, 0.0)]).validate().is_err());
    }

    #[test]
    fn zero_coupling_uses_spectral_pipeline() {
        let r = evaluate_point(&ModelParams::xxz(0.0, 1.0, 0.05), &Output::all()).unwrap();
        assert!(r.chi.unwrap().abs() < 1e-14);
        assert_eq!(r.valid, Some(false));
        assert!((r.entropy_rho.unwrap() - 2.0).abs() < 1e-14);
    }

    #[test]
    fn unrequested_outputs_are_absent() {
        let outputs = [Output::Chi].into_iter().collect();
        let r = evaluate_point(&ModelParams::dm(1.0, 1.0, 0.5), &outputs).unwrap();
        assert!(r.chi.is_some());
        assert_eq!((r.entropy_rho, r.concurrence, r.valid), (None, None, None));
        assert_eq!((r.delta, r.d), (None, Some(1.0)));
    }
}
