//! Data grids and gnuplot scripts for the six reference figures.
//!
//! Sampling is 101x101 for surfaces and 401 points per curve. `J` spans
//! `[-2, 2]`, `Delta` spans `[-3, 3]`, `D` spans `[0, 4]` and temperature
//! curves span `[0.005, 2.5]`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use dense_coding::spinmodels::ModelKind;

use crate::format::format_sig;
use crate::sweep::{run_sweep, Axis, Output, Param, SweepRecord, SweepSpec};
use crate::error::CliError;

pub const SURFACE_STEPS: usize = 101;
pub const CURVE_STEPS: usize = 401;

const D_RANGE: (f64, f64) = (0.0, 4.0);
const T_RANGE: (f64, f64) = (0.005, 2.5);

/// One panel of a curve figure: coupling `j` and the values of the series
/// parameter, one curve each, listed from the top curve down.
#[derive(Debug, Clone)]
pub struct Panel {
    pub j: f64,
    pub series: Vec<f64>,
}

#[derive(Debug, Clone)]
pub enum Layout {
    Surface { x: Param, y: Param, fixed_t: f64 },
    Curves { x: Param, series: Param, panels: Vec<Panel> },
}

#[derive(Debug, Clone)]
pub struct Figure {
    pub number: u8,
    pub model: ModelKind,
    pub title: &'static str,
    pub layout: Layout,
}

fn column(param: Param) -> usize {
    match param {
        Param::J => 2,
        Param::Delta => 3,
        Param::D => 4,
        Param::T => 5,
    }
}

const CHI_COLUMN: usize = 6;

fn afm_fm(series: &[f64]) -> Vec<Panel> {
    vec![
        Panel { j: 1.0, series: series.to_vec() },
        Panel { j: -1.0, series: series.to_vec() },
    ]
}

pub fn figure(number: u8) -> Option<Figure> {
    let fig = match number {
        1 => Figure {
            number,
            model: ModelKind::Xxz,
            title: "chi versus J and Delta, T = 0.05",
            layout: Layout::Surface { x: Param::J, y: Param::Delta, fixed_t: 0.05 },
        },
        2 => Figure {
            number,
            model: ModelKind::Xxz,
            title: "chi versus Delta, T = 0.005, 0.5, 1",
            layout: Layout::Curves { x: Param::Delta, series: Param::T, panels: afm_fm(&[0.005, 0.5, 1.0]) },
        },
        3 => Figure {
            number,
            model: ModelKind::Xxz,
            title: "chi versus T for four anisotropies",
            layout: Layout::Curves {
                x: Param::T,
                series: Param::Delta,
                panels: vec![
                    Panel { j: 1.0, series: vec![-2.0, -0.9, 0.0, 1.0] },
                    Panel { j: -1.0, series: vec![-1.0, 0.0, 0.9, 2.0] },
                ],
            },
        },
        4 => Figure {
            number,
            model: ModelKind::Dm,
            title: "chi versus J and D, T = 0.5",
            layout: Layout::Surface { x: Param::J, y: Param::D, fixed_t: 0.5 },
        },
        5 => Figure {
            number,
            model: ModelKind::Dm,
            title: "chi versus D, T = 0.3, 0.5, 0.8",
            layout: Layout::Curves { x: Param::D, series: Param::T, panels: afm_fm(&[0.3, 0.5, 0.8]) },
        },
        6 => Figure {
            number,
            model: ModelKind::Dm,
            title: "chi versus T, D = 5, 1, 0",
            layout: Layout::Curves { x: Param::T, series: Param::D, panels: afm_fm(&[5.0, 1.0, 0.0]) },
        },
        _ => return None,
    };
    Some(fig)
}

fn axis_for(param: Param, steps: usize) -> Axis {
    let (lo, hi) = match param {
        Param::J => (-2.0, 2.0),
        Param::Delta => (-3.0, 3.0),
        Param::D => D_RANGE,
        Param::T => T_RANGE,
    };
    Axis::new(param, lo, hi, steps)
}

impl Figure {
    pub fn csv_name(&self) -> String {
        format!("fig{}.csv", self.number)
    }

    pub fn script_name(&self) -> String {
        format!("fig{}.gp", self.number)
    }

    /// The sweeps whose concatenated rows form the figure's CSV.
    pub fn sweeps(&self) -> Vec<SweepSpec> {
        match &self.layout {
            Layout::Surface { x, y, fixed_t } => vec![SweepSpec {
                model: self.model,
                fixed: BTreeMap::from([(Param::T, *fixed_t)]),
                axes: vec![axis_for(*x, SURFACE_STEPS), axis_for(*y, SURFACE_STEPS)],
                outputs: Output::all(),
            }],
            Layout::Curves { x, series, panels } => panels
                .iter()
                .flat_map(|panel| {
                    panel.series.iter().map(move |&value| SweepSpec {
                        model: self.model,
                        fixed: BTreeMap::from([(Param::J, panel.j), (*series, value)]),
                        axes: vec![axis_for(*x, CURVE_STEPS)],
                        outputs: Output::all(),
                    })
                })
                .collect(),
        }
    }

    pub fn records(&self) -> Result<Vec<SweepRecord>, CliError> {
        let mut rows = Vec::new();
        for spec in self.sweeps() {
            rows.extend(run_sweep(&spec)?);
        }
        Ok(rows)
    }

    /// Gnuplot script that plots the CSV written next to it.
    pub fn script(&self) -> String {
        let csv = self.csv_name();
        let mut s = String::new();
        let _ = writeln!(s, "# Figure {}: {}", self.number, self.title);
        let _ = writeln!(s, "set datafile separator ','");
        let _ = writeln!(s, "set terminal pngcairo size 1200,500");
        let _ = writeln!(s, "set output 'fig{}.png'", self.number);
        let _ = writeln!(s, "set multiplot layout 1,2");
        let _ = writeln!(s, "set grid");
        match &self.layout {
            Layout::Surface { x, y, fixed_t } => {
                let (cx, cy) = (column(*x), column(*y));
                let _ = writeln!(s, "set dgrid3d {SURFACE_STEPS},{SURFACE_STEPS}");
                let _ = writeln!(s, "set xlabel '{}'", x.name());
                let _ = writeln!(s, "set ylabel '{}'", y.name());
                let _ = writeln!(s, "set zlabel 'chi'");
                let _ = writeln!(s, "set title 'T = {}'", format_sig(*fixed_t));
                let _ = writeln!(s, "splot '{csv}' every ::1 using {cx}:{cy}:{CHI_COLUMN} with pm3d notitle");
                let _ = writeln!(s, "set view map");
                let _ = writeln!(s, "unset surface");
                let _ = writeln!(s, "set contour base");
                let _ = writeln!(s, "set cntrparam levels 10");
                let _ = writeln!(s, "set title 'contour'");
                let _ = writeln!(s, "splot '{csv}' every ::1 using {cx}:{cy}:{CHI_COLUMN} with lines notitle");
            }
            Layout::Curves { x, series, panels } => {
                let (cx, cs) = (column(*x), column(*series));
                let _ = writeln!(s, "set xlabel '{}'", x.name());
                let _ = writeln!(s, "set ylabel 'chi'");
                for panel in panels {
                    let j = format_sig(panel.j);
                    let _ = writeln!(s, "set title 'J = {j}'");
                    let clauses: Vec<String> = panel
                        .series
                        .iter()
                        .map(|&v| {
                            let v = format_sig(v);
                            format!(
                                "'{csv}' every ::1 using {cx}:((abs(${col_j}-({j}))<1e-9 && abs(${cs}-({v}))<1e-9) ? ${CHI_COLUMN} : 1/0) with lines title '{name} = {v}'",
                                col_j = column(Param::J),
                                name = series.name(),
                            )
                        })
                        .collect();
                    let _ = writeln!(s, "plot {}", clauses.join(", \\\n     "));
                }
            }
        }
        let _ = writeln!(s, "unset multiplot");
        s
    }
}
