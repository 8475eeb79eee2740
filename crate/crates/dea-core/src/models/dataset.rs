use alloc::string::String;
use alloc::vec::Vec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Measure {
    Input,
    Output,
}

impl core::fmt::Display for Measure {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Measure::Input => "input",
            Measure::Output => "output",
        })
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DataError {
    #[error("a panel needs at least one DMU")]
    NoDmus,
    #[error("a panel needs at least one input and one output")]
    NoMeasures,
    #[error("{measure} {row} has {found} values, expected {expected}")]
    Ragged {
        measure: Measure,
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("{measure} {row} of DMU {dmu} is {value}; entries must be positive and finite")]
    NonPositive {
        measure: Measure,
        row: usize,
        dmu: usize,
        value: f64,
    },
    #[error("expected {expected} {what}, got {found}")]
    LabelCount {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("scale factor {0} must be positive and finite")]
    BadScale(f64),
}

/// A panel of `n` DMUs with `l` inputs and `m` outputs.
///
/// `inputs[k][i]` is input `k` of DMU `i` (the matrix `X`, one row per
/// measure); likewise `outputs`. All entries are strictly positive.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    names: Vec<String>,
    tags: Vec<String>,
    inputs: Vec<Vec<f64>>,
    outputs: Vec<Vec<f64>>,
}

/// Per-measure divisors applied by [`Dataset::normalized`].
#[derive(Debug, Clone, PartialEq)]
pub struct Scaling {
    pub inputs: Vec<f64>,
    pub outputs: Vec<f64>,
}

impl Scaling {
    /// Maps input weights found on the normalised panel back to original units.
    pub fn input_weights(&self, u: &[f64]) -> Vec<f64> {
        u.iter().zip(&self.inputs).map(|(w, s)| w / s).collect()
    }

    pub fn output_weights(&self, v: &[f64]) -> Vec<f64> {
        v.iter().zip(&self.outputs).map(|(w, s)| w / s).collect()
    }
}

impl Dataset {
    pub fn new(
        names: Vec<String>,
        inputs: Vec<Vec<f64>>,
        outputs: Vec<Vec<f64>>,
    ) -> Result<Self, DataError> {
        let n = names.len();
        if n == 0 {
            return Err(DataError::NoDmus);
        }
        if inputs.is_empty() || outputs.is_empty() {
            return Err(DataError::NoMeasures);
        }
        for (measure, rows) in [(Measure::Input, &inputs), (Measure::Output, &outputs)] {
            for (row, values) in rows.iter().enumerate() {
                if values.len() != n {
                    return Err(DataError::Ragged {
                        measure,
                        row,
                        expected: n,
                        found: values.len(),
                    });
                }
                if let Some(dmu) = values.iter().position(|v| !(v.is_finite() && *v > 0.0)) {
                    return Err(DataError::NonPositive {
                        measure,
                        row,
                        dmu,
                        value: values[dmu],
                    });
                }
            }
        }
        Ok(Self {
            tags: alloc::vec![String::new(); n],
            names,
            inputs,
            outputs,
        })
    }

    /// Attaches one free-form label per DMU (e.g. a category code). Tags
    /// never enter any computation.
    pub fn with_tags(mut self, tags: Vec<String>) -> Result<Self, DataError> {
        if tags.len() != self.n() {
            return Err(DataError::LabelCount {
                what: "tags",
                expected: self.n(),
                found: tags.len(),
            });
        }
        self.tags = tags;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn num_inputs(&self) -> usize {
        self.inputs.len()
    }

    pub fn num_outputs(&self) -> usize {
        self.outputs.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn tags(&self) -> &[String] {
        &self.tags
    }

    pub fn input(&self, k: usize, i: usize) -> f64 {
        self.inputs[k][i]
    }

    pub fn output(&self, r: usize, i: usize) -> f64 {
        self.outputs[r][i]
    }

    /// Row `k` of `X`: input `k` across all DMUs.
    pub fn input_row(&self, k: usize) -> &[f64] {
        &self.inputs[k]
    }

    pub fn output_row(&self, r: usize) -> &[f64] {
        &self.outputs[r]
    }

    pub fn input_rows(&self) -> &[Vec<f64>] {
        &self.inputs
    }

    pub fn output_rows(&self) -> &[Vec<f64>] {
        &self.outputs
    }

    /// Column `i` of `X`.
    pub fn input_vector(&self, i: usize) -> Vec<f64> {
        self.inputs.iter().map(|row| row[i]).collect()
    }

    /// Column `i` of `Y`.
    pub fn output_vector(&self, i: usize) -> Vec<f64> {
        self.outputs.iter().map(|row| row[i]).collect()
    }

    /// Indices of every DMU except `o`, ascending.
    pub fn reference_set(&self, o: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(move |&j| j != o)
    }

    /// The panel with DMU `o` removed, i.e. `X₋ₒ` and `Y₋ₒ`.
    ///
    /// Returns `None` when `o` is out of range or the panel has one DMU.
    pub fn without(&self, o: usize) -> Option<Dataset> {
        if o >= self.n() || self.n() < 2 {
            return None;
        }
        let drop = |rows: &Vec<Vec<f64>>| -> Vec<Vec<f64>> {
            rows.iter()
                .map(|row| self.reference_set(o).map(|j| row[j]).collect())
                .collect()
        };
        let keep = |labels: &Vec<String>| -> Vec<String> {
            self.reference_set(o).map(|j| labels[j].clone()).collect()
        };
        Some(Dataset {
            names: keep(&self.names),
            tags: keep(&self.tags),
            inputs: drop(&self.inputs),
            outputs: drop(&self.outputs),
        })
    }

    /// A copy with one measure row multiplied by `factor` (a change of units).
    pub fn rescaled(
        &self,
        measure: Measure,
        row: usize,
        factor: f64,
    ) -> Result<Dataset, DataError> {
        if !(factor.is_finite() && factor > 0.0) {
            return Err(DataError::BadScale(factor));
        }
        let mut out = self.clone();
        let rows = match measure {
            Measure::Input => &mut out.inputs,
            Measure::Output => &mut out.outputs,
        };
        for v in &mut rows[row] {
            *v *= factor;
        }
        Dataset::new(out.names, out.inputs, out.outputs).map(|d| Dataset {
            tags: self.tags.clone(),
            ..d
        })
    }

    /// Divides every measure row by its maximum so all entries lie in (0, 1].
    pub fn normalized(&self) -> (Dataset, Scaling) {
        let max = |row: &Vec<f64>| row.iter().fold(0.0f64, |a, v| a.max(*v));
        let scaling = Scaling {
            inputs: self.inputs.iter().map(max).collect(),
            outputs: self.outputs.iter().map(max).collect(),
        };
        let apply = |rows: &Vec<Vec<f64>>, s: &Vec<f64>| -> Vec<Vec<f64>> {
            rows.iter()
                .zip(s)
                .map(|(row, d)| row.iter().map(|v| v / d).collect())
                .collect()
        };
        let d = Dataset {
            names: self.names.clone(),
            tags: self.tags.clone(),
            inputs: apply(&self.inputs, &scaling.inputs),
            outputs: apply(&self.outputs, &scaling.outputs),
        };
        (d, scaling)
    }
}
