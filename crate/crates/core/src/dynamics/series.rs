use std::io::Write;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Scalar samples over strictly increasing times (units of `T_rev`).
#[derive(Clone, Debug, PartialEq)]
pub struct TimeSeries<T> {
    pub times: Vec<f64>,
    pub values: Vec<T>,
}

impl<T> TimeSeries<T> {
    pub fn new(times: Vec<f64>, values: Vec<T>) -> Result<Self> {
        if times.len() != values.len() {
            return Err(Error::domain("time series needs one value per time"));
        }
        if times.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::domain("time grid must be strictly increasing"));
        }
        Ok(TimeSeries { times, values })
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> TimeSeries<U> {
        TimeSeries { times: self.times.clone(), values: self.values.iter().map(f).collect() }
    }
}

impl TimeSeries<f64> {
    /// `t_over_Trev,value`, 12 significant digits.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "t_over_Trev,value")?;
        for (t, v) in self.times.iter().zip(&self.values) {
            writeln!(out, "{t:.11e},{v:.11e}")?;
        }
        Ok(())
    }
}

impl TimeSeries<Complex64> {
    /// `t_over_Trev,re,im`, 12 significant digits.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "t_over_Trev,re,im")?;
        for (t, v) in self.times.iter().zip(&self.values) {
            writeln!(out, "{t:.11e},{:.11e},{:.11e}", v.re, v.im)?;
        }
        Ok(())
    }
}

/// `n` evenly spaced times from 0 to `t_max` inclusive.
pub fn linspace(t_max: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![0.0];
    }
    (0..n).map(|i| t_max * i as f64 / (n - 1) as f64).collect()
}
