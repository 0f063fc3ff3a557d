use crate::eigensystem::Potential;
use crate::error::{Error, Result};
use crate::quadrature::gauss_legendre;

/// Sample points inside a well.
///
/// `points` holds the polynomial variable (`x̄` or `u`), `coords` the
/// matching physical coordinate `y`, and `weights` integrate in `y`, so
/// `Σ w_j f(y_j) ≈ ∫ f(y) dy` for every grid regardless of how it was built.
#[derive(Clone, Debug, PartialEq)]
pub struct SpatialGrid {
    pub points: Vec<f64>,
    pub coords: Vec<f64>,
    pub weights: Vec<f64>,
}

impl SpatialGrid {
    /// Gauss-Legendre rule mapped linearly onto the physical interval.
    pub fn gauss_legendre(potential: &Potential, nodes: usize) -> Result<Self> {
        if nodes < 2 {
            return Err(Error::domain("grid needs at least 2 nodes"));
        }
        let (lo, hi) = potential.domain();
        let (mid, half) = (0.5 * (lo + hi), 0.5 * (hi - lo));
        let (t, w) = gauss_legendre(nodes);
        let coords: Vec<f64> = t.iter().map(|t| mid + half * t).collect();
        let weights = w.iter().map(|w| w * half).collect();
        Ok(Self::assemble(potential, coords, weights))
    }

    /// `n` equally spaced interior points (cell midpoints in `y`).
    ///
    /// On the symmetric well the points are exactly mirror-symmetric about 0.
    pub fn uniform(potential: &Potential, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain("grid needs at least 2 points"));
        }
        let (lo, hi) = potential.domain();
        let (mid, half) = (0.5 * (lo + hi), 0.5 * (hi - lo));
        let nf = n as f64;
        let coords = (0..n)
            .map(|j| {
                let t = (2.0 * j as f64 + 1.0 - nf) / nf;
                mid + half * t
            })
            .collect();
        let weights = vec![(hi - lo) / nf; n];
        Ok(Self::assemble(potential, coords, weights))
    }

    /// Grid from arbitrary natural-variable points; weights by the
    /// trapezoid rule in `y` with the walls as end nodes.
    pub fn from_points(potential: &Potential, points: Vec<f64>) -> Result<Self> {
        let (nlo, nhi) = match potential {
            Potential::Symmetric(_) => (-1.0, 1.0),
            Potential::General(_) => (0.0, 1.0),
        };
        if points.len() < 2 {
            return Err(Error::domain("grid needs at least 2 points"));
        }
        if points.iter().any(|&p| !(p > nlo && p < nhi)) {
            return Err(Error::domain(format!("grid points must lie strictly inside ({nlo}, {nhi})")));
        }
        if points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::domain("grid points must be strictly increasing"));
        }
        let coords: Vec<f64> = points.iter().map(|&p| potential.physical(p)).collect();
        let (lo, hi) = potential.domain();
        let n = coords.len();
        let weights = (0..n)
            .map(|j| {
                let left = if j == 0 { lo } else { coords[j - 1] };
                let right = if j + 1 == n { hi } else { coords[j + 1] };
                0.5 * (right - left)
            })
            .collect();
        Ok(SpatialGrid { points, coords, weights })
    }

    fn assemble(potential: &Potential, coords: Vec<f64>, weights: Vec<f64>) -> Self {
        let points = coords.iter().map(|&y| potential.natural(y)).collect();
        SpatialGrid { points, coords, weights }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `∫ f dy` by the grid weights.
    pub fn integrate(&self, values: impl IntoIterator<Item = f64>) -> f64 {
        self.weights.iter().zip(values).map(|(w, v)| w * v).sum()
    }
}
