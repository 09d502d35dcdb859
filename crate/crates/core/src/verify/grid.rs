use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Minimum number of points in a verification grid.
pub const MIN_GRID_POINTS: usize = 16;

/// A one-dimensional verification grid with excluded neighbourhoods.
///
/// The `n` points are spread uniformly over the measure of
/// `[xi_min, xi_max]` minus the union of the exclusions, so exactly `n`
/// points survive whenever any admissible set remains.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub xi_min: f64,
    pub xi_max: f64,
    pub n: usize,
    /// `(center, radius)` pairs.
    pub excluded: Vec<(f64, f64)>,
}

impl Grid {
    pub fn new(xi_min: f64, xi_max: f64, n: usize) -> Result<Self> {
        if !(xi_min.is_finite() && xi_max.is_finite()) || xi_min >= xi_max {
            return Err(Error::InvalidGrid(format!(
                "need finite xi_min < xi_max, got [{xi_min}, {xi_max}]"
            )));
        }
        if n < MIN_GRID_POINTS {
            return Err(Error::InvalidGrid(format!(
                "need at least {MIN_GRID_POINTS} points, got {n}"
            )));
        }
        Ok(Grid {
            xi_min,
            xi_max,
            n,
            excluded: Vec::new(),
        })
    }

    pub fn exclude(mut self, center: f64, radius: f64) -> Self {
        self.excluded.push((center, radius));
        self
    }

    pub fn with_exclusions(mut self, ex: impl IntoIterator<Item = (f64, f64)>) -> Self {
        self.excluded.extend(ex);
        self
    }

    /// Admissible closed intervals, ordered and disjoint.
    pub fn intervals(&self) -> Vec<(f64, f64)> {
        let mut cuts: Vec<(f64, f64)> = self
            .excluded
            .iter()
            .map(|&(c, r)| (c - r.abs(), c + r.abs()))
            .filter(|&(a, b)| b > self.xi_min && a < self.xi_max)
            .collect();
        cuts.sort_by(|x, y| x.0.total_cmp(&y.0));
        let mut out = Vec::new();
        let mut cursor = self.xi_min;
        for (a, b) in cuts {
            if a > cursor {
                out.push((cursor, a));
            }
            cursor = cursor.max(b);
        }
        if cursor < self.xi_max {
            out.push((cursor, self.xi_max));
        }
        out.retain(|&(a, b)| b > a);
        out
    }

    /// The sample points, strictly increasing.
    pub fn points(&self) -> Result<Vec<f64>> {
        let intervals = self.intervals();
        let total: f64 = intervals.iter().map(|(a, b)| b - a).sum();
        if intervals.is_empty() || total <= 0.0 {
            return Err(Error::EmptyGrid);
        }
        let mut pts = Vec::with_capacity(self.n);
        let mut idx = 0;
        let mut offset = 0.0;
        for i in 0..self.n {
            // cell midpoints keep points off the exclusion boundaries
            let s = total * (i as f64 + 0.5) / self.n as f64;
            while idx + 1 < intervals.len() && s > offset + (intervals[idx].1 - intervals[idx].0) {
                offset += intervals[idx].1 - intervals[idx].0;
                idx += 1;
            }
            let (a, b) = intervals[idx];
            pts.push((a + (s - offset)).min(b));
        }
        pts.dedup();
        Ok(pts)
    }
}

/// A rectangular `(z, t)` grid for the PDE residual.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid2d {
    pub z_min: f64,
    pub z_max: f64,
    pub t_min: f64,
    pub t_max: f64,
    pub nz: usize,
    pub nt: usize,
}

impl Grid2d {
    pub fn new(z: (f64, f64), t: (f64, f64), n: usize) -> Result<Self> {
        if z.0 >= z.1 || t.0 >= t.1 || n < 2 {
            return Err(Error::InvalidGrid("degenerate (z, t) rectangle".into()));
        }
        Ok(Grid2d {
            z_min: z.0,
            z_max: z.1,
            t_min: t.0,
            t_max: t.1,
            nz: n,
            nt: n,
        })
    }

    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        let dz = (self.z_max - self.z_min) / (self.nz - 1) as f64;
        let dt = (self.t_max - self.t_min) / (self.nt - 1) as f64;
        (0..self.nt).flat_map(move |j| {
            (0..self.nz).map(move |i| (self.z_min + i as f64 * dz, self.t_min + j as f64 * dt))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_without_exclusions() {
        let g = Grid::new(0.0, 16.0, 16).unwrap();
        let p = g.points().unwrap();
        assert_eq!(p.len(), 16);
        assert_eq!(p[0], 0.5);
        assert_eq!(p[15], 15.5);
    }

    #[test]
    fn exclusions_removed_and_count_kept() {
        let g = Grid::new(-1.0, 1.0, 100).unwrap().exclude(0.0, 0.1).exclude(0.05, 0.1);
        let p = g.points().unwrap();
        assert_eq!(p.len(), 100);
        assert!(p.iter().all(|x| !(-0.1..=0.15).contains(x)));
        assert!(p.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn empty_and_invalid() {
        let g = Grid::new(0.0, 1.0, 20).unwrap().exclude(0.5, 1.0);
        assert_eq!(g.points(), Err(Error::EmptyGrid));
        assert!(Grid::new(0.0, 1.0, 15).is_err());
        assert!(Grid::new(1.0, 0.0, 20).is_err());
    }
}
