use crate::error::{Error, Result};

/// Uniformly spaced sampling of an interval, endpoints included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformGrid {
    pub start: f64,
    pub end: f64,
    pub n: usize,
}

pub type SpatialGrid = UniformGrid;
pub type MomentumGrid = UniformGrid;
pub type TimeGrid = UniformGrid;

impl UniformGrid {
    pub fn new(start: f64, end: f64, n: usize) -> Result<Self> {
        let grid = UniformGrid { start, end, n };
        grid.validate()?;
        Ok(grid)
    }

    /// Symmetric grid on `[-half_width, half_width]`.
    pub fn symmetric(half_width: f64, n: usize) -> Result<Self> {
        Self::new(-half_width, half_width, n)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidGrid(format!("need at least 2 points, got {}", self.n)));
        }
        if !(self.start.is_finite() && self.end.is_finite()) || self.start >= self.end {
            return Err(Error::InvalidGrid(format!(
                "need finite start < end, got [{}, {}]",
                self.start, self.end
            )));
        }
        Ok(())
    }

    pub fn spacing(&self) -> f64 {
        (self.end - self.start) / (self.n - 1) as f64
    }

    pub fn point(&self, i: usize) -> f64 {
        if i + 1 == self.n {
            self.end
        } else {
            self.start + self.spacing() * i as f64
        }
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.point(i)).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.start == -self.end
    }
}
