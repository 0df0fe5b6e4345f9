//! Young diagrams in French notation, monomino-domino tilings and the
//! lattice-path partitions of their tiling sets.
//!
//! Rows are indexed from the bottom starting at 1 and columns from the left
//! starting at 1, so `[i, j]` is the cell in row `i`, column `j`. Lattice
//! points `(x, y)` put the southwest corner of the diagram at the origin;
//! the cell `[i, j]` has northeast corner `(j, i)`.

mod partial;
mod path;
mod rectangle;
mod render;
mod tiling;

pub use partial::{
    distinct_partials, partial_from_tiling, partial_weight, verify_block_partition, verify_block_partition_with,
    BlockReport, Cell, PartialRow, PartialTiling,
};
pub use path::{path_from_tiling, Label, LatticePath, Step, Variant};
pub use rectangle::{from_rectangle_model, to_rectangle_model, RectStep, RectangleTiling};
pub use render::{render_ascii, render_svg, render_tiling_ascii, render_tiling_svg};
pub use tiling::{
    enumerate_tilings, shape_weight, shape_weight_with, tiling_weight, RowTiling, Strip, Tile,
    Tiling, TilingSpace,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lucas;

/// Longest row a [`RowTiling`] bit mask can hold.
pub const MAX_ROW_LEN: u32 = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("row of length {0} exceeds the supported maximum of 63")]
    RowTooLong(u32),
    #[error("malformed rectangle tiling: {0}")]
    MalformedModel(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

/// A straight or skew diagram. Row `i` (from the bottom) occupies columns
/// `inner[i] + 1 ..= outer[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Shape {
    pub outer: Vec<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub inner: Vec<u32>,
}

impl Shape {
    pub fn new(outer: Vec<u32>, inner: Vec<u32>) -> Result<Self, ShapeError> {
        if outer.windows(2).any(|w| w[0] < w[1]) {
            return Err(ShapeError::InvalidParameters(format!("outer rows {outer:?} increase")));
        }
        if inner.windows(2).any(|w| w[0] < w[1]) {
            return Err(ShapeError::InvalidParameters(format!("inner rows {inner:?} increase")));
        }
        if inner.len() > outer.len() || inner.iter().zip(&outer).any(|(m, l)| m > l) {
            return Err(ShapeError::InvalidParameters(format!(
                "inner {inner:?} does not fit inside outer {outer:?}"
            )));
        }
        if let Some(&l) = outer.iter().find(|&&l| l > MAX_ROW_LEN) {
            return Err(ShapeError::RowTooLong(l));
        }
        Ok(Self { outer, inner })
    }

    /// A single row of length `m`.
    pub fn row(m: u32) -> Self {
        Self::new(if m == 0 { vec![] } else { vec![m] }, vec![]).expect("row too long")
    }

    /// `delta_n = (n-1, n-2, ..., 1)`.
    pub fn staircase(n: u32) -> Self {
        Self::new((1..n).rev().collect(), vec![]).expect("staircase too large")
    }

    /// `delta_{n:d} = (nd-1, (n-1)d-1, ..., d-1)`. Zero rows (only when
    /// `d = 1`) are dropped, so `delta_{n:1} = delta_n`.
    pub fn d_staircase(n: u32, d: u32) -> Self {
        assert!(d >= 1, "d must be positive");
        let outer = (1..=n).rev().map(|i| i * d - 1).filter(|&l| l > 0).collect();
        Self::new(outer, vec![]).expect("staircase too large")
    }

    pub fn skew(outer: Vec<u32>, inner: Vec<u32>) -> Result<Self, ShapeError> {
        Self::new(outer, inner)
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    pub fn is_skew(&self) -> bool {
        self.inner.iter().any(|&m| m > 0)
    }

    /// Length of row `i` (1-indexed), zero above the diagram.
    pub fn row_len(&self, i: u32) -> u32 {
        let i = i as usize;
        if i == 0 || i > self.outer.len() {
            return 0;
        }
        self.outer[i - 1] - self.inner_at(i)
    }

    /// Rightmost column of row `i`, zero above the diagram.
    pub fn outer_at(&self, i: u32) -> u32 {
        self.outer.get((i as usize).wrapping_sub(1)).copied().unwrap_or(0)
    }

    fn inner_at(&self, i: usize) -> u32 {
        self.inner.get(i - 1).copied().unwrap_or(0)
    }

    /// Row lengths from the bottom, after removing the inner shape.
    pub fn row_lengths(&self) -> Vec<u32> {
        (1..=self.outer.len() as u32).map(|i| self.row_len(i)).collect()
    }

    pub fn num_cells(&self) -> u32 {
        self.row_lengths().iter().sum()
    }

    /// Parses `delta:n`, `ddelta:n:d`, `row:m` or
    /// `skew:a,b,c/x,y` (outer over inner).
    pub fn parse(text: &str) -> Result<Self, ShapeError> {
        let bad = || ShapeError::Parse(format!("unrecognized shape {text:?}"));
        let num = |s: &str| s.trim().parse::<u32>().map_err(|_| bad());
        let list = |s: &str| -> Result<Vec<u32>, ShapeError> {
            if s.trim().is_empty() {
                return Ok(vec![]);
            }
            s.split(',').map(num).collect()
        };
        let parts: Vec<&str> = text.split(':').collect();
        match parts.as_slice() {
            ["delta", n] => Ok(Self::staircase(num(n)?)),
            ["ddelta", n, d] => {
                let d = num(d)?;
                if d == 0 {
                    return Err(bad());
                }
                Ok(Self::d_staircase(num(n)?, d))
            }
            ["row", m] => Ok(Self::row(num(m)?)),
            ["skew", body] => {
                let (o, i) = body.split_once('/').unwrap_or((body, ""));
                Self::skew(list(o)?, list(i)?)
            }
            _ => Err(bad()),
        }
    }
}

/// The skew shape `delta_{2n-1:d} / ((d-1)n)` whose weight is the numerator
/// of the type D Catalan formula times a complementary factorial.
pub fn skew_numerator_shape(n: u32, d: u32) -> Shape {
    assert!(n >= 1 && d >= 1, "n and d must be positive");
    let outer: Vec<u32> = (1..=2 * n - 1).rev().map(|i| i * d - 1).collect();
    let mut outer = outer;
    while outer.last() == Some(&0) {
        outer.pop();
    }
    let cut = (d - 1) * n;
    let inner = if cut == 0 || outer.is_empty() { vec![] } else { vec![cut] };
    Shape::skew(outer, inner).expect("skew numerator shape is valid")
}

/// Tiles the skew shape and compares with `{(d+1)n-d} * {2n-2:d}!`.
pub fn verify_skew_numerator(n: u32, d: u32) -> bool {
    let shape = skew_numerator_shape(n, d);
    let expected = &lucas::lucas((d + 1) * n - d) * &lucas::d_lucastorial(2 * n - 2, d);
    shape_weight(&shape) == expected
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors() {
        assert_eq!(Shape::staircase(4).outer, vec![3, 2, 1]);
        assert_eq!(Shape::staircase(1).outer, Vec::<u32>::new());
        assert_eq!(Shape::d_staircase(3, 2).outer, vec![5, 3, 1]);
        assert_eq!(Shape::d_staircase(4, 1), Shape::staircase(4));
        assert!(Shape::new(vec![1, 2], vec![]).is_err());
        assert!(Shape::new(vec![3], vec![4]).is_err());
        assert!(matches!(Shape::new(vec![64], vec![]), Err(ShapeError::RowTooLong(64))));
    }

    #[test]
    fn parsing() {
        assert_eq!(Shape::parse("delta:5").unwrap(), Shape::staircase(5));
        assert_eq!(Shape::parse("ddelta:3:2").unwrap(), Shape::d_staircase(3, 2));
        assert_eq!(Shape::parse("skew:5,3,1/2").unwrap().row_lengths(), vec![3, 3, 1]);
        assert!(Shape::parse("square:3").is_err());
        assert!(Shape::parse("ddelta:3:0").is_err());
    }

    #[test]
    fn skew_numerator_shapes() {
        assert_eq!(skew_numerator_shape(2, 2).row_lengths(), vec![3, 3, 1]);
        assert_eq!(skew_numerator_shape(1, 3).row_lengths(), vec![0]);
        assert!(verify_skew_numerator(1, 2));
        assert!(verify_skew_numerator(2, 2));
        assert!(verify_skew_numerator(3, 2));
        assert!(verify_skew_numerator(2, 3));
        assert!(verify_skew_numerator(2, 1));
    }
}
