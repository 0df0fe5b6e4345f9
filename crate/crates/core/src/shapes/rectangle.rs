use serde::{Deserialize, Serialize};

use super::partial::{PartialRow, PartialTiling};
use super::path::{binomial_labels, Label, LatticePath, Step, Variant};
use super::tiling::{Strip, Tile};
use super::ShapeError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RectStep {
    N,
    E,
}

/// A tiling of a `width x height` rectangle split by a lattice path from
/// the southwest to the northeast corner. The region northwest of the path
/// is tiled by rows (`rows`, bottom first); the region southeast of it by
/// columns (`cols`, left first, each read bottom to top), and every nonempty
/// column starts with a domino.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RectangleTiling {
    pub width: u32,
    pub height: u32,
    pub path: Vec<RectStep>,
    pub rows: Vec<Strip>,
    pub cols: Vec<Strip>,
}

impl RectangleTiling {
    pub fn path_string(&self) -> String {
        self.path
            .iter()
            .map(|s| match s {
                RectStep::N => 'N',
                RectStep::E => 'E',
            })
            .collect()
    }

    pub fn weight(&self) -> crate::polyring::Poly2 {
        self.rows.iter().chain(&self.cols).map(Strip::weight).product()
    }

    /// Checks the shape constraints that make the model well formed.
    pub fn validate(&self) -> Result<(), ShapeError> {
        let bad = |msg: String| Err(ShapeError::MalformedModel(msg));
        let n_count = self.path.iter().filter(|&&s| s == RectStep::N).count() as u32;
        let e_count = self.path.len() as u32 - n_count;
        if n_count != self.height || e_count != self.width {
            return bad(format!(
                "path has {e_count} east and {n_count} north steps for a {}x{} rectangle",
                self.width, self.height
            ));
        }
        if self.rows.len() as u32 != self.height || self.cols.len() as u32 != self.width {
            return bad("one row per north step and one column per east step are required".into());
        }
        let (mut x, mut y) = (0u32, 0u32);
        let (mut ri, mut ci) = (0usize, 0usize);
        for step in &self.path {
            match step {
                RectStep::N => {
                    if self.rows[ri].len() != x {
                        return bad(format!("row {} has length {} but needs {x}", ri + 1, self.rows[ri].len()));
                    }
                    ri += 1;
                    y += 1;
                }
                RectStep::E => {
                    let col = &self.cols[ci];
                    if col.len() != y {
                        return bad(format!("column {} has length {} but needs {y}", ci + 1, col.len()));
                    }
                    if !col.is_empty() && col.tiles()[0] != Tile::Domino {
                        return bad(format!("column {} does not begin with a domino", ci + 1));
                    }
                    ci += 1;
                    x += 1;
                }
            }
        }
        Ok(())
    }
}

/// Sends a binomial partial tiling of `delta_n` with path from `(k, 0)` to
/// the `k x (n-k)` rectangle model. Reading the north steps from the top,
/// NI steps become north steps carrying the fixed tiles on their left, and
/// NL steps become east steps carrying the fixed tiles on their right.
pub fn to_rectangle_model(p: &PartialTiling) -> Result<RectangleTiling, ShapeError> {
    let Variant::Binomial { n, k } = p.variant else {
        return Err(ShapeError::InvalidParameters("rectangle model needs a binomial partial tiling".into()));
    };
    let mut out = RectangleTiling { width: k, height: n - k, path: vec![], rows: vec![], cols: vec![] };
    for step in p.path.north_steps().iter().rev() {
        let strip = p
            .rows
            .get(step.row as usize - 1)
            .map(PartialRow::fixed_strip)
            .unwrap_or_default();
        match step.label {
            Label::NI => {
                out.path.push(RectStep::N);
                out.rows.push(strip);
            }
            Label::NL => {
                out.path.push(RectStep::E);
                out.cols.push(strip);
            }
        }
    }
    out.validate()?;
    Ok(out)
}

/// Inverse of [`to_rectangle_model`].
pub fn from_rectangle_model(r: &RectangleTiling) -> Result<PartialTiling, ShapeError> {
    r.validate()?;
    let n = r.width + r.height;
    let k = r.width;
    let mut steps = Vec::new();
    let mut rows = Vec::new();
    let (mut ri, mut ci) = (r.rows.len(), r.cols.len());
    for (idx, step) in r.path.iter().rev().enumerate() {
        // row n of delta_n has length zero and is not stored
        let row = idx as u32 + 1;
        match step {
            RectStep::N => {
                steps.push(Step::N);
                ri -= 1;
                if row < n {
                    rows.push(PartialRow::left(n - row, &r.rows[ri]));
                }
            }
            RectStep::E => {
                steps.extend([Step::W, Step::N]);
                ci -= 1;
                if row < n {
                    rows.push(PartialRow::right(n - row, &r.cols[ci]));
                }
            }
        }
    }
    let labels = binomial_labels(&steps);
    Ok(PartialTiling {
        variant: Variant::Binomial { n, k },
        rows,
        path: LatticePath { start: (k, 0), steps, labels },
    })
}
