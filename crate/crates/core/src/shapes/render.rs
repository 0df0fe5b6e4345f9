//! Text and SVG pictures: a dot in every monomino, two joined dots for a
//! domino, blank cells left empty and the lattice path drawn thick.

use std::fmt::Write as _;

use super::partial::{Cell, PartialRow, PartialTiling};
use super::path::{LatticePath, Step};
use super::{Shape, Tiling};

/// Everything a picture needs: per-row cell states with their column
/// offsets, and an optional path.
struct Canvas {
    rows: Vec<(u32, Vec<Cell>)>,
    path: Option<LatticePath>,
}

impl Canvas {
    fn from_tiling(shape: &Shape, tiling: &Tiling, path: Option<&LatticePath>) -> Self {
        let rows = tiling
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let offset = shape.inner.get(i).copied().unwrap_or(0);
                let full = PartialRow { len: r.len, fixed: mask(r.len), dominoes: r.dominoes, cuts: 0 };
                (offset, full.cells())
            })
            .collect();
        Self { rows, path: path.cloned() }
    }

    fn from_partial(p: &PartialTiling) -> Self {
        Self {
            rows: p.rows.iter().map(|r| (0, r.cells())).collect(),
            path: Some(p.path.clone()),
        }
    }

    fn width(&self) -> u32 {
        let cells = self.rows.iter().map(|(o, c)| o + c.len() as u32).max().unwrap_or(0);
        let path = self.path.as_ref().map_or(0, |p| p.start.0);
        cells.max(path) + 1
    }

    fn height(&self) -> u32 {
        let path = self.path.as_ref().map_or(0, |p| p.end().1);
        (self.rows.len() as u32).max(path)
    }

    fn ascii(&self) -> String {
        let h = self.height();
        let w = self.width();
        let mut grid = vec![vec![' '; (4 * w + 1) as usize]; (2 * h + 1) as usize];
        let at = |x: u32, y: u32| ((2 * (h - y)) as usize, (4 * x) as usize);
        // borders first, so contents drawn afterwards can bridge them
        for (i, (offset, cells)) in self.rows.iter().enumerate() {
            for j in 0..cells.len() {
                let (r0, c0) = at(offset + j as u32, i as u32 + 1);
                for r in [r0, r0 + 2] {
                    grid[r][c0 + 1..c0 + 4].fill('-');
                    grid[r][c0] = '+';
                    grid[r][c0 + 4] = '+';
                }
                grid[r0 + 1][c0] = '|';
                grid[r0 + 1][c0 + 4] = '|';
            }
        }
        for (i, (offset, cells)) in self.rows.iter().enumerate() {
            for (j, cell) in cells.iter().enumerate() {
                let (r0, c0) = at(offset + j as u32, i as u32 + 1);
                let centre = c0 + 2;
                match cell {
                    Cell::Blank => {}
                    Cell::Monomino | Cell::DominoRight => grid[r0 + 1][centre] = 'o',
                    Cell::DominoLeft => {
                        grid[r0 + 1][centre] = 'o';
                        grid[r0 + 1][centre + 1..centre + 4].fill('-');
                    }
                }
            }
        }
        if let Some(path) = &self.path {
            let (mut x, mut y) = path.start;
            for step in &path.steps {
                let (r, c) = at(x, y);
                match step {
                    Step::N => {
                        for line in &mut grid[r - 2..=r] {
                            line[c] = '#';
                        }
                        y += 1;
                    }
                    Step::W => {
                        grid[r][c - 4..=c].fill('#');
                        x -= 1;
                    }
                }
            }
        }
        let mut out = String::new();
        for line in grid {
            let s: String = line.into_iter().collect();
            out.push_str(s.trim_end());
            out.push('\n');
        }
        out
    }

    fn svg(&self) -> String {
        const U: f64 = 30.0;
        const M: f64 = 20.0;
        let h = self.height() as f64;
        let w = self.width() as f64;
        let px = |x: f64| M + x * U;
        let py = |y: f64| M + (h - y) * U;
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
            2.0 * M + w * U,
            2.0 * M + h * U,
            2.0 * M + w * U,
            2.0 * M + h * U
        );
        let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
        for (i, (offset, cells)) in self.rows.iter().enumerate() {
            let y = i as f64;
            for (j, cell) in cells.iter().enumerate() {
                let x = (*offset as usize + j) as f64;
                let _ = writeln!(
                    s,
                    r#"<rect x="{}" y="{}" width="{U}" height="{U}" fill="none" stroke="black" stroke-width="1"/>"#,
                    px(x),
                    py(y + 1.0)
                );
                let (cx, cy) = (px(x + 0.5), py(y + 0.5));
                match cell {
                    Cell::Blank => {}
                    Cell::Monomino | Cell::DominoRight => {
                        let _ = writeln!(s, r#"<circle cx="{cx}" cy="{cy}" r="4" fill="black"/>"#);
                    }
                    Cell::DominoLeft => {
                        let _ = writeln!(s, r#"<circle cx="{cx}" cy="{cy}" r="4" fill="black"/>"#);
                        let _ = writeln!(
                            s,
                            r#"<line x1="{cx}" y1="{cy}" x2="{}" y2="{cy}" stroke="black" stroke-width="2"/>"#,
                            cx + U
                        );
                    }
                }
            }
        }
        if let Some(path) = &self.path {
            let pts: Vec<String> = path
                .points()
                .iter()
                .map(|&(x, y)| format!("{},{}", px(x as f64), py(y as f64)))
                .collect();
            let _ = writeln!(
                s,
                r#"<polyline points="{}" fill="none" stroke="black" stroke-width="5" stroke-linejoin="round"/>"#,
                pts.join(" ")
            );
        }
        s.push_str("</svg>\n");
        s
    }
}

fn mask(len: u32) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// ASCII picture of a partial tiling with its path.
pub fn render_ascii(p: &PartialTiling) -> String {
    Canvas::from_partial(p).ascii()
}

/// SVG picture of a partial tiling with its path.
pub fn render_svg(p: &PartialTiling) -> String {
    Canvas::from_partial(p).svg()
}

/// ASCII picture of a full tiling, optionally with a path.
pub fn render_tiling_ascii(shape: &Shape, tiling: &Tiling, path: Option<&LatticePath>) -> String {
    Canvas::from_tiling(shape, tiling, path).ascii()
}

/// SVG picture of a full tiling, optionally with a path.
pub fn render_tiling_svg(shape: &Shape, tiling: &Tiling, path: Option<&LatticePath>) -> String {
    Canvas::from_tiling(shape, tiling, path).svg()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{partial_from_tiling, Strip, Tile, Variant};

    use Tile::{Domino as D, Monomino as M};

    fn worked_partial() -> PartialTiling {
        let strips: Vec<Strip> = [&[M, M, D, M][..], &[D, M, M], &[M, D], &[M, M], &[M]]
            .iter()
            .map(|r| Strip::new(r.to_vec()))
            .collect();
        let t = Tiling::from_strips(&Shape::staircase(6), &strips).unwrap();
        partial_from_tiling(&t, &Variant::Binomial { n: 6, k: 3 })
    }

    #[test]
    fn ascii_worked_partial() {
        let expected = "\
#
#
#####
| o #
+---#---+
| o #   |
+---#---+---+
|   # o---o |
+---#####---+---+
| o---o #   |   |
+---+---#---+---+---+
|   |   # o---o | o |
+---+---#####---+---+
";
        assert_eq!(render_ascii(&worked_partial()), expected);
    }

    #[test]
    fn svg_is_well_formed() {
        let svg = render_svg(&worked_partial());
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<circle").count(), 9);
        assert_eq!(svg.matches("<line").count(), 3);
        assert_eq!(svg.matches("<polyline").count(), 1);
    }

    #[test]
    fn full_tiling_pictures() {
        let shape = Shape::skew(vec![3, 2], vec![1]).unwrap();
        let t = Tiling::from_strips(&shape, &[Strip::new(vec![D]), Strip::new(vec![M, M])]).unwrap();
        let art = render_tiling_ascii(&shape, &t, None);
        assert!(art.contains("o---o"));
        assert!(render_tiling_svg(&shape, &t, None).contains("<line"));
    }
}
