use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Shape, ShapeError, Tiling};
use crate::coxcat;
use crate::lucas;
use crate::polyring::{Poly2, PolyError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    N,
    W,
}

/// Classification of a north step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Label {
    NI,
    NL,
}

/// A north/west lattice path with one label per north step.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    pub start: (u32, u32),
    pub steps: Vec<Step>,
    pub labels: Vec<Label>,
}

/// One north step: it enters `row` along the vertical line `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NorthStep {
    pub row: u32,
    pub x: u32,
    pub label: Label,
}

impl LatticePath {
    pub fn empty() -> Self {
        Self { start: (0, 0), steps: vec![], labels: vec![] }
    }

    pub fn north_steps(&self) -> Vec<NorthStep> {
        let (mut x, mut y) = self.start;
        let mut out = Vec::with_capacity(self.labels.len());
        for step in &self.steps {
            match step {
                Step::W => x -= 1,
                Step::N => {
                    y += 1;
                    out.push(NorthStep { row: y, x, label: self.labels[out.len()] });
                }
            }
        }
        out
    }

    pub fn end(&self) -> (u32, u32) {
        let w = self.steps.iter().filter(|&&s| s == Step::W).count() as u32;
        (self.start.0 - w, self.start.1 + self.labels.len() as u32)
    }

    /// Lattice points visited, start included.
    pub fn points(&self) -> Vec<(u32, u32)> {
        let (mut x, mut y) = self.start;
        let mut out = vec![(x, y)];
        for step in &self.steps {
            match step {
                Step::W => x -= 1,
                Step::N => y += 1,
            }
            out.push((x, y));
        }
        out
    }

    /// Parses a word over `N`/`W` with labels set by the binomial rule.
    /// A path labelled by the binomial rule.
    pub fn binomial(start: (u32, u32), steps: Vec<Step>) -> Self {
        let labels = binomial_labels(&steps);
        Self { start, steps, labels }
    }

    pub fn parse_binomial(start: (u32, u32), word: &str) -> Result<Self, ShapeError> {
        let steps = word
            .chars()
            .map(|c| match c {
                'N' => Ok(Step::N),
                'W' => Ok(Step::W),
                _ => Err(ShapeError::Parse(format!("unexpected path letter {c:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let w = steps.iter().filter(|&&s| s == Step::W).count() as u32;
        if w > start.0 {
            return Err(ShapeError::Parse("path leaves the first quadrant".into()));
        }
        let labels = binomial_labels(&steps);
        Ok(Self { start, steps, labels })
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::N => "N",
                Step::W => "W",
            })?;
        }
        Ok(())
    }
}

/// A north step is NL exactly when a west step precedes it.
pub(crate) fn binomial_labels(steps: &[Step]) -> Vec<Label> {
    let mut prev = None;
    let mut labels = Vec::new();
    for &s in steps {
        if s == Step::N {
            labels.push(if prev == Some(Step::W) { Label::NL } else { Label::NI });
        }
        prev = Some(s);
    }
    labels
}

/// The four block partitions, each with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Variant {
    /// `delta_n`, path from `(k, 0)`.
    Binomial { n: u32, k: u32 },
    /// `delta_{2n}`, path from `(n - 1, 0)`.
    Catalan { n: u32 },
    /// `delta_{(k+1)n}`, path from `(n - 1, 0)`.
    FussCatalan { n: u32, k: u32 },
    /// `delta_{n:d}`, path from `(kd, 0)`.
    DDivisible { n: u32, k: u32, d: u32 },
}

/// `binomial:n:k`, `catalan:n`, `fuss:n:k` or `ddiv:n:k:d`.
impl std::str::FromStr for Variant {
    type Err = ShapeError;

    fn from_str(text: &str) -> Result<Self, ShapeError> {
        let bad = || ShapeError::Parse(format!("unrecognized variant {text:?}"));
        let parts: Vec<&str> = text.trim().split(':').collect();
        let nums = parts[1..]
            .iter()
            .map(|p| p.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        let v = match (parts[0].to_ascii_lowercase().as_str(), nums.as_slice()) {
            ("binomial", &[n, k]) => Variant::Binomial { n, k },
            ("catalan", &[n]) => Variant::Catalan { n },
            ("fuss", &[n, k]) => Variant::FussCatalan { n, k },
            ("ddiv", &[n, k, d]) => Variant::DDivisible { n, k, d },
            _ => return Err(bad()),
        };
        v.validate()?;
        Ok(v)
    }
}

impl Variant {
    pub fn validate(&self) -> Result<(), ShapeError> {
        let bad = |msg: String| Err(ShapeError::InvalidParameters(msg));
        match *self {
            Variant::Binomial { n, k } if k > n => bad(format!("binomial needs k <= n, got n={n}, k={k}")),
            Variant::FussCatalan { k: 0, .. } => bad("Fuss-Catalan needs k >= 1".into()),
            Variant::DDivisible { d: 0, .. } => bad("d must be positive".into()),
            Variant::DDivisible { n, k, .. } if k > n => {
                bad(format!("d-divisible needs k <= n, got n={n}, k={k}"))
            }
            _ => {
                let shape_rows = self.height();
                if shape_rows > super::MAX_ROW_LEN {
                    return bad(format!("shape with {shape_rows} rows is too large"));
                }
                Ok(())
            }
        }
    }

    pub fn shape(&self) -> Shape {
        match *self {
            Variant::Binomial { n, .. } => Shape::staircase(n),
            Variant::Catalan { n } => Shape::staircase(2 * n),
            Variant::FussCatalan { n, k } => Shape::staircase((k + 1) * n),
            Variant::DDivisible { n, d, .. } => Shape::d_staircase(n, d),
        }
    }

    /// Number of north steps; the path ends at `(0, height)`.
    pub fn height(&self) -> u32 {
        match *self {
            Variant::Binomial { n, .. } => n,
            Variant::Catalan { n } => 2 * n,
            Variant::FussCatalan { n, k } => (k + 1) * n,
            Variant::DDivisible { n, .. } => n,
        }
    }

    pub fn start(&self) -> (u32, u32) {
        match *self {
            Variant::Binomial { k, .. } => (k, 0),
            Variant::Catalan { n } | Variant::FussCatalan { n, .. } => (n.saturating_sub(1), 0),
            Variant::DDivisible { k, d, .. } => (k * d, 0),
        }
    }

    /// The factor dividing every block weight.
    pub fn divisor(&self) -> Poly2 {
        match *self {
            Variant::Binomial { n, k } => &lucas::lucastorial(k) * &lucas::lucastorial(n - k),
            Variant::Catalan { n } => &lucas::lucastorial(n) * &lucas::lucastorial(n + 1),
            Variant::FussCatalan { n, k } => &lucas::lucastorial(n) * &lucas::lucastorial(k * n + 1),
            Variant::DDivisible { n, k, d } => {
                &lucas::d_lucastorial(k, d) * &lucas::d_lucastorial(n - k, d)
            }
        }
    }

    /// The algebraic quantity the partial weights sum to.
    pub fn expected_sum(&self) -> Result<Poly2, PolyError> {
        match *self {
            Variant::Binomial { n, k } => lucas::lucasnomial(n, k as i64),
            Variant::Catalan { n } => coxcat::lucas_catalan(n),
            Variant::FussCatalan { n, k } => coxcat::fuss_catalan(n, k),
            Variant::DDivisible { n, k, d } => lucas::d_lucasnomial(n, k as i64, d),
        }
    }

    pub fn name(&self) -> String {
        match *self {
            Variant::Binomial { n, k } => format!("binomial(n={n},k={k})"),
            Variant::Catalan { n } => format!("catalan(n={n})"),
            Variant::FussCatalan { n, k } => format!("fuss(n={n},k={k})"),
            Variant::DDivisible { n, k, d } => format!("d-divisible(n={n},k={k},d={d})"),
        }
    }

    /// `Some(d)` when north steps obey the congruence rule.
    fn modulus(&self) -> Option<u32> {
        match *self {
            // for d = 1 both residue classes coincide; the plain rule applies
            Variant::DDivisible { d, .. } if d >= 2 => Some(d),
            _ => None,
        }
    }
}

/// The greedy path: from each point it steps north whenever that stays in
/// the (boundary-extended) diagram, crosses no domino and, for the
/// d-divisible variant, respects the congruence rule; otherwise west.
pub fn path_from_tiling(tiling: &Tiling, variant: &Variant) -> LatticePath {
    let shape = variant.shape();
    let height = variant.height();
    let start = variant.start();
    if height == 0 {
        return LatticePath { start, steps: vec![], labels: vec![] };
    }
    let modulus = variant.modulus();
    let (mut x, mut y) = start;
    let mut steps = Vec::with_capacity((height + start.0) as usize);
    let mut labels = Vec::with_capacity(height as usize);
    let mut used_lines = 0u128;
    while y < height {
        let row = y + 1;
        let mut ok = x <= shape.outer_at(row) && !tiling.row(row).domino_at(x);
        if let Some(d) = modulus {
            ok &= x % d == 0 || (x % d == d - 1 && used_lines >> x & 1 == 0);
        }
        if ok {
            let label = match modulus {
                Some(d) => {
                    if x % d == d - 1 {
                        used_lines |= 1 << x;
                    }
                    if x % d == 0 {
                        Label::NI
                    } else {
                        Label::NL
                    }
                }
                None if steps.last() == Some(&Step::W) => Label::NL,
                None => Label::NI,
            };
            steps.push(Step::N);
            labels.push(label);
            y += 1;
        } else {
            assert!(x > 0, "greedy path stuck at ({x}, {y})");
            steps.push(Step::W);
            x -= 1;
        }
    }
    // a d-divisible path may reach the top row on a line x = d-1
    steps.extend(std::iter::repeat_n(Step::W, x as usize));
    LatticePath { start, steps, labels }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{enumerate_tilings, Strip, Tile};

    use Tile::{Domino as D, Monomino as M};

    fn tiling(shape: &Shape, rows: &[&[Tile]]) -> Tiling {
        let strips: Vec<Strip> = rows.iter().map(|r| Strip::new(r.to_vec())).collect();
        Tiling::from_strips(shape, &strips).unwrap()
    }

    /// The six-row staircase tiling whose binomial path from `(3, 0)` is
    /// `WNNWNNNWN`.
    pub(crate) fn r2_tiling() -> Tiling {
        tiling(
            &Shape::staircase(6),
            &[&[M, M, D, M], &[D, M, M], &[M, D], &[M, M], &[M]],
        )
    }

    #[test]
    fn worked_path_is_reproduced() {
        let p = path_from_tiling(&r2_tiling(), &Variant::Binomial { n: 6, k: 3 });
        assert_eq!(p.to_string(), "WNNWNNNWN");
        assert_eq!(p.end(), (0, 6));
        use Label::*;
        assert_eq!(p.labels, vec![NL, NI, NL, NI, NI, NL]);
    }

    #[test]
    fn all_monomino_path() {
        for n in 1..7 {
            for k in 0..=n {
                let shape = Shape::staircase(n);
                let t = Tiling { rows: shape.row_lengths().iter().map(|&len| super::super::RowTiling { len, dominoes: 0 }).collect() };
                let p = path_from_tiling(&t, &Variant::Binomial { n, k });
                let expected = "N".repeat((n - k) as usize) + &"WN".repeat(k as usize);
                assert_eq!(p.to_string(), expected);
            }
        }
    }

    #[test]
    fn every_binomial_path_reaches_the_top() {
        for n in 0..7 {
            for k in 0..=n {
                let v = Variant::Binomial { n, k };
                for t in enumerate_tilings(&v.shape()) {
                    let p = path_from_tiling(&t, &v);
                    assert_eq!(p.end(), (0, n));
                    let nl = p.labels.iter().filter(|&&l| l == Label::NL).count() as u32;
                    assert_eq!(nl, k);
                }
            }
        }
    }

    #[test]
    fn two_divisible_worked_path() {
        // rows 7, 5, 3, 1 of delta_{4:2}
        let shape = Shape::d_staircase(4, 2);
        let t = tiling(&shape, &[&[D, M, D, M, M], &[M, D, D], &[M, M, M], &[M]]);
        let p = path_from_tiling(&t, &Variant::DDivisible { n: 4, k: 2, d: 2 });
        assert_eq!(p.to_string(), "WNWWNWNN");
        assert_eq!(
            p.points(),
            vec![(4, 0), (3, 0), (3, 1), (2, 1), (1, 1), (1, 2), (0, 2), (0, 3), (0, 4)]
        );
        assert_eq!(p.labels, vec![Label::NL, Label::NL, Label::NI, Label::NI]);
    }

    #[test]
    fn variant_strings() {
        assert_eq!("binomial:6:3".parse::<Variant>().unwrap(), Variant::Binomial { n: 6, k: 3 });
        assert_eq!("ddiv:4:2:2".parse::<Variant>().unwrap(), Variant::DDivisible { n: 4, k: 2, d: 2 });
        assert!("binomial:3:4".parse::<Variant>().is_err());
        assert!("fuss:3".parse::<Variant>().is_err());
    }

    #[test]
    fn parse_binomial_words() {
        let p = LatticePath::parse_binomial((3, 0), "WNNWNNNWN").unwrap();
        assert_eq!(p, path_from_tiling(&r2_tiling(), &Variant::Binomial { n: 6, k: 3 }));
        assert!(LatticePath::parse_binomial((0, 0), "WN").is_err());
        assert!(LatticePath::parse_binomial((1, 0), "WX").is_err());
    }
}
