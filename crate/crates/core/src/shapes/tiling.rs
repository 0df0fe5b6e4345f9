use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Shape, ShapeError};
use crate::exec::Exec;
use crate::polyring::Poly2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Tile {
    #[serde(rename = "M")]
    Monomino,
    #[serde(rename = "D")]
    Domino,
}

impl Tile {
    /// Number of cells covered.
    pub fn cells(self) -> u32 {
        match self {
            Tile::Monomino => 1,
            Tile::Domino => 2,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Tile::Monomino => "M",
            Tile::Domino => "D",
        }
    }

    pub fn from_token(tok: &str) -> Result<Self, ShapeError> {
        match tok {
            "M" => Ok(Tile::Monomino),
            "D" => Ok(Tile::Domino),
            _ => Err(ShapeError::Parse(format!("unknown tile token {tok:?}"))),
        }
    }
}

/// A row of cells covered by tiles, left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Strip {
    tiles: Vec<Tile>,
}

impl Strip {
    pub fn new(tiles: Vec<Tile>) -> Self {
        Self { tiles }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn monominoes(len: u32) -> Self {
        Self::new(vec![Tile::Monomino; len as usize])
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn len(&self) -> u32 {
        self.tiles.iter().map(|t| t.cells()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn num_dominoes(&self) -> u32 {
        self.tiles.iter().filter(|&&t| t == Tile::Domino).count() as u32
    }

    pub fn num_monominoes(&self) -> u32 {
        self.tiles.len() as u32 - self.num_dominoes()
    }

    pub fn weight(&self) -> Poly2 {
        Poly2::monomial(1, self.num_monominoes(), self.num_dominoes())
    }

    /// Cell offsets where dominoes start.
    pub fn domino_mask(&self) -> u64 {
        let mut mask = 0u64;
        let mut pos = 0;
        for t in &self.tiles {
            if *t == Tile::Domino {
                mask |= 1 << pos;
            }
            pos += t.cells();
        }
        mask
    }

    /// Bits that cannot start a domino (covered cells, the last cell) are
    /// ignored.
    pub fn from_mask(len: u32, dominoes: u64) -> Self {
        let mut tiles = Vec::new();
        let mut pos = 0;
        while pos < len {
            if pos + 1 < len && dominoes >> pos & 1 == 1 {
                tiles.push(Tile::Domino);
                pos += 2;
            } else {
                tiles.push(Tile::Monomino);
                pos += 1;
            }
        }
        Self { tiles }
    }

    /// Every tiling of a row of length `len`, in lexicographic order of the
    /// tile sequence with monominoes first.
    pub fn all(len: u32) -> Vec<Strip> {
        fn go(rem: u32, cur: &mut Vec<Tile>, out: &mut Vec<Strip>) {
            if rem == 0 {
                out.push(Strip::new(cur.clone()));
                return;
            }
            cur.push(Tile::Monomino);
            go(rem - 1, cur, out);
            cur.pop();
            if rem >= 2 {
                cur.push(Tile::Domino);
                go(rem - 2, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(len, &mut Vec::new(), &mut out);
        out
    }

    pub fn tokens(&self) -> Vec<&'static str> {
        self.tiles.iter().map(|t| t.token()).collect()
    }
}

impl fmt::Display for Strip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.tiles {
            f.write_str(t.token())?;
        }
        Ok(())
    }
}

/// Letters `M` and `D`; whitespace is ignored and `-` is the empty strip.
impl std::str::FromStr for Strip {
    type Err = ShapeError;

    fn from_str(text: &str) -> Result<Self, ShapeError> {
        text.chars()
            .filter(|c| !c.is_whitespace() && *c != '-')
            .map(|c| match c.to_ascii_uppercase() {
                'M' => Ok(Tile::Monomino),
                'D' => Ok(Tile::Domino),
                other => Err(ShapeError::Parse(format!("unknown tile {other:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Strip::new)
    }
}

/// One tiled row; bit `j` of `dominoes` marks a domino on the row's cells
/// `j` and `j + 1` (0-based from the row's left end).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RowTiling {
    pub len: u32,
    pub dominoes: u64,
}

impl RowTiling {
    pub fn num_dominoes(&self) -> u32 {
        self.dominoes.count_ones()
    }

    pub fn num_monominoes(&self) -> u32 {
        self.len - 2 * self.num_dominoes()
    }

    /// Whether a domino covers the row's 1-based columns `x` and `x + 1`.
    pub fn domino_at(&self, x: u32) -> bool {
        x >= 1 && x < self.len && self.dominoes >> (x - 1) & 1 == 1
    }

    pub fn to_strip(&self) -> Strip {
        Strip::from_mask(self.len, self.dominoes)
    }

    /// All domino masks for a row of length `len`.
    pub fn all_masks(len: u32) -> Vec<u64> {
        Strip::all(len).iter().map(Strip::domino_mask).collect()
    }
}

/// A tiling of every row of a shape, bottom row first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tiling {
    pub rows: Vec<RowTiling>,
}

impl Tiling {
    pub fn from_strips(shape: &Shape, strips: &[Strip]) -> Result<Self, ShapeError> {
        let lens = shape.row_lengths();
        if lens.len() != strips.len() {
            return Err(ShapeError::Parse(format!(
                "expected {} rows, found {}",
                lens.len(),
                strips.len()
            )));
        }
        let rows = lens
            .iter()
            .zip(strips)
            .enumerate()
            .map(|(i, (&len, s))| {
                if s.len() != len {
                    return Err(ShapeError::Parse(format!(
                        "row {} has length {len} but its tiles cover {}",
                        i + 1,
                        s.len()
                    )));
                }
                Ok(RowTiling { len, dominoes: s.domino_mask() })
            })
            .collect::<Result<_, _>>()?;
        Ok(Self { rows })
    }

    /// Row `i` (1-indexed); rows above the diagram are empty.
    pub fn row(&self, i: u32) -> RowTiling {
        self.rows
            .get((i as usize).wrapping_sub(1))
            .copied()
            .unwrap_or(RowTiling { len: 0, dominoes: 0 })
    }

    pub fn strips(&self) -> Vec<Strip> {
        self.rows.iter().map(RowTiling::to_strip).collect()
    }

    pub fn counts(&self) -> (u32, u32) {
        self.rows.iter().fold((0, 0), |(m, d), r| (m + r.num_monominoes(), d + r.num_dominoes()))
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({ "rows": self.strips().iter().map(|s| s.tokens()).collect::<Vec<_>>() })
    }

    pub fn from_json_value(shape: &Shape, value: &serde_json::Value) -> Result<Self, ShapeError> {
        let rows: Vec<Vec<String>> = serde_json::from_value(value["rows"].clone())
            .map_err(|e| ShapeError::Parse(e.to_string()))?;
        let strips = rows
            .iter()
            .map(|r| r.iter().map(|t| Tile::from_token(t)).collect::<Result<Vec<_>, _>>().map(Strip::new))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_strips(shape, &strips)
    }
}

/// The set of tilings of a shape, addressable by index without
/// materializing it. Index order is lexicographic in the rows, bottom row
/// most significant.
#[derive(Debug, Clone)]
pub struct TilingSpace {
    shape: Shape,
    lens: Vec<u32>,
    options: Vec<Vec<u64>>,
    count: usize,
}

impl TilingSpace {
    pub fn new(shape: &Shape) -> Self {
        let lens = shape.row_lengths();
        let options: Vec<Vec<u64>> = lens.iter().map(|&l| RowTiling::all_masks(l)).collect();
        let count = options
            .iter()
            .try_fold(1usize, |acc, o| acc.checked_mul(o.len()))
            .expect("tiling count overflows usize");
        Self { shape: shape.clone(), lens, options, count }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn get(&self, mut index: usize) -> Tiling {
        assert!(index < self.count, "tiling index out of range");
        let mut rows = vec![RowTiling { len: 0, dominoes: 0 }; self.lens.len()];
        for i in (0..self.lens.len()).rev() {
            let radix = self.options[i].len();
            rows[i] = RowTiling { len: self.lens[i], dominoes: self.options[i][index % radix] };
            index /= radix;
        }
        Tiling { rows }
    }

    pub fn iter(&self) -> impl Iterator<Item = Tiling> + '_ {
        (0..self.count).map(|i| self.get(i))
    }
}

/// All tilings of `shape`, each exactly once, in [`TilingSpace`] order.
pub fn enumerate_tilings(shape: &Shape) -> Vec<Tiling> {
    TilingSpace::new(shape).iter().collect()
}

/// `s^(monominoes) t^(dominoes)`.
pub fn tiling_weight(tiling: &Tiling) -> Poly2 {
    let (m, d) = tiling.counts();
    Poly2::monomial(1, m, d)
}

/// Sum of the weights of all tilings.
pub fn shape_weight(shape: &Shape) -> Poly2 {
    shape_weight_with(shape, Exec::default())
}

pub fn shape_weight_with(shape: &Shape, exec: Exec) -> Poly2 {
    let space = TilingSpace::new(shape);
    let counts = exec.fold_range(
        space.len(),
        HashMap::<(u32, u32), u64>::new,
        |mut acc, i| {
            *acc.entry(space.get(i).counts()).or_default() += 1;
            acc
        },
        merge_counts,
    );
    monomial_counts_to_poly(&counts)
}

pub(crate) fn merge_counts(
    mut a: HashMap<(u32, u32), u64>,
    b: HashMap<(u32, u32), u64>,
) -> HashMap<(u32, u32), u64> {
    for (k, v) in b {
        *a.entry(k).or_default() += v;
    }
    a
}

pub(crate) fn monomial_counts_to_poly(counts: &HashMap<(u32, u32), u64>) -> Poly2 {
    Poly2::from_terms(counts.iter().map(|(&(a, b), &c)| (a, b, c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lucas::{d_lucastorial, lucas, lucastorial};

    fn fib(n: u32) -> usize {
        let (mut a, mut b) = (0usize, 1usize);
        for _ in 0..n {
            (a, b) = (b, a + b);
        }
        a
    }

    #[test]
    fn row_counts_are_fibonacci() {
        assert_eq!(enumerate_tilings(&Shape::row(3)).len(), 3);
        for m in 0..=12 {
            assert_eq!(enumerate_tilings(&Shape::row(m)).len(), fib(m + 1));
        }
        assert_eq!(enumerate_tilings(&Shape::staircase(4)).len(), 6);
        assert_eq!(enumerate_tilings(&Shape::staircase(0)).len(), 1);
    }

    #[test]
    fn tilings_are_distinct_and_valid() {
        let shape = Shape::staircase(6);
        let all = enumerate_tilings(&shape);
        let unique: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(unique.len(), all.len());
        for t in &all {
            for r in &t.rows {
                assert_eq!(r.dominoes & (r.dominoes << 1), 0);
                assert!(r.len == 0 || r.dominoes >> (r.len - 1) == 0);
            }
        }
    }

    #[test]
    fn weights() {
        let three_monos = Tiling { rows: vec![RowTiling { len: 3, dominoes: 0 }] };
        assert_eq!(tiling_weight(&three_monos), Poly2::monomial(1, 3, 0));
        assert_eq!(tiling_weight(&Tiling { rows: vec![] }), Poly2::one());
        for n in 1..8 {
            assert_eq!(shape_weight(&Shape::row(n - 1)), lucas(n));
        }
        assert_eq!(shape_weight(&Shape::staircase(4)), lucastorial(4));
        assert_eq!(shape_weight(&Shape::d_staircase(3, 2)), d_lucastorial(3, 2));
    }

    #[test]
    fn strategies_agree_on_shape_weight() {
        let shape = Shape::staircase(7);
        assert_eq!(shape_weight_with(&shape, Exec::Sequential), shape_weight_with(&shape, Exec::Parallel));
    }

    #[test]
    fn strip_letters() {
        let s: Strip = "MDM".parse().unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(s.to_string().parse::<Strip>().unwrap(), s);
        assert_eq!("-".parse::<Strip>().unwrap(), Strip::empty());
        assert!("MX".parse::<Strip>().is_err());
    }

    #[test]
    fn strip_masks_round_trip() {
        for len in 0..9 {
            for s in Strip::all(len) {
                assert_eq!(Strip::from_mask(len, s.domino_mask()), s);
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let shape = Shape::staircase(5);
        for t in enumerate_tilings(&shape) {
            let v = t.to_json_value();
            assert_eq!(Tiling::from_json_value(&shape, &v).unwrap(), t);
        }
    }
}
