use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::path::{path_from_tiling, Label, LatticePath, Step, Variant};
use super::tiling::{merge_counts, monomial_counts_to_poly, RowTiling, Strip, Tile, TilingSpace};
use super::{ShapeError, Tiling};
use crate::exec::Exec;
use crate::polyring::Poly2;

/// State of one cell of a partial tiling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cell {
    Blank,
    Monomino,
    DominoLeft,
    DominoRight,
}

/// One row of a partial tiling. Bit `j` of `fixed` marks cell `j` (0-based)
/// as fixed; bit `j` of `dominoes` marks a fixed domino on cells `j, j+1`.
/// Bit `j` of `cuts` forbids a domino on cells `j, j+1` in any completion.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialRow {
    pub len: u32,
    pub fixed: u64,
    pub dominoes: u64,
    pub cuts: u64,
}

fn bits(lo: u32, hi: u32) -> u64 {
    if hi <= lo {
        return 0;
    }
    let width = hi - lo;
    let ones = if width >= 64 { u64::MAX } else { (1u64 << width) - 1 };
    ones << lo
}

impl PartialRow {
    pub fn blank(len: u32) -> Self {
        Self { len, fixed: 0, dominoes: 0, cuts: 0 }
    }

    /// Keeps the cells `lo..hi` (0-based, half-open) of a tiled row.
    pub fn restrict(row: RowTiling, lo: u32, hi: u32) -> Self {
        let fixed = bits(lo, hi.min(row.len));
        Self { len: row.len, fixed, dominoes: row.dominoes & fixed, cuts: 0 }
    }

    /// A row of length `len` whose leftmost cells carry `strip`.
    pub fn left(len: u32, strip: &Strip) -> Self {
        assert!(strip.len() <= len, "strip longer than its row");
        Self { len, fixed: bits(0, strip.len()), dominoes: strip.domino_mask(), cuts: 0 }
    }

    /// A row of length `len` whose rightmost cells carry `strip`.
    pub fn right(len: u32, strip: &Strip) -> Self {
        assert!(strip.len() <= len, "strip longer than its row");
        let off = len - strip.len();
        Self { len, fixed: bits(off, len), dominoes: strip.domino_mask() << off, cuts: 0 }
    }

    pub fn cell(&self, j: u32) -> Cell {
        if self.fixed >> j & 1 == 0 {
            Cell::Blank
        } else if self.dominoes >> j & 1 == 1 {
            Cell::DominoLeft
        } else if j > 0 && self.dominoes >> (j - 1) & 1 == 1 {
            Cell::DominoRight
        } else {
            Cell::Monomino
        }
    }

    pub fn cells(&self) -> Vec<Cell> {
        (0..self.len).map(|j| self.cell(j)).collect()
    }

    pub fn num_dominoes(&self) -> u32 {
        self.dominoes.count_ones()
    }

    pub fn num_monominoes(&self) -> u32 {
        self.fixed.count_ones() - 2 * self.num_dominoes()
    }

    /// Fixed tiles read left to right as one strip.
    pub fn fixed_strip(&self) -> Strip {
        let mut tiles = Vec::new();
        let mut j = 0;
        while j < self.len {
            match self.cell(j) {
                Cell::Blank | Cell::DominoRight => j += 1,
                Cell::Monomino => {
                    tiles.push(Tile::Monomino);
                    j += 1
                }
                Cell::DominoLeft => {
                    tiles.push(Tile::Domino);
                    j += 2
                }
            }
        }
        Strip::new(tiles)
    }

    /// Blank row of length `len` with a cut after cell `j`.
    pub fn blank_cut(len: u32, j: u32) -> Self {
        Self { cuts: 1 << j, ..Self::blank(len) }
    }

    /// Lengths of the maximal runs of blank cells, split at cuts.
    pub fn blank_runs(&self) -> Vec<u32> {
        let mut runs = Vec::new();
        let mut cur = 0;
        for j in 0..self.len {
            if self.fixed >> j & 1 == 0 {
                cur += 1;
                if self.cuts >> j & 1 == 0 {
                    continue;
                }
            }
            if cur > 0 {
                runs.push(cur);
                cur = 0;
            }
        }
        if cur > 0 {
            runs.push(cur);
        }
        runs
    }

    /// Whether a full row tiling extends this row.
    pub fn agrees_with(&self, row: RowTiling) -> bool {
        if row.len != self.len || row.dominoes & self.fixed != self.dominoes || row.dominoes & self.cuts != 0 {
            return false;
        }
        // a domino of the tiling must not stick out of the fixed region
        let straddles = (row.dominoes & !self.fixed) & (self.fixed >> 1);
        straddles == 0
    }

    pub fn tokens(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let mut j = 0;
        while j < self.len {
            match self.cell(j) {
                Cell::Blank => {
                    out.push(".");
                    j += 1
                }
                Cell::Monomino => {
                    out.push("M");
                    j += 1
                }
                Cell::DominoLeft => {
                    out.push("D");
                    j += 2
                }
                Cell::DominoRight => unreachable!("domino halves are consumed together"),
            }
            if j < self.len && self.cuts >> (j - 1) & 1 == 1 {
                out.push("|");
            }
        }
        out
    }

    pub fn from_tokens<S: AsRef<str>>(tokens: &[S]) -> Result<Self, ShapeError> {
        let mut row = Self::default();
        for tok in tokens {
            let j = row.len;
            match tok.as_ref() {
                "." => row.len += 1,
                "|" if j > 0 => row.cuts |= 1 << (j - 1),
                "M" => {
                    row.fixed |= 1 << j;
                    row.len += 1
                }
                "D" => {
                    row.fixed |= 0b11 << j;
                    row.dominoes |= 1 << j;
                    row.len += 2
                }
                other => return Err(ShapeError::Parse(format!("unknown cell token {other:?}"))),
            }
            if row.len > super::MAX_ROW_LEN {
                return Err(ShapeError::RowTooLong(row.len));
            }
        }
        Ok(row)
    }
}

/// A block representative: fixed tiles, blank cells and the path that
/// determined them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialTiling {
    pub variant: Variant,
    pub rows: Vec<PartialRow>,
    pub path: LatticePath,
}

#[derive(Serialize, Deserialize)]
struct PartialJson {
    variant: Variant,
    rows: Vec<Vec<String>>,
    path: String,
    start: [u32; 2],
}

impl PartialTiling {
    pub fn weight(&self) -> Poly2 {
        partial_weight(self)
    }

    /// Number of tilings extending this partial tiling.
    pub fn completions(&self) -> u64 {
        self.rows
            .iter()
            .flat_map(|r| r.blank_runs())
            .map(|m| fib(m + 1))
            .product()
    }

    pub fn agrees_with(&self, tiling: &Tiling) -> bool {
        self.rows.len() == tiling.rows.len()
            && self.rows.iter().zip(&tiling.rows).all(|(p, &t)| p.agrees_with(t))
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(PartialJson {
            variant: self.variant,
            rows: self
                .rows
                .iter()
                .map(|r| r.tokens().into_iter().map(String::from).collect())
                .collect(),
            path: self.path.to_string(),
            start: [self.path.start.0, self.path.start.1],
        })
        .expect("partial tiling serializes")
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    /// Reads a partial tiling, checking its shape against the variant.
    /// Labels are recomputed from the variant's rule.
    pub fn from_json_value(value: &serde_json::Value) -> Result<Self, ShapeError> {
        let raw: PartialJson =
            serde_json::from_value(value.clone()).map_err(|e| ShapeError::Parse(e.to_string()))?;
        raw.variant.validate()?;
        let rows = raw
            .rows
            .iter()
            .map(|r| PartialRow::from_tokens(r))
            .collect::<Result<Vec<_>, _>>()?;
        let lens: Vec<u32> = rows.iter().map(|r| r.len).collect();
        if lens != raw.variant.shape().row_lengths() {
            return Err(ShapeError::Parse(format!(
                "row lengths {lens:?} do not match {}",
                raw.variant.name()
            )));
        }
        let mut path = LatticePath::parse_binomial((raw.start[0], raw.start[1]), &raw.path)?;
        if let Variant::DDivisible { d, .. } = raw.variant {
            if d >= 2 {
                path.labels = path
                    .north_steps()
                    .iter()
                    .map(|s| if s.x % d == 0 { Label::NI } else { Label::NL })
                    .collect();
            }
        }
        if path.start != raw.variant.start() || path.end() != (0, raw.variant.height()) {
            return Err(ShapeError::Parse("path endpoints do not match the variant".into()));
        }
        Ok(Self { variant: raw.variant, rows, path })
    }

    pub fn from_json(text: &str) -> Result<Self, ShapeError> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| ShapeError::Parse(e.to_string()))?;
        Self::from_json_value(&value)
    }
}

fn fib(n: u32) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

/// The block representative of `tiling` under `variant`.
pub fn partial_from_tiling(tiling: &Tiling, variant: &Variant) -> PartialTiling {
    let path = path_from_tiling(tiling, variant);
    let mut rows: Vec<PartialRow> = tiling.rows.iter().map(|r| PartialRow::blank(r.len)).collect();
    for step in path.north_steps() {
        let i = step.row as usize - 1;
        if i >= rows.len() {
            continue;
        }
        let t = tiling.rows[i];
        rows[i] = match step.label {
            Label::NI => PartialRow::restrict(t, 0, step.x),
            Label::NL => PartialRow::restrict(t, step.x, t.len),
        };
    }
    match *variant {
        Variant::Catalan { n } if n >= 1 => {
            rows[0] = first_row_catalan_like(tiling.rows[0], &path, n, 1);
        }
        Variant::FussCatalan { n, k } if n >= 1 => {
            rows[0] = first_row_catalan_like(tiling.rows[0], &path, n, k);
        }
        _ => {}
    }
    PartialTiling { variant: *variant, rows, path }
}

/// First row for the Catalan (`k = 1`) and Fuss-Catalan partitions.
fn first_row_catalan_like(row: RowTiling, path: &LatticePath, n: u32, k: u32) -> PartialRow {
    if path.steps.first() != Some(&Step::W) {
        // no domino crosses the first north step
        return match n {
            0 | 1 => PartialRow::blank(row.len),
            _ => PartialRow::blank_cut(row.len, n - 2),
        };
    }
    // the path was blocked by a domino on [1, n-1], [1, n]
    let mut m = 1;
    while m < k && row.domino_at((m + 1) * n - 1) {
        m += 1;
    }
    // cells n-1 ..= row.len fixed, except [1, mn+1] ..= [1, (m+1)n-1]
    let right = PartialRow::restrict(row, n - 2, row.len);
    let free = bits(m * n, ((m + 1) * n - 1).min(row.len));
    PartialRow {
        len: row.len,
        fixed: right.fixed & !free,
        dominoes: right.dominoes & !free,
        cuts: 0,
    }
}

/// `s^a t^b` over the fixed tiles.
pub fn partial_weight(p: &PartialTiling) -> Poly2 {
    let (m, d) = p
        .rows
        .iter()
        .fold((0, 0), |(m, d), r| (m + r.num_monominoes(), d + r.num_dominoes()));
    Poly2::monomial(1, m, d)
}

/// Outcome of grouping all tilings of a shape into blocks.
#[derive(Debug, Clone)]
pub struct BlockReport {
    pub variant: Variant,
    pub tilings: u64,
    pub blocks: usize,
    pub partial_sum: Poly2,
    pub expected: Poly2,
    pub violations: Vec<String>,
}

impl BlockReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Default)]
struct BlockAcc {
    count: u64,
    weights: HashMap<(u32, u32), u64>,
}

#[derive(Default)]
struct SweepAcc {
    tilings: u64,
    blocks: HashMap<PartialTiling, BlockAcc>,
    disagreements: Vec<String>,
}

const MAX_REPORTED: usize = 20;

fn merge_sweeps(mut a: SweepAcc, b: SweepAcc) -> SweepAcc {
    a.tilings += b.tilings;
    for (p, acc) in b.blocks {
        let e = a.blocks.entry(p).or_default();
        e.count += acc.count;
        e.weights = merge_counts(std::mem::take(&mut e.weights), acc.weights);
    }
    a.disagreements.extend(b.disagreements);
    a.disagreements.truncate(MAX_REPORTED);
    a
}

fn sweep(variant: &Variant, exec: Exec) -> SweepAcc {
    let space = TilingSpace::new(&variant.shape());
    exec.fold_range(
        space.len(),
        SweepAcc::default,
        |mut acc, i| {
            let t = space.get(i);
            let p = partial_from_tiling(&t, variant);
            if !p.agrees_with(&t) && acc.disagreements.len() < MAX_REPORTED {
                acc.disagreements.push(format!("tiling #{i} disagrees with its representative"));
            }
            let e = acc.blocks.entry(p).or_default();
            e.count += 1;
            *e.weights.entry(t.counts()).or_default() += 1;
            acc.tilings += 1;
            acc
        },
        merge_sweeps,
    )
}

/// The distinct block representatives, in a deterministic order.
pub fn distinct_partials(variant: &Variant, exec: Exec) -> Result<Vec<PartialTiling>, ShapeError> {
    variant.validate()?;
    let acc = sweep(variant, exec);
    let mut keyed: BTreeMap<(Vec<PartialRow>, LatticePath), PartialTiling> = BTreeMap::new();
    for p in acc.blocks.into_keys() {
        keyed.insert((p.rows.clone(), p.path.clone()), p);
    }
    Ok(keyed.into_values().collect())
}

pub fn verify_block_partition(variant: &Variant) -> Result<BlockReport, ShapeError> {
    verify_block_partition_with(variant, Exec::default())
}

/// Groups every tiling by its representative and checks: each tiling
/// agrees with its representative, each block is exactly the set of
/// completions of its representative, each block weight is the variant
/// divisor times the representative's weight, and the representatives'
/// weights sum to the algebraic quantity.
pub fn verify_block_partition_with(variant: &Variant, exec: Exec) -> Result<BlockReport, ShapeError> {
    variant.validate()?;
    let acc = sweep(variant, exec);
    let divisor = variant.divisor();
    let expected = variant
        .expected_sum()
        .map_err(|e| ShapeError::InvalidParameters(format!("{}: {e}", variant.name())))?;
    let mut violations = acc.disagreements;

    let mut ordered: Vec<(&PartialTiling, &BlockAcc)> = acc.blocks.iter().collect();
    ordered.sort_by(|a, b| (&a.0.rows, &a.0.path).cmp(&(&b.0.rows, &b.0.path)));

    let mut covered = 0u64;
    let mut partial_sum = Poly2::zero();
    for (p, block) in ordered {
        covered += block.count;
        let pw = partial_weight(p);
        let bw = monomial_counts_to_poly(&block.weights);
        let label = || format!("block with path {} rows {:?}", p.path, p.rows.iter().map(|r| r.tokens().concat()).collect::<Vec<_>>());
        if block.count != p.completions() {
            violations.push(format!("{}: {} tilings but {} completions", label(), block.count, p.completions()));
        }
        match bw.exact_div(&divisor) {
            Ok(q) if q == pw => {}
            Ok(q) => violations.push(format!("{}: block weight / divisor = {q}, representative weight {pw}", label())),
            Err(_) => violations.push(format!("{}: divisor does not divide block weight {bw}", label())),
        }
        partial_sum += &pw;
        if violations.len() > MAX_REPORTED {
            break;
        }
    }
    if violations.is_empty() && covered != acc.tilings {
        violations.push(format!("blocks cover {covered} of {} tilings", acc.tilings));
    }
    if violations.is_empty() && partial_sum != expected {
        violations.push(format!("sum of representative weights {partial_sum} differs from {expected}"));
    }
    Ok(BlockReport {
        variant: *variant,
        tilings: acc.tilings,
        blocks: acc.blocks.len(),
        partial_sum,
        expected,
        violations,
    })
}
