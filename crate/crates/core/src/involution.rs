//! Strips, extended binomial partial tilings and the recursive involution
//! that exchanges types `(n, k, r)` and `(n, n-k+r, r)`, giving a bijective
//! proof of
//! `{k}{k-1}...{k-r+1} {n brace k} = {n-k+r}...{n-k+1} {n brace n-k+r}`.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exec::Exec;
use crate::lucas::symmetry_sides;
use crate::polyring::Poly2;
use crate::shapes::{
    distinct_partials, Label, LatticePath, PartialRow, PartialTiling, ShapeError, Step, Strip, Tile,
    Variant,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvolutionError {
    #[error("cutting a strip of length {len} after {at} cells splits a domino")]
    BrokenDomino { len: u32, at: u32 },
    #[error("malformed input after cases {trace:?}: {detail}")]
    Malformed { trace: String, detail: String },
    #[error(transparent)]
    Shape(#[from] ShapeError),
}

/// Which of the four cases applied at one level of the recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Case {
    A,
    B,
    C,
    D,
}

impl Case {
    pub fn letter(self) -> char {
        match self {
            Case::A => 'a',
            Case::B => 'b',
            Case::C => 'c',
            Case::D => 'd',
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

pub fn strip_concat(r: &Strip, s: &Strip) -> Strip {
    Strip::new(r.tiles().iter().chain(s.tiles()).copied().collect())
}

/// The first `c` cells of `s`.
pub fn strip_first(s: &Strip, c: u32) -> Result<Strip, InvolutionError> {
    let mut used = 0;
    let mut tiles = Vec::new();
    for &tile in s.tiles() {
        if used >= c {
            break;
        }
        used += tile.cells();
        tiles.push(tile);
    }
    if used != c {
        return Err(InvolutionError::BrokenDomino { len: s.len(), at: c });
    }
    Ok(Strip::new(tiles))
}

/// The last `c` cells of `s`.
pub fn strip_last(s: &Strip, c: u32) -> Result<Strip, InvolutionError> {
    if c > s.len() {
        return Err(InvolutionError::BrokenDomino { len: s.len(), at: c });
    }
    let rev = strip_first(&strip_reverse(s), c)
        .map_err(|_| InvolutionError::BrokenDomino { len: s.len(), at: s.len() - c })?;
    Ok(strip_reverse(&rev))
}

pub fn strip_reverse(s: &Strip) -> Strip {
    Strip::new(s.tiles().iter().rev().copied().collect())
}

/// NI when a north step from `(x, 0)` stays inside a row of length `len`
/// and `crosses(x)` reports no domino over columns `x, x+1`.
fn is_ni(len: u32, x: i64, mut crosses: impl FnMut(u32) -> bool) -> Label {
    if x < 0 || x > len as i64 || (x > 0 && crosses(x as u32)) {
        Label::NL
    } else {
        Label::NI
    }
}

/// Classifies `(x, 0)` against a strip embedded as a one-row diagram.
pub fn classify_strip_point(s: &Strip, x: i64) -> Label {
    let mut starts = HashSet::new();
    let mut col = 1;
    for &tile in s.tiles() {
        if tile == Tile::Domino {
            starts.insert(col);
        }
        col += tile.cells();
    }
    is_ni(s.len(), x, |x| starts.contains(&x))
}

/// Classifies `(x, 0)` against the bottom row of a partial tiling.
pub fn classify_row_point(row: &PartialRow, x: i64) -> Label {
    is_ni(row.len, x, |x| row.dominoes >> (x - 1) & 1 == 1)
}

/// A binomial partial tiling `B` of `delta_n` whose path starts at `(k, 0)`
/// together with fully tiled strips `S_1, ..., S_r`, `|S_i| = k - i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtendedTiling {
    pub b: PartialTiling,
    pub strips: Vec<Strip>,
}

#[derive(Serialize, Deserialize)]
struct ExtendedJson {
    #[serde(rename = "B")]
    b: serde_json::Value,
    strips: Vec<Strip>,
}

impl ExtendedTiling {
    pub fn new(b: PartialTiling, strips: Vec<Strip>) -> Result<Self, InvolutionError> {
        let e = Self { b, strips };
        e.validate()?;
        Ok(e)
    }

    /// `(n, k, r)`.
    pub fn kind(&self) -> (u32, u32, u32) {
        match self.b.variant {
            Variant::Binomial { n, k } => (n, k, self.strips.len() as u32),
            _ => (0, 0, 0),
        }
    }

    pub fn validate(&self) -> Result<(), InvolutionError> {
        let bad = |detail: String| Err(InvolutionError::Malformed { trace: String::new(), detail });
        let Variant::Binomial { n, k } = self.b.variant else {
            return bad("the tiling must be a binomial partial tiling".into());
        };
        let r = self.strips.len() as u32;
        if r > k || k > n {
            return bad(format!("type ({n},{k},{r}) violates r <= k <= n"));
        }
        for (i, s) in self.strips.iter().enumerate() {
            if s.len() != k - 1 - i as u32 {
                return bad(format!("strip {} has length {} but needs {}", i + 1, s.len(), k - 1 - i as u32));
            }
        }
        if self.b.path.start != (k, 0) || self.b.path.end() != (0, n) {
            return bad("path must run from (k, 0) to (0, n)".into());
        }
        Ok(())
    }

    pub fn weight(&self) -> Poly2 {
        &self.b.weight() * &self.strips.iter().map(Strip::weight).product::<Poly2>()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(ExtendedJson { b: self.b.to_json_value(), strips: self.strips.clone() })
            .expect("extended tiling serializes")
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    pub fn from_json(text: &str) -> Result<Self, InvolutionError> {
        let raw: ExtendedJson =
            serde_json::from_str(text).map_err(|e| ShapeError::Parse(e.to_string()))?;
        Self::new(PartialTiling::from_json_value(&raw.b)?, raw.strips)
    }
}

/// Result of applying the involution, with the case used at each level
/// from the bottom row up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IotaOutcome {
    pub output: ExtendedTiling,
    pub trace: Vec<Case>,
}

impl IotaOutcome {
    pub fn trace_string(&self) -> String {
        self.trace.iter().map(|c| c.letter()).collect()
    }
}

pub fn iota(e: &ExtendedTiling) -> Result<ExtendedTiling, InvolutionError> {
    iota_traced(e).map(|o| o.output)
}

pub fn iota_traced(e: &ExtendedTiling) -> Result<IotaOutcome, InvolutionError> {
    e.validate()?;
    let (n, k, _) = e.kind();
    let mut trace = Vec::new();
    let (rows, steps, strips) = recurse(n, k, &e.b.rows, &e.b.path.steps, &e.strips, &mut trace)?;
    let r = strips.len() as u32;
    let k_out = n - k + r;
    let b = PartialTiling {
        variant: Variant::Binomial { n, k: k_out },
        rows,
        path: LatticePath::binomial((k_out, 0), steps),
    };
    Ok(IotaOutcome { output: ExtendedTiling { b, strips }, trace })
}

type Level = (Vec<PartialRow>, Vec<Step>, Vec<Strip>);

/// One level of the recursion on the partial tiling of `delta_n` whose
/// path (from `(k, 0)`) is `steps` and whose stored rows are `rows`
/// (rows of length zero are not stored).
fn recurse(
    n: u32,
    k: u32,
    rows: &[PartialRow],
    steps: &[Step],
    strips: &[Strip],
    trace: &mut Vec<Case>,
) -> Result<Level, InvolutionError> {
    if n == 0 {
        return Ok((rows.to_vec(), steps.to_vec(), strips.to_vec()));
    }
    let malformed = |trace: &[Case], detail: String| InvolutionError::Malformed {
        trace: trace.iter().map(|c| c.letter()).collect(),
        detail,
    };
    let cut = |trace: &[Case], r: Result<Strip, InvolutionError>| {
        r.map_err(|e| malformed(trace, e.to_string()))
    };
    let t = strips.len() as u32;
    let row_len = n - 1;
    let bottom = rows.first().copied().unwrap_or(PartialRow::blank(0));
    let r_strip = bottom.fixed_strip();
    let upper = rows.get(1..).unwrap_or(&[]);
    let probe = k as i64 - t as i64 - 1;

    let starts_ni = classify_row_point(&bottom, k as i64) == Label::NI;
    let (case, rest) = match (starts_ni, steps) {
        (true, [Step::N, rest @ ..]) => {
            let case = if classify_row_point(&bottom, probe) == Label::NI { Case::A } else { Case::B };
            (case, rest)
        }
        (false, [Step::W, Step::N, rest @ ..]) => {
            let s1_ni = strips.first().is_none_or(|s1| classify_strip_point(s1, probe) == Label::NI);
            (if s1_ni { Case::C } else { Case::D }, rest)
        }
        _ => return Err(malformed(trace, format!("path does not start as its bottom row requires at n={n}"))),
    };
    trace.push(case);
    let k_inner = if starts_ni { k } else { k - 1 };

    // strips handed to the inner call
    let inner_strips: Vec<Strip> = match case {
        Case::A => {
            let mut s = strips.to_vec();
            s.push(cut(trace, strip_first(&r_strip, k - t - 1))?);
            s
        }
        Case::B => strips.to_vec(),
        Case::C => {
            let mut s = strips.get(1..).unwrap_or(&[]).to_vec();
            if let Some(s1) = strips.first() {
                s.push(cut(trace, strip_first(s1, k - t - 1))?);
            }
            s
        }
        Case::D => strips[1..].to_vec(),
    };
    let (inner_rows, inner_steps, inner_out) = recurse(n - 1, k_inner, upper, rest, &inner_strips, trace)?;

    // the reversed bottom row followed by the reversed first strip
    let reversed = || strip_concat(&strip_reverse(&r_strip), &strips.first().map(strip_reverse).unwrap_or_default());
    let (new_row, left, out): (Strip, bool, Vec<Strip>) = match case {
        Case::A => {
            let tail = strip_reverse(&cut(trace, strip_last(&r_strip, t + 1))?);
            (strip_concat(&inner_out[t as usize], &tail), true, inner_out[..t as usize].to_vec())
        }
        Case::B => {
            let head = strip_reverse(&cut(trace, strip_first(&r_strip, k - t))?);
            let mut out = Vec::with_capacity(t as usize);
            if t > 0 {
                let tail = strip_reverse(&cut(trace, strip_last(&r_strip, t))?);
                out.push(strip_concat(&inner_out[t as usize - 1], &tail));
                out.extend(inner_out[..t as usize - 1].iter().cloned());
            }
            (head, false, out)
        }
        Case::C => (cut(trace, strip_first(&reversed(), n - k + t))?, true, inner_out),
        Case::D => {
            let both = reversed();
            let row = cut(trace, strip_last(&both, k - t))?;
            let mut out = vec![cut(trace, strip_first(&both, n - k + t - 1))?];
            out.extend(inner_out);
            (row, false, out)
        }
    };
    if new_row.len() > row_len {
        return Err(malformed(trace, format!("new bottom row needs {} cells of {row_len}", new_row.len())));
    }
    let mut out_rows = Vec::with_capacity(rows.len());
    if row_len > 0 {
        out_rows.push(if left { PartialRow::left(row_len, &new_row) } else { PartialRow::right(row_len, &new_row) });
    }
    out_rows.extend(inner_rows);
    let mut out_steps = if left { vec![Step::N] } else { vec![Step::W, Step::N] };
    out_steps.extend(inner_steps);
    Ok((out_rows, out_steps, out))
}

/// Every extended tiling of type `(n, k, r)`, in a deterministic order.
pub fn enumerate_extended(n: u32, k: u32, r: u32, exec: Exec) -> Result<Vec<ExtendedTiling>, InvolutionError> {
    if r > k || k > n {
        return Err(ShapeError::InvalidParameters(format!("type ({n},{k},{r}) violates r <= k <= n")).into());
    }
    let partials = distinct_partials(&Variant::Binomial { n, k }, exec)?;
    let mut strip_tuples: Vec<Vec<Strip>> = vec![vec![]];
    for i in 1..=r {
        strip_tuples = strip_tuples
            .into_iter()
            .flat_map(|prefix| {
                Strip::all(k - i).into_iter().map(move |s| {
                    let mut v = prefix.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
    }
    Ok(partials
        .iter()
        .flat_map(|b| strip_tuples.iter().map(move |s| ExtendedTiling { b: b.clone(), strips: s.clone() }))
        .collect())
}

/// Outcome of an exhaustive check of the involution on one type.
#[derive(Debug, Clone)]
pub struct InvolutionReport {
    pub kind: (u32, u32, u32),
    pub count: usize,
    pub case_counts: [usize; 4],
    pub class_sum: Poly2,
    pub image_sum: Poly2,
    pub lhs: Poly2,
    pub rhs: Poly2,
    pub violations: Vec<String>,
}

impl InvolutionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Applies the involution to every extended tiling of type `(n, k, r)` and
/// checks: the output is a well-formed extended tiling of type
/// `(n, n-k+r, r)`, applying it twice is the identity, weights are
/// preserved, and the two classes sum to the two sides of the identity.
pub fn verify_involution(n: u32, k: u32, r: u32, exec: Exec) -> Result<InvolutionReport, InvolutionError> {
    let domain = enumerate_extended(n, k, r, exec)?;
    let k_out = n - k + r;
    let codomain_partials: HashSet<PartialTiling> =
        distinct_partials(&Variant::Binomial { n, k: k_out }, exec)?.into_iter().collect();

    let results = exec.map(&domain, |e| -> (Option<Case>, Vec<String>, Poly2) {
        let mut bad = Vec::new();
        let first = match iota_traced(e) {
            Ok(o) => o,
            Err(err) => return (None, vec![format!("{}: {err}", e.to_json())], Poly2::zero()),
        };
        let c = &first.output;
        if c.kind() != (n, k_out, r) {
            bad.push(format!("{}: output type {:?}", e.to_json(), c.kind()));
        }
        if !codomain_partials.contains(&c.b) {
            bad.push(format!("{}: output {} is not a binomial partial tiling", e.to_json(), c.b.to_json()));
        }
        if c.weight() != e.weight() {
            bad.push(format!("{}: weight changes", e.to_json()));
        }
        match iota(c) {
            Ok(back) if back == *e => {}
            Ok(back) => bad.push(format!("{}: applying twice gives {}", e.to_json(), back.to_json())),
            Err(err) => bad.push(format!("{}: second application fails: {err}", e.to_json())),
        }
        (first.trace.first().copied(), bad, c.weight())
    });

    let mut case_counts = [0usize; 4];
    let mut violations = Vec::new();
    let mut image_sum = Poly2::zero();
    for (case, bad, w) in results {
        match case {
            Some(Case::A) => case_counts[0] += 1,
            Some(Case::B) => case_counts[1] += 1,
            Some(Case::C) => case_counts[2] += 1,
            Some(Case::D) => case_counts[3] += 1,
            None => {}
        }
        violations.extend(bad);
        image_sum += &w;
    }
    let class_sum: Poly2 = domain.iter().map(ExtendedTiling::weight).sum();
    let (lhs, rhs) = symmetry_sides(n, k, r).expect("r <= k <= n was checked");
    // every input with n > 0 lands in exactly one case
    if n > 0 && case_counts.iter().sum::<usize>() != domain.len() && violations.is_empty() {
        violations.push("some inputs matched no case".into());
    }
    if class_sum != lhs {
        violations.push(format!("class sum {class_sum} differs from {lhs}"));
    }
    if image_sum != rhs {
        violations.push(format!("image sum {image_sum} differs from {rhs}"));
    }
    violations.truncate(50);
    Ok(InvolutionReport {
        kind: (n, k, r),
        count: domain.len(),
        case_counts,
        class_sum,
        image_sum,
        lhs,
        rhs,
        violations,
    })
}
