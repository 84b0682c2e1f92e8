//! Streaming enumeration of bounded semi-standard tableaux, reading-word
//! coarsenings, rim decompositions and the lattice-pattern oracle.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::scalar::{Exponent, Scalar};
use crate::shapes::{Cell, Partition, SkewShape, Tableau};

/// Iterator over `SSYT_N` fillings of a skew shape in row-major
/// lexicographic order. Rows weakly increase, columns strictly increase,
/// entries lie in `1..=N`.
pub struct SsytIter {
    cells: Vec<Cell>,
    left: Vec<Option<usize>>,
    up: Vec<Option<usize>>,
    bound: u32,
    current: Vec<u32>,
    shape: SkewShape,
    state: IterState,
}

enum IterState {
    Fresh,
    Running,
    Done,
}

impl SsytIter {
    pub fn new(shape: &SkewShape, bound: u32) -> Self {
        let cells = shape.cells();
        let index: BTreeMap<Cell, usize> =
            cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let left = cells
            .iter()
            .map(|&(i, j)| if j > 1 { index.get(&(i, j - 1)).copied() } else { None })
            .collect();
        let up = cells
            .iter()
            .map(|&(i, j)| if i > 1 { index.get(&(i - 1, j)).copied() } else { None })
            .collect();
        let n = cells.len();
        SsytIter {
            cells,
            left,
            up,
            bound,
            current: vec![0; n],
            shape: shape.clone(),
            state: IterState::Fresh,
        }
    }

    fn min_value(&self, k: usize) -> u32 {
        let mut v = 1;
        if let Some(l) = self.left[k] {
            v = v.max(self.current[l]);
        }
        if let Some(u) = self.up[k] {
            v = v.max(self.current[u] + 1);
        }
        v
    }

    /// Fill cells `from..` with their minimal admissible values.
    fn min_fill(&mut self, from: usize) -> bool {
        for k in from..self.cells.len() {
            let v = self.min_value(k);
            if v > self.bound {
                return false;
            }
            self.current[k] = v;
        }
        true
    }

    fn advance(&mut self) -> bool {
        let n = self.cells.len();
        for k in (0..n).rev() {
            let v = self.current[k] + 1;
            if v <= self.bound {
                self.current[k] = v;
                if self.min_fill(k + 1) {
                    return true;
                }
            }
        }
        false
    }

    fn emit(&self) -> Tableau<u32> {
        Tableau::from_rows(self.shape.clone(), &self.current).expect("filling matches shape")
    }
}

impl Iterator for SsytIter {
    type Item = Tableau<u32>;

    fn next(&mut self) -> Option<Tableau<u32>> {
        match self.state {
            IterState::Fresh => {
                self.state = IterState::Running;
                if self.min_fill(0) {
                    Some(self.emit())
                } else {
                    self.state = IterState::Done;
                    None
                }
            }
            IterState::Running => {
                if self.advance() {
                    Some(self.emit())
                } else {
                    self.state = IterState::Done;
                    None
                }
            }
            IterState::Done => None,
        }
    }
}

pub fn ssyt_iter(shape: &SkewShape, bound: u32) -> SsytIter {
    SsytIter::new(shape, bound)
}

pub fn ssyt_count(shape: &SkewShape, bound: u32) -> u64 {
    ssyt_iter(shape, bound).count() as u64
}

/// All linear extensions of the cell poset `(i,j) ≤ (i,j+1), (i,j) ≤ (i+1,j)`,
/// as reading words (cell sequences).
pub fn linear_extensions(shape: &SkewShape) -> Vec<Vec<Cell>> {
    let cells = shape.cells();
    let n = cells.len();
    let mut out = Vec::new();
    let mut used: BTreeSet<Cell> = BTreeSet::new();
    let mut word: Vec<Cell> = Vec::with_capacity(n);

    fn ready(shape: &SkewShape, used: &BTreeSet<Cell>, (i, j): Cell) -> bool {
        let left_ok = j == 1 || !shape.contains_cell((i, j - 1)) || used.contains(&(i, j - 1));
        let up_ok = i == 1 || !shape.contains_cell((i - 1, j)) || used.contains(&(i - 1, j));
        left_ok && up_ok
    }

    fn rec(
        shape: &SkewShape,
        cells: &[Cell],
        used: &mut BTreeSet<Cell>,
        word: &mut Vec<Cell>,
        out: &mut Vec<Vec<Cell>>,
    ) {
        if word.len() == cells.len() {
            out.push(word.clone());
            return;
        }
        for &c in cells {
            if !used.contains(&c) && ready(shape, used, c) {
                used.insert(c);
                word.push(c);
                rec(shape, cells, used, word, out);
                word.pop();
                used.remove(&c);
            }
        }
    }

    rec(shape, &cells, &mut used, &mut word, &mut out);
    out
}

/// A coarsening of a reading word into ordered blocks of cells.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BlockedSequence {
    /// Blocks in word order; cells within a block are sorted.
    pub blocks: Vec<Vec<Cell>>,
}

impl BlockedSequence {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Sign `(-1)^{n - ℓ}` used by the star-expansion.
    pub fn sign(&self) -> i8 {
        let n: usize = self.blocks.iter().map(|b| b.len()).sum();
        if (n - self.blocks.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Block sums of the entries of `t`.
    pub fn sums(&self, t: &Tableau<Exponent>) -> Vec<Exponent> {
        self.blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|&c| *t.get(c))
                    .fold(Exponent::Int(0), |acc, e| acc + e)
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PreceqVariant {
    /// Merge along reading words of the shape itself; no two merged cells
    /// may share a column.
    Direct,
    /// Merge along reading words of the conjugate shape; no two merged
    /// cells may share a row. Cells are reported in original coordinates.
    Conjugate,
}

/// The set of blocked coarsenings of the reading words of `shape`,
/// deduplicated as sequences of cell sets.
pub fn preceq_set(shape: &SkewShape, variant: PreceqVariant) -> Vec<BlockedSequence> {
    let (work_shape, transpose) = match variant {
        PreceqVariant::Direct => (shape.clone(), false),
        PreceqVariant::Conjugate => (shape.conjugate(), true),
    };
    let mut seen: BTreeSet<Vec<Vec<Cell>>> = BTreeSet::new();
    for word in linear_extensions(&work_shape) {
        let n = word.len();
        // intervals via composition bitmask: bit k set = cut after position k
        for mask in 0..(1u64 << n.saturating_sub(1)) {
            let mut blocks: Vec<Vec<Cell>> = Vec::new();
            let mut cur: Vec<Cell> = Vec::new();
            let mut ok = true;
            for (k, &cell) in word.iter().enumerate() {
                // the merge rule forbids two cells in one work-shape column
                if cur.iter().any(|&(_, j)| j == cell.1) {
                    ok = false;
                    break;
                }
                cur.push(cell);
                if k + 1 == n || mask >> k & 1 == 1 {
                    blocks.push(std::mem::take(&mut cur));
                }
            }
            if !ok {
                continue;
            }
            let key: Vec<Vec<Cell>> = blocks
                .iter()
                .map(|b| {
                    let mut s: Vec<Cell> = b
                        .iter()
                        .map(|&(i, j)| if transpose { (j, i) } else { (i, j) })
                        .collect();
                    s.sort();
                    s
                })
                .collect();
            seen.insert(key);
        }
    }
    seen.into_iter()
        .map(|blocks| BlockedSequence { blocks })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RimKind {
    H,
    E,
}

/// An ordered list of (possibly empty) ribbons covering a shape, with the
/// sign of the associated path permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RimDecomposition {
    pub shape: SkewShape,
    pub kind: RimKind,
    /// Ribbon cells in reading order: bottom-left → top-right for `H`,
    /// top-right → bottom-left for `E`.
    pub ribbons: Vec<Vec<Cell>>,
    /// One-line permutation (1-based values).
    pub perm: Vec<usize>,
    pub sign: i8,
}

fn permutation_sign(perm: &[usize]) -> i8 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1i8;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            k = perm[k] - 1;
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// All H-rim (or E-rim) decompositions of a skew shape. Ribbon `k` starts at
/// the beginning of row `k` (column `k` for the E kind) or is empty;
/// successive unions with the inner shape are partitions.
pub fn rim_decompositions(shape: &SkewShape, kind: RimKind) -> Vec<RimDecomposition> {
    match kind {
        RimKind::H => rim_h(shape)
            .into_iter()
            .map(|(ribbons, perm)| {
                let sign = permutation_sign(&perm);
                RimDecomposition {
                    shape: shape.clone(),
                    kind,
                    ribbons,
                    perm,
                    sign,
                }
            })
            .collect(),
        RimKind::E => rim_h(&shape.conjugate())
            .into_iter()
            .map(|(ribbons, perm)| {
                let ribbons = ribbons
                    .into_iter()
                    .map(|r| r.into_iter().map(|(i, j)| (j, i)).collect())
                    .collect();
                let sign = permutation_sign(&perm);
                RimDecomposition {
                    shape: shape.clone(),
                    kind,
                    ribbons,
                    perm,
                    sign,
                }
            })
            .collect(),
    }
}

/// H-rim decompositions with their permutations, as cell lists in
/// bottom-left → top-right reading order.
fn rim_h(shape: &SkewShape) -> Vec<(Vec<Vec<Cell>>, Vec<usize>)> {
    let rows = shape.rows();
    if rows == 0 {
        return vec![(Vec::new(), Vec::new())];
    }
    let lambda: Vec<usize> = (1..=rows).map(|i| shape.outer().part(i)).collect();
    let mu: Vec<usize> = (1..=rows).map(|i| shape.inner().part(i)).collect();
    let mut out = Vec::new();
    let mut rho = mu.clone();
    let mut ribbons: Vec<Vec<Cell>> = Vec::new();
    rec_rim(&lambda, &mu, &mut rho, 1, &mut ribbons, &mut out);
    out.into_iter()
        .map(|ribbons| {
            let perm = rim_permutation(&lambda, &mu, &ribbons);
            (ribbons, perm)
        })
        .collect()
}

fn rec_rim(
    lambda: &[usize],
    mu: &[usize],
    rho: &mut Vec<usize>,
    j: usize,
    ribbons: &mut Vec<Vec<Cell>>,
    out: &mut Vec<Vec<Vec<Cell>>>,
) {
    let rows = lambda.len();
    if j > rows {
        if rho == lambda {
            out.push(ribbons.clone());
        }
        return;
    }
    // empty ribbon
    ribbons.push(Vec::new());
    rec_rim(lambda, mu, rho, j + 1, ribbons, out);
    ribbons.pop();

    // border strips starting at (j, mu_j + 1): the strip hugs the border of
    // the current shape, so its cells follow a unique maximal path and only
    // the stopping point varies
    debug_assert_eq!(rho[j - 1], mu[j - 1]);
    let start_col = mu[j - 1] + 1;
    if start_col > lambda[j - 1] {
        return;
    }
    let mut path: Vec<Cell> = Vec::new();
    let mut stops: Vec<usize> = Vec::new();
    let mut a = j;
    let mut b = start_col;
    loop {
        path.push((a, b));
        if a == 1 || b <= rho[a - 2] {
            stops.push(path.len());
        }
        if a > 1 && b == rho[a - 2] + 1 {
            // must turn up
            if b > mu[a - 2] && b <= lambda[a - 2] {
                a -= 1;
            } else {
                break;
            }
        } else if b + 1 <= lambda[a - 1] {
            b += 1;
        } else {
            break;
        }
    }
    for &len in &stops {
        let strip = &path[..len];
        let saved = rho.clone();
        for &(x, y) in strip {
            rho[x - 1] = rho[x - 1].max(y);
        }
        ribbons.push(strip.to_vec());
        rec_rim(lambda, mu, rho, j + 1, ribbons, out);
        ribbons.pop();
        *rho = saved;
    }
}

/// Recover the permutation with `|θ_j| = λ_{σ(j)} - μ_j - σ(j) + j`.
fn rim_permutation(lambda: &[usize], mu: &[usize], ribbons: &[Vec<Cell>]) -> Vec<usize> {
    let rows = lambda.len();
    let mut perm = vec![0usize; rows];
    for (j0, ribbon) in ribbons.iter().enumerate() {
        let j = j0 + 1;
        let want = ribbon.len() as i64 + mu[j0] as i64 - j as i64;
        let k = (1..=rows)
            .find(|&k| lambda[k - 1] as i64 - k as i64 == want)
            .expect("rim decomposition always corresponds to a permutation");
        perm[j0] = k;
    }
    perm
}

/// Reading tuples of a tableau along each ribbon of a decomposition.
pub fn theta_contents<T: Clone>(
    d: &RimDecomposition,
    t: &Tableau<T>,
) -> Result<Vec<Vec<T>>> {
    if t.shape() != &d.shape {
        return Err(Error::ShapeMismatch);
    }
    Ok(d
        .ribbons
        .iter()
        .map(|r| r.iter().map(|&c| t.get(c).clone()).collect())
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternSubset {
    All,
    Intersecting,
    NonIntersecting,
}

/// One lattice pattern: the permutation it realizes, its sign, whether two
/// of its paths share a vertex, and the row assigned to each cell of the
/// associated rim decomposition.
#[derive(Debug, Clone)]
pub struct LatticePattern {
    pub perm: Vec<usize>,
    pub sign: i8,
    pub intersecting: bool,
    pub assignment: BTreeMap<Cell, u32>,
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Enumerate every H- or E-pattern for a straight shape with entries
/// bounded by `n`. Exponential; guarded by `cap` on the pattern count.
pub fn lattice_patterns(
    lambda: &Partition,
    n: u32,
    kind: RimKind,
    cap: u128,
) -> Result<Vec<LatticePattern>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let shape = SkewShape::straight(lambda.clone());
    let rims = rim_decompositions(&shape, kind);
    // bound the total number of patterns first
    let mut total: u128 = 0;
    for rim in &rims {
        let mut prod: u128 = 1;
        for ribbon in &rim.ribbons {
            let h = ribbon.len() as u64;
            let ways = match kind {
                RimKind::H => binomial(h + n as u64 - 1, h),
                RimKind::E => binomial(n as u64, h),
            };
            prod = prod.saturating_mul(ways);
        }
        total = total.saturating_add(prod);
    }
    if total > cap {
        return Err(Error::ResourceCap { needed: total, cap });
    }

    let rows = match kind {
        RimKind::H => shape.rows(),
        RimKind::E => shape.cols(),
    };
    let mut out = Vec::new();
    for rim in &rims {
        // per-path start/end x-coordinates
        let starts: Vec<i64> = (1..=rows).map(|i| (rows + 1 - i) as i64).collect();
        let mut paths_per_ribbon: Vec<Vec<(Vec<u32>, BTreeSet<(i64, u32)>)>> = Vec::new();
        for (idx, ribbon) in rim.ribbons.iter().enumerate() {
            let h = ribbon.len();
            let combos = match kind {
                RimKind::H => weakly_increasing(h, n),
                RimKind::E => strictly_increasing(h, n),
            };
            let mut paths = Vec::new();
            for heights in combos {
                let verts = match kind {
                    RimKind::H => h_vertices(starts[idx], n, &heights),
                    RimKind::E => e_vertices(starts[idx], n, &heights),
                };
                paths.push((heights, verts));
            }
            paths_per_ribbon.push(paths);
        }
        if paths_per_ribbon.iter().any(|p| p.is_empty()) {
            continue;
        }
        let mut choice = vec![0usize; rim.ribbons.len()];
        loop {
            let mut assignment = BTreeMap::new();
            for (idx, ribbon) in rim.ribbons.iter().enumerate() {
                let (heights, _) = &paths_per_ribbon[idx][choice[idx]];
                for (k, &cell) in ribbon.iter().enumerate() {
                    assignment.insert(cell, heights[k]);
                }
            }
            let mut intersecting = false;
            'outer: for i in 0..rim.ribbons.len() {
                for j in i + 1..rim.ribbons.len() {
                    let (_, vi) = &paths_per_ribbon[i][choice[i]];
                    let (_, vj) = &paths_per_ribbon[j][choice[j]];
                    if !vi.is_disjoint(vj) {
                        intersecting = true;
                        break 'outer;
                    }
                }
            }
            out.push(LatticePattern {
                perm: rim.perm.clone(),
                sign: rim.sign,
                intersecting,
                assignment,
            });
            // advance the odometer
            let mut k = 0;
            loop {
                if k == choice.len() {
                    break;
                }
                choice[k] += 1;
                if choice[k] < paths_per_ribbon[k].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k == choice.len() {
                break;
            }
        }
    }
    Ok(out)
}

fn weakly_increasing(len: usize, n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn rec(len: usize, lo: u32, n: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if acc.len() == len {
            out.push(acc.clone());
            return;
        }
        for v in lo..=n {
            acc.push(v);
            rec(len, v, n, acc, out);
            acc.pop();
        }
    }
    if len == 0 {
        out.push(Vec::new());
    } else if n >= 1 {
        rec(len, 1, n, &mut Vec::new(), &mut out);
    }
    out
}

fn strictly_increasing(len: usize, n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn rec(len: usize, lo: u32, n: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if acc.len() == len {
            out.push(acc.clone());
            return;
        }
        for v in lo..=n {
            acc.push(v);
            rec(len, v + 1, n, acc, out);
            acc.pop();
        }
    }
    if len == 0 {
        out.push(Vec::new());
    } else if n >= 1 {
        rec(len, 1, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Vertices of a right/up path from `(x0, 1)` with horizontal edges at the
/// given weakly increasing heights, ending at height `n`.
fn h_vertices(x0: i64, n: u32, heights: &[u32]) -> BTreeSet<(i64, u32)> {
    let mut verts = BTreeSet::new();
    let mut x = x0;
    for y in 1..=n {
        verts.insert((x, y));
        for &h in heights {
            if h == y {
                x += 1;
                verts.insert((x, y));
            }
        }
    }
    verts
}

/// Vertices of a northeast/up path from `(x0, 1)` with northeast steps at
/// the given strictly increasing levels, ending at height `n + 1`.
fn e_vertices(x0: i64, n: u32, levels: &[u32]) -> BTreeSet<(i64, u32)> {
    let mut verts = BTreeSet::new();
    let mut x = x0;
    verts.insert((x, 1));
    for y in 1..=n {
        if levels.contains(&y) {
            x += 1;
        }
        verts.insert((x, y + 1));
    }
    verts
}

/// Exact signed weighted sum over lattice patterns; the weight of a pattern
/// is `Π 1/j^{s_cell}` over its cell/row assignment.
pub fn pattern_sum(
    lambda: &Partition,
    t: &Tableau<Exponent>,
    n: u32,
    kind: RimKind,
    subset: PatternSubset,
    cap: u128,
) -> Result<Scalar> {
    if t.shape() != &SkewShape::straight(lambda.clone()) {
        return Err(Error::ShapeMismatch);
    }
    let patterns = lattice_patterns(lambda, n, kind, cap)?;
    let mut acc = Scalar::zero();
    for pat in patterns {
        let keep = match subset {
            PatternSubset::All => true,
            PatternSubset::Intersecting => pat.intersecting,
            PatternSubset::NonIntersecting => !pat.intersecting,
        };
        if !keep {
            continue;
        }
        let mut w = Scalar::one();
        for (&cell, &row) in &pat.assignment {
            w = w * Scalar::inv_power(row as u64, t.get(cell));
        }
        let signed = if pat.sign >= 0 { w } else { -w };
        acc = acc + signed;
    }
    Ok(acc)
}
