//! Partitions, skew shapes, tableaux and ribbons.
//!
//! Cells are 1-based `(row, column)` pairs with row 1 at the top. Partitions
//! are stored without trailing zeros; skew containment pads the inner shape
//! with zeros. Skew shapes are kept in a justified presentation: no empty
//! top/bottom rows and no all-empty leading columns.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

pub type Cell = (usize, usize);

/// A weakly decreasing list of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "parts not weakly decreasing: {:?}",
                parts
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `i` is 1-based; rows past the end have size 0.
    pub fn part(&self, i: usize) -> usize {
        if i >= 1 && i <= self.0.len() {
            self.0[i - 1]
        } else {
            0
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|i| self.0.iter().filter(|&&p| p >= i).count())
            .collect();
        Partition(parts)
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        (1..=inner.len()).all(|i| inner.part(i) <= self.part(i))
    }

    /// Frobenius arm/leg lengths `(p_i, q_i) = (λ_i - i + 1, λ'_i - i)`.
    pub fn frobenius(&self) -> (Vec<usize>, Vec<usize>) {
        let conj = self.conjugate();
        let mut arms = Vec::new();
        let mut legs = Vec::new();
        for i in 1.. {
            if self.part(i) < i {
                break;
            }
            arms.push(self.part(i) - i + 1);
            legs.push(conj.part(i) - i);
        }
        (arms, legs)
    }

    /// Rebuild a partition from Frobenius arm/leg lists.
    pub fn from_frobenius(arms: &[usize], legs: &[usize]) -> Result<Partition> {
        if arms.len() != legs.len() {
            return Err(Error::InvalidArgument("arm/leg length mismatch".into()));
        }
        let t = arms.len();
        let rows = if t == 0 { 0 } else { legs[0] + 1 };
        let mut parts = vec![0usize; rows];
        for i in 0..t {
            parts[i] = arms[i] + i; // λ_i = p_i + i - 1, 1-based
            for r in i + 1..=legs[i] + i {
                parts[r] = parts[r].max(i + 1);
            }
        }
        Partition::new(parts)
    }

    /// Parse the text form `"4 3 3 2"`.
    pub fn parse(text: &str) -> Result<Partition> {
        let parts: std::result::Result<Vec<usize>, _> =
            text.split_whitespace().map(|t| t.parse()).collect();
        match parts {
            Ok(p) => Partition::new(p),
            Err(_) => Err(Error::InvalidArgument(format!("bad partition: {text:?}"))),
        }
    }

    pub fn all_of_weight(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(acc.clone()));
                return;
            }
            for k in (1..=max.min(n)).rev() {
                acc.push(k);
                rec(n - k, k, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(" "))
    }
}

/// A pair outer/inner with `inner ⊂ outer`; the cell set is
/// `{(i,j) : 1 ≤ i ≤ ℓ(outer), inner_i < j ≤ outer_i}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidArgument(format!(
                "inner {} not contained in outer {}",
                inner, outer
            )));
        }
        Ok(SkewShape { outer, inner }.normalized())
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    /// Strip empty top/bottom rows and shift out all-empty leading columns.
    fn normalized(&self) -> SkewShape {
        let mut rows: Vec<(usize, usize)> = (1..=self.outer.len())
            .map(|i| (self.inner.part(i), self.outer.part(i)))
            .collect();
        while matches!(rows.first(), Some(&(a, b)) if a == b) {
            rows.remove(0);
        }
        while matches!(rows.last(), Some(&(a, b)) if a == b) {
            rows.pop();
        }
        if rows.is_empty() {
            return SkewShape {
                outer: Partition::empty(),
                inner: Partition::empty(),
            };
        }
        let shift = rows.iter().map(|&(a, _)| a).min().unwrap();
        let outer = Partition(rows.iter().map(|&(_, b)| b - shift).collect());
        let inner = Partition::new(rows.iter().map(|&(a, _)| a - shift).collect())
            .expect("normalization keeps inner a partition");
        SkewShape { outer, inner }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    pub fn cols(&self) -> usize {
        self.outer.part(1)
    }

    pub fn cell_count(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    pub fn contains_cell(&self, (i, j): Cell) -> bool {
        i >= 1 && j > self.inner.part(i) && j <= self.outer.part(i)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.cell_count());
        for i in 1..=self.rows() {
            for j in self.inner.part(i) + 1..=self.outer.part(i) {
                out.push((i, j));
            }
        }
        out
    }

    /// Cells with no neighbor to the right nor below.
    pub fn corners(&self) -> Vec<Cell> {
        self.cells()
            .into_iter()
            .filter(|&(i, j)| !self.contains_cell((i, j + 1)) && !self.contains_cell((i + 1, j)))
            .collect()
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
        .normalized()
    }

    /// Rotation by π around the center of the bounding box.
    pub fn rotate(&self) -> SkewShape {
        let r = self.rows();
        let c = self.cols();
        let outer = Partition((1..=r).rev().map(|i| c - self.inner.part(i)).collect());
        let inner = Partition::new((1..=r).rev().map(|i| c - self.outer.part(i)).collect())
            .expect("rotation of a skew shape is a skew shape");
        SkewShape { outer, inner }.normalized()
    }

    /// Transpose with respect to the anti-diagonal: the conjugate of the
    /// π-rotation. Involutive on normalized shapes.
    pub fn anti_transpose(&self) -> SkewShape {
        self.rotate().conjugate()
    }

    /// Map a cell through the anti-diagonal transpose of this shape's
    /// bounding box, before renormalization.
    fn anti_transpose_cell(&self, (i, j): Cell) -> Cell {
        (self.cols() + 1 - j, self.rows() + 1 - i)
    }

    /// True when the shape is connected with no 2×2 block.
    pub fn is_ribbon(&self) -> bool {
        self.ribbon_path().is_some()
    }

    /// The cells of a ribbon from its top-right end to its bottom-left end
    /// (each step moves left or down), or `None` if not a ribbon.
    pub fn ribbon_path(&self) -> Option<Vec<Cell>> {
        let n = self.cell_count();
        if n == 0 {
            return None;
        }
        let start = (1, self.outer.part(1));
        if !self.contains_cell(start) {
            return None;
        }
        let mut path = vec![start];
        let mut cur = start;
        while path.len() < n {
            let (i, j) = cur;
            let left = (i, j.wrapping_sub(1));
            let down = (i + 1, j);
            cur = if j > 1 && self.contains_cell(left) {
                left
            } else if self.contains_cell(down) {
                down
            } else {
                return None;
            };
            path.push(cur);
        }
        // no 2×2 block
        for &(i, j) in &path {
            if self.contains_cell((i + 1, j))
                && self.contains_cell((i, j + 1))
                && self.contains_cell((i + 1, j + 1))
            {
                return None;
            }
        }
        Some(path)
    }

    /// Parse `"4 3 3 2"` or `"4 3 3 2 / 2 1"`.
    pub fn parse(text: &str) -> Result<SkewShape> {
        match text.split_once('/') {
            Some((o, i)) => SkewShape::new(Partition::parse(o)?, Partition::parse(i)?),
            None => Ok(SkewShape::straight(Partition::parse(text)?)),
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{} / {}", self.outer, self.inner)
        }
    }
}

/// A filling of a skew shape's cells.
#[derive(Debug, Clone, PartialEq)]
pub struct Tableau<T> {
    shape: SkewShape,
    entries: BTreeMap<Cell, T>,
}

impl<T: Clone> Tableau<T> {
    pub fn new(shape: SkewShape, entries: BTreeMap<Cell, T>) -> Result<Self> {
        let cells = shape.cells();
        if entries.len() != cells.len() || !cells.iter().all(|c| entries.contains_key(c)) {
            return Err(Error::ShapeMismatch);
        }
        Ok(Tableau { shape, entries })
    }

    /// Fill from values in row-major cell order.
    pub fn from_rows(shape: SkewShape, values: &[T]) -> Result<Self> {
        let cells = shape.cells();
        if values.len() != cells.len() {
            return Err(Error::ShapeMismatch);
        }
        let entries = cells.into_iter().zip(values.iter().cloned()).collect();
        Ok(Tableau { shape, entries })
    }

    /// Entry at `(i,j)` equals `diag[j - i]`.
    pub fn diagonal(shape: SkewShape, diag: &BTreeMap<i64, T>) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (i, j) in shape.cells() {
            let k = j as i64 - i as i64;
            let v = diag.get(&k).ok_or(Error::MissingDiagonal(k))?;
            entries.insert((i, j), v.clone());
        }
        Ok(Tableau { shape, entries })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn get(&self, cell: Cell) -> &T {
        &self.entries[&cell]
    }

    pub fn entries(&self) -> &BTreeMap<Cell, T> {
        &self.entries
    }

    pub fn cell_count(&self) -> usize {
        self.entries.len()
    }

    pub fn conjugate(&self) -> Tableau<T> {
        let entries = self
            .entries
            .iter()
            .map(|(&(i, j), v)| ((j, i), v.clone()))
            .collect();
        Tableau {
            shape: self.shape.conjugate(),
            entries,
        }
    }

    /// Anti-diagonal transpose of shape and filling; involutive.
    pub fn anti_transpose(&self) -> Tableau<T> {
        let mapped: BTreeMap<Cell, T> = self
            .entries
            .iter()
            .map(|(&c, v)| (self.shape.anti_transpose_cell(c), v.clone()))
            .collect();
        let shape = self.shape.anti_transpose();
        // renormalization may have shifted the box; align by offsets
        let min_row = mapped.keys().map(|&(i, _)| i).min().unwrap_or(1);
        let want_rows: Vec<Cell> = shape.cells();
        let min_row_shape = want_rows.iter().map(|&(i, _)| i).min().unwrap_or(1);
        let dr = min_row_shape as i64 - min_row as i64;
        let min_col = mapped.keys().map(|&(_, j)| j).min().unwrap_or(1);
        let min_col_shape = want_rows.iter().map(|&(_, j)| j).min().unwrap_or(1);
        let dc = min_col_shape as i64 - min_col as i64;
        let entries = mapped
            .into_iter()
            .map(|((i, j), v)| {
                (
                    ((i as i64 + dr) as usize, (j as i64 + dc) as usize),
                    v,
                )
            })
            .collect();
        Tableau { shape, entries }
    }

    /// True when entries are constant along diagonals `j - i`.
    pub fn is_diagonal(&self) -> bool
    where
        T: PartialEq,
    {
        let mut seen: BTreeMap<i64, &T> = BTreeMap::new();
        for (&(i, j), v) in &self.entries {
            let k = j as i64 - i as i64;
            match seen.get(&k) {
                Some(&u) if u != v => return false,
                _ => {
                    seen.insert(k, v);
                }
            }
        }
        true
    }

    /// The diagonal value map, if the tableau is diagonal.
    pub fn diagonal_values(&self) -> Result<BTreeMap<i64, T>>
    where
        T: PartialEq,
    {
        if !self.is_diagonal() {
            return Err(Error::NotDiagonal);
        }
        Ok(self
            .entries
            .iter()
            .map(|(&(i, j), v)| (j as i64 - i as i64, v.clone()))
            .collect())
    }
}

/// Entry types that can be tested against the convergence thresholds.
pub trait EntryValue: Clone {
    fn as_f64(&self) -> f64;
}

impl EntryValue for i64 {
    fn as_f64(&self) -> f64 {
        *self as f64
    }
}

impl EntryValue for u32 {
    fn as_f64(&self) -> f64 {
        *self as f64
    }
}

impl EntryValue for f64 {
    fn as_f64(&self) -> f64 {
        *self
    }
}

/// Absolute-convergence region: non-corner entries ≥ 1, corner entries > 1.
pub fn in_region_w<T: EntryValue>(t: &Tableau<T>) -> bool {
    let corners = t.shape().corners();
    t.entries().iter().all(|(&c, v)| {
        if corners.contains(&c) {
            v.as_f64() > 1.0
        } else {
            v.as_f64() >= 1.0
        }
    })
}

/// Integer analog: all entries ≥ 1 and every corner entry ≥ 2.
pub fn in_index_set<T: EntryValue>(t: &Tableau<T>) -> Result<bool> {
    if t.entries().values().any(|v| v.as_f64() < 1.0) {
        return Err(Error::NonPositiveEntry);
    }
    let corners = t.shape().corners();
    Ok(corners.iter().all(|c| t.get(*c).as_f64() >= 2.0))
}

/// A ribbon presented as connected hooks `(p_1,q_1 | … | p_r,q_r)`,
/// in the canonical minimal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RibbonSpec(Vec<(usize, usize)>);

impl RibbonSpec {
    pub fn new(hooks: Vec<(usize, usize)>) -> Result<Self> {
        if hooks.is_empty() || hooks.iter().any(|&(p, q)| p + q == 0) {
            return Err(Error::NonCanonicalRibbon);
        }
        let spec = RibbonSpec(hooks);
        let path = spec.path_cells();
        if RibbonSpec::from_path(&path)? != spec {
            return Err(Error::NonCanonicalRibbon);
        }
        Ok(spec)
    }

    pub fn hooks(&self) -> &[(usize, usize)] {
        &self.0
    }

    /// Traversal cells from the top-right end to the bottom-left end,
    /// shifted so rows and columns start at 1.
    pub fn path_cells(&self) -> Vec<Cell> {
        let mut cells: Vec<(i64, i64)> = Vec::new();
        let mut cur = (0i64, 0i64);
        for (idx, &(p, q)) in self.0.iter().enumerate() {
            if idx > 0 {
                cur = (cur.0 + 1, cur.1); // next hook's row starts below
                cells.push(cur);
                for _ in 1..p {
                    cur = (cur.0, cur.1 - 1);
                    cells.push(cur);
                }
            } else if p > 0 {
                cells.push(cur);
                for _ in 1..p {
                    cur = (cur.0, cur.1 - 1);
                    cells.push(cur);
                }
            } else {
                cells.push(cur);
                for _ in 1..q {
                    cur = (cur.0 + 1, cur.1);
                    cells.push(cur);
                }
                continue;
            }
            for _ in 0..q {
                cur = (cur.0 + 1, cur.1);
                cells.push(cur);
            }
        }
        let min_r = cells.iter().map(|c| c.0).min().unwrap();
        let min_c = cells.iter().map(|c| c.1).min().unwrap();
        cells
            .into_iter()
            .map(|(r, c)| ((r - min_r + 1) as usize, (c - min_c + 1) as usize))
            .collect()
    }

    /// Parse a traversal path back into the canonical hook list.
    pub fn from_path(path: &[Cell]) -> Result<RibbonSpec> {
        if path.is_empty() {
            return Err(Error::NotRibbon);
        }
        #[derive(PartialEq, Clone, Copy)]
        enum Step {
            Left,
            Down,
        }
        let mut steps = Vec::new();
        for w in path.windows(2) {
            let ((i0, j0), (i1, j1)) = (w[0], w[1]);
            if i1 == i0 && j1 + 1 == j0 {
                steps.push(Step::Left);
            } else if i1 == i0 + 1 && j1 == j0 {
                steps.push(Step::Down);
            } else {
                return Err(Error::NotRibbon);
            }
        }
        let mut hooks = Vec::new();
        let n = path.len();
        let mut i = 0; // current cell index
        if n == 1 {
            return Ok(RibbonSpec(vec![(1, 0)]));
        }
        if steps[0] == Step::Down {
            // leading column: hook (0, q)
            let mut m = 0;
            while m < steps.len() && steps[m] == Step::Down {
                m += 1;
            }
            if m == steps.len() {
                return Ok(RibbonSpec(vec![(0, n)]));
            }
            hooks.push((0, m));
            i = m;
        }
        while i < n {
            let mut l = 0;
            while i + l < n - 1 && steps[i + l] == Step::Left {
                l += 1;
            }
            let p = l + 1;
            let mut j = i + l;
            let mut m = 0;
            while j + m < n - 1 && steps[j + m] == Step::Down {
                m += 1;
            }
            j += m;
            if j == n - 1 {
                hooks.push((p, m));
                break;
            }
            // an L follows: the last Down is the connector to the next hook
            hooks.push((p, m - 1));
            i = j;
        }
        Ok(RibbonSpec(hooks))
    }

    /// Canonical spec of a ribbon-shaped skew diagram.
    pub fn from_shape(shape: &SkewShape) -> Result<RibbonSpec> {
        let path = shape.ribbon_path().ok_or(Error::NotRibbon)?;
        RibbonSpec::from_path(&path)
    }

    pub fn shape(&self) -> SkewShape {
        let cells = self.path_cells();
        let max_row = cells.iter().map(|&(i, _)| i).max().unwrap();
        let mut lo = vec![usize::MAX; max_row];
        let mut hi = vec![0usize; max_row];
        for &(i, j) in &cells {
            lo[i - 1] = lo[i - 1].min(j);
            hi[i - 1] = hi[i - 1].max(j);
        }
        let outer = Partition::new(hi).expect("ribbon rows give a partition");
        let inner = Partition::new(lo.into_iter().map(|x| x - 1).collect())
            .expect("ribbon rows give a partition");
        SkewShape::new(outer, inner).expect("ribbon is a valid skew shape")
    }

    pub fn cell_count(&self) -> usize {
        self.0.iter().map(|&(p, q)| p + q).sum()
    }
}

impl fmt::Display for RibbonSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.0.iter().map(|(p, q)| format!("{p},{q}")).collect();
        write!(f, "rib({})", strs.join(" | "))
    }
}
