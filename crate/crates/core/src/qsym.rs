//! The quasi-symmetric function ring on the monomial basis: M/E/F bases,
//! Schur-type elements, the quasi-shuffle product, the antipode, and the
//! truncated polynomial realization.
//!
//! Everything is kept in exact integer coordinates on the M basis; E and F
//! are triangular conversion layers.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};

use crate::enumerate::{preceq_set, rim_decompositions, theta_contents, PreceqVariant, RimKind};
use crate::error::{Error, Result};
use crate::shapes::{Partition, SkewShape, Tableau};

/// A finite sequence of positive integers; the empty composition is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidArgument("composition parts must be positive".into()));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn reversed(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// All compositions of `w`.
    pub fn all_of_weight(w: u32) -> Vec<Composition> {
        if w == 0 {
            return vec![Composition::empty()];
        }
        let mut out = Vec::new();
        for mask in 0..(1u64 << (w - 1)) {
            let mut parts = Vec::new();
            let mut cur = 1u32;
            for k in 0..w - 1 {
                if mask >> k & 1 == 1 {
                    parts.push(cur);
                    cur = 1;
                } else {
                    cur += 1;
                }
            }
            parts.push(cur);
            out.push(Composition(parts));
        }
        out
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Composition {
    /// Graded lexicographic: by weight, then lexicographically.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

/// An integer linear combination of monomial quasi-symmetric functions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QSymExpr {
    terms: BTreeMap<Composition, BigInt>,
}

impl QSymExpr {
    pub fn zero() -> Self {
        QSymExpr::default()
    }

    pub fn unit() -> Self {
        monomial(&Composition::empty())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Composition, BigInt> {
        &self.terms
    }

    pub fn add_term(&mut self, comp: Composition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(comp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            let dead: Vec<Composition> = self
                .terms
                .iter()
                .filter(|(_, c)| c.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in dead {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&self, other: &QSymExpr) -> QSymExpr {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &QSymExpr) -> QSymExpr {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> QSymExpr {
        QSymExpr::zero().sub(self)
    }

    pub fn scaled(&self, c: i64) -> QSymExpr {
        let mut out = QSymExpr::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * BigInt::from(c));
        }
        out
    }

    /// Serialized form: sorted `[[composition], coefficient]` pairs.
    pub fn to_json(&self) -> String {
        let items: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(k, c)| serde_json::json!([k.parts(), c.to_string()]))
            .collect();
        serde_json::json!({ "M": items }).to_string()
    }
}

impl fmt::Display for QSymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let strs: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| format!("{c}·M{k}"))
            .collect();
        write!(f, "{}", strs.join(" + "))
    }
}

pub fn monomial(gamma: &Composition) -> QSymExpr {
    let mut e = QSymExpr::zero();
    e.add_term(gamma.clone(), BigInt::one());
    e
}

/// All coarsenings of a composition by merging adjacent parts.
fn coarsenings(gamma: &Composition) -> Vec<Composition> {
    let n = gamma.len();
    if n == 0 {
        return vec![Composition::empty()];
    }
    let mut out = Vec::new();
    for mask in 0..(1u64 << (n - 1)) {
        let mut parts = Vec::new();
        let mut cur = 0u32;
        for (k, &p) in gamma.parts().iter().enumerate() {
            cur += p;
            if k + 1 == n || mask >> k & 1 == 1 {
                parts.push(cur);
                cur = 0;
            }
        }
        out.push(Composition(parts));
    }
    out
}

/// `E_γ = Σ_{δ ⪯ γ} M_δ`, the sum over coarsenings.
pub fn essential(gamma: &Composition) -> QSymExpr {
    let mut e = QSymExpr::zero();
    for d in coarsenings(gamma) {
        e.add_term(d, BigInt::one());
    }
    e
}

/// `F_γ = Σ_{δ ⪰ γ} M_δ`, the sum over refinements.
pub fn fundamental(gamma: &Composition) -> QSymExpr {
    let mut e = QSymExpr::zero();
    let mut stack = vec![(Vec::new(), gamma.parts().to_vec())];
    while let Some((done, rest)) = stack.pop() {
        if rest.is_empty() {
            e.add_term(Composition(done), BigInt::one());
            continue;
        }
        let head = rest[0];
        let tail = rest[1..].to_vec();
        // all compositions of `head` prefix the refinement
        for comp in Composition::all_of_weight(head) {
            let mut d = done.clone();
            d.extend_from_slice(comp.parts());
            stack.push((d, tail.clone()));
        }
    }
    e
}

/// Express an M-basis element in the E basis by Möbius inversion:
/// `M_γ = Σ_{δ ⪯ γ} (-1)^{ℓ(γ)-ℓ(δ)} E_δ`; extended linearly this
/// converts a whole expression to E coordinates.
pub fn to_essential_coords(x: &QSymExpr) -> BTreeMap<Composition, BigInt> {
    let mut out: BTreeMap<Composition, BigInt> = BTreeMap::new();
    for (gamma, c) in x.terms() {
        for d in coarsenings(gamma) {
            let sgn = if (gamma.len() - d.len()) % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            let entry = out.entry(d).or_insert_with(BigInt::zero);
            *entry += sgn * c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn quasi_shuffle_basis(a: &[u32], b: &[u32]) -> QSymExpr {
    if a.is_empty() {
        return monomial(&Composition(b.to_vec()));
    }
    if b.is_empty() {
        return monomial(&Composition(a.to_vec()));
    }
    let mut out = QSymExpr::zero();
    let prepend = |head: u32, x: &QSymExpr, out: &mut QSymExpr| {
        for (k, c) in x.terms() {
            let mut parts = vec![head];
            parts.extend_from_slice(k.parts());
            out.add_term(Composition(parts), c.clone());
        }
    };
    prepend(a[0], &quasi_shuffle_basis(&a[1..], b), &mut out);
    prepend(b[0], &quasi_shuffle_basis(a, &b[1..]), &mut out);
    prepend(a[0] + b[0], &quasi_shuffle_basis(&a[1..], &b[1..]), &mut out);
    out
}

/// The commutative, associative product with unit `M_()`: interleave or
/// merge leading parts, bilinearly extended.
pub fn quasi_shuffle(x: &QSymExpr, y: &QSymExpr) -> QSymExpr {
    let mut out = QSymExpr::zero();
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            let prod = quasi_shuffle_basis(a.parts(), b.parts());
            for (k, c) in prod.terms() {
                out.add_term(k.clone(), c * ca * cb);
            }
        }
    }
    out
}

/// Schur-type quasi-symmetric function of an integer tableau, expanded in
/// the M basis through the reading-word coarsenings.
pub fn schur_qsym(t: &Tableau<u32>) -> QSymExpr {
    let mut out = QSymExpr::zero();
    for bs in preceq_set(t.shape(), PreceqVariant::Direct) {
        let parts: Vec<u32> = bs
            .blocks
            .iter()
            .map(|block| block.iter().map(|&c| *t.get(c)).sum())
            .collect();
        out.add_term(Composition(parts), BigInt::one());
    }
    out
}

/// The signed essential expansion of the same function, from the conjugate
/// reading: `Σ_{u ⪯ γ'} (-1)^{|ν|-ℓ(u)} E_u`.
pub fn schur_qsym_via_essential(t: &Tableau<u32>) -> QSymExpr {
    let n = t.cell_count();
    let mut out = QSymExpr::zero();
    for bs in preceq_set(t.shape(), PreceqVariant::Conjugate) {
        let parts: Vec<u32> = bs
            .blocks
            .iter()
            .map(|block| block.iter().map(|&c| *t.get(c)).sum())
            .collect();
        let e = essential(&Composition(parts));
        let signed = if (n - bs.blocks.len()) % 2 == 0 {
            e
        } else {
            e.neg()
        };
        out = out.add(&signed);
    }
    out
}

/// Antipode on the M basis: `S(M_γ) = (-1)^{ℓ(γ)} E_{γ̄}`, extended linearly.
pub fn antipode(x: &QSymExpr) -> QSymExpr {
    let mut out = QSymExpr::zero();
    for (gamma, c) in x.terms() {
        let e = essential(&gamma.reversed());
        let signed = if gamma.len() % 2 == 0 { e } else { e.neg() };
        for (k, v) in signed.terms() {
            out.add_term(k.clone(), v * c);
        }
    }
    out
}

/// The split-product antipode formula, kept as a cross-check:
/// `S(M_γ) = Σ_{γ_1 ⊔ … ⊔ γ_m = γ} (-1)^m M_{γ_1} ∗ ⋯ ∗ M_{γ_m}`.
pub fn antipode_by_splits(x: &QSymExpr) -> QSymExpr {
    let mut out = QSymExpr::zero();
    for (gamma, c) in x.terms() {
        let n = gamma.len();
        if n == 0 {
            out.add_term(Composition::empty(), c.clone());
            continue;
        }
        for mask in 0..(1u64 << (n - 1)) {
            let mut pieces: Vec<Vec<u32>> = Vec::new();
            let mut cur = Vec::new();
            for (k, &p) in gamma.parts().iter().enumerate() {
                cur.push(p);
                if k + 1 == n || mask >> k & 1 == 1 {
                    pieces.push(std::mem::take(&mut cur));
                }
            }
            let m = pieces.len();
            let mut prod = QSymExpr::unit();
            for piece in pieces {
                prod = quasi_shuffle(&prod, &monomial(&Composition(piece)));
            }
            let signed = if m % 2 == 0 { prod } else { prod.neg() };
            for (k, v) in signed.terms() {
                out.add_term(k.clone(), v * c);
            }
        }
    }
    out
}

/// Truncated polynomial realization: polynomials in `t_1..t_N` with total
/// degree capped at `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedPoly {
    pub nvars: usize,
    pub degree_cap: u32,
    pub terms: BTreeMap<Vec<u32>, BigInt>,
}

impl TruncatedPoly {
    pub fn zero(nvars: usize, degree_cap: u32) -> Self {
        TruncatedPoly {
            nvars,
            degree_cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize, degree_cap: u32) -> Self {
        let mut p = TruncatedPoly::zero(nvars, degree_cap);
        p.terms.insert(vec![0; nvars], BigInt::one());
        p
    }

    pub fn add_term(&mut self, expv: Vec<u32>, coeff: BigInt) {
        if coeff.is_zero() || expv.iter().sum::<u32>() > self.degree_cap {
            return;
        }
        let entry = self.terms.entry(expv).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add(&self, other: &TruncatedPoly) -> TruncatedPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &TruncatedPoly) -> TruncatedPoly {
        let mut out = TruncatedPoly::zero(self.nvars, self.degree_cap);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let expv: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(expv, ca * cb);
            }
        }
        out
    }

    /// Evaluate at `t_i = 1/i` exactly.
    pub fn eval_harmonic(&self) -> BigRational {
        let mut acc = BigRational::zero();
        for (expv, c) in &self.terms {
            let mut denom = BigInt::one();
            for (i, &e) in expv.iter().enumerate() {
                denom *= BigInt::from(i as u64 + 1).pow(e);
            }
            acc += BigRational::new(c.clone(), denom);
        }
        acc
    }
}

/// `φ_N` with a degree cap: substitutes the first `N` variables into an
/// expression on the M basis.
pub fn realize(x: &QSymExpr, nvars: usize, degree_cap: u32) -> TruncatedPoly {
    let mut out = TruncatedPoly::zero(nvars, degree_cap);
    for (gamma, c) in x.terms() {
        let l = gamma.len();
        if l > nvars {
            continue;
        }
        // choose 1 ≤ m_1 < … < m_l ≤ nvars
        let mut idx: Vec<usize> = (0..l).collect();
        loop {
            let mut expv = vec![0u32; nvars];
            for (pos, &var) in idx.iter().enumerate() {
                expv[var] = gamma.parts()[pos];
            }
            out.add_term(expv, c.clone());
            // next combination
            if l == 0 {
                break;
            }
            let mut k = l;
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                if idx[k] + 1 <= nvars - (l - k) {
                    idx[k] += 1;
                    for j in k + 1..l {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
                if k == 0 {
                    k = usize::MAX;
                    break;
                }
            }
            if k == usize::MAX {
                break;
            }
        }
        if l == 0 {
            continue;
        }
    }
    out
}

/// `ρ_N = e ∘ φ_N`: realize on `N` variables and evaluate at `t_i = 1/i`.
pub fn rho_n(x: &QSymExpr, nvars: usize) -> BigRational {
    let cap = x
        .terms()
        .keys()
        .map(|k| k.weight())
        .max()
        .unwrap_or(0);
    realize(x, nvars, cap).eval_harmonic()
}

/// Determinant of a small matrix of expressions by Leibniz expansion;
/// products are quasi-shuffles.
pub fn det_qsym(mat: &[Vec<QSymExpr>]) -> QSymExpr {
    let n = mat.len();
    if n == 0 {
        return QSymExpr::unit();
    }
    let mut total = QSymExpr::zero();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |perm, sign| {
        let mut prod = QSymExpr::unit();
        for (i, &j) in perm.iter().enumerate() {
            prod = quasi_shuffle(&prod, &mat[i][j]);
            if prod.is_zero() {
                break;
            }
        }
        let signed = if sign { prod } else { prod.neg() };
        total = total.add(&signed);
    });
    total
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize], bool)) {
    fn rec(perm: &mut Vec<usize>, k: usize, even: bool, visit: &mut impl FnMut(&[usize], bool)) {
        let n = perm.len();
        if k == n {
            visit(perm, even);
            return;
        }
        for i in k..n {
            perm.swap(k, i);
            let flipped = if i == k { even } else { !even };
            rec(perm, k + 1, flipped, visit);
            perm.swap(k, i);
        }
    }
    rec(perm, k, true, visit);
}

fn diag_tableau_u32(shape: &SkewShape, diag: &BTreeMap<i64, u32>) -> Result<Tableau<u32>> {
    Tableau::diagonal(shape.clone(), diag)
}

fn comp_from_diag_up(diag: &BTreeMap<i64, u32>, start: i64, len: i64) -> Result<Composition> {
    let parts: Result<Vec<u32>> = (start..start + len)
        .map(|k| diag.get(&k).copied().ok_or(Error::MissingDiagonal(k)))
        .collect();
    Composition::new(parts?)
}

fn comp_from_diag_down(diag: &BTreeMap<i64, u32>, start: i64, len: i64) -> Result<Composition> {
    let parts: Result<Vec<u32>> = ((start - len + 1)..=start)
        .rev()
        .map(|k| diag.get(&k).copied().ok_or(Error::MissingDiagonal(k)))
        .collect();
    Composition::new(parts?)
}

/// H-type Jacobi–Trudi in the ring: the determinant of essential elements
/// that equals the Schur-type function of a diagonal tableau.
pub fn qsym_jt_matrix_e(shape: &SkewShape, diag: &BTreeMap<i64, u32>) -> Result<Vec<Vec<QSymExpr>>> {
    let r = shape.rows();
    let mut mat = vec![vec![QSymExpr::zero(); r]; r];
    for i in 1..=r {
        for j in 1..=r {
            let len = shape.outer().part(i) as i64 - shape.inner().part(j) as i64 - i as i64
                + j as i64;
            mat[i - 1][j - 1] = if len < 0 {
                QSymExpr::zero()
            } else if len == 0 {
                QSymExpr::unit()
            } else {
                let start = shape.inner().part(j) as i64 - j as i64 + 1;
                essential(&comp_from_diag_up(diag, start, len)?)
            };
        }
    }
    Ok(mat)
}

/// E-type Jacobi–Trudi in the ring: the determinant of monomial elements.
pub fn qsym_jt_matrix_m(shape: &SkewShape, diag: &BTreeMap<i64, u32>) -> Result<Vec<Vec<QSymExpr>>> {
    let conj_outer = shape.outer().conjugate();
    let conj_inner = shape.inner().conjugate();
    let s = conj_outer.len();
    let mut mat = vec![vec![QSymExpr::zero(); s]; s];
    for i in 1..=s {
        for j in 1..=s {
            let len =
                conj_outer.part(i) as i64 - conj_inner.part(j) as i64 - i as i64 + j as i64;
            mat[i - 1][j - 1] = if len < 0 {
                QSymExpr::zero()
            } else if len == 0 {
                QSymExpr::unit()
            } else {
                let start = -(conj_inner.part(j) as i64) + j as i64 - 1;
                monomial(&comp_from_diag_down(diag, start, len)?)
            };
        }
    }
    Ok(mat)
}

/// Giambelli in the ring for a straight shape with a diagonal filling.
pub fn qsym_giambelli_det(lambda: &Partition, diag: &BTreeMap<i64, u32>) -> Result<QSymExpr> {
    let (arms, legs) = lambda.frobenius();
    let k = arms.len();
    let mut mat = vec![vec![QSymExpr::zero(); k]; k];
    for i in 0..k {
        for j in 0..k {
            let mut parts = vec![arms[i]];
            parts.extend(std::iter::repeat(1).take(legs[j]));
            let shape = SkewShape::straight(Partition::new(parts)?);
            let t = diag_tableau_u32(&shape, diag)?;
            mat[i][j] = schur_qsym(&t);
        }
    }
    Ok(det_qsym(&mat))
}

/// Three-way antipode identity for a Schur-type element: the antipode of
/// `S_ν(γ)` equals `(-1)^{|ν|} S_{ν#}(γ#)`, and for diagonal fillings also
/// the two signed rim-decomposition product expansions over `ν#`.
pub fn antipode_schur_identity(t: &Tableau<u32>) -> Result<bool> {
    let n = t.cell_count();
    let lhs = antipode(&schur_qsym(t));
    let at = t.anti_transpose();
    let rhs = {
        let e = schur_qsym(&at);
        if n % 2 == 0 {
            e
        } else {
            e.neg()
        }
    };
    let mut ok = lhs == rhs;

    if t.is_diagonal() {
        // signed products over rim decompositions of the anti-transpose
        let mut h_sum = QSymExpr::zero();
        for rim in rim_decompositions(at.shape(), RimKind::H) {
            let mut prod = QSymExpr::unit();
            for tuple in theta_contents(&rim, &at)? {
                if tuple.is_empty() {
                    continue;
                }
                prod = quasi_shuffle(&prod, &essential(&Composition::new(tuple)?));
            }
            h_sum = if rim.sign >= 0 {
                h_sum.add(&prod)
            } else {
                h_sum.sub(&prod)
            };
        }
        let mut e_sum = QSymExpr::zero();
        for rim in rim_decompositions(at.shape(), RimKind::E) {
            let mut prod = QSymExpr::unit();
            for tuple in theta_contents(&rim, &at)? {
                if tuple.is_empty() {
                    continue;
                }
                prod = quasi_shuffle(&prod, &monomial(&Composition::new(tuple)?));
            }
            e_sum = if rim.sign >= 0 {
                e_sum.add(&prod)
            } else {
                e_sum.sub(&prod)
            };
        }
        let sign = |x: QSymExpr| if n % 2 == 0 { x } else { x.neg() };
        ok = ok && lhs == sign(h_sum) && lhs == sign(e_sum);
    }
    Ok(ok)
}

/// Dual Cauchy in the ring: signed sum of products of Schur-type elements
/// over complementary shapes equals the block determinant of essentials.
pub fn qsym_dual_cauchy(
    r: usize,
    s: usize,
    c_diag: &BTreeMap<i64, u32>,
    d_diag: &BTreeMap<i64, u32>,
) -> Result<(QSymExpr, QSymExpr)> {
    use crate::identities::{box_complement, partitions_in_box};
    let mut lhs = QSymExpr::zero();
    for lambda in partitions_in_box(r, s) {
        let star = box_complement(&lambda, r, s);
        let sa = if lambda.is_empty() {
            QSymExpr::unit()
        } else {
            schur_qsym(&diag_tableau_u32(&SkewShape::straight(lambda.clone()), c_diag)?)
        };
        let sb = if star.is_empty() {
            QSymExpr::unit()
        } else {
            schur_qsym(&diag_tableau_u32(&SkewShape::straight(star), d_diag)?)
        };
        let term = quasi_shuffle(&sa, &sb);
        lhs = if lambda.weight() % 2 == 0 {
            lhs.add(&term)
        } else {
            lhs.sub(&term)
        };
    }
    let rhs = det_qsym(&dual_cauchy_matrix(r, s, c_diag, d_diag)?);
    Ok((lhs, rhs))
}

fn dual_cauchy_matrix(
    r: usize,
    s: usize,
    c_diag: &BTreeMap<i64, u32>,
    d_diag: &BTreeMap<i64, u32>,
) -> Result<Vec<Vec<QSymExpr>>> {
    let eta = r + s;
    let mut mat = vec![vec![QSymExpr::zero(); eta]; eta];
    for i in 1..=r {
        for j in 1..=eta {
            mat[i - 1][j - 1] = if j < i {
                QSymExpr::zero()
            } else if j == i {
                QSymExpr::unit()
            } else {
                essential(&comp_from_diag_up(c_diag, i as i64 - r as i64, (j - i) as i64)?)
            };
        }
    }
    for i in 1..=s {
        for j in 1..=eta {
            mat[r + i - 1][j - 1] = if j < i {
                QSymExpr::zero()
            } else if j == i {
                QSymExpr::unit()
            } else {
                essential(&comp_from_diag_up(d_diag, i as i64 - s as i64, (j - i) as i64)?)
            };
        }
    }
    Ok(mat)
}

/// The antipode image of the dual Cauchy identity: skew Schur-type elements
/// on complementary shapes against the entrywise-antipode determinant.
pub fn qsym_dual_cauchy_antipode(
    r: usize,
    s: usize,
    c_diag: &BTreeMap<i64, u32>,
    d_diag: &BTreeMap<i64, u32>,
) -> Result<(QSymExpr, QSymExpr)> {
    use crate::identities::{box_complement, partitions_in_box};
    let mut lhs = QSymExpr::zero();
    for lambda in partitions_in_box(s, r) {
        // λ ⊂ (r^s); λ* ⊂ (s^r)
        let star = box_complement(&lambda, s, r);
        let sa = if star.is_empty() {
            QSymExpr::unit()
        } else {
            let t = diag_tableau_u32(&SkewShape::straight(star.clone()), c_diag)?;
            schur_qsym(&t.anti_transpose())
        };
        let sb = if lambda.is_empty() {
            QSymExpr::unit()
        } else {
            let t = diag_tableau_u32(&SkewShape::straight(lambda.clone()), d_diag)?;
            schur_qsym(&t.anti_transpose())
        };
        let term = quasi_shuffle(&sa, &sb);
        lhs = if lambda.weight() % 2 == 0 {
            lhs.add(&term)
        } else {
            lhs.sub(&term)
        };
    }
    let mat = dual_cauchy_matrix(r, s, c_diag, d_diag)?;
    let s_mat: Vec<Vec<QSymExpr>> = mat.iter().map(|row| row.iter().map(antipode).collect()).collect();
    let rhs = det_qsym(&s_mat);
    Ok((lhs, rhs))
}
