//! Exact linear algebra over small prime fields `F_q`, plus exact integer
//! rank and Gaussian binomial coefficients.
//!
//! The central type is [`Subspace`]: a linear subspace of `F_q^d` stored as
//! its reduced row-echelon basis with zero rows dropped. RREF is a canonical
//! form, so subspace equality, ordering and hashing are plain byte
//! comparisons on the basis matrix.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Upper bound on `q^d` for subspace enumeration (2^20 vectors).
pub const ENUMERATION_GUARD: u128 = 1 << 20;

/// Check primality of a small modulus by trial division.
pub fn is_prime(q: u8) -> bool {
    if q < 2 {
        return false;
    }
    let mut k = 2u16;
    while k * k <= q as u16 {
        if q as u16 % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

fn check_prime(q: u8) -> Result<()> {
    if is_prime(q) {
        Ok(())
    } else {
        Err(Error::NonPrimeModulus(q))
    }
}

/// Multiplicative inverse mod a prime, by Fermat's little theorem.
fn inv_mod(a: u8, q: u8) -> u8 {
    debug_assert!(a % q != 0);
    let mut result = 1u32;
    let mut base = (a % q) as u32;
    let mut exp = q as u32 - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % q as u32;
        }
        base = base * base % q as u32;
        exp >>= 1;
    }
    result as u8
}

/// A dense matrix over the prime field `F_q`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldMatrix {
    q: u8,
    rows: usize,
    cols: usize,
    entries: Vec<u8>,
}

impl FieldMatrix {
    /// Zero matrix of the given shape.
    pub fn zero(q: u8, rows: usize, cols: usize) -> Result<Self> {
        check_prime(q)?;
        Ok(FieldMatrix { q, rows, cols, entries: vec![0; rows * cols] })
    }

    /// Identity matrix of order `n`.
    pub fn identity(q: u8, n: usize) -> Result<Self> {
        let mut m = Self::zero(q, n, n)?;
        for i in 0..n {
            m.set(i, i, 1);
        }
        Ok(m)
    }

    /// Build from explicit rows; entries are reduced mod `q`.
    pub fn from_rows(q: u8, rows: &[Vec<u8>]) -> Result<Self> {
        check_prime(q)?;
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("ragged rows".to_string()));
        }
        let entries = rows.iter().flat_map(|r| r.iter().map(|&e| e % q)).collect();
        Ok(FieldMatrix { q, rows: rows.len(), cols, entries })
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.entries[r * self.cols + c] = v % self.q;
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Append the rows of `other` below `self`. Shapes and fields must agree.
    pub fn stack(&self, other: &FieldMatrix) -> Result<FieldMatrix> {
        if self.q != other.q {
            return Err(Error::FieldMismatch { left: self.q, right: other.q });
        }
        if self.cols != other.cols {
            return Err(Error::AmbientMismatch { left: self.cols, right: other.cols });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(FieldMatrix { q: self.q, rows: self.rows + other.rows, cols: self.cols, entries })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_multiple(&mut self, dst: usize, src: usize, factor: u8) {
        if factor == 0 {
            return;
        }
        let q = self.q as u16;
        for c in 0..self.cols {
            let v = (self.get(dst, c) as u16 + factor as u16 * self.get(src, c) as u16) % q;
            self.entries[dst * self.cols + c] = v as u8;
        }
    }

    fn scale_row(&mut self, r: usize, factor: u8) {
        let q = self.q as u16;
        for c in 0..self.cols {
            let v = self.get(r, c) as u16 * factor as u16 % q;
            self.entries[r * self.cols + c] = v as u8;
        }
    }

    /// In-place reduction to reduced row-echelon form; returns the rank.
    pub fn rref_in_place(&mut self) -> usize {
        let mut pivot_row = 0;
        for c in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(r) = (pivot_row..self.rows).find(|&r| self.get(r, c) != 0) else {
                continue;
            };
            self.swap_rows(pivot_row, r);
            let inv = inv_mod(self.get(pivot_row, c), self.q);
            self.scale_row(pivot_row, inv);
            for other in 0..self.rows {
                if other != pivot_row && self.get(other, c) != 0 {
                    let factor = (self.q - self.get(other, c)) % self.q;
                    self.add_multiple(other, pivot_row, factor);
                }
            }
            pivot_row += 1;
        }
        pivot_row
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }
}

/// Reduced row-echelon form of a matrix together with its rank. Idempotent.
pub fn rref(m: &FieldMatrix) -> (FieldMatrix, usize) {
    let mut out = m.clone();
    let rank = out.rref_in_place();
    (out, rank)
}

/// A linear subspace of `F_q^d` in canonical form.
///
/// The basis is an RREF matrix with no zero rows, so two subspaces are equal
/// exactly when their representations are byte-equal. The zero subspace has
/// an empty basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subspace {
    basis: FieldMatrix,
}

impl Subspace {
    /// The zero subspace of `F_q^d`.
    pub fn zero(q: u8, ambient: usize) -> Result<Self> {
        Ok(Subspace { basis: FieldMatrix::zero(q, 0, ambient)? })
    }

    /// The full space `F_q^d`.
    pub fn full(q: u8, ambient: usize) -> Result<Self> {
        Ok(Subspace { basis: FieldMatrix::identity(q, ambient)? })
    }

    /// Span of a single vector.
    pub fn line(q: u8, vector: &[u8]) -> Result<Self> {
        let m = FieldMatrix::from_rows(q, &[vector.to_vec()])?;
        Ok(row_space(&m))
    }

    /// Span of explicit vectors.
    pub fn span(q: u8, vectors: &[Vec<u8>], ambient: usize) -> Result<Self> {
        if vectors.is_empty() {
            return Self::zero(q, ambient);
        }
        if vectors.iter().any(|v| v.len() != ambient) {
            return Err(Error::ShapeMismatch("vector length != ambient".to_string()));
        }
        let m = FieldMatrix::from_rows(q, vectors)?;
        Ok(row_space(&m))
    }

    pub fn q(&self) -> u8 {
        self.basis.q()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Canonical RREF basis, one row per dimension.
    pub fn basis(&self) -> &FieldMatrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[u8]> {
        (0..self.dim()).map(move |r| self.basis.row(r))
    }

    /// Reduce `vector` modulo the subspace; the result is zero exactly when
    /// the vector lies in the span.
    pub fn reduce(&self, vector: &[u8]) -> Result<Vec<u8>> {
        if vector.len() != self.ambient() {
            return Err(Error::AmbientMismatch { left: vector.len(), right: self.ambient() });
        }
        let q = self.q() as u16;
        let mut v: Vec<u8> = vector.iter().map(|&e| e % self.q()).collect();
        for r in 0..self.dim() {
            let pivot = self.basis.row(r).iter().position(|&e| e != 0).expect("no zero rows");
            let c = v[pivot];
            if c != 0 {
                let factor = (self.q() - c) as u16;
                for j in 0..v.len() {
                    v[j] = ((v[j] as u16 + factor * self.basis.get(r, j) as u16) % q) as u8;
                }
            }
        }
        Ok(v)
    }

    pub fn contains(&self, vector: &[u8]) -> Result<bool> {
        Ok(self.reduce(vector)?.iter().all(|&e| e == 0))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        for row in other.basis_rows() {
            if !self.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Columns where some basis vector is nonzero.
    pub fn support(&self) -> Vec<usize> {
        (0..self.ambient())
            .filter(|&c| (0..self.dim()).any(|r| self.basis.get(r, c) != 0))
            .collect()
    }

    /// Iterate over every vector of the subspace (q^dim of them), including
    /// zero. Intended for small exhaustive checks.
    pub fn vectors(&self) -> Vec<Vec<u8>> {
        let q = self.q();
        let k = self.dim();
        let mut count = 1u128;
        for _ in 0..k {
            count *= q as u128;
        }
        let mut out = Vec::with_capacity(count as usize);
        let mut coeffs = vec![0u8; k];
        loop {
            let mut v = vec![0u8; self.ambient()];
            for (r, &c) in coeffs.iter().enumerate() {
                if c != 0 {
                    for j in 0..v.len() {
                        v[j] = ((v[j] as u16 + c as u16 * self.basis.get(r, j) as u16)
                            % q as u16) as u8;
                    }
                }
            }
            out.push(v);
            let mut i = 0;
            loop {
                if i == k {
                    return out;
                }
                coeffs[i] += 1;
                if coeffs[i] == q {
                    coeffs[i] = 0;
                    i += 1;
                } else {
                    break;
                }
            }
        }
    }
}

/// Canonical subspace spanned by the rows of a matrix.
pub fn row_space(m: &FieldMatrix) -> Subspace {
    let (reduced, rank) = rref(m);
    let rows: Vec<Vec<u8>> = (0..rank).map(|r| reduced.row(r).to_vec()).collect();
    let basis = if rows.is_empty() {
        FieldMatrix { q: m.q(), rows: 0, cols: m.cols(), entries: Vec::new() }
    } else {
        FieldMatrix::from_rows(m.q(), &rows).expect("rows validated")
    };
    Subspace { basis }
}

fn check_compatible(a: &Subspace, b: &Subspace) -> Result<()> {
    if a.q() != b.q() {
        return Err(Error::FieldMismatch { left: a.q(), right: b.q() });
    }
    if a.ambient() != b.ambient() {
        return Err(Error::AmbientMismatch { left: a.ambient(), right: b.ambient() });
    }
    Ok(())
}

/// Sum `a + b` (the span of the union of the bases).
pub fn sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    check_compatible(a, b)?;
    Ok(row_space(&a.basis.stack(&b.basis)?))
}

/// Span of any number of subspaces of one ambient space.
pub fn span_many(q: u8, ambient: usize, parts: &[&Subspace]) -> Result<Subspace> {
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for p in parts {
        if p.q() != q {
            return Err(Error::FieldMismatch { left: q, right: p.q() });
        }
        if p.ambient() != ambient {
            return Err(Error::AmbientMismatch { left: ambient, right: p.ambient() });
        }
        rows.extend(p.basis_rows().map(<[u8]>::to_vec));
    }
    Subspace::span(q, &rows, ambient)
}

/// Exact intersection `a ∩ b` by the Zassenhaus stacked-kernel method.
pub fn intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    check_compatible(a, b)?;
    let q = a.q();
    let d = a.ambient();
    let (ka, kb) = (a.dim(), b.dim());
    if ka == 0 || kb == 0 {
        return Subspace::zero(q, d);
    }
    // Rows [v | v] for v in basis(a), [w | 0] for w in basis(b). After row
    // reduction, rows whose left half vanished carry an intersection basis in
    // the right half.
    let mut m = FieldMatrix::zero(q, ka + kb, 2 * d)?;
    for (r, row) in a.basis_rows().enumerate() {
        for (c, &e) in row.iter().enumerate() {
            m.set(r, c, e);
            m.set(r, d + c, e);
        }
    }
    for (r, row) in b.basis_rows().enumerate() {
        for (c, &e) in row.iter().enumerate() {
            m.set(ka + r, c, e);
        }
    }
    m.rref_in_place();
    let mut rows = Vec::new();
    for r in 0..m.rows() {
        let left_zero = (0..d).all(|c| m.get(r, c) == 0);
        let right = (d..2 * d).map(|c| m.get(r, c)).collect::<Vec<_>>();
        if left_zero && right.iter().any(|&e| e != 0) {
            rows.push(right);
        }
    }
    Subspace::span(q, &rows, d)
}

/// Block-diagonal embedding of two subspaces; the ambient dimensions add and
/// so do the dimensions.
pub fn direct_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    if a.q() != b.q() {
        return Err(Error::FieldMismatch { left: a.q(), right: b.q() });
    }
    let (da, db) = (a.ambient(), b.ambient());
    let mut rows = Vec::with_capacity(a.dim() + b.dim());
    for row in a.basis_rows() {
        let mut v = row.to_vec();
        v.resize(da + db, 0);
        rows.push(v);
    }
    for row in b.basis_rows() {
        let mut v = vec![0u8; da];
        v.extend_from_slice(row);
        rows.push(v);
    }
    Subspace::span(a.q(), &rows, da + db)
}

/// Tensor (Kronecker) product; ambient dimensions multiply and so do the
/// dimensions.
pub fn tensor(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    if a.q() != b.q() {
        return Err(Error::FieldMismatch { left: a.q(), right: b.q() });
    }
    let q = a.q() as u16;
    let (da, db) = (a.ambient(), b.ambient());
    let mut rows = Vec::with_capacity(a.dim() * b.dim());
    for u in a.basis_rows() {
        for v in b.basis_rows() {
            let mut w = vec![0u8; da * db];
            for (i, &ui) in u.iter().enumerate() {
                if ui == 0 {
                    continue;
                }
                for (j, &vj) in v.iter().enumerate() {
                    w[i * db + j] = (ui as u16 * vj as u16 % q) as u8;
                }
            }
            rows.push(w);
        }
    }
    Subspace::span(a.q(), &rows, da * db)
}

/// The component of `w` in `a` when `w ∈ a + b` and `a ∩ b = {0}`.
pub fn project(w: &[u8], a: &Subspace, b: &Subspace) -> Result<Vec<u8>> {
    check_compatible(a, b)?;
    if w.len() != a.ambient() {
        return Err(Error::AmbientMismatch { left: w.len(), right: a.ambient() });
    }
    if !intersect(a, b)?.is_zero() {
        return Err(Error::SubspacesIntersect);
    }
    let q = a.q();
    let d = a.ambient();
    let (ka, kb) = (a.dim(), b.dim());
    // Solve coeffs * [basis(a); basis(b)] = w by reducing the transposed
    // augmented system [M^T | w^T].
    let mut aug = FieldMatrix::zero(q, d, ka + kb + 1)?;
    for (r, row) in a.basis_rows().enumerate() {
        for (c, &e) in row.iter().enumerate() {
            aug.set(c, r, e);
        }
    }
    for (r, row) in b.basis_rows().enumerate() {
        for (c, &e) in row.iter().enumerate() {
            aug.set(c, ka + r, e);
        }
    }
    for (c, &e) in w.iter().enumerate() {
        aug.set(c, ka + kb, e % q);
    }
    aug.rref_in_place();
    let mut coeffs = vec![0u8; ka + kb];
    for r in 0..aug.rows() {
        let Some(pivot) = (0..ka + kb + 1).find(|&c| aug.get(r, c) != 0) else {
            continue;
        };
        if pivot == ka + kb {
            return Err(Error::NotInSpan);
        }
        coeffs[pivot] = aug.get(r, ka + kb);
    }
    let mut u = vec![0u8; d];
    for (r, row) in a.basis_rows().enumerate() {
        if coeffs[r] != 0 {
            for (j, &e) in row.iter().enumerate() {
                u[j] = ((u[j] as u16 + coeffs[r] as u16 * e as u16) % q as u16) as u8;
            }
        }
    }
    Ok(u)
}

fn pow_u128(q: u8, e: usize) -> Option<u128> {
    let mut out = 1u128;
    for _ in 0..e {
        out = out.checked_mul(q as u128)?;
        if out > ENUMERATION_GUARD {
            return Some(out);
        }
    }
    Some(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            go(i + 1, n, k, current, out);
            current.pop();
        }
    }
    go(0, n, k, &mut current, &mut out);
    out
}

/// All subspaces of `F_q^d` in canonical form, smallest dimension first;
/// within a dimension ordered by pivot-column set and then by free entries.
///
/// When `dim_filter` is given, only subspaces of that dimension are produced.
/// Guarded by `q^d <= 2^20`.
pub fn enumerate_subspaces(d: usize, q: u8, dim_filter: Option<usize>) -> Result<Vec<Subspace>> {
    check_prime(q)?;
    match pow_u128(q, d) {
        Some(total) if total <= ENUMERATION_GUARD => {}
        _ => return Err(Error::EnumerationGuard { d, q }),
    }
    let dims: Vec<usize> = match dim_filter {
        Some(k) if k > d => return Ok(Vec::new()),
        Some(k) => vec![k],
        None => (0..=d).collect(),
    };
    let mut out = Vec::new();
    for k in dims {
        if k == 0 {
            out.push(Subspace::zero(q, d)?);
            continue;
        }
        for pivots in combinations(d, k) {
            // Free positions: to the right of each pivot, excluding later
            // pivot columns (RREF forces zeros there).
            let mut free = Vec::new();
            for (r, &p) in pivots.iter().enumerate() {
                for c in p + 1..d {
                    if !pivots.contains(&c) {
                        free.push((r, c));
                    }
                }
            }
            let mut values = vec![0u8; free.len()];
            loop {
                let mut m = FieldMatrix::zero(q, k, d)?;
                for (r, &p) in pivots.iter().enumerate() {
                    m.set(r, p, 1);
                }
                for (&(r, c), &v) in free.iter().zip(values.iter()) {
                    m.set(r, c, v);
                }
                out.push(Subspace { basis: m });
                let mut i = free.len();
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    values[i] += 1;
                    if values[i] == q {
                        values[i] = 0;
                        if i == 0 {
                            i = usize::MAX;
                            break;
                        }
                    } else {
                        break;
                    }
                }
                if i == usize::MAX || free.is_empty() {
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// The Gaussian binomial coefficient `[n; k]_q`: the number of
/// `k`-dimensional subspaces of `F_q^n`. Zero when `n < k`, one when `k = 0`.
pub fn gaussian_coeff(n: usize, k: usize, q: u8) -> BigUint {
    if k == 0 {
        return BigUint::one();
    }
    if n < k {
        return BigUint::zero();
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 1..=k {
        num *= q.pow((n - k + i) as u32) - BigUint::one();
        den *= q.pow(i as u32) - BigUint::one();
    }
    num / den
}

/// Total number of subspaces of `F_q^d` (all dimensions).
pub fn subspace_count(d: usize, q: u8) -> BigUint {
    (0..=d).map(|k| gaussian_coeff(d, k, q)).sum()
}

/// A dense matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut m = Self::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.entries[r * cols + c] = f(r, c);
            }
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { BigInt::one() } else { BigInt::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch("inner dimensions differ".to_string()));
        }
        Ok(Self::from_fn(self.rows, other.cols, |r, c| {
            (0..self.cols).map(|k| self.get(r, k) * other.get(k, c)).sum()
        }))
    }

    pub fn transpose(&self) -> IntegerMatrix {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, factor: &BigInt) -> IntegerMatrix {
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c) * factor)
    }
}

/// Exact rank over the rationals by fraction-free (Bareiss) elimination.
pub fn rational_rank(m: &IntegerMatrix) -> usize {
    let mut a = m.entries.clone();
    let (rows, cols) = (m.rows, m.cols);
    let idx = |r: usize, c: usize| r * cols + c;
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[idx(r, c)].is_zero()) else {
            continue;
        };
        if p != rank {
            for j in 0..cols {
                a.swap(idx(p, j), idx(rank, j));
            }
        }
        let pivot = a[idx(rank, c)].clone();
        for r in rank + 1..rows {
            let lead = a[idx(r, c)].clone();
            for j in 0..cols {
                let v = (&a[idx(r, j)] * &pivot - &lead * &a[idx(rank, j)]) / &prev;
                a[idx(r, j)] = v;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// `|x|` as a BigUint, for rank-bound comparisons.
pub fn bigint_abs(x: &BigInt) -> BigUint {
    x.abs().to_biguint().expect("abs is non-negative")
}
