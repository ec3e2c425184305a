//! Boolean functions on `2n` bits with a fixed input partition, their
//! bipartite realizations, and the subspace-intersection families.
//!
//! Inputs are packed into `u32` words per side; bit `i` of a word is variable
//! `x_{i+1}` (or `y_{i+1}`), most significant first, so the binary rendering
//! of the word reads the variables in order. See [`crate::input_bit`].

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::gf::{self, FieldMatrix, IntegerMatrix, Subspace};
use crate::{input_bit, Error, Result};

/// Dense truth tables are limited to this many bits per side.
pub const DENSE_GUARD: usize = 13;

/// Assignments enumerated by [`subfunction_count`] are limited to this many
/// fixed variables.
pub const SUBFUNCTION_GUARD: usize = 22;

/// The named function families of the experiment suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `EQ_n(x, y) = 1` iff `x = y`.
    Eq,
    /// `INEQ_n = ¬EQ_n`.
    Ineq,
    /// Inner product mod 2.
    Ip,
    /// Disjointness: no position where both sides are 1.
    Disj,
    /// Parity of all `2n` bits.
    Parity,
    /// Element distinctness on value blocks.
    Ed,
    /// Paley function: difference is a quadratic residue mod `q`.
    Pal,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Eq => "eq",
            Family::Ineq => "ineq",
            Family::Ip => "ip",
            Family::Disj => "disj",
            Family::Parity => "parity",
            Family::Ed => "ed",
            Family::Pal => "pal",
        }
    }
}

enum Repr {
    /// Packed truth table: bit `(x << n) | y`.
    Table(Vec<u64>),
    /// Structured evaluation, for families too large to tabulate.
    Callback(Box<dyn Fn(u32, u32) -> bool + Send + Sync>),
}

/// A Boolean function on `2n` bits with the partition `x_1..x_n | y_1..y_n`.
pub struct BooleanFunction {
    n: usize,
    repr: Repr,
}

impl BooleanFunction {
    /// Build from a dense truth table given as a bit slice indexed by
    /// `(x << n) | y`.
    pub fn from_table(n: usize, bits: &[bool]) -> Result<Self> {
        if n == 0 || n > DENSE_GUARD {
            return Err(Error::DenseGuard { n, limit: DENSE_GUARD });
        }
        if bits.len() != 1 << (2 * n) {
            return Err(Error::ShapeMismatch(format!(
                "table needs {} bits, got {}",
                1usize << (2 * n),
                bits.len()
            )));
        }
        let mut words = vec![0u64; bits.len().div_ceil(64)];
        for (i, &b) in bits.iter().enumerate() {
            if b {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        Ok(BooleanFunction { n, repr: Repr::Table(words) })
    }

    /// Build from an evaluation rule; no dense table is materialized.
    pub fn from_eval(n: usize, f: impl Fn(u32, u32) -> bool + Send + Sync + 'static) -> Self {
        BooleanFunction { n, repr: Repr::Callback(Box::new(f)) }
    }

    /// Tabulate an evaluation rule (guarded by [`DENSE_GUARD`]).
    pub fn tabulate(n: usize, f: impl Fn(u32, u32) -> bool) -> Result<Self> {
        if n == 0 || n > DENSE_GUARD {
            return Err(Error::DenseGuard { n, limit: DENSE_GUARD });
        }
        let bits: Vec<bool> = (0..1usize << (2 * n))
            .map(|i| f((i >> n) as u32, (i & ((1 << n) - 1)) as u32))
            .collect();
        Self::from_table(n, &bits)
    }

    /// Bits per side.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn evaluate(&self, x: u32, y: u32) -> bool {
        debug_assert!(x < 1 << self.n && y < 1 << self.n);
        match &self.repr {
            Repr::Table(words) => {
                let i = ((x as usize) << self.n) | y as usize;
                words[i / 64] >> (i % 64) & 1 == 1
            }
            Repr::Callback(f) => f(x, y),
        }
    }

    /// Whether a dense table is stored (vs. callback evaluation).
    pub fn is_dense(&self) -> bool {
        matches!(self.repr, Repr::Table(_))
    }

    /// The truth table as a bit vector indexed by `(x << n) | y`.
    pub fn table_bits(&self) -> Vec<bool> {
        (0..1usize << (2 * self.n))
            .map(|i| self.evaluate((i >> self.n) as u32, (i & ((1 << self.n) - 1)) as u32))
            .collect()
    }

    pub fn count_ones(&self) -> usize {
        self.table_bits().iter().filter(|&&b| b).count()
    }
}

impl core::fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "BooleanFunction(n={}, dense={})", self.n, self.is_dense())
    }
}

fn quadratic_residues(q: u8) -> BTreeSet<u16> {
    (1..q as u16).map(|a| a * a % q as u16).collect()
}

/// Map an `n`-bit word to a nonzero element of `F_q`; words encoding zero go
/// to 1 so that the image stays inside `F_q^*`.
fn pal_embed(word: u32, q: u8) -> u16 {
    let v = (word as u64 % q as u64) as u16;
    if v == 0 {
        1
    } else {
        v
    }
}

/// Construct a named function. `q` is required for [`Family::Pal`] and must
/// be a prime congruent to 1 mod 4; it is ignored otherwise.
pub fn make_named(family: Family, n: usize, q: Option<u8>) -> Result<BooleanFunction> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".to_string()));
    }
    match family {
        Family::Eq => BooleanFunction::tabulate(n, |x, y| x == y),
        Family::Ineq => BooleanFunction::tabulate(n, |x, y| x != y),
        Family::Ip => BooleanFunction::tabulate(n, |x, y| (x & y).count_ones() % 2 == 1),
        Family::Disj => BooleanFunction::tabulate(n, |x, y| x & y == 0),
        Family::Parity => {
            BooleanFunction::tabulate(n, |x, y| (x.count_ones() + y.count_ones()) % 2 == 1)
        }
        Family::Ed => {
            let (m, block) = ed_shape(n)?;
            BooleanFunction::tabulate(n, move |x, y| {
                // values in [m^2] via binary value + 1; a collision anywhere
                // among the 2m values makes the function 0
                let mut values = BTreeSet::new();
                for b in 0..m {
                    let shift = (m - 1 - b) * block;
                    let xv = (x >> shift) & ((1 << block) - 1);
                    let yv = (y >> shift) & ((1 << block) - 1);
                    values.insert(xv + 1);
                    values.insert(yv + 1);
                }
                values.len() == 2 * m
            })
        }
        Family::Pal => {
            let q = q
                .ok_or_else(|| Error::InvalidParameter("pal requires a field size".to_string()))?;
            if !gf::is_prime(q) {
                return Err(Error::NonPrimeModulus(q));
            }
            if q % 4 != 1 {
                return Err(Error::InvalidParameter(format!("pal needs q ≡ 1 mod 4, got {q}")));
            }
            let residues = quadratic_residues(q);
            BooleanFunction::tabulate(n, move |x, y| {
                let a = pal_embed(x, q);
                let b = pal_embed(y, q);
                let diff = (a + q as u16 - b) % q as u16;
                residues.contains(&diff)
            })
        }
    }
}

/// Element-distinctness shape: `n = m * 2*log2(m)` bits per side for a power
/// of two `m` (m blocks of `2*log2(m)` bits).
fn ed_shape(n: usize) -> Result<(usize, usize)> {
    let mut m = 2usize;
    loop {
        let block = 2 * m.trailing_zeros() as usize;
        let need = m * block;
        if need == n {
            return Ok((m, block));
        }
        if need > n {
            return Err(Error::InvalidParameter(format!(
                "no power-of-two m with m*2*log2(m) = {n}"
            )));
        }
        m *= 2;
    }
}

/// The subspace-intersection function on two `d x d` matrices over `F_2`:
/// value 1 exactly when the row spaces intersect nontrivially.
///
/// Inputs are the matrix entries in row-major order, `A` on the left side and
/// `B` on the right. Dense for `d*d <= 13` (i.e. `d <= 3`), callback-backed
/// beyond.
pub fn make_si(d: usize) -> Result<BooleanFunction> {
    if d == 0 {
        return Err(Error::InvalidParameter("d must be positive".to_string()));
    }
    let n = d * d;
    let eval = move |a: u32, b: u32| -> bool { si_eval(d, a, b) };
    if n <= DENSE_GUARD {
        BooleanFunction::tabulate(n, eval)
    } else {
        Ok(BooleanFunction::from_eval(n, eval))
    }
}

/// Decode a packed word into a `d x d` matrix over `F_2` (row-major, first
/// entry in the most significant bit).
pub fn unpack_matrix(word: u32, d: usize) -> FieldMatrix {
    let n = d * d;
    let rows: Vec<Vec<u8>> = (0..d)
        .map(|r| (0..d).map(|c| u8::from(input_bit(word, r * d + c, n))).collect())
        .collect();
    FieldMatrix::from_rows(2, &rows).expect("2 is prime")
}

fn si_eval(d: usize, a: u32, b: u32) -> bool {
    let ma = unpack_matrix(a, d);
    let mb = unpack_matrix(b, d);
    let ra = gf::rref(&ma).1;
    let rb = gf::rref(&mb).1;
    let stacked = ma.stack(&mb).expect("same shape");
    let rs = gf::rref(&stacked).1;
    // dim(U ∩ V) = dim U + dim V - dim(U + V)
    ra + rb > rs
}

/// A bipartite graph stored as a packed adjacency bit-matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteRealization {
    nl: usize,
    nr: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BipartiteRealization {
    pub fn new(nl: usize, nr: usize) -> Self {
        let words_per_row = nr.div_ceil(64).max(1);
        BipartiteRealization { nl, nr, words_per_row, bits: vec![0; nl * words_per_row] }
    }

    pub fn from_edges(nl: usize, nr: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(nl, nr);
        for &(u, v) in edges {
            g.set_edge(u, v, true);
        }
        g
    }

    pub fn left_count(&self) -> usize {
        self.nl
    }

    pub fn right_count(&self) -> usize {
        self.nr
    }

    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        debug_assert!(u < self.nl && v < self.nr);
        let idx = u * self.words_per_row + v / 64;
        if present {
            self.bits[idx] |= 1 << (v % 64);
        } else {
            self.bits[idx] &= !(1 << (v % 64));
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.nl && v < self.nr);
        self.bits[u * self.words_per_row + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.nl {
            for v in 0..self.nr {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn left_degree(&self, u: usize) -> usize {
        (0..self.nr).filter(|&v| self.has_edge(u, v)).count()
    }

    pub fn right_degree(&self, v: usize) -> usize {
        (0..self.nl).filter(|&u| self.has_edge(u, v)).count()
    }

    /// Neighborhood of a left vertex as a bit row.
    pub fn left_neighborhood(&self, u: usize) -> Vec<u64> {
        self.bits[u * self.words_per_row..(u + 1) * self.words_per_row].to_vec()
    }

    /// Neighborhood of a right vertex as a bit column.
    pub fn right_neighborhood(&self, v: usize) -> Vec<u64> {
        let mut out = vec![0u64; nl_words(self.nl)];
        for u in 0..self.nl {
            if self.has_edge(u, v) {
                out[u / 64] |= 1 << (u % 64);
            }
        }
        out
    }

    /// Number of distinct neighborhoods on each side.
    pub fn distinct_neighborhoods(&self) -> (usize, usize) {
        let left: BTreeSet<Vec<u64>> = (0..self.nl).map(|u| self.left_neighborhood(u)).collect();
        let right: BTreeSet<Vec<u64>> = (0..self.nr).map(|v| self.right_neighborhood(v)).collect();
        (left.len(), right.len())
    }

    /// The 0/1 adjacency matrix over the integers.
    pub fn adjacency(&self) -> IntegerMatrix {
        IntegerMatrix::from_fn(self.nl, self.nr, |u, v| {
            BigInt::from(u8::from(self.has_edge(u, v)))
        })
    }
}

fn nl_words(nl: usize) -> usize {
    nl.div_ceil(64).max(1)
}

/// The bipartite realization `G_f` on `{0,1}^n x {0,1}^n`.
pub fn realization(f: &BooleanFunction) -> Result<BipartiteRealization> {
    let n = f.n();
    if n > DENSE_GUARD {
        return Err(Error::DenseGuard { n, limit: DENSE_GUARD });
    }
    let size = 1usize << n;
    let mut g = BipartiteRealization::new(size, size);
    for x in 0..size as u32 {
        for y in 0..size as u32 {
            if f.evaluate(x, y) {
                g.set_edge(x as usize, y as usize, true);
            }
        }
    }
    Ok(g)
}

/// The graph on all subspaces of `F_q^d` (both sides) with adjacency given by
/// nontrivial intersection. Vertices follow [`gf::enumerate_subspaces`]
/// order; the returned list holds the vertex labels.
pub fn make_pd_graph(d: usize, q: u8) -> Result<(BipartiteRealization, Vec<Subspace>)> {
    let subspaces = gf::enumerate_subspaces(d, q, None)?;
    let m = subspaces.len();
    let mut g = BipartiteRealization::new(m, m);
    for (i, a) in subspaces.iter().enumerate() {
        for (j, b) in subspaces.iter().enumerate() {
            if !gf::intersect(a, b)?.is_zero() {
                g.set_edge(i, j, true);
            }
        }
    }
    Ok((g, subspaces))
}

/// Two disjoint copies of `G_f` plus a perfect matching from each copy's left
/// side to the other copy's right side. Every vertex of the result has a
/// distinct neighborhood.
pub fn double_for_distinct_neighborhoods(f: &BooleanFunction) -> Result<BipartiteRealization> {
    let g = realization(f)?;
    let size = g.left_count();
    let mut doubled = BipartiteRealization::new(2 * size, 2 * size);
    for u in 0..size {
        for v in 0..size {
            if g.has_edge(u, v) {
                doubled.set_edge(u, v, true);
                doubled.set_edge(size + u, size + v, true);
            }
        }
    }
    for i in 0..size {
        // A_1 -> B_2 and A_2 -> B_1 matchings
        doubled.set_edge(i, size + i, true);
        doubled.set_edge(size + i, i, true);
    }
    Ok(doubled)
}

/// A partial assignment of the `2n` variables; `None` entries are free.
/// Index `i < n` is `x_{i+1}`, index `n + j` is `y_{j+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionMap {
    n: usize,
    vals: Vec<Option<bool>>,
}

impl RestrictionMap {
    pub fn all_free(n: usize) -> Self {
        RestrictionMap { n, vals: vec![None; 2 * n] }
    }

    pub fn from_values(n: usize, vals: Vec<Option<bool>>) -> Result<Self> {
        if vals.len() != 2 * n {
            return Err(Error::ShapeMismatch("restriction needs 2n entries".to_string()));
        }
        Ok(RestrictionMap { n, vals })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set(&mut self, index: usize, value: Option<bool>) {
        self.vals[index] = value;
    }

    pub fn get(&self, index: usize) -> Option<bool> {
        self.vals[index]
    }

    pub fn left(&self, i: usize) -> Option<bool> {
        self.vals[i]
    }

    pub fn right(&self, j: usize) -> Option<bool> {
        self.vals[self.n + j]
    }

    /// Indices of free left variables.
    pub fn free_left(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.vals[i].is_none()).collect()
    }

    /// Indices of free right variables.
    pub fn free_right(&self) -> Vec<usize> {
        (0..self.n).filter(|&j| self.vals[self.n + j].is_none()).collect()
    }

    /// The fixed part of the left word, free positions zero.
    pub fn left_word(&self) -> u32 {
        let mut w = 0;
        for i in 0..self.n {
            if self.vals[i] == Some(true) {
                w = crate::with_input_bit(w, i, self.n, true);
            }
        }
        w
    }

    pub fn right_word(&self) -> u32 {
        let mut w = 0;
        for j in 0..self.n {
            if self.vals[self.n + j] == Some(true) {
                w = crate::with_input_bit(w, j, self.n, true);
            }
        }
        w
    }
}

/// Number of distinct subfunctions of `f` on the left-variable `block`, over
/// all assignments to the remaining variables.
pub fn subfunction_count(f: &BooleanFunction, block: &[usize]) -> Result<u64> {
    let n = f.n();
    let mut seen = vec![false; n];
    for &i in block {
        if i >= n {
            return Err(Error::InvalidParameter(format!("block index {i} out of range")));
        }
        if seen[i] {
            return Err(Error::InvalidParameter("duplicate block index".to_string()));
        }
        seen[i] = true;
    }
    let others: Vec<usize> = (0..n).filter(|&i| !seen[i]).collect();
    let fixed_count = others.len() + n;
    if fixed_count > SUBFUNCTION_GUARD {
        return Err(Error::DenseGuard { n: fixed_count, limit: SUBFUNCTION_GUARD });
    }
    let mut tables = BTreeSet::new();
    let words = (1usize << block.len()).div_ceil(64);
    for fixed in 0u64..1 << fixed_count {
        // fixed bits: first the non-block left variables, then all right bits
        let mut x = 0u32;
        for (k, &i) in others.iter().enumerate() {
            if fixed >> k & 1 == 1 {
                x = crate::with_input_bit(x, i, n, true);
            }
        }
        let y = (fixed >> others.len()) as u32;
        let mut table = vec![0u64; words];
        for free in 0u32..1 << block.len() {
            let mut xx = x;
            for (k, &i) in block.iter().enumerate() {
                if free >> k & 1 == 1 {
                    xx = crate::with_input_bit(xx, i, n, true);
                }
            }
            if f.evaluate(xx, y) {
                table[free as usize / 64] |= 1 << (free % 64);
            }
        }
        tables.insert(table);
    }
    Ok(tables.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_definitions() {
        let eq = make_named(Family::Eq, 1, None).unwrap();
        assert!(eq.evaluate(0, 0));
        assert!(!eq.evaluate(0, 1));

        let ip = make_named(Family::Ip, 2, None).unwrap();
        // f(11, 11) = 1*1 + 1*1 mod 2 = 0
        assert!(!ip.evaluate(0b11, 0b11));
        assert!(ip.evaluate(0b10, 0b10));

        let disj = make_named(Family::Disj, 2, None).unwrap();
        assert!(disj.evaluate(0b10, 0b01));
        assert!(!disj.evaluate(0b10, 0b10));

        let parity = make_named(Family::Parity, 2, None).unwrap();
        assert!(parity.evaluate(0b00, 0b01));
        assert!(!parity.evaluate(0b01, 0b01));
    }

    #[test]
    fn ed_at_m2() {
        // n = 4 per side: m = 2 blocks of 2 bits, values in {1..4}.
        let ed = make_named(Family::Ed, 4, None).unwrap();
        // x blocks (1,2), y blocks (3,4): all distinct
        assert!(ed.evaluate(0b0001, 0b1011));
        // y repeats x's first block
        assert!(!ed.evaluate(0b0001, 0b0011));
        // repeat within x
        assert!(!ed.evaluate(0b0101, 0b1011));
        assert!(matches!(make_named(Family::Ed, 3, None), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn pal_small() {
        // q = 5: residues {1, 4}
        let pal = make_named(Family::Pal, 2, Some(5)).unwrap();
        // x=2, y=1 -> diff 1: residue
        assert!(pal.evaluate(0b10, 0b01));
        // x=3, y=1 -> diff 2: non-residue
        assert!(!pal.evaluate(0b11, 0b01));
        assert!(make_named(Family::Pal, 2, Some(7)).is_err());
        assert!(make_named(Family::Pal, 2, Some(9)).is_err());
    }

    #[test]
    fn si_base_cases() {
        let si = make_si(2).unwrap();
        // A = identity, B = zero -> rowspan(B) = {0}
        let identity = 0b1001;
        assert!(!si.evaluate(identity, 0b0000));
        // A = B = single row e1
        let e1_only = 0b1000;
        assert!(si.evaluate(e1_only, e1_only));
    }

    #[test]
    fn si_matches_subspace_intersection_oracle() {
        // Cross-check every pair of 2x2 matrices against row_space/intersect.
        let si = make_si(2).unwrap();
        let mut ones = 0usize;
        for a in 0u32..16 {
            for b in 0u32..16 {
                let sa = gf::row_space(&unpack_matrix(a, 2));
                let sb = gf::row_space(&unpack_matrix(b, 2));
                let expected = !gf::intersect(&sa, &sb).unwrap().is_zero();
                assert_eq!(si.evaluate(a, b), expected, "a={a:04b} b={b:04b}");
                if expected {
                    ones += 1;
                }
            }
        }
        assert_eq!(ones, si.count_ones());
    }

    #[test]
    fn pd_graph_small() {
        let (g, _) = make_pd_graph(1, 2).unwrap();
        assert_eq!(g.left_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(1, 1)); // full ∩ full

        let (g, labels) = make_pd_graph(2, 2).unwrap();
        assert_eq!(labels.len(), 5);
        assert_eq!(g.edge_count(), 13);
        // zero subspace vertex is isolated
        let zero_idx = labels.iter().position(Subspace::is_zero).unwrap();
        assert_eq!(g.left_degree(zero_idx), 0);
        assert_eq!(g.right_degree(zero_idx), 0);
        // full-space vertex is adjacent to every nonzero vertex
        let full_idx = labels.iter().position(|s| s.dim() == 2).unwrap();
        assert_eq!(g.left_degree(full_idx), 4);
    }

    #[test]
    fn realization_matches_pointwise() {
        for (family, n) in [(Family::Eq, 2), (Family::Ip, 3), (Family::Disj, 4)] {
            let f = make_named(family, n, None).unwrap();
            let g = realization(&f).unwrap();
            for x in 0..1u32 << n {
                for y in 0..1u32 << n {
                    assert_eq!(g.has_edge(x as usize, y as usize), f.evaluate(x, y));
                }
            }
        }
    }

    #[test]
    fn realization_shapes() {
        let eq2 = make_named(Family::Eq, 2, None).unwrap();
        let g = realization(&eq2).unwrap();
        // EQ_2 realizes as the 4x4 identity
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(g.has_edge(u, v), u == v);
            }
        }
        let ineq1 = make_named(Family::Ineq, 1, None).unwrap();
        let g = realization(&ineq1).unwrap();
        for u in 0..2 {
            for v in 0..2 {
                assert_eq!(g.has_edge(u, v), u != v);
            }
        }
    }

    #[test]
    fn si_contains_pd_graph_as_induced_subgraph() {
        // Map each subspace of F_2^2 to a matrix whose row space it is; the
        // induced subgraph of G_{SI_2} on those vertices must equal P_2.
        let si = make_si(2).unwrap();
        let (pd, labels) = make_pd_graph(2, 2).unwrap();
        let reps: Vec<u32> = labels
            .iter()
            .map(|s| {
                let mut word = 0u32;
                for (r, row) in s.basis_rows().enumerate() {
                    for (c, &e) in row.iter().enumerate() {
                        if e != 0 {
                            word = crate::with_input_bit(word, r * 2 + c, 4, true);
                        }
                    }
                }
                word
            })
            .collect();
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                assert_eq!(si.evaluate(a, b), pd.has_edge(i, j));
            }
        }
    }

    #[test]
    fn doubling_gives_distinct_neighborhoods() {
        // constant-0 on n=1: doubled graph is two disjoint matchings
        let zero = BooleanFunction::tabulate(1, |_, _| false).unwrap();
        let g = double_for_distinct_neighborhoods(&zero).unwrap();
        assert_eq!(g.left_count(), 4);
        assert_eq!(g.edge_count(), 4);
        let (dl, dr) = g.distinct_neighborhoods();
        assert_eq!((dl, dr), (4, 4));

        let eq1 = make_named(Family::Eq, 1, None).unwrap();
        let g = double_for_distinct_neighborhoods(&eq1).unwrap();
        assert_eq!(g.left_count(), 4);
        let (dl, dr) = g.distinct_neighborhoods();
        assert_eq!((dl, dr), (4, 4));

        // size is always 2 * 2^n per side
        let ip2 = make_named(Family::Ip, 2, None).unwrap();
        let g = double_for_distinct_neighborhoods(&ip2).unwrap();
        assert_eq!(g.left_count(), 8);
        assert_eq!(g.right_count(), 8);
    }

    #[test]
    fn subfunction_counts() {
        let constant = BooleanFunction::tabulate(2, |_, _| true).unwrap();
        assert_eq!(subfunction_count(&constant, &[0]).unwrap(), 1);

        // EQ_1, block {x1}: restriction y=0 gives ¬x1, y=1 gives x1
        let eq1 = make_named(Family::Eq, 1, None).unwrap();
        assert_eq!(subfunction_count(&eq1, &[0]).unwrap(), 2);

        // invariant under block order
        let ip = make_named(Family::Ip, 3, None).unwrap();
        assert_eq!(
            subfunction_count(&ip, &[0, 2]).unwrap(),
            subfunction_count(&ip, &[2, 0]).unwrap()
        );
    }

    #[test]
    fn si_row_block_subfunctions() {
        // SI_2, block = row 1 of A (variables 0 and 1): at least the 5
        // subspaces of F_2^2 give distinct restrictions.
        let si = make_si(2).unwrap();
        let c = subfunction_count(&si, &[0, 1]).unwrap();
        assert!(c >= 5, "c = {c}");
    }

    #[test]
    fn restriction_map_words() {
        let mut rho = RestrictionMap::all_free(2);
        rho.set(0, Some(true));
        rho.set(3, Some(true));
        assert_eq!(rho.left_word(), 0b10);
        assert_eq!(rho.right_word(), 0b01);
        assert_eq!(rho.free_left(), vec![1]);
        assert_eq!(rho.free_right(), vec![0]);
    }
}
