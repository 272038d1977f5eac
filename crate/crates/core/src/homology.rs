//! Linear algebra over `GF(p)`, reduced simplicial homology, and Reisner's
//! Cohen-Macaulay criterion.
//!
//! Chain groups are indexed by dimension with the empty face in degree -1,
//! so the irrelevant complex `{∅}` has `b̃_{-1} = 1`. Faces of each
//! dimension are sorted lexicographically and the boundary of a face `F`
//! sends it to `Σ_j (-1)^j (F \ v_j)`, `v_j` being its `j`-th smallest vertex.

use std::collections::HashSet;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::subset::Face;

/// The prime field `GF(p)` with `2 <= p < 2^16`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub const GF2: PrimeField = PrimeField { p: 2 };

    pub fn new(p: u32) -> Result<Self> {
        if !(2..1 << 16).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    #[inline]
    fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn inv(self, a: u32) -> u32 {
        debug_assert!(a != 0);
        // Fermat: a^(p-2)
        let (mut base, mut exp, mut acc) = (a, self.p - 2, 1u32);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        Self::GF2
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Dense matrix with entries reduced modulo the field characteristic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl GfMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    /// Builds a matrix from integer rows, reducing every entry mod `p`.
    ///
    /// # Panics
    /// Panics if the rows have different lengths.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(field, rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            for (c, &x) in row.iter().enumerate() {
                m.set(r, c, x);
            }
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, x: i64) {
        self.entries[r * self.cols + c] = self.field.reduce(x);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    /// Matrix product `self · other`.
    ///
    /// # Panics
    /// Panics on a shape or field mismatch.
    pub fn mul(&self, other: &GfMatrix) -> GfMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        assert_eq!(self.field, other.field, "field mismatch");
        let f = self.field;
        let mut out = GfMatrix::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b != 0 {
                        let i = r * out.cols + c;
                        out.entries[i] = (out.entries[i] + f.mul(a, b)) % f.p;
                    }
                }
            }
        }
        out
    }

    /// Whether `self · other` is the zero matrix. Only nonzero entries are
    /// multiplied, so this is cheap for boundary matrices.
    pub fn product_is_zero(&self, other: &GfMatrix) -> bool {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        assert_eq!(self.field, other.field, "field mismatch");
        let f = self.field;
        let support: Vec<Vec<(usize, u32)>> = (0..other.rows)
            .map(|k| {
                (0..other.cols)
                    .filter_map(|c| Some((c, other.get(k, c))).filter(|e| e.1 != 0))
                    .collect()
            })
            .collect();
        let mut acc = vec![0u32; other.cols];
        let mut touched = Vec::new();
        for r in 0..self.rows {
            for (k, row) in support.iter().enumerate() {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for &(c, b) in row {
                    acc[c] = (acc[c] + f.mul(a, b)) % f.p;
                    touched.push(c);
                }
            }
            for c in touched.drain(..) {
                if acc[c] != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Rank over `GF(p)`.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        if self.field.p == 2 {
            self.rank_gf2()
        } else {
            self.rank_general()
        }
    }

    fn rank_gf2(&self) -> usize {
        let words = self.cols.div_ceil(64);
        let mut rows: Vec<Vec<u64>> = (0..self.rows)
            .map(|r| {
                let mut packed = vec![0u64; words];
                for c in 0..self.cols {
                    if self.get(r, c) != 0 {
                        packed[c / 64] |= 1 << (c % 64);
                    }
                }
                packed
            })
            .collect();
        let mut rank = 0;
        for c in 0..self.cols {
            let (w, bit) = (c / 64, 1u64 << (c % 64));
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][w] & bit != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            let (head, tail) = rows.split_at_mut(rank + 1);
            let pivot_row = &head[rank];
            for row in tail.iter_mut().filter(|row| row[w] & bit != 0) {
                for (x, y) in row.iter_mut().zip(pivot_row) {
                    *x ^= y;
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }

    fn rank_general(&self) -> usize {
        let f = self.field;
        let cols = self.cols;
        let mut a = self.entries.clone();
        let mut rank = 0;
        for c in 0..cols {
            let Some(pivot) = (rank..self.rows).find(|&r| a[r * cols + c] != 0) else {
                continue;
            };
            if pivot != rank {
                for k in 0..cols {
                    a.swap(rank * cols + k, pivot * cols + k);
                }
            }
            let inv = f.inv(a[rank * cols + c]);
            for k in c..cols {
                a[rank * cols + k] = f.mul(a[rank * cols + k], inv);
            }
            for r in rank + 1..self.rows {
                let factor = a[r * cols + c];
                if factor == 0 {
                    continue;
                }
                for k in c..cols {
                    let sub = f.mul(factor, a[rank * cols + k]);
                    a[r * cols + k] = f.sub(a[r * cols + k], sub);
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

pub fn rank_mod_p(matrix: &GfMatrix) -> usize {
    matrix.rank()
}

/// Boundary map from the faces in `upper` to the faces in `lower`, one row
/// per upper face. `lower` must be sorted and contain every facet of every
/// upper face.
pub fn boundary_matrix(field: PrimeField, upper: &[Face], lower: &[Face]) -> GfMatrix {
    let mut m = GfMatrix::zeros(field, upper.len(), lower.len());
    for (r, face) in upper.iter().enumerate() {
        for (j, v) in face.iter().enumerate() {
            let c = lower
                .binary_search(&face.without(v))
                .expect("boundary face missing from the lower chain group");
            m.set(r, c, if j % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

/// Reduced Betti numbers `b̃_{-1}, ..., b̃_d` of a complex of dimension `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiVector {
    values: Vec<usize>,
}

impl BettiVector {
    /// `b̃_i`, zero outside `-1..=dim`.
    pub fn get(&self, i: isize) -> usize {
        if i < -1 {
            return 0;
        }
        self.values.get((i + 1) as usize).copied().unwrap_or(0)
    }

    /// Pairs `(i, b̃_i)` for `i` in `-1..=dim`.
    pub fn iter(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(|(k, &b)| (k as isize - 1, b))
    }

    pub fn is_acyclic(&self) -> bool {
        self.values.iter().all(|&b| b == 0)
    }

    /// `Σ (-1)^i b̃_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.iter().map(|(i, b)| sign(i) * b as i64).sum()
    }
}

fn sign(i: isize) -> i64 {
    if i.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `Σ_{i ≥ -1} (-1)^i f_i`, the empty face counted in degree -1.
pub fn reduced_euler_characteristic(complex: &SimplicialComplex) -> i64 {
    complex
        .f_vector()
        .iter()
        .enumerate()
        .map(|(k, &f)| sign(k as isize - 1) * f as i64)
        .sum()
}

static CHAIN_CHECKS: AtomicU64 = AtomicU64::new(0);

/// Number of chain complexes whose `∂∘∂ = 0` and Euler identities were
/// asserted so far in this process. Only debug builds run the checks.
pub fn chain_checks_performed() -> u64 {
    CHAIN_CHECKS.load(Ordering::Relaxed)
}

/// Boundary maps `∂_0, ..., ∂_d` of the augmented chain complex; entry `k`
/// maps the `k`-faces onto the `(k-1)`-faces.
pub fn boundary_maps(complex: &SimplicialComplex, field: PrimeField) -> Result<Vec<GfMatrix>> {
    complex.dimension()?;
    let faces = complex.faces_by_dim();
    Ok(faces
        .windows(2)
        .map(|w| boundary_matrix(field, &w[1], &w[0]))
        .collect())
}

/// A sparse row: `(column, value)` pairs sorted by column, values nonzero.
type SparseRow = Vec<(usize, u32)>;

fn sparse_boundary(upper: &[Face], lower: &[Face], field: PrimeField) -> Vec<SparseRow> {
    upper
        .iter()
        .map(|face| {
            let mut row: SparseRow = face
                .iter()
                .enumerate()
                .map(|(j, v)| {
                    let c = lower
                        .binary_search(&face.without(v))
                        .expect("boundary face missing from the lower chain group");
                    (c, field.reduce(if j % 2 == 0 { 1 } else { -1 }))
                })
                .collect();
            row.sort_unstable_by_key(|e| e.0);
            row
        })
        .collect()
}

/// `a - c·b` over the field, both sorted by column.
fn sparse_axpy(a: &[(usize, u32)], c: u32, b: &[(usize, u32)], field: PrimeField) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i]);
            i += 1;
        } else if take_b {
            out.push((b[j].0, field.sub(0, field.mul(c, b[j].1))));
            j += 1;
        } else {
            let v = field.sub(a[i].1, field.mul(c, b[j].1));
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of a sparse matrix with `cols` columns, by eliminating on the
/// largest column of each row.
fn sparse_rank(rows: &[SparseRow], cols: usize, field: PrimeField) -> usize {
    let mut pivots: Vec<Option<SparseRow>> = vec![None; cols];
    let mut rank = 0;
    for row in rows {
        let mut v = row.clone();
        while let Some(&(lead, x)) = v.last() {
            match &pivots[lead] {
                Some(p) => {
                    // Pivot rows are normalized to a leading 1.
                    v = sparse_axpy(&v, x, p, field);
                }
                None => {
                    let inv = field.inv(x);
                    let normalized = v.iter().map(|&(c, y)| (c, field.mul(y, inv))).collect();
                    pivots[lead] = Some(normalized);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// Whether the composite of two sparse maps (rows of `upper` index into
/// rows of `lower`) is zero.
fn sparse_product_is_zero(
    upper: &[SparseRow],
    lower: &[SparseRow],
    cols: usize,
    field: PrimeField,
) -> bool {
    let mut acc = vec![0u32; cols];
    let mut touched = Vec::new();
    for row in upper {
        for &(k, a) in row {
            for &(c, b) in &lower[k] {
                acc[c] = (acc[c] + field.mul(a, b)) % field.p;
                touched.push(c);
            }
        }
        for c in touched.drain(..) {
            if acc[c] != 0 {
                return false;
            }
            acc[c] = 0;
        }
    }
    true
}

/// Faces grouped by size as bit masks, or `None` past 64 vertices.
fn faces_as_words(complex: &SimplicialComplex) -> Option<Vec<Vec<u64>>> {
    let facets: Vec<u64> = complex
        .facets()
        .iter()
        .map(Face::as_word)
        .collect::<Option<_>>()?;
    let top = facets
        .iter()
        .map(|f| f.count_ones() as usize)
        .max()
        .unwrap_or(0);
    let mut seen: HashSet<u64> = HashSet::new();
    for &facet in &facets {
        // All submasks of the facet, including the empty face.
        let mut sub = facet;
        loop {
            seen.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & facet;
        }
    }
    let mut groups = vec![Vec::new(); top + 1];
    for w in seen {
        groups[w.count_ones() as usize].push(w);
    }
    for g in &mut groups {
        g.sort_unstable();
    }
    Some(groups)
}

fn word_boundary(upper: &[u64], lower: &[u64], field: PrimeField) -> Vec<SparseRow> {
    upper
        .iter()
        .map(|&face| {
            let mut row = Vec::with_capacity(face.count_ones() as usize);
            let mut rest = face;
            let mut j = 0;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                let c = lower
                    .binary_search(&(face ^ bit))
                    .expect("boundary face missing from the lower chain group");
                row.push((c, field.reduce(if j % 2 == 0 { 1 } else { -1 })));
                j += 1;
            }
            row.sort_unstable_by_key(|e| e.0);
            row
        })
        .collect()
}

/// Face counts `f_{-1}..f_d` and the sparse boundary maps `∂_0..∂_d`.
fn chain_complex(
    complex: &SimplicialComplex,
    field: PrimeField,
) -> (Vec<usize>, Vec<Vec<SparseRow>>) {
    match faces_as_words(complex) {
        Some(faces) => (
            faces.iter().map(Vec::len).collect(),
            faces
                .windows(2)
                .map(|w| word_boundary(&w[1], &w[0], field))
                .collect(),
        ),
        None => {
            let faces = complex.faces_by_dim();
            (
                faces.iter().map(Vec::len).collect(),
                faces
                    .windows(2)
                    .map(|w| sparse_boundary(&w[1], &w[0], field))
                    .collect(),
            )
        }
    }
}

pub fn reduced_betti_numbers(
    complex: &SimplicialComplex,
    field: PrimeField,
) -> Result<BettiVector> {
    complex.dimension()?;
    let (f, maps) = chain_complex(complex, field);
    // ranks[k] = rank of the map out of degree k - 1; the map out of degree -1 is zero.
    let mut ranks = vec![0usize];
    ranks.extend(
        maps.iter()
            .zip(&f)
            .map(|(m, &cols)| sparse_rank(m, cols, field)),
    );
    ranks.push(0);
    let values: Vec<usize> = (0..f.len())
        .map(|k| f[k] - ranks[k] - ranks[k + 1])
        .collect();
    let betti = BettiVector { values };

    if cfg!(debug_assertions) {
        for (k, pair) in maps.windows(2).enumerate() {
            assert!(
                sparse_product_is_zero(&pair[1], &pair[0], f[k], field),
                "∂∘∂ ≠ 0 on {complex:?} over GF({})",
                field.p
            );
        }
        let chi: i64 = f
            .iter()
            .enumerate()
            .map(|(k, &n)| sign(k as isize - 1) * n as i64)
            .sum();
        assert_eq!(
            betti.euler_characteristic(),
            chi,
            "Euler characteristic mismatch on {complex:?}"
        );
        CHAIN_CHECKS.fetch_add(1, Ordering::Relaxed);
    }
    Ok(betti)
}

/// Reisner's criterion without the purity shortcut: every link `lk F`,
/// including `lk ∅ = Δ`, has `b̃_i = 0` below its dimension.
pub fn satisfies_reisner(complex: &SimplicialComplex, field: PrimeField) -> Result<bool> {
    complex.dimension()?;
    for faces in complex.faces_by_dim() {
        for face in faces {
            let link = complex.link(&face)?;
            let dim = link.dimension()?;
            let betti = reduced_betti_numbers(&link, field)?;
            if (-1..dim).any(|i| betti.get(i) != 0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Reduced Betti numbers of `lk F` for every face `F`, in `faces_by_dim`
/// order (so the first entry is `lk ∅ = Δ`).
pub fn link_betti_numbers(
    complex: &SimplicialComplex,
    field: PrimeField,
) -> Result<Vec<(Face, BettiVector)>> {
    complex.dimension()?;
    let mut out = Vec::new();
    for face in complex.faces_by_dim().into_iter().flatten() {
        let betti = reduced_betti_numbers(&complex.link(&face)?, field)?;
        out.push((face, betti));
    }
    Ok(out)
}

/// Whether `k[Δ]` is Cohen-Macaulay over `field`. The irrelevant complex is.
pub fn is_cohen_macaulay(complex: &SimplicialComplex, field: PrimeField) -> Result<bool> {
    complex.dimension()?;
    if !complex.is_pure() {
        return Ok(false);
    }
    satisfies_reisner(complex, field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Variables;
    use crate::subset::Subset;
    use crate::testing::set;
    use proptest::prelude::*;

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::new(
            Variables::numbered(n).unwrap(),
            facets.iter().map(|f| set(f)).collect(),
        )
        .unwrap()
    }

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    /// Six-vertex triangulation of the real projective plane.
    fn rp2() -> SimplicialComplex {
        cx(
            6,
            &[
                &[0, 1, 2],
                &[0, 2, 3],
                &[0, 3, 4],
                &[0, 4, 5],
                &[0, 1, 5],
                &[1, 2, 4],
                &[1, 3, 4],
                &[1, 3, 5],
                &[2, 3, 5],
                &[2, 4, 5],
            ],
        )
    }

    #[test]
    fn field_validation() {
        assert_eq!(PrimeField::new(4), Err(Error::NotPrime(4)));
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        assert_eq!(PrimeField::new(65537), Err(Error::NotPrime(65537)));
        assert_eq!(gf(65521).p(), 65521);
        let f = gf(7);
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn rank_examples() {
        let id = GfMatrix::from_rows(gf(2), &[vec![1, 0], vec![0, 1]]);
        assert_eq!(rank_mod_p(&id), 2);
        let ones = GfMatrix::from_rows(gf(2), &[vec![1, 1], vec![1, 1]]);
        assert_eq!(rank_mod_p(&ones), 1);
        // ∂_1 of the hollow triangle: edges {1,2},{1,3},{2,3} onto vertices.
        let hollow = cx(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        let d1 = boundary_matrix(gf(3), &hollow.faces_of_dim(1), &hollow.faces_of_dim(0));
        assert_eq!(
            d1,
            GfMatrix::from_rows(gf(3), &[vec![-1, 1, 0], vec![-1, 0, 1], vec![0, -1, 1]])
        );
        assert_eq!(rank_mod_p(&d1), 2);
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // det = 3
        let m = vec![vec![1, 1], vec![-1, 2]];
        assert_eq!(GfMatrix::from_rows(gf(3), &m).rank(), 1);
        assert_eq!(GfMatrix::from_rows(gf(2), &m).rank(), 2);
        assert_eq!(GfMatrix::from_rows(gf(5), &m).rank(), 2);
    }

    #[test]
    fn wide_complexes_use_the_general_path() {
        let hollow = cx(71, &[&[0, 65], &[0, 70], &[65, 70]]);
        assert!(faces_as_words(&hollow).is_none());
        let b = reduced_betti_numbers(&hollow, gf(3)).unwrap();
        assert_eq!((b.get(0), b.get(1)), (0, 1));
    }

    #[test]
    fn betti_fixtures() {
        let hollow = cx(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        for p in [2, 3, 5] {
            let b = reduced_betti_numbers(&hollow, gf(p)).unwrap();
            assert_eq!((b.get(-1), b.get(0), b.get(1)), (0, 0, 1));
        }
        let points = cx(2, &[&[0], &[1]]);
        let b = reduced_betti_numbers(&points, gf(2)).unwrap();
        assert_eq!((b.get(-1), b.get(0)), (0, 1));
        let simplex = cx(3, &[&[0, 1, 2]]);
        assert!(reduced_betti_numbers(&simplex, gf(3)).unwrap().is_acyclic());
        let empty = SimplicialComplex::irrelevant(Variables::numbered(2).unwrap());
        assert_eq!(reduced_betti_numbers(&empty, gf(2)).unwrap().get(-1), 1);
        assert_eq!(
            reduced_betti_numbers(
                &SimplicialComplex::void(Variables::numbered(1).unwrap()),
                gf(2)
            ),
            Err(Error::VoidComplex)
        );
    }

    #[test]
    fn projective_plane_homology_depends_on_field() {
        let d = rp2();
        assert_eq!(d.f_vector(), vec![1, 6, 15, 10]);
        let b2 = reduced_betti_numbers(&d, gf(2)).unwrap();
        assert_eq!((b2.get(0), b2.get(1), b2.get(2)), (0, 1, 1));
        assert!(reduced_betti_numbers(&d, gf(3)).unwrap().is_acyclic());
    }

    #[test]
    fn cohen_macaulay_examples() {
        assert!(is_cohen_macaulay(&cx(3, &[&[0, 1, 2]]), gf(2)).unwrap());
        assert!(!is_cohen_macaulay(&cx(4, &[&[0, 2], &[1, 3]]), gf(2)).unwrap());
        assert!(!is_cohen_macaulay(&rp2(), gf(2)).unwrap());
        assert!(is_cohen_macaulay(&rp2(), gf(3)).unwrap());
        let irrelevant = SimplicialComplex::irrelevant(Variables::numbered(2).unwrap());
        assert!(is_cohen_macaulay(&irrelevant, gf(2)).unwrap());
        // Two triangles sharing a vertex: connected but the link of the
        // shared vertex is two disjoint edges.
        assert!(!is_cohen_macaulay(&cx(5, &[&[0, 1, 2], &[2, 3, 4]]), gf(2)).unwrap());
        assert!(!satisfies_reisner(&cx(5, &[&[0, 1, 2], &[2, 3, 4]]), gf(2)).unwrap());
        // Triangle with a dangling edge: contractible, but the link of the
        // shared vertex is disconnected.
        assert!(!satisfies_reisner(&cx(4, &[&[0, 1, 2], &[2, 3]]), gf(2)).unwrap());
    }

    fn arb_complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
        (1..=max_n).prop_flat_map(|n| {
            let full = (1u64 << n) - 1;
            prop::collection::vec(0..=full, 1..7).prop_map(move |words| {
                let faces = words.into_iter().map(Subset::from_word).collect();
                SimplicialComplex::from_faces(Variables::numbered(n).unwrap(), faces).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn euler_identity_and_boundary_squares_to_zero(d in arb_complex(7), p in prop::sample::select(vec![2u32, 3, 5])) {
            let f = gf(p);
            let betti = reduced_betti_numbers(&d, f).unwrap();
            prop_assert_eq!(betti.euler_characteristic(), reduced_euler_characteristic(&d));
            let maps = boundary_maps(&d, f).unwrap();
            for pair in maps.windows(2) {
                prop_assert!(pair[1].mul(&pair[0]).is_zero());
            }
        }

        #[test]
        fn rank_is_permutation_invariant(
            rows in prop::collection::vec(prop::collection::vec(-4i64..5, 5), 1..6),
            seed in any::<u64>(),
            p in prop::sample::select(vec![2u32, 3, 7]),
        ) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let f = gf(p);
            let m = GfMatrix::from_rows(f, &rows);
            let mut rperm: Vec<usize> = (0..rows.len()).collect();
            let mut cperm: Vec<usize> = (0..5).collect();
            rperm.shuffle(&mut rng);
            cperm.shuffle(&mut rng);
            let permuted: Vec<Vec<i64>> = rperm.iter().map(|&r| cperm.iter().map(|&c| rows[r][c]).collect()).collect();
            prop_assert_eq!(m.rank(), GfMatrix::from_rows(f, &permuted).rank());
        }

        #[test]
        fn sparse_rank_matches_dense(d in arb_complex(7), p in prop::sample::select(vec![2u32, 3, 5])) {
            let f = gf(p);
            let faces = d.faces_by_dim();
            for w in faces.windows(2) {
                let dense = boundary_matrix(f, &w[1], &w[0]);
                let sparse = sparse_boundary(&w[1], &w[0], f);
                prop_assert_eq!(sparse_rank(&sparse, w[0].len(), f), dense.rank());
            }
        }

        #[test]
        fn word_faces_match_subset_faces(d in arb_complex(7)) {
            let words = faces_as_words(&d).unwrap();
            let subsets = d.faces_by_dim();
            prop_assert_eq!(words.len(), subsets.len());
            for (w, s) in words.iter().zip(&subsets) {
                let mut from_subsets: Vec<u64> = s.iter().map(|f| f.as_word().unwrap()).collect();
                from_subsets.sort_unstable();
                prop_assert_eq!(w, &from_subsets);
            }
        }

        #[test]
        fn sparse_rank_of_arbitrary_matrices(
            rows in prop::collection::vec(prop::collection::vec(-3i64..4, 6), 1..8),
            p in prop::sample::select(vec![2u32, 3, 5]),
        ) {
            let f = gf(p);
            let dense = GfMatrix::from_rows(f, &rows);
            let sparse: Vec<SparseRow> = (0..dense.rows())
                .map(|r| (0..6).map(|c| (c, dense.get(r, c))).filter(|e| e.1 != 0).collect())
                .collect();
            prop_assert_eq!(sparse_rank(&sparse, 6, f), dense.rank());
        }

        #[test]
        fn sparse_product_check_matches_dense(
            a in prop::collection::vec(prop::collection::vec(-2i64..3, 4), 1..5),
            b in prop::collection::vec(prop::collection::vec(-2i64..3, 3), 4),
            p in prop::sample::select(vec![2u32, 3]),
        ) {
            let (a, b) = (GfMatrix::from_rows(gf(p), &a), GfMatrix::from_rows(gf(p), &b));
            prop_assert_eq!(a.product_is_zero(&b), a.mul(&b).is_zero());
        }

        #[test]
        fn cohen_macaulay_implies_pure(d in arb_complex(6), p in prop::sample::select(vec![2u32, 3])) {
            if satisfies_reisner(&d, gf(p)).unwrap() {
                prop_assert!(d.is_pure());
            }
        }

        #[test]
        fn cones_are_acyclic(d in arb_complex(6)) {
            // Cone over the extra vertex n.
            let n = d.n();
            let vars = Variables::numbered(n + 1).unwrap();
            let cone = SimplicialComplex::new(vars, d.facets().iter().map(|f| f.with(n)).collect()).unwrap();
            prop_assert!(reduced_betti_numbers(&cone, gf(2)).unwrap().is_acyclic());
            prop_assert!(reduced_betti_numbers(&cone, gf(3)).unwrap().is_acyclic());
        }
    }
}
