//! Exact linear algebra over GF(2), GF(p) and ℚ.
//!
//! Homology ranks must be exact, so no floating point appears anywhere in this
//! module: GF(2) rows are packed 64 bits per word and eliminated with XOR,
//! GF(p) uses machine-word modular arithmetic for primes `p < 2^16`, and ℚ uses
//! arbitrary-precision rationals.
//!
//! All eliminations pivot on the leftmost nonzero column with the lowest row
//! index, which makes every rank, kernel basis and coordinate vector
//! reproducible across runs and platforms. Kernel bases come from the reduced
//! row echelon form with free columns taken in increasing index order.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};
use thiserror::Error;

/// Errors produced by matrix and vector constructors and by the elimination
/// routines.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    /// An entry was placed outside the declared matrix shape.
    #[error("entry at ({row}, {col}) is out of bounds for a {rows}x{cols} matrix")]
    EntryOutOfBounds { row: usize, col: usize, rows: usize, cols: usize },
    /// Two entries were supplied for the same position.
    #[error("duplicate entry at ({row}, {col})")]
    DuplicateEntry { row: usize, col: usize },
    /// An explicit zero was supplied; sparse data must store nonzeros only.
    #[error("explicit zero entry at ({row}, {col}); sparse entries must be nonzero")]
    ZeroEntry { row: usize, col: usize },
    /// A vector entry index exceeded the vector length.
    #[error("vector index {index} out of range for length {len}")]
    VectorIndexOutOfBounds { index: usize, len: usize },
    /// A scalar has no image in the requested field (for example `1/p` in
    /// GF(p)).
    #[error("scalar {scalar} is not reducible into {field}")]
    IrreducibleScalar { scalar: String, field: Field },
    /// The modulus passed to [`Field::gfp`] was not a prime below `2^16`.
    #[error("{p} is not a prime below 2^16")]
    InvalidPrime { p: u64 },
    /// Two objects that must share a dimension do not.
    #[error("dimension mismatch: {context} ({left} vs {right})")]
    DimensionMismatch { context: &'static str, left: usize, right: usize },
}

/// A coefficient field: GF(2), GF(p) for a small prime `p`, or ℚ.
///
/// GF(2) is the default everywhere in this crate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Field {
    /// The field with two elements.
    #[default]
    GF2,
    /// The prime field with `p` elements, `p` a prime below `2^16`.
    GFp(u16),
    /// The rational numbers, with arbitrary-precision arithmetic.
    Rational,
}

impl Field {
    /// Builds `GF(p)`, validating that `p` is a prime below `2^16`.
    ///
    /// `p = 2` canonicalises to [`Field::GF2`], the bit-packed flavour, so
    /// `gfp(2) == Field::GF2` and the fast kernel is never bypassed.
    pub fn gfp(p: u64) -> Result<Field, LinalgError> {
        if !(2..1 << 16).contains(&p) || !is_prime(p) {
            return Err(LinalgError::InvalidPrime { p });
        }
        if p == 2 {
            return Ok(Field::GF2);
        }
        Ok(Field::GFp(p as u16))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::GF2 => write!(f, "GF(2)"),
            Field::GFp(p) => write!(f, "GF({p})"),
            Field::Rational => write!(f, "Q"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact scalar, storable independently of the field it will be read in.
///
/// A `Scalar` is reduced into a concrete field element when an operation runs:
/// `Int(k)` means the image of the integer `k`, and `Ratio(q)` the image of the
/// rational `q` (which fails in GF(p) when `p` divides the denominator).
/// Equality is mathematical: `Int(2)` equals `Ratio(2/1)`.
#[derive(Clone, Debug)]
pub enum Scalar {
    /// The image of a machine integer.
    Int(i64),
    /// An exact rational number.
    Ratio(BigRational),
}

impl Scalar {
    /// The scalar `1`.
    pub fn one() -> Scalar {
        Scalar::Int(1)
    }

    /// The scalar `-1`.
    pub fn neg_one() -> Scalar {
        Scalar::Int(-1)
    }

    /// The scalar `(-1)^parity`.
    pub fn sign(parity: u32) -> Scalar {
        if parity.is_multiple_of(2) {
            Scalar::Int(1)
        } else {
            Scalar::Int(-1)
        }
    }

    /// Builds the exact rational `numer / denom`.
    ///
    /// # Panics
    /// Panics if `denom == 0`.
    pub fn ratio(numer: i64, denom: i64) -> Scalar {
        assert!(denom != 0, "rational scalar with zero denominator");
        Scalar::Ratio(BigRational::new(BigInt::from(numer), BigInt::from(denom))).normalized()
    }

    /// The additive inverse.
    pub fn negated(&self) -> Scalar {
        match self {
            Scalar::Int(k) => Scalar::Int(-k),
            Scalar::Ratio(q) => Scalar::Ratio(-q.clone()),
        }
    }

    /// True when the scalar is zero as a rational number (so also in every
    /// `GF(p)` it reduces into — reduction of a nonzero rational may still be
    /// zero in a specific `GF(p)`).
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(k) => *k == 0,
            Scalar::Ratio(q) => q.is_zero(),
        }
    }

    fn to_rational(&self) -> BigRational {
        match self {
            Scalar::Int(k) => BigRational::from(BigInt::from(*k)),
            Scalar::Ratio(q) => q.clone(),
        }
    }

    fn normalized(self) -> Scalar {
        if let Scalar::Ratio(q) = &self {
            if q.is_integer() {
                if let Ok(k) = i64::try_from(q.to_integer()) {
                    return Scalar::Int(k);
                }
            }
        }
        self
    }

    /// Reduces the scalar into GF(2): returns its parity bit.
    fn reduce_gf2(&self, field: &Field) -> Result<bool, LinalgError> {
        match self {
            Scalar::Int(k) => Ok(k.rem_euclid(2) == 1),
            Scalar::Ratio(q) => {
                let denom = q.denom();
                if (denom % BigInt::from(2)).is_zero() {
                    return Err(LinalgError::IrreducibleScalar {
                        scalar: self.to_string(),
                        field: *field,
                    });
                }
                Ok((q.numer() % BigInt::from(2)).abs().is_one())
            }
        }
    }

    /// Reduces the scalar into GF(p): returns a representative in `0..p`.
    fn reduce_gfp(&self, p: u64, field: &Field) -> Result<u64, LinalgError> {
        match self {
            Scalar::Int(k) => Ok(k.rem_euclid(p as i64) as u64),
            Scalar::Ratio(q) => {
                let p_big = BigInt::from(p);
                let den = ((q.denom() % &p_big) + &p_big) % &p_big;
                let den: u64 = den.try_into().expect("residue fits in u64");
                if den == 0 {
                    return Err(LinalgError::IrreducibleScalar {
                        scalar: self.to_string(),
                        field: *field,
                    });
                }
                let num = ((q.numer() % &p_big) + &p_big) % &p_big;
                let num: u64 = num.try_into().expect("residue fits in u64");
                Ok(num * mod_inverse(den, p) % p)
            }
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => a == b,
            _ => self.to_rational() == other.to_rational(),
        }
    }
}

impl Eq for Scalar {}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(k) => write!(f, "{k}"),
            Scalar::Ratio(q) => write!(f, "{q}"),
        }
    }
}

impl From<i64> for Scalar {
    fn from(k: i64) -> Scalar {
        Scalar::Int(k)
    }
}

/// Constructs the arithmetic context for `field` and runs `body` with it.
///
/// This is the crate's single dispatch point from the runtime [`Field`] value
/// to the three concrete arithmetic backends.
macro_rules! dispatch_field {
    ($field:expr, $arith:ident, $body:expr) => {
        match $field {
            $crate::linalg::Field::GF2 => {
                let $arith = $crate::linalg::Gf2Arith;
                $body
            }
            $crate::linalg::Field::GFp(p) => {
                let $arith = $crate::linalg::PrimeArith { p: u64::from(*p) };
                $body
            }
            $crate::linalg::Field::Rational => {
                let $arith = $crate::linalg::RationalArith;
                $body
            }
        }
    };
}

pub(crate) use dispatch_field;

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p, for prime p and a != 0 mod p.
    debug_assert!(!a.is_multiple_of(p));
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc: u64 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// A sparse vector of exact scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector {
    len: usize,
    entries: BTreeMap<usize, Scalar>,
}

impl Vector {
    /// The zero vector of the given length.
    pub fn zero(len: usize) -> Vector {
        Vector { len, entries: BTreeMap::new() }
    }

    /// The standard basis vector `e_index`.
    ///
    /// # Panics
    /// Panics if `index >= len`.
    pub fn unit(len: usize, index: usize) -> Vector {
        assert!(index < len, "unit vector index out of range");
        let mut entries = BTreeMap::new();
        entries.insert(index, Scalar::one());
        Vector { len, entries }
    }

    /// Builds a vector from `(index, scalar)` pairs.
    ///
    /// # Errors
    /// Rejects out-of-range indices, duplicate indices and explicit zeros.
    pub fn from_entries<I>(len: usize, entries: I) -> Result<Vector, LinalgError>
    where
        I: IntoIterator<Item = (usize, Scalar)>,
    {
        let mut map = BTreeMap::new();
        for (index, scalar) in entries {
            if index >= len {
                return Err(LinalgError::VectorIndexOutOfBounds { index, len });
            }
            if scalar.is_zero() {
                return Err(LinalgError::ZeroEntry { row: index, col: 0 });
            }
            if map.insert(index, scalar).is_some() {
                return Err(LinalgError::DuplicateEntry { row: index, col: 0 });
            }
        }
        Ok(Vector { len, entries: map })
    }

    /// The declared length.
    pub fn len(&self) -> usize {
        self.len
    }

    /// True when all coordinates are zero.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The stored nonzero entries in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries.iter().map(|(i, s)| (*i, s))
    }

    /// The scalar at `index`, if nonzero.
    pub fn get(&self, index: usize) -> Option<&Scalar> {
        self.entries.get(&index)
    }
}

/// A sparse matrix of exact scalars with a declared shape.
///
/// Entries are stored as `(row, column) -> nonzero scalar`; the same data can
/// be read over any [`Field`] the scalars reduce into. Over GF(2) the
/// elimination routines pack rows 64 bits per word internally, but the entry
/// semantics exposed here never change.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl SparseMatrix {
    /// The zero matrix of the given shape.
    pub fn zero(rows: usize, cols: usize) -> SparseMatrix {
        SparseMatrix { rows, cols, entries: BTreeMap::new() }
    }

    /// The `n × n` identity matrix.
    pub fn identity(n: usize) -> SparseMatrix {
        let entries = (0..n).map(|i| ((i, i), Scalar::one())).collect();
        SparseMatrix { rows: n, cols: n, entries }
    }

    /// Builds a matrix from `(row, col, scalar)` triplets.
    ///
    /// # Errors
    /// Rejects out-of-range positions, duplicate positions and explicit zeros.
    pub fn from_entries<I>(rows: usize, cols: usize, entries: I) -> Result<SparseMatrix, LinalgError>
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let mut map = BTreeMap::new();
        for (row, col, scalar) in entries {
            if row >= rows || col >= cols {
                return Err(LinalgError::EntryOutOfBounds { row, col, rows, cols });
            }
            if scalar.is_zero() {
                return Err(LinalgError::ZeroEntry { row, col });
            }
            if map.insert((row, col), scalar).is_some() {
                return Err(LinalgError::DuplicateEntry { row, col });
            }
        }
        Ok(SparseMatrix { rows, cols, entries: map })
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of stored (nonzero) entries.
    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// True when no entry is stored.
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// The scalar at `(row, col)`, if nonzero.
    pub fn get(&self, row: usize, col: usize) -> Option<&Scalar> {
        self.entries.get(&(row, col))
    }

    /// The stored entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.entries.iter().map(|(&(r, c), s)| (r, c, s))
    }

    /// The transpose.
    pub fn transpose(&self) -> SparseMatrix {
        let entries = self.entries.iter().map(|(&(r, c), s)| ((c, r), s.clone())).collect();
        SparseMatrix { rows: self.cols, cols: self.rows, entries }
    }

    /// Applies the matrix to a vector, with arithmetic in `field`.
    ///
    /// # Errors
    /// Fails on length mismatch or a scalar that does not reduce into `field`.
    pub fn apply(&self, v: &Vector, field: &Field) -> Result<Vector, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                context: "matrix-vector product",
                left: self.cols,
                right: v.len(),
            });
        }
        match field {
            Field::GF2 => {
                let mut acc = vec![false; self.rows];
                for (&(r, c), s) in &self.entries {
                    if let Some(x) = v.get(c) {
                        if s.reduce_gf2(field)? && x.reduce_gf2(field)? {
                            acc[r] = !acc[r];
                        }
                    }
                }
                Vector::from_entries(
                    self.rows,
                    acc.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| (i, Scalar::one())),
                )
            }
            Field::GFp(p) => {
                let p = u64::from(*p);
                let mut acc = vec![0u64; self.rows];
                for (&(r, c), s) in &self.entries {
                    if let Some(x) = v.get(c) {
                        let prod = s.reduce_gfp(p, field)? * x.reduce_gfp(p, field)? % p;
                        acc[r] = (acc[r] + prod) % p;
                    }
                }
                Vector::from_entries(
                    self.rows,
                    acc.iter()
                        .enumerate()
                        .filter(|(_, &x)| x != 0)
                        .map(|(i, &x)| (i, Scalar::Int(x as i64))),
                )
            }
            Field::Rational => {
                let mut acc = vec![BigRational::zero(); self.rows];
                for (&(r, c), s) in &self.entries {
                    if let Some(x) = v.get(c) {
                        acc[r] += s.to_rational() * x.to_rational();
                    }
                }
                Vector::from_entries(
                    self.rows,
                    acc.into_iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(i, x)| (i, Scalar::Ratio(x).normalized())),
                )
            }
        }
    }
}

/// Multiplies `a · b` with arithmetic in `field`, returning a sparse matrix
/// whose entries are canonical representatives (bit for GF(2), `0..p` residues
/// for GF(p), reduced rationals for ℚ).
///
/// # Errors
/// Fails when `a.cols() != b.rows()` or a scalar does not reduce into `field`.
pub fn matmul(a: &SparseMatrix, b: &SparseMatrix, field: &Field) -> Result<SparseMatrix, LinalgError> {
    if a.cols != b.rows {
        return Err(LinalgError::DimensionMismatch {
            context: "matrix product",
            left: a.cols,
            right: b.rows,
        });
    }
    // Group b's entries by row so each entry of a is scanned once.
    let mut b_rows: Vec<Vec<(usize, &Scalar)>> = vec![Vec::new(); b.rows];
    for (&(r, c), s) in &b.entries {
        b_rows[r].push((c, s));
    }
    match field {
        Field::GF2 => {
            let mut acc: BTreeMap<(usize, usize), bool> = BTreeMap::new();
            for (&(i, k), s) in &a.entries {
                if !s.reduce_gf2(field)? {
                    continue;
                }
                for &(j, t) in &b_rows[k] {
                    if t.reduce_gf2(field)? {
                        let bit = acc.entry((i, j)).or_insert(false);
                        *bit = !*bit;
                    }
                }
            }
            SparseMatrix::from_entries(
                a.rows,
                b.cols,
                acc.into_iter().filter(|(_, bit)| *bit).map(|((i, j), _)| (i, j, Scalar::one())),
            )
        }
        Field::GFp(p) => {
            let p = u64::from(*p);
            let mut acc: BTreeMap<(usize, usize), u64> = BTreeMap::new();
            for (&(i, k), s) in &a.entries {
                let s = s.reduce_gfp(p, field)?;
                if s == 0 {
                    continue;
                }
                for &(j, t) in &b_rows[k] {
                    let t = t.reduce_gfp(p, field)?;
                    let cell = acc.entry((i, j)).or_insert(0);
                    *cell = (*cell + s * t) % p;
                }
            }
            SparseMatrix::from_entries(
                a.rows,
                b.cols,
                acc.into_iter()
                    .filter(|(_, x)| *x != 0)
                    .map(|((i, j), x)| (i, j, Scalar::Int(x as i64))),
            )
        }
        Field::Rational => {
            let mut acc: BTreeMap<(usize, usize), BigRational> = BTreeMap::new();
            for (&(i, k), s) in &a.entries {
                let s = s.to_rational();
                for &(j, t) in &b_rows[k] {
                    let cell = acc.entry((i, j)).or_insert_with(BigRational::zero);
                    *cell += &s * t.to_rational();
                }
            }
            SparseMatrix::from_entries(
                a.rows,
                b.cols,
                acc.into_iter()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|((i, j), x)| (i, j, Scalar::Ratio(x).normalized())),
            )
        }
    }
}

/// The rank of `m` over `field`.
///
/// Deterministic for a fixed input: Gaussian elimination pivoting on the
/// leftmost nonzero column, lowest row index.
///
/// # Errors
/// Fails when an entry does not reduce into `field`.
pub fn rank(m: &SparseMatrix, field: &Field) -> Result<usize, LinalgError> {
    match field {
        Field::GF2 => Ok(BitMatrix::from_sparse(m, field)?.rank_forward()),
        Field::GFp(p) => Ok(DenseMatrix::from_sparse_gfp(m, u64::from(*p), field)?.rref().0),
        Field::Rational => Ok(DenseMatrix::from_sparse_rational(m)?.rref().0),
    }
}

/// A basis of the kernel (null space) of `m` over `field`.
///
/// The basis has exactly `cols − rank` vectors and is deterministic: it is read
/// off the reduced row echelon form, one vector per free column, free columns
/// in increasing index order, with a `1` in the free coordinate.
///
/// # Errors
/// Fails when an entry does not reduce into `field`.
pub fn kernel_basis(m: &SparseMatrix, field: &Field) -> Result<Vec<Vector>, LinalgError> {
    match field {
        Field::GF2 => {
            let mut bits = BitMatrix::from_sparse(m, field)?;
            let (_, pivots) = bits.rref();
            Ok(bits.kernel_from_rref(&pivots))
        }
        Field::GFp(p) => {
            let mut dense = DenseMatrix::from_sparse_gfp(m, u64::from(*p), field)?;
            let (_, pivots) = dense.rref();
            Ok(dense.kernel_from_rref(&pivots))
        }
        Field::Rational => {
            let mut dense = DenseMatrix::from_sparse_rational(m)?;
            let (_, pivots) = dense.rref();
            Ok(dense.kernel_from_rref(&pivots))
        }
    }
}

/// Expresses `v` in the span of `basis` over `field`: returns coefficients `c`
/// with `Σ c_i · basis_i = v`, or `None` when `v` is outside the span.
///
/// When the basis vectors are linearly dependent the solution is the
/// deterministic particular one with all free coefficients zero.
///
/// # Errors
/// Fails when the vectors do not all share one length, or when a scalar does
/// not reduce into `field`.
pub fn coordinates_in_span(
    basis: &[Vector],
    v: &Vector,
    field: &Field,
) -> Result<Option<Vector>, LinalgError> {
    let len = v.len();
    for b in basis {
        if b.len() != len {
            return Err(LinalgError::DimensionMismatch {
                context: "span membership",
                left: len,
                right: b.len(),
            });
        }
    }
    // Solve B c = v where B has the basis vectors as columns.
    let mut triplets = Vec::new();
    for (j, b) in basis.iter().enumerate() {
        for (i, s) in b.iter() {
            triplets.push((i, j, s.clone()));
        }
    }
    let b_matrix = SparseMatrix::from_entries(len, basis.len(), triplets)?;
    solve(&b_matrix, v, field)
}

/// Whether `s` reduces to a nonzero (hence invertible) element of `field`.
pub(crate) fn scalar_is_unit(s: &Scalar, field: &Field) -> Result<bool, LinalgError> {
    dispatch_field!(field, arith, {
        let e = arith.lift_scalar(s, field)?;
        Ok(!arith.is_zero(&e))
    })
}

/// The pivot columns of the reduced row echelon form of `m` over `field`,
/// under the deterministic pivoting rule (leftmost column, lowest row).
pub(crate) fn rref_pivots(m: &SparseMatrix, field: &Field) -> Result<Vec<usize>, LinalgError> {
    match field {
        Field::GF2 => Ok(BitMatrix::from_sparse(m, field)?.rref().1),
        Field::GFp(p) => Ok(DenseMatrix::from_sparse_gfp(m, u64::from(*p), field)?.rref().1),
        Field::Rational => Ok(DenseMatrix::from_sparse_rational(m)?.rref().1),
    }
}

/// Solves `m · x = v` over `field`, returning the deterministic particular
/// solution with all free variables zero, or `None` when none exists.
///
/// # Errors
/// Fails on shape mismatch or a scalar that does not reduce into `field`.
pub fn solve(m: &SparseMatrix, v: &Vector, field: &Field) -> Result<Option<Vector>, LinalgError> {
    if v.len() != m.rows {
        return Err(LinalgError::DimensionMismatch {
            context: "linear solve",
            left: m.rows,
            right: v.len(),
        });
    }
    match field {
        Field::GF2 => {
            let mut bits = BitMatrix::from_sparse_augmented(m, v, field)?;
            let (_, pivots) = bits.rref();
            Ok(bits.solution_from_rref(&pivots, m.cols))
        }
        Field::GFp(p) => {
            let mut dense = DenseMatrix::from_sparse_gfp_augmented(m, v, u64::from(*p), field)?;
            let (_, pivots) = dense.rref();
            Ok(dense.solution_from_rref(&pivots, m.cols))
        }
        Field::Rational => {
            let mut dense = DenseMatrix::from_sparse_rational_augmented(m, v)?;
            let (_, pivots) = dense.rref();
            Ok(dense.solution_from_rref(&pivots, m.cols))
        }
    }
}

// ---------------------------------------------------------------------------
// GF(2) backend: rows packed 64 bits per word, XOR elimination.
// ---------------------------------------------------------------------------

pub(crate) struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub(crate) fn new(rows: usize, cols: usize) -> BitMatrix {
        let words = cols.div_ceil(64);
        BitMatrix { rows, cols, words, data: vec![0; rows * words] }
    }

    fn from_sparse(m: &SparseMatrix, field: &Field) -> Result<BitMatrix, LinalgError> {
        let mut bits = BitMatrix::new(m.rows, m.cols);
        for (&(r, c), s) in &m.entries {
            if s.reduce_gf2(field)? {
                bits.set(r, c);
            }
        }
        Ok(bits)
    }

    fn from_sparse_augmented(
        m: &SparseMatrix,
        v: &Vector,
        field: &Field,
    ) -> Result<BitMatrix, LinalgError> {
        let mut bits = BitMatrix::new(m.rows, m.cols + 1);
        for (&(r, c), s) in &m.entries {
            if s.reduce_gf2(field)? {
                bits.set(r, c);
            }
        }
        for (i, s) in v.iter() {
            if s.reduce_gf2(field)? {
                bits.set(i, m.cols);
            }
        }
        Ok(bits)
    }

    pub(crate) fn set(&mut self, row: usize, col: usize) {
        self.data[row * self.words + col / 64] |= 1 << (col % 64);
    }

    pub(crate) fn get(&self, row: usize, col: usize) -> bool {
        self.data[row * self.words + col / 64] >> (col % 64) & 1 == 1
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let w = self.words;
        let (a, b) = (a.min(b), a.max(b));
        let (head, tail) = self.data.split_at_mut(b * w);
        head[a * w..a * w + w].swap_with_slice(&mut tail[..w]);
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        let w = self.words;
        let (lo, hi) = (src.min(dst), src.max(dst));
        let (head, tail) = self.data.split_at_mut(hi * w);
        let (a, b) = (&mut head[lo * w..lo * w + w], &mut tail[..w]);
        if src < dst {
            for (x, y) in b.iter_mut().zip(a.iter()) {
                *x ^= *y;
            }
        } else {
            for (x, y) in a.iter_mut().zip(b.iter()) {
                *x ^= *y;
            }
        }
    }

    /// Forward elimination only; returns the rank. Faster than full reduction
    /// when only the rank is needed.
    pub(crate) fn rank_forward(&mut self) -> usize {
        let mut next = 0;
        for col in 0..self.cols {
            if next == self.rows {
                break;
            }
            let Some(pivot) = (next..self.rows).find(|&r| self.get(r, col)) else {
                continue;
            };
            self.swap_rows(pivot, next);
            for r in next + 1..self.rows {
                if self.get(r, col) {
                    self.xor_row_into(next, r);
                }
            }
            next += 1;
        }
        next
    }

    /// Full reduced row echelon form; returns the rank and pivot columns.
    fn rref(&mut self) -> (usize, Vec<usize>) {
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            if next == self.rows {
                break;
            }
            let Some(pivot) = (next..self.rows).find(|&r| self.get(r, col)) else {
                continue;
            };
            self.swap_rows(pivot, next);
            for r in 0..self.rows {
                if r != next && self.get(r, col) {
                    self.xor_row_into(next, r);
                }
            }
            pivots.push(col);
            next += 1;
        }
        (next, pivots)
    }

    fn kernel_from_rref(&self, pivots: &[usize]) -> Vec<Vector> {
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in (0..self.cols).filter(|&c| !pivot_set[c]) {
            let mut entries = vec![(free, Scalar::one())];
            for (row, &p) in pivots.iter().enumerate() {
                if self.get(row, free) {
                    entries.push((p, Scalar::one()));
                }
            }
            entries.sort_by_key(|&(i, _)| i);
            basis.push(Vector::from_entries(self.cols, entries).expect("valid kernel vector"));
        }
        basis
    }

    /// Reads the particular solution of an augmented RREF (last column is the
    /// right-hand side); `None` when the system is inconsistent.
    fn solution_from_rref(&self, pivots: &[usize], unknowns: usize) -> Option<Vector> {
        if pivots.last().is_some_and(|&p| p == unknowns) {
            return None;
        }
        let mut entries = Vec::new();
        for (row, &p) in pivots.iter().enumerate() {
            if self.get(row, unknowns) {
                entries.push((p, Scalar::one()));
            }
        }
        Some(Vector::from_entries(unknowns, entries).expect("valid solution vector"))
    }
}

// ---------------------------------------------------------------------------
// Dense backend for GF(p) and ℚ, generic over the arithmetic context.
// ---------------------------------------------------------------------------

pub(crate) trait Arith {
    type Elem: Clone + PartialEq;
    fn zero(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `a - b * c`.
    fn sub_mul(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn to_scalar(&self, a: &Self::Elem) -> Scalar;
    fn lift_scalar(&self, s: &Scalar, field: &Field) -> Result<Self::Elem, LinalgError>;
}

pub(crate) struct Gf2Arith;

impl Arith for Gf2Arith {
    type Elem = bool;

    fn zero(&self) -> bool {
        false
    }

    fn is_zero(&self, a: &bool) -> bool {
        !*a
    }

    fn neg(&self, a: &bool) -> bool {
        *a
    }

    fn add(&self, a: &bool, b: &bool) -> bool {
        a ^ b
    }

    fn mul(&self, a: &bool, b: &bool) -> bool {
        *a && *b
    }

    fn sub_mul(&self, a: &bool, b: &bool, c: &bool) -> bool {
        a ^ (b & c)
    }

    fn inv(&self, a: &bool) -> bool {
        debug_assert!(*a, "inverting zero in GF(2)");
        true
    }

    fn to_scalar(&self, a: &bool) -> Scalar {
        Scalar::Int(i64::from(*a))
    }

    fn lift_scalar(&self, s: &Scalar, field: &Field) -> Result<bool, LinalgError> {
        s.reduce_gf2(field)
    }
}

pub(crate) struct PrimeArith {
    pub(crate) p: u64,
}

impl Arith for PrimeArith {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn sub_mul(&self, a: &u64, b: &u64, c: &u64) -> u64 {
        (a + (self.p - b * c % self.p)) % self.p
    }

    fn inv(&self, a: &u64) -> u64 {
        mod_inverse(*a, self.p)
    }

    fn to_scalar(&self, a: &u64) -> Scalar {
        Scalar::Int(*a as i64)
    }

    fn lift_scalar(&self, s: &Scalar, field: &Field) -> Result<u64, LinalgError> {
        s.reduce_gfp(self.p, field)
    }
}

pub(crate) struct RationalArith;

impl Arith for RationalArith {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a.clone()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn sub_mul(&self, a: &BigRational, b: &BigRational, c: &BigRational) -> BigRational {
        a - b * c
    }

    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }

    fn to_scalar(&self, a: &BigRational) -> Scalar {
        Scalar::Ratio(a.clone()).normalized()
    }

    fn lift_scalar(&self, s: &Scalar, _field: &Field) -> Result<BigRational, LinalgError> {
        Ok(s.to_rational())
    }
}

pub(crate) struct DenseMatrix<A: Arith> {
    rows: usize,
    cols: usize,
    data: Vec<A::Elem>,
    arith: A,
}

impl DenseMatrix<PrimeArith> {
    fn from_sparse_gfp(m: &SparseMatrix, p: u64, field: &Field) -> Result<Self, LinalgError> {
        let arith = PrimeArith { p };
        let mut dense = DenseMatrix::filled(m.rows, m.cols, arith);
        for (&(r, c), s) in &m.entries {
            dense.data[r * m.cols + c] = s.reduce_gfp(p, field)?;
        }
        Ok(dense)
    }

    fn from_sparse_gfp_augmented(
        m: &SparseMatrix,
        v: &Vector,
        p: u64,
        field: &Field,
    ) -> Result<Self, LinalgError> {
        let arith = PrimeArith { p };
        let cols = m.cols + 1;
        let mut dense = DenseMatrix::filled(m.rows, cols, arith);
        for (&(r, c), s) in &m.entries {
            dense.data[r * cols + c] = s.reduce_gfp(p, field)?;
        }
        for (i, s) in v.iter() {
            dense.data[i * cols + m.cols] = s.reduce_gfp(p, field)?;
        }
        Ok(dense)
    }
}

impl DenseMatrix<RationalArith> {
    fn from_sparse_rational(m: &SparseMatrix) -> Result<Self, LinalgError> {
        let mut dense = DenseMatrix::filled(m.rows, m.cols, RationalArith);
        for (&(r, c), s) in &m.entries {
            dense.data[r * m.cols + c] = s.to_rational();
        }
        Ok(dense)
    }

    fn from_sparse_rational_augmented(m: &SparseMatrix, v: &Vector) -> Result<Self, LinalgError> {
        let cols = m.cols + 1;
        let mut dense = DenseMatrix::filled(m.rows, cols, RationalArith);
        for (&(r, c), s) in &m.entries {
            dense.data[r * cols + c] = s.to_rational();
        }
        for (i, s) in v.iter() {
            dense.data[i * cols + m.cols] = s.to_rational();
        }
        Ok(dense)
    }
}

impl<A: Arith> DenseMatrix<A> {
    fn filled(rows: usize, cols: usize, arith: A) -> Self {
        let data = vec![arith.zero(); rows * cols];
        DenseMatrix { rows, cols, data, arith }
    }

    fn at(&self, r: usize, c: usize) -> &A::Elem {
        &self.data[r * self.cols + c]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let w = self.cols;
        let (a, b) = (a.min(b), a.max(b));
        let (head, tail) = self.data.split_at_mut(b * w);
        head[a * w..a * w + w].swap_with_slice(&mut tail[..w]);
    }

    /// Full reduced row echelon form (pivots normalised to 1); returns the
    /// rank and pivot columns.
    fn rref(&mut self) -> (usize, Vec<usize>) {
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            if next == self.rows {
                break;
            }
            let Some(pivot) = (next..self.rows).find(|&r| !self.arith.is_zero(self.at(r, col)))
            else {
                continue;
            };
            self.swap_rows(pivot, next);
            let inv = self.arith.inv(self.at(next, col));
            for c in col..self.cols {
                let scaled = self.arith.mul(self.at(next, c), &inv);
                self.data[next * self.cols + c] = scaled;
            }
            for r in 0..self.rows {
                if r == next || self.arith.is_zero(self.at(r, col)) {
                    continue;
                }
                let factor = self.at(r, col).clone();
                for c in col..self.cols {
                    let updated = self.arith.sub_mul(self.at(r, c), &factor, self.at(next, c));
                    self.data[r * self.cols + c] = updated;
                }
            }
            pivots.push(col);
            next += 1;
        }
        (next, pivots)
    }

    fn kernel_from_rref(&self, pivots: &[usize]) -> Vec<Vector> {
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in (0..self.cols).filter(|&c| !pivot_set[c]) {
            let mut entries = vec![(free, Scalar::one())];
            for (row, &p) in pivots.iter().enumerate() {
                let coeff = self.at(row, free);
                if !self.arith.is_zero(coeff) {
                    entries.push((p, self.arith.to_scalar(&self.arith.neg(coeff))));
                }
            }
            entries.sort_by_key(|&(i, _)| i);
            basis.push(Vector::from_entries(self.cols, entries).expect("valid kernel vector"));
        }
        basis
    }

    fn solution_from_rref(&self, pivots: &[usize], unknowns: usize) -> Option<Vector> {
        if pivots.last().is_some_and(|&p| p == unknowns) {
            return None;
        }
        let mut entries = Vec::new();
        for (row, &p) in pivots.iter().enumerate() {
            let value = self.at(row, unknowns);
            if !self.arith.is_zero(value) {
                entries.push((p, self.arith.to_scalar(value)));
            }
        }
        Some(Vector::from_entries(unknowns, entries).expect("valid solution vector"))
    }
}
