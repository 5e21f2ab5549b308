//! Exact integer linear algebra: Smith normal form, Hermite-reduced lattice
//! bases, integer linear solving and cokernels of relation matrices.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("dimension mismatch: {0}")]
pub struct DimensionMismatch(pub String);

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self, DimensionMismatch> {
        if data.len() != rows * cols {
            return Err(DimensionMismatch(format!(
                "{} entries supplied for a {}x{} matrix",
                data.len(),
                rows,
                cols
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from small integer rows. Panics on ragged input.
    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| x.into()))
            .collect();
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn diagonal(entries: &[BigInt]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, DimensionMismatch> {
        if self.cols != other.rows {
            return Err(DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>, DimensionMismatch> {
        if v.len() != self.cols {
            return Err(DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt, DimensionMismatch> {
        if self.rows != self.cols {
            return Err(DimensionMismatch(
                "determinant of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = v / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        Ok(sign * &m[n - 1][n - 1])
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[target] += factor * row[source]
    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(source, j)] * factor;
            self[(target, j)] += v;
        }
    }

    /// col[target] += factor * col[source]
    fn add_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, source)] * factor;
            self[(i, target)] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// `u * a * v == d` with `u`, `v` unimodular and `d` diagonal, each nonzero
/// diagonal entry dividing the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors()
            .iter()
            .filter(|x| !x.is_zero())
            .count()
    }
}

/// Smith normal form by repeated gcd reduction, pivoting on the entry of
/// smallest absolute value.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = &d[(i, j)];
                    if !x.is_zero() && pivot.is_none_or(|(pi, pj)| x.abs() < d[(pi, pj)].abs()) {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return finish(u, d, v);
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let p = d[(t, t)].clone();
            let mut dirty = false;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -d[(i, t)].div_floor(&p);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                dirty |= !d[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -d[(t, j)].div_floor(&p);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                dirty |= !d[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }
            // the pivot must divide the whole remaining block
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&p)));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    finish(u, d, v)
}

fn finish(u: IntMatrix, d: IntMatrix, v: IntMatrix) -> SmithDecomposition {
    SmithDecomposition { u, d, v }
}

/// Reduces a generating set of a sublattice of Z^m to its Hermite basis.
///
/// Columns are eliminated from last to first, so each basis vector's pivot is
/// its last nonzero coordinate. Pivots are positive and every other basis
/// vector's entry in a pivot column lies in `[0, pivot)`. Basis vectors are
/// returned in increasing pivot order.
pub fn hermite_basis(generators: &[Vec<BigInt>], m: usize) -> Vec<Vec<BigInt>> {
    let mut pool: Vec<Vec<BigInt>> = generators
        .iter()
        .filter(|g| g.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    let mut basis: Vec<(usize, Vec<BigInt>)> = Vec::new();

    for col in (0..m).rev() {
        loop {
            let nz: Vec<usize> = (0..pool.len())
                .filter(|&i| !pool[i][col].is_zero())
                .collect();
            if nz.is_empty() {
                break;
            }
            let best = *nz.iter().min_by_key(|&&i| pool[i][col].abs()).unwrap();
            if nz.len() == 1 {
                let mut row = pool.swap_remove(best);
                if row[col].is_negative() {
                    row.iter_mut().for_each(|x| *x = -&*x);
                }
                basis.push((col, row));
                break;
            }
            let pivot = pool[best][col].clone();
            let pivot_row = pool[best].clone();
            for &i in &nz {
                if i == best {
                    continue;
                }
                let q = pool[i][col].div_floor(&pivot);
                for (x, y) in pool[i].iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
            }
            pool.retain(|r| r.iter().any(|x| !x.is_zero()));
        }
    }

    // basis is in decreasing pivot order; reduce entries above each pivot
    for k in 0..basis.len() {
        let (pc, pv) = basis[k].clone();
        let d = pv[pc].clone();
        for (other_col, other) in basis.iter_mut().take(k) {
            debug_assert!(*other_col > pc);
            let q = other[pc].div_floor(&d);
            if !q.is_zero() {
                for (x, y) in other.iter_mut().zip(&pv) {
                    *x -= &q * y;
                }
            }
        }
    }
    basis.reverse();
    basis.into_iter().map(|(_, v)| v).collect()
}

/// Reduces `x` modulo the lattice spanned by a Hermite basis from
/// [`hermite_basis`], giving the canonical coset representative.
pub fn reduce_modulo_lattice(x: &mut [BigInt], basis: &[Vec<BigInt>]) {
    for b in basis.iter().rev() {
        let Some(pc) = b.iter().rposition(|v| !v.is_zero()) else {
            continue;
        };
        let q = x[pc].div_floor(&b[pc]);
        if !q.is_zero() {
            for (xi, bi) in x.iter_mut().zip(b) {
                *xi -= &q * bi;
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerSolution {
    pub particular: Vec<BigInt>,
    pub kernel_basis: Vec<Vec<BigInt>>,
}

/// Solves `a x = b` over the integers.
///
/// Returns `None` when no integer solution exists. The kernel basis is in
/// Hermite form and the particular solution is reduced against it, so the
/// output is canonical for the solution set.
pub fn solve_integer_linear(
    a: &IntMatrix,
    b: &[BigInt],
) -> Result<Option<IntegerSolution>, DimensionMismatch> {
    if b.len() != a.rows {
        return Err(DimensionMismatch(format!(
            "right-hand side has length {} but the matrix has {} rows",
            b.len(),
            a.rows
        )));
    }
    let snf = smith_normal_form(a);
    let ub = snf.u.mul_vec(b)?;
    let factors = snf.invariant_factors();
    let mut y = vec![BigInt::zero(); a.cols];
    for (i, c) in ub.iter().enumerate() {
        let d = factors.get(i).cloned().unwrap_or_else(BigInt::zero);
        if d.is_zero() {
            if !c.is_zero() {
                return Ok(None);
            }
        } else {
            if !c.is_multiple_of(&d) {
                return Ok(None);
            }
            y[i] = c / &d;
        }
    }
    let rank = snf.rank();
    let kernel: Vec<Vec<BigInt>> = (rank..a.cols).map(|j| snf.v.column(j)).collect();
    let kernel_basis = hermite_basis(&kernel, a.cols);
    let mut particular = snf.v.mul_vec(&y)?;
    reduce_modulo_lattice(&mut particular, &kernel_basis);
    Ok(Some(IntegerSolution {
        particular,
        kernel_basis,
    }))
}

/// Solves `a x ≡ b` where row `i` is read modulo `moduli[i]` (0 means exact).
///
/// The returned kernel basis spans all integer `x` with `a x ≡ 0`.
pub fn solve_modular(
    a: &IntMatrix,
    moduli: &[BigInt],
    b: &[BigInt],
) -> Result<Option<IntegerSolution>, DimensionMismatch> {
    if moduli.len() != a.rows {
        return Err(DimensionMismatch("one modulus per row required".into()));
    }
    let extra: Vec<usize> = (0..a.rows).filter(|&i| !moduli[i].is_zero()).collect();
    let mut aug = IntMatrix::zeros(a.rows, a.cols + extra.len());
    for i in 0..a.rows {
        for j in 0..a.cols {
            aug[(i, j)] = a[(i, j)].clone();
        }
    }
    for (k, &i) in extra.iter().enumerate() {
        aug[(i, a.cols + k)] = moduli[i].clone();
    }
    let Some(sol) = solve_integer_linear(&aug, b)? else {
        return Ok(None);
    };
    let projected: Vec<Vec<BigInt>> = sol
        .kernel_basis
        .iter()
        .map(|k| k[..a.cols].to_vec())
        .collect();
    let kernel_basis = hermite_basis(&projected, a.cols);
    let mut particular = sol.particular[..a.cols].to_vec();
    reduce_modulo_lattice(&mut particular, &kernel_basis);
    Ok(Some(IntegerSolution {
        particular,
        kernel_basis,
    }))
}

/// A finitely generated abelian group `Z^free_rank ⊕ Z/t1 ⊕ … ⊕ Z/tk` with
/// each `ti` dividing `ti+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroupDescriptor {
    pub free_rank: usize,
    #[serde(with = "crate::bigint_serde::vec")]
    pub torsion_factors: Vec<BigInt>,
}

impl AbelianGroupDescriptor {
    pub fn trivial() -> Self {
        AbelianGroupDescriptor {
            free_rank: 0,
            torsion_factors: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroupDescriptor {
            free_rank: rank,
            torsion_factors: Vec::new(),
        }
    }

    /// Builds the canonical descriptor of `Z^free_rank ⊕ ⊕ Z/orders[i]`.
    /// Orders need not be in divisibility order; 0 and 1 are handled.
    pub fn from_cyclic_orders(free_rank: usize, orders: &[BigInt]) -> Self {
        let mut diag: Vec<BigInt> = orders.to_vec();
        diag.extend(std::iter::repeat_n(BigInt::zero(), free_rank));
        group_from_presentation(&IntMatrix::diagonal(&diag))
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion_factors.is_empty()
    }
}

impl fmt::Display for AbelianGroupDescriptor {
    /// `Z + Z/2`, `Z/24`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = std::iter::repeat_n("Z".to_string(), self.free_rank)
            .chain(self.torsion_factors.iter().map(|t| format!("Z/{t}")))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// The cokernel of `r : Z^cols → Z^rows`.
pub fn group_from_presentation(r: &IntMatrix) -> AbelianGroupDescriptor {
    let snf = smith_normal_form(r);
    let factors = snf.invariant_factors();
    let nonzero = factors.iter().filter(|d| !d.is_zero()).count();
    let torsion_factors = factors.into_iter().filter(|d| *d > BigInt::one()).collect();
    AbelianGroupDescriptor {
        free_rank: r.rows - nonzero,
        torsion_factors,
    }
}
