//! Dense matrices over the integers and their Smith normal form.
//!
//! Everything here is exact: entries are arbitrary-precision integers and no
//! intermediate result is ever truncated. The Smith normal form drives all
//! canonical forms downstream, so it is fully deterministic: the pivot is
//! always the entry of smallest nonzero absolute value in the remaining
//! submatrix, ties broken in row-major order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A `rows x cols` integer matrix with entries stored in row-major order.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    /// Builds a matrix from row-major entries.
    ///
    /// # Panics
    /// Panics if `entries.len() != rows * cols`.
    #[must_use]
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows * cols");
        IntMatrix { rows, cols, entries }
    }

    #[must_use]
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    #[must_use]
    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Convenience constructor from machine integers, mostly for tests.
    #[must_use]
    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            entries.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix { rows: r, cols: c, entries }
    }

    /// Square diagonal matrix with the given diagonal.
    #[must_use]
    pub fn diagonal(diag: &[BigInt]) -> Self {
        let n = diag.len();
        let mut m = IntMatrix::zero(n, n);
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    #[must_use]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[must_use]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[must_use]
    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    #[must_use]
    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.at(i, j).is_zero()))
    }

    #[must_use]
    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    /// Matrix whose columns are the given vectors.
    #[must_use]
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = IntMatrix::zero(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    #[must_use]
    pub fn transpose(&self) -> Self {
        let mut m = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.at(i, j).clone());
            }
        }
        m
    }

    /// `[self | other]` side by side.
    #[must_use]
    pub fn hstack(&self, other: &IntMatrix) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut m = IntMatrix::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.at(i, j).clone());
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.at(i, j).clone());
            }
        }
        m
    }

    /// `self` on top of `other`.
    #[must_use]
    pub fn vstack(&self, other: &IntMatrix) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut m = IntMatrix::zero(self.rows + other.rows, self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                m.set(i, j, self.at(i, j).clone());
            }
            for i in 0..other.rows {
                m.set(self.rows + i, j, other.at(i, j).clone());
            }
        }
        m
    }

    #[must_use]
    pub fn mul(&self, other: &IntMatrix) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut m = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    m.entries[idx] += a * b;
                }
            }
        }
        m
    }

    #[must_use]
    pub fn apply(&self, vector: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(vector.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = BigInt::zero();
                for j in 0..self.cols {
                    let a = self.at(i, j);
                    if !a.is_zero() && !vector[j].is_zero() {
                        acc += a * &vector[j];
                    }
                }
                acc
            })
            .collect()
    }

    /// Determinant of a square matrix by fraction-free (Bareiss) elimination.
    ///
    /// # Panics
    /// Panics if the matrix is not square.
    #[must_use]
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.at(k, k).is_zero() {
                // Bareiss needs a nonzero pivot; swap one in or the determinant is 0.
                match (k + 1..n).find(|&i| !a.at(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                    a.set(i, j, &num / &prev);
                }
                a.set(i, k, BigInt::zero());
            }
            prev = a.at(k, k).clone();
        }
        sign * a.at(n - 1, n - 1).clone()
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.entries.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.rows {
            self.entries.swap(k * self.cols + i, k * self.cols + j);
        }
    }

    /// row_i -= q * row_t
    fn row_sub(&mut self, i: usize, t: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for k in 0..self.cols {
            let x = q * self.at(t, k);
            self.entries[i * self.cols + k] -= x;
        }
    }

    /// col_j -= q * col_t
    fn col_sub(&mut self, j: usize, t: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for k in 0..self.rows {
            let x = q * self.at(k, t);
            self.entries[k * self.cols + j] -= x;
        }
    }

    /// row_i += row_t
    fn row_add(&mut self, i: usize, t: usize) {
        for k in 0..self.cols {
            let x = self.at(t, k).clone();
            self.entries[i * self.cols + k] += x;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for k in 0..self.cols {
            let idx = i * self.cols + k;
            let x = -self.entries[idx].clone();
            self.entries[idx] = x;
        }
    }

    fn negate_col(&mut self, j: usize) {
        for k in 0..self.rows {
            let idx = k * self.cols + j;
            let x = -self.entries[idx].clone();
            self.entries[idx] = x;
        }
    }
}

/// Smith normal form data. The transforms satisfy `u * a * v = s` with `u`, `v`
/// unimodular; inverses are tracked alongside so that downstream presentations
/// can move between old and new coordinates without re-inverting anything.
pub struct Smith {
    pub s: IntMatrix,
    pub u: Option<IntMatrix>,
    pub v: Option<IntMatrix>,
    pub u_inv: Option<IntMatrix>,
    pub v_inv: Option<IntMatrix>,
    pub rank: usize,
}

struct Track {
    u: bool,
    v: bool,
    u_inv: bool,
    v_inv: bool,
}

/// Smith normal form `(s, u, v)` with `u * a * v = s`.
///
/// `s` is diagonal, its nonzero diagonal entries are positive and form a
/// divisibility chain, and zero diagonal entries come last. Deterministic by
/// the smallest-absolute-value / row-major pivot rule.
#[must_use]
pub fn smith_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let out = smith_engine(a, Track { u: true, v: true, u_inv: false, v_inv: false });
    (out.s, out.u.unwrap(), out.v.unwrap())
}

/// Smith normal form with all four transforms.
#[must_use]
pub fn smith_full(a: &IntMatrix) -> Smith {
    smith_engine(a, Track { u: true, v: true, u_inv: true, v_inv: true })
}

/// Smith normal form keeping only `s` and `v`; the cheap variant for kernel
/// computations, where the left transform (whose side can be huge) is unused.
#[must_use]
pub fn smith_v_only(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let out = smith_engine(a, Track { u: false, v: true, u_inv: false, v_inv: false });
    (out.s, out.v.unwrap())
}

fn smith_engine(a: &IntMatrix, track: Track) -> Smith {
    let mut s = a.clone();
    let (m, n) = (s.rows, s.cols);
    let mut u = track.u.then(|| IntMatrix::identity(m));
    let mut u_inv = track.u_inv.then(|| IntMatrix::identity(m));
    let mut v = track.v.then(|| IntMatrix::identity(n));
    let mut v_inv = track.v_inv.then(|| IntMatrix::identity(n));

    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = find_pivot(&s, t) else { break };
        if pi != t {
            s.swap_rows(t, pi);
            if let Some(u) = u.as_mut() {
                u.swap_rows(t, pi);
            }
            if let Some(ui) = u_inv.as_mut() {
                ui.swap_cols(t, pi);
            }
        }
        if pj != t {
            s.swap_cols(t, pj);
            if let Some(v) = v.as_mut() {
                v.swap_cols(t, pj);
            }
            if let Some(vi) = v_inv.as_mut() {
                vi.swap_rows(t, pj);
            }
        }

        'reduce: loop {
            // Clear the pivot column. Truncated division leaves remainders of
            // strictly smaller absolute value, so swapping a surviving
            // remainder into the pivot position terminates.
            for i in t + 1..m {
                if s.at(i, t).is_zero() {
                    continue;
                }
                let q = s.at(i, t) / s.at(t, t);
                s.row_sub(i, t, &q);
                if let Some(u) = u.as_mut() {
                    u.row_sub(i, t, &q);
                }
                if let Some(ui) = u_inv.as_mut() {
                    // (E u)^{-1} = u^{-1} E^{-1}: add q * col_i to col_t
                    for k in 0..m {
                        let x = &q * ui.at(k, i);
                        ui.entries[k * ui.cols + t] += x;
                    }
                }
                if !s.at(i, t).is_zero() {
                    s.swap_rows(t, i);
                    if let Some(u) = u.as_mut() {
                        u.swap_rows(t, i);
                    }
                    if let Some(ui) = u_inv.as_mut() {
                        ui.swap_cols(t, i);
                    }
                    continue 'reduce;
                }
            }
            for j in t + 1..n {
                if s.at(t, j).is_zero() {
                    continue;
                }
                let q = s.at(t, j) / s.at(t, t);
                s.col_sub(j, t, &q);
                if let Some(v) = v.as_mut() {
                    v.col_sub(j, t, &q);
                }
                if let Some(vi) = v_inv.as_mut() {
                    // (v F)^{-1} = F^{-1} v^{-1}: add q * row_j to row_t
                    for k in 0..n {
                        let x = &q * vi.at(j, k);
                        vi.entries[t * vi.cols + k] += x;
                    }
                }
                if !s.at(t, j).is_zero() {
                    s.swap_cols(t, j);
                    if let Some(v) = v.as_mut() {
                        v.swap_cols(t, j);
                    }
                    if let Some(vi) = v_inv.as_mut() {
                        vi.swap_rows(t, j);
                    }
                    continue 'reduce;
                }
            }
            // Row and column t are clear; force the divisibility chain. If some
            // remaining entry is not divisible by the pivot, folding its row
            // into row t lets the next pass shrink the pivot.
            let pivot = s.at(t, t).clone();
            let mut fixed = true;
            'search: for i in t + 1..m {
                for j in t + 1..n {
                    if !(s.at(i, j) % &pivot).is_zero() {
                        s.row_add(t, i);
                        if let Some(u) = u.as_mut() {
                            u.row_add(t, i);
                        }
                        if let Some(ui) = u_inv.as_mut() {
                            // (E u)^{-1}: subtract col_t from col_i
                            for k in 0..m {
                                let x = ui.at(k, t).clone();
                                ui.entries[k * ui.cols + i] -= x;
                            }
                        }
                        fixed = false;
                        break 'search;
                    }
                }
            }
            if fixed {
                break;
            }
        }

        if s.at(t, t).is_negative() {
            s.negate_row(t);
            if let Some(u) = u.as_mut() {
                u.negate_row(t);
            }
            if let Some(ui) = u_inv.as_mut() {
                ui.negate_col(t);
            }
        }
        t += 1;
    }

    Smith { s, u, v, u_inv, v_inv, rank: t }
}

/// Smallest nonzero absolute value in the submatrix at `(t.., t..)`, ties
/// broken row-major. `None` when the submatrix is zero.
fn find_pivot(s: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..s.rows {
        for j in t..s.cols {
            let x = s.at(i, j);
            if x.is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    if x.abs() < s.at(bi, bj).abs() {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

/// Basis of the integer kernel `{x : a x = 0}`, returned as matrix columns.
#[must_use]
pub fn lattice_kernel(a: &IntMatrix) -> IntMatrix {
    let (s, v) = smith_v_only(a);
    let kernel_cols: Vec<usize> = (0..a.cols)
        .filter(|&j| j >= a.rows.min(a.cols) || s.at(j, j).is_zero())
        .collect();
    let mut k = IntMatrix::zero(a.cols, kernel_cols.len());
    for (out_j, &j) in kernel_cols.iter().enumerate() {
        for i in 0..a.cols {
            k.set(i, out_j, v.at(i, j).clone());
        }
    }
    k
}

/// Basis of `{x : a x ≡ 0 row-wise mod moduli}`, returned as matrix columns.
///
/// `moduli[i]` is the modulus for row `i`; modulus 0 means the row is an exact
/// equation over the integers. Only the small right transform of a Smith
/// normal form is ever needed, so the row count may be large.
#[must_use]
pub fn congruence_kernel(a: &IntMatrix, moduli: &[BigInt]) -> IntMatrix {
    assert_eq!(moduli.len(), a.rows, "one modulus per row");
    let exact_rows: Vec<usize> = (0..a.rows).filter(|&i| moduli[i].is_zero()).collect();
    let modular_rows: Vec<usize> = (0..a.rows).filter(|&i| !moduli[i].is_zero()).collect();

    let b1 = if exact_rows.is_empty() {
        IntMatrix::identity(a.cols)
    } else {
        let mut sub = IntMatrix::zero(exact_rows.len(), a.cols);
        for (out_i, &i) in exact_rows.iter().enumerate() {
            for j in 0..a.cols {
                sub.set(out_i, j, a.at(i, j).clone());
            }
        }
        lattice_kernel(&sub)
    };
    if modular_rows.is_empty() || b1.cols() == 0 {
        return b1;
    }

    // Bring all congruences to the common modulus e = lcm of the row moduli:
    // a_i x ≡ 0 (mod d_i) iff (e/d_i) a_i x ≡ 0 (mod e).
    let mut e = BigInt::one();
    for &i in &modular_rows {
        e = e.lcm(&moduli[i]);
    }
    let mut g = IntMatrix::zero(modular_rows.len(), b1.cols());
    for (out_i, &i) in modular_rows.iter().enumerate() {
        let scale = &e / &moduli[i];
        for j in 0..b1.cols() {
            let mut acc = BigInt::zero();
            for k in 0..a.cols {
                let x = a.at(i, k);
                if !x.is_zero() && !b1.at(k, j).is_zero() {
                    acc += x * b1.at(k, j);
                }
            }
            g.set(out_i, j, acc * &scale);
        }
    }

    // u g v = s with u unimodular fixes e*Z^rows, hence g z ≡ 0 (mod e) iff
    // s w ≡ 0 (mod e) for w = v^{-1} z, i.e. w_j ≡ 0 (mod e / gcd(s_jj, e)).
    let (s, v) = smith_v_only(&g);
    let mut l2 = v;
    for j in 0..l2.cols() {
        let d = if j < g.rows().min(g.cols()) { s.at(j, j).clone() } else { BigInt::zero() };
        let multiplier = &e / d.gcd(&e);
        if !multiplier.is_one() {
            for i in 0..l2.rows() {
                let x = l2.at(i, j) * &multiplier;
                l2.set(i, j, x);
            }
        }
    }
    b1.mul(&l2)
}

/// One solution of `a x ≡ b (mod moduli)` row-wise, or `None` when unsolvable.
#[must_use]
pub fn congruence_solve(a: &IntMatrix, moduli: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(b.len(), a.rows, "target length mismatch");
    // Solutions with x extended by a slack t satisfying a x - t b ≡ 0 and
    // t = 1; the kernel of the augmented matrix contains one iff the gcd of
    // the slack coordinates over the kernel basis is 1.
    let mut aug = IntMatrix::zero(a.rows, a.cols + 1);
    for i in 0..a.rows {
        for j in 0..a.cols {
            aug.set(i, j, a.at(i, j).clone());
        }
        aug.set(i, a.cols, -b[i].clone());
    }
    let kernel = congruence_kernel(&aug, moduli);
    let mut g = BigInt::zero();
    let mut sol = vec![BigInt::zero(); a.cols + 1];
    for j in 0..kernel.cols() {
        let tj = kernel.at(a.cols, j);
        let egcd = g.extended_gcd(tj);
        for (i, entry) in sol.iter_mut().enumerate() {
            *entry = &egcd.x * &*entry + &egcd.y * kernel.at(i, j);
        }
        g = egcd.gcd;
        if g.is_one() {
            break;
        }
    }
    if g.is_one() {
        sol.truncate(a.cols);
        Some(sol)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_snf(a: &IntMatrix) {
        let (s, u, v) = smith_normal_form(a);
        assert_eq!(u.mul(a).mul(&v), s, "u a v != s");
        assert!(s.is_diagonal());
        assert!(u.determinant().abs().is_one(), "u not unimodular");
        assert!(v.determinant().abs().is_one(), "v not unimodular");
        let n = a.rows().min(a.cols());
        let mut seen_zero = false;
        for t in 0..n {
            let d = s.at(t, t);
            assert!(!d.is_negative());
            if d.is_zero() {
                seen_zero = true;
            } else {
                assert!(!seen_zero, "zero diagonal entry before a nonzero one");
                if t + 1 < n && !s.at(t + 1, t + 1).is_zero() {
                    assert!((s.at(t + 1, t + 1) % d).is_zero(), "no divisibility chain");
                }
            }
        }
    }

    #[test]
    fn snf_zero_matrix() {
        let a = IntMatrix::from_rows(&[&[0]]);
        let (s, u, v) = smith_normal_form(&a);
        assert_eq!(s, IntMatrix::from_rows(&[&[0]]));
        assert_eq!(u, IntMatrix::identity(1));
        assert_eq!(v, IntMatrix::identity(1));
    }

    #[test]
    fn snf_identity() {
        let a = IntMatrix::identity(2);
        let (s, _, _) = smith_normal_form(&a);
        assert_eq!(s, IntMatrix::identity(2));
    }

    #[test]
    fn snf_two_by_two() {
        let a = IntMatrix::from_rows(&[&[2, 4], &[6, 8]]);
        let (s, u, v) = smith_normal_form(&a);
        assert_eq!(s, IntMatrix::from_rows(&[&[2, 0], &[0, 4]]));
        assert_eq!(u.mul(&a).mul(&v), s);
        assert!(u.determinant().abs().is_one());
        assert!(v.determinant().abs().is_one());
        check_snf(&a);
    }

    #[test]
    fn snf_rectangular_and_full_transforms() {
        let a = IntMatrix::from_rows(&[&[2, 0, 3], &[0, 4, 0]]);
        check_snf(&a);
        let full = smith_full(&a);
        let u = full.u.unwrap();
        let u_inv = full.u_inv.unwrap();
        let v = full.v.unwrap();
        let v_inv = full.v_inv.unwrap();
        assert_eq!(u.mul(&u_inv), IntMatrix::identity(2));
        assert_eq!(v.mul(&v_inv), IntMatrix::identity(3));
    }

    #[test]
    fn lattice_kernel_of_projection() {
        // x + y = 0 has kernel spanned by (1, -1) up to sign.
        let a = IntMatrix::from_rows(&[&[1, 1]]);
        let k = lattice_kernel(&a);
        assert_eq!(k.cols(), 1);
        assert!(a.mul(&k).is_zero());
        assert!(k.at(0, 0).abs().is_one());
    }

    #[test]
    fn congruence_kernel_matches_enumeration() {
        // 2x + y ≡ 0 (mod 4), x - y = 0 over Z.
        let a = IntMatrix::from_rows(&[&[2, 1], &[1, -1]]);
        let moduli = [BigInt::from(4), BigInt::from(0)];
        let k = congruence_kernel(&a, &moduli);
        // Exact row forces x = y, then 3x ≡ 0 (mod 4) forces x ≡ 0 (mod 4).
        for j in 0..k.cols() {
            let col = k.column(j);
            assert!(((BigInt::from(2) * &col[0] + &col[1]) % BigInt::from(4)).is_zero());
            assert_eq!(col[0], col[1]);
        }
        // The solutions form the lattice (4, 4) Z; index check via a member.
        let target = [BigInt::from(4), BigInt::from(4)];
        let x = congruence_solve(&k, &[BigInt::zero(), BigInt::zero()], &target);
        assert!(x.is_some(), "(4,4) must lie in the kernel lattice");
        let non_member = [BigInt::from(1), BigInt::from(1)];
        assert!(congruence_solve(&k, &[BigInt::zero(), BigInt::zero()], &non_member).is_none());
    }

    #[test]
    fn congruence_solve_finds_witness() {
        // 2x ≡ 2 (mod 4) is solvable, 2x ≡ 1 (mod 4) is not.
        let a = IntMatrix::from_rows(&[&[2]]);
        let moduli = [BigInt::from(4)];
        let x = congruence_solve(&a, &moduli, &[BigInt::from(2)]).expect("solvable");
        assert!(((BigInt::from(2) * &x[0]) - BigInt::from(2)).mod_floor(&BigInt::from(4)).is_zero());
        assert!(congruence_solve(&a, &moduli, &[BigInt::from(1)]).is_none());
    }

    #[test]
    fn determinant_small_cases() {
        assert_eq!(IntMatrix::identity(3).determinant(), BigInt::one());
        let a = IntMatrix::from_rows(&[&[2, 4], &[6, 8]]);
        assert_eq!(a.determinant(), BigInt::from(-8));
        let singular = IntMatrix::from_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(singular.determinant(), BigInt::zero());
    }
}
