//! Dense linear algebra over `Z4` and `Z2`.
//!
//! `Z4` is a local principal ideal ring, so every matrix has a Smith form
//! `D = R A C` with `R`, `C` invertible and `D` diagonal with entries in
//! `{1, 2}` followed by zeros. Kernels, linear solves and determinants are
//! all read off that decomposition.

use crate::zring::{BinaryVector, Z4};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z4Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Z4>,
}

impl Z4Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Z4Matrix { rows, cols, data: vec![Z4::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Z4::ONE;
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Z4>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Z4Matrix { rows: n, cols, data }
    }

    pub fn num_rows(&self) -> usize {
        self.rows
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Z4] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Z4> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Z4>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul_vec(&self, x: &[Z4]) -> Vec<Z4> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(x).fold(Z4::ZERO, |acc, (&a, &b)| acc + a * b))
            .collect()
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

    fn scale_row(&mut self, r: usize, s: Z4) {
        for j in 0..self.cols {
            self[(r, j)] = self[(r, j)] * s;
        }
    }

    /// `row[dst] -= f * row[src]`
    fn sub_row(&mut self, dst: usize, src: usize, f: Z4) {
        for j in 0..self.cols {
            let v = self[(src, j)];
            self[(dst, j)] = self[(dst, j)] - f * v;
        }
    }

    /// `col[dst] -= f * col[src]`
    fn sub_col(&mut self, dst: usize, src: usize, f: Z4) {
        for i in 0..self.rows {
            let v = self[(i, src)];
            self[(i, dst)] = self[(i, dst)] - f * v;
        }
    }

    /// Smith decomposition of `self`.
    pub fn smith(&self) -> Smith {
        let mut d = self.clone();
        let mut r = Z4Matrix::identity(self.rows);
        let mut c = Z4Matrix::identity(self.cols);
        let mut det_rc = Z4::ONE;
        let mut diagonal = Vec::new();

        for t in 0..self.rows.min(self.cols) {
            // Pivot of minimal valuation: any unit, else any 2.
            let mut pivot = None;
            'search: for want_unit in [true, false] {
                for i in t..d.rows {
                    for j in t..d.cols {
                        let e = d[(i, j)];
                        if (want_unit && e.is_unit()) || (!want_unit && !e.is_zero()) {
                            pivot = Some((i, j));
                            break 'search;
                        }
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            if pi != t {
                d.swap_rows(t, pi);
                r.swap_rows(t, pi);
                det_rc = -det_rc;
            }
            if pj != t {
                d.swap_cols(t, pj);
                c.swap_cols(t, pj);
                det_rc = -det_rc;
            }
            let p = d[(t, t)];
            if p == Z4::THREE {
                d.scale_row(t, Z4::THREE);
                r.scale_row(t, Z4::THREE);
                det_rc = det_rc * Z4::THREE;
            }
            let p = d[(t, t)];
            // Every remaining entry is divisible by the pivot.
            let quotient = |e: Z4| if p == Z4::ONE { e } else { Z4::new(e.value() >> 1) };
            for i in t + 1..d.rows {
                let f = quotient(d[(i, t)]);
                if !f.is_zero() {
                    d.sub_row(i, t, f);
                    r.sub_row(i, t, f);
                }
            }
            for j in t + 1..d.cols {
                let f = quotient(d[(t, j)]);
                if !f.is_zero() {
                    d.sub_col(j, t, f);
                    c.sub_col(j, t, f);
                }
            }
            diagonal.push(p);
        }
        Smith { diagonal, rows: self.rows, cols: self.cols, r, c, det_rc }
    }

    /// Generators of `{x : A x = 0}` as a `Z4`-module.
    pub fn kernel(&self) -> Vec<Vec<Z4>> {
        let s = self.smith();
        let mut gens = Vec::new();
        for t in 0..self.cols {
            match s.diagonal.get(t) {
                Some(&Z4::ONE) => {}
                Some(_) => gens.push(s.c.column(t).into_iter().map(|e| e * Z4::TWO).collect()),
                None => gens.push(s.c.column(t)),
            }
        }
        gens.retain(|g: &Vec<Z4>| g.iter().any(|e| !e.is_zero()));
        gens
    }

    /// Some `x` with `A x = b`, if one exists.
    pub fn solve(&self, b: &[Z4]) -> Option<Vec<Z4>> {
        assert_eq!(b.len(), self.rows);
        let s = self.smith();
        let y = s.r.mul_vec(b);
        let mut z = vec![Z4::ZERO; self.cols];
        for (t, &yt) in y.iter().enumerate() {
            match s.diagonal.get(t) {
                Some(&Z4::ONE) => z[t] = yt,
                Some(_) if yt.is_even() => z[t] = Z4::new(yt.value() >> 1),
                None if yt.is_zero() => {}
                _ => return None,
            }
        }
        Some(s.c.mul_vec(&z))
    }

    /// Determinant of a square matrix.
    pub fn determinant(&self) -> Z4 {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let s = self.smith();
        if s.diagonal.len() < self.rows {
            return Z4::ZERO;
        }
        // det(D) = det(R) det(A) det(C); det(R) det(C) is a unit, its own inverse.
        s.diagonal.iter().fold(s.det_rc, |acc, &d| acc * d)
    }
}

impl std::ops::Index<(usize, usize)> for Z4Matrix {
    type Output = Z4;
    fn index(&self, (i, j): (usize, usize)) -> &Z4 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Z4Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Z4 {
        &mut self.data[i * self.cols + j]
    }
}

/// `diag(diagonal) = r * A * c`.
#[derive(Clone, Debug)]
pub struct Smith {
    pub diagonal: Vec<Z4>,
    pub rows: usize,
    pub cols: usize,
    pub r: Z4Matrix,
    pub c: Z4Matrix,
    det_rc: Z4,
}

/// Reduced row echelon form over `Z2` with pivots searched in `order`.
/// Returns `(pivot_position, row)` pairs; each pivot is cleared in every
/// other row.
pub(crate) fn gf2_rref(
    rows: impl IntoIterator<Item = Vec<bool>>,
    order: &[usize],
) -> Vec<(usize, Vec<bool>)> {
    let mut pending: Vec<Vec<bool>> = rows.into_iter().collect();
    let mut out: Vec<(usize, Vec<bool>)> = Vec::new();
    for &pos in order {
        let Some(k) = pending.iter().position(|r| r[pos]) else { continue };
        let pivot = pending.swap_remove(k);
        for r in pending.iter_mut().chain(out.iter_mut().map(|(_, r)| r)) {
            if r[pos] {
                xor_into(r, &pivot);
            }
        }
        out.push((pos, pivot));
    }
    out
}

pub(crate) fn xor_into(dst: &mut [bool], src: &[bool]) {
    for (a, b) in dst.iter_mut().zip(src) {
        *a ^= b;
    }
}

pub(crate) fn gf2_rank(rows: impl IntoIterator<Item = Vec<bool>>, width: usize) -> usize {
    let order: Vec<usize> = (0..width).collect();
    gf2_rref(rows, &order).len()
}

/// Basis of `{x : <x, r> = 0 for all rows r}` over `Z2`.
pub(crate) fn gf2_kernel(rows: impl IntoIterator<Item = Vec<bool>>, width: usize) -> Vec<BinaryVector> {
    let order: Vec<usize> = (0..width).collect();
    let rref = gf2_rref(rows, &order);
    let pivots: Vec<usize> = rref.iter().map(|(p, _)| *p).collect();
    (0..width)
        .filter(|j| !pivots.contains(j))
        .map(|free| {
            let mut x = vec![false; width];
            x[free] = true;
            for (p, r) in &rref {
                x[*p] = r[free];
            }
            BinaryVector::new(x)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[u8]]) -> Z4Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Z4Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| Z4::new(v)).collect()).collect(), cols)
    }

    /// Leibniz expansion, independent of the Smith path.
    fn leibniz(a: &Z4Matrix) -> Z4 {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for k in 0..n {
                    let mut q = p.clone();
                    q.insert(k, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = a.num_rows();
        let mut total = Z4::ZERO;
        for p in perms(n) {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let term = (0..n).fold(Z4::ONE, |acc, i| acc * a[(i, p[i])]);
            total = if inversions % 2 == 0 { total + term } else { total - term };
        }
        total
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(m(&[&[3]]).determinant(), Z4::THREE);
        assert_eq!(m(&[&[2, 2], &[2, 3]]).determinant(), Z4::TWO);
        assert_eq!(Z4Matrix::identity(4).determinant(), Z4::ONE);
        assert_eq!(m(&[&[2, 0, 0], &[0, 1, 2], &[0, 2, 0]]).determinant(), Z4::ZERO);
        assert_eq!(Z4Matrix::zeros(0, 0).determinant(), Z4::ONE);
    }

    #[test]
    fn kernel_of_two() {
        // 2x = 0 over Z4 has kernel {0, 2}.
        let k = m(&[&[2]]).kernel();
        assert_eq!(k, vec![vec![Z4::TWO]]);
    }

    fn arb_matrix(max: usize) -> impl Strategy<Value = Z4Matrix> {
        (0..=max, 0..=max).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(0u8..4, c), r).prop_map(move |rows| {
                Z4Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(Z4::new).collect()).collect(), c)
            })
        })
    }

    fn all_vectors(n: usize) -> impl Iterator<Item = Vec<Z4>> {
        (0u32..1 << (2 * n)).map(move |i| (0..n).map(|k| Z4::new((i >> (2 * k)) as u8)).collect())
    }

    fn span_size(gens: &[Vec<Z4>], n: usize) -> usize {
        let mut set = std::collections::HashSet::new();
        set.insert(vec![Z4::ZERO; n]);
        loop {
            let snapshot: Vec<_> = set.iter().cloned().collect();
            let before = set.len();
            for v in &snapshot {
                for g in gens {
                    set.insert(v.iter().zip(g).map(|(&a, &b)| a + b).collect::<Vec<_>>());
                }
            }
            if set.len() == before {
                return set.len();
            }
        }
    }

    proptest! {
        #[test]
        fn smith_is_a_factorisation(a in arb_matrix(4)) {
            let s = a.smith();
            // r * a * c should be diagonal with the recorded entries.
            for i in 0..a.num_rows() {
                for j in 0..a.num_cols() {
                    let mut e = Z4::ZERO;
                    for k in 0..a.num_rows() {
                        for l in 0..a.num_cols() {
                            e += s.r[(i, k)] * a[(k, l)] * s.c[(l, j)];
                        }
                    }
                    let want = if i == j { s.diagonal.get(i).copied().unwrap_or(Z4::ZERO) } else { Z4::ZERO };
                    prop_assert_eq!(e, want);
                }
            }
        }

        #[test]
        fn determinant_matches_leibniz(n in 0usize..5, seed in prop::collection::vec(0u8..4, 16)) {
            let a = Z4Matrix::from_rows((0..n).map(|i| (0..n).map(|j| Z4::new(seed[i * 4 + j])).collect()).collect(), n);
            prop_assert_eq!(a.determinant(), leibniz(&a));
        }

        #[test]
        fn kernel_matches_enumeration(a in arb_matrix(4)) {
            let n = a.num_cols();
            let kernel = a.kernel();
            for g in &kernel {
                prop_assert!(a.mul_vec(g).iter().all(|e| e.is_zero()));
            }
            let brute = all_vectors(n).filter(|x| a.mul_vec(x).iter().all(|e| e.is_zero())).count();
            prop_assert_eq!(span_size(&kernel, n), brute);
        }

        #[test]
        fn solve_matches_enumeration(a in arb_matrix(3), b in prop::collection::vec(0u8..4, 3)) {
            let b: Vec<Z4> = b.into_iter().take(a.num_rows()).map(Z4::new).collect();
            prop_assume!(b.len() == a.num_rows());
            let solvable = all_vectors(a.num_cols()).any(|x| a.mul_vec(&x) == b);
            match a.solve(&b) {
                Some(x) => prop_assert_eq!(a.mul_vec(&x), b),
                None => prop_assert!(!solvable),
            }
        }
    }

    #[test]
    fn gf2_kernel_basis() {
        let rows = vec![vec![true, true, false], vec![false, true, true]];
        let k = gf2_kernel(rows.clone(), 3);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].bits(), &[true, true, true]);
        assert_eq!(gf2_rank(rows, 3), 2);
    }
}
