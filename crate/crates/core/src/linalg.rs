//! Exact linear algebra over Q(sqrt 3): reduced row echelon form with
//! first-nonzero-column pivoting, kernels, solving, and the inertia of
//! symmetric matrices. Everything is deterministic.

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<Scalar>>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![vec![Scalar::zero(); cols]; rows],
        }
    }

    pub fn from_rows(data: Vec<Vec<Scalar>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        assert!(data.iter().all(|r| r.len() == cols));
        Mat { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = Scalar::one();
        }
        m
    }

    /// In-place reduction to the (unique) reduced row echelon form.
    /// Returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let pivot_row = (row..self.rows).find(|&r| !self.data[r][col].is_zero());
            let Some(p) = pivot_row else { continue };
            self.data.swap(row, p);
            let inv = self.data[row][col].inv().expect("pivot is nonzero");
            for c in col..self.cols {
                self.data[row][c] = &self.data[row][c] * &inv;
            }
            for r in 0..self.rows {
                if r != row && !self.data[r][col].is_zero() {
                    let factor = self.data[r][col].clone();
                    for c in col..self.cols {
                        let delta = &factor * &self.data[row][c];
                        self.data[r][c] = &self.data[r][c] - &delta;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Nonzero rows of the RREF: a canonical basis of the row space.
    pub fn row_space_basis(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        m.data.truncate(pivots.len());
        m.data
    }

    pub fn row_spaces_equal(&self, other: &Mat) -> bool {
        self.cols == other.cols && self.row_space_basis() == other.row_space_basis()
    }

    /// Does `row` lie in the row space?
    pub fn row_space_contains(&self, row: &[Scalar]) -> bool {
        assert_eq!(row.len(), self.cols);
        let mut m = self.clone();
        m.data.push(row.to_vec());
        m.rows += 1;
        m.rank() == self.rank()
    }

    /// Basis of the right kernel {x : M x = 0}, in a deterministic order
    /// (one vector per free column, ascending).
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivot_set.contains(c)) {
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.data[r][free].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve M x = b exactly. Returns None when inconsistent; when the
    /// solution is not unique the particular solution with free variables
    /// set to zero is returned together with `unique = false`.
    pub fn solve(&self, b: &[Scalar]) -> Option<(Vec<Scalar>, bool)> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.data[r][c] = self.data[r][c].clone();
            }
            aug.data[r][self.cols] = b[r].clone();
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // 0 = 1 row
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.data[r][self.cols].clone();
        }
        Some((x, pivots.len() == self.cols))
    }

    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let mut det = Scalar::one();
        for col in 0..m.cols {
            let Some(p) = (col..m.rows).find(|&r| !m.data[r][col].is_zero()) else {
                return Scalar::zero();
            };
            if p != col {
                m.data.swap(col, p);
                det = -det;
            }
            det = &det * &m.data[col][col];
            let inv = m.data[col][col].inv().unwrap();
            for r in col + 1..m.rows {
                if m.data[r][col].is_zero() {
                    continue;
                }
                let factor = &m.data[r][col] * &inv;
                for c in col..m.cols {
                    let delta = &factor * &m.data[col][c];
                    m.data[r][c] = &m.data[r][c] - &delta;
                }
            }
        }
        det
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c][r] = self.data[r][c].clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows)
                .all(|i| (0..i).all(|j| self.data[i][j] == self.data[j][i]))
    }

    pub fn mul_vec(&self, x: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.cols);
        self.data
            .iter()
            .map(|row| {
                let mut acc = Scalar::zero();
                for (a, b) in row.iter().zip(x) {
                    acc += &(a * b);
                }
                acc
            })
            .collect()
    }
}

/// Inertia (n_plus, n_minus, n_zero) of a symmetric matrix, by congruence
/// diagonalization (Sylvester's law of inertia).
pub fn symmetric_signature(m: &Mat) -> (usize, usize, usize) {
    assert!(m.is_symmetric());
    let n = m.rows;
    let mut a = m.clone();
    let (mut pos, mut neg, mut zero) = (0usize, 0usize, 0usize);
    let mut k = 0;
    while k < n {
        if a.data[k][k].is_zero() {
            // find a usable pivot below/right
            if let Some(j) = (k + 1..n).find(|&j| !a.data[j][j].is_zero()) {
                // swap basis vectors k and j
                a.data.swap(k, j);
                for row in a.data.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some((i, j)) = (k..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !a.data[i][j].is_zero())
            {
                // all remaining diagonal entries vanish: e_i += e_j brings
                // 2*a[i][j] onto the diagonal
                for r in 0..n {
                    let t = a.data[r][j].clone();
                    a.data[r][i] = &a.data[r][i] + &t;
                }
                for c in 0..n {
                    let t = a.data[j][c].clone();
                    a.data[i][c] = &a.data[i][c] + &t;
                }
                if i != k {
                    a.data.swap(k, i);
                    for row in a.data.iter_mut() {
                        row.swap(k, i);
                    }
                }
            } else {
                zero += n - k;
                break;
            }
        }
        let pivot = a.data[k][k].clone();
        match pivot.sign() {
            1 => pos += 1,
            -1 => neg += 1,
            _ => unreachable!(),
        }
        // row elimination below the pivot leaves the trailing block equal
        // to B - v v^T / p, which is exactly the congruence complement
        let inv = pivot.inv().unwrap();
        for r in k + 1..n {
            if a.data[r][k].is_zero() {
                continue;
            }
            let factor = &a.data[r][k] * &inv;
            for c in k..n {
                let delta = &factor * &a.data[k][c];
                a.data[r][c] = &a.data[r][c] - &delta;
            }
        }
        k += 1;
    }
    (pos, neg, zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn si(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn rref_and_rank() {
        let mut m = Mat::from_rows(vec![
            vec![si(1), si(2), si(3)],
            vec![si(2), si(4), si(6)],
            vec![si(0), si(1), si(1)],
        ]);
        assert_eq!(m.rank(), 2);
        let pivots = m.rref();
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn kernel_solves() {
        let m = Mat::from_rows(vec![vec![si(1), si(2), si(3)], vec![si(0), si(1), si(1)]]);
        for v in m.kernel_basis() {
            assert!(m.mul_vec(&v).iter().all(Scalar::is_zero));
        }
        assert_eq!(m.kernel_basis().len(), 1);
    }

    #[test]
    fn solve_unique_and_inconsistent() {
        let m = Mat::from_rows(vec![vec![si(2), si(0)], vec![si(0), si(4)]]);
        let (x, unique) = m.solve(&[si(6), si(8)]).unwrap();
        assert!(unique);
        assert_eq!(x, vec![si(3), si(2)]);

        let m2 = Mat::from_rows(vec![vec![si(1), si(1)], vec![si(2), si(2)]]);
        assert!(m2.solve(&[si(1), si(3)]).is_none());
    }

    #[test]
    fn det_with_sqrt3() {
        let r3 = Scalar::sqrt3();
        let m = Mat::from_rows(vec![
            vec![r3.clone(), si(1)],
            vec![si(1), r3.clone()],
        ]);
        assert_eq!(m.det(), si(2));
    }

    #[test]
    fn signature_of_indefinite_form() {
        // diag(2, -3, 0)
        let mut m = Mat::zeros(3, 3);
        m.data[0][0] = si(2);
        m.data[1][1] = si(-3);
        assert_eq!(symmetric_signature(&m), (1, 1, 1));

        // hyperbolic plane [[0,1],[1,0]] has signature (1,1)
        let mut h = Mat::zeros(2, 2);
        h.data[0][1] = si(1);
        h.data[1][0] = si(1);
        assert_eq!(symmetric_signature(&h), (1, 1, 0));

        // negative definite with irrational entries
        let m = Mat::from_rows(vec![
            vec![Scalar::new(rat(-2, 1), rat(0, 1)), Scalar::sqrt3()],
            vec![Scalar::sqrt3(), Scalar::new(rat(-2, 1), rat(0, 1))],
        ]);
        assert_eq!(symmetric_signature(&m), (0, 2, 0));
    }
}
