use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

/// A Hermitian matrix stored as its lower triangle (row-major).
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    n: usize,
    lower: Vec<Complex64>,
}

fn tri(i: usize, j: usize) -> usize {
    i * (i + 1) / 2 + j
}

impl HermitianMatrix {
    /// Builds the matrix from `entry(i, j)` evaluated for `j ≤ i`. Diagonal
    /// entries keep only their real part.
    pub fn from_lower_fn(n: usize, mut entry: impl FnMut(usize, usize) -> Complex64) -> Self {
        assert!(n >= 1, "HermitianMatrix must have dimension at least 1");
        let mut lower = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in 0..=i {
                let mut v = entry(i, j);
                if i == j {
                    v.im = 0.0;
                }
                lower.push(v);
            }
        }
        HermitianMatrix { n, lower }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_lower_fn(n, |i, j| Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0))
    }

    pub fn diag(d: &[f64]) -> Self {
        Self::from_lower_fn(d.len(), |i, j| Complex64::new(if i == j { d[i] } else { 0.0 }, 0.0))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        if j <= i {
            self.lower[tri(i, j)]
        } else {
            self.lower[tri(j, i)].conj()
        }
    }

    fn dense(&self, shift: f64) -> Vec<Vec<Complex64>> {
        let mut a = vec![vec![Complex64::new(0.0, 0.0); self.n]; self.n];
        for (i, row) in a.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = self.get(i, j);
            }
            row[i].re += shift;
        }
        a
    }

    /// `max(1, max |h_ii|)`, the scale the PSD tolerance is relative to.
    pub fn scale(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i).re.abs()).fold(1.0, f64::max)
    }

    /// Positive semidefiniteness of `H + tol·scale·I`, decided by a
    /// diagonally pivoted Cholesky elimination.
    pub fn is_psd(&self, tol: f64) -> bool {
        let shift = tol.max(0.0) * self.scale();
        pivoted_elimination(self.dense(shift)).0
    }

    /// Smallest pivot reached by the pivoted elimination of `H` itself. It is
    /// nonnegative exactly when the elimination certifies `H ⪰ 0`, and the
    /// first negative pivot otherwise.
    pub fn min_pivot(&self) -> f64 {
        pivoted_elimination(self.dense(0.0)).1
    }
}

/// Returns `(psd, smallest pivot)`.
fn pivoted_elimination(mut a: Vec<Vec<Complex64>>) -> (bool, f64) {
    let n = a.len();
    let mut active: Vec<usize> = (0..n).collect();
    let mut min_pivot = f64::INFINITY;
    while !active.is_empty() {
        let (pos, &k) = active
            .iter()
            .enumerate()
            .max_by(|(_, &x), (_, &y)| a[x][x].re.total_cmp(&a[y][y].re))
            .expect("active set is nonempty");
        let d = a[k][k].re;
        min_pivot = min_pivot.min(d);
        if d <= 0.0 {
            // Remaining block must vanish identically.
            let zero_block = d == 0.0 && active.iter().all(|&i| active.iter().all(|&j| a[i][j].norm_sqr() == 0.0));
            return (zero_block, min_pivot);
        }
        active.swap_remove(pos);
        for &i in &active {
            let lik = a[i][k];
            for &j in &active {
                let t = lik * a[k][j] / d;
                a[i][j] -= t;
            }
        }
    }
    (true, min_pivot)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psd_examples() {
        assert!(HermitianMatrix::identity(2).is_psd(0.0));
        assert!(!HermitianMatrix::diag(&[1.0, -1.0]).is_psd(1e-10));
        let ones = HermitianMatrix::from_lower_fn(2, |_, _| Complex64::new(1.0, 0.0));
        assert!(ones.is_psd(0.0));
        assert_eq!(ones.min_pivot(), 0.0);
    }

    #[test]
    fn zero_diagonal_with_coupling_is_not_psd() {
        let h = HermitianMatrix::from_lower_fn(2, |i, j| Complex64::new(if i == j { 0.0 } else { 1.0 }, 0.0));
        assert!(!h.is_psd(0.0));
    }

    #[test]
    fn tolerance_absorbs_tiny_negative_eigenvalue() {
        let h = HermitianMatrix::diag(&[2.0, -1e-14]);
        assert!(!h.is_psd(0.0));
        assert!(h.is_psd(1e-10));
        assert!(h.min_pivot() < 0.0);
    }

    #[test]
    fn complex_hermitian_3x3() {
        // Gram matrix of three vectors in C^2 has rank 2: PSD, singular.
        let v = [
            [Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)],
            [Complex64::new(0.5, -0.5), Complex64::new(2.0, 0.0)],
            [Complex64::new(1.5, -0.5), Complex64::new(2.0, 1.0)],
        ];
        let g = HermitianMatrix::from_lower_fn(3, |i, j| v[i][0] * v[j][0].conj() + v[i][1] * v[j][1].conj());
        assert!(g.is_psd(1e-12));
        assert_eq!(g.get(0, 2), g.get(2, 0).conj());
    }
}
