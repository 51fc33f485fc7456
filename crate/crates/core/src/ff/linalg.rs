//! Small dense linear algebra over the prime field F_p.

/// Modular inverse by Fermat, valid for prime p.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a % p, p - 2, p)
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Row-reduced solver for M x = y with a fixed matrix M (rows x cols, row-major).
///
/// Precomputes the RREF of M together with the transform E with E M = R, so
/// repeated solves are a single matrix-vector product plus back-substitution.
pub(crate) struct Solver {
    p: u64,
    rows: usize,
    cols: usize,
    rref: Vec<Vec<u64>>,
    transform: Vec<Vec<u64>>,
    /// pivots[j] = row index of the pivot in column j, if any.
    pivots: Vec<Option<usize>>,
}

impl Solver {
    pub fn new(p: u64, matrix: Vec<Vec<u64>>) -> Self {
        let rows = matrix.len();
        let cols = if rows == 0 { 0 } else { matrix[0].len() };
        let mut rref = matrix;
        let mut transform: Vec<Vec<u64>> = (0..rows)
            .map(|i| (0..rows).map(|j| u64::from(i == j)).collect())
            .collect();
        let mut pivots = vec![None; cols];
        let mut r = 0;
        for c in 0..cols {
            let Some(pr) = (r..rows).find(|&i| rref[i][c] % p != 0) else {
                continue;
            };
            rref.swap(r, pr);
            transform.swap(r, pr);
            let inv = inv_mod(rref[r][c], p);
            for j in 0..cols {
                rref[r][j] = rref[r][j] * inv % p;
            }
            for j in 0..rows {
                transform[r][j] = transform[r][j] * inv % p;
            }
            for i in 0..rows {
                if i != r && rref[i][c] % p != 0 {
                    let f = rref[i][c] % p;
                    for j in 0..cols {
                        rref[i][j] = (rref[i][j] + (p - f) * rref[r][j]) % p;
                    }
                    for j in 0..rows {
                        transform[i][j] = (transform[i][j] + (p - f) * transform[r][j]) % p;
                    }
                }
            }
            pivots[c] = Some(r);
            r += 1;
            if r == rows {
                break;
            }
        }
        Solver { p, rows, cols, rref, transform, pivots }
    }

    /// Solves M x = y; returns None when y is outside the column span.
    pub fn solve(&self, rhs: &[u64]) -> Option<Vec<u64>> {
        debug_assert_eq!(rhs.len(), self.rows);
        let p = self.p;
        let z: Vec<u64> = (0..self.rows)
            .map(|i| {
                self.transform[i]
                    .iter()
                    .zip(rhs)
                    .fold(0u64, |acc, (&t, &y)| (acc + t * (y % p)) % p)
            })
            .collect();
        let mut x = vec![0u64; self.cols];
        let mut used = vec![false; self.rows];
        for c in 0..self.cols {
            if let Some(r) = self.pivots[c] {
                x[c] = z[r];
                used[r] = true;
            }
        }
        // Rows without pivots must vanish, and free columns stay zero, so a
        // consistency re-check against the RREF rows is enough.
        for r in 0..self.rows {
            if used[r] {
                let acc = self.rref[r]
                    .iter()
                    .zip(&x)
                    .fold(0u64, |acc, (&m, &v)| (acc + m * v) % p);
                if acc != z[r] {
                    return None;
                }
            } else if z[r] != 0 {
                return None;
            }
        }
        Some(x)
    }
}

/// Basis of the kernel of M (rows x cols) over F_p, as column vectors.
pub(crate) fn kernel_basis(p: u64, matrix: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
    let rows = matrix.len();
    let cols = if rows == 0 { 0 } else { matrix[0].len() };
    let mut m = matrix;
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| m[i][c] % p != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = inv_mod(m[r][c], p);
        for j in 0..cols {
            m[r][j] = m[r][j] * inv % p;
        }
        for i in 0..rows {
            if i != r && m[i][c] % p != 0 {
                let f = m[i][c] % p;
                for j in 0..cols {
                    m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
        if r == rows {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for &(pr, pc) in &pivots {
            let val = m[pr][free] % p;
            v[pc] = (p - val) % p;
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solver_recovers_solutions() {
        // M over F_5: columns span a 2-dim subspace of F_5^3.
        let m = vec![vec![1, 2], vec![0, 1], vec![3, 0]];
        let s = Solver::new(5, m);
        // x = (2, 3): y = (2+6, 3, 6) = (3, 3, 1) mod 5.
        assert_eq!(s.solve(&[3, 3, 1]), Some(vec![2, 3]));
        assert_eq!(s.solve(&[1, 0, 0]), None);
    }

    #[test]
    fn kernel_of_singular_map() {
        // M = [[1,1],[2,2]] over F_3 has kernel spanned by (1,2).
        let b = kernel_basis(3, vec![vec![1, 1], vec![2, 2]]);
        assert_eq!(b, vec![vec![2, 1]]);
    }
}
