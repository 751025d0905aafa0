//! Small dense real matrices and the closed-form circulant `C(a, b, n)`
//! (diagonal `a`, every other entry `b`).

use crate::error::{Error, Result};

/// Row-major square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    order: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(order: usize) -> Self {
        DenseMatrix {
            order,
            data: vec![0.0; order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::Invalid("matrix must be square".into()));
        }
        Ok(DenseMatrix {
            order,
            data: rows.concat(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }

    pub fn matmul(&self, other: &Self) -> Self {
        let n = self.order;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for l in 0..n {
                let a = self[(i, l)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * other[(l, j)];
                }
            }
        }
        out
    }

    /// Determinant by partial-pivoting LU.
    pub fn determinant(&self) -> f64 {
        let n = self.order;
        let mut a = self.data.clone();
        let mut det = 1.0;
        for k in 0..n {
            let p = (k..n)
                .max_by(|&i, &j| a[i * n + k].abs().total_cmp(&a[j * n + k].abs()))
                .unwrap_or(k);
            if a[p * n + k] == 0.0 {
                return 0.0;
            }
            if p != k {
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                det = -det;
            }
            let pivot = a[k * n + k];
            det *= pivot;
            for i in k + 1..n {
                let f = a[i * n + k] / pivot;
                for j in k..n {
                    a[i * n + j] -= f * a[k * n + j];
                }
            }
        }
        det
    }
}

impl std::ops::Index<(usize, usize)> for DenseMatrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.order + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.order + j]
    }
}

pub fn circulant(a: f64, b: f64, n: usize) -> DenseMatrix {
    let mut m = DenseMatrix {
        order: n,
        data: vec![b; n * n],
    };
    for i in 0..n {
        m[(i, i)] = a;
    }
    m
}

/// `det C(a, b, n) = (a + (n - 1) b) (a - b)^{n - 1}`.
pub fn circulant_det(a: f64, b: f64, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::Invalid("circulant order must be at least 1".into()));
    }
    Ok((a + (n as f64 - 1.0) * b) * (a - b).powi(n as i32 - 1))
}

/// `C(a, b, n)^{-1} = C(δ_{n-1} / δ, Δ_{n-1} / δ, n)` with
/// `δ_{n-1} = (a + (n - 2) b)(a - b)^{n - 2}` and `Δ_{n-1} = -b (a - b)^{n - 2}`.
pub fn circulant_inverse(a: f64, b: f64, n: usize) -> Result<DenseMatrix> {
    let delta = circulant_det(a, b, n)?;
    if delta == 0.0 || !delta.is_finite() {
        return Err(Error::Singular);
    }
    if n == 1 {
        return Ok(circulant(1.0 / a, 0.0, 1));
    }
    let tail = (a - b).powi(n as i32 - 2);
    let diag = (a + (n as f64 - 2.0) * b) * tail;
    let off = -b * tail;
    Ok(circulant(diag / delta, off / delta, n))
}

/// `det [[M, N], [P, Q]] = det Q · det(M - N Q^{-1} P)` for invertible `Q`.
/// `m` is `p × p`, `q` is `r × r`; `n` is `p × r` and `pp` is `r × p`, row-major.
pub fn schur_det(m: &DenseMatrix, n: &[f64], pp: &[f64], q: &DenseMatrix) -> Result<f64> {
    let (p, r) = (m.order(), q.order());
    if n.len() != p * r || pp.len() != r * p {
        return Err(Error::Invalid("block shapes do not match".into()));
    }
    let q_inv = inverse(q)?;
    let mut s = m.clone();
    for i in 0..p {
        for j in 0..p {
            let mut acc = 0.0;
            for x in 0..r {
                for y in 0..r {
                    acc += n[i * r + x] * q_inv[(x, y)] * pp[y * p + j];
                }
            }
            s[(i, j)] -= acc;
        }
    }
    Ok(q.determinant() * s.determinant())
}

/// Gauss–Jordan inverse with partial pivoting.
pub fn inverse(m: &DenseMatrix) -> Result<DenseMatrix> {
    let n = m.order();
    let mut a = m.clone();
    let mut inv = DenseMatrix::identity(n);
    let scale = m.frobenius_norm().max(1.0);
    for k in 0..n {
        let p = (k..n)
            .max_by(|&i, &j| a[(i, k)].abs().total_cmp(&a[(j, k)].abs()))
            .unwrap_or(k);
        if a[(p, k)].abs() <= 1e-14 * scale {
            return Err(Error::Singular);
        }
        for j in 0..n {
            a.data.swap(k * n + j, p * n + j);
            inv.data.swap(k * n + j, p * n + j);
        }
        let pivot = a[(k, k)];
        for j in 0..n {
            a[(k, j)] /= pivot;
            inv[(k, j)] /= pivot;
        }
        for i in 0..n {
            if i == k {
                continue;
            }
            let f = a[(i, k)];
            if f == 0.0 {
                continue;
            }
            for j in 0..n {
                a[(i, j)] -= f * a[(k, j)];
                inv[(i, j)] -= f * inv[(k, j)];
            }
        }
    }
    Ok(inv)
}
