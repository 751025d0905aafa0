//! Exact integer linear algebra: characteristic polynomials, determinants,
//! rank, and the complement/join characteristic-polynomial identities.

use crate::error::{Error, Result};
use crate::graph::AdjacencyMatrix;
use crate::poly::IntPolynomial;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Default vertex limit for the exact characteristic polynomial.
pub const DEFAULT_EXACT_CAP: usize = 64;

/// `det(λI - A)` by Faddeev–LeVerrier over the integers.
///
/// `M_0 = 0`, `M_k = A M_{k-1} + c_{N-k+1} I`, `c_{N-k} = -tr(A M_k) / k`.
/// Every division is exact. Because `A` is 0/1 the product `A M` reduces to
/// row sums over neighbors.
pub fn char_poly(a: &AdjacencyMatrix, cap: usize) -> Result<IntPolynomial> {
    let n = a.order();
    if n > cap {
        return Err(Error::ExactCap { vertices: n, cap });
    }
    let nbrs: Vec<Vec<usize>> = (0..n).map(|i| a.neighbors(i).collect()).collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        // m <- A m + c_{n-k+1} I
        let mut next = vec![BigInt::zero(); n * n];
        for i in 0..n {
            let row = &mut next[i * n..(i + 1) * n];
            for &l in &nbrs[i] {
                for (dst, src) in row.iter_mut().zip(&m[l * n..(l + 1) * n]) {
                    *dst += src;
                }
            }
            row[i] += &coeffs[n - k + 1];
        }
        m = next;
        let mut trace = BigInt::zero();
        for i in 0..n {
            for &l in &nbrs[i] {
                trace += &m[l * n + i];
            }
        }
        coeffs[n - k] = -(trace / BigInt::from(k));
    }
    Ok(IntPolynomial::new(coeffs))
}

/// Bareiss fraction-free determinant; consumes the matrix.
pub fn det_bareiss(mut rows: Vec<Vec<BigInt>>) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if rows[k][k].is_zero() {
            match (k + 1..n).find(|&i| !rows[i][k].is_zero()) {
                Some(i) => {
                    rows.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&rows[i][j] * &rows[k][k] - &rows[i][k] * &rows[k][j]) / &prev;
                rows[i][j] = v;
            }
            rows[i][k] = BigInt::zero();
        }
        prev = rows[k][k].clone();
    }
    sign * &rows[n - 1][n - 1]
}

/// Rank over the rationals by fraction-free elimination with column pivoting
/// over the remaining rows.
pub fn rank_bareiss(mut rows: Vec<Vec<BigInt>>) -> usize {
    let n_rows = rows.len();
    let n_cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..n_cols {
        if rank == n_rows {
            break;
        }
        let Some(p) = (rank..n_rows).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        for i in rank + 1..n_rows {
            for j in col + 1..n_cols {
                let v = (&rows[i][j] * &rows[rank][col] - &rows[i][col] * &rows[rank][j]) / &prev;
                rows[i][j] = v;
            }
            rows[i][col] = BigInt::zero();
        }
        prev = rows[rank][col].clone();
        rank += 1;
    }
    rank
}

pub fn to_bigint_rows(a: &AdjacencyMatrix) -> Vec<Vec<BigInt>> {
    (0..a.order())
        .map(|i| {
            a.row(i)
                .iter()
                .map(|&b| BigInt::from(u8::from(b)))
                .collect()
        })
        .collect()
}

/// `N - rank(A)`, computed without floating point.
pub fn nullity(a: &AdjacencyMatrix) -> usize {
    a.order() - rank_bareiss(to_bigint_rows(a))
}

/// Characteristic polynomial of the complement of an `r`-regular graph on
/// `n` vertices: `(-1)^n (λ - n + r + 1) P_G(-λ - 1) / (λ + r + 1)`.
pub fn complement_charpoly_regular(p: &IntPolynomial, n: usize, r: usize) -> Result<IntPolynomial> {
    if p.degree() != n || p.leading() != BigInt::one() || r >= n.max(1) {
        return Err(Error::NotRegular);
    }
    let shift = IntPolynomial::linear(n as i64 - r as i64 - 1);
    let numerator = (&shift * &p.reflect_shift()).signed(n);
    numerator
        .div_exact(&IntPolynomial::linear(-(r as i64) - 1))
        .map_err(|_| Error::NotRegular)
}

/// Characteristic polynomial of `G1 ∨ G2` from the polynomials of `G1`,
/// `G2` and their complements:
/// `(-1)^{n2} P1(λ) Q2(-λ-1) + (-1)^{n1} P2(λ) Q1(-λ-1) - (-1)^{n1+n2} Q1(-λ-1) Q2(-λ-1)`.
pub fn join_charpoly(
    p1: &IntPolynomial,
    p2: &IntPolynomial,
    pc1: &IntPolynomial,
    pc2: &IntPolynomial,
) -> Result<IntPolynomial> {
    let (n1, n2) = (p1.degree(), p2.degree());
    if pc1.degree() != n1 || pc2.degree() != n2 {
        return Err(Error::Invalid(
            "complement polynomials must match the graph orders".into(),
        ));
    }
    let q1 = pc1.reflect_shift();
    let q2 = pc2.reflect_shift();
    let t1 = (p1 * &q2).signed(n2);
    let t2 = (p2 * &q1).signed(n1);
    let t3 = (&q1 * &q2).signed(n1 + n2);
    Ok(&(&t1 + &t2) - &t3)
}

/// Join polynomial computed from two explicit graphs.
pub fn join_charpoly_of(
    g1: &AdjacencyMatrix,
    g2: &AdjacencyMatrix,
    cap: usize,
) -> Result<IntPolynomial> {
    join_charpoly(
        &char_poly(g1, cap)?,
        &char_poly(g2, cap)?,
        &char_poly(&g1.complement(), cap)?,
        &char_poly(&g2.complement(), cap)?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn small_char_polys() {
        assert_eq!(
            char_poly(&AdjacencyMatrix::complete(2), 64).unwrap(),
            p(&[-1, 0, 1])
        );
        assert_eq!(
            char_poly(&AdjacencyMatrix::empty(3), 64).unwrap(),
            p(&[0, 0, 0, 1])
        );
        assert_eq!(char_poly(&AdjacencyMatrix::empty(0), 64).unwrap(), p(&[1]));
        // K_3: (λ - 2)(λ + 1)^2
        assert_eq!(
            char_poly(&AdjacencyMatrix::complete(3), 64).unwrap(),
            p(&[-2, -3, 0, 1])
        );
        // C_4: λ^2 (λ^2 - 4)
        assert_eq!(
            char_poly(&AdjacencyMatrix::cycle(4), 64).unwrap(),
            p(&[0, 0, -4, 0, 1])
        );
        assert!(matches!(
            char_poly(&AdjacencyMatrix::empty(5), 4),
            Err(Error::ExactCap { .. })
        ));
    }

    #[test]
    fn bareiss_det_and_rank() {
        let m = |r: &[&[i64]]| -> Vec<Vec<BigInt>> {
            r.iter()
                .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
                .collect()
        };
        assert_eq!(det_bareiss(m(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(
            det_bareiss(m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]])),
            BigInt::zero()
        );
        assert_eq!(
            det_bareiss(m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]])),
            BigInt::from(6)
        );
        assert_eq!(det_bareiss(m(&[&[1, 2], &[2, 4]])), BigInt::zero());
        assert_eq!(rank_bareiss(m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank_bareiss(m(&[&[0, 0, 1], &[0, 0, 2], &[1, 1, 0]])), 2);
        assert_eq!(nullity(&AdjacencyMatrix::empty(1)), 1);
        assert_eq!(nullity(&AdjacencyMatrix::complete_bipartite(2, 2)), 2);
    }

    #[test]
    fn complement_examples() {
        let k3 = char_poly(&AdjacencyMatrix::complete(3), 64).unwrap();
        assert_eq!(
            complement_charpoly_regular(&k3, 3, 2).unwrap(),
            p(&[0, 0, 0, 1])
        );
        let e2 = p(&[0, 0, 1]);
        assert_eq!(
            complement_charpoly_regular(&e2, 2, 0).unwrap(),
            p(&[-1, 0, 1])
        );
        let c4 = char_poly(&AdjacencyMatrix::cycle(4), 64).unwrap();
        assert_eq!(
            complement_charpoly_regular(&c4, 4, 2).unwrap(),
            p(&[-1, 0, 1]).pow(2)
        );
        // K_{1,2} is not regular: its polynomial λ^3 - 2λ fails exact division
        assert_eq!(
            complement_charpoly_regular(&p(&[0, -2, 0, 1]), 3, 1),
            Err(Error::NotRegular)
        );
        assert_eq!(
            complement_charpoly_regular(&k3, 4, 2),
            Err(Error::NotRegular)
        );
    }

    #[test]
    fn join_examples() {
        let k1 = p(&[0, 1]);
        assert_eq!(join_charpoly(&k1, &k1, &k1, &k1).unwrap(), p(&[-1, 0, 1]));

        let k3 = AdjacencyMatrix::complete(3);
        let k22 = AdjacencyMatrix::complete_bipartite(2, 2);
        let via_formula = join_charpoly_of(&k3, &k22, 64).unwrap();
        assert_eq!(via_formula, char_poly(&k3.join(&k22), 64).unwrap());
        // λ^2 (λ + 1)^2 (λ^3 - 2λ^2 - 16λ - 16)
        let expected = &(&p(&[0, 0, 1]) * &p(&[1, 1]).pow(2)) * &p(&[-16, -16, -2, 1]);
        assert_eq!(via_formula, expected);
    }
}
