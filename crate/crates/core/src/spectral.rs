//! Spectra of `E(Z_n)`: numeric eigenvalues, exact characteristic
//! polynomials and nullity, energy, and the closed forms known for
//! `p^m`, `p^{m1} q^{m2}`, and products of three or four distinct primes.

use crate::eigen::{symmetric_eigenvalues, Spectrum, DEFAULT_MAX_SWEEPS};
use crate::error::Result;
use crate::exact;
use crate::graph::IdealGraph;
use crate::poly::IntPolynomial;
use crate::ring::FactoredInteger;

/// Comparison slack for the hyperenergetic test.
pub const ENERGY_GUARD: f64 = 1e-9;

/// `det(λI - A)` of the graph, exactly.
pub fn char_poly_exact(g: &IdealGraph) -> Result<IntPolynomial> {
    exact::char_poly(g.adjacency(), exact::DEFAULT_EXACT_CAP)
}

pub fn char_poly_exact_capped(g: &IdealGraph, cap: usize) -> Result<IntPolynomial> {
    exact::char_poly(g.adjacency(), cap)
}

/// Numeric spectrum; eigenvalues closer than `tol` share an entry.
pub fn eigenvalues_numeric(g: &IdealGraph, tol: f64) -> Result<Spectrum> {
    let values = symmetric_eigenvalues(&g.adjacency().to_f64_rows(), DEFAULT_MAX_SWEEPS)?;
    Ok(Spectrum::from_values(&values, tol))
}

/// `Σ m · |λ|`.
pub fn energy(s: &Spectrum) -> f64 {
    s.entries
        .iter()
        .map(|e| e.multiplicity as f64 * e.value.abs())
        .sum()
}

/// Energy strictly above that of `K_N`, which is `2(N - 1)`.
pub fn is_hyperenergetic_spectrum(s: &Spectrum) -> bool {
    let n = s.total();
    let baseline = 2.0 * n.saturating_sub(1) as f64;
    energy(s) > baseline + ENERGY_GUARD
}

pub fn is_hyperenergetic(g: &IdealGraph) -> Result<bool> {
    let s = eigenvalues_numeric(g, crate::eigen::DEFAULT_CLUSTER_TOL)?;
    Ok(is_hyperenergetic_spectrum(&s))
}

/// Multiplicity of eigenvalue 0, from the exact rank of the adjacency matrix.
pub fn nullity_exact(g: &IdealGraph) -> usize {
    exact::nullity(g.adjacency())
}

/// Whether 0 is an eigenvalue: false exactly when `n = p^m` with `m > 2`
/// or `n` is squarefree.
pub fn zero_eigenvalue_predicted(f: &FactoredInteger) -> bool {
    let ms = f.exponents();
    let nonsingular = (ms.len() == 1 && ms[0] > 2) || f.is_squarefree();
    !nonsingular
}

/// `λ³ + (2 - m1m2)λ² + [(1 - m1m2)(m1 + m2) - m1m2]λ - m1²m2²`.
pub fn two_prime_cubic(m1: u32, m2: u32) -> IntPolynomial {
    let (a, b) = (i64::from(m1), i64::from(m2));
    let p = a * b;
    IntPolynomial::from_i64(&[-(p * p), (1 - p) * (a + b) - p, 2 - p, 1])
}

/// Closed-form characteristic polynomial (`det(λI - A)`) when `n` belongs to
/// one of the covered families.
pub fn closed_form_charpoly(f: &FactoredInteger) -> Option<IntPolynomial> {
    let ms = f.exponents();
    let plus_one = IntPolynomial::linear(-1);
    match ms {
        [m] => {
            let order = *m as i64 - 1;
            Some(&IntPolynomial::linear(order - 1) * &plus_one.pow(order as u32 - 1))
        }
        [m1, m2] => {
            let lam = IntPolynomial::x().pow(m1 + m2 - 2);
            let cubic = two_prime_cubic(*m1, *m2);
            let e = (m1 * m2) as i64 - 2;
            let body = if e >= 0 {
                &plus_one.pow(e as u32) * &cubic
            } else {
                cubic.div_exact(&plus_one).ok()?
            };
            Some(&lam * &body)
        }
        [1, 1, 1] => {
            let a = IntPolynomial::from_i64(&[-1, -2, 1]);
            let b = IntPolynomial::from_i64(&[-1, 1, 1]);
            Some(&a * &b.pow(2))
        }
        [1, 1, 1, 1] => {
            let octic = IntPolynomial::from_i64(&[-1, 9, -26, 29, 0, -29, 26, -9, 1]);
            let q = IntPolynomial::from_i64(&[1, 3, 1]);
            Some(&octic * &q.pow(3))
        }
        _ => None,
    }
}

/// Known spectrum for the covered families, or `None` ("not covered").
pub fn closed_form_spectrum(f: &FactoredInteger) -> Option<Spectrum> {
    let tol = 1e-9;
    let s5 = 5f64.sqrt();
    let parts: Vec<(f64, i64, Option<String>)> = match f.exponents() {
        [m] => {
            let order = i64::from(*m) - 1;
            if order == 1 {
                vec![(0.0, 1, Some("0".into()))]
            } else {
                vec![
                    ((order - 1) as f64, 1, Some(format!("{}", order - 1))),
                    (-1.0, order - 1, Some("-1".into())),
                ]
            }
        }
        [m1, m2] if m1 == m2 && *m1 > 1 => {
            let m = i64::from(*m1);
            let k = m * m + m - 2;
            let disc = k * k + 4 * m * m * m;
            let root = (disc as f64).sqrt();
            vec![
                (
                    (k as f64 + root) / 2.0,
                    1,
                    Some(half_root_symbol(k, disc, '+')),
                ),
                (0.0, 2 * m - 2, Some("0".into())),
                (-1.0, m * m - 2, Some("-1".into())),
                (
                    (k as f64 - root) / 2.0,
                    1,
                    Some(half_root_symbol(k, disc, '-')),
                ),
                (-(m as f64), 1, Some(format!("-{m}"))),
            ]
        }
        [m1, m2] => {
            let (a, b) = (i64::from(*m1), i64::from(*m2));
            let mut parts: Vec<(f64, i64, Option<String>)> =
                cubic_roots(&two_prime_cubic(*m1, *m2))
                    .into_iter()
                    .map(|r| (r, 1, None))
                    .collect();
            parts.push((0.0, a + b - 2, Some("0".into())));
            parts.push((-1.0, a * b - 2, Some("-1".into())));
            parts
        }
        [1, 1, 1] => {
            let s2 = 2f64.sqrt();
            vec![
                (1.0 + s2, 1, Some("1+√2".into())),
                ((-1.0 + s5) / 2.0, 2, Some("(-1+√5)/2".into())),
                (1.0 - s2, 1, Some("1-√2".into())),
                ((-1.0 - s5) / 2.0, 2, Some("(-1-√5)/2".into())),
            ]
        }
        [1, 1, 1, 1] => {
            let s21 = 21f64.sqrt();
            vec![
                ((5.0 + s21) / 2.0, 1, Some("(5+√21)/2".into())),
                (1.0, 5, Some("1".into())),
                ((5.0 - s21) / 2.0, 1, Some("(5-√21)/2".into())),
                ((-3.0 + s5) / 2.0, 3, Some("(-3+√5)/2".into())),
                (-1.0, 1, Some("-1".into())),
                ((-3.0 - s5) / 2.0, 3, Some("(-3-√5)/2".into())),
            ]
        }
        _ => return None,
    };
    let borrowed: Vec<(f64, i64, Option<&str>)> = parts
        .iter()
        .map(|(v, m, s)| (*v, *m, s.as_deref()))
        .collect();
    Spectrum::from_signed(&borrowed, tol).ok()
}

/// `(k ± √disc) / 2` with square factors pulled out of the radical.
fn half_root_symbol(k: i64, disc: i64, sign: char) -> String {
    let (mut s, mut d) = (1i64, disc);
    let mut f = 2i64;
    while f * f <= d {
        while d % (f * f) == 0 {
            d /= f * f;
            s *= f;
        }
        f += 1;
    }
    if d == 1 {
        let num = if sign == '+' { k + s } else { k - s };
        return if num % 2 == 0 {
            (num / 2).to_string()
        } else {
            format!("{num}/2")
        };
    }
    let radical = |coef: i64| {
        if coef == 1 {
            format!("√{d}")
        } else {
            format!("{coef}√{d}")
        }
    };
    if k % 2 == 0 && s % 2 == 0 {
        format!("{}{sign}{}", k / 2, radical(s / 2))
    } else {
        format!("({k}{sign}{})/2", radical(s))
    }
}

/// Energy from the closed form, when covered.
pub fn closed_form_energy(f: &FactoredInteger) -> Option<f64> {
    closed_form_spectrum(f).map(|s| energy(&s))
}

/// Real roots (with repetition, descending) of a monic integer cubic with
/// three real roots. Integer roots are split off exactly; an irreducible
/// cubic is bracketed between its critical points and refined by bisection
/// and Newton steps to `1e-12`.
pub fn cubic_roots(p: &IntPolynomial) -> Vec<f64> {
    use num_bigint::BigInt;
    use num_traits::{Signed, ToPrimitive, Zero};
    let mut rest = p.clone();
    let mut roots = Vec::new();
    // monic: rational roots are integer divisors of the constant term
    loop {
        if rest.degree() == 0 {
            break;
        }
        let c0 = rest.coeff(0);
        let found = if c0.is_zero() {
            Some(0i64)
        } else {
            let bound = c0.abs().to_i64().unwrap_or(i64::MAX);
            let mut hit = None;
            let mut d = 1i64;
            while d * d <= bound {
                if bound % d == 0 {
                    for cand in [d, -d, bound / d, -(bound / d)] {
                        if rest.eval(&BigInt::from(cand)).is_zero() {
                            hit = Some(cand);
                            break;
                        }
                    }
                }
                if hit.is_some() {
                    break;
                }
                d += 1;
            }
            hit
        };
        match found {
            Some(r) => {
                roots.push(r as f64);
                rest = rest
                    .div_exact(&IntPolynomial::linear(r))
                    .expect("root divides");
            }
            None => break,
        }
    }
    match rest.degree() {
        0 => {}
        1 => {
            let (a, b) = (
                rest.coeff(1).to_f64().unwrap(),
                rest.coeff(0).to_f64().unwrap(),
            );
            roots.push(-b / a);
        }
        2 => {
            let (a, b, c) = (
                rest.coeff(2).to_f64().unwrap(),
                rest.coeff(1).to_f64().unwrap(),
                rest.coeff(0).to_f64().unwrap(),
            );
            let disc = (b * b - 4.0 * a * c).max(0.0).sqrt();
            // avoid cancellation in the smaller-magnitude root
            let q = -0.5 * (b + b.signum() * disc);
            if q == 0.0 {
                roots.extend([0.0, 0.0]);
            } else {
                roots.extend([q / a, c / q]);
            }
        }
        _ => roots.extend(irreducible_cubic_roots(&rest)),
    }
    roots.sort_by(|x, y| y.total_cmp(x));
    roots
}

fn irreducible_cubic_roots(p: &IntPolynomial) -> Vec<f64> {
    use num_traits::ToPrimitive;
    let c: Vec<f64> = p.coeffs().iter().map(|x| x.to_f64().unwrap()).collect();
    let (a2, a1, a0) = (c[2] / c[3], c[1] / c[3], c[0] / c[3]);
    let f = |x: f64| ((x + a2) * x + a1) * x + a0;
    let df = |x: f64| (3.0 * x + 2.0 * a2) * x + a1;
    // f' = 3x² + 2 a2 x + a1
    let disc = (4.0 * a2 * a2 - 12.0 * a1).max(0.0).sqrt();
    let lo_crit = (-2.0 * a2 - disc) / 6.0;
    let hi_crit = (-2.0 * a2 + disc) / 6.0;
    let bound = 1.0 + a2.abs().max(a1.abs()).max(a0.abs());
    let brackets = [(-bound, lo_crit), (lo_crit, hi_crit), (hi_crit, bound)];
    brackets
        .iter()
        .map(|&(lo, hi)| {
            let (mut lo, mut hi) = (lo, hi);
            if f(lo) > 0.0 {
                std::mem::swap(&mut lo, &mut hi);
            }
            // f(lo) <= 0 <= f(hi)
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if (hi - lo).abs() < 1e-6 {
                    break;
                }
                if f(mid) <= 0.0 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let mut x = 0.5 * (lo + hi);
            for _ in 0..50 {
                let d = df(x);
                if d == 0.0 {
                    break;
                }
                let step = f(x) / d;
                x -= step;
                if step.abs() < 1e-15 * x.abs().max(1.0) {
                    break;
                }
            }
            x
        })
        .collect()
}
