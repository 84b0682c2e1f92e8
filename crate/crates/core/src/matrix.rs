//! Determinants over exact rationals (fraction-free elimination) and floats
//! (partial pivoting).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};

use crate::scalar::Scalar;

/// Bareiss fraction-free elimination over an integer matrix obtained by
/// clearing denominators column by column would change the value; instead we
/// run Bareiss directly on rationals, where every division is exact.
pub fn det_exact(mat: &[Vec<BigRational>]) -> BigRational {
    let n = mat.len();
    if n == 0 {
        return BigRational::one();
    }
    let mut a: Vec<Vec<BigRational>> = mat.to_vec();
    let mut sign = BigRational::one();
    let mut prev = BigRational::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigRational::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

pub fn det_f64(mat: &[Vec<f64>]) -> f64 {
    let n = mat.len();
    if n == 0 {
        return 1.0;
    }
    let mut a: Vec<Vec<f64>> = mat.to_vec();
    let mut det = 1.0;
    for k in 0..n {
        let (p, mx) = (k..n)
            .map(|r| (r, a[r][k].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        if mx == 0.0 {
            return 0.0;
        }
        if p != k {
            a.swap(k, p);
            det = -det;
        }
        det *= a[k][k];
        for i in k + 1..n {
            let f = a[i][k] / a[k][k];
            for j in k..n {
                a[i][j] -= f * a[k][j];
            }
        }
    }
    det
}

/// Determinant of a Scalar matrix: exact when every entry is exact,
/// float otherwise.
pub fn det_scalar(mat: &[Vec<Scalar>]) -> Scalar {
    let exact = mat
        .iter()
        .all(|row| row.iter().all(|s| s.is_exact()));
    if exact {
        let m: Vec<Vec<BigRational>> = mat
            .iter()
            .map(|row| row.iter().map(|s| s.as_exact().unwrap().clone()).collect())
            .collect();
        Scalar::Exact(det_exact(&m))
    } else {
        let m: Vec<Vec<f64>> = mat
            .iter()
            .map(|row| row.iter().map(|s| s.to_f64()).collect())
            .collect();
        Scalar::Approx(det_f64(&m))
    }
}

#[allow(dead_code)]
pub fn big_rational_from_i64(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        big_rational_from_i64(n, d)
    }

    #[test]
    fn exact_determinants() {
        assert_eq!(det_exact(&[]), q(1, 1));
        assert_eq!(det_exact(&[vec![q(3, 4)]]), q(3, 4));
        let m = vec![vec![q(1, 2), q(1, 3)], vec![q(1, 5), q(1, 7)]];
        assert_eq!(det_exact(&m), q(1, 14) - q(1, 15));
        // singular with a zero pivot requiring a swap
        let m = vec![
            vec![q(0, 1), q(1, 1), q(2, 1)],
            vec![q(1, 1), q(0, 1), q(1, 1)],
            vec![q(2, 1), q(1, 1), q(4, 1)],
        ];
        let expect = q(0, 1) * (q(0, 1) * q(4, 1) - q(1, 1) * q(1, 1))
            - q(1, 1) * (q(4, 1) - q(2, 1))
            + q(2, 1) * (q(1, 1) - q(0, 1));
        assert_eq!(det_exact(&m), expect);
    }

    #[test]
    fn float_matches_exact() {
        let m = vec![
            vec![q(1, 2), q(2, 3), q(3, 5)],
            vec![q(1, 7), q(5, 11), q(2, 13)],
            vec![q(7, 3), q(1, 17), q(9, 19)],
        ];
        let mf: Vec<Vec<f64>> = m
            .iter()
            .map(|r| r.iter().map(|x| num::ToPrimitive::to_f64(x).unwrap()).collect())
            .collect();
        let de = num::ToPrimitive::to_f64(&det_exact(&m)).unwrap();
        assert!((de - det_f64(&mf)).abs() < 1e-12);
    }
}
