//! Nilpotent logarithm/exponential and quasi-unipotent order detection.

use super::{cyclotomic_polynomial, euler_phi, ExactError, IntMatrix, Matrix, Scalar};
use num_integer::Integer;
use num_traits::Zero;

/// `log U = Σ_{k≥1} (−1)^{k+1} (U−I)^k / k`, finite because `U − I` is
/// nilpotent.
pub fn nilpotent_log<S: Scalar>(u: &Matrix<S>) -> Result<Matrix<S>, ExactError> {
    let n = u.rows();
    assert_eq!(n, u.cols());
    let a = u.sub(&Matrix::identity(n));
    if !a.pow(n as u32).is_zero() {
        return Err(ExactError::NotUnipotent);
    }
    let mut out = Matrix::zero(n, n);
    let mut power = Matrix::identity(n);
    for k in 1..=n as i64 {
        power = power.mul(&a);
        if power.is_zero() {
            break;
        }
        let coeff = if k % 2 == 1 {
            S::from_i64(k).inv().unwrap()
        } else {
            S::from_i64(k).inv().unwrap().neg()
        };
        out = out.add(&power.scale(&coeff));
    }
    Ok(out)
}

/// `exp N = Σ N^k / k!` for nilpotent `N`.
pub fn nilpotent_exp<S: Scalar>(nil: &Matrix<S>) -> Result<Matrix<S>, ExactError> {
    let n = nil.rows();
    assert_eq!(n, nil.cols());
    if !nil.pow(n as u32).is_zero() {
        return Err(ExactError::NotUnipotent);
    }
    let mut out = Matrix::identity(n);
    let mut power = Matrix::identity(n);
    let mut factorial: i64 = 1;
    for k in 1..=n as i64 {
        power = power.mul(nil);
        if power.is_zero() {
            break;
        }
        factorial *= k;
        out = out.add(&power.scale(&S::from_i64(factorial).inv().unwrap()));
    }
    Ok(out)
}

/// Smallest `m` with `(T^m − I)^n = 0`.
///
/// With an explicit bound, scans `1..=bound`. Otherwise the candidate orders
/// are read off from the cyclotomic factors of the characteristic polynomial:
/// only `Φ_d` with `φ(d) ≤ n` can divide it, and `det Φ_d(T) = 0` detects the
/// divisor exactly.
pub fn quasi_unipotent_order(t: &IntMatrix, bound: Option<u64>) -> Result<u32, ExactError> {
    let n = t.rows() as u32;
    assert_eq!(t.rows(), t.cols());
    if n == 0 {
        return Ok(1);
    }
    if let Some(b) = bound {
        for m in 1..=b {
            if is_order(t, m as u32) {
                return Ok(m as u32);
            }
        }
        return Err(ExactError::NotQuasiUnipotent(b));
    }
    // phi(d) >= sqrt(d/2), so phi(d) <= n forces d <= 2 n^2 + 1.
    let cap = 2 * n * n + 1;
    let mut m: u32 = 1;
    for d in 1..=cap {
        if euler_phi(d) > n {
            continue;
        }
        if eval_cyclotomic_det(t, d).is_zero() {
            m = m.lcm(&d);
        }
    }
    if is_order(t, m) {
        Ok(m)
    } else {
        Err(ExactError::NotQuasiUnipotent(cap as u64))
    }
}

fn is_order(t: &IntMatrix, m: u32) -> bool {
    let n = t.rows() as u32;
    let tm = t.pow(m);
    tm.sub(&IntMatrix::identity(t.rows())).pow(n).is_zero()
}

fn eval_cyclotomic_det(t: &IntMatrix, d: u32) -> num_bigint::BigInt {
    let coeffs = cyclotomic_polynomial(d);
    // Horner evaluation of Phi_d(T).
    let n = t.rows();
    let mut acc = IntMatrix::zero(n, n);
    for c in coeffs.iter().rev() {
        acc = acc.mul(t);
        for i in 0..n {
            let v = acc.get(i, i) + c;
            acc.set(i, i, v);
        }
    }
    acc.det()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int, Rat};
    use proptest::prelude::*;

    fn qm(rows: Vec<Vec<i64>>) -> Matrix<Rat> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(rat_int).collect())
                .collect(),
        )
    }

    #[test]
    fn log_identity_is_zero() {
        let log = nilpotent_log(&Matrix::<Rat>::identity(3)).unwrap();
        assert!(log.is_zero());
    }

    #[test]
    fn log_single_block() {
        let u = qm(vec![vec![1, 1], vec![0, 1]]);
        let log = nilpotent_log(&u).unwrap();
        assert_eq!(log, qm(vec![vec![0, 1], vec![0, 0]]));
    }

    #[test]
    fn log_three_block_has_half_correction() {
        let u = qm(vec![vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]]);
        let log = nilpotent_log(&u).unwrap();
        let expected = Matrix::from_rows(vec![
            vec![rat_int(0), rat_int(1), rat(-1, 2)],
            vec![rat_int(0), rat_int(0), rat_int(1)],
            vec![rat_int(0), rat_int(0), rat_int(0)],
        ]);
        assert_eq!(log, expected);
        assert_eq!(nilpotent_exp(&log).unwrap(), u);
    }

    #[test]
    fn log_rejects_non_unipotent() {
        let u = qm(vec![vec![2, 0], vec![0, 1]]);
        assert_eq!(nilpotent_log(&u), Err(ExactError::NotUnipotent));
    }

    #[test]
    fn orders() {
        let t = IntMatrix::from_rows_i64(&[vec![1, 1], vec![0, 1]]);
        assert_eq!(quasi_unipotent_order(&t, None).unwrap(), 1);
        let t = IntMatrix::from_rows_i64(&[vec![-1, 0], vec![0, -1]]);
        assert_eq!(quasi_unipotent_order(&t, None).unwrap(), 2);
        let t = IntMatrix::from_rows_i64(&[vec![-1, 1], vec![0, -1]]);
        assert_eq!(quasi_unipotent_order(&t, None).unwrap(), 2);
        // Order 6 rotation.
        let t = IntMatrix::from_rows_i64(&[vec![1, -1], vec![1, 0]]);
        assert_eq!(quasi_unipotent_order(&t, None).unwrap(), 6);
        // Not quasi-unipotent.
        let t = IntMatrix::from_rows_i64(&[vec![2, 1], vec![1, 1]]);
        assert!(quasi_unipotent_order(&t, None).is_err());
        assert!(quasi_unipotent_order(&t, Some(20)).is_err());
    }

    proptest! {
        #[test]
        fn exp_log_roundtrip(a in -3i64..4, b in -3i64..4, c in -3i64..4) {
            // Random 3x3 strictly-upper unipotent.
            let u = Matrix::from_rows(vec![
                vec![rat_int(1), rat_int(a), rat_int(b)],
                vec![rat_int(0), rat_int(1), rat_int(c)],
                vec![rat_int(0), rat_int(0), rat_int(1)],
            ]);
            let log = nilpotent_log(&u).unwrap();
            prop_assert_eq!(nilpotent_exp(&log).unwrap(), u);
        }
    }
}
