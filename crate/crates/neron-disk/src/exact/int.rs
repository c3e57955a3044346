//! Integer matrices: Smith normal form with unimodular transforms,
//! determinants, saturated kernels.

use super::{CycloScalar, Matrix, Rat};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = if r > 0 { rows[0].len() } else { 0 };
        assert!(rows.iter().all(|row| row.len() == c));
        IntMatrix {
            rows: r,
            cols: c,
            data: rows
                .iter()
                .flatten()
                .map(|&v| BigInt::from(v))
                .collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn transpose(&self) -> Self {
        IntMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out.get(r, c) + a * other.get(k, c);
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) + other.get(r, c))
    }

    pub fn sub(&self, other: &Self) -> Self {
        IntMatrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) - other.get(r, c))
    }

    pub fn neg(&self) -> Self {
        IntMatrix::from_fn(self.rows, self.cols, |r, c| -self.get(r, c))
    }

    pub fn pow(&self, k: u32) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn is_skew(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| self.get(r, c) == &(-self.get(c, r)))
            })
    }

    pub fn to_rational(&self) -> Matrix<Rat> {
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            BigRational::from_integer(self.get(r, c).clone())
        })
    }

    pub fn to_cyclo(&self) -> Matrix<CycloScalar> {
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            CycloScalar::from_rational(BigRational::from_integer(self.get(r, c).clone()))
        })
    }

    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        // Bareiss fraction-free elimination.
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|r| (0..n).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let swap = (k + 1..n).find(|&r| !m[r][k].is_zero());
                match swap {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                    m[i][j] = v;
                }
            }
            prev = m[k][k].clone();
        }
        sign * m[n - 1][n - 1].clone()
    }

    /// Inverse of a unimodular matrix, exact and integral.
    pub fn inverse_unimodular(&self) -> Option<IntMatrix> {
        let d = self.det();
        if !(d.clone().abs().is_one()) {
            return None;
        }
        let inv = self.to_rational().inverse()?;
        Some(IntMatrix::from_fn(self.rows, self.cols, |r, c| {
            let v = inv.get(r, c);
            assert!(v.denom().is_one());
            v.numer().clone()
        }))
    }

    /// Saturated integer kernel basis (columns), via Smith normal form.
    pub fn kernel_saturated(&self) -> IntMatrix {
        let snf = self.smith_normal_form();
        let r = (0..self.rows.min(self.cols))
            .take_while(|&i| !snf.d.get(i, i).is_zero())
            .count();
        // A = U^{-1} D V^{-1}; kernel = V * span(e_i : column i of D is zero).
        let mut cols: Vec<usize> = (r..self.cols).collect();
        cols.sort_unstable();
        IntMatrix::from_fn(self.cols, cols.len(), |row, j| {
            snf.v.get(row, cols[j]).clone()
        })
    }

    pub fn smith_normal_form(&self) -> SmithNormalForm {
        let mut d = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut v = IntMatrix::identity(self.cols);
        let n = self.rows.min(self.cols);

        let mut t = 0;
        while t < n {
            if !reduce_pivot(&mut d, &mut u, &mut v, t) {
                break; // remaining submatrix is zero
            }
            t += 1;
        }

        // Sign-normalize, then repair divisor-chain violations; a repair
        // re-runs the pivot reduction, so iterate until stable.
        loop {
            for i in 0..n {
                if d.get(i, i).is_negative() {
                    for c in 0..d.cols {
                        let x = -d.get(i, c);
                        d.set(i, c, x);
                    }
                    for c in 0..u.cols {
                        let x = -u.get(i, c);
                        u.set(i, c, x);
                    }
                }
            }
            let violation = (0..n.saturating_sub(1)).find(|&i| {
                let a = d.get(i, i);
                let b = d.get(i + 1, i + 1);
                !b.is_zero() && (a.is_zero() || !(b % a).is_zero())
            });
            let Some(i) = violation else { break };
            // Move d_{i+1} into column i and re-reduce from row i.
            for r in 0..d.rows {
                let x = d.get(r, i) + d.get(r, i + 1);
                d.set(r, i, x);
            }
            for r in 0..v.rows {
                let x = v.get(r, i) + v.get(r, i + 1);
                v.set(r, i, x);
            }
            let mut t = i;
            while t < n {
                if !reduce_pivot(&mut d, &mut u, &mut v, t) {
                    break;
                }
                t += 1;
            }
        }

        debug_assert_eq!(u.mul(self).mul(&v), d);
        SmithNormalForm { u, d, v }
    }
}

/// Clears row t and column t below/right of the pivot; returns false if the
/// trailing submatrix is entirely zero.
fn reduce_pivot(d: &mut IntMatrix, u: &mut IntMatrix, v: &mut IntMatrix, t: usize) -> bool {
    loop {
        // Smallest nonzero entry in the trailing submatrix.
        let mut pivot: Option<(usize, usize)> = None;
        for r in t..d.rows {
            for c in t..d.cols {
                if d.get(r, c).is_zero() {
                    continue;
                }
                let better = match &pivot {
                    None => true,
                    Some((pr, pc)) => d.get(r, c).abs() < d.get(*pr, *pc).abs(),
                };
                if better {
                    pivot = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = pivot else { return false };
        if pr != t {
            swap_rows(d, t, pr);
            swap_rows(u, t, pr);
        }
        if pc != t {
            swap_cols(d, t, pc);
            swap_cols(v, t, pc);
        }
        let mut clean = true;
        for r in t + 1..d.rows {
            let q = div_round(d.get(r, t), d.get(t, t));
            if !q.is_zero() {
                row_sub(d, r, t, &q);
                row_sub(u, r, t, &q);
            }
            if !d.get(r, t).is_zero() {
                clean = false;
            }
        }
        for c in t + 1..d.cols {
            let q = div_round(d.get(t, c), d.get(t, t));
            if !q.is_zero() {
                col_sub(d, c, t, &q);
                col_sub(v, c, t, &q);
            }
            if !d.get(t, c).is_zero() {
                clean = false;
            }
        }
        if clean {
            return true;
        }
    }
}

fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    // Round a/b to the nearest integer so remainders shrink.
    let two = BigInt::from(2);
    let (q, r) = num_integer::Integer::div_rem(a, b);
    if &r.clone().abs() * &two > b.clone().abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

fn swap_rows(m: &mut IntMatrix, a: usize, b: usize) {
    for c in 0..m.cols {
        let x = m.get(a, c).clone();
        let y = m.get(b, c).clone();
        m.set(a, c, y);
        m.set(b, c, x);
    }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    for r in 0..m.rows {
        let x = m.get(r, a).clone();
        let y = m.get(r, b).clone();
        m.set(r, a, y);
        m.set(r, b, x);
    }
}

/// row a -= q * row b
fn row_sub(m: &mut IntMatrix, a: usize, b: usize, q: &BigInt) {
    for c in 0..m.cols {
        let x = m.get(a, c) - q * m.get(b, c);
        m.set(a, c, x);
    }
}

/// col a -= q * col b
fn col_sub(m: &mut IntMatrix, a: usize, b: usize, q: &BigInt) {
    for r in 0..m.rows {
        let x = m.get(r, a) - q * m.get(r, b);
        m.set(r, a, x);
    }
}

/// `u * a * v = d` with `d` diagonal, `d_i | d_{i+1}`, and `u`, `v`
/// unimodular.
pub struct SmithNormalForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithNormalForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d.get(i, i).clone()).collect()
    }

    /// Nontrivial invariant factors (> 1) of the cokernel torsion.
    pub fn torsion_factors(&self) -> Vec<BigInt> {
        self.diagonal()
            .into_iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .collect()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn diag_of(m: &IntMatrix) -> Vec<i64> {
        let snf = m.smith_normal_form();
        snf.diagonal()
            .iter()
            .map(|d| d.to_string().parse().unwrap())
            .collect()
    }

    #[test]
    fn snf_identity() {
        let m = IntMatrix::identity(2);
        assert_eq!(diag_of(&m), vec![1, 1]);
    }

    #[test]
    fn snf_nilpotent_block() {
        // Hand row-reduction gives diag(1, 0).
        let m = IntMatrix::from_rows_i64(&[vec![0, 1], vec![0, 0]]);
        assert_eq!(diag_of(&m), vec![1, 0]);
    }

    #[test]
    fn snf_divisor_chain_normalization() {
        // diag(2, 3) normalizes to diag(1, 6).
        let m = IntMatrix::from_rows_i64(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(diag_of(&m), vec![1, 6]);
    }

    #[test]
    fn kernel_saturated_shear() {
        let m = IntMatrix::from_rows_i64(&[vec![0, 1], vec![0, 0]]);
        let k = m.kernel_saturated();
        assert_eq!(k.cols(), 1);
        assert!(m.mul(&k).is_zero());
        // Kernel generator is primitive: gcd of entries is 1.
        let g = num_integer::gcd(k.get(0, 0).clone(), k.get(1, 0).clone());
        assert!(g.is_one());
    }

    proptest! {
        #[test]
        fn snf_properties(entries in prop::collection::vec(-6i64..7, 12)) {
            let a = IntMatrix::from_fn(3, 4, |r, c| BigInt::from(entries[r * 4 + c]));
            let snf = a.smith_normal_form();
            prop_assert_eq!(snf.u.mul(&a).mul(&snf.v), snf.d.clone());
            prop_assert!(snf.u.det().abs().is_one());
            prop_assert!(snf.v.det().abs().is_one());
            let diag = snf.diagonal();
            for w in diag.windows(2) {
                if !w[1].is_zero() {
                    prop_assert!(!w[0].is_zero());
                    prop_assert!((&w[1] % &w[0]).is_zero());
                }
            }
            // Off-diagonal entries vanish.
            for r in 0..3 {
                for c in 0..4 {
                    if r != c {
                        prop_assert!(snf.d.get(r, c).is_zero());
                    }
                }
            }
        }
    }
}
