//! Exact integer matrices and their characteristic polynomials.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::FamilyError;
use crate::poly::IntPolynomial;

/// Square matrix of exact integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(dim: usize) -> Self {
        IntMatrix {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            *m.get_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        IntMatrix {
            dim,
            entries: rows.iter().flatten().map(|&v| BigInt::from(v)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.entries[i * self.dim + j]
    }

    pub fn row_i64(&self, i: usize) -> Vec<i64> {
        use num_traits::ToPrimitive;
        (0..self.dim)
            .map(|j| self.get(i, j).to_i64().expect("entry out of i64 range"))
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                *t.get_mut(j, i) = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    *out.get_mut(i, j) += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        IntMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    /// Bottom-row companion matrix of a monic polynomial: the one-step
    /// shift on the first d-1 rows, with `-a_0, ..., -a_{d-1}` in the last
    /// row. This is the shape the action matrices of the curve systems
    /// take.
    pub fn companion(p: &IntPolynomial) -> Self {
        assert!(p.is_monic() && p.degree() >= 1);
        let d = p.degree();
        let mut m = Self::zero(d);
        for i in 0..d - 1 {
            *m.get_mut(i, i + 1) = BigInt::one();
        }
        for j in 0..d {
            *m.get_mut(d - 1, j) = -p.coeff(j);
        }
        m
    }

    /// Characteristic polynomial det(xI - M), exact and division-free
    /// (Berkowitz), returned in ascending coefficient order and monic.
    pub fn charpoly(&self) -> IntPolynomial {
        let n = self.dim;
        if n == 0 {
            return IntPolynomial::one();
        }
        // c holds det(xI - A_r) descending; starts with r = 1.
        let mut c: Vec<BigInt> = vec![BigInt::one(), -self.get(0, 0).clone()];
        for r in 2..=n {
            // A_r = [[A_{r-1}, S], [R, a]], Toeplitz column:
            // t_0 = 1, t_1 = -a, t_k = -(R . A_{r-1}^{k-2} . S).
            let mut t: Vec<BigInt> = Vec::with_capacity(r + 1);
            t.push(BigInt::one());
            t.push(-self.get(r - 1, r - 1).clone());
            let mut v: Vec<BigInt> = (0..r - 1).map(|i| self.get(i, r - 1).clone()).collect();
            for _k in 2..=r {
                let dot: BigInt = (0..r - 1).map(|j| self.get(r - 1, j) * &v[j]).sum();
                t.push(-dot);
                // v <- A_{r-1} v
                let mut nv = vec![BigInt::zero(); r - 1];
                for (i, nvi) in nv.iter_mut().enumerate() {
                    for (j, vj) in v.iter().enumerate() {
                        *nvi += self.get(i, j) * vj;
                    }
                }
                v = nv;
            }
            let mut next = vec![BigInt::zero(); r + 1];
            for (i, ni) in next.iter_mut().enumerate() {
                let jlo = i.saturating_sub(r);
                for (j, cj) in c.iter().enumerate().take(i + 1).skip(jlo) {
                    *ni += &t[i - j] * cj;
                }
            }
            c = next;
        }
        c.reverse();
        IntPolynomial::from_coeffs(c)
    }
}

/// The standard symplectic form on R^{2m}: J = [[0, I], [-I, 0]].
pub fn standard_j(half_dim: usize) -> IntMatrix {
    let mut j = IntMatrix::zero(2 * half_dim);
    for i in 0..half_dim {
        *j.get_mut(i, half_dim + i) = BigInt::one();
        *j.get_mut(half_dim + i, i) = -BigInt::one();
    }
    j
}

/// Exact test of `A J A^T = -J` with the standard block J. Errors on odd
/// dimension.
pub fn is_anti_symplectic(a: &IntMatrix) -> Result<bool, FamilyError> {
    if a.dim() % 2 != 0 {
        return Err(FamilyError::OddDimension(a.dim()));
    }
    let j = standard_j(a.dim() / 2);
    Ok(a.mul(&j).mul(&a.transpose()) == j.neg())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_of_companion() {
        let p = IntPolynomial::from_i64s(&[-1, -1, -1, 1]);
        let c = IntMatrix::companion(&p);
        assert_eq!(c.charpoly(), p);
        // Paper's 10x10 action matrix shape for f_{10,5}.
        let q = IntPolynomial::from_i64s(&[-1, 0, 0, -1, -1, -1, -1, -1, 0, 0, 1]);
        assert_eq!(IntMatrix::companion(&q).charpoly(), q);
    }

    #[test]
    fn charpoly_generic() {
        // [[2, 1], [1, 2]] -> x^2 - 4x + 3
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![1, 2]]);
        assert_eq!(m.charpoly(), IntPolynomial::from_i64s(&[3, -4, 1]));
        // Nilpotent 3x3 shift -> x^3.
        let m = IntMatrix::from_rows(&[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]);
        assert_eq!(m.charpoly(), IntPolynomial::from_i64s(&[0, 0, 0, 1]));
    }

    #[test]
    fn anti_symplectic_examples() {
        // diag(I, -I) is anti-symplectic.
        let mut d = IntMatrix::identity(4);
        *d.get_mut(2, 2) = BigInt::from(-1);
        *d.get_mut(3, 3) = BigInt::from(-1);
        assert!(is_anti_symplectic(&d).unwrap());
        // J itself is symplectic, not anti-symplectic.
        assert!(!is_anti_symplectic(&standard_j(2)).unwrap());
        // Identity is symplectic, not anti-symplectic.
        assert!(!is_anti_symplectic(&IntMatrix::identity(4)).unwrap());
        // Odd dimension is an error.
        assert!(is_anti_symplectic(&IntMatrix::identity(3)).is_err());
    }
}
