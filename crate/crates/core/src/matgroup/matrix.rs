//! Small square matrices over [`Cyc`], and the named unitary generators used to
//! build the groups.

use std::fmt;

use crate::cyclo::Cyc;

/// A square matrix with cyclotomic entries, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    dim: usize,
    data: Vec<Cyc>,
}

/// A 2x2 unitary matrix over a cyclotomic field.
pub type UMat2 = Matrix;

impl Matrix {
    pub fn from_rows(rows: Vec<Vec<Cyc>>) -> Matrix {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Matrix {
            dim,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(dim: usize) -> Matrix {
        Matrix::scalar(dim, Cyc::one())
    }

    pub fn scalar(dim: usize, c: Cyc) -> Matrix {
        let mut data = vec![Cyc::zero(); dim * dim];
        for i in 0..dim {
            data[i * dim + i] = c.clone();
        }
        Matrix { dim, data }
    }

    pub fn diag(entries: Vec<Cyc>) -> Matrix {
        let dim = entries.len();
        let mut data = vec![Cyc::zero(); dim * dim];
        for (i, c) in entries.into_iter().enumerate() {
            data[i * dim + i] = c;
        }
        Matrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyc {
        &self.data[i * self.dim + j]
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.dim, other.dim);
        let d = self.dim;
        let mut data = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let mut acc = Cyc::zero();
                for k in 0..d {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                data.push(acc);
            }
        }
        Matrix { dim: d, data }
    }

    pub fn scale(&self, c: &Cyc) -> Matrix {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn trace(&self) -> Cyc {
        (0..self.dim).map(|i| self.get(i, i).clone()).sum()
    }

    /// Determinant by cofactor expansion; the matrices here are at most 3x3.
    pub fn det(&self) -> Cyc {
        match self.dim {
            0 => Cyc::one(),
            1 => self.data[0].clone(),
            2 => &(self.get(0, 0) * self.get(1, 1)) - &(self.get(0, 1) * self.get(1, 0)),
            d => (0..d)
                .map(|j| {
                    let term = self.get(0, j) * &self.minor(0, j).det();
                    if j % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum(),
        }
    }

    fn minor(&self, row: usize, col: usize) -> Matrix {
        let d = self.dim;
        let data = (0..d)
            .filter(|&i| i != row)
            .flat_map(|i| (0..d).filter(move |&j| j != col).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        Matrix { dim: d - 1, data }
    }

    pub fn conj_transpose(&self) -> Matrix {
        let d = self.dim;
        let data = (0..d)
            .flat_map(|i| (0..d).map(move |j| (j, i)))
            .map(|(j, i)| self.get(j, i).conj())
            .collect();
        Matrix { dim: d, data }
    }

    pub fn is_unitary(&self) -> bool {
        self.mul(&self.conj_transpose()) == Matrix::identity(self.dim)
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.dim)
    }

    /// Inverse through the adjugate.
    pub fn inverse(&self) -> Option<Matrix> {
        let det_inv = self.det().inv().ok()?;
        let d = self.dim;
        if d == 1 {
            return Some(Matrix {
                dim: 1,
                data: vec![det_inv],
            });
        }
        let mut data = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let c = &self.minor(j, i).det() * &det_inv;
                data.push(if (i + j) % 2 == 0 { c } else { -c });
            }
        }
        Some(Matrix { dim: d, data })
    }

    pub fn pow(&self, k: i64) -> Option<Matrix> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut result = Matrix::identity(self.dim);
        for _ in 0..k.unsigned_abs() {
            result = result.mul(&base);
        }
        Some(result)
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (a, b) = (self.dim, other.dim);
        let mut data = Vec::with_capacity(a * a * b * b);
        for i in 0..a * b {
            for j in 0..a * b {
                data.push(self.get(i / b, j / b) * other.get(i % b, j % b));
            }
        }
        Matrix { dim: a * b, data }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.dim {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

fn z(n: u64, e: i64) -> Cyc {
    Cyc::root_of_unity(n, e)
}

fn m2(a: Cyc, b: Cyc, c: Cyc, d: Cyc) -> Matrix {
    Matrix::from_rows(vec![vec![a, b], vec![c, d]])
}

/// `sqrt(2) = z8 + z8^7`.
pub fn sqrt2() -> Cyc {
    &z(8, 1) + &z(8, 7)
}

/// `sqrt(5) = 1 + 2 (z5 + z5^4)`.
pub fn sqrt5() -> Cyc {
    &Cyc::one() + &(&Cyc::from_int(2) * &(&z(5, 1) + &z(5, 4)))
}

/// Scalar matrix `diag(z_k, z_k)`.
pub fn phi(k: u64) -> Matrix {
    Matrix::scalar(2, z(k, 1))
}

/// `diag(z_k, z_k^-1)`.
pub fn psi(k: u64) -> Matrix {
    Matrix::diag(vec![z(k, 1), z(k, -1)])
}

/// `(1/sqrt 2) [[z8, z8^3], [z8, z8^7]]`.
pub fn eta() -> Matrix {
    let s = &sqrt2() * &Cyc::ratio(1, 2);
    m2(z(8, 1), z(8, 3), z(8, 1), z(8, 7)).scale(&s)
}

/// `[[0, i], [i, 0]]`.
pub fn tau() -> Matrix {
    m2(Cyc::zero(), z(4, 1), z(4, 1), Cyc::zero())
}

/// `diag(z5^3, z5^2)`.
pub fn omega() -> Matrix {
    Matrix::diag(vec![z(5, 3), z(5, 2)])
}

/// `(1/sqrt 5) [[z5^4 - z5, z5^2 - z5^3], [z5^2 - z5^3, z5 - z5^4]]`.
pub fn iota() -> Matrix {
    let s = &sqrt5() * &Cyc::ratio(1, 5);
    let a = &z(5, 4) - &z(5, 1);
    let b = &z(5, 2) - &z(5, 3);
    m2(a.clone(), b.clone(), b, -a).scale(&s)
}

/// `[[0, -1], [1, 0]]`.
pub fn sigma() -> Matrix {
    m2(Cyc::zero(), Cyc::from_int(-1), Cyc::one(), Cyc::zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_generators_are_unitary() {
        for m in [phi(6), psi(10), eta(), tau(), omega(), iota(), sigma()] {
            assert!(m.is_unitary(), "{m:?}");
        }
    }

    #[test]
    fn surds() {
        assert_eq!(&sqrt2() * &sqrt2(), Cyc::from_int(2));
        assert_eq!(&sqrt5() * &sqrt5(), Cyc::from_int(5));
    }

    #[test]
    fn inverse_and_det() {
        let m = eta().mul(&tau());
        assert!(m.mul(&m.inverse().unwrap()).is_identity());
        assert_eq!(m.det(), &eta().det() * &tau().det());
        let k = psi(4).kron(&sigma());
        assert_eq!(k.det(), Cyc::one());
    }
}
