//! Nilpotent matrices: Jordan type, Jordan bases and centralizers.
//!
//! Jordan blocks are upper triangular: within a block of size `a` with
//! basis `e_1, …, e_a`, the matrix sends `e_{i+1} ↦ e_i` and `e_1 ↦ 0`.
//! The last basis vector of each block generates it.

use crate::error::{Error, Result};
use crate::partitions::Partition;

use super::field::Field;
use super::matrix::{is_zero_vector, Echelon, Matrix, Vector};

/// Block-diagonal `J_λ` with blocks in the order of the parts of `λ`.
pub fn jordan_matrix<F: Field>(field: &F, lambda: &Partition) -> Matrix<F> {
    let n = lambda.size();
    let mut m = Matrix::zeros(field, n, n);
    let mut offset = 0;
    for &a in lambda.parts() {
        for i in 0..a.saturating_sub(1) {
            m.set(offset + i, offset + i + 1, field.one());
        }
        offset += a;
    }
    m
}

/// Index of the basis vector that generates each block of `J_λ`.
pub fn block_generators(lambda: &Partition) -> Vec<usize> {
    lambda
        .parts()
        .iter()
        .scan(0, |end, &a| {
            *end += a;
            Some(*end - 1)
        })
        .collect()
}

pub fn is_nilpotent<F: Field>(x: &Matrix<F>) -> Result<bool> {
    let n = x.require_square()?;
    Ok(x.pow(n)?.is_zero())
}

/// Jordan type of a nilpotent matrix, read off from kernel dimensions:
/// `λᵗ_k = dim ker xᵏ − dim ker xᵏ⁻¹`.
pub fn jordan_type<F: Field>(x: &Matrix<F>) -> Result<Partition> {
    let n = x.require_square()?;
    let mut kernel_dims = vec![0];
    let mut power = Matrix::identity(x.field(), n);
    for _ in 0..n {
        power = power.mul(x)?;
        kernel_dims.push(n - power.rank());
    }
    if kernel_dims[n] != n {
        return Err(Error::NotNilpotent);
    }
    let transpose: Vec<usize> = kernel_dims
        .windows(2)
        .map(|w| w[1] - w[0])
        .take_while(|&c| c > 0)
        .collect();
    Ok(Partition::new(transpose)?.transpose())
}

/// A Jordan basis `{xᵏ v_i : 0 ≤ k < a_i}` for a nilpotent `x`.
#[derive(Debug, Clone)]
pub struct JordanData<F: Field> {
    pub lambda: Partition,
    /// One generator per block, blocks ordered by nonincreasing size.
    pub generators: Vec<Vector<F>>,
    /// Columns `x^{a_i−1} v_i, …, x v_i, v_i` block after block, so that
    /// `g⁻¹ x g = J_λ`.
    pub change_of_basis: Matrix<F>,
}

/// Builds a Jordan basis from the kernel filtration `K_s = ker xˢ`. Blocks
/// of size exactly `s` are generated by a complement of
/// `K_{s−1} + x·K_{s+1}` inside `K_s`.
pub fn jordan_basis<F: Field>(x: &Matrix<F>) -> Result<JordanData<F>> {
    let lambda = jordan_type(x)?;
    let field = x.field().clone();
    let n = x.rows();
    let top = lambda.largest();

    let mut kernels: Vec<Vec<Vector<F>>> = Vec::with_capacity(top + 2);
    let mut power = Matrix::identity(&field, n);
    kernels.push(Vec::new());
    for _ in 1..=top + 1 {
        power = power.mul(x)?;
        kernels.push(power.kernel_basis());
    }

    let mut generators = Vec::new();
    for s in (1..=top).rev() {
        let wanted = lambda.parts().iter().filter(|&&a| a == s).count();
        if wanted == 0 {
            continue;
        }
        let mut span = Echelon::new(&field, n);
        for v in &kernels[s - 1] {
            span.insert(v);
        }
        for v in &kernels[s + 1] {
            span.insert(&x.mul_vec(v)?);
        }
        let mut chosen = 0;
        for v in &kernels[s] {
            if chosen == wanted {
                break;
            }
            if span.insert(v) {
                generators.push(v.clone());
                chosen += 1;
            }
        }
        debug_assert_eq!(chosen, wanted);
    }

    let mut columns = Vec::with_capacity(n);
    for (v, &a) in generators.iter().zip(lambda.parts()) {
        let mut chain = vec![v.clone()];
        for _ in 1..a {
            let next = x.mul_vec(chain.last().expect("chain is nonempty"))?;
            chain.push(next);
        }
        columns.extend(chain.into_iter().rev());
    }
    let change_of_basis = Matrix::from_columns(&field, n, &columns)?;

    Ok(JordanData {
        lambda,
        generators,
        change_of_basis,
    })
}

/// Coefficient matrix of the commutator map `Y ↦ XY − YX` on row-major
/// coordinates of `Y`.
fn commutator_system<F: Field>(x: &Matrix<F>, extra_cols: usize) -> Matrix<F> {
    let field = x.field();
    let n = x.rows();
    let mut sys = Matrix::zeros(field, n * n, n * n + extra_cols);
    for i in 0..n {
        for j in 0..n {
            let eq = i * n + j;
            // (XY)_{ij} = Σ_a X_{ia} Y_{aj}
            for a in 0..n {
                let col = a * n + j;
                let v = field.add(sys.get(eq, col), x.get(i, a));
                sys.set(eq, col, v);
            }
            // (YX)_{ij} = Σ_b Y_{ib} X_{bj}
            for b in 0..n {
                let col = i * n + b;
                let v = field.sub(sys.get(eq, col), x.get(b, j));
                sys.set(eq, col, v);
            }
        }
    }
    sys
}

/// Basis of the centralizer `{Y : XY = YX}`.
pub fn centralizer_basis<F: Field>(x: &Matrix<F>) -> Result<Vec<Matrix<F>>> {
    let n = x.require_square()?;
    let field = x.field();
    commutator_system(x, 0)
        .kernel_basis()
        .into_iter()
        .map(|v| {
            let rows = v.chunks(n).map(<[F::Elem]>::to_vec).collect();
            Matrix::from_rows(field, rows)
        })
        .collect()
}

/// Dimension of the stabilizer of `(x, w)` in the enhanced Lie algebra
/// `gl_n ⋉ V`: the pairs `(Y, u)` with `[X, Y] = 0` and `−X u + Y w = 0`,
/// solved as one linear system in `n² + n` unknowns.
#[allow(clippy::needless_range_loop)]
pub fn enhanced_centralizer_dim<F: Field>(x: &Matrix<F>, w: &[F::Elem]) -> Result<usize> {
    let n = x.require_square()?;
    if w.len() != n {
        return Err(Error::SizeMismatch(format!(
            "vector of length {} for a {n}x{n} matrix",
            w.len()
        )));
    }
    if !is_nilpotent(x)? {
        return Err(Error::NotNilpotent);
    }
    let field = x.field();
    let commutator = commutator_system(x, n);
    let mut sys = Matrix::zeros(field, n * n + n, n * n + n);
    for r in 0..n * n {
        for c in 0..n * n + n {
            sys.set(r, c, commutator.get(r, c).clone());
        }
    }
    for i in 0..n {
        let eq = n * n + i;
        for b in 0..n {
            // (Y w)_i = Σ_b Y_{ib} w_b
            sys.set(eq, i * n + b, w[b].clone());
            // (−X u)_i = −Σ_b X_{ib} u_b
            sys.set(eq, n * n + b, field.neg(x.get(i, b)));
        }
    }
    Ok(n * n + n - sys.rank())
}

/// Checks the defining properties of a Jordan basis.
pub fn verify_jordan_data<F: Field>(x: &Matrix<F>, data: &JordanData<F>) -> Result<bool> {
    let field = x.field();
    let n = x.rows();
    let mut span = Echelon::new(field, n);
    for (v, &a) in data.generators.iter().zip(data.lambda.parts()) {
        let mut cur = v.clone();
        for _ in 0..a {
            if is_zero_vector(field, &cur) || !span.insert(&cur) {
                return Ok(false);
            }
            cur = x.mul_vec(&cur)?;
        }
        if !is_zero_vector(field, &cur) {
            return Ok(false);
        }
    }
    if span.rank() != n {
        return Ok(false);
    }
    let g = &data.change_of_basis;
    let conj = g.inverse()?.mul(x)?.mul(g)?;
    Ok(conj == jordan_matrix(field, &data.lambda))
}

#[cfg(test)]
mod tests {
    use super::super::field::{PrimeField, Rationals};
    use super::super::matrix::standard_vector;
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn jordan_matrix_layout() {
        let q = Rationals;
        let j = jordan_matrix(&q, &part(&[2, 1]));
        let expected = Matrix::from_i64(&q, &[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]).unwrap();
        assert_eq!(j, expected);
        assert_eq!(block_generators(&part(&[3, 2, 1])), vec![2, 4, 5]);
    }

    #[test]
    fn nilpotency() {
        let q = Rationals;
        assert!(is_nilpotent(&jordan_matrix(&q, &part(&[3]))).unwrap());
        assert!(!is_nilpotent(&Matrix::identity(&q, 3)).unwrap());
        let upper = Matrix::from_i64(&q, &[&[0, 5, -2], &[0, 0, 7], &[0, 0, 0]]).unwrap();
        assert!(is_nilpotent(&upper).unwrap());
        let rect = Matrix::zeros(&q, 2, 3);
        assert!(matches!(is_nilpotent(&rect), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn jordan_type_examples() {
        let q = Rationals;
        assert_eq!(
            jordan_type(&Matrix::zeros(&q, 3, 3)).unwrap(),
            part(&[1, 1, 1])
        );
        assert_eq!(
            jordan_type(&jordan_matrix(&q, &part(&[2, 1]))).unwrap(),
            part(&[2, 1])
        );
        assert_eq!(
            jordan_type(&Matrix::identity(&q, 2)),
            Err(Error::NotNilpotent)
        );
    }

    #[test]
    fn jordan_basis_examples() {
        let q = Rationals;
        let j = jordan_matrix(&q, &part(&[2, 1]));
        let data = jordan_basis(&j).unwrap();
        assert!(verify_jordan_data(&j, &data).unwrap());
        assert_eq!(data.generators.len(), 2);

        let zero = Matrix::zeros(&q, 3, 3);
        let data = jordan_basis(&zero).unwrap();
        assert_eq!(data.lambda, part(&[1, 1, 1]));
        assert!(verify_jordan_data(&zero, &data).unwrap());

        let j3 = jordan_matrix(&q, &part(&[3]));
        let data = jordan_basis(&j3).unwrap();
        let v = &data.generators[0];
        assert!(!is_zero_vector(&q, &j3.pow(2).unwrap().mul_vec(v).unwrap()));
    }

    #[test]
    fn centralizer_examples() {
        let q = Rationals;
        assert_eq!(
            centralizer_basis(&Matrix::zeros(&q, 2, 2)).unwrap().len(),
            4
        );
        assert_eq!(
            centralizer_basis(&jordan_matrix(&q, &part(&[2])))
                .unwrap()
                .len(),
            2
        );
        let j21 = jordan_matrix(&q, &part(&[2, 1]));
        let basis = centralizer_basis(&j21).unwrap();
        assert_eq!(basis.len(), 5);
        for y in &basis {
            assert_eq!(j21.mul(y).unwrap(), y.mul(&j21).unwrap());
        }
    }

    #[test]
    fn enhanced_centralizer_examples() {
        let q = Rationals;
        let zero = Matrix::zeros(&q, 3, 3);
        assert_eq!(
            enhanced_centralizer_dim(&zero, &vec![q.zero(); 3]).unwrap(),
            12
        );
        let j21 = jordan_matrix(&q, &part(&[2, 1]));
        assert_eq!(
            enhanced_centralizer_dim(&j21, &standard_vector(&q, 3, 1)).unwrap(),
            5
        );
        assert_eq!(
            enhanced_centralizer_dim(&j21, &standard_vector(&q, 3, 0)).unwrap(),
            7
        );
        assert_eq!(
            enhanced_centralizer_dim(&j21, &[q.zero()]),
            Err(Error::SizeMismatch(
                "vector of length 1 for a 3x3 matrix".into()
            ))
        );
        assert_eq!(
            enhanced_centralizer_dim(&Matrix::identity(&q, 3), &vec![q.zero(); 3]),
            Err(Error::NotNilpotent)
        );
    }

    #[test]
    fn works_over_prime_fields() {
        let f = PrimeField::new(2).unwrap();
        let j = jordan_matrix(&f, &part(&[3, 1]));
        let data = jordan_basis(&j).unwrap();
        assert!(verify_jordan_data(&j, &data).unwrap());
        assert_eq!(centralizer_basis(&j).unwrap().len(), 2 * 2 + 1 + 1);
    }
}
