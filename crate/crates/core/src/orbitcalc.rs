//! Classification of enhanced nilpotent elements `(X, w)` and the data
//! attached to each orbit type `λ[q]`.
//!
//! Two independent classifiers are provided. [`classify`] follows a Jordan
//! basis: it expresses `w` modulo `im X` in the block generators and reads
//! off the largest block carrying a nonzero coefficient. [`classify_invariant`]
//! is basis-free: `q = n − dim(im X + 𝔤_X·w)`.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::exactlinalg::matrix::{is_zero_vector, standard_vector, sub_vectors, Echelon};
use crate::exactlinalg::{
    block_generators, centralizer_basis, is_nilpotent, jordan_basis, jordan_matrix, jordan_type,
    Field, Matrix, Vector,
};
use crate::partitions::{enhanced_leq, Bipartition, EnhancedPartition, Partition};

/// A pair `(X, w)` with `X` nilpotent.
#[derive(Debug, Clone, PartialEq)]
pub struct EnhancedElement<F: Field> {
    x: Matrix<F>,
    w: Vector<F>,
}

impl<F: Field> EnhancedElement<F> {
    pub fn new(x: Matrix<F>, w: Vector<F>) -> Result<Self> {
        let n = x.require_square()?;
        if w.len() != n {
            return Err(Error::SizeMismatch(format!(
                "vector of length {} for a {n}x{n} matrix",
                w.len()
            )));
        }
        if !is_nilpotent(&x)? {
            return Err(Error::NotNilpotent);
        }
        Ok(EnhancedElement { x, w })
    }

    pub fn x(&self) -> &Matrix<F> {
        &self.x
    }

    pub fn w(&self) -> &[F::Elem] {
        &self.w
    }

    pub fn n(&self) -> usize {
        self.x.rows()
    }

    pub fn field(&self) -> &F {
        self.x.field()
    }

    /// Adjoint action of `(g, u) ∈ GL_n ⋉ V`:
    /// `(X, w) ↦ (gXg⁻¹, −(gXg⁻¹)u + g w)`.
    pub fn act(&self, g: &Matrix<F>, u: &[F::Elem]) -> Result<Self> {
        let x = g.mul(&self.x)?.mul(&g.inverse()?)?;
        let shifted = x.mul_vec(u)?;
        let w = sub_vectors(self.field(), &g.mul_vec(&self.w)?, &shifted);
        Ok(EnhancedElement { x, w })
    }
}

fn marker_from_block(lambda: &Partition, block: Option<usize>) -> usize {
    match block {
        None => lambda.len(),
        Some(i) => {
            let size = lambda.part(i);
            lambda.parts().iter().filter(|&&a| a > size).count()
        }
    }
}

/// Jordan-basis classifier.
pub fn classify<F: Field>(e: &EnhancedElement<F>) -> Result<EnhancedPartition> {
    let field = e.field();
    let n = e.n();
    let data = jordan_basis(&e.x)?;
    let t = data.generators.len();
    let mut columns = data.generators.clone();
    columns.extend(e.x.image_basis());
    // Generators span V modulo im X, so this basis of V is square.
    let coords = Matrix::from_columns(field, n, &columns)?.solve(&e.w)?;
    let first = (0..t).find(|&i| !field.is_zero(&coords[i]));
    let q = marker_from_block(&data.lambda, first);
    EnhancedPartition::new(data.lambda, q)
}

/// Basis-free classifier: `q = n − dim(im X + 𝔤_X·w)`.
pub fn classify_invariant<F: Field>(e: &EnhancedElement<F>) -> Result<EnhancedPartition> {
    let field = e.field();
    let n = e.n();
    let lambda = jordan_type(&e.x)?;
    let mut span = Echelon::new(field, n);
    for v in e.x.image_basis() {
        span.insert(&v);
    }
    for y in centralizer_basis(&e.x)? {
        span.insert(&y.mul_vec(&e.w)?);
    }
    EnhancedPartition::new(lambda, n - span.rank())
}

/// `(J_λ, u)` where `u` generates the first block of the group selected by
/// `q`, or `u = 0` when `q = t`.
pub fn canonical_representative<F: Field>(
    field: &F,
    lq: &EnhancedPartition,
) -> Result<EnhancedElement<F>> {
    let lambda = lq.lambda();
    let n = lambda.size();
    let x = jordan_matrix(field, lambda);
    let w = if lq.q() == lambda.len() {
        vec![field.zero(); n]
    } else {
        standard_vector(field, n, block_generators(lambda)[lq.q()])
    };
    EnhancedElement::new(x, w)
}

/// Whether the orbit closure of `upper` contains the orbit of `lower`.
pub fn closure_contains(upper: &EnhancedPartition, lower: &EnhancedPartition) -> Result<bool> {
    enhanced_leq(lower, upper)
}

pub fn closure_contains_element<F: Field>(
    upper: &EnhancedPartition,
    e: &EnhancedElement<F>,
) -> Result<bool> {
    if e.n() != upper.n() {
        return Err(Error::SizeMismatch(format!(
            "element of size {} against orbit type of size {}",
            e.n(),
            upper.n()
        )));
    }
    closure_contains(upper, &classify(e)?)
}

/// Dimensions `(m_1, …, m_{a_1})` of the canonical partial flag of `λ[q]`,
/// with `m_{a_1} = n`.
///
/// For `q > 0`: `m_{a_1−1} = n − q` and
/// `m_i = n − q − Σ_{k=1}^{a_1−1−i} ((λ − (1)_q)ᵗ)_k`.
/// For `q = 0` the same recipe would repeat `V`, so the flag of images
/// `m_i = dim im X^{a_1−i}` is used instead. Both give block sizes whose
/// multiset is that of `λᵗ`. For `λ = (1^n)` the flag is `0 ⊂ V`.
pub fn flag_dims(lq: &EnhancedPartition) -> Vec<usize> {
    let n = lq.n();
    let top = lq.lambda().largest();
    let (shape, shift) = if lq.q() == 0 {
        (lq.lambda().transpose(), 0)
    } else {
        (lq.lowering().transpose(), lq.q())
    };
    let steps = if lq.q() == 0 { top } else { top - 1 };
    let mut dims: Vec<usize> = (1..=steps)
        .map(|i| {
            let cut: usize = (0..steps - i).map(|k| shape.part(k)).sum();
            n - shift - cut
        })
        .collect();
    if lq.q() > 0 {
        dims.push(n);
    }
    dims
}

pub fn flag_block_sizes(lq: &EnhancedPartition) -> Vec<usize> {
    let dims = flag_dims(lq);
    std::iter::once(0)
        .chain(dims.iter().copied())
        .collect::<Vec<_>>()
        .windows(2)
        .map(|w| w[1] - w[0])
        .collect()
}

/// Everything computed about one orbit type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDescriptor {
    pub kind: EnhancedPartition,
    pub dim_orbit: usize,
    pub dim_enhanced: usize,
    pub fiber_dim: usize,
    pub cohomology_dim: BigUint,
    pub bipartition: Bipartition,
    pub enhanced_numbers: Vec<usize>,
    pub flag_dims: Vec<usize>,
    pub flag_block_sizes: Vec<usize>,
}

/// Keys of [`OrbitDescriptor::record`], in output order.
pub const RECORD_KEYS: [&str; 10] = [
    "type",
    "n",
    "dim_orbit",
    "dim_enhanced",
    "fiber_dim",
    "cohomology_dim",
    "bipartition",
    "enhanced_numbers",
    "flag_dims",
    "flag_block_sizes",
];

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl OrbitDescriptor {
    fn values(&self) -> [String; 10] {
        [
            self.kind.to_string(),
            self.kind.n().to_string(),
            self.dim_orbit.to_string(),
            self.dim_enhanced.to_string(),
            self.fiber_dim.to_string(),
            self.cohomology_dim.to_string(),
            self.bipartition.to_string(),
            join(&self.enhanced_numbers),
            join(&self.flag_dims),
            join(&self.flag_block_sizes),
        ]
    }

    /// Line-oriented `key: value` record, keys in [`RECORD_KEYS`] order.
    pub fn record(&self) -> String {
        RECORD_KEYS
            .iter()
            .zip(self.values())
            .map(|(k, v)| format!("{k}: {v}\n"))
            .collect()
    }

    pub fn table_row(&self) -> Vec<String> {
        self.values().to_vec()
    }
}

impl fmt::Display for OrbitDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.record())
    }
}

pub fn describe(lq: &EnhancedPartition) -> OrbitDescriptor {
    let lambda = lq.lambda();
    OrbitDescriptor {
        kind: lq.clone(),
        dim_orbit: lambda.dim_orbit(),
        dim_enhanced: lq.dim_enhanced_orbit(),
        fiber_dim: lambda.fiber_dim(),
        cohomology_dim: lambda.cohomology_total_dim(),
        bipartition: lq.bipartition(),
        enhanced_numbers: lq.enhanced_numbers(),
        flag_dims: flag_dims(lq),
        flag_block_sizes: flag_block_sizes(lq),
    }
}

/// Whether `w` lies in `im X`.
pub fn in_image<F: Field>(x: &Matrix<F>, w: &[F::Elem]) -> bool {
    let mut span = Echelon::new(x.field(), x.rows());
    for v in x.image_basis() {
        span.insert(&v);
    }
    is_zero_vector(x.field(), w) || span.contains(w)
}
