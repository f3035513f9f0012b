//! `GL_2` acting on binary quadratic forms `c₀x² + c₁xy + c₂y²`, the one
//! exceptional module with finitely many enhanced nilpotent orbits.
//!
//! Coordinates are taken in the ordered basis `(x², xy, y²)` with `x = e₁`,
//! `y = e₂`. Only characteristic zero is supported: the action matrices carry
//! coefficients 2, and the classification below is the geometric one (rank
//! of the quadratic form), which over `Q` merges forms that are not
//! rationally equivalent.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactlinalg::field::{format_rational, parse_rational};
use crate::exactlinalg::matrix::{is_zero_vector, Echelon};
use crate::exactlinalg::{is_nilpotent, Field, Matrix, Rationals, Vector};

/// `c₀x² + c₁xy + c₂y²` with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticVector {
    pub coefficients: [BigRational; 3],
}

impl QuadraticVector {
    pub fn from_i64(c0: i64, c1: i64, c2: i64) -> Self {
        let q = Rationals;
        QuadraticVector {
            coefficients: [q.from_i64(c0), q.from_i64(c1), q.from_i64(c2)],
        }
    }

    pub fn to_vector(&self) -> Vector<Rationals> {
        self.coefficients.to_vec()
    }

    pub fn from_vector(v: &[BigRational]) -> Result<Self> {
        match v {
            [a, b, c] => Ok(QuadraticVector {
                coefficients: [a.clone(), b.clone(), c.clone()],
            }),
            _ => Err(Error::SizeMismatch(format!(
                "quadratic form needs 3 coefficients, got {}",
                v.len()
            ))),
        }
    }
}

impl fmt::Display for QuadraticVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.coefficients;
        write!(
            f,
            "{},{},{}",
            format_rational(a),
            format_rational(b),
            format_rational(c)
        )
    }
}

/// Parses `c0,c1,c2`, each an integer or `a/b`.
impl FromStr for QuadraticVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|t| parse_rational(t.trim()))
            .collect::<Result<Vec<_>>>()?;
        QuadraticVector::from_vector(&coeffs)
            .map_err(|_| Error::Parse(format!("expected c0,c1,c2, got {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sym2Action {
    /// `ρ(g)` for `g ∈ GL_2`.
    Group,
    /// `dρ(X)` for `X ∈ gl_2`.
    Lie,
}

fn require_2x2<F: Field>(m: &Matrix<F>) -> Result<()> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Error::SizeMismatch(format!(
            "expected a 2x2 matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

/// Matrix of `ρ(g)` or `dρ(X)` on `(x², xy, y²)`.
pub fn sym2_matrix_action<F: Field>(m: &Matrix<F>, action: Sym2Action) -> Result<Matrix<F>> {
    require_2x2(m)?;
    let f = m.field();
    let (a, b, c, d) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
    let two = f.from_i64(2);
    let mul = |x: &F::Elem, y: &F::Elem| f.mul(x, y);
    // Columns are images of x², xy, y²; x ↦ a x + c y, y ↦ b x + d y.
    let columns = match action {
        Sym2Action::Group => {
            if f.is_zero(&f.sub(&mul(a, d), &mul(b, c))) {
                return Err(Error::NotInvertible);
            }
            vec![
                vec![mul(a, a), mul(&two, &mul(a, c)), mul(c, c)],
                vec![mul(a, b), f.add(&mul(a, d), &mul(b, c)), mul(c, d)],
                vec![mul(b, b), mul(&two, &mul(b, d)), mul(d, d)],
            ]
        }
        Sym2Action::Lie => vec![
            vec![mul(&two, a), mul(&two, c), f.zero()],
            vec![b.clone(), f.add(a, d), c.clone()],
            vec![f.zero(), mul(&two, b), mul(&two, d)],
        ],
    };
    Matrix::from_columns(f, 3, &columns)
}

/// The five enhanced nilpotent orbits of `GL_2 ⋉ Sym²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gl2Orbit {
    O1,
    O2,
    O3,
    O4,
    O5,
}

impl Gl2Orbit {
    pub const ALL: [Gl2Orbit; 5] = [
        Gl2Orbit::O1,
        Gl2Orbit::O2,
        Gl2Orbit::O3,
        Gl2Orbit::O4,
        Gl2Orbit::O5,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Gl2Orbit::O1 => "O1",
            Gl2Orbit::O2 => "O2",
            Gl2Orbit::O3 => "O3",
            Gl2Orbit::O4 => "O4",
            Gl2Orbit::O5 => "O5",
        }
    }

    fn index(self) -> usize {
        self as usize
    }

    /// `(0,0)`, `(0,x²)`, `(0,x²+y²)`, `(E₁₂,0)`, `(E₁₂,y²)`.
    pub fn representative(self) -> (Matrix<Rationals>, QuadraticVector) {
        let q = Rationals;
        let zero = Matrix::zeros(&q, 2, 2);
        let e12 = Matrix::from_i64(&q, &[&[0, 1], &[0, 0]]).expect("2x2 literal");
        match self {
            Gl2Orbit::O1 => (zero, QuadraticVector::from_i64(0, 0, 0)),
            Gl2Orbit::O2 => (zero, QuadraticVector::from_i64(1, 0, 0)),
            Gl2Orbit::O3 => (zero, QuadraticVector::from_i64(1, 0, 1)),
            Gl2Orbit::O4 => (e12, QuadraticVector::from_i64(0, 0, 0)),
            Gl2Orbit::O5 => (e12, QuadraticVector::from_i64(0, 0, 1)),
        }
    }
}

impl fmt::Display for Gl2Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Gl2Orbit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Gl2Orbit::ALL
            .into_iter()
            .find(|o| o.label().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown orbit label {s:?}")))
    }
}

fn require_char_zero<F: Field>(f: &F) -> Result<()> {
    match f.characteristic() {
        0 => Ok(()),
        p => Err(Error::CharNotZero(p)),
    }
}

/// Orbit of `(X, w)` with `X` a nilpotent 2×2 matrix and `w` coordinates in
/// `(x², xy, y²)`.
pub fn classify_gl2<F: Field>(x: &Matrix<F>, w: &[F::Elem]) -> Result<Gl2Orbit> {
    let f = x.field();
    require_char_zero(f)?;
    require_2x2(x)?;
    if w.len() != 3 {
        return Err(Error::SizeMismatch(format!(
            "quadratic form needs 3 coefficients, got {}",
            w.len()
        )));
    }
    if !is_nilpotent(x)? {
        return Err(Error::NotNilpotent);
    }
    if x.is_zero() {
        let half = f.inv(&f.from_i64(2)).expect("characteristic zero");
        let off = f.mul(&w[1], &half);
        let gram = Matrix::from_rows(
            f,
            vec![vec![w[0].clone(), off.clone()], vec![off, w[2].clone()]],
        )?;
        return Ok(match gram.rank() {
            0 => Gl2Orbit::O1,
            1 => Gl2Orbit::O2,
            _ => Gl2Orbit::O3,
        });
    }
    let mut image = Echelon::new(f, 3);
    for v in sym2_matrix_action(x, Sym2Action::Lie)?.image_basis() {
        image.insert(&v);
    }
    if is_zero_vector(f, w) || image.contains(w) {
        Ok(Gl2Orbit::O4)
    } else {
        Ok(Gl2Orbit::O5)
    }
}

pub fn classify_gl2_quadratic(x: &Matrix<Rationals>, w: &QuadraticVector) -> Result<Gl2Orbit> {
    classify_gl2(x, &w.to_vector())
}

/// Enhanced adjoint action of `(g, u)`:
/// `(X, w) ↦ (gXg⁻¹, −dρ(gXg⁻¹)u + ρ(g)w)`.
pub fn gl2_act<F: Field>(
    g: &Matrix<F>,
    u: &[F::Elem],
    x: &Matrix<F>,
    w: &[F::Elem],
) -> Result<(Matrix<F>, Vector<F>)> {
    let f = x.field();
    let x2 = g.mul(x)?.mul(&g.inverse()?)?;
    let shift = sym2_matrix_action(&x2, Sym2Action::Lie)?.mul_vec(u)?;
    let moved = sym2_matrix_action(g, Sym2Action::Group)?.mul_vec(w)?;
    let w2 = moved.iter().zip(&shift).map(|(a, b)| f.sub(a, b)).collect();
    Ok((x2, w2))
}

/// Dimension of the stabilizer of `(X, w)` in `gl_2 ⋉ Sym²`: the kernel of
/// `(Y, u) ↦ ([Y, X], dρ(Y)w − dρ(X)u)`.
pub fn gl2_enhanced_centralizer_dim<F: Field>(x: &Matrix<F>, w: &[F::Elem]) -> Result<usize> {
    require_2x2(x)?;
    let f = x.field();
    let dx = sym2_matrix_action(x, Sym2Action::Lie)?;
    let mut columns: Vec<Vector<F>> = Vec::with_capacity(7);
    for i in 0..2 {
        for j in 0..2 {
            let mut y = Matrix::zeros(f, 2, 2);
            y.set(i, j, f.one());
            let bracket = y.mul(x)?.sub(&x.mul(&y)?)?;
            let mut col: Vector<F> = bracket.to_rows().concat();
            col.extend(sym2_matrix_action(&y, Sym2Action::Lie)?.mul_vec(w)?);
            columns.push(col);
        }
    }
    for k in 0..3 {
        let mut col = vec![f.zero(); 4];
        col.extend(dx.column(k).iter().map(|v| f.neg(v)));
        columns.push(col);
    }
    let system = Matrix::from_columns(f, 7, &columns)?;
    Ok(7 - system.rank())
}

/// `dim(gl_2 ⋉ Sym²)`.
pub const GL2_ENHANCED_DIM: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gl2OrbitData {
    pub orbit: Gl2Orbit,
    pub dim: usize,
    pub centralizer_dim: usize,
}

/// Orbit and centralizer dimensions, computed from the representatives.
pub fn gl2_dims() -> Vec<Gl2OrbitData> {
    Gl2Orbit::ALL
        .into_iter()
        .map(|orbit| {
            let (x, w) = orbit.representative();
            let centralizer_dim =
                gl2_enhanced_centralizer_dim(&x, &w.to_vector()).expect("2x2 representative");
            Gl2OrbitData {
                orbit,
                dim: GL2_ENHANCED_DIM - centralizer_dim,
                centralizer_dim,
            }
        })
        .collect()
}

/// Closure order on the five orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gl2ClosurePoset {
    below: [[bool; 5]; 5],
}

impl Gl2ClosurePoset {
    /// Whether the closure of `upper` contains `lower`.
    pub fn contains(&self, upper: Gl2Orbit, lower: Gl2Orbit) -> bool {
        self.below[upper.index()][lower.index()]
    }

    /// Covering pairs `(upper, lower)`, sorted.
    pub fn covers(&self) -> Vec<(Gl2Orbit, Gl2Orbit)> {
        let mut out = Vec::new();
        for a in Gl2Orbit::ALL {
            for b in Gl2Orbit::ALL {
                if a == b || !self.contains(a, b) {
                    continue;
                }
                let between = Gl2Orbit::ALL
                    .into_iter()
                    .any(|c| c != a && c != b && self.contains(a, c) && self.contains(c, b));
                if !between {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

/// `Ō₁ = O₁`, `Ō₂ = O₁ ∪ O₂`, `Ō₃ = {0} × Sym²`, `Ō₄ = O₁ ∪ O₄`, `Ō₅` everything.
pub fn gl2_closure_poset() -> Gl2ClosurePoset {
    use Gl2Orbit::*;
    let closures: [&[Gl2Orbit]; 5] = [
        &[O1],
        &[O1, O2],
        &[O1, O2, O3],
        &[O1, O4],
        &[O1, O2, O3, O4, O5],
    ];
    let mut below = [[false; 5]; 5];
    for (upper, members) in closures.iter().enumerate() {
        for m in *members {
            below[upper][m.index()] = true;
        }
    }
    Gl2ClosurePoset { below }
}
