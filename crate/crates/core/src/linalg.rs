//! Small exact matrices over [`Scalar`] and an exact null-space solver.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::plane::{integral, primitive, Vec3};
use crate::scalar::Scalar;

/// A 2×2 matrix acting on homogeneous parameters `(α:β)` of a range or pencil.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat2(pub [[Scalar; 2]; 2]);

impl Mat2 {
    pub fn new(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Self {
        Mat2([[a, b], [c, d]])
    }

    pub fn identity() -> Self {
        Mat2::new(Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::one())
    }

    pub fn det(&self) -> Scalar {
        let m = &self.0;
        &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
    }

    pub fn trace(&self) -> Scalar {
        &self.0[0][0] + &self.0[1][1]
    }

    pub fn apply(&self, v: &[Scalar; 2]) -> [Scalar; 2] {
        let m = &self.0;
        [&m[0][0] * &v[0] + &m[0][1] * &v[1], &m[1][0] * &v[0] + &m[1][1] * &v[1]]
    }

    /// A nonzero multiple of the identity.
    pub fn is_scalar(&self) -> bool {
        let m = &self.0;
        m[0][1].is_zero() && m[1][0].is_zero() && m[0][0] == m[1][1] && !m[0][0].is_zero()
    }

    /// Equal up to a nonzero factor.
    pub fn proportional(&self, other: &Mat2) -> bool {
        let a: Vec<&Scalar> = self.0.iter().flatten().collect();
        let b: Vec<&Scalar> = other.0.iter().flatten().collect();
        proportional(&a, &b)
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        let (a, b) = (&self.0, &rhs.0);
        let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(f, "[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

/// Projective equality of two equally long vectors (not both zero).
pub fn proportional(a: &[&Scalar], b: &[&Scalar]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let Some(k) = a.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    if b[k].is_zero() {
        return false;
    }
    a.iter().zip(b).all(|(x, y)| (*x * b[k]) == (*y * a[k]))
}

/// A 3×3 matrix; a nonsingular one is a collineation acting on point
/// coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat3(pub [[Scalar; 3]; 3]);

impl Mat3 {
    pub fn zero() -> Self {
        Mat3(core::array::from_fn(|_| core::array::from_fn(|_| Scalar::zero())))
    }

    pub fn identity() -> Self {
        Mat3::diag(Scalar::one(), Scalar::one(), Scalar::one())
    }

    pub fn diag(a: Scalar, b: Scalar, c: Scalar) -> Self {
        let mut m = Mat3::zero();
        m.0[0][0] = a;
        m.0[1][1] = b;
        m.0[2][2] = c;
        m
    }

    pub fn from_ints(rows: [[i64; 3]; 3]) -> Self {
        Mat3(rows.map(|r| r.map(Scalar::from)))
    }

    pub fn from_columns(cols: [[Scalar; 3]; 3]) -> Self {
        Mat3(core::array::from_fn(|i| core::array::from_fn(|j| cols[j][i].clone())))
    }

    /// `u vᵀ`
    pub fn outer(u: &[Scalar; 3], v: &[Scalar; 3]) -> Self {
        Mat3(core::array::from_fn(|i| core::array::from_fn(|j| &u[i] * &v[j])))
    }

    /// The matrix of `x ↦ v × x`.
    pub fn cross_matrix(v: &[Scalar; 3]) -> Self {
        let z = Scalar::zero;
        Mat3([
            [z(), -&v[2], v[1].clone()],
            [v[2].clone(), z(), -&v[0]],
            [-&v[1], v[0].clone(), z()],
        ])
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        Mat3(core::array::from_fn(|i| core::array::from_fn(|j| &self.0[i][j] * k)))
    }

    pub fn sub(&self, other: &Mat3) -> Self {
        Mat3(core::array::from_fn(|i| core::array::from_fn(|j| &self.0[i][j] - &other.0[i][j])))
    }

    pub fn transpose(&self) -> Self {
        Mat3(core::array::from_fn(|i| core::array::from_fn(|j| self.0[j][i].clone())))
    }

    pub fn det(&self) -> Scalar {
        let m = &self.0;
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    /// Transposed cofactor matrix, `adj(M)·M = det(M)·I`.
    pub fn adjugate(&self) -> Self {
        let m = &self.0;
        let c = |r0: usize, r1: usize, c0: usize, c1: usize| &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0];
        Mat3([
            [c(1, 2, 1, 2), -c(0, 2, 1, 2), c(0, 1, 1, 2)],
            [-c(1, 2, 0, 2), c(0, 2, 0, 2), -c(0, 1, 0, 2)],
            [c(1, 2, 0, 1), -c(0, 2, 0, 1), c(0, 1, 0, 1)],
        ])
    }

    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        let inv = d.recip().ok()?;
        Some(self.adjugate().scale(&inv))
    }

    pub fn apply(&self, v: &[Scalar; 3]) -> [Scalar; 3] {
        core::array::from_fn(|i| (0..3).map(|j| &self.0[i][j] * &v[j]).sum())
    }

    pub fn apply_int(&self, v: &Vec3) -> [Scalar; 3] {
        self.apply(&v.clone().map(Scalar::from))
    }

    /// `vᵀ M v`
    pub fn quadratic_form(&self, v: &[Scalar; 3]) -> Scalar {
        self.bilinear(v, v)
    }

    /// `uᵀ M v`
    pub fn bilinear(&self, u: &[Scalar; 3], v: &[Scalar; 3]) -> Scalar {
        let mv = self.apply(v);
        (0..3).map(|i| &u[i] * &mv[i]).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..3).all(|i| (0..3).all(|j| self.0[i][j] == self.0[j][i]))
    }

    pub fn is_scalar(&self) -> bool {
        let m = &self.0;
        !m[0][0].is_zero()
            && m[0][0] == m[1][1]
            && m[1][1] == m[2][2]
            && (0..3).all(|i| (0..3).all(|j| i == j || m[i][j].is_zero()))
    }

    pub fn proportional(&self, other: &Mat3) -> bool {
        let a: Vec<&Scalar> = self.0.iter().flatten().collect();
        let b: Vec<&Scalar> = other.0.iter().flatten().collect();
        proportional(&a, &b)
    }

    /// Representative with coprime integer entries, first nonzero positive.
    pub fn primitive(&self) -> Option<[[BigInt; 3]; 3]> {
        let flat: Vec<Scalar> = self.0.iter().flatten().cloned().collect();
        let ints = primitive_vec(&flat)?;
        Some(core::array::from_fn(|i| core::array::from_fn(|j| ints[3 * i + j].clone())))
    }
}

impl Mul for &Mat3 {
    type Output = Mat3;
    fn mul(self, rhs: &Mat3) -> Mat3 {
        Mat3(core::array::from_fn(|i| {
            core::array::from_fn(|j| (0..3).map(|k| &self.0[i][k] * &rhs.0[k][j]).sum())
        }))
    }
}

impl fmt::Debug for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Scales a rational vector to coprime integers with the first nonzero entry
/// positive. `None` for the zero vector.
pub fn primitive_vec(v: &[Scalar]) -> Option<Vec<BigInt>> {
    use num_integer::Integer;
    use num_traits::{One, Signed};
    if v.iter().all(Scalar::is_zero) {
        return None;
    }
    let l = v.iter().fold(BigInt::one(), |l, s| l.lcm(s.denom()));
    let mut ints: Vec<BigInt> = v.iter().map(|s| s.numer() * (&l / s.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    let negative = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    for x in ints.iter_mut() {
        *x = &*x / &g;
        if negative {
            *x = -&*x;
        }
    }
    Some(ints)
}

/// Canonical integer triple of a rational triple (used for images under
/// linear maps).
pub fn canonical_triple(v: &[Scalar; 3]) -> Option<Vec3> {
    primitive(integral(v)).ok()
}

/// Basis of the null space of an `r × c` matrix, by exact Gauss–Jordan
/// elimination.
pub fn null_space(rows: &[Vec<Scalar>], cols: usize) -> Vec<Vec<Scalar>> {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip().expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let delta = &f * &m[r][j];
                    m[i][j] = &m[i][j] - delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = alloc::vec![Scalar::zero(); cols];
            v[f] = Scalar::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[row][f];
            }
            v
        })
        .collect()
}
