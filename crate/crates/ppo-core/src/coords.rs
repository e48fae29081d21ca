//! Exact coordinate machinery for quantum nets and affine planes: r-vector
//! labels, the polynomial basis and its change-of-basis matrix, the monomial
//! group actions on labels, complex conjugation, the induced action on
//! affine planes, and the invariant symplectic form.
//!
//! Everything here is exact arithmetic over Z_N; the complex-matrix oracles
//! that pin the conventions live in the integration tests.

use std::fmt;

use thiserror::Error;

use crate::field::{Field, FieldElem};
use crate::matgroup::{GroupElem, GroupError};
use crate::modmat::ModMatrix;

/// Label of a quantum net / phase point operator: slot m holds the index of
/// the chosen projector in basis m, slot N is the Fourier (∞) basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RVector {
    entries: Vec<FieldElem>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseRVectorError {
    #[error("expected {expected} comma-separated entries, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("entry {0:?} is not a decimal integer")]
    BadInteger(String),
    #[error("entry {0} is out of range for modulus {1}")]
    OutOfRange(u64, u64),
}

impl RVector {
    pub fn new(entries: Vec<FieldElem>) -> RVector {
        assert!(!entries.is_empty());
        let m = entries[0].modulus();
        assert!(entries.iter().all(|e| e.modulus() == m));
        assert_eq!(entries.len() as u64, m + 1, "r-vector has N+1 slots");
        RVector { entries }
    }

    pub fn from_values(field: Field, values: &[i64]) -> RVector {
        RVector::new(values.iter().map(|&v| field.elem(v)).collect())
    }

    pub fn zero(field: Field) -> RVector {
        RVector::from_values(field, &vec![0; field.modulus() as usize + 1])
    }

    /// Strict parse of a comma-separated r-vector, e.g. "0,1,2,0" for N = 3.
    pub fn parse(field: Field, s: &str) -> Result<RVector, ParseRVectorError> {
        let n = field.modulus();
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() as u64 != n + 1 {
            return Err(ParseRVectorError::WrongLength {
                expected: n as usize + 1,
                got: parts.len(),
            });
        }
        let mut entries = Vec::with_capacity(parts.len());
        for part in parts {
            let trimmed = part.trim();
            let value: u64 = trimmed
                .parse()
                .map_err(|_| ParseRVectorError::BadInteger(trimmed.to_string()))?;
            if value >= n {
                return Err(ParseRVectorError::OutOfRange(value, n));
            }
            entries.push(field.elem(value as i64));
        }
        Ok(RVector { entries })
    }

    pub fn field(&self) -> Field {
        self.entries[0].field()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn slot(&self, m: usize) -> FieldElem {
        self.entries[m]
    }

    pub fn entries(&self) -> &[FieldElem] {
        &self.entries
    }

    pub fn values(&self) -> Vec<u64> {
        self.entries.iter().map(|e| e.value()).collect()
    }

    pub fn add(&self, rhs: &RVector) -> RVector {
        RVector::new(
            self.entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| *a + *b)
                .collect(),
        )
    }

    pub fn scale(&self, s: FieldElem) -> RVector {
        RVector::new(self.entries.iter().map(|a| *a * s).collect())
    }
}

impl fmt::Display for RVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Coordinates of an r-vector in the polynomial basis; r = S·α.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaVector {
    entries: Vec<FieldElem>,
}

impl AlphaVector {
    pub fn new(entries: Vec<FieldElem>) -> AlphaVector {
        AlphaVector { entries }
    }

    pub fn slot(&self, k: usize) -> FieldElem {
        self.entries[k]
    }

    pub fn entries(&self) -> &[FieldElem] {
        &self.entries
    }
}

/// Affine-plane label: the trailing N−1 basis coordinates [α₂, …, α_N].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlaneLabel {
    entries: Vec<FieldElem>,
}

impl PlaneLabel {
    pub fn new(entries: Vec<FieldElem>) -> PlaneLabel {
        assert!(!entries.is_empty());
        let m = entries[0].modulus();
        assert_eq!(entries.len() as u64, m - 1, "plane label has N-1 slots");
        PlaneLabel { entries }
    }

    pub fn from_values(field: Field, values: &[i64]) -> PlaneLabel {
        PlaneLabel::new(values.iter().map(|&v| field.elem(v)).collect())
    }

    /// Base-N integer encoding; α₂ is the least significant digit.
    pub fn index(&self) -> u64 {
        let n = self.entries[0].modulus();
        self.entries
            .iter()
            .rev()
            .fold(0u64, |acc, e| acc * n + e.value())
    }

    pub fn from_index(field: Field, mut index: u64) -> PlaneLabel {
        let n = field.modulus();
        let len = (n - 1) as usize;
        let mut entries = Vec::with_capacity(len);
        for _ in 0..len {
            entries.push(field.elem((index % n) as i64));
            index /= n;
        }
        PlaneLabel { entries }
    }

    pub fn entries(&self) -> &[FieldElem] {
        &self.entries
    }

    pub fn values(&self) -> Vec<u64> {
        self.entries.iter().map(|e| e.value()).collect()
    }
}

impl fmt::Display for PlaneLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// The (N+1)-dimensional label space with its polynomial basis, the group
/// actions on it, and the quotient down to affine planes.
pub struct NetSpace {
    field: Field,
    basis: Vec<RVector>,
    s: ModMatrix,
    s_inv: ModMatrix,
}

impl NetSpace {
    pub fn new(field: Field) -> NetSpace {
        let n = field.modulus();
        let dim = (n + 1) as usize;
        let mut basis = Vec::with_capacity(dim);
        // e_0 = (1,…,1,0)
        let mut e0 = vec![1i64; dim];
        e0[dim - 1] = 0;
        basis.push(RVector::from_values(field, &e0));
        // e_1 = (0,1,2,…,N−1,1)
        let mut e1: Vec<i64> = (0..n as i64).collect();
        e1.push(1);
        basis.push(RVector::from_values(field, &e1));
        // e_k = (0, 1^k, …, (N−1)^k, 0) for 2 ≤ k ≤ N−1
        for k in 2..n {
            let mut ek: Vec<i64> = (0..n)
                .map(|m| field.elem(m as i64).pow(k).value() as i64)
                .collect();
            ek.push(0);
            basis.push(RVector::from_values(field, &ek));
        }
        // e_N = (0,…,0,1)
        let mut en = vec![0i64; dim];
        en[dim - 1] = 1;
        basis.push(RVector::from_values(field, &en));

        let mut s = ModMatrix::zeros(field, dim, dim);
        for (k, e) in basis.iter().enumerate() {
            for i in 0..dim {
                s.set(i, k, e.slot(i));
            }
        }
        let s_inv = s.inverse().expect("basis is linearly independent");
        NetSpace {
            field,
            basis,
            s,
            s_inv,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.field.modulus() as usize + 1
    }

    pub fn plane_dim(&self) -> usize {
        self.field.modulus() as usize - 1
    }

    pub fn basis(&self) -> &[RVector] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> &ModMatrix {
        &self.s
    }

    pub fn r_to_alpha(&self, r: &RVector) -> AlphaVector {
        let values = self.s_inv.mul_vec(&r.values());
        AlphaVector::new(
            values
                .into_iter()
                .map(|v| self.field.elem(v as i64))
                .collect(),
        )
    }

    pub fn alpha_to_r(&self, alpha: &AlphaVector) -> RVector {
        let values: Vec<u64> = alpha.entries().iter().map(|e| e.value()).collect();
        let out = self.s.mul_vec(&values);
        RVector::new(out.into_iter().map(|v| self.field.elem(v as i64)).collect())
    }

    /// Phase-space translation by (q₀, p₀): r ↦ r + q₀·e₀ − p₀·e₁.
    pub fn translate(&self, r: &RVector, q0: FieldElem, p0: FieldElem) -> RVector {
        r.add(&self.basis[0].scale(q0))
            .add(&self.basis[1].scale(-p0))
    }

    /// The monomial matrix acting on r-vectors for a determinant +1 element:
    /// one nonzero entry per row and column, permuting the basis slots by
    /// the Möbius map m ↦ (αm+β)/(γm+δ) with the matching scale factors.
    pub fn net_action(&self, g: &GroupElem) -> Result<ModMatrix, GroupError> {
        let f = self.field;
        if g.det() != f.one() {
            return Err(GroupError::BadDeterminant);
        }
        let n = f.modulus();
        let dim = self.dim();
        let infinity = n as usize;
        let mut mat = ModMatrix::zeros(f, dim, dim);
        for m in 0..n {
            let m_el = f.elem(m as i64);
            let denom = g.gamma * m_el + g.delta;
            if denom.is_zero() {
                // lands on the ∞ slot with factor −γ
                mat.set(infinity, m as usize, -g.gamma);
            } else {
                let target = ((g.alpha * m_el + g.beta) * denom.inv().expect("nonzero")).value();
                mat.set(target as usize, m as usize, denom.inv().expect("nonzero"));
            }
        }
        if g.gamma.is_zero() {
            mat.set(infinity, infinity, g.delta);
        } else {
            let target = (g.alpha * g.gamma.inv().expect("γ ≠ 0")).value();
            mat.set(target as usize, infinity, g.gamma.inv().expect("γ ≠ 0"));
        }
        Ok(mat)
    }

    /// Complex conjugation on labels: slot m picks up the old slot −m, the
    /// ∞ slot flips sign. An involution; diagonal and alternating in the
    /// polynomial basis.
    pub fn conjugation_action(&self) -> ModMatrix {
        let f = self.field;
        let n = f.modulus();
        let dim = self.dim();
        let mut mat = ModMatrix::zeros(f, dim, dim);
        for m in 0..n {
            let src = ((n - m) % n) as usize;
            mat.set(m as usize, src, f.one());
        }
        mat.set(dim - 1, dim - 1, -f.one());
        mat
    }

    /// Action on r-vectors for any determinant ±1 element. Determinant −1
    /// elements factor as g = h·J with J = diag(1,−1) realized by the
    /// conjugation action.
    pub fn ext_net_action(&self, g: &GroupElem) -> Result<ModMatrix, GroupError> {
        let f = self.field;
        if g.det() == f.one() {
            return self.net_action(g);
        }
        if g.det() != -f.one() {
            return Err(GroupError::BadDeterminant);
        }
        let h = g.mul(&GroupElem::reflection(f));
        debug_assert_eq!(h.det(), f.one());
        Ok(self.net_action(&h)?.mul(&self.conjugation_action()))
    }

    /// Same action expressed in the polynomial basis: S⁻¹·M·S.
    pub fn alpha_action(&self, g: &GroupElem) -> Result<ModMatrix, GroupError> {
        Ok(self.s_inv.mul(&self.ext_net_action(g)?).mul(&self.s))
    }

    /// The induced (N−1)×(N−1) action on affine planes: the lower-right
    /// block of the basis-changed action. Well-defined because the span of
    /// e₀, e₁ is invariant; the zero block is asserted.
    pub fn plane_action(&self, g: &GroupElem) -> Result<ModMatrix, GroupError> {
        let a = self.alpha_action(g)?;
        let dim = self.dim();
        for i in 2..dim {
            assert!(
                a.get(i, 0).is_zero() && a.get(i, 1).is_zero(),
                "plane action is not well-defined: nonzero coupling to the translation block"
            );
        }
        Ok(a.block(2, 2, dim - 2, dim - 2))
    }

    /// The antisymmetric invariant form on the label space, in r-basis
    /// coordinates: pairwise 1/(j−i) entries against a unit last row/column.
    pub fn symplectic_form(&self) -> ModMatrix {
        let f = self.field;
        let n = f.modulus();
        let dim = self.dim();
        let mut omega = ModMatrix::zeros(f, dim, dim);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let diff = f.elem(j as i64) - f.elem(i as i64);
                    omega.set(i as usize, j as usize, diff.inv().expect("i ≠ j"));
                }
            }
            omega.set(i as usize, dim - 1, f.one());
            omega.set(dim - 1, i as usize, -f.one());
        }
        omega
    }

    /// The form conjugated into the polynomial basis, Sᵀ·Ω·S.
    pub fn symplectic_form_poly_basis(&self) -> ModMatrix {
        let s_t = self.s.transpose();
        s_t.mul(&self.symplectic_form()).mul(&self.s)
    }

    /// The nondegenerate restriction to plane coordinates [α₂, …, α_N].
    pub fn plane_symplectic_form(&self) -> ModMatrix {
        let full = self.symplectic_form_poly_basis();
        let dim = self.dim();
        full.block(2, 2, dim - 2, dim - 2)
    }

    /// An ordered basis of the plane space in which the symplectic form is
    /// the canonical block form (0, I; −I, 0). Pairs e_k (k even) with its
    /// partner e_{N−k} scaled by the inverse pairing coefficient, closing
    /// with the (e_{N−1}, −e_N) pair. Vectors are in plane coordinates.
    pub fn canonical_symplectic_basis(&self) -> Vec<Vec<FieldElem>> {
        let f = self.field;
        let n = f.modulus();
        let dim = self.plane_dim();
        let unit = |k: u64, scale: FieldElem| {
            let mut v = vec![f.zero(); dim];
            v[(k - 2) as usize] = scale;
            v
        };
        let first_half: Vec<u64> = (2..n).step_by(2).collect();
        let mut out: Vec<Vec<FieldElem>> = Vec::with_capacity(dim);
        for &k in &first_half {
            out.push(unit(k, f.one()));
        }
        for &k in &first_half {
            if k == n - 1 {
                out.push(unit(n, -f.one()));
            } else {
                let coeff = f.elem((n - k) as i64).inv().expect("nonzero");
                out.push(unit(n - k, coeff));
            }
        }
        out
    }

    /// The representative r-vector of a plane: α₀ = α₁ = 0, trailing
    /// coordinates from the label.
    pub fn plane_to_rvector(&self, label: &PlaneLabel) -> RVector {
        let f = self.field;
        let mut alpha = vec![f.zero(), f.zero()];
        alpha.extend_from_slice(label.entries());
        self.alpha_to_r(&AlphaVector::new(alpha))
    }

    /// The plane containing a given r-vector.
    pub fn plane_of(&self, r: &RVector) -> PlaneLabel {
        let alpha = self.r_to_alpha(r);
        PlaneLabel::new(alpha.entries()[2..].to_vec())
    }
}
