//! Complex-matrix layer: displacement operators, the metaplectic unitaries
//! U(F), mutually unbiased bases, phase point operators, affine planes of
//! operators, and Wigner distributions.
//!
//! Conventions: ω = exp(2πi/N), τ = −exp(iπ/N) (so τ² = ω and τ^N = 1 for
//! odd N), displacement matrix entries [D(q,p)]_{ℓk} = τ^{qp} ω^{kp} δ_{ℓ,k+q}.

use num_complex::Complex64;
use std::f64::consts::PI;
use thiserror::Error;

use crate::cmatrix::CMatrix;
use crate::coords::RVector;
use crate::field::{Field, FieldElem};
use crate::matgroup::GroupElem;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HilbertError {
    #[error("matrix group element must have determinant +1")]
    BadDeterminant,
    #[error("plane dimension {0} does not match system dimension {1}")]
    IncompletePlane(u64, u64),
    #[error(
        "rho is not a state (trace defect {trace_defect:e}, hermiticity defect {herm_defect:e})"
    )]
    NotAState { trace_defect: f64, herm_defect: f64 },
}

/// Basis label: `m` in 0..N−1 for the sheared bases, `m = N` for the
/// Fourier (∞) basis; `r` indexes the vector within the basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MubLabel {
    pub m: usize,
    pub r: FieldElem,
}

/// A point of the N×N phase space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PhaseSpacePoint {
    pub q: FieldElem,
    pub p: FieldElem,
}

/// A phase-space line, keyed by the basis index of its striation. Striation
/// `mub < N` consists of the lines {(mub·p + c, p)}; `mub = N` is the
/// horizontal striation {(q, c)}. `mub = 0` gives the vertical lines q = c.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Line {
    pub mub: usize,
    pub offset: FieldElem,
}

impl Line {
    /// Build a line from the geometric slope convention p = slope·q +
    /// intercept (`slope = None` meaning a vertical line q = intercept).
    pub fn from_slope(slope: Option<FieldElem>, intercept: FieldElem) -> Line {
        let f = intercept.field();
        match slope {
            None => Line {
                mub: 0,
                offset: intercept,
            },
            Some(s) if s.is_zero() => Line {
                mub: f.modulus() as usize,
                offset: intercept,
            },
            Some(s) => {
                let s_inv = s.inv().expect("nonzero slope");
                Line {
                    mub: s_inv.value() as usize,
                    offset: -(s_inv * intercept),
                }
            }
        }
    }

    /// The N points of the line.
    pub fn points(&self, field: Field) -> Vec<PhaseSpacePoint> {
        let n = field.modulus();
        if self.mub == n as usize {
            (0..n)
                .map(|q| PhaseSpacePoint {
                    q: field.elem(q as i64),
                    p: self.offset,
                })
                .collect()
        } else {
            let m = field.elem(self.mub as i64);
            (0..n)
                .map(|p| {
                    let p = field.elem(p as i64);
                    PhaseSpacePoint {
                        q: m * p + self.offset,
                        p,
                    }
                })
                .collect()
        }
    }
}

/// The N² phase point operators of one affine plane, indexed by (q, p).
pub struct PlaneOperators {
    field: Field,
    ops: Vec<CMatrix>,
}

impl PlaneOperators {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, q: FieldElem, p: FieldElem) -> &CMatrix {
        let n = self.field.modulus();
        &self.ops[(q.value() * n + p.value()) as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (PhaseSpacePoint, &CMatrix)> + '_ {
        let n = self.field.modulus();
        self.ops.iter().enumerate().map(move |(idx, op)| {
            let q = self.field.elem((idx as u64 / n) as i64);
            let p = self.field.elem((idx as u64 % n) as i64);
            (PhaseSpacePoint { q, p }, op)
        })
    }
}

/// Precomputed basis projectors, indexed by (m, r); the workhorse for
/// building many phase point operators.
pub struct MubTable {
    n: u64,
    projectors: Vec<CMatrix>,
}

impl MubTable {
    pub fn projector(&self, m: usize, r: u64) -> &CMatrix {
        &self.projectors[m * self.n as usize + r as usize]
    }

    /// Σ_m P_{m, r_m} − I.
    pub fn phase_point_operator(&self, rvec: &RVector) -> CMatrix {
        let n = self.n as usize;
        let mut a = CMatrix::zeros(n);
        for m in 0..=n {
            a.add_assign(self.projector(m, rvec.slot(m).value()));
        }
        a.sub(&CMatrix::identity(n))
    }
}

/// Hilbert-space context for dimension N: primitive phase tables plus the
/// operator constructors.
pub struct Hilbert {
    field: Field,
    tau_powers: Vec<Complex64>,
    omega_powers: Vec<Complex64>,
}

impl Hilbert {
    pub fn new(field: Field) -> Hilbert {
        let n = field.modulus();
        // τ = −exp(iπ/N) has order 2N
        let tau_powers = (0..2 * n)
            .map(|j| {
                let angle = PI * (j as f64) / (n as f64);
                (-1.0f64).powi(j as i32) * Complex64::new(angle.cos(), angle.sin())
            })
            .collect();
        let omega_powers = (0..n)
            .map(|j| {
                let angle = 2.0 * PI * (j as f64) / (n as f64);
                Complex64::new(angle.cos(), angle.sin())
            })
            .collect();
        Hilbert {
            field,
            tau_powers,
            omega_powers,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.field.modulus() as usize
    }

    /// τ^e for any signed integer exponent (reduced mod 2N).
    pub fn tau(&self, exp: i64) -> Complex64 {
        let two_n = 2 * self.field.modulus() as i64;
        self.tau_powers[exp.rem_euclid(two_n) as usize]
    }

    /// ω^e for any signed integer exponent (reduced mod N).
    pub fn omega(&self, exp: i64) -> Complex64 {
        let n = self.field.modulus() as i64;
        self.omega_powers[exp.rem_euclid(n) as usize]
    }

    /// The displacement operator D(q,p) = τ^{qp} X^q Z^p.
    pub fn displacement(&self, q: FieldElem, p: FieldElem) -> CMatrix {
        let n = self.field.modulus();
        let mut d = CMatrix::zeros(n as usize);
        let global = self.tau((q.value() * p.value()) as i64);
        for k in 0..n {
            let row = (k + q.value()) % n;
            let entry = global * self.omega((k * p.value()) as i64);
            d.set(row as usize, k as usize, entry);
        }
        d
    }

    /// The scalar τ^{q'p − qp'} in D(q,p)·D(q',p') = phase · D(q+q', p+p').
    pub fn weyl_product_phase(
        &self,
        q: FieldElem,
        p: FieldElem,
        q2: FieldElem,
        p2: FieldElem,
    ) -> Complex64 {
        let e = q2.value() as i64 * p.value() as i64 - q.value() as i64 * p2.value() as i64;
        self.tau(e)
    }

    /// The unitary U(F) for det F = 1, in the explicit two-branch form:
    /// a τ-quadratic kernel over all (j,k) when β ≠ 0, a scaled permutation
    /// with quadratic phases when β = 0.
    pub fn clifford_unitary(&self, g: &GroupElem) -> Result<CMatrix, HilbertError> {
        let f = self.field;
        if g.det() != f.one() {
            return Err(HilbertError::BadDeterminant);
        }
        let n = f.modulus();
        let mut u = CMatrix::zeros(n as usize);
        if !g.beta.is_zero() {
            let beta_inv = g.beta.inv().expect("β ≠ 0");
            let scale = Complex64::new(1.0 / (n as f64).sqrt(), 0.0);
            for j in 0..n {
                let je = f.elem(j as i64);
                for k in 0..n {
                    let ke = f.elem(k as i64);
                    let quad = g.alpha * ke * ke - f.elem(2) * je * ke + g.delta * je * je;
                    let exp = (beta_inv * quad).value();
                    u.set(j as usize, k as usize, scale * self.tau(exp as i64));
                }
            }
        } else {
            for j in 0..n {
                let je = f.elem(j as i64);
                let row = (g.alpha * je).value();
                let exp = (g.alpha * g.gamma * je * je).value();
                u.set(row as usize, j as usize, self.tau(exp as i64));
            }
        }
        Ok(u)
    }

    /// Basis vector |m,r⟩: V^m|r⟩ for m < N, W|r⟩ for the Fourier basis,
    /// where V and W are the unitaries of the shear and rotation generators.
    pub fn mub_vector(&self, label: MubLabel) -> Vec<Complex64> {
        let f = self.field;
        let n = self.dim();
        let mut v = vec![Complex64::new(0.0, 0.0); n];
        v[label.r.value() as usize] = Complex64::new(1.0, 0.0);
        if label.m == n {
            let w = self
                .clifford_unitary(&GroupElem::rotation(f))
                .expect("det 1");
            return w.apply(&v);
        }
        let shear_u = self.clifford_unitary(&GroupElem::shear(f)).expect("det 1");
        for _ in 0..label.m {
            v = shear_u.apply(&v);
        }
        v
    }

    /// Rank-1 basis projector from the displacement expansion:
    /// (1/N) Σ_j ω^{−rj} D(mj, j), with D(j, 0) for the Fourier basis.
    pub fn mub_projector(&self, label: MubLabel) -> CMatrix {
        let f = self.field;
        let n = f.modulus();
        let mut p = CMatrix::zeros(n as usize);
        for j in 0..n {
            let je = f.elem(j as i64);
            let d = if label.m == n as usize {
                self.displacement(je, f.zero())
            } else {
                self.displacement(f.elem(label.m as i64) * je, je)
            };
            let coeff = self.omega(-((label.r.value() * j) as i64));
            p.add_assign(&d.scale(coeff));
        }
        p.scale(Complex64::new(1.0 / n as f64, 0.0))
    }

    /// All (N+1)·N basis projectors, computed once.
    pub fn mub_table(&self) -> MubTable {
        let n = self.field.modulus();
        let mut projectors = Vec::with_capacity(((n + 1) * n) as usize);
        for m in 0..=n {
            for r in 0..n {
                projectors.push(self.mub_projector(MubLabel {
                    m: m as usize,
                    r: self.field.elem(r as i64),
                }));
            }
        }
        MubTable { n, projectors }
    }

    /// The phase point operator of a net label: Σ_m P_{m, r_m} − I.
    pub fn phase_point_operator(&self, rvec: &RVector) -> CMatrix {
        self.mub_table().phase_point_operator(rvec)
    }

    /// The N² operators of the affine plane through Â(rvec):
    /// Â(q,p) = D(q,p)·Â(0,0)·D(q,p)†.
    pub fn plane_operators(&self, rvec: &RVector) -> PlaneOperators {
        let f = self.field;
        let n = f.modulus();
        let base = self.phase_point_operator(rvec);
        let mut ops = Vec::with_capacity((n * n) as usize);
        for q in 0..n {
            for p in 0..n {
                let d = self.displacement(f.elem(q as i64), f.elem(p as i64));
                ops.push(d.mul(&base).mul(&d.dagger()));
            }
        }
        PlaneOperators { field: f, ops }
    }

    /// Average of the plane's operators along a line; a rank-1 projector
    /// equal to the basis projector the net assigns to that line.
    pub fn line_projector(
        &self,
        line: &Line,
        plane: &PlaneOperators,
    ) -> Result<CMatrix, HilbertError> {
        let n = self.field.modulus();
        if plane.field.modulus() != n {
            return Err(HilbertError::IncompletePlane(plane.field.modulus(), n));
        }
        let mut sum = CMatrix::zeros(n as usize);
        for pt in line.points(self.field) {
            sum.add_assign(plane.get(pt.q, pt.p));
        }
        Ok(sum.scale(Complex64::new(1.0 / n as f64, 0.0)))
    }

    /// The label the net `rvec` assigns to a line: translation consistency
    /// gives r_m + c along striation m and r_N − c on the horizontal one.
    pub fn net_label_for_line(&self, rvec: &RVector, line: &Line) -> MubLabel {
        let n = self.field.modulus() as usize;
        if line.mub == n {
            MubLabel {
                m: n,
                r: rvec.slot(n) - line.offset,
            }
        } else {
            MubLabel {
                m: line.mub,
                r: rvec.slot(line.mub) + line.offset,
            }
        }
    }

    /// W(q,p) = Tr[ρ·Â(q,p)] over the plane, indexed q·N + p.
    pub fn wigner_distribution(
        &self,
        rho: &CMatrix,
        plane: &PlaneOperators,
    ) -> Result<Vec<f64>, HilbertError> {
        let trace_defect = (rho.trace() - Complex64::new(1.0, 0.0)).norm();
        let herm_defect = rho.hermiticity_defect();
        if trace_defect > 1e-9 || herm_defect > 1e-9 {
            return Err(HilbertError::NotAState {
                trace_defect,
                herm_defect,
            });
        }
        Ok(plane.ops.iter().map(|a| rho.mul(a).trace().re).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn hilbert(n: u64) -> Hilbert {
        Hilbert::new(Field::new(n).unwrap())
    }

    #[test]
    fn displacement_identity_and_shift() {
        let h = hilbert(3);
        let f = h.field();
        let d00 = h.displacement(f.zero(), f.zero());
        assert!(d00.max_abs_diff(&CMatrix::identity(3)) < 1e-15);

        // D(1,0) = X, the cyclic shift δ_{ℓ,k+1}
        let x = h.displacement(f.one(), f.zero());
        for k in 0..3 {
            for l in 0..3 {
                let expected = if l == (k + 1) % 3 { 1.0 } else { 0.0 };
                assert!((x.get(l, k) - Complex64::new(expected, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn displacement_trace_orthogonality() {
        let h = hilbert(5);
        let f = h.field();
        let d = h.displacement(f.elem(2), f.elem(3));
        assert!((d.dagger().mul(&d).trace().re - 5.0).abs() < 1e-12);
        assert!(d.trace().norm() < 1e-12);
        assert!(d.unitarity_defect() < 1e-12);
    }

    #[test]
    fn product_phase_example() {
        // D(1,0)·D(0,1) carries the phase τ^{0·0 − 1·1} = τ⁻¹
        let h = hilbert(3);
        let f = h.field();
        let phase = h.weyl_product_phase(f.one(), f.zero(), f.zero(), f.one());
        assert!((phase - h.tau(-1)).norm() < 1e-15);
        assert!((phase - h.tau(1).conj()).norm() < 1e-15);
    }

    #[test]
    fn weyl_relations_n3() {
        let h = hilbert(3);
        let f = h.field();
        for q in 0..3 {
            for p in 0..3 {
                let (qe, pe) = (f.elem(q), f.elem(p));
                let d = h.displacement(qe, pe);
                // D† = D(−q,−p)
                assert!(d.dagger().max_abs_diff(&h.displacement(-qe, -pe)) < 1e-12);
                for q2 in 0..3 {
                    for p2 in 0..3 {
                        let (q2e, p2e) = (f.elem(q2), f.elem(p2));
                        let lhs = d.mul(&h.displacement(q2e, p2e));
                        let rhs = h
                            .displacement(qe + q2e, pe + p2e)
                            .scale(h.weyl_product_phase(qe, pe, q2e, p2e));
                        assert!(lhs.max_abs_diff(&rhs) < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn clifford_unitary_identity_and_covariance() {
        for n in [3u64, 5] {
            let h = hilbert(n);
            let f = h.field();
            let id_u = h.clifford_unitary(&GroupElem::identity(f)).unwrap();
            assert!(id_u.max_abs_diff(&CMatrix::identity(n as usize)) < 1e-12);

            for g in [GroupElem::shear(f), GroupElem::rotation(f)] {
                let u = h.clifford_unitary(&g).unwrap();
                assert!(u.unitarity_defect() < 1e-10, "N={n} g={g}");
                for q in 0..n {
                    for p in 0..n {
                        let (qe, pe) = (f.elem(q as i64), f.elem(p as i64));
                        let lhs = u.mul(&h.displacement(qe, pe)).mul(&u.dagger());
                        let (q2, p2) = g.apply(qe, pe);
                        let rhs = h.displacement(q2, p2);
                        assert!(lhs.max_abs_diff(&rhs) < 1e-10, "N={n} g={g} ({q},{p})");
                    }
                }
            }
        }
    }

    #[test]
    fn clifford_unitary_rejects_det_minus_one() {
        let h = hilbert(5);
        let f = h.field();
        let j = GroupElem::reflection(f);
        assert!(matches!(
            h.clifford_unitary(&j),
            Err(HilbertError::BadDeterminant)
        ));
    }

    #[test]
    fn mub_projectors_match_vectors() {
        for n in [3u64, 5] {
            let h = hilbert(n);
            let f = h.field();
            for m in 0..=n as usize {
                for r in 0..n {
                    let label = MubLabel {
                        m,
                        r: f.elem(r as i64),
                    };
                    let p = h.mub_projector(label);
                    assert!(p.hermiticity_defect() < 1e-12);
                    assert!((p.trace().re - 1.0).abs() < 1e-12);
                    // projector property
                    assert!(p.mul(&p).max_abs_diff(&p) < 1e-12);
                    // agrees with the explicit vector construction
                    let v = h.mub_vector(label);
                    let outer = CMatrix::outer(&v, &v);
                    assert!(p.max_abs_diff(&outer) < 1e-11, "N={n} m={m} r={r}");
                }
            }
        }
    }

    #[test]
    fn mub_unbiasedness() {
        for n in [3u64, 5, 7] {
            let h = hilbert(n);
            let f = h.field();
            let table = h.mub_table();
            for m1 in 0..=n as usize {
                for m2 in 0..=n as usize {
                    for r1 in 0..n {
                        for r2 in 0..n {
                            let overlap = table
                                .projector(m1, r1)
                                .mul(table.projector(m2, r2))
                                .trace()
                                .re;
                            let expected = if m1 == m2 {
                                if r1 == r2 {
                                    1.0
                                } else {
                                    0.0
                                }
                            } else {
                                1.0 / n as f64
                            };
                            assert!(
                                (overlap - expected).abs() < 1e-10,
                                "N={n} ({m1},{r1}) vs ({m2},{r2}): {overlap}"
                            );
                        }
                    }
                }
            }
            let _ = f;
        }
    }

    #[test]
    fn ladder_relations() {
        // conjugating P_{m,r} by D(1,0) gives P_{m,r+1} (m ≠ ∞) and fixes
        // the Fourier row; by D(0,1) gives P_{m,r−m} and P_{∞,r−1}
        for n in [3u64, 5] {
            let h = hilbert(n);
            let f = h.field();
            let d10 = h.displacement(f.one(), f.zero());
            let d01 = h.displacement(f.zero(), f.one());
            for m in 0..=n as usize {
                for r in 0..n {
                    let r = f.elem(r as i64);
                    let p = h.mub_projector(MubLabel { m, r });
                    let via_d10 = d10.mul(&p).mul(&d10.dagger());
                    let expect_d10 = if m == n as usize {
                        h.mub_projector(MubLabel { m, r })
                    } else {
                        h.mub_projector(MubLabel { m, r: r + f.one() })
                    };
                    assert!(via_d10.max_abs_diff(&expect_d10) < 1e-11);

                    let via_d01 = d01.mul(&p).mul(&d01.dagger());
                    let expect_d01 = if m == n as usize {
                        h.mub_projector(MubLabel { m, r: r - f.one() })
                    } else {
                        h.mub_projector(MubLabel {
                            m,
                            r: r - f.elem(m as i64),
                        })
                    };
                    assert!(via_d01.max_abs_diff(&expect_d01) < 1e-11);
                }
            }
        }
    }

    #[test]
    fn phase_point_operator_normalization() {
        let mut rng = SplitMix64::new(12);
        for n in [3u64, 5, 7] {
            let h = hilbert(n);
            let f = h.field();
            let table = h.mub_table();
            for _ in 0..(if n == 7 { 20 } else { 100 }) {
                let rvec = RVector::new((0..=n).map(|_| f.elem(rng.below(n) as i64)).collect());
                let a = table.phase_point_operator(&rvec);
                assert!(a.hermiticity_defect() < 1e-12);
                assert!((a.trace().re - 1.0).abs() < 1e-10);
                assert!((a.mul(&a).trace().re - n as f64).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn plane_operator_orthogonality() {
        let h = hilbert(3);
        let f = h.field();
        let rvec = RVector::from_values(f, &[1, 0, 2, 1]);
        let plane = h.plane_operators(&rvec);
        assert!(
            plane
                .get(f.zero(), f.zero())
                .max_abs_diff(&h.phase_point_operator(&rvec))
                < 1e-12
        );
        for (x, ax) in plane.iter() {
            for (y, ay) in plane.iter() {
                let overlap = ax.mul(ay).trace().re;
                let expected = if x == y { 3.0 } else { 0.0 };
                assert!((overlap - expected).abs() < 1e-9, "{x:?} {y:?}");
            }
        }
    }

    #[test]
    fn line_projectors_match_net_assignment() {
        for n in [3u64, 5] {
            let h = hilbert(n);
            let f = h.field();
            let mut rng = SplitMix64::new(n);
            let rvec = RVector::new((0..=n).map(|_| f.elem(rng.below(n) as i64)).collect());
            let plane = h.plane_operators(&rvec);
            for mub in 0..=n as usize {
                let mut striation_sum = CMatrix::zeros(n as usize);
                for c in 0..n {
                    let line = Line {
                        mub,
                        offset: f.elem(c as i64),
                    };
                    let p = h.line_projector(&line, &plane).unwrap();
                    // rank-1 projector
                    assert!(p.mul(&p).max_abs_diff(&p) < 1e-9);
                    assert!((p.trace().re - 1.0).abs() < 1e-9);
                    // equals the net's basis projector for that line
                    let label = h.net_label_for_line(&rvec, &line);
                    assert!(
                        p.max_abs_diff(&h.mub_projector(label)) < 1e-9,
                        "N={n} mub={mub} c={c}"
                    );
                    striation_sum.add_assign(&p);
                }
                // lines of one striation resolve the identity
                assert!(striation_sum.max_abs_diff(&CMatrix::identity(n as usize)) < 1e-9);
            }
        }
    }

    #[test]
    fn line_from_slope_convention() {
        let f = Field::new(5).unwrap();
        // vertical lines are striation 0
        let v = Line::from_slope(None, f.elem(2));
        assert_eq!(v.mub, 0);
        let pts = v.points(f);
        assert!(pts.iter().all(|pt| pt.q == f.elem(2)));
        // horizontal lines are the Fourier striation
        let hline = Line::from_slope(Some(f.zero()), f.elem(3));
        assert_eq!(hline.mub, 5);
        assert!(hline.points(f).iter().all(|pt| pt.p == f.elem(3)));
        // a slope-s line satisfies p = s·q + c pointwise
        let s = f.elem(2);
        let c = f.elem(4);
        let line = Line::from_slope(Some(s), c);
        for pt in line.points(f) {
            assert_eq!(pt.p, s * pt.q + c);
        }
    }

    #[test]
    fn wigner_distribution_properties() {
        let h = hilbert(5);
        let f = h.field();
        let mut rng = SplitMix64::new(77);
        let rvec = RVector::new((0..=5).map(|_| f.elem(rng.below(5) as i64)).collect());
        let plane = h.plane_operators(&rvec);

        // maximally mixed state: W ≡ 1/N
        let mixed = CMatrix::identity(5).scale(Complex64::new(0.2, 0.0));
        let w = h.wigner_distribution(&mixed, &plane).unwrap();
        assert!(w.iter().all(|&x| (x - 0.2).abs() < 1e-9));

        // a net projector: its own line sums to 1, total mass 1, marginals
        let label = MubLabel {
            m: 2,
            r: rvec.slot(2),
        };
        let rho = h.mub_projector(label);
        let w = h.wigner_distribution(&rho, &plane).unwrap();
        // striations partition the plane, so (1/N)·ΣW = Tr ρ
        let total: f64 = w.iter().sum::<f64>() / 5.0;
        assert!((total - 1.0).abs() < 1e-9);
        for mub in 0..=5usize {
            for c in 0..5 {
                let line = Line {
                    mub,
                    offset: f.elem(c),
                };
                let avg: f64 = line
                    .points(f)
                    .iter()
                    .map(|pt| w[(pt.q.value() * 5 + pt.p.value()) as usize])
                    .sum::<f64>()
                    / 5.0;
                let expected = h
                    .line_projector(&line, &plane)
                    .unwrap()
                    .mul(&rho)
                    .trace()
                    .re;
                assert!((avg - expected).abs() < 1e-9);
                assert!((-1e-9..=1.0 + 1e-9).contains(&avg));
            }
        }
        // the ray of its own striation carries probability 1
        let own = Line {
            mub: 2,
            offset: f.zero(),
        };
        let avg: f64 = own
            .points(f)
            .iter()
            .map(|pt| w[(pt.q.value() * 5 + pt.p.value()) as usize])
            .sum::<f64>()
            / 5.0;
        assert!((avg - 1.0).abs() < 1e-9);
    }

    #[test]
    fn wigner_rejects_non_states() {
        let h = hilbert(3);
        let f = h.field();
        let plane = h.plane_operators(&RVector::zero(f));
        let not_normalized = CMatrix::identity(3);
        assert!(matches!(
            h.wigner_distribution(&not_normalized, &plane),
            Err(HilbertError::NotAState { .. })
        ));
    }
}
