//! The groups SL(2,Z_N) and ESL(2,Z_N): enumeration, conjugacy
//! classification, constructive conjugation to standard forms, element
//! orders, and cyclic subgroup counting.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::field::{Field, FieldElem, ResidueSets};

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum GroupError {
    #[error("determinant must be +1 or -1 (mod N)")]
    BadDeterminant,
    #[error("failed to build a conjugating matrix (this indicates a bug)")]
    NotConjugable,
}

/// Which matrix group an operation is relative to: determinant +1 only, or
/// determinant ±1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Sl,
    Esl,
}

impl GroupKind {
    pub fn order(&self, n: u64) -> u64 {
        let sl = n * (n * n - 1);
        match self {
            GroupKind::Sl => sl,
            GroupKind::Esl => 2 * sl,
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Sl => write!(f, "sl"),
            GroupKind::Esl => write!(f, "esl"),
        }
    }
}

/// A 2×2 matrix (α, β; γ, δ) over Z_N with determinant ±1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElem {
    pub alpha: FieldElem,
    pub beta: FieldElem,
    pub gamma: FieldElem,
    pub delta: FieldElem,
}

impl GroupElem {
    pub fn new(
        alpha: FieldElem,
        beta: FieldElem,
        gamma: FieldElem,
        delta: FieldElem,
    ) -> Result<GroupElem, GroupError> {
        let m = GroupElem {
            alpha,
            beta,
            gamma,
            delta,
        };
        let det = m.det();
        let f = alpha.field();
        if det != f.one() && det != -f.one() {
            return Err(GroupError::BadDeterminant);
        }
        Ok(m)
    }

    pub fn from_ints(
        field: Field,
        a: i64,
        b: i64,
        c: i64,
        d: i64,
    ) -> Result<GroupElem, GroupError> {
        GroupElem::new(field.elem(a), field.elem(b), field.elem(c), field.elem(d))
    }

    pub fn identity(field: Field) -> GroupElem {
        GroupElem {
            alpha: field.one(),
            beta: field.zero(),
            gamma: field.zero(),
            delta: field.one(),
        }
    }

    /// The shear generator (1, 1; 0, 1).
    pub fn shear(field: Field) -> GroupElem {
        GroupElem::from_ints(field, 1, 1, 0, 1).expect("det 1")
    }

    /// The rotation generator (0, 1; -1, 0).
    pub fn rotation(field: Field) -> GroupElem {
        GroupElem::from_ints(field, 0, 1, -1, 0).expect("det 1")
    }

    /// The reflection diag(1, -1), determinant -1.
    pub fn reflection(field: Field) -> GroupElem {
        GroupElem::from_ints(field, 1, 0, 0, -1).expect("det -1")
    }

    pub fn field(&self) -> Field {
        self.alpha.field()
    }

    pub fn det(&self) -> FieldElem {
        self.alpha * self.delta - self.beta * self.gamma
    }

    /// +1 or -1 according to the determinant.
    pub fn det_sign(&self) -> i8 {
        if self.det() == self.field().one() {
            1
        } else {
            -1
        }
    }

    pub fn trace(&self) -> FieldElem {
        self.alpha + self.delta
    }

    pub fn mul(&self, rhs: &GroupElem) -> GroupElem {
        GroupElem {
            alpha: self.alpha * rhs.alpha + self.beta * rhs.gamma,
            beta: self.alpha * rhs.beta + self.beta * rhs.delta,
            gamma: self.gamma * rhs.alpha + self.delta * rhs.gamma,
            delta: self.gamma * rhs.beta + self.delta * rhs.delta,
        }
    }

    /// Inverse via the adjugate; valid because det = ±1.
    pub fn inverse(&self) -> GroupElem {
        let det_inv = self.det().inv().expect("det is ±1");
        GroupElem {
            alpha: self.delta * det_inv,
            beta: -self.beta * det_inv,
            gamma: -self.gamma * det_inv,
            delta: self.alpha * det_inv,
        }
    }

    pub fn neg(&self) -> GroupElem {
        GroupElem {
            alpha: -self.alpha,
            beta: -self.beta,
            gamma: -self.gamma,
            delta: -self.delta,
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == GroupElem::identity(self.field())
    }

    pub fn apply(&self, q: FieldElem, p: FieldElem) -> (FieldElem, FieldElem) {
        (
            self.alpha * q + self.beta * p,
            self.gamma * q + self.delta * p,
        )
    }

    /// Smallest k ≥ 1 with F^k = I.
    pub fn order(&self) -> u64 {
        let id = GroupElem::identity(self.field());
        let mut acc = *self;
        let mut k = 1;
        while acc != id {
            acc = acc.mul(self);
            k += 1;
        }
        k
    }

    pub fn pow(&self, exp: u64) -> GroupElem {
        let mut acc = GroupElem::identity(self.field());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Packs the four entries into one integer, for set-based deduplication.
    pub fn encode(&self) -> u64 {
        let n = self.field().modulus();
        ((self.alpha.value() * n + self.beta.value()) * n + self.gamma.value()) * n
            + self.delta.value()
    }
}

impl fmt::Debug for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} {}; {} {})",
            self.alpha, self.beta, self.gamma, self.delta
        )
    }
}

/// All group elements, in lexicographic entry order. Intended for N ≤ 19.
pub fn enumerate_group(field: Field, kind: GroupKind) -> Vec<GroupElem> {
    let n = field.modulus();
    let one = field.one();
    let neg_one = -one;
    let mut out = Vec::with_capacity(kind.order(n) as usize);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let m = GroupElem {
                        alpha: field.elem(a as i64),
                        beta: field.elem(b as i64),
                        gamma: field.elem(c as i64),
                        delta: field.elem(d as i64),
                    };
                    let det = m.det();
                    let keep = match kind {
                        GroupKind::Sl => det == one,
                        GroupKind::Esl => det == one || det == neg_one,
                    };
                    if keep {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

/// Conjugacy class label. `Standard` covers the classes fixed by determinant
/// and trace; `Barred` and `Scalar` only occur when t² − 4Δ = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConjClass {
    Standard { det: i8, trace: FieldElem },
    Barred { trace: FieldElem },
    Scalar { trace: FieldElem },
}

impl ConjClass {
    pub fn trace(&self) -> FieldElem {
        match self {
            ConjClass::Standard { trace, .. }
            | ConjClass::Barred { trace }
            | ConjClass::Scalar { trace } => *trace,
        }
    }

    /// Determinant of the class members. For barred and scalar classes this
    /// is forced by t² = 4Δ.
    pub fn det_sign(&self) -> i8 {
        match self {
            ConjClass::Standard { det, .. } => *det,
            ConjClass::Barred { trace } | ConjClass::Scalar { trace } => {
                let t = *trace;
                let four = t.field().elem(4);
                if t * t == four {
                    1
                } else {
                    -1
                }
            }
        }
    }

    /// Deterministic class representative: (0, -Δ; 1, t) for standard
    /// classes, (0, -t²/(4ν); ν, t) for barred ones, (t/2)·I for scalars.
    pub fn representative(&self, rs: &ResidueSets) -> GroupElem {
        let f = rs.field();
        match self {
            ConjClass::Standard { det, trace } => {
                let d = if *det == 1 { f.one() } else { -f.one() };
                GroupElem {
                    alpha: f.zero(),
                    beta: -d,
                    gamma: f.one(),
                    delta: *trace,
                }
            }
            ConjClass::Barred { trace } => {
                let t = *trace;
                let nu = rs.nu();
                let four_nu_inv = (f.elem(4) * nu).inv().expect("nonzero");
                GroupElem {
                    alpha: f.zero(),
                    beta: -(t * t * four_nu_inv),
                    gamma: nu,
                    delta: t,
                }
            }
            ConjClass::Scalar { trace } => {
                let half = f.elem(2).inv().expect("N odd");
                let s = *trace * half;
                GroupElem {
                    alpha: s,
                    beta: f.zero(),
                    gamma: f.zero(),
                    delta: s,
                }
            }
        }
    }

    /// Catalog sort key: (Δ, t, kind), with standard < barred < scalar.
    pub fn sort_key(&self) -> (i8, u64, u8) {
        let kind_rank = match self {
            ConjClass::Standard { .. } => 0,
            ConjClass::Barred { .. } => 1,
            ConjClass::Scalar { .. } => 2,
        };
        // +1 classes first
        let det_rank = if self.det_sign() == 1 { 0 } else { 1 };
        (det_rank, self.trace().value(), kind_rank)
    }

    /// Paper-style label, e.g. "C_0", "Cbar_2", "D_2", "C_{-1,3}".
    pub fn label(&self, kind: GroupKind) -> String {
        match self {
            ConjClass::Standard { det, trace } => match (kind, det) {
                (GroupKind::Sl, _) | (GroupKind::Esl, 1) => format!("C_{}", trace.value()),
                (GroupKind::Esl, _) => format!("C_{{-1,{}}}", trace.value()),
            },
            ConjClass::Barred { trace } => format!("Cbar_{}", trace.value()),
            ConjClass::Scalar { trace } => format!("D_{}", trace.value()),
        }
    }
}

/// Classify an element into its conjugacy class, relative to `kind`:
/// conjugation by determinant -1 matrices merges some classes, so the same
/// matrix may classify differently in SL and ESL when t² − 4Δ = 0.
pub fn classify(m: &GroupElem, rs: &ResidueSets, kind: GroupKind) -> ConjClass {
    let det = m.det();
    let f = m.field();
    let det_sign = if det == f.one() {
        1
    } else {
        assert_eq!(det, -f.one(), "group element with det ∉ {{±1}}");
        -1
    };
    if kind == GroupKind::Sl {
        assert_eq!(det_sign, 1, "SL classification of a det -1 element");
    }
    let t = m.trace();
    let disc = t * t - f.elem(4) * det;
    if !disc.is_zero() {
        return ConjClass::Standard {
            det: det_sign,
            trace: t,
        };
    }
    if m.beta.is_zero() && m.gamma.is_zero() {
        return ConjClass::Scalar { trace: t };
    }
    let standard = match kind {
        GroupKind::Sl => {
            // criterion: -β or γ ∈ Q
            let probe = if m.gamma.is_zero() { -m.beta } else { m.gamma };
            rs.is_residue(probe)
        }
        GroupKind::Esl => {
            if f.modulus() % 4 == 3 {
                // barred classes merge into the standard ones
                true
            } else {
                // criterion: β or γ ∈ Q
                let probe = if m.gamma.is_zero() { m.beta } else { m.gamma };
                rs.is_residue(probe)
            }
        }
    };
    if standard {
        ConjClass::Standard {
            det: det_sign,
            trace: t,
        }
    } else {
        ConjClass::Barred { trace: t }
    }
}

/// SL class sizes in closed form: N(N+1) when t²-4 is a residue, N(N-1)
/// when it is not, (N²-1)/2 for t²-4 = 0 and the barred classes, 1 for the
/// scalars.
pub fn sl_class_size_formula(class: &ConjClass, rs: &ResidueSets) -> u64 {
    let n = rs.field().modulus();
    match class {
        ConjClass::Standard { trace, .. } => {
            let f = rs.field();
            let disc = *trace * *trace - f.elem(4);
            if disc.is_zero() {
                (n * n - 1) / 2
            } else if rs.is_residue(disc) {
                n * (n + 1)
            } else {
                n * (n - 1)
            }
        }
        ConjClass::Barred { .. } => (n * n - 1) / 2,
        ConjClass::Scalar { .. } => 1,
    }
}

/// One row of the class catalog.
#[derive(Debug, Clone)]
pub struct ClassInfo {
    pub class: ConjClass,
    pub size: u64,
    pub subgroup_order: u64,
    pub representative: GroupElem,
}

/// The full conjugacy class catalog of a group, computed by exhaustive
/// enumeration (sizes) plus the deterministic representatives.
#[derive(Debug, Clone)]
pub struct ClassTable {
    pub kind: GroupKind,
    pub entries: Vec<ClassInfo>,
}

impl ClassTable {
    pub fn new(field: Field, kind: GroupKind) -> ClassTable {
        let rs = field.residue_sets();
        let mut sizes: BTreeMap<(i8, u64, u8), (ConjClass, u64)> = BTreeMap::new();
        for m in enumerate_group(field, kind) {
            let class = classify(&m, &rs, kind);
            sizes
                .entry(class.sort_key())
                .and_modify(|(_, c)| *c += 1)
                .or_insert((class, 1));
        }
        let entries = sizes
            .into_values()
            .map(|(class, size)| {
                let representative = class.representative(&rs);
                debug_assert_eq!(classify(&representative, &rs, kind), class);
                ClassInfo {
                    class,
                    size,
                    subgroup_order: representative.order(),
                    representative,
                }
            })
            .collect();
        ClassTable { kind, entries }
    }

    pub fn total_size(&self) -> u64 {
        self.entries.iter().map(|e| e.size).sum()
    }

    pub fn find(&self, class: &ConjClass) -> Option<&ClassInfo> {
        self.entries.iter().find(|e| e.class == *class)
    }
}

/// Constructive conjugation to a standard form: returns (S, R) with
/// F = S·R·S⁻¹ and det S = det F. R is (0, -Δ; 1, t) when t² - 4Δ ≠ 0,
/// (0, -Δ/k; k, t) with k = -β resp. k = γ when t² - 4Δ = 0, and F itself
/// when F is scalar.
pub fn standardize(m: &GroupElem, rs: &ResidueSets) -> Result<(GroupElem, GroupElem), GroupError> {
    let f = m.field();
    let det = m.det();
    if det != f.one() && det != -f.one() {
        return Err(GroupError::BadDeterminant);
    }
    let t = m.trace();
    let disc = t * t - f.elem(4) * det;

    if m.beta.is_zero() && m.gamma.is_zero() && m.alpha == m.delta {
        // scalars are central, so any S of the right determinant conjugates
        let s = if det == f.one() {
            GroupElem::identity(f)
        } else {
            GroupElem::reflection(f)
        };
        return Ok((s, *m));
    }

    let (x, y, k) = if !disc.is_zero() {
        let k = f.one();
        if m.gamma.is_zero() {
            // δ ≠ α here, else disc would vanish
            let x = (det + m.beta) * (m.delta - m.alpha).inv().expect("α ≠ δ");
            (x, f.one(), k)
        } else {
            // solve (x + (δ-α)y/2γ)² = (disc·y² + 4γΔ)/4γ²
            let four_gamma_det = f.elem(4) * m.gamma * det;
            let q = rs
                .square_witness(disc, four_gamma_det)
                .map_err(|_| GroupError::NotConjugable)?;
            let s = q.sqrt().ok_or(GroupError::NotConjugable)?;
            let r = (disc * q + four_gamma_det)
                .sqrt()
                .ok_or(GroupError::NotConjugable)?;
            let x = (r - s * (m.delta - m.alpha)) * (f.elem(2) * m.gamma).inv().expect("γ ≠ 0");
            (x, s, k)
        }
    } else if !m.beta.is_zero() {
        let k = -m.beta;
        let y = (t * m.beta + m.delta - m.alpha) * (f.elem(2) * m.beta).inv().expect("β ≠ 0");
        (f.one(), y, k)
    } else {
        let k = m.gamma;
        let x = (t * m.gamma - m.delta + m.alpha) * (f.elem(2) * m.gamma).inv().expect("γ ≠ 0");
        (x, f.one(), k)
    };

    let k_inv = k.inv().expect("k ≠ 0");
    let s_mat = GroupElem {
        alpha: x,
        beta: (m.alpha * x + m.beta * y) * k_inv,
        gamma: y,
        delta: (m.gamma * x + m.delta * y) * k_inv,
    };
    let rep = GroupElem {
        alpha: f.zero(),
        beta: -(det * k_inv),
        gamma: k,
        delta: t,
    };
    let ok = s_mat.det() == det && s_mat.mul(&rep).mul(&s_mat.inverse()) == *m;
    if !ok {
        return Err(GroupError::NotConjugable);
    }
    Ok((s_mat, rep))
}

/// Number of distinct cyclic subgroups of the given order, by generating a
/// subgroup from every element of that order and deduplicating as sets.
pub fn count_cyclic_subgroups(field: Field, order: u64, kind: GroupKind) -> usize {
    let mut subgroups: BTreeSet<Vec<u64>> = BTreeSet::new();
    for m in enumerate_group(field, kind) {
        if m.order() != order {
            continue;
        }
        let mut members: Vec<u64> = Vec::with_capacity(order as usize);
        let mut acc = m;
        for _ in 0..order {
            members.push(acc.encode());
            acc = acc.mul(&m);
        }
        members.sort_unstable();
        subgroups.insert(members);
    }
    subgroups.len()
}
