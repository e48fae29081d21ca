//! Runnable invariant suites. Each suite returns one line per checked
//! property; the CLI prints them and the acceptance tests assert on them.
//! Checks that are infeasible at the requested dimension are reported as
//! skipped (and count as passed).

use crate::coords::{NetSpace, PlaneLabel, RVector};
use crate::field::{Field, FieldError};
use crate::hilbert::{Hilbert, Line};
use crate::matgroup::count_cyclic_subgroups;
use crate::matgroup::{
    classify, enumerate_group, sl_class_size_formula, standardize, ClassTable, ConjClass,
    GroupElem, GroupKind,
};
use crate::modmat::ModMatrix;
use crate::orbits::{
    burnside_orbit_count, burnside_orbit_count_by_classes, fixed_point_table, orbit_decomposition,
    structural_checks, ActionSpace,
};
use crate::reference;
use crate::rng::SplitMix64;
use crate::spectra::{
    orbit_spectrum_consistency_with, plane_spectrum, spectra_census, Spectrum, DEFAULT_SPECTRUM_TOL,
};
use num_complex::Complex64;

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn of(name: &str, passed: bool, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }

    fn skip(name: &str, why: &str) -> Check {
        Check {
            name: name.into(),
            passed: true,
            detail: format!("skipped: {why}"),
        }
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

fn ref_class(f: Field, kind: reference::RefKind, t: i64) -> ConjClass {
    let trace = f.elem(t);
    match kind {
        reference::RefKind::Standard => {
            // determinant recovered from t² − 4Δ = 0 never applies here for
            // the reference rows with det recorded separately; small-trace
            // rows are all det +1
            ConjClass::Standard { det: 1, trace }
        }
        reference::RefKind::Barred => ConjClass::Barred { trace },
        reference::RefKind::Scalar => ConjClass::Scalar { trace },
    }
}

fn ref_row_class(f: Field, row: &reference::FixedRowRef) -> ConjClass {
    let trace = f.elem(row.t as i64);
    match row.kind {
        reference::RefKind::Standard => ConjClass::Standard {
            det: row.det,
            trace,
        },
        reference::RefKind::Barred => ConjClass::Barred { trace },
        reference::RefKind::Scalar => ConjClass::Scalar { trace },
    }
}

// ---------------------------------------------------------------------
// field suite
// ---------------------------------------------------------------------

pub fn field_suite(n: u64) -> Result<Vec<Check>, FieldError> {
    let f = Field::new(n)?;
    let rs = f.residue_sets();
    let mut checks = Vec::new();

    let half = ((n - 1) / 2) as usize;
    checks.push(Check::of(
        "field.residue_counts",
        rs.residues().len() == half && rs.non_residues().len() == half,
        format!(
            "|Q| = {}, |Qbar| = {}",
            rs.residues().len(),
            rs.non_residues().len()
        ),
    ));

    checks.push(Check::of(
        "field.minus_one_rule",
        rs.is_residue(-f.one()) == (n % 4 == 1),
        format!("-1 square: {}", rs.is_residue(-f.one())),
    ));

    let mut products_ok = true;
    for a in f.nonzero_elements() {
        for b in f.nonzero_elements() {
            let expected = rs.is_residue(a) == rs.is_residue(b);
            if rs.is_residue(a * b) != expected {
                products_ok = false;
            }
        }
    }
    checks.push(Check::of(
        "field.residue_products",
        products_ok,
        "QQ = Q, QbarQbar = Q, QQbar = Qbar",
    ));

    let mut closed_form_ok = true;
    for x in f.nonzero_elements() {
        let counted = rs.residue_intersection_count(x).unwrap() as u64;
        let expected = if n % 4 == 1 {
            if rs.is_residue(x) {
                (n - 1) / 4
            } else {
                (n - 5) / 4
            }
        } else {
            (n - 3) / 4
        };
        if counted != expected {
            closed_form_ok = false;
        }
    }
    checks.push(Check::of(
        "field.intersection_closed_form",
        closed_form_ok,
        "brute-force |Qbar ∩ (Qbar − x)| equals the closed form for all x",
    ));

    let mut witness_ok = true;
    for mu in f.nonzero_elements() {
        for nu in f.elements() {
            match rs.square_witness(mu, nu) {
                Ok(q) => {
                    let image = mu * q + nu;
                    let q_ok = q.is_zero() || rs.is_residue(q);
                    let i_ok = image.is_zero() || rs.is_residue(image);
                    if !q_ok || !i_ok {
                        witness_ok = false;
                    }
                }
                Err(_) => witness_ok = false,
            }
        }
    }
    checks.push(Check::of(
        "field.square_witness",
        witness_ok,
        "witness exists and is valid for all (mu, nu), mu ≠ 0",
    ));

    let inv_ok = f
        .nonzero_elements()
        .all(|x| x * x.inv().unwrap() == f.one() && x.inv().unwrap().inv().unwrap() == x);
    checks.push(Check::of(
        "field.inverse_round_trip",
        inv_ok,
        "x·x⁻¹ = 1 and (x⁻¹)⁻¹ = x",
    ));

    checks.push(Check::of(
        "field.primitive_element",
        rs.primitive_element().multiplicative_order() == Ok(n - 1),
        format!("theta = {}", rs.primitive_element()),
    ));

    Ok(checks)
}

// ---------------------------------------------------------------------
// group suite
// ---------------------------------------------------------------------

pub fn group_suite(n: u64, seed: u64) -> Result<Vec<Check>, FieldError> {
    let f = Field::new(n)?;
    let rs = f.residue_sets();
    let mut rng = SplitMix64::new(seed);
    let mut checks = Vec::new();

    let sl_table = ClassTable::new(f, GroupKind::Sl);
    let esl_table = ClassTable::new(f, GroupKind::Esl);

    let esl_expected = if n % 4 == 1 { 2 * n + 8 } else { 2 * n + 2 };
    checks.push(Check::of(
        "group.class_counts",
        sl_table.entries.len() as u64 == n + 4 && esl_table.entries.len() as u64 == esl_expected,
        format!(
            "SL: {}, ESL: {}",
            sl_table.entries.len(),
            esl_table.entries.len()
        ),
    ));

    checks.push(Check::of(
        "group.class_sizes_sum",
        sl_table.total_size() == GroupKind::Sl.order(n)
            && esl_table.total_size() == GroupKind::Esl.order(n),
        "class sizes sum to the group orders",
    ));

    let formula_ok = sl_table
        .entries
        .iter()
        .all(|info| info.size == sl_class_size_formula(&info.class, &rs));
    checks.push(Check::of(
        "group.sl_size_formulas",
        formula_ok,
        "enumerated SL class sizes match the closed forms",
    ));

    let elements = enumerate_group(f, GroupKind::Esl);
    let mut invariant_ok = true;
    for _ in 0..500 {
        let m = elements[rng.below(elements.len() as u64) as usize];
        let s = elements[rng.below(elements.len() as u64) as usize];
        let conj = s.mul(&m).mul(&s.inverse());
        if classify(&conj, &rs, GroupKind::Esl) != classify(&m, &rs, GroupKind::Esl) {
            invariant_ok = false;
        }
        if m.det_sign() == 1
            && s.det_sign() == 1
            && classify(&conj, &rs, GroupKind::Sl) != classify(&m, &rs, GroupKind::Sl)
        {
            invariant_ok = false;
        }
    }
    checks.push(Check::of(
        "group.classify_conjugation_invariant",
        invariant_ok,
        "500 seeded conjugations",
    ));

    let mut standardize_ok = true;
    let mut standardize_count = 0usize;
    if n <= 7 {
        for m in &elements {
            match standardize(m, &rs) {
                Ok((s, rep)) => {
                    if s.mul(&rep).mul(&s.inverse()) != *m || s.det() != m.det() {
                        standardize_ok = false;
                    }
                }
                Err(_) => standardize_ok = false,
            }
            standardize_count += 1;
        }
    } else {
        for _ in 0..500 {
            let m = elements[rng.below(elements.len() as u64) as usize];
            match standardize(&m, &rs) {
                Ok((s, rep)) => {
                    if s.mul(&rep).mul(&s.inverse()) != m || s.det() != m.det() {
                        standardize_ok = false;
                    }
                }
                Err(_) => standardize_ok = false,
            }
            standardize_count += 1;
        }
    }
    checks.push(Check::of(
        "group.standardize_round_trip",
        standardize_ok,
        format!("{standardize_count} elements: S·R·S⁻¹ = F with det S = det F"),
    ));

    let mut orders_ok = true;
    for (kind, t, expected) in reference::small_trace_orders(n) {
        let class = ref_class(f, kind, t);
        let order = class.representative(&rs).order();
        if order != expected {
            orders_ok = false;
        }
    }
    checks.push(Check::of(
        "group.small_trace_orders",
        orders_ok,
        "orders of the trace-{0,±1,±2} classes",
    ));

    if let Some(rows) = reference::remaining_trace_orders(n) {
        let mut ok = true;
        for (t, expected) in rows {
            let class = ConjClass::Standard {
                det: 1,
                trace: f.elem(t as i64),
            };
            if class.representative(&rs).order() != expected {
                ok = false;
            }
        }
        checks.push(Check::of(
            "group.remaining_trace_orders",
            ok,
            "orders of the trace-3..N−3 classes",
        ));
    }

    if n <= 13 {
        let unique_involution = count_cyclic_subgroups(f, 2, GroupKind::Sl) == 1;
        let sylow = count_cyclic_subgroups(f, n, GroupKind::Sl) as u64 == n + 1;
        let double = count_cyclic_subgroups(f, 2 * n, GroupKind::Sl) as u64 == n + 1;
        checks.push(Check::of(
            "group.cyclic_subgroup_counts",
            unique_involution && sylow && double,
            "1 subgroup of order 2, N+1 of order N, N+1 of order 2N",
        ));
    } else {
        checks.push(Check::skip(
            "group.cyclic_subgroup_counts",
            "requires n ≤ 13",
        ));
    }

    Ok(checks)
}

// ---------------------------------------------------------------------
// hilbert suite
// ---------------------------------------------------------------------

pub fn hilbert_suite(n: u64, seed: u64) -> Result<Vec<Check>, FieldError> {
    let f = Field::new(n)?;
    if n > 7 {
        return Ok(vec![Check::skip("hilbert.all", "requires n ≤ 7")]);
    }
    let h = Hilbert::new(f);
    let mut rng = SplitMix64::new(seed);
    let mut checks = Vec::new();

    let mut weyl = 0.0f64;
    for q in f.elements() {
        for p in f.elements() {
            let d = h.displacement(q, p);
            weyl = weyl.max(d.dagger().max_abs_diff(&h.displacement(-q, -p)));
            let tr = d.trace();
            let expected_tr = if q.is_zero() && p.is_zero() {
                n as f64
            } else {
                0.0
            };
            weyl = weyl.max((tr - Complex64::new(expected_tr, 0.0)).norm());
            for q2 in f.elements() {
                for p2 in f.elements() {
                    let lhs = d.mul(&h.displacement(q2, p2));
                    let rhs = h
                        .displacement(q + q2, p + p2)
                        .scale(h.weyl_product_phase(q, p, q2, p2));
                    weyl = weyl.max(lhs.max_abs_diff(&rhs));
                    let overlap = d.dagger().mul(&h.displacement(q2, p2)).trace();
                    let expected = if q == q2 && p == p2 { n as f64 } else { 0.0 };
                    weyl = weyl.max((overlap - Complex64::new(expected, 0.0)).norm());
                }
            }
        }
    }
    checks.push(Check::of(
        "hilbert.weyl_relations",
        weyl < 1e-12,
        format!("max defect {weyl:.2e} (tolerance 1e-12)"),
    ));

    let sl = enumerate_group(f, GroupKind::Sl);
    let mut cov = 0.0f64;
    for _ in 0..50 {
        let g = sl[rng.below(sl.len() as u64) as usize];
        let u = h.clifford_unitary(&g).unwrap();
        cov = cov.max(u.unitarity_defect());
        for q in f.elements() {
            for p in f.elements() {
                let lhs = u.mul(&h.displacement(q, p)).mul(&u.dagger());
                let (q2, p2) = g.apply(q, p);
                cov = cov.max(lhs.max_abs_diff(&h.displacement(q2, p2)));
            }
        }
    }
    checks.push(Check::of(
        "hilbert.covariance",
        cov < 1e-10,
        format!("max defect {cov:.2e} over 50 seeded elements (tolerance 1e-10)"),
    ));

    let table = h.mub_table();
    let mut unbiased = 0.0f64;
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
                    unbiased = unbiased.max((overlap - expected).abs());
                }
            }
        }
    }
    checks.push(Check::of(
        "hilbert.mub_unbiasedness",
        unbiased < 1e-10,
        format!("max defect {unbiased:.2e} (tolerance 1e-10)"),
    ));

    let d10 = h.displacement(f.one(), f.zero());
    let d01 = h.displacement(f.zero(), f.one());
    let mut ladder = 0.0f64;
    for m in 0..=n as usize {
        for r in 0..n {
            let r = f.elem(r as i64);
            let p = table.projector(m, r.value());
            let via10 = d10.mul(p).mul(&d10.dagger());
            let exp10 = if m == n as usize { r } else { r + f.one() };
            ladder = ladder.max(via10.max_abs_diff(table.projector(m, exp10.value())));
            let via01 = d01.mul(p).mul(&d01.dagger());
            let exp01 = if m == n as usize {
                r - f.one()
            } else {
                r - f.elem(m as i64)
            };
            ladder = ladder.max(via01.max_abs_diff(table.projector(m, exp01.value())));
        }
    }
    checks.push(Check::of(
        "hilbert.ladder_relations",
        ladder < 1e-10,
        format!("max defect {ladder:.2e}"),
    ));

    let mut norm_defect = 0.0f64;
    for _ in 0..50 {
        let rvec = RVector::new((0..=n).map(|_| f.elem(rng.below(n) as i64)).collect());
        let a = table.phase_point_operator(&rvec);
        norm_defect = norm_defect.max(a.hermiticity_defect());
        norm_defect = norm_defect.max((a.trace().re - 1.0).abs());
        norm_defect = norm_defect.max((a.mul(&a).trace().re - n as f64).abs() / n as f64);
    }
    checks.push(Check::of(
        "hilbert.phase_point_normalization",
        norm_defect < 1e-9,
        format!("max defect {norm_defect:.2e} over 50 seeded nets"),
    ));

    let mut line_defect = 0.0f64;
    let rvec = RVector::new((0..=n).map(|_| f.elem(rng.below(n) as i64)).collect());
    let plane = h.plane_operators(&rvec);
    for mub in 0..=n as usize {
        let mut striation_sum = crate::cmatrix::CMatrix::zeros(n as usize);
        for c in 0..n {
            let line = Line {
                mub,
                offset: f.elem(c as i64),
            };
            let p = h.line_projector(&line, &plane).unwrap();
            line_defect = line_defect.max(p.mul(&p).max_abs_diff(&p));
            let label = h.net_label_for_line(&rvec, &line);
            line_defect =
                line_defect.max(p.max_abs_diff(table.projector(label.m, label.r.value())));
            striation_sum.add_assign(&p);
        }
        line_defect = line_defect
            .max(striation_sum.max_abs_diff(&crate::cmatrix::CMatrix::identity(n as usize)));
    }
    checks.push(Check::of(
        "hilbert.line_projectors",
        line_defect < 1e-9,
        format!("max defect {line_defect:.2e} (tolerance 1e-9)"),
    ));

    let mut marginal_defect = 0.0f64;
    let mixed =
        crate::cmatrix::CMatrix::identity(n as usize).scale(Complex64::new(1.0 / n as f64, 0.0));
    let mub_state = table
        .projector(rng.below(n + 1) as usize, rng.below(n))
        .clone();
    for rho in [mixed, mub_state] {
        let w = h.wigner_distribution(&rho, &plane).unwrap();
        let total: f64 = w.iter().sum::<f64>() / n as f64;
        marginal_defect = marginal_defect.max((total - 1.0).abs());
        for mub in 0..=n as usize {
            for c in 0..n {
                let line = Line {
                    mub,
                    offset: f.elem(c as i64),
                };
                let avg: f64 = line
                    .points(f)
                    .iter()
                    .map(|pt| w[(pt.q.value() * n + pt.p.value()) as usize])
                    .sum::<f64>()
                    / n as f64;
                let expected = h
                    .line_projector(&line, &plane)
                    .unwrap()
                    .mul(&rho)
                    .trace()
                    .re;
                marginal_defect = marginal_defect.max((avg - expected).abs());
            }
        }
    }
    checks.push(Check::of(
        "hilbert.wigner_marginals",
        marginal_defect < 1e-9,
        format!("max defect {marginal_defect:.2e} (tolerance 1e-9)"),
    ));

    Ok(checks)
}

// ---------------------------------------------------------------------
// coords suite
// ---------------------------------------------------------------------

fn apply_action(ns: &NetSpace, m: &ModMatrix, r: &RVector) -> RVector {
    let f = ns.field();
    RVector::new(
        m.mul_vec(&r.values())
            .into_iter()
            .map(|v| f.elem(v as i64))
            .collect(),
    )
}

pub fn coords_suite(n: u64, seed: u64) -> Result<Vec<Check>, FieldError> {
    let f = Field::new(n)?;
    let ns = NetSpace::new(f);
    let mut rng = SplitMix64::new(seed);
    let mut checks = Vec::new();

    let sl = enumerate_group(f, GroupKind::Sl);
    let esl = enumerate_group(f, GroupKind::Esl);

    let mut hom_ok = true;
    for _ in 0..200 {
        let g1 = sl[rng.below(sl.len() as u64) as usize];
        let g2 = sl[rng.below(sl.len() as u64) as usize];
        let lhs = ns.net_action(&g1.mul(&g2)).unwrap();
        let rhs = ns
            .net_action(&g1)
            .unwrap()
            .mul(&ns.net_action(&g2).unwrap());
        if lhs != rhs {
            hom_ok = false;
        }
    }
    checks.push(Check::of(
        "coords.action_homomorphism",
        hom_ok,
        "200 seeded pairs",
    ));

    let mut mono_ok = true;
    for _ in 0..50 {
        let g = sl[rng.below(sl.len() as u64) as usize];
        let m = ns.net_action(&g).unwrap();
        for i in 0..ns.dim() {
            let row = (0..ns.dim()).filter(|&j| !m.get(i, j).is_zero()).count();
            let col = (0..ns.dim()).filter(|&j| !m.get(j, i).is_zero()).count();
            if row != 1 || col != 1 {
                mono_ok = false;
            }
        }
        if m.det() != f.one() {
            mono_ok = false;
        }
    }
    checks.push(Check::of(
        "coords.action_monomial_unimodular",
        mono_ok,
        "one entry per row/column, determinant 1",
    ));

    let c = ns.conjugation_action();
    let c_det_expected = if n % 4 == 1 { -f.one() } else { f.one() };
    checks.push(Check::of(
        "coords.conjugation_structure",
        c.mul(&c) == ModMatrix::identity(f, ns.dim()) && c.det() == c_det_expected,
        "involution with the dimension-dependent determinant sign",
    ));

    let mut ext_ok = true;
    for _ in 0..200 {
        let g1 = esl[rng.below(esl.len() as u64) as usize];
        let g2 = esl[rng.below(esl.len() as u64) as usize];
        let lhs = ns.ext_net_action(&g1.mul(&g2)).unwrap();
        let rhs = ns
            .ext_net_action(&g1)
            .unwrap()
            .mul(&ns.ext_net_action(&g2).unwrap());
        if lhs != rhs {
            ext_ok = false;
        }
    }
    checks.push(Check::of(
        "coords.extended_homomorphism",
        ext_ok,
        "200 seeded pairs",
    ));

    let mut block_ok = true;
    let mut probes: Vec<GroupElem> = vec![
        GroupElem::shear(f),
        GroupElem::rotation(f),
        GroupElem::reflection(f),
    ];
    for _ in 0..40 {
        probes.push(esl[rng.below(esl.len() as u64) as usize]);
    }
    for g in &probes {
        let a = ns.alpha_action(g).unwrap();
        for i in 2..ns.dim() {
            if !a.get(i, 0).is_zero() || !a.get(i, 1).is_zero() {
                block_ok = false;
            }
        }
    }
    checks.push(Check::of(
        "coords.plane_block_structure",
        block_ok,
        "translation block decouples from the plane block",
    ));

    let mut det_ok = true;
    for g in &probes {
        let a = ns.plane_action(g).unwrap();
        // det +1 always acts unimodularly; det −1 picks up the
        // conjugation sign, which is +1 exactly when N ≡ 1 (mod 4)
        let expected = if g.det_sign() == 1 || n % 4 == 1 {
            f.one()
        } else {
            -f.one()
        };
        if a.det() != expected {
            det_ok = false;
        }
    }
    checks.push(Check::of(
        "coords.plane_determinants",
        det_ok,
        "det 1 for det-1 elements; conjugation sign rule for det −1",
    ));

    let omega = ns.symplectic_form();
    let mut sympl_ok = omega.transpose() == omega.neg();
    for g in [GroupElem::shear(f), GroupElem::rotation(f)] {
        let u = ns.net_action(&g).unwrap();
        if u.transpose().mul(&omega).mul(&u) != omega {
            sympl_ok = false;
        }
    }
    checks.push(Check::of(
        "coords.symplectic_invariance",
        sympl_ok,
        "antisymmetric and exactly invariant under the generators",
    ));

    let plane_omega = ns.plane_symplectic_form();
    let mut plane_form_ok = true;
    for g in &probes {
        let a = ns.plane_action(g).unwrap();
        let transformed = a.transpose().mul(&plane_omega).mul(&a);
        let expected = if g.det_sign() == 1 {
            plane_omega.clone()
        } else {
            plane_omega.neg()
        };
        if transformed != expected {
            plane_form_ok = false;
        }
    }
    checks.push(Check::of(
        "coords.plane_form_invariance",
        plane_form_ok,
        "MᵀΩM = Ω for det +1 and −Ω for det −1, exactly",
    ));

    let basis = ns.canonical_symplectic_basis();
    let dim = ns.plane_dim();
    let mut t = ModMatrix::zeros(f, dim, dim);
    for (col, v) in basis.iter().enumerate() {
        for (row, &x) in v.iter().enumerate() {
            t.set(row, col, x);
        }
    }
    let canon = t.transpose().mul(&plane_omega).mul(&t);
    let mut canon_ok = true;
    let half = dim / 2;
    for i in 0..dim {
        for j in 0..dim {
            let expected = if j == i + half {
                f.one()
            } else if i == j + half {
                -f.one()
            } else {
                f.zero()
            };
            if canon.get(i, j) != expected {
                canon_ok = false;
            }
        }
    }
    checks.push(Check::of(
        "coords.canonical_basis",
        canon_ok,
        "the paired basis brings the plane form to (0, I; −I, 0)",
    ));

    if n <= 5 {
        let h = Hilbert::new(f);
        let random_rvec = |rng: &mut SplitMix64| {
            RVector::new((0..=n).map(|_| f.elem(rng.below(n) as i64)).collect())
        };

        let mut oracle = 0.0f64;
        for _ in 0..50 {
            let g = sl[rng.below(sl.len() as u64) as usize];
            let u = h.clifford_unitary(&g).unwrap();
            let m = ns.net_action(&g).unwrap();
            for _ in 0..20 {
                let r = random_rvec(&mut rng);
                let lhs = u.mul(&h.phase_point_operator(&r)).mul(&u.dagger());
                let rhs = h.phase_point_operator(&apply_action(&ns, &m, &r));
                oracle = oracle.max(lhs.max_abs_diff(&rhs));
            }
        }
        checks.push(Check::of(
            "coords.unitary_oracle",
            oracle < 1e-9,
            format!("U(F)·Â(r)·U(F)† = Â(M(F)·r), max defect {oracle:.2e}"),
        ));

        let mut anti = 0.0f64;
        let c = ns.conjugation_action();
        for _ in 0..50 {
            let r = random_rvec(&mut rng);
            let lhs = h.phase_point_operator(&r).conj();
            let rhs = h.phase_point_operator(&apply_action(&ns, &c, &r));
            anti = anti.max(lhs.max_abs_diff(&rhs));
        }
        checks.push(Check::of(
            "coords.antiunitary_oracle",
            anti < 1e-9,
            format!("conj(Â(r)) = Â(C·r), max defect {anti:.2e}"),
        ));

        let mut trans = 0.0f64;
        for _ in 0..50 {
            let r = random_rvec(&mut rng);
            let q0 = f.elem(rng.below(n) as i64);
            let p0 = f.elem(rng.below(n) as i64);
            let d = h.displacement(q0, p0);
            let lhs = d.mul(&h.phase_point_operator(&r)).mul(&d.dagger());
            let rhs = h.phase_point_operator(&ns.translate(&r, q0, p0));
            trans = trans.max(lhs.max_abs_diff(&rhs));
        }
        checks.push(Check::of(
            "coords.translation_oracle",
            trans < 1e-9,
            format!("D(q₀,p₀)·Â(r)·D† = Â(r + q₀e₀ − p₀e₁), max defect {trans:.2e}"),
        ));
    } else {
        checks.push(Check::skip("coords.unitary_oracle", "requires n ≤ 5"));
    }

    Ok(checks)
}

// ---------------------------------------------------------------------
// orbits suite
// ---------------------------------------------------------------------

pub fn orbits_suite(n: u64) -> Result<Vec<Check>, FieldError> {
    let f = Field::new(n)?;
    if n > 11 {
        return Ok(vec![Check::skip("orbits.all", "requires n ≤ 11")]);
    }
    let ns = NetSpace::new(f);
    let mut checks = Vec::new();

    let sl_burnside = burnside_orbit_count(&ns, GroupKind::Sl, ActionSpace::Planes);
    let esl_burnside = burnside_orbit_count(&ns, GroupKind::Esl, ActionSpace::Planes);
    let sl_ref = reference::SL_PLANE_ORBITS
        .iter()
        .find(|&&(m, _)| m == n)
        .map(|&(_, c)| c);
    let esl_ref = reference::ESL_PLANE_ORBITS
        .iter()
        .find(|&&(m, _)| m == n)
        .map(|&(_, c)| c);
    checks.push(Check::of(
        "orbits.burnside_reference",
        sl_ref.is_none_or(|c| c == sl_burnside) && esl_ref.is_none_or(|c| c == esl_burnside),
        format!("SL: {sl_burnside}, ESL: {esl_burnside}"),
    ));

    let mut class_sum_ok = true;
    for kind in [GroupKind::Sl, GroupKind::Esl] {
        for space in [ActionSpace::Nets, ActionSpace::Planes] {
            if burnside_orbit_count(&ns, kind, space)
                != burnside_orbit_count_by_classes(&ns, kind, space)
            {
                class_sum_ok = false;
            }
        }
    }
    checks.push(Check::of(
        "orbits.class_sum_crosscheck",
        class_sum_ok,
        "class-weighted sums equal brute-force sums on both spaces",
    ));

    if n <= 7 {
        let mut explicit_ok = true;
        let mut sizes_ok = true;
        for kind in [GroupKind::Sl, GroupKind::Esl] {
            let catalog = orbit_decomposition(&ns, kind);
            if catalog.count() != burnside_orbit_count(&ns, kind, ActionSpace::Planes) {
                explicit_ok = false;
            }
            if catalog.total_planes() != n.pow((n - 1) as u32) {
                explicit_ok = false;
            }
            for orbit in &catalog.orbits {
                if kind.order(n) % orbit.size != 0 {
                    sizes_ok = false;
                }
            }
        }
        checks.push(Check::of(
            "orbits.explicit_matches_burnside",
            explicit_ok,
            "explicit orbit counts and totals",
        ));
        checks.push(Check::of(
            "orbits.sizes_divide_group_order",
            sizes_ok,
            "every orbit size divides the acting group's order",
        ));

        if let Some(expected) = reference::sl_orbit_size_multiset(n) {
            let catalog = orbit_decomposition(&ns, GroupKind::Sl);
            let multiset: Vec<(u64, u64)> = catalog.size_multiset().into_iter().collect();
            checks.push(Check::of(
                "orbits.sl_size_multiset",
                multiset == expected,
                format!("{multiset:?}"),
            ));
        }
    } else {
        checks.push(Check::skip(
            "orbits.explicit_matches_burnside",
            "requires n ≤ 7",
        ));
    }

    if let Some(expected_rows) = reference::sl_fixed_point_rows(n) {
        let rows = fixed_point_table(&ns, GroupKind::Sl);
        let ok = expected_rows.len() == rows.len()
            && expected_rows.iter().zip(&rows).all(|(e, r)| {
                r.class == ref_row_class(f, e)
                    && r.size == e.size
                    && r.subgroup_order == e.order
                    && r.fixed_phase_points == e.fixed_points
                    && r.fixed_nets == e.fixed_nets
                    && r.fixed_planes == e.fixed_planes
            });
        checks.push(Check::of(
            "orbits.sl_fixed_point_rows",
            ok,
            format!("{} classes", rows.len()),
        ));

        let esl_rows: Vec<_> = fixed_point_table(&ns, GroupKind::Esl)
            .into_iter()
            .filter(|r| r.class.det_sign() == -1)
            .collect();
        let expected_esl = reference::esl_det_neg_fixed_point_rows(n).unwrap();
        let ok = expected_esl.len() == esl_rows.len()
            && expected_esl.iter().zip(&esl_rows).all(|(e, r)| {
                r.class == ref_row_class(f, e)
                    && r.size == e.size
                    && r.subgroup_order == e.order
                    && r.fixed_phase_points == e.fixed_points
                    && r.fixed_nets == e.fixed_nets
                    && r.fixed_planes == e.fixed_planes
            });
        checks.push(Check::of(
            "orbits.esl_fixed_point_rows",
            ok,
            format!("{} det −1 classes", esl_rows.len()),
        ));
    }

    for kind in [GroupKind::Sl, GroupKind::Esl] {
        for report in structural_checks(&ns, kind) {
            checks.push(Check::of(
                &format!("orbits.structure[{kind}].{}", report.claim),
                report.passed,
                report.detail,
            ));
        }
    }

    Ok(checks)
}

// ---------------------------------------------------------------------
// spectra suite
// ---------------------------------------------------------------------

pub fn spectra_suite(n: u64) -> Result<Vec<Check>, FieldError> {
    let f = Field::new(n)?;
    if n > 7 {
        return Ok(vec![Check::skip("spectra.all", "requires n ∈ {3, 5, 7}")]);
    }
    let ns = NetSpace::new(f);
    let h = Hilbert::new(f);
    let mut rng = SplitMix64::new(1);
    let mut checks = Vec::new();

    let census = match spectra_census(&h, &ns, DEFAULT_SPECTRUM_TOL) {
        Ok(c) => c,
        Err(e) => {
            checks.push(Check::of("spectra.census", false, e.to_string()));
            return Ok(checks);
        }
    };

    let mut sums_ok = true;
    for class in &census.classes {
        let s: f64 = class.eigenvalues.iter().sum();
        let s2: f64 = class.eigenvalues.iter().map(|x| x * x).sum();
        if (s - 1.0).abs() > 1e-8 || (s2 - n as f64).abs() > 1e-7 {
            sums_ok = false;
        }
    }
    checks.push(Check::of(
        "spectra.eigenvalue_sums",
        sums_ok,
        "Σλ = 1 and Σλ² = N for every census class",
    ));

    let expected_classes = reference::SPECTRUM_CLASS_COUNTS
        .iter()
        .find(|&&(m, _)| m == n)
        .map(|&(_, c)| c)
        .unwrap();
    checks.push(Check::of(
        "spectra.class_count",
        census.classes.len() as u64 == expected_classes,
        format!("{} distinct spectra", census.classes.len()),
    ));

    if n == 5 {
        let mut values_ok = true;
        let mut counts_ok = census.classes.len() == reference::CENSUS_N5.len();
        for (class, (expected, count)) in census.classes.iter().zip(reference::CENSUS_N5.iter()) {
            for (a, b) in class.eigenvalues.iter().zip(expected.iter()) {
                if (a - b).abs() > 1e-4 {
                    values_ok = false;
                }
            }
            if class.count != *count {
                counts_ok = false;
            }
        }
        checks.push(Check::of(
            "spectra.census_reference_n5",
            values_ok && counts_ok,
            "eigenvalues within 1e-4 of the published census, counts exact",
        ));
    }
    if n == 3 {
        let singlet = &census.classes[0];
        let golden = &census.classes[1];
        let phi = reference::GOLDEN_RATIO;
        let ok = singlet.count == 1
            && golden.count == 8
            && Spectrum::new(singlet.eigenvalues.clone()).max_diff(&[-1.0, 1.0, 1.0]) < 1e-8
            && Spectrum::new(golden.eigenvalues.clone()).max_diff(&[1.0 - phi, 0.0, phi]) < 1e-5;
        checks.push(Check::of(
            "spectra.census_reference_n3",
            ok,
            "{(−1,1,1)} once and the golden-ratio spectrum eight times",
        ));
    }

    let twice_order = 2 * GroupKind::Sl.order(n);
    let div_ok = census.classes.iter().all(|c| twice_order % c.count == 0);
    checks.push(Check::of(
        "spectra.counts_divide_twice_group_order",
        div_ok,
        "every census count divides 2·N(N²−1)",
    ));

    let mut plane_invariance = 0.0f64;
    for _ in 0..10 {
        let idx = rng.below(n.pow(ns.plane_dim() as u32));
        let label = PlaneLabel::from_index(f, idx);
        let rvec = ns.plane_to_rvector(&label);
        let plane = h.plane_operators(&rvec);
        let reference_spec = plane_spectrum(&h, &ns, &label);
        for (_, op) in plane.iter() {
            let s = Spectrum::new(crate::spectra::hermitian_eigenvalues(op).unwrap());
            plane_invariance = plane_invariance.max(reference_spec.max_diff(s.values()));
        }
    }
    checks.push(Check::of(
        "spectra.plane_invariance",
        plane_invariance < 1e-9,
        format!("max spread {plane_invariance:.2e} across sampled planes"),
    ));

    let generators = [
        GroupElem::shear(f),
        GroupElem::rotation(f),
        GroupElem::reflection(f),
    ];
    let mut label_invariance_ok = true;
    for _ in 0..50 {
        let idx = rng.below(n.pow(ns.plane_dim() as u32));
        let label = PlaneLabel::from_index(f, idx);
        let base_class = census.assignment[idx as usize];
        for g in &generators {
            let action = ns.plane_action(g).unwrap();
            let moved = action.mul_vec(&label.values());
            let moved_label =
                PlaneLabel::new(moved.into_iter().map(|v| f.elem(v as i64)).collect());
            if census.assignment[moved_label.index() as usize] != base_class {
                label_invariance_ok = false;
            }
        }
    }
    checks.push(Check::of(
        "spectra.label_action_invariance",
        label_invariance_ok,
        "spectrum class is constant along generator moves (50 seeded planes)",
    ));

    let report = orbit_spectrum_consistency_with(&census, &ns);
    checks.push(Check::of(
        "spectra.orbit_agreement",
        report.agrees(),
        format!(
            "{} orbits vs {} spectrum classes, homogeneous: {}, degenerate pairs: {}",
            report.orbit_count,
            report.spectrum_class_count,
            report.homogeneous,
            report.degenerate_orbit_pairs.len()
        ),
    ));

    Ok(checks)
}

/// Every suite at once.
pub fn all_suites(n: u64, seed: u64) -> Result<Vec<Check>, FieldError> {
    let mut checks = field_suite(n)?;
    checks.extend(group_suite(n, seed)?);
    checks.extend(hilbert_suite(n, seed)?);
    checks.extend(coords_suite(n, seed)?);
    checks.extend(orbits_suite(n)?);
    checks.extend(spectra_suite(n)?);
    Ok(checks)
}
