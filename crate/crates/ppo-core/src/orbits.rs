//! Fixed-point counting, orbit counts by averaging fixed points over the
//! group, and explicit orbit decomposition of the action on affine planes.

use std::collections::BTreeMap;

use crate::coords::{NetSpace, PlaneLabel};
use crate::matgroup::{enumerate_group, ClassTable, ConjClass, GroupElem, GroupKind};
use crate::modmat::ModMatrix;

/// The two label spaces the groups act on linearly: net labels (dimension
/// N+1) and affine-plane labels (dimension N−1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionSpace {
    Nets,
    Planes,
}

/// Number of fixed vectors of a linear map on Z_N^d: N^{dim ker(M − I)}.
pub fn fixed_count_linear(m: &ModMatrix) -> u64 {
    let n = m.field().modulus();
    let id = ModMatrix::identity(m.field(), m.rows());
    let nullity = m.sub(&id).nullity();
    n.pow(nullity as u32)
}

/// Number of phase-space points (q,p) with F(q,p) = (q,p), by direct scan.
pub fn fixed_points_phase_space(g: &GroupElem) -> u64 {
    let f = g.field();
    let mut count = 0;
    for q in f.elements() {
        for p in f.elements() {
            if g.apply(q, p) == (q, p) {
                count += 1;
            }
        }
    }
    count
}

pub fn fixed_nets_count(ns: &NetSpace, g: &GroupElem) -> u64 {
    fixed_count_linear(&ns.ext_net_action(g).expect("det ±1"))
}

pub fn fixed_planes_count(ns: &NetSpace, g: &GroupElem) -> u64 {
    fixed_count_linear(&ns.plane_action(g).expect("det ±1"))
}

fn action_matrix(ns: &NetSpace, g: &GroupElem, space: ActionSpace) -> ModMatrix {
    match space {
        ActionSpace::Nets => ns.ext_net_action(g).expect("det ±1"),
        ActionSpace::Planes => ns.plane_action(g).expect("det ±1"),
    }
}

/// Orbit count as the exact average of fixed-point counts over all group
/// elements. Panics if the sum is not divisible by the group order, which
/// would indicate a broken action.
pub fn burnside_orbit_count(ns: &NetSpace, kind: GroupKind, space: ActionSpace) -> u64 {
    let field = ns.field();
    let mut total: u128 = 0;
    for g in enumerate_group(field, kind) {
        total += fixed_count_linear(&action_matrix(ns, &g, space)) as u128;
    }
    let order = kind.order(field.modulus()) as u128;
    assert_eq!(total % order, 0, "fixed-point sum must be divisible by |G|");
    (total / order) as u64
}

/// Same average computed from one representative per conjugacy class,
/// weighted by class size. Cross-checks the class machinery against the
/// brute-force sum.
pub fn burnside_orbit_count_by_classes(ns: &NetSpace, kind: GroupKind, space: ActionSpace) -> u64 {
    let field = ns.field();
    let rs = field.residue_sets();
    let table = ClassTable::new(field, kind);
    let mut total: u128 = 0;
    for info in &table.entries {
        let rep = info.class.representative(&rs);
        total += info.size as u128 * fixed_count_linear(&action_matrix(ns, &rep, space)) as u128;
    }
    let order = kind.order(field.modulus()) as u128;
    assert_eq!(total % order, 0, "fixed-point sum must be divisible by |G|");
    (total / order) as u64
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub representative: PlaneLabel,
    pub size: u64,
}

/// Explicit orbit decomposition of the plane action, sorted by size then by
/// representative index.
#[derive(Debug, Clone)]
pub struct OrbitCatalog {
    pub n: u64,
    pub kind: GroupKind,
    pub orbits: Vec<Orbit>,
}

impl OrbitCatalog {
    pub fn count(&self) -> u64 {
        self.orbits.len() as u64
    }

    pub fn total_planes(&self) -> u64 {
        self.orbits.iter().map(|o| o.size).sum()
    }

    /// Multiset of orbit sizes: size → multiplicity.
    pub fn size_multiset(&self) -> BTreeMap<u64, u64> {
        let mut out = BTreeMap::new();
        for orbit in &self.orbits {
            *out.entry(orbit.size).or_insert(0) += 1;
        }
        out
    }
}

/// Flood-fill orbit decomposition over all N^{N−1} plane labels.
/// Feasible for N ≤ 7.
pub fn orbit_decomposition(ns: &NetSpace, kind: GroupKind) -> OrbitCatalog {
    orbit_decomposition_with_assignment(ns, kind).0
}

/// As [`orbit_decomposition`], also returning for every plane index the
/// index of its orbit in the sorted catalog.
pub fn orbit_decomposition_with_assignment(
    ns: &NetSpace,
    kind: GroupKind,
) -> (OrbitCatalog, Vec<u32>) {
    let field = ns.field();
    let n = field.modulus();
    let dim = ns.plane_dim();
    let states = n.pow(dim as u32) as usize;

    let mut generators: Vec<Vec<u64>> = vec![
        ns.plane_action(&GroupElem::shear(field))
            .expect("det 1")
            .raw()
            .to_vec(),
        ns.plane_action(&GroupElem::rotation(field))
            .expect("det 1")
            .raw()
            .to_vec(),
    ];
    if kind == GroupKind::Esl {
        generators.push(
            ns.plane_action(&GroupElem::reflection(field))
                .expect("det -1")
                .raw()
                .to_vec(),
        );
    }

    let mut assignment: Vec<u32> = vec![u32::MAX; states];
    let mut orbits: Vec<(u64, u64)> = Vec::new(); // (representative index, size)
    let mut queue: Vec<u64> = Vec::new();
    let mut digits = vec![0u64; dim];
    let mut image = vec![0u64; dim];

    for start in 0..states as u64 {
        if assignment[start as usize] != u32::MAX {
            continue;
        }
        let orbit_id = orbits.len() as u32;
        let mut size = 0u64;
        assignment[start as usize] = orbit_id;
        queue.clear();
        queue.push(start);
        while let Some(x) = queue.pop() {
            size += 1;
            let mut rem = x;
            for d in digits.iter_mut() {
                *d = rem % n;
                rem /= n;
            }
            for gen in &generators {
                for (i, slot) in image.iter_mut().enumerate() {
                    let mut acc = 0u64;
                    for (j, &dj) in digits.iter().enumerate() {
                        acc += gen[i * dim + j] * dj;
                    }
                    *slot = acc % n;
                }
                let mut y = 0u64;
                for &d in image.iter().rev() {
                    y = y * n + d;
                }
                if assignment[y as usize] == u32::MAX {
                    assignment[y as usize] = orbit_id;
                    queue.push(y);
                }
            }
        }
        orbits.push((start, size));
    }

    // sort by (size, representative index) and remap the assignment
    let mut order: Vec<usize> = (0..orbits.len()).collect();
    order.sort_by_key(|&i| (orbits[i].1, orbits[i].0));
    let mut remap = vec![0u32; orbits.len()];
    for (new_id, &old_id) in order.iter().enumerate() {
        remap[old_id] = new_id as u32;
    }
    for a in assignment.iter_mut() {
        *a = remap[*a as usize];
    }
    let sorted_orbits = order
        .iter()
        .map(|&i| Orbit {
            representative: PlaneLabel::from_index(field, orbits[i].0),
            size: orbits[i].1,
        })
        .collect();

    (
        OrbitCatalog {
            n,
            kind,
            orbits: sorted_orbits,
        },
        assignment,
    )
}

/// One row of the fixed-point catalog: per conjugacy class, the class data
/// and how many phase-space points, net labels, and planes a representative
/// leaves fixed.
#[derive(Debug, Clone)]
pub struct FixedPointRow {
    pub class: ConjClass,
    pub size: u64,
    pub subgroup_order: u64,
    pub fixed_phase_points: u64,
    pub fixed_nets: u64,
    pub fixed_planes: u64,
}

pub fn fixed_point_table(ns: &NetSpace, kind: GroupKind) -> Vec<FixedPointRow> {
    let field = ns.field();
    let rs = field.residue_sets();
    ClassTable::new(field, kind)
        .entries
        .iter()
        .map(|info| {
            let rep = info.class.representative(&rs);
            FixedPointRow {
                class: info.class,
                size: info.size,
                subgroup_order: info.subgroup_order,
                fixed_phase_points: fixed_points_phase_space(&rep),
                fixed_nets: fixed_nets_count(ns, &rep),
                fixed_planes: fixed_planes_count(ns, &rep),
            }
        })
        .collect()
}

/// Outcome of one structural claim.
#[derive(Debug, Clone)]
pub struct ClaimReport {
    pub claim: String,
    pub passed: bool,
    pub detail: String,
}

fn log_base(n: u64, mut value: u64) -> Option<u32> {
    let mut exp = 0;
    while value > 1 {
        if value % n != 0 {
            return None;
        }
        value /= n;
        exp += 1;
    }
    Some(exp)
}

/// Verifies the structural claims about the plane and net actions and
/// reports each outcome. Nothing here is assumed elsewhere.
pub fn structural_checks(ns: &NetSpace, kind: GroupKind) -> Vec<ClaimReport> {
    let field = ns.field();
    let n = field.modulus();
    let rs = field.residue_sets();
    let table = ClassTable::new(field, kind);
    let mut reports = Vec::new();

    // Unique fixed plane orbit of size 1 and unique orbit of size N²−1.
    if n <= 7 {
        let catalog = orbit_decomposition(ns, kind);
        let sizes = catalog.size_multiset();
        let singlets = sizes.get(&1).copied().unwrap_or(0);
        let plets = sizes.get(&(n * n - 1)).copied().unwrap_or(0);
        let passed = singlets == 1 && plets == 1;
        reports.push(ClaimReport {
            claim: "unique singlet and unique (N²−1)-plet".into(),
            passed,
            detail: format!(
                "{} orbits of size 1, {} of size {}",
                singlets,
                plets,
                n * n - 1
            ),
        });
    }

    // Odd order m ≥ 3 fixes N^k planes with N+1 = km + m', m' < m.
    let mut odd_ok = true;
    let mut odd_detail = String::new();
    for info in &table.entries {
        let m = info.subgroup_order;
        if m < 3 || m % 2 == 0 {
            continue;
        }
        let rep = info.class.representative(&rs);
        let fixed = fixed_planes_count(ns, &rep);
        let k = (n + 1) / m;
        let expected = n.pow(k as u32);
        if fixed != expected {
            odd_ok = false;
            odd_detail = format!(
                "class {:?}: order {}, fixed {} ≠ N^{}",
                info.class, m, fixed, k
            );
            break;
        }
    }
    reports.push(ClaimReport {
        claim: "odd-order elements fix N^⌊(N+1)/m⌋ planes".into(),
        passed: odd_ok,
        detail: if odd_ok {
            "all odd-order classes".into()
        } else {
            odd_detail
        },
    });

    if kind == GroupKind::Esl {
        // Order-2 determinant −1 elements fix N^{(N−1)/2} planes forming a
        // Lagrangian subspace of the plane label space.
        let omega = ns.plane_symplectic_form();
        let mut lagrangian_ok = true;
        let mut detail = String::from("no order-2 det −1 class found");
        for info in &table.entries {
            if info.subgroup_order != 2 {
                continue;
            }
            let rep = info.class.representative(&rs);
            if rep.det_sign() != -1 {
                continue;
            }
            let action = ns.plane_action(&rep).expect("det -1");
            let fixed = fixed_count_linear(&action);
            let expected = n.pow(((n - 1) / 2) as u32);
            let kernel = action
                .sub(&ModMatrix::identity(field, ns.plane_dim()))
                .kernel_basis();
            let mut isotropic = true;
            for u in &kernel {
                for v in &kernel {
                    let mut acc = 0u64;
                    for i in 0..ns.plane_dim() {
                        for j in 0..ns.plane_dim() {
                            acc = (acc + u[i] * omega.raw()[i * ns.plane_dim() + j] % n * v[j]) % n;
                        }
                    }
                    if acc % n != 0 {
                        isotropic = false;
                    }
                }
            }
            let ok = fixed == expected && kernel.len() as u64 == (n - 1) / 2 && isotropic;
            if !ok {
                lagrangian_ok = false;
            }
            detail = format!(
                "class {:?}: fixes {} planes, kernel dim {}, isotropic: {}",
                info.class,
                fixed,
                kernel.len(),
                isotropic
            );
            if !ok {
                break;
            }
        }
        reports.push(ClaimReport {
            claim: "order-2 det −1 elements fix N^{(N−1)/2} Lagrangian planes".into(),
            passed: lagrangian_ok,
            detail,
        });

        // If g (det −1) squares to h fixing N^{2k} net labels, g fixes N^k.
        let mut squares_ok = true;
        let mut squares_detail = String::from("all applicable det −1 classes");
        for info in &table.entries {
            let rep = info.class.representative(&rs);
            if rep.det_sign() != -1 {
                continue;
            }
            let square_fixed = fixed_nets_count(ns, &rep.mul(&rep));
            let Some(exp) = log_base(n, square_fixed) else {
                squares_ok = false;
                squares_detail = format!(
                    "class {:?}: square fixes {} (not a power of N)",
                    info.class, square_fixed
                );
                break;
            };
            if exp % 2 != 0 {
                continue;
            }
            let fixed = fixed_nets_count(ns, &rep);
            if fixed != n.pow(exp / 2) {
                squares_ok = false;
                squares_detail = format!(
                    "class {:?}: square fixes N^{}, element fixes {} ≠ N^{}",
                    info.class,
                    exp,
                    fixed,
                    exp / 2
                );
                break;
            }
        }
        reports.push(ClaimReport {
            claim: "det −1 element fixes N^k nets when its square fixes N^{2k}".into(),
            passed: squares_ok,
            detail: squares_detail,
        });
    }

    reports
}
