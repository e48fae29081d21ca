//! Subcommand implementations.

use std::path::PathBuf;

use num_complex::Complex64;

use ppo_core::catalog::{
    round_eigenvalue, CatalogBody, CatalogFile, ClassRow, FixedPointsRow, OrbitCatalogDoc,
    OrbitRow, SpectrumRow, MAX_DIMENSION,
};
use ppo_core::cmatrix::CMatrix;
use ppo_core::coords::{NetSpace, RVector};
use ppo_core::field::Field;
use ppo_core::hilbert::{Hilbert, MubLabel};
use ppo_core::matgroup::{ClassTable, ConjClass, GroupElem, GroupKind};
use ppo_core::orbits::{burnside_orbit_count, fixed_point_table, orbit_decomposition, ActionSpace};
use ppo_core::spectra::{spectra_census, CensusError};
use ppo_core::verify;

use crate::output::{render_csv, render_table, write_output};
use crate::{
    CmdError, FormatArg, GroupArg, MethodArg, SuiteArg, EXIT_TOLERANCE_COLLISION,
    EXIT_VERIFY_FAILED,
};

fn parse_dimension(n: u64) -> Result<Field, CmdError> {
    if n > MAX_DIMENSION {
        return Err(CmdError::bad_input(format!(
            "n = {n} is out of range (odd primes up to {MAX_DIMENSION})"
        )));
    }
    Field::new(n).map_err(|e| CmdError::bad_input(e.to_string()))
}

fn class_kind_name(class: &ConjClass) -> &'static str {
    match class {
        ConjClass::Standard { .. } => "standard",
        ConjClass::Barred { .. } => "barred",
        ConjClass::Scalar { .. } => "scalar",
    }
}

fn rep_matrix(rep: &GroupElem) -> [[u64; 2]; 2] {
    [
        [rep.alpha.value(), rep.beta.value()],
        [rep.gamma.value(), rep.delta.value()],
    ]
}

fn rep_display(rep: &[[u64; 2]; 2]) -> String {
    format!("({} {}; {} {})", rep[0][0], rep[0][1], rep[1][0], rep[1][1])
}

/// Emit a catalog: `--out` receives the JSON document (the canonical file
/// artifact); otherwise stdout gets the requested rendering.
fn emit(
    file: &CatalogFile,
    format: FormatArg,
    out: Option<&PathBuf>,
    headers: &[&str],
    cells: &[Vec<String>],
) -> Result<(), CmdError> {
    if let Some(path) = out {
        return Ok(write_output(Some(path), &file.to_json())?);
    }
    let content = match format {
        FormatArg::Json => file.to_json(),
        FormatArg::Csv => render_csv(headers, cells),
        FormatArg::Table => render_table(headers, cells),
    };
    write_output(None, &content)?;
    Ok(())
}

/// Five-decimal display without a "-0.00000" artifact.
fn fixed5(x: f64) -> String {
    let s = format!("{x:+.5}");
    if s == "-0.00000" {
        "+0.00000".to_string()
    } else {
        s
    }
}

// ---------------------------------------------------------------------
// classes
// ---------------------------------------------------------------------

pub fn classes(
    n: u64,
    group: GroupArg,
    format: FormatArg,
    out: Option<PathBuf>,
) -> Result<(), CmdError> {
    let field = parse_dimension(n)?;
    let kind = group.kind();
    let table = ClassTable::new(field, kind);
    let rows: Vec<ClassRow> = table
        .entries
        .iter()
        .map(|info| ClassRow {
            label: info.class.label(kind),
            det: info.class.det_sign(),
            trace: info.class.trace().value(),
            class_kind: class_kind_name(&info.class).to_string(),
            size: info.size,
            order: info.subgroup_order,
            representative: rep_matrix(&info.representative),
        })
        .collect();

    let headers = ["class", "size", "order", "representative"];
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.label.clone(),
                r.size.to_string(),
                r.order.to_string(),
                rep_display(&r.representative),
            ]
        })
        .collect();
    let file = CatalogFile::new(n, &kind.to_string(), CatalogBody::ClassTable(rows));
    emit(&file, format, out.as_ref(), &headers, &cells)
}

// ---------------------------------------------------------------------
// orbits
// ---------------------------------------------------------------------

pub fn orbits(
    n: u64,
    group: GroupArg,
    method: MethodArg,
    format: FormatArg,
    out: Option<PathBuf>,
) -> Result<(), CmdError> {
    let field = parse_dimension(n)?;
    let kind = group.kind();
    match method {
        MethodArg::Burnside if n > 13 => {
            return Err(CmdError::infeasible(format!(
                "orbit counting by group averaging needs n ≤ 13, got {n}"
            )));
        }
        MethodArg::Explicit if n > 7 => {
            return Err(CmdError::infeasible(format!(
                "explicit orbit decomposition needs n ≤ 7 ({n}^{} plane labels is too many)",
                n - 1
            )));
        }
        _ => {}
    }
    let ns = NetSpace::new(field);
    let doc = match method {
        MethodArg::Burnside => {
            let count = burnside_orbit_count(&ns, kind, ActionSpace::Planes);
            OrbitCatalogDoc {
                method: "burnside".into(),
                orbit_count: count,
                total_planes: n.pow((n - 1) as u32),
                orbits: None,
            }
        }
        MethodArg::Explicit => {
            let catalog = orbit_decomposition(&ns, kind);
            OrbitCatalogDoc {
                method: "explicit".into(),
                orbit_count: catalog.count(),
                total_planes: catalog.total_planes(),
                orbits: Some(
                    catalog
                        .orbits
                        .iter()
                        .map(|o| OrbitRow {
                            size: o.size,
                            representative: o.representative.values(),
                            representative_index: o.representative.index(),
                        })
                        .collect(),
                ),
            }
        }
    };

    let file = CatalogFile::new(n, &kind.to_string(), CatalogBody::OrbitCatalog(doc.clone()));
    if let Some(path) = &out {
        // the file gets the full catalog document; the count still prints
        write_output(Some(path), &file.to_json())?;
        println!("{}", doc.orbit_count);
        return Ok(());
    }
    let content = match format {
        FormatArg::Json => file.to_json(),
        FormatArg::Table => match &doc.orbits {
            None => format!("{}\n", doc.orbit_count),
            Some(orbits) => {
                let mut s = format!("{}\n", doc.orbit_count);
                let cells: Vec<Vec<String>> = orbits
                    .iter()
                    .map(|o| {
                        vec![
                            o.size.to_string(),
                            o.representative_index.to_string(),
                            format!(
                                "[{}]",
                                o.representative
                                    .iter()
                                    .map(|v| v.to_string())
                                    .collect::<Vec<_>>()
                                    .join(",")
                            ),
                        ]
                    })
                    .collect();
                s.push_str(&render_table(
                    &["size", "rep_index", "representative"],
                    &cells,
                ));
                s
            }
        },
        FormatArg::Csv => match &doc.orbits {
            None => format!("orbit_count\n{}\n", doc.orbit_count),
            Some(orbits) => {
                let cells: Vec<Vec<String>> = orbits
                    .iter()
                    .map(|o| {
                        vec![
                            o.size.to_string(),
                            o.representative_index.to_string(),
                            o.representative
                                .iter()
                                .map(|v| v.to_string())
                                .collect::<Vec<_>>()
                                .join(" "),
                        ]
                    })
                    .collect();
                render_csv(&["size", "rep_index", "representative"], &cells)
            }
        },
    };
    write_output(None, &content)?;
    Ok(())
}

// ---------------------------------------------------------------------
// spectra
// ---------------------------------------------------------------------

pub fn spectra(
    n: u64,
    tol: f64,
    format: FormatArg,
    out: Option<PathBuf>,
    cache_dir: PathBuf,
) -> Result<(), CmdError> {
    let field = parse_dimension(n)?;
    if n > 7 {
        return Err(CmdError::infeasible(format!(
            "the spectra census needs n ∈ {{3, 5, 7}}, got {n}"
        )));
    }
    if !(tol.is_finite() && tol > 0.0 && tol < 0.5) {
        return Err(CmdError::bad_input(format!(
            "tolerance {tol} is not usable"
        )));
    }

    let cache_path = cache_dir.join(format!(
        "spectra-n{n}-tol{tol:e}-v{}.json",
        env!("CARGO_PKG_VERSION")
    ));
    let cached: Option<String> = std::fs::read_to_string(&cache_path).ok().filter(|bytes| {
        CatalogFile::from_json(bytes).ok().is_some_and(|f| {
            f.validate().is_ok() && f.n == n && matches!(f.body, CatalogBody::SpectraCensus(_))
        })
    });

    let json = match cached {
        Some(bytes) => bytes,
        None => {
            let ns = NetSpace::new(field);
            let h = Hilbert::new(field);
            let census = spectra_census(&h, &ns, tol).map_err(|e| match e {
                CensusError::ToleranceCollision { .. } => CmdError {
                    code: EXIT_TOLERANCE_COLLISION,
                    message: e.to_string(),
                },
            })?;
            let rows: Vec<SpectrumRow> = census
                .classes
                .iter()
                .map(|c| SpectrumRow {
                    eigenvalues: c.eigenvalues.iter().map(|&x| round_eigenvalue(x)).collect(),
                    count: c.count,
                    example_plane: c.example.values(),
                })
                .collect();
            let file = CatalogFile::new(n, "esl", CatalogBody::SpectraCensus(rows));
            let json = file.to_json();
            std::fs::create_dir_all(&cache_dir)?;
            std::fs::write(&cache_path, &json)?;
            json
        }
    };

    if let Some(path) = &out {
        return Ok(write_output(Some(path), &json)?);
    }
    let content = match format {
        FormatArg::Json => json,
        FormatArg::Table | FormatArg::Csv => {
            let file = CatalogFile::from_json(&json)
                .map_err(|e| CmdError::bad_input(format!("corrupt census document: {e}")))?;
            let CatalogBody::SpectraCensus(rows) = &file.body else {
                return Err(CmdError::bad_input("census document has the wrong kind"));
            };
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.eigenvalues
                            .iter()
                            .map(|x| fixed5(*x))
                            .collect::<Vec<_>>()
                            .join(" "),
                        r.count.to_string(),
                        r.example_plane
                            .iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(","),
                    ]
                })
                .collect();
            if format == FormatArg::Csv {
                render_csv(&["spectrum", "count", "example_plane"], &cells)
            } else {
                render_table(&["spectrum", "count", "example_plane"], &cells)
            }
        }
    };
    write_output(None, &content)?;
    Ok(())
}

// ---------------------------------------------------------------------
// fixed points
// ---------------------------------------------------------------------

pub fn fixed_points(
    n: u64,
    group: GroupArg,
    format: FormatArg,
    out: Option<PathBuf>,
) -> Result<(), CmdError> {
    let field = parse_dimension(n)?;
    let kind = group.kind();
    let ns = NetSpace::new(field);
    // the SL table lists every class; the ESL table is conventionally the
    // determinant −1 half (the det +1 half is the SL table)
    let rows: Vec<FixedPointsRow> = fixed_point_table(&ns, kind)
        .into_iter()
        .filter(|r| kind == GroupKind::Sl || r.class.det_sign() == -1)
        .map(|r| FixedPointsRow {
            label: r.class.label(kind),
            det: r.class.det_sign(),
            trace: r.class.trace().value(),
            class_kind: class_kind_name(&r.class).to_string(),
            size: r.size,
            order: r.subgroup_order,
            fixed_phase_points: r.fixed_phase_points,
            fixed_nets: r.fixed_nets,
            fixed_planes: r.fixed_planes,
        })
        .collect();

    let headers = [
        "class",
        "size",
        "order",
        "fixed_points",
        "fixed_nets",
        "fixed_planes",
    ];
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.label.clone(),
                r.size.to_string(),
                r.order.to_string(),
                r.fixed_phase_points.to_string(),
                r.fixed_nets.to_string(),
                r.fixed_planes.to_string(),
            ]
        })
        .collect();
    let file = CatalogFile::new(n, &kind.to_string(), CatalogBody::FixedPoints(rows));
    emit(&file, format, out.as_ref(), &headers, &cells)
}

// ---------------------------------------------------------------------
// wigner
// ---------------------------------------------------------------------

fn parse_state(h: &Hilbert, spec: &str) -> Result<CMatrix, CmdError> {
    let field = h.field();
    let n = field.modulus();
    if spec == "mixed" {
        return Ok(CMatrix::identity(n as usize).scale(Complex64::new(1.0 / n as f64, 0.0)));
    }
    if let Some(rest) = spec.strip_prefix("mub:") {
        let parts: Vec<&str> = rest.split(',').collect();
        if parts.len() != 2 {
            return Err(CmdError::bad_input("state mub:m,r needs two components"));
        }
        let m = if parts[0].trim() == "inf" {
            n as usize
        } else {
            let m: u64 = parts[0]
                .trim()
                .parse()
                .map_err(|_| CmdError::bad_input("mub index must be an integer or 'inf'"))?;
            if m > n {
                return Err(CmdError::bad_input(format!(
                    "mub index {m} out of range 0..={n}"
                )));
            }
            m as usize
        };
        let r: u64 = parts[1]
            .trim()
            .parse()
            .map_err(|_| CmdError::bad_input("mub vector index must be an integer"))?;
        if r >= n {
            return Err(CmdError::bad_input(format!(
                "vector index {r} out of range 0..{n}"
            )));
        }
        return Ok(h.mub_projector(MubLabel {
            m,
            r: field.elem(r as i64),
        }));
    }
    if let Some(rest) = spec.strip_prefix("basis:") {
        let k: u64 = rest
            .trim()
            .parse()
            .map_err(|_| CmdError::bad_input("basis index must be an integer"))?;
        if k >= n {
            return Err(CmdError::bad_input(format!(
                "basis index {k} out of range 0..{n}"
            )));
        }
        let mut rho = CMatrix::zeros(n as usize);
        rho.set(k as usize, k as usize, Complex64::new(1.0, 0.0));
        return Ok(rho);
    }
    Err(CmdError::bad_input(format!(
        "unknown state {spec:?}; use \"mixed\", \"mub:m,r\", or \"basis:k\""
    )))
}

pub fn wigner(n: u64, rvec: &str, state: &str, format: FormatArg) -> Result<(), CmdError> {
    let field = parse_dimension(n)?;
    let h = Hilbert::new(field);
    let rvec = RVector::parse(field, rvec).map_err(|e| CmdError::bad_input(e.to_string()))?;
    let rho = parse_state(&h, state)?;
    let plane = h.plane_operators(&rvec);
    let w = h
        .wigner_distribution(&rho, &plane)
        .map_err(|e| CmdError::bad_input(e.to_string()))?;

    let content = match format {
        FormatArg::Json => {
            let values: Vec<Vec<f64>> = (0..n)
                .map(|q| {
                    (0..n)
                        .map(|p| round_eigenvalue(w[(q * n + p) as usize]))
                        .collect()
                })
                .collect();
            let doc = serde_json::json!({
                "n": n,
                "rvec": rvec.values(),
                "state": state,
                "values": values,
            });
            format!(
                "{}\n",
                serde_json::to_string_pretty(&doc).expect("serializes")
            )
        }
        FormatArg::Table => {
            let mut headers = vec!["q\\p".to_string()];
            headers.extend((0..n).map(|p| p.to_string()));
            let header_refs: Vec<&str> = headers.iter().map(|s| s.as_str()).collect();
            let cells: Vec<Vec<String>> = (0..n)
                .map(|q| {
                    let mut row = vec![q.to_string()];
                    row.extend((0..n).map(|p| {
                        let s = format!("{:+.6}", w[(q * n + p) as usize]);
                        if s == "-0.000000" {
                            "+0.000000".into()
                        } else {
                            s
                        }
                    }));
                    row
                })
                .collect();
            let mut s = render_table(&header_refs, &cells);
            let total: f64 = w.iter().sum::<f64>() / n as f64;
            s.push_str(&format!("total mass (sum/N): {total:.6}\n"));
            s
        }
        FormatArg::Csv => {
            let cells: Vec<Vec<String>> = (0..n)
                .flat_map(|q| (0..n).map(move |p| (q, p)))
                .map(|(q, p)| {
                    vec![
                        q.to_string(),
                        p.to_string(),
                        format!("{:.12e}", w[(q * n + p) as usize]),
                    ]
                })
                .collect();
            render_csv(&["q", "p", "w"], &cells)
        }
    };
    write_output(None, &content)?;
    Ok(())
}

// ---------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------

pub fn verify(n: u64, suite: SuiteArg, seed: u64) -> Result<(), CmdError> {
    parse_dimension(n)?;
    let suite_name = format!("{suite:?}").to_lowercase();
    println!(
        "verify n={n} suite={suite_name} seed={seed} tool={}",
        env!("CARGO_PKG_VERSION")
    );
    let checks = match suite {
        SuiteArg::Field => verify::field_suite(n),
        SuiteArg::Group => verify::group_suite(n, seed),
        SuiteArg::Hilbert => verify::hilbert_suite(n, seed),
        SuiteArg::Coords => verify::coords_suite(n, seed),
        SuiteArg::Orbits => verify::orbits_suite(n),
        SuiteArg::Spectra => verify::spectra_suite(n),
        SuiteArg::All => verify::all_suites(n, seed),
    }
    .map_err(|e| CmdError::bad_input(e.to_string()))?;

    let mut failed = 0;
    for check in &checks {
        let tag = if check.passed { "PASS" } else { "FAIL" };
        println!("[{tag}] {} — {}", check.name, check.detail);
        if !check.passed {
            failed += 1;
        }
    }
    println!("{} checks, {} failed", checks.len(), failed);
    if failed > 0 {
        return Err(CmdError {
            code: EXIT_VERIFY_FAILED,
            message: format!("{failed} of {} checks failed", checks.len()),
        });
    }
    Ok(())
}
