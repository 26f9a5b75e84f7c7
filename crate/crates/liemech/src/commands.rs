//! Subcommand bodies. Each returns the text destined for standard output.

use std::path::Path;

use liemech_core::algebra::{CoElement, GroupElement, LieAlgebra};
use liemech_core::cohomology;
use liemech_core::dynamics::{
    bifurcation_values, integrate, level_topology, CollectiveHamiltonian, EulerSystem, HeavyTopParams, HeavyTopSystem,
    IntegratorConfig, Method, RigidBodyParams, Trajectory,
};
use liemech_core::geodesic::{self, EulerAngles, DEFAULT_ANGLES};
use liemech_core::moment::{self, ChartAction, ChartPoint, LeftMoment, RightMoment, SampleMode};
use liemech_core::reconstruction;
use liemech_core::roots::{build_root_system, Family};
use liemech_core::Error;
use nalgebra::{DVector, Vector3};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::cli::{MethodArg, Model, RootFormat};
use crate::error::{CliError, CliResult};
use crate::formats::{self, as_f64_vec, as_matrix, json_arg, Table};

/// Offset on either side of each bifurcation energy in `scan`.
pub const SCAN_EPS: f64 = 1e-3;

fn method(m: MethodArg) -> Method {
    match m {
        MethodArg::Rk4 => Method::Rk4,
        MethodArg::Midpoint => Method::ImplicitMidpoint,
    }
}

/// Round-off noise below this prints as zero in JSON witnesses.
const WITNESS_CLEAN: f64 = 1e-12;

fn clean(x: f64) -> f64 {
    if x.abs() < WITNESS_CLEAN {
        0.0
    } else {
        x
    }
}

fn rigid_params(flag: &str, v: &Value) -> CliResult<RigidBodyParams> {
    let arr = match v {
        Value::Object(m) => {
            m.get("inertia").ok_or_else(|| CliError::Input(format!("--{flag}: missing \"inertia\"")))?
        }
        other => other,
    };
    let i = as_f64_vec(flag, arr, Some(3))?;
    Ok(RigidBodyParams::new(i[0], i[1], i[2])?)
}

fn heavy_top_params(flag: &str, v: &Value) -> CliResult<HeavyTopParams> {
    let obj = v
        .as_object()
        .ok_or_else(|| CliError::Input(format!("--{flag}: expected {{\"inertia\": [..], \"chi\": [..]}}")))?;
    let inertia = rigid_params(flag, v)?;
    let chi = obj.get("chi").ok_or_else(|| CliError::Input(format!("--{flag}: missing \"chi\"")))?;
    let chi = as_f64_vec(flag, chi, Some(3))?;
    Ok(HeavyTopParams { inertia, chi: [chi[0], chi[1], chi[2]] })
}

fn output(table: &Table, out: Option<&Path>) -> CliResult<String> {
    match out {
        Some(path) => {
            formats::emit_csv(table, path)?;
            Ok(String::new())
        }
        None => table.to_string(),
    }
}

pub fn roots(family: char, rank: usize, format: RootFormat) -> CliResult<String> {
    let fam = Family::from_letter(family.to_ascii_uppercase())
        .ok_or_else(|| CliError::Input(format!("--family: expected A, B, C or D, got {family:?}")))?;
    let rs = build_root_system(fam, rank)?;
    Ok(match format {
        RootFormat::Json => formats::json_string(&formats::root_system_json(&rs)),
        RootFormat::Dot => rs.dynkin().to_dot(),
        RootFormat::Text => {
            let mut s = format!(
                "{}: {} roots, {} positive, {} simple\n",
                rs.name(),
                rs.roots.len(),
                rs.positive.len(),
                rs.simple.len()
            );
            for (&i, label) in rs.simple.iter().zip(&rs.simple_labels) {
                let coords: Vec<String> = rs.roots[i].iter().map(|q| q.to_string()).collect();
                s.push_str(&format!("simple {label}: ({})\n", coords.join(", ")));
            }
            s.push_str("cartan:\n");
            for row in rs.cartan_matrix() {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
                s.push_str(&cells.join(""));
                s.push('\n');
            }
            s.push_str(&rs.dynkin().to_text());
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s
        }
    })
}

pub fn cohomology(algebra: &str, degree: Option<u8>, witness: bool) -> CliResult<String> {
    let g = formats::load_algebra(algebra)?;
    let mut obj = Map::new();
    obj.insert("algebra".into(), json!(g.name()));
    obj.insert("dim".into(), json!(g.dim()));
    if degree.is_none_or(|d| d == 1) {
        obj.insert("h1".into(), json!(cohomology::h1_dim(&g)));
        if witness {
            let w: Vec<Vec<f64>> =
                cohomology::h1_witnesses(&g).iter().map(|c| c.coords.iter().map(|&x| clean(x)).collect()).collect();
            obj.insert("h1_witnesses".into(), json!(w));
        }
    }
    if degree.is_none_or(|d| d == 2) {
        obj.insert("h2".into(), json!(cohomology::h2_dim(&g)));
        if witness {
            let w: Vec<Vec<Vec<f64>>> = cohomology::h2_witnesses(&g)
                .iter()
                .map(|c| {
                    let m = c.to_matrix();
                    (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| clean(m[(i, j)])).collect()).collect()
                })
                .collect();
            obj.insert("h2_witnesses".into(), json!(w));
        }
    }
    if witness {
        obj.insert("basis_labels".into(), json!(g.basis_labels()));
    }
    Ok(formats::json_string(&Value::Object(obj)))
}

fn trajectory_table(header: &[&str], traj: &Trajectory) -> Table {
    let mut table = Table::new(header.iter().map(|s| s.to_string()).collect());
    for (k, x) in traj.states.iter().enumerate() {
        let mut row = vec![traj.time(k)];
        row.extend(x.iter());
        row.push(traj.energy[k]);
        row.extend(&traj.casimirs[k]);
        table.rows.push(row);
    }
    table
}

#[allow(clippy::too_many_arguments)]
pub fn simulate(
    model: Model,
    params: &str,
    mu0: &str,
    t_final: f64,
    dt: f64,
    m: MethodArg,
    out: Option<&Path>,
) -> CliResult<String> {
    let params = json_arg("params", params)?;
    let mu0 = json_arg("mu0", mu0)?;
    let cfg = IntegratorConfig::new(method(m), dt)?;
    let table = match model {
        Model::RigidBody => {
            let p = rigid_params("params", &params)?;
            let x0 = DVector::from_vec(as_f64_vec("mu0", &mu0, Some(3))?);
            let traj = integrate(&EulerSystem(p), &x0, t_final, &cfg)?;
            trajectory_table(&["t", "mu1", "mu2", "mu3", "energy", "casimir"], &traj)
        }
        Model::HeavyTop => {
            let p = heavy_top_params("params", &params)?;
            let x0 = DVector::from_vec(as_f64_vec("mu0", &mu0, Some(6))?);
            let traj = integrate(&HeavyTopSystem(p), &x0, t_final, &cfg)?;
            trajectory_table(
                &[
                    "t",
                    "mu1",
                    "mu2",
                    "mu3",
                    "gamma1",
                    "gamma2",
                    "gamma3",
                    "energy",
                    "casimir_gamma",
                    "casimir_mu_gamma",
                ],
                &traj,
            )
        }
    };
    output(&table, out)
}

#[allow(clippy::too_many_arguments)]
pub fn reconstruct(
    model: Model,
    params: &str,
    a0: &str,
    mu0: &str,
    t_final: f64,
    dt: f64,
    m: MethodArg,
    out: Option<&Path>,
) -> CliResult<String> {
    if model != Model::RigidBody {
        return Err(Error::Unsupported("reconstruction is available for the rigid body only".into()).into());
    }
    let p = rigid_params("params", &json_arg("params", params)?)?;
    let a0 = GroupElement::new(as_matrix("a0", &json_arg("a0", a0)?, 3, 3)?);
    let mu0 = CoElement::new(as_f64_vec("mu0", &json_arg("mu0", mu0)?, Some(3))?);
    let g = liemech_core::algebra::by_name("so3")?;
    g.check_membership(&a0)?;
    let cfg = IntegratorConfig::new(method(m), dt)?;
    let h = CollectiveHamiltonian::rigid_body(p);
    let rec = reconstruction::reconstruct_collective(&g, &h, &ChartPoint::new(a0, mu0), t_final, &cfg)?;

    let mut header: Vec<String> = vec!["t".into()];
    for i in 1..=3 {
        for j in 1..=3 {
            header.push(format!("a{i}{j}"));
        }
    }
    header.extend(["mu1", "mu2", "mu3", "momentum_residual", "energy"].map(String::from));
    let mut table = Table::new(header);
    for (k, m) in rec.chart.iter().enumerate() {
        let mut row = vec![rec.reduced.time(k)];
        for i in 0..3 {
            for j in 0..3 {
                row.push(m.a.matrix[(i, j)]);
            }
        }
        row.extend(m.mu.coords.iter());
        row.push(rec.momentum_residual[k]);
        row.push(rec.reduced.energy[k]);
        table.rows.push(row);
    }
    output(&table, out)
}

fn field(obj: &Map<String, Value>, key: &str) -> CliResult<f64> {
    obj.get(key).and_then(Value::as_f64).ok_or_else(|| CliError::Input(format!("--point: missing numeric \"{key}\"")))
}

fn parse_point(g: &LieAlgebra, v: &Value) -> CliResult<CoElement> {
    match v {
        Value::Array(_) => Ok(CoElement::new(as_f64_vec("point", v, Some(g.dim()))?)),
        Value::Object(obj) if obj.contains_key("alpha") => {
            Ok(moment::cm3_point(g, field(obj, "alpha")?, field(obj, "beta")?)?)
        }
        Value::Object(obj) if obj.contains_key("m0c") => {
            let spin = match obj.get("s0") {
                Some(Value::Array(_)) => {
                    let s = as_f64_vec("point", &obj["s0"], Some(3))?;
                    [s[0], s[1], s[2]]
                }
                Some(_) => [0.0, 0.0, field(obj, "s0")?],
                None => [0.0; 3],
            };
            Ok(moment::poincare_point(g, field(obj, "m0c")?, spin)?)
        }
        _ => Err(CliError::Input("--point: expected coordinates, {\"alpha\", \"beta\"} or {\"m0c\", \"s0\"}".into())),
    }
}

pub fn orbit_dim(algebra: &str, point: &str) -> CliResult<String> {
    let g = formats::load_algebra(algebra)?;
    let mu = parse_point(&g, &json_arg("point", point)?)?;
    Ok(format!("{}\n", moment::orbit_dimension(&g, &mu)?))
}

/// Energies sampled by `scan`: an even grid over the energy range of the
/// sphere plus `b +- SCAN_EPS` around every bifurcation value `b`, sorted.
pub fn scan_energies(bif: &[f64; 3], samples: usize) -> Vec<f64> {
    let (lo, hi) = (bif[0], bif[2]);
    let mut es: Vec<f64> = match samples {
        0 => Vec::new(),
        1 => vec![0.5 * (lo + hi)],
        n => (0..n).map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64).collect(),
    };
    for b in bif {
        es.push(b - SCAN_EPS);
        es.push(b + SCAN_EPS);
    }
    es.sort_by(f64::total_cmp);
    es.dedup();
    es
}

#[allow(clippy::too_many_arguments)]
pub fn scan(
    model: Model,
    r: f64,
    params: &str,
    samples: usize,
    grid: usize,
    jobs: usize,
    out: Option<&Path>,
) -> CliResult<String> {
    if model != Model::RigidBody {
        return Err(Error::Unsupported("scan is available for the rigid body only".into()).into());
    }
    if jobs == 0 {
        return Err(CliError::Input("--jobs must be at least 1".into()));
    }
    let p = rigid_params("params", &json_arg("params", params)?)?;
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::InvalidParameter("radius must be positive".into()).into());
    }
    let bif = bifurcation_values(&p, r);
    let energies = scan_energies(&bif, samples);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Format(format!("thread pool: {e}")))?;
    let results: Vec<_> =
        pool.install(|| energies.par_iter().map(|&e| level_topology(&p, r, e, grid)).collect::<Vec<_>>());
    let mut table = Table::new(["E", "below", "above", "level"].map(String::from).to_vec());
    for (&e, topo) in energies.iter().zip(results) {
        let t = topo?;
        table.rows.push(vec![e, t.below as f64, t.above as f64, t.level as f64]);
    }

    let row_at = |e: f64| {
        table.rows.iter().find(|row| row[0] == e).map(|row| json!([row[1] as u64, row[2] as u64, row[3] as u64]))
    };
    let transitions: Vec<Value> = bif
        .iter()
        .map(|&b| json!({ "energy": b, "below": row_at(b - SCAN_EPS), "above": row_at(b + SCAN_EPS) }))
        .collect();
    let mut summary = json!({
        "model": "rigid-body",
        "inertia": p.as_array(),
        "r": r,
        "grid": grid,
        "epsilon": SCAN_EPS,
        "bifurcation_values": bif,
        "transitions": transitions,
    });
    match out {
        Some(path) => formats::emit_csv(&table, path)?,
        None => {
            let rows: Vec<Value> = table
                .rows
                .iter()
                .map(|r| json!({"E": r[0], "below": r[1] as u64, "above": r[2] as u64, "level": r[3] as u64}))
                .collect();
            summary["samples"] = json!(rows);
        }
    }
    Ok(formats::json_string(&summary))
}

pub fn geodesic_check(inertia: &str, omega0: &str, t_final: f64, dt: f64, angles: Option<&str>) -> CliResult<String> {
    let p = rigid_params("inertia", &json_arg("inertia", inertia)?)?;
    let w = as_f64_vec("omega0", &json_arg("omega0", omega0)?, Some(3))?;
    let q0 = match angles {
        Some(s) => {
            let a = as_f64_vec("angles", &json_arg("angles", s)?, Some(3))?;
            EulerAngles::new(a[0], a[1], a[2])
        }
        None => DEFAULT_ANGLES,
    };
    let w0 = Vector3::new(w[0], w[1], w[2]);
    let report = geodesic::geodesic_check(&p, &q0, &w0, t_final, dt)?;
    Ok(formats::json_string(&json!({
        "inertia": p.as_array(),
        "omega0": w,
        "angles": [q0.psi, q0.theta, q0.phi],
        "T": t_final,
        "dt": dt,
        "steps": report.steps,
        "euler_vs_geodesic": report.euler_vs_geodesic,
        "factor2_vs_geodesic": report.factor2_vs_geodesic,
        "angular_momentum_drift": report.angular_momentum_drift,
        "matching_form": report.matching_form(),
    })))
}

pub fn moment_check(group: &str, samples: usize, seed: u64) -> CliResult<String> {
    let g = formats::load_algebra(group)?;
    let left = moment::equivariance_residual(&g, ChartAction::Lambda, &LeftMoment, samples, seed, SampleMode::Random)?;
    let right = moment::equivariance_residual(&g, ChartAction::Rho, &RightMoment, samples, seed, SampleMode::Random)?;
    Ok(formats::json_string(&json!({
        "group": g.name(),
        "samples": samples,
        "seed": seed,
        "lambda_left": left,
        "rho_right": right,
        "max": left.max(right),
    })))
}
