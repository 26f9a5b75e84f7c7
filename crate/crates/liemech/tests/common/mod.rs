//! Golden-file cases shared by the CLI and acceptance tests.
//!
//! Set `LIEMECH_BLESS=1` to rewrite the stored outputs.
#![allow(dead_code)]

use std::path::{Path, PathBuf};

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    /// The command writes a CSV through `--out`.
    pub writes_file: bool,
}

pub const CASES: &[Case] = &[
    Case {
        name: "roots_a2_json",
        args: &["roots", "--family", "A", "--rank", "2", "--format", "json"],
        writes_file: false,
    },
    Case { name: "roots_b3_text", args: &["roots", "--family", "B", "--rank", "3"], writes_file: false },
    Case {
        name: "roots_c3_dot",
        args: &["roots", "--family", "C", "--rank", "3", "--format", "dot"],
        writes_file: false,
    },
    Case {
        name: "roots_d4_json",
        args: &["roots", "--family", "D", "--rank", "4", "--format", "json"],
        writes_file: false,
    },
    Case { name: "cohomology_galilei", args: &["cohomology", "--algebra", "galilei", "--witness"], writes_file: false },
    Case { name: "cohomology_sl3_h2", args: &["cohomology", "--algebra", "sl3", "--degree", "2"], writes_file: false },
    Case {
        name: "orbit_dim_cm3",
        args: &["orbit-dim", "--algebra", "cm3", "--point", r#"{"alpha": 1.5, "beta": -0.7}"#],
        writes_file: false,
    },
    Case {
        name: "orbit_dim_poincare",
        args: &["orbit-dim", "--algebra", "poincare", "--point", r#"{"m0c": 1.0, "s0": 0.5}"#],
        writes_file: false,
    },
    Case {
        name: "simulate_rigid_body",
        args: &[
            "simulate",
            "--model",
            "rigid-body",
            "--params",
            "[3, 2, 1]",
            "--mu0",
            "[1.0, 0.5, -0.3]",
            "--T",
            "0.5",
            "--dt",
            "0.01",
            "--method",
            "midpoint",
        ],
        writes_file: true,
    },
    Case {
        name: "simulate_heavy_top",
        args: &[
            "simulate",
            "--model",
            "heavy-top",
            "--params",
            r#"{"inertia": [3, 2, 1], "chi": [0, 0, 0.5]}"#,
            "--mu0",
            "[0.2, 0.1, 1.0, 0.0, 0.6, 0.8]",
            "--T",
            "0.5",
            "--dt",
            "0.01",
            "--method",
            "rk4",
        ],
        writes_file: true,
    },
    Case {
        name: "reconstruct_rigid_body",
        args: &[
            "reconstruct",
            "--model",
            "rigid-body",
            "--a0",
            "[[0, -1, 0], [1, 0, 0], [0, 0, 1]]",
            "--mu0",
            "[1.0, 0.5, -0.3]",
            "--T",
            "0.2",
            "--dt",
            "0.01",
        ],
        writes_file: true,
    },
    Case {
        name: "scan_rigid_body",
        args: &["scan", "--model", "rigid-body", "--r", "1", "--samples", "9", "--grid", "80", "--jobs", "3"],
        writes_file: true,
    },
    Case {
        name: "geodesic_check",
        args: &["geodesic-check", "--inertia", "[3, 2, 1]", "--omega0", "[0.3, 0.5, 0.7]", "--T", "1", "--dt", "0.001"],
        writes_file: false,
    },
    Case {
        name: "moment_check_se3",
        args: &["moment", "check", "--group", "se3", "--samples", "50", "--seed", "7"],
        writes_file: false,
    },
];

pub struct Outcome {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
    pub file: Option<Vec<u8>>,
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

/// Run `case` in-process, writing any CSV into `dir`.
pub fn run_case(case: &Case, dir: &Path) -> Outcome {
    let mut args: Vec<String> =
        std::iter::once("liemech".to_string()).chain(case.args.iter().map(|s| s.to_string())).collect();
    let out_path = dir.join(format!("{}.csv", case.name));
    if case.writes_file {
        args.push("--out".into());
        args.push(out_path.to_string_lossy().into_owned());
    }
    let (mut stdout, mut stderr) = (Vec::new(), Vec::new());
    let code = liemech::run(args, &mut stdout, &mut stderr);
    let file = case.writes_file.then(|| std::fs::read(&out_path).expect("output file written"));
    Outcome { code, stdout, stderr, file }
}

/// Compare against the stored golden outputs, or store them when blessing.
pub fn check_golden(case: &Case, got: &Outcome) -> Result<(), String> {
    if got.code != 0 {
        return Err(format!("{}: exit {} ({})", case.name, got.code, String::from_utf8_lossy(&got.stderr)));
    }
    let dir = golden_dir();
    let mut pairs = vec![(dir.join(format!("{}.stdout", case.name)), &got.stdout)];
    if let Some(f) = &got.file {
        pairs.push((dir.join(format!("{}.csv", case.name)), f));
    }
    let bless = std::env::var_os("LIEMECH_BLESS").is_some();
    for (path, bytes) in pairs {
        if bless {
            std::fs::write(&path, bytes).map_err(|e| format!("{}: {e}", path.display()))?;
            continue;
        }
        let want = std::fs::read(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        if &want != bytes {
            return Err(format!("{} differs from {}", case.name, path.display()));
        }
    }
    Ok(())
}
