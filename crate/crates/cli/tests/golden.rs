use std::path::{Path, PathBuf};
use std::process::Command;

use pml_cli::print;
use pml_cli::{parse_manifold, parse_multivector};

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

struct Case {
    name: String,
    args: Vec<String>,
    code: i32,
}

fn cases() -> Vec<Case> {
    let text = std::fs::read_to_string(golden_dir().join("cases")).unwrap();
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let parts: Vec<&str> = l.split('|').map(str::trim).collect();
            Case {
                name: parts[0].to_string(),
                args: parts[1].split_whitespace().map(String::from).collect(),
                code: parts[2].parse().unwrap(),
            }
        })
        .collect()
}

fn pml(args: &[String]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_pml"))
        .args(args)
        .current_dir(golden_dir())
        .env_remove("PML_COLOR")
        .output()
        .unwrap()
}

#[test]
fn golden_outputs_and_exit_codes() {
    let cases = cases();
    let mut failures = Vec::new();
    for case in &cases {
        let out = pml(&case.args);
        let expected = std::fs::read_to_string(golden_dir().join(format!("{}.out", case.name))).unwrap();
        let stdout = String::from_utf8(out.stdout).unwrap();
        let code = out.status.code().unwrap();
        if code != case.code || stdout != expected {
            failures.push(format!(
                "{}: exit {code} (want {}), stdout {stdout:?} (want {expected:?})",
                case.name, case.code
            ));
        }
        if code == 2 && out.stderr.is_empty() {
            failures.push(format!("{}: input error without a message", case.name));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn corpus_covers_every_exit_code() {
    let cases = cases();
    for code in 0..=2 {
        assert!(cases.iter().any(|c| c.code == code), "no case exits with {code}");
    }
    let files = std::fs::read_dir(golden_dir())
        .unwrap()
        .filter(|e| e.as_ref().unwrap().path().extension().is_some_and(|x| x == "pml"))
        .count();
    assert!(files >= 12, "only {files} manifold files");
}

#[test]
fn output_is_deterministic() {
    for case in cases().iter().filter(|c| c.code != 2) {
        assert_eq!(pml(&case.args).stdout, pml(&case.args).stdout, "{}", case.name);
    }
}

#[test]
fn color_toggle_only_changes_status_words() {
    let args: Vec<String> = ["check", "so3.pml"].map(String::from).to_vec();
    let colored = Command::new(env!("CARGO_BIN_EXE_pml"))
        .args(&args)
        .current_dir(golden_dir())
        .env("PML_COLOR", "1")
        .output()
        .unwrap();
    let text = String::from_utf8(colored.stdout).unwrap();
    assert!(text.contains("\x1b[32mPASS\x1b[0m"));
    assert_eq!(text.replace("\x1b[32m", "").replace("\x1b[0m", ""), String::from_utf8(pml(&args).stdout).unwrap());
}

#[test]
fn corpus_values_round_trip() {
    for entry in std::fs::read_dir(golden_dir()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_none_or(|x| x != "pml") {
            continue;
        }
        let Ok(file) = parse_manifold(&std::fs::read_to_string(&path).unwrap()) else {
            continue;
        };
        let pi = file.bivector();
        let text = print::exterior(&pi);
        assert_eq!(parse_multivector(&text, &file.chart).unwrap(), pi, "{}", path.display());
        let vol = print::rational(&file.volume, &file.chart);
        assert_eq!(pml_cli::parse_rational(&vol, &file.chart).unwrap(), file.volume);
        if let Some(s) = &file.shift {
            assert_eq!(&pml_cli::parse_form(&print::exterior(s), &file.chart).unwrap(), s);
        }
    }
    // multivector outputs of the corpus
    for case in cases().iter().filter(|c| c.code == 0) {
        let cmd = case.args[0].as_str();
        if !["modular", "hamiltonian", "schouten", "koszul"].contains(&cmd) {
            continue;
        }
        let file_arg = case.args.iter().find(|a| a.ends_with(".pml")).unwrap();
        let file = parse_manifold(&std::fs::read_to_string(golden_dir().join(file_arg)).unwrap()).unwrap();
        let out = String::from_utf8(pml(&case.args).stdout).unwrap();
        let value = parse_multivector(out.trim_end(), &file.chart).unwrap();
        assert_eq!(print::exterior(&value), out.trim_end(), "{}", case.name);
    }
}

#[test]
fn lie_output_is_a_manifold_file() {
    for name in ["so3.constants", "book3.constants"] {
        let out = pml(&["lie".into(), "--constants".into(), name.into()]);
        let text = String::from_utf8(out.stdout).unwrap();
        let file = parse_manifold(&text).unwrap();
        assert!(pml_core::PoissonStructure::new(file.bivector()).is_ok());
    }
}
