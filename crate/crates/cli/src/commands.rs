use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand};
use pml_core::koszul::{verify_generates, VolumeDensity};
use pml_core::modular::{hamiltonian_field, modular_field, verify_divergence_identity, volume_change_law};
use pml_core::structures::{casimir_basis, lie_poisson, liouville_identity, top_power};
use pml_core::sweep::Sweep;
use pml_core::{contract_form, Chart, Error, JacobiWitness, KoszulOperator, PoissonStructure};

use crate::constants::parse_constants;
use crate::expr::{parse_multivector, parse_rational, ParseError};
use crate::manifold::{parse_manifold, render_manifold, ManifoldFile};
use crate::print;

#[derive(Debug, Parser)]
#[command(name = "pml", version, about = "Exact computations with polynomial Poisson structures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the Jacobi identity; prints a failing component otherwise.
    Check { file: PathBuf },
    /// Print the modular vector field for the file's volume.
    Modular { file: PathBuf },
    /// Print a basis of polynomial Casimirs up to a degree.
    Casimirs {
        #[arg(long)]
        max_degree: u32,
        file: PathBuf,
    },
    /// Schouten bracket of two multivectors on the file's chart.
    Schouten {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Apply the Koszul operator of the file's volume.
    Koszul {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        input: String,
    },
    /// Hamiltonian vector field of a function.
    Hamiltonian {
        file: PathBuf,
        #[arg(long = "h", allow_hyphen_values = true)]
        h: String,
    },
    /// Top power of the bivector and its square-free factors.
    Divisor { file: PathBuf },
    /// Compare the modular field with the Liouville volume.
    Liouville { file: PathBuf },
    /// Lie-Poisson structure of a structure-constant file.
    Lie {
        #[arg(long)]
        constants: PathBuf,
    },
    /// Run the identity sweeps on the file's structure.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        sweep_seed: u64,
    },
}

/// Why a command stopped early.
#[derive(Debug)]
pub enum Failure {
    /// A mathematical check failed; the report goes to stdout.
    Check(String),
    /// Bad input; the message goes to stderr.
    Input(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Check(_) => 1,
            Failure::Input(_) => 2,
        }
    }
}

fn engine(e: Error) -> Failure {
    match e {
        Error::NotPoisson(_) | Error::NonFlatConnection | Error::DegenerateStructure => {
            Failure::Check(format!("{e}\n"))
        }
        other => Failure::Input(other.to_string()),
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Style {
    pub color: bool,
}

impl Style {
    fn status(&self, ok: bool) -> String {
        match (ok, self.color) {
            (true, true) => "\x1b[32mPASS\x1b[0m".into(),
            (false, true) => "\x1b[31mFAIL\x1b[0m".into(),
            (true, false) => "PASS".into(),
            (false, false) => "FAIL".into(),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn located(path: &Path, e: ParseError) -> Failure {
    Failure::Input(format!("{}: {e}", path.display()))
}

fn load(path: &Path) -> Result<ManifoldFile, Failure> {
    parse_manifold(&read(path)?).map_err(|e| located(path, e))
}

fn option(name: &str, e: ParseError) -> Failure {
    Failure::Input(format!("--{name}: column {}: {}", e.column, e.message))
}

fn witness_report(chart: &Chart, w: &JacobiWitness) -> String {
    let (i, j, k) = w.indices;
    format!(
        "not Poisson: Jacobi fails for ({}, {}, {}): {}\n",
        chart.name(i),
        chart.name(j),
        chart.name(k),
        print::rational(&w.value, chart)
    )
}

fn poisson(file: &ManifoldFile) -> Result<PoissonStructure, Failure> {
    match PoissonStructure::new(file.bivector()) {
        Ok(pi) => Ok(pi),
        Err(Error::NotPoisson(w)) => Err(Failure::Check(witness_report(&file.chart, &w))),
        Err(e) => Err(engine(e)),
    }
}

pub fn execute(command: &Command, style: Style) -> Result<String, Failure> {
    match command {
        Command::Check { file } => {
            let f = load(file)?;
            poisson(&f)?;
            Ok(format!("{} Jacobi identity holds\n", style.status(true)))
        }
        Command::Modular { file } => {
            let f = load(file)?;
            let pi = poisson(&f)?;
            let r = modular_field(&pi, &f.volume_density()).map_err(|e| match e {
                Error::NonFlatConnection => {
                    Failure::Check("the shift is not closed, so the connection is not flat\n".into())
                }
                other => engine(other),
            })?;
            if !r.is_poisson_checked {
                return Err(Failure::Check(format!(
                    "modular field {} does not preserve the structure\n",
                    print::exterior(&r.field)
                )));
            }
            Ok(format!("{}\n", print::exterior(&r.field)))
        }
        Command::Casimirs { max_degree, file } => {
            let f = load(file)?;
            let pi = poisson(&f)?;
            let basis = casimir_basis(&pi, *max_degree).map_err(engine)?;
            Ok(basis
                .iter()
                .map(|c| format!("{}\n", print::polynomial(c, &f.chart)))
                .collect())
        }
        Command::Schouten { file, u, v } => {
            let f = load(file)?;
            let u = parse_multivector(u, &f.chart).map_err(|e| option("u", e))?;
            let v = parse_multivector(v, &f.chart).map_err(|e| option("v", e))?;
            let b = pml_core::schouten(&u, &v).map_err(engine)?;
            Ok(format!("{}\n", print::exterior(&b)))
        }
        Command::Koszul { file, input } => {
            let f = load(file)?;
            let u = parse_multivector(input, &f.chart).map_err(|e| option("input", e))?;
            let d = KoszulOperator::from_volume(&f.volume_density()).map_err(engine)?;
            Ok(format!("{}\n", print::exterior(&d.apply(&u).map_err(engine)?)))
        }
        Command::Hamiltonian { file, h } => {
            let f = load(file)?;
            let h = parse_rational(h, &f.chart).map_err(|e| option("h", e))?;
            let pi = poisson(&f)?;
            let x = hamiltonian_field(&h, &pi).map_err(engine)?;
            Ok(format!("{}\n", print::exterior(&x)))
        }
        Command::Divisor { file } => {
            let f = load(file)?;
            let pi = PoissonStructure::unverified(f.bivector()).map_err(engine)?;
            let r = top_power(&pi).map_err(engine)?;
            let mut out = String::new();
            writeln!(out, "top: {}", print::polynomial(&r.top_polynomial, &f.chart)).unwrap();
            writeln!(out, "unit: {}", print::scalar(&r.unit)).unwrap();
            for (p, m) in &r.parts {
                writeln!(out, "factor: {} multiplicity {m}", print::polynomial(p, &f.chart)).unwrap();
            }
            Ok(out)
        }
        Command::Liouville { file } => {
            let f = load(file)?;
            let pi = poisson(&f)?;
            let r = liouville_identity(&pi, &f.volume_density()).map_err(engine)?;
            let mut out = String::new();
            writeln!(out, "liouville density: {}", print::rational(&r.liouville_density, &f.chart)).unwrap();
            writeln!(out, "ratio: {}", print::rational(&r.f, &f.chart)).unwrap();
            match r.sign {
                Some(s) => {
                    writeln!(out, "sign: {}", if s > 0 { "+1" } else { "-1" }).unwrap();
                    Ok(out)
                }
                None => {
                    writeln!(out, "sign: none").unwrap();
                    Err(Failure::Check(out))
                }
            }
        }
        Command::Lie { constants } => {
            let sc = parse_constants(&read(constants)?).map_err(|e| located(constants, e))?;
            let pi = lie_poisson(&sc).map_err(engine)?;
            let lambda: Vec<String> = sc.modular_character().iter().map(print::scalar).collect();
            let volume = pml_core::RationalFunction::one(sc.dim());
            let mut out = render_manifold(pi.chart(), pi.pi(), &volume);
            writeln!(out, "# lambda = ({})", lambda.join(", ")).unwrap();
            Ok(out)
        }
        Command::Verify { file, sweep_seed } => {
            let f = load(file)?;
            let pi = poisson(&f)?;
            verify(&f, &pi, *sweep_seed, style)
        }
    }
}

/// Seeded identity sweep on one structure. The divergence checks and the
/// rescaling law use the density without its shift.
fn verify(f: &ManifoldFile, pi: &PoissonStructure, seed: u64, style: Style) -> Result<String, Failure> {
    let chart: &Arc<Chart> = &f.chart;
    let n = chart.dim();
    let mut s = Sweep::new(seed);
    let d = KoszulOperator::from_volume(&f.volume_density()).map_err(engine)?;
    let plain = VolumeDensity::new(chart, f.volume.clone()).map_err(engine)?;
    let mut lines = Vec::new();
    let mut all = true;
    let mut record = |name: &str, passed: usize, total: usize| {
        all &= passed == total;
        lines.push(format!("{} {name} {passed}/{total}", style.status(passed == total)));
    };

    let mut passed = 0;
    let grades = [(0, 2), (1, 1), (1, 2), (2, 2)];
    for &(p, q) in &grades {
        for _ in 0..4 {
            let u = s.multivector(chart, p.min(n), 2);
            let v = s.multivector(chart, q.min(n), 2);
            passed += usize::from(verify_generates(&d, &u, &v).map_err(engine)?);
        }
    }
    record("generates", passed, 16);

    let mut passed = 0;
    let curvature = d.curvature();
    for t in 0..8 {
        let u = s.multivector(chart, t % (n + 1), 2);
        let lhs = d.square(&u).map_err(engine)?;
        let rhs = if n >= 2 {
            contract_form(&curvature, &u).map_err(engine)?
        } else {
            pml_core::Multivector::zero(chart)
        };
        passed += usize::from(lhs == rhs);
    }
    record("square", passed, 8);

    let mut passed = 0;
    for _ in 0..8 {
        let g = s.polynomial(n, 3, 3);
        passed += usize::from(verify_divergence_identity(pi, &plain, &g).map_err(engine)?);
    }
    record("divergence", passed, 8);

    let mut passed = 0;
    for _ in 0..4 {
        let g = s.nonzero_polynomial(n, 2, 3);
        passed += usize::from(volume_change_law(pi, &plain, &g.into()).map_err(engine)?);
    }
    record("rescaling", passed, 4);

    let out = lines.join("\n") + "\n";
    if all {
        Ok(out)
    } else {
        Err(Failure::Check(out))
    }
}
