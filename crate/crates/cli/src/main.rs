mod format;
mod input;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use incomparable::cases::BoundaryCheck;
use incomparable::majorization::{classify_pair, incomparable_strict3};
use incomparable::qubit::{IppParams, UnitaryParams};
use incomparable::scenarios::{
    antiunitary_final_spectrum, build_chi_initial, chi_final, ipp_spectrum, pi_final,
};
use incomparable::state::{entropy_of_entanglement, schmidt_vector};
use incomparable::sweep::{sweep_complex, sweep_gamma, sweep_real, SOLVER_AGREEMENT_TOL};
use incomparable::{verify_prediction, Complex64, SweepRecord};

use format::{fmt_g, Cell, Format, Table};
use input::{normalize_pair, parse_complex, parse_state, parse_vector};

#[derive(Parser)]
#[command(
    name = "incomparable",
    version,
    about = "Schmidt spectra, majorization checks and parameter sweeps"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Schmidt vector and entanglement entropy of a state file.
    Schmidt { state_file: PathBuf },
    /// Classify a pair of Schmidt vectors given as comma-separated lists.
    CheckPair {
        #[arg(allow_hyphen_values = true)]
        vec_a: String,
        #[arg(allow_hyphen_values = true)]
        vec_b: String,
    },
    /// Apply the anti-unitary to the three-branch state and classify.
    GammaDemo {
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        theta: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        phi_a: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        phi_b: f64,
    },
    /// Apply the inner-product-preserving map with amplitudes (alpha, beta).
    IppDemo {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
    },
    /// Real amplitudes alpha = cos(phi), beta = sin(phi) on n grid points.
    SweepReal {
        #[arg(long)]
        n: usize,
    },
    /// alpha = cos(phi), beta = e^{i delta} sin(phi) on an n_phi x n_delta grid.
    SweepComplex {
        #[arg(long)]
        n_phi: usize,
        #[arg(long)]
        n_delta: usize,
    },
    /// Largest deviation of the anti-unitary's final spectrum over a grid.
    SweepGamma {
        #[arg(long)]
        n_theta: usize,
        #[arg(long)]
        n_a: usize,
        #[arg(long)]
        n_b: usize,
    },
    /// Case prediction from (A, B) next to the direct classification.
    CaseAnalyze {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
    },
}

enum Failure {
    Input(String),
    Contract(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Contract(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Contract(m) => m,
        }
    }
}

impl From<incomparable::Error> for Failure {
    fn from(e: incomparable::Error) -> Self {
        use incomparable::Error::*;
        match e {
            Dimension(_) | NotNormalized { .. } | Precondition(_) => Failure::Input(e.to_string()),
            _ => Failure::Contract(e.to_string()),
        }
    }
}

/// Output to print plus an optional contract failure found after computing
/// it; the output is still shown so the offending values are visible.
type Outcome = Result<(Table, Option<String>), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((table, violation)) => {
            let mut out = io::stdout().lock();
            if let Err(e) = table.write(cli.format, &mut out).and_then(|_| out.flush()) {
                eprintln!("error: {e}");
                return ExitCode::FAILURE;
            }
            match violation {
                Some(msg) => {
                    eprintln!("contract violation: {msg}");
                    ExitCode::from(3)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Schmidt { state_file } => schmidt(&state_file),
        Command::CheckPair { vec_a, vec_b } => check_pair(&vec_a, &vec_b),
        Command::GammaDemo {
            theta,
            phi_a,
            phi_b,
        } => gamma_demo(theta, phi_a, phi_b),
        Command::IppDemo { alpha, beta } => ipp_demo(&alpha, &beta),
        Command::SweepReal { n } => Ok((records(&sweep_real(n)?), None)),
        Command::SweepComplex { n_phi, n_delta } => {
            Ok((records(&sweep_complex(n_phi, n_delta)?), None))
        }
        Command::SweepGamma { n_theta, n_a, n_b } => gamma_sweep(n_theta, n_a, n_b),
        Command::CaseAnalyze { alpha, beta } => case_analyze(&alpha, &beta),
    }
}

fn schmidt(path: &PathBuf) -> Outcome {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    let state = parse_state(&text).map_err(Failure::Input)?;
    let v = schmidt_vector(&state)?;
    let table = Table::single(vec![
        ("dim_a", (state.dim_a() as f64).into()),
        ("dim_b", (state.dim_b() as f64).into()),
        ("schmidt", v.coefficients().into()),
        ("entropy", entropy_of_entanglement(&v).into()),
    ]);
    Ok((table, None))
}

fn check_pair(a: &str, b: &str) -> Outcome {
    let a = parse_vector(a).map_err(Failure::Input)?;
    let b = parse_vector(b).map_err(Failure::Input)?;
    let verdict = classify_pair(&a, &b);
    let strict3 = incomparable_strict3(&a, &b).map_or(Cell::Null, Cell::Bool);
    let table = Table::single(vec![
        ("label", verdict.label.as_str().into()),
        ("entropy_a", entropy_of_entanglement(&a).into()),
        ("entropy_b", entropy_of_entanglement(&b).into()),
        ("partial_sums_a", verdict.partial_sums_src.as_slice().into()),
        ("partial_sums_b", verdict.partial_sums_dst.as_slice().into()),
        ("strict3", strict3),
    ]);
    Ok((table, None))
}

fn max_gap(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn gamma_demo(theta: f64, phi_a: f64, phi_b: f64) -> Outcome {
    let p = UnitaryParams::new(theta, phi_a, phi_b)?;
    let initial = schmidt_vector(&build_chi_initial())?;
    let fin = schmidt_vector(&chi_final(&p)?)?;
    let deviation = max_gap(fin.coefficients(), &antiunitary_final_spectrum());
    let table = Table::single(vec![
        ("theta", theta.into()),
        ("phi_a", phi_a.into()),
        ("phi_b", phi_b.into()),
        ("schmidt_initial", initial.coefficients().into()),
        ("schmidt_final", fin.coefficients().into()),
        ("entropy_i", entropy_of_entanglement(&initial).into()),
        ("entropy_f", entropy_of_entanglement(&fin).into()),
        (
            "observed",
            classify_pair(&initial, &fin).label.as_str().into(),
        ),
        ("deviation", deviation.into()),
    ]);
    let violation = (deviation >= SOLVER_AGREEMENT_TOL)
        .then(|| format!("final spectrum deviates by {deviation:e} from the parameter-free value"));
    Ok((table, violation))
}

fn ipp_params(alpha: &str, beta: &str) -> Result<IppParams, Failure> {
    let a = parse_complex(alpha).map_err(Failure::Input)?;
    let b = parse_complex(beta).map_err(Failure::Input)?;
    let (a, b) = normalize_pair(a, b).map_err(Failure::Input)?;
    Ok(IppParams::new(a, b)?)
}

fn fmt_complex(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{sign}{}i", fmt_g(z.re), fmt_g(z.im.abs()))
}

fn ipp_demo(alpha: &str, beta: &str) -> Outcome {
    let p = ipp_params(alpha, beta)?;
    let check = verify_prediction(&p)?;
    let closed = ipp_spectrum(&p)?;
    let traced = schmidt_vector(&pi_final(&p)?)?;
    let gap = max_gap(&closed.eigenvalues, traced.coefficients());
    let [lam1, lam2, lam3] = closed.eigenvalues;
    let table = Table::single(vec![
        ("alpha", fmt_complex(p.alpha()).into()),
        ("beta", fmt_complex(p.beta()).into()),
        ("A", closed.big_a.into()),
        ("B", closed.big_b.into()),
        ("eigen_angle", closed.eigen_angle.into()),
        ("lam1", lam1.into()),
        ("lam2", lam2.into()),
        ("lam3", lam3.into()),
        ("solver_gap", gap.into()),
        ("entropy_i", check.entropy_initial.into()),
        ("entropy_f", check.entropy_final.into()),
        ("observed", check.observed.label.as_str().into()),
    ]);
    let violation = (gap > SOLVER_AGREEMENT_TOL)
        .then(|| format!("closed-form and Jacobi spectra differ by {gap:e}"));
    Ok((table, violation))
}

fn case_analyze(alpha: &str, beta: &str) -> Outcome {
    let p = ipp_params(alpha, beta)?;
    let check = verify_prediction(&p)?;
    let v = check.predicted;
    let b: Option<BoundaryCheck> = v.boundary;
    let table = Table::single(vec![
        ("A", check.big_a.into()),
        ("B", check.big_b.into()),
        ("case", v.case_id.as_str().into()),
        ("subcase", v.subcase.as_str().into()),
        ("predicted", v.predicted.as_str().into()),
        (
            "boundary_form",
            b.map_or(Cell::Null, |b| b.form.as_str().into()),
        ),
        ("condition_value", v.condition_value.into()),
        ("sum_form_value", b.map(|b| b.sum_form_value).into()),
        ("min_form_value", b.map(|b| b.min_form_value).into()),
        (
            "implies_incomparable",
            b.map_or(Cell::Null, |b| b.implies_incomparable.into()),
        ),
        ("observed", check.observed.label.as_str().into()),
        ("entropy_delta", check.entropy_delta.into()),
        ("agree", check.agree.into()),
        ("note", b.map_or(Cell::Null, |b| b.form.note().into())),
    ]);
    Ok((table, None))
}

fn gamma_sweep(n_theta: usize, n_a: usize, n_b: usize) -> Outcome {
    let s = sweep_gamma(n_theta, n_a, n_b)?;
    let table = Table::single(vec![
        ("points", (s.points as f64).into()),
        ("max_deviation", s.max_deviation.into()),
        ("worst_theta", s.worst.theta.into()),
        ("worst_phi_a", s.worst.phi_a.into()),
        ("worst_phi_b", s.worst.phi_b.into()),
    ]);
    let violation = (s.max_deviation >= SOLVER_AGREEMENT_TOL)
        .then(|| format!("final spectrum deviates by {:e}", s.max_deviation));
    Ok((table, violation))
}

const RECORD_HEADER: [&str; 12] = [
    "phi",
    "delta",
    "A",
    "B",
    "lam1",
    "lam2",
    "lam3",
    "entropy_i",
    "entropy_f",
    "observed",
    "predicted",
    "agree",
];

fn records(rs: &[SweepRecord]) -> Table {
    let mut t = Table::records(&RECORD_HEADER);
    for r in rs {
        t.push(vec![
            r.phi.into(),
            r.delta.into(),
            r.big_a.into(),
            r.big_b.into(),
            r.lam1.into(),
            r.lam2.into(),
            r.lam3.into(),
            r.entropy_initial.into(),
            r.entropy_final.into(),
            r.observed.as_str().into(),
            r.predicted.as_str().into(),
            r.agree.into(),
        ]);
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use incomparable::Error;

    #[test]
    fn exit_codes_by_error_kind() {
        assert_eq!(Failure::from(Error::Precondition("n".into())).code(), 2);
        assert_eq!(
            Failure::from(Error::NotNormalized { norm_sqr: 2.0 }).code(),
            2
        );
        assert_eq!(Failure::from(Error::Contract("gap".into())).code(), 3);
        assert_eq!(
            Failure::from(Error::NoConvergence { sweeps: 100 }).code(),
            3
        );
    }

    #[test]
    fn complex_display() {
        assert_eq!(fmt_complex(Complex64::new(0.5, -0.25)), "0.5-0.25i");
        assert_eq!(fmt_complex(Complex64::new(1.0, 0.0)), "1+0i");
    }
}
