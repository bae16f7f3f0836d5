//! Command-line surface and dispatch.

use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use steinberg_core::matgroup::{unipotent_group, FiniteGroup, GroupKind};
use steinberg_core::Field;

use crate::config::{field_from, require, CAP_ENV};
use crate::rows::*;
use crate::suites::{self, DEFAULT_SEED};
use crate::{Caps, Format, LabError, LabResult, Record};

#[derive(Debug, Parser)]
#[command(
    name = "steinberg-lab",
    version,
    about = "Exact verification suites for Steinberg modules and their group rings"
)]
pub struct Cli {
    #[command(flatten)]
    pub opts: Opts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Opts {
    /// Matrix size n.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Order of the field of definition.
    #[arg(long, global = true)]
    pub q: Option<u64>,
    /// Order of the coefficient field.
    #[arg(long, global = true)]
    pub ell: Option<u64>,
    /// Characteristic, with --e, as an alternative to --q.
    #[arg(long, global = true)]
    pub p: Option<u64>,
    /// Extension degree, with --p.
    #[arg(long, global = true)]
    pub e: Option<u32>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Cap on group orders and tuple counts.
    #[arg(long, global = true)]
    pub cap_group: Option<u128>,
    /// Cap on Chevalley–Warning scans.
    #[arg(long, global = true)]
    pub cap_scan: Option<u128>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Add elapsed_ms to every record.
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum KindArg {
    Gl,
    U,
    T,
    B,
}

impl From<KindArg> for GroupKind {
    fn from(k: KindArg) -> GroupKind {
        match k {
            KindArg::Gl => GroupKind::General,
            KindArg::U => GroupKind::Unipotent,
            KindArg::T => GroupKind::Torus,
            KindArg::B => GroupKind::Borel,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Field tables and axiom checks for F_q.
    Field,
    /// Enumerate GL_n, U_n, T_n or B_n over F_q.
    Group {
        #[arg(long, value_enum, default_value_t = KindArg::Gl)]
        kind: KindArg,
    },
    /// Reduced homology of the building of GL_n(F_q) over F_ell.
    Building,
    /// Steinberg module: dimension, irreducibility, gate, apartments.
    #[command(subcommand)]
    Steinberg(SteinbergCmd),
    /// Symmetric-polynomial identity checks.
    #[command(subcommand)]
    Identity(IdentityCmd),
    /// Group-ring radicals, counterexamples and coinvariants.
    #[command(subcommand)]
    Grpring(GrpringCmd),
    /// Chevalley–Warning solver and A-polynomial experiments.
    #[command(subcommand)]
    Cw(CwCmd),
    /// Subgroup census and word set of U_n(F_q) for m-tuples.
    Census {
        #[arg(long, default_value_t = 2)]
        m: usize,
    },
    /// Run one acceptance suite, or all of them.
    Suite { name: String },
}

#[derive(Debug, Subcommand)]
pub enum SteinbergCmd {
    /// Dimension of St(GL_n(F_q); F_ell).
    Dim,
    /// Irreducibility verdict with witness or certificate.
    Irreducible,
    /// The gate on every nonzero vector, or on seeded ones.
    Gate {
        #[arg(long, default_value_t = 500)]
        samples: usize,
        /// Sample even when the exhaustive pass fits.
        #[arg(long)]
        random: bool,
    },
    /// Apartment basis and the map to the group ring.
    Apartment {
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Equivariance of the map to the group ring under U and T.
    Equivariance,
}

#[derive(Debug, Subcommand)]
pub enum IdentityCmd {
    /// Symbolic check of the symmetric identity in n variables.
    Verify,
    /// Seeded numeric specializations.
    Numeric {
        #[arg(long, default_value_t = 1000)]
        count: usize,
    },
    /// Seeded instances of the membership lemma.
    LemmaCheck {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, value_delimiter = ',', default_values_t = [4u64, 9, 25])]
        moduli: Vec<u64>,
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
    },
}

#[derive(Debug, Args)]
pub struct GroupSpec {
    /// c<k>, a product such as c2xc2, or u for U_n(F_q).
    #[arg(long, default_value = "u")]
    pub group: String,
}

#[derive(Debug, Subcommand)]
pub enum GrpringCmd {
    /// Nilpotency of the augmentation ideal and the unique maximal ideal.
    Radical {
        #[command(flatten)]
        spec: GroupSpec,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Search for a proper T-stable left ideal with nonzero augmentation.
    Counterexample {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Coinvariant witnesses for seeded modules of an abelian group.
    Coinv {
        #[command(flatten)]
        spec: GroupSpec,
        #[arg(long, default_value_t = 100)]
        modules: usize,
        #[arg(long, default_value_t = 6)]
        max_dim: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CwCmd {
    /// Seeded systems with sum of degrees below the number of variables.
    Solve {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 5)]
        max_vars: usize,
    },
    /// Linear substitution into seeded A-polynomials.
    Substitute {
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
    /// Nonzero common zeros of seeded A-polynomials.
    ApolyZero {
        #[arg(long, default_value_t = 50)]
        count: usize,
    },
    /// One vanishing extension step for seeded S.
    Extend {
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
}

/// Parses `c<k>` factors joined by `x`, or `u`.
pub fn parse_group(spec: &str, o: &Opts, caps: &Caps) -> LabResult<FiniteGroup> {
    let spec = spec.to_ascii_lowercase();
    if spec == "u" {
        let f = field_from(o.q, o.p, o.e)?;
        return Ok(unipotent_group(&f, require(o.n, "--n")?, caps.group)?.cayley_table()?);
    }
    let mut g: Option<FiniteGroup> = None;
    for factor in spec.split('x') {
        let k: usize = factor
            .strip_prefix('c')
            .and_then(|k| k.parse().ok())
            .filter(|&k| k >= 1)
            .ok_or_else(|| LabError::usage(format!("bad group factor {factor:?}; expected c<k> or u")))?;
        let c = FiniteGroup::cyclic(k);
        g = Some(match g {
            Some(h) => FiniteGroup::direct_product(&h, &c),
            None => c,
        });
    }
    let g = g.expect("split yields a factor");
    if g.order() as u128 > caps.group {
        return Err(steinberg_core::Error::CapExceeded {
            what: "group order",
            size: g.order() as u128,
            cap: caps.group,
        }
        .into());
    }
    Ok(g)
}

fn n(o: &Opts) -> LabResult<usize> {
    let n = require(o.n, "--n")?;
    if n == 0 {
        return Err(LabError::usage("--n must be positive"));
    }
    Ok(n)
}

fn q(o: &Opts) -> LabResult<Field> {
    field_from(o.q, o.p, o.e)
}

fn ell(o: &Opts) -> LabResult<Field> {
    Ok(Field::with_order(require(o.ell, "--ell")?)?)
}

/// `--ell`, defaulting to F_2 for the Steinberg family.
fn ell_or_two(o: &Opts) -> LabResult<Field> {
    Ok(Field::with_order(o.ell.unwrap_or(2))?)
}

/// Runs `command` and returns its records; timings are attached when asked.
pub fn run(command: &Command, o: &Opts, caps: &Caps) -> LabResult<Vec<Record>> {
    let start = Instant::now();
    let mut records = dispatch(command, o, caps)?;
    if o.timings && !matches!(command, Command::Suite { .. }) {
        let ms = start.elapsed().as_millis() as u64;
        for r in &mut records {
            r.elapsed_ms = Some(ms);
        }
    }
    Ok(records)
}

fn dispatch(command: &Command, o: &Opts, caps: &Caps) -> LabResult<Vec<Record>> {
    let seed = o.seed;
    Ok(match command {
        Command::Field => vec![field_row(seed, &q(o)?)],
        Command::Group { kind } => vec![group_row(caps, seed, (*kind).into(), n(o)?, &q(o)?)?],
        Command::Building => vec![solomon_tits_row(caps, seed, n(o)?, &q(o)?, &[ell_or_two(o)?])?],
        Command::Steinberg(cmd) => {
            let (n, q, l) = (n(o)?, q(o)?, ell_or_two(o)?);
            match cmd {
                SteinbergCmd::Dim => vec![dim_row(caps, seed, n, &q, &l)?],
                SteinbergCmd::Irreducible => vec![irreducible_row(caps, seed, n, &q, &l, 0)?],
                SteinbergCmd::Gate { samples, random } => {
                    let mode = if *random { GateMode::Seeded(*samples) } else { GateMode::Auto(*samples) };
                    vec![gate_row(caps, seed, n, &q, &l, mode, 0)?]
                }
                SteinbergCmd::Apartment { samples } => vec![apartment_row(caps, seed, n, &q, &l, *samples, 0)?],
                SteinbergCmd::Equivariance => vec![equivariance_row(caps, seed, n, &q, &l)?],
            }
        }
        Command::Identity(cmd) => match cmd {
            IdentityCmd::Verify => vec![symbolic_row(seed, n(o)?)?],
            IdentityCmd::Numeric { count } => vec![numeric_row(seed, *count, 0)],
            IdentityCmd::LemmaCheck { count, moduli, max_dim } => {
                if moduli.iter().any(|&m| m < 2) || moduli.is_empty() {
                    return Err(LabError::usage("--moduli must be integers at least 2"));
                }
                vec![lemma_row(seed, *count, moduli, o.n.unwrap_or(4).max(1), (*max_dim).max(1), 0)?]
            }
        },
        Command::Grpring(cmd) => match cmd {
            GrpringCmd::Radical { spec, samples } => {
                let g = parse_group(&spec.group, o, caps)?;
                vec![grpring_row(seed, &spec.group, g, &ell(o)?, *samples, 0)]
            }
            GrpringCmd::Counterexample { samples } => {
                vec![counterexample_row(caps, seed, n(o)?, &q(o)?, &ell(o)?, *samples, 0)?]
            }
            GrpringCmd::Coinv { spec, modules, max_dim } => {
                let g = parse_group(&spec.group, o, caps)?;
                vec![coinv_row(seed, &spec.group, &g, &ell(o)?, *modules, (*max_dim).max(1), 0)?]
            }
        },
        Command::Cw(cmd) => match cmd {
            CwCmd::Solve { count, max_vars } => {
                if *max_vars < 2 {
                    return Err(LabError::usage("--max-vars must be at least 2"));
                }
                vec![cw_systems_row(caps, seed, &q(o)?, *count, *max_vars, 0)?]
            }
            CwCmd::Substitute { count } => vec![substitute_row(seed, &[q(o)?], *count, 0)?],
            CwCmd::ApolyZero { count } => vec![apoly_zero_row(caps, seed, &q(o)?, *count, 0)?],
            CwCmd::Extend { count } => vec![extend_row(caps, seed, n(o)?, &q(o)?, *count, 0)?],
        },
        Command::Census { m } => {
            let (n, q) = (n(o)?, q(o)?);
            vec![census_row(caps, seed, n, &q, *m)?, word_set_row(caps, seed, n, &q, *m)?]
        }
        Command::Suite { name } => {
            let selected: Vec<_> = if name == "all" {
                suites::SUITES.iter().collect()
            } else {
                vec![suites::find(name).ok_or_else(|| {
                    LabError::usage(format!("unknown suite {name:?}; known: all, {}", suites::names().join(", ")))
                })?]
            };
            let mut out = Vec::new();
            for s in selected {
                let report = suites::run_suite(s, caps, seed)?;
                let ms = report.elapsed.as_millis() as u64;
                out.extend(report.rows.into_iter().map(|mut r| {
                    if o.timings {
                        r.elapsed_ms = Some(ms);
                    }
                    r
                }));
            }
            out
        }
    })
}

/// Caps from the environment and flags.
pub fn caps(o: &Opts) -> LabResult<Caps> {
    let env = std::env::var(CAP_ENV).ok();
    Caps::resolve(env.as_deref(), o.cap_group, o.cap_scan)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("steinberg-lab").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn group_specs() {
        let cli = opts(&["field", "--n", "3", "--q", "2"]);
        let caps = Caps::default();
        assert_eq!(parse_group("c2xc2", &cli.opts, &caps).unwrap().order(), 4);
        assert_eq!(parse_group("C3", &cli.opts, &caps).unwrap().order(), 3);
        assert_eq!(parse_group("u", &cli.opts, &caps).unwrap().order(), 8);
        assert_eq!(parse_group("d4", &cli.opts, &caps).unwrap_err().exit_code(), 2);
        let tiny = Caps { group: 3, ..caps };
        assert_eq!(parse_group("c2xc2", &cli.opts, &tiny).unwrap_err().exit_code(), 3);
    }

    #[test]
    fn missing_parameters_are_usage_errors() {
        let cli = opts(&["steinberg", "dim", "--q", "2"]);
        assert_eq!(run(&cli.command, &cli.opts, &Caps::default()).unwrap_err().exit_code(), 2);
        let cli = opts(&["suite", "nope"]);
        assert_eq!(run(&cli.command, &cli.opts, &Caps::default()).unwrap_err().exit_code(), 2);
    }
}
