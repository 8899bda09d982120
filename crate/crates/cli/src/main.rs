//! `burnside`: tables of marks, Burnside ring membership and Artin exponents.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error, 3 when
//! `verify-main-theorem` finds a disagreeing row.

/// `println!` that ignores write errors, so a closed pipe is not a panic.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

mod output;

use std::process::ExitCode;

use burnside_core::{
    build, catalog, parse_group_spec, FamilySpec, FiniteGroup, GroupSpec, SubgroupLattice, DEFAULT_LATTICE_CAP,
    DEFAULT_ORDER_CAP,
};
use clap::{Parser, Subcommand, ValueEnum};

/// Overrides the subgroup enumeration cap (default 256).
pub const LATTICE_CAP_ENV: &str = "BURNSIDE_LATTICE_CAP";
/// Overrides the group construction cap (default 1024).
pub const ORDER_CAP_ENV: &str = "BURNSIDE_ORDER_CAP";

#[derive(Parser, Debug)]
#[command(
    name = "burnside",
    version,
    about = "Burnside rings and Artin exponents of finite groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the built-in catalog of p-groups.
    Catalog {
        #[arg(long)]
        json: bool,
    },
    /// Census of subgroup conjugacy classes.
    Lattice {
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// Table of marks in canonical class order.
    Marks {
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether a ghost vector lies in the Burnside ring.
    Member {
        group: String,
        /// Comma-separated integers, one per subgroup class.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        vector: Vec<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Artin exponent of a subgroup family.
    Exponent {
        group: String,
        #[arg(long, value_enum, default_value_t = Family::Ea)]
        family: Family,
        /// Print one violated congruence for each failing divisor.
        #[arg(long)]
        certify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Compare brute-force and closed-form exponents over the catalog.
    VerifyMainTheorem {
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Ea,
    Cyclic,
    All,
}

impl From<Family> for FamilySpec {
    fn from(f: Family) -> Self {
        match f {
            Family::Ea => FamilySpec::ElementaryAbelian,
            Family::Cyclic => FamilySpec::Cyclic,
            Family::All => FamilySpec::AllSubgroups,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub order: usize,
    pub lattice: usize,
}

impl Caps {
    fn from_env() -> Result<Self, String> {
        let read = |name: &str, default: usize| match std::env::var(name) {
            Ok(v) => v
                .trim()
                .parse::<usize>()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| format!("{name} must be a positive integer, got `{v}`")),
            Err(_) => Ok(default),
        };
        Ok(Self {
            order: read(ORDER_CAP_ENV, DEFAULT_ORDER_CAP)?,
            lattice: read(LATTICE_CAP_ENV, DEFAULT_LATTICE_CAP)?,
        })
    }
}

pub struct Context {
    pub caps: Caps,
}

impl Context {
    pub fn group(&self, text: &str) -> burnside_core::Result<(GroupSpec, FiniteGroup)> {
        let spec = parse_group_spec(text)?;
        let group = build(&spec, self.caps.order)?;
        Ok((spec, group))
    }

    pub fn lattice(&self, text: &str) -> burnside_core::Result<(GroupSpec, SubgroupLattice)> {
        let (spec, group) = self.group(text)?;
        Ok((spec, SubgroupLattice::new(group, self.caps.lattice)?))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let caps = match Caps::from_env() {
        Ok(caps) => caps,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    let ctx = Context { caps };
    let result = match cli.command {
        Command::Catalog { json } => output::catalog(&catalog(), json),
        Command::Lattice { group, json } => output::lattice(&ctx, &group, json),
        Command::Marks { group, json } => output::marks(&ctx, &group, json),
        Command::Member { group, vector, json } => output::member(&ctx, &group, vector, json),
        Command::Exponent {
            group,
            family,
            certify,
            json,
        } => output::exponent(&ctx, &group, family.into(), certify, json),
        Command::VerifyMainTheorem { max_order, json } => output::verify(&ctx, max_order, json),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
