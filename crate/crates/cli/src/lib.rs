//! Command-line front end. [`run`] is the whole program minus process I/O,
//! so it can be driven directly from tests.

mod args;
mod output;

use std::fs;
use std::path::Path;

use clap::error::ErrorKind;
use clap::Parser;
use serde::Serialize;

use mockinj::coord_ring::PartitionCache;
use mockinj::sl2::{self, RemarkSweep};
use mockinj::{
    Character, CentralCharacter, GroupDatum, ParabolicDatum, PartitionTable, ReproduceLimits,
    RootSystem, Weight,
};

pub use args::{Cli, Command, Format, Sl2Command, CACHE_ENV};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Compute(String),
}

impl From<mockinj::Error> for CliError {
    fn from(e: mockinj::Error) -> Self {
        if e.is_input_error() {
            CliError::Usage(e.to_string())
        } else {
            CliError::Compute(e.to_string())
        }
    }
}

type CliResult<T> = Result<T, CliError>;

struct Emitted {
    stdout: String,
    code: i32,
}

/// Parse `argv` (without the program name) and execute it.
pub fn run<S: AsRef<str>>(argv: &[S]) -> RunOutput {
    let full = std::iter::once("mockinj").chain(argv.iter().map(|s| s.as_ref()));
    let cli = match Cli::try_parse_from(full) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => RunOutput {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => RunOutput {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let mut warnings = Vec::new();
    let result = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs as usize)
        .build()
    {
        Ok(pool) => pool.install(|| dispatch(&cli, &mut warnings)),
        Err(e) => Err(CliError::Compute(format!("cannot start worker pool: {e}"))),
    };
    let mut stderr: String = warnings.iter().map(|w| format!("warning: {w}\n")).collect();
    match result {
        Ok(Emitted { stdout, code }) => RunOutput { code, stdout, stderr },
        Err(CliError::Usage(msg)) => {
            stderr.push_str(&format!("error: {msg}\n"));
            RunOutput {
                code: EXIT_USAGE,
                stdout: String::new(),
                stderr,
            }
        }
        Err(CliError::Compute(msg)) => {
            stderr.push_str(&format!("error: {msg}\n"));
            RunOutput {
                code: EXIT_FAILURE,
                stdout: String::new(),
                stderr,
            }
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    // Round-trip through Value so object keys come out sorted.
    let v = serde_json::to_value(value).expect("report serializes");
    let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
    s.push('\n');
    s
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> Emitted {
    let stdout = match format {
        Format::Json => json(value),
        Format::Text => text(),
    };
    Emitted {
        stdout,
        code: EXIT_OK,
    }
}

fn dispatch(cli: &Cli, warnings: &mut Vec<String>) -> CliResult<Emitted> {
    let format = cli.format;
    match &cli.command {
        Command::Rootsys { cartan_type } => {
            let rs: RootSystem = cartan_type.parse()?;
            let out = output::RootSystemOut::new(&rs);
            Ok(emit(format, &out, || out.to_text()))
        }
        Command::KujDim { parabolic, weight } => {
            let (rs, pd) = parabolic_from(&parabolic.cartan_type, &parabolic.j)?;
            let w = Weight(parse_weight(weight)?);
            if w.rank() != rs.rank() {
                return Err(CliError::Usage(format!(
                    "weight has {} coordinates, {} has rank {}",
                    w.rank(),
                    rs.label(),
                    rs.rank()
                )));
            }
            let dim = with_cache(cli, &rs, &pd, warnings, |table| Ok(table.partition_count(&w)?))?;
            let out = output::KujDimOut {
                cartan_type: rs.label(),
                j: pd.j(),
                weight: w,
                dim,
            };
            Ok(emit(format, &out, || out.to_text()))
        }
        Command::KujFiber { parabolic, chi } => {
            let (rs, pd) = parabolic_from(&parabolic.cartan_type, &parabolic.j)?;
            let chi = CentralCharacter::new(&pd, &parse_chi(chi)?)?;
            let report = with_cache(cli, &rs, &pd, warnings, |table| Ok(table.fiber_support(&chi)?))?;
            let out = output::FiberOut {
                cartan_type: rs.label(),
                j: pd.j(),
                report,
            };
            Ok(emit(format, &out, || out.to_text()))
        }
        Command::Sl2(cmd) => dispatch_sl2(format, cmd),
        Command::Classify { g0, pi0, p, cyclic } => {
            let mut g = GroupDatum::new(g0.parse()?, *pi0)?;
            if *cyclic {
                g = g.with_cyclic_components();
            }
            let c = mockinj::classify(&g, *p)?;
            Ok(emit(format, &c, || output::classification_text(&c)))
        }
        Command::Reproduce(a) => {
            let d = ReproduceLimits::default();
            let limits = ReproduceLimits {
                zero_weight_max: a.zero_weight_max.unwrap_or(d.zero_weight_max),
                socle_max: a.socle_max.unwrap_or(d.socle_max),
                remark_max: a.remark_max.unwrap_or(d.remark_max),
                fiber_height: a.fiber_height.unwrap_or(d.fiber_height),
                partition_box: a.partition_box.unwrap_or(d.partition_box),
                random_characters: a.random_characters.unwrap_or(d.random_characters),
                tensor_max: a.tensor_max.unwrap_or(d.tensor_max),
                seed: a.seed.unwrap_or(d.seed),
            };
            let report = mockinj::reproduce(&limits)?;
            let mut e = emit(format, &report, || output::reproduction_text(&report));
            if !report.passed {
                e.code = EXIT_FAILURE;
            }
            Ok(e)
        }
    }
}

fn dispatch_sl2(format: Format, cmd: &Sl2Command) -> CliResult<Emitted> {
    match cmd {
        Sl2Command::Char { p, lam } => {
            let character = sl2::simple_char(*lam, *p)?;
            let out = output::Sl2CharOut {
                p: *p,
                lam: *lam,
                digits: sl2::base_p_digits(*lam, *p)?,
                dim: mockinj::dim_of(&character)?,
                character,
            };
            Ok(emit(format, &out, || out.to_text()))
        }
        Sl2Command::Tensor { p, mu, nu } => {
            let factors = sl2::tensor_decomposition(*mu, *nu, *p)?;
            let out = output::TensorOut {
                p: *p,
                mu: *mu,
                nu: *nu,
                factors,
            };
            Ok(emit(format, &out, || out.to_text()))
        }
        Sl2Command::Decompose { p, character } => {
            let c = parse_sl2_char(character)?;
            let d = sl2::decompose_into_simples(&c, *p)?;
            Ok(emit(format, &d, || output::decomposition_text(&d)))
        }
        Sl2Command::Hom {
            p,
            mu,
            lam,
            character,
        } => {
            let m = parse_sl2_char(character)?;
            let dim = sl2::hom_dim_into_injective_tensor(*mu, *lam, &m, *p)?;
            let out = output::HomOut {
                p: *p,
                mu: *mu,
                lam: *lam,
                module: m,
                dim,
            };
            Ok(emit(format, &out, || out.to_text()))
        }
        Sl2Command::RemarkSweep { max } => {
            let sweep: RemarkSweep = sl2::remark_sweep(*max)?;
            Ok(emit(format, &sweep, || output::remark_text(&sweep)))
        }
        Sl2Command::SocleWt { max, p } => {
            if *p != 2 {
                return Err(CliError::Usage(format!(
                    "socle-wt is only available for p = 2, got p = {p}"
                )));
            }
            let cert = sl2::socle_certificate_wt(*max)?;
            let mut e = emit(format, &cert, || output::socle_text(&cert));
            if !cert.passed {
                e.code = EXIT_FAILURE;
            }
            Ok(e)
        }
    }
}

fn parabolic_from(cartan_type: &str, j: &str) -> CliResult<(RootSystem, ParabolicDatum)> {
    let rs: RootSystem = cartan_type.parse()?;
    let indices = parse_list(j, |s| {
        s.parse::<usize>()
            .map_err(|_| CliError::Usage(format!("bad simple-root index `{s}` in --J")))
    })?;
    let pd = ParabolicDatum::new(rs.rank(), &indices)?;
    Ok((rs, pd))
}

fn parse_list<T>(s: &str, item: impl Fn(&str) -> CliResult<T>) -> CliResult<Vec<T>> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(item)
        .collect()
}

fn parse_weight(s: &str) -> CliResult<Vec<i64>> {
    let v = parse_list(s, |x| {
        x.parse::<i64>()
            .map_err(|_| CliError::Usage(format!("bad weight coordinate `{x}`")))
    })?;
    if v.is_empty() {
        return Err(CliError::Usage("empty weight".into()));
    }
    Ok(v)
}

fn parse_chi(s: &str) -> CliResult<Vec<(usize, i64)>> {
    parse_list(s, |pair| {
        let bad = || CliError::Usage(format!("bad central character entry `{pair}`, expected index=value"));
        let (k, v) = pair.split_once('=').ok_or_else(bad)?;
        Ok((
            k.trim().parse().map_err(|_| bad())?,
            v.trim().parse().map_err(|_| bad())?,
        ))
    })
}

fn parse_sl2_char(s: &str) -> CliResult<Character> {
    let terms = parse_list(s, |pair| {
        let bad = || CliError::Usage(format!("bad character term `{pair}`, expected weight:mult"));
        let (w, m) = pair.split_once(':').ok_or_else(bad)?;
        Ok((
            w.trim().parse::<i64>().map_err(|_| bad())?,
            m.trim().parse::<i64>().map_err(|_| bad())?,
        ))
    })?;
    Ok(Character::sl2(terms)?)
}

fn load_cache(path: &Path, warnings: &mut Vec<String>) -> PartitionCache {
    match fs::read_to_string(path) {
        Ok(text) => match PartitionCache::from_json(&text) {
            Ok(cache) => cache,
            Err(e) => {
                warnings.push(format!("ignoring unreadable cache {}: {e}", path.display()));
                PartitionCache::new()
            }
        },
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => PartitionCache::new(),
        Err(e) => {
            warnings.push(format!("ignoring cache {}: {e}", path.display()));
            PartitionCache::new()
        }
    }
}

/// Run `f` on a partition table, seeding it from and saving it to the
/// configured cache file, if any.
fn with_cache<T>(
    cli: &Cli,
    rs: &RootSystem,
    pd: &ParabolicDatum,
    warnings: &mut Vec<String>,
    f: impl FnOnce(&PartitionTable) -> CliResult<T>,
) -> CliResult<T> {
    let table = PartitionTable::with_capacity(rs, pd, cli.memo_cap)?;
    let Some(path) = &cli.cache else {
        return f(&table);
    };
    let mut cache = load_cache(path, warnings);
    cache.seed_table(&table);
    let value = f(&table)?;
    cache.absorb(&table);
    if let Err(e) = fs::write(path, cache.to_json()) {
        warnings.push(format!("could not write cache {}: {e}", path.display()));
    }
    Ok(value)
}
