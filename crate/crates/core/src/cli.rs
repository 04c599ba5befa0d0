//! The `hyperq` command line.
//!
//! [`run`] never touches the process: it returns the exit code and the
//! report text, which keeps every subcommand testable in-process.
//!
//! Exit codes: 0 when the checked property holds, 1 when it fails on valid
//! input (the report names a witness), 2 for usage and input errors. Every
//! report ends with a `RESULT: key=value ...` summary line; commands that
//! emit a document write it as a `# RESULT:` comment so the output still
//! parses.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::fundamental::{check_if_subquasigroup, fundamental_quasigroup, pushforward, FundamentalResult};
use crate::grade::Grade;
use crate::hyperstructure::{check_axioms, enumerate_subs, Hypergroupoid, DEFAULT_ORDER_LIMIT};
use crate::ifs::{ifs_validate, IntuitionisticFuzzySet};
use crate::ifsh::{
    build_from_chain, check_ifsh, check_ifsh_via_cuts, check_ifsh_with, cut_table, IfshVerdict, LevelChain, WitnessMode,
};
use crate::io::{parse_hqg, parse_ifs, serialize_hqg, serialize_ifs, serialize_quasigroup};
use crate::random::{random_hyperquasigroup, seeded};
use crate::relations::{classify, verify_equipotence, IfshFamily, Relation};
use crate::subset::CarrierSubset;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub report: String,
}

#[derive(Parser)]
#[command(
    name = "hyperq",
    version,
    about = "Finite hyperquasigroups and their intuitionistic fuzzy sub-hyperquasigroups"
)]
struct Cli {
    /// Largest carrier order for which sub-hyperquasigroups are enumerated
    #[arg(long, global = true, env = "HYPERQ_LIMIT", default_value_t = DEFAULT_ORDER_LIMIT)]
    limit: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Checks the hypergroupoid axioms, reproducibility, associativity and regularity
    Check { hqg: PathBuf },
    /// Lists all sub-hyperquasigroups
    Subs { hqg: PathBuf },
    /// Decides whether an IF set is an intuitionistic fuzzy sub-hyperquasigroup
    IfshCheck {
        hqg: PathBuf,
        ifs: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        method: Method,
        /// Require one witness pair to serve conditions 2 and 4 together
        #[arg(long)]
        shared_witness: bool,
    },
    /// Tabulates the level cuts of an IF set at its critical thresholds
    Cuts { hqg: PathBuf, ifs: PathBuf },
    /// Builds an IF set from a chain of sub-hyperquasigroups
    Chain {
        hqg: PathBuf,
        /// A level `grade:i,j,...`; repeat for each level
        #[arg(long = "level", required = true, value_parser = parse_level)]
        levels: Vec<(Grade, CarrierSubset)>,
    },
    /// Groups IF sets by one of the level-image relations
    Classify {
        hqg: PathBuf,
        #[arg(long)]
        alpha: Grade,
        #[arg(long, value_enum)]
        rel: RelArg,
        #[arg(required = true)]
        ifs: Vec<PathBuf>,
    },
    /// Compares the relation quotients of the canonical family with the sub-hyperquasigroups
    Equipotence {
        hqg: PathBuf,
        #[arg(long)]
        alpha: Grade,
    },
    /// Computes the fundamental relation and the fundamental quasigroup
    Fundamental { hqg: PathBuf },
    /// Pushes an IF set down to the fundamental quasigroup
    Pushforward { hqg: PathBuf, ifs: PathBuf },
    /// Draws a seeded random hyperquasigroup
    Random {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        regular: bool,
        #[arg(long, default_value_t = 1_000_000)]
        max_attempts: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Cuts,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum RelArg {
    #[value(name = "U")]
    U,
    #[value(name = "L")]
    L,
    #[value(name = "R")]
    R,
}

impl From<RelArg> for Relation {
    fn from(r: RelArg) -> Self {
        match r {
            RelArg::U => Relation::U,
            RelArg::L => Relation::L,
            RelArg::R => Relation::R,
        }
    }
}

fn parse_level(s: &str) -> Result<(Grade, CarrierSubset), String> {
    let (grade, elems) = s.split_once(':').ok_or("expected `grade:i,j,...`")?;
    let grade: Grade = grade.trim().parse().map_err(|e: Error| e.to_string())?;
    let mut set = CarrierSubset::EMPTY;
    for e in elems.split(',').map(str::trim).filter(|e| !e.is_empty()) {
        let x: usize = e.parse().map_err(|_| format!("bad element `{e}`"))?;
        if x >= crate::subset::MAX_ORDER {
            return Err(format!("element {x} out of range"));
        }
        set.insert(x);
    }
    Ok((grade, set))
}

/// An input error; always exit code 2.
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

type Step<T> = Result<T, InputError>;

fn read(path: &Path) -> Step<String> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn load_hqg(path: &Path) -> Step<Hypergroupoid> {
    parse_hqg(&read(path)?)
        .map_err(|e| InputError(format!("{}:{}:{}: {}", path.display(), e.line, e.column, e.message)))
}

fn load_ifs(path: &Path, order: usize) -> Step<IntuitionisticFuzzySet> {
    let (mu, lambda) = parse_ifs(&read(path)?)
        .map_err(|e| InputError(format!("{}:{}:{}: {}", path.display(), e.line, e.column, e.message)))?;
    let a = ifs_validate(mu, lambda).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    if a.len() != order {
        return Err(InputError(format!(
            "{}: IF set has {} elements but the carrier has {order}",
            path.display(),
            a.len()
        )));
    }
    Ok(a)
}

fn require_hq(h: &Hypergroupoid, path: &Path) -> Step<()> {
    match check_axioms(h).reproducibility_witness {
        Some(x) => Err(InputError(format!(
            "{}: not a hyperquasigroup (reproducibility fails at {x})",
            path.display()
        ))),
        None => Ok(()),
    }
}

fn verdict_fields(v: &IfshVerdict) -> String {
    match (v.failed_condition, v.witness) {
        (Some(c), Some((p, q))) => format!("ifsh=false condition={c} witness={p},{q}"),
        _ => "ifsh=true".into(),
    }
}

/// Runs one command line, `argv[0]` being the program name.
pub fn run<I, T>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let exit_code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            return CommandOutcome {
                exit_code,
                report: e.render().to_string(),
            };
        }
    };
    match dispatch(cli) {
        Ok((exit_code, report)) => CommandOutcome { exit_code, report },
        Err(InputError(msg)) => CommandOutcome {
            exit_code: 2,
            report: format!("error: {msg}\nRESULT: error=input\n"),
        },
    }
}

fn dispatch(cli: Cli) -> Step<(i32, String)> {
    let limit = cli.limit;
    match cli.command {
        Command::Check { hqg } => check(&hqg),
        Command::Subs { hqg } => subs(&hqg, limit),
        Command::IfshCheck {
            hqg,
            ifs,
            method,
            shared_witness,
        } => ifsh_check(&hqg, &ifs, method, shared_witness),
        Command::Cuts { hqg, ifs } => cuts(&hqg, &ifs),
        Command::Chain { hqg, levels } => chain(&hqg, levels),
        Command::Classify { hqg, alpha, rel, ifs } => classify_cmd(&hqg, alpha, rel.into(), &ifs),
        Command::Equipotence { hqg, alpha } => equipotence(&hqg, alpha, limit),
        Command::Fundamental { hqg } => fundamental(&hqg),
        Command::Pushforward { hqg, ifs } => pushforward_cmd(&hqg, &ifs),
        Command::Random {
            order,
            seed,
            regular,
            max_attempts,
        } => random(order, seed, regular, max_attempts),
    }
}

fn check(path: &Path) -> Step<(i32, String)> {
    let h = load_hqg(path)?;
    let r = check_axioms(&h);
    let mut out = String::new();
    let flag = |b: bool| if b { "yes" } else { "no" };
    writeln!(out, "hypergroupoid:   {}", flag(r.is_hypergroupoid)).unwrap();
    write!(out, "hyperquasigroup: {}", flag(r.is_hyperquasigroup)).unwrap();
    if let Some(x) = r.reproducibility_witness {
        write!(out, "  (x={x}: x∘G or G∘x misses an element)").unwrap();
    }
    write!(out, "\nhypergroup:      {}", flag(r.is_hypergroup)).unwrap();
    if let Some((x, y, z)) = r.associativity_witness {
        write!(out, "  (x∘(y∘z) ≠ (x∘y)∘z at x={x} y={y} z={z})").unwrap();
    }
    write!(out, "\nregular:         {}", flag(r.is_regular)).unwrap();
    if let Some((x, y, z)) = r.regularity_witness {
        write!(out, "  (x={x} ∈ y∘z with y={y} z={z})").unwrap();
    }
    writeln!(
        out,
        "\nRESULT: hypergroupoid={} hyperquasigroup={} hypergroup={} regular={}",
        r.is_hypergroupoid, r.is_hyperquasigroup, r.is_hypergroup, r.is_regular
    )
    .unwrap();
    Ok((if r.is_hyperquasigroup { 0 } else { 1 }, out))
}

fn subs(path: &Path, limit: usize) -> Step<(i32, String)> {
    let h = load_hqg(path)?;
    require_hq(&h, path)?;
    let subs = enumerate_subs(&h, limit)?;
    let mut out = String::new();
    for k in &subs {
        writeln!(out, "{k}").unwrap();
    }
    writeln!(out, "RESULT: count={}", subs.len()).unwrap();
    Ok((0, out))
}

fn ifsh_check(hqg: &Path, ifs: &Path, method: Method, shared: bool) -> Step<(i32, String)> {
    let h = load_hqg(hqg)?;
    require_hq(&h, hqg)?;
    let a = load_ifs(ifs, h.order())?;
    if shared && method != Method::Direct {
        return Err(InputError("--shared-witness applies to the direct method only".into()));
    }
    let mode = if shared {
        WitnessMode::Shared
    } else {
        WitnessMode::Independent
    };
    let mut out = String::new();
    let verdict = match method {
        Method::Direct => {
            let v = check_ifsh_with(&h, &a, mode)?;
            writeln!(out, "direct: {v}").unwrap();
            v
        }
        Method::Cuts => {
            let v = check_ifsh_via_cuts(&h, &a)?;
            writeln!(out, "cuts:   {v}").unwrap();
            v
        }
        Method::Both => {
            let d = check_ifsh_with(&h, &a, mode)?;
            let c = check_ifsh_via_cuts(&h, &a)?;
            writeln!(out, "direct: {d}\ncuts:   {c}").unwrap();
            if d.holds != c.holds {
                writeln!(out, "warning: the two methods disagree").unwrap();
            }
            // a disagreement is reported as a failure
            if d.holds {
                c
            } else {
                d
            }
        }
    };
    let method = match method {
        Method::Direct => "direct",
        Method::Cuts => "cuts",
        Method::Both => "both",
    };
    writeln!(out, "RESULT: {} method={method}", verdict_fields(&verdict)).unwrap();
    Ok((if verdict.holds { 0 } else { 1 }, out))
}

fn cuts(hqg: &Path, ifs: &Path) -> Step<(i32, String)> {
    let h = load_hqg(hqg)?;
    require_hq(&h, hqg)?;
    let a = load_ifs(ifs, h.order())?;
    let rows = cut_table(&h, &a)?;
    let mut out = String::new();
    let mut failing = 0;
    let mut verdict = |set: CarrierSubset, is_sub: bool| {
        if set.is_empty() {
            "vacuous"
        } else if is_sub {
            "sub"
        } else {
            failing += 1;
            "NOT sub"
        }
    };
    writeln!(out, "{:>8}  {:<14} {:<8}  L(lambda;t)", "t", "U(mu;t)", "").unwrap();
    for r in &rows {
        let u = verdict(r.upper, r.upper_is_sub);
        let l = verdict(r.lower, r.lower_is_sub);
        writeln!(
            out,
            "{:>8}  {:<14} {:<8}  {:<14} {}",
            r.threshold.to_string(),
            r.upper.to_string(),
            u,
            r.lower.to_string(),
            l
        )
        .unwrap();
    }
    writeln!(out, "RESULT: thresholds={} failing_cuts={failing}", rows.len()).unwrap();
    Ok((if failing == 0 { 0 } else { 1 }, out))
}

fn chain(hqg: &Path, levels: Vec<(Grade, CarrierSubset)>) -> Step<(i32, String)> {
    let h = load_hqg(hqg)?;
    require_hq(&h, hqg)?;
    if let Some((t, k)) = levels.iter().find(|(_, k)| !k.fits(h.order())) {
        return Err(InputError(format!("level {t}: {k} is not contained in the carrier")));
    }
    let chain = LevelChain::new(levels)?;
    match build_from_chain(&h, &chain) {
        Ok(a) => {
            let v = check_ifsh(&h, &a)?;
            Ok((
                if v.holds { 0 } else { 1 },
                format!(
                    "{}\n# RESULT: levels={} {}\n",
                    serialize_ifs(&a),
                    chain.omega().len(),
                    verdict_fields(&v)
                ),
            ))
        }
        Err(Error::ConstraintViolated(x)) => Ok((
            1,
            format!(
                "membership plus non-membership exceeds 1 at element {x}\nRESULT: levels={} constraint_violated_at={x}\n",
                chain.omega().len()
            ),
        )),
        Err(e) => Err(e.into()),
    }
}

fn classify_cmd(hqg: &Path, alpha: Grade, rel: Relation, files: &[PathBuf]) -> Step<(i32, String)> {
    let h = load_hqg(hqg)?;
    require_hq(&h, hqg)?;
    let members = files.iter().map(|p| load_ifs(p, h.order())).collect::<Step<Vec<_>>>()?;
    let family = IfshFamily::new(&h, members).map_err(|e| match e {
        Error::NotAnIfsh(i) => InputError(format!(
            "{}: not an intuitionistic fuzzy sub-hyperquasigroup",
            files[i].display()
        )),
        e => e.into(),
    })?;
    let p = classify(&family, alpha, rel);
    let mut out = String::new();
    for (c, members) in p.classes.iter().enumerate() {
        let names: Vec<String> = members.iter().map(|&i| files[i].display().to_string()).collect();
        writeln!(out, "class {c} (image {}): {}", p.images[c], names.join(" ")).unwrap();
    }
    let rel = match rel {
        Relation::U => "U",
        Relation::L => "L",
        Relation::R => "R",
    };
    writeln!(out, "RESULT: rel={rel} alpha={alpha} classes={}", p.len()).unwrap();
    Ok((0, out))
}

fn equipotence(hqg: &Path, alpha: Grade, limit: usize) -> Step<(i32, String)> {
    let h = load_hqg(hqg)?;
    require_hq(&h, hqg)?;
    let r = verify_equipotence(&h, alpha, limit)?;
    let mut out = String::new();
    writeln!(
        out,
        "sub-hyperquasigroups: {} (expected classes {})",
        r.subs_count,
        r.subs_count + 1
    )
    .unwrap();
    let mut fields = vec![format!("subs={}", r.subs_count)];
    for rel in &r.relations {
        let name = match rel.relation {
            Relation::U => "U",
            Relation::L => "L",
            Relation::R => "R",
        };
        writeln!(
            out,
            "{name}: {} classes, injective={}, onto={}",
            rel.class_count, rel.injective, rel.surjective
        )
        .unwrap();
        fields.push(format!("{name}={}", rel.class_count));
    }
    fields.push(format!("equipotent={}", r.passes()));
    writeln!(out, "RESULT: alpha={alpha} {}", fields.join(" ")).unwrap();
    Ok((if r.passes() { 0 } else { 1 }, out))
}

fn describe_fundamental(out: &mut String, f: &FundamentalResult) {
    for (c, class) in f.partition.classes().iter().enumerate() {
        writeln!(out, "class {c}: {class}").unwrap();
    }
    writeln!(out, "regular: {}", if f.regular { "yes" } else { "no" }).unwrap();
}

/// Quotient failures are a property failing on valid input, hence exit 1.
fn quotient_failure(e: Error) -> Step<(i32, String)> {
    match e {
        Error::IllDefinedProduct(..) | Error::NotALatinSquare(_) => {
            Ok((1, format!("no fundamental quasigroup: {e}\nRESULT: quotient=false\n")))
        }
        e => Err(e.into()),
    }
}

fn fundamental(hqg: &Path) -> Step<(i32, String)> {
    let h = load_hqg(hqg)?;
    require_hq(&h, hqg)?;
    let f = match fundamental_quasigroup(&h) {
        Ok(f) => f,
        Err(e) => return quotient_failure(e),
    };
    let mut out = String::new();
    describe_fundamental(&mut out, &f);
    writeln!(out, "{}", serialize_quasigroup(&f.quasigroup)).unwrap();
    writeln!(
        out,
        "RESULT: quotient=true classes={} regular={}",
        f.partition.len(),
        f.regular
    )
    .unwrap();
    Ok((0, out))
}

fn pushforward_cmd(hqg: &Path, ifs: &Path) -> Step<(i32, String)> {
    let h = load_hqg(hqg)?;
    require_hq(&h, hqg)?;
    let a = load_ifs(ifs, h.order())?;
    let (f, pushed) = match pushforward(&h, &a) {
        Ok(r) => r,
        Err(e) => return quotient_failure(e),
    };
    let v = check_if_subquasigroup(&f.quasigroup, &pushed)?;
    let mut out = String::new();
    describe_fundamental(&mut out, &f);
    writeln!(out, "# membership: classwise max; non-membership: classwise min").unwrap();
    writeln!(out, "{}", serialize_ifs(&pushed)).unwrap();
    writeln!(out, "IF subquasigroup: {v}").unwrap();
    writeln!(out, "RESULT: classes={} subquasigroup={}", f.partition.len(), v.holds).unwrap();
    if let (Some(c), Some((x, y))) = (v.failed_condition, v.witness) {
        out.pop();
        writeln!(out, " condition={c} witness={x},{y}").unwrap();
    }
    Ok((if v.holds { 0 } else { 1 }, out))
}

fn random(order: usize, seed: u64, regular: bool, max_attempts: u64) -> Step<(i32, String)> {
    let (h, attempts) = random_hyperquasigroup(&mut seeded(seed), order, regular, max_attempts)?;
    Ok((
        0,
        format!(
            "{}\n# RESULT: order={order} seed={seed} regular={regular} attempts={attempts}\n",
            serialize_hqg(&h)
        ),
    ))
}
