use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use modvir::battery::{self, Status};
use modvir::fock::{format_half, sector_dims};
use modvir::modes::{build_state, convention_self_test, mode_apply, state_s, state_u, verify_annihilation, StateWord};
use modvir::singular::{irreducible_dims, singular_space};
use modvir::{Field, FockSpace, FockVector, ModuleKind, ModuleParams, Sector, VermaModule, VermaVector};

#[derive(Parser)]
#[command(
    name = "modvir",
    version,
    about = "Exact Virasoro and free-fermion computations over Q and F_p"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Basis of singular vectors in one degree of V(c,h).
    Singvec {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long)]
        degree: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Graded dimensions of V(c,h), its maximal submodule and L(c,h).
    Irrdims {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, default_value_t = 10)]
        max: u32,
        /// Add the characteristic-0 column and flag rows that differ.
        #[arg(long)]
        compare_char0: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Graded dimensions of a Fock sector of fixed parity.
    FockDims {
        #[command(flatten)]
        fock: FockArgs,
        #[arg(long, default_value_t = 10)]
        max: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Graded dimensions of the Virasoro submodule generated by the lowest
    /// vector of a Fock sector.
    VirSpan {
        #[command(flatten)]
        fock: FockArgs,
        #[arg(long, default_value_t = 10)]
        max: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Vectors of a Fock slice killed by L(1) and L(2).
    Hwvec {
        #[command(flatten)]
        fock: FockArgs,
        #[arg(long)]
        degree: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Applies the n-th mode of a vacuum descendant to a vector of V(c,h).
    ModeApply {
        #[command(flatten)]
        module: ModuleArgs,
        /// "s", "u", or a word of negative modes such as "[-2,-2]".
        #[arg(long, default_value = "s")]
        state: String,
        #[arg(long)]
        mode: i64,
        /// A word of modes applied to v such as "[-2,-1]", or a vector in JSON.
        #[arg(long, default_value = "[]")]
        target: String,
        /// Also check that every mode of the state kills L(c,h) up to this degree.
        #[arg(long)]
        check_max: Option<u32>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Runs the verification battery.
    VerifyPaper {
        /// Comma-separated tags, criterion numbers (3 or c3) or name fragments.
        #[arg(long)]
        only: Option<String>,
        /// List the checks without running them.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct ModuleArgs {
    #[arg(long, default_value = "1/2")]
    c: String,
    /// Highest weight; "h" keeps it formal.
    #[arg(long, default_value = "0")]
    h: String,
    /// 0 or an odd prime.
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
    #[arg(long, value_enum, default_value_t = KindArg::Verma)]
    module: KindArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Verma,
    /// V(c,0) modulo the submodule generated by L(-1)v.
    Vacuum,
}

impl ModuleArgs {
    fn field(&self) -> Result<Field> {
        Ok(Field::from_characteristic(self.characteristic)?)
    }

    fn params(&self) -> Result<ModuleParams> {
        let params = ModuleParams::parse(&self.c, &self.h, self.field()?)
            .with_context(|| format!("invalid module parameters c = {}, h = {}", self.c, self.h))?;
        Ok(match self.module {
            KindArg::Verma => params,
            KindArg::Vacuum => params.with_kind(ModuleKind::Vacuum)?,
        })
    }
}

#[derive(Args)]
struct FockArgs {
    /// ns or r.
    #[arg(long, default_value = "ns")]
    sector: String,
    #[arg(long, default_value_t = 0)]
    parity: u8,
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
}

impl FockArgs {
    fn space(&self) -> Result<FockSpace> {
        if self.parity > 1 {
            bail!("parity must be 0 or 1");
        }
        Ok(FockSpace::new(
            Sector::parse(&self.sector)?,
            Field::from_characteristic(self.characteristic)?,
        ))
    }
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Write to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

/// Rendered output in all three formats; only the requested one is emitted.
struct Rendered {
    json: Value,
    csv: String,
    pretty: String,
}

impl OutputArgs {
    fn emit(&self, r: Rendered) -> Result<()> {
        let mut text = match self.format {
            Format::Json => serde_json::to_string_pretty(&r.json)?,
            Format::Csv => r.csv,
            Format::Pretty => r.pretty,
        };
        if !text.ends_with('\n') {
            text.push('\n');
        }
        match &self.out {
            Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
            None => io::stdout().write_all(text.as_bytes())?,
        }
        Ok(())
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Returns whether every check passed.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Singvec { module, degree, output } => {
            output.emit(singvec(&module, degree)?)?;
            Ok(true)
        }
        Command::Irrdims {
            module,
            max,
            compare_char0,
            output,
        } => {
            output.emit(irrdims(&module, max, compare_char0)?)?;
            Ok(true)
        }
        Command::FockDims { fock, max, output } => {
            output.emit(fock_dims(&fock, max)?)?;
            Ok(true)
        }
        Command::VirSpan { fock, max, output } => {
            output.emit(vir_span(&fock, max)?)?;
            Ok(true)
        }
        Command::Hwvec { fock, degree, output } => {
            output.emit(hwvec(&fock, degree)?)?;
            Ok(true)
        }
        Command::ModeApply {
            module,
            state,
            mode,
            target,
            check_max,
            output,
        } => {
            let (rendered, ok) = mode_apply_cmd(&module, &state, mode, &target, check_max)?;
            output.emit(rendered)?;
            Ok(ok)
        }
        Command::VerifyPaper { only, list, output } => {
            if list {
                output.emit(catalogue())?;
                return Ok(true);
            }
            let report = battery::run(only.as_deref());
            if report.checks.is_empty() {
                bail!("no check matches {:?}", only.unwrap_or_default());
            }
            let ok = report.passed();
            output.emit(render_report(&report))?;
            Ok(ok)
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn singvec(args: &ModuleArgs, degree: u32) -> Result<Rendered> {
    let module = VermaModule::new(args.params()?);
    let basis = singular_space(&module, degree)?;
    let mut csv = String::from("vector,partition,coeff\n");
    for (i, v) in basis.vectors.iter().enumerate() {
        for (p, c) in v.terms() {
            let parts: Vec<String> = p.parts().iter().map(ToString::to_string).collect();
            csv.push_str(&format!(
                "{i},{},{}\n",
                csv_field(&parts.join(" ")),
                csv_field(&c.to_string())
            ));
        }
    }
    let mut pretty = format!(
        "{}, degree {degree}: {} singular vector(s)\n",
        module.params(),
        basis.vectors.len()
    );
    for v in &basis.vectors {
        pretty.push_str(&format!("  {v}\n"));
    }
    Ok(Rendered {
        json: basis.to_json(),
        csv,
        pretty,
    })
}

fn irrdims(args: &ModuleArgs, max: u32, compare_char0: bool) -> Result<Rendered> {
    let module = VermaModule::new(args.params()?);
    let table = irreducible_dims(&module, max)?;
    let reference = if compare_char0 && args.characteristic != 0 {
        let over_q = ModuleArgs {
            c: args.c.clone(),
            h: args.h.clone(),
            characteristic: 0,
            module: args.module,
        };
        Some(irreducible_dims(&VermaModule::new(over_q.params()?), max)?.irreducible())
    } else {
        None
    };
    let mut json = table.to_json();
    let mut csv = String::from("degree,verma,radical,irreducible");
    let mut pretty = format!("{}\n  degree  verma  radical  irreducible", module.params());
    if reference.is_some() {
        csv.push_str(",char0,flag");
        pretty.push_str("  char0");
    }
    csv.push('\n');
    pretty.push('\n');
    for (i, row) in table.rows.iter().enumerate() {
        csv.push_str(&format!(
            "{},{},{},{}",
            row.degree, row.verma, row.radical, row.irreducible
        ));
        let mut line = format!(
            "  {:>6}  {:>5}  {:>7}  {:>11}",
            row.degree, row.verma, row.radical, row.irreducible
        );
        if let Some(reference) = &reference {
            let diff = reference[i] != row.irreducible;
            let flag = if diff { "DIFF" } else { "" };
            csv.push_str(&format!(",{},{flag}", reference[i]));
            line.push_str(&format!("  {:>5}  {flag}", reference[i]));
            json["rows"][i]["char0"] = json!(reference[i]);
            json["rows"][i]["diff"] = json!(diff);
        }
        csv.push('\n');
        pretty.push_str(line.trim_end());
        pretty.push('\n');
    }
    Ok(Rendered { json, csv, pretty })
}

fn dims_table(
    space: &FockSpace,
    parity: u8,
    label: &str,
    dims: &[usize],
    extra: Option<(&str, Vec<usize>)>,
) -> Rendered {
    let sector = space.sector();
    let weight = |d: u32| format_half(i64::from(sector.doubled_weight(parity, d)));
    let mut rows = Vec::new();
    let mut csv = format!("degree,weight,{label}");
    let mut pretty = format!(
        "Fock {sector}, parity {parity}, char {}\n  degree  weight  {label}",
        space.field().characteristic()
    );
    if let Some((name, _)) = &extra {
        csv.push_str(&format!(",{name}"));
        pretty.push_str(&format!("  {name}"));
    }
    csv.push('\n');
    pretty.push('\n');
    for (d, &n) in dims.iter().enumerate() {
        let d = d as u32;
        let mut row = json!({ "degree": d, "weight": weight(d), label: n });
        csv.push_str(&format!("{d},{},{n}", weight(d)));
        pretty.push_str(&format!("  {d:>6}  {:>6}  {n:>width$}", weight(d), width = label.len()));
        if let Some((name, values)) = &extra {
            row[*name] = json!(values[d as usize]);
            csv.push_str(&format!(",{}", values[d as usize]));
            pretty.push_str(&format!("  {:>width$}", values[d as usize], width = name.len()));
        }
        csv.push('\n');
        pretty.push('\n');
        rows.push(row);
    }
    let json = json!({
        "sector": sector.to_string(),
        "parity": parity,
        "char": space.field().characteristic(),
        "rows": rows,
    });
    Rendered { json, csv, pretty }
}

fn fock_dims(args: &FockArgs, max: u32) -> Result<Rendered> {
    let space = args.space()?;
    let dims = sector_dims(space.sector(), args.parity, max);
    Ok(dims_table(&space, args.parity, "dim", &dims, None))
}

fn lowest_vector(space: &FockSpace, parity: u8) -> Result<FockVector> {
    let one = space.field().one();
    Ok(match (space.sector(), parity) {
        (_, 0) => space.vacuum(),
        (Sector::NS, _) => space.word(&[-1], one)?,
        (Sector::Ramond, _) => space.word(&[0], one)?,
    })
}

fn vir_span(args: &FockArgs, max: u32) -> Result<Rendered> {
    let space = args.space()?;
    let start = lowest_vector(&space, args.parity)?;
    let span = space.vir_span_dims(&start, max)?;
    let dims = sector_dims(space.sector(), args.parity, max);
    Ok(dims_table(&space, args.parity, "span", &span, Some(("sector", dims))))
}

fn hwvec(args: &FockArgs, degree: u32) -> Result<Rendered> {
    let space = args.space()?;
    let vectors = space.hw_vectors(args.parity, degree)?;
    let weight = format_half(i64::from(space.sector().doubled_weight(args.parity, degree)));
    let json = json!({
        "sector": space.sector().to_string(),
        "parity": args.parity,
        "char": space.field().characteristic(),
        "degree": degree,
        "weight": weight,
        "vectors": vectors.iter().map(FockVector::to_json).collect::<Vec<_>>(),
    });
    let mut csv = String::from("vector,modes,coeff\n");
    for (i, v) in vectors.iter().enumerate() {
        for (m, c) in v.terms() {
            csv.push_str(&format!(
                "{i},{},{}\n",
                csv_field(&m.to_string()),
                csv_field(&c.to_string())
            ));
        }
    }
    let mut pretty = format!(
        "Fock {}, parity {}, char {}, weight {weight}: {} highest-weight vector(s)\n",
        space.sector(),
        args.parity,
        space.field().characteristic(),
        vectors.len()
    );
    for v in &vectors {
        pretty.push_str(&format!("  {v}\n"));
    }
    Ok(Rendered { json, csv, pretty })
}

fn parse_state(s: &str) -> Result<StateWord> {
    match s.trim() {
        "s" => Ok(state_s()),
        "u" => Ok(state_u()),
        other => {
            let word: Vec<i64> =
                serde_json::from_str(other).with_context(|| format!("state {other:?} is not s, u or a JSON word"))?;
            Ok(build_state(&word)?)
        }
    }
}

fn state_label(s: &str) -> Result<String> {
    match s.trim() {
        "s" | "u" => Ok(s.trim().to_string()),
        other => {
            let word: Vec<i64> = serde_json::from_str(other)?;
            Ok(word.iter().map(|n| format!("L({n})")).collect::<String>() + "1")
        }
    }
}

fn parse_target(s: &str, module: &VermaModule) -> Result<VermaVector> {
    let value: Value = serde_json::from_str(s).with_context(|| format!("target {s:?} is not JSON"))?;
    let items = value.as_array().context("target must be a JSON array")?;
    if items.iter().all(Value::is_i64) {
        let word: Vec<i64> = items.iter().filter_map(Value::as_i64).collect();
        return Ok(module.apply_word(&word, &module.highest_weight_vector()));
    }
    Ok(VermaVector::from_json(&value, module.ring())?)
}

fn mode_apply_cmd(
    args: &ModuleArgs,
    state: &str,
    mode: i64,
    target: &str,
    check_max: Option<u32>,
) -> Result<(Rendered, bool)> {
    let module = VermaModule::new(args.params()?);
    if !convention_self_test(&module) {
        bail!("mode convention self-test failed: omega_1 does not act as L(0)");
    }
    let word = parse_state(state)?;
    let label = state_label(state)?;
    let t = parse_target(target, &module)?;
    let image = mode_apply(&word, mode, &t, &module)?;
    let mut json = json!({
        "c": module.params().c().to_json(),
        "h": module.params().h().to_json(),
        "char": module.ring().characteristic(),
        "state": label,
        "mode": mode,
        "target": t.to_json(),
        "result": image.to_json(),
    });
    let mut csv = String::from("partition,coeff\n");
    for (p, c) in image.terms() {
        let parts: Vec<String> = p.parts().iter().map(ToString::to_string).collect();
        csv.push_str(&format!(
            "{},{}\n",
            csv_field(&parts.join(" ")),
            csv_field(&c.to_string())
        ));
    }
    let mut pretty = format!("{}\n  ({label})_{mode} ({t})\n  = {image}\n", module.params());
    let mut ok = true;
    if let Some(max) = check_max {
        let report = verify_annihilation(&word, &module, max)?;
        ok = report.passed();
        json["annihilation"] = json!({
            "max_degree": max,
            "checked": report.checked,
            "violations": report.violations.iter().map(|v| json!({
                "mode": v.mode,
                "target": v.target.parts(),
                "image": v.image.to_json(),
            })).collect::<Vec<_>>(),
        });
        pretty.push_str(&format!(
            "  annihilates L(c,h) up to degree {max}: {} ({} images, {} outside the radical)\n",
            if ok { "yes" } else { "no" },
            report.checked,
            report.violations.len()
        ));
        for v in report.violations.iter().take(5) {
            pretty.push_str(&format!("    mode {} on {}: {}\n", v.mode, v.target, v.image));
        }
    }
    Ok((Rendered { json, csv, pretty }, ok))
}

fn catalogue() -> Rendered {
    let items = battery::catalogue();
    let json = Value::Array(
        items
            .iter()
            .map(|(n, name, tags)| json!({ "criterion": n, "name": name, "tags": tags }))
            .collect(),
    );
    let mut csv = String::from("criterion,name,tags\n");
    let mut pretty = String::new();
    for (n, name, tags) in &items {
        csv.push_str(&format!("{n},{},{}\n", csv_field(name), csv_field(&tags.join(" "))));
        pretty.push_str(&format!("c{n} [{}] {name}\n", tags.join(",")));
    }
    Rendered { json, csv, pretty }
}

fn render_report(report: &battery::VerificationReport) -> Rendered {
    let mut csv = String::from("criterion,name,status,source,value,elapsed_ms\n");
    let mut pretty = String::new();
    for (n, title, status) in report.criteria() {
        let label = if status == Status::Fail { "FAIL" } else { "PASS" };
        pretty.push_str(&format!("criterion {n}: {label}  {title}\n"));
    }
    pretty.push('\n');
    for c in &report.checks {
        let ms = c.elapsed.as_secs_f64() * 1e3;
        csv.push_str(&format!(
            "{},{},{},{},{},{ms:.3}\n",
            c.criterion,
            csv_field(&c.name),
            c.status,
            c.source.label(),
            csv_field(&c.value)
        ));
        pretty.push_str(&format!(
            "[{}] c{} {} ({})\n    {}\n",
            c.status,
            c.criterion,
            c.name,
            c.source.label(),
            c.value
        ));
    }
    let failed = report.failures().count();
    pretty.push_str(&format!("\n{} checks, {failed} failed\n", report.checks.len()));
    Rendered {
        json: report.to_json(),
        csv,
        pretty,
    }
}
