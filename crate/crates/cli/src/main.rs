//! Command line front end: parse words, evaluate homology actions, test
//! level 2 membership, decompose matrices into generator words, list
//! catalogs, compute rank certificates, and run the verification suite.
//!
//! Exit codes: 0 on success with all checks passing, 1 when any in-process
//! verification fails, 2 on usage or parse errors.

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use std::process::ExitCode;

use gamma2_core::{
    catalog, catalog_alt, decompose_gl2, eta, evaluate, f_map, is_level2, level2_decompose,
    level2_member, rank_certificate, rho, stu_eval, stu_to_mcg, verify_suite, Genus, IntMatrix,
    Status, Word,
};

mod render;
use render::{Check, Output};

#[derive(Parser)]
#[command(
    name = "gamma2",
    version,
    about = "Level 2 mapping class group toolkit for nonorientable surfaces"
)]
struct Cli {
    /// Genus of the surface (at least 2; most commands need at least 3)
    #[arg(long)]
    genus: usize,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Seed for the sampled families of the verification suite
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a word: integral homology action, free quotient image, and
    /// mod 2 image
    Eval { word: String },
    /// Test whether a word acts trivially on mod 2 homology
    Level2 { word: String },
    /// Decompose a 2x2 integer matrix (4 whitespace-separated entries,
    /// row-major) or a genus 3 word into generator words (genus 3 only)
    Decompose {
        #[arg(allow_hyphen_values = true)]
        input: String,
    },
    /// List the level 2 generator catalog with images
    Catalog {
        /// Replace the type 2 slides by squared twists
        #[arg(long)]
        alt: bool,
    },
    /// GF(2) rank certificate for the generator count lower bound
    Rank,
    /// Run the full identity verification suite
    Verify,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    let genus = Genus::new(cli.genus).map_err(|e| e.to_string())?;
    let mut out = Output::new(cli.format);
    match &cli.command {
        Command::Eval { word } => cmd_eval(genus, word, &mut out)?,
        Command::Level2 { word } => cmd_level2(genus, word, &mut out)?,
        Command::Decompose { input } => cmd_decompose(genus, input, &mut out)?,
        Command::Catalog { alt } => cmd_catalog(genus, *alt, &mut out)?,
        Command::Rank => cmd_rank(genus, &mut out)?,
        Command::Verify => cmd_verify(genus, cli.seed, &mut out)?,
    }
    let failed = out.any_check_failed();
    out.finish(cli.genus, command_name(&cli.command));
    Ok(if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Eval { .. } => "eval",
        Command::Level2 { .. } => "level2",
        Command::Decompose { .. } => "decompose",
        Command::Catalog { .. } => "catalog",
        Command::Rank => "rank",
        Command::Verify => "verify",
    }
}

fn cmd_eval(genus: Genus, text: &str, out: &mut Output) -> Result<(), String> {
    let word = Word::parse(text, genus).map_err(|e| e.to_string())?;
    let action = evaluate(genus, &word).map_err(|e| e.to_string())?;
    let r = action.project_r();
    out.field_str("word", &word.to_string());
    out.matrix("h1_action", action.matrix());
    out.matrix("rho", r.matrix());
    out.f2_matrix("mod2", &action.mod2());
    Ok(())
}

fn cmd_level2(genus: Genus, text: &str, out: &mut Output) -> Result<(), String> {
    let word = Word::parse(text, genus).map_err(|e| e.to_string())?;
    let verdict = is_level2(genus, &word).map_err(|e| e.to_string())?;
    out.field_str("word", &word.to_string());
    out.field_bool("level2", verdict);
    Ok(())
}

fn parse_matrix_input(input: &str) -> Option<Result<IntMatrix, String>> {
    let tokens: Vec<&str> = input.split_whitespace().collect();
    if tokens.is_empty() || !tokens.iter().all(|t| t.parse::<BigInt>().is_ok()) {
        return None;
    }
    if tokens.len() != 4 {
        return Some(Err(format!(
            "matrix input needs 4 entries (row-major), got {}",
            tokens.len()
        )));
    }
    let e: Vec<BigInt> = tokens.iter().map(|t| t.parse().unwrap()).collect();
    Some(IntMatrix::from_rows(vec![
        vec![e[0].clone(), e[1].clone()],
        vec![e[2].clone(), e[3].clone()],
    ])
    .map_err(|e| e.to_string()))
}

fn cmd_decompose(genus: Genus, input: &str, out: &mut Output) -> Result<(), String> {
    if genus.get() != 3 {
        return Err(format!("decompose requires genus 3, got {}", genus.get()));
    }
    let matrix = match parse_matrix_input(input) {
        Some(m) => {
            let m = m?;
            out.field_str("input", &format!("matrix {}", render::flat(&m)));
            m
        }
        None => {
            let word = Word::parse(input, genus).map_err(|e| e.to_string())?;
            out.field_str("input", &format!("word {word}"));
            rho(genus, &word).map_err(|e| e.to_string())?.0
        }
    };
    out.matrix("matrix", &matrix);

    let stu = decompose_gl2(&matrix).map_err(|e| e.to_string())?;
    let stu_ok = stu_eval(&stu) == matrix;
    out.check(Check::new("stu_round_trip", &stu.to_string(), stu_ok));
    if stu_ok {
        out.field_str("stu_word", &stu.to_string());
    }

    let mcg = stu_to_mcg(&stu);
    let mcg_ok = rho(genus, &mcg).map_err(|e| e.to_string())?.0 == matrix;
    out.check(Check::new("mcg_round_trip", &mcg.to_string(), mcg_ok));
    if mcg_ok {
        out.field_str("mcg_word", &mcg.to_string());
    }

    if level2_member(&matrix).map_err(|e| e.to_string())? {
        let word = level2_decompose(&matrix).map_err(|e| e.to_string())?;
        let ok = eta(genus, &word).map_err(|e| e.to_string())?.0 == matrix;
        out.check(Check::new("level2_round_trip", &word.to_string(), ok));
        if ok {
            out.field_str("level2_word", &word.to_string());
        }
    } else {
        out.field_bool("level2", false);
    }
    Ok(())
}

fn cmd_catalog(genus: Genus, alt: bool, out: &mut Output) -> Result<(), String> {
    let cat = if alt {
        catalog_alt(genus)
    } else {
        catalog(genus)
    }
    .map_err(|e| e.to_string())?;
    out.field_u64("count", cat.len() as u64);
    for (index, entry) in cat.entries.iter().enumerate() {
        let image = eta(genus, &entry.word).map_err(|e| e.to_string())?;
        let invariant = f_map(&image).map_err(|e| e.to_string())?;
        out.catalog_row(
            index,
            &entry.kind.to_string(),
            &entry.word.to_string(),
            image.matrix(),
            &invariant,
        );
    }
    Ok(())
}

fn cmd_rank(genus: Genus, out: &mut Output) -> Result<(), String> {
    let cert = rank_certificate(genus).map_err(|e| e.to_string())?;
    let g = genus.get();
    out.field_u64("rank", cert.rank as u64);
    out.field_str(
        "witness",
        &cert
            .witness
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(" "),
    );
    out.field_u64("lower_bound", ((g - 1) * (g - 1)) as u64);
    if g <= 8 {
        out.check(Check::new(
            "rank_equals_lower_bound",
            &format!("(g-1)^2 = {}", (g - 1) * (g - 1)),
            cert.rank == (g - 1) * (g - 1),
        ));
    }
    Ok(())
}

fn cmd_verify(genus: Genus, seed: u64, out: &mut Output) -> Result<(), String> {
    let report = verify_suite(genus, seed).map_err(|e| e.to_string())?;
    out.field_u64("seed", seed);
    out.field_u64("passed", (report.reports.len() - report.failures()) as u64);
    out.field_u64("failed", report.failures() as u64);
    for note in &report.notes {
        out.note(note);
    }
    for r in &report.reports {
        let mut check = Check::new(&r.family, &r.params, r.status == Status::Pass);
        if let Some((lhs, rhs)) = &r.witness {
            check = check.with_witness(lhs, rhs);
        }
        out.check(check);
    }
    Ok(())
}
