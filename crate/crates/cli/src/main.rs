//! `z4codes`: code generation, encoding, decoding, verification suites and
//! channel simulation for quaternary codes.

mod simulate;

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use z4codes::analysis::suite::{run_suite, SuiteConfig, SUITES};
use z4codes::code::families::{build, kerdock_shift_rows, kerdock_trace_rows};
use z4codes::code::{Family, Z4Code};
use z4codes::decode::{parse_decode_line, DecodeLine, KerdockSoftDecoder, PreparataDecoder, SoftInput};
use z4codes::galois::GaloisRing;
use z4codes::z4::Z4Vector;

use simulate::{simulate, SimFamily};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(name = "z4codes", version, about = "Quaternary codes: Kerdock, Preparata, Goethals and relatives")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print generator and parity-check matrices of a code family.
    Code(CodeArgs),
    /// Encode information words, one per line.
    Encode(CodeArgs),
    /// Decode received words, one per line, to JSON records.
    Decode(CodeArgs),
    /// Run a verification suite and emit a JSON report.
    Verify(VerifyArgs),
    /// Estimate block and bit error rates over a QPSK/AWGN channel.
    Simulate(SimArgs),
}

#[derive(Args, Debug)]
struct Io {
    /// Input file (default stdin).
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Output file (default stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CodeArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[command(flatten)]
    io: Io,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    suite: String,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 4)]
    workers: usize,
    #[command(flatten)]
    io: Io,
}

#[derive(Args, Debug)]
struct SimArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    m: u32,
    /// Comma-separated Es/N0 values in dB; "inf" is a noiseless channel.
    #[arg(long, default_value = "0,2,4")]
    snr: String,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 4)]
    workers: usize,
    #[command(flatten)]
    io: Io,
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

fn usage(msg: impl ToString) -> Failure {
    Failure { code: 2, message: msg.to_string() }
}

fn failed(msg: impl ToString) -> Failure {
    Failure { code: 1, message: msg.to_string() }
}

fn open_input(io: &Io) -> Result<Box<dyn BufRead>, Failure> {
    match &io.input {
        Some(p) => {
            let f = File::open(p).map_err(|e| usage(format!("{}: {e}", p.display())))?;
            Ok(Box::new(BufReader::new(f)))
        }
        None => Ok(Box::new(BufReader::new(io::stdin()))),
    }
}

fn open_output(io: &Io) -> Result<Box<dyn Write>, Failure> {
    match &io.out {
        Some(p) => {
            let f = File::create(p).map_err(|e| failed(format!("{}: {e}", p.display())))?;
            Ok(Box::new(BufWriter::new(f)))
        }
        None => Ok(Box::new(BufWriter::new(io::stdout()))),
    }
}

fn write_err(e: io::Error) -> Failure {
    failed(format!("write failed: {e}"))
}

fn make_code(a: &CodeArgs) -> Result<(Family, Z4Code), Failure> {
    let family = Family::parse(&a.family).map_err(usage)?;
    let code = build(family, a.m, a.r, true).map_err(usage)?;
    Ok((family, code))
}

fn cmd_code(a: &CodeArgs) -> Result<bool, Failure> {
    let (family, code) = make_code(a)?;
    let mut out = open_output(&a.io)?;
    let mut text = format!("# z4codes {VERSION} code family={family} m={} r={}\n", a.m, a.r.map_or("-".into(), |r| r.to_string()));
    text += &format!("length: {}\ntype: {}\n", code.len(), code.type_string());
    if let Some(note) = &code.info().note {
        text += &format!("note: {note}\n");
    }
    let mut section = |title: &str, rows: &[String]| {
        text += &format!("{title}:\n");
        for r in rows {
            text += &format!("  {r}\n");
        }
    };
    section("generator", &code.generator_strings());
    section("parity-check", &code.parity_strings());
    if family == Family::Kerdock || family == Family::Octacode {
        let ring = GaloisRing::new(a.m).map_err(usage)?;
        let trace: Vec<String> = kerdock_trace_rows(&ring).iter().map(Z4Vector::to_string).collect();
        let shift: Vec<String> = kerdock_shift_rows(&ring).map_err(usage)?.iter().map(Z4Vector::to_string).collect();
        section("trace form", &trace);
        section("shift form", &shift);
    }
    out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(write_err)?;
    Ok(true)
}

fn parse_info(line: &str, code: &Z4Code) -> Result<Vec<u8>, String> {
    let digits: Vec<u8> = line
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| c.to_digit(4).map(|d| d as u8).ok_or_else(|| format!("invalid symbol {c:?}")))
        .collect::<Result<_, _>>()?;
    if digits.len() != code.k1() + code.k2() {
        return Err(format!("expected {} symbols, got {}", code.k1() + code.k2(), digits.len()));
    }
    Ok(digits)
}

fn cmd_encode(a: &CodeArgs) -> Result<bool, Failure> {
    let (_, code) = make_code(a)?;
    let input = open_input(&a.io)?;
    let mut out = open_output(&a.io)?;
    let mut ok = true;
    for (i, line) in input.lines().enumerate() {
        let line = line.map_err(|e| failed(format!("read failed: {e}")))?;
        if line.trim().is_empty() {
            continue;
        }
        match parse_info(&line, &code).and_then(|u| code.encode(&u).map_err(|e| e.to_string())) {
            Ok(c) => writeln!(out, "{c}").map_err(write_err)?,
            Err(e) => {
                eprintln!("line {}: {e}", i + 1);
                ok = false;
            }
        }
    }
    out.flush().map_err(write_err)?;
    Ok(ok)
}

enum LineDecoder {
    Hard(PreparataDecoder),
    Soft(KerdockSoftDecoder),
}

impl LineDecoder {
    fn new(family: Family, m: u32) -> Result<Self, Failure> {
        let ring = GaloisRing::new(m).map_err(usage)?;
        match family {
            Family::Kerdock => Ok(LineDecoder::Soft(KerdockSoftDecoder::new(ring))),
            Family::Preparata | Family::Octacode => Ok(LineDecoder::Hard(PreparataDecoder::new(ring).map_err(usage)?)),
            other => Err(usage(format!("no decoder for family {other}"))),
        }
    }

    fn len(&self) -> usize {
        match self {
            LineDecoder::Hard(d) => d.len(),
            LineDecoder::Soft(d) => d.len(),
        }
    }

    fn decode(&self, line: DecodeLine) -> Result<Value, String> {
        if line.len() != self.len() {
            return Err(format!("expected {} coordinates, got {}", self.len(), line.len()));
        }
        match self {
            LineDecoder::Hard(d) => {
                let v = match line {
                    DecodeLine::Hard(v) => v,
                    DecodeLine::Soft(s) => s.hard_decision(),
                };
                let r = d.decode(&v).map_err(|e| e.to_string())?;
                let mut j = r.to_json();
                if let Some(c) = r.codeword(&v) {
                    j["codeword"] = json!(c.to_string());
                }
                Ok(j)
            }
            LineDecoder::Soft(d) => {
                let s = match line {
                    DecodeLine::Hard(v) => SoftInput::from_codeword(&v),
                    DecodeLine::Soft(s) => s,
                };
                let r = d.decode(&s).map_err(|e| e.to_string())?;
                let c = r.codeword(d.ring());
                let err = &s.hard_decision() - &c;
                let mut j = r.to_json(d.ring());
                let nz = err.nonzeros();
                j["status"] = json!(if nz.is_empty() { "no-error" } else { "corrected" });
                j["errorPositions"] = json!(nz.iter().map(|&(p, _)| p).collect::<Vec<_>>());
                j["errorValues"] = json!(nz.iter().map(|&(_, v)| v).collect::<Vec<_>>());
                Ok(j)
            }
        }
    }
}

fn cmd_decode(a: &CodeArgs) -> Result<bool, Failure> {
    let family = Family::parse(&a.family).map_err(usage)?;
    let dec = LineDecoder::new(family, a.m)?;
    let input = open_input(&a.io)?;
    let mut out = open_output(&a.io)?;
    let mut ok = true;
    for (i, line) in input.lines().enumerate() {
        let line = line.map_err(|e| failed(format!("read failed: {e}")))?;
        if line.trim().is_empty() {
            continue;
        }
        let rec = parse_decode_line(&line).map_err(|e| e.to_string()).and_then(|l| dec.decode(l));
        let rec = match rec {
            Ok(mut j) => {
                j["line"] = json!(i + 1);
                j
            }
            Err(e) => {
                ok = false;
                json!({"line": i + 1, "status": "error", "error": e})
            }
        };
        writeln!(out, "{rec}").map_err(write_err)?;
    }
    out.flush().map_err(write_err)?;
    Ok(ok)
}

fn cmd_verify(a: &VerifyArgs) -> Result<bool, Failure> {
    let name = a.suite.trim();
    if name != "all" && !SUITES.contains(&name) {
        return Err(usage(format!("unknown suite {:?}; expected one of {}, all", a.suite, SUITES.join(", "))));
    }
    let cfg = SuiteConfig { workers: a.workers.max(1), seed: a.seed };
    let checks = run_suite(name, &cfg).map_err(usage)?;
    let passed = checks.iter().filter(|c| c.pass).count();
    let all = passed == checks.len();
    let report = json!({
        "tool": "z4codes",
        "version": VERSION,
        "suite": name,
        "seed": a.seed,
        "workers": cfg.workers,
        "pass": all,
        "passed": passed,
        "failed": checks.len() - passed,
        "checks": checks,
    });
    let mut out = open_output(&a.io)?;
    let text = serde_json::to_string_pretty(&report).map_err(failed)?;
    writeln!(out, "{text}").and_then(|_| out.flush()).map_err(write_err)?;
    Ok(all)
}

fn parse_snrs(s: &str) -> Result<Vec<f64>, Failure> {
    let v: Vec<f64> = s
        .split(',')
        .map(|t| {
            let t = t.trim();
            if t.eq_ignore_ascii_case("inf") {
                Ok(f64::INFINITY)
            } else {
                t.parse::<f64>().ok().filter(|x| x.is_finite()).ok_or_else(|| usage(format!("bad SNR value {t:?}")))
            }
        })
        .collect::<Result<_, _>>()?;
    if v.is_empty() {
        return Err(usage("empty SNR list"));
    }
    Ok(v)
}

fn cmd_simulate(a: &SimArgs) -> Result<bool, Failure> {
    let family = match Family::parse(&a.family).map_err(usage)? {
        Family::Kerdock => SimFamily::Kerdock,
        Family::Preparata | Family::Octacode => SimFamily::Preparata,
        other => return Err(usage(format!("no decoder for family {other}"))),
    };
    if a.trials == 0 {
        return Err(usage("--trials must be at least 1"));
    }
    let snrs = parse_snrs(&a.snr)?;
    let points = simulate(family, a.m, &snrs, a.trials, a.seed, a.workers).map_err(usage)?;
    let mut out = open_output(&a.io)?;
    let mut text = format!(
        "# z4codes {VERSION} simulate family={} m={} trials={} seed={} snr=Es/N0[dB]\nsnr_db,block_error_rate,bit_error_rate\n",
        a.family.to_ascii_lowercase(),
        a.m,
        a.trials,
        a.seed
    );
    for p in &points {
        text += &format!("{},{:.6e},{:.6e}\n", p.snr_db, p.block_error_rate(), p.bit_error_rate());
    }
    out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(write_err)?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.command {
        Command::Code(a) => cmd_code(a),
        Command::Encode(a) => cmd_encode(a),
        Command::Decode(a) => cmd_decode(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Simulate(a) => cmd_simulate(a),
    };
    match res {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("z4codes: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
