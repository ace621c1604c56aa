//! Command-line front end: bound evaluation, constants tables, polynomial
//! rows, the reference error table, curve export, crossover thresholds and
//! the full verification run.
//!
//! Exit codes: 0 success, 1 domain error, 2 verification failure, 64 usage.

use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use serde_json::json;

use mills_bounds::analysis;
use mills_bounds::constants;
use mills_bounds::dd::Dd;
use mills_bounds::families::{self, BoundId, Family};
use mills_bounds::oracle::{self, Scaled};
use mills_bounds::poly;
use mills_bounds::verify::{self, VerifyConfig};
use mills_bounds::{GridSpec, Spacing};

const EXIT_DOMAIN: i32 = 1;
const EXIT_VERIFY: i32 = 2;
const EXIT_USAGE: i32 = 64;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Parser)]
#[command(
    name = "mills-bounds",
    version,
    about = "Certified bounds on the standard Gaussian upper tail",
    disable_help_subcommand = true
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Significant digits for numeric output (6..=25). Defaults to 17;
    /// `constants` and `curve` default to 20.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(6..=25))]
    precision: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one bound at a point.
    Bound {
        /// Family name (classic-cf, shenton-j1, shenton-j2, sqrt-star,
        /// rational-star, exp-star, komatu-lower, komatu-upper, pollak,
        /// sampford, lb1).
        #[arg(long)]
        family: String,
        /// Fraction depth for the parametric families.
        #[arg(long, default_value_t = 0)]
        k: u32,
        /// Evaluation point.
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        /// Print only which side of the tail the bound certifies.
        #[arg(long, action = ArgAction::SetTrue)]
        side: bool,
    },
    /// Print k, c_k*, delta_k, x_k, x~_k and the sandwich slacks per row.
    Constants {
        #[arg(long = "k-max", value_parser = clap::value_parser!(u32).range(0..=1_000_000))]
        k_max: u32,
        /// Shorthand for --format json.
        #[arg(long, action = ArgAction::SetTrue)]
        json: bool,
        /// Shorthand for --format csv.
        #[arg(long, action = ArgAction::SetTrue)]
        csv: bool,
    },
    /// Print polynomial coefficient rows.
    Poly {
        #[arg(long)]
        k: u32,
        /// Print all rows 0..=k in the table layout.
        #[arg(long, action = ArgAction::SetTrue)]
        table: bool,
    },
    /// Recompute the reference maximal-error table with pass/fail per cell.
    Table1,
    /// Signed error curves as CSV: header `x,<bound-id>,...`
    Curve {
        /// Comma-separated bound ids, e.g. sqrt-star-3,pollak.
        #[arg(long, value_delimiter = ',', required = true)]
        bounds: Vec<String>,
        #[arg(long)]
        low: f64,
        #[arg(long)]
        high: f64,
        #[arg(long)]
        points: usize,
        /// Log-spaced grid instead of linear.
        #[arg(long, action = ArgAction::SetTrue)]
        log: bool,
    },
    /// Run every invariant suite; exit 0 iff all pass.
    Verify {
        /// Largest order for the ordering-chain suites (2..=1000).
        #[arg(long = "k-max", default_value_t = 10,
              value_parser = clap::value_parser!(u32).range(2..=1000))]
        k_max: u32,
    },
    /// Threshold above which the square-root family beats the exponential one.
    Crossover {
        #[arg(long)]
        k: u32,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap renders help/version on stdout with success
            if e.use_stderr() {
                eprint!("{e}");
                std::process::exit(EXIT_USAGE);
            }
            print!("{e}");
            std::process::exit(0);
        }
    };

    if let Ok(v) = std::env::var("MILLS_BOUNDS_THREADS") {
        match v.parse::<usize>() {
            Ok(n) if n >= 1 => {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global()
                    .ok();
            }
            _ => {
                eprintln!("MILLS_BOUNDS_THREADS must be a positive integer");
                std::process::exit(EXIT_USAGE);
            }
        }
    }

    let code = run(cli);
    std::process::exit(code);
}

fn run(cli: Cli) -> i32 {
    match &cli.command {
        Command::Bound { family, k, x, side } => {
            cmd_bound(&cli_fmt(&cli), family, *k, *x, *side)
        }
        Command::Constants { k_max, json, csv } => {
            let mut fmt = cli_fmt(&cli);
            fmt.digits = cli.precision.unwrap_or(20);
            if *json {
                fmt.format = Format::Json;
            } else if *csv {
                fmt.format = Format::Csv;
            }
            cmd_constants(&fmt, *k_max)
        }
        Command::Poly { k, table } => cmd_poly(&cli_fmt(&cli), *k, *table),
        Command::Table1 => cmd_table1(&cli_fmt(&cli)),
        Command::Curve {
            bounds,
            low,
            high,
            points,
            log,
        } => {
            let mut fmt = cli_fmt(&cli);
            fmt.digits = cli.precision.unwrap_or(20);
            cmd_curve(&fmt, bounds, *low, *high, *points, *log)
        }
        Command::Verify { k_max } => cmd_verify(&cli_fmt(&cli), *k_max),
        Command::Crossover { k } => cmd_crossover(&cli_fmt(&cli), *k),
    }
}

struct Fmt {
    format: Format,
    digits: u32,
}

fn cli_fmt(cli: &Cli) -> Fmt {
    Fmt {
        format: cli.format,
        digits: cli.precision.unwrap_or(17),
    }
}

impl Fmt {
    fn num(&self, v: Dd) -> String {
        v.to_sci(self.digits)
    }
}

fn sci_of_scaled(s: Scaled, digits: u32) -> String {
    match s.mantissa.to_decimal(digits) {
        None => "0e0".to_string(),
        Some((_, d, e)) => {
            let ds = d.to_string();
            let exp = e + s.exp10;
            if ds.len() == 1 {
                format!("{ds}e{exp}")
            } else {
                format!("{}.{}e{}", &ds[..1], &ds[1..], exp)
            }
        }
    }
}

fn domain_err(e: mills_bounds::Error) -> i32 {
    eprintln!("error: {e}");
    EXIT_DOMAIN
}

fn cmd_bound(fmt: &Fmt, family: &str, k: u32, x: f64, side_only: bool) -> i32 {
    let Some(fam) = Family::parse(family) else {
        eprintln!("error: unknown family `{family}`");
        return EXIT_USAGE;
    };
    let bound = BoundId::new(fam, k);
    if let Err(e) = bound.validate() {
        return domain_err(e);
    }
    let side = families::bound_side(bound);
    if side_only {
        println!("{side}");
        return 0;
    }
    let h = match families::eval_h(bound, x) {
        Ok(h) => h,
        Err(e) => return domain_err(e),
    };
    let value = oracle::gaussian_density(x) / h;
    let tail = oracle::upper_tail(x);
    let err = value - tail;
    match fmt.format {
        Format::Text => {
            println!("bound    {bound}");
            println!("h(x)     {}", fmt.num(h));
            println!("phi/h    {}", fmt.num(value));
            println!("side     {side}");
            println!(
                "oracle   {}",
                sci_of_scaled(oracle::upper_tail_scaled(x), fmt.digits)
            );
            println!("error    {}", fmt.num(err));
            if fam == Family::ExpStar && families::exp_seed_underflows(k, x) {
                println!("note     exponential seed term underflowed; precision degraded");
            }
        }
        Format::Csv => {
            println!("bound,h,value,side,oracle,error");
            println!(
                "{bound},{},{},{side},{},{}",
                fmt.num(h),
                fmt.num(value),
                fmt.num(tail),
                fmt.num(err)
            );
        }
        Format::Json => {
            let obj = json!({
                "bound": bound.to_string(),
                "h": fmt.num(h),
                "value": fmt.num(value),
                "side": side.to_string(),
                "oracle": fmt.num(tail),
                "error": fmt.num(err),
            });
            println!("{obj}");
        }
    }
    0
}

fn cmd_constants(fmt: &Fmt, k_max: u32) -> i32 {
    struct Row {
        k: u32,
        c: Dd,
        delta: Dd,
        xs: Dd,
        xt: Dd,
        slacks: [Dd; 3],
    }
    let rows: Vec<Row> = (0..=k_max)
        .map(|k| {
            let s = constants::sandwich_check(k);
            Row {
                k,
                c: constants::c_star(k),
                delta: constants::delta_k(k),
                xs: constants::x_star(k),
                xt: constants::x_tilde(k),
                slacks: [s.slack_lower, s.slack_mid, s.slack_upper],
            }
        })
        .collect();
    match fmt.format {
        Format::Csv | Format::Text => {
            println!("k,c_star,delta,x_star,x_tilde,slack_lower,slack_mid,slack_upper");
            for r in rows {
                println!(
                    "{},{},{},{},{},{},{},{}",
                    r.k,
                    fmt.num(r.c),
                    fmt.num(r.delta),
                    fmt.num(r.xs),
                    fmt.num(r.xt),
                    fmt.num(r.slacks[0]),
                    fmt.num(r.slacks[1]),
                    fmt.num(r.slacks[2])
                );
            }
        }
        Format::Json => {
            let arr: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "k": r.k,
                        "c_star": fmt.num(r.c),
                        "delta": fmt.num(r.delta),
                        "x_star": fmt.num(r.xs),
                        "x_tilde": fmt.num(r.xt),
                        "slack_lower": fmt.num(r.slacks[0]),
                        "slack_mid": fmt.num(r.slacks[1]),
                        "slack_upper": fmt.num(r.slacks[2]),
                    })
                })
                .collect();
            println!("{}", serde_json::Value::Array(arr));
        }
    }
    0
}

fn cmd_poly(fmt: &Fmt, k: u32, table: bool) -> i32 {
    let ks: Vec<u32> = if table { (0..=k).collect() } else { vec![k] };
    let mut rows = Vec::new();
    for k in ks {
        match poly::pq_polynomials(k) {
            Ok((p, q)) => rows.push((k, p, q)),
            Err(e) => return domain_err(e),
        }
    }
    let join = |coeffs: &[num_bigint::BigInt]| {
        coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    match fmt.format {
        Format::Text => {
            println!("{:>4}  {:<44} Q coefficients", "k", "P coefficients (ascending)");
            for (k, p, q) in rows {
                let q_str = if q.is_zero() { "0".to_string() } else { join(q.coeffs()) };
                println!("{k:>4}  {:<44} {}", join(p.coeffs()), q_str);
            }
        }
        Format::Csv => {
            println!("k,p_coeffs,q_coeffs");
            for (k, p, q) in rows {
                let q_str = if q.is_zero() { "0".to_string() } else { join(q.coeffs()) };
                println!("{k},{},{}", join(p.coeffs()), q_str);
            }
        }
        Format::Json => {
            let arr: Vec<_> = rows
                .iter()
                .map(|(k, p, q)| {
                    json!({
                        "k": k,
                        "p": p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        "q": q.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            println!("{}", serde_json::Value::Array(arr));
        }
    }
    0
}

fn fmt4(m: u32, e: i32) -> String {
    let s = m.to_string();
    format!("{}.{}e{}", &s[..1], &s[1..], e)
}

fn cmd_table1(fmt: &Fmt) -> i32 {
    let t = analysis::reproduce_table1();
    let all = t.all_match();
    match fmt.format {
        Format::Text => {
            println!(
                "{:>2} {:>12} {:>12} {:>12} {:>12} {:>12}",
                "k", "exp x>0", "sqrt x>0", "sqrt x>=1", "sqrt x>=2", "sqrt x>=3"
            );
            for k in 0..8u32 {
                let cols: Vec<String> = (0..5)
                    .map(|c| {
                        let cell = t.cell(k, c);
                        let mark = if cell.matches { "" } else { "!" };
                        format!("{}{}", fmt4(cell.guarded.0, cell.guarded.1), mark)
                    })
                    .collect();
                println!(
                    "{k:>2} {:>12} {:>12} {:>12} {:>12} {:>12}",
                    cols[0], cols[1], cols[2], cols[3], cols[4]
                );
            }
            for c in &t.cells {
                if !c.matches {
                    println!(
                        "mismatch at k = {}, column {}: computed {} (reference {})",
                        c.k,
                        c.column,
                        c.computed.to_sci(8),
                        fmt4(c.reference.0, c.reference.1)
                    );
                }
            }
            println!("{}", if all { "all 40 cells match" } else { "MISMATCH" });
        }
        Format::Csv => {
            println!("k,exp_max,sqrt_max,sqrt_from_1,sqrt_from_2,sqrt_from_3");
            for k in 0..8u32 {
                let cols: Vec<String> = (0..5)
                    .map(|c| {
                        let cell = t.cell(k, c);
                        fmt4(cell.guarded.0, cell.guarded.1)
                    })
                    .collect();
                println!("{k},{}", cols.join(","));
            }
        }
        Format::Json => {
            let arr: Vec<_> = t
                .cells
                .iter()
                .map(|c| {
                    json!({
                        "k": c.k,
                        "column": c.column,
                        "computed": c.computed.to_sci(fmt.digits),
                        "rounded": fmt4(c.guarded.0, c.guarded.1),
                        "reference": fmt4(c.reference.0, c.reference.1),
                        "matches": c.matches,
                    })
                })
                .collect();
            println!("{}", serde_json::Value::Array(arr));
        }
    }
    if all {
        0
    } else {
        EXIT_VERIFY
    }
}

fn cmd_curve(fmt: &Fmt, bounds: &[String], low: f64, high: f64, points: usize, log: bool) -> i32 {
    let mut ids = Vec::new();
    for s in bounds {
        match s.parse::<BoundId>() {
            Ok(b) => ids.push(b),
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        }
    }
    let spacing = if log { Spacing::Log } else { Spacing::Linear };
    let spec = match GridSpec::new(low, high, points, spacing) {
        Ok(s) => s,
        Err(e) => return domain_err(e),
    };
    let table = match analysis::curve_table(&ids, &spec) {
        Ok(t) => t,
        Err(e) => return domain_err(e),
    };
    let header: Vec<String> = std::iter::once("x".to_string())
        .chain(table.bounds.iter().map(|b| b.to_string()))
        .collect();
    println!("{}", header.join(","));
    for (x, row) in table.xs.iter().zip(&table.rows) {
        let mut cells = Vec::with_capacity(row.len() + 1);
        cells.push(Dd::from_f64(*x).to_sci(fmt.digits));
        for v in row {
            cells.push(v.to_sci(fmt.digits));
        }
        println!("{}", cells.join(","));
    }
    0
}

fn cmd_verify(fmt: &Fmt, k_max: u32) -> i32 {
    let cfg = VerifyConfig { chain_k_max: k_max };
    let checks = verify::run_all(&cfg);
    let all = checks.iter().all(|c| c.passed);
    match fmt.format {
        Format::Text => {
            for c in &checks {
                println!(
                    "{} {:<32} {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                );
            }
            println!(
                "{}/{} suites passed",
                checks.iter().filter(|c| c.passed).count(),
                checks.len()
            );
        }
        Format::Csv => {
            println!("suite,passed,detail");
            for c in &checks {
                println!("{},{},\"{}\"", c.name, c.passed, c.detail.replace('"', "'"));
            }
        }
        Format::Json => {
            let arr: Vec<_> = checks
                .iter()
                .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
                .collect();
            println!("{}", serde_json::Value::Array(arr));
        }
    }
    if all {
        0
    } else {
        EXIT_VERIFY
    }
}

fn cmd_crossover(fmt: &Fmt, k: u32) -> i32 {
    if k > 20 {
        return domain_err(mills_bounds::Error::OrderTooLarge { k, max: 20 });
    }
    match analysis::crossover_exp_vs_sqrt(k) {
        Ok(root) => {
            match fmt.format {
                Format::Json => println!("{}", json!({"k": k, "threshold": fmt.num(root)})),
                Format::Csv => {
                    println!("k,threshold");
                    println!("{k},{}", fmt.num(root));
                }
                Format::Text => println!("{}", fmt.num(root)),
            }
            0
        }
        Err(e) => domain_err(e),
    }
}
