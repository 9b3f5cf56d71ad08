use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cobip::bench::{fit_exponent, run_bench, BenchRow, DEFAULT_SIZES};
use cobip::formats::{parse_graph, parse_matrix, parse_word, write_graph, write_matrix};
use cobip::sweep::{run_suites, Suite, SuiteReport};
use cobip::CliError;
use cobip_core::graph::{cobipartite_partition, generate_family, FamilyId};
use cobip_core::matrix::{bracelets, cco_decision, generate_pattern, search_cco_biorder_with, PatternId};
use cobip_core::orientation::{search_semi_transitive_with, DEFAULT_SEARCH_CAP};
use cobip_core::recognizer::{
    biadjacency, cg, generate_gs, is_cobipartite_permutation, recognize_with, witness_orientation, PermutationAnswer,
};
use cobip_core::words::{represents, search_representant_with, DEFAULT_WORD_CAP};
use cobip_core::{Budget, Decision, Graph, GsMember, Verdict};

#[derive(Parser)]
#[command(name = "cobip", version, about = "Semi-transitivity of co-bipartite graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide semi-transitivity, with a witness orientation or a certificate.
    Recognize(Input),
    /// Print a semi-transitive orientation.
    Orient(Input),
    /// Print a forbidden induced subgraph.
    Certify {
        #[command(flatten)]
        input: Input,
        /// Certify that the graph is not a permutation graph instead.
        #[arg(long)]
        permutation: bool,
    },
    /// Check that a word represents a graph (exit 1 if it does not).
    VerifyWord {
        #[arg(long)]
        graph: String,
        /// The word inline, or a file holding it.
        #[arg(long)]
        word: String,
    },
    /// Brute-force oracles: orientation search on --graph, word search on
    /// --graph with --kmax, biorder search on --matrix.
    Oracle {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Generate a named graph, forbidden graph, pattern matrix or bracelets.
    Gen {
        /// A graph family (CoC2k, G1, G2, G3, W5, W7, Y6), a forbidden graph
        /// (CG(ZA), CG(MIkStar), ...), a pattern (ZA, coZC^T, MIkStar, ...)
        /// or `bracelets`.
        #[arg(long)]
        family: String,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Run the exhaustive equivalence suites.
    Sweep {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Time the CCO decision on interval-structured yes-instances.
    Bench {
        /// Target sizes (rows + columns + ones).
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Args)]
struct Input {
    /// Graph file ("-" for stdin).
    #[arg(long, conflicts_with = "matrix", required_unless_present = "matrix")]
    graph: Option<String>,
    /// Matrix file; the graph is CG of the matrix.
    #[arg(long)]
    matrix: Option<String>,
    /// Node budget of the searches.
    #[arg(long)]
    budget: Option<u64>,
    /// Fail with exit code 3 instead of returning a partial answer.
    #[arg(long)]
    authoritative: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
}

enum Source {
    Graph(Graph),
    Matrix(cobip_core::BinaryMatrix),
}

fn read_text(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| CliError::input(format!("{path}: {e}")))
}

impl Input {
    fn budget(&self) -> Budget {
        self.budget.map(Budget::new).unwrap_or_default()
    }

    fn source(&self) -> Result<Source, CliError> {
        match (&self.graph, &self.matrix) {
            (Some(g), _) => Ok(Source::Graph(parse_graph(&read_text(g)?)?)),
            (None, Some(m)) => Ok(Source::Matrix(parse_matrix(&read_text(m)?)?)),
            (None, None) => Err(CliError::input("one of --graph or --matrix is required")),
        }
    }

    fn graph(&self) -> Result<Graph, CliError> {
        Ok(match self.source()? {
            Source::Graph(g) => g,
            Source::Matrix(m) => cg(&m).0,
        })
    }
}

fn verdict_csv(v: &Verdict) -> String {
    let mut out = String::from("decision,path,family,k,vertices,arcs\n");
    let path = v.path.map(|p| p.to_string()).unwrap_or_default();
    let (family, k, vertices) = match &v.certificate {
        Some(c) => (
            c.family.label().to_string(),
            c.family.k().map(|k| k.to_string()).unwrap_or_default(),
            c.vertices.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "),
        ),
        None => Default::default(),
    };
    let arcs = v
        .witness
        .as_ref()
        .map(|o| o.arcs().iter().map(|(a, b)| format!("{a}>{b}")).collect::<Vec<_>>().join(" "))
        .unwrap_or_default();
    out.push_str(&format!("{},{path},{family},{k},{vertices},{arcs}\n", v.decision));
    out
}

/// Report text and exit code of a successful run.
struct Report {
    text: String,
    code: u8,
}

impl Report {
    fn ok(text: String) -> Report {
        Report { text, code: 0 }
    }
}

/// Without `--authoritative` a budget failure becomes an `UNKNOWN` line.
fn soften<T>(r: Result<T, cobip_core::Error>, authoritative: bool) -> Result<Result<T, String>, CliError> {
    match r {
        Ok(x) => Ok(Ok(x)),
        Err(e) if e.is_budget() && !authoritative => Ok(Err(format!("UNKNOWN {e}\n"))),
        Err(e) => Err(e.into()),
    }
}

fn recognize_cmd(input: &Input) -> Result<Report, CliError> {
    let g = input.graph()?;
    let v = recognize_with(&g, &mut input.budget())?;
    if input.authoritative && v.witness.is_none() && v.certificate.is_none() {
        return Err(CliError::Budget(format!("{}: no witness or certificate within budget", v.decision)));
    }
    Ok(Report::ok(match input.format {
        Format::Text => v.to_string(),
        Format::Csv => verdict_csv(&v),
    }))
}

fn orient_cmd(input: &Input) -> Result<Report, CliError> {
    let g = input.graph()?;
    let p = cobipartite_partition(&g)
        .map_err(|c| CliError::input(format!("graph is not co-bipartite: odd cycle {:?} in the complement", c.0)))?;
    if !cco_decision(&biadjacency(&g, &p)?) {
        return Ok(Report::ok(format!("{}\n", Decision::NotSemiTransitive)));
    }
    match soften(witness_orientation(&g, &p, &mut input.budget()), input.authoritative)? {
        Ok(Some((o, path))) => Ok(Report::ok(format!("WITNESS path={path}\n{o}"))),
        Ok(None) if input.authoritative => Err(CliError::Budget("no witness route applies".into())),
        Ok(None) => Ok(Report::ok("UNKNOWN no witness route applies\n".into())),
        Err(line) => Ok(Report::ok(line)),
    }
}

fn certify_cmd(input: &Input, permutation: bool) -> Result<Report, CliError> {
    let g = input.graph()?;
    let mut budget = input.budget();
    if permutation {
        return match soften(is_cobipartite_permutation(&g, &mut budget), input.authoritative)? {
            Ok(PermutationAnswer::Permutation(_)) => Ok(Report::ok("PERMUTATION\n".into())),
            Ok(PermutationAnswer::NotPermutation(c)) => Ok(Report::ok(format!("NOT-PERMUTATION\n{c}\n"))),
            Err(line) => Ok(Report::ok(line)),
        };
    }
    let v = recognize_with(&g, &mut budget)?;
    match (&v.decision, &v.certificate) {
        (Decision::SemiTransitive, _) => Ok(Report::ok(format!("{}\n", v.decision))),
        (Decision::NotSemiTransitive, Some(c)) => Ok(Report::ok(format!("{}\n{c}\n", v.decision))),
        (Decision::NotSemiTransitive, None) => Err(CliError::Internal("negative decision without a certificate".into())),
    }
}

fn verify_word_cmd(graph: &str, word: &str) -> Result<Report, CliError> {
    let g = parse_graph(&read_text(graph)?)?;
    let text = if std::path::Path::new(word).is_file() { read_text(word)? } else { word.to_string() };
    let w = parse_word(&text)?;
    Ok(if represents(&w, &g)? {
        Report::ok("REPRESENTS\n".into())
    } else {
        Report {
            text: "DOES-NOT-REPRESENT\n".into(),
            code: 1,
        }
    })
}

fn oracle_cmd(input: &Input, kmax: Option<usize>, cap: Option<usize>) -> Result<Report, CliError> {
    let mut budget = input.budget();
    let auth = input.authoritative;
    let text = match (input.source()?, kmax) {
        (Source::Matrix(m), _) => match soften(search_cco_biorder_with(&m, cap.unwrap_or(7), &mut budget), auth)? {
            Ok(Some(b)) => format!("CCO\nROWS {}\nCOLS {}\n", one_based(&b.row_order), one_based(&b.col_order)),
            Ok(None) => "NOT-CCO\n".into(),
            Err(line) => line,
        },
        (Source::Graph(g), Some(k)) => {
            match soften(search_representant_with(&g, k, cap.unwrap_or(DEFAULT_WORD_CAP), &mut budget), auth)? {
                Ok(Some(w)) => format!("WORD k={}\n{w}\n", w.uniformity().unwrap_or(0)),
                Ok(None) => format!("NO-WORD kmax={k}\n"),
                Err(line) => line,
            }
        }
        (Source::Graph(g), None) => {
            match soften(search_semi_transitive_with(&g, cap.unwrap_or(DEFAULT_SEARCH_CAP), &mut budget), auth)? {
                Ok(Some(o)) => format!("SEMI-TRANSITIVE\n{o}"),
                Ok(None) => "NOT-SEMI-TRANSITIVE\n".into(),
                Err(line) => line,
            }
        }
    };
    Ok(Report::ok(text))
}

fn one_based(v: &[usize]) -> String {
    v.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(" ")
}

fn gen_cmd(family: &str, k: Option<u32>) -> Result<Report, CliError> {
    if family == "bracelets" {
        let k = k.ok_or_else(|| CliError::input("bracelets need --k"))?;
        let mut text = String::new();
        for b in bracelets(k as usize)? {
            text.extend(b.iter().map(|&x| char::from(b'0' + x)));
            text.push('\n');
        }
        return Ok(Report::ok(text));
    }
    if family.starts_with("CG(") {
        return Ok(Report::ok(write_graph(&generate_gs(GsMember::parse(family, k)?)?)));
    }
    if let Ok(id) = FamilyId::parse(family, k) {
        return Ok(Report::ok(write_graph(&generate_family(id)?)));
    }
    let id = PatternId::parse(family, k)
        .map_err(|_| CliError::input(format!("unknown family, forbidden graph or pattern {family:?}")))?;
    Ok(Report::ok(write_matrix(&generate_pattern(id)?)))
}

fn sweep_cmd(suite: Suite, format: Format) -> Report {
    let reports = run_suites(suite);
    let mut text = String::new();
    if format == Format::Csv {
        text.push_str(SuiteReport::csv_header());
        text.push('\n');
    }
    for r in &reports {
        match format {
            Format::Text => text.push_str(&r.to_string()),
            Format::Csv => {
                text.push_str(&r.csv_row());
                text.push('\n');
            }
        }
    }
    let ok = reports.iter().all(SuiteReport::passed);
    Report {
        text,
        code: if ok { 0 } else { 4 },
    }
}

fn bench_cmd(sizes: Option<Vec<usize>>, reps: usize, seed: u64, format: Format) -> Report {
    let sizes = sizes.unwrap_or_else(|| DEFAULT_SIZES.to_vec());
    let rows = run_bench(&sizes, reps, seed);
    let exponent = fit_exponent(&rows);
    let mut text = String::new();
    match format {
        Format::Csv => {
            text.push_str(BenchRow::CSV_HEADER);
            text.push('\n');
            for r in &rows {
                text.push_str(&r.csv());
                text.push('\n');
            }
            if let Some(e) = exponent {
                text.push_str(&format!("# exponent {e:.3}\n"));
            }
        }
        Format::Text => {
            for r in &rows {
                text.push_str(&format!(
                    "size={} rows={} cols={} ones={} time={:.3}ms decision={}\n",
                    r.size,
                    r.rows,
                    r.cols,
                    r.ones,
                    r.ns as f64 / 1e6,
                    if r.decision { "CCO" } else { "NOT-CCO" }
                ));
            }
            if let Some(e) = exponent {
                text.push_str(&format!("exponent={e:.3}\n"));
            }
        }
    }
    Report::ok(text)
}

fn run(cli: Cli) -> Result<Report, CliError> {
    match cli.command {
        Command::Recognize(input) => recognize_cmd(&input),
        Command::Orient(input) => orient_cmd(&input),
        Command::Certify { input, permutation } => certify_cmd(&input, permutation),
        Command::VerifyWord { graph, word } => verify_word_cmd(&graph, &word),
        Command::Oracle { input, kmax, cap } => oracle_cmd(&input, kmax, cap),
        Command::Gen { family, k } => gen_cmd(&family, k),
        Command::Sweep { suite, jobs, format } => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.unwrap_or(0))
                .build()
                .map_err(|e| CliError::Internal(e.to_string()))?;
            Ok(pool.install(|| sweep_cmd(suite, format)))
        }
        Command::Bench {
            sizes,
            reps,
            seed,
            format,
        } => Ok(bench_cmd(sizes, reps, seed, format)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            let mut out = io::stdout().lock();
            if out.write_all(report.text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(4);
            }
            ExitCode::from(report.code)
        }
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}
