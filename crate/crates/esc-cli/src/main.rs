//! esc: verify, enumerate, and search Erdos-Straus decompositions
//! 4/p = 1/x + 1/y + 1/z, reproduce the per-kind triple tables, explore the
//! Berggren tree, and scan prime ranges for witnesses.
//!
//! Exit codes: 0 valid/success, 1 invalid or witness missing, 2 usage
//! error, 3 overflow abort.

mod output;
mod range;

use clap::{Args, Parser, Subcommand};

use esc::bezout::{self, FamilyKind};
use esc::kernel::Nat;
use esc::solutions::{self, classify, EscSolution, SolutionClass};
use esc::triples::{self, TripleKind};
use esc::{berggren, Error};

use output::{Format, Row, Table};

pub(crate) const EXIT_INVALID: i32 = 1;
pub(crate) const EXIT_USAGE: i32 = 2;
pub(crate) const EXIT_OVERFLOW: i32 = 3;

#[derive(Parser)]
#[command(name = "esc", version, about = "Erdos-Straus decomposition toolkit")]
struct Cli {
    /// Emit CSV with a header row
    #[arg(long, global = true, conflicts_with = "json")]
    csv: bool,
    /// Emit JSON lines, one object per row
    #[arg(long, global = true)]
    json: bool,
    /// Suppress per-row output
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check one candidate decomposition and classify it
    Verify {
        #[arg(value_parser = parse_nat)]
        p: Nat,
        #[arg(value_parser = parse_nat)]
        x: Nat,
        #[arg(value_parser = parse_nat)]
        y: Nat,
        #[arg(value_parser = parse_nat)]
        z: Nat,
    },
    /// List all non-trivial solutions for one odd prime
    Enumerate {
        #[arg(value_parser = parse_nat)]
        p: Nat,
    },
    /// Solution tables with the derived triple of the given kind
    Tables {
        #[arg(value_parser = parse_kind)]
        kind: TripleKind,
        #[arg(value_parser = parse_nat)]
        p_max: Nat,
    },
    /// Bezout family grid search for solutions of one class
    Search {
        #[arg(value_parser = parse_nat)]
        p: Nat,
        #[arg(value_parser = parse_family)]
        kind: FamilyKind,
        #[arg(value_parser = parse_nat)]
        m_max: Nat,
        #[arg(value_parser = parse_nat)]
        k_max: Nat,
        /// Scan the reduced type II condition instead of the plain grid
        #[arg(long)]
        reduced: bool,
    },
    /// Berggren tree of primitive Pythagorean triples
    Berggren(BerggrenArgs),
    /// Scan every prime in [lo, hi] for a non-trivial witness
    Range {
        #[arg(value_parser = parse_nat)]
        lo: Nat,
        #[arg(value_parser = parse_nat)]
        hi: Nat,
        /// Worker threads; static block partitioning keeps the output
        /// bytes identical for any count
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
}

#[derive(Args)]
struct BerggrenArgs {
    #[command(subcommand)]
    command: BerggrenCommand,
}

#[derive(Subcommand)]
enum BerggrenCommand {
    /// Breadth-first listing of the tree
    Tree {
        #[arg(value_parser = parse_depth)]
        max_depth: usize,
        /// Drop nodes with hypotenuse above this bound
        #[arg(long, value_parser = parse_nat)]
        max_hypotenuse: Option<Nat>,
    },
    /// Matrix path from (3, 4, 5) to a primitive triple
    Path {
        #[arg(value_parser = parse_nat)]
        a: Nat,
        #[arg(value_parser = parse_nat)]
        b: Nat,
        #[arg(value_parser = parse_nat)]
        c: Nat,
    },
}

fn parse_nat(s: &str) -> Result<Nat, String> {
    s.parse::<Nat>().map_err(|e| e.to_string())
}

fn parse_depth(s: &str) -> Result<usize, String> {
    s.parse::<usize>().map_err(|e| e.to_string())
}

fn parse_kind(s: &str) -> Result<TripleKind, String> {
    match s {
        "first" => Ok(TripleKind::First),
        "second" => Ok(TripleKind::Second),
        "third" => Ok(TripleKind::Third),
        _ => Err("expected one of: first, second, third".into()),
    }
}

fn parse_family(s: &str) -> Result<FamilyKind, String> {
    match s {
        "typeI" => Ok(FamilyKind::TypeI),
        "typeII" => Ok(FamilyKind::TypeII),
        _ => Err("expected one of: typeI, typeII".into()),
    }
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Text
    };
    let code = match cli.command {
        Command::Verify { p, x, y, z } => cmd_verify(p, x, y, z, format, cli.quiet),
        Command::Enumerate { p } => cmd_enumerate(p, format, cli.quiet),
        Command::Tables { kind, p_max } => cmd_tables(kind, p_max, format, cli.quiet),
        Command::Search { p, kind, m_max, k_max, reduced } => {
            cmd_search(p, kind, m_max, k_max, reduced, format, cli.quiet)
        }
        Command::Berggren(args) => match args.command {
            BerggrenCommand::Tree { max_depth, max_hypotenuse } => {
                cmd_berggren_tree(max_depth, max_hypotenuse, format, cli.quiet)
            }
            BerggrenCommand::Path { a, b, c } => cmd_berggren_path(a, b, c, cli.quiet),
        },
        Command::Range { lo, hi, workers } => range::cmd_range(lo, hi, workers, format, cli.quiet),
    };
    std::process::exit(code);
}

fn fail(err: Error) -> i32 {
    eprintln!("error: {err}");
    match err {
        Error::Overflow => EXIT_OVERFLOW,
        _ => EXIT_USAGE,
    }
}

fn cmd_verify(p: Nat, x: Nat, y: Nat, z: Nat, format: Format, quiet: bool) -> i32 {
    if p == 0 || x == 0 || y == 0 || z == 0 {
        eprintln!("error: p, x, y, z must all be positive");
        return EXIT_USAGE;
    }
    if let Err(e @ Error::Overflow) = solutions::verify_identity(p, x, y, z) {
        return fail(e);
    }
    let sol = EscSolution::new(p, x, y, z);
    let class = classify(&sol);

    // The three necessary conditions only apply on strictly ordered pairs;
    // report each as yes/no/-.
    let cond = |r: esc::Result<bool>| match r {
        Ok(true) => "yes",
        Ok(false) => "no",
        Err(_) => "-",
    };
    let gpy = esc::kernel::gcd(p, y).unwrap_or(0);
    let eq5 = cond(solutions::check_eq5(p, x, y).map(|(_, ok)| ok));
    let eq6 = cond(solutions::check_eq6(p, x, z, gpy));
    let eq7 = cond(solutions::check_eq7(p, y, z));

    if !quiet {
        let mut table = Table::new(&["p", "x", "y", "z", "kind", "eq5", "eq6", "eq7"]);
        table.push(
            Row::solution(p, x, y, z)
                .kind(class.to_string())
                .text("eq5", eq5)
                .text("eq6", eq6)
                .text("eq7", eq7),
        );
        table.emit(format);
    }
    if class == SolutionClass::Invalid {
        EXIT_INVALID
    } else {
        0
    }
}

fn cmd_enumerate(p: Nat, format: Format, quiet: bool) -> i32 {
    let sols = match solutions::enumerate_nontrivial(p) {
        Ok(sols) => sols,
        Err(e) => return fail(e),
    };
    if !quiet {
        let mut table = Table::new(&["p", "x", "y", "z", "kind"]);
        for s in &sols {
            table.push(Row::solution(s.p, s.x, s.y, s.z).kind(classify(s).to_string()));
        }
        table.emit(format);
    }
    0
}

fn cmd_tables(kind: TripleKind, p_max: Nat, format: Format, quiet: bool) -> i32 {
    if p_max < 3 {
        eprintln!("error: p_max must be at least 3");
        return EXIT_USAGE;
    }
    if u64::try_from(p_max).is_err() {
        eprintln!("error: p_max exceeds 64 bits");
        return EXIT_USAGE;
    }
    let mut table = Table::new(&["p", "x", "y", "z", "A", "B", "C"]);
    let mut p: Nat = 3;
    while p <= p_max {
        if solutions::is_prime(p as u64) {
            let sols = match solutions::enumerate_nontrivial(p) {
                Ok(sols) => sols,
                Err(e) => return fail(e),
            };
            for s in &sols {
                let (u, v) = kind.legs(s);
                match triples::forward(kind, u, v) {
                    Ok(t) => {
                        table.push(Row::solution(s.p, s.x, s.y, s.z).triple(t.a, t.b, t.c));
                    }
                    Err(Error::Overflow) => {
                        eprintln!("warning: overflow for p={p} ({}, {}); row skipped", s.x, s.y);
                    }
                    Err(e) => return fail(e),
                }
            }
        }
        p += 1;
    }
    if !quiet {
        table.emit(format);
    }
    0
}

fn cmd_search(
    p: Nat,
    kind: FamilyKind,
    m_max: Nat,
    k_max: Nat,
    reduced: bool,
    format: Format,
    quiet: bool,
) -> i32 {
    if reduced && kind != FamilyKind::TypeII {
        eprintln!("error: --reduced only applies to typeII");
        return EXIT_USAGE;
    }
    let certs = if reduced {
        bezout::search_reduced_type2(p, m_max, k_max)
    } else {
        bezout::search_solutions(p, kind, m_max, k_max)
    };
    let certs = match certs {
        Ok(certs) => certs,
        Err(e) => return fail(e),
    };
    if !quiet {
        let mut table = Table::new(&["p", "x", "y", "z", "kind", "m", "k"]);
        for c in &certs {
            // every certificate re-verifies before it is printed
            assert_eq!(solutions::verify_identity(c.p, c.x, c.y, c.z), Ok(true));
            table.push(
                Row::solution(c.p, c.x, c.y, c.z)
                    .kind(c.kind.to_string())
                    .m(c.m)
                    .k(c.k),
            );
        }
        table.emit(format);
    }
    0
}

fn cmd_berggren_tree(
    max_depth: usize,
    max_hypotenuse: Option<Nat>,
    format: Format,
    quiet: bool,
) -> i32 {
    let nodes = match berggren::enumerate_tree(max_depth, max_hypotenuse.unwrap_or(Nat::MAX)) {
        Ok(nodes) => nodes,
        Err(e) => return fail(e),
    };
    if !quiet {
        let mut table = Table::new(&["a", "b", "c", "depth", "path"]);
        for n in &nodes {
            table.push(Row::tree(n));
        }
        table.emit(format);
    }
    0
}

fn cmd_berggren_path(a: Nat, b: Nat, c: Nat, quiet: bool) -> i32 {
    match berggren::find_path(a, b, c) {
        Ok(path) => {
            if !quiet {
                println!("{}", output::path_string(&path));
            }
            0
        }
        Err(e @ (Error::NotPythagorean | Error::NotPrimitive)) => {
            eprintln!("error: {e}");
            EXIT_INVALID
        }
        Err(e) => fail(e),
    }
}
