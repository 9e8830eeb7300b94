//! Prime-range witness scan. Work is split into static contiguous blocks
//! and merged back in prime order, so the output bytes never depend on the
//! worker count.

use esc::kernel::Nat;
use esc::solutions::{self, classify, EscSolution};

use crate::output::{Format, Row, Table};
use crate::{EXIT_INVALID, EXIT_USAGE};

struct PrimeReport {
    p: u64,
    witness: Option<EscSolution>,
    trivial: usize,
}

pub fn cmd_range(lo: Nat, hi: Nat, workers: usize, format: Format, quiet: bool) -> i32 {
    if lo > hi {
        eprintln!("error: lo must not exceed hi");
        return EXIT_USAGE;
    }
    if workers == 0 {
        eprintln!("error: workers must be at least 1");
        return EXIT_USAGE;
    }
    let Ok(hi) = u64::try_from(hi) else {
        eprintln!("error: range end exceeds 64 bits");
        return EXIT_USAGE;
    };
    let lo = u64::try_from(lo).unwrap_or(hi).max(2);

    let primes: Vec<u64> = (lo..=hi).filter(|&n| solutions::is_prime(n)).collect();
    let reports = scan(&primes, workers);

    let mut missing = Vec::new();
    let mut witnessed = 0usize;
    let mut with_trivial = 0usize;
    let mut table = Table::new(&["p", "x", "y", "z", "kind", "trivial"]);
    for r in &reports {
        if r.trivial > 0 {
            with_trivial += 1;
        }
        match (&r.witness, r.trivial) {
            (Some(sol), _) => {
                witnessed += 1;
                table.push(
                    Row::solution(sol.p, sol.x, sol.y, sol.z)
                        .kind(classify(sol).to_string())
                        .num("trivial", r.trivial as Nat),
                );
            }
            // p = 2 has trivial solutions only; report the closed form
            // separately rather than as a witness.
            (None, t) if t > 0 => {
                let sol = &solutions::trivial_solutions(r.p as Nat).unwrap()[0];
                table.push(
                    Row::solution(sol.p, sol.x, sol.y, sol.z)
                        .kind(classify(sol).to_string())
                        .num("trivial", t as Nat),
                );
            }
            (None, _) => missing.push(r.p),
        }
    }
    if !quiet {
        table.emit(format);
    }

    eprintln!(
        "checked {} primes in [{lo}, {hi}]: {witnessed} with non-trivial witnesses, \
         {with_trivial} with trivial solutions",
        reports.len()
    );
    if missing.is_empty() {
        eprintln!("missing witnesses: none");
        0
    } else {
        let list: Vec<String> = missing.iter().map(|p| p.to_string()).collect();
        eprintln!("missing witnesses: {}", list.join(" "));
        EXIT_INVALID
    }
}

fn scan(primes: &[u64], workers: usize) -> Vec<PrimeReport> {
    let chunk = primes.len().div_ceil(workers).max(1);
    let mut out = Vec::with_capacity(primes.len());
    std::thread::scope(|scope| {
        let handles: Vec<_> = primes
            .chunks(chunk)
            .map(|block| scope.spawn(move || block.iter().map(|&p| report(p)).collect::<Vec<_>>()))
            .collect();
        for h in handles {
            out.extend(h.join().expect("range worker panicked"));
        }
    });
    out
}

fn report(p: u64) -> PrimeReport {
    let trivial = solutions::trivial_solutions(p as Nat).map_or(0, |t| t.len());
    let witness = if p == 2 {
        None
    } else {
        match solutions::first_nontrivial(p as Nat) {
            Ok(w) => w,
            Err(e) => {
                log::warn!("witness search failed for p={p}: {e}");
                None
            }
        }
    };
    PrimeReport { p, witness, trivial }
}
