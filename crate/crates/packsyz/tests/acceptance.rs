//! Acceptance criteria, one pass/fail line each.

use std::process::ExitCode;
use std::time::Instant;

use packsyz::cache::Engine;
use packsyz::config::Config;
use packsyz::verify::{self, Check};
use packsyz::CliResult;

type Criterion = fn(&mut Engine, &Config) -> CliResult<Vec<Check>>;

fn structural(e: &mut Engine, _: &Config) -> CliResult<Vec<Check>> {
    let mut c = verify::invariants(e)?;
    c.extend(verify::les(e)?);
    Ok(c)
}

const CRITERIA: [(&str, Criterion); 9] = [
    ("Betti table of P1 x P1 under O(1,1), p <= 4, q <= 2", |e, _| verify::betti_table_suite(e)),
    ("worked examples", |e, _| verify::examples(e)),
    ("Segre linear strand, n in {2,3}, p <= 3, a <= 3", |e, _| verify::segre_strand(e)),
    ("Veronese linear strand cross-identity, p <= 3, d <= 4", |_, _| verify::newell()),
    ("Koszul dimension oracle, p <= 3, q <= 2", verify::koszul),
    ("vanishing bounds on N <= (7,7)", |e, _| verify::vanishing(e)),
    ("stability scans and sharpness", |e, _| verify::stability(e)),
    ("structural invariants and long exact sequences", structural),
    ("top Laplacian spectra, p <= 3, a <= 2", |e, _| verify::spectra(e)),
];

fn main() -> ExitCode {
    let cfg = Config::default();
    let mut engine = Engine::new(cfg.max_simplices, cfg.threads, None);
    let mut all = true;
    for (i, (name, run)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let line = match run(&mut engine, &cfg) {
            Ok(checks) => {
                let ok = checks.iter().filter(|c| c.passed).count();
                let passed = ok == checks.len() && !checks.is_empty();
                all &= passed;
                for c in checks.iter().filter(|c| !c.passed) {
                    println!("    {c}");
                }
                let verdict = if passed { "PASS" } else { "FAIL" };
                format!("{verdict} ({ok}/{} checks)", checks.len())
            }
            Err(e) => {
                all = false;
                format!("FAIL (error: {e})")
            }
        };
        println!("criterion {} [{name}]: {line} in {:.1}s", i + 1, start.elapsed().as_secs_f64());
    }
    if all {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}
