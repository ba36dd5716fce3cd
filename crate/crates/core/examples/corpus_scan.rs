//! Every connected graph on up to `N` vertices through every check, as the
//! `dmatch verify` command does, printing the summary table.
//!
//! ```text
//! cargo run --release --example corpus_scan -- 7
//! ```

use disjoint_matchings::corpus::all_connected_up_to;
use disjoint_matchings::report::{run_reports, Check, Options, Summary};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map_or(6, |s| s.parse().expect("N is a number"));
    let graphs = all_connected_up_to(n).expect("N <= 8");
    let opts = Options {
        checks: Check::ALL.to_vec(),
        jobs: std::thread::available_parallelism().map_or(1, |p| p.get()),
        ..Options::default()
    };
    let lines = run_reports(&graphs, &opts).expect("thread pool");
    let summary = Summary::of(&lines);
    // failures are listed one per line; keep the table readable
    for line in summary
        .table()
        .lines()
        .take_while(|l| !l.starts_with("FAIL"))
    {
        println!("{line}");
    }
    for check in Check::ALL {
        let failing: Vec<&str> = summary
            .failures
            .iter()
            .filter(|f| f.1 == check.name())
            .map(|f| f.0.as_str())
            .take(5)
            .collect();
        if !failing.is_empty() {
            println!("{} fails on e.g. {failing:?}", check.name());
        }
    }
}
