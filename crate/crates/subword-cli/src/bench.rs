use crate::{parse_algo_name, Failure};
use clap::Args;
use std::sync::Arc;
use std::time::Instant;
use subword_complex::{count_facets, Algorithm, CoxeterSystem, SubwordComplex};

/// Time the enumerators on multi-cluster instances: Q = c^k followed by the
/// c-sorting word of w0, with ρ = w0. Emits CSV, one row per algorithm.
#[derive(Args)]
pub struct BenchArgs {
    /// Family of Coxeter types: A, B, C or D
    #[arg(long = "type", value_name = "FAMILY")]
    pub family: String,

    /// Values of k, e.g. "1..3" (inclusive) or a single "2"
    #[arg(long, value_name = "RANGE")]
    pub k_range: String,

    /// Values of the rank n, e.g. "2..5" (inclusive)
    #[arg(long, value_name = "RANGE")]
    pub n_range: String,

    /// Comma-separated algorithms to time
    #[arg(long, default_value = "inductive,greedy-neg")]
    pub algos: String,
}

fn parse_range(text: &str, what: &str) -> Result<(usize, usize), Failure> {
    let bad = || {
        Failure::User(format!(
            "malformed {what} {text:?}: expected LO..HI or a single value"
        ))
    };
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (lo, hi),
        None => (text, text),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

pub fn run(args: &BenchArgs) -> Result<(), Failure> {
    let (k_lo, k_hi) = parse_range(&args.k_range, "--k-range")?;
    let (n_lo, n_hi) = parse_range(&args.n_range, "--n-range")?;
    let algos: Vec<Algorithm> = args
        .algos
        .split(',')
        .map(|name| parse_algo_name(name.trim()))
        .collect::<Result<_, _>>()?;
    if algos.is_empty() {
        return Err(Failure::User("no algorithms requested".into()));
    }

    println!("type,k,n,m,facets,total_ms,us_per_facet,algo");
    for n in n_lo..=n_hi {
        let label = format!("{}{}", args.family.trim(), n);
        let sys =
            Arc::new(CoxeterSystem::from_type(&label).map_err(|e| Failure::User(e.to_string()))?);
        let coxeter_element: Vec<usize> = (0..n).collect();
        for k in k_lo..=k_hi {
            let word = sys
                .multicluster_word(&coxeter_element, k)
                .map_err(|e| Failure::Internal(e.to_string()))?;
            let target = sys.longest_element();
            let sc = SubwordComplex::new(Arc::clone(&sys), word.letters().to_vec(), target)
                .map_err(|e| Failure::Internal(e.to_string()))?;
            let m = sc.word_len();

            // Count with every requested algorithm before reporting anything:
            // a disagreement is an internal bug, not a benchmark result.
            let mut rows = Vec::new();
            for &algo in &algos {
                let start = Instant::now();
                let facets = count_facets(&sc, algo);
                rows.push((algo, facets, start.elapsed()));
            }
            if rows.windows(2).any(|w| w[0].1 != w[1].1) {
                let counts: Vec<String> =
                    rows.iter().map(|(a, c, _)| format!("{a:?}={c}")).collect();
                return Err(Failure::Internal(format!(
                    "facet counts disagree on {label}, k={k}: {}",
                    counts.join(", ")
                )));
            }
            for (algo, facets, time) in rows {
                let total_ms = time.as_secs_f64() * 1e3;
                let us_per_facet = if facets > 0 {
                    time.as_secs_f64() * 1e6 / facets as f64
                } else {
                    0.0
                };
                println!(
                    "{label},{k},{n},{m},{facets},{total_ms:.3},{us_per_facet:.3},{}",
                    algo_tag(algo)
                );
            }
        }
    }
    Ok(())
}

fn algo_tag(algo: Algorithm) -> &'static str {
    match algo {
        Algorithm::Inductive => "inductive",
        Algorithm::GreedyPositive => "greedy-pos",
        Algorithm::GreedyNegative => "greedy-neg",
        Algorithm::Bfs => "bfs",
    }
}
