//! `subword`: facets of subword complexes on finite Coxeter groups.
//!
//! Exit codes: 0 on success (including legitimately empty output), 2 on user
//! errors (bad flags, malformed instances, targets that are not subwords
//! where one is required), 3 when an internal invariant breaks.

mod bench;
mod instance;

use clap::{Parser, Subcommand, ValueEnum};
use instance::InstanceArgs;
use std::panic::AssertUnwindSafe;
use std::process::ExitCode;
use subword_complex::{
    arrangement, count_facets, euler_characteristic_with_cap, flip_graph, greedy_tree,
    render_ascii, render_svg, Algorithm, GreedyFlipIter, InductiveIter, Sign, SubwordComplex,
    DEFAULT_FACE_CAP,
};

pub enum Failure {
    User(String),
    Internal(String),
}

#[derive(Parser)]
#[command(
    name = "subword",
    version,
    about = "Enumerate facets of subword complexes, walk their flip graphs, \
             and draw type A facets as sorting networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    /// Recurse on the last letter of the word (reference algorithm)
    Inductive,
    /// Walk the positive greedy flip tree
    GreedyPos,
    /// Walk the negative greedy flip tree
    GreedyNeg,
    /// Breadth-first search of the whole flip graph
    Bfs,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Algorithm {
        match a {
            AlgoArg::Inductive => Algorithm::Inductive,
            AlgoArg::GreedyPos => Algorithm::GreedyPositive,
            AlgoArg::GreedyNeg => Algorithm::GreedyNegative,
            AlgoArg::Bfs => Algorithm::Bfs,
        }
    }
}

pub(crate) fn parse_algo_name(name: &str) -> Result<Algorithm, Failure> {
    match name {
        "inductive" => Ok(Algorithm::Inductive),
        "greedy-pos" => Ok(Algorithm::GreedyPositive),
        "greedy-neg" => Ok(Algorithm::GreedyNegative),
        "bfs" => Ok(Algorithm::Bfs),
        other => Err(Failure::User(format!(
            "unknown algorithm {other:?}: expected inductive, greedy-pos, greedy-neg or bfs"
        ))),
    }
}

fn parse_sign(text: &str) -> Result<Sign, String> {
    match text {
        "+" | "pos" | "positive" => Ok(Sign::Positive),
        "-" | "neg" | "negative" => Ok(Sign::Negative),
        _ => Err("expected + or -".into()),
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// List every facet, one line of ascending 1-based positions each
    Enumerate {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, value_enum, default_value_t = AlgoArg::GreedyNeg)]
        algo: AlgoArg,
        /// Sort the facets lexicographically instead of streaming them in
        /// discovery order
        #[arg(long)]
        sort: bool,
    },
    /// Print the number of facets
    Count {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, value_enum, default_value_t = AlgoArg::GreedyNeg)]
        algo: AlgoArg,
    },
    /// Print the positive (lex-smallest) or negative (lex-largest) greedy facet
    Greedy {
        #[command(flatten)]
        instance: InstanceArgs,
        /// + for the positive greedy facet, - for the negative one
        #[arg(long, value_parser = parse_sign, allow_hyphen_values = true)]
        sign: Sign,
    },
    /// Print a greedy flip tree (plain listing, or DOT with --dot)
    Tree {
        #[command(flatten)]
        instance: InstanceArgs,
        /// + for the positive tree, - for the negative one
        #[arg(long, value_parser = parse_sign, allow_hyphen_values = true)]
        sign: Sign,
        /// Emit Graphviz DOT instead of the plain listing
        #[arg(long)]
        dot: bool,
    },
    /// Print the flip graph with its increasing orientation
    Graph {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Emit Graphviz DOT instead of the plain listing
        #[arg(long)]
        dot: bool,
    },
    /// Draw a facet on the word's sorting network (type A only)
    Render {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Facet positions, e.g. "1 3 4 7 9"; defaults to the positive greedy
        /// facet
        #[arg(long, value_name = "POSITIONS")]
        facet: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Report whether the complex is a sphere or a ball
    Check {
        #[command(flatten)]
        instance: InstanceArgs,
    },
    /// Time the enumerators on multi-cluster instances, as CSV
    Bench(bench::BenchArgs),
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe (`subword ... | head`) like other
    // line-oriented tools instead of panicking on the failed write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match std::panic::catch_unwind(AssertUnwindSafe(|| run(cli))) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Failure::User(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Ok(Err(Failure::Internal(msg))) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
        Err(_) => {
            eprintln!("internal error: unexpected panic");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Enumerate {
            instance,
            algo,
            sort,
        } => cmd_enumerate(&instance.build()?, algo.into(), sort),
        Command::Count { instance, algo } => {
            println!("{}", count_facets(&instance.build()?, algo.into()));
            Ok(())
        }
        Command::Greedy { instance, sign } => cmd_greedy(&instance.build()?, sign),
        Command::Tree {
            instance,
            sign,
            dot,
        } => cmd_tree(&instance.build()?, sign, dot),
        Command::Graph { instance, dot } => cmd_graph(&instance.build()?, dot),
        Command::Render {
            instance,
            facet,
            format,
        } => cmd_render(&instance.build()?, facet.as_deref(), format),
        Command::Check { instance } => cmd_check(&instance.build()?),
        Command::Bench(args) => bench::run(&args),
    }
}

fn join_positions(positions: &[usize]) -> String {
    positions
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_enumerate(sc: &SubwordComplex, algo: Algorithm, sort: bool) -> Result<(), Failure> {
    let print_all = |mut all: Vec<Vec<usize>>| {
        all.sort();
        for positions in all {
            println!("{}", join_positions(&positions));
        }
    };
    match (algo, sort) {
        (Algorithm::Bfs, _) => print_all(flip_graph(sc).vertices),
        (Algorithm::Inductive, true) => {
            print_all(InductiveIter::new(sc).map(|f| f.positions()).collect())
        }
        (Algorithm::Inductive, false) => {
            for facet in InductiveIter::new(sc) {
                println!("{}", join_positions(&facet.positions()));
            }
        }
        (greedy, true) => {
            let sign = greedy_sign(greedy);
            print_all(
                GreedyFlipIter::new(sc, sign)
                    .map(|f| f.positions())
                    .collect(),
            )
        }
        (greedy, false) => {
            // Stream: memory use stays independent of the facet count.
            for facet in GreedyFlipIter::new(sc, greedy_sign(greedy)) {
                println!("{}", join_positions(&facet.positions()));
            }
        }
    }
    Ok(())
}

fn greedy_sign(algo: Algorithm) -> Sign {
    match algo {
        Algorithm::GreedyPositive => Sign::Positive,
        _ => Sign::Negative,
    }
}

fn cmd_greedy(sc: &SubwordComplex, sign: Sign) -> Result<(), Failure> {
    let facet = match sign {
        Sign::Positive => sc.positive_greedy_facet(),
        Sign::Negative => sc.negative_greedy_facet(),
    }
    .map_err(|_| Failure::User("empty complex".into()))?;
    println!("{}", join_positions(&facet.positions()));
    Ok(())
}

fn cmd_tree(sc: &SubwordComplex, sign: Sign, dot: bool) -> Result<(), Failure> {
    let tree = greedy_tree(sc, sign).map_err(|_| Failure::User("empty complex".into()))?;
    if dot {
        print!("{}", tree.to_dot());
    } else {
        println!("{} facets, {} arcs", tree.nodes.len(), tree.arcs.len());
        for (i, node) in tree.nodes.iter().enumerate() {
            println!("{i}: {}", join_positions(node));
        }
        for arc in &tree.arcs {
            println!(
                "{} -> {} ({},{})",
                arc.parent, arc.child, arc.removed, arc.added
            );
        }
    }
    Ok(())
}

fn cmd_graph(sc: &SubwordComplex, dot: bool) -> Result<(), Failure> {
    let graph = flip_graph(sc);
    if dot {
        print!("{}", graph.to_dot());
    } else {
        println!(
            "{} facets, {} edges",
            graph.vertices.len(),
            graph.edges.len()
        );
        for (i, v) in graph.vertices.iter().enumerate() {
            println!("{i}: {}", join_positions(v));
        }
        for e in &graph.edges {
            println!("{} -> {} ({},{})", e.from, e.to, e.removed, e.added);
        }
    }
    Ok(())
}

fn cmd_render(sc: &SubwordComplex, facet: Option<&str>, format: Format) -> Result<(), Failure> {
    let facet = match facet {
        Some(text) => {
            let positions: Vec<usize> = text
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(str::parse)
                .collect::<Result<_, _>>()
                .map_err(|e| Failure::User(format!("bad facet {text:?}: {e}")))?;
            sc.facet_from_positions(&positions)
                .map_err(|e| Failure::User(e.to_string()))?
        }
        None => sc
            .positive_greedy_facet()
            .map_err(|_| Failure::User("empty complex".into()))?,
    };
    let arr = arrangement(sc, &facet).map_err(|e| Failure::User(e.to_string()))?;
    let out = match format {
        Format::Ascii => render_ascii(&arr),
        Format::Svg => render_svg(&arr),
    };
    print!("{out}");
    if !out.ends_with('\n') {
        println!();
    }
    Ok(())
}

fn cmd_check(sc: &SubwordComplex) -> Result<(), Failure> {
    let facets = count_facets(sc, Algorithm::GreedyNegative);
    println!("facets: {facets}");
    if facets == 0 {
        println!("verdict: empty");
        return Ok(());
    }
    let delta = sc
        .system()
        .demazure(sc.word())
        .map_err(|e| Failure::Internal(e.to_string()))?;
    let is_sphere = *sc.target() == delta;
    println!(
        "target is the Demazure product of the word: {}",
        if is_sphere { "yes" } else { "no" }
    );
    if sc.word_len() <= DEFAULT_FACE_CAP {
        let chi = euler_characteristic_with_cap(sc, DEFAULT_FACE_CAP)
            .map_err(|e| Failure::Internal(e.to_string()))?;
        println!("reduced euler characteristic: {chi}");
        let expected = if !is_sphere {
            0
        } else if sc.facet_size().is_multiple_of(2) {
            -1
        } else {
            1
        };
        if chi != expected {
            return Err(Failure::Internal(format!(
                "euler characteristic {chi} contradicts the {} verdict",
                if is_sphere { "sphere" } else { "ball" }
            )));
        }
    }
    println!("verdict: {}", if is_sphere { "sphere" } else { "ball" });
    Ok(())
}
