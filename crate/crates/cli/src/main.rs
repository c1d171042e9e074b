use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

use affine_crystals::abacus::{
    enumerate_descending, partition_seed, AbacusConfig, DescendingCrystal, DominantWeight,
    PartitionCrystal,
};
use affine_crystals::charformula::{compare, lambda_prime, z_weyl};
use affine_crystals::commutor::{
    build_b, check_commutor, leaf_axiom_violations, staircase_word, theta_reverse,
    verify_star_characterization,
};
use affine_crystals::cpp::{abacus_to_cpp, cpp_to_abacus, enumerate_cpps, CppCrystal, CylindricPlanePartition};
use affine_crystals::crystal::{check_local_axioms, explore, Crystal, CrystalGraph};
use affine_crystals::kyoto::{j_map, Path, PathCrystal};
use affine_crystals::partition::Partition;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "crystals", version, about = "Affine sl(n) crystals on abaci, cylindric partitions and paths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Model {
    Abacus,
    Partition,
    Cpp,
    Kyoto,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
    Text,
    Csv,
}

#[derive(clap::Args)]
struct Weight {
    /// Rank: colors are 0..n.
    #[arg(long)]
    n: usize,
    /// Level; must equal the sum of the coefficients.
    #[arg(long)]
    l: usize,
    /// Coefficients of Λ_0..Λ_{n-1}, comma separated.
    #[arg(long)]
    lambda: String,
}

#[derive(Subcommand)]
enum Command {
    /// Explore a crystal ball, check the local axioms and export it.
    Graph {
        #[arg(long, value_enum, default_value = "abacus")]
        model: Model,
        #[command(flatten)]
        weight: Weight,
        #[arg(long, default_value_t = 8)]
        deg: usize,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        /// Write the graph here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Inject a bogus edge before checking (negative control).
        #[arg(long)]
        corrupt: bool,
    },
    /// Compare the Weyl, boundary-product and enumerated partition functions.
    Genfunc {
        /// Accepted for compatibility: `genfunc compare ...`.
        #[arg(value_parser = ["compare"])]
        action: Option<String>,
        #[command(flatten)]
        weight: Weight,
        #[arg(long, default_value_t = 15)]
        deg: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check the abacus/CPP bijection on one boundary.
    Bijection {
        #[command(flatten)]
        weight: Weight,
        #[arg(long, alias = "weight", default_value_t = 8)]
        max_weight: usize,
    },
    /// Check that J is an isomorphism onto the path model.
    Kyoto {
        #[command(flatten)]
        weight: Weight,
        #[arg(long, default_value_t = 8)]
        deg: usize,
    },
    /// Check the crystal commutor for sl_m.
    Commutor {
        #[arg(long, default_value_t = 3)]
        m: usize,
        /// Largest |λ|, |μ| for pairs.
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        /// Largest total size for leaf-axiom triples.
        #[arg(long, default_value_t = 4)]
        leaf_size: usize,
    },
}

enum Failure {
    Usage(String),
    Check(String),
}

type Outcome = Result<(), Failure>;

fn usage(e: impl Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn parse_weight(w: &Weight) -> Result<DominantWeight, Failure> {
    let lam = DominantWeight::parse(&w.lambda).map_err(usage)?;
    if lam.n() != w.n {
        return Err(usage(format!("--lambda has {} coefficients but --n is {}", lam.n(), w.n)));
    }
    if lam.level() != w.l {
        return Err(usage(format!("--lambda has level {} but --l is {}", lam.level(), w.l)));
    }
    if w.l == 0 {
        return Err(usage("level must be positive"));
    }
    Ok(lam)
}

fn emit(text: &str, output: &Option<PathBuf>) -> Outcome {
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn print_json(v: &impl Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

struct GraphRun {
    deg: usize,
    format: Format,
    output: Option<PathBuf>,
    corrupt: bool,
}

fn graph_of<C>(c: &C, seed: &C::Elem, run: &GraphRun, label: impl Fn(&C::Elem) -> String) -> Outcome
where
    C: Crystal,
    C::Elem: Serialize,
{
    let mut g: CrystalGraph<C::Elem> = explore(c, seed, run.deg).map_err(usage)?;
    if run.corrupt {
        let last = g.len() - 1;
        let color = c.index_set()[0];
        g.edges.push((0, color, last));
    }
    let text = match run.format {
        Format::Dot => g.to_dot(label),
        Format::Json => serde_json::to_string_pretty(&g.to_json()).expect("serializable") + "\n",
        _ => return Err(usage("graph supports --format dot or json")),
    };
    emit(&text, &run.output)?;
    let report = check_local_axioms(c, &g);
    eprintln!(
        "{} vertices, {} edges, {} axiom violations",
        g.len(),
        g.edges.len(),
        report.violations.len()
    );
    match report.first() {
        None => Ok(()),
        Some(v) => Err(Failure::Check(format!("first violation: {v}"))),
    }
}

fn cmd_graph(model: Model, weight: &Weight, run: GraphRun) -> Outcome {
    let lam = parse_weight(weight)?;
    let n = lam.n();
    match model {
        Model::Abacus => {
            let seed = lam.compact_config().map_err(usage)?;
            graph_of(&DescendingCrystal { n }, &seed, &run, |x| x.to_string().trim_end().replace('\n', "\\n"))
        }
        Model::Partition => {
            let (seed, offset) = partition_seed(&lam).ok_or_else(|| {
                usage(format!("{lam} is not realized by charge-zero partitions with {} strands", lam.level()))
            })?;
            let c = PartitionCrystal { n, l: lam.level(), offset };
            graph_of(&c, &seed, &run, |p| p.to_string())
        }
        Model::Cpp => {
            let charges = lam.compact_config().map_err(usage)?.charges();
            let seed = CylindricPlanePartition::zero(n, &charges).map_err(usage)?;
            graph_of(&CppCrystal { n }, &seed, &run, |p| p.render().replace('\n', "\\n"))
        }
        Model::Kyoto => {
            let seed = Path::ground_state(&lam).map_err(usage)?;
            graph_of(&PathCrystal { n }, &seed, &run, |p| p.to_string())
        }
    }
}

#[derive(Serialize)]
struct GenfuncVerdict {
    n: usize,
    l: usize,
    lambda: Vec<usize>,
    degree: usize,
    profile: String,
    weyl: serde_json::Value,
    borodin: serde_json::Value,
    enumerated: serde_json::Value,
    three_way_equal: bool,
    dual_lambda: Vec<usize>,
    rank_level_equal: bool,
}

fn cmd_genfunc(weight: &Weight, deg: usize, format: Format) -> Outcome {
    let lam = parse_weight(weight)?;
    let n = lam.n();
    let c = compare(&lam, n, deg).map_err(usage)?;
    let dual = lambda_prime(&lam).map_err(usage)?;
    let dual_series = z_weyl(&dual, dual.n(), deg).map_err(usage)?;
    let rank_level_equal = dual_series == c.weyl;
    let verdict = GenfuncVerdict {
        n,
        l: c.l,
        lambda: lam.coeffs.clone(),
        degree: deg,
        profile: c.profile.clone(),
        weyl: c.weyl.to_json(),
        borodin: c.borodin.to_json(),
        enumerated: c.enumerated.to_json(),
        three_way_equal: c.agree(),
        dual_lambda: dual.coeffs.clone(),
        rank_level_equal,
    };
    match format {
        Format::Json => print_json(&verdict),
        Format::Text => {
            println!("lambda: {lam}");
            println!("profile: {}", c.profile);
            println!("weyl:       {}", c.weyl);
            println!("borodin:    {}", c.borodin);
            println!("enumerated: {}", c.enumerated);
            println!("three-way-equal: {}", verdict.three_way_equal);
            println!("dual lambda: {dual}");
            println!("rank-level-equal: {rank_level_equal}");
        }
        Format::Csv => {
            println!("degree,weyl,borodin,enumerated");
            for k in 0..=deg {
                println!("{k},{},{},{}", c.weyl.coeff(k), c.borodin.coeff(k), c.enumerated.coeff(k));
            }
        }
        Format::Dot => return Err(usage("genfunc supports --format text, json or csv")),
    }
    if verdict.three_way_equal && rank_level_equal {
        Ok(())
    } else {
        Err(Failure::Check("series disagree".into()))
    }
}

#[derive(Serialize)]
struct BijectionVerdict {
    n: usize,
    charges: Vec<i64>,
    max_weight: usize,
    abacus_objects: usize,
    cpp_objects: usize,
    by_weight: Vec<[usize; 2]>,
    mismatches: usize,
    pass: bool,
}

fn cmd_bijection(weight: &Weight, max_weight: usize) -> Outcome {
    let lam = parse_weight(weight)?;
    let n = lam.n();
    let charges = lam.compact_config().map_err(usage)?.charges();
    let abaci = enumerate_descending(n, &charges, max_weight).map_err(usage)?;
    let cpps = enumerate_cpps(n, &charges, max_weight).map_err(usage)?;
    let mut mismatches = 0;
    let mut by_weight = vec![[0usize; 2]; max_weight + 1];
    let mut images = BTreeSet::new();
    for psi in &abaci {
        by_weight[psi.weight()][0] += 1;
        match abacus_to_cpp(psi) {
            Ok(pi) if pi.weight() == psi.weight() && cpp_to_abacus(&pi).ok().as_ref() == Some(psi) => {
                images.insert(pi);
            }
            _ => mismatches += 1,
        }
    }
    for pi in &cpps {
        by_weight[pi.weight()][1] += 1;
        if !images.contains(pi) {
            mismatches += 1;
        }
    }
    let verdict = BijectionVerdict {
        n,
        charges,
        max_weight,
        abacus_objects: abaci.len(),
        cpp_objects: cpps.len(),
        by_weight,
        mismatches,
        pass: mismatches == 0 && abaci.len() == cpps.len(),
    };
    print_json(&verdict);
    if verdict.pass {
        Ok(())
    } else {
        Err(Failure::Check(format!("{mismatches} mismatches")))
    }
}

#[derive(Serialize)]
struct KyotoVerdict {
    n: usize,
    l: usize,
    lambda: Vec<usize>,
    degree: usize,
    abacus_vertices: usize,
    path_vertices: usize,
    injective: bool,
    onto: bool,
    intertwining_failures: usize,
    pass: bool,
}

fn cmd_kyoto(weight: &Weight, deg: usize) -> Outcome {
    let lam = parse_weight(weight)?;
    let n = lam.n();
    let psi0 = lam.compact_config().map_err(usage)?;
    let abacus = explore(&DescendingCrystal { n }, &psi0, deg).map_err(usage)?;
    let paths = explore(&PathCrystal { n }, &Path::ground_state(&lam).map_err(usage)?, deg).map_err(usage)?;
    let mut image: BTreeMap<&AbacusConfig, Path> = BTreeMap::new();
    for psi in &abacus.vertices {
        image.insert(psi, j_map(psi).map_err(usage)?);
    }
    let targets: BTreeSet<&Path> = image.values().collect();
    let ball: BTreeSet<&Path> = paths.vertices.iter().collect();
    let mut failures = 0;
    for psi in &abacus.vertices {
        for i in 0..n {
            let f = psi.f_descending(i).map_err(usage)?.map(|x| j_map(&x)).transpose().map_err(usage)?;
            let e = psi.e_descending(i).map_err(usage)?.map(|x| j_map(&x)).transpose().map_err(usage)?;
            if f != image[psi].f(i) || e != image[psi].e(i) {
                failures += 1;
            }
        }
    }
    let injective = targets.len() == image.len();
    let onto = targets == ball;
    let verdict = KyotoVerdict {
        n,
        l: lam.level(),
        lambda: lam.coeffs.clone(),
        degree: deg,
        abacus_vertices: abacus.len(),
        path_vertices: paths.len(),
        injective,
        onto,
        intertwining_failures: failures,
        pass: injective && onto && failures == 0,
    };
    print_json(&verdict);
    if verdict.pass {
        Ok(())
    } else {
        Err(Failure::Check("J is not an isomorphism on this ball".into()))
    }
}

#[derive(Serialize)]
struct CommutorVerdict {
    m: usize,
    pairs: usize,
    pair_failures: Vec<String>,
    words: Vec<Vec<usize>>,
    highest_weight_checks: usize,
    star_failures: Vec<serde_json::Value>,
    leaf_triples: usize,
    leaf_failures: Vec<String>,
    pass: bool,
}

fn cmd_commutor(m: usize, max_size: usize, leaf_size: usize) -> Outcome {
    if m < 2 {
        return Err(usage("--m must be at least 2"));
    }
    let shapes: Vec<Partition> = Partition::up_to_size(max_size.max(leaf_size))
        .into_iter()
        .filter(|p| p.len() <= m)
        .collect();
    let small: Vec<&Partition> = shapes.iter().filter(|p| p.size() <= max_size).collect();
    let mut words = vec![staircase_word(m)];
    let other = theta_reverse(m, &words[0]);
    if other != words[0] {
        words.push(other);
    }
    let mut verdict = CommutorVerdict {
        m,
        pairs: 0,
        pair_failures: Vec::new(),
        words: words.clone(),
        highest_weight_checks: 0,
        star_failures: Vec::new(),
        leaf_triples: 0,
        leaf_failures: Vec::new(),
        pass: false,
    };
    for lam in &small {
        for mu in &small {
            verdict.pairs += 1;
            let r = check_commutor(lam, mu, m).map_err(usage)?;
            if !r.passed() {
                verdict.pair_failures.push(format!("{lam} ⊗ {mu}"));
            }
            for word in &words {
                for s in verify_star_characterization(lam, mu, m, word).map_err(usage)? {
                    verdict.highest_weight_checks += 1;
                    if !s.pass {
                        verdict.star_failures.push(serde_json::to_value(&s).expect("serializable"));
                    }
                }
            }
        }
    }
    let built: Vec<_> = shapes
        .iter()
        .filter(|p| p.size() <= leaf_size)
        .map(|p| build_b(p, m).map_err(usage))
        .collect::<Result<_, _>>()?;
    for a in &built {
        for b in &built {
            for c in &built {
                if a.size() + b.size() + c.size() > leaf_size {
                    continue;
                }
                verdict.leaf_triples += 1;
                if leaf_axiom_violations(a, b, c).map_err(usage)? > 0 {
                    verdict.leaf_failures.push(format!("{} {} {}", a.lambda, b.lambda, c.lambda));
                }
            }
        }
    }
    verdict.pass =
        verdict.pair_failures.is_empty() && verdict.star_failures.is_empty() && verdict.leaf_failures.is_empty();
    print_json(&verdict);
    if verdict.pass {
        Ok(())
    } else {
        Err(Failure::Check("commutor checks failed".into()))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Graph { model, weight, deg, format, output, corrupt } => cmd_graph(
            *model,
            weight,
            GraphRun { deg: *deg, format: *format, output: output.clone(), corrupt: *corrupt },
        ),
        Command::Genfunc { weight, deg, format, .. } => cmd_genfunc(weight, *deg, *format),
        Command::Bijection { weight, max_weight } => cmd_bijection(weight, *max_weight),
        Command::Kyoto { weight, deg } => cmd_kyoto(weight, *deg),
        Command::Commutor { m, max_size, leaf_size } => cmd_commutor(*m, *max_size, *leaf_size),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
