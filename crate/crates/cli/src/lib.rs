//! Command-line driver. [`run`] does all the work and returns the exit code
//! together with the text to print, so output can be tested without spawning
//! a process.

use std::fmt::Write as _;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use adnil::affine::{elements_up_to_length, minimal_element, AffineWeylElement};
use adnil::equiv::{
    classes_refine_orbit_fibers, classes_to_json, left_equivalence_classes, pl_closure, verify_all_moves,
    verify_star_suite, DEFAULT_LENGTH_BUDGET,
};
use adnil::ideals::{enumerate_ideals, ideal_from_generator_vectors, label_set};
use adnil::orbits::{check_surjectivity, generic_jordan_type};
use adnil::rootsys::{Family, RootSystem};
use adnil::signtypes::check_sign_type_diagram;
use adnil::typea::{check_green_diagram, green_partition, perm_from_word};
use adnil::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    #[value(name = "5.2")]
    MovesLiftToStar,
    #[value(name = "5.6")]
    StarSteps,
    #[value(name = "diagram-1.4.1")]
    SignTypes,
    #[value(name = "diagram-1.5.1")]
    GreenPartitions,
    #[value(name = "surjectivity")]
    Surjectivity,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// List ideals with their generators and normalizing simple roots.
    Enumerate { system: String },
    /// Minimal affine Weyl group element of every ideal.
    Minimal { system: String },
    /// Left equivalence classes, with the orbit of each class in types A and B.
    Classes { system: String },
    /// Jordan type of a generic element of the ideal with the given generators.
    Orbit {
        system: String,
        /// A root vector `[1,1,1]` or a list of them `[[1,1,0],[0,1,1]]`.
        #[arg(long)]
        generators: String,
    },
    /// Green's partition of the element of type Ã with the given word.
    Green {
        system: String,
        /// Word in the simple reflections, e.g. `[0,1,2]`.
        #[arg(long)]
        word: String,
    },
    /// Elements reachable by left star operations within the length budget.
    Closure {
        system: String,
        #[arg(long)]
        word: String,
    },
    /// Run an exhaustive verification suite.
    Verify { suite: Suite, system: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(name = "adnil", version, about = "Ad-nilpotent ideals, affine Weyl groups and nilpotent orbits")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Seed for the random rank computations.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Random samples per ideal.
    #[arg(long, default_value_t = 5, global = true)]
    pub trials: usize,
    /// Length budget for star-operation closures.
    #[arg(long, default_value_t = DEFAULT_LENGTH_BUDGET, global = true)]
    pub budget: usize,
    /// Largest element length scanned by the verification suites.
    #[arg(long, default_value_t = 8, global = true)]
    pub max_length: usize,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            format: Format::Text,
            seed: 0,
            trials: 5,
            budget: DEFAULT_LENGTH_BUDGET,
            max_length: 8,
        }
    }
}

/// Runs the command; returns the exit code and everything to print.
pub fn run(config: &RunConfig) -> (i32, String) {
    match dispatch(config) {
        Ok(out) => (EXIT_OK, out),
        Err(e @ (Error::Counterexample(_) | Error::Internal(_))) => (EXIT_COUNTEREXAMPLE, format!("FAILED\n{e}\n")),
        Err(e) => (EXIT_USAGE, format!("error: {e}\n")),
    }
}

fn system(code: &str) -> adnil::Result<Arc<RootSystem>> {
    RootSystem::build(code.parse()?)
}

fn render(config: &RunConfig, text: String, value: Value) -> String {
    match config.format {
        Format::Text => text,
        Format::Json => format!("{}\n", serde_json::to_string(&value).expect("serializable")),
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(what: &str, s: &str) -> adnil::Result<T> {
    serde_json::from_str(s).map_err(|e| Error::InvalidArgument(format!("cannot parse {what} {s:?}: {e}")))
}

fn parse_generators(s: &str) -> adnil::Result<Vec<Vec<i64>>> {
    match parse_json::<Value>("generators", s)? {
        Value::Array(items) if items.iter().all(Value::is_number) => Ok(vec![parse_json("generators", s)?]),
        _ => parse_json("generators", s),
    }
}

fn require_family_a(rs: &RootSystem) -> adnil::Result<()> {
    if rs.family() != Family::A {
        return Err(Error::WrongFamily {
            expected: "A",
            got: rs.kind().to_string(),
        });
    }
    Ok(())
}

fn dispatch(config: &RunConfig) -> adnil::Result<String> {
    match &config.command {
        Command::Enumerate { system: code } => enumerate(config, &system(code)?),
        Command::Minimal { system: code } => minimal(config, &system(code)?),
        Command::Classes { system: code } => classes(config, &system(code)?),
        Command::Orbit { system: code, generators } => {
            let rs = system(code)?;
            let ideal = ideal_from_generator_vectors(&rs, &parse_generators(generators)?)?;
            let orbit = generic_jordan_type(&ideal, config.seed, config.trials)?;
            let value = json!({
                "system": rs.kind().to_string(),
                "ideal": ideal.to_json()["roots"],
                "orbit": orbit.to_string(),
            });
            Ok(render(config, format!("{orbit}\n"), value))
        }
        Command::Green { system: code, word } => {
            let rs = system(code)?;
            require_family_a(&rs)?;
            let word: Vec<usize> = parse_json("word", word)?;
            let sigma = perm_from_word(rs.rank() + 1, &word)?;
            let mu = green_partition(&sigma)?;
            let mut value = sigma.to_json();
            value["partition"] = json!(mu.parts());
            Ok(render(config, format!("window {sigma}\npartition {mu}\n"), value))
        }
        Command::Closure { system: code, word } => {
            let rs = system(code)?;
            let word: Vec<usize> = parse_json("word", word)?;
            let w = AffineWeylElement::from_word(&rs, &word)?;
            let mut closure: Vec<AffineWeylElement> = pl_closure(&w, config.budget).into_iter().collect();
            closure.sort_by_cached_key(|u| (u.length(), u.reduced_word()));
            let mut text = format!(
                "{}: {} elements reachable from {w} within length {}\n",
                rs.kind(),
                closure.len(),
                config.budget
            );
            for u in &closure {
                let _ = writeln!(text, "  {u}  (length {})", u.length());
            }
            let value = json!({
                "system": rs.kind().to_string(),
                "budget": config.budget,
                "elements": closure.iter().map(|u| u.reduced_word()).collect::<Vec<_>>(),
            });
            Ok(render(config, text, value))
        }
        Command::Verify { suite, system: code } => verify(config, *suite, &system(code)?),
    }
}

fn enumerate(config: &RunConfig, rs: &Arc<RootSystem>) -> adnil::Result<String> {
    let ideals = enumerate_ideals(rs);
    let mut text = format!("{}: {} ideals\n", rs.kind(), ideals.len());
    let mut items = Vec::new();
    for (k, ideal) in ideals.iter().enumerate() {
        let gens = ideal.generators();
        let normalizer = ideal.normalizer_simple_roots();
        let norm_labels: Vec<String> = normalizer.iter().map(|&i| rs.simple_label(i)).collect();
        let _ = writeln!(
            text,
            "{:>3}  {ideal}\n     generators {}  normalizer {{{}}}",
            k + 1,
            label_set(rs, gens.roots()),
            norm_labels.join(", ")
        );
        items.push(json!({
            "roots": ideal.to_json()["roots"],
            "generators": gens.to_json(rs)["generators"],
            "normalizer": normalizer.iter().map(|&i| rs.simple_root(i).coeffs().to_vec()).collect::<Vec<_>>(),
        }));
    }
    Ok(render(config, text, json!({"system": rs.kind().to_string(), "ideals": items})))
}

fn minimal(config: &RunConfig, rs: &Arc<RootSystem>) -> adnil::Result<String> {
    let ideals = enumerate_ideals(rs);
    let mut text = format!("{}: {} minimal elements\n", rs.kind(), ideals.len());
    let mut items = Vec::new();
    for (k, ideal) in ideals.iter().enumerate() {
        let w = minimal_element(ideal)?;
        let inversions = w.inversion_set().len();
        let _ = writeln!(
            text,
            "{:>3}  {ideal}\n     w = {w}  length {}  |N(w)| = {inversions}",
            k + 1,
            w.length()
        );
        items.push(json!({
            "ideal": ideal.to_json()["roots"],
            "element": w.to_json(),
            "length": w.length(),
            "inversions": inversions,
        }));
    }
    Ok(render(config, text, json!({"system": rs.kind().to_string(), "minimal_elements": items})))
}

fn classes(config: &RunConfig, rs: &Arc<RootSystem>) -> adnil::Result<String> {
    let classes = left_equivalence_classes(rs);
    let report = match rs.family() {
        Family::G => None,
        _ => Some(classes_refine_orbit_fibers(rs, config.seed, config.trials)?),
    };
    let labels = report.as_ref().map(|r| r.class_labels.clone());
    let total: usize = classes.sizes().iter().sum();
    let mut text = format!("{}: {total} ideals, {} classes\n", rs.kind(), classes.len());
    if let Some(r) = &report {
        let _ = writeln!(text, "{} orbits, {} moves all preserve the orbit", r.fibers, r.moves);
        for (orbit, blocks) in &r.split_fibers {
            let names: Vec<String> = blocks.iter().map(|b| (b + 1).to_string()).collect();
            let _ = writeln!(text, "orbit {orbit} meets classes {}", names.join(", "));
        }
    }
    for (k, block) in classes.blocks().iter().enumerate() {
        let orbit = labels.as_ref().map_or(String::new(), |l| format!(", orbit {}", l[k]));
        let _ = writeln!(text, "class {} (size {}{orbit})", k + 1, block.len());
        for ideal in block {
            let _ = writeln!(text, "  {ideal}");
        }
    }
    Ok(render(config, text, classes_to_json(&classes, labels.as_deref())))
}

fn verify(config: &RunConfig, suite: Suite, rs: &Arc<RootSystem>) -> adnil::Result<String> {
    let kind = rs.kind();
    let max = config.max_length;
    let (text, value) = match suite {
        Suite::MovesLiftToStar => {
            let s = verify_all_moves(rs)?;
            (
                format!("{kind}: {} ideals, all moves verified ({} moves)\n", s.ideals, s.moves),
                json!({"suite": "5.2", "system": s.system, "ideals": s.ideals, "moves": s.moves, "passed": true}),
            )
        }
        Suite::StarSteps => {
            let s = verify_star_suite(rs, max)?;
            (
                format!(
                    "{kind}: {} dominant elements of length <= {max}, {} star pairs verified ({} same ideal, {} one move)\n",
                    s.dominant_elements, s.pairs, s.same_ideal, s.one_move
                ),
                json!({
                    "suite": "5.6", "system": s.system, "max_length": max,
                    "dominant_elements": s.dominant_elements, "pairs": s.pairs,
                    "same_ideal": s.same_ideal, "one_move": s.one_move, "passed": true,
                }),
            )
        }
        Suite::SignTypes => {
            let elements = elements_up_to_length(rs, max);
            let s = check_sign_type_diagram(rs, &elements)?;
            (
                format!(
                    "{kind}: sign types agree on {} dominant elements of length <= {max} and {} minimal elements\n",
                    s.dominant_elements, s.minimal_elements
                ),
                json!({
                    "suite": "diagram-1.4.1", "system": s.system, "max_length": max,
                    "dominant_elements": s.dominant_elements, "minimal_elements": s.minimal_elements, "passed": true,
                }),
            )
        }
        Suite::GreenPartitions => {
            require_family_a(rs)?;
            let s = check_green_diagram(rs.rank() + 1, max, config.seed, config.trials)?;
            (
                format!(
                    "{kind}: Green partitions agree with orbits on {} minimal and {} dominant elements of length <= {max}\n",
                    s.minimal_elements, s.dominant_elements
                ),
                json!({
                    "suite": "diagram-1.5.1", "system": s.system, "max_length": max,
                    "minimal_elements": s.minimal_elements, "dominant_elements": s.dominant_elements, "passed": true,
                }),
            )
        }
        Suite::Surjectivity => {
            require_family_a(rs)?;
            let top = rs.rank() + 1;
            let s = check_surjectivity(2..=top, config.seed, config.trials)?;
            (
                format!("{kind}: all {} partitions of n = 2..{top} are orbits of graded ideals\n", s.partitions),
                json!({"suite": "surjectivity", "system": kind.to_string(), "max_n": top, "partitions": s.partitions, "passed": true}),
            )
        }
    };
    Ok(render(config, text, value))
}

