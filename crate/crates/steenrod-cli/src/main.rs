//! Command line front end for the steenrod crate: structure-map tables,
//! cup-(r,i) pairings, Steenrod operations on finite complexes, cohomology
//! bases, and space-file validation. All algebra lives in the library; this
//! binary parses arguments, shuttles data, and prints reports.

mod cache;
mod report;
mod spacefile;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use report::{CellValue, ClassSelector, OperationResult, Report, Term};
use steenrod::barratt_eccles::psi_be;
use steenrod::chains::{CubeKey, Cubical, Letter, SimplexKey, Simplicial};
use steenrod::coeff::{BasisKey, Element, Ring};
use steenrod::cohomology::{betti_numbers, cohomology};
use steenrod::complexes::Space;
use steenrod::ops::{cup_r_i, steenrod_on_class};
use steenrod::surjection::psi_sj;

#[derive(Parser)]
#[command(
    name = "steenrod",
    version,
    about = "Exact Steenrod operations on finite simplicial and cubical sets"
)]
struct Cli {
    /// Emit machine-readable JSON instead of the terminal rendering.
    #[arg(long, global = true)]
    json: bool,

    /// Number of worker threads for parallel evaluation (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum PsiFamily {
    /// Tuples of permutations.
    BarrattEccles,
    /// Surjection words.
    Surjection,
}

#[derive(Copy, Clone, ValueEnum)]
enum GeometryArg {
    Simplicial,
    Cubical,
}

#[derive(Subcommand)]
enum Command {
    /// Print the structure-map image of one resolution generator.
    Psi {
        /// Target operad family.
        #[arg(value_enum)]
        family: PsiFamily,
        /// Arity r >= 1.
        r: usize,
        /// Resolution degree n >= 0.
        n: u32,
        /// Print only the number of terms.
        #[arg(long)]
        count: bool,
    },
    /// Evaluate one cup-(r,i) pairing on a chain of a standard cell.
    ///
    /// Simplicial cells are comma-separated vertex lists such as 0,1,2;
    /// cubical cells are letter words over 0, 1 and * (one letter per
    /// coordinate, * marking a free interval), such as *1*.
    Cup {
        /// Cell family to evaluate in.
        #[arg(value_enum)]
        geometry: GeometryArg,
        /// Dimension of the ambient standard cell.
        dim: usize,
        /// Arity r of the product.
        arity: usize,
        /// Resolution degree i of the product.
        index: u32,
        /// The basis chain to evaluate on.
        chain: String,
        /// Exactly r basis cochains, outermost first.
        #[arg(required = true)]
        cochains: Vec<String>,
    },
    /// Apply a Steenrod power operation to a cohomology class.
    Steenrod {
        /// Builtin space name or path to a space file.
        #[arg(long)]
        space: String,
        /// The prime p.
        #[arg(long)]
        prime: u32,
        /// The power s of P^s (of Sq^s at p = 2).
        #[arg(long)]
        power: i64,
        /// Compose with the Bockstein (odd primes only).
        #[arg(long)]
        bockstein: bool,
        /// Class selector H<degree>:<index>, e.g. H1:0.
        #[arg(long)]
        class: String,
        /// Also print the representing cochain.
        #[arg(long)]
        dump_cochain: bool,
    },
    /// Print Betti numbers, or one degree's basis with representatives.
    Cohomology {
        /// Builtin space name or path to a space file.
        #[arg(long)]
        space: String,
        /// The prime p.
        #[arg(long)]
        prime: u32,
        /// Restrict to one cohomological degree.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Check a space file against the simplicial or cubical identities.
    Validate {
        /// Path to the space file.
        file: PathBuf,
    },
}

fn main() {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        // A second build_global in one process is harmless for correctness;
        // results never depend on the pool shape.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    cache::load();
    let outcome = run(cli.command);
    cache::store();
    match outcome {
        Ok(report) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                println!("{}", report.human());
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(2);
        }
    }
}

fn run(command: Command) -> Result<Report, String> {
    match command {
        Command::Psi { family, r, n, count } => cmd_psi(family, r, n, count),
        Command::Cup {
            geometry,
            dim,
            arity,
            index,
            chain,
            cochains,
        } => cmd_cup(geometry, dim, arity, index, &chain, &cochains),
        Command::Steenrod {
            space,
            prime,
            power,
            bockstein,
            class,
            dump_cochain,
        } => cmd_steenrod(&space, prime, power, bockstein, &class, dump_cochain),
        Command::Cohomology {
            space,
            prime,
            degree,
        } => cmd_cohomology(&space, prime, degree),
        Command::Validate { file } => cmd_validate(&file),
    }
}

fn cmd_psi(family: PsiFamily, r: usize, n: u32, count_only: bool) -> Result<Report, String> {
    if r < 1 {
        return Err("arity must be at least 1".into());
    }
    let (name, count, element, terms) = match family {
        PsiFamily::Surjection => {
            let e = psi_sj(r, n);
            (
                "surjection",
                e.iter().count(),
                e.render_pretty(),
                collect_terms(&e),
            )
        }
        PsiFamily::BarrattEccles => {
            let e = psi_be(r, n);
            (
                "barratt-eccles",
                e.iter().count(),
                e.render_pretty(),
                collect_terms(&e),
            )
        }
    };
    Ok(Report::Psi {
        family: name.into(),
        r,
        n,
        count,
        element: (!count_only).then_some(element),
        terms: (!count_only).then_some(terms),
    })
}

fn collect_terms<K: BasisKey>(e: &Element<K>) -> Vec<Term> {
    e.iter()
        .map(|(k, c)| Term {
            coeff: c,
            key: k.render(),
        })
        .collect()
}

fn parse_simplex(spec: &str, dim: usize) -> Result<SimplexKey, String> {
    let vertices: Vec<u8> = spec
        .split(',')
        .map(|t| t.trim().parse::<u8>())
        .collect::<Result<_, _>>()
        .map_err(|e| format!("bad vertex list {spec:?}: {e}"))?;
    if vertices.is_empty() {
        return Err(format!("empty vertex list {spec:?}"));
    }
    if !vertices.windows(2).all(|w| w[0] < w[1]) {
        return Err(format!("vertices must be strictly increasing in {spec:?}"));
    }
    if *vertices.last().unwrap() as usize > dim {
        return Err(format!("vertex out of range for the {dim}-simplex in {spec:?}"));
    }
    Ok(SimplexKey::new(vertices))
}

fn parse_cube(spec: &str, dim: usize) -> Result<CubeKey, String> {
    let mut letters = Vec::new();
    for ch in spec.chars() {
        letters.push(match ch {
            '0' => Letter::Zero,
            '1' => Letter::One,
            '*' => Letter::Seg,
            other => return Err(format!("bad cube letter {other:?} in {spec:?}")),
        });
    }
    if letters.len() != dim {
        return Err(format!("{spec:?} does not describe a face of the {dim}-cube"));
    }
    Ok(CubeKey::new(letters))
}

fn cmd_cup(
    geometry: GeometryArg,
    dim: usize,
    arity: usize,
    index: u32,
    chain: &str,
    cochains: &[String],
) -> Result<Report, String> {
    if arity < 1 {
        return Err("arity must be at least 1".into());
    }
    if cochains.len() != arity {
        return Err(format!(
            "expected {arity} cochains, got {}",
            cochains.len()
        ));
    }
    let (value, chain_text, cochain_text) = match geometry {
        GeometryArg::Simplicial => {
            let chain_key = parse_simplex(chain, dim)?;
            let keys: Vec<SimplexKey> = cochains
                .iter()
                .map(|s| parse_simplex(s, dim))
                .collect::<Result<_, _>>()?;
            pair::<Simplicial>(arity, index, chain_key, keys)
        }
        GeometryArg::Cubical => {
            let chain_key = parse_cube(chain, dim)?;
            let keys: Vec<CubeKey> = cochains
                .iter()
                .map(|s| parse_cube(s, dim))
                .collect::<Result<_, _>>()?;
            pair::<Cubical>(arity, index, chain_key, keys)
        }
    };
    Ok(Report::Cup {
        geometry: match geometry {
            GeometryArg::Simplicial => "simplicial".into(),
            GeometryArg::Cubical => "cubical".into(),
        },
        dim,
        arity,
        index,
        chain: chain_text,
        cochains: cochain_text,
        value,
    })
}

fn pair<G: steenrod::chains::ChainGeometry>(
    arity: usize,
    index: u32,
    chain: G::Key,
    cochains: Vec<G::Key>,
) -> (i64, String, Vec<String>) {
    let chain_text = chain.render();
    let cochain_text: Vec<String> = cochains.iter().map(BasisKey::render).collect();
    let chain = Element::term(Ring::Int, chain, 1);
    let elements: Vec<Element<G::Key>> = cochains
        .into_iter()
        .map(|k| Element::term(Ring::Int, k, 1))
        .collect();
    let refs: Vec<&Element<G::Key>> = elements.iter().collect();
    (cup_r_i::<G>(arity, index, &refs, &chain), chain_text, cochain_text)
}

fn parse_class(spec: &str) -> Result<(usize, usize), String> {
    let rest = spec
        .strip_prefix('H')
        .ok_or_else(|| format!("class selector {spec:?} must look like H1:0"))?;
    let (degree, index) = rest
        .split_once(':')
        .ok_or_else(|| format!("class selector {spec:?} must look like H1:0"))?;
    let degree = degree
        .parse::<usize>()
        .map_err(|e| format!("bad degree in {spec:?}: {e}"))?;
    let index = index
        .parse::<usize>()
        .map_err(|e| format!("bad index in {spec:?}: {e}"))?;
    Ok((degree, index))
}

fn operation_name(prime: u32, power: i64, bockstein: bool) -> String {
    if prime == 2 {
        format!("Sq^{power}")
    } else if bockstein {
        format!("beta P^{power}")
    } else {
        format!("P^{power}")
    }
}

fn cmd_steenrod(
    space_spec: &str,
    prime: u32,
    power: i64,
    bockstein: bool,
    class: &str,
    dump_cochain: bool,
) -> Result<Report, String> {
    let space = spacefile::resolve(space_spec)?;
    let (degree, index) = parse_class(class)?;
    let op = steenrod_on_class(&space, prime, power, bockstein, degree, index)
        .map_err(|e| e.to_string())?;
    let cochain = dump_cochain.then(|| nonzero_values(&space, op.target_degree, &op.cochain));
    Ok(Report::Steenrod {
        space: space_spec.into(),
        prime,
        power,
        bockstein,
        operation: operation_name(prime, power, bockstein),
        class: ClassSelector { degree, index },
        result: OperationResult {
            degree: op.target_degree,
            coords: op.coords,
            cochain,
        },
    })
}

fn nonzero_values(space: &Space, degree: usize, cochain: &[u32]) -> Vec<CellValue> {
    cochain
        .iter()
        .enumerate()
        .filter(|(_, &v)| v != 0)
        .map(|(idx, &v)| CellValue {
            cell: space
                .label(steenrod::complexes::CellId {
                    dim: degree as u32,
                    idx: idx as u32,
                })
                .to_string(),
            value: v,
        })
        .collect()
}

fn cmd_cohomology(space_spec: &str, prime: u32, degree: Option<usize>) -> Result<Report, String> {
    let space = spacefile::resolve(space_spec)?;
    match degree {
        None => {
            let betti = betti_numbers(&space, prime).map_err(|e| e.to_string())?;
            Ok(Report::Cohomology {
                space: space_spec.into(),
                prime,
                betti: Some(betti),
                degree: None,
                rank: None,
                representatives: None,
            })
        }
        Some(m) => {
            if m > space.top_dim() {
                return Err(format!(
                    "degree {m} exceeds the top dimension {}",
                    space.top_dim()
                ));
            }
            let h = cohomology(&space, prime, m).map_err(|e| e.to_string())?;
            let reps: Vec<Vec<CellValue>> = (0..h.rank())
                .map(|i| nonzero_values(&space, m, h.representative(i)))
                .collect();
            Ok(Report::Cohomology {
                space: space_spec.into(),
                prime,
                betti: None,
                degree: Some(m),
                rank: Some(h.rank()),
                representatives: Some(reps),
            })
        }
    }
}

fn cmd_validate(file: &PathBuf) -> Result<Report, String> {
    let space = spacefile::load(file)?;
    let cells = (0..=space.top_dim()).map(|d| space.rank(d)).collect();
    Ok(Report::Validate {
        file: file.display().to_string(),
        geometry: match space.geometry() {
            steenrod::complexes::Geometry::Simplicial => "simplicial".into(),
            steenrod::complexes::Geometry::Cubical => "cubical".into(),
        },
        cells,
    })
}
