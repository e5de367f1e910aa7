//! Command-line interface: construct deformed loops, verify gyrogroup
//! axioms, enumerate and classify all deformations of a group, count
//! transversals over symmetric groups, and probe the equivariant-map space.
//!
//! Exit codes: 0 success (all axioms pass), 1 verification failure,
//! 2 usage error, 3 size cap exceeded.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use gyroloop::genprod::{VerifyMode, DEFAULT_PAIR_CAP, DEFAULT_SEED};
use gyroloop::json::{report_to_json_string, table_to_json_string};
use gyroloop::{
    brute_count, classify_deformed_loops, count_gyrotransversals, cycle_types, deformed_loop,
    deformed_loop_general, embed_transversal, enumerate_cafs, is_gyrotransversal, parse_group_spec,
    parse_kspec, r_classes, verify_right_gyrogroup, verify_right_gyrogroup_exhaustive,
    ClassAssignedFunction, Error, FiniteGroup, GenProduct, RClassPartition, TableJson,
};

const GROUP_CAP: usize = 200;
const BRUTE_DEGREE_LIMIT: usize = 6;
const EQUIVARIANT_ORDER_CAP: usize = 24;

#[derive(Parser)]
#[command(
    name = "gyroloop",
    version,
    about = "Right gyrogroup structures on finite permutation groups",
    long_about = "Builds exponent-deformed loops on finite permutation groups, verifies the \
                  right gyrogroup axioms exhaustively, classifies the results up to \
                  isomorphism, and counts gyrotransversals over symmetric groups.\n\n\
                  Group specs are registry names (S<n>, A<n>, D<n>, C<n>, Q8) or generator \
                  lists such as 'gens:(0 1),(0 1 2 3)'. Points are 0-based."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the element classes of a group (conjugacy merged with inversion)
    Classes {
        /// Group name or generator spec
        #[arg(long, short)]
        group: String,
    },
    /// Build the deformed loop for one exponent assignment and verify it
    Construct {
        #[arg(long, short)]
        group: String,
        /// Exponent assignment, e.g. "(0 1):1,(0 1 2):2"; omitted classes are 0
        #[arg(long, short)]
        k: Option<String>,
        /// Directory for loop.json and report.json
        #[arg(long)]
        out: Option<PathBuf>,
        /// Add the direct uniqueness sweep to verification
        #[arg(long)]
        exhaustive: bool,
    },
    /// List every canonical exponent assignment of a group
    Enumerate {
        #[arg(long, short)]
        group: String,
    },
    /// Partition all deformed loops of a group into isomorphism classes
    Classify {
        #[arg(long, short)]
        group: String,
    },
    /// Count gyrotransversals over the symmetric group of degree n
    Count {
        /// Degree of the symmetric group
        n: usize,
        /// Also count by enumerating classes of the actual group (n <= 6)
        #[arg(long)]
        brute: bool,
        /// Print the per-cycle-type factor table
        #[arg(long, short)]
        verbose: bool,
    },
    /// Re-verify a table previously exported as JSON
    Verify {
        /// Path to a loop or group table in the JSON schema
        file: PathBuf,
        /// Add the direct uniqueness sweep to verification
        #[arg(long)]
        exhaustive: bool,
    },
    /// Enumerate equivariant maps and compare against class assigned ones
    ExploreEquivariant {
        #[arg(long, short)]
        group: String,
        /// Verify the pair group exhaustively instead of by sampling
        #[arg(long)]
        exhaustive: bool,
        /// Seed for sampled pair-group verification
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &Error) -> ExitCode {
    match e {
        Error::SizeCapExceeded { .. } => ExitCode::from(3),
        Error::AxiomFailure(_) | Error::NonBijectiveColumn { .. } | Error::CriterionFailed(_) => {
            ExitCode::from(1)
        }
        _ => ExitCode::from(2),
    }
}

fn load_group(spec: &str, cap: usize) -> gyroloop::Result<(Arc<FiniteGroup>, Arc<RClassPartition>)> {
    let group = Arc::new(parse_group_spec(spec, cap)?);
    let partition = Arc::new(r_classes(group.clone()));
    Ok((group, partition))
}

fn run(command: Command) -> gyroloop::Result<ExitCode> {
    match command {
        Command::Classes { group } => cmd_classes(&group),
        Command::Construct {
            group,
            k,
            out,
            exhaustive,
        } => cmd_construct(&group, k.as_deref(), out.as_deref(), exhaustive),
        Command::Enumerate { group } => cmd_enumerate(&group),
        Command::Classify { group } => cmd_classify(&group),
        Command::Count { n, brute, verbose } => cmd_count(n, brute, verbose),
        Command::Verify { file, exhaustive } => cmd_verify(&file, exhaustive),
        Command::ExploreEquivariant {
            group,
            exhaustive,
            seed,
        } => cmd_explore_equivariant(&group, exhaustive, seed),
    }
}

fn cmd_classes(spec: &str) -> gyroloop::Result<ExitCode> {
    let (group, partition) = load_group(spec, GROUP_CAP)?;
    println!(
        "group {spec}: order {}, degree {}",
        group.order(),
        group.degree()
    );
    for ci in 0..partition.len() {
        let rep = partition.representative(ci);
        println!(
            "class {ci}: rep {}, size {}, order {}",
            group.element(rep),
            partition.class(ci).len(),
            partition.class_order(ci)
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_construct(
    spec: &str,
    kspec: Option<&str>,
    out: Option<&std::path::Path>,
    exhaustive: bool,
) -> gyroloop::Result<ExitCode> {
    let (group, partition) = load_group(spec, GROUP_CAP)?;
    let k = match kspec {
        Some(s) => parse_kspec(&partition, s)?,
        None => ClassAssignedFunction::zero(partition.clone()),
    };
    let table = deformed_loop(&group, &k);
    let report = if exhaustive {
        verify_right_gyrogroup_exhaustive(&table)
    } else {
        verify_right_gyrogroup(&table)
    };

    println!("group {spec}: order {}", group.order());
    println!("k = {}", k.to_kspec());
    println!("canonical k = {}", k.canonicalize().to_kspec());
    println!("right gyrogroup: {}", report.is_right_gyrogroup());
    println!("{}", report_to_json_string(&report));

    if let Some(dir) = out {
        std::fs::create_dir_all(dir).map_err(|e| Error::Parse {
            input: dir.display().to_string(),
            reason: e.to_string(),
        })?;
        let loop_json = table_to_json_string(&TableJson::from_loop(&table));
        let report_json = report_to_json_string(&report);
        for (name, payload) in [("loop.json", loop_json), ("report.json", report_json)] {
            let path = dir.join(name);
            std::fs::write(&path, payload + "\n").map_err(|e| Error::Parse {
                input: path.display().to_string(),
                reason: e.to_string(),
            })?;
            println!("wrote {}", path.display());
        }
    }

    Ok(if report.is_right_gyrogroup() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_enumerate(spec: &str) -> gyroloop::Result<ExitCode> {
    let (group, partition) = load_group(spec, GROUP_CAP)?;
    let functions: Vec<ClassAssignedFunction> = enumerate_cafs(partition).collect();
    println!(
        "group {spec}: order {}, canonical class assigned functions: {}",
        group.order(),
        functions.len()
    );
    for k in functions {
        let rendered = k.to_kspec();
        if rendered.is_empty() {
            println!("0");
        } else {
            println!("{rendered}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(spec: &str) -> gyroloop::Result<ExitCode> {
    let (group, _) = load_group(spec, GROUP_CAP)?;
    let classification = classify_deformed_loops(&group)?;
    println!("group {spec}: order {}", classification.group_order);
    println!(
        "canonical class assigned functions: {}",
        classification.function_count
    );
    println!("isomorphism classes: {}", classification.classes.len());
    let mut all_pass = true;
    for (i, class) in classification.classes.iter().enumerate() {
        let gyr = &class.gyration_group;
        let name = gyr.name.clone().unwrap_or_else(|| "?".to_string());
        println!(
            "class {}: members {}, representative k = {}, loop order {}, associative {}, \
             right gyrogroup {}, gyration group order {} ({}, abelian {})",
            i + 1,
            class.members.len(),
            class.representative.to_kspec(),
            class.table.order(),
            class.associative,
            class.report.is_right_gyrogroup(),
            gyr.order,
            name,
            gyr.abelian
        );
        all_pass &= class.report.is_right_gyrogroup();
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_count(n: usize, brute: bool, verbose: bool) -> gyroloop::Result<ExitCode> {
    if n == 0 {
        return Err(Error::Parse {
            input: "0".to_string(),
            reason: "degree must be at least 1".to_string(),
        });
    }
    let formula = count_gyrotransversals(n)?;
    if verbose {
        for t in cycle_types(n) {
            println!("type {t}: lcm {}", t.lcm());
        }
    }
    println!("count(S{n}) = {formula}");
    if brute {
        if n > BRUTE_DEGREE_LIMIT {
            return Err(Error::Parse {
                input: n.to_string(),
                reason: format!("--brute supports degrees up to {BRUTE_DEGREE_LIMIT}"),
            });
        }
        let group = Arc::new(parse_group_spec(&format!("S{n}"), 1000)?);
        let brute_value = brute_count(&group)?;
        println!("brute(S{n}) = {brute_value}");
        if brute_value != formula {
            eprintln!("error: closed form and enumeration disagree");
            return Ok(ExitCode::from(1));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(file: &std::path::Path, exhaustive: bool) -> gyroloop::Result<ExitCode> {
    let payload = std::fs::read_to_string(file).map_err(|e| Error::Parse {
        input: file.display().to_string(),
        reason: e.to_string(),
    })?;
    let table = gyroloop::json::table_from_json_str(&payload)?;
    let report = if exhaustive {
        verify_right_gyrogroup_exhaustive(&table)
    } else {
        verify_right_gyrogroup(&table)
    };
    println!("{}", report_to_json_string(&report));
    Ok(if report.is_right_gyrogroup() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_explore_equivariant(
    spec: &str,
    exhaustive: bool,
    seed: Option<u64>,
) -> gyroloop::Result<ExitCode> {
    let (group, _) = load_group(spec, GROUP_CAP)?;
    if group.order() > EQUIVARIANT_ORDER_CAP {
        return Err(Error::SizeCapExceeded {
            what: "equivariant-map search",
            size: group.order(),
            cap: EQUIVARIANT_ORDER_CAP,
        });
    }
    let mode = if exhaustive {
        VerifyMode::Exhaustive
    } else {
        VerifyMode::Auto {
            seed: seed.unwrap_or(DEFAULT_SEED),
        }
    };
    let product = Arc::new(GenProduct::build(group.clone(), DEFAULT_PAIR_CAP, mode)?);
    let survey = gyroloop::survey_equivariant_maps(&group, EQUIVARIANT_ORDER_CAP)?;

    // every class-assigned table, for the coincidence report below
    let class_tables: Vec<Vec<Vec<usize>>> = enumerate_cafs(survey.partition.clone())
        .map(|k| deformed_loop(&group, &k).table().to_vec())
        .collect();

    let surplus = survey.surplus_indices();
    println!("group {spec}: order {}", group.order());
    println!("equivariant maps: {}", survey.maps.len());
    println!(
        "class-assigned maps: {}",
        survey.maps.len() - surplus.len()
    );
    println!("surplus maps: {}", surplus.len());

    let mut all_gyro = true;
    for (slot, &i) in surplus.iter().enumerate() {
        let map = &survey.maps[i];
        let transversal = embed_transversal(&product, map.values())?;
        let transversal_ok = is_gyrotransversal(&transversal).is_ok();
        let table = deformed_loop_general(&group, map)?;
        let report = verify_right_gyrogroup(&table);
        let coincides = class_tables.iter().any(|t| t == table.table());
        let values: Vec<String> = map
            .values()
            .iter()
            .map(|&v| group.element(v).to_string())
            .collect();
        let gyr_order = report
            .gyration_group_order
            .map_or("?".to_string(), |o| o.to_string());
        println!(
            "surplus {}: g = [{}], gyrotransversal {}, right gyrogroup {}, \
             gyration group order {}, table equals a class-assigned table: {}",
            slot + 1,
            values.join(", "),
            transversal_ok,
            report.is_right_gyrogroup(),
            gyr_order,
            coincides
        );
        all_gyro &= transversal_ok && report.is_right_gyrogroup();
    }
    Ok(if all_gyro {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
