use std::fs;
use std::io::{self, Write};
use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use romdom::enumerate::{
    collect_traced, Enumerator, MinimalPrdfEnumerator, MinimalRdfEnumerator, SplitUrrdfEnumerator,
    UrrdfEnumerator,
};
use romdom::graph::families::{random_cobipartite, random_connected_split, random_graph};
use romdom::graph::{
    generate_family, parse_graph, recognize_cobipartite, recognize_split, to_edge_list,
    CobipartitePartition, Family, SplitPartition,
};
use romdom::reductions::{
    gadget_irredundant_to_extprd, gadget_multicolored_ds_to_extprd, gadget_perfectdom_to_split_prd,
};
use romdom::solvers::{
    extend_prdf, extend_prdf_bounded, extend_prdf_fixed_v2, solve_prdf_cobipartite,
    solve_prdf_split_fpt, solve_ur_cobipartite, solve_ur_split,
};
use romdom::{Graph, Oracle, OracleAnswer, OracleMode, OracleProperty, OracleQuery, Property, RomanFunction};

use crate::args::{
    Command, DelayWhat, EnumerateWhat, ExtendMethod, Format, GadgetKind, GraphSource, RandomKind,
    SolveWhat,
};

/// A completed command answers yes or no; errors map to exit status 2.
pub enum Answer {
    Yes,
    No,
}

pub type Outcome = Result<Answer, String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Reads `@FILE` arguments; anything else is taken literally.
fn inline_or_file(arg: &str) -> Result<String, String> {
    match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| format!("{path}: {e}")),
        None => Ok(arg.to_string()),
    }
}

fn load_graph(source: &GraphSource) -> Result<Graph, String> {
    match (&source.graph, &source.family) {
        (Some(path), _) => {
            let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            parse_graph(&text).map_err(|e| format!("{}: {e}", path.display()))
        }
        (None, Some(name)) => {
            let family: Family = name.parse().map_err(err)?;
            generate_family(family, source.size.unwrap_or(0)).map_err(err)
        }
        (None, None) => Err("one of --graph or --family is required".into()),
    }
}

fn load_function(arg: &str, g: &Graph) -> Result<RomanFunction, String> {
    let f: RomanFunction = inline_or_file(arg)?.trim().parse().map_err(err)?;
    f.check_against(g).map_err(err)?;
    Ok(f)
}

fn split_partition(arg: &str, g: &Graph) -> Result<SplitPartition, String> {
    if arg == "auto" {
        return recognize_split(g).ok_or_else(|| "graph is not split".to_string());
    }
    let p: SplitPartition = serde_json::from_str(&inline_or_file(arg)?).map_err(err)?;
    p.validate(g).map_err(err)?;
    Ok(p)
}

fn cobipartite_partition(arg: &str, g: &Graph) -> Result<CobipartitePartition, String> {
    if arg == "auto" {
        return recognize_cobipartite(g).ok_or_else(|| "graph is not cobipartite".to_string());
    }
    let p: CobipartitePartition = serde_json::from_str(&inline_or_file(arg)?).map_err(err)?;
    p.validate(g).map_err(err)?;
    Ok(p)
}

/// One colour class per non-empty line, vertices separated by whitespace.
fn colour_classes(arg: &str) -> Result<Vec<Vec<usize>>, String> {
    inline_or_file(arg)?
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.split_whitespace()
                .map(|t| t.parse().map_err(|_| format!("bad vertex {t:?}")))
                .collect()
        })
        .collect()
}

fn print_json(value: &impl Serialize) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).map_err(err)?;
    println!("{text}");
    Ok(())
}

fn yes_no(yes: bool) -> Answer {
    if yes {
        Answer::Yes
    } else {
        Answer::No
    }
}

pub fn run(command: Command) -> Outcome {
    match command {
        Command::Check {
            source,
            function,
            property,
            format,
        } => check(&source, &function, &property, format),
        Command::Solve {
            source,
            what,
            partition,
            budget,
            format,
        } => solve(&source, what, &partition, budget, format),
        Command::Enumerate {
            source,
            what,
            partition,
            format,
        } => enumerate(&source, what, &partition, format),
        Command::Extend {
            source,
            function,
            method,
            limit,
            format,
        } => extend(&source, &function, method, limit, format),
        Command::Oracle {
            source,
            property,
            mode,
            limit,
            format,
        } => oracle(&source, &property, &mode, limit, format),
        Command::Gadget {
            source,
            kind,
            k,
            partition,
            out,
            format,
        } => gadget(&source, kind, k, partition.as_deref(), out.as_deref(), format),
        Command::BenchDelay {
            source,
            what,
            budget,
            format,
        } => bench_delay(&source, what, budget, format),
        Command::Generate {
            family,
            size,
            random,
            n,
            seed,
            p,
        } => generate(family.as_deref(), size, random, n, seed, p),
    }
}

fn check(source: &GraphSource, function: &str, property: &str, format: Format) -> Outcome {
    let g = load_graph(source)?;
    let f = load_function(function, &g)?;
    let property: Property = property.parse().map_err(err)?;
    let violation = property.explain(&g, &f).map_err(err)?;
    match format {
        Format::Text => match &violation {
            None => println!("true"),
            Some(v) => println!("false: {v}"),
        },
        Format::Json => print_json(&json!({
            "property": property.name(),
            "function": f,
            "holds": violation.is_none(),
            "violation": violation,
        }))?,
    }
    Ok(yes_no(violation.is_none()))
}

fn solve(
    source: &GraphSource,
    what: SolveWhat,
    partition: &str,
    budget: Option<usize>,
    format: Format,
) -> Outcome {
    let g = load_graph(source)?;
    let result = match what {
        SolveWhat::UrSplit => Some(solve_ur_split(&g, &split_partition(partition, &g)?).map_err(err)?),
        SolveWhat::PrdfCobipartite => {
            Some(solve_prdf_cobipartite(&g, &cobipartite_partition(partition, &g)?).map_err(err)?)
        }
        SolveWhat::UrCobipartite => {
            Some(solve_ur_cobipartite(&g, &cobipartite_partition(partition, &g)?).map_err(err)?)
        }
        SolveWhat::PrdfSplit => {
            let k = budget.ok_or("prdf-split needs --budget")?;
            let p = split_partition(partition, &g)?;
            solve_prdf_split_fpt(&g, &p, k)
                .map_err(err)?
                .map(|w| romdom::SolveResult {
                    optimum: w.weight(),
                    witness: w,
                })
        }
    };
    match (&result, format) {
        (Some(r), Format::Text) => println!("{} {}", r.optimum, r.witness),
        (None, Format::Text) => println!("no"),
        (Some(r), Format::Json) => print_json(r)?,
        (None, Format::Json) => print_json(&json!({ "optimum": null, "witness": null }))?,
    }
    Ok(yes_no(result.is_some()))
}

/// Streams solutions as they are produced; JSON mode buffers the report.
fn drain<E: Enumerator>(e: E, format: Format) -> Outcome {
    match format {
        Format::Text => {
            let stdout = io::stdout();
            let mut out = stdout.lock();
            for f in e {
                if writeln!(out, "{f}").is_err() {
                    break;
                }
            }
        }
        Format::Json => print_json(&collect_traced(e))?,
    }
    Ok(Answer::Yes)
}

fn enumerate(source: &GraphSource, what: EnumerateWhat, partition: &str, format: Format) -> Outcome {
    let g = load_graph(source)?;
    match what {
        EnumerateWhat::Urrdf => drain(UrrdfEnumerator::new(&g).map_err(err)?, format),
        EnumerateWhat::UrrdfSplit => {
            let p = split_partition(partition, &g)?;
            drain(SplitUrrdfEnumerator::new(&g, &p).map_err(err)?, format)
        }
        EnumerateWhat::MinimalRdf => drain(MinimalRdfEnumerator::new(&g), format),
        EnumerateWhat::MinimalPrdf => drain(MinimalPrdfEnumerator::new(&g), format),
    }
}

fn extend(
    source: &GraphSource,
    function: &str,
    method: ExtendMethod,
    limit: usize,
    format: Format,
) -> Outcome {
    let g = load_graph(source)?;
    let f = load_function(function, &g)?;
    let (found, witness) = match method {
        ExtendMethod::Search => {
            let w = extend_prdf(&g, &f).map_err(err)?;
            (w.is_some(), w)
        }
        ExtendMethod::Bounded => {
            let w = extend_prdf_bounded(&g, &f, limit).map_err(err)?;
            (w.is_some(), w)
        }
        ExtendMethod::FixedV2 => (extend_prdf_fixed_v2(&g, &f).map_err(err)?, None),
    };
    match format {
        Format::Text => match &witness {
            Some(w) => println!("yes {w}"),
            None if found => println!("yes"),
            None => println!("no"),
        },
        Format::Json => print_json(&json!({ "extensible": found, "witness": witness }))?,
    }
    Ok(yes_no(found))
}

fn oracle(
    source: &GraphSource,
    property: &str,
    mode: &str,
    limit: Option<usize>,
    format: Format,
) -> Outcome {
    let g = load_graph(source)?;
    let query = OracleQuery {
        property: property.parse::<OracleProperty>().map_err(err)?,
        mode: mode.parse::<OracleMode>().map_err(err)?,
    };
    let mut oracle = Oracle::default();
    if let Some(limit) = limit {
        oracle.function_limit = limit;
        oracle.packing_limit = limit;
        oracle.extension_limit = limit;
    }
    let answer = oracle.run(&g, query).map_err(err)?;
    match format {
        Format::Json => print_json(&answer)?,
        Format::Text => match answer {
            OracleAnswer::Functions(fs) => fs.iter().for_each(|f| println!("{f}")),
            OracleAnswer::Sets(sets) => sets.iter().for_each(|s| {
                let words: Vec<String> = s.iter().map(|v| v.to_string()).collect();
                println!("{{{}}}", words.join(" "));
            }),
            OracleAnswer::Count(c) | OracleAnswer::MinWeight(c) => println!("{c}"),
        },
    }
    Ok(Answer::Yes)
}

fn gadget(
    source: &GraphSource,
    kind: GadgetKind,
    k: Option<usize>,
    partition: Option<&str>,
    out: Option<&Path>,
    format: Format,
) -> Outcome {
    let g = load_graph(source)?;
    let need_k = || k.ok_or_else(|| "this gadget needs --k".to_string());
    let output = match kind {
        GadgetKind::PerfectDomination => gadget_perfectdom_to_split_prd(&g, need_k()?),
        GadgetKind::Irredundant => gadget_irredundant_to_extprd(&g, need_k()?),
        GadgetKind::Multicolored => {
            let classes = colour_classes(partition.ok_or("multicolored needs --partition")?)?;
            gadget_multicolored_ds_to_extprd(&g, &classes)
        }
    }
    .map_err(err)?;
    if let Some(prefix) = out {
        let with = |ext: &str| {
            let mut p = prefix.as_os_str().to_owned();
            p.push(ext);
            p
        };
        fs::write(with(".el"), to_edge_list(&output.graph)).map_err(err)?;
        if let Some(f) = &output.presolution {
            fs::write(with(".f"), format!("{f}\n")).map_err(err)?;
        }
    }
    match format {
        Format::Json => print_json(&output)?,
        Format::Text => {
            print!("{}", to_edge_list(&output.graph));
            if let Some(f) = &output.presolution {
                println!("# presolution {f}");
            }
            if let Some(b) = output.budget {
                println!("# budget {b}");
            }
        }
    }
    Ok(Answer::Yes)
}

fn bench_delay(
    source: &GraphSource,
    what: DelayWhat,
    budget: Option<u64>,
    format: Format,
) -> Outcome {
    let g = load_graph(source)?;
    let report = match what {
        DelayWhat::Urrdf => {
            let mut e = UrrdfEnumerator::new(&g).map_err(err)?;
            e.set_step_budget(budget);
            collect_traced(e)
        }
        DelayWhat::MinimalRdf => {
            let mut e = MinimalRdfEnumerator::new(&g);
            e.set_step_budget(budget);
            collect_traced(e)
        }
        DelayWhat::MinimalPrdf => {
            let mut e = MinimalPrdfEnumerator::new(&g);
            e.set_step_budget(budget);
            collect_traced(e)
        }
    };
    let trace = &report.trace;
    match format {
        Format::Json => print_json(&json!({
            "order": g.order(),
            "solutions": report.solutions.len(),
            "max_gap": trace.max_gap(),
            "total_steps": trace.total_steps,
            "complete": trace.complete,
            "gaps": trace.gaps,
        }))?,
        Format::Text => {
            println!("order        {}", g.order());
            println!("solutions    {}", report.solutions.len());
            println!("max gap      {}", trace.max_gap());
            println!("total steps  {}", trace.total_steps);
            println!("complete     {}", trace.complete);
            let gaps: Vec<String> = trace.gaps.iter().map(|x| x.to_string()).collect();
            println!("gaps         {}", gaps.join(" "));
        }
    }
    Ok(yes_no(trace.complete))
}

fn generate(
    family: Option<&str>,
    size: Option<usize>,
    random: Option<RandomKind>,
    n: Option<usize>,
    seed: u64,
    p: f64,
) -> Outcome {
    let g = match (family, random) {
        (Some(name), _) => {
            let family: Family = name.parse().map_err(err)?;
            generate_family(family, size.unwrap_or(0)).map_err(err)?
        }
        (None, Some(kind)) => {
            let n = n.ok_or("random graphs need --n")?;
            if !(0.0..=1.0).contains(&p) {
                return Err(format!("edge probability {p} outside [0, 1]"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            match kind {
                RandomKind::Gnp => random_graph(n, p, &mut rng),
                RandomKind::Split if n == 0 => return Err("split graphs need --n >= 1".into()),
                RandomKind::Split => random_connected_split(n, &mut rng),
                RandomKind::Cobipartite => random_cobipartite(n, p, &mut rng),
            }
        }
        (None, None) => return Err("one of --family or --random is required".into()),
    };
    print!("{}", to_edge_list(&g));
    Ok(Answer::Yes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colour_classes_skip_blank_and_comment_lines() {
        assert_eq!(
            colour_classes("0 2\n\n# second\n1 3 4\n").unwrap(),
            vec![vec![0, 2], vec![1, 3, 4]]
        );
        assert!(colour_classes("0 x").is_err());
    }

    #[test]
    fn inline_arguments_are_taken_literally() {
        assert_eq!(inline_or_file("0210").unwrap(), "0210");
        assert!(inline_or_file("@/nonexistent/romdom").is_err());
    }
}
