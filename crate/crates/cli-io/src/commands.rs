use std::path::Path;

use gamma2::{decompose_cycle, walk, ChainEntry, Gamma2Chain, Order};
use pachner_engine::{is_combinatorial_sphere, reduce_to_boundary, BistellarMove};
use pontryagin::{check_closed_manifold, is_mod2_boundary, p1_dual_direct, p1_dual_local, sw_duals, PontryaginError, XiCache};
use serde::Deserialize;
use serde_json::{json, Value};
use simplicial_core::format::{from_json, oriented_to_json, parse_any, ComplexJson, Parsed};
use simplicial_core::{orient, ComplexError, OrientedComplex, Simplex, Verdict};
use t_algebra::rational::to_string as q_str;
use t_algebra::SimplicialChain;

use crate::args::{Cli, Command, Gamma2Action, OrderArg, P1Method};
use crate::enumerate::enumerate_2spheres;
use crate::error::CliError;
use crate::library;

/// Resolves `@name` to a bundled complex and anything else to a file.
pub fn load_input(input: &str) -> Result<Parsed, CliError> {
    if let Some(name) = input.strip_prefix('@') {
        let entry = library::lookup(name).ok_or_else(|| {
            CliError::Input(format!("no bundled complex {name:?}; known: {}", library::names().join(", ")))
        })?;
        return entry.load().map_err(CliError::Input);
    }
    let text = std::fs::read_to_string(input).map_err(|e| CliError::Input(format!("{input}: {e}")))?;
    parse_any(&text).map_err(|e| CliError::Input(format!("{input}: {e}")))
}

/// Plain input is oriented by `orient`, which makes the least facet positive.
fn oriented(p: Parsed) -> Result<OrientedComplex, CliError> {
    match p {
        Parsed::Oriented(o) => Ok(o),
        Parsed::Plain(k) => orient(&k).map_err(|e| match e {
            ComplexError::NonOrientable => CliError::compute("precondition", "complex is not orientable"),
            e => CliError::compute("complex", e),
        }),
    }
}

fn simplex_json(s: &Simplex) -> Value {
    json!(s.vertices())
}

fn chain_json(c: &SimplicialChain) -> Value {
    c.terms()
        .iter()
        .map(|(s, q)| json!({ "simplex": simplex_json(s), "coefficient": q_str(q) }))
        .collect()
}

fn verdict_json<C>(v: Verdict<C>) -> Value {
    match v {
        Verdict::Yes(_) => json!({ "verdict": "yes" }),
        Verdict::No(m) => json!({ "verdict": "no", "reason": m }),
        Verdict::Unknown(m) => json!({ "verdict": "unknown", "reason": m }),
    }
}

pub fn run(cli: &Cli) -> Result<Value, CliError> {
    match cli.jobs {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| CliError::Input(format!("--jobs: {e}")))?;
            pool.install(|| dispatch(cli))
        }
        None => dispatch(cli),
    }
}

fn dispatch(cli: &Cli) -> Result<Value, CliError> {
    match &cli.command {
        Command::Check { input } => check(cli, load_input(input)?),
        Command::Reduce { input } => reduce(cli, oriented(load_input(input)?)?),
        Command::Sw { input } => sw(cli, load_input(input)?),
        Command::P1 { method } => match method {
            P1Method::Local { input } => p1(cli, "local", oriented(load_input(input)?)?),
            P1Method::Direct { input } => p1(cli, "direct", oriented(load_input(input)?)?),
        },
        Command::Gamma2 { action: Gamma2Action::Decompose { input, order } } => decompose(cli, input, *order),
        Command::EnumerateSpheres { max_vertices } => enumerate(cli, *max_vertices),
        Command::Library => library_report(),
    }
}

fn check(cli: &Cli, p: Parsed) -> Result<Value, CliError> {
    let k = p.complex();
    let manifold = if !k.is_pure() {
        json!({ "verdict": "no", "reason": "not pure" })
    } else {
        match check_closed_manifold(k, cli.budget) {
            Ok(()) => json!({ "verdict": "yes" }),
            Err(PontryaginError::NotClosedManifold(m)) => json!({ "verdict": "no", "reason": m }),
            Err(e) => return Err(e.into()),
        }
    };
    let sphere = if k.is_pure() && k.is_connected() {
        verdict_json(is_combinatorial_sphere(k, cli.budget, cli.seed))
    } else {
        json!({ "verdict": "no", "reason": "not pure and connected" })
    };
    Ok(json!({
        "command": "check",
        "dimension": k.dim(),
        "vertices": k.num_vertices(),
        "f_vector": k.f_vector(),
        "euler_characteristic": k.euler_characteristic(),
        "pure": k.is_pure(),
        "connected": k.is_connected(),
        "closed_pseudomanifold": k.is_closed_pseudomanifold(),
        "orientable": orient(k).is_ok(),
        "oriented_input": matches!(p, Parsed::Oriented(_)),
        "sphere": sphere,
        "manifold": manifold,
    }))
}

fn reduce(cli: &Cli, l: OrientedComplex) -> Result<Value, CliError> {
    let seq = reduce_to_boundary(&l, cli.budget, cli.seed)?;
    let end = seq.replay(&l)?;
    let mut v = json!({
        "command": "reduce",
        "dimension": l.dim(),
        "vertices": l.num_vertices(),
        "length": seq.len(),
        "end_vertices": end.num_vertices(),
        "sequence": serde_json::to_value(&seq).expect("serializable"),
    });
    if cli.trace {
        let states = seq.states(&l)?;
        v["trace"] = states.iter().map(|s| json!(s.complex().f_vector())).collect();
    }
    Ok(v)
}

fn sw(cli: &Cli, p: Parsed) -> Result<Value, CliError> {
    let k = p.complex();
    let d = sw_duals(k, cli.budget)?;
    let n = k.dim() as usize;
    let chains: Vec<Value> = d
        .chains
        .iter()
        .map(|c| {
            json!({
                "degree": c.degree,
                "dual_to": format!("w{}", n - c.degree),
                "simplices": c.len(),
                "cycle": c.is_cycle(),
                "class": if is_mod2_boundary(&d.subdivision, c) { "zero" } else { "nonzero" },
            })
        })
        .collect();
    let mut v = json!({
        "command": "sw",
        "dimension": n,
        "subdivision_f_vector": d.subdivision.f_vector(),
        "chains": chains,
    });
    if cli.trace {
        v["barycentres"] = d.faces.iter().map(simplex_json).collect();
    }
    Ok(v)
}

fn p1(cli: &Cli, method: &str, k: OrientedComplex) -> Result<Value, CliError> {
    let cache = match &cli.xi_cache {
        Some(path) if Path::new(path).exists() => XiCache::load(path)?,
        _ => XiCache::new(),
    };
    let chain = match method {
        "local" => p1_dual_local(&k, cli.budget, cli.seed, &cache)?,
        _ => p1_dual_direct(&k, cli.budget, cli.seed)?,
    };
    if let Some(path) = &cli.xi_cache {
        cache.save(path)?;
    }
    let total = chain.total();
    let mut v = json!({
        "command": format!("p1 {method}"),
        "dimension": k.dim(),
        "vertices": k.num_vertices(),
        "degree": chain.degree,
        "chain": chain_json(&chain),
        "cycle": chain.boundary().is_zero(),
        "total": q_str(&total),
        "p1_number": if k.dim() == 4 { json!(q_str(&total)) } else { Value::Null },
    });
    if cli.trace {
        let faces = k.complex().faces_of_dim(k.dim() - 4);
        let links: Result<Vec<Value>, CliError> = faces
            .iter()
            .map(|s| {
                let lk = k.link(s).map_err(|e| CliError::compute("complex", e))?;
                Ok(json!({ "simplex": simplex_json(s), "link_vertices": lk.num_vertices() }))
            })
            .collect();
        v["links"] = Value::Array(links?);
    }
    Ok(v)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LoopInput {
    start: ComplexJson,
    moves: Vec<BistellarMove>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ChainInput {
    chain: Vec<ChainEntry>,
}

/// A closed move loop `{"start": complex, "moves": [...]}` or a chain
/// `{"chain": [{"edge": ..., "coefficient": "p/q"}, ...]}`.
pub fn read_gamma2_input(text: &str) -> Result<Gamma2Chain, CliError> {
    let bad = |e: String| CliError::Input(format!("gamma2 input: {e}"));
    if let Ok(l) = serde_json::from_str::<LoopInput>(text) {
        let start = oriented(from_json(l.start).map_err(|e| bad(e.to_string()))?)?;
        let (chain, _) = walk(&start, &l.moves)?;
        return Ok(chain);
    }
    let c: ChainInput = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    Gamma2Chain::from_entries(&c.chain).ok_or_else(|| bad("malformed coefficient".into()))
}

fn decompose(cli: &Cli, input: &str, order: OrderArg) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(input).map_err(|e| CliError::Input(format!("{input}: {e}")))?;
    let chain = read_gamma2_input(&text)?;
    let order = match order {
        OrderArg::Forward => Order::Forward,
        OrderArg::Reverse => Order::Reverse,
    };
    let d = decompose_cycle(&chain, order)?;
    let terms: Vec<Value> = d
        .terms
        .iter()
        .map(|t| {
            let mut v = json!({
                "kind": t.cycle.kind.to_string(),
                "params": t.cycle.params,
                "sign": t.cycle.sign,
                "coefficient": q_str(&t.coefficient),
                "value": q_str(&t.cycle.value()),
            });
            if cli.trace {
                v["start"] = serde_json::to_value(oriented_to_json(&t.cycle.start)).expect("serializable");
                v["moves"] = serde_json::to_value(&t.cycle.moves).expect("serializable");
            }
            v
        })
        .collect();
    let mut v = json!({
        "command": "gamma2 decompose",
        "order": format!("{order:?}").to_lowercase(),
        "edges": chain.len(),
        "terms": terms,
        "residual": "0",
        "c": q_str(&d.c()),
    });
    if cli.trace {
        v["chain"] = serde_json::to_value(chain.to_entries()).expect("serializable");
    }
    Ok(v)
}

fn enumerate(cli: &Cli, max_vertices: usize) -> Result<Value, CliError> {
    if max_vertices < 4 {
        return Err(CliError::Input("--max-vertices must be at least 4".into()));
    }
    let levels: Vec<Value> = enumerate_2spheres(max_vertices)
        .iter()
        .map(|l| {
            let mut v = json!({
                "vertices": l.vertices,
                "unoriented": l.unoriented(),
                "oriented": l.oriented(),
                "chiral": l.classes.iter().filter(|c| c.chiral).count(),
            });
            if cli.trace {
                v["classes"] = l
                    .classes
                    .iter()
                    .map(|c| json!({ "chiral": c.chiral, "complex": oriented_to_json(&c.sphere) }))
                    .collect();
            }
            v
        })
        .collect();
    Ok(json!({ "command": "enumerate-spheres", "levels": levels }))
}

fn library_report() -> Result<Value, CliError> {
    let mut out = Vec::new();
    for e in library::entries() {
        e.load().map_err(|m| CliError::compute("library", m))?;
        out.push(json!({
            "name": e.name,
            "f_vector": e.f_vector,
            "euler_characteristic": e.euler,
            "orientable": e.orientable,
        }));
    }
    Ok(json!({ "command": "library", "entries": out }))
}
