use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use nmgraph::oracle::{check_sweep_limits, compare, enumerate_nm_graphs, SweepReport};
use nmgraph::{
    absolute_clique_number, check_tight, chromatic_number, generate_exceptional, generate_fk, generate_tight,
    girth, homomorphism_exists, is_planar, is_triangle_free, parse_document, relative_clique_number,
    seeing_graph, serialize_document, validate_embedding, verify_absolute_clique, verify_relative_clique,
    ChromaticOutcome, CliqueCertificate, NMParams, NmgDocument, UnseenPair, VertexSet,
};
use rayon::prelude::*;
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Input {
        path: PathBuf,
        source: nmgraph::Error,
    },
    #[error(transparent)]
    Core(#[from] nmgraph::Error),
    #[error("{0}")]
    Usage(String),
}

/// What a subcommand produced: text for stdout, the same data as JSON, and
/// the exit code.
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub code: u8,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Self { text, json, code: 0 }
    }

    fn with_code(mut self, success: bool) -> Self {
        self.code = if success { 0 } else { 1 };
        self
    }

    pub fn print(&self, json: bool) {
        if json {
            println!("{}", serde_json::to_string_pretty(&self.json).expect("json value"));
        } else {
            print!("{}", self.text);
        }
    }
}

fn read_document(path: &Path) -> Result<NmgDocument, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_document(&text).map_err(|source| CliError::Input {
        path: path.to_path_buf(),
        source,
    })
}

fn join(vs: impl IntoIterator<Item = usize>) -> String {
    vs.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn emit_document(doc: &NmgDocument, output: Option<PathBuf>, mut json: Value) -> Result<Outcome, CliError> {
    let text = serialize_document(doc);
    json["document"] = Value::String(text.clone());
    match output {
        Some(path) => {
            std::fs::write(&path, &text).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            json["written"] = json!(path);
            let summary = format!(
                "written: {}\nvertices: {}\nadjacencies: {}\n",
                path.display(),
                doc.graph.vertex_count(),
                doc.graph.adjacency_count()
            );
            Ok(Outcome::ok(summary, json))
        }
        None => Ok(Outcome::ok(text, json)),
    }
}

pub fn gen_tight(n: usize, m: usize, output: Option<PathBuf>) -> Result<Outcome, CliError> {
    let params = NMParams::new(n, m)?;
    let t = generate_tight(params);
    let json = json!({
        "kind": "tight",
        "graph": t.graph,
        "good": t.good_set,
        "embedding": t.embedding,
    });
    emit_document(&t.to_document(), output, json)
}

pub fn gen_exceptional(
    n: usize,
    m: usize,
    alpha: usize,
    beta: usize,
    output: Option<PathBuf>,
) -> Result<Outcome, CliError> {
    let params = NMParams::new(n, m)?;
    let gadget = generate_exceptional(params, alpha, beta)?;
    let json = json!({
        "kind": "exceptional",
        "graph": gadget.graph,
        "good": gadget.good_set,
        "poles": [gadget.x, gadget.y],
    });
    let desc = format!("exceptional configuration, labels {alpha} {beta}");
    emit_document(&gadget.to_document(&desc), output, json)
}

fn parse_pair(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("label pair {s:?} is not of the form ALPHA:BETA"));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

pub fn gen_fk(n: usize, m: usize, pairs: &[String], output: Option<PathBuf>) -> Result<Outcome, CliError> {
    let params = NMParams::new(n, m)?;
    let pairs = pairs.iter().map(|s| parse_pair(s)).collect::<Result<Vec<_>, _>>()?;
    let gadget = generate_fk(params, &pairs)?;
    let json = json!({
        "kind": "fk",
        "graph": gadget.graph,
        "good": gadget.good_set,
        "poles": [gadget.x, gadget.y],
    });
    let desc = format!("F_{} configuration", pairs.len());
    emit_document(&gadget.to_document(&desc), output, json)
}

fn clique_command(
    file: &Path,
    verify: Option<Vec<usize>>,
    certificate: bool,
    name: &str,
    check: fn(&nmgraph::NMGraph, &VertexSet) -> Result<CliqueCertificate, UnseenPair>,
    search: fn(&nmgraph::NMGraph) -> (usize, CliqueCertificate),
) -> Result<Outcome, CliError> {
    let doc = read_document(file)?;
    let g = &doc.graph;
    let cert = match verify {
        Some(vs) => {
            let set = VertexSet::new(vs, g.vertex_count())?;
            match check(g, &set) {
                Ok(cert) => cert,
                Err(pair) => {
                    let text = format!("{name}: false\nunseen_pair: {} {}\n", pair.u, pair.v);
                    let json = json!({ name: false, "unseen_pair": [pair.u, pair.v] });
                    return Ok(Outcome::ok(text, json).with_code(false));
                }
            }
        }
        None => {
            let (size, cert) = search(g);
            let mut text = format!("{name}_number: {size}\nvertices: {}\n", join(cert.vertices.iter()));
            if certificate {
                text.push_str(&cert.to_text());
            }
            let json = json!({ format!("{name}_number"): size, "certificate": cert });
            return Ok(Outcome::ok(text, json));
        }
    };
    let mut text = format!("{name}: true\nsize: {}\n", cert.size());
    if certificate {
        text.push_str(&cert.to_text());
    }
    let json = json!({ name: true, "size": cert.size(), "certificate": cert });
    Ok(Outcome::ok(text, json))
}

pub fn relative_clique(file: &Path, verify: Option<Vec<usize>>, certificate: bool) -> Result<Outcome, CliError> {
    clique_command(
        file,
        verify,
        certificate,
        "relative_clique",
        verify_relative_clique,
        relative_clique_number,
    )
}

pub fn absolute_clique(file: &Path, verify: Option<Vec<usize>>, certificate: bool) -> Result<Outcome, CliError> {
    clique_command(
        file,
        verify,
        certificate,
        "absolute_clique",
        verify_absolute_clique,
        absolute_clique_number,
    )
}

pub fn chromatic(file: &Path, max_order: Option<usize>) -> Result<Outcome, CliError> {
    let doc = read_document(file)?;
    let g = &doc.graph;
    let outcome = chromatic_number(g, max_order)?;
    let json = json!(outcome);
    match outcome {
        ChromaticOutcome::Found(r) => {
            let text = format!(
                "chromatic_number: {}\nlower_bound_used: {}\n{}",
                r.value,
                r.lower_bound_used,
                r.witness.to_text(g.params())
            );
            Ok(Outcome::ok(text, json))
        }
        ChromaticOutcome::Exhausted {
            lower_bound_used,
            max_order,
        } => {
            let text = format!(
                "chromatic_number: exceeds {max_order}\nlower_bound_used: {lower_bound_used}\nmax_order: {max_order}\n"
            );
            Ok(Outcome::ok(text, json).with_code(false))
        }
    }
}

pub fn hom(g_path: &Path, h_path: &Path) -> Result<Outcome, CliError> {
    let g = read_document(g_path)?.graph;
    let h = read_document(h_path)?.graph;
    match homomorphism_exists(&g, &h)? {
        Some(w) => {
            let text = format!("homomorphism: true\n{}", w.to_text(g.params()));
            Ok(Outcome::ok(text, json!({ "homomorphism": true, "witness": w })))
        }
        None => Ok(Outcome::ok("homomorphism: false\n".into(), json!({ "homomorphism": false })).with_code(false)),
    }
}

pub fn seeing(file: &Path, restrict: Option<Vec<usize>>) -> Result<Outcome, CliError> {
    let g = read_document(file)?.graph;
    let set = restrict.map(|vs| VertexSet::new(vs, g.vertex_count())).transpose()?;
    let sg = seeing_graph(&g, set.as_ref());
    let edges: Vec<Value> = sg
        .edges()
        .map(|(u, v)| json!({ "u": u, "v": v, "witnesses": sg.witnesses(u, v) }))
        .collect();
    let json = json!({
        "vertex_count": sg.vertex_count(),
        "members": sg.members(),
        "edge_count": sg.edge_count(),
        "edges": edges,
    });
    Ok(Outcome::ok(sg.to_text(), json))
}

pub fn check(file: &Path) -> Result<Outcome, CliError> {
    let doc = read_document(file)?;
    let g = &doc.graph;
    let gir = girth(g);
    let triangle_free = is_triangle_free(g);
    let planar = is_planar(g).is_some();
    let mut text = String::new();
    let _ = writeln!(text, "params: {}", g.params());
    let _ = writeln!(text, "vertices: {}", g.vertex_count());
    let _ = writeln!(text, "adjacencies: {}", g.adjacency_count());
    let _ = writeln!(text, "connected: {}", g.is_connected());
    let _ = writeln!(text, "girth: {}", gir.map_or("none".to_string(), |v| v.to_string()));
    let _ = writeln!(text, "triangle_free: {triangle_free}");
    let _ = writeln!(text, "planar: {planar}");
    let mut json = json!({
        "params": { "n": g.params().n(), "m": g.params().m() },
        "vertices": g.vertex_count(),
        "adjacencies": g.adjacency_count(),
        "connected": g.is_connected(),
        "girth": gir,
        "triangle_free": triangle_free,
        "planar": planar,
    });
    let mut ok = true;
    match &doc.embedding {
        None => {
            let _ = writeln!(text, "embedding: absent");
            json["embedding"] = Value::Null;
        }
        Some(rot) => match validate_embedding(g, rot) {
            Ok(e) => {
                ok = e.euler_holds;
                let _ = writeln!(text, "embedding: present");
                let _ = writeln!(text, "faces: {}", e.faces);
                let _ = writeln!(
                    text,
                    "euler: {} - {} + {} = {} {}",
                    e.vertices,
                    e.edges,
                    e.faces,
                    e.vertices as i64 - e.edges as i64 + e.faces as i64,
                    if e.euler_holds { "holds" } else { "fails" }
                );
                json["embedding"] = json!(e);
            }
            Err(err) => {
                ok = false;
                let _ = writeln!(text, "embedding: invalid ({err})");
                json["embedding"] = json!({ "error": err.to_string() });
            }
        },
    }
    Ok(Outcome::ok(text, json).with_code(ok))
}

pub fn oracle_sweep(vertices: usize, n: usize, m: usize) -> Result<Outcome, CliError> {
    let params = NMParams::new(n, m)?;
    check_sweep_limits(vertices, params)?;
    let mut report = SweepReport::default();
    for k in 1..=vertices {
        let graphs: Vec<_> = enumerate_nm_graphs(k, params, false)?.collect();
        let results: Vec<_> = graphs.par_iter().map(compare).collect();
        for (g, cmp) in graphs.iter().zip(results) {
            report.record(g, cmp?);
        }
    }
    let passed = report.passed();
    let mut text = String::new();
    let _ = writeln!(text, "params: {params}");
    let _ = writeln!(text, "max_vertices: {vertices}");
    let _ = writeln!(text, "graphs_checked: {}", report.graphs_checked);
    let _ = writeln!(text, "disagreements: {}", report.disagreements);
    let _ = writeln!(text, "sandwich_violations: {}", report.sandwich_violations);
    if let Some(c) = &report.first_counterexample {
        let _ = writeln!(text, "counterexample: {:?}", c.comparison);
        text.push_str(&c.graph);
    }
    let _ = writeln!(text, "result: {}", if passed { "PASS" } else { "FAIL" });
    Ok(Outcome::ok(text, json!(report)).with_code(passed))
}

pub fn verify_theorem(n: usize, m: usize) -> Result<Outcome, CliError> {
    let params = NMParams::new(n, m)?;
    let start = Instant::now();
    let r = check_tight(params);
    eprintln!("checked in {:.3}s", start.elapsed().as_secs_f64());
    let mut text = String::new();
    let _ = writeln!(text, "params: {params}");
    let _ = writeln!(text, "vertices: {}", r.vertices);
    let _ = writeln!(text, "adjacencies: {}", r.adjacencies);
    let _ = writeln!(text, "girth: {}", r.girth.map_or("none".to_string(), |v| v.to_string()));
    let _ = writeln!(text, "planar: {}", r.planar);
    let _ = writeln!(text, "euler: {}", r.euler_holds);
    let _ = writeln!(text, "good_set_relative_clique: {}", r.good_set_is_relative_clique);
    let _ = writeln!(text, "{}", r.summary_line());
    let passed = r.passed();
    let mut json = json!(r);
    json["passed"] = json!(passed);
    Ok(Outcome::ok(text, json).with_code(passed))
}
