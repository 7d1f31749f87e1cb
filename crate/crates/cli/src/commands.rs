use std::fs;
use std::io::{Read, Write};
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::Serialize;
use xing_crossings::{
    classify_crossing, detect_b_configs, detect_w_configs, verify_drawing, CombinatorialDrawing, CrossingReport,
    DrawingJson, TypeSet,
};
use xing_decomp::{bc_tree, skeleton_plus, spr_tree};
use xing_graph::io::{parse_edge_list, parse_graph6, write_edge_list};
use xing_graph::Graph;
use xing_hardness::{
    build_hard_instance, build_witness_drawing, instance_path_decomposition, solve_3partition,
    validate_path_decomposition, BuildOptions, HardVariant, ThreePartitionInstance, PARTITION_GUARD,
};
use xing_solver::{
    oracle_enumerate, oracle_geom, outer_at, solve, solve_geom_with_outer, Decision, OuterRequirement, SolveOptions,
};

use crate::svg::render_svg;
use crate::{
    ClassifyArgs, Command, DecomposeArgs, DrawArgs, GenHardArgs, InputArgs, SolveArgs, VariantArg, VerifyArgs, EXIT_NO,
    EXIT_YES,
};

pub(crate) fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Solve(a) => cmd_solve(&a, out, err),
        Command::Oracle(a) => {
            let g = read_graph(&a.input.input)?;
            let s = type_set(&a.input.types)?;
            let o = outer(&g, &a.input)?;
            let decision = run_oracle(&g, &o, s, a.input.geometric)?;
            let report = SolveReport::new(&g, s, &a.input, "oracle", decision);
            report.emit(out, a.input.json)?;
            Ok(exit_for(decision))
        }
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Classify(a) => cmd_classify(&a, out),
        Command::Decompose(a) => cmd_decompose(&a, out),
        Command::GenHard(a) => cmd_gen_hard(&a, out, err),
        Command::Draw(a) => cmd_draw(&a),
    }
}

fn read_text(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {path}"))
}

fn write_text(path: &str, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {path}"))
}

fn read_graph(path: &str) -> Result<Graph> {
    let text = read_text(path)?;
    let g = if path.ends_with(".g6") {
        let line = text.lines().find(|l| !l.trim().is_empty()).ok_or_else(|| anyhow!("{path}: no graph6 line"))?;
        parse_graph6(line.trim())
    } else {
        parse_edge_list(&text)
    };
    g.with_context(|| format!("parsing {path}"))
}

fn type_set(s: &str) -> Result<TypeSet> {
    s.parse::<TypeSet>().with_context(|| format!("--types {s}"))
}

fn outer(g: &Graph, a: &InputArgs) -> Result<OuterRequirement> {
    match &a.outer {
        Some(v) if g.index_of(v).is_none() => bail!("--outer: {v} is not a vertex"),
        Some(v) => Ok(OuterRequirement::vertex(v.clone())),
        None => Ok(OuterRequirement::none()),
    }
}

fn exit_for(d: Decision) -> i32 {
    match d {
        Decision::Yes => EXIT_YES,
        Decision::No => EXIT_NO,
    }
}

/// Every vertex of a topological drawing can be moved to the outer face, so
/// the requirement only matters for the geometric variant.
fn run_oracle(g: &Graph, o: &OuterRequirement, s: TypeSet, geometric: bool) -> Result<Decision> {
    Ok(if geometric { oracle_geom(g, o, s)? } else { oracle_enumerate(g, s)? })
}

fn json_line<T: Serialize>(out: &mut dyn Write, v: &T) -> Result<()> {
    let s = serde_json::to_string_pretty(v)?;
    writeln!(out, "{s}")?;
    Ok(())
}

#[derive(Serialize)]
struct SolveReport {
    decision: String,
    types: String,
    mode: &'static str,
    method: &'static str,
    outer: Option<String>,
    vertices: usize,
    edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    nodes: Option<u64>,
    /// A whole-graph drawing was produced.
    drawing: bool,
    pieces: usize,
    crossings: Vec<CrossingReport>,
}

impl SolveReport {
    fn new(g: &Graph, s: TypeSet, a: &InputArgs, method: &'static str, decision: Decision) -> Self {
        SolveReport {
            decision: decision.to_string(),
            types: s.to_string(),
            mode: if a.geometric { "geometric" } else { "topological" },
            method,
            outer: a.outer.clone(),
            vertices: g.n(),
            edges: g.m(),
            nodes: None,
            drawing: false,
            pieces: 0,
            crossings: Vec::new(),
        }
    }

    fn emit(&self, out: &mut dyn Write, json: bool) -> Result<()> {
        if json {
            return json_line(out, self);
        }
        writeln!(out, "{}", self.decision)?;
        writeln!(out, "types {}", self.types)?;
        writeln!(out, "mode {} ({})", self.mode, self.method)?;
        writeln!(out, "graph {} vertices, {} edges", self.vertices, self.edges)?;
        if let Some(n) = self.nodes {
            writeln!(out, "search nodes {n}")?;
        }
        if self.pieces > 0 {
            writeln!(out, "pieces {}", self.pieces)?;
        }
        if self.drawing {
            writeln!(out, "crossings {}", self.crossings.len())?;
            for c in &self.crossings {
                let touch = if c.realized { "" } else { " (touching)" };
                writeln!(out, "  {}-{} x {}-{} {}{touch}", c.e[0], c.e[1], c.f[0], c.f[1], c.kind)?;
            }
        }
        Ok(())
    }
}

fn cmd_solve(a: &SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let g = read_graph(&a.input.input)?;
    let s = type_set(&a.input.types)?;
    let o = outer(&g, &a.input)?;
    if a.oracle {
        let decision = run_oracle(&g, &o, s, a.input.geometric)?;
        if a.witness.is_some() || a.svg.is_some() {
            writeln!(err, "note: the oracle decides without a witness; nothing written")?;
        }
        SolveReport::new(&g, s, &a.input, "oracle", decision).emit(out, a.input.json)?;
        return Ok(exit_for(decision));
    }
    let opts = SolveOptions { budget: a.budget, parallel: a.parallel };
    let r = if a.input.geometric { solve_geom_with_outer(&g, &o, s, opts)? } else { solve(&g, s, opts)? };
    let mut report = SolveReport::new(&g, s, &a.input, "solver", r.decision);
    report.nodes = Some(r.stats.nodes);
    let mut drawing = None;
    if let Some(w) = r.witness {
        report.pieces = w.pieces.len();
        drawing = w.drawing;
    }
    if let (Some(d), Some(v), false) = (&drawing, &o.vertex, a.input.geometric) {
        drawing = Some(outer_at(d, g.index_of(v).expect("checked"))?);
    }
    if let Some(d) = &drawing {
        report.drawing = true;
        report.crossings = verify_drawing(d, s)?.crossings;
    }
    report.emit(out, a.input.json)?;
    if r.decision == Decision::Yes {
        match &drawing {
            Some(d) => {
                if let Some(p) = &a.witness {
                    write_text(p, &drawing_json(d)?)?;
                }
                if let Some(p) = &a.svg {
                    write_text(p, &render_svg(d))?;
                }
            }
            None if a.witness.is_some() || a.svg.is_some() => {
                writeln!(err, "note: only per-piece drawings were found; no witness written")?;
            }
            None => {}
        }
    }
    Ok(exit_for(r.decision))
}

fn drawing_json(d: &CombinatorialDrawing) -> Result<String> {
    Ok(serde_json::to_string_pretty(&d.to_json())? + "\n")
}

fn read_drawing(path: &str) -> Result<CombinatorialDrawing> {
    let text = read_text(path)?;
    let j: DrawingJson = serde_json::from_str(&text).with_context(|| format!("parsing {path}"))?;
    CombinatorialDrawing::from_json(&j).with_context(|| format!("{path}"))
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let d = read_drawing(&a.drawing)?;
    let s = type_set(&a.types)?;
    let mut r = verify_drawing(&d, s)?;
    if a.geometric {
        let name = |v: usize| d.host.name(v).to_string();
        for c in detect_b_configs(&d) {
            r.violations.push(format!("B-configuration s={} s'={} b={} b'={}", name(c.s), name(c.s2), name(c.b), name(c.b2)));
        }
        for c in detect_w_configs(&d) {
            r.violations.push(format!(
                "W-configuration s={} s'={} w={},{} w'={},{}",
                name(c.s),
                name(c.s2),
                name(c.w1),
                name(c.w2),
                name(c.w1p),
                name(c.w2p)
            ));
        }
        r.pass = r.violations.is_empty();
    }
    if a.json {
        json_line(out, &r)?;
    } else {
        writeln!(out, "{}", if r.pass { "PASS" } else { "FAIL" })?;
        writeln!(out, "types {}", r.types)?;
        writeln!(out, "crossings {}", r.crossings.len())?;
        for v in &r.violations {
            writeln!(out, "  {v}")?;
        }
    }
    Ok(if r.pass { EXIT_YES } else { EXIT_NO })
}

fn cmd_classify(a: &ClassifyArgs, out: &mut dyn Write) -> Result<i32> {
    let g = read_graph(&a.input)?;
    let idx = |s: &String| g.index_of(s).ok_or_else(|| anyhow!("{s} is not a vertex"));
    let v: Vec<usize> = a.pair.iter().map(idx).collect::<Result<_>>()?;
    let t = classify_crossing(&g, (v[0], v[1]), (v[2], v[3]))?;
    if a.json {
        #[derive(Serialize)]
        struct Out<'a> {
            e: [&'a str; 2],
            f: [&'a str; 2],
            #[serde(rename = "type")]
            kind: String,
        }
        let p = &a.pair;
        json_line(out, &Out { e: [&p[0], &p[1]], f: [&p[2], &p[3]], kind: t.to_string() })?;
    } else {
        writeln!(out, "{t}")?;
    }
    Ok(EXIT_YES)
}

fn cmd_decompose(a: &DecomposeArgs, out: &mut dyn Write) -> Result<i32> {
    let g = read_graph(&a.input)?;
    let bc = bc_tree(&g)?;
    let dir = Path::new(&a.out);
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let file = |name: String| dir.join(name).to_string_lossy().into_owned();
    let names = |vs: &[usize]| vs.iter().map(|&v| g.name(v)).collect::<Vec<_>>().join(" ");

    let mut text = String::from("# blocks, cutvertices, and block-cutvertex links\n");
    for (b, vs) in bc.block_vertices.iter().enumerate() {
        text += &format!("block {b} {}\n", names(vs));
    }
    for &c in &bc.cutvertices {
        text += &format!("cut {}\n", g.name(c));
    }
    for &(b, c) in &bc.links {
        text += &format!("link {b} {}\n", g.name(bc.cutvertices[c]));
    }
    write_text(&file("bc.txt".into()), &text)?;
    writeln!(out, "blocks {}", bc.blocks.len())?;
    writeln!(out, "cutvertices {}", bc.cutvertices.len())?;

    for (b, edges) in bc.blocks.iter().enumerate() {
        if bc.block_vertices[b].len() < 3 {
            writeln!(out, "block {b}: bridge {}", names(&bc.block_vertices[b]))?;
            continue;
        }
        let (h, _) = g.edge_subgraph(edges);
        let t = spr_tree(&h)?;
        let mut text = String::from("# nodes, then tree edges with their separation pairs\n");
        for (k, node) in t.nodes.iter().enumerate() {
            let vs = node.vertices.iter().map(|&v| h.name(v)).collect::<Vec<_>>().join(" ");
            text += &format!("node {k} {:?} {vs}\n", node.kind);
        }
        for e in &t.tree_edges {
            text += &format!("tree-edge {} {} {} {}\n", e.a, e.b, h.name(e.pair.0), h.name(e.pair.1));
        }
        write_text(&file(format!("block{b}.spr.txt")), &text)?;
        for k in 0..t.nodes.len() {
            let sk = skeleton_plus(&t, k, &h);
            write_text(&file(format!("block{b}.node{k}.el")), &write_edge_list(&sk.graph))?;
            let tags: String = sk
                .provenance
                .iter()
                .map(|&((u, v), tag)| format!("{} {}\t{}\n", sk.graph.name(u), sk.graph.name(v), tag.as_str()))
                .collect();
            write_text(&file(format!("block{b}.node{k}.tags")), &tags)?;
        }
        let count = |k| t.nodes.iter().filter(|n| n.kind == k).count();
        use xing_decomp::NodeKind::*;
        writeln!(out, "block {b}: {} vertices, S {}, P {}, R {}", h.n(), count(S), count(P), count(R))?;
    }
    Ok(EXIT_YES)
}

#[derive(Serialize)]
struct PathJson {
    width: usize,
    bags: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct Certificate {
    sizes: Vec<u64>,
    bound: u64,
    m: usize,
    variant: String,
    bundle_width: usize,
    parity_waiver: bool,
    partition: Option<Vec<[usize; 3]>>,
    drawing_verifies: Option<bool>,
    drawing: Option<DrawingJson>,
    path_decomposition: PathJson,
}

fn cmd_gen_hard(a: &GenHardArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let i = ThreePartitionInstance::new(a.sizes.clone(), a.bound)?;
    let variant = match a.variant {
        VariantArg::Arrow => HardVariant::Arrow,
        VariantArg::Chair => HardVariant::Chair,
        VariantArg::X => HardVariant::X,
    };
    let opts = BuildOptions { bundle_width: a.bundle_width, parity_waiver: a.parity_waiver };
    let h = build_hard_instance(&i, variant, opts)?;
    let pd = instance_path_decomposition(&h);
    let width = validate_path_decomposition(&h.graph, &pd).map_err(|v| anyhow!("path decomposition: {v}"))?;
    write_text(&a.out, &write_edge_list(&h.graph))?;
    if let Some(p) = &a.roles {
        write_text(p, &h.roles_tsv())?;
    }
    let c = h.counts();
    writeln!(out, "variant {variant}")?;
    writeln!(out, "m {} B {}", i.m, i.bound)?;
    writeln!(out, "vertices {} edges {}", c.vertices, c.edges)?;
    writeln!(out, "fences {}", c.fences)?;
    writeln!(out, "rims {} {}", c.transmitter_rim, c.collector_rim)?;
    writeln!(out, "pathwidth at most {width}")?;
    if let Some(p) = &a.certificate {
        let partition = if i.m <= PARTITION_GUARD {
            solve_3partition(&i)?
        } else {
            writeln!(err, "note: m = {} exceeds {PARTITION_GUARD}; partition search skipped", i.m)?;
            None
        };
        let drawing = partition.as_ref().map(|q| build_witness_drawing(&h, q)).transpose()?;
        let verifies = drawing
            .as_ref()
            .map(|d| verify_drawing(d, TypeSet::single(variant.crossing_type())).map(|r| r.pass))
            .transpose()?;
        match (&partition, verifies) {
            (Some(q), Some(ok)) => {
                writeln!(out, "partition {q:?}")?;
                writeln!(out, "witness drawing {}", if ok { "verifies" } else { "does not verify" })?;
            }
            _ => writeln!(out, "partition none")?,
        }
        let cert = Certificate {
            sizes: i.sizes.clone(),
            bound: i.bound,
            m: i.m,
            variant: variant.to_string(),
            bundle_width: a.bundle_width,
            parity_waiver: a.parity_waiver,
            partition,
            drawing_verifies: verifies,
            drawing: drawing.map(|d| d.to_json()),
            path_decomposition: PathJson { width, bags: pd.named_bags(&h.graph) },
        };
        write_text(p, &(serde_json::to_string(&cert)? + "\n"))?;
    }
    Ok(EXIT_YES)
}

fn cmd_draw(a: &DrawArgs) -> Result<i32> {
    let d = read_drawing(&a.drawing)?;
    write_text(&a.out, &render_svg(&d))?;
    Ok(EXIT_YES)
}
