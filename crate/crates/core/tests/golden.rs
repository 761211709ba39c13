//! DOT output of the small fixture groups against stored golden files.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::Command;

use divgraph::divgraph::division_graph;
use divgraph::io::load_group_file;
use divgraph::Limits;

const FIXTURES: [&str; 7] = ["z2", "z3", "z5", "z4", "klein4", "s3", "q8"];

fn dir(sub: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join(sub)
}

/// Structure of a DOT file: nodes with attributes, edges with labels, and
/// the cluster each statement sits in.
#[derive(Debug, Default, PartialEq)]
struct Shape {
    nodes: BTreeMap<String, (String, String)>,
    edges: BTreeMap<(String, String), String>,
    clusters: BTreeMap<String, String>,
}

fn quoted(s: &str) -> Vec<String> {
    s.split('"').skip(1).step_by(2).map(String::from).collect()
}

fn shape(dot: &str) -> Shape {
    let mut s = Shape::default();
    let mut stack: Vec<String> = Vec::new();
    for line in dot.lines().map(str::trim) {
        if line.starts_with("subgraph ") {
            stack.push(quoted(line)[0].clone());
        } else if line == "}" {
            stack.pop();
        } else if line.starts_with("label=") && !stack.is_empty() {
            s.clusters.insert(stack.last().unwrap().clone(), quoted(line)[0].clone());
        } else if line.contains(" -> ") {
            let q = quoted(line);
            assert_eq!(q.len(), 3, "edge line {line}");
            let prev = s.edges.insert((q[0].clone(), q[1].clone()), q[2].clone());
            assert!(prev.is_none(), "duplicate edge {line}");
        } else if line.starts_with("\"d") {
            let q = quoted(line);
            let parent = stack.last().cloned().unwrap_or_default();
            s.nodes.insert(q[0].clone(), (q[1].clone(), parent));
        }
    }
    s
}

#[test]
fn cli_dot_matches_golden() {
    for f in FIXTURES {
        let out = Command::new(env!("CARGO_BIN_EXE_divgraph"))
            .args(["division-graph", "--format", "dot", "--input"])
            .arg(dir("fixtures").join(format!("{f}.json")))
            .output()
            .unwrap();
        assert!(out.status.success(), "{f}: {}", String::from_utf8_lossy(&out.stderr));
        let got = String::from_utf8(out.stdout).unwrap();
        let want = std::fs::read_to_string(dir("golden").join(format!("{f}.dot"))).unwrap();
        assert_eq!(shape(&got), shape(&want), "{f}: structure differs from golden");
        assert_eq!(got, want, "{f}: text differs from golden");
    }
}

#[test]
fn golden_files_are_consistent() {
    let l = Limits::default();
    for f in FIXTURES {
        let g = load_group_file(&dir("fixtures").join(format!("{f}.json")), &l).unwrap();
        let dg = division_graph(&g, &l).unwrap();
        let s = shape(&std::fs::read_to_string(dir("golden").join(format!("{f}.dot"))).unwrap());
        assert_eq!(s.nodes.len(), dg.components.iter().map(|c| c.vertex_count()).sum::<usize>(), "{f}");
        assert_eq!(s.edges.len(), dg.components.iter().map(|c| c.arcs.len()).sum::<usize>(), "{f}");
        // Each vertex sits in its own color cluster, and orbit lengths per
        // color sum to the index of that subgroup.
        let mut sums: BTreeMap<String, usize> = BTreeMap::new();
        for (name, (label, parent)) in &s.nodes {
            let (prefix, _) = name.rsplit_once('/').unwrap();
            assert_eq!(parent.replace("cluster_", "").replace('_', "/"), prefix, "{f}: {name}");
            *sums.entry(prefix.to_string()).or_default() += label.parse::<usize>().unwrap();
        }
        let lat = divgraph::all_subgroups(&g, &l).unwrap();
        for (prefix, total) in sums {
            let h: usize = prefix.rsplit_once("/H").unwrap().1.parse().unwrap();
            assert_eq!(total, g.order() / lat.subgroup(h).order(), "{f}: {prefix}");
        }
        // Every edge label is the ratio of its endpoint orbit lengths.
        for ((from, to), label) in &s.edges {
            let lo: usize = s.nodes[from].0.parse().unwrap();
            let hi: usize = s.nodes[to].0.parse().unwrap();
            assert_eq!(hi % lo, 0, "{f}: {from} -> {to}");
            assert_eq!(label.parse::<usize>().unwrap(), hi / lo, "{f}: {from} -> {to}");
        }
        assert_eq!(s.clusters.values().filter(|v| v.starts_with('[')).count(), dg.components.len(), "{f}");
    }
}
