//! Hand-built example graphs shared by unit tests, integration tests, and
//! benchmarks.

use crate::graph::{AttrMap, AttrValue, EdgeRecord, Multigraph, NodeRecord};

/// Build a plain graph from endpoint pairs; nodes are created on first use.
/// Repeated pairs become parallel edges.
pub fn graph_from_edges(pairs: &[(&str, &str)]) -> Multigraph {
    let mut seen = std::collections::BTreeSet::new();
    for &(a, b) in pairs {
        seen.insert(a);
        seen.insert(b);
    }
    let nodes = seen.into_iter().map(NodeRecord::new).collect();
    let edges = pairs.iter().map(|&(a, b)| EdgeRecord::new(a, b)).collect();
    Multigraph::build(nodes, edges).expect("valid fixture")
}

/// Triangle on nodes a, b, c.
pub fn triangle() -> Multigraph {
    graph_from_edges(&[("a", "b"), ("b", "c"), ("c", "a")])
}

/// Star with one hub and `leaves` spokes.
pub fn star(leaves: usize) -> Multigraph {
    let names: Vec<String> = (0..leaves).map(|i| format!("s{i}")).collect();
    let pairs: Vec<(&str, &str)> = names.iter().map(|n| ("hub", n.as_str())).collect();
    graph_from_edges(&pairs)
}

/// Path p0 - p1 - ... - p{n-1}.
pub fn path(n: usize) -> Multigraph {
    let names: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    let pairs: Vec<(&str, &str)> = names
        .windows(2)
        .map(|w| (w[0].as_str(), w[1].as_str()))
        .collect();
    if pairs.is_empty() {
        let nodes = names.iter().map(|n| NodeRecord::new(n.as_str())).collect();
        return Multigraph::build(nodes, Vec::new()).expect("valid fixture");
    }
    graph_from_edges(&pairs)
}

/// Complete graph on `n` nodes named `{prefix}0..{prefix}{n-1}`.
pub fn clique(prefix: &str, n: usize) -> Multigraph {
    let names: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            pairs.push((names[i].as_str(), names[j].as_str()));
        }
    }
    graph_from_edges(&pairs)
}

/// Several node-disjoint cliques in one graph; returns the graph and the
/// member names of each clique.
pub fn disjoint_cliques(sizes: &[usize]) -> (Multigraph, Vec<Vec<String>>) {
    let mut pairs: Vec<(String, String)> = Vec::new();
    let mut groups = Vec::new();
    for (gi, &size) in sizes.iter().enumerate() {
        let names: Vec<String> = (0..size).map(|i| format!("c{gi}_{i}")).collect();
        for i in 0..size {
            for j in (i + 1)..size {
                pairs.push((names[i].clone(), names[j].clone()));
            }
        }
        groups.push(names);
    }
    let borrowed: Vec<(&str, &str)> = pairs
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    let mut g = graph_from_edges(&borrowed);
    if borrowed.is_empty() {
        g = Multigraph::empty();
    }
    (g, groups)
}

/// Two 4-cliques joined by a single bridge edge.
pub fn barbell() -> Multigraph {
    graph_from_edges(&[
        ("l0", "l1"),
        ("l0", "l2"),
        ("l0", "l3"),
        ("l1", "l2"),
        ("l1", "l3"),
        ("l2", "l3"),
        ("r0", "r1"),
        ("r0", "r2"),
        ("r0", "r3"),
        ("r1", "r2"),
        ("r1", "r3"),
        ("r2", "r3"),
        ("l3", "r0"),
    ])
}

/// Two disjoint triangles plus a disjoint 3-leaf star.
pub fn two_triangles_and_star() -> Multigraph {
    graph_from_edges(&[
        ("t1a", "t1b"),
        ("t1b", "t1c"),
        ("t1c", "t1a"),
        ("t2a", "t2b"),
        ("t2b", "t2c"),
        ("t2c", "t2a"),
        ("sh", "sx"),
        ("sh", "sy"),
        ("sh", "sz"),
    ])
}

/// Hub motif: node A with five parallel transactions to B and single
/// transactions to C and D.
pub fn hub_motif() -> Multigraph {
    graph_from_edges(&[
        ("A", "B"),
        ("A", "B"),
        ("A", "B"),
        ("A", "B"),
        ("A", "B"),
        ("A", "C"),
        ("A", "D"),
    ])
}

/// Hub motif embedded in context: the group {A, B, C, D} plus two 4-clique
/// neighborhoods, one hanging off A and one off B.
pub fn hub_with_context() -> Multigraph {
    graph_from_edges(&[
        ("A", "B"),
        ("A", "B"),
        ("A", "B"),
        ("A", "B"),
        ("A", "B"),
        ("A", "C"),
        ("A", "D"),
        // square neighborhood on A
        ("A", "e"),
        ("e", "f"),
        ("e", "g"),
        ("e", "h"),
        ("f", "g"),
        ("f", "h"),
        ("g", "h"),
        // square neighborhood on B
        ("B", "i"),
        ("B", "k"),
        ("i", "j"),
        ("i", "k"),
        ("i", "l"),
        ("j", "k"),
        ("j", "l"),
        ("k", "l"),
    ])
}

fn member_attrs(kind: &str) -> AttrMap {
    let mut attrs = AttrMap::new();
    attrs.insert("kind".to_owned(), AttrValue::from(kind));
    attrs
}

fn edge_attrs(etype: &str) -> AttrMap {
    let mut attrs = AttrMap::new();
    attrs.insert("etype".to_owned(), AttrValue::from(etype));
    attrs
}

/// The node sets of the three related groups inside
/// [`transaction_network`]: the known sample group plus its two peers.
pub fn transaction_network_groups() -> Vec<Vec<&'static str>> {
    vec![
        vec!["A", "B", "C", "D"],
        vec!["E", "F", "G", "H", "I"],
        vec!["J", "K", "L", "M"],
    ]
}

/// A 31-node transaction network used throughout the tests.
///
/// Three related groups (`A..D`, `E..I`, `J..M`, node attribute
/// `kind = "member"`) are embedded in background clutter (`w01..w14`,
/// `kind = "background"`). A fourth group (`x1..x4`, `kind = "decoy"`)
/// copies the topology of a member group but not its attributes. The groups
/// `A..D` and `E..I` touch through two parallel edges between C and E, so
/// node-only pruning cannot separate them and edge pruning must remove both
/// copies. Edges inside a member group carry `etype = "internal"`, edges
/// inside the decoy group carry `etype = "decoy"`, everything else carries
/// `etype = "external"`.
pub fn transaction_network() -> Multigraph {
    let mut nodes = Vec::new();
    for id in [
        "A", "B", "C", "D", "E", "F", "G", "H", "I", "J", "K", "L", "M",
    ] {
        nodes.push(NodeRecord::with_attrs(id, member_attrs("member")));
    }
    for i in 1..=14 {
        nodes.push(NodeRecord::with_attrs(
            format!("w{i:02}"),
            member_attrs("background"),
        ));
    }
    for i in 1..=4 {
        nodes.push(NodeRecord::with_attrs(
            format!("x{i}"),
            member_attrs("decoy"),
        ));
    }

    let internal: &[(&str, &str)] = &[
        // group A..D
        ("A", "B"),
        ("B", "C"),
        ("B", "D"),
        ("C", "D"),
        ("C", "D"),
        // group E..I
        ("E", "F"),
        ("E", "G"),
        ("E", "G"),
        ("F", "I"),
        ("F", "H"),
        ("I", "H"),
        // group J..M
        ("J", "K"),
        ("J", "L"),
        ("K", "L"),
        ("L", "M"),
    ];
    let decoy: &[(&str, &str)] = &[("x1", "x4"), ("x1", "x2"), ("x2", "x4"), ("x3", "x4")];
    let external: &[(&str, &str)] = &[
        // background square attached to A
        ("w01", "A"),
        ("w01", "w02"),
        ("w01", "w03"),
        ("A", "w02"),
        ("A", "w03"),
        ("w02", "w03"),
        // the parallel bridge between the two member groups
        ("C", "E"),
        ("C", "E"),
        // background block between the green groups
        ("G", "w04"),
        ("H", "w05"),
        ("H", "w05"),
        ("H", "w05"),
        ("w04", "w05"),
        ("w04", "w06"),
        ("w04", "J"),
        ("w05", "w06"),
        ("w05", "J"),
        ("w06", "J"),
        // background fan around w09
        ("K", "w09"),
        ("w07", "w09"),
        ("w08", "w09"),
        ("x1", "w09"),
        ("w09", "w10"),
        ("w04", "w09"),
        // western background and the decoy group's surroundings
        ("w02", "w13"),
        ("x2", "w12"),
        ("w11", "w12"),
        ("w12", "w13"),
        ("w12", "w14"),
    ];

    let mut edges = Vec::new();
    for &(a, b) in internal {
        edges.push(EdgeRecord::with_attrs(a, b, edge_attrs("internal")));
    }
    for &(a, b) in decoy {
        edges.push(EdgeRecord::with_attrs(a, b, edge_attrs("decoy")));
    }
    for &(a, b) in external {
        edges.push(EdgeRecord::with_attrs(a, b, edge_attrs("external")));
    }
    Multigraph::build(nodes, edges).expect("valid fixture")
}
