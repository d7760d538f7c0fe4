//! Small stock graphs used in documentation, tests, and the CLI examples.

use super::*;

/// One vertex, `n` tails, no edges.
pub fn corolla(n: usize) -> CombinatorialGraph {
    let flags: Vec<FlagId> = (0..n).map(|i| FlagId(format!("t{i}"))).collect();
    CombinatorialGraph::new(
        flags.clone(),
        ["v"].map(VertexId::from),
        flags.iter().map(|f| (f.clone(), VertexId::from("v"))),
        flags.iter().map(|f| (f.clone(), f.clone())),
    )
}

/// One vertex with a single loop.
pub fn loop_graph() -> CombinatorialGraph {
    CombinatorialGraph::new(
        ["f0", "f1"].map(FlagId::from),
        ["v"].map(VertexId::from),
        [("f0".into(), "v".into()), ("f1".into(), "v".into())],
        [("f0".into(), "f1".into()), ("f1".into(), "f0".into())],
    )
}

/// Two vertices joined by one edge, no tails.
pub fn edge_graph() -> CombinatorialGraph {
    CombinatorialGraph::new(
        ["e0", "e1"].map(FlagId::from),
        ["u", "w"].map(VertexId::from),
        [("e0".into(), "u".into()), ("e1".into(), "w".into())],
        [("e0".into(), "e1".into()), ("e1".into(), "e0".into())],
    )
}

/// Two vertices joined by three parallel edges.
pub fn theta() -> CombinatorialGraph {
    let flags: Vec<FlagId> = ["a0", "a1", "a2", "b0", "b1", "b2"]
        .map(FlagId::from)
        .to_vec();
    CombinatorialGraph::new(
        flags,
        ["u", "w"].map(VertexId::from),
        [
            ("a0".into(), "u".into()),
            ("a1".into(), "u".into()),
            ("a2".into(), "u".into()),
            ("b0".into(), "w".into()),
            ("b1".into(), "w".into()),
            ("b2".into(), "w".into()),
        ],
        [
            ("a0".into(), "b0".into()),
            ("b0".into(), "a0".into()),
            ("a1".into(), "b1".into()),
            ("b1".into(), "a1".into()),
            ("a2".into(), "b2".into()),
            ("b2".into(), "a2".into()),
        ],
    )
}

/// Two loops joined by one edge (a loop at each endpoint).
pub fn dumbbell() -> CombinatorialGraph {
    CombinatorialGraph::new(
        ["l0", "l1", "m0", "m1", "c0", "c1"].map(FlagId::from),
        ["u", "w"].map(VertexId::from),
        [
            ("l0".into(), "u".into()),
            ("l1".into(), "u".into()),
            ("c0".into(), "u".into()),
            ("m0".into(), "w".into()),
            ("m1".into(), "w".into()),
            ("c1".into(), "w".into()),
        ],
        [
            ("l0".into(), "l1".into()),
            ("l1".into(), "l0".into()),
            ("m0".into(), "m1".into()),
            ("m1".into(), "m0".into()),
            ("c0".into(), "c1".into()),
            ("c1".into(), "c0".into()),
        ],
    )
}

/// Two vertices with two parallel edges ("banana").
pub fn banana() -> CombinatorialGraph {
    CombinatorialGraph::new(
        ["a0", "a1", "b0", "b1"].map(FlagId::from),
        ["u", "w"].map(VertexId::from),
        [
            ("a0".into(), "u".into()),
            ("a1".into(), "u".into()),
            ("b0".into(), "w".into()),
            ("b1".into(), "w".into()),
        ],
        [
            ("a0".into(), "b0".into()),
            ("b0".into(), "a0".into()),
            ("a1".into(), "b1".into()),
            ("b1".into(), "a1".into()),
        ],
    )
}

fn orient(dg: &mut DecoratedGraph, f: &str, o: Orient) {
    dg.decoration
        .flag_labels
        .insert(FlagId::from(f), FlagLabel::oriented(o));
}

/// `u → w`: one edge, no tails, oriented out of `u` into `w`.
pub fn directed_chain_bare() -> DecoratedGraph {
    let mut dg = DecoratedGraph::bare(edge_graph());
    orient(&mut dg, "e0", Orient::Out);
    orient(&mut dg, "e1", Orient::In);
    dg
}

/// `u → w` with a global input tail at `u` and a global output tail at
/// `w`; four flags in total.
pub fn directed_chain_io() -> DecoratedGraph {
    let g = CombinatorialGraph::new(
        ["tin", "e0", "e1", "tout"].map(FlagId::from),
        ["u", "w"].map(VertexId::from),
        [
            ("tin".into(), "u".into()),
            ("e0".into(), "u".into()),
            ("e1".into(), "w".into()),
            ("tout".into(), "w".into()),
        ],
        [
            ("tin".into(), "tin".into()),
            ("e0".into(), "e1".into()),
            ("e1".into(), "e0".into()),
            ("tout".into(), "tout".into()),
        ],
    );
    let mut dg = DecoratedGraph::bare(g);
    orient(&mut dg, "tin", Orient::In);
    orient(&mut dg, "e0", Orient::Out);
    orient(&mut dg, "e1", Orient::In);
    orient(&mut dg, "tout", Orient::Out);
    dg
}

/// Directed path `u → v → w`, no tails.
pub fn directed_path3() -> DecoratedGraph {
    let g = CombinatorialGraph::new(
        ["a0", "a1", "b0", "b1"].map(FlagId::from),
        ["u", "v", "w"].map(VertexId::from),
        [
            ("a0".into(), "u".into()),
            ("a1".into(), "v".into()),
            ("b0".into(), "v".into()),
            ("b1".into(), "w".into()),
        ],
        [
            ("a0".into(), "a1".into()),
            ("a1".into(), "a0".into()),
            ("b0".into(), "b1".into()),
            ("b1".into(), "b0".into()),
        ],
    );
    let mut dg = DecoratedGraph::bare(g);
    orient(&mut dg, "a0", Orient::Out);
    orient(&mut dg, "a1", Orient::In);
    orient(&mut dg, "b0", Orient::Out);
    orient(&mut dg, "b1", Orient::In);
    dg
}

/// Path on three vertices with both edges oriented into the middle:
/// `u → v ← w`.
pub fn path3_to_middle() -> DecoratedGraph {
    let mut dg = directed_path3();
    // flip the second edge: originally v → w
    orient(&mut dg, "b0", Orient::In);
    orient(&mut dg, "b1", Orient::Out);
    dg
}

/// Single vertex whose loop is coherently oriented.
pub fn oriented_loop() -> DecoratedGraph {
    let mut dg = DecoratedGraph::bare(loop_graph());
    orient(&mut dg, "f0", Orient::Out);
    orient(&mut dg, "f1", Orient::In);
    dg
}

/// Two vertices with two parallel edges oriented as a directed 2-cycle.
pub fn oriented_two_cycle() -> DecoratedGraph {
    let mut dg = DecoratedGraph::bare(banana());
    orient(&mut dg, "a0", Orient::Out);
    orient(&mut dg, "b0", Orient::In);
    orient(&mut dg, "b1", Orient::Out);
    orient(&mut dg, "a1", Orient::In);
    dg
}

/// One-vertex corolla with `n` input tails, all oriented `In`, plus one
/// `Out` tail.
pub fn oriented_corolla(n_inputs: usize) -> DecoratedGraph {
    let g = corolla(n_inputs + 1);
    let mut dg = DecoratedGraph::bare(g);
    for i in 0..n_inputs {
        orient(&mut dg, &format!("t{i}"), Orient::In);
    }
    orient(&mut dg, &format!("t{n_inputs}"), Orient::Out);
    dg
}
