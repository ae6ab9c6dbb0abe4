use deptypes_core::dag::{Dag, Edge, EdgeRank, Node, NodeId};

pub fn leaf(id: NodeId, b: u32, word: &str, pos: &str) -> Node {
    Node {
        id,
        begin: b,
        end: b + 1,
        word: Some(word.to_string()),
        pos: Some(pos.to_string()),
        cat: None,
        index: None,
    }
}

pub fn phrase(id: NodeId, b: u32, e: u32, cat: &str) -> Node {
    Node {
        id,
        begin: b,
        end: e,
        word: None,
        pos: None,
        cat: Some(cat.to_string()),
        index: None,
    }
}

pub fn phantom(id: NodeId, b: u32, ix: u32) -> Node {
    Node {
        id,
        begin: b,
        end: b + 1,
        word: None,
        pos: None,
        cat: None,
        index: Some(ix),
    }
}

pub fn edge(p: NodeId, c: NodeId, dep: &str) -> Edge {
    Edge {
        parent: p,
        child: c,
        dep: dep.to_string(),
        rank: EdgeRank::Primary,
    }
}

pub fn build(nodes: Vec<Node>, edges: Vec<Edge>) -> Dag {
    let mut d = Dag {
        id: "t".to_string(),
        nodes: nodes.into_iter().map(|n| (n.id, n)).collect(),
        edges,
        root: 0,
        sentence: Vec::new(),
    };
    d.normalize();
    d
}

/// het schilderij wordt verstopt, with the object phantom.
pub fn passive() -> Dag {
    let mut np = phrase(1, 0, 2, "np");
    np.index = Some(1);
    build(
        vec![
            phrase(0, 0, 4, "smain"),
            np,
            leaf(2, 0, "het", "lid"),
            leaf(3, 1, "schilderij", "n"),
            leaf(4, 2, "wordt", "ww"),
            phrase(5, 3, 4, "ppart"),
            phantom(6, 3, 1),
            leaf(7, 3, "verstopt", "ww"),
        ],
        vec![
            edge(0, 1, "su"),
            edge(1, 2, "det"),
            edge(1, 3, "hd"),
            edge(0, 4, "hd"),
            edge(0, 5, "vc"),
            edge(5, 6, "obj1"),
            edge(5, 7, "hd"),
        ],
    )
}
