use std::path::Path;

use distlat::bipartite::BipartiteGraph;
use distlat::{Error, MonomialIdeal, Poset, Result, SimplicialComplex};

/// Parsed input file; the kind is detected from the top-level JSON keys.
pub enum Input {
    Poset(Poset),
    Ideal(MonomialIdeal),
    Complex(SimplicialComplex),
    Graph(BipartiteGraph),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Poset(_) => "poset",
            Input::Ideal(_) => "ideal",
            Input::Complex(_) => "complex",
            Input::Graph(_) => "graph",
        }
    }
}

pub fn read(path: &Path) -> Result<Input> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    }
    .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    parse(&text)
}

pub fn parse(text: &str) -> Result<Input> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed JSON: {e}")))?;
    let has = |k: &str| value.get(k).is_some();
    if has("elements") {
        Poset::from_json(text).map(Input::Poset)
    } else if has("generators") && has("variables") {
        MonomialIdeal::from_json(text).map(Input::Ideal)
    } else if has("facets") && has("vertices") {
        SimplicialComplex::from_json(text).map(Input::Complex)
    } else if has("left") && has("right") {
        BipartiteGraph::from_json(text).map(Input::Graph)
    } else {
        Err(Error::Input(
            "unrecognized input: expected a poset (\"elements\"), ideal (\"variables\", \"generators\"), \
             complex (\"vertices\", \"facets\") or graph (\"left\", \"right\")"
                .into(),
        ))
    }
}
