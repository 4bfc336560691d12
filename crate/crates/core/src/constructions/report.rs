use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::cube::CubeSubgraph;

pub type Rational = Ratio<i128>;

/// `p/q`, or `p` for integers.
pub fn rational_string(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn ser_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(r))
}

pub(crate) fn ser_opt_rational<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_some(&rational_string(r)),
        None => s.serialize_none(),
    }
}

pub(crate) fn pow2(e: u32) -> Rational {
    Rational::from_integer(1i128 << e)
}

/// How the base graph was spread over `Q_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum LiftKind {
    /// The base graph is already in `Q_n`.
    None,
    /// Identical copies in every subcube, no edges between them.
    Copies,
    /// Copies of `h` and of `a(h)` alternating by the parity of the subcube.
    Automorphism { map: String, certified: bool },
}

/// A constructed graph tied to the numbers it is meant to meet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub tree: String,
    pub method: String,
    pub n: u32,
    pub base_dim: u32,
    /// Edges of the graph in `Q_n`.
    pub edges: u64,
    /// Closed-form edge count claimed for the construction at `n`.
    #[serde(serialize_with = "ser_opt_rational")]
    pub formula: Option<Rational>,
    /// Upper bound the construction is meant to witness at `n`.
    #[serde(serialize_with = "ser_opt_rational")]
    pub bound: Option<Rational>,
    pub formula_matches: Option<bool>,
    pub within_bound: Option<bool>,
    pub hypotheses_met: bool,
    pub lift: LiftKind,
    /// Result of an exhaustive saturation check, when one was run.
    pub verified: Option<bool>,
    pub notes: Vec<String>,
}

impl BoundReport {
    pub(crate) fn new(tree: String, method: &str, n: u32, base_dim: u32, graph: &CubeSubgraph) -> Self {
        BoundReport {
            tree,
            method: method.to_string(),
            n,
            base_dim,
            edges: graph.edge_count(),
            formula: None,
            bound: None,
            formula_matches: None,
            within_bound: None,
            hypotheses_met: true,
            lift: LiftKind::None,
            verified: None,
            notes: Vec::new(),
        }
    }

    pub(crate) fn with_formula(mut self, formula: Rational) -> Self {
        let edges = Rational::from_integer(self.edges as i128);
        self.formula_matches = Some(formula == edges);
        if formula != edges {
            self.notes.push(format!(
                "closed-form count {} differs from the actual count {}",
                rational_string(&formula),
                self.edges
            ));
        }
        self.formula = Some(formula);
        self
    }

    pub(crate) fn with_bound(mut self, bound: Rational) -> Self {
        let edges = Rational::from_integer(self.edges as i128);
        self.within_bound = Some(edges <= bound);
        if edges > bound {
            self.notes.push(format!(
                "{} edges exceed the bound {}",
                self.edges,
                rational_string(&bound)
            ));
        }
        self.bound = Some(bound);
        self
    }

    pub(crate) fn note(mut self, text: impl Into<String>) -> Self {
        self.notes.push(text.into());
        self
    }
}

/// A subgraph of `Q_n` with its base graph and report.
#[derive(Clone, Debug)]
pub struct Construction {
    /// The graph in the base cube, before lifting.
    pub base: CubeSubgraph,
    pub graph: CubeSubgraph,
    pub report: BoundReport,
}
