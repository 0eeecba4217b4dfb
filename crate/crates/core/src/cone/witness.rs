//! Initial witness families for `C_n` and `C_n^h`.
//!
//! The builders follow the inductive constructions, then re-check every
//! claim (vertex count, height, initiality, rank) on actual Hochster
//! diagrams. A failed check is an implementation bug and surfaces as
//! [`Error::Verification`].

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use super::{diagram_rank, formula_dim, index_set, is_initial, upper_bound, ConeReport, DiagramOracle, IndexPair, Method};
use crate::betti::BettiDiagram;
use crate::error::{Error, Result};
use crate::graph::{self, Graph};

/// A graph described as an expression over the named families.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Recipe {
    Complete(usize),
    Empty(usize),
    Cycle(usize),
    Edge,
    Union(Box<Recipe>, Box<Recipe>),
    Complement(Box<Recipe>),
}

impl Recipe {
    pub fn union(self, other: Recipe) -> Recipe {
        Recipe::Union(Box::new(self), Box::new(other))
    }

    pub fn complement(self) -> Recipe {
        Recipe::Complement(Box::new(self))
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            Recipe::Complete(m) => graph::complete(*m),
            Recipe::Empty(m) => graph::empty(*m),
            Recipe::Cycle(m) => graph::cycle(*m),
            Recipe::Edge => graph::single_edge(),
            Recipe::Union(a, b) => a.build()?.disjoint_union(&b.build()?),
            Recipe::Complement(a) => Ok(a.build()?.complement()),
        }
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Complete(m) => write!(f, "K_{m}"),
            Recipe::Empty(m) => write!(f, "E_{m}"),
            Recipe::Cycle(m) => write!(f, "C_{m}"),
            Recipe::Edge => f.write_str("L"),
            Recipe::Union(a, b) => write!(f, "{a}+{b}"),
            Recipe::Complement(a) => match **a {
                Recipe::Union(..) => write!(f, "({a})^c"),
                _ => write!(f, "{a}^c"),
            },
        }
    }
}

/// One verified witness: a graph whose diagram is initial at `position`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub position: IndexPair,
    pub recipe: Recipe,
    pub graph: Graph,
    pub diagram: BettiDiagram,
}

/// `K_d` on row 1, `G_{i-1,d-2} + L` elsewhere.
pub fn cn_recipe(p: IndexPair) -> Result<Recipe> {
    if p.d < p.i + 2 {
        return Err(Error::invalid(alloc::format!("{p} lies below row 1")));
    }
    if p.d == p.i + 2 {
        return Ok(Recipe::Complete(p.d));
    }
    let from = p.unshifted().ok_or_else(|| Error::invalid(alloc::format!("{p} has no predecessor")))?;
    Ok(cn_recipe(from)?.union(Recipe::Edge))
}

/// Height-`h` witness recipe for `p`:
///
/// - row 1 with `d > h`: `(E_h + K_{d-h})^c`
/// - row 2 with `i < h`: `(C_d + E_{h+2-d})^c`
/// - otherwise: the height `h - 1` witness at `(i - 1, d - 2)`, plus `L`.
pub fn cnh_recipe(p: IndexPair, h: usize) -> Result<Recipe> {
    let bad = |why: &str| Error::Verification(alloc::format!("no height-{h} recipe for {p}: {why}"));
    if p.d < p.i + 2 {
        return Err(bad("below row 1"));
    }
    match p.d - p.i {
        2 => {
            if p.d <= h {
                return Err(bad("excluded row-1 prefix"));
            }
            Ok(Recipe::Empty(h).union(Recipe::Complete(p.d - h)).complement())
        }
        3 if p.i < h => {
            if p.d > h + 2 {
                return Err(bad("cycle recipe needs d <= h + 2"));
            }
            let base = Recipe::Cycle(p.d);
            let pad = h + 2 - p.d;
            Ok(if pad == 0 { base } else { base.union(Recipe::Empty(pad)) }.complement())
        }
        _ => {
            if h < 2 {
                return Err(bad("suspension step needs h >= 2"));
            }
            let from = p.unshifted().ok_or_else(|| bad("no predecessor"))?;
            Ok(cnh_recipe(from, h - 1)?.union(Recipe::Edge))
        }
    }
}

fn realise(position: IndexPair, recipe: Recipe, oracle: &mut impl DiagramOracle) -> Result<Witness> {
    let graph = recipe.build()?;
    let diagram = oracle.diagram(&graph)?;
    Ok(Witness {
        position,
        recipe,
        graph,
        diagram,
    })
}

/// One `≺`-initial graph for every position of `S_n`, verified.
pub fn witnesses_cn(n: usize, oracle: &mut impl DiagramOracle) -> Result<ConeReport> {
    let set = index_set(n, None)?;
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    let mut witnesses = Vec::with_capacity(set.len());
    for &p in set.members() {
        let w = realise(p, cn_recipe(p)?, oracle)?;
        if w.graph.n() != p.d {
            return Err(Error::Verification(alloc::format!("{} has {} vertices, expected {}", w.recipe, w.graph.n(), p.d)));
        }
        if !is_initial(&w.diagram, p, &set)? {
            return Err(Error::Verification(alloc::format!("{} is not {p}-initial: {}", w.recipe, w.diagram)));
        }
        witnesses.push(w);
    }
    let rank = diagram_rank(witnesses.iter().map(|w| &w.diagram));
    let bound = upper_bound(n, None)?;
    if rank != set.len() || rank != formula_dim(n, None)? {
        return Err(Error::Verification(alloc::format!("witness rank {rank}, expected {}", set.len())));
    }
    let mut report = ConeReport::bare(n, None, Method::Witnesses, rank);
    report.upper_bound = Some(bound);
    report.certified = rank == bound;
    report.witnesses = witnesses;
    Ok(report)
}

/// `h(n - h - 1) + 1` height-`h`, `≺_h`-initial graphs on at most `n`
/// vertices, verified.
pub fn witnesses_cnh(n: usize, h: usize, oracle: &mut impl DiagramOracle) -> Result<ConeReport> {
    let expected = formula_dim(n, Some(h))?;
    let set = index_set(n, Some(h))?;
    let positions = set.members().iter().copied().filter(|p| !(p.d == p.i + 2 && p.d <= h));
    let mut witnesses = Vec::with_capacity(expected);
    for p in positions {
        let w = realise(p, cnh_recipe(p, h)?, oracle)?;
        let vertex_cap = p.d.max(h + p.d - p.i - 1);
        if w.graph.n() > vertex_cap || vertex_cap > n {
            return Err(Error::Verification(alloc::format!(
                "{} has {} vertices, cap {vertex_cap}, n = {n}",
                w.recipe,
                w.graph.n()
            )));
        }
        let height = w.graph.height();
        if height != h {
            return Err(Error::Verification(alloc::format!("{} has height {height}, expected {h}", w.recipe)));
        }
        if !is_initial(&w.diagram, p, &set)? {
            return Err(Error::Verification(alloc::format!("{} is not {p}-initial under the height-{h} order: {}", w.recipe, w.diagram)));
        }
        witnesses.push(w);
    }
    let rank = diagram_rank(witnesses.iter().map(|w| &w.diagram));
    if witnesses.len() != expected || rank != expected {
        return Err(Error::Verification(alloc::format!(
            "{} witnesses of rank {rank}, expected {expected}",
            witnesses.len()
        )));
    }
    let bound = upper_bound(n, Some(h))?;
    let mut report = ConeReport::bare(n, Some(h), Method::Witnesses, rank);
    report.upper_bound = Some(bound);
    report.certified = rank == bound;
    report.witnesses = witnesses;
    Ok(report)
}
