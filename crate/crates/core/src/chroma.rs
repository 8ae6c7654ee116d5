//! Conflict graphs and chromatic numbers.
//!
//! Vertices are facets, edges join facets that share a vertex of the
//! polytope, so proper facet colourings are exactly proper vertex colourings
//! of the conflict graph. [`exact_chromatic`] brackets `χ` between a clique
//! bound and a DSATUR colouring and closes the gap by a budgeted search.

use std::fmt::Write as _;
use std::hash::Hash;

use crate::colourings::Colouring;
use crate::error::{Error, Result};
use crate::system::FacetSystem;

/// Largest conflict graph we are willing to materialise.
pub const MAX_VERTICES: usize = 20_000;
/// Largest graph accepted by [`brute_chromatic`].
pub const MAX_BRUTE_VERTICES: usize = 20;
/// Node budget used when none is given.
pub const DEFAULT_BUDGET: u64 = 5_000_000;

/// Undirected simple graph with bitset adjacency rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictGraph {
    words: usize,
    rows: Vec<Vec<u64>>,
    labels: Vec<String>,
    provenance: String,
}

fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

fn set_bit(row: &mut [u64], v: usize) {
    row[v / 64] |= 1 << (v % 64);
}

fn has_bit(row: &[u64], v: usize) -> bool {
    row[v / 64] >> (v % 64) & 1 == 1
}

fn bits(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            (rest != 0).then(|| {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                w * 64 + b
            })
        })
    })
}

fn popcount(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

impl ConflictGraph {
    fn empty(n: usize, provenance: String) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::capacity("conflict graph vertices", MAX_VERTICES, n));
        }
        let words = words_for(n);
        Ok(ConflictGraph {
            words,
            rows: vec![vec![0; words]; n],
            labels: (0..n).map(|v| v.to_string()).collect(),
            provenance,
        })
    }

    /// The conflict graph of a facet system, in its canonical facet order.
    pub fn from_system<S: FacetSystem>(system: &S) -> Result<Self> {
        let count = system.facet_count()?;
        if count > MAX_VERTICES as u128 {
            return Err(Error::capacity(
                "conflict graph vertices",
                MAX_VERTICES,
                usize::try_from(count).unwrap_or(usize::MAX),
            ));
        }
        let facets = system.facets()?;
        let mut g = ConflictGraph::empty(facets.len(), system.label())?;
        g.labels = facets.iter().map(|f| f.to_string()).collect();
        for i in 0..facets.len() {
            for j in i + 1..facets.len() {
                if system.conflicts(&facets[i], &facets[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = ConflictGraph::empty(n, "graph".into())?;
        for &(u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(Error::domain(format!(
                    "bad edge ({u}, {v}) on {n} vertices"
                )));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn edgeless(n: usize) -> Result<Self> {
        Self::from_edges(n, &[])
    }

    pub fn complete(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_edges(n, &edges)
    }

    /// The cycle `C_n`, `n ≥ 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::domain("a cycle needs at least 3 vertices"));
        }
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        set_bit(&mut self.rows[u], v);
        set_bit(&mut self.rows[v], u);
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count() {
            return Err(Error::domain("one label per vertex"));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = provenance.into();
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| popcount(r)).sum::<usize>() / 2
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        has_bit(&self.rows[u], v)
    }

    pub fn degree(&self, v: usize) -> usize {
        popcount(&self.rows[v])
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(&self.rows[v])
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Where the graph came from, e.g. `"4-dimensional cyclohedron"`.
    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    /// Subgraph on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let mut g = ConflictGraph::empty(vertices.len(), self.provenance.clone())?;
        g.labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// True iff `colours` gives adjacent vertices different values.
    pub fn is_proper(&self, colours: &[u32]) -> bool {
        colours.len() == self.vertex_count()
            && (0..self.vertex_count())
                .all(|u| self.neighbours(u).all(|v| colours[u] != colours[v]))
    }

    /// Graphviz rendering; the output depends only on the graph.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph conflicts {{");
        let _ = writeln!(out, "  label=\"{}\";", escape(&self.provenance));
        for (v, label) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  {v} [label=\"{}\"];", escape(label));
        }
        for u in 0..self.vertex_count() {
            for v in self.neighbours(u).filter(|&v| v > u) {
                let _ = writeln!(out, "  {u} -- {v};");
            }
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// A clique together with whether the search proved it maximum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueResult {
    pub members: Vec<usize>,
    pub maximum: bool,
    pub nodes: u64,
}

/// Maximum clique by branch-and-bound with greedy colouring bounds.
pub fn max_clique(g: &ConflictGraph, budget: u64) -> CliqueResult {
    let n = g.vertex_count();
    let mut search = CliqueSearch {
        g,
        best: Vec::new(),
        current: Vec::new(),
        nodes: 0,
        budget,
        exhausted: false,
    };
    let mut all = vec![0u64; g.words];
    for v in 0..n {
        set_bit(&mut all, v);
    }
    search.expand(all);
    CliqueResult {
        members: search.best,
        maximum: !search.exhausted,
        nodes: search.nodes,
    }
}

/// Size of the largest clique found within [`DEFAULT_BUDGET`] nodes.
pub fn clique_lower_bound(g: &ConflictGraph) -> usize {
    max_clique(g, DEFAULT_BUDGET).members.len()
}

struct CliqueSearch<'a> {
    g: &'a ConflictGraph,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, mut candidates: Vec<u64>) {
        if self.nodes == self.budget {
            self.exhausted = true;
            return;
        }
        self.nodes += 1;
        let (order, bounds) = self.colour_sort(&candidates);
        for k in (0..order.len()).rev() {
            if self.current.len() + bounds[k] <= self.best.len() || self.exhausted {
                return;
            }
            let v = order[k];
            self.current.push(v);
            let next: Vec<u64> = candidates
                .iter()
                .zip(&self.g.rows[v])
                .map(|(a, b)| a & b)
                .collect();
            if next.iter().all(|&w| w == 0) {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            candidates[v / 64] &= !(1 << (v % 64));
        }
    }

    // Greedy colouring of the candidates; a vertex's colour number bounds the
    // clique size among itself and the vertices listed before it.
    fn colour_sort(&self, candidates: &[u64]) -> (Vec<usize>, Vec<usize>) {
        let mut uncoloured = candidates.to_vec();
        let mut order = Vec::new();
        let mut bounds = Vec::new();
        let mut colour = 0;
        while uncoloured.iter().any(|&w| w != 0) {
            colour += 1;
            let mut open = uncoloured.clone();
            loop {
                let Some(v) = bits(&open).next() else { break };
                open[v / 64] &= !(1 << (v % 64));
                for (o, r) in open.iter_mut().zip(&self.g.rows[v]) {
                    *o &= !r;
                }
                uncoloured[v / 64] &= !(1 << (v % 64));
                order.push(v);
                bounds.push(colour);
            }
        }
        (order, bounds)
    }
}

/// DSATUR greedy colouring. Picks the vertex with the most distinct
/// neighbouring colours, then the highest degree, then the lowest index,
/// and gives it the smallest free colour. Colours are 1-based.
pub fn dsatur(g: &ConflictGraph) -> Vec<u32> {
    let n = g.vertex_count();
    let mut colours = vec![0u32; n];
    let mut seen: Vec<Vec<u64>> = vec![Vec::new(); n];
    let mut saturation = vec![0usize; n];
    let degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colours[v] == 0)
            .max_by(|&a, &b| {
                (saturation[a], degree[a])
                    .cmp(&(saturation[b], degree[b]))
                    .then(b.cmp(&a))
            })
            .expect("an uncoloured vertex remains");
        let c = (1..).find(|&c| !bit_in(&seen[v], c)).unwrap_or(1);
        colours[v] = c as u32;
        for u in g.neighbours(v) {
            if colours[u] == 0 && !bit_in(&seen[u], c) {
                if seen[u].len() <= c / 64 {
                    seen[u].resize(c / 64 + 1, 0);
                }
                seen[u][c / 64] |= 1 << (c % 64);
                saturation[u] += 1;
            }
        }
    }
    colours
}

fn bit_in(set: &[u64], c: usize) -> bool {
    set.get(c / 64).is_some_and(|w| w >> (c % 64) & 1 == 1)
}

/// Outcome of [`exact_chromatic`]. `lower ≤ χ ≤ upper`; `witness` is a proper
/// colouring with `upper` colours, indexed by vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaResult {
    pub lower: u32,
    pub upper: u32,
    pub optimal: bool,
    pub witness: Vec<u32>,
    pub nodes: u64,
    pub budget: u64,
}

impl ChromaResult {
    /// The witness as a facet colouring.
    pub fn colouring<F: Clone + Eq + Hash>(&self, facets: Vec<F>) -> Result<Colouring<F>> {
        Colouring::new(facets, self.witness.clone())
    }
}

/// Chromatic number with a node budget. When the budget runs out the
/// result is an honest interval with `optimal = false`.
pub fn exact_chromatic(g: &ConflictGraph, budget: u64) -> ChromaResult {
    let n = g.vertex_count();
    if n == 0 {
        return ChromaResult {
            lower: 0,
            upper: 0,
            optimal: true,
            witness: Vec::new(),
            nodes: 0,
            budget,
        };
    }
    let clique = max_clique(g, budget);
    let mut nodes = clique.nodes.min(budget);
    let mut lower = (clique.members.len() as u32).max(1);
    let mut witness = dsatur(g);
    let mut upper = *witness.iter().max().unwrap_or(&0);
    while upper > lower {
        let k = upper - 1;
        let mut search = KColouring::new(g, k, &clique.members, budget - nodes);
        let outcome = search.run();
        nodes += search.nodes;
        match outcome {
            Decision::Colourable(colours) => {
                upper = *colours.iter().max().unwrap_or(&0);
                witness = colours;
            }
            Decision::NotColourable => lower = k + 1,
            Decision::Exhausted => break,
        }
    }
    ChromaResult {
        lower,
        upper,
        optimal: lower == upper,
        witness,
        nodes,
        budget,
    }
}

enum Decision {
    Colourable(Vec<u32>),
    NotColourable,
    Exhausted,
}

// k-colourability by DSATUR branching. `forbidden[v][c]` counts coloured
// neighbours of v holding colour c; a new colour is only opened as
// `used + 1`, which removes colour-permutation symmetry.
struct KColouring<'a> {
    g: &'a ConflictGraph,
    k: usize,
    colours: Vec<u32>,
    forbidden: Vec<Vec<u32>>,
    degree: Vec<usize>,
    nodes: u64,
    budget: u64,
    seed: Vec<usize>,
}

impl<'a> KColouring<'a> {
    fn new(g: &'a ConflictGraph, k: u32, clique: &[usize], budget: u64) -> Self {
        let n = g.vertex_count();
        KColouring {
            g,
            k: k as usize,
            colours: vec![0; n],
            forbidden: vec![vec![0; k as usize + 1]; n],
            degree: (0..n).map(|v| g.degree(v)).collect(),
            nodes: 0,
            budget,
            seed: clique.to_vec(),
        }
    }

    fn assign(&mut self, v: usize, c: u32) {
        self.colours[v] = c;
        for u in bits(&self.g.rows[v]) {
            self.forbidden[u][c as usize] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colours[v] as usize;
        self.colours[v] = 0;
        for u in bits(&self.g.rows[v]) {
            self.forbidden[u][c] -= 1;
        }
    }

    fn run(&mut self) -> Decision {
        if self.seed.len() > self.k {
            return Decision::NotColourable;
        }
        // a clique takes distinct colours in any colouring; fix them upfront
        let seed = std::mem::take(&mut self.seed);
        for (i, &v) in seed.iter().enumerate() {
            self.assign(v, i as u32 + 1);
        }
        let remaining = self.colours.iter().filter(|&&c| c == 0).count();
        match self.search(seed.len() as u32, remaining) {
            Some(true) => Decision::Colourable(self.colours.clone()),
            Some(false) => Decision::NotColourable,
            None => Decision::Exhausted,
        }
    }

    fn free(&self, v: usize, used: u32) -> usize {
        let top = (used as usize + 1).min(self.k);
        (1..=top).filter(|&c| self.forbidden[v][c] == 0).count()
    }

    // Some(true) found, Some(false) refuted, None out of budget.
    fn search(&mut self, used: u32, remaining: usize) -> Option<bool> {
        if remaining == 0 {
            return Some(true);
        }
        if self.nodes == self.budget {
            return None;
        }
        self.nodes += 1;
        let mut pick = None;
        let mut pick_key = (usize::MAX, 0usize);
        for v in 0..self.colours.len() {
            if self.colours[v] != 0 {
                continue;
            }
            let free = self.free(v, used);
            if free == 0 {
                return Some(false);
            }
            let key = (free, self.degree[v]);
            if key.0 < pick_key.0 || (key.0 == pick_key.0 && key.1 > pick_key.1) {
                pick = Some(v);
                pick_key = key;
            }
        }
        let v = pick?;
        let top = (used + 1).min(self.k as u32);
        for c in 1..=top {
            if self.forbidden[v][c as usize] != 0 {
                continue;
            }
            self.assign(v, c);
            let result = self.search(used.max(c), remaining - 1);
            if result != Some(false) {
                if result.is_none() {
                    self.unassign(v);
                }
                return result;
            }
            self.unassign(v);
        }
        Some(false)
    }
}

/// Chromatic number by plain backtracking, ascending `k` from 1. An oracle
/// for small graphs.
pub fn brute_chromatic(g: &ConflictGraph) -> Result<u32> {
    let n = g.vertex_count();
    if n > MAX_BRUTE_VERTICES {
        return Err(Error::capacity(
            "vertices for brute force",
            MAX_BRUTE_VERTICES,
            n,
        ));
    }
    if n == 0 {
        return Ok(0);
    }
    let mut colours = vec![0u32; n];
    for k in 1..=n as u32 {
        if brute_fill(g, k, 0, 0, &mut colours) {
            return Ok(k);
        }
    }
    unreachable!("n colours always suffice")
}

fn brute_fill(g: &ConflictGraph, k: u32, v: usize, used: u32, colours: &mut [u32]) -> bool {
    if v == colours.len() {
        return true;
    }
    for c in 1..=(used + 1).min(k) {
        if (0..v).all(|u| !g.adjacent(u, v) || colours[u] != c) {
            colours[v] = c;
            if brute_fill(g, k, v + 1, used.max(c), colours) {
                return true;
            }
        }
    }
    colours[v] = 0;
    false
}
