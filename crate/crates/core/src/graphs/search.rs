//! Automorphism groups and isomorphism tests by individualization and colour
//! refinement.
//!
//! Every node of the search tree carries an equitable colouring together
//! with a trace: a hash of the refinement history that only depends on the
//! node up to isomorphism. Nodes whose traces differ from the corresponding
//! node of the first path cannot lead to an automorphism and are cut. Leaves
//! are compared by mapping equal colours onto each other, and each candidate
//! map is checked edge by edge before it is accepted.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use super::{Graph, IsoWitness};
use crate::error::{Error, Result};
use crate::perms::{PermGroup, Permutation, UnionFind, DEFAULT_ELEMENT_CAP};

/// Largest graph the automorphism engine accepts by default.
pub const MAX_VERTICES: usize = 500;

#[derive(Clone, Copy, Debug)]
pub struct AutOptions {
    pub max_vertices: usize,
    /// Upper bound on refinements per call.
    pub node_budget: u64,
    /// Groups up to this order come back with their elements listed.
    pub element_cap: usize,
}

impl Default for AutOptions {
    fn default() -> Self {
        AutOptions {
            max_vertices: MAX_VERTICES,
            node_budget: 5_000_000,
            element_cap: DEFAULT_ELEMENT_CAP,
        }
    }
}

#[derive(Clone)]
struct Node {
    colours: Vec<u32>,
    trace: u64,
}

struct Level {
    node: Node,
    cell: Vec<u32>,
}

struct Engine<'a> {
    g: &'a Graph,
    budget: u64,
    spent: u64,
    keys: Vec<(u32, Vec<u32>)>,
    order: Vec<u32>,
}

impl<'a> Engine<'a> {
    fn new(g: &'a Graph, budget: u64) -> Self {
        Engine {
            g,
            budget,
            spent: 0,
            keys: Vec::new(),
            order: Vec::new(),
        }
    }

    fn charge(&mut self) -> Result<()> {
        self.spent += 1;
        if self.spent > self.budget {
            return Err(Error::BudgetExceeded(format!(
                "search tree exceeded {} nodes",
                self.budget
            )));
        }
        Ok(())
    }

    /// Refines `colours` (ranks `0..k`) to the coarsest equitable colouring
    /// below it. New colours are ranks of `(colour, sorted neighbour
    /// colours)`, so they depend only on the coloured graph up to
    /// isomorphism.
    fn refine(&mut self, mut colours: Vec<u32>, seed: u64) -> Result<Node> {
        self.charge()?;
        let n = colours.len();
        let mut hasher = DefaultHasher::new();
        seed.hash(&mut hasher);
        let mut k = colours.iter().max().map_or(0, |&c| c as usize + 1);
        self.keys.resize(n, (0, Vec::new()));
        loop {
            for v in 0..n {
                let (c, nb) = &mut self.keys[v];
                *c = colours[v];
                nb.clear();
                nb.extend(self.g.adj[v].iter().map(|&y| colours[y as usize]));
                nb.sort_unstable();
            }
            self.order.clear();
            self.order.extend(0..n as u32);
            let keys = &self.keys;
            self.order
                .sort_unstable_by(|&x, &y| keys[x as usize].cmp(&keys[y as usize]));
            let mut next = vec![0u32; n];
            let mut rank = 0u32;
            let mut run = 0u32;
            for idx in 0..n {
                let v = self.order[idx] as usize;
                if idx > 0 && self.keys[v] != self.keys[self.order[idx - 1] as usize] {
                    self.keys[self.order[idx - 1] as usize].hash(&mut hasher);
                    run.hash(&mut hasher);
                    rank += 1;
                    run = 0;
                }
                run += 1;
                next[v] = rank;
            }
            if n > 0 {
                self.keys[self.order[n - 1] as usize].hash(&mut hasher);
                run.hash(&mut hasher);
            }
            let new_k = if n == 0 { 0 } else { rank as usize + 1 };
            colours = next;
            if new_k == k {
                break;
            }
            k = new_k;
        }
        Ok(Node {
            colours,
            trace: hasher.finish(),
        })
    }

    fn root(&mut self) -> Result<Node> {
        self.refine(vec![0; self.g.n_vertices()], 0)
    }

    fn individualize(&mut self, parent: &Node, v: u32) -> Result<Node> {
        let target = parent.colours[v as usize];
        let mut colours: Vec<u32> = parent
            .colours
            .iter()
            .map(|&c| if c > target { c + 1 } else { c })
            .collect();
        // v keeps the old colour, the rest of its cell moves one up
        for (x, c) in colours.iter_mut().enumerate() {
            if parent.colours[x] == target && x as u32 != v {
                *c = target + 1;
            }
        }
        self.refine(colours, parent.trace)
    }
}

fn is_discrete(node: &Node) -> bool {
    let n = node.colours.len();
    let mut seen = vec![false; n];
    node.colours
        .iter()
        .all(|&c| !std::mem::replace(&mut seen[c as usize], true))
}

/// Smallest non-singleton cell, ties broken by colour; members ascending.
fn target_cell(node: &Node) -> Vec<u32> {
    let n = node.colours.len();
    let mut sizes = vec![0u32; n];
    for &c in &node.colours {
        sizes[c as usize] += 1;
    }
    let best = (0..n)
        .filter(|&c| sizes[c] > 1)
        .min_by_key(|&c| (sizes[c], c))
        .expect("not discrete");
    (0..n as u32)
        .filter(|&v| node.colours[v as usize] == best as u32)
        .collect()
}

/// Vertex of each colour at a discrete leaf.
fn leaf_order(node: &Node) -> Vec<u32> {
    let mut by_colour = vec![0u32; node.colours.len()];
    for (v, &c) in node.colours.iter().enumerate() {
        by_colour[c as usize] = v as u32;
    }
    by_colour
}

fn first_path(engine: &mut Engine) -> Result<(Vec<Level>, Node)> {
    let mut levels = Vec::new();
    let mut node = engine.root()?;
    while !is_discrete(&node) {
        let cell = target_cell(&node);
        let next = engine.individualize(&node, cell[0])?;
        levels.push(Level { node, cell });
        node = next;
    }
    Ok((levels, node))
}

/// Depth-first search below `node` (at depth `depth` of the tree) for a leaf
/// whose trace history matches `levels` and whose induced map from `leaf1`
/// passes `accept`.
fn match_below<F>(
    engine: &mut Engine,
    levels: &[Level],
    leaf1: &Node,
    leaf1_order: &[u32],
    node: &Node,
    depth: usize,
    accept: &mut F,
) -> Result<Option<Vec<u32>>>
where
    F: FnMut(&[u32]) -> bool,
{
    let expected = if depth < levels.len() {
        &levels[depth].node
    } else {
        leaf1
    };
    if node.trace != expected.trace {
        return Ok(None);
    }
    if depth == levels.len() {
        if !is_discrete(node) {
            return Ok(None);
        }
        let order2 = leaf_order(node);
        let mut map = vec![0u32; order2.len()];
        for (c, &v1) in leaf1_order.iter().enumerate() {
            map[v1 as usize] = order2[c];
        }
        return Ok(accept(&map).then_some(map));
    }
    if is_discrete(node) {
        return Ok(None);
    }
    let cell = target_cell(node);
    for w in cell {
        let child = engine.individualize(node, w)?;
        if let Some(map) = match_below(
            engine,
            levels,
            leaf1,
            leaf1_order,
            &child,
            depth + 1,
            accept,
        )? {
            return Ok(Some(map));
        }
    }
    Ok(None)
}

/// Full automorphism group with default options.
pub fn automorphism_group(g: &Graph) -> Result<PermGroup> {
    automorphism_group_with(g, AutOptions::default())
}

/// Full automorphism group: generators, exact order, and the element list
/// when the order is at most `opts.element_cap`.
pub fn automorphism_group_with(g: &Graph, opts: AutOptions) -> Result<PermGroup> {
    let n = g.n_vertices();
    if n > opts.max_vertices {
        return Err(Error::BudgetExceeded(format!(
            "{n} vertices exceeds the automorphism engine bound {}",
            opts.max_vertices
        )));
    }
    if n == 0 {
        return Ok(PermGroup::trivial(0));
    }
    let mut engine = Engine::new(g, opts.node_budget);
    let (levels, leaf1) = first_path(&mut engine)?;
    let leaf1_order = leaf_order(&leaf1);
    let mut gens: Vec<Permutation> = Vec::new();
    let mut order: u128 = 1;
    for k in (0..levels.len()).rev() {
        let cell = levels[k].cell.clone();
        let v = cell[0];
        let mut uf = UnionFind::new(n);
        for p in &gens {
            for x in 0..n as u32 {
                uf.union(x, p.apply(x));
            }
        }
        for &w in &cell[1..] {
            if uf.find(w) == uf.find(v) {
                continue;
            }
            let child = engine.individualize(&levels[k].node, w)?;
            let mut accept = |map: &[u32]| {
                g.edges()
                    .all(|(a, b)| g.has_edge(map[a as usize], map[b as usize]))
            };
            if let Some(map) = match_below(
                &mut engine,
                &levels,
                &leaf1,
                &leaf1_order,
                &child,
                k + 1,
                &mut accept,
            )? {
                let p = Permutation::from_images_unchecked(map);
                for x in 0..n as u32 {
                    uf.union(x, p.apply(x));
                }
                gens.push(p);
            }
        }
        let orbit = cell.iter().filter(|&&w| uf.find(w) == uf.find(v)).count();
        order *= orbit as u128;
    }
    let group = PermGroup::with_known_order(n, gens, order)?;
    if order <= opts.element_cap as u128 {
        group.close(opts.element_cap)
    } else {
        Ok(group)
    }
}

/// An explicit isomorphism `g1 → g2`, or `None` when none exists.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<Option<IsoWitness>> {
    are_isomorphic_with(g1, g2, AutOptions::default())
}

pub fn are_isomorphic_with(g1: &Graph, g2: &Graph, opts: AutOptions) -> Result<Option<IsoWitness>> {
    let n = g1.n_vertices();
    if n != g2.n_vertices() || g1.n_edges() != g2.n_edges() {
        return Ok(None);
    }
    if n > opts.max_vertices {
        return Err(Error::BudgetExceeded(format!(
            "{n} vertices exceeds the isomorphism engine bound {}",
            opts.max_vertices
        )));
    }
    if n == 0 {
        return Ok(Some(IsoWitness::new(Vec::new(), "empty graphs")));
    }
    let mut degrees1: Vec<usize> = (0..n as u32).map(|v| g1.degree(v)).collect();
    let mut degrees2: Vec<usize> = (0..n as u32).map(|v| g2.degree(v)).collect();
    degrees1.sort_unstable();
    degrees2.sort_unstable();
    if degrees1 != degrees2 {
        return Ok(None);
    }
    let mut e1 = Engine::new(g1, opts.node_budget);
    let (levels, leaf1) = first_path(&mut e1)?;
    let leaf1_order = leaf_order(&leaf1);
    let mut e2 = Engine::new(g2, opts.node_budget.saturating_sub(e1.spent));
    let root2 = e2.root()?;
    let mut accept = |map: &[u32]| {
        g1.edges()
            .all(|(a, b)| g2.has_edge(map[a as usize], map[b as usize]))
    };
    let found = match_below(
        &mut e2,
        &levels,
        &leaf1,
        &leaf1_order,
        &root2,
        0,
        &mut accept,
    )?;
    Ok(found.map(|map| IsoWitness::new(map, "found by refinement search")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let outer = (0..5u32).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5u32).map(|i| (i, i + 5));
        let inner = (0..5u32).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    #[test]
    fn small_orders() {
        assert_eq!(
            automorphism_group(&Graph::complete(4)).unwrap().order(),
            Some(24)
        );
        assert_eq!(
            automorphism_group(&Graph::cycle(7)).unwrap().order(),
            Some(14)
        );
        assert_eq!(automorphism_group(&petersen()).unwrap().order(), Some(120));
        assert_eq!(
            automorphism_group(&Graph::complete_bipartite(3, 3))
                .unwrap()
                .order(),
            Some(72)
        );
        let empty = Graph::from_edges(5, []).unwrap();
        assert_eq!(automorphism_group(&empty).unwrap().order(), Some(120));
    }

    #[test]
    fn every_element_is_an_automorphism() {
        let g = petersen();
        let aut = automorphism_group(&g).unwrap();
        for p in aut.elements().unwrap() {
            assert!(g.verify_automorphism(p).unwrap());
        }
    }

    #[test]
    fn size_bound() {
        let big = Graph::cycle(600);
        assert!(matches!(
            automorphism_group(&big),
            Err(Error::BudgetExceeded(_))
        ));
        let tiny = AutOptions {
            node_budget: 1,
            ..AutOptions::default()
        };
        assert!(matches!(
            automorphism_group_with(&petersen(), tiny),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn isomorphism() {
        let c5 = Graph::cycle(5);
        let p = Permutation::from_images(vec![3, 0, 4, 1, 2]).unwrap();
        let c5b = c5.relabel(&p).unwrap();
        let w = are_isomorphic(&c5, &c5b).unwrap().unwrap();
        assert!(w.validate(&c5, &c5b));
        assert!(
            are_isomorphic(&Graph::cycle(6), &Graph::complete_bipartite(3, 3))
                .unwrap()
                .is_none()
        );
        // same degree sequence, different graphs
        let two_triangles =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(are_isomorphic(&Graph::cycle(6), &two_triangles)
            .unwrap()
            .is_none());
    }
}
