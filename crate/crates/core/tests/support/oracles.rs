//! Slow reference implementations used to cross-check the search engine.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dihedrants::constructions::{
    cayley, cross_ladder, generalized_petersen, multi_cross_ladder, CayleySet,
};
use dihedrants::graphs::{automorphism_group, Graph};
use dihedrants::groups::FcGroup;
use dihedrants::perms::Permutation;

/// Counts automorphisms by trying every bijection, pruning only on edges
/// between already placed vertices.
pub fn naive_automorphism_count(g: &Graph) -> u128 {
    fn extend(g: &Graph, image: &mut Vec<u32>, used: &mut [bool]) -> u128 {
        let v = image.len() as u32;
        if v as usize == g.n_vertices() {
            return 1;
        }
        let mut total = 0;
        for w in 0..g.n_vertices() as u32 {
            if used[w as usize] {
                continue;
            }
            let ok = (0..v).all(|u| g.has_edge(u, v) == g.has_edge(image[u as usize], w));
            if ok {
                used[w as usize] = true;
                image.push(w);
                total += extend(g, image, used);
                image.pop();
                used[w as usize] = false;
            }
        }
        total
    }
    extend(g, &mut Vec::new(), &mut vec![false; g.n_vertices()])
}

fn hypercube(d: u32) -> Graph {
    let n = 1u32 << d;
    let edges = (0..n)
        .flat_map(|v| (0..d).map(move |i| (v, v ^ (1 << i))))
        .filter(|(u, v)| u < v);
    Graph::from_edges(n as usize, edges).unwrap()
}

fn path(n: u32) -> Graph {
    Graph::from_edges(n as usize, (1..n).map(|i| (i - 1, i))).unwrap()
}

fn dihedrant(n: u32, set: &str) -> Graph {
    let group = FcGroup::dihedral(n).unwrap();
    cayley(&CayleySet::new(group, &group.parse_set(set).unwrap()).unwrap())
}

fn random_graph(rng: &mut ChaCha8Rng, n: u32) -> Graph {
    let p = rng.gen_range(0.2..0.7);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n as usize, edges).unwrap()
}

/// Small graphs with known answers mixed with random ones.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = vec![
        ("C5".into(), Graph::cycle(5)),
        ("C8".into(), Graph::cycle(8)),
        ("K4".into(), Graph::complete(4)),
        ("K6".into(), Graph::complete(6)),
        ("K3,3".into(), Graph::complete_bipartite(3, 3)),
        ("K4,4".into(), Graph::complete_bipartite(4, 4)),
        ("K1,3".into(), Graph::complete_bipartite(1, 3)),
        ("K2,3".into(), Graph::complete_bipartite(2, 3)),
        ("P4".into(), path(4)),
        ("P7".into(), path(7)),
        ("Q3".into(), hypercube(3)),
        ("Q4".into(), hypercube(4)),
        ("prism3".into(), generalized_petersen(3, 1).unwrap()),
        ("prism5".into(), generalized_petersen(5, 1).unwrap()),
        ("prism7".into(), generalized_petersen(7, 1).unwrap()),
        ("Petersen".into(), generalized_petersen(5, 2).unwrap()),
        ("GP(8,3)".into(), generalized_petersen(8, 3).unwrap()),
        ("GP(7,2)".into(), generalized_petersen(7, 2).unwrap()),
        ("CL8".into(), cross_ladder(2).unwrap()),
        ("CL12".into(), cross_ladder(3).unwrap()),
        ("CL16".into(), cross_ladder(4).unwrap()),
        ("MCL(2)".into(), multi_cross_ladder(2).unwrap()),
        ("cay D10 b,b.a,b.a^2".into(), dihedrant(5, "b,b.a,b.a^2")),
        ("cay D12 b,a,a^-1".into(), dihedrant(6, "b,a,a^-1")),
        ("cay D16 b,b.a,b.a^3".into(), dihedrant(8, "b,b.a,b.a^3")),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in 0..12 {
        let n = rng.gen_range(4..=8);
        out.push((format!("random#{k}(n={n})"), random_graph(&mut rng, n)));
    }
    out
}

/// Decides whether `Aut(g)` has a regular subgroup by growing every
/// semiregular subgroup one element at a time. Only the element list of
/// `Aut(g)` is taken from the engine.
pub fn has_regular_subgroup_exhaustive(g: &Graph) -> dihedrants::Result<bool> {
    let n = g.n_vertices();
    let aut = automorphism_group(g)?.close(1_000_000)?;
    let elements: Vec<Permutation> = aut.elements()?.to_vec();
    let index: HashMap<&Permutation, usize> =
        elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    if elements.len() % n != 0 {
        return Ok(false);
    }
    let identity = index[&Permutation::identity(n)];
    let candidates: Vec<usize> = (0..elements.len())
        .filter(|&i| elements[i].is_fixed_point_free())
        .collect();
    let product = |x: usize, y: usize| index[&elements[x].then(&elements[y])];

    // Closure of `base ∪ {x}`, abandoned once it exceeds `n` elements or
    // picks up a non-identity element with a fixed point.
    let close = |base: &[usize], x: usize| -> Option<Vec<usize>> {
        let mut members: HashSet<usize> = base.iter().copied().collect();
        let mut list: Vec<usize> = base.to_vec();
        let gens: Vec<usize> = base.iter().copied().chain([x]).collect();
        let mut frontier = vec![x];
        if members.insert(x) {
            list.push(x);
        }
        while let Some(y) = frontier.pop() {
            for &s in &gens {
                for z in [product(y, s), product(s, y)] {
                    if members.insert(z) {
                        if members.len() > n
                            || (z != identity && !elements[z].is_fixed_point_free())
                        {
                            return None;
                        }
                        list.push(z);
                        frontier.push(z);
                    }
                }
            }
            for &b in base {
                let z = product(b, y);
                if members.insert(z) {
                    if members.len() > n || (z != identity && !elements[z].is_fixed_point_free()) {
                        return None;
                    }
                    list.push(z);
                    frontier.push(z);
                }
            }
        }
        list.sort_unstable();
        Some(list)
    };

    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut stack = vec![vec![identity]];
    while let Some(h) = stack.pop() {
        if h.len() == n {
            return Ok(true);
        }
        for &x in &candidates {
            if h.binary_search(&x).is_ok() {
                continue;
            }
            if let Some(k) = close(&h, x) {
                if seen.insert(k.clone()) {
                    stack.push(k);
                }
            }
        }
    }
    Ok(false)
}
