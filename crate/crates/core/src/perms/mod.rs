//! Permutations of `{0..N-1}` and permutation groups with explicit element
//! lists.
//!
//! Permutations act on the right: `p.then(&q)` (also `&p * &q`) applies `p`
//! first. With this convention `R(g) * R(h) = R(gh)` for right
//! multiplications, and `p.conjugate_by(&g)` is `g^-1 p g`.

mod search;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::Mul;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use search::{find_regular_subgroup, find_semiregular_copy, SearchOutcome, Verdict};

/// Default cap on the number of elements materialized by a closure.
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation(images))
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation(images)
    }

    /// Builds a permutation of degree `n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..n as u32).collect();
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                let y = cycle[(k + 1) % cycle.len()];
                if x as usize >= n || y as usize >= n {
                    return Err(Error::InvalidPermutation(format!(
                        "point out of range in {cycle:?}"
                    )));
                }
                images[x as usize] = y;
            }
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.0[x as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation(inv)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn pow(&self, k: i64) -> Permutation {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut k = k.unsigned_abs();
        let mut result = Permutation::identity(self.degree());
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                result = result.then(&sq);
            }
            sq = sq.then(&sq);
            k >>= 1;
        }
        result
    }

    /// `g^-1 self g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().then(self).then(g)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn fixed_points(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i as u32 == x)
            .count()
    }

    pub fn is_fixed_point_free(&self) -> bool {
        self.fixed_points() == 0
    }

    /// Cycles of length at least 2, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.0[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.0[x] as usize;
            }
            out.push(len);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycle_lengths().into_iter().fold(1u64, |acc, l| {
            let l = l as u64;
            acc / crate::groups::gcd(acc, l) * l
        })
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// A partition of `{0..N-1}` into nonempty cells. Cells are sorted and
/// listed by their smallest point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    degree: usize,
    cells: Vec<Vec<u32>>,
}

impl Partition {
    pub fn new(degree: usize, cells: Vec<Vec<u32>>) -> Result<Self> {
        let mut seen = vec![false; degree];
        let mut cells = cells;
        for cell in &mut cells {
            if cell.is_empty() {
                return Err(Error::InvalidPartition("empty cell".into()));
            }
            cell.sort_unstable();
            for &x in cell.iter() {
                if x as usize >= degree {
                    return Err(Error::InvalidPartition(format!("point {x} out of range")));
                }
                if seen[x as usize] {
                    return Err(Error::InvalidPartition(format!("point {x} appears twice")));
                }
                seen[x as usize] = true;
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!(
                "point {missing} is not covered"
            )));
        }
        cells.sort_unstable_by_key(|c| c[0]);
        Ok(Partition { degree, cells })
    }

    /// Groups points by equal label.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut by_label: HashMap<usize, Vec<u32>> = HashMap::new();
        for (x, &l) in labels.iter().enumerate() {
            by_label.entry(l).or_default().push(x as u32);
        }
        Partition::new(labels.len(), by_label.into_values().collect())
            .expect("labels cover every point")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cells(&self) -> &[Vec<u32>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// `cell_index[x]` is the position of the cell containing `x`.
    pub fn cell_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.degree];
        for (i, cell) in self.cells.iter().enumerate() {
            for &x in cell {
                idx[x as usize] = i;
            }
        }
        idx
    }

    pub fn is_invariant_under(&self, p: &Permutation) -> bool {
        let idx = self.cell_index();
        self.cells.iter().all(|cell| {
            let target = idx[p.apply(cell[0]) as usize];
            cell.iter().all(|&x| idx[p.apply(x) as usize] == target)
        })
    }
}

#[derive(Debug)]
struct Elements {
    list: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
}

/// A permutation group given by generators, with the element list once it
/// has been closed.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    order: Option<u128>,
    elements: Option<Arc<Elements>>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.gens)
            .field("order", &self.order)
            .finish()
    }
}

/// Closes `gens` under composition; the identity comes first and the rest
/// follow in breadth-first order over words in the generators.
pub fn close_group(degree: usize, gens: &[Permutation], cap: usize) -> Result<PermGroup> {
    PermGroup::from_generators(degree, gens.to_vec())?.close(cap)
}

impl PermGroup {
    pub fn from_generators(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidPermutation(format!(
                "generator of degree {} in a group of degree {degree}",
                g.degree()
            )));
        }
        let gens = dedup_generators(gens);
        Ok(PermGroup {
            degree,
            gens,
            order: None,
            elements: None,
        })
    }

    /// Generators together with an order known from elsewhere (for instance a
    /// stabilizer chain). The order is trusted.
    pub fn with_known_order(degree: usize, gens: Vec<Permutation>, order: u128) -> Result<Self> {
        let mut g = PermGroup::from_generators(degree, gens)?;
        g.order = Some(order);
        Ok(g)
    }

    pub fn trivial(degree: usize) -> Self {
        let list = vec![Permutation::identity(degree)];
        let index = list
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i as u32))
            .collect();
        PermGroup {
            degree,
            gens: Vec::new(),
            order: Some(1),
            elements: Some(Arc::new(Elements { list, index })),
        }
    }

    /// Materializes all elements by breadth-first closure.
    pub fn close(mut self, cap: usize) -> Result<Self> {
        if self.elements.is_some() {
            return Ok(self);
        }
        if let Some(order) = self.order {
            if order > cap as u128 {
                return Err(Error::BudgetExceeded(format!(
                    "group order {order} exceeds element cap {cap}"
                )));
            }
        }
        let id = Permutation::identity(self.degree);
        let mut list = vec![id.clone()];
        let mut index = HashMap::from([(id, 0u32)]);
        let mut i = 0;
        while i < list.len() {
            for s in &self.gens {
                let y = list[i].then(s);
                if !index.contains_key(&y) {
                    if list.len() >= cap {
                        return Err(Error::BudgetExceeded(format!(
                            "group has more than {cap} elements"
                        )));
                    }
                    index.insert(y.clone(), list.len() as u32);
                    list.push(y);
                }
            }
            i += 1;
        }
        if let Some(order) = self.order {
            if order != list.len() as u128 {
                return Err(Error::EngineDisagreement(format!(
                    "closure found {} elements, expected {order}",
                    list.len()
                )));
            }
        }
        self.order = Some(list.len() as u128);
        self.elements = Some(Arc::new(Elements { list, index }));
        Ok(self)
    }

    /// The subgroup consisting of exactly `elements`, which must be closed
    /// under composition. A small generating set is chosen greedily.
    pub fn from_closed_elements(degree: usize, elements: Vec<Permutation>) -> Result<Self> {
        let set: HashSet<&Permutation> = elements.iter().collect();
        let mut sorted: Vec<Permutation> = elements.clone();
        sorted.sort();
        let mut gens: Vec<Permutation> = Vec::new();
        let mut current = PermGroup::trivial(degree);
        for x in &sorted {
            if current.contains(x) {
                continue;
            }
            gens.push(x.clone());
            current = close_group(degree, &gens, elements.len().max(1))
                .map_err(|_| Error::NotASubgroup)?;
            if current
                .elements_unchecked()
                .iter()
                .any(|p| !set.contains(p))
            {
                return Err(Error::NotASubgroup);
            }
        }
        if current.order != Some(elements.len() as u128) {
            return Err(Error::NotASubgroup);
        }
        Ok(current)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn order(&self) -> Option<u128> {
        self.order
    }

    pub fn is_closed(&self) -> bool {
        self.elements.is_some()
    }

    pub fn elements(&self) -> Result<&[Permutation]> {
        self.elements
            .as_ref()
            .map(|e| e.list.as_slice())
            .ok_or(Error::NeedsClosure)
    }

    fn elements_unchecked(&self) -> &[Permutation] {
        &self.elements.as_ref().expect("closed group").list
    }

    pub(crate) fn element_index(&self, p: &Permutation) -> Option<u32> {
        self.elements.as_ref().and_then(|e| e.index.get(p).copied())
    }

    /// Membership; falls back to closure-free checks only for closed groups.
    pub fn contains(&self, p: &Permutation) -> bool {
        match &self.elements {
            Some(e) => e.index.contains_key(p),
            None => panic!("membership test needs a closed group"),
        }
    }

    /// Orbits under the generators.
    pub fn orbits(&self) -> Partition {
        let mut uf = UnionFind::new(self.degree);
        for g in &self.gens {
            for x in 0..self.degree as u32 {
                uf.union(x, g.apply(x));
            }
        }
        Partition::from_labels(&uf.labels())
    }

    pub fn orbit(&self, v: u32) -> Vec<u32> {
        let mut seen = vec![false; self.degree];
        seen[v as usize] = true;
        let mut queue = VecDeque::from([v]);
        let mut out = vec![v];
        while let Some(x) = queue.pop_front() {
            for g in &self.gens {
                let y = g.apply(x);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    pub fn action_profile(&self) -> Result<ActionProfile> {
        let elements = self.elements()?;
        let orbits = self.orbits();
        let transitive = orbits.len() <= 1;
        let semiregular = elements
            .iter()
            .all(|p| p.is_identity() || p.is_fixed_point_free());
        Ok(ActionProfile {
            transitive,
            semiregular,
            regular: transitive && semiregular,
            orbits,
        })
    }

    pub fn stabilizer(&self, v: u32) -> Result<PermGroup> {
        let elements = self.elements()?;
        let stab: Vec<Permutation> = elements
            .iter()
            .filter(|p| p.apply(v) == v)
            .cloned()
            .collect();
        let orbit = self.orbit(v).len();
        assert_eq!(
            orbit * stab.len(),
            elements.len(),
            "orbit-stabilizer failed at point {v}"
        );
        PermGroup::from_closed_elements(self.degree, stab)
    }

    fn check_subgroup_of(&self, ambient: &PermGroup) -> Result<()> {
        let elements = self.elements()?;
        ambient.elements()?;
        if self.degree != ambient.degree || elements.iter().any(|p| !ambient.contains(p)) {
            return Err(Error::NotASubgroup);
        }
        Ok(())
    }

    /// The largest normal subgroup of `ambient` contained in `self`.
    pub fn core_in(&self, ambient: &PermGroup) -> Result<PermGroup> {
        self.check_subgroup_of(ambient)?;
        let mut current: Vec<Permutation> = self.elements_unchecked().to_vec();
        loop {
            let set: HashSet<&Permutation> = current.iter().collect();
            let next: Vec<Permutation> = current
                .iter()
                .filter(|x| {
                    ambient
                        .gens
                        .iter()
                        .all(|g| set.contains(&x.conjugate_by(g)))
                })
                .cloned()
                .collect();
            if next.len() == current.len() {
                break;
            }
            current = next;
        }
        PermGroup::from_closed_elements(self.degree, current)
    }

    /// `(N_ambient(self), C_ambient(self))` by testing every element.
    pub fn normalizer_centralizer(&self, ambient: &PermGroup) -> Result<(PermGroup, PermGroup)> {
        self.check_subgroup_of(ambient)?;
        let mut normalizer = Vec::new();
        let mut centralizer = Vec::new();
        for g in ambient.elements_unchecked() {
            if self.gens.iter().all(|h| self.contains(&h.conjugate_by(g))) {
                normalizer.push(g.clone());
                if self.gens.iter().all(|h| h.then(g) == g.then(h)) {
                    centralizer.push(g.clone());
                }
            }
        }
        Ok((
            PermGroup::from_closed_elements(self.degree, normalizer)?,
            PermGroup::from_closed_elements(self.degree, centralizer)?,
        ))
    }

    /// Whether `self` is normalized by every generator of `ambient`. Only
    /// `self` needs to be closed.
    pub fn is_normalized_by(&self, ambient: &PermGroup) -> Result<bool> {
        self.elements()?;
        Ok(ambient
            .gens
            .iter()
            .all(|g| self.gens.iter().all(|h| self.contains(&h.conjugate_by(g)))))
    }

    /// The finest invariant partition with `seed.0` and `seed.1` in one cell.
    pub fn block_system(&self, seed: (u32, u32)) -> Result<Partition> {
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        let n = self.degree as u32;
        if seed.0 >= n || seed.1 >= n {
            return Err(Error::InvalidParameter(format!(
                "seed {seed:?} out of range"
            )));
        }
        let mut uf = UnionFind::new(self.degree);
        let mut queue = VecDeque::new();
        if uf.union(seed.0, seed.1) {
            queue.push_back(seed);
        }
        while let Some((x, y)) = queue.pop_front() {
            for g in &self.gens {
                let (gx, gy) = (g.apply(x), g.apply(y));
                if uf.union(gx, gy) {
                    queue.push_back((gx, gy));
                }
            }
        }
        Ok(Partition::from_labels(&uf.labels()))
    }

    /// Right-multiplication table by the generators, over element indices.
    pub(crate) fn generator_table(&self) -> Result<Vec<Vec<u32>>> {
        let elements = self.elements()?;
        Ok(elements
            .iter()
            .map(|x| {
                self.gens
                    .iter()
                    .map(|s| self.element_index(&x.then(s)).expect("closed group"))
                    .collect()
            })
            .collect())
    }
}

fn dedup_generators(gens: Vec<Permutation>) -> Vec<Permutation> {
    let mut seen = HashSet::new();
    gens.into_iter()
        .filter(|g| !g.is_identity() && seen.insert(g.clone()))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActionProfile {
    pub transitive: bool,
    pub semiregular: bool,
    pub regular: bool,
    pub orbits: Partition,
}

pub(crate) struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    pub fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    /// Returns true if two distinct classes were merged.
    pub fn union(&mut self, x: u32, y: u32) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        let (lo, hi) = if rx < ry { (rx, ry) } else { (ry, rx) };
        self.parent[hi as usize] = lo;
        true
    }

    pub fn labels(&mut self) -> Vec<usize> {
        (0..self.parent.len() as u32)
            .map(|x| self.find(x) as usize)
            .collect()
    }
}
