//! Searches for regular and semiregular subgroups inside a closed group.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use super::{PermGroup, Permutation};
use crate::error::{Error, Result};
use crate::groups::FcGroup;

/// Result of a bounded search. `Unknown` means the budget ran out before the
/// search space was exhausted.
#[derive(Clone, Debug)]
pub enum SearchOutcome {
    Found(PermGroup),
    Absent,
    Unknown { budget: u64 },
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&PermGroup> {
        match self {
            SearchOutcome::Found(g) => Some(g),
            _ => None,
        }
    }

    pub fn verdict(&self) -> Verdict {
        match self {
            SearchOutcome::Found(_) => Verdict::Yes,
            SearchOutcome::Absent => Verdict::No,
            SearchOutcome::Unknown { .. } => Verdict::Unknown,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

struct Ctx<'a> {
    group: &'a PermGroup,
    elements: &'a [Permutation],
    n: usize,
    fpf: Vec<bool>,
    by_image_of_zero: Vec<Vec<u32>>,
    visited: HashSet<Vec<u32>>,
    spent: u64,
    budget: u64,
}

impl<'a> Ctx<'a> {
    /// Closes `gens` (element indices), giving up as soon as a non-identity
    /// element with a fixed point appears or the order passes `limit`.
    fn semiregular_closure(&self, gens: &[u32], limit: usize) -> Option<Vec<u32>> {
        let id = self
            .group
            .element_index(&Permutation::identity(self.n))
            .expect("identity");
        let mut seen = HashSet::from([id]);
        let mut list = vec![id];
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.elements[x as usize].then(&self.elements[s as usize]);
                let yi = self.group.element_index(&y).expect("closed group");
                if seen.insert(yi) {
                    if !self.fpf[yi as usize] || list.len() >= limit {
                        return None;
                    }
                    list.push(yi);
                    queue.push_back(yi);
                }
            }
        }
        list.sort_unstable();
        Some(list)
    }

    fn regular_dfs(&mut self, gens: &mut Vec<u32>, members: &[u32]) -> Option<Option<Vec<u32>>> {
        if members.len() == self.n {
            return Some(Some(gens.clone()));
        }
        let mut covered = vec![false; self.n];
        for &k in members {
            covered[self.elements[k as usize].apply(0) as usize] = true;
        }
        let v = covered
            .iter()
            .position(|c| !c)
            .expect("orbit smaller than degree");
        let candidates = self.by_image_of_zero[v].clone();
        for g in candidates {
            if !self.fpf[g as usize] {
                continue;
            }
            if self.spent >= self.budget {
                return None;
            }
            self.spent += 1;
            gens.push(g);
            if let Some(next) = self.semiregular_closure(gens, self.n) {
                if self.visited.insert(next.clone()) {
                    match self.regular_dfs(gens, &next) {
                        Some(Some(found)) => return Some(Some(found)),
                        None => return None,
                        Some(None) => {}
                    }
                }
            }
            gens.pop();
        }
        Some(None)
    }
}

/// Searches a closed transitive group for a subgroup acting regularly.
///
/// If `|G|` equals the degree, `G` itself is returned. If `|G|` is twice the
/// degree, only the index-2 subgroups are examined. Otherwise a depth-first
/// search grows semiregular subgroups one element at a time: any regular
/// subgroup containing the current `K` has a unique element moving `0` to the
/// smallest point outside `0^K`, so branching over those elements is
/// exhaustive. `budget` bounds the number of closures attempted.
pub fn find_regular_subgroup(group: &PermGroup, budget: u64) -> Result<SearchOutcome> {
    let elements = group.elements()?;
    let n = group.degree();
    if n == 0 {
        return Ok(SearchOutcome::Found(group.clone()));
    }
    if !group.is_transitive() {
        return Ok(SearchOutcome::Absent);
    }
    let order = elements.len();
    if order == n {
        return Ok(SearchOutcome::Found(group.clone()));
    }
    if order == 2 * n {
        return index_two(group, n);
    }
    let fpf: Vec<bool> = elements.iter().map(|p| p.is_fixed_point_free()).collect();
    let mut by_image_of_zero = vec![Vec::new(); n];
    let mut sorted: Vec<u32> = (0..order as u32).collect();
    sorted.sort_by_cached_key(|&i| (elements[i as usize].order(), elements[i as usize].clone()));
    for i in sorted {
        by_image_of_zero[elements[i as usize].apply(0) as usize].push(i);
    }
    let mut ctx = Ctx {
        group,
        elements,
        n,
        fpf,
        by_image_of_zero,
        visited: HashSet::new(),
        spent: 0,
        budget,
    };
    let id = group
        .element_index(&Permutation::identity(n))
        .expect("identity");
    match ctx.regular_dfs(&mut Vec::new(), &[id]) {
        None => Ok(SearchOutcome::Unknown { budget }),
        Some(None) => Ok(SearchOutcome::Absent),
        Some(Some(gens)) => {
            let gens: Vec<Permutation> =
                gens.iter().map(|&i| elements[i as usize].clone()).collect();
            let r = super::close_group(n, &gens, n)?;
            debug_assert!(r.action_profile().map(|p| p.regular).unwrap_or(false));
            Ok(SearchOutcome::Found(r))
        }
    }
}

/// Index-2 subgroups are kernels of surjections onto a group of order 2, so
/// each is determined by a parity on the generators.
fn index_two(group: &PermGroup, n: usize) -> Result<SearchOutcome> {
    let elements = group.elements()?;
    let table = group.generator_table()?;
    let k = group.generators().len();
    if k >= 24 {
        return Err(Error::BudgetExceeded(format!(
            "{k} generators for the index-2 enumeration"
        )));
    }
    let id = group
        .element_index(&Permutation::identity(n))
        .expect("identity") as usize;
    let mut seen_kernels = HashSet::new();
    for mask in 1u32..(1 << k) {
        let mut parity = vec![u8::MAX; elements.len()];
        parity[id] = 0;
        let mut queue = VecDeque::from([id]);
        let mut consistent = true;
        'bfs: while let Some(x) = queue.pop_front() {
            for (s, &y) in table[x].iter().enumerate() {
                let py = parity[x] ^ ((mask >> s) & 1) as u8;
                let y = y as usize;
                if parity[y] == u8::MAX {
                    parity[y] = py;
                    queue.push_back(y);
                } else if parity[y] != py {
                    consistent = false;
                    break 'bfs;
                }
            }
        }
        if !consistent {
            continue;
        }
        let kernel: Vec<u32> = (0..elements.len() as u32)
            .filter(|&i| parity[i as usize] == 0)
            .collect();
        if !seen_kernels.insert(kernel.clone()) {
            continue;
        }
        let mut hit = vec![false; n];
        for &i in &kernel {
            hit[elements[i as usize].apply(0) as usize] = true;
        }
        if hit.iter().all(|&h| h) {
            let members: Vec<Permutation> = kernel
                .iter()
                .map(|&i| elements[i as usize].clone())
                .collect();
            return Ok(SearchOutcome::Found(PermGroup::from_closed_elements(
                n, members,
            )?));
        }
    }
    Ok(SearchOutcome::Absent)
}

/// Searches a closed group for a semiregular subgroup isomorphic to `spec`,
/// by matching generator images: the images must satisfy every relation of
/// `spec` (checked by extending along its Cayley graph), be injective, and
/// every non-identity image must be fixed-point-free. `budget` bounds the
/// number of generator tuples examined.
pub fn find_semiregular_copy(
    group: &PermGroup,
    spec: &FcGroup,
    budget: u64,
) -> Result<SearchOutcome> {
    let elements = group.elements()?;
    let n = group.degree();
    let h = spec.order();
    if h == 0 || n % h != 0 {
        return Ok(SearchOutcome::Absent);
    }
    let spec_gens = spec.generators();
    // semiregular elements: every cycle has the element's order as length
    let candidates: Vec<Vec<u32>> = spec_gens
        .iter()
        .map(|&g| {
            let want = spec.elem_order(g);
            (0..elements.len() as u32)
                .filter(|&i| {
                    let lens = elements[i as usize].cycle_lengths();
                    lens.iter().all(|&l| l == want)
                })
                .collect()
        })
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return Ok(SearchOutcome::Absent);
    }
    let mut choice = vec![0usize; spec_gens.len()];
    let mut spent = 0u64;
    loop {
        if spent >= budget {
            return Ok(SearchOutcome::Unknown { budget });
        }
        spent += 1;
        let images: Vec<&Permutation> = choice
            .iter()
            .zip(&candidates)
            .map(|(&c, cand)| &elements[cand[c] as usize])
            .collect();
        if let Some(members) = extend_to_semiregular(spec, &images, n) {
            return Ok(SearchOutcome::Found(PermGroup::from_closed_elements(
                n, members,
            )?));
        }
        let mut pos = choice.len();
        loop {
            if pos == 0 {
                return Ok(SearchOutcome::Absent);
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < candidates[pos].len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

fn extend_to_semiregular(
    spec: &FcGroup,
    images: &[&Permutation],
    n: usize,
) -> Option<Vec<Permutation>> {
    let gens = spec.generators();
    let mut table: Vec<Option<Permutation>> = vec![None; spec.order()];
    table[spec.index(spec.identity())] = Some(Permutation::identity(n));
    let mut queue = VecDeque::from([spec.identity()]);
    let mut used = HashSet::new();
    used.insert(Permutation::identity(n));
    while let Some(x) = queue.pop_front() {
        let px = table[spec.index(x)].clone().expect("visited");
        for (g, img) in gens.iter().zip(images) {
            let y = spec.mul(x, *g);
            let py = px.then(img);
            match &table[spec.index(y)] {
                None => {
                    if !py.is_fixed_point_free() || !used.insert(py.clone()) {
                        return None;
                    }
                    table[spec.index(y)] = Some(py);
                    queue.push_back(y);
                }
                Some(prev) if *prev != py => return None,
                Some(_) => {}
            }
        }
    }
    table.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perms::{close_group, DEFAULT_ELEMENT_CAP};

    fn p(images: &[u32]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn dihedral_action_on_hexagon_has_rotations() {
        let rot = p(&[1, 2, 3, 4, 5, 0]);
        let refl = p(&[0, 5, 4, 3, 2, 1]);
        let g = close_group(6, &[rot, refl], DEFAULT_ELEMENT_CAP).unwrap();
        let found = find_regular_subgroup(&g, 1000).unwrap();
        let r = found.found().unwrap();
        assert_eq!(r.order(), Some(6));
        assert!(r.action_profile().unwrap().regular);
    }

    #[test]
    fn symmetric_group_general_path() {
        let g = close_group(
            4,
            &[p(&[1, 2, 3, 0]), p(&[1, 0, 2, 3])],
            DEFAULT_ELEMENT_CAP,
        )
        .unwrap();
        let found = find_regular_subgroup(&g, 1000).unwrap();
        assert!(found.found().unwrap().action_profile().unwrap().regular);
    }

    #[test]
    fn intransitive_is_absent() {
        let g = close_group(3, &[p(&[1, 0, 2])], 10).unwrap();
        assert!(matches!(
            find_regular_subgroup(&g, 10).unwrap(),
            SearchOutcome::Absent
        ));
    }

    #[test]
    fn zero_budget_is_unknown() {
        let g = close_group(
            5,
            &[p(&[1, 2, 3, 4, 0]), p(&[1, 0, 2, 3, 4])],
            DEFAULT_ELEMENT_CAP,
        )
        .unwrap();
        assert!(matches!(
            find_regular_subgroup(&g, 0).unwrap(),
            SearchOutcome::Unknown { .. }
        ));
    }

    #[test]
    fn semiregular_copy_of_z2() {
        // K_4 automorphisms = Sym(4)
        let g = close_group(
            4,
            &[p(&[1, 2, 3, 0]), p(&[1, 0, 2, 3])],
            DEFAULT_ELEMENT_CAP,
        )
        .unwrap();
        let found = find_semiregular_copy(&g, &FcGroup::Cyclic(2), 1000).unwrap();
        let r = found.found().unwrap();
        assert_eq!(r.order(), Some(2));
        assert_eq!(r.orbits().len(), 2);
    }
}
