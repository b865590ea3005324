//! Decision procedures over full automorphism groups: vertex- and
//! arc-transitivity, Cayley-ness, normality, bi-Cayley triple equivalence,
//! the `F`/`I` sets of a triple, and the trichotomy classifier for trivalent
//! dihedrants.

use std::collections::HashSet;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::constructions::{
    bicayley, bicayley_right_perm, bicayley_vertex, cayley, cayley_right_perm, delta_perm,
    sigma_perm, BiCayleyTriple, CayleySet,
};
use crate::error::{Error, Result};
use crate::graphs::{automorphism_group, Graph, IsoWitness};
use crate::groups::{enumerate_automorphisms, Elem, FcGroup, GroupAutomorphism};
use crate::perms::{
    find_regular_subgroup, find_semiregular_copy, PermGroup, Permutation, SearchOutcome, Verdict,
};
use crate::witnesses::crossladder_iso;

/// Closures attempted by the regular-subgroup search before giving up.
pub const DEFAULT_BUDGET: u64 = 200_000;

pub fn is_vertex_transitive(g: &Graph) -> Result<bool> {
    Ok(automorphism_group(g)?.is_transitive())
}

pub fn is_arc_transitive(g: &Graph) -> Result<bool> {
    let aut = automorphism_group(g)?;
    Ok(arc_transitive_under(g, &aut))
}

/// Vertex-transitive, and the orbit of one arc under `aut` is every arc.
pub fn arc_transitive_under(g: &Graph, aut: &PermGroup) -> bool {
    if !aut.is_transitive() {
        return false;
    }
    let Some((u, v)) = g.edges().next() else {
        return true;
    };
    let n = g.n_vertices() as u64;
    let key = |x: u32, y: u32| x as u64 * n + y as u64;
    let mut seen = HashSet::from([key(u, v)]);
    let mut stack = vec![(u, v)];
    while let Some((x, y)) = stack.pop() {
        for p in aut.generators() {
            let (px, py) = (p.apply(x), p.apply(y));
            if seen.insert(key(px, py)) {
                stack.push((px, py));
            }
        }
    }
    seen.len() == 2 * g.n_edges()
}

#[derive(Clone, Debug)]
pub enum CayleyVerdict {
    /// A regular subgroup of `Aut(Γ)`.
    Yes(PermGroup),
    No,
    Unknown {
        budget: u64,
        reason: String,
    },
}

impl CayleyVerdict {
    pub fn verdict(&self) -> Verdict {
        match self {
            CayleyVerdict::Yes(_) => Verdict::Yes,
            CayleyVerdict::No => Verdict::No,
            CayleyVerdict::Unknown { .. } => Verdict::Unknown,
        }
    }

    pub fn witness(&self) -> Option<&PermGroup> {
        match self {
            CayleyVerdict::Yes(g) => Some(g),
            _ => None,
        }
    }
}

impl Serialize for CayleyVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CayleyVerdict", 3)?;
        st.serialize_field("verdict", &self.verdict())?;
        match self {
            CayleyVerdict::Yes(g) => {
                st.serialize_field("witness_order", &g.order())?;
                st.serialize_field("witness_generators", g.generators())?;
            }
            CayleyVerdict::No => {}
            CayleyVerdict::Unknown { budget, reason } => {
                st.serialize_field("budget", budget)?;
                st.serialize_field("reason", reason)?;
            }
        }
        st.end()
    }
}

/// Re-checks a claimed Cayley witness: closed, regular, and made of
/// automorphisms of `g`.
fn confirm_regular(g: &Graph, witness: PermGroup) -> Result<PermGroup> {
    let witness = if witness.is_closed() {
        witness
    } else {
        witness.close(g.n_vertices())?
    };
    let profile = witness.action_profile()?;
    let automorphisms = witness
        .generators()
        .iter()
        .map(|p| g.verify_automorphism(p))
        .collect::<Result<Vec<_>>>()?;
    if !profile.regular || automorphisms.contains(&false) {
        return Err(Error::EngineDisagreement(
            "claimed regular subgroup failed re-verification".into(),
        ));
    }
    Ok(witness)
}

pub fn is_cayley(g: &Graph, budget: u64) -> Result<CayleyVerdict> {
    let aut = automorphism_group(g)?;
    is_cayley_under(g, &aut, budget)
}

/// Cayley-ness given the full automorphism group of `g`.
pub fn is_cayley_under(g: &Graph, aut: &PermGroup, budget: u64) -> Result<CayleyVerdict> {
    if !aut.is_transitive() {
        return Ok(CayleyVerdict::No);
    }
    if !aut.is_closed() {
        return Ok(CayleyVerdict::Unknown {
            budget,
            reason: format!(
                "|Aut| = {} too large to enumerate",
                aut.order().unwrap_or(0)
            ),
        });
    }
    Ok(match find_regular_subgroup(aut, budget)? {
        SearchOutcome::Found(h) => CayleyVerdict::Yes(confirm_regular(g, h)?),
        SearchOutcome::Absent => CayleyVerdict::No,
        SearchOutcome::Unknown { budget } => CayleyVerdict::Unknown {
            budget,
            reason: "regular subgroup search budget exhausted".into(),
        },
    })
}

/// `R(G)` as a closed permutation group on the Cayley graph vertices.
pub fn right_regular(group: &FcGroup) -> Result<PermGroup> {
    let gens = group
        .generators()
        .into_iter()
        .map(|x| cayley_right_perm(group, x))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::from_generators(group.order(), gens)?.close(group.order())
}

/// `Aut(G, S)` acting on the vertices of `Cay(G, S)`.
pub fn set_stabilizing_automorphisms(set: &CayleySet) -> Result<Vec<GroupAutomorphism>> {
    let s = set.elements();
    Ok(enumerate_automorphisms(&set.group)?
        .into_iter()
        .filter(|a| a.apply_set(s) == s)
        .collect())
}

fn automorphism_as_perm(group: &FcGroup, alpha: &GroupAutomorphism) -> Permutation {
    Permutation::from_images_unchecked(
        group
            .elements()
            .map(|h| group.index(alpha.apply(h)) as u32)
            .collect(),
    )
}

/// Normality of `Cay(G, S)`, decided twice: `R(G) ⊴ Aut(Γ)` directly, and
/// `|Aut(Γ)_1| = |Aut(G, S)|`. Disagreement is an error.
pub fn is_normal_cayley(set: &CayleySet) -> Result<bool> {
    let graph = cayley(set);
    let aut = automorphism_group(&graph)?;
    normal_cayley_under(set, &graph, &aut)
}

pub fn normal_cayley_under(set: &CayleySet, graph: &Graph, aut: &PermGroup) -> Result<bool> {
    let group = &set.group;
    let by_definition = right_regular(group)?.is_normalized_by(aut)?;

    let fixing = set_stabilizing_automorphisms(set)?;
    for alpha in &fixing {
        if !graph.verify_automorphism(&automorphism_as_perm(group, alpha))? {
            return Err(Error::EngineDisagreement(format!(
                "{} fixes S but is not a graph automorphism",
                alpha.describe()
            )));
        }
    }
    let aut_order = aut.order().ok_or(Error::NeedsClosure)?;
    let n = group.order() as u128;
    if aut_order % n != 0 {
        return Err(Error::EngineDisagreement(format!(
            "|Aut| = {aut_order} is not a multiple of {n}"
        )));
    }
    let by_stabilizer = aut_order / n == fixing.len() as u128;

    if by_definition != by_stabilizer {
        return Err(Error::EngineDisagreement(format!(
            "normality: R(G) normal = {by_definition}, A_1 = Aut(G,S) = {by_stabilizer}"
        )));
    }
    Ok(by_definition)
}

/// An `α ∈ Aut(H)` with `T2 = T1^α` (`swapped = false`) or
/// `T2 = (L, R, S^-1)^α` (`swapped = true`), trying the direct form first.
pub fn triple_equivalent(
    t1: &BiCayleyTriple,
    t2: &BiCayleyTriple,
) -> Result<Option<(GroupAutomorphism, bool)>> {
    if t1.group != t2.group {
        return Err(Error::InvalidTriple(format!(
            "triples over {} and {}",
            t1.group, t2.group
        )));
    }
    let auts = enumerate_automorphisms(&t1.group)?;
    Ok(triple_equivalent_among(&auts, t1, t2))
}

pub fn triple_equivalent_among(
    auts: &[GroupAutomorphism],
    t1: &BiCayleyTriple,
    t2: &BiCayleyTriple,
) -> Option<(GroupAutomorphism, bool)> {
    let swapped = t1.swapped();
    for (form, swap) in [(t1, false), (&swapped, true)] {
        if let Some(a) = auts.iter().find(|a| form.map(|x| a.apply(x)) == *t2) {
            return Some((a.clone(), swap));
        }
    }
    None
}

#[derive(Clone, Debug, Serialize)]
pub struct SigmaMap {
    pub alpha: GroupAutomorphism,
    pub g: Elem,
    pub perm: Permutation,
}

#[derive(Clone, Debug, Serialize)]
pub struct DeltaMap {
    pub alpha: GroupAutomorphism,
    pub x: Elem,
    pub y: Elem,
    pub perm: Permutation,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiSets {
    pub f: Vec<SigmaMap>,
    pub i: Vec<DeltaMap>,
}

/// Every `σ_{α,g}` with `R^α = R`, `L^α = g⁻¹Lg`, `S^α = g⁻¹S` and every
/// `δ_{α,x,y}` with `R^α = x⁻¹Lx`, `L^α = y⁻¹Ry`, `S^α = y⁻¹S⁻¹x`, found by
/// exhausting `Aut(H) × H` and `Aut(H) × H × H`. Each map is checked to be
/// a graph automorphism.
pub fn compute_f_i(t: &BiCayleyTriple) -> Result<FiSets> {
    let h = t.group;
    let graph = bicayley(t);
    let elements: Vec<Elem> = h.elements().collect();
    let transform = |set: &[Elem], left: Elem, right: Elem| {
        let mut v: Vec<Elem> = set.iter().map(|&z| h.mul(h.mul(left, z), right)).collect();
        v.sort();
        v
    };
    let (r, l, s) = (t.r(), t.l(), t.s());
    let s_inv: Vec<Elem> = s.iter().map(|&z| h.inv(z)).collect();
    let mut f = Vec::new();
    let mut i = Vec::new();
    for alpha in enumerate_automorphisms(&h)? {
        let (ra, la, sa) = (alpha.apply_set(r), alpha.apply_set(l), alpha.apply_set(s));
        if ra == r {
            for &g in &elements {
                let gi = h.inv(g);
                if la == transform(l, gi, g) && sa == transform(s, gi, h.identity()) {
                    f.push(SigmaMap {
                        alpha: alpha.clone(),
                        g,
                        perm: sigma_perm(t, &alpha, g),
                    });
                }
            }
        }
        for &x in &elements {
            if ra != transform(l, h.inv(x), x) {
                continue;
            }
            for &y in &elements {
                let yi = h.inv(y);
                if la == transform(r, yi, y) && sa == transform(&s_inv, yi, x) {
                    i.push(DeltaMap {
                        alpha: alpha.clone(),
                        x,
                        y,
                        perm: delta_perm(t, &alpha, x, y),
                    });
                }
            }
        }
    }
    for p in f.iter().map(|m| &m.perm).chain(i.iter().map(|m| &m.perm)) {
        if !graph.verify_automorphism(p)? {
            return Err(Error::EngineDisagreement(format!(
                "F/I map {p} is not an automorphism"
            )));
        }
    }
    Ok(FiSets { f, i })
}

/// The normalizer of `R(H)` in `Aut(BiCay(H,R,L,S))`, by testing every
/// permutation `h_i ↦ (c_i h^α)_{π(i)}` of the symmetric-group normalizer.
pub fn bicayley_normalizer_brute_force(t: &BiCayleyTriple) -> Result<PermGroup> {
    let h = t.group;
    let graph = bicayley(t);
    let n = 2 * h.order();
    let elements: Vec<Elem> = h.elements().collect();
    let mut found = Vec::new();
    for alpha in enumerate_automorphisms(&h)? {
        let table = alpha.table();
        for swap in [false, true] {
            for &c0 in &elements {
                for &c1 in &elements {
                    let mut images = vec![0u32; n];
                    for (k, &ha) in table.iter().enumerate() {
                        let (s0, s1) = if swap { (1, 0) } else { (0, 1) };
                        images[k] = bicayley_vertex(&h, h.mul(c0, ha), s0);
                        images[h.order() + k] = bicayley_vertex(&h, h.mul(c1, ha), s1);
                    }
                    let p = Permutation::from_images_unchecked(images);
                    if graph.verify_automorphism(&p)? {
                        found.push(p);
                    }
                }
            }
        }
    }
    PermGroup::from_closed_elements(n, found)
}

/// `R(H)` on the bi-Cayley vertex set, closed.
pub fn bicayley_right_regular(t: &BiCayleyTriple) -> Result<PermGroup> {
    let h = t.group;
    let gens = h
        .generators()
        .into_iter()
        .map(|x| bicayley_right_perm(t, x))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::from_generators(2 * h.order(), gens)?.close(h.order())
}

/// A semiregular subgroup of `Aut(Γ)` with two orbits, isomorphic to `spec`.
pub fn is_bicayley_over(g: &Graph, spec: &FcGroup, budget: u64) -> Result<SearchOutcome> {
    if 2 * spec.order() != g.n_vertices() {
        return Err(Error::InvalidParameter(format!(
            "|{spec}| = {} is not half of {} vertices",
            spec.order(),
            g.n_vertices()
        )));
    }
    let aut = automorphism_group(g)?;
    if !aut.is_closed() {
        return Ok(SearchOutcome::Unknown { budget });
    }
    let out = find_semiregular_copy(&aut, spec, budget)?;
    if let SearchOutcome::Found(k) = &out {
        let profile = k.action_profile()?;
        if !profile.semiregular || profile.orbits.len() != 2 {
            return Err(Error::EngineDisagreement(
                "semiregular copy has the wrong orbit structure".into(),
            ));
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    ArcTransitive,
    Normal,
    CrossLadder,
    Vnc(u8),
}

impl std::fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilyTag::ArcTransitive => write!(f, "AT"),
            FamilyTag::Normal => write!(f, "normal"),
            FamilyTag::CrossLadder => write!(f, "cross-ladder"),
            FamilyTag::Vnc(k) => write!(f, "VNC-{k}"),
        }
    }
}

impl Serialize for FamilyTag {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The automorphism taking `S` to `{b, ba, ba^{n/2}}` and the composed
/// isomorphism onto the cross ladder.
#[derive(Clone, Debug, Serialize)]
pub struct CrossLadderForm {
    pub alpha: String,
    pub iso: IsoWitness,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassReport {
    pub graph: String,
    pub vertices: usize,
    pub edges: usize,
    pub aut_order: Option<u128>,
    pub vertex_transitive: bool,
    pub arc_transitive: bool,
    pub cayley: CayleyVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normal_cayley: Option<bool>,
    pub family_tag: Option<FamilyTag>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cross_ladder: Option<CrossLadderForm>,
}

/// Generic report for any graph.
pub fn analyze(id: &str, g: &Graph, budget: u64) -> Result<ClassReport> {
    let aut = automorphism_group(g)?;
    Ok(ClassReport {
        graph: id.into(),
        vertices: g.n_vertices(),
        edges: g.n_edges(),
        aut_order: aut.order(),
        vertex_transitive: aut.is_transitive(),
        arc_transitive: arc_transitive_under(g, &aut),
        cayley: is_cayley_under(g, &aut, budget)?,
        normal_cayley: None,
        family_tag: None,
        cross_ladder: None,
    })
}

/// `{b, ba, ba^{n/2}}` reached from `S` by some `α ∈ Aut(D_{2n})`, with the
/// isomorphism `g ↦ φ(g^α)` onto the cross ladder validated.
pub fn cross_ladder_form(set: &CayleySet) -> Result<Option<CrossLadderForm>> {
    let group = set.group;
    let FcGroup::Dihedral(n) = group else {
        return Ok(None);
    };
    if n < 4 || n % 2 != 0 || set.elements().len() != 3 {
        return Ok(None);
    }
    let target = crate::witnesses::crossladder_cayley_set(n)?;
    let Some(alpha) = enumerate_automorphisms(&group)?
        .into_iter()
        .find(|a| a.apply_set(set.elements()) == target.elements())
    else {
        return Ok(None);
    };
    let phi = crossladder_iso(n)?;
    let phi = phi
        .isomorphism()
        .ok_or_else(|| Error::EngineDisagreement("cross-ladder map failed".into()))?;
    let map = group
        .elements()
        .map(|g| phi.map[group.index(alpha.apply(g))])
        .collect();
    let iso = IsoWitness::new(map, format!("Cay(D_2n,S) to CL via {}", alpha.describe()));
    let cl = crate::constructions::cross_ladder(n / 2)?;
    if !iso.validate(&cayley(set), &cl) {
        return Err(Error::EngineDisagreement(
            "composed cross-ladder isomorphism does not validate".into(),
        ));
    }
    Ok(Some(CrossLadderForm {
        alpha: alpha.describe(),
        iso,
    }))
}

/// Arc-transitivity, normality and the cross-ladder form of a trivalent
/// dihedrant, each computed on its own; the tag takes the first that holds
/// in that order.
pub fn classify_dihedrant(set: &CayleySet) -> Result<ClassReport> {
    let group = set.group;
    let graph = cayley(set);
    let aut = automorphism_group(&graph)?;
    let arc_transitive = arc_transitive_under(&graph, &aut);
    let normal = normal_cayley_under(set, &graph, &aut)?;
    let cross = cross_ladder_form(set)?;
    let family_tag = if arc_transitive {
        Some(FamilyTag::ArcTransitive)
    } else if normal {
        Some(FamilyTag::Normal)
    } else if cross.is_some() {
        Some(FamilyTag::CrossLadder)
    } else {
        None
    };
    let witness = confirm_regular(&graph, right_regular(&group)?)?;
    Ok(ClassReport {
        graph: format!("cay:{}:{}", group, group.format_set(set.elements())),
        vertices: graph.n_vertices(),
        edges: graph.n_edges(),
        aut_order: aut.order(),
        vertex_transitive: aut.is_transitive(),
        arc_transitive,
        cayley: CayleyVerdict::Yes(witness),
        normal_cayley: Some(normal),
        family_tag,
        cross_ladder: cross,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{generalized_petersen, mcl_triple, multi_cross_ladder};
    use crate::graphs::Graph;

    fn dihedral_set(n: u32, s: &str) -> CayleySet {
        let g = FcGroup::dihedral(n).unwrap();
        CayleySet::new(g, &g.parse_set(s).unwrap()).unwrap()
    }

    #[test]
    fn transitivity_examples() {
        let star = Graph::complete_bipartite(1, 3);
        assert!(!is_vertex_transitive(&star).unwrap());
        assert!(is_arc_transitive(&Graph::complete(4)).unwrap());
        assert!(!is_arc_transitive(&generalized_petersen(6, 1).unwrap()).unwrap());
        assert!(!is_arc_transitive(&cayley(&dihedral_set(6, "b,b.a,b.a^3"))).unwrap());
        assert!(is_vertex_transitive(&multi_cross_ladder(3).unwrap()).unwrap());
    }

    #[test]
    fn cayley_examples() {
        let petersen = generalized_petersen(5, 2).unwrap();
        assert_eq!(
            is_cayley(&petersen, DEFAULT_BUDGET).unwrap().verdict(),
            Verdict::No
        );
        let m4 = multi_cross_ladder(4).unwrap();
        let v = is_cayley(&m4, DEFAULT_BUDGET).unwrap();
        assert_eq!(v.verdict(), Verdict::Yes);
        assert_eq!(v.witness().unwrap().order(), Some(32));
        assert_eq!(
            is_cayley(&multi_cross_ladder(5).unwrap(), DEFAULT_BUDGET)
                .unwrap()
                .verdict(),
            Verdict::No
        );
    }

    #[test]
    fn normality_examples() {
        assert!(!is_normal_cayley(&dihedral_set(6, "b,b.a,b.a^3")).unwrap());
        assert!(!is_normal_cayley(&dihedral_set(3, "b,b.a,b.a^2")).unwrap());
        is_normal_cayley(&dihedral_set(5, "b,b.a,b.a^2")).unwrap();
        assert!(is_normal_cayley(&dihedral_set(5, "b,a,a^-1")).unwrap());
    }

    #[test]
    fn triple_equivalence_examples() {
        let h = FcGroup::dihedral(10).unwrap();
        let t = BiCayleyTriple::parse(h, "b,b.a", "b,b.a^4", "1").unwrap();
        let (alpha, swapped) = triple_equivalent(&t, &t).unwrap().unwrap();
        assert!(alpha.is_identity() && !swapped);
        let u = BiCayleyTriple::parse(h, "b,b.a^3", "b,b.a^2", "1").unwrap();
        assert!(triple_equivalent(&t, &u).unwrap().is_some());
        let h6 = FcGroup::dihedral(6).unwrap();
        let p = BiCayleyTriple::parse(h6, "b,b.a", "b,b.a^2", "1").unwrap();
        let q = BiCayleyTriple::parse(h6, "b,b.a", "a,a^-1", "1").unwrap();
        assert!(triple_equivalent(&p, &q).unwrap().is_none());
    }

    #[test]
    fn f_and_i_sets() {
        let t = mcl_triple(2).unwrap();
        let fi = compute_f_i(&t).unwrap();
        assert!(fi
            .f
            .iter()
            .any(|m| m.alpha.is_identity() && m.g == t.group.identity() && m.perm.is_identity()));
        let h = t.group;
        let ca = h.parse_elem("c.a").unwrap();
        let alpha = GroupAutomorphism::new(
            h,
            vec![
                h.parse_elem("a.b").unwrap(),
                h.elem(0, 1, 0),
                h.parse_elem("c.b").unwrap(),
            ],
        )
        .unwrap();
        assert!(fi
            .i
            .iter()
            .any(|m| m.alpha == alpha && m.x == ca && m.y == ca));
    }

    #[test]
    fn bicayley_over_examples() {
        let petersen = generalized_petersen(5, 2).unwrap();
        assert!(
            is_bicayley_over(&petersen, &FcGroup::Cyclic(5), DEFAULT_BUDGET)
                .unwrap()
                .found()
                .is_some()
        );
        assert!(
            is_bicayley_over(&Graph::complete(4), &FcGroup::Cyclic(2), DEFAULT_BUDGET)
                .unwrap()
                .found()
                .is_some()
        );
        assert!(is_bicayley_over(&petersen, &FcGroup::Cyclic(4), DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn classifier_examples() {
        let r = classify_dihedrant(&dihedral_set(6, "b,b.a,b.a^3")).unwrap();
        assert_eq!(r.family_tag, Some(FamilyTag::CrossLadder));
        assert!(r.cross_ladder.is_some());
        let r = classify_dihedrant(&dihedral_set(5, "b,a,a^-1")).unwrap();
        assert_eq!(r.family_tag, Some(FamilyTag::Normal));
        assert_eq!(r.aut_order, Some(20));
        let r = classify_dihedrant(&dihedral_set(3, "b,b.a,b.a^2")).unwrap();
        assert_eq!(r.family_tag, Some(FamilyTag::ArcTransitive));
        assert_eq!(r.aut_order, Some(72));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["family_tag"], "AT");
        assert_eq!(json["cayley"]["verdict"], "yes");
    }
}
