//! Builders for the graph families, with frozen vertex numberings.
//!
//! * Cayley graphs: vertex `g` is `G::index(g)`.
//! * bi-Cayley graphs: `h_0` is `index(h)`, `h_1` is `|H| + index(h)`.
//! * cross ladder: `x_i^r` is `2i + r` for `i` in `0..2m`.
//! * multi-cross ladder: `x_i^{r,s}` is `4i + 2r + s`.
//! * generalized Petersen: `u_i` is `i`, `v_i` is `n + i`.
//! * `C_m[2K_1]`: `C_j^x` is `2j + x`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{Graph, VertexLabel};
use crate::groups::{gcd, Elem, FcGroup, GroupAutomorphism};
use crate::perms::Permutation;

fn sorted_set(set: &[Elem]) -> Vec<Elem> {
    let mut v = set.to_vec();
    v.sort();
    v.dedup();
    v
}

fn is_inverse_closed(group: &FcGroup, set: &[Elem]) -> bool {
    let s: BTreeSet<Elem> = set.iter().copied().collect();
    s.iter().all(|&x| s.contains(&group.inv(x)))
}

/// An inverse-closed connection set without the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CayleySet {
    pub group: FcGroup,
    set: Vec<Elem>,
}

impl CayleySet {
    pub fn new(group: FcGroup, set: &[Elem]) -> Result<Self> {
        for &x in set {
            group
                .validate(x)
                .map_err(|e| Error::InvalidConnectionSet(e.to_string()))?;
        }
        let set = sorted_set(set);
        if set.contains(&group.identity()) {
            return Err(Error::InvalidConnectionSet("contains the identity".into()));
        }
        if !is_inverse_closed(&group, &set) {
            return Err(Error::InvalidConnectionSet(format!(
                "{{{}}} is not inverse-closed",
                group.format_set(&set)
            )));
        }
        Ok(CayleySet { group, set })
    }

    pub fn elements(&self) -> &[Elem] {
        &self.set
    }
}

/// `(R, L, S)` with `R`, `L` inverse-closed and free of the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BiCayleyTriple {
    pub group: FcGroup,
    r: Vec<Elem>,
    l: Vec<Elem>,
    s: Vec<Elem>,
}

impl BiCayleyTriple {
    pub fn new(group: FcGroup, r: &[Elem], l: &[Elem], s: &[Elem]) -> Result<Self> {
        for &x in r.iter().chain(l).chain(s) {
            group
                .validate(x)
                .map_err(|e| Error::InvalidTriple(e.to_string()))?;
        }
        let (r, l, s) = (sorted_set(r), sorted_set(l), sorted_set(s));
        for (name, set) in [("R", &r), ("L", &l)] {
            if set.contains(&group.identity()) {
                return Err(Error::InvalidTriple(format!(
                    "{name} contains the identity"
                )));
            }
            if !is_inverse_closed(&group, set) {
                return Err(Error::InvalidTriple(format!(
                    "{name} is not inverse-closed"
                )));
            }
        }
        if s.is_empty() {
            return Err(Error::InvalidTriple("S is empty".into()));
        }
        Ok(BiCayleyTriple { group, r, l, s })
    }

    pub fn parse(group: FcGroup, r: &str, l: &str, s: &str) -> Result<Self> {
        BiCayleyTriple::new(
            group,
            &group.parse_set(r)?,
            &group.parse_set(l)?,
            &group.parse_set(s)?,
        )
    }

    pub fn r(&self) -> &[Elem] {
        &self.r
    }

    pub fn l(&self) -> &[Elem] {
        &self.l
    }

    pub fn s(&self) -> &[Elem] {
        &self.s
    }

    /// Whether `1 ∈ S`.
    pub fn is_normalized(&self) -> bool {
        self.s.contains(&self.group.identity())
    }

    /// `|R|` when `|R| = |L|`.
    pub fn s_type(&self) -> Option<usize> {
        (self.r.len() == self.l.len()).then_some(self.r.len())
    }

    /// Image under an element map, keeping the sets sorted.
    pub fn map(&self, f: impl Fn(Elem) -> Elem) -> BiCayleyTriple {
        let m = |set: &[Elem]| sorted_set(&set.iter().map(|&x| f(x)).collect::<Vec<_>>());
        BiCayleyTriple {
            group: self.group,
            r: m(&self.r),
            l: m(&self.l),
            s: m(&self.s),
        }
    }

    /// `(L, R, S^-1)`.
    pub fn swapped(&self) -> BiCayleyTriple {
        let g = self.group;
        BiCayleyTriple {
            group: g,
            r: self.l.clone(),
            l: self.r.clone(),
            s: sorted_set(&self.s.iter().map(|&x| g.inv(x)).collect::<Vec<_>>()),
        }
    }

    pub fn describe(&self) -> String {
        let g = &self.group;
        format!(
            "{}|{}|{}",
            g.format_set(&self.r),
            g.format_set(&self.l),
            g.format_set(&self.s)
        )
    }
}

/// Vertex of `h_side` in a bi-Cayley graph over `group`.
pub fn bicayley_vertex(group: &FcGroup, h: Elem, side: u8) -> u32 {
    (side as usize * group.order() + group.index(h)) as u32
}

/// Inverse of [`bicayley_vertex`].
pub fn bicayley_point(group: &FcGroup, v: u32) -> (Elem, u8) {
    let n = group.order();
    let v = v as usize;
    (group.element(v % n), (v / n) as u8)
}

pub fn cayley(set: &CayleySet) -> Graph {
    let g = set.group;
    let edges = g
        .elements()
        .flat_map(|x| {
            set.set
                .iter()
                .map(move |&s| (g.index(x) as u32, g.index(g.mul(s, x)) as u32))
        })
        .collect::<Vec<_>>();
    let labels = g
        .elements()
        .map(|x| VertexLabel::Element {
            elem: g.format_elem(x),
            side: None,
        })
        .collect();
    Graph::from_edges(g.order(), edges)
        .and_then(|gr| gr.with_labels(labels))
        .expect("connection set was validated")
}

pub fn bicayley(t: &BiCayleyTriple) -> Graph {
    let g = t.group;
    let mut edges = Vec::new();
    for h in g.elements() {
        for &r in &t.r {
            edges.push((
                bicayley_vertex(&g, h, 0),
                bicayley_vertex(&g, g.mul(r, h), 0),
            ));
        }
        for &l in &t.l {
            edges.push((
                bicayley_vertex(&g, h, 1),
                bicayley_vertex(&g, g.mul(l, h), 1),
            ));
        }
        for &s in &t.s {
            edges.push((
                bicayley_vertex(&g, h, 0),
                bicayley_vertex(&g, g.mul(s, h), 1),
            ));
        }
    }
    let labels = (0..2u8)
        .flat_map(|side| {
            g.elements().map(move |x| VertexLabel::Element {
                elem: g.format_elem(x),
                side: Some(side),
            })
        })
        .collect();
    Graph::from_edges(2 * g.order(), edges)
        .and_then(|gr| gr.with_labels(labels))
        .expect("triple was validated")
}

/// Right multiplication `x ↦ xg` on a Cayley graph's vertices.
pub fn cayley_right_perm(group: &FcGroup, g: Elem) -> Result<Permutation> {
    group.validate(g)?;
    let images = group
        .elements()
        .map(|x| group.index(group.mul(x, g)) as u32)
        .collect();
    Ok(Permutation::from_images_unchecked(images))
}

/// `R(g): h_i ↦ (hg)_i`.
pub fn bicayley_right_perm(t: &BiCayleyTriple, g: Elem) -> Result<Permutation> {
    let grp = t.group;
    grp.validate(g)?;
    let images = (0..2u8)
        .flat_map(|side| {
            grp.elements()
                .map(move |h| bicayley_vertex(&grp, grp.mul(h, g), side))
        })
        .collect();
    Ok(Permutation::from_images_unchecked(images))
}

/// `σ_{α,g}: h_0 ↦ (h^α)_0, h_1 ↦ (g h^α)_1`.
pub fn sigma_perm(t: &BiCayleyTriple, alpha: &GroupAutomorphism, g: Elem) -> Permutation {
    let grp = t.group;
    let images = (0..2u8)
        .flat_map(|side| {
            grp.elements().map(move |h| {
                let ha = alpha.apply(h);
                match side {
                    0 => bicayley_vertex(&grp, ha, 0),
                    _ => bicayley_vertex(&grp, grp.mul(g, ha), 1),
                }
            })
        })
        .collect();
    Permutation::from_images_unchecked(images)
}

/// `δ_{α,x,y}: h_0 ↦ (x h^α)_1, h_1 ↦ (y h^α)_0`.
pub fn delta_perm(t: &BiCayleyTriple, alpha: &GroupAutomorphism, x: Elem, y: Elem) -> Permutation {
    let grp = t.group;
    let images = (0..2u8)
        .flat_map(|side| {
            grp.elements().map(move |h| {
                let ha = alpha.apply(h);
                match side {
                    0 => bicayley_vertex(&grp, grp.mul(x, ha), 1),
                    _ => bicayley_vertex(&grp, grp.mul(y, ha), 0),
                }
            })
        })
        .collect();
    Permutation::from_images_unchecked(images)
}

pub fn cross_ladder_vertex(i: i64, r: u8, m: u32) -> u32 {
    (2 * i.rem_euclid(2 * m as i64) as u32) + r as u32
}

pub fn cross_ladder(m: u32) -> Result<Graph> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "cross ladder needs m >= 2, got {m}"
        )));
    }
    let x = |i: i64, r: u8| cross_ladder_vertex(i, r, m);
    let mut edges = Vec::new();
    for i in 0..m as i64 {
        for r in 0..2 {
            edges.push((x(2 * i, r), x(2 * i + 1, r)));
            for s in 0..2 {
                edges.push((x(2 * i + 1, r), x(2 * i + 2, s)));
            }
        }
    }
    let labels = (0..2 * m)
        .flat_map(|i| (0..2u8).map(move |r| VertexLabel::Ladder { i, r, s: None }))
        .collect();
    Graph::from_edges(4 * m as usize, edges)?.with_labels(labels)
}

pub fn multi_cross_ladder_vertex(i: i64, r: u8, s: u8, m: u32) -> u32 {
    4 * i.rem_euclid(2 * m as i64) as u32 + 2 * r as u32 + s as u32
}

pub fn multi_cross_ladder(m: u32) -> Result<Graph> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "multi-cross ladder needs m >= 2, got {m}"
        )));
    }
    let x = |i: i64, r: u8, s: u8| multi_cross_ladder_vertex(i, r, s, m);
    let mut edges = Vec::new();
    for i in 0..m as i64 {
        for r in 0..2 {
            for s in 0..2 {
                for t in 0..2 {
                    edges.push((x(2 * i, r, s), x(2 * i + 1, r, t)));
                }
                edges.push((x(2 * i + 1, r, s), x(2 * i + 2, s, r)));
            }
        }
    }
    let labels = (0..2 * m)
        .flat_map(|i| {
            (0..4u8).map(move |k| VertexLabel::Ladder {
                i,
                r: k / 2,
                s: Some(k % 2),
            })
        })
        .collect();
    Graph::from_edges(8 * m as usize, edges)?.with_labels(labels)
}

/// The partition of a multi-cross ladder into the 4-cycles
/// `{x_{2i}^{r,*}, x_{2i+1}^{r,*}}`.
pub fn multi_cross_ladder_four_cycles(m: u32) -> Result<crate::perms::Partition> {
    let x = |i: i64, r: u8, s: u8| multi_cross_ladder_vertex(i, r, s, m);
    let cells = (0..m as i64)
        .flat_map(|i| {
            (0..2u8).map(move |r| {
                vec![
                    x(2 * i, r, 0),
                    x(2 * i, r, 1),
                    x(2 * i + 1, r, 0),
                    x(2 * i + 1, r, 1),
                ]
            })
        })
        .collect();
    crate::perms::Partition::new(8 * m as usize, cells)
}

pub fn generalized_petersen(n: u32, t: u32) -> Result<Graph> {
    if n < 3 || t < 1 || 2 * t >= n {
        return Err(Error::InvalidParameter(format!(
            "P({n},{t}) needs n >= 3 and 1 <= t < n/2"
        )));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((n + i, n + (i + t) % n));
        edges.push((i, n + i));
    }
    let labels = [true, false]
        .into_iter()
        .flat_map(|outer| (0..n).map(move |i| VertexLabel::Petersen { outer, i }))
        .collect();
    Graph::from_edges(2 * n as usize, edges)?.with_labels(labels)
}

/// `C_m[2K_1]`: `C_j^x ~ C_{j+1}^y` for all `x, y`.
pub fn lex_cycle_product(m: u32) -> Result<Graph> {
    if m < 3 {
        return Err(Error::InvalidParameter(format!(
            "C_m[2K_1] needs m >= 3, got {m}"
        )));
    }
    let mut edges = Vec::new();
    for j in 0..m {
        for x in 0..2 {
            for y in 0..2 {
                edges.push((2 * j + x, 2 * ((j + 1) % m) + y));
            }
        }
    }
    let labels = (0..m)
        .flat_map(|j| (0..2u8).map(move |x| VertexLabel::Lex { j, x }))
        .collect();
    Graph::from_edges(2 * m as usize, edges)?.with_labels(labels)
}

/// Parameters of the four families of vertex-transitive non-Cayley
/// bi-dihedrants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum FamilyParams {
    /// `n >= 5`, `ℓ³+ℓ²+ℓ+1 ≡ 0` and `ℓ² ≢ 1 (mod n)`.
    #[serde(rename = "1")]
    One { n: u32, l: i64 },
    /// `n = 2m`, `ℓ² ≡ -1 (mod m)`.
    #[serde(rename = "2")]
    Two { n: u32, l: i64 },
    /// `n = 2(2m+1)`, `m ≢ 1 (mod 3)`.
    #[serde(rename = "3")]
    Three { m: u32 },
    /// `n = 48ℓ`.
    #[serde(rename = "4")]
    Four { l: u32 },
}

impl FamilyParams {
    pub fn number(&self) -> u8 {
        match self {
            FamilyParams::One { .. } => 1,
            FamilyParams::Two { .. } => 2,
            FamilyParams::Three { .. } => 3,
            FamilyParams::Four { .. } => 4,
        }
    }

    /// The modulus `n` of the dihedral group `D_{2n}`.
    pub fn modulus(&self) -> u32 {
        match *self {
            FamilyParams::One { n, .. } | FamilyParams::Two { n, .. } => n,
            FamilyParams::Three { m } => 2 * (2 * m + 1),
            FamilyParams::Four { l } => 48 * l,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidParameter(msg));
        match *self {
            FamilyParams::One { n, l } => {
                if n < 5 {
                    return fail(format!("family 1 needs n >= 5, got {n}"));
                }
                let n = n as i64;
                let l = l.rem_euclid(n);
                if (l * l % n * l + l * l + l + 1) % n != 0 {
                    return fail(format!("family 1 needs l^3+l^2+l+1 = 0 mod {n}"));
                }
                if (l * l - 1).rem_euclid(n) == 0 {
                    return fail(format!("family 1 needs l^2 != 1 mod {n}"));
                }
            }
            FamilyParams::Two { n, l } => {
                if n < 4 || n % 2 != 0 {
                    return fail(format!("family 2 needs n = 2m even, got {n}"));
                }
                let m = (n / 2) as i64;
                if (l * l + 1).rem_euclid(m) != 0 {
                    return fail(format!("family 2 needs l^2 = -1 mod {m}"));
                }
            }
            FamilyParams::Three { m } => {
                if m == 0 {
                    return fail("family 3 needs m >= 1".into());
                }
                if m % 3 == 1 {
                    return fail(format!("family 3 needs m != 1 mod 3, got m = {m}"));
                }
            }
            FamilyParams::Four { l } => {
                if l == 0 {
                    return fail("family 4 needs l >= 1".into());
                }
            }
        }
        Ok(())
    }

    /// The defining triple over `D_{2n}`.
    pub fn triple(&self) -> Result<BiCayleyTriple> {
        self.validate()?;
        let g = FcGroup::dihedral(self.modulus())?;
        let ba = |i: i64| g.ba(i);
        let one = [g.identity()];
        match *self {
            FamilyParams::One { l, .. } => {
                BiCayleyTriple::new(g, &[ba(0), ba(l + 1)], &[ba(1), ba(l * l + l + 1)], &one)
            }
            FamilyParams::Two { l, .. } => {
                BiCayleyTriple::new(g, &[ba(-l), ba(l)], &[g.a(1), g.a(-1)], &one)
            }
            FamilyParams::Three { m } => {
                BiCayleyTriple::new(g, &[ba(0), ba(1)], &[ba(0), ba(2 * m as i64)], &one)
            }
            FamilyParams::Four { l } => {
                let l = l as i64;
                BiCayleyTriple::new(g, &[ba(0), ba(1)], &[ba(24 * l), ba(12 * l - 1)], &one)
            }
        }
    }
}

/// Group, triple and graph of a family member.
pub fn family_builder(params: &FamilyParams) -> Result<(FcGroup, BiCayleyTriple, Graph)> {
    let t = params.triple()?;
    let graph = bicayley(&t);
    Ok((t.group, t, graph))
}

/// The triple `({c, ca}, {ca, ca²b}, {1})` over the `⟨a,b,c⟩` group.
pub fn mcl_triple(m: u32) -> Result<BiCayleyTriple> {
    let g = FcGroup::mcl(m)?;
    BiCayleyTriple::parse(g, "c,c.a", "c.a,c.a^2.b", "1")
}

/// For odd `m`, the triple `({f, fe}, {f, fe^{m-1}}, {1})` over
/// `D_{4m} = ⟨e, f⟩`.
pub fn mcl_dihedral_triple(m: u32) -> Result<BiCayleyTriple> {
    if m % 2 == 0 {
        return Err(Error::InvalidParameter(format!("m = {m} must be odd")));
    }
    let g = FcGroup::dihedral(2 * m)?;
    BiCayleyTriple::new(
        g,
        &[g.ba(0), g.ba(1)],
        &[g.ba(0), g.ba(m as i64 - 1)],
        &[g.identity()],
    )
}

pub fn is_unit(x: i64, n: u32) -> bool {
    gcd(x.rem_euclid(n as i64) as u64, n as u64) == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::are_isomorphic;

    #[test]
    fn connection_sets_validate() {
        let d = FcGroup::Dihedral(4);
        assert!(CayleySet::new(d, &[d.a(1)]).is_err());
        assert!(CayleySet::new(d, &[d.identity()]).is_err());
        assert!(CayleySet::new(d, &[d.a(1), d.a(3), d.ba(0)]).is_ok());
        assert!(BiCayleyTriple::new(d, &[d.a(1)], &[], &[d.identity()]).is_err());
        assert!(BiCayleyTriple::new(d, &[], &[], &[]).is_err());
    }

    #[test]
    fn small_cayley_graphs() {
        let d6 = FcGroup::Dihedral(3);
        let k33 = cayley(&CayleySet::new(d6, &[d6.ba(0), d6.ba(1), d6.ba(2)]).unwrap());
        assert_eq!(k33.regular_degree(), Some(3));
        assert!(are_isomorphic(&k33, &Graph::complete_bipartite(3, 3))
            .unwrap()
            .is_some());
        let d8 = FcGroup::Dihedral(4);
        let m = cayley(&CayleySet::new(d8, &[d8.a(2)]).unwrap());
        assert_eq!(m.regular_degree(), Some(1));
        assert!(!m.is_connected());
    }

    #[test]
    fn bicayley_degrees_and_matching() {
        let d6 = FcGroup::Dihedral(3);
        let t = BiCayleyTriple::new(d6, &[], &[], &[d6.identity()]).unwrap();
        let g = bicayley(&t);
        assert_eq!(g.regular_degree(), Some(1));
        assert_eq!(g.n_edges(), 6);
        let t = BiCayleyTriple::new(
            d6,
            &[d6.ba(0)],
            &[d6.a(1), d6.a(2)],
            &[d6.identity(), d6.a(1)],
        )
        .unwrap();
        let g = bicayley(&t);
        for h in 0..6 {
            assert_eq!(g.degree(h), 3);
            assert_eq!(g.degree(6 + h), 4);
        }
    }

    #[test]
    fn petersen_as_bicirculant() {
        let z5 = FcGroup::Cyclic(5);
        let t = BiCayleyTriple::parse(z5, "a,a^-1", "a^2,a^-2", "1").unwrap();
        let g = bicayley(&t);
        assert!(are_isomorphic(&g, &generalized_petersen(5, 2).unwrap())
            .unwrap()
            .is_some());
        let r = bicayley_right_perm(&t, z5.a(1)).unwrap();
        assert!(g.verify_automorphism(&r).unwrap());
        assert_eq!(r.cycle_lengths(), vec![5, 5]);
    }

    #[test]
    fn ladders() {
        let cl = cross_ladder(2).unwrap();
        assert_eq!(
            (cl.n_vertices(), cl.n_edges(), cl.regular_degree()),
            (8, 12, Some(3))
        );
        let mcl = multi_cross_ladder(5).unwrap();
        assert_eq!(
            (mcl.n_vertices(), mcl.n_edges(), mcl.regular_degree()),
            (40, 60, Some(3))
        );
        for v in 0..40 {
            assert_eq!(mcl.count_cycles_through(&[v], 4), 1);
        }
        assert!(cross_ladder(1).is_err());
        assert!(multi_cross_ladder(1).is_err());
    }

    #[test]
    fn four_cycle_quotient_is_lex_product() {
        for m in 3..=6 {
            let q = multi_cross_ladder(m)
                .unwrap()
                .quotient(&multi_cross_ladder_four_cycles(m).unwrap())
                .unwrap();
            assert!(are_isomorphic(&q, &lex_cycle_product(m).unwrap())
                .unwrap()
                .is_some());
        }
    }

    #[test]
    fn petersen_family() {
        let cube = Graph::from_edges(
            8,
            [
                (0, 1),
                (1, 3),
                (3, 2),
                (2, 0),
                (4, 5),
                (5, 7),
                (7, 6),
                (6, 4),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
            ],
        )
        .unwrap();
        assert!(are_isomorphic(&generalized_petersen(4, 1).unwrap(), &cube)
            .unwrap()
            .is_some());
        assert!(generalized_petersen(6, 3).is_err());
        let octahedron = Graph::from_edges(
            6,
            (0..6u32).flat_map(|u| {
                (u + 1..6)
                    .filter(move |&v| v != u + 3 || u >= 3)
                    .map(move |v| (u, v))
            }),
        )
        .unwrap();
        assert_eq!(octahedron.regular_degree(), Some(4));
        assert!(are_isomorphic(&lex_cycle_product(3).unwrap(), &octahedron)
            .unwrap()
            .is_some());
    }

    #[test]
    fn family_congruences() {
        assert!(FamilyParams::One { n: 15, l: 2 }.validate().is_ok());
        assert!(FamilyParams::One { n: 15, l: 1 }.validate().is_err());
        assert!(FamilyParams::One { n: 15, l: 4 }.validate().is_err());
        assert!(FamilyParams::Two { n: 10, l: 2 }.validate().is_ok());
        assert!(FamilyParams::Two { n: 10, l: 1 }.validate().is_err());
        assert!(FamilyParams::Three { m: 2 }.validate().is_ok());
        assert!(FamilyParams::Three { m: 4 }.validate().is_err());
        assert!(FamilyParams::Four { l: 0 }.validate().is_err());
        let (g, t, graph) = family_builder(&FamilyParams::One { n: 15, l: 2 }).unwrap();
        assert_eq!(g, FcGroup::Dihedral(15));
        assert_eq!(t.r(), &[g.ba(0), g.ba(3)]);
        assert_eq!(graph.n_vertices(), 60);
        assert_eq!(graph.regular_degree(), Some(3));
        let (_, _, graph) = family_builder(&FamilyParams::Four { l: 1 }).unwrap();
        assert_eq!(graph.n_vertices(), 192);
    }
}
