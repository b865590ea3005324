//! Finite groups with a fixed normal form: dihedral groups, the group
//! `⟨a,b,c | a^m = b^2 = c^2 = 1, a^b = a, a^c = a^-1, b^c = b⟩`, and the two
//! small abelian groups needed for bi-circulants.
//!
//! Every element is stored as `c^k b^j a^i` with canonical exponents, so
//! equality is a tuple comparison. Groups without a `c` (or `b`) generator
//! keep that exponent at zero.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default order cap for exhaustive automorphism enumeration.
pub const DEFAULT_AUT_CAP: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "n", rename_all = "snake_case")]
pub enum FcGroup {
    /// `D_{2n} = ⟨a, b | a^n = b^2 = 1, bab = a^-1⟩`.
    Dihedral(u32),
    /// `⟨a, b, c⟩` of order `4m`.
    Mcl(u32),
    /// `Z_n = ⟨a⟩`.
    Cyclic(u32),
    /// `Z_n × Z_2 = ⟨a⟩ × ⟨b⟩`.
    CyclicByTwo(u32),
}

/// Group element in normal form `c^c b^b a^a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Elem {
    pub c: u8,
    pub b: u8,
    pub a: u32,
}

impl Elem {
    pub const IDENTITY: Elem = Elem { c: 0, b: 0, a: 0 };
}

fn reduce(x: i64, n: u32) -> u32 {
    x.rem_euclid(n as i64) as u32
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Euler's totient, by trial division.
pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

impl FcGroup {
    pub fn dihedral(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "dihedral modulus must be positive".into(),
            ));
        }
        Ok(FcGroup::Dihedral(n))
    }

    pub fn mcl(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter(
                "mcl modulus must be positive".into(),
            ));
        }
        Ok(FcGroup::Mcl(m))
    }

    /// The order of the generator `a`.
    pub fn modulus(&self) -> u32 {
        match *self {
            FcGroup::Dihedral(n)
            | FcGroup::Mcl(n)
            | FcGroup::Cyclic(n)
            | FcGroup::CyclicByTwo(n) => n,
        }
    }

    pub fn order(&self) -> usize {
        let n = self.modulus() as usize;
        match self {
            FcGroup::Dihedral(_) | FcGroup::CyclicByTwo(_) => 2 * n,
            FcGroup::Mcl(_) => 4 * n,
            FcGroup::Cyclic(_) => n,
        }
    }

    pub fn is_abelian(&self) -> bool {
        match *self {
            FcGroup::Cyclic(_) | FcGroup::CyclicByTwo(_) => true,
            FcGroup::Dihedral(n) => n <= 2,
            FcGroup::Mcl(m) => m <= 2,
        }
    }

    fn has_b(&self) -> bool {
        !matches!(self, FcGroup::Cyclic(_))
    }

    fn has_c(&self) -> bool {
        matches!(self, FcGroup::Mcl(_))
    }

    /// Generators in the order `a, b, c` (as far as the group has them).
    pub fn generators(&self) -> Vec<Elem> {
        let mut gens = vec![Elem {
            c: 0,
            b: 0,
            a: 1 % self.modulus(),
        }];
        if self.has_b() {
            gens.push(Elem { c: 0, b: 1, a: 0 });
        }
        if self.has_c() {
            gens.push(Elem { c: 1, b: 0, a: 0 });
        }
        gens
    }

    pub fn identity(&self) -> Elem {
        Elem::IDENTITY
    }

    /// Builds `c^c b^b a^a`, reducing every exponent into range.
    pub fn elem(&self, c: i64, b: i64, a: i64) -> Elem {
        let c = if self.has_c() {
            c.rem_euclid(2) as u8
        } else {
            0
        };
        let b = if self.has_b() {
            b.rem_euclid(2) as u8
        } else {
            0
        };
        Elem {
            c,
            b,
            a: reduce(a, self.modulus()),
        }
    }

    /// `a^i`.
    pub fn a(&self, i: i64) -> Elem {
        self.elem(0, 0, i)
    }

    /// `b a^i`.
    pub fn ba(&self, i: i64) -> Elem {
        self.elem(0, 1, i)
    }

    pub fn validate(&self, e: Elem) -> Result<()> {
        let ok = e.a < self.modulus()
            && e.b < 2
            && e.c < 2
            && (self.has_b() || e.b == 0)
            && (self.has_c() || e.c == 0);
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidElement(format!("{:?} is not in {}", e, self)))
        }
    }

    pub fn mul(&self, g: Elem, h: Elem) -> Elem {
        let n = self.modulus() as i64;
        match self {
            FcGroup::Dihedral(_) => {
                let a = if h.b == 1 { -(g.a as i64) } else { g.a as i64 } + h.a as i64;
                Elem {
                    c: 0,
                    b: g.b ^ h.b,
                    a: reduce(a, n as u32),
                }
            }
            FcGroup::Mcl(_) => {
                let a = if h.c == 1 { -(g.a as i64) } else { g.a as i64 } + h.a as i64;
                Elem {
                    c: g.c ^ h.c,
                    b: g.b ^ h.b,
                    a: reduce(a, n as u32),
                }
            }
            FcGroup::Cyclic(_) | FcGroup::CyclicByTwo(_) => Elem {
                c: 0,
                b: g.b ^ h.b,
                a: ((g.a as i64 + h.a as i64) % n) as u32,
            },
        }
    }

    pub fn try_mul(&self, g: Elem, h: Elem) -> Result<Elem> {
        self.validate(g)?;
        self.validate(h)?;
        Ok(self.mul(g, h))
    }

    pub fn inv(&self, g: Elem) -> Elem {
        match self {
            // reflections are involutions
            FcGroup::Dihedral(_) if g.b == 1 => g,
            FcGroup::Mcl(_) if g.c == 1 => g,
            _ => Elem {
                c: g.c,
                b: g.b,
                a: reduce(-(g.a as i64), self.modulus()),
            },
        }
    }

    pub fn try_inv(&self, g: Elem) -> Result<Elem> {
        self.validate(g)?;
        Ok(self.inv(g))
    }

    pub fn pow(&self, g: Elem, k: i64) -> Elem {
        let base = if k < 0 { self.inv(g) } else { g };
        let mut k = k.unsigned_abs();
        let mut result = self.identity();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(result, sq);
            }
            sq = self.mul(sq, sq);
            k >>= 1;
        }
        result
    }

    pub fn elem_order(&self, g: Elem) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != Elem::IDENTITY {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Position of `e` in the enumeration order `c, b, a` (lexicographic).
    pub fn index(&self, e: Elem) -> usize {
        let n = self.modulus() as usize;
        e.c as usize * 2 * n + e.b as usize * n + e.a as usize
    }

    pub fn element(&self, idx: usize) -> Elem {
        let n = self.modulus() as usize;
        Elem {
            c: (idx / (2 * n)) as u8,
            b: ((idx / n) % 2) as u8,
            a: (idx % n) as u32,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.order()).map(move |i| self.element(i))
    }

    pub fn conjugate(&self, g: Elem, by: Elem) -> Elem {
        self.mul(self.mul(self.inv(by), g), by)
    }

    /// Size of the subgroup generated by `set`.
    pub fn generated_order(&self, set: &[Elem]) -> usize {
        let mut seen = vec![false; self.order()];
        let mut queue = VecDeque::from([self.identity()]);
        seen[self.index(self.identity())] = true;
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for &s in set {
                let y = self.mul(x, s);
                let i = self.index(y);
                if !seen[i] {
                    seen[i] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        count
    }

    pub fn generates(&self, set: &[Elem]) -> bool {
        self.generated_order(set) == self.order()
    }

    pub fn format_elem(&self, e: Elem) -> String {
        let mut parts = Vec::new();
        if e.c == 1 {
            parts.push("c".to_string());
        }
        if e.b == 1 {
            parts.push("b".to_string());
        }
        match e.a {
            0 => {}
            1 => parts.push("a".to_string()),
            i => parts.push(format!("a^{i}")),
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(".")
        }
    }

    /// Parses a word such as `b.a^3`, `c.a^2.b`, `a^-1` or `1`, multiplying
    /// the factors left to right.
    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        let mut acc = self.identity();
        for tok in s.split('.') {
            let tok = tok.trim();
            let (base, exp) = match tok.split_once('^') {
                Some((base, exp)) => {
                    let exp: i64 = exp
                        .trim_matches(|c| c == '{' || c == '}')
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?;
                    (base, exp)
                }
                None => (tok, 1),
            };
            let g = match base {
                "1" | "e" => self.identity(),
                "a" => self.a(1),
                "b" if self.has_b() => self.elem(0, 1, 0),
                "c" if self.has_c() => self.elem(1, 0, 0),
                _ => {
                    return Err(Error::Parse(format!(
                        "unknown generator `{base}` for {self}"
                    )))
                }
            };
            acc = self.mul(acc, self.pow(g, exp));
        }
        Ok(acc)
    }

    /// Parses a comma-separated list of elements; the empty string is the
    /// empty set.
    pub fn parse_set(&self, s: &str) -> Result<Vec<Elem>> {
        let s = s.trim().trim_matches(|c| c == '{' || c == '}');
        if s.is_empty() {
            return Ok(Vec::new());
        }
        s.split(',').map(|t| self.parse_elem(t)).collect()
    }

    pub fn format_set(&self, set: &[Elem]) -> String {
        set.iter()
            .map(|&e| self.format_elem(e))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for FcGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FcGroup::Dihedral(n) => write!(f, "dihedral:{n}"),
            FcGroup::Mcl(m) => write!(f, "mclgroup:{m}"),
            FcGroup::Cyclic(n) => write!(f, "cyclic:{n}"),
            FcGroup::CyclicByTwo(n) => write!(f, "cyclic2:{n}"),
        }
    }
}

impl FromStr for FcGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, n) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("group spec `{s}` needs the form kind:<n>")))?;
        let n: u32 = n
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad modulus in `{s}`")))?;
        if n == 0 {
            return Err(Error::Parse("modulus must be positive".into()));
        }
        match kind.trim() {
            "dihedral" => Ok(FcGroup::Dihedral(n)),
            "mclgroup" => Ok(FcGroup::Mcl(n)),
            "cyclic" => Ok(FcGroup::Cyclic(n)),
            "cyclic2" => Ok(FcGroup::CyclicByTwo(n)),
            other => Err(Error::Parse(format!("unknown group kind `{other}`"))),
        }
    }
}

/// Extends generator images to a homomorphism `source → target`, walking the
/// right Cayley graph of `source`. Returns the full table indexed by
/// `source.index`, or `None` if the images violate a relation.
fn extend_hom(source: &FcGroup, target: &FcGroup, images: &[Elem]) -> Option<Vec<Elem>> {
    let gens = source.generators();
    debug_assert_eq!(gens.len(), images.len());
    let mut table: Vec<Option<Elem>> = vec![None; source.order()];
    table[source.index(source.identity())] = Some(target.identity());
    let mut queue = VecDeque::from([source.identity()]);
    while let Some(x) = queue.pop_front() {
        let fx = table[source.index(x)].expect("visited");
        for (g, &img) in gens.iter().zip(images) {
            let y = source.mul(x, *g);
            let fy = target.mul(fx, img);
            match table[source.index(y)] {
                None => {
                    table[source.index(y)] = Some(fy);
                    queue.push_back(y);
                }
                Some(prev) if prev != fy => return None,
                Some(_) => {}
            }
        }
    }
    table.into_iter().collect()
}

/// A homomorphism between two of the implemented groups, fully tabulated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    pub source: FcGroup,
    pub target: FcGroup,
    table: Vec<Elem>,
}

impl GroupHom {
    pub fn from_generator_images(
        source: FcGroup,
        target: FcGroup,
        images: &[Elem],
    ) -> Result<Self> {
        if images.len() != source.generators().len() {
            return Err(Error::InvalidParameter(format!(
                "{} needs {} generator images",
                source,
                source.generators().len()
            )));
        }
        for &img in images {
            target.validate(img)?;
        }
        let table = extend_hom(&source, &target, images).ok_or_else(|| {
            Error::InvalidParameter("generator images do not extend to a homomorphism".into())
        })?;
        Ok(GroupHom {
            source,
            target,
            table,
        })
    }

    pub fn apply(&self, e: Elem) -> Elem {
        self.table[self.source.index(e)]
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.order() != self.target.order() {
            return false;
        }
        let mut seen = vec![false; self.target.order()];
        for &x in &self.table {
            let i = self.target.index(x);
            if seen[i] {
                return false;
            }
            seen[i] = true;
        }
        true
    }
}

/// An automorphism stored by generator images; the full element map is
/// computed on demand.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupAutomorphism {
    pub group: FcGroup,
    images: Vec<Elem>,
}

impl GroupAutomorphism {
    /// Checks that the images extend to a bijective homomorphism.
    pub fn new(group: FcGroup, images: Vec<Elem>) -> Result<Self> {
        let hom = GroupHom::from_generator_images(group, group, &images)?;
        if !hom.is_bijective() {
            return Err(Error::InvalidParameter(
                "generator images do not give a bijection".into(),
            ));
        }
        Ok(GroupAutomorphism { group, images })
    }

    pub fn identity(group: FcGroup) -> Self {
        GroupAutomorphism {
            group,
            images: group.generators(),
        }
    }

    pub fn generator_images(&self) -> &[Elem] {
        &self.images
    }

    /// `e^α`, evaluated on the normal form `c^k b^j a^i`.
    pub fn apply(&self, e: Elem) -> Elem {
        let g = &self.group;
        let mut out = g.identity();
        if e.c == 1 {
            out = g.mul(out, self.images[2]);
        }
        if e.b == 1 {
            out = g.mul(out, self.images[1]);
        }
        g.mul(out, g.pow(self.images[0], e.a as i64))
    }

    pub fn apply_set(&self, set: &[Elem]) -> Vec<Elem> {
        let mut out: Vec<Elem> = set.iter().map(|&e| self.apply(e)).collect();
        out.sort();
        out
    }

    pub fn table(&self) -> Vec<Elem> {
        self.group.elements().map(|e| self.apply(e)).collect()
    }

    /// `self` followed by `other`: `e ↦ (e^self)^other`.
    pub fn then(&self, other: &GroupAutomorphism) -> GroupAutomorphism {
        let images = self.images.iter().map(|&x| other.apply(x)).collect();
        GroupAutomorphism {
            group: self.group,
            images,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images == self.group.generators()
    }

    pub fn order(&self) -> usize {
        let mut x = self.clone();
        let mut k = 1;
        while !x.is_identity() {
            x = x.then(self);
            k += 1;
        }
        k
    }

    pub fn describe(&self) -> String {
        let names = ["a", "b", "c"];
        self.images
            .iter()
            .zip(names)
            .map(|(&img, name)| format!("{name}->{}", self.group.format_elem(img)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// `a ↦ a^λ, b ↦ b a^k` on `D_{2n}`.
pub fn dihedral_automorphism(n: u32, lambda: i64, k: i64) -> Result<GroupAutomorphism> {
    let group = FcGroup::dihedral(n)?;
    if gcd(lambda.rem_euclid(n as i64) as u64, n as u64) != 1 {
        return Err(Error::NotAUnit {
            value: lambda,
            modulus: n,
        });
    }
    GroupAutomorphism::new(group, vec![group.a(lambda), group.ba(k)])
}

/// All automorphisms by exhaustive generator-image search, in lexicographic
/// order of the image indices.
pub fn enumerate_automorphisms(group: &FcGroup) -> Result<Vec<GroupAutomorphism>> {
    enumerate_automorphisms_capped(group, DEFAULT_AUT_CAP)
}

pub fn enumerate_automorphisms_capped(
    group: &FcGroup,
    cap: usize,
) -> Result<Vec<GroupAutomorphism>> {
    if group.order() > cap {
        return Err(Error::BudgetExceeded(format!(
            "|{}| = {} exceeds the automorphism enumeration cap {}",
            group,
            group.order(),
            cap
        )));
    }
    let gens = group.generators();
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&g| {
            let ord = group.elem_order(g);
            group
                .elements()
                .filter(|&x| group.elem_order(x) == ord)
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    if candidates.iter().any(|c| c.is_empty()) {
        return Ok(out);
    }
    loop {
        let images: Vec<Elem> = choice.iter().zip(&candidates).map(|(&i, c)| c[i]).collect();
        if let Some(table) = extend_hom(group, group, &images) {
            let hom = GroupHom {
                source: *group,
                target: *group,
                table,
            };
            if hom.is_bijective() {
                out.push(GroupAutomorphism {
                    group: *group,
                    images,
                });
            }
        }
        // odometer, last generator fastest
        let mut pos = gens.len();
        loop {
            if pos == 0 {
                return Ok(out);
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

/// For odd `m`, the isomorphism from the `⟨a,b,c⟩` group of order `4m` onto
/// `D_{4m} = ⟨e, f⟩` sending `ab ↦ e`, `ca ↦ f` (written `a`, `b` in the
/// dihedral normal form).
pub fn mcl_to_dihedral(m: u32) -> Result<GroupHom> {
    if m % 2 == 0 {
        return Err(Error::InvalidParameter(format!("m = {m} must be odd")));
    }
    let source = FcGroup::mcl(m)?;
    let target = FcGroup::dihedral(2 * m)?;
    let mi = m as i64;
    // a = e^{m+1}, b = e^m, c = f e^{-(m+1)}
    let images = [target.a(mi + 1), target.a(mi), target.ba(-(mi + 1))];
    let hom = GroupHom::from_generator_images(source, target, &images)?;
    debug_assert!(hom.is_bijective());
    Ok(hom)
}
