//! Named verification bundles. Each suite runs a fixed list of cases and
//! reports pass, fail or unknown per case together with timings.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analysis::{
    bicayley_normalizer_brute_force, bicayley_right_regular, compute_f_i, is_cayley, DEFAULT_BUDGET,
};
use crate::census::{census, inverse_closed_sets, CensusKind};
use crate::constructions::{
    bicayley, bicayley_vertex, family_builder, multi_cross_ladder, BiCayleyTriple, FamilyParams,
};
use crate::error::{Error, Result};
use crate::graphs::{are_isomorphic, automorphism_group};
use crate::groups::{enumerate_automorphisms, Elem, FcGroup};
use crate::perms::{PermGroup, Verdict, DEFAULT_ELEMENT_CAP};
use crate::witnesses::{
    cayley_12m_even_g, cayley_12m_g, mcl_beta, mcl_bicayley_iso, mcl_dihedral_iso, mcl_even_delta,
    vnc48_g, WitnessResult,
};

pub const SUITES: [&str; 9] = [
    "thm1.1", "thm1.2", "thm1.3", "lemma4.1", "lemma5.1", "lemma6.1", "lemma6.2", "prop2.3",
    "prop2.4",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Unknown,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseOutcome {
    pub name: String,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// Graph spec or parameters that reproduce the case on its own.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reproduce: Option<String>,
    /// Budget that ran out, for unknown cases.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget: Option<u64>,
    pub millis: u64,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub unknown: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<CaseOutcome>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn new(suite: &str, cases: Vec<CaseOutcome>) -> Self {
        let mut summary = Summary::default();
        for c in &cases {
            match c.outcome {
                Outcome::Pass => summary.pass += 1,
                Outcome::Fail => summary.fail += 1,
                Outcome::Unknown => summary.unknown += 1,
            }
        }
        SuiteReport {
            suite: suite.into(),
            cases,
            summary,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0 && self.summary.unknown == 0
    }

    /// 0 when everything passes, 1 on any failure, 3 when only unknowns
    /// remain.
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail > 0 {
            1
        } else if self.summary.unknown > 0 {
            3
        } else {
            0
        }
    }
}

/// Runs one case. Budget errors become unknown; other errors fail.
fn case(
    name: String,
    reproduce: &str,
    f: impl FnOnce() -> Result<(bool, Option<String>)>,
) -> CaseOutcome {
    let start = Instant::now();
    let res = f();
    let millis = start.elapsed().as_millis() as u64;
    let (outcome, detail) = match res {
        Ok((true, d)) => (Outcome::Pass, d),
        Ok((false, d)) => (Outcome::Fail, d),
        Err(Error::BudgetExceeded(msg)) => (Outcome::Unknown, Some(msg)),
        Err(e) => (Outcome::Fail, Some(e.to_string())),
    };
    let reproduce = (outcome != Outcome::Pass).then(|| reproduce.to_string());
    let budget = (outcome == Outcome::Unknown).then_some(DEFAULT_BUDGET);
    CaseOutcome {
        name,
        outcome,
        detail,
        reproduce,
        budget,
        millis,
    }
}

fn verdict_case(
    name: String,
    reproduce: &str,
    expected: Verdict,
    f: impl FnOnce() -> Result<Verdict>,
) -> CaseOutcome {
    let mut out = case(name, reproduce, || {
        let v = f()?;
        Ok((v == expected, Some(format!("is_cayley = {v:?}"))))
    });
    if out.detail.as_deref() == Some("is_cayley = Unknown") {
        out.outcome = Outcome::Unknown;
        out.budget = Some(DEFAULT_BUDGET);
    }
    out
}

fn witness_case(
    name: String,
    reproduce: &str,
    f: impl FnOnce() -> Result<WitnessResult>,
) -> CaseOutcome {
    case(name, reproduce, || {
        let w = f()?;
        let failing = w.failing();
        Ok((
            failing.is_empty(),
            (!failing.is_empty()).then(|| format!("failing: {}", failing.join("; "))),
        ))
    })
}

fn cayley_verdict(spec: &crate::graphs::Graph) -> Result<Verdict> {
    Ok(is_cayley(spec, DEFAULT_BUDGET)?.verdict())
}

pub fn run_suite(name: &str) -> Result<SuiteReport> {
    let cases = match name {
        "thm1.1" => {
            let mut report = census(CensusKind::Dihedrant, 3, 16, DEFAULT_BUDGET)?.report();
            report.suite = name.into();
            return Ok(report);
        }
        "thm1.2" => mcl_cases(),
        "thm1.3" => family_cases(),
        "lemma4.1" => mcl_map_cases(),
        "lemma5.1" => family_four_cases(),
        "lemma6.1" => odd_twelve_m_cases(),
        "lemma6.2" => even_twelve_m_cases(),
        "prop2.3" => invariance_cases(100, 0x5eed),
        "prop2.4" => normalizer_cases(3, 8),
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown suite `{other}`; expected one of {}",
                SUITES.join(", ")
            )))
        }
    };
    Ok(SuiteReport::new(name, cases))
}

fn mcl_cases() -> Vec<CaseOutcome> {
    let mut out = Vec::new();
    for m in 2..=10u32 {
        let expected = if m % 2 == 0 || m % 3 == 0 {
            Verdict::Yes
        } else {
            Verdict::No
        };
        out.push(verdict_case(
            format!("thm1.2:m={m}"),
            &format!("mcl:{m}"),
            expected,
            || cayley_verdict(&multi_cross_ladder(m)?),
        ));
        if m % 2 == 0 {
            out.push(witness_case(
                format!("thm1.2-even:m={m}"),
                &format!("mcl:{m}"),
                || mcl_even_delta(m),
            ));
        } else if m % 3 == 0 {
            out.push(witness_case(
                format!("thm1.2-odd:m={m}"),
                &format!("mcl:{m}"),
                || mcl_beta(m),
            ));
        }
    }
    out
}

/// The four family instances checked for vertex-transitivity and
/// non-Cayleyness.
pub const FAMILY_INSTANCES: [FamilyParams; 4] = [
    FamilyParams::One { n: 15, l: 2 },
    FamilyParams::Two { n: 10, l: 2 },
    FamilyParams::Three { m: 2 },
    FamilyParams::Four { l: 1 },
];

fn family_spec(p: &FamilyParams) -> String {
    crate::parse::GraphSpec::Family(*p).to_string()
}

fn family_cases() -> Vec<CaseOutcome> {
    let mut out = Vec::new();
    for p in FAMILY_INSTANCES {
        let spec = family_spec(&p);
        out.push(case(format!("thm1.3:{spec}"), &spec, || {
            let (_, _, g) = family_builder(&p)?;
            let aut = automorphism_group(&g)?;
            let vt = aut.is_transitive();
            let v = crate::analysis::is_cayley_under(&g, &aut, DEFAULT_BUDGET)?.verdict();
            if v == Verdict::Unknown {
                return Err(Error::BudgetExceeded(format!("{spec}: Cayley search")));
            }
            Ok((
                vt && v == Verdict::No,
                Some(format!("vt = {vt}, is_cayley = {v:?}")),
            ))
        }));
    }
    out.push(case(
        "thm1.3:family:3:2 ~ mcl:5".into(),
        "family:3:2",
        || {
            let (_, _, g) = family_builder(&FamilyParams::Three { m: 2 })?;
            Ok((are_isomorphic(&g, &multi_cross_ladder(5)?)?.is_some(), None))
        },
    ));
    out
}

fn mcl_map_cases() -> Vec<CaseOutcome> {
    let mut out = Vec::new();
    for m in 2..=10u32 {
        out.push(witness_case(
            format!("lemma4.1:m={m}"),
            &format!("mcl:{m}"),
            || mcl_bicayley_iso(m),
        ));
        if m % 2 == 1 {
            out.push(witness_case(
                format!("remark1:m={m}"),
                &format!("mcl:{m}"),
                || mcl_dihedral_iso(m),
            ));
        }
    }
    for m in 2..=8u32 {
        out.push(case(
            format!("lemma4.1-search:m={m}"),
            &format!("mcl:{m}"),
            || {
                let t = crate::constructions::mcl_triple(m)?;
                Ok((
                    are_isomorphic(&multi_cross_ladder(m)?, &bicayley(&t))?.is_some(),
                    None,
                ))
            },
        ));
    }
    out
}

/// Everything the family-4 graph at `ℓ = 1` is claimed to satisfy.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyFourFacts {
    pub eight_cycles_through_1_0_1_1_b_0: u64,
    pub eight_cycles_through_1_0_ba_0: u64,
    pub aut_order: Option<u128>,
    pub stabilizer_order: Option<u128>,
    pub stabilizer_is_g: bool,
    pub quotient_matches: bool,
    pub cayley: Verdict,
}

pub fn family_four_facts() -> Result<FamilyFourFacts> {
    let p = FamilyParams::Four { l: 1 };
    let (h, _, graph) = family_builder(&p)?;
    let v = |e: Elem, side: u8| bicayley_vertex(&h, e, side);
    let one = h.identity();
    let c1 = graph.count_cycles_through(&[v(one, 0), v(one, 1), v(h.ba(0), 0)], 8);
    let c2 = graph.count_cycles_through(&[v(one, 0), v(h.ba(1), 0)], 8);
    let aut = automorphism_group(&graph)?;
    let stab = aut.stabilizer(v(one, 0))?;
    let g = vnc48_g(1)?;
    let stabilizer_is_g = match g.permutation() {
        Some(gp) => {
            stab.elements()?.iter().all(|x| x.is_identity() || x == gp) && stab.order() == Some(2)
        }
        None => false,
    };
    let blocks = aut.block_system((v(one, 0), v(h.ba(1), 0)))?;
    let quotient = graph.quotient(&blocks)?;
    let z = FcGroup::Cyclic(48);
    let target = BiCayleyTriple::parse(z, "a,a^-1", "a^13,a^-13", "1,a^-10")?;
    let quotient_matches = are_isomorphic(&quotient, &bicayley(&target))?.is_some();
    let cayley = crate::analysis::is_cayley_under(&graph, &aut, DEFAULT_BUDGET)?.verdict();
    Ok(FamilyFourFacts {
        eight_cycles_through_1_0_1_1_b_0: c1,
        eight_cycles_through_1_0_ba_0: c2,
        aut_order: aut.order(),
        stabilizer_order: stab.order(),
        stabilizer_is_g,
        quotient_matches,
        cayley,
    })
}

fn family_four_cases() -> Vec<CaseOutcome> {
    let mut out = vec![witness_case("lemma5.1:l=1".into(), "family:4:1", || {
        vnc48_g(1)
    })];
    out.push(case("lemma5.1-structure:l=1".into(), "family:4:1", || {
        let f = family_four_facts()?;
        let ok = f.eight_cycles_through_1_0_1_1_b_0 == 1
            && f.eight_cycles_through_1_0_ba_0 == 0
            && f.aut_order == Some(384)
            && f.stabilizer_order == Some(2)
            && f.stabilizer_is_g
            && f.quotient_matches
            && f.cayley == Verdict::No;
        Ok((ok, Some(serde_json::to_string(&f).unwrap_or_default())))
    }));
    out
}

/// Parameter pairs for the odd case, filtered by the generation condition.
pub fn odd_twelve_m_pairs() -> Vec<(u32, i64)> {
    [(1u32, 1i64), (3, 1), (3, 2)]
        .into_iter()
        .filter(|&(m, i)| crate::groups::gcd(i as u64, 3 * m as u64) == 1)
        .collect()
}

fn odd_twelve_m_cases() -> Vec<CaseOutcome> {
    let mut out = Vec::new();
    for (m, i) in odd_twelve_m_pairs() {
        let t = crate::witnesses::cayley_12m_triple(m, i)
            .map(|t| format!("bicay:{}:{}", t.group, t.describe()));
        let spec = t.unwrap_or_default();
        out.push(witness_case(format!("lemma6.1:m={m},i={i}"), &spec, || {
            cayley_12m_g(m, i)
        }));
        out.push(verdict_case(
            format!("lemma6.1-cayley:m={m},i={i}"),
            &spec,
            Verdict::Yes,
            || cayley_verdict(&bicayley(&crate::witnesses::cayley_12m_triple(m, i)?)),
        ));
    }
    out
}

fn even_twelve_m_cases() -> Vec<CaseOutcome> {
    let mut out = Vec::new();
    for m in [2u32, 6] {
        for variant in [1u8, 2] {
            let t = crate::witnesses::cayley_12m_even_triple(m, variant);
            let spec = t
                .map(|t| format!("bicay:{}:{}", t.group, t.describe()))
                .unwrap_or_default();
            out.push(witness_case(
                format!("lemma6.2:m={m},variant={variant}"),
                &spec,
                || cayley_12m_even_g(m, variant),
            ));
            out.push(verdict_case(
                format!("lemma6.2-cayley:m={m},variant={variant}"),
                &spec,
                Verdict::Yes,
                || {
                    cayley_verdict(&bicayley(&crate::witnesses::cayley_12m_even_triple(
                        m, variant,
                    )?))
                },
            ));
        }
    }
    out
}

/// A random trivalent triple over `D_{2n}` with `3 ≤ n ≤ max_n`; `S` is
/// not normalized to contain the identity.
pub fn random_trivalent_triple(rng: &mut ChaCha8Rng, max_n: u32) -> Result<BiCayleyTriple> {
    let n = rng.gen_range(3..=max_n);
    let h = FcGroup::dihedral(n)?;
    let k = rng.gen_range(0..=2usize);
    let sides = inverse_closed_sets(&h, k);
    let r = sides.choose(rng).cloned().unwrap_or_default();
    let l = sides.choose(rng).cloned().unwrap_or_default();
    let elements: Vec<Elem> = h.elements().collect();
    let s: Vec<Elem> = elements.choose_multiple(rng, 3 - k).copied().collect();
    BiCayleyTriple::new(h, &r, &l, &s)
}

/// Whether `BiCay(T) ≅ BiCay(T^α)` and `BiCay(T) ≅ BiCay(L, R, S^-1)`, by
/// the isomorphism search.
pub fn triple_invariance_check(
    t: &BiCayleyTriple,
    alpha: &crate::groups::GroupAutomorphism,
) -> Result<(bool, bool)> {
    let g = bicayley(t);
    let image = bicayley(&t.map(|x| alpha.apply(x)));
    let swapped = bicayley(&t.swapped());
    Ok((
        are_isomorphic(&g, &image)?.is_some(),
        are_isomorphic(&g, &swapped)?.is_some(),
    ))
}

pub fn invariance_cases(count: usize, seed: u64) -> Vec<CaseOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for k in 0..count {
        let drawn = random_trivalent_triple(&mut rng, 12).and_then(|t| {
            let auts = enumerate_automorphisms(&t.group)?;
            let alpha = auts
                .choose(&mut rng)
                .cloned()
                .ok_or(Error::InvalidParameter("no automorphisms".into()))?;
            Ok((t, alpha))
        });
        let (t, alpha) = match drawn {
            Ok(x) => x,
            Err(e) => {
                out.push(case(format!("prop2.3:#{k}"), "", || Err(e)));
                continue;
            }
        };
        let spec = format!("bicay:{}:{}", t.group, t.describe());
        out.push(case(format!("prop2.3:#{k}"), &spec, || {
            let (by_aut, by_swap) = triple_invariance_check(&t, &alpha)?;
            Ok((
                by_aut && by_swap,
                Some(format!(
                    "alpha {}: {by_aut}, swap: {by_swap}",
                    alpha.describe()
                )),
            ))
        }));
    }
    out
}

/// Normalizer structure of `R(H)` in `Aut(BiCay(H,R,L,S))`.
#[derive(Clone, Debug, Serialize)]
pub struct NormalizerCheck {
    pub f_size: usize,
    pub i_size: usize,
    pub normalizer_order: u128,
    pub predicted_order: u128,
    /// `N = R(H)F` or `N = R(H)⟨F, δ⟩` as sets.
    pub structure_holds: bool,
    /// `⟨R(H), δ⟩` is transitive for every `δ ∈ I`.
    pub delta_transitive: bool,
    /// For some `δ_{α,1,1} ∈ I` with `α² = 1`, whether `⟨R(H), δ⟩` is
    /// regular; `None` when there is no such `δ`.
    pub identity_delta_regular: Option<bool>,
    /// Normalizer order computed inside the full automorphism group, when
    /// that group is small enough to enumerate.
    pub normalizer_in_aut: Option<u128>,
}

impl NormalizerCheck {
    pub fn holds(&self) -> bool {
        self.structure_holds
            && self.delta_transitive
            && self.identity_delta_regular != Some(false)
            && self
                .normalizer_in_aut
                .map_or(true, |o| o == self.normalizer_order)
    }
}

pub fn normalizer_check(t: &BiCayleyTriple) -> Result<NormalizerCheck> {
    let h = t.group;
    let degree = 2 * h.order();
    let fi = compute_f_i(t)?;
    let brute = bicayley_normalizer_brute_force(t)?;
    let rh = bicayley_right_regular(t)?;
    let mut gens: Vec<_> = rh.generators().to_vec();
    gens.extend(fi.f.iter().map(|m| m.perm.clone()));
    if let Some(d) = fi.i.first() {
        gens.push(d.perm.clone());
    }
    let predicted = PermGroup::from_generators(degree, gens)?.close(DEFAULT_ELEMENT_CAP)?;
    let expected_size = h.order() * fi.f.len() * if fi.i.is_empty() { 1 } else { 2 };
    let structure_holds = predicted.order() == brute.order()
        && predicted.order() == Some(expected_size as u128)
        && predicted.elements()?.iter().all(|p| brute.contains(p));
    let mut delta_transitive = true;
    for d in &fi.i {
        let mut g = rh.generators().to_vec();
        g.push(d.perm.clone());
        delta_transitive &= PermGroup::from_generators(degree, g)?.is_transitive();
    }
    let identity_delta_regular = match fi.i.iter().find(|d| {
        d.x == h.identity() && d.y == h.identity() && d.alpha.then(&d.alpha).is_identity()
    }) {
        None => None,
        Some(d) => {
            let mut g = rh.generators().to_vec();
            g.push(d.perm.clone());
            let grp = PermGroup::from_generators(degree, g)?.close(DEFAULT_ELEMENT_CAP)?;
            Some(grp.action_profile()?.regular)
        }
    };
    let graph = bicayley(t);
    let normalizer_in_aut = if graph.is_connected() {
        let aut = automorphism_group(&graph)?;
        if aut.is_closed() {
            Some(rh.normalizer_centralizer(&aut)?.0.order().unwrap_or(0))
        } else {
            None
        }
    } else {
        None
    };
    Ok(NormalizerCheck {
        f_size: fi.f.len(),
        i_size: fi.i.len(),
        normalizer_order: brute.order().unwrap_or(0),
        predicted_order: predicted.order().unwrap_or(0),
        structure_holds,
        delta_transitive,
        identity_delta_regular,
        normalizer_in_aut,
    })
}

/// All 2-type triples `(R, L, {1})` over `D_{2n}`.
pub fn two_type_triples(n: u32) -> Result<Vec<BiCayleyTriple>> {
    let h = FcGroup::dihedral(n)?;
    let sides = inverse_closed_sets(&h, 2);
    let mut out = Vec::new();
    for r in &sides {
        for l in &sides {
            out.push(BiCayleyTriple::new(h, r, l, &[h.identity()])?);
        }
    }
    Ok(out)
}

fn normalizer_cases(n_min: u32, n_max: u32) -> Vec<CaseOutcome> {
    (n_min..=n_max)
        .map(|n| {
            let mut first_failure = String::new();
            let mut out = case(format!("prop2.4:n={n}"), "", || {
                let triples = two_type_triples(n)?;
                let mut failed = 0;
                for t in &triples {
                    if !normalizer_check(t)?.holds() {
                        failed += 1;
                        if first_failure.is_empty() {
                            first_failure = format!("bicay:{}:{}", t.group, t.describe());
                        }
                    }
                }
                Ok((
                    failed == 0,
                    Some(format!("{} triples, {failed} failing", triples.len())),
                ))
            });
            if out.outcome == Outcome::Fail && !first_failure.is_empty() {
                out.reproduce = Some(first_failure);
            }
            out
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("lemma9.9").is_err());
    }

    #[test]
    fn small_suites_pass() {
        for name in ["lemma4.1", "lemma6.2"] {
            let r = run_suite(name).unwrap();
            assert!(
                r.all_pass(),
                "{name}: {:?}",
                r.cases
                    .iter()
                    .filter(|c| c.outcome != Outcome::Pass)
                    .collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn exit_codes() {
        let pass = CaseOutcome {
            name: "a".into(),
            outcome: Outcome::Pass,
            detail: None,
            reproduce: None,
            budget: None,
            millis: 0,
        };
        let unknown = CaseOutcome {
            outcome: Outcome::Unknown,
            ..pass.clone()
        };
        let fail = CaseOutcome {
            outcome: Outcome::Fail,
            ..pass.clone()
        };
        assert_eq!(SuiteReport::new("x", vec![pass.clone()]).exit_code(), 0);
        assert_eq!(
            SuiteReport::new("x", vec![pass.clone(), unknown.clone()]).exit_code(),
            3
        );
        assert_eq!(SuiteReport::new("x", vec![unknown, fail]).exit_code(), 1);
    }

    #[test]
    fn normalizer_on_small_triple() {
        let h = FcGroup::dihedral(4).unwrap();
        let t = BiCayleyTriple::parse(h, "b,b.a", "b,b.a^2", "1").unwrap();
        let c = normalizer_check(&t).unwrap();
        assert!(c.holds(), "{c:?}");
    }
}
