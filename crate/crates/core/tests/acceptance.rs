//! Acceptance criteria, one line per criterion. Runs without the libtest
//! harness so the summary is always printed; exits non-zero if any
//! criterion fails.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dihedrants::analysis::{classify_dihedrant, is_cayley, DEFAULT_BUDGET};
use dihedrants::census::dihedrant_classes;
use dihedrants::constructions::{
    bicayley, cayley, family_builder, multi_cross_ladder, FamilyParams,
};
use dihedrants::graphs::{are_isomorphic, automorphism_group};
use dihedrants::groups::enumerate_automorphisms;
use dihedrants::perms::Verdict;
use dihedrants::suites::{
    family_four_facts, normalizer_check, odd_twelve_m_pairs, random_trivalent_triple,
    triple_invariance_check, two_type_triples, FAMILY_INSTANCES,
};
use dihedrants::witnesses::{
    cayley_12m_even_g, cayley_12m_even_triple, cayley_12m_g, cayley_12m_triple,
    crossladder_cayley_set, mcl_beta, mcl_bicayley_iso, mcl_even_delta, vnc48_g,
};

#[path = "support/oracles.rs"]
mod oracles;

/// Collects failed sub-checks of one criterion.
#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        self.checks += 1;
        if !ok {
            self.failures.push(what.into());
        }
    }
}

type Criterion = fn(&mut Tally) -> dihedrants::Result<()>;

fn mcl_cayley_iff_even_or_divisible_by_three(t: &mut Tally) -> dihedrants::Result<()> {
    for m in 2..=10u32 {
        let expected = if m % 2 == 0 || m % 3 == 0 {
            Verdict::Yes
        } else {
            Verdict::No
        };
        let got = is_cayley(&multi_cross_ladder(m)?, DEFAULT_BUDGET)?.verdict();
        t.check(
            got == expected,
            format!("m={m}: is_cayley {got:?}, expected {expected:?}"),
        );
        if m % 2 == 0 {
            let w = mcl_even_delta(m)?;
            t.check(
                w.all_hold(),
                format!("m={m}: delta witness fails {:?}", w.failing()),
            );
        } else if m % 3 == 0 {
            let w = mcl_beta(m)?;
            t.check(
                w.all_hold(),
                format!("m={m}: beta witness fails {:?}", w.failing()),
            );
        }
    }
    Ok(())
}

fn mcl_bicayley_map(t: &mut Tally) -> dihedrants::Result<()> {
    for m in 2..=10u32 {
        let w = mcl_bicayley_iso(m)?;
        t.check(
            w.verified && w.failures.is_empty(),
            format!("m={m}: {:?}", w.failing()),
        );
    }
    Ok(())
}

fn dihedrant_trichotomy(t: &mut Tally) -> dihedrants::Result<()> {
    for n in 3..=16u32 {
        let target = if n % 2 == 0 {
            Some(crossladder_cayley_set(n)?)
        } else {
            None
        };
        let auts = enumerate_automorphisms(&dihedrants::groups::FcGroup::dihedral(n)?)?;
        for set in dihedrant_classes(n)? {
            let r = classify_dihedrant(&set)?;
            let label = r.graph.clone();
            let normal = r.normal_cayley == Some(true);
            let holding = [r.arc_transitive, normal, r.cross_ladder.is_some()];
            let count = holding.iter().filter(|&&h| h).count();
            t.check(
                count == 1,
                format!("{label}: {count} of (AT, normal, cross ladder) hold: {holding:?}"),
            );
            if r.cross_ladder.is_some() {
                t.check(n % 2 == 0, format!("{label}: cross ladder with odd n"));
                let equivalent = target.as_ref().is_some_and(|c| {
                    auts.iter()
                        .any(|a| a.apply_set(set.elements()) == c.elements())
                });
                t.check(
                    equivalent,
                    format!("{label}: not equivalent to b,b.a,b.a^(n/2)"),
                );
                let cl = dihedrants::constructions::cross_ladder(n / 2)?;
                let iso_ok = r
                    .cross_ladder
                    .as_ref()
                    .is_some_and(|f| f.iso.validate(&cayley(&set), &cl));
                t.check(
                    iso_ok,
                    format!("{label}: composed map onto CL does not validate"),
                );
            }
        }
    }
    Ok(())
}

fn family_instances_are_vnc(t: &mut Tally) -> dihedrants::Result<()> {
    for p in FAMILY_INSTANCES {
        let (_, _, g) = family_builder(&p)?;
        let aut = automorphism_group(&g)?;
        t.check(aut.is_transitive(), format!("{p:?}: not vertex-transitive"));
        let v = dihedrants::analysis::is_cayley_under(&g, &aut, DEFAULT_BUDGET)?.verdict();
        t.check(v == Verdict::No, format!("{p:?}: is_cayley {v:?}"));
    }
    let (_, _, f3) = family_builder(&FamilyParams::Three { m: 2 })?;
    t.check(
        are_isomorphic(&f3, &multi_cross_ladder(5)?)?.is_some(),
        "family 3 (m=2) not isomorphic to MCL_{20,2}",
    );
    Ok(())
}

fn family_four_structure(t: &mut Tally) -> dihedrants::Result<()> {
    let w = vnc48_g(1)?;
    t.check(
        w.verified && w.failures.is_empty(),
        format!("g does not validate: {:?}", w.failing()),
    );
    t.check(
        w.permutation().is_some_and(|g| g.order() == 2),
        "g is not of order 2",
    );
    let f = family_four_facts()?;
    t.check(
        f.eight_cycles_through_1_0_1_1_b_0 == 1,
        format!(
            "8-cycles through 1_0,1_1,b_0: {}",
            f.eight_cycles_through_1_0_1_1_b_0
        ),
    );
    t.check(
        f.eight_cycles_through_1_0_ba_0 == 0,
        format!(
            "8-cycles through 1_0,(ba)_0: {}",
            f.eight_cycles_through_1_0_ba_0
        ),
    );
    t.check(
        f.aut_order == Some(384),
        format!("|Aut| = {:?}", f.aut_order),
    );
    t.check(
        f.stabilizer_order == Some(2),
        format!("|stabilizer| = {:?}", f.stabilizer_order),
    );
    t.check(f.stabilizer_is_g, "vertex stabilizer is not <g>");
    t.check(f.cayley == Verdict::No, format!("is_cayley {:?}", f.cayley));
    t.check(
        f.quotient_matches,
        "block quotient is not BiCay(Z_48, {a,a^-1}, {a^13,a^-13}, {1,a^-10})",
    );
    Ok(())
}

fn odd_twelve_m_witness(t: &mut Tally) -> dihedrants::Result<()> {
    for (m, i) in odd_twelve_m_pairs() {
        let w = cayley_12m_g(m, i)?;
        let tag = format!("m={m},i={i}");
        t.check(
            w.verified && w.failures.is_empty(),
            format!("{tag}: g does not validate"),
        );
        for rel in ["g^2 = R(a^6m)", "(R(a^2)g)^3 = R(a^6)"] {
            t.check(w.relation(rel) == Some(true), format!("{tag}: {rel} fails"));
        }
        let order = w.fact("|<R(a^2),R(b),g>| = 24m");
        t.check(
            order.is_some_and(|c| c.holds),
            format!(
                "{tag}: |<R(a^2),R(b),g>| = 24m fails ({})",
                order.and_then(|c| c.detail.clone()).unwrap_or_default()
            ),
        );
        t.check(
            w.fact("<R(a^2),R(b),g> regular").is_some_and(|c| c.holds),
            format!("{tag}: not regular"),
        );
        let v = is_cayley(&bicayley(&cayley_12m_triple(m, i)?), DEFAULT_BUDGET)?.verdict();
        t.check(v == Verdict::Yes, format!("{tag}: is_cayley {v:?}"));
    }
    Ok(())
}

fn even_twelve_m_witnesses(t: &mut Tally) -> dihedrants::Result<()> {
    for m in [2u32, 6] {
        for variant in [1u8, 2] {
            let tag = format!("m={m},variant={variant}");
            let w = cayley_12m_even_g(m, variant)?;
            t.check(
                w.verified && w.failures.is_empty(),
                format!("{tag}: g does not validate"),
            );
            t.check(
                w.relations.iter().all(|c| c.holds),
                format!("{tag}: relations {:?}", w.failing()),
            );
            t.check(
                w.fact("G regular").is_some_and(|c| c.holds),
                format!("{tag}: G not regular"),
            );
            let v = is_cayley(
                &bicayley(&cayley_12m_even_triple(m, variant)?),
                DEFAULT_BUDGET,
            )?
            .verdict();
            t.check(v == Verdict::Yes, format!("{tag}: is_cayley {v:?}"));
        }
    }
    Ok(())
}

fn triple_invariances(t: &mut Tally) -> dihedrants::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_611);
    for k in 0..100 {
        let triple = random_trivalent_triple(&mut rng, 12)?;
        let auts = enumerate_automorphisms(&triple.group)?;
        let alpha = &auts[rand::Rng::gen_range(&mut rng, 0..auts.len())];
        let (by_aut, by_swap) = triple_invariance_check(&triple, alpha)?;
        let label = format!("#{k} {} {}", triple.group, triple.describe());
        t.check(
            by_aut,
            format!("{label}: image under {} not isomorphic", alpha.describe()),
        );
        t.check(by_swap, format!("{label}: swapped triple not isomorphic"));
    }
    Ok(())
}

fn normalizer_structure(t: &mut Tally) -> dihedrants::Result<()> {
    for n in 3..=8u32 {
        for triple in two_type_triples(n)? {
            let c = normalizer_check(&triple)?;
            let label = format!("{} {}", triple.group, triple.describe());
            t.check(
                c.structure_holds,
                format!(
                    "{label}: N = {} but predicted {}",
                    c.normalizer_order, c.predicted_order
                ),
            );
            t.check(
                c.delta_transitive,
                format!("{label}: some <R(H),delta> intransitive"),
            );
            t.check(
                c.identity_delta_regular != Some(false),
                format!("{label}: <R(H),delta_(alpha,1,1)> not regular"),
            );
            if let Some(o) = c.normalizer_in_aut {
                t.check(
                    o == c.normalizer_order,
                    format!("{label}: normalizer in Aut has order {o}"),
                );
            }
        }
    }
    Ok(())
}

fn engine_oracles(t: &mut Tally) -> dihedrants::Result<()> {
    for (name, g) in oracles::corpus() {
        if g.n_vertices() <= 8 {
            let naive = oracles::naive_automorphism_count(&g);
            let engine = automorphism_group(&g)?.order();
            t.check(
                engine == Some(naive),
                format!("{name}: |Aut| engine {engine:?}, naive {naive}"),
            );
        }
        if g.n_vertices() <= 16 {
            let oracle = oracles::has_regular_subgroup_exhaustive(&g)?;
            let engine = is_cayley(&g, DEFAULT_BUDGET)?.verdict();
            let expected = if oracle { Verdict::Yes } else { Verdict::No };
            t.check(
                engine == expected,
                format!("{name}: is_cayley {engine:?}, oracle {oracle}"),
            );
        }
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, Criterion); 10] = [
        (
            "MCL_{4m,2} is Cayley iff m even or 3 | m (m = 2..10)",
            mcl_cayley_iff_even_or_divisible_by_three,
        ),
        (
            "eight-case map MCL_{4m,2} -> BiCay(<a,b,c>) validates (m = 2..10)",
            mcl_bicayley_map,
        ),
        (
            "trivalent dihedrants n = 3..16: exactly one of AT, normal, cross ladder",
            dihedrant_trichotomy,
        ),
        (
            "four family instances are vertex-transitive non-Cayley",
            family_instances_are_vnc,
        ),
        (
            "family 4 at l = 1: involution, 8-cycles, |Aut| = 384, stabilizer, quotient",
            family_four_structure,
        ),
        (
            "odd m twelve-case g: relations, |<R(a^2),R(b),g>| = 24m, regular, Cayley",
            odd_twelve_m_witness,
        ),
        (
            "m = 2 mod 4 witnesses g_1, g_2: relations, regular, Cayley",
            even_twelve_m_witnesses,
        ),
        (
            "triple invariances under Aut(H) and swap (100 random triples)",
            triple_invariances,
        ),
        (
            "normalizer of R(H) equals R(H)F or R(H)<F, delta> (2-type, n <= 8)",
            normalizer_structure,
        ),
        (
            "engine agrees with naive Aut and all-subgroups Cayley oracles",
            engine_oracles,
        ),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut tally = Tally::default();
        if let Err(e) = run(&mut tally) {
            tally.failures.push(format!("error: {e}"));
        }
        let status = if tally.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "criterion {:>2} {status}  {name}  [{} checks, {:.2?}]",
            k + 1,
            tally.checks,
            start.elapsed()
        );
        for f in tally.failures.iter().take(10) {
            println!("      {f}");
        }
        if tally.failures.len() > 10 {
            println!("      ... {} more", tally.failures.len() - 10);
        }
        failed += usize::from(!tally.failures.is_empty());
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
