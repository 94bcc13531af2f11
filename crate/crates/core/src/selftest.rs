//! Property suites over the bundled catalog.

use std::collections::HashSet;

use serde::Serialize;

use crate::catalog::{builtin_catalog, catalog_entry};
use crate::error::{FuseError, Result};
use crate::fusion::{Ambient, FusionSystem, StatusFailure, SylowEmbedding};
use crate::group::{CoreMode, FiniteGroup, GroupMap, MapGroup, ResidualMode, Subgroup};
use crate::linking::{centralizer_consequences, check_linking_axioms, linking_of_group};
use crate::subsystem::{
    focal_bound, hyperfocal_subgroup, outer_automizer_model, p_prime_residual, p_residual,
    quotient_system, reduction_limit_gradual, reduction_limit_with_schedule, verify_solvable_reduction, StepKind,
};

pub const SUITES: [&str; 10] = [
    "saturation",
    "receptivity",
    "alperin",
    "hyperfocal",
    "quotient",
    "focal-bound",
    "limit",
    "solvable",
    "minimality",
    "linking",
];

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub case: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub passed: bool,
    pub cases: Vec<CaseResult>,
}

/// A catalog group with its system at one prime.
pub struct CatalogSystem {
    pub name: String,
    pub p: usize,
    pub embedding: SylowEmbedding,
    pub system: FusionSystem,
}

/// `F_S(G)` for every catalog entry and listed prime, optionally only at `p`.
pub fn catalog_systems(prime: Option<usize>) -> Result<Vec<CatalogSystem>> {
    let mut out = Vec::new();
    for e in builtin_catalog() {
        let g = e.build()?;
        for &p in &e.primes {
            if prime.is_some_and(|q| q != p) {
                continue;
            }
            let embedding = SylowEmbedding::new(&g, p)?;
            let system = embedding.fusion_system()?;
            out.push(CatalogSystem {
                name: e.name.clone(),
                p,
                embedding,
                system,
            });
        }
    }
    Ok(out)
}

fn named(name: &str, p: usize) -> Result<(FiniteGroup, SylowEmbedding, FusionSystem)> {
    let g = catalog_entry(name)?.build()?;
    let emb = SylowEmbedding::new(&g, p)?;
    let f = emb.fusion_system()?;
    Ok((g, emb, f))
}

struct Cases(Vec<CaseResult>);

impl Cases {
    fn new() -> Self {
        Cases(Vec::new())
    }

    fn push(&mut self, case: impl Into<String>, outcome: Result<std::result::Result<String, String>>) {
        let (passed, detail) = match outcome {
            Ok(Ok(d)) => (true, d),
            Ok(Err(d)) => (false, d),
            Err(e) => (false, format!("error: {e}")),
        };
        self.0.push(CaseResult {
            case: case.into(),
            passed,
            detail,
        });
    }
}

fn verdict(ok: bool, pass: impl Into<String>, fail: impl Into<String>) -> std::result::Result<String, String> {
    if ok {
        Ok(pass.into())
    } else {
        Err(fail.into())
    }
}

fn label(c: &CatalogSystem) -> String {
    format!("{} p={}", c.name, c.p)
}

fn saturation(systems: &[CatalogSystem], prime: Option<usize>) -> Vec<CaseResult> {
    let mut cases = Cases::new();
    for c in systems {
        let (ok, w) = c.system.is_saturated(None);
        cases.push(label(c), Ok(verdict(ok, "saturated", format!("witness: {w:?}"))));
    }
    if prime.is_none_or(|p| p == 2) {
        cases.push("single isomorphism over V4", single_iso_unsaturated());
    }
    cases.0
}

/// Inner fusion of V4 together with one isomorphism between two of its
/// subgroups of order 2.
pub fn single_iso_system() -> Result<FusionSystem> {
    let v = catalog_entry("V4")?.build()?;
    let amb = Ambient::whole(v.clone())?;
    let subs = amb.subgroups().to_vec();
    let (a, b) = (&subs[1], &subs[2]);
    let x = a.iter().find(|&e| e != 0).expect("order 2");
    let y = b.iter().find(|&e| e != 0).expect("order 2");
    let phi = GroupMap::new(&v, a, b, [(0, 0), (x, y)])?;
    FusionSystem::close(&amb, &v.whole(), 2, &[phi])
}

fn single_iso_unsaturated() -> Result<std::result::Result<String, String>> {
    let f = single_iso_system()?;
    let (ok, w) = f.is_saturated(None);
    let receptive_witness = w.as_ref().is_some_and(|w| {
        w.members.iter().all(|(_, why)| {
            why.iter()
                .any(|r| matches!(r, StatusFailure::NotReceptive { .. }))
        })
    });
    Ok(verdict(
        !ok && receptive_witness,
        "unsaturated, every class member fails receptivity",
        format!("saturated={ok}, witness={w:?}"),
    ))
}

fn receptivity(systems: &[CatalogSystem]) -> Vec<CaseResult> {
    let mut cases = Cases::new();
    for c in systems {
        let f = &c.system;
        let outcome = (|| {
            let mut bad = Vec::new();
            for p in f.objects() {
                let st = f.subgroup_status(&p)?;
                if st.fully_centralized != st.receptive
                    || st.fully_normalized != (st.fully_automized && st.receptive)
                {
                    bad.push(p.order());
                }
            }
            Ok(verdict(
                bad.is_empty(),
                format!("{} subgroups", f.object_count()),
                format!("exceptions at subgroup orders {bad:?}"),
            ))
        })();
        cases.push(label(c), outcome);
    }
    cases.0
}

/// Every morphism of `f` decomposes through fully normalized centric radical
/// subgroups and recomposes exactly; their automizers regenerate `f`.
pub fn alperin_check(f: &FusionSystem) -> Result<std::result::Result<String, String>> {
    let s = f.sylow();
    let mut total = 0;
    for p in f.objects() {
        for phi in f.hom_set(&p, s)? {
            let d = f.alperin_decompose(&phi)?;
            if !d.verify() {
                return Ok(Err(format!("decomposition of a map on a subgroup of order {} does not recompose", p.order())));
            }
            for st in &d.steps {
                let status = f.subgroup_status(&st.subgroup)?;
                if !(status.fully_normalized && status.centric && status.radical) {
                    return Ok(Err(format!(
                        "step through a subgroup of order {} that is not fully normalized centric radical",
                        st.subgroup.order()
                    )));
                }
            }
            total += 1;
        }
    }
    let mut gens = Vec::new();
    let reps = f.centric_radical_representatives()?;
    for r in &reps {
        gens.extend(f.automizer(r)?);
    }
    gens.extend(f.automizer(s)?);
    let again = FusionSystem::close(f.ambient(), s, f.p(), &gens)?;
    Ok(verdict(
        again.fusion_equals(f),
        format!("{total} morphisms through {} essential classes", reps.len()),
        "automizers of centric radical subgroups do not regenerate the system",
    ))
}

const ALPERIN_CASES: [(&str, usize); 4] = [("S4", 2), ("S5", 2), ("A6", 2), ("S3", 3)];

fn alperin(prime: Option<usize>) -> Vec<CaseResult> {
    let mut cases = Cases::new();
    for (name, p) in ALPERIN_CASES {
        if prime.is_some_and(|q| q != p) {
            continue;
        }
        let outcome = named(name, p).and_then(|(_, _, f)| alperin_check(&f));
        cases.push(format!("{name} p={p}"), outcome);
    }
    cases.0
}

fn hyperfocal(prime: Option<usize>) -> Vec<CaseResult> {
    let mut cases = Cases::new();
    if prime.is_some_and(|q| q != 2) {
        return cases.0;
    }
    let setup = named("S4", 2);
    let outcome = setup.as_ref().map_err(Clone::clone).map(|(g, emb, f)| {
        let v4 = emb.to_local(&g.core(2, CoreMode::P)).expect("inside S");
        let hyp = hyperfocal_subgroup(f);
        verdict(hyp == v4, "hyp = V4", format!("hyp has order {}", hyp.order()))
    });
    cases.push("hyp of S4 at 2", outcome);
    let outcome = setup.as_ref().map_err(Clone::clone).and_then(|(g, emb, f)| {
        let a4 = emb.fusion_of_subgroup(&g.residual(2, ResidualMode::P))?;
        let res = p_residual(f)?;
        Ok(verdict(res.fusion_equals(&a4), "O^2 equals the A4 system", "O^2 differs from the A4 system"))
    });
    cases.push("O^2 of S4 at 2", outcome);
    let outcome = named("A4", 2).and_then(|(_, _, f)| {
        let res = p_prime_residual(&f)?;
        let inner = FusionSystem::inner(f.ambient(), f.sylow(), 2)?;
        Ok(verdict(res.fusion_equals(&inner), "O^{2'} is inner", "O^{2'} is not inner"))
    });
    cases.push("O^{2'} of A4 at 2", outcome);
    cases.0
}

fn quotient(systems: &[CatalogSystem]) -> Vec<CaseResult> {
    let mut cases = Cases::new();
    for c in systems {
        let f = &c.system;
        let outcome = (|| {
            let g = f.group();
            let hyp = hyperfocal_subgroup(f);
            let closed = f.strongly_closed_subgroups();
            for t in &closed {
                let q = quotient_system(f, t)?;
                let expected = q.project(&g.join(t, &hyp));
                if hyperfocal_subgroup(&q.system) != expected {
                    return Ok(Err(format!("hyp(F/T) wrong for T of order {}", t.order())));
                }
                let tc = g.join(t, &g.centralizer(f.sylow(), t));
                if !f.is_strongly_closed(&tc)? {
                    return Ok(Err(format!("TC_S(T) not strongly closed for T of order {}", t.order())));
                }
                if !outer_automizer_model(f, t)?.isomorphic {
                    return Ok(Err(format!(
                        "F/TC_S(T) is not the outer automizer system for T of order {}",
                        t.order()
                    )));
                }
            }
            Ok(Ok(format!("{} strongly closed subgroups", closed.len())))
        })();
        cases.push(label(c), outcome);
    }
    cases.0
}

fn focal(systems: &[CatalogSystem]) -> Vec<CaseResult> {
    let mut cases = Cases::new();
    for c in systems {
        let f = &c.system;
        let outcome = (|| {
            let hyp = hyperfocal_subgroup(f);
            let closed = f.strongly_closed_subgroups();
            for t in &closed {
                if !hyp.is_subgroup_of(&focal_bound(f, t)?) {
                    return Ok(Err(format!("bound fails for T of order {}", t.order())));
                }
            }
            Ok(Ok(format!("{} strongly closed subgroups", closed.len())))
        })();
        cases.push(label(c), outcome);
    }
    cases.0
}

/// Step schedules used for the limit comparison.
pub fn schedules() -> Vec<Vec<StepKind>> {
    use StepKind::*;
    vec![
        vec![PPowerIndex, PPrimeIndex],
        vec![PPrimeIndex, PPowerIndex],
        vec![PPowerIndex, PPowerIndex, PPrimeIndex],
    ]
}

/// Limits of `f` under every schedule and under gradual descent; passes
/// when they all agree and at least two recorded step sequences differ.
pub fn limit_check(f: &FusionSystem) -> Result<std::result::Result<String, String>> {
    let mut limits = Vec::new();
    let mut sequences: Vec<Vec<StepKind>> = Vec::new();
    for sch in schedules() {
        let (lim, chain) = reduction_limit_with_schedule(f, &sch)?;
        sequences.push(chain.steps);
        limits.push(lim);
    }
    let (lim, chain) = reduction_limit_gradual(f)?;
    sequences.push(chain.steps);
    limits.push(lim);
    let same = limits.windows(2).all(|w| w[0].fusion_equals(&w[1]));
    let distinct: HashSet<&Vec<StepKind>> = sequences.iter().collect();
    Ok(verdict(
        same && distinct.len() >= 2,
        format!(
            "{} step sequences, {} distinct, one limit over order {}",
            sequences.len(),
            distinct.len(),
            limits[0].sylow().order()
        ),
        format!("limits agree: {same}; sequences {sequences:?}"),
    ))
}

fn limit(prime: Option<usize>) -> Vec<CaseResult> {
    let mut cases = Cases::new();
    for (name, p) in [("S4", 2), ("S5", 2)] {
        if prime.is_some_and(|q| q != p) {
            continue;
        }
        let outcome = named(name, p).and_then(|(_, _, f)| limit_check(&f));
        cases.push(format!("{name} p={p}"), outcome);
    }
    cases.0
}

/// `(G, generators of N, p)` pairs for the solvable reduction suite.
pub const SOLVABLE_CASES: [(&str, &str, usize); 3] = [
    ("S5", "(1 2 3),(1 2)(3 4),(2 3)(4 5)", 2),
    ("S3", "(1 2 3)", 3),
    ("S4", "(1 2 3),(1 2)(3 4)", 2),
];

/// `F_S(G)` and `F_{S∩N}(N)` for `N` generated by `gens`.
pub fn group_pair(name: &str, gens: &str, p: usize) -> Result<(FusionSystem, FusionSystem)> {
    let entry = catalog_entry(name)?;
    let g = entry.build()?;
    let elems = entry.spec.parse_elements(&g, gens)?;
    let n = g.generate_subgroup(&elems);
    let emb = SylowEmbedding::new(&g, p)?;
    Ok((emb.fusion_system()?, emb.fusion_of_subgroup(&n)?))
}

fn solvable(prime: Option<usize>) -> Vec<CaseResult> {
    let mut cases = Cases::new();
    for (name, gens, p) in SOLVABLE_CASES {
        if prime.is_some_and(|q| q != p) {
            continue;
        }
        let outcome = group_pair(name, gens, p).and_then(|(f, e)| {
            let r = verify_solvable_reduction(&f, &e)?;
            Ok(verdict(
                r.holds() && r.automizer_quotient_solvable,
                format!("limits agree over order {}", r.f_limit.sylow().order()),
                format!("limits differ: {} vs {}", r.f_limit.sylow().order(), r.e_limit.sylow().order()),
            ))
        });
        cases.push(format!("{name} over <{gens}> p={p}"), outcome);
    }
    cases.0
}

/// Every subsystem over S of index prime to p, one per subgroup of
/// `Aut_F(S)` that is realized as `Aut_E(S)`.
pub fn index_prime_to_p_candidates(f: &FusionSystem) -> Result<Vec<FusionSystem>> {
    let s = f.sylow();
    let p = f.p();
    let mut base = Vec::new();
    for q in f.objects() {
        let mg = MapGroup::from_closed(f.automizer(&q)?)?;
        let res = mg.group.residual(p, ResidualMode::PPrime);
        base.extend(mg.maps_of(&res));
    }
    let top = MapGroup::from_closed(f.automizer(s)?)?;
    let mut out = Vec::new();
    for a in top.group.all_subgroups(&top.group.whole())? {
        let maps = top.maps_of(&a);
        let mut gens = base.clone();
        gens.extend(maps.iter().cloned());
        let e = FusionSystem::close(f.ambient(), s, p, &gens)?;
        let got: HashSet<Vec<u32>> = e.automizer(s)?.iter().map(|m| m.table().to_vec()).collect();
        let want: HashSet<Vec<u32>> = maps.iter().map(|m| m.table().to_vec()).collect();
        if got == want && e.is_saturated(None).0 {
            out.push(e);
        }
    }
    Ok(out)
}

/// The constructed residual is a candidate and lies in every candidate.
pub fn minimality_check(f: &FusionSystem) -> Result<std::result::Result<String, String>> {
    let res = p_prime_residual(f)?;
    let cands = index_prime_to_p_candidates(f)?;
    let present = cands.iter().any(|c| c.fusion_equals(&res));
    let minimal = cands.iter().all(|c| c.contains_system(&res));
    Ok(verdict(
        present && minimal,
        format!("minimum among {} candidates", cands.len()),
        format!("present={present}, contained in all={minimal}"),
    ))
}

fn minimality(prime: Option<usize>) -> Vec<CaseResult> {
    let mut cases = Cases::new();
    for (name, p) in [("A4", 2), ("S3", 3)] {
        if prime.is_some_and(|q| q != p) {
            continue;
        }
        let outcome = named(name, p).and_then(|(_, _, f)| minimality_check(&f));
        cases.push(format!("{name} p={p}"), outcome);
    }
    cases.0
}

/// Normal subgroups `N` of G whose system `E` satisfies `C_S(E) ≤ T`.
pub fn qualifying_subsystems(c: &CatalogSystem) -> Result<Vec<(Subgroup, FusionSystem)>> {
    let g = c.embedding.group();
    let mut out = Vec::new();
    for n in g.normal_subgroups() {
        let e = c.embedding.fusion_of_subgroup(&n)?;
        let cse = crate::subsystem::centralizer_of_subsystem(&c.system, &e)?;
        if cse.is_subgroup_of(e.sylow()) {
            out.push((n, e));
        }
    }
    Ok(out)
}

fn linking(systems: &[CatalogSystem], prime: Option<usize>) -> Vec<CaseResult> {
    let mut cases = Cases::new();
    if prime.is_none_or(|q| q == 2) {
        for name in ["C2", "S4", "S5", "A6"] {
            let outcome = catalog_entry(name)
                .and_then(|e| e.build())
                .and_then(|g| linking_of_group(&g, 2))
                .map(|l| {
                    let r = check_linking_axioms(&l);
                    verdict(
                        r.passes(),
                        format!("{} objects, {} morphisms", r.objects, r.morphisms),
                        r.failures.join("; "),
                    )
                });
            cases.push(format!("linking {name} p=2"), outcome);
        }
    }
    for c in systems {
        let outcome = (|| {
            let pairs = qualifying_subsystems(c)?;
            for (n, e) in &pairs {
                let r = centralizer_consequences(&c.system, e)?;
                if !r.holds() {
                    return Ok(Err(format!("fails for N of order {}: {r:?}", n.order())));
                }
            }
            Ok(Ok(format!("{} qualifying normal subgroups", pairs.len())))
        })();
        cases.push(format!("consequences {}", label(c)), outcome);
    }
    cases.0
}

/// Runs one suite, restricted to cases at `prime` when given.
pub fn run_suite(name: &str, systems: &[CatalogSystem], prime: Option<usize>) -> Result<SuiteResult> {
    let cases = match name {
        "saturation" => saturation(systems, prime),
        "receptivity" => receptivity(systems),
        "alperin" => alperin(prime),
        "hyperfocal" => hyperfocal(prime),
        "quotient" => quotient(systems),
        "focal-bound" => focal(systems),
        "limit" => limit(prime),
        "solvable" => solvable(prime),
        "minimality" => minimality(prime),
        "linking" => linking(systems, prime),
        other => {
            return Err(FuseError::Validation(format!(
                "unknown suite {other:?}; expected one of {}",
                SUITES.join(", ")
            )))
        }
    };
    Ok(SuiteResult {
        suite: name.to_string(),
        passed: cases.iter().all(|c| c.passed),
        cases,
    })
}

/// Runs the selected suites on worker threads; results keep suite order.
pub fn run_selftest(only: Option<&str>, prime: Option<usize>) -> Result<Vec<SuiteResult>> {
    let names: Vec<&str> = match only {
        Some(s) => {
            let wanted: Vec<&str> = s.split(',').map(str::trim).collect();
            for w in &wanted {
                if !SUITES.contains(w) {
                    return Err(FuseError::Validation(format!(
                        "unknown suite {w:?}; expected one of {}",
                        SUITES.join(", ")
                    )));
                }
            }
            SUITES.iter().copied().filter(|s| wanted.contains(s)).collect()
        }
        None => SUITES.to_vec(),
    };
    let systems = catalog_systems(prime)?;
    std::thread::scope(|scope| {
        let handles: Vec<_> = names
            .iter()
            .map(|&n| {
                let systems = &systems;
                scope.spawn(move || run_suite(n, systems, prime))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked"))
            .collect()
    })
}
