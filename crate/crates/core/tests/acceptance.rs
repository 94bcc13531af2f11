//! Acceptance criteria 1 to 11, one PASS/FAIL line each.

mod common;

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use common::{
    centric_oracle, focal_bound_oracle, fully_centralized_oracle, fully_normalized_oracle, normal_pairs,
    strongly_closed_oracle, system, systems, tables,
};
use fuselab::catalog::catalog_entry;
use fuselab::fusion::{Ambient, FusionSystem, StatusFailure, SylowEmbedding};
use fuselab::group::{CoreMode, GroupMap, MapGroup, ResidualMode, Subgroup};
use fuselab::linking::{centralizer_consequences, check_linking_axioms, linking_of_group};
use fuselab::subsystem::{
    centralizer_of_subsystem, hyperfocal_subgroup, normality_report, outer_automizer_model, p_power_index_subsystem,
    p_prime_residual, p_residual, quotient_system, reduction_limit, reduction_limit_gradual,
    reduction_limit_with_schedule, verify_solvable_reduction, StepKind, SubsystemChain,
};

const PER_SYSTEM_SATURATION: Duration = Duration::from_secs(30);
const PER_SYSTEM_ALPERIN: Duration = Duration::from_secs(60);
const SOLVABLE_TOTAL: Duration = Duration::from_secs(120);
const LINKING_TOTAL: Duration = Duration::from_secs(60);
const SELFTEST_TOTAL: Duration = Duration::from_secs(600);

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn local(emb: &SylowEmbedding, name: &str, gens: &str) -> Subgroup {
    let entry = catalog_entry(name).unwrap();
    let els = entry.spec.parse_elements(emb.group(), gens).unwrap();
    emb.to_local(&emb.group().generate_subgroup(&els)).unwrap()
}

fn embedding(name: &str, p: usize) -> SylowEmbedding {
    SylowEmbedding::new(&catalog_entry(name).unwrap().build().unwrap(), p).unwrap()
}

fn saturation() -> Outcome {
    let mut slow = Vec::new();
    let mut unsaturated = Vec::new();
    let mut pairs = 0;
    for entry in fuselab::catalog::builtin_catalog() {
        for &p in &entry.primes {
            pairs += 1;
            let start = Instant::now();
            let f = fuselab::fusion::fusion_of_group(&entry.build().unwrap(), p).unwrap();
            let (ok, _) = f.is_saturated(None);
            if start.elapsed() > PER_SYSTEM_SATURATION {
                slow.push(format!("{} p={p}", entry.name));
            }
            if !ok {
                unsaturated.push(format!("{} p={p}", entry.name));
            }
        }
    }

    let v = catalog_entry("V4").unwrap().build().unwrap();
    let amb = Ambient::whole(v.clone()).unwrap();
    let halves: Vec<&Subgroup> = amb.subgroups().iter().filter(|s| s.order() == 2).collect();
    let (a, b) = (halves[0], halves[1]);
    let x = a.iter().find(|&e| e != v.identity()).unwrap();
    let y = b.iter().find(|&e| e != v.identity()).unwrap();
    let phi = GroupMap::new(&v, a, b, [(v.identity(), v.identity()), (x, y)]).unwrap();
    let f = FusionSystem::close(&amb, &v.whole(), 2, &[phi]).unwrap();
    let (sat, witness) = f.is_saturated(None);
    let receptivity_witness = witness.as_ref().is_some_and(|w| {
        !w.members.is_empty()
            && w.members.iter().all(|(_, why)| {
                why.iter()
                    .any(|r| matches!(r, StatusFailure::NotReceptive { .. }))
            })
    });

    outcome(
        unsaturated.is_empty() && slow.is_empty() && !sat && receptivity_witness,
        format!(
            "{pairs} catalog systems, unsaturated {unsaturated:?}, over 30 s {slow:?}; single isomorphism saturated={sat}, receptivity witness={receptivity_witness}"
        ),
    )
}

fn receptivity() -> Outcome {
    let mut checked = 0;
    let mut exceptions = Vec::new();
    for c in systems() {
        let f = &c.system;
        for p in f.objects() {
            let st = f.subgroup_status(&p).unwrap();
            checked += 1;
            let fc = fully_centralized_oracle(f, &p);
            let fnorm = fully_normalized_oracle(f, &p);
            if st.fully_centralized != fc
                || st.fully_normalized != fnorm
                || fc != st.receptive
                || fnorm != (st.fully_automized && st.receptive)
            {
                exceptions.push(format!("{} p={} |P|={}", c.name, c.p, p.order()));
            }
        }
    }
    outcome(
        exceptions.is_empty(),
        format!("{checked} subgroups, exceptions {exceptions:?}"),
    )
}

/// `O_p(Aut_F(R)) = Inn(R)`.
fn radical_oracle(f: &FusionSystem, r: &Subgroup) -> bool {
    let mg = MapGroup::from_closed(f.automizer(r).unwrap()).unwrap();
    mg.group.core(f.p(), CoreMode::P).order() == r.order() / f.group().center(r).order()
}

fn alperin_one(f: &FusionSystem) -> Result<String, String> {
    let objects = f.objects();
    let mut morphisms = 0;
    for p in &objects {
        for q in &objects {
            for phi in f.hom_set(p, q).unwrap() {
                morphisms += 1;
                let d = f.alperin_decompose(&phi).map_err(|e| e.to_string())?;
                if d.recompose().table() != phi.table() {
                    return Err(format!("recomposition differs for a map of order {}", p.order()));
                }
                for st in &d.steps {
                    let r = &st.subgroup;
                    if !(fully_normalized_oracle(f, r) && centric_oracle(f, r) && radical_oracle(f, r)) {
                        return Err(format!("step through a subgroup of order {} that is not admissible", r.order()));
                    }
                    if !f.contains_map(&st.automorphism) || st.automorphism.domain() != r {
                        return Err("step automorphism is not in Aut_F(R)".into());
                    }
                }
            }
        }
    }
    let reps: Vec<Subgroup> = objects
        .iter()
        .filter(|r| fully_normalized_oracle(f, r) && centric_oracle(f, r) && radical_oracle(f, r))
        .cloned()
        .collect();
    let gens: Vec<GroupMap> = reps.iter().flat_map(|r| f.automizer(r).unwrap()).collect();
    let regen = FusionSystem::close(f.ambient(), f.sylow(), f.p(), &gens).unwrap();
    if !regen.fusion_equals(f) || regen.morphism_count() != f.morphism_count() {
        return Err("automizers do not regenerate the system".into());
    }
    Ok(format!("{morphisms} morphisms, {} generating subgroups", reps.len()))
}

fn alperin() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, p) in [("S4", 2), ("S5", 2), ("A6", 2), ("S3", 3)] {
        let start = Instant::now();
        let r = alperin_one(&system(name, p).system);
        let elapsed = start.elapsed();
        ok &= r.is_ok() && elapsed <= PER_SYSTEM_ALPERIN;
        parts.push(format!("{name}: {} in {:.2}s", r.unwrap_or_else(|e| e), elapsed.as_secs_f64()));
    }
    outcome(ok, parts.join("; "))
}

fn hyperfocal_oracle() -> Outcome {
    let emb = embedding("S4", 2);
    let f = emb.fusion_system().unwrap();
    let v4 = local(&emb, "S4", "(1 2)(3 4),(1 3)(2 4)");
    let hyp = hyperfocal_subgroup(&f);
    let residual = emb.group().residual(2, ResidualMode::P);
    let s_meet = emb.to_local(&residual.meet(emb.sylow())).unwrap();
    let hyp_ok = hyp == v4 && hyp == s_meet;

    let a4 = {
        let entry = catalog_entry("S4").unwrap();
        let els = entry.spec.parse_elements(emb.group(), "(1 2 3),(1 2)(3 4)").unwrap();
        emb.group().generate_subgroup(&els)
    };
    let op = p_residual(&f).unwrap();
    let a4_system = emb.fusion_of_subgroup(&a4).unwrap();
    let standalone = SylowEmbedding::new(&catalog_entry("A4").unwrap().build().unwrap(), 2)
        .unwrap()
        .fusion_system()
        .unwrap();
    let op_ok = op.fusion_equals(&a4_system)
        && op.sylow() == &v4
        && op.automizer_order(&v4).unwrap() == 3
        && op.morphism_count() == standalone.morphism_count()
        && op.class_count() == standalone.class_count();

    let a4f = &system("A4", 2).system;
    let res = p_prime_residual(a4f).unwrap();
    let inner = FusionSystem::inner(a4f.ambient(), a4f.sylow(), 2).unwrap();
    let res_ok = res.fusion_equals(&inner) && res.automizer_order(a4f.sylow()).unwrap() == 1;

    outcome(
        hyp_ok && op_ok && res_ok,
        format!("hyp = V4: {hyp_ok}; O^2 = F(A4): {op_ok}; O^2' of F(A4) = F(V4): {res_ok}"),
    )
}

fn quotients() -> Outcome {
    let mut cases = 0;
    let mut bad = Vec::new();
    for c in systems() {
        let f = &c.system;
        let g = f.group();
        let closed = f.strongly_closed_subgroups();
        let oracle: Vec<Subgroup> = f.objects().into_iter().filter(|t| strongly_closed_oracle(f, t)).collect();
        if closed != oracle {
            bad.push(format!("{} p={}: strongly closed list", c.name, c.p));
            continue;
        }
        let hyp = hyperfocal_subgroup(f);
        for t in &closed {
            cases += 1;
            let tag = format!("{} p={} |T|={}", c.name, c.p, t.order());
            let q = quotient_system(f, t).unwrap();
            if hyperfocal_subgroup(&q.system) != q.project(&g.join(t, &hyp)) {
                bad.push(format!("{tag}: hyperfocal of quotient"));
            }
            let tc = g.join(t, &g.centralizer(f.sylow(), t));
            if !strongly_closed_oracle(f, &tc) {
                bad.push(format!("{tag}: TC_S(T) not strongly closed"));
                continue;
            }
            let m = outer_automizer_model(f, t).unwrap();
            let out_s = f.sylow_automizer(t).len() / (t.order() / g.center(t).order());
            let bijective = m.iso.iter().collect::<HashSet<_>>().len() == m.iso.len()
                && m.iso.len() == m.out_system.group().order();
            if !(m.isomorphic
                && bijective
                && m.quotient.system.sylow().order() == out_s
                && m.out_system.sylow().order() == out_s
                && m.quotient.system.morphism_count() == m.out_system.morphism_count()
                && m.quotient.system.class_count() == m.out_system.class_count())
            {
                bad.push(format!("{tag}: outer automizer model"));
            }
        }
    }
    outcome(bad.is_empty(), format!("{cases} strongly closed subgroups, failures {bad:?}"))
}

fn focal_bound() -> Outcome {
    let mut cases = 0;
    let mut bad = Vec::new();
    for c in systems() {
        let f = &c.system;
        let hyp = hyperfocal_subgroup(f);
        for t in f.strongly_closed_subgroups() {
            cases += 1;
            if !hyp.is_subgroup_of(&focal_bound_oracle(f, &t)) {
                bad.push(format!("{} p={} |T|={}", c.name, c.p, t.order()));
            }
        }
    }
    outcome(bad.is_empty(), format!("{cases} strongly closed subgroups, failures {bad:?}"))
}

/// Each recorded step is a residual or a p-power index subsystem of its
/// predecessor.
fn chain_is_valid(chain: &SubsystemChain) -> bool {
    chain.steps.iter().enumerate().all(|(k, kind)| {
        let (from, to) = (&chain.systems[k], &chain.systems[k + 1]);
        match kind {
            StepKind::PPrimeIndex => p_prime_residual(from).unwrap().fusion_equals(to),
            StepKind::PPowerIndex => {
                let u = to.sylow();
                hyperfocal_subgroup(from).is_subgroup_of(u)
                    && p_power_index_subsystem(from, u).unwrap().fusion_equals(to)
            }
        }
    })
}

fn limits() -> Outcome {
    use StepKind::*;
    let schedules = [
        vec![PPowerIndex, PPrimeIndex],
        vec![PPrimeIndex, PPowerIndex],
        vec![PPrimeIndex, PPrimeIndex, PPowerIndex],
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, p) in [("S4", 2), ("S5", 2)] {
        let f = &system(name, p).system;
        let mut runs: Vec<(FusionSystem, SubsystemChain)> = schedules
            .iter()
            .map(|s| reduction_limit_with_schedule(f, s).unwrap())
            .collect();
        runs.push(reduction_limit_gradual(f).unwrap());
        let valid = runs.iter().all(|(lim, chain)| chain_is_valid(chain) && chain.last().fusion_equals(lim));
        let signatures: HashSet<(Vec<StepKind>, Vec<usize>)> = runs
            .iter()
            .map(|(_, chain)| (chain.steps.clone(), chain.sylow_orders()))
            .collect();
        let same = runs.windows(2).all(|w| w[0].0.fusion_equals(&w[1].0));
        let trivial = runs[0].0.sylow().order() == 1;
        ok &= valid && same && signatures.len() >= 2 && trivial;
        parts.push(format!(
            "{name}: {} interleavings, {} distinct, valid={valid}, one limit={same}, limit trivial={trivial}",
            runs.len(),
            signatures.len()
        ));
    }
    outcome(ok, parts.join("; "))
}

fn solvable() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, gens, p) in [
        ("S5", "(1 2 3),(1 2)(3 4),(2 3)(4 5)", 2),
        ("S3", "(1 2 3)", 3),
        ("S4", "(1 2 3),(1 2)(3 4)", 2),
    ] {
        let entry = catalog_entry(name).unwrap();
        let g = entry.build().unwrap();
        let n = g.generate_subgroup(&entry.spec.parse_elements(&g, gens).unwrap());
        let emb = SylowEmbedding::new(&g, p).unwrap();
        let f = emb.fusion_system().unwrap();
        let e = emb.fusion_of_subgroup(&n).unwrap();
        let t = e.sylow();

        let normal = normality_report(&f, &e).is_normal();
        let inside = centralizer_of_subsystem(&f, &e).unwrap().is_subgroup_of(t);
        let aut_f = MapGroup::from_closed(f.automizer(t).unwrap()).unwrap();
        let aut_e = aut_f.subgroup_of(&e.automizer(t).unwrap()).unwrap();
        let quotient = aut_f.group.quotient_group(&aut_e).unwrap();
        let p_solvable = quotient.group.is_p_solvable(p).0;
        let f_inf = reduction_limit(&f).unwrap().0;
        let e_inf = reduction_limit(&e).unwrap().0;
        let equal = f_inf.fusion_equals(&e_inf);
        let report = verify_solvable_reduction(&f, &e).unwrap();
        let agrees = report.holds() && report.automizer_quotient_solvable == p_solvable;
        ok &= normal && inside && p_solvable && equal && agrees;
        parts.push(format!(
            "({name}, N of order {}): normal={normal}, C_S(E)<=T={inside}, p-solvable={p_solvable}, limits equal={equal}",
            n.order()
        ));
    }
    let elapsed = start.elapsed();
    outcome(
        ok && elapsed <= SOLVABLE_TOTAL,
        format!("{} in {:.2}s", parts.join("; "), elapsed.as_secs_f64()),
    )
}

/// Saturated subsystems over S containing `O^{p'}(Aut_F(P))` for every P,
/// one for each subgroup A of `Aut_F(S)` realized as their automizer of S.
fn index_prime_to_p(f: &FusionSystem) -> Vec<FusionSystem> {
    let s = f.sylow();
    let mut base = Vec::new();
    for q in f.objects() {
        let mg = MapGroup::from_closed(f.automizer(&q).unwrap()).unwrap();
        base.extend(mg.maps_of(&mg.group.residual(f.p(), ResidualMode::PPrime)));
    }
    let top = MapGroup::from_closed(f.automizer(s).unwrap()).unwrap();
    let mut out = Vec::new();
    for a in top.group.all_subgroups(&top.group.whole()).unwrap() {
        let maps = top.maps_of(&a);
        let mut gens = base.clone();
        gens.extend(maps.iter().cloned());
        let e = FusionSystem::close(f.ambient(), s, f.p(), &gens).unwrap();
        if tables(&e.automizer(s).unwrap()) == tables(&maps) && e.is_saturated(None).0 {
            out.push(e);
        }
    }
    out
}

fn minimality() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, p) in [("A4", 2), ("S3", 3)] {
        let f = &system(name, p).system;
        let res = p_prime_residual(f).unwrap();
        let candidates = index_prime_to_p(f);
        let present = candidates.iter().any(|c| c.fusion_equals(&res));
        let least = candidates.iter().all(|c| c.contains_system(&res));
        let smallest = candidates.iter().map(|c| c.morphism_count()).min() == Some(res.morphism_count());
        ok &= present && least && smallest && candidates.len() >= 2;
        parts.push(format!(
            "{name}: {} candidates, residual present={present}, contained in all={least}",
            candidates.len()
        ));
    }
    outcome(ok, parts.join("; "))
}

fn linking() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut parts = Vec::new();
    for name in ["C2", "S4", "S5", "A6"] {
        let g = catalog_entry(name).unwrap().build().unwrap();
        let l = linking_of_group(&g, 2).unwrap();
        let f = l.fusion();
        let axioms = check_linking_axioms(&l).passes();
        let mut cardinality = true;
        let mut decomposition = true;
        for i in 0..l.object_count() {
            let p = &l.objects()[i];
            let z = f.group().center(p);
            for j in 0..l.object_count() {
                let hom = f.hom_set(p, &l.objects()[j]).unwrap().len();
                cardinality &= l.morphism_count(i, j) == hom * z.order();
            }
            let parent = l.object_in_group(i);
            let zp = l.embedding().to_parent(&z);
            let c = g.centralizer(&g.whole(), parent);
            let odd: Vec<usize> = c.iter().filter(|&x| g.element_order(x) % 2 == 1).collect();
            let mut kernel = l.kernel(i).to_vec();
            kernel.sort_unstable();
            let k = g.subgroup_from_elements(&odd);
            decomposition &= kernel == odd
                && k.is_ok()
                && zp.order() * odd.len() == c.order()
                && zp.meet(k.as_ref().unwrap()).is_trivial()
                && zp.iter().all(|a| odd.iter().all(|&b| g.mul(a, b) == g.mul(b, a)));
        }
        ok &= axioms && cardinality && decomposition;
        parts.push(format!(
            "{name}: {} objects, axioms={axioms}, cardinality={cardinality}, C_G(P)=Z(P)xK={decomposition}",
            l.object_count()
        ));
    }

    let mut qualifying = 0;
    let mut consequences = true;
    for (i, c) in systems().iter().enumerate() {
        let f = &c.system;
        let g = f.group();
        for pair in normal_pairs()[i].iter().filter(|pair| pair.centralizer_inside) {
            qualifying += 1;
            let t = pair.e.sylow();
            let cst = g.centralizer(f.sylow(), t);
            let tc = g.join(t, &cst);
            let abelian = tc.iter().all(|x| tc.iter().all(|y| t.contains(g.commutator(x, y))));
            let odd_inside = f.p() == 2 || cst.is_subgroup_of(t);
            let r = centralizer_consequences(f, &pair.e).unwrap();
            consequences &= abelian && odd_inside && r.holds() && r.quotient_order == tc.order() / t.order();
        }
    }
    ok &= consequences;
    parts.push(format!("consequences on {qualifying} qualifying pairs: {consequences}"));

    let elapsed = start.elapsed();
    outcome(
        ok && elapsed <= LINKING_TOTAL,
        format!("{} in {:.2}s", parts.join("; "), elapsed.as_secs_f64()),
    )
}

fn selftest_binary() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_fuselab"))
        .arg("selftest")
        .output()
        .expect("the binary runs");
    let elapsed = start.elapsed();
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap_or_default();
    let suites: Vec<&str> = report["results"]["suites"]
        .as_array()
        .map(|a| a.iter().filter_map(|s| s["suite"].as_str()).collect())
        .unwrap_or_default();
    let all_passed = report["results"]["passed"] == serde_json::Value::Bool(true);
    let expected = fuselab::selftest::SUITES.to_vec();
    let code = out.status.code();
    outcome(
        code == Some(0) && all_passed && suites == expected && elapsed <= SELFTEST_TOTAL,
        format!("exit {code:?}, {} suites, all passed={all_passed}, {:.2}s", suites.len(), elapsed.as_secs_f64()),
    )
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("saturation", saturation),
        ("receptivity", receptivity),
        ("alperin", alperin),
        ("hyperfocal and residual oracle", hyperfocal_oracle),
        ("quotients", quotients),
        ("hyperfocal bound", focal_bound),
        ("limit invariance", limits),
        ("solvable reduction", solvable),
        ("residual minimality", minimality),
        ("linking", linking),
        ("selftest binary", selftest_binary),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let n = k + 1;
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str()) || *f == n.to_string()) {
            continue;
        }
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|e| outcome(false, format!("panicked: {:?}", e.downcast_ref::<String>())));
        let status = if result.ok { "PASS" } else { "FAIL" };
        if !result.ok {
            failed += 1;
        }
        println!(
            "criterion {n:>2} {name}: {status} [{:.2}s] {}",
            start.elapsed().as_secs_f64(),
            result.detail
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
