//! The `fuselab` command line.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::catalog::catalog_entry;
use crate::error::{FuseError, Result};
use crate::fusion::{FusionSystem, SylowEmbedding};
use crate::group::{FiniteGroup, Subgroup};
use crate::io::{read_group_file, GroupSpec};
use crate::linking::{check_linking_axioms, linking_of_group};
use crate::report::{InputDigest, Report};
use crate::selftest::run_selftest;
use crate::subsystem::{
    centralizer_of_subsystem, hyperfocal_subgroup, normal_p_core, normality_report,
    p_prime_residual, p_residual, reduction, reduction_limit, verify_solvable_reduction,
    NormalityFailure, SubsystemChain,
};

#[derive(Parser, Debug)]
#[command(name = "fuselab", version, about = "Saturated fusion systems of small finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// JSON group document.
    #[arg(long)]
    pub group: Option<PathBuf>,
    /// Name of a bundled catalog group.
    #[arg(long)]
    pub catalog: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[command(flatten)]
    pub source: Source,
    /// The prime.
    #[arg(short = 'p', value_name = "P")]
    pub p: usize,
    /// Also write the report to this file.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify every subgroup of the Sylow subgroup.
    Analyze(Common),
    /// Compute the chain down to the limit of alternating residuals.
    Reduce(Common),
    /// Check that the subsystem of a normal subgroup is normal.
    NormalCheck {
        #[command(flatten)]
        common: Common,
        /// Generators of N: cycles for permutation groups, indices otherwise.
        #[arg(long)]
        normal_gens: String,
    },
    /// Check that F and the subsystem of N have the same limit.
    SolvCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        normal_gens: String,
    },
    /// Build the centric linking system and check its axioms.
    Linking(Common),
    /// Run the property suites over the catalog.
    Selftest {
        /// Comma-separated suite names.
        #[arg(long)]
        only: Option<String>,
        #[arg(long)]
        prime: Option<usize>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

/// Outcome of a command: the report and the exit code it carries.
pub struct Outcome {
    pub report: Report,
    pub exit_code: i32,
}

struct Loaded {
    spec: GroupSpec,
    group: FiniteGroup,
    digest: InputDigest,
}

fn load(source: &Source) -> Result<Loaded> {
    let (spec, digest) = match (&source.group, &source.catalog) {
        (Some(path), _) => {
            let (spec, bytes) = read_group_file(path)?;
            (spec, InputDigest::of_bytes(path.display().to_string(), &bytes))
        }
        (None, Some(name)) => {
            let spec = catalog_entry(name)?.spec;
            let digest = InputDigest::of_bytes(format!("catalog:{name}"), spec.to_json().as_bytes());
            (spec, digest)
        }
        (None, None) => return Err(FuseError::Parse("no group given".into())),
    };
    let group = spec.build()?;
    Ok(Loaded {
        spec,
        group,
        digest,
    })
}

fn labels(g: &FiniteGroup, emb: &SylowEmbedding, h: &Subgroup) -> Vec<String> {
    h.iter().map(|x| g.label(emb.parent_element(x))).collect()
}

fn subgroup_json(g: &FiniteGroup, emb: &SylowEmbedding, h: &Subgroup) -> Value {
    json!({"order": h.order(), "elements": labels(g, emb, h)})
}

fn system_json(g: &FiniteGroup, emb: &SylowEmbedding, f: &FusionSystem) -> Value {
    json!({
        "sylow": subgroup_json(g, emb, f.sylow()),
        "classes": f.class_count(),
        "morphisms": f.morphism_count(),
    })
}

fn chain_json(g: &FiniteGroup, emb: &SylowEmbedding, chain: &SubsystemChain) -> Value {
    let mut steps = vec![json!({"step": "start", "system": system_json(g, emb, &chain.systems[0])})];
    for (kind, sys) in chain.steps.iter().zip(&chain.systems[1..]) {
        steps.push(json!({"step": kind.label(), "system": system_json(g, emb, sys)}));
    }
    Value::Array(steps)
}

fn analyze(l: &Loaded, p: usize) -> Result<(Value, i32)> {
    let g = &l.group;
    let emb = SylowEmbedding::new(g, p)?;
    let f = emb.fusion_system()?;
    let objects = f.objects();
    let index_of = |h: &Subgroup| objects.iter().position(|o| o == h).expect("object");
    let mut subgroups = Vec::new();
    for (i, h) in objects.iter().enumerate() {
        let st = f.subgroup_status(h)?;
        let class: Vec<usize> = f.conjugacy_class(h)?.iter().map(index_of).collect();
        subgroups.push(json!({
            "index": i,
            "order": h.order(),
            "elements": labels(g, &emb, h),
            "class": class,
            "automizer_order": f.automizer_order(h)?,
            "fully_normalized": st.fully_normalized,
            "fully_centralized": st.fully_centralized,
            "fully_automized": st.fully_automized,
            "receptive": st.receptive,
            "centric": st.centric,
            "radical": st.radical,
            "strongly_closed": st.strongly_closed,
        }));
    }
    let (saturated, witness) = f.is_saturated(None);
    let core = normal_p_core(&f)?;
    let hyp = hyperfocal_subgroup(&f);
    let residual = p_residual(&f)?;
    let prime_residual = p_prime_residual(&f)?;
    let results = json!({
        "group": {"name": g.name(), "order": g.order()},
        "p": p,
        "sylow": subgroup_json(g, &emb, f.sylow()),
        "subgroup_count": objects.len(),
        "class_count": f.class_count(),
        "subgroups": subgroups,
        "saturated": saturated,
        "saturation_witness": witness.map(|w| index_of(&w.representative)),
        "centric_radical": f.centric_radical_representatives()?.iter().map(index_of).collect::<Vec<_>>(),
        "strongly_closed": f.strongly_closed_subgroups().iter().map(index_of).collect::<Vec<_>>(),
        "normal_p_core": index_of(&core),
        "hyperfocal": index_of(&hyp),
        "p_residual": system_json(g, &emb, &residual),
        "p_prime_residual": system_json(g, &emb, &prime_residual),
    });
    Ok((results, if saturated { 0 } else { 2 }))
}

fn reduce(l: &Loaded, p: usize) -> Result<(Value, i32)> {
    let g = &l.group;
    let emb = SylowEmbedding::new(g, p)?;
    let f = emb.fusion_system()?;
    let (limit, chain) = reduction_limit(&f)?;
    let red = reduction(&f)?;
    let results = json!({
        "group": {"name": g.name(), "order": g.order()},
        "p": p,
        "chain": chain_json(g, &emb, &chain),
        "limit": {
            "sylow_order": limit.sylow().order(),
            "trivial": limit.sylow().is_trivial(),
        },
        "reduction": {
            "sylow_order": red.sylow().order(),
            "classes": red.class_count(),
        },
    });
    Ok((results, 0))
}

fn failure_label(f: &NormalityFailure) -> &'static str {
    match f {
        NormalityFailure::NotContained(_) => "not_contained",
        NormalityFailure::NotStronglyClosed(_) => "not_strongly_closed",
        NormalityFailure::NotInvariant(_) => "not_invariant",
        NormalityFailure::NoFrattiniFactorization(_) => "no_frattini_factorization",
        NormalityFailure::NoExtension(_) => "no_extension",
    }
}

struct Pair {
    emb: SylowEmbedding,
    f: FusionSystem,
    e: FusionSystem,
    n: Subgroup,
}

fn pair(l: &Loaded, p: usize, gens: &str) -> Result<Pair> {
    let g = &l.group;
    let elems = l.spec.parse_elements(g, gens)?;
    let n = g.generate_subgroup(&elems);
    let emb = SylowEmbedding::new(g, p)?;
    let f = emb.fusion_system()?;
    let e = emb
        .fusion_of_subgroup(&n)
        .map_err(|e| FuseError::HypothesisViolation(e.to_string()))?;
    Ok(Pair { emb, f, e, n })
}

fn normal_check(l: &Loaded, p: usize, gens: &str) -> Result<(Value, i32)> {
    let g = &l.group;
    let pr = pair(l, p, gens)?;
    let rep = normality_report(&pr.f, &pr.e);
    let failures: Vec<&str> = rep.failures.iter().map(failure_label).collect();
    let centralizer = if rep.is_normal() {
        Some(subgroup_json(g, &pr.emb, &centralizer_of_subsystem(&pr.f, &pr.e)?))
    } else {
        None
    };
    let results = json!({
        "group": {"name": g.name(), "order": g.order()},
        "p": p,
        "normal_subgroup": {"order": pr.n.order(), "normal_in_group": g.is_normal(&pr.n)},
        "subsystem_sylow": subgroup_json(g, &pr.emb, pr.e.sylow()),
        "contained": rep.contained,
        "strongly_closed": rep.strongly_closed,
        "invariance": rep.invariance,
        "frattini": rep.frattini,
        "extension": rep.extension,
        "normal": rep.is_normal(),
        "failures": failures,
        "centralizer_of_subsystem": centralizer,
    });
    Ok((results, if rep.is_normal() { 0 } else { 1 }))
}

fn solv_check(l: &Loaded, p: usize, gens: &str) -> Result<(Value, i32)> {
    let g = &l.group;
    let pr = pair(l, p, gens)?;
    let r = verify_solvable_reduction(&pr.f, &pr.e)?;
    let chain = r.chain.as_ref().map(|c| chain_json(g, &pr.emb, c));
    let results = json!({
        "group": {"name": g.name(), "order": g.order()},
        "p": p,
        "normal_subgroup": {"order": pr.n.order()},
        "subsystem_sylow": subgroup_json(g, &pr.emb, pr.e.sylow()),
        "normal": true,
        "centralizer_inside": true,
        "automizer_quotient_p_solvable": r.automizer_quotient_solvable,
        "outer_p_solvable": r.outer_solvable,
        "f_limit": system_json(g, &pr.emb, &r.f_limit),
        "e_limit": system_json(g, &pr.emb, &r.e_limit),
        "limits_equal": r.limits_equal,
        "chain": chain,
        "chain_limit_equal": r.chain_limit_equal,
        "verdict": r.holds(),
    });
    Ok((results, if r.holds() { 0 } else { 2 }))
}

fn linking(l: &Loaded, p: usize) -> Result<(Value, i32)> {
    let g = &l.group;
    let link = linking_of_group(g, p)?;
    let rep = check_linking_axioms(&link);
    let objects: Vec<Value> = (0..link.object_count())
        .map(|i| {
            let h = link.object_in_group(i);
            json!({
                "order": h.order(),
                "elements": h.iter().map(|x| g.label(x)).collect::<Vec<_>>(),
                "automorphisms": link.morphism_count(i, i),
                "kernel_order": link.kernel(i).len(),
            })
        })
        .collect();
    let results = json!({
        "group": {"name": g.name(), "order": g.order()},
        "p": p,
        "objects": objects,
        "axioms": rep,
        "passed": rep.passes(),
    });
    Ok((results, if rep.passes() { 0 } else { 2 }))
}

/// Runs a parsed command; errors are reported with their exit codes.
pub fn execute(cli: &Cli, argv: Vec<String>) -> Result<Outcome> {
    let start = Instant::now();
    let (inputs, (results, exit_code), json_out) = match &cli.command {
        Command::Analyze(c) => {
            let l = load(&c.source)?;
            (vec![l.digest.clone()], analyze(&l, c.p)?, c.json.clone())
        }
        Command::Reduce(c) => {
            let l = load(&c.source)?;
            (vec![l.digest.clone()], reduce(&l, c.p)?, c.json.clone())
        }
        Command::NormalCheck {
            common: c,
            normal_gens,
        } => {
            let l = load(&c.source)?;
            (vec![l.digest.clone()], normal_check(&l, c.p, normal_gens)?, c.json.clone())
        }
        Command::SolvCheck {
            common: c,
            normal_gens,
        } => {
            let l = load(&c.source)?;
            (vec![l.digest.clone()], solv_check(&l, c.p, normal_gens)?, c.json.clone())
        }
        Command::Linking(c) => {
            let l = load(&c.source)?;
            (vec![l.digest.clone()], linking(&l, c.p)?, c.json.clone())
        }
        Command::Selftest { only, prime, json } => {
            let suites = run_selftest(only.as_deref(), *prime)?;
            let passed = suites.iter().all(|s| s.passed);
            let results = json!({"passed": passed, "suites": suites});
            (Vec::new(), (results, if passed { 0 } else { 2 }), json.clone())
        }
    };
    let report = Report::new(argv, inputs, results, start.elapsed());
    if let Some(path) = json_out {
        std::fs::write(&path, report.to_json())
            .map_err(|e| FuseError::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(Outcome { report, exit_code })
}

/// Parses `argv` (including the program name), runs the command, prints the
/// report to stdout and returns the process exit code.
pub fn run(argv: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli, argv.into_iter().skip(1).collect()) {
        Ok(out) => {
            let _ = writeln!(std::io::stdout().lock(), "{}", out.report.to_json());
            out.exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
