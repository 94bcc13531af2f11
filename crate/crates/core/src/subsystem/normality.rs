use crate::fusion::FusionSystem;
use crate::group::{GroupMap, Subgroup};

/// A failed normality condition with a witness.
#[derive(Clone, Debug)]
pub enum NormalityFailure {
    /// Some morphism of E is not a morphism of F.
    NotContained(GroupMap),
    /// A morphism of F carries a subgroup of T outside T.
    NotStronglyClosed(GroupMap),
    /// An automorphism in `Aut_F(T)` that does not preserve E.
    NotInvariant(GroupMap),
    /// A morphism of F into T that is not `α ∘ φ₀` with `φ₀` in E.
    NoFrattiniFactorization(GroupMap),
    /// An automorphism in `Aut_E(T)` with no admissible extension to `TC_S(T)`.
    NoExtension(GroupMap),
}

/// The conditions for `E ⊴ F`, evaluated exhaustively.
#[derive(Clone, Debug)]
pub struct NormalityReport {
    /// `Mor(E) ⊆ Mor(F)` in a shared ambient.
    pub contained: bool,
    pub strongly_closed: bool,
    pub invariance: bool,
    pub frattini: bool,
    pub extension: bool,
    pub failures: Vec<NormalityFailure>,
}

impl NormalityReport {
    pub fn is_normal(&self) -> bool {
        self.contained && self.strongly_closed && self.invariance && self.frattini && self.extension
    }
}

/// Evaluates whether `E` (over `T ≤ S`) is normal in `F`.
pub fn normality_report(f: &FusionSystem, e: &FusionSystem) -> NormalityReport {
    let mut failures = Vec::new();
    let contained = f.contains_system(e);
    if !contained {
        if let Some(m) = e.generators().into_iter().find(|m| !f.contains_map(m)) {
            failures.push(NormalityFailure::NotContained(m));
        }
        return NormalityReport {
            contained,
            strongly_closed: false,
            invariance: false,
            frattini: false,
            extension: false,
            failures,
        };
    }
    let g = f.group();
    let t = e.sylow().clone();
    let s = f.sylow();

    let escape = f.strong_closure_witness(&t).expect("T ≤ S");
    let strongly_closed = escape.is_none();
    if let Some(m) = escape {
        failures.push(NormalityFailure::NotStronglyClosed(m));
    }

    let t_obj = f.index_of(&t).expect("T ≤ S");
    let mut invariance = true;
    for a in f.automizer_gens_of(t_obj) {
        if !e.is_fusion_preserving(&a) {
            invariance = false;
            failures.push(NormalityFailure::NotInvariant(a));
            break;
        }
    }

    let aut_t = f.automizer(&t).expect("T ≤ S");
    let aut_t_inv: Vec<GroupMap> = aut_t.iter().map(|a| a.inverse().with_codomain(&t)).collect();
    let mut frattini = true;
    'outer: for p in e.objects() {
        for phi in f.hom_set(&p, &t).expect("P ≤ T") {
            let ok = aut_t_inv.iter().any(|ai| e.contains_map(&ai.compose(&phi)));
            if !ok {
                frattini = false;
                failures.push(NormalityFailure::NoFrattiniFactorization(phi));
                break 'outer;
            }
        }
    }

    let cst = g.centralizer(s, &t);
    let tc = g.join(&t, &cst);
    let zt = g.center(&t);
    let aut_tc = f.automizer(&tc).expect("TC_S(T) ≤ S");
    let mut extension = true;
    for alpha in e.automizer(&t).expect("T is E's Sylow") {
        let found = aut_tc.iter().any(|b| {
            b.extends(&alpha) && cst.iter().all(|x| zt.contains(g.mul(b.apply(x), g.inv(x))))
        });
        if !found {
            extension = false;
            failures.push(NormalityFailure::NoExtension(alpha));
            break;
        }
    }
    NormalityReport {
        contained,
        strongly_closed,
        invariance,
        frattini,
        extension,
        failures,
    }
}

/// Whether `q` is normal in F: normal in S, and every morphism `φ: P → R`
/// extends to a morphism on `PQ` mapping `q` onto itself.
pub(crate) fn is_normal_subgroup_of_system(f: &FusionSystem, q: &Subgroup) -> bool {
    let g = f.group();
    if !g.is_normal_in(q, f.sylow()) {
        return false;
    }
    f.generators().iter().all(|phi| {
        let pq = g.join(phi.domain(), q);
        f.hom_set(&pq, f.sylow())
            .map(|homs| homs.iter().any(|m| m.extends(phi) && m.image_of(q) == *q))
            .unwrap_or(false)
    })
}
