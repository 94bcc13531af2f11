//! Size guards, read once from the environment.

use std::sync::OnceLock;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order accepted by loaders and table builders.
    pub max_order: usize,
    /// Largest p-group a fusion system may live over.
    pub max_sylow: usize,
    /// Cap on the number of subgroups enumerated for a single group.
    pub max_subgroups: usize,
    /// Cap on the size of an enumerated automorphism group.
    pub max_automorphisms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 1000,
            max_sylow: 64,
            max_subgroups: 5000,
            max_automorphisms: 200_000,
        }
    }
}

impl Limits {
    pub fn from_env() -> Self {
        let d = Limits::default();
        let read = |key: &str, default: usize| {
            std::env::var(key)
                .ok()
                .and_then(|v| v.trim().parse().ok())
                .unwrap_or(default)
        };
        Limits {
            max_order: read("FUSELAB_MAX_ORDER", d.max_order),
            max_sylow: read("FUSELAB_MAX_SYLOW", d.max_sylow),
            max_subgroups: read("FUSELAB_MAX_SUBGROUPS", d.max_subgroups),
            max_automorphisms: d.max_automorphisms,
        }
    }

    /// Process-wide snapshot taken on first use.
    pub fn get() -> &'static Limits {
        static LIMITS: OnceLock<Limits> = OnceLock::new();
        LIMITS.get_or_init(Limits::from_env)
    }
}
