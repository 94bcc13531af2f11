use super::{is_power_of, FiniteGroup, Subgroup};

/// Which core to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoreMode {
    /// `O_p(G)`, the largest normal p-subgroup.
    P,
    /// `O_{p'}(G)`, the largest normal subgroup of order prime to p.
    PPrime,
}

/// Which residual to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResidualMode {
    /// `O^p(G)`, smallest normal subgroup with p-group quotient.
    P,
    /// `O^{p'}(G)`, smallest normal subgroup with p'-group quotient.
    PPrime,
}

fn coprime(n: usize, p: usize) -> bool {
    !n.is_multiple_of(p)
}

impl FiniteGroup {
    /// Join of all normal subgroups of the requested kind, found as normal
    /// closures of conjugacy classes.
    pub fn core(&self, p: usize, mode: CoreMode) -> Subgroup {
        let mut seeds = Vec::new();
        for class in self.conjugacy_classes() {
            let x = class[0];
            if x == 0 {
                continue;
            }
            let ok_elem = match mode {
                CoreMode::P => is_power_of(self.element_order(x), p),
                CoreMode::PPrime => coprime(self.element_order(x), p),
            };
            if !ok_elem {
                continue;
            }
            let nc = self.generate_subgroup(&class);
            let ok = match mode {
                CoreMode::P => is_power_of(nc.order(), p),
                CoreMode::PPrime => coprime(nc.order(), p),
            };
            if ok {
                seeds.extend_from_slice(&class);
            }
        }
        self.generate_subgroup(&seeds)
    }

    /// `O^p(G)` is generated by the p'-elements, `O^{p'}(G)` by the
    /// p-elements.
    pub fn residual(&self, p: usize, mode: ResidualMode) -> Subgroup {
        let seeds: Vec<usize> = (1..self.order())
            .filter(|&x| {
                let o = self.element_order(x);
                match mode {
                    ResidualMode::P => coprime(o, p),
                    ResidualMode::PPrime => is_power_of(o, p),
                }
            })
            .collect();
        self.generate_subgroup(&seeds)
    }

    /// Decides p-solvability by peeling off `O_p` and `O_{p'}` in turn.
    /// Returns the ascending series of preimages in `G` (starting at the
    /// trivial subgroup); when the group is not p-solvable the series stops
    /// at the last reached term.
    pub fn is_p_solvable(&self, p: usize) -> (bool, Vec<Subgroup>) {
        let mut series = vec![self.trivial()];
        // current quotient and the projection G -> current
        let mut cur = self.clone();
        let mut proj: Vec<u32> = (0..self.order() as u32).collect();
        let mut next_mode = CoreMode::P;
        let mut stalled = 0;
        while cur.order() > 1 {
            let k = cur.core(p, next_mode);
            next_mode = match next_mode {
                CoreMode::P => CoreMode::PPrime,
                CoreMode::PPrime => CoreMode::P,
            };
            if k.is_trivial() {
                stalled += 1;
                if stalled == 2 {
                    return (false, series);
                }
                continue;
            }
            stalled = 0;
            let q = cur.quotient_group(&k).expect("cores are normal");
            let pre = Subgroup::from_set(crate::bitset::ElementSet::from_indices(
                self.order(),
                (0..self.order()).filter(|&g| k.contains(proj[g] as usize)),
            ));
            series.push(pre);
            for x in proj.iter_mut() {
                *x = q.projection[*x as usize];
            }
            cur = q.group;
        }
        (true, series)
    }
}

#[cfg(test)]
mod tests {
    use super::super::testgroups::*;
    use super::*;

    #[test]
    fn cores_and_residuals() {
        let g = s4();
        assert_eq!(g.core(2, CoreMode::P).order(), 4);
        assert_eq!(g.core(2, CoreMode::PPrime).order(), 1);
        assert_eq!(g.residual(2, ResidualMode::P).order(), 12);
        assert_eq!(g.residual(2, ResidualMode::PPrime).order(), 24);
        let a = a5();
        assert!(a.core(2, CoreMode::P).is_trivial());
        assert!(a.core(2, CoreMode::PPrime).is_trivial());
        let d = d8();
        assert_eq!(d.residual(2, ResidualMode::P).order(), 1);
        let v = v4();
        assert_eq!(v.core(2, CoreMode::P), v.whole());
    }

    #[test]
    fn p_solvability() {
        let (ok, series) = s4().is_p_solvable(2);
        assert!(ok);
        let orders: Vec<usize> = series.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        assert!(!a5().is_p_solvable(2).0);
        assert!(d8().is_p_solvable(2).0);
        // A5 is 7-solvable (order prime to 7)
        assert!(a5().is_p_solvable(7).0);
    }
}
