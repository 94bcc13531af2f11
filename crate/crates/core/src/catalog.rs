//! Bundled small groups, each with the primes it is meant to be studied at.

use serde::Serialize;

use crate::error::{FuseError, Result};
use crate::group::{prime_divisors, FiniteGroup};
use crate::io::GroupSpec;
use crate::perm::Perm;

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub primes: Vec<usize>,
    pub spec: GroupSpec,
}

impl CatalogEntry {
    pub fn build(&self) -> Result<FiniteGroup> {
        self.spec.build()
    }
}

fn entry(name: &str, primes: Vec<usize>, degree: usize, gens: &[&str]) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        primes,
        spec: GroupSpec::perm(name, degree, gens).expect("catalog generators parse"),
    }
}

fn cyclic(n: usize) -> CatalogEntry {
    let cycle: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let gen = if n == 1 { "()".to_string() } else { format!("({})", cycle.join(" ")) };
    let primes = if n == 1 { vec![2] } else { prime_divisors(n) };
    entry(&format!("C{n}"), primes, n, &[&gen])
}

/// Dihedral group of order `2n` acting on an n-gon.
fn dihedral(n: usize) -> CatalogEntry {
    let cycle: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let rot = format!("({})", cycle.join(" "));
    let refl: String = (2..=n)
        .filter(|&i| i < n + 2 - i)
        .map(|i| format!("({} {})", i, n + 2 - i))
        .collect();
    entry(&format!("D{}", 2 * n), prime_divisors(2 * n), n, &[&rot, &refl])
}

/// Matrices over `F_q` acting on the nonzero column vectors, listed in
/// lexicographic order.
fn matrix_group(name: &str, primes: Vec<usize>, q: usize, dim: usize, gens: &[Vec<Vec<usize>>]) -> CatalogEntry {
    let vectors: Vec<Vec<usize>> = (1..q.pow(dim as u32))
        .map(|mut k| {
            let mut v = vec![0; dim];
            for c in (0..dim).rev() {
                v[c] = k % q;
                k /= q;
            }
            v
        })
        .collect();
    let index = |v: &[usize]| vectors.iter().position(|w| w == v).expect("nonzero image");
    let generators = gens
        .iter()
        .map(|m| {
            let images = vectors
                .iter()
                .map(|v| {
                    let w: Vec<usize> = (0..dim)
                        .map(|r| (0..dim).map(|c| m[r][c] * v[c]).sum::<usize>() % q)
                        .collect();
                    index(&w) as u16
                })
                .collect();
            Perm(images).cycles()
        })
        .collect();
    CatalogEntry {
        name: name.to_string(),
        primes,
        spec: GroupSpec::Perm {
            name: name.to_string(),
            degree: vectors.len(),
            generators,
        },
    }
}

/// The bundled catalog in a fixed order.
pub fn builtin_catalog() -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = (1..=16).map(cyclic).collect();
    out.extend((3..=8).map(dihedral));
    out.push(entry("V4", vec![2], 4, &["(1 2)(3 4)", "(1 3)(2 4)"]));
    out.push(entry("Q8", vec![2], 8, &["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"]));
    out.push(entry("S3", vec![2, 3], 3, &["(1 2 3)", "(1 2)"]));
    out.push(entry("S4", vec![2, 3], 4, &["(1 2 3 4)", "(1 2)"]));
    out.push(entry("S5", vec![2, 3, 5], 5, &["(1 2 3 4 5)", "(1 2)"]));
    out.push(entry("A4", vec![2, 3], 4, &["(1 2 3)", "(1 2)(3 4)"]));
    out.push(entry("A5", vec![2, 3, 5], 5, &["(1 2 3)", "(3 4 5)"]));
    out.push(entry("A6", vec![2, 3, 5], 6, &["(1 2 3)", "(2 3 4 5 6)"]));
    out.push(matrix_group(
        "SL(2,3)",
        vec![2, 3],
        3,
        2,
        &[vec![vec![1, 1], vec![0, 1]], vec![vec![1, 0], vec![1, 1]]],
    ));
    out.push(matrix_group(
        "GL(3,2)",
        vec![2, 3, 7],
        2,
        3,
        &[
            vec![vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]],
            vec![vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]],
        ],
    ));
    out
}

/// Looks an entry up by name, ignoring case.
pub fn catalog_entry(name: &str) -> Result<CatalogEntry> {
    builtin_catalog()
        .into_iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| FuseError::Validation(format!("no catalog group named {name:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(name: &str) -> usize {
        catalog_entry(name).unwrap().build().unwrap().order()
    }

    #[test]
    fn orders() {
        for n in 1..=16 {
            assert_eq!(order(&format!("C{n}")), n);
        }
        for n in 3..=8 {
            assert_eq!(order(&format!("D{}", 2 * n)), 2 * n);
        }
        assert_eq!(order("V4"), 4);
        assert_eq!(order("S5"), 120);
        assert_eq!(order("A6"), 360);
        assert_eq!(order("SL(2,3)"), 24);
        assert_eq!(order("GL(3,2)"), 168);
        assert!(catalog_entry("nope").is_err());
    }

    #[test]
    fn q8_has_one_involution() {
        let g = catalog_entry("Q8").unwrap().build().unwrap();
        assert_eq!(g.order(), 8);
        let involutions = (0..8).filter(|&x| g.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
        assert!(!g.is_abelian());
    }

    #[test]
    fn dihedral_is_not_abelian() {
        let g = catalog_entry("D16").unwrap().build().unwrap();
        assert!(!g.is_abelian());
        assert_eq!((0..16).filter(|&x| g.element_order(x) == 8).count(), 4);
    }

    #[test]
    fn s4_listed_at_two() {
        assert!(catalog_entry("S4").unwrap().primes.contains(&2));
    }
}
