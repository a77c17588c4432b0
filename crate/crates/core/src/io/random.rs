use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SystemFile;
use crate::monomial::Monomial;
use crate::poly::BoolPoly;

#[derive(Clone, Debug, PartialEq)]
pub struct RandomSpec {
    pub n_vars: usize,
    pub n_polys: usize,
    pub max_degree: u32,
    /// Probability that each admissible monomial is present.
    pub density: f64,
    pub seed: u64,
    /// Use only monomials of degree exactly `max_degree`.
    pub homogeneous: bool,
}

/// Monomials of degree `lo..=hi` in `n` variables.
fn monomials(n: usize, lo: u32, hi: u32) -> Vec<Monomial> {
    fn rec(n: usize, next: usize, cur: Monomial, lo: u32, hi: u32, out: &mut Vec<Monomial>) {
        if cur.degree() >= lo {
            out.push(cur);
        }
        if cur.degree() == hi {
            return;
        }
        for v in next..n {
            rec(n, v + 1, cur.mul(&Monomial::var(v)), lo, hi, out);
        }
    }
    let mut out = Vec::new();
    rec(n, 0, Monomial::ONE, lo, hi, &mut out);
    out
}

const RESAMPLES: usize = 64;

/// A reproducible random system; zero polynomials are resampled, and after
/// repeated failures replaced by one random admissible monomial.
pub fn gen_random(spec: &RandomSpec) -> SystemFile {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let d = spec.max_degree.min(spec.n_vars as u32);
    let lo = if spec.homogeneous { d } else { 0 };
    let pool = monomials(spec.n_vars, lo, d);
    let density = spec.density.clamp(0.0, 1.0);
    let mut polys = Vec::with_capacity(spec.n_polys);
    for _ in 0..spec.n_polys {
        let mut p = BoolPoly::zero();
        for _ in 0..RESAMPLES {
            p = BoolPoly::from_terms(pool.iter().copied().filter(|_| rng.gen_bool(density)));
            if !p.is_zero() {
                break;
            }
        }
        if p.is_zero() {
            p = BoolPoly::from_monomial(pool[rng.gen_range(0..pool.len())]);
        }
        polys.push(p);
    }
    SystemFile {
        n_vars: spec.n_vars,
        name: None,
        comments: vec![format!(
            "random vars={} polys={} degree={} density={} seed={}{}",
            spec.n_vars,
            spec.n_polys,
            spec.max_degree,
            spec.density,
            spec.seed,
            if spec.homogeneous { " homogeneous" } else { "" }
        )],
        polys,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(seed: u64) -> RandomSpec {
        RandomSpec {
            n_vars: 8,
            n_polys: 10,
            max_degree: 2,
            density: 0.3,
            seed,
            homogeneous: false,
        }
    }

    #[test]
    fn reproducible() {
        assert_eq!(gen_random(&spec(42)), gen_random(&spec(42)));
        assert_ne!(gen_random(&spec(42)).polys, gen_random(&spec(43)).polys);
    }

    #[test]
    fn pool_sizes() {
        // 1 + 8 + 28
        assert_eq!(monomials(8, 0, 2).len(), 37);
        assert_eq!(monomials(8, 3, 3).len(), 56);
    }

    #[test]
    fn density_zero_has_no_zero_polys() {
        let sys = gen_random(&RandomSpec {
            density: 0.0,
            ..spec(1)
        });
        assert_eq!(sys.polys.len(), 10);
        assert!(sys.polys.iter().all(|p| !p.is_zero()));
    }

    #[test]
    fn homogeneous_degrees() {
        let sys = gen_random(&RandomSpec {
            homogeneous: true,
            max_degree: 3,
            ..spec(5)
        });
        for p in &sys.polys {
            assert!(p.terms().iter().all(|t| t.degree() == 3));
        }
    }
}
