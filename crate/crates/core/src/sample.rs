//! Seeded random generation of rational test configurations. Every consumer
//! threads a [`Sampler`] so that identical seeds give identical sweeps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactalg::Rational;
use crate::projgeom::P1Point;
use crate::sextuple::Partition;
use crate::sextuple::Sextuple;
use crate::symbols::Letter;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// A rational from a small box; collisions across draws are possible and
    /// wanted where coincidence handling is under test.
    pub fn rational(&mut self) -> Rational {
        let num = self.rng.gen_range(-40i64..=40);
        let den = self.rng.gen_range(1i64..=6);
        Rational::new(num, den)
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if !r.is_zero() {
                return r;
            }
        }
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn bool(&mut self) -> bool {
        self.rng.gen()
    }

    pub fn p1_point(&mut self) -> P1Point {
        P1Point::from_rational(self.rational())
    }

    /// `n` pairwise distinct finite parameter points.
    pub fn distinct_points(&mut self, n: usize) -> Vec<P1Point> {
        let mut out: Vec<P1Point> = Vec::with_capacity(n);
        while out.len() < n {
            let p = self.p1_point();
            if !out.contains(&p) {
                out.push(p);
            }
        }
        out
    }

    /// A sextuple with six pairwise distinct finite values.
    pub fn injective_sextuple(&mut self) -> Sextuple {
        let pts = self.distinct_points(6);
        Sextuple::new(pts.try_into().expect("six points"))
    }

    /// A sextuple with values drawn independently (coincidences possible).
    pub fn sextuple(&mut self) -> Sextuple {
        Sextuple::new(std::array::from_fn(|_| self.p1_point()))
    }

    /// A generic point of the polydiagonal of `pi`: one fresh value per
    /// block, pairwise distinct across blocks.
    pub fn sextuple_on(&mut self, pi: &Partition) -> Sextuple {
        let blocks = pi.blocks();
        let vals = self.distinct_points(blocks.len());
        let mut assignment: [Option<P1Point>; 6] = Default::default();
        for (block, v) in blocks.iter().zip(vals) {
            for l in block {
                assignment[l.index()] = Some(v.clone());
            }
        }
        Sextuple::new(assignment.map(|v| v.expect("partition covers all letters")))
    }

    /// A sextuple with exactly one doubled point: coincidence type
    /// (2,1,1,1,1).
    pub fn sextuple_with_one_double(&mut self) -> Sextuple {
        let pts = self.distinct_points(5);
        let mut vals: Vec<P1Point> = pts.clone();
        vals.push(pts[self.index(5)].clone());
        let k = self.index(6);
        vals.swap(5, k);
        Sextuple::new(vals.try_into().expect("six points"))
    }

    /// Three pairwise distinct finite points.
    pub fn distinct_triple(&mut self) -> [P1Point; 3] {
        let pts = self.distinct_points(3);
        [pts[0].clone(), pts[1].clone(), pts[2].clone()]
    }

    /// A random permutation of the six letters.
    pub fn letter_shuffle(&mut self) -> [Letter; 6] {
        let mut letters = Letter::ALL;
        for i in (1..6).rev() {
            let j = self.index(i + 1);
            letters.swap(i, j);
        }
        letters
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sextuple::theta;

    #[test]
    fn determinism() {
        let mut a = Sampler::new(42);
        let mut b = Sampler::new(42);
        for _ in 0..20 {
            assert_eq!(a.rational(), b.rational());
        }
    }

    #[test]
    fn injective_really_is() {
        let mut s = Sampler::new(7);
        for _ in 0..50 {
            assert!(s.injective_sextuple().is_injective());
        }
    }

    #[test]
    fn on_polydiagonal_hits_exact_type() {
        let mut s = Sampler::new(9);
        let pi: Partition = "AF.BE.CD".parse().unwrap();
        for _ in 0..20 {
            let h = s.sextuple_on(&pi);
            assert_eq!(theta(&h), pi);
        }
    }

    #[test]
    fn one_double_type() {
        let mut s = Sampler::new(11);
        for _ in 0..40 {
            let h = s.sextuple_with_one_double();
            assert_eq!(theta(&h).ptype(), vec![2, 1, 1, 1, 1]);
        }
    }
}
