//! Exact counting and exactly uniform sampling of partial injections.
//!
//! A partial injection on `[n]` with domain size `k` is fixed by its domain,
//! its image and a bijection between them, so there are `C(n,k)² k!` of
//! them. Writing `j = n − k` for the number of undefined points, the weight
//! is `t_j = n!·C(n,j)/j!`, and consecutive weights satisfy
//! `t_{j+1} = t_j·(n−j)/(j+1)²` with exact division.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigUint, RandBigInt};
use num_integer::binomial;
use num_traits::{One, Zero};
use rand::seq::{index, SliceRandom};
use rand::Rng;

use crate::stallings::PartialInjection;

/// `I_n = Σ_k C(n,k)² k!`.
pub fn count_partial_injections(n: usize) -> BigUint {
    let mut factorial = BigUint::one();
    let mut total = BigUint::zero();
    for k in 0..=n {
        if k > 0 {
            factorial *= k;
        }
        let c = binomial(BigUint::from(n), BigUint::from(k));
        total += &c * &c * &factorial;
    }
    total
}

/// Precomputed state for drawing the domain size of a uniform partial injection.
#[derive(Debug)]
pub struct InjectionSampler {
    n: usize,
    total: BigUint,
    mode: usize,
    mode_weight: BigUint,
}

impl InjectionSampler {
    pub fn new(n: usize) -> Self {
        let mut weight = (1..=n).fold(BigUint::one(), |acc, i| acc * i);
        let mut total = BigUint::zero();
        let mut mode = 0;
        let mut mode_weight = weight.clone();
        for j in 0..=n {
            if j > 0 {
                weight = weight * (n - j + 1) / (j * j);
            }
            if weight > mode_weight {
                mode = j;
                mode_weight = weight.clone();
            }
            total += &weight;
        }
        Self {
            n,
            total,
            mode,
            mode_weight,
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// `I_n`.
    pub fn count(&self) -> &BigUint {
        &self.total
    }

    /// Draws the number of undefined points `j` with probability `t_j / I_n`.
    ///
    /// One uniform integer below `I_n` is located in the cumulative weights,
    /// visited outward from the mode so that only `O(n^¼)` weights are
    /// touched on average.
    pub fn sample_undefined_count<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        let n = self.n;
        let mut u = rng.gen_biguint_below(&self.total);
        if u < self.mode_weight {
            return self.mode;
        }
        u -= &self.mode_weight;
        let mut up = (self.mode, self.mode_weight.clone());
        let mut down = (self.mode, self.mode_weight.clone());
        loop {
            if up.0 < n {
                let j = up.0;
                up.1 = &up.1 * (n - j) / ((j + 1) * (j + 1));
                up.0 = j + 1;
                if u < up.1 {
                    return up.0;
                }
                u -= &up.1;
            }
            if down.0 > 0 {
                let j = down.0;
                down.1 = &down.1 * (j * j) / (n - j + 1);
                down.0 = j - 1;
                if u < down.1 {
                    return down.0;
                }
                u -= &down.1;
            }
            assert!(up.0 < n || down.0 > 0, "cumulative walk exhausted");
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> PartialInjection {
        let n = self.n;
        let k = n - self.sample_undefined_count(rng);
        let domain = index::sample(rng, n, k).into_vec();
        let mut image = index::sample(rng, n, k).into_vec();
        image.shuffle(rng);
        let mut map = vec![u32::MAX; n];
        for (i, j) in domain.into_iter().zip(image) {
            map[i] = j as u32;
        }
        PartialInjection::from_image_unchecked(map)
    }
}

fn sampler_cache() -> &'static Mutex<HashMap<usize, Arc<InjectionSampler>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<InjectionSampler>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Shared sampler for size `n`, built on first use.
pub fn injection_sampler(n: usize) -> Arc<InjectionSampler> {
    if let Some(s) = sampler_cache().lock().expect("cache poisoned").get(&n) {
        return Arc::clone(s);
    }
    let built = Arc::new(InjectionSampler::new(n));
    let mut cache = sampler_cache().lock().expect("cache poisoned");
    Arc::clone(cache.entry(n).or_insert(built))
}

/// A uniformly random partial injection on `n` points.
pub fn random_partial_injection<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PartialInjection {
    injection_sampler(n).sample(rng)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjectionStats {
    /// Number of maximal non-cyclic paths in the functional graph.
    pub sequence_count: usize,
    /// Points without image or without preimage, increasing.
    pub extremities: Vec<usize>,
}

impl InjectionStats {
    pub fn extremity_intersection(&self, other: &InjectionStats) -> usize {
        let (mut i, mut j, mut count) = (0, 0, 0);
        let (a, b) = (&self.extremities, &other.extremities);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }
}

/// Every sequence starts at exactly one point without preimage.
pub fn injection_stats(f: &PartialInjection) -> InjectionStats {
    let n = f.size();
    let sequence_count = (0..n).filter(|&i| f.preimage(i).is_none()).count();
    let extremities = (0..n)
        .filter(|&i| f.apply(i).is_none() || f.preimage(i).is_none())
        .collect();
    InjectionStats {
        sequence_count,
        extremities,
    }
}

/// Sequences and cycles of the functional graph of `f`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Decomposition {
    pub sequences: Vec<Vec<usize>>,
    pub cycles: Vec<Vec<usize>>,
}

pub fn decompose(f: &PartialInjection) -> Decomposition {
    let n = f.size();
    let mut seen = vec![false; n];
    let mut out = Decomposition::default();
    for start in (0..n).filter(|&i| f.preimage(i).is_none()) {
        let mut path = vec![start];
        seen[start] = true;
        let mut p = start;
        while let Some(q) = f.apply(p) {
            seen[q] = true;
            path.push(q);
            p = q;
        }
        out.sequences.push(path);
    }
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut p = f.apply(start).expect("points off sequences lie on cycles");
        while p != start {
            seen[p] = true;
            cycle.push(p);
            p = f.apply(p).expect("points off sequences lie on cycles");
        }
        out.cycles.push(cycle);
    }
    out
}
