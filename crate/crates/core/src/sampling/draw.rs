use rand::Rng;

use crate::distributional::RoughClustering;
use crate::error::{Error, Result};
use crate::model::{is_possibilistic, FocalSet, HardClustering, SoftClustering};
use crate::TOLERANCE;

fn uniform_member<R: Rng + ?Sized>(set: FocalSet, rng: &mut R) -> usize {
    if let Some(c) = set.single() {
        return c;
    }
    let pick = rng.gen_range(0..set.len());
    set.iter().nth(pick).expect("pick < len")
}

fn categorical<R: Rng + ?Sized>(cumulative: &[f64], rng: &mut R) -> usize {
    if cumulative.len() == 1 {
        return 0;
    }
    let u: f64 = rng.gen::<f64>() * cumulative[cumulative.len() - 1];
    cumulative.partition_point(|&c| c <= u).min(cumulative.len() - 1)
}

/// Something that draws rough clusterings (as per-object regions).
pub trait RcSampler: Sync {
    fn n(&self) -> usize;
    fn k(&self) -> usize;
    fn draw_regions<R: Rng + ?Sized>(&self, rng: &mut R, out: &mut [FocalSet]);
}

/// Independent per-object draws of a focal set: the product law over
/// focal rough clusterings.
pub struct ProductSampler {
    k: usize,
    sets: Vec<Vec<FocalSet>>,
    cumulative: Vec<Vec<f64>>,
}

impl ProductSampler {
    pub fn new(m: &SoftClustering) -> Self {
        let mut sets = Vec::with_capacity(m.n());
        let mut cumulative = Vec::with_capacity(m.n());
        for mx in m.masses() {
            sets.push(mx.focal().iter().map(|e| e.0).collect());
            let mut acc = 0.0;
            cumulative.push(
                mx.focal()
                    .iter()
                    .map(|e| {
                        acc += e.1;
                        acc
                    })
                    .collect(),
            );
        }
        ProductSampler {
            k: m.k(),
            sets,
            cumulative,
        }
    }

    /// Two-stage draw: a focal set per object, then a uniform cluster in it.
    pub fn draw_assignment<R: Rng + ?Sized>(&self, rng: &mut R, out: &mut [usize]) {
        for (x, slot) in out.iter_mut().enumerate() {
            let set = self.sets[x][categorical(&self.cumulative[x], rng)];
            *slot = uniform_member(set, rng);
        }
    }
}

impl RcSampler for ProductSampler {
    fn n(&self) -> usize {
        self.sets.len()
    }

    fn k(&self) -> usize {
        self.k
    }

    fn draw_regions<R: Rng + ?Sized>(&self, rng: &mut R, out: &mut [FocalSet]) {
        for (x, slot) in out.iter_mut().enumerate() {
            *slot = self.sets[x][categorical(&self.cumulative[x], rng)];
        }
    }
}

/// Draws the level cuts of a joint possibility distribution: a level `u`
/// uniform on `(0, 1]`, then every object's region `{w : pi_x(w) >= u}`.
pub struct ConsonantSampler {
    k: usize,
    contours: Vec<Vec<f64>>,
}

impl ConsonantSampler {
    pub fn new(p: &SoftClustering) -> Result<Self> {
        if !is_possibilistic(p) {
            return Err(Error::NotPossibilistic);
        }
        let contours = p.contours();
        for pi in &contours {
            let max = pi.iter().copied().fold(0.0, f64::max);
            if (max - 1.0).abs() > TOLERANCE {
                return Err(Error::SubnormalPossibility { max });
            }
        }
        Ok(ConsonantSampler { k: p.k(), contours })
    }
}

impl RcSampler for ConsonantSampler {
    fn n(&self) -> usize {
        self.contours.len()
    }

    fn k(&self) -> usize {
        self.k
    }

    fn draw_regions<R: Rng + ?Sized>(&self, rng: &mut R, out: &mut [FocalSet]) {
        let level = 1.0 - rng.gen::<f64>();
        for (slot, pi) in out.iter_mut().zip(&self.contours) {
            *slot = FocalSet::from_indices(
                pi.iter()
                    .enumerate()
                    .filter(|(_, &v)| v >= level - TOLERANCE)
                    .map(|(w, _)| w),
            );
        }
    }
}

/// Draw a hard clustering: per object, a focal set from `m_x`, then a
/// uniform cluster inside it. Rough inputs give the uniform law on the
/// compatible set, fuzzy inputs the per-object categorical law.
pub fn draw_hard<R: Rng + ?Sized>(m: &SoftClustering, rng: &mut R) -> HardClustering {
    let mut out = vec![0; m.n()];
    ProductSampler::new(m).draw_assignment(rng, &mut out);
    HardClustering::new(m.frame().clone(), out).expect("draws stay in frame")
}

/// Draw a focal rough clustering with probability equal to its product mass.
pub fn draw_rc<R: Rng + ?Sized>(m: &SoftClustering, rng: &mut R) -> RoughClustering {
    let mut out = vec![FocalSet::EMPTY; m.n()];
    ProductSampler::new(m).draw_regions(rng, &mut out);
    RoughClustering::new(m.frame().clone(), out).expect("focal sets are nonempty")
}

/// Uniform draw from the compatible set of the given regions.
pub(crate) fn draw_compatible<R: Rng + ?Sized>(regions: &[FocalSet], rng: &mut R, out: &mut [usize]) {
    for (slot, &r) in out.iter_mut().zip(regions) {
        *slot = uniform_member(r, rng);
    }
}
