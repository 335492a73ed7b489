//! Splitting a parallelotope into a zero-width core plus segments.

use crate::error::{Error, Result};
use crate::exact_linalg::{Rational, RationalVector};
use crate::polytope_core::{edge_zones, split_off_segment, Polytope};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionResult {
    pub core: Polytope,
    /// Characteristic of each split zone, in splitting order.
    pub zone_directions: Vec<RationalVector>,
    /// `λ` of each split segment `λ[-z, z]`.
    pub segment_lengths: Vec<Rational>,
}

impl DecompositionResult {
    /// Directions and lengths sorted, for order-free comparison.
    pub fn sorted_segments(&self) -> Vec<(RationalVector, Rational)> {
        let mut s: Vec<_> = self.zone_directions.iter().cloned().zip(self.segment_lengths.iter().cloned()).collect();
        s.sort();
        s
    }
}

/// Splits off closed zones, always taking the first one.
pub fn decompose(p: &Polytope) -> Result<DecompositionResult> {
    decompose_with(p, |_| 0)
}

/// Splits off closed zones while any remain; `pick(k)` chooses which of the
/// `k` closed zones goes next. Each split removes a segment as long as the
/// shortest edge of the zone.
pub fn decompose_with(p: &Polytope, mut pick: impl FnMut(usize) -> usize) -> Result<DecompositionResult> {
    let mut core = p.clone();
    let mut zone_directions = Vec::new();
    let mut segment_lengths = Vec::new();
    loop {
        let closed: Vec<_> = edge_zones(&core).into_iter().filter(|z| z.closed).collect();
        if closed.is_empty() {
            break;
        }
        let zone = &closed[pick(closed.len()) % closed.len()];
        let lambda = zone.shortest() * &Rational::new(1, 2);
        let z = zone.characteristic.clone();
        core = split_off_segment(&core, &z, &lambda)?
            .ok_or_else(|| Error::Enumeration(format!("closed zone {z} did not split off")))?;
        zone_directions.push(z);
        segment_lengths.push(lambda);
    }
    Ok(DecompositionResult { core, zone_directions, segment_lengths })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cell24, sum_cell24, zonotope};
    use crate::graphs_matroids::cographic_k33_vectors;
    use crate::polytope_core::add_segment;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn k33_dual_zonotope_has_point_core() {
        let k = cographic_k33_vectors();
        let z = zonotope(k.vectors(), None).unwrap();
        let d = decompose(&z).unwrap();
        assert_eq!(d.core.vertices().len(), 1);
        assert_eq!(d.zone_directions.len(), 9);
    }

    #[test]
    fn cell24_is_its_own_core() {
        let d = decompose(cell24()).unwrap();
        assert_eq!(&d.core, cell24());
        assert!(d.zone_directions.is_empty());
    }

    #[test]
    fn sums_recover_the_cell_and_roots() {
        let mask = 0b0110_1101_0110;
        let p = sum_cell24(mask).unwrap();
        let d = decompose(&p).unwrap();
        assert_eq!(d.core.certificate(), cell24().certificate());
        let mut dirs = d.zone_directions.clone();
        dirs.sort();
        let mut expected: Vec<RationalVector> =
            (0..12).filter(|i| mask >> i & 1 == 1).map(|i| crate::constructions::root_vectors()[i].clone()).collect();
        expected.sort();
        assert_eq!(dirs, expected);
        let mut back = d.core.clone();
        for (z, l) in d.zone_directions.iter().zip(&d.segment_lengths) {
            back = add_segment(&back, z, l).unwrap();
        }
        assert_eq!(back, p);
    }

    #[test]
    fn order_does_not_matter() {
        let p = sum_cell24(0b1001_0011_0101).unwrap();
        let base = decompose(&p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..3 {
            let d = decompose_with(&p, |k| rng.random_range(0..k)).unwrap();
            assert_eq!(d.core.certificate(), base.core.certificate());
            assert_eq!(d.sorted_segments(), base.sorted_segments());
        }
    }
}
