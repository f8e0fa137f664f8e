//! The functors Ω (spaces to frame pairs) and Σ (frame pairs to spaces), the
//! unit λ and counit σ, and the law checks built on them.
//!
//! Indexing conventions, relied on throughout:
//!
//! * element `i` of `Ω(X)` is the weakly open set `opens[i]`, with `opens`
//!   sorted numerically;
//! * point `j` of `Σ(L, L_s)` is the prime `spectrum.primes()[j]`, with primes
//!   in increasing element order.
//!
//! Both constructions are deterministic, so building `ΣΩX` twice yields equal
//! values and composites can be compared table by table.

mod laws;
mod report;
mod suite;

pub use laws::{
    check_functor_laws_localic, check_functor_laws_spaces, check_naturality_counit,
    check_naturality_unit, check_triangle_pair, check_triangle_space, hofmann_lawson_pair,
    hofmann_lawson_space, stone_roundtrip_pair, stone_roundtrip_space,
};
pub use report::{AdjunctionReport, LawCheck, SuiteReport};
pub use suite::run_suite;

use thiserror::Error;

use crate::bits::{self, PointSet};
use crate::bounds::Bounds;
use crate::error::LimitError;
use crate::frame_pair::{FrameHom, FramePair, FramePairError, SpecialLocalicMap};
use crate::lattice::{Elem, FiniteLattice, LatticeError};
use crate::space::{LocallySmallSpace, SpaceError, SpaceMap};
use crate::spectrum::Spectrum;

#[derive(Debug, Error)]
pub enum DualityError {
    #[error("map is not bounded: smop {0:#b} lies in no preimage of a target smop")]
    NotBounded(PointSet),
    #[error("map is not continuous: f⁻¹({0:#b}) ∩ {1:#b} is not a smop")]
    NotContinuous(PointSet, PointSet),
    #[error("adjoint sends prime {prime} to {image}, which is not prime")]
    PrimeNotPreserved { prime: Elem, image: Elem },
    #[error("internal: {0}")]
    Internal(String),
    #[error("space is not topologically sober")]
    NotSober,
    #[error("frame is not spatial")]
    NotSpatial,
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    FramePair(#[from] FramePairError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Limit(#[from] LimitError),
}

impl From<crate::spectrum::SpectrumError> for DualityError {
    fn from(e: crate::spectrum::SpectrumError) -> Self {
        match e {
            crate::spectrum::SpectrumError::SizeLimitExceeded(l) => DualityError::Limit(l),
            other => DualityError::Internal(other.to_string()),
        }
    }
}

/// `Ω(X) = (𝓛_X^{wo}, 𝓛_X)` with the set behind every frame element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaObject {
    pub pair: FramePair,
    pub opens: Vec<PointSet>,
}

impl OmegaObject {
    pub fn index_of(&self, set: PointSet) -> Option<Elem> {
        self.opens.binary_search(&set).ok()
    }
}

pub fn omega_object(space: &LocallySmallSpace) -> Result<OmegaObject, DualityError> {
    let opens = space.weakly_open_sets();
    let labels = opens.iter().map(|&u| space.set_label(u)).collect();
    let frame = FiniteLattice::from_sets(&opens)?.with_labels(labels)?;
    let designated: Vec<Elem> = space
        .smops()
        .iter()
        .map(|&s| opens.binary_search(&s).expect("smops are weakly open"))
        .collect();
    let pair = FramePair::new(frame, &designated)
        .map_err(|e| DualityError::Internal(format!("Ω(X) is not a frame pair: {e}")))?;
    Ok(OmegaObject { pair, opens })
}

/// `Ω(f) = (𝓛^{wo} f)_*`, where `𝓛^{wo} f : Ω(Y) → Ω(X)` takes preimages.
/// Fails unless `f` is bounded and continuous.
pub fn omega_morphism(f: &SpaceMap, bounds: &Bounds) -> Result<SpecialLocalicMap, DualityError> {
    if let Some(w) = f.boundedness_failure() {
        return Err(DualityError::NotBounded(w));
    }
    if let Some((v, w)) = f.continuity_failure() {
        return Err(DualityError::NotContinuous(v, w));
    }
    let ox = omega_object(f.source())?;
    let oy = omega_object(f.target())?;
    let table = oy
        .opens
        .iter()
        .map(|&w| {
            ox.index_of(f.preimage(w))
                .ok_or_else(|| DualityError::Internal("preimage of a weakly open set is not weakly open".into()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let hom = FrameHom::new(oy.pair, ox.pair, table, bounds)?;
    Ok(hom.right_adjoint()?)
}

/// The adjoint of `Ω(f)` evaluated by its union formula
/// `W ↦ ⋃{V ∈ 𝓛_Y^{wo} : f⁻¹(V) ⊆ W}`, as sets.
pub fn omega_adjoint_by_union(f: &SpaceMap) -> Vec<(PointSet, PointSet)> {
    let wo_x = f.source().weakly_open_sets();
    let wo_y = f.target().weakly_open_sets();
    wo_x.iter()
        .map(|&w| {
            let v = wo_y
                .iter()
                .filter(|&&v| bits::is_subset(f.preimage(v), w))
                .fold(0, |m, &v| m | v);
            (w, v)
        })
        .collect()
}

/// `Σ(L, L_s) = (Spec L, Δ_L(L_s))` with its spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaObject {
    pub space: LocallySmallSpace,
    pub spectrum: Spectrum,
}

/// Builds `Σ(P)` and checks that its weakly open topology is sober.
pub fn sigma_object(pair: &FramePair, bounds: &Bounds) -> Result<SigmaObject, DualityError> {
    let obj = sigma_object_unchecked(pair)?;
    if !obj.space.is_topologically_sober(bounds)? {
        return Err(DualityError::Internal("Σ(P) is not topologically sober".into()));
    }
    Ok(obj)
}

fn sigma_object_unchecked(pair: &FramePair) -> Result<SigmaObject, DualityError> {
    let lattice = pair.frame();
    let spectrum = Spectrum::new(lattice)?;
    let labels = spectrum.primes().iter().map(|&p| lattice.label(p)).collect();
    let smops = pair.designated().iter().map(|&a| spectrum.delta(a)).collect();
    let space = LocallySmallSpace::new(labels, smops)
        .map_err(|e| DualityError::Internal(format!("Δ(L_s) is not a smopology: {e}")))?;
    Ok(SigmaObject { space, spectrum })
}

/// `Σ(h_*) = h_*` restricted to primes, a map `Σ(M, M_s) → Σ(L, L_s)`.
/// Primes must go to primes, and the result must be bounded and continuous.
pub fn sigma_morphism(m: &SpecialLocalicMap, bounds: &Bounds) -> Result<SpaceMap, DualityError> {
    let from = sigma_object(m.domain(), bounds)?;
    let to = sigma_object(m.codomain(), bounds)?;
    let table = from
        .spectrum
        .primes()
        .iter()
        .map(|&q| {
            let image = m.apply(q);
            to.spectrum
                .index_of(image)
                .ok_or(DualityError::PrimeNotPreserved { prime: q, image })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let map = SpaceMap::new(from.space, to.space, table)?;
    if !map.is_bounded() || !map.is_continuous() {
        return Err(DualityError::Internal(
            "Σ(h_*) is not bounded continuous".into(),
        ));
    }
    Ok(map)
}

/// `λ_X : X → ΣΩX`, `x ↦ ext{x}`.
pub fn unit_lambda(space: &LocallySmallSpace, bounds: &Bounds) -> Result<SpaceMap, DualityError> {
    let omega = omega_object(space)?;
    let sigma = sigma_object(&omega.pair, bounds)?;
    let primes = sigma.spectrum.primes();
    let table = (0..space.points())
        .map(|x| {
            let ext = omega
                .opens
                .iter()
                .filter(|&&w| !bits::contains(w, x))
                .fold(0, |m, &w| m | w);
            let idx = omega.index_of(ext).expect("unions of weakly open sets are weakly open");
            primes
                .iter()
                .position(|&p| p == idx)
                .ok_or(DualityError::Space(SpaceError::NotPrime { point: x, ext }))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let lambda = SpaceMap::new(space.clone(), sigma.space, table)?;
    if !lambda.is_bounded() || !lambda.is_continuous() {
        return Err(DualityError::Internal("λ_X is not bounded continuous".into()));
    }
    Ok(lambda)
}

/// `Δ_L` as a frame homomorphism `(L, L_s) → ΩΣ(L, L_s)`.
pub fn delta_hom(pair: &FramePair, bounds: &Bounds) -> Result<FrameHom, DualityError> {
    let sigma = sigma_object(pair, bounds)?;
    let omega = omega_object(&sigma.space)?;
    let table = pair
        .frame()
        .elements()
        .map(|a| {
            omega
                .index_of(sigma.spectrum.delta(a))
                .ok_or_else(|| DualityError::Internal("Δ(a) is not weakly open in Σ(P)".into()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FrameHom::new(pair.clone(), omega.pair, table, bounds)?)
}

/// `σ_L = (Δ_L)_* : ΩΣ(L, L_s) → (L, L_s)`, `A ↦ ⋁{a : Δ(a) ⊆ A}`.
pub fn counit_sigma(pair: &FramePair, bounds: &Bounds) -> Result<SpecialLocalicMap, DualityError> {
    Ok(delta_hom(pair, bounds)?.right_adjoint()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn b2_pair() -> FramePair {
        FramePair::full(FiniteLattice::from_sets(&[0b00, 0b01, 0b10, 0b11]).unwrap()).unwrap()
    }

    fn chain_pair(n: usize) -> FramePair {
        FramePair::full(Arc::new(FiniteLattice::chain(n))).unwrap()
    }

    #[test]
    fn omega_objects() {
        let chain = LocallySmallSpace::chain(2);
        let o = omega_object(&chain).unwrap();
        assert_eq!(o.pair.frame().order_matrix(), FiniteLattice::chain(3).order_matrix());
        assert!(o.pair.designates_everything());

        let d = omega_object(&LocallySmallSpace::discrete(2)).unwrap();
        assert_eq!(d.pair.frame().size(), 4);
        assert!(d.pair.frame().is_distributive());
        assert_eq!(d.pair.frame().primes().len(), 2);

        let one = omega_object(&LocallySmallSpace::chain(1)).unwrap();
        assert_eq!(one.pair.frame().order_matrix(), FiniteLattice::chain(2).order_matrix());
    }

    #[test]
    fn omega_morphisms() {
        let b = Bounds::default();
        let x = LocallySmallSpace::chain(2);
        let id = omega_morphism(&SpaceMap::identity(&x), &b).unwrap();
        assert_eq!(id, SpecialLocalicMap::identity(&omega_object(&x).unwrap().pair));

        // inclusion {0} into the chain {0, 1}
        let point = LocallySmallSpace::chain(1);
        let incl = SpaceMap::new(point, x.clone(), vec![0]).unwrap();
        let lm = omega_morphism(&incl, &b).unwrap();
        // adjoint: W ⊆ {0} ↦ largest V with V ∩ {0} ⊆ W
        let by_union = omega_adjoint_by_union(&incl);
        assert_eq!(by_union, vec![(0b0, 0b0), (0b1, 0b11)]);
        let oy = omega_object(&x).unwrap();
        let ox = omega_object(incl.source()).unwrap();
        for (w, v) in by_union {
            assert_eq!(lm.apply(ox.index_of(w).unwrap()), oy.index_of(v).unwrap());
        }

        let xs = LocallySmallSpace::unlabeled(2, vec![0, 0b01, 0b11]).unwrap();
        let ys = LocallySmallSpace::unlabeled(2, vec![0, 0b10, 0b11]).unwrap();
        let bad = SpaceMap::new(xs, ys, vec![0, 1]).unwrap();
        assert!(matches!(omega_morphism(&bad, &b), Err(DualityError::NotContinuous(_, _))));
    }

    #[test]
    fn sigma_objects() {
        let b = Bounds::default();
        let s = sigma_object(&b2_pair(), &b).unwrap();
        assert_eq!(s.space.smops(), LocallySmallSpace::discrete(2).smops());
        let s = sigma_object(&chain_pair(3), &b).unwrap();
        assert_eq!(s.space.smops(), &[0, 0b01, 0b11]);
        let s = sigma_object(&chain_pair(2), &b).unwrap();
        assert_eq!(s.space.points(), 1);
        let s = sigma_object(&chain_pair(1), &b).unwrap();
        assert_eq!(s.space.points(), 0);
        assert_eq!(s.space.smops(), &[0]);
    }

    #[test]
    fn sigma_morphism_example() {
        let b = Bounds::default();
        let h = FrameHom::new(b2_pair(), chain_pair(2), vec![0, 1, 0, 1], &b).unwrap();
        let lm = h.right_adjoint().unwrap();
        let map = sigma_morphism(&lm, &b).unwrap();
        // Spec(2-chain) = {0}; h_*(0) = y, which is point 1 of Spec(B2) = {x, y}
        assert_eq!(map.table(), &[1]);
        let id = sigma_morphism(&SpecialLocalicMap::identity(&b2_pair()), &b).unwrap();
        assert_eq!(id, SpaceMap::identity(id.source()));
    }

    #[test]
    fn unit_examples() {
        let b = Bounds::default();
        let lam = unit_lambda(&LocallySmallSpace::chain(2), &b).unwrap();
        assert!(lam.is_isomorphism());
        let lam = unit_lambda(&LocallySmallSpace::discrete(2), &b).unwrap();
        assert!(lam.is_isomorphism());
        let lam = unit_lambda(&LocallySmallSpace::chain(1), &b).unwrap();
        assert_eq!(lam.table(), &[0]);
        // non-T0: both points go to the same prime
        let lam = unit_lambda(&LocallySmallSpace::unlabeled(2, vec![0, 0b11]).unwrap(), &b).unwrap();
        assert_eq!(lam.table(), &[0, 0]);
    }

    #[test]
    fn counit_examples() {
        let b = Bounds::default();
        // (3-chain, all): σ(∅) = 0, σ({0}) = a, σ({0, a}) = 1
        let sigma = counit_sigma(&chain_pair(3), &b).unwrap();
        assert_eq!(sigma.adjoint(), &[0, 1, 2]);
        let sigma = counit_sigma(&chain_pair(2), &b).unwrap();
        assert_eq!(sigma.adjoint(), &[0, 1]);
        let sigma = counit_sigma(&b2_pair(), &b).unwrap();
        let delta = delta_hom(&b2_pair(), &b).unwrap();
        for a in 0..4 {
            assert_eq!(sigma.apply(delta.apply(a)), a);
        }
    }
}
