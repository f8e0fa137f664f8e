//! Frames with a designated sup-generating sublattice, their homomorphisms and
//! the right Galois adjoints of those homomorphisms.
//!
//! Morphisms are stored in the frame direction: a [`FrameHom`] `h : L → M`
//! maps source elements to target elements, and a [`SpecialLocalicMap`]
//! carries `h` together with `h_* : M → L`. Composition of localic maps runs
//! the adjoints in the opposite order of the homomorphisms.
//!
//! For finite pairs the designated set is always the whole frame: every
//! join-irreducible element `j` must equal the join of the designated elements
//! below it, which forces `j` itself to be designated, and joins of
//! designated elements stay designated. The dominating and compatible
//! conditions are therefore automatic for finite instances but are still
//! checked, since the symbolic real-line model is not degenerate.

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::bounds::Bounds;
use crate::lattice::{Elem, FiniteLattice};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FramePairError {
    #[error("the lattice is not a frame: distributivity fails at ({0}, {1}, {2})")]
    NotAFrame(Elem, Elem, Elem),
    #[error("designated element {0} is not in the lattice")]
    OutOfRange(Elem),
    #[error("the designated set does not contain the bottom element")]
    MissingZero,
    #[error("designated elements {0} and {1} have an undesignated meet or join")]
    NotSublattice(Elem, Elem),
    #[error("element {0} is not a join of designated elements")]
    NotSupGenerating(Elem),
    #[error("hom table has {got} entries for a source of {expected} elements")]
    MapLength { got: usize, expected: usize },
    #[error("element {element} is sent to {image}, outside the target")]
    MapOutOfRange { element: Elem, image: Elem },
    #[error("not a frame homomorphism: {0}")]
    NotAFrameHom(HomViolation),
    #[error("the homomorphism is not dominating: target element {0} is below no image of a designated element")]
    NotDominating(Elem),
    #[error("the homomorphism is not compatible: h({0}) ∧ {1} is not designated")]
    NotCompatible(Elem, Elem),
    #[error("Galois law fails at l = {l}, m = {m}")]
    GaloisViolation { l: Elem, m: Elem },
    #[error("homomorphisms are not composable: middle pairs differ")]
    NotComposable,
}

/// A frame with a designated sublattice-with-zero that sup-generates it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FramePair {
    frame: Arc<FiniteLattice>,
    designated: Vec<Elem>,
}

impl FramePair {
    pub fn new(frame: impl Into<Arc<FiniteLattice>>, designated: &[Elem]) -> Result<Self, FramePairError> {
        let frame = frame.into();
        if let Some((a, b, c)) = frame.distributivity_counterexample() {
            return Err(FramePairError::NotAFrame(a, b, c));
        }
        let mut d = designated.to_vec();
        d.sort_unstable();
        d.dedup();
        if let Some(&e) = d.iter().find(|&&e| e >= frame.size()) {
            return Err(FramePairError::OutOfRange(e));
        }
        let member = |e: Elem| d.binary_search(&e).is_ok();
        if !member(frame.bottom()) {
            return Err(FramePairError::MissingZero);
        }
        for (i, &a) in d.iter().enumerate() {
            for &b in &d[i + 1..] {
                if !member(frame.meet(a, b)) || !member(frame.join(a, b)) {
                    return Err(FramePairError::NotSublattice(a, b));
                }
            }
        }
        for e in frame.elements() {
            let below = frame.join_all(d.iter().copied().filter(|&s| frame.leq(s, e)));
            if below != e {
                return Err(FramePairError::NotSupGenerating(e));
            }
        }
        Ok(FramePair { frame, designated: d })
    }

    /// The pair designating every element.
    pub fn full(frame: impl Into<Arc<FiniteLattice>>) -> Result<Self, FramePairError> {
        let frame = frame.into();
        let all: Vec<Elem> = frame.elements().collect();
        Self::new(frame, &all)
    }

    pub fn frame(&self) -> &FiniteLattice {
        &self.frame
    }

    pub fn frame_arc(&self) -> &Arc<FiniteLattice> {
        &self.frame
    }

    pub fn designated(&self) -> &[Elem] {
        &self.designated
    }

    pub fn is_designated(&self, e: Elem) -> bool {
        self.designated.binary_search(&e).is_ok()
    }

    pub fn designates_everything(&self) -> bool {
        self.designated.len() == self.frame.size()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "law", rename_all = "kebab-case")]
pub enum HomViolation {
    Bottom { image: Elem },
    Top { image: Elem },
    Meet { a: Elem, b: Elem },
    Join { subset: Vec<Elem> },
}

impl std::fmt::Display for HomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HomViolation::Bottom { image } => write!(f, "bottom sent to {image}"),
            HomViolation::Top { image } => write!(f, "top sent to {image}"),
            HomViolation::Meet { a, b } => write!(f, "meet of {a} and {b} not preserved"),
            HomViolation::Join { subset } => write!(f, "join of {subset:?} not preserved"),
        }
    }
}

/// First law a table `map : src → tgt` breaks: bottom, top, binary meets, then
/// joins (of all subsets when `src` has at most `bounds.subset_joins`
/// elements, binary joins otherwise).
pub fn frame_hom_violation(
    map: &[Elem],
    src: &FiniteLattice,
    tgt: &FiniteLattice,
    bounds: &Bounds,
) -> Option<HomViolation> {
    if map[src.bottom()] != tgt.bottom() {
        return Some(HomViolation::Bottom {
            image: map[src.bottom()],
        });
    }
    if map[src.top()] != tgt.top() {
        return Some(HomViolation::Top {
            image: map[src.top()],
        });
    }
    for a in src.elements() {
        for b in src.elements() {
            if map[src.meet(a, b)] != tgt.meet(map[a], map[b]) {
                return Some(HomViolation::Meet { a, b });
            }
            if map[src.join(a, b)] != tgt.join(map[a], map[b]) {
                return Some(HomViolation::Join { subset: vec![a, b] });
            }
        }
    }
    if src.size() <= bounds.subset_joins {
        for mask in 0u64..1 << src.size() {
            let lhs = map[src.join_mask(mask)];
            let rhs = tgt.join_all(crate::bits::points(mask).map(|e| map[e]));
            if lhs != rhs {
                return Some(HomViolation::Join {
                    subset: crate::bits::points(mask).collect(),
                });
            }
        }
    }
    None
}

pub fn is_frame_hom(map: &[Elem], src: &FiniteLattice, tgt: &FiniteLattice, bounds: &Bounds) -> bool {
    map.len() == src.size()
        && map.iter().all(|&m| m < tgt.size())
        && frame_hom_violation(map, src, tgt, bounds).is_none()
}

/// A frame homomorphism between frame pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameHom {
    source: FramePair,
    target: FramePair,
    map: Vec<Elem>,
}

impl FrameHom {
    pub fn new(source: FramePair, target: FramePair, map: Vec<Elem>, bounds: &Bounds) -> Result<Self, FramePairError> {
        if map.len() != source.frame.size() {
            return Err(FramePairError::MapLength {
                got: map.len(),
                expected: source.frame.size(),
            });
        }
        if let Some((element, &image)) = map.iter().enumerate().find(|&(_, &m)| m >= target.frame.size()) {
            return Err(FramePairError::MapOutOfRange { element, image });
        }
        if let Some(v) = frame_hom_violation(&map, &source.frame, &target.frame, bounds) {
            return Err(FramePairError::NotAFrameHom(v));
        }
        Ok(FrameHom { source, target, map })
    }

    pub fn identity(pair: &FramePair) -> Self {
        FrameHom {
            source: pair.clone(),
            target: pair.clone(),
            map: pair.frame.elements().collect(),
        }
    }

    pub fn source(&self) -> &FramePair {
        &self.source
    }

    pub fn target(&self) -> &FramePair {
        &self.target
    }

    pub fn table(&self) -> &[Elem] {
        &self.map
    }

    pub fn apply(&self, e: Elem) -> Elem {
        self.map[e]
    }

    /// `other ∘ self` in the frame direction.
    pub fn then(&self, other: &FrameHom) -> Result<FrameHom, FramePairError> {
        if self.target != other.source {
            return Err(FramePairError::NotComposable);
        }
        Ok(FrameHom {
            source: self.source.clone(),
            target: other.target.clone(),
            map: self.map.iter().map(|&m| other.map[m]).collect(),
        })
    }

    /// A designated target element `m` with `h(l) ∧ m ≠ m` for every
    /// designated source `l`.
    pub fn dominating_failure(&self) -> Option<Elem> {
        let (src, tgt) = (&self.source, self.target.frame());
        self.target.designated.iter().copied().find(|&m| {
            !src.designated.iter().any(|&l| tgt.meet(self.map[l], m) == m)
        })
    }

    pub fn is_dominating(&self) -> bool {
        self.dominating_failure().is_none()
    }

    /// `(l, m)` designated with `h(l) ∧ m` not designated.
    pub fn compatibility_failure(&self) -> Option<(Elem, Elem)> {
        let tgt = self.target.frame();
        for &l in &self.source.designated {
            for &m in &self.target.designated {
                if !self.target.is_designated(tgt.meet(self.map[l], m)) {
                    return Some((l, m));
                }
            }
        }
        None
    }

    pub fn is_compatible(&self) -> bool {
        self.compatibility_failure().is_none()
    }

    /// If `h` maps the designated source set onto the designated target set,
    /// then `h` must be dominating and compatible. Returns the truth of that
    /// implication.
    pub fn onto_designated_implies_special(&self) -> bool {
        let mut image: Vec<Elem> = self.source.designated.iter().map(|&l| self.map[l]).collect();
        image.sort_unstable();
        image.dedup();
        image != self.target.designated || (self.is_dominating() && self.is_compatible())
    }

    /// `m ↦ ⋁{l : h(l) ≤ m}`, without any checks.
    pub fn adjoint_table(&self) -> Vec<Elem> {
        let (src, tgt) = (self.source.frame(), self.target.frame());
        tgt.elements()
            .map(|m| src.join_all(src.elements().filter(|&l| tgt.leq(self.map[l], m))))
            .collect()
    }

    /// The right Galois adjoint, after checking that `h` is dominating and
    /// compatible. The Galois law `h(l) ≤ m ⇔ l ≤ h_*(m)` is verified on all
    /// pairs before returning.
    pub fn right_adjoint(&self) -> Result<SpecialLocalicMap, FramePairError> {
        if let Some(m) = self.dominating_failure() {
            return Err(FramePairError::NotDominating(m));
        }
        if let Some((l, m)) = self.compatibility_failure() {
            return Err(FramePairError::NotCompatible(l, m));
        }
        let adjoint = self.adjoint_table();
        let lm = SpecialLocalicMap {
            hom: self.clone(),
            adjoint,
        };
        if let Some((l, m)) = lm.galois_failure() {
            return Err(FramePairError::GaloisViolation { l, m });
        }
        Ok(lm)
    }
}

/// The right adjoint `h_* : M → L` of a dominating compatible `h : L → M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialLocalicMap {
    hom: FrameHom,
    adjoint: Vec<Elem>,
}

impl SpecialLocalicMap {
    pub fn identity(pair: &FramePair) -> Self {
        SpecialLocalicMap {
            hom: FrameHom::identity(pair),
            adjoint: pair.frame.elements().collect(),
        }
    }

    /// The left adjoint `h`.
    pub fn hom(&self) -> &FrameHom {
        &self.hom
    }

    /// `h_*` as a table indexed by elements of `h`'s target.
    pub fn adjoint(&self) -> &[Elem] {
        &self.adjoint
    }

    pub fn apply(&self, m: Elem) -> Elem {
        self.adjoint[m]
    }

    /// Domain of `h_*` (the frame-side target).
    pub fn domain(&self) -> &FramePair {
        &self.hom.target
    }

    /// Codomain of `h_*` (the frame-side source).
    pub fn codomain(&self) -> &FramePair {
        &self.hom.source
    }

    pub fn galois_failure(&self) -> Option<(Elem, Elem)> {
        let (src, tgt) = (self.hom.source.frame(), self.hom.target.frame());
        for l in src.elements() {
            for m in tgt.elements() {
                if tgt.leq(self.hom.map[l], m) != src.leq(l, self.adjoint[m]) {
                    return Some((l, m));
                }
            }
        }
        None
    }

    /// Pair of domain elements whose meet `h_*` does not preserve.
    pub fn meet_preservation_failure(&self) -> Option<(Elem, Elem)> {
        let (src, tgt) = (self.hom.source.frame(), self.hom.target.frame());
        for a in tgt.elements() {
            for b in tgt.elements() {
                if self.adjoint[tgt.meet(a, b)] != src.meet(self.adjoint[a], self.adjoint[b]) {
                    return Some((a, b));
                }
            }
        }
        if self.adjoint[tgt.top()] != src.top() {
            return Some((tgt.top(), tgt.top()));
        }
        None
    }

    /// Localic composite `other ∘ self` (first `self`, then `other`): the
    /// underlying homomorphisms compose the other way round.
    pub fn then(&self, other: &SpecialLocalicMap) -> Result<SpecialLocalicMap, FramePairError> {
        let hom = other.hom.then(&self.hom)?;
        let adjoint = self.adjoint.iter().map(|&m| other.adjoint[m]).collect();
        Ok(SpecialLocalicMap { hom, adjoint })
    }
}
