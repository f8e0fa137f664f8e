use serde_json::{json, Value};

use super::report::AdjunctionReport;
use super::{
    counit_sigma, delta_hom, omega_adjoint_by_union, omega_morphism, omega_object, sigma_morphism,
    sigma_object, unit_lambda, DualityError,
};
use crate::bits::{self, PointSet};
use crate::bounds::Bounds;
use crate::frame_pair::{FrameHom, FramePair, SpecialLocalicMap};
use crate::space::{LocallySmallSpace, SpaceMap};

fn first_mismatch(lhs: &[usize], rhs: &[usize]) -> Option<Value> {
    if lhs.len() != rhs.len() {
        return Some(json!({ "lhs_len": lhs.len(), "rhs_len": rhs.len() }));
    }
    lhs.iter()
        .zip(rhs)
        .position(|(a, b)| a != b)
        .map(|i| json!({ "at": i, "lhs": lhs[i], "rhs": rhs[i] }))
}

fn identity_table(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// `σ_{ΩX} ∘ Ω(λ_X) = id` on the weakly open sets of `X`.
pub fn check_triangle_space(id: &str, x: &LocallySmallSpace, bounds: &Bounds) -> AdjunctionReport {
    let mut r = AdjunctionReport::new(id);
    const LAW: &str = "triangle: σ_ΩX ∘ Ω(λ_X) = id_ΩX";
    let composite = (|| -> Result<SpecialLocalicMap, DualityError> {
        let lambda = unit_lambda(x, bounds)?;
        let omega_lambda = omega_morphism(&lambda, bounds)?;
        let sigma = counit_sigma(&omega_object(x)?.pair, bounds)?;
        Ok(omega_lambda.then(&sigma)?)
    })();
    match composite {
        Ok(c) => {
            let n = c.domain().frame().size();
            r.check(LAW, first_mismatch(c.adjoint(), &identity_table(n)));
        }
        Err(e) => r.error(LAW, e),
    }
    r
}

/// `Σ(σ_P) ∘ λ_{ΣP} = id` on `Spec L`.
pub fn check_triangle_pair(id: &str, p: &FramePair, bounds: &Bounds) -> AdjunctionReport {
    let mut r = AdjunctionReport::new(id);
    const LAW: &str = "triangle: Σ(σ_P) ∘ λ_ΣP = id_ΣP";
    let composite = (|| -> Result<SpaceMap, DualityError> {
        let sp = sigma_object(p, bounds)?;
        let lambda = unit_lambda(&sp.space, bounds)?;
        let sigma_sigma = sigma_morphism(&counit_sigma(p, bounds)?, bounds)?;
        Ok(lambda.then(&sigma_sigma)?)
    })();
    match composite {
        Ok(c) => r.check(LAW, first_mismatch(c.table(), &identity_table(c.source().points()))),
        Err(e) => r.error(LAW, e),
    }
    r
}

/// `ΣΩ(f) ∘ λ_X = λ_Y ∘ f`, plus agreement of `Ω(f)`'s adjoint with the
/// union formula.
pub fn check_naturality_unit(id: &str, f: &SpaceMap, bounds: &Bounds) -> AdjunctionReport {
    let mut r = AdjunctionReport::new(id);
    const LAW: &str = "naturality: ΣΩ(f) ∘ λ_X = λ_Y ∘ f";
    const UNION: &str = "Ω(f)_* = union formula";
    let sides = (|| -> Result<(SpaceMap, SpaceMap, SpecialLocalicMap), DualityError> {
        let omega_f = omega_morphism(f, bounds)?;
        let sigma_omega_f = sigma_morphism(&omega_f, bounds)?;
        let lhs = unit_lambda(f.source(), bounds)?.then(&sigma_omega_f)?;
        let rhs = f.then(&unit_lambda(f.target(), bounds)?)?;
        Ok((lhs, rhs, omega_f))
    })();
    match sides {
        Ok((lhs, rhs, omega_f)) => {
            let mut w = first_mismatch(lhs.table(), rhs.table());
            if w.is_none() && lhs != rhs {
                w = Some(json!({ "error": "the two sides have different endpoints" }));
            }
            r.check(LAW, w);
            let ox = omega_object(f.source()).expect("source was already accepted");
            let oy = omega_object(f.target()).expect("target was already accepted");
            let mismatch = omega_adjoint_by_union(f).into_iter().find_map(|(w, v)| {
                let got = oy.opens[omega_f.apply(ox.index_of(w)?)];
                (got != v).then(|| json!({ "W": w, "adjoint": got, "union": v }))
            });
            r.check(UNION, mismatch);
        }
        Err(e) => r.error(LAW, e),
    }
    r
}

/// `σ_L ∘ ΩΣ(m) = m ∘ σ_M` for `m : (M, M_s) → (L, L_s)` in the localic
/// direction, on every element of `ΩΣM`.
pub fn check_naturality_counit(id: &str, m: &SpecialLocalicMap, bounds: &Bounds) -> AdjunctionReport {
    let mut r = AdjunctionReport::new(id);
    const LAW: &str = "naturality: σ_L ∘ ΩΣ(h_*) = h_* ∘ σ_M";
    let sides = (|| -> Result<(SpecialLocalicMap, SpecialLocalicMap), DualityError> {
        let omega_sigma_m = omega_morphism(&sigma_morphism(m, bounds)?, bounds)?;
        let lhs = omega_sigma_m.then(&counit_sigma(m.codomain(), bounds)?)?;
        let rhs = counit_sigma(m.domain(), bounds)?.then(m)?;
        Ok((lhs, rhs))
    })();
    match sides {
        Ok((lhs, rhs)) => r.check(LAW, first_mismatch(lhs.adjoint(), rhs.adjoint())),
        Err(e) => r.error(LAW, e),
    }
    r
}

/// `Ω(id) = id` and `Ω(g ∘ f) = Ω(g) ∘ Ω(f)` (localic composition) along a
/// chain of composable space maps.
pub fn check_functor_laws_spaces(id: &str, chain: &[SpaceMap], bounds: &Bounds) -> AdjunctionReport {
    let mut r = AdjunctionReport::new(id);
    for (i, f) in chain.iter().enumerate() {
        let law = format!("Ω(id) = id at step {i}");
        match omega_morphism(&SpaceMap::identity(f.source()), bounds)
            .and_then(|lhs| Ok((lhs, SpecialLocalicMap::identity(&omega_object(f.source())?.pair))))
        {
            Ok((lhs, rhs)) => r.record(&law, lhs == rhs, || json!(first_mismatch(lhs.adjoint(), rhs.adjoint()))),
            Err(e) => r.error(&law, e),
        }
    }
    for (i, pair) in chain.windows(2).enumerate() {
        let law = format!("Ω(g∘f) = Ω(g)∘Ω(f) at step {i}");
        let sides = (|| -> Result<_, DualityError> {
            let lhs = omega_morphism(&pair[0].then(&pair[1])?, bounds)?;
            let rhs = omega_morphism(&pair[0], bounds)?.then(&omega_morphism(&pair[1], bounds)?)?;
            Ok((lhs, rhs))
        })();
        match sides {
            Ok((lhs, rhs)) => r.record(&law, lhs == rhs, || {
                json!(first_mismatch(lhs.adjoint(), rhs.adjoint()))
            }),
            Err(e) => r.error(&law, e),
        }
    }
    r
}

/// `Σ(id) = id` and `Σ(n ∘ m) = Σ(n) ∘ Σ(m)` along a chain of composable
/// special localic maps.
pub fn check_functor_laws_localic(
    id: &str,
    chain: &[SpecialLocalicMap],
    bounds: &Bounds,
) -> AdjunctionReport {
    let mut r = AdjunctionReport::new(id);
    for (i, m) in chain.iter().enumerate() {
        let law = format!("Σ(id) = id at step {i}");
        match sigma_morphism(&SpecialLocalicMap::identity(m.domain()), bounds) {
            Ok(lhs) => {
                let rhs = SpaceMap::identity(lhs.source());
                r.record(&law, lhs == rhs, || json!(first_mismatch(lhs.table(), rhs.table())));
            }
            Err(e) => r.error(&law, e),
        }
    }
    for (i, pair) in chain.windows(2).enumerate() {
        let law = format!("Σ(n∘m) = Σ(n)∘Σ(m) at step {i}");
        let sides = (|| -> Result<_, DualityError> {
            let lhs = sigma_morphism(&pair[0].then(&pair[1])?, bounds)?;
            let rhs = sigma_morphism(&pair[0], bounds)?.then(&sigma_morphism(&pair[1], bounds)?)?;
            Ok((lhs, rhs))
        })();
        match sides {
            Ok((lhs, rhs)) => {
                r.record(&law, lhs == rhs, || json!(first_mismatch(lhs.table(), rhs.table())))
            }
            Err(e) => r.error(&law, e),
        }
    }
    r
}

/// Round trip through `ΣΩ` for a sober space: `λ_X` is an isomorphism of
/// locally small spaces with `λ_X(𝓛_X) = Δ(𝓛_X)` set by set.
pub fn stone_roundtrip_space(
    id: &str,
    x: &LocallySmallSpace,
    bounds: &Bounds,
) -> Result<AdjunctionReport, DualityError> {
    if !x.is_topologically_sober(bounds)? {
        return Err(DualityError::NotSober);
    }
    let mut r = AdjunctionReport::new(id);
    let lambda = unit_lambda(x, bounds)?;
    let omega = omega_object(x)?;
    let sigma = sigma_object(&omega.pair, bounds)?;

    let mut image = lambda.table().to_vec();
    image.sort_unstable();
    image.dedup();
    r.record("λ_X is a bijection", image.len() == x.points() && image.len() == sigma.space.points(), || {
        json!({ "table": lambda.table(), "spectrum_points": sigma.space.points() })
    });

    let set_image = |w: PointSet| bits::image(lambda.table(), w);
    let mismatch = x.smops().iter().find_map(|&w| {
        let delta = sigma.spectrum.delta(omega.index_of(w)?);
        (set_image(w) != delta).then(|| json!({ "smop": w, "image": set_image(w), "delta": delta }))
    });
    r.check("λ_X(W) = Δ(W) for every smop W", mismatch);

    let mismatch = x.smops().iter().find_map(|&w| {
        let delta = sigma.spectrum.delta(omega.index_of(w)?);
        let back = lambda.preimage(delta);
        (back != w).then(|| json!({ "smop": w, "preimage_of_delta": back }))
    });
    r.check("λ_X⁻¹(Δ(W)) = W for every smop W", mismatch);

    let mut images: Vec<PointSet> = x.smops().iter().map(|&w| set_image(w)).collect();
    bits::canonicalize(&mut images);
    r.record("λ_X(𝓛_X) = Δ(𝓛_X) as families", images == sigma.space.smops(), || {
        json!({ "image": images, "delta": sigma.space.smops() })
    });
    r.record("λ_X is an isomorphism", lambda.is_isomorphism(), || json!({ "table": lambda.table() }));
    Ok(r)
}

/// Round trip through `ΩΣ` for a spatial frame pair: `Δ_L` is a frame
/// isomorphism onto the hull-kernel topology, `Δ_L⁻¹(Δ_L(L_s)) = L_s`, and
/// `σ_L` inverts `Δ_L`.
pub fn stone_roundtrip_pair(id: &str, p: &FramePair, bounds: &Bounds) -> Result<AdjunctionReport, DualityError> {
    let lattice = p.frame();
    if !lattice.is_spatial() {
        return Err(DualityError::NotSpatial);
    }
    let mut r = AdjunctionReport::new(id);
    let delta = delta_hom(p, bounds)?;
    let sigma = counit_sigma(p, bounds)?;
    let n = lattice.size();
    let m = delta.target().frame().size();

    let mut seen = delta.table().to_vec();
    seen.sort_unstable();
    seen.dedup();
    r.record("Δ_L is injective", seen.len() == n, || json!({ "table": delta.table() }));
    r.record("Δ_L is onto Δ_L(L)", seen.len() == m, || json!({ "image": seen.len(), "target": m }));

    let image_of_designated: Vec<usize> = p.designated().iter().map(|&s| delta.apply(s)).collect();
    let back: Vec<usize> = lattice
        .elements()
        .filter(|&a| image_of_designated.contains(&delta.apply(a)))
        .collect();
    r.record("Δ_L⁻¹(Δ_L(L_s)) = L_s", back == p.designated(), || {
        json!({ "preimage": back, "designated": p.designated() })
    });

    let sd: Vec<usize> = lattice.elements().map(|a| sigma.apply(delta.apply(a))).collect();
    r.check("σ_L ∘ Δ_L = id", first_mismatch(&sd, &identity_table(n)));
    let ds: Vec<usize> = (0..m).map(|a| delta.apply(sigma.apply(a))).collect();
    r.check("Δ_L ∘ σ_L = id", first_mismatch(&ds, &identity_table(m)));

    match FrameHom::new(delta.target().clone(), p.clone(), sigma.adjoint().to_vec(), bounds) {
        Ok(inverse) => r.record(
            "Δ_L⁻¹ is dominating and compatible",
            inverse.is_dominating() && inverse.is_compatible(),
            || json!({ "dominating": inverse.dominating_failure(), "compatible": inverse.compatibility_failure() }),
        ),
        Err(e) => r.error("Δ_L⁻¹ is dominating and compatible", e),
    }
    Ok(r)
}

/// Continuous frame pair ⇒ its spectrum is a topologically sober, locally
/// compact locally small space; then the Stone round trip.
pub fn hofmann_lawson_pair(id: &str, p: &FramePair, bounds: &Bounds) -> Result<AdjunctionReport, DualityError> {
    let mut r = AdjunctionReport::new(id);
    let continuity = p.frame().continuity(bounds);
    const LAW: &str = "continuous frame ⇒ spectrum is locally compact sober";
    if continuity.holds {
        match sigma_object(p, bounds) {
            Ok(s) => {
                let sober = s.space.is_topologically_sober(bounds)?;
                let lk = s.space.is_topologically_locally_compact(bounds)?;
                r.record(LAW, sober && lk, || {
                    json!({ "sober": sober, "locally_compact": lk, "continuity_method": continuity.method })
                });
            }
            Err(e) => r.error(LAW, e),
        }
        r.record("continuous frame is spatial", p.frame().is_spatial(), || {
            json!({ "continuity_method": continuity.method })
        });
    } else {
        // Vacuous: the hypothesis fails. Never happens for finite frames.
        r.record(LAW, true, || Value::Null);
    }
    r.absorb(stone_roundtrip_pair(id, p, bounds)?);
    Ok(r)
}

/// Locally compact sober space ⇒ its weakly open frame is continuous and
/// `(𝓛^{wo}_X, 𝓛_X)` is a frame pair; then the Stone round trip.
pub fn hofmann_lawson_space(
    id: &str,
    x: &LocallySmallSpace,
    bounds: &Bounds,
) -> Result<AdjunctionReport, DualityError> {
    let mut r = AdjunctionReport::new(id);
    const LAW: &str = "locally compact sober space ⇒ weakly open frame is continuous";
    let sober = x.is_topologically_sober(bounds)?;
    let lk = x.is_topologically_locally_compact(bounds)?;
    if sober && lk {
        match omega_object(x) {
            Ok(o) => {
                let c = o.pair.frame().continuity(bounds);
                r.record(LAW, c.holds, || json!({ "method": c.method }));
            }
            Err(e) => r.error(LAW, e),
        }
    } else {
        r.record(LAW, true, || Value::Null);
    }
    r.absorb(stone_roundtrip_space(id, x, bounds)?);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::FiniteLattice;
    use std::sync::Arc;

    fn b2_pair() -> FramePair {
        FramePair::full(FiniteLattice::from_sets(&[0b00, 0b01, 0b10, 0b11]).unwrap()).unwrap()
    }

    fn chain_pair(n: usize) -> FramePair {
        FramePair::full(Arc::new(FiniteLattice::chain(n))).unwrap()
    }

    fn spaces() -> Vec<LocallySmallSpace> {
        vec![
            LocallySmallSpace::chain(1),
            LocallySmallSpace::chain(2),
            LocallySmallSpace::chain(3),
            LocallySmallSpace::discrete(2),
            LocallySmallSpace::unlabeled(0, vec![0]).unwrap(),
            LocallySmallSpace::unlabeled(2, vec![0, 0b11]).unwrap(),
        ]
    }

    #[test]
    fn triangles_on_small_instances() {
        let b = Bounds::default();
        for x in spaces() {
            let r = check_triangle_space("x", &x, &b);
            assert!(r.passed(), "{r:?}");
        }
        for p in [b2_pair(), chain_pair(1), chain_pair(2), chain_pair(3)] {
            let r = check_triangle_pair("p", &p, &b);
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn naturality_examples() {
        let b = Bounds::default();
        let x = LocallySmallSpace::chain(2);
        assert!(check_naturality_unit("id", &SpaceMap::identity(&x), &b).passed());
        let incl = SpaceMap::new(LocallySmallSpace::chain(1), x.clone(), vec![0]).unwrap();
        let r = check_naturality_unit("incl", &incl, &b);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.laws.len(), 2);

        let h = FrameHom::new(b2_pair(), chain_pair(2), vec![0, 1, 0, 1], &b).unwrap();
        let r = check_naturality_counit("h", &h.right_adjoint().unwrap(), &b);
        assert!(r.passed(), "{r:?}");
        let r = check_naturality_counit("id", &SpecialLocalicMap::identity(&b2_pair()), &b);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn naturality_reports_bad_input() {
        let b = Bounds::default();
        let xs = LocallySmallSpace::unlabeled(2, vec![0, 0b01, 0b11]).unwrap();
        let ys = LocallySmallSpace::unlabeled(2, vec![0, 0b10, 0b11]).unwrap();
        let bad = SpaceMap::new(xs, ys, vec![0, 1]).unwrap();
        let r = check_naturality_unit("bad", &bad, &b);
        assert!(!r.passed());
        assert!(r.laws[0].witness.is_some());
    }

    #[test]
    fn functor_laws_on_chain_inclusions() {
        let b = Bounds::default();
        let f = SpaceMap::new(LocallySmallSpace::chain(1), LocallySmallSpace::chain(2), vec![0]).unwrap();
        let g = SpaceMap::new(LocallySmallSpace::chain(2), LocallySmallSpace::chain(3), vec![0, 1]).unwrap();
        let r = check_functor_laws_spaces("fg", &[f, g], &b);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.laws.len(), 3);

        let h1 = FrameHom::new(chain_pair(3), b2_pair(), vec![0, 1, 3], &b).unwrap();
        let h2 = FrameHom::new(b2_pair(), chain_pair(2), vec![0, 1, 0, 1], &b).unwrap();
        let chain = [h2.right_adjoint().unwrap(), h1.right_adjoint().unwrap()];
        let r = check_functor_laws_localic("m", &chain, &b);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn roundtrips() {
        let b = Bounds::default();
        for x in spaces().into_iter().filter(|x| x.is_t0()) {
            let r = stone_roundtrip_space("x", &x, &b).unwrap();
            assert!(r.passed(), "{r:?}");
        }
        let non_t0 = LocallySmallSpace::unlabeled(2, vec![0, 0b11]).unwrap();
        assert!(matches!(stone_roundtrip_space("x", &non_t0, &b), Err(DualityError::NotSober)));
        for p in [b2_pair(), chain_pair(1), chain_pair(3)] {
            let r = stone_roundtrip_pair("p", &p, &b).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn hofmann_lawson_examples() {
        let b = Bounds::default();
        let r = hofmann_lawson_pair("b2", &b2_pair(), &b).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.laws.iter().any(|l| l.name.starts_with("continuous frame ⇒")));
        let r = hofmann_lawson_space("chain3", &LocallySmallSpace::chain(3), &b).unwrap();
        assert!(r.passed(), "{r:?}");
    }
}
