//! Acceptance suite: eight criteria, each with a pinned time limit. Prints
//! one PASS/FAIL line per criterion and exits nonzero if any fails.

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use lss_core::bits;
use lss_core::duality::{
    check_functor_laws_localic, check_functor_laws_spaces, check_naturality_counit,
    check_naturality_unit, check_triangle_pair, check_triangle_space, hofmann_lawson_pair,
    hofmann_lawson_space, run_suite, stone_roundtrip_pair, stone_roundtrip_space, AdjunctionReport,
    SuiteReport,
};
use lss_core::generate::{
    exhaustive_frames, frame_suite, random_localic_chain, random_localic_maps, random_space_chain,
    random_space_maps, random_spaces, space_suite,
};
use lss_core::poset::enumerate_posets;
use lss_core::realline::classification_table;
use lss_core::spectrum::{check_delta_frame_hom, spectrum_space};
use lss_core::{Bounds, FramePair, LocallySmallSpace, SpaceMap, TopSpace};

fn bounds() -> Bounds {
    Bounds::default()
}

fn frames() -> Vec<FramePair> {
    frame_suite(4, &bounds()).expect("frame suite")
}

/// Every suite space: all topologies on ≤3 points plus random ones on 4–6.
fn spaces() -> Vec<LocallySmallSpace> {
    let mut xs = space_suite(3).expect("space suite");
    for n in 4..=6 {
        xs.extend(random_spaces(100 + n as u64, 60, n).expect("random spaces"));
    }
    xs
}

fn require(report: &SuiteReport) {
    if let Some(first) = report.failing().next() {
        panic!(
            "{} failing law(s); first: {}",
            report.failure_count(),
            serde_json::to_string(first).unwrap()
        );
    }
}

fn pass_or_error(id: &str, r: Result<AdjunctionReport, impl std::fmt::Display>) -> AdjunctionReport {
    r.unwrap_or_else(|e| {
        let mut rep = AdjunctionReport::new(id);
        rep.error("precondition", e);
        rep
    })
}

// ---------------------------------------------------------------------------
// Oracles.

/// Labeled posets on `n` points counted by brute force over all relations.
fn brute_poset_count(n: usize) -> usize {
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    (0u32..1 << off.len())
        .filter(|mask| {
            let rel = |a: usize, b: usize| {
                a == b || off.iter().position(|&p| p == (a, b)).is_some_and(|k| mask >> k & 1 == 1)
            };
            (0..n).all(|a| (0..n).all(|b| a == b || !(rel(a, b) && rel(b, a))))
                && (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(rel(a, b) && rel(b, c)) || rel(a, c))))
        })
        .count()
}

/// Every topology on `n` points, by brute force over families of subsets.
fn brute_topologies(n: usize) -> Vec<TopSpace> {
    let subsets = 1usize << n;
    let full = subsets - 1;
    (0u64..1 << subsets)
        .filter(|fam| {
            let has = |s: usize| fam >> s & 1 == 1;
            has(0)
                && has(full)
                && (0..subsets).all(|a| (0..subsets).all(|c| !(has(a) && has(c)) || (has(a | c) && has(a & c))))
        })
        .map(|fam| {
            let opens = (0..subsets).filter(|&s| fam >> s & 1 == 1).map(|s| s as u64).collect();
            TopSpace::unlabeled(n, opens).unwrap()
        })
        .collect()
}

fn brute_t0(t: &TopSpace) -> bool {
    let n = t.points();
    (0..n).all(|x| (0..n).all(|y| x == y || t.opens().iter().any(|&u| bits::contains(u, x) != bits::contains(u, y))))
}

// ---------------------------------------------------------------------------
// Criteria.

fn criterion_1() -> String {
    let b = bounds();
    for n in 1..=4 {
        assert_eq!(enumerate_posets(n, &b).unwrap().len(), brute_poset_count(n), "posets on {n} points");
    }
    assert_eq!(brute_poset_count(4), 219);
    let suite = frames();
    assert_eq!(exhaustive_frames(4, &b).unwrap().len(), 219, "downset lattices of 4-point posets");
    let bad: Vec<usize> = (0..suite.len())
        .filter(|&i| !check_delta_frame_hom(suite[i].frame(), &b).unwrap().holds())
        .collect();
    assert!(bad.is_empty(), "Δ violations at suite indices {bad:?}");
    format!("{} lattices, Δ a frame hom onto the hull-kernel topology", suite.len())
}

fn criterion_2() -> String {
    let b = bounds();
    let suite = frames();
    for (i, p) in suite.iter().enumerate() {
        let s = spectrum_space(p.frame(), p.designated()).unwrap();
        assert!(s.topology.is_sober(&b).unwrap(), "spectrum of suite frame {i} not sober");
    }
    let tops = brute_topologies(3);
    assert_eq!(tops.len(), 29);
    let mut sober = 0;
    for t in &tops {
        let s = t.is_sober(&b).unwrap();
        assert_eq!(s, brute_t0(t), "sober ⇔ T0 fails on {:?}", t.opens());
        sober += s as usize;
    }
    assert_eq!((sober, tops.len() - sober), (19, 10));
    format!("{} spectra sober; 29 topologies on 3 points: 19 sober, 10 not", suite.len())
}

fn criterion_3() -> String {
    let b = bounds();
    let suite = frames();
    let mut checked = 0;
    for (i, p) in suite.iter().enumerate() {
        let l = p.frame();
        if l.size() <= 12 {
            for x in l.elements() {
                for y in l.elements() {
                    assert_eq!(l.way_below(x, y, &b).unwrap(), l.leq(x, y), "frame {i}: {x} ≪ {y}");
                }
            }
            assert!(l.is_continuous_frame(&b).unwrap(), "frame {i} not continuous");
            checked += 1;
        } else {
            assert!(l.continuity(&b).holds, "frame {i} not continuous");
        }
        assert!(l.is_spatial(), "frame {i} not spatial");
    }
    format!("way-below = ≤ on {checked} lattices (≤ 12 elements); all {} continuous and spatial", suite.len())
}

fn criterion_4() -> String {
    let b = bounds();
    let pairs = frames();
    let small = space_suite(3).unwrap();

    let mut reports = Vec::new();
    reports.push(run_suite(&small, |x| {
        let id = format!("space {:?}", x.smops());
        let mut r = check_triangle_space(&id, x, &b);
        r.absorb(check_naturality_unit(&id, &SpaceMap::identity(x), &b));
        r
    }));
    // Every continuous map between exhaustive spaces on ≤3 points.
    let tiny: Vec<&LocallySmallSpace> = small.iter().collect();
    let mut maps = Vec::new();
    for x in &tiny {
        for y in &tiny {
            let (n, m) = (x.points(), y.points());
            if m == 0 && n > 0 {
                continue;
            }
            for code in 0..m.max(1).pow(n as u32) {
                let table: Vec<usize> = (0..n).map(|i| code / m.pow(i as u32) % m).collect();
                let f = SpaceMap::new((*x).clone(), (*y).clone(), table).unwrap();
                if f.is_continuous() {
                    maps.push(f);
                }
            }
        }
    }
    reports.push(run_suite(&maps, |f| check_naturality_unit(&format!("map {:?}", f.table()), f, &b)));
    reports.push(run_suite(&pairs, |p| {
        let id = format!("pair {:?}", p.frame().labels());
        let mut r = check_triangle_pair(&id, p, &b);
        r.absorb(check_naturality_counit(&id, &lss_core::SpecialLocalicMap::identity(p), &b));
        r
    }));

    let space_maps = random_space_maps(41, 250, 5).unwrap();
    let localic = random_localic_maps(42, 250, 4, &b).unwrap();
    reports.push(run_suite(&space_maps, |f| check_naturality_unit("random space map", f, &b)));
    reports.push(run_suite(&localic, |m| check_naturality_counit("random localic map", m, &b)));

    let space_chains: Vec<Vec<SpaceMap>> = (0..100).map(|s| random_space_chain(1000 + s, 3, 4).unwrap()).collect();
    let localic_chains: Vec<_> = (0..100).map(|s| random_localic_chain(2000 + s, 3, 4, &b).unwrap()).collect();
    reports.push(run_suite(&space_chains, |c| check_functor_laws_spaces("space chain", c, &b)));
    reports.push(run_suite(&localic_chains, |c| check_functor_laws_localic("localic chain", c, &b)));

    let all = reports.into_iter().reduce(SuiteReport::merge).unwrap();
    require(&all);
    format!(
        "{} spaces, {} maps, {} pairs, 500 random morphisms, 200 chains; {} laws",
        small.len(),
        maps.len(),
        pairs.len(),
        all.law_count()
    )
}

fn criterion_5() -> String {
    let b = bounds();
    let t0: Vec<LocallySmallSpace> = spaces().into_iter().filter(|x| x.is_t0()).collect();
    let pairs = frames();
    let r1 = run_suite(&t0, |x| pass_or_error("space", stone_roundtrip_space("space", x, &b)));
    let r2 = run_suite(&pairs, |p| pass_or_error("pair", stone_roundtrip_pair("pair", p, &b)));
    let all = r1.merge(r2);
    require(&all);
    format!("{} T0 spaces and {} frame pairs round-trip; {} laws", t0.len(), pairs.len(), all.law_count())
}

fn criterion_6() -> String {
    let b = bounds();
    let t0: Vec<LocallySmallSpace> = spaces().into_iter().filter(|x| x.is_t0()).collect();
    let pairs = frames();
    let r1 = run_suite(&pairs, |p| pass_or_error("pair", hofmann_lawson_pair("pair", p, &b)));
    let r2 = run_suite(&t0, |x| pass_or_error("space", hofmann_lawson_space("space", x, &b)));
    let all = r1.merge(r2);
    require(&all);
    format!("{} frame pairs and {} T0 spaces certified; {} laws", pairs.len(), t0.len(), all.law_count())
}

fn criterion_7() -> String {
    let table = classification_table().unwrap();
    // (map, bounded, continuous, weakly continuous, dominating, compatible)
    let expected = [
        ("-id", false, true, true, false, true),
        ("sin", true, false, true, true, false),
        ("arctan", true, true, true, true, true),
        ("1/exp", false, true, true, false, true),
    ];
    assert_eq!(table.len(), 4);
    for (row, e) in table.iter().zip(expected) {
        let got = (row.map.as_str(), row.bounded, row.continuous, row.weakly_continuous, row.dominating, row.compatible);
        assert_eq!(got, e);
        for w in row.classification.witnesses.iter().chain(&row.verdict.witnesses) {
            if !w.holds {
                assert!(w.smop.is_some() || w.target.is_some(), "{}: {} lacks a witness set", row.map, w.property);
            }
        }
    }
    let sin = &table[1];
    let w = sin
        .classification
        .witnesses
        .iter()
        .find(|w| w.property == "continuous")
        .expect("sin continuity witness");
    assert!(!w.holds);
    assert_eq!(w.smop.as_ref().unwrap().to_string(), "(−∞, 0)");
    "four rows match, each negative verdict has a witness".into()
}

fn criterion_8() -> String {
    let xs = spaces();
    for x in &xs {
        assert_eq!(x.weakly_open_sets(), x.smops(), "wo ≠ smops on {:?}", x.smops());
    }
    // Every map, continuous or not, between exhaustive spaces on ≤2 points.
    let small: Vec<LocallySmallSpace> = space_suite(2).unwrap();
    let mut maps = 0;
    for x in &small {
        for y in small.iter().filter(|y| y.points() > 0 || x.points() == 0) {
            let (n, m) = (x.points(), y.points());
            for code in 0..m.max(1).pow(n as u32) {
                let table: Vec<usize> = (0..n).map(|i| code / m.pow(i as u32) % m).collect();
                assert!(SpaceMap::new(x.clone(), y.clone(), table).unwrap().is_bounded());
                maps += 1;
            }
        }
    }
    for f in random_space_maps(77, 300, 6).unwrap() {
        assert!(f.is_bounded());
        maps += 1;
    }
    // Every designated subset that validates is the whole frame.
    let mut candidates = 0;
    for p in frames().iter().filter(|p| p.frame().size() <= 10) {
        let l = p.frame();
        assert!(p.designates_everything());
        for mask in 0u64..1 << l.size() {
            let d: Vec<usize> = bits::points(mask).collect();
            if let Ok(q) = FramePair::new(l.clone(), &d) {
                assert_eq!(q.designated().len(), l.size(), "proper designated part validated");
            }
            candidates += 1;
        }
    }
    format!(
        "{} spaces with wo = smops, {maps} maps bounded, {candidates} designated candidates",
        xs.len()
    )
}

/// Name, check, time limit in seconds.
type Criterion = (&'static str, fn() -> String, u64);

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 Δ is a frame hom on every suite lattice", criterion_1, 10),
        ("2 spectra sober; sober ⇔ T0 on 3 points", criterion_2, 5),
        ("3 way-below oracle; continuous and spatial", criterion_3, 60),
        ("4 triangle, naturality and functor laws", criterion_4, 60),
        ("5 Stone-type round-trips", criterion_5, 30),
        ("6 Hofmann–Lawson certificates", criterion_6, 30),
        ("7 real-line classification table", criterion_7, 1),
        ("8 finite degeneracy facts", criterion_8, 10),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run));
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(limit);
        let line = match outcome {
            Ok(summary) if elapsed <= limit => format!("PASS  criterion {name}: {summary} [{elapsed:.2?} ≤ {limit:?}]"),
            Ok(summary) => format!("FAIL  criterion {name}: {summary} [{elapsed:.2?} exceeds {limit:?}]"),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                format!("FAIL  criterion {name}: {msg} [{elapsed:.2?}]")
            }
        };
        failed += line.starts_with("FAIL") as usize;
        println!("{line}");
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
