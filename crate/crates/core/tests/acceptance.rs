//! One line per acceptance criterion. Run with
//! `cargo test -p nestochroma --test acceptance`.

use std::panic;
use std::process::ExitCode;
use std::time::Instant;

use nestochroma::chroma::DEFAULT_BUDGET;
use nestochroma::colourings::{alpha_bounds_with, HarmonicTable};
use nestochroma::nested::is_separated;
use nestochroma::packing::greedy_counterexamples;
use nestochroma::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::Value;

const FIXTURE: &str = include_str!("../../../fixtures/paper.json");

type Check = fn() -> Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn exact(g: &ConflictGraph) -> Result<u32, String> {
    let r = exact_chromatic(g, DEFAULT_BUDGET);
    ensure(g.is_proper(&r.witness), || {
        format!("{}: witness is not proper", g.provenance())
    })?;
    ensure(r.optimal, || {
        format!(
            "{}: only bracketed in [{}, {}]",
            g.provenance(),
            r.lower,
            r.upper
        )
    })?;
    Ok(r.upper)
}

fn graph<S: FacetSystem>(s: &S) -> ConflictGraph {
    ConflictGraph::from_system(s).expect("within capacity")
}

fn criterion_1() -> Result<String, String> {
    let mut values = Vec::new();
    for n in 2..=7 {
        let chi = exact(&graph(&FamilyTag::associahedron(n).unwrap()))?;
        ensure(chi as u64 == alpha(n), || {
            format!("n={n}: χ={chi}, alpha={}", alpha(n))
        })?;
        values.push(chi);
    }
    ensure(values == [3, 4, 6, 8, 10, 12], || format!("{values:?}"))?;
    Ok(format!("χ(assoc n=2..7) = alpha(n) = {values:?}"))
}

fn fixture() -> Value {
    serde_json::from_str(FIXTURE).expect("fixture parses")
}

fn criterion_2() -> Result<String, String> {
    let doc = fixture();
    let mut checked = 0;
    for (key, want) in doc["cyclohedron_interval"].as_object().unwrap() {
        let n: usize = key.parse().unwrap();
        let (lo, hi) = gamma_interval(n).map_err(|e| e.to_string())?;
        let want = (want[0].as_u64().unwrap(), want[1].as_u64().unwrap());
        ensure((lo, hi) == want, || {
            format!("n={n}: interval ({lo}, {hi}) vs reference {want:?}")
        })?;
        checked += 2;
    }
    for (key, want) in doc["cyclohedron_upper"].as_object().unwrap() {
        let n: usize = key.parse().unwrap();
        let got = gamma_upper(n).map_err(|e| e.to_string())?;
        ensure(Some(got) == want.as_u64(), || {
            format!("n={n}: upper {got} vs reference {want}")
        })?;
        checked += 1;
    }
    ensure(checked == 24, || {
        format!("only {checked} values in the fixture")
    })?;
    Ok(format!("{checked} reference cyclohedron bounds recomputed"))
}

fn fixture_colouring(listing: &Value) -> Colouring<Facet> {
    let mut facets = Vec::new();
    let mut colours = Vec::new();
    for (c, class) in listing["classes"].as_array().unwrap().iter().enumerate() {
        for s in class.as_array().unwrap() {
            let seg: Segment = s.as_str().unwrap().parse().unwrap();
            facets.push(Facet::Segment(seg));
            colours.push(c as u32 + 1);
        }
    }
    Colouring::new(facets, colours).unwrap()
}

fn criterion_3() -> Result<String, String> {
    let doc = fixture();
    let tag = FamilyTag::cyclohedron(7).unwrap();
    for name in ["f", "h"] {
        let listing = &doc["cyclohedron_7"][name];
        let c = fixture_colouring(listing);
        let want = listing["colours"].as_u64().unwrap() as u32;
        ensure(c.colour_count() == want, || {
            format!("{name}: {} colours", c.colour_count())
        })?;
        let bad = find_violation(&c, &tag).map_err(|e| e.to_string())?;
        ensure(bad.is_none(), || format!("{name}: clash {bad:?}"))?;
    }
    let f = fixture_colouring(&doc["cyclohedron_7"]["f"]);
    ensure(f.same_partition(&cyclo_colouring(7).unwrap()), || {
        "f differs from cyclo_colouring(7)".into()
    })?;
    let mut counts = Vec::new();
    for n in [7, 8, 9] {
        let c = cyclo_improve(n).map_err(|e| e.to_string())?;
        let tag = FamilyTag::cyclohedron(n).unwrap();
        ensure(validate(&c, &tag).unwrap(), || {
            format!("cyclo_improve({n}) is not proper")
        })?;
        counts.push(c.colour_count());
    }
    ensure(counts == [12, 15, 17], || {
        format!("cyclo_improve(7,8,9) = {counts:?}")
    })?;
    Ok(format!(
        "f: 13 and h: 12 colours, both proper; cyclo_improve(7,8,9) = {counts:?}"
    ))
}

fn criterion_4() -> Result<String, String> {
    let mut values = Vec::new();
    for n in 2..=5 {
        let chi = exact(&graph(&FamilyTag::permutohedron(n).unwrap()))?;
        ensure(chi as usize == n, || format!("n={n}: χ={chi}"))?;
        values.push(chi);
    }
    Ok(format!("χ(permuto n=2..5) = {values:?}"))
}

fn criterion_5() -> Result<String, String> {
    let g4 = exact(&graph(&FamilyTag::cyclohedron(4).unwrap()))?;
    let g5 = exact(&graph(&FamilyTag::cyclohedron(5).unwrap()))?;
    ensure((g4, g5) == (6, 8), || format!("γ_4={g4}, γ_5={g5}"))?;
    ensure(alpha(4) == 6 && alpha(5) == 8, || {
        "alpha(4), alpha(5) differ".into()
    })?;
    Ok("γ_4 = 6, γ_5 = 8, equal to alpha".into())
}

fn criterion_6() -> Result<String, String> {
    for n in 1..=10 {
        let c = stello_colouring(n).map_err(|e| e.to_string())?;
        let want = 2 * n - 1 - (n - 1) / 2;
        ensure(c.colour_count() as usize == want, || {
            format!("n={n}: {} colours", c.colour_count())
        })?;
        let tag = FamilyTag::stellohedron(n).unwrap();
        ensure(validate(&c, &tag).unwrap(), || format!("n={n}: not proper"))?;
    }
    let g3 = graph(&FamilyTag::stellohedron(3).unwrap());
    let sigma3 = exact(&g3)?;
    let brute = brute_chromatic(&g3).map_err(|e| e.to_string())?;
    ensure(sigma3 == 4 && brute == 4, || {
        format!("σ_3: solver {sigma3}, brute force {brute}")
    })?;
    let y = |e: &[usize]| Subset::from_elements(7, e.iter().copied()).unwrap();
    let cases: [(&[usize], u32, &[u32]); 4] = [
        (&[0, 1], 2, &[1]),
        (&[0, 2], 3, &[1, 2]),
        (&[0, 5], 2, &[1, 5]),
        (&[0, 4, 7], 3, &[1, 2, 4, 7]),
    ];
    for (set, h, forbidden) in cases {
        let v = stello_h(y(set)).unwrap();
        ensure(v.h == h && v.forbidden_values() == forbidden, || {
            format!("h({set:?}) = {} with F = {:?}", v.h, v.forbidden_values())
        })?;
    }
    for i in 3..=7 {
        let v = stello_h(y(&[0, i])).unwrap();
        ensure(v.h == 2 && v.forbidden_values() == [1, i as u32], || {
            format!("h({{0,{i}}})")
        })?;
    }
    Ok("colourings proper with 2n−1−⌊(n−1)/2⌋ colours for n≤10; σ_3 = 4; h values match".into())
}

fn criterion_7() -> Result<String, String> {
    for n in 2..=4 {
        let c = pa_colouring(n).map_err(|e| e.to_string())?;
        let want = delta(n).unwrap() as u32;
        ensure(c.colour_count() == want, || {
            format!("n={n}: {} colours", c.colour_count())
        })?;
        ensure(validate(&c, &PermAssoc::new(n).unwrap()).unwrap(), || {
            format!("n={n}: not proper")
        })?;
    }
    let d2 = exact(&graph(&PermAssoc::new(2).unwrap()))?;
    let d3 = exact(&graph(&PermAssoc::new(3).unwrap()))?;
    ensure((d2, d3) == (2, 4), || format!("δ_2={d2}, δ_3={d3}"))?;
    Ok("pa_colouring proper with alpha(n−1)+1 colours for n=2..4; δ_2 = 2, δ_3 = 4".into())
}

fn criterion_8() -> Result<String, String> {
    let instances = packing::small_instances(6, 12).len();
    let bad = greedy_counterexamples(6, 12).map_err(|e| e.to_string())?;
    ensure(bad.is_empty(), || {
        format!("counterexamples: {:?}", &bad[..bad.len().min(5)])
    })?;
    Ok(format!(
        "greedy packing optimal on all {instances} instances"
    ))
}

fn criterion_9() -> Result<String, String> {
    // separation: closed-form rules against the building-set definition
    let mut pairs = 0usize;
    for family in Family::ALL {
        for n in 1..=8 {
            let tag = FamilyTag::new(family, n).unwrap();
            let building = tag.explicit_building_set().unwrap();
            let facets = tag.facets().unwrap();
            for (i, x) in facets.iter().enumerate() {
                let xs = x.to_subset(n).unwrap();
                for y in &facets[i + 1..] {
                    let generic = !is_separated(xs, y.to_subset(n).unwrap(), &building);
                    ensure(tag.conflicts(x, y).unwrap() == generic, || {
                        format!("{tag}: {x} vs {y}")
                    })?;
                    pairs += 1;
                }
            }
        }
    }
    for n in 1..=12 {
        let c = assoc_colouring(n).unwrap();
        ensure(class_cap_check(&c, n), || {
            format!("class caps fail at n={n}")
        })?;
    }
    let table = HarmonicTable::up_to(10_000 / 2 + 2);
    for n in 2..=10_000 {
        let (lo, hi) = alpha_bounds_with(n, &table).unwrap();
        let a = BigRational::from_integer(BigInt::from(alpha(n)));
        ensure(lo <= a && a <= hi, || {
            format!("bounds fail to bracket alpha({n})")
        })?;
    }
    let grid = [100, 178, 316, 562, 1000, 1778, 3162, 5623, 10_000];
    let ratios: Vec<f64> = grid
        .iter()
        .map(|&n| alpha(n) as f64 / (n as f64 * (n as f64).ln()))
        .collect();
    ensure(ratios.iter().all(|r| (0.5..=1.5).contains(r)), || {
        format!("{ratios:?}")
    })?;
    ensure(
        ratios
            .windows(2)
            .all(|w| (w[1] - 1.0).abs() < (w[0] - 1.0).abs()),
        || format!("ratio does not approach 1: {ratios:?}"),
    )?;
    Ok(format!(
        "{pairs} separation pairs agree; caps hold n≤12; bounds bracket alpha n≤10⁴; alpha/(n ln n) {:.3} → {:.3}",
        ratios[0],
        ratios[ratios.len() - 1]
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 9] = [
        ("associahedron chromatic formula", criterion_1),
        ("cyclohedron bound tables", criterion_2),
        ("7-dimensional cyclohedron colourings", criterion_3),
        ("permutohedron chromatic number", criterion_4),
        ("small cyclohedron chromatic numbers", criterion_5),
        ("stellohedron", criterion_6),
        ("simple permutoassociahedron", criterion_7),
        ("greedy packing optimality", criterion_8),
        ("structural properties", criterion_9),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} ({secs:.1}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} ({secs:.1}s)", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
