//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use adnil::affine::{elements_up_to_length, generators_via_affine, minimal_element, normalizer_via_affine};
use adnil::equiv::{left_equivalence_classes, single_moves, verify_all_moves, verify_star_suite};
use adnil::ideals::{ideal_from_generator_vectors, enumerate_ideals, Ideal};
use adnil::orbits::{check_surjectivity, generic_jordan_type};
use adnil::rootsys::{Root, RootSystem};
use adnil::signtypes::check_sign_type_diagram;
use adnil::typea::check_green_diagram;

type Outcome = Result<String, String>;

const BIJECTION_SYSTEMS: [&str; 7] = ["A1", "A2", "A3", "A4", "B2", "B3", "G2"];

/// Ideals over [`BIJECTION_SYSTEMS`]: 2 + 5 + 14 + 42 + 6 + 20 + 8.
const BIJECTION_IDEALS: usize = 97;

fn rs(code: &str) -> Arc<RootSystem> {
    RootSystem::build(code.parse().unwrap()).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn g2_census() -> Outcome {
    let g2 = rs("G2");
    let name = |k: usize| -> Root {
        let v: [&[i64]; 6] = [&[1, 0], &[1, 1], &[2, 1], &[3, 1], &[3, 2], &[0, 1]];
        g2.positive_root(v[k - 1]).unwrap()
    };
    let ideal = |ks: &[usize]| {
        let roots: Vec<Root> = ks.iter().map(|&k| name(k)).collect();
        Ideal::from_roots(&g2, &roots).unwrap()
    };
    let expected = vec![
        vec![Ideal::zero(&g2)],
        vec![ideal(&[5]), ideal(&[4, 5])],
        vec![ideal(&[3, 4, 5])],
        vec![ideal(&[2, 3, 4, 5]), ideal(&[1, 2, 3, 4, 5]), ideal(&[2, 3, 4, 5, 6])],
        vec![Ideal::maximal(&g2)],
    ];
    let classes = left_equivalence_classes(&g2);
    let total: usize = classes.sizes().iter().sum();
    ensure(total == 8, || format!("{total} ideals"))?;
    ensure(classes.blocks() == expected.as_slice(), || format!("blocks {:?}", classes.blocks()))?;
    Ok(format!("8 ideals in 5 blocks of sizes {:?}", classes.sizes()))
}

fn b3_counterexample() -> Outcome {
    let b3 = rs("B3");
    let i = ideal_from_generator_vectors(&b3, &[vec![0, 1, 1], vec![1, 1, 0]]).unwrap();
    let j = ideal_from_generator_vectors(&b3, &[vec![0, 1, 2], vec![1, 1, 0]]).unwrap();
    ensure(i.normalizer_simple_roots().is_empty(), || "I has a normalizing simple root".into())?;
    ensure(single_moves(&i).is_empty(), || "I admits a move".into())?;
    let mut labels = Vec::new();
    for seed in [0, 1] {
        let (pi, pj) = (
            generic_jordan_type(&i, seed, 5).map_err(|e| e.to_string())?,
            generic_jordan_type(&j, seed, 5).map_err(|e| e.to_string())?,
        );
        ensure(pi == pj, || format!("seed {seed}: {pi} vs {pj}"))?;
        labels.push(pi);
    }
    let classes = left_equivalence_classes(&b3);
    ensure(classes.block_of(&i) != classes.block_of(&j), || "I and J share a class".into())?;
    Ok(format!("I, J both have orbit {}; different classes", labels[0]))
}

fn bijection() -> Outcome {
    let mut total = 0;
    for code in BIJECTION_SYSTEMS {
        let s = rs(code);
        for ideal in enumerate_ideals(&s) {
            let w = minimal_element(&ideal).map_err(|e| format!("{code} {ideal}: {e}"))?;
            let layer = w.first_layer_ideal().map_err(|e| e.to_string())?;
            ensure(layer == ideal, || format!("{code}: first layer {layer} != {ideal}"))?;
            ensure(w.is_minimal(), || format!("{code}: {w} not minimal"))?;
            let expected: usize = ideal.powers().iter().map(Ideal::len).sum();
            ensure(w.length() == expected, || format!("{code} {ideal}: |N| = {} != {expected}", w.length()))?;
            total += 1;
        }
    }
    ensure(total == BIJECTION_IDEALS, || format!("{total} ideals"))?;
    Ok(format!("{total} ideals"))
}

fn criterion_cross_checks() -> Outcome {
    let mut total = 0;
    for code in BIJECTION_SYSTEMS {
        let s = rs(code);
        for ideal in enumerate_ideals(&s) {
            let g = generators_via_affine(&ideal).map_err(|e| e.to_string())?;
            ensure(g == ideal.generators(), || format!("{code} {ideal}: generators differ"))?;
            let n = normalizer_via_affine(&ideal).map_err(|e| e.to_string())?;
            ensure(n == ideal.normalizer_simple_roots(), || format!("{code} {ideal}: normalizers differ"))?;
            total += 1;
        }
    }
    ensure(total == BIJECTION_IDEALS, || format!("{total} ideals"))?;
    Ok(format!("{total} ideals"))
}

fn moves_lift() -> Outcome {
    let mut parts = Vec::new();
    for code in ["A2", "A3", "A4"] {
        let summary = verify_all_moves(&rs(code)).map_err(|e| e.to_string())?;
        parts.push(format!("{code}: {} moves over {} ideals", summary.moves, summary.ideals));
    }
    Ok(parts.join("; "))
}

fn star_suite() -> Outcome {
    let mut parts = Vec::new();
    for code in ["A2", "A3"] {
        let s = verify_star_suite(&rs(code), 8).map_err(|e| e.to_string())?;
        parts.push(format!(
            "{code}: {} dominant, {} pairs ({} same ideal, {} one move)",
            s.dominant_elements, s.pairs, s.same_ideal, s.one_move
        ));
    }
    Ok(parts.join("; "))
}

fn sign_type_diagram() -> Outcome {
    let (mut dominant, mut minimal) = (0, 0);
    for code in BIJECTION_SYSTEMS {
        let s = rs(code);
        let elements = if matches!(code, "A1" | "A2" | "A3") {
            elements_up_to_length(&s, 8)
        } else {
            Vec::new()
        };
        let summary = check_sign_type_diagram(&s, &elements).map_err(|e| e.to_string())?;
        dominant += summary.dominant_elements;
        minimal += summary.minimal_elements;
    }
    ensure(minimal == BIJECTION_IDEALS, || format!("{minimal} minimal elements"))?;
    Ok(format!("{dominant} dominant elements, {minimal} minimal elements"))
}

fn green_diagram() -> Outcome {
    let mut parts = Vec::new();
    for n in [3, 4] {
        let s = check_green_diagram(n, 8, 0, 5).map_err(|e| e.to_string())?;
        parts.push(format!("{}: {} minimal, {} dominant", s.system, s.minimal_elements, s.dominant_elements));
    }
    Ok(parts.join("; "))
}

fn surjectivity() -> Outcome {
    let s = check_surjectivity(2..=6, 0, 5).map_err(|e| e.to_string())?;
    // p(2) + … + p(6) = 2 + 3 + 5 + 7 + 11
    ensure(s.partitions == 28, || format!("{} partitions", s.partitions))?;
    Ok(format!("{} partitions of n = 2..6", s.partitions))
}

/// Upward-closed subsets of Δ⁺ found by scanning all subsets.
fn brute_force_ideal_count(s: &RootSystem) -> usize {
    let roots = s.positive_roots();
    let simple = s.simple_roots();
    (0u64..1 << roots.len())
        .filter(|&mask| {
            roots.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).all(|(_, r)| {
                simple.iter().all(|a| {
                    let up: Vec<i64> = r.coeffs().iter().zip(a.coeffs()).map(|(x, y)| x + y).collect();
                    match roots.iter().position(|q| q.coeffs() == up.as_slice()) {
                        Some(k) => mask & (1 << k) != 0,
                        None => true,
                    }
                })
            })
        })
        .count()
}

fn counts() -> Outcome {
    let expected = [("A1", 2), ("A2", 5), ("A3", 14), ("A4", 42), ("B2", 6), ("B3", 20)];
    for (code, n) in expected {
        let s = rs(code);
        let enumerated = enumerate_ideals(&s).len();
        let brute = brute_force_ideal_count(&s);
        ensure(enumerated == n && brute == n, || format!("{code}: enumerated {enumerated}, brute force {brute}, expected {n}"))?;
    }
    Ok("2, 5, 14, 42, 6, 20".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Option<Duration>); 10] = [
        ("G2 census", g2_census, None),
        ("B3 counterexample", b3_counterexample, None),
        ("ideal <-> minimal element bijection", bijection, None),
        ("generator and normalizer criteria", criterion_cross_checks, None),
        ("moves lift to star operations", moves_lift, Some(Duration::from_secs(60))),
        ("star steps on dominant elements", star_suite, Some(Duration::from_secs(120))),
        ("sign type diagram", sign_type_diagram, None),
        ("Green partition diagram", green_diagram, Some(Duration::from_secs(120))),
        ("orbit map surjectivity", surjectivity, None),
        ("ideal counts", counts, None),
    ];
    let mut failed = 0;
    for (k, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(l)) if elapsed > *l => Err(format!("took {elapsed:.1?}, limit {l:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(msg) => println!("PASS {:>2} {name}: {msg} [{elapsed:.2?}]", k + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg} [{elapsed:.2?}]", k + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    } else {
        println!("all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    }
}
