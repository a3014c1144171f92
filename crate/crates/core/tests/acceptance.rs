//! One line per acceptance criterion, written straight to stdout so it survives output capture.

use std::collections::HashMap;
use std::io::Write;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use shicone::cones::ConeEngine;
use shicone::dag::{check_nonoverlapping, forbidden_count, forbidden_count_unweighted, Dag, Path};
use shicone::det::Matrix;
use shicone::digraph::{build_digraph_a, build_digraph_b, build_digraph_d, ShiDigraph};
use shicone::oracle::{count_antichains, weighted_path_sum};
use shicone::path_count::{ballot_count, corner_poly_a, diag_sum, dp_corner_polys_from, gamma_b, gamma_d, pt};
use shicone::ring::Poly;
use shicone::root_system::{build_root_system, WeylType};
use shicone::weyl::DEFAULT_MAX_GROUP_ORDER;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ty(s: &str) -> WeylType {
    s.parse().unwrap()
}

fn engine(s: &str) -> ConeEngine {
    ConeEngine::new(ty(s), None).unwrap()
}

fn cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("shicone").chain(args.iter().copied());
    let code = shicone::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap() + &String::from_utf8(err).unwrap())
}

fn cli_count(args: &[&str]) -> Result<BigInt, String> {
    let (code, text) = cli(args);
    ensure(code == 0, || format!("{args:?} exited {code}: {text}"))?;
    text.lines()
        .find_map(|l| l.strip_prefix("count: "))
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| format!("no count line in {text}"))
}

fn c1_a2() -> Check {
    let n = cli_count(&["count", "A2", "--word", "1 2"])?;
    ensure(n == BigInt::from(2), || format!("count {n}"))?;
    let e = engine("A2");
    let w = e.group.element_of(&[1, 2]).unwrap();
    let res = e.count_ordered(&w, Some(&[1, 0])).map_err(|e| e.to_string())?;
    let expected = Matrix::from_i64(&[&[1, 0, 1], &[0, 1, 2], &[1, 1, 5]]);
    ensure(res.matrix == expected, || format!("matrix {:?}", res.matrix))?;
    Ok("count 2, matrix [[1,0,1],[0,1,2],[1,1,5]]".into())
}

fn c2_a5() -> Check {
    let n = cli_count(&["count", "A5", "--word", "5 2 4 3 1"])?;
    ensure(n == BigInt::from(38), || format!("count {n}"))?;
    let e = engine("A5");
    let w = e.group.element_of(&[5, 2, 4, 3, 1]).unwrap();
    let m = e.count(&w).map_err(|e| e.to_string())?.matrix;
    let expected = Matrix::from_i64(&[
        &[1, 0, 0, 0, 0, 1],
        &[2, 1, 0, 0, 0, 5],
        &[3, 0, 1, 1, 0, 9],
        &[0, 0, 0, 1, 0, 1],
        &[4, 0, 0, 2, 1, 14],
        &[42, 5, 3, 14, 1, 132],
    ]);
    ensure(m == expected, || format!("matrix {m:?}"))?;
    Ok("count 38, 6x6 matrix matches".into())
}

fn c3_b4() -> Check {
    let n = cli_count(&["count", "B4", "--word", "2 3 4 1"])?;
    ensure(n == BigInt::from(29), || format!("count {n}"))?;
    let sums: Vec<BigInt> = [(1, 2), (0, 1), (4, 5), (3, 6), (1, 6)]
        .iter()
        .map(|&(x, y)| diag_sum(pt(x, y), 4).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let want: Vec<BigInt> = [20, 70, 1, 1, 2].iter().map(|&v| BigInt::from(v)).collect();
    ensure(sums == want, || format!("diagonal sums {sums:?}"))?;
    Ok("count 29, diagonal sums 20 70 1 1 2".into())
}

fn c4_poincare() -> Check {
    let (code, text) = cli(&["poincare", "A2", "--word", "1 2"]);
    ensure(code == 0 && text.contains("poincare: 1 + t\n"), || text.clone())?;
    let e = engine("A2");
    let g = &e.digraph;
    let corner = e.gamma_poly(g.source, g.sink).map_err(|e| e.to_string())?;
    ensure(corner == Poly::from_i64(&[1, 3, 1]), || format!("identity entry {corner}"))?;
    Ok("1 + t; identity entry 1 + 3t + t^2".into())
}

fn c5_catalan() -> Check {
    let cases = [
        ("A1", 2), ("A2", 5), ("A3", 14), ("A4", 42), ("A5", 132),
        ("B2", 6), ("B3", 20), ("B4", 70), ("D4", 50), ("D5", 0), ("G2", 8), ("F4", 105),
    ];
    let mut seen = Vec::new();
    for (s, expect) in cases {
        let sys = build_root_system(ty(s));
        let oracle = count_antichains(&sys, &[]).map_err(|e| e.to_string())?.total;
        // D5 has no hard-coded value; the oracle fixes it.
        let expect = if expect == 0 { oracle } else { expect };
        let product = sys.invariants().map_err(|e| e.to_string())?.catalan;
        let e = engine(s);
        let det = e.count(&e.group.identity()).map_err(|e| e.to_string())?.value;
        ensure(
            oracle == expect && det == BigInt::from(oracle) && product == oracle.into(),
            || format!("{s}: oracle {oracle}, determinant {det}, product {product}, expected {expect}"),
        )?;
        seen.push(format!("{s}={det}"));
    }
    Ok(seen.join(" "))
}

fn sweep(s: &str) -> Result<(usize, BigInt, u64), String> {
    let e = engine(s);
    let results = e.verify_all(DEFAULT_MAX_GROUP_ORDER).map_err(|e| e.to_string())?;
    if let Some(v) = results.iter().find(|v| !v.passed()) {
        return Err(format!("{s} w={:?}: {v:?}", v.word));
    }
    let det_sum: BigInt = results.iter().map(|v| &v.determinant).sum();
    let oracle_sum: u64 = results.iter().map(|v| v.antichains).sum();
    Ok((results.len(), det_sum, oracle_sum))
}

fn c6_sweeps() -> Check {
    let mut seen = Vec::new();
    for (s, order) in [("A2", 6), ("A3", 24), ("A4", 120), ("B2", 8), ("B3", 48), ("D4", 192), ("G2", 12)] {
        let (n, _, _) = sweep(s)?;
        ensure(n == order, || format!("{s}: {n} elements"))?;
        seen.push(format!("{s}:{n}"));
    }
    Ok(seen.join(" "))
}

fn c7_sums() -> Check {
    let mut seen = Vec::new();
    for (s, total) in [("A2", 16), ("A3", 125), ("B2", 25), ("B3", 343), ("D4", 2401), ("G2", 49)] {
        let (_, det_sum, oracle_sum) = sweep(s)?;
        let h_power = build_root_system(ty(s)).invariants().map_err(|e| e.to_string())?.shi_regions;
        ensure(
            det_sum == BigInt::from(total) && oracle_sum == total && h_power == total.into(),
            || format!("{s}: determinant sum {det_sum}, oracle sum {oracle_sum}, (h+1)^rank {h_power}"),
        )?;
        seen.push(format!("{s}={total}"));
    }
    Ok(seen.join(" "))
}

fn c8_f4() -> Check {
    let (n, det_sum, oracle_sum) = sweep("F4")?;
    ensure(n == 1152 && det_sum == BigInt::from(28561) && oracle_sum == 28561, || {
        format!("{n} elements, determinant sum {det_sum}, oracle sum {oracle_sum}")
    })?;
    Ok("1152 elements, sum 28561".into())
}

/// The small grid digraph carrying both overlapping collections.
fn overlap_grid() -> (Dag, impl Fn(i64, i64) -> usize) {
    let coords = [(0, 0), (1, 0), (0, 1), (1, 1), (0, 2), (1, 2), (2, 1), (2, 2)];
    let id = move |x: i64, y: i64| coords.iter().position(|&c| c == (x, y)).unwrap();
    let edges = [
        ((0, 0), (1, 0)), ((1, 0), (1, 1)), ((1, 1), (1, 2)), ((1, 1), (2, 1)), ((2, 1), (2, 2)),
        ((0, 0), (0, 1)), ((0, 1), (1, 1)), ((0, 1), (0, 2)), ((0, 2), (1, 2)), ((1, 2), (2, 2)),
    ];
    let e: Vec<(usize, usize)> = edges.iter().map(|&((a, b), (c, d))| (id(a, b), id(c, d))).collect();
    (Dag::new(coords.len(), &e).unwrap(), id)
}

fn c9_overlaps() -> Check {
    let (dag, id) = overlap_grid();
    let path = |pts: &[(i64, i64)]| Path(pts.iter().map(|&(x, y)| id(x, y)).collect());
    let (s, t) = (id(0, 0), id(2, 2));
    let fixtures = [
        (
            vec![path(&[(0, 0), (1, 0), (1, 1), (1, 2)]), path(&[(0, 0), (1, 0), (1, 1), (1, 2), (2, 2)])],
            3,
            4,
        ),
        (vec![path(&[(0, 0), (1, 0), (1, 1)]), path(&[(1, 0), (1, 1), (1, 2)])], 2, 3),
    ];
    for (k, (paths, det, truth)) in fixtures.iter().enumerate() {
        ensure(check_nonoverlapping(paths).is_err(), || format!("fixture {k} not flagged"))?;
        ensure(forbidden_count_unweighted(&dag, s, t, paths, false).is_err(), || {
            format!("fixture {k} accepted without override")
        })?;
        let got = forbidden_count_unweighted(&dag, s, t, paths, true).map_err(|e| e.to_string())?;
        let real = weighted_path_sum(&dag, s, t, paths, &|_, _| BigInt::from(1)).map_err(|e| e.to_string())?;
        ensure(got == BigInt::from(*det) && real == BigInt::from(*truth), || {
            format!("fixture {k}: determinant {got}, true count {real}")
        })?;
    }
    Ok("determinants 3 and 2 vs true 4 and 3; both rejected".into())
}

fn random_instance(rng: &mut StdRng) -> (Dag, usize, usize, Vec<Path>, HashMap<(usize, usize), i64>) {
    let n = rng.gen_range(2..=12);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(0.4) {
                edges.push((a, b));
            }
        }
    }
    let dag = Dag::new(n, &edges).unwrap();
    let weights = edges.iter().map(|&e| (e, rng.gen_range(1..=5))).collect();
    let mut paths: Vec<Path> = Vec::new();
    let want = rng.gen_range(0..=4);
    for _ in 0..40 {
        if paths.len() == want {
            break;
        }
        let mut v = vec![rng.gen_range(0..n)];
        for _ in 0..rng.gen_range(1..=3) {
            let succ = dag.succ(*v.last().unwrap());
            if succ.is_empty() {
                break;
            }
            v.push(succ[rng.gen_range(0..succ.len())]);
        }
        if v.len() < 2 {
            continue;
        }
        paths.push(Path(v));
        if check_nonoverlapping(&paths).is_err() {
            paths.pop();
        }
    }
    (dag, 0, n - 1, paths, weights)
}

fn c10_weighted() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut nonzero = 0;
    for k in 0..500 {
        let (dag, s, t, paths, weights) = random_instance(&mut rng);
        let weight = |a: usize, b: usize| BigInt::from(weights[&(a, b)]);
        let det = forbidden_count(&dag, s, t, &paths, &weight, false).map_err(|e| format!("instance {k}: {e}"))?;
        let brute = weighted_path_sum(&dag, s, t, &paths, &weight).map_err(|e| e.to_string())?;
        ensure(det == brute, || format!("instance {k}: determinant {det}, enumeration {brute}"))?;
        if brute != BigInt::from(0) {
            nonzero += 1;
        }
    }
    Ok(format!("500 instances agree ({nonzero} with a nonzero sum)"))
}

fn role_vertices(g: &ShiDigraph) -> (Vec<usize>, Vec<usize>) {
    let mut starts: Vec<usize> = g.corners.iter().map(|c| c.tr).chain([g.source]).collect();
    let mut ends: Vec<usize> = g.corners.iter().map(|c| c.bl).chain([g.sink]).collect();
    starts.sort_unstable();
    starts.dedup();
    ends.sort_unstable();
    ends.dedup();
    (starts, ends)
}

fn c11_closed_forms() -> Check {
    let mut pairs = 0;
    for n in 1..=5 {
        let g = build_digraph_a(n);
        let corners = g.corner_triples();
        let (starts, ends) = role_vertices(&g);
        for &a in &starts {
            let counts = g.dag.counts_from(a);
            let polys = dp_corner_polys_from(&g, a, &corners);
            for &b in &ends {
                let (p, q) = (g.vertices[a].into(), g.vertices[b].into());
                ensure(ballot_count(p, q) == counts[b], || format!("A{n} ballot {p:?}->{q:?}"))?;
                ensure(corner_poly_a(p, q) == polys[b], || format!("A{n} corner poly {p:?}->{q:?}"))?;
                pairs += 1;
            }
        }
    }
    for n in 1..=4 {
        let g = build_digraph_b(n);
        let (starts, ends) = role_vertices(&g);
        for &a in &starts {
            let counts = g.dag.counts_from(a);
            for &b in &ends {
                let (p, q) = (g.vertices[a].into(), g.vertices[b].into());
                let v = gamma_b(p, q, n as i64).map_err(|e| e.to_string())?;
                ensure(v == counts[b], || format!("B{n} {p:?}->{q:?}: {v} vs {}", counts[b]))?;
                pairs += 1;
            }
        }
    }
    for n in [4, 5] {
        let g = build_digraph_d(n).unwrap();
        let (starts, ends) = role_vertices(&g);
        for &a in &starts {
            let counts = g.dag.counts_from(a);
            for &b in &ends {
                let (v1, v2) = (g.vertices[a], g.vertices[b]);
                let v = gamma_d(v1, v2, n as i64).map_err(|e| e.to_string())?;
                ensure(v == counts[b], || format!("D{n} {v1:?}->{v2:?}: {v} vs {}", counts[b]))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} vertex pairs agree"))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Check, Duration); 11] = [
        ("A2 worked example", c1_a2, Duration::from_secs(1)),
        ("A5 worked example", c2_a5, Duration::from_secs(1)),
        ("B4 worked example", c3_b4, Duration::from_secs(1)),
        ("A2 Poincare polynomial", c4_poincare, Duration::from_secs(1)),
        ("identity cones give Catalan numbers", c5_catalan, Duration::from_secs(5)),
        ("exhaustive sweeps against both oracles", c6_sweeps, Duration::from_secs(120)),
        ("cone counts sum to (h+1)^rank", c7_sums, Duration::from_secs(120)),
        ("F4 sweep", c8_f4, Duration::from_secs(600)),
        ("overlapping collections", c9_overlaps, Duration::from_secs(1)),
        ("weighted determinant on random DAGs", c10_weighted, Duration::from_secs(30)),
        ("closed forms against digraph DP", c11_closed_forms, Duration::from_secs(60)),
    ];
    let mut stdout = std::io::stdout().lock();
    let mut failed = Vec::new();
    for (k, (name, check, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let (status, detail) = match (&outcome, took <= *budget) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("{d}; over the {budget:?} budget")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        writeln!(stdout, "{status} [{:>2}] {name} ({took:.2?}): {detail}", k + 1).unwrap();
        if status == "FAIL" {
            failed.push(k + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
