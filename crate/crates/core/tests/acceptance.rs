//! Acceptance suite: one line per criterion, non-zero exit on any failure.
//!
//! Run with `cargo test -p diam-core --test acceptance`.

use std::process::ExitCode;
use std::time::Instant;

use diam_core::enumerate::{connected_graphs_up_to, graphs_up_to_iso, labeled_graphs};
use diam_core::generators::{c5_plus_vertex, cycle, max_edges_with_diameter, petersen};
use diam_core::metrics::{classify_deletion, cycle_weights, diameter_value, DeletionClass};
use diam_core::oracle::{
    nonmonotonicity_witness, oracle_da, oracle_eda, oracle_mda, oracle_mdi, oracle_meda,
};
use diam_core::reductions::{
    compose_general, extend_path, min_vertex_cover, reduce_vc_meda5_diam3, reduce_vc_meda5_diam4,
    triangle_chain, verify_equivalence, VcInstance,
};
use diam_core::solvers::{
    check_witness, ore_max_edges, solve_da, solve_eda3, solve_mda3, solve_mdi3, solve_meda3,
};
use diam_core::{Dist, Graph, OracleBudget, ProblemKind, ProblemSpec, Solution, Verdict};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn size(s: &Solution) -> Option<usize> {
    (s.verdict == Verdict::Yes).then(|| s.deleted.as_ref().map_or(0, |f| f.len()))
}

fn verified(g: &Graph, spec: &ProblemSpec, s: &Solution, label: &str) -> Result<(), String> {
    if let (Verdict::Yes, Some(f)) = (s.verdict, &s.deleted) {
        let check = check_witness(g, spec, f).map_err(|e| e.to_string())?;
        ensure(check.valid, || format!("{label}: witness {f} rejected: {:?} on {g:?}", check.reason))?;
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    let budget = OracleBudget::default();
    let graphs = connected_graphs_up_to(7);
    let mut checks = 0usize;
    for g in &graphs {
        let e = |what: &str| format!("{what} disagrees on {:?}", g.edges());
        let oracle = oracle_meda(g, 3, &budget).map_err(|x| x.to_string())?.map(|f| f.len());
        let s = solve_meda3(g).map_err(|x| format!("{x} on {:?}", g.edges()))?;
        ensure(size(&s) == oracle, || e("meda3"))?;
        verified(g, &ProblemSpec::new(ProblemKind::Meda, 3), &s, "meda3")?;

        let eda = oracle_eda(g, 3, &budget).map_err(|x| x.to_string())?.is_some();
        let s = solve_eda3(g).map_err(|x| x.to_string())?;
        ensure((s.verdict == Verdict::Yes) == eda, || e("eda3"))?;
        verified(g, &ProblemSpec::new(ProblemKind::Eda, 3), &s, "eda3")?;

        let oracle = oracle_mda(g, 3, &budget).map_err(|x| x.to_string())?.map(|f| f.len());
        let s = solve_mda3(g).map_err(|x| x.to_string())?;
        ensure(size(&s) == oracle, || e("mda3"))?;
        for k in 0..=5 {
            let spec = ProblemSpec::new(ProblemKind::Mda, 3).with_budget(k);
            let s = diam_core::solve(&spec, g).map_err(|x| x.to_string())?;
            let expect = oracle.is_some_and(|m| m <= k);
            ensure((s.verdict == Verdict::Yes) == expect, || e(&format!("mda3 k={k}")))?;
            verified(g, &spec, &s, "mda3")?;
        }

        for x in 0..g.n() {
            for y in x + 1..g.n() {
                let oracle = oracle_mdi(g, x, y, 3, &budget).map_err(|x| x.to_string())?.map(|f| f.len());
                let s = solve_mdi3(g, x, y).map_err(|x| x.to_string())?;
                ensure(size(&s) == oracle, || e(&format!("mdi3 ({x},{y})")))?;
                checks += 1;
            }
        }

        for d in 1..=6 {
            let oracle = oracle_da(g, d).map_err(|x| x.to_string())?.is_some();
            let s = solve_da(g, d).map_err(|x| x.to_string())?;
            ensure((s.verdict == Verdict::Yes) == oracle, || e(&format!("da d={d}")))?;
            verified(g, &ProblemSpec::new(ProblemKind::Da, d), &s, "da")?;
        }
        checks += 3 + 6 + 6;
    }
    Ok(format!("{} connected graphs on <= 7 vertices, {checks} comparisons", graphs.len()))
}

fn criterion_2() -> Outcome {
    let mut edges = 0;
    let mut graphs = 0;
    for g in connected_graphs_up_to(7).iter().filter(|g| diameter_value(g) == 2) {
        graphs += 1;
        for (e, w) in cycle_weights(g).iter() {
            ensure(matches!(w, Dist::Infinite | Dist::Finite(3..=5)), || {
                format!("weight {w} for {e} in {:?}", g.edges())
            })?;
            let class = classify_deletion(g, e).map_err(|x| x.to_string())?;
            let expected = match w {
                Dist::Finite(3) => DeletionClass::TwoOrThree,
                Dist::Finite(4) => DeletionClass::Three,
                Dist::Finite(5) => DeletionClass::AtLeastFour,
                _ => DeletionClass::Disconnects,
            };
            let after = diameter_value(&g.delete_edge(e).map_err(|x| x.to_string())?);
            ensure(class == expected && class.admits(after), || {
                format!("{e} in {:?}: class {class:?}, diameter after {after}", g.edges())
            })?;
            edges += 1;
        }
    }
    Ok(format!("{graphs} diameter-2 graphs, {edges} edges"))
}

fn criterion_3() -> Outcome {
    let mut cells = 0;
    for n in 3..=6 {
        let classes = graphs_up_to_iso(n);
        for d in 2..n {
            let best = classes
                .iter()
                .filter(|g| diameter_value(g) == d)
                .map(|g| g.m())
                .max();
            let formula = ore_max_edges(n, d);
            ensure(best == formula, || format!("n={n} d={d}: brute {best:?}, formula {formula:?}"))?;
            cells += 1;
        }
    }
    for n in 3..=8 {
        for d in 2..n {
            let g = max_edges_with_diameter(n, d);
            ensure(Some(g.m()) == ore_max_edges(n, d) && diameter_value(&g) == d, || {
                format!("extremal graph n={n} d={d} has {} edges, diameter {}", g.m(), diameter_value(&g))
            })?;
        }
    }
    Ok(format!("{cells} brute-force cells (n <= 6), constructions for n <= 8"))
}

fn spanning_tree_diameters(g: &Graph) -> Vec<Dist> {
    // edge subsets of size n - 1 that connect the graph are exactly the spanning trees
    let m = g.m();
    let need = g.n() - 1;
    let mut out = Vec::new();
    for mask in 0u32..1 << m {
        if mask.count_ones() as usize != need {
            continue;
        }
        let t = Graph::from_edge_iter(
            g.n(),
            g.edges().iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e),
        );
        let d = diameter_value(&t);
        if d.is_finite() {
            out.push(d);
        }
    }
    out
}

fn criterion_4() -> Outcome {
    for (name, g) in [("Petersen", petersen()), ("C5", cycle(5))] {
        let eda = solve_eda3(&g).map_err(|x| x.to_string())?;
        let meda = solve_meda3(&g).map_err(|x| x.to_string())?;
        ensure(eda.verdict == Verdict::No && meda.verdict == Verdict::Infeasible, || {
            format!("{name}: eda3 {}, meda3 {}", eda.verdict, meda.verdict)
        })?;
    }
    let g = c5_plus_vertex();
    let eda = solve_eda3(&g).map_err(|x| x.to_string())?;
    let meda = solve_meda3(&g).map_err(|x| x.to_string())?;
    ensure(eda.verdict == Verdict::Yes && meda.min_size == Some(1), || {
        format!("example graph: eda3 {}, meda3 min {:?}", eda.verdict, meda.min_size)
    })?;
    let trees = spanning_tree_diameters(&g);
    ensure(!trees.is_empty() && trees.iter().all(|&d| d != 3), || {
        format!("spanning tree diameters {trees:?}")
    })?;
    Ok(format!("Petersen and C5 rejected; example graph min 1, {} spanning trees none of diameter 3", trees.len()))
}

fn vc_instances() -> Vec<VcInstance> {
    let mut out = Vec::new();
    for n in 2..=3 {
        for gamma in labeled_graphs(n).filter(|g| g.m() > 0) {
            for c in 0..=n {
                out.push(VcInstance::new(gamma.clone(), c));
            }
        }
    }
    out
}

fn criterion_5() -> Outcome {
    let budget = OracleBudget::default();
    let instances = vc_instances();
    let (mut yes, mut no) = (0, 0);
    for inst in &instances {
        let art = reduce_vc_meda5_diam3(inst).map_err(|x| x.to_string())?;
        ensure(diameter_value(&art.graph) == 3, || "diam3 gadget diameter".into())?;
        let report = verify_equivalence(inst, &art, &budget).map_err(|x| x.to_string())?;
        ensure(report.agree, || {
            format!("Γ={:?} c={}: cover {} vs artifact {}", inst.gamma.edges(), inst.c, report.vc_yes, report.artifact_yes)
        })?;
        if report.vc_yes {
            yes += 1;
            let cover = min_vertex_cover(&inst.gamma).map_err(|x| x.to_string())?;
            let f = art.cover_witness(&cover);
            let d = diameter_value(&art.graph.delete_edges(&f).map_err(|x| x.to_string())?);
            ensure(f.len() <= art.k && d == 5, || format!("cover witness gives diameter {d}"))?;
        } else {
            no += 1;
        }
        let art4 = reduce_vc_meda5_diam4(inst).map_err(|x| x.to_string())?;
        ensure(diameter_value(&art4.graph) == 4, || "diam4 gadget diameter".into())?;
    }
    Ok(format!("{} instances ({yes} yes, {no} no) agree; gadget diameters 3 and 4", instances.len()))
}

fn criterion_6() -> Outcome {
    let inst = VcInstance::new(Graph::from_edge_iter(3, [(0, 1), (1, 2)]), 1);
    let base = reduce_vc_meda5_diam4(&inst).map_err(|x| x.to_string())?;
    let mut built = Vec::new();
    for target in 5..=8 {
        built.push(extend_path(&base, target).map_err(|x| x.to_string())?);
    }
    for steps in 1..=3 {
        built.push(triangle_chain(&base, steps).map_err(|x| x.to_string())?);
    }
    for d in 5..=8 {
        for k in 1..=3.min(d - 1) {
            let art = compose_general(d, k, &inst).map_err(|x| x.to_string())?;
            ensure(art.diameter == d && art.target_d == d + k, || format!("compose d={d} k={k}"))?;
            built.push(art);
        }
    }
    for art in &built {
        let found = diameter_value(&art.graph);
        ensure(found == art.diameter, || format!("{}: claimed {}, measured {found}", art.source, art.diameter))?;
        let f = art.cover_witness(&[1]);
        let after = diameter_value(&art.graph.delete_edges(&f).map_err(|x| x.to_string())?);
        ensure(f.len() <= art.k && after == art.target_d, || {
            format!("{}: cover witness gives {after}, asked {}", art.source, art.target_d)
        })?;
    }
    Ok(format!("{} composed artifacts, measured diameters and cover witnesses exact", built.len()))
}

fn criterion_7() -> Outcome {
    let w = nonmonotonicity_witness(7)
        .map_err(|x| x.to_string())?
        .ok_or("no witness on <= 7 vertices")?;
    Ok(format!(
        "{}-vertex graph of diameter {}: deleting {} gives {}, diameter {} needs {} deletions",
        w.graph.n(),
        w.base_diameter,
        w.jump_by_two,
        w.jump_by_two_diameter,
        w.base_diameter + 1,
        w.jump_by_one.len()
    ))
}

fn criterion_8() -> Outcome {
    let seq = OracleBudget::default();
    let par = seq.parallel(true);
    let mut runs = 0;
    for g in connected_graphs_up_to(6).iter().filter(|g| g.m() >= 6) {
        for d in 3..=4 {
            let a = oracle_meda(g, d, &seq).map_err(|x| x.to_string())?;
            let b = oracle_meda(g, d, &par).map_err(|x| x.to_string())?;
            ensure(a == b, || format!("parallel oracle differs on {:?}", g.edges()))?;
            runs += 1;
        }
        for kind in [ProblemKind::Meda, ProblemKind::Mda, ProblemKind::Eda, ProblemKind::Da] {
            let spec = ProblemSpec::new(kind, 3);
            let first = serde_json::to_string(&diam_core::solve(&spec, g).map_err(|x| x.to_string())?)
                .map_err(|x| x.to_string())?;
            let again = serde_json::to_string(&diam_core::solve(&spec, g).map_err(|x| x.to_string())?)
                .map_err(|x| x.to_string())?;
            ensure(first == again, || format!("{kind} output differs between runs"))?;
            runs += 1;
        }
    }
    Ok(format!("{runs} repeated runs byte-identical"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 oracle equivalence", criterion_1),
        ("2 single-deletion classes", criterion_2),
        ("3 extremal edge counts", criterion_3),
        ("4 Moore instances", criterion_4),
        ("5 reduction equivalence", criterion_5),
        ("6 composition diameters", criterion_6),
        ("7 nonmonotonicity witness", criterion_7),
        ("8 determinism", criterion_8),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  criterion {name} ({secs:.1}s): {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name} ({secs:.1}s): {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
