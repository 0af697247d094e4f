//! Acceptance criteria, one line each. Runs without the libtest harness so every
//! line is printed; exits non-zero if any criterion fails.

use expander_gadget::cli::{random_graph, random_updates};
use expander_gadget::dynamic::DynamicExpanderState;
use expander_gadget::expander::{build_bipartite_expander, spectral_certificate};
use expander_gadget::gadget;
use expander_gadget::io::{self, EdgeUpdate, Op};
use expander_gadget::measure::{exact_conductance, exact_edge_expansion, spectral_conductance_lower_bound};
use expander_gadget::oracle;
use expander_gadget::ratio::{self, rat, Rational};
use expander_gadget::report::strip_timing;
use expander_gadget::wter::{self, Answer};
use expander_gadget::{GadgetParams, Graph, Role};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("1  conductance soundness (plain gadget)", c1_plain_conductance),
        ("2  robust expansion (tradeoff gadget)", c2_tradeoff_conductance),
        ("3  expander certification", c3_expander_certification),
        ("4  max-cut offset MC(G)+7dN, |V_exp| <= 22 (literal)", c4_max_cut_literal),
        ("4b max-cut offset MC(G)+7dN+e(V,L), twin quotient <= 22", c4_max_cut_corrected),
        ("5  densest preservation", c5_densest),
        ("6  clique attachment", c6_densify),
        ("7  matching / vertex cover offsets, bpm decision", c7_matching),
        ("8  k-clique factor", c8_k_clique),
        ("9  dynamic invariants", c9_dynamic),
        ("10 dynamic trigger exactness", c10_triggers),
        ("11 OMv st-distance", c11_omv),
        ("12 hitting set", c12_hitting_set),
        ("13 determinism", c13_determinism),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let t = Instant::now();
        let o = f();
        if !o.passed {
            failed += 1;
        }
        println!(
            "[{}] criterion {name}: {} ({:.1}s)",
            if o.passed { "PASS" } else { "FAIL" },
            o.detail,
            t.elapsed().as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} criterion line(s) failed");
        std::process::exit(1);
    }
}

fn density_mix(i: usize) -> f64 {
    [0.0, 0.3, 0.7, 1.0][i % 4]
}

fn within(t: Instant, limit: Duration) -> bool {
    t.elapsed() < limit
}

fn c1_plain_conductance() -> Outcome {
    let t = Instant::now();
    let mut bad = Vec::new();
    let mut tightest = f64::INFINITY;
    for seed in 0..30 {
        let g = random_graph(6, None, Some(density_mix(seed as usize)), false, seed).unwrap();
        let x = gadget::build_core_gadget(&g, GadgetParams::plain()).unwrap();
        let claim = (x.cert_phi / 10).min(rat(1, 5));
        let (phi, _) = exact_conductance(&x.graph).unwrap();
        tightest = tightest.min(ratio::to_f64(phi / claim));
        if phi < claim {
            bad.push(seed);
        }
    }
    let fast = within(t, Duration::from_secs(60));
    outcome(bad.is_empty() && fast, format!("30 graphs, failures {bad:?}, min phi/claim {tightest:.2}, <60s {fast}"))
}

fn c2_tradeoff_conductance() -> Outcome {
    let mut bad = Vec::new();
    let mut builds = 0;
    for (i, (eps, delta)) in
        [(rat(1, 4), rat(1, 2)), (rat(1, 4), rat(1, 1)), (rat(1, 2), rat(1, 2)), (rat(1, 2), rat(1, 1))]
            .into_iter()
            .enumerate()
    {
        for j in 0..5u64 {
            let seed = 100 + 10 * i as u64 + j;
            let g = random_graph(6, None, Some(density_mix(j as usize + 1)), false, seed).unwrap();
            let x = gadget::build_core_gadget(&g, GadgetParams::tradeoff(eps, delta)).unwrap();
            let claim = x.cert_phi * eps / (x.alpha * 5);
            let (phi, _) = exact_conductance(&x.graph).unwrap();
            builds += 1;
            if phi < claim || x.conductance_claim != Some(claim) {
                bad.push(seed);
            }
        }
    }
    outcome(bad.is_empty() && builds == 20, format!("{builds} builds, failures {bad:?}"))
}

fn c3_expander_certification() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for n in [8, 12] {
        for d in [3, 4] {
            let x = build_bipartite_expander(n, d).unwrap();
            let (h, _) = exact_edge_expansion(&x.to_graph()).unwrap();
            let spec = spectral_certificate(n, x.matchings(), rat(1, 20));
            // the spectral value bounds h/d from below
            let sound = ratio::to_f64(h) + 1e-9 >= spec.value_float.unwrap() * d as f64;
            let target = h >= rat(d as i64, 20);
            ok &= sound && target;
            notes.push(format!(
                "N={n} d={d} h={} spectral*d={:.3}",
                ratio::fmt(h),
                spec.value_float.unwrap() * d as f64
            ));
        }
    }
    let big = build_bipartite_expander(256, 6).unwrap();
    let spec = spectral_certificate(256, big.matchings(), rat(1, 20));
    let v = spec.value_float.unwrap();
    ok &= v >= 0.05;
    notes.push(format!("N=256 d=6 spectral phi={v:.4}"));
    outcome(ok, notes.join("; "))
}

/// Empty graphs, complete graphs and random graphs on 3..=5 vertices.
fn max_cut_instances() -> Vec<Graph> {
    let mut out =
        vec![Graph::new(3), Graph::new(4), Graph::new(5), Graph::complete(3), Graph::complete(4), Graph::complete(5)];
    let mut seed = 300;
    while out.len() < 30 {
        let n = 3 + (seed as usize % 3);
        out.push(random_graph(n, None, Some(0.2 + 0.15 * (seed % 5) as f64), false, seed).unwrap());
        seed += 1;
    }
    out
}

fn e_vl(x: &expander_gadget::ExpanderizedGraph) -> usize {
    (0..x.n_original).map(|v| x.graph.neighbors(v).filter(|&w| x.labels[w] == Role::L).count()).sum()
}

fn c4_max_cut_literal() -> Outcome {
    let mut mismatches = 0;
    let mut oversized = 0;
    for g in max_cut_instances() {
        let (x, _) = wter::wter_max_cut(&g, rat(1, 1)).unwrap();
        let (d, n_side) = (x.expander_degree() as u64, x.n_side as u64);
        if oracle::max_cut(&x.graph).unwrap() != oracle::max_cut(&g).unwrap() + 7 * d * n_side {
            mismatches += 1;
        }
        if x.graph.vertex_count() > 22 {
            oversized += 1;
        }
    }
    outcome(
        mismatches == 0 && oversized == 0,
        format!("{mismatches}/30 offsets differ from 7dN, {oversized}/30 instances exceed 22 vertices"),
    )
}

fn c4_max_cut_corrected() -> Outcome {
    let mut bad = 0;
    let mut sizes = Vec::new();
    let mut empty4 = None;
    for g in max_cut_instances() {
        let (x, map) = wter::wter_max_cut(&g, rat(1, 1)).unwrap();
        let (d, n_side) = (x.expander_degree() as u64, x.n_side as u64);
        let offset = 7 * d * n_side + e_vl(&x) as u64;
        let exp = oracle::max_cut(&x.graph).unwrap();
        if exp != oracle::max_cut(&g).unwrap() + offset || map.value != rat(offset as i64, 1) {
            bad += 1;
        }
        if g.vertex_count() == 4 && g.edge_count() == 0 {
            empty4 = Some(exp);
        }
        sizes.push(oracle::twin_classes(&x.graph).len());
    }
    let max = *sizes.iter().max().unwrap();
    // empty graph on 4 vertices: N = 4, d = 3, e(V,L) = 12, so 7*3*4 + 12
    let frozen = empty4 == Some(96);
    outcome(
        bad == 0 && max <= 22 && frozen,
        format!("30 instances, {bad} mismatches, quotient sizes <= {max}, empty n=4 -> {empty4:?}"),
    )
}

fn c5_densest() -> Outcome {
    let t = Instant::now();
    let mut bad = Vec::new();
    for i in 0..10u64 {
        let m = 4300 + 70 * i as usize;
        let g = random_graph(100, Some(m), None, false, 500 + i).unwrap();
        let (x, map) = wter::wter_densest(&g).unwrap();
        let a = oracle::densest(&g).unwrap().density;
        let b = oracle::densest(&x.graph).unwrap().density;
        if a != b || map.recover(b) != a {
            bad.push(m);
        }
    }
    let mut cross_bad = 0;
    for seed in 0..20u64 {
        let n = 8 + (seed as usize % 9);
        let g = random_graph(n, None, Some(0.2 + 0.03 * seed as f64), false, 550 + seed).unwrap();
        if oracle::densest(&g).unwrap().density != oracle::densest_brute_force(&g).unwrap() {
            cross_bad += 1;
        }
    }
    let fast = within(t, Duration::from_secs(300));
    outcome(
        bad.is_empty() && cross_bad == 0 && fast,
        format!("10 graphs n=100, mismatches {bad:?}; flow vs brute force on 20 graphs n<=16: {cross_bad} mismatches; <5min {fast}"),
    )
}

fn c6_densify() -> Outcome {
    let mut bad = 0;
    let mut checked = 0;
    for c in 1..=3usize {
        let mut found = 0;
        let mut seed = 600 + 100 * c as u64;
        while found < 10 {
            seed += 1;
            let g = random_graph(7, None, Some(0.15 + 0.05 * (seed % 6) as f64), false, seed).unwrap();
            let rho = oracle::densest(&g).unwrap().density;
            if rho >= rat(c as i64, 1) + rat(1, 2) {
                continue;
            }
            found += 1;
            checked += 1;
            let (gc, map) = wter::wter_densify(&g, c).unwrap();
            let rc = oracle::densest(&gc).unwrap().density;
            let want: Rational = rho / (2 * c as i64 + 1) + c as i64;
            if rc != want || map.recover(rc) != rho {
                bad += 1;
            }
        }
    }
    outcome(bad == 0, format!("{checked} graphs over C in 1..=3, {bad} mismatches"))
}

fn c7_matching() -> Outcome {
    let mut bad = 0;
    for seed in 0..30u64 {
        let n = 3 + (seed as usize % 6);
        let g = random_graph(n, None, Some(0.3 + 0.1 * (seed % 5) as f64), false, 700 + seed).unwrap();
        let (x, map) = wter::wter_matching(&g).unwrap();
        let two_n = 2 * x.n_side;
        if oracle::max_matching(&x.graph).unwrap() != oracle::max_matching(&g).unwrap() + two_n
            || map.value != rat(two_n as i64, 1)
        {
            bad += 1;
        }
        let (x, _) = wter::wter_vertex_cover(&g).unwrap();
        if oracle::min_vertex_cover(&x.graph).unwrap() != oracle::min_vertex_cover(&g).unwrap() + 2 * x.n_side {
            bad += 1;
        }
    }
    let mut bpm_bad = 0;
    let mut positives = 0;
    for seed in 0..30u64 {
        let h = 2 + (seed as usize % 4);
        let g = random_graph(2 * h, None, Some(0.25 + 0.1 * (seed % 6) as f64), true, 750 + seed).unwrap();
        let sides: Vec<bool> = (0..2 * h).map(|v| v < h).collect();
        let want = oracle::bipartite_perfect_matching(&g, &sides).unwrap();
        positives += want as usize;
        let (x, out_sides, _) = wter::wter_bipartite_perfect_matching(&g, Some(&sides)).unwrap();
        let got = x.graph.respects_bipartition(&out_sides)
            && oracle::bipartite_perfect_matching(&x.graph, &out_sides).unwrap();
        if got != want {
            bpm_bad += 1;
        }
    }
    outcome(
        bad == 0 && bpm_bad == 0,
        format!("30 graphs n<=8: {bad} offset mismatches; 30 bipartite instances ({positives} with a perfect matching): {bpm_bad} mismatches"),
    )
}

fn c8_k_clique() -> Outcome {
    let mut bad = 0;
    let mut negatives = 0;
    for i in 0..20u64 {
        let n = 10 + 5 * (i as usize % 5);
        let g = if i % 4 == 3 {
            // bipartite with a perfect matching between the halves: no triangles
            let mut g = random_graph(n - n % 2, None, Some(0.3), true, 800 + i).unwrap();
            let h = g.vertex_count() / 2;
            for v in 0..h {
                if !g.has_edge(v, h + v) {
                    g.insert_edge(v, h + v).unwrap();
                }
            }
            g
        } else {
            let mut g = random_graph(n, None, Some(0.1 + 0.05 * (i % 4) as f64), false, 800 + i).unwrap();
            for v in 1..n {
                if !g.has_edge(v - 1, v) {
                    g.insert_edge(v - 1, v).unwrap();
                }
            }
            g
        };
        for k in [3, 4] {
            let (x, map) = wter::wter_k_clique(&g, k).unwrap();
            let a = oracle::count_k_cliques(&g, k).unwrap();
            let b = oracle::count_k_cliques(&x.graph, k).unwrap();
            negatives += (a == 0) as usize;
            if b != (k as u64 + 1) * a || map.value != rat(k as i64 + 1, 1) || (a > 0) != (b > 0) {
                bad += 1;
            }
        }
    }
    outcome(
        bad == 0 && negatives > 0,
        format!("20 graphs n<=30, k in {{3,4}}: {bad} mismatches, {negatives} negative (graph, k) pairs"),
    )
}

struct DynRun {
    violations: u64,
    checked: u64,
    replay_exact: bool,
    ratio: f64,
    spectral_min: f64,
    samples: usize,
}

fn drive(g0: &Graph, updates: &[EdgeUpdate], sample_every: usize) -> DynRun {
    let mut st = DynamicExpanderState::new(g0).unwrap();
    st.enable_event_checks();
    let mut log: Vec<EdgeUpdate> = st.snapshot_events().iter().map(|e| e.edge_update()).collect();
    let mut spectral_min = f64::INFINITY;
    let mut samples = 0;
    for (i, up) in updates.iter().enumerate() {
        log.extend(st.apply(up).unwrap().iter().map(|e| e.edge_update()));
        if sample_every > 0 && (i + 1) % sample_every == 0 {
            spectral_min = spectral_min.min(spectral_conductance_lower_bound(st.gexp()));
            samples += 1;
        }
    }
    let replayed = io::replay(st.gexp().vertex_count(), &log).unwrap();
    let (_, violations, checked) = st.violations();
    DynRun {
        violations,
        checked,
        replay_exact: io::write_edge_list(&replayed) == io::write_edge_list(st.gexp()),
        ratio: st.amortization_report().ratio,
        spectral_min,
        samples,
    }
}

fn c9_dynamic() -> Outcome {
    let t = Instant::now();
    let g0 = random_graph(200, Some(1000), None, false, 900).unwrap();
    let mixed = drive(&g0, &random_updates(&g0, 10_000, 901).unwrap(), 200);

    // one vertex repeatedly gains and loses all its edges, doubling its degree over and over
    let empty = Graph::new(200);
    let mut adversarial = Vec::new();
    for _ in 0..25 {
        adversarial.extend((1..200).map(|w| EdgeUpdate { op: Op::Insert, u: 0, v: w }));
        adversarial.extend((1..200).map(|w| EdgeUpdate { op: Op::Delete, u: 0, v: w }));
    }
    let adv = drive(&empty, &adversarial, 0);

    let fast = within(t, Duration::from_secs(120));
    let ok = mixed.violations == 0
        && adv.violations == 0
        && mixed.replay_exact
        && adv.replay_exact
        && mixed.ratio <= 40.0
        && adv.ratio <= 40.0
        && mixed.samples == 50
        && mixed.spectral_min > 0.0
        && fast;
    outcome(
        ok,
        format!(
            "mixed: {} events checked, {} violations, replay {}, ratio {:.2}, min spectral bound {:.4} over {} samples; \
             adversarial: {} events checked, {} violations, replay {}, ratio {:.2}; <2min {fast}",
            mixed.checked,
            mixed.violations,
            mixed.replay_exact,
            mixed.ratio,
            mixed.spectral_min,
            mixed.samples,
            adv.checked,
            adv.violations,
            adv.replay_exact,
            adv.ratio
        ),
    )
}

fn c10_triggers() -> Outcome {
    let mut notes = Vec::new();

    // insert: RECOMPUTE exactly when m reaches 2*m_t + n
    let n = 10;
    let g0 = Graph::from_edges(n, &[(0, 1), (2, 3), (4, 5)]).unwrap();
    let mut st = DynamicExpanderState::new(&g0).unwrap();
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !g0.has_edge(u, v)).collect();
    let mut fired_at = Vec::new();
    for &(u, v) in &pairs {
        let (before, mt) = (st.counters().recomputes, st.m_checkpoint());
        st.dyn_insert(u, v).unwrap();
        if st.counters().recomputes > before {
            fired_at.push((st.graph().edge_count(), 2 * mt + n));
        }
    }
    let insert_ok = !fired_at.is_empty() && fired_at.iter().all(|&(m, want)| m == want);
    notes.push(format!("insert recomputes at (m, 2m_t+n) {fired_at:?}"));

    // delete: RECOMPUTE exactly when n <= m <= m_t/2
    let g0 = random_graph(n, Some(40), None, false, 1000).unwrap();
    let mut st = DynamicExpanderState::new(&g0).unwrap();
    let edges: Vec<(usize, usize)> = g0.edges().collect();
    let mut delete_ok = true;
    let mut delete_fired = Vec::new();
    for &(u, v) in &edges {
        let (before, mt) = (st.counters().recomputes, st.m_checkpoint());
        st.dyn_delete(u, v).unwrap();
        let m = st.graph().edge_count();
        let due = n <= m && 2 * m <= mt;
        let fired = st.counters().recomputes > before;
        delete_ok &= due == fired;
        if fired {
            delete_fired.push((m, mt));
        }
    }
    delete_ok &= !delete_fired.is_empty();
    notes.push(format!("delete recomputes at (m, m_t) {delete_fired:?}"));

    // UPDATE exactly when deg_G(v) = 2 deg_L(v)
    let n = 30;
    let dense: Vec<(usize, usize)> = (10..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut st = DynamicExpanderState::new(&Graph::from_edges(n, &dense).unwrap()).unwrap();
    let mut update_ok = true;
    let mut update_fired = Vec::new();
    for w in 1..n {
        let (before, dl) = (st.counters().updates, st.deg_l(0));
        st.dyn_insert(0, w).unwrap();
        let dg = st.graph().degree(0);
        let fired = st.counters().updates > before;
        update_ok &= fired == (dg == 2 * dl);
        if fired {
            update_fired.push((dg, dl));
        }
    }
    update_ok &= update_fired.len() >= 2 && st.counters().recomputes == 0;
    notes.push(format!("UPDATE at (deg_G, deg_L) {update_fired:?}"));

    // BALANCE: a layout one UPDATE away from max L-degree = 2 * min L-degree
    let layout: Vec<Vec<usize>> = vec![
        vec![9, 8, 5, 11],
        vec![7, 2, 6],
        vec![7, 9, 0, 1],
        vec![9, 2, 7, 10],
        vec![9, 5, 0, 1],
        vec![5, 3, 11, 10],
        vec![6, 2, 0],
        vec![2, 10, 1],
        vec![4, 11, 5],
        vec![1, 6, 7],
    ];
    let mut st = DynamicExpanderState::from_layout(&Graph::new(10), rat(1, 1), &layout).unwrap();
    st.enable_event_checks();
    let start_ok = st.check_invariants().is_ok() && st.l_index().max_degree() < 2 * st.l_index().min_degree();
    for w in 1..=8 {
        st.dyn_insert(0, w).unwrap();
    }
    let c = st.counters();
    let triggers = c.balance_triggers.clone();
    let gap = st.l_index().max_degree() - st.l_index().min_degree();
    let balance_ok = start_ok
        && triggers.len() == 1
        && triggers.iter().all(|&(hi, lo)| hi == 2 * lo)
        && c.balances == 1
        && gap <= 1
        && st.violations().1 == 0;
    notes.push(format!("BALANCE triggers (max, min) {triggers:?}, post gap {gap}"));

    outcome(insert_ok && delete_ok && update_ok && balance_ok, notes.join("; "))
}

fn random_bits(k: usize, p: f64, rng: &mut ChaCha8Rng) -> Vec<bool> {
    (0..k).map(|_| rng.gen_bool(p)).collect()
}

fn c11_omv() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1100);
    let m: Vec<Vec<bool>> = (0..20).map(|_| random_bits(20, 0.1, &mut rng)).collect();
    let mut inst = wter::omv_build(&m).unwrap();
    let (mut agree, mut ones) = (0, 0);
    for _ in 0..50 {
        let u = random_bits(20, 0.15, &mut rng);
        let v = random_bits(20, 0.15, &mut rng);
        let (ans, _) = inst.query(&u, &v).unwrap();
        let d = oracle::distance(&inst.graph, inst.s, inst.t).unwrap();
        let prod = inst.product(&u, &v);
        ones += prod as usize;
        let consistent = match ans {
            Answer::Dist3 => d == Some(3),
            Answer::DistGe5 => d.is_none_or(|d| d >= 5),
        };
        if consistent && (ans == Answer::Dist3) == prod {
            agree += 1;
        }
    }

    let m4: Vec<Vec<bool>> = (0..4).map(|_| random_bits(4, 0.4, &mut rng)).collect();
    let mut small = wter::omv_build(&m4).unwrap();
    let mut phi_min = exact_conductance(&small.graph).unwrap().0;
    let mut instances = 1;
    for _ in 0..6 {
        let u = random_bits(4, 0.5, &mut rng);
        let v = random_bits(4, 0.5, &mut rng);
        small.query(&u, &v).unwrap();
        phi_min = phi_min.min(exact_conductance(&small.graph).unwrap().0);
        instances += 1;
    }
    let ok = agree == 50 && phi_min > rat(0, 1);
    outcome(
        ok,
        format!(
            "20x20: {agree}/50 agree ({ones} with uMv = 1); k=4: min exact conductance {} over {instances} instances of {} vertices",
            ratio::fmt(phi_min),
            small.graph.vertex_count()
        ),
    )
}

fn c12_hitting_set() -> Outcome {
    let mut checked = 0;
    let mut bad = 0;
    let mut seed = 1200u64;
    let mut tried = 0;
    while checked < 20 && tried < 2000 {
        seed += 1;
        tried += 1;
        let n = 8 + (seed as usize % 9);
        let eps = [rat(1, 4), rat(1, 3), rat(1, 2)][seed as usize % 3];
        let g = random_graph(n, None, Some(0.3 + 0.05 * (seed % 8) as f64), false, seed).unwrap();
        let Ok(q) = wter::build_hitting_set(&g, eps) else { continue };
        checked += 1;
        let e = ratio::to_f64(eps);
        let threshold = (1.0 / e).ln() / e;
        let fraction_ok = (0..n).filter(|&v| g.degree(v) as f64 > threshold).all(|v| {
            let hits = g.neighbors(v).filter(|w| q.contains(w)).count();
            rat(hits as i64, 1) >= eps * g.degree(v) as i64
        });
        let size_ok = q.len() == ratio::ceil_mul(eps, n);
        let cut_ok = wter::hitting_cut_violation(&g, &q, eps).unwrap().is_none();
        if !(fraction_ok && size_ok && cut_ok) {
            bad += 1;
        }
    }
    outcome(
        checked == 20 && bad == 0,
        format!("{checked} graphs n<=16 with a valid Q ({tried} sampled), {bad} failures"),
    )
}

fn xgadget(dir: &Path, args: &[&str]) -> i32 {
    Command::new(env!("CARGO_BIN_EXE_xgadget"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap()
        .status
        .code()
        .unwrap_or(-1)
}

fn snapshot(dir: &Path) -> Vec<(PathBuf, String)> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            let text = if p.extension().is_some_and(|e| e == "json") { strip_timing(&text) } else { text };
            (p, text)
        })
        .collect()
}

fn c13_determinism() -> Outcome {
    let script: &[&[&str]] = &[
        &["gen", "graph", "--n", "8", "--m", "14", "--seed", "1", "g.txt"],
        &["gen", "graph", "--n", "8", "--p", "0.5", "--bipartite", "--seed", "2", "b.txt"],
        &["gen", "graph", "--n", "100", "--m", "4300", "--seed", "3", "d.txt"],
        &["gen", "updates", "--graph", "g.txt", "--count", "200", "--seed", "4", "u.txt"],
        &["gen", "updates", "--graph", "d.txt", "--count", "50", "--seed", "5", "du.txt"],
        &["gen", "matrix", "--k", "6", "--seed", "6", "M.txt"],
        &["gen", "queries", "--k", "6", "--count", "10", "--seed", "7", "Q.txt"],
        &["expanderize", "--mode", "plain", "g.txt", "xp.txt", "--report", "xp.json"],
        &[
            "expanderize",
            "--mode",
            "tradeoff",
            "--eps",
            "1/2",
            "--delta",
            "1/2",
            "g.txt",
            "xt.txt",
            "--report",
            "xt.json",
        ],
        &["expanderize", "--mode", "bipartite", "b.txt", "xb.txt", "--report", "xb.json"],
        &[
            "dynamize",
            "g.txt",
            "u.txt",
            "--emit",
            "ev.txt",
            "--report",
            "dy.json",
            "--check-every",
            "10",
            "--final",
            "fin.txt",
        ],
        &["wter", "max-cut", "g.txt", "w1.txt", "--map", "w1.map.json", "--report", "w1.json"],
        &["wter", "densest", "d.txt", "w2.txt", "--map", "w2.map.json", "--report", "w2.json"],
        &[
            "wter",
            "densest",
            "d.txt",
            "w2d.txt",
            "--map",
            "w2d.map.json",
            "--dynamic",
            "--updates",
            "du.txt",
            "--emit",
            "w2d.ev.txt",
            "--report",
            "w2d.json",
        ],
        &["wter", "densify", "g.txt", "w3.txt", "--c", "3", "--map", "w3.map.json", "--report", "w3.json"],
        &["wter", "matching", "g.txt", "w4.txt", "--map", "w4.map.json", "--report", "w4.json"],
        &["wter", "vertex-cover", "g.txt", "w5.txt", "--map", "w5.map.json", "--report", "w5.json"],
        &["wter", "bpm", "b.txt", "w6.txt", "--map", "w6.map.json", "--report", "w6.json"],
        &["wter", "k-clique", "g.txt", "w7.txt", "--k", "3", "--map", "w7.map.json", "--report", "w7.json"],
        &["wter", "max-clique", "g.txt", "w8.txt", "--eps", "1/2", "--map", "w8.map.json", "--report", "w8.json"],
        &["wter", "dominating-set", "g.txt", "w9.txt", "--eps", "1/2", "--map", "w9.map.json", "--report", "w9.json"],
        &[
            "omv-gen",
            "M.txt",
            "--queries",
            "Q.txt",
            "--emit",
            "omv.ev.txt",
            "--answers",
            "omv.ans.txt",
            "--report",
            "omv.json",
        ],
        &["verify", "xp.txt", "xp.json", "--report", "ver.json"],
        &["verify", "ev.txt", "dy.json", "--report", "ver2.json"],
    ];
    let base = std::env::temp_dir().join(format!("xgadget-determinism-{}", std::process::id()));
    let mut runs = Vec::new();
    let mut codes = Vec::new();
    for round in 0..2 {
        let dir = base.join(format!("run{round}"));
        std::fs::create_dir_all(&dir).unwrap();
        let mut round_codes = Vec::new();
        for args in script {
            round_codes.push(xgadget(&dir, args));
        }
        // oracle prints to stdout
        let out = Command::new(env!("CARGO_BIN_EXE_xgadget"))
            .args(["oracle", "densest", "g.txt"])
            .current_dir(&dir)
            .output()
            .unwrap();
        std::fs::write(dir.join("oracle.txt"), out.stdout).unwrap();
        codes.push(round_codes);
        runs.push(snapshot(&dir).into_iter().map(|(p, t)| (p.file_name().unwrap().to_owned(), t)).collect::<Vec<_>>());
    }
    let _ = std::fs::remove_dir_all(&base);
    let differing: Vec<String> =
        runs[0].iter().zip(&runs[1]).filter(|(a, b)| a != b).map(|(a, _)| a.0.to_string_lossy().into_owned()).collect();
    let failures: Vec<String> =
        script.iter().zip(&codes[0]).filter(|(_, &c)| c != 0).map(|(a, c)| format!("{} {}={c}", a[0], a[1])).collect();
    let same_count = runs[0].len() == runs[1].len();
    outcome(
        differing.is_empty() && failures.is_empty() && same_count && codes[0] == codes[1],
        format!(
            "{} commands, {} output files, differing {differing:?}, non-zero exits {failures:?}",
            script.len() + 1,
            runs[0].len()
        ),
    )
}
