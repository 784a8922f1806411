use chiplane::geometry::{IntervalSpec, ToleranceConfig};
use chiplane::graphs::*;
use chiplane::solver::{self, check};
use std::time::Instant;

fn main() {
    let d = chiplane::constants::two_ring_d();
    // candidate two-ring parameterizations: phase offsets 0 and half-step
    for (phase_name, phase) in [("0", 0.0), ("pi/14", std::f64::consts::PI / 14.0)] {
        let pts = two_ring_layout(14, 14, 1.0, d, phase);
        let spec = IntervalSpec::from_d(d).unwrap();
        match build_interval_graph(pts, spec, &ToleranceConfig::default(), vec![1; 28]) {
            Ok(g) => {
                let t0 = Instant::now();
                let chi = solver::chromatic_number(&g, 8).unwrap();
                println!("two-ring phase {phase_name}: {} edges, chi = {chi} ({:?})", g.edge_count(), t0.elapsed());
            }
            Err(e) => println!("two-ring phase {phase_name}: {e}"),
        }
    }
    // reference solver timing on paper19 split (22 vertices)
    let g = build_paper19(1.30).unwrap();
    let t0 = Instant::now();
    let chi_ref = check::reference_set_chromatic(&g, 7);
    println!("reference chi(paper19) = {chi_ref:?} in {:?}", t0.elapsed());
    // rim18+bi1 enumeration size at k=4
    let bi = build_rim18().with_demand(0, 2).unwrap();
    let t0 = Instant::now();
    let all4 = solver::enumerate_colorings(&bi, 4).unwrap();
    println!("rim18+bi1 k=4 colorings: {} in {:?}", all4.len(), t0.elapsed());
    let t0 = Instant::now();
    let all3 = solver::enumerate_colorings(&bi, 3).unwrap();
    println!("rim18+bi1 k=3 colorings: {} in {:?}", all3.len(), t0.elapsed());
}
