use besselw::algebra::rational::{int, rat, to_f64};
use besselw::oracle::{
    eigen_solve, sample_deformation, DEFAULT_POINTS, DEFAULT_X_MAX, DEFAULT_X_MIN,
};
use besselw::{
    isospectral_check, node_count, DeformationSpec, Grid, MorseParam, Rational, SeedSet, Sign,
};

fn param(a: &Rational) -> MorseParam {
    MorseParam::new(a.clone()).unwrap_or_else(|_| MorseParam::with_threshold(a.clone()))
}

fn spec(a: Rational, pairs: &[usize], virtuals: &[usize]) -> DeformationSpec {
    DeformationSpec::new(
        param(&a),
        SeedSet::new(Sign::Minus, pairs.to_vec()).unwrap(),
        SeedSet::new(Sign::Minus, virtuals.to_vec()).unwrap(),
    )
    .unwrap()
}

/// Same spacing as the default grid on a different interval.
fn grid_on(x_min: f64, x_max: f64) -> Grid {
    let h = (DEFAULT_X_MAX - DEFAULT_X_MIN) / DEFAULT_POINTS as f64;
    Grid::new(x_min, x_max, ((x_max - x_min) / h).round() as usize).unwrap()
}

fn morse_levels(spec: &DeformationSpec, grid: &Grid) -> (Vec<f64>, Vec<usize>) {
    let k = spec.surviving_levels().len();
    let v = sample_deformation(spec, grid).unwrap();
    let sol = eigen_solve(&v, grid, k).unwrap();
    let nodes = sol.vectors.iter().map(|v| node_count(v)).collect();
    (sol.values, nodes)
}

/// `(level, |e_h - exact| / |e_{h/2} - exact|)` for every level of the
/// undeformed potential.
fn halving_ratios(a: &Rational, grid: &Grid) -> Vec<(usize, f64)> {
    let s = DeformationSpec::undeformed(param(a));
    let exact: Vec<f64> = s
        .surviving_levels()
        .iter()
        .map(|&n| to_f64(&besselw::qrs_energy(Sign::Minus, n, s.param())))
        .collect();
    let (coarse, _) = morse_levels(&s, grid);
    let (fine, _) = morse_levels(&s, &grid.refined());
    exact
        .iter()
        .enumerate()
        .map(|(n, e)| (n, (coarse[n] - e).abs() / (fine[n] - e).abs()))
        .collect()
}

#[test]
fn error_is_second_order_on_default_domain() {
    let grid = Grid::default_domain(DEFAULT_POINTS);
    let mut off = Vec::new();
    for a in [int(3), rat(9, 2)] {
        for (n, r) in halving_ratios(&a, &grid) {
            println!("a={a} level {n}: error ratio {r:.4}");
            if !(3.8..=4.2).contains(&r) {
                off.push((a.clone(), n, r));
            }
        }
    }
    assert!(off.is_empty(), "ratios outside [3.8, 4.2]: {off:?}");
}

#[test]
fn error_is_second_order_on_wide_domain() {
    // The same spacing with the right wall pushed far enough that the
    // shallowest level is not truncated.
    let grid = grid_on(DEFAULT_X_MIN, 30.0);
    for a in [int(3), rat(9, 2)] {
        for (n, r) in halving_ratios(&a, &grid) {
            assert!((3.8..=4.2).contains(&r), "a={a} level {n}: {r}");
        }
    }
}

#[test]
fn undeformed_nodes_follow_level() {
    let grid = Grid::default_domain(DEFAULT_POINTS);
    for a in [int(3), rat(9, 2)] {
        let s = DeformationSpec::undeformed(param(&a));
        let (_, nodes) = morse_levels(&s, &grid);
        assert_eq!(nodes, (0..nodes.len()).collect::<Vec<_>>(), "a={a}");
    }
}

fn catalog() -> Vec<DeformationSpec> {
    vec![
        spec(int(3), &[], &[]),
        spec(int(3), &[], &[6]),
        spec(int(3), &[], &[7, 8]),
        spec(int(2), &[], &[4]),
        spec(int(2), &[], &[4, 6]),
        spec(rat(3, 2), &[], &[3, 4]),
        spec(rat(9, 2), &[], &[9]),
        spec(rat(9, 2), &[1, 2], &[]),
        spec(rat(9, 2), &[2, 3], &[]),
        spec(rat(9, 2), &[3, 4], &[]),
        spec(rat(13, 2), &[2, 3], &[13]),
        spec(rat(13, 2), &[1, 2, 4, 5], &[]),
        spec(int(6), &[3, 4], &[12]),
    ]
}

#[test]
fn catalog_is_isospectral() {
    let grid = Grid::default_domain(DEFAULT_POINTS);
    let specs = catalog();
    assert!(specs.len() >= 12);
    for s in &specs {
        let r = isospectral_check(s, &grid).unwrap();
        println!("{} max err {:.2e}", r.label, r.max_abs_err);
        assert!(r.pass, "{}: {:?}", r.label, r.diagnostics);
        assert_eq!(r.node_counts, r.numerator_roots, "{}", r.label);
    }
}

#[test]
fn default_domain_growth_is_below_1e_6() {
    let base = Grid::default_domain(DEFAULT_POINTS);
    let grown = grid_on(DEFAULT_X_MIN - 2.0, DEFAULT_X_MAX + 2.0);
    let mut worst = Vec::new();
    for s in catalog() {
        let a = isospectral_check(&s, &base).unwrap();
        let b = isospectral_check(&s, &grown).unwrap();
        for (k, (x, y)) in a.computed.iter().zip(&b.computed).enumerate() {
            let d = (x - y).abs();
            if d >= 1e-6 {
                worst.push(format!("{} level #{k} ({x:.8}): moved {d:.2e}", s.label()));
            }
        }
    }
    assert!(worst.is_empty(), "{}", worst.join("; "));
}

#[test]
fn growth_is_below_1e_6_past_the_tail() {
    // The shallowest Morse levels decay like y^{-1/2}; far enough out the
    // truncation is invisible.
    let base = grid_on(DEFAULT_X_MIN, 30.0);
    let grown = grid_on(DEFAULT_X_MIN - 2.0, 32.0);
    for s in catalog() {
        let a = isospectral_check(&s, &base).unwrap();
        let b = isospectral_check(&s, &grown).unwrap();
        for (x, y) in a.computed.iter().zip(&b.computed) {
            assert!((x - y).abs() < 1e-6, "{}: {x} vs {y}", s.label());
        }
    }
}
