use alphadist::bounds::{
    energy_bounds, poly_rowsum_bound, quotient_interlacing_check, radius_bounds,
    shifted_rowsum_floor, spread_bound, BoundId, Polynomial, Side, Tolerance,
};
use alphadist::closed_forms::{multiplicity_near, subset_eigenvalue};
use alphadist::distance::is_transmission_regular;
use alphadist::graph::is_connected;
use alphadist::linalg::{frobenius_norm_sq, sym_eigenvalues, SymMatrix};
use alphadist::spectrum::{graph_invariants, moment_identities};
use alphadist::{
    all_pairs_distances, alpha_spectrum, build_alpha_matrix, encode_graph6,
    generate_random_connected, parse_graph6, Graph,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const EIG: f64 = 1e-12;
const TOL: Tolerance = Tolerance { abs: 1e-8 };

fn max_extra(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).saturating_sub(n.saturating_sub(1))
}

fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0usize..40, any::<u64>()).prop_map(|(n, extra, seed)| {
        generate_random_connected(n, extra.min(max_extra(n)), seed).unwrap()
    })
}

fn connected_at_least(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n, 0usize..40, any::<u64>()).prop_map(|(n, extra, seed)| {
        generate_random_connected(n, extra.min(max_extra(n)), seed).unwrap()
    })
}

fn any_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n, any::<u64>(), 0.0f64..1.0).prop_map(|(n, seed, p)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        Graph::from_edges(n, edges).unwrap()
    })
}

fn alpha_grid() -> impl Strategy<Value = f64> {
    prop::sample::select(vec![0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99])
}

fn symmetric(max_n: usize) -> impl Strategy<Value = SymMatrix> {
    (1..=max_n, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        SymMatrix::from_upper_fn(n, |_, _| rng.gen_range(-10.0..10.0))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn graph6_round_trip(g in any_graph(1, 62)) {
        let text = encode_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(text.as_bytes()).unwrap(), g);
    }

    #[test]
    fn graph6_round_trip_extended_header(g in any_graph(63, 90)) {
        let text = encode_graph6(&g).unwrap();
        prop_assert!(text.starts_with('~'));
        prop_assert_eq!(parse_graph6(text.as_bytes()).unwrap(), g);
    }

    #[test]
    fn random_connected_graphs_are_connected(n in 1usize..40, extra in 0usize..60, seed in any::<u64>()) {
        let g = generate_random_connected(n, extra.min(max_extra(n)), seed).unwrap();
        prop_assert!(is_connected(&g));
        prop_assert_eq!(g.m(), n - 1 + extra.min(max_extra(n)));
    }

    #[test]
    fn distances_form_a_metric(g in connected(16)) {
        let d = all_pairs_distances(&g).unwrap();
        let n = d.n();
        prop_assert_eq!(d.transmissions().iter().sum::<u64>(), 2 * d.wiener());
        for u in 0..n {
            prop_assert_eq!(d.dist(u, u), 0);
            for v in 0..n {
                prop_assert_eq!(d.dist(u, v), d.dist(v, u));
                prop_assert_eq!(d.dist(u, v) == 1, g.has_edge(u, v));
                for w in 0..n {
                    prop_assert!(d.dist(u, w) <= d.dist(u, v) + d.dist(v, w));
                }
            }
        }
    }

    #[test]
    fn eigenvalue_moments_match_matrix(m in symmetric(10)) {
        let ev = sym_eigenvalues(&m, EIG).unwrap();
        let f2 = frobenius_norm_sq(&m);
        let scale = 1e-9 * (1.0 + f2);
        prop_assert!((ev.iter().sum::<f64>() - m.trace()).abs() <= scale);
        prop_assert!((ev.iter().map(|x| x * x).sum::<f64>() - f2).abs() <= scale);
        prop_assert!(ev.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn spectrum_is_permutation_invariant(g in connected(14), alpha in 0.0f64..=1.0, seed in any::<u64>()) {
        let d = all_pairs_distances(&g).unwrap();
        let m = build_alpha_matrix(&d, alpha).unwrap();
        let mut perm: Vec<usize> = (0..m.n()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let a = sym_eigenvalues(&m, EIG).unwrap();
        let b = sym_eigenvalues(&m.permuted(&perm), EIG).unwrap();
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x - y).abs() <= 1e-9 * (1.0 + x.abs()));
        }
    }

    #[test]
    fn two_block_quotients_interlace(g in connected_at_least(2, 14), alpha in 0.0f64..=1.0, seed in any::<u64>()) {
        let d = all_pairs_distances(&g).unwrap();
        let n = d.n();
        let m = build_alpha_matrix(&d, alpha).unwrap();
        let s = alpha_spectrum(&d, alpha, EIG).unwrap();
        let mut verts: Vec<usize> = (0..n).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        verts.shuffle(&mut rng);
        let cut = rng.gen_range(1..n);
        let part = vec![verts[..cut].to_vec(), verts[cut..].to_vec()];
        let r = quotient_interlacing_check(&m, &s, &part, TOL).unwrap();
        prop_assert!(r.slack >= -1e-8, "margin {}", r.slack);
    }

    #[test]
    fn positive_semidefinite_from_one_half(g in connected(14), k in 5usize..=10) {
        let alpha = k as f64 / 10.0;
        let d = all_pairs_distances(&g).unwrap();
        let s = alpha_spectrum(&d, alpha, EIG).unwrap();
        prop_assert!(s.smallest() >= -1e-9 * (1.0 + s.radius()), "smallest {}", s.smallest());
    }

    #[test]
    fn trace_identities(g in connected(14), alpha in alpha_grid()) {
        let d = all_pairs_distances(&g).unwrap();
        let s = alpha_spectrum(&d, alpha, EIG).unwrap();
        prop_assert!(moment_identities(&d, &s).holds(1e-9));
    }

    #[test]
    fn radius_at_least_average_transmission(g in connected_at_least(2, 14), alpha in alpha_grid()) {
        let d = all_pairs_distances(&g).unwrap();
        let s = alpha_spectrum(&d, alpha, EIG).unwrap();
        let avg = d.avg_tr();
        prop_assert!(s.radius() >= avg - 1e-9);
        let tight = (s.radius() - avg).abs() < 1e-9 * (1.0 + avg);
        prop_assert_eq!(tight, is_transmission_regular(&d));
    }

    #[test]
    fn centered_power_sums(g in connected_at_least(2, 14), alpha in alpha_grid()) {
        let d = all_pairs_distances(&g).unwrap();
        let s = alpha_spectrum(&d, alpha, EIG).unwrap();
        let x: Vec<f64> = s.centered().iter().map(|e| e.abs()).collect();
        let sq: f64 = x.iter().map(|v| v * v).sum();
        for k in 2..=5 {
            let lhs: f64 = x.iter().map(|v| v.powi(k)).sum();
            let rhs = sq.powf(k as f64 / 2.0);
            prop_assert!(lhs <= rhs + 1e-9 * (1.0 + rhs));
        }
    }

    #[test]
    fn largest_centered_value_bounded_by_square_sum(g in connected_at_least(2, 14), alpha in alpha_grid()) {
        let d = all_pairs_distances(&g).unwrap();
        let s = alpha_spectrum(&d, alpha, EIG).unwrap();
        let eta = s.centered();
        let n = eta.len() as f64;
        prop_assert!(eta.iter().sum::<f64>().abs() <= 1e-9 * (1.0 + s.radius() * n));
        let sq: f64 = eta.iter().map(|v| v * v).sum();
        let rhs = ((n - 1.0) / n * sq).sqrt();
        prop_assert!(eta[0] <= rhs + 1e-9 * (1.0 + rhs));
    }

    #[test]
    fn half_energy_for_positive_spectra(g in connected_at_least(2, 14), k in 5usize..=9) {
        let alpha = k as f64 / 10.0;
        let d = all_pairs_distances(&g).unwrap();
        let s = alpha_spectrum(&d, alpha, EIG).unwrap();
        prop_assume!(s.smallest() > 1e-9);
        let n = s.n() as f64;
        let m = s.values().iter().sum::<f64>() / n;
        let lhs: f64 = s.values().iter().map(|x| (x - m).abs()).sum();
        prop_assert!(n / 2.0 * s.radius() - lhs > -1e-9);
        prop_assert!(n / 2.0 * s.radius() - lhs > 0.0);
    }

    #[test]
    fn energy_half_radius_is_strict(g in connected_at_least(2, 14), k in 5usize..=9) {
        let alpha = k as f64 / 10.0;
        let d = all_pairs_distances(&g).unwrap();
        let s = alpha_spectrum(&d, alpha, EIG).unwrap();
        let inv = graph_invariants(&s).unwrap();
        let rs = energy_bounds(&d, &s, &inv, TOL).unwrap();
        let r = rs.iter().find(|r| r.bound_id == BoundId::EnergyHalfRadius).unwrap();
        prop_assert_eq!(r.holds, Some(true));
        if s.smallest() > 1e-9 {
            prop_assert!(r.slack > 1e-12 * (1.0 + r.actual_value));
        }
    }

    #[test]
    fn frobenius_transmission_is_strict(g in connected_at_least(3, 14), alpha in alpha_grid()) {
        let d = all_pairs_distances(&g).unwrap();
        let s = alpha_spectrum(&d, alpha, EIG).unwrap();
        let inv = graph_invariants(&s).unwrap();
        let rs = energy_bounds(&d, &s, &inv, TOL).unwrap();
        let r = rs.iter().find(|r| r.bound_id == BoundId::FrobeniusTransmission).unwrap();
        prop_assert!(r.slack > 1e-12 * (1.0 + r.actual_value), "slack {}", r.slack);
    }

    #[test]
    fn equality_cases_follow_structure(g in connected_at_least(2, 9), k in 5usize..=9) {
        // Half-open grid where the complete-graph energy bound applies.
        let alpha = k as f64 / 10.0;
        let d = all_pairs_distances(&g).unwrap();
        let s = alpha_spectrum(&d, alpha, EIG).unwrap();
        let inv = graph_invariants(&s).unwrap();
        let es = energy_bounds(&d, &s, &inv, TOL).unwrap();
        let e = es.iter().find(|r| r.bound_id == BoundId::EnergyCompleteLower).unwrap();
        prop_assert_eq!(e.is_tight(TOL), g.is_complete());
        let rs = radius_bounds(&d, &s, TOL).unwrap();
        let l = rs.iter().find(|r| r.bound_id == BoundId::RadiusAverageTransmission).unwrap();
        prop_assert_eq!(l.is_tight(TOL), is_transmission_regular(&d));
    }

    #[test]
    fn spread_alternative_form_agrees_at_zero(g in connected_at_least(3, 14)) {
        let d = all_pairs_distances(&g).unwrap();
        let s = alpha_spectrum(&d, 0.0, EIG).unwrap();
        for v in 0..d.n() {
            let r = spread_bound(&d, &s, v, TOL).unwrap();
            prop_assert!((r.details["printed_value"] - r.bound_value).abs() <= 1e-9 * (1.0 + r.bound_value));
            prop_assert_eq!(r.holds, Some(true));
        }
    }

    #[test]
    fn shifted_rowsum_floor_holds(g in connected_at_least(2, 14), k in 5usize..=9) {
        let alpha = k as f64 / 10.0;
        let d = all_pairs_distances(&g).unwrap();
        let s = alpha_spectrum(&d, alpha, EIG).unwrap();
        let p = Polynomial::shifted_square((1.0 - alpha) * (d.min_tr() as f64 - 1.0));
        let rs = poly_rowsum_bound(&d, &s, &p, BoundId::PolyRowSumShifted, TOL).unwrap();
        let lower = rs.iter().find(|r| r.side == Side::Lower).unwrap();
        let floor = shifted_rowsum_floor(&d, alpha);
        prop_assert!(lower.bound_value >= floor - 1e-9 * (1.0 + floor.abs()));
        prop_assert!(rs.iter().all(|r| r.holds == Some(true)));
    }

    #[test]
    fn twin_eigenvalues_appear_in_spectrum(g in connected_at_least(3, 12), alpha in 0.0f64..=1.0) {
        let d = all_pairs_distances(&g).unwrap();
        let s = alpha_spectrum(&d, alpha, EIG).unwrap();
        let n = g.n();
        for u in 0..n {
            for v in u + 1..n {
                if let Ok(e) = subset_eigenvalue(&g, &[u, v], alpha) {
                    prop_assert!(multiplicity_near(s.values(), e.eigenvalue, 1e-7) >= e.min_multiplicity);
                }
            }
        }
    }
}

#[test]
fn twin_classes_in_stars_and_bipartite_graphs() {
    use alphadist::{generate_family, Family};
    for (f, n, subset) in [
        (Family::Star, 7, vec![1, 2, 3, 4, 5, 6]),
        (Family::CompleteBipartite(3, 4), 7, vec![3, 4, 5, 6]),
        (Family::Complete, 5, vec![0, 1, 2, 3]),
    ] {
        let g = generate_family(f, n).unwrap();
        let d = all_pairs_distances(&g).unwrap();
        for alpha in [0.0, 0.25, 0.5, 0.8, 1.0] {
            let s = alpha_spectrum(&d, alpha, EIG).unwrap();
            let e = subset_eigenvalue(&g, &subset, alpha).unwrap();
            assert!(multiplicity_near(s.values(), e.eigenvalue, 1e-7) >= e.min_multiplicity);
        }
    }
}
