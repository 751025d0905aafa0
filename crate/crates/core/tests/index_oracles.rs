use essgraph::indices::{
    all_pairs_distances, closed_hyper_wiener, closed_wiener, hyper_wiener, wiener,
    wiener_by_transmission, Rational,
};
use essgraph::ring::{first_primes, is_prime};
use essgraph::{build_graph, equitable_partition};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn closed_forms_equal_bfs_on_covered_n() {
    for n in (4..=10_000u64).filter(|&n| !is_prime(n)) {
        let g = build_graph(n).unwrap();
        let d = all_pairs_distances(&g).unwrap();
        let w = wiener(&d);
        assert_eq!(w, wiener_by_transmission(&d));
        let ww = hyper_wiener(&d);
        assert!(ww >= Rational::from_integer(w as i64));
        assert_eq!(
            ww == Rational::from_integer(w as i64),
            d.diameter() <= 1,
            "n = {n}"
        );
        if let Some(cw) = closed_wiener(g.ring()) {
            assert_eq!(cw, Rational::from_integer(w as i64), "W, n = {n}");
            assert_eq!(closed_hyper_wiener(g.ring()).unwrap(), ww, "WW, n = {n}");
        }
    }
}

/// Distances between V_t and V_s follow the gcd case analysis: within the
/// first k - t blocks the distance is 1 or 2 by coprimality; in the
/// remaining blocks it is 3 exactly when the gcd has s prime factors, where
/// the block is V_{k-t+s}.
#[test]
fn squarefree_distance_case_analysis() {
    for k in 3..=6usize {
        let primes = first_primes(k);
        let n: u64 = primes.iter().product();
        let g = build_graph(n).unwrap();
        let d = all_pairs_distances(&g).unwrap();
        let part = equitable_partition(&g).unwrap();
        let gens = g.generators();
        let omega = |x: u64| primes.iter().filter(|&&p| x.is_multiple_of(p)).count();
        for (ti, block) in part.blocks.iter().enumerate() {
            let t = ti + 1;
            for &x in block {
                for (bi, other) in part.blocks.iter().enumerate() {
                    let b = bi + 1;
                    for &y in other {
                        if x == y {
                            continue;
                        }
                        let g_xy = gcd(gens[x], gens[y]);
                        let expected = if b <= k - t {
                            if g_xy == 1 {
                                1
                            } else {
                                2
                            }
                        } else {
                            let s = b - (k - t);
                            if omega(g_xy) == s {
                                3
                            } else {
                                2
                            }
                        };
                        assert_eq!(d.get(x, y), expected, "k={k} {} {}", gens[x], gens[y]);
                    }
                }
            }
        }
    }
}

#[test]
fn large_families_within_cap() {
    for k in 2..=8usize {
        let n: u64 = first_primes(k).iter().product();
        let g = build_graph(n).unwrap();
        let d = all_pairs_distances(&g).unwrap();
        assert_eq!(
            closed_wiener(g.ring()).unwrap(),
            Rational::from_integer(wiener(&d) as i64)
        );
        assert_eq!(closed_hyper_wiener(g.ring()).unwrap(), hyper_wiener(&d));
    }
    for m in 2..=10u32 {
        for p in [2u64, 3, 5] {
            let g = build_graph(p.pow(m)).unwrap();
            let d = all_pairs_distances(&g).unwrap();
            assert_eq!(
                closed_wiener(g.ring()).unwrap(),
                Rational::from_integer(wiener(&d) as i64)
            );
        }
    }
}
