use essgraph::graph::{binomial, equitable_partition};
use essgraph::indices::all_pairs_distances;
use essgraph::ring::{enumerate_ideals, factorize, first_primes, is_prime};
use essgraph::{
    adjacent, build_graph, is_essential, is_essential_oracle, join_decomposition,
    universal_vertices,
};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn composites(limit: u64) -> impl Iterator<Item = u64> {
    (4..=limit).filter(|&n| !is_prime(n))
}

#[test]
fn squarefree_adjacency_is_coprimality() {
    for n in composites(10_000) {
        let g = build_graph(n).unwrap();
        if !g.ring().is_squarefree() {
            continue;
        }
        let gens = g.generators();
        for i in 0..g.order() {
            for j in 0..g.order() {
                if i != j {
                    assert_eq!(
                        g.adjacency().get(i, j),
                        gcd(gens[i], gens[j]) == 1,
                        "n = {n}"
                    );
                }
            }
        }
    }
}

#[test]
fn essentiality_criterion_matches_definition() {
    for n in composites(10_000) {
        let f = factorize(n).unwrap();
        let mut ideals = enumerate_ideals(&f);
        ideals.push(f.unit_ideal());
        for id in &ideals {
            assert_eq!(
                is_essential(id, &f).unwrap(),
                is_essential_oracle(id, &f).unwrap(),
                "n = {n}, {id:?}"
            );
        }
    }
}

#[test]
fn matrix_agrees_with_pairwise_adjacency() {
    for n in [12u64, 36, 72, 210, 360, 900, 2310] {
        let g = build_graph(n).unwrap();
        let v = g.vertices();
        for i in 0..v.len() {
            for j in 0..v.len() {
                if i != j {
                    assert_eq!(
                        g.adjacency().get(i, j),
                        adjacent(&v[i], &v[j], g.ring()).unwrap()
                    );
                }
            }
        }
    }
}

#[test]
fn structural_invariants_up_to_ten_thousand() {
    for n in composites(10_000) {
        let g = build_graph(n).unwrap();
        let f = g.ring();
        assert!(g.adjacency().is_symmetric_irreflexive());
        assert_eq!(g.degree_sum(), 2 * g.edge_count());
        assert_eq!(g.order(), f.vertex_count());

        let jd = join_decomposition(&g).unwrap();
        assert_eq!(
            jd.clique.len(),
            f.exponents().iter().product::<u32>() as usize - 1
        );
        let universal = universal_vertices(&g);
        assert!(jd.clique.iter().all(|c| universal.contains(c)), "n = {n}");

        let d = all_pairs_distances(&g).unwrap();
        if f.is_squarefree() {
            assert!(d.diameter() <= 3);
            if f.num_primes() >= 3 {
                assert_eq!(d.diameter(), 3, "n = {n}");
                assert_eq!(d.histogram().len(), 4);
                assert!(d.histogram()[1..].iter().all(|&c| c > 0));
            }
        } else {
            assert!(!universal.is_empty(), "n = {n}");
            assert!(d.diameter() <= 2, "n = {n}");
        }
    }
}

#[test]
fn prime_powers_are_complete() {
    for p in [2u64, 3, 5, 7] {
        for m in 2..=6u32 {
            let g = build_graph(p.pow(m)).unwrap();
            assert_eq!(universal_vertices(&g).len(), g.order());
            assert_eq!(g.edge_count(), (g.order() * (g.order() - 1)) / 2);
        }
    }
}

#[test]
fn two_prime_remainder_is_complete_bipartite() {
    for m1 in 1..=4u32 {
        for m2 in 1..=4u32 {
            let g = build_graph(2u64.pow(m1) * 3u64.pow(m2)).unwrap();
            let jd = join_decomposition(&g).unwrap();
            let h = g.adjacency().induced(&jd.remainder);
            assert_eq!(h.order(), (m1 + m2) as usize);
            assert_eq!(h.edge_count(), (m1 * m2) as usize);
            // bipartite sides are the multiples of 2^{m1} and of 3^{m2}
            let gens = g.generators();
            for (x, &i) in jd.remainder.iter().enumerate() {
                for (y, &j) in jd.remainder.iter().enumerate().skip(x + 1) {
                    let same_side = gens[i].is_multiple_of(2u64.pow(m1))
                        == gens[j].is_multiple_of(2u64.pow(m1));
                    assert_eq!(h.get(x, y), !same_side);
                }
            }
        }
    }
}

#[test]
fn squarefree_equitable_partition_counts() {
    for k in 2..=6usize {
        let n: u64 = first_primes(k).iter().product();
        let g = build_graph(n).unwrap();
        let p = equitable_partition(&g).unwrap();
        let q = p.quotient(g.adjacency()).unwrap();
        for t in 1..k {
            assert_eq!(p.blocks[t - 1].len() as u64, binomial(k as u64, t as u64));
            for s in 1..k {
                assert_eq!(
                    q[t - 1][s - 1] as u64,
                    binomial((k - t) as u64, s as u64),
                    "k={k} t={t} s={s}"
                );
            }
        }
    }
}
