//! Cross-checks of the library against brute-force counts written
//! independently of it.

use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use packsyz_core::characters::{CharacterTables, CycleType};
use packsyz_core::equivariant::{homology_decomposition, EquivariantComplex};
use packsyz_core::plethysm::{
    kostka, sym_sym_multiplicities, wedge_sym_multiplicities, wedge_tensor_multiplicities,
};
use packsyz_core::syzygy::{
    betti_entry, koszul_dimension_oracle, linear_strand_segre, linear_strand_veronese, veronese_newell_mismatches,
    SyzygyQuery, DEFAULT_MAX_ORACLE_ENTRIES,
};
use packsyz_core::{NPartition, PackingComplex, Partition};

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Ways to distribute cycles of the given lengths into rows of the given
/// capacities so that every row is filled exactly.
fn fixed_tabloids(cycles: &[u32], rows: &mut Vec<u32>) -> u64 {
    let Some((&c, rest)) = cycles.split_first() else {
        return u64::from(rows.iter().all(|&r| r == 0));
    };
    let mut total = 0;
    for i in 0..rows.len() {
        if rows[i] >= c {
            rows[i] -= c;
            total += fixed_tabloids(rest, rows);
            rows[i] += c;
        }
    }
    total
}

#[test]
fn permutation_modules_match_kostka_sums() {
    let tables = CharacterTables::new(6).unwrap();
    for n in 1..=6 {
        for mu in Partition::all(n) {
            for rho in Partition::all(n) {
                let brute = fixed_tabloids(rho.parts(), &mut mu.parts().to_vec());
                let via_tables: i64 = Partition::all(n)
                    .iter()
                    .map(|lambda| kostka(lambda, mu.parts()) as i64 * tables.chi(lambda, &rho).unwrap())
                    .sum();
                assert_eq!(brute as i64, via_tables, "mu={mu} rho={rho}");
            }
        }
    }
}

#[test]
fn identity_character_is_hook_dimension() {
    let tables = CharacterTables::new(8).unwrap();
    for n in 0..=8 {
        let id = Partition::new(vec![1; n as usize]).unwrap();
        for lambda in Partition::all(n) {
            assert_eq!(tables.chi(&lambda, &id).unwrap() as u128, lambda.dimension());
        }
    }
}

#[test]
fn pieri_matches_interlacing() {
    for n in 0..=6 {
        for lambda in Partition::all(n) {
            for k in 0..=4 {
                let mut brute: Vec<Partition> = Partition::all(n + k)
                    .into_iter()
                    .filter(|nu| {
                        (0..nu.len().max(lambda.len()))
                            .all(|i| nu.part(i) >= lambda.part(i) && (i == 0 || nu.part(i) <= lambda.part(i - 1)))
                    })
                    .collect();
                let mut got = lambda.pieri_row(k);
                brute.sort();
                got.sort();
                assert_eq!(got, brute, "{lambda} + {k}");
            }
        }
    }
}

fn count_ssyt(shape: &[u32], m: u32) -> u64 {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&l| vec![0; l as usize]).collect();
    fn fill(cells: &[(usize, usize)], grid: &mut Vec<Vec<u32>>, m: u32) -> u64 {
        let Some((&(r, c), rest)) = cells.split_first() else {
            return 1;
        };
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for v in lo_row.max(lo_col)..=m {
            grid[r][c] = v;
            total += fill(rest, grid, m);
        }
        total
    }
    fill(&cells, &mut grid, m)
}

#[test]
fn weyl_dimension_counts_tableaux() {
    for n in 0..=5 {
        for lambda in Partition::all(n) {
            for m in 0..=4 {
                assert_eq!(lambda.weyl_dim(m), u128::from(count_ssyt(lambda.parts(), m)), "{lambda} m={m}");
            }
        }
    }
}

#[test]
fn contents_of_rows_and_conjugates() {
    for n in 0..=8 {
        let row = Partition::new(vec![n]).unwrap();
        assert_eq!(row.content(), i64::from(n) * (i64::from(n) - 1) / 2);
        for delta in Partition::all(n) {
            assert_eq!(delta.conjugate().content(), -delta.content());
        }
    }
}

#[test]
fn chessboard_face_counts() {
    for (a, b) in [(2u64, 2u64), (3, 2), (3, 3), (4, 3), (4, 4)] {
        let cx = PackingComplex::build(&[a as u32, b as u32], &[1, 1]).unwrap();
        for k in -1..=cx.top_dim() {
            let j = (k + 1) as u64;
            let expected = binom(a, j) * binom(b, j) * (1..=j).product::<u64>();
            assert_eq!(cx.count(k) as u64, expected, "({a},{b}) k={k}");
        }
    }
}

#[test]
fn matching_complex_vertices_and_edges() {
    let cx = PackingComplex::build(&[6], &[2]).unwrap();
    assert_eq!(cx.count(0), 15);
    assert_eq!(cx.count(1), 45);
    assert_eq!(cx.count(2), 15);
}

#[test]
fn plethysm_dimension_audits() {
    let tables = CharacterTables::new(4).unwrap();
    for p in 0..=4u32 {
        let m = wedge_tensor_multiplicities(p, 2, &tables).unwrap();
        for (a, b) in [(2u32, 2u32), (2, 3), (3, 3)] {
            let total: u128 = m.iter().map(|(l, &c)| l.weyl_dim(&[a, b]) * u128::from(c)).sum();
            assert_eq!(total, u128::from(binom(u64::from(a * b), u64::from(p))), "p={p} dims=({a},{b})");
        }
    }
    for p in 1..=3u32 {
        for e in 0..=3u32 {
            let m = sym_sym_multiplicities(p, e).unwrap();
            for v in 1..=3u32 {
                let inner = binom(u64::from(v + e - 1), u64::from(e));
                let total: u128 = m.iter().map(|(l, &c)| l.weyl_dim(v) * u128::from(c)).sum();
                assert_eq!(total, u128::from(binom(inner + u64::from(p) - 1, u64::from(p))), "p={p} e={e} v={v}");
            }
        }
        for d in 1..=4u32 {
            let m = wedge_sym_multiplicities(p, d).unwrap();
            for v in 1..=3u32 {
                let inner = binom(u64::from(v + d - 1), u64::from(d));
                let total: u128 = m.iter().map(|(l, &c)| l.weyl_dim(v) * u128::from(c)).sum();
                assert_eq!(total, u128::from(binom(inner, u64::from(p))), "p={p} d={d} v={v}");
            }
        }
    }
}

#[test]
fn newell_identity() {
    for p in 0..=3 {
        for d in 1..=4 {
            assert!(veronese_newell_mismatches(p, d).unwrap().is_empty(), "p={p} d={d}");
        }
    }
}

#[test]
fn veronese_strand_from_homology() {
    for (p, d) in [(1u32, 2u32), (2, 2), (3, 2), (1, 3), (2, 3), (1, 4)] {
        let qy = SyzygyQuery::new(p, 0, vec![d], vec![1]).unwrap();
        assert_eq!(betti_entry(&qy).unwrap(), linear_strand_veronese(p, d).unwrap(), "p={p} d={d}");
    }
}

#[test]
fn segre_strand_three_factors() {
    let tables = CharacterTables::new(5).unwrap();
    for (p, a) in [(1u32, 0u32), (1, 1), (2, 1), (2, 2)] {
        let qy = SyzygyQuery::new(p, 0, vec![1, 1, 1], vec![i64::from(a), 0, 0]).unwrap();
        assert_eq!(betti_entry(&qy).unwrap(), linear_strand_segre(p, a, 3, &tables).unwrap(), "p={p} a={a}");
    }
}

#[test]
fn koszul_oracle_agrees_with_homology() {
    for (p, q, b) in [(1u32, 1u32, [0i64, 0]), (2, 1, [0, 0]), (1, 0, [1, 0]), (2, 0, [2, 0]), (0, 1, [0, 0]), (1, 1, [1, 0])] {
        let qy = SyzygyQuery::new(p, q, vec![1, 1], b.to_vec()).unwrap();
        let dec = betti_entry(&qy).unwrap();
        for dims in [[2u32, 2], [2, 3], [3, 3]] {
            let k = koszul_dimension_oracle(&qy, &dims, DEFAULT_MAX_ORACLE_ENTRIES).unwrap();
            assert_eq!(u128::from(k), dec.weyl_dimension(&dims), "{qy} dims={dims:?}");
        }
    }
    let veronese = SyzygyQuery::new(1, 0, vec![2], vec![1]).unwrap();
    let dec = betti_entry(&veronese).unwrap();
    for v in 2..=3 {
        let k = koszul_dimension_oracle(&veronese, &[v], DEFAULT_MAX_ORACLE_ENTRIES).unwrap();
        assert_eq!(u128::from(k), dec.weyl_dimension(&[v]));
    }
}

#[test]
fn decomposition_dimension_matches_ranks() {
    for (n, d) in [(vec![3u32, 3], vec![1u32, 1]), (vec![4, 3], vec![1, 1]), (vec![5], vec![2]), (vec![4, 4], vec![2, 1])] {
        let tables = CharacterTables::for_sizes(&n).unwrap();
        let mut e = EquivariantComplex::build(&n, &d).unwrap();
        let top = e.complex().top_dim();
        for k in -1..=top {
            let dec = e.homology_decomposition(k, &tables).unwrap();
            let c = e.complex().count(k);
            let expected = c - e.rank_boundary(k) - e.rank_boundary(k + 1);
            assert_eq!(dec.dimension(), expected as u128, "{n:?} {d:?} k={k}");
        }
    }
}

#[test]
fn swap_symmetry() {
    for n in [3u32, 4] {
        for k in 0..=2 {
            let dec = homology_decomposition(&[n, n], &[1, 1], k).unwrap();
            assert_eq!(dec.swapped(0, 1), dec);
        }
    }
    let dec = homology_decomposition(&[4, 4], &[2, 2], 0).unwrap();
    assert_eq!(dec.swapped(0, 1), dec);
}

#[test]
fn vanishing_bound_small_grid() {
    for d in [[1u32, 1], [1, 2]] {
        for n1 in 0..=6u32 {
            for n2 in 0..=6u32 {
                let mut e = EquivariantComplex::build(&[n1, n2], &d).unwrap();
                for p in 0..=3u32 {
                    let holds = [n1, n2].iter().zip(&d).all(|(&n, &di)| n >= p * (di + 1) + di);
                    if holds {
                        assert_eq!(e.homology_dim(p as i32 - 1), 0, "N=({n1},{n2}) d={d:?} p={p}");
                    }
                }
            }
        }
    }
}

#[test]
fn orthogonality_up_to_eight() {
    let tables = CharacterTables::new(8).unwrap();
    for n in 0..=8u32 {
        let parts = Partition::all(n);
        let classes = CycleType::all(&[n]);
        for (i, a) in parts.iter().enumerate() {
            for b in &parts[i..] {
                let mut sum = BigRational::zero();
                for c in &classes {
                    let va = tables.chi(a, &c.components()[0]).unwrap();
                    let vb = tables.chi(b, &c.components()[0]).unwrap();
                    sum += BigRational::new((va * vb).into(), c.centralizer_order());
                }
                let expected = if a == b { BigRational::one() } else { BigRational::zero() };
                assert_eq!(sum, expected, "{a} {b}");
            }
        }
    }
}

#[test]
fn example_decompositions() {
    let cases: [(&[u32], i32, &str); 4] = [
        (&[2, 2], 0, "[(1,1)x(1,1)]"),
        (&[3, 2], 1, "[(1,1,1)x(2)]"),
        (&[3, 3], 1, "[(1,1,1)x(2,1)] + [(2,1)x(1,1,1)]"),
        (&[3, 3], 0, "0"),
    ];
    for (n, k, want) in cases {
        assert_eq!(homology_decomposition(n, &[1, 1], k).unwrap().to_string(), want);
    }
    let np: NPartition = "(2,2,2)x(2,2,2)".parse().unwrap();
    let dec = homology_decomposition(&[6, 6], &[1, 1], 3).unwrap();
    assert_eq!(dec.multiplicity(&np), 1);
    assert_eq!(dec.len(), 1);
    assert_eq!(dec.dimension().to_u64(), Some(25));
}
