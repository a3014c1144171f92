use num_bigint::BigInt;
use proptest::prelude::*;

use shicone::dag::{check_nonoverlapping, forbidden_count, Dag, Path};
use shicone::det::{determinant, Matrix};
use shicone::oracle::weighted_path_sum;
use shicone::ring::Poly;
use shicone::root_system::WeylType;
use shicone::weyl::WeylGroup;

fn square(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-6i64..=6, n), n)
}

fn to_matrix(rows: &[Vec<i64>]) -> Matrix<BigInt> {
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    Matrix::from_i64(&refs)
}

proptest! {
    #[test]
    fn simultaneous_permutation_keeps_determinant(
        rows in (1usize..=6).prop_flat_map(square),
        seed in any::<u64>(),
    ) {
        let n = rows.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let permuted: Vec<Vec<i64>> = perm.iter().map(|&i| perm.iter().map(|&j| rows[i][j]).collect()).collect();
        prop_assert_eq!(determinant(&to_matrix(&rows)).unwrap(), determinant(&to_matrix(&permuted)).unwrap());
    }

    #[test]
    fn row_swap_negates(rows in (2usize..=6).prop_flat_map(square)) {
        let mut swapped = rows.clone();
        swapped.swap(0, 1);
        let d = determinant(&to_matrix(&rows)).unwrap();
        prop_assert_eq!(-d, determinant(&to_matrix(&swapped)).unwrap());
    }

    #[test]
    fn polynomial_determinant_specialises(rows in (1usize..=4).prop_flat_map(square), lin in (1usize..=4).prop_flat_map(square)) {
        let n = rows.len().min(lin.len());
        let poly = Matrix::new((0..n).map(|i| (0..n).map(|j| Poly::from_i64(&[rows[i][j], lin[i][j]])).collect()).collect());
        let at_two: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| rows[i][j] + 2 * lin[i][j]).collect()).collect();
        prop_assert_eq!(determinant(&poly).unwrap().eval(&BigInt::from(2)), determinant(&to_matrix(&at_two)).unwrap());
    }

    #[test]
    fn determinant_matches_enumeration_on_layered_dags(
        edges in prop::collection::vec((0usize..9, 1usize..4, 1i64..=5), 4..24),
        picks in prop::collection::vec((0usize..64, 1usize..=3), 0..=4),
    ) {
        let n = 10;
        let mut list: Vec<(usize, usize)> = Vec::new();
        let mut weights = std::collections::HashMap::new();
        for &(a, step, w) in &edges {
            let b = (a + step).min(n - 1);
            if a < b && !list.contains(&(a, b)) {
                list.push((a, b));
                weights.insert((a, b), w);
            }
        }
        let dag = Dag::new(n, &list).unwrap();
        let mut paths: Vec<Path> = Vec::new();
        for &(start, len) in &picks {
            let mut v = vec![start % n];
            for k in 0..len {
                let succ = dag.succ(*v.last().unwrap());
                if succ.is_empty() {
                    break;
                }
                v.push(succ[(start + k) % succ.len()]);
            }
            if v.len() >= 2 {
                paths.push(Path(v));
                if check_nonoverlapping(&paths).is_err() {
                    paths.pop();
                }
            }
        }
        let weight = |a: usize, b: usize| BigInt::from(weights[&(a, b)]);
        let det = forbidden_count(&dag, 0, n - 1, &paths, &weight, false).unwrap();
        prop_assert_eq!(det, weighted_path_sum(&dag, 0, n - 1, &paths, &weight).unwrap());
    }

    #[test]
    fn inversion_set_size_is_length(word in prop::collection::vec(1usize..=4, 0..12)) {
        let t: WeylType = "B4".parse().unwrap();
        let group = WeylGroup::new(std::sync::Arc::new(shicone::root_system::build_root_system(t)));
        let w = group.element_of(&word).unwrap();
        prop_assert_eq!(w.inversion_set().len(), w.length());
        prop_assert_eq!(w.inverse_inversion_set().len(), w.length());
        prop_assert_eq!(w.reduced_word().len(), w.length());
        prop_assert_eq!(w.inversion_sequence().len(), w.length());
    }
}
