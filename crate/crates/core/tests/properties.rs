mod common;

use common::*;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::Rng;
use stovar::io::{parse_matrix_str, AnyMatrix, DomainChoice, Format};
use stovar::*;

const TOL: Tolerance = Tolerance::DEFAULT;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| q(n, d))
}

fn rational_matrix(max_dim: usize) -> impl Strategy<Value = Matrix<Rational>> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(m, n)| {
        proptest::collection::vec(small_rational(), m * n).prop_map(move |data| Matrix::new(m, n, data).unwrap())
    })
}

/// Cofactor-expansion determinant, independent of the elimination code.
fn cofactor_det(m: &Matrix<Rational>) -> Rational {
    let n = m.rows();
    if n == 1 {
        return m.get(0, 0).clone();
    }
    (0..n).fold(q(0, 1), |acc, j| {
        let minor = Matrix::from_fn(n - 1, n - 1, |i, k| m.get(i + 1, if k < j { k } else { k + 1 }).clone()).unwrap();
        let term = m.get(0, j).clone() * cofactor_det(&minor);
        if j % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

/// Fixed vector with entry sum 1 by Cramer's rule on `(M - I)` with its
/// first row replaced by ones.
fn cramer_fixed_vector(m: &Matrix<Rational>) -> Option<Vector<Rational>> {
    let n = m.rows();
    let shifted = m.shift_diagonal(&q(1, 1)).unwrap();
    let system = Matrix::from_fn(n, n, |i, j| if i == 0 { q(1, 1) } else { shifted.get(i, j).clone() }).unwrap();
    let det = cofactor_det(&system);
    if det.is_zero() {
        return None;
    }
    let entries = (0..n)
        .map(|c| {
            let replaced = Matrix::from_fn(n, n, |i, j| {
                if j == c {
                    if i == 0 { q(1, 1) } else { q(0, 1) }
                } else {
                    system.get(i, j).clone()
                }
            })
            .unwrap();
            cofactor_det(&replaced) / det.clone()
        })
        .collect();
    Some(Vector::new(entries).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn contraction_inequality_exact(a in rational_matrix(6), seed in any::<u64>()) {
        let x = sum_zero_vector(&mut rng(seed), a.cols());
        let lhs = l1_norm(&a.mul_vector(&x).unwrap());
        prop_assert!(lhs <= variation(&a).value * l1_norm(&x));
    }

    #[test]
    fn contraction_inequality_float(a in rational_matrix(6), seed in any::<u64>()) {
        let af = to_float(&a);
        let x: Vec<f64> = {
            let mut r = rng(seed);
            (0..a.cols()).map(|_| r.gen_range(-5.0..5.0)).collect()
        };
        let mean = x.iter().sum::<f64>() / x.len() as f64;
        let x = Vector::new(x.into_iter().map(|v| v - mean).collect()).unwrap();
        let lhs = l1_norm(&af.mul_vector(&x).unwrap());
        let rhs = variation(&af).value * l1_norm(&x);
        prop_assert!(lhs <= rhs || lhs.approx_eq(&rhs, TOL), "{lhs} > {rhs}");
    }

    #[test]
    fn variation_report_is_a_maximal_lexicographic_pair(a in rational_matrix(6)) {
        let r = variation(&a);
        let n = a.cols();
        if n == 1 {
            prop_assert_eq!(r.pair(), (0, 0));
            prop_assert!(r.value.is_zero());
        } else {
            prop_assert!(r.arg_j < r.arg_k);
            let best = stovar::variation::column_distance(&a, r.arg_j, r.arg_k);
            prop_assert_eq!(&best / q(2, 1), r.value.clone());
            for j in 0..n {
                for k in j + 1..n {
                    let d = stovar::variation::column_distance(&a, j, k);
                    prop_assert!(d <= best);
                    if d == best {
                        prop_assert!((j, k) >= (r.arg_j, r.arg_k));
                    }
                }
            }
        }
    }

    #[test]
    fn float_variation_tracks_exact(a in rational_matrix(6)) {
        let exact = variation(&a).value.to_f64();
        let float = variation(&to_float(&a)).value;
        prop_assert!(float.approx_eq(&exact, TOL));
    }

    #[test]
    fn row_variation_is_matrix_variation_of_the_row(z in proptest::collection::vec(small_rational(), 1..8)) {
        let z = RowVector::new(z).unwrap();
        prop_assert_eq!(row_variation(&z), variation(&z.to_matrix()).value);
    }

    #[test]
    fn pseudo_norm_laws(a in rational_matrix(5), c in small_rational(), seed in any::<u64>()) {
        let b = matrix(&mut rng(seed), a.rows(), a.cols());
        prop_assert_eq!(variation(&a.scale(&c)).value, c.abs() * variation(&a).value);
        prop_assert!(variation(&a.add(&b).unwrap()).value <= variation(&a).value + variation(&b).value);
    }

    #[test]
    fn submultiplicative_for_typed_right_factor(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (m, k) = dims(&mut r, 5);
        let n = r.gen_range(1..=5);
        let a = matrix(&mut r, m, k);
        let t = rational(&mut r);
        let b = typed_matrix(&mut r, k, n, &t);
        let ab = a.matmul(&b).unwrap();
        prop_assert!(variation(&ab).value <= variation(&a).value * variation(&b).value);
    }

    #[test]
    fn type_is_multiplicative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (m, k) = dims(&mut r, 5);
        let n = r.gen_range(1..=5);
        let (ta, tb) = (rational(&mut r), rational(&mut r));
        let ab = typed_matrix(&mut r, m, k, &ta).matmul(&typed_matrix(&mut r, k, n, &tb)).unwrap();
        let t = type_of(&ab, TOL);
        prop_assert!(t.has_type);
        prop_assert_eq!(t.type_value, ta * tb);
    }

    #[test]
    fn type_is_an_eigenvalue(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(1..=6);
        let t = rational(&mut r);
        let m = typed_matrix(&mut r, n, n, &t);
        prop_assert_eq!(type_eigenvalue_certificate(&m, TOL).unwrap(), t.clone());
        prop_assert!(cofactor_det(&m.shift_diagonal(&t).unwrap()).is_zero());
        prop_assert!(type_eigenvalue_certificate(&to_float(&m), TOL).unwrap().approx_eq(&t.to_f64(), TOL));
    }

    #[test]
    fn sign_patterns_multiply_like_supports(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (m, k) = dims(&mut r, 5);
        let n = r.gen_range(1..=5);
        let a = nonneg_typed(&mut r, m, k, &q(1, 1), 0.5);
        let b = nonneg_typed(&mut r, k, n, &q(2, 1), 0.5);
        let lhs = sign_pattern(&a.matmul(&b).unwrap(), TOL).unwrap();
        let rhs = pattern_product(&sign_pattern(&a, TOL).unwrap(), &sign_pattern(&b, TOL).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn nonnegative_variation_bounded_by_type(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (m, n) = dims(&mut r, 6);
        let a_type = q(r.gen_range(1..=7), r.gen_range(1..=4));
        let a = nonneg_typed(&mut r, m, n, &a_type, 0.4);
        prop_assert!(variation(&a).value <= a_type);
        prop_assert!(variation_type_bound_check(&a, TOL).unwrap());
        prop_assert_eq!(strict_variation_test(&a, TOL).unwrap(), variation(&a).value < a_type);
    }

    #[test]
    fn column_maximizer_attains_and_bounds(a in rational_matrix(6), seed in any::<u64>()) {
        prop_assume!(a.cols() >= 2);
        let v = variation(&a).value;
        let x0 = variation_maximizer(&a).unwrap();
        prop_assert_eq!(l1_norm(&a.mul_vector(&x0).unwrap()), v.clone());
        let x = sum_zero_vector(&mut rng(seed), a.cols());
        prop_assume!(!l1_norm(&x).is_zero());
        let unit = x.scale(&(q(1, 1) / l1_norm(&x)));
        prop_assert!(l1_norm(&a.mul_vector(&unit).unwrap()) <= v);
    }

    #[test]
    fn row_maximizer_attains_and_bounds(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = r.gen_range(2..=6);
        let n = r.gen_range(1..=6);
        let t = rational(&mut r);
        let b = typed_matrix(&mut r, m, n, &t);
        let var_b = variation(&b).value;
        prop_assume!(!var_b.is_zero());
        let z0 = row_variation_maximizer(&b, TOL).unwrap();
        prop_assert_eq!(row_variation(&z0), q(1, 1));
        prop_assert_eq!(row_variation(&z0.mul_matrix(&b).unwrap()), var_b.clone());
        prop_assert!(z0.iter().any(|z| z.is_positive()) && z0.iter().any(|z| z.is_negative()));
        // Any row rescaled to variation 1 does no better.
        let z = RowVector::new((0..m).map(|_| rational(&mut r)).collect()).unwrap();
        let rv = row_variation(&z);
        prop_assume!(!rv.is_zero());
        let z = z.scale(&(q(1, 1) / rv));
        prop_assert!(row_variation(&z.mul_matrix(&b).unwrap()) <= var_b);
    }

    #[test]
    fn serialization_is_idempotent(a in rational_matrix(5), exact in any::<bool>(), json in any::<bool>()) {
        let m = if exact { AnyMatrix::Rational(a) } else { AnyMatrix::Float(to_float(&a)) };
        let (format, text) = if json { (Format::Json, m.to_json()) } else { (Format::Csv, m.to_csv()) };
        let back = parse_matrix_str(&text, format, DomainChoice::Auto).unwrap();
        prop_assert_eq!(&back, &m);
        let again = if json { back.to_json() } else { back.to_csv() };
        prop_assert_eq!(again, text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn limit_projection_identities(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(2..=4);
        let m = perturbed_markov(&mut r, n);
        let opts = AnalysisOptions { p_max: 16, ..Default::default() };
        let a = analyze(&m, &opts).unwrap();
        prop_assume!(a.converges());
        let p = a.projection.unwrap();
        prop_assert_eq!(&m.matmul(&p).unwrap(), &p);
        prop_assert_eq!(&p.matmul(&m).unwrap(), &p);
        prop_assert_eq!(&p.matmul(&p).unwrap(), &p);
        let e = a.stationary.unwrap();
        let x = vector(&mut r, n);
        prop_assert_eq!(p.mul_vector(&x).unwrap(), e.scale(&vsum(&x)));
    }

    #[test]
    fn fixed_vector_is_unique(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(1..=4);
        let m = perturbed_markov(&mut r, n);
        prop_assume!(variation(&m).value < q(1, 1));
        let e = stationary_vector(&m, TOL).unwrap();
        prop_assert_eq!(m.mul_vector(&e).unwrap(), e.clone());
        prop_assert_eq!(vsum(&e), q(1, 1));
        prop_assert_eq!(Some(e), cramer_fixed_vector(&m));
    }

    #[test]
    fn powers_stay_inside_decay_envelope(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(2..=5);
        let m = to_float(&perturbed_markov(&mut r, n));
        let a = analyze(&m, &AnalysisOptions { p_max: 16, ..Default::default() }).unwrap();
        prop_assume!(a.converges());
        let e = a.stationary.clone().unwrap();
        let mut power = m.clone();
        for k in 1..=200 {
            if k > 1 {
                power = power.matmul(&m).unwrap();
            }
            let bound = a.decay_bound_at(k).unwrap();
            prop_assert!(variation(&power).value <= bound * (1.0 + 1e-9) + 1e-12, "k = {}", k);
            for j in 0..n {
                let actual = l1_norm(&power.column(j).sub(&e).unwrap());
                let allowed = bound * l1_norm(&Vector::basis(n, j).unwrap().sub(&e).unwrap());
                prop_assert!(actual <= allowed * (1.0 + 1e-9) + 1e-12, "k = {}, column {}", k, j);
            }
        }
    }

    #[test]
    fn iterate_bound_holds_on_standard_basis(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(2..=4);
        let exact = perturbed_markov(&mut r, n);
        let opts = AnalysisOptions { p_max: 16, ..Default::default() };
        let a = analyze(&exact, &opts).unwrap();
        prop_assume!(a.converges());
        let e = a.stationary.unwrap();
        for k in 1..=8 {
            for j in 0..n {
                let b = iterate_error_bound(&exact, k, &Vector::basis(n, j).unwrap(), &e, TOL).unwrap();
                prop_assert!(b.actual <= b.bound, "exact k = {}, j = {}", k, j);
            }
        }
        let m = to_float(&exact);
        let ef = stationary_vector(&m, TOL).unwrap();
        for k in 1..=50 {
            for j in 0..n {
                let b = iterate_error_bound(&m, k, &Vector::basis(n, j).unwrap(), &ef, TOL).unwrap();
                prop_assert!(b.holds(TOL), "float k = {}, j = {}: {:?}", k, j, b);
            }
        }
    }

    #[test]
    fn two_by_two_closed_form_matches_analysis(c in 0.05f64..1.95, a in -2.0f64..2.0) {
        let b = c - a;
        let cls = classify_2x2(a, b, TOL);
        prop_assert_eq!(cls.case, TwoByTwoCase::ConvergesGeneric);
        let analysis = analyze(&two_by_two(&a, &b), &AnalysisOptions::default()).unwrap();
        prop_assert_eq!(analysis.contraction_power, Some(1));
        prop_assert!(analysis.stationary.unwrap().approx_eq(&cls.stationary.unwrap(), TOL));
    }

    #[test]
    fn two_by_two_exact_agreement(a in small_rational(), b in small_rational()) {
        let cls = classify_2x2(a.clone(), b.clone(), TOL);
        prop_assert_eq!(variation(&cls.matrix()).value, cls.variation.clone());
        if cls.case == TwoByTwoCase::ConvergesGeneric {
            let e = stationary_vector(&cls.matrix(), TOL).unwrap();
            prop_assert_eq!(Some(e), cls.stationary);
        }
    }

    #[test]
    fn regular_markov_matrices_converge_to_positive_vectors(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(2..=5);
        let m = markov(&mut r, n, 0.5);
        let regular = first_positive_power(&sign_pattern(&m, TOL).unwrap(), (n - 1) * (n - 1) + 1).unwrap();
        prop_assume!(regular.is_some());
        let a = analyze(&m, &AnalysisOptions::default()).unwrap();
        prop_assert!(a.converges());
        prop_assert!(a.contraction_power.unwrap() <= regular.unwrap());
        prop_assert!(a.stationary.unwrap().iter().all(|x| x.is_positive()));
    }
}
