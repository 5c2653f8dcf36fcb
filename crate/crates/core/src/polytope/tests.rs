use super::*;
use crate::fixtures::{self, students};
use crate::model::Comparison;
use crate::rational::{int, parse, ratio};

fn weights(texts: &[&str]) -> Vec<Rational> {
    texts.iter().map(|t| parse(t).unwrap()).collect()
}

fn egalitarian() -> WeightPolytope {
    build_perturbation(&fixtures::egalitarian_weights(), &ratio(3, 20)).unwrap()
}

fn bounds_of(poly: &WeightPolytope) -> Vec<(Rational, Rational)> {
    let lp = poly.linear_program();
    lp.lower.iter().zip(&lp.upper).map(|(l, u)| (l.clone().unwrap(), u.clone().unwrap())).collect()
}

#[test]
fn perturbation_box_bounds() {
    let b = bounds_of(&egalitarian());
    assert!(b.iter().all(|(l, u)| *l == parse("0.2125").unwrap() && *u == parse("0.2875").unwrap()));

    let extreme = build_perturbation(&fixtures::extreme_weights(), &ratio(3, 20)).unwrap();
    let b = bounds_of(&extreme);
    assert_eq!(b[0], (parse("0.34").unwrap(), parse("0.46").unwrap()));
    assert_eq!(b[3], (parse("0.085").unwrap(), parse("0.115").unwrap()));
}

#[test]
fn zero_range_is_the_central_point() {
    let central = fixtures::moderate_weights();
    let poly = build_perturbation(&central, &int(0)).unwrap();
    assert!(!poly.is_empty());
    assert_eq!(poly.enumerate_vertices().unwrap(), std::slice::from_ref(&central));
    let o = poly.optimize(&[int(1), int(2), int(3), int(4)], Sense::Max).unwrap();
    assert_eq!(o.argument, central);
}

#[test]
fn rejects_bad_range() {
    assert!(build_perturbation(&fixtures::egalitarian_weights(), &int(1)).is_err());
    assert!(build_perturbation(&fixtures::egalitarian_weights(), &ratio(-1, 10)).is_err());
}

#[test]
fn optimize_examples() {
    let t = students();
    let d = t.difference(0, 1);
    let poly = egalitarian();
    assert_eq!(poly.optimize(&d, Sense::Min).unwrap().value, parse("-4.375").unwrap());
    assert_eq!(poly.optimize(&d, Sense::Max).unwrap().value, parse("-0.625").unwrap());

    let zero = vec![int(0); 4];
    assert_eq!(poly.optimize(&zero, Sense::Min).unwrap().value, int(0));
    assert_eq!(poly.optimize(&zero, Sense::Max).unwrap().value, int(0));

    let extreme = build_perturbation(&fixtures::extreme_weights(), &ratio(3, 20)).unwrap();
    let d = t.difference(1, 2);
    assert_eq!(extreme.optimize(&d, Sense::Min).unwrap().value, parse("-4.45").unwrap());
    assert_eq!(extreme.optimize(&d, Sense::Max).unwrap().value, parse("2.45").unwrap());
}

#[test]
fn optimum_argument_is_feasible() {
    let poly = egalitarian();
    let o = poly.optimize(&[int(3), int(-1), int(0), int(2)], Sense::Max).unwrap();
    assert!(poly.contains(o.argument.as_slice()));
    assert_eq!(dot(&[int(3), int(-1), int(0), int(2)], o.argument.as_slice()), o.value);
}

#[test]
fn dimension_mismatch_is_an_error() {
    assert!(matches!(
        egalitarian().optimize(&[int(1)], Sense::Min),
        Err(Error::DimensionMismatch { expected: 4, found: 1 })
    ));
}

#[test]
fn egalitarian_vertices() {
    let poly = egalitarian();
    let vs = poly.enumerate_vertices().unwrap();
    assert_eq!(vs.len(), 6);
    let hi = parse("0.2875").unwrap();
    let lo = parse("0.2125").unwrap();
    for v in vs {
        assert_eq!(v.as_slice().iter().filter(|x| **x == hi).count(), 2);
        assert_eq!(v.as_slice().iter().filter(|x| **x == lo).count(), 2);
    }
    assert!(poly.cached_vertices().is_some());
}

#[test]
fn ordinal_regression_examples() {
    let t = students();
    let poly = build_ordinal_regression(&t, &[Comparison::new("S2", "S3"), Comparison::new("S4", "S3")]).unwrap();
    let d = t.difference(0, 1);
    assert_eq!(poly.optimize(&d, Sense::Min).unwrap().value, int(-30));
    assert_eq!(poly.optimize(&d, Sense::Max).unwrap().value, int(10));
    let vs = poly.enumerate_vertices().unwrap();
    assert_eq!(vs.len(), 7);
    assert!(vs.iter().any(|v| v.as_slice() == weights(&["0.4", "0.6", "0", "0"])));
    assert!(vs.iter().any(|v| v.as_slice() == weights(&["1/6", "1/4", "0", "7/12"])));
}

#[test]
fn no_comparisons_give_the_simplex() {
    let poly = build_ordinal_regression(&students(), &[]).unwrap();
    let vs = poly.enumerate_vertices().unwrap();
    assert_eq!(vs.len(), 4);
    let o = poly.optimize(&[int(5), int(9), int(1), int(2)], Sense::Max).unwrap();
    assert_eq!(o.value, int(9));
    assert_eq!(o.argument.as_slice(), weights(&["0", "1", "0", "0"]));
}

#[test]
fn dominated_elicitation_is_empty() {
    let t = PerformanceTable::new(
        fixtures::criteria(),
        vec!["A".into(), "B".into()],
        vec![vec![int(1); 4], vec![int(0); 4]],
    )
    .unwrap();
    let cmp = [Comparison::new("B", "A")];
    let poly = build_ordinal_regression(&t, &cmp).unwrap();
    assert!(poly.is_empty());
    assert!(matches!(poly.optimize(&vec![int(1); 4], Sense::Min), Err(Error::EmptyPolytope)));
    assert!(matches!(poly.enumerate_vertices(), Err(Error::EmptyPolytope)));
    assert!(matches!(sample_uniform(&poly, 10, 1), Err(Error::EmptyPolytope)));
    assert_eq!(conflicting_comparisons(&t, &cmp).unwrap(), cmp);
}

#[test]
fn conflict_is_minimal() {
    let ids = ["A", "B", "C", "D", "E"];
    let rows = [[3, 1, 2, 2], [1, 3, 2, 2], [2, 2, 2, 2], [0, 0, 0, 0], [1, 1, 1, 1]];
    let t = PerformanceTable::new(
        fixtures::criteria(),
        ids.iter().map(|s| s.to_string()).collect(),
        rows.iter().map(|r| r.iter().map(|g| int(*g)).collect()).collect(),
    )
    .unwrap();
    let cmp = [Comparison::new("A", "B"), Comparison::new("D", "E"), Comparison::new("B", "C")];
    assert!(build_ordinal_regression(&t, &cmp).unwrap().is_empty());
    assert_eq!(conflicting_comparisons(&t, &cmp).unwrap(), [Comparison::new("D", "E")]);
    assert!(conflicting_comparisons(&t, &cmp[..1]).unwrap().is_empty());
}

#[test]
fn unknown_alternative_in_comparison() {
    assert!(matches!(
        build_ordinal_regression(&students(), &[Comparison::new("S9", "S1")]),
        Err(Error::UnknownAlternative(_))
    ));
}

#[test]
fn strict_constraints_are_rejected() {
    let c = LinearConstraint::new(vec![int(1), int(0)], Relation::Lt, ratio(1, 2), ConstraintTag::Bound);
    assert!(matches!(WeightPolytope::new(2, vec![c]), Err(Error::InvalidParameter(_))));
}

#[test]
fn enumeration_limit() {
    let poly = WeightPolytope::new(12, Vec::new()).unwrap();
    assert!(matches!(poly.enumerate_vertices(), Err(Error::EnumerationLimit { dimension: 12, limit: 10 })));
    assert_eq!(poly.enumerate_vertices_with_limit(12).unwrap().len(), 12);
}

#[test]
fn witness_of_center_is_uniform() {
    let poly = egalitarian();
    let w = poly.convex_witness(&fixtures::egalitarian_weights()).unwrap();
    assert_eq!(w.coefficients, vec![ratio(1, 6); 6]);
    assert_eq!(w.reconstruct(), fixtures::egalitarian_weights().as_slice());
}

#[test]
fn witness_of_vertex_and_midpoint() {
    let poly = egalitarian();
    let vs = poly.enumerate_vertices().unwrap().to_vec();
    let w = poly.convex_witness(&vs[2]).unwrap();
    for (i, a) in w.coefficients.iter().enumerate() {
        assert_eq!(*a, if i == 2 { int(1) } else { int(0) });
    }
    // Two vertices sharing a coordinate pattern span an edge of the octahedron.
    let (i, j) = (0..vs.len())
        .flat_map(|i| (i + 1..vs.len()).map(move |j| (i, j)))
        .find(|&(i, j)| vs[i].as_slice().iter().zip(vs[j].as_slice()).any(|(x, y)| x == y))
        .unwrap();
    let mid: Vec<Rational> = vs[i].as_slice().iter().zip(vs[j].as_slice()).map(|(x, y)| (x + y) / int(2)).collect();
    let w = poly.convex_witness(&WeightVector::new(mid.clone()).unwrap()).unwrap();
    assert_eq!(w.coefficients[i], ratio(1, 2));
    assert_eq!(w.coefficients[j], ratio(1, 2));
    assert_eq!(w.reconstruct(), mid);
}

#[test]
fn witness_rejects_outside_points() {
    let poly = egalitarian();
    let outside = WeightVector::new(vec![int(1), int(0), int(0), int(0)]).unwrap();
    assert!(matches!(poly.convex_witness(&outside), Err(Error::InfeasiblePoint)));
}

#[test]
fn sampling_basics() {
    let poly = egalitarian();
    assert!(sample_uniform(&poly, 0, 3).unwrap().is_empty());
    let a = sample_uniform(&poly, 500, 42).unwrap();
    let b = sample_uniform(&poly, 500, 42).unwrap();
    assert_eq!(a, b);
    assert_ne!(a, sample_uniform(&poly, 500, 43).unwrap());
    assert_ne!(a, sample_uniform_stream(&poly, 500, 42, 1).unwrap());
    for w in &a {
        assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!(w.iter().all(|x| (0.2125 - 1e-12..=0.2875 + 1e-12).contains(x)));
    }
}

#[test]
fn sampling_rejects_flat_polytopes() {
    let poly = build_perturbation(&fixtures::egalitarian_weights(), &int(0)).unwrap();
    assert!(matches!(sample_uniform(&poly, 10, 0), Err(Error::Degenerate)));
    let tie = LinearConstraint::new(vec![int(1), int(-1), int(0)], Relation::Eq, int(0), ConstraintTag::Bound);
    let poly = WeightPolytope::new(3, vec![tie]).unwrap();
    assert!(matches!(sample_uniform(&poly, 10, 0), Err(Error::Degenerate)));
}

#[test]
fn sample_mean_near_centroid() {
    let samples = sample_uniform(&egalitarian(), 100_000, 2024).unwrap();
    for j in 0..4 {
        let mean = samples.iter().map(|w| w[j]).sum::<f64>() / samples.len() as f64;
        assert!((mean - 0.25).abs() < 0.002, "coordinate {j}: {mean}");
    }
}

#[test]
fn document_serializes_exact_text() {
    let poly = egalitarian();
    poly.enumerate_vertices().unwrap();
    let json = serde_json::to_value(poly.document()).unwrap();
    let constraints = json["constraints"].as_array().unwrap();
    assert_eq!(constraints.len(), 4 + 1 + 8);
    assert_eq!(constraints[5]["rhs"], "0.2125");
    assert_eq!(constraints[5]["relation"], ">=");
    assert_eq!(json["vertices"].as_array().unwrap().len(), 6);
}
