//! The bundled five-student example and its three perspectives.

use crate::model::{Comparison, Criterion, PerformanceTable, Perspective, WeightVector};
use crate::rational::{int, ratio};
use crate::service::dataset;

pub const STUDENTS_CSV: &str = include_str!("../data/students.csv");

pub fn students() -> PerformanceTable {
    dataset::parse_csv(STUDENTS_CSV).expect("bundled dataset is valid")
}

pub fn criteria() -> Vec<Criterion> {
    ["Math", "Phys", "Lit", "Phil"].into_iter().map(Criterion::new).collect()
}

pub fn egalitarian_weights() -> WeightVector {
    WeightVector::new(vec![ratio(1, 4); 4]).unwrap()
}

pub fn extreme_weights() -> WeightVector {
    WeightVector::new(vec![ratio(2, 5), ratio(2, 5), ratio(1, 10), ratio(1, 10)]).unwrap()
}

pub fn moderate_weights() -> WeightVector {
    WeightVector::new(vec![ratio(3, 10), ratio(3, 10), ratio(1, 5), ratio(1, 5)]).unwrap()
}

/// Egalitarian, extreme and moderate perspectives perturbed by 15%.
pub fn perturbation_perspectives() -> Vec<Perspective> {
    let r = ratio(3, 20);
    vec![
        Perspective::perturbation("egalitarian", egalitarian_weights(), r.clone()),
        Perspective::perturbation("extreme", extreme_weights(), r.clone()),
        Perspective::perturbation("moderate", moderate_weights(), r),
    ]
}

/// The decision maker's holistic comparisons, one pair of statements per perspective.
pub fn elicited_perspectives() -> Vec<Perspective> {
    vec![
        Perspective::elicited("egalitarian", vec![Comparison::new("S2", "S3"), Comparison::new("S4", "S3")]),
        Perspective::elicited("extreme", vec![Comparison::new("S3", "S2"), Comparison::new("S3", "S5")]),
        Perspective::elicited("moderate", vec![Comparison::new("S4", "S5"), Comparison::new("S4", "S1")]),
    ]
}

/// Indifference threshold and concordance level used with the example.
pub fn outranking_q() -> crate::rational::Rational {
    int(1)
}

pub fn outranking_k() -> crate::rational::Rational {
    ratio(13, 20)
}
