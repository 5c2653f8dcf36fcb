#![allow(dead_code)]

pub mod oracle;
pub mod paper;

use prefseven_core::model::{Comparison, Perspective, WeightVector};
use prefseven_core::rational::parse;

pub fn perturbation_perspectives() -> Vec<Perspective> {
    paper::PERSPECTIVES
        .iter()
        .zip(paper::CENTRAL)
        .map(|(name, w)| Perspective::perturbation(*name, WeightVector::parse(&w).unwrap(), parse(paper::R).unwrap()))
        .collect()
}

pub fn elicited_perspectives() -> Vec<Perspective> {
    paper::PERSPECTIVES
        .iter()
        .zip(paper::ELICITED)
        .map(|(name, pairs)| Perspective::elicited(*name, pairs.iter().map(|(a, b)| Comparison::new(*a, *b)).collect()))
        .collect()
}
