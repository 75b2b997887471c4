#![allow(dead_code)]

use rand::Rng;
use toric_core::{ExponentVector, ModelMatrix, SemigroupDegree};

/// The 16 x 16 binary marginal independence model: `[I_8 I_8]` stacked on
/// `I_4 (x) [I_2 I_2]`.
pub fn independence_model() -> ModelMatrix {
    let mut rows = Vec::new();
    for i in 0..8 {
        let mut row = vec![0; 16];
        row[i] = 1;
        row[i + 8] = 1;
        rows.push(row);
    }
    for block in 0..4 {
        for k in 0..2 {
            let mut row = vec![0; 16];
            row[4 * block + k] = 1;
            row[4 * block + k + 2] = 1;
            rows.push(row);
        }
    }
    ModelMatrix::new(rows).unwrap()
}

pub fn model(rows: &[&[i64]]) -> ModelMatrix {
    ModelMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

pub fn ev(v: &[i64]) -> ExponentVector {
    ExponentVector::new(v.to_vec())
}

pub fn deg(v: &[i64]) -> SemigroupDegree {
    SemigroupDegree::new(v.to_vec())
}

/// Monomial from 1-based variable indices, repeated for powers.
pub fn mono(r: usize, vars: &[usize]) -> ExponentVector {
    let mut v = vec![0; r];
    for &i in vars {
        v[i - 1] += 1;
    }
    ExponentVector::new(v)
}

pub fn random_model<R: Rng>(rng: &mut R, d: usize, r: usize, max_entry: i64) -> ModelMatrix {
    loop {
        let rows: Vec<Vec<i64>> =
            (0..d).map(|_| (0..r).map(|_| rng.gen_range(0..=max_entry)).collect()).collect();
        if let Ok(m) = ModelMatrix::new(rows) {
            return m;
        }
    }
}
