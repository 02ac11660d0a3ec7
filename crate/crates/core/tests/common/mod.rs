#![allow(dead_code)]

use dtcode::{FMatrix, FVector, FieldElement, FieldSpec, ToeplitzGen};

/// All vectors of `F_q^len` in lexicographic order.
pub fn all_vectors(field: FieldSpec, len: usize) -> Vec<FVector> {
    let q = field.q();
    let total = (q as usize).pow(len as u32);
    (0..total)
        .map(|mut idx| {
            let mut v = vec![0u32; len];
            for slot in v.iter_mut().rev() {
                *slot = (idx % q as usize) as u32;
                idx /= q as usize;
            }
            FVector::from_values(field, &v).unwrap()
        })
        .collect()
}

/// Weight distribution of the row space of `g`, by encoding every message.
pub fn naive_distribution(g: &FMatrix) -> Vec<u64> {
    let mut counts = vec![0u64; g.cols() + 1];
    for m in all_vectors(g.field(), g.rows()) {
        counts[m.mul_matrix(g).unwrap().weight()] += 1;
    }
    counts
}

/// Minimum nonzero weight of the row space of `g`.
pub fn naive_min_distance(g: &FMatrix) -> usize {
    let wd = naive_distribution(g);
    (1..wd.len()).find(|&i| wd[i] > 0).unwrap_or(usize::MAX)
}

/// Every generator tuple of block size `n`.
pub fn all_generators(field: FieldSpec, n: usize) -> Vec<ToeplitzGen> {
    all_vectors(field, 2 * n - 1)
        .into_iter()
        .map(|v| ToeplitzGen::from_flat(field, v.entries()).unwrap())
        .collect()
}

/// Plain matrix product check `A Q = Q A^T` spelled out entrywise.
pub fn reversal_identity_holds(a: &FMatrix) -> bool {
    let n = a.rows();
    // (A Q)_{ij} = A_{i, n-1-j}; (Q A^T)_{ij} = A_{j, n-1-i}
    (0..n).all(|i| (0..n).all(|j| a.get(i, n - 1 - j) == a.get(j, n - 1 - i)))
}

pub fn fe(x: u8) -> FieldElement {
    FieldElement(x)
}
