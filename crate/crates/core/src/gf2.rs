//! Gaussian elimination over GF(2) on word-packed bit vectors.

/// Greedy rank computation. Vectors are scanned in order; each one is
/// reduced against the basis collected so far and kept if it survives.
/// Returns the rank together with the indices of the kept vectors, which
/// witness a basis of the span.
pub fn rank_with_witness(vectors: &[Vec<u64>]) -> (usize, Vec<usize>) {
    // (pivot bit, reduced vector)
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut witness = Vec::new();
    for (idx, v) in vectors.iter().enumerate() {
        let mut v = v.clone();
        for (pivot, b) in &basis {
            if get_bit(&v, *pivot) {
                xor_into(&mut v, b);
            }
        }
        if let Some(pivot) = lowest_set_bit(&v) {
            basis.push((pivot, v));
            witness.push(idx);
        }
    }
    (basis.len(), witness)
}

/// True when `v` lies in the span of `basis_vectors`.
pub fn in_span(basis_vectors: &[Vec<u64>], v: &[u64]) -> bool {
    let (rank, _) = rank_with_witness(basis_vectors);
    let mut extended: Vec<Vec<u64>> = basis_vectors.to_vec();
    extended.push(v.to_vec());
    let (rank2, _) = rank_with_witness(&extended);
    rank2 == rank
}

fn get_bit(v: &[u64], bit: usize) -> bool {
    v.get(bit / 64).is_some_and(|w| w >> (bit % 64) & 1 == 1)
}

fn xor_into(v: &mut [u64], other: &[u64]) {
    for (a, b) in v.iter_mut().zip(other) {
        *a ^= b;
    }
}

fn lowest_set_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}
