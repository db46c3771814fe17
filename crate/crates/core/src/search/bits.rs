//! Bit-packed binary sequences and the lag-profile index used by the
//! meet-in-the-middle step.
//!
//! Bit `i` of a word set means `x_i = -1`.

use std::collections::HashMap;

pub(crate) fn mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// `N_X(j)` of a packed sequence of length `len`, `j < len`.
#[cfg(test)]
pub(crate) fn packed_npaf(bits: u64, len: usize, lag: usize) -> i32 {
    let span = len - lag;
    let disagree = ((bits ^ (bits >> lag)) & mask(span)).count_ones() as i32;
    span as i32 - 2 * disagree
}

pub(crate) fn packed_sum(bits: u64, len: usize) -> i32 {
    len as i32 - 2 * (bits & mask(len)).count_ones() as i32
}

pub(crate) fn unpack(bits: u64, len: usize) -> Vec<i8> {
    (0..len).map(|i| if bits >> i & 1 == 1 { -1 } else { 1 }).collect()
}

/// Lags `1..len` of every binary sequence of length `len`, indexed by
/// profile.
pub(crate) struct ProfileTable {
    /// `profiles[bits]` holds lags `1..len`.
    profiles: Vec<Box<[i8]>>,
    sums: Vec<i32>,
    index: HashMap<Box<[i8]>, Vec<u64>>,
}

impl ProfileTable {
    /// Walks all `2^len` sequences in Gray-code order, updating the lag
    /// profile incrementally on each single-sign flip.
    pub fn build(len: usize) -> Self {
        assert!(len < 32, "profile table length {len} too large");
        let size = 1usize << len;
        let lags = len.saturating_sub(1);
        let mut profiles: Vec<Box<[i8]>> = vec![Box::from(vec![0i8; lags]); size];
        let mut sums = vec![0i32; size];

        let mut x = vec![1i8; len];
        let mut current: Vec<i32> = (1..len).map(|j| (len - j) as i32).collect();
        let mut bits = 0u64;
        for step in 0..size {
            if step > 0 {
                let p = step.trailing_zeros() as usize;
                let v = x[p] as i32;
                for j in 1..len {
                    let mut neighbours = 0;
                    if p >= j {
                        neighbours += x[p - j] as i32;
                    }
                    if p + j < len {
                        neighbours += x[p + j] as i32;
                    }
                    current[j - 1] -= 2 * v * neighbours;
                }
                x[p] = -x[p];
                bits ^= 1 << p;
            }
            profiles[bits as usize] = current.iter().map(|&v| v as i8).collect();
            sums[bits as usize] = packed_sum(bits, len);
        }

        let mut index: HashMap<Box<[i8]>, Vec<u64>> = HashMap::new();
        for (b, p) in profiles.iter().enumerate() {
            index.entry(p.clone()).or_default().push(b as u64);
        }
        Self { profiles, sums, index }
    }

    pub fn size(&self) -> usize {
        self.profiles.len()
    }

    pub fn profile(&self, bits: u64) -> &[i8] {
        &self.profiles[bits as usize]
    }

    pub fn sum(&self, bits: u64) -> i32 {
        self.sums[bits as usize]
    }

    /// All sequences whose lags `1..len` equal `target`, in increasing bit order.
    pub fn lookup(&self, target: &[i8]) -> &[u64] {
        self.index.get(target).map(Vec::as_slice).unwrap_or(&[])
    }
}
