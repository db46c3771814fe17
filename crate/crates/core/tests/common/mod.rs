//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's own correlation or verification code.
#![allow(dead_code)]

use std::collections::BTreeSet;

/// Bit `i` set means `x_i = -1`.
pub fn from_bits(bits: u64, len: usize) -> Vec<i8> {
    (0..len).map(|i| if bits >> i & 1 == 1 { -1 } else { 1 }).collect()
}

pub fn all_binary(len: usize) -> impl Iterator<Item = Vec<i8>> {
    (0..1u64 << len).map(move |b| from_bits(b, len))
}

pub fn plain(x: &[i8]) -> String {
    x.iter()
        .map(|&v| match v {
            1 => '+',
            -1 => '-',
            _ => '0',
        })
        .collect()
}

pub fn quad_plain(a: &[i8], b: &[i8], c: &[i8], d: &[i8]) -> String {
    format!("{};{};{};{}", plain(a), plain(b), plain(c), plain(d))
}

/// Coefficients of `X(z) X(1/z)`; index `len - 1 + k` holds `z^k`.
pub fn laurent_norm(x: &[i8]) -> Vec<i64> {
    if x.is_empty() {
        return vec![0];
    }
    let len = x.len();
    let mut out = vec![0i64; 2 * len - 1];
    for (i, &xi) in x.iter().enumerate() {
        for (j, &xj) in x.iter().enumerate() {
            // x_i z^i * x_j z^-j
            let k = i as i64 - j as i64;
            out[(len as i64 - 1 + k) as usize] += xi as i64 * xj as i64;
        }
    }
    out
}

/// Nonnegative-lag part of the Laurent norm.
pub fn norm_lags(x: &[i8]) -> Vec<i64> {
    let n = laurent_norm(x);
    if x.is_empty() {
        return vec![0];
    }
    n[x.len() - 1..].to_vec()
}

/// `N(A)+N(B)+N(C)+N(D)` as a constant Laurent polynomial, if it is one.
pub fn norm_sum_constant(seqs: [&[i8]; 4]) -> Option<i64> {
    let width = seqs.iter().map(|s| s.len()).max().unwrap_or(0).max(1);
    let mut total = vec![0i64; 2 * width - 1];
    for s in seqs {
        if s.is_empty() {
            continue;
        }
        for (idx, v) in laurent_norm(s).into_iter().enumerate() {
            let k = idx as i64 - (s.len() as i64 - 1);
            total[(width as i64 - 1 + k) as usize] += v;
        }
    }
    let center = width - 1;
    if total.iter().enumerate().all(|(i, &v)| i == center || v == 0) {
        Some(total[center])
    } else {
        None
    }
}

pub fn is_base(a: &[i8], b: &[i8], c: &[i8], d: &[i8]) -> bool {
    norm_sum_constant([a, b, c, d]) == Some(2 * (a.len() + c.len()) as i64)
}

pub fn is_t_sequences(t: [&[i8]; 4]) -> bool {
    let n = t[0].len();
    if t.iter().any(|s| s.len() != n) {
        return false;
    }
    let support = (0..n).all(|i| t.iter().filter(|s| s[i] != 0).count() == 1);
    support && norm_sum_constant(t) == Some(n as i64)
}

pub fn sum(x: &[i8]) -> i64 {
    x.iter().map(|&v| v as i64).sum()
}

/// B from A on positions `1..=n` plus the free last entry.
fn tie(a: &[i8], last: i8, near: bool) -> Vec<i8> {
    let n = a.len() - 1;
    let mut b: Vec<i8> = (0..n).map(|i| if near && i % 2 == 1 { -a[i] } else { a[i] }).collect();
    b.push(last);
    b
}

/// Every NN(s) (near) or NS(s) quadruple, as plaintext.
pub fn brute_force(s: usize, near: bool) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    let cds: Vec<Vec<i8>> = all_binary(s).collect();
    for a in all_binary(s + 1) {
        for last in [1i8, -1] {
            let b = tie(&a, last, near);
            for c in &cds {
                for d in &cds {
                    if is_base(&a, &b, c, d) {
                        out.insert(quad_plain(&a, &b, c, d));
                    }
                }
            }
        }
    }
    out
}

/// Splits `"A;B;C;D"` plaintext into sequences.
pub fn split_plain(text: &str) -> [Vec<i8>; 4] {
    let parts: Vec<Vec<i8>> = text
        .split(';')
        .map(|p| {
            p.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| match c {
                    '+' => 1,
                    '-' => -1,
                    '0' => 0,
                    _ => panic!("bad char {c}"),
                })
                .collect()
        })
        .collect();
    [parts[0].clone(), parts[1].clone(), parts[2].clone(), parts[3].clone()]
}

/// `M M^T` for an integer matrix in row-major order.
pub fn gram(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| m[i].iter().zip(&m[j]).map(|(x, y)| x * y).sum())
                .collect()
        })
        .collect()
}

pub fn is_scaled_identity(g: &[Vec<i64>], scale: i64) -> bool {
    g.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, &v)| v == if i == j { scale } else { 0 })
    })
}

/// The published NN(36) quadruple, as printed with its line breaks.
pub const NN36_PRINTED: [&str; 4] = [
    "+-++-+++-+-++--++--+ ++++----+++-----+",
    "+++---+-----++--++-- +-+--+-++-++-+-+-",
    "++-+-+------++++++-+ ++-+++++---+++-+",
    "+++++-+++--+++-+-+-- +--+-++-+++-+--+",
];

/// Published rows: order, AB code, CD code, sums.
pub const ROWS: [(usize, &str, &str, [i64; 4]); 6] = [
    (34, "076417646512321462", "16738541372344337", [7, 7, -2, 6]),
    (34, "076535878535141762", "17677852174231455", [-5, 7, 0, 8]),
    (34, "076782178767646231", "17621532262576812", [-5, 3, 10, -2]),
    (34, "058214353712141461", "11868756376664254", [11, 3, -2, 2]),
    (34, "053765656464871261", "17765746348615187", [1, 1, -6, 10]),
    (36, "0764841234846532153", "165154775335162126", [3, -3, 8, 8]),
];

pub fn row_record(i: usize) -> String {
    let (n, ab, cd, _) = ROWS[i];
    format!("NN {n} {ab} {cd}")
}
