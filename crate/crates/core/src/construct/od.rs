//! Symbolic matrices over `{0, ±x_1, ..., ±x_u}` and orthogonal designs.

use std::fmt;

use rayon::prelude::*;

use crate::seqcore::{verify_quadruple, Failure, QuadKind, SeqQuadruple, VerificationReport};

use super::ConstructError;

/// `0`, or `±x_k` with `k >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SymbolicEntry(i8);

impl SymbolicEntry {
    pub const ZERO: SymbolicEntry = SymbolicEntry(0);

    pub fn new(var: u8, sign: i8) -> Self {
        if var == 0 {
            Self::ZERO
        } else {
            Self(sign.signum() * var as i8)
        }
    }

    pub fn var(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn sign(self) -> i8 {
        self.0.signum()
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    fn neg(self) -> Self {
        Self(-self.0)
    }
}

impl fmt::Display for SymbolicEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            f.write_str("0")
        } else {
            write!(f, "{:+}", self.0)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicMatrix {
    order: usize,
    vars: usize,
    entries: Vec<SymbolicEntry>,
    /// Claimed `(s_1, ..., s_u)`.
    pub signature: Vec<i64>,
}

impl SymbolicMatrix {
    pub fn new(
        order: usize,
        vars: usize,
        entries: Vec<SymbolicEntry>,
        signature: Vec<i64>,
    ) -> Result<Self, ConstructError> {
        if entries.len() != order * order {
            return Err(ConstructError::Parse {
                line: 0,
                msg: format!("{} entries for order {order}", entries.len()),
            });
        }
        if signature.len() != vars {
            return Err(ConstructError::Parse {
                line: 0,
                msg: format!("signature has {} values for {vars} variables", signature.len()),
            });
        }
        if let Some(e) = entries.iter().find(|e| e.var() > vars) {
            return Err(ConstructError::Parse {
                line: 0,
                msg: format!("entry {e} uses a variable beyond x{vars}"),
            });
        }
        Ok(Self {
            order,
            vars,
            entries,
            signature,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn get(&self, row: usize, col: usize) -> SymbolicEntry {
        self.entries[row * self.order + col]
    }

    pub fn set(&mut self, row: usize, col: usize, e: SymbolicEntry) {
        self.entries[row * self.order + col] = e;
    }

    pub fn has_zero(&self) -> bool {
        self.entries.iter().any(|e| e.is_zero())
    }

    /// `order u` header, then one line of `±k`/`0` entries per row.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.order, self.vars);
        for r in 0..self.order {
            let row: Vec<String> = (0..self.order).map(|c| self.get(r, c).to_string()).collect();
            out += &row.join(" ");
            out.push('\n');
        }
        out
    }

    /// Parses [`to_text`](Self::to_text) output. The signature is not part
    /// of the file and must be supplied.
    pub fn parse(text: &str, signature: Vec<i64>) -> Result<Self, ConstructError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or(ConstructError::Parse {
            line: 1,
            msg: "empty matrix file".into(),
        })?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse())
            .collect::<Result<_, _>>()
            .map_err(|_| ConstructError::Parse {
                line: 1,
                msg: "header must be 'order u'".into(),
            })?;
        let [order, vars] = nums[..] else {
            return Err(ConstructError::Parse {
                line: 1,
                msg: "header must be 'order u'".into(),
            });
        };
        let mut entries = Vec::with_capacity(order * order);
        for (i, line) in lines {
            for tok in line.split_whitespace() {
                let v: i8 = tok.parse().map_err(|_| ConstructError::Parse {
                    line: i + 1,
                    msg: format!("bad entry {tok:?}"),
                })?;
                entries.push(SymbolicEntry(v));
            }
        }
        Self::new(order, vars, entries, signature)
    }
}

/// Dense integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub order: usize,
    pub data: Vec<i64>,
}

impl IntMatrix {
    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.data[row * self.order + col]
    }

    /// `M M^T`.
    pub fn gram(&self) -> IntMatrix {
        let n = self.order;
        let data: Vec<i64> = (0..n * n)
            .into_par_iter()
            .map(|idx| {
                let (r, s) = (idx / n, idx % n);
                let (x, y) = (&self.data[r * n..(r + 1) * n], &self.data[s * n..(s + 1) * n]);
                x.iter().zip(y).map(|(p, q)| p * q).sum()
            })
            .collect();
        IntMatrix { order: n, data }
    }

    /// Checks `M M^T = scale * I`, naming the first differing cell.
    pub fn check_gram(&self, scale: i64) -> VerificationReport {
        let g = self.gram();
        let n = self.order;
        for r in 0..n {
            for c in 0..n {
                let expected = if r == c { scale } else { 0 };
                let got = g.get(r, c);
                if got != expected {
                    return VerificationReport::fail(Failure::Gram {
                        row: r,
                        col: c,
                        got,
                        expected,
                    });
                }
            }
        }
        VerificationReport::pass()
    }

    /// Rows of `+`/`-` characters; only meaningful for `±1` matrices.
    pub fn to_pm_text(&self) -> String {
        let mut out = String::with_capacity(self.order * (self.order + 1));
        for r in 0..self.order {
            for c in 0..self.order {
                out.push(if self.get(r, c) > 0 { '+' } else { '-' });
            }
            out.push('\n');
        }
        out
    }
}

/// Checks `S S^T = (s_1 x_1^2 + ... + s_u x_u^2) I` as a polynomial identity.
///
/// For every monomial `x_j x_k` the coefficient matrix is assembled from the
/// signed 0/1 incidence matrices of the two variables; monomials are checked
/// in parallel and the lowest failing `(row, col, monomial)` is reported.
pub fn verify_od(s: &SymbolicMatrix) -> VerificationReport {
    let n = s.order;
    let u = s.vars;
    // per variable, per row: (col, sign)
    let incidence: Vec<Vec<Vec<(usize, i64)>>> = (1..=u)
        .map(|k| {
            (0..n)
                .map(|r| {
                    (0..n)
                        .filter_map(|c| {
                            let e = s.get(r, c);
                            (e.var() == k).then_some((c, e.sign() as i64))
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    // dense signed incidence for the inner lookup
    let dense: Vec<Vec<i64>> = (1..=u)
        .map(|k| {
            s.entries
                .iter()
                .map(|e| if e.var() == k { e.sign() as i64 } else { 0 })
                .collect()
        })
        .collect();

    let monomials: Vec<(usize, usize)> = (0..u).flat_map(|j| (j..u).map(move |k| (j, k))).collect();
    let failures: Vec<Failure> = monomials
        .par_iter()
        .filter_map(|&(j, k)| {
            // coefficient of x_j x_k in (S S^T)[r][t]
            let coef = |r: usize, t: usize| -> i64 {
                let part = |p: usize, q: usize| -> i64 {
                    incidence[p][r].iter().map(|&(c, sg)| sg * dense[q][t * n + c]).sum()
                };
                if j == k {
                    part(j, j)
                } else {
                    part(j, k) + part(k, j)
                }
            };
            for r in 0..n {
                for t in 0..n {
                    let expected = if r == t && j == k { s.signature[j] } else { 0 };
                    let got = coef(r, t);
                    if got != expected {
                        return Some(Failure::Cell {
                            row: r,
                            col: t,
                            monomial: (j + 1, k + 1),
                            got,
                            expected,
                        });
                    }
                }
            }
            None
        })
        .collect();
    let first = failures.into_iter().min_by_key(|f| match f {
        Failure::Cell { row, col, monomial, .. } => (*row, *col, *monomial),
        _ => unreachable!(),
    });
    match first {
        None => VerificationReport::pass(),
        Some(f) => VerificationReport::fail(f),
    }
}

/// Replaces `x_k` by `values[k-1]`.
pub fn od_substitute(s: &SymbolicMatrix, values: &[i64]) -> Result<IntMatrix, ConstructError> {
    if values.len() != s.vars {
        return Err(ConstructError::BadValues(format!(
            "{} values for {} variables",
            values.len(),
            s.vars
        )));
    }
    let data = s
        .entries
        .iter()
        .map(|e| {
            if e.is_zero() {
                0
            } else {
                e.sign() as i64 * values[e.var() - 1]
            }
        })
        .collect();
    Ok(IntMatrix { order: s.order, data })
}

/// Substitutes `±1` values into a zero-free design and checks
/// `H H^T = (s_1 + ... + s_u) I` exactly.
pub fn hadamard_from_od(s: &SymbolicMatrix, values: &[i64]) -> Result<(IntMatrix, VerificationReport), ConstructError> {
    if s.has_zero() {
        return Err(ConstructError::ZeroSupport);
    }
    if values.iter().any(|v| v.abs() != 1) {
        return Err(ConstructError::BadValues(
            "Hadamard substitution needs ±1 values".into(),
        ));
    }
    let h = od_substitute(s, values)?;
    let report = h.check_gram(s.signature.iter().sum());
    Ok((h, report))
}

/// `(sign, variable)` placed by T-sequence `i` in quaternion block `p`.
const QUATERNION: [[(i8, u8); 4]; 4] = [
    [(1, 1), (1, 2), (1, 3), (1, 4)],
    [(-1, 2), (1, 1), (1, 4), (-1, 3)],
    [(-1, 3), (-1, 4), (1, 1), (1, 2)],
    [(-1, 4), (1, 3), (-1, 2), (1, 1)],
];

/// Block layout: `(sign, block index, transposed, reversed)`.
const GOETHALS_SEIDEL: [[(i8, usize, bool, bool); 4]; 4] = [
    [
        (1, 0, false, false),
        (1, 1, false, true),
        (1, 2, false, true),
        (1, 3, false, true),
    ],
    [
        (-1, 1, false, true),
        (1, 0, false, false),
        (1, 3, true, true),
        (-1, 2, true, true),
    ],
    [
        (-1, 2, false, true),
        (-1, 3, true, true),
        (1, 0, false, false),
        (1, 1, true, true),
    ],
    [
        (-1, 3, false, true),
        (1, 2, true, true),
        (-1, 1, true, true),
        (1, 0, false, false),
    ],
];

/// Builds an `OD(4n; n, n, n, n)` from T-sequences of length `n`.
///
/// The four T-sequences give circulants `C_1..C_4` (row `r` is the sequence
/// shifted right by `r`); their quaternion combinations `M_1..M_4` are laid
/// into the Goethals-Seidel array with the back-diagonal `R`.
pub fn ts_to_od(t: &SeqQuadruple) -> Result<SymbolicMatrix, ConstructError> {
    if t.kind() != QuadKind::Ts {
        return Err(ConstructError::NotTSequence(format!("kind {}", t.kind())));
    }
    let report = verify_quadruple(t).map_err(|e| ConstructError::NotTSequence(e.to_string()))?;
    if let Some(f) = report.failure {
        return Err(ConstructError::NotTSequence(f.to_string()));
    }
    let n = t.shape().0;
    let seqs = t.seqs();

    // owner[k] = (which sequence is nonzero at k, its sign)
    let owner: Vec<(usize, i8)> = (0..n)
        .map(|k| {
            let i = (0..4).find(|&i| seqs[i][k] != 0).expect("T-sequence supports cover");
            (i, seqs[i][k])
        })
        .collect();
    let block_entry = |p: usize, r: usize, c: usize| -> SymbolicEntry {
        let (i, sg) = owner[(c + n - r) % n];
        let (qs, var) = QUATERNION[p][i];
        SymbolicEntry::new(var, qs * sg)
    };

    let order = 4 * n;
    let mut out = SymbolicMatrix::new(order, 4, vec![SymbolicEntry::ZERO; order * order], vec![n as i64; 4])?;
    for (br, row) in GOETHALS_SEIDEL.iter().enumerate() {
        for (bc, &(sign, p, transposed, reversed)) in row.iter().enumerate() {
            for r in 0..n {
                for c in 0..n {
                    // (X R)[r][c] = X[r][n-1-c]; (X^T R)[r][c] = X[n-1-c][r]
                    let c2 = if reversed { n - 1 - c } else { c };
                    let (rr, cc) = if transposed { (c2, r) } else { (r, c2) };
                    let e = block_entry(p, rr, cc);
                    let e = if sign < 0 { e.neg() } else { e };
                    out.set(br * n + r, bc * n + c, e);
                }
            }
        }
    }
    let check = verify_od(&out);
    if !check.passed() {
        return Err(ConstructError::SelfCheck(check.to_string()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quaternion_design() -> SymbolicMatrix {
        let t = SeqQuadruple::parse(QuadKind::Ts, "+;0;0;0").unwrap();
        ts_to_od(&t).unwrap()
    }

    #[test]
    fn order_four_design() {
        let s = quaternion_design();
        assert_eq!(s.order(), 4);
        assert!(verify_od(&s).passed());
        assert!(!s.has_zero());
    }

    #[test]
    fn flipped_entry_fails_off_diagonal() {
        let mut s = quaternion_design();
        let e = s.get(0, 1);
        s.set(0, 1, e.neg());
        let r = verify_od(&s);
        match r.failure {
            Some(Failure::Cell { row, col, .. }) => assert_ne!(row, col),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn text_round_trip() {
        let s = quaternion_design();
        let back = SymbolicMatrix::parse(&s.to_text(), s.signature.clone()).unwrap();
        assert_eq!(back, s);
        assert!(SymbolicMatrix::parse("2 1\n+1 +1\n", vec![1]).is_err());
        assert!(SymbolicMatrix::parse("1 1\n+2\n", vec![1]).is_err());
    }

    #[test]
    fn hadamard_four() {
        let (h, report) = hadamard_from_od(&quaternion_design(), &[1, 1, 1, 1]).unwrap();
        assert!(report.passed());
        assert_eq!(h.order, 4);
    }

    #[test]
    fn zero_support_rejected() {
        let s = SymbolicMatrix::new(1, 1, vec![SymbolicEntry::ZERO], vec![0]).unwrap();
        assert!(matches!(hadamard_from_od(&s, &[1]), Err(ConstructError::ZeroSupport)));
    }

    #[test]
    fn substitute_wrong_arity() {
        assert!(od_substitute(&quaternion_design(), &[1, 1]).is_err());
    }
}
