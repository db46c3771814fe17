use crate::seqcore::{verify_quadruple, QuadKind, SeqQuadruple};

use super::ConstructError;

/// Turns base sequences `BS(m, n)` into T-sequences of length `m + n`.
///
/// `T1 = (A+B)/2 ‖ 0^n`, `T2 = (A-B)/2 ‖ 0^n`, `T3 = 0^m ‖ (C+D)/2`,
/// `T4 = 0^m ‖ (C-D)/2`. Accepts any binary kind; the input is checked as
/// base sequences.
pub fn bs_to_ts(q: &SeqQuadruple) -> Result<SeqQuadruple, ConstructError> {
    if !q.kind().is_binary() {
        return Err(ConstructError::NotBase(format!("kind {}", q.kind())));
    }
    let as_bs = q
        .with_kind(QuadKind::Bs)
        .map_err(|e| ConstructError::NotBase(e.to_string()))?;
    let report = verify_quadruple(&as_bs).map_err(|e| ConstructError::NotBase(e.to_string()))?;
    if let Some(f) = report.failure {
        return Err(ConstructError::NotBase(f.to_string()));
    }

    let (m, n) = q.shape();
    let half = |x: &[i8], y: &[i8], s: i8| -> Vec<i8> { x.iter().zip(y).map(|(&p, &r)| (p + s * r) / 2).collect() };
    let pad_after = |mut v: Vec<i8>, k: usize| {
        v.resize(v.len() + k, 0);
        v
    };
    let pad_before = |v: Vec<i8>, k: usize| {
        let mut out = vec![0; k];
        out.extend(v);
        out
    };
    let t1 = pad_after(half(q.a(), q.b(), 1), n);
    let t2 = pad_after(half(q.a(), q.b(), -1), n);
    let t3 = pad_before(half(q.c(), q.d(), 1), m);
    let t4 = pad_before(half(q.c(), q.d(), -1), m);
    let ts = SeqQuadruple::new(QuadKind::Ts, t1, t2, t3, t4).map_err(|e| ConstructError::SelfCheck(e.to_string()))?;
    match verify_quadruple(&ts) {
        Ok(r) if r.passed() => Ok(ts),
        Ok(r) => Err(ConstructError::SelfCheck(r.to_string())),
        Err(e) => Err(ConstructError::SelfCheck(e.to_string())),
    }
}
