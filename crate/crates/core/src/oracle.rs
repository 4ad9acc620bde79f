//! Definition-level reference implementations for cross-checking.
//!
//! Nothing here touches the tree engine, the Apéry updates or the closure
//! arithmetic: `R(F, m)` is rebuilt by trying every candidate element set and
//! testing additive closure on explicit membership bitmaps. Slow on purpose.

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Upper bound on `F` for [`oracle_rfm`]; the search is exponential in `F`.
pub const ORACLE_MAX_FROBENIUS: i64 = 24;

/// Membership bitmap for `0..=2F+1`, enough to test closure when everything
/// above `F` is present.
type Bitmap = Vec<bool>;

fn in_delta(x: i64, f: i64, m: i64) -> bool {
    x == 0 || (x > 0 && x % m == 0 && x <= f) || x > f
}

fn bitmap_to_semigroup(bits: &[bool], m: i64) -> Result<NumericalSemigroup> {
    let table = (0..m)
        .map(|i| {
            let mut x = i;
            while !bits[x as usize] {
                x += m;
            }
            x
        })
        .collect();
    NumericalSemigroup::from_apery_table(m, table)
}

fn semigroup_to_bitmap(s: &NumericalSemigroup, len: usize) -> Bitmap {
    (0..len as i64).map(|x| s.contains(x)).collect()
}

fn check_params(f: i64, m: i64) -> Result<()> {
    if f > ORACLE_MAX_FROBENIUS {
        return Err(Error::usage(format!(
            "oracle limited to F ≤ {ORACLE_MAX_FROBENIUS} (got {f})"
        )));
    }
    if m < 2 || m >= f || f % m == 0 {
        return Err(Error::usage(format!(
            "oracle needs 2 ≤ m < F, m ∤ F (got F={f}, m={m})"
        )));
    }
    Ok(())
}

/// Every numerical semigroup with Frobenius number `F` and multiplicity `m`,
/// in the order the tree engine lists them: genus descending, then by the
/// elements added to `Δ(F, m)`.
pub fn oracle_rfm(frobenius: i64, multiplicity: i64) -> Result<Vec<NumericalSemigroup>> {
    let (f, m) = (frobenius, multiplicity);
    check_params(f, m)?;
    let candidates: Vec<i64> = (m + 1..f).filter(|x| x % m != 0).collect();
    let len = (2 * f + 2) as usize;
    let mut out = Vec::new();
    for mask in 0u64..1 << candidates.len() {
        let mut bits: Bitmap = (0..len as i64).map(|x| in_delta(x, f, m)).collect();
        for (i, &c) in candidates.iter().enumerate() {
            if mask & (1 << i) != 0 {
                bits[c as usize] = true;
            }
        }
        let closed = (1..=f as usize)
            .filter(|&a| bits[a])
            .all(|a| (a..=f as usize).filter(|&b| bits[b]).all(|b| bits[a + b]));
        if closed {
            out.push(bitmap_to_semigroup(&bits, m)?);
        }
    }
    let delta = NumericalSemigroup::delta(f, m)?;
    out.sort_by_key(|s| (std::cmp::Reverse(s.genus()), s.elements_not_in(&delta)));
    Ok(out)
}

/// The intersection of every member of `R(F, m)` containing `x`.
pub fn oracle_closure(x: &[i64], frobenius: i64, multiplicity: i64) -> Result<NumericalSemigroup> {
    let members = oracle_rfm(frobenius, multiplicity)?;
    oracle_closure_among(&members, x, frobenius, multiplicity)
}

/// As [`oracle_closure`], against a precomputed `oracle_rfm(F, m)`.
pub fn oracle_closure_among(
    members: &[NumericalSemigroup],
    x: &[i64],
    frobenius: i64,
    multiplicity: i64,
) -> Result<NumericalSemigroup> {
    let (f, m) = (frobenius, multiplicity);
    check_params(f, m)?;
    if let Some(bad) = x.iter().find(|&&e| in_delta(e, f, m)) {
        return Err(Error::domain(format!(
            "not an R-set: {bad} lies in Δ({f},{m})"
        )));
    }
    let len = (f + m + 1) as usize;
    let mut acc: Option<Bitmap> = None;
    for s in members {
        let bits = semigroup_to_bitmap(s, len);
        if x.iter()
            .all(|&e| e >= 0 && (e as usize) < len && bits[e as usize])
        {
            acc = Some(match acc {
                None => bits,
                Some(a) => a.iter().zip(&bits).map(|(p, q)| *p && *q).collect(),
            });
        }
    }
    let bits = acc.ok_or_else(|| Error::domain("not an R-set: no member contains it"))?;
    bitmap_to_semigroup(&bits, m)
}
