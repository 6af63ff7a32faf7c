//! LCD membership, hull dimension, principal rank characteristic sequences
//! and LCD-subcode extraction.
//!
//! A binary code with generator `G` is LCD (its hull `C ∩ C^⊥` is trivial)
//! exactly when the Gram matrix `G Gᵀ` is nonsingular. More generally the
//! hull has dimension `k - rank(G Gᵀ)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::code::{CodeParams, LinearCode};
use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;

/// Hard cap on the order of matrices accepted by [`pr_sequence`].
pub const PR_SEQUENCE_MAX_K: usize = 24;

/// `true` iff `det(G Gᵀ) = 1`.
pub fn is_lcd(c: &LinearCode) -> bool {
    hull_dimension(c) == 0
}

/// `dim(C ∩ C^⊥) = k - rank(G Gᵀ)`.
pub fn hull_dimension(c: &LinearCode) -> usize {
    c.k() - c.generator().gram().rank()
}

/// A principal rank characteristic sequence `r0]r1…rk`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrSequence {
    pub r0: bool,
    pub rs: Vec<bool>,
}

impl PrSequence {
    pub fn k(&self) -> usize {
        self.rs.len()
    }
}

impl fmt::Display for PrSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bit = |b: bool| if b { '1' } else { '0' };
        write!(f, "{}]", bit(self.r0))?;
        for &r in &self.rs {
            write!(f, "{}", bit(r))?;
        }
        Ok(())
    }
}

impl FromStr for PrSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed pr-sequence {s:?}"));
        let (head, tail) = s.split_once(']').ok_or_else(bad)?;
        let bit = |c: char| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(bad()),
        };
        let mut head = head.chars();
        let r0 = bit(head.next().ok_or_else(bad)?)?;
        if head.next().is_some() {
            return Err(bad());
        }
        let rs = tail.chars().map(bit).collect::<Result<Vec<_>>>()?;
        Ok(PrSequence { r0, rs })
    }
}

/// Symmetric matrix of order ≤ 32 as row bitmasks.
fn mask_rows(a: &Gf2Matrix) -> Vec<u32> {
    a.row_vectors()
        .iter()
        .map(|r| r.words().first().copied().unwrap_or(0) as u32)
        .collect()
}

/// Rank of the principal submatrix on the index set `subset`.
fn principal_rank(rows: &[u32], subset: u32) -> u32 {
    let mut scratch = [0u32; 32];
    let mut len = 0;
    let mut s = subset;
    while s != 0 {
        let i = s.trailing_zeros() as usize;
        scratch[len] = rows[i] & subset;
        len += 1;
        s &= s - 1;
    }
    let work = &mut scratch[..len];
    let mut rank = 0;
    for r in 0..len {
        if work[r] == 0 {
            continue;
        }
        let row = work[r];
        let pivot = row & row.wrapping_neg();
        for x in work.iter_mut().skip(r + 1) {
            if *x & pivot != 0 {
                *x ^= row;
            }
        }
        rank += 1;
    }
    rank
}

/// Visits every `m`-subset of `0..k` as a bitmask (Gosper's hack) until `f` returns `true`.
fn any_subset(k: usize, m: usize, mut f: impl FnMut(u32) -> bool) -> bool {
    if m == 0 {
        return f(0);
    }
    if m > k {
        return false;
    }
    let limit: u64 = 1 << k;
    let mut s: u64 = (1 << m) - 1;
    while s < limit {
        if f(s as u32) {
            return true;
        }
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    false
}

fn pr_from_rows(rows: &[u32]) -> PrSequence {
    let k = rows.len();
    let r0 = (0..k).any(|i| (rows[i] >> i) & 1 == 0);
    let rs = (1..=k)
        .map(|m| any_subset(k, m, |s| principal_rank(rows, s) == m as u32))
        .collect();
    PrSequence { r0, rs }
}

/// The pr-sequence of a square symmetric matrix.
pub fn pr_sequence(a: &Gf2Matrix) -> Result<PrSequence> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if a.rows() > PR_SEQUENCE_MAX_K {
        return Err(Error::Precondition(format!(
            "pr-sequence limited to order {PR_SEQUENCE_MAX_K}, got {}",
            a.rows()
        )));
    }
    Ok(pr_from_rows(&mask_rows(a)))
}

fn ones_then_zeros(s: &[bool]) -> bool {
    let split = s.iter().position(|&b| !b).unwrap_or(s.len());
    s[split..].iter().all(|&b| !b)
}

fn pairs_then_zeros(s: &[bool]) -> bool {
    let mut i = 0;
    while i + 1 < s.len() && !s[i] && s[i + 1] {
        i += 2;
    }
    s[i..].iter().all(|&b| !b)
}

/// Whether `p` has one of the three shapes attainable by a symmetric matrix
/// over a field of characteristic two:
/// `0]1 1…1 0…0`, `1]0101…01 0…0` or `1]1 1…1 0…0` (blocks may be empty).
pub fn pr_attainable(p: &PrSequence) -> Result<bool> {
    if p.k() < 2 {
        return Err(Error::Precondition(
            "classification stated for k >= 2".into(),
        ));
    }
    let rs = &p.rs;
    Ok(if p.r0 {
        pairs_then_zeros(rs) || (rs[0] && ones_then_zeros(rs))
    } else {
        rs[0] && ones_then_zeros(rs)
    })
}

/// The set of pr-sequences realised by symmetric `k × k` matrices, by
/// enumerating all `2^{k(k+1)/2}` upper triangles.
pub fn attained_pr_sequences(k: usize) -> std::collections::BTreeSet<PrSequence> {
    assert!(k <= 8, "exhaustive sweep only for small orders");
    let positions: Vec<(usize, usize)> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
    let total: u64 = 1 << positions.len();
    let decode = |code: u64| {
        let mut rows = vec![0u32; k];
        for (bit, &(i, j)) in positions.iter().enumerate() {
            if (code >> bit) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
        pr_from_rows(&rows)
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..total)
            .into_par_iter()
            .fold(std::collections::BTreeSet::new, |mut set, code| {
                set.insert(decode(code));
                set
            })
            .reduce(std::collections::BTreeSet::new, |mut a, b| {
                a.extend(b);
                a
            })
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..total).map(decode).collect()
    }
}

/// Proof object for an LCD subcode obtained by deleting generator rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubcodeCertificate {
    /// 0-based indices of the deleted rows.
    pub removed_rows: Vec<usize>,
    pub sub_gen: Gf2Matrix,
    pub sub_params: CodeParams,
    /// `false` when the parent dimension is outside the range where a
    /// subcode is known to exist (k = 2) and one was found anyway.
    pub guaranteed: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SubcodeCertificateJson {
    pub removed: Vec<usize>,
    pub sub_gen: Vec<String>,
}

impl SubcodeCertificate {
    pub fn to_json(&self) -> SubcodeCertificateJson {
        SubcodeCertificateJson {
            removed: self.removed_rows.iter().map(|i| i + 1).collect(),
            sub_gen: self.sub_gen.to_bit_rows(),
        }
    }
}

/// Finds rows of `G` whose deletion leaves an LCD subcode: one row when `k`
/// is odd, two rows when `k ≥ 4` is even. Candidates are scanned in
/// increasing (lexicographic) order and the first hit wins. For `k = 2`
/// nothing is guaranteed; a single-row deletion is tried on a best-effort
/// basis.
pub fn extract_lcd_subcode(c: &LinearCode) -> Result<SubcodeCertificate> {
    let k = c.k();
    if k < 2 {
        return Err(Error::Precondition(
            "subcode extraction needs k >= 2".into(),
        ));
    }
    if !is_lcd(c) {
        return Err(Error::Precondition("code is not LCD".into()));
    }
    let gram = c.generator().gram();
    if !gram.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let nonsingular = |removed: &[usize]| -> bool {
        gram.principal_submatrix(removed)
            .and_then(|p| p.det())
            .unwrap_or(false)
    };
    let (removed, guaranteed) = if k % 2 == 1 || k == 2 {
        let found = (0..k).find(|&i| nonsingular(&[i])).map(|i| vec![i]);
        (found, k != 2)
    } else {
        let found = (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| [i, j]))
            .find(|pair| nonsingular(pair))
            .map(|p| p.to_vec());
        (found, true)
    };
    let Some(removed_rows) = removed else {
        return Err(if guaranteed {
            // Unreachable for symmetric nonsingular Gram matrices.
            Error::Precondition(format!("no LCD subcode found for k = {k}"))
        } else {
            Error::NoSubcodeGuarantee { k }
        });
    };
    let sub_gen = c.generator().without_rows(&removed_rows);
    let sub = LinearCode::from_generator(sub_gen.clone())?;
    let d = sub
        .min_distance()
        .unwrap_or_else(|_| sub.min_distance_systematic());
    Ok(SubcodeCertificate {
        removed_rows,
        sub_params: CodeParams {
            n: sub.n(),
            k: sub.k(),
            d,
        },
        sub_gen,
        guaranteed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::Gf2Vector;
    use proptest::prelude::*;

    fn code(rows: &[&str]) -> LinearCode {
        LinearCode::from_generator(Gf2Matrix::from_strs(rows).unwrap()).unwrap()
    }

    fn seq(s: &str) -> PrSequence {
        s.parse().unwrap()
    }

    #[test]
    fn is_lcd_examples() {
        assert!(!is_lcd(&code(&["11"])));
        assert!(is_lcd(&code(&["11111"])));
        assert!(is_lcd(&code(&["111100", "000111"])));
    }

    #[test]
    fn hull_dimension_examples() {
        assert_eq!(hull_dimension(&code(&["11111"])), 0);
        assert_eq!(hull_dimension(&code(&["1111"])), 1);
        assert_eq!(hull_dimension(&code(&["10", "01"])), 0);
    }

    #[test]
    fn pr_sequence_examples() {
        assert_eq!(
            pr_sequence(&Gf2Matrix::identity(3)).unwrap().to_string(),
            "0]111"
        );
        assert_eq!(
            pr_sequence(&Gf2Matrix::zeros(2, 2)).unwrap().to_string(),
            "1]00"
        );
        let swap = Gf2Matrix::from_strs(&["01", "10"]).unwrap();
        assert_eq!(pr_sequence(&swap).unwrap().to_string(), "1]01");
        assert!(matches!(
            pr_sequence(&Gf2Matrix::from_strs(&["01", "00"]).unwrap()),
            Err(Error::NotSymmetric)
        ));
        assert!(matches!(
            pr_sequence(&Gf2Matrix::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn pr_sequence_round_trips_through_text() {
        let p = seq("1]0101");
        assert_eq!(p.k(), 4);
        assert_eq!(p.to_string(), "1]0101");
        assert!("10]01".parse::<PrSequence>().is_err());
        assert!("1-01".parse::<PrSequence>().is_err());
    }

    #[test]
    fn attainable_examples() {
        assert!(pr_attainable(&seq("0]111")).unwrap());
        assert!(pr_attainable(&seq("1]0101")).unwrap());
        assert!(!pr_attainable(&seq("0]010")).unwrap());
        assert!(pr_attainable(&seq("1]000")).unwrap());
        assert!(pr_attainable(&seq("1]110")).unwrap());
        assert!(!pr_attainable(&seq("1]0110")).unwrap());
        assert!(!pr_attainable(&seq("0]101")).unwrap());
        assert!(pr_attainable(&seq("1]1")).is_err());
    }

    #[test]
    fn no_three_by_three_matrix_attains_0_010() {
        assert!(!attained_pr_sequences(3).contains(&seq("0]010")));
    }

    #[test]
    fn subcode_of_identity_code() {
        let cert = extract_lcd_subcode(&code(&["100", "010", "001"])).unwrap();
        assert_eq!(cert.removed_rows, vec![0]);
        assert_eq!(cert.sub_gen, Gf2Matrix::from_strs(&["010", "001"]).unwrap());
        assert!(cert.guaranteed);
        let json = serde_json::to_string(&cert.to_json()).unwrap();
        assert_eq!(json, r#"{"removed":[1],"sub_gen":["010","001"]}"#);
    }

    #[test]
    fn subcode_even_dimension_drops_two_rows() {
        let cert = extract_lcd_subcode(&LinearCode::systematic(&Gf2Matrix::zeros(4, 2))).unwrap();
        assert_eq!(cert.removed_rows, vec![0, 1]);
        assert_eq!(cert.sub_params.k, 2);
    }

    #[test]
    fn subcode_dimension_two_is_best_effort() {
        // Gram matrix [[0,1],[1,0]]: both diagonal entries vanish, no LCD line.
        let c = code(&["1111000", "0001111"]);
        assert!(matches!(
            extract_lcd_subcode(&c),
            Err(Error::NoSubcodeGuarantee { k: 2 })
        ));
        let cert = extract_lcd_subcode(&code(&["10", "01"])).unwrap();
        assert!(!cert.guaranteed);
    }

    #[test]
    fn subcode_preconditions() {
        assert!(extract_lcd_subcode(&code(&["111"])).is_err());
        assert!(extract_lcd_subcode(&code(&["1100", "0011"])).is_err());
    }

    proptest! {
        #[test]
        fn lcd_iff_trivial_hull_and_dual_lcd(
            k in 1usize..7, extra in 1usize..7, bits in proptest::collection::vec(any::<bool>(), 7 * 13)
        ) {
            let n = k + extra;
            let rows = (0..k)
                .map(|i| Gf2Vector::from_bits((0..n).map(|j| bits[i * 13 + j])))
                .collect();
            let Ok(c) = LinearCode::from_generator(Gf2Matrix::from_rows(rows, n).unwrap()) else {
                return Ok(());
            };
            prop_assume!(c.k() < c.n());
            let gram = c.generator().gram();
            prop_assert_eq!(is_lcd(&c), gram.det().unwrap());
            prop_assert_eq!(is_lcd(&c), hull_dimension(&c) == 0);
            prop_assert_eq!(is_lcd(&c), is_lcd(&c.dual().unwrap()));
        }
    }
}
