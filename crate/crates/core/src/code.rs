//! Binary linear codes held by a generator matrix.

use std::fmt;

use log::warn;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};

/// Largest dimension for which [`LinearCode::min_distance`] enumerates all codewords.
pub const MIN_DISTANCE_MAX_K: usize = 28;

/// Dimension cap for [`LinearCode::min_distance_at_least`].
pub const BOUNDED_CHECK_MAX_K: usize = 63;

/// The `[n, k, d]` triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.n, self.k, self.d)
    }
}

/// An `[n, k]` binary code. The generator always has full row rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    gen: Gf2Matrix,
    standard: bool,
}

impl LinearCode {
    /// Takes the row space of `g`. Dependent rows are eliminated (with a
    /// warning) and the code keeps a row-reduced basis instead.
    pub fn from_generator(g: Gf2Matrix) -> Result<LinearCode> {
        if g.rows() == 0 {
            return Err(Error::Precondition("generator matrix has no rows".into()));
        }
        let rank = g.rank();
        if rank == 0 {
            return Err(Error::TrivialCode);
        }
        let gen = if rank < g.rows() {
            warn!(
                "generator has {} rows but rank {rank}; dropping dependent rows",
                g.rows()
            );
            let mut reduced = g;
            reduced.row_reduce();
            let keep: Vec<usize> = (0..rank).collect();
            let cols: Vec<usize> = (0..reduced.cols()).collect();
            reduced.submatrix(&keep, &cols)
        } else {
            g
        };
        let standard = is_standard(&gen);
        Ok(LinearCode { gen, standard })
    }

    /// The code generated by `[I_k | a]`.
    pub fn systematic(a: &Gf2Matrix) -> LinearCode {
        let gen = Gf2Matrix::identity(a.rows())
            .hstack(a)
            .expect("identity has matching row count");
        LinearCode {
            gen,
            standard: true,
        }
    }

    pub fn n(&self) -> usize {
        self.gen.cols()
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    pub fn generator(&self) -> &Gf2Matrix {
        &self.gen
    }

    pub fn is_standard(&self) -> bool {
        self.standard
    }

    /// The `A` block of a standard-form generator `[I_k | A]`.
    pub fn redundancy_block(&self) -> Option<Gf2Matrix> {
        if !self.standard {
            return None;
        }
        let rows: Vec<usize> = (0..self.k()).collect();
        let cols: Vec<usize> = (self.k()..self.n()).collect();
        Some(self.gen.submatrix(&rows, &cols))
    }

    /// An equivalent code with generator `[I_k | A]`, together with the
    /// column permutation used: column `j` of the new generator is column
    /// `perm[j]` of the old one (0-based).
    pub fn standard_form(&self) -> (LinearCode, Vec<usize>) {
        let mut rref = self.gen.clone();
        let pivots = rref.row_reduce();
        let mut perm = pivots.clone();
        perm.extend((0..self.n()).filter(|c| !pivots.contains(c)));
        let gen = rref.permute_columns(&perm);
        debug_assert!(is_standard(&gen));
        (
            LinearCode {
                gen,
                standard: true,
            },
            perm,
        )
    }

    /// Same code with the coordinates permuted (see [`Gf2Matrix::permute_columns`]).
    pub fn permute(&self, perm: &[usize]) -> LinearCode {
        let gen = self.gen.permute_columns(perm);
        let standard = is_standard(&gen);
        LinearCode { gen, standard }
    }

    /// Minimum Hamming weight over the `2^k - 1` nonzero codewords, visited in
    /// reflected Gray-code order so that each step adds a single generator row.
    pub fn min_distance(&self) -> Result<usize> {
        self.check_budget()?;
        Ok(self.gray_scan(0).expect("threshold 0 never aborts"))
    }

    /// `true` iff every nonzero codeword has weight at least `t`. Stops at the
    /// first lighter codeword, so it accepts dimensions up to
    /// [`BOUNDED_CHECK_MAX_K`].
    pub fn min_distance_at_least(&self, t: usize) -> Result<bool> {
        if self.k() > BOUNDED_CHECK_MAX_K {
            return Err(Error::EnumerationBudget {
                k: self.k(),
                cap: BOUNDED_CHECK_MAX_K,
            });
        }
        Ok(self.gray_scan(t).is_some())
    }

    /// Exact minimum distance without the dimension cap: enumerates messages
    /// of increasing weight `w` on an information set and stops once the best
    /// codeword found weighs at most `w + 1`. Cheap whenever low-weight
    /// codewords exist, which is the case for high-rate codes.
    pub fn min_distance_systematic(&self) -> usize {
        let (std_code, _) = self.standard_form();
        let rows = std_code.gen.row_vectors();
        let k = rows.len();
        let mut best = usize::MAX;
        for w in 1..=k {
            let mut acc = Gf2Vector::zeros(self.n());
            combos_min_weight(rows, 0, w, &mut acc, &mut best);
            if best <= w + 1 {
                break;
            }
        }
        best
    }

    /// Dual code `C^⊥`: generator `H` with `G Hᵀ = 0` and rank `n - k`.
    pub fn dual(&self) -> Result<LinearCode> {
        let (n, k) = (self.n(), self.k());
        if k == n {
            return Err(Error::DualIsZero);
        }
        let (std_code, perm) = self.standard_form();
        let a = std_code.redundancy_block().expect("standard form");
        // In permuted coordinates H' = [Aᵀ | I_{n-k}]; undo the permutation.
        let h_perm = a.transpose().hstack(&Gf2Matrix::identity(n - k))?;
        let mut inverse = vec![0; n];
        for (j, &p) in perm.iter().enumerate() {
            inverse[p] = j;
        }
        let h = h_perm.permute_columns(&inverse);
        let standard = is_standard(&h);
        Ok(LinearCode { gen: h, standard })
    }

    pub fn params(&self) -> Result<CodeParams> {
        Ok(CodeParams {
            n: self.n(),
            k: self.k(),
            d: self.min_distance()?,
        })
    }

    fn check_budget(&self) -> Result<()> {
        if self.k() > MIN_DISTANCE_MAX_K {
            return Err(Error::EnumerationBudget {
                k: self.k(),
                cap: MIN_DISTANCE_MAX_K,
            });
        }
        Ok(())
    }

    /// Gray-code walk. Returns the minimum weight, or `None` as soon as a
    /// codeword lighter than `threshold` appears.
    fn gray_scan(&self, threshold: usize) -> Option<usize> {
        let k = self.k();
        let total: u64 = 1 << k;
        let mut best = usize::MAX;
        if self.n() <= 64 {
            let rows: Vec<u64> = self
                .gen
                .row_vectors()
                .iter()
                .map(|r| r.words().first().copied().unwrap_or(0))
                .collect();
            let mut cur = 0u64;
            for i in 1..total {
                cur ^= rows[i.trailing_zeros() as usize];
                let w = cur.count_ones() as usize;
                if w < threshold {
                    return None;
                }
                best = best.min(w);
            }
        } else {
            let rows = self.gen.row_vectors();
            let mut cur = Gf2Vector::zeros(self.n());
            for i in 1..total {
                cur.add_assign(&rows[i.trailing_zeros() as usize]);
                let w = cur.weight();
                if w < threshold {
                    return None;
                }
                best = best.min(w);
            }
        }
        Some(best)
    }
}

fn combos_min_weight(
    rows: &[Gf2Vector],
    start: usize,
    remaining: usize,
    acc: &mut Gf2Vector,
    best: &mut usize,
) {
    if remaining == 0 {
        *best = (*best).min(acc.weight());
        return;
    }
    for i in start..=rows.len() - remaining {
        acc.add_assign(&rows[i]);
        combos_min_weight(rows, i + 1, remaining - 1, acc, best);
        acc.add_assign(&rows[i]);
    }
}

fn is_standard(g: &Gf2Matrix) -> bool {
    let k = g.rows();
    k <= g.cols() && (0..k).all(|i| (0..k).all(|j| g.get(i, j) == (i == j)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn code(rows: &[&str]) -> LinearCode {
        LinearCode::from_generator(Gf2Matrix::from_strs(rows).unwrap()).unwrap()
    }

    /// Weight of every codeword computed from scratch.
    fn naive_min_distance(c: &LinearCode) -> usize {
        let g = c.generator();
        (1u64..1 << c.k())
            .map(|msg| {
                let mut cw = Gf2Vector::zeros(c.n());
                for i in 0..c.k() {
                    if (msg >> i) & 1 == 1 {
                        cw.add_assign(g.row(i));
                    }
                }
                cw.weight()
            })
            .min()
            .unwrap()
    }

    fn codewords(c: &LinearCode) -> std::collections::BTreeSet<String> {
        let g = c.generator();
        (0u64..1 << c.k())
            .map(|msg| {
                let mut cw = Gf2Vector::zeros(c.n());
                for i in 0..c.k() {
                    if (msg >> i) & 1 == 1 {
                        cw.add_assign(g.row(i));
                    }
                }
                cw.to_string()
            })
            .collect()
    }

    fn arb_code(max_k: usize, max_n: usize) -> impl Strategy<Value = LinearCode> {
        (1..=max_k, 0..=max_n)
            .prop_flat_map(move |(k, extra)| {
                let n = k + extra.min(max_n - k);
                proptest::collection::vec(proptest::collection::vec(any::<bool>(), n), k)
                    .prop_map(move |rows| (rows, n))
            })
            .prop_filter_map("rank 0", |(rows, n)| {
                let g =
                    Gf2Matrix::from_rows(rows.into_iter().map(Gf2Vector::from_bits).collect(), n)
                        .unwrap();
                LinearCode::from_generator(g).ok()
            })
    }

    #[test]
    fn construction_examples() {
        let c = code(&["100", "010", "001"]);
        assert_eq!((c.n(), c.k()), (3, 3));
        assert!(c.is_standard());
        let c = code(&["111", "111"]);
        assert_eq!((c.n(), c.k()), (3, 1));
        let c = code(&["1111000", "0001111"]);
        assert_eq!((c.n(), c.k()), (7, 2));
        assert!(matches!(
            LinearCode::from_generator(Gf2Matrix::zeros(2, 3)),
            Err(Error::TrivialCode)
        ));
    }

    #[test]
    fn standard_form_examples() {
        let c = code(&["1010", "0111"]);
        let (s, perm) = c.standard_form();
        assert_eq!(s.generator(), c.generator());
        assert_eq!(perm, vec![0, 1, 2, 3]);

        let (s, perm) = code(&["01", "10"]).standard_form();
        assert_eq!(s.generator(), &Gf2Matrix::identity(2));
        assert_eq!(perm, vec![0, 1]);

        // [6,2] witness with blocks (3,1,2): the first two columns cannot both
        // pivot (they are equal), so columns 1 and 4 pivot.
        let c = code(&["111100", "000111"]);
        let (s, perm) = c.standard_form();
        assert_eq!(perm, vec![0, 3, 1, 2, 4, 5]);
        assert_eq!(
            s.generator(),
            &Gf2Matrix::from_strs(&["101111", "010011"]).unwrap()
        );
        assert_eq!(s.min_distance().unwrap(), c.min_distance().unwrap());
    }

    #[test]
    fn min_distance_examples() {
        assert_eq!(code(&["1111000", "0001111"]).min_distance().unwrap(), 4);
        assert_eq!(code(&["11111"]).min_distance().unwrap(), 5);
        assert_eq!(code(&["111100", "000111"]).min_distance().unwrap(), 3);
    }

    #[test]
    fn min_distance_at_least_examples() {
        let c = code(&["1111000", "0001111"]);
        assert!(c.min_distance_at_least(4).unwrap());
        assert!(!c.min_distance_at_least(5).unwrap());
        assert!(c.min_distance_at_least(1).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let c = LinearCode::systematic(&Gf2Matrix::zeros(29, 1));
        assert!(matches!(
            c.min_distance(),
            Err(Error::EnumerationBudget { .. })
        ));
        assert_eq!(c.min_distance_systematic(), 1);
        assert!(!c.min_distance_at_least(2).unwrap());
        let wide = LinearCode::systematic(&Gf2Matrix::zeros(64, 1));
        assert!(matches!(
            wide.min_distance_at_least(2),
            Err(Error::EnumerationBudget { .. })
        ));
    }

    #[test]
    fn wide_codes_use_multiword_path() {
        let mut row = Gf2Vector::zeros(130);
        for i in (0..130).step_by(3) {
            row.set(i, true);
        }
        let c = LinearCode::from_generator(Gf2Matrix::from_rows(vec![row.clone()], 130).unwrap())
            .unwrap();
        assert_eq!(c.min_distance().unwrap(), row.weight());
    }

    #[test]
    fn dual_examples() {
        let c = code(&["1010", "0111"]);
        let d = c.dual().unwrap();
        assert_eq!(
            d.generator(),
            &Gf2Matrix::from_strs(&["1110", "0101"]).unwrap()
        );

        let rep = code(&["111"]);
        let even = rep.dual().unwrap();
        assert_eq!(even.k(), 2);
        assert!(codewords(&even)
            .iter()
            .all(|w| w.matches('1').count() % 2 == 0));

        assert!(matches!(code(&["10", "01"]).dual(), Err(Error::DualIsZero)));
    }

    proptest! {
        #[test]
        fn gray_matches_naive(c in arb_code(10, 16)) {
            prop_assert_eq!(c.min_distance().unwrap(), naive_min_distance(&c));
            prop_assert_eq!(c.min_distance_systematic(), naive_min_distance(&c));
        }

        #[test]
        fn dual_is_orthogonal_and_involutive(c in arb_code(8, 12)) {
            prop_assume!(c.k() < c.n());
            let d = c.dual().unwrap();
            prop_assert_eq!(d.k(), c.n() - c.k());
            for g in c.generator().row_vectors() {
                for h in d.generator().row_vectors() {
                    prop_assert!(!g.dot(h));
                }
            }
            prop_assert_eq!(codewords(&d.dual().unwrap()), codewords(&c));
        }

        #[test]
        fn singleton_bound_holds(c in arb_code(10, 16)) {
            prop_assert!(c.min_distance().unwrap() <= c.n() - c.k() + 1);
        }

        #[test]
        fn permutation_preserves_distance(c in arb_code(8, 14), seed in any::<u64>()) {
            let mut perm: Vec<usize> = (0..c.n()).collect();
            let mut s = seed;
            for i in (1..perm.len()).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            prop_assert_eq!(c.permute(&perm).min_distance().unwrap(), c.min_distance().unwrap());
        }
    }
}
