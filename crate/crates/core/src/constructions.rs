//! Closed-form LCD generator matrices and the parameter bounds used to
//! bracket table values.

use std::fmt;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};

/// Minimal length allowed by the Griesmer bound: `Σ_{i<k} ⌈d / 2^i⌉`.
pub fn griesmer_length(k: usize, d: usize) -> usize {
    (0..k)
        .map(|i| {
            if i >= usize::BITS as usize {
                1.min(d)
            } else {
                d.div_ceil(1 << i)
            }
        })
        .sum()
}

/// Largest `d` an `[n, k]` binary code may have under the Griesmer bound.
pub fn griesmer_max_distance(n: usize, k: usize) -> usize {
    (1..=n)
        .rev()
        .find(|&d| griesmer_length(k, d) <= n)
        .unwrap_or(0)
}

/// `d ≤ n - k + 1`.
pub fn singleton_max_distance(n: usize, k: usize) -> usize {
    n + 1 - k
}

/// Exact maximum distance of an `[n, 2]` LCD code, by the residue of `n` mod 6.
pub fn lcd_n2_value(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "dimension-2 value needs n >= 2, got {n}"
        )));
    }
    let bound = 2 * n / 3;
    Ok(match n % 6 {
        0 | 5 => bound - 1,
        _ => bound,
    })
}

/// Which closed form produced a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructionSource {
    /// `[n,1]` code spanned by a word of odd weight.
    OddWeightWord,
    /// `n = 6m+1`, blocks `(2m+1, 2m-1, 2m+1)`.
    Dim2SixMPlusOne,
    /// `n = 6m+2`, blocks `(2m+1, 2m, 2m+1)`.
    Dim2SixMPlusTwo,
    /// `n = 6m-2`, blocks `(2m-1, 2m, 2m-1)`.
    Dim2SixMMinusTwo,
    /// `n = 3i`, `i` odd, blocks `(i, i, i)`.
    Dim2ThreeIOdd,
    /// `n = 3i`, `i` even, blocks `(i+1, i-1, i)`.
    Dim2ThreeIEven,
    /// `n = 3i-1`, `i` even, blocks `(i-1, i-1, i+1)`.
    Dim2ThreeIMinusOne,
    /// `[I_{n-i} | T]` with a constant tail row.
    Codimension,
}

impl ConstructionSource {
    pub fn tag(self) -> &'static str {
        match self {
            ConstructionSource::OddWeightWord => "odd-weight-word",
            ConstructionSource::Dim2SixMPlusOne => "dim2:6m+1",
            ConstructionSource::Dim2SixMPlusTwo => "dim2:6m+2",
            ConstructionSource::Dim2SixMMinusTwo => "dim2:6m-2",
            ConstructionSource::Dim2ThreeIOdd => "dim2:3i,i-odd",
            ConstructionSource::Dim2ThreeIEven => "dim2:3i,i-even",
            ConstructionSource::Dim2ThreeIMinusOne => "dim2:3i-1",
            ConstructionSource::Codimension => "codim",
        }
    }
}

impl fmt::Display for ConstructionSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone)]
pub struct Construction {
    pub code: LinearCode,
    pub source: ConstructionSource,
    /// Minimum distance the construction is designed to reach.
    pub designed_distance: usize,
}

/// Block lengths of the two-row matrix
/// `[1^{i1} 1^{i2} 0^{i3} / 0^{i1} 1^{i2} 1^{i3}]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoDimBlocks {
    pub i1: usize,
    pub i2: usize,
    pub i3: usize,
}

impl TwoDimBlocks {
    pub fn n(&self) -> usize {
        self.i1 + self.i2 + self.i3
    }

    pub fn matrix(&self) -> Gf2Matrix {
        let n = self.n();
        let top = Gf2Vector::from_bits((0..n).map(|j| j < self.i1 + self.i2));
        let bottom = Gf2Vector::from_bits((0..n).map(|j| j >= self.i1));
        Gf2Matrix::from_rows(vec![top, bottom], n).expect("rows have length n")
    }

    /// Minimum weight among the two rows and their sum, when they are independent.
    pub fn distance(&self) -> usize {
        (self.i1 + self.i2)
            .min(self.i2 + self.i3)
            .min(self.i1 + self.i3)
    }
}

/// The block lengths used for length `n`, with their provenance.
pub fn n2_blocks(n: usize) -> Result<(TwoDimBlocks, ConstructionSource)> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "dimension-2 construction needs n >= 2, got {n}"
        )));
    }
    let b = |i1, i2, i3| TwoDimBlocks { i1, i2, i3 };
    Ok(match n % 6 {
        1 => {
            let m = (n - 1) / 6;
            (
                b(2 * m + 1, 2 * m - 1, 2 * m + 1),
                ConstructionSource::Dim2SixMPlusOne,
            )
        }
        2 => {
            let m = (n - 2) / 6;
            (
                b(2 * m + 1, 2 * m, 2 * m + 1),
                ConstructionSource::Dim2SixMPlusTwo,
            )
        }
        4 => {
            let m = (n + 2) / 6;
            (
                b(2 * m - 1, 2 * m, 2 * m - 1),
                ConstructionSource::Dim2SixMMinusTwo,
            )
        }
        3 => {
            let i = n / 3;
            (b(i, i, i), ConstructionSource::Dim2ThreeIOdd)
        }
        0 => {
            let i = n / 3;
            (b(i + 1, i - 1, i), ConstructionSource::Dim2ThreeIEven)
        }
        5 => {
            let i = (n + 1) / 3;
            (
                b(i - 1, i - 1, i + 1),
                ConstructionSource::Dim2ThreeIMinusOne,
            )
        }
        _ => unreachable!(),
    })
}

/// An `[n, 2]` LCD code of distance `lcd_n2_value(n)`.
pub fn construct_n2(n: usize) -> Result<Construction> {
    let (blocks, source) = n2_blocks(n)?;
    Ok(Construction {
        code: LinearCode::from_generator(blocks.matrix())?,
        source,
        designed_distance: lcd_n2_value(n)?,
    })
}

/// An `[n, 1]` LCD code of maximal distance: a word of the largest odd weight `≤ n`.
pub fn construct_k1(n: usize) -> Result<Construction> {
    if n == 0 {
        return Err(Error::Precondition("length must be positive".into()));
    }
    let d = if n % 2 == 1 { n } else { n - 1 };
    let row = Gf2Vector::from_bits((0..n).map(|j| j < d));
    Ok(Construction {
        code: LinearCode::from_generator(Gf2Matrix::from_rows(vec![row], n)?)?,
        source: ConstructionSource::OddWeightWord,
        designed_distance: d,
    })
}

/// `[I_{n-i} | T]` where every row of `T` is `1^i` (even `i`) or `1^{i-1} 0`
/// (odd `i`). Every row then has even overlap with every other row and odd
/// self-product, so `G Gᵀ = I_{n-i}`.
pub fn construct_codim(n: usize, i: usize) -> Result<Construction> {
    if i < 2 || n <= i {
        return Err(Error::Precondition(format!(
            "codimension construction needs i >= 2 and n > i, got n = {n}, i = {i}"
        )));
    }
    let k = n - i;
    let ones = if i.is_multiple_of(2) { i } else { i - 1 };
    let tail_row = Gf2Vector::from_bits((0..i).map(|j| j < ones));
    let tail = Gf2Matrix::from_rows(vec![tail_row; k], i)?;
    Ok(Construction {
        code: LinearCode::systematic(&tail),
        source: ConstructionSource::Codimension,
        designed_distance: 2,
    })
}

/// Distance cap for `[n, n-i]` codes from counting weight-≥2 rows of the
/// redundancy block: `Some(2)` once `n ≥ 2^i`, otherwise no cap.
pub fn codim_distance_cap(n: usize, i: usize) -> Option<usize> {
    assert!(i >= 2, "codimension cap stated for i >= 2");
    if i < usize::BITS as usize && n >= 1usize << i {
        Some(2)
    } else {
        None
    }
}

/// `true` when no LCD code of length `n` has minimum distance exactly `d`
/// by the parity/Griesmer argument: `n` even, `d = n - 2i`, `n ≥ 6i`; or
/// `n` odd, `d = n - 2i - 1`, `n > 6i + 3`. Pairs of the wrong parity are
/// not covered and return `false`.
pub fn lck_vanishes(n: usize, d: usize) -> bool {
    if d == 0 || d > n {
        return false;
    }
    let gap = n - d;
    if n.is_multiple_of(2) {
        gap.is_multiple_of(2) && n >= 6 * (gap / 2)
    } else {
        gap % 2 == 1 && n > 6 * ((gap - 1) / 2) + 3
    }
}
