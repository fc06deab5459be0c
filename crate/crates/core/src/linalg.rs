//! Exact linear algebra over the rationals.
//!
//! Vectors are sparse maps from coordinate index to `BigRational`; a [`Span`]
//! keeps an incrementally row-reduced basis so that rank growth, membership
//! and solving all stay exact. Small dense integer matrices get a
//! fraction-free rank routine.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

pub type Rat = BigRational;

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Sparse exact vector; absent keys are zero.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SparseVec {
    pub entries: BTreeMap<usize, Rat>,
}

impl SparseVec {
    pub fn zero() -> Self {
        SparseVec::default()
    }

    pub fn unit(index: usize) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(index, Rat::one());
        SparseVec { entries }
    }

    pub fn from_integer_entries(it: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut v = SparseVec::zero();
        for (k, c) in it {
            v.add_scaled_unit(k, rat_int(c));
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn leading(&self) -> Option<(usize, &Rat)> {
        self.entries.iter().next().map(|(k, v)| (*k, v))
    }

    pub fn add_scaled_unit(&mut self, index: usize, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.entries.entry(index).or_insert_with(Rat::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.entries.remove(&index);
        }
    }

    /// self += c * other
    pub fn add_scaled(&mut self, other: &SparseVec, c: &Rat) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.entries {
            self.add_scaled_unit(*k, v * c);
        }
    }

    pub fn scale(&mut self, c: &Rat) {
        if c.is_zero() {
            self.entries.clear();
            return;
        }
        for v in self.entries.values_mut() {
            *v *= c;
        }
    }

    pub fn get(&self, index: usize) -> Rat {
        self.entries.get(&index).cloned().unwrap_or_else(Rat::zero)
    }
}

/// Row-reduced spanning set. Each stored row has a distinct pivot (its least
/// nonzero coordinate) normalized to 1, and every row is reduced against the
/// others, so insertion order never changes the span's answers.
#[derive(Debug, Clone, Default)]
pub struct Span {
    rows: BTreeMap<usize, SparseVec>,
}

impl Span {
    pub fn new() -> Self {
        Span::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Residual of `v` after subtracting its projection on the span.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        loop {
            let Some((lead, _)) = v.leading() else {
                return v;
            };
            let Some(row) = self.rows.get(&lead) else {
                // No pivot at the leading coordinate: later pivots cannot
                // touch earlier coordinates, but may still shrink the tail.
                let mut reduced = v.clone();
                for (pivot, row) in self.rows.range(lead + 1..) {
                    let c = reduced.get(*pivot);
                    if !c.is_zero() {
                        reduced.add_scaled(row, &(-c));
                    }
                }
                return reduced;
            };
            let c = v.get(lead);
            v.add_scaled(row, &(-c));
        }
    }

    /// Insert `v`; returns true when the span grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        self.insert_returning_pivot(v).is_some()
    }

    /// Insert `v`, returning the pivot coordinate of the stored row when the
    /// span grew.
    pub fn insert_returning_pivot(&mut self, v: SparseVec) -> Option<usize> {
        let mut r = self.reduce(v);
        let Some((pivot, lead)) = r.leading().map(|(k, c)| (k, c.clone())) else {
            return None;
        };
        let inv = Rat::one() / lead;
        r.scale(&inv);
        // Keep earlier rows reduced against the new pivot.
        let mut updates = Vec::new();
        for (p, row) in &self.rows {
            let c = row.get(pivot);
            if !c.is_zero() {
                let mut row = row.clone();
                row.add_scaled(&r, &(-c));
                updates.push((*p, row));
            }
        }
        for (p, row) in updates {
            self.rows.insert(p, row);
        }
        self.rows.insert(pivot, r);
        Some(pivot)
    }

    /// The stored (reduced, normalized) row with the given pivot, if any.
    pub fn row(&self, pivot: usize) -> Option<&SparseVec> {
        self.rows.get(&pivot)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }
}

/// Solve `sum_j x_j * columns[j] = target` exactly; returns any solution.
pub fn solve(columns: &[SparseVec], target: &SparseVec) -> Option<Vec<Rat>> {
    // Gaussian elimination on the augmented system, tracking the combination
    // of input columns forming each reduced row.
    struct AugRow {
        vec: SparseVec,
        combo: Vec<Rat>,
    }
    let n = columns.len();
    let mut rows: Vec<AugRow> = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        let mut combo = vec![Rat::zero(); n];
        combo[j] = Rat::one();
        rows.push(AugRow {
            vec: col.clone(),
            combo,
        });
    }
    let mut pivots: Vec<AugRow> = Vec::new();
    for mut row in rows {
        for p in &pivots {
            let (lead, _) = p.vec.leading().expect("pivot rows are nonzero");
            let c = row.vec.get(lead);
            if !c.is_zero() {
                let neg = -c;
                row.vec.add_scaled(&p.vec, &neg);
                for (a, b) in row.combo.iter_mut().zip(&p.combo) {
                    *a += &neg * b;
                }
            }
        }
        if let Some((_, lead)) = row.vec.leading().map(|(k, c)| (k, c.clone())) {
            let inv = Rat::one() / lead;
            row.vec.scale(&inv);
            for a in row.combo.iter_mut() {
                *a *= &inv;
            }
            pivots.push(row);
            pivots.sort_by_key(|r| r.vec.leading().map(|(k, _)| k));
        }
    }
    // Reduce the target.
    let mut t = target.clone();
    let mut combo = vec![Rat::zero(); n];
    for p in &pivots {
        let (lead, _) = p.vec.leading().expect("pivot rows are nonzero");
        let c = t.get(lead);
        if !c.is_zero() {
            let neg = -c.clone();
            t.add_scaled(&p.vec, &neg);
            for (a, b) in combo.iter_mut().zip(&p.combo) {
                *a += &c * b;
            }
        }
    }
    if t.is_zero() {
        Some(combo)
    } else {
        None
    }
}

/// Rank of an integer matrix, exact.
pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    let mut work: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let ncols = work.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut col = 0;
    while col < ncols && rank < work.len() {
        let Some(pivot_row) = (rank..work.len()).find(|&r| !work[r][col].is_zero()) else {
            col += 1;
            continue;
        };
        work.swap(rank, pivot_row);
        let pivot = work[rank][col].clone();
        for r in rank + 1..work.len() {
            if work[r][col].is_zero() {
                continue;
            }
            let factor = work[r][col].clone();
            for c in col..ncols {
                let v = &work[r][c] * &pivot - &work[rank][c] * &factor;
                work[r][c] = v;
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// Dimension of the affine hull of a point set (rank of differences).
pub fn affine_rank_i64(points: &[Vec<i64>]) -> usize {
    let Some(base) = points.first() else {
        return 0;
    };
    let diffs: Vec<Vec<i64>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    rank_i64(&diffs)
}
