//! The tableau crystal of shape `m * omega_i` for `sl_{n+1}`: Kashiwara
//! operators via the signature rule, Demazure crystals generated by f-strings
//! along a reduced word, and the operator map from Gelfand-Tsetlin points.
//!
//! Reading convention: columns right to left, each column top to bottom
//! (far-eastern reading). For the operator index `k`, a letter `k` is an
//! opening sign and `k+1` a closing sign; after cancelling matched pairs,
//! `f_k` raises the leftmost surviving opener and `e_k` lowers the rightmost
//! surviving closer. The convention is pinned executably: the operator map
//! from GT points must be total and bijective (see tests).

use crate::error::Error;
use crate::gt::GTPattern;
use crate::weight::{Character, Weight};
use crate::weyl::ReducedWord;
use crate::Result;
use serde::Serialize;
use std::collections::BTreeSet;

/// A column-strict rectangular tableau: `m` columns of height `i`, strictly
/// increasing down each column, weakly increasing along rows.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Tableau {
    pub columns: Vec<Vec<usize>>,
}

impl Tableau {
    /// The highest tableau `b_{m omega_i}`: every column is `1..=i`.
    pub fn highest(i: usize, m: usize) -> Tableau {
        Tableau {
            columns: vec![(1..=i).collect(); m],
        }
    }

    pub fn height(&self) -> usize {
        self.columns.first().map_or(0, |c| c.len())
    }

    pub fn width(&self) -> usize {
        self.columns.len()
    }

    pub fn is_semistandard(&self, n: usize) -> bool {
        let h = self.height();
        for col in &self.columns {
            if col.len() != h || col.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            if col.iter().any(|&v| v < 1 || v > n + 1) {
                return false;
            }
        }
        for pair in self.columns.windows(2) {
            for r in 0..h {
                if pair[0][r] > pair[1][r] {
                    return false;
                }
            }
        }
        true
    }

    /// Far-eastern reading with cell provenance: columns right to left, top
    /// to bottom.
    fn reading(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::with_capacity(self.width() * self.height());
        for c in (0..self.width()).rev() {
            for r in 0..self.height() {
                out.push((self.columns[c][r], c, r));
            }
        }
        out
    }

    /// Content weight in epsilon-coordinates, normalized.
    pub fn weight(&self, n: usize) -> Weight {
        let mut coords = vec![0i64; n + 1];
        for col in &self.columns {
            for &v in col {
                coords[v - 1] += 1;
            }
        }
        Weight::from_raw(coords)
    }
}

fn signature(t: &Tableau, k: usize) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
    // Returns (surviving openers, surviving closers) as cell coordinates in
    // reading order.
    let mut opens: Vec<(usize, usize)> = Vec::new();
    let mut closes: Vec<(usize, usize)> = Vec::new();
    for (letter, c, r) in t.reading() {
        if letter == k {
            opens.push((c, r));
        } else if letter == k + 1 {
            if opens.is_empty() {
                closes.push((c, r));
            } else {
                opens.pop();
            }
        }
    }
    (opens, closes)
}

/// Kashiwara lowering operator `f_k`; `None` when it vanishes.
pub fn crystal_f(t: &Tableau, k: usize, n: usize) -> Option<Tableau> {
    assert!(k >= 1 && k <= n, "operator index out of range");
    let (opens, _) = signature(t, k);
    let &(c, r) = opens.first()?;
    let mut out = t.clone();
    out.columns[c][r] = k + 1;
    assert!(
        out.is_semistandard(n),
        "f_{k} broke semistandardness on {t:?}"
    );
    Some(out)
}

/// Kashiwara raising operator `e_k`; inverse to `f_k` where defined.
pub fn crystal_e(t: &Tableau, k: usize, n: usize) -> Option<Tableau> {
    assert!(k >= 1 && k <= n, "operator index out of range");
    let (_, closes) = signature(t, k);
    let &(c, r) = closes.last()?;
    let mut out = t.clone();
    out.columns[c][r] = k;
    assert!(
        out.is_semistandard(n),
        "e_{k} broke semistandardness on {t:?}"
    );
    Some(out)
}

/// A Demazure crystal: the elements reachable from the highest tableau by
/// f-strings along a reduced word, rightmost letter first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DemazureCrystal {
    pub elements: BTreeSet<Tableau>,
}

impl DemazureCrystal {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn character(&self, n: usize) -> Character {
        Character::from_weights(self.elements.iter().map(|t| t.weight(n)))
    }
}

/// Generate `T_w(m omega_i)` by sweeping f-strings over the letters of a
/// reduced word from right to left.
pub fn demazure_crystal(
    word: &ReducedWord,
    n: usize,
    i: usize,
    m: usize,
) -> Result<DemazureCrystal> {
    if word.letters.iter().any(|&k| k < 1 || k > n) {
        return Err(Error::InvalidArgument(format!(
            "word letters must lie in 1..={n}: {:?}",
            word.letters
        )));
    }
    if word.evaluate(n + 1).coxeter_length() != word.len() {
        return Err(Error::NotReduced(word.letters.clone()));
    }
    let mut set: BTreeSet<Tableau> = BTreeSet::from([Tableau::highest(i, m)]);
    for &k in word.letters.iter().rev() {
        let mut next = set.clone();
        for t in &set {
            let mut cur = t.clone();
            while let Some(fd) = crystal_f(&cur, k, n) {
                next.insert(fd.clone());
                cur = fd;
            }
        }
        set = next;
    }
    Ok(DemazureCrystal { elements: set })
}

/// The operator product attached to a Gelfand-Tsetlin point of
/// `GT(m omega_{n+1-i})`, applied to the highest tableau of shape
/// `m omega_i`.
///
/// Resolved indexing (pinned by requiring a total weight-preserving
/// bijection onto the tableaux, checked exhaustively at small rank): the
/// operator word is `(s_n)(s_{n-1} s_n) ... (s_1 ... s_n)` read as a
/// composition, so brackets act for `r = n` down to `1` and inside bracket
/// `r` the letters run `j = n` down to `n+1-r`; the power of `f_j` there is
/// the prefix-sum gap of pattern rows `n-r` and `n-r+1` up to column
/// `n+1-j`. Interlacing keeps every exponent nonnegative, and restricted to
/// a maximal Kogan face the image is exactly the Demazure crystal.
///
/// Any vanishing application is a convention bug, never bad data.
pub fn a_s_map(p: &GTPattern, i: usize, m: i64) -> Result<Tableau> {
    let n = p.n();
    if !p.is_valid(n, i, m) {
        return Err(Error::InvalidArgument(
            "pattern is not a lattice point of the rectangular GT polytope".into(),
        ));
    }
    let mut t = Tableau::highest(i, m as usize);
    for r in (1..=n).rev() {
        let upper = n - r;
        for j in (n + 1 - r..=n).rev() {
            let exponent: i64 = (1..=n + 1 - j)
                .map(|c| p.entry(upper, c) - p.entry(upper + 1, c))
                .sum();
            for _ in 0..exponent {
                t = crystal_f(&t, j, n).ok_or_else(|| {
                    Error::ConventionViolation(format!(
                        "f_{j} vanished while decoding pattern {p:?}"
                    ))
                })?;
            }
        }
    }
    Ok(t)
}

/// Character of any tableau collection.
pub fn char_of<'a>(tableaux: impl IntoIterator<Item = &'a Tableau>, n: usize) -> Character {
    Character::from_weights(tableaux.into_iter().map(|t| t.weight(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gt::{face_lattice_points, gt_lattice_points, maximal_kogan_face};
    use crate::weyl::Permutation;

    fn col(entries: &[usize]) -> Tableau {
        Tableau {
            columns: vec![entries.to_vec()],
        }
    }

    #[test]
    fn single_column_operators() {
        // n = 3, i = 2 single columns.
        assert_eq!(crystal_f(&col(&[1, 2]), 2, 3), Some(col(&[1, 3])));
        assert_eq!(crystal_f(&col(&[1, 2]), 1, 3), None);
        assert_eq!(crystal_f(&col(&[1, 3]), 1, 3), Some(col(&[2, 3])));
        assert_eq!(crystal_f(&col(&[1, 3]), 3, 3), Some(col(&[1, 4])));
    }

    #[test]
    fn e_inverts_f() {
        let n = 3;
        for t in gt_lattice_points(3, 2, 1)
            .iter()
            .map(|p| a_s_map(p, 2, 1).unwrap())
        {
            for k in 1..=n {
                if let Some(ft) = crystal_f(&t, k, n) {
                    assert_eq!(crystal_e(&ft, k, n), Some(t.clone()));
                }
            }
        }
    }

    #[test]
    fn intro_demazure_crystal() {
        let word = ReducedWord {
            letters: vec![1, 3, 2],
        };
        let dc = demazure_crystal(&word, 3, 2, 1).unwrap();
        let expect: BTreeSet<Tableau> = [
            col(&[1, 2]),
            col(&[1, 3]),
            col(&[1, 4]),
            col(&[2, 3]),
            col(&[2, 4]),
        ]
        .into_iter()
        .collect();
        assert_eq!(dc.elements, expect);

        let empty = demazure_crystal(&ReducedWord { letters: vec![] }, 3, 2, 1).unwrap();
        assert_eq!(empty.elements, BTreeSet::from([col(&[1, 2])]));

        let full = demazure_crystal(
            &ReducedWord {
                letters: vec![2, 1, 3, 2],
            },
            3,
            2,
            1,
        )
        .unwrap();
        assert_eq!(full.len(), 6);

        let not_reduced = ReducedWord {
            letters: vec![1, 1],
        };
        assert!(demazure_crystal(&not_reduced, 3, 2, 1).is_err());
    }

    #[test]
    fn a_s_is_a_weight_preserving_bijection_on_gt_omega2() {
        let pts = gt_lattice_points(3, 2, 1);
        assert_eq!(pts.len(), 6);
        let mut images = BTreeSet::new();
        for p in &pts {
            let t = a_s_map(p, 2, 1).unwrap();
            assert_eq!(p.weight(), t.weight(3), "weights must agree for {p:?}");
            images.insert(t);
        }
        assert_eq!(images.len(), 6);
    }

    #[test]
    fn all_max_pattern_maps_to_highest() {
        let pts = gt_lattice_points(3, 2, 2);
        let top: Vec<&GTPattern> = pts
            .iter()
            .filter(|p| a_s_map(p, 2, 2).unwrap() == Tableau::highest(2, 2))
            .collect();
        assert_eq!(top.len(), 1);
        // The preimage is the pattern with every unpinned entry at m.
        let all_max = top[0];
        assert_eq!(all_max.weight().coords(), &[2, 2, 0, 0]);
    }

    #[test]
    fn face_points_map_onto_demazure_crystal() {
        let tau = Permutation::simple_reflection(4, 2);
        let face = maximal_kogan_face(&tau, 3, 2, 1).unwrap();
        let images: BTreeSet<Tableau> = face_lattice_points(&face)
            .iter()
            .map(|p| a_s_map(p, 2, 1).unwrap())
            .collect();
        let dc = demazure_crystal(
            &ReducedWord {
                letters: vec![1, 3, 2],
            },
            3,
            2,
            1,
        )
        .unwrap();
        assert_eq!(images, dc.elements);
    }

    #[test]
    fn demazure_crystal_is_word_independent() {
        use crate::poset::LSequence;
        use crate::weyl::{reduced_words, word_of_ell};
        for n in 2..=3usize {
            for i in 1..=n {
                for ell in LSequence::enumerate_for_i(i, n) {
                    let (_, w) = word_of_ell(&ell);
                    let words = reduced_words(&w);
                    for m in 1..=2usize {
                        let reference = demazure_crystal(
                            &ReducedWord {
                                letters: words[0].clone(),
                            },
                            n,
                            i,
                            m,
                        )
                        .unwrap();
                        for letters in &words[1..] {
                            let other = demazure_crystal(
                                &ReducedWord {
                                    letters: letters.clone(),
                                },
                                n,
                                i,
                                m,
                            )
                            .unwrap();
                            assert_eq!(
                                reference.elements, other.elements,
                                "word dependence at {ell:?}, words {words:?}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn reduced_word_enumeration_matches_anchor() {
        use crate::weyl::{evaluate_word, reduced_words};
        let w = evaluate_word(&[1, 3, 2], 4);
        assert_eq!(reduced_words(&w), vec![vec![1, 3, 2], vec![3, 1, 2]]);
    }

    #[test]
    fn characters() {
        let dc = demazure_crystal(
            &ReducedWord {
                letters: vec![1, 3, 2],
            },
            3,
            2,
            1,
        )
        .unwrap();
        let ch = dc.character(3);
        assert_eq!(ch.total(), 5);
        let highest_only = char_of([Tableau::highest(2, 1)].iter(), 3);
        assert_eq!(
            highest_only.terms().keys().next().unwrap().coords(),
            &[1, 1, 0, 0]
        );
        let full = demazure_crystal(
            &ReducedWord {
                letters: vec![2, 1, 3, 2],
            },
            3,
            2,
            1,
        )
        .unwrap();
        assert_eq!(full.character(3).terms().len(), 6);
    }
}
