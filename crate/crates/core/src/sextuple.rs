//! Labelled sextuples of conic parameters and their coincidence structure:
//! the partition a sextuple induces, polydiagonal membership, the open locus
//! where blow-ups are performed, and the per-symbol indeterminacy test.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::exactalg::Rational;
use crate::projgeom::{Mobius, P1Point};
use crate::symbols::{indeterminacy_partitions, Letter, LetterPerm, PascalSymbol};
use crate::Error;

/// A partition of the six letters into disjoint blocks, stored canonically:
/// blocks as letter bitmasks sorted by smallest member.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    blocks: Vec<u8>,
}

fn mask_of(letters: &[Letter]) -> u8 {
    letters.iter().fold(0u8, |m, l| m | (1 << l.index()))
}

impl Partition {
    const FULL: u8 = 0b11_1111;

    pub fn trivial() -> Self {
        Partition {
            blocks: Letter::ALL.iter().map(|l| 1 << l.index()).collect(),
        }
    }

    /// Builds a partition from disjoint blocks covering all six letters.
    pub fn new(blocks: &[Vec<Letter>]) -> Result<Self, Error> {
        let mut masks = Vec::new();
        let mut union = 0u8;
        for b in blocks {
            if b.is_empty() {
                return Err(Error::InvalidArgument("empty block".to_string()));
            }
            let m = mask_of(b);
            if (m.count_ones() as usize) != b.len() || union & m != 0 {
                return Err(Error::RepeatedLetter);
            }
            union |= m;
            masks.push(m);
        }
        if union != Self::FULL {
            return Err(Error::InvalidArgument(
                "blocks must cover all six letters".to_string(),
            ));
        }
        masks.sort_by_key(|m| m.trailing_zeros());
        Ok(Partition { blocks: masks })
    }

    /// Like [`Partition::new`] but fills in singleton blocks for any letter
    /// not mentioned.
    pub fn from_nontrivial_blocks(blocks: &[Vec<Letter>]) -> Result<Self, Error> {
        let mut all: Vec<Vec<Letter>> = blocks.to_vec();
        let covered = blocks.iter().fold(0u8, |m, b| m | mask_of(b));
        for l in Letter::ALL {
            if covered & (1 << l.index()) == 0 {
                all.push(vec![l]);
            }
        }
        Partition::new(&all)
    }

    pub fn blocks(&self) -> Vec<Vec<Letter>> {
        self.blocks
            .iter()
            .map(|&m| {
                Letter::ALL
                    .iter()
                    .copied()
                    .filter(|l| m & (1 << l.index()) != 0)
                    .collect()
            })
            .collect()
    }

    /// Block sizes as a multiset, sorted descending: the partition's type.
    pub fn ptype(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self
            .blocks
            .iter()
            .map(|m| m.count_ones() as usize)
            .collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn is_trivial(&self) -> bool {
        self.blocks.len() == 6
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn same_block(&self, x: Letter, y: Letter) -> bool {
        let mx = 1u8 << x.index();
        let my = 1u8 << y.index();
        self.blocks.iter().any(|&m| m & mx != 0 && m & my != 0)
    }

    /// Whether every block of `self` is contained in a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        self.blocks
            .iter()
            .all(|&m| other.blocks.iter().any(|&n| m & n == m))
    }

    pub fn relabel(&self, perm: LetterPerm) -> Partition {
        let blocks: Vec<Vec<Letter>> = self
            .blocks()
            .iter()
            .map(|b| b.iter().map(|&l| perm.apply(l)).collect())
            .collect();
        Partition::new(&blocks).expect("bijective relabel")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut sep = "";
        for b in self.blocks() {
            write!(f, "{sep}")?;
            for l in b {
                write!(f, "{l}")?;
            }
            sep = ".";
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses dot-separated blocks such as `"ACD.B.EF"`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let blocks: Vec<Vec<Letter>> = s
            .trim()
            .split('.')
            .map(|b| {
                b.chars()
                    .map(Letter::from_char)
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<_, _>>()?;
        Partition::new(&blocks)
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A labelled sextuple: a total map from letters to conic parameters.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Sextuple {
    values: [P1Point; 6],
}

impl Sextuple {
    pub fn new(values: [P1Point; 6]) -> Self {
        Sextuple { values }
    }

    /// Builds from affine integer parameters in letter order A..F.
    pub fn from_ints(vals: [i64; 6]) -> Self {
        Sextuple::new(vals.map(P1Point::from_int))
    }

    pub fn from_rationals(vals: [Rational; 6]) -> Self {
        Sextuple::new(vals.map(P1Point::from_rational))
    }

    pub fn get(&self, l: Letter) -> &P1Point {
        &self.values[l.index()]
    }

    pub fn values(&self) -> &[P1Point; 6] {
        &self.values
    }

    pub fn is_injective(&self) -> bool {
        theta(self).is_trivial()
    }

    pub fn has_infinite_value(&self) -> bool {
        self.values.iter().any(P1Point::is_infinity)
    }

    /// Relabels the letters: `(perm . h)(x) = h(perm^{-1}(x))`.
    pub fn relabel(&self, perm: LetterPerm) -> Sextuple {
        let inv = perm.inverse();
        Sextuple {
            values: Letter::ALL.map(|l| self.get(inv.apply(l)).clone()),
        }
    }

    /// Applies a parameter-line transformation to every value.
    pub fn mobius_transform(&self, m: &Mobius) -> Sextuple {
        Sextuple {
            values: Letter::ALL.map(|l| m.apply(self.get(l))),
        }
    }
}

impl fmt::Display for Sextuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut sep = "";
        for l in Letter::ALL {
            write!(f, "{sep}{l}={}", self.get(l))?;
            sep = ", ";
        }
        Ok(())
    }
}

impl serde::Serialize for Sextuple {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = ser.serialize_map(Some(6))?;
        for l in Letter::ALL {
            map.serialize_entry(&l.to_string(), self.get(l))?;
        }
        map.end()
    }
}

impl<'de> serde::Deserialize<'de> for Sextuple {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let map = BTreeMap::<String, P1Point>::deserialize(de)?;
        if map.len() != 6 {
            return Err(serde::de::Error::custom("expected exactly the keys A..F"));
        }
        let mut values: Vec<P1Point> = Vec::with_capacity(6);
        for l in Letter::ALL {
            match map.get(&l.to_string()) {
                Some(p) => values.push(p.clone()),
                None => return Err(serde::de::Error::custom(format!("missing letter {l}"))),
            }
        }
        Ok(Sextuple {
            values: values.try_into().expect("six values"),
        })
    }
}

/// The coincidence partition of a sextuple: letters share a block exactly
/// when they map to the same conic point.
pub fn theta(h: &Sextuple) -> Partition {
    let mut blocks: Vec<(P1Point, Vec<Letter>)> = Vec::new();
    for l in Letter::ALL {
        let v = h.get(l);
        match blocks.iter_mut().find(|(p, _)| p == v) {
            Some((_, b)) => b.push(l),
            None => blocks.push((v.clone(), vec![l])),
        }
    }
    let blocks: Vec<Vec<Letter>> = blocks.into_iter().map(|(_, b)| b).collect();
    Partition::new(&blocks).expect("grouping covers all letters")
}

/// Membership in the polydiagonal of `pi`: the sextuple is constant on each
/// block of `pi` (equivalently, `pi` refines the coincidence partition).
pub fn in_polydiagonal(h: &Sextuple, pi: &Partition) -> bool {
    pi.refines(&theta(h))
}

/// Whether the coincidence type stays inside the locus kept for blow-up:
/// everything finer than or equal to (3,1,1,1), (2,2,1,1) and (2,2,2).
pub fn in_h_circ(h: &Sextuple) -> bool {
    matches!(
        theta(h).ptype().as_slice(),
        [1, 1, 1, 1, 1, 1] | [2, 1, 1, 1, 1] | [2, 2, 1, 1] | [3, 1, 1, 1] | [2, 2, 2]
    )
}

/// Whether the Pascal of `s` is undefined at `h`: membership in any of the
/// symbol's six indeterminacy polydiagonals. Purely combinatorial.
pub fn is_indeterminate(h: &Sextuple, s: &PascalSymbol) -> bool {
    let th = theta(h);
    indeterminacy_partitions(s).iter().any(|pi| pi.refines(&th))
}

/// Searches for a rational witness that the six (pairwise distinct) values
/// are projectively equivalent to `{0, 1, inf, a, (a-1)/a, 1/(1-a)}`.
///
/// For each ordered choice of three of the six points, the unique
/// transformation sending them to 0, 1, inf is applied to the rest; the
/// witness is returned if the images match the displayed pattern under some
/// assignment. Only rational witnesses are found; irrational ones are out of
/// scope by construction.
pub fn tri_symmetric(h: &Sextuple) -> Result<Option<Rational>, Error> {
    if !h.is_injective() {
        return Err(Error::RepeatedPoints);
    }
    let vals = h.values();
    let one = Rational::one();
    for i in 0..6 {
        for j in 0..6 {
            for k in 0..6 {
                if i == j || i == k || j == k {
                    continue;
                }
                let m = Mobius::to_zero_one_inf(&vals[i], &vals[j], &vals[k])?;
                let rest: Vec<Rational> = (0..6)
                    .filter(|&r| r != i && r != j && r != k)
                    .map(|r| {
                        m.apply(&vals[r])
                            .affine()
                            .expect("images of the other points are finite")
                    })
                    .collect();
                for b1 in 0..3 {
                    let alpha = &rest[b1];
                    let beta2 = &(alpha - &one) / alpha;
                    let beta3 = one.clone() / (&one - alpha);
                    let others: Vec<&Rational> =
                        (0..3).filter(|&r| r != b1).map(|r| &rest[r]).collect();
                    if (*others[0] == beta2 && *others[1] == beta3)
                        || (*others[0] == beta3 && *others[1] == beta2)
                    {
                        return Ok(Some(alpha.clone()));
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sext(vals: [&str; 6]) -> Sextuple {
        Sextuple::new(vals.map(|s| s.parse().unwrap()))
    }

    #[test]
    fn theta_examples() {
        // h(A)=h(C)=h(D), h(E)=h(F), h(B) apart
        let h = sext(["3", "5", "3", "3", "7", "7"]);
        let th = theta(&h);
        assert_eq!(th, "ACD.B.EF".parse().unwrap());
        assert_eq!(th.ptype(), vec![3, 2, 1]);

        let inj = Sextuple::from_ints([0, 1, 2, 3, 4, 5]);
        assert!(theta(&inj).is_trivial());

        let constant = Sextuple::from_ints([9, 9, 9, 9, 9, 9]);
        assert_eq!(theta(&constant).ptype(), vec![6]);
    }

    #[test]
    fn polydiagonal_membership() {
        let h = sext(["3", "5", "3", "3", "7", "7"]); // theta = ACD.B.EF
        assert!(in_polydiagonal(&h, &"ACD.B.E.F".parse().unwrap()));
        assert!(in_polydiagonal(&h, &Partition::trivial()));
        assert!(!in_polydiagonal(&h, &"AB.C.D.E.F".parse().unwrap()));
        let inj = Sextuple::from_ints([0, 1, 2, 3, 4, 5]);
        assert!(!in_polydiagonal(&inj, &"AB.C.D.E.F".parse().unwrap()));
        assert!(in_polydiagonal(&inj, &Partition::trivial()));
    }

    #[test]
    fn h_circ_types() {
        let t222 = sext(["1", "2", "3", "3", "2", "1"]); // AF.BE.CD
        assert!(in_h_circ(&t222));
        let t321 = sext(["3", "5", "3", "3", "7", "7"]);
        assert!(!in_h_circ(&t321));
        let t411 = sext(["3", "3", "3", "3", "7", "8"]);
        assert!(!in_h_circ(&t411));
        assert!(in_h_circ(&Sextuple::from_ints([0, 1, 2, 3, 4, 5])));
    }

    #[test]
    fn indeterminacy_on_row_matched_locus() {
        // generic point of the AF.BE.CD polydiagonal
        let h = sext(["1", "2", "3", "3", "2", "1"]);
        let s1: PascalSymbol = "AED/FBC".parse().unwrap();
        let s2: PascalSymbol = "AFC/DEB".parse().unwrap();
        assert!(is_indeterminate(&h, &s1));
        assert!(!is_indeterminate(&h, &s2));
        let inj = Sextuple::from_ints([0, 1, 2, 3, 4, 5]);
        assert!(!is_indeterminate(&inj, &s1));
    }

    #[test]
    fn one_double_point_breaks_nothing() {
        let h = sext(["4", "4", "1", "2", "3", "5"]);
        for s in crate::symbols::enumerate_symbols() {
            assert!(!is_indeterminate(&h, s));
        }
    }

    #[test]
    fn theta_is_mobius_invariant() {
        let h = sext(["3", "5", "3", "inf", "7", "7"]);
        let m = Mobius::from_ints([[2, 1], [1, 1]]).unwrap();
        assert_eq!(theta(&h), theta(&h.mobius_transform(&m)));
    }

    #[test]
    fn indeterminacy_is_letter_equivariant() {
        let h = sext(["1", "2", "3", "3", "2", "1"]);
        for perm in LetterPerm::all().into_iter().step_by(53) {
            for s in crate::symbols::enumerate_symbols().iter().step_by(11) {
                assert_eq!(
                    is_indeterminate(&h.relabel(perm), &s.relabel(perm)),
                    is_indeterminate(&h, s)
                );
            }
        }
    }

    #[test]
    fn tri_symmetric_witness() {
        let h = sext(["0", "1", "inf", "2", "1/2", "-1"]);
        let alpha = tri_symmetric(&h).unwrap().expect("witness exists");
        // the witness generates the orbit: {a, (a-1)/a, 1/(1-a)} matches
        let one = Rational::one();
        let b2 = &(&alpha - &one) / &alpha;
        let b3 = one.clone() / (&one - &alpha);
        let orbit = [alpha.clone(), b2, b3];
        for v in orbit {
            assert!(
                h.values().contains(&P1Point::from_rational(v.clone()))
                    || v == Rational::zero()
                    || v == Rational::one()
            );
        }
    }

    #[test]
    fn tri_symmetric_negative_and_error() {
        let h = sext(["0", "1", "inf", "5", "7", "11"]);
        assert!(tri_symmetric(&h).unwrap().is_none());
        let rep = sext(["0", "0", "1", "2", "3", "4"]);
        assert!(tri_symmetric(&rep).is_err());
    }

    #[test]
    fn tri_symmetric_is_projective() {
        let h = sext(["0", "1", "inf", "2", "1/2", "-1"]);
        let m = Mobius::from_ints([[3, 1], [1, 2]]).unwrap();
        let img = h.mobius_transform(&m);
        assert!(tri_symmetric(&img).unwrap().is_some());
    }

    #[test]
    fn sextuple_json_round_trip() {
        let h = sext(["3", "3", "1/2", "inf", "7", "4"]);
        let js = serde_json::to_string(&h).unwrap();
        assert_eq!(
            js,
            r#"{"A":"3","B":"3","C":"1/2","D":"inf","E":"7","F":"4"}"#
        );
        let back: Sextuple = serde_json::from_str(&js).unwrap();
        assert_eq!(back, h);
        assert!(serde_json::from_str::<Sextuple>(r#"{"A":"3"}"#).is_err());
        assert!(serde_json::from_str::<Sextuple>(
            r#"{"A":"3//4","B":"1","C":"2","D":"3","E":"4","F":"5"}"#
        )
        .is_err());
    }
}
