//! Evaluation of Pascal lines at blow-up fiber points via t-adic arc limits.
//!
//! Over a base sextuple whose coincidence type is (3,1,1,1), (2,2,1,1) or
//! (2,2,2), the undefined Pascals extend to the exceptional fibers of the
//! two-stage blow-up. Rather than materializing the blow-up, a fiber point is
//! evaluated by substituting a polynomial arc through it into the line
//! formula, cancelling the common power of t, and reading the limit at t = 0.
//! The limit depends only on the fiber point; arc-robustness tests enforce
//! the identification.
//!
//! Fiber coordinate charts are fixed by the anchor convention: within each
//! block of the coincidence partition the alphabetically first letter is the
//! anchor, deviations are (non-anchor minus anchor) ordered alphabetically,
//! and blocks are ordered by anchor. For a base with coincidences AF.BE.CD
//! this gives the correspondence (f-a, e-b, d-c) -> (q1, q2, q3), which is
//! exactly the chart in which the row-matched worked examples are stated.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::exactalg::{t_strip, Rational, UniPoly};
use crate::pascal::formula::{pascal_formula, SLOTS, VARS};
use crate::projgeom::{finitizing_mobius, induced_plane_map, PlaneMap, ProjLine};
use crate::sextuple::{is_indeterminate, theta, Sextuple};
use crate::symbols::{Letter, PascalGrid, PascalSymbol};
use crate::Error;

/// A marked point of the (2,2,2) fiber plane, named by the two coincidence
/// blocks that stay merged there (e.g. `AF.BE`). The exceptional line of the
/// second blow-up over it carries the `LLine222` fiber coordinates.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct MarkedPoint {
    pairs: [[Letter; 2]; 2],
}

impl MarkedPoint {
    pub fn new(mut pairs: [[Letter; 2]; 2]) -> Result<Self, Error> {
        for p in &mut pairs {
            p.sort();
            if p[0] == p[1] {
                return Err(Error::RepeatedLetter);
            }
        }
        pairs.sort();
        if pairs[0].contains(&pairs[1][0]) || pairs[0].contains(&pairs[1][1]) {
            return Err(Error::RepeatedLetter);
        }
        Ok(MarkedPoint { pairs })
    }

    /// The two merged blocks, ordered by anchor letter.
    pub fn pairs(&self) -> &[[Letter; 2]; 2] {
        &self.pairs
    }
}

impl fmt::Display for MarkedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}.{}{}",
            self.pairs[0][0], self.pairs[0][1], self.pairs[1][0], self.pairs[1][1]
        )
    }
}

impl FromStr for MarkedPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let (x, y) = s
            .trim()
            .split_once('.')
            .ok_or_else(|| Error::Parse(format!("invalid marked point `{s}`")))?;
        let pair = |p: &str| -> Result<[Letter; 2], Error> {
            let cs: Vec<char> = p.chars().collect();
            if cs.len() != 2 {
                return Err(Error::Parse(format!("invalid block `{p}`")));
            }
            Ok([Letter::from_char(cs[0])?, Letter::from_char(cs[1])?])
        };
        MarkedPoint::new([pair(x)?, pair(y)?])
    }
}

impl Serialize for MarkedPoint {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for MarkedPoint {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        String::deserialize(de)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// A point of the exceptional fiber over a degenerate base.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FiberPoint {
    /// P^1 fiber direction for coincidence types (3,1,1,1) and (2,2,1,1).
    #[serde(rename = "codim2")]
    Codim2 { coords: [Rational; 2] },
    /// Interior point of the (2,2,2) fiber plane, excluding the three
    /// coordinate (marked) points.
    #[serde(rename = "interior222")]
    Interior222 { coords: [Rational; 3] },
    /// Point of the exceptional line replacing a marked point.
    #[serde(rename = "lline222")]
    LLine222 {
        marked: MarkedPoint,
        coords: [Rational; 2],
    },
}

impl FiberPoint {
    pub fn codim2(c0: Rational, c1: Rational) -> Self {
        FiberPoint::Codim2 { coords: [c0, c1] }
    }

    pub fn interior(q1: Rational, q2: Rational, q3: Rational) -> Self {
        FiberPoint::Interior222 {
            coords: [q1, q2, q3],
        }
    }

    /// Scales the homogeneous fiber data; the evaluated line must not change.
    pub fn scaled(&self, lambda: &Rational) -> Self {
        match self {
            FiberPoint::Codim2 { coords } => FiberPoint::Codim2 {
                coords: [&coords[0] * lambda, &coords[1] * lambda],
            },
            FiberPoint::Interior222 { coords } => FiberPoint::Interior222 {
                coords: [
                    &coords[0] * lambda,
                    &coords[1] * lambda,
                    &coords[2] * lambda,
                ],
            },
            FiberPoint::LLine222 { marked, coords } => FiberPoint::LLine222 {
                marked: *marked,
                coords: [&coords[0] * lambda, &coords[1] * lambda],
            },
        }
    }
}

/// A degenerate sextuple together with a symbol undefined there and a point
/// of the blow-up fiber at which to evaluate the resolved Pascal.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DegenerationSpec {
    pub base: Sextuple,
    pub symbol: PascalSymbol,
    pub fiber: FiberPoint,
}

impl DegenerationSpec {
    pub fn new(base: Sextuple, symbol: PascalSymbol, fiber: FiberPoint) -> Self {
        DegenerationSpec {
            base,
            symbol,
            fiber,
        }
    }

    /// Checks the base type, symbol indeterminacy and fiber shape.
    pub fn validate(&self) -> Result<(), Error> {
        let ty = theta(&self.base).ptype();
        match (ty.as_slice(), &self.fiber) {
            ([3, 1, 1, 1] | [2, 2, 1, 1], FiberPoint::Codim2 { coords }) => {
                if coords.iter().all(Rational::is_zero) {
                    return Err(Error::InvalidSpec("zero fiber pair".to_string()));
                }
            }
            ([3, 1, 1, 1] | [2, 2, 1, 1], _) => {
                return Err(Error::InvalidSpec(
                    "codimension-two base needs a codim2 fiber pair".to_string(),
                ));
            }
            ([2, 2, 2], FiberPoint::Interior222 { coords }) => {
                let nonzero = coords.iter().filter(|c| !c.is_zero()).count();
                match nonzero {
                    0 => return Err(Error::InvalidSpec("zero fiber triple".to_string())),
                    1 => return Err(Error::MarkedPoint),
                    _ => {}
                }
            }
            ([2, 2, 2], FiberPoint::LLine222 { marked, coords }) => {
                if coords.iter().all(Rational::is_zero) {
                    return Err(Error::InvalidSpec("zero fiber pair".to_string()));
                }
                let th = theta(&self.base);
                for pair in marked.pairs() {
                    if !th.same_block(pair[0], pair[1]) {
                        return Err(Error::InvalidSpec(format!(
                            "marked point {marked} does not name blocks of the base coincidence"
                        )));
                    }
                }
            }
            ([2, 2, 2], FiberPoint::Codim2 { .. }) => {
                return Err(Error::InvalidSpec(
                    "row-matched base needs an interior222 or lline222 fiber".to_string(),
                ));
            }
            _ => {
                return Err(Error::InvalidSpec(format!(
                    "base coincidence type {ty:?} is not blown up; \
                     expected (3,1,1,1), (2,2,1,1) or (2,2,2)"
                )));
            }
        }
        if !is_indeterminate(&self.base, &self.symbol) {
            return Err(Error::InvalidSpec(format!(
                "the Pascal of {} is already defined at the base",
                self.symbol
            )));
        }
        Ok(())
    }

    /// An equivalent spec with all base parameters finite, plus the plane map
    /// whose pull-back carries the evaluated line home. Fiber coordinates of
    /// a base containing `inf` are read in the chart of the conjugated
    /// (finite) base, since affine deviations are meaningless at infinity.
    pub fn finite_form(&self) -> (DegenerationSpec, Option<PlaneMap>) {
        match finitizing_mobius(self.base.values()) {
            None => (self.clone(), None),
            Some(m) => {
                let spec = DegenerationSpec {
                    base: self.base.mobius_transform(&m),
                    symbol: self.symbol,
                    fiber: self.fiber.clone(),
                };
                (spec, Some(induced_plane_map(&m)))
            }
        }
    }

    /// The polynomial arc through the fiber point, one entry per letter:
    /// anchors and singletons stay constant; non-anchor deviations carry the
    /// fiber coordinates on t (or t^2 on the merged blocks of an L-line
    /// point, with the remaining deviation on t).
    pub fn arcs(&self) -> Result<BTreeMap<Letter, UniPoly>, Error> {
        self.validate()?;
        let anchor_value = |block: &[Letter]| -> Result<Rational, Error> {
            self.base.get(block[0]).affine().ok_or_else(|| {
                Error::InvalidSpec(
                    "arcs need finite base values; conjugate to finite position first".to_string(),
                )
            })
        };
        let mut arcs: BTreeMap<Letter, UniPoly> = BTreeMap::new();
        for l in Letter::ALL {
            let v = self.base.get(l).affine().ok_or_else(|| {
                Error::InvalidSpec(
                    "arcs need finite base values; conjugate to finite position first".to_string(),
                )
            })?;
            arcs.insert(l, UniPoly::constant(v));
        }
        let th = theta(&self.base);
        let blocks: Vec<Vec<Letter>> = th.blocks().into_iter().filter(|b| b.len() > 1).collect();
        let mut deviate = |letter: Letter, coeff: &Rational, power: usize| {
            let base = arcs[&letter].clone();
            arcs.insert(letter, &base + &UniPoly::term(coeff.clone(), power));
        };
        match &self.fiber {
            FiberPoint::Codim2 { coords } => match blocks.as_slice() {
                [triple] => {
                    let _ = anchor_value(triple)?;
                    deviate(triple[1], &coords[0], 1);
                    deviate(triple[2], &coords[1], 1);
                }
                [first, second] => {
                    deviate(first[1], &coords[0], 1);
                    deviate(second[1], &coords[1], 1);
                }
                _ => unreachable!("validated codimension-two base"),
            },
            FiberPoint::Interior222 { coords } => {
                for (block, q) in blocks.iter().zip(coords) {
                    deviate(block[1], q, 1);
                }
            }
            FiberPoint::LLine222 { marked, coords } => {
                for (pair, r) in marked.pairs().iter().zip(coords) {
                    deviate(pair[1], r, 2);
                }
                let remaining = blocks
                    .iter()
                    .find(|b| marked.pairs().iter().all(|p| p[0] != b[0]))
                    .expect("three blocks, two marked");
                deviate(remaining[1], &Rational::one(), 1);
            }
        }
        Ok(arcs)
    }
}

/// Substitutes per-letter arcs into the line formula through a specific
/// representative grid, strips the common power of t, and projectivizes the
/// limit. The result is independent of the representative.
pub fn limit_line_for_grid(
    arcs: &BTreeMap<Letter, UniPoly>,
    grid: &PascalGrid,
) -> Result<ProjLine, Error> {
    let mut bind = BTreeMap::new();
    for (i, var) in VARS.iter().enumerate() {
        let (r, c) = SLOTS[i];
        let letter = grid.rows[r][c];
        let arc = arcs
            .get(&letter)
            .ok_or_else(|| Error::InvalidArgument(format!("no arc for letter {letter}")))?;
        bind.insert(var.to_string(), arc.to_multipoly("t"));
    }
    let polys = pascal_formula().affine_polys();
    let triple: [UniPoly; 3] = [
        polys[0].substitute(&bind).to_unipoly("t")?,
        polys[1].substitute(&bind).to_unipoly("t")?,
        polys[2].substitute(&bind).to_unipoly("t")?,
    ];
    let (_, limit) = t_strip(&triple)?;
    ProjLine::new(limit).map_err(|_| Error::IndeterminateLimit)
}

/// Limit of the Pascal of `symbol` along the given arcs.
pub fn pascal_limit(
    arcs: &BTreeMap<Letter, UniPoly>,
    symbol: &PascalSymbol,
) -> Result<ProjLine, Error> {
    limit_line_for_grid(arcs, symbol.canonical_grid())
}

/// The value of the resolved Pascal morphism at a blow-up fiber point.
pub fn degenerate_pascal(spec: &DegenerationSpec) -> Result<ProjLine, Error> {
    spec.validate()?;
    let (finite, back) = spec.finite_form();
    let arcs = finite.arcs()?;
    let line = pascal_limit(&arcs, &finite.symbol)?;
    Ok(match back {
        Some(n) => n.pull_back_line(&line),
        None => line,
    })
}
