//! Classification of the sixty Pascals over a row-matched (2,2,2) base.
//!
//! With coincidences A=F, B=E, C=D at three distinct conic points P, Q, R,
//! every symbol's resolved Pascal map on the blow-up fiber is one of:
//! constant (a chord, a perspectivity connector, or the perspectivity axis),
//! a pencil through one of the base points, or surjective onto the dual
//! plane. The decision is made by exact sampling of interior fiber points
//! plus a rank computation, and cross-checked against the combinatorial
//! column pattern of the symbol; any disagreement is an internal error.

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::exactalg::Rational;
use crate::linalg;
use crate::pascal::degeneration::{degenerate_pascal, DegenerationSpec, FiberPoint};
use crate::pascal::eval_pascal;
use crate::projgeom::{join, meet, polar_triangle, tau, P1Point, ProjLine, ProjPoint};
use crate::sextuple::Sextuple;
use crate::symbols::{enumerate_symbols, Letter, PascalSymbol};
use crate::Error;

/// Index names for the three base points.
const POINT_NAMES: [&str; 3] = ["P", "Q", "R"];

/// Which constant line a symbol's Pascal is stuck at.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConstantKind {
    /// Chord between base points i and j (i < j).
    Chord(usize, usize),
    /// Connector from base point i to the opposite pole (the line xx').
    Perspective(usize),
    /// The perspectivity axis of the polar triangle.
    ChLine,
}

/// The behaviour of one symbol's resolved Pascal map on the fiber.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SymbolClass {
    Constant {
        kind: ConstantKind,
        line: ProjLine,
    },
    Pencil {
        center_index: usize,
        center: ProjPoint,
    },
    Surjective,
}

/// Prediction of [`SymbolClass`] from the column pattern alone.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PatternClass {
    Chord(usize, usize),
    Perspective(usize),
    ChLine,
    Pencil(usize),
    Surjective,
}

impl SymbolClass {
    /// Structural agreement with a pattern prediction.
    pub fn matches_pattern(&self, p: PatternClass) -> bool {
        match (self, p) {
            (
                SymbolClass::Constant {
                    kind: ConstantKind::Chord(a, b),
                    ..
                },
                PatternClass::Chord(x, y),
            ) => (*a, *b) == (x, y),
            (
                SymbolClass::Constant {
                    kind: ConstantKind::Perspective(a),
                    ..
                },
                PatternClass::Perspective(x),
            ) => *a == x,
            (
                SymbolClass::Constant {
                    kind: ConstantKind::ChLine,
                    ..
                },
                PatternClass::ChLine,
            ) => true,
            (SymbolClass::Pencil { center_index, .. }, PatternClass::Pencil(x)) => {
                *center_index == x
            }
            (SymbolClass::Surjective, PatternClass::Surjective) => true,
            _ => false,
        }
    }
}

impl Serialize for SymbolClass {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self {
            SymbolClass::Constant { kind, line } => {
                let mut st = ser.serialize_struct("SymbolClass", 3)?;
                st.serialize_field("class", "constant")?;
                match kind {
                    ConstantKind::Chord(i, j) => {
                        st.serialize_field(
                            "kind",
                            &format!("chord {}{}", POINT_NAMES[*i], POINT_NAMES[*j]),
                        )?;
                    }
                    ConstantKind::Perspective(i) => {
                        st.serialize_field(
                            "kind",
                            &format!("perspective-line {0}{0}'", POINT_NAMES[*i]),
                        )?;
                    }
                    ConstantKind::ChLine => {
                        st.serialize_field("kind", "ch-line")?;
                    }
                }
                st.serialize_field("line", line)?;
                st.end()
            }
            SymbolClass::Pencil {
                center_index,
                center,
            } => {
                let mut st = ser.serialize_struct("SymbolClass", 3)?;
                st.serialize_field("class", "pencil")?;
                st.serialize_field("center", POINT_NAMES[*center_index])?;
                st.serialize_field("point", center)?;
                st.end()
            }
            SymbolClass::Surjective => {
                let mut st = ser.serialize_struct("SymbolClass", 1)?;
                st.serialize_field("class", "surjective")?;
                st.end()
            }
        }
    }
}

/// Tallies of the classification; the row-matched theorem pins every entry.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ClassCounts {
    pub constant: usize,
    /// Chords PQ, PR, QR.
    pub chords: [usize; 3],
    /// Connectors PP', QQ', RR'.
    pub perspectives: [usize; 3],
    pub ch_lines: usize,
    /// Pencils through P, Q, R.
    pub pencils: [usize; 3],
    pub surjective: usize,
}

/// The classification of all sixty symbols over a row-matched base.
#[derive(Clone, Debug, Serialize)]
pub struct Classification222 {
    /// The three base parameters (P, Q, R).
    pub points: [P1Point; 3],
    pub entries: Vec<(PascalSymbol, SymbolClass)>,
    pub counts: ClassCounts,
}

/// Block index of a letter under the coincidences A=F -> 0, B=E -> 1,
/// C=D -> 2.
fn block_of(l: Letter) -> usize {
    match l {
        Letter::A | Letter::F => 0,
        Letter::B | Letter::E => 1,
        Letter::C | Letter::D => 2,
    }
}

/// Classifies a symbol by its column pattern over the row-matched blocks:
/// three pure columns are surjective; one pure column gives a pencil (mixed
/// columns in the same orientation) or the perspectivity connector of the
/// pure block (transposed); no pure column gives a chord (a block repeated
/// in each row) or the perspectivity axis (each row meets all blocks).
pub fn pattern_class(s: &PascalSymbol) -> PatternClass {
    let [top, bot] = s.canonical_grid().rows;
    let cols: Vec<(usize, usize)> = (0..3)
        .map(|i| (block_of(top[i]), block_of(bot[i])))
        .collect();
    let pure: Vec<usize> = cols
        .iter()
        .filter(|(t, b)| t == b)
        .map(|(t, _)| *t)
        .collect();
    match pure.len() {
        3 => PatternClass::Surjective,
        1 => {
            let mixed: Vec<(usize, usize)> = cols.iter().filter(|(t, b)| t != b).copied().collect();
            if mixed[0].0 == mixed[1].0 {
                PatternClass::Pencil(pure[0])
            } else {
                PatternClass::Perspective(pure[0])
            }
        }
        0 => {
            let mut top_count = [0usize; 3];
            let mut bot_count = [0usize; 3];
            for l in top {
                top_count[block_of(l)] += 1;
            }
            for l in bot {
                bot_count[block_of(l)] += 1;
            }
            match (
                top_count.iter().position(|&n| n == 2),
                bot_count.iter().position(|&n| n == 2),
            ) {
                (Some(x), Some(z)) => PatternClass::Chord(x.min(z), x.max(z)),
                (None, None) => PatternClass::ChLine,
                _ => unreachable!("row repeat counts come in pairs"),
            }
        }
        _ => unreachable!("two pure columns force a third"),
    }
}

/// Interior fiber samples for the constant/pencil/surjective decision. Seven
/// all-nonzero points exceed the (linear) degree of the fiber
/// parameterization with a wide margin.
fn fiber_samples() -> [[Rational; 3]; 7] {
    let r = Rational::from_int;
    [
        [r(1), r(2), r(3)],
        [r(1), r(5), r(-7)],
        [r(2), r(-3), r(5)],
        [r(3), r(1), r(1)],
        [r(5), r(-2), r(9)],
        [r(7), r(11), r(-13)],
        [r(1), r(1), r(2)],
    ]
}

struct Catalog {
    taus: [ProjPoint; 3],
    chords: [(usize, usize, ProjLine); 3],
    perspectives: [ProjLine; 3],
    ch: ProjLine,
}

impl Catalog {
    fn build(p: &P1Point, q: &P1Point, r: &P1Point) -> Result<Catalog, Error> {
        let taus = [tau(p), tau(q), tau(r)];
        let chord = |i: usize, j: usize| join(&taus[i], &taus[j]).expect("distinct conic points");
        let pt = polar_triangle(p, q, r)?;
        let perspectives = [
            join(&taus[0], &pt.poles[0])?,
            join(&taus[1], &pt.poles[1])?,
            join(&taus[2], &pt.poles[2])?,
        ];
        Ok(Catalog {
            chords: [
                (0, 1, chord(0, 1)),
                (0, 2, chord(0, 2)),
                (1, 2, chord(1, 2)),
            ],
            perspectives,
            ch: pt.perspectrix,
            taus,
        })
    }

    fn constant_kind(&self, line: &ProjLine) -> Result<ConstantKind, Error> {
        for (i, j, chord) in &self.chords {
            if line == chord {
                return Ok(ConstantKind::Chord(*i, *j));
            }
        }
        for (i, persp) in self.perspectives.iter().enumerate() {
            if line == persp {
                return Ok(ConstantKind::Perspective(i));
            }
        }
        if *line == self.ch {
            return Ok(ConstantKind::ChLine);
        }
        Err(Error::Internal(format!(
            "constant Pascal {line} is not in the chord/perspective/axis catalog"
        )))
    }

    fn center_index(&self, center: &ProjPoint) -> Result<usize, Error> {
        self.taus
            .iter()
            .position(|t| t == center)
            .ok_or_else(|| Error::Internal(format!("pencil center {center} is not a base point")))
    }
}

/// Classifies all sixty Pascals over the base with A,F -> P; B,E -> Q;
/// C,D -> R. Symbols still defined at the base are classified from their
/// value; indeterminate symbols are resolved by sampling the interior fiber.
pub fn classify_222(p: &P1Point, q: &P1Point, r: &P1Point) -> Result<Classification222, Error> {
    if p == q || p == r || q == r {
        return Err(Error::RepeatedPoints);
    }
    let h = Sextuple::new([
        p.clone(),
        q.clone(),
        r.clone(),
        r.clone(),
        q.clone(),
        p.clone(),
    ]);
    let catalog = Catalog::build(p, q, r)?;

    let mut entries = Vec::with_capacity(60);
    for s in enumerate_symbols() {
        let class = match eval_pascal(&h, s) {
            Some(line) => SymbolClass::Constant {
                kind: catalog.constant_kind(&line)?,
                line,
            },
            None => classify_resolved(&h, s, &catalog)?,
        };
        let predicted = pattern_class(s);
        if !class.matches_pattern(predicted) {
            return Err(Error::Internal(format!(
                "sampler and pattern rule disagree on {s}: sampled {class:?}, pattern {predicted:?}"
            )));
        }
        entries.push((*s, class));
    }

    let mut counts = ClassCounts {
        constant: 0,
        chords: [0; 3],
        perspectives: [0; 3],
        ch_lines: 0,
        pencils: [0; 3],
        surjective: 0,
    };
    for (_, class) in &entries {
        match class {
            SymbolClass::Constant { kind, .. } => {
                counts.constant += 1;
                match kind {
                    ConstantKind::Chord(0, 1) => counts.chords[0] += 1,
                    ConstantKind::Chord(0, 2) => counts.chords[1] += 1,
                    ConstantKind::Chord(1, 2) => counts.chords[2] += 1,
                    ConstantKind::Chord(..) => unreachable!("chord indices are ordered"),
                    ConstantKind::Perspective(i) => counts.perspectives[*i] += 1,
                    ConstantKind::ChLine => counts.ch_lines += 1,
                }
            }
            SymbolClass::Pencil { center_index, .. } => counts.pencils[*center_index] += 1,
            SymbolClass::Surjective => counts.surjective += 1,
        }
    }

    Ok(Classification222 {
        points: [p.clone(), q.clone(), r.clone()],
        entries,
        counts,
    })
}

fn classify_resolved(
    h: &Sextuple,
    s: &PascalSymbol,
    catalog: &Catalog,
) -> Result<SymbolClass, Error> {
    let lines: Vec<ProjLine> = fiber_samples()
        .iter()
        .map(|coords| {
            let spec = DegenerationSpec::new(
                h.clone(),
                *s,
                FiberPoint::Interior222 {
                    coords: coords.clone(),
                },
            );
            degenerate_pascal(&spec)
        })
        .collect::<Result<_, _>>()?;
    let rows: Vec<Vec<Rational>> = lines.iter().map(|l| l.coords().to_vec()).collect();
    match linalg::rank(&rows, 3) {
        1 => Ok(SymbolClass::Constant {
            kind: catalog.constant_kind(&lines[0])?,
            line: lines[0].clone(),
        }),
        2 => {
            let second = lines
                .iter()
                .find(|l| **l != lines[0])
                .expect("rank two needs two distinct lines");
            let center = meet(&lines[0], second)?;
            for l in &lines {
                if !center.on_line(l) {
                    return Err(Error::Internal(
                        "rank-two fiber image is not a pencil".to_string(),
                    ));
                }
            }
            Ok(SymbolClass::Pencil {
                center_index: catalog.center_index(&center)?,
                center,
            })
        }
        3 => Ok(SymbolClass::Surjective),
        _ => Err(Error::Internal("fiber image spans no line".to_string())),
    }
}

/// Fits the 3x3 matrix M with `line = fiber * M` from sampled fiber/line
/// pairs, as the nullspace of the cross-product constraints. Returns `None`
/// if the samples do not determine a unique linear map.
pub fn fit_fiber_matrix(samples: &[([Rational; 3], ProjLine)]) -> Option<[[Rational; 3]; 3]> {
    // Unknowns m[i][j] flattened row-major; for each sample, (q*M) x l = 0
    // gives three linear constraints.
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (q, line) in samples {
        let l = line.coords();
        // (q*M)_j = sum_i q_i m[i][j]; constraints from the cross product:
        // (q*M)_1 l_2 - (q*M)_2 l_1 = 0, etc.
        let pairs = [(1usize, 2usize), (2, 0), (0, 1)];
        for (x, y) in pairs {
            let mut row = vec![Rational::zero(); 9];
            for i in 0..3 {
                row[3 * i + x] = &q[i] * &l[y];
                row[3 * i + y] = -&(&q[i] * &l[x]);
            }
            rows.push(row);
        }
    }
    let ns = linalg::nullspace(&rows, 9);
    if ns.len() != 1 {
        return None;
    }
    let v = &ns[0];
    Some([
        [v[0].clone(), v[1].clone(), v[2].clone()],
        [v[3].clone(), v[4].clone(), v[5].clone()],
        [v[6].clone(), v[7].clone(), v[8].clone()],
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(s: &str) -> PascalSymbol {
        s.parse().unwrap()
    }

    #[test]
    fn pattern_examples() {
        // each pattern representative from the row-matched analysis
        assert_eq!(pattern_class(&sym("FAD/CBE")), PatternClass::Chord(0, 1));
        assert_eq!(pattern_class(&sym("ACE/FBD")), PatternClass::Perspective(0));
        assert_eq!(pattern_class(&sym("ACB/DEF")), PatternClass::ChLine);
        assert_eq!(pattern_class(&sym("ACD/FBE")), PatternClass::Pencil(0));
        assert_eq!(pattern_class(&sym("ABC/FED")), PatternClass::Surjective);
    }

    #[test]
    fn normalized_classification_counts() {
        let c = classify_222(
            &P1Point::from_int(1),
            &P1Point::from_int(0),
            &P1Point::from_int(-1),
        )
        .unwrap();
        assert_eq!(c.counts.constant, 44);
        assert_eq!(c.counts.chords, [8, 8, 8]);
        assert_eq!(c.counts.perspectives, [4, 4, 4]);
        assert_eq!(c.counts.ch_lines, 8);
        assert_eq!(c.counts.pencils, [4, 4, 4]);
        assert_eq!(c.counts.surjective, 4);
    }

    #[test]
    fn specific_symbols_from_the_analysis() {
        let c = classify_222(
            &P1Point::from_int(1),
            &P1Point::from_int(0),
            &P1Point::from_int(-1),
        )
        .unwrap();
        let class_of = |name: &str| {
            let s = sym(name);
            c.entries
                .iter()
                .find(|(sy, _)| *sy == s)
                .map(|(_, cl)| cl.clone())
                .unwrap()
        };
        // chord PQ
        let pq = join(&tau(&P1Point::from_int(1)), &tau(&P1Point::from_int(0))).unwrap();
        match class_of("FAD/CBE") {
            SymbolClass::Constant {
                kind: ConstantKind::Chord(0, 1),
                line,
            } => {
                assert_eq!(line, pq)
            }
            other => panic!("expected chord PQ, got {other:?}"),
        }
        // perspective line PP'
        match class_of("ACE/FBD") {
            SymbolClass::Constant {
                kind: ConstantKind::Perspective(0),
                line,
            } => {
                assert!(tau(&P1Point::from_int(1)).on_line(&line));
            }
            other => panic!("expected PP', got {other:?}"),
        }
        // ch line: passes through T_P ∩ QR etc.
        match class_of("ACB/DEF") {
            SymbolClass::Constant {
                kind: ConstantKind::ChLine,
                line,
            } => {
                let tp = crate::projgeom::tangent_at(&P1Point::from_int(1));
                let qr = join(&tau(&P1Point::from_int(0)), &tau(&P1Point::from_int(-1))).unwrap();
                let x = meet(&tp, &qr).unwrap();
                assert!(x.on_line(&line));
            }
            other => panic!("expected ch, got {other:?}"),
        }
        // pencil through P
        match class_of("ACD/FBE") {
            SymbolClass::Pencil {
                center_index: 0,
                center,
            } => {
                assert_eq!(center, tau(&P1Point::from_int(1)));
            }
            other => panic!("expected pencil through P, got {other:?}"),
        }
        assert_eq!(class_of("ABC/FED"), SymbolClass::Surjective);
    }

    #[test]
    fn coincident_points_rejected() {
        assert!(classify_222(
            &P1Point::from_int(1),
            &P1Point::from_int(1),
            &P1Point::from_int(0)
        )
        .is_err());
    }
}
