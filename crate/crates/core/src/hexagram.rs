//! The incidence layer above the Pascals: Kirkman and Steiner points, the
//! transcribed indeterminacy components of the base Kirkman point, and
//! generic discovery of collinear/concurrent families over labelled
//! configurations.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::pascal::eval_pascal;
use crate::projgeom::{join, meet, ProjLine, ProjPoint};
use crate::sextuple::{Partition, Sextuple};
use crate::symbols::{kirkman_triple_of, KTriple, Letter, PascalGrid, STriple};
use crate::Error;

/// Meet of a triple of concurrent optional lines: defined when at least two
/// are defined and distinct; every further defined line is asserted through
/// the meet (the concurrency theorems make a miss an implementation bug).
fn concurrency_point(lines: &[Option<ProjLine>; 3]) -> Option<ProjPoint> {
    let defined: Vec<&ProjLine> = lines.iter().flatten().collect();
    let first = *defined.first()?;
    let second = *defined.iter().find(|l| **l != first)?;
    let point = meet(first, second).expect("distinct lines");
    for l in &defined {
        assert!(
            point.on_line(l),
            "incidence theorem violated: a member line misses the common point"
        );
    }
    Some(point)
}

/// The common point of the three Pascals of a Kirkman triple, when defined.
pub fn kirkman_point(h: &Sextuple, kt: &KTriple) -> Option<ProjPoint> {
    let [s0, s1, s2] = kt.members();
    concurrency_point(&[eval_pascal(h, s0), eval_pascal(h, s1), eval_pascal(h, s2)])
}

/// The common point of the three Pascals of a Steiner triple, when defined.
pub fn steiner_point(h: &Sextuple, st: &STriple) -> Option<ProjPoint> {
    let [s0, s1, s2] = st.members();
    concurrency_point(&[eval_pascal(h, s0), eval_pascal(h, s1), eval_pascal(h, s2)])
}

/// The Kirkman triple generated from the base arrangement `[ABC/FED]`, the
/// one whose indeterminacy components are transcribed below.
pub fn base_kirkman_triple() -> KTriple {
    let grid: PascalGrid = "ABC/FED".parse().expect("valid");
    kirkman_triple_of(&grid)
}

/// The twenty polydiagonal components of the indeterminacy locus of the base
/// Kirkman point: a letter triple `def` merges D, E, F; a pair `ab.ef`
/// merges A,B and E,F. Eight components of type (3,1,1,1) and twelve of
/// type (2,2,1,1).
pub fn kirkman_indeterminacy_components() -> Vec<Partition> {
    const COMPONENTS: [&str; 20] = [
        "DEF", "CEF", "AB.EF", "BDF", "AC.DF", "BC.DE", "ADE", "BCF", "BD.CF", "AE.CF", "AD.CF",
        "CE.BF", "CE.BD", "ACE", "AD.CE", "AE.BF", "AD.BF", "AE.BD", "ABD", "ABC",
    ];
    COMPONENTS
        .iter()
        .map(|w| {
            let blocks: Vec<Vec<Letter>> = w
                .split('.')
                .map(|b| {
                    b.chars()
                        .map(|c| Letter::from_char(c).expect("letter"))
                        .collect()
                })
                .collect();
            Partition::from_nontrivial_blocks(&blocks).expect("disjoint blocks")
        })
        .collect()
}

/// All maximal collinear families of size >= `min_size` among labelled
/// points, keyed by their carrier line.
pub fn find_collinear_families(
    points: &[(String, ProjPoint)],
    min_size: usize,
) -> Result<Vec<(ProjLine, Vec<String>)>, Error> {
    if min_size < 3 {
        return Err(Error::InvalidArgument(
            "min_size must be at least 3".to_string(),
        ));
    }
    let mut carriers: BTreeSet<ProjLine> = BTreeSet::new();
    for (i, (_, p)) in points.iter().enumerate() {
        for (_, q) in points.iter().skip(i + 1) {
            if p != q {
                carriers.insert(join(p, q).expect("distinct"));
            }
        }
    }
    let mut families: BTreeMap<ProjLine, Vec<String>> = BTreeMap::new();
    for carrier in carriers {
        let members: Vec<String> = points
            .iter()
            .filter(|(_, p)| p.on_line(&carrier))
            .map(|(label, _)| label.clone())
            .collect();
        if members.len() >= min_size {
            families.insert(carrier, members);
        }
    }
    Ok(families.into_iter().collect())
}

/// All maximal concurrent families of size >= `min_size` among labelled
/// lines, keyed by their common point.
pub fn find_concurrent_families(
    lines: &[(String, ProjLine)],
    min_size: usize,
) -> Result<Vec<(ProjPoint, Vec<String>)>, Error> {
    if min_size < 3 {
        return Err(Error::InvalidArgument(
            "min_size must be at least 3".to_string(),
        ));
    }
    let mut carriers: BTreeSet<ProjPoint> = BTreeSet::new();
    for (i, (_, l)) in lines.iter().enumerate() {
        for (_, m) in lines.iter().skip(i + 1) {
            if l != m {
                carriers.insert(meet(l, m).expect("distinct"));
            }
        }
    }
    let mut families: BTreeMap<ProjPoint, Vec<String>> = BTreeMap::new();
    for carrier in carriers {
        let members: Vec<String> = lines
            .iter()
            .filter(|(_, l)| carrier.on_line(l))
            .map(|(label, _)| label.clone())
            .collect();
        if members.len() >= min_size {
            families.insert(carrier, members);
        }
    }
    Ok(families.into_iter().collect())
}

/// JSON form of a family report: carrier coordinates plus member labels.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IncidenceFamily {
    pub carrier: [String; 3],
    pub members: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IncidenceReport {
    /// "collinear" (carriers are lines) or "concurrent" (carriers are points).
    pub kind: String,
    pub families: Vec<IncidenceFamily>,
}

impl IncidenceReport {
    pub fn from_collinear(families: &[(ProjLine, Vec<String>)]) -> Self {
        IncidenceReport {
            kind: "collinear".to_string(),
            families: families
                .iter()
                .map(|(l, members)| IncidenceFamily {
                    carrier: l.int_coords().clone().map(|z| z.to_string()),
                    members: members.clone(),
                })
                .collect(),
        }
    }

    pub fn from_concurrent(families: &[(ProjPoint, Vec<String>)]) -> Self {
        IncidenceReport {
            kind: "concurrent".to_string(),
            families: families
                .iter()
                .map(|(p, members)| IncidenceFamily {
                    carrier: p.int_coords().clone().map(|z| z.to_string()),
                    members: members.clone(),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbols::{kirkman_triples, steiner_triples};

    #[test]
    fn component_list_shape() {
        let comps = kirkman_indeterminacy_components();
        assert_eq!(comps.len(), 20);
        let triples = comps
            .iter()
            .filter(|p| p.ptype() == vec![3, 1, 1, 1])
            .count();
        let pairs = comps
            .iter()
            .filter(|p| p.ptype() == vec![2, 2, 1, 1])
            .count();
        assert_eq!((triples, pairs), (8, 12));
    }

    #[test]
    fn kirkman_point_on_generic_sextuple() {
        let h = Sextuple::from_ints([0, 1, 2, 3, 4, 7]);
        for kt in kirkman_triples() {
            assert!(kirkman_point(&h, kt).is_some());
        }
    }

    #[test]
    fn triple_point_merges_the_base_triple_pascals() {
        // D=E=F: all three Pascals of the base Kirkman triple degenerate to
        // the tangent at the triple point, so the Kirkman point is undefined.
        let h = Sextuple::from_ints([0, 1, 2, 5, 5, 5]);
        let kt = base_kirkman_triple();
        let lines: Vec<_> = kt.members().iter().map(|s| eval_pascal(&h, s)).collect();
        assert!(lines.iter().all(Option::is_some));
        let t = crate::projgeom::tangent_at(&crate::projgeom::P1Point::from_int(5));
        for l in &lines {
            assert_eq!(l.as_ref().unwrap(), &t);
        }
        assert!(kirkman_point(&h, &kt).is_none());
    }

    #[test]
    fn unlisted_polydiagonals_keep_the_base_point_defined() {
        // the component list is exact, not just sufficient: codimension-two
        // coincidences outside it leave the base Kirkman point defined
        use crate::sample::Sampler;
        let comps = kirkman_indeterminacy_components();
        let kt = base_kirkman_triple();
        let mut sampler = Sampler::new(314);
        let mut tested = 0;
        for blocks in [["AB", "CD"], ["AC", "BD"], ["AF", "BE"], ["BC", "EF"]] {
            let bl: Vec<Vec<Letter>> = blocks
                .iter()
                .map(|b| b.chars().map(|c| Letter::from_char(c).unwrap()).collect())
                .collect();
            let pi = Partition::from_nontrivial_blocks(&bl).unwrap();
            assert!(!comps.contains(&pi), "{pi} is a listed component");
            for _ in 0..5 {
                let h = sampler.sextuple_on(&pi);
                assert!(kirkman_point(&h, &kt).is_some(), "undefined on {pi}: {h}");
                tested += 1;
            }
        }
        assert_eq!(tested, 20);
    }

    #[test]
    fn steiner_points_on_generic_sextuple() {
        let h = Sextuple::from_ints([0, 1, 2, 3, 4, 7]);
        for st in steiner_triples() {
            assert!(steiner_point(&h, st).is_some());
        }
    }

    #[test]
    fn collinear_family_detection() {
        let p = |x: i64, y: i64| ProjPoint::from_ints([1, x, y]).unwrap();
        let pts = vec![
            ("a".to_string(), p(0, 0)),
            ("b".to_string(), p(1, 1)),
            ("c".to_string(), p(2, 2)),
            ("d".to_string(), p(1, 5)),
        ];
        let fams = find_collinear_families(&pts, 3).unwrap();
        assert_eq!(fams.len(), 1);
        assert_eq!(fams[0].1, vec!["a", "b", "c"]);
        assert!(find_collinear_families(&pts, 2).is_err());
        assert!(find_collinear_families(&[], 3).unwrap().is_empty());
    }

    #[test]
    fn pascal_concurrencies_recover_kirkman_and_steiner_families() {
        let h = Sextuple::from_ints([0, 1, 2, 3, 4, 7]);
        let labelled: Vec<(String, ProjLine)> = crate::symbols::enumerate_symbols()
            .iter()
            .map(|s| (s.to_string(), eval_pascal(&h, s).unwrap()))
            .collect();
        let fams = find_concurrent_families(&labelled, 3).unwrap();
        let contains = |triple: &[crate::symbols::PascalSymbol; 3]| {
            fams.iter()
                .any(|(_, members)| triple.iter().all(|s| members.contains(&s.to_string())))
        };
        for kt in kirkman_triples().iter().step_by(6) {
            assert!(contains(kt.members()));
        }
        for st in steiner_triples().iter().step_by(2) {
            assert!(contains(st.members()));
        }
    }
}
