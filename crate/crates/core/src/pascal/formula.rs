//! The closed-form line coordinates of the Pascal of the base arrangement
//! `[ABC/FED]`, in the conic parameters `a..f`, together with their
//! multihomogeneous forms and fast evaluators.

use std::sync::OnceLock;

use crate::exactalg::{MultiPoly, Rational};
use crate::projgeom::P1Point;
use crate::symbols::{Letter, PascalGrid};

/// Formula variables in index order; variable `i` names the parameter of the
/// letter sitting at `SLOTS[i]` in a representative grid.
pub(crate) const VARS: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

/// Grid slot (row, col) carrying each formula variable, for the base grid
/// `[ABC/FED]`: a,b,c are the top row and f,e,d the bottom row.
pub(crate) const SLOTS: [(usize, usize); 6] = [(0, 0), (0, 1), (0, 2), (1, 2), (1, 1), (1, 0)];

/// Terms of u0, u1, u2 as (sign, letter-variable subset) pairs. Every
/// monomial is squarefree, so a subset of `VARS` determines it.
const U_TERMS: [&[(i64, &str)]; 3] = [
    &[
        (1, "abde"),
        (-1, "abdf"),
        (-1, "acde"),
        (1, "acef"),
        (1, "bcdf"),
        (-1, "bcef"),
    ],
    &[
        (-1, "abe"),
        (1, "abf"),
        (1, "acd"),
        (-1, "acf"),
        (1, "adf"),
        (-1, "aef"),
        (-1, "bcd"),
        (1, "bce"),
        (-1, "bde"),
        (1, "bef"),
        (1, "cde"),
        (-1, "cdf"),
    ],
    &[
        (-1, "ad"),
        (1, "ae"),
        (1, "bd"),
        (-1, "bf"),
        (-1, "ce"),
        (1, "cf"),
    ],
];

fn var_index(name: char) -> usize {
    (name as u8 - b'a') as usize
}

/// The affine polynomials u0, u1, u2 in the variables a..f.
pub fn base_affine_polys() -> [MultiPoly; 3] {
    U_TERMS.map(|terms| {
        terms.iter().fold(MultiPoly::zero(), |acc, &(sign, vars)| {
            let names: Vec<&str> = vars.chars().map(|c| VARS[var_index(c)]).collect();
            &acc + &MultiPoly::monomial(sign, &names)
        })
    })
}

/// Multihomogenizes a squarefree polynomial in a..f: each letter `x` becomes
/// the pair `x0, x1`, with `x1` where the letter occurs and `x0` where it
/// does not, making every coordinate multilinear of multidegree (1,...,1).
pub fn base_homogeneous_polys() -> [MultiPoly; 3] {
    U_TERMS.map(|terms| {
        terms.iter().fold(MultiPoly::zero(), |acc, &(sign, vars)| {
            let mask: u8 = vars.chars().fold(0, |m, c| m | 1 << var_index(c));
            let names: Vec<String> = (0..6)
                .map(|i| {
                    let hom = if mask & (1 << i) != 0 { 1 } else { 0 };
                    format!("{}{}", VARS[i], hom)
                })
                .collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            &acc + &MultiPoly::monomial(sign, &refs)
        })
    })
}

/// Compiled form of the Pascal line formula: per-coordinate term lists as
/// (coefficient, variable mask) pairs, plus the symbolic polynomials.
pub struct PascalFormula {
    terms: [Vec<(i64, u8)>; 3],
    affine: [MultiPoly; 3],
    homogeneous: [MultiPoly; 3],
}

impl PascalFormula {
    fn build() -> Self {
        let terms = U_TERMS.map(|ts| {
            ts.iter()
                .map(|&(sign, vars)| {
                    let mask: u8 = vars.chars().fold(0, |m, c| m | 1 << var_index(c));
                    (sign, mask)
                })
                .collect()
        });
        PascalFormula {
            terms,
            affine: base_affine_polys(),
            homogeneous: base_homogeneous_polys(),
        }
    }

    pub fn affine_polys(&self) -> &[MultiPoly; 3] {
        &self.affine
    }

    pub fn homogeneous_polys(&self) -> &[MultiPoly; 3] {
        &self.homogeneous
    }

    /// Raw evaluation at affine parameter values in variable order a..f.
    pub fn eval_affine(&self, vals: &[Rational; 6]) -> [Rational; 3] {
        let pairs: [[Rational; 2]; 6] = std::array::from_fn(|i| [Rational::one(), vals[i].clone()]);
        self.eval_homogeneous(&pairs)
    }

    /// Raw evaluation at homogeneous parameter pairs in variable order a..f.
    /// Each coordinate is multilinear, so the result scales linearly in every
    /// pair and the projective class is well-defined.
    pub fn eval_homogeneous(&self, pairs: &[[Rational; 2]; 6]) -> [Rational; 3] {
        std::array::from_fn(|c| {
            let mut acc = Rational::zero();
            for &(sign, mask) in &self.terms[c] {
                let mut term = Rational::from_int(sign);
                for (i, pair) in pairs.iter().enumerate() {
                    let hom = usize::from(mask & (1 << i) != 0);
                    term *= pair[hom].clone();
                }
                acc += term;
            }
            acc
        })
    }

    /// Evaluates the formula through a representative grid: formula variable
    /// `i` reads the sextuple value of the letter at `SLOTS[i]`.
    pub fn eval_for_grid(
        &self,
        values: &dyn Fn(Letter) -> P1Point,
        grid: &PascalGrid,
    ) -> [Rational; 3] {
        let pairs: [[Rational; 2]; 6] = std::array::from_fn(|i| {
            let (r, c) = SLOTS[i];
            values(grid.rows[r][c]).coords()
        });
        self.eval_homogeneous(&pairs)
    }
}

/// The shared compiled formula.
pub fn pascal_formula() -> &'static PascalFormula {
    static FORMULA: OnceLock<PascalFormula> = OnceLock::new();
    FORMULA.get_or_init(PascalFormula::build)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::t_strip;
    use crate::projgeom::ProjLine;
    use std::collections::BTreeMap;

    #[test]
    fn term_counts_and_degrees() {
        let [u0, u1, u2] = base_affine_polys();
        assert_eq!(u0.num_terms(), 6);
        assert_eq!(u0.total_degree(), Some(4));
        assert_eq!(u1.num_terms(), 12);
        assert_eq!(u1.total_degree(), Some(3));
        assert_eq!(u2.num_terms(), 6);
        assert_eq!(u2.total_degree(), Some(2));
    }

    #[test]
    fn homogeneous_dehomogenizes_to_affine() {
        let [h0, h1, h2] = base_homogeneous_polys();
        let [u0, u1, u2] = base_affine_polys();
        let mut bind = BTreeMap::new();
        for v in VARS {
            bind.insert(format!("{v}0"), MultiPoly::constant(Rational::one()));
            bind.insert(format!("{v}1"), MultiPoly::var(v));
        }
        assert_eq!(h0.substitute(&bind), u0);
        assert_eq!(h1.substitute(&bind), u1);
        assert_eq!(h2.substitute(&bind), u2);
    }

    #[test]
    fn substitution_of_arc_from_worked_example() {
        // u2 under a -> 3, b -> 3+t, c -> 3+p*t, d -> 1, e -> 7, f -> 4
        // equals -3*t*(p+1) with p symbolic.
        let [_, _, u2] = base_affine_polys();
        let c = |n: i64| MultiPoly::constant(Rational::from_int(n));
        let mut bind = BTreeMap::new();
        bind.insert("a".to_string(), c(3));
        bind.insert("b".to_string(), &c(3) + &MultiPoly::var("t"));
        bind.insert(
            "c".to_string(),
            &c(3) + &(&MultiPoly::var("p") * &MultiPoly::var("t")),
        );
        bind.insert("d".to_string(), c(1));
        bind.insert("e".to_string(), c(7));
        bind.insert("f".to_string(), c(4));
        let got = u2.substitute(&bind);
        let expected = {
            let t = MultiPoly::var("t");
            let p = MultiPoly::var("p");
            (&t * &(&p + &c(1))).scale(&Rational::from_int(-3))
        };
        assert_eq!(got, expected);
    }

    #[test]
    fn formula_agrees_with_symbolic_crosshair_derivation() {
        // Independent derivation: build tau(a)..tau(f) symbolically, form the
        // cross-hair intersection points of the base arrangement by cross
        // products, and join two of them. The result must be the transcribed
        // (u0, u1, u2) up to a common polynomial factor, checked by
        // cross-multiplication.
        let tau_of = |v: &str| -> [MultiPoly; 3] {
            let x = MultiPoly::var(v);
            [MultiPoly::constant(Rational::one()), x.clone(), &x * &x]
        };
        let cross = |p: &[MultiPoly; 3], q: &[MultiPoly; 3]| -> [MultiPoly; 3] {
            [
                &(&p[1] * &q[2]) - &(&p[2] * &q[1]),
                &(&p[2] * &q[0]) - &(&p[0] * &q[2]),
                &(&p[0] * &q[1]) - &(&p[1] * &q[0]),
            ]
        };
        let pt: BTreeMap<&str, [MultiPoly; 3]> = VARS.iter().map(|&v| (v, tau_of(v))).collect();
        // cross-hairs of [ABC/FED]: AE x BF, AD x CF (the third is BD x CE)
        let ae = cross(&pt["a"], &pt["e"]);
        let bf = cross(&pt["b"], &pt["f"]);
        let ad = cross(&pt["a"], &pt["d"]);
        let cf = cross(&pt["c"], &pt["f"]);
        let m12 = cross(&ae, &bf);
        let m13 = cross(&ad, &cf);
        let derived = cross(&m12, &m13);
        let transcribed = base_affine_polys();
        for i in 0..3 {
            for j in (i + 1)..3 {
                assert_eq!(
                    &derived[i] * &transcribed[j],
                    &derived[j] * &transcribed[i],
                    "cross-proportionality failed at ({i},{j})"
                );
            }
        }
        assert!(!derived.iter().all(MultiPoly::is_zero));
    }

    #[test]
    fn worked_example_arc_limit() {
        // Full reproduction of the degenerate evaluation at a triple point:
        // a=3 (triple), d=1, e=7, f=4, arc b=3+t, c=3+p t; stripping t and
        // setting t=0 gives <3p+21, -4p-10, p+1> up to scale.
        let p_val = Rational::from_int(5);
        let polys = base_affine_polys();
        let mut bind = BTreeMap::new();
        let c = |r: Rational| MultiPoly::constant(r);
        bind.insert("a".to_string(), c(Rational::from_int(3)));
        bind.insert(
            "b".to_string(),
            &c(Rational::from_int(3)) + &MultiPoly::var("t"),
        );
        bind.insert(
            "c".to_string(),
            &c(Rational::from_int(3)) + &MultiPoly::var("t").scale(&p_val),
        );
        bind.insert("d".to_string(), c(Rational::from_int(1)));
        bind.insert("e".to_string(), c(Rational::from_int(7)));
        bind.insert("f".to_string(), c(Rational::from_int(4)));
        let arcs: [crate::exactalg::UniPoly; 3] = [
            polys[0].substitute(&bind).to_unipoly("t").unwrap(),
            polys[1].substitute(&bind).to_unipoly("t").unwrap(),
            polys[2].substitute(&bind).to_unipoly("t").unwrap(),
        ];
        let (v, lim) = t_strip(&arcs).unwrap();
        assert_eq!(v, 1);
        let line = ProjLine::new(lim).unwrap();
        // 3p+21 = 36, -4p-10 = -30, p+1 = 6 at p=5
        assert_eq!(line, ProjLine::from_ints([36, -30, 6]).unwrap());
    }
}
