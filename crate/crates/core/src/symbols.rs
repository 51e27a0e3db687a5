//! Combinatorics of Pascal symbols: the 60 classes of 2x3 letter arrangements
//! modulo row and column shuffles, their per-symbol indeterminacy partitions,
//! and the Kirkman and Steiner triples built from them.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::sextuple::Partition;
use crate::Error;

/// The six letters labelling a sextuple.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl Letter {
    pub const ALL: [Letter; 6] = [
        Letter::A,
        Letter::B,
        Letter::C,
        Letter::D,
        Letter::E,
        Letter::F,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Letter {
        Letter::ALL[i]
    }

    pub fn as_char(self) -> char {
        (b'A' + self as u8) as char
    }

    pub fn from_char(c: char) -> Result<Letter, Error> {
        match c.to_ascii_uppercase() {
            'A' => Ok(Letter::A),
            'B' => Ok(Letter::B),
            'C' => Ok(Letter::C),
            'D' => Ok(Letter::D),
            'E' => Ok(Letter::E),
            'F' => Ok(Letter::F),
            _ => Err(Error::Parse(format!("invalid letter `{c}`"))),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A permutation of the six letters; `apply` sends a letter to its image.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LetterPerm {
    image: [Letter; 6],
}

impl LetterPerm {
    pub fn identity() -> Self {
        LetterPerm { image: Letter::ALL }
    }

    pub fn new(image: [Letter; 6]) -> Result<Self, Error> {
        let mut seen = [false; 6];
        for l in image {
            if seen[l.index()] {
                return Err(Error::RepeatedLetter);
            }
            seen[l.index()] = true;
        }
        Ok(LetterPerm { image })
    }

    pub fn apply(self, l: Letter) -> Letter {
        self.image[l.index()]
    }

    pub fn inverse(self) -> LetterPerm {
        let mut image = Letter::ALL;
        for (i, &img) in self.image.iter().enumerate() {
            image[img.index()] = Letter::from_index(i);
        }
        LetterPerm { image }
    }

    /// All 720 permutations, in a fixed deterministic order.
    pub fn all() -> Vec<LetterPerm> {
        let mut out = Vec::with_capacity(720);
        let mut items = Letter::ALL;
        permute(&mut items, 0, &mut out);
        out
    }
}

fn permute(items: &mut [Letter; 6], k: usize, out: &mut Vec<LetterPerm>) {
    if k == 6 {
        out.push(LetterPerm { image: *items });
        return;
    }
    for i in k..6 {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

/// A concrete 2x3 arrangement of the six letters: one representative of a
/// Pascal symbol, before quotienting by row/column shuffles.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PascalGrid {
    pub rows: [[Letter; 3]; 2],
}

impl PascalGrid {
    pub fn new(rows: [[Letter; 3]; 2]) -> Result<Self, Error> {
        let mut seen = [false; 6];
        for row in &rows {
            for &l in row {
                if seen[l.index()] {
                    return Err(Error::RepeatedLetter);
                }
                seen[l.index()] = true;
            }
        }
        Ok(PascalGrid { rows })
    }

    fn key(&self) -> [Letter; 6] {
        let [[a, b, c], [d, e, f]] = self.rows;
        [a, b, c, d, e, f]
    }

    fn transformed(&self, swap_rows: bool, perm: [usize; 3]) -> PascalGrid {
        let src = if swap_rows {
            [self.rows[1], self.rows[0]]
        } else {
            self.rows
        };
        PascalGrid {
            rows: [
                [src[0][perm[0]], src[0][perm[1]], src[0][perm[2]]],
                [src[1][perm[0]], src[1][perm[1]], src[1][perm[2]]],
            ],
        }
    }

    /// The 12 grids related to this one by row/column shuffles.
    pub fn shuffles(&self) -> Vec<PascalGrid> {
        const COL_PERMS: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let mut out = Vec::with_capacity(12);
        for swap in [false, true] {
            for perm in COL_PERMS {
                out.push(self.transformed(swap, perm));
            }
        }
        out
    }

    pub fn relabel(&self, perm: LetterPerm) -> PascalGrid {
        PascalGrid {
            rows: self.rows.map(|row| row.map(|l| perm.apply(l))),
        }
    }
}

impl fmt::Display for PascalGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [top, bot] = self.rows;
        for l in top {
            write!(f, "{l}")?;
        }
        write!(f, "/")?;
        for l in bot {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for PascalGrid {
    type Err = Error;

    /// Parses `"XYZ/UVW"`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let (top, bot) = s
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("invalid symbol `{s}`: expected XYZ/UVW")))?;
        let parse_row = |r: &str| -> Result<[Letter; 3], Error> {
            let chars: Vec<char> = r.chars().collect();
            if chars.len() != 3 {
                return Err(Error::Parse(format!("invalid symbol row `{r}`")));
            }
            Ok([
                Letter::from_char(chars[0])?,
                Letter::from_char(chars[1])?,
                Letter::from_char(chars[2])?,
            ])
        };
        PascalGrid::new([parse_row(top)?, parse_row(bot)?])
    }
}

/// A Pascal symbol: an arrangement of the six letters determined up to the
/// 12 row/column shuffles, stored as the lexicographically minimal grid.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PascalSymbol {
    grid: PascalGrid,
}

impl PascalSymbol {
    pub fn new(grid: PascalGrid) -> Self {
        let canonical = grid
            .shuffles()
            .into_iter()
            .min_by_key(PascalGrid::key)
            .expect("12 shuffles");
        PascalSymbol { grid: canonical }
    }

    pub fn canonical_grid(&self) -> &PascalGrid {
        &self.grid
    }

    /// The 12 concrete grids implementing this symbol.
    pub fn representatives(&self) -> Vec<PascalGrid> {
        self.grid.shuffles()
    }

    pub fn relabel(&self, perm: LetterPerm) -> PascalSymbol {
        PascalSymbol::new(self.grid.relabel(perm))
    }
}

impl fmt::Display for PascalSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.grid)
    }
}

impl FromStr for PascalSymbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(PascalSymbol::new(s.parse()?))
    }
}

impl serde::Serialize for PascalSymbol {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for PascalSymbol {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All 60 Pascal symbols, sorted by canonical grid.
pub fn enumerate_symbols() -> &'static [PascalSymbol] {
    static TABLE: OnceLock<Vec<PascalSymbol>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut out: Vec<PascalSymbol> = LetterPerm::all()
            .into_iter()
            .map(|p| {
                PascalSymbol::new(PascalGrid {
                    rows: [
                        [p.apply(Letter::A), p.apply(Letter::B), p.apply(Letter::C)],
                        [p.apply(Letter::D), p.apply(Letter::E), p.apply(Letter::F)],
                    ],
                })
            })
            .collect();
        out.sort();
        out.dedup();
        out
    })
}

/// The six partitions along which the Pascal of `s` degenerates: the two
/// rows, the three column pairs, and the row matching. Independent of the
/// representative grid.
pub fn indeterminacy_partitions(s: &PascalSymbol) -> [Partition; 6] {
    let [top, bot] = s.canonical_grid().rows;
    let block = |ls: &[Letter]| ls.to_vec();
    let mk = |blocks: &[Vec<Letter>]| Partition::from_nontrivial_blocks(blocks).expect("disjoint");
    [
        mk(&[block(&top)]),
        mk(&[block(&bot)]),
        mk(&[block(&[top[0], top[1]]), block(&[bot[0], bot[1]])]),
        mk(&[block(&[top[0], top[2]]), block(&[bot[0], bot[2]])]),
        mk(&[block(&[top[1], top[2]]), block(&[bot[1], bot[2]])]),
        mk(&[
            block(&[top[0], bot[0]]),
            block(&[top[1], bot[1]]),
            block(&[top[2], bot[2]]),
        ]),
    ]
}

/// Three Pascal symbols whose lines are concurrent in a Kirkman point.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct KTriple {
    symbols: [PascalSymbol; 3],
}

impl KTriple {
    fn from_unsorted(mut symbols: [PascalSymbol; 3]) -> Self {
        symbols.sort();
        debug_assert!(symbols[0] != symbols[1] && symbols[1] != symbols[2]);
        KTriple { symbols }
    }

    pub fn members(&self) -> &[PascalSymbol; 3] {
        &self.symbols
    }

    pub fn relabel(&self, perm: LetterPerm) -> KTriple {
        KTriple::from_unsorted(self.symbols.map(|s| s.relabel(perm)))
    }
}

impl fmt::Display for KTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}, {}, {}}}",
            self.symbols[0], self.symbols[1], self.symbols[2]
        )
    }
}

/// Three Pascal symbols whose lines are concurrent in a Steiner point.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct STriple {
    symbols: [PascalSymbol; 3],
}

impl STriple {
    fn from_unsorted(mut symbols: [PascalSymbol; 3]) -> Self {
        symbols.sort();
        debug_assert!(symbols[0] != symbols[1] && symbols[1] != symbols[2]);
        STriple { symbols }
    }

    pub fn members(&self) -> &[PascalSymbol; 3] {
        &self.symbols
    }

    pub fn relabel(&self, perm: LetterPerm) -> STriple {
        STriple::from_unsorted(self.symbols.map(|s| s.relabel(perm)))
    }
}

impl fmt::Display for STriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}, {}, {}}}",
            self.symbols[0], self.symbols[1], self.symbols[2]
        )
    }
}

/// The Kirkman triple of a grid `[x1 x2 x3 / y1 y2 y3]`: the top letters move
/// through a V shape with a cyclic shift, the bottom letters through an
/// inverted V with an anti-cyclic shift. For `[ABC/FED]` this yields
/// `[AEC/DBF], [BDA/FCE], [CFB/EAD]`.
pub fn kirkman_triple_of(grid: &PascalGrid) -> KTriple {
    let [x, y] = grid.rows;
    let g = |rows| PascalSymbol::new(PascalGrid { rows });
    KTriple::from_unsorted([
        g([[x[0], y[1], x[2]], [y[2], x[1], y[0]]]),
        g([[x[1], y[2], x[0]], [y[0], x[2], y[1]]]),
        g([[x[2], y[0], x[1]], [y[1], x[0], y[2]]]),
    ])
}

/// The Steiner triple of a grid: top row fixed, bottom row cyclically
/// permuted. For `[ABC/FED]` this yields `[ABC/FED], [ABC/DFE], [ABC/EDF]`.
pub fn steiner_triple_of(grid: &PascalGrid) -> STriple {
    let [x, y] = grid.rows;
    let g = |rows| PascalSymbol::new(PascalGrid { rows });
    STriple::from_unsorted([
        g([x, [y[0], y[1], y[2]]]),
        g([x, [y[2], y[0], y[1]]]),
        g([x, [y[1], y[2], y[0]]]),
    ])
}

fn base_grid() -> PascalGrid {
    "ABC/FED".parse().expect("valid")
}

/// All 60 Kirkman triples, generated by letter shuffles of the base grid.
pub fn kirkman_triples() -> &'static [KTriple] {
    static TABLE: OnceLock<Vec<KTriple>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let base = base_grid();
        let mut out: Vec<KTriple> = LetterPerm::all()
            .into_iter()
            .map(|p| kirkman_triple_of(&base.relabel(p)))
            .collect();
        out.sort();
        out.dedup();
        out
    })
}

/// All 20 Steiner triples; together they cover each symbol exactly once.
pub fn steiner_triples() -> &'static [STriple] {
    static TABLE: OnceLock<Vec<STriple>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let base = base_grid();
        let mut out: Vec<STriple> = LetterPerm::all()
            .into_iter()
            .map(|p| steiner_triple_of(&base.relabel(p)))
            .collect();
        out.sort();
        out.dedup();
        out
    })
}
