//! Exact projective primitives over the rationals: the parameter line, the
//! plane, the fixed conic `z0*z2 = z1^2`, and the maps between them.
//!
//! Homogeneous tuples are stored in canonical primitive form (denominators
//! cleared, integer gcd 1, first nonzero coordinate positive), so structural
//! equality is projective equality and hashing is free.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactalg::Rational;
use crate::Error;

/// Clears denominators and reduces to the canonical primitive representative.
/// Returns an error on the zero tuple.
fn canonicalize(coords: &[Rational]) -> Result<Vec<BigInt>, Error> {
    if coords.iter().all(Rational::is_zero) {
        return Err(Error::ZeroTuple);
    }
    let mut lcm = BigInt::one();
    for c in coords {
        lcm = lcm.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = coords
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut g = BigInt::zero();
    for z in &ints {
        g = g.gcd(z);
    }
    for z in &mut ints {
        *z /= &g;
    }
    if ints
        .iter()
        .find(|z| !z.is_zero())
        .is_some_and(|z| z.is_negative())
    {
        for z in &mut ints {
            *z = -&*z;
        }
    }
    Ok(ints)
}

fn canonicalize_ints(coords: &[BigInt]) -> Result<Vec<BigInt>, Error> {
    let rats: Vec<Rational> = coords.iter().cloned().map(Rational::from_bigint).collect();
    canonicalize(&rats)
}

fn cross(a: &[BigInt; 3], b: &[BigInt; 3]) -> [BigInt; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn dot(a: &[BigInt; 3], b: &[BigInt; 3]) -> BigInt {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

/// A point of the parameter line, `[x0 : x1]` with affine value `x1/x0`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct P1Point {
    x: [BigInt; 2],
}

impl P1Point {
    pub fn new(x0: Rational, x1: Rational) -> Result<Self, Error> {
        let v = canonicalize(&[x0, x1])?;
        Ok(P1Point {
            x: [v[0].clone(), v[1].clone()],
        })
    }

    pub fn from_rational(r: Rational) -> Self {
        P1Point::new(Rational::one(), r).expect("nonzero")
    }

    pub fn from_int(n: i64) -> Self {
        P1Point::from_rational(Rational::from_int(n))
    }

    pub fn infinity() -> Self {
        P1Point {
            x: [BigInt::zero(), BigInt::one()],
        }
    }

    pub fn is_infinity(&self) -> bool {
        self.x[0].is_zero()
    }

    /// Affine value `x1/x0`, or `None` at infinity.
    pub fn affine(&self) -> Option<Rational> {
        if self.is_infinity() {
            None
        } else {
            Some(Rational::from_big(self.x[1].clone(), self.x[0].clone()))
        }
    }

    pub fn coords(&self) -> [Rational; 2] {
        [
            Rational::from_bigint(self.x[0].clone()),
            Rational::from_bigint(self.x[1].clone()),
        ]
    }
}

impl fmt::Display for P1Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.affine() {
            Some(r) => write!(f, "{r}"),
            None => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for P1Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.x[0], self.x[1])
    }
}

impl FromStr for P1Point {
    type Err = Error;

    /// Parses `"p/q"`, `"p"`, or `"inf"`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "inf" || s == "oo" {
            return Ok(P1Point::infinity());
        }
        Ok(P1Point::from_rational(s.parse()?))
    }
}

impl serde::Serialize for P1Point {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for P1Point {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! homogeneous_triple {
    ($name:ident, $open:literal, $close:literal) => {
        #[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name {
            z: [BigInt; 3],
        }

        impl $name {
            pub fn new(coords: [Rational; 3]) -> Result<Self, Error> {
                let v = canonicalize(&coords)?;
                Ok($name {
                    z: [v[0].clone(), v[1].clone(), v[2].clone()],
                })
            }

            pub fn from_ints(coords: [i64; 3]) -> Result<Self, Error> {
                $name::new(coords.map(Rational::from_int))
            }

            pub(crate) fn from_bigints(coords: [BigInt; 3]) -> Result<Self, Error> {
                let v = canonicalize_ints(&coords)?;
                Ok($name {
                    z: [v[0].clone(), v[1].clone(), v[2].clone()],
                })
            }

            pub fn coords(&self) -> [Rational; 3] {
                [
                    Rational::from_bigint(self.z[0].clone()),
                    Rational::from_bigint(self.z[1].clone()),
                    Rational::from_bigint(self.z[2].clone()),
                ]
            }

            pub fn int_coords(&self) -> &[BigInt; 3] {
                &self.z
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(
                    f,
                    concat!($open, "{}:{}:{}", $close),
                    self.z[0], self.z[1], self.z[2]
                )
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{self}")
            }
        }

        impl serde::Serialize for $name {
            fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
                use serde::ser::SerializeSeq;
                let mut seq = ser.serialize_seq(Some(3))?;
                for z in &self.z {
                    seq.serialize_element(&z.to_string())?;
                }
                seq.end()
            }
        }

        impl<'de> serde::Deserialize<'de> for $name {
            fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
                let v = <[String; 3]>::deserialize(de)?;
                let mut coords = [Rational::zero(), Rational::zero(), Rational::zero()];
                for (i, s) in v.iter().enumerate() {
                    coords[i] = s.parse().map_err(serde::de::Error::custom)?;
                }
                $name::new(coords).map_err(serde::de::Error::custom)
            }
        }
    };
}

homogeneous_triple!(ProjPoint, "[", "]");
homogeneous_triple!(ProjLine, "<", ">");

impl ProjPoint {
    /// Incidence with a line: vanishing of the dot product.
    pub fn on_line(&self, l: &ProjLine) -> bool {
        dot(&self.z, &l.z).is_zero()
    }

    /// Whether the point satisfies `z0*z2 = z1^2`.
    pub fn on_conic(&self) -> bool {
        (&self.z[0] * &self.z[2] - &self.z[1] * &self.z[1]).is_zero()
    }
}

impl ProjLine {
    pub fn contains(&self, p: &ProjPoint) -> bool {
        p.on_line(self)
    }
}

/// The parameterization of the conic: `tau([x0:x1]) = [x0^2, x0*x1, x1^2]`.
///
/// Affine values satisfy `tau(a) = [1,a,a^2]`, and `tau(inf) = [0,0,1]`.
pub fn tau(p: &P1Point) -> ProjPoint {
    let [x0, x1] = &p.x;
    ProjPoint::from_bigints([x0 * x0, x0 * x1, x1 * x1]).expect("nonzero pair")
}

/// The tangent line to the conic at `tau(p)`: `<x1^2, -2*x0*x1, x0^2>`.
pub fn tangent_at(p: &P1Point) -> ProjLine {
    let [x0, x1] = &p.x;
    ProjLine::from_bigints([x1 * x1, BigInt::from(-2) * x0 * x1, x0 * x0]).expect("nonzero pair")
}

/// Line through two distinct points (cross product).
pub fn join(p: &ProjPoint, q: &ProjPoint) -> Result<ProjLine, Error> {
    if p == q {
        return Err(Error::CoincidentElements);
    }
    ProjLine::from_bigints(cross(&p.z, &q.z))
}

/// Intersection of two distinct lines (cross product).
pub fn meet(l: &ProjLine, m: &ProjLine) -> Result<ProjPoint, Error> {
    if l == m {
        return Err(Error::CoincidentElements);
    }
    ProjPoint::from_bigints(cross(&l.z, &m.z))
}

/// The chord or tangent determined by two conic parameters: `join` when they
/// differ, the tangent when they coincide.
pub fn chord_or_tangent(p: &P1Point, q: &P1Point) -> ProjLine {
    if p == q {
        tangent_at(p)
    } else {
        join(&tau(p), &tau(q)).expect("distinct conic points")
    }
}

/// Polar line of a point with respect to the conic `z0*z2 = z1^2`.
pub fn polar(p: &ProjPoint) -> ProjLine {
    let [z0, z1, z2] = &p.z;
    ProjLine::from_bigints([z2.clone(), BigInt::from(-2) * z1, z0.clone()]).expect("nonzero")
}

/// Pole of a line with respect to the conic: inverse of [`polar`].
pub fn pole(l: &ProjLine) -> ProjPoint {
    let [u0, u1, u2] = &l.z;
    ProjPoint::from_bigints([BigInt::from(2) * u2, -u1.clone(), BigInt::from(2) * u0])
        .expect("nonzero")
}

/// The polar triangle of three conic points and its perspectivity data.
///
/// For distinct conic parameters P, Q, R the poles of QR, PR, PQ form a
/// triangle in perspective with PQR: the connectors concur in `perspector`
/// and the three cross points of corresponding sides lie on `perspectrix`.
#[derive(Clone, Debug)]
pub struct PolarTriangle {
    /// P' = pole(QR), Q' = pole(PR), R' = pole(PQ).
    pub poles: [ProjPoint; 3],
    /// Common point of PP', QQ', RR'.
    pub perspector: ProjPoint,
    /// Line through PQ ∩ P'Q', PR ∩ P'R', QR ∩ Q'R'.
    pub perspectrix: ProjLine,
}

pub fn polar_triangle(p: &P1Point, q: &P1Point, r: &P1Point) -> Result<PolarTriangle, Error> {
    if p == q || p == r || q == r {
        return Err(Error::RepeatedPoints);
    }
    let pt = [tau(p), tau(q), tau(r)];
    let side = |i: usize, j: usize| join(&pt[i], &pt[j]).expect("distinct");
    let sides = [side(1, 2), side(0, 2), side(0, 1)]; // opposite P, Q, R
    let poles = [pole(&sides[0]), pole(&sides[1]), pole(&sides[2])];

    let connectors = [
        join(&pt[0], &poles[0])?,
        join(&pt[1], &poles[1])?,
        join(&pt[2], &poles[2])?,
    ];
    let perspector = meet(&connectors[0], &connectors[1])?;
    if !perspector.on_line(&connectors[2]) {
        return Err(Error::Internal(
            "polar triangle connectors failed to concur".to_string(),
        ));
    }

    let pole_side = |i: usize, j: usize| join(&poles[i], &poles[j]).expect("distinct poles");
    // Cross points of corresponding sides PQ/P'Q', PR/P'R', QR/Q'R'.
    let x_pq = meet(&sides[2], &pole_side(0, 1))?;
    let x_pr = meet(&sides[1], &pole_side(0, 2))?;
    let x_qr = meet(&sides[0], &pole_side(1, 2))?;
    let perspectrix = join(&x_pq, &x_pr)?;
    if !x_qr.on_line(&perspectrix) {
        return Err(Error::Internal(
            "polar triangle cross points failed to align".to_string(),
        ));
    }
    Ok(PolarTriangle {
        poles,
        perspector,
        perspectrix,
    })
}

/// An invertible fractional-linear transformation of the parameter line,
/// acting on `[x0:x1]` by the matrix `[[m00,m01],[m10,m11]]`.
#[derive(Clone, Debug)]
pub struct Mobius {
    m: [[Rational; 2]; 2],
}

impl Mobius {
    pub fn new(m: [[Rational; 2]; 2]) -> Result<Self, Error> {
        let det = &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]);
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(Mobius { m })
    }

    pub fn from_ints(m: [[i64; 2]; 2]) -> Result<Self, Error> {
        Mobius::new(m.map(|row| row.map(Rational::from_int)))
    }

    pub fn identity() -> Self {
        Mobius::from_ints([[1, 0], [0, 1]]).expect("invertible")
    }

    pub fn apply(&self, p: &P1Point) -> P1Point {
        let [x0, x1] = p.coords();
        let y0 = &(&self.m[0][0] * &x0) + &(&self.m[0][1] * &x1);
        let y1 = &(&self.m[1][0] * &x0) + &(&self.m[1][1] * &x1);
        P1Point::new(y0, y1).expect("invertible action")
    }

    pub fn inverse(&self) -> Mobius {
        let [[a, b], [c, d]] = &self.m;
        Mobius::new([[d.clone(), -b], [-c, a.clone()]]).expect("invertible")
    }

    /// Composition: `(self ∘ other)(p) = self(other(p))`.
    pub fn compose(&self, other: &Mobius) -> Mobius {
        let mut m = [
            [Rational::zero(), Rational::zero()],
            [Rational::zero(), Rational::zero()],
        ];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = &(&self.m[i][0] * &other.m[0][j]) + &(&self.m[i][1] * &other.m[1][j]);
            }
        }
        Mobius { m }
    }

    /// The unique transformation sending three distinct points to 0, 1, inf.
    pub fn to_zero_one_inf(p0: &P1Point, p1: &P1Point, p2: &P1Point) -> Result<Mobius, Error> {
        if p0 == p1 || p0 == p2 || p1 == p2 {
            return Err(Error::RepeatedPoints);
        }
        let det2 = |u: &P1Point, v: &P1Point| {
            let [u0, u1] = u.coords();
            let [v0, v1] = v.coords();
            &(&u0 * &v1) - &(&u1 * &v0)
        };
        // Row 1 annihilates p2 (image [*:0] = 0), row 2 annihilates p0
        // (image [0:*] = inf); scales make p1 land on [1:1].
        let [a0, a1] = p0.coords();
        let [c0, c1] = p2.coords();
        let s0 = det2(p1, p0);
        let s1 = det2(p1, p2);
        Mobius::new([[&c1 * &s0, -&(&c0 * &s0)], [&a1 * &s1, -&(&a0 * &s1)]])
    }
}

/// Chooses a transformation sending every listed point to a finite value, or
/// `None` when all are already finite. The map is `z -> 1/(z - c)` for the
/// smallest nonnegative integer `c` not among the values.
pub fn finitizing_mobius(points: &[P1Point]) -> Option<Mobius> {
    if points.iter().all(|p| !p.is_infinity()) {
        return None;
    }
    let mut c: i64 = 0;
    loop {
        let cand = P1Point::from_int(c);
        if points.iter().all(|p| *p != cand) {
            break;
        }
        c += 1;
    }
    // [x0:x1] -> [x1 - c*x0 : x0]
    Some(
        Mobius::new([
            [Rational::from_int(-c), Rational::one()],
            [Rational::one(), Rational::zero()],
        ])
        .expect("invertible"),
    )
}

/// A projective transformation of the plane, as a 3x3 rational matrix acting
/// on points; lines transform by the adjugate transpose.
#[derive(Clone, Debug)]
pub struct PlaneMap {
    n: [[Rational; 3]; 3],
}

impl PlaneMap {
    pub fn apply_point(&self, p: &ProjPoint) -> ProjPoint {
        let z = p.coords();
        let mut w = [Rational::zero(), Rational::zero(), Rational::zero()];
        for (wi, row) in w.iter_mut().zip(&self.n) {
            for (nij, zj) in row.iter().zip(&z) {
                *wi += nij * zj;
            }
        }
        ProjPoint::new(w).expect("invertible action")
    }

    /// Image of a line: `l' = adj(N)^T * l`, so that incidence is preserved.
    pub fn apply_line(&self, l: &ProjLine) -> ProjLine {
        let adj = self.adjugate();
        let u = l.coords();
        let mut w = [Rational::zero(), Rational::zero(), Rational::zero()];
        for (i, wi) in w.iter_mut().enumerate() {
            for (adj_row, uj) in adj.iter().zip(&u) {
                *wi += &adj_row[i] * uj;
            }
        }
        ProjLine::new(w).expect("invertible action")
    }

    /// Pulls a line back through the map: `l = N^T * l'`.
    pub fn pull_back_line(&self, l: &ProjLine) -> ProjLine {
        let u = l.coords();
        let mut w = [Rational::zero(), Rational::zero(), Rational::zero()];
        for (i, wi) in w.iter_mut().enumerate() {
            for (n_row, uj) in self.n.iter().zip(&u) {
                *wi += &n_row[i] * uj;
            }
        }
        ProjLine::new(w).expect("invertible action")
    }

    fn adjugate(&self) -> [[Rational; 3]; 3] {
        let n = &self.n;
        let minor = |r: [usize; 2], c: [usize; 2]| {
            &(&n[r[0]][c[0]] * &n[r[1]][c[1]]) - &(&n[r[0]][c[1]] * &n[r[1]][c[0]])
        };
        let mut adj = [
            [Rational::zero(), Rational::zero(), Rational::zero()],
            [Rational::zero(), Rational::zero(), Rational::zero()],
            [Rational::zero(), Rational::zero(), Rational::zero()],
        ];
        #[allow(clippy::needless_range_loop)]
        for i in 0..3 {
            for j in 0..3 {
                let rows = [(i + 1) % 3, (i + 2) % 3];
                let cols = [(j + 1) % 3, (j + 2) % 3];
                let rows = [rows[0].min(rows[1]), rows[0].max(rows[1])];
                let cols = [cols[0].min(cols[1]), cols[0].max(cols[1])];
                let m = minor(rows, cols);
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                // adj = transpose of cofactor matrix
                adj[j][i] = m.scale_by(sign);
            }
        }
        adj
    }

    pub fn compose(&self, other: &PlaneMap) -> PlaneMap {
        let mut n = [
            [Rational::zero(), Rational::zero(), Rational::zero()],
            [Rational::zero(), Rational::zero(), Rational::zero()],
            [Rational::zero(), Rational::zero(), Rational::zero()],
        ];
        for (i, row) in n.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                for k in 0..3 {
                    *entry += &self.n[i][k] * &other.n[k][j];
                }
            }
        }
        PlaneMap { n }
    }

    /// Canonical primitive form of the matrix entries, for projective
    /// comparison of maps.
    pub fn canonical_entries(&self) -> Vec<BigInt> {
        let flat: Vec<Rational> = self.n.iter().flatten().cloned().collect();
        canonicalize(&flat).expect("nonzero matrix")
    }
}

trait ScaleBy {
    fn scale_by(&self, s: i64) -> Rational;
}

impl ScaleBy for Rational {
    fn scale_by(&self, s: i64) -> Rational {
        self * &Rational::from_int(s)
    }
}

/// The plane transformation induced by a parameter-line transformation: the
/// symmetric square of the 2x2 matrix. It preserves the conic and satisfies
/// `tau(m(p)) = induced(m)(tau(p))`.
pub fn induced_plane_map(m: &Mobius) -> PlaneMap {
    let [[a, b], [c, d]] = &m.m;
    let two = Rational::from_int(2);
    PlaneMap {
        n: [
            [a * a, &two * &(a * b), b * b],
            [a * c, &(a * d) + &(b * c), b * d],
            [c * c, &two * &(c * d), d * d],
        ],
    }
}
