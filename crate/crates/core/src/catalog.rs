//! Named groups.
//!
//! Cyclic, dihedral, symmetric and alternating groups are permutation groups
//! on their natural points. Generalized quaternion and extraspecial groups
//! are closed from explicit normal forms; direct products are closed over
//! the factors' generators placed in separate coordinates. In every case the
//! canonical ordering is the breadth-first one described in [`crate::group`].
//!
//! CLI descriptors: `C4`, `D4` (dihedral of order 8), `S3`, `A4`, `Q8`,
//! `Q16`, `ES+32`, `ES-27`, and products joined by `x` such as `C2xC4`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::{closure, group_from_generators, FiniteGroup, GroupElement, DEFAULT_ORDER_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CatalogEntry {
    Cyclic(usize),
    /// Dihedral group of order `2n`.
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    /// Generalized quaternion group of the given order (a power of two, at least 8).
    Quaternion(usize),
    /// Extraspecial group of order `p^(1+2r)`.
    Extraspecial {
        p: usize,
        r: usize,
        sign: Sign,
    },
    DirectProduct(Vec<CatalogEntry>),
}

/// Builds a named group from scalar parameters, e.g. `("dihedral", [4])` or
/// `("extraspecial", [2, 2, 1])` where the last parameter is `1` for the `+`
/// type and `-1` for the `-` type.
pub fn catalog_group(name: &str, params: &[i64]) -> Result<FiniteGroup> {
    let bad = |reason: &str| Error::UnsupportedParams { name: name.to_string(), reason: reason.to_string() };
    let one = || -> Result<usize> {
        match params {
            [n] if *n >= 1 => Ok(*n as usize),
            _ => Err(bad("expected one positive parameter")),
        }
    };
    let entry = match name {
        "cyclic" => CatalogEntry::Cyclic(one()?),
        "dihedral" => CatalogEntry::Dihedral(one()?),
        "symmetric" => CatalogEntry::Symmetric(one()?),
        "alternating" => CatalogEntry::Alternating(one()?),
        "quaternion" => CatalogEntry::Quaternion(one()?),
        "extraspecial" => match params {
            [p, r, s] if *p >= 2 && *r >= 1 && (*s == 1 || *s == -1) => CatalogEntry::Extraspecial {
                p: *p as usize,
                r: *r as usize,
                sign: if *s == 1 { Sign::Plus } else { Sign::Minus },
            },
            _ => return Err(bad("expected p, r and sign ±1")),
        },
        _ => return Err(Error::UnknownGroup(name.to_string())),
    };
    entry.build()
}

impl CatalogEntry {
    pub fn build(&self) -> Result<FiniteGroup> {
        self.build_capped(DEFAULT_ORDER_CAP)
    }

    /// Order predicted without building; `None` if the entry is invalid.
    pub fn expected_order(&self) -> Option<u128> {
        match *self {
            CatalogEntry::Cyclic(n) if n >= 1 => Some(n as u128),
            CatalogEntry::Dihedral(n) if n >= 1 => Some(2 * n as u128),
            CatalogEntry::Symmetric(n) if n >= 1 => Some((1..=n as u128).product()),
            CatalogEntry::Alternating(n) if n >= 1 => Some(if n < 2 { 1 } else { (3..=n as u128).product() }),
            CatalogEntry::Quaternion(n) if n >= 8 && n.is_power_of_two() => Some(n as u128),
            CatalogEntry::Extraspecial { p, r, .. } if is_prime(p) && r >= 1 => {
                (p as u128).checked_pow(1 + 2 * r as u32)
            }
            CatalogEntry::DirectProduct(ref fs) if !fs.is_empty() => {
                fs.iter().try_fold(1u128, |acc, f| acc.checked_mul(f.expected_order()?))
            }
            _ => None,
        }
    }

    pub fn build_capped(&self, cap: usize) -> Result<FiniteGroup> {
        let unsupported =
            |reason: &str| Error::UnsupportedParams { name: self.to_string(), reason: reason.to_string() };
        match self.expected_order() {
            None => return Err(unsupported("parameters out of range")),
            Some(o) if o > cap as u128 => return Err(Error::GroupTooLarge { cap }),
            _ => {}
        }
        match *self {
            CatalogEntry::Cyclic(n) => perm_group(&[cycle(1..=n)], n),
            CatalogEntry::Dihedral(1) => perm_group(&["(1 2)".to_string()], 2),
            CatalogEntry::Dihedral(2) => perm_group(&["(1 2)(3 4)".into(), "(1 3)(2 4)".into()], 4),
            CatalogEntry::Dihedral(n) => {
                let reflection: String = (1..=n / 2).map(|i| format!("({} {})", i, n + 1 - i)).collect();
                perm_group(&[cycle(1..=n), reflection], n)
            }
            CatalogEntry::Symmetric(1) => perm_group(&[], 1),
            CatalogEntry::Symmetric(n) => perm_group(&["(1 2)".to_string(), cycle(1..=n)], n),
            CatalogEntry::Alternating(n) if n < 3 => perm_group(&[], n),
            CatalogEntry::Alternating(n) => {
                let gens: Vec<String> = (3..=n).map(|k| format!("(1 2 {k})")).collect();
                perm_group(&gens, n)
            }
            CatalogEntry::Quaternion(n) => generalized_quaternion(n / 4, cap),
            CatalogEntry::Extraspecial { p, r, sign } => extraspecial(p, r, sign, cap),
            CatalogEntry::DirectProduct(ref factors) => {
                let groups = factors.iter().map(|f| f.build_capped(cap)).collect::<Result<Vec<_>>>()?;
                direct_product(&groups, cap)
            }
        }
    }

    /// The default verification catalog, optionally with the order-32
    /// extraspecial groups.
    pub fn default_catalog(big: bool) -> Vec<CatalogEntry> {
        let mut names = vec!["C2", "C4", "C6", "C2xC2", "C2xC4", "S3", "D4", "Q8", "D6", "A4", "Q16", "S4"];
        if big {
            names.extend(["ES+32", "ES-32"]);
        }
        names.into_iter().map(|n| n.parse().expect("catalog names parse")).collect()
    }

    pub fn abelian_catalog() -> Vec<CatalogEntry> {
        ["C1", "C2", "C3", "C4", "C5", "C6", "C2xC2", "C2xC4", "C2xC2xC2", "C3xC3"]
            .into_iter()
            .map(|n| n.parse().expect("catalog names parse"))
            .collect()
    }
}

fn cycle(points: impl Iterator<Item = usize>) -> String {
    let pts: Vec<String> = points.map(|p| p.to_string()).collect();
    if pts.len() < 2 {
        String::new()
    } else {
        format!("({})", pts.join(" "))
    }
}

fn perm_group(gens: &[String], degree: usize) -> Result<FiniteGroup> {
    group_from_generators(gens, degree.max(1))
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// `⟨a, b | a^(2m), b² = a^m, b⁻¹ab = a⁻¹⟩` on normal forms `a^i b^j`.
fn generalized_quaternion(m: usize, cap: usize) -> Result<FiniteGroup> {
    let n = 2 * m;
    let mul = |x: &(usize, usize), y: &(usize, usize)| {
        let (i, j) = *x;
        let (k, l) = *y;
        // b^j a^k = a^((-1)^j k) b^j
        let k = if j == 1 { (n - k) % n } else { k };
        let extra = if j == 1 && l == 1 { m } else { 0 };
        ((i + k + extra) % n, (j + l) % 2)
    };
    Ok(closure(&[(1, 0), (0, 1)], (0, 0), mul, cap)?.group)
}

/// A factor of an extraspecial central product with a chosen central element
/// of order `p`.
struct CentralFactor {
    group: FiniteGroup,
    z: GroupElement,
}

impl CentralFactor {
    fn new(group: FiniteGroup) -> Self {
        let z = group
            .center()
            .members()
            .iter()
            .copied()
            .find(|x| !x.is_identity())
            .expect("extraspecial factor has nontrivial center");
        CentralFactor { group, z }
    }

    /// Splits `x` as `t · z^k` with `t` the least element of `x⟨z⟩`.
    fn split(&self, x: GroupElement) -> (GroupElement, usize) {
        let mut best = (x, 0);
        let mut y = x;
        let mut k = 0;
        loop {
            y = self.group.mul(y, self.group.inv(self.z));
            k += 1;
            if y == x {
                break;
            }
            if y < best.0 {
                best = (y, k);
            }
        }
        best
    }
}

/// Extraspecial group of order `p^(1+2r)`: the central product of `r - 1`
/// copies of the `+` type of order `p³` with one factor of the requested
/// sign. For `p = 2` the factors are D8 (`+`) and Q8 (`-`); for odd `p` they
/// are the Heisenberg group (`+`) and `⟨x, y | x^(p²), y^p, y⁻¹xy = x^(1+p)⟩`
/// (`-`).
fn extraspecial(p: usize, r: usize, sign: Sign, cap: usize) -> Result<FiniteGroup> {
    let plus = || -> Result<FiniteGroup> {
        if p == 2 {
            CatalogEntry::Dihedral(4).build()
        } else {
            let mul = |x: &(usize, usize, usize), y: &(usize, usize, usize)| {
                ((x.0 + y.0) % p, (x.1 + y.1) % p, (x.2 + y.2 + x.0 * y.1) % p)
            };
            Ok(closure(&[(1, 0, 0), (0, 1, 0)], (0, 0, 0), mul, cap)?.group)
        }
    };
    let minus = || -> Result<FiniteGroup> {
        if p == 2 {
            CatalogEntry::Quaternion(8).build()
        } else {
            let q = p * p;
            // y^j x^k = x^(k(1-p)^j) y^j, and (1-p)^j = 1 - jp mod p².
            let mul = |x: &(usize, usize), y: &(usize, usize)| {
                let twist = (q + 1 - (x.1 * p) % q) % q;
                ((x.0 + y.0 * twist) % q, (x.1 + y.1) % p)
            };
            Ok(closure(&[(1, 0), (0, 1)], (0, 0), mul, cap)?.group)
        }
    };
    let mut factors = Vec::with_capacity(r);
    for _ in 1..r {
        factors.push(CentralFactor::new(plus()?));
    }
    factors.push(CentralFactor::new(match sign {
        Sign::Plus => plus()?,
        Sign::Minus => minus()?,
    }));

    // Normal form: every factor but the first holds a least coset
    // representative; central parts are pushed into the first factor.
    let normalize = |mut v: Vec<GroupElement>| {
        for i in 1..v.len() {
            let (t, k) = factors[i].split(v[i]);
            v[i] = t;
            for _ in 0..k {
                v[0] = factors[0].group.mul(v[0], factors[0].z);
            }
        }
        v
    };
    let mul = |x: &Vec<GroupElement>, y: &Vec<GroupElement>| {
        let v = x.iter().zip(y).zip(&factors).map(|((&a, &b), f)| f.group.mul(a, b)).collect();
        normalize(v)
    };
    let identity = vec![GroupElement::IDENTITY; r];
    let mut gens = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        for &g in f.group.generators() {
            let mut v = identity.clone();
            v[i] = g;
            gens.push(normalize(v));
        }
    }
    Ok(closure(&gens, identity, mul, cap)?.group)
}

/// Direct product, generated by each factor's generators in its own slot.
pub fn direct_product(groups: &[FiniteGroup], cap: usize) -> Result<FiniteGroup> {
    let identity = vec![GroupElement::IDENTITY; groups.len()];
    let mut gens = Vec::new();
    for (i, g) in groups.iter().enumerate() {
        for &x in g.generators() {
            let mut v = identity.clone();
            v[i] = x;
            gens.push(v);
        }
    }
    let mul = |x: &Vec<GroupElement>, y: &Vec<GroupElement>| {
        x.iter().zip(y).zip(groups).map(|((&a, &b), g)| g.mul(a, b)).collect()
    };
    Ok(closure(&gens, identity, mul, cap)?.group)
}

impl FromStr for CatalogEntry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownGroup(s.to_string());
        let parts: Vec<&str> = s.trim().split('x').collect();
        if parts.len() > 1 {
            let factors = parts.iter().map(|p| p.parse()).collect::<Result<Vec<_>>>()?;
            return Ok(CatalogEntry::DirectProduct(factors));
        }
        let s = parts[0];
        if let Some(rest) = s.strip_prefix("ES") {
            let (sign, digits) = match rest.chars().next() {
                Some('+') => (Sign::Plus, &rest[1..]),
                Some('-') => (Sign::Minus, &rest[1..]),
                _ => return Err(unknown()),
            };
            let order: usize = digits.parse().map_err(|_| unknown())?;
            let p = (2..=order).find(|d| order.is_multiple_of(*d)).ok_or_else(unknown)?;
            let mut e = 0;
            let mut m = order;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            if m != 1 || e < 3 || e % 2 == 0 {
                return Err(unknown());
            }
            return Ok(CatalogEntry::Extraspecial { p, r: (e - 1) / 2, sign });
        }
        let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(unknown)?;
        let (kind, num) = s.split_at(split);
        let n: usize = num.parse().map_err(|_| unknown())?;
        Ok(match kind {
            "C" | "Z" => CatalogEntry::Cyclic(n),
            "D" => CatalogEntry::Dihedral(n),
            "S" => CatalogEntry::Symmetric(n),
            "A" => CatalogEntry::Alternating(n),
            "Q" => CatalogEntry::Quaternion(n),
            _ => return Err(unknown()),
        })
    }
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogEntry::Cyclic(n) => write!(f, "C{n}"),
            CatalogEntry::Dihedral(n) => write!(f, "D{n}"),
            CatalogEntry::Symmetric(n) => write!(f, "S{n}"),
            CatalogEntry::Alternating(n) => write!(f, "A{n}"),
            CatalogEntry::Quaternion(n) => write!(f, "Q{n}"),
            CatalogEntry::Extraspecial { p, r, sign } => {
                let s = if *sign == Sign::Plus { '+' } else { '-' };
                write!(f, "ES{s}{}", p.pow(1 + 2 * *r as u32))
            }
            CatalogEntry::DirectProduct(fs) => {
                let names: Vec<String> = fs.iter().map(ToString::to_string).collect();
                write!(f, "{}", names.join("x"))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(name: &str) -> FiniteGroup {
        name.parse::<CatalogEntry>().unwrap().build().unwrap()
    }

    #[test]
    fn orders() {
        for (name, order) in [
            ("C1", 1),
            ("C4", 4),
            ("D4", 8),
            ("D6", 12),
            ("D2", 4),
            ("S3", 6),
            ("S4", 24),
            ("A4", 12),
            ("A5", 60),
            ("Q8", 8),
            ("Q16", 16),
            ("ES+32", 32),
            ("ES-32", 32),
            ("ES+27", 27),
            ("ES-27", 27),
            ("C2xC4", 8),
            ("C2xC2xC2", 8),
        ] {
            assert_eq!(build(name).order(), order, "{name}");
        }
    }

    #[test]
    fn named_constructor() {
        let c4 = catalog_group("cyclic", &[4]).unwrap();
        assert_eq!(c4.order(), 4);
        assert!(c4.is_abelian());
        let s3 = catalog_group("symmetric", &[3]).unwrap();
        assert!(s3.center().is_trivial());
        assert_eq!(catalog_group("extraspecial", &[2, 2, 1]).unwrap().order(), 32);
        assert!(matches!(catalog_group("sporadic", &[1]), Err(Error::UnknownGroup(_))));
        assert!(matches!(catalog_group("cyclic", &[0]), Err(Error::UnsupportedParams { .. })));
        assert!(matches!(catalog_group("symmetric", &[7]), Err(Error::GroupTooLarge { .. })));
        assert!(matches!(catalog_group("quaternion", &[12]), Err(Error::UnsupportedParams { .. })));
    }

    #[test]
    fn descriptors_round_trip() {
        for name in ["C4", "D4", "S3", "A4", "Q8", "Q16", "ES+32", "ES-32", "C2xC4", "ES-27"] {
            assert_eq!(name.parse::<CatalogEntry>().unwrap().to_string(), name);
        }
        assert!("X5".parse::<CatalogEntry>().is_err());
        assert!("ES+16".parse::<CatalogEntry>().is_err());
        assert!("ES*32".parse::<CatalogEntry>().is_err());
    }

    #[test]
    fn quaternion_groups() {
        for name in ["Q8", "Q16"] {
            let g = build(name);
            // Generalized quaternion: a unique involution, which is central.
            let inv: Vec<_> = g.elements().filter(|&x| g.element_order(x) == 2).collect();
            assert_eq!(inv.len(), 1, "{name}");
            assert_eq!(g.center().members(), &[GroupElement::IDENTITY, inv[0]]);
        }
    }

    /// `G/Z` elementary abelian of rank `2r` and `Z = [G, G]` of order `p`.
    fn check_extraspecial(g: &FiniteGroup, p: usize, r: usize) {
        let z = g.center();
        assert_eq!(z.order(), p);
        assert_eq!(g.commutator_subgroup(), z);
        for x in g.elements() {
            let mut y = x;
            for _ in 1..p {
                y = g.mul(y, x);
            }
            assert!(z.contains(y), "x^p central");
        }
        assert_eq!(g.order() / z.order(), p.pow(2 * r as u32));
    }

    #[test]
    fn extraspecial_structure() {
        check_extraspecial(&build("ES+32"), 2, 2);
        check_extraspecial(&build("ES-32"), 2, 2);
        check_extraspecial(&build("ES+27"), 3, 1);
        check_extraspecial(&build("ES-27"), 3, 1);
        check_extraspecial(&build("ES+8"), 2, 1);
    }

    #[test]
    fn extraspecial_types_differ() {
        // The + type of order 32 has 19 involutions, the - type has 11.
        let count = |g: &FiniteGroup| g.elements().filter(|&x| g.element_order(x) == 2).count();
        assert_eq!(count(&build("ES+32")), 19);
        assert_eq!(count(&build("ES-32")), 11);
        // Exponent p for the + type, p² for the - type at odd p.
        let exp = |g: &FiniteGroup| g.elements().map(|x| g.element_order(x)).max().unwrap();
        assert_eq!(exp(&build("ES+27")), 3);
        assert_eq!(exp(&build("ES-27")), 9);
    }

    #[test]
    fn every_catalog_group_validates() {
        for e in CatalogEntry::default_catalog(true).iter().chain(&CatalogEntry::abelian_catalog()) {
            e.build().unwrap().validate().unwrap();
        }
    }
}
