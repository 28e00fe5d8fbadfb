//! Arithmetic in the twist group Pic/2, modeled as an F2-vector space over a
//! fixed registry of line-bundle symbols, and integer degrees with their
//! mod-4 view. Squares of line bundles vanish in Pic/2, which is what every
//! formula below reduces through.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Named generators of the twist group.
///
/// O1 is the Pfaffian line bundle O(1) generating the free part of the
/// Picard group; DetEnTilde, DetEn and E1 are determinant and first-piece
/// bundles of the flag construction; DetE is the determinant of a bundle
/// being projectivized; BaseL is a formal line bundle pulled back from the
/// base.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LineBundleSymbol {
    BaseL,
    DetE,
    DetEn,
    DetEnTilde,
    E1,
    O1,
}

impl LineBundleSymbol {
    pub const ALL: [LineBundleSymbol; 6] = [
        LineBundleSymbol::BaseL,
        LineBundleSymbol::DetE,
        LineBundleSymbol::DetEn,
        LineBundleSymbol::DetEnTilde,
        LineBundleSymbol::E1,
        LineBundleSymbol::O1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LineBundleSymbol::BaseL => "BaseL",
            LineBundleSymbol::DetE => "DetE",
            LineBundleSymbol::DetEn => "DetEn",
            LineBundleSymbol::DetEnTilde => "DetEnTilde",
            LineBundleSymbol::E1 => "E1",
            LineBundleSymbol::O1 => "O1",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.name() == name)
    }

    fn bit(self) -> u8 {
        1 << Self::ALL
            .iter()
            .position(|&s| s == self)
            .expect("registered symbol")
    }
}

impl fmt::Display for LineBundleSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Element of Pic/2: the F2-span of the symbol registry. Addition is
/// symmetric difference of supports, so every class is self-inverse.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwistClass(u8);

impl TwistClass {
    pub const TRIVIAL: TwistClass = TwistClass(0);

    pub fn singleton(symbol: LineBundleSymbol) -> Self {
        TwistClass(symbol.bit())
    }

    pub fn from_symbols(symbols: &[LineBundleSymbol]) -> Self {
        TwistClass(symbols.iter().fold(0, |acc, s| acc | s.bit()))
    }

    /// All 2^6 classes, for exhaustive checks.
    pub fn all() -> impl Iterator<Item = TwistClass> {
        (0u8..64).map(TwistClass)
    }

    pub fn is_trivial(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, symbol: LineBundleSymbol) -> bool {
        self.0 & symbol.bit() != 0
    }

    /// Support in registry order.
    pub fn symbols(self) -> Vec<LineBundleSymbol> {
        LineBundleSymbol::ALL
            .into_iter()
            .filter(|s| self.contains(*s))
            .collect()
    }
}

impl std::ops::Add for TwistClass {
    type Output = TwistClass;

    // Addition over F2 is xor of the support masks.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, other: TwistClass) -> TwistClass {
        TwistClass(self.0 ^ other.0)
    }
}

impl fmt::Display for TwistClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.symbols().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for TwistClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for TwistClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let names: Vec<&str> = self.symbols().iter().map(|s| s.name()).collect();
        names.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TwistClass {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let names = Vec::<String>::deserialize(deserializer)?;
        let mut class = TwistClass::TRIVIAL;
        for name in &names {
            let symbol = LineBundleSymbol::from_name(name)
                .ok_or_else(|| D::Error::custom(format!("unknown line bundle symbol {name:?}")))?;
            if class.contains(symbol) {
                return Err(D::Error::custom(format!("duplicate symbol {name:?}")));
            }
            class = class + TwistClass::singleton(symbol);
        }
        Ok(class)
    }
}

/// Group law of Pic/2: symmetric difference of supports.
pub fn twist_add(a: TwistClass, b: TwistClass) -> TwistClass {
    a + b
}

/// Class of O(k): trivial for even k since O(k) is then a square.
pub fn o_twist(k: i64) -> TwistClass {
    if k.rem_euclid(2) == 0 {
        TwistClass::TRIVIAL
    } else {
        TwistClass::singleton(LineBundleSymbol::O1)
    }
}

/// Class of det L_n^+, which is det(E~_n) tensor O(-2); the O(-2) factor is
/// a square.
pub fn det_ln_twist(n: u32) -> TwistClass {
    assert!(n >= 2, "det L_n^+ needs n >= 2");
    TwistClass::singleton(LineBundleSymbol::DetEnTilde)
}

/// Class of the relative canonical bundle of the closed-stratum embedding:
/// O(-2) tensor det(E~_n) tensor E_1^(n-2) at depth 0, with exponent n-4 one
/// level into the recursion (depth 1). Both depths give the same class since
/// the exponents share parity.
pub fn omega_iota_twist(n: u32, depth: u8) -> TwistClass {
    assert!(depth <= 1, "depth is 0 or 1");
    assert!(n >= 2, "the embedding needs n >= 2");
    let exponent = i64::from(n) - if depth == 0 { 2 } else { 4 };
    let mut class = TwistClass::singleton(LineBundleSymbol::DetEnTilde);
    if exponent.rem_euclid(2) == 1 {
        class = class + TwistClass::singleton(LineBundleSymbol::E1);
    }
    class
}

/// Class of the composed two-step embedding for odd n: the sum of the
/// depth-1 and depth-0 classes, which must be trivial.
pub fn omega_theta_twist(n: u32) -> Result<TwistClass> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::ParityViolation {
            rule: "omega_theta_twist",
            required: "odd n >= 3",
            got: i64::from(n),
        });
    }
    Ok(twist_add(omega_iota_twist(n, 1), omega_iota_twist(n, 0)))
}

/// Class of the relative canonical bundle of a projective bundle P(E) over
/// its base, where r is the relative dimension and rank E = r + 1: the
/// formula det(E)^(-1) tensor O(-r-1) reduces to DetE plus O1 when r is
/// even. The r = 0 case is the degenerate P(E) = X and is evaluated
/// formally.
pub fn relative_canonical_twist(r: u32) -> TwistClass {
    TwistClass::singleton(LineBundleSymbol::DetE) + o_twist(-i64::from(r) - 1)
}

/// Integer degree with its mod-4 residue, the grading index of a 4-periodic
/// theory.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeClass {
    degree: i64,
}

impl DegreeClass {
    pub fn new(degree: i64) -> Self {
        DegreeClass { degree }
    }

    pub fn degree(self) -> i64 {
        self.degree
    }

    /// Residue in {0, 1, 2, 3}, also for negative degrees.
    pub fn residue(self) -> u8 {
        self.degree.rem_euclid(4) as u8
    }

    pub fn shifted(self, d: i64) -> Self {
        DegreeClass {
            degree: self.degree + d,
        }
    }
}

impl fmt::Display for DegreeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.degree)
    }
}
