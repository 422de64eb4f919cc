//! Pauli group elements with phase tracking and the single-qubit Clifford
//! conjugation table.
//!
//! An element is stored as `i^e · X^x Z^z` with `x`, `z` bit vectors and `e`
//! the i-exponent mod 4. The letter at a qubit follows the convention
//! `Y = i·XZ`, so `(x,z) = (1,1)` displays as `Y` and the displayed sign of
//! an element is `i^(e - #Y mod 4)`.

use crate::bits::BitVec;
use crate::error::{Error, Result};
use std::fmt;

/// Single-qubit Pauli letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    I,
    X,
    Y,
    Z,
}

/// A phase from {+1, +i, -1, -i}, stored as the exponent of i.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Phase(pub u8);

impl Phase {
    pub fn is_real(self) -> bool {
        self.0 % 2 == 0
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 % 4 {
            0 => write!(f, "+"),
            1 => write!(f, "+i"),
            2 => write!(f, "-"),
            _ => write!(f, "-i"),
        }
    }
}

/// One element of the n-qubit Pauli group.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliElement {
    x: BitVec,
    z: BitVec,
    /// Exponent of i in the `i^e X^x Z^z` form.
    exp: u8,
}

impl PauliElement {
    pub fn identity(n: usize) -> Self {
        PauliElement {
            x: BitVec::zeros(n),
            z: BitVec::zeros(n),
            exp: 0,
        }
    }

    pub fn from_bits(x: BitVec, z: BitVec, exp: u8) -> Self {
        assert_eq!(x.len(), z.len());
        PauliElement { x, z, exp: exp % 4 }
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn xbits(&self) -> &BitVec {
        &self.x
    }

    pub fn zbits(&self) -> &BitVec {
        &self.z
    }

    pub fn letter_at(&self, q: usize) -> Letter {
        match (self.x.get(q), self.z.get(q)) {
            (false, false) => Letter::I,
            (true, false) => Letter::X,
            (true, true) => Letter::Y,
            (false, true) => Letter::Z,
        }
    }

    /// Number of non-identity letters.
    pub fn weight(&self) -> usize {
        self.x.or(&self.z).count_ones()
    }

    /// Indices of the non-identity letters.
    pub fn support(&self) -> BitVec {
        self.x.or(&self.z)
    }

    pub fn is_identity_letters(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// Phase as displayed in letter form (`i^(e - #Y)`).
    pub fn phase(&self) -> Phase {
        let ys = self.x.and(&self.z).count_ones() as u8;
        Phase((self.exp + 4 - ys % 4) % 4)
    }

    /// Raw exponent of the `i^e X^x Z^z` form.
    pub fn exp(&self) -> u8 {
        self.exp
    }

    /// Group product. `i^e1 X^x1 Z^z1 · i^e2 X^x2 Z^z2` picks up a sign from
    /// commuting `Z^z1` past `X^x2`.
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n(), other.n());
        let sign = 2 * self.z.dot(&other.x) as u8;
        let mut x = self.x.clone();
        x.xor_assign(&other.x);
        let mut z = self.z.clone();
        z.xor_assign(&other.z);
        PauliElement {
            x,
            z,
            exp: (self.exp + other.exp + sign) % 4,
        }
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.x.dot(&other.z) == self.z.dot(&other.x)
    }

    /// Conjugates by a single-qubit Clifford gate at qubit `q`.
    pub fn conjugate(&self, q: usize, gate: CliffordGate) -> Result<Self> {
        if q >= self.n() {
            return Err(Error::VertexOutOfRange { vertex: q, n: self.n() });
        }
        let mut e = self.exp;
        let (xq, zq) = (self.x.get(q), self.z.get(q));
        let mut out = self.clone();
        use CliffordGate::*;
        match gate {
            H => {
                // X <-> Z, XZ -> ZX = -XZ
                if xq && zq {
                    e += 2;
                }
                out.x.set(q, zq);
                out.z.set(q, xq);
            }
            S => {
                // X -> iXZ
                if xq {
                    e += 1;
                    out.z.toggle(q);
                }
            }
            Sdg => {
                // X -> -iXZ
                if xq {
                    e += 3;
                    out.z.toggle(q);
                }
            }
            X => {
                if zq {
                    e += 2;
                }
            }
            Y => {
                if xq != zq {
                    e += 2;
                }
            }
            Z => {
                if xq {
                    e += 2;
                }
            }
            SqrtX => {
                // Z -> iXZ
                if zq {
                    e += 1;
                    out.x.toggle(q);
                }
            }
            SqrtXdg => {
                // Z -> -iXZ
                if zq {
                    e += 3;
                    out.x.toggle(q);
                }
            }
        }
        out.exp = e % 4;
        Ok(out)
    }

    /// Parses `+XZZ` style text: optional sign, then one letter per qubit.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let (sign, rest) = match text.strip_prefix('-') {
            Some(rest) => (2u8, rest),
            None => (0u8, text.strip_prefix('+').unwrap_or(text)),
        };
        let n = rest.chars().count();
        let mut x = BitVec::zeros(n);
        let mut z = BitVec::zeros(n);
        let mut ys = 0u8;
        for (q, ch) in rest.chars().enumerate() {
            match ch {
                'I' => {}
                'X' => x.set(q, true),
                'Z' => z.set(q, true),
                'Y' => {
                    x.set(q, true);
                    z.set(q, true);
                    ys += 1;
                }
                _ => return Err(Error::Parse(format!("unexpected Pauli letter {ch:?}"))),
            }
        }
        Ok(PauliElement {
            x,
            z,
            exp: (sign + ys) % 4,
        })
    }
}

impl fmt::Display for PauliElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.phase())?;
        for q in 0..self.n() {
            write!(f, "{:?}", self.letter_at(q))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The single-qubit Clifford gates used for conjugation. `SqrtX` acts like
/// `e^{i pi/4 X}` and `SqrtXdg` like `e^{-i pi/4 X}`; up to global phase,
/// `e^{i pi/4 Z}` acts like `Sdg` and `e^{-i pi/4 Z}` like `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CliffordGate {
    H,
    S,
    Sdg,
    X,
    Y,
    Z,
    SqrtX,
    SqrtXdg,
}

impl CliffordGate {
    pub const ALL: [CliffordGate; 8] = [
        CliffordGate::H,
        CliffordGate::S,
        CliffordGate::Sdg,
        CliffordGate::X,
        CliffordGate::Y,
        CliffordGate::Z,
        CliffordGate::SqrtX,
        CliffordGate::SqrtXdg,
    ];
}
