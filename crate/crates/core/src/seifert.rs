//! Seifert invariants of closed 3-manifolds: validation, Euler number,
//! normal form, orientation reversal and fiber-preserving equivalence.
//!
//! A fibration is presented as `(g; (a_1,b_1), ..., (a_n,b_n))`. The genus
//! field is signed: `g >= 0` means an orientable base of genus `g`, while
//! `g < 0` means a nonorientable base with `|g|` crosscaps. Pairs with
//! `a = 1` are legal and carry integer framing data; pairs with `a >= 2`
//! describe exceptional fibers and must have `gcd(a, b) = 1`.
//!
//! Two presentations describe the same fibration exactly when they are
//! connected by [elementary moves](ElementaryMove); [`SeifertInvariants::normalize`]
//! picks a canonical representative of each move class, so equivalence
//! reduces to equality of normal forms.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// One `(a, b)` entry of a Seifert presentation: fiber multiplicity `a >= 1`
/// and its coprime framing coefficient `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SeifertPair {
    pub a: i64,
    pub b: i64,
}

impl SeifertPair {
    pub fn new(a: i64, b: i64) -> Self {
        SeifertPair { a, b }
    }

    /// Exceptional fibers are the ones with nontrivial isotropy.
    pub fn is_exceptional(&self) -> bool {
        self.a >= 2
    }
}

impl fmt::Display for SeifertPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Seifert invariants `(g; (a_1,b_1), ..., (a_n,b_n))` of a closed
/// orientable 3-manifold, validated on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SeifertInvariants {
    genus: i64,
    pairs: Vec<SeifertPair>,
}

impl SeifertInvariants {
    /// Validates raw data: every `a >= 1`, and `gcd(a, b) = 1` whenever
    /// `a >= 2`. The pair list may be empty.
    pub fn new(genus: i64, pairs: impl IntoIterator<Item = (i64, i64)>) -> Result<Self> {
        let pairs: Vec<SeifertPair> = pairs
            .into_iter()
            .map(|(a, b)| SeifertPair::new(a, b))
            .collect();
        for (index, p) in pairs.iter().enumerate() {
            if p.a < 1 {
                return Err(Error::NonPositiveMultiplicity { a: p.a, index });
            }
            if p.a >= 2 && p.a.gcd(&p.b) != 1 {
                return Err(Error::NotCoprime { a: p.a, b: p.b });
            }
        }
        Ok(SeifertInvariants { genus, pairs })
    }

    /// Signed base genus: nonnegative = orientable genus, negative =
    /// crosscap count of a nonorientable base.
    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn pairs(&self) -> &[SeifertPair] {
        &self.pairs
    }

    /// The Euler number `-sum(b_i / a_i)` of the fibration, exactly.
    ///
    /// Its vanishing characterizes fibrations finitely covered by trivial
    /// ones. For nonorientable bases no sign convention is fixed by the
    /// usual sources; only whether this value is zero is
    /// convention-independent there.
    pub fn euler_number(&self) -> Rational {
        -self
            .pairs
            .iter()
            .map(|p| Rational::new(p.b, p.a))
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    /// Canonical representative of the move class of `self`.
    ///
    /// The normal form has exactly one distinguished pair `(1, b0)` carrying
    /// the integer part, followed by the exceptional pairs with `0 < b < a`,
    /// sorted lexicographically by `(a, b)`. Idempotent, and preserves the
    /// Euler number.
    pub fn normalize(&self) -> SeifertInvariants {
        let mut b0 = 0i64;
        let mut exceptional = Vec::with_capacity(self.pairs.len());
        for p in &self.pairs {
            if p.a == 1 {
                b0 += p.b;
            } else {
                let r = p.b.rem_euclid(p.a);
                debug_assert!(r != 0, "coprimality rules out b = 0 mod a");
                b0 += (p.b - r) / p.a;
                exceptional.push(SeifertPair::new(p.a, r));
            }
        }
        exceptional.sort();
        let mut pairs = Vec::with_capacity(exceptional.len() + 1);
        pairs.push(SeifertPair::new(1, b0));
        pairs.extend(exceptional);
        SeifertInvariants {
            genus: self.genus,
            pairs,
        }
    }

    /// Whether `self` already is a normal form.
    pub fn is_normalized(&self) -> bool {
        *self == self.normalize()
    }

    /// The same fibration with reversed total-space orientation: every
    /// `b_i` is negated, so the Euler number flips sign.
    pub fn reverse_orientation(&self) -> SeifertInvariants {
        SeifertInvariants {
            genus: self.genus,
            pairs: self
                .pairs
                .iter()
                .map(|p| SeifertPair::new(p.a, -p.b))
                .collect(),
        }
    }

    /// Fiber-preserving equivalence: equal normal forms, optionally up to
    /// orientation reversal.
    pub fn equivalent(&self, other: &SeifertInvariants, allow_reversal: bool) -> bool {
        let lhs = self.normalize();
        if lhs == other.normalize() {
            return true;
        }
        allow_reversal && lhs == other.reverse_orientation().normalize()
    }

    /// Applies one elementary move, or reports why it does not apply.
    pub fn apply_move(&self, mv: &ElementaryMove) -> Result<SeifertInvariants> {
        let mut pairs = self.pairs.clone();
        let check_index = |i: usize| -> Result<()> {
            if i < pairs.len() {
                Ok(())
            } else {
                Err(Error::InvalidMove(format!(
                    "pair index {i} out of range (have {})",
                    pairs.len()
                )))
            }
        };
        match *mv {
            ElementaryMove::Swap { i, j } => {
                check_index(i)?;
                check_index(j)?;
                pairs.swap(i, j);
            }
            ElementaryMove::InsertTrivial => pairs.push(SeifertPair::new(1, 0)),
            ElementaryMove::DeleteTrivial { index } => {
                check_index(index)?;
                if pairs[index] != SeifertPair::new(1, 0) {
                    return Err(Error::InvalidMove(format!(
                        "pair #{index} is {}, only (1,0) pairs can be deleted",
                        pairs[index]
                    )));
                }
                pairs.remove(index);
            }
            ElementaryMove::Transfer { to, from } => {
                check_index(to)?;
                check_index(from)?;
                if to == from {
                    return Err(Error::InvalidMove(
                        "transfer needs two distinct pairs".to_owned(),
                    ));
                }
                pairs[to].b += pairs[to].a;
                pairs[from].b -= pairs[from].a;
            }
        }
        Ok(SeifertInvariants {
            genus: self.genus,
            pairs,
        })
    }
}

/// The elementary moves connecting presentations of one fibration.
///
/// `Transfer` replaces `(a_i, b_i), (a_j, b_j)` with
/// `(a_i, b_i + a_i), (a_j, b_j - a_j)`; since `b` changes by a multiple
/// of `a`, coprimality and the Euler number are untouched.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementaryMove {
    Swap { i: usize, j: usize },
    InsertTrivial,
    DeleteTrivial { index: usize },
    Transfer { to: usize, from: usize },
}

impl fmt::Display for SeifertInvariants {
    /// Prints the CLI grammar form `g;(a1,b1),(a2,b2),...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.genus)?;
        for (i, p) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for SeifertInvariants {
    type Err = Error;

    /// Parses `g;(a1,b1),(a2,b2),...`. The pair list may be empty
    /// (`"0"` and `"0;"` both denote the no-pair presentation).
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: String| Error::Parse {
            input: s.to_owned(),
            reason,
        };
        let trimmed = s.trim();
        let (genus_str, rest) = match trimmed.split_once(';') {
            Some((g, rest)) => (g.trim(), rest.trim()),
            None => (trimmed, ""),
        };
        let genus: i64 = genus_str
            .parse()
            .map_err(|_| err(format!("`{genus_str}` is not an integer genus")))?;

        let mut pairs = Vec::new();
        let mut cursor = rest;
        while !cursor.is_empty() {
            let open = cursor
                .strip_prefix('(')
                .ok_or_else(|| err(format!("expected `(` at `{cursor}`")))?;
            let (body, tail) = open
                .split_once(')')
                .ok_or_else(|| err("unbalanced parenthesis".to_owned()))?;
            let (a_str, b_str) = body
                .split_once(',')
                .ok_or_else(|| err(format!("pair `({body})` needs two components")))?;
            let a: i64 = a_str
                .trim()
                .parse()
                .map_err(|_| err(format!("`{}` is not an integer", a_str.trim())))?;
            let b: i64 = b_str
                .trim()
                .parse()
                .map_err(|_| err(format!("`{}` is not an integer", b_str.trim())))?;
            pairs.push((a, b));
            cursor = tail.trim_start();
            if let Some(next) = cursor.strip_prefix(',') {
                cursor = next.trim_start();
                if cursor.is_empty() {
                    return Err(err("trailing comma".to_owned()));
                }
            } else if !cursor.is_empty() {
                return Err(err(format!("expected `,` between pairs at `{cursor}`")));
            }
        }
        SeifertInvariants::new(genus, pairs)
    }
}
