//! The base 2-orbifold of a Seifert fibration: orbifold Euler
//! characteristic, developability and geometry type.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::seifert::SeifertInvariants;

/// A closed 2-orbifold with cone points only, described by the topology of
/// its underlying surface and the multiset of cone orders.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TwoOrbifold {
    orientable: bool,
    /// Orientable genus, or crosscap count when nonorientable.
    genus: u32,
    /// Sorted, each >= 2.
    cone_orders: Vec<i64>,
}

/// Geometry carried by a closed 2-orbifold, decided by developability and
/// the sign of the orbifold Euler characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GeometryType {
    Spherical,
    Euclidean,
    Hyperbolic,
    Bad,
}

impl fmt::Display for GeometryType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            GeometryType::Spherical => "spherical",
            GeometryType::Euclidean => "euclidean",
            GeometryType::Hyperbolic => "hyperbolic",
            GeometryType::Bad => "bad",
        };
        f.write_str(name)
    }
}

impl TwoOrbifold {
    pub fn new(orientable: bool, genus: u32, cone_orders: impl IntoIterator<Item = i64>) -> Result<Self> {
        let mut cone_orders: Vec<i64> = cone_orders.into_iter().collect();
        if let Some(&order) = cone_orders.iter().find(|&&c| c < 2) {
            return Err(Error::InvalidConeOrder { order });
        }
        if !orientable && genus == 0 {
            return Err(Error::InvalidCrosscapCount);
        }
        cone_orders.sort_unstable();
        Ok(TwoOrbifold {
            orientable,
            genus,
            cone_orders,
        })
    }

    /// The quotient orbifold of a fibration: genus and orientability come
    /// from the sign convention of the genus field, the cone orders are the
    /// multiplicities `a_i >= 2`.
    pub fn base_of(s: &SeifertInvariants) -> TwoOrbifold {
        let cones = s
            .pairs()
            .iter()
            .filter(|p| p.is_exceptional())
            .map(|p| p.a);
        let g = s.genus();
        if g >= 0 {
            TwoOrbifold::new(true, g as u32, cones)
        } else {
            TwoOrbifold::new(false, g.unsigned_abs() as u32, cones)
        }
        .expect("valid invariants have a valid base")
    }

    pub fn orientable(&self) -> bool {
        self.orientable
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn cone_orders(&self) -> &[i64] {
        &self.cone_orders
    }

    /// Euler characteristic of the underlying surface.
    pub fn surface_euler_characteristic(&self) -> i64 {
        if self.orientable {
            2 - 2 * i64::from(self.genus)
        } else {
            2 - i64::from(self.genus)
        }
    }

    /// `chi_orb = chi(|O|) - sum(1 - 1/a_i)`, exactly.
    pub fn euler_characteristic(&self) -> Rational {
        self.cone_orders
            .iter()
            .fold(Rational::from_integer(self.surface_euler_characteristic()), |acc, &a| {
                acc - (Rational::one() - Rational::new(1, a))
            })
    }

    /// A closed 2-orbifold is developable (covered by a surface) unless it
    /// is a teardrop or a spindle with cone points of distinct orders.
    pub fn is_developable(&self) -> bool {
        if !self.orientable || self.genus > 0 {
            return true;
        }
        match self.cone_orders.as_slice() {
            [_] => false,
            [p, q] => p == q,
            _ => true,
        }
    }

    pub fn geometry_type(&self) -> GeometryType {
        if !self.is_developable() {
            return GeometryType::Bad;
        }
        let chi = self.euler_characteristic();
        if chi.is_positive() {
            GeometryType::Spherical
        } else if chi.is_zero() {
            GeometryType::Euclidean
        } else {
            GeometryType::Hyperbolic
        }
    }
}

impl fmt::Display for TwoOrbifold {
    /// Conway-style summary, e.g. `S2(2,3,5)`, `T2`, `RP2(2)`, `N3(2,2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.orientable, self.genus) {
            (true, 0) => write!(f, "S2")?,
            (true, 1) => write!(f, "T2")?,
            (true, g) => write!(f, "Sigma{g}")?,
            (false, 1) => write!(f, "RP2")?,
            (false, 2) => write!(f, "K2")?,
            (false, g) => write!(f, "N{g}")?,
        }
        if !self.cone_orders.is_empty() {
            write!(f, "(")?;
            for (i, a) in self.cone_orders.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{a}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}
