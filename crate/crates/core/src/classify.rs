//! Which algebraic groups admit mock injective modules that are not
//! injective.
//!
//! A group `G`, defined and split over a finite field, has such modules
//! exactly when it is not linearly reductive: when the identity component
//! is not a torus, or when `p` divides the order of the component group
//! `G/G^0`. The split-over-`F_q` hypothesis is assumed, not checked.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::parse_cartan_type;
use crate::sl2::require_prime;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IdentityComponent {
    /// A split torus of the given rank; rank 0 means `G` is finite.
    Torus { rank: usize },
    /// A connected reductive group of the given Cartan type, e.g. `"A1"`.
    Reductive { cartan_type: String },
}

impl IdentityComponent {
    pub fn is_torus(&self) -> bool {
        matches!(self, IdentityComponent::Torus { .. })
    }
}

impl FromStr for IdentityComponent {
    type Err = Error;

    /// `torus:<rank>` or a Cartan type string.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rank) = s.strip_prefix("torus:") {
            let rank = rank
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad torus rank in `{s}`")))?;
            return Ok(IdentityComponent::Torus { rank });
        }
        let rs = parse_cartan_type(s)?;
        Ok(IdentityComponent::Reductive {
            cartan_type: rs.label(),
        })
    }
}

impl fmt::Display for IdentityComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityComponent::Torus { rank } => write!(f, "torus:{rank}"),
            IdentityComponent::Reductive { cartan_type } => f.write_str(cartan_type),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupDatum {
    pub identity_component: IdentityComponent,
    pub component_group_order: u64,
    /// Whether `G/G^0` is known to be cyclic. Always true for orders that
    /// are 1 or prime.
    pub component_group_cyclic: bool,
}

impl GroupDatum {
    pub fn new(identity_component: IdentityComponent, component_group_order: u64) -> Result<Self> {
        if component_group_order == 0 {
            return Err(Error::InvalidArgument(
                "component group order must be at least 1".into(),
            ));
        }
        let cyclic = component_group_order == 1 || crate::sl2::is_prime(component_group_order);
        Ok(GroupDatum {
            identity_component,
            component_group_order,
            component_group_cyclic: cyclic,
        })
    }

    pub fn torus(rank: usize, order: u64) -> Result<Self> {
        Self::new(IdentityComponent::Torus { rank }, order)
    }

    pub fn reductive(cartan_type: &str, order: u64) -> Result<Self> {
        Self::new(cartan_type.parse()?, order)
    }

    /// Declare `G/G^0` cyclic.
    pub fn with_cyclic_components(mut self) -> Self {
        self.component_group_cyclic = true;
        self
    }
}

pub fn is_linearly_reductive(g: &GroupDatum, p: u64) -> Result<bool> {
    require_prime(p)?;
    Ok(g.identity_component.is_torus() && !g.component_group_order.is_multiple_of(p))
}

pub fn has_proper_mock_injectives(g: &GroupDatum, p: u64) -> Result<bool> {
    Ok(!is_linearly_reductive(g, p)?)
}

/// `dim H^i(Z/order, k)` for a field `k` of characteristic `p`.
pub fn cyclic_ext_dim(order: u64, p: u64, i: u32) -> Result<u64> {
    require_prime(p)?;
    if order == 0 {
        return Err(Error::InvalidArgument("group order must be at least 1".into()));
    }
    Ok(match i {
        0 => 1,
        _ => u64::from(order.is_multiple_of(p)),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `G^0` is not a torus, so `G(F_q)` contains nontrivial unipotent
    /// elements and its order is divisible by `p`.
    NonTorusIdentityComponent { cartan_type: String },
    /// Cohomology of the cyclic component group in degree `degree`; nonzero
    /// exactly when the trivial module is not injective for it.
    CyclicComponentCohomology { order: u64, degree: u32, dim: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub group: GroupDatum,
    pub p: u64,
    pub linearly_reductive: bool,
    pub has_proper_mock_injectives: bool,
    pub witness: Option<Witness>,
}

pub fn classify(g: &GroupDatum, p: u64) -> Result<Classification> {
    let linearly_reductive = is_linearly_reductive(g, p)?;
    let witness = match &g.identity_component {
        IdentityComponent::Reductive { cartan_type } => Some(Witness::NonTorusIdentityComponent {
            cartan_type: cartan_type.clone(),
        }),
        IdentityComponent::Torus { .. } if g.component_group_cyclic => {
            Some(Witness::CyclicComponentCohomology {
                order: g.component_group_order,
                degree: 1,
                dim: cyclic_ext_dim(g.component_group_order, p, 1)?,
            })
        }
        IdentityComponent::Torus { .. } => None,
    };
    Ok(Classification {
        group: g.clone(),
        p,
        linearly_reductive,
        has_proper_mock_injectives: !linearly_reductive,
        witness,
    })
}
