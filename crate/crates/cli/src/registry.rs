//! Group names for the command line.
//!
//! Accepted identifiers: `z<n>` (cyclic), `mu2`, `d<n>` (dihedral, n ≥ 3),
//! `s<n>` (symmetric, n ≤ 6), and direct products spelled with `x`, e.g.
//! `z2xz4` or `s3xz2`. Matching is case-insensitive.

use std::sync::Arc;

use ising_kitchen_core::group::{FiniteGroup, GroupError};

/// Registry-built groups are capped so the dense Cayley table stays small.
const MAX_ORDER: usize = 2048;

#[derive(Debug, thiserror::Error)]
pub enum RegistryError {
    #[error("unknown group name '{0}' (expected z<n>, mu2, d<n>, s<n>, or products via 'x')")]
    UnknownName(String),
    #[error("group '{name}' has order {order}, above the CLI cap of {max}")]
    TooLarge {
        name: String,
        order: usize,
        max: usize,
    },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Resolve a registry name like `z6`, `mu2`, `d4`, `s3`, or `z2xz4`.
pub fn resolve(name: &str) -> Result<Arc<FiniteGroup>, RegistryError> {
    let lowered = name.trim().to_ascii_lowercase();
    let mut factors = lowered.split('x');
    let mut group = resolve_atom(&lowered, factors.next().unwrap_or_default())?;
    for token in factors {
        let factor = resolve_atom(&lowered, token)?;
        if group.order().saturating_mul(factor.order()) > MAX_ORDER {
            return Err(RegistryError::TooLarge {
                name: lowered.clone(),
                order: group.order() * factor.order(),
                max: MAX_ORDER,
            });
        }
        group = FiniteGroup::product(&group, &factor);
    }
    Ok(group)
}

fn resolve_atom(full: &str, token: &str) -> Result<Arc<FiniteGroup>, RegistryError> {
    let unknown = || RegistryError::UnknownName(full.to_string());
    if token == "mu2" {
        return Ok(FiniteGroup::mu2());
    }
    let (head, digits) = token.split_at(1.min(token.len()));
    let n: usize = digits.parse().map_err(|_| unknown())?;
    // Size-check from the name alone, before building any table.
    let order = match head {
        "z" => n,
        "d" => 2 * n,
        "s" => (1..=n.min(7)).product(),
        _ => return Err(unknown()),
    };
    if order > MAX_ORDER {
        return Err(RegistryError::TooLarge {
            name: full.to_string(),
            order,
            max: MAX_ORDER,
        });
    }
    Ok(match head {
        "z" => FiniteGroup::cyclic(n)?,
        "d" => FiniteGroup::dihedral(n)?,
        _ => FiniteGroup::symmetric(n)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolves_basic_names() {
        assert_eq!(resolve("z6").unwrap().order(), 6);
        assert_eq!(resolve("mu2").unwrap().order(), 2);
        assert_eq!(resolve("d4").unwrap().order(), 8);
        assert_eq!(resolve("s3").unwrap().order(), 6);
        assert_eq!(resolve("Z2xZ4").unwrap().order(), 8);
        assert_eq!(resolve("s3xz2").unwrap().order(), 12);
        assert_eq!(resolve("z2xz2xz2").unwrap().order(), 8);
    }

    #[test]
    fn rejects_junk_and_oversize() {
        assert!(matches!(resolve("q8"), Err(RegistryError::UnknownName(_))));
        assert!(matches!(resolve("z"), Err(RegistryError::UnknownName(_))));
        assert!(matches!(resolve(""), Err(RegistryError::UnknownName(_))));
        assert!(matches!(
            resolve("z9999"),
            Err(RegistryError::TooLarge { .. })
        ));
        assert!(matches!(resolve("d2"), Err(RegistryError::Group(_))));
    }
}
