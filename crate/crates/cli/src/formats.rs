//! File formats and number formatting.
//!
//! Complex numbers travel as `[re, im]` pairs; serde_json emits the
//! shortest decimal that parses back to the same bits, so a write/read
//! round trip is bit-identical. Human-readable output prints every float
//! with 17 significant digits for the same reason.

use std::sync::Arc;

use ising_kitchen_core::group::FiniteGroup;
use ising_kitchen_core::matrix::Matrix;
use ising_kitchen_core::repr::{IrrepSet, MatrixRep, ReprError};
use ising_kitchen_core::{GroupFunction, SpectralElement, Tolerances, C64};
use serde::{Deserialize, Serialize};

use crate::registry;
use crate::CliError;

/// 17 significant digits: enough to round-trip any f64.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// `a + bi` with both parts at 17 significant digits.
pub fn fmt_c64(z: C64) -> String {
    if z.im < 0.0 {
        format!("{} - {}i", fmt_f64(z.re), fmt_f64(-z.im))
    } else {
        format!("{} + {}i", fmt_f64(z.re), fmt_f64(z.im))
    }
}

// ----------------------------------------------------------------------
// Groups
// ----------------------------------------------------------------------

/// On-disk group: `{ "labels": [...], "cayley": [[...]] }`.
#[derive(Debug, Serialize, Deserialize)]
pub struct GroupJson {
    pub labels: Vec<String>,
    pub cayley: Vec<Vec<usize>>,
}

impl GroupJson {
    pub fn from_group(group: &FiniteGroup) -> Self {
        GroupJson {
            labels: group.labels().to_vec(),
            cayley: group.cayley_rows().map(<[usize]>::to_vec).collect(),
        }
    }

    pub fn build(&self) -> Result<Arc<FiniteGroup>, CliError> {
        Ok(FiniteGroup::from_cayley_table(
            &self.cayley,
            Some(self.labels.clone()),
        )?)
    }
}

/// A group reference inside other files: registry name or inline table.
#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Name(String),
    Inline(GroupJson),
}

impl GroupRef {
    pub fn resolve(&self) -> Result<Arc<FiniteGroup>, CliError> {
        match self {
            GroupRef::Name(name) => Ok(registry::resolve(name)?),
            GroupRef::Inline(json) => json.build(),
        }
    }
}

// ----------------------------------------------------------------------
// Functions on a group
// ----------------------------------------------------------------------

/// On-disk group function: `{ "group": <name or inline>, "values": [[re, im], ...] }`.
#[derive(Debug, Serialize, Deserialize)]
pub struct FunctionJson {
    pub group: GroupRef,
    pub values: Vec<[f64; 2]>,
}

impl FunctionJson {
    pub fn from_function(name: &str, f: &GroupFunction) -> Self {
        FunctionJson {
            group: GroupRef::Name(name.to_string()),
            values: f.values().iter().map(|z| [z.re, z.im]).collect(),
        }
    }

    /// Build the function, with `group_override` taking precedence over the
    /// file's own group reference.
    pub fn build(
        &self,
        group_override: Option<&Arc<FiniteGroup>>,
    ) -> Result<GroupFunction, CliError> {
        let group = match group_override {
            Some(g) => Arc::clone(g),
            None => self.group.resolve()?,
        };
        let values = self
            .values
            .iter()
            .map(|&[re, im]| C64::new(re, im))
            .collect();
        Ok(GroupFunction::new(group, values)?)
    }
}

// ----------------------------------------------------------------------
// Irrep sets and spectral elements
// ----------------------------------------------------------------------

fn matrix_to_json(m: &Matrix) -> Vec<Vec<[f64; 2]>> {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| {
                    let z = m.get(i, j);
                    [z.re, z.im]
                })
                .collect()
        })
        .collect()
}

fn matrix_from_json(rows: &[Vec<[f64; 2]>]) -> Result<Matrix, CliError> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    if nrows == 0 || rows.iter().any(|r| r.len() != ncols) {
        return Err(CliError::Input(
            "matrix rows must be nonempty and rectangular".into(),
        ));
    }
    let data = rows
        .iter()
        .flatten()
        .map(|&[re, im]| C64::new(re, im))
        .collect();
    Ok(Matrix::from_data(nrows, ncols, data))
}

/// On-disk irrep set:
/// `{ "group": <id>, "dims": [...], "images": [rep][element] = matrix }`.
#[derive(Debug, Serialize, Deserialize)]
pub struct IrrepsJson {
    pub group: GroupRef,
    pub dims: Vec<usize>,
    pub images: Vec<Vec<Vec<Vec<[f64; 2]>>>>,
}

impl IrrepsJson {
    pub fn from_irreps(name: &str, set: &IrrepSet) -> Self {
        IrrepsJson {
            group: GroupRef::Name(name.to_string()),
            dims: set.dims(),
            images: set
                .irreps()
                .iter()
                .map(|rep| {
                    (0..rep.group().order())
                        .map(|g| matrix_to_json(rep.image(g)))
                        .collect()
                })
                .collect(),
        }
    }

    /// Rebuild and fully re-validate the set.
    pub fn build(&self, group_override: Option<&Arc<FiniteGroup>>) -> Result<IrrepSet, CliError> {
        let group = match group_override {
            Some(g) => Arc::clone(g),
            None => self.group.resolve()?,
        };
        if self.dims.len() != self.images.len() {
            return Err(CliError::Input("dims and images disagree in length".into()));
        }
        let mut reps = Vec::with_capacity(self.images.len());
        for (k, images) in self.images.iter().enumerate() {
            let matrices = images
                .iter()
                .map(|m| matrix_from_json(m))
                .collect::<Result<Vec<_>, _>>()?;
            let rep = MatrixRep::new(Arc::clone(&group), matrices)?;
            if rep.dim() != self.dims[k] {
                return Err(CliError::Input(format!(
                    "rep {k} declares dim {} but its matrices are {}x{}",
                    self.dims[k],
                    rep.dim(),
                    rep.dim()
                )));
            }
            reps.push(rep);
        }
        Ok(IrrepSet::from_user(reps, &Tolerances::STANDARD)?)
    }
}

/// On-disk spectral element: `{ "irreps": <id>, "blocks": [...] }`, blocks
/// in the canonical irrep order.
#[derive(Debug, Serialize, Deserialize)]
pub struct SpectralJson {
    pub irreps: String,
    pub blocks: Vec<Vec<Vec<[f64; 2]>>>,
}

impl SpectralJson {
    pub fn from_spectral(name: &str, phi: &SpectralElement) -> Self {
        SpectralJson {
            irreps: name.to_string(),
            blocks: phi.blocks().iter().map(matrix_to_json).collect(),
        }
    }

    pub fn build(&self, irreps: &Arc<IrrepSet>) -> Result<SpectralElement, CliError> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| matrix_from_json(b))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SpectralElement::new(Arc::clone(irreps), blocks)?)
    }
}

/// Catalog irreps for a named group, the common lookup path for commands.
pub fn catalog_for(name: &str) -> Result<(Arc<FiniteGroup>, Arc<IrrepSet>), CliError> {
    let group = registry::resolve(name)?;
    let irreps = IrrepSet::catalog(&group).map_err(|e| match e {
        ReprError::NoCatalog => CliError::Input(format!(
            "group '{name}' has no catalog irreps; pass --irreps with a user-supplied set"
        )),
        other => CliError::from(other),
    })?;
    Ok((group, Arc::new(irreps)))
}
