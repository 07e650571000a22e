//! Classical parametrized varieties, their secant and tangential varieties,
//! and membership and dimension checks.

mod catalog;
pub mod g36;
mod grass;
pub mod matrix;
mod param;
mod secant;

pub use catalog::{
    catalecticant, catalog_entry, g36, grass2, plucker_relations, rnc, rnc_literal_map, segre, segre_multi, tp_matrix, tpn, veronese2,
    CatalogEntry, Family, MAX_GRASS, MAX_RNC, MAX_SEGRE, MAX_TP, MAX_VERONESE,
};
pub use g36::{g36_maps, g36_quartic, g36_quartic_signed, g36_tangential_images, SexticImage};
pub use grass::{ghprs_map, ghprs_relations, grass_pfaffian};
pub use param::Parametrization;
pub use secant::{
    cone_structure_check, cone_structure_check_with, image_dimension, membership_check, secant_defect,
    secant_parametrization, tangential_parametrization, SecantDefect,
};

use thiserror::Error;

use crate::cumulants::CumulantError;
use crate::maps::MapError;
use crate::polycore::PolyError;

#[derive(Debug, Error)]
pub enum VarietyError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Cumulant(#[from] CumulantError),
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("unknown example `{name}`; known examples: {known}")]
    UnknownExample { name: String, known: String },
    #[error("{0}")]
    OutOfRange(String),
    #[error("parametrization is not in normal form")]
    NotNormalForm,
}
