//! Generators: the quadratic grating, the nonagon piercing family, the
//! 3SUM to stabbing reduction chain, and random instances.

mod geombase;
mod grating;
mod nonagon;
mod random;

pub use geombase::{
    brute_3sum, geombase_from_3sum, reduction_epsilon, reduction_map, sas_from_geombase,
    snap_to_points, unmap_transversal, GeomBaseInstance,
};
pub use grating::{make_grating, translate, GratingSpec};
pub use nonagon::{make_nonagon_family, nonagon_points, NonagonFamily};
pub use random::{random_wedges, RandomSpec};
