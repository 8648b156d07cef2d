//! Exact walk counting: the step multigraph, walks in `N^r`, and walks in
//! the quarter plane.

mod lattice;
mod multigraph;
mod quarter;

pub use lattice::{colored_nc_sequence, count_colored_nc, orthant_walk_mass};
pub use multigraph::{
    build_multigraph, closed_walk_sequence, count_closed_walks, ncn_via_graph, StepMultigraph, VertexMatrix,
};
pub use quarter::{quarter_plane_tables, reflection_check, reflection_holds, QuarterPlaneTables, WalkTable};
