//! Degree-depth partitions: layers `V_1..V_t` where each `V_i` is an
//! independent set of low residual degree once earlier layers are removed.

mod partition;
mod peeling;

pub use partition::{
    embedded_ordering, later_layer_degree, parse_partition, validate_partition, BoundaryError,
    DegreePartition, EmbeddedOrdering, LayeredSubgraphRef, ParsePartitionError, PartitionViolation,
};
pub use peeling::{
    build_degree_partition, degree_partition_from_degeneracy, special_independent_set,
    LayeringError, SpecialISParams,
};
