//! Edge-addition experiments, joined-star closed forms, axiom checks and graph sweeps.

pub mod axioms;
pub mod delta;
pub mod sweep;
pub mod two_stars;

pub use axioms::{
    characterisation_probe, check_axiom, myerson_measure, pa_measure, perturbed_pa_measure,
    position_measure, Axiom, AxiomReport, MeasureFn, ProbeReport, Witness,
};
pub use delta::{
    edge_addition_delta, end_node_losses, DeltaReport, Engine, Measure, MeasureDelta, NodeClass,
};
pub use sweep::{connected_graphs, random_connected_graph, trees, two_component_graphs};
pub use two_stars::{
    bridge_ratio_limits, bridge_ratios, two_star_closed_forms, two_star_increments, TwoStarRow,
};
