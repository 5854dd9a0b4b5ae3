//! Random models: the configuration model for uniform regular
//! multihypergraphs and Cayley hypergraphs on the symmetric group.

mod cayley;
mod config;
mod experiment;
mod symmetric;

pub use cayley::{cayley_girth, cayley_hypergraph, CayleyGirth, CayleyWitness, DEFAULT_CAYLEY_MAX_VERTICES};
pub use config::{girth_prob_paper, girth_prob_poisson, lambda, sample_config_model, GirthDistribution};
pub use experiment::{cayley_girth_experiment, girth_distribution_experiment, ExperimentRow, ExperimentTable};
pub use symmetric::{check_condition6, condition6_violation, sample_x, x_size, CayleySpec};
