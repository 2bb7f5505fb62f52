//! NIMMO: a niching, indicator-based evolutionary algorithm for multi-modal
//! multi- and many-objective optimization.
//!
//! The crate bundles four things:
//!
//! * the steady-state NIMMO loop itself ([`algorithm`]), which degenerates to
//!   a steady-state IBEA when the neighborhood covers the whole population,
//! * the multi-modal benchmark suite ([`problems`]): Polygon/RPolygon,
//!   SYM-PART 1-3, Omni-test, Two-On-One and MMF1-8,
//! * solution- and objective-space quality indicators ([`assessment`]):
//!   IGD, IGDX, CR and PSP,
//! * an experiment harness ([`experiment`]) that runs seeded batches,
//!   aggregates means/medians and Friedman-style average ranks, and exports
//!   CSV summaries plus per-run point files.
//!
//! ```no_run
//! use nimmo::algorithm::{run, AlgorithmConfig};
//! use nimmo::problems::make_sympart;
//!
//! let problem = make_sympart(1).unwrap();
//! let cfg = AlgorithmConfig::new(200, 20, 10_000, 42);
//! let result = run(problem.as_ref(), &cfg).unwrap();
//! println!("{} nondominated solutions", result.nondominated.len());
//! ```

pub mod algorithm;
pub mod assessment;
pub mod error;
pub mod experiment;
pub mod fitness;
pub mod pop;
pub mod problems;
pub mod rng;
pub mod space;
pub mod variation;

pub use error::Error;
pub use pop::{Individual, Population};
pub use rng::RngStream;
pub use space::Bounds;
