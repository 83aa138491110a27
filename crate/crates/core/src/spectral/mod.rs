//! Perron vectors, closed-form radii, exact comparisons and surgeries.

pub mod algebra;
pub mod closed_form;
pub mod exact;
pub mod perron;
pub mod surgery;

pub use closed_form::{closed_form, compare_families, compare_radii, ClosedFormRadius, RadiusForm};
pub use exact::{characteristic_polynomial, compare_graph_radii, RadiusEnclosure};
pub use perron::{perron, rayleigh, PerronConfig, PerronResult};
pub use surgery::{quadratic_form, quadratic_form_delta, transform};
