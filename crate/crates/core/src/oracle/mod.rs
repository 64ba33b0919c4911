//! Independent numerical machinery used to re-derive every closed-form
//! result: bracketing root finders, circle extremizers, adaptive quadrature,
//! image-containment sampling and the sufficiency certifier.

mod circle;
mod containment;
mod discs;
mod growth;
mod parallel;
pub mod quadrature;
mod random;
mod roots;
mod sufficiency;

pub use circle::{circle_angles, extremize_on_circle, extremize_on_circle_with, CircleConfig, CircleExtrema, Functional};
pub use containment::{caratheodory_order_check, check_subordination_inclusion, inner_disc_radius};
pub use discs::{caratheodory_order_disc, frak_f_disc, janowski_disc_bound};
pub use growth::{covering_constant, growth_bounds, CoveringEstimate};
pub use parallel::Parallelism;
pub use random::{class_member_series, random_polynomial, random_schwarz, seeded_rng, SchwarzFunction, MAX_ZERO_MODULUS};
pub use roots::{bracket_root, illinois_root, scan_sign_change, smallest_root, BracketSolverConfig};
pub use sufficiency::{certify_sufficient_condition, certify_sufficient_condition_with, AnalyticSample, Certificate, CERTIFY_RADII, DEFAULT_CERTIFY_SAMPLES};
