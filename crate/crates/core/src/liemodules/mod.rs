//! Induced characters of cyclic and wreath subgroups, higher Lie modules and
//! the identities relating them.

mod checks;
mod kw;
mod lie;
mod necklaces;
mod schocker;
mod stembridge;
mod wreath;

pub use checks::{
    check_mash_candidate, omega_kw, omega_schocker, symmetry_bold_a, symmetry_gcd_kw, symmetry_gcd_stembridge,
    CheckReport, FiberWitness, MashReport,
};
pub use kw::{cyclic_exponents, cyclic_exponents_mod, kw_routes, kw_series, KwRoutes};
pub use lie::{cycle_type, descent_classes, gessel_reutenauer, higher_lie};
pub use necklaces::{necklace_counts, nf_gf, nfd_gf};
pub use schocker::{
    mobius_f, mobius_f_closed, mobius_f_divisor_sum, schocker, schocker_by_necklace_multisets, schocker_by_plethysm,
    Kind,
};
pub use stembridge::{
    bold_a, bold_a_table, ofd_content_gf, ofd_series_by_frequencies, ofd_series_by_maj_tuples, ofd_series_by_orbits,
    orbit_counts_by_frequency, stembridge_coefficients, stembridge_series,
};
pub use wreath::{graded_frobenius, regular_character, wreath_char, wreath_dim, GradedFrobenius};
