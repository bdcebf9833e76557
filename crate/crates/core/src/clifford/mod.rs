//! The real Clifford algebra `Cl_n` with `e_i^2 = -1`, its paravectors and
//! the products of paravectors used for spin elements and Vahlen matrices.

mod multivector;
mod paravector;
mod spin;
mod versor;

pub use multivector::{
    blade_label, blade_sign, conjugation_sign, grade_of, reversion_sign, Multivector, MAX_GENERATORS,
};
pub use paravector::{product as paravector_product, Paravector};
pub use spin::{verify_spin_structure, SpinVerdict};
pub use versor::{factor_paravector_product, rotation_matrix, squared_norm_scalar, versor_inverse};
