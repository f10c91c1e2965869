//! The Yangian `Y(sl_N)` acting on `W = V(λ₁, a) ⊗ V(λ_{N-1}, b)`.

pub mod casimir;
pub mod coproduct;
pub mod drinfeld;
pub mod operator;
pub mod subrep;
pub mod theorem;

pub use casimir::{casimir_i2_tensor, casimir_j2, verify_commutation_lemma, verify_spectrum};
pub use coproduct::{
    delta_jx_casimir, delta_jx_explicit, delta_x, EvalModule, Parameter, YangianRep,
};
pub use operator::TensorOperator;
pub use theorem::{theorem_action, verify_main_theorem};
