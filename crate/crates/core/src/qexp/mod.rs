//! Exact q-expansions of level-1 modular forms and the genus of `X_0(N)`.

mod dimension;
mod forms;
mod hecke;
mod series;

pub use crate::exactnum::sigma_k;
pub use dimension::{dim_s2_gamma0, DimFormulaParts};
pub use forms::{delta_series, eisenstein_series, j_series, ramanujan_691_holds, tau};
pub use hecke::{hecke_tn, hecke_tn_to};
pub use series::QSeries;
