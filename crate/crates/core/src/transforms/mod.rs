//! The order-6 group generated by reflection (RT) and the upper binomial
//! transformation (UBT), its action on parameters, rows, tableaux and
//! EGFs, the Stanton–Sprott involution, and binomial-transform pairs.

mod binomial;
mod s3;

pub use binomial::{generalized_lbt, lower_binomial_transform, upper_binomial_transform, LbtDir};
pub use s3::{
    lift_series, s3_compose, s3_inverse, s3_transform_params, s3_transform_rows, s3_transform_rows_via_lift,
    stanton_sprott, stanton_sprott_params, tableau_permute, Label, S3Elem,
};
