//! Certifiers: evaluate both sides of each inequality on concrete inputs and
//! report per-entry margins, after re-checking the hypotheses.

mod campaign;
mod compare;
mod convergence;
mod fm;
mod forms;
mod forward;
mod kantorovich;
mod report;
mod specht;

pub use campaign::{run_campaign, run_instance, CampaignConfig, CampaignResult, InstanceOutcome, Overrides};
pub use compare::{
    compare_constants_remark, compare_seo_constants, compare_specht_vs_fm, default_scan_grid, specht_fm_scan,
    FactorComparison, ScanPoint, SeoComparison, SignScan,
};
pub use convergence::{convergence_study, max_relative_gaps, ConvergenceFactor, ConvergenceRow, DEFAULT_P_SEQUENCE};
pub use fm::{certify_fm_eigen, certify_fm_gt, certify_fm_low, FmExponents};
pub use forward::{certify_ando_hiai, certify_golden_thompson, certify_gt_forward_norm};
pub use kantorovich::{
    certify_gt_kantorovich_bounded, certify_gt_kantorovich_squared, certify_gt_reverse_kantorovich,
    certify_kantorovich_matrix, squared_kantorovich_factor,
};
pub use report::{Comparison, InequalityId, InequalityReport, NormId, DEFAULT_TOLERANCE};
pub use specht::{
    certify_bounded_corollary, certify_eigen_power_high, certify_gt_bounded_specht, certify_gt_reverse_norm,
    certify_gt_reverse_specht, certify_gt_specht_squared, certify_pq_reverse, certify_specht_power_low, BoundedForm,
};
