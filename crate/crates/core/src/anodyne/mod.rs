//! Certificates that the comparison maps for suspension and wedge are complicial anodyne:
//! suspect-simplex classification, face tables, certificate construction and replay.

mod build;
mod certificate;
mod classify;
mod tables;

pub use build::{
    build_cert_suspension, build_cert_wedge, chain_wedge_certificates, decompose_lambda_prime, insert_constant_row,
    wedge_census, wedge_context, ChainedWedge, SuspensionContext,
};
pub use certificate::{
    horn_masks, model_marked, replay, replay_from, replay_with_thinness, AnodyneCertificate, CertificateStep, Mode,
    ReplayFailure, ReplaySummary, Stage, Variant,
};
pub use classify::{
    classify_susp, classify_wedge, suspect_index_susp, suspect_index_wedge, SuspClassification, WedgeClassification,
};
pub use tables::{check_face_tables_susp, check_face_tables_wedge, FaceTableReport};
