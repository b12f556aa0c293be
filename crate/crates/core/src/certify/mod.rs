//! Homomorphism search, spectral obstruction certificates and randomized
//! checks of the underlying matrix lemmas.

mod homomorphism;
mod lemmas;
mod obstruction;

pub use homomorphism::{find_homomorphism, find_homomorphism_with_budget, DEFAULT_HOMOMORPHISM_BUDGET, MAX_HOMOMORPHISM_ORDER};
pub use lemmas::{
    general_z_instance, lemma_conformal_instance, lemma_main_instance, random_psd, scheme_span_instance, verify_all_lemmas,
    verify_general_z_inequality, verify_general_z_inequality_with, verify_lemma_conformal, verify_lemma_conformal_with,
    verify_lemma_main, verify_lemma_main_with, verify_scheme_span_inequality, verify_scheme_span_inequality_with, ConformalCheck,
    GeneralZCheck, LemmaCheck, LemmaId, LemmaTrialReport, SeedRecord, CLAIM_TOLERANCE, REJECTION_BUDGET, VIOLATION_TOLERANCE,
};
pub use obstruction::{certify_specs, obstruction_certificate, verify_certificate, ObstructionCertificate, CERTIFIED_TOLERANCE};
