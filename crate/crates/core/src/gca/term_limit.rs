use std::sync::atomic::{AtomicUsize, Ordering};

/// Default bound on the number of terms in any intermediate polynomial.
pub const DEFAULT_TERM_LIMIT: usize = 1_000_000;

static LIMIT: AtomicUsize = AtomicUsize::new(DEFAULT_TERM_LIMIT);

/// Panic payload raised when an intermediate polynomial exceeds the limit.
///
/// Callers that need to recover catch it with `std::panic::catch_unwind` and
/// downcast the payload.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TermLimitExceeded {
    pub limit: usize,
    pub reached: usize,
}

pub fn set_term_limit(n: usize) {
    LIMIT.store(n.max(1), Ordering::Relaxed);
}

pub fn term_limit() -> usize {
    LIMIT.load(Ordering::Relaxed)
}

pub(crate) fn check_terms(n: usize) {
    let limit = term_limit();
    if n > limit {
        std::panic::panic_any(TermLimitExceeded { limit, reached: n });
    }
}
