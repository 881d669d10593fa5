//! Placeholder library target; the real content is the criterion benches.
