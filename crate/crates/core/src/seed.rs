//! Deterministic stream derivation.
//!
//! Every random draw in the pipeline comes from a ChaCha8 stream whose 256-bit
//! key is a SHA-256 digest of (seed, label). Draws therefore depend only on
//! the seed and the label being asked for, never on worker count or the order
//! in which samples happen to be processed.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

/// Derive a child u64 seed from a parent seed and a label. Used to give every
/// generated sample its own recorded seed.
pub fn derive_seed(parent: u64, label: &str) -> u64 {
    let digest = digest_of(parent, label);
    u64::from_le_bytes(digest[..8].try_into().unwrap())
}

/// Build the RNG for one named stream under a seed. Distinct labels yield
/// statistically independent streams; the same (seed, label) always yields
/// the same stream.
pub fn stream_rng(seed: u64, label: &str) -> ChaCha8Rng {
    ChaCha8Rng::from_seed(digest_of(seed, label))
}

fn digest_of(seed: u64, label: &str) -> [u8; 32] {
    let mut hasher = Sha256::new();
    hasher.update(seed.to_le_bytes());
    hasher.update([0x1f]); // separator so (1, "ab") and (1, "a") || "b" cannot collide
    hasher.update(label.as_bytes());
    hasher.finalize().into()
}
