//! Deterministic per-task seeds.
//!
//! A task seed is a chain of SplitMix64 finalizers over
//! `(master, trial, point, purpose)`:
//!
//! ```text
//! mix(z):  z += 0x9E3779B97F4A7C15
//!          z  = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//!          z  = (z ^ (z >> 27)) * 0x94D049BB133111EB
//!          z ^ (z >> 31)
//! task_seed = mix(mix(mix(mix(master) ^ trial) ^ point) ^ purpose)
//! ```
//!
//! All arithmetic wraps modulo 2^64.

pub fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn task_seed(master: u64, trial: u64, point: u64, purpose: u64) -> u64 {
    mix64(mix64(mix64(mix64(master) ^ trial) ^ point) ^ purpose)
}

/// Purpose tags; distinct values keep the derived streams independent.
pub mod purpose {
    pub const INSTANCE_F: u64 = 1;
    pub const INSTANCE_G: u64 = 2;
    pub const POINT_OFF_BRANCH: u64 = 3;
    pub const POINT_ON_BRANCH: u64 = 4;
    pub const REGULARITY: u64 = 5;
    pub const HYPERTANGENT: u64 = 6;
    pub const ARCS: u64 = 7;
    pub const LINEAR_CUT: u64 = 8;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        // SplitMix64 applied to state 0 yields this first output
        assert_eq!(mix64(0), 0xE220_A839_7B1D_CDAF);
        assert_ne!(task_seed(1, 0, 0, 0), task_seed(1, 0, 0, 1));
        assert_eq!(task_seed(42, 3, 4, 5), task_seed(42, 3, 4, 5));
    }
}
