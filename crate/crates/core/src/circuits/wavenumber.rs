/// Maps an `n`-bit register index `m` to a signed wavenumber
/// `k ∈ {−N/2, …, N/2 − 1}`: `k = m` for `m < N/2`, else `k = m − N`.
///
/// The most significant bit of `m` is the sign bit and the remaining
/// `n − 1` bits are the magnitude index `l = Σ_q b_q 2^{n−q}`, so that
/// `k = l − N/2` when the sign bit is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedWavenumberMap {
    n: usize,
}

impl SignedWavenumberMap {
    pub fn new(n: usize) -> Self {
        assert!((1..63).contains(&n), "register size {n} out of range");
        SignedWavenumberMap { n }
    }

    pub fn n_points(&self) -> usize {
        1 << self.n
    }

    pub fn wavenumber(&self, m: usize) -> i64 {
        let n_points = self.n_points();
        debug_assert!(m < n_points);
        if m < n_points / 2 {
            m as i64
        } else {
            m as i64 - n_points as i64
        }
    }

    pub fn index(&self, k: i64) -> usize {
        k.rem_euclid(self.n_points() as i64) as usize
    }

    pub fn is_negative(&self, m: usize) -> bool {
        m & (self.n_points() / 2) != 0
    }

    pub fn magnitude_index(&self, m: usize) -> usize {
        m & (self.n_points() / 2 - 1)
    }
}
