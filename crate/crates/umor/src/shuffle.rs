/// Binomial coefficient, None on overflow.
pub fn binomial(n: u64, k: u64) -> Option<i128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as i128)? / (i as i128 + 1);
    }
    Some(acc)
}

/// Signed count of (m, n)-shuffles: zero when both are odd,
/// otherwise binom(⌊(m+n)/2⌋, ⌊m/2⌋).
pub fn signed_shuffle_coeff(m: u64, n: u64) -> i128 {
    if m % 2 == 1 && n % 2 == 1 {
        return 0;
    }
    binomial((m + n) / 2, m / 2).expect("shuffle coefficient fits in i128")
}
