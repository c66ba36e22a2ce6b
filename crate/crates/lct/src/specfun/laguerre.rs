/// Generalized Laguerre polynomial L_n^{(α)}(x) by the three-term recurrence.
///
/// ```
/// use lct::specfun::laguerre;
/// assert_eq!(laguerre(0, 0.3, 2.0), 1.0);
/// assert!((laguerre(1, 0.3, 2.0) - (1.0 + 0.3 - 2.0)).abs() < 1e-15);
/// ```
pub fn laguerre(n: usize, alpha: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - x) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explicit_sum() {
        // L_5(2) = Σ_k (-1)^k C(5,k) 2^k / k!
        let binom = [1.0, 5.0, 10.0, 10.0, 5.0, 1.0];
        let mut fact = 1.0;
        let mut s = 0.0;
        for k in 0..=5 {
            if k > 0 {
                fact *= k as f64;
            }
            s += (-1f64).powi(k as i32) * binom[k] * 2f64.powi(k as i32) / fact;
        }
        assert!((laguerre(5, 0.0, 2.0) - s).abs() < 1e-14);
    }
}
