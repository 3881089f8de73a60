use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

fn cache() -> &'static RwLock<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Coefficients (low to high) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic(n: u32) -> Arc<Vec<i64>> {
    assert!(n >= 1, "cyclotomic index starts at 1");
    if let Some(p) = cache().read().unwrap().get(&n) {
        return p.clone();
    }
    // q^n - 1 divided by every proper divisor's cyclotomic factor
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = div_int_monic(&p, &cyclotomic(d));
        }
    }
    let p = Arc::new(p);
    cache().write().unwrap().insert(n, p.clone());
    p
}

fn div_int_monic(p: &[i64], m: &[i64]) -> Vec<i64> {
    let dm = m.len() - 1;
    let mut rem = p.to_vec();
    let mut q = vec![0i64; p.len() - dm];
    for i in (0..q.len()).rev() {
        let lead = rem[i + dm];
        q[i] = lead;
        for (j, c) in m.iter().enumerate() {
            rem[i + j] -= lead * c;
        }
    }
    debug_assert!(rem.iter().all(|c| *c == 0));
    q
}

pub fn euler_phi(mut n: u32) -> u32 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}
