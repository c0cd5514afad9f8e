//! One-off semantic probe for the step-5 variants at d=11, r=1.1743.
use perron_core::bounds::power_sum_range;
use perron_core::rational::parse_decimal_rational;

const D: usize = 11;

struct Tally {
    n6_odd_nonstrict: u64,
    n6_odd_strict: u64,
    n6_even_nonstrict: u64,
    n6_even_strict: u64,
    n6_mixed_flat: u64,
    arrivals: u64,
}

fn main() {
    let r = parse_decimal_rational("1.1743").unwrap();
    let strict: Vec<(i64, i64)> = (1..D)
        .map(|k| power_sum_range(D, k as u32, &r, true).unwrap().admissible.unwrap())
        .collect();
    let nonstrict: Vec<(i64, i64)> = (1..D)
        .map(|k| power_sum_range(D, k as u32, &r, false).unwrap().admissible.unwrap())
        .collect();

    let mut t = Tally {
        n6_odd_nonstrict: 0, n6_odd_strict: 0, n6_even_nonstrict: 0,
        n6_even_strict: 0, n6_mixed_flat: 0, arrivals: 0,
    };
    let mut p = [0i128; D];
    let mut c = [0i128; D];
    dfs(1, &mut p, &mut c, &strict, &nonstrict, &mut t);
    println!("arrivals (should be 2*1808922): {}", t.arrivals);
    println!("n6 odd-form nonstrict : {}", t.n6_odd_nonstrict);
    println!("n6 odd-form strict    : {}", t.n6_odd_strict);
    println!("n6 even-form nonstrict: {}", t.n6_even_nonstrict);
    println!("n6 even-form strict   : {}", t.n6_even_strict);
    println!("n6 mixed flat -10     : {}", t.n6_mixed_flat);
}

fn dfs(k: usize, p: &mut [i128; D], c: &mut [i128; D], strict: &[(i64, i64)], nonstrict: &[(i64, i64)], t: &mut Tally) {
    if k > D - 1 {
        leaf(p, c, nonstrict, t);
        return;
    }
    let mut s_k: i128 = 0;
    for i in 1..k {
        s_k += c[i - 1] * p[k - i - 1];
    }
    let (lo, hi) = strict[k - 1];
    let kk = k as i128;
    let (mut modulus, mut residue) = (kk, s_k.rem_euclid(kk));
    if 2 * k > D && k < D {
        let tpar = c[D - k - 1].rem_euclid(2);
        modulus = 2 * kk;
        residue = (s_k.rem_euclid(modulus) + kk * tpar).rem_euclid(modulus);
    }
    let lo = lo as i128;
    let mut pk = lo + (residue - lo).rem_euclid(modulus);
    while pk <= hi as i128 {
        c[k - 1] = (pk - s_k) / kk;
        p[k - 1] = pk;
        dfs(k + 1, p, c, strict, nonstrict, t);
        pk += modulus;
    }
}

fn pstar(c: &[i128; D], sigma: i128) -> [i128; D] {
    // Saturating: bounds are tiny, so saturated values are conclusively out.
    let mut ps = [0i128; D];
    for k in 1..D {
        let mut v = (k as i128).saturating_mul(sigma * c[D - k - 1]);
        for i in 1..k {
            v = v.saturating_add((sigma * c[D - i - 1]).saturating_mul(ps[k - i - 1]));
        }
        ps[k - 1] = v.clamp(-(1i128 << 100), 1i128 << 100);
    }
    ps
}

fn pstar_shifted(c: &[i128; D], cd: i128, sigma: i128) -> [i128; D] {
    // c*_i = sigma * c_{d-i+1}, so c*_1 = sigma*c_d, ..., c*_{d-1} = sigma*c_2.
    let mut cstar = [0i128; D];
    cstar[0] = sigma * cd;
    for i in 2..D {
        cstar[i - 1] = sigma * c[D - i]; // c_{d-i+1} = c[(d-i+1)-1] = c[D-i]
    }
    let mut ps = [0i128; D];
    for k in 1..D {
        let mut v = (k as i128).saturating_mul(cstar[k - 1]);
        for i in 1..k {
            v = v.saturating_add(cstar[i - 1].saturating_mul(ps[k - i - 1]));
        }
        ps[k - 1] = v.clamp(-(1i128 << 100), 1i128 << 100);
    }
    ps
}

fn in_all(ps: &[i128; D], ranges: &[(i64, i64)], negate: bool) -> bool {
    for k in 1..D {
        let v = if negate { -ps[k - 1] } else { ps[k - 1] };
        let (lo, hi) = ranges[k - 1];
        if v < lo as i128 || v > hi as i128 {
            return false;
        }
    }
    true
}

fn ranges_n6(odd_form: bool, strict: bool, mixed_flat: bool) -> Vec<(i64, i64)> {
    use num_rational::BigRational;
    use num_traits::ToPrimitive;
    let r = parse_decimal_rational("1.1743").unwrap();
    (1..D)
        .map(|k| {
            let rk = perron_core::rational::pow_rational(&r, k as u32);
            let rki = rk.recip();
            let n6 = BigRational::from_integer(6.into());
            let n6m2 = BigRational::from_integer(4.into());
            let one = BigRational::from_integer(1.into());
            let mut upper = &n6 * (&rk + &rki);
            let mut curve = -&n6m2 * &rk - &n6 * &rki;
            let flat = if odd_form {
                upper += &one;
                curve -= &one;
                if mixed_flat {
                    BigRational::from_integer((-10).into())
                } else {
                    BigRational::from_integer((-11).into())
                }
            } else {
                BigRational::from_integer((-10).into())
            };
            let lower = flat.min(curve);
            let lo = if strict {
                lower.floor().to_integer().to_i64().unwrap() + 1
            } else {
                lower.ceil().to_integer().to_i64().unwrap()
            };
            (lo, upper.floor().to_integer().to_i64().unwrap())
        })
        .collect()
}

fn backward_exact(c: &[i128; D], sigma: i128, ranges: &[(i64, i64)]) -> bool {
    // Early-abort i128-checked computation; overflow cannot produce a
    // wrong verdict because we stop at the first out-of-range value.
    let mut ps = [0i128; D];
    for k in 1..D {
        let ck = sigma * c[D - k - 1];
        let mut v = match (k as i128).checked_mul(ck) {
            Some(v) => v,
            None => return false,
        };
        for i in 1..k {
            let ci = sigma * c[D - i - 1];
            v = match ci.checked_mul(ps[k - i - 1]).and_then(|t| v.checked_add(t)) {
                Some(v) => v,
                None => return false,
            };
        }
        let (lo, hi) = ranges[k - 1];
        if v < lo as i128 || v > hi as i128 {
            return false;
        }
        ps[k - 1] = v;
    }
    true
}

fn leaf(_p: &mut [i128; D], c: &mut [i128; D], nonstrict: &[(i64, i64)], t: &mut Tally) {
    use std::sync::OnceLock;
    static R1: OnceLock<Vec<(i64, i64)>> = OnceLock::new();
    static R3: OnceLock<Vec<(i64, i64)>> = OnceLock::new();
    let odd_ns = R1.get_or_init(|| ranges_n6(true, false, false));
    let even_ns = R3.get_or_init(|| ranges_n6(false, false, false));
    for cd in [1i128, -1] {
        t.arrivals += 1;
        let sigma = if cd == 1 { -1 } else { 1 };
        if backward_exact(c, sigma, odd_ns) { t.n6_odd_nonstrict += 1; }
        if backward_exact(c, sigma, even_ns) { t.n6_even_nonstrict += 1; }
        if backward_exact(c, sigma, nonstrict) { t.n6_odd_strict += 1; } // n=5 sanity: expect 3453
    }
}
