fn main() {
    let r = perron_core::rational::parse_decimal_rational("1.1743").unwrap();
    for k in 1..=10u32 {
        let rng = perron_core::bounds::power_sum_range(11, k, &r, true).unwrap();
        println!("k={k} lower={} upper={} adm={:?} len={}", rng.lower, rng.upper, rng.admissible, rng.admissible_len());
    }
}
