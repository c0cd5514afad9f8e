use perron_core::rational::parse_decimal_rational;
use perron_core::search::{run_sharded, SearchConfig, SearchMode};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let mode = args.get(1).map(|s| s.as_str()).unwrap_or("nonorientable");
    let genus: u32 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(4);
    let bound = args.get(3).map(|s| s.as_str()).unwrap_or("1.84");
    let interleave = args.get(4).map(|s| s != "batch").unwrap_or(true);
    let shards: usize = args.get(5).and_then(|s| s.parse().ok()).unwrap_or(1);

    let mode = match mode {
        "reversing" => SearchMode::reversing(genus).unwrap(),
        _ => SearchMode::nonorientable(genus).unwrap(),
    };
    let mut config = SearchConfig::new(mode, parse_decimal_rational(bound).unwrap()).unwrap();
    config.mod2_interleave = interleave;
    config.shards = shards;
    let t0 = std::time::Instant::now();
    let outcome = run_sharded(&config).unwrap();
    println!("elapsed: {:?}", t0.elapsed());
    println!("{}", outcome.trace);
    for c in &outcome.candidates {
        println!(
            "  {}  lambda={:.5}  stripped={}  ambiguous={}",
            c.polynomial.to_expr_string(),
            c.perron_value,
            c.stripped.to_expr_string(),
            c.ambiguous
        );
    }
}
