use num_rational::BigRational;
use num_traits::One;
use perron_core::poly::IntPolynomial;
use perron_core::roots::{newton_descent, Margins, NewtonDescent};
use perron_core::sturm::count_real_roots_above;

fn main() {
    let polys = [
        "1,1,-2,-2,1,1,1,1,-2,-2,1,1",   // x^11+x^10-2x^9-2x^8+x^7+x^6+x^5+x^4-2x^3-2x^2+x+1 reversed? ascending
        "1,2,-1,-3,0,-2,-2,0,-1,2,1"      // placeholder
    ];
    let p: IntPolynomial = polys[0].parse().unwrap();
    println!("poly = {}", p.to_expr_string());
    let m = Margins::default();
    match newton_descent(&p, &m) {
        NewtonDescent::Converged(l) => {
            println!("converged lambda = {l:.17}");
            println!("lambda - 1 = {:e}", l - 1.0);
        }
        other => println!("descent: {other:?}"),
    }
    println!("roots above 1 (exact): {}", count_real_roots_above(&p, &BigRational::one()));
    let (stripped, units) = p.strip_unit_roots();
    println!("after unit strip: {} (units {:?})", stripped.to_expr_string(), units);
}
