
use hdiff::checks::{self, Check};
use hdiff::Parity;

fn t(name: &str, f: impl FnOnce() -> Check) {
    let t0 = std::time::Instant::now();
    let c = f();
    println!("{name}: {:?} pass={} ({})", t0.elapsed(), c.pass, c.detail);
}

fn main() {
    t("assoc even n=2,3,4 x200", || checks::associativity_check(&[2, 3, 4], Parity::Even, 200, 1));
    t("assoc odd n=2,3,4 x200", || checks::associativity_check(&[2, 3, 4], Parity::Odd, 200, 1));
}
