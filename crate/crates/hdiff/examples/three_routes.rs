//! Three independent computations of the same contravariant form: the
//! direct Harish-Chandra route, the long Zhelobenko composite, and the
//! shifted extremal projector in the classical model.
//!
//! Run with `cargo run --release --example three_routes`.

use hdiff::forms::{contravariant_form, form_via_shifted_projector, PolyModuleElement};
use hdiff::pieri::compositions_up_to;
use hdiff::zhelobenko::form_via_zhelobenko;
use hdiff::{MultiIndex, Parity};

fn main() {
    let n = 3;
    println!("n = {n}, even monomials up to degree 3");
    println!("nu\tform (all three routes)");
    for nu in compositions_up_to(n, 3) {
        let m = PolyModuleElement::monomial(n, Parity::Even, &nu);
        let direct = contravariant_form(&m, &m);
        let via_z = form_via_zhelobenko(n, &nu, &nu, Parity::Even);
        let via_p = form_via_shifted_projector(n, &nu, &nu, Parity::Even);
        assert_eq!(direct, via_z, "long composite route at nu = {nu}");
        assert_eq!(direct, via_p, "shifted projector route at nu = {nu}");
        println!("({nu})\t{direct}");
    }

    // monomials of different exponents pair to zero along every route
    let a = MultiIndex::from_slice(&[2, 0, 0]);
    let b = MultiIndex::from_slice(&[1, 1, 0]);
    let va = PolyModuleElement::monomial(n, Parity::Even, &a);
    let vb = PolyModuleElement::monomial(n, Parity::Even, &b);
    assert!(contravariant_form(&va, &vb).is_zero());
    assert!(form_via_zhelobenko(n, &a, &b, Parity::Even).is_zero());
    assert!(form_via_shifted_projector(n, &a, &b, Parity::Even).is_zero());
    println!();
    println!("off-diagonal pairs vanish along all three routes");
}
