//! Working in the Schur basis: Pieri rule, skewing by p_1 and the f_i series.
use ll_lab::lambda_ring::{f_series_schur, hall_inner, SchurExpansion};
use ll_lab::partition::part;

fn main() {
    let s21 = SchurExpansion::schur(part(&[2, 1]), 6);
    println!("s_21 * e_2     = {}", s21.pieri_mul_e(2));
    println!("p1_perp s_21   = {}", s21.p1_perp());
    println!("f_1 up to deg 5 = {}", f_series_schur(1, 5));
    let a = SchurExpansion::schur(part(&[2, 1]), 6);
    let b = SchurExpansion::schur(part(&[2]), 6);
    let lhs = hall_inner(&a.p1_perp(), &b).unwrap();
    let rhs = hall_inner(&a, &b.mul(&SchurExpansion::schur(part(&[1]), 6))).unwrap();
    println!("<p1_perp s_21, s_2> = {lhs} = <s_21, s_1 s_2> = {rhs}");
}
