//! Characters of so(2n) and the sum of Schur polynomials inside a rectangle.
use ll_lab::so_characters::{sorth, verify_kratt, HighestWeight};

fn main() {
    for hw in [vec![1, 0], vec![1, 1], vec![1, -1], vec![2, 2]] {
        let hw = HighestWeight::integral(&hw).unwrap();
        println!("sorth{hw} = {}", sorth(&hw).unwrap());
    }
    let spin = HighestWeight::from_doubled(vec![1, 1]).unwrap();
    println!("sorth{spin} = {}", sorth(&spin).unwrap());
    println!();
    for twice_c in 1..=4 {
        for k in 0..=twice_c {
            let r = &verify_kratt(twice_c, k, 2)[0];
            println!("{}", r.to_json_line(false));
        }
    }
}
