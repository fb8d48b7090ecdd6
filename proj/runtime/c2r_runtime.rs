// Output helpers matching c2r_runtime.h.
pub fn print_u8(x: u8) { println!("{}", x); }
pub fn print_u16(x: u16) { println!("{}", x); }
pub fn print_u32(x: u32) { println!("{}", x); }
pub fn print_u64(x: u64) { println!("{}", x); }
pub fn print_i32(x: i32) { println!("{}", x); }
pub fn print_i64(x: i64) { println!("{}", x); }
pub fn print_bool(x: bool) { println!("{}", x); }
pub fn print_bytes(p: &[u8], len: u32) {
    let mut s = String::new();
    for b in &p[..len as usize] {
        s.push_str(&format!("{:02x}", b));
    }
    println!("{}", s);
}

fn main() {
    run();
}
