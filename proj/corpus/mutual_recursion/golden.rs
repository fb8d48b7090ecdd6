pub fn odd_pass(p: &mut [u8], n: u32) {
    if n == 0 {
        return;
    }
    even_pass(p, n.wrapping_sub(1))
}

pub fn even_pass(p: &mut [u8], n: u32) {
    if n == 0 {
        return;
    }
    p[n.wrapping_sub(1) as usize] = n as u8;
    odd_pass(p, n.wrapping_sub(1))
}

pub fn run() {
    let mut buf = [0u8; 6];
    even_pass(&mut buf[..], 6);
    print_bytes(&buf[..], 6)
}
