pub fn mark(x: &mut [u8], n: u32, k: u32) {
    let (p_l, p_r) = x.split_at_mut(n as usize);
    p_r[0] = 9;
    p_r[(k as usize) - (n as usize)] = 3;
}

pub fn run() {
    let mut buf = [0u8; 8];
    mark(&mut buf[..], 4, 6);
    print_bytes(&buf[..], 8)
}
