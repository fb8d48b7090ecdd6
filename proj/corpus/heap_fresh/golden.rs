pub fn make_buf(n: u32) -> Box<[u8]> {
    let mut p = vec![0u8; n as usize].into_boxed_slice();
    let mut i: u32 = 0;
    while i < n {
        p[i as usize] = i.wrapping_mul(3) as u8;
        i = i.wrapping_add(1);
    }
    p
}

pub fn run() {
    let mut b = make_buf(6);
    b[0] = 42;
    print_bytes(&b, 6)
}
