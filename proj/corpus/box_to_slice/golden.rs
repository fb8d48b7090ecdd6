pub fn fill_pattern(dst: &mut [u8], n: u32) {
    let mut i: u32 = 0;
    while i < n {
        dst[i as usize] = 255u32.wrapping_sub(i) as u8;
        i = i.wrapping_add(1);
    }
}

pub fn checksum(p: &[u8], n: u32) -> u32 {
    let mut s: u32 = 0;
    let mut i: u32 = 0;
    while i < n {
        s = s.wrapping_mul(31).wrapping_add(p[i as usize] as u32);
        i = i.wrapping_add(1);
    }
    s
}

pub fn run() {
    let mut buf = vec![0u8; 10].into_boxed_slice();
    fill_pattern(&mut buf, 10);
    print_u32(checksum(&buf, 10));
    print_bytes(&buf, 10)
}
