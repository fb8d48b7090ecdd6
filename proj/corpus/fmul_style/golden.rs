pub fn fmul(dst: &mut [u8], x: &[u8], y: &[u8]) {
    let mut i: u32 = 0;
    while i < 4 {
        dst[i as usize] = (x[i as usize] as u32).wrapping_mul(y[i as usize] as u32) as u8;
        i = i.wrapping_add(1);
    }
}

pub fn run() {
    let mut a: [u8; 4] = [3, 5, 7, 200];
    let b: [u8; 4] = [4, 6, 8, 3];
    let mut out = [0u8; 4];
    fmul(&mut out[..], &a[..], &b[..]);
    print_bytes(&out[..], 4);
    fmul(&mut a[..], &out[..], &b[..]);
    print_bytes(&a[..], 4)
}
