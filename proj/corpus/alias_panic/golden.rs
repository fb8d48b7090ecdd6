pub fn smear(x: &mut [u8], k: u32) {
    let (lo_l, lo_r) = x.split_at_mut(0);
    let (hi_l, hi_r) = lo_r.split_at_mut(4);
    hi_r[0] = 1;
    hi_l[k as usize] = 2;
}

pub fn run() {
    let mut buf = [0u8; 8];
    smear(&mut buf[..], 6);
    print_bytes(&buf[..], 8)
}
