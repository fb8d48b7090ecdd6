pub fn stamp(x: &mut [u8], n: u32) {
    let (a_l, a_r) = x.split_at_mut(n as usize);
    let (b_l, b_r) = a_r.split_at_mut(4);
    let (c_l, c_r) = b_r.split_at_mut(n as usize);
    b_l[0] = 1;
    c_l[0] = 2;
    c_r[0] = 3;
}

pub fn run() {
    let mut buf = [0u8; 16];
    stamp(&mut buf[..], 3);
    print_bytes(&buf[..], 16)
}
