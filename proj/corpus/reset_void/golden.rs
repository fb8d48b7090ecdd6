pub fn run() {
    let mut abcd = [0u8; 16];
    let abcd: &mut [u8] = &mut abcd[..];
    let (a_l, a_r) = abcd.split_at_mut(0);
    let (b_l, b_r) = a_r.split_at_mut(8);
    b_l[1] = 1;
    b_r[1] = 2;
    let (c_l, c_r) = abcd.split_at_mut(4);
    let (d_l, d_r) = c_r.split_at_mut(8);
    d_l[0] = 3;
    d_r[0] = 4;
    print_bytes(abcd, 16)
}
