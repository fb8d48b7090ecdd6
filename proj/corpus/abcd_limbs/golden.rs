pub fn run() {
    let mut abcd = [0u8; 32];
    let abcd: &mut [u8] = &mut abcd[..];
    let (a_l, a_r) = abcd.split_at_mut(0);
    let (c_l, c_r) = a_r.split_at_mut(16);
    let (b_l, b_r) = c_l.split_at_mut(8);
    let (d_l, d_r) = c_r.split_at_mut(8);
    let mut i: u32 = 0;
    while i < 8 {
        b_l[i as usize] = 1;
        b_r[i as usize] = 2;
        d_l[i as usize] = 3;
        d_r[i as usize] = 4;
        i = i.wrapping_add(1);
    }
    print_bytes(abcd, 32)
}
