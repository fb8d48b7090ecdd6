pub fn fill_two(x: &mut [u8], n: u32, m: u32) {
    let (p_l, p_r) = x.split_at_mut(n as usize);
    let (q_l, q_r) = p_r.split_at_mut((m as usize) - (n as usize));
    q_l[0] = 1;
    q_r[0] = 2;
}

pub fn run() {
    let mut buf = [0u8; 8];
    fill_two(&mut buf[..], 2, 5);
    print_bytes(&buf[..], 8)
}
