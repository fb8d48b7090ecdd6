pub fn run() {
    let mut buf = [0u8; 8];
    let buf: &mut [u8] = &mut buf[..];
    let (l_l, l_r) = buf.split_at_mut(0);
    let (r_l, r_r) = l_r.split_at_mut(4);
    let p: (&mut [u8], &mut [u8]) = (r_l, r_r);
    p.0[0] = 1;
    p.1[1] = 2;
    print_u8(p.0[0]);
    print_u8(p.1[1]);
    print_u8(p.1[0])
}
