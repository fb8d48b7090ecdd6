pub fn add_limb(dst: &mut [u8], x: &[u8], y: &[u8], len: u32) {
    let mut carry: u32 = 0;
    let mut i: u32 = 0;
    while i < len {
        let s: u32 = (x[i as usize] as u32).wrapping_add(y[i as usize] as u32).wrapping_add(carry);
        dst[i as usize] = (s & 255) as u8;
        carry = s >> 8;
        i = i.wrapping_add(1);
    }
}

pub fn run() {
    let mut x = [0u8; 16];
    let mut y = [0u8; 16];
    let mut out = [0u8; 16];
    let mut i: u32 = 0;
    while i < 16 {
        x[i as usize] = i.wrapping_mul(17).wrapping_add(3) as u8;
        y[i as usize] = 250u32.wrapping_sub(i.wrapping_mul(5)) as u8;
        i = i.wrapping_add(1);
    }
    let out: &mut [u8] = &mut out[..];
    let (lo_l, lo_r) = out.split_at_mut(0);
    let (hi_l, hi_r) = lo_r.split_at_mut(8);
    add_limb(hi_l, &x[..], &y[..], 8);
    let x: &[u8] = &x[..];
    let (x_l, x_r) = x.split_at(8);
    let y: &[u8] = &y[..];
    let (y_l, y_r) = y.split_at(8);
    add_limb(hi_r, x_r, y_r, 8);
    print_bytes(hi_l, 8);
    print_bytes(hi_r, 8)
}
