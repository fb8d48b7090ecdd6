pub fn sum(p: &[u8], n: u32) -> u32 {
    let mut s: u32 = 0;
    let mut i: u32 = 0;
    while i < n {
        s = s.wrapping_add(p[i as usize] as u32);
        i = i.wrapping_add(1);
    }
    s
}

pub fn run() {
    let mut v = [0u8; 8];
    let v: &mut [u8] = &mut v[..];
    let (hi_l, hi_r) = v.split_at_mut(4);
    hi_r[0] = 10;
    print_u32(sum(v, 8));
    let (mid_l, mid_r) = v.split_at_mut(2);
    mid_r[0] = 20;
    print_u32(sum(v, 8))
}
