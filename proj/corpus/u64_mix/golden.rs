pub fn mix(mut h: u64, v: u64) -> u64 {
    h = h ^ v;
    h = h.wrapping_mul(1099511628211);
    h
}

pub fn run() {
    let mut h: u64 = 14695981039346656037;
    let mut i: u32 = 0;
    while i < 5 {
        h = mix(h, i as u64);
        i = i.wrapping_add(1);
    }
    print_u64(h);
    let mut x: u32 = 0;
    x = x.wrapping_sub(1);
    print_u32(x)
}
