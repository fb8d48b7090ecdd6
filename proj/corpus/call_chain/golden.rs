pub fn sq(x: u32) -> u32 {
    x.wrapping_mul(x)
}

pub fn sum_sq(a: u32, b: u32) -> u32 {
    sq(a).wrapping_add(sq(b))
}

pub fn pick(a: u32, b: u32) -> u32 {
    if a > b {
        a.wrapping_sub(b)
    } else {
        b.wrapping_sub(a)
    }
}

pub fn run() {
    print_u32(sum_sq(3, 4));
    print_u32(pick(sum_sq(1, 2), 9));
    print_u32(pick(2, 10))
}
