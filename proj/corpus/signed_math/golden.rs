pub fn absdiff(a: i32, b: i32) -> i32 {
    if a < b {
        return b - a;
    }
    a - b
}

pub fn run() {
    let xs: [i32; 4] = [-5, 12, -30, 7];
    let mut acc: i32 = 0;
    let mut i: u32 = 0;
    while i < 4 {
        acc = acc + xs[i as usize];
        i = i.wrapping_add(1);
    }
    print_i32(acc);
    print_i32(absdiff(xs[0], xs[2]));
    let big: i64 = (acc as i64) * 1000000;
    print_i64(big);
    print_i32(-acc)
}
