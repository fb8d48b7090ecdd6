pub fn in_range(v: u32, lo: u32, hi: u32) -> bool {
    v >= lo && v < hi
}

pub fn run() {
    let a = in_range(5, 1, 10);
    let b = in_range(10, 1, 10);
    print_bool(a);
    print_bool(b);
    print_bool(a && !b);
    print_bool(a || b);
    let mut n: u32 = 0;
    let mut i: u32 = 0;
    while i < 20 {
        if in_range(i, 3, 8) || i == 15 {
            n = n.wrapping_add(1);
        }
        i = i.wrapping_add(1);
    }
    print_u32(n)
}
