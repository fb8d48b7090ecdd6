pub fn run() {
    let mut xs: [u32; 10] = [1, 2, 3, 4, 5, 0, 0, 0, 0, 0];
    let mut total: u32 = 0;
    let mut i: u32 = 0;
    while i < 10 {
        total = total.wrapping_add(xs[i as usize]);
        i = i.wrapping_add(1);
    }
    print_u32(total);
    xs[9] = 100;
    print_u32(xs[9].wrapping_add(xs[0]))
}
