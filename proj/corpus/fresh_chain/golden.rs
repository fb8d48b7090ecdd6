pub fn alloc_words(n: u32) -> Box<[u32]> {
    vec![0u32; n as usize].into_boxed_slice()
}

pub fn alloc_squares(n: u32) -> Box<[u32]> {
    let mut w = alloc_words(n);
    let mut i: u32 = 0;
    while i < n {
        w[i as usize] = i.wrapping_mul(i);
        i = i.wrapping_add(1);
    }
    w
}

pub fn run() {
    let sq = alloc_squares(5);
    print_u32(sq[4].wrapping_add(sq[3]))
}
