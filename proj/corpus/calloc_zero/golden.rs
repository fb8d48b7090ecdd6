pub fn run() {
    let mut v = vec![0u16; 5].into_boxed_slice();
    v[2] = 700;
    let mut s: u32 = 0;
    let mut i: u32 = 0;
    while i < 5 {
        s = s.wrapping_add(v[i as usize] as u32);
        i = i.wrapping_add(1);
    }
    print_u32(s);
    print_u16(v[2])
}
