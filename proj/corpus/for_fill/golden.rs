pub fn run() {
    let a = [7u8; 12];
    let mut t: u32 = 0;
    let mut i: u32 = 0;
    while i < 12 {
        t = t.wrapping_add(a[i as usize] as u32);
        i = i.wrapping_add(1);
    }
    print_u32(t)
}
