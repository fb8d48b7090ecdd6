pub fn count_nonzero(p: &[u8], n: u32) -> u32 {
    let mut c: u32 = 0;
    let mut i: u32 = 0;
    while i < n {
        if p[i as usize] != 0 {
            c = c.wrapping_add(1);
        }
        i = i.wrapping_add(1);
    }
    c
}

pub fn run() {
    let mut a: [u8; 12] = [0, 1, 0, 2, 3, 0, 0, 0, 0, 0, 0, 0];
    print_u32(count_nonzero(&a[..], 12));
    a[11] = 9;
    print_u32(count_nonzero(&a[..], 12))
}
