pub fn find(p: &[u8], n: u32, v: u8) -> u32 {
    let mut i: u32 = 0;
    while i < n {
        if p[i as usize] == v {
            break;
        }
        i = i.wrapping_add(1);
    }
    i
}

pub fn run() {
    let hay: [u8; 6] = [4, 8, 15, 16, 23, 42];
    print_u32(find(&hay[..], 6, 16));
    print_u32(find(&hay[..], 6, 99))
}
