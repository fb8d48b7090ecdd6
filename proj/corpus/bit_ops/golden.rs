pub fn rotl(x: u32, k: u32) -> u32 {
    x << k | x >> 32u32.wrapping_sub(k)
}

pub fn run() {
    let v: u32 = 305419896;
    print_u32(rotl(v, 8));
    print_u32(v & 65535);
    print_u32(v ^ 4294967295);
    print_u32(!v);
    let b: u8 = 170;
    print_u8(b >> 1);
    print_u32(v % 1000);
    print_u32(v / 3)
}
