pub fn run() {
    let src: [u8; 8] = [1, 2, 3, 4, 5, 6, 7, 8];
    let mut dst = [9u8; 8];
    let src: &[u8] = &src[..];
    let (src_l, src_r) = src.split_at(2);
    dst[..4].copy_from_slice(&src_r[..4]);
    print_bytes(&dst[..], 8);
    let mut w = [0u32; 4];
    w[1] = 77;
    print_u32(w[1].wrapping_add(w[0]))
}
