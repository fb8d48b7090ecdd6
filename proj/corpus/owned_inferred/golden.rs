#[derive(Clone, PartialEq)]
pub struct Buffer {
    pub data: Box<[u8]>,
    pub cap: u32,
}

pub fn make(cap: u32) -> Buffer {
    let d = vec![0u8; cap as usize].into_boxed_slice();
    Buffer { data: d, cap: cap }
}

pub fn run() {
    let mut b = make(4);
    b.data[0] = 1;
    b.data[3] = 4;
    print_bytes(&b.data, b.cap);
    print_u32(b.cap)
}
