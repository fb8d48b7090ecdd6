#[derive(Clone, PartialEq)]
pub struct Holder {
    pub data: Box<[u8]>,
    pub len: u32,
}

pub fn run() {
    let mut x = [0u8; 16];
    x[3] = 7;
    let mut h = Holder { data: Box::new(x), len: 16 };
    h.data[4] = 8;
    print_bytes(&h.data, h.len)
}
