#[derive(Clone, PartialEq)]
pub struct OwnedCopy {
    pub bytes: Box<[u8]>,
}

pub fn run() {
    let x: [u8; 8] = [1, 2, 3, 4, 5, 6, 7, 8];
    let x: &[u8] = &x[..];
    let (y_l, y_r) = x.split_at(2);
    let mut c = OwnedCopy { bytes: (*y_r).into() };
    c.bytes[0] = 30;
    print_bytes(&c.bytes, 6)
}
