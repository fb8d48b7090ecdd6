#[derive(Clone, Copy, PartialEq)]
pub struct View<'a> {
    pub bytes: &'a [u8],
    pub len: u32,
}

pub fn total(v: View) -> u32 {
    let mut s: u32 = 0;
    let mut i: u32 = 0;
    while i < v.len {
        s = s.wrapping_add(v.bytes[i as usize] as u32);
        i = i.wrapping_add(1);
    }
    s
}

pub fn run() {
    let data: [u8; 6] = [5, 6, 7, 8, 9, 10];
    let whole = View { bytes: &data[..], len: 6 };
    let data: &[u8] = &data[..];
    let (data_l, data_r) = data.split_at(3);
    let tail = View { bytes: data_r, len: 3 };
    print_u32(total(whole));
    print_u32(total(tail));
    print_u32(total(whole).wrapping_sub(total(tail)))
}
