#[derive(Clone, PartialEq)]
pub struct S {
    pub data: Box<[u8]>,
}

pub fn run() {
    let x = [0u8; 16];
    let y: &[u8] = &x[..];
    let mut state = S { data: (*y).into() };
    state.data[2] = 6;
    print_bytes(&state.data, 16)
}
