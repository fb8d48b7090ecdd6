#[derive(Clone, PartialEq)]
pub struct S {
    pub data: Box<[u8]>,
}

pub fn run() {
    let x = [0u8; 16];
    let mut state = S { data: Box::new(x) };
    state.data[0] = 5;
    print_bytes(&state.data, 16)
}
