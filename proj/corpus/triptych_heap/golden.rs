#[derive(Clone, PartialEq)]
pub struct S {
    pub data: Box<[u8]>,
}

pub fn run() {
    let x = vec![0u8; 16].into_boxed_slice();
    let mut state = S { data: x };
    state.data[15] = 1;
    print_bytes(&state.data, 16)
}
