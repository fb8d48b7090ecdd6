#[derive(Clone, PartialEq)]
pub struct State {
    pub regs: Box<[u32]>,
    pub pc: u32,
}

pub fn step(s: &mut [State]) {
    s[0].regs[s[0].pc as usize] = s[0].pc.wrapping_mul(10);
    s[0].pc = s[0].pc.wrapping_add(1);
}

pub fn run() {
    let regs = [0u32; 4];
    let mut st = State { regs: Box::new(regs), pc: 0 };
    step(core::slice::from_mut(&mut st));
    step(core::slice::from_mut(&mut st));
    print_u32(st.regs[0]);
    print_u32(st.regs[1]);
    print_u32(st.pc)
}
