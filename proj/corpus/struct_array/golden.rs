#[derive(Clone, Copy, PartialEq)]
pub struct Cell {
    pub key: u32,
    pub val: u32,
}

pub fn lookup(cs: &[Cell], n: u32, key: u32) -> u32 {
    let mut i: u32 = 0;
    while i < n {
        if cs[i as usize].key == key {
            return cs[i as usize].val;
        }
        i = i.wrapping_add(1);
    }
    0
}

pub fn run() {
    let mut table: [Cell; 3] = [Cell { key: 0, val: 0 }; 3];
    let mut i: u32 = 0;
    while i < 3 {
        table[i as usize].key = i.wrapping_mul(i);
        table[i as usize].val = i.wrapping_mul(10);
        i = i.wrapping_add(1);
    }
    print_u32(lookup(&table[..], 3, 1));
    table[2].val = 21;
    print_u32(lookup(&table[..], 3, 4));
    print_u32(lookup(&table[..], 3, 2))
}
