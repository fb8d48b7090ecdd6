pub fn bump(p: &mut [u32]) {
    p[0] = p[0].wrapping_add(1);
}

pub fn run() {
    let mut cells: [u32; 4] = [10, 20, 30, 40];
    let cells: &mut [u32] = &mut cells[..];
    let (p_l, p_r) = cells.split_at_mut(2);
    p_r[0] = 99;
    bump(p_r);
    bump(cells);
    print_u32(cells[0]);
    print_u32(cells[2]);
    print_u32(cells[3])
}
