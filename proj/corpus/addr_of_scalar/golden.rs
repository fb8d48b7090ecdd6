pub fn set(out: &mut [u32], v: u32) {
    out[0] = v;
}

pub fn get(r#in: &[u32]) -> u32 {
    r#in[0]
}

pub fn run() {
    let x: u32 = 5;
    print_u32(get(core::slice::from_ref(&x)));
    let mut arr: [u32; 3] = [7, 8, 9];
    let arr: &mut [u32] = &mut arr[..];
    let (arr_l, arr_r) = arr.split_at_mut(1);
    set(arr_r, 50);
    print_u32(arr_r[0]);
    let (arr_l2, arr_r2) = arr_r.split_at(1);
    print_u32(get(arr_r2))
}
