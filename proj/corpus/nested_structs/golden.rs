#[derive(Clone, Copy, PartialEq)]
pub struct Point {
    pub x: u32,
    pub y: u32,
}

#[derive(Clone, Copy, PartialEq)]
pub struct Rect {
    pub lo: Point,
    pub hi: Point,
}

pub fn area(r: Rect) -> u32 {
    r.hi.x.wrapping_sub(r.lo.x).wrapping_mul(r.hi.y.wrapping_sub(r.lo.y))
}

pub fn run() {
    let lo = Point { x: 1, y: 2 };
    let hi = Point { x: 5, y: 7 };
    let mut r = Rect { lo: lo, hi: hi };
    print_u32(area(r));
    r.hi.x = 11;
    print_u32(area(r));
    let mut copy: Rect = r;
    copy.lo.y = 0;
    print_u32(area(copy));
    print_u32(area(r))
}
