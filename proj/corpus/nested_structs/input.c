#include <stdint.h>

struct point {
    uint32_t x;
    uint32_t y;
};

struct rect {
    struct point lo;
    struct point hi;
};

uint32_t area(struct rect r) {
    return (r.hi.x - r.lo.x) * (r.hi.y - r.lo.y);
}

void run(void) {
    struct point lo = { .x = 1, .y = 2 };
    struct point hi = { .x = 5, .y = 7 };
    struct rect r = { .lo = lo, .hi = hi };
    print_u32(area(r));
    r.hi.x = 11;
    print_u32(area(r));
    struct rect copy = r;
    copy.lo.y = 0;
    print_u32(area(copy));
    print_u32(area(r));
}
