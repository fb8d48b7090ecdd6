#include <stdint.h>

void bump(uint32_t *p) {
    *p = *p + 1;
}

void run(void) {
    uint32_t cells[4] = { 10, 20, 30, 40 };
    uint32_t *p = cells + 2;
    *p = 99;
    bump(p);
    bump(cells);
    print_u32(cells[0]);
    print_u32(cells[2]);
    print_u32(*(cells + 3));
}
