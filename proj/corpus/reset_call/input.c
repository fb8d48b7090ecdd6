#include <stdint.h>

uint32_t sum(uint8_t *p, uint32_t n) {
    uint32_t s = 0;
    for (uint32_t i = 0; i < n; i++) {
        s += (uint32_t)p[i];
    }
    return s;
}

void run(void) {
    uint8_t v[8] = { 0 };
    uint8_t *hi = v + 4;
    hi[0] = 10;
    print_u32(sum(v, 8));
    uint8_t *mid = v + 2;
    mid[0] = 20;
    print_u32(sum(v, 8));
}
