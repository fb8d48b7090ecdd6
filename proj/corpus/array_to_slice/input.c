#include <stdint.h>

uint32_t count_nonzero(uint8_t *p, uint32_t n) {
    uint32_t c = 0;
    for (uint32_t i = 0; i < n; i++) {
        if (p[i] != 0) {
            c++;
        }
    }
    return c;
}

void run(void) {
    uint8_t a[12] = { 0, 1, 0, 2, 3 };
    print_u32(count_nonzero(a, 12));
    a[11] = 9;
    print_u32(count_nonzero(a, 12));
}
