#include <stdint.h>

void mark(uint8_t *x, uint32_t n, uint32_t k) {
    uint8_t *p = x + n;
    p[0] = 9;
    x[k] = 3;
}

void run(void) {
    uint8_t buf[8] = { 0 };
    mark(buf, 4, 6);
    print_bytes(buf, 8);
}
