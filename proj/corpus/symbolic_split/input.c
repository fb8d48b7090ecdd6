#include <stdint.h>

void stamp(uint8_t *x, uint32_t n) {
    uint8_t *a = x + n;
    uint8_t *b = x + n + 4;
    uint8_t *c = x + 2 * n + 4;
    a[0] = 1;
    b[0] = 2;
    c[0] = 3;
}

void run(void) {
    uint8_t buf[16] = { 0 };
    stamp(buf, 3);
    print_bytes(buf, 16);
}
