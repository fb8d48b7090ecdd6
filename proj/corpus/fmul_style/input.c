#include <stdint.h>

/* dst = x * y limb-wise mod 256; dst is written, x and y are only read. */
void fmul(uint8_t *dst, uint8_t *x, uint8_t *y) {
    for (uint32_t i = 0; i < 4; i++) {
        dst[i] = (uint8_t)((uint32_t)x[i] * (uint32_t)y[i]);
    }
}

void run(void) {
    uint8_t a[4] = { 3, 5, 7, 200 };
    uint8_t b[4] = { 4, 6, 8, 3 };
    uint8_t out[4] = { 0 };
    fmul(out, a, b);
    print_bytes(out, 4);
    fmul(a, out, b);
    print_bytes(a, 4);
}
