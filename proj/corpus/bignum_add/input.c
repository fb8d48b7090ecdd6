#include <stdint.h>

/* Adds two 4-limb numbers stored little-endian as bytes, with carry. */
void add_limb(uint8_t *dst, uint8_t *x, uint8_t *y, uint32_t len) {
    uint32_t carry = 0;
    for (uint32_t i = 0; i < len; i++) {
        uint32_t s = (uint32_t)x[i] + (uint32_t)y[i] + carry;
        dst[i] = (uint8_t)(s & 255);
        carry = s >> 8;
    }
}

void run(void) {
    uint8_t x[16] = { 0 };
    uint8_t y[16] = { 0 };
    uint8_t out[16] = { 0 };
    for (uint32_t i = 0; i < 16; i++) {
        x[i] = (uint8_t)(i * 17 + 3);
        y[i] = (uint8_t)(250 - i * 5);
    }
    uint8_t *lo = out + 0;
    uint8_t *hi = out + 8;
    add_limb(lo, x, y, 8);
    add_limb(hi, x + 8, y + 8, 8);
    print_bytes(lo, 8);
    print_bytes(hi, 8);
}
