#include <stdint.h>

void run(void) {
    uint8_t abcd[32] = { 0 };
    uint8_t *a = abcd + 0;
    uint8_t *c = abcd + 16;
    uint8_t *b = abcd + 8;
    uint8_t *d = abcd + 24;
    for (uint32_t i = 0; i < 8; i++) {
        a[i] = 1;
        b[i] = 2;
        c[i] = 3;
        d[i] = 4;
    }
    (void)abcd;
    print_bytes(abcd, 32);
}
