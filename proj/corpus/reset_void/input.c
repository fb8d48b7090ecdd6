#include <stdint.h>

void run(void) {
    uint8_t abcd[16] = { 0 };
    uint8_t *a = abcd + 0;
    uint8_t *b = abcd + 8;
    a[1] = 1;
    b[1] = 2;
    (void)abcd;
    uint8_t *c = abcd + 4;
    uint8_t *d = abcd + 12;
    c[0] = 3;
    d[0] = 4;
    (void)abcd;
    print_bytes(abcd, 16);
}
