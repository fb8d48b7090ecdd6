#include <stdint.h>

/* n and m cannot be ordered statically; they are split in program order. */
void fill_two(uint8_t *x, uint32_t n, uint32_t m) {
    uint8_t *p = x + n;
    uint8_t *q = x + m;
    p[0] = 1;
    q[0] = 2;
}

void run(void) {
    uint8_t buf[8] = { 0 };
    fill_two(buf, 2, 5);
    print_bytes(buf, 8);
}
