#include <stdint.h>

/* lo reaches past its own chunk into hi's: Rust bounds checks catch it. */
void smear(uint8_t *x, uint32_t k) {
    uint8_t *lo = x + 0;
    uint8_t *hi = x + 4;
    hi[0] = 1;
    lo[k] = 2;
}

void run(void) {
    uint8_t buf[8] = { 0 };
    smear(buf, 6);
    print_bytes(buf, 8);
}
