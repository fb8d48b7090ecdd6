#include <stdint.h>

void run(void) {
    uint8_t x[16] = { 0 };
    uint8_t *p = x + 0;
    uint8_t *q = x + 8;
    q[0] = 1;
    p[9] = 2;
}
