#include <stdint.h>

void run(void) {
    uint8_t a[4] = { 0 };
    uint8_t b[4] = { 0 };
    uint8_t *p = a;
    p = b;
    p[0] = 1;
}
