#include <stdint.h>

void run(void) {
    uint8_t a[12];
    for (uint32_t i = 0; i < 12; i++) {
        a[i] = 7;
    }
    uint32_t t = 0;
    for (uint32_t i = 0; i < 12; i++) {
        t += (uint32_t)a[i];
    }
    print_u32(t);
}
