#include <stdint.h>
#include <stdlib.h>

void run(void) {
    uint16_t *v = calloc(5, sizeof(uint16_t));
    v[2] = 700;
    uint32_t s = 0;
    for (uint32_t i = 0; i < 5; i++) {
        s += (uint32_t)v[i];
    }
    print_u32(s);
    print_u16(v[2]);
}
