#include <stdint.h>
#include <stdlib.h>

void fill_pattern(uint8_t *dst, uint32_t n) {
    for (uint32_t i = 0; i < n; i++) {
        dst[i] = (uint8_t)(255 - i);
    }
}

uint32_t checksum(uint8_t *p, uint32_t n) {
    uint32_t s = 0;
    for (uint32_t i = 0; i < n; i++) {
        s = s * 31 + (uint32_t)p[i];
    }
    return s;
}

void run(void) {
    uint8_t *buf = malloc(10 * sizeof(uint8_t));
    fill_pattern(buf, 10);
    print_u32(checksum(buf, 10));
    print_bytes(buf, 10);
}
