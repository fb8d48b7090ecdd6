#include <stdint.h>

uint32_t find(uint8_t *p, uint32_t n, uint8_t v) {
    uint32_t i = 0;
    while (i < n) {
        if (p[i] == v) {
            break;
        }
        i++;
    }
    return i;
}

void run(void) {
    uint8_t hay[6] = { 4, 8, 15, 16, 23, 42 };
    print_u32(find(hay, 6, 16));
    print_u32(find(hay, 6, 99));
}
