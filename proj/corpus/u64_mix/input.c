#include <stdint.h>

uint64_t mix(uint64_t h, uint64_t v) {
    h = h ^ v;
    h = h * 1099511628211;
    return h;
}

void run(void) {
    uint64_t h = 14695981039346656037;
    for (uint32_t i = 0; i < 5; i++) {
        h = mix(h, (uint64_t)i);
    }
    print_u64(h);
    uint32_t x = 0;
    x = x - 1;
    print_u32(x);
}
