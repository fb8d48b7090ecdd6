#include <stdint.h>

void run(void) {
    uint32_t xs[10] = { 1, 2, 3, 4, 5 };
    uint32_t total = 0;
    for (uint32_t i = 0; i < 10; i++) {
        total += xs[i];
    }
    print_u32(total);
    xs[9] = 100;
    print_u32(xs[9] + xs[0]);
}
