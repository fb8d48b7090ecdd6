#include <stdint.h>

uint32_t half(uint32_t x) {
    if (x > 2) {
        return x / 2;
    }
}

void run(void) {
    print_u32(half(8));
}
