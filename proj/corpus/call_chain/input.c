#include <stdint.h>

uint32_t sq(uint32_t x) {
    return x * x;
}

uint32_t sum_sq(uint32_t a, uint32_t b) {
    return sq(a) + sq(b);
}

uint32_t pick(uint32_t a, uint32_t b) {
    if (a > b) {
        return a - b;
    } else {
        return b - a;
    }
}

void run(void) {
    print_u32(sum_sq(3, 4));
    print_u32(pick(sum_sq(1, 2), 9));
    print_u32(pick(2, 10));
}
