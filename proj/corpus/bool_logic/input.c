#include <stdbool.h>
#include <stdint.h>

bool in_range(uint32_t v, uint32_t lo, uint32_t hi) {
    return v >= lo && v < hi;
}

void run(void) {
    bool a = in_range(5, 1, 10);
    bool b = in_range(10, 1, 10);
    print_bool(a);
    print_bool(b);
    print_bool(a && !b);
    print_bool(a || b);
    uint32_t n = 0;
    for (uint32_t i = 0; i < 20; i++) {
        if (in_range(i, 3, 8) || i == 15) {
            n++;
        }
    }
    print_u32(n);
}
