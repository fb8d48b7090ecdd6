#include <stdint.h>

void set(uint32_t *out, uint32_t v) {
    out[0] = v;
}

uint32_t get(uint32_t *in) {
    return in[0];
}

void run(void) {
    uint32_t x = 5;
    print_u32(get(&x));
    uint32_t arr[3] = { 7, 8, 9 };
    set(&arr[1], 50);
    print_u32(arr[1]);
    print_u32(get(&arr[2]));
}
