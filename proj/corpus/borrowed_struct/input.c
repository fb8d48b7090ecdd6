#include <stdint.h>

struct view {
    uint8_t *bytes;
    uint32_t len;
};

uint32_t total(struct view v) {
    uint32_t s = 0;
    for (uint32_t i = 0; i < v.len; i++) {
        s += (uint32_t)v.bytes[i];
    }
    return s;
}

void run(void) {
    uint8_t data[6] = { 5, 6, 7, 8, 9, 10 };
    struct view whole = { .bytes = data, .len = 6 };
    struct view tail = { .bytes = data + 3, .len = 3 };
    print_u32(total(whole));
    print_u32(total(tail));
    print_u32(total(whole) - total(tail));
}
