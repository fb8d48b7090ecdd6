#include <stdint.h>

struct owned_copy {
    uint8_t *bytes;
};

void run(void) {
    uint8_t x[8] = { 1, 2, 3, 4, 5, 6, 7, 8 };
    uint8_t *y = x + 2;
    struct owned_copy c = { .bytes = y };
    c.bytes[0] = 30;
    print_bytes(c.bytes, 6);
}
