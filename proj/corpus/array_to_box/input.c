#include <stdint.h>

struct holder {
    uint8_t *data;
    uint32_t len;
};

void run(void) {
    uint8_t x[16] = { 0 };
    x[3] = 7;
    struct holder h = { .data = x, .len = 16 };
    h.data[4] = 8;
    print_bytes(h.data, h.len);
}
