#include <stdint.h>
#include <stdlib.h>

struct buffer {
    uint8_t *data;
    uint32_t cap;
};

struct buffer make(uint32_t cap) {
    uint8_t *d = malloc(cap * sizeof(uint8_t));
    struct buffer b = { .data = d, .cap = cap };
    return b;
}

void run(void) {
    struct buffer b = make(4);
    b.data[0] = 1;
    b.data[3] = 4;
    print_bytes(b.data, b.cap);
    print_u32(b.cap);
}
