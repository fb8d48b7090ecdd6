#include <stdint.h>

struct s {
    uint8_t *data;
};

void run(void) {
    uint8_t x[16] = { 0 };
    uint8_t *y = x;
    struct s state = { .data = y };
    state.data[2] = 6;
    print_bytes(state.data, 16);
}
