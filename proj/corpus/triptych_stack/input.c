#include <stdint.h>

struct s {
    uint8_t *data;
};

void run(void) {
    uint8_t x[16] = { 0 };
    struct s state = { .data = x };
    state.data[0] = 5;
    print_bytes(state.data, 16);
}
