#include <stdint.h>
#include <stdlib.h>

struct s {
    uint8_t *data;
};

void run(void) {
    uint8_t *x = malloc(16 * sizeof(uint8_t));
    struct s state = { .data = x };
    state.data[15] = 1;
    print_bytes(state.data, 16);
}
