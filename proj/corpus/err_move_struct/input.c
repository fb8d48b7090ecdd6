#include <stdint.h>

struct s {
    uint8_t *data;
};

void f(uint8_t *p) {
    print_u8(p[0]);
}

void g(uint8_t *p) {
    print_u8(p[0]);
}

void run(void) {
    uint8_t buf[4] = { 0 };
    struct s state = { .data = buf };
    struct s state2 = state;
    f(state2.data);
    g(state.data);
}
