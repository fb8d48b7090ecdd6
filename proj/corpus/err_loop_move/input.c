#include <stdint.h>

struct s {
    uint8_t *data;
};

void run(void) {
    uint8_t x[4] = { 0 };
    for (uint32_t i = 0; i < 2; i++) {
        struct s st = { .data = x };
        st.data[0] = 1;
    }
}
