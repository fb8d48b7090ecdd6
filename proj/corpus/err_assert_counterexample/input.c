#include <stdint.h>

struct s {
    uint8_t *data;
};

/* x is moved into the owned struct, so reading it afterwards is rejected. */
void run(void) {
    uint8_t x[1] = { 0 };
    struct s st = { .data = x };
    st.data[0] = 1;
    print_u8(x[0]);
}
