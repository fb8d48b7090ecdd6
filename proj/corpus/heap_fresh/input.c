#include <stdint.h>
#include <stdlib.h>

uint8_t *make_buf(uint32_t n) {
    uint8_t *p = malloc(n * sizeof(uint8_t));
    for (uint32_t i = 0; i < n; i++) {
        p[i] = (uint8_t)(i * 3);
    }
    return p;
}

void run(void) {
    uint8_t *b = make_buf(6);
    b[0] = 42;
    print_bytes(b, 6);
}
