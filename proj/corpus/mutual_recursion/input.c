#include <stdint.h>

void even_pass(uint8_t *p, uint32_t n);

void odd_pass(uint8_t *p, uint32_t n) {
    if (n == 0) {
        return;
    }
    even_pass(p, n - 1);
}

void even_pass(uint8_t *p, uint32_t n) {
    if (n == 0) {
        return;
    }
    p[n - 1] = (uint8_t)n;
    odd_pass(p, n - 1);
}

void run(void) {
    uint8_t buf[6] = { 0 };
    even_pass(buf, 6);
    print_bytes(buf, 6);
}
