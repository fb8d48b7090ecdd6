#include <stdint.h>

struct pair {
    uint8_t *left;
    uint8_t *right;
};

void run(void) {
    uint8_t buf[8] = { 0 };
    uint8_t *l = buf + 0;
    uint8_t *r = buf + 4;
    struct pair p = { .left = l, .right = r };
    p.left[0] = 1;
    p.right[1] = 2;
    print_u8(p.left[0]);
    print_u8(p.right[1]);
    print_u8(p.right[0]);
}
