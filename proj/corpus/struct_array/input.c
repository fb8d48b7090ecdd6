#include <stdint.h>

struct cell {
    uint32_t key;
    uint32_t val;
};

uint32_t lookup(struct cell *cs, uint32_t n, uint32_t key) {
    for (uint32_t i = 0; i < n; i++) {
        if (cs[i].key == key) {
            return cs[i].val;
        }
    }
    return 0;
}

void run(void) {
    struct cell table[3];
    for (uint32_t i = 0; i < 3; i++) {
        table[i].key = i * i;
        table[i].val = i * 10;
    }
    print_u32(lookup(table, 3, 1));
    table[2].val = 21;
    print_u32(lookup(table, 3, 4));
    print_u32(lookup(table, 3, 2));
}
