#include <stdint.h>
#include <stdlib.h>

uint32_t *alloc_words(uint32_t n) {
    uint32_t *w = malloc(n * sizeof(uint32_t));
    return w;
}

uint32_t *alloc_squares(uint32_t n) {
    uint32_t *w = alloc_words(n);
    for (uint32_t i = 0; i < n; i++) {
        w[i] = i * i;
    }
    return w;
}

void run(void) {
    uint32_t *sq = alloc_squares(5);
    print_u32(sq[4] + sq[3]);
}
