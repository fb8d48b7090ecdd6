#include <stdint.h>
#include <string.h>

void run(void) {
    uint8_t src[8] = { 1, 2, 3, 4, 5, 6, 7, 8 };
    uint8_t dst[8] = { 0 };
    memset(dst, 9, 8);
    memcpy(dst, src + 2, 4);
    print_bytes(dst, 8);
    uint32_t w[4] = { 0 };
    memset(w, 0, 4 * sizeof(uint32_t));
    w[1] = 77;
    print_u32(w[1] + w[0]);
}
