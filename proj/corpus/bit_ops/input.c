#include <stdint.h>

uint32_t rotl(uint32_t x, uint32_t k) {
    return (x << k) | (x >> (32 - k));
}

void run(void) {
    uint32_t v = 305419896;
    print_u32(rotl(v, 8));
    print_u32(v & 65535);
    print_u32(v ^ 4294967295);
    print_u32(~v);
    uint8_t b = 170;
    print_u8((uint8_t)(b >> 1));
    print_u32(v % 1000);
    print_u32(v / 3);
}
