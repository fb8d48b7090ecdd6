#include <stdint.h>

void run(void) {
    uint8_t a[4] = { 0 };
    int32_t i = 1;
    a[i] = 3;
}
