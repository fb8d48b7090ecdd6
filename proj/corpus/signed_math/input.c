#include <stdint.h>

int32_t absdiff(int32_t a, int32_t b) {
    if (a < b) {
        return b - a;
    }
    return a - b;
}

void run(void) {
    int32_t xs[4] = { -5, 12, -30, 7 };
    int32_t acc = 0;
    for (uint32_t i = 0; i < 4; i++) {
        acc = acc + xs[i];
    }
    print_i32(acc);
    print_i32(absdiff(xs[0], xs[2]));
    int64_t big = (int64_t)acc * 1000000;
    print_i64(big);
    print_i32(-acc);
}
