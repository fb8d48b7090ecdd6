/* Output helpers shared by every corpus program; the Rust side mirrors them. */
#ifndef C2R_RUNTIME_H
#define C2R_RUNTIME_H
#include <stdbool.h>
#include <stdint.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static void print_u8(uint8_t x) { printf("%u\n", (unsigned)x); }
static void print_u16(uint16_t x) { printf("%u\n", (unsigned)x); }
static void print_u32(uint32_t x) { printf("%u\n", (unsigned)x); }
static void print_u64(uint64_t x) { printf("%llu\n", (unsigned long long)x); }
static void print_i32(int32_t x) { printf("%d\n", (int)x); }
static void print_i64(int64_t x) { printf("%lld\n", (long long)x); }
static void print_bool(bool x) { printf("%s\n", x ? "true" : "false"); }
static void print_bytes(uint8_t *p, uint32_t len) {
    for (uint32_t i = 0; i < len; i++) printf("%02x", (unsigned)p[i]);
    printf("\n");
}

void run(void);
int main(void) {
    run();
    return 0;
}

#endif
