#include <stdint.h>

struct state {
    uint32_t *regs;
    uint32_t pc;
};

void step(struct state *s) {
    s->regs[s->pc] = s->pc * 10;
    s->pc = s->pc + 1;
}

void run(void) {
    uint32_t regs[4] = { 0 };
    struct state st = { .regs = regs, .pc = 0 };
    step(&st);
    step(&st);
    print_u32(st.regs[0]);
    print_u32(st.regs[1]);
    print_u32(st.pc);
}
