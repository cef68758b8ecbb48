#include <stdio.h>
#include "padic_solve.h"

int main(void) {
    PadicInstance *inst = NULL;
    if (padic_instance_new(3, 1, 11, 11, 2, &inst) != PADIC_STATUS_OK) {
        fprintf(stderr, "new: %s\n", padic_last_error());
        return 1;
    }
    PadicCountReport report;
    if (padic_count(inst, &report) != PADIC_STATUS_OK) {
        return 1;
    }
    PadicSolutions sols;
    if (padic_enumerate(inst, &sols) != PADIC_STATUS_OK) {
        return 1;
    }
    printf("m=%llu total=%llu wieferich=%d listed=%zu first=%llu\n",
           (unsigned long long)padic_instance_order(inst),
           (unsigned long long)report.total, report.wieferich, sols.len,
           (unsigned long long)sols.data[0]);
    padic_solutions_free(&sols);
    padic_instance_free(inst);

    PadicInstance *bad = NULL;
    PadicStatus st = padic_instance_new(7, 1, 1, 7, 2, &bad);
    printf("status=%d error=%s\n", (int)st, padic_last_error());
    return 0;
}
