#include <stdio.h>
#include "triad.h"

int main(void) {
    TriadGraph *g = NULL;
    if (triad_realize(3, 4, 5, &g) != TRIAD_STATUS_OK) {
        fprintf(stderr, "%s\n", triad_last_error_message());
        return 1;
    }
    TriadInvariants inv;
    triad_analyze(g, &inv);
    char *g6 = NULL;
    triad_graph_to_graph6(g, &g6);
    printf("%s n=%zu chi=%zu gamma=%zu psi=%zu\n", g6, inv.n, inv.chi, inv.gamma, inv.psi);
    triad_string_free(g6);
    triad_graph_free(g);
    return 0;
}
