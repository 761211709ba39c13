#include <stdio.h>
#include <string.h>
#include "divgraph.h"

int main(void) {
    DgGroup *g = NULL;
    size_t n = 0;
    char *fp = NULL;
    DgDivisionGraph *dg = NULL;
    if (dg_group_from_catalog("quaternion8", &g) != DG_STATUS_OK) return 1;
    if (dg_group_division_count(g, &n) != DG_STATUS_OK || n != 5) return 2;
    if (dg_division_graph_new(g, &dg) != DG_STATUS_OK) return 3;
    if (dg_division_graph_fingerprint(dg, 100000, &fp) != DG_STATUS_OK || strlen(fp) != 64) return 4;
    printf("%s\n", fp);
    dg_string_free(fp);
    dg_division_graph_free(dg);
    dg_group_free(g);
    if (dg_group_from_catalog("nonsense", &g) != DG_STATUS_INVALID_GROUP) return 5;
    if (strstr(dg_last_error_message(), "nonsense") == NULL) return 6;
    return 0;
}
