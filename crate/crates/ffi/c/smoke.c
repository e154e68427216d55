#include <stdio.h>
#include <string.h>

#include "latroid.h"

int main(void) {
    const int64_t gens[] = {1, 2};
    LatCode *code = NULL;
    if (lat_code_new("Z_4", 2, gens, 1, &code) != LAT_STATUS_OK) {
        fprintf(stderr, "lat_code_new: %s\n", lat_last_error());
        return 1;
    }
    uint32_t w[4];
    size_t len = 0;
    if (lat_code_dbar(code, w, 4, &len) != LAT_STATUS_OK || len != 2 || w[0] != 1 || w[1] != 3) {
        fprintf(stderr, "unexpected weights\n");
        return 1;
    }
    LatLatroid *lt = NULL;
    if (lat_code_chain_latroid(code, &lt) != LAT_STATUS_OK || lat_latroid_validate(lt) != LAT_STATUS_OK) {
        fprintf(stderr, "latroid: %s\n", lat_last_error());
        return 1;
    }
    char *json = NULL;
    LatStatus st = lat_run_command("ring = Z_4\nn = 1\n", "tutte", 0, 65536, &json);
    if (st != LAT_STATUS_OK || strstr(json, "\"y^2\"") == NULL) {
        fprintf(stderr, "tutte: %d\n", (int)st);
        return 1;
    }
    printf("dbar = [%u, %u]\n", w[0], w[1]);
    lat_string_free(json);
    lat_latroid_free(lt);
    lat_code_free(code);
    return 0;
}
