/* geodns -- location-aware DNS service discovery
 * Copyright (c) 2026 the geodns authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C API of the geodns shared library. All functions return a status code;
 * GEODNS_OK is 0. On failure, geodns_last_error() describes what went
 * wrong (thread-local). Strings returned through char** out-parameters are
 * heap-allocated and must be released with geodns_string_free().
 */

#ifndef GEODNS_H
#define GEODNS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum geodns_status {
    GEODNS_OK = 0,
    GEODNS_ERR_CONFIG = 1,           /* unreadable/unparseable config */
    GEODNS_ERR_INVALID_TOPOLOGY = 2, /* constraint violations */
    GEODNS_ERR_BIND = 3,
    GEODNS_ERR_TIMEOUT = 4,
    GEODNS_ERR_DISCOVERY = 5, /* empty/incomplete announcement, no fallback */
    GEODNS_ERR_RANGE = 6,     /* bad argument values */
    GEODNS_ERR_INTERNAL = 7,
    GEODNS_ERR_INSUFFICIENT_DATA = 8,
    GEODNS_ERR_IO = 9,
} geodns_status;

typedef struct geodns_topology geodns_topology;
typedef struct geodns_server geodns_server;

const char* geodns_last_error(void);
void geodns_string_free(char* s);

/* ---- topology ------------------------------------------------------- */

/* Parse and validate a config JSON document. */
geodns_status geodns_topology_load(const char* json_text, geodns_topology** out);

/* Parse only; *violations_out gets one violation per line (empty string
 * when valid). The topology is returned even when invalid. */
geodns_status geodns_topology_check(const char* json_text, geodns_topology** out,
                                    char** violations_out);

geodns_status geodns_topology_synth(int n_areas, double extent_km2, double radius_m,
                                    uint64_t seed, geodns_topology** out);

geodns_status geodns_topology_zone(const geodns_topology* t, char** zone_out);
geodns_status geodns_topology_config(const geodns_topology* t, char** json_out);

/* Local area lookup, no network. *json_out:
 * {"matched":bool,"area_id":...,"edge":...} */
geodns_status geodns_locate(const geodns_topology* t, double lat_deg, double lon_deg,
                            double height_m, char** json_out);

void geodns_topology_free(geodns_topology* t);

/* ---- authoritative server ------------------------------------------- */

/* port 0 picks an ephemeral port; log_requests writes one line per request
 * to stderr. */
geodns_status geodns_server_start(const geodns_topology* t, const char* bind_host,
                                  uint16_t port, int include_loc, int log_requests,
                                  geodns_server** out);
uint16_t geodns_server_port(const geodns_server* s);
void geodns_server_stop(geodns_server* s);

/* ---- discovery ------------------------------------------------------ */

/* One query round trip plus the client-side area scan. *json_out:
 * {"selection":"edge"|"cloud","hostname":...,"address":...,
 *  "matched_area":int|null,"t_net_ms":...,"t_area_ms":...,"t_q_ms":...} */
geodns_status geodns_discover(const char* service, const char* server_host,
                              uint16_t server_port, double lat_deg, double lon_deg,
                              double height_m, int timeout_ms, char** json_out);

/* ---- benchmarks ----------------------------------------------------- */

/* lengths_csv: comma-separated list lengths, NULL/empty for the default
 * 25..400 sweep. Writes summary.csv and raw sample files under run_dir
 * (skipped when run_dir is NULL); *summary_out gets the summary CSV. */
geodns_status geodns_bench_area(const char* lengths_csv, int iterations, uint64_t seed,
                                const char* run_dir, char** summary_out);

/* Hermetic pair: local server with and without LOC records. */
geodns_status geodns_bench_e2e_hermetic(const geodns_topology* t, int n, int delay_ms,
                                        const char* run_dir, char** summary_out);

/* servers: comma-separated "label=host:port" entries. */
geodns_status geodns_bench_e2e(const char* servers, const char* service, int n,
                               int delay_ms, int timeout_ms, const char* run_dir,
                               char** summary_out);

#ifdef __cplusplus
}
#endif

#endif /* GEODNS_H */
