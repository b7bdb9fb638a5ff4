#ifndef GRADMINE_H
#define GRADMINE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GM_API __declspec(dllexport)
#else
#define GM_API __attribute__((visibility("default")))
#endif

/* Error codes returned by every fallible call. On failure the thread-local
 * message from gm_last_error() describes what went wrong. */
enum {
    GM_OK = 0,
    GM_ERR_INVALID_ARGUMENT = 1,
    GM_ERR_PARSE = 2,
    GM_ERR_IO = 3,
    GM_ERR_INTERNAL = 4
};

GM_API const char* gm_version(void);
GM_API const char* gm_last_error(void);

/* Opaque handles. Datasets are immutable once loaded; results are owned by
 * the caller and released with gm_result_free. */
typedef struct gm_dataset gm_dataset;
typedef struct gm_result gm_result;

typedef struct gm_csv_options {
    char delimiter;         /* 0 means ',' */
    int no_header;          /* nonzero: first row is data, columns named c1..cN */
    const char* time_column; /* name or 0-based index; NULL or "" auto-detects */
} gm_csv_options;

/* opts may be NULL for defaults. *out is set only on GM_OK. */
GM_API int gm_dataset_load_csv_file(const char* path, const gm_csv_options* opts,
                                    gm_dataset** out);
GM_API int gm_dataset_load_csv_text(const char* text, const gm_csv_options* opts,
                                    gm_dataset** out);
GM_API void gm_dataset_free(gm_dataset* ds);

GM_API size_t gm_dataset_tuple_count(const gm_dataset* ds);
GM_API size_t gm_dataset_attribute_count(const gm_dataset* ds);
/* Borrowed pointer, valid while the dataset lives. NULL if out of range. */
GM_API const char* gm_dataset_attribute_name(const gm_dataset* ds, size_t index);
/* 1 when the dataset carries a time column (gm_cross and the temporal miners
 * need one), else 0. */
GM_API int gm_dataset_has_time(const gm_dataset* ds);

/* Serialized CSV; free with gm_string_free. */
GM_API int gm_dataset_to_csv(const gm_dataset* ds, char** out);
GM_API void gm_string_free(char* text);

typedef struct gm_gp_params {
    double min_sup;     /* (0,1]; 0 means 0.5 */
    double evaporation; /* (0,1); 0 means 0.5; ant-guided pair search only */
    uint64_t seed;
    int threads;        /* 0 means all available cores */
} gm_gp_params;

/* algorithm: "graank", "paraminer", "aco-graank", or "aco-paraminer". */
GM_API int gm_mine_gp(const gm_dataset* ds, const char* algorithm,
                      const gm_gp_params* params, gm_result** out);

typedef struct gm_tgp_params {
    double min_sup; /* 0 means 0.5 */
    double min_rep; /* 0 means 0.5 */
    uint64_t seed;
    int threads;
} gm_tgp_params;

/* engine: "exhaustive" or "aco". ref_attribute is an attribute name. */
GM_API int gm_mine_tgp(const gm_dataset* ds, const char* ref_attribute, const char* engine,
                       const gm_tgp_params* params, gm_result** out);

typedef struct gm_tgep_params {
    double min_sup;    /* 0 means 0.5 */
    double min_rep;    /* 0 means 0.5 */
    double min_growth; /* 0 means 1.0; matrix method only */
    long base_step;    /* 0 means 1; matrix method only */
    uint64_t seed;
    int threads;
} gm_tgep_params;

/* method: "border" or "trenc". */
GM_API int gm_mine_tgep(const gm_dataset* ds, const char* ref_attribute, const char* method,
                        const gm_tgep_params* params, gm_result** out);

/* Fuzzy temporal crossing of two or more timestamped datasets. */
GM_API int gm_cross(const gm_dataset* const* sources, size_t count, gm_result** out);

GM_API size_t gm_result_pattern_count(const gm_result* result);
/* {"patterns": [...], "stats": {...}} or {"crossed": {...}, "stats": {...}};
 * free with gm_string_free. */
GM_API int gm_result_to_json(const gm_result* result, char** out);
/* Tabular view: pattern rows, or the crossed dataset itself. */
GM_API int gm_result_to_csv(const gm_result* result, char** out);
GM_API void gm_result_free(gm_result* result);

#ifdef __cplusplus
}
#endif

#endif /* GRADMINE_H */
