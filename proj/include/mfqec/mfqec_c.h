/*
 * Copyright 2026 The mfqec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * Stable C interface of libmfqec.
 *
 * Every fallible call returns an mfqec_status. On failure the message is
 * available from mfqec_last_error() on the calling thread until the next
 * failing call. Handles are opaque and owned by the caller; release them
 * with the matching *_free function (NULL is accepted). Handles are
 * immutable after construction and may be shared across threads.
 */

#ifndef MFQEC_C_H
#define MFQEC_C_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(MFQEC_BUILDING_LIBRARY)
#define MFQEC_API __declspec(dllexport)
#else
#define MFQEC_API __declspec(dllimport)
#endif
#else
#define MFQEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mfqec_status {
    MFQEC_OK = 0,
    MFQEC_ERR_INVALID_ARGUMENT = 1,
    MFQEC_ERR_OUT_OF_RANGE = 2,
    MFQEC_ERR_UNSUPPORTED = 3,
    MFQEC_ERR_CAPACITY = 4,
    MFQEC_ERR_CONFIG = 5,
    MFQEC_ERR_IO = 6,
    MFQEC_ERR_INTERNAL = 7
} mfqec_status;

typedef enum mfqec_architecture {
    MFQEC_ARCH_SMSC = 0,
    MFQEC_ARCH_MFEC2D = 1,
    MFQEC_ARCH_MFEC3D = 2
} mfqec_architecture;

typedef enum mfqec_scheme {
    MFQEC_SCHEME_MAJORITY_TOFFOLI = 0,
    MFQEC_SCHEME_PROJECTOR_C3NOT = 1
} mfqec_scheme;

MFQEC_API const char *mfqec_version(void);
MFQEC_API const char *mfqec_status_name(mfqec_status status);
/* Message of the last failing call on this thread ("" if none). */
MFQEC_API const char *mfqec_last_error(void);

/* ---- Owned text -------------------------------------------------------- */

typedef struct mfqec_text mfqec_text;

MFQEC_API const char *mfqec_text_data(const mfqec_text *text);
MFQEC_API size_t mfqec_text_size(const mfqec_text *text);
MFQEC_API void mfqec_text_free(mfqec_text *text);

/* ---- Noise model ------------------------------------------------------- */

/* Times in seconds. r_decoh_target <= 0 means "use t_m". */
typedef struct mfqec_hardware {
    double t1;
    double t2;
    double t_1q;
    double t_2q;
    double t_idle_op;
    double t_m;
    double p_1q_impl;
    double p_2q_impl;
    double p_meas_impl;
    double r_decoh_target;
} mfqec_hardware;

typedef struct mfqec_rates {
    double p_1q;
    double p_2q;
    double p_idle_op;
    double p_meas;
    double r_decoh;
} mfqec_rates;

MFQEC_API void mfqec_hardware_default(mfqec_hardware *out);
MFQEC_API mfqec_status mfqec_p_decoh(double t, double t1, double t2, double *out);
MFQEC_API mfqec_status mfqec_derive_rates(const mfqec_hardware *hw, mfqec_rates *out);
MFQEC_API mfqec_status mfqec_t_m_for_ratio(const mfqec_hardware *hw, double ratio, double *out);
/* Coherence times divided by s, t_m re-solved for ratio r. */
MFQEC_API mfqec_status mfqec_rates_for_point(const mfqec_hardware *hw, double r, double s, mfqec_rates *out);

/* ---- Configuration ----------------------------------------------------- */

typedef struct mfqec_config mfqec_config;

MFQEC_API mfqec_status mfqec_config_default(mfqec_config **out);
MFQEC_API mfqec_status mfqec_config_parse(const char *yaml_text, mfqec_config **out);
MFQEC_API mfqec_status mfqec_config_load(const char *path, mfqec_config **out);
MFQEC_API void mfqec_config_free(mfqec_config *cfg);
/* "rdecoh", "noise-scale" or "distance". */
MFQEC_API mfqec_status mfqec_config_set_sweep_kind(mfqec_config *cfg, const char *kind);
MFQEC_API mfqec_status mfqec_config_set_workers(mfqec_config *cfg, unsigned workers);
MFQEC_API mfqec_status mfqec_config_set_n_shots(mfqec_config *cfg, uint64_t n_shots);
MFQEC_API mfqec_status mfqec_config_set_seed(mfqec_config *cfg, uint64_t seed);
MFQEC_API mfqec_status mfqec_config_set_distances(mfqec_config *cfg, const uint32_t *d, size_t n);
MFQEC_API uint64_t mfqec_config_seed(const mfqec_config *cfg);
MFQEC_API uint64_t mfqec_config_n_shots(const mfqec_config *cfg);
MFQEC_API double mfqec_config_alpha(const mfqec_config *cfg);
MFQEC_API int mfqec_config_double_meas_flip(const mfqec_config *cfg);
/* Hardware with noise_scale applied and t_m resolved. */
MFQEC_API mfqec_status mfqec_config_hardware(const mfqec_config *cfg, mfqec_hardware *out);

/* ---- Surface code ------------------------------------------------------ */

typedef struct mfqec_layout mfqec_layout;

MFQEC_API mfqec_status mfqec_layout_new(uint32_t distance, mfqec_layout **out);
MFQEC_API void mfqec_layout_free(mfqec_layout *layout);
MFQEC_API uint32_t mfqec_layout_num_data(const mfqec_layout *layout);
MFQEC_API uint32_t mfqec_layout_num_qubits(const mfqec_layout *layout);
/* One "<name> <pauli>" line per generator and logical, "+Z1*Z2*Z5*Z6" form. */
MFQEC_API mfqec_status mfqec_layout_dump(const mfqec_layout *layout, mfqec_text **out);

/* One-round memory experiment with the circuit noise model. basis 'Z' or 'X'. */
typedef struct mfqec_memory mfqec_memory;
typedef struct mfqec_graph mfqec_graph;

typedef struct mfqec_estimate {
    double p_l;
    double ci_low;
    double ci_high;
    uint64_t n_shots;
    uint64_t n_failures;
} mfqec_estimate;

MFQEC_API mfqec_status mfqec_memory_new(uint32_t distance, char basis, const mfqec_rates *rates,
                                        int double_meas_flip, mfqec_memory **out);
MFQEC_API void mfqec_memory_free(mfqec_memory *mem);
MFQEC_API uint32_t mfqec_memory_num_detectors(const mfqec_memory *mem);
MFQEC_API mfqec_status mfqec_memory_circuit_text(const mfqec_memory *mem, mfqec_text **out);
/* Merged detector error model, one fault class per line. */
MFQEC_API mfqec_status mfqec_memory_dem_text(const mfqec_memory *mem, mfqec_text **out);
MFQEC_API mfqec_status mfqec_memory_graph(const mfqec_memory *mem, mfqec_graph **out);
/* detectors: n_shots * num_detectors bytes (shot-major); logical: n_shots bytes. */
MFQEC_API mfqec_status mfqec_memory_sample(const mfqec_memory *mem, uint64_t n_shots, uint64_t seed, unsigned workers,
                                           uint8_t *detectors, uint8_t *logical);
/* Logical error of matching decoding over n_shots sampled shots. */
MFQEC_API mfqec_status mfqec_memory_estimate(const mfqec_memory *mem, uint64_t n_shots, uint64_t seed,
                                             unsigned workers, mfqec_estimate *out);

/* ---- Matching decoder -------------------------------------------------- */

MFQEC_API mfqec_status mfqec_graph_parse(const char *text, mfqec_graph **out);
MFQEC_API mfqec_status mfqec_graph_serialize(const mfqec_graph *graph, mfqec_text **out);
MFQEC_API void mfqec_graph_free(mfqec_graph *graph);
MFQEC_API uint32_t mfqec_graph_num_detectors(const mfqec_graph *graph);
/* n must equal the detector count. weight may be NULL. */
MFQEC_API mfqec_status mfqec_graph_decode(const mfqec_graph *graph, const uint8_t *detectors, size_t n,
                                          int *logical_flip, int64_t *weight);

/* ---- MFEC resource and error model ------------------------------------- */

typedef struct mfqec_profile {
    int architecture;
    uint32_t distance;
    int64_t n_qubits;
    int64_t n_cnot_per_cycle;
    int64_t cnot_depth_per_cycle;
    int64_t round_depth;
    int64_t n_gate_locations;
    int64_t n_idle_locations;
    double alpha;
} mfqec_profile;

typedef struct mfqec_x_round {
    int64_t transversal;
    int64_t extraction;
    int64_t remap;
    int64_t correction;
    int64_t total;
} mfqec_x_round;

MFQEC_API mfqec_status mfqec_profile_build(int architecture, uint32_t distance, double alpha, mfqec_profile *out);
MFQEC_API mfqec_status mfqec_x_round_budget(uint32_t distance, mfqec_x_round *out);
MFQEC_API void mfqec_gadget_cnot_counts(int *toffoli, int *c3not, int *cccz);
MFQEC_API mfqec_status mfqec_mfec_estimate(const mfqec_profile *profile, const mfqec_rates *rates, uint64_t n_shots,
                                           uint64_t seed, mfqec_estimate *out);
MFQEC_API mfqec_status mfqec_mfec_analytic(const mfqec_profile *profile, const mfqec_rates *rates, double *out);

/* ---- Bit-flip gadget --------------------------------------------------- */

typedef struct mfqec_ft_report {
    int scheme;
    uint64_t n_locations;
    uint64_t n_cases;
    uint64_t n_violations;
    uint64_t n_violating_locations;
    uint64_t cnot_equivalent;
} mfqec_ft_report;

/* details (optional): one line per violating (location, Pauli, input). */
MFQEC_API mfqec_status mfqec_bitflip_ft_check(int scheme, mfqec_ft_report *out, mfqec_text **details);
/* csv: "p,p_l,ci_low,ci_high,n_shots,n_failures". slope may be NULL. */
MFQEC_API mfqec_status mfqec_bitflip_scaling(int scheme, const double *p, size_t n_p, uint64_t n_shots,
                                             uint64_t seed, unsigned workers, mfqec_text **csv, double *slope);
MFQEC_API mfqec_status mfqec_bitflip_malignant_weight(int scheme, double *out);

/* ---- Experiments ------------------------------------------------------- */

/* audit may be NULL. */
MFQEC_API mfqec_status mfqec_sweep_run(const mfqec_config *cfg, mfqec_text **csv, mfqec_text **audit);
MFQEC_API mfqec_status mfqec_breakeven_run(const mfqec_config *cfg, mfqec_text **csv);

#ifdef __cplusplus
}
#endif

#endif
