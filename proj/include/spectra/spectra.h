// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

/* C interface to the spectra library.
 *
 * Rings are opaque handles. Results come back as JSON text in buffers
 * allocated by the library; release them with spectra_string_free. Every
 * call returns a status code, and on failure spectra_last_error() gives a
 * message for the calling thread. */

#ifndef SPECTRA_SPECTRA_H
#define SPECTRA_SPECTRA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SPECTRA_API __declspec(dllexport)
#else
#define SPECTRA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum spectra_status {
  SPECTRA_OK = 0,
  SPECTRA_INVALID_ARGUMENT = 1,
  SPECTRA_BOUND_EXCEEDED = 2,
  SPECTRA_NOT_IDEAL = 3,
  SPECTRA_NOT_PRIME = 4,
  SPECTRA_REDUCIBLE = 5,
  SPECTRA_PARSE = 6,
  SPECTRA_SEMANTIC = 7,
  SPECTRA_IO = 8,
  SPECTRA_UNKNOWN_THEOREM = 9,
  SPECTRA_INTERNAL = 100
} spectra_status;

typedef struct spectra_ring spectra_ring;

SPECTRA_API const char* spectra_version(void);
/* Message of the last failed call on this thread, "" if none. */
SPECTRA_API const char* spectra_last_error(void);
SPECTRA_API void spectra_string_free(char* s);

SPECTRA_API spectra_status spectra_ring_parse(const char* expr, spectra_ring** out);
SPECTRA_API void spectra_ring_free(spectra_ring* r);
/* Canonical expression; owned by the handle. */
SPECTRA_API const char* spectra_ring_expr(const spectra_ring* r);
/* 1 when the ring has a finite table (order <= 256). */
SPECTRA_API int spectra_ring_is_finite(const spectra_ring* r);

/* Order, units, idempotents, nilradical, Jacobson radical and the
 * absolute flatness verdict with its witness. */
SPECTRA_API spectra_status spectra_ring_info_json(const spectra_ring* r, char** out);

/* topology is "zariski", "flat" or "patch". Finite rings: points and the
 * open sets. Other rings: a spectrum descriptor with sampled primes. */
SPECTRA_API spectra_status spectra_spec_json(const spectra_ring* r, const char* topology,
                                             char** out);

/* Pointwise localization at a comma separated list of element literals,
 * or at every element when elements is "all". Finite rings only. */
SPECTRA_API spectra_status spectra_localize_json(const spectra_ring* r, const char* elements,
                                                 char** out);

/* Closure of a set of primes written "(g1);(g2);..." in a topology. */
SPECTRA_API spectra_status spectra_closure_json(const spectra_ring* r, const char* primes,
                                                const char* topology, char** out);

/* Runs the suite. theorem is an id or "all"; config_json may be NULL for
 * the defaults; has_seed selects seed over the config's sample_seed. The
 * report has one verdict per line. */
SPECTRA_API spectra_status spectra_verify(const char* theorem, const char* config_json,
                                          uint64_t seed, int has_seed, unsigned jobs,
                                          char** report, int* all_agree);

/* Validates every line of a report and replays every certificate. The
 * summary is a JSON object; ok is 1 iff nothing failed. */
SPECTRA_API spectra_status spectra_recheck(const char* report, char** summary, int* ok);

/* Replays one certificate given as JSON. ok receives the verdict and
 * reason (may be NULL) the first failure. */
SPECTRA_API spectra_status spectra_verify_certificate(const char* certificate_json, int* ok,
                                                      char** reason);

/* Comma separated theorem ids in report order; static storage. */
SPECTRA_API const char* spectra_theorem_ids(void);

/* The default corpus configuration as JSON. */
SPECTRA_API spectra_status spectra_default_config_json(char** out);

#ifdef __cplusplus
}
#endif

#endif /* SPECTRA_SPECTRA_H */
