// Copyright 2026 The rlamalg Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/* C interface to rlamalg. All handles are opaque; every function returning
 * rla_status leaves a message for rla_last_error() on failure. Strings
 * returned through char** are owned by the caller and released with
 * rla_string_free. */

#ifndef RLAMALG_RLAMALG_H_
#define RLAMALG_RLAMALG_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RLA_API __declspec(dllexport)
#else
#define RLA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rla_status {
  RLA_OK = 0,
  RLA_ERR_PARSE = 1,
  RLA_ERR_NOT_A_LATTICE = 2,
  RLA_ERR_NOT_A_MONOID = 3,
  RLA_ERR_NOT_RESIDUATED = 4,
  RLA_ERR_INCONSISTENT_SPEC = 5,
  RLA_ERR_NO_ZERO_CONSTANT = 6,
  RLA_ERR_SIGNATURE_MISMATCH = 7,
  RLA_ERR_BUDGET_EXCEEDED = 8,
  RLA_ERR_INVALID_SPAN = 9,
  RLA_ERR_INCONSISTENT_CONSTRAINTS = 10,
  RLA_ERR_UNKNOWN_GENERATOR = 11,
  RLA_ERR_UNKNOWN_RULE = 12,
  RLA_ERR_MALFORMED_INSTANTIATION = 13,
  RLA_ERR_TOO_LARGE = 14,
  RLA_ERR_IO = 15,
  RLA_ERR_INVALID_ARGUMENT = 16,
  RLA_ERR_INTERNAL = 100
} rla_status;

typedef enum rla_outcome {
  RLA_FOUND = 0,
  RLA_NONE_UP_TO_BOUND = 1,
  RLA_BUDGET_EXHAUSTED = 2
} rla_outcome;

typedef enum rla_mode { RLA_MODE_SEEDED = 0, RLA_MODE_SQUARE = 1 } rla_mode;

typedef struct rla_algebra rla_algebra;
typedef struct rla_span rla_span;

/* Receives one serialized item; return 0 to stop. */
typedef int (*rla_text_sink)(const char* text, void* user);

RLA_API const char* rla_version(void);
RLA_API const char* rla_status_name(rla_status status);
/* Message of the last failed call on this thread; "" if none. */
RLA_API const char* rla_last_error(void);
RLA_API void rla_string_free(char* s);

/* SHA-256 over the given files, as recorded in run reports. */
RLA_API rla_status rla_digest_files(const char* const* paths, size_t count, char** digest);
/* Digest of a span file together with the algebra files it references. */
RLA_API rla_status rla_digest_span(const char* path, char** digest);
/* Run report JSON from its parts; outcome and stats are JSON texts. */
RLA_API rla_status rla_run_report(const char* command, const char* digest,
                                  const char* outcome_json, const char* stats_json,
                                  char** report);

/* Algebras. Loading completes a partial spec and requires exactly one
 * completion. */
RLA_API rla_status rla_algebra_load(const char* path, rla_algebra** out);
RLA_API rla_status rla_algebra_parse(const char* text, rla_algebra** out);
RLA_API void rla_algebra_free(rla_algebra* alg);
RLA_API int rla_algebra_size(const rla_algebra* alg);
RLA_API rla_status rla_algebra_serialize(const rla_algebra* alg, char** text);
RLA_API rla_status rla_algebra_hasse(const rla_algebra* alg, char** text);
/* Predicate by name; *value is 0 or 1. */
RLA_API rla_status rla_algebra_predicate(const rla_algebra* alg, const char* name, int* value);

/* Axioms and predicates of an algebra file as JSON. A file with a full
 * product table that violates the axioms yields RLA_OK with *passed = 0. */
RLA_API rla_status rla_check_file(const char* path, int* passed, char** report);
/* Completions of a partial spec file (at most `limit`), JSON array of
 * algebra texts. */
RLA_API rla_status rla_complete_file(const char* path, size_t limit, size_t* count,
                                     char** completions);
/* Embeddings source -> target as a JSON array of maps. */
RLA_API rla_status rla_embeddings(const rla_algebra* source, const rla_algebra* target,
                                  uint64_t budget, size_t* count, char** maps);

RLA_API rla_status rla_span_load(const char* path, rla_span** out);
RLA_API void rla_span_free(rla_span* span);

typedef struct rla_search_options {
  int max_size;
  uint64_t budget;
  int threads;
  rla_mode mode;
  const char* flags; /* comma-separated, NULL or "" for none */
} rla_search_options;

RLA_API void rla_search_options_init(rla_search_options* options);
/* Outcome JSON as written to reports (wall time excluded); *wall_ms if
 * non-NULL. */
RLA_API rla_status rla_amalgamate(const rla_span* span, const rla_search_options* options,
                                  rla_outcome* outcome, char** outcome_json, double* wall_ms);

/* One algebra text per isomorphism class, in enumeration order. A zero
 * budget selects the default. */
RLA_API rla_status rla_enumerate(int size, const char* flags, uint64_t budget,
                                 rla_text_sink sink, void* user, size_t* count);

typedef struct rla_hunt_options {
  int apex_max;
  int leg_max;
  int search_bound;
  uint64_t budget;
  int threads;
  int64_t resume_after;
  const char* flags;
} rla_hunt_options;

RLA_API void rla_hunt_options_init(rla_hunt_options* options);
/* One compact JSON record per examined span. */
RLA_API rla_status rla_span_hunt(const rla_hunt_options* options, rla_text_sink sink,
                                 void* user);

/* Checks a certificate file. `span_path` NULL uses the certificate's own
 * span reference; `flags` NULL uses the certificate's flags. *valid is 0 or
 * 1; *result is JSON with the failing step and reason. */
RLA_API rla_status rla_certify(const char* cert_path, const char* span_path,
                               const char* flags, int* valid, char** result);

/* Runs the fixture gate over a directory holding manifest.json. */
RLA_API rla_status rla_fixtures_verify(const char* dir, int search, int threads,
                                       int* passed, char** report);

#ifdef __cplusplus
}
#endif

#endif /* RLAMALG_RLAMALG_H_ */
