#ifndef TRIAD_H
#define TRIAD_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Graph families accepted by `triad_construct`.
//
// Parameters `a` and `b`:
// - `BASIC_BIPARTITE`: a = k
// - `G_STAR`: a = g, b = h
// - `REDUCED`: a = t
// - `EXTENDED`: a = ell
// - `L1`, `L2`: a = h
// - `COMPLETE`: a = order
typedef enum TriadFamily {
  TRIAD_FAMILY_BASIC_BIPARTITE = 0,
  TRIAD_FAMILY_G_STAR = 1,
  TRIAD_FAMILY_REDUCED = 2,
  TRIAD_FAMILY_EXTENDED = 3,
  TRIAD_FAMILY_L1 = 4,
  TRIAD_FAMILY_L2 = 5,
  TRIAD_FAMILY_COMPLETE = 6,
} TriadFamily;

// Result of every fallible call.
typedef enum TriadStatus {
  TRIAD_STATUS_OK = 0,
  TRIAD_STATUS_NULL_POINTER = 1,
  TRIAD_STATUS_INVALID_ARGUMENT = 2,
  TRIAD_STATUS_CAPACITY = 3,
  TRIAD_STATUS_PARSE = 4,
  TRIAD_STATUS_DOMAIN = 5,
  TRIAD_STATUS_UTF8 = 6,
  TRIAD_STATUS_PANIC = 7,
} TriadStatus;

// Opaque graph handle.
typedef struct TriadGraph TriadGraph;

// The invariant chain of one graph.
typedef struct TriadInvariants {
  size_t n;
  size_t m;
  size_t omega;
  size_t chi;
  size_t gamma;
  size_t psi;
} TriadInvariants;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. The pointer
// stays valid until the next call into this library on the same thread.
const char *triad_last_error_message(void);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void triad_string_free(char *s);

// Releases a graph handle. NULL is ignored.
//
// # Safety
// `g` must come from this library and not have been freed.
void triad_graph_free(struct TriadGraph *g);

// Parses a graph6 string.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum TriadStatus triad_graph_from_graph6(const char *text, struct TriadGraph **out);

// Builds a graph from `edge_count` pairs stored flat in `edges`.
//
// # Safety
// `edges` must hold `2 * edge_count` values; `out` must be writable.
enum TriadStatus triad_graph_from_edges(size_t n,
                                        const size_t *edges,
                                        size_t edge_count,
                                        struct TriadGraph **out);

// Writes the graph6 encoding of `g`.
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum TriadStatus triad_graph_to_graph6(const struct TriadGraph *g, char **out);

// Vertex count of `g`, or 0 for NULL.
//
// # Safety
// `g` must be NULL or a live handle.
size_t triad_graph_order(const struct TriadGraph *g);

// Edge count of `g`, or 0 for NULL.
//
// # Safety
// `g` must be NULL or a live handle.
size_t triad_graph_size(const struct TriadGraph *g);

// Whether `u` and `v` are adjacent. Out-of-range vertices give false.
//
// # Safety
// `g` must be NULL or a live handle.
bool triad_graph_has_edge(const struct TriadGraph *g, size_t u, size_t v);

// Name of vertex `v` (the construction label when present).
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum TriadStatus triad_graph_label(const struct TriadGraph *g, size_t v, char **out);

// Computes ω, χ, Γ and ψ.
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum TriadStatus triad_analyze(const struct TriadGraph *g, struct TriadInvariants *out);

// Full invariant report with witnesses, as JSON.
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum TriadStatus triad_analyze_json(const struct TriadGraph *g, char **out);

// Builds a member of one of the named families. `family` is a
// `TriadFamily` value; anything else is an invalid argument.
//
// # Safety
// `out` must be writable.
enum TriadStatus triad_construct(uint32_t family, size_t a, size_t b, struct TriadGraph **out);

// Whether some graph has χ = f, Γ = g and ψ = h.
//
// # Safety
// `out` must be writable.
enum TriadStatus triad_is_realizable(size_t f, size_t g, size_t h, bool *out);

// Least order of a graph with χ = f, Γ = g and ψ = h. Fails with
// `TRIAD_STATUS_DOMAIN` when the triple is not realizable.
//
// # Safety
// `out` must be writable.
enum TriadStatus triad_min_order(size_t f, size_t g, size_t h, size_t *out);

// A graph of least order with χ = f, Γ = g and ψ = h.
//
// # Safety
// `out` must be writable.
enum TriadStatus triad_realize(size_t f, size_t g, size_t h, struct TriadGraph **out);

// Canonical form of `g` as lowercase hex.
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum TriadStatus triad_canonical_hex(const struct TriadGraph *g, char **out);

// # Safety
// `a` and `b` must be live handles; `out` must be writable.
enum TriadStatus triad_are_isomorphic(const struct TriadGraph *a,
                                      const struct TriadGraph *b,
                                      bool *out);

// Checks a Grundy lower-bound certificate: `h_set` induces a subgraph with
// Γ ≥ k and the stable set `s_set`, disjoint from it, dominates it.
//
// On return `*valid` tells whether it holds. If it does and `implied` is not
// NULL, `*implied` is set to k + 1. If it does not and `reason` is not NULL,
// `*reason` receives an owned explanation; otherwise `*reason` is NULL.
//
// # Safety
// The vertex arrays must hold the stated number of entries; `g` must be a
// live handle and `valid` writable.
enum TriadStatus triad_check_certificate(const struct TriadGraph *g,
                                         const size_t *h_set,
                                         size_t h_len,
                                         const size_t *s_set,
                                         size_t s_len,
                                         size_t k,
                                         bool *valid,
                                         size_t *implied,
                                         char **reason);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRIAD_H */
