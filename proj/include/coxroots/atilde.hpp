#ifndef COXROOTS_ATILDE_HPP
#define COXROOTS_ATILDE_HPP

#include "coxroots/preprojective.hpp"

namespace coxroots {

// Closed forms for the cycle with every bond equal to 3 (the affine case).
// A positive root is mu copies of the full simple-root sum plus one proper
// cyclic interval: coordinates take only the values mu and mu+1. Stored
// symbolically so the closed forms stay independent of the generic engine.
struct AtildeRoot {
    int mu;     // >= 0
    int start;  // 1..n, first vertex of the interval
    int len;    // 1..n-1

    bool operator==(const AtildeRoot& o) const {
        return mu == o.mu && start == o.start && len == o.len;
    }
};

int atilde_end(const AtildeRoot& r, int n);

// The all-threes cyclic system of rank n (standard vertex numbering).
CoxeterSystem make_atilde_system(int n);
// Rank-2 system with an infinite bond.
CoxeterSystem make_atilde1_system();

Coords atilde_to_coords(const CoxeterSystem& sys, const AtildeRoot& r);
std::optional<AtildeRoot> atilde_decode(const CoxeterSystem& sys, const Coords& v);

// All closed-form positive roots with mu <= mu_bound.
std::vector<AtildeRoot> atilde_positive_roots(int n, int mu_bound);

struct AtildeReflectionImage {
    bool negative;    // only for s_i(alpha_i) at mu = 0
    AtildeRoot root;  // valid when !negative
};

// The case table for s_i acting on (mu)_n + interval: flip a bare simple
// root, shrink or grow at an endpoint, bump mu at a full-minus-one
// interval, or fix everything else.
AtildeReflectionImage atilde_reflection(int i, const AtildeRoot& r, int n);

// The preprojective family attached to sink k: all intervals ending at k,
// at every level mu <= mu_bound.
std::vector<AtildeRoot> atilde_family(int k, int n, int mu_bound);

struct AtildePartitionReport {
    int n = 0;
    int depth_bound = 0;
    bool closed_form_matches_bfs = false;
    bool reflection_table_matches = false;
    bool families_partition_roots = false;
    bool families_match_enumerations = false;
    // Which orientation of the standard element reproduces family k:
    // true = source at k+1, sink at k; false = the transpose.
    bool matched_source_is_successor = false;
    size_t root_count = 0;
    std::vector<int> per_depth_family_max;  // max family members in one depth layer
};

// Cross-checks every closed form against the generic engine up to
// depth_bound; throws TheoremContradictionError when coverage or
// disjointness fails.
AtildePartitionReport verify_partition(int n, int depth_bound);

struct Atilde1Report {
    int depth_bound = 0;
    bool classified_affine = false;
    bool reflection_rule_matches = false;
    bool roots_match_closed_form = false;
    bool families_match = false;
    bool families_cover = false;
    size_t root_count = 0;
};

// The rank-2 degenerate case, checked in full against the generic modules.
Atilde1Report atilde1_case(int depth_bound);

}  // namespace coxroots

#endif
