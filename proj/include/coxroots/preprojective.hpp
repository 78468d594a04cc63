#ifndef COXROOTS_PREPROJECTIVE_HPP
#define COXROOTS_PREPROJECTIVE_HPP

#include "coxroots/elements.hpp"

namespace coxroots {

// A positive root beta is preprojective for c when some positive power of
// c sends it negative. Yes carries a verified witness power; No is only
// certified through the standard-form depth law; everything else is an
// honest Unknown at the iteration bound.
enum class VerdictStatus { yes, no, unknown };

struct PreprojectiveVerdict {
    VerdictStatus status = VerdictStatus::unknown;
    int witness_power = 0;     // yes: smallest mu found with c^mu(beta) < 0
    std::string certificate;   // no/unknown: machine-checkable reason
    int no_step = 0;           // no: iteration at which depth failed to drop
    int dp_before = 0, dp_after = 0;
    int bound = 0;             // unknown: the exhausted mu_max
};

std::string status_name(VerdictStatus s);

// The n positive roots sent negative by c, by the telescoped inversion
// formula on the canonical word. Canonical order.
std::vector<Coords> seed_inversions(const CoxeterSystem& sys,
                                    const CoxeterElementDescriptor& desc);

struct PreprojectiveEnumeration {
    // layers[mu] = c^{-mu}(seed), each of size n, all positive roots.
    std::vector<std::vector<Coords>> layers;
    // root key -> (layer mu, depth)
    std::map<RatKey, std::pair<int, int>> index;
    // depth -> keys of enumerated members at that depth
    std::map<int, std::vector<RatKey>> depth_index;
    bool stopped_by_depth_cap = false;

    size_t total() const;
    bool contains(const RatKey& k) const { return index.count(k) != 0; }
};

// Layered enumeration of the preprojective set: layer 0 is the seed and
// layer mu is the inverse image of layer mu-1. Layers must stay positive
// and pairwise disjoint (the nesting law for infinite systems); stops at
// mu_max or once a whole new layer lies beyond depth_cap.
PreprojectiveEnumeration enumerate_preprojective(const CoxeterSystem& sys,
                                                 const CoxeterElementDescriptor& desc, int mu_max,
                                                 int depth_cap);

// Exact decision for a standard form: iterate gamma <- c(gamma). A negative
// image is a Yes witness; a positive image whose depth fails to drop
// strictly certifies No, because members of the preprojective set lose
// depth under c at every positive step. Always decides, in at most
// depth(beta) iterations.
PreprojectiveVerdict decide_standard(const CoxeterSystem& sys, const StandardForm& sf,
                                     const Coords& beta, DepthCache* cache = nullptr);

// Necessary condition: coefficients weakly increase along the poset of the
// standard form. A violation certifies non-membership.
bool monotone_check(const CoxeterSystem& sys, const StandardForm& sf, const Coords& beta,
                    std::pair<int, int>* violation = nullptr);

// Dispatch: exact decision when the element is a standard form of a cyclic
// graph, otherwise bounded iteration with an honest Unknown.
PreprojectiveVerdict decide_general(const CoxeterSystem& sys, const CoxeterElementDescriptor& desc,
                                    const Coords& beta, int mu_max,
                                    DepthCache* cache = nullptr);

struct LayerBoundReport {
    int source, sink;
    std::vector<int> counts;  // counts[r-1] = members of depth r
};

// Enumerates the preprojective set of a standard form past depth r_max and
// checks that no depth layer holds more than n members. A violation throws
// TheoremContradictionError.
LayerBoundReport layer_bound_check(const CoxeterSystem& sys, const CyclicSpec& spec,
                                   const StandardForm& sf, int r_max);

// The one-step depth law: for a nonnegative vector y monotone along the
// standard form's poset, z = c^{-1}(y) is monotone again and every z_j
// dominates y at j and both cycle neighbors.
bool lemma_depth_step_check(const CoxeterSystem& sys, const CyclicSpec& spec,
                            const StandardForm& sf, const Coords& y);

}  // namespace coxroots

#endif
