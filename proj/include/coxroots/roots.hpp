#ifndef COXROOTS_ROOTS_HPP
#define COXROOTS_ROOTS_HPP

#include <map>
#include <vector>

#include "coxroots/coxeter.hpp"

namespace coxroots {

// Word in the generators, letters 1-based. May be non-reduced.
using Word = std::vector<int>;

// Group elements are their exact matrices in the geometric representation;
// matrix equality is group equality because the representation is faithful.
using GroupElement = Mat;

Coords simple_root(const CoxeterSystem& sys, int i);
bool is_simple_root(const Coords& v);

// (alpha_i | v)
AlgebraicReal pair_with_simple(const CoxeterSystem& sys, int i, const Coords& v);

// s_i(v) = v - 2 (alpha_i | v) alpha_i
Coords reflect(const CoxeterSystem& sys, int i, const Coords& v);

// positive iff every coordinate >= 0, negative iff every coordinate <= 0.
// Mixed signs mean the vector is not a root: InvariantError.
Sign root_sign(const Coords& v);

// Depth of a positive root by greedy descent: repeatedly apply the
// smallest s_i with (alpha_i | beta) > 0; each step lowers the depth by
// exactly one, so the step count is the depth.
int depth(const CoxeterSystem& sys, Coords beta);

struct DepthLayers {
    // layers[r-1] = positive roots of depth r, in canonical (key) order.
    std::vector<std::vector<Coords>> layers;
    std::map<RatKey, int> depth_of;

    size_t total() const;
    int layer_count(int r) const { return static_cast<int>(layers.at(r - 1).size()); }
};

// Memoized depth. The greedy descent learns the depth of every root along
// its chain, so repeated queries over one root system amortize well; an
// enumeration can be absorbed to pre-seed the table.
class DepthCache {
public:
    explicit DepthCache(const CoxeterSystem& sys) : sys_(sys) {}

    int depth_of(const Coords& beta);
    void absorb(const DepthLayers& layers);
    size_t size() const { return memo_.size(); }

private:
    const CoxeterSystem& sys_;
    std::map<RatKey, int> memo_;
};

inline constexpr size_t default_root_guard = 2000000;

DepthLayers enumerate_by_depth(const CoxeterSystem& sys, int max_depth,
                               size_t guard = default_root_guard);

GroupElement reflection_element(const CoxeterSystem& sys, int i);
GroupElement word_to_element(const CoxeterSystem& sys, const Word& w);
// g * s_i, via the column update for a reflection on the right.
GroupElement right_mult_gen(const CoxeterSystem& sys, GroupElement g, int i);
GroupElement element_power(const CoxeterSystem& sys, const GroupElement& g, int mu);

// The positive roots sent negative by the word's element, computed by the
// telescoped suffix formula. Duplicates collapse; with require_reduced the
// cardinality must equal the word length (else NotReducedError).
std::vector<Coords> inversion_set(const CoxeterSystem& sys, const Word& w, bool require_reduced);

struct LengthWord {
    int length;
    Word word;  // reduced
};

// Descent algorithm: strip one generator per step until the identity.
LengthWord length_and_reduced_word(const CoxeterSystem& sys, GroupElement g,
                                   int step_guard = 4096);
int element_length(const CoxeterSystem& sys, const GroupElement& g, int step_guard = 4096);

// Spheres W_r for r = 0..radius, by breadth-first search over exact
// matrices; layer r holds the elements of length exactly r.
std::vector<std::vector<GroupElement>> ball_elements(const CoxeterSystem& sys, int radius,
                                                     size_t guard = 500000);
std::vector<size_t> ball_sizes(const CoxeterSystem& sys, int radius,
                               size_t guard = 500000);

}  // namespace coxroots

#endif
