#ifndef COXROOTS_ELEMENTS_HPP
#define COXROOTS_ELEMENTS_HPP

#include <optional>
#include <utility>

#include "coxroots/roots.hpp"

namespace coxroots {

// Representative nu of mu modulo n with 1 <= nu <= n.
int bracket(long mu, int n);

// A Coxeter element, identified with the acyclic orientation it induces on
// the Coxeter graph. The word is the canonical linear extension (emit the
// smallest-index source first); the element matrix is cached.
struct CoxeterElementDescriptor {
    // orientation[e] refers to graph.edges()[e] = {a,b} with a < b:
    // true = a -> b, false = b -> a.
    std::vector<char> orientation;
    Word word;
    GroupElement element;

    bool operator==(const CoxeterElementDescriptor& o) const {
        return orientation == o.orientation;
    }
};

// Reachability order of the orientation: s <= t iff a directed path s -> t.
struct Poset {
    int n;
    std::vector<std::vector<char>> reach;  // reach[u-1][v-1]: path u -> v

    bool leq(int s, int t) const { return s == t || reach[s - 1][t - 1]; }
    std::vector<int> maximal_elements() const;  // sinks
    std::vector<int> minimal_elements() const;  // sources
    std::vector<int> down_set(int s) const;     // { t : t <= s }
};

Poset poset_of(const CoxeterGraph& graph, const std::vector<char>& orientation);

std::vector<char> orientation_from_word(const CoxeterGraph& graph, const Word& w);
// Throws InvariantError when the orientation has a directed cycle.
Word linear_extension(const CoxeterGraph& graph, const std::vector<char>& orientation);

CoxeterElementDescriptor make_descriptor(const CoxeterSystem& sys,
                                         const std::vector<char>& orientation);
CoxeterElementDescriptor descriptor_from_word(const CoxeterSystem& sys, const Word& w);
// Recovers the descriptor of a matrix known to be a Coxeter element.
CoxeterElementDescriptor descriptor_from_element(const CoxeterSystem& sys,
                                                 const GroupElement& g);

// All acyclic orientations of the (connected) Coxeter graph, in orientation
// bitmask order. A cyclic graph on n vertices has 2^n - 2 of them.
std::vector<CoxeterElementDescriptor> all_coxeter_elements(const CoxeterSystem& sys);

// The standard Coxeter element of a cyclic graph whose poset has unique
// minimal element at cycle position i (the source) and unique maximal
// element at position k (the sink):
//   s_[i] (s_[i+1] ... s_[k-1]) (s_[i+n-1] ... s_[k+1]) s_[k]
struct StandardForm {
    int source, sink;  // cycle positions, 1-based
    Word word;
    CoxeterElementDescriptor desc;
};

StandardForm build_standard(const CoxeterSystem& sys, const CyclicSpec& spec, int source_pos,
                            int sink_pos);

// When the poset has a greatest element the descriptor is a standard form;
// returns its (source, sink) cycle positions.
std::optional<std::pair<int, int>> has_greatest(const CoxeterSystem& sys, const CyclicSpec& spec,
                                                const CoxeterElementDescriptor& desc);

// One source-shuffling conjugation step record.
struct ConjugationStep {
    int target_vertex;        // the maximal element being worked on
    int lambda, mu, nu;       // cycle positions of its down-arc, lambda <= mu <= nu
    Word letters;             // the conjugating word of this step
};

struct ConjugationCertificate {
    GroupElement w;
    Word w_reduced;
    int source, sink;  // cycle positions of the resulting standard form
    std::vector<ConjugationStep> steps;
};

// Repeatedly conjugates away extra maximal elements until a single sink is
// left; every step is verified at the matrix level and the final equality
// w c w^{-1} = standard(source, sink) is checked exactly.
ConjugationCertificate conjugate_to_standard(const CoxeterSystem& sys, const CyclicSpec& spec,
                                             const CoxeterElementDescriptor& desc);

// Whether the mu-fold concatenation of a Coxeter word stays reduced,
// i.e. length(c^mu) = mu * n. Requires an infinite system.
bool reduced_power_check(const CoxeterSystem& sys, const CoxeterElementDescriptor& desc, int mu);

}  // namespace coxroots

#endif
