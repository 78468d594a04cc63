#ifndef COXROOTS_COXETER_HPP
#define COXROOTS_COXETER_HPP

#include <optional>
#include <string>
#include <vector>

#include "coxroots/linalg.hpp"

namespace coxroots {

// Generator indices are 1-based everywhere in the public API, matching the
// usual s_1 .. s_n convention.

// Symmetric matrix of bond orders; entries are integers >= 1 or
// label_infinity.
class CoxeterMatrix {
public:
    CoxeterMatrix(int rank, std::vector<int> entries);

    int rank() const { return n_; }
    int at(int i, int j) const { return m_[static_cast<size_t>(i - 1) * n_ + (j - 1)]; }

    // Empty = valid; otherwise one message per violated axiom, with indices.
    std::vector<std::string> validate() const;
    // Throws ValidationError with the collected messages.
    void validate_or_throw() const;

    std::set<int> finite_labels_ge3() const;

    bool operator==(const CoxeterMatrix& o) const { return n_ == o.n_ && m_ == o.m_; }

private:
    int n_;
    std::vector<int> m_;
};

// Labeled graph derived from the matrix: an edge joins i and j exactly when
// m(i,j) > 2 (including infinity).
class CoxeterGraph {
public:
    struct Edge {
        int a, b;   // a < b
        int label;  // >= 3 or label_infinity
    };

    explicit CoxeterGraph(const CoxeterMatrix& m);

    int rank() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int i) const { return adj_[i - 1]; }
    int degree(int i) const { return static_cast<int>(adj_[i - 1].size()); }
    bool connected() const;

    // Index of the edge {a,b} in edges(), or -1.
    int edge_index(int a, int b) const;

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// A single n-cycle (n >= 3). labels[j-1] is the bond on the cycle step
// vertex_order[j-1] -> vertex_order[j mod n]; the walk starts at vertex 1
// and moves to its smaller-numbered neighbor first.
struct CyclicSpec {
    int n;
    std::vector<int> labels;
    std::vector<int> order;

    // Vertex at cycle position p (1-based, wraps through [.]).
    int vertex(int p) const;
    // Bond label on the cycle edge between positions p and p+1.
    int label(int p) const;
};

enum class SystemKind { finite, affine, indefinite };

struct Classification {
    SystemKind kind;
    std::vector<Sign> minor_signs;  // signs of the leading principal minors
    int corank;                     // dim ker of the bilinear form
};

std::string kind_name(SystemKind k);

// Coxeter matrix plus everything derived from it: graph, shared field
// context, exact bilinear form, classification. Immutable after
// construction; cheap to share by reference.
class CoxeterSystem {
public:
    explicit CoxeterSystem(CoxeterMatrix matrix);

    int rank() const { return matrix_.rank(); }
    const CoxeterMatrix& matrix() const { return matrix_; }
    const CoxeterGraph& graph() const { return graph_; }
    const FieldContextPtr& context() const { return ctx_; }

    // Exact Gram matrix of the form (alpha_i | alpha_j) = -cos(pi/m_ij).
    const Mat& gram() const { return gram_; }
    const AlgebraicReal& form_entry(int i, int j) const { return gram_.at(i - 1, j - 1); }
    AlgebraicReal bilinear(const Coords& u, const Coords& v) const;

    // Requires a connected graph (irreducible system).
    const Classification& classify() const;

    // CyclicSpec when the graph is one n-cycle with n >= 3.
    const std::optional<CyclicSpec>& detect_cyclic() const;

    AlgebraicReal field_zero() const { return AlgebraicReal::zero(ctx_); }
    AlgebraicReal field_one() const { return AlgebraicReal::one(ctx_); }
    AlgebraicReal field_rat(const Rat& r) const { return AlgebraicReal::from_rat(ctx_, r); }

private:
    CoxeterMatrix matrix_;
    CoxeterGraph graph_;
    FieldContextPtr ctx_;
    Mat gram_;
    mutable std::optional<Classification> classification_;
    mutable bool cyclic_computed_ = false;
    mutable std::optional<CyclicSpec> cyclic_;
};

}  // namespace coxroots

#endif
