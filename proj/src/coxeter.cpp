#include "coxroots/coxeter.hpp"

#include <algorithm>

#include "coxroots/errors.hpp"

namespace coxroots {

CoxeterMatrix::CoxeterMatrix(int rank, std::vector<int> entries) : n_(rank), m_(std::move(entries)) {
    if (rank < 1) throw ValidationError("rank must be >= 1");
    if (m_.size() != static_cast<size_t>(rank) * rank)
        throw ValidationError("matrix entry count does not match rank");
}

std::vector<std::string> CoxeterMatrix::validate() const {
    std::vector<std::string> bad;
    auto idx = [](int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
    for (int i = 1; i <= n_; ++i) {
        if (at(i, i) != 1) bad.push_back("diagonal entry " + idx(i, i) + " must be 1");
        for (int j = i + 1; j <= n_; ++j) {
            if (at(i, j) != at(j, i))
                bad.push_back("entries " + idx(i, j) + " and " + idx(j, i) + " differ: not symmetric");
            const int m = at(i, j);
            if (m != label_infinity && m < 2)
                bad.push_back("off-diagonal entry " + idx(i, j) + " must be >= 2 or infinity");
        }
    }
    return bad;
}

void CoxeterMatrix::validate_or_throw() const {
    auto bad = validate();
    if (bad.empty()) return;
    std::string msg = "invalid Coxeter matrix:";
    for (const auto& b : bad) msg += "\n  " + b;
    throw ValidationError(msg);
}

std::set<int> CoxeterMatrix::finite_labels_ge3() const {
    std::set<int> labels;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (at(i, j) != label_infinity && at(i, j) >= 3) labels.insert(at(i, j));
    return labels;
}

CoxeterGraph::CoxeterGraph(const CoxeterMatrix& m) : n_(m.rank()), adj_(m.rank()) {
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j) {
            const int label = m.at(i, j);
            if (label == label_infinity || label >= 3) {
                edges_.push_back({i, j, label});
                adj_[i - 1].push_back(j);
                adj_[j - 1].push_back(i);
            }
        }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool CoxeterGraph::connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{1};
    seen[0] = 1;
    int count = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++count;
        for (int w : neighbors(v))
            if (!seen[w - 1]) {
                seen[w - 1] = 1;
                stack.push_back(w);
            }
    }
    return count == n_;
}

int CoxeterGraph::edge_index(int a, int b) const {
    if (a > b) std::swap(a, b);
    for (size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].a == a && edges_[e].b == b) return static_cast<int>(e);
    return -1;
}

int CyclicSpec::vertex(int p) const {
    int r = ((p - 1) % n + n) % n;
    return order[r];
}

int CyclicSpec::label(int p) const {
    int r = ((p - 1) % n + n) % n;
    return labels[r];
}

std::string kind_name(SystemKind k) {
    switch (k) {
        case SystemKind::finite: return "finite";
        case SystemKind::affine: return "affine";
        case SystemKind::indefinite: return "indefinite";
    }
    return "?";
}

CoxeterSystem::CoxeterSystem(CoxeterMatrix matrix)
    : matrix_(std::move(matrix)), graph_(matrix_) {
    matrix_.validate_or_throw();
    ctx_ = build_field_context(matrix_.finite_labels_ge3());
    const int n = matrix_.rank();
    gram_ = Mat::zero(ctx_, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            gram_.at(i - 1, j - 1) =
                i == j ? field_one() : embed_minus_cos(matrix_.at(i, j), ctx_);
}

AlgebraicReal CoxeterSystem::bilinear(const Coords& u, const Coords& v) const {
    AlgebraicReal acc = field_zero();
    for (int i = 0; i < rank(); ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < rank(); ++j) {
            if (v[j].is_zero() || gram_.at(i, j).is_zero()) continue;
            acc += u[i] * gram_.at(i, j) * v[j];
        }
    }
    return acc;
}

const Classification& CoxeterSystem::classify() const {
    if (classification_) return *classification_;
    if (!graph_.connected())
        throw PreconditionError("classification requires an irreducible (connected) system");
    const int n = rank();
    auto minors = leading_principal_minors(gram_);
    std::vector<Sign> signs;
    signs.reserve(n);
    for (const auto& d : minors) signs.push_back(d.sign());

    bool head_positive = true;
    for (int k = 0; k + 1 < n; ++k)
        if (signs[k] != Sign::positive) head_positive = false;

    SystemKind kind;
    if (head_positive && signs[n - 1] == Sign::positive)
        kind = SystemKind::finite;
    else if (head_positive && signs[n - 1] == Sign::zero)
        kind = SystemKind::affine;
    else
        kind = SystemKind::indefinite;

    const int corank = rank() - coxroots::rank(gram_);
    if (kind == SystemKind::affine && corank != 1)
        throw InvariantError("affine form does not have corank 1");
    classification_ = Classification{kind, std::move(signs), corank};
    return *classification_;
}

const std::optional<CyclicSpec>& CoxeterSystem::detect_cyclic() const {
    if (cyclic_computed_) return cyclic_;
    cyclic_computed_ = true;
    const int n = rank();
    if (n < 3 || !graph_.connected()) return cyclic_;
    for (int i = 1; i <= n; ++i)
        if (graph_.degree(i) != 2) return cyclic_;
    // Connected with all degrees 2 means a single n-cycle; non-adjacent
    // pairs have m = 2 by the edge rule. Walk from vertex 1 toward its
    // smaller neighbor.
    std::vector<int> order{1, graph_.neighbors(1)[0]};
    while (static_cast<int>(order.size()) < n) {
        int cur = order.back(), prev = order[order.size() - 2];
        const auto& nb = graph_.neighbors(cur);
        order.push_back(nb[0] == prev ? nb[1] : nb[0]);
    }
    std::vector<int> labels(n);
    for (int p = 0; p < n; ++p) labels[p] = matrix_.at(order[p], order[(p + 1) % n]);
    cyclic_ = CyclicSpec{n, std::move(labels), std::move(order)};
    return cyclic_;
}

}  // namespace coxroots
