#include "coxroots/roots.hpp"

#include <algorithm>

#include "coxroots/errors.hpp"

namespace coxroots {

Coords simple_root(const CoxeterSystem& sys, int i) {
    if (i < 1 || i > sys.rank())
        throw ValidationError("generator index " + std::to_string(i) + " out of range");
    Coords v(sys.rank(), sys.field_zero());
    v[i - 1] = sys.field_one();
    return v;
}

bool is_simple_root(const Coords& v) {
    int ones = 0;
    for (const auto& c : v) {
        if (c.is_zero()) continue;
        if (c.is_rational() && c.rational_value() == 1)
            ++ones;
        else
            return false;
    }
    return ones == 1;
}

AlgebraicReal pair_with_simple(const CoxeterSystem& sys, int i, const Coords& v) {
    AlgebraicReal acc = sys.field_zero();
    for (int j = 1; j <= sys.rank(); ++j) {
        if (v[j - 1].is_zero()) continue;
        acc += sys.form_entry(i, j) * v[j - 1];
    }
    return acc;
}

Coords reflect(const CoxeterSystem& sys, int i, const Coords& v) {
    Coords r = v;
    AlgebraicReal dot = pair_with_simple(sys, i, v);
    r[i - 1] -= (dot + dot);
    return r;
}

Sign root_sign(const Coords& v) {
    bool pos = false, neg = false;
    for (const auto& c : v) {
        switch (c.sign()) {
            case Sign::positive: pos = true; break;
            case Sign::negative: neg = true; break;
            case Sign::zero: break;
        }
    }
    if (pos && neg) throw InvariantError("vector has mixed coordinate signs: not a root");
    if (!pos && !neg) throw InvariantError("zero vector is not a root");
    return pos ? Sign::positive : Sign::negative;
}

int depth(const CoxeterSystem& sys, Coords beta) {
    int steps = 1;
    while (!is_simple_root(beta)) {
        int pick = 0;
        for (int i = 1; i <= sys.rank(); ++i)
            if (pair_with_simple(sys, i, beta).sign() == Sign::positive) {
                pick = i;
                break;
            }
        if (pick == 0)
            throw InvariantError("positive non-simple root with no descending generator");
        beta = reflect(sys, pick, beta);
        ++steps;
        if (steps > 1 << 24) throw ResourceError("depth descent exceeded its step guard");
    }
    return steps;
}

size_t DepthLayers::total() const {
    size_t t = 0;
    for (const auto& l : layers) t += l.size();
    return t;
}

int DepthCache::depth_of(const Coords& beta) {
    std::vector<RatKey> chain;
    Coords cur = beta;
    int base = 1;
    for (;;) {
        RatKey k = key_of(cur);
        auto it = memo_.find(k);
        if (it != memo_.end()) {
            base = it->second;
            break;
        }
        chain.push_back(std::move(k));
        if (is_simple_root(cur)) {
            base = 1;
            memo_.emplace(chain.back(), 1);
            chain.pop_back();
            break;
        }
        int pick = 0;
        for (int i = 1; i <= sys_.rank(); ++i)
            if (pair_with_simple(sys_, i, cur).sign() == Sign::positive) {
                pick = i;
                break;
            }
        if (pick == 0)
            throw InvariantError("positive non-simple root with no descending generator");
        cur = reflect(sys_, pick, cur);
    }
    int d = base;
    for (size_t j = chain.size(); j-- > 0;) memo_.emplace(std::move(chain[j]), ++d);
    return base + static_cast<int>(chain.size());
}

void DepthCache::absorb(const DepthLayers& layers) {
    memo_.insert(layers.depth_of.begin(), layers.depth_of.end());
}

DepthLayers enumerate_by_depth(const CoxeterSystem& sys, int max_depth, size_t guard) {
    if (max_depth < 1) throw PreconditionError("max_depth must be >= 1");
    DepthLayers out;
    std::map<RatKey, Coords> layer;
    for (int i = 1; i <= sys.rank(); ++i) {
        Coords a = simple_root(sys, i);
        layer.emplace(key_of(a), std::move(a));
    }
    for (int r = 1; r <= max_depth && !layer.empty(); ++r) {
        std::vector<Coords> stored;
        stored.reserve(layer.size());
        for (auto& [k, v] : layer) {
            out.depth_of.emplace(k, r);
            stored.push_back(v);
        }
        out.layers.push_back(std::move(stored));
        if (out.depth_of.size() > guard)
            throw ResourceError("root enumeration exceeded its memory guard");
        if (r == max_depth) break;
        // One reflection changes depth by at most 1, so images with
        // (alpha_i | beta) < 0 are exactly the depth r+1 roots.
        std::map<RatKey, Coords> next;
        for (const auto& [k, beta] : layer) {
            for (int i = 1; i <= sys.rank(); ++i) {
                if (pair_with_simple(sys, i, beta).sign() != Sign::negative) continue;
                Coords g = reflect(sys, i, beta);
                RatKey gk = key_of(g);
                if (out.depth_of.count(gk))
                    throw InvariantError("depth layering produced a previously seen root");
                next.emplace(std::move(gk), std::move(g));
            }
        }
        layer = std::move(next);
    }
    return out;
}

GroupElement reflection_element(const CoxeterSystem& sys, int i) {
    return right_mult_gen(sys, Mat::identity(sys.context(), sys.rank()), i);
}

GroupElement right_mult_gen(const CoxeterSystem& sys, GroupElement g, int i) {
    // (g * s_i) changes column c by -2 B(i,c) * col_i for c != i and negates
    // column i.
    const int n = g.n;
    Coords col_i = mat_column(g, i - 1);
    for (int c = 0; c < n; ++c) {
        if (c == i - 1) {
            for (int r = 0; r < n; ++r) g.at(r, c) = -col_i[r];
            continue;
        }
        const AlgebraicReal& b = sys.form_entry(i, c + 1);
        if (b.is_zero()) continue;
        AlgebraicReal f = b + b;
        for (int r = 0; r < n; ++r) {
            if (col_i[r].is_zero()) continue;
            g.at(r, c) -= f * col_i[r];
        }
    }
    return g;
}

GroupElement word_to_element(const CoxeterSystem& sys, const Word& w) {
    GroupElement g = Mat::identity(sys.context(), sys.rank());
    for (int letter : w) {
        if (letter < 1 || letter > sys.rank())
            throw ValidationError("word letter " + std::to_string(letter) + " out of range");
        g = right_mult_gen(sys, std::move(g), letter);
    }
    return g;
}

GroupElement element_power(const CoxeterSystem& sys, const GroupElement& g, int mu) {
    if (mu < 0) throw PreconditionError("element_power expects mu >= 0");
    GroupElement acc = Mat::identity(sys.context(), sys.rank());
    for (int i = 0; i < mu; ++i) acc = mat_mul(acc, g);
    return acc;
}

std::vector<Coords> inversion_set(const CoxeterSystem& sys, const Word& w, bool require_reduced) {
    // beta_j = t_k t_{k-1} ... t_{j+1} (alpha_{t_j}); maintain the suffix
    // element E_j = t_k ... t_{j+1} incrementally.
    GroupElement suffix = Mat::identity(sys.context(), sys.rank());
    std::map<RatKey, Coords> set;
    for (size_t j = w.size(); j-- > 0;) {
        const int letter = w[j];
        if (letter < 1 || letter > sys.rank())
            throw ValidationError("word letter " + std::to_string(letter) + " out of range");
        Coords beta = mat_column(suffix, letter - 1);
        if (root_sign(beta) == Sign::positive) set.emplace(key_of(beta), std::move(beta));
        suffix = right_mult_gen(sys, std::move(suffix), letter);
    }
    if (require_reduced && set.size() != w.size())
        throw NotReducedError("word of length " + std::to_string(w.size()) +
                              " has only " + std::to_string(set.size()) + " inversions");
    std::vector<Coords> out;
    out.reserve(set.size());
    for (auto& [k, v] : set) out.push_back(std::move(v));
    return out;
}

LengthWord length_and_reduced_word(const CoxeterSystem& sys, GroupElement g, int step_guard) {
    const GroupElement id = Mat::identity(sys.context(), sys.rank());
    Word reversed;
    while (!(g == id)) {
        if (static_cast<int>(reversed.size()) >= step_guard)
            throw NotGroupElementError("descent exceeded its step guard");
        int pick = 0;
        try {
            for (int i = 1; i <= sys.rank(); ++i)
                if (root_sign(mat_column(g, i - 1)) == Sign::negative) {
                    pick = i;
                    break;
                }
        } catch (const InvariantError&) {
            throw NotGroupElementError("matrix column is not a root");
        }
        if (pick == 0) throw NotGroupElementError("non-identity matrix with no descent");
        g = right_mult_gen(sys, std::move(g), pick);
        reversed.push_back(pick);
    }
    std::reverse(reversed.begin(), reversed.end());
    return {static_cast<int>(reversed.size()), std::move(reversed)};
}

int element_length(const CoxeterSystem& sys, const GroupElement& g, int step_guard) {
    return length_and_reduced_word(sys, g, step_guard).length;
}

std::vector<std::vector<GroupElement>> ball_elements(const CoxeterSystem& sys, int radius,
                                                     size_t guard) {
    if (radius < 0) throw PreconditionError("radius must be >= 0");
    std::vector<std::vector<GroupElement>> spheres;
    std::map<RatKey, GroupElement> layer;
    GroupElement id = Mat::identity(sys.context(), sys.rank());
    layer.emplace(id.key(), id);
    size_t seen = 1;
    for (int r = 0; r <= radius; ++r) {
        std::vector<GroupElement> stored;
        stored.reserve(layer.size());
        for (const auto& [k, w] : layer) stored.push_back(w);
        spheres.push_back(std::move(stored));
        if (r == radius) break;
        std::map<RatKey, GroupElement> next;
        for (const auto& [k, w] : layer) {
            for (int i = 1; i <= sys.rank(); ++i) {
                // l(w s_i) = l(w) + 1 exactly when w(alpha_i) is positive.
                if (root_sign(mat_column(w, i - 1)) != Sign::positive) continue;
                GroupElement ws = right_mult_gen(sys, w, i);
                RatKey key = ws.key();
                next.emplace(std::move(key), std::move(ws));
            }
        }
        seen += next.size();
        if (seen > guard) throw ResourceError("ball enumeration exceeded its element guard");
        layer = std::move(next);
    }
    return spheres;
}

std::vector<size_t> ball_sizes(const CoxeterSystem& sys, int radius, size_t guard) {
    std::vector<size_t> sizes;
    for (const auto& sphere : ball_elements(sys, radius, guard)) sizes.push_back(sphere.size());
    return sizes;
}

}  // namespace coxroots
