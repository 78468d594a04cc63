#include "coxroots/preprojective.hpp"

#include "coxroots/errors.hpp"

namespace coxroots {

std::string status_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::yes: return "yes";
        case VerdictStatus::no: return "no";
        case VerdictStatus::unknown: return "unknown";
    }
    return "?";
}

std::vector<Coords> seed_inversions(const CoxeterSystem& sys,
                                    const CoxeterElementDescriptor& desc) {
    std::vector<Coords> seed = inversion_set(sys, desc.word, true);
    if (static_cast<int>(seed.size()) != sys.rank())
        throw InvariantError("Coxeter word produced the wrong number of inversions");
    return seed;
}

size_t PreprojectiveEnumeration::total() const {
    size_t t = 0;
    for (const auto& l : layers) t += l.size();
    return t;
}

PreprojectiveEnumeration enumerate_preprojective(const CoxeterSystem& sys,
                                                 const CoxeterElementDescriptor& desc, int mu_max,
                                                 int depth_cap) {
    if (mu_max < 0) throw PreconditionError("mu_max must be >= 0");
    if (sys.classify().kind == SystemKind::finite)
        throw PreconditionError("layered preprojective enumeration needs an infinite system");
    Word rev(desc.word.rbegin(), desc.word.rend());
    const GroupElement c_inv = word_to_element(sys, rev);

    PreprojectiveEnumeration out;
    std::vector<Coords> layer = seed_inversions(sys, desc);
    for (int mu = 0; mu <= mu_max; ++mu) {
        int min_depth = -1;
        for (const auto& beta : layer) {
            RatKey k = key_of(beta);
            if (out.index.count(k))
                throw InvariantError("preprojective layers are not disjoint");
            const int dp = depth(sys, beta);
            out.index.emplace(std::move(k), std::make_pair(mu, dp));
            out.depth_index[dp].push_back(key_of(beta));
            if (min_depth < 0 || dp < min_depth) min_depth = dp;
        }
        out.layers.push_back(layer);
        if (min_depth > depth_cap) {
            out.stopped_by_depth_cap = true;
            break;
        }
        if (mu == mu_max) break;
        std::vector<Coords> next;
        next.reserve(layer.size());
        for (const auto& beta : layer) {
            Coords img = mat_apply(c_inv, beta);
            if (root_sign(img) != Sign::positive)
                throw InvariantError("inverse image of a preprojective layer went negative");
            next.push_back(std::move(img));
        }
        layer = std::move(next);
    }
    return out;
}

PreprojectiveVerdict decide_standard(const CoxeterSystem& sys, const StandardForm& sf,
                                     const Coords& beta, DepthCache* cache) {
    if (root_sign(beta) != Sign::positive)
        throw PreconditionError("preprojectivity is defined for positive roots");
    auto depth_of = [&](const Coords& v) { return cache ? cache->depth_of(v) : depth(sys, v); };
    Coords gamma = beta;
    int dp = depth_of(gamma);
    const int dp_start = dp;
    for (int mu = 1;; ++mu) {
        if (mu > dp_start)
            throw InvariantError("standard-form decision overran its depth budget");
        Coords next = mat_apply(sf.desc.element, gamma);
        if (root_sign(next) == Sign::negative) {
            PreprojectiveVerdict v;
            v.status = VerdictStatus::yes;
            v.witness_power = mu;
            return v;
        }
        const int dp_next = depth_of(next);
        if (dp_next >= dp) {
            PreprojectiveVerdict v;
            v.status = VerdictStatus::no;
            v.no_step = mu;
            v.dp_before = dp;
            v.dp_after = dp_next;
            v.certificate = "depth did not drop at step " + std::to_string(mu) + " (" +
                            std::to_string(dp) + " -> " + std::to_string(dp_next) + ")";
            return v;
        }
        gamma = std::move(next);
        dp = dp_next;
    }
}

bool monotone_check(const CoxeterSystem& sys, const StandardForm& sf, const Coords& beta,
                    std::pair<int, int>* violation) {
    Poset poset = poset_of(sys.graph(), sf.desc.orientation);
    for (int h = 1; h <= sys.rank(); ++h)
        for (int j = 1; j <= sys.rank(); ++j) {
            if (h == j || !poset.leq(h, j)) continue;
            if ((beta[j - 1] - beta[h - 1]).sign() == Sign::negative) {
                if (violation) *violation = {h, j};
                return false;
            }
        }
    return true;
}

PreprojectiveVerdict decide_general(const CoxeterSystem& sys, const CoxeterElementDescriptor& desc,
                                    const Coords& beta, int mu_max, DepthCache* cache) {
    if (root_sign(beta) != Sign::positive)
        throw PreconditionError("preprojectivity is defined for positive roots");
    const auto& spec = sys.detect_cyclic();
    if (spec) {
        auto standard = has_greatest(sys, *spec, desc);
        if (standard) {
            StandardForm sf = build_standard(sys, *spec, standard->first, standard->second);
            return decide_standard(sys, sf, beta, cache);
        }
    }
    Coords gamma = beta;
    for (int mu = 1; mu <= mu_max; ++mu) {
        gamma = mat_apply(desc.element, gamma);
        if (root_sign(gamma) == Sign::negative) {
            PreprojectiveVerdict v;
            v.status = VerdictStatus::yes;
            v.witness_power = mu;
            return v;
        }
    }
    PreprojectiveVerdict v;
    v.status = VerdictStatus::unknown;
    v.bound = mu_max;
    v.certificate = "still positive after " + std::to_string(mu_max) + " applications";
    return v;
}

LayerBoundReport layer_bound_check(const CoxeterSystem& sys, const CyclicSpec& spec,
                                   const StandardForm& sf, int r_max) {
    // Depth grows strictly along layers, so mu_max = r_max + 1 sees every
    // member of depth <= r_max.
    PreprojectiveEnumeration e = enumerate_preprojective(sys, sf.desc, r_max + 1, r_max);
    LayerBoundReport report{sf.source, sf.sink, std::vector<int>(r_max, 0)};
    for (const auto& [dp, keys] : e.depth_index) {
        if (dp > r_max) continue;
        report.counts[dp - 1] = static_cast<int>(keys.size());
        if (static_cast<int>(keys.size()) > spec.n)
            throw TheoremContradictionError(
                "preprojective depth layer " + std::to_string(dp) + " holds " +
                std::to_string(keys.size()) + " > n members");
    }
    return report;
}

bool lemma_depth_step_check(const CoxeterSystem& sys, const CyclicSpec& spec,
                            const StandardForm& sf, const Coords& y) {
    for (const auto& c : y)
        if (c.sign() == Sign::negative)
            throw PreconditionError("depth-step law expects a nonnegative vector");
    Poset poset = poset_of(sys.graph(), sf.desc.orientation);
    for (int h = 1; h <= sys.rank(); ++h)
        for (int j = 1; j <= sys.rank(); ++j)
            if (h != j && poset.leq(h, j) && (y[j - 1] - y[h - 1]).sign() == Sign::negative)
                throw PreconditionError("depth-step law expects a poset-monotone vector");

    Word rev(sf.word.rbegin(), sf.word.rend());
    const GroupElement c_inv = word_to_element(sys, rev);
    Coords z = mat_apply(c_inv, y);

    for (int h = 1; h <= sys.rank(); ++h)
        for (int j = 1; j <= sys.rank(); ++j)
            if (h != j && poset.leq(h, j) && (z[j - 1] - z[h - 1]).sign() == Sign::negative)
                return false;

    // z_j >= y at j and at both cycle neighbors of j.
    for (int p = 1; p <= spec.n; ++p) {
        const int vj = spec.vertex(p);
        for (int q : {p - 1, p, p + 1}) {
            const int vq = spec.vertex(bracket(q, spec.n));
            if ((z[vj - 1] - y[vq - 1]).sign() == Sign::negative) return false;
        }
    }
    return true;
}

}  // namespace coxroots
