#include "coxroots/elements.hpp"

#include <algorithm>

#include "coxroots/errors.hpp"

namespace coxroots {

int bracket(long mu, int n) {
    long r = mu % n;
    if (r <= 0) r += n;
    return static_cast<int>(r);
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (int s = 1; s <= n; ++s) {
        bool max = true;
        for (int t = 1; t <= n && max; ++t)
            if (t != s && reach[s - 1][t - 1]) max = false;
        if (max) out.push_back(s);
    }
    return out;
}

std::vector<int> Poset::minimal_elements() const {
    std::vector<int> out;
    for (int s = 1; s <= n; ++s) {
        bool min = true;
        for (int t = 1; t <= n && min; ++t)
            if (t != s && reach[t - 1][s - 1]) min = false;
        if (min) out.push_back(s);
    }
    return out;
}

std::vector<int> Poset::down_set(int s) const {
    std::vector<int> out;
    for (int t = 1; t <= n; ++t)
        if (leq(t, s)) out.push_back(t);
    return out;
}

Poset poset_of(const CoxeterGraph& graph, const std::vector<char>& orientation) {
    const int n = graph.rank();
    std::vector<std::vector<int>> succ(n);
    for (size_t e = 0; e < graph.edges().size(); ++e) {
        const auto& edge = graph.edges()[e];
        if (orientation[e])
            succ[edge.a - 1].push_back(edge.b);
        else
            succ[edge.b - 1].push_back(edge.a);
    }
    Poset p{n, std::vector<std::vector<char>>(n, std::vector<char>(n, 0))};
    for (int s = 1; s <= n; ++s) {
        std::vector<int> stack{s};
        std::vector<char> seen(n, 0);
        seen[s - 1] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : succ[v - 1])
                if (!seen[w - 1]) {
                    seen[w - 1] = 1;
                    p.reach[s - 1][w - 1] = 1;
                    stack.push_back(w);
                }
        }
        if (p.reach[s - 1][s - 1]) throw InvariantError("orientation has a directed cycle");
    }
    return p;
}

std::vector<char> orientation_from_word(const CoxeterGraph& graph, const Word& w) {
    const int n = graph.rank();
    if (static_cast<int>(w.size()) != n)
        throw InvariantError("Coxeter word must use every generator exactly once");
    std::vector<int> pos(n + 1, 0);
    for (size_t p = 0; p < w.size(); ++p) {
        if (w[p] < 1 || w[p] > n || pos[w[p]] != 0)
            throw InvariantError("Coxeter word must use every generator exactly once");
        pos[w[p]] = static_cast<int>(p) + 1;
    }
    std::vector<char> orientation(graph.edges().size());
    for (size_t e = 0; e < graph.edges().size(); ++e) {
        const auto& edge = graph.edges()[e];
        orientation[e] = pos[edge.a] < pos[edge.b] ? 1 : 0;
    }
    return orientation;
}

Word linear_extension(const CoxeterGraph& graph, const std::vector<char>& orientation) {
    const int n = graph.rank();
    std::vector<int> indeg(n + 1, 0);
    std::vector<std::vector<int>> succ(n + 1);
    for (size_t e = 0; e < graph.edges().size(); ++e) {
        const auto& edge = graph.edges()[e];
        int from = orientation[e] ? edge.a : edge.b;
        int to = orientation[e] ? edge.b : edge.a;
        succ[from].push_back(to);
        ++indeg[to];
    }
    // Kahn's algorithm, always emitting the smallest available source.
    std::vector<char> emitted(n + 1, 0);
    Word out;
    while (static_cast<int>(out.size()) < n) {
        int pick = 0;
        for (int v = 1; v <= n && pick == 0; ++v)
            if (!emitted[v] && indeg[v] == 0) pick = v;
        if (pick == 0) throw InvariantError("orientation has a directed cycle");
        emitted[pick] = 1;
        out.push_back(pick);
        for (int w : succ[pick]) --indeg[w];
    }
    return out;
}

CoxeterElementDescriptor make_descriptor(const CoxeterSystem& sys,
                                         const std::vector<char>& orientation) {
    Word w = linear_extension(sys.graph(), orientation);
    GroupElement el = word_to_element(sys, w);
    return {orientation, std::move(w), std::move(el)};
}

CoxeterElementDescriptor descriptor_from_word(const CoxeterSystem& sys, const Word& w) {
    return make_descriptor(sys, orientation_from_word(sys.graph(), w));
}

CoxeterElementDescriptor descriptor_from_element(const CoxeterSystem& sys,
                                                 const GroupElement& g) {
    LengthWord lw = length_and_reduced_word(sys, g, sys.rank() + 1);
    if (lw.length != sys.rank())
        throw InvariantError("matrix is not a Coxeter element: wrong length");
    CoxeterElementDescriptor d = descriptor_from_word(sys, lw.word);
    if (!(d.element == g)) throw InvariantError("descriptor does not reproduce its element");
    return d;
}

std::vector<CoxeterElementDescriptor> all_coxeter_elements(const CoxeterSystem& sys) {
    if (!sys.graph().connected())
        throw PreconditionError("Coxeter element enumeration requires a connected graph");
    const size_t e = sys.graph().edges().size();
    if (e > 24) throw ResourceError("too many edges for orientation enumeration");
    std::vector<CoxeterElementDescriptor> out;
    for (size_t mask = 0; mask < (size_t{1} << e); ++mask) {
        std::vector<char> orientation(e);
        for (size_t b = 0; b < e; ++b) orientation[b] = static_cast<char>((mask >> b) & 1);
        try {
            out.push_back(make_descriptor(sys, orientation));
        } catch (const InvariantError&) {
            // cyclic orientation: not a Coxeter element
        }
    }
    return out;
}

StandardForm build_standard(const CoxeterSystem& sys, const CyclicSpec& spec, int source_pos,
                            int sink_pos) {
    const int n = spec.n;
    if (source_pos < 1 || source_pos > n || sink_pos < 1 || sink_pos > n)
        throw ValidationError("standard form positions out of range");
    if (source_pos == sink_pos)
        throw ValidationError("standard form needs distinct source and sink");
    const int i = source_pos;
    const int k = sink_pos > source_pos ? sink_pos : sink_pos + n;
    Word w;
    w.reserve(n);
    w.push_back(spec.vertex(i));
    for (int j = i + 1; j <= k - 1; ++j) w.push_back(spec.vertex(j));
    for (int j = i + n - 1; j >= k + 1; --j) w.push_back(spec.vertex(j));
    w.push_back(spec.vertex(k));
    if (static_cast<int>(w.size()) != n) throw InvariantError("standard word has wrong length");

    StandardForm sf{source_pos, sink_pos, w, descriptor_from_word(sys, w)};
    Poset poset = poset_of(sys.graph(), sf.desc.orientation);
    auto maxima = poset.maximal_elements();
    auto minima = poset.minimal_elements();
    if (maxima != std::vector<int>{spec.vertex(sink_pos)} ||
        minima != std::vector<int>{spec.vertex(source_pos)})
        throw InvariantError("standard form poset lacks the stated extremes");
    return sf;
}

std::optional<std::pair<int, int>> has_greatest(const CoxeterSystem& sys, const CyclicSpec& spec,
                                                const CoxeterElementDescriptor& desc) {
    Poset poset = poset_of(sys.graph(), desc.orientation);
    auto maxima = poset.maximal_elements();
    if (maxima.size() != 1) return std::nullopt;
    auto minima = poset.minimal_elements();
    if (minima.size() != 1)
        throw InvariantError("cycle orientation with one sink but several sources");
    int source_pos = 0, sink_pos = 0;
    for (int p = 1; p <= spec.n; ++p) {
        if (spec.vertex(p) == minima[0]) source_pos = p;
        if (spec.vertex(p) == maxima[0]) sink_pos = p;
    }
    // A unique sink on a cycle really is a greatest element; cross-check by
    // rebuilding the standard form.
    StandardForm sf = build_standard(sys, spec, source_pos, sink_pos);
    if (!(sf.desc == desc))
        throw InvariantError("single-sink orientation disagrees with its standard form");
    return std::make_pair(source_pos, sink_pos);
}

namespace {

GroupElement word_inverse_element(const CoxeterSystem& sys, const Word& w) {
    Word rev(w.rbegin(), w.rend());
    return word_to_element(sys, rev);
}

}  // namespace

ConjugationCertificate conjugate_to_standard(const CoxeterSystem& sys, const CyclicSpec& spec,
                                             const CoxeterElementDescriptor& desc) {
    const int n = spec.n;
    std::vector<int> pos_of(n + 1, 0);
    for (int p = 1; p <= n; ++p) pos_of[spec.vertex(p)] = p;

    ConjugationCertificate cert;
    cert.w = Mat::identity(sys.context(), sys.rank());
    CoxeterElementDescriptor current = desc;

    Poset poset = poset_of(sys.graph(), current.orientation);
    auto maxima = poset.maximal_elements();
    int target = maxima.front();
    const int step_guard = 4 * n * n + 16;

    while (maxima.size() >= 2) {
        if (static_cast<int>(cert.steps.size()) > step_guard)
            throw InvariantError("conjugation reduction exceeded its step guard");
        if (std::find(maxima.begin(), maxima.end(), target) == maxima.end())
            target = maxima.front();

        // The down-set of a sink on the cycle is a contiguous arc
        // lambda..nu (cycle positions) with the target at mu inside, all
        // arrows pointing at it.
        auto down = poset.down_set(target);
        std::vector<char> in_down(n + 1, 0);
        for (int v : down) in_down[v] = 1;
        const int m = static_cast<int>(down.size());
        if (m >= n) throw InvariantError("down-set of a non-greatest sink covers the cycle");
        int lambda = 0;
        for (int p = 1; p <= n; ++p) {
            int v = spec.vertex(p);
            int before = spec.vertex(bracket(p - 1, n));
            if (in_down[v] && !in_down[before]) {
                if (lambda != 0) throw InvariantError("down-set is not a contiguous arc");
                lambda = p;
            }
        }
        if (lambda == 0) throw InvariantError("down-set is not a contiguous arc");
        for (int off = 0; off < m; ++off)
            if (!in_down[spec.vertex(bracket(lambda + off, n))])
                throw InvariantError("down-set is not a contiguous arc");
        const int mu = lambda + (pos_of[target] - lambda >= 0 ? pos_of[target] - lambda
                                                              : pos_of[target] - lambda + n);
        const int nu = lambda + m - 1;
        if (!(lambda < mu && mu < nu))
            throw InvariantError("sink arc does not contain both cycle neighbors");

        ConjugationStep step;
        step.target_vertex = target;
        step.lambda = bracket(lambda, n);
        step.mu = bracket(mu, n);
        step.nu = bracket(nu, n);
        for (int j = lambda + 1; j <= mu - 1; ++j)
            step.letters.push_back(spec.vertex(bracket(j, n)));
        for (int j = nu - 1; j >= mu + 1; --j)
            step.letters.push_back(spec.vertex(bracket(j, n)));
        step.letters.push_back(spec.vertex(bracket(mu, n)));

        GroupElement w_step = word_to_element(sys, step.letters);
        GroupElement w_step_inv = word_inverse_element(sys, step.letters);
        GroupElement conjugated = mat_mul(mat_mul(w_step, current.element), w_step_inv);
        CoxeterElementDescriptor next = descriptor_from_element(sys, conjugated);

        Poset next_poset = poset_of(sys.graph(), next.orientation);
        auto next_maxima = next_poset.maximal_elements();
        for (int v : next_maxima)
            if (std::find(maxima.begin(), maxima.end(), v) == maxima.end())
                throw InvariantError("conjugation step enlarged the maximal set");
        const bool target_dropped =
            std::find(next_maxima.begin(), next_maxima.end(), target) == next_maxima.end();
        if (!target_dropped &&
            next_poset.down_set(target).size() >= static_cast<size_t>(m))
            throw InvariantError("conjugation step did not shrink the target arc");

        cert.w = mat_mul(w_step, cert.w);
        cert.steps.push_back(std::move(step));
        current = std::move(next);
        poset = std::move(next_poset);
        maxima = std::move(next_maxima);
    }

    auto standard = has_greatest(sys, spec, current);
    if (!standard) throw InvariantError("conjugation finished without a greatest element");
    cert.source = standard->first;
    cert.sink = standard->second;

    LengthWord lw = length_and_reduced_word(sys, cert.w);
    cert.w_reduced = lw.word;
    GroupElement w_inv = word_inverse_element(sys, lw.word);
    GroupElement check = mat_mul(mat_mul(cert.w, desc.element), w_inv);
    StandardForm sf = build_standard(sys, spec, cert.source, cert.sink);
    if (!(check == sf.desc.element))
        throw InvariantError("conjugation certificate failed matrix verification");
    return cert;
}

bool reduced_power_check(const CoxeterSystem& sys, const CoxeterElementDescriptor& desc, int mu) {
    if (mu < 0) throw PreconditionError("power must be >= 0");
    if (sys.classify().kind == SystemKind::finite)
        throw PreconditionError("reduced powers are a property of infinite systems");
    GroupElement p = element_power(sys, desc.element, mu);
    return element_length(sys, p, mu * sys.rank() + 4) == mu * sys.rank();
}

}  // namespace coxroots
