#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "coxroots/elements.hpp"
#include "coxroots/errors.hpp"

using namespace coxroots;

namespace {

CoxeterMatrix cyclic_matrix(const std::vector<int>& labels) {
    const int n = static_cast<int>(labels.size());
    std::vector<int> m(static_cast<size_t>(n) * n, 2);
    for (int i = 1; i <= n; ++i) m[(i - 1) * n + (i - 1)] = 1;
    for (int i = 1; i <= n; ++i) {
        int j = i % n + 1;
        m[(i - 1) * n + (j - 1)] = labels[i - 1];
        m[(j - 1) * n + (i - 1)] = labels[i - 1];
    }
    return CoxeterMatrix(n, std::move(m));
}

// Brute-force oracle: count acyclic orientations by checking each bitmask
// with a plain DFS cycle test, independent of the library path.
int count_acyclic_bruteforce(const CoxeterGraph& g) {
    const int n = g.rank();
    const auto& edges = g.edges();
    int acyclic = 0;
    for (size_t mask = 0; mask < (size_t{1} << edges.size()); ++mask) {
        std::vector<std::vector<int>> succ(n + 1);
        for (size_t e = 0; e < edges.size(); ++e) {
            if ((mask >> e) & 1)
                succ[edges[e].a].push_back(edges[e].b);
            else
                succ[edges[e].b].push_back(edges[e].a);
        }
        std::vector<int> state(n + 1, 0);
        bool cyclic = false;
        auto dfs = [&](auto&& self, int v) -> void {
            state[v] = 1;
            for (int w : succ[v]) {
                if (state[w] == 1) cyclic = true;
                if (state[w] == 0 && !cyclic) self(self, w);
            }
            state[v] = 2;
        };
        for (int v = 1; v <= n && !cyclic; ++v)
            if (state[v] == 0) dfs(dfs, v);
        if (!cyclic) ++acyclic;
    }
    return acyclic;
}

void all_extensions(const std::vector<std::vector<int>>& succ, std::vector<int>& indeg,
                    std::vector<char>& used, Word& cur, std::vector<Word>& out) {
    const int n = static_cast<int>(used.size()) - 1;
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    for (int v = 1; v <= n; ++v) {
        if (used[v] || indeg[v] != 0) continue;
        used[v] = 1;
        for (int w : succ[v]) --indeg[w];
        cur.push_back(v);
        all_extensions(succ, indeg, used, cur, out);
        cur.pop_back();
        for (int w : succ[v]) ++indeg[w];
        used[v] = 0;
    }
}

}  // namespace

TEST_CASE("bracket representative") {
    CHECK(bracket(4, 4) == 4);
    CHECK(bracket(0, 4) == 4);
    CHECK(bracket(5, 4) == 1);
    CHECK(bracket(-1, 4) == 3);
    CHECK(bracket(-7, 3) == 2);
}

TEST_CASE("all Coxeter elements of cycles and paths") {
    for (int n : {3, 4, 5, 6}) {
        std::vector<int> labels(n, 3);
        CoxeterSystem sys{cyclic_matrix(labels)};
        auto elements = all_coxeter_elements(sys);
        CHECK(static_cast<int>(elements.size()) == (1 << n) - 2);
        CHECK(static_cast<int>(elements.size()) == count_acyclic_bruteforce(sys.graph()));
    }
    // a path (tree): every orientation is acyclic
    CoxeterSystem path{CoxeterMatrix(3, {1, 3, 2, 3, 1, 3, 2, 3, 1})};
    CHECK(all_coxeter_elements(path).size() == 4);
    CHECK(count_acyclic_bruteforce(path.graph()) == 4);
}

TEST_CASE("distinct orientations give distinct group elements") {
    for (int n : {3, 4, 5}) {
        CoxeterSystem sys{cyclic_matrix(std::vector<int>(n, 3))};
        auto elements = all_coxeter_elements(sys);
        std::set<RatKey> keys;
        for (const auto& d : elements) keys.insert(d.element.key());
        CHECK(keys.size() == elements.size());
    }
}

TEST_CASE("every linear extension of one orientation gives the same element") {
    CoxeterSystem sys{cyclic_matrix({3, 3, 3, 3})};
    for (const auto& desc : all_coxeter_elements(sys)) {
        const auto& edges = sys.graph().edges();
        std::vector<std::vector<int>> succ(sys.rank() + 1);
        std::vector<int> indeg(sys.rank() + 1, 0);
        for (size_t e = 0; e < edges.size(); ++e) {
            int from = desc.orientation[e] ? edges[e].a : edges[e].b;
            int to = desc.orientation[e] ? edges[e].b : edges[e].a;
            succ[from].push_back(to);
            ++indeg[to];
        }
        std::vector<char> used(sys.rank() + 1, 0);
        Word cur;
        std::vector<Word> extensions;
        all_extensions(succ, indeg, used, cur, extensions);
        CHECK(!extensions.empty());
        CHECK(std::find(extensions.begin(), extensions.end(), desc.word) != extensions.end());
        for (const auto& w : extensions) CHECK(word_to_element(sys, w) == desc.element);
    }
}

TEST_CASE("standard form words by direct substitution") {
    CoxeterSystem sys4{cyclic_matrix({3, 3, 3, 3})};
    const CyclicSpec& spec4 = *sys4.detect_cyclic();
    CHECK(build_standard(sys4, spec4, 1, 3).word == Word{1, 2, 4, 3});

    CoxeterSystem sys3{cyclic_matrix({3, 3, 3})};
    const CyclicSpec& spec3 = *sys3.detect_cyclic();
    CHECK(build_standard(sys3, spec3, 2, 1).word == Word{2, 3, 1});

    CHECK_THROWS_AS(build_standard(sys3, spec3, 2, 2), ValidationError);
}

TEST_CASE("poset extremes of a standard form") {
    CoxeterSystem sys{cyclic_matrix({3, 3, 3, 3, 3})};
    const CyclicSpec& spec = *sys.detect_cyclic();
    for (int i = 1; i <= 5; ++i)
        for (int k = 1; k <= 5; ++k) {
            if (i == k) continue;
            StandardForm sf = build_standard(sys, spec, i, k);
            Poset poset = poset_of(sys.graph(), sf.desc.orientation);
            CHECK(poset.maximal_elements() == std::vector<int>{k});
            CHECK(poset.minimal_elements() == std::vector<int>{i});
            // the sink dominates everything: its down-set is all of S
            CHECK(poset.down_set(k).size() == 5);
            CHECK(poset.leq(i, k));
            CHECK(poset.leq(i, i));
        }
}

TEST_CASE("inverse of a standard form swaps source and sink") {
    for (int n : {3, 4, 5}) {
        CoxeterSystem sys{cyclic_matrix(std::vector<int>(n, 3))};
        const CyclicSpec& spec = *sys.detect_cyclic();
        for (int i = 1; i <= n; ++i)
            for (int k = 1; k <= n; ++k) {
                if (i == k) continue;
                GroupElement forward = build_standard(sys, spec, i, k).desc.element;
                GroupElement backward = build_standard(sys, spec, k, i).desc.element;
                CHECK(mat_mul(forward, backward) == Mat::identity(sys.context(), n));
            }
    }
}

TEST_CASE("has_greatest on standard and non-standard orientations") {
    CoxeterSystem sys{cyclic_matrix({3, 3, 3, 3})};
    const CyclicSpec& spec = *sys.detect_cyclic();
    StandardForm sf = build_standard(sys, spec, 1, 3);
    auto got = has_greatest(sys, spec, sf.desc);
    REQUIRE(got.has_value());
    CHECK(got->first == 1);
    CHECK(got->second == 3);

    // orientation 1 -> 2 <- 3 -> 4 <- 1 has two sinks
    CoxeterElementDescriptor two_sinks = descriptor_from_word(sys, {1, 3, 2, 4});
    CHECK(!has_greatest(sys, spec, two_sinks).has_value());

    // on a triangle every acyclic orientation has one source and one sink
    CoxeterSystem sys3{cyclic_matrix({3, 3, 4})};
    const CyclicSpec& spec3 = *sys3.detect_cyclic();
    for (const auto& d : all_coxeter_elements(sys3))
        CHECK(has_greatest(sys3, spec3, d).has_value());
}

TEST_CASE("conjugation of an already standard element is trivial") {
    CoxeterSystem sys{cyclic_matrix({3, 3, 3, 3})};
    const CyclicSpec& spec = *sys.detect_cyclic();
    StandardForm sf = build_standard(sys, spec, 2, 4);
    ConjugationCertificate cert = conjugate_to_standard(sys, spec, sf.desc);
    CHECK(cert.steps.empty());
    CHECK(cert.w == Mat::identity(sys.context(), 4));
    CHECK(cert.source == 2);
    CHECK(cert.sink == 4);
}

TEST_CASE("conjugation certificate for a two-sink orientation") {
    CoxeterSystem sys{cyclic_matrix({3, 3, 3, 3})};
    const CyclicSpec& spec = *sys.detect_cyclic();
    CoxeterElementDescriptor c = descriptor_from_word(sys, {1, 3, 2, 4});
    ConjugationCertificate cert = conjugate_to_standard(sys, spec, c);
    CHECK(!cert.steps.empty());
    StandardForm target = build_standard(sys, spec, cert.source, cert.sink);
    Word rev(cert.w_reduced.rbegin(), cert.w_reduced.rend());
    GroupElement w_inv = word_to_element(sys, rev);
    CHECK(mat_mul(mat_mul(cert.w, c.element), w_inv) == target.desc.element);
    CHECK(word_to_element(sys, cert.w_reduced) == cert.w);
}

TEST_CASE("conjugation succeeds for every element of small cycles") {
    for (const std::vector<int>& labels :
         {std::vector<int>{3, 3, 3, 3}, std::vector<int>{3, 4, 3, 4},
          std::vector<int>{3, 3, 3, 3, 3}}) {
        CoxeterSystem sys{cyclic_matrix(labels)};
        const CyclicSpec& spec = *sys.detect_cyclic();
        for (const auto& d : all_coxeter_elements(sys)) {
            ConjugationCertificate cert = conjugate_to_standard(sys, spec, d);
            StandardForm target = build_standard(sys, spec, cert.source, cert.sink);
            Word rev(cert.w_reduced.rbegin(), cert.w_reduced.rend());
            GroupElement w_inv = word_to_element(sys, rev);
            CHECK(mat_mul(mat_mul(cert.w, d.element), w_inv) == target.desc.element);
        }
    }
}

TEST_CASE("powers of Coxeter words stay reduced") {
    CoxeterSystem affine{cyclic_matrix({3, 3, 3})};
    auto c = descriptor_from_word(affine, {1, 2, 3});
    CHECK(reduced_power_check(affine, c, 0));
    CHECK(reduced_power_check(affine, c, 4));
    CHECK(element_length(affine, element_power(affine, c.element, 4)) == 12);

    CoxeterSystem indef{cyclic_matrix({3, 3, 4})};
    for (const auto& d : all_coxeter_elements(indef))
        for (int mu = 0; mu <= 6; ++mu) CHECK(reduced_power_check(indef, d, mu));

    CoxeterSystem finite{CoxeterMatrix(2, {1, 3, 3, 1})};
    auto cf = descriptor_from_word(finite, {1, 2});
    CHECK_THROWS_AS(reduced_power_check(finite, cf, 2), PreconditionError);
}

TEST_CASE("standard forms on a shuffled cyclic numbering") {
    // 4-cycle 1-3-2-4-1: positions map to vertices 1,3,2,4
    std::vector<int> m(16, 2);
    for (int i = 1; i <= 4; ++i) m[(i - 1) * 4 + (i - 1)] = 1;
    auto set = [&](int a, int b, int label) {
        m[(a - 1) * 4 + (b - 1)] = label;
        m[(b - 1) * 4 + (a - 1)] = label;
    };
    set(1, 3, 3);
    set(3, 2, 3);
    set(2, 4, 3);
    set(4, 1, 3);
    CoxeterSystem sys{CoxeterMatrix(4, std::move(m))};
    const CyclicSpec& spec = *sys.detect_cyclic();
    REQUIRE(spec.order == std::vector<int>{1, 3, 2, 4});
    StandardForm sf = build_standard(sys, spec, 1, 3);
    // positions (1,2,4,3) -> vertices (1,3,4,2)
    CHECK(sf.word == Word{1, 3, 4, 2});
    for (const auto& d : all_coxeter_elements(sys)) {
        ConjugationCertificate cert = conjugate_to_standard(sys, spec, d);
        StandardForm target = build_standard(sys, spec, cert.source, cert.sink);
        Word rev(cert.w_reduced.rbegin(), cert.w_reduced.rend());
        CHECK(mat_mul(mat_mul(cert.w, d.element), word_to_element(sys, rev)) ==
              target.desc.element);
    }
}
