#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "coxroots/errors.hpp"
#include "coxroots/roots.hpp"

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

const CoxeterSystem& atilde2() {
    static CoxeterSystem sys{cyclic_matrix({3, 3, 3})};
    return sys;
}

const CoxeterSystem& hyper334() {
    static CoxeterSystem sys{cyclic_matrix({3, 3, 4})};
    return sys;
}

Coords rational_coords(const CoxeterSystem& sys, const std::vector<Rat>& rs) {
    Coords v;
    for (const auto& r : rs) v.push_back(sys.field_rat(r));
    return v;
}

Word random_word(std::mt19937_64& rng, int n, int len) {
    std::uniform_int_distribution<int> gen(1, n);
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(gen(rng));
    return w;
}

}  // namespace

TEST_CASE("reflections on simple roots") {
    const auto& sys = atilde2();
    // s_1(alpha_1) = -alpha_1
    Coords img = reflect(sys, 1, simple_root(sys, 1));
    CHECK(img[0].rational_value() == -1);
    CHECK(img[1].is_zero());
    // adjacent bond 3: s_1(alpha_2) = alpha_2 + alpha_1
    img = reflect(sys, 1, simple_root(sys, 2));
    CHECK(img[0].rational_value() == 1);
    CHECK(img[1].rational_value() == 1);
    CHECK(img[2].is_zero());
}

TEST_CASE("reflection across a bond of order 4 brings in theta") {
    CoxeterSystem sys{CoxeterMatrix(2, {1, 4, 4, 1})};
    Coords img = reflect(sys, 1, simple_root(sys, 2));
    // s_1(alpha_2) = alpha_2 + 2cos(pi/4) alpha_1, numerically 1.4142...
    CHECK(img[1].rational_value() == 1);
    CHECK(img[0] == AlgebraicReal::theta(sys.context()));
    CHECK(img[0].approx() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("reflections are involutions") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-5, 5);
    for (const CoxeterSystem* sys : {&atilde2(), &hyper334()}) {
        for (int trial = 0; trial < 40; ++trial) {
            Coords v = rational_coords(*sys, {Rat(num(rng)), Rat(num(rng)), Rat(num(rng))});
            for (int i = 1; i <= sys->rank(); ++i) {
                Coords twice = reflect(*sys, i, reflect(*sys, i, v));
                CHECK(key_of(twice) == key_of(v));
            }
        }
    }
}

TEST_CASE("generated elements preserve the form on the basis") {
    std::mt19937_64 rng(12);
    for (const CoxeterSystem* sys : {&atilde2(), &hyper334()}) {
        for (int trial = 0; trial < 20; ++trial) {
            GroupElement g = word_to_element(*sys, random_word(rng, sys->rank(), 6));
            for (int i = 1; i <= sys->rank(); ++i)
                for (int j = i; j <= sys->rank(); ++j) {
                    AlgebraicReal lhs =
                        sys->bilinear(mat_column(g, i - 1), mat_column(g, j - 1));
                    CHECK(lhs == sys->form_entry(i, j));
                }
        }
    }
}

TEST_CASE("root sign classifies and rejects") {
    const auto& sys = atilde2();
    CHECK(root_sign(simple_root(sys, 1)) == Sign::positive);
    Coords neg = simple_root(sys, 1);
    neg[0] = -neg[0];
    CHECK(root_sign(neg) == Sign::negative);
    CHECK(root_sign(reflect(sys, 1, simple_root(sys, 2))) == Sign::positive);
    Coords mixed = rational_coords(sys, {Rat(1), Rat(-1), Rat(0)});
    CHECK_THROWS_AS(root_sign(mixed), InvariantError);
}

TEST_CASE("depth examples against the breadth-first oracle") {
    const auto& sys = atilde2();
    CHECK(depth(sys, simple_root(sys, 2)) == 1);
    CHECK(depth(sys, rational_coords(sys, {Rat(1), Rat(1), Rat(0)})) == 2);
    // (1)_3 + alpha_1 = 2a1 + a2 + a3 = s_1 s_2 (alpha_3)
    CHECK(depth(sys, rational_coords(sys, {Rat(2), Rat(1), Rat(1)})) == 3);

    for (const CoxeterSystem* s : {&atilde2(), &hyper334()}) {
        DepthLayers layers = enumerate_by_depth(*s, 8);
        for (int r = 1; r <= 8; ++r)
            for (const auto& beta : layers.layers[r - 1]) CHECK(depth(*s, beta) == r);
    }
}

TEST_CASE("depth layer 1 is the simple roots") {
    for (const CoxeterSystem* s : {&atilde2(), &hyper334()}) {
        DepthLayers layers = enumerate_by_depth(*s, 1);
        REQUIRE(layers.layers.size() == 1);
        CHECK(layers.layers[0].size() == static_cast<size_t>(s->rank()));
        std::set<RatKey> got, want;
        for (const auto& b : layers.layers[0]) got.insert(key_of(b));
        for (int i = 1; i <= s->rank(); ++i) want.insert(key_of(simple_root(*s, i)));
        CHECK(got == want);
    }
}

TEST_CASE("depth layer 2 matches direct reflection of the simple roots") {
    // oracle: images s_i(alpha_j) with (alpha_i | alpha_j) < 0, deduplicated
    for (const CoxeterSystem* s : {&atilde2(), &hyper334()}) {
        std::set<RatKey> oracle;
        for (int i = 1; i <= s->rank(); ++i)
            for (int j = 1; j <= s->rank(); ++j) {
                if (i == j) continue;
                if (pair_with_simple(*s, i, simple_root(*s, j)).sign() != Sign::negative) continue;
                oracle.insert(key_of(reflect(*s, i, simple_root(*s, j))));
            }
        DepthLayers layers = enumerate_by_depth(*s, 2);
        std::set<RatKey> got;
        for (const auto& b : layers.layers[1]) got.insert(key_of(b));
        CHECK(got == oracle);
    }
    // and the affine layer is the three interval sums
    DepthLayers layers = enumerate_by_depth(atilde2(), 2);
    std::set<RatKey> got;
    for (const auto& b : layers.layers[1]) got.insert(key_of(b));
    std::set<RatKey> want{
        key_of(rational_coords(atilde2(), {Rat(1), Rat(1), Rat(0)})),
        key_of(rational_coords(atilde2(), {Rat(0), Rat(1), Rat(1)})),
        key_of(rational_coords(atilde2(), {Rat(1), Rat(0), Rat(1)}))};
    CHECK(got == want);
    // the bond of order 4 contributes a fourth depth-2 root
    CHECK(enumerate_by_depth(hyper334(), 2).layers[1].size() == 4);
}

TEST_CASE("enumerated roots have unit norm") {
    for (const CoxeterSystem* s : {&atilde2(), &hyper334()}) {
        DepthLayers layers = enumerate_by_depth(*s, 8);
        for (const auto& layer : layers.layers)
            for (const auto& beta : layer) CHECK(s->bilinear(beta, beta) == s->field_one());
    }
}

TEST_CASE("depth trichotomy under one reflection") {
    for (const CoxeterSystem* s : {&atilde2(), &hyper334()}) {
        DepthLayers layers = enumerate_by_depth(*s, 6);
        for (const auto& layer : layers.layers)
            for (const auto& beta : layer)
                for (int i = 1; i <= s->rank(); ++i) {
                    if (is_simple_root(beta) && key_of(beta) == key_of(simple_root(*s, i)))
                        continue;
                    const Sign sign = pair_with_simple(*s, i, beta).sign();
                    const int d = depth(*s, reflect(*s, i, beta)) - depth(*s, beta);
                    if (sign == Sign::positive) CHECK(d == -1);
                    if (sign == Sign::zero) CHECK(d == 0);
                    if (sign == Sign::negative) CHECK(d == 1);
                }
    }
}

TEST_CASE("word to element and back") {
    const auto& sys = atilde2();
    GroupElement id = Mat::identity(sys.context(), 3);
    CHECK(word_to_element(sys, {}) == id);
    CHECK(word_to_element(sys, {1, 1}) == id);
    CHECK_THROWS_AS(word_to_element(sys, {0}), ValidationError);
    CHECK_THROWS_AS(word_to_element(sys, {4}), ValidationError);

    // left-to-right composition: (s_1 s_2)(alpha_3) = s_1(s_2(alpha_3))
    Coords via_word = mat_apply(word_to_element(sys, {1, 2}), simple_root(sys, 3));
    Coords via_steps = reflect(sys, 1, reflect(sys, 2, simple_root(sys, 3)));
    CHECK(key_of(via_word) == key_of(via_steps));
}

TEST_CASE("inversion sets") {
    const auto& sys = atilde2();
    auto inv1 = inversion_set(sys, {1}, true);
    REQUIRE(inv1.size() == 1);
    CHECK(key_of(inv1[0]) == key_of(simple_root(sys, 1)));

    // a Coxeter word of length n has exactly n inversions
    auto invc = inversion_set(sys, {1, 2, 3}, true);
    CHECK(invc.size() == 3);

    CHECK_THROWS_AS(inversion_set(sys, {1, 1}, true), NotReducedError);
    CHECK(inversion_set(sys, {1, 1}, false).size() <= 1);
}

TEST_CASE("length by descent") {
    const auto& sys = atilde2();
    auto lw = length_and_reduced_word(sys, Mat::identity(sys.context(), 3));
    CHECK(lw.length == 0);
    CHECK(lw.word.empty());

    lw = length_and_reduced_word(sys, reflection_element(sys, 2));
    CHECK(lw.length == 1);
    CHECK(lw.word == Word{2});

    // the length of a Coxeter element is the rank
    CHECK(element_length(sys, word_to_element(sys, {1, 2, 3})) == 3);
}

TEST_CASE("length against word length, with inversion cardinality") {
    std::mt19937_64 rng(13);
    for (const CoxeterSystem* s : {&atilde2(), &hyper334()}) {
        for (int trial = 0; trial < 60; ++trial) {
            Word w = random_word(rng, s->rank(), 1 + trial % 7);
            GroupElement g = word_to_element(*s, w);
            LengthWord lw = length_and_reduced_word(*s, g);
            CHECK(lw.length <= static_cast<int>(w.size()));
            CHECK(word_to_element(*s, lw.word) == g);
            // the reduced word's inversion count equals the length
            CHECK(inversion_set(*s, lw.word, true).size() == static_cast<size_t>(lw.length));
            bool reduced = true;
            try {
                inversion_set(*s, w, true);
            } catch (const NotReducedError&) {
                reduced = false;
            }
            CHECK(reduced == (lw.length == static_cast<int>(w.size())));
        }
    }
}

TEST_CASE("sphere sizes against brute-force word enumeration") {
    for (const CoxeterSystem* s : {&atilde2(), &hyper334()}) {
        const int n = s->rank();
        auto sizes = ball_sizes(*s, 4);
        CHECK(sizes[0] == 1);
        CHECK(sizes[1] == static_cast<size_t>(n));
        // oracle: all words of length <= 4, deduplicated by exact matrix,
        // bucketed by descent length
        std::map<int, std::set<RatKey>> buckets;
        std::vector<Word> words{{}};
        for (int len = 0; len <= 4; ++len) {
            std::vector<Word> next;
            for (const auto& w : words) {
                GroupElement g = word_to_element(*s, w);
                buckets[element_length(*s, g)].insert(g.key());
                for (int i = 1; i <= n; ++i) {
                    Word e = w;
                    e.push_back(i);
                    next.push_back(std::move(e));
                }
            }
            words = std::move(next);
        }
        for (int r = 0; r <= 4; ++r) CHECK(sizes[r] == buckets[r].size());
    }
}

TEST_CASE("descent rejects a non-element") {
    const auto& sys = atilde2();
    Mat bogus = Mat::identity(sys.context(), 3);
    bogus.at(0, 1) = sys.field_rat(Rat(1, 2));
    CHECK_THROWS_AS(length_and_reduced_word(sys, bogus), NotGroupElementError);
}

TEST_CASE("enumeration guards fire") {
    CHECK_THROWS_AS(enumerate_by_depth(hyper334(), 20, 50), ResourceError);
    CHECK_THROWS_AS(ball_sizes(hyper334(), 10, 30), ResourceError);
}
