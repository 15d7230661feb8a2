#include "ipd/symgroup.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace ipd;

namespace {

Permutation P(const std::string& s) { return parse_permutation(s); }

// Independent Bruhat oracle: the rank-matrix (Ehresmann) criterion.
// v <= w iff #{k <= i : v(k) >= j} <= #{k <= i : w(k) >= j} for all i, j.
bool bruhat_leq_rank_oracle(const Permutation& v, const Permutation& w) {
    int n = std::max(v.window(), w.window());
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int cv = 0, cw = 0;
            for (int k = 1; k <= i; ++k) {
                if (v(k) >= j) ++cv;
                if (w(k) >= j) ++cw;
            }
            if (cv > cw) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("one-line canonical form trims trailing fixed points") {
    CHECK(P("213") == P("2134"));
    CHECK(P("1") == identity_permutation());
    CHECK(P("123456") == identity_permutation());
    CHECK(P("35142").window() == 5);
    CHECK(P("2,1,3") == simple_transposition(1));
    CHECK(P("(2,4)(3,5)") == P("14523"));
    CHECK(P("(2,4)") == P("1432"));
    CHECK_THROWS_AS(P("335"), std::invalid_argument);
    CHECK_THROWS_AS(P("(2,4)(4,5)"), std::invalid_argument);
}

TEST_CASE("compose") {
    CHECK(compose(identity_permutation(), P("35142")) == P("35142"));
    CHECK(compose(simple_transposition(2), simple_transposition(3)) == P("1342"));
    Permutation w = P("35142");
    CHECK(compose(w, w.inverse()) == identity_permutation());
    CHECK(compose(w.inverse(), w) == identity_permutation());
    // composition acts as u(v(i))
    CHECK(compose(P("321"), P("213"))(1) == 2);
}

TEST_CASE("length") {
    CHECK(length(identity_permutation()) == 0);
    CHECK(length(P("35142")) == 6);
    CHECK(length(P("4321")) == 6);
    for (const Permutation& w : all_permutations(6)) {
        CHECK(length(w) == long(any_reduced_word(w).size()));
        CHECK(length(w) == long(rothe_diagram(w).size()));
    }
}

TEST_CASE("demazure product") {
    CHECK(demazure_product({1, 1}) == simple_transposition(1));
    CHECK(demazure_product({2, 3, 2}) == P("1432"));
    CHECK(demazure_product({2, 3, 2, 3}) == P("1432"));
    // on reduced words the Demazure product is the ordinary product
    for (const Permutation& w : all_permutations(4))
        for (const Word& a : reduced_words(w)) CHECK(demazure_product(a) == w);
}

TEST_CASE("reduced words") {
    CHECK(reduced_words(identity_permutation()) == std::vector<Word>{{}});
    CHECK(reduced_words(P("321")) == std::vector<Word>{{1, 2, 1}, {2, 1, 2}});
    CHECK(reduced_words(P("1432")) == std::vector<Word>{{2, 3, 2}, {3, 2, 3}});
    for (const Permutation& w : all_permutations(5)) {
        for (const Word& a : reduced_words(w)) {
            CHECK(long(a.size()) == length(w));
            Permutation p;
            for (int i : a) p = compose(p, simple_transposition(i));
            CHECK(p == w);
        }
    }
    CHECK(lex_min_reduced_word(P("321")) == Word{1, 2, 1});
}

TEST_CASE("bruhat order agrees with the rank-matrix oracle on S4") {
    CHECK(bruhat_leq(identity_permutation(), P("35142")));
    CHECK_FALSE(bruhat_leq(P("321"), P("231")));
    CHECK(bruhat_leq(P("1342"), P("1432")));
    for (const Permutation& v : all_permutations(4))
        for (const Permutation& w : all_permutations(4))
            CHECK(bruhat_leq(v, w) == bruhat_leq_rank_oracle(v, w));
}

TEST_CASE("demazure product of a superword dominates in bruhat order") {
    // inserting arbitrary letters into a reduced word can only go up
    for (const Permutation& w : all_permutations(4)) {
        Word a = any_reduced_word(w);
        for (std::size_t pos = 0; pos <= a.size(); ++pos)
            for (int x = 1; x <= 3; ++x) {
                Word b = a;
                b.insert(b.begin() + long(pos), x);
                CHECK(bruhat_leq(w, demazure_product(b)));
            }
    }
}

TEST_CASE("rothe diagram") {
    CHECK(rothe_diagram(identity_permutation()).empty());
    CHECK(rothe_diagram(P("35142")) ==
          Diagram({{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 4}, {4, 2}}, 5));
    for (const Permutation& w : all_permutations(4))
        CHECK(rothe_diagram(w).transpose() == rothe_diagram(w.inverse()));
}

TEST_CASE("code and lehmer decoding") {
    CHECK(code(identity_permutation()).empty());
    CHECK(code(P("35142")) == std::vector<int>{2, 3, 0, 1, 0});
    for (const Permutation& w : all_permutations(5)) CHECK(lehmer_decode(code(w)) == w);
}

TEST_CASE("bottom pipe dream") {
    CHECK(bottom_pipe_dream(identity_permutation()).empty());
    CHECK(bottom_pipe_dream(P("35142")) ==
          Diagram({{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 3}, {4, 1}}, 5));
}

TEST_CASE("dominant permutations") {
    CHECK(is_dominant(identity_permutation()));
    CHECK(is_dominant(longest_element(5)));
    CHECK_FALSE(is_dominant(P("1432")));

    CHECK(dominant_from_partition(Partition{}, 4) == identity_permutation());
    CHECK(dominant_from_partition(staircase(4), 4) == P("4321"));
    CHECK_THROWS_AS(dominant_from_partition(Partition({3, 3}), 4), std::invalid_argument);

    // round-trip over all dominant w in S5
    for (const Permutation& w : all_permutations(5)) {
        if (!is_dominant(w)) continue;
        Partition lambda = dominant_shape(rothe_diagram(w));
        CHECK(dominant_from_partition(lambda, 5) == w);
    }
}

TEST_CASE("dominant component and outer corners of diagrams") {
    CHECK(dominant_component(Diagram({}, 3)).empty());
    CHECK(dominant_component(Diagram({{1, 1}, {1, 3}}, 3)) == Diagram({{1, 1}}, 3));
    auto oc = outer_corners(Diagram({{1, 1}, {1, 3}}, 3));
    CHECK(oc == std::vector<Cell>{{1, 2}, {2, 1}});
    CHECK(outer_corners(Diagram({}, 3)) == std::vector<Cell>{{1, 1}});
}

TEST_CASE("permutation text round trips") {
    for (const Permutation& w : all_permutations(4)) CHECK(parse_permutation(w.to_string()) == w);
    CHECK(P("3,5,1,4,2") == P("35142"));
    CHECK(P("(2,4)(3,5)").to_string() == "14523");
}
