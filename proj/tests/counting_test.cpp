#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace permpat;
using testsupport::brute_count;

TEST_CASE("standardize maps windows to patterns") {
    CHECK(standardize(std::vector<int>{5, 2, 9}) == Pattern::parse("213"));
    CHECK(standardize(std::vector<int>{1, 2, 3}) == Pattern::parse("123"));
    CHECK(standardize(std::vector<int>{7, 3}) == Pattern::parse("21"));
    CHECK(standardize(std::vector<int>{42}) == Pattern::parse("1"));
    CHECK(standardize(std::vector<int>{-3, 0, 7, -8}) == Pattern::parse("2341"));

    // Idempotent: standardizing a pattern's values gives the pattern back.
    for (const auto& p : testsupport::short_patterns())
        CHECK(standardize(p.values()) == p);

    CHECK_THROWS_AS(standardize(std::vector<int>{}), InvalidWindow);
    CHECK_THROWS_AS(standardize(std::vector<int>{4, 4}), InvalidWindow);
}

TEST_CASE("permutation and pattern parsing") {
    CHECK(Permutation::parse("2,3,1,4").values() == std::vector<int>{2, 3, 1, 4});
    CHECK(Permutation::parse(" 2 , 3 , 1 ").values() == std::vector<int>{2, 3, 1});
    CHECK(Permutation::parse("").size() == 0);
    CHECK(Permutation::identity(4) == Permutation::parse("1,2,3,4"));
    CHECK(Permutation::parse("2,3,1,4").str() == "2,3,1,4");
    CHECK(Permutation::parse("3,1,2").at(1) == 3);
    CHECK(Permutation::parse("3,1,2").at(3) == 2);
    CHECK(Permutation::parse("2,3,1,4").complement() == Permutation::parse("3,2,4,1"));

    CHECK_THROWS_AS(Permutation::parse("1,1"), Error);
    CHECK_THROWS_AS(Permutation::parse("1,3"), Error);
    CHECK_THROWS_AS(Permutation::parse("0,1"), Error);
    CHECK_THROWS_AS(Permutation::parse("1,,2"), Error);
    CHECK_THROWS_AS(Permutation::parse("1,x"), Error);

    CHECK(Pattern::parse("132") == Pattern::parse("1,3,2"));
    CHECK(Pattern::parse("132").str() == "132");
    CHECK(Pattern::parse("123").complement() == Pattern::parse("321"));
    CHECK(Pattern::parse("132").complement() == Pattern::parse("312"));
    CHECK_THROWS_AS(Pattern::parse(""), Error);
    CHECK_THROWS_AS(Pattern::parse("122"), Error);
    CHECK_THROWS_AS(Pattern::parse("13"), Error);
}

TEST_CASE("naive counter on known values") {
    CHECK(count_occurrences_naive(Permutation::parse("1,3,2"), Pattern::parse("132")) == 1);
    CHECK(count_occurrences_naive(Permutation::identity(6), Pattern::parse("123")) == 20);
    CHECK(count_occurrences_naive(Permutation::parse("2,3,1,4"), Pattern::parse("123")) == 1);
    CHECK(count_occurrences_naive(Permutation::parse("4,1,2,3"), Pattern::parse("132")) == 0);
    CHECK(count_occurrences_naive(Permutation::parse("3,2,1"), Pattern::parse("12")) == 0);
    CHECK(count_occurrences_naive(Permutation::parse("2,4,1,3"), Pattern::parse("2413")) == 1);
    CHECK(count_occurrences_naive(Permutation::identity(8), Pattern::parse("1234")) ==
          binomial(8, 4));
    // Pattern longer than the permutation: zero occurrences.
    CHECK(count_occurrences_naive(Permutation::parse("1,2"), Pattern::parse("123")) == 0);
    CHECK(count_occurrences_naive(Permutation::parse(""), Pattern::parse("1")) == 0);
}

TEST_CASE("fast counter on known values") {
    CHECK(count_occurrences_fast(Permutation::parse("2,3,1,4"), Pattern::parse("123")) == 1);
    CHECK(count_occurrences_fast(Permutation::parse("2,3,1,4"), Pattern::parse("132")) == 0);
    CHECK(count_occurrences_fast(Permutation::identity(200), Pattern::parse("123")) ==
          binomial(200, 3));
    CHECK(count_occurrences_fast(Permutation::parse("3,2,1"), Pattern::parse("12")) == 0);
    CHECK(count_occurrences_fast(Permutation::parse("3,2,1"), Pattern::parse("21")) == 3);
    CHECK(count_occurrences_fast(Permutation::parse("2,1"), Pattern::parse("123")) == 0);
    CHECK(count_occurrences_fast(Permutation::parse("2,1,3"), Pattern::parse("1")) == 3);
    CHECK_THROWS_AS(count_occurrences_fast(Permutation::identity(5), Pattern::parse("1234")),
                    UnsupportedPattern);
}

TEST_CASE("fast equals naive equals brute force exhaustively") {
    for (int n = 0; n <= 7; ++n) {
        for (const auto& perm : testsupport::all_permutations(n)) {
            BigInt six_sum = 0;
            for (const auto& p : testsupport::short_patterns()) {
                const BigInt fast = count_occurrences_fast(perm, p);
                CAPTURE(perm.str(), p.str());
                CHECK(fast == count_occurrences_naive(perm, p));
                CHECK(fast == brute_count(perm, p));
                if (p.size() == 3) six_sum += fast;
            }
            CHECK(six_sum == binomial(n, 3));
        }
    }
}

TEST_CASE("naive general kernel agrees with brute force for k >= 4") {
    const std::vector<Pattern> pats = {Pattern::parse("1234"), Pattern::parse("2413"),
                                       Pattern::parse("4321"), Pattern::parse("3142"),
                                       Pattern::parse("12345")};
    std::mt19937 rng(7);
    for (int n : {6, 7, 9}) {
        for (int rep = 0; rep < 20; ++rep) {
            const auto perm = testsupport::random_permutation(n, rng);
            for (const auto& p : pats) {
                CAPTURE(perm.str(), p.str());
                CHECK(count_occurrences_naive(perm, p) == brute_count(perm, p));
            }
        }
    }
}

TEST_CASE("fast equals naive on random long permutations") {
    std::mt19937 rng(20240811);
    for (int rep = 0; rep < 60; ++rep) {
        const auto perm = testsupport::random_permutation(50, rng);
        for (const auto& p : testsupport::short_patterns())
            CHECK(count_occurrences_fast(perm, p) == count_occurrences_naive(perm, p));
    }
    for (int rep = 0; rep < 10; ++rep) {
        const auto perm = testsupport::random_permutation(200, rng);
        BigInt six_sum = 0;
        for (const auto& p : testsupport::short_patterns()) {
            const BigInt fast = count_occurrences_fast(perm, p);
            CHECK(fast == count_occurrences_naive(perm, p));
            if (p.size() == 3) six_sum += fast;
        }
        CHECK(six_sum == binomial(200, 3));
    }
}

TEST_CASE("complement symmetry of counts") {
    for (int n = 0; n <= 6; ++n) {
        for (const auto& perm : testsupport::all_permutations(n)) {
            const auto comp = perm.complement();
            for (const auto& p : testsupport::short_patterns())
                CHECK(count_occurrences_fast(perm, p) ==
                      count_occurrences_fast(comp, p.complement()));
        }
    }
}

TEST_CASE("find_occurrences returns lexicographic positions") {
    using Occ = Occurrence;
    CHECK(find_occurrences(Permutation::parse("1,2,3"), Pattern::parse("123")) ==
          std::vector<Occ>{Occ{{1, 2, 3}}});
    CHECK(find_occurrences(Permutation::parse("2,3,1,4"), Pattern::parse("123")) ==
          std::vector<Occ>{Occ{{1, 2, 4}}});
    CHECK(find_occurrences(Permutation::parse("3,2,1"), Pattern::parse("123")).empty());
    CHECK(find_occurrences(Permutation::identity(4), Pattern::parse("123")) ==
          (std::vector<Occ>{Occ{{1, 2, 3}}, Occ{{1, 2, 4}}, Occ{{1, 3, 4}}, Occ{{2, 3, 4}}}));
    CHECK(find_occurrences(Permutation::identity(4), Pattern::parse("123"), 2) ==
          (std::vector<Occ>{Occ{{1, 2, 3}}, Occ{{1, 2, 4}}}));
    CHECK(find_occurrences(Permutation::parse("2,4,1,3"), Pattern::parse("2413")) ==
          std::vector<Occ>{Occ{{1, 2, 3, 4}}});

    // The number of occurrences found always matches the naive count.
    for (int n = 0; n <= 6; ++n)
        for (const auto& perm : testsupport::all_permutations(n))
            for (const auto& p : testsupport::short_patterns())
                CHECK(BigInt(find_occurrences(perm, p).size()) ==
                      count_occurrences_naive(perm, p));
}

TEST_CASE("contains and avoids") {
    CHECK(avoids(Permutation::parse("2,3,1,4"), Pattern::parse("132")));
    CHECK(avoids(Permutation::parse("4,1,2,3"), Pattern::parse("132")));
    CHECK(contains(Permutation::parse("1,3,2,4"), Pattern::parse("132")));
    CHECK(contains(Permutation::parse("2,3,1,4"), Pattern::parse("123")));
    CHECK(avoids(Permutation::parse("3,2,1"), Pattern::parse("12")));
    CHECK(avoids(Permutation::parse(""), Pattern::parse("1")));
    CHECK(contains(Permutation::parse("2,4,1,3"), Pattern::parse("2413")));
    CHECK(avoids(Permutation::parse("1,2,3,4"), Pattern::parse("2413")));

    for (int n = 0; n <= 6; ++n)
        for (const auto& perm : testsupport::all_permutations(n))
            for (const auto& p : testsupport::short_patterns()) {
                const bool has = count_occurrences_naive(perm, p) > 0;
                CHECK(contains(perm, p) == has);
                CHECK(avoids(perm, p) == !has);
            }
}
