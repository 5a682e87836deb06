#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"
#include "weq/oracle.hpp"

using namespace weq;
using namespace weq::testing;

TEST_CASE("brute_solutions") {
    CHECK(brute_solutions(eqs({"xy=yx"}), alphabet("A"), 1) ==
          std::vector<Assignment>{assign({{'x', ""}, {'y', ""}}), assign({{'x', ""}, {'y', "A"}}),
                                  assign({{'x', "A"}, {'y', ""}}), assign({{'x', "A"}, {'y', "A"}})});
    CHECK(brute_solutions(eqs({"AB=BA"}), alphabet("AB"), 3).empty());
    CHECK(brute_solutions(eqs({"ABxxyy=xxyyBA"}), alphabet("AB"), 2).empty());
    CHECK(brute_solutions(eqs({"AB=AB"}), alphabet("AB"), 3) == std::vector<Assignment>{Assignment{}});
    CHECK_THROWS_AS(brute_solutions(eqs({"x=A"}), {}, 1), std::invalid_argument);
}

TEST_CASE("brute_sat") {
    CHECK(brute_sat(eqs({"Axy=xyA"}), alphabet("A"), 1));
    CHECK_FALSE(brute_sat(eqs({"xA=Bx"}), alphabet("AB"), 3));
    CHECK(brute_sat(eqs({"="}), alphabet("A"), 0));
}

TEST_CASE("generated instances") {
    const auto sro = gen_instance(InstanceClass::SroRep, 1, GenParams{8, 3, 1, "AB"});
    CHECK(erase_letters(sro[0].lhs) == erase_letters(sro[0].rhs));

    const auto one = gen_instance(InstanceClass::OneVariable, 2, GenParams{10, 1, 1, "AB"});
    CHECK(variables_of(one).size() <= 1);
    CHECK(one[0].length() == 10);

    const auto quad = gen_instance(InstanceClass::Quadratic, 3, GenParams{8, 3, 1, "AB"});
    for (Var v : variables_of(quad)) {
        CHECK(count_occurrences(quad[0].lhs, Term{v}) + count_occurrences(quad[0].rhs, Term{v}) <= 2);
    }

    CHECK(gen_instance(InstanceClass::Random, 7) == gen_instance(InstanceClass::Random, 7));
    CHECK(gen_instance(InstanceClass::Random, 7, GenParams{8, 3, 2, "AB"}).size() == 2);
    CHECK_THROWS_AS(gen_instance(InstanceClass::Random, 1, GenParams{8, 3, 1, ""}), std::invalid_argument);
}

TEST_CASE("benchmark families") {
    for (int family = 1; family <= 5; ++family) {
        CHECK(gen_family(family, 3) == gen_family(family, 3));
        CHECK_FALSE(gen_family(family, 3).empty());
    }
    CHECK(classify(gen_family(1, 9)[0]).strictly_regular_ordered_rep);
    CHECK(gen_family(4, 9).size() == 2);
    CHECK_THROWS_AS(gen_family(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_family(6, 1), std::invalid_argument);
}

TEST_CASE("property: generators stay in their class for 1000 seeds") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        CHECK(classify(gen_instance(InstanceClass::Quadratic, seed)[0]).quadratic);
        CHECK(classify(gen_instance(InstanceClass::SroRep, seed)[0]).strictly_regular_ordered_rep);
        CHECK(classify(gen_instance(InstanceClass::OneVariable, seed)[0]).one_variable);
    }
}

TEST_CASE("property: brute_solutions is monotone in the value bound") {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 100; ++i) {
        const auto sys = std::vector<Equation>{random_equation(rng, 4, "ABxy")};
        const auto small = brute_solutions(sys, alphabet("AB"), 1);
        const auto large = brute_solutions(sys, alphabet("AB"), 2);
        CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
    }
}
