#include <cmath>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "pcm/weighting.hpp"

using pcm::EigenResult;
using pcm::Error;
using pcm::Method;
using pcm::Norm;
using pcm::Ranking;
using pcm::WeightVector;

TEST_CASE("principal eigenvector of a matrix with closed-form weights") {
    // This matrix has lambda = 4.5 and rational eigenvector entries, so the solver is
    // checked against pencil-and-paper values instead of against itself.
    EigenResult r = pcm::right_eigenvector(fixtures::exact_fraction_4x4());
    CHECK(r.lambda_max == doctest::Approx(fixtures::kExactFractionLambda).epsilon(1e-12));
    REQUIRE(r.right.n() == 4);
    for (int i = 0; i < 4; ++i)
        CHECK(r.right[i] == doctest::Approx(fixtures::kExactFractionRight[i]).epsilon(1e-12));
    CHECK(r.right.norm == Norm::sum1);
    CHECK(r.iterations > 0);
    CHECK(r.residual <= 1e-12);
    CHECK_FALSE(r.left.has_value());
}

TEST_CASE("left eigenvector matches the transposed right solve") {
    pcm::Pcm a = fixtures::exact_fraction_4x4();
    WeightVector left = pcm::left_eigenvector(a);
    for (int i = 0; i < 4; ++i)
        CHECK(left[i] == doctest::Approx(fixtures::kExactFractionLeft[i]).epsilon(1e-11));

    WeightVector viaTranspose = pcm::right_eigenvector(pcm::transpose(a)).right;
    for (int i = 0; i < 4; ++i)
        CHECK(left[i] == doctest::Approx(viaTranspose[i]).epsilon(1e-12));
}

TEST_CASE("frozen solver outputs for the four alternative reference matrix") {
    pcm::Pcm a = fixtures::rank_reversal_4x4();
    EigenResult r = pcm::right_eigenvector(a);
    CHECK(r.lambda_max == doctest::Approx(fixtures::kRankReversalLambda).epsilon(1e-12));
    for (int i = 0; i < 4; ++i)
        CHECK(r.right[i] == doctest::Approx(fixtures::kRankReversalRight[i]).epsilon(1e-10));

    WeightVector il = pcm::inverse_left_weights(a);
    for (int i = 0; i < 4; ++i)
        CHECK(il[i] == doctest::Approx(fixtures::kRankReversalInverseLeft[i]).epsilon(1e-10));

    WeightVector gm = pcm::geometric_mean_weights(a);
    for (int i = 0; i < 4; ++i)
        CHECK(gm[i] == doctest::Approx(fixtures::kRankReversalGm[i]).epsilon(1e-12));
}

TEST_CASE("geometric mean weights have a closed form") {
    pcm::Pcm a = fixtures::exact_fraction_4x4();
    WeightVector gm = pcm::geometric_mean_weights(a);
    double sum = 0.0;
    std::vector<double> raw(4);
    for (int i = 0; i < 4; ++i) {
        double p = 1.0;
        for (int j = 0; j < 4; ++j) p *= a.at(i, j);
        raw[i] = std::pow(p, 0.25);
        sum += raw[i];
    }
    for (int i = 0; i < 4; ++i) CHECK(gm[i] == doctest::Approx(raw[i] / sum).epsilon(1e-14));
}

TEST_CASE("rl geometric mean combines the two eigenvector sides") {
    pcm::Pcm a = fixtures::rank_reversal_4x4();
    WeightVector r = pcm::right_eigenvector(a).right;
    WeightVector il = pcm::inverse_left_weights(a);
    WeightVector rl = pcm::rl_geometric_mean(a);
    double sum = 0.0;
    std::vector<double> raw(4);
    for (int i = 0; i < 4; ++i) {
        raw[i] = std::sqrt(r[i] * il[i]);
        sum += raw[i];
    }
    for (int i = 0; i < 4; ++i) CHECK(rl[i] == doctest::Approx(raw[i] / sum).epsilon(1e-12));
}

TEST_CASE("consistent matrices give identical answers for every method") {
    pcm::Pcm a = pcm::from_weights(std::vector<double>{0.4, 0.3, 0.2, 0.1});
    for (Method m : {Method::em, Method::gm, Method::invleft, Method::rlgm}) {
        WeightVector w = pcm::weights_by(a, m);
        CHECK(w[0] == doctest::Approx(0.4).epsilon(1e-11));
        CHECK(w[3] == doctest::Approx(0.1).epsilon(1e-11));
    }
}

TEST_CASE("normalization targets") {
    WeightVector v{{2.0, 3.0, 5.0}, Norm::none};
    WeightVector s1 = pcm::normalized(v, Norm::sum1);
    CHECK(s1.norm == Norm::sum1);
    CHECK(s1[0] == doctest::Approx(0.2).epsilon(1e-15));
    WeightVector s100 = pcm::normalized(s1, Norm::sum100);
    CHECK(s100.norm == Norm::sum100);
    CHECK(s100[2] == doctest::Approx(50.0).epsilon(1e-13));
    WeightVector untouched = pcm::normalized(v, Norm::none);
    CHECK(untouched[1] == 3.0);
    CHECK(untouched.norm == Norm::none);
    CHECK(std::string(pcm::norm_name(Norm::sum100)) == "sum100");
}

TEST_CASE("the solver reports no convergence when starved of iterations") {
    bool threw = false;
    try {
        pcm::right_eigenvector(fixtures::rank_reversal_4x4(), 1e-12, 1);
    } catch (const pcm::NoConvergence& e) {
        threw = true;
        CHECK(e.best_iterate.size() == 4);
        CHECK(e.iterations >= 1);
        CHECK(e.residual > 0.0);
    }
    CHECK(threw);
}

TEST_CASE("ranking_of sorts descending and merges near ties") {
    WeightVector v{{0.4, 0.25, 0.25, 0.1}, Norm::sum1};
    Ranking r = pcm::ranking_of(v);
    REQUIRE(r.classes.size() == 3);
    CHECK(r.classes[0] == std::vector<int>{0});
    CHECK(r.classes[1] == std::vector<int>{1, 2});
    CHECK(r.classes[2] == std::vector<int>{3});
    CHECK(r.str() == "1>2~3>4");
    CHECK(r.n() == 4);
    CHECK(r.class_of(2) == 1);
    CHECK(r.strictly_prefers(0, 3));
    CHECK_FALSE(r.strictly_prefers(1, 2));
    CHECK_FALSE(r.strict());
    CHECK(r.top() == std::vector<int>{0});
}

TEST_CASE("tie tolerance is relative") {
    WeightVector v{{0.4, 0.4 * (1 - 1e-10), 0.2}, Norm::sum1};
    CHECK(pcm::ranking_of(v, 1e-9).classes.size() == 2);
    CHECK(pcm::ranking_of(v, 1e-12).classes.size() == 3);
}

TEST_CASE("tie merge chains through neighbours") {
    // End members differ by more than the tolerance, but each adjacent gap is inside
    // it, so the whole run collapses into one class.
    WeightVector v{{0.300, 0.298, 0.296, 0.106}, Norm::sum1};
    Ranking r = pcm::ranking_of(v, 0.01);
    REQUIRE(r.classes.size() == 2);
    CHECK(r.classes[0] == std::vector<int>{0, 1, 2});
    CHECK(r.str() == "1~2~3>4");
}

TEST_CASE("reversed flips class order") {
    WeightVector v{{0.4, 0.25, 0.25, 0.1}, Norm::sum1};
    Ranking r = pcm::reversed(pcm::ranking_of(v));
    REQUIRE(r.classes.size() == 3);
    CHECK(r.classes[0] == std::vector<int>{3});
    CHECK(r.classes[1] == std::vector<int>{1, 2});
    CHECK(r.classes[2] == std::vector<int>{0});
    CHECK(r.str() == "4>2~3>1");
}

TEST_CASE("strict ranking predicate") {
    WeightVector v{{0.5, 0.3, 0.2}, Norm::sum1};
    Ranking r = pcm::ranking_of(v);
    CHECK(r.strict());
    CHECK(r.str() == "1>2>3");
}

TEST_CASE("method names round-trip") {
    for (Method m : {Method::em, Method::gm, Method::invleft, Method::rlgm})
        CHECK(pcm::method_from_name(pcm::method_name(m)) == m);
    CHECK_THROWS_AS(pcm::method_from_name("simplex"), Error);
}

TEST_CASE("weights_by dispatches to the named method") {
    pcm::Pcm a = fixtures::rank_reversal_4x4();
    WeightVector gm = pcm::geometric_mean_weights(a);
    WeightVector viaBy = pcm::weights_by(a, Method::gm);
    for (int i = 0; i < 4; ++i) CHECK(viaBy[i] == gm[i]);

    WeightVector em = pcm::weights_by(a, Method::em);
    for (int i = 0; i < 4; ++i)
        CHECK(em[i] == doctest::Approx(fixtures::kRankReversalRight[i]).epsilon(1e-10));
}
