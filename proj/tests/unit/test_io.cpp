#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "pcm/io.hpp"

using pcm::Error;
using pcm::Pcm;
using pcm::Rational;
using pcm::errc;

namespace {

std::string render_json(const Pcm& a) {
    std::ostringstream out;
    pcm::write_matrix_json(a, out);
    return out.str();
}

std::string render_csv(const Pcm& a) {
    std::ostringstream out;
    pcm::write_matrix_csv(a, out);
    return out.str();
}

Pcm parse_json(const std::string& text) {
    std::istringstream in(text);
    return pcm::read_matrix_json(in, "test");
}

Pcm parse_csv(const std::string& text) {
    std::istringstream in(text);
    return pcm::read_matrix_csv(in, "test");
}

}  // namespace

TEST_CASE("json cells may be integers, fractions, or decimals") {
    Pcm a = parse_json(R"({"format":"pcm-matrix-v1","n":2,"entries":[[1,"1/3"],[3,1]]})");
    CHECK(a.exact());
    CHECK(a.rat(0, 1) == Rational(1, 3));
    CHECK(a.rat(1, 0) == Rational(3));

    Pcm b = parse_json(R"({"entries":[[1,0.5],[2,1]]})");
    CHECK_FALSE(b.exact());
    CHECK(b.at(0, 1) == 0.5);
}

TEST_CASE("one decimal cell demotes the whole matrix to floating") {
    Pcm a = parse_json(R"({"entries":[[1,"1/3",4.0],[3,1,2],["1/4","1/2",1]]})");
    CHECK_FALSE(a.exact());
    CHECK(a.at(0, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("json reader rejects malformed documents") {
    CHECK_THROWS_AS(parse_json("not json"), Error);
    CHECK_THROWS_AS(parse_json(R"({"format":"pcm-matrix-v1"})"), Error);
    CHECK_THROWS_AS(parse_json(R"({"entries":[1,2]})"), Error);
    CHECK_THROWS_AS(parse_json(R"({"entries":[[1,"x"],[2,1]]})"), Error);
    CHECK_THROWS_AS(parse_json(R"({"entries":[[1,true],[2,1]]})"), Error);
    CHECK_THROWS_AS(parse_json(R"({"n":3,"entries":[[1,2],["1/2",1]]})"), Error);
    // Grid errors surface through the same validation as hand-built matrices.
    CHECK_THROWS_AS(parse_json(R"({"entries":[[1,2],[1,1]]})"), Error);
}

TEST_CASE("csv reader skips comments and trims cells") {
    Pcm a = parse_csv("# judgment matrix\n1, 1/3\n3 ,1\n");
    CHECK(a.exact());
    CHECK(a.rat(0, 1) == Rational(1, 3));

    Pcm b = parse_csv("1,0.25\n4.0,1\n");
    CHECK_FALSE(b.exact());
    CHECK(b.at(1, 0) == 4.0);
}

TEST_CASE("csv reader error paths") {
    CHECK_THROWS_AS(parse_csv(""), Error);
    CHECK_THROWS_AS(parse_csv("# only comments\n"), Error);
    CHECK_THROWS_AS(parse_csv("1,,2\n"), Error);
    CHECK_THROWS_AS(parse_csv("1,abc\n2,1\n"), Error);
    try {
        parse_csv("1,abc\n2,1\n");
    } catch (const Error& e) {
        CHECK(e.code() == errc::parse_error);
    }
}

TEST_CASE("exact matrices round-trip bit for bit") {
    Pcm a = fixtures::exact_fraction_4x4();

    std::string j1 = render_json(a);
    std::string j2 = render_json(parse_json(j1));
    CHECK(j1 == j2);
    CHECK(parse_json(j1).exact());

    std::string c1 = render_csv(a);
    std::string c2 = render_csv(parse_csv(c1));
    CHECK(c1 == c2);
    CHECK(c1.rfind("# pcm-matrix-csv-v1\n", 0) == 0);
}

TEST_CASE("floating matrices round-trip through shortest decimals") {
    Pcm a = fixtures::near_consistent_reversal();

    std::string j1 = render_json(a);
    Pcm back = parse_json(j1);
    CHECK(render_json(back) == j1);
    for (int i = 0; i < a.n(); ++i)
        for (int k = 0; k < a.n(); ++k) CHECK(back.at(i, k) == a.at(i, k));

    std::string c1 = render_csv(a);
    CHECK(render_csv(parse_csv(c1)) == c1);
}

TEST_CASE("file dispatch picks the format from the extension") {
    std::string dir = "io_test_tmp";
    std::remove((dir + ".json").c_str());
    std::remove((dir + ".csv").c_str());

    Pcm a = fixtures::rank_reversal_4x4();
    pcm::write_matrix_file(a, dir + ".json");
    pcm::write_matrix_file(a, dir + ".csv");

    Pcm fromJson = pcm::read_matrix_file(dir + ".json");
    Pcm fromCsv = pcm::read_matrix_file(dir + ".csv");
    CHECK(fromJson.exact());
    CHECK(fromCsv.exact());
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CHECK(fromJson.rat(i, j) == a.rat(i, j));
            CHECK(fromCsv.rat(i, j) == a.rat(i, j));
        }

    std::ifstream probe(dir + ".json");
    std::string first;
    std::getline(probe, first);
    CHECK(first == "{");

    CHECK_THROWS_AS(pcm::read_matrix_file("does_not_exist.json"), Error);
    std::remove((dir + ".json").c_str());
    std::remove((dir + ".csv").c_str());
}

TEST_CASE("fnv1a digests") {
    CHECK(pcm::fnv1a_hex("") == "cbf29ce484222325");
    CHECK(pcm::fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(pcm::fnv1a_hex("hello") == pcm::fnv1a_hex("hello"));
    CHECK(pcm::fnv1a_hex("hello") != pcm::fnv1a_hex("hellp"));

    std::string path = "digest_tmp.txt";
    {
        std::ofstream out(path, std::ios::binary);
        out << "abc";
    }
    CHECK(pcm::file_digest(path) == pcm::fnv1a_hex("abc"));
    std::remove(path.c_str());
    CHECK_THROWS_AS(pcm::file_digest(path), Error);
}
