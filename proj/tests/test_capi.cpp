#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "flexcolor.h"

// Exercises the shared-library boundary only: opaque handles, status codes,
// report text and the thread-local error string.

namespace {

const char* kC4 = "planar 4\nv 0 : 1 3\nv 1 : 2 0\nv 2 : 3 1\nv 3 : 0 2\n";
const char* kC4Outer = "planar 4\nv 0 : 1 3\nv 1 : 2 0\nv 2 : 3 1\nv 3 : 0 2\nouter : 0 1 2 3\n";
const char* kTriangle = "planar 3\nv 0 : 1 2\nv 1 : 2 0\nv 2 : 0 1\n";
const char* kStar4 = "planar 5\nv 0 : 1 2 3 4\nv 1 : 0\nv 2 : 0\nv 3 : 0\nv 4 : 0\n";
const char* kL4 = "L 0 : 1 2 3 4\nL 1 : 1 2 3 4\nL 2 : 1 2 3 4\nL 3 : 1 2 3 4\n";
const char* kL1 = "L 0 : 1\nL 1 : 1\nL 2 : 1\nL 3 : 1\n";

struct Handle {
    flexcolor_graph* g;
    explicit Handle(const char* text) : g(flexcolor_graph_parse(text)) {}
    ~Handle() { flexcolor_graph_free(g); }
};

std::string take(char* s) {
    std::string out = s ? s : "";
    flexcolor_string_free(s);
    return out;
}

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("parsing and handle lifetime") {
    Handle g(kC4);
    REQUIRE(g.g != nullptr);
    CHECK(flexcolor_graph_vertex_count(g.g) == 4);

    CHECK(flexcolor_graph_parse("hello") == nullptr);
    CHECK(contains(flexcolor_last_error(), "ParseError"));
    CHECK(flexcolor_graph_parse(nullptr) == nullptr);
}

TEST_CASE("faces report marks the designated outer walk") {
    Handle g(kC4Outer);
    REQUIRE(g.g != nullptr);
    char* out = nullptr;
    REQUIRE(flexcolor_faces(g.g, &out) == FLEXCOLOR_OK);
    std::string text = take(out);
    CHECK(contains(text, "face 0"));
    CHECK(contains(text, "face 1"));
    CHECK(contains(text, " outer :"));
}

TEST_CASE("status codes follow the answer, not just errors") {
    Handle g(kC4);
    REQUIRE(g.g != nullptr);
    char* out = nullptr;

    SUBCASE("colorable lists give OK plus assignment lines") {
        REQUIRE(flexcolor_color(g.g, kL4, &out) == FLEXCOLOR_OK);
        std::string text = take(out);
        CHECK(contains(text, "c 0 "));
        CHECK(contains(text, "c 3 "));
    }
    SUBCASE("starved lists give NO") {
        REQUIRE(flexcolor_color(g.g, kL1, &out) == FLEXCOLOR_NO);
        CHECK(take(out) == "no coloring\n");
    }
    SUBCASE("malformed lists give BAD_INPUT") {
        REQUIRE(flexcolor_color(g.g, "L x", &out) == FLEXCOLOR_BAD_INPUT);
        CHECK(out == nullptr);
        CHECK(contains(flexcolor_last_error(), "ParseError"));
    }
}

TEST_CASE("reducibility verdicts cross the boundary with witnesses") {
    Handle star(kStar4);
    REQUIRE(star.g != nullptr);
    char* out = nullptr;
    int center = 0;
    REQUIRE(flexcolor_check_reducible(star.g, &center, 1, 1, 4, 12, &out) == FLEXCOLOR_NO);
    std::string text = take(out);
    CHECK(contains(text, "reducible no"));
    CHECK(contains(text, "condition FORB"));
    CHECK(contains(text, "set : 0"));

    int leaf = 1;
    REQUIRE(flexcolor_check_reducible(star.g, &leaf, 1, 1, 4, 12, &out) == FLEXCOLOR_OK);
    CHECK(take(out) == "reducible yes\n");
}

TEST_CASE("finder reports and rejects triangles") {
    Handle g(kC4);
    REQUIRE(g.g != nullptr);
    char* out = nullptr;
    REQUIRE(flexcolor_find_config(g.g, &out) == FLEXCOLOR_OK);
    CHECK(contains(take(out), "config small-deg2 vertices: 0"));

    Handle tri(kTriangle);
    REQUIRE(tri.g != nullptr);
    REQUIRE(flexcolor_find_config(tri.g, &out) == FLEXCOLOR_BAD_INPUT);
    CHECK(contains(flexcolor_last_error(), "NotTriangleFree"));
}

TEST_CASE("discharge needs an outer cycle and then balances the ledger") {
    Handle bare(kC4);
    char* out = nullptr;
    REQUIRE(flexcolor_discharge(bare.g, &out) == FLEXCOLOR_BAD_INPUT);
    CHECK(contains(flexcolor_last_error(), "PreconditionViolated"));

    Handle disk(kC4Outer);
    REQUIRE(flexcolor_discharge(disk.g, &out) == FLEXCOLOR_OK);
    std::string text = take(out);
    CHECK(contains(text, "total -4/3"));
    CHECK(contains(text, "class out_of_bucket"));
}

TEST_CASE("count returns the exact value and the bound verdict") {
    Handle g(kC4);
    char* out = nullptr;
    REQUIRE(flexcolor_count(g.g, kL4, 31, &out) == FLEXCOLOR_OK);
    std::string text = take(out);
    CHECK(contains(text, "count 84\n"));
    CHECK(contains(text, "holds yes"));

    REQUIRE(flexcolor_count(g.g, kL1, 31, &out) == FLEXCOLOR_NO);
    CHECK(contains(take(out), "count 0\n"));
}

TEST_CASE("flex sniffs plain versus weighted requests") {
    Handle g(kC4);
    char* out = nullptr;
    REQUIRE(flexcolor_flex(g.g, kL4, "r 0 1\n", 50, 1, &out) == FLEXCOLOR_OK);
    std::string plain = take(out);
    CHECK(contains(plain, "satisfied "));
    CHECK(contains(plain, "of 1\nfraction "));
    CHECK(contains(plain, "c 0 "));

    std::string uniform;
    for (int v = 0; v < 4; ++v)
        for (int c = 1; c <= 4; ++c)
            uniform += "w " + std::to_string(v) + " " + std::to_string(c) + " 1\n";
    REQUIRE(flexcolor_flex(g.g, kL4, uniform.c_str(), 20, 1, &out) == FLEXCOLOR_OK);
    std::string weighted = take(out);
    CHECK(contains(weighted, "value 4/1\n"));
    CHECK(contains(weighted, "total 16/1\n"));
    CHECK(contains(weighted, "ratio 1/4\n"));
}

TEST_CASE("estimate rows add up to the trial count") {
    Handle g(kC4);
    char* out = nullptr;
    REQUIRE(flexcolor_estimate(g.g, kL4, 100, 2, &out) == FLEXCOLOR_OK);
    std::string text = take(out);
    CHECK(contains(text, "trials 100\n"));
    long long sum = 0;
    std::size_t pos = 0;
    while ((pos = text.find("count 0 ", pos)) != std::string::npos) {
        pos = text.find(' ', pos + 8);
        sum += std::stoll(text.substr(pos + 1));
    }
    CHECK(sum == 100);
}

TEST_CASE("epsilon and gen round out the small helpers") {
    char* out = nullptr;
    REQUIRE(flexcolor_epsilon(4, 1, &out) == FLEXCOLOR_OK);
    CHECK(take(out) == "epsilon 1/64\n");
    REQUIRE(flexcolor_epsilon(2, 1, &out) == FLEXCOLOR_BAD_INPUT);
    CHECK(contains(flexcolor_last_error(), "PreconditionViolated"));

    REQUIRE(flexcolor_gen(12, 7, 2, &out) == FLEXCOLOR_OK);
    std::string text = take(out);
    CHECK(contains(text, "planar 12\n"));
    flexcolor_graph* g = flexcolor_graph_parse(text.c_str());
    REQUIRE(g != nullptr);
    CHECK(flexcolor_graph_vertex_count(g) == 12);
    char* again = nullptr;
    REQUIRE(flexcolor_gen(12, 7, 2, &again) == FLEXCOLOR_OK);
    CHECK(take(again) == text);
    flexcolor_graph_free(g);
}
