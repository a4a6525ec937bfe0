#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>

#include "fixtures.hpp"
#include "flexcolor/discharging.hpp"
#include "flexcolor/errors.hpp"

using namespace flexcolor;

namespace {

Rational of(long long n, long long d = 1) { return Rational(n, d); }

int fid(const PlanarGraph& g, const std::vector<int>& cycle) {
    auto f = g.find_face_of_cycle(cycle);
    REQUIRE(f.has_value());
    return *f;
}

const FaceCase& face_case(const DischargeReport& rep, int face) {
    for (const FaceCase& fc : rep.face_cases)
        if (fc.cls.face == face) return fc;
    REQUIRE(false);
    static FaceCase dummy;
    return dummy;
}

int count_tag(const FaceClass& cls, VertexTag t) {
    REQUIRE(cls.pattern.has_value());
    return int(std::count(cls.pattern->begin(), cls.pattern->end(), t));
}

std::map<FaceBucket, int> bucket_counts(const DischargeReport& rep) {
    std::map<FaceBucket, int> out;
    for (const FaceCase& fc : rep.face_cases) ++out[fc.bucket];
    return out;
}

// Total charge is fixed by the outer cycle length alone.
void check_totals(const PlanarGraph& g) {
    Rational expect = of(2 * g.outer().length() - 12, 3);
    ChargeMap ch0 = initial_charges(g);
    CHECK(ch0.total() == expect);
    ChargeMap ch1 = apply_r0_r1_r2(g, ch0);
    CHECK(ch1.total() == expect);
    CHECK(verify(g).total == expect);
}

} // namespace

TEST_CASE("rational arithmetic stays normalized") {
    CHECK(of(2, 4) == of(1, 2));
    CHECK(of(1, -2) == of(-1, 2));
    CHECK(of(-4, -6) == of(2, 3));
    CHECK(of(1, 2) + of(1, 3) == of(5, 6));
    CHECK(of(1, 2) - of(2, 3) == of(-1, 6));
    CHECK(-of(1, 3) == of(-1, 3));
    CHECK(of(-2, 3) / 2 == of(-1, 3));
    CHECK(of(-1, 3) < of(-1, 6));
    CHECK(of(-1, 6).negative());
    CHECK(!Rational{}.negative());
    CHECK(Rational{}.str() == "0/1");
    CHECK(of(-2, 3).str() == "-2/3");
    CHECK(of(7).str() == "7/1");
    CHECK_THROWS_AS(of(1, 0), Error);
}

TEST_CASE("initial charges on the pentagonal prism") {
    auto g = fx::pentaprism();
    ChargeMap ch = initial_charges(g);
    CHECK(ch.stage == ChargeStage::ch0);
    for (int v = 0; v < 5; ++v) CHECK(ch.vertex_charge.at(v) == of(2, 3));
    for (int v = 5; v < 10; ++v) CHECK(ch.vertex_charge.at(v) == of(-1));
    CHECK(ch.face_charge.at(fid(g, {0, 1, 6, 5})) == Rational{});
    CHECK(ch.face_charge.at(fid(g, {5, 6, 7, 8, 9})) == of(1));
    CHECK(ch.face_charge.at(*g.outer_face()) == Rational{});
    CHECK(ch.total() == of(-2, 3));
}

TEST_CASE("initial charges need an outer cycle") {
    CHECK_THROWS_AS(initial_charges(fx::cycle_graph(4)), Error);
    auto path = fx::path_graph(3);
    try {
        initial_charges(path.with_outer_face(0));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::precondition_violated);
    }
}

TEST_CASE("pentagonal prism balances every four-face") {
    auto g = fx::pentaprism();
    check_totals(g);
    DischargeReport rep = verify(g);
    CHECK(rep.negative_vertices.empty());
    int pent = fid(g, {5, 6, 7, 8, 9});
    REQUIRE(rep.negative_faces.size() == 1);
    CHECK(rep.negative_faces[0] == std::pair{pent, of(-2, 3)});

    REQUIRE(rep.face_cases.size() == 5);
    for (int i = 0; i < 5; ++i) {
        int j = (i + 1) % 5;
        const FaceCase& fc = face_case(rep, fid(g, {i, j, j + 5, i + 5}));
        CHECK(!fc.cls.poor);
        CHECK(!fc.cls.very_light);
        CHECK(!fc.cls.light);
        CHECK(count_tag(fc.cls, VertexTag::on_c) == 2);
        CHECK(count_tag(fc.cls, VertexTag::deg3) == 2);
        CHECK(fc.cls.n_r == 2);
        CHECK(fc.cls.rich_vertices == std::vector{std::min(i, j), std::max(i, j)});
        CHECK(fc.ch1 == of(-2, 3));
        CHECK(fc.ch2 == Rational{});
        CHECK(fc.bucket == FaceBucket::out_of_bucket);
    }

    std::vector<int> quads;
    for (int i = 0; i < 5; ++i) quads.push_back(fid(g, {i, (i + 1) % 5, (i + 1) % 5 + 5, i + 5}));
    std::sort(quads.begin(), quads.end());
    std::string expect = "total -2/3\nneg face " + std::to_string(pent) + " -2/3\n";
    for (int q : quads)
        expect += "face " + std::to_string(q) + " class out_of_bucket ch1 -2/3 ch2 0/1\n";
    CHECK(report_text(rep) == expect);
}

TEST_CASE("strict rich-vertex rule succeeds when every negative quad has one") {
    auto g = fx::pentaprism();
    ChargeMap ch1 = apply_r0_r1_r2(g, initial_charges(g));
    ChargeMap ch2 = apply_r3(g, ch1, classify_faces(g));
    CHECK(ch2.stage == ChargeStage::ch2);
    CHECK(ch2.total() == of(-2, 3));
    for (int v = 0; v < 10; ++v) CHECK(ch2.vertex_charge.at(v) == Rational{});
    for (int i = 0; i < 5; ++i)
        CHECK(ch2.face_charge.at(fid(g, {i, (i + 1) % 5, (i + 1) % 5 + 5, i + 5})) == Rational{});
    CHECK(ch2.face_charge.at(fid(g, {5, 6, 7, 8, 9})) == of(-2, 3));
}

TEST_CASE("cube quad with no rich vertex stays negative") {
    auto base = fx::cube();
    auto g = base.with_outer_face(fid(base, {0, 2, 3, 4}));
    check_totals(g);

    ChargeMap ch1 = apply_r0_r1_r2(g, initial_charges(g));
    CHECK_THROWS_AS(apply_r3(g, ch1, classify_faces(g)), Error);
    try {
        apply_r3(g, ch1, classify_faces(g));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::no_rich_vertex_on_negative_face);
    }

    DischargeReport rep = verify(g);
    CHECK(rep.total == of(-4, 3));
    CHECK(rep.negative_vertices.empty());
    int bottom = fid(g, {1, 5, 6, 7});
    REQUIRE(rep.negative_faces.size() == 1);
    CHECK(rep.negative_faces[0] == std::pair{bottom, of(-4, 3)});

    const FaceCase& low = face_case(rep, bottom);
    CHECK(low.cls.poor);
    CHECK(low.cls.n_r == 0);
    CHECK(low.ch1 == of(-4, 3));
    CHECK(low.ch2 == of(-4, 3));

    const FaceCase& side = face_case(rep, fid(g, {1, 3, 4, 5}));
    CHECK(!side.cls.poor);
    CHECK(!side.cls.light);
    CHECK(side.cls.n_r == 2);
    CHECK(side.cls.rich_vertices == std::vector{3, 4});
    CHECK(side.ch1 == of(-2, 3));
    CHECK(side.ch2 == Rational{});
    for (const FaceCase& fc : rep.face_cases) CHECK(fc.bucket == FaceBucket::out_of_bucket);
}

TEST_CASE("boundary vertex of degree two earns its keep") {
    auto g = fx::cube5();
    CHECK(g.outer().length() == 5);
    CHECK(g.degree(8) == 2);
    check_totals(g);

    ChargeMap ch0 = initial_charges(g);
    CHECK(ch0.vertex_charge.at(8) == of(-1, 3));
    ChargeMap ch1 = apply_r0_r1_r2(g, ch0);
    CHECK(ch1.vertex_charge.at(8) == Rational{});
    CHECK(ch1.face_charge.at(fid(g, {1, 3, 8, 2, 7})) == Rational{});

    DischargeReport rep = verify(g);
    CHECK(rep.total == of(-2, 3));
    CHECK(rep.negative_vertices.empty());
    int bottom = fid(g, {1, 5, 6, 7});
    REQUIRE(rep.negative_faces.size() == 1);
    CHECK(rep.negative_faces[0] == std::pair{bottom, of(-4, 3)});

    const FaceCase& side = face_case(rep, fid(g, {0, 2, 7, 6}));
    CHECK(side.cls.n_r == 2);
    CHECK(side.cls.rich_vertices == std::vector{0, 2});
    CHECK(side.ch1 == of(-2, 3));
    CHECK(side.ch2 == Rational{});
}

TEST_CASE("classification of the five-wheel quad before wrapping") {
    auto g = fx::fiveredu_gadget();
    FaceClass cls = classify_face(g, fid(g, {0, 1, 2, 3}));
    CHECK(cls.very_light);
    CHECK(cls.light);
    CHECK(!cls.poor);
    CHECK(cls.n_r == 1);
    CHECK(cls.rich_vertices == std::vector{0});
    CHECK(count_tag(cls, VertexTag::high) == 1);
    CHECK(count_tag(cls, VertexTag::deg4) == 1);
    CHECK(count_tag(cls, VertexTag::deg3) == 2);

    auto classes = classify_faces(g);
    CHECK(classes.size() == g.faces().size());
    CHECK(!classes[*g.outer_face()].pattern.has_value());
    CHECK(classes[*g.outer_face()].n_r == 0);
}

TEST_CASE("wrapping a gadget in a square keeps it sound") {
    auto g = fx::wrap_in_square(fx::fiveredu_gadget());
    CHECK(g.outer().length() == 4);
    CHECK(g.is_triangle_free());
    CHECK(g.is_connected());
    CHECK(g.degree(7) == 3);
    CHECK(g.degree(12) == 3);
    check_totals(g);

    // The degree-4 quad vertex has two interior degree-3 neighbors, so the
    // quad both receives and sends a sixth across vertex 2 and only the
    // angle payments remain.
    DischargeReport rep = verify(g);
    const FaceCase& fc = face_case(rep, fid(g, {0, 1, 2, 3}));
    CHECK(fc.cls.very_light);
    CHECK(fc.cls.light);
    CHECK(!fc.cls.poor);
    CHECK(fc.cls.n_r == 1);
    CHECK(fc.cls.rich_vertices == std::vector{0});
    CHECK(fc.ch1 == of(-2, 3));
    CHECK(fc.ch2 == Rational{});
    CHECK(fc.bucket == FaceBucket::out_of_bucket);
}

TEST_CASE("very light quad pays exactly half per rich vertex") {
    auto inner = fx::very_light_gadget();
    CHECK(inner.degree(0) == 5);
    CHECK(inner.degree(2) == 4);
    CHECK(inner.degree(5) == 4);
    auto g = fx::wrap_in_square(inner);
    check_totals(g);

    DischargeReport rep = verify(g);
    const FaceCase& fc = face_case(rep, fid(g, {0, 1, 2, 3}));
    CHECK(fc.cls.very_light);
    CHECK(fc.cls.n_r == 1);
    CHECK(fc.cls.rich_vertices == std::vector{0});
    CHECK(fc.ch1 == of(-1, 2));
    CHECK(fc.ch2 == Rational{});
    CHECK(fc.bucket == FaceBucket::very_light_full);
}

TEST_CASE("adjacent poor quads trade sixths and stay negative") {
    auto g = fx::wrap_in_square(fx::spec4_gadget(true));
    check_totals(g);
    DischargeReport rep = verify(g);

    const FaceCase& q1 = face_case(rep, fid(g, {0, 1, 2, 3}));
    CHECK(q1.cls.poor);
    CHECK(!q1.cls.very_light);
    CHECK(!q1.cls.light);
    CHECK(count_tag(q1.cls, VertexTag::deg4) == 4);
    CHECK(q1.cls.n_r == 0);
    CHECK(q1.ch1 == of(-1, 3));
    CHECK(q1.ch2 == of(-1, 3));
    CHECK(q1.bucket == FaceBucket::out_of_bucket);

    const FaceCase& q2 = face_case(rep, fid(g, {0, 1, 4, 5}));
    CHECK(q2.cls.poor);
    CHECK(q2.cls.n_r == 0);
    CHECK(q2.ch1 == of(-1, 3));
    CHECK(q2.ch2 == of(-1, 3));

    // Long annulus faces between the gadget and the square stay negative
    // too; only the quads concern the audit.
    for (int f : {fid(g, {0, 1, 2, 3}), fid(g, {0, 1, 4, 5})}) {
        auto it = std::find(rep.negative_faces.begin(), rep.negative_faces.end(),
                            std::pair{f, of(-1, 3)});
        CHECK(it != rep.negative_faces.end());
    }
}

TEST_CASE("box grid fills the lighter buckets") {
    auto base = fx::boxgrid(2, 2, 3);
    auto g = base.with_outer_face(fid(base, {0, 12, 16, 4}));
    CHECK(g.is_triangle_free());
    check_totals(g);

    ChargeMap ch1 = apply_r0_r1_r2(g, initial_charges(g));
    CHECK_THROWS_AS(apply_r3(g, ch1, classify_faces(g)), Error);

    DischargeReport rep = verify(g);
    CHECK(rep.total == of(-4, 3));
    CHECK(rep.negative_vertices.empty());
    REQUIRE(rep.face_cases.size() == 31);

    // Faces sharing one outer edge and one extra corner span the range where
    // every rich vertex needs a good neighbor on the face.
    for (auto cycle : {std::vector{12, 22, 26, 16}, std::vector{4, 16, 18, 8}}) {
        const FaceCase& fc = face_case(rep, fid(g, cycle));
        CHECK(!fc.cls.poor);
        CHECK(!fc.cls.light);
        CHECK(fc.cls.n_r == 2);
        CHECK(fc.ch1 == of(-1, 3));
        CHECK(fc.ch2 == Rational{});
        CHECK(fc.bucket == FaceBucket::good_neighbor_range);
    }
    CHECK(face_case(rep, fid(g, {12, 22, 26, 16})).cls.rich_vertices == std::vector{12, 16});
    CHECK(face_case(rep, fid(g, {4, 16, 18, 8})).cls.rich_vertices == std::vector{4, 16});

    for (auto cycle :
         {std::vector{16, 26, 30, 18}, std::vector{12, 22, 23, 13}, std::vector{4, 8, 9, 5}}) {
        const FaceCase& fc = face_case(rep, fid(g, cycle));
        CHECK(fc.cls.light);
        CHECK(!fc.cls.very_light);
        CHECK(fc.cls.n_r == 1);
        CHECK(fc.ch1 == of(-1, 3));
        CHECK(fc.ch2 == Rational{});
        CHECK(fc.bucket == FaceBucket::light_range);
    }

    const FaceCase& corner = face_case(rep, fid(g, {0, 12, 13, 1}));
    CHECK(corner.ch1 == Rational{});
    CHECK(corner.bucket == FaceBucket::nonnegative);

    const FaceCase& far = face_case(rep, fid(g, {17, 21, 33, 29}));
    CHECK(far.cls.poor);
    CHECK(far.cls.n_r == 0);
    CHECK(far.ch1 == of(-1, 3));
    CHECK(far.ch2 == of(-1, 3));
    CHECK(far.bucket == FaceBucket::out_of_bucket);

    // A poor face drawing one sixth over its lone eligible edge, its donor,
    // and a donor paying two poor neighbors at once.
    CHECK(face_case(rep, fid(g, {2, 14, 15, 3})).cls.poor);
    CHECK(face_case(rep, fid(g, {2, 14, 15, 3})).ch1 == of(-1, 6));
    CHECK(!face_case(rep, fid(g, {1, 13, 14, 2})).cls.poor);
    CHECK(face_case(rep, fid(g, {1, 13, 14, 2})).ch1 == of(-1, 6));
    CHECK(face_case(rep, fid(g, {13, 23, 24, 14})).ch1 == of(-1, 6));
    CHECK(face_case(rep, fid(g, {23, 27, 28, 24})).ch1 == of(-1, 3));

    auto counts = bucket_counts(rep);
    CHECK(counts[FaceBucket::nonnegative] == 2);
    CHECK(counts[FaceBucket::light_range] == 3);
    CHECK(counts[FaceBucket::good_neighbor_range] == 2);
    CHECK(counts[FaceBucket::very_light_full] == 0);
    CHECK(counts[FaceBucket::out_of_bucket] == 24);
    CHECK(rep.negative_faces.size() == 24);
}

TEST_CASE("charge stages enforce their order") {
    auto g = fx::pentaprism();
    ChargeMap ch0 = initial_charges(g);
    ChargeMap ch1 = apply_r0_r1_r2(g, ch0);
    auto classes = classify_faces(g);

    CHECK_THROWS_AS(apply_r0_r1_r2(g, ch1), Error);
    CHECK_THROWS_AS(apply_r3(g, ch0, classes), Error);
    classes.pop_back();
    CHECK_THROWS_AS(apply_r3(g, ch1, classes), Error);
}

TEST_CASE("verification rejects unusable inputs") {
    auto hex = fx::cycle_graph(6);
    try {
        verify(hex.with_outer_face(0));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::precondition_violated);
    }

    auto prism = fx::prism();
    try {
        verify(prism.with_outer_face(fid(prism, {0, 1, 2})));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::precondition_violated);
    }

    auto pendant = PlanarGraph::build_from_rotation({{1, 4, 3}, {2, 0}, {3, 1}, {0, 2}, {0}});
    try {
        verify(pendant.with_outer_face(fid(pendant, {0, 1, 2, 3})));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::precondition_violated);
    }
    try {
        verify(pendant.with_outer_face(pendant.face_of(0, 4)));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::precondition_violated);
    }
}

TEST_CASE("totals persist on a deeper ring fixture") {
    check_totals(fx::triple_ring());
    check_totals(fx::wrap_in_square(fx::mainredu_f_gadget()));
}
