#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flexcolor/planar_graph.hpp"
#include "flexcolor/rational.hpp"

namespace flexcolor {

enum class ChargeStage { ch0, ch1, ch2 };

// Vertex and face charges at one stage of the redistribution. Transfers only
// move charge around, so the total is the same at every stage.
struct ChargeMap {
    ChargeStage stage = ChargeStage::ch0;
    std::map<int, Rational> vertex_charge;
    std::map<int, Rational> face_charge; // by face id
    Rational total() const;
};

// Degree descriptor of one boundary-walk vertex: exact small degrees off the
// outer cycle, `high` for degree >= 5 off the cycle, `on_c` for outer-cycle
// vertices. Pattern slots written ">=5" accept both high and on_c.
enum class VertexTag { deg3, deg4, high, on_c };

// Classification of an inner 4-cycle face. Faces of other shapes get an
// empty class (no pattern, no flags, no rich vertices).
//   poor: all four vertices off the outer cycle with degree <= 4, one of them
//         of degree 3 or with two degree-3 neighbors off the cycle.
//   very_light: a (>=5,3,4,3)-face; always also light.
//   light: very light, or (>=5,3,>=5,3), (>=5,4,4,3), (>=5,4,3,4), or
//          (>=5,4,>=5,3) whose degree-4 vertex has two degree-3 neighbors
//          off the outer cycle.
//   rich vertex: degree >= 5 or on the outer cycle, with a face neighbor off
//          the cycle of degree <= 4.
struct FaceClass {
    int face = -1;
    std::optional<std::array<VertexTag, 4>> pattern; // in walk order
    bool poor = false;
    bool light = false;
    bool very_light = false;
    std::vector<int> rich_vertices; // ascending
    int n_r = 0;
};

// Charge before any transfers: deg-4 off the outer cycle C, deg-7/3 on C,
// |f|-4 on inner faces, 0 on the outer face. The total is exactly
// -4 + (2/3)|C|. Requires g to carry an outer face bounded by a cycle.
ChargeMap initial_charges(const PlanarGraph& g);

FaceClass classify_face(const PlanarGraph& g, int face_id);
std::vector<FaceClass> classify_faces(const PlanarGraph& g); // by face id

// The three angle/edge transfer rules, applied to every non-outer face:
//   R0: 1/3 to each angle tip that is off C of degree 3 or on C of degree 2.
//   R1: 1/6 across each angle tip off C of degree 4 whose other two
//       neighbors are off C of degree 3, to the face of the opposite angle.
//   R2: 1/6 across each edge with both ends off C of degree 4, neither end
//       having two degree-3 neighbors off C, to the other face of the edge
//       when that face is poor.
ChargeMap apply_r0_r1_r2(const PlanarGraph& g, const ChargeMap& ch0);

// Every rich vertex of a negatively charged inner 4-cycle face sends an
// equal share that brings the face to exactly zero. Throws
// NoRichVertexOnNegativeFace when a negative such face has no rich vertex.
ChargeMap apply_r3(const PlanarGraph& g, const ChargeMap& ch1,
                   const std::vector<FaceClass>& classes);

// Which admissible (charge, class) shape an inner 4-cycle face lands in
// after the angle/edge rules, writing q for its charge and n for its rich
// vertex count:
//   very_light_full:     q == -n/2 and the face is very light
//   light_range:         -n/3 <= q < -n/6 and the face is light
//   good_neighbor_range: -n/6 <= q < 0 and every rich vertex v has a face
//                        neighbor rooting a bud-free v-stalk avoiding C
//                        (excellent unless the face is a (>=5,>=5,4,3)-face)
//   nonnegative:         q >= 0
//   out_of_bucket:       none of the above; diagnostic, implies the graph
//                        contains one of the small reducible configurations
enum class FaceBucket { very_light_full, light_range, good_neighbor_range, nonnegative,
                        out_of_bucket };

const char* face_bucket_name(FaceBucket b);

struct FaceCase {
    FaceClass cls;
    Rational ch1;
    Rational ch2;
    FaceBucket bucket;
};

struct DischargeReport {
    Rational total; // -4 + (2/3)|C|, invariant across stages
    std::vector<std::pair<int, Rational>> negative_vertices; // final stage, ascending
    std::vector<std::pair<int, Rational>> negative_faces;
    std::vector<FaceCase> face_cases; // inner 4-cycle faces, ascending id
};

// Runs the full ledger ch0 -> ch1 -> ch2 and audits every inner 4-cycle
// face. Negative final entries are reported, not fatal: the total is
// negative by construction, and a negative survivor certifies that a
// reducible configuration exists nearby. Unlike apply_r3, a negative 4-face
// without rich vertices is tagged out_of_bucket and left unpaid. Requires a
// connected triangle-free graph whose outer face is a (<=5)-cycle and whose
// other vertices have degree >= 3.
DischargeReport verify(const PlanarGraph& g);

// Line-oriented serialization: `total <p>/<q>`, `neg vertex <id> <p>/<q>`,
// `neg face <id> <p>/<q>`, `face <id> class <tags> ch1 <p>/<q> ch2 <p>/<q>`
// with <tags> the comma-joined flags and bucket name.
std::string report_text(const DischargeReport& r);

} // namespace flexcolor
