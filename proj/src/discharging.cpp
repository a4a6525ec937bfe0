#include "flexcolor/discharging.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "flexcolor/configurations.hpp"
#include "flexcolor/errors.hpp"

namespace flexcolor {

Rational ChargeMap::total() const {
    Rational t;
    for (const auto& [v, q] : vertex_charge) t += q;
    for (const auto& [f, q] : face_charge) t += q;
    return t;
}

namespace {

std::set<int> outer_set(const PlanarGraph& g) {
    const auto& w = g.outer().walk;
    return {w.begin(), w.end()};
}

bool two_deg3_off_c(const PlanarGraph& g, const std::set<int>& c, int v) {
    int found = 0;
    for (int u : g.neighbors(v))
        if (!c.count(u) && g.degree(u) == 3 && ++found == 2) return true;
    return false;
}

bool face_is_poor(const PlanarGraph& g, const std::set<int>& c, int fid) {
    const Face& f = g.face(fid);
    if (g.outer_face() == fid || f.length() != 4 || !f.is_cycle()) return false;
    bool trigger = false;
    for (int v : f.walk) {
        if (c.count(v) || g.degree(v) > 4) return false;
        if (g.degree(v) == 3 || two_deg3_off_c(g, c, v)) trigger = true;
    }
    return trigger;
}

// Walk indices assigned to the four slots, one entry per matching
// rotation/reflection. Slot codes: 3 and 4 exact off-cycle degrees, 5 for
// degree >= 5 or on the cycle.
std::vector<std::array<int, 4>> pattern_matches(const std::array<VertexTag, 4>& tags,
                                                const std::array<int, 4>& slots) {
    auto fits = [&](VertexTag t, int s) {
        switch (s) {
        case 3: return t == VertexTag::deg3;
        case 4: return t == VertexTag::deg4;
        default: return t == VertexTag::high || t == VertexTag::on_c;
        }
    };
    std::vector<std::array<int, 4>> out;
    for (int rot = 0; rot < 4; ++rot)
        for (int dir : {1, -1}) {
            std::array<int, 4> idx{};
            bool ok = true;
            for (int j = 0; j < 4 && ok; ++j) {
                idx[j] = ((rot + dir * j) % 4 + 4) % 4;
                ok = fits(tags[idx[j]], slots[j]);
            }
            if (ok) out.push_back(idx);
        }
    return out;
}

FaceClass classify_face_impl(const PlanarGraph& g, const std::set<int>& c, int fid) {
    FaceClass cls;
    cls.face = fid;
    const Face& f = g.face(fid);
    if (g.outer_face() == fid || f.length() != 4 || !f.is_cycle()) return cls;
    const auto& w = f.walk;

    for (int i = 0; i < 4; ++i) {
        int v = w[i];
        bool nbr_ok = false;
        for (int j : {(i + 1) % 4, (i + 3) % 4}) {
            int u = w[j];
            if (!c.count(u) && g.degree(u) <= 4) nbr_ok = true;
        }
        if ((g.degree(v) >= 5 || c.count(v)) && nbr_ok) cls.rich_vertices.push_back(v);
    }
    std::sort(cls.rich_vertices.begin(), cls.rich_vertices.end());
    cls.n_r = int(cls.rich_vertices.size());

    cls.poor = face_is_poor(g, c, fid);

    std::array<VertexTag, 4> tags{};
    for (int i = 0; i < 4; ++i) {
        int v = w[i];
        if (c.count(v))
            tags[i] = VertexTag::on_c;
        else if (g.degree(v) == 3)
            tags[i] = VertexTag::deg3;
        else if (g.degree(v) == 4)
            tags[i] = VertexTag::deg4;
        else if (g.degree(v) >= 5)
            tags[i] = VertexTag::high;
        else
            return cls; // interior degree <= 2: no pattern
    }
    cls.pattern = tags;

    cls.very_light = !pattern_matches(tags, {5, 3, 4, 3}).empty();
    cls.light = cls.very_light || !pattern_matches(tags, {5, 3, 5, 3}).empty() ||
                !pattern_matches(tags, {5, 4, 4, 3}).empty() ||
                !pattern_matches(tags, {5, 4, 3, 4}).empty();
    if (!cls.light)
        for (const auto& m : pattern_matches(tags, {5, 4, 5, 3}))
            if (two_deg3_off_c(g, c, w[m[1]])) {
                cls.light = true;
                break;
            }
    return cls;
}

ChargeMap apply_r3_impl(const PlanarGraph& g, const ChargeMap& ch1,
                        const std::vector<FaceClass>& classes, bool throw_on_missing_rich) {
    if (ch1.stage != ChargeStage::ch1)
        throw Error(ErrorCode::precondition_violated, "rich-vertex rule needs stage ch1");
    if (classes.size() != g.faces().size())
        throw Error(ErrorCode::precondition_violated, "one class per face required");
    ChargeMap out = ch1;
    out.stage = ChargeStage::ch2;
    for (const Face& f : g.faces()) {
        if (g.outer_face() == f.id || f.length() != 4 || !f.is_cycle()) continue;
        Rational q = out.face_charge.at(f.id);
        if (!q.negative()) continue;
        const FaceClass& cls = classes[f.id];
        if (cls.n_r == 0) {
            if (throw_on_missing_rich)
                throw Error(ErrorCode::no_rich_vertex_on_negative_face,
                            "face " + std::to_string(f.id) + " has charge " + q.str() +
                                " and no rich vertex");
            continue;
        }
        Rational share = q / cls.n_r;
        for (int v : cls.rich_vertices) {
            out.vertex_charge.at(v) += share;
            out.face_charge.at(f.id) -= share;
        }
    }
    return out;
}

// A face-incident neighbor of v rooting a bud-free v-stalk that avoids the
// outer cycle everywhere except possibly at v itself (rich vertices may lie
// on the cycle). When require_excellent is set the neighbor must extend to
// an excellent witness.
bool rich_vertex_supported(const PlanarGraph& g, const std::vector<int>& c_walk,
                           const std::vector<int>& face_cycle, int v, bool require_excellent) {
    std::vector<int> c_minus_v;
    for (int u : c_walk)
        if (u != v) c_minus_v.push_back(u);
    auto roots = good_neighbors(g, c_minus_v, v);
    int n = int(face_cycle.size());
    int pos = int(std::find(face_cycle.begin(), face_cycle.end(), v) - face_cycle.begin());
    for (int j : {(pos + 1) % n, (pos + n - 1) % n}) {
        int u = face_cycle[j];
        bool is_root = std::any_of(roots.begin(), roots.end(),
                                   [&](const auto& r) { return r.first == u; });
        if (!is_root) continue;
        bool bud_free = false;
        for (const Stalk& s : find_stalks(g, c_minus_v, v))
            if (s.root == u && !s.bud) bud_free = true;
        if (!bud_free) continue;
        if (!require_excellent || is_excellent(g, c_minus_v, v, u)) return true;
    }
    return false;
}

FaceBucket face_bucket(const PlanarGraph& g, const std::vector<int>& c_walk,
                       const FaceClass& cls, const Rational& q) {
    if (!q.negative()) return FaceBucket::nonnegative;
    int n = cls.n_r;
    if (q == Rational(-n, 2) && cls.very_light) return FaceBucket::very_light_full;
    if (cls.light && !(q < Rational(-n, 3)) && q < Rational(-n, 6))
        return FaceBucket::light_range;
    if (!(q < Rational(-n, 6))) {
        bool exempt = cls.pattern && !pattern_matches(*cls.pattern, {5, 5, 4, 3}).empty();
        bool ok = true;
        for (int v : cls.rich_vertices)
            ok = ok && rich_vertex_supported(g, c_walk, g.face(cls.face).walk, v, !exempt);
        if (ok && n > 0) return FaceBucket::good_neighbor_range;
    }
    return FaceBucket::out_of_bucket;
}

} // namespace

ChargeMap initial_charges(const PlanarGraph& g) {
    if (!g.outer_face() || !g.outer().is_cycle())
        throw Error(ErrorCode::precondition_violated, "outer face must be bounded by a cycle");
    std::set<int> c = outer_set(g);
    ChargeMap ch;
    ch.stage = ChargeStage::ch0;
    for (int v : g.vertices())
        ch.vertex_charge[v] = c.count(v) ? Rational(3 * g.degree(v) - 7, 3)
                                         : Rational(g.degree(v) - 4);
    for (const Face& f : g.faces())
        ch.face_charge[f.id] =
            g.outer_face() == f.id ? Rational{} : Rational(f.length() - 4);
    return ch;
}

FaceClass classify_face(const PlanarGraph& g, int face_id) {
    if (!g.outer_face() || !g.outer().is_cycle())
        throw Error(ErrorCode::precondition_violated, "outer face must be bounded by a cycle");
    return classify_face_impl(g, outer_set(g), face_id);
}

std::vector<FaceClass> classify_faces(const PlanarGraph& g) {
    if (!g.outer_face() || !g.outer().is_cycle())
        throw Error(ErrorCode::precondition_violated, "outer face must be bounded by a cycle");
    std::set<int> c = outer_set(g);
    std::vector<FaceClass> out;
    for (const Face& f : g.faces()) out.push_back(classify_face_impl(g, c, f.id));
    return out;
}

ChargeMap apply_r0_r1_r2(const PlanarGraph& g, const ChargeMap& ch0) {
    if (ch0.stage != ChargeStage::ch0)
        throw Error(ErrorCode::precondition_violated, "angle/edge rules need stage ch0");
    std::set<int> c = outer_set(g);
    ChargeMap out = ch0;
    out.stage = ChargeStage::ch1;
    const Rational third = Rational(1, 3);
    const Rational sixth = Rational(1, 6);
    for (const Face& f : g.faces()) {
        if (g.outer_face() == f.id) continue;
        const auto& w = f.walk;
        int len = f.length();
        for (int i = 0; i < len; ++i) {
            int prev = w[(i + len - 1) % len];
            int tip = w[i];
            int next = w[(i + 1) % len];
            bool on_c = c.count(tip) != 0;
            if ((!on_c && g.degree(tip) == 3) || (on_c && g.degree(tip) == 2)) {
                out.face_charge.at(f.id) -= third;
                out.vertex_charge.at(tip) += third;
            }
            if (!on_c && g.degree(tip) == 4) {
                const auto& rot = g.neighbors(tip);
                int p = int(std::find(rot.begin(), rot.end(), prev) - rot.begin());
                int v3 = rot[(p + 2) % 4];
                int v4 = rot[(p + 3) % 4];
                if (!c.count(v3) && !c.count(v4) && g.degree(v3) == 3 && g.degree(v4) == 3) {
                    out.face_charge.at(f.id) -= sixth;
                    out.face_charge.at(g.face_of(v3, tip)) += sixth;
                }
            }
            int u = tip, v = next;
            if (!c.count(u) && !c.count(v) && g.degree(u) == 4 && g.degree(v) == 4 &&
                !two_deg3_off_c(g, c, u) && !two_deg3_off_c(g, c, v)) {
                int other = g.face_of(v, u);
                if (face_is_poor(g, c, other)) {
                    out.face_charge.at(f.id) -= sixth;
                    out.face_charge.at(other) += sixth;
                }
            }
        }
    }
    return out;
}

ChargeMap apply_r3(const PlanarGraph& g, const ChargeMap& ch1,
                   const std::vector<FaceClass>& classes) {
    return apply_r3_impl(g, ch1, classes, true);
}

const char* face_bucket_name(FaceBucket b) {
    switch (b) {
    case FaceBucket::very_light_full: return "very_light_full";
    case FaceBucket::light_range: return "light_range";
    case FaceBucket::good_neighbor_range: return "good_neighbor_range";
    case FaceBucket::nonnegative: return "nonnegative";
    case FaceBucket::out_of_bucket: return "out_of_bucket";
    }
    return "?";
}

DischargeReport verify(const PlanarGraph& g) {
    if (!g.outer_face() || !g.outer().is_cycle() || g.outer().length() > 5)
        throw Error(ErrorCode::precondition_violated,
                    "outer face must be bounded by a (<=5)-cycle");
    if (!g.is_connected())
        throw Error(ErrorCode::precondition_violated, "graph must be connected");
    if (!g.is_triangle_free())
        throw Error(ErrorCode::precondition_violated, "graph must be triangle-free");
    std::set<int> c = outer_set(g);
    for (int v : g.vertices())
        if (!c.count(v) && g.degree(v) < 3)
            throw Error(ErrorCode::precondition_violated,
                        "vertex " + std::to_string(v) + " off the outer cycle has degree " +
                            std::to_string(g.degree(v)));

    ChargeMap ch0 = initial_charges(g);
    std::vector<FaceClass> classes = classify_faces(g);
    ChargeMap ch1 = apply_r0_r1_r2(g, ch0);
    ChargeMap ch2 = apply_r3_impl(g, ch1, classes, false);

    DischargeReport rep;
    rep.total = ch2.total();
    for (const auto& [v, q] : ch2.vertex_charge)
        if (q.negative()) rep.negative_vertices.push_back({v, q});
    for (const auto& [f, q] : ch2.face_charge)
        if (q.negative()) rep.negative_faces.push_back({f, q});
    for (const Face& f : g.faces()) {
        if (g.outer_face() == f.id || f.length() != 4 || !f.is_cycle()) continue;
        FaceCase fc{classes[f.id], ch1.face_charge.at(f.id), ch2.face_charge.at(f.id),
                    FaceBucket::nonnegative};
        fc.bucket = face_bucket(g, g.outer().walk, fc.cls, fc.ch1);
        rep.face_cases.push_back(fc);
    }
    return rep;
}

std::string report_text(const DischargeReport& r) {
    std::string out = "total " + r.total.str() + "\n";
    for (const auto& [v, q] : r.negative_vertices)
        out += "neg vertex " + std::to_string(v) + " " + q.str() + "\n";
    for (const auto& [f, q] : r.negative_faces)
        out += "neg face " + std::to_string(f) + " " + q.str() + "\n";
    for (const FaceCase& fc : r.face_cases) {
        std::string tags;
        if (fc.cls.poor) tags += "poor,";
        if (fc.cls.very_light) tags += "very_light,";
        if (fc.cls.light) tags += "light,";
        tags += face_bucket_name(fc.bucket);
        out += "face " + std::to_string(fc.cls.face) + " class " + tags + " ch1 " +
               fc.ch1.str() + " ch2 " + fc.ch2.str() + "\n";
    }
    return out;
}

} // namespace flexcolor
