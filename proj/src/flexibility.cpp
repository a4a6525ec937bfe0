#include "flexcolor/flexibility.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "flexcolor/configurations.hpp"
#include "flexcolor/errors.hpp"

namespace flexcolor {

namespace {

// Decimal digits of base^exp via a base-1e9 bignum; mul-by-small only.
std::string pow_decimal(long long base, long long exp) {
    const std::uint64_t radix = 1000000000;
    std::vector<std::uint64_t> chunks{1};
    for (long long i = 0; i < exp; ++i) {
        std::uint64_t carry = 0;
        for (auto& c : chunks) {
            std::uint64_t t = c * std::uint64_t(base) + carry;
            c = t % radix;
            carry = t / radix;
        }
        while (carry) {
            chunks.push_back(carry % radix);
            carry /= radix;
        }
    }
    std::string out = std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

// One reducible set peeled per layer, in removal order.
struct Layer {
    PlanarGraph sub;        // g restricted to the peeled set
    std::vector<int> peel;  // its vertices, ascending
};

class Sampler {
public:
    Sampler(const PlanarGraph& g, const ListAssignment& L) : g_(g), l_(L) {
        for (int v : g.vertices()) {
            if (!L.has(v) || L.size(v) < 4)
                throw Error(ErrorCode::precondition_violated,
                            "vertex " + std::to_string(v) + " needs a list of size >= 4");
        }
        if (!g.is_triangle_free())
            throw Error(ErrorCode::not_triangle_free, "sampling needs a triangle-free graph");
        PlanarGraph cur = g;
        while (cur.vertex_count() > 0) {
            Configuration cfg = find_reducible(cur);
            std::set<int> peel(cfg.vertex_set.begin(), cfg.vertex_set.end());
            std::vector<int> rest;
            for (int v : cur.vertices())
                if (!peel.count(v)) rest.push_back(v);
            layers_.push_back({cur.induced_subgraph(cfg.vertex_set), cfg.vertex_set});
            cur = cur.induced_subgraph(rest);
        }
    }

    Coloring sample(std::uint64_t seed) {
        std::vector<std::uint64_t> picks(layers_.size());
        for (auto& p : picks) {
            std::mt19937_64 rng(seed);
            seed = rng();
            p = rng();
        }
        Coloring phi;
        for (std::size_t i = layers_.size(); i-- > 0;) {
            Layer& ly = layers_[i];
            std::vector<std::vector<int>> lists;
            ListAssignment lp;
            for (int v : ly.peel) {
                std::vector<int> cols = l_.at(v);
                for (int u : g_.neighbors(v)) {
                    auto it = phi.assignment.find(u);
                    if (it != phi.assignment.end()) std::erase(cols, it->second);
                }
                lists.push_back(cols);
                lp.set(v, std::move(cols));
            }
            auto [cached, fresh] = caches_[i].try_emplace(std::move(lists));
            if (fresh) cached->second = enumerate_colorings(ly.sub, lp);
            const std::vector<Coloring>& all = cached->second;
            if (all.empty())
                throw Error(ErrorCode::internal_no_coloring,
                            "peeled subgraph lost all colorings after stripping neighbors");
            auto idx = std::size_t(((unsigned __int128)picks[i] * all.size()) >> 64);
            for (const auto& [v, c] : all[idx].assignment) phi.assignment[v] = c;
        }
        if (!phi.valid_for(g_, l_))
            throw Error(ErrorCode::theorem_violation, "sampler produced an improper coloring");
        return phi;
    }

private:
    const PlanarGraph& g_;
    const ListAssignment& l_;
    std::vector<Layer> layers_;
    std::map<std::size_t, std::map<std::vector<std::vector<int>>, std::vector<Coloring>>> caches_;
};

void require_trials(long long trials) {
    if (trials < 1) throw Error(ErrorCode::precondition_violated, "need at least one trial");
}

} // namespace

std::string Epsilon::str() const { return "1/" + denominator; }

Epsilon theoretical_epsilon(int k, int b) {
    if (k < 3 || b < 1)
        throw Error(ErrorCode::precondition_violated, "need k >= 3 and b >= 1");
    Epsilon e;
    e.k = k;
    e.b = b;
    e.exponent = (long long)b * (k - 1);
    e.denominator = pow_decimal(k, e.exponent);
    return e;
}

Coloring sample_coloring(const PlanarGraph& g, const ListAssignment& L, std::uint64_t seed) {
    return Sampler(g, L).sample(seed);
}

SampleStats estimate_probabilities(const PlanarGraph& g, const ListAssignment& L,
                                   long long trials, std::uint64_t seed) {
    require_trials(trials);
    Sampler sampler(g, L);
    SampleStats stats;
    stats.trials = trials;
    for (long long t = 0; t < trials; ++t) {
        Coloring phi = sampler.sample(seed + std::uint64_t(t));
        for (const auto& [v, c] : phi.assignment) ++stats.counts[{v, c}];
    }
    long long least = trials;
    for (int v : g.vertices())
        for (int c : L.at(v)) {
            auto it = stats.counts.find({v, c});
            least = std::min(least, it == stats.counts.end() ? 0 : it->second);
        }
    stats.min_empirical_prob = Rational(g.vertex_count() ? least : trials, trials);
    return stats;
}

RequestOutcome satisfy_request(const PlanarGraph& g, const ListAssignment& L, const Request& r,
                               long long trials, std::uint64_t seed) {
    require_trials(trials);
    std::set<int> seen;
    for (auto [v, c] : r.entries) {
        if (!g.has_vertex(v) || !L.has(v) ||
            !std::count(L.at(v).begin(), L.at(v).end(), c) || !seen.insert(v).second)
            throw Error(ErrorCode::precondition_violated,
                        "request must name distinct vertices with listed colors");
    }
    Sampler sampler(g, L);
    RequestOutcome out;
    out.satisfied = -1;
    for (long long t = 0; t < trials; ++t) {
        Coloring phi = sampler.sample(seed + std::uint64_t(t));
        long long hits = 0;
        for (auto [v, c] : r.entries)
            if (phi.at(v) == c) ++hits;
        if (hits > out.satisfied) {
            out.satisfied = hits;
            out.best = std::move(phi);
        }
    }
    out.fraction = r.entries.empty() ? Rational(1) : Rational(out.satisfied, r.entries.size());
    return out;
}

WeightedOutcome satisfy_weighted(const PlanarGraph& g, const ListAssignment& L,
                                 const WeightedRequest& w, long long trials, std::uint64_t seed) {
    require_trials(trials);
    std::set<std::pair<int, int>> seen;
    WeightedOutcome out;
    for (const auto& e : w.entries) {
        if (!g.has_vertex(e.vertex) || !L.has(e.vertex) ||
            !std::count(L.at(e.vertex).begin(), L.at(e.vertex).end(), e.color) ||
            e.weight.negative() || !seen.insert({e.vertex, e.color}).second)
            throw Error(ErrorCode::precondition_violated,
                        "weights must be nonnegative on distinct (vertex, listed color) pairs");
        out.total += e.weight;
    }
    Sampler sampler(g, L);
    bool have_best = false;
    for (long long t = 0; t < trials; ++t) {
        Coloring phi = sampler.sample(seed + std::uint64_t(t));
        Rational value;
        for (const auto& e : w.entries)
            if (phi.at(e.vertex) == e.color) value += e.weight;
        if (!have_best || out.value < value) {
            have_best = true;
            out.value = value;
            out.best = std::move(phi);
        }
    }
    out.ratio = out.total == Rational(0) ? Rational(1) : out.value / out.total;
    return out;
}

CountingBound check_counting_bound(const PlanarGraph& g, const ListAssignment& L, int b) {
    if (b < 1) throw Error(ErrorCode::precondition_violated, "need b >= 1");
    if (g.vertex_count() > 31)
        throw Error(ErrorCode::cap_exceeded, "counting is exhaustive; 31 vertices at most");
    CountingBound out;
    out.count = count_colorings(g, L);
    int n = g.vertex_count();
    out.bound = std::exp2(double(n) / b);
    unsigned __int128 limit = (unsigned __int128)1 << n;
    unsigned __int128 acc = 1;
    for (int i = 0; i < b && !out.holds && acc; ++i) {
        acc *= out.count;
        if (acc >= limit) out.holds = true;
    }
    return out;
}

Rational audit_avoidance(const PlanarGraph& g, const ListAssignment& L,
                         const std::vector<int>& verts, int color, long long trials,
                         std::uint64_t seed) {
    require_trials(trials);
    for (int v : verts)
        if (!g.has_vertex(v))
            throw Error(ErrorCode::precondition_violated, "unknown vertex in avoidance set");
    Sampler sampler(g, L);
    long long avoided = 0;
    for (long long t = 0; t < trials; ++t) {
        Coloring phi = sampler.sample(seed + std::uint64_t(t));
        if (std::none_of(verts.begin(), verts.end(),
                         [&](int v) { return phi.at(v) == color; }))
            ++avoided;
    }
    return Rational(avoided, trials);
}

} // namespace flexcolor
