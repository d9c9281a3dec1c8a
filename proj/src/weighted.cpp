#include "cggpack/weighted.hpp"

#include "cggpack/error.hpp"

#include <algorithm>
#include <map>

namespace cggpack {

WeightedCgg::WeightedCgg(int k) : k_(k) {
    if (k < 2) throw precondition_error("weighted cgg needs at least 2 vertices");
    w_.assign(static_cast<std::size_t>(k) * (k - 1) / 2, Rat(0));
}

WeightedCgg::WeightedCgg(int k, std::vector<Rat> by_length) : WeightedCgg(k) {
    if (static_cast<int>(by_length.size()) != max_length())
        throw precondition_error("length-uniform weights need one entry per length 1..k/2");
    for (const auto& w : by_length)
        if (w < 0) throw precondition_error("negative edge weight");
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) w_[index(u, v)] = by_length[pair_length(u, v) - 1];
}

int WeightedCgg::index(int u, int v) const {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= k_ || u == v) throw precondition_error("weight lookup outside edge set");
    return u * k_ - u * (u + 1) / 2 + (v - u - 1);
}

const Rat& WeightedCgg::weight(int u, int v) const { return w_[index(u, v)]; }

void WeightedCgg::set_weight(int u, int v, Rat w) {
    if (w < 0) throw precondition_error("negative edge weight");
    w_[index(u, v)] = std::move(w);
}

std::optional<std::vector<Rat>> WeightedCgg::length_uniform() const {
    std::vector<Rat> by_length(max_length());
    std::vector<bool> seen(max_length(), false);
    for (int u = 0; u < k_; ++u)
        for (int v = u + 1; v < k_; ++v) {
            int l = pair_length(u, v);
            if (!seen[l - 1]) {
                by_length[l - 1] = weight(u, v);
                seen[l - 1] = true;
            } else if (by_length[l - 1] != weight(u, v)) {
                return std::nullopt;
            }
        }
    return by_length;
}

Rat WeightedCgg::total_weight() const {
    Rat t = 0;
    for (const auto& w : w_) t += w;
    return t;
}

WeightedCgg weighted_representation(const Graph& g, const IntervalPartition& p) {
    if (!partition_valid(g, p))
        throw precondition_error("weighted representation needs a valid interval partition");
    WeightedCgg w(p.parts());
    std::vector<std::vector<long long>> cross(p.parts(), std::vector<long long>(p.parts(), 0));
    for (const auto& [u, v] : g.edges) cross[p.part_of(u)][p.part_of(v)] += 1;
    for (int i = 0; i < p.parts(); ++i)
        for (int j = i + 1; j < p.parts(); ++j) w.set_weight(i, j, Rat(cross[i][j] + cross[j][i]));
    return w;
}

UniformizeResult uniformize_by_rotation(const WeightedCgg& w) {
    const int k = w.k();
    std::vector<Rat> by_length(w.max_length(), Rat(0));
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) by_length[w.pair_length(u, v) - 1] += w.weight(u, v);
    if (k % 2 == 0 && w.max_length() >= 1) by_length[w.max_length() - 1] *= 2;

    UniformizeResult res{WeightedCgg(k, by_length), by_length, {}};

    // One copy per rotation, phi = 1 each; coincident weight patterns merge.
    std::map<std::vector<Rat>, std::size_t> seen;
    for (int r = 0; r < k; ++r) {
        WeightedCgg rot(k);
        std::vector<Rat> key;
        key.reserve(static_cast<std::size_t>(k) * (k - 1) / 2);
        for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v) {
                Rat val = w.weight(((u - r) % k + k) % k, ((v - r) % k + k) % k);
                rot.set_weight(u, v, val);
                key.push_back(std::move(val));
            }
        auto it = seen.find(key);
        if (it != seen.end()) {
            auto& copy = res.packing[it->second];
            copy.multiplicity += 1;
            copy.phi += 1;
        } else {
            seen.emplace(std::move(key), res.packing.size());
            res.packing.push_back(RotationCopy{r, 1, Rat(1), std::move(rot)});
        }
    }

    if (!rotation_packing_satisfies(res.packing, res.uniform))
        throw verification_error("rotation packing failed the exact packing equation");
    return res;
}

bool rotation_packing_satisfies(const std::vector<RotationCopy>& packing,
                                const WeightedCgg& target) {
    const int k = target.k();
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) {
            Rat sum = 0;
            for (const auto& copy : packing) {
                if (copy.weights.k() != k) return false;
                sum += copy.phi * copy.weights.weight(u, v);
            }
            if (sum != target.weight(u, v)) return false;
        }
    return true;
}

LongEdgeReport long_edge_condition(const Graph& g, const IntervalPartition& p, int k) {
    if (k <= 2) throw precondition_error("long edge condition needs k > 2");
    if (p.parts() != 2 * k)
        throw precondition_error("long edge condition needs a partition into 2k parts");
    if (!partition_valid(g, p))
        throw precondition_error("long edge condition needs a valid interval partition");
    LongEdgeReport rep;
    rep.k = k;
    rep.c_k = 16LL * k;
    rep.e_sizes.assign(k, 0);
    for (const auto& [u, v] : g.edges) {
        int l = part_pair_length(p, p.part_of(u), p.part_of(v));
        rep.e_sizes[l - 1] += 1;
    }
    rep.e1_nonempty = rep.e_sizes[0] > 0;
    long long shorter = 0;
    for (int l = 1; l < k; ++l) shorter += rep.e_sizes[l - 1];
    rep.holds = rep.e1_nonempty && rep.e_sizes[k - 1] >= rep.c_k * shorter;
    return rep;
}

} // namespace cggpack
