#include "cggpack/rotation_class.hpp"

#include "cggpack/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cggpack {

int RotationClass::m() const { return std::accumulate(gaps.begin(), gaps.end(), 0); }

int RotationClass::minimal_period() const {
    const int k = this->k();
    for (int d = 1; d <= k; ++d) {
        if (k % d != 0) continue;
        bool periodic = true;
        for (int i = 0; i < k && periodic; ++i) periodic = gaps[i] == gaps[i % d];
        if (periodic) return d;
    }
    return k;
}

RotationClass make_rotation_class(std::vector<int> gaps) {
    if (gaps.empty()) throw precondition_error("empty gap vector");
    for (int g : gaps)
        if (g < 1) throw precondition_error("gap vector entries must be positive");
    const int k = static_cast<int>(gaps.size());
    std::vector<int> best = gaps;
    std::vector<int> rot(k);
    for (int r = 1; r < k; ++r) {
        for (int i = 0; i < k; ++i) rot[i] = gaps[(i + r) % k];
        if (rot < best) best = rot;
    }
    return RotationClass{std::move(best)};
}

std::vector<int> gaps_of_positions(const std::vector<int>& positions, int m) {
    if (positions.size() < 2) throw precondition_error("gap vector needs at least 2 positions");
    if (!std::is_sorted(positions.begin(), positions.end()))
        throw precondition_error("positions must be sorted");
    std::vector<int> gaps;
    gaps.reserve(positions.size());
    for (std::size_t i = 0; i + 1 < positions.size(); ++i)
        gaps.push_back(positions[i + 1] - positions[i]);
    gaps.push_back(m - positions.back() + positions.front());
    return gaps;
}

std::vector<int> positions_of_gaps(const std::vector<int>& gaps, int m, int offset) {
    std::vector<int> pos;
    pos.reserve(gaps.size());
    int p = offset % m;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        pos.push_back(p);
        p = (p + gaps[i]) % m;
    }
    return pos;
}

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw precondition_error(std::string("configuration parameter out of range: ") + what);
}

} // namespace

RotationClass config_s(int m, int i, int i_max) {
    const int mp = (m - 1) / 2;
    require(m >= 5 && m % 2 == 1, "odd m >= 5");
    require(i >= 1 && i_max <= mp, "1 <= i, i_max <= m'");
    require(i < i_max, "i < i_max"); // i == i_max is the degenerate diagonal case
    return make_rotation_class({i, i_max - i, i, m - i_max - i});
}

RotationClass config_s_prime(int m, int i, int i0) {
    const int mp = (m - 1) / 2;
    require(m >= 9 && m % 2 == 1, "odd m >= 9");
    require(i >= 1 && 4 * i <= mp, "1 <= i <= m'/4");
    require(i0 >= 1 && 2 * i0 <= mp, "1 <= i0 <= m'/2");
    return make_rotation_class({i, i0, i, m - 2 * i - i0});
}

RotationClass config_s_dprime(int m, int i, int i0) {
    const int mp = (m - 1) / 2;
    require(m >= 9 && m % 2 == 1, "odd m >= 9");
    require(i >= 1 && 4 * i <= mp, "1 <= i <= m'/4");
    require(2 * i0 > mp && i0 <= mp, "m'/2 < i0 <= m'");
    require(i0 - 2 * i >= 1, "i0 - 2i >= 1");
    return make_rotation_class({i, m - i0, i, i0 - 2 * i});
}

RotationClass config_hex_s(int m, int k, int i) {
    const int mp = (m - 1) / 2;
    require(m % 2 == 1 && k > 2, "odd m, k > 2");
    require(i >= k && i <= mp, "k <= i <= m'");
    const int q = i / k, r = i % k;
    std::vector<int> gaps;
    for (int a = 0; a < k - 1; ++a) gaps.push_back(q);
    gaps.push_back(q + r);
    for (int a = 0; a < k - 1; ++a) gaps.push_back(q);
    const int used = (2 * k - 1) * q + r; // = 2i - q - r
    require(m - used >= 1, "closing gap positive");
    gaps.push_back(m - used);
    return make_rotation_class(std::move(gaps));
}

RotationClass config_hex_s_ij(int m, int k, int i, int j) {
    const int mp = (m - 1) / 2;
    require(m % 2 == 1 && k > 2, "odd m, k > 2");
    require(i >= 1 && i < k, "1 <= i < k");
    require(j >= 1 && 2 * k * j <= mp, "1 <= j <= m'/(2k)");
    require(i + (2 * k - 2) * j <= mp, "i + (2k-2)j <= m'");
    std::vector<int> gaps;
    for (int a = 0; a < k - 1; ++a) gaps.push_back(j);
    gaps.push_back(i);
    for (int a = 0; a < k - 1; ++a) gaps.push_back(j);
    gaps.push_back(m - i - (2 * k - 2) * j);
    return make_rotation_class(std::move(gaps));
}

} // namespace cggpack
