#include "cggpack/rational.hpp"

#include "cggpack/error.hpp"

namespace cggpack {

std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw precondition_error("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(BigInt(s));
        }
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw precondition_error("zero denominator in rational literal: " + s);
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw precondition_error("malformed rational literal: " + s);
    }
}

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

} // namespace cggpack
