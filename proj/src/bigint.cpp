#include "cubesum/bigint.hpp"

#include <boost/multiprecision/integer.hpp>

namespace cubesum {

namespace {

// Newton seed: 2^(ceil(bits/2)) >= sqrt(v), so the iteration descends.
Int sqrt_seed(const Int& v) {
    const unsigned bits = boost::multiprecision::msb(v) + 1;
    Int seed = 1;
    seed <<= (bits + 1) / 2;
    return seed;
}

}  // namespace

Int isqrt(const Int& v) {
    if (v < 0) throw std::domain_error("isqrt: negative argument");
    if (v < 2) return v;
    Int x = sqrt_seed(v);
    while (true) {
        Int next = (x + v / x) >> 1;
        if (next >= x) break;
        x = next;
    }
    return x;
}

bool perfect_square(const Int& v, Int* root) {
    if (v < 0) return false;
    Int r = isqrt(v);
    if (r * r != v) return false;
    if (root) *root = r;
    return true;
}

Int icbrt(const Int& v) {
    if (v < 0) {
        Int r = icbrt(-v);
        // -r is the floor unless -v was an exact cube.
        if (cube(r) == -v) return Int(-r);
        return Int(-r - 1);
    }
    if (v < 2) return v;
    const unsigned bits = boost::multiprecision::msb(v) + 1;
    Int x = 1;
    x <<= (bits + 2) / 3;
    while (true) {
        Int next = (2 * x + v / (x * x)) / 3;
        if (next >= x) break;
        x = next;
    }
    while (cube(x) > v) --x;
    while (cube(x + 1) <= v) ++x;
    return x;
}

bool perfect_cube(const Int& v, Int* root) {
    Int r = icbrt(v);
    if (cube(r) != v) return false;
    if (root) *root = r;
    return true;
}

Int parse_int(std::string_view text) {
    std::size_t pos = 0;
    if (!text.empty() && text[0] == '-') pos = 1;
    if (pos == text.size())
        throw std::invalid_argument("parse_int: empty integer literal");
    for (std::size_t i = pos; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("parse_int: invalid integer literal '" +
                                        std::string(text) + "'");
    return Int(std::string(text));
}

}  // namespace cubesum
