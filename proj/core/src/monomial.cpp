#include "lozenge/monomial.hpp"

namespace lozenge {

std::string Monomial::str() const {
    if (degree() == 0) return "1";
    std::string out;
    auto piece = [&out](char v, int e) {
        if (e == 0) return;
        if (!out.empty()) out += '*';
        out += v;
        if (e > 1) out += '^' + std::to_string(e);
    };
    piece('x', ex);
    piece('y', ey);
    piece('z', ez);
    return out;
}

std::vector<Monomial> monomialsOfDegree(int deg) {
    std::vector<Monomial> out;
    if (deg < 0) return out;
    out.reserve(static_cast<size_t>(deg + 1) * (deg + 2) / 2);
    for (int a = deg; a >= 0; --a)
        for (int b = deg - a; b >= 0; --b) out.emplace_back(a, b, deg - a - b);
    return out;
}

}  // namespace lozenge
