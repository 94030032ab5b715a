#include "sgh/gasket.hpp"

namespace sgh {

std::string to_string(const BoundaryValues& bv) {
    return "(" + bv.alpha.to_string() + ", " + bv.beta.to_string() + ", " + bv.gamma.to_string() + ")";
}

std::string_view to_string(Edge e) {
    switch (e) {
        case Edge::Bottom: return "bottom";
        case Edge::Left: return "left";
        case Edge::Right: return "right";
    }
    return "?";
}

Edge parse_edge(std::string_view text) {
    for (Edge e : kAllEdges) {
        if (text == to_string(e)) return e;
    }
    throw ParseError("unknown edge '" + std::string(text) + "' (expected bottom, left or right)");
}

BoundaryValues relabel_to_bottom(const BoundaryValues& bv, Edge e) {
    switch (e) {
        case Edge::Bottom: return bv;
        case Edge::Left: return {bv.gamma, bv.alpha, bv.beta};
        case Edge::Right: return {bv.beta, bv.alpha, bv.gamma};
    }
    return bv;
}

CellAddress::CellAddress(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {
    for (auto d : digits_) {
        if (d > 2) throw ParseError("cell address digit out of range");
    }
}

CellAddress CellAddress::parse(std::string_view text) {
    std::vector<std::uint8_t> digits;
    digits.reserve(text.size());
    for (char ch : text) {
        if (ch < '0' || ch > '2') {
            throw ParseError("malformed cell address '" + std::string(text) + "'");
        }
        digits.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return CellAddress(std::move(digits));
}

bool CellAddress::on_bottom_edge() const {
    for (auto d : digits_) {
        if (d == 0) return false;
    }
    return true;
}

CellAddress CellAddress::child(std::uint8_t digit) const {
    auto digits = digits_;
    digits.push_back(digit);
    return CellAddress(std::move(digits));
}

CellAddress CellAddress::operator+(const CellAddress& suffix) const {
    auto digits = digits_;
    digits.insert(digits.end(), suffix.digits_.begin(), suffix.digits_.end());
    return CellAddress(std::move(digits));
}

std::string CellAddress::to_string() const {
    std::string s;
    s.reserve(digits_.size());
    for (auto d : digits_) s.push_back(static_cast<char>('0' + d));
    return s;
}

Midpoints extend_once(const BoundaryValues& bv) {
    const Rational& a = bv.alpha;
    const Rational& b = bv.beta;
    const Rational& g = bv.gamma;
    const Rational fifth(1, 5);
    return {
        (a + Rational(2) * b + Rational(2) * g) * fifth,
        (Rational(2) * a + b + Rational(2) * g) * fifth,
        (Rational(2) * a + Rational(2) * b + g) * fifth,
    };
}

BoundaryValues child_values(const BoundaryValues& bv, std::uint8_t digit) {
    auto mid = extend_once(bv);
    switch (digit) {
        case 0: return {bv.alpha, std::move(mid.p01), std::move(mid.p02)};
        case 1: return {std::move(mid.p01), bv.beta, std::move(mid.p12)};
        case 2: return {std::move(mid.p02), std::move(mid.p12), bv.gamma};
        default: throw PreconditionError("cell digit must be 0, 1 or 2");
    }
}

BoundaryValues cell_values(const BoundaryValues& bv, const CellAddress& addr) {
    BoundaryValues cur = bv;
    for (auto d : addr.digits()) cur = child_values(cur, d);
    return cur;
}

DyadicPosition to_dyadic(const Rational& position) {
    if (position < Rational(0) || position > Rational(1)) {
        throw PreconditionError("edge position " + position.to_string() + " outside [0,1]");
    }
    const long m = position.dyadic_exponent();
    if (m < 0) throw PreconditionError("edge position " + position.to_string() + " is not dyadic");
    return {position.numerator(), static_cast<unsigned>(m)};
}

CellAddress bottom_cell_starting_at(const mpz_class& k, unsigned m) {
    std::vector<std::uint8_t> digits(m);
    for (unsigned i = 0; i < m; ++i) {
        const bool bit = mpz_tstbit(k.get_mpz_t(), m - 1 - i) != 0;
        digits[i] = bit ? 2 : 1;
    }
    return CellAddress(std::move(digits));
}

std::vector<BoundaryValues> bottom_row(const BoundaryValues& bv, unsigned depth) {
    if (depth > kMaxRowDepth) {
        throw PreconditionError("row depth " + std::to_string(depth) + " exceeds " +
                                std::to_string(kMaxRowDepth));
    }
    std::vector<BoundaryValues> row{bv};
    for (unsigned level = 0; level < depth; ++level) {
        std::vector<BoundaryValues> next;
        next.reserve(row.size() * 2);
        for (const auto& cell : row) {
            next.push_back(child_values(cell, 1));
            next.push_back(child_values(cell, 2));
        }
        row = std::move(next);
    }
    return row;
}

std::vector<Rational> sample_bottom(const BoundaryValues& bv, unsigned depth) {
    auto row = bottom_row(bv, depth);
    std::vector<Rational> values;
    values.reserve(row.size() + 1);
    for (auto& cell : row) values.push_back(std::move(cell.beta));
    values.push_back(bv.gamma);
    return values;
}

Rational eval_bottom(const BoundaryValues& bv, const Rational& position) {
    const auto d = to_dyadic(position);
    if (position == Rational(1)) return bv.gamma;
    return cell_values(bv, bottom_cell_starting_at(d.k, d.m)).beta;
}

Rational eval_dyadic(const BoundaryValues& bv, const EdgePoint& pt) {
    return eval_bottom(relabel_to_bottom(bv, pt.edge), pt.position);
}

Rational closed_form_position(unsigned m, ClosedFormPoint which) {
    const Rational half(1, 2);
    switch (which) {
        case ClosedFormPoint::HalfPower: return Rational::inverse_power_of_two(m);
        case ClosedFormPoint::OneMinusHalfPower: return Rational(1) - Rational::inverse_power_of_two(m);
        case ClosedFormPoint::LeftOfMid: return half - Rational::inverse_power_of_two(m + 1);
        case ClosedFormPoint::RightOfMid: return half + Rational::inverse_power_of_two(m + 1);
    }
    return {};
}

std::array<Rational, 3> closed_form_coefficients(unsigned m, ClosedFormPoint which) {
    if (m < 1) throw PreconditionError("closed forms need m >= 1");
    const Rational three_m = Rational(3).pow(m);
    const Rational five_m = Rational(5).pow(m);
    switch (which) {
        case ClosedFormPoint::HalfPower:
        case ClosedFormPoint::OneMinusHalfPower: {
            const Rational opposite = (three_m - Rational(1)) / (Rational(2) * five_m);
            const Rational near = Rational(1) - Rational(3, 5).pow(m);
            const Rational far = (three_m + Rational(1)) / (Rational(2) * five_m);
            if (which == ClosedFormPoint::HalfPower) return {opposite, near, far};
            return {opposite, far, near};
        }
        case ClosedFormPoint::LeftOfMid:
        case ClosedFormPoint::RightOfMid: {
            const Rational denom = Rational(10) * five_m;
            const Rational opposite = (five_m - Rational(1)) / (Rational(5) * five_m);
            const Rational near = (Rational(3) * three_m + Rational(4) * five_m + Rational(3)) / denom;
            const Rational far = (Rational(4) * five_m - Rational(3) * three_m - Rational(1)) / denom;
            if (which == ClosedFormPoint::LeftOfMid) return {opposite, near, far};
            return {opposite, far, near};
        }
    }
    return {};
}

Rational closed_form_value(const BoundaryValues& bv, unsigned m, ClosedFormPoint which) {
    const auto c = closed_form_coefficients(m, which);
    return c[0] * bv.alpha + c[1] * bv.beta + c[2] * bv.gamma;
}

Rational normal_derivative(const BoundaryValues& bv) {
    return Rational(2) * bv.alpha - bv.beta - bv.gamma;
}

Rational renormalized_apex_difference(const BoundaryValues& bv, unsigned m) {
    BoundaryValues cell = bv;
    for (unsigned i = 0; i < m; ++i) cell = child_values(cell, 0);
    return Rational(5, 3).pow(m) * (Rational(2) * cell.alpha - cell.beta - cell.gamma);
}

}  // namespace sgh
