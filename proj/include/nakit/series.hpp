#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nakit/rational.hpp"

namespace nakit {

/// Formal power series with zero constant term, truncated to a fixed order:
/// c1 t + c2 t^2 + ... + cN t^N. All arithmetic stays at order N.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(std::size_t order) : c_(order) {}
    explicit TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

    static TruncatedSeries identity(std::size_t order) {
        TruncatedSeries t(order);
        if (order >= 1) t.c_[0] = 1;
        return t;
    }

    std::size_t order() const { return c_.size(); }
    /// Coefficient of t^k, 1-based.
    const Rational& coeff(std::size_t k) const { return c_.at(k - 1); }
    Rational& coeff(std::size_t k) { return c_.at(k - 1); }

    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

    TruncatedSeries operator+(const TruncatedSeries& o) const {
        TruncatedSeries r(*this);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
        return r;
    }
    TruncatedSeries operator*(const Rational& s) const {
        TruncatedSeries r(*this);
        for (auto& x : r.c_) x *= s;
        return r;
    }

    /// Product truncated to this order.
    TruncatedSeries operator*(const TruncatedSeries& o) const {
        TruncatedSeries r(order());
        for (std::size_t i = 1; i <= order(); ++i) {
            if (is_zero(coeff(i))) continue;
            for (std::size_t j = 1; i + j <= order(); ++j)
                r.c_[i + j - 1] += coeff(i) * o.coeff(j);
        }
        return r;
    }

    /// g(-t): flips the sign of the odd coefficients.
    TruncatedSeries reflected() const {
        TruncatedSeries r(*this);
        for (std::size_t k = 1; k <= order(); k += 2) r.coeff(k) = -r.coeff(k);
        return r;
    }

    TruncatedSeries negated() const {
        TruncatedSeries r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    std::optional<std::size_t> first_nonzero() const {
        for (std::size_t k = 1; k <= order(); ++k)
            if (!is_zero(coeff(k))) return k;
        return std::nullopt;
    }

private:
    std::vector<Rational> c_;
};

/// g(f(t)) truncated; f must have zero constant term (guaranteed by the type)
/// and the same truncation order.
inline TruncatedSeries compose(const TruncatedSeries& g, const TruncatedSeries& f) {
    if (g.order() != f.order()) throw std::invalid_argument("compose: order mismatch");
    std::size_t n = g.order();
    TruncatedSeries result(n);
    TruncatedSeries power = TruncatedSeries::identity(n);  // will hold f^k
    for (std::size_t k = 1; k <= n; ++k) {
        power = k == 1 ? f : power * f;
        if (!is_zero(g.coeff(k))) result = result + power * g.coeff(k);
    }
    return result;
}

/// Compositional inverse h with g(h(t)) = h(g(t)) = t to the truncation order,
/// by triangular coefficient solving. Requires c1 != 0.
inline TruncatedSeries comp_inverse(const TruncatedSeries& g) {
    if (g.order() < 1 || is_zero(g.coeff(1)))
        throw std::invalid_argument("comp_inverse: series must have c1 != 0");
    std::size_t n = g.order();
    TruncatedSeries h(n);
    h.coeff(1) = Rational(1) / g.coeff(1);
    for (std::size_t k = 2; k <= n; ++k) {
        // with h_k unknown, coefficient of t^k in g(h) is g_1 h_k + (terms from h_1..h_{k-1})
        TruncatedSeries partial = compose(g, h);
        h.coeff(k) = -partial.coeff(k) / g.coeff(1);
    }
    return h;
}

/// Operadic generating series: coefficient of t^k is (-1)^k dims[k]/k!.
/// dims[0] is the dimension at arity 1 (conventionally 1); missing entries
/// count as zero.
inline TruncatedSeries gen_series(const std::vector<std::size_t>& dims, std::size_t order) {
    TruncatedSeries g(order);
    Rational factorial(1);
    for (std::size_t k = 1; k <= order; ++k) {
        factorial *= Rational(static_cast<int>(k));
        std::size_t d = k <= dims.size() ? dims[k - 1] : 0;
        if (d == 0) continue;
        g.coeff(k) = Rational(k % 2 == 0 ? 1 : -1) * Rational(static_cast<long>(d)) / factorial;
    }
    return g;
}

struct KoszulReport {
    bool clean = true;
    std::size_t first_failure_order = 0;          // 0 when clean
    Rational residual_coeff;                      // functional-equation residual there
    bool inverse_matches_dual = true;
    std::size_t inverse_mismatch_order = 0;
    Rational inverse_coeff, dual_coeff;           // the mismatching pair
};

/// Koszulness test. For series entered as printed (leading term -t) the
/// functional equation reads compose(gP, gDual) = t: the -g(-t) reflections
/// in the textbook form cancel against the alternating-sign convention of the
/// generating series itself. Cross-checked against comp_inverse(gP) == gDual;
/// both routes always agree on the failure order.
inline KoszulReport koszul_check(const TruncatedSeries& gP, const TruncatedSeries& gDual) {
    if (gP.order() != gDual.order()) throw std::invalid_argument("koszul_check: order mismatch");
    if (gP.order() < 1 || gP.coeff(1) != Rational(-1) || gDual.coeff(1) != Rational(-1))
        throw std::invalid_argument("koszul_check: series must start with -t");
    KoszulReport rep;
    TruncatedSeries residual = compose(gP, gDual);
    residual.coeff(1) -= 1;
    if (auto k = residual.first_nonzero()) {
        rep.clean = false;
        rep.first_failure_order = *k;
        rep.residual_coeff = residual.coeff(*k);
    }
    TruncatedSeries inv = comp_inverse(gP);
    for (std::size_t k = 1; k <= gP.order(); ++k) {
        if (inv.coeff(k) != gDual.coeff(k)) {
            rep.inverse_matches_dual = false;
            rep.inverse_mismatch_order = k;
            rep.inverse_coeff = inv.coeff(k);
            rep.dual_coeff = gDual.coeff(k);
            break;
        }
    }
    return rep;
}

/// CLI series literal: comma-separated rationals c1..cN.
inline std::optional<TruncatedSeries> try_parse_series(std::string_view s) {
    std::vector<Rational> coeffs;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string_view::npos) next = s.size();
        auto r = try_parse_rational(s.substr(pos, next - pos));
        if (!r) return std::nullopt;
        coeffs.push_back(*r);
        pos = next + 1;
        if (next == s.size()) break;
    }
    if (coeffs.empty()) return std::nullopt;
    return TruncatedSeries(std::move(coeffs));
}

inline std::string to_string(const TruncatedSeries& s) {
    std::string out;
    for (std::size_t k = 1; k <= s.order(); ++k) {
        if (k > 1) out += ',';
        out += to_string(s.coeff(k));
    }
    return out;
}

} // namespace nakit
