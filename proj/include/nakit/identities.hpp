#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nakit/algebra.hpp"

namespace nakit {

/// True when the cyclic sum x(yz) + y(zx) + z(xy) vanishes on all basis triples.
inline bool jacobi_jordan_cyclic_zero(const BilinearMap& m) {
    std::size_t n = m.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec t1 = m.apply(basis_vec(n, i), m.on_basis(j, k));
                Vec t2 = m.apply(basis_vec(n, j), m.on_basis(k, i));
                Vec t3 = m.apply(basis_vec(n, k), m.on_basis(i, j));
                for (std::size_t l = 0; l < n; ++l)
                    if (!is_zero(t1[l] + t2[l] + t3[l])) return false;
            }
    return true;
}

/// All five bracketings of four basis elements vanish.
inline bool is_nil4(const Algebra& a) {
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec xy = a.on_basis(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                Vec x = basis_vec(n, i), y = basis_vec(n, j), z = basis_vec(n, k);
                Vec yz = a.on_basis(j, k);
                for (std::size_t t = 0; t < n; ++t) {
                    Vec tv = basis_vec(n, t);
                    Vec zt = a.on_basis(k, t);
                    const Vec prods[5] = {
                        a.apply(a.apply(xy, z), tv),       // ((xy)z)t
                        a.apply(a.apply(x, yz), tv),       // (x(yz))t
                        a.apply(xy, zt),                   // (xy)(zt)
                        a.apply(x, a.apply(yz, tv)),       // x((yz)t)
                        a.apply(x, a.apply(y, zt)),        // x(y(zt))
                    };
                    for (const Vec& p : prods)
                        for (const Rational& q : p)
                            if (!is_zero(q)) return false;
                }
            }
        }
    return true;
}

namespace detail {

inline std::string tuple_name(std::initializer_list<std::size_t> idx) {
    std::string s = "(";
    bool first = true;
    for (std::size_t i : idx) {
        if (!first) s += ",";
        s += "e" + std::to_string(i + 1);
        first = false;
    }
    return s + ")";
}

} // namespace detail

/// First basis tuple violating the named identity, rendered for reports;
/// nullopt when the identity holds.
inline std::optional<std::string> identity_witness(const Algebra& a, std::string_view name);

inline const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names = {
        "commutative",     "skew",           "associative",
        "anti_associative","lie",            "jacobi_jordan",
        "left_leibniz",    "right_leibniz",  "symmetric_leibniz",
        "weakly_associative", "lie_admissible", "three_power_associative",
        "nil4"};
    return names;
}

/// Exact evaluation of a named identity on all basis tuples (complete by
/// multilinearity). "Leibniz algebra" means the right variant.
inline bool check_identity(const Algebra& a, std::string_view name) {
    std::size_t n = a.dim();
    auto ga = [](Perm p) { return GroupAlgebraElement::of(p); };
    if (name == "commutative") return a.is_symmetric();
    if (name == "skew") return a.is_skew();
    if (name == "associative") return associator(a, AssociatorKind::Full).is_zero();
    if (name == "anti_associative") return associator(a, AssociatorKind::Anti).is_zero();
    if (name == "lie") return a.is_skew() && jacobiator(a).is_zero();
    if (name == "jacobi_jordan") return a.is_symmetric() && jacobi_jordan_cyclic_zero(a);
    if (name == "left_leibniz") {
        // x(yz) = (xy)z + y(xz):  A(x,y,z) + y(xz) = 0
        TrilinearMap t = associator(a, AssociatorKind::Full);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    Vec extra = a.apply(basis_vec(n, j), a.on_basis(i, k));
                    for (std::size_t l = 0; l < n; ++l)
                        if (!is_zero(t.at(i, j, k, l) + extra[l])) return false;
                }
        return true;
    }
    if (name == "right_leibniz") {
        // (xy)z - x(yz) - (xz)y = 0
        TrilinearMap t = associator(a, AssociatorKind::Full);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    Vec extra = a.apply(a.on_basis(i, k), basis_vec(n, j));
                    for (std::size_t l = 0; l < n; ++l)
                        if (!is_zero(t.at(i, j, k, l) - extra[l])) return false;
                }
        return true;
    }
    if (name == "symmetric_leibniz")
        return check_identity(a, "left_leibniz") && check_identity(a, "right_leibniz");
    if (name == "weakly_associative")
        return is_v_associative(a, ga(Perm::Id) - ga(Perm::T12) + ga(Perm::C));
    if (name == "lie_admissible") return is_v_associative(a, v_lad());
    if (name == "three_power_associative") return is_v_associative(a, v_3pa());
    if (name == "nil4") return is_nil4(a);
    throw std::invalid_argument("check_identity: unknown identity '" + std::string(name) + "'");
}

inline std::optional<std::string> identity_witness(const Algebra& a, std::string_view name) {
    std::size_t n = a.dim();
    if (name == "commutative" || name == "skew") {
        BilinearMap t = a.transpose();
        int sign = name == "skew" ? 1 : -1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (!is_zero(a.at(i, j, k) + Rational(sign) * t.at(i, j, k)))
                        return detail::tuple_name({i, j});
        return std::nullopt;
    }
    if (name == "nil4") {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t t = 0; t < n; ++t) {
                        Vec x = basis_vec(n, i), y = basis_vec(n, j);
                        Vec xy = a.on_basis(i, j), yz = a.on_basis(j, k), zt = a.on_basis(k, t);
                        Vec tv = basis_vec(n, t);
                        const Vec prods[5] = {a.apply(a.apply(xy, basis_vec(n, k)), tv),
                                              a.apply(a.apply(x, yz), tv), a.apply(xy, zt),
                                              a.apply(x, a.apply(yz, tv)),
                                              a.apply(x, a.apply(y, zt))};
                        for (const Vec& p : prods)
                            for (const Rational& q : p)
                                if (!is_zero(q)) return detail::tuple_name({i, j, k, t});
                    }
        return std::nullopt;
    }
    // the remaining identities are vanishing conditions on a trilinear defect
    TrilinearMap defect(n);
    auto ga = [](Perm p) { return GroupAlgebraElement::of(p); };
    if (name == "associative") defect = associator(a, AssociatorKind::Full);
    else if (name == "anti_associative") defect = associator(a, AssociatorKind::Anti);
    else if (name == "lie") {
        if (!a.is_skew()) return identity_witness(a, "skew");
        defect = jacobiator(a);
    } else if (name == "jacobi_jordan") {
        if (!a.is_symmetric()) return identity_witness(a, "commutative");
        defect = leibniz_like(LeibnizKind::Lg, a, a,
                              std::make_pair(MapParity::Symmetric, MapParity::Symmetric));
    } else if (name == "left_leibniz" || name == "right_leibniz" || name == "symmetric_leibniz") {
        TrilinearMap t = associator(a, AssociatorKind::Full);
        bool left = name != "right_leibniz";
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    Vec extra = left ? a.apply(basis_vec(n, j), a.on_basis(i, k))
                                     : a.apply(a.on_basis(i, k), basis_vec(n, j));
                    for (std::size_t l = 0; l < n; ++l)
                        defect.at(i, j, k, l) =
                            t.at(i, j, k, l) + (left ? extra[l] : -extra[l]);
                }
        if (name == "symmetric_leibniz" && defect.is_zero())
            return identity_witness(a, "right_leibniz");
    } else if (name == "weakly_associative") {
        defect = phi_apply(associator(a, AssociatorKind::Full),
                           ga(Perm::Id) - ga(Perm::T12) + ga(Perm::C));
    } else if (name == "lie_admissible") {
        defect = phi_apply(associator(a, AssociatorKind::Full), v_lad());
    } else if (name == "three_power_associative") {
        defect = phi_apply(associator(a, AssociatorKind::Full), v_3pa());
    } else {
        throw std::invalid_argument("identity_witness: unknown identity '" + std::string(name) + "'");
    }
    if (auto w = defect.first_nonzero_tuple()) return detail::tuple_name({(*w)[0], (*w)[1], (*w)[2]});
    return std::nullopt;
}

} // namespace nakit
