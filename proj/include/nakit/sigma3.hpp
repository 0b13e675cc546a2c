#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nakit/matrix.hpp"
#include "nakit/rational.hpp"

namespace nakit {

// The symmetric group of degree 3 in the canonical basis order
// {Id, t12, t13, t23, c, c2}, with c: 1->2, 2->3, 3->1 and the product
// s*t = s o t (right factor applied first). This is the unique convention
// reproducing the printed orbit matrix M_v; a golden test pins all 36 entries.
enum class Perm : int { Id = 0, T12 = 1, T13 = 2, T23 = 3, C = 4, C2 = 5 };

inline constexpr std::array<Perm, 6> kAllPerms{Perm::Id, Perm::T12, Perm::T13,
                                               Perm::T23, Perm::C,  Perm::C2};

// images[p][i] = p(i) on {0,1,2}
inline constexpr int kPermImage[6][3] = {
    {0, 1, 2},  // Id
    {1, 0, 2},  // t12
    {2, 1, 0},  // t13
    {0, 2, 1},  // t23
    {1, 2, 0},  // c
    {2, 0, 1},  // c2
};

inline constexpr int kPermSign[6] = {1, -1, -1, -1, 1, 1};

inline int perm_image(Perm p, int i) { return kPermImage[static_cast<int>(p)][i]; }
inline int perm_sign(Perm p) { return kPermSign[static_cast<int>(p)]; }

inline Perm perm_mul(Perm s, Perm t) {
    int img[3];
    for (int i = 0; i < 3; ++i) img[i] = perm_image(s, perm_image(t, i));
    for (Perm p : kAllPerms) {
        bool same = true;
        for (int i = 0; i < 3; ++i) same = same && perm_image(p, i) == img[i];
        if (same) return p;
    }
    throw std::logic_error("perm_mul: not a permutation");
}

inline constexpr const char* kPermName[6] = {"id", "t12", "t13", "t23", "c", "c2"};

inline std::optional<Perm> perm_from_name(std::string_view s) {
    for (int i = 0; i < 6; ++i)
        if (s == kPermName[i]) return static_cast<Perm>(i);
    return std::nullopt;
}

/// Element of the group algebra K[Sigma_3], components a1..a6 in the
/// canonical basis order (Id, t12, t13, t23, c, c2).
struct GroupAlgebraElement {
    std::array<Rational, 6> a{};

    GroupAlgebraElement() = default;
    explicit GroupAlgebraElement(std::array<Rational, 6> comps) : a(std::move(comps)) {}

    static GroupAlgebraElement zero() { return GroupAlgebraElement{}; }
    static GroupAlgebraElement of(Perm p, Rational coeff = 1) {
        GroupAlgebraElement v;
        v.a[static_cast<int>(p)] = std::move(coeff);
        return v;
    }

    Rational& operator[](std::size_t i) { return a[i]; }
    const Rational& operator[](std::size_t i) const { return a[i]; }

    bool is_zero() const {
        for (const auto& x : a)
            if (!nakit::is_zero(x)) return false;
        return true;
    }

    bool operator==(const GroupAlgebraElement& o) const { return a == o.a; }

    GroupAlgebraElement operator+(const GroupAlgebraElement& o) const {
        GroupAlgebraElement r;
        for (int i = 0; i < 6; ++i) r.a[i] = a[i] + o.a[i];
        return r;
    }
    GroupAlgebraElement operator-(const GroupAlgebraElement& o) const {
        GroupAlgebraElement r;
        for (int i = 0; i < 6; ++i) r.a[i] = a[i] - o.a[i];
        return r;
    }
    GroupAlgebraElement operator*(const Rational& s) const {
        GroupAlgebraElement r;
        for (int i = 0; i < 6; ++i) r.a[i] = a[i] * s;
        return r;
    }
};

// sum of sigma over Sigma_3 weighted by signature / plainly: the two
// 1-dimensional characters (Lie-admissibility, 3-power-associativity)
inline GroupAlgebraElement v_lad() {
    return GroupAlgebraElement{{Rational(1), Rational(-1), Rational(-1), Rational(-1), Rational(1), Rational(1)}};
}
inline GroupAlgebraElement v_3pa() {
    return GroupAlgebraElement{{Rational(1), Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)}};
}

inline Vec components(const GroupAlgebraElement& v) { return Vec(v.a.begin(), v.a.end()); }

inline GroupAlgebraElement ga_mul(const GroupAlgebraElement& u, const GroupAlgebraElement& v) {
    GroupAlgebraElement r;
    for (int i = 0; i < 6; ++i) {
        if (is_zero(u.a[i])) continue;
        for (int j = 0; j < 6; ++j) {
            if (is_zero(v.a[j])) continue;
            Perm p = perm_mul(static_cast<Perm>(i), static_cast<Perm>(j));
            r.a[static_cast<int>(p)] += u.a[i] * v.a[j];
        }
    }
    return r;
}

/// M_v: column j holds the components of sigma_j * v (the left orbit of v).
inline Matrix m_matrix(const GroupAlgebraElement& v) {
    Matrix m(6, 6);
    for (int j = 0; j < 6; ++j) {
        GroupAlgebraElement col = ga_mul(GroupAlgebraElement::of(static_cast<Perm>(j)), v);
        for (int i = 0; i < 6; ++i) m(i, j) = col.a[i];
    }
    return m;
}

/// dim F_v = dim Span(orbit of v) = rank of M_v. Requires v != 0.
inline std::size_t fv_rank(const GroupAlgebraElement& v) {
    if (v.is_zero()) throw std::invalid_argument("fv_rank: zero vector");
    return rank(m_matrix(v));
}

enum class CharacterTarget { VLad, V3Pa };

struct ContainsResult {
    bool contained = false;
    std::optional<GroupAlgebraElement> certificate;  // u with u*v = target
};

/// Decides target in F_v two ways and cross-checks: the character sum
/// (a1-a2-a3-a4+a5+a6 for v_Lad, a1+...+a6 for v_3Pa) and solvability of
/// M_v U = target. On success returns a certificate u with ga_mul(u,v) = target.
inline ContainsResult contains(const GroupAlgebraElement& v, CharacterTarget target) {
    if (v.is_zero()) throw std::invalid_argument("contains: zero vector");
    Rational sum;
    for (int i = 0; i < 6; ++i)
        sum += (target == CharacterTarget::VLad ? Rational(perm_sign(static_cast<Perm>(i))) : Rational(1)) * v.a[i];
    GroupAlgebraElement t = target == CharacterTarget::VLad ? v_lad() : v_3pa();
    Vec rhs = components(t);
    auto sol = solve(m_matrix(v), rhs);
    bool by_sum = !is_zero(sum);
    if (by_sum != sol.has_value())
        throw std::logic_error("contains: character sum disagrees with linear system");
    ContainsResult r;
    r.contained = by_sum;
    if (sol) {
        GroupAlgebraElement u;
        for (int i = 0; i < 6; ++i) u.a[i] = sol->particular[i];
        r.certificate = u;
    }
    return r;
}

enum class VectorType { None, I, II, III, IV, V, VI };

inline const char* to_string(VectorType t) {
    switch (t) {
        case VectorType::None: return "none";
        case VectorType::I: return "I";
        case VectorType::II: return "II";
        case VectorType::III: return "III";
        case VectorType::IV: return "IV";
        case VectorType::V: return "V";
        case VectorType::VI: return "VI";
    }
    return "?";
}

struct VectorClassification {
    std::size_t dim_fv = 0;
    bool has_vlad = false;
    bool has_v3pa = false;
    VectorType type = VectorType::None;
};

/// Lie-admissible type of v per dim F_v, assigned only when v_Lad lies in F_v.
/// Parameters of the type III/IV families are not recovered.
inline VectorClassification classify_vector(const GroupAlgebraElement& v) {
    VectorClassification c;
    c.dim_fv = fv_rank(v);
    c.has_vlad = contains(v, CharacterTarget::VLad).contained;
    c.has_v3pa = contains(v, CharacterTarget::V3Pa).contained;
    if (c.has_vlad) {
        switch (c.dim_fv) {
            case 1: c.type = VectorType::I; break;   // F_v = F_{v_Lad}
            case 2: c.type = VectorType::II; break;
            case 3: c.type = VectorType::III; break;
            case 4: c.type = VectorType::IV; break;
            case 5: c.type = VectorType::V; break;
            default: c.type = VectorType::VI; break;
        }
    }
    return c;
}

/// CLI vector literals: named aliases or six comma-separated rationals.
inline std::optional<GroupAlgebraElement> try_parse_vector(std::string_view s) {
    if (s == "vlad") return v_lad();
    if (s == "v3pa") return v_3pa();
    if (s == "id") return GroupAlgebraElement::of(Perm::Id);
    if (s == "g2") return GroupAlgebraElement::of(Perm::Id) - GroupAlgebraElement::of(Perm::T12);
    if (s == "g3") return GroupAlgebraElement::of(Perm::Id) - GroupAlgebraElement::of(Perm::T13);
    if (s == "g4") return GroupAlgebraElement::of(Perm::Id) - GroupAlgebraElement::of(Perm::T23);
    if (s == "g5")
        return GroupAlgebraElement::of(Perm::Id) + GroupAlgebraElement::of(Perm::C) +
               GroupAlgebraElement::of(Perm::C2);
    if (s == "wa")
        return GroupAlgebraElement::of(Perm::Id) - GroupAlgebraElement::of(Perm::T12) +
               GroupAlgebraElement::of(Perm::C);
    GroupAlgebraElement v;
    std::size_t pos = 0;
    for (int i = 0; i < 6; ++i) {
        std::size_t next = i == 5 ? s.size() : s.find(',', pos);
        if (next == std::string_view::npos) return std::nullopt;
        auto r = try_parse_rational(s.substr(pos, next - pos));
        if (!r) return std::nullopt;
        v.a[i] = *r;
        pos = next + 1;
    }
    if (pos != s.size() + 1) return std::nullopt;
    return v;
}

inline GroupAlgebraElement parse_vector(std::string_view s) {
    auto v = try_parse_vector(s);
    if (!v) throw std::invalid_argument("bad vector literal: '" + std::string(s) + "'");
    return *v;
}

inline std::string to_string(const GroupAlgebraElement& v) {
    std::string out;
    for (int i = 0; i < 6; ++i) {
        if (i) out += ',';
        out += to_string(v.a[i]);
    }
    return out;
}

} // namespace nakit
