#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "nakit/rational.hpp"
#include "nakit/sigma3.hpp"

namespace nakit {

enum class Bracketing { LL, RR };  // LL = (xy)z, RR = x(yz)
enum class ProductSymmetry { None, Commutative, Anticommutative };

struct CubicTerm {
    Rational coeff;
    Bracketing bracketing;
    Perm perm;  // arguments (x_{p(1)}, x_{p(2)}, x_{p(3)}) fed to the bracketing
};

using CubicRelation = std::vector<CubicTerm>;

/// Free-algebra presentation: generator count, a product symmetry and a list
/// of multilinear cubic identities.
struct Presentation {
    std::size_t generators = 1;
    ProductSymmetry symmetry = ProductSymmetry::None;
    std::vector<CubicRelation> relations;
};

inline std::optional<Presentation> preset_presentation(std::string_view name,
                                                       std::size_t generators) {
    Presentation p;
    p.generators = generators;
    auto term = [](int c, Bracketing b, Perm pm) {
        return CubicTerm{Rational(c), b, pm};
    };
    if (name == "jacobi-jordan") {
        p.symmetry = ProductSymmetry::Commutative;
        p.relations = {{term(1, Bracketing::RR, Perm::Id), term(1, Bracketing::RR, Perm::C),
                        term(1, Bracketing::RR, Perm::C2)}};
    } else if (name == "anti-associative") {
        p.symmetry = ProductSymmetry::None;
        p.relations = {{term(1, Bracketing::LL, Perm::Id), term(1, Bracketing::RR, Perm::Id)}};
    } else if (name == "aas") {
        p.symmetry = ProductSymmetry::Anticommutative;
        p.relations = {{term(1, Bracketing::LL, Perm::Id), term(1, Bracketing::RR, Perm::Id)}};
    } else if (name == "lie") {
        p.symmetry = ProductSymmetry::Anticommutative;
        p.relations = {{term(1, Bracketing::RR, Perm::Id), term(1, Bracketing::RR, Perm::C),
                        term(1, Bracketing::RR, Perm::C2)}};
    } else if (name == "associative") {
        p.symmetry = ProductSymmetry::None;
        p.relations = {{term(1, Bracketing::LL, Perm::Id), term(-1, Bracketing::RR, Perm::Id)}};
    } else {
        return std::nullopt;
    }
    return p;
}

/// Presentation text format:
///   gens <n>
///   symmetry <none|comm|anticomm>
///   rel <coeff> <LL|RR> <perm> [+ <coeff> <LL|RR> <perm> ...]
/// with permutation names id, t12, t13, t23, c, c2. A presentation needs at
/// least one relation or a nontrivial symmetry.
inline Presentation parse_presentation(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    Presentation p;
    bool have_gens = false, have_sym = false;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error("presentation line " + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(is, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "gens") {
            long n = 0;
            if (!(ls >> n) || n < 1) fail("expected: gens <n>");
            p.generators = static_cast<std::size_t>(n);
            have_gens = true;
        } else if (head == "symmetry") {
            std::string s;
            if (!(ls >> s)) fail("expected: symmetry <none|comm|anticomm>");
            if (s == "none") p.symmetry = ProductSymmetry::None;
            else if (s == "comm") p.symmetry = ProductSymmetry::Commutative;
            else if (s == "anticomm") p.symmetry = ProductSymmetry::Anticommutative;
            else fail("bad symmetry '" + s + "'");
            have_sym = true;
        } else if (head == "rel") {
            CubicRelation rel;
            while (true) {
                std::string coeff, br, pm;
                if (!(ls >> coeff >> br >> pm)) fail("expected: <coeff> <LL|RR> <perm>");
                auto c = try_parse_rational(coeff);
                if (!c) fail("bad coefficient '" + coeff + "'");
                Bracketing b;
                if (br == "LL") b = Bracketing::LL;
                else if (br == "RR") b = Bracketing::RR;
                else fail("bad bracketing '" + br + "'");
                auto perm = perm_from_name(pm);
                if (!perm) fail("bad permutation '" + pm + "'");
                rel.push_back(CubicTerm{*c, b, *perm});
                std::string plus;
                if (!(ls >> plus)) break;
                if (plus != "+") fail("expected '+' between terms");
            }
            p.relations.push_back(std::move(rel));
        } else {
            fail("unknown directive '" + head + "'");
        }
    }
    if (!have_gens) throw std::runtime_error("presentation: missing 'gens'");
    if (!have_sym && p.relations.empty())
        throw std::runtime_error("presentation: needs a relation or a nontrivial symmetry");
    if (p.relations.empty() && p.symmetry == ProductSymmetry::None)
        throw std::runtime_error("presentation: needs a relation or a nontrivial symmetry");
    return p;
}

/// Degree-truncated relatively-free algebra, computed degree by degree.
/// Degree-d spanning symbols are products of lower-degree basis monomials;
/// the quotient is by all substitutions of basis monomials into the
/// presentation's relations (complete in characteristic 0 by multilinearity;
/// products of lower-degree relation instances reduce to zero automatically
/// through the expansion tables).
class FreeQuadraticAlgebra {
public:
    // d = 1 monomial: generator index in lo; d >= 2: product of basis
    // monomials (deg_lo, lo) and (deg_hi, hi).
    struct Symbol {
        std::size_t deg_lo = 0, lo = 0;
        std::size_t deg_hi = 0, hi = 0;
    };

    FreeQuadraticAlgebra(Presentation pres, std::size_t max_degree, bool multilinear_only = false)
        : p_(std::move(pres)), max_degree_(max_degree), multilinear_(multilinear_only) {
        if (max_degree_ < 1) throw std::invalid_argument("free algebra: max_degree < 1");
        if (multilinear_ && p_.generators > 63)
            throw std::invalid_argument("free algebra: too many generators for multilinear mode");
        build();
    }

    const Presentation& presentation() const { return p_; }
    std::size_t max_degree() const { return max_degree_; }

    /// Per-degree dimensions for degrees 1..max_degree.
    const std::vector<std::size_t>& dims() const { return dims_; }

    /// Basis monomials of a degree, as parenthesized strings over x1..xn.
    std::vector<std::string> basis_monomials(std::size_t d) const {
        std::vector<std::string> out;
        for (std::size_t b = 0; b < basis_[d].size(); ++b) out.push_back(monomial_name(d, b));
        return out;
    }

    /// Dimension of the multidegree-(1,...,1) component at degree = generators
    /// (only meaningful when built with multilinear_only = true).
    std::size_t top_multilinear_dim() const { return dims_.back(); }

    /// Product of two basis monomials expanded over the degree-(da+db) basis.
    Vec mul_basis(std::size_t da, std::size_t ia, std::size_t db, std::size_t ib) const {
        std::size_t d = da + db;
        Vec zero(basis_[d].size());
        auto c = canon(da, ia, db, ib);
        if (!c) return zero;
        auto [sign, key] = *c;
        auto it = sym_index_[d].find(key);
        if (it == sym_index_[d].end()) return zero;  // outside tracked (multilinear) component
        Vec out = red_[d][it->second];
        for (auto& x : out) x *= sign;
        return out;
    }

    /// Random-substitution spot check: every relation instance on basis
    /// monomials of total degree <= max reduces to zero.
    bool relations_hold_on_basis() const {
        for (std::size_t d = 3; d <= max_degree_; ++d)
            for (std::size_t da = 1; da + 2 <= d; ++da)
                for (std::size_t db = 1; da + db + 1 <= d; ++db) {
                    std::size_t dc = d - da - db;
                    for (std::size_t ia = 0; ia < basis_[da].size(); ++ia)
                        for (std::size_t ib = 0; ib < basis_[db].size(); ++ib)
                            for (std::size_t ic = 0; ic < basis_[dc].size(); ++ic)
                                for (const auto& rel : p_.relations) {
                                    Vec v = relation_value(d, rel, da, ia, db, ib, dc, ic);
                                    for (const auto& x : v)
                                        if (!is_zero(x)) return false;
                                }
                }
        return true;
    }

private:
    using SymKey = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;

    std::optional<std::pair<Rational, SymKey>> canon(std::size_t da, std::size_t ia, std::size_t db,
                                                     std::size_t ib) const {
        if (p_.symmetry == ProductSymmetry::None) return std::make_pair(Rational(1), SymKey{da, ia, db, ib});
        if (std::tie(da, ia) < std::tie(db, ib))
            return std::make_pair(Rational(1), SymKey{da, ia, db, ib});
        if (std::tie(da, ia) > std::tie(db, ib)) {
            Rational s = p_.symmetry == ProductSymmetry::Commutative ? Rational(1) : Rational(-1);
            return std::make_pair(s, SymKey{db, ib, da, ia});
        }
        if (p_.symmetry == ProductSymmetry::Anticommutative) return std::nullopt;  // m*m = 0
        return std::make_pair(Rational(1), SymKey{da, ia, db, ib});
    }

    std::uint64_t support(std::size_t d, std::size_t b) const { return support_[d][b]; }

    // Relation instance on basis monomials, reduced through the tables of all
    // lower degrees; the two top-level factors stay as degree-d symbols.
    std::vector<Rational> relation_row(std::size_t d, const CubicRelation& rel, std::size_t da,
                                       std::size_t ia, std::size_t db, std::size_t ib,
                                       std::size_t dc, std::size_t ic) const {
        std::vector<Rational> row(syms_[d].size());
        struct Arg { std::size_t deg, idx; };
        Arg args[3] = {{da, ia}, {db, ib}, {dc, ic}};
        for (const CubicTerm& t : rel) {
            Arg P = args[perm_image(t.perm, 0)];
            Arg Q = args[perm_image(t.perm, 1)];
            Arg R = args[perm_image(t.perm, 2)];
            Arg inner_a = t.bracketing == Bracketing::LL ? P : Q;
            Arg inner_b = t.bracketing == Bracketing::LL ? Q : R;
            Arg outer = t.bracketing == Bracketing::LL ? R : P;
            Vec inner = mul_basis(inner_a.deg, inner_a.idx, inner_b.deg, inner_b.idx);
            std::size_t dinner = inner_a.deg + inner_b.deg;
            for (std::size_t m = 0; m < inner.size(); ++m) {
                if (is_zero(inner[m])) continue;
                auto c = t.bracketing == Bracketing::LL ? canon(dinner, m, outer.deg, outer.idx)
                                                        : canon(outer.deg, outer.idx, dinner, m);
                if (!c) continue;
                auto [sign, key] = *c;
                auto it = sym_index_[d].find(key);
                if (it == sym_index_[d].end()) continue;
                row[it->second] += t.coeff * inner[m] * sign;
            }
        }
        return row;
    }

    Vec relation_value(std::size_t d, const CubicRelation& rel, std::size_t da, std::size_t ia,
                       std::size_t db, std::size_t ib, std::size_t dc, std::size_t ic) const {
        std::vector<Rational> row = relation_row(d, rel, da, ia, db, ib, dc, ic);
        Vec out(basis_[d].size());
        for (std::size_t s = 0; s < row.size(); ++s) {
            if (is_zero(row[s])) continue;
            const Vec& r = red_[d][s];
            for (std::size_t q = 0; q < out.size(); ++q) out[q] += row[s] * r[q];
        }
        return out;
    }

    void build() {
        syms_.resize(max_degree_ + 1);
        sym_index_.resize(max_degree_ + 1);
        basis_.resize(max_degree_ + 1);
        red_.resize(max_degree_ + 1);
        support_.resize(max_degree_ + 1);
        for (std::size_t d = 1; d <= max_degree_; ++d) {
            enumerate_symbols(d);
            std::vector<std::vector<Rational>> rows = relation_rows(d);
            eliminate(d, rows);
        }
        for (std::size_t d = 1; d <= max_degree_; ++d) dims_.push_back(basis_[d].size());
    }

    void enumerate_symbols(std::size_t d) {
        auto& syms = syms_[d];
        auto& index = sym_index_[d];
        if (d == 1) {
            for (std::size_t g = 0; g < p_.generators; ++g) {
                index[SymKey{0, g, 0, 0}] = syms.size();
                syms.push_back(Symbol{0, g, 0, 0});
            }
            return;
        }
        for (std::size_t a = 1; a < d; ++a) {
            std::size_t b = d - a;
            for (std::size_t ia = 0; ia < basis_[a].size(); ++ia)
                for (std::size_t ib = 0; ib < basis_[b].size(); ++ib) {
                    auto c = canon(a, ia, b, ib);
                    if (!c) continue;
                    auto key = c->second;
                    if (index.count(key)) continue;
                    if (multilinear_ &&
                        (support(std::get<0>(key), std::get<1>(key)) &
                         support(std::get<2>(key), std::get<3>(key))))
                        continue;
                    index[key] = syms.size();
                    syms.push_back(Symbol{std::get<0>(key), std::get<1>(key), std::get<2>(key),
                                          std::get<3>(key)});
                }
        }
    }

    std::vector<std::vector<Rational>> relation_rows(std::size_t d) const {
        std::vector<std::vector<Rational>> rows;
        if (d < 3) return rows;
        for (std::size_t da = 1; da + 2 <= d; ++da)
            for (std::size_t db = 1; da + db + 1 <= d; ++db) {
                std::size_t dc = d - da - db;
                for (std::size_t ia = 0; ia < basis_[da].size(); ++ia)
                    for (std::size_t ib = 0; ib < basis_[db].size(); ++ib)
                        for (std::size_t ic = 0; ic < basis_[dc].size(); ++ic) {
                            if (multilinear_) {
                                std::uint64_t sa = support(da, ia), sb = support(db, ib),
                                              sc = support(dc, ic);
                                if ((sa & sb) || (sa & sc) || (sb & sc)) continue;
                            }
                            for (const auto& rel : p_.relations) {
                                auto row = relation_row(d, rel, da, ia, db, ib, dc, ic);
                                bool nz = false;
                                for (const auto& x : row) nz = nz || !is_zero(x);
                                if (nz) rows.push_back(std::move(row));
                            }
                        }
            }
        return rows;
    }

    // Incremental Gauss-Jordan; free (non-pivot) symbols become the basis, in
    // enumeration order, so results are reproducible across runs.
    void eliminate(std::size_t d, std::vector<std::vector<Rational>>& rows) {
        std::size_t m = syms_[d].size();
        std::vector<std::vector<Rational>> rrows;
        std::vector<std::size_t> pivots;
        for (auto& row : rows) {
            for (std::size_t r = 0; r < rrows.size(); ++r) {
                const Rational& f = row[pivots[r]];
                if (is_zero(f)) continue;
                Rational ff = f;
                for (std::size_t c = 0; c < m; ++c)
                    if (!is_zero(rrows[r][c])) row[c] -= ff * rrows[r][c];
            }
            std::size_t nz = m;
            for (std::size_t c = 0; c < m; ++c)
                if (!is_zero(row[c])) { nz = c; break; }
            if (nz == m) continue;
            Rational pv = row[nz];
            for (std::size_t c = nz; c < m; ++c) row[c] /= pv;
            for (std::size_t r = 0; r < rrows.size(); ++r) {
                const Rational& f = rrows[r][nz];
                if (is_zero(f)) continue;
                Rational ff = f;
                for (std::size_t c = 0; c < m; ++c)
                    if (!is_zero(row[c])) rrows[r][c] -= ff * row[c];
            }
            pivots.push_back(nz);
            rrows.push_back(std::move(row));
        }
        std::vector<bool> is_pivot(m, false);
        for (std::size_t c : pivots) is_pivot[c] = true;
        std::vector<std::size_t> pos(m, 0);
        for (std::size_t s = 0; s < m; ++s)
            if (!is_pivot[s]) {
                pos[s] = basis_[d].size();
                basis_[d].push_back(s);
            }
        std::size_t dim = basis_[d].size();
        red_[d].assign(m, Vec(dim));
        for (std::size_t s = 0; s < m; ++s)
            if (!is_pivot[s]) red_[d][s][pos[s]] = 1;
        for (std::size_t r = 0; r < rrows.size(); ++r) {
            Vec v(dim);
            for (std::size_t c = 0; c < m; ++c) {
                if (c == pivots[r] || is_zero(rrows[r][c])) continue;
                v[pos[c]] -= rrows[r][c];  // pivot symbol = -sum over free symbols
            }
            red_[d][pivots[r]] = std::move(v);
        }
        support_[d].resize(dim);
        for (std::size_t b = 0; b < dim; ++b) {
            const Symbol& s = syms_[d][basis_[d][b]];
            support_[d][b] = d == 1 ? (std::uint64_t{1} << s.lo)
                                    : (support(s.deg_lo, s.lo) | support(s.deg_hi, s.hi));
        }
    }

    std::string monomial_name(std::size_t d, std::size_t b) const {
        const Symbol& s = syms_[d][basis_[d][b]];
        if (d == 1) return "x" + std::to_string(s.lo + 1);
        std::string lo = monomial_name(s.deg_lo, s.lo);
        std::string hi = monomial_name(s.deg_hi, s.hi);
        if (s.deg_lo > 1) lo = "(" + lo + ")";
        if (s.deg_hi > 1) hi = "(" + hi + ")";
        return lo + " " + hi;
    }

    Presentation p_;
    std::size_t max_degree_;
    bool multilinear_;
    std::vector<std::vector<Symbol>> syms_;
    std::vector<std::map<SymKey, std::size_t>> sym_index_;
    std::vector<std::vector<std::size_t>> basis_;   // degree -> basis symbol ids
    std::vector<std::vector<Vec>> red_;             // degree -> symbol -> basis coords
    std::vector<std::vector<std::uint64_t>> support_;
    std::vector<std::size_t> dims_;
};

struct GradedBasis {
    std::vector<std::size_t> dims;                       // degrees 1..max
    std::vector<std::vector<std::string>> monomials;     // printable basis monomials
};

inline GradedBasis graded_basis(const Presentation& p, std::size_t max_degree) {
    FreeQuadraticAlgebra fa(p, max_degree);
    GradedBasis g;
    g.dims = fa.dims();
    for (std::size_t d = 1; d <= max_degree; ++d) g.monomials.push_back(fa.basis_monomials(d));
    return g;
}

/// Dimension of the operadic (multidegree (1,...,1)) component on k letters.
inline std::size_t multilinear_dim(const Presentation& p, std::size_t k) {
    if (k < 1) throw std::invalid_argument("multilinear_dim: k < 1");
    Presentation q = p;
    q.generators = k;
    FreeQuadraticAlgebra fa(q, k, /*multilinear_only=*/true);
    return fa.top_multilinear_dim();
}

/// Per-degree dimensions (non-unital; degree >= 1).
inline std::vector<std::size_t> hilbert_coeffs(const Presentation& p, std::size_t n_generators,
                                               std::size_t max_degree) {
    Presentation q = p;
    q.generators = n_generators;
    return graded_basis(q, max_degree).dims;
}

} // namespace nakit
