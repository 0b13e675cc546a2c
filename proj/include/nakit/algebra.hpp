#pragma once

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nakit/rational.hpp"
#include "nakit/sigma3.hpp"

namespace nakit {

/// Bilinear map A (x) A -> A as a dense cube of structure constants:
/// c[i][j][k] is the e_k-coefficient of mu(e_i, e_j). An Algebra is the
/// same data with c read as the multiplication table.
class BilinearMap {
public:
    BilinearMap() : n_(0) {}
    explicit BilinearMap(std::size_t n) : n_(n), c_(n * n * n) {}

    std::size_t dim() const { return n_; }

    Rational& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * n_ + j) * n_ + k];
    }

    bool operator==(const BilinearMap& o) const { return n_ == o.n_ && c_ == o.c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!nakit::is_zero(x)) return false;
        return true;
    }

    BilinearMap operator+(const BilinearMap& o) const {
        assert(n_ == o.n_);
        BilinearMap r(n_);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }
    BilinearMap operator-(const BilinearMap& o) const {
        assert(n_ == o.n_);
        BilinearMap r(n_);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
        return r;
    }
    BilinearMap operator*(const Rational& s) const {
        BilinearMap r(n_);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
        return r;
    }

    /// Argument swap: transpose()(x,y) = (*this)(y,x).
    BilinearMap transpose() const {
        BilinearMap r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k) r.at(i, j, k) = at(j, i, k);
        return r;
    }

    bool is_symmetric() const { return *this == transpose(); }
    bool is_skew() const {
        BilinearMap t = transpose();
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!nakit::is_zero(c_[i] + t.c_[i])) return false;
        return true;
    }

    /// mu(x, y) for coefficient vectors.
    Vec apply(const Vec& x, const Vec& y) const {
        assert(x.size() == n_ && y.size() == n_);
        Vec out(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (nakit::is_zero(x[i])) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (nakit::is_zero(y[j])) continue;
                Rational f = x[i] * y[j];
                for (std::size_t k = 0; k < n_; ++k) {
                    const Rational& cc = at(i, j, k);
                    if (!nakit::is_zero(cc)) out[k] += f * cc;
                }
            }
        }
        return out;
    }

    /// mu(e_i, e_j) as a coefficient vector.
    Vec on_basis(std::size_t i, std::size_t j) const {
        Vec out(n_);
        for (std::size_t k = 0; k < n_; ++k) out[k] = at(i, j, k);
        return out;
    }

private:
    std::size_t n_;
    std::vector<Rational> c_;
};

using Algebra = BilinearMap;

inline Vec basis_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
}

/// Trilinear map A^(3) -> A, dense: t[i][j][k][l].
class TrilinearMap {
public:
    TrilinearMap() : n_(0) {}
    explicit TrilinearMap(std::size_t n) : n_(n), t_(n * n * n * n) {}

    std::size_t dim() const { return n_; }

    Rational& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return t_[((i * n_ + j) * n_ + k) * n_ + l];
    }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return t_[((i * n_ + j) * n_ + k) * n_ + l];
    }

    bool operator==(const TrilinearMap& o) const { return n_ == o.n_ && t_ == o.t_; }

    bool is_zero() const {
        for (const auto& x : t_)
            if (!nakit::is_zero(x)) return false;
        return true;
    }

    /// First (i,j,k) with T(e_i,e_j,e_k) != 0 in lexicographic order, if any.
    std::optional<std::array<std::size_t, 3>> first_nonzero_tuple() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k)
                    for (std::size_t l = 0; l < n_; ++l)
                        if (!nakit::is_zero(at(i, j, k, l))) return std::array<std::size_t, 3>{i, j, k};
        return std::nullopt;
    }

    TrilinearMap operator+(const TrilinearMap& o) const {
        assert(n_ == o.n_);
        TrilinearMap r(n_);
        for (std::size_t i = 0; i < t_.size(); ++i) r.t_[i] = t_[i] + o.t_[i];
        return r;
    }
    TrilinearMap operator-(const TrilinearMap& o) const {
        assert(n_ == o.n_);
        TrilinearMap r(n_);
        for (std::size_t i = 0; i < t_.size(); ++i) r.t_[i] = t_[i] - o.t_[i];
        return r;
    }
    TrilinearMap operator*(const Rational& s) const {
        TrilinearMap r(n_);
        for (std::size_t i = 0; i < t_.size(); ++i) r.t_[i] = t_[i] * s;
        return r;
    }

    Vec on_basis(std::size_t i, std::size_t j, std::size_t k) const {
        Vec out(n_);
        for (std::size_t l = 0; l < n_; ++l) out[l] = at(i, j, k, l);
        return out;
    }

    void set_on_basis(std::size_t i, std::size_t j, std::size_t k, const Vec& v) {
        for (std::size_t l = 0; l < n_; ++l) at(i, j, k, l) = v[l];
    }

private:
    std::size_t n_;
    std::vector<Rational> t_;
};

/// T composed with the permutation action on arguments:
/// phi_apply(T, sigma)(x1,x2,x3) = T(x_{sigma(1)}, x_{sigma(2)}, x_{sigma(3)}).
inline TrilinearMap phi_apply(const TrilinearMap& t, Perm sigma) {
    std::size_t n = t.dim();
    TrilinearMap r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                std::size_t idx[3] = {i, j, k};
                std::size_t a = idx[perm_image(sigma, 0)];
                std::size_t b = idx[perm_image(sigma, 1)];
                std::size_t c = idx[perm_image(sigma, 2)];
                for (std::size_t l = 0; l < n; ++l) r.at(i, j, k, l) = t.at(a, b, c, l);
            }
    return r;
}

/// Linear extension over a group-algebra element: sum_i v_i (T o Phi_{sigma_i}).
inline TrilinearMap phi_apply(const TrilinearMap& t, const GroupAlgebraElement& v) {
    TrilinearMap r(t.dim());
    for (int s = 0; s < 6; ++s) {
        if (is_zero(v.a[s])) continue;
        r = r + phi_apply(t, static_cast<Perm>(s)) * v.a[s];
    }
    return r;
}

enum class AssociatorKind { Full, Left, Right, Anti };

/// Left = mu o (mu (x) Id), Right = mu o (Id (x) mu), Full = Left - Right,
/// Anti = Left + Right.
inline TrilinearMap associator(const BilinearMap& m, AssociatorKind kind = AssociatorKind::Full) {
    std::size_t n = m.dim();
    TrilinearMap r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec ij = m.on_basis(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                Vec left = m.apply(ij, basis_vec(n, k));
                Vec right = m.apply(basis_vec(n, i), m.on_basis(j, k));
                for (std::size_t l = 0; l < n; ++l) {
                    switch (kind) {
                        case AssociatorKind::Full: r.at(i, j, k, l) = left[l] - right[l]; break;
                        case AssociatorKind::Left: r.at(i, j, k, l) = left[l]; break;
                        case AssociatorKind::Right: r.at(i, j, k, l) = right[l]; break;
                        case AssociatorKind::Anti: r.at(i, j, k, l) = left[l] + right[l]; break;
                    }
                }
            }
        }
    return r;
}

/// A_mu o Phi_v = 0. Basis triples suffice by multilinearity.
inline bool is_v_associative(const Algebra& a, const GroupAlgebraElement& v) {
    return phi_apply(associator(a, AssociatorKind::Full), v).is_zero();
}

enum class VWMode { Pair, Difference };

/// (v,w)-algebra test: pair form requires A^L o Phi_v = 0 and A^R o Phi_w = 0
/// separately; difference form requires A^L o Phi_v - A^R o Phi_w = 0.
inline bool is_vw_associative(const Algebra& a, const GroupAlgebraElement& v,
                              const GroupAlgebraElement& w, VWMode mode) {
    TrilinearMap left = phi_apply(associator(a, AssociatorKind::Left), v);
    TrilinearMap right = phi_apply(associator(a, AssociatorKind::Right), w);
    if (mode == VWMode::Pair) return left.is_zero() && right.is_zero();
    return (left - right).is_zero();
}

struct Polarization {
    BilinearMap rho;  // symmetric: (xy + yx)/2
    BilinearMap psi;  // skew:      (xy - yx)/2
};

inline Polarization polarize(const Algebra& a) {
    BilinearMap t = a.transpose();
    return Polarization{(a + t) * Rational(1, 2), (a - t) * Rational(1, 2)};
}

/// mu = rho + psi; inverse of polarize.
inline Algebra depolarize(const BilinearMap& rho, const BilinearMap& psi) {
    if (!rho.is_symmetric()) throw std::invalid_argument("depolarize: rho not symmetric");
    if (!psi.is_skew()) throw std::invalid_argument("depolarize: psi not skew-symmetric");
    return rho + psi;
}

enum class LeibnizKind { L, LR, Lg };
enum class MapParity { Skew, Symmetric };

/// The three Leibniz-type defect operators.
///   L (m,b):  b(m(x,y),z) - m(x,b(y,z)) - m(b(x,z),y)
///   LR(m,b):  b(x,m(y,z)) - m(y,b(x,z)) - m(b(x,y),z)
///   Lg(eta,rho): rho(x,eta(y,z)) + s.eta(y,rho(x,z)) + s.eta(rho(x,y),z)
/// where s = -1 when the acting map rho is skew and +1 when it is symmetric
/// (this sign is what turns Lg(psi,psi) into the Jacobiator and Lg(rho,rho)
/// into the Jacobi-Jordan cyclic sum).
inline TrilinearMap leibniz_like(LeibnizKind kind, const BilinearMap& m, const BilinearMap& b,
                                 std::optional<std::pair<MapParity, MapParity>> parities = std::nullopt) {
    std::size_t n = m.dim();
    if (b.dim() != n) throw std::invalid_argument("leibniz_like: dimension mismatch");
    TrilinearMap r(n);
    Rational sign(1);
    if (kind == LeibnizKind::Lg) {
        if (!parities) throw std::invalid_argument("leibniz_like: Lg needs parities");
        auto [eta_par, rho_par] = *parities;
        bool eta_ok = eta_par == MapParity::Skew ? m.is_skew() : m.is_symmetric();
        bool rho_ok = rho_par == MapParity::Skew ? b.is_skew() : b.is_symmetric();
        if (!eta_ok || !rho_ok)
            throw std::invalid_argument("leibniz_like: declared parity does not match map symmetry");
        if (rho_par == MapParity::Skew) sign = -1;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec x = basis_vec(n, i), y = basis_vec(n, j), z = basis_vec(n, k);
                Vec out(n);
                switch (kind) {
                    case LeibnizKind::L: {
                        Vec t1 = b.apply(m.on_basis(i, j), z);
                        Vec t2 = m.apply(x, b.on_basis(j, k));
                        Vec t3 = m.apply(b.on_basis(i, k), y);
                        for (std::size_t l = 0; l < n; ++l) out[l] = t1[l] - t2[l] - t3[l];
                        break;
                    }
                    case LeibnizKind::LR: {
                        Vec t1 = b.apply(x, m.on_basis(j, k));
                        Vec t2 = m.apply(y, b.on_basis(i, k));
                        Vec t3 = m.apply(b.on_basis(i, j), z);
                        for (std::size_t l = 0; l < n; ++l) out[l] = t1[l] - t2[l] - t3[l];
                        break;
                    }
                    case LeibnizKind::Lg: {
                        Vec t1 = b.apply(x, m.on_basis(j, k));
                        Vec t2 = m.apply(y, b.on_basis(i, k));
                        Vec t3 = m.apply(b.on_basis(i, j), z);
                        for (std::size_t l = 0; l < n; ++l) out[l] = t1[l] + sign * (t2[l] + t3[l]);
                        break;
                    }
                }
                r.set_on_basis(i, j, k, out);
            }
    return r;
}

/// J(x,y,z) = psi(x,psi(y,z)) - psi(psi(x,y),z) - psi(y,psi(x,z));
/// the zero tensor exactly when psi is a Lie bracket.
inline TrilinearMap jacobiator(const BilinearMap& psi) {
    if (!psi.is_skew()) throw std::invalid_argument("jacobiator: map not skew-symmetric");
    std::size_t n = psi.dim();
    TrilinearMap r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec t1 = psi.apply(basis_vec(n, i), psi.on_basis(j, k));
                Vec t2 = psi.apply(psi.on_basis(i, j), basis_vec(n, k));
                Vec t3 = psi.apply(basis_vec(n, j), psi.on_basis(i, k));
                Vec out(n);
                for (std::size_t l = 0; l < n; ++l) out[l] = t1[l] - t2[l] - t3[l];
                r.set_on_basis(i, j, k, out);
            }
    return r;
}

} // namespace nakit
