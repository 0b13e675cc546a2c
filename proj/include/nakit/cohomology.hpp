#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <vector>

#include "nakit/algebra.hpp"
#include "nakit/matrix.hpp"

namespace nakit {

/// Which degree-2 coboundary operator to apply, and over which base
/// differential a Phi_v twist acts. The paper composes Phi only with the
/// Hochschild differential; the anti-based twist is an extension.
struct CoboundaryFlavor {
    enum class Kind { Hochschild, Anti, VTwisted, LR };
    enum class Base { Hochschild, Anti };

    Kind kind = Kind::Hochschild;
    Base base = Base::Hochschild;      // base differential under a VTwisted flavor
    GroupAlgebraElement v, w;

    static CoboundaryFlavor hochschild() { return {}; }
    static CoboundaryFlavor anti() {
        CoboundaryFlavor f;
        f.kind = Kind::Anti;
        return f;
    }
    static CoboundaryFlavor v_twisted(GroupAlgebraElement vv, Base b = Base::Hochschild) {
        if (vv.is_zero()) throw std::invalid_argument("v_twisted: zero vector");
        CoboundaryFlavor f;
        f.kind = Kind::VTwisted;
        f.base = b;
        f.v = std::move(vv);
        return f;
    }
    static CoboundaryFlavor lr(GroupAlgebraElement vv, GroupAlgebraElement ww) {
        CoboundaryFlavor f;
        f.kind = Kind::LR;
        f.v = std::move(vv);
        f.w = std::move(ww);
        return f;
    }
};

/// delta^1(f)(x,y) = x f(y) - f(xy) + f(x) y  for a linear map f (n x n, with
/// row i holding the image of e_i).
inline BilinearMap delta1(const Algebra& mu0, const Matrix& f) {
    std::size_t n = mu0.dim();
    if (f.rows() != n || f.cols() != n) throw std::invalid_argument("delta1: dimension mismatch");
    auto f_of = [&](const Vec& x) {
        Vec out(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (is_zero(x[i])) continue;
            for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * f(i, k);
        }
        return out;
    };
    BilinearMap r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec t1 = mu0.apply(basis_vec(n, i), f_of(basis_vec(n, j)));
            Vec t2 = f_of(mu0.on_basis(i, j));
            Vec t3 = mu0.apply(f_of(basis_vec(n, i)), basis_vec(n, j));
            for (std::size_t k = 0; k < n; ++k) r.at(i, j, k) = t1[k] - t2[k] + t3[k];
        }
    return r;
}

namespace detail {

// Hochschild: -x phi(y,z) + phi(xy,z) - phi(x,yz) + phi(x,y) z
inline TrilinearMap delta2_hochschild(const Algebra& mu0, const BilinearMap& phi) {
    std::size_t n = mu0.dim();
    TrilinearMap r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec t1 = mu0.apply(basis_vec(n, i), phi.on_basis(j, k));
                Vec t2 = phi.apply(mu0.on_basis(i, j), basis_vec(n, k));
                Vec t3 = phi.apply(basis_vec(n, i), mu0.on_basis(j, k));
                Vec t4 = mu0.apply(phi.on_basis(i, j), basis_vec(n, k));
                Vec out(n);
                for (std::size_t l = 0; l < n; ++l) out[l] = -t1[l] + t2[l] - t3[l] + t4[l];
                r.set_on_basis(i, j, k, out);
            }
    return r;
}

// Anti: x phi(y,z) + phi(xy,z) + phi(x,yz) + phi(x,y) z
inline TrilinearMap delta2_anti(const Algebra& mu0, const BilinearMap& phi) {
    std::size_t n = mu0.dim();
    TrilinearMap r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec t1 = mu0.apply(basis_vec(n, i), phi.on_basis(j, k));
                Vec t2 = phi.apply(mu0.on_basis(i, j), basis_vec(n, k));
                Vec t3 = phi.apply(basis_vec(n, i), mu0.on_basis(j, k));
                Vec t4 = mu0.apply(phi.on_basis(i, j), basis_vec(n, k));
                Vec out(n);
                for (std::size_t l = 0; l < n; ++l) out[l] = t1[l] + t2[l] + t3[l] + t4[l];
                r.set_on_basis(i, j, k, out);
            }
    return r;
}

// delta^{2,L}_v phi = (phi o (mu (x) Id) + mu o (phi (x) Id)) o Phi_v
inline TrilinearMap delta2_left(const Algebra& mu0, const BilinearMap& phi,
                                const GroupAlgebraElement& v) {
    std::size_t n = mu0.dim();
    TrilinearMap base(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec t1 = phi.apply(mu0.on_basis(i, j), basis_vec(n, k));
                Vec t2 = mu0.apply(phi.on_basis(i, j), basis_vec(n, k));
                Vec out(n);
                for (std::size_t l = 0; l < n; ++l) out[l] = t1[l] + t2[l];
                base.set_on_basis(i, j, k, out);
            }
    return phi_apply(base, v);
}

// delta^{2,R}_w phi = (phi o (Id (x) mu) + mu o (Id (x) phi)) o Phi_w
inline TrilinearMap delta2_right(const Algebra& mu0, const BilinearMap& phi,
                                 const GroupAlgebraElement& w) {
    std::size_t n = mu0.dim();
    TrilinearMap base(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec t1 = phi.apply(basis_vec(n, i), mu0.on_basis(j, k));
                Vec t2 = mu0.apply(basis_vec(n, i), phi.on_basis(j, k));
                Vec out(n);
                for (std::size_t l = 0; l < n; ++l) out[l] = t1[l] + t2[l];
                base.set_on_basis(i, j, k, out);
            }
    return phi_apply(base, w);
}

} // namespace detail

inline TrilinearMap delta2(const Algebra& mu0, const BilinearMap& phi,
                           const CoboundaryFlavor& flavor) {
    if (mu0.dim() != phi.dim()) throw std::invalid_argument("delta2: dimension mismatch");
    switch (flavor.kind) {
        case CoboundaryFlavor::Kind::Hochschild: return detail::delta2_hochschild(mu0, phi);
        case CoboundaryFlavor::Kind::Anti: return detail::delta2_anti(mu0, phi);
        case CoboundaryFlavor::Kind::VTwisted: {
            TrilinearMap base = flavor.base == CoboundaryFlavor::Base::Hochschild
                                    ? detail::delta2_hochschild(mu0, phi)
                                    : detail::delta2_anti(mu0, phi);
            return phi_apply(base, flavor.v);
        }
        case CoboundaryFlavor::Kind::LR:
            return detail::delta2_left(mu0, phi, flavor.v) -
                   detail::delta2_right(mu0, phi, flavor.w);
    }
    throw std::logic_error("delta2: bad flavor");
}

/// The four components of the minimal-model differential on trilinear maps.
/// 5-linear maps are never materialized; each component is an evaluator on
/// basis 5-tuples. Warns (via the returned flag) when mu0 is not
/// anti-associative but still evaluates.
class Delta3Anti {
public:
    Delta3Anti(Algebra mu0, TrilinearMap g)
        : mu0_(std::move(mu0)), g_(std::move(g)),
          base_anti_associative_(associator(mu0_, AssociatorKind::Anti).is_zero()) {
        if (mu0_.dim() != g_.dim()) throw std::invalid_argument("delta3: dimension mismatch");
    }

    bool base_anti_associative() const { return base_anti_associative_; }
    std::size_t dim() const { return mu0_.dim(); }

    /// component r in {1,2,3,4} evaluated on basis indices (x,y,z,t,u)
    Vec eval(int component, std::size_t x, std::size_t y, std::size_t z, std::size_t t,
             std::size_t u) const {
        std::size_t n = mu0_.dim();
        Vec X = basis_vec(n, x), Y = basis_vec(n, y), Z = basis_vec(n, z), T = basis_vec(n, t),
            U = basis_vec(n, u);
        auto m = [&](const Vec& p, const Vec& q) { return mu0_.apply(p, q); };
        auto G = [&](const Vec& p, const Vec& q, const Vec& r) { return g3(p, q, r); };
        Vec out(n);
        auto acc = [&](int sgn, const Vec& v) {
            for (std::size_t l = 0; l < n; ++l) out[l] += Rational(sgn) * v[l];
        };
        switch (component) {
            case 1:
                acc(+1, m(X, G(Y, Z, m(T, U))));
                acc(-1, G(X, Y, m(Z, m(T, U))));
                acc(+1, m(m(X, Y), G(Z, T, U)));
                acc(-1, G(m(X, Y), m(Z, T), U));
                acc(+1, m(G(m(X, Y), Z, T), U));
                acc(-1, G(m(m(X, Y), Z), T, U));
                acc(+1, m(G(X, Y, Z), m(T, U)));
                acc(-1, G(X, m(Y, Z), m(T, U)));
                break;
            case 2:
                acc(+1, G(m(m(X, Y), Z), T, U));
                acc(-1, m(G(m(X, Y), Z, T), U));
                acc(+1, m(G(X, Y, m(Z, T)), U));
                acc(-1, G(X, m(Y, m(Z, T)), U));
                acc(+1, m(X, G(Y, m(Z, T), U)));
                acc(-1, G(X, Y, m(m(Z, T), U)));
                acc(+1, m(m(X, Y), G(Z, T, U)));
                acc(-1, G(m(X, Y), Z, m(T, U)));
                break;
            case 3:
                acc(+1, G(X, m(Y, Z), m(T, U)));
                acc(-1, m(X, G(m(Y, Z), T, U)));
                acc(+1, G(X, m(m(Y, Z), T), U));
                acc(-1, m(X, m(G(Y, Z, T), U)));
                acc(+1, m(G(X, Y, m(Z, T)), U));
                acc(-1, m(G(m(X, Y), Z, T), U));
                acc(+1, m(m(G(X, Y, Z), T), U));
                acc(-1, G(m(X, m(Y, Z)), T, U));
                break;
            case 4:
                acc(+1, G(m(X, Y), m(Z, T), U));
                acc(-1, G(X, Y, m(m(Z, T), U)));
                acc(+1, m(X, G(Y, m(Z, T), U)));
                acc(-1, G(X, m(Y, m(Z, T)), U));
                acc(+1, m(m(X, G(Y, Z, T)), U));
                acc(-1, m(G(X, m(Y, Z), T), U));
                acc(+1, m(m(G(X, Y, Z), T), U));
                acc(-1, m(G(m(X, Y), Z, T), U));
                break;
            default:
                throw std::invalid_argument("delta3: component must be 1..4");
        }
        return out;
    }

private:
    Vec g3(const Vec& p, const Vec& q, const Vec& r) const {
        std::size_t n = mu0_.dim();
        Vec out(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (is_zero(p[i])) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (is_zero(q[j])) continue;
                Rational f = p[i] * q[j];
                for (std::size_t k = 0; k < n; ++k) {
                    if (is_zero(r[k])) continue;
                    Rational fk = f * r[k];
                    for (std::size_t l = 0; l < n; ++l) {
                        const Rational& gv = g_.at(i, j, k, l);
                        if (!is_zero(gv)) out[l] += fk * gv;
                    }
                }
            }
        }
        return out;
    }

    Algebra mu0_;
    TrilinearMap g_;
    bool base_anti_associative_;
};

inline Delta3Anti delta3_anti(const Algebra& mu0, const TrilinearMap& g) {
    return Delta3Anti(mu0, g);
}

struct CocycleSpace {
    std::vector<BilinearMap> basis;
    std::size_t dimension = 0;
};

/// Kernel of phi -> delta2(mu0, phi, flavor) in the n^3 unknowns phi[i][j][k],
/// ordered lexicographically by (i,j,k). Deterministic across runs.
inline CocycleSpace cocycle_basis(const Algebra& mu0, const CoboundaryFlavor& flavor) {
    std::size_t n = mu0.dim();
    std::size_t unknowns = n * n * n;
    Matrix sys(n * n * n * n, unknowns);
    std::size_t col = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k, ++col) {
                BilinearMap e(n);
                e.at(i, j, k) = 1;
                TrilinearMap d = delta2(mu0, e, flavor);
                std::size_t row = 0;
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b)
                        for (std::size_t c = 0; c < n; ++c)
                            for (std::size_t l = 0; l < n; ++l, ++row)
                                sys(row, col) = d.at(a, b, c, l);
            }
    CocycleSpace out;
    for (const Vec& k : kernel_basis(sys)) {
        BilinearMap phi(n);
        std::size_t idx = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t kk = 0; kk < n; ++kk, ++idx) phi.at(i, j, kk) = k[idx];
        out.basis.push_back(std::move(phi));
    }
    out.dimension = out.basis.size();
    return out;
}

} // namespace nakit
