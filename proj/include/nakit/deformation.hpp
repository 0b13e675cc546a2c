#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nakit/cohomology.hpp"
#include "nakit/identities.hpp"

namespace nakit {

/// mu_t = phi_0 + t phi_1 + ... + t^N phi_N modulo t^{N+1}; phi_0 is the base
/// multiplication mu_0.
struct TruncatedDeformation {
    std::vector<BilinearMap> maps;  // phi_0 .. phi_N

    std::size_t order() const { return maps.empty() ? 0 : maps.size() - 1; }
    std::size_t dim() const { return maps.empty() ? 0 : maps.front().dim(); }
    const BilinearMap& mu0() const { return maps.front(); }
};

struct BulletFlavor {
    enum class Kind { Plain, V, L, R };
    Kind kind = Kind::Plain;
    GroupAlgebraElement v;  // for V, L, R

    static BulletFlavor plain() { return {}; }
    static BulletFlavor twisted(GroupAlgebraElement vv) {
        return BulletFlavor{Kind::V, std::move(vv)};
    }
    static BulletFlavor left(GroupAlgebraElement vv) { return BulletFlavor{Kind::L, std::move(vv)}; }
    static BulletFlavor right(GroupAlgebraElement ww) { return BulletFlavor{Kind::R, std::move(ww)}; }
};

/// phi bullet chi = phi o (chi (x) Id) - phi o (Id (x) chi), optionally
/// composed with Phi_v; the one-sided L/R variants keep a single term.
inline TrilinearMap bullet(const BilinearMap& phi, const BilinearMap& chi,
                           const BulletFlavor& flavor) {
    std::size_t n = phi.dim();
    if (chi.dim() != n) throw std::invalid_argument("bullet: dimension mismatch");
    TrilinearMap base(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec left = phi.apply(chi.on_basis(i, j), basis_vec(n, k));
                Vec right = phi.apply(basis_vec(n, i), chi.on_basis(j, k));
                Vec out(n);
                switch (flavor.kind) {
                    case BulletFlavor::Kind::Plain:
                    case BulletFlavor::Kind::V:
                        for (std::size_t l = 0; l < n; ++l) out[l] = left[l] - right[l];
                        break;
                    case BulletFlavor::Kind::L: out = left; break;
                    case BulletFlavor::Kind::R: out = right; break;
                }
                base.set_on_basis(i, j, k, out);
            }
    if (flavor.kind == BulletFlavor::Kind::Plain) return base;
    return phi_apply(base, flavor.v);
}

struct OrderResidual {
    std::size_t order = 0;
    bool zero = true;
    std::optional<std::array<std::size_t, 3>> witness;  // first offending basis tuple
    TrilinearMap residual;
};

struct VerifyReport {
    std::vector<OrderResidual> orders;
    bool all_zero() const {
        for (const auto& o : orders)
            if (!o.zero) return false;
        return true;
    }
};

/// Order-by-order residuals sum_{i+j=k} phi_i bullet phi_j for k = 0..through_order.
/// Order 0 is the (twisted) associativity of mu_0; order 1 is delta2 of phi_1.
inline VerifyReport verify(const TruncatedDeformation& def, const BulletFlavor& flavor,
                           std::size_t through_order) {
    if (through_order > def.order())
        throw std::invalid_argument("verify: through_order exceeds deformation order");
    VerifyReport rep;
    for (std::size_t k = 0; k <= through_order; ++k) {
        TrilinearMap sum(def.dim());
        for (std::size_t i = 0; i <= k; ++i)
            sum = sum + bullet(def.maps[i], def.maps[k - i], flavor);
        OrderResidual r;
        r.order = k;
        r.witness = sum.first_nonzero_tuple();
        r.zero = !r.witness.has_value();
        r.residual = std::move(sum);
        rep.orders.push_back(std::move(r));
    }
    return rep;
}

/// (v,w)-deformation residuals for the three printed orders 0..2:
///   0: A^L o Phi_v - A^R o Phi_w of mu_0
///   1: delta^{2,L}_v phi_1 - delta^{2,R}_w phi_1
///   2: phi_1 .L_v phi_1 - phi_1 .R_w phi_1 + delta^{2,L}_v phi_2 - delta^{2,R}_w phi_2
inline VerifyReport vw_verify(const TruncatedDeformation& def, const GroupAlgebraElement& v,
                              const GroupAlgebraElement& w, std::size_t through_order) {
    if (through_order > 2)
        throw std::invalid_argument("vw_verify: orders above 2 are not defined");
    if (through_order > def.order())
        throw std::invalid_argument("vw_verify: through_order exceeds deformation order");
    VerifyReport rep;
    CoboundaryFlavor lr = CoboundaryFlavor::lr(v, w);
    for (std::size_t k = 0; k <= through_order; ++k) {
        TrilinearMap sum(def.dim());
        if (k == 0) {
            sum = phi_apply(associator(def.mu0(), AssociatorKind::Left), v) -
                  phi_apply(associator(def.mu0(), AssociatorKind::Right), w);
        } else if (k == 1) {
            sum = delta2(def.mu0(), def.maps[1], lr);
        } else {
            sum = bullet(def.maps[1], def.maps[1], BulletFlavor::left(v)) -
                  bullet(def.maps[1], def.maps[1], BulletFlavor::right(w)) +
                  delta2(def.mu0(), def.maps[2], lr);
        }
        OrderResidual r;
        r.order = k;
        r.witness = sum.first_nonzero_tuple();
        r.zero = !r.witness.has_value();
        r.residual = std::move(sum);
        rep.orders.push_back(std::move(r));
    }
    return rep;
}

struct FirstOrderParts {
    BilinearMap psi1;  // phi_1 - phi_1^T (factor-free, unlike polarize)
    BilinearMap rho1;  // phi_1 + phi_1^T
};

inline FirstOrderParts first_order(const TruncatedDeformation& def) {
    if (def.order() < 1) throw std::invalid_argument("first_order: deformation has no phi_1");
    const BilinearMap& phi1 = def.maps[1];
    BilinearMap t = phi1.transpose();
    return FirstOrderParts{phi1 - t, phi1 + t};
}

enum class PoissonKind {
    Poisson,
    NonassocPoisson,
    VPoisson,
    NonassocVPoisson,
    AntiPoisson,
    PseudoLeft,
    PseudoRight,
};

struct PoissonReport {
    bool ok = true;
    std::vector<std::pair<std::string, bool>> axioms;

    void add(std::string name, bool value) {
        ok = ok && value;
        axioms.emplace_back(std::move(name), value);
    }
};

namespace detail {

// x beta(y,z) - beta(y, xz) - beta(xy, z)   (left pseudo-Leibniz defect)
inline bool pseudo_left_holds(const BilinearMap& mu, const BilinearMap& beta) {
    std::size_t n = mu.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec t1 = mu.apply(basis_vec(n, i), beta.on_basis(j, k));
                Vec t2 = beta.apply(basis_vec(n, j), mu.on_basis(i, k));
                Vec t3 = beta.apply(mu.on_basis(i, j), basis_vec(n, k));
                for (std::size_t l = 0; l < n; ++l)
                    if (!is_zero(t1[l] - t2[l] - t3[l])) return false;
            }
    return true;
}

// z beta(x,y) - beta(x, yz) + beta(y, xz)   (right pseudo-Leibniz defect)
inline bool pseudo_right_holds(const BilinearMap& mu, const BilinearMap& beta) {
    std::size_t n = mu.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec t1 = mu.apply(basis_vec(n, k), beta.on_basis(i, j));
                Vec t2 = beta.apply(basis_vec(n, i), mu.on_basis(j, k));
                Vec t3 = beta.apply(basis_vec(n, j), mu.on_basis(i, k));
                for (std::size_t l = 0; l < n; ++l)
                    if (!is_zero(t1[l] - t2[l] + t3[l])) return false;
            }
    return true;
}

} // namespace detail

/// Axiom-bundle checker for the Poisson-type pairs. beta must be skew for the
/// Poisson family and symmetric for the anti-Poisson kind; the Leibniz link is
/// the operator matching the kind (twisted, graded or pseudo).
inline PoissonReport poisson_check(const BilinearMap& mu, const BilinearMap& beta, PoissonKind kind,
                                   const GroupAlgebraElement& v = {}) {
    if (mu.dim() != beta.dim()) throw std::invalid_argument("poisson_check: dimension mismatch");
    bool needs_sym = kind == PoissonKind::AntiPoisson;
    if (needs_sym && !beta.is_symmetric())
        throw std::invalid_argument("poisson_check: beta must be symmetric for anti_poisson");
    if (!needs_sym && !beta.is_skew())
        throw std::invalid_argument("poisson_check: beta must be skew-symmetric");
    PoissonReport rep;
    switch (kind) {
        case PoissonKind::Poisson:
        case PoissonKind::NonassocPoisson:
        case PoissonKind::VPoisson:
        case PoissonKind::NonassocVPoisson: {
            rep.add("mu commutative", mu.is_symmetric());
            if (kind == PoissonKind::Poisson || kind == PoissonKind::VPoisson)
                rep.add("mu associative", associator(mu, AssociatorKind::Full).is_zero());
            rep.add("beta Lie bracket", jacobiator(beta).is_zero());
            TrilinearMap link = leibniz_like(LeibnizKind::LR, mu, beta);
            bool twisted = kind == PoissonKind::VPoisson || kind == PoissonKind::NonassocVPoisson;
            if (twisted) {
                if (v.is_zero()) throw std::invalid_argument("poisson_check: v-kind needs v != 0");
                link = phi_apply(link, v);
            }
            rep.add(twisted ? "v-Leibniz link" : "Leibniz link", link.is_zero());
            break;
        }
        case PoissonKind::AntiPoisson: {
            rep.add("mu skew-symmetric", mu.is_skew());
            rep.add("beta Jacobi-Jordan", beta.is_symmetric() && jacobi_jordan_cyclic_zero(beta));
            rep.add("graded Leibniz link",
                    leibniz_like(LeibnizKind::Lg, mu, beta,
                                 std::make_pair(MapParity::Skew, MapParity::Symmetric))
                        .is_zero());
            break;
        }
        case PoissonKind::PseudoLeft: {
            rep.add("mu commutative", mu.is_symmetric());
            rep.add("mu left Leibniz", check_identity(mu, "left_leibniz"));
            rep.add("pseudo-Leibniz link", detail::pseudo_left_holds(mu, beta));
            break;
        }
        case PoissonKind::PseudoRight: {
            rep.add("mu commutative", mu.is_symmetric());
            rep.add("mu right Leibniz", check_identity(mu, "right_leibniz"));
            rep.add("pseudo-Leibniz link", detail::pseudo_right_holds(mu, beta));
            break;
        }
    }
    return rep;
}

} // namespace nakit
