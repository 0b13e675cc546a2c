#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nakit/identities.hpp"
#include "nakit/samples.hpp"

namespace nakit {

/// One row of the deformation-vs-polarization summary table: the structure a
/// verified sample deformation induces, and the structure polarization gives,
/// each compared against the expected answer.
struct SurveyRow {
    std::string family;
    std::string deformation_claim;                 // empty when no sample ships
    std::optional<bool> deformation_agrees;
    std::string polarization_claim;
    std::optional<bool> polarization_agrees;
};

namespace detail {

inline bool cyclic_link_zero(const BilinearMap& mu, const BilinearMap& psi) {
    TrilinearMap link = leibniz_like(LeibnizKind::LR, mu, psi);
    return phi_apply(link, parse_vector("g5")).is_zero();
}

inline bool leibniz_defect_identities(const Algebra& a) {
    // polarized Leibniz-algebra identities with Jacobiator defect:
    // [x,y.z] + [x.z,y] - z.[x,y] = J(x,y,z) and the cyclic
    // x.[y,z] + y.[z,x] + z.[x,y] + 3J = 0
    auto [rho, psi] = polarize(a);
    std::size_t n = a.dim();
    TrilinearMap jac = jacobiator(psi);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec x = basis_vec(n, i), y = basis_vec(n, j), z = basis_vec(n, k);
                Vec b1 = psi.apply(x, rho.on_basis(j, k));
                Vec b2 = psi.apply(rho.on_basis(i, k), y);
                Vec b3 = rho.apply(z, psi.on_basis(i, j));
                Vec c1 = rho.apply(x, psi.on_basis(j, k));
                Vec c2 = rho.apply(y, psi.on_basis(k, i));
                Vec c3 = rho.apply(z, psi.on_basis(i, j));
                Vec jv = jac.on_basis(i, j, k);
                for (std::size_t l = 0; l < n; ++l) {
                    if (!is_zero(b1[l] + b2[l] - b3[l] - jv[l])) return false;
                    if (!is_zero(c1[l] + c2[l] + c3[l] + 3 * jv[l])) return false;
                }
            }
    return true;
}

} // namespace detail

inline std::vector<SurveyRow> survey() {
    std::vector<SurveyRow> rows;
    auto vec = [](const char* s) { return parse_vector(s); };
    auto pol = [](const char* id) { return polarize(samples::corpus_algebra(id)); };

    {   // associative deformations quantize Poisson algebras
        SurveyRow r{"associative", "Poisson algebra", {}, "nonassociative Poisson algebra", {}};
        auto def = samples::assoc_on_kxy();
        bool ok = verify(def, BulletFlavor::twisted(vec("id")), 2).all_zero();
        auto fo = first_order(def);
        r.deformation_agrees = ok && poisson_check(def.mu0(), fo.psi1, PoissonKind::Poisson).ok;
        bool pok = true;
        for (const char* id : {"kx2", "kx3", "kxy", "ut2", "kk"}) {
            auto p = pol(id);
            pok = pok && poisson_check(p.rho, p.psi, PoissonKind::NonassocPoisson).ok;
        }
        r.polarization_agrees = pok;
        rows.push_back(r);
    }
    {   // Lie-admissible
        SurveyRow r{"lie-admissible", "Lie-admissible algebra", {}, "Lie algebra", {}};
        auto def = samples::lad_on_p33();
        bool ok = verify(def, BulletFlavor::twisted(v_lad()), 2).all_zero();
        r.deformation_agrees = ok && check_identity(def.maps[1], "lie_admissible");
        bool pok = true;
        for (const char* id : {"vinberg2", "wa2", "g5-2", "sl2", "aff2"}) {
            auto p = pol(id);
            pok = pok && jacobiator(p.psi).is_zero();
        }
        r.polarization_agrees = pok;
        rows.push_back(r);
    }
    {   // (Id+c+c^2)-associative
        SurveyRow r{"(Id+c+c2)-associative", "nonassociative (Id+c+c2)-Poisson algebra", {},
                    "nonassociative (Id+c+c2)-Poisson algebra", {}};
        auto def = samples::g5_on_p33();
        bool ok = verify(def, BulletFlavor::twisted(vec("g5")), 2).all_zero();
        auto fo = first_order(def);
        r.deformation_agrees =
            ok && poisson_check(def.mu0(), fo.psi1, PoissonKind::NonassocVPoisson, vec("g5")).ok;
        auto p = pol("g5-2");
        r.polarization_agrees = jacobiator(p.psi).is_zero() && detail::cyclic_link_zero(p.rho, p.psi);
        rows.push_back(r);
    }
    {   // Vinberg
        SurveyRow r{"vinberg", "Lie-admissible with (Id-t12) right-Leibniz condition", {}, "", {}};
        auto def = samples::vinberg_on_kx2();
        bool ok = verify(def, BulletFlavor::twisted(vec("g2")), 2).all_zero();
        TrilinearMap lr = leibniz_like(LeibnizKind::LR, def.mu0(), def.maps[1]);
        r.deformation_agrees = ok && check_identity(def.maps[1], "lie_admissible") &&
                               phi_apply(lr, vec("g2")).is_zero();
        rows.push_back(r);
    }
    {   // weakly associative
        SurveyRow r{"weakly-associative", "nonassociative Poisson algebra", {},
                    "nonassociative Poisson algebra", {}};
        auto def = samples::wa_on_kxy();
        bool ok = verify(def, BulletFlavor::twisted(vec("wa")), 2).all_zero();
        auto fo = first_order(def);
        r.deformation_agrees =
            ok && poisson_check(def.mu0(), fo.psi1, PoissonKind::NonassocPoisson).ok;
        auto p = pol("wa2");
        r.polarization_agrees = poisson_check(p.rho, p.psi, PoissonKind::NonassocPoisson).ok;
        rows.push_back(r);
    }
    {   // anti-associative
        SurveyRow r{"anti-associative", "anti-Poisson (Jacobi-Jordan) algebra", {},
                    "anti-Poisson (Jacobi-Jordan) algebra", {}};
        auto def = samples::anti_on_aa31();
        bool ok = vw_verify(def, vec("id"), vec("-1,0,0,0,0,0"), 2).all_zero();
        auto fo = first_order(def);
        r.deformation_agrees =
            ok && poisson_check(def.mu0(), fo.rho1, PoissonKind::AntiPoisson).ok;
        bool pok = true;
        for (const char* id : {"aa3-1", "aa3-2", "aa3-3", "aa3-4"}) {
            auto p = pol(id);
            pok = pok && check_identity(p.rho, "jacobi_jordan") &&
                  leibniz_like(LeibnizKind::Lg, p.psi, p.rho,
                               std::make_pair(MapParity::Skew, MapParity::Symmetric))
                      .is_zero();
        }
        r.polarization_agrees = pok;
        rows.push_back(r);
    }
    {   // Leibniz (right)
        SurveyRow r{"leibniz", "pseudo-Poisson algebra", {}, "pseudo-Poisson algebra", {}};
        auto def = samples::right_leibniz_on_jj2();
        bool ok = vw_verify(def, vec("g4"), vec("id"), 2).all_zero();
        auto fo = first_order(def);
        r.deformation_agrees =
            ok && poisson_check(def.mu0(), fo.psi1, PoissonKind::PseudoRight).ok;
        r.polarization_agrees = detail::leibniz_defect_identities(samples::corpus_algebra("leib2"));
        rows.push_back(r);
    }
    {   // symmetric Leibniz
        SurveyRow r{"symmetric-leibniz", "pseudo-Poisson algebra", {},
                    "nonassociative Poisson algebra", {}};
        auto def = samples::symmetric_leibniz_on_jj3();
        bool ok = vw_verify(def, vec("id"), vec("g2"), 2).all_zero() &&
                  vw_verify(def, vec("g4"), vec("id"), 2).all_zero();
        auto fo = first_order(def);
        r.deformation_agrees = ok &&
                               poisson_check(def.mu0(), fo.psi1, PoissonKind::PseudoLeft).ok &&
                               poisson_check(def.mu0(), fo.psi1, PoissonKind::PseudoRight).ok;
        bool pok = true;
        for (const char* id : {"jj2", "sl2", "aff2"}) {
            auto p = pol(id);
            pok = pok && poisson_check(p.rho, p.psi, PoissonKind::NonassocPoisson).ok;
        }
        r.polarization_agrees = pok;
        rows.push_back(r);
    }
    return rows;
}

} // namespace nakit
