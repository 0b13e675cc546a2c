#pragma once

#include "nakit/corpus.hpp"
#include "nakit/deformation.hpp"

// Shipped sample deformations. Each was produced offline by exact kernel
// search over the relevant cocycle space plus an exact solve of the order-2
// equation; each verifies through order 2 in its flavor (the test suite and
// the survey command recheck this at runtime).
namespace nakit::samples {

inline Algebra corpus_algebra(const std::string& id,
                              const std::map<std::string, Rational>& params = {}) {
    const CorpusEntry* e = find_corpus_entry(id);
    if (!e) throw std::runtime_error("missing corpus entry " + id);
    return e->instantiate(params);
}

/// Associative flavor over K[x,y]/(x^2,y^2): phi1(x,y) = -phi1(y,x) = xy.
/// phi1 bullet phi1 = 0, so mu_t = mu0 + t phi1 is associative at every order.
inline TruncatedDeformation assoc_on_kxy(std::size_t order = 2) {
    TruncatedDeformation def;
    def.maps.push_back(corpus_algebra("kxy"));
    BilinearMap phi1(4);
    phi1.at(1, 2, 3) = 1;
    phi1.at(2, 1, 3) = -1;
    def.maps.push_back(phi1);
    while (def.maps.size() <= order) def.maps.push_back(BilinearMap(4));
    return def;
}

/// Weakly-associative flavor over the same base: phi1(x,y) = xy (one-sided).
inline TruncatedDeformation wa_on_kxy() {
    TruncatedDeformation def;
    def.maps.push_back(corpus_algebra("kxy"));
    BilinearMap phi1(4);
    phi1.at(1, 2, 3) = 1;
    def.maps.push_back(phi1);
    def.maps.push_back(BilinearMap(4));
    return def;
}

/// Rank-5 flavor (2Id - t12 - t13 - t23 + c) over the same base and phi1.
inline TruncatedDeformation rank5_on_kxy() { return wa_on_kxy(); }

/// Lie-admissible flavor over the commutative p33 base at (0,1):
/// phi1(e1,e1) = e2, a commutative first-order term.
inline TruncatedDeformation lad_on_p33() {
    TruncatedDeformation def;
    def.maps.push_back(corpus_algebra("p33", {{"a", Rational(0)}, {"b", Rational(1)}}));
    BilinearMap phi1(2);
    phi1.at(0, 0, 1) = 1;
    def.maps.push_back(phi1);
    def.maps.push_back(BilinearMap(2));
    return def;
}

/// Strictly twisted (Id+c+c^2)-cocycle over the p33 algebra at (a,b) = (1,1):
/// not a Hochschild cocycle, yet a G5-deformation through order 2 with phi2 = 0.
inline TruncatedDeformation g5_on_p33() {
    TruncatedDeformation def;
    def.maps.push_back(corpus_algebra("p33", {{"a", Rational(1)}, {"b", Rational(1)}}));
    BilinearMap phi1(2);
    phi1.at(0, 0, 0) = -1;
    phi1.at(0, 1, 0) = 1;
    phi1.at(0, 1, 1) = -1;
    phi1.at(1, 0, 0) = -1;
    def.maps.push_back(phi1);
    def.maps.push_back(BilinearMap(2));
    return def;
}

/// (Id - t12)-flavor over K[x]/(x^2): phi1(x,x) = 1, the split deformation.
inline TruncatedDeformation vinberg_on_kx2() {
    TruncatedDeformation def;
    def.maps.push_back(corpus_algebra("kx2"));
    BilinearMap phi1(2);
    phi1.at(1, 1, 0) = 1;
    def.maps.push_back(phi1);
    def.maps.push_back(BilinearMap(2));
    return def;
}

/// Anti-associative flavor over the skew algebra aa3-1: phi1(e1,e1) = e2.
inline TruncatedDeformation anti_on_aa31() {
    TruncatedDeformation def;
    def.maps.push_back(corpus_algebra("aa3-1"));
    BilinearMap phi1(3);
    phi1.at(0, 0, 1) = 1;
    def.maps.push_back(phi1);
    def.maps.push_back(BilinearMap(3));
    return def;
}

/// (Id, Id - t12) left-Leibniz pair over jj2: phi1(e1,e2) = e2, phi2 = 0.
inline TruncatedDeformation left_leibniz_on_jj2() {
    TruncatedDeformation def;
    def.maps.push_back(corpus_algebra("jj2"));
    BilinearMap phi1(2);
    phi1.at(0, 1, 1) = 1;
    def.maps.push_back(phi1);
    def.maps.push_back(BilinearMap(2));
    return def;
}

/// (Id - t23, Id) right-Leibniz pair over jj2:
/// phi1(e1,e1) = -e1, phi1(e1,e2) = e2; phi2(e1,e2) = -e1.
inline TruncatedDeformation right_leibniz_on_jj2() {
    TruncatedDeformation def;
    def.maps.push_back(corpus_algebra("jj2"));
    BilinearMap phi1(2);
    phi1.at(0, 0, 0) = -1;
    phi1.at(0, 1, 1) = 1;
    def.maps.push_back(phi1);
    BilinearMap phi2(2);
    phi2.at(0, 1, 0) = -1;
    def.maps.push_back(phi2);
    return def;
}

/// Symmetric-Leibniz deformation over jj3: phi1(e1,e3) = e2, phi2 = 0, a
/// cocycle for the left and the right pair simultaneously.
inline TruncatedDeformation symmetric_leibniz_on_jj3() {
    TruncatedDeformation def;
    def.maps.push_back(corpus_algebra("jj3"));
    BilinearMap phi1(3);
    phi1.at(0, 2, 1) = 1;
    def.maps.push_back(phi1);
    def.maps.push_back(BilinearMap(3));
    return def;
}

/// Hochschild cocycle on K[x]/(x^3) whose self-bullet is nonzero:
/// phi1(x,x) = 1, phi1(x,x^2) = phi1(x^2,x) = x.
inline TruncatedDeformation kx3_cocycle_order1() {
    TruncatedDeformation def;
    def.maps.push_back(corpus_algebra("kx3"));
    BilinearMap phi1(3);
    phi1.at(1, 1, 0) = 1;
    phi1.at(1, 2, 1) = 1;
    phi1.at(2, 1, 1) = 1;
    def.maps.push_back(phi1);
    def.maps.push_back(BilinearMap(3));
    return def;
}

/// dim-1 geometric deformation: every map equals the base product.
inline TruncatedDeformation geometric_dim1(std::size_t order) {
    TruncatedDeformation def;
    Algebra mu = corpus_algebra("k1");
    for (std::size_t i = 0; i <= order; ++i) def.maps.push_back(mu);
    return def;
}

} // namespace nakit::samples
